use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Simply-laced Dynkin diagram families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DiagramType {
    A,
    D,
    E,
}

impl FromStr for DiagramType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(DiagramType::A),
            "D" | "d" => Ok(DiagramType::D),
            "E" | "e" => Ok(DiagramType::E),
            other => Err(Error::validation(format!(
                "unknown diagram type {other:?}; expected one of A, D, E"
            ))),
        }
    }
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DiagramType::A => "A",
            DiagramType::D => "D",
            DiagramType::E => "E",
        };
        f.write_str(s)
    }
}

/// Whether the engine accepts this `(type, rank)` pair.
///
/// `A_1` through `A_5` and `D_4`; everything else is refused so that
/// `|W|²` scans stay small.
pub fn is_supported(diagram: DiagramType, rank: usize) -> bool {
    match diagram {
        DiagramType::A => (1..=5).contains(&rank),
        DiagramType::D => rank == 4,
        DiagramType::E => false,
    }
}

/// Edges of the Dynkin diagram with Bourbaki labelling, 1-based.
fn edges(diagram: DiagramType, rank: usize) -> Result<Vec<(usize, usize)>> {
    let edges = match diagram {
        DiagramType::A if rank >= 1 => (1..rank).map(|i| (i, i + 1)).collect(),
        DiagramType::D if rank >= 4 => {
            let mut e: Vec<_> = (1..rank - 1).map(|i| (i, i + 1)).collect();
            e.push((rank - 2, rank));
            e
        }
        DiagramType::E if (6..=8).contains(&rank) => {
            // 1-3-4-5-...-rank with 2 attached to 4.
            let mut e = vec![(1, 3), (2, 4)];
            e.extend((3..rank).map(|i| (i, i + 1)));
            e
        }
        _ => {
            return Err(Error::validation(format!(
                "{diagram}_{rank} is not a valid simply-laced diagram"
            )))
        }
    };
    Ok(edges)
}

/// Cartan matrix: 2 on the diagonal, -1 on edges, 0 elsewhere.
pub fn cartan_matrix(diagram: DiagramType, rank: usize) -> Result<Vec<Vec<i32>>> {
    let mut c = vec![vec![0; rank]; rank];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in edges(diagram, rank)? {
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
    }
    Ok(c)
}

/// Order of the Weyl group from the closed-form product formula.
pub fn group_order_formula(diagram: DiagramType, rank: usize) -> u64 {
    let factorial = |k: u64| (1..=k).product::<u64>();
    match diagram {
        DiagramType::A => factorial(rank as u64 + 1),
        DiagramType::D => (1u64 << (rank - 1)) * factorial(rank as u64),
        DiagramType::E => match rank {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
    }
}

/// Number of positive roots, i.e. the length of the longest element.
pub fn positive_root_count(diagram: DiagramType, rank: usize) -> usize {
    match diagram {
        DiagramType::A => rank * (rank + 1) / 2,
        DiagramType::D => rank * (rank - 1),
        DiagramType::E => match rank {
            6 => 36,
            7 => 63,
            _ => 120,
        },
    }
}

/// Matrix of the simple reflection `s_i` acting on simple-root coordinates,
/// row-major, `i` 1-based.
pub(crate) fn simple_reflection(cartan: &[Vec<i32>], i: usize) -> Vec<i32> {
    let n = cartan.len();
    let mut m = vec![0; n * n];
    for r in 0..n {
        m[r * n + r] = 1;
    }
    for j in 0..n {
        m[(i - 1) * n + j] -= cartan[i - 1][j];
    }
    m
}

pub(crate) fn apply(matrix: &[i32], v: &[i32]) -> Vec<i32> {
    let n = v.len();
    (0..n)
        .map(|r| (0..n).map(|c| matrix[r * n + c] * v[c]).sum())
        .collect()
}

/// All positive roots in simple-root coordinates, ordered by height then
/// lexicographically.
pub fn positive_roots(cartan: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let n = cartan.len();
    let reflections: Vec<_> = (1..=n).map(|i| simple_reflection(cartan, i)).collect();
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(root) = queue.pop_front() {
        for s in &reflections {
            let image = apply(s, &root);
            if image.iter().all(|&c| c >= 0) && seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    let mut roots: Vec<_> = seen.into_iter().collect();
    roots.sort_by_key(|r| (r.iter().sum::<i32>(), r.clone()));
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_is_simply_laced() {
        for (t, r) in [(DiagramType::A, 4), (DiagramType::D, 4), (DiagramType::E, 6)] {
            let c = cartan_matrix(t, r).unwrap();
            for i in 0..r {
                assert_eq!(c[i][i], 2);
                for j in 0..r {
                    assert_eq!(c[i][j], c[j][i]);
                    if i != j {
                        assert!(c[i][j] == 0 || c[i][j] == -1);
                    }
                }
            }
        }
    }

    #[test]
    fn root_counts_match_formula() {
        for (t, r) in [
            (DiagramType::A, 1),
            (DiagramType::A, 3),
            (DiagramType::A, 5),
            (DiagramType::D, 4),
            (DiagramType::D, 5),
            (DiagramType::E, 6),
        ] {
            let c = cartan_matrix(t, r).unwrap();
            assert_eq!(positive_roots(&c).len(), positive_root_count(t, r), "{t}_{r}");
        }
    }

    #[test]
    fn d4_is_branched_at_node_two() {
        let c = cartan_matrix(DiagramType::D, 4).unwrap();
        assert_eq!(c[1].iter().filter(|&&x| x == -1).count(), 3);
    }

    #[test]
    fn bad_diagrams_rejected() {
        assert!(cartan_matrix(DiagramType::D, 3).is_err());
        assert!(cartan_matrix(DiagramType::E, 5).is_err());
        assert!("B".parse::<DiagramType>().is_err());
    }
}
