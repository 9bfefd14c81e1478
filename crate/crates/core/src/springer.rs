//! Cell atlases of totally nonnegative Springer fibres.
//!
//! A unipotent piece is labelled by a pair `(z, z')` of Weyl group elements
//! with disjoint supports; `z` is the lower-triangular (`y`) part and `z'`
//! the upper-triangular (`x`) part. The cells of its fibre are the labels
//! `(v, w)` in `Z_{J,J'}` with `J = supp z`, `J' = supp z'`.
//!
//! The `{1}`-valued group `W × W` acts on labels by `(r, s)·(v, w) =
//! (r ∘ v, s * w)`: the `x`-side element `r` acts on `v` and the `y`-side
//! element `s` acts on `w`. A piece `(z, z')` therefore acts as
//! `(r, s) = (z', z)`.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;

use crate::coxeter::{IndexSet, WeylElement, WeylGroup};
use crate::error::{Error, Result};

/// Upper bound on `|W|² · |cells|` for the brute-force stabilizer scan.
pub const STABILIZER_BUDGET: usize = 50_000_000;

/// A unipotent piece `(z, z')` with disjoint supports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PieceLabel {
    pub z: WeylElement,
    pub z_prime: WeylElement,
}

impl PieceLabel {
    pub fn new(group: &WeylGroup, z: WeylElement, z_prime: WeylElement) -> Result<Self> {
        let (j, jp) = (group.support(z), group.support(z_prime));
        if !j.is_disjoint(jp) {
            return Err(Error::validation(format!(
                "supports {j} and {jp} of the piece intersect"
            )));
        }
        Ok(PieceLabel { z, z_prime })
    }

    /// `(J, J') = (supp z, supp z')`.
    pub fn supports(&self, group: &WeylGroup) -> (IndexSet, IndexSet) {
        (group.support(self.z), group.support(self.z_prime))
    }

    pub fn dim(&self, group: &WeylGroup) -> usize {
        group.length(self.z) + group.length(self.z_prime)
    }

    /// The action pair `(r, s)` of this piece at the semifield `{1}`.
    pub fn action_pair(&self) -> (WeylElement, WeylElement) {
        (self.z_prime, self.z)
    }
}

/// Builds a piece from two reduced words.
pub fn piece_of(group: &WeylGroup, z_word: &[usize], z_prime_word: &[usize]) -> Result<PieceLabel> {
    let z = group.element_reduced(z_word)?;
    let z_prime = group.element_reduced(z_prime_word)?;
    PieceLabel::new(group, z, z_prime)
}

/// A cell `(v, w)` of the totally nonnegative flag manifold, `v <= w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellLabel {
    pub v: WeylElement,
    pub w: WeylElement,
    pub dim: usize,
}

impl CellLabel {
    pub fn new(group: &WeylGroup, v: WeylElement, w: WeylElement) -> Result<Self> {
        if !group.bruhat_leq(v, w) {
            return Err(Error::validation(format!(
                "label ({:?}, {:?}) does not satisfy v <= w",
                group.word(v),
                group.word(w)
            )));
        }
        Ok(Self::unchecked(group, v, w))
    }

    pub(crate) fn unchecked(group: &WeylGroup, v: WeylElement, w: WeylElement) -> Self {
        CellLabel {
            v,
            w,
            dim: group.length(w) - group.length(v),
        }
    }

    pub fn from_words(group: &WeylGroup, v: &[usize], w: &[usize]) -> Result<Self> {
        Self::new(group, group.element(v)?, group.element(w)?)
    }

    /// Sort key used by every serialized listing: dimension, then the
    /// canonical words of `v` and `w`.
    pub fn sort_key<'g>(&self, group: &'g WeylGroup) -> (usize, &'g [usize], &'g [usize]) {
        (self.dim, group.word(self.v), group.word(self.w))
    }
}

/// Sorts labels by `(dim, v-word, w-word)`.
pub fn sort_cells(group: &WeylGroup, cells: &mut [CellLabel]) {
    cells.sort_by(|a, b| a.sort_key(group).cmp(&b.sort_key(group)));
}

/// Cells of one piece with a dimension histogram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellAtlas {
    pub piece: PieceLabel,
    pub cells: Vec<CellLabel>,
    pub dim_histogram: BTreeMap<usize, usize>,
}

impl CellAtlas {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn max_dim(&self) -> Option<usize> {
        self.dim_histogram.keys().next_back().copied()
    }

    pub fn contains(&self, v: WeylElement, w: WeylElement) -> bool {
        self.cells.iter().any(|c| c.v == v && c.w == w)
    }

    /// Zero-dimensional cells.
    pub fn points(&self) -> impl Iterator<Item = &CellLabel> {
        self.cells.iter().filter(|c| c.dim == 0)
    }
}

pub fn histogram(cells: &[CellLabel]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for c in cells {
        *h.entry(c.dim).or_insert(0) += 1;
    }
    h
}

/// `{i ∈ I : s_i w <= w, v ≰ s_i w}`.
pub fn y_side_set(group: &WeylGroup, v: WeylElement, w: WeylElement) -> IndexSet {
    (1..=group.rank())
        .filter(|&i| {
            let sw = group.left_mul(i, w);
            group.bruhat_leq(sw, w) && !group.bruhat_leq(v, sw)
        })
        .collect()
}

/// `{j ∈ I : v <= s_j v, s_j v ≰ w}`.
pub fn x_side_set(group: &WeylGroup, v: WeylElement, w: WeylElement) -> IndexSet {
    (1..=group.rank())
        .filter(|&j| {
            let sv = group.left_mul(j, v);
            group.bruhat_leq(v, sv) && !group.bruhat_leq(sv, w)
        })
        .collect()
}

/// Whether `(v, w)` lies in `Z_{J,J'}`.
pub fn in_z(group: &WeylGroup, v: WeylElement, w: WeylElement, j: IndexSet, jp: IndexSet) -> bool {
    group.bruhat_leq(v, w)
        && j.is_subset(y_side_set(group, v, w))
        && jp.is_subset(x_side_set(group, v, w))
}

fn check_index_sets(group: &WeylGroup, j: IndexSet, jp: IndexSet) -> Result<()> {
    let all = group.generators();
    if !j.is_subset(all) || !jp.is_subset(all) {
        return Err(Error::validation(format!(
            "index sets {j}, {jp} are not inside {all}"
        )));
    }
    if !j.is_disjoint(jp) {
        return Err(Error::validation(format!("index sets {j} and {jp} intersect")));
    }
    Ok(())
}

/// Every label of `Z_{J,J'}`, in `(dim, v-word, w-word)` order.
pub fn enumerate_z(group: &WeylGroup, j: IndexSet, jp: IndexSet) -> Result<Vec<CellLabel>> {
    check_index_sets(group, j, jp)?;
    let mut cells: Vec<CellLabel> = group
        .bruhat_pairs()
        .filter(|&(v, w)| {
            j.is_subset(y_side_set(group, v, w)) && jp.is_subset(x_side_set(group, v, w))
        })
        .map(|(v, w)| CellLabel::unchecked(group, v, w))
        .collect();
    sort_cells(group, &mut cells);
    Ok(cells)
}

/// The zero-dimensional labels predicted by descents:
/// `{(w, w) : J ⊆ leftdesc(w) ⊆ I ∖ J'}`.
pub fn predicted_points(group: &WeylGroup, j: IndexSet, jp: IndexSet) -> Vec<WeylElement> {
    let allowed = group.generators().difference(jp);
    group
        .elements()
        .filter(|&w| {
            let d = group.left_descents(w);
            j.is_subset(d) && d.is_subset(allowed)
        })
        .collect()
}

/// The cell atlas of a piece, with its zero-dimensional cells checked
/// against the descent description and the `(w_J, w_J)` witness.
pub fn springer_atlas(group: &WeylGroup, piece: PieceLabel) -> Result<CellAtlas> {
    let (j, jp) = piece.supports(group);
    let cells = enumerate_z(group, j, jp)?;
    let points: Vec<WeylElement> = cells.iter().filter(|c| c.dim == 0).map(|c| c.w).collect();
    let mut predicted = predicted_points(group, j, jp);
    predicted.sort_by(|a, b| group.word(*a).cmp(group.word(*b)));
    let mut found = points.clone();
    found.sort_by(|a, b| group.word(*a).cmp(group.word(*b)));
    if found != predicted {
        return Err(Error::Consistency(format!(
            "zero-dimensional cells of Z_{{{j},{jp}}} disagree with the descent description"
        )));
    }
    let wj = group.longest_element(j);
    if !points.contains(&wj) {
        return Err(Error::Consistency(format!(
            "(w_J, w_J) missing from the atlas of Z_{{{j},{jp}}}"
        )));
    }
    let dim_histogram = histogram(&cells);
    Ok(CellAtlas {
        piece,
        cells,
        dim_histogram,
    })
}

/// The index sets `H`, `H'` attached to a label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct XiData {
    #[serde(skip)]
    pub v: WeylElement,
    #[serde(skip)]
    pub w: WeylElement,
    #[serde(rename = "H")]
    pub h: IndexSet,
    #[serde(rename = "H_prime")]
    pub h_prime: IndexSet,
    pub dim: usize,
}

impl XiData {
    /// Whether `(z, z')` belongs to `Ξ_{v,w}`.
    pub fn contains(&self, group: &WeylGroup, z: WeylElement, z_prime: WeylElement) -> bool {
        group.support(z).is_subset(self.h) && group.support(z_prime).is_subset(self.h_prime)
    }

    /// Every member of `Ξ_{v,w}`.
    pub fn members(&self, group: &WeylGroup) -> Vec<PieceLabel> {
        let zs = group.parabolic_subgroup(self.h);
        let zps = group.parabolic_subgroup(self.h_prime);
        zs.iter()
            .flat_map(|&z| zps.iter().map(move |&z_prime| PieceLabel { z, z_prime }))
            .collect()
    }
}

pub fn xi_sets(group: &WeylGroup, v: WeylElement, w: WeylElement) -> Result<XiData> {
    CellLabel::new(group, v, w)?;
    let h = y_side_set(group, v, w);
    let h_prime = x_side_set(group, v, w);
    if !h.is_disjoint(h_prime) {
        return Err(Error::Consistency(format!(
            "H = {h} and H' = {h_prime} intersect"
        )));
    }
    let dim = group.length(group.longest_element(h)) + group.length(group.longest_element(h_prime));
    Ok(XiData {
        v,
        w,
        h,
        h_prime,
        dim,
    })
}

/// `(r, s)·(v, w) = (r ∘ v, s * w)` using canonical words.
pub fn act_cell(group: &WeylGroup, r: WeylElement, s: WeylElement, cell: CellLabel) -> CellLabel {
    CellLabel::unchecked(group, group.circ(r, cell.v), group.star(s, cell.w))
}

/// [`act_cell`] with explicit (not necessarily canonical) words for `r`
/// and `s`.
pub fn act_cell_words(
    group: &WeylGroup,
    r_word: &[usize],
    s_word: &[usize],
    cell: CellLabel,
) -> Result<CellLabel> {
    group.element(r_word)?;
    group.element(s_word)?;
    Ok(CellLabel::unchecked(
        group,
        group.circ_word(r_word, cell.v),
        group.star_word(s_word, cell.w),
    ))
}

/// All `(r, s) ∈ W × W` whose action maps the atlas of `piece` into itself.
pub fn stabilizer_pairs(
    group: &WeylGroup,
    piece: PieceLabel,
) -> Result<Vec<(WeylElement, WeylElement)>> {
    let (j, jp) = piece.supports(group);
    let cells = enumerate_z(group, j, jp)?;
    let n = group.order();
    let cost = n.saturating_mul(n).saturating_mul(cells.len());
    if cost > STABILIZER_BUDGET {
        return Err(Error::Resource(format!(
            "stabilizer scan needs {cost} checks, budget is {STABILIZER_BUDGET}"
        )));
    }
    let members: HashSet<(WeylElement, WeylElement)> = cells.iter().map(|c| (c.v, c.w)).collect();
    let elements: Vec<WeylElement> = group.elements().collect();
    let circ_images: Vec<Vec<WeylElement>> = elements
        .iter()
        .map(|&r| cells.iter().map(|c| group.circ(r, c.v)).collect())
        .collect();
    let star_images: Vec<Vec<WeylElement>> = elements
        .iter()
        .map(|&s| cells.iter().map(|c| group.star(s, c.w)).collect())
        .collect();
    let mut out = Vec::new();
    for (ri, &r) in elements.iter().enumerate() {
        for (si, &s) in elements.iter().enumerate() {
            let keeps = (0..cells.len())
                .all(|k| members.contains(&(circ_images[ri][k], star_images[si][k])));
            if keeps {
                out.push((r, s));
            }
        }
    }
    Ok(out)
}

/// A cell `(z, z', v, w)` of the enlarged space of pairs (unipotent piece,
/// Borel subgroup).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TildeCell {
    pub piece: PieceLabel,
    pub cell: CellLabel,
    pub dim: usize,
}

/// Every pair of disjoint-support elements `(z, z')`.
pub fn disjoint_pieces(group: &WeylGroup) -> Vec<PieceLabel> {
    let elements: Vec<WeylElement> = group.elements().collect();
    let mut out = Vec::new();
    for &z in &elements {
        let j = group.support(z);
        for &z_prime in &elements {
            if j.is_disjoint(group.support(z_prime)) {
                out.push(PieceLabel { z, z_prime });
            }
        }
    }
    out
}

pub fn enumerate_tilde_cells(group: &WeylGroup) -> Result<Vec<TildeCell>> {
    let mut by_support: HashMap<(IndexSet, IndexSet), Vec<CellLabel>> = HashMap::new();
    let mut out = Vec::new();
    for piece in disjoint_pieces(group) {
        let key = piece.supports(group);
        if let std::collections::hash_map::Entry::Vacant(e) = by_support.entry(key) {
            e.insert(enumerate_z(group, key.0, key.1)?);
        }
        let piece_dim = piece.dim(group);
        for &cell in &by_support[&key] {
            debug_assert!(in_z(group, cell.v, cell.w, key.0, key.1));
            out.push(TildeCell {
                piece,
                cell,
                dim: piece_dim + cell.dim,
            });
        }
    }
    Ok(out)
}

/// Outcome of letting a `{1}`-point act on a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellActionClass {
    /// The cell is moved to a different cell.
    Moved,
    /// The cell is stable but contains no fixed point of the piece.
    FixedNoFixedPoints,
    /// The cell is stable and lies in the fibre of the piece.
    FixedWithFixedPoints,
    /// The cell is stable and no piece was supplied to decide further.
    FixedUndetermined,
}

pub fn classify_cell_action(
    group: &WeylGroup,
    r: WeylElement,
    s: WeylElement,
    cell: CellLabel,
    piece: Option<PieceLabel>,
) -> CellActionClass {
    if act_cell(group, r, s, cell) != cell {
        return CellActionClass::Moved;
    }
    match piece {
        None => CellActionClass::FixedUndetermined,
        Some(p) => {
            let (j, jp) = p.supports(group);
            if in_z(group, cell.v, cell.w, j, jp) {
                CellActionClass::FixedWithFixedPoints
            } else {
                CellActionClass::FixedNoFixedPoints
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;

    fn grp(t: &str, r: usize) -> WeylGroup {
        WeylGroup::build(t, r).unwrap()
    }

    fn set(g: &WeylGroup, idx: &[usize]) -> IndexSet {
        g.index_set(idx).unwrap()
    }

    fn label(g: &WeylGroup, v: &[usize], w: &[usize]) -> CellLabel {
        CellLabel::from_words(g, v, w).unwrap()
    }

    #[test]
    fn piece_validation() {
        let g = grp("A", 3);
        assert!(piece_of(&g, &[1], &[]).is_ok());
        assert!(piece_of(&g, &[1], &[1]).is_err());
        assert!(piece_of(&g, &[1, 3], &[2]).is_ok());
        assert!(piece_of(&g, &[1, 1], &[]).is_err());
    }

    #[test]
    fn z_small_cases() {
        let g = grp("A", 1);
        let z = enumerate_z(&g, set(&g, &[1]), IndexSet::EMPTY).unwrap();
        assert_eq!(z, vec![label(&g, &[1], &[1])]);

        let g = grp("A", 2);
        let z = enumerate_z(&g, set(&g, &[1]), IndexSet::EMPTY).unwrap();
        let mut expected = vec![
            label(&g, &[1], &[1]),
            label(&g, &[1, 2], &[1, 2]),
            label(&g, &[1, 2, 1], &[1, 2, 1]),
            label(&g, &[1], &[1, 2]),
            label(&g, &[1, 2], &[1, 2, 1]),
        ];
        sort_cells(&g, &mut expected);
        assert_eq!(z, expected);
        assert!(enumerate_z(&g, set(&g, &[1]), set(&g, &[1])).is_err());
    }

    #[test]
    fn z_agrees_with_predicate() {
        let g = grp("A", 3);
        for j in g.generators().subsets() {
            for jp in g.generators().difference(j).subsets() {
                let z: HashSet<_> = enumerate_z(&g, j, jp)
                    .unwrap()
                    .into_iter()
                    .map(|c| (c.v, c.w))
                    .collect();
                for (v, w) in g.bruhat_pairs() {
                    assert_eq!(z.contains(&(v, w)), in_z(&g, v, w, j, jp));
                }
            }
        }
    }

    #[test]
    fn a3_atlases() {
        let g = grp("A", 3);
        let atlas = springer_atlas(&g, piece_of(&g, &[1, 2, 1], &[]).unwrap()).unwrap();
        assert_eq!(atlas.dim_histogram, BTreeMap::from([(0, 4), (1, 3)]));
        let atlas = springer_atlas(&g, piece_of(&g, &[1, 3], &[]).unwrap()).unwrap();
        assert_eq!(atlas.dim_histogram, BTreeMap::from([(0, 6), (1, 6), (2, 1)]));
        let atlas = springer_atlas(&g, piece_of(&g, &[1, 3], &[2]).unwrap()).unwrap();
        assert_eq!(atlas.dim_histogram, BTreeMap::from([(0, 5), (1, 5), (2, 1)]));
        let atlas = springer_atlas(&g, piece_of(&g, &[], &[]).unwrap()).unwrap();
        assert_eq!(atlas.len(), g.bruhat_pairs().count());
    }

    #[test]
    fn atlases_nonempty_everywhere() {
        for (t, r) in [("A", 1), ("A", 2), ("A", 3), ("D", 4)] {
            let g = grp(t, r);
            for j in g.generators().subsets() {
                for jp in g.generators().difference(j).subsets() {
                    let piece = PieceLabel::new(
                        &g,
                        g.longest_element(j),
                        g.longest_element(jp),
                    )
                    .unwrap();
                    let atlas = springer_atlas(&g, piece).unwrap();
                    assert!(!atlas.is_empty());
                }
            }
        }
    }

    #[test]
    fn duality_in_a3() {
        let g = grp("A", 3);
        for j in g.generators().subsets() {
            for jp in g.generators().difference(j).subsets() {
                for (v, w) in g.bruhat_pairs() {
                    let (v2, w2) = g.w0_dual(v, w).unwrap();
                    assert_eq!(in_z(&g, v, w, j, jp), in_z(&g, v2, w2, jp, j));
                }
            }
        }
    }

    #[test]
    fn xi_examples() {
        let g = grp("A", 2);
        let xi = xi_sets(&g, g.identity(), g.longest()).unwrap();
        assert!(xi.h.is_empty() && xi.h_prime.is_empty());
        assert_eq!(xi.dim, 0);
        assert_eq!(
            xi.members(&g),
            vec![PieceLabel {
                z: g.identity(),
                z_prime: g.identity()
            }]
        );
        let s1 = g.generator(1).unwrap();
        let xi = xi_sets(&g, s1, s1).unwrap();
        assert_eq!((xi.h.to_vec(), xi.h_prime.to_vec(), xi.dim), (vec![1], vec![2], 2));
        let w0 = g.longest();
        let xi = xi_sets(&g, w0, w0).unwrap();
        assert_eq!((xi.h, xi.dim), (g.generators(), 3));
        assert!(xi_sets(&g, w0, s1).is_err());
    }

    #[test]
    fn xi_dimension_bound() {
        let g = grp("A", 3);
        for (v, w) in g.bruhat_pairs() {
            let xi = xi_sets(&g, v, w).unwrap();
            let top = (g.longest_element(xi.h), g.longest_element(xi.h_prime));
            for p in xi.members(&g) {
                assert!(xi.contains(&g, p.z, p.z_prime));
                let d = p.dim(&g);
                assert!(d <= xi.dim);
                assert_eq!(d == xi.dim, (p.z, p.z_prime) == top);
                // Every member's atlas contains (v, w).
                let (j, jp) = p.supports(&g);
                assert!(in_z(&g, v, w, j, jp));
            }
        }
    }

    #[test]
    fn act_cell_examples() {
        let g = grp("A", 1);
        let e = g.identity();
        let s = g.generator(1).unwrap();
        let c = label(&g, &[], &[]);
        assert_eq!(act_cell(&g, e, e, c), c);
        assert_eq!(act_cell(&g, e, s, c), label(&g, &[], &[1]));

        let g = grp("A", 2);
        let c = label(&g, &[1, 2], &[1, 2, 1]);
        let a = act_cell_words(&g, &[1, 2, 1], &[], c).unwrap();
        let b = act_cell_words(&g, &[2, 1, 2], &[], c).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn act_cell_word_independence() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (t, r) in [("A", 3), ("D", 4)] {
            let g = grp(t, r);
            let pairs: Vec<_> = g.bruhat_pairs().collect();
            for _ in 0..200 {
                let (v, w) = pairs[rng.gen_range(0..pairs.len())];
                let c = CellLabel::unchecked(&g, v, w);
                let r_el = g.random_element(&mut rng);
                let s_el = g.random_element(&mut rng);
                let rw = g.random_reduced_word(r_el, &mut rng);
                let sw = g.random_reduced_word(s_el, &mut rng);
                let got = act_cell_words(&g, &rw, &sw, c).unwrap();
                assert_eq!(got, act_cell(&g, r_el, s_el, c));
                assert!(g.bruhat_leq(got.v, got.w));
            }
        }
    }

    #[test]
    fn stabilizers() {
        let g = grp("A", 1);
        let e = g.identity();
        let s = g.generator(1).unwrap();
        let st = stabilizer_pairs(&g, piece_of(&g, &[1], &[]).unwrap()).unwrap();
        assert_eq!(st, vec![(e, e), (e, s)]);
        let st = stabilizer_pairs(&g, piece_of(&g, &[], &[]).unwrap()).unwrap();
        assert_eq!(st.len(), 4);

        let g = grp("A", 2);
        for piece in disjoint_pieces(&g) {
            let (j, jp) = piece.supports(&g);
            let cells = enumerate_z(&g, j, jp).unwrap();
            let st = stabilizer_pairs(&g, piece).unwrap();
            // The piece's own point stabilizes its fibre.
            let (r, s) = piece.action_pair();
            assert!(st.contains(&(r, s)));
            for &(r1, s1) in &st {
                for &(r2, s2) in &st {
                    for &c in &cells {
                        let out = act_cell(&g, r1, s1, act_cell(&g, r2, s2, c));
                        assert!(in_z(&g, out.v, out.w, j, jp));
                    }
                }
            }
        }
    }

    #[test]
    fn stabilizer_budget() {
        let g = grp("A", 5);
        let piece = piece_of(&g, &[], &[]).unwrap();
        assert!(matches!(stabilizer_pairs(&g, piece), Err(Error::Resource(_))));
    }

    #[test]
    fn tilde_cells() {
        let g = grp("A", 1);
        let cells = enumerate_tilde_cells(&g).unwrap();
        let mut dims: Vec<usize> = cells.iter().map(|c| c.dim).collect();
        dims.sort();
        assert_eq!(dims, vec![0, 0, 1, 1, 1]);

        let g = grp("A", 2);
        let cells = enumerate_tilde_cells(&g).unwrap();
        let total: usize = disjoint_pieces(&g)
            .into_iter()
            .map(|p| springer_atlas(&g, p).unwrap().len())
            .sum();
        assert_eq!(cells.len(), total);
        assert_eq!(disjoint_pieces(&g).len(), 13);
    }

    #[test]
    fn classification() {
        let g = grp("A", 1);
        let e = g.identity();
        let s = g.generator(1).unwrap();
        let piece = Some(piece_of(&g, &[1], &[]).unwrap());
        let class = |v: &[usize], w: &[usize]| classify_cell_action(&g, e, s, label(&g, v, w), piece);
        assert_eq!(class(&[], &[]), CellActionClass::Moved);
        assert_eq!(class(&[], &[1]), CellActionClass::FixedNoFixedPoints);
        assert_eq!(class(&[1], &[1]), CellActionClass::FixedWithFixedPoints);
        assert_eq!(
            classify_cell_action(&g, e, s, label(&g, &[1], &[1]), None),
            CellActionClass::FixedUndetermined
        );
    }

    #[test]
    fn y_generator_fixes_its_fibre_cells() {
        let g = grp("A", 3);
        for i in 1..=3 {
            let s = g.generator(i).unwrap();
            let piece = PieceLabel::new(&g, s, g.identity()).unwrap();
            for (v, w) in g.bruhat_pairs() {
                let c = CellLabel::unchecked(&g, v, w);
                let member = in_z(&g, v, w, set(&g, &[i]), IndexSet::EMPTY);
                let class = classify_cell_action(&g, g.identity(), s, c, Some(piece));
                if member {
                    assert_eq!(class, CellActionClass::FixedWithFixedPoints);
                } else {
                    assert_ne!(class, CellActionClass::FixedWithFixedPoints);
                }
            }
        }
    }
}
