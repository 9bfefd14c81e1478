//! Totally nonnegative matrices in `SL_n` (small `n`), the generalized
//! eigenspace splitting of `g` and of `Ad(g)`, and the parabolic `P_g`.

pub mod exact;
pub mod grammar;
pub mod linalg;
pub mod sl2;

use nalgebra::DMatrix;
use num_traits::{Signed, Zero};
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use exact::{
    certified_real_roots, charpoly, det, inverse, mat_mul, rat, squarefree_factors, to_f64,
    ExactMatrix, Rational,
};
pub use grammar::{parse_generators, parse_number, Generator};
use linalg::{null_space, orthonormal_columns, pluecker_coordinates, singular_values, subspace_distance};
pub use sl2::{sl2_section_inverse, sl2_section_solve, Sl2Section};

pub const MAX_N: usize = 4;

/// A square matrix, exact, with the generator word it came from if any.
#[derive(Clone, Debug, PartialEq)]
pub struct TnnMatrix {
    pub n: usize,
    pub entries: ExactMatrix,
    pub word: Option<Vec<Generator>>,
}

impl TnnMatrix {
    pub fn from_rows(rows: ExactMatrix) -> Result<TnnMatrix> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::validation("matrix must be square and nonempty"));
        }
        Ok(TnnMatrix { n, entries: rows, word: None })
    }

    /// Converts each float exactly to its binary rational value.
    pub fn from_f64(rows: &[Vec<f64>]) -> Result<TnnMatrix> {
        let mut out = Vec::with_capacity(rows.len());
        for row in rows {
            let mut r = Vec::with_capacity(row.len());
            for &x in row {
                r.push(Rational::from_float(x).ok_or_else(|| {
                    Error::validation(format!("matrix entry {x} is not finite"))
                })?);
            }
            out.push(r);
        }
        TnnMatrix::from_rows(out)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<TnnMatrix> {
        TnnMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |r, c| to_f64(&self.entries[r][c]))
    }

    pub fn det(&self) -> Rational {
        det(&self.entries)
    }
}

fn generator_matrix(n: usize, g: &Generator) -> ExactMatrix {
    let mut m = exact::identity(n);
    match g {
        Generator::X(i, a) => m[i - 1][*i] = a.clone(),
        Generator::Y(i, a) => m[*i][i - 1] = a.clone(),
        Generator::Torus(t) => {
            for (k, x) in t.iter().enumerate() {
                m[k][k] = x.clone();
            }
        }
    }
    m
}

/// Multiplies out a generator word in `SL_n`, left to right.
pub fn assemble_tnn(n: usize, word: &[Generator]) -> Result<TnnMatrix> {
    if !(1..=MAX_N).contains(&n) {
        return Err(Error::validation(format!("n must lie in 1..={MAX_N}, got {n}")));
    }
    let mut m = exact::identity(n);
    for g in word {
        match g {
            Generator::X(i, a) | Generator::Y(i, a) => {
                if !(1..n).contains(i) {
                    return Err(Error::validation(format!("generator index {i} out of range")));
                }
                if a.is_negative() {
                    return Err(Error::validation(format!("negative parameter {a}")));
                }
            }
            Generator::Torus(t) => {
                if t.len() != n {
                    return Err(Error::validation(format!(
                        "torus factor has {} entries, expected {n}",
                        t.len()
                    )));
                }
                grammar::check_torus(t)?;
            }
        }
        m = mat_mul(&m, &generator_matrix(n, g));
    }
    if det(&m) != rat(1) {
        return Err(Error::verification("assembled matrix is not unimodular"));
    }
    Ok(TnnMatrix { n, entries: m, word: Some(word.to_vec()) })
}

pub fn assemble_from_str(n: usize, gens: &str) -> Result<TnnMatrix> {
    assemble_tnn(n, &parse_generators(gens, n)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Positivity {
    TotallyPositive,
    TotallyNonnegative,
    Neither,
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

/// Classifies a square matrix by the signs of all of its minors.
pub fn minor_positivity(m: &ExactMatrix) -> Positivity {
    let n = m.len();
    let mut strict = true;
    for k in 1..=n {
        let sets = subsets(n, k);
        for rows in &sets {
            for cols in &sets {
                let sub: ExactMatrix = rows
                    .iter()
                    .map(|&r| cols.iter().map(|&c| m[r][c].clone()).collect())
                    .collect();
                let d = det(&sub);
                if d.is_negative() {
                    return Positivity::Neither;
                }
                if d.is_zero() {
                    strict = false;
                }
            }
        }
    }
    if strict {
        Positivity::TotallyPositive
    } else {
        Positivity::TotallyNonnegative
    }
}

/// Numerical tolerances, passed explicitly to every routine.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerances {
    /// Relative width within which two eigenvalues count as one.
    pub cluster: f64,
    /// Distinct clusters must be at least `gap_factor * cluster` apart.
    pub gap_factor: f64,
    /// Maximal projector distance for two subspaces to agree.
    pub subspace: f64,
    /// Threshold for normalized Plücker coordinates to count as nonzero.
    pub pluecker: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { cluster: 1e-8, gap_factor: 1e3, subspace: 1e-6, pluecker: 1e-8 }
    }
}

#[derive(Clone, Debug)]
pub struct EigenGroup {
    pub eigenvalue: f64,
    pub multiplicity: usize,
    /// Orthonormal basis of the generalized eigenspace, one column each.
    pub basis: DMatrix<f64>,
}

#[derive(Clone, Debug)]
pub struct EigenSplit {
    /// Sorted by decreasing eigenvalue.
    pub groups: Vec<EigenGroup>,
    pub tolerance: f64,
}

impl EigenSplit {
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.groups.iter().map(|g| g.eigenvalue).collect()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.multiplicity).collect()
    }

    /// All group bases side by side.
    pub fn combined_basis(&self) -> DMatrix<f64> {
        let dim = self.groups.first().map_or(0, |g| g.basis.nrows());
        let total: usize = self.multiplicities().iter().sum();
        let mut out = DMatrix::zeros(dim, total);
        let mut col = 0;
        for g in &self.groups {
            out.columns_mut(col, g.multiplicity).copy_from(&g.basis);
            col += g.multiplicity;
        }
        out
    }
}

const CONDITION_FLOOR: f64 = 1e-10;
const KERNEL_TOL: f64 = 1e-11;

/// `ker (A - λ)^m`, grown one step at a time: `K_{j+1}` is the kernel of
/// `(1 - P_j)(A - λ)` with `P_j` the projector onto `K_j`.
fn generalized_kernel(a: &DMatrix<f64>, lambda: f64, m: usize) -> Result<DMatrix<f64>> {
    let n = a.nrows();
    let shifted = a - DMatrix::identity(n, n) * lambda;
    let mut basis = DMatrix::zeros(n, 0);
    while basis.ncols() < m {
        let proj = DMatrix::identity(n, n) - &basis * basis.transpose();
        let next = null_space(&(proj * &shifted), None, KERNEL_TOL);
        if next.ncols() <= basis.ncols() || next.ncols() > m {
            return Err(Error::Domain(format!(
                "generalized eigenspace of {lambda:.12e} is numerically unresolved \
                 ({} directions found, multiplicity {m})",
                next.ncols()
            )));
        }
        basis = next;
    }
    Ok(basis)
}

/// Generic splitting of an exact square matrix into generalized
/// eigenspaces with real positive eigenvalues.
fn split_exact(a: &ExactMatrix, tol: &Tolerances) -> Result<EigenSplit> {
    let n = a.len();
    let mut roots: Vec<(f64, usize)> = Vec::new();
    for (factor, mult) in squarefree_factors(&charpoly(a)) {
        for r in certified_real_roots(&factor)? {
            roots.push((r, mult));
        }
    }
    roots.sort_by(|x, y| y.0.partial_cmp(&x.0).expect("finite roots"));
    if let Some(&(r, _)) = roots.iter().find(|(r, _)| *r <= 0.0) {
        return Err(Error::Domain(format!("eigenvalue {r:.12e} is not positive")));
    }
    for pair in roots.windows(2) {
        let (x, y) = (pair[0].0, pair[1].0);
        if x - y <= tol.gap_factor * tol.cluster * x.abs().max(y.abs()) {
            return Err(Error::Domain(format!(
                "eigenvalues {x:.12e} and {y:.12e} are too close to separate"
            )));
        }
    }
    let to_float = |m: &ExactMatrix| DMatrix::from_fn(n, n, |r, c| to_f64(&m[r][c]));
    let af = to_float(a);
    // Eigenvalues below one are resolved through the inverse so that they
    // are not small relative to the norm.
    let inv = inverse(a).map(|m| to_float(&m));
    let mut groups = Vec::with_capacity(roots.len());
    for &(lambda, mult) in &roots {
        let basis = match &inv {
            Some(inv) if lambda < 1.0 => generalized_kernel(inv, 1.0 / lambda, mult)?,
            _ => generalized_kernel(&af, lambda, mult)?,
        };
        groups.push(EigenGroup { eigenvalue: lambda, multiplicity: mult, basis });
    }
    let split = EigenSplit { groups, tolerance: tol.cluster };
    let total: usize = split.multiplicities().iter().sum();
    if total != n {
        return Err(Error::Consistency(format!(
            "multiplicities sum to {total}, expected {n}"
        )));
    }
    let sv = singular_values(&split.combined_basis());
    if sv.last().copied().unwrap_or(1.0) < CONDITION_FLOOR {
        return Err(Error::Domain("generalized eigenspaces are numerically dependent".into()));
    }
    Ok(split)
}

/// Generalized eigenspaces of `g`, sorted by decreasing eigenvalue.
pub fn eigen_split(g: &TnnMatrix, tol: &Tolerances) -> Result<EigenSplit> {
    split_exact(&g.entries, tol)
}

/// Coordinates on the trace-zero matrices: the off-diagonal `E_ij` in
/// row-major order, then `c_k = X_11 + … + X_kk` for `k < n`.
fn sl_coords(x: &ExactMatrix) -> Vec<Rational> {
    let n = x.len();
    let mut out = Vec::with_capacity(n * n - 1);
    for (i, row) in x.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if i != j {
                out.push(v.clone());
            }
        }
    }
    let mut c = Rational::zero();
    for (k, row) in x.iter().enumerate().take(n - 1) {
        c += &row[k];
        out.push(c.clone());
    }
    out
}

fn sl_basis_matrix(n: usize, index: usize) -> ExactMatrix {
    let mut m = vec![vec![Rational::zero(); n]; n];
    let offdiag = n * n - n;
    if index < offdiag {
        let (i, jj) = (index / (n - 1), index % (n - 1));
        let j = if jj >= i { jj + 1 } else { jj };
        m[i][j] = rat(1);
    } else {
        let k = index - offdiag;
        m[k][k] = rat(1);
        m[k + 1][k + 1] = rat(-1);
    }
    m
}

/// Turns a coordinate vector back into an `n × n` matrix.
fn sl_vector_to_matrix(n: usize, v: &[f64]) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(n, n);
    let mut k = 0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m[(i, j)] = v[k];
                k += 1;
            }
        }
    }
    let mut prev = 0.0;
    for i in 0..n {
        let c = if i + 1 < n { v[k + i] } else { 0.0 };
        m[(i, i)] = c - prev;
        prev = c;
    }
    m
}

/// The exact matrix of `Ad(g)` on trace-zero matrices.
pub fn adjoint_matrix(g: &ExactMatrix) -> Result<ExactMatrix> {
    let n = g.len();
    let g_inv = inverse(g).ok_or_else(|| Error::Domain("g is not invertible".into()))?;
    let dim = n * n - 1;
    let mut out = vec![vec![Rational::zero(); dim]; dim];
    for col in 0..dim {
        let image = mat_mul(&mat_mul(g, &sl_basis_matrix(n, col)), &g_inv);
        for (row, v) in sl_coords(&image).into_iter().enumerate() {
            out[row][col] = v;
        }
    }
    Ok(out)
}

/// Flattens `n × n` matrices into columns of an `n² × k` matrix.
fn flatten(ms: &[DMatrix<f64>]) -> DMatrix<f64> {
    let n2 = ms.first().map_or(0, |m| m.len());
    DMatrix::from_fn(n2, ms.len(), |r, c| ms[c][r])
}

fn span(ms: &[DMatrix<f64>]) -> DMatrix<f64> {
    orthonormal_columns(&flatten(ms), ms.len())
}

#[derive(Clone, Debug)]
pub struct ParabolicData {
    pub n: usize,
    pub split: EigenSplit,
    /// Orthonormal bases of `F_1 ⊂ … ⊂ F_k`, excluding the whole space.
    pub flag: Vec<DMatrix<f64>>,
    pub levi_block_sizes: Vec<usize>,
    pub is_full_group: bool,
    pub is_borel: bool,
    /// Basis of the sum of generalized `Ad(g)`-eigenspaces with eigenvalue
    /// at least one, as `n × n` matrices.
    pub p_lie_basis: Vec<DMatrix<f64>>,
    /// Eigenvalues of `Ad(g)` with multiplicities.
    pub ad_spectrum: Vec<(f64, usize)>,
    /// Distance between the flag stabilizer and `span(p_lie_basis)`.
    pub construction_distance: f64,
    /// Distance between the centralizer of `g_s` and the `Ad(g)`
    /// 1-eigenspace.
    pub levi_distance: f64,
}

/// Orthonormal basis adapted to the flag: the first `d_k` columns span
/// `F_k`.
fn adapted_basis(split: &EigenSplit) -> DMatrix<f64> {
    split.combined_basis().qr().q()
}

fn flag_stabilizer(n: usize, q: &DMatrix<f64>, blocks: &[usize]) -> Vec<DMatrix<f64>> {
    let block_of: Vec<usize> = blocks
        .iter()
        .enumerate()
        .flat_map(|(b, &size)| std::iter::repeat_n(b, size))
        .collect();
    let mut out = Vec::new();
    let conj = |y: DMatrix<f64>| q * y * q.transpose();
    for a in 0..n {
        for b in 0..n {
            if a != b && block_of[a] <= block_of[b] {
                let mut y = DMatrix::zeros(n, n);
                y[(a, b)] = 1.0;
                out.push(conj(y));
            }
        }
    }
    for a in 0..n - 1 {
        let mut y = DMatrix::zeros(n, n);
        y[(a, a)] = 1.0;
        y[(a + 1, a + 1)] = -1.0;
        out.push(conj(y));
    }
    out
}

/// `P_g` from the eigenvalues of `g`, cross-checked against `Ad(g)`.
pub fn parabolic_of(g: &TnnMatrix, tol: &Tolerances) -> Result<ParabolicData> {
    let n = g.n;
    let split = eigen_split(g, tol)?;
    let blocks = split.multiplicities();
    let q = adapted_basis(&split);
    let mut flag = Vec::new();
    let mut d = 0;
    for &b in &blocks[..blocks.len() - 1] {
        d += b;
        flag.push(q.columns(0, d).into_owned());
    }

    let stabilizer = flag_stabilizer(n, &q, &blocks);
    let expected = (n * n + blocks.iter().map(|b| b * b).sum::<usize>()) / 2 - 1;
    debug_assert_eq!(stabilizer.len(), expected);

    let (p_lie_basis, ad_spectrum, levi_distance) = if n == 1 {
        (Vec::new(), Vec::new(), 0.0)
    } else {
        let ad = split_exact(&adjoint_matrix(&g.entries)?, tol)?;
        let to_mats = |grp: &EigenGroup| -> Vec<DMatrix<f64>> {
            grp.basis
                .column_iter()
                .map(|c| sl_vector_to_matrix(n, c.as_slice()))
                .collect()
        };
        let p_lie: Vec<DMatrix<f64>> = ad
            .groups
            .iter()
            .filter(|grp| grp.eigenvalue >= 1.0 - tol.cluster)
            .flat_map(to_mats)
            .collect();
        let g1: Vec<DMatrix<f64>> = ad
            .groups
            .iter()
            .filter(|grp| (grp.eigenvalue - 1.0).abs() <= tol.cluster)
            .flat_map(to_mats)
            .collect();
        let levi = levi_distance(n, &split, &g1, tol)?;
        let spectrum = ad.groups.iter().map(|grp| (grp.eigenvalue, grp.multiplicity)).collect();
        (p_lie, spectrum, levi)
    };

    let construction_distance = if n == 1 {
        0.0
    } else {
        if p_lie_basis.len() != expected {
            return Err(Error::Consistency(format!(
                "Ad(g) gives dim g_{{>=1}} = {}, flag stabilizer has dim {expected}",
                p_lie_basis.len()
            )));
        }
        subspace_distance(&span(&stabilizer), &span(&p_lie_basis))
    };
    if construction_distance >= tol.subspace {
        return Err(Error::Consistency(format!(
            "flag stabilizer and Ad(g) construction differ by {construction_distance:.3e}"
        )));
    }
    Ok(ParabolicData {
        n,
        is_full_group: blocks.len() == 1,
        is_borel: blocks.len() == n,
        levi_block_sizes: blocks,
        split,
        flag,
        p_lie_basis,
        ad_spectrum,
        construction_distance,
        levi_distance,
    })
}

/// Compares the centralizer of the semisimple part of `g` with both the
/// block-diagonal algebra of the eigenspace decomposition and `g_1`.
fn levi_distance(
    n: usize,
    split: &EigenSplit,
    g1: &[DMatrix<f64>],
    tol: &Tolerances,
) -> Result<f64> {
    let v = split.combined_basis();
    let v_inv = v
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::Domain("eigenvector basis is singular".into()))?;
    let mut diag = DMatrix::zeros(n, n);
    let mut k = 0;
    for grp in &split.groups {
        for _ in 0..grp.multiplicity {
            diag[(k, k)] = grp.eigenvalue;
            k += 1;
        }
    }
    let g_s = &v * diag * &v_inv;
    let dim = n * n - 1;
    let commutators: Vec<DMatrix<f64>> = (0..dim)
        .map(|c| {
            let mut e = vec![0.0; dim];
            e[c] = 1.0;
            let x = sl_vector_to_matrix(n, &e);
            &g_s * &x - &x * &g_s
        })
        .collect();
    let kernel = null_space(&flatten(&commutators), None, 1e-9);
    let expected: usize = split.multiplicities().iter().map(|b| b * b).sum::<usize>() - 1;
    if kernel.ncols() != expected || g1.len() != expected {
        return Err(Error::Consistency(format!(
            "centralizer of g_s has dim {}, g_1 has dim {}, Levi algebra has dim {expected}",
            kernel.ncols(),
            g1.len()
        )));
    }
    let centralizer: Vec<DMatrix<f64>> = kernel
        .column_iter()
        .map(|c| sl_vector_to_matrix(n, c.as_slice()))
        .collect();
    let mut block_algebra = Vec::new();
    let mut start = 0;
    for grp in &split.groups {
        for a in start..start + grp.multiplicity {
            for b in start..start + grp.multiplicity {
                if a != b {
                    let mut y = DMatrix::zeros(n, n);
                    y[(a, b)] = 1.0;
                    block_algebra.push(&v * y * &v_inv);
                }
            }
        }
        start += grp.multiplicity;
    }
    for a in 0..n - 1 {
        let mut y = DMatrix::zeros(n, n);
        y[(a, a)] = 1.0;
        y[(a + 1, a + 1)] = -1.0;
        block_algebra.push(&v * y * &v_inv);
    }
    let c = span(&centralizer);
    let dist = subspace_distance(&c, &span(&block_algebra)).max(subspace_distance(&c, &span(g1)));
    if dist >= tol.subspace {
        return Err(Error::Consistency(format!(
            "centralizer of g_s differs from the Levi algebra by {dist:.3e}"
        )));
    }
    Ok(dist)
}

/// Normalized sign pattern of the Plücker coordinates of a subspace: the
/// coordinates are scaled so that the largest in absolute value is `+1`.
pub fn pluecker_signs(basis: &DMatrix<f64>, tol: f64) -> (Vec<i8>, f64) {
    let p = pluecker_coordinates(basis);
    let (lead, top) = p
        .iter()
        .fold((1.0, 0.0), |(s, m), &x| if x.abs() > m { (x.signum(), x.abs()) } else { (s, m) });
    if top == 0.0 {
        return (vec![0; p.len()], 0.0);
    }
    let normalized: Vec<f64> = p.iter().map(|x| lead * x / top).collect();
    let min = normalized.iter().copied().fold(f64::INFINITY, f64::min);
    let signs = normalized
        .iter()
        .map(|&x| if x > tol { 1 } else if x < -tol { -1 } else { 0 })
        .collect();
    (signs, min)
}

#[derive(Clone, Debug, Serialize)]
pub struct BorelChartReport {
    pub eigenvalues: Vec<f64>,
    /// Scaled so the first coordinate is one.
    pub dominant_eigenvector: Vec<f64>,
    pub flag_pluecker_signs: Vec<Vec<i8>>,
    /// Smallest normalized Plücker coordinate over the whole flag.
    pub min_normalized_pluecker: f64,
    pub construction_distance: f64,
}

/// For totally positive `g`: `P_g` is a Borel and its flag is totally
/// positive.
pub fn borel_chart_check(g: &TnnMatrix, tol: &Tolerances) -> Result<BorelChartReport> {
    if minor_positivity(&g.entries) != Positivity::TotallyPositive {
        return Err(Error::validation("borel_chart_check needs a totally positive matrix"));
    }
    let data = parabolic_of(g, tol)?;
    if !data.is_borel {
        return Err(Error::verification(format!(
            "P_g is not a Borel subgroup: blocks {:?}",
            data.levi_block_sizes
        )));
    }
    let mut signs = Vec::new();
    let mut min = f64::INFINITY;
    for f in &data.flag {
        let (s, m) = pluecker_signs(f, tol.pluecker);
        if s.iter().any(|&x| x != 1) {
            return Err(Error::verification(format!(
                "flag subspace of dim {} has Plücker signs {s:?}",
                f.ncols()
            )));
        }
        min = min.min(m);
        signs.push(s);
    }
    let v = &data.split.groups[0].basis;
    let dominant = if v[(0, 0)] != 0.0 {
        v.column(0).iter().map(|x| x / v[(0, 0)]).collect()
    } else {
        v.column(0).iter().copied().collect()
    };
    Ok(BorelChartReport {
        eigenvalues: data.split.eigenvalues(),
        dominant_eigenvector: dominant,
        flag_pluecker_signs: signs,
        min_normalized_pluecker: min,
        construction_distance: data.construction_distance,
    })
}

/// For totally nonnegative `g`, checks that every flag subspace has
/// weakly positive Plücker coordinates. Returns the sign patterns.
pub fn boundary_probe(g: &TnnMatrix, tol: &Tolerances) -> Result<Vec<Vec<i8>>> {
    if minor_positivity(&g.entries) == Positivity::Neither {
        return Err(Error::validation("boundary_probe needs a totally nonnegative matrix"));
    }
    let data = parabolic_of(g, tol)?;
    let mut out = Vec::new();
    for f in &data.flag {
        let (s, _) = pluecker_signs(f, tol.pluecker);
        if s.contains(&-1) {
            return Err(Error::verification(format!(
                "flag subspace of dim {} has Plücker signs {s:?}",
                f.ncols()
            )));
        }
        out.push(s);
    }
    Ok(out)
}

/// Largest distance between the flag of `h g h⁻¹` and `h` applied to the
/// flag of `g`.
pub fn conjugation_check(g: &TnnMatrix, h: &ExactMatrix, tol: &Tolerances) -> Result<f64> {
    let h_inv = inverse(h).ok_or_else(|| Error::validation("h is not invertible"))?;
    let conj = TnnMatrix::from_rows(mat_mul(&mat_mul(h, &g.entries), &h_inv))?;
    let base = parabolic_of(g, tol)?;
    let moved = parabolic_of(&conj, tol)?;
    if base.levi_block_sizes != moved.levi_block_sizes {
        return Err(Error::Consistency("conjugation changed the block sizes".into()));
    }
    let hf = DMatrix::from_fn(g.n, g.n, |r, c| to_f64(&h[r][c]));
    let mut worst: f64 = 0.0;
    for (f, fm) in base.flag.iter().zip(&moved.flag) {
        let image = orthonormal_columns(&(&hf * f), f.ncols());
        worst = worst.max(subspace_distance(&image, fm));
    }
    if worst >= tol.subspace {
        return Err(Error::Consistency(format!(
            "conjugated flag differs by {worst:.3e}"
        )));
    }
    Ok(worst)
}

fn eighths(k: u32) -> Rational {
    Rational::new(i64::from(k).into(), 8.into())
}

fn random_torus<R: Rng>(n: usize, rng: &mut R) -> Generator {
    let mut t: Vec<Rational> = (0..n - 1).map(|_| eighths(rng.gen_range(1..=16))).collect();
    let product = t.iter().fold(rat(1), |acc, x| acc * x);
    t.push(rat(1) / product);
    Generator::Torus(t)
}

/// `y(w0) · t · x(w0)` with random parameters in `(0, 2]`, followed by
/// `extra` random generators. Always totally positive.
pub fn random_tp_word<R: Rng>(n: usize, extra: usize, rng: &mut R) -> Vec<Generator> {
    let w0 = w0_word(n);
    let mut out = Vec::new();
    for &i in &w0 {
        out.push(Generator::Y(i, eighths(rng.gen_range(1..=16))));
    }
    out.push(random_torus(n, rng));
    for &i in &w0 {
        out.push(Generator::X(i, eighths(rng.gen_range(1..=16))));
    }
    out.extend(random_tnn_word(n, extra, rng));
    out
}

/// Random letters with parameters in `[0, 2]`, zero allowed.
pub fn random_tnn_word<R: Rng>(n: usize, len: usize, rng: &mut R) -> Vec<Generator> {
    (0..len)
        .map(|_| {
            let kind = rng.gen_range(0..5);
            if n == 1 || kind == 4 {
                return random_torus(n, rng);
            }
            let i = rng.gen_range(1..n);
            let a = eighths(rng.gen_range(0..=16));
            if kind % 2 == 0 {
                Generator::X(i, a)
            } else {
                Generator::Y(i, a)
            }
        })
        .collect()
}

fn w0_word(n: usize) -> Vec<usize> {
    // s_1 (s_2 s_1) (s_3 s_2 s_1) …
    (1..n).flat_map(|k| (1..=k).rev()).collect()
}

/// A random integer matrix with entries in `-2..=2` and nonzero
/// determinant.
pub fn random_invertible<R: Rng>(n: usize, rng: &mut R) -> ExactMatrix {
    loop {
        let h: ExactMatrix = (0..n)
            .map(|_| (0..n).map(|_| rat(rng.gen_range(-2..=2))).collect())
            .collect();
        if !det(&h).is_zero() {
            return h;
        }
    }
}

/// Rounds to 12 significant digits for stable output.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

#[derive(Clone, Debug, Serialize)]
pub struct ParabolicReport {
    pub n: usize,
    pub positivity: Positivity,
    pub eigenvalues: Vec<f64>,
    pub blocks: Vec<usize>,
    pub is_borel: bool,
    pub is_full_group: bool,
    pub flag_pluecker_signs: Vec<Vec<i8>>,
    pub ad_eigenvalues: Vec<f64>,
    pub construction_distance: f64,
    pub levi_distance: f64,
}

pub fn parabolic_report(g: &TnnMatrix, tol: &Tolerances) -> Result<ParabolicReport> {
    let data = parabolic_of(g, tol)?;
    let flag_pluecker_signs = data.flag.iter().map(|f| pluecker_signs(f, tol.pluecker).0).collect();
    Ok(ParabolicReport {
        n: g.n,
        positivity: minor_positivity(&g.entries),
        eigenvalues: data.split.eigenvalues().into_iter().map(round12).collect(),
        blocks: data.levi_block_sizes.clone(),
        is_borel: data.is_borel,
        is_full_group: data.is_full_group,
        flag_pluecker_signs,
        ad_eigenvalues: data
            .ad_spectrum
            .iter()
            .flat_map(|&(x, m)| std::iter::repeat_n(round12(x), m))
            .collect(),
        construction_distance: round12(data.construction_distance),
        levi_distance: round12(data.levi_distance),
    })
}
