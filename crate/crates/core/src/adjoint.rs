//! Exact model of the adjoint representation of SL₃.
//!
//! Vectors live in the 8-dimensional space with ordered canonical basis
//! `X_{-12}, X_{-1}, X_{-2}, t_1, t_2, X_1, X_2, X_{12}`. The monoid
//! generators `x_i(a)`, `y_i(a)` act by explicit integer-polynomial
//! matrices. The nineteen cell families of the flag manifold of SL₃ are
//! lines in the nonnegative cone; each family is the set of positive
//! combinations of a fixed subset of the basis satisfying the quadratic
//! relations of [`check_cx_relations`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::coxeter::{DiagramType, WeylElement, WeylGroup};
use crate::error::{Error, Result};
use crate::springer::{disjoint_pieces, enumerate_z, CellLabel, PieceLabel};
use crate::subexpr::positive_subexpression;

pub const DIM: usize = 8;

/// Basis names in storage order.
pub const BASIS: [&str; DIM] = ["X-12", "X-1", "X-2", "t1", "t2", "X1", "X2", "X12"];

const XM12: usize = 0;
const XM: [usize; 2] = [1, 2];
const T: [usize; 2] = [3, 4];
const XP: [usize; 2] = [5, 6];
const X12: usize = 7;

/// The involution exchanging `X_{±α}` and fixing the torus part.
const PHI: [usize; DIM] = [7, 5, 6, 3, 4, 1, 2, 0];

pub type Rational = BigRational;

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"` (optionally signed) into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::validation(format!("{s:?} is not a rational number"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// A vector of the model in the fixed basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConeVector(pub [Rational; DIM]);

impl ConeVector {
    pub fn zero() -> Self {
        ConeVector(std::array::from_fn(|_| Rational::zero()))
    }

    pub fn basis(k: usize) -> Self {
        let mut v = Self::zero();
        v.0[k] = Rational::one();
        v
    }

    /// The highest-weight vector `X_{12}`.
    pub fn highest() -> Self {
        Self::basis(X12)
    }

    pub fn from_ints(xs: [i64; DIM]) -> Self {
        ConeVector(xs.map(rat))
    }

    /// Indices of the nonzero coordinates, as a bitmask.
    pub fn support(&self) -> u8 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .fold(0, |m, (k, _)| m | (1 << k))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Rescales to coprime integer coordinates whose first nonzero entry is
    /// positive. The zero vector is returned unchanged.
    pub fn normalized(&self) -> Self {
        let Some(lead) = self.0.iter().find(|x| !x.is_zero()) else {
            return self.clone();
        };
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if lead.is_negative() {
            gcd = -gcd;
        }
        ConeVector(std::array::from_fn(|k| {
            Rational::from_integer(&ints[k] / &gcd)
        }))
    }
}

impl fmt::Debug for ConeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter().map(|x| x.to_string())).finish()
    }
}

impl Serialize for ConeVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(
            self.0
                .iter()
                .map(|x| format!("{}/{}", x.numer(), x.denom())),
        )
    }
}

/// Which monoid generator a matrix came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GeneratorKind {
    X,
    Y,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub kind: GeneratorKind,
    pub index: usize,
    pub parameter: Rational,
}

/// An 8×8 exact matrix acting on [`ConeVector`]s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    pub entries: Vec<Vec<Rational>>,
    pub provenance: Option<Provenance>,
}

impl RepMatrix {
    pub fn identity() -> Self {
        RepMatrix {
            entries: (0..DIM)
                .map(|r| (0..DIM).map(|c| if r == c { rat(1) } else { rat(0) }).collect())
                .collect(),
            provenance: None,
        }
    }

    pub fn mul(&self, other: &RepMatrix) -> RepMatrix {
        let mut out = vec![vec![Rational::zero(); DIM]; DIM];
        for (r, row) in out.iter_mut().enumerate() {
            for k in 0..DIM {
                let a = &self.entries[r][k];
                if a.is_zero() {
                    continue;
                }
                for (c, slot) in row.iter_mut().enumerate() {
                    let b = &other.entries[k][c];
                    if !b.is_zero() {
                        *slot += a * b;
                    }
                }
            }
        }
        RepMatrix {
            entries: out,
            provenance: None,
        }
    }

    pub fn apply(&self, v: &ConeVector) -> ConeVector {
        ConeVector(std::array::from_fn(|r| {
            let mut acc = Rational::zero();
            for c in 0..DIM {
                if !v.0[c].is_zero() && !self.entries[r][c].is_zero() {
                    acc += &self.entries[r][c] * &v.0[c];
                }
            }
            acc
        }))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().flatten().all(|x| !x.is_negative())
    }

    /// `self - 1`.
    pub fn minus_identity(&self) -> RepMatrix {
        let mut m = self.clone();
        for k in 0..DIM {
            m.entries[k][k] -= rat(1);
        }
        m.provenance = None;
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Zero::is_zero)
    }

    /// Conjugation by the basis involution `φ`.
    pub fn phi_conjugate(&self) -> RepMatrix {
        RepMatrix {
            entries: (0..DIM)
                .map(|r| (0..DIM).map(|c| self.entries[PHI[r]][PHI[c]].clone()).collect())
                .collect(),
            provenance: None,
        }
    }

    /// Whether column `c` vanishes, i.e. `self·e_c = 0`.
    fn column_is_zero(&self, c: usize) -> bool {
        (0..DIM).all(|r| self.entries[r][c].is_zero())
    }
}

/// Matrix of `x_i(a)` or `y_i(a)`, `i ∈ {1, 2}`.
pub fn generator_matrix(kind: GeneratorKind, i: usize, a: &Rational) -> Result<RepMatrix> {
    if !(1..=2).contains(&i) {
        return Err(Error::validation(format!(
            "generator index {i} is not 1 or 2"
        )));
    }
    let (p, q) = (i - 1, 2 - i);
    let a2 = a * a;
    let mut m = RepMatrix::identity();
    let mut add = |src: usize, dst: usize, c: Rational| m.entries[dst][src] += c;
    match kind {
        GeneratorKind::X => {
            add(XP[q], X12, a.clone());
            add(XM[p], T[p], a.clone());
            add(XM[p], XP[p], a2);
            add(XM12, XM[q], a.clone());
            add(T[q], XP[p], a.clone());
            add(T[p], XP[p], a * rat(2));
        }
        GeneratorKind::Y => {
            add(X12, XP[q], a.clone());
            add(XP[p], T[p], a.clone());
            add(XP[p], XM[p], a2);
            add(XM[q], XM12, a.clone());
            add(T[q], XM[p], a.clone());
            add(T[p], XM[p], a * rat(2));
        }
    }
    m.provenance = Some(Provenance {
        kind,
        index: i,
        parameter: a.clone(),
    });
    Ok(m)
}

/// `ṡ_i = y_i(1)·x_i(-1)·y_i(1)`.
pub fn sdot(i: usize) -> Result<RepMatrix> {
    let y = generator_matrix(GeneratorKind::Y, i, &rat(1))?;
    let x = generator_matrix(GeneratorKind::X, i, &rat(-1))?;
    Ok(y.mul(&x).mul(&y))
}

/// The nine quadratic relations cutting out the cone of lines in the orbit
/// of `X_{12}`. Returns `true` iff all of them hold.
pub fn check_cx_relations(v: &ConeVector) -> Result<bool> {
    if v.is_zero() {
        return Err(Error::validation("the zero vector spans no line"));
    }
    if !v.is_nonnegative() {
        return Err(Error::validation(format!(
            "vector {v:?} has a negative coordinate"
        )));
    }
    let [am12, am1, am2, c1, c2, a1, a2, a12] = &v.0;
    let c = c1 + c2;
    let relations = [
        (a2 * am12, c2 * am1),
        (a1 * am12, c1 * am2),
        (am1 * a12, c1 * a2),
        (am2 * a12, c2 * a1),
        (a12 * &c, a1 * a2),
        (am12 * &c, am1 * am2),
        (c1 * c2, a12 * am12),
        (c1 * &c, a1 * am1),
        (c2 * &c, a2 * am2),
    ];
    Ok(relations.iter().all(|(l, r)| l == r))
}

fn require_a2(group: &WeylGroup) -> Result<()> {
    if group.diagram() != DiagramType::A || group.rank() != 2 {
        return Err(Error::validation(format!(
            "the adjoint model needs A_2, got {}_{}",
            group.diagram(),
            group.rank()
        )));
    }
    Ok(())
}

fn parse_short_word(s: &str) -> Vec<usize> {
    if s == "-" {
        Vec::new()
    } else {
        s.bytes().map(|b| usize::from(b - b'0')).collect()
    }
}

/// Short label used in tables: `-` for the identity, otherwise the
/// canonical word as digits.
pub fn short_word(group: &WeylGroup, x: WeylElement) -> String {
    let w = group.word(x);
    if w.is_empty() {
        "-".to_string()
    } else {
        w.iter().map(|i| i.to_string()).collect()
    }
}

/// The stored `[[v, w]]` table, as basis-index lists.
const STORED_SUPPORTS: [(&str, &str, &[usize]); 19] = [
    ("121", "121", &[0]),
    ("12", "12", &[1]),
    ("21", "21", &[2]),
    ("2", "2", &[5]),
    ("1", "1", &[6]),
    ("-", "-", &[7]),
    ("21", "121", &[0, 2]),
    ("12", "121", &[0, 1]),
    ("1", "12", &[1, 6]),
    ("2", "21", &[2, 5]),
    ("-", "2", &[5, 7]),
    ("-", "1", &[6, 7]),
    ("2", "12", &[1, 3, 5]),
    ("1", "21", &[2, 4, 6]),
    ("2", "121", &[0, 1, 2, 3, 5]),
    ("1", "121", &[0, 1, 2, 4, 6]),
    ("-", "12", &[1, 3, 5, 6, 7]),
    ("-", "21", &[2, 4, 5, 6, 7]),
    ("-", "121", &[0, 1, 2, 3, 4, 5, 6, 7]),
];

/// The stored `β⁻_z` and `β⁺_z` partitions.
const STORED_BETA_MINUS: [(&str, &[usize]); 6] = [
    ("-", &[7]),
    ("1", &[6]),
    ("2", &[5]),
    ("12", &[1, 3]),
    ("21", &[2, 4]),
    ("121", &[0]),
];
const STORED_BETA_PLUS: [(&str, &[usize]); 6] = [
    ("-", &[7]),
    ("1", &[4, 6]),
    ("2", &[3, 5]),
    ("21", &[2]),
    ("12", &[1]),
    ("121", &[0]),
];

fn mask(indices: &[usize]) -> u8 {
    indices.iter().fold(0, |m, &k| m | (1 << k))
}

/// Basis names of a support bitmask.
pub fn support_names(m: u8) -> Vec<&'static str> {
    (0..DIM).filter(|k| m & (1 << k) != 0).map(|k| BASIS[k]).collect()
}

/// Map from the 19 cells of SL₃ to their basis supports `[[v, w]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportTable {
    entries: BTreeMap<(WeylElement, WeylElement), u8>,
}

impl SupportTable {
    /// The tabulated supports.
    pub fn stored(group: &WeylGroup) -> Result<Self> {
        require_a2(group)?;
        let mut entries = BTreeMap::new();
        for (v, w, s) in STORED_SUPPORTS {
            let v = group.element(&parse_short_word(v))?;
            let w = group.element(&parse_short_word(w))?;
            entries.insert((v, w), mask(s));
        }
        Ok(SupportTable { entries })
    }

    pub fn get(&self, v: WeylElement, w: WeylElement) -> Option<u8> {
        self.entries.get(&(v, w)).copied()
    }

    /// Replaces one entry; used to build corrupted fixtures.
    pub fn with_entry(mut self, v: WeylElement, w: WeylElement, support: u8) -> Self {
        self.entries.insert((v, w), support);
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = ((WeylElement, WeylElement), u8)> + '_ {
        self.entries.iter().map(|(&k, &m)| (k, m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `β⁻_z = [[e, z]] ∖ ⋃_{y < z} [[e, y]]`.
    pub fn beta_minus(&self, group: &WeylGroup) -> Result<BTreeMap<WeylElement, u8>> {
        let e = group.identity();
        let mut out = BTreeMap::new();
        for z in group.elements() {
            let own = self.lookup(group, e, z)?;
            let mut lower = 0u8;
            for y in group.elements().filter(|&y| y != z && group.bruhat_leq(y, z)) {
                lower |= self.lookup(group, e, y)?;
            }
            out.insert(z, own & !lower);
        }
        Ok(out)
    }

    /// `β⁺_z = [[z, w_I]] ∖ ⋃_{y > z} [[y, w_I]]`.
    pub fn beta_plus(&self, group: &WeylGroup) -> Result<BTreeMap<WeylElement, u8>> {
        let w0 = group.longest();
        let mut out = BTreeMap::new();
        for z in group.elements() {
            let own = self.lookup(group, z, w0)?;
            let mut upper = 0u8;
            for y in group.elements().filter(|&y| y != z && group.bruhat_leq(z, y)) {
                upper |= self.lookup(group, y, w0)?;
            }
            out.insert(z, own & !upper);
        }
        Ok(out)
    }

    fn lookup(&self, group: &WeylGroup, v: WeylElement, w: WeylElement) -> Result<u8> {
        self.get(v, w).ok_or_else(|| {
            Error::validation(format!(
                "no support recorded for ({}, {})",
                short_word(group, v),
                short_word(group, w)
            ))
        })
    }
}

fn support_of(group: &WeylGroup, v: WeylElement, w: WeylElement) -> Result<u8> {
    let table = SupportTable::stored(group)?;
    CellLabel::new(group, v, w)?;
    table.lookup(group, v, w)
}

/// A vector of the family `[v, w]` from its coefficients on `[[v, w]]`,
/// listed in basis order.
pub fn cell_family_sample(
    group: &WeylGroup,
    v: WeylElement,
    w: WeylElement,
    params: &[Rational],
) -> Result<ConeVector> {
    let support = support_of(group, v, w)?;
    let slots: Vec<usize> = (0..DIM).filter(|k| support & (1 << k) != 0).collect();
    if params.len() != slots.len() {
        return Err(Error::validation(format!(
            "family ({}, {}) takes {} coefficients, got {}",
            short_word(group, v),
            short_word(group, w),
            slots.len(),
            params.len()
        )));
    }
    if params.iter().any(|p| !p.is_positive()) {
        return Err(Error::validation("family coefficients must be positive"));
    }
    let mut vec = ConeVector::zero();
    for (&k, p) in slots.iter().zip(params) {
        vec.0[k] = p.clone();
    }
    if !check_cx_relations(&vec)? {
        return Err(Error::validation(format!(
            "coefficients {vec:?} violate the cone relations"
        )));
    }
    Ok(vec)
}

/// `g·X_{12}` for the positive-subexpression chart, before normalization.
pub fn mr_vector(
    group: &WeylGroup,
    v: WeylElement,
    w: WeylElement,
    word: &[usize],
    params: &[Rational],
) -> Result<ConeVector> {
    require_a2(group)?;
    let sub = positive_subexpression(group, v, w, word)?;
    if params.len() != sub.skipped() {
        return Err(Error::validation(format!(
            "expected {} parameters, got {}",
            sub.skipped(),
            params.len()
        )));
    }
    if params.iter().any(|p| !p.is_positive()) {
        return Err(Error::validation("chart parameters must be positive"));
    }
    let mut g = RepMatrix::identity();
    let mut next = params.iter();
    for (&i, &taken) in word.iter().zip(&sub.mask) {
        let factor = if taken {
            sdot(i)?
        } else {
            let a = next.next().expect("parameter count checked above");
            generator_matrix(GeneratorKind::Y, i, a)?
        };
        g = g.mul(&factor);
    }
    Ok(g.apply(&ConeVector::highest()))
}

/// A normalized point of the cell `(v, w)` in the chart attached to `word`,
/// checked against the cone relations and the stored support.
pub fn mr_line(
    group: &WeylGroup,
    v: WeylElement,
    w: WeylElement,
    word: &[usize],
    params: &[Rational],
) -> Result<ConeVector> {
    let vec = mr_vector(group, v, w, word, params)?.normalized();
    if !vec.is_nonnegative() || !check_cx_relations(&vec)? {
        return Err(Error::verification(format!(
            "chart point {vec:?} of ({}, {}) leaves the cone",
            short_word(group, v),
            short_word(group, w)
        )));
    }
    let expected = support_of(group, v, w)?;
    if vec.support() != expected {
        return Err(Error::verification(format!(
            "chart point of ({}, {}) has support {:?}, expected {:?}",
            short_word(group, v),
            short_word(group, w),
            support_names(vec.support()),
            support_names(expected)
        )));
    }
    Ok(vec)
}

/// `ρ(u)` for the unit-parameter point `y_{i_1}(1)⋯y_{i_m}(1)·x_{j_1}(1)⋯`
/// of a piece, using canonical words.
pub fn piece_matrix(group: &WeylGroup, piece: PieceLabel) -> Result<RepMatrix> {
    require_a2(group)?;
    let one = rat(1);
    let mut g = RepMatrix::identity();
    for &i in group.word(piece.z) {
        g = g.mul(&generator_matrix(GeneratorKind::Y, i, &one)?);
    }
    for &j in group.word(piece.z_prime) {
        g = g.mul(&generator_matrix(GeneratorKind::X, j, &one)?);
    }
    Ok(g)
}

/// Whether the family with the given support contains a vector fixed by
/// `u`, where `n = ρ(u) - 1` is entrywise nonnegative.
///
/// For a vector with strictly positive coefficients on the support `S`,
/// `n·x = Σ_{b∈S} x_b·n·e_b` is a sum of nonnegative vectors with positive
/// weights, so it vanishes iff every column `n·e_b` with `b ∈ S` does.
fn family_meets_kernel(n: &RepMatrix, support: u8) -> bool {
    (0..DIM)
        .filter(|k| support & (1 << k) != 0)
        .all(|k| n.column_is_zero(k))
}

/// Cells `(v, w)` whose family contains a `u`-fixed vector, for `u` the
/// unit-parameter point of `piece`.
pub fn fixed_cell_atlas_with(
    group: &WeylGroup,
    piece: PieceLabel,
    table: &SupportTable,
) -> Result<Vec<CellLabel>> {
    let n = piece_matrix(group, piece)?.minus_identity();
    if !n.is_nonnegative() {
        return Err(Error::Consistency(
            "ρ(u) - 1 has a negative entry for a unipotent point".into(),
        ));
    }
    let mut out = Vec::new();
    for ((v, w), support) in table.iter() {
        if family_meets_kernel(&n, support) {
            out.push(CellLabel::new(group, v, w)?);
        }
    }
    crate::springer::sort_cells(group, &mut out);
    Ok(out)
}

pub fn fixed_cell_atlas(group: &WeylGroup, piece: PieceLabel) -> Result<Vec<CellLabel>> {
    fixed_cell_atlas_with(group, piece, &SupportTable::stored(group)?)
}

/// Exact rank by Gaussian elimination.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &pivot;
                for k in c..cols {
                    let sub = &f * &m[rank][k];
                    m[r][k] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Whether two matrices have the same kernel.
fn same_kernel(a: &RepMatrix, b: &RepMatrix) -> bool {
    let ra = rank(&a.entries);
    let rb = rank(&b.entries);
    let stacked: Vec<Vec<Rational>> = a.entries.iter().chain(&b.entries).cloned().collect();
    ra == rb && rank(&stacked) == ra
}

/// One line of the verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    pub(crate) fn new(name: &str, failures: Vec<String>, ok_detail: String) -> Self {
        CheckResult {
            name: name.to_string(),
            passed: failures.is_empty(),
            detail: if failures.is_empty() {
                ok_detail
            } else {
                failures.join("; ")
            },
        }
    }
}

fn random_positive_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(
        BigInt::from(rng.gen_range(1..=9)),
        BigInt::from(rng.gen_range(1..=5)),
    )
}

fn check_generators() -> Result<CheckResult> {
    let mut failures = Vec::new();
    let params = [rat(0), rat(1), rat(2), Rational::new(1.into(), 3.into())];
    for i in 1..=2 {
        for a in &params {
            let x = generator_matrix(GeneratorKind::X, i, a)?;
            let y = generator_matrix(GeneratorKind::Y, i, a)?;
            for (name, m) in [("x", &x), ("y", &y)] {
                if !m.is_nonnegative() {
                    failures.push(format!("{name}_{i}({a}) has a negative entry"));
                }
                let n = m.minus_identity();
                let mut p = n.clone();
                for _ in 0..DIM {
                    p = p.mul(&n);
                }
                if !p.is_zero() {
                    failures.push(format!("{name}_{i}({a}) is not unipotent"));
                }
            }
            if x.phi_conjugate().entries != y.entries {
                failures.push(format!("φ does not exchange x_{i}({a}) and y_{i}({a})"));
            }
        }
        let zero = generator_matrix(GeneratorKind::Y, i, &rat(0))?;
        if zero.entries != RepMatrix::identity().entries {
            failures.push(format!("y_{i}(0) is not the identity"));
        }
    }
    let (s1, s2) = (sdot(1)?, sdot(2)?);
    if s1.mul(&s2).mul(&s1) != s2.mul(&s1).mul(&s2) {
        failures.push("ṡ_1, ṡ_2 violate the braid relation".into());
    }
    Ok(CheckResult::new(
        "generator tables",
        failures,
        "nonnegative, unipotent, φ-symmetric; braid relation holds".into(),
    ))
}

fn check_monoid_positivity(rng: &mut ChaCha8Rng) -> Result<CheckResult> {
    let mut failures = Vec::new();
    for trial in 0..500 {
        let len = rng.gen_range(1..=8);
        let mut g = RepMatrix::identity();
        for _ in 0..len {
            let kind = if rng.gen_bool(0.5) {
                GeneratorKind::X
            } else {
                GeneratorKind::Y
            };
            let a = if rng.gen_bool(0.1) {
                rat(0)
            } else {
                random_positive_rational(rng)
            };
            g = g.mul(&generator_matrix(kind, rng.gen_range(1..=2), &a)?);
        }
        if !g.is_nonnegative() {
            failures.push(format!("product {trial} has a negative entry"));
        }
    }
    Ok(CheckResult::new(
        "monoid positivity",
        failures,
        "500 random products are entrywise nonnegative".into(),
    ))
}

fn check_parameter_collapse() -> Result<CheckResult> {
    let mut failures = Vec::new();
    let params = [rat(2), Rational::new(1.into(), 3.into())];
    for kind in [GeneratorKind::X, GeneratorKind::Y] {
        for i in 1..=2 {
            let base = generator_matrix(kind, i, &rat(1))?.minus_identity();
            for a in &params {
                let other = generator_matrix(kind, i, a)?.minus_identity();
                if !same_kernel(&base, &other) {
                    failures.push(format!("{kind:?}_{i}: fixed space at a={a} differs from a=1"));
                }
            }
        }
    }
    Ok(CheckResult::new(
        "parameter collapse",
        failures,
        "fixed spaces of x_i(a), y_i(a) agree for a ∈ {1, 2, 1/3}".into(),
    ))
}

fn fixed_families(n: &RepMatrix, table: &SupportTable) -> Vec<(WeylElement, WeylElement)> {
    table
        .iter()
        .filter(|&(_, s)| family_meets_kernel(n, s))
        .map(|(k, _)| k)
        .collect()
}

fn check_intersection_law(table: &SupportTable, rng: &mut ChaCha8Rng) -> Result<CheckResult> {
    let mut failures = Vec::new();
    let random_unipotent = |rng: &mut ChaCha8Rng| -> Result<RepMatrix> {
        let mut g = RepMatrix::identity();
        for _ in 0..rng.gen_range(0..=3) {
            let kind = if rng.gen_bool(0.5) {
                GeneratorKind::X
            } else {
                GeneratorKind::Y
            };
            g = g.mul(&generator_matrix(kind, rng.gen_range(1..=2), &random_positive_rational(rng))?);
        }
        Ok(g)
    };
    for trial in 0..100 {
        let u1 = random_unipotent(rng)?;
        let u2 = random_unipotent(rng)?;
        let whole = fixed_families(&u1.mul(&u2).minus_identity(), table);
        let a = fixed_families(&u1.minus_identity(), table);
        let b = fixed_families(&u2.minus_identity(), table);
        let both: Vec<_> = a.into_iter().filter(|k| b.contains(k)).collect();
        if whole != both {
            failures.push(format!("trial {trial}: fixed families of u'u'' differ"));
        }
    }
    Ok(CheckResult::new(
        "intersection law",
        failures,
        "100 random pairs u', u'': fixed families of u'u'' = intersection".into(),
    ))
}

fn check_mr_supports(
    group: &WeylGroup,
    table: &SupportTable,
    rng: &mut ChaCha8Rng,
) -> Result<CheckResult> {
    let mut failures = Vec::new();
    for ((v, w), expected) in table.iter() {
        let words = group.reduced_words(w);
        for trial in 0..10 {
            let word = &words[trial % words.len()];
            let k = group.length(w) - group.length(v);
            let params: Vec<Rational> = if trial == 0 {
                vec![rat(1); k]
            } else {
                (0..k).map(|_| random_positive_rational(rng)).collect()
            };
            let vec = mr_vector(group, v, w, word, &params)?.normalized();
            let label = format!("({}, {})", short_word(group, v), short_word(group, w));
            if !vec.is_nonnegative() || !check_cx_relations(&vec)? {
                failures.push(format!("{label}: chart point leaves the cone"));
            }
            if vec.support() != expected {
                failures.push(format!(
                    "{label}: support {:?} != table {:?}",
                    support_names(vec.support()),
                    support_names(expected)
                ));
                break;
            }
        }
    }
    Ok(CheckResult::new(
        "chart supports",
        failures,
        format!("{} families × 10 parameter vectors match the table", table.len()),
    ))
}

fn check_intersection_identity(group: &WeylGroup, table: &SupportTable) -> Result<CheckResult> {
    let mut failures = Vec::new();
    let (e, w0) = (group.identity(), group.longest());
    for ((v, w), s) in table.iter() {
        let lhs = table.lookup(group, v, w0)? & table.lookup(group, e, w)?;
        if lhs != s {
            failures.push(format!(
                "[[{}, {}]] != [[v, w_I]] ∩ [[e, w]]",
                short_word(group, v),
                short_word(group, w)
            ));
        }
    }
    Ok(CheckResult::new(
        "support intersection identity",
        failures,
        "[[v,w]] = [[v,w_I]] ∩ [[e,w]] for all 19 cells".into(),
    ))
}

fn check_beta(group: &WeylGroup, table: &SupportTable) -> Result<CheckResult> {
    let mut failures = Vec::new();
    let full = (1u16 << DIM) - 1;
    let minus = table.beta_minus(group)?;
    let plus = table.beta_plus(group)?;
    for (name, computed, stored) in [
        ("β⁻", &minus, &STORED_BETA_MINUS),
        ("β⁺", &plus, &STORED_BETA_PLUS),
    ] {
        for (z, s) in stored.iter() {
            let z = group.element(&parse_short_word(z))?;
            if computed[&z] != mask(s) {
                failures.push(format!(
                    "{name}_{} = {:?}, expected {:?}",
                    short_word(group, z),
                    support_names(computed[&z]),
                    support_names(mask(s))
                ));
            }
        }
        let total: u16 = computed.values().map(|&m| u16::from(m)).fold(0, |a, m| {
            if a & m != 0 {
                failures.push(format!("{name} parts overlap"));
            }
            a | m
        });
        if total != full {
            failures.push(format!("{name} parts do not cover the basis"));
        }
    }
    let (e, w0) = (group.identity(), group.longest());
    for w in group.elements() {
        let union = group
            .elements()
            .filter(|&z| group.bruhat_leq(z, w))
            .fold(0u8, |m, z| m | minus[&z]);
        if union != table.lookup(group, e, w)? {
            failures.push(format!("β⁻ parts below {} miss [[e, w]]", short_word(group, w)));
        }
        let union = group
            .elements()
            .filter(|&z| group.bruhat_leq(w, z))
            .fold(0u8, |m, z| m | plus[&z]);
        if union != table.lookup(group, w, w0)? {
            failures.push(format!("β⁺ parts above {} miss [[v, w_I]]", short_word(group, w)));
        }
    }
    Ok(CheckResult::new(
        "β± partitions",
        failures,
        "both partitions match the stored lists and reassemble the supports".into(),
    ))
}

fn check_cross_oracle(group: &WeylGroup, table: &SupportTable) -> Result<CheckResult> {
    let mut failures = Vec::new();
    let pieces = disjoint_pieces(group);
    for &piece in &pieces {
        let cone = fixed_cell_atlas_with(group, piece, table)?;
        let (j, jp) = piece.supports(group);
        let comb = enumerate_z(group, j, jp)?;
        if cone != comb {
            failures.push(format!(
                "piece ({}, {}): cone oracle gives {} cells, combinatorics {}",
                short_word(group, piece.z),
                short_word(group, piece.z_prime),
                cone.len(),
                comb.len()
            ));
        }
        let n = piece_matrix(group, piece)?.minus_identity();
        for cell in &comb {
            let k = cell.dim;
            let words = group.reduced_words(cell.w);
            let x = mr_vector(group, cell.v, cell.w, &words[0], &vec![rat(1); k])?;
            if !n.apply(&x).is_zero() {
                failures.push(format!(
                    "piece ({}, {}): chart point of ({}, {}) is not fixed",
                    short_word(group, piece.z),
                    short_word(group, piece.z_prime),
                    short_word(group, cell.v),
                    short_word(group, cell.w)
                ));
            }
        }
    }
    Ok(CheckResult::new(
        "19-family cross-oracle",
        failures,
        format!(
            "fixed families = Z_{{J,J'}} for all {} disjoint-support pieces",
            pieces.len()
        ),
    ))
}

/// Runs every check of the model against a support table.
pub fn verify_with_table(group: &WeylGroup, table: &SupportTable) -> Result<Vec<CheckResult>> {
    require_a2(group)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    Ok(vec![
        check_generators()?,
        check_monoid_positivity(&mut rng)?,
        check_parameter_collapse()?,
        check_intersection_law(table, &mut rng)?,
        check_mr_supports(group, table, &mut rng)?,
        check_intersection_identity(group, table)?,
        check_beta(group, table)?,
        check_cross_oracle(group, table)?,
    ])
}

/// The stored table with the entry of `(s_1, s_1 s_2)` replaced by
/// `{X-1}`; a negative control for [`verify_with_table`].
pub fn corrupted_table(group: &WeylGroup) -> Result<SupportTable> {
    Ok(SupportTable::stored(group)?.with_entry(
        group.element(&[1])?,
        group.element(&[1, 2])?,
        mask(&[1]),
    ))
}

pub fn verify(group: &WeylGroup) -> Result<Vec<CheckResult>> {
    verify_with_table(group, &SupportTable::stored(group)?)
}

/// Computes the supports from the chart with unit parameters, independently
/// of the stored table.
pub fn computed_supports(group: &WeylGroup) -> Result<HashMap<(WeylElement, WeylElement), u8>> {
    require_a2(group)?;
    let mut out = HashMap::new();
    for (v, w) in group.bruhat_pairs() {
        let k = group.length(w) - group.length(v);
        let word = group.word(w).to_vec();
        let x = mr_vector(group, v, w, &word, &vec![rat(1); k])?;
        out.insert((v, w), x.support());
    }
    Ok(out)
}
