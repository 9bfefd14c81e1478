//! Exact rational matrices and polynomials, and certified real roots.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;
pub type ExactMatrix = Vec<Vec<Rational>>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn identity(n: usize) -> ExactMatrix {
    (0..n)
        .map(|r| (0..n).map(|c| if r == c { rat(1) } else { rat(0) }).collect())
        .collect()
}

pub fn mat_mul(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    let mut out = vec![vec![Rational::zero(); m]; n];
    for (r, row) in out.iter_mut().enumerate() {
        for j in 0..k {
            let x = &a[r][j];
            if x.is_zero() {
                continue;
            }
            for (c, slot) in row.iter_mut().enumerate() {
                if !b[j][c].is_zero() {
                    *slot += x * &b[j][c];
                }
            }
        }
    }
    out
}

pub fn trace(a: &ExactMatrix) -> Rational {
    (0..a.len()).fold(Rational::zero(), |acc, k| acc + &a[k][k])
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Determinant by Gaussian elimination over `Q`.
pub fn det(a: &ExactMatrix) -> Rational {
    let n = a.len();
    let mut m = a.clone();
    let mut d = rat(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        let pivot = m[c][c].clone();
        d *= &pivot;
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &pivot;
            for k in c..n {
                let sub = &f * &m[c][k];
                m[r][k] -= sub;
            }
        }
    }
    d
}

/// Inverse by Gauss–Jordan elimination; `None` for singular input.
pub fn inverse(a: &ExactMatrix) -> Option<ExactMatrix> {
    let n = a.len();
    let mut m: ExactMatrix = a
        .iter()
        .zip(identity(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(p, c);
        let pivot = m[c][c].clone();
        for x in m[c].iter_mut() {
            *x /= &pivot;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in 0..2 * n {
                    let sub = &f * &m[c][k];
                    m[r][k] -= sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// A polynomial over `Q`, coefficients from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(pub Vec<Rational>);

impl Poly {
    fn trimmed(mut c: Vec<Rational>) -> Poly {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::trimmed(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lead(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn monic(&self) -> Poly {
        let l = self.lead();
        if l.is_zero() {
            return self.clone();
        }
        Poly(self.0.iter().map(|c| c / &l).collect())
    }

    pub fn derivative(&self) -> Poly {
        Poly::trimmed(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let z = Rational::zero();
        Poly::trimmed(
            (0..n)
                .map(|k| self.0.get(k).unwrap_or(&z) - other.0.get(k).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::trimmed(out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut rem = self.0.clone();
        let dl = d.lead();
        let dd = d.degree();
        if self.is_zero() || self.degree() < dd {
            return (Poly(Vec::new()), self.clone());
        }
        let mut q = vec![Rational::zero(); self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let c = &rem[k + dd] / &dl;
            if !c.is_zero() {
                for (j, x) in d.0.iter().enumerate() {
                    let sub = &c * x;
                    rem[k + j] -= sub;
                }
            }
            q[k] = c;
        }
        rem.truncate(dd);
        (Poly::trimmed(q), Poly::trimmed(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(to_f64).collect()
    }
}

/// Characteristic polynomial `det(x - A)` by the Faddeev–LeVerrier
/// recursion.
pub fn charpoly(a: &ExactMatrix) -> Poly {
    let n = a.len();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = rat(1);
    // am holds A·M_{k-1}; M_k = A·M_{k-1} + c_{n-k+1}·I.
    let mut am = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        let mut m = am;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        am = mat_mul(a, &m);
        coeffs[n - k] = -trace(&am) / rat(k as i64);
    }
    Poly::trimmed(coeffs)
}

/// Squarefree factorization `f = Π a_i^i` (Yun), nonconstant factors only,
/// each monic and paired with its multiplicity.
pub fn squarefree_factors(f: &Poly) -> Vec<(Poly, usize)> {
    let f = f.monic();
    if f.degree() == 0 {
        return Vec::new();
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_rem(&a0).0;
    let c = df.div_rem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree() > 0 {
        let a = b.gcd(&d);
        let nb = b.div_rem(&a).0;
        let nc = d.div_rem(&a).0;
        if a.degree() > 0 {
            out.push((a, i));
        }
        d = nc.sub(&nb.derivative());
        b = nb;
        i += 1;
    }
    out
}

/// Sturm sequence of a squarefree polynomial. Remainders are negated and
/// divided by the absolute value of their leading coefficient, which keeps
/// the signs intact.
fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let k = seq.len();
        if seq[k - 1].degree() == 0 {
            break;
        }
        let (_, r) = seq[k - 2].div_rem(&seq[k - 1]);
        if r.is_zero() {
            break;
        }
        let c = r.lead().abs();
        seq.push(Poly::trimmed(r.0.iter().map(|x| -x / &c).collect()));
    }
    seq
}

fn sign(x: &Rational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn count_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn changes_at(seq: &[Poly], x: &Rational) -> usize {
    count_changes(seq.iter().map(|q| sign(&q.eval(x))))
}

/// A power of two strictly larger than the absolute value of every root.
fn root_bound(p: &Poly) -> Rational {
    let lead = p.lead();
    let max = p.0[..p.degree()]
        .iter()
        .map(|c| (c / &lead).abs())
        .fold(Rational::zero(), |m, x| if x > m { x } else { m });
    let cauchy = max + rat(1);
    let mut b = rat(1);
    while b <= cauchy {
        b *= rat(2);
    }
    b
}

/// Narrows `(lo, hi]`, which holds exactly one simple root and has
/// `p(hi) != 0`, until the endpoints agree as floats.
fn refine(p: &Poly, mut lo: Rational, mut hi: Rational) -> f64 {
    let two = rat(2);
    let s_hi = sign(&p.eval(&hi));
    for _ in 0..4096 {
        if to_f64(&lo) == to_f64(&hi) {
            break;
        }
        let mid = (&lo + &hi) / &two;
        match sign(&p.eval(&mid)) {
            0 => return to_f64(&mid),
            s if s == s_hi => hi = mid,
            _ => lo = mid,
        }
    }
    to_f64(&((lo + hi) / two))
}

/// All real roots of a squarefree polynomial, in decreasing order.
///
/// Roots are counted and isolated with a Sturm sequence and then bisected
/// with exact sign evaluation down to double precision, so every returned
/// value is within one rounding of a true root. Fails with a domain error
/// if any root is not real.
pub fn certified_real_roots(p: &Poly) -> Result<Vec<f64>> {
    let d = p.degree();
    if d == 0 {
        return Ok(Vec::new());
    }
    let seq = sturm_sequence(p);
    let b = root_bound(p);
    let (lo, hi) = (-b.clone(), b);
    let v_lo = changes_at(&seq, &lo);
    let v_hi = changes_at(&seq, &hi);
    let real = v_lo - v_hi;
    if real < d {
        return Err(Error::Domain(format!(
            "{} of {d} eigenvalues are not real",
            d - real
        )));
    }
    let two = rat(2);
    let mut roots = Vec::with_capacity(d);
    let mut stack = vec![(lo, v_lo, hi, v_hi)];
    while let Some((lo, v_lo, hi, v_hi)) = stack.pop() {
        match v_lo - v_hi {
            0 => {}
            1 => {
                if p.eval(&hi).is_zero() {
                    roots.push(to_f64(&hi));
                } else {
                    roots.push(refine(p, lo, hi));
                }
            }
            _ => {
                let mid = (&lo + &hi) / &two;
                let v_mid = changes_at(&seq, &mid);
                stack.push((lo, v_lo, mid.clone(), v_mid));
                stack.push((mid, v_mid, hi, v_hi));
            }
        }
    }
    roots.sort_by(|a, b| b.partial_cmp(a).expect("finite roots"));
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> Poly {
        Poly::trimmed(c.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn charpoly_of_small_matrices() {
        let a = vec![vec![rat(2), rat(2)], vec![rat(2), Rational::new(5.into(), 2.into())]];
        let p = charpoly(&a);
        assert_eq!(p.0, vec![rat(1), Rational::new((-9).into(), 2.into()), rat(1)]);
        assert_eq!(det(&a), rat(1));
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(2));
        assert_eq!(charpoly(&identity(3)), poly(&[-1, 3, -3, 1]));
    }

    #[test]
    fn yun_factorization() {
        // (x-1)^3 (x-2) (x+3)^2
        let f = poly(&[-1, 1])
            .mul(&poly(&[-1, 1]))
            .mul(&poly(&[-1, 1]))
            .mul(&poly(&[-2, 1]))
            .mul(&poly(&[3, 1]))
            .mul(&poly(&[3, 1]));
        let sf = squarefree_factors(&f);
        assert_eq!(
            sf,
            vec![(poly(&[-2, 1]), 1), (poly(&[3, 1]), 2), (poly(&[-1, 1]), 3)]
        );
    }

    #[test]
    fn certified_roots() {
        let p = poly(&[6, -5, 1]);
        let r = certified_real_roots(&p).unwrap();
        assert_eq!(r, vec![3.0, 2.0]);
        assert!(matches!(
            certified_real_roots(&poly(&[1, 0, 1])),
            Err(Error::Domain(_))
        ));
        // x^3 - 2: one real root
        assert!(certified_real_roots(&poly(&[-2, 0, 0, 1])).is_err());
        // (x^2 - 2)(x - 1/1000)
        let q = poly(&[-2, 0, 1]).mul(&Poly::trimmed(vec![Rational::new((-1).into(), 1000.into()), rat(1)]));
        let r = certified_real_roots(&q).unwrap();
        assert!((r[0] - 2f64.sqrt()).abs() <= f64::EPSILON * 2.0);
        assert!((r[1] - 1e-3).abs() <= 1e-3 * f64::EPSILON * 2.0);
        assert!((r[2] + 2f64.sqrt()).abs() <= f64::EPSILON * 2.0);
    }
}
