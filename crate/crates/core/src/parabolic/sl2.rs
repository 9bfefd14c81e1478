//! The explicit section over positive `(b, c)` for SL₂.
//!
//! For `z, b, c > 0` there is a unique `ε > 0` with
//! `ε² + ε(bz + c/z) - 1 = 0`. Setting `a = ε + c/z`, `d = (bc + 1)/a`
//! gives a totally positive matrix `[[a, b], [c, d]]` fixing the line
//! through `(1, z)`.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Sl2Section {
    pub epsilon: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

fn close(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol * x.abs().max(y.abs()).max(1.0)
}

/// `ad - bc = 1` up to rounding in the two products.
fn unimodular(a: f64, b: f64, c: f64, d: f64, tol: f64) -> bool {
    (a * d - b * c - 1.0).abs() <= tol * (a * d).abs().max((b * c).abs()).max(1.0)
}

pub fn sl2_section_solve(z: f64, b: f64, c: f64) -> Result<Sl2Section> {
    if !(z > 0.0 && b > 0.0 && c > 0.0) || !(z.is_finite() && b.is_finite() && c.is_finite()) {
        return Err(Error::validation(format!(
            "z, b, c must be positive and finite, got {z}, {b}, {c}"
        )));
    }
    let p = b * z + c / z;
    // Positive root of ε² + pε - 1, in the cancellation-free form.
    let epsilon = 2.0 / (p + (p * p + 4.0).sqrt());
    let a = epsilon + c / z;
    let d = (b * c + 1.0) / a;
    let s = Sl2Section { epsilon, a, b, c, d };
    if !unimodular(a, b, c, d, 1e-12) {
        return Err(Error::verification(format!("determinant {} is not 1", a * d - b * c)));
    }
    if !(a > 0.0 && d > 0.0) {
        return Err(Error::verification("section matrix has a nonpositive entry"));
    }
    if !close(c + d * z, z * (a + b * z), 1e-10) {
        return Err(Error::verification("section matrix does not fix the line (1, z)"));
    }
    Ok(s)
}

/// Recovers `(z, b, c, ε)` from a totally positive unimodular 2×2 matrix,
/// with `(1, z)` its dominant eigenvector.
pub fn sl2_section_inverse(a: f64, b: f64, c: f64, d: f64) -> Result<(f64, f64, f64, f64)> {
    if !(a > 0.0 && b > 0.0 && c > 0.0 && d > 0.0) || !unimodular(a, b, c, d, 1e-10) {
        return Err(Error::validation(
            "expected a totally positive matrix of determinant 1",
        ));
    }
    // λ - a for the larger eigenvalue λ, using (a - d)² + 4bc = tr² - 4.
    let diff = a - d;
    let root = (diff * diff + 4.0 * b * c).sqrt();
    let lambda_minus_a = if diff >= 0.0 {
        2.0 * b * c / (diff + root)
    } else {
        (root - diff) / 2.0
    };
    let z = lambda_minus_a / b;
    Ok((z, b, c, a - c / z))
}
