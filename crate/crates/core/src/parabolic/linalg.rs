//! Floating-point subspace helpers on top of nalgebra.

use nalgebra::DMatrix;

fn sorted_svd(m: &DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>, DMatrix<f64>) {
    let svd = m.clone().svd(true, true);
    let u = svd.u.expect("requested U");
    let v_t = svd.v_t.expect("requested V^T");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| {
        svd.singular_values[b]
            .partial_cmp(&svd.singular_values[a])
            .expect("finite singular values")
    });
    let values = order.iter().map(|&k| svd.singular_values[k]).collect();
    let u = DMatrix::from_fn(u.nrows(), order.len(), |r, c| u[(r, order[c])]);
    let v = DMatrix::from_fn(v_t.ncols(), order.len(), |r, c| v_t[(order[c], r)]);
    (values, u, v)
}

/// Orthonormal basis of the column span, keeping `rank` directions.
pub fn orthonormal_columns(m: &DMatrix<f64>, rank: usize) -> DMatrix<f64> {
    if rank == 0 || m.ncols() == 0 {
        return DMatrix::zeros(m.nrows(), 0);
    }
    let (_, u, _) = sorted_svd(m);
    u.columns(0, rank).into_owned()
}

/// Right null space of `m`.
///
/// With `dim = Some(k)` the `k` least significant right singular directions
/// are returned; otherwise every direction whose singular value is at most
/// `rel_tol` times the largest one (or `rel_tol` for a zero matrix).
pub fn null_space(m: &DMatrix<f64>, dim: Option<usize>, rel_tol: f64) -> DMatrix<f64> {
    let cols = m.ncols();
    if m.nrows() == 0 {
        return DMatrix::identity(cols, cols);
    }
    // Pad to at least square so that V is complete.
    let padded = if m.nrows() < cols {
        let mut p = DMatrix::zeros(cols, cols);
        p.rows_mut(0, m.nrows()).copy_from(m);
        p
    } else {
        m.clone()
    };
    let (values, _, v) = sorted_svd(&padded);
    let k = dim.unwrap_or_else(|| {
        let top = values.first().copied().unwrap_or(0.0).max(1.0);
        values.iter().filter(|&&s| s <= rel_tol * top).count()
    });
    v.columns(cols - k, k).into_owned()
}

/// Singular values in decreasing order.
pub fn singular_values(m: &DMatrix<f64>) -> Vec<f64> {
    sorted_svd(m).0
}

/// Spectral-norm distance between the orthogonal projectors onto the
/// column spans of two orthonormal bases.
pub fn subspace_distance(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    if a.ncols() != b.ncols() {
        return 1.0;
    }
    let pa = a * a.transpose();
    let pb = b * b.transpose();
    let diff = pa - pb;
    singular_values(&diff).first().copied().unwrap_or(0.0)
}

/// All maximal minors of an `n × k` matrix, rows chosen in lexicographic
/// order.
pub fn pluecker_coordinates(q: &DMatrix<f64>) -> Vec<f64> {
    let (n, k) = (q.nrows(), q.ncols());
    let mut out = Vec::new();
    let mut rows: Vec<usize> = (0..k).collect();
    if k == 0 || k > n {
        return out;
    }
    loop {
        let sub = DMatrix::from_fn(k, k, |r, c| q[(rows[r], c)]);
        out.push(sub.determinant());
        // Next k-subset.
        let mut i = k;
        while i > 0 && rows[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        rows[i - 1] += 1;
        for j in i..k {
            rows[j] = rows[j - 1] + 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_space_of_rank_one() {
        let m = DMatrix::from_row_slice(1, 3, &[1.0, 1.0, 0.0]);
        let n = null_space(&m, None, 1e-10);
        assert_eq!(n.ncols(), 2);
        assert!((&m * &n).norm() < 1e-12);
    }

    #[test]
    fn distances() {
        let a = DMatrix::from_column_slice(3, 1, &[1.0, 0.0, 0.0]);
        let b = DMatrix::from_column_slice(3, 1, &[-1.0, 0.0, 0.0]);
        assert!(subspace_distance(&a, &b) < 1e-12);
        let c = DMatrix::from_column_slice(3, 1, &[0.0, 1.0, 0.0]);
        assert!((subspace_distance(&a, &c) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pluecker_of_plane() {
        let q = DMatrix::from_row_slice(3, 2, &[1.0, 0.0, 0.0, 1.0, 1.0, 1.0]);
        let p = pluecker_coordinates(&q);
        assert_eq!(p.len(), 3);
        assert!((p[0] - 1.0).abs() < 1e-12);
        assert!((p[1] - 1.0).abs() < 1e-12);
        assert!((p[2] + 1.0).abs() < 1e-12);
    }
}
