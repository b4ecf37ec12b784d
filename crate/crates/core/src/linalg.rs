//! Small dense helpers shared by the numeric modules.

use nalgebra::{DMatrix, DVector};

/// Row-major copy of a matrix.
pub fn rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows())
        .map(|i| m.row(i).iter().copied().collect())
        .collect()
}

/// Builds a matrix from row-major nested vectors. All rows must have equal
/// length.
pub fn from_rows(rows: &[Vec<f64>]) -> DMatrix<f64> {
    let nr = rows.len();
    let nc = rows.first().map_or(0, Vec::len);
    DMatrix::from_fn(nr, nc, |i, j| rows[i][j])
}

/// Numerical rank: singular values at most `rel_tol · σ_max` count as zero.
pub fn rank(m: &DMatrix<f64>, rel_tol: f64) -> usize {
    if m.is_empty() {
        return 0;
    }
    let sv = m.clone().singular_values();
    let max = sv.iter().copied().fold(0.0, f64::max);
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * max).count()
}

/// Smallest eigenvalue of a symmetric matrix.
pub fn min_eigenvalue(m: &DMatrix<f64>) -> f64 {
    m.clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

/// Sorted eigenvalues of a symmetric matrix.
pub fn sorted_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let mut ev: Vec<f64> = m.clone().symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Eigenvalues of `b⁻¹ a` for symmetric `a` and positive definite `b`,
/// sorted ascending. Returns `None` when `b` is not positive definite.
pub fn generalized_symmetric_eigenvalues(a: &DMatrix<f64>, b: &DMatrix<f64>) -> Option<Vec<f64>> {
    let l = b.clone().cholesky()?.l();
    let l_inv = l.try_inverse()?;
    let s = &l_inv * a * l_inv.transpose();
    let sym = (&s + s.transpose()) * 0.5;
    Some(sorted_eigenvalues(&sym))
}

/// Greedy choice of linearly independent columns of a positive
/// semidefinite Gram matrix, scanning in index order.
///
/// A column is kept when its residual norm after projecting out the kept
/// ones exceeds `rel_tol` times the largest diagonal entry. This is the
/// pivot order of a Cholesky factorisation that never reorders.
pub fn greedy_independent(gram: &DMatrix<f64>, rel_tol: f64) -> Vec<usize> {
    let n = gram.nrows();
    let scale = (0..n).map(|i| gram[(i, i)].abs()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Vec::new();
    }
    let mut kept: Vec<usize> = Vec::new();
    // columns of the partial Cholesky factor, one per kept index
    let mut factor: Vec<DVector<f64>> = Vec::new();
    for j in 0..n {
        let mut residual = gram[(j, j)];
        for l in &factor {
            residual -= l[j] * l[j];
        }
        if residual > rel_tol * scale {
            let pivot = residual.sqrt();
            let mut col = DVector::zeros(n);
            for i in 0..n {
                let mut v = gram[(i, j)];
                for l in &factor {
                    v -= l[i] * l[j];
                }
                col[i] = v / pivot;
            }
            factor.push(col);
            kept.push(j);
        }
    }
    kept
}

/// Sub-matrix on the given row and column indices.
pub fn select(m: &DMatrix<f64>, rows: &[usize], cols: &[usize]) -> DMatrix<f64> {
    DMatrix::from_fn(rows.len(), cols.len(), |i, j| m[(rows[i], cols[j])])
}

/// Kronecker product.
pub fn kron(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    a.kronecker(b)
}
