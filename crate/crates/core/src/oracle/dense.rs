use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::permgroup::Permutation;

/// Largest total dimension `d^n` for which vectors are built.
pub const VECTOR_LIMIT: usize = 100_000;
/// Largest total dimension `d^n` for which dense `d^n × d^n` matrices are
/// built (a 4096² matrix of doubles takes 128 MiB).
pub const DENSE_LIMIT: usize = 4096;

/// A dense real operator on `(C^d)^{⊗n}`. Basis states are ordered with
/// factor 1 as the most significant digit.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseOperator {
    pub n: usize,
    pub d: usize,
    pub entries: DMatrix<f64>,
}

/// `d^n`, or a size-guard error past `limit`.
pub fn total_dim(n: usize, d: usize, limit: usize) -> Result<usize> {
    let mut dim: usize = 1;
    for _ in 0..n {
        dim = dim.checked_mul(d).filter(|&x| x <= limit).ok_or(Error::SizeGuard {
            dim: d.saturating_pow(n as u32),
            limit,
        })?;
    }
    Ok(dim)
}

/// Image of the basis index `i` under `V(σ)`: the digit in slot `k` moves
/// to slot `σ(k)`.
fn permute_index(sigma: &Permutation, d: usize, i: usize) -> usize {
    let n = sigma.degree();
    let mut digits = vec![0usize; n];
    let mut rest = i;
    for slot in (0..n).rev() {
        digits[slot] = rest % d;
        rest /= d;
    }
    let mut out = vec![0usize; n];
    for (k, &x) in digits.iter().enumerate() {
        out[sigma.apply(k + 1) - 1] = x;
    }
    out.iter().fold(0, |acc, &x| acc * d + x)
}

/// `V(σ) v` without forming the matrix.
pub fn permute_vector(sigma: &Permutation, d: usize, v: &DVector<f64>) -> Result<DVector<f64>> {
    let dim = total_dim(sigma.degree(), d, VECTOR_LIMIT)?;
    if v.len() != dim {
        return Err(Error::DegreeMismatch { left: v.len(), right: dim });
    }
    let mut out = DVector::zeros(dim);
    for i in 0..dim {
        out[permute_index(sigma, d, i)] = v[i];
    }
    Ok(out)
}

impl DenseOperator {
    pub fn identity(n: usize, d: usize) -> Result<Self> {
        let dim = total_dim(n, d, DENSE_LIMIT)?;
        Ok(DenseOperator { n, d, entries: DMatrix::identity(dim, dim) })
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn mul(&self, other: &DenseOperator) -> Result<DenseOperator> {
        if self.n != other.n || self.d != other.d {
            return Err(Error::DegreeMismatch { left: self.dim(), right: other.dim() });
        }
        Ok(DenseOperator { n: self.n, d: self.d, entries: &self.entries * &other.entries })
    }

    pub fn scale(&self, c: f64) -> DenseOperator {
        DenseOperator { n: self.n, d: self.d, entries: &self.entries * c }
    }

    pub fn apply(&self, v: &DVector<f64>) -> DVector<f64> {
        &self.entries * v
    }
}

/// The permutation operator `V(σ)`, with `V(σ)V(τ) = V(σ∘τ)`.
pub fn perm_operator(sigma: &Permutation, d: usize) -> Result<DenseOperator> {
    let n = sigma.degree();
    let dim = total_dim(n, d, DENSE_LIMIT)?;
    let mut entries = DMatrix::zeros(dim, dim);
    for i in 0..dim {
        entries[(permute_index(sigma, d, i), i)] = 1.0;
    }
    Ok(DenseOperator { n, d, entries })
}

/// Transposes the row and column indices of the last factor.
pub fn partial_transpose_last(x: &DenseOperator) -> DenseOperator {
    let d = x.d;
    let dim = x.dim();
    let mut out = DMatrix::zeros(dim, dim);
    for r in 0..dim {
        let (rh, rl) = (r / d, r % d);
        for c in 0..dim {
            let (ch, cl) = (c / d, c % d);
            out[(rh * d + cl, ch * d + rl)] = x.entries[(r, c)];
        }
    }
    DenseOperator { n: x.n, d, entries: out }
}

/// `V'(σ)`: the permutation operator partially transposed on the last factor.
pub fn transposed_perm_operator(sigma: &Permutation, d: usize) -> Result<DenseOperator> {
    Ok(partial_transpose_last(&perm_operator(sigma, d)?))
}

/// Traces out factors `n−1` and `n`.
pub fn partial_trace_last_two(x: &DenseOperator) -> Result<DenseOperator> {
    if x.n < 2 {
        return Err(Error::Precondition("partial trace over two factors needs n >= 2".into()));
    }
    let dd = x.d * x.d;
    let small = x.dim() / dd;
    let mut out = DMatrix::zeros(small, small);
    for r in 0..small {
        for c in 0..small {
            out[(r, c)] = (0..dd).map(|k| x.entries[(r * dd + k, c * dd + k)]).sum();
        }
    }
    Ok(DenseOperator { n: x.n - 2, d: x.d, entries: out })
}

/// `Σ_l |l l⟩`, the unnormalised maximally entangled vector on two factors.
pub fn max_entangled(d: usize) -> DVector<f64> {
    let mut v = DVector::zeros(d * d);
    for l in 0..d {
        v[l * d + l] = 1.0;
    }
    v
}

pub fn kron_vec(a: &DVector<f64>, b: &DVector<f64>) -> DVector<f64> {
    let mut out = DVector::zeros(a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i * b.len() + j] = x * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::all_permutations;

    #[test]
    fn swap_on_two_qubits() {
        let v = perm_operator(&Permutation::parse_cycles(2, "(1 2)").unwrap(), 2).unwrap();
        let mut swap = DMatrix::zeros(4, 4);
        for (i, j) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
            swap[(i, j)] = 1.0;
        }
        assert_eq!(v.entries, swap);
    }

    #[test]
    fn homomorphism_and_trace() {
        for n in 1..=4 {
            let perms = all_permutations(n);
            for d in [2usize, 3] {
                let ops: Vec<_> = perms.iter().map(|p| perm_operator(p, d).unwrap()).collect();
                for (i, p) in perms.iter().enumerate() {
                    let tr: f64 = ops[i].entries.trace();
                    assert_eq!(tr, (d as f64).powi(p.cycle_count() as i32));
                    for (j, q) in perms.iter().enumerate() {
                        let lhs = ops[i].mul(&ops[j]).unwrap();
                        assert_eq!(lhs, perm_operator(&p.compose(q).unwrap(), d).unwrap());
                    }
                }
                assert_eq!(ops[0], DenseOperator::identity(n, d).unwrap());
            }
        }
    }

    #[test]
    fn slot_convention() {
        // V(σ) sends |x⟩ in slot k to slot σ(k)
        let sigma = Permutation::parse_cycles(3, "(1 2 3)").unwrap();
        let d = 3;
        let mut v = DVector::zeros(27);
        v[9 * 2] = 1.0; // |2 0 0⟩
        let w = permute_vector(&sigma, d, &v).unwrap();
        assert_eq!(w[3 * 2], 1.0); // |0 2 0⟩
        assert_eq!(w, perm_operator(&sigma, d).unwrap().apply(&v));
    }

    #[test]
    fn partial_transpose_facts() {
        let d = 3;
        let pt = transposed_perm_operator(&Permutation::parse_cycles(2, "(1 2)").unwrap(), d).unwrap();
        let phi = max_entangled(d);
        assert_eq!(pt.entries, &phi * phi.transpose());
        for p in all_permutations(3) {
            let v = perm_operator(&p.extend(4), 2).unwrap();
            assert_eq!(partial_transpose_last(&v), v);
            let w = perm_operator(&p.extend(4).compose(&Permutation::parse_cycles(4, "(1 4)").unwrap()).unwrap(), 2).unwrap();
            assert_eq!(partial_transpose_last(&partial_transpose_last(&w)), w);
        }
    }

    #[test]
    fn partial_trace_of_identity() {
        let id = DenseOperator::identity(4, 2).unwrap();
        let t = partial_trace_last_two(&id).unwrap();
        assert_eq!(t.entries, DMatrix::identity(4, 4) * 4.0);
        assert_eq!(t.n, 2);
    }

    #[test]
    fn guards() {
        assert!(matches!(perm_operator(&Permutation::identity(13), 2), Err(Error::SizeGuard { .. })));
        assert!(permute_vector(&Permutation::identity(16), 2, &DVector::zeros(1 << 16)).is_ok());
        assert!(matches!(total_dim(17, 2, VECTOR_LIMIT), Err(Error::SizeGuard { .. })));
    }
}
