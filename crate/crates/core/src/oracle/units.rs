use nalgebra::{DMatrix, DVector};

use super::dense::{kron_vec, max_entangled, perm_operator, permute_vector, total_dim, DenseOperator, DENSE_LIMIT, VECTOR_LIMIT};
use crate::error::{Error, Result};
use crate::linalg;
use crate::permgroup::{all_permutations, factorial, Partition, Permutation};
use crate::walled::{EmbeddingContext, RANK_TOL};
use crate::yor::YorTable;

/// The operators `E_ij^α = (m_α/k!) Σ_g φ^α_ij(g) V(g)` on `k = |α|` factors.
#[derive(Clone, Debug)]
pub struct YoungUnits {
    pub alpha: Partition,
    pub d: usize,
    pub m: usize,
    /// `units[i * m + j] = E_ij`, 0-based tableau indices.
    units: Vec<DMatrix<f64>>,
}

impl YoungUnits {
    pub fn new(alpha: &Partition, d: usize) -> Result<Self> {
        let k = alpha.weight();
        let dim = total_dim(k, d, DENSE_LIMIT)?;
        let table = YorTable::new(alpha);
        let m = table.dim();
        let mut units = vec![DMatrix::zeros(dim, dim); m * m];
        let scale = m as f64 / factorial(k) as f64;
        for g in all_permutations(k) {
            let phi = table.matrix(&g)?;
            let v = perm_operator(&g, d)?.entries;
            for i in 0..m {
                for j in 0..m {
                    let c = phi[(i, j)];
                    if c != 0.0 {
                        units[i * m + j] += &v * (scale * c);
                    }
                }
            }
        }
        Ok(YoungUnits { alpha: alpha.clone(), d, m, units })
    }

    /// `E_ij`, 1-based tableau indices.
    pub fn unit(&self, i: usize, j: usize) -> &DMatrix<f64> {
        &self.units[(i - 1) * self.m + (j - 1)]
    }

    /// Multiplicity of `α` in `(C^d)^{⊗k}`, read off as `tr E_11`.
    pub fn multiplicity(&self) -> usize {
        self.unit(1, 1).trace().round() as usize
    }

    /// Orthonormal basis of the range of `E_11`, by Gram–Schmidt over its
    /// columns in index order.
    pub fn range_basis(&self) -> Vec<DVector<f64>> {
        let e = self.unit(1, 1);
        let mut basis: Vec<DVector<f64>> = Vec::new();
        for c in 0..e.ncols() {
            let mut v = e.column(c).clone_owned();
            for b in &basis {
                let p = b.dot(&v);
                v -= b * p;
            }
            let norm = v.norm();
            if norm > 1e-8 {
                basis.push(v / norm);
            }
        }
        basis
    }
}

/// The vectors `ψ_i^a(α, r) = V(π_a)(φ_i(α, r) ⊗ Σ_l |l l⟩)` on `n` factors.
#[derive(Clone, Debug)]
pub struct IrrepVectorFamily {
    pub alpha: Partition,
    pub n: usize,
    pub d: usize,
    pub m: usize,
    /// `phi[r][i]`, orthonormal vectors on `n−2` factors.
    pub phi: Vec<Vec<DVector<f64>>>,
    /// `psi[r][(a−1)·m + i]`.
    pub psi: Vec<Vec<DVector<f64>>>,
}

impl IrrepVectorFamily {
    pub fn new(alpha: &Partition, ctx: &EmbeddingContext) -> Result<Self> {
        let (n, d) = (ctx.n, ctx.d);
        if alpha.weight() + 2 != n {
            return Err(Error::InvalidPartition(format!("{alpha} must be a partition of {}", n - 2)));
        }
        total_dim(n, d, VECTOR_LIMIT)?;
        let units = YoungUnits::new(alpha, d)?;
        let m = units.m;
        let phi: Vec<Vec<DVector<f64>>> = units
            .range_basis()
            .into_iter()
            .map(|u| (1..=m).map(|i| units.unit(i, 1) * &u).collect())
            .collect();
        let ent = max_entangled(d);
        let pis: Vec<Permutation> = (1..n).map(|a| ctx.pi(a)).collect::<Result<_>>()?;
        let mut psi = Vec::with_capacity(phi.len());
        for copy in &phi {
            let mut row = Vec::with_capacity((n - 1) * m);
            for pi in &pis {
                for v in copy {
                    row.push(permute_vector(pi, d, &kron_vec(v, &ent))?);
                }
            }
            psi.push(row);
        }
        Ok(IrrepVectorFamily { alpha: alpha.clone(), n, d, m, phi, psi })
    }

    pub fn multiplicity(&self) -> usize {
        self.psi.len()
    }

    pub fn vector(&self, r: usize, leg: usize, tableau: usize) -> &DVector<f64> {
        &self.psi[r][(leg - 1) * self.m + (tableau - 1)]
    }

    /// `⟨ψ_x(r) | ψ_y(s)⟩` over the whole formal basis.
    pub fn gram(&self, r: usize, s: usize) -> DMatrix<f64> {
        let k = self.psi[r].len();
        DMatrix::from_fn(k, k, |x, y| self.psi[r][x].dot(&self.psi[s][y]))
    }

    /// `v_xy = Σ_r |ψ_x(r)⟩⟨ψ_y(r)|` as a dense operator.
    pub fn v_operator(&self, x: usize, y: usize) -> DMatrix<f64> {
        let dim = self.psi[0][0].len();
        let mut out = DMatrix::zeros(dim, dim);
        for copy in &self.psi {
            out += &copy[x] * copy[y].transpose();
        }
        out
    }

    /// Operator `F_k: |φ⟩ ↦ V(π_k)(|φ⟩ ⊗ Σ_l |l l⟩)` from `n−2` to `n` factors.
    pub fn lift(ctx: &EmbeddingContext, k: usize) -> Result<DMatrix<f64>> {
        let (n, d) = (ctx.n, ctx.d);
        let small = total_dim(n - 2, d, DENSE_LIMIT)?;
        let big = total_dim(n, d, DENSE_LIMIT)?;
        let ent = max_entangled(d);
        let pi = ctx.pi(k)?;
        let mut out = DMatrix::zeros(big, small);
        for c in 0..small {
            let mut e = DVector::zeros(small);
            e[c] = 1.0;
            out.set_column(c, &permute_vector(&pi, d, &kron_vec(&e, &ent))?);
        }
        Ok(out)
    }
}

/// Matrix of an operator on one irrep, read off the explicit vectors.
#[derive(Clone, Debug)]
pub struct OracleElements {
    /// Kept positions of the formal basis.
    pub basis: Vec<usize>,
    pub matrix: DMatrix<f64>,
    /// Largest `‖Xψ_z − Σ_y M_yz ψ_y‖` over kept `z` and all copies `r`.
    pub residual: f64,
}

/// Extracts the matrix of `x` on the irrep `α` through the biorthogonal
/// pairing built from the family's own Gram matrix.
pub fn oracle_matrix_elements(x: &DenseOperator, family: &IrrepVectorFamily) -> Result<OracleElements> {
    if family.multiplicity() == 0 {
        return Err(Error::AbsentIrrep(family.alpha.to_string()));
    }
    let q = family.gram(0, 0);
    let basis = if linalg::rank(&q, RANK_TOL) == q.nrows() {
        (0..q.nrows()).collect()
    } else {
        linalg::greedy_independent(&q, RANK_TOL)
    };
    let q_ii = linalg::select(&q, &basis, &basis);
    let dual = q_ii.try_inverse().ok_or_else(|| Error::DegenerateGram {
        alpha: family.alpha.to_string(),
        rank: basis.len(),
        full: q.nrows(),
    })?;
    let kept = |r: usize| -> Vec<&DVector<f64>> { basis.iter().map(|&b| &family.psi[r][b]).collect() };
    let vecs = kept(0);
    let images: Vec<DVector<f64>> = vecs.iter().map(|v| x.apply(v)).collect();
    let overlaps = DMatrix::from_fn(basis.len(), basis.len(), |y, z| vecs[y].dot(&images[z]));
    let matrix = &dual * overlaps;
    let mut residual: f64 = 0.0;
    for r in 0..family.multiplicity() {
        let vr = kept(r);
        for z in 0..basis.len() {
            let mut diff = x.apply(vr[z]);
            for y in 0..basis.len() {
                diff -= vr[y] * matrix[(y, z)];
            }
            residual = residual.max(diff.norm());
        }
    }
    Ok(OracleElements { basis, matrix, residual })
}
