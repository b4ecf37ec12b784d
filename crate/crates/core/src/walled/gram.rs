use nalgebra::DMatrix;
use serde::Serialize;

use super::embedding::EmbeddingContext;
use crate::error::{Error, Result};
use crate::linalg;
use crate::permgroup::Partition;
use crate::yor::YorTable;

/// Relative tolerance for rank decisions on Gram matrices.
pub const RANK_TOL: f64 = 1e-9;

/// The block matrix `Q(α)` with `Q[(a,i),(b,j)] = d^{δ_ab} φ^α_ij(χ_ab)`.
#[derive(Clone, Debug)]
pub struct GramBlockMatrix {
    pub alpha: Partition,
    pub n: usize,
    pub d: usize,
    /// Number of standard tableaux of `alpha`.
    pub m: usize,
    pub q: DMatrix<f64>,
    pub rank: usize,
    /// `Q⁻¹` when `Q` has full rank.
    pub inverse: Option<DMatrix<f64>>,
}

impl GramBlockMatrix {
    pub fn full_dim(&self) -> usize {
        self.q.nrows()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank == self.full_dim()
    }

    /// Position of `(leg, tableau)` (both 1-based) in the block order.
    pub fn index(&self, leg: usize, tableau: usize) -> usize {
        (leg - 1) * self.m + (tableau - 1)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        linalg::min_eigenvalue(&self.q)
    }
}

#[derive(Serialize)]
struct GramJson<'a> {
    alpha: &'a Partition,
    n: usize,
    d: usize,
    q: Vec<Vec<f64>>,
    rank: usize,
    min_eigenvalue: f64,
    inverse: Option<Vec<Vec<f64>>>,
}

impl Serialize for GramBlockMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GramJson {
            alpha: &self.alpha,
            n: self.n,
            d: self.d,
            q: linalg::rows(&self.q),
            rank: self.rank,
            min_eigenvalue: self.min_eigenvalue(),
            inverse: self.inverse.as_ref().map(linalg::rows),
        }
        .serialize(s)
    }
}

pub(crate) fn check_alpha(alpha: &Partition, ctx: &EmbeddingContext) -> Result<()> {
    if alpha.weight() + 2 != ctx.n {
        return Err(Error::InvalidPartition(format!(
            "{alpha} must be a partition of n-2 = {}",
            ctx.n - 2
        )));
    }
    Ok(())
}

pub(crate) fn gram_with_table(alpha: &Partition, ctx: &EmbeddingContext, table: &YorTable) -> Result<GramBlockMatrix> {
    let legs = ctx.n - 1;
    let m = table.dim();
    let mut q = DMatrix::zeros(legs * m, legs * m);
    for a in 1..=legs {
        for b in 1..=legs {
            let chi = ctx.chi(a, b)?;
            let scale = (ctx.d as f64).powi(chi.scale_power as i32);
            let phi = table.matrix(&chi.perm)?;
            for i in 0..m {
                for j in 0..m {
                    q[((a - 1) * m + i, (b - 1) * m + j)] = scale * phi[(i, j)];
                }
            }
        }
    }
    let rank = linalg::rank(&q, RANK_TOL);
    let inverse = if rank == q.nrows() { q.clone().try_inverse() } else { None };
    Ok(GramBlockMatrix {
        alpha: alpha.clone(),
        n: ctx.n,
        d: ctx.d,
        m,
        q,
        rank,
        inverse,
    })
}

/// Gram matrix of the formal `ψ` basis for `α ⊢ n−2`.
pub fn gram(alpha: &Partition, ctx: &EmbeddingContext) -> Result<GramBlockMatrix> {
    check_alpha(alpha, ctx)?;
    gram_with_table(alpha, ctx, &YorTable::new(alpha))
}

/// Smallest eigenvalue of `Q(α)`. Only defined when `d > n−2`, where it is
/// bounded below by `d − n + 2`.
pub fn gram_positivity_margin(alpha: &Partition, ctx: &EmbeddingContext) -> Result<f64> {
    if ctx.d + 2 <= ctx.n {
        return Err(Error::Precondition(format!(
            "positivity margin needs d > n-2 (n={}, d={})",
            ctx.n, ctx.d
        )));
    }
    Ok(gram(alpha, ctx)?.min_eigenvalue())
}

/// Change of basis between the `v` and `ω` operator families of one irrep.
///
/// With the left label fixed, `ω_{(b,j)} = Σ_{(c,k)} to_omega[(b,j),(c,k)] v_{(c,k)}`
/// and `v_{(b,j)} = Σ_{(c,k)} to_v[(b,j),(c,k)] ω_{(c,k)}`.
#[derive(Clone, Debug)]
pub struct OmegaCoeffs {
    pub alpha: Partition,
    pub to_omega: DMatrix<f64>,
    pub to_v: DMatrix<f64>,
}

impl OmegaCoeffs {
    pub fn v_to_omega(&self, v: &DMatrix<f64>) -> DMatrix<f64> {
        &self.to_omega * v
    }

    pub fn omega_to_v(&self, w: &DMatrix<f64>) -> DMatrix<f64> {
        &self.to_v * w
    }
}

pub fn omega_coeffs(alpha: &Partition, ctx: &EmbeddingContext) -> Result<OmegaCoeffs> {
    let g = gram(alpha, ctx)?;
    let inverse = g.inverse.clone().ok_or_else(|| Error::DegenerateGram {
        alpha: alpha.to_string(),
        rank: g.rank,
        full: g.full_dim(),
    })?;
    Ok(OmegaCoeffs {
        alpha: alpha.clone(),
        to_omega: inverse,
        to_v: g.q,
    })
}
