use std::collections::BTreeMap;

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::Serialize;

use super::embedding::EmbeddingContext;
use super::gram::{check_alpha, gram_with_table, GramBlockMatrix, RANK_TOL};
use crate::error::{Error, Result};
use crate::linalg;
use crate::permgroup::{classify, partitions_of, Partition, Permutation, SabClass};
use crate::yor::YorTable;

/// Matrix of an algebra element in one irrep.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WalledIrrepElement {
    pub alpha: Partition,
    /// The permutation this matrix represents, if it is a single one.
    pub sigma: Option<Permutation>,
    /// `(leg, tableau)` labels of rows and columns, both 1-based.
    pub index: Vec<(usize, usize)>,
    #[serde(serialize_with = "serialize_rows")]
    pub matrix: DMatrix<f64>,
}

fn serialize_rows<S: serde::Serializer>(m: &DMatrix<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    linalg::rows(m).serialize(s)
}

impl WalledIrrepElement {
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }
}

/// Everything needed to evaluate the irrep labelled by `α ⊢ n−2`.
///
/// The irrep exists only when `α` has at most `d` rows.
/// When `Q(α)` is singular the formal basis is linearly dependent and the
/// irrep lives on a subset `I` of it, chosen greedily in leg-major order.
/// An operator with action matrix `A` on the formal basis then has the
/// reduced matrix `Q̃⁻¹ (Q A)[I, I]` with `Q̃ = Q[I, I]`.
#[derive(Clone, Debug)]
pub struct WalledIrrep {
    ctx: EmbeddingContext,
    alpha: Partition,
    table: YorTable,
    gram: GramBlockMatrix,
    basis: Vec<usize>,
    /// `Q̃⁻¹ Q[I, :]`, present only in the reduced case.
    reduction: Option<DMatrix<f64>>,
}

impl WalledIrrep {
    pub fn new(alpha: &Partition, ctx: &EmbeddingContext) -> Result<Self> {
        check_alpha(alpha, ctx)?;
        let table = YorTable::new(alpha);
        let gram = gram_with_table(alpha, ctx, &table)?;
        // With more rows than d the vectors ψ all vanish and Q(α) is only a
        // formal matrix, possibly indefinite.
        if alpha.len() > ctx.d || gram.rank == 0 {
            return Err(Error::AbsentIrrep(alpha.to_string()));
        }
        let full = gram.full_dim();
        let (basis, reduction) = if gram.is_full_rank() {
            ((0..full).collect(), None)
        } else {
            let basis = linalg::greedy_independent(&gram.q, RANK_TOL);
            let all: Vec<usize> = (0..full).collect();
            let q_ii = linalg::select(&gram.q, &basis, &basis);
            let q_i = linalg::select(&gram.q, &basis, &all);
            let reduction = q_ii.lu().solve(&q_i).ok_or_else(|| Error::DegenerateGram {
                alpha: alpha.to_string(),
                rank: gram.rank,
                full,
            })?;
            (basis, Some(reduction))
        };
        Ok(WalledIrrep {
            ctx: *ctx,
            alpha: alpha.clone(),
            table,
            gram,
            basis,
            reduction,
        })
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn context(&self) -> &EmbeddingContext {
        &self.ctx
    }

    pub fn gram(&self) -> &GramBlockMatrix {
        &self.gram
    }

    pub fn yor(&self) -> &YorTable {
        &self.table
    }

    pub fn is_reduced(&self) -> bool {
        self.reduction.is_some()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Positions of the kept formal basis vectors.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn labels(&self) -> Vec<(usize, usize)> {
        let m = self.gram.m;
        self.basis.iter().map(|&x| (x / m + 1, x % m + 1)).collect()
    }

    /// Action matrix of `V'(σ_ab)` on the full formal basis.
    pub fn full_transposed(&self, sigma_ab: &Permutation) -> Result<DMatrix<f64>> {
        let (a, b, tau) = self.ctx.f_ab_inverse(sigma_ab)?;
        let m = self.gram.m;
        let legs = self.ctx.n - 1;
        let d = self.ctx.d as f64;
        let mut out = DMatrix::zeros(legs * m, legs * m);
        for c in 1..=legs {
            let chi = self.ctx.chi(a, c)?;
            let scale = d.powi(chi.scale_power as i32);
            let phi = self.table.matrix(&tau.compose(&chi.perm)?)?;
            for l in 0..m {
                for k in 0..m {
                    out[((b - 1) * m + l, (c - 1) * m + k)] = scale * phi[(l, k)];
                }
            }
        }
        Ok(out)
    }

    /// Action matrix of `V(σ)`, `σ ∈ S(n−1)`, on the full formal basis.
    /// Accepts `σ` of degree `n−1`, or of degree `n` fixing `n`.
    pub fn full_untransposed(&self, sigma: &Permutation) -> Result<DMatrix<f64>> {
        let sigma = self.as_small(sigma)?;
        let m = self.gram.m;
        let legs = self.ctx.n - 1;
        let mut out = DMatrix::zeros(legs * m, legs * m);
        for c in 1..=legs {
            let row = sigma.apply(c);
            let phi = self.table.matrix(&self.ctx.f_c(&sigma, c)?)?;
            for l in 0..m {
                for k in 0..m {
                    out[((row - 1) * m + l, (c - 1) * m + k)] = phi[(l, k)];
                }
            }
        }
        Ok(out)
    }

    fn as_small(&self, sigma: &Permutation) -> Result<Permutation> {
        let n = self.ctx.n;
        if sigma.degree() == n {
            if sigma.apply(n) != n {
                return Err(Error::Precondition(format!("{sigma} does not fix {n}")));
            }
            sigma.restrict(n - 1)
        } else if sigma.degree() == n - 1 {
            Ok(sigma.clone())
        } else {
            Err(Error::DegreeMismatch {
                left: sigma.degree(),
                right: n - 1,
            })
        }
    }

    /// Full action matrix of `V'(σ)` for any `σ ∈ S(n)`.
    pub fn full_image(&self, sigma: &Permutation) -> Result<DMatrix<f64>> {
        if sigma.degree() != self.ctx.n {
            return Err(Error::DegreeMismatch {
                left: sigma.degree(),
                right: self.ctx.n,
            });
        }
        match classify(sigma) {
            SabClass::FixesN => self.full_untransposed(sigma),
            SabClass::Transposed { .. } => self.full_transposed(sigma),
        }
    }

    /// Restricts a full action matrix to the irrep.
    pub fn reduce(&self, full: &DMatrix<f64>) -> DMatrix<f64> {
        match &self.reduction {
            None => full.clone(),
            Some(r) => {
                let cols = full.select_columns(&self.basis);
                r * cols
            }
        }
    }

    /// Irrep matrix of `V'(σ)`, `σ ∈ S(n)`.
    pub fn image(&self, sigma: &Permutation) -> Result<DMatrix<f64>> {
        Ok(self.reduce(&self.full_image(sigma)?))
    }

    pub fn element(&self, sigma: &Permutation) -> Result<WalledIrrepElement> {
        Ok(self.wrap(Some(sigma.clone()), self.image(sigma)?))
    }

    /// Irrep matrix of `Σ_σ c_σ V'(σ)`.
    pub fn linear_combination<'a, I>(&self, coeffs: I) -> Result<DMatrix<f64>>
    where
        I: IntoIterator<Item = (&'a Permutation, &'a f64)>,
    {
        let full = self.gram.full_dim();
        let mut acc = DMatrix::zeros(full, full);
        for (sigma, &c) in coeffs {
            if c != 0.0 {
                acc += self.full_image(sigma)? * c;
            }
        }
        Ok(self.reduce(&acc))
    }

    fn wrap(&self, sigma: Option<Permutation>, matrix: DMatrix<f64>) -> WalledIrrepElement {
        WalledIrrepElement {
            alpha: self.alpha.clone(),
            sigma,
            index: self.labels(),
            matrix,
        }
    }
}

fn full_rank_irrep(alpha: &Partition, ctx: &EmbeddingContext) -> Result<WalledIrrep> {
    let irrep = WalledIrrep::new(alpha, ctx);
    match irrep {
        Ok(w) if !w.is_reduced() => Ok(w),
        Ok(w) => Err(Error::DegenerateGram {
            alpha: alpha.to_string(),
            rank: w.gram.rank,
            full: w.gram.full_dim(),
        }),
        Err(Error::AbsentIrrep(_)) => {
            let g = gram_with_table(alpha, ctx, &YorTable::new(alpha))?;
            Err(Error::DegenerateGram {
                alpha: alpha.to_string(),
                rank: 0,
                full: g.full_dim(),
            })
        }
        Err(e) => Err(e),
    }
}

/// `[Ṽ'_α(σ_ab)]` on the full formal basis. Requires `Q(α)` of full rank.
pub fn irrep_transposed(sigma_ab: &Permutation, alpha: &Partition, ctx: &EmbeddingContext) -> Result<WalledIrrepElement> {
    let w = full_rank_irrep(alpha, ctx)?;
    let m = w.full_transposed(sigma_ab)?;
    Ok(w.wrap(Some(sigma_ab.clone()), m))
}

/// `[Ṽ_α(σ)]` for `σ ∈ S(n−1)` on the full formal basis.
pub fn irrep_untransposed(sigma: &Permutation, alpha: &Partition, ctx: &EmbeddingContext) -> Result<WalledIrrepElement> {
    check_alpha(alpha, ctx)?;
    let table = YorTable::new(alpha);
    let gram = gram_with_table(alpha, ctx, &table)?;
    let full = gram.full_dim();
    let w = WalledIrrep {
        ctx: *ctx,
        alpha: alpha.clone(),
        table,
        gram,
        basis: (0..full).collect(),
        reduction: None,
    };
    let m = w.full_untransposed(sigma)?;
    let n = ctx.n;
    let sigma = if sigma.degree() == n { sigma.clone() } else { sigma.extend(n) };
    Ok(w.wrap(Some(sigma), m))
}

/// The identity, then the generators `(k k+1)` for `k = 1..n−2`, then
/// `(n−1 n)`, which acts partially transposed.
pub fn generator_permutations(n: usize) -> Vec<Permutation> {
    std::iter::once(Permutation::identity(n))
        .chain((1..n).map(|k| Permutation::transposition(n, k, k + 1).expect("k < n")))
        .collect()
}

/// Images of [`generator_permutations`] in the irrep `α`, reduced when
/// `Q(α)` is singular.
pub fn generators(ctx: &EmbeddingContext, alpha: &Partition) -> Result<Vec<WalledIrrepElement>> {
    let w = WalledIrrep::new(alpha, ctx)?;
    generator_permutations(ctx.n).iter().map(|p| w.element(p)).collect()
}

/// Per-irrep matrices of `Σ_σ c_σ V'(σ)`. Irreps whose Gram matrix vanishes
/// are absent from the result.
pub fn represent(coeffs: &BTreeMap<Permutation, f64>, ctx: &EmbeddingContext) -> Result<BTreeMap<Partition, WalledIrrepElement>> {
    let results: Vec<Result<Option<(Partition, WalledIrrepElement)>>> = partitions_of(ctx.n - 2)
        .into_par_iter()
        .map(|alpha| match WalledIrrep::new(&alpha, ctx) {
            Ok(w) => {
                let m = w.linear_combination(coeffs)?;
                Ok(Some((alpha, w.wrap(None, m))))
            }
            Err(Error::AbsentIrrep(_)) => Ok(None),
            Err(e) => Err(e),
        })
        .collect();
    let mut out = BTreeMap::new();
    for r in results {
        if let Some((alpha, el)) = r? {
            out.insert(alpha, el);
        }
    }
    Ok(out)
}

/// The irrep on a maximal linearly independent subset of the formal basis.
/// For a full-rank Gram matrix this is the whole basis.
pub fn degenerate_basis(alpha: &Partition, ctx: &EmbeddingContext) -> Result<WalledIrrep> {
    WalledIrrep::new(alpha, ctx)
}
