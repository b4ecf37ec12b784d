use nalgebra::{DMatrix, DVector};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::dense::{partial_trace_last_two, perm_operator, total_dim, transposed_perm_operator, DenseOperator, DENSE_LIMIT};
use super::units::{oracle_matrix_elements, IrrepVectorFamily, YoungUnits};
use crate::error::{Error, Result};
use crate::linalg;
use crate::multiplicity::weyl_dimension;
use crate::permgroup::{all_permutations, classify, partitions_of, Partition, Permutation, SabClass};
use crate::walled::{generator_permutations, EmbeddingContext, WalledIrrep};

const TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    /// Every permutation of `S(n)`.
    Exhaustive,
    /// `count` random permutations and products drawn from a seeded stream.
    Samples { count: usize, seed: u64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    /// Irrep label, or `"*"` for checks spanning all irreps.
    pub alpha: String,
    pub check: String,
    pub cases: usize,
    pub max_error: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub d: usize,
    pub rows: Vec<CheckRow>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }
}

fn row(alpha: &str, check: &str, errors: &[f64]) -> CheckRow {
    let max_error = errors.iter().copied().fold(0.0, f64::max);
    CheckRow {
        alpha: alpha.to_string(),
        check: check.to_string(),
        cases: errors.len(),
        max_error,
        passed: max_error <= TOL,
    }
}

fn max_diff(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    if a.shape() != b.shape() {
        return f64::INFINITY;
    }
    (a - b).amax()
}

/// `V'(σ)` for any `σ ∈ S(n)`.
fn walled_operator(sigma: &Permutation, d: usize) -> Result<DenseOperator> {
    transposed_perm_operator(sigma, d)
}

fn sample_perms(n: usize, mode: SweepMode, salt: u64) -> Vec<Permutation> {
    let all = all_permutations(n);
    match mode {
        SweepMode::Exhaustive => all,
        SweepMode::Samples { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ salt);
            (0..count).map(|_| all.choose(&mut rng).unwrap().clone()).collect()
        }
    }
}

/// Random words of 2 to 4 generators, as sequences of permutations.
fn random_words(n: usize, count: usize, seed: u64) -> Vec<Vec<Permutation>> {
    let gens = generator_permutations(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(2..=4);
            (0..len).map(|_| gens.choose(&mut rng).unwrap().clone()).collect()
        })
        .collect()
}

fn check_alpha(alpha: &Partition, ctx: &EmbeddingContext, mode: SweepMode) -> Result<Vec<CheckRow>> {
    let (n, d) = (ctx.n, ctx.d);
    let label = alpha.to_string();
    let mut rows = Vec::new();

    let units = YoungUnits::new(alpha, d)?;
    let m = units.m;
    let mut unit_errors = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            for k in 1..=m {
                for l in 1..=m {
                    let lhs = units.unit(i, j) * units.unit(k, l);
                    let rhs = if j == k { units.unit(i, l).clone() } else { DMatrix::zeros(lhs.nrows(), lhs.ncols()) };
                    unit_errors.push(max_diff(&lhs, &rhs));
                }
            }
        }
    }
    rows.push(row(&label, "units", &unit_errors));

    let weights: Vec<i64> = {
        let mut w: Vec<i64> = alpha.parts().iter().map(|&p| p as i64).collect();
        w.resize(d.max(w.len()), 0);
        w
    };
    let expected_mult = if alpha.len() <= d { weyl_dimension(&weights)? } else { 0 };
    rows.push(row(&label, "multiplicity", &[(units.multiplicity() as f64 - expected_mult as f64).abs()]));
    if expected_mult == 0 {
        return Ok(rows);
    }

    let family = IrrepVectorFamily::new(alpha, ctx)?;
    let walled = WalledIrrep::new(alpha, ctx)?;
    let q = &walled.gram().q;
    let mut gram_errors = Vec::new();
    for r in 0..family.multiplicity() {
        for s in 0..family.multiplicity() {
            let g = family.gram(r, s);
            let expected = if r == s { q.clone() } else { DMatrix::zeros(q.nrows(), q.ncols()) };
            gram_errors.push(max_diff(&g, &expected));
        }
    }
    rows.push(row(&label, "gram", &gram_errors));

    let mut element_errors = Vec::new();
    let mut residuals = Vec::new();
    for sigma in sample_perms(n, mode, 1) {
        let op = walled_operator(&sigma, d)?;
        let oracle = oracle_matrix_elements(&op, &family)?;
        if oracle.basis != walled.basis() {
            element_errors.push(f64::INFINITY);
            continue;
        }
        element_errors.push(max_diff(&oracle.matrix, &walled.image(&sigma)?));
        residuals.push(oracle.residual);
    }
    rows.push(row(&label, "elements", &element_errors));
    rows.push(row(&label, "residual", &residuals));

    let gens = generator_permutations(n);
    let mut words: Vec<Vec<Permutation>> = Vec::new();
    for x in &gens {
        for y in &gens {
            words.push(vec![x.clone(), y.clone()]);
        }
    }
    let extra = match mode {
        SweepMode::Exhaustive => 100,
        SweepMode::Samples { count, .. } => count,
    };
    let seed = match mode {
        SweepMode::Exhaustive => 0,
        SweepMode::Samples { seed, .. } => seed,
    };
    words.extend(random_words(n, extra, seed ^ 2));
    let mut product_errors = Vec::new();
    for word in &words {
        let mut op = DenseOperator::identity(n, d)?;
        let mut mat = DMatrix::identity(walled.dim(), walled.dim());
        for p in word {
            op = op.mul(&walled_operator(p, d)?)?;
            mat *= walled.image(p)?;
        }
        let oracle = oracle_matrix_elements(&op, &family)?;
        product_errors.push(max_diff(&oracle.matrix, &mat).max(oracle.residual));
    }
    rows.push(row(&label, "products", &product_errors));
    Ok(rows)
}

fn check_global(ctx: &EmbeddingContext, families: &[IrrepVectorFamily], mode: SweepMode) -> Result<Vec<CheckRow>> {
    let (n, d) = (ctx.n, ctx.d);
    let mut rows = Vec::new();

    // orthonormal basis of the span of every ψ vector
    let mut span: Vec<DVector<f64>> = Vec::new();
    for f in families {
        for copy in &f.psi {
            for v in copy {
                let mut w = v.clone();
                for b in &span {
                    let p = b.dot(&w);
                    w -= b * p;
                }
                if w.norm() > 1e-8 {
                    let norm = w.norm();
                    span.push(w / norm);
                }
            }
        }
    }
    let dim = total_dim(n, d, DENSE_LIMIT)?;
    let mut projector = DMatrix::zeros(dim, dim);
    for b in &span {
        projector += b * b.transpose();
    }
    let complement = DMatrix::identity(dim, dim) - &projector;

    let small = total_dim(n - 2, d, DENSE_LIMIT)?;
    let mut support = Vec::new();
    let mut ranks = Vec::new();
    for sigma in sample_perms(n, mode, 3) {
        if classify(&sigma) == SabClass::FixesN {
            continue;
        }
        let op = walled_operator(&sigma, d)?.entries;
        support.push((&complement * &op).amax().max((&op * &complement).amax()));
        ranks.push((linalg::rank(&op, 1e-9) as f64 - small as f64).abs());
    }
    rows.push(row("*", "support", &support));
    rows.push(row("*", "rank", &ranks));

    let lifts: Vec<DMatrix<f64>> = (1..n).map(|k| IrrepVectorFamily::lift(ctx, k)).collect::<Result<_>>()?;
    let mut lift_errors = Vec::new();
    for sigma in all_permutations(n - 2) {
        let v = perm_operator(&sigma, d)?.entries;
        for a in 1..n {
            for b in 1..n {
                let lhs = &lifts[b - 1] * &v * lifts[a - 1].transpose();
                let rhs = walled_operator(&ctx.f_ab(&sigma, a, b)?, d)?.entries;
                lift_errors.push(max_diff(&lhs, &rhs));
            }
        }
    }
    rows.push(row("*", "lift", &lift_errors));

    let pair = transposed_perm_operator(&Permutation::transposition(n, n - 1, n)?, d)?;
    let mut chi_errors = Vec::new();
    for a in 1..n {
        for b in 1..n {
            let pa = perm_operator(&ctx.pi(a)?.inverse(), d)?;
            let pb = perm_operator(&ctx.pi(b)?, d)?;
            let traced = partial_trace_last_two(&pair.mul(&pa)?.mul(&pb)?)?;
            let chi = ctx.chi(a, b)?;
            let expected = perm_operator(&chi.perm, d)?.scale((d as f64).powi(chi.scale_power as i32));
            chi_errors.push(max_diff(&traced.entries, &expected.entries));
        }
    }
    rows.push(row("*", "chi", &chi_errors));
    Ok(rows)
}

/// Compares every closed-form quantity for `(n, d)` with its dense-tensor
/// counterpart.
pub fn verify(n: usize, d: usize, mode: SweepMode) -> Result<VerifyReport> {
    if n < 3 {
        return Err(Error::Precondition("verify needs n >= 3".into()));
    }
    let ctx = EmbeddingContext::new(n, d)?;
    total_dim(n, d, DENSE_LIMIT)?;
    let alphas = partitions_of(n - 2);
    let per_alpha: Vec<Result<Vec<CheckRow>>> = alphas.par_iter().map(|a| check_alpha(a, &ctx, mode)).collect();
    let mut rows = Vec::new();
    for r in per_alpha {
        rows.extend(r?);
    }
    let families: Vec<IrrepVectorFamily> = alphas
        .iter()
        .filter(|a| a.len() <= d)
        .map(|a| IrrepVectorFamily::new(a, &ctx))
        .collect::<Result<_>>()?;
    rows.extend(check_global(&ctx, &families, mode)?);
    Ok(VerifyReport { n, d, rows })
}
