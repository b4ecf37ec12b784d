//! Partial-transpose spectra of three-party mixtures of Young projectors
//! `ρ = Σ_λ ã_λ P_λ`, computed from the irrep blocks of the algebra.
//!
//! The three shapes are taken in the order `λ1 = (1,1,1)`, `λ2 = (2,1)`,
//! `λ3 = (3)`. The trace weights `a_λ = ã_λ · tr P_λ` sum to `tr ρ`.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::multiplicity::weyl_dimension;
use crate::permgroup::{all_permutations, classify, factorial, partitions_of, Partition, Permutation, SabClass};
use crate::walled::{EmbeddingContext, WalledIrrep};
use crate::yor::YorTable;

/// Feasibility threshold on the smallest eigenvalue of `ρ'`.
pub const FEASIBILITY_TOL: f64 = -1e-12;

/// `c_σ = (m_λ/n!) χ^λ(σ)`, so that `P_λ = Σ_σ c_σ V(σ)` is the central
/// projector onto the isotypic component `λ`.
pub fn young_projector_coeffs(lambda: &Partition, n: usize) -> Result<BTreeMap<Permutation, f64>> {
    if lambda.weight() != n {
        return Err(Error::InvalidPartition(format!("{lambda} is not a partition of {n}")));
    }
    let table = YorTable::new(lambda);
    let scale = table.dim() as f64 / factorial(n) as f64;
    all_permutations(n)
        .into_iter()
        .map(|p| {
            let chi = table.matrix(&p)?.trace();
            Ok((p, scale * chi))
        })
        .collect()
}

/// `tr P_λ = m_λ · dim_{U(d)}(λ)`.
pub fn projector_trace(lambda: &Partition, d: usize) -> Result<f64> {
    if lambda.len() > d {
        return Ok(0.0);
    }
    let mut w: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    w.resize(d, 0);
    Ok(lambda.hook_dimension() as f64 * weyl_dimension(&w)? as f64)
}

/// The three shapes `λ1, λ2, λ3`.
pub fn shapes() -> [Partition; 3] {
    [
        Partition::new(&[1, 1, 1]).expect("valid"),
        Partition::new(&[2, 1]).expect("valid"),
        Partition::new(&[3]).expect("valid"),
    ]
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProjectorMixture {
    pub d: usize,
    /// `ã_λ` in the order of [`shapes`].
    pub raw_coeffs: [f64; 3],
    /// `a_λ = ã_λ · tr P_λ`.
    pub trace_weights: [f64; 3],
}

impl ProjectorMixture {
    fn traces(d: usize) -> Result<[f64; 3]> {
        let s = shapes();
        Ok([projector_trace(&s[0], d)?, projector_trace(&s[1], d)?, projector_trace(&s[2], d)?])
    }

    fn check_d(d: usize) -> Result<()> {
        if d <= 2 {
            return Err(Error::Precondition(format!("projector mixtures need d > 2, got {d}")));
        }
        Ok(())
    }

    /// Mixture with the given trace weights, rescaled to sum to one.
    pub fn from_trace_weights(d: usize, weights: [f64; 3]) -> Result<Self> {
        Self::check_d(d)?;
        if weights.iter().any(|&w| w.is_nan() || w < 0.0) {
            return Err(Error::Precondition(format!("trace weights must be non-negative, got {weights:?}")));
        }
        let total: f64 = weights.iter().sum();
        if total <= 0.0 {
            return Err(Error::Precondition("mixture has zero trace".into()));
        }
        let traces = Self::traces(d)?;
        let a = weights.map(|w| w / total);
        Ok(ProjectorMixture {
            d,
            raw_coeffs: [a[0] / traces[0], a[1] / traces[1], a[2] / traces[2]],
            trace_weights: a,
        })
    }

    /// Mixture with the given raw coefficients `ã_λ`, normalised to unit trace.
    pub fn from_raw(d: usize, raw: [f64; 3]) -> Result<Self> {
        Self::check_d(d)?;
        let traces = Self::traces(d)?;
        Self::from_trace_weights(d, [raw[0] * traces[0], raw[1] * traces[1], raw[2] * traces[2]])
    }

    /// Coefficients `c_σ` with `ρ = Σ_σ c_σ V(σ)`.
    pub fn coeffs(&self) -> Result<BTreeMap<Permutation, f64>> {
        let mut out: BTreeMap<Permutation, f64> = BTreeMap::new();
        for (lambda, &t) in shapes().iter().zip(&self.raw_coeffs) {
            for (p, c) in young_projector_coeffs(lambda, 3)? {
                *out.entry(p).or_insert(0.0) += t * c;
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumEntry {
    /// `"M"` or `"N"`.
    pub sector: &'static str,
    pub label: Partition,
    pub eigenvalue: f64,
    pub mult: u128,
}

/// Precomputed per-shape blocks for a fixed `d`; every spectrum is then
/// linear in the three raw coefficients.
#[derive(Clone, Debug)]
pub struct SpectrumModel {
    d: usize,
    traces: [f64; 3],
    gram: DMatrix<f64>,
    /// `Q·M_λ` for the 2×2 block of `P_λ` on the `M` sector.
    m_blocks: [DMatrix<f64>; 3],
    m_mult: u128,
    /// `(label, multiplicity, value of P_λ for each λ)` on the `N` sector.
    n_values: Vec<(Partition, u128, [f64; 3])>,
}

impl SpectrumModel {
    pub fn new(d: usize) -> Result<Self> {
        ProjectorMixture::check_d(d)?;
        let ctx = EmbeddingContext::new(3, d)?;
        let irrep = WalledIrrep::new(&Partition::new(&[1])?, &ctx)?;
        let q = irrep.gram().q.clone();
        let coeffs: Vec<BTreeMap<Permutation, f64>> =
            shapes().iter().map(|l| young_projector_coeffs(l, 3)).collect::<Result<_>>()?;
        let mut m_blocks: [DMatrix<f64>; 3] = Default::default();
        for (k, c) in coeffs.iter().enumerate() {
            m_blocks[k] = &q * irrep.linear_combination(c)?;
        }
        let mut m_weights = vec![0i64; d];
        m_weights[0] = 1;
        let m_mult = weyl_dimension(&m_weights)?;

        let mut n_values = Vec::new();
        for alpha_n in partitions_of(2) {
            if alpha_n.len() + 1 > d {
                continue;
            }
            let mut w: Vec<i64> = alpha_n.parts().iter().map(|&p| p as i64).collect();
            w.resize(d, 0);
            w[d - 1] = -1;
            let mult = weyl_dimension(&w)?;
            let table = YorTable::new(&alpha_n);
            let mut vals = [0.0; 3];
            for (k, c) in coeffs.iter().enumerate() {
                for (p, &x) in c {
                    if classify(p) == SabClass::FixesN {
                        vals[k] += x * table.matrix(&p.restrict(2)?)?[(0, 0)];
                    }
                }
            }
            n_values.push((alpha_n, mult, vals));
        }
        Ok(SpectrumModel {
            d,
            traces: ProjectorMixture::traces(d)?,
            gram: q,
            m_blocks,
            m_mult,
            n_values,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    fn raw_from_weights(&self, a: [f64; 3]) -> [f64; 3] {
        [a[0] / self.traces[0], a[1] / self.traces[1], a[2] / self.traces[2]]
    }

    /// Spectrum of `ρ'` for raw coefficients `ã`.
    pub fn spectrum(&self, raw: [f64; 3]) -> Result<Vec<SpectrumEntry>> {
        let block = &self.m_blocks[0] * raw[0] + &self.m_blocks[1] * raw[1] + &self.m_blocks[2] * raw[2];
        let ev = linalg::generalized_symmetric_eigenvalues(&block, &self.gram)
            .ok_or_else(|| Error::Precondition("Gram matrix is not positive definite".into()))?;
        let one = Partition::new(&[1])?;
        let mut out: Vec<SpectrumEntry> = ev
            .into_iter()
            .map(|e| SpectrumEntry { sector: "M", label: one.clone(), eigenvalue: e, mult: self.m_mult })
            .collect();
        for (label, mult, vals) in &self.n_values {
            let e = vals[0] * raw[0] + vals[1] * raw[1] + vals[2] * raw[2];
            out.push(SpectrumEntry { sector: "N", label: label.clone(), eigenvalue: e, mult: *mult });
        }
        Ok(out)
    }

    pub fn min_eigenvalue(&self, raw: [f64; 3]) -> Result<f64> {
        Ok(self.spectrum(raw)?.iter().map(|e| e.eigenvalue).fold(f64::INFINITY, f64::min))
    }
}

/// Spectrum of `ρ'` with multiplicities; these sum to `d³`.
pub fn transposed_spectrum(mix: &ProjectorMixture) -> Result<Vec<SpectrumEntry>> {
    SpectrumModel::new(mix.d)?.spectrum(mix.raw_coeffs)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegionPoint {
    pub a_lambda1: f64,
    pub a_lambda2: f64,
    pub feasible: bool,
    pub min_eig: f64,
}

/// Scans the simplex `a_λ1 + a_λ2 + a_λ3 = 1` on the grid
/// `a_λ1 = i/R`, `a_λ2 = j/R`, `i + j ≤ R`, in order of `i` then `j`.
pub fn ppt_region(d: usize, resolution: usize) -> Result<Vec<RegionPoint>> {
    if resolution == 0 {
        return Err(Error::Precondition("grid resolution must be positive".into()));
    }
    let model = SpectrumModel::new(d)?;
    let r = resolution as f64;
    let grid: Vec<(usize, usize)> = (0..=resolution)
        .flat_map(|i| (0..=resolution - i).map(move |j| (i, j)))
        .collect();
    grid.into_par_iter()
        .map(|(i, j)| {
            let a1 = i as f64 / r;
            let a2 = j as f64 / r;
            let a3 = (resolution - i - j) as f64 / r;
            let min_eig = model.min_eigenvalue(model.raw_from_weights([a1, a2, a3]))?;
            Ok(RegionPoint { a_lambda1: a1, a_lambda2: a2, feasible: min_eig >= FEASIBILITY_TOL, min_eig })
        })
        .collect()
}
