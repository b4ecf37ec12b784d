//! Irrep inventory of the partially transposed permutation algebra, with
//! multiplicities from the Weyl dimension formula of `U(d)`.
//!
//! Irreps come in two sectors. The `N` sector is labelled by `α_N ⊢ n−1`
//! with highest weight `(α_N, 0, …, 0, −1)` and has the dimension of the
//! `S(n−1)` irrep `α_N`. The `M` sector is labelled by `α ⊢ n−2` with
//! highest weight `(α, 0, …, 0)` and has dimension `(n−1)·m_α` when
//! `d > n−2`, or `rank Q(α)` otherwise.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::permgroup::{partitions_of, Partition};
use crate::walled::{gram, EmbeddingContext};

/// `Π_{i<j} (λ_i − λ_j + j − i)/(j − i)` for a non-increasing weight.
pub fn weyl_dimension(weights: &[i64]) -> Result<u128> {
    if weights.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Precondition(format!("weight {weights:?} is not non-increasing")));
    }
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..weights.len() {
        for j in (i + 1)..weights.len() {
            num *= weights[i] - weights[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    let q = num / den;
    u128::try_from(q).map_err(|_| Error::Overflow("Weyl dimension"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Sector {
    #[serde(rename = "N")]
    N,
    #[serde(rename = "M")]
    M,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrepLabel {
    pub sector: Sector,
    pub partition: Partition,
    /// Highest weight of length `d`; `None` when the partition has too many
    /// rows to fit.
    pub weights: Option<Vec<i64>>,
}

impl IrrepLabel {
    fn new(sector: Sector, partition: Partition, d: usize) -> Self {
        let tail = usize::from(sector == Sector::N);
        let weights = (partition.len() + tail <= d).then(|| {
            let mut w: Vec<i64> = partition.parts().iter().map(|&p| p as i64).collect();
            w.resize(d, 0);
            if tail == 1 {
                w[d - 1] = -1;
            }
            w
        });
        IrrepLabel { sector, partition, weights }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InventoryEntry {
    pub label: IrrepLabel,
    /// Dimension of the algebra irrep.
    pub dim: usize,
    /// Number of copies in `(C^d)^{⊗n}`.
    pub mult: u128,
}

impl InventoryEntry {
    pub fn product(&self) -> u128 {
        self.mult * self.dim as u128
    }
}

/// All irrep labels for `(n, d)`, `N` sector first, each in reverse
/// lexicographic order. Labels that cannot be realised are kept with
/// multiplicity zero.
pub fn inventory(n: usize, d: usize) -> Result<Vec<InventoryEntry>> {
    if n < 2 || d < 2 {
        return Err(Error::Precondition(format!("inventory needs n >= 2 and d >= 2 (n={n}, d={d})")));
    }
    let ctx = EmbeddingContext::new(n, d)?;
    let labels: Vec<IrrepLabel> = partitions_of(n - 1)
        .into_iter()
        .map(|p| IrrepLabel::new(Sector::N, p, d))
        .chain(partitions_of(n - 2).into_iter().map(|p| IrrepLabel::new(Sector::M, p, d)))
        .collect();
    labels
        .into_par_iter()
        .map(|label| {
            let mult = match &label.weights {
                Some(w) => weyl_dimension(w)?,
                None => 0,
            };
            let dim = match label.sector {
                Sector::N => label.partition.hook_dimension(),
                Sector::M if label.weights.is_none() => 0,
                Sector::M if d + 2 > n => (n - 1) * label.partition.hook_dimension(),
                Sector::M => gram(&label.partition, &ctx)?.rank,
            };
            Ok(InventoryEntry { label, dim, mult })
        })
        .collect()
}

/// `Σ mult · dim` over an inventory.
pub fn checksum(entries: &[InventoryEntry]) -> u128 {
    entries.iter().map(InventoryEntry::product).sum()
}

/// `d^n`, checked.
pub fn total_dimension(n: usize, d: usize) -> Result<u128> {
    (d as u128).checked_pow(n as u32).ok_or(Error::Overflow("d^n"))
}
