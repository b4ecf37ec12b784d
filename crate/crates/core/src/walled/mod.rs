//! Irreducible representations of the partially transposed permutation
//! algebra on the sector spanned by maximally entangled last legs.
//!
//! For `α ⊢ n−2` the irrep space has the formal basis `ψ_k^c`, with a leg
//! `c ∈ 1..n−1` and a standard tableau `k` of shape `α`. Indices are ordered
//! leg-major. A matrix `M` represents an operator `X` by
//! `X ψ_z = Σ_y M[y, z] ψ_y`.

mod embedding;

pub use embedding::{ChiResult, EmbeddingContext};
mod gram;
mod irreps;

pub use gram::{gram, gram_positivity_margin, omega_coeffs, GramBlockMatrix, OmegaCoeffs, RANK_TOL};
pub use irreps::{
    degenerate_basis, generator_permutations, generators, irrep_transposed, irrep_untransposed, represent,
    WalledIrrep, WalledIrrepElement,
};
