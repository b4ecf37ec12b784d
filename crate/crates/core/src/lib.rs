//! Irreducible representations of the algebra of partially transposed
//! permutation operators on `(C^d)^{⊗n}`.
//!
//! The crate is organised bottom-up:
//!
//! * [`permgroup`]: permutations, partitions, tableaux and `S_ab` classes.
//! * [`yor`]: Young's orthogonal form for `S(k)`.
//! * [`walled`]: embeddings, Gram matrices and closed-form irrep matrices.
//! * [`oracle`]: dense tensor operators used as ground truth.
//! * [`multiplicity`]: Weyl dimensions and the irrep inventory.
//! * [`ppt`]: partial-transpose spectra of three-party Young projector mixtures.

pub mod error;
pub mod linalg;
pub mod multiplicity;
pub mod oracle;
pub mod permgroup;
pub mod ppt;
pub mod walled;
pub mod yor;

pub use error::{Error, Result};
