//! Permutations, partitions, standard tableaux and the `S_ab` splitting of
//! the symmetric group.
//!
//! Composition is right to left throughout: `(p ∘ q)(x) = p(q(x))`.

mod partition;
mod permutation;
mod sab;
mod tableau;

pub use partition::{partitions_of, Partition};
pub use permutation::{all_permutations, Permutation};
pub use sab::{classify, enumerate_sab, SabClass, SabPartition};
pub use tableau::{standard_tableaux, StandardTableau};

/// `k!` as `usize`.
pub fn factorial(k: usize) -> usize {
    (1..=k).product()
}
