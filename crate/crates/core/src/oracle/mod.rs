//! Dense tensor ground truth on `(C^d)^{⊗n}` for small `n` and `d`.
//!
//! Nothing here uses the closed-form matrices of [`crate::walled`]; the
//! two are compared in tests and by the `verify` sweep.

mod dense;
mod sweep;
mod units;

pub use dense::{
    kron_vec, max_entangled, partial_trace_last_two, partial_transpose_last, perm_operator, permute_vector,
    total_dim, transposed_perm_operator, DenseOperator, DENSE_LIMIT, VECTOR_LIMIT,
};
pub use sweep::{verify, CheckRow, SweepMode, VerifyReport};
pub use units::{oracle_matrix_elements, IrrepVectorFamily, OracleElements, YoungUnits};
