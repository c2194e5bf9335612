//! Certification of what a code actually is.

pub mod dense;
pub mod distance;
pub mod enumerator;

pub use dense::{dense_verify, dense_verify_with_errors, DenseVerificationReport};
pub use distance::{
    hybrid_distance_full, impurity_check, min_nonzero_weight, min_weight_outside, sweep_size, verify_distance_sweep, Impurity,
    SweepReport,
    DEFAULT_SWEEP_CAP,
};
pub use enumerator::{krawtchouk_matrix, macwilliams, shadow, weight_enumerator, WeightEnumerator};
