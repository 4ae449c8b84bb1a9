//! Littlewood–Richardson arithmetic for `GL_n` and the multiplicity-free
//! probes of sphericity.
//!
//! All weights are polynomial (partitions). Twisting by a power of the
//! determinant does not change multiplicities, and for `GL_n` the dual of
//! `V_λ` restricts to `GL_p × GL_q` with the same multiplicities as `V_λ`,
//! so the probes work with `V_{kλ}` directly. Sweeps stop at a stated bound
//! and never claim anything beyond it.

pub mod lr;
pub mod partition;
pub mod probes;

pub use lr::{lr_coefficient, restrict_to_levi, tensor_decompose, weyl_dim_gl, LeviWeight, LrDecomposition};
pub use partition::Partition;
pub use probes::{
    highest_weight_of_parabolic, spherical_probe_restriction, spherical_probe_tensor, ProbeOutcome,
};
