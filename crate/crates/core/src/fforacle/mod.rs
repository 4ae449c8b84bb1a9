//! Orbit counting over small prime fields.
//!
//! Flag varieties are enumerated as orbits of a base flag under matrix
//! generators, with subspaces in reduced row echelon form. Orbits of a group
//! on a product are counted with union-find over the generator permutations.
//! Bounded counts across several `q` are a hint of finiteness, never a proof.
//!
//! Fixed realization: `Sp_2n` preserves the antidiagonal form, `SO_n` the
//! split antidiagonal symmetric form (odd `q` only), and `K` sits inside `G`
//! as described on [`SymmetricPairSpec`](crate::SymmetricPairSpec).

pub mod field;
pub mod flags;
pub mod groups;
pub mod linalg;
pub mod orbits;

pub use field::{Field, FieldElement};
pub use flags::{enumerate_flags, flag_count, flag_space, FlagSpace};
pub use groups::{group_order, group_points, GroupPoints, MatrixGroup};
pub use linalg::{FlagPoint, Matrix, Subspace};
pub use orbits::{
    count_diagonal_orbits, count_k_orbits, count_k_orbits_with, count_triple_orbits,
    growth_probe, k_base_flag, triple_growth_probe, GrowthHint, OrbitCount, OrbitCountReport,
    OrbitTally, DEFAULT_BUDGET,
};
