//! Finiteness of `K`-orbits on double flag varieties `G/P × K/Q` for the
//! classical symmetric pairs of types A and C.
//!
//! The [`classifier`] decides finiteness from the triple flag tables and the
//! two reduction criteria. Two independent oracles check those decisions:
//! [`fforacle`] counts orbits over small prime fields and [`branching`]
//! probes multiplicity-freeness with Littlewood–Richardson coefficients.

pub mod branching;
pub mod classifier;
pub mod cli;
pub mod error;
pub mod fforacle;
pub mod liecomb;
pub mod unionfind;

pub use error::{Error, Result};
pub use liecomb::{
    Composition, Family, GroupDatum, KParabolicSpec, Orientation, PairKind, ParabolicSpec,
    Shape, SymmetricPairSpec, SymplecticComposition,
};
