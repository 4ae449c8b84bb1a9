//! Compositions, root sets, Weyl groups, symmetric pairs and clans for types A and C.

pub mod clans;
pub mod composition;
pub mod group;
pub mod pair;
pub mod roots;
pub mod weyl;

pub use clans::{enumerate_clans, Clan, ClanSymbol};
pub use composition::{Composition, SymplecticComposition};
pub use group::{Family, GroupDatum, Orientation, ParabolicSpec, Shape};
pub use pair::{
    intersect_with_k, is_theta_stable, stable_parabolics, theta_on_parabolic, KParabolicSpec,
    PairKind, StableParabolic, SymmetricPairSpec,
};
pub use roots::{
    full_root_system, is_product_open, parabolic_root_set, positive_roots, simple_roots, Root,
    RootSet,
};
pub use weyl::{
    bruhat_double_cosets, twisted_involutions, weyl_elements, DiagramAction, DoubleCosets,
    WeylElement,
};
