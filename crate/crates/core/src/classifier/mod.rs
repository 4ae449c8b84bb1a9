//! Finiteness decisions for triple and double flag varieties.

pub mod aiii;
pub mod double;
pub mod mwz;
pub mod summary;

pub use aiii::{classify_aiii_borel, AiiiBorelVerdict, AiiiCase};
pub use double::{
    classify, finiteness_via_intersection, finiteness_via_triple, k_root_system, Classification,
    DoubleFlagVerdict, Status, Witness,
};
pub use mwz::{mwz_classify_a, mwz_classify_c, triple_outcome, MwzRow, TripleFlagVerdict, TripleOutcome};
pub use summary::{summary_lookup, SummaryRow};
