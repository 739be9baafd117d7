//! Counting copies of small posets inside families of subsets of [n].
//!
//! The crate provides:
//! - [`poset`]: finite strict orders, named constructors, composition
//!   operators and a small description language ([`parse`]);
//! - [`family`]: bit-encoded families of subsets of [n] with the structural
//!   operations (levels, canonical partition, complements, components);
//! - [`counting`]: the embedding engine deciding freeness and counting
//!   copies at the subfamily level;
//! - [`profiles`]: size/chain/intersection/union profile vectors, level
//!   weight maximization and an exact DP for complete multi-level posets on
//!   level unions;
//! - [`formulas`]: closed-form evaluators for the extremal values and
//!   bounds, plus the numeric entropy constants;
//! - [`search`]: exact extremal search at small n, level-union sweeps,
//!   antichain profile maxima and the explicit constructions;
//! - [`acceptance`]: the end-to-end verification suite.

pub mod acceptance;
pub mod binom;
pub mod counting;
pub mod family;
pub mod formulas;
pub mod parse;
pub mod poset;
pub mod profiles;
pub mod search;

pub use counting::{
    contains_copy, count_copies, count_copies_with, embeddings, is_free, Budget, CopyCount,
    CountError,
};
pub use family::{FamilyError, FamilyTextFormat, SetFamily, MAX_GROUND};
pub use parse::{parse_poset, ParseError};
pub use poset::{Poset, PosetError};
pub use search::{
    antichain_max_beta, antichain_max_gamma, conjecture_ratio, construct, la_exact, la_levels,
    Construction, Ratio, SearchError, SearchOptions, SearchResult,
};
