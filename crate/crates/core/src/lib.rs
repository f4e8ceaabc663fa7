//! Factor decisions for subsets of small finite groups.
//!
//! A subset `A` of a finite group `G` is a (left) factor when some `B ⊆ G`
//! gives every element a unique representation `ab`. This crate stores
//! groups as multiplication tables, decides the factor question by exact
//! cover over translates, builds explicit complements and non-factor
//! witnesses, and classifies groups in which every subset of dividing size
//! is a factor.

pub mod catalog;
pub mod cfs;
pub mod construct;
pub mod error;
pub mod factor;
pub mod group;
pub mod lemmas;
pub mod subset;
pub mod witness;

pub use catalog::{catalog, parse_group_spec, CATALOG_BOUND};
pub use error::{Error, Result};
pub use factor::{is_left_factor, is_right_factor, FactorResult, Side};
pub use group::GroupTable;
pub use subset::Subset;
