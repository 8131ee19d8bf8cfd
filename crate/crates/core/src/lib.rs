//! Bijections between lattice walks in restricted domains (quadrant, octant,
//! tilted quadrant, Weyl chambers), open arc diagrams, pairs of Dyck paths,
//! Schnyder woods and standard Young tableaux.
//!
//! Every bijection in this crate is paired with an exhaustive or
//! dynamic-programming oracle in [`walks`], so that roundtrips and
//! cardinalities can be checked end to end.

pub mod arcdiag;
pub mod composite;
pub mod dyck;
mod error;
pub mod growth;
pub mod schnyder;
pub mod series;
pub mod verify;
pub mod walks;
pub mod young;

pub use error::{Error, Result};

/// Serializes a big integer as its decimal string.
pub(crate) fn decimal<S: serde::Serializer>(v: &num_bigint::BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}
