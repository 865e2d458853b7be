//! Exact classification of finite-type 2-dimensional orbifolds.
//!
//! A [`Signature`] describes an orbifold combinatorially. From it the crate
//! computes the orbifold Euler characteristic, reduces the orbifold to a
//! closed orientable one with only cone points ([`reduce`]), presents and
//! abelianizes its orbifold fundamental group ([`group`]), decides whether
//! it is good and whether its group is finite ([`classify`]), and searches
//! for a finite manifold cover as a certificate of goodness ([`cover`]).
//!
//! ```
//! use orbifold::{classify, Signature};
//!
//! let sig: Signature = "O;g=0;cones=2,3,7".parse().unwrap();
//! let c = classify(&sig);
//! assert!(c.good && !c.group_finite);
//! assert_eq!(c.euler.to_string(), "-1/42");
//! ```

pub mod catalog;
pub mod classify;
pub mod cli;
pub mod cover;
pub mod group;
mod parse;
pub mod rational;
pub mod reduce;
pub mod signature;

pub use catalog::{build_catalog, enumerate_signatures, CatalogBounds};
pub use classify::{classify, is_bad_closed, theorem_check, Classification, Geometry};
pub use cover::{manifold_cover_search, verify_witness, CoverWitness, SearchOptions};
pub use parse::{parse_signature, ParseError};
pub use rational::ExactRational;
pub use reduce::reduce_to_closed;
pub use signature::{format_signature, BoundaryCircle, Signature};
