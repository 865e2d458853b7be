//! Constructive certificates of goodness: finite manifold covers given as
//! permutation representations of the orbifold group.

mod perm;
mod search;
mod witness;

pub use perm::{is_transitive, Permutation, PermutationError};
pub use search::{
    degree_schedule, manifold_cover_search, CoverSearch, SearchOptions, MAX_SUPPORTED_DEGREE,
};
pub use witness::{verify_witness, CoverWitness, WitnessFailure, WitnessVerdict};

use crate::signature::Signature;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoverError {
    #[error("signature {0} is not closed, orientable and cone-only; reduce it first")]
    NotReduced(Box<Signature>),
    #[error("max degree must be between 1 and {}, got {0}", MAX_SUPPORTED_DEGREE)]
    MaxDegree(usize),
    #[error("witness has {handles} handle pairs and {cones} cone images, which does not fit {signature}")]
    ShapeMismatch {
        handles: usize,
        cones: usize,
        signature: Box<Signature>,
    },
    #[error("permutation of degree {found} in a witness of degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("search produced a witness that fails verification: {0}")]
    Unsound(Box<WitnessFailure>),
}
