//! Orbifold fundamental groups of closed orientable cone-only orbifolds:
//! presentations, abelianizations and orders of the finite ones.

mod abelian;
mod matrix;
mod presentation;
mod smith;

pub use abelian::{abelianization, abelianization_with_smith, relation_matrix, AbelianInvariants};
pub use matrix::IntegerMatrix;
pub use presentation::{presentation_of_closed, Generator, Letter, Presentation, Word};
pub use smith::{smith_normal_form, SmithError, SmithForm};

use num_integer::Integer;

use crate::rational::ExactRational;
use crate::reduce::{ReductionTrace, StepKind};
use crate::signature::Signature;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("signature {0} is not closed, orientable and cone-only; reduce it first")]
    NotReduced(Box<Signature>),
    #[error("group order requested for {0}, whose Euler characteristic {1} is not positive")]
    NotSpherical(Box<Signature>, ExactRational),
    #[error("2/chi = {1} is not a positive integer for good spherical signature {0}")]
    NonIntegralOrder(Box<Signature>, ExactRational),
    #[error("{0} is marked bad but is not a teardrop or spindle")]
    NotOnBadList(Box<Signature>),
    #[error("group order overflows u64")]
    Overflow,
}

/// Order of the (finite) group of a closed orientable cone-only orbifold
/// with `chi > 0`.
///
/// Good spherical orbifolds are covered by the sphere with degree `2/chi`,
/// which is the group order. On the bad list the presentation collapses: a
/// teardrop forces `x1 = 1`, and a spindle `x1 x2 = 1` with orders `p, q`
/// leaves a cyclic group of order `gcd(p, q)`.
pub fn group_order_if_finite(
    sig: &Signature,
    chi: &ExactRational,
    good: bool,
) -> Result<u64, GroupError> {
    if !sig.is_reduced() {
        return Err(GroupError::NotReduced(Box::new(sig.clone())));
    }
    if !chi.is_positive() {
        return Err(GroupError::NotSpherical(Box::new(sig.clone()), chi.clone()));
    }
    if good {
        let order = chi.recip().expect("positive").scale(2);
        return match order.to_i64() {
            Some(n) if n > 0 => Ok(n as u64),
            _ => Err(GroupError::NonIntegralOrder(Box::new(sig.clone()), order)),
        };
    }
    match *sig.cones() {
        [_] if sig.genus() == 0 => Ok(1),
        [p, q] if sig.genus() == 0 && p != q => Ok(u64::from(p.gcd(&q))),
        _ => Err(GroupError::NotOnBadList(Box::new(sig.clone()))),
    }
}

/// Group order of the starting signature of a trace, when finite and
/// determined.
///
/// Each two-sheeted covering step doubles the order. Across a manifold
/// double the order of the double says nothing about the half, except for a
/// disk with at most one cone point, whose group is cyclic of the cone order.
/// Those disks are the only finite cases that reach a manifold double.
pub fn group_order_via_trace(
    trace: &ReductionTrace,
    good: bool,
) -> Result<Option<u64>, GroupError> {
    let start_chi = trace.start.orbifold_euler();
    if !start_chi.is_positive() {
        return Ok(None);
    }
    let (base, covers) = match trace
        .steps
        .iter()
        .position(|s| s.kind == StepKind::ManifoldDouble)
    {
        Some(idx) => {
            let half = if idx == 0 {
                &trace.start
            } else {
                &trace.steps[idx - 1].result
            };
            let base = match (half.genus(), half.boundary().len(), half.cones()) {
                (0, 1, []) => Some(1),
                (0, 1, [p]) => Some(u64::from(*p)),
                _ => None,
            };
            (base, &trace.steps[..idx])
        }
        None => {
            let last = trace.final_signature();
            let chi = last.orbifold_euler();
            (
                Some(group_order_if_finite(last, &chi, good)?),
                &trace.steps[..],
            )
        }
    };
    let Some(base) = base else { return Ok(None) };
    let doublings = covers
        .iter()
        .filter(|s| s.relationship == crate::reduce::Relationship::TwoSheetedOrbifoldCover)
        .count() as u32;
    let factor = 2u64.checked_pow(doublings).ok_or(GroupError::Overflow)?;
    base.checked_mul(factor)
        .map(Some)
        .ok_or(GroupError::Overflow)
}
