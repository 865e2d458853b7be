//! The decision procedure: Euler characteristic, good/bad, finite/infinite,
//! group order and geometry for any finite-type signature.

use std::fmt;

use serde::Serialize;

use crate::group::{group_order_via_trace, GroupError};
use crate::rational::ExactRational;
use crate::reduce::{reduce_to_closed, ReductionTrace};
use crate::signature::Signature;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Geometry {
    Spherical,
    Euclidean,
    Hyperbolic,
    BadNoGeometry,
    OpenOrBounded,
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Geometry::Spherical => "spherical",
            Geometry::Euclidean => "euclidean",
            Geometry::Hyperbolic => "hyperbolic",
            Geometry::BadNoGeometry => "bad_no_geometry",
            Geometry::OpenOrBounded => "open_or_bounded",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub signature: Signature,
    pub euler: ExactRational,
    pub reduced: Signature,
    pub good: bool,
    pub group_finite: bool,
    pub group_order: Option<u64>,
    pub geometry: Geometry,
}

/// The serialized classification: field order is part of the format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    pub sig: String,
    pub euler: ExactRational,
    pub good: bool,
    pub finite: bool,
    pub order: Option<u64>,
    pub geometry: Geometry,
}

impl Classification {
    pub fn record(&self) -> ClassificationRecord {
        ClassificationRecord {
            sig: self.signature.to_string(),
            euler: self.euler.clone(),
            good: self.good,
            finite: self.group_finite,
            order: self.group_order,
            geometry: self.geometry,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad-list test needs a closed orientable cone-only signature, got {0}")]
pub struct NotReducedError(pub Signature);

/// The teardrop (one cone point) and the spindle (two cone points of
/// different orders) on the sphere.
pub fn is_bad_closed(sig: &Signature) -> Result<bool, NotReducedError> {
    if !sig.is_reduced() {
        return Err(NotReducedError(sig.clone()));
    }
    Ok(sig.genus() == 0
        && match *sig.cones() {
            [_] => true,
            [p, q] => p != q,
            _ => false,
        })
}

/// Classifies `sig` via its reduction trace.
pub fn classify(sig: &Signature) -> Classification {
    classify_trace(&reduce_to_closed(sig))
}

/// Classifies the start of an existing trace.
///
/// Goodness transfers both ways along every step, so the verdict on the
/// reduced signature is the verdict on the start.
pub fn classify_trace(trace: &ReductionTrace) -> Classification {
    let signature = trace.start.clone();
    let reduced = trace.final_signature().clone();
    let euler = signature.orbifold_euler();
    let good = !is_bad_closed(&reduced).expect("trace ends reduced");
    let group_finite = euler.is_positive();
    let group_order = match group_order_via_trace(trace, good) {
        Ok(order) => order,
        Err(e @ GroupError::NonIntegralOrder(..)) => {
            panic!("classification invariant broken for {signature}: {e}")
        }
        Err(e) => panic!("group order failed for {signature}: {e}"),
    };
    let geometry = if !good {
        Geometry::BadNoGeometry
    } else if !signature.is_closed() {
        Geometry::OpenOrBounded
    } else if euler.is_positive() {
        Geometry::Spherical
    } else if euler.is_zero() {
        Geometry::Euclidean
    } else {
        Geometry::Hyperbolic
    };
    Classification {
        signature,
        euler,
        reduced,
        good,
        group_finite,
        group_order,
        geometry,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Clause {
    /// Infinite group (chi <= 0) implies good.
    InfiniteImpliesGood,
    /// Punctures or manifold boundary imply good.
    OpenOrBoundedImpliesGood,
    /// Closed, good and spherical implies 2/chi is a positive integer.
    SphericalOrderIntegral,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ClauseStatus {
    Pass,
    Vacuous,
    Fail(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub signature: String,
    pub clauses: Vec<(Clause, ClauseStatus)>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn violations(&self) -> impl Iterator<Item = (Clause, &str)> {
        self.clauses.iter().filter_map(|(c, s)| match s {
            ClauseStatus::Fail(msg) => Some((*c, msg.as_str())),
            _ => None,
        })
    }
}

/// Consistency check of one classification against the goodness theorem.
///
/// Clause (b) covers punctures and manifold boundary circles. Mirror
/// boundary is singular locus: a disk whose mirror boundary carries a single
/// corner, or two corners of different orders, is double covered by the
/// teardrop or spindle and is bad.
pub fn theorem_check(sig: &Signature) -> TheoremReport {
    theorem_check_classification(&classify(sig))
}

pub fn theorem_check_classification(c: &Classification) -> TheoremReport {
    let implies = |hyp: bool, concl: bool, msg: String| match (hyp, concl) {
        (false, _) => ClauseStatus::Vacuous,
        (true, true) => ClauseStatus::Pass,
        (true, false) => ClauseStatus::Fail(msg),
    };
    let sig = &c.signature;
    let a = implies(
        !c.euler.is_positive(),
        c.good,
        format!("chi = {} <= 0 but classified bad", c.euler),
    );
    let b = implies(
        sig.has_manifold_ends(),
        c.good,
        "has punctures or manifold boundary but classified bad".to_string(),
    );
    let c_clause = implies(
        c.good && sig.is_closed() && c.euler.is_positive(),
        c.euler.recip().is_some_and(|r| {
            let two_over = r.scale(2);
            two_over.is_integer() && two_over.is_positive()
        }),
        format!("2/chi is not a positive integer for chi = {}", c.euler),
    );
    TheoremReport {
        signature: sig.to_string(),
        clauses: vec![
            (Clause::InfiniteImpliesGood, a),
            (Clause::OpenOrBoundedImpliesGood, b),
            (Clause::SphericalOrderIntegral, c_clause),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    #[test]
    fn bad_list() {
        assert_eq!(is_bad_closed(&sig("O;g=0;cones=7")), Ok(true));
        assert_eq!(is_bad_closed(&sig("O;g=0;cones=2,3")), Ok(true));
        assert_eq!(is_bad_closed(&sig("O;g=0;cones=3,3")), Ok(false));
        assert_eq!(is_bad_closed(&sig("O;g=1;cones=5")), Ok(false));
        assert_eq!(is_bad_closed(&sig("O;g=0")), Ok(false));
        assert_eq!(is_bad_closed(&sig("O;g=0;cones=2,3,5")), Ok(false));
        assert!(is_bad_closed(&sig("O;g=0;bdry=m;cones=2")).is_err());
        assert!(is_bad_closed(&sig("N;g=1")).is_err());
    }

    #[test]
    fn classify_examples() {
        let c = classify(&sig("O;g=0;cones=2,3,7"));
        assert_eq!(c.euler, ExactRational::new(-1, 42));
        assert!(c.good && !c.group_finite);
        assert_eq!(c.group_order, None);
        assert_eq!(c.geometry, Geometry::Hyperbolic);

        let c = classify(&sig("O;g=0;cones=2,3"));
        assert_eq!(c.euler, ExactRational::new(5, 6));
        assert!(!c.good && c.group_finite);
        assert_eq!(c.group_order, Some(1));
        assert_eq!(c.geometry, Geometry::BadNoGeometry);

        let c = classify(&sig("O;g=0;bdry=m;cones=5"));
        assert_eq!(c.euler, ExactRational::new(1, 5));
        assert!(c.good && c.group_finite);
        assert_eq!(c.group_order, Some(5));
        assert_eq!(c.geometry, Geometry::OpenOrBounded);
        assert_eq!(c.reduced.to_string(), "O;g=0;cones=5,5");

        let c = classify(&sig("O;g=1"));
        assert!(c.euler.is_zero());
        assert!(c.good && !c.group_finite);
        assert_eq!(c.geometry, Geometry::Euclidean);
    }

    #[test]
    fn non_orientable_closed() {
        let c = classify(&sig("N;g=1"));
        assert!(c.good && c.group_finite);
        assert_eq!(c.group_order, Some(2));
        assert_eq!(c.geometry, Geometry::Spherical);
        let c = classify(&sig("N;g=2"));
        assert_eq!(c.geometry, Geometry::Euclidean);
        let c = classify(&sig("N;g=1;cones=5"));
        assert_eq!(c.group_order, Some(10));
    }

    #[test]
    fn mirror_disks_with_unbalanced_corners_are_bad() {
        for s in ["O;g=0;bdry=r(3)", "O;g=0;bdry=r(2,3)"] {
            let c = classify(&sig(s));
            assert!(!c.good, "{s}");
            assert!(c.group_finite);
            assert_eq!(c.geometry, Geometry::BadNoGeometry);
            assert!(theorem_check_classification(&c).passed());
        }
        assert_eq!(classify(&sig("O;g=0;bdry=r(3)")).group_order, Some(2));
        assert!(classify(&sig("O;g=0;bdry=r(3,3)")).good);
    }

    #[test]
    fn record_json() {
        let json = serde_json::to_string(&classify(&sig("O;g=0;cones=2,3,7")).record()).unwrap();
        assert_eq!(
            json,
            r#"{"sig":"O;g=0;cones=2,3,7","euler":"-1/42","good":true,"finite":false,"order":null,"geometry":"hyperbolic"}"#
        );
        let json = serde_json::to_string(&classify(&sig("N;g=1")).record()).unwrap();
        assert_eq!(
            json,
            r#"{"sig":"N;g=1","euler":"1/1","good":true,"finite":true,"order":2,"geometry":"spherical"}"#
        );
    }

    #[test]
    fn theorem_check_examples() {
        let r = theorem_check(&sig("O;g=0;cones=2,2,2,2"));
        assert!(r.passed());
        assert_eq!(r.clauses[0].1, ClauseStatus::Pass);

        let r = theorem_check(&sig("O;g=0;pun=2"));
        assert!(r.passed());
        assert_eq!(r.clauses[1].1, ClauseStatus::Pass);

        let r = theorem_check(&sig("O;g=0;cones=9"));
        assert!(r.passed());
        assert_eq!(r.clauses[0].1, ClauseStatus::Vacuous);
        assert_eq!(r.clauses[1].1, ClauseStatus::Vacuous);
        assert_eq!(r.clauses[2].1, ClauseStatus::Vacuous);
    }

    #[test]
    fn theorem_check_reports_violations() {
        let mut c = classify(&sig("O;g=0;pun=1;cones=2,3,7"));
        c.good = false;
        let r = theorem_check_classification(&c);
        let v: Vec<_> = r.violations().map(|(c, _)| c).collect();
        assert_eq!(
            v,
            vec![
                Clause::InfiniteImpliesGood,
                Clause::OpenOrBoundedImpliesGood
            ]
        );
    }
}
