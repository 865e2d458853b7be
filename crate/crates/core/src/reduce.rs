//! Reduction of an arbitrary signature to a closed orientable cone-only one.
//!
//! The pipeline runs, in this order and only where applicable:
//!
//! 1. orientation double (two-sheeted cover of a non-orientable surface),
//! 2. double along the mirror boundary (two-sheeted orbifold cover whose
//!    corner reflectors become cone points),
//! 3. end cut (punctures become manifold boundary circles),
//! 4. double along the manifold boundary (the input sits inside the result
//!    as a suborbifold).
//!
//! Each step records how it relates the two orbifolds, which is what lets
//! goodness and group finiteness be transported back to the start.

use serde::Serialize;

use crate::rational::ExactRational;
use crate::signature::{BoundaryCircle, Signature};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum StepKind {
    OrientationDouble,
    MirrorDouble,
    EndCut,
    ManifoldDouble,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Relationship {
    /// The result is a 2-sheeted orbifold cover of the input; its group is
    /// an index-2 subgroup.
    TwoSheetedOrbifoldCover,
    /// Same orbifold with its ends compactified to boundary circles.
    SameOrbifoldRecompactified,
    /// The input is a suborbifold of the result (one half of the double).
    SuborbifoldOfDouble,
}

impl StepKind {
    pub fn relationship(self) -> Relationship {
        match self {
            StepKind::OrientationDouble | StepKind::MirrorDouble => {
                Relationship::TwoSheetedOrbifoldCover
            }
            StepKind::EndCut => Relationship::SameOrbifoldRecompactified,
            StepKind::ManifoldDouble => Relationship::SuborbifoldOfDouble,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub kind: StepKind,
    pub result: Signature,
    pub relationship: Relationship,
}

impl ReductionStep {
    fn new(kind: StepKind, result: Signature) -> Self {
        ReductionStep {
            kind,
            result,
            relationship: kind.relationship(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReduceError {
    #[error("orientation double needs a non-orientable signature, got {0}")]
    AlreadyOrientable(Box<Signature>),
    #[error("mirror double needs an orientable signature with a mirror circle, got {0}")]
    NoMirrorBoundary(Box<Signature>),
    #[error("end cut needs at least one puncture, got {0}")]
    NoPunctures(Box<Signature>),
    #[error(
        "manifold double needs an orientable, puncture-free signature without mirror circles \
         and with a manifold circle, got {0}"
    )]
    NotManifoldBounded(Box<Signature>),
}

fn doubled<T: Clone>(items: &[T]) -> Vec<T> {
    items.iter().chain(items).cloned().collect()
}

/// Passes to the orientable double cover of the underlying surface.
///
/// `h` crosscaps lift to orientable genus `h - 1`; boundary circles,
/// punctures and cone points each lift to two copies.
pub fn orientation_double(sig: &Signature) -> Result<ReductionStep, ReduceError> {
    if sig.orientable() {
        return Err(ReduceError::AlreadyOrientable(Box::new(sig.clone())));
    }
    let result = Signature::from_parts(
        true,
        sig.genus() - 1,
        2 * sig.punctures(),
        doubled(sig.boundary()),
        doubled(sig.cones()),
    );
    Ok(ReductionStep::new(StepKind::OrientationDouble, result))
}

/// Doubles along every mirror circle.
///
/// With `r` mirror circles the result has genus `2g + r - 1`; each corner
/// reflector of order `n` becomes one cone point of order `n`.
pub fn mirror_double(sig: &Signature) -> Result<ReductionStep, ReduceError> {
    let mirrors = sig.mirror_circles() as u32;
    if !sig.orientable() || mirrors == 0 {
        return Err(ReduceError::NoMirrorBoundary(Box::new(sig.clone())));
    }
    let manifold = vec![BoundaryCircle::Manifold; 2 * sig.manifold_circles()];
    let mut cones = doubled(sig.cones());
    cones.extend(sig.corners());
    let result = Signature::from_parts(
        true,
        2 * sig.genus() + mirrors - 1,
        2 * sig.punctures(),
        manifold,
        cones,
    );
    Ok(ReductionStep::new(StepKind::MirrorDouble, result))
}

/// Replaces every puncture by a manifold boundary circle.
pub fn end_cut(sig: &Signature) -> Result<ReductionStep, ReduceError> {
    if sig.punctures() == 0 {
        return Err(ReduceError::NoPunctures(Box::new(sig.clone())));
    }
    let mut boundary = sig.boundary().to_vec();
    boundary.extend(std::iter::repeat_n(
        BoundaryCircle::Manifold,
        sig.punctures() as usize,
    ));
    let result = Signature::from_parts(
        sig.orientable(),
        sig.genus(),
        0,
        boundary,
        sig.cones().to_vec(),
    );
    Ok(ReductionStep::new(StepKind::EndCut, result))
}

/// Doubles along all (manifold) boundary circles.
pub fn manifold_double(sig: &Signature) -> Result<ReductionStep, ReduceError> {
    let circles = sig.manifold_circles() as u32;
    if !sig.orientable() || sig.mirror_circles() > 0 || sig.punctures() > 0 || circles == 0 {
        return Err(ReduceError::NotManifoldBounded(Box::new(sig.clone())));
    }
    let result = Signature::from_parts(
        true,
        2 * sig.genus() + circles - 1,
        0,
        Vec::new(),
        doubled(sig.cones()),
    );
    Ok(ReductionStep::new(StepKind::ManifoldDouble, result))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub start: Signature,
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    /// The closed orientable cone-only end of the pipeline.
    pub fn final_signature(&self) -> &Signature {
        self.steps.last().map_or(&self.start, |s| &s.result)
    }

    pub fn has_step(&self, kind: StepKind) -> bool {
        self.steps.iter().any(|s| s.kind == kind)
    }

    /// Number of two-sheeted covering steps, i.e. log2 of the index of the
    /// final group in the starting group when no manifold double occurs.
    pub fn covering_steps(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| s.relationship == Relationship::TwoSheetedOrbifoldCover)
            .count()
    }

    /// Serializable view: one record per step.
    pub fn records(&self) -> Vec<TraceRecord> {
        self.steps
            .iter()
            .map(|s| TraceRecord {
                step_kind: s.kind,
                relationship: s.relationship,
                signature: s.result.to_string(),
                euler: s.result.orbifold_euler(),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceRecord {
    pub step_kind: StepKind,
    pub relationship: Relationship,
    pub signature: String,
    pub euler: ExactRational,
}

type Guard = fn(&Signature) -> bool;
type Transform = fn(&Signature) -> Result<ReductionStep, ReduceError>;

/// Runs the full pipeline. Already-reduced input yields an empty trace.
pub fn reduce_to_closed(sig: &Signature) -> ReductionTrace {
    let mut steps = Vec::new();
    let mut current = sig.clone();
    let transforms: [(Guard, Transform); 4] = [
        (|s| !s.orientable(), orientation_double),
        (|s| s.mirror_circles() > 0, mirror_double),
        (|s| s.punctures() > 0, end_cut),
        (|s| s.manifold_circles() > 0, manifold_double),
    ];
    for (applies, transform) in transforms {
        if applies(&current) {
            let step = transform(&current).expect("pipeline preconditions hold in order");
            current = step.result.clone();
            steps.push(step);
        }
    }
    debug_assert!(current.is_reduced());
    ReductionTrace {
        start: sig.clone(),
        steps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    fn result_of(step: Result<ReductionStep, ReduceError>) -> String {
        step.unwrap().result.to_string()
    }

    #[test]
    fn orientation_double_examples() {
        assert_eq!(result_of(orientation_double(&sig("N;g=1"))), "O;g=0");
        assert_eq!(result_of(orientation_double(&sig("N;g=2"))), "O;g=1");
        let step = orientation_double(&sig("N;g=1;cones=3")).unwrap();
        assert_eq!(step.result.to_string(), "O;g=0;cones=3,3");
        assert_eq!(step.result.orbifold_euler(), ExactRational::new(2, 3));
        assert_eq!(step.relationship, Relationship::TwoSheetedOrbifoldCover);
        assert_eq!(
            result_of(orientation_double(&sig("N;g=3;pun=1;bdry=m,r(2,3)"))),
            "O;g=2;pun=2;bdry=m,m,r(2,3),r(2,3)"
        );
        assert!(matches!(
            orientation_double(&sig("O;g=0")),
            Err(ReduceError::AlreadyOrientable(_))
        ));
    }

    #[test]
    fn mirror_double_examples() {
        assert_eq!(
            result_of(mirror_double(&sig("O;g=0;bdry=r(2,3)"))),
            "O;g=0;cones=2,3"
        );
        assert_eq!(result_of(mirror_double(&sig("O;g=0;bdry=r()"))), "O;g=0");
        let step = mirror_double(&sig("O;g=0;bdry=r(2,2,2)")).unwrap();
        assert_eq!(step.result.to_string(), "O;g=0;cones=2,2,2");
        assert_eq!(step.result.orbifold_euler(), ExactRational::new(1, 2));
        assert_eq!(
            result_of(mirror_double(&sig("O;g=1;pun=1;cones=5;bdry=m,r(),r(4)"))),
            "O;g=3;pun=2;cones=4,5,5;bdry=m,m"
        );
        assert!(mirror_double(&sig("O;g=0;bdry=m")).is_err());
        assert!(mirror_double(&sig("N;g=1;bdry=r()")).is_err());
    }

    #[test]
    fn end_cut_examples() {
        assert_eq!(
            result_of(end_cut(&sig("O;g=0;pun=1;cones=3"))),
            "O;g=0;cones=3;bdry=m"
        );
        assert_eq!(result_of(end_cut(&sig("O;g=1;pun=2"))), "O;g=1;bdry=m,m");
        let step = end_cut(&sig("O;g=0;pun=1")).unwrap();
        assert_eq!(step.result.to_string(), "O;g=0;bdry=m");
        assert_eq!(step.relationship, Relationship::SameOrbifoldRecompactified);
        assert!(end_cut(&sig("O;g=0")).is_err());
    }

    #[test]
    fn manifold_double_examples() {
        assert_eq!(
            result_of(manifold_double(&sig("O;g=0;bdry=m;cones=5"))),
            "O;g=0;cones=5,5"
        );
        let annulus = manifold_double(&sig("O;g=0;bdry=m,m")).unwrap();
        assert_eq!(annulus.result.to_string(), "O;g=1");
        assert!(annulus.result.orbifold_euler().is_zero());
        assert_eq!(annulus.relationship, Relationship::SuborbifoldOfDouble);
        assert_eq!(result_of(manifold_double(&sig("O;g=0;bdry=m"))), "O;g=0");
        for bad in [
            "O;g=0",
            "O;g=0;pun=1;bdry=m",
            "O;g=0;bdry=m,r()",
            "N;g=1;bdry=m",
        ] {
            assert!(manifold_double(&sig(bad)).is_err(), "{bad}");
        }
    }

    #[test]
    fn pipeline_examples() {
        let t = reduce_to_closed(&sig("O;g=0;cones=2,3,7"));
        assert!(t.steps.is_empty());
        assert_eq!(t.final_signature().to_string(), "O;g=0;cones=2,3,7");

        let t = reduce_to_closed(&sig("N;g=1;bdry=r(4)"));
        let kinds: Vec<_> = t.steps.iter().map(|s| s.kind).collect();
        assert_eq!(
            kinds,
            vec![StepKind::OrientationDouble, StepKind::MirrorDouble]
        );
        assert_eq!(t.final_signature().to_string(), "O;g=1;cones=4,4");
        assert_eq!(t.start.orbifold_euler(), ExactRational::new(-3, 8));
        assert_eq!(
            t.final_signature().orbifold_euler(),
            ExactRational::new(-3, 2)
        );

        let t = reduce_to_closed(&sig("O;g=0;pun=1;cones=2,2"));
        let kinds: Vec<_> = t.steps.iter().map(|s| s.kind).collect();
        assert_eq!(kinds, vec![StepKind::EndCut, StepKind::ManifoldDouble]);
        assert_eq!(t.final_signature().to_string(), "O;g=0;cones=2,2,2,2");
        assert!(t.final_signature().orbifold_euler().is_zero());
    }

    #[test]
    fn trace_records() {
        let t = reduce_to_closed(&sig("N;g=1;bdry=r(4)"));
        let json = serde_json::to_string(&t.records()).unwrap();
        assert_eq!(
            json,
            r#"[{"step_kind":"OrientationDouble","relationship":"TwoSheetedOrbifoldCover","signature":"O;g=0;bdry=r(4),r(4)","euler":"-3/4"},{"step_kind":"MirrorDouble","relationship":"TwoSheetedOrbifoldCover","signature":"O;g=1;cones=4,4","euler":"-3/2"}]"#
        );
        assert_eq!(t.covering_steps(), 2);
    }
}
