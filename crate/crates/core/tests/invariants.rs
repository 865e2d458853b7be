//! Property tests for signatures, reduction, groups and classification.

use orbifold::catalog::{for_each_signature, CatalogBounds};
use orbifold::classify::{classify, is_bad_closed};
use orbifold::group::{abelianization, presentation_of_closed};
use orbifold::reduce::{
    end_cut, manifold_double, mirror_double, orientation_double, reduce_to_closed, StepKind,
};
use orbifold::{BoundaryCircle, ExactRational, Signature};
use proptest::prelude::*;

fn circle() -> impl Strategy<Value = BoundaryCircle> {
    prop_oneof![
        Just(BoundaryCircle::Manifold),
        proptest::collection::vec(2u32..=6, 0..4)
            .prop_map(|corners| BoundaryCircle::Mirror { corners }),
    ]
}

fn signature() -> impl Strategy<Value = Signature> {
    (
        any::<bool>(),
        0u32..4,
        0u32..3,
        proptest::collection::vec(circle(), 0..3),
        proptest::collection::vec(2u32..=9, 0..5),
    )
        .prop_map(|(orientable, genus, punctures, boundary, cones)| {
            let genus = if orientable { genus } else { genus + 1 };
            Signature::new(orientable, genus, punctures, boundary, cones).unwrap()
        })
}

fn rotate<T: Clone>(v: &[T], k: usize) -> Vec<T> {
    if v.is_empty() {
        return Vec::new();
    }
    v.iter()
        .cycle()
        .skip(k % v.len())
        .take(v.len())
        .cloned()
        .collect()
}

proptest! {
    #[test]
    fn parse_format_roundtrip(sig in signature()) {
        let text = sig.to_string();
        let back: Signature = text.parse().unwrap();
        prop_assert_eq!(&back, &sig);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn euler_invariant_under_reordering(sig in signature(), k in 0usize..5) {
        let boundary: Vec<BoundaryCircle> = rotate(sig.boundary(), k)
            .into_iter()
            .map(|c| match c {
                BoundaryCircle::Mirror { corners } => BoundaryCircle::Mirror { corners: rotate(&corners, k + 1) },
                m => m,
            })
            .collect();
        let mut cones = sig.cones().to_vec();
        cones.reverse();
        let shuffled = Signature::new(sig.orientable(), sig.genus(), sig.punctures(), boundary, rotate(&cones, k)).unwrap();
        prop_assert_eq!(&shuffled, &sig);
        prop_assert_eq!(shuffled.orbifold_euler(), sig.orbifold_euler());
    }

    #[test]
    fn euler_at_most_underlying(sig in signature()) {
        let chi = sig.orbifold_euler();
        let underlying = ExactRational::from_integer(sig.underlying_euler());
        let singular = !sig.cones().is_empty() || sig.corners().next().is_some();
        prop_assert!(chi <= underlying);
        prop_assert_eq!(chi == underlying, !singular);
    }

    #[test]
    fn trace_preserves_euler_sign_and_is_idempotent(sig in signature()) {
        let trace = reduce_to_closed(&sig);
        let last = trace.final_signature();
        prop_assert!(last.is_reduced());
        prop_assert_eq!(last.orbifold_euler().signum(), sig.orbifold_euler().signum());
        prop_assert!(reduce_to_closed(last).steps.is_empty());
        let mut chi = sig.orbifold_euler();
        for step in &trace.steps {
            let next = step.result.orbifold_euler();
            let factor = if step.kind == StepKind::EndCut { 1 } else { 2 };
            prop_assert_eq!(&next, &chi.scale(factor));
            chi = next;
        }
    }

    #[test]
    fn final_cone_parity(sig in signature()) {
        let trace = reduce_to_closed(&sig);
        let k = trace.final_signature().cones().len();
        if trace.has_step(StepKind::ManifoldDouble) || trace.has_step(StepKind::OrientationDouble) {
            prop_assert_eq!(k % 2, 0);
        } else if trace.has_step(StepKind::MirrorDouble) {
            prop_assert_eq!(k % 2, sig.corners().count() % 2);
        }
    }

    #[test]
    fn verdict_propagates_along_trace(sig in signature()) {
        let trace = reduce_to_closed(&sig);
        let direct = classify(&sig);
        let on_final = classify(trace.final_signature());
        prop_assert_eq!(direct.good, on_final.good);
        prop_assert_eq!(direct.good, !is_bad_closed(trace.final_signature()).unwrap());
        // finiteness transfers across covers and the manifold double
        prop_assert_eq!(direct.group_finite, on_final.group_finite);
    }
}

fn suite_bounds() -> CatalogBounds {
    CatalogBounds {
        max_genus: 2,
        max_cones: 3,
        max_order: 5,
        max_boundary: 2,
        max_corners_per_circle: 2,
        max_corner_order: 4,
        max_punctures: 2,
        orientable_only: false,
    }
}

#[test]
fn each_double_doubles_euler_and_end_cut_preserves_it() {
    let mut applied = [0usize; 4];
    for_each_signature(&suite_bounds(), |sig| {
        let chi = sig.orbifold_euler();
        let checks = [
            (orientation_double(&sig), 2),
            (mirror_double(&sig), 2),
            (end_cut(&sig), 1),
            (manifold_double(&sig), 2),
        ];
        for (i, (step, factor)) in checks.into_iter().enumerate() {
            if let Ok(step) = step {
                applied[i] += 1;
                assert_eq!(
                    step.result.orbifold_euler(),
                    chi.scale(factor),
                    "{sig} {:?}",
                    step.kind
                );
            }
        }
    });
    assert!(applied.iter().all(|&n| n > 0), "{applied:?}");
}

#[test]
fn finiteness_cross_checked_by_abelianization() {
    for_each_signature(&suite_bounds(), |sig| {
        let c = classify(&sig);
        assert_eq!(c.group_finite, c.euler.is_positive());
        let ab = abelianization(&presentation_of_closed(&c.reduced).unwrap());
        if ab.free_rank > 0 {
            assert!(!c.group_finite, "{sig} has infinite abelianization");
        }
        if c.group_finite {
            let order = c.group_order.expect("finite groups here have known order");
            // the abelianization of the reduced group is a quotient of a
            // subgroup, so its order divides the reduced group's order
            let reduced_order = classify(&c.reduced).group_order.unwrap();
            let ab_order = u64::try_from(ab.order().unwrap()).unwrap();
            assert_eq!(reduced_order % ab_order, 0, "{sig}");
            assert_eq!(order % reduced_order, 0, "{sig}");
        }
    });
}

#[test]
fn abelianization_monotone_in_genus_and_cones() {
    let key = |g: u32, cones: &[u32]| {
        let sig = Signature::closed_orientable(g, cones.to_vec()).unwrap();
        let ab = abelianization(&presentation_of_closed(&sig).unwrap());
        (ab.free_rank, ab.torsion.len())
    };
    let families: &[&[u32]] = &[
        &[],
        &[2],
        &[2, 2],
        &[2, 2, 2],
        &[2, 2, 2, 2],
        &[3, 3, 3],
        &[2, 4, 4, 6],
    ];
    for g in 0..3u32 {
        for cones in families {
            for extra in 2..=6u32 {
                let mut more = cones.to_vec();
                more.push(extra);
                assert!(key(g, &more) >= key(g, cones), "g={g} {cones:?} + {extra}");
            }
            assert!(key(g + 1, cones) >= key(g, cones));
        }
    }
}

#[test]
fn spherical_order_integrality_not_a_badness_test() {
    // the spindle (3,6) has 2/chi = 4, an integer, yet is bad
    let sig: Signature = "O;g=0;cones=3,6".parse().unwrap();
    let two_over = sig.orbifold_euler().recip().unwrap().scale(2);
    assert_eq!(two_over.to_i64(), Some(4));
    assert!(!classify(&sig).good);
}
