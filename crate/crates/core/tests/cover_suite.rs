//! Cover search: soundness, completeness on small cases, determinism, and
//! the witness format.

use orbifold::catalog::{for_each_signature, CatalogBounds};
use orbifold::cover::{degree_schedule, CoverError, Permutation, WitnessFailure};
use orbifold::{
    classify, manifold_cover_search, verify_witness, CoverWitness, ExactRational, SearchOptions,
    Signature,
};

fn sig(s: &str) -> Signature {
    s.parse().unwrap()
}

fn closed_small() -> Vec<Signature> {
    let bounds = CatalogBounds {
        max_genus: 1,
        max_cones: 4,
        max_order: 6,
        orientable_only: true,
        ..Default::default()
    };
    let mut out = Vec::new();
    for_each_signature(&bounds, |s| out.push(s));
    out
}

fn assert_sound(s: &Signature, w: &CoverWitness) {
    let verdict = verify_witness(s, w).unwrap();
    assert!(verdict.is_valid(), "{s}: {verdict}");
    let expected = s.orbifold_euler().scale(w.degree as i64);
    assert_eq!(w.cover_euler, expected, "{s}");
    assert_eq!(
        w.cover_euler,
        ExactRational::from_integer(2 - 2 * w.cover_genus as i64),
        "{s}"
    );
}

#[test]
fn bad_signatures_have_no_cover() {
    for s in closed_small() {
        if classify(&s).good {
            continue;
        }
        let r = manifold_cover_search(&s, SearchOptions::canonical(12)).unwrap();
        assert!(r.witness.is_none(), "{s} has a witness");
    }
}

#[test]
fn good_signatures_have_a_sound_cover() {
    for s in closed_small() {
        if !classify(&s).good {
            continue;
        }
        // n * chi must be even, which may need twice the lcm
        let max = 60.max(2 * s.cone_lcm() as usize);
        let r = manifold_cover_search(&s, SearchOptions::canonical(max)).unwrap();
        let w = r
            .witness
            .unwrap_or_else(|| panic!("{s}: no witness up to {max}, tried {:?}", r.schedule));
        assert_sound(&s, &w);
        assert!(r.schedule.contains(&w.degree));
        assert_eq!(w.degree % s.cone_lcm() as usize, 0, "{s}");
    }
}

#[test]
fn spherical_degree_is_forced() {
    for (text, degree) in [
        ("O;g=0;cones=2,3,5", 60),
        ("O;g=0;cones=2,3,4", 24),
        ("O;g=0;cones=2,3,3", 12),
        ("O;g=0;cones=2,2,5", 10),
        ("O;g=0;cones=5,5", 5),
        ("O;g=0", 1),
    ] {
        let s = sig(text);
        let (schedule, _) = degree_schedule(&s, 100);
        assert_eq!(schedule, vec![degree], "{text}");
        let w = manifold_cover_search(&s, SearchOptions::canonical(100))
            .unwrap()
            .witness
            .unwrap();
        assert_eq!((w.degree, w.cover_genus), (degree, 0), "{text}");
        assert_sound(&s, &w);
    }
    let (schedule, note) = degree_schedule(&sig("O;g=0;cones=2,3"), 100);
    assert!(schedule.is_empty());
    assert!(note.unwrap().contains("not a multiple"));
}

#[test]
fn hyperbolic_triangle_groups() {
    for (text, degree) in [
        ("O;g=0;cones=2,3,7", 84),
        ("O;g=0;cones=2,4,5", 40),
        ("O;g=0;cones=3,3,4", 24),
    ] {
        let s = sig(text);
        let w = manifold_cover_search(&s, SearchOptions::canonical(degree))
            .unwrap()
            .witness;
        let w = w.unwrap_or_else(|| panic!("{text}: no witness up to {degree}"));
        assert!(w.degree <= degree);
        assert_sound(&s, &w);
    }
}

#[test]
fn canonical_search_is_deterministic() {
    for text in [
        "O;g=0;cones=2,3,6",
        "O;g=1;cones=2,2",
        "O;g=0;cones=3,3,3,3",
        "O;g=2",
    ] {
        let s = sig(text);
        let a = manifold_cover_search(&s, SearchOptions::canonical(12)).unwrap();
        let b = manifold_cover_search(&s, SearchOptions::canonical(12)).unwrap();
        assert_eq!(a, b, "{text}");
        assert_eq!(
            serde_json::to_string(&a.witness).unwrap(),
            serde_json::to_string(&b.witness).unwrap()
        );
    }
}

#[test]
fn parallel_search_finds_the_same_degree() {
    for text in [
        "O;g=0;cones=2,3,7",
        "O;g=0;cones=2,2,2,3",
        "O;g=1;cones=3",
        "O;g=0;cones=2,3",
    ] {
        let s = sig(text);
        let seq = manifold_cover_search(&s, SearchOptions::canonical(84)).unwrap();
        let par = manifold_cover_search(
            &s,
            SearchOptions {
                max_degree: 84,
                parallel: true,
            },
        )
        .unwrap();
        assert_eq!(
            seq.witness.as_ref().map(|w| w.degree),
            par.witness.as_ref().map(|w| w.degree),
            "{text}"
        );
        if let Some(w) = &par.witness {
            assert_sound(&s, w);
        }
    }
}

#[test]
fn teardrop_relator_forces_identity() {
    // x1 = 1 in the teardrop group: every candidate image must be trivial.
    for n in 1..=6 {
        let w = CoverWitness::new(
            &sig("O;g=0;cones=3"),
            vec![],
            vec![Permutation::identity(n)],
        );
        assert!(w.long_relator_image().is_identity());
        let v = verify_witness(&sig("O;g=0;cones=3"), &w).unwrap();
        assert!(
            matches!(v.failure, Some(WitnessFailure::CycleType { .. })),
            "{v}"
        );
    }
}

#[test]
fn tampered_witness_is_rejected() {
    let s = sig("O;g=0;cones=2,2,2,2");
    let mut w = manifold_cover_search(&s, SearchOptions::canonical(12))
        .unwrap()
        .witness
        .unwrap();
    w.cone_images[0] = Permutation::identity(w.degree);
    assert!(!verify_witness(&s, &w).unwrap().is_valid());

    let s = sig("O;g=0;cones=3,3,3");
    let mut w = manifold_cover_search(&s, SearchOptions::canonical(12))
        .unwrap()
        .witness
        .unwrap();
    // X1 X2 X3 = 1 gives X1^-1 X2 X3 = X1^-2 = X1, not the identity
    w.cone_images[0] = w.cone_images[0].inverse();
    let verdict = verify_witness(&s, &w).unwrap();
    assert!(
        matches!(verdict.failure, Some(WitnessFailure::Relator(_))),
        "{verdict}"
    );
}

#[test]
fn witness_json_roundtrip() {
    let s = sig("O;g=1;cones=2,2");
    let w = manifold_cover_search(&s, SearchOptions::canonical(12))
        .unwrap()
        .witness
        .unwrap();
    let text = serde_json::to_string(&w).unwrap();
    let back: CoverWitness = serde_json::from_str(&text).unwrap();
    assert_eq!(back, w);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["degree"], w.degree);
    assert_eq!(value["handles"].as_array().unwrap().len(), 1);
    assert_eq!(value["cones"].as_array().unwrap().len(), 2);
}

#[test]
fn preconditions() {
    let err = manifold_cover_search(&sig("N;g=1"), SearchOptions::canonical(12)).unwrap_err();
    assert!(matches!(err, CoverError::NotReduced(_)));
    let err = manifold_cover_search(&sig("O;g=1"), SearchOptions::canonical(0)).unwrap_err();
    assert_eq!(err, CoverError::MaxDegree(0));
    let r = manifold_cover_search(&sig("O;g=0;cones=5,6"), SearchOptions::canonical(12)).unwrap();
    assert!(r.schedule.is_empty() && r.witness.is_none() && r.note.is_some());
}
