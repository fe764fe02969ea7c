mod common;

use common::oracle;
use proptest::prelude::*;
use schreier_core::corpus::{
    enumerate_regular, random_regular, random_regular_bipartite, rng, RegularOptions,
};
use schreier_core::fixtures::{
    complete, complete_bipartite, cubic_no_perfect_matching, cycle, dipole, petersen,
    quartic_with_half_edges,
};
use schreier_core::{
    action_from_labeling, classify, label_bipartite_involutions, orbital_graph, verify_labeling,
    ClassificationResult, Graph, GroupSignature, PermutationAction, SchreierLabeling,
};

/// Checks every certificate carried by a classification result.
fn check_result(g: &Graph, r: &ClassificationResult) {
    let degree = g.regularity().unwrap().unwrap();
    let check_labeling = |h: &Graph, l: &SchreierLabeling| {
        assert!(verify_labeling(h, l).is_empty());
        assert_eq!(l.signature.degree(), degree);
        assert_eq!(l.signature.involution_count, degree % 2);
        round_trip(h, l);
    };
    match r {
        ClassificationResult::DirectSchreier { labeling } => {
            assert!(!g.has_half_edges());
            check_labeling(g, labeling);
        }
        ClassificationResult::NotSchreierWithCover {
            certificate,
            cover,
            cover_labeling,
        } => {
            assert!(!g.has_half_edges());
            assert_eq!(degree % 2, 1);
            assert!(certificate.deficiency > 0);
            assert!(g.bipartition().is_none());
            if g.vertex_count() <= 16 {
                assert_eq!(certificate.matching.len(), oracle::max_matching_size(g));
            }
            assert!(cover.verify().unwrap().is_empty());
            assert!(cover.is_double_cover().unwrap());
            assert!(cover.source.is_connected());
            check_labeling(&cover.source, cover_labeling);
        }
        ClassificationResult::CoverOnly {
            cover,
            cover_labeling,
        } => {
            assert!(g.has_half_edges());
            assert!(cover.verify().unwrap().is_empty());
            assert!(cover.is_double_cover().unwrap());
            assert!(!cover.source.has_half_edges());
            assert!(cover.source.bipartition().is_some());
            check_labeling(&cover.source, cover_labeling);
        }
    }
}

fn round_trip(g: &Graph, l: &SchreierLabeling) {
    let action = action_from_labeling(g, l).unwrap();
    let (h, hl) = orbital_graph(&action).unwrap();
    assert_eq!(h.vertex_count(), g.vertex_count());
    assert_eq!(hl.endpoint_table(&h), l.endpoint_table(g));
}

#[test]
fn exhaustive_totality_small_regular_graphs() {
    let mut count = 0;
    for n in 1..=6 {
        for degree in 0..=4 {
            let half_edges = degree <= 3 || n <= 5;
            for g in enumerate_regular(n, degree, half_edges) {
                if g.is_connected() {
                    let r = classify(&g).unwrap();
                    check_result(&g, &r);
                    count += 1;
                }
            }
        }
    }
    assert!(count > 100_000, "{count}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_classification(
        n in 1usize..=200,
        degree in 3usize..=8,
        halves in 0usize..4,
        seed in any::<u64>(),
    ) {
        let opts = RegularOptions { half_edges: halves, ..Default::default() };
        let Some(g) = random_regular(&mut rng(seed), n, degree, opts) else {
            return Ok(());
        };
        let r = classify(&g).unwrap();
        check_result(&g, &r);
    }

    #[test]
    fn bipartite_involution_labelings(half in 1usize..60, degree in 2usize..=6, seed in any::<u64>()) {
        let g = random_regular_bipartite(&mut rng(seed), half, degree).unwrap();
        let b = g.bipartition().unwrap();
        let l = label_bipartite_involutions(&g, &b).unwrap();
        prop_assert_eq!(l.signature, GroupSignature::new(0, degree));
        prop_assert!(verify_labeling(&g, &l).is_empty());
        round_trip(&g, &l);
    }

    #[test]
    fn orbital_graphs_of_random_actions(
        n in 1usize..40,
        free in 0usize..3,
        invs in 0usize..3,
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        let mut r = rng(seed);
        let mut free_gens = Vec::new();
        for _ in 0..free {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut r);
            free_gens.push(p);
        }
        let mut inv_gens = Vec::new();
        for _ in 0..invs {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut r);
            let mut p: Vec<usize> = (0..n).collect();
            for pair in order.chunks(2).step_by(2) {
                if let [a, b] = *pair {
                    p[a] = b;
                    p[b] = a;
                }
            }
            inv_gens.push(p);
        }
        let action = PermutationAction { set_size: n, free_gens, inv_gens };
        let (g, l) = orbital_graph(&action).unwrap();
        prop_assert!(verify_labeling(&g, &l).is_empty());
        prop_assert_eq!(g.regularity().unwrap(), Some(2 * free + invs));
        if action.is_transitive() {
            prop_assert_eq!(action_from_labeling(&g, &l).unwrap(), action);
        }
    }
}

fn signature_of(r: &ClassificationResult) -> GroupSignature {
    match r {
        ClassificationResult::DirectSchreier { labeling } => labeling.signature,
        ClassificationResult::NotSchreierWithCover { cover_labeling, .. }
        | ClassificationResult::CoverOnly { cover_labeling, .. } => cover_labeling.signature,
    }
}

#[test]
fn named_fixtures() {
    let r = classify(&cycle(4)).unwrap();
    assert!(matches!(r, ClassificationResult::DirectSchreier { .. }));
    assert_eq!(signature_of(&r).to_string(), "F1");

    let r = classify(&petersen()).unwrap();
    assert!(matches!(r, ClassificationResult::DirectSchreier { .. }));
    assert_eq!(signature_of(&r).to_string(), "F1*Z2");
    check_result(&petersen(), &r);

    let left = cubic_no_perfect_matching();
    let r = classify(&left).unwrap();
    match &r {
        ClassificationResult::NotSchreierWithCover {
            certificate, cover, ..
        } => {
            assert_eq!(certificate.deficiency, 2);
            assert_eq!(cover.source.vertex_count(), 32);
        }
        other => panic!("unexpected {}", other.name()),
    }
    assert_eq!(signature_of(&r).to_string(), "F1*Z2");
    check_result(&left, &r);

    let right = quartic_with_half_edges();
    let r = classify(&right).unwrap();
    assert!(matches!(r, ClassificationResult::CoverOnly { .. }));
    assert_eq!(signature_of(&r).to_string(), "F2");
    check_result(&right, &r);

    for g in [
        complete(4),
        complete_bipartite(3, 3),
        dipole(3),
        dipole(1),
        complete(6),
    ] {
        let r = classify(&g).unwrap();
        assert!(matches!(r, ClassificationResult::DirectSchreier { .. }));
        check_result(&g, &r);
    }
}

#[test]
fn classification_is_deterministic() {
    assert_eq!(
        classify(&cubic_no_perfect_matching()).unwrap(),
        classify(&cubic_no_perfect_matching()).unwrap()
    );
    let g = random_regular(&mut rng(4), 80, 5, RegularOptions::default()).unwrap();
    assert_eq!(classify(&g).unwrap(), classify(&g).unwrap());
}
