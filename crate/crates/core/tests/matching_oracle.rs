mod common;

use common::oracle;
use proptest::prelude::*;
use schreier_core::corpus::{enumerate_simple, random_multigraph, random_regular_bipartite, rng};
use schreier_core::fixtures::{complete, complete_bipartite, cubic_no_perfect_matching, petersen};
use schreier_core::{
    is_matchable, max_matching_bipartite, max_matching_general, orthogonal_matchings,
    remove_matching, EdgeId, Graph, VertexId,
};

#[test]
fn general_matching_equals_brute_force_on_all_small_simple_graphs() {
    for n in 1..=6 {
        for g in enumerate_simple(n) {
            let m = max_matching_general(&g);
            m.check(&g).unwrap();
            assert_eq!(m.len(), oracle::max_matching_size(&g), "{g:?}");
        }
    }
}

fn multigraph_upto(max_n: usize) -> impl Strategy<Value = Graph> {
    (
        1usize..=max_n,
        0usize..24,
        0usize..4,
        0usize..4,
        any::<u64>(),
    )
        .prop_map(|(n, m, l, h, seed)| random_multigraph(&mut rng(seed), n, m, l, h))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn general_matching_equals_brute_force(g in multigraph_upto(10)) {
        let m = max_matching_general(&g);
        prop_assert!(m.check(&g).is_ok());
        prop_assert_eq!(m.len(), oracle::max_matching_size(&g));
    }

    #[test]
    fn no_augmenting_path_remains(g in multigraph_upto(12)) {
        let m = max_matching_general(&g);
        prop_assert!(!oracle::has_augmenting_path(&g, &m));
        if let Some(b) = g.bipartition() {
            let mb = max_matching_bipartite(&g, &b).unwrap();
            prop_assert!(mb.check(&g).is_ok());
            prop_assert!(!oracle::has_augmenting_path(&g, &mb));
            prop_assert_eq!(mb.len(), m.len());
        }
    }

    #[test]
    fn orthogonal_matchings_partition_regular_bipartite(
        half in 1usize..40,
        degree in 1usize..6,
        seed in any::<u64>(),
    ) {
        prop_assume!(degree > 1 || half == 1);
        let g = random_regular_bipartite(&mut rng(seed), half, degree).unwrap();
        let b = g.bipartition().unwrap();
        let ms = orthogonal_matchings(&g, &b, degree).unwrap();
        let mut all: Vec<EdgeId> = Vec::new();
        for m in &ms {
            prop_assert!(m.is_perfect(&g));
            all.extend_from_slice(m.edges());
        }
        all.sort();
        prop_assert_eq!(all, g.edges().collect::<Vec<_>>());
    }
}

#[test]
fn brute_force_fixture_values() {
    let k33 = complete_bipartite(3, 3);
    assert_eq!(oracle::max_matching_size(&k33), 3);
    assert_eq!(oracle::count_perfect_matchings(&k33), 6);
    let b = k33.bipartition().unwrap();
    assert_eq!(max_matching_bipartite(&k33, &b).unwrap().len(), 3);

    assert_eq!(oracle::count_perfect_matchings(&complete(4)), 3);
    let k4 = is_matchable(&complete(4));
    assert!(k4.matchable);
    assert_eq!(k4.deficiency, 0);

    assert_eq!(oracle::max_matching_size(&petersen()), 5);
    assert_eq!(max_matching_general(&petersen()).len(), 5);

    let left = cubic_no_perfect_matching();
    assert_eq!(oracle::max_matching_size(&left), 7);
    let cert = is_matchable(&left);
    assert!(!cert.matchable);
    assert_eq!(cert.matching.len(), 7);
    assert_eq!(cert.deficiency, 2);
}

#[test]
fn hub_removal_forces_deficiency_two() {
    // Tutte-style bound: removing the hub leaves three odd components, so
    // at least 3 - 1 = 2 vertices stay uncovered.
    let left = cubic_no_perfect_matching();
    let mut rest = Graph::new(15);
    for e in left.edges() {
        let (u, v) = left.endpoints(e);
        if u.0 != 0 && v.0 != 0 {
            rest.add_edge(VertexId(u.0 - 1), VertexId(v.0 - 1)).unwrap();
        }
    }
    let odd = rest
        .connected_components()
        .iter()
        .filter(|c| c.len() % 2 == 1)
        .count();
    assert_eq!(odd, 3);
    assert!(is_matchable(&left).deficiency >= odd - 1);
}

#[test]
fn odd_order_is_never_matchable() {
    let c = is_matchable(&schreier_core::fixtures::cycle(7));
    assert!(!c.matchable);
    assert!(c.deficiency >= 1);
}

#[test]
fn removal_drops_matched_degrees_by_one() {
    let g = petersen();
    let m = max_matching_general(&g);
    let (h, corr) = remove_matching(&g, &m).unwrap();
    for v in g.vertices() {
        assert_eq!(h.degree(v).unwrap() + 1, g.degree(v).unwrap());
    }
    for e in h.edges() {
        let old = corr.old_edge(e);
        assert_eq!(g.endpoints(old), h.endpoints(e));
        assert!(!m.contains(old));
    }
}
