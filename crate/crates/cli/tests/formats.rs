use proptest::prelude::*;
use schreier_cli::{canonicalize, parse_graph, serialize_graph, Certificate, Verdict};
use schreier_core::classify;
use schreier_core::corpus::{random_multigraph, random_regular, rng, RegularOptions};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn serialization_is_canonical(
        n in 1usize..12,
        m in 0usize..20,
        loops in 0usize..4,
        halves in 0usize..4,
        seed in any::<u64>(),
    ) {
        let g = random_multigraph(&mut rng(seed), n, m, loops, halves);
        let text = serialize_graph(&g);
        let parsed = parse_graph(&text).unwrap();
        prop_assert_eq!(&parsed, &canonicalize(&g).0);
        prop_assert_eq!(serialize_graph(&parsed), text);
        prop_assert_eq!(parsed.regularity().ok(), g.regularity().ok());
    }

    #[test]
    fn classification_documents_round_trip(
        n in 1usize..30,
        degree in 1usize..6,
        halves in 0usize..3,
        seed in any::<u64>(),
    ) {
        let opts = RegularOptions { half_edges: halves, ..Default::default() };
        let Some(g) = random_regular(&mut rng(seed), n, degree, opts) else {
            return Ok(());
        };
        let cert = Certificate::Classification(Verdict::from_result(&classify(&g).unwrap()));
        let text = cert.serialize();
        let back = Certificate::parse(&text).unwrap();
        prop_assert_eq!(&back, &cert);
        prop_assert!(back.check(&g).is_empty());
    }
}
