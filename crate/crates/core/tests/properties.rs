mod common;

use common::*;
use itertools::Itertools;
use proptest::prelude::*;
use rainbow_core::colorings::{mixed_radix, ColoringFamily, PQColoring, Provenance};
use rainbow_core::hypergraph::{
    canonical_form, count_copies, cube_bridge, edge_to_vector, is_isomorphic, UniformHypergraph, VertexOrder,
};
use rainbow_core::locality::{decide_2ll, is_2ll_under, txi_partition, Status};
use rainbow_core::solver::{exists_local_coloring, Verdict};

fn hypergraph(r: usize, max_n: usize, max_m: usize) -> impl Strategy<Value = UniformHypergraph> {
    (r..=max_n).prop_flat_map(move |n| {
        let all: Vec<Vec<usize>> = (0..n).combinations(r).collect();
        proptest::sample::subsequence(all.clone(), 1..=max_m.min(all.len()))
            .prop_map(move |edges| UniformHypergraph::new(r, n, edges).unwrap())
    })
}

fn graph_and_perm(r: usize, max_n: usize, max_m: usize) -> impl Strategy<Value = (UniformHypergraph, Vec<usize>)> {
    hypergraph(r, max_n, max_m).prop_flat_map(|h| {
        let n = h.n();
        (Just(h), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_a_class_invariant((h, p) in graph_and_perm(3, 7, 5)) {
        let relabeled = h.relabel(&p, h.n()).unwrap();
        let (c, _) = canonical_form(&h);
        prop_assert_eq!(&canonical_form(&c).0, &c);
        prop_assert_eq!(&canonical_form(&relabeled).0, &c);
        prop_assert!(is_isomorphic(&h, &relabeled));
        prop_assert_eq!(decide_2ll(&h).status, decide_2ll(&relabeled).status);
    }

    #[test]
    fn reversing_an_order_keeps_its_verdict((h, seq) in graph_and_perm(3, 8, 6)) {
        let order = VertexOrder::from_sequence(&seq).unwrap();
        prop_assert_eq!(is_2ll_under(&h, &order), is_2ll_under(&h, &order.reversed()));
        prop_assert_eq!(is_2ll_under(&h, &order), good_under(&h, &positions(&seq)));
    }

    #[test]
    fn buckets_partition_the_edges((h, seq) in graph_and_perm(3, 8, 6), x in 0usize..8) {
        let x = x % h.n();
        let order = VertexOrder::from_sequence(&seq).unwrap();
        let part = txi_partition(&h, &order, x);
        prop_assert_eq!(part.buckets.len(), 7);
        let mut all: Vec<Vec<usize>> = part.buckets.iter().flatten().cloned().collect();
        all.sort();
        let mut edges = h.edges().to_vec();
        edges.sort();
        prop_assert_eq!(all, edges);
        for (i, b) in part.buckets.iter().enumerate() {
            for e in b {
                prop_assert_eq!(e.contains(&x), i < 3);
                prop_assert_eq!(bucket(e, &positions(&seq), x), i + 1);
            }
        }
    }

    #[test]
    fn adding_an_edge_keeps_2ll(h in hypergraph(3, 7, 5), pick in any::<prop::sample::Index>()) {
        let d = decide_2ll(&h);
        let absent: Vec<Vec<usize>> = (0..h.n()).combinations(3).filter(|e| !h.contains_edge(e)).collect();
        if d.status == Status::TwoLocallyLarge && !absent.is_empty() {
            let bigger = h.with_edge(pick.get(&absent).clone()).unwrap();
            prop_assert!(is_2ll_under(&bigger, d.witness.as_ref().unwrap()));
        }
    }

    #[test]
    fn cube_bridge_round_trips(h in hypergraph(3, 8, 8)) {
        let vectors: Vec<String> = h.edges().iter().map(|e| edge_to_vector(e, h.n())).collect();
        prop_assert_eq!(cube_bridge(&vectors).unwrap(), h);
    }

    #[test]
    fn clique_copies_are_subsets(h in 3usize..6, extra in 0usize..4) {
        let n = h + extra;
        let clique = UniformHypergraph::complete(3, h).unwrap();
        prop_assert_eq!(count_copies(&clique, n), binom(n, h) as u64);
    }

    #[test]
    fn family_files_round_trip(n in 3usize..8, k in 1u32..50, seed in any::<u64>(), salt in any::<u64>()) {
        let f = ColoringFamily::from_fn(n, 3, k, Provenance::new("test", seed), |v, e| {
            ((rank(e) as u64 * 31 + v as u64 * 7 + salt) % k as u64) as u32 + 1
        }).unwrap();
        let back = ColoringFamily::from_bytes(&f.to_bytes()).unwrap();
        prop_assert_eq!(back.colors(), f.colors());
        prop_assert_eq!(back.provenance.seed, seed);
        prop_assert_eq!(back.k(), k);
        let bytes = f.to_bytes();
        prop_assert_eq!(bytes.len(), 22 + 4 * n * binom(n, 3));
    }

    #[test]
    fn pq_files_round_trip(n in 4usize..8, salt in 0u32..5) {
        let cols: Vec<u32> = (0..binom(n, 3) as u32).map(|i| (i + salt) % 4 + 1).collect();
        let c = PQColoring::new(n, 3, 4, 3, 4, cols).unwrap();
        let back = PQColoring::from_bytes(&c.to_bytes(), 4, 3).unwrap();
        prop_assert_eq!(back.colors(), c.colors());
        prop_assert_eq!(back.is_valid(), pq_ok(n, 3, 4, 3, |e| c.color_of(e)));
    }

    #[test]
    fn mixed_radix_is_injective(k in 2u32..9, a in prop::collection::vec(1u32..9, 4), b in prop::collection::vec(1u32..9, 4)) {
        let a: Vec<u32> = a.into_iter().map(|d| (d - 1) % k + 1).collect();
        let b: Vec<u32> = b.into_iter().map(|d| (d - 1) % k + 1).collect();
        let (x, y) = (mixed_radix(&a, k).unwrap(), mixed_radix(&b, k).unwrap());
        prop_assert_eq!(x == y, a == b);
        prop_assert!(x >= 1 && x <= (k as u64).pow(4));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn solver_is_monotone_in_k(h in hypergraph(2, 4, 2), n in 4usize..=5) {
        let mut sat_seen = false;
        for k in 1..=3 {
            let v = exists_local_coloring(n, 2, &h, k, 20_000_000).unwrap().verdict;
            prop_assert!(v != Verdict::Inconclusive);
            if sat_seen {
                prop_assert_eq!(v, Verdict::Sat);
            }
            sat_seen |= v == Verdict::Sat;
        }
    }
}
