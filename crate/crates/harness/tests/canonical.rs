#[path = "../../core/tests/oracle/mod.rs"]
mod oracle;

use proptest::prelude::*;

use suntrap_core::Graph;
use suntrap_harness::canon::{canonical_form, is_isomorphic};
use suntrap_harness::enumerate::{enumerate_uncapped, Predicate};

fn graph(n: usize, mask: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<_> = pairs
        .zip(mask)
        .filter(|(_, &b)| b)
        .map(|(e, _)| e)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |m| graph(n, &m))
    })
}

fn arb_graph_and_order(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn relabelling_keeps_the_key((g, order) in arb_graph_and_order(14)) {
        let h = g.permuted(&order);
        prop_assert_eq!(canonical_form(&g).key, canonical_form(&h).key);
    }

    #[test]
    fn canonical_graph_is_isomorphic(g in arb_graph(14)) {
        let c = canonical_form(&g);
        let h = c.graph(&g);
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert_eq!(canonical_form(&h).key, c.key);
    }

    #[test]
    fn keys_agree_with_brute_force(a in arb_graph(6), b in arb_graph(6)) {
        let same = a.n() == b.n() && oracle::brute_canonical(&a) == oracle::brute_canonical(&b);
        prop_assert_eq!(is_isomorphic(&a, &b), same);
    }
}

#[test]
fn enumerated_levels_are_distinct_classes() {
    for predicate in [
        Predicate::All,
        Predicate::TriangleFree,
        Predicate::TriangleFreeSunspotFree,
    ] {
        for level in enumerate_uncapped(7, predicate) {
            let mut keys: Vec<_> = level.iter().map(oracle::brute_canonical).collect();
            let len = keys.len();
            keys.sort();
            keys.dedup();
            assert_eq!(keys.len(), len, "{predicate}");
            assert!(level.iter().all(|g| predicate.holds(g)));
        }
    }
}

#[test]
fn known_counts() {
    let counts = |p| {
        enumerate_uncapped(8, p)
            .iter()
            .map(Vec::len)
            .collect::<Vec<_>>()
    };
    // Connected graphs, and connected triangle-free graphs, by order.
    assert_eq!(counts(Predicate::All), [1, 1, 2, 6, 21, 112, 853, 11117]);
    assert_eq!(
        counts(Predicate::TriangleFree),
        [1, 1, 1, 3, 6, 19, 59, 267]
    );
}
