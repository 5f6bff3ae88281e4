mod oracle;

use oracle::{all_graphs, Adj};
use proptest::prelude::*;
use suntrap_core::coloring::{chi, clique_number, is_liberal, is_non_degenerate, is_triangle_free};
use suntrap_core::structures::{enumerate_holes, find_4_sunspot, find_bull, find_net, find_t_sun};
use suntrap_core::witness::generators::{groetzsch, hypercube, petersen, sun, sunspot};
use suntrap_core::Graph;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    let edges: Vec<_> = pairs
        .zip(bits)
        .filter(|(_, &b)| b)
        .map(|(e, _)| e)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Adds edges in the given order, skipping any that would close a triangle.
fn triangle_free_from(n: usize, order: &[(usize, usize)]) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for &(u, v) in order {
        let (u, v) = (u % n, v % n);
        if u != v && !g.has_edge(u, v) && (g.neighbors(u) & g.neighbors(v)).is_empty() {
            let mut edges: Vec<_> = g.edges().collect();
            edges.push((u, v));
            g = Graph::from_edges(n, &edges).unwrap();
        }
    }
    g
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn arb_triangle_free(max_n: usize) -> impl Strategy<Value = Graph> {
    (4..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..3 * n)
            .prop_map(move |order| triangle_free_from(n, &order))
    })
}

fn check_detectors(g: &Graph) {
    let a = Adj::of(g);
    for min_t in [4, 5, 6] {
        let found = find_t_sun(g, min_t);
        if let Some(w) = &found {
            assert!(w.verify(g) && w.t() >= min_t);
        }
        assert_eq!(found.is_some(), a.has_sun(min_t), "sun >= {min_t} on {g:?}");
    }
    let s = find_4_sunspot(g);
    assert!(s.as_ref().map_or(true, |w| w.verify(g)));
    assert_eq!(s.is_some(), a.has_4_sunspot());
    let net = find_net(g);
    assert!(net.as_ref().map_or(true, |w| w.verify(g)));
    assert_eq!(net.is_some(), a.has_net());
    let bull = find_bull(g);
    assert!(bull.as_ref().map_or(true, |w| w.verify(g)));
    assert_eq!(bull.is_some(), a.has_bull());
}

#[test]
fn named_graphs_match_subset_scan() {
    for g in [
        sun(4).unwrap(),
        sun(5).unwrap(),
        sun(6).unwrap(),
        sunspot(4).unwrap(),
        sunspot(5).unwrap(),
        petersen(),
        groetzsch(),
    ] {
        check_detectors(&g);
    }
    assert!(Adj::of(&groetzsch()).has_4_sunspot());
}

#[test]
fn every_graph_on_six_vertices() {
    for g in all_graphs(6) {
        check_detectors(&g);
    }
}

#[test]
fn cube_holes() {
    let q3 = hypercube(3).unwrap();
    let mut got: Vec<Vec<usize>> = enumerate_holes(&q3, 4, 8)
        .unwrap()
        .iter()
        .map(|h| {
            let mut v = h.vertices().to_vec();
            v.sort();
            v
        })
        .collect();
    got.sort();
    let expected = Adj::of(&q3).hole_sets();
    assert_eq!(got, expected);
    assert_eq!(got.len(), 6 + 4);
}

#[test]
fn coloring_of_named_graphs() {
    for (g, chi_expected) in [(petersen(), 3), (groetzsch(), 4)] {
        assert_eq!(chi(&g), chi_expected);
        assert_eq!(Adj::of(&g).chi(), chi_expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn detectors_agree(g in arb_graph(9)) {
        check_detectors(&g);
    }

    #[test]
    fn detectors_agree_triangle_free(g in arb_triangle_free(12)) {
        check_detectors(&g);
    }

    #[test]
    fn holes_agree(g in arb_graph(9)) {
        let mut got: Vec<Vec<usize>> = enumerate_holes(&g, 4, g.n().max(4)).unwrap().iter().map(|h| {
            let mut v = h.vertices().to_vec();
            v.sort();
            v
        }).collect();
        got.sort();
        prop_assert_eq!(got, Adj::of(&g).hole_sets());
    }

    #[test]
    fn coloring_agrees(g in arb_graph(9)) {
        let a = Adj::of(&g);
        prop_assert_eq!(chi(&g), a.chi());
        prop_assert_eq!(clique_number(&g), a.omega());
        prop_assert_eq!(is_triangle_free(&g), !a.has_triangle());
        prop_assert_eq!(is_liberal(&g), a.is_liberal());
        prop_assert_eq!(is_non_degenerate(&g), a.is_non_degenerate());
    }
}
