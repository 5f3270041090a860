mod common;

use std::collections::BTreeSet;

use limitlab::graph::{
    canonical_form, enumerate_labelled, is_isomorphic, make_named, parse_graph, serialize_graph,
    unlabelled_graphs, GraphFormat, LabelledGraph,
};
use limitlab::Exec;
use proptest::prelude::*;
use rand::seq::SliceRandom;

use common::{arb_graph, oracle, random_graph, rng};

#[test]
fn isomorphism_matches_brute_force() {
    let mut r = rng(1);
    let corpus: Vec<LabelledGraph> = (0..120)
        .map(|i| random_graph(&mut r, 2 + i % 5, 0.5))
        .collect();
    for g in &corpus {
        assert!(is_isomorphic(g, g));
        for h in &corpus {
            let fast = is_isomorphic(g, h);
            assert_eq!(fast, oracle::isomorphic(g, h), "{g:?} vs {h:?}");
            assert_eq!(fast, is_isomorphic(h, g));
            assert_eq!(fast, canonical_form(g) == canonical_form(h));
        }
    }
}

#[test]
fn isomorphism_is_transitive() {
    let mut r = rng(2);
    let corpus: Vec<LabelledGraph> = (0..60).map(|_| random_graph(&mut r, 5, 0.5)).collect();
    for a in &corpus {
        for b in corpus.iter().filter(|b| is_isomorphic(a, b)) {
            for c in corpus.iter().filter(|c| is_isomorphic(b, c)) {
                assert!(is_isomorphic(a, c));
            }
        }
    }
}

#[test]
fn canonical_form_is_permutation_invariant() {
    let mut r = rng(3);
    for i in 0..40 {
        let g = random_graph(&mut r, 3 + i % 6, 0.4);
        let cf = canonical_form(&g);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        for _ in 0..50 {
            perm.shuffle(&mut r);
            assert_eq!(canonical_form(&g.permute(&perm)), cf);
        }
        assert!(is_isomorphic(&cf.graph(), &g));
    }
}

#[test]
fn canonical_form_is_lexicographic_minimum() {
    for g in enumerate_labelled(5).step_by(7) {
        let pairs: Vec<(usize, usize)> = (1..5).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let best = oracle::permutations(5)
            .iter()
            .map(|p| pairs.iter().map(|&(i, j)| g.has_edge(p[i], p[j])).collect::<Vec<bool>>())
            .min()
            .unwrap();
        assert_eq!(canonical_form(&g).bits(), &best[..], "{g:?}");
    }
}

#[test]
fn enumeration_matches_dedup_of_labelled_graphs() {
    for n in 0..=5 {
        let brute: BTreeSet<_> = enumerate_labelled(n).map(|g| canonical_form(&g)).collect();
        let fast = unlabelled_graphs(n, Exec::Sequential);
        assert_eq!(fast, brute.into_iter().collect::<Vec<_>>());
        assert_eq!(unlabelled_graphs(n, Exec::default()), fast);
    }
}

#[test]
fn io_round_trips_on_all_small_graphs() {
    for n in 0..=6 {
        for g in enumerate_labelled(n) {
            for format in [GraphFormat::Graph6, GraphFormat::EdgeList] {
                let text = serialize_graph(&g, format);
                assert_eq!(parse_graph(&text, format).unwrap(), g);
            }
        }
    }
}

#[test]
fn f12_is_bipartite_for_its_declared_parts() {
    let named = make_named("cograph_certificate_F12", None).unwrap();
    assert_eq!((named.graph.n(), named.graph.edge_count()), (12, 14));
    named.bipartition.unwrap().validate_for(&named.graph).unwrap();
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in arb_graph(9)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), g.n() * (g.n() - 1) / 2);
    }

    #[test]
    fn induced_subgraph_commutes_with_complement(g in arb_graph(9), mask in any::<u16>()) {
        let subset: Vec<usize> = (0..g.n()).filter(|&i| mask >> i & 1 == 1).collect();
        let a = g.induced_subgraph(&subset).unwrap().complement();
        let b = g.complement().induced_subgraph(&subset).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn twins_share_neighbourhoods(g in arb_graph(8), v in 0usize..8, connect in any::<bool>()) {
        prop_assume!(v < g.n());
        let t = g.add_twin(v, connect).unwrap();
        let n = g.n();
        prop_assert_eq!(t.has_edge(v, n), connect);
        for u in 0..n {
            if u != v {
                prop_assert_eq!(t.has_edge(u, n), g.has_edge(u, v));
            }
        }
        prop_assert_eq!(t.induced_subgraph(&(0..n).collect::<Vec<_>>()).unwrap(), g);
    }
}
