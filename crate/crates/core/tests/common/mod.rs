#![allow(dead_code)]

pub mod oracle;

use limitlab::graph::{lex_pairs, LabelledGraph};
use limitlab::graphon::StepGraphon;
use limitlab::Rational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> LabelledGraph {
    let mut g = LabelledGraph::empty(n);
    for (u, v) in lex_pairs(n) {
        if rng.random::<f64>() < p {
            g.set_edge(u, v, true);
        }
    }
    g
}

/// A random step graphon with `k` blocks and small-denominator rationals.
pub fn random_graphon(rng: &mut impl Rng, k: usize) -> StepGraphon {
    let raw: Vec<i64> = (0..k).map(|_| rng.random_range(1..=4)).collect();
    let total: i64 = raw.iter().sum();
    let weights = raw.iter().map(|&w| q(w, total)).collect();
    let mut values = vec![vec![q(0, 1); k]; k];
    for (i, j) in (0..k).flat_map(|i| (i..k).map(move |j| (i, j))) {
        let v = q(rng.random_range(0..=4), 4);
        values[i][j] = v.clone();
        values[j][i] = v;
    }
    StepGraphon::new(weights, values).unwrap()
}

pub fn named_graphons() -> Vec<(&'static str, StepGraphon)> {
    ["chordal_two_point", "constant:1/2", "threshold_staircase:4", "bipartite_two_point"]
        .into_iter()
        .map(|s| (s, limitlab::graphon::named_graphon(&s.parse().unwrap()).unwrap()))
        .collect()
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = LabelledGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = LabelledGraph::empty(n);
            for ((u, v), b) in lex_pairs(n).into_iter().zip(bits) {
                g.set_edge(u, v, b);
            }
            g
        })
    })
}
