mod common;

use limitlab::density::t_hom;
use limitlab::graph::{enumerate_labelled, serialize_graph6, LabelledGraph};
use limitlab::graphon::{t_ind_step, t_step};
use limitlab::sampler::{empirical_distribution, monte_carlo_with, sample, trial_seed, Sampler};
use limitlab::Exec;
use num_traits::ToPrimitive;

use common::named_graphons;

fn f64_of(x: &limitlab::Rational) -> f64 {
    x.to_f64().unwrap()
}

#[test]
fn samples_are_deterministic() {
    for (_, w) in named_graphons() {
        for seed in [0, 1, u64::MAX] {
            let (a, b) = (sample(&w, 40, seed), sample(&w, 40, seed));
            assert_eq!(serialize_graph6(&a.graph), serialize_graph6(&b.graph));
            assert_eq!(a, b);
        }
    }
}

#[test]
fn executors_agree() {
    let (_, w) = &named_graphons()[1];
    let oracle = |g: &LabelledGraph| g.edge_count().is_multiple_of(2);
    let seq = monte_carlo_with(Exec::Sequential, w, 12, 500, &oracle, 3);
    let default = monte_carlo_with(Exec::default(), w, 12, 500, &oracle, 3);
    assert_eq!(seq, default);
}

#[test]
fn edge_probability_matches_k2_density() {
    for (name, w) in named_graphons() {
        let sampler = Sampler::new(&w);
        let trials = 10_000u64;
        let edges = (0..trials).filter(|&i| sampler.sample(2, trial_seed(21, i)).graph.edge_count() == 1).count();
        let p = f64_of(&t_step(&LabelledGraph::complete(2), &w));
        let se = (p * (1.0 - p) / trials as f64).sqrt().max(1e-9);
        let p_hat = edges as f64 / trials as f64;
        assert!((p_hat - p).abs() <= 4.0 * se, "{name}: {p_hat} vs {p}");
    }
}

#[test]
fn labelled_outcomes_follow_induced_densities() {
    for (name, w) in named_graphons() {
        let table = empirical_distribution(&w, 3, 4000, 22).unwrap();
        for f in enumerate_labelled(3) {
            let p = f64_of(&t_ind_step(&f, &w));
            let se = (p * (1.0 - p) / 4000.0).sqrt();
            let got = table.frequency(&f);
            assert!((got - p).abs() <= 4.0 * se + 1e-12, "{name}, {f:?}: {got} vs {p}");
        }
    }
}

#[test]
fn induced_subgraphs_of_samples_are_samples() {
    let trials = 4000u64;
    for (name, w) in named_graphons() {
        let sampler = Sampler::new(&w);
        let direct = empirical_distribution(&w, 3, trials, 23).unwrap();
        let mut sub = std::collections::BTreeMap::new();
        for i in 0..trials {
            let g = sampler.sample(5, trial_seed(24, i)).graph.induced_subgraph(&[0, 1, 2]).unwrap();
            *sub.entry(g).or_insert(0u64) += 1;
        }
        for f in enumerate_labelled(3) {
            let a = direct.frequency(&f);
            let b = sub.get(&f).copied().unwrap_or(0) as f64 / trials as f64;
            let p = (a + b) / 2.0;
            let se = (p * (1.0 - p) * 2.0 / trials as f64).sqrt();
            assert!((a - b).abs() <= 4.0 * se + 1e-12, "{name}, {f:?}: {a} vs {b}");
        }
    }
}

#[test]
fn edge_density_converges() {
    for (name, w) in named_graphons() {
        let k2 = LabelledGraph::complete(2);
        let g = sample(&w, 500, 25).graph;
        let gap = (f64_of(&t_hom(&k2, &g)) - f64_of(&t_step(&k2, &w))).abs();
        assert!(gap <= 0.05, "{name}: gap {gap}");
    }
}
