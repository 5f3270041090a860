//! The W-random graph `G(n, W)` for step graphons.
//!
//! Latent blocks `X_1..X_n` are drawn by inverse transform over the
//! cumulative weights; then each pair `i < j`, in lexicographic order, gets
//! an edge iff a fresh uniform is below `W[X_i][X_j]`. Uniforms are 53-bit
//! fractions from ChaCha8 and thresholds are the `f64` roundings of the
//! exact rationals, so the bias is at most `2^-53` per comparison. Values 0
//! and 1 are represented exactly, which makes random-free graphons sample
//! deterministically given the blocks.
//!
//! Results are reproducible within this implementation only.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::{DefaultHasher, Hash, Hasher};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exec::{self, Exec};
use crate::graph::LabelledGraph;
use crate::graphon::StepGraphon;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// The splitmix64 output function.
pub fn splitmix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of trial `i`: the `(i + 1)`-th output of a splitmix64 stream
/// started at `master`. Depends only on the position, never on scheduling.
pub fn trial_seed(master: u64, i: u64) -> u64 {
    splitmix64(master.wrapping_add(i.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA)))
}

/// A sampled graph with its latent block assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampledGraph {
    pub graph: LabelledGraph,
    /// `blocks[i]` is the block of vertex `i`.
    pub blocks: Vec<usize>,
    pub seed: u64,
    /// Fingerprint of the generating graphon.
    pub graphon_id: u64,
}

/// A graphon prepared for repeated sampling.
#[derive(Debug, Clone)]
pub struct Sampler {
    k: usize,
    cumulative: Vec<f64>,
    values: Vec<f64>,
    /// Last block of positive weight; absorbs rounding at the top end.
    last_positive: usize,
    positive: Vec<bool>,
    id: u64,
}

impl Sampler {
    pub fn new(w: &StepGraphon) -> Self {
        let positive: Vec<bool> = w.weights().iter().map(|x| *x > num_traits::Zero::zero()).collect();
        let last_positive = positive.iter().rposition(|&p| p).expect("weights sum to one");
        let mut hasher = DefaultHasher::new();
        w.to_text().hash(&mut hasher);
        Sampler {
            k: w.k(),
            cumulative: w.cumulative_weights(),
            values: w.values_f64(),
            last_positive,
            positive,
            id: hasher.finish(),
        }
    }

    pub fn graphon_id(&self) -> u64 {
        self.id
    }

    pub fn sample(&self, n: usize, seed: u64) -> SampledGraph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let blocks: Vec<usize> = (0..n).map(|_| self.draw_block(rng.random::<f64>())).collect();
        let mut graph = LabelledGraph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                let p = self.values[blocks[i] * self.k + blocks[j]];
                if rng.random::<f64>() < p {
                    graph.set_edge(i, j, true);
                }
            }
        }
        SampledGraph { graph, blocks, seed, graphon_id: self.id }
    }

    fn draw_block(&self, u: f64) -> usize {
        (0..self.k)
            .find(|&b| self.positive[b] && u < self.cumulative[b])
            .unwrap_or(self.last_positive)
    }
}

/// One draw of `G(n, W)`.
pub fn sample(w: &StepGraphon, n: usize, seed: u64) -> SampledGraph {
    Sampler::new(w).sample(n, seed)
}

/// Empirical estimate of `P(G(n, W) in class)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialReport {
    pub n: usize,
    pub trials: u64,
    pub successes: u64,
    pub master_seed: u64,
}

impl TrialReport {
    pub fn p_hat(&self) -> f64 {
        self.successes as f64 / self.trials as f64
    }
}

/// `n<TAB>trials<TAB>successes<TAB>p_hat<TAB>master_seed`, `p_hat` to 6 places.
impl fmt::Display for TrialReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{:.6}\t{}",
            self.n,
            self.trials,
            self.successes,
            self.p_hat(),
            self.master_seed
        )
    }
}

pub type Oracle<'a> = &'a (dyn Fn(&LabelledGraph) -> bool + Sync);

pub fn monte_carlo(w: &StepGraphon, n: usize, trials: u64, oracle: Oracle, master_seed: u64) -> TrialReport {
    monte_carlo_with(Exec::default(), w, n, trials, oracle, master_seed)
}

/// Counts trials whose sample satisfies `oracle`. Trial `i` uses
/// [`trial_seed`]`(master_seed, i)`.
pub fn monte_carlo_with(
    exec: Exec,
    w: &StepGraphon,
    n: usize,
    trials: u64,
    oracle: Oracle,
    master_seed: u64,
) -> TrialReport {
    assert!(trials >= 1, "need at least one trial");
    let sampler = Sampler::new(w);
    let successes = exec::count(exec, trials, |i| {
        oracle(&sampler.sample(n, trial_seed(master_seed, i)).graph)
    });
    TrialReport { n, trials, successes, master_seed }
}

/// Counts of labelled outcomes of `G(n, W)` over repeated trials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutcomeTable {
    pub n: usize,
    pub trials: u64,
    pub counts: BTreeMap<LabelledGraph, u64>,
}

impl OutcomeTable {
    pub fn count(&self, g: &LabelledGraph) -> u64 {
        self.counts.get(g).copied().unwrap_or(0)
    }

    pub fn frequency(&self, g: &LabelledGraph) -> f64 {
        self.count(g) as f64 / self.trials as f64
    }
}

/// Frequency table of labelled outcomes on `[n]`, `n <= 4`.
pub fn empirical_distribution(
    w: &StepGraphon,
    n: usize,
    trials: u64,
    master_seed: u64,
) -> crate::Result<OutcomeTable> {
    if n > 4 {
        return Err(crate::Error::InvalidParameter(format!(
            "outcome tables are limited to n <= 4, got {n}"
        )));
    }
    let sampler = Sampler::new(w);
    let seeds: Vec<u64> = (0..trials).map(|i| trial_seed(master_seed, i)).collect();
    let graphs = exec::map(Exec::default(), &seeds, |&s| sampler.sample(n, s).graph);
    let mut counts = BTreeMap::new();
    for g in graphs {
        *counts.entry(g).or_insert(0) += 1;
    }
    Ok(OutcomeTable { n, trials, counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::serialize_graph6;
    use crate::graphon::named_graphon;

    fn named(s: &str) -> StepGraphon {
        named_graphon(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn degenerate_graphons() {
        for seed in [0, 1, 42, u64::MAX] {
            assert_eq!(sample(&named("constant:1"), 5, seed).graph, LabelledGraph::complete(5));
            assert_eq!(sample(&named("constant:0"), 5, seed).graph, LabelledGraph::empty(5));
        }
        let s = sample(&named("constant:1/2"), 0, 7);
        assert_eq!(s.graph.n(), 0);
        assert!(s.blocks.is_empty());
    }

    #[test]
    fn chordal_sample_structure() {
        let s = sample(&named("chordal_two_point"), 50, 2024);
        for i in 0..50 {
            for j in i + 1..50 {
                match (s.blocks[i], s.blocks[j]) {
                    (1, 1) => assert!(s.graph.has_edge(i, j)),
                    (0, 0) => assert!(!s.graph.has_edge(i, j)),
                    _ => {}
                }
            }
        }
        assert!(s.blocks.contains(&0) && s.blocks.contains(&1));
    }

    #[test]
    fn deterministic_given_seed() {
        let w = named("chordal_two_point");
        let a = sample(&w, 40, 99);
        let b = sample(&w, 40, 99);
        assert_eq!(a, b);
        assert_eq!(serialize_graph6(&a.graph), serialize_graph6(&b.graph));
        assert_ne!(sample(&w, 40, 100).graph, a.graph);
    }

    #[test]
    fn zero_weight_blocks_never_drawn() {
        let q = |n: i64, d: i64| crate::Rational::new(n.into(), d.into());
        let w = StepGraphon::new(
            vec![q(0, 1), q(1, 1), q(0, 1)],
            vec![vec![q(1, 2); 3]; 3],
        )
        .unwrap();
        let s = sample(&w, 200, 5);
        assert!(s.blocks.iter().all(|&b| b == 1));
    }

    #[test]
    fn seeds_are_positional() {
        assert_ne!(trial_seed(0, 0), trial_seed(0, 1));
        assert_ne!(trial_seed(0, 0), trial_seed(1, 0));
        assert_eq!(trial_seed(7, 3), trial_seed(7, 3));
        // first splitmix64 output for state 0
        assert_eq!(trial_seed(0, 0), 0xE220_A839_7B1D_CDAF);
    }

    #[test]
    fn report_line() {
        let r = TrialReport { n: 3, trials: 8, successes: 7, master_seed: 11 };
        assert_eq!(r.to_string(), "3\t8\t7\t0.875000\t11");
    }

    #[test]
    fn monte_carlo_is_schedule_independent() {
        let w = named("constant:1/2");
        let tri_free = |g: &LabelledGraph| !g.has_edge(0, 1) || !g.has_edge(1, 2) || !g.has_edge(0, 2);
        let a = monte_carlo_with(Exec::Sequential, &w, 3, 500, &tri_free, 17);
        let b = monte_carlo_with(Exec::default(), &w, 3, 500, &tri_free, 17);
        assert_eq!(a, b);
    }

    #[test]
    fn outcome_table_limits() {
        let w = named("constant:1/2");
        assert!(empirical_distribution(&w, 5, 10, 0).is_err());
        let t = empirical_distribution(&w, 2, 1000, 0).unwrap();
        assert_eq!(t.counts.values().sum::<u64>(), 1000);
    }
}
