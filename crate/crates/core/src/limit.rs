//! Closure membership of step graphons in hereditary classes.
//!
//! A graph limit lies in the closure of `U_F` exactly when `t_ind(F, W) = 0`
//! for every `F` in the family (`t(F, W) = 0` in subgraph mode). The closure
//! of an intersection of hereditary classes is the intersection of the
//! closures, so several families are combined by conjunction.
//!
//! Infinite cycle families are only checked up to their truncation and can
//! therefore never produce a plain `In` verdict.

use std::fmt;

use num_traits::Zero;

use crate::classes::{ForbiddenFamily, Mode};
use crate::density::Rational;
use crate::exec::{self, Exec};
use crate::graph::{serialize_graph6, LabelledGraph};
use crate::graphon::{t_cycle_step, t_ind_step, t_step, StepGraphon};
use crate::sampler::{monte_carlo_with, trial_seed, Oracle, SampledGraph, Sampler, TrialReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClosureStatus {
    In,
    InTruncated,
    Out,
}

/// A forbidden graph with positive density.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub graph: LabelledGraph,
    pub density: Rational,
    pub mode: Mode,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureVerdict {
    pub status: ClosureStatus,
    pub witness: Option<Witness>,
    /// Cycle bound used, when a cycle tail was truncated.
    pub truncation: Option<usize>,
    /// Every density evaluated, in evaluation order.
    pub checked: Vec<(LabelledGraph, Rational)>,
}

impl ClosureVerdict {
    fn inside() -> Self {
        ClosureVerdict { status: ClosureStatus::In, witness: None, truncation: None, checked: Vec::new() }
    }

    pub fn is_in(&self) -> bool {
        self.status != ClosureStatus::Out
    }
}

/// `IN`, `IN(truncated:K)`, or `OUT F=<graph6> t_ind=<p/q>` (`t=` in
/// subgraph mode).
impl fmt::Display for ClosureVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.status, &self.witness) {
            (ClosureStatus::Out, Some(w)) => {
                let label = match w.mode {
                    Mode::Induced => "t_ind",
                    Mode::Subgraph => "t",
                };
                write!(f, "OUT F={} {label}={}", serialize_graph6(&w.graph), w.density)
            }
            (ClosureStatus::InTruncated, _) => {
                write!(f, "IN(truncated:{})", self.truncation.unwrap_or_default())
            }
            _ => f.write_str("IN"),
        }
    }
}

/// Decides `W in closure(U_F)` by exact density evaluation of each member.
///
/// Members are evaluated in order (finite members, then cycles by length)
/// and the first positive density is reported as the witness.
pub fn closure_membership(w: &StepGraphon, fam: &ForbiddenFamily) -> ClosureVerdict {
    let mut checked: Vec<(LabelledGraph, Rational)> = Vec::new();
    let finite = fam.finite_members.iter().map(|f| (f.clone(), None));
    let cycles = fam
        .cycles
        .into_iter()
        .flat_map(|tail| tail.lengths(fam.truncation))
        .map(|k| (crate::graph::cycle(k), Some(k)));
    for (g, cycle_len) in finite.chain(cycles) {
        let d = match (fam.mode, cycle_len) {
            (Mode::Induced, _) => t_ind_step(&g, w),
            (Mode::Subgraph, Some(k)) => t_cycle_step(k, w).expect("cycle tails start at 3"),
            (Mode::Subgraph, None) => t_step(&g, w),
        };
        let hit = !d.is_zero();
        checked.push((g, d));
        if hit {
            break;
        }
    }

    match checked.last() {
        Some((g, d)) if !d.is_zero() => ClosureVerdict {
            status: ClosureStatus::Out,
            witness: Some(Witness { graph: g.clone(), density: d.clone(), mode: fam.mode }),
            truncation: fam.cycles.map(|_| fam.truncation),
            checked,
        },
        _ if fam.is_infinite() => ClosureVerdict {
            status: ClosureStatus::InTruncated,
            witness: None,
            truncation: Some(fam.truncation),
            checked,
        },
        _ => ClosureVerdict { status: ClosureStatus::In, witness: None, truncation: None, checked },
    }
}

/// Membership in the closure of an intersection of classes: `Out` if any
/// family rejects (witness from the first such family), else `InTruncated`
/// if any family was truncated (reporting the smallest bound), else `In`.
pub fn closure_membership_intersection(w: &StepGraphon, fams: &[ForbiddenFamily]) -> ClosureVerdict {
    let mut out = ClosureVerdict::inside();
    for fam in fams {
        let v = closure_membership(w, fam);
        out.checked.extend(v.checked.iter().cloned());
        match v.status {
            ClosureStatus::Out => {
                return ClosureVerdict {
                    status: ClosureStatus::Out,
                    witness: v.witness,
                    truncation: v.truncation,
                    checked: out.checked,
                }
            }
            ClosureStatus::InTruncated => {
                out.status = ClosureStatus::InTruncated;
                out.truncation = Some(match (out.truncation, v.truncation) {
                    (Some(a), Some(b)) => a.min(b),
                    (a, b) => a.or(b).unwrap_or_default(),
                });
            }
            ClosureStatus::In => {}
        }
    }
    out
}

/// One Monte Carlo report of `P(G(n, W) in class)` per `n`.
pub fn dichotomy_probe(
    w: &StepGraphon,
    oracle: Oracle,
    n_list: &[usize],
    trials: u64,
    master_seed: u64,
) -> Vec<TrialReport> {
    dichotomy_probe_with(Exec::default(), w, oracle, n_list, trials, master_seed)
}

pub fn dichotomy_probe_with(
    exec: Exec,
    w: &StepGraphon,
    oracle: Oracle,
    n_list: &[usize],
    trials: u64,
    master_seed: u64,
) -> Vec<TrialReport> {
    assert!(!n_list.is_empty(), "need at least one n");
    n_list.iter().map(|&n| monte_carlo_with(exec, w, n, trials, oracle, master_seed)).collect()
}

/// The first of `trials` samples of `G(n_max, W)` that fails `oracle`.
///
/// A returned graph proves `W` is outside the closure of the class; `None`
/// proves nothing.
pub fn sample_certificate_out(
    w: &StepGraphon,
    oracle: Oracle,
    n_max: usize,
    trials: u64,
    master_seed: u64,
) -> Option<SampledGraph> {
    let sampler = Sampler::new(w);
    exec::find_first(Exec::default(), trials, |i| {
        let s = sampler.sample(n_max, trial_seed(master_seed, i));
        (!oracle(&s.graph)).then_some(s)
    })
}
