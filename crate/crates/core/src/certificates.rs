//! Certificates about random-freeness of hereditary classes.
//!
//! * [`prf_search`] looks for a completion of a bipartite graph (edges added
//!   only inside the two parts) that lies in a class given by forbidden
//!   induced subgraphs. If none exists the bipartite graph certifies that the
//!   class is random-free.
//! * [`chordal_clique_completion`] is the completion that always works for
//!   chordal graphs: turning one part into a clique.
//! * [`ptwin_check`] / [`ptwin_scan`] test the twin-extension property.

use std::fmt;

use crate::classes::{forbidden_family_member, is_chordal, ClassSpec, ForbiddenFamily, Mode};
use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::graph::{
    graph_from_mask, is_isomorphic, serialize_graph6, unlabelled_graphs, Bipartition, LabelledGraph,
};

/// Default node cap for [`prf_search`].
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Largest number of undecided pairs [`prf_exhaustive`] will enumerate.
pub const EXHAUSTIVE_PAIR_LIMIT: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrfStatus {
    NoCompletionInClass,
    CompletionFound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    pub part1_edges: Vec<(usize, usize)>,
    pub part2_edges: Vec<(usize, usize)>,
    pub graph: LabelledGraph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrfOutcome {
    pub status: PrfStatus,
    pub completion: Option<Completion>,
    pub nodes_explored: u64,
}

/// `PRF-HOLDS nodes=<k>` or `COMPLETION <graph6>`.
impl fmt::Display for PrfOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.completion {
            Some(c) => write!(f, "COMPLETION {}", serialize_graph6(&c.graph)),
            None => write!(f, "PRF-HOLDS nodes={}", self.nodes_explored),
        }
    }
}

fn completion_of(g: &LabelledGraph, bip: &Bipartition) -> Completion {
    let inside = |part: &[usize]| {
        let mut edges = Vec::new();
        for (i, &a) in part.iter().enumerate() {
            for &b in &part[i + 1..] {
                if g.has_edge(a, b) {
                    edges.push((a.min(b), a.max(b)));
                }
            }
        }
        edges.sort_unstable();
        edges
    };
    Completion { part1_edges: inside(&bip.part1), part2_edges: inside(&bip.part2), graph: g.clone() }
}

fn check_inputs(f: &LabelledGraph, bip: &Bipartition, fam: &ForbiddenFamily) -> Result<()> {
    bip.validate_for(f)?;
    fam.validate()?;
    if fam.mode != Mode::Induced {
        return Err(Error::InvalidParameter("completion search needs an induced-mode family".into()));
    }
    Ok(())
}

pub fn prf_search(f: &LabelledGraph, bip: &Bipartition, fam: &ForbiddenFamily) -> Result<PrfOutcome> {
    prf_search_with_budget(f, bip, fam, DEFAULT_NODE_BUDGET)
}

/// Depth-first search over the intra-part pairs in lexicographic order,
/// trying "no edge" before "edge".
///
/// After each decision, every vertex set containing the decided pair whose
/// pairs are all decided is compared against the forbidden members of its
/// size; a match prunes the branch, since the induced copy survives any
/// later decisions. Leaves are checked against the whole family.
pub fn prf_search_with_budget(
    f: &LabelledGraph,
    bip: &Bipartition,
    fam: &ForbiddenFamily,
    budget: u64,
) -> Result<PrfOutcome> {
    check_inputs(f, bip, fam)?;
    let n = f.n();
    let mut pairs = bip.intra_pairs();
    pairs.sort_unstable();
    let mut decided = vec![true; n * n];
    for &(u, v) in &pairs {
        decided[u * n + v] = false;
        decided[v * n + u] = false;
    }
    let patterns: Vec<Pattern> = fam
        .members_up_to(fam.truncation.min(n))
        .into_iter()
        .filter(|h| h.n() >= 2 && h.n() <= n)
        .map(Pattern::new)
        .collect();

    let mut search = PrfSearch {
        g: f.clone(),
        n,
        decided,
        pairs,
        patterns,
        fam,
        nodes: 0,
        budget,
    };
    let found = search.descend(0)?;
    Ok(PrfOutcome {
        status: if found { PrfStatus::CompletionFound } else { PrfStatus::NoCompletionInClass },
        completion: found.then(|| completion_of(&search.g, bip)),
        nodes_explored: search.nodes,
    })
}

struct Pattern {
    graph: LabelledGraph,
    edges: usize,
}

impl Pattern {
    fn new(graph: LabelledGraph) -> Self {
        Pattern { edges: graph.edge_count(), graph }
    }
}

struct PrfSearch<'a> {
    g: LabelledGraph,
    n: usize,
    decided: Vec<bool>,
    pairs: Vec<(usize, usize)>,
    patterns: Vec<Pattern>,
    fam: &'a ForbiddenFamily,
    nodes: u64,
    budget: u64,
}

impl PrfSearch<'_> {
    /// True when a completion in the class was found; `self.g` then holds it.
    fn descend(&mut self, idx: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Exhausted { budget: self.budget });
        }
        if idx == self.pairs.len() {
            return Ok(forbidden_family_member(&self.g, self.fam));
        }
        let (u, v) = self.pairs[idx];
        self.decided[u * self.n + v] = true;
        self.decided[v * self.n + u] = true;
        for present in [false, true] {
            self.g.set_edge(u, v, present);
            if !self.creates_forbidden(u, v) && self.descend(idx + 1)? {
                return Ok(true);
            }
        }
        self.g.set_edge(u, v, false);
        self.decided[u * self.n + v] = false;
        self.decided[v * self.n + u] = false;
        Ok(false)
    }

    fn is_decided(&self, a: usize, b: usize) -> bool {
        self.decided[a * self.n + b]
    }

    /// Does some fully decided vertex set containing `u` and `v` induce a
    /// forbidden pattern?
    fn creates_forbidden(&self, u: usize, v: usize) -> bool {
        let cand: Vec<usize> = (0..self.n)
            .filter(|&w| w != u && w != v && self.is_decided(w, u) && self.is_decided(w, v))
            .collect();
        let mut chosen = vec![u, v];
        self.patterns.iter().any(|p| self.extend_subset(p, &cand, 0, &mut chosen))
    }

    fn extend_subset(&self, p: &Pattern, cand: &[usize], from: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == p.graph.n() {
            let sub = self.g.induced_ordered(chosen);
            return sub.edge_count() == p.edges && is_isomorphic(&sub, &p.graph);
        }
        let need = p.graph.n() - chosen.len();
        for i in from..cand.len() {
            if cand.len() - i < need {
                break;
            }
            let w = cand[i];
            if chosen.iter().all(|&c| self.is_decided(c, w)) {
                chosen.push(w);
                let hit = self.extend_subset(p, cand, i + 1, chosen);
                chosen.pop();
                if hit {
                    return true;
                }
            }
        }
        false
    }
}

/// Tries all `2^pairs` completions against an arbitrary membership oracle.
/// The cross-check for [`prf_search`]; `nodes_explored` counts completions
/// examined.
pub fn prf_exhaustive(
    f: &LabelledGraph,
    bip: &Bipartition,
    oracle: &(dyn Fn(&LabelledGraph) -> bool + Sync),
) -> Result<PrfOutcome> {
    bip.validate_for(f)?;
    let pairs = bip.intra_pairs();
    if pairs.len() > EXHAUSTIVE_PAIR_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "{} undecided pairs exceed the exhaustive limit of {EXHAUSTIVE_PAIR_LIMIT}",
            pairs.len()
        )));
    }
    let total = 1u64 << pairs.len();
    let completed = |mask: u64| {
        let mut g = graph_from_mask(f.n(), &pairs, mask);
        for (a, b) in f.edges() {
            g.set_edge(a, b, true);
        }
        g
    };
    let hit = exec::find_first(Exec::default(), total, |mask| {
        let g = completed(mask);
        oracle(&g).then_some((mask, g))
    });
    Ok(match hit {
        Some((mask, g)) => PrfOutcome {
            status: PrfStatus::CompletionFound,
            completion: Some(completion_of(&g, bip)),
            nodes_explored: mask + 1,
        },
        None => PrfOutcome { status: PrfStatus::NoCompletionInClass, completion: None, nodes_explored: total },
    })
}

/// `F` plus all edges inside part 1. Always chordal.
pub fn chordal_clique_completion(f: &LabelledGraph, bip: &Bipartition) -> Result<LabelledGraph> {
    bip.validate_for(f)?;
    let mut g = f.clone();
    for (i, &a) in bip.part1.iter().enumerate() {
        for &b in &bip.part1[i + 1..] {
            g.set_edge(a, b, true);
        }
    }
    assert!(is_chordal(&g), "clique completion of a bipartite graph must be chordal");
    Ok(g)
}

/// Does adding a twin of `v` (adjacent or not) keep `G` in the class?
pub fn ptwin_check(class: &ClassSpec, g: &LabelledGraph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    if !class.contains(g) {
        return Err(Error::NotInClass(class.name.clone()));
    }
    Ok(class.contains(&g.add_twin(v, false)?) || class.contains(&g.add_twin(v, true)?))
}

/// The first member `(G, v)` on at most `n_max` vertices, in canonical
/// order, for which [`ptwin_check`] fails.
pub fn ptwin_scan(class: &ClassSpec, n_max: usize) -> Option<(LabelledGraph, usize)> {
    ptwin_scan_with(Exec::default(), class, n_max)
}

pub fn ptwin_scan_with(exec: Exec, class: &ClassSpec, n_max: usize) -> Option<(LabelledGraph, usize)> {
    (1..=n_max).find_map(|n| {
        let members: Vec<LabelledGraph> = unlabelled_graphs(n, exec)
            .iter()
            .map(|cf| cf.graph())
            .filter(|g| class.contains(g))
            .collect();
        exec::find_first(exec, members.len() as u64, |i| {
            let g = &members[i as usize];
            (0..n)
                .find(|&v| !ptwin_check(class, g, v).expect("members only"))
                .map(|v| (g.clone(), v))
        })
    })
}
