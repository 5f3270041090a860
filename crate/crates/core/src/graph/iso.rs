//! Brute-force isomorphism and canonical forms for small graphs.
//!
//! Both searches are exponential in the worst case and intended for graphs
//! with at most about ten vertices.

use std::collections::BTreeSet;

use super::LabelledGraph;
use crate::exec::{self, Exec};

/// The lexicographically smallest adjacency bit-string of a graph over all
/// vertex relabellings.
///
/// Bits are taken in column order `(0,1), (0,2), (1,2), (0,3), ...` (the
/// graph6 order), so the bits contributed by the vertex placed at position
/// `j` form a contiguous block. Ordering is by `(n, bits)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<bool>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// The canonical representative as a labelled graph.
    pub fn graph(&self) -> LabelledGraph {
        let mut g = LabelledGraph::empty(self.n);
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.bits[k] {
                    g.set_edge(i, j, true);
                }
                k += 1;
            }
        }
        g
    }

    /// Canonical edge list, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.graph().edges()
    }
}

pub fn canonical_form(g: &LabelledGraph) -> CanonicalForm {
    let n = g.n();
    let mut search = CanonSearch {
        g,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        cur: Vec::with_capacity(n * n.saturating_sub(1) / 2),
        best: None,
    };
    search.run();
    CanonicalForm { n, bits: search.best.unwrap_or_default() }
}

struct CanonSearch<'a> {
    g: &'a LabelledGraph,
    order: Vec<usize>,
    used: Vec<bool>,
    cur: Vec<bool>,
    best: Option<Vec<bool>>,
}

impl CanonSearch<'_> {
    fn run(&mut self) {
        let n = self.g.n();
        if self.order.len() == n {
            if self.best.as_ref().is_none_or(|b| self.cur < *b) {
                self.best = Some(self.cur.clone());
            }
            return;
        }
        let mut tried: Vec<usize> = Vec::new();
        for x in 0..n {
            if self.used[x] {
                continue;
            }
            // Swapping two twins is an automorphism fixing everything placed,
            // so their subtrees give identical strings.
            if tried.iter().any(|&y| are_twins(self.g, x, y)) {
                continue;
            }
            tried.push(x);

            let start = self.cur.len();
            for &p in &self.order {
                self.cur.push(self.g.has_edge(p, x));
            }
            let prune = self
                .best
                .as_ref()
                .is_some_and(|b| self.cur[..] > b[..self.cur.len()]);
            if !prune {
                self.used[x] = true;
                self.order.push(x);
                self.run();
                self.order.pop();
                self.used[x] = false;
            }
            self.cur.truncate(start);
        }
    }
}

fn are_twins(g: &LabelledGraph, x: usize, y: usize) -> bool {
    (0..g.n()).all(|w| w == x || w == y || g.has_edge(x, w) == g.has_edge(y, w))
}

/// True iff an adjacency-preserving bijection exists.
pub fn is_isomorphic(g: &LabelledGraph, h: &LabelledGraph) -> bool {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let sig_g = signatures(g);
    let sig_h = signatures(h);
    let mut sorted_g = sig_g.clone();
    let mut sorted_h = sig_h.clone();
    sorted_g.sort();
    sorted_h.sort();
    if sorted_g != sorted_h {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_iso(g, h, &sig_g, &sig_h, 0, &mut map, &mut used)
}

/// Degree plus sorted neighbour degrees.
fn signatures(g: &LabelledGraph) -> Vec<(usize, Vec<usize>)> {
    let deg = g.degrees();
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbours(v).map(|u| deg[u]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect()
}

fn extend_iso(
    g: &LabelledGraph,
    h: &LabelledGraph,
    sig_g: &[(usize, Vec<usize>)],
    sig_h: &[(usize, Vec<usize>)],
    v: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if v == g.n() {
        return true;
    }
    for w in 0..h.n() {
        if used[w] || sig_g[v] != sig_h[w] {
            continue;
        }
        if (0..v).any(|u| g.has_edge(u, v) != h.has_edge(map[u], w)) {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend_iso(g, h, sig_g, sig_h, v + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    false
}

/// Canonical forms of all graphs on `n` vertices, sorted.
///
/// Built by extending each representative on `n - 1` vertices with a new
/// vertex in every possible way and deduplicating.
pub fn unlabelled_graphs(n: usize, exec: Exec) -> Vec<CanonicalForm> {
    let mut level: Vec<CanonicalForm> = vec![canonical_form(&LabelledGraph::empty(0))];
    for m in 1..=n {
        let parents: Vec<LabelledGraph> = level.iter().map(CanonicalForm::graph).collect();
        let per_parent = exec::map(exec, &parents, |p| {
            let base = p.with_extra_vertex();
            let mut out = Vec::with_capacity(1 << (m - 1));
            for mask in 0..1u64 << (m - 1) {
                let mut g = base.clone();
                for u in 0..m - 1 {
                    if mask >> u & 1 == 1 {
                        g.set_edge(u, m - 1, true);
                    }
                }
                out.push(canonical_form(&g));
            }
            out
        });
        let set: BTreeSet<CanonicalForm> = per_parent.into_iter().flatten().collect();
        level = set.into_iter().collect();
    }
    level
}
