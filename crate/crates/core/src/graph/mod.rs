//! Finite simple graphs on vertex set `0..n`.
//!
//! [`LabelledGraph`] is the carrier for both the pattern `F` and the host `G`
//! in every density computation. Adjacency is stored as one bit row per
//! vertex, so induced-subgraph and twin operations stay cheap at desk scale.

mod catalog;
mod io;
mod iso;

pub use catalog::{cycle, make_named, path, NamedGraph, CATALOG_NAMES};
pub use io::{
    parse_edge_list, parse_graph, parse_graph6, serialize_edge_list, serialize_graph,
    serialize_graph6, GraphFormat,
};
pub use iso::{canonical_form, is_isomorphic, unlabelled_graphs, CanonicalForm};

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A finite simple graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelledGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl LabelledGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(WORD);
        LabelledGraph { n, words, rows: vec![0; n * words] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v, true);
            }
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        let total: u32 = self.rows.iter().map(|w| w.count_ones()).sum();
        total as usize / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Sets or clears the edge `{u, v}`. Panics on a loop or out-of-range vertex.
    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        assert_ne!(u, v, "loops are not allowed");
        let (iu, bu) = (u * self.words + v / WORD, v % WORD);
        let (iv, bv) = (v * self.words + u / WORD, u % WORD);
        if present {
            self.rows[iu] |= 1 << bu;
            self.rows[iv] |= 1 << bv;
        } else {
            self.rows[iu] &= !(1 << bu);
            self.rows[iv] &= !(1 << bv);
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * WORD + b)
            })
        })
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbours(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v, true);
                }
            }
        }
        g
    }

    /// Subgraph induced on `subset`, relabelled order-preservingly to `0..|S|`.
    ///
    /// `subset` is sorted and deduplicated first.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<Self> {
        let mut s = subset.to_vec();
        s.sort_unstable();
        s.dedup();
        for &v in &s {
            self.check_vertex(v)?;
        }
        Ok(self.induced_ordered(&s))
    }

    /// Induced subgraph where vertex `i` of the result is `order[i]`. No checks.
    pub(crate) fn induced_ordered(&self, order: &[usize]) -> Self {
        let mut g = Self::empty(order.len());
        for (i, &a) in order.iter().enumerate() {
            for (j, &b) in order.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    /// Adds a new vertex `n` with the same neighbours as `v`, plus `{v, n}` iff `connect`.
    pub fn add_twin(&self, v: usize, connect: bool) -> Result<Self> {
        self.check_vertex(v)?;
        let mut g = self.with_extra_vertex();
        let t = self.n;
        for u in self.neighbours(v) {
            g.set_edge(u, t, true);
        }
        if connect {
            g.set_edge(v, t, true);
        }
        Ok(g)
    }

    /// Copy of `self` with one extra isolated vertex.
    pub fn with_extra_vertex(&self) -> Self {
        let mut g = Self::empty(self.n + 1);
        for (u, v) in self.edges() {
            g.set_edge(u, v, true);
        }
        g
    }

    /// Relabels vertex `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut g = Self::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v], true);
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let mut g = Self::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set_edge(u, v, true);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + self.n, v + self.n, true);
        }
        g
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }
}

impl fmt::Debug for LabelledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabelledGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Number of vertex pairs on `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Vertex pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn lex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// All `2^(n(n-1)/2)` labelled graphs on `0..n`.
///
/// Bit `i` of the running mask decides the `i`-th pair of [`lex_pairs`], and
/// masks are visited in increasing order.
pub fn enumerate_labelled(n: usize) -> impl Iterator<Item = LabelledGraph> {
    let pairs = lex_pairs(n);
    assert!(pairs.len() < 64, "too many vertices to enumerate");
    (0..1u64 << pairs.len()).map(move |mask| graph_from_mask(n, &pairs, mask))
}

/// The graph whose edges are the pairs selected by the bits of `mask`.
pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> LabelledGraph {
    let mut g = LabelledGraph::empty(n);
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            g.set_edge(u, v, true);
        }
    }
    g
}

/// A partition of the vertex set into two parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub part1: Vec<usize>,
    pub part2: Vec<usize>,
}

impl Bipartition {
    pub fn new(mut part1: Vec<usize>, mut part2: Vec<usize>) -> Self {
        part1.sort_unstable();
        part2.sort_unstable();
        Bipartition { part1, part2 }
    }

    /// Checks that the parts partition `0..g.n()` and that no edge of `g`
    /// lies inside a part.
    pub fn validate_for(&self, g: &LabelledGraph) -> Result<()> {
        let n = g.n();
        let mut seen = vec![false; n];
        for &v in self.part1.iter().chain(&self.part2) {
            if v >= n {
                return Err(Error::InvalidBipartition(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidBipartition(format!("vertex {v} listed twice")));
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidBipartition(format!("vertex {v} missing")));
        }
        for part in [&self.part1, &self.part2] {
            for (i, &a) in part.iter().enumerate() {
                if let Some(&b) = part[i + 1..].iter().find(|&&b| g.has_edge(a, b)) {
                    return Err(Error::InvalidBipartition(format!("edge {a}-{b} inside a part")));
                }
            }
        }
        Ok(())
    }

    /// Pairs of distinct vertices inside the same part, part 1 first, each in
    /// lexicographic order.
    pub fn intra_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for part in [&self.part1, &self.part2] {
            for (i, &a) in part.iter().enumerate() {
                for &b in &part[i + 1..] {
                    out.push((a.min(b), a.max(b)));
                }
            }
        }
        out
    }
}
