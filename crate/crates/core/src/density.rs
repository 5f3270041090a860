//! Exact homomorphism, injective and induced counts between finite graphs.
//!
//! Densities are exact [`Rational`]s:
//!
//! * `t(F, G)     = hom(F, G) / n^k`
//! * `t_inj(F, G) = inj(F, G) / (n)_k`
//! * `t_ind(F, G) = ind(F, G) / (n)_k`
//!
//! with `k = |F|`, `n = |G|` and `(n)_k` the falling factorial. When no map
//! exists at all (`k > n` for the injective variants, `n = 0 < k` for
//! homomorphisms) the density is 0.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::LabelledGraph;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum MapKind {
    /// Any map sending edges to edges.
    Hom,
    /// Injective, edges to edges.
    Inj,
    /// Injective, edges to edges and non-edges to non-edges.
    Ind,
}

pub fn hom_count(f: &LabelledGraph, g: &LabelledGraph) -> u64 {
    Embedder::new(f, g, MapKind::Hom).count(false)
}

pub fn inj_count(f: &LabelledGraph, g: &LabelledGraph) -> u64 {
    Embedder::new(f, g, MapKind::Inj).count(false)
}

pub fn ind_count(f: &LabelledGraph, g: &LabelledGraph) -> u64 {
    Embedder::new(f, g, MapKind::Ind).count(false)
}

/// True iff `F` occurs in `G` as an induced subgraph. Stops at the first embedding.
pub fn has_induced(f: &LabelledGraph, g: &LabelledGraph) -> bool {
    Embedder::new(f, g, MapKind::Ind).count(true) > 0
}

/// True iff `F` occurs in `G` as a (not necessarily induced) subgraph.
pub fn has_subgraph(f: &LabelledGraph, g: &LabelledGraph) -> bool {
    Embedder::new(f, g, MapKind::Inj).count(true) > 0
}

pub fn t_hom(f: &LabelledGraph, g: &LabelledGraph) -> Rational {
    let k = f.n() as u32;
    ratio(hom_count(f, g), BigInt::from(g.n()).pow(k))
}

pub fn t_inj(f: &LabelledGraph, g: &LabelledGraph) -> Rational {
    ratio(inj_count(f, g), falling_factorial(g.n(), f.n()))
}

pub fn t_ind(f: &LabelledGraph, g: &LabelledGraph) -> Rational {
    ratio(ind_count(f, g), falling_factorial(g.n(), f.n()))
}

/// `(n)_k = n (n-1) ... (n-k+1)`, zero when `k > n`.
pub fn falling_factorial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (n - k + 1..=n).fold(BigInt::one(), |acc, x| acc * x)
}

fn ratio(count: u64, denom: BigInt) -> Rational {
    if denom.is_zero() {
        debug_assert_eq!(count, 0);
        return Rational::zero();
    }
    Rational::new(BigInt::from(count), denom)
}

struct Embedder<'a> {
    f: &'a LabelledGraph,
    g: &'a LabelledGraph,
    kind: MapKind,
    /// F's vertices in placement order.
    order: Vec<usize>,
    /// For each position, an earlier-placed F-neighbour used to seed candidates.
    anchor: Vec<Option<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Embedder<'a> {
    fn new(f: &'a LabelledGraph, g: &'a LabelledGraph, kind: MapKind) -> Self {
        let k = f.n();
        // Greedy connectivity order: next is the vertex with the most placed
        // neighbours (ties by degree, then index).
        let mut order = Vec::with_capacity(k);
        let mut placed = vec![false; k];
        for _ in 0..k {
            let next = (0..k)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let back = f.neighbours(v).filter(|&u| placed[u]).count();
                    (back, f.degree(v), std::cmp::Reverse(v))
                })
                .expect("unplaced vertex remains");
            placed[next] = true;
            order.push(next);
        }
        let mut pos = vec![0; k];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let anchor = order
            .iter()
            .enumerate()
            .map(|(i, &v)| f.neighbours(v).find(|&u| pos[u] < i))
            .collect();
        Embedder {
            f,
            g,
            kind,
            order,
            anchor,
            image: vec![usize::MAX; k],
            used: vec![false; g.n()],
        }
    }

    fn count(&mut self, stop_at_first: bool) -> u64 {
        let injective = self.kind != MapKind::Hom;
        if injective && self.f.n() > self.g.n() {
            return 0;
        }
        let mut total = 0;
        self.extend(0, stop_at_first, &mut total);
        total
    }

    fn extend(&mut self, depth: usize, stop: bool, total: &mut u64) {
        if depth == self.order.len() {
            *total += 1;
            return;
        }
        let x = self.order[depth];
        let candidates: Vec<usize> = match self.anchor[depth] {
            Some(p) => self.g.neighbours(self.image[p]).collect(),
            None => (0..self.g.n()).collect(),
        };
        for y in candidates {
            if self.kind != MapKind::Hom && self.used[y] {
                continue;
            }
            if !self.consistent(depth, x, y) {
                continue;
            }
            self.image[x] = y;
            self.used[y] = true;
            self.extend(depth + 1, stop, total);
            self.used[y] = false;
            if stop && *total > 0 {
                return;
            }
        }
        self.image[x] = usize::MAX;
    }

    fn consistent(&self, depth: usize, x: usize, y: usize) -> bool {
        self.order[..depth].iter().all(|&u| {
            let iu = self.image[u];
            if self.f.has_edge(u, x) {
                iu != y && self.g.has_edge(iu, y)
            } else if self.kind == MapKind::Ind {
                iu != y && !self.g.has_edge(iu, y)
            } else {
                true
            }
        })
    }
}
