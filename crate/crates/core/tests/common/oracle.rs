//! Brute-force reference implementations. Deliberately naive: every map,
//! every permutation, every subset.

use limitlab::graph::{lex_pairs, LabelledGraph};
use limitlab::graphon::StepGraphon;
use limitlab::Rational;
use num_traits::{One, Zero};

/// Calls `f` on every map `[h] -> [k]`.
pub fn for_each_map(h: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let mut phi = vec![0usize; h];
    if h > 0 && k == 0 {
        return;
    }
    loop {
        f(&phi);
        let mut i = 0;
        loop {
            if i == h {
                return;
            }
            phi[i] += 1;
            if phi[i] < k {
                break;
            }
            phi[i] = 0;
            i += 1;
        }
    }
}

fn graphon_sum(f: &LabelledGraph, w: &StepGraphon, induced: bool) -> Rational {
    let mut total = Rational::zero();
    for_each_map(f.n(), w.k(), |phi| {
        let mut term = Rational::one();
        for &b in phi {
            term *= w.weight(b);
        }
        for (u, v) in lex_pairs(f.n()) {
            let p = w.value(phi[u], phi[v]);
            if f.has_edge(u, v) {
                term *= p;
            } else if induced {
                term *= Rational::one() - p;
            }
        }
        total += term;
    });
    total
}

pub fn t_step(f: &LabelledGraph, w: &StepGraphon) -> Rational {
    graphon_sum(f, w, false)
}

pub fn t_ind_step(f: &LabelledGraph, w: &StepGraphon) -> Rational {
    graphon_sum(f, w, true)
}

/// (homomorphisms, injective homomorphisms, induced embeddings).
pub fn counts(f: &LabelledGraph, g: &LabelledGraph) -> (u64, u64, u64) {
    let (mut hom, mut inj, mut ind) = (0, 0, 0);
    for_each_map(f.n(), g.n(), |phi| {
        let preserves = f.edges().iter().all(|&(u, v)| phi[u] != phi[v] && g.has_edge(phi[u], phi[v]));
        if !preserves {
            return;
        }
        hom += 1;
        let mut seen = phi.to_vec();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() == phi.len() {
            inj += 1;
            if lex_pairs(f.n()).iter().all(|&(u, v)| f.has_edge(u, v) == g.has_edge(phi[u], phi[v])) {
                ind += 1;
            }
        }
    });
    (hom, inj, ind)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Isomorphism by trying every bijection.
pub fn isomorphic(g: &LabelledGraph, h: &LabelledGraph) -> bool {
    g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && permutations(g.n())
            .iter()
            .any(|p| lex_pairs(g.n()).iter().all(|&(u, v)| g.has_edge(u, v) == h.has_edge(p[u], p[v])))
}

pub fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == size)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

/// Some induced subgraph is a cycle of length at least `min`.
pub fn has_induced_cycle(g: &LabelledGraph, min: usize) -> bool {
    (min..=g.n()).any(|k| {
        subsets(g.n(), k).iter().any(|s| {
            let h = g.induced_subgraph(s).unwrap();
            h.edge_count() == k && (0..k).all(|v| h.degree(v) == 2) && connected(&h)
        })
    })
}

pub fn connected(g: &LabelledGraph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in g.neighbours(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

pub fn maximal_cliques(g: &LabelledGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let is_clique = |m: u32| {
        (0..n).all(|u| (u + 1..n).all(|v| m >> u & 1 == 0 || m >> v & 1 == 0 || g.has_edge(u, v)))
    };
    let cliques: Vec<u32> = (1u32..1 << n).filter(|&m| is_clique(m)).collect();
    cliques
        .iter()
        .filter(|&&m| !cliques.iter().any(|&o| o != m && o & m == m))
        .map(|&m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

/// Interval graphs are exactly those whose maximal cliques can be ordered so
/// that the cliques containing each vertex are consecutive.
pub fn is_interval(g: &LabelledGraph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let cliques = maximal_cliques(g);
    if cliques.len() > g.n() {
        return false;
    }
    permutations(cliques.len()).iter().any(|order| {
        (0..g.n()).all(|v| {
            let pos: Vec<usize> = (0..order.len()).filter(|&i| cliques[order[i]].contains(&v)).collect();
            pos.windows(2).all(|w| w[1] == w[0] + 1)
        })
    })
}

/// Threshold graphs are exactly those with a weight function `w` and cut `t`
/// such that `uv` is an edge iff `w(u) + w(v) > t`. Equivalently, the
/// neighbourhoods are nested once each vertex's own membership is ignored.
pub fn is_threshold(g: &LabelledGraph) -> bool {
    let n = g.n();
    let nbhd = |v: usize| -> Vec<bool> { (0..n).map(|u| u != v && g.has_edge(u, v)).collect() };
    (0..n).all(|a| {
        (0..n).all(|b| {
            let (na, nb) = (nbhd(a), nbhd(b));
            let a_in_b = (0..n).filter(|&u| u != a && u != b).all(|u| !na[u] || nb[u]);
            let b_in_a = (0..n).filter(|&u| u != a && u != b).all(|u| !nb[u] || na[u]);
            a_in_b || b_in_a
        })
    })
}
