//! Hereditary graph classes: structural recognizers and membership in
//! classes defined by forbidden (induced) subgraphs.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::density::{has_induced, has_subgraph};
use crate::error::{Error, Result};
use crate::graph::{make_named, LabelledGraph};

/// Default bound for infinite cycle families.
pub const DEFAULT_TRUNCATION: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Forbid members as induced subgraphs (`U_F`).
    Induced,
    /// Forbid members as subgraphs (`U*_F`).
    Subgraph,
}

/// The infinite tail `{C_k : k >= min}`, optionally odd `k` only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleTail {
    pub min: usize,
    pub odd_only: bool,
}

impl CycleTail {
    /// Cycle lengths in the tail, up to and including `max`.
    pub fn lengths(&self, max: usize) -> impl Iterator<Item = usize> {
        let odd_only = self.odd_only;
        (self.min.max(3)..=max).filter(move |k| !odd_only || k % 2 == 1)
    }
}

/// A family of forbidden graphs, possibly with an infinite cycle tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenFamily {
    pub finite_members: Vec<LabelledGraph>,
    pub cycles: Option<CycleTail>,
    pub mode: Mode,
    /// Largest cycle length checked when the tail is present.
    pub truncation: usize,
}

impl ForbiddenFamily {
    pub fn finite(members: Vec<LabelledGraph>, mode: Mode) -> Self {
        ForbiddenFamily { finite_members: members, cycles: None, mode, truncation: 0 }
    }

    /// `{C_k : k >= min}` checked up to `truncation`.
    pub fn cycles(min: usize, odd_only: bool, mode: Mode, truncation: usize) -> Result<Self> {
        if min < 3 {
            return Err(Error::InvalidParameter(format!("cycle family needs min >= 3, got {min}")));
        }
        if truncation < min {
            return Err(Error::InvalidParameter(format!(
                "truncation {truncation} below cycle minimum {min}"
            )));
        }
        Ok(ForbiddenFamily {
            finite_members: Vec::new(),
            cycles: Some(CycleTail { min, odd_only }),
            mode,
            truncation,
        })
    }

    pub fn with_members(mut self, members: impl IntoIterator<Item = LabelledGraph>) -> Self {
        self.finite_members.extend(members);
        self
    }

    pub fn is_infinite(&self) -> bool {
        self.cycles.is_some()
    }

    /// Finite members followed by the cycles `C_k` with `k <= max_cycle`.
    pub fn members_up_to(&self, max_cycle: usize) -> Vec<LabelledGraph> {
        let mut out = self.finite_members.clone();
        if let Some(tail) = self.cycles {
            out.extend(tail.lengths(max_cycle).map(crate::graph::cycle));
        }
        out
    }

    /// Members that will actually be checked: cycles up to `truncation`.
    pub fn truncated_members(&self) -> Vec<LabelledGraph> {
        self.members_up_to(self.truncation)
    }

    pub fn validate(&self) -> Result<()> {
        if self.finite_members.is_empty() && self.cycles.is_none() {
            return Err(Error::InvalidParameter("empty forbidden family".into()));
        }
        if let Some(tail) = self.cycles {
            if self.truncation < tail.min {
                return Err(Error::InvalidParameter("truncation below cycle minimum".into()));
            }
        }
        Ok(())
    }
}

/// True iff `G` contains no member of `fam` (as an induced subgraph in
/// induced mode, as a subgraph otherwise).
///
/// Cycle tails are checked for `k <= min(truncation, |G|)`; since a cycle
/// longer than `|G|` cannot occur in `G`, the answer is exact whenever
/// `truncation >= |G|`.
pub fn forbidden_family_member(g: &LabelledGraph, fam: &ForbiddenFamily) -> bool {
    let contains = match fam.mode {
        Mode::Induced => has_induced,
        Mode::Subgraph => has_subgraph,
    };
    let cycle_max = fam.truncation.min(g.n());
    !fam.members_up_to(cycle_max).iter().any(|f| contains(f, g))
}

/// Classes with a built-in recognizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassName {
    Threshold,
    Chordal,
    Cograph,
    Interval,
    UnitInterval,
    Bipartite,
    TriangleFree,
}

impl ClassName {
    pub const ALL: [ClassName; 7] = [
        ClassName::Threshold,
        ClassName::Chordal,
        ClassName::Cograph,
        ClassName::Interval,
        ClassName::UnitInterval,
        ClassName::Bipartite,
        ClassName::TriangleFree,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassName::Threshold => "threshold",
            ClassName::Chordal => "chordal",
            ClassName::Cograph => "cograph",
            ClassName::Interval => "interval",
            ClassName::UnitInterval => "unit_interval",
            ClassName::Bipartite => "bipartite",
            ClassName::TriangleFree => "triangle_free",
        }
    }

    pub fn contains(self, g: &LabelledGraph) -> bool {
        match self {
            ClassName::Threshold => is_threshold(g),
            ClassName::Chordal => is_chordal(g),
            ClassName::Cograph => is_cograph(g),
            ClassName::Interval => is_interval(g),
            ClassName::UnitInterval => is_unit_interval(g),
            ClassName::Bipartite => is_bipartite(g),
            ClassName::TriangleFree => is_triangle_free(g),
        }
    }

    /// The forbidden family characterising the class, where one is known
    /// here. Interval graphs have none.
    pub fn forbidden_family(self) -> Option<ForbiddenFamily> {
        let named = |s: &str, k: Option<usize>| make_named(s, k).expect("catalog graph").graph;
        let fam = match self {
            ClassName::Threshold => ForbiddenFamily::finite(
                vec![named("2K2", None), named("path", Some(4)), named("cycle", Some(4))],
                Mode::Induced,
            ),
            ClassName::Cograph => ForbiddenFamily::finite(vec![named("path", Some(4))], Mode::Induced),
            ClassName::TriangleFree => {
                ForbiddenFamily::finite(vec![LabelledGraph::complete(3)], Mode::Induced)
            }
            ClassName::Chordal => {
                ForbiddenFamily::cycles(4, false, Mode::Induced, DEFAULT_TRUNCATION).ok()?
            }
            ClassName::Bipartite => {
                ForbiddenFamily::cycles(3, true, Mode::Subgraph, DEFAULT_TRUNCATION + 1).ok()?
            }
            ClassName::UnitInterval => {
                ForbiddenFamily::cycles(4, false, Mode::Induced, DEFAULT_TRUNCATION)
                    .ok()?
                    .with_members([named("K13", None), named("S3", None), named("S3_complement", None)])
            }
            ClassName::Interval => return None,
        };
        Some(fam)
    }
}

impl FromStr for ClassName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

impl fmt::Display for ClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Membership by class identifier.
pub fn is_member(class_name: &str, g: &LabelledGraph) -> Result<bool> {
    Ok(class_name.parse::<ClassName>()?.contains(g))
}

pub type MembershipFn = dyn Fn(&LabelledGraph) -> bool + Send + Sync;

/// A hereditary class: a membership oracle plus, when known, a forbidden
/// family. Hereditarity is a contract on the oracle, checked by tests.
#[derive(Clone)]
pub struct ClassSpec {
    pub name: String,
    pub oracle: Arc<MembershipFn>,
    pub forbidden: Option<ForbiddenFamily>,
}

impl ClassSpec {
    pub fn named(class: ClassName) -> Self {
        ClassSpec {
            name: class.as_str().to_string(),
            oracle: Arc::new(move |g| class.contains(g)),
            forbidden: class.forbidden_family(),
        }
    }

    /// The class `U_F` (or `U*_F`) of a forbidden family.
    pub fn from_family(name: impl Into<String>, fam: ForbiddenFamily) -> Self {
        let f = fam.clone();
        ClassSpec {
            name: name.into(),
            oracle: Arc::new(move |g| forbidden_family_member(g, &f)),
            forbidden: Some(fam),
        }
    }

    pub fn custom(name: impl Into<String>, oracle: impl Fn(&LabelledGraph) -> bool + Send + Sync + 'static) -> Self {
        ClassSpec { name: name.into(), oracle: Arc::new(oracle), forbidden: None }
    }

    pub fn contains(&self, g: &LabelledGraph) -> bool {
        (self.oracle)(g)
    }
}

impl fmt::Debug for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClassSpec").field("name", &self.name).field("forbidden", &self.forbidden).finish()
    }
}

/// Threshold: repeatedly strip an isolated or dominating vertex.
pub fn is_threshold(g: &LabelledGraph) -> bool {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg = g.degrees();
    let mut remaining = n;
    while remaining > 0 {
        let Some(v) = (0..n).find(|&v| alive[v] && (deg[v] == 0 || deg[v] == remaining - 1)) else {
            return false;
        };
        alive[v] = false;
        remaining -= 1;
        for u in g.neighbours(v) {
            if alive[u] {
                deg[u] -= 1;
            }
        }
    }
    true
}

/// Maximum cardinality search order: position `i` holds the `i`-th visited
/// vertex. Its reverse is a perfect elimination ordering iff `g` is chordal.
pub fn maximum_cardinality_search(g: &LabelledGraph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex");
        visited[v] = true;
        order.push(v);
        for u in g.neighbours(v) {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    order
}

/// Checks that `peo` (first vertex eliminated first) is a perfect
/// elimination ordering: the later neighbours of each vertex form a clique.
pub fn is_perfect_elimination_ordering(g: &LabelledGraph, peo: &[usize]) -> bool {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    peo.iter().all(|&v| {
        let later: Vec<usize> = g.neighbours(v).filter(|&u| pos[u] > pos[v]).collect();
        // Only the earliest later neighbour needs to see the rest; the others
        // are covered when that neighbour is processed.
        match later.iter().min_by_key(|&&u| pos[u]) {
            None => true,
            Some(&parent) => later.iter().all(|&u| u == parent || g.has_edge(parent, u)),
        }
    })
}

pub fn is_chordal(g: &LabelledGraph) -> bool {
    let mut peo = maximum_cardinality_search(g);
    peo.reverse();
    is_perfect_elimination_ordering(g, &peo)
}

/// Cograph: no induced `a-b-c-d`.
pub fn is_cograph(g: &LabelledGraph) -> bool {
    for (b, c) in g.edges() {
        for (b, c) in [(b, c), (c, b)] {
            for a in g.neighbours(b) {
                if a == c || g.has_edge(a, c) {
                    continue;
                }
                for d in g.neighbours(c) {
                    if d != b && d != a && !g.has_edge(d, b) && !g.has_edge(a, d) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Two-colouring by breadth-first search.
pub fn is_bipartite(g: &LabelledGraph) -> bool {
    let n = g.n();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let cv = colour[v].expect("queued vertices are coloured");
            for u in g.neighbours(v) {
                match colour[u] {
                    None => {
                        colour[u] = Some(!cv);
                        queue.push_back(u);
                    }
                    Some(cu) if cu == cv => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

pub fn is_triangle_free(g: &LabelledGraph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                continue;
            }
            if (b + 1..n).any(|c| g.has_edge(a, c) && g.has_edge(b, c)) {
                return false;
            }
        }
    }
    true
}

/// Component labels of `G - N[z]`; `usize::MAX` marks vertices of `N[z]`.
fn components_avoiding(g: &LabelledGraph, z: usize) -> Vec<usize> {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    let mut blocked = vec![false; n];
    blocked[z] = true;
    for u in g.neighbours(z) {
        blocked[u] = true;
    }
    let mut next = 0;
    for s in 0..n {
        if blocked[s] || label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for u in g.neighbours(v) {
                if !blocked[u] && label[u] == usize::MAX {
                    label[u] = next;
                    stack.push(u);
                }
            }
        }
        next += 1;
    }
    label
}

/// Some asteroidal triple, if any: three pairwise non-adjacent vertices each
/// pair of which is joined by a path avoiding the closed neighbourhood of
/// the third.
pub fn find_asteroidal_triple(g: &LabelledGraph) -> Option<(usize, usize, usize)> {
    let n = g.n();
    let comp: Vec<Vec<usize>> = (0..n).map(|z| components_avoiding(g, z)).collect();
    for x in 0..n {
        for y in x + 1..n {
            if g.has_edge(x, y) {
                continue;
            }
            for z in y + 1..n {
                if g.has_edge(x, z) || g.has_edge(y, z) {
                    continue;
                }
                if comp[z][x] == comp[z][y] && comp[y][x] == comp[y][z] && comp[x][y] == comp[x][z] {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Interval graphs are exactly the chordal graphs without an asteroidal triple.
pub fn is_interval(g: &LabelledGraph) -> bool {
    is_chordal(g) && find_asteroidal_triple(g).is_none()
}

/// Unit interval = interval and claw-free.
pub fn is_unit_interval(g: &LabelledGraph) -> bool {
    is_interval(g) && !has_induced(&make_named("K13", None).expect("catalog").graph, g)
}
