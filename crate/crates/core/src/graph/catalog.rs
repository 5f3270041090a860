//! Named graphs used throughout the examples and tests.
//!
//! All graphs are 0-indexed. Where a graph is usually written with 1-indexed
//! or lettered vertices, the shift happens here and nowhere else:
//!
//! * `S3` (the net): vertices `1..6` become `0..5`, giving edges
//!   `01 02 12 03 14 25`.
//! * `cograph_certificate_F12`: upper-case `A..F` become `0..5` (part 1),
//!   lower-case `a..f` become `6..11` (part 2).

use super::{Bipartition, LabelledGraph};
use crate::error::{Error, Result};

/// Identifiers accepted by [`make_named`]. Parameterised families take `k`.
pub const CATALOG_NAMES: &[(&str, &str)] = &[
    ("path", "path P_k on k >= 1 vertices, edges i-(i+1)"),
    ("cycle", "cycle C_k, k >= 3, edges i-(i+1) and (k-1)-0"),
    ("complete", "complete graph K_k, k >= 1"),
    ("star", "star K_{1,k}, k >= 1, centre 0"),
    ("2K2", "two disjoint edges 01, 23"),
    ("K13", "claw K_{1,3}, centre 0"),
    ("S3", "net: triangle 012 with pendants 3, 4, 5"),
    ("S3_complement", "complement of S3"),
    ("cograph_certificate_F12", "12-vertex bipartite graph with no P4-free completion (alias F12)"),
];

/// A catalog graph, with its bipartition when the catalog declares one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraph {
    pub graph: LabelledGraph,
    pub bipartition: Option<Bipartition>,
}

impl From<LabelledGraph> for NamedGraph {
    fn from(graph: LabelledGraph) -> Self {
        NamedGraph { graph, bipartition: None }
    }
}

pub fn make_named(name: &str, param: Option<usize>) -> Result<NamedGraph> {
    let needs = |min: usize| -> Result<usize> {
        match param {
            Some(k) if k >= min => Ok(k),
            Some(k) => Err(Error::InvalidParameter(format!("{name} needs k >= {min}, got {k}"))),
            None => Err(Error::InvalidParameter(format!("{name} needs a size parameter"))),
        }
    };
    let fixed = |edges: &[(usize, usize)], n: usize| -> Result<LabelledGraph> {
        if let Some(k) = param {
            return Err(Error::InvalidParameter(format!("{name} takes no parameter, got {k}")));
        }
        LabelledGraph::from_edges(n, edges)
    };

    let graph = match name {
        "path" => path(needs(1)?),
        "cycle" => cycle(needs(3)?),
        "complete" => LabelledGraph::complete(needs(1)?),
        "star" => star(needs(1)?),
        "2K2" => fixed(&[(0, 1), (2, 3)], 4)?,
        "K13" => fixed(&[(0, 1), (0, 2), (0, 3)], 4)?,
        "S3" => fixed(&S3_EDGES, 6)?,
        "S3_complement" => fixed(&S3_EDGES, 6)?.complement(),
        "cograph_certificate_F12" | "F12" => {
            if param.is_some() {
                return Err(Error::InvalidParameter(format!("{name} takes no parameter")));
            }
            return Ok(cograph_certificate());
        }
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Ok(graph.into())
}

const S3_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)];

/// Path `P_k`: edges `i-(i+1)`.
pub fn path(k: usize) -> LabelledGraph {
    let mut g = LabelledGraph::empty(k);
    for i in 1..k {
        g.set_edge(i - 1, i, true);
    }
    g
}

/// Cycle `C_k`, `k >= 3`.
pub fn cycle(k: usize) -> LabelledGraph {
    let mut g = path(k);
    g.set_edge(k - 1, 0, true);
    g
}

fn star(k: usize) -> LabelledGraph {
    let mut g = LabelledGraph::empty(k + 1);
    for i in 1..=k {
        g.set_edge(0, i, true);
    }
    g
}

fn cograph_certificate() -> NamedGraph {
    // Ab Bb Cc Dd Ee Ff Ac Bd Ae Bf Ca Cb Db Fa
    const LETTERED: [&str; 14] =
        ["Ab", "Bb", "Cc", "Dd", "Ee", "Ff", "Ac", "Bd", "Ae", "Bf", "Ca", "Cb", "Db", "Fa"];
    let index = |c: u8| -> usize {
        if c.is_ascii_uppercase() {
            (c - b'A') as usize
        } else {
            6 + (c - b'a') as usize
        }
    };
    let edges: Vec<_> = LETTERED
        .iter()
        .map(|e| {
            let b = e.as_bytes();
            (index(b[0]), index(b[1]))
        })
        .collect();
    NamedGraph {
        graph: LabelledGraph::from_edges(12, &edges).expect("static edge list"),
        bipartition: Some(Bipartition::new((0..6).collect(), (6..12).collect())),
    }
}
