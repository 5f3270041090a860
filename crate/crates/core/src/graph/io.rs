//! Text formats: the plain edge list and graph6.
//!
//! Edge list: first line `n m`, then `m` lines `u v` with `0 <= u < v < n`,
//! single spaces, every line newline-terminated, nothing else.
//!
//! graph6: size prefix (one byte `63 + n` for `n <= 62`, or `~` plus three
//! 6-bit bytes up to 258047), followed by the upper-triangle bits in column
//! order `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte, each byte
//! offset by 63, with zero padding in the last byte.

use std::fmt::Write as _;
use std::str::FromStr;

use super::LabelledGraph;
use crate::error::{Error, Result};

const G6_MAX_N: usize = 258_047;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edge-list" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<LabelledGraph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

pub fn serialize_graph(g: &LabelledGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => serialize_edge_list(g),
        GraphFormat::Graph6 => serialize_graph6(g),
    }
}

pub fn serialize_edge_list(g: &LabelledGraph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<LabelledGraph> {
    if !text.ends_with('\n') {
        return Err(Error::parse("edge list must end with a newline"));
    }
    let mut lines = text[..text.len() - 1].split('\n');
    let header = lines.next().ok_or_else(|| Error::parse("missing header"))?;
    let (n, m) = parse_pair(header).map_err(|e| Error::parse(format!("header: {e}")))?;
    let mut g = LabelledGraph::empty(n);
    let mut count = 0;
    for (i, line) in lines.enumerate() {
        let (u, v) = parse_pair(line).map_err(|e| Error::parse(format!("line {}: {e}", i + 2)))?;
        if u >= v || v >= n {
            return Err(Error::parse(format!("line {}: need 0 <= u < v < {n}", i + 2)));
        }
        if g.has_edge(u, v) {
            return Err(Error::parse(format!("line {}: duplicate edge {u} {v}", i + 2)));
        }
        g.set_edge(u, v, true);
        count += 1;
    }
    if count != m {
        return Err(Error::parse(format!("header declares {m} edges, found {count}")));
    }
    Ok(g)
}

fn parse_pair(line: &str) -> std::result::Result<(usize, usize), String> {
    let mut parts = line.split(' ');
    let mut next = || -> std::result::Result<usize, String> {
        let tok = parts.next().ok_or("expected two integers")?;
        if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad integer `{tok}`"));
        }
        tok.parse().map_err(|_| format!("bad integer `{tok}`"))
    };
    let a = next()?;
    let b = next()?;
    if parts.next().is_some() {
        return Err("trailing garbage".into());
    }
    Ok((a, b))
}

pub fn serialize_graph6(g: &LabelledGraph) -> String {
    let n = g.n();
    assert!(n <= G6_MAX_N, "graph6 size prefix supports n <= {G6_MAX_N}");
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses one graph6 string. A single trailing newline is tolerated.
pub fn parse_graph6(text: &str) -> Result<LabelledGraph> {
    let s = text.strip_suffix('\n').unwrap_or(text);
    let s = s.strip_suffix('\r').unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::parse(format!("graph6 byte {pos} out of range")));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::parse("empty graph6 string")),
        [126, 126, ..] => return Err(Error::parse("graph6 sizes above 258047 unsupported")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::parse("truncated graph6 size prefix"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            if n <= 62 {
                return Err(Error::parse("non-minimal graph6 size prefix"));
            }
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < need {
        return Err(Error::parse(format!("graph6 body too short: {} < {need} bytes", body.len())));
    }
    if body.len() > need {
        return Err(Error::parse("trailing garbage after graph6 body"));
    }
    let mut g = LabelledGraph::empty(n);
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.set_edge(i, j, true);
            }
            k += 1;
        }
    }
    if (k..need * 6).any(bit) {
        return Err(Error::parse("nonzero graph6 padding bits"));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_named;
    use proptest::prelude::*;

    #[test]
    fn k4_and_p4() {
        let k4 = LabelledGraph::complete(4);
        assert_eq!(serialize_graph6(&k4), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), k4);
        let p4 = make_named("path", Some(4)).unwrap().graph;
        assert_eq!(serialize_graph6(&p4), "Ch");
        assert_eq!(parse_graph6("Ch\n").unwrap(), p4);
    }

    #[test]
    fn path_edge_list() {
        let p3 = make_named("path", Some(3)).unwrap().graph;
        assert_eq!(serialize_edge_list(&p3), "3 2\n0 1\n1 2\n");
        assert_eq!(parse_edge_list("3 2\n0 1\n1 2\n").unwrap(), p3);
        assert_eq!(parse_edge_list("0 0\n").unwrap(), LabelledGraph::empty(0));
    }

    #[test]
    fn edge_list_rejects() {
        for bad in [
            "3 2\n0 1\n1 2",
            "3 2\n0 1\n",
            "3 1\n1 0\n",
            "3 1\n0 3\n",
            "3 2\n0 1\n0 1\n",
            "3  1\n0 1\n",
            "3 1\n0 1 \n",
            "3 1\n0 1\n# comment\n",
            "3 1\n0 -1\n",
            "3 1\n\n",
        ] {
            assert!(parse_edge_list(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn graph6_rejects() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err()); // body missing
        assert!(parse_graph6("C~~").is_err()); // trailing garbage
        assert!(parse_graph6("C\x7f").is_err());
        assert!(parse_graph6("C ").is_err());
        assert!(parse_graph6("B@").is_err()); // n=3 uses 3 bits; padding must be zero
        assert!(parse_graph6("B_").is_ok());
        assert!(parse_graph6("~??~").is_err()); // non-minimal prefix for n = 63
    }

    #[test]
    fn graph6_long_prefix() {
        let mut g = LabelledGraph::empty(100);
        g.set_edge(0, 99, true);
        g.set_edge(41, 42, true);
        let s = serialize_graph6(&g);
        assert!(s.starts_with("~?@c"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = LabelledGraph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = crate::graph::lex_pairs(n);
            proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |bits| {
                let mut g = LabelledGraph::empty(n);
                for (&(u, v), b) in pairs.iter().zip(bits) {
                    if b {
                        g.set_edge(u, v, true);
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip_both_formats(g in arb_graph(70)) {
            prop_assert_eq!(parse_graph6(&serialize_graph6(&g)).unwrap(), g.clone());
            prop_assert_eq!(parse_edge_list(&serialize_edge_list(&g)).unwrap(), g);
        }
    }
}
