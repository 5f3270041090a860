//! Step graphons on a finite probability space and their exact densities.
//!
//! A [`StepGraphon`] is a list of block weights `mu` summing to one and a
//! symmetric matrix `W` with entries in `[0, 1]`, all exact rationals. For a
//! pattern `F` on `k` vertices,
//!
//! ```text
//! t(F, W)     = sum over phi: V(F) -> blocks of  prod mu[phi(i)] * prod_{ij in E(F)} W[phi(i)][phi(j)]
//! t_ind(F, W) = same, times prod_{ij not in E(F)} (1 - W[phi(i)][phi(j)])
//! ```
//!
//! The sums are evaluated over integers: weights are scaled by the lcm of
//! their denominators and matrix entries by the lcm of theirs, so each term
//! is a product of small integers and a single division happens at the end.
//! Terms are accumulated in `u128` with overflow checks and recomputed with
//! big integers when a product overflows.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::density::Rational;
use crate::error::{Error, Result};
use crate::graph::LabelledGraph;

/// A graphon constant on the blocks of a finite partition.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StepGraphon {
    weights: Vec<Rational>,
    /// Row-major `k x k`.
    values: Vec<Rational>,
}

impl StepGraphon {
    /// Validates `weights >= 0`, `sum = 1`, `0 <= W <= 1`, and symmetry.
    pub fn new(weights: Vec<Rational>, values: Vec<Vec<Rational>>) -> Result<Self> {
        let k = weights.len();
        if k == 0 {
            return Err(Error::InvalidGraphon("need at least one block".into()));
        }
        if values.len() != k || values.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidGraphon(format!("value matrix must be {k}x{k}")));
        }
        let zero = Rational::zero();
        let one = Rational::one();
        if let Some(w) = weights.iter().find(|w| **w < zero) {
            return Err(Error::InvalidGraphon(format!("negative weight {w}")));
        }
        let total: Rational = weights.iter().sum();
        if total != one {
            return Err(Error::InvalidGraphon(format!("weights sum to {total}, not 1")));
        }
        for (i, row) in values.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if *v < zero || *v > one {
                    return Err(Error::InvalidGraphon(format!("W[{i}][{j}] = {v} outside [0,1]")));
                }
                if *v != values[j][i] {
                    return Err(Error::InvalidGraphon(format!("W[{i}][{j}] != W[{j}][{i}]")));
                }
            }
        }
        Ok(StepGraphon { weights, values: values.into_iter().flatten().collect() })
    }

    /// Number of blocks.
    pub fn k(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> &Rational {
        &self.weights[i]
    }

    pub fn value(&self, i: usize, j: usize) -> &Rational {
        &self.values[i * self.k() + j]
    }

    /// Constant graphon with value `p`.
    pub fn constant(p: Rational) -> Result<Self> {
        Self::new(vec![Rational::one()], vec![vec![p]])
    }

    /// The step graphon `W_G` of a graph: `|G|` blocks of weight `1/|G|`,
    /// value 1 exactly on edges.
    pub fn of_graph(g: &LabelledGraph) -> Result<Self> {
        let n = g.n();
        if n == 0 {
            return Err(Error::InvalidGraphon("graphon of the empty graph is undefined".into()));
        }
        let w = Rational::new(BigInt::one(), BigInt::from(n));
        let values = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i != j && g.has_edge(i, j) { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        Self::new(vec![w; n], values)
    }

    /// Random-free on a finite space: every value between blocks of positive
    /// weight is 0 or 1. Zero-weight blocks are a null set and ignored.
    pub fn is_random_free(&self) -> bool {
        let k = self.k();
        (0..k).all(|i| {
            (0..k).all(|j| {
                self.weights[i].is_zero()
                    || self.weights[j].is_zero()
                    || self.value(i, j).is_zero()
                    || self.value(i, j).is_one()
            })
        })
    }

    /// Cumulative block weights as `f64`, for inverse-transform sampling.
    pub(crate) fn cumulative_weights(&self) -> Vec<f64> {
        let mut acc = Rational::zero();
        self.weights
            .iter()
            .map(|w| {
                acc += w;
                acc.to_f64().unwrap_or(1.0)
            })
            .collect()
    }

    /// Matrix values as `f64`, row-major.
    pub(crate) fn values_f64(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.to_f64().unwrap_or(0.0)).collect()
    }

    /// Text form: `k`, the weights line, then `k` matrix rows.
    pub fn to_text(&self) -> String {
        let k = self.k();
        let join = |it: &mut dyn Iterator<Item = &Rational>| {
            it.map(|r| r.to_string()).collect::<Vec<_>>().join(" ")
        };
        let mut out = format!("{k}\n{}\n", join(&mut self.weights.iter()));
        for i in 0..k {
            out.push_str(&join(&mut self.values[i * k..(i + 1) * k].iter()));
            out.push('\n');
        }
        out
    }

    /// Parses the text form, checking every invariant.
    pub fn parse(text: &str) -> Result<Self> {
        let body = text.strip_suffix('\n').unwrap_or(text);
        let mut lines = body.split('\n');
        let header = lines.next().unwrap_or("");
        let k: usize = header
            .parse()
            .map_err(|_| Error::parse(format!("bad block count `{header}`")))?;
        let weights = parse_row(lines.next(), k, "weights")?;
        let mut values = Vec::with_capacity(k);
        for i in 0..k {
            values.push(parse_row(lines.next(), k, &format!("row {i}"))?);
        }
        if lines.next().is_some() {
            return Err(Error::parse("trailing lines after graphon matrix"));
        }
        Self::new(weights, values)
    }

    /// Block `b` split into two halves with identical rows; represents the
    /// same graph limit.
    pub fn split_block(&self, b: usize) -> Self {
        let k = self.k();
        let src: Vec<usize> = (0..=k).map(|i| if i <= b { i } else { i - 1 }).collect();
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let weights = (0..=k)
            .map(|i| {
                if i == b || i == b + 1 {
                    &self.weights[b] * &half
                } else {
                    self.weights[src[i]].clone()
                }
            })
            .collect();
        let values =
            (0..=k).map(|i| (0..=k).map(|j| self.value(src[i], src[j]).clone()).collect()).collect();
        Self::new(weights, values).expect("splitting preserves the invariants")
    }
}

fn parse_row(line: Option<&str>, k: usize, what: &str) -> Result<Vec<Rational>> {
    let line = line.ok_or_else(|| Error::parse(format!("missing {what}")))?;
    let row: Vec<Rational> = line
        .split(' ')
        .map(parse_rational)
        .collect::<Result<_>>()
        .map_err(|e| Error::parse(format!("{what}: {e}")))?;
    if row.len() != k {
        return Err(Error::parse(format!("{what}: expected {k} entries, found {}", row.len())));
    }
    Ok(row)
}

/// `p/q` or an integer.
pub fn parse_rational(tok: &str) -> Result<Rational> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit() || b == b'/' || b == b'-') {
        return Err(Error::parse(format!("bad rational `{tok}`")));
    }
    Rational::from_str(tok).map_err(|_| Error::parse(format!("bad rational `{tok}`")))
}

impl fmt::Debug for StepGraphon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StepGraphon({:?})", self.to_text())
    }
}

/// Graphons from the catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphonName {
    /// Two blocks of weight 1/2, `W(x, y) = (x + y) / 2` on `{0, 1}`.
    ChordalTwoPoint,
    Constant(Rational),
    /// `k` equal blocks, `W[i][j] = 1` iff `i + j >= k` (0-indexed).
    ThresholdStaircase(usize),
    /// Two blocks of weight 1/2, complete bipartite between them.
    BipartiteTwoPoint,
}

pub const GRAPHON_NAMES: &[(&str, &str)] = &[
    ("chordal_two_point", "mu = (1/2, 1/2), W = [[0, 1/2], [1/2, 1]]"),
    ("constant:P", "one block with value P in [0, 1]"),
    ("threshold_staircase:K", "K equal blocks, W[i][j] = 1 iff i + j >= K"),
    ("bipartite_two_point", "mu = (1/2, 1/2), W = [[0, 1], [1, 0]]"),
];

impl FromStr for GraphonName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, param) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let no_param = |g: GraphonName| match param {
            None => Ok(g),
            Some(p) => Err(Error::InvalidParameter(format!("{name} takes no parameter, got {p}"))),
        };
        match name {
            "chordal_two_point" => no_param(GraphonName::ChordalTwoPoint),
            "bipartite_two_point" => no_param(GraphonName::BipartiteTwoPoint),
            "constant" => {
                let p = param.ok_or_else(|| Error::InvalidParameter("constant needs a value".into()))?;
                Ok(GraphonName::Constant(parse_rational(p)?))
            }
            "threshold_staircase" => {
                let k = param
                    .and_then(|p| p.parse().ok())
                    .ok_or_else(|| Error::InvalidParameter("threshold_staircase needs k".into()))?;
                Ok(GraphonName::ThresholdStaircase(k))
            }
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

pub fn named_graphon(name: &GraphonName) -> Result<StepGraphon> {
    let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
    match name {
        GraphonName::ChordalTwoPoint => StepGraphon::new(
            vec![r(1, 2), r(1, 2)],
            vec![vec![r(0, 1), r(1, 2)], vec![r(1, 2), r(1, 1)]],
        ),
        GraphonName::BipartiteTwoPoint => StepGraphon::new(
            vec![r(1, 2), r(1, 2)],
            vec![vec![r(0, 1), r(1, 1)], vec![r(1, 1), r(0, 1)]],
        ),
        GraphonName::Constant(p) => {
            if *p < Rational::zero() || *p > Rational::one() {
                return Err(Error::InvalidParameter(format!("constant value {p} outside [0,1]")));
            }
            StepGraphon::constant(p.clone())
        }
        GraphonName::ThresholdStaircase(k) => {
            let k = *k;
            if k == 0 {
                return Err(Error::InvalidParameter("threshold_staircase needs k >= 1".into()));
            }
            let values = (0..k)
                .map(|i| (0..k).map(|j| if i + j >= k { r(1, 1) } else { r(0, 1) }).collect())
                .collect();
            StepGraphon::new(vec![r(1, k as i64); k], values)
        }
    }
}

/// `t(F, W)`: homomorphism density of `F` in the step graphon.
pub fn t_step(f: &LabelledGraph, w: &StepGraphon) -> Rational {
    block_sum(f, w, false)
}

/// `t_ind(F, W)`: probability that `G(|F|, W)` equals the labelled graph `F`.
pub fn t_ind_step(f: &LabelledGraph, w: &StepGraphon) -> Rational {
    block_sum(f, w, true)
}

/// `t(C_k, W) = trace(M^k)` with `M[i][j] = mu_i W[i][j]`.
pub fn t_cycle_step(k: usize, w: &StepGraphon) -> Result<Rational> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("cycle length {k} < 3")));
    }
    let m = w.k();
    let base: Vec<Rational> = (0..m * m).map(|idx| w.weight(idx / m) * w.value(idx / m, idx % m)).collect();
    let mut power = base.clone();
    for _ in 1..k {
        power = mat_mul(&power, &base, m);
    }
    Ok((0..m).map(|i| power[i * m + i].clone()).sum())
}

fn mat_mul(a: &[Rational], b: &[Rational], m: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); m * m];
    for i in 0..m {
        for l in 0..m {
            let x = &a[i * m + l];
            if x.is_zero() {
                continue;
            }
            for j in 0..m {
                out[i * m + j] += x * &b[l * m + j];
            }
        }
    }
    out
}

/// Integer-scaled form of a graphon: `mu_i = weight[i] / wden`,
/// `W[i][j] = on[i][j] / vden`, `1 - W[i][j] = off[i][j] / vden`.
struct Scaled {
    k: usize,
    weight: Vec<BigUint>,
    wden: BigUint,
    on: Vec<BigUint>,
    off: Vec<BigUint>,
    vden: BigUint,
}

impl Scaled {
    fn new(w: &StepGraphon) -> Self {
        let lcm = |xs: &mut dyn Iterator<Item = &Rational>| {
            xs.fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
        };
        let wden = lcm(&mut w.weights.iter());
        let vden = lcm(&mut w.values.iter());
        let scale = |r: &Rational, d: &BigInt| -> BigUint {
            (r.numer() * (d / r.denom())).to_biguint().expect("non-negative")
        };
        Scaled {
            k: w.k(),
            weight: w.weights.iter().map(|r| scale(r, &wden)).collect(),
            on: w.values.iter().map(|r| scale(r, &vden)).collect(),
            off: w.values.iter().map(|r| scale(&(Rational::one() - r), &vden)).collect(),
            wden: wden.to_biguint().expect("positive"),
            vden: vden.to_biguint().expect("positive"),
        }
    }
}

/// Numerator arithmetic for the block sum.
trait Acc: Clone {
    fn lift(x: &BigUint) -> Option<Self>;
    fn mul(&self, x: &Self) -> Option<Self>;
    fn add(&self, x: &Self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn zero() -> Self;
    fn one() -> Self;
    fn into_big(self) -> BigUint;
}

impl Acc for u128 {
    fn lift(x: &BigUint) -> Option<Self> {
        x.to_u128()
    }
    fn mul(&self, x: &Self) -> Option<Self> {
        self.checked_mul(*x)
    }
    fn add(&self, x: &Self) -> Option<Self> {
        self.checked_add(*x)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn into_big(self) -> BigUint {
        BigUint::from(self)
    }
}

impl Acc for BigUint {
    fn lift(x: &BigUint) -> Option<Self> {
        Some(x.clone())
    }
    fn mul(&self, x: &Self) -> Option<Self> {
        Some(self * x)
    }
    fn add(&self, x: &Self) -> Option<Self> {
        Some(self + x)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn into_big(self) -> BigUint {
        self
    }
}

struct BlockSum<'a, T> {
    f: &'a LabelledGraph,
    induced: bool,
    k: usize,
    weight: Vec<T>,
    on: Vec<T>,
    off: Vec<T>,
    phi: Vec<usize>,
}

impl<T: Acc> BlockSum<'_, T> {
    /// Sum of all term numerators, or `None` on overflow.
    fn run(&mut self, v: usize, partial: &T) -> Option<T> {
        if v == self.f.n() {
            return Some(partial.clone());
        }
        let mut total = T::zero();
        for b in 0..self.k {
            if self.weight[b].is_zero() {
                continue;
            }
            let mut p = partial.mul(&self.weight[b])?;
            for u in 0..v {
                let idx = self.phi[u] * self.k + b;
                let factor = if self.f.has_edge(u, v) {
                    &self.on[idx]
                } else if self.induced {
                    &self.off[idx]
                } else {
                    continue;
                };
                if factor.is_zero() {
                    p = T::zero();
                    break;
                }
                p = p.mul(factor)?;
            }
            if p.is_zero() {
                continue;
            }
            self.phi[v] = b;
            total = total.add(&self.run(v + 1, &p)?)?;
        }
        Some(total)
    }
}

fn numerator<T: Acc>(f: &LabelledGraph, s: &Scaled, induced: bool) -> Option<BigUint> {
    let lift = |xs: &[BigUint]| xs.iter().map(T::lift).collect::<Option<Vec<T>>>();
    let mut sum = BlockSum {
        f,
        induced,
        k: s.k,
        weight: lift(&s.weight)?,
        on: lift(&s.on)?,
        off: lift(&s.off)?,
        phi: vec![0; f.n()],
    };
    sum.run(0, &T::one()).map(T::into_big)
}

fn block_sum(f: &LabelledGraph, w: &StepGraphon, induced: bool) -> Rational {
    let s = Scaled::new(w);
    let num = numerator::<u128>(f, &s, induced)
        .or_else(|| numerator::<BigUint>(f, &s, induced))
        .expect("big-integer path cannot overflow");
    let kf = f.n() as u32;
    let factors = if induced { crate::graph::pair_count(f.n()) } else { f.edge_count() } as u32;
    let den = s.wden.pow(kf) * s.vden.pow(factors);
    Rational::new(BigInt::from(num), BigInt::from(den))
}
