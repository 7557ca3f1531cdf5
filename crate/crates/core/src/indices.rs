//! Degree-based, distance-based and counting indices.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::Graph;

/// Largest order accepted by the matching and independent-set counters.
pub const COUNTING_ORDER_LIMIT: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("{index} is limited to graphs with at most {limit} vertices (got {order})")]
    TooLarge {
        index: IndexId,
        order: usize,
        limit: usize,
    },
    #[error("unknown index {0:?}; expected one of M1, M2, MN, F, Z, SIGMA, CHI, HARARY")]
    UnknownIndex(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndexId {
    M1,
    M2,
    MN,
    F,
    Z,
    Sigma,
    Chi,
    Harary,
}

impl IndexId {
    pub const ALL: [IndexId; 8] = [
        IndexId::M1,
        IndexId::M2,
        IndexId::MN,
        IndexId::F,
        IndexId::Z,
        IndexId::Sigma,
        IndexId::Chi,
        IndexId::Harary,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IndexId::M1 => "M1",
            IndexId::M2 => "M2",
            IndexId::MN => "MN",
            IndexId::F => "F",
            IndexId::Z => "Z",
            IndexId::Sigma => "SIGMA",
            IndexId::Chi => "CHI",
            IndexId::Harary => "HARARY",
        }
    }

    pub fn long_name(self) -> &'static str {
        match self {
            IndexId::M1 => "First Zagreb index",
            IndexId::M2 => "Second Zagreb index",
            IndexId::MN => "Neighbourhood Zagreb index",
            IndexId::F => "Forgotten topological index",
            IndexId::Z => "Hosoya index",
            IndexId::Sigma => "Merrifield-Simmons index",
            IndexId::Chi => "Randic connectivity index",
            IndexId::Harary => "Harary index",
        }
    }
}

impl fmt::Display for IndexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IndexId {
    type Err = IndexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IndexId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| IndexError::UnknownIndex(s.to_string()))
    }
}

/// Value of an index, exact wherever the index itself is exact.
#[derive(Debug, Clone, PartialEq)]
pub enum IndexValue {
    Integer(BigInt),
    Rational(BigRational),
    Real(f64),
}

impl IndexValue {
    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            IndexValue::Integer(v) => Some(v),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        match self {
            IndexValue::Integer(v) => v.to_f64().unwrap_or(f64::NAN),
            IndexValue::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            IndexValue::Real(x) => *x,
        }
    }

    /// Integers verbatim, rationals as `p/q`, reals to `precision`
    /// significant digits.
    pub fn render(&self, precision: usize) -> String {
        match self {
            IndexValue::Integer(v) => v.to_string(),
            IndexValue::Rational(r) if r.is_integer() => r.numer().to_string(),
            IndexValue::Rational(r) => format!("{}/{}", r.numer(), r.denom()),
            IndexValue::Real(x) => format_significant(*x, precision),
        }
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(6))
    }
}

/// `%g`-style formatting: `digits` significant digits, trailing zeros kept
/// off, exponent form outside `1e-5 .. 1e{digits}`.
pub fn format_significant(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exponent = x.abs().log10().floor() as i32;
    if exponent < -5 || exponent >= digits as i32 {
        let s = format!("{:.*e}", digits - 1, x);
        let (mantissa, exp) = s.split_once('e').unwrap_or((&s, "0"));
        return format!("{}e{}", trim_zeros(mantissa), exp);
    }
    let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Neighbourhood Zagreb index: sum over vertices of the squared
/// neighbour-degree sum.
pub fn neighbourhood_zagreb(g: &Graph) -> BigInt {
    g.neighbor_degree_sums()
        .into_iter()
        .map(|d| BigInt::from(d) * d)
        .sum()
}

pub fn first_zagreb(g: &Graph) -> BigInt {
    g.degrees().into_iter().map(|d| BigInt::from(d) * d).sum()
}

pub fn second_zagreb(g: &Graph) -> BigInt {
    g.edges()
        .iter()
        .map(|&(u, v)| BigInt::from(g.degree(u)) * g.degree(v))
        .sum()
}

pub fn forgotten(g: &Graph) -> BigInt {
    g.degrees()
        .into_iter()
        .map(|d| BigInt::from(d) * d * d)
        .sum()
}

pub fn randic(g: &Graph) -> f64 {
    g.edges()
        .iter()
        .map(|&(u, v)| 1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt())
        .sum()
}

/// Sum of reciprocal distances over unordered reachable pairs.
pub fn harary(g: &Graph) -> BigRational {
    // Group by distance first: one rational term per distinct distance.
    let mut by_distance: HashMap<u32, u64> = HashMap::new();
    for (u, row) in g.distance_matrix().iter().enumerate() {
        for d in row[u + 1..].iter().flatten() {
            *by_distance.entry(*d).or_default() += 1;
        }
    }
    by_distance
        .into_iter()
        .fold(BigRational::zero(), |acc, (d, count)| {
            acc + BigRational::new(BigInt::from(count), BigInt::from(d))
        })
}

/// Number of matchings, the empty matching included.
pub fn hosoya(g: &Graph) -> Result<BigUint, IndexError> {
    let masks = neighbour_masks(g, IndexId::Z)?;
    let mut memo = HashMap::new();
    Ok(count_matchings(&masks, full_mask(g.order()), &mut memo))
}

/// Number of independent vertex sets, the empty set included.
pub fn merrifield_simmons(g: &Graph) -> Result<BigUint, IndexError> {
    let masks = neighbour_masks(g, IndexId::Sigma)?;
    let mut memo = HashMap::new();
    Ok(count_independent(&masks, full_mask(g.order()), &mut memo))
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn neighbour_masks(g: &Graph, index: IndexId) -> Result<Vec<u64>, IndexError> {
    if g.order() > COUNTING_ORDER_LIMIT {
        return Err(IndexError::TooLarge {
            index,
            order: g.order(),
            limit: COUNTING_ORDER_LIMIT,
        });
    }
    Ok((0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | (1 << u)))
        .collect())
}

// Z(S) = Z(S - v) + sum over neighbours u of v in S of Z(S - v - u).
fn count_matchings(adj: &[u64], alive: u64, memo: &mut HashMap<u64, BigUint>) -> BigUint {
    if alive == 0 {
        return BigUint::one();
    }
    if let Some(hit) = memo.get(&alive) {
        return hit.clone();
    }
    let v = alive.trailing_zeros() as usize;
    let rest = alive & !(1 << v);
    let mut total = count_matchings(adj, rest, memo);
    let mut partners = adj[v] & rest;
    while partners != 0 {
        let u = partners.trailing_zeros();
        partners &= partners - 1;
        total += count_matchings(adj, rest & !(1 << u), memo);
    }
    memo.insert(alive, total.clone());
    total
}

// sigma(S) = sigma(S - v) + sigma(S - N[v]).
fn count_independent(adj: &[u64], alive: u64, memo: &mut HashMap<u64, BigUint>) -> BigUint {
    if alive == 0 {
        return BigUint::one();
    }
    if let Some(hit) = memo.get(&alive) {
        return hit.clone();
    }
    let v = alive.trailing_zeros() as usize;
    let rest = alive & !(1 << v);
    let total = count_independent(adj, rest, memo) + count_independent(adj, rest & !adj[v], memo);
    memo.insert(alive, total.clone());
    total
}

/// Evaluates any supported index on `g`.
pub fn compute(g: &Graph, id: IndexId) -> Result<IndexValue, IndexError> {
    Ok(match id {
        IndexId::M1 => IndexValue::Integer(first_zagreb(g)),
        IndexId::M2 => IndexValue::Integer(second_zagreb(g)),
        IndexId::MN => IndexValue::Integer(neighbourhood_zagreb(g)),
        IndexId::F => IndexValue::Integer(forgotten(g)),
        IndexId::Z => IndexValue::Integer(hosoya(g)?.into()),
        IndexId::Sigma => IndexValue::Integer(merrifield_simmons(g)?.into()),
        IndexId::Chi => IndexValue::Real(randic(g)),
        IndexId::Harary => IndexValue::Rational(harary(g)),
    })
}
