//! Closed-form expressions for the Neighbourhood Zagreb index of product
//! graphs, evaluated exactly as printed in the source literature.
//!
//! Nothing here is corrected. Expressions that disagree with direct
//! computation are exposed unchanged and the disagreement is reported by
//! [`crate::verify`]. Where the product δ laws imply a different compact
//! expansion, that expansion lives in a separately named function
//! ([`mn_wreath_from_delta_law`]) and is never substituted for the printed
//! one.
//!
//! Multi-index sums written `i ≠ j`, `i ≠ j ≠ k`, ... range over ordered
//! tuples of pairwise distinct factor indices.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::graph::Graph;
use crate::indices::{first_zagreb, neighbourhood_zagreb, second_zagreb};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("unknown formula {0:?}")]
    UnknownFormula(String),
    #[error("{0} is a proposition, not a family example; evaluate it from factor statistics")]
    NotAnExample(FormulaId),
    #[error("{id} expects {expected}")]
    WrongParams {
        id: FormulaId,
        expected: &'static str,
    },
    #[error("at least one factor is required")]
    NoFactors,
}

/// Order, size and degree indices of one factor graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub order: BigInt,
    pub size: BigInt,
    pub m1: BigInt,
    pub m2: BigInt,
    pub mn: BigInt,
}

impl GraphStats {
    pub fn of(g: &Graph) -> Self {
        GraphStats {
            order: g.order().into(),
            size: g.size().into(),
            m1: first_zagreb(g),
            m2: second_zagreb(g),
            mn: neighbourhood_zagreb(g),
        }
    }
}

/// Cartesian product, two factors.
pub fn mn_cartesian(s1: &GraphStats, s2: &GraphStats) -> BigInt {
    6 * &s1.m1 * &s2.m1
        + &s2.order * &s1.mn
        + &s1.order * &s2.mn
        + 16 * (&s2.size * &s1.m2 + &s1.size * &s2.m2)
}

/// Calls `visit` once per ordered tuple of `k` pairwise distinct indices
/// drawn from `0..n`.
fn for_each_distinct_tuple(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    fn go(n: usize, k: usize, tuple: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        if tuple.len() == k {
            visit(tuple);
            return;
        }
        for i in 0..n {
            if !tuple.contains(&i) {
                tuple.push(i);
                go(n, k, tuple, visit);
                tuple.pop();
            }
        }
    }
    go(n, k, &mut Vec::with_capacity(k), &mut visit);
}

/// `|V| / (|V_i| |V_j| ...)` for the distinct indices in `tuple`: the
/// product of the orders of all other factors.
fn co_order(stats: &[GraphStats], tuple: &[usize]) -> BigInt {
    stats
        .iter()
        .enumerate()
        .filter(|(i, _)| !tuple.contains(i))
        .map(|(_, s)| s.order.clone())
        .product()
}

fn tuple_sum(stats: &[GraphStats], k: usize, term: impl Fn(&[&GraphStats]) -> BigInt) -> BigInt {
    let mut total = BigInt::zero();
    for_each_distinct_tuple(stats.len(), k, |t| {
        let picked: Vec<&GraphStats> = t.iter().map(|&i| &stats[i]).collect();
        total += term(&picked) * co_order(stats, t);
    });
    total
}

/// n-ary Cartesian product.
pub fn mn_cartesian_nary(stats: &[GraphStats]) -> Result<BigInt, FormulaError> {
    if stats.is_empty() {
        return Err(FormulaError::NoFactors);
    }
    Ok(tuple_sum(stats, 1, |s| s[0].mn.clone())
        + 3 * tuple_sum(stats, 2, |s| &s[0].m1 * &s[1].m1)
        + 24 * tuple_sum(stats, 3, |s| &s[0].m1 * &s[1].size * &s[2].size)
        + 16 * tuple_sum(stats, 2, |s| &s[0].m2 * &s[1].size)
        + 16 * tuple_sum(stats, 4, |s| {
            &s[0].size * &s[1].size * &s[2].size * &s[3].size
        }))
}

/// Edge count of the n-ary Cartesian product, `|V| Σ |E_i| / |V_i|`.
pub fn size_cartesian_nary(stats: &[GraphStats]) -> BigInt {
    tuple_sum(stats, 1, |s| s[0].size.clone())
}

/// First Zagreb index of the n-ary Cartesian product.
pub fn m1_cartesian_nary(stats: &[GraphStats]) -> BigInt {
    tuple_sum(stats, 1, |s| s[0].m1.clone()) + 4 * tuple_sum(stats, 2, |s| &s[0].size * &s[1].size)
}

/// Second Zagreb index of the n-ary Cartesian product. The middle term
/// `3 Σ M1(G_i)(|E|/|V_i| - |V||E_i|/|V_i|²)` is evaluated over the
/// rationals; its sum is always integral.
pub fn m2_cartesian_nary(stats: &[GraphStats]) -> BigInt {
    let order: BigInt = stats.iter().map(|s| s.order.clone()).product();
    let size = size_cartesian_nary(stats);
    let middle = stats.iter().fold(BigRational::zero(), |acc, s| {
        let vi = BigRational::from_integer(s.order.clone());
        let bracket = BigRational::from_integer(size.clone()) / &vi
            - BigRational::from_integer(&order * &s.size) / (&vi * &vi);
        acc + BigRational::from_integer(s.m1.clone()) * bracket
    });
    let middle = middle * BigRational::from_integer(3.into());
    assert!(
        middle.is_integer(),
        "middle term is integral for real factor statistics"
    );
    tuple_sum(stats, 1, |s| s[0].m2.clone())
        + middle.to_integer()
        + 4 * tuple_sum(stats, 3, |s| &s[0].size * &s[1].size * &s[2].size)
}

/// Tensor product: the index is multiplicative.
pub fn mn_tensor(mn1: &BigInt, mn2: &BigInt) -> BigInt {
    mn1 * mn2
}

/// Wreath product `G1[G2]`, coefficients exactly as printed.
pub fn mn_wreath_printed(s1: &GraphStats, s2: &GraphStats) -> BigInt {
    let v2 = &s2.order;
    let e2 = &s2.size;
    v2.pow(4) * &s1.mn
        + &s2.mn
        + 12 * v2 * e2 * e2 * &s1.m1
        + 8 * &s1.size * e2 * &s2.m1
        + 8 * v2 * v2 * e2 * (v2 + 1) * &s1.m2
        + 8 * v2 * &s1.size * &s2.m2
        + 3 * v2 * v2 * &s1.m1 * &s2.m1
}

/// Wreath product `G1[G2]` obtained by squaring and summing the per-vertex
/// law `δ(u,v) = |V2|²δ1(u) + δ2(v) + 2|E2|deg1(u) + |V2|deg1(u)deg2(v)`.
///
/// Not the printed expression: the `M_N(G1)`, `M_N(G2)` and `M2(G1)`
/// coefficients differ.
pub fn mn_wreath_from_delta_law(s1: &GraphStats, s2: &GraphStats) -> BigInt {
    let v2 = &s2.order;
    let e2 = &s2.size;
    v2.pow(5) * &s1.mn
        + &s1.order * &s2.mn
        + 12 * v2 * e2 * e2 * &s1.m1
        + 3 * v2 * v2 * &s1.m1 * &s2.m1
        + 16 * v2.pow(3) * e2 * &s1.m2
        + 8 * &s1.size * e2 * &s2.m1
        + 8 * v2 * &s1.size * &s2.m2
}

/// Hamming graph `H(n_1, ..., n_m)`, printed multinomial expansion.
pub fn mn_hamming(sizes: &[usize]) -> BigInt {
    let a: Vec<BigInt> = sizes.iter().map(|&n| BigInt::from(n) - 1).collect();
    let tuples = |k: usize, term: &dyn Fn(&[usize]) -> BigInt| {
        let mut total = BigInt::zero();
        for_each_distinct_tuple(a.len(), k, |t| total += term(t));
        total
    };
    let bracket = tuples(1, &|t| a[t[0]].pow(4))
        + 3 * tuples(2, &|t| a[t[0]].pow(2) * a[t[1]].pow(2))
        + 6 * tuples(3, &|t| a[t[0]].pow(2) * &a[t[1]] * &a[t[2]])
        + 4 * tuples(2, &|t| a[t[0]].pow(3) * &a[t[1]])
        + tuples(4, &|t| &a[t[0]] * &a[t[1]] * &a[t[2]] * &a[t[3]]);
    sizes.iter().map(|&n| BigInt::from(n)).product::<BigInt>() * bracket
}

/// `(Π n_i)(Σ (n_i - 1))⁴`: the regular-graph value `|V| r⁴`.
pub fn mn_hamming_compact(sizes: &[usize]) -> BigInt {
    let order: BigInt = sizes.iter().map(|&n| BigInt::from(n)).product();
    let degree: BigInt = sizes.iter().map(|&n| BigInt::from(n) - 1).sum();
    order * degree.pow(4)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormulaId {
    Prop1,
    Prop2,
    Prop3,
    Prop4Printed,
    Hamming,
    ExLadder,
    ExNanotorus,
    ExNanotube,
    ExGrid,
    ExPrism,
    ExRook,
    ExHypercube,
    ExTensorPP,
    ExTensorCC,
    ExTensorKK,
    ExTensorPC,
    ExTensorPK,
    ExTensorCK,
    ExFence,
    ExClosedFence,
}

/// How a formula's verification points are parameterised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamShape {
    /// Random factor pairs.
    RandomPair,
    /// Random factor lists.
    RandomList,
    /// One integer.
    Single,
    /// Two integers `(m, n)`.
    Pair,
    /// A list of complete-graph orders.
    Sizes,
}

impl FormulaId {
    pub const ALL: [FormulaId; 20] = [
        FormulaId::Prop1,
        FormulaId::Prop2,
        FormulaId::Prop3,
        FormulaId::Prop4Printed,
        FormulaId::Hamming,
        FormulaId::ExLadder,
        FormulaId::ExNanotorus,
        FormulaId::ExNanotube,
        FormulaId::ExGrid,
        FormulaId::ExPrism,
        FormulaId::ExRook,
        FormulaId::ExHypercube,
        FormulaId::ExTensorPP,
        FormulaId::ExTensorCC,
        FormulaId::ExTensorKK,
        FormulaId::ExTensorPC,
        FormulaId::ExTensorPK,
        FormulaId::ExTensorCK,
        FormulaId::ExFence,
        FormulaId::ExClosedFence,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FormulaId::Prop1 => "PROP1",
            FormulaId::Prop2 => "PROP2",
            FormulaId::Prop3 => "PROP3",
            FormulaId::Prop4Printed => "PROP4_PRINTED",
            FormulaId::Hamming => "HAMMING",
            FormulaId::ExLadder => "EX_LADDER",
            FormulaId::ExNanotorus => "EX_NANOTORUS",
            FormulaId::ExNanotube => "EX_NANOTUBE",
            FormulaId::ExGrid => "EX_GRID",
            FormulaId::ExPrism => "EX_PRISM",
            FormulaId::ExRook => "EX_ROOK",
            FormulaId::ExHypercube => "EX_HYPERCUBE",
            FormulaId::ExTensorPP => "EX_TENSOR_PP",
            FormulaId::ExTensorCC => "EX_TENSOR_CC",
            FormulaId::ExTensorKK => "EX_TENSOR_KK",
            FormulaId::ExTensorPC => "EX_TENSOR_PC",
            FormulaId::ExTensorPK => "EX_TENSOR_PK",
            FormulaId::ExTensorCK => "EX_TENSOR_CK",
            FormulaId::ExFence => "EX_FENCE",
            FormulaId::ExClosedFence => "EX_CLOSED_FENCE",
        }
    }

    /// The graph and the printed expression, for reports.
    pub fn printed(self) -> &'static str {
        match self {
            FormulaId::Prop1 => "M_N(G1 x G2) = 6 M1(G1) M1(G2) + |V2| M_N(G1) + |V1| M_N(G2) + 16[|E2| M2(G1) + |E1| M2(G2)]",
            FormulaId::Prop2 => "M_N of an n-ary Cartesian product (ordered distinct index tuples)",
            FormulaId::Prop3 => "M_N(G1 (x) G2) = M_N(G1) M_N(G2)",
            FormulaId::Prop4Printed => "M_N(G1[G2]) = |V2|^4 M_N(G1) + M_N(G2) + 12|V2||E2|^2 M1(G1) + 8|E1||E2| M1(G2) + 8|V2|^2|E2|(|V2|+1) M2(G1) + 8|V2||E1| M2(G2) + 3|V2|^2 M1(G1) M1(G2)",
            FormulaId::Hamming => "M_N(H(n_1..n_m)) = (prod n_i)[multinomial expansion in (n_i - 1)]",
            FormulaId::ExLadder => "M_N(P_2 x P_{n+1}) = 162n - 132",
            FormulaId::ExNanotorus => "M_N(C_m x C_n) = 256mn",
            FormulaId::ExNanotube => "M_N(P_n x C_m) = 256mn - 374m, n >= 4",
            FormulaId::ExGrid => "M_N(P_n x P_m) = 256mn - 310m - 310n + 216, m,n >= 4",
            FormulaId::ExPrism => "M_N(K_2 x C_n) = 162n",
            FormulaId::ExRook => "M_N(K_m x K_n) = mn[6a^2b^2 + b^4 + a^4 + 4ab(a^2 + b^2)], a = m-1, b = n-1",
            FormulaId::ExHypercube => "M_N(Q_m) = 2^m m^4",
            FormulaId::ExTensorPP => "M_N(P_n (x) P_m) = (16n - 38)(16m - 38), m,n >= 4",
            FormulaId::ExTensorCC => "M_N(C_n (x) C_m) = 256mn",
            FormulaId::ExTensorKK => "M_N(K_n (x) K_m) = mn(m-1)^4(n-1)^4",
            FormulaId::ExTensorPC => "M_N(P_n (x) C_m) = 16m(16n - 38), n >= 4",
            FormulaId::ExTensorPK => "M_N(P_n (x) K_m) = m(m-1)^4(16n - 38), n >= 4",
            FormulaId::ExTensorCK => "M_N(C_n (x) K_m) = 16mn(m-1)^4",
            FormulaId::ExFence => "M_N(P_n[P_2]) = 864n - 1694, n >= 4",
            FormulaId::ExClosedFence => "M_N(C_n[P_2]) = 816n + 2, n >= 3",
        }
    }

    pub fn shape(self) -> ParamShape {
        use FormulaId::*;
        match self {
            Prop1 | Prop3 | Prop4Printed => ParamShape::RandomPair,
            Prop2 => ParamShape::RandomList,
            Hamming => ParamShape::Sizes,
            ExLadder | ExPrism | ExHypercube | ExFence | ExClosedFence => ParamShape::Single,
            _ => ParamShape::Pair,
        }
    }

    /// Smallest `(m, n)` (or single parameter, in `n`) the printed
    /// statement covers, either explicitly or because the factor graphs
    /// only exist from there on.
    pub fn stated_minimum(self) -> (usize, usize) {
        use FormulaId::*;
        match self {
            ExLadder | ExHypercube => (0, 1),
            ExPrism | ExClosedFence => (0, 3),
            ExFence => (0, 4),
            ExNanotorus | ExTensorCC => (3, 3),
            ExNanotube | ExTensorPC => (3, 4),
            ExGrid | ExTensorPP => (4, 4),
            ExRook | ExTensorKK => (1, 1),
            ExTensorPK => (1, 4),
            ExTensorCK => (1, 3),
            Prop1 | Prop2 | Prop3 | Prop4Printed | Hamming => (0, 0),
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FormulaId {
    type Err = FormulaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FormulaId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| FormulaError::UnknownFormula(s.to_string()))
    }
}

/// Parameters of one family example.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Params {
    Single(usize),
    Pair { m: usize, n: usize },
    Sizes(Vec<usize>),
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Params::Single(n) => write!(f, "n={n}"),
            Params::Pair { m, n } => write!(f, "m={m} n={n}"),
            Params::Sizes(s) => {
                let list: Vec<String> = s.iter().map(usize::to_string).collect();
                write!(f, "sizes={}", list.join(":"))
            }
        }
    }
}

/// A printed example evaluated at one point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub value: BigInt,
    /// The point lies outside the range the printed statement gives.
    pub out_of_stated_range: bool,
}

/// Evaluates a family example's printed polynomial.
pub fn example_formula(id: FormulaId, params: &Params) -> Result<Evaluation, FormulaError> {
    use FormulaId::*;
    let big = |x: usize| BigInt::from(x);
    let (min_m, min_n) = id.stated_minimum();
    let (value, in_range) = match (id, params) {
        (Prop1 | Prop2 | Prop3 | Prop4Printed, _) => return Err(FormulaError::NotAnExample(id)),
        (Hamming, Params::Sizes(sizes)) => (
            mn_hamming(sizes),
            !sizes.is_empty() && sizes.iter().all(|&s| s >= 2),
        ),
        (Hamming, _) => {
            return Err(FormulaError::WrongParams {
                id,
                expected: "a size list",
            })
        }
        (ExLadder | ExPrism | ExHypercube | ExFence | ExClosedFence, &Params::Single(n)) => {
            let x = big(n);
            let v = match id {
                ExLadder => 162 * x - 132,
                ExPrism => 162 * x,
                ExHypercube => BigInt::from(2).pow(n as u32) * x.pow(4),
                ExFence => 864 * x - 1694,
                _ => 816 * x + 2,
            };
            (v, n >= min_n)
        }
        (ExLadder | ExPrism | ExHypercube | ExFence | ExClosedFence, _) => {
            return Err(FormulaError::WrongParams {
                id,
                expected: "one parameter n",
            })
        }
        (_, &Params::Pair { m, n }) => {
            let (bm, bn) = (big(m), big(n));
            let (a, b): (BigInt, BigInt) = (&bm - 1, &bn - 1);
            let path_mn = |k: &BigInt| 16 * k - 38;
            let v = match id {
                ExNanotorus | ExTensorCC => 256 * &bm * &bn,
                ExNanotube => 256 * &bm * &bn - 374 * &bm,
                ExGrid => 256 * &bm * &bn - 310 * &bm - 310 * &bn + 216,
                ExRook => {
                    &bm * &bn
                        * (6 * a.pow(2) * b.pow(2)
                            + b.pow(4)
                            + a.pow(4)
                            + 4 * &a * &b * (a.pow(2) + b.pow(2)))
                }
                ExTensorPP => path_mn(&bn) * path_mn(&bm),
                ExTensorKK => &bm * &bn * a.pow(4) * b.pow(4),
                ExTensorPC => 16 * &bm * path_mn(&bn),
                ExTensorPK => &bm * a.pow(4) * path_mn(&bn),
                ExTensorCK => 16 * &bm * &bn * a.pow(4),
                _ => unreachable!("pair-shaped ids are covered"),
            };
            (v, m >= min_m && n >= min_n)
        }
        (_, _) => {
            return Err(FormulaError::WrongParams {
                id,
                expected: "parameters m and n",
            })
        }
    };
    Ok(Evaluation {
        value,
        out_of_stated_range: !in_range,
    })
}
