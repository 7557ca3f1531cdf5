//! Checks every closed form against brute-force computation on the graph it
//! describes.
//!
//! The oracle is always the same: build the product graph with
//! [`crate::products`] and evaluate the index from its definition with
//! [`crate::indices::neighbourhood_zagreb`]. Reports are deterministic for a
//! fixed formula, grid and seed, and sorted by parameter.

use std::fmt::{self, Write as _};
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::closed_forms::{
    example_formula, mn_cartesian, mn_cartesian_nary, mn_tensor, mn_wreath_printed, FormulaId,
    GraphStats, ParamShape, Params,
};
use crate::families::{complete, cycle, path};
use crate::graph::Graph;
use crate::indices::neighbourhood_zagreb;
use crate::products::{cartesian_n_with_cap, product_with_cap, ProductError, ProductKind};

/// Largest factor order in random n-ary Cartesian trials.
pub const NARY_FACTOR_ORDER: usize = 5;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Overrides the default `m` range of two-parameter families.
    pub m: Option<RangeInclusive<usize>>,
    /// Overrides the default `n` range; also the range of single-parameter
    /// families.
    pub n: Option<RangeInclusive<usize>>,
    /// Explicit size lists for the Hamming formula.
    pub sizes: Option<Vec<Vec<usize>>>,
    pub seed: u64,
    pub trials: usize,
    /// Largest factor order in random pair trials.
    pub max_factor_order: usize,
    /// Default Hamming grid: every non-decreasing size list with product at
    /// most this.
    pub hamming_max_product: usize,
    pub vertex_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            m: None,
            n: None,
            sizes: None,
            seed: 42,
            trials: 200,
            max_factor_order: 8,
            hamming_max_product: 256,
            vertex_cap: crate::products::DEFAULT_VERTEX_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Consistent,
    Erratum,
    /// Every point was skipped or out of the stated range.
    NoData,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Consistent => "CONSISTENT",
            Status::Erratum => "ERRATUM",
            Status::NoData => "NO_DATA",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum PointKey {
    Trial(usize),
    Params(Params),
}

impl fmt::Display for PointKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointKey::Trial(t) => write!(f, "trial={t}"),
            PointKey::Params(p) => p.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyPoint {
    pub key: PointKey,
    /// Factor shapes as `order/size`, for random trials.
    pub factors: Vec<(usize, usize)>,
    pub closed: BigInt,
    /// `None` when the product graph was over the size cap.
    pub oracle: Option<BigInt>,
    /// The general proposition evaluated on the same factors, for family
    /// examples.
    pub proposition: Option<BigInt>,
    pub out_of_stated_range: bool,
}

impl DiscrepancyPoint {
    /// `closed - oracle`, exactly.
    pub fn delta(&self) -> Option<BigInt> {
        self.oracle.as_ref().map(|o| &self.closed - o)
    }

    fn counts(&self) -> bool {
        self.oracle.is_some() && !self.out_of_stated_range
    }

    pub fn params_label(&self) -> String {
        let mut label = self.key.to_string();
        for (i, (order, size)) in self.factors.iter().enumerate() {
            let _ = write!(label, " g{}={order}/{size}", i + 1);
        }
        label
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyReport {
    pub formula: FormulaId,
    pub points: Vec<DiscrepancyPoint>,
    pub status: Status,
}

pub const CSV_HEADER: &str = "formula,params,closed,oracle,delta,proposition,note";

impl DiscrepancyReport {
    fn new(formula: FormulaId, mut points: Vec<DiscrepancyPoint>) -> Self {
        points.sort_by(|a, b| a.key.cmp(&b.key));
        let counted: Vec<_> = points.iter().filter(|p| p.counts()).collect();
        let status = if counted.is_empty() {
            Status::NoData
        } else if counted
            .iter()
            .any(|p| !p.delta().unwrap_or_default().is_zero())
        {
            Status::Erratum
        } else {
            Status::Consistent
        };
        DiscrepancyReport {
            formula,
            points,
            status,
        }
    }

    pub fn compared(&self) -> usize {
        self.points.iter().filter(|p| p.counts()).count()
    }

    pub fn nonzero_deltas(&self) -> usize {
        self.points
            .iter()
            .filter(|p| p.counts() && !p.delta().unwrap_or_default().is_zero())
            .count()
    }

    pub fn skipped(&self) -> usize {
        self.points.iter().filter(|p| p.oracle.is_none()).count()
    }

    /// CSV rows without the header, one line per point.
    pub fn csv_rows(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            let opt = |v: &Option<BigInt>| v.as_ref().map(ToString::to_string).unwrap_or_default();
            let note = match (&p.oracle, p.out_of_stated_range) {
                (None, _) => "skipped:size-cap",
                (Some(_), true) => "out-of-stated-range",
                _ => "",
            };
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                self.formula,
                p.params_label(),
                p.closed,
                opt(&p.oracle),
                opt(&p.delta()),
                opt(&p.proposition),
                note
            );
        }
        out
    }

    pub fn to_csv(&self) -> String {
        format!("{CSV_HEADER}\n{}", self.csv_rows())
    }

    /// Human-readable summary: status line plus the first disagreeing point.
    pub fn summary(&self) -> String {
        let mut out = format!(
            "{}: {} ({} points compared, {} nonzero deltas",
            self.formula,
            self.status,
            self.compared(),
            self.nonzero_deltas()
        );
        if self.skipped() > 0 {
            let _ = write!(out, ", {} skipped", self.skipped());
        }
        out.push(')');
        let _ = write!(out, "\n  printed: {}", self.formula.printed());
        if let Some(p) = self
            .points
            .iter()
            .find(|p| p.counts() && !p.delta().unwrap_or_default().is_zero())
        {
            let oracle = p
                .oracle
                .as_ref()
                .expect("counted points have an oracle value");
            let _ = write!(
                out,
                "\n  e.g. {}: closed {} vs oracle {}",
                p.params_label(),
                p.closed,
                oracle
            );
            if let Some(prop) = &p.proposition {
                let _ = write!(out, " (general proposition gives {prop})");
            }
            let max = self
                .points
                .iter()
                .filter(|p| p.counts())
                .filter_map(|p| p.delta())
                .map(|d| d.abs())
                .max()
                .unwrap_or_default();
            let _ = write!(out, "\n  max |delta| = {max}");
        }
        out
    }
}

/// The default parameter range for one side of a family grid.
fn default_range(minimum: usize) -> RangeInclusive<usize> {
    minimum.max(3)..=10
}

/// Every non-decreasing list of integers `>= 2` whose product is at most
/// `max_product`.
pub fn hamming_size_lists(max_product: usize) -> Vec<Vec<usize>> {
    fn go(min: usize, remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for next in min..=remaining {
            current.push(next);
            out.push(current.clone());
            go(next, remaining / next, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(2, max_product, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The factor graphs and product kind an example formula describes.
fn example_factors(id: FormulaId, params: &Params) -> Option<(Vec<Graph>, ProductKind)> {
    use FormulaId::*;
    use ProductKind::*;
    let pair = |a: Graph, b: Graph, kind| Some((vec![a, b], kind));
    match (id, params) {
        (ExLadder, &Params::Single(n)) => pair(path(2), path(n + 1), Cartesian),
        (ExPrism, &Params::Single(n)) => pair(path(2), cycle(n), Cartesian),
        (ExHypercube, &Params::Single(m)) => Some((vec![path(2); m], Cartesian)),
        (ExFence, &Params::Single(n)) => pair(path(n), path(2), Wreath),
        (ExClosedFence, &Params::Single(n)) => pair(cycle(n), path(2), Wreath),
        (ExNanotorus, &Params::Pair { m, n }) => pair(cycle(m), cycle(n), Cartesian),
        (ExNanotube, &Params::Pair { m, n }) => pair(path(n), cycle(m), Cartesian),
        (ExGrid, &Params::Pair { m, n }) => pair(path(n), path(m), Cartesian),
        (ExRook, &Params::Pair { m, n }) => pair(complete(m), complete(n), Cartesian),
        (ExTensorPP, &Params::Pair { m, n }) => pair(path(n), path(m), Tensor),
        (ExTensorCC, &Params::Pair { m, n }) => pair(cycle(n), cycle(m), Tensor),
        (ExTensorKK, &Params::Pair { m, n }) => pair(complete(n), complete(m), Tensor),
        (ExTensorPC, &Params::Pair { m, n }) => pair(path(n), cycle(m), Tensor),
        (ExTensorPK, &Params::Pair { m, n }) => pair(path(n), complete(m), Tensor),
        (ExTensorCK, &Params::Pair { m, n }) => pair(cycle(n), complete(m), Tensor),
        (Hamming, Params::Sizes(sizes)) => {
            Some((sizes.iter().map(|&s| complete(s)).collect(), Cartesian))
        }
        _ => None,
    }
}

/// Factor families need graphs that exist: cycles from 3, everything else
/// from 1 (hypercube dimension from 1).
fn factors_exist(id: FormulaId, params: &Params) -> bool {
    use FormulaId::*;
    match (id, params) {
        (ExPrism | ExClosedFence, &Params::Single(n)) => n >= 3,
        (ExLadder | ExFence | ExHypercube, &Params::Single(n)) => n >= 1,
        (ExNanotorus, &Params::Pair { m, n }) => m >= 3 && n >= 3,
        (ExNanotube | ExTensorPC, &Params::Pair { m, n }) => m >= 3 && n >= 1,
        (ExTensorCC, &Params::Pair { m, n }) => m >= 3 && n >= 3,
        (ExTensorCK, &Params::Pair { m, n }) => n >= 3 && m >= 1,
        (_, &Params::Pair { m, n }) => m >= 1 && n >= 1,
        (Hamming, Params::Sizes(s)) => !s.is_empty() && s.iter().all(|&x| x >= 1),
        _ => false,
    }
}

fn build(factors: &[Graph], kind: ProductKind, cap: usize) -> Result<Graph, ProductError> {
    match (kind, factors) {
        (ProductKind::Cartesian, _) => cartesian_n_with_cap(factors, cap),
        (_, [a, b]) => product_with_cap(a, b, kind, cap),
        _ => unreachable!("tensor and wreath examples have two factors"),
    }
}

fn general_proposition(kind: ProductKind, factors: &[Graph]) -> BigInt {
    let stats: Vec<GraphStats> = factors.iter().map(GraphStats::of).collect();
    match (kind, stats.as_slice()) {
        (ProductKind::Cartesian, [a, b]) => mn_cartesian(a, b),
        (ProductKind::Cartesian, _) => mn_cartesian_nary(&stats).expect("non-empty"),
        (ProductKind::Tensor, [a, b]) => mn_tensor(&a.mn, &b.mn),
        (ProductKind::Wreath, [a, b]) => mn_wreath_printed(a, b),
        _ => unreachable!(),
    }
}

fn example_point(id: FormulaId, params: Params, cap: usize) -> Option<DiscrepancyPoint> {
    if !factors_exist(id, &params) {
        return None;
    }
    let eval = example_formula(id, &params).ok()?;
    let (factors, kind) = example_factors(id, &params)?;
    let oracle = build(&factors, kind, cap)
        .ok()
        .map(|g| neighbourhood_zagreb(&g));
    Some(DiscrepancyPoint {
        key: PointKey::Params(params),
        factors: Vec::new(),
        closed: eval.value,
        oracle,
        proposition: Some(general_proposition(kind, &factors)),
        out_of_stated_range: eval.out_of_stated_range,
    })
}

fn random_factor(rng: &mut ChaCha8Rng, max_order: usize) -> Graph {
    let order = rng.gen_range(1..=max_order.max(1));
    let p: f64 = rng.gen();
    Graph::random_with(order, p, rng).expect("order >= 1")
}

fn random_pair_points(id: FormulaId, opts: &VerifyOptions) -> Vec<DiscrepancyPoint> {
    let kind = match id {
        FormulaId::Prop1 => ProductKind::Cartesian,
        FormulaId::Prop3 => ProductKind::Tensor,
        _ => ProductKind::Wreath,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    (0..opts.trials)
        .map(|trial| {
            let a = random_factor(&mut rng, opts.max_factor_order);
            let b = random_factor(&mut rng, opts.max_factor_order);
            let oracle = product_with_cap(&a, &b, kind, opts.vertex_cap)
                .ok()
                .map(|g| neighbourhood_zagreb(&g));
            DiscrepancyPoint {
                key: PointKey::Trial(trial),
                factors: vec![(a.order(), a.size()), (b.order(), b.size())],
                closed: general_proposition(kind, &[a, b]),
                oracle,
                proposition: None,
                out_of_stated_range: false,
            }
        })
        .collect()
}

fn random_list_points(opts: &VerifyOptions) -> Vec<DiscrepancyPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    (0..opts.trials)
        .map(|trial| {
            let len = rng.gen_range(2..=4);
            let factors: Vec<Graph> = (0..len)
                .map(|_| random_factor(&mut rng, opts.max_factor_order.min(NARY_FACTOR_ORDER)))
                .collect();
            let stats: Vec<_> = factors.iter().map(GraphStats::of).collect();
            let oracle = cartesian_n_with_cap(&factors, opts.vertex_cap)
                .ok()
                .map(|g| neighbourhood_zagreb(&g));
            DiscrepancyPoint {
                key: PointKey::Trial(trial),
                factors: factors.iter().map(|g| (g.order(), g.size())).collect(),
                closed: mn_cartesian_nary(&stats).expect("at least two factors"),
                oracle,
                proposition: None,
                out_of_stated_range: false,
            }
        })
        .collect()
}

/// Verifies one formula over its grid (family examples) or over seeded random
/// factors (propositions).
pub fn verify(id: FormulaId, opts: &VerifyOptions) -> DiscrepancyReport {
    let (min_m, min_n) = id.stated_minimum();
    let points = match id.shape() {
        ParamShape::RandomPair => random_pair_points(id, opts),
        ParamShape::RandomList => random_list_points(opts),
        ParamShape::Single => {
            let default = if id == FormulaId::ExHypercube {
                1..=10
            } else {
                default_range(min_n)
            };
            let range = opts.n.clone().or_else(|| opts.m.clone()).unwrap_or(default);
            range
                .filter_map(|n| example_point(id, Params::Single(n), opts.vertex_cap))
                .collect()
        }
        ParamShape::Pair => {
            let ms = opts.m.clone().unwrap_or_else(|| default_range(min_m));
            let ns = opts.n.clone().unwrap_or_else(|| default_range(min_n));
            let mut points = Vec::new();
            for m in ms {
                for n in ns.clone() {
                    points.extend(example_point(id, Params::Pair { m, n }, opts.vertex_cap));
                }
            }
            points
        }
        ParamShape::Sizes => {
            let lists = opts
                .sizes
                .clone()
                .unwrap_or_else(|| hamming_size_lists(opts.hamming_max_product));
            lists
                .into_iter()
                .filter_map(|s| example_point(id, Params::Sizes(s), opts.vertex_cap))
                .collect()
        }
    };
    DiscrepancyReport::new(id, points)
}

/// Runs [`verify`] on every formula, in [`FormulaId::ALL`] order.
pub fn verify_all(opts: &VerifyOptions) -> Vec<DiscrepancyReport> {
    FormulaId::ALL.iter().map(|&id| verify(id, opts)).collect()
}

pub fn reports_to_csv(reports: &[DiscrepancyReport]) -> String {
    let mut out = format!("{CSV_HEADER}\n");
    for r in reports {
        out.push_str(&r.csv_rows());
    }
    out
}

/// Checks one Hamming size list without building the graph: printed
/// expansion against the compact regular-graph value.
pub fn hamming_expansion_matches(sizes: &[usize]) -> bool {
    crate::closed_forms::mn_hamming(sizes) == crate::closed_forms::mn_hamming_compact(sizes)
}
