//! Correlation, least-squares fits and mean isomer degeneracy.

use std::fmt::Write as _;

use num_rational::Ratio;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::alkane::{octane_isomers_all, octane_table1, parse_alkane, MISSING_ISOMER};
use crate::graph::Graph;
use crate::indices::{compute, neighbourhood_zagreb, IndexError, IndexId, IndexValue};

/// Relative tolerance used when grouping real-valued index values.
pub const REAL_GROUPING_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QsprError {
    #[error("need at least 3 paired samples (got {0})")]
    TooFewSamples(usize),
    #[error("sample lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("{0} has zero variance")]
    ZeroVariance(&'static str),
    #[error(transparent)]
    Index(#[from] IndexError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegressionResult {
    pub n: usize,
    pub r: f64,
    pub r_squared: f64,
    pub slope: f64,
    pub intercept: f64,
}

struct Moments {
    n: usize,
    mean_x: f64,
    mean_y: f64,
    sxx: f64,
    syy: f64,
    sxy: f64,
}

fn moments(xs: &[f64], ys: &[f64]) -> Result<Moments, QsprError> {
    if xs.len() != ys.len() {
        return Err(QsprError::LengthMismatch(xs.len(), ys.len()));
    }
    let n = xs.len();
    if n < 3 {
        return Err(QsprError::TooFewSamples(n));
    }
    let mean_x = xs.iter().sum::<f64>() / n as f64;
    let mean_y = ys.iter().sum::<f64>() / n as f64;
    let (mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        let (dx, dy) = (x - mean_x, y - mean_y);
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if sxx == 0.0 {
        return Err(QsprError::ZeroVariance("x"));
    }
    if syy == 0.0 {
        return Err(QsprError::ZeroVariance("y"));
    }
    Ok(Moments {
        n,
        mean_x,
        mean_y,
        sxx,
        syy,
        sxy,
    })
}

/// Pearson product-moment correlation.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<f64, QsprError> {
    let m = moments(xs, ys)?;
    Ok((m.sxy / (m.sxx * m.syy).sqrt()).clamp(-1.0, 1.0))
}

/// Least-squares line `y = slope * x + intercept`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> Result<RegressionResult, QsprError> {
    let m = moments(xs, ys)?;
    let r = (m.sxy / (m.sxx * m.syy).sqrt()).clamp(-1.0, 1.0);
    let slope = m.sxy / m.sxx;
    Ok(RegressionResult {
        n: m.n,
        r,
        r_squared: r * r,
        slope,
        intercept: m.mean_y - slope * m.mean_x,
    })
}

pub fn residual_sum_of_squares(xs: &[f64], ys: &[f64], slope: f64, intercept: f64) -> f64 {
    xs.iter()
        .zip(ys)
        .map(|(x, y)| (y - (slope * x + intercept)).powi(2))
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    Acentric,
    Entropy,
}

impl Property {
    pub fn as_str(self) -> &'static str {
        match self {
            Property::Acentric => "acentric",
            Property::Entropy => "entropy",
        }
    }
}

impl std::str::FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "acentric" => Ok(Property::Acentric),
            "entropy" => Ok(Property::Entropy),
            _ => Err(format!(
                "unknown property {s:?}; expected acentric or entropy"
            )),
        }
    }
}

/// `(M_N, property)` pairs over the property table.
pub fn octane_points(property: Property) -> Vec<(f64, f64)> {
    octane_table1()
        .into_iter()
        .map(|r| {
            let x = neighbourhood_zagreb(&r.structure).to_f64().expect("finite");
            let y = match property {
                Property::Acentric => r.acentric_factor,
                Property::Entropy => r.entropy,
            };
            (x, y)
        })
        .collect()
}

/// Property regressed on the Neighbourhood Zagreb index.
pub fn octane_regression(property: Property) -> RegressionResult {
    let (xs, ys): (Vec<f64>, Vec<f64>) = octane_points(property).into_iter().unzip();
    linear_fit(&xs, &ys).expect("octane table has 17 varied rows")
}

/// Property values for the isomer absent from the property table, taken
/// from the public octane dataset the table was drawn from. They are not
/// part of the table rows and are used only by the supplemented sample.
pub const SUPPLEMENT_ACENTRIC: f64 = 0.30537;
pub const SUPPLEMENT_ENTROPY: f64 = 104.09;

/// The table points plus the missing isomer with its external values.
pub fn supplemented_points(property: Property) -> Vec<(f64, f64)> {
    let mut points = octane_points(property);
    let g = parse_alkane(MISSING_ISOMER).expect("grammatical");
    let x = neighbourhood_zagreb(&g).to_f64().expect("finite");
    let y = match property {
        Property::Acentric => SUPPLEMENT_ACENTRIC,
        Property::Entropy => SUPPLEMENT_ENTROPY,
    };
    points.push((x, y));
    points
}

/// Regression over all 18 isomers using [`supplemented_points`].
pub fn supplemented_regression(property: Property) -> RegressionResult {
    let (xs, ys): (Vec<f64>, Vec<f64>) = supplemented_points(property).into_iter().unzip();
    linear_fit(&xs, &ys).expect("18 varied rows")
}

pub fn points_csv(property: Property) -> String {
    let mut out = format!("MN,{}\n", property.as_str());
    for (x, y) in octane_points(property) {
        let _ = writeln!(out, "{x},{y}");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyReport {
    pub index: IndexId,
    pub n: usize,
    pub distinct: usize,
    pub d: Ratio<usize>,
}

impl DegeneracyReport {
    /// `d` to three decimals, halves rounded away from zero.
    pub fn render(&self) -> String {
        let (num, den) = (*self.d.numer(), *self.d.denom());
        let thousandths = (2000 * num + den) / (2 * den);
        format!("{}.{:03}", thousandths / 1000, thousandths % 1000)
    }
}

fn distinct_count(values: &[IndexValue]) -> usize {
    let mut reals: Vec<f64> = Vec::new();
    let mut exact: Vec<&IndexValue> = Vec::new();
    for v in values {
        match v {
            IndexValue::Real(x) => reals.push(*x),
            other => {
                if !exact.contains(&other) {
                    exact.push(other);
                }
            }
        }
    }
    reals.sort_by(f64::total_cmp);
    let mut groups = 0;
    let mut anchor: Option<f64> = None;
    for x in reals {
        match anchor {
            Some(a) if (x - a).abs() <= REAL_GROUPING_TOLERANCE * a.abs().max(x.abs()) => {}
            _ => {
                groups += 1;
                anchor = Some(x);
            }
        }
    }
    exact.len() + groups
}

/// `d = n / t`, with `t` the number of distinct values the index takes.
pub fn mean_isomer_degeneracy(
    index: IndexId,
    graphs: &[Graph],
) -> Result<DegeneracyReport, QsprError> {
    if graphs.is_empty() {
        return Err(QsprError::TooFewSamples(0));
    }
    let values = graphs
        .iter()
        .map(|g| compute(g, index))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(degeneracy_of_values(index, &values))
}

pub fn degeneracy_of_values(index: IndexId, values: &[IndexValue]) -> DegeneracyReport {
    let n = values.len();
    let distinct = distinct_count(values);
    DegeneracyReport {
        index,
        n,
        distinct,
        d: Ratio::new(n, distinct),
    }
}

/// Index order of the degeneracy table.
pub const DEGENERACY_ORDER: [IndexId; 8] = [
    IndexId::M1,
    IndexId::M2,
    IndexId::F,
    IndexId::Z,
    IndexId::Sigma,
    IndexId::Chi,
    IndexId::Harary,
    IndexId::MN,
];

/// Degeneracy of each index over all 18 octane isomers.
pub fn degeneracy_table() -> Vec<DegeneracyReport> {
    let graphs: Vec<Graph> = octane_isomers_all()
        .into_iter()
        .map(|i| i.structure)
        .collect();
    DEGENERACY_ORDER
        .iter()
        .map(|&id| mean_isomer_degeneracy(id, &graphs).expect("octane trees are small"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn perfect_lines() {
        let xs = [1.0, 2.0, 3.0, 4.0, 5.5];
        let up: Vec<f64> = xs.iter().map(|x| 2.0 * x + 1.0).collect();
        let down: Vec<f64> = xs.iter().map(|x| -x).collect();
        assert!((pearson(&xs, &up).unwrap() - 1.0).abs() < 1e-15);
        assert!((pearson(&xs, &down).unwrap() + 1.0).abs() < 1e-15);
        let fit = linear_fit(&xs, &up).unwrap();
        assert!((fit.slope - 2.0).abs() < 1e-12 && (fit.intercept - 1.0).abs() < 1e-12);
        assert!(residual_sum_of_squares(&xs, &up, fit.slope, fit.intercept) < 1e-20);
        assert!((fit.r_squared - 1.0).abs() < 1e-15);
    }

    #[test]
    fn degenerate_input() {
        assert_eq!(
            pearson(&[1.0, 2.0], &[1.0, 2.0]),
            Err(QsprError::TooFewSamples(2))
        );
        assert_eq!(
            pearson(&[1.0, 1.0, 1.0], &[1.0, 2.0, 3.0]),
            Err(QsprError::ZeroVariance("x"))
        );
        assert_eq!(
            pearson(&[1.0, 2.0, 3.0], &[4.0; 3]),
            Err(QsprError::ZeroVariance("y"))
        );
        assert_eq!(
            pearson(&[1.0, 2.0, 3.0], &[1.0]),
            Err(QsprError::LengthMismatch(3, 1))
        );
    }

    #[test]
    fn rendering_rounds_half_away() {
        let report = |n, t| DegeneracyReport {
            index: IndexId::F,
            n,
            distinct: t,
            d: Ratio::new(n, t),
        };
        assert_eq!(report(18, 7).render(), "2.571");
        assert_eq!(report(18, 14).render(), "1.286");
        assert_eq!(report(18, 18).render(), "1.000");
        assert_eq!(report(1, 8).render(), "0.125");
        // 1/16 = 0.0625 -> 0.063
        assert_eq!(report(1, 16).render(), "0.063");
    }

    #[test]
    fn real_values_group_within_tolerance() {
        let vals = [
            IndexValue::Real(1.0),
            IndexValue::Real(1.0 + 1e-12),
            IndexValue::Real(1.1),
            IndexValue::Integer(BigInt::from(3)),
            IndexValue::Integer(BigInt::from(3)),
        ];
        assert_eq!(distinct_count(&vals), 3);
    }

    #[test]
    fn single_graph_degeneracy_is_one() {
        let g = crate::families::path(4);
        for id in IndexId::ALL {
            let r = mean_isomer_degeneracy(id, std::slice::from_ref(&g)).unwrap();
            assert_eq!(r.d, Ratio::from_integer(1));
        }
        assert!(mean_isomer_degeneracy(IndexId::M1, &[]).is_err());
    }

    #[test]
    fn points_csv_has_table_rows() {
        let csv = points_csv(Property::Entropy);
        assert_eq!(csv.lines().count(), 18);
        assert!(csv.starts_with("MN,entropy\n194,93.06\n"));
    }

    #[test]
    fn supplement_adds_one_row() {
        let pts = supplemented_points(Property::Acentric);
        assert_eq!(pts.len(), 18);
        assert_eq!(pts[17], (156.0, SUPPLEMENT_ACENTRIC));
        assert_eq!(supplemented_regression(Property::Entropy).n, 18);
    }
}
