//! Named graph families. Composite families are built with the product
//! constructors, never from closed forms.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;
use crate::products::{cartesian_n, product, ProductError, ProductKind};

pub fn path(n: usize) -> Graph {
    assert!(n >= 1, "P_n needs n >= 1");
    Graph::from_valid_edges(n, (1..n).map(|i| (i - 1, i)).collect())
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "C_n needs n >= 3");
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    Graph::from_valid_edges(n, edges)
}

pub fn complete(n: usize) -> Graph {
    assert!(n >= 1, "K_n needs n >= 1");
    Graph::from_valid_edges(
        n,
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect(),
    )
}

/// `K_{1,leaves}` with the centre at vertex 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_valid_edges(leaves + 1, (1..=leaves).map(|v| (0, v)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    Unknown(String),
    #[error("family {family} needs parameter {param}")]
    MissingParam { family: Family, param: &'static str },
    #[error("family {family}: {param} = {value} is below the minimum {min}")]
    ParamTooSmall {
        family: Family,
        param: &'static str,
        value: usize,
        min: usize,
    },
    #[error(transparent)]
    Product(#[from] ProductError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    /// `P_2 x P_{n+1}`
    Ladder,
    /// `P_n x P_m`
    Grid,
    /// `P_n x C_m`
    Nanotube,
    /// `C_m x C_n`
    Nanotorus,
    /// `K_2 x C_n`
    Prism,
    /// `K_m x K_n`
    Rook,
    /// Cartesian product of `K_{n_i}` over `sizes`
    Hamming,
    /// `Q_n`
    Hypercube,
    /// `P_n[P_2]`
    Fence,
    /// `C_n[P_2]`
    ClosedFence,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Ladder,
        Family::Grid,
        Family::Nanotube,
        Family::Nanotorus,
        Family::Prism,
        Family::Rook,
        Family::Hamming,
        Family::Hypercube,
        Family::Fence,
        Family::ClosedFence,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Ladder => "ladder",
            Family::Grid => "grid",
            Family::Nanotube => "nanotube",
            Family::Nanotorus => "nanotorus",
            Family::Prism => "prism",
            Family::Rook => "rook",
            Family::Hamming => "hamming",
            Family::Hypercube => "hypercube",
            Family::Fence => "fence",
            Family::ClosedFence => "closed-fence",
        }
    }

    pub fn needs_m(self) -> bool {
        matches!(
            self,
            Family::Grid | Family::Nanotube | Family::Nanotorus | Family::Rook
        )
    }

    /// Builds the family member. `m` is only read by two-parameter
    /// families, `sizes` only by [`Family::Hamming`].
    pub fn build(
        self,
        n: Option<usize>,
        m: Option<usize>,
        sizes: &[usize],
    ) -> Result<Graph, FamilyError> {
        let need = |value: Option<usize>, param: &'static str, min: usize| match value {
            None => Err(FamilyError::MissingParam {
                family: self,
                param,
            }),
            Some(v) if v < min => Err(FamilyError::ParamTooSmall {
                family: self,
                param,
                value: v,
                min,
            }),
            Some(v) => Ok(v),
        };
        use ProductKind::*;
        let g = match self {
            Family::Path => path(need(n, "n", 1)?),
            Family::Cycle => cycle(need(n, "n", 3)?),
            Family::Complete => complete(need(n, "n", 1)?),
            Family::Ladder => product(&path(2), &path(need(n, "n", 1)? + 1), Cartesian)?,
            Family::Grid => product(&path(need(n, "n", 1)?), &path(need(m, "m", 1)?), Cartesian)?,
            Family::Nanotube => {
                product(&path(need(n, "n", 1)?), &cycle(need(m, "m", 3)?), Cartesian)?
            }
            Family::Nanotorus => product(
                &cycle(need(m, "m", 3)?),
                &cycle(need(n, "n", 3)?),
                Cartesian,
            )?,
            Family::Prism => product(&path(2), &cycle(need(n, "n", 3)?), Cartesian)?,
            Family::Rook => product(
                &complete(need(m, "m", 1)?),
                &complete(need(n, "n", 1)?),
                Cartesian,
            )?,
            Family::Hamming => {
                if sizes.is_empty() {
                    return Err(FamilyError::MissingParam {
                        family: self,
                        param: "sizes",
                    });
                }
                if let Some(&s) = sizes.iter().find(|&&s| s < 2) {
                    return Err(FamilyError::ParamTooSmall {
                        family: self,
                        param: "sizes",
                        value: s,
                        min: 2,
                    });
                }
                hamming(sizes)?
            }
            Family::Hypercube => hypercube(need(n, "n", 1)?)?,
            Family::Fence => product(&path(need(n, "n", 1)?), &path(2), Wreath)?,
            Family::ClosedFence => product(&cycle(need(n, "n", 3)?), &path(2), Wreath)?,
        };
        Ok(g)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == key)
            .ok_or_else(|| FamilyError::Unknown(s.to_string()))
    }
}

pub fn hamming(sizes: &[usize]) -> Result<Graph, ProductError> {
    let factors: Vec<_> = sizes.iter().map(|&n| complete(n)).collect();
    cartesian_n(&factors)
}

pub fn hypercube(dim: usize) -> Result<Graph, ProductError> {
    hamming(&vec![2; dim])
}
