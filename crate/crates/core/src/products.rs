//! Cartesian, tensor and wreath (composition) products.
//!
//! Product vertex `(u, v)` with `u` in the left factor and `v` in the right
//! factor is encoded as the integer `u * |V2| + v`. This encoding is part of
//! the public contract; see [`encode`].

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub const DEFAULT_VERTEX_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("product would have {requested} vertices, above the cap of {cap}")]
    SizeOverflow { requested: u128, cap: usize },
    #[error("n-ary product needs at least one factor")]
    NoFactors,
    #[error("unknown product kind {0:?}; expected cartesian, tensor or wreath")]
    UnknownKind(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Cartesian,
    Tensor,
    /// `G1[G2]`; argument order matters.
    Wreath,
}

impl ProductKind {
    pub const ALL: [ProductKind; 3] = [
        ProductKind::Cartesian,
        ProductKind::Tensor,
        ProductKind::Wreath,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Tensor => "tensor",
            ProductKind::Wreath => "wreath",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ProductKind {
    type Err = ProductError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "cartesian" => Ok(ProductKind::Cartesian),
            "tensor" => Ok(ProductKind::Tensor),
            "wreath" | "composition" | "lexicographic" => Ok(ProductKind::Wreath),
            _ => Err(ProductError::UnknownKind(s.to_string())),
        }
    }
}

/// Encodes product vertex `(u, v)` given the right factor's order.
#[inline]
pub fn encode(u: Vertex, v: Vertex, right_order: usize) -> Vertex {
    u * right_order + v
}

pub fn product(left: &Graph, right: &Graph, kind: ProductKind) -> Result<Graph, ProductError> {
    product_with_cap(left, right, kind, DEFAULT_VERTEX_CAP)
}

pub fn product_with_cap(
    left: &Graph,
    right: &Graph,
    kind: ProductKind,
    cap: usize,
) -> Result<Graph, ProductError> {
    let requested = left.order() as u128 * right.order() as u128;
    if requested > cap as u128 {
        return Err(ProductError::SizeOverflow { requested, cap });
    }
    let n1 = left.order();
    let n2 = right.order();
    let at = |u, v| encode(u, v, n2);
    let mut edges = Vec::new();

    // (u, v1) ~ (u, v2) for v1v2 in E2: shared by Cartesian and wreath.
    let fibre_edges = |edges: &mut Vec<(Vertex, Vertex)>| {
        for u in 0..n1 {
            for &(v1, v2) in right.edges() {
                edges.push((at(u, v1), at(u, v2)));
            }
        }
    };

    match kind {
        ProductKind::Cartesian => {
            edges.reserve(n1 * right.size() + n2 * left.size());
            fibre_edges(&mut edges);
            for &(u1, u2) in left.edges() {
                for v in 0..n2 {
                    edges.push((at(u1, v), at(u2, v)));
                }
            }
        }
        ProductKind::Tensor => {
            edges.reserve(2 * left.size() * right.size());
            for &(u1, u2) in left.edges() {
                for &(v1, v2) in right.edges() {
                    // u1 < u2, so both images are already oriented
                    edges.push((at(u1, v1), at(u2, v2)));
                    edges.push((at(u1, v2), at(u2, v1)));
                }
            }
        }
        ProductKind::Wreath => {
            edges.reserve(n2 * n2 * left.size() + n1 * right.size());
            fibre_edges(&mut edges);
            for &(u1, u2) in left.edges() {
                for v1 in 0..n2 {
                    for v2 in 0..n2 {
                        edges.push((at(u1, v1), at(u2, v2)));
                    }
                }
            }
        }
    }
    Ok(Graph::from_valid_edges(n1 * n2, edges))
}

/// Left fold of the binary Cartesian product over `graphs`.
pub fn cartesian_n(graphs: &[Graph]) -> Result<Graph, ProductError> {
    cartesian_n_with_cap(graphs, DEFAULT_VERTEX_CAP)
}

pub fn cartesian_n_with_cap(graphs: &[Graph], cap: usize) -> Result<Graph, ProductError> {
    let (first, rest) = graphs.split_first().ok_or(ProductError::NoFactors)?;
    let requested = graphs
        .iter()
        .try_fold(1u128, |acc, g| acc.checked_mul(g.order() as u128));
    match requested {
        Some(r) if r <= cap as u128 => {}
        r => {
            return Err(ProductError::SizeOverflow {
                requested: r.unwrap_or(u128::MAX),
                cap,
            })
        }
    }
    rest.iter().try_fold(first.clone(), |acc, g| {
        product_with_cap(&acc, g, ProductKind::Cartesian, cap)
    })
}

/// Neighbour-degree sum of product vertex `(u, v)` predicted from factor
/// statistics alone.
pub fn predicted_delta(
    left: &Graph,
    right: &Graph,
    kind: ProductKind,
    u: Vertex,
    v: Vertex,
) -> u64 {
    let (d1, d2) = (left.degree(u), right.degree(v));
    let delta1 = left.neighbor_degree_sum(u).expect("u in range");
    let delta2 = right.neighbor_degree_sum(v).expect("v in range");
    let n2 = right.order() as u64;
    let e2 = right.size() as u64;
    match kind {
        ProductKind::Cartesian => delta1 + delta2 + 2 * d1 * d2,
        ProductKind::Tensor => delta1 * delta2,
        ProductKind::Wreath => n2 * n2 * delta1 + delta2 + 2 * e2 * d1 + n2 * d1 * d2,
    }
}

/// True iff every vertex of the constructed product has the neighbour-degree
/// sum given by [`predicted_delta`].
pub fn delta_law_check(left: &Graph, right: &Graph, kind: ProductKind) -> bool {
    let Ok(g) = product(left, right, kind) else {
        return false;
    };
    let n2 = right.order();
    let actual = g.neighbor_degree_sums();
    (0..left.order()).all(|u| {
        (0..n2).all(|v| actual[encode(u, v, n2)] == predicted_delta(left, right, kind, u, v))
    })
}
