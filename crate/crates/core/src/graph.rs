//! Immutable simple undirected graphs.
//!
//! Vertices are dense `0..order` ids. Every [`Graph`] is kept in canonical
//! form: edges stored as `(u, v)` with `u < v` in lexicographic order and
//! neighbour lists sorted ascending, so structural equality is `==`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("self-loop ({0}, {0}) is not allowed")]
    LoopEdge(Vertex),
    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge ({u}, {v}) references a vertex outside 0..{order}")]
    VertexOutOfRange { u: Vertex, v: Vertex, order: usize },
    #[error("vertex {vertex} is outside 0..{order}")]
    NoSuchVertex { vertex: Vertex, order: usize },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

/// Degree and neighbour-degree sum of one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexStats {
    pub degree: u64,
    pub delta: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    /// Validates `edge_pairs` and builds the canonical graph.
    ///
    /// Pairs may be given in either orientation; `(1, 0)` and `(0, 1)` name
    /// the same edge and together count as a duplicate.
    pub fn new(order: usize, edge_pairs: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        if order == 0 {
            return Err(GraphError::Empty);
        }
        let mut edges = Vec::with_capacity(edge_pairs.len());
        for &(u, v) in edge_pairs {
            if u >= order || v >= order {
                return Err(GraphError::VertexOutOfRange { u, v, order });
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_canonical_edges(order, edges))
    }

    /// Builds a graph from edges already known to be valid: `u < v`, in
    /// range, no duplicates. Order of `edges` does not matter.
    pub(crate) fn from_valid_edges(order: usize, mut edges: Vec<(Vertex, Vertex)>) -> Self {
        debug_assert!(order > 0);
        edges.sort_unstable();
        debug_assert!(edges.windows(2).all(|w| w[0] != w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < order));
        Self::from_canonical_edges(order, edges)
    }

    fn from_canonical_edges(order: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph { adjacency, edges }
    }

    pub fn edgeless(order: usize) -> Result<Self, GraphError> {
        Self::new(order, &[])
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> u64 {
        self.adjacency[v].len() as u64
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.adjacency.iter().map(|a| a.len() as u64).collect()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Sum of the degrees of the neighbours of `v`.
    pub fn neighbor_degree_sum(&self, v: Vertex) -> Result<u64, GraphError> {
        if v >= self.order() {
            return Err(GraphError::NoSuchVertex {
                vertex: v,
                order: self.order(),
            });
        }
        Ok(self.delta_unchecked(v))
    }

    fn delta_unchecked(&self, v: Vertex) -> u64 {
        self.adjacency[v].iter().map(|&u| self.degree(u)).sum()
    }

    /// Neighbour-degree sums of every vertex, indexed by vertex id.
    pub fn neighbor_degree_sums(&self) -> Vec<u64> {
        (0..self.order()).map(|v| self.delta_unchecked(v)).collect()
    }

    pub fn vertex_stats(&self) -> Vec<VertexStats> {
        (0..self.order())
            .map(|v| VertexStats {
                degree: self.degree(v),
                delta: self.delta_unchecked(v),
            })
            .collect()
    }

    /// All-pairs hop distances by BFS from every vertex; `None` marks an
    /// unreachable pair.
    pub fn distance_matrix(&self) -> Vec<Vec<Option<u32>>> {
        let n = self.order();
        let mut out = Vec::with_capacity(n);
        let mut queue = VecDeque::new();
        for source in 0..n {
            let mut dist = vec![None; n];
            dist[source] = Some(0);
            queue.push_back(source);
            while let Some(x) = queue.pop_front() {
                let next = dist[x].map(|d| d + 1);
                for &y in &self.adjacency[x] {
                    if dist[y].is_none() {
                        dist[y] = next;
                        queue.push_back(y);
                    }
                }
            }
            out.push(dist);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.distance_matrix()[0].iter().all(Option::is_some)
    }

    /// Parses the edge-list text format: optional `#` comment lines, a header
    /// line `n m`, then exactly `m` lines `u v`.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut data = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = data.next().ok_or(GraphError::Syntax {
            line: 1,
            message: "missing header line \"n m\"".into(),
        })?;
        let [order, count] = parse_pair(header_line, header)?;

        let mut pairs = Vec::with_capacity(count);
        for _ in 0..count {
            let (line, body) = data.next().ok_or_else(|| GraphError::Syntax {
                line: header_line,
                message: format!("header promises {count} edges, found {}", pairs.len()),
            })?;
            let [u, v] = parse_pair(line, body)?;
            pairs.push((u, v));
        }
        if let Some((line, _)) = data.next() {
            return Err(GraphError::Syntax {
                line,
                message: format!("more than the {count} edges declared in the header"),
            });
        }
        Self::new(order, &pairs)
    }

    /// Writes the edge-list format with edges in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.order(), self.size());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Erdős–Rényi G(n, p) sample.
    ///
    /// The generator is ChaCha8 seeded with `seed` via `seed_from_u64`; pairs
    /// `(u, v)`, `u < v`, are visited in lexicographic order and each is kept
    /// when a uniform draw from `[0, 1)` is below `p`. `p` is clamped to
    /// `[0, 1]`.
    pub fn random(order: usize, edge_probability: f64, seed: u64) -> Result<Self, GraphError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_with(order, edge_probability, &mut rng)
    }

    pub(crate) fn random_with<R: Rng>(
        order: usize,
        edge_probability: f64,
        rng: &mut R,
    ) -> Result<Self, GraphError> {
        if order == 0 {
            return Err(GraphError::Empty);
        }
        let p = edge_probability.clamp(0.0, 1.0);
        let mut edges = Vec::new();
        for u in 0..order {
            for v in u + 1..order {
                if rng.gen::<f64>() < p {
                    edges.push((u, v));
                }
            }
        }
        Ok(Self::from_canonical_edges(order, edges))
    }
}

fn parse_pair(line: usize, body: &str) -> Result<[usize; 2], GraphError> {
    let mut fields = body.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let field = fields.next().ok_or_else(|| GraphError::Syntax {
            line,
            message: format!("expected two integers, got {body:?}"),
        })?;
        field.parse().map_err(|_| GraphError::Syntax {
            line,
            message: format!("{field:?} is not a non-negative integer"),
        })
    };
    let a = next()?;
    let b = next()?;
    if fields.next().is_some() {
        return Err(GraphError::Syntax {
            line,
            message: format!("trailing fields in {body:?}"),
        });
    }
    Ok([a, b])
}
