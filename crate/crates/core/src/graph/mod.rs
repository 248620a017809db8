//! Simple undirected graphs on at most 64 vertices.
//!
//! Each adjacency row is a single machine word, so degree and triangle
//! counting reduce to popcounts over row intersections.

mod canon;
mod family;
mod graph6;
mod weighted;

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::GraphError;

pub use canon::canonical_form;
pub use family::{FamilySpec, TreeShape};
pub use graph6::{parse_graph6, Graph6Error};
pub use weighted::WeightedGraph;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({})", String::from_utf8_lossy(&self.to_graph6()))
    }
}

/// Degree and small-subgraph counts of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasicCounts {
    pub n: usize,
    pub m: usize,
    pub degree_sequence: Vec<usize>,
    pub sum_d2: u64,
    pub sum_d3: u64,
    pub triangles: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteComponents {
    pub is_bipartite: bool,
    pub component_count: usize,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and the absence of loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        let valid = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for (i, &row) in rows.iter().enumerate() {
            if row & !valid != 0 {
                return Err(GraphError::VertexIndex(n, n));
            }
            if row >> i & 1 == 1 {
                return Err(GraphError::Loop(i));
            }
            for j in 0..n {
                if (row >> j & 1) != (rows[j] >> i & 1) {
                    return Err(GraphError::Asymmetric(i, j));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::VertexIndex(u.max(v), self.n));
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut above = self.adj[u] & !low_mask(u + 1);
            while above != 0 {
                let v = above.trailing_zeros() as usize;
                out.push((u, v));
                above &= above - 1;
            }
        }
        out
    }

    /// Number of triangles: for each edge `u < v`, count common neighbours above `v`.
    pub fn triangle_count(&self) -> u64 {
        let mut t = 0u64;
        for (u, v) in self.edges() {
            t += (self.adj[u] & self.adj[v] & !low_mask(v + 1)).count_ones() as u64;
        }
        t
    }

    pub fn basic_counts(&self) -> BasicCounts {
        let degree_sequence = self.degrees();
        let sum_d2 = degree_sequence.iter().map(|&d| (d * d) as u64).sum();
        let sum_d3 = degree_sequence.iter().map(|&d| (d * d * d) as u64).sum();
        BasicCounts {
            n: self.n,
            m: self.edge_count(),
            degree_sequence,
            sum_d2,
            sum_d3,
            triangles: self.triangle_count(),
        }
    }

    pub fn is_regular(&self) -> bool {
        let d0 = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d0)
    }

    /// Breadth-first 2-colouring, which also counts connected components.
    pub fn bipartite_components(&self) -> BipartiteComponents {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        let mut is_bipartite = true;
        let mut component_count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if colour[start].is_some() {
                continue;
            }
            component_count += 1;
            colour[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                let mut nbrs = self.adj[u];
                while nbrs != 0 {
                    let v = nbrs.trailing_zeros() as usize;
                    nbrs &= nbrs - 1;
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => is_bipartite = false,
                        Some(_) => {}
                    }
                }
            }
        }
        BipartiteComponents {
            is_bipartite,
            component_count,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.bipartite_components().component_count == 1
    }

    /// Number of spanning trees, as the determinant of the Laplacian with
    /// the last row and column removed (fraction-free Bareiss elimination).
    pub fn spanning_tree_count(&self) -> BigInt {
        let k = self.n - 1;
        if k == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        if i == j {
                            BigInt::from(self.degree(i))
                        } else if self.has_edge(i, j) {
                            BigInt::from(-1)
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        bareiss_determinant(&mut m)
    }

    /// Adjacency matrix as integer rows.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        self.combined_matrix(0, 1)
    }

    /// `d_coef * D + a_coef * A` as integer rows.
    pub fn combined_matrix(&self, d_coef: i64, a_coef: i64) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        if i == j {
                            d_coef * self.degree(i) as i64
                        } else if self.has_edge(i, j) {
                            a_coef
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Disjoint union; vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph { n: self.n, adj }
    }

    pub fn to_graph6(&self) -> Vec<u8> {
        graph6::to_graph6(self)
    }

    pub fn tree_shape(&self) -> TreeShape {
        family::tree_shape(self)
    }
}

#[inline]
pub(crate) fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

fn bareiss_determinant(m: &mut [Vec<BigInt>]) -> BigInt {
    let k = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for p in 0..k {
        if m[p][p].is_zero() {
            match (p + 1..k).find(|&r| !m[r][p].is_zero()) {
                Some(r) => {
                    m.swap(p, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in p + 1..k {
            for j in p + 1..k {
                let v = (&m[i][j] * &m[p][p] - &m[i][p] * &m[p][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[p][p].clone();
    }
    let det = sign * &m[k - 1][k - 1];
    debug_assert!(!det.is_negative());
    det
}
