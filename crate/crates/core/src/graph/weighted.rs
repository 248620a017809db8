use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::GraphError;

use super::Graph;

/// Edge-weighted graph with an optional loop weight on every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    weights: BTreeMap<(usize, usize), BigRational>,
    loops: Vec<BigRational>,
}

impl WeightedGraph {
    pub fn new(n: usize) -> Self {
        WeightedGraph {
            n,
            weights: BTreeMap::new(),
            loops: vec![BigRational::zero(); n],
        }
    }

    /// Every edge of `g` gets weight `w`; loops start at zero.
    pub fn uniform(g: &Graph, w: &BigRational) -> Result<Self, GraphError> {
        let mut out = Self::new(g.n());
        for (u, v) in g.edges() {
            out.set_weight(u, v, w.clone())?;
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sets the weight of `{u, v}`. A zero weight removes the edge.
    pub fn set_weight(&mut self, u: usize, v: usize, w: BigRational) -> Result<(), GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::VertexIndex(u.max(v), self.n));
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        let key = (u.min(v), u.max(v));
        if w.is_zero() {
            self.weights.remove(&key);
        } else {
            self.weights.insert(key, w);
        }
        Ok(())
    }

    pub fn set_loop(&mut self, v: usize, h: BigRational) -> Result<(), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexIndex(v, self.n));
        }
        self.loops[v] = h;
        Ok(())
    }

    pub fn weight(&self, u: usize, v: usize) -> BigRational {
        self.weights
            .get(&(u.min(v), u.max(v)))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn loop_weight(&self, v: usize) -> &BigRational {
        &self.loops[v]
    }

    pub fn loops(&self) -> &[BigRational] {
        &self.loops
    }

    /// Adjacency matrix without the loops.
    pub fn adjacency(&self) -> Vec<Vec<BigRational>> {
        let mut m = vec![vec![BigRational::zero(); self.n]; self.n];
        for (&(u, v), w) in &self.weights {
            m[u][v] = w.clone();
            m[v][u] = w.clone();
        }
        m
    }

    /// Adjacency matrix with the loop weights on the diagonal.
    pub fn adjacency_with_loops(&self) -> Vec<Vec<BigRational>> {
        let mut m = self.adjacency();
        for (v, h) in self.loops.iter().enumerate() {
            m[v][v] = h.clone();
        }
        m
    }

    /// Adjacency matrix (no loops) of the subgraph left after deleting the
    /// vertices whose bits are set in `deleted`.
    pub fn adjacency_without(&self, deleted: u64) -> Vec<Vec<BigRational>> {
        let keep: Vec<usize> = (0..self.n).filter(|&v| deleted >> v & 1 == 0).collect();
        keep.iter()
            .map(|&u| keep.iter().map(|&v| self.weight(u, v)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn symmetric_lookup_and_zero_removal() {
        let mut w = WeightedGraph::new(3);
        w.set_weight(2, 0, q(3, 4)).unwrap();
        assert_eq!(w.weight(0, 2), q(3, 4));
        assert_eq!(w.weight(2, 0), q(3, 4));
        w.set_weight(0, 2, q(0, 1)).unwrap();
        assert!(w.weight(0, 2).is_zero());
        assert!(w.adjacency().iter().flatten().all(|x| x.is_zero()));
        assert!(w.set_weight(1, 1, q(1, 1)).is_err());
    }

    #[test]
    fn vertex_deletion() {
        let mut w = WeightedGraph::new(3);
        w.set_weight(0, 1, q(1, 2)).unwrap();
        w.set_weight(1, 2, q(5, 1)).unwrap();
        let sub = w.adjacency_without(0b001);
        assert_eq!(sub, vec![vec![q(0, 1), q(5, 1)], vec![q(5, 1), q(0, 1)]]);
    }
}
