//! Named graph families and the tree shapes used by the mate-freeness checks.

use std::fmt;
use std::str::FromStr;

use crate::error::FamilyError;

use super::{Graph, MAX_VERTICES};

/// A named family member. The textual form is `P:n`, `C:n`, `K:n`, `K:a,b`,
/// `F:n`, `W:n`, `H:p,n,q` or `S:l1,l2,...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `n` triangles sharing one vertex.
    Friendship(usize),
    /// A cycle on `n` vertices plus a hub.
    Wheel(usize),
    /// `p` pendants on one end of `P_n`, `q` on the other.
    DoubleStarlike { p: usize, n: usize, q: usize },
    /// One centre with paths of the given lengths hanging off it.
    Starlike(Vec<usize>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeShape {
    NotATree,
    /// A tree with no vertex of degree above two.
    Path,
    Starlike,
    DoubleStarlike,
    Other,
}

impl FamilySpec {
    /// Vertex count of the constructed graph.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => *n,
            FamilySpec::CompleteBipartite(a, b) => a + b,
            FamilySpec::Friendship(n) => 2 * n + 1,
            FamilySpec::Wheel(n) => n + 1,
            FamilySpec::DoubleStarlike { p, n, q } => p + n + q,
            FamilySpec::Starlike(legs) => 1 + legs.iter().sum::<usize>(),
        }
    }

    fn check(&self) -> Result<(), FamilyError> {
        let bad = |what: &str| Err(FamilyError::OutOfRange(format!("{self}: {what}")));
        match self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) if *n < 1 => return bad("need n >= 1"),
            FamilySpec::Cycle(n) | FamilySpec::Wheel(n) if *n < 3 => return bad("need n >= 3"),
            FamilySpec::Friendship(n) if *n < 1 => return bad("need n >= 1"),
            FamilySpec::CompleteBipartite(a, b) if *a < 1 || *b < 1 => {
                return bad("need a, b >= 1")
            }
            FamilySpec::DoubleStarlike { p, n, q } if *p < 1 || *q < 1 || *n < 2 => {
                return bad("need p, q >= 1 and n >= 2")
            }
            FamilySpec::Starlike(legs) if legs.len() < 3 || legs.contains(&0) => {
                return bad("need at least three legs of positive length")
            }
            _ => {}
        }
        let order = self.order();
        if order > MAX_VERTICES {
            return Err(FamilyError::TooLarge(order));
        }
        Ok(())
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        self.check()?;
        let mut g = Graph::empty(self.order()).expect("order checked");
        let mut edge = |u: usize, v: usize| g.add_edge(u, v).expect("valid family edge");
        match self {
            FamilySpec::Path(n) => (1..*n).for_each(|v| edge(v - 1, v)),
            FamilySpec::Cycle(n) => (0..*n).for_each(|v| edge(v, (v + 1) % n)),
            FamilySpec::Complete(n) => {
                for u in 0..*n {
                    for v in u + 1..*n {
                        edge(u, v);
                    }
                }
            }
            FamilySpec::CompleteBipartite(a, b) => {
                for u in 0..*a {
                    for v in *a..a + b {
                        edge(u, v);
                    }
                }
            }
            FamilySpec::Friendship(n) => {
                for k in 0..*n {
                    let (x, y) = (2 * k + 1, 2 * k + 2);
                    edge(0, x);
                    edge(0, y);
                    edge(x, y);
                }
            }
            FamilySpec::Wheel(n) => {
                for v in 0..*n {
                    edge(v, (v + 1) % n);
                    edge(v, *n);
                }
            }
            FamilySpec::DoubleStarlike { p, n, q } => {
                // path 0..n, then p pendants on vertex 0 and q on vertex n-1
                (1..*n).for_each(|v| edge(v - 1, v));
                (0..*p).for_each(|k| edge(0, n + k));
                (0..*q).for_each(|k| edge(n - 1, n + p + k));
            }
            FamilySpec::Starlike(legs) => {
                let mut next = 1;
                for &len in legs {
                    let mut prev = 0;
                    for _ in 0..len {
                        edge(prev, next);
                        prev = next;
                        next += 1;
                    }
                }
            }
        }
        Ok(g)
    }

    /// All starlike trees on exactly `n` vertices, one per multiset of leg lengths.
    pub fn starlike_trees(n: usize) -> Vec<FamilySpec> {
        let mut out = Vec::new();
        if n >= 4 {
            let mut legs = Vec::new();
            partitions(n - 1, n - 1, &mut legs, &mut out);
        }
        out
    }

    /// All `H(p, n, q)` with `p <= q` on exactly `order` vertices.
    pub fn double_starlike_trees(order: usize) -> Vec<FamilySpec> {
        let mut out = Vec::new();
        for n in 2..order {
            for p in 2..order {
                for q in p..order {
                    if p + n + q == order {
                        out.push(FamilySpec::DoubleStarlike { p, n, q });
                    }
                }
            }
        }
        out
    }
}

fn partitions(rest: usize, max: usize, legs: &mut Vec<usize>, out: &mut Vec<FamilySpec>) {
    if rest == 0 {
        if legs.len() >= 3 {
            out.push(FamilySpec::Starlike(legs.clone()));
        }
        return;
    }
    for part in (1..=max.min(rest)).rev() {
        legs.push(part);
        partitions(rest - part, part, legs, out);
        legs.pop();
    }
}

pub(super) fn tree_shape(g: &Graph) -> TreeShape {
    if g.edge_count() + 1 != g.n() || !g.is_connected() {
        return TreeShape::NotATree;
    }
    match (0..g.n()).filter(|&v| g.degree(v) > 2).count() {
        0 => TreeShape::Path,
        1 => TreeShape::Starlike,
        2 => TreeShape::DoubleStarlike,
        _ => TreeShape::Other,
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "P:{n}"),
            FamilySpec::Cycle(n) => write!(f, "C:{n}"),
            FamilySpec::Complete(n) => write!(f, "K:{n}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "K:{a},{b}"),
            FamilySpec::Friendship(n) => write!(f, "F:{n}"),
            FamilySpec::Wheel(n) => write!(f, "W:{n}"),
            FamilySpec::DoubleStarlike { p, n, q } => write!(f, "H:{p},{n},{q}"),
            FamilySpec::Starlike(legs) => {
                write!(f, "S:")?;
                for (i, l) in legs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{l}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || FamilyError::Syntax(s.to_string());
        let (tag, args) = s.trim().split_once(':').ok_or_else(syntax)?;
        let nums = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| syntax())?;
        let spec = match (tag.trim(), nums.as_slice()) {
            ("P", [n]) => FamilySpec::Path(*n),
            ("C", [n]) => FamilySpec::Cycle(*n),
            ("K", [n]) => FamilySpec::Complete(*n),
            ("K", [a, b]) => FamilySpec::CompleteBipartite(*a, *b),
            ("F", [n]) => FamilySpec::Friendship(*n),
            ("W", [n]) => FamilySpec::Wheel(*n),
            ("H", [p, n, q]) => FamilySpec::DoubleStarlike { p: *p, n: *n, q: *q },
            ("S", legs) if !legs.is_empty() => FamilySpec::Starlike(legs.to_vec()),
            _ => return Err(syntax()),
        };
        spec.check()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn family_sizes() {
        let f3 = build("F:3");
        assert_eq!((f3.n(), f3.edge_count(), f3.triangle_count()), (7, 9, 3));
        let w4 = build("W:4");
        assert_eq!((w4.n(), w4.edge_count(), w4.triangle_count()), (5, 8, 4));
        let h = build("H:2,2,3");
        assert_eq!((h.n(), h.edge_count()), (7, 6));
        let mut d = h.degrees();
        d.sort();
        assert_eq!(d, vec![1, 1, 1, 1, 1, 3, 4]);
        assert_eq!(h.tree_shape(), TreeShape::DoubleStarlike);
    }

    #[test]
    fn closed_form_counts() {
        for n in 1..=20 {
            let p = FamilySpec::Path(n).build().unwrap();
            assert_eq!((p.n(), p.edge_count()), (n, n - 1));
            let k = FamilySpec::Complete(n).build().unwrap();
            assert_eq!(k.edge_count(), n * (n - 1) / 2);
            let f = FamilySpec::Friendship(n).build().unwrap();
            assert_eq!((f.n(), f.edge_count(), f.triangle_count()), (2 * n + 1, 3 * n, n as u64));
            if n >= 3 {
                let c = FamilySpec::Cycle(n).build().unwrap();
                assert_eq!((c.n(), c.edge_count()), (n, n));
                let w = FamilySpec::Wheel(n).build().unwrap();
                let t = if n == 3 { 4 } else { n as u64 };
                assert_eq!((w.n(), w.edge_count(), w.triangle_count()), (n + 1, 2 * n, t));
            }
            for b in 1..=20 {
                let kab = FamilySpec::CompleteBipartite(n, b).build().unwrap();
                assert_eq!((kab.n(), kab.edge_count()), (n + b, n * b));
            }
        }
    }

    #[test]
    fn cycle_of_three_is_triangle() {
        assert_eq!(build("C:3"), build("K:3"));
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in ["P:5", "C:4", "K:3", "K:2,3", "F:2", "W:5", "H:2,3,2", "S:3,1,1"] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
        for bad in ["P", "X:3", "K:1,2,3", "C:2", "S:1,1", "H:0,2,1", "P:65", "P:-1", "S:"] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn starlike_enumeration() {
        // partitions of 4 into at least three parts: 2+1+1, 1+1+1+1
        let s5 = FamilySpec::starlike_trees(5);
        assert_eq!(s5.len(), 2);
        for s in &s5 {
            assert_eq!(s.build().unwrap().tree_shape(), TreeShape::Starlike);
        }
        for h in FamilySpec::double_starlike_trees(8) {
            let g = h.build().unwrap();
            assert_eq!((g.n(), g.tree_shape()), (8, TreeShape::DoubleStarlike));
        }
        assert_eq!(build("P:4").tree_shape(), TreeShape::Path);
        assert_eq!(build("C:4").tree_shape(), TreeShape::NotATree);
    }
}
