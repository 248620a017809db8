//! Loop-weight expansion and trace moments of `A_alpha`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::charpoly_rational;
use crate::error::EngineError;
use crate::graph::{Graph, WeightedGraph};
use crate::poly::{RationalScalar, UniPolyQ};

/// The expansion enumerates all `2^n` vertex subsets.
pub const LOOP_EXPANSION_MAX_N: usize = 16;

/// `phi(A(W[h_1..h_n]))` evaluated as
/// `phi(A(W)) + sum_k (-1)^k sum_{r_1<..<r_k} h_r1..h_rk phi(A(W - {r_1..r_k}))`,
/// where `W - S` deletes the vertices in `S` and the `h` are the loop weights.
pub fn loop_weight_expansion(wg: &WeightedGraph) -> Result<UniPolyQ, EngineError> {
    let n = wg.n();
    if n > LOOP_EXPANSION_MAX_N {
        return Err(EngineError::TooManyVertices { n, max: LOOP_EXPANSION_MAX_N });
    }
    let mut total = UniPolyQ::default();
    for subset in 0u64..1 << n {
        let mut weight = BigRational::one();
        for v in (0..n).filter(|&v| subset >> v & 1 == 1) {
            weight *= wg.loop_weight(v);
        }
        if weight.is_zero() {
            continue;
        }
        if subset.count_ones() % 2 == 1 {
            weight = -weight;
        }
        let phi = charpoly_rational(&wg.adjacency_without(subset));
        total = &total + &phi.scalar_mul(&weight);
    }
    Ok(total)
}

/// `Gamma'`: every edge of `g` weighted `1 - a`, vertex `i` carrying a loop of weight `a d_i`.
pub fn gamma_prime(g: &Graph, a: &RationalScalar) -> WeightedGraph {
    let w = BigRational::one() - a;
    let mut wg = WeightedGraph::uniform(g, &w).expect("edges of a valid graph");
    for v in 0..g.n() {
        wg.set_loop(v, a * BigRational::from_integer(g.degree(v).into()))
            .expect("vertex in range");
    }
    wg
}

/// `a D + (1 - a) A` over the rationals.
pub fn alpha_matrix(g: &Graph, a: &RationalScalar) -> Vec<Vec<BigRational>> {
    let off = BigRational::one() - a;
    (0..g.n())
        .map(|i| {
            (0..g.n())
                .map(|j| {
                    if i == j {
                        a * BigRational::from_integer(g.degree(i).into())
                    } else if g.has_edge(i, j) {
                        off.clone()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Power sums of the A-alpha eigenvalues: traces of the first three powers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceMoments {
    #[serde(serialize_with = "as_text")]
    pub t1: BigRational,
    #[serde(serialize_with = "as_text")]
    pub t2: BigRational,
    #[serde(serialize_with = "as_text")]
    pub t3: BigRational,
}

fn as_text<S: serde::Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Closed forms: `T1 = 2am`, `T2 = 2(1-a)^2 m + a^2 sum d^2`,
/// `T3 = a^3 sum d^3 + 3a(1-a)^2 sum d^2 + 6(1-a)^3 t`.
pub fn trace_moments(g: &Graph, a: &RationalScalar) -> TraceMoments {
    let c = g.basic_counts();
    let int = |v: u64| BigRational::from_integer(BigInt::from(v));
    let m = int(c.m as u64);
    let b = BigRational::one() - a;
    let two = int(2);
    let a2 = a * a;
    let b2 = &b * &b;
    TraceMoments {
        t1: &two * a * &m,
        t2: &two * &b2 * &m + &a2 * int(c.sum_d2),
        t3: &a2 * a * int(c.sum_d3)
            + int(3) * a * &b2 * int(c.sum_d2)
            + int(6) * &b2 * &b * int(c.triangles),
    }
}

/// Traces of `M, M^2, M^3` for `M = A_a(G)`, by explicit matrix products.
pub fn matrix_trace_powers(g: &Graph, a: &RationalScalar) -> TraceMoments {
    let m = alpha_matrix(g, a);
    let m2 = mat_mul(&m, &m);
    let m3 = mat_mul(&m2, &m);
    let tr = |x: &[Vec<BigRational>]| {
        (0..x.len()).fold(BigRational::zero(), |acc, i| acc + &x[i][i])
    };
    TraceMoments {
        t1: tr(&m),
        t2: tr(&m2),
        t3: tr(&m3),
    }
}

fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(BigRational::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}
