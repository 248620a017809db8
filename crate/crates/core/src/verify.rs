//! Per-graph identity checks tying the A-alpha polynomial to the closed
//! forms, the loop-weight expansion, the classical matrices and the traces.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::coeffs::{aalpha_first_four, CoeffInputs};
use crate::engine::{
    alpha_charpoly, gamma_prime, loop_weight_expansion, matrix_trace_powers, special_charpolys,
    trace_moments, EngineError, LOOP_EXPANSION_MAX_N,
};
use crate::graph::Graph;
use crate::poly::{bipoly_eval_alpha, UniPolyQ, UniPolyZ};

/// Vertex limit for the loop-weight check, which costs `2^n` determinants.
pub const LOOP_CHECK_MAX_N: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// `c_0 .. c_3` equal the closed forms in `n, m, sum d^2, sum d^3, t`.
    FirstFour,
    /// `Gamma'` expanded over loop subsets equals the polynomial at `alpha = 1/3`.
    LoopWeight,
    /// `alpha = 0` gives `phi(A)`, `alpha = 1` gives `phi(D)`, and scaling
    /// `alpha = 1/2` by two gives `phi(Q)`.
    Specialisations,
    /// Closed-form power sums equal traces of matrix powers.
    TraceMoments,
    /// `phi(L) = phi(Q)` exactly when the graph is bipartite.
    BipartiteLq,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    /// Checks that ran, with their outcome. Skipped checks are absent.
    pub results: Vec<(Identity, bool)>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|(_, ok)| *ok)
    }
}

/// `phi(kM)` from `phi(M)` over the rationals.
pub fn scale_rational(p: &UniPolyQ, k: &BigRational) -> UniPolyQ {
    let n = p.degree().unwrap_or(0);
    let mut pow = BigRational::one();
    let mut out = vec![BigRational::default(); n + 1];
    for j in 0..=n {
        out[n - j] = p.coeff(n - j) * &pow;
        pow *= k;
    }
    UniPolyQ::new(out)
}

fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

pub fn check_identities(g: &Graph) -> Result<IdentityReport, EngineError> {
    let p = alpha_charpoly(g)?;
    let n = g.n();
    let mut results = Vec::new();

    let closed = aalpha_first_four(&CoeffInputs::from_counts(&g.basic_counts()))
        .expect("counts of a graph satisfy the degree identities");
    let first_four = (0..4).all(|j| {
        let actual = if j <= n { p.coeff(j).clone() } else { UniPolyZ::default() };
        actual == closed[j]
    });
    results.push((Identity::FirstFour, first_four));

    if n <= LOOP_CHECK_MAX_N.min(LOOP_EXPANSION_MAX_N) {
        let a = rational(1, 3);
        let lhs = loop_weight_expansion(&gamma_prime(g, &a))?;
        results.push((Identity::LoopWeight, lhs == bipoly_eval_alpha(&p, &a)));
    }

    let s = special_charpolys(g);
    let phi_d = g
        .degrees()
        .iter()
        .fold(UniPolyZ::one(), |acc, &d| &acc * &UniPolyZ::from_i64(&[-(d as i64), 1]));
    let half = bipoly_eval_alpha(&p, &rational(1, 2));
    let specialisations = p.eval_alpha_int(&BigInt::from(0)) == s.phi_a
        && p.eval_alpha_int(&BigInt::from(1)) == phi_d
        && scale_rational(&half, &rational(2, 1)) == s.phi_q.to_rational();
    results.push((Identity::Specialisations, specialisations));

    let traces = [(0, 1), (1, 3), (1, 2), (7, 5)]
        .iter()
        .all(|&(a, b)| trace_moments(g, &rational(a, b)) == matrix_trace_powers(g, &rational(a, b)));
    results.push((Identity::TraceMoments, traces));

    let bipartite = g.bipartite_components().is_bipartite;
    results.push((Identity::BipartiteLq, (s.phi_l == s.phi_q) == bipartite));

    Ok(IdentityReport { results })
}
