//! Characteristic polynomials of integer matrices and the bivariate
//! A-alpha polynomial, plus the loop-weight and trace identities used to
//! check it.

mod berkowitz;
mod identities;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

pub use crate::error::EngineError;
use crate::graph::Graph;
use crate::poly::{
    interpolate_consecutive_i128, interpolate_integer_points, BiPolyZ, Encoder, UniPolyQ,
    UniPolyZ,
};

pub use berkowitz::berkowitz;
pub(crate) use berkowitz::{berkowitz_i128, Workspace};
pub use identities::{
    alpha_matrix, gamma_prime, loop_weight_expansion, matrix_trace_powers, trace_moments,
    TraceMoments, LOOP_EXPANSION_MAX_N,
};

/// Square matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "IntMatrix must be square");
        IntMatrix { rows }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        Self::new(
            (0..n)
                .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        Self::new(self.rows.iter().map(|r| r.iter().map(|v| v * k).collect()).collect())
    }
}

/// `det(xI - M)` as an integer polynomial in `x`.
pub fn charpoly_int(m: &IntMatrix) -> UniPolyZ {
    UniPolyZ::from_high(berkowitz::<BigInt>(m.rows()))
}

/// `det(xI - M)` over the rationals.
pub fn charpoly_rational(m: &[Vec<BigRational>]) -> UniPolyQ {
    UniPolyQ::from_high(berkowitz::<BigRational>(m))
}

/// `phi(kM)` from `phi(M)`: the coefficient of `x^(n-j)` is scaled by `k^j`.
pub fn scale_charpoly(p: &UniPolyZ, k: &BigInt) -> UniPolyZ {
    let n = p.degree().unwrap_or(0);
    let mut pow = BigInt::one();
    let mut out = vec![BigInt::zero(); n + 1];
    for j in 0..=n {
        out[n - j] = p.coeff(n - j) * &pow;
        pow *= k;
    }
    UniPolyZ::new(out)
}

/// Characteristic polynomials of the adjacency, Laplacian and signless
/// Laplacian matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialCharpolys {
    pub phi_a: UniPolyZ,
    pub phi_l: UniPolyZ,
    pub phi_q: UniPolyZ,
}

pub fn special_charpolys(g: &Graph) -> SpecialCharpolys {
    let poly = |d, a| charpoly_int(&IntMatrix::from_i64(&g.combined_matrix(d, a)));
    SpecialCharpolys {
        phi_a: poly(0, 1),
        phi_l: poly(1, -1),
        phi_q: poly(1, 1),
    }
}

/// The A-alpha characteristic polynomial with `i128` coefficients.
/// `coeffs[j]` lists the alpha-coefficients of `x^(n-j)`, trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaTable {
    pub coeffs: Vec<Vec<i128>>,
}

impl AlphaTable {
    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn to_bipoly(&self) -> BiPolyZ {
        BiPolyZ::new(
            self.coeffs
                .iter()
                .map(|c| UniPolyZ::new(c.iter().map(|&v| BigInt::from(v)).collect()))
                .collect(),
        )
    }

    /// Writes the same bytes as [`crate::poly::canonical_encode`] of [`Self::to_bipoly`].
    pub fn encode_into(&self, enc: &mut Encoder) {
        enc.reset(self.n());
        for c in &self.coeffs {
            enc.begin_coeff(c.len());
            for &v in c {
                enc.push_i128(v);
            }
        }
    }
}

/// Reusable state for repeated [`AlphaEngine::table`] calls on one thread.
#[derive(Default)]
pub struct AlphaEngine {
    ws: Workspace,
    matrix: Vec<i128>,
    values: Vec<Vec<i128>>,
}

impl AlphaEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Machine-word evaluation of the A-alpha polynomial. Nodes are
    /// `alpha = 0, 1, ..., n`: each gives the integer matrix
    /// `a D + (1 - a) A`, whose characteristic polynomial fixes every
    /// x-coefficient at that node. Returns `Ok(None)` if an intermediate
    /// value leaves the `i128` range.
    pub fn table(&mut self, g: &Graph) -> Result<Option<AlphaTable>, EngineError> {
        let n = g.n();
        self.values.resize_with(n + 1, Vec::new);
        for v in &mut self.values {
            v.clear();
        }
        let degrees = g.degrees();
        for a in 0..=n as i128 {
            self.matrix.clear();
            self.matrix.resize(n * n, 0);
            for i in 0..n {
                self.matrix[i * n + i] = a * degrees[i] as i128;
                let mut row = g.rows()[i];
                while row != 0 {
                    let j = row.trailing_zeros() as usize;
                    row &= row - 1;
                    self.matrix[i * n + j] = 1 - a;
                }
            }
            if !berkowitz_i128(&self.matrix, n, &mut self.ws) {
                return Ok(None);
            }
            for (j, &c) in self.ws.poly().iter().enumerate() {
                self.values[j].push(c);
            }
        }
        let mut coeffs = Vec::with_capacity(n + 1);
        for (j, vals) in self.values.iter().enumerate() {
            let mut c = match interpolate_consecutive_i128(vals) {
                None => return Ok(None),
                Some(Err(())) => return Err(EngineError::InexactCoefficient { j }),
                Some(Ok(c)) => c,
            };
            while c.last() == Some(&0) {
                c.pop();
            }
            if c.len() > j + 1 {
                return Err(EngineError::DegreeBound { j, degree: c.len() - 1 });
            }
            coeffs.push(c);
        }
        Ok(Some(AlphaTable { coeffs }))
    }
}

/// Arbitrary-precision path: same nodes, `BigInt` Berkowitz and Newton
/// interpolation with exactness checks.
pub fn alpha_charpoly_big(g: &Graph) -> Result<BiPolyZ, EngineError> {
    let n = g.n();
    let mut values: Vec<Vec<(BigInt, BigInt)>> = vec![Vec::with_capacity(n + 1); n + 1];
    for a in 0..=n as i64 {
        let m = IntMatrix::from_i64(&g.combined_matrix(a, 1 - a));
        for (j, c) in berkowitz::<BigInt>(m.rows()).into_iter().enumerate() {
            values[j].push((BigInt::from(a), c));
        }
    }
    let mut coeffs = Vec::with_capacity(n + 1);
    for (j, pts) in values.iter().enumerate() {
        let c = interpolate_integer_points(pts)?;
        if let Some(d) = c.degree().filter(|&d| d > j) {
            return Err(EngineError::DegreeBound { j, degree: d });
        }
        coeffs.push(c);
    }
    Ok(BiPolyZ::new(coeffs))
}

/// `det(xI - A_alpha(G))` as an exact polynomial in `x` and `alpha`.
pub fn alpha_charpoly(g: &Graph) -> Result<BiPolyZ, EngineError> {
    match AlphaEngine::new().table(g)? {
        Some(t) => Ok(t.to_bipoly()),
        None => alpha_charpoly_big(g),
    }
}
