//! Closed forms for the leading characteristic-polynomial coefficients and
//! the inverse map from a polynomial back to degree and triangle counts.
//!
//! Every `1/2` and `1/3` in the closed forms is applied as an exact integer
//! division of an assembled numerator; a remainder is reported, never rounded.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::error::{DecodeError, FamilyError};
use crate::graph::{BasicCounts, FamilySpec};
use crate::poly::{BiPolyZ, UniPolyZ};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("inputs violate a degree-sequence identity: {0}")]
    InvalidInputs(String),
    #[error("{what} is not divisible by {by}")]
    Inexact { what: &'static str, by: u32 },
}

/// Graph counts that determine the first four coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffInputs {
    pub n: BigInt,
    pub m: BigInt,
    pub sum_d2: BigInt,
    pub sum_d3: BigInt,
    pub t: BigInt,
}

impl CoeffInputs {
    pub fn new(n: u64, m: u64, sum_d2: u64, sum_d3: u64, t: u64) -> Result<Self, CoeffError> {
        let c = CoeffInputs {
            n: n.into(),
            m: m.into(),
            sum_d2: sum_d2.into(),
            sum_d3: sum_d3.into(),
            t: t.into(),
        };
        c.validate()?;
        Ok(c)
    }

    pub fn from_counts(c: &BasicCounts) -> Self {
        CoeffInputs {
            n: c.n.into(),
            m: c.m.into(),
            sum_d2: c.sum_d2.into(),
            sum_d3: c.sum_d3.into(),
            t: c.triangles.into(),
        }
    }

    /// Identities every degree sequence satisfies: `sum d^2 >= sum d = 2m`,
    /// `(2m)^2 <= n sum d^2`, `(sum d^2)^2 <= 2m sum d^3`, and the parities
    /// `sum d^2 = 2m (mod 2)`, `sum d^3 = 2m (mod 6)` from `d^2 = d (mod 2)`, `d^3 = d (mod 6)`.
    pub fn validate(&self) -> Result<(), CoeffError> {
        let bad = |s: &str| Err(CoeffError::InvalidInputs(s.to_string()));
        let zero = BigInt::zero();
        if [&self.n, &self.m, &self.sum_d2, &self.sum_d3, &self.t].iter().any(|v| **v < zero) {
            return bad("negative count");
        }
        let two_m: BigInt = &self.m * 2u32;
        if self.sum_d2 < two_m {
            return bad("sum of squared degrees below 2m");
        }
        if &two_m * &two_m > &self.n * &self.sum_d2 {
            return bad("(2m)^2 > n * sum d^2");
        }
        if &self.sum_d2 * &self.sum_d2 > &two_m * &self.sum_d3 {
            return bad("(sum d^2)^2 > 2m * sum d^3");
        }
        if !(&self.sum_d2 - &two_m).is_even() {
            return bad("sum d^2 and 2m differ in parity");
        }
        if !(&self.sum_d3 - &two_m).is_multiple_of(&BigInt::from(6)) {
            return bad("sum d^3 - 2m not divisible by 6");
        }
        Ok(())
    }
}

fn exact(num: BigInt, by: u32, what: &'static str) -> Result<BigInt, CoeffError> {
    let (q, r) = num.div_rem(&BigInt::from(by));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(CoeffError::Inexact { what, by })
    }
}

fn exact_poly(p: &UniPolyZ, by: u32, what: &'static str) -> Result<UniPolyZ, CoeffError> {
    Ok(UniPolyZ::new(
        p.coeffs().iter().map(|c| exact(c.clone(), by, what)).collect::<Result<_, _>>()?,
    ))
}

/// `c_0 .. c_3` of `det(xI - A_alpha)` as polynomials in alpha.
pub fn aalpha_first_four(c: &CoeffInputs) -> Result<[UniPolyZ; 4], CoeffError> {
    c.validate()?;
    let a = UniPolyZ::var();
    let one_minus_a = &UniPolyZ::one() - &a;
    let a2 = &a * &a;
    let a3 = &a2 * &a;
    let b2 = &one_minus_a * &one_minus_a;
    let b3 = &b2 * &one_minus_a;
    let m = &c.m;
    let m2 = m * m;

    let c1 = a.scalar_mul(&(m * -2));

    // 2(2 a^2 m^2 - (1-a)^2 m) - a^2 sum d^2, halved
    let twice_c2 = &(&a2.scalar_mul(&(&m2 * 4u32)) - &b2.scalar_mul(&(m * 2u32))) - &a2.scalar_mul(&c.sum_d2);
    let c2 = exact_poly(&twice_c2, 2, "2 * c_2")?;

    let inner = &(&(&b3.scalar_mul(&(&c.t * 6u32)) - &(&a * &b2).scalar_mul(&(&m2 * 6u32)))
        + &(&a * &b2).scalar_mul(&(&c.sum_d2 * 3u32)))
        + &a3.scalar_mul(&(&m2 * m * 4u32 - m * &c.sum_d2 * 3u32 + &c.sum_d3));
    let c3 = exact_poly(&(-&inner), 3, "3 * c_3")?;

    Ok([UniPolyZ::one(), c1, c2, c3])
}

/// Adjacency coefficients `(1, 0, -m, -2t)`.
pub fn a_first_four(m: &BigInt, t: &BigInt) -> [BigInt; 4] {
    [BigInt::one(), BigInt::zero(), -m, -(t * 2u32)]
}

/// Laplacian coefficients `l_0 .. l_3`.
pub fn l_first_four(c: &CoeffInputs) -> Result<[BigInt; 4], CoeffError> {
    c.validate()?;
    let m = &c.m;
    let m2 = m * m;
    let l2 = exact(&m2 * 4u32 - m * 2u32 - &c.sum_d2, 2, "2 * l_2")?;
    let l3 = exact(
        -(&m2 * m * 4u32) + &m2 * 6u32 + m * &c.sum_d2 * 3u32 - &c.sum_d3 - &c.sum_d2 * 3u32 + &c.t * 6u32,
        3,
        "3 * l_3",
    )?;
    Ok([BigInt::one(), -(m * 2u32), l2, l3])
}

/// Signless Laplacian coefficients `q_0 .. q_3`.
pub fn q_first_four(c: &CoeffInputs) -> Result<[BigInt; 4], CoeffError> {
    c.validate()?;
    let m = &c.m;
    let m2 = m * m;
    let q2 = exact(&m2 * 4u32 - m * 2u32 - &c.sum_d2, 2, "2 * q_2")?;
    let q3 = exact(
        -(&c.t * 6u32 - &m2 * 6u32 + &m2 * m * 4u32 + (BigInt::one() - m) * &c.sum_d2 * 3u32 + &c.sum_d3),
        3,
        "3 * q_3",
    )?;
    Ok([BigInt::one(), -(m * 2u32), q2, q3])
}

/// The displayed A-alpha coefficients and signless Laplacian coefficients
/// of one family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyCoeffs {
    pub alpha: [UniPolyZ; 4],
    pub q: [BigInt; 4],
}

/// Smallest parameter for which the family's closed forms hold.
fn check_range(spec: &FamilySpec) -> Result<(), FamilyError> {
    let low = |what: &str| Err(FamilyError::OutOfRange(format!("{spec}: closed form needs {what}")));
    match spec {
        FamilySpec::Path(n) if *n < 2 => low("n >= 2"),
        FamilySpec::Cycle(n) if *n < 4 => low("n >= 4"),
        FamilySpec::Wheel(n) if *n < 4 => low("n >= 4 (W_3 = K_4 has four triangles)"),
        FamilySpec::Complete(n) | FamilySpec::Friendship(n) if *n < 1 => low("n >= 1"),
        FamilySpec::CompleteBipartite(a, b) if *a < 1 || *b < 1 => low("a, b >= 1"),
        FamilySpec::DoubleStarlike { .. } | FamilySpec::Starlike(_) => Err(FamilyError::OutOfRange(
            format!("{spec}: no closed form for this family"),
        )),
        _ => Ok(()),
    }
}

/// Closed forms for P_n, K_n, C_n, F_n, W_n and K_{a,b}.
pub fn family_coeffs(spec: &FamilySpec) -> Result<FamilyCoeffs, FamilyError> {
    check_range(spec)?;
    Ok(family_coeffs_unchecked(spec))
}

/// Evaluates the displays without the range check. Outside the range the
/// result need not match the graph (`W_3` gives `q_3 = -78`, not `-80`).
pub(crate) fn family_coeffs_unchecked(spec: &FamilySpec) -> FamilyCoeffs {
    let i = |v: i128| BigInt::from(v);
    let div = |num: i128, by: i128| {
        assert_eq!(num % by, 0, "{spec}: display numerator {num} not divisible by {by}");
        num / by
    };
    // (a^3, a^2, a, 1) coefficients of c_3; (a^2, a, 1) of c_2; a of c_1
    let (c1, c2, c3, q): (i128, [i128; 3], [i128; 4], [i128; 3]) = match *spec {
        FamilySpec::Path(n) => {
            let n = n as i128;
            (
                -2 * (n - 1),
                [(2 * n - 3) * (n - 2), 2 * (n - 1), -(n - 1)],
                [div(-2 * (2 * n - 5) * (n - 2) * (n - 3), 3), -4 * (n - 2) * (n - 2), 2 * (n - 2) * (n - 2), 0],
                [-2 * (n - 1), (2 * n - 3) * (n - 2), div(-2 * (2 * n - 5) * (n - 2) * (n - 3), 3)],
            )
        }
        FamilySpec::Complete(n) => {
            let n = n as i128;
            (
                -n * (n - 1),
                [div(n * n * (n - 1) * (n - 2), 2), n * (n - 1), div(-n * (n - 1), 2)],
                [
                    div(-n * n * n * (n - 1) * (n - 2) * (n - 3), 6),
                    -n * n * (n - 1) * (n - 2),
                    div(n * (n - 1) * (n - 2) * (n + 1), 2),
                    div(-n * (n - 1) * (n - 2), 3),
                ],
                [
                    -n * (n - 1),
                    div(n * n * (n - 1) * (n - 2), 2),
                    div(-n * (n + 1) * (n - 1) * (n - 2) * (n - 2) * (n - 2), 6),
                ],
            )
        }
        FamilySpec::Cycle(n) => {
            let n = n as i128;
            (
                -2 * n,
                [n * (2 * n - 3), 2 * n, -n],
                [div(-2 * n * (n - 2) * (2 * n - 5), 3), -4 * n * (n - 2), 2 * n * (n - 2), 0],
                [-2 * n, n * (2 * n - 3), div(-2 * n * (n - 2) * (2 * n - 5), 3)],
            )
        }
        FamilySpec::Friendship(n) => {
            let n = n as i128;
            (
                -6 * n,
                [n * (16 * n - 7), 6 * n, -3 * n],
                [
                    div(-2 * n * (40 * n - 17) * (n - 1), 3),
                    -2 * n * (14 * n - 5),
                    2 * n * (7 * n - 1),
                    -2 * n,
                ],
                [-6 * n, n * (16 * n - 7), div(-2 * n * (40 * n * n - 57 * n + 23), 3)],
            )
        }
        FamilySpec::Wheel(n) => {
            let n = n as i128;
            (
                -4 * n,
                [div(n * (15 * n - 13), 2), 4 * n, -2 * n],
                [-n * (n - 1) * (9 * n - 16), -2 * n * (7 * n - 6), n * (7 * n - 3), -2 * n],
                [-4 * n, div(n * (15 * n - 13), 2), -n * (9 * n * n - 25 * n + 20)],
            )
        }
        FamilySpec::CompleteBipartite(a, b) => {
            let (a, b) = (a as i128, b as i128);
            let ab = a * b;
            let cubic = div(
                -ab * (4 * a * a * b * b - 3 * a * a * b - 3 * a * b * b + a * a - 6 * ab + b * b + 3 * a + 3 * b),
                3,
            );
            (
                -2 * ab,
                [div(ab * (4 * ab - a - b - 2), 2), 2 * ab, -ab],
                [cubic, -2 * ab * (2 * ab - a - b), ab * (2 * ab - a - b), 0],
                [-2 * ab, div(ab * (4 * ab - a - b - 2), 2), cubic],
            )
        }
        FamilySpec::DoubleStarlike { .. } | FamilySpec::Starlike(_) => {
            unreachable!("no closed form for {spec}")
        }
    };
    let low_first = |high: &[i128]| UniPolyZ::new(high.iter().rev().map(|&v| i(v)).collect());
    FamilyCoeffs {
        alpha: [UniPolyZ::one(), low_first(&[c1, 0]), low_first(&c2), low_first(&c3)],
        q: [BigInt::one(), i(q[0]), i(q[1]), i(q[2])],
    }
}

/// Counts recovered from the first four coefficients of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecodedInvariants {
    pub n: u64,
    pub m: u64,
    pub sum_d2: u64,
    pub sum_d3: u64,
    pub triangles: u64,
    pub regular: bool,
}

impl DecodedInvariants {
    pub fn matches(&self, c: &BasicCounts) -> bool {
        (self.n, self.m, self.sum_d2, self.sum_d3, self.triangles)
            == (c.n as u64, c.m as u64, c.sum_d2, c.sum_d3, c.triangles)
    }
}

/// Reads `n` from the x-degree, `m` from `c_1`, `sum d^2` from the
/// alpha^2 term of `c_2`, `t` from the constant term of `c_3` (which is
/// `-2t`), then `sum d^3` from the alpha^3 term of `c_3`, and checks that
/// the closed forms reproduce `c_0 .. c_3`.
pub fn decode_invariants(p: &BiPolyZ) -> Result<DecodedInvariants, DecodeError> {
    if !p.is_monic() {
        return Err(DecodeError::NonMonic);
    }
    let n = p.n();
    if n == 0 || n > crate::graph::MAX_VERTICES {
        return Err(DecodeError::Degree(n));
    }
    let inconsistent = |s: &str| DecodeError::Inconsistent(s.to_string());
    let coeff = |j: usize| if j <= n { p.coeff(j).clone() } else { UniPolyZ::default() };
    let (c1, c2, c3) = (coeff(1), coeff(2), coeff(3));

    if c1.degree().unwrap_or(1) != 1 || !c1.coeff(0).is_zero() {
        return Err(inconsistent("c_1 is not a multiple of alpha"));
    }
    let (m, r) = (-c1.coeff(1)).div_rem(&BigInt::from(2));
    if !r.is_zero() || m.is_negative() {
        return Err(inconsistent("alpha-coefficient of c_1 is not -2m"));
    }
    let m2 = &m * &m;
    let sum_d2 = (&m2 * 2u32 - &m - c2.coeff(2)) * 2u32;
    let (t, r) = (-c3.coeff(0)).div_rem(&BigInt::from(2));
    if !r.is_zero() {
        return Err(inconsistent("constant term of c_3 is odd"));
    }
    let sum_d3 = -(c3.coeff(3) * 3u32) + &t * 6u32 + &m2 * 6u32 - &sum_d2 * 3u32 - &m2 * &m * 4u32 + &m * &sum_d2 * 3u32;

    let inputs = CoeffInputs {
        n: n.into(),
        m: m.clone(),
        sum_d2: sum_d2.clone(),
        sum_d3: sum_d3.clone(),
        t: t.clone(),
    };
    let rebuilt = aalpha_first_four(&inputs).map_err(|e| DecodeError::Inconsistent(e.to_string()))?;
    if rebuilt[1] != c1 || rebuilt[2] != c2 || rebuilt[3] != c3 {
        return Err(inconsistent("closed forms do not reproduce c_1..c_3"));
    }
    let small = |v: &BigInt| v.to_u64().ok_or_else(|| inconsistent("count out of range"));
    let regular = BigInt::from(n) * &sum_d2 == (&m * 2u32) * (&m * 2u32);
    Ok(DecodedInvariants {
        n: n as u64,
        m: small(&m)?,
        sum_d2: small(&sum_d2)?,
        sum_d3: small(&sum_d3)?,
        triangles: small(&t)?,
        regular,
    })
}
