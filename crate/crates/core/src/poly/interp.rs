//! Exact interpolation through integer points in Newton form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::UniPolyZ;
use crate::error::PolyError;

/// The unique polynomial of degree below `points.len()` through `points`.
///
/// Every divided difference must divide exactly; a remainder means the
/// values do not come from an integer polynomial of that degree.
pub fn interpolate_integer_points(points: &[(BigInt, BigInt)]) -> Result<UniPolyZ, PolyError> {
    if points.is_empty() {
        return Err(PolyError::NoPoints);
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(PolyError::DuplicateNode(xi.clone()));
        }
    }
    let nodes: Vec<&BigInt> = points.iter().map(|(x, _)| x).collect();
    let mut dd: Vec<BigInt> = points.iter().map(|(_, y)| y.clone()).collect();
    let m = dd.len();
    for k in 1..m {
        for i in (k..m).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = nodes[i] - nodes[i - k];
            let (q, r) = num.div_rem(&den);
            if !r.is_zero() {
                return Err(PolyError::InexactDivision {
                    numerator: num,
                    denominator: den,
                });
            }
            dd[i] = q;
        }
    }
    // p = dd[0] + (v - x0)(dd[1] + (v - x1)(dd[2] + ...))
    let mut acc = vec![dd[m - 1].clone()];
    for k in (0..m - 1).rev() {
        // acc <- acc * (v - x_k) + dd[k]
        let mut next = vec![BigInt::zero(); acc.len() + 1];
        for (d, c) in acc.iter().enumerate() {
            next[d + 1] += c;
            next[d] -= c * nodes[k];
        }
        next[0] += &dd[k];
        acc = next;
    }
    Ok(UniPolyZ::new(acc))
}

/// Interpolation at the nodes `0, 1, ..., values.len() - 1` with `i128`
/// arithmetic. Returns `None` on overflow; `Some(Err(_))` on inexact division.
pub(crate) fn interpolate_consecutive_i128(values: &[i128]) -> Option<Result<Vec<i128>, ()>> {
    let m = values.len();
    let mut dd = values.to_vec();
    for k in 1..m {
        let den = k as i128;
        for i in (k..m).rev() {
            let num = dd[i].checked_sub(dd[i - 1])?;
            if num % den != 0 {
                return Some(Err(()));
            }
            dd[i] = num / den;
        }
    }
    let mut acc = vec![0i128; m];
    acc[0] = dd[m - 1];
    let mut len = 1;
    for k in (0..m - 1).rev() {
        let node = k as i128;
        // multiply by (v - node), highest first so lower entries are still old
        acc[len] = acc[len - 1];
        for d in (1..len).rev() {
            acc[d] = acc[d - 1].checked_sub(acc[d].checked_mul(node)?)?;
        }
        acc[0] = acc[0].checked_mul(node)?.checked_neg()?.checked_add(dd[k])?;
        len += 1;
    }
    Some(Ok(acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pts(p: &[(i64, i64)]) -> Vec<(BigInt, BigInt)> {
        p.iter().map(|&(x, y)| (BigInt::from(x), BigInt::from(y))).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(
            interpolate_integer_points(&pts(&[(0, 1), (1, 1), (2, 1)])).unwrap(),
            UniPolyZ::from_i64(&[1])
        );
        assert_eq!(
            interpolate_integer_points(&pts(&[(0, 0), (1, 1), (2, 4), (3, 9)])).unwrap(),
            UniPolyZ::from_i64(&[0, 0, 1])
        );
        assert_eq!(
            interpolate_integer_points(&pts(&[(0, -1), (1, 1)])).unwrap(),
            UniPolyZ::from_i64(&[-1, 2])
        );
    }

    #[test]
    fn errors() {
        assert_eq!(
            interpolate_integer_points(&pts(&[(1, 0), (1, 2)])),
            Err(PolyError::DuplicateNode(BigInt::from(1)))
        );
        // 0, 1, 0 fits x(2 - x)... but 0, 1, 1 at nodes 0, 1, 2 needs x/2 terms
        assert!(matches!(
            interpolate_integer_points(&pts(&[(0, 0), (1, 1), (2, 1)])),
            Err(PolyError::InexactDivision { .. })
        ));
        assert_eq!(interpolate_integer_points(&[]), Err(PolyError::NoPoints));
        assert_eq!(interpolate_consecutive_i128(&[0, 1, 1]), Some(Err(())));
    }

    #[test]
    fn scattered_nodes() {
        // 3x^2 - 2x + 5 at -4, 7, 10
        let f = |x: i64| 3 * x * x - 2 * x + 5;
        let p = interpolate_integer_points(&pts(&[(-4, f(-4)), (7, f(7)), (10, f(10))])).unwrap();
        assert_eq!(p, UniPolyZ::from_i64(&[5, -2, 3]));
    }

    proptest! {
        #[test]
        fn recovers_random_polynomials(
            coeffs in prop::collection::vec(-1_000_000_000i64..1_000_000_000, 0..=13),
            offset in -20i64..20,
        ) {
            let p = UniPolyZ::from_i64(&coeffs);
            let points: Vec<_> = (0..13)
                .map(|k| {
                    let x = BigInt::from(k + offset);
                    let y = p.eval(&x);
                    (x, y)
                })
                .collect();
            prop_assert_eq!(interpolate_integer_points(&points).unwrap(), p.clone());

            let values: Vec<i128> = (0..13)
                .map(|k| i128::try_from(p.eval(&BigInt::from(k))).unwrap())
                .collect();
            let fast = interpolate_consecutive_i128(&values).unwrap().unwrap();
            prop_assert_eq!(UniPolyZ::new(fast.into_iter().map(BigInt::from).collect()), p);
        }
    }
}
