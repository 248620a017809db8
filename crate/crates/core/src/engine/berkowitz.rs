//! Division-free characteristic polynomials (Samuelson-Berkowitz).
//!
//! The leading `r x r` block grows one row and column at a time; the new
//! characteristic polynomial is a lower-triangular Toeplitz matrix built from
//! `1, -a_rr, -R C, -R A C, ..., -R A^(r-1) C` times the previous one, where
//! `R` and `C` are the new row and column restricted to the old block.

use std::ops::{Add, Mul, Neg};

use num_traits::{One, Zero};

/// Coefficients of `det(xI - M)`, highest power first (`out[0] == 1`).
pub fn berkowitz<T>(m: &[Vec<T>]) -> Vec<T>
where
    T: Clone + Zero + One + Add<Output = T>,
    for<'a> &'a T: Mul<&'a T, Output = T> + Neg<Output = T>,
{
    let n = m.len();
    let mut poly = vec![T::one()];
    for r in 0..n {
        let mut t = Vec::with_capacity(r + 2);
        t.push(T::one());
        t.push(-&m[r][r]);
        let mut col: Vec<T> = (0..r).map(|i| m[i][r].clone()).collect();
        for k in 0..r {
            let s = (0..r).fold(T::zero(), |acc, i| acc + &m[r][i] * &col[i]);
            t.push(-&s);
            if k + 1 < r {
                col = (0..r)
                    .map(|i| (0..r).fold(T::zero(), |acc, l| acc + &m[i][l] * &col[l]))
                    .collect();
            }
        }
        poly = (0..r + 2)
            .map(|i| {
                let lo = i.saturating_sub(r + 1);
                (lo..=i.min(r)).fold(T::zero(), |acc, k| acc + &t[i - k] * &poly[k])
            })
            .collect();
    }
    poly
}

/// Scratch buffers for the `i128` path, reused across calls.
#[derive(Default)]
pub(crate) struct Workspace {
    t: Vec<i128>,
    col: Vec<i128>,
    next: Vec<i128>,
    poly: Vec<i128>,
}

/// Berkowitz over a row-major `n x n` matrix with checked `i128` arithmetic.
/// Returns `false` on overflow; on success `ws.poly` holds the coefficients,
/// highest power first.
pub(crate) fn berkowitz_i128(m: &[i128], n: usize, ws: &mut Workspace) -> bool {
    ws.poly.clear();
    ws.poly.push(1);
    for r in 0..n {
        ws.t.clear();
        ws.t.push(1);
        let Some(d) = m[r * n + r].checked_neg() else { return false };
        ws.t.push(d);
        ws.col.clear();
        ws.col.extend((0..r).map(|i| m[i * n + r]));
        for k in 0..r {
            let mut s: i128 = 0;
            for i in 0..r {
                let Some(p) = m[r * n + i].checked_mul(ws.col[i]) else { return false };
                let Some(v) = s.checked_add(p) else { return false };
                s = v;
            }
            let Some(neg) = s.checked_neg() else { return false };
            ws.t.push(neg);
            if k + 1 < r {
                ws.next.clear();
                for i in 0..r {
                    let row = &m[i * n..i * n + r];
                    let mut acc: i128 = 0;
                    for (l, &a) in row.iter().enumerate() {
                        if a == 0 {
                            continue;
                        }
                        let Some(p) = a.checked_mul(ws.col[l]) else { return false };
                        let Some(v) = acc.checked_add(p) else { return false };
                        acc = v;
                    }
                    ws.next.push(acc);
                }
                std::mem::swap(&mut ws.col, &mut ws.next);
            }
        }
        ws.next.clear();
        for i in 0..r + 2 {
            let lo = i.saturating_sub(r + 1);
            let mut acc: i128 = 0;
            for k in lo..=i.min(r) {
                let Some(p) = ws.t[i - k].checked_mul(ws.poly[k]) else { return false };
                let Some(v) = acc.checked_add(p) else { return false };
                acc = v;
            }
            ws.next.push(acc);
        }
        std::mem::swap(&mut ws.poly, &mut ws.next);
    }
    true
}

impl Workspace {
    pub(crate) fn poly(&self) -> &[i128] {
        &self.poly
    }
}
