//! Exact polynomial arithmetic over the integers and rationals.

mod bi;
mod encode;
mod interp;
mod rational;
mod uni;

pub use bi::{parse_bipoly, render_rational, render_uni, BiPolyZ};
pub use encode::{canonical_decode, canonical_encode, fingerprint, fingerprint_bytes, Encoder};
pub use interp::interpolate_integer_points;
pub(crate) use interp::interpolate_consecutive_i128;
pub use rational::{parse_rational, RationalScalar};
pub use uni::{Poly, UniPolyQ, UniPolyZ};

/// `p` with `alpha = a` substituted, as a polynomial in `x`.
pub fn bipoly_eval_alpha(p: &BiPolyZ, a: &RationalScalar) -> UniPolyQ {
    p.eval_alpha(a)
}
