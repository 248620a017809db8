//! Exact A-alpha characteristic polynomials of graphs.
//!
//! `A_alpha(G) = alpha * D(G) + (1 - alpha) * A(G)` interpolates between the
//! adjacency matrix (alpha = 0) and half the signless Laplacian (alpha = 1/2).
//! Its characteristic polynomial is computed here as an exact bivariate
//! polynomial in `x` and `alpha` with integer coefficients, from which the
//! crate derives closed-form coefficient checks, structural invariants and a
//! cospectrality census over graph6 collections.

pub mod census;
pub mod coeffs;
pub mod engine;
pub mod error;
pub mod graph;
pub mod poly;
pub mod verify;

pub use engine::{alpha_charpoly, charpoly_int, special_charpolys};
pub use graph::{parse_graph6, FamilySpec, Graph};
pub use poly::{BiPolyZ, UniPolyZ};
pub use census::{run_census, CensusOptions, CensusReport, MateFamily};
pub use coeffs::{aalpha_first_four, decode_invariants, CoeffInputs};
