//! Exact arithmetic in `Z[q, a, b]`, plus fractions whose denominators are
//! products of `(1 - q^i)`.

mod poly;
mod qfrac;
mod qfuncs;

pub use poly::{Monomial, Poly, Substitution, Var};
pub use qfrac::QFrac;
pub use qfuncs::{binomial, complete_homogeneous, q_pochhammer, qbinom, qbinom_ext, qrising, tri};
