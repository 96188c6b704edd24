//! Exact q-analogue sequences (q-Catalan, q-Narayana, Pólya–Gessel, q-Motzkin,
//! Rogers–Szegő, q-Gould), their Hankel determinants and J-fraction data.
//!
//! Everything is computed symbolically in `Z[q, a, b]`; no floating point is
//! involved anywhere. The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod error;
pub mod hankel;
pub mod jfraction;
pub mod polyring;
pub mod sequences;
pub mod series;
pub mod verify;

pub use error::{HankelError, JFractionError, PolyError, SeriesError, VerifyError};
pub use polyring::{Monomial, Poly, QFrac, Substitution, Var};
