//! Exact torus localization for Hilbert schemes of points on toric surfaces,
//! symmetric products of ℙ¹, and the sheaf-counting identities built from them.
//!
//! All answers are exact rationals. Integrals are computed as sums over torus
//! fixed points evaluated at random rational specializations of the
//! equivariant parameters; agreement across specializations certifies the result.

pub mod abel;
pub mod arith;
pub mod character;
pub mod cli;
pub mod error;
pub mod hilb;
pub mod identities;
pub mod toric;

pub use arith::{format_rational, GradedPoly, LinearForm, Rational};
pub use character::Character;
pub use error::{Error, Result};
