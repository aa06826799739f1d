//! The scalar tower: arbitrary-precision rationals, polynomials in the
//! formal parameter α, and rational functions in α with canonical forms.
//!
//! Invariants:
//! - [`Rat`] is always reduced with a positive denominator; zero is `0/1`.
//! - [`AlphaPoly`] stores dense coefficients by degree; the leading
//!   coefficient is nonzero unless the polynomial is zero (empty).
//! - [`AlphaRat`] keeps `gcd(num, den) = 1` with a monic denominator, so
//!   equality is structural comparison.
//!
//! The parameter β of the physical model enters only through the
//! specialization α = 1/β, performed by [`AlphaRat::evaluate_at`].

mod parse;
mod poly;
mod rat;
mod ratfn;

pub use parse::parse_alpha_rat;
pub use poly::AlphaPoly;
pub use rat::Rat;
pub use ratfn::AlphaRat;

use thiserror::Error;

/// Errors from scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("pole at α = {0}: denominator {1} vanishes")]
    Pole(Rat, AlphaPoly),
    #[error("parse error: {0}")]
    Parse(String),
}
