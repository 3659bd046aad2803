//! Exact arithmetic kernels: rational turns (roots of unity), cyclotomic
//! numbers in the power basis, and rational polynomials / truncated power
//! series.
//!
//! Everything here is arbitrary precision. No operation rounds, and integer
//! overflow is either impossible by construction or performed in a wider
//! type; there is no silent wraparound.

mod cycseries;
mod cyclotomic;
mod poly;
mod turn;

pub use cycseries::CycSeries;
pub use cyclotomic::{cyclotomic_minpoly, euler_phi, CycField, CycNum};
pub use poly::{series_reciprocal, PolySeries, SeriesError};
pub use turn::Turn;

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always stored fully reduced with a positive denominator, so equality is
/// structural.
pub type Rational = num_rational::BigRational;

use num_bigint::BigInt;

/// Convenience constructor for integer-valued [`Rational`]s.
pub fn rational_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Convenience constructor for `num/den` as a [`Rational`]. Panics if
/// `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}
