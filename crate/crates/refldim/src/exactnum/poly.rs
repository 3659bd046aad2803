//! Polynomials and truncated power series with exact rational coefficients.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::Rational;

/// Errors from series/polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// Reciprocal of a series whose constant term is zero.
    NotInvertible,
    /// An exact polynomial division left a nonzero remainder.
    NonExactDivision { divisor: String },
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::NotInvertible => write!(f, "not invertible as a series"),
            SeriesError::NonExactDivision { divisor } => {
                write!(f, "division by {divisor} is not exact")
            }
        }
    }
}

impl core::error::Error for SeriesError {}

/// A polynomial, or a power series truncated at an explicit bound, with
/// exact rational coefficients indexed by exponent.
///
/// `coeffs[k]` is the coefficient of `t^k`; the truncation bound is
/// `coeffs.len() - 1`. Truncation bounds are always explicit parameters of
/// the operations that need them, never ambient state.
#[derive(Clone, PartialEq, Eq)]
pub struct PolySeries {
    coeffs: Vec<Rational>,
}

impl PolySeries {
    /// Build from coefficients (`coeffs[k]` multiplies `t^k`). Must be
    /// nonempty.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> PolySeries {
        assert!(!coeffs.is_empty(), "a series has at least a constant term");
        PolySeries { coeffs }
    }

    /// Build from small integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> PolySeries {
        PolySeries::from_coeffs(coeffs.iter().map(|&c| super::rational_int(c)).collect())
    }

    /// The constant series 1 carried to `bound`.
    pub fn one(bound: usize) -> PolySeries {
        let mut coeffs = vec![Rational::zero(); bound + 1];
        coeffs[0] = Rational::one();
        PolySeries { coeffs }
    }

    /// Truncation bound (largest represented exponent).
    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^k`; zero beyond the truncation bound.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree as an exact polynomial: the largest exponent with a nonzero
    /// coefficient, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// True iff this is the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Re-truncate (extend with zeros or drop high coefficients).
    pub fn truncated(&self, bound: usize) -> PolySeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(bound + 1, Rational::zero());
        coeffs.truncate(bound + 1);
        PolySeries { coeffs }
    }

    /// Product truncated at `bound`.
    pub fn mul_truncated(&self, other: &PolySeries, bound: usize) -> PolySeries {
        let mut coeffs = vec![Rational::zero(); bound + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(bound + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > bound {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        PolySeries { coeffs }
    }

    /// Exact polynomial product (no truncation).
    pub fn mul_poly(&self, other: &PolySeries) -> PolySeries {
        let da = self.degree().unwrap_or(0);
        let db = other.degree().unwrap_or(0);
        self.mul_truncated(other, da + db)
    }

    /// Multiplicative inverse as a power series, carried to `bound`.
    ///
    /// `s.mul_truncated(&s.reciprocal(b)?, b)` is the series 1. Fails if the
    /// constant term is zero.
    pub fn reciprocal(&self, bound: usize) -> Result<PolySeries, SeriesError> {
        if self.coeffs[0].is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let c0 = &self.coeffs[0];
        let mut inv = vec![Rational::zero(); bound + 1];
        inv[0] = c0.recip();
        for k in 1..=bound {
            let mut acc = Rational::zero();
            for j in 1..=k.min(self.coeffs.len() - 1) {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &inv[k - j];
                }
            }
            inv[k] = -acc / c0;
        }
        Ok(PolySeries { coeffs: inv })
    }

    /// Exact division of this polynomial by `1 - t^d`, with a zero-remainder
    /// check. `d >= 1`.
    pub fn div_exact_one_minus_power(&self, d: usize) -> Result<PolySeries, SeriesError> {
        assert!(d >= 1);
        let deg = match self.degree() {
            Some(deg) => deg,
            None => return Ok(PolySeries::from_ints(&[0])),
        };
        let err = || SeriesError::NonExactDivision {
            divisor: alloc::format!("1 - t^{d}"),
        };
        if deg < d {
            // Only divisible if self is zero, which was handled above.
            return Err(err());
        }
        // q = self / (1 - t^d)  <=>  q[j] = self[j] + q[j - d]
        let qdeg = deg - d;
        let mut q = vec![Rational::zero(); qdeg + 1];
        for j in 0..=qdeg {
            q[j] = self.coeff(j);
            if j >= d {
                let prev = q[j - d].clone();
                q[j] += prev;
            }
        }
        // The same recurrence on the top d coefficients is the remainder.
        for j in (qdeg + 1)..=deg {
            let carried = if j >= d && j - d <= qdeg {
                q[j - d].clone()
            } else {
                Rational::zero()
            };
            if self.coeff(j) + carried != Rational::zero() {
                return Err(err());
            }
        }
        Ok(PolySeries { coeffs: q })
    }
}

/// Multiplicative inverse of `s` as a power series up to its own truncation
/// bound. Fails with [`SeriesError::NotInvertible`] when the constant term
/// is zero.
pub fn series_reciprocal(s: &PolySeries) -> Result<PolySeries, SeriesError> {
    s.reciprocal(s.bound())
}

impl fmt::Debug for PolySeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({c})t^{k}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
