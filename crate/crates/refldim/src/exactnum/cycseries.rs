//! Truncated power series with cyclotomic coefficients.
//!
//! This is the workhorse for Molien sums: the reciprocal of
//! `det(1 - t·g)` for a monomial element factors into per-cycle binomials
//! `1 - ζ^s t^c`, and dividing a truncated series by such a binomial is a
//! single linear pass. Nothing here ever inverts a full polynomial.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{CycField, CycNum, PolySeries, Rational, Turn};

/// A power series with coefficients in one fixed cyclotomic field,
/// truncated at an explicit bound (`coeffs.len() - 1`).
#[derive(Clone, Debug)]
pub struct CycSeries {
    field: Arc<CycField>,
    coeffs: Vec<CycNum>,
}

impl PartialEq for CycSeries {
    fn eq(&self, other: &CycSeries) -> bool {
        self.field.order() == other.field.order() && self.coeffs == other.coeffs
    }
}

impl CycSeries {
    /// The constant series 1 carried to `bound`.
    pub fn one(field: &Arc<CycField>, bound: usize) -> CycSeries {
        let mut coeffs = Vec::with_capacity(bound + 1);
        coeffs.push(field.one());
        for _ in 0..bound {
            coeffs.push(field.zero());
        }
        CycSeries {
            field: Arc::clone(field),
            coeffs,
        }
    }

    pub fn zero(field: &Arc<CycField>, bound: usize) -> CycSeries {
        let coeffs = (0..=bound).map(|_| field.zero()).collect();
        CycSeries {
            field: Arc::clone(field),
            coeffs,
        }
    }

    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &CycNum {
        &self.coeffs[k]
    }

    /// Divide in place by `1 - ζ t^c`, where `ζ` is the given root of
    /// unity; exact up to the truncation bound. This is the recurrence
    /// `new[j] = old[j] + ζ · new[j - c]`.
    pub fn div_one_minus_root_power(&mut self, zeta: Turn, c: usize) {
        assert!(c >= 1);
        let alpha = self.field.embed(zeta);
        for j in c..self.coeffs.len() {
            let carried = &self.coeffs[j - c] * &alpha;
            self.coeffs[j] = &self.coeffs[j] + &carried;
        }
    }

    /// Multiply in place by `1 - t`.
    pub fn mul_one_minus_t(&mut self) {
        for j in (1..self.coeffs.len()).rev() {
            let prev = self.coeffs[j - 1].clone();
            self.coeffs[j] = &self.coeffs[j] - &prev;
        }
    }

    /// `self += scale · other`. Bounds and fields must match.
    pub fn add_scaled(&mut self, other: &CycSeries, scale: &Rational) {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = &*a + &b.mul_rational(scale);
        }
    }

    /// Scale every coefficient by a rational factor.
    pub fn scale(&mut self, q: &Rational) {
        for c in self.coeffs.iter_mut() {
            *c = c.mul_rational(q);
        }
    }

    /// Collapse to a rational-coefficient series. Returns `None` if any
    /// coefficient has a nonzero irrational part.
    pub fn to_rational_series(&self) -> Option<PolySeries> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.to_rational()?);
        }
        Some(PolySeries::from_coeffs(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational_int;
    use num_traits::Zero;

    #[test]
    fn binomial_division_is_geometric_series() {
        // 1/(1 - t^2) = 1 + t^2 + t^4 + ...
        let field = CycField::new(1);
        let mut s = CycSeries::one(&field, 5);
        s.div_one_minus_root_power(Turn::zero(), 2);
        let rat = s.to_rational_series().unwrap();
        assert_eq!(rat, PolySeries::from_ints(&[1, 0, 1, 0, 1, 0]));
    }

    #[test]
    fn division_matches_full_reciprocal() {
        // 1/((1 - t^2)(1 - t^3)) two ways: cycle-binomial divisions vs the
        // generic series reciprocal on rational polynomials.
        let field = CycField::new(1);
        let mut s = CycSeries::one(&field, 8);
        s.div_one_minus_root_power(Turn::zero(), 2);
        s.div_one_minus_root_power(Turn::zero(), 3);
        let via_cyc = s.to_rational_series().unwrap();

        let poly =
            PolySeries::from_ints(&[1, 0, -1]).mul_poly(&PolySeries::from_ints(&[1, 0, 0, -1]));
        let via_recip = poly.reciprocal(8).unwrap();
        assert_eq!(via_cyc, via_recip);
    }

    #[test]
    fn root_of_unity_phases_average_out() {
        // Averaging 1/(1 - ζ_3^k t) over k = 0, 1, 2 gives 1 + t^3 + t^6.
        let field = CycField::new(3);
        let mut acc = CycSeries::zero(&field, 6);
        for k in 0..3 {
            let mut s = CycSeries::one(&field, 6);
            s.div_one_minus_root_power(Turn::new(k, 3), 1);
            acc.add_scaled(&s, &rational_int(1));
        }
        acc.scale(&crate::exactnum::rational(1, 3));
        let rat = acc.to_rational_series().unwrap();
        assert_eq!(rat, PolySeries::from_ints(&[1, 0, 0, 1, 0, 0, 1]));
    }

    #[test]
    fn mul_one_minus_t_undoes_division() {
        let field = CycField::new(1);
        let mut s = CycSeries::one(&field, 6);
        s.div_one_minus_root_power(Turn::zero(), 1);
        s.mul_one_minus_t();
        let rat = s.to_rational_series().unwrap();
        assert!(rat.coeff(0) == rational_int(1) && (1..=6).all(|k| rat.coeff(k).is_zero()));
    }
}
