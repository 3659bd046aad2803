//! Exact arithmetic in cyclotomic fields.
//!
//! An element of `Q(ζ_N)` is stored in the power basis
//! `1, x, ..., x^{φ(N)-1}` modulo the `N`-th cyclotomic polynomial, with
//! rational coordinates. The embedding of a [`Turn`] of order dividing `N`
//! is a multiplicative homomorphism, so root-of-unity arithmetic done on
//! turns and in the field always agrees.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{PolySeries, Rational, Turn};

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    let mut divs: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    divs.sort_unstable();
    divs
}

/// `x^n - 1` as an integer polynomial.
fn x_pow_minus_one(n: u64) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    p
}

/// Exact division of integer polynomials by a monic divisor; panics if the
/// remainder is nonzero (callers only divide by known factors).
fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    assert!(dn >= dd);
    let mut rem: Vec<BigInt> = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for j in 0..=dd {
            let delta = &c * &den[j];
            rem[k + j] -= delta;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    quot
}

fn cyclotomic_int(n: u64) -> Vec<BigInt> {
    // Peel x^d - 1 by the cyclotomic polynomials of the proper divisors of
    // d, working up through the divisors of n. No factorization machinery;
    // only exact division.
    let mut memo: Vec<(u64, Vec<BigInt>)> = Vec::new();
    for d in divisors(n) {
        let mut poly = x_pow_minus_one(d);
        for (e, phi_e) in &memo {
            if d % e == 0 {
                poly = div_exact_monic(&poly, phi_e);
            }
        }
        memo.push((d, poly));
    }
    memo.pop().expect("n divides n").1
}

/// The `N`-th cyclotomic polynomial as an exact polynomial with integer
/// coefficients; its degree is `φ(N)`.
pub fn cyclotomic_minpoly(n: u64) -> PolySeries {
    let ints = cyclotomic_int(n);
    PolySeries::from_coeffs(
        ints.into_iter()
            .map(Rational::from_integer)
            .collect::<Vec<_>>(),
    )
}

/// A cyclotomic field `Q(ζ_N)` of fixed order, shared by the numbers living
/// in it. The order is fixed per computation (callers pick the lcm of every
/// root of unity they will touch up front), so no mid-computation field
/// conversions ever happen.
#[derive(Debug)]
pub struct CycField {
    order: u64,
    phi: usize,
    minpoly: Vec<BigInt>,
}

impl CycField {
    pub fn new(order: u64) -> Arc<CycField> {
        assert!(order >= 1);
        let minpoly = cyclotomic_int(order);
        Arc::new(CycField {
            order,
            phi: minpoly.len() - 1,
            minpoly,
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Degree `φ(N)` of the field over the rationals.
    pub fn phi(&self) -> usize {
        self.phi
    }

    pub fn zero(self: &Arc<Self>) -> CycNum {
        CycNum {
            field: Arc::clone(self),
            coeffs: vec![Rational::zero(); self.phi],
        }
    }

    pub fn one(self: &Arc<Self>) -> CycNum {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(self: &Arc<Self>, q: Rational) -> CycNum {
        let mut coeffs = vec![Rational::zero(); self.phi];
        coeffs[0] = q;
        CycNum {
            field: Arc::clone(self),
            coeffs,
        }
    }

    /// Embed a root of unity. Panics unless the turn's order divides the
    /// field order; callers fix the field order as an lcm, so this holds by
    /// construction.
    pub fn embed(self: &Arc<Self>, t: Turn) -> CycNum {
        let e = t.exponent_in(self.order) as usize;
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = Rational::one();
        CycNum {
            field: Arc::clone(self),
            coeffs: self.reduce(coeffs),
        }
    }

    /// Remainder of a rational polynomial modulo the (monic) cyclotomic
    /// minimal polynomial, padded to length `φ(N)`.
    fn reduce(&self, mut coeffs: Vec<Rational>) -> Vec<Rational> {
        for k in (self.phi..coeffs.len()).rev() {
            if coeffs[k].is_zero() {
                continue;
            }
            let c = core::mem::replace(&mut coeffs[k], Rational::zero());
            for j in 0..self.phi {
                if !self.minpoly[j].is_zero() {
                    let delta = &c * Rational::from_integer(self.minpoly[j].clone());
                    coeffs[k - self.phi + j] -= delta;
                }
            }
        }
        coeffs.resize(self.phi, Rational::zero());
        coeffs
    }
}

/// An element of a fixed cyclotomic field, in the power basis modulo the
/// cyclotomic polynomial. Arithmetic is exact; equality is structural
/// because the basis representation is canonical.
#[derive(Clone)]
pub struct CycNum {
    field: Arc<CycField>,
    coeffs: Vec<Rational>,
}

impl CycNum {
    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True iff the element lies in `Q`, i.e. every coordinate beyond the
    /// constant one vanishes.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn mul_rational(&self, q: &Rational) -> CycNum {
        CycNum {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    fn assert_same_field(&self, other: &CycNum) {
        assert_eq!(
            self.field.order, other.field.order,
            "cyclotomic numbers from different field orders"
        );
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &CycNum) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycNum {}

impl Add for &CycNum {
    type Output = CycNum;

    fn add(self, rhs: &CycNum) -> CycNum {
        self.assert_same_field(rhs);
        CycNum {
            field: Arc::clone(&self.field),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CycNum {
    type Output = CycNum;

    fn sub(self, rhs: &CycNum) -> CycNum {
        self.assert_same_field(rhs);
        CycNum {
            field: Arc::clone(&self.field),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &CycNum {
    type Output = CycNum;

    fn neg(self) -> CycNum {
        CycNum {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CycNum {
    type Output = CycNum;

    fn mul(self, rhs: &CycNum) -> CycNum {
        self.assert_same_field(rhs);
        let phi = self.field.phi;
        let mut conv = vec![Rational::zero(); 2 * phi.max(1) - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        CycNum {
            field: Arc::clone(&self.field),
            coeffs: self.field.reduce(conv),
        }
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum(order {}; {:?})", self.field.order, self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational_int;

    #[test]
    fn minpoly_examples() {
        // x - 1
        assert_eq!(cyclotomic_minpoly(1), PolySeries::from_ints(&[-1, 1]));
        // x^2 + 1, the minimal polynomial of i
        assert_eq!(cyclotomic_minpoly(4), PolySeries::from_ints(&[1, 0, 1]));
        // x^4 - x^2 + 1, frozen from dividing x^12 - 1 by the lower
        // cyclotomic polynomials with the long-division oracle below
        assert_eq!(
            cyclotomic_minpoly(12),
            PolySeries::from_ints(&[1, 0, -1, 0, 1])
        );
    }

    #[test]
    fn minpoly_degree_and_product() {
        // deg Φ_N = φ(N), and the product of Φ_d over d | N re-expands to
        // x^N - 1. This is the independent re-expansion check for the
        // iterated-division construction.
        for n in 1..=30u64 {
            let phi_n = cyclotomic_minpoly(n);
            assert_eq!(phi_n.degree(), Some(euler_phi(n) as usize));
            let mut prod = PolySeries::from_ints(&[1]);
            for d in 1..=n {
                if n % d == 0 {
                    prod = prod.mul_poly(&cyclotomic_minpoly(d));
                }
            }
            let mut expect = vec![0i64; n as usize + 1];
            expect[0] = -1;
            expect[n as usize] = 1;
            assert_eq!(prod, PolySeries::from_ints(&expect));
        }
    }

    #[test]
    fn prime_minpoly_is_all_ones() {
        for p in [2u64, 3, 5, 7, 11] {
            let expect: Vec<i64> = vec![1; p as usize];
            assert_eq!(cyclotomic_minpoly(p), PolySeries::from_ints(&expect));
        }
    }

    #[test]
    fn embedding_multiplies() {
        let field = CycField::new(12);
        let a = Turn::new(1, 4);
        let b = Turn::new(1, 3);
        let prod = &field.embed(a) * &field.embed(b);
        assert_eq!(prod, field.embed(a + b));
    }

    #[test]
    fn embed_minus_one() {
        let field = CycField::new(2);
        let minus_one = field.embed(Turn::new(1, 2));
        assert_eq!(minus_one.to_rational(), Some(rational_int(-1)));
    }

    #[test]
    fn primitive_root_powers_sum_to_zero() {
        // 1 + ζ_5 + ζ_5^2 + ζ_5^3 + ζ_5^4 = 0
        let field = CycField::new(5);
        let mut acc = field.zero();
        for k in 0..5 {
            acc = &acc + &field.embed(Turn::new(k, 5));
        }
        assert!(acc.is_zero());
        assert!(acc.is_rational());
    }

    #[test]
    fn irrational_detected() {
        let field = CycField::new(5);
        let zeta = field.embed(Turn::new(1, 5));
        assert!(!zeta.is_rational());
        assert_eq!(zeta.to_rational(), None);
    }
}
