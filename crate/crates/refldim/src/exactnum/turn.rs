//! Roots of unity as reduced rational angles.

use core::cmp::Ordering;
use core::fmt;

use crate::util::gcd;

/// A root of unity `e^{2πi · num/den}`, stored as the reduced fraction
/// `num/den` of a full rotation with `0 <= num < den`.
///
/// The representation is canonical: `gcd(num, den) = 1`, so structural
/// equality is equality of the represented eigenvalue, and `Turn` can be
/// used directly as a map key when counting eigenvalue multiplicities.
/// `Turn::new(0, 1)` is the unique representation of the eigenvalue `1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Turn {
    num: u64,
    den: u64,
}

impl Turn {
    /// Reduce `num/den` modulo 1 into canonical form. Panics if `den == 0`.
    pub fn new(num: u64, den: u64) -> Turn {
        assert!(den > 0, "turn denominator must be positive");
        let num = num % den;
        let g = gcd(num, den);
        if num == 0 {
            Turn { num: 0, den: 1 }
        } else {
            Turn {
                num: num / g,
                den: den / g,
            }
        }
    }

    /// The eigenvalue 1.
    pub fn zero() -> Turn {
        Turn { num: 0, den: 1 }
    }

    /// The primitive `m`-th root of unity `ζ_m = e^{2πi/m}`.
    ///
    /// For `m = 1` this is the eigenvalue 1.
    pub fn primitive(m: u64) -> Turn {
        Turn::new(1, m)
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    /// Multiplicative order of the root of unity.
    pub fn order(&self) -> u64 {
        self.den
    }

    /// `k`-th power, i.e. the reduced turn `k·num/den mod 1`. Negative `k`
    /// inverts. `t.pow(t.order() as i64)` is always [`Turn::zero`].
    pub fn pow(&self, k: i64) -> Turn {
        // Reduce k mod den first so the product fits in u128 regardless of
        // the magnitudes involved.
        let k = k.rem_euclid(self.den as i64) as u64;
        let prod = (k as u128) * (self.num as u128) % (self.den as u128);
        Turn::new(prod as u64, self.den)
    }

    /// Exponent of this turn inside the cyclic group of order `n`, i.e. the
    /// `e` with `self = ζ_n^e`. Panics unless the order divides `n`.
    pub fn exponent_in(&self, n: u64) -> u64 {
        assert!(
            n % self.den == 0,
            "turn of order {} does not lie in the order-{} cyclotomic field",
            self.den,
            n
        );
        self.num * (n / self.den)
    }
}

/// Addition of turns is multiplication of the roots of unity they represent.
impl core::ops::Add for Turn {
    type Output = Turn;

    fn add(self, rhs: Turn) -> Turn {
        let den = crate::util::lcm(self.den, rhs.den);
        let a = (self.num as u128) * ((den / self.den) as u128);
        let b = (rhs.num as u128) * ((den / rhs.den) as u128);
        let sum = (a + b) % (den as u128);
        Turn::new(sum as u64, den)
    }
}

impl Ord for Turn {
    fn cmp(&self, other: &Turn) -> Ordering {
        // Compare num1/den1 with num2/den2 by cross multiplication.
        let lhs = (self.num as u128) * (other.den as u128);
        let rhs = (other.num as u128) * (self.den as u128);
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Turn {
    fn partial_cmp(&self, other: &Turn) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Turn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Turn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Turn({}/{})", self.num, self.den)
    }
}
