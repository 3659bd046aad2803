//! Symbolic group specifications, fundamental-degree tables, and scalar
//! facts (order, centre order) across the Shephard-Todd classification.
//!
//! Groups are described symbolically — family plus parameters, or an
//! exceptional index — never as matrix lists. Degrees of the infinite
//! families come from the classification formulas; the exceptional degrees
//! ship as a versioned data file that is invariant-checked at load time.

mod table;

pub use table::{exceptional_table, parse_exceptional_table, ExceptionalEntry, ExceptionalTable};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::util::{gcd, is_prime};

/// Errors from constructing or querying group specifications.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogError {
    /// Parameters violate the family's constraints (e.g. `l` not dividing
    /// `m` for `G(m,l,n)`).
    InvalidParameters(String),
    /// Exceptional index outside 4..=37.
    UnknownExceptional(u8),
    /// The representation has no fundamental degrees in the
    /// pseudo-reflection sense (alternating groups, natural symmetric
    /// representation).
    NoFundamentalDegrees(String),
    /// The requested base characteristic divides the group order, violating
    /// the standing hypothesis.
    CharacteristicDividesOrder { base_char: u64, group: String },
    /// Base characteristic that is neither 0 nor prime.
    CharacteristicNotPrime(u64),
    /// A malformed record in the exceptional degree table.
    TableFormat { line: usize, reason: String },
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::InvalidParameters(reason) => {
                write!(f, "invalid group parameters: {reason}")
            }
            CatalogError::UnknownExceptional(index) => {
                write!(f, "no exceptional group ST{index}: indices run 4..=37")
            }
            CatalogError::NoFundamentalDegrees(spec) => write!(
                f,
                "no fundamental degrees for {spec}: representation is not \
                 generated by pseudo-reflections"
            ),
            CatalogError::CharacteristicDividesOrder { base_char, group } => write!(
                f,
                "base characteristic {base_char} divides |{group}|, violating \
                 the standing hypothesis char(k) does not divide |G|"
            ),
            CatalogError::CharacteristicNotPrime(q) => {
                write!(f, "base characteristic must be 0 or a prime, got {q}")
            }
            CatalogError::TableFormat { line, reason } => {
                write!(f, "exceptional table line {line}: {reason}")
            }
        }
    }
}

impl core::error::Error for CatalogError {}

/// Which representation of the symmetric group a spec refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetricRep {
    /// The irreducible `(n-1)`-dimensional reflection representation; the
    /// default, and the one with fundamental degrees `2, ..., n`.
    Standard,
    /// The `n`-dimensional permutation representation. An explicit opt-in:
    /// it is the monomial picture shared with the alternating groups, and
    /// carries no degree vector here.
    Natural,
}

/// The family-plus-parameters part of a group specification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupFamily {
    /// Cyclic group of order `m` acting by scalars on a line.
    Cyclic { order: u64 },
    /// Symmetric group `S_n` in the chosen representation.
    Symmetric { n: u64, rep: SymmetricRep },
    /// Alternating group `A_n` in the natural `n`-dimensional permutation
    /// representation. Contains no pseudo-reflections.
    Alternating { n: u64 },
    /// Imprimitive monomial group `G(m,l,n)`: monomial `n x n` matrices
    /// with `m`-th root-of-unity entries whose phase exponents sum to
    /// `0 mod l`, extended by all permutations. Requires `l | m`.
    Imprimitive { m: u64, l: u64, n: u64 },
    /// Exceptional group `ST4`..`ST37`.
    Exceptional { index: u8 },
}

/// Symbolic description of a group together with the base-field
/// characteristic (`0` for characteristic zero).
///
/// Constructors normalize degenerate parameters — `G(1,1,n)` becomes the
/// standard `S_n` and `G(m,l,1)` the cyclic group of order `m/l` — and
/// enforce the standing hypothesis that the characteristic does not divide
/// the group order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    family: GroupFamily,
    base_char: u64,
}

/// Sorted multiset of fundamental invariant degrees `d_1 <= ... <= d_n`.
///
/// The product of the degrees is the group order and the length is the rank
/// of the reflection representation; both are enforced for every catalog
/// entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeVector(Vec<u64>);

impl DegreeVector {
    pub fn new(mut degrees: Vec<u64>) -> DegreeVector {
        degrees.sort_unstable();
        DegreeVector(degrees)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// Rank of the reflection representation.
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn max(&self) -> Option<u64> {
        self.0.last().copied()
    }

    pub fn product(&self) -> BigUint {
        self.0
            .iter()
            .fold(BigUint::one(), |acc, &d| acc * BigUint::from(d))
    }

    /// Greatest common divisor of the degrees; 0 only for an empty vector.
    pub fn gcd(&self) -> u64 {
        self.0.iter().fold(0, |acc, &d| gcd(acc, d))
    }

    /// Total degree `d_1 + ... + d_n`.
    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `Σ (d_i - 1)`, the expected number of pseudo-reflections.
    pub fn reflection_sum(&self) -> u64 {
        self.0.iter().map(|&d| d - 1).sum()
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

/// Outcome of the characteristic check, including the reminder that
/// `a(m) = 0` whenever the characteristic divides `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicReport {
    /// Whether the standing hypothesis char(k) ∤ |G| holds.
    pub valid: bool,
    pub base_char: u64,
    /// `Some(q)` when a positive characteristic `q` is in force, recording
    /// the convention `a(m) = 0` for every multiple `m` of `q`.
    pub zero_convention: Option<u64>,
}

impl GroupSpec {
    fn from_family(family: GroupFamily) -> GroupSpec {
        GroupSpec {
            family,
            base_char: 0,
        }
    }

    /// Cyclic group of order `m >= 1` on a line.
    pub fn cyclic(m: u64) -> Result<GroupSpec, CatalogError> {
        if m == 0 {
            return Err(CatalogError::InvalidParameters(
                "cyclic order must be positive".into(),
            ));
        }
        Ok(GroupSpec::from_family(GroupFamily::Cyclic { order: m }))
    }

    /// `S_n` in the standard `(n-1)`-dimensional reflection representation.
    pub fn symmetric(n: u64) -> Result<GroupSpec, CatalogError> {
        if n == 0 {
            return Err(CatalogError::InvalidParameters(
                "symmetric group degree must be positive".into(),
            ));
        }
        Ok(GroupSpec::from_family(GroupFamily::Symmetric {
            n,
            rep: SymmetricRep::Standard,
        }))
    }

    /// `S_n` in the natural `n`-dimensional permutation representation.
    pub fn symmetric_natural(n: u64) -> Result<GroupSpec, CatalogError> {
        if n == 0 {
            return Err(CatalogError::InvalidParameters(
                "symmetric group degree must be positive".into(),
            ));
        }
        Ok(GroupSpec::from_family(GroupFamily::Symmetric {
            n,
            rep: SymmetricRep::Natural,
        }))
    }

    /// `A_n` (n >= 2) in the natural permutation representation.
    pub fn alternating(n: u64) -> Result<GroupSpec, CatalogError> {
        if n < 2 {
            return Err(CatalogError::InvalidParameters(
                "alternating group needs n >= 2".into(),
            ));
        }
        Ok(GroupSpec::from_family(GroupFamily::Alternating { n }))
    }

    /// `G(m,l,n)` with `l | m`. Degenerate parameters normalize away:
    /// `m = 1` yields the standard `S_n`, and `n = 1` the cyclic group of
    /// order `m/l`.
    pub fn imprimitive(m: u64, l: u64, n: u64) -> Result<GroupSpec, CatalogError> {
        if m == 0 || l == 0 || n == 0 {
            return Err(CatalogError::InvalidParameters(
                "G(m,l,n) parameters must be positive".into(),
            ));
        }
        if m % l != 0 {
            return Err(CatalogError::InvalidParameters(format!(
                "G({m},{l},{n}): l must divide m"
            )));
        }
        if n == 1 {
            return GroupSpec::cyclic(m / l);
        }
        if m == 1 {
            return GroupSpec::symmetric(n);
        }
        Ok(GroupSpec::from_family(GroupFamily::Imprimitive { m, l, n }))
    }

    /// Exceptional group `ST4`..`ST37`.
    pub fn exceptional(index: u8) -> Result<GroupSpec, CatalogError> {
        if !(4..=37).contains(&index) {
            return Err(CatalogError::UnknownExceptional(index));
        }
        Ok(GroupSpec::from_family(GroupFamily::Exceptional { index }))
    }

    /// Set the base characteristic: `0`, or a prime not dividing the group
    /// order. A prime dividing the order is a constructor error, per the
    /// standing hypothesis.
    pub fn with_char(self, q: u64) -> Result<GroupSpec, CatalogError> {
        if q == 0 {
            return Ok(GroupSpec {
                base_char: 0,
                ..self
            });
        }
        if !is_prime(q) {
            return Err(CatalogError::CharacteristicNotPrime(q));
        }
        let candidate = GroupSpec {
            base_char: q,
            ..self
        };
        let report = candidate.validate_characteristic();
        if report.valid {
            Ok(candidate)
        } else {
            Err(CatalogError::CharacteristicDividesOrder {
                base_char: q,
                group: format!("{self}"),
            })
        }
    }

    /// Set the base characteristic without the divisibility check. Only for
    /// probing specs that [`GroupSpec::with_char`] would reject;
    /// [`GroupSpec::validate_characteristic`] reports the violation.
    pub fn with_char_unchecked(self, q: u64) -> GroupSpec {
        GroupSpec {
            base_char: q,
            ..self
        }
    }

    pub fn family(&self) -> &GroupFamily {
        &self.family
    }

    pub fn base_char(&self) -> u64 {
        self.base_char
    }

    /// Check the standing hypothesis char(k) ∤ |G| and report the
    /// `a(m) = 0` convention that a positive characteristic puts in force.
    pub fn validate_characteristic(&self) -> CharacteristicReport {
        if self.base_char == 0 {
            return CharacteristicReport {
                valid: true,
                base_char: 0,
                zero_convention: None,
            };
        }
        let order = self.group_order();
        let q = BigUint::from(self.base_char);
        CharacteristicReport {
            valid: (order % q) != BigUint::from(0u32),
            base_char: self.base_char,
            zero_convention: Some(self.base_char),
        }
    }

    /// Exact group order.
    pub fn group_order(&self) -> BigUint {
        match self.family {
            GroupFamily::Cyclic { order } => BigUint::from(order),
            GroupFamily::Symmetric { n, .. } => factorial(n),
            GroupFamily::Alternating { n } => factorial(n) / 2u32,
            GroupFamily::Imprimitive { m, l, n } => {
                BigUint::from(m).pow(n as u32) * factorial(n) / BigUint::from(l)
            }
            GroupFamily::Exceptional { index } => {
                BigUint::from(exceptional_table().entry(index).order)
            }
        }
    }

    /// Fundamental invariant degrees.
    ///
    /// Alternating groups and the natural symmetric representation have no
    /// degree vector in this sense and return an error.
    pub fn degrees(&self) -> Result<DegreeVector, CatalogError> {
        match self.family {
            GroupFamily::Cyclic { order } => Ok(DegreeVector::new(alloc::vec![order])),
            GroupFamily::Symmetric {
                n,
                rep: SymmetricRep::Standard,
            } => Ok(DegreeVector::new((2..=n).collect())),
            GroupFamily::Symmetric {
                rep: SymmetricRep::Natural,
                ..
            }
            | GroupFamily::Alternating { .. } => {
                Err(CatalogError::NoFundamentalDegrees(format!("{self}")))
            }
            GroupFamily::Imprimitive { m, l, n } => {
                let mut degrees: Vec<u64> = (1..n).map(|i| i * m).collect();
                degrees.push(m * n / l);
                Ok(DegreeVector::new(degrees))
            }
            GroupFamily::Exceptional { index } => {
                Ok(exceptional_table().entry(index).degrees.clone())
            }
        }
    }

    /// Order of the centre: the greatest common divisor of the degrees.
    pub fn centre_order(&self) -> Result<u64, CatalogError> {
        Ok(self.degrees()?.gcd())
    }

    /// Dimension of the representation the spec describes.
    pub fn rep_dimension(&self) -> u64 {
        match self.family {
            GroupFamily::Cyclic { .. } => 1,
            GroupFamily::Symmetric {
                n,
                rep: SymmetricRep::Standard,
            } => n - 1,
            GroupFamily::Symmetric {
                n,
                rep: SymmetricRep::Natural,
            } => n,
            GroupFamily::Alternating { n } => n,
            GroupFamily::Imprimitive { n, .. } => n,
            GroupFamily::Exceptional { index } => exceptional_table().entry(index).rank as u64,
        }
    }

    /// Whether the spec carries fundamental degrees, i.e. describes a
    /// representation generated by pseudo-reflections in the catalog's
    /// sense.
    pub fn is_reflection_spec(&self) -> bool {
        self.degrees().is_ok()
    }

    /// Whether the representation is irreducible. `G(2,2,2)` is the
    /// accepted-but-reducible imprimitive case; natural permutation
    /// representations always contain the trivial summand.
    pub fn is_irreducible(&self) -> bool {
        match self.family {
            GroupFamily::Cyclic { .. } => true,
            GroupFamily::Symmetric {
                n,
                rep: SymmetricRep::Standard,
            } => n >= 2,
            GroupFamily::Symmetric {
                rep: SymmetricRep::Natural,
                ..
            } => false,
            GroupFamily::Alternating { .. } => false,
            GroupFamily::Imprimitive { m, l, n } => (m, l, n) != (2, 2, 2),
            GroupFamily::Exceptional { .. } => true,
        }
    }
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            GroupFamily::Cyclic { order } => write!(f, "C{order}"),
            GroupFamily::Symmetric {
                n,
                rep: SymmetricRep::Standard,
            } => write!(f, "S{n}"),
            GroupFamily::Symmetric {
                n,
                rep: SymmetricRep::Natural,
            } => write!(f, "S{n}[natural]"),
            GroupFamily::Alternating { n } => write!(f, "A{n}"),
            GroupFamily::Imprimitive { m, l, n } => write!(f, "G({m},{l},{n})"),
            GroupFamily::Exceptional { index } => write!(f, "ST{index}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn degree_examples() {
        // W(E8)
        let e8 = GroupSpec::exceptional(37).unwrap();
        assert_eq!(
            e8.degrees().unwrap().as_slice(),
            [2, 8, 12, 14, 18, 20, 24, 30]
        );
        // W(E6)
        let e6 = GroupSpec::exceptional(35).unwrap();
        assert_eq!(e6.degrees().unwrap().as_slice(), [2, 5, 6, 8, 9, 12]);
        // G(3,3,3): m, 2m and n
        let g333 = GroupSpec::imprimitive(3, 3, 3).unwrap();
        assert_eq!(g333.degrees().unwrap().as_slice(), [3, 3, 6]);
        // trivial group on a line
        assert_eq!(
            GroupSpec::cyclic(1).unwrap().degrees().unwrap().as_slice(),
            [1]
        );
        // S4 standard (confirmed via the Molien oracle in molien tests)
        assert_eq!(
            GroupSpec::symmetric(4)
                .unwrap()
                .degrees()
                .unwrap()
                .as_slice(),
            [2, 3, 4]
        );
    }

    #[test]
    fn degrees_refused_without_reflections() {
        let alt = GroupSpec::alternating(5).unwrap();
        assert!(matches!(
            alt.degrees(),
            Err(CatalogError::NoFundamentalDegrees(_))
        ));
        let nat = GroupSpec::symmetric_natural(5).unwrap();
        assert!(nat.degrees().is_err());
        assert!(!alt.is_reflection_spec());
    }

    #[test]
    fn order_examples() {
        assert_eq!(GroupSpec::symmetric(5).unwrap().group_order(), big(120));
        // 3^3 * 3! / 3 = 54, which is also 3*3*6
        let g333 = GroupSpec::imprimitive(3, 3, 3).unwrap();
        assert_eq!(g333.group_order(), big(54));
        assert_eq!(g333.degrees().unwrap().product(), big(54));
        // product of the E8 degrees
        assert_eq!(
            GroupSpec::exceptional(37).unwrap().group_order(),
            big(696729600)
        );
    }

    #[test]
    fn centre_examples() {
        assert_eq!(GroupSpec::exceptional(35).unwrap().centre_order(), Ok(1));
        assert_eq!(GroupSpec::exceptional(37).unwrap().centre_order(), Ok(2));
        assert_eq!(GroupSpec::cyclic(7).unwrap().centre_order(), Ok(7));
    }

    #[test]
    fn characteristic_validation() {
        let s5 = GroupSpec::symmetric(5).unwrap();
        // 7 does not divide 120
        assert!(s5.with_char(7).unwrap().validate_characteristic().valid);
        // 5 divides 120: constructor refuses, unchecked probe reports it
        assert!(matches!(
            s5.with_char(5),
            Err(CatalogError::CharacteristicDividesOrder { .. })
        ));
        let probe = s5.with_char_unchecked(5).validate_characteristic();
        assert!(!probe.valid);
        // |G(4,2,3)| = 192 = 2^6 * 3, so characteristic 3 is violated
        let g = GroupSpec::imprimitive(4, 2, 3).unwrap();
        assert_eq!(g.group_order(), big(192));
        assert!(!g.with_char_unchecked(3).validate_characteristic().valid);
        assert!(g.with_char(5).is_ok());
        assert!(matches!(
            s5.with_char(4),
            Err(CatalogError::CharacteristicNotPrime(4))
        ));
    }

    #[test]
    fn normalization_of_degenerate_parameters() {
        assert_eq!(
            GroupSpec::imprimitive(1, 1, 5).unwrap(),
            GroupSpec::symmetric(5).unwrap()
        );
        assert_eq!(
            GroupSpec::imprimitive(6, 3, 1).unwrap(),
            GroupSpec::cyclic(2).unwrap()
        );
        assert_eq!(
            GroupSpec::imprimitive(3, 3, 1).unwrap(),
            GroupSpec::cyclic(1).unwrap()
        );
    }

    #[test]
    fn imprimitive_validation() {
        assert!(GroupSpec::imprimitive(4, 3, 2).is_err());
        assert!(GroupSpec::imprimitive(0, 1, 2).is_err());
        // accepted but flagged reducible
        let g222 = GroupSpec::imprimitive(2, 2, 2).unwrap();
        assert!(!g222.is_irreducible());
        assert!(g222.is_reflection_spec());
        assert!(GroupSpec::imprimitive(2, 1, 2).unwrap().is_irreducible());
    }

    #[test]
    fn exceptional_index_range() {
        assert!(GroupSpec::exceptional(3).is_err());
        assert!(GroupSpec::exceptional(38).is_err());
        assert!(GroupSpec::exceptional(4).is_ok());
    }

    #[test]
    fn product_of_degrees_is_order_on_a_grid() {
        // Exhaustive over the full exceptional table and a parameter grid.
        for index in 4..=37u8 {
            let g = GroupSpec::exceptional(index).unwrap();
            assert_eq!(g.degrees().unwrap().product(), g.group_order());
        }
        for m in 1..=6u64 {
            for n in 1..=6u64 {
                for l in (1..=m).filter(|l| m % l == 0) {
                    let g = GroupSpec::imprimitive(m, l, n).unwrap();
                    if g.is_reflection_spec() {
                        assert_eq!(g.degrees().unwrap().product(), g.group_order(), "{g}");
                    }
                }
                let s = GroupSpec::symmetric(n).unwrap();
                assert_eq!(s.degrees().unwrap().product(), s.group_order());
            }
        }
    }

    #[test]
    fn coprime_gmmn_divisibility_pattern() {
        // For gcd(m,n) = 1 and any prime p | m, exactly n-1 of the degrees
        // of G(m,m,n) are divisible by p.
        for m in 2..=8u64 {
            for n in 2..=8u64 {
                if gcd(m, n) != 1 {
                    continue;
                }
                let degrees = GroupSpec::imprimitive(m, m, n).unwrap().degrees().unwrap();
                for p in crate::util::primes_up_to(m) {
                    if m % p != 0 {
                        continue;
                    }
                    let divisible = degrees.as_slice().iter().filter(|&&d| d % p == 0).count();
                    assert_eq!(divisible as u64, n - 1, "G({m},{m},{n}) at p={p}");
                }
            }
        }
    }

    #[test]
    fn display_round_trip_names() {
        assert_eq!(
            format!("{}", GroupSpec::imprimitive(4, 2, 3).unwrap()),
            "G(4,2,3)"
        );
        assert_eq!(format!("{}", GroupSpec::exceptional(35).unwrap()), "ST35");
        assert_eq!(format!("{}", GroupSpec::symmetric(7).unwrap()), "S7");
    }
}
