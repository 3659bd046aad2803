//! Small shared integer helpers.

use alloc::vec::Vec;

/// Deterministic primality test by trial division. Fine for the word-sized
/// inputs this crate deals in (characteristics, degrees, moduli).
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes `p <= n`, ascending.
pub(crate) fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| is_prime(p)).collect()
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = primes_up_to(30);
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(is_prime(2));
        assert!(!is_prime(49));
    }
}
