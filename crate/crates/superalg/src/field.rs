//! Arithmetic in the prime field F_p for small odd primes.
//!
//! Elements are plain `u64` residues in `[0, p)`. The `Fp` context carries the
//! modulus; all operations reduce eagerly so intermediate values never overflow.

use serde::{Deserialize, Serialize};

/// Odd primes accepted by the default configuration.
pub const SUPPORTED_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

/// Upper cap on the prime, overridable through `SUPERALG_MAX_P`.
pub fn max_prime() -> u64 {
    std::env::var("SUPERALG_MAX_P")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(13)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field F_p, `p` an odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fp {
    p: u64,
}

impl Fp {
    /// A field context for an odd prime `p`.
    ///
    /// Panics if `p` is not an odd prime; range policy (3..=cap) is enforced by
    /// callers that construct algebras, not here.
    pub fn new(p: u64) -> Self {
        assert!(is_prime(p) && p != 2, "p must be an odd prime, got {p}");
        Fp { p }
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "division by zero mod {}", self.p);
        self.pow(a, self.p - 2)
    }

    /// The residue of an integer, signed inputs allowed.
    #[inline]
    pub fn of_i64(&self, a: i64) -> u64 {
        self.reduce(a)
    }

    /// All nonzero residues, ascending.
    pub fn units(&self) -> impl Iterator<Item = u64> {
        1..self.p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_mod_5() {
        let f = Fp::new(5);
        assert_eq!(f.add(3, 4), 2);
        assert_eq!(f.sub(1, 3), 3);
        assert_eq!(f.mul(3, 4), 2);
        assert_eq!(f.inv(2), 3);
        assert_eq!(f.of_i64(-7), 3);
        assert_eq!(f.pow(2, 4), 1);
    }

    #[test]
    #[should_panic]
    fn rejects_two() {
        Fp::new(2);
    }

    #[test]
    fn primality() {
        assert!(is_prime(13));
        assert!(!is_prime(9));
        assert!(!is_prime(1));
    }
}
