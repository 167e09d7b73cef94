use std::fmt;

use crate::error::{Error, Result};

/// Default characteristic for every computation unless overridden.
pub const DEFAULT_PRIME: u32 = 32003;

/// The prime field `F_p` for an odd prime `2 < p < 2^31`.
///
/// Elements are plain `u32` residues in `[0, p)`; the field value only carries
/// the modulus and does the arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % small == 0 {
            return n == small;
        }
    }
    // Deterministic Miller-Rabin for n < 3.3e24 with these bases; we only need n < 2^31.
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % n;
            }
            b = b * b % n;
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p <= 2 || p >= (1 << 31) || !is_prime(p as u64) {
            return Err(Error::InvalidPrime(p as u64));
        }
        Ok(PrimeField { p })
    }

    pub fn default_field() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self, a: u32) -> Result<u32> {
        let a = a % self.p;
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut old_r, mut r) = (a as i64, self.p as i64);
        let (mut old_s, mut s) = (1i64, 0i64);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        debug_assert_eq!(old_r, 1);
        Ok(old_s.rem_euclid(self.p as i64) as u32)
    }

    /// Inverse of an element already known to be nonzero.
    #[inline]
    pub(crate) fn inv_nz(&self, a: u32) -> u32 {
        self.inv(a).expect("inverse of a nonzero residue")
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Reduce an arbitrary signed integer into `[0, p)`.
    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// Symmetric representative in `(-p/2, p/2]`, used for printing.
    pub fn to_signed(&self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    pub fn pow(&self, mut base: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_examples() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.inv(2).unwrap(), 3);
        let f = PrimeField::default_field();
        assert_eq!(f.inv(1).unwrap(), 1);
        assert_eq!(f.inv(2).unwrap(), 16002);
        assert_eq!(2u64 * 16002 % 32003, 1);
        assert!(matches!(f.inv(0), Err(Error::DivisionByZero)));
    }

    #[test]
    fn inverse_is_involution_for_small_primes() {
        for p in [3u32, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101] {
            let f = PrimeField::new(p).unwrap();
            for a in 1..p {
                let b = f.inv(a).unwrap();
                assert_eq!(f.mul(a, b), 1);
                assert_eq!(f.inv(b).unwrap(), a);
            }
        }
    }

    #[test]
    fn rejects_non_primes() {
        for bad in [0u32, 1, 2, 4, 9, 32001, 1 << 31] {
            assert!(PrimeField::new(bad).is_err(), "{bad}");
        }
        assert!(PrimeField::new(2147483647).is_ok());
        assert!(PrimeField::new(101).is_ok());
    }
}
