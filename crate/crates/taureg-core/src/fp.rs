//! Arithmetic in the prime field GF(p) for a runtime-chosen prime p.
//!
//! Values are raw `u64` residues in `[0, p)`. All operations go through an
//! [`Fp`] context so the prime stays an explicit, checkable part of every
//! computation instead of a global.

/// A residue mod p. Always kept reduced to `[0, p)`.
pub type Scalar = u64;

/// Default prime: 2^61 - 1 (Mersenne). Large enough that Schwartz-Zippel
/// failure probabilities are negligible at desk scale.
pub const DEFAULT_PRIME: u64 = 2_305_843_009_213_693_951;

/// The field GF(p). Copyable context carried by matrices and algebras.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp {
    p: u64,
}

impl Fp {
    /// Requires 2 <= p < 2^62 so that sums of two residues never overflow.
    /// Primality is the caller's responsibility; see [`is_prime_u64`].
    pub fn new(p: u64) -> Self {
        assert!(p >= 2, "modulus must be at least 2");
        assert!(p < (1 << 62), "modulus must fit in 62 bits");
        Fp { p }
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    /// Reduce a signed integer coefficient into [0, p).
    pub fn reduce_i64(self, c: i64) -> Scalar {
        let m = self.p as i64;
        if self.p > i64::MAX as u64 {
            // p >= 2^61 still fits in i64 here (p < 2^62 <= i64::MAX as u64 fails
            // only for p > 2^63); this branch is unreachable for supported p.
            unreachable!("modulus out of i64 range");
        }
        (((c % m) + m) % m) as u64
    }

    pub fn add(self, a: Scalar, b: Scalar) -> Scalar {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(self, a: Scalar, b: Scalar) -> Scalar {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(self, a: Scalar) -> Scalar {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(self, a: Scalar, b: Scalar) -> Scalar {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(self, mut base: Scalar, mut exp: u64) -> Scalar {
        let mut acc: Scalar = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat. Panics on zero.
    pub fn inv(self, a: Scalar) -> Scalar {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }
}

impl Default for Fp {
    fn default() -> Self {
        Fp::new(DEFAULT_PRIME)
    }
}

/// Deterministic Miller-Rabin for u64 (the usual 12-base certificate).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
