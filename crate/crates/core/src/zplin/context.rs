use std::fmt;

use crate::{Error, Result};

/// An odd prime `p` together with the precision exponent `ν`.
///
/// Residues mod `p^ν` are stored as `u64`; the modulus is kept below `2^32`
/// so that products of two residues never overflow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PadicContext {
    p: u64,
    nu: u32,
    modulus: u64,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PadicContext {
    pub fn new(p: u64, nu: u32) -> Result<Self> {
        if p == 2 {
            return Err(Error::EvenPrime);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if nu == 0 {
            return Err(Error::ZeroPrecision);
        }
        let modulus = p
            .checked_pow(nu)
            .filter(|m| *m < (1 << 32))
            .ok_or(Error::ModulusTooLarge { p, nu })?;
        Ok(PadicContext { p, nu, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    /// `p^ν`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `p^k` as a residue; `p^k ≡ 0` for `k ≥ ν`.
    pub fn pow_p(&self, k: u32) -> u64 {
        if k >= self.nu {
            0
        } else {
            self.p.pow(k)
        }
    }

    pub fn reduce_i64(&self, a: i64) -> u64 {
        a.rem_euclid(self.modulus as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.modulus
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.modulus - b) % self.modulus
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.modulus
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.modulus - a) % self.modulus
    }

    /// p-adic valuation of a residue, capped at `ν` (so `valuation(0) = ν`).
    pub fn valuation(&self, a: u64) -> u32 {
        if a == 0 {
            return self.nu;
        }
        let mut a = a;
        let mut v = 0;
        while a.is_multiple_of(self.p) {
            a /= self.p;
            v += 1;
        }
        v
    }

    /// Inverse of a unit; `None` if `a` is divisible by `p`.
    pub fn inverse(&self, a: u64) -> Option<u64> {
        let a = a % self.modulus;
        if a.is_multiple_of(self.p) {
            return None;
        }
        let (mut r0, mut r1) = (self.modulus as i128, a as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        Some(s0.rem_euclid(self.modulus as i128) as u64)
    }

    /// Splits a nonzero residue as `p^k · u` with `u` a unit.
    pub fn split(&self, a: u64) -> (u32, u64) {
        let k = self.valuation(a);
        (k, a / self.p.pow(k))
    }

    /// The context with the same prime and precision 1.
    pub fn residue_field(&self) -> PadicContext {
        PadicContext {
            p: self.p,
            nu: 1,
            modulus: self.p,
        }
    }
}

impl fmt::Display for PadicContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={}, nu={}", self.p, self.nu)
    }
}
