use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{Field, FieldKind};
use crate::error::{AlgebraError, Result};

/// The prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GfKind {
    modulus: u64,
}

impl GfKind {
    /// Largest supported modulus; products are formed in `u128`.
    pub const MAX_MODULUS: u64 = 1 << 62;

    pub fn new(p: u64) -> Result<Self> {
        if p > Self::MAX_MODULUS || !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(GfKind { modulus: p })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn element(&self, residue: u64) -> Gf {
        Gf {
            residue: residue % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for GfKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.modulus)
    }
}

impl FieldKind for GfKind {
    type Elem = Gf;

    fn zero(&self) -> Gf {
        self.element(0)
    }

    fn one(&self) -> Gf {
        self.element(1)
    }

    fn integer(&self, value: i64) -> Gf {
        let r = (value as i128).rem_euclid(self.modulus as i128);
        self.element(r as u64)
    }

    fn big_integer(&self, value: &BigInt) -> Gf {
        let r = value.mod_floor(&BigInt::from(self.modulus));
        self.element(r.to_u64().expect("residue fits in u64"))
    }

    fn characteristic(&self) -> u64 {
        self.modulus
    }
}

/// Residue class modulo a prime, stored canonically in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gf {
    residue: u64,
    modulus: u64,
}

impl Gf {
    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl Field for Gf {
    type Kind = GfKind;

    fn kind(&self) -> GfKind {
        GfKind {
            modulus: self.modulus,
        }
    }

    fn is_zero(&self) -> bool {
        self.residue == 0
    }

    fn is_one(&self) -> bool {
        self.residue == 1
    }

    fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let s = self.residue + rhs.residue;
        let residue = if s >= self.modulus {
            s - self.modulus
        } else {
            s
        };
        Gf {
            residue,
            modulus: self.modulus,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let residue = if self.residue >= rhs.residue {
            self.residue - rhs.residue
        } else {
            self.residue + self.modulus - rhs.residue
        };
        Gf {
            residue,
            modulus: self.modulus,
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Gf {
            residue: mul_mod(self.residue, rhs.residue, self.modulus),
            modulus: self.modulus,
        }
    }

    fn neg(&self) -> Self {
        let residue = if self.residue == 0 {
            0
        } else {
            self.modulus - self.residue
        };
        Gf {
            residue,
            modulus: self.modulus,
        }
    }

    fn inv(&self) -> Result<Self> {
        if self.residue == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        // Fermat: a^(p-2)
        Ok(self.pow(self.modulus - 2))
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
