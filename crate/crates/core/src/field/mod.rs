//! Exact coefficient fields.
//!
//! Every polynomial type in the crate is generic over a [`Field`]. Elements
//! carry enough information to do arithmetic on their own (a prime field
//! element knows its modulus), while a [`FieldKind`] describes the field as a
//! whole and manufactures constants. Two implementations ship: [`Gf`] for
//! prime fields and [`Rational`] for the rationals.

mod prime;
mod rational;

pub use prime::{is_prime, Gf, GfKind};
pub use rational::{Rational, Rationals};

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;

use crate::error::{AlgebraError, Result};

/// An element of an exact field.
pub trait Field: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync + 'static {
    type Kind: FieldKind<Elem = Self>;

    fn kind(&self) -> Self::Kind;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Used only for printing: a rational with a minus sign is rendered as
    /// a subtraction. Prime field residues are never negative.
    fn is_negative(&self) -> bool {
        false
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.kind().one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_field(rhs)?;
        Ok(self.add(rhs))
    }

    fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same_field(rhs)?;
        Ok(self.sub(rhs))
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same_field(rhs)?;
        Ok(self.mul(rhs))
    }

    fn check_same_field(&self, rhs: &Self) -> Result<()> {
        let (a, b) = (self.kind(), rhs.kind());
        if a == b {
            Ok(())
        } else {
            Err(AlgebraError::FieldMismatch(a.to_string(), b.to_string()))
        }
    }
}

/// Descriptor of a field: constants, embeddings of integers and the
/// characteristic.
pub trait FieldKind:
    Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync + 'static
{
    type Elem: Field<Kind = Self>;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn integer(&self, value: i64) -> Self::Elem;
    fn big_integer(&self, value: &BigInt) -> Self::Elem;
    /// `0` for the rationals.
    fn characteristic(&self) -> u64;

    /// Image of `num / den`; fails when `den` vanishes in the field.
    fn ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem> {
        self.big_integer(num).div(&self.big_integer(den))
    }
}
