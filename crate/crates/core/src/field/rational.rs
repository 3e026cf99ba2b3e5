use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, FieldKind};
use crate::error::{AlgebraError, Result};

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl fmt::Display for Rationals {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("QQ")
    }
}

impl FieldKind for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational(BigRational::zero())
    }

    fn one(&self) -> Rational {
        Rational(BigRational::one())
    }

    fn integer(&self, value: i64) -> Rational {
        Rational(BigRational::from_integer(BigInt::from(value)))
    }

    fn big_integer(&self, value: &BigInt) -> Rational {
        Rational(BigRational::from_integer(value.clone()))
    }

    fn characteristic(&self) -> u64 {
        0
    }
}

/// Arbitrary precision rational, always in lowest terms with a positive
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Field for Rational {
    type Kind = Rationals;

    fn kind(&self) -> Rationals {
        Rationals
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn inv(&self) -> Result<Self> {
        if self.0.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}
