//! Exact commutative algebra for deciding whether evolutions of an algebra
//! are trivial: finite and rational fields, polynomial rings, Groebner bases
//! of ideals and modules, ideal calculus, Fitting ideals, symbolic powers,
//! toric ideals of monomial curves, and the containment checks built on them.
//!
//! Every algorithm is generic over [`field::Field`]; the aliases below fix the
//! two fields used in practice.

pub mod error;
pub mod evolution;
pub mod field;
pub mod fitting;
pub mod groebner;
pub mod ideal;
pub mod poly;
pub mod symbolic;
pub mod toric;

pub use error::{AlgebraError, Result};
pub use field::{Field, FieldKind, Gf, GfKind, Rational, Rationals};
pub use ideal::Ideal;
pub use poly::{Monomial, MonomialOrder, Polynomial, Ring, RingRef};

pub type GfRing = Ring<Gf>;
pub type QQRing = Ring<Rational>;
pub type GfPoly = Polynomial<Gf>;
pub type QQPoly = Polynomial<Rational>;
pub type GfIdeal = Ideal<Gf>;
pub type QQIdeal = Ideal<Rational>;
