use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops;

use super::{Monomial, RingRef};
use crate::error::{AlgebraError, Result};
use crate::field::{Field, FieldKind};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term<F> {
    pub coeff: F,
    pub mono: Monomial,
}

/// Result of [`Polynomial::weighted_degree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightedDegree {
    Homogeneous(u64),
    NotQuasihomogeneous,
    Zero,
}

/// Polynomial in canonical form: terms strictly descending in the ring's
/// order, no zero coefficients.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: RingRef<F>,
    terms: Vec<Term<F>>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.ring.check_same(&other.ring).is_ok()
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> std::hash::Hash for Polynomial<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &RingRef<F>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef<F>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &RingRef<F>, c: F) -> Self {
        Self::monomial(ring, c, Monomial::one(ring.arity()))
    }

    pub fn var(ring: &RingRef<F>, index: usize) -> Self {
        Self::monomial(
            ring,
            ring.field().one(),
            Monomial::var(ring.arity(), index, 1),
        )
    }

    pub fn monomial(ring: &RingRef<F>, coeff: F, mono: Monomial) -> Self {
        debug_assert_eq!(mono.arity(), ring.arity());
        let terms = if coeff.is_zero() {
            Vec::new()
        } else {
            vec![Term { coeff, mono }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges equal
    /// monomials and drops zeros.
    pub fn from_terms(ring: &RingRef<F>, terms: impl IntoIterator<Item = (F, Monomial)>) -> Self {
        let mut acc: HashMap<Monomial, F> = HashMap::new();
        for (c, m) in terms {
            debug_assert_eq!(m.arity(), ring.arity());
            match acc.get_mut(&m) {
                Some(v) => *v = v.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &RingRef<F>, acc: HashMap<Monomial, F>) -> Self {
        let mut terms: Vec<Term<F>> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Trusts the caller that `terms` is already canonical.
    pub(crate) fn from_sorted_terms(ring: &RingRef<F>, terms: Vec<Term<F>>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Maximal total degree, `None` for zero.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// Maximal degree under the ring's grading, `None` for zero.
    pub fn graded_degree(&self) -> Option<u64> {
        let g = self.ring.grading();
        self.terms.iter().map(|t| t.mono.weighted_degree(&g)).max()
    }

    pub fn is_homogeneous_for(&self, grading: &[u32]) -> bool {
        let mut degs = self.terms.iter().map(|t| t.mono.weighted_degree(grading));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Homogeneous for the ring's grading (weights, or standard degree).
    pub fn is_graded_homogeneous(&self) -> bool {
        self.is_homogeneous_for(&self.ring.grading())
    }

    pub fn coefficient_of(&self, mono: &Monomial) -> F {
        self.terms
            .iter()
            .find(|t| &t.mono == mono)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    /// Variables occurring in some term.
    pub fn uses_var(&self, index: usize) -> bool {
        self.terms.iter().any(|t| t.mono.exponent(index) > 0)
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.neg(),
                mono: t.mono.clone(),
            })
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.mul(c),
                mono: t.mono.clone(),
            })
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &F, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.mul(c),
                mono: t.mono.mul(m),
            })
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        Ok(self.add_scaled(other, &self.ring.field().one()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        Ok(self.add_scaled(other, &self.ring.field().one().neg()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        Ok(self.mul_unchecked(other))
    }

    /// `self + c * other`, merging the sorted term lists.
    pub(crate) fn add_scaled(&self, other: &Self, c: &F) -> Self {
        let order = self.ring.order();
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].mono, &b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        coeff: b[j].coeff.mul(c),
                        mono: b[j].mono.clone(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let s = a[i].coeff.add(&b[j].coeff.mul(c));
                    if !s.is_zero() {
                        out.push(Term {
                            coeff: s,
                            mono: a[i].mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| Term {
            coeff: t.coeff.mul(c),
            mono: t.mono.clone(),
        }));
        out.retain(|t| !t.coeff.is_zero());
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].coeff, &self.terms[0].mono);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].coeff, &other.terms[0].mono);
        }
        let mut acc: HashMap<Monomial, F> = HashMap::with_capacity(self.len() * other.len());
        for s in &self.terms {
            for o in &other.terms {
                let m = s.mono.mul(&o.mono);
                let c = s.coeff.mul(&o.coeff);
                match acc.get_mut(&m) {
                    Some(v) => *v = v.add(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(&self.ring, acc)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn partial_derivative(&self, index: usize) -> Result<Self> {
        let arity = self.ring.arity();
        if index >= arity {
            return Err(AlgebraError::VariableOutOfRange { index, arity });
        }
        let field = self.ring.field();
        let terms = self.terms.iter().filter_map(|t| {
            let e = t.mono.exponent(index);
            if e == 0 {
                return None;
            }
            let c = t.coeff.mul(&field.integer(e as i64));
            let mut exps = t.mono.exponents().to_vec();
            exps[index] -= 1;
            Some((c, Monomial::from_exponents(&exps)))
        });
        Ok(Self::from_terms(&self.ring, terms))
    }

    /// Common weighted degree of all terms under the ring's weights.
    pub fn weighted_degree(&self) -> Result<WeightedDegree> {
        let weights = self.ring.weights().ok_or(AlgebraError::NoWeights)?;
        if self.is_zero() {
            return Ok(WeightedDegree::Zero);
        }
        Ok(if self.is_homogeneous_for(weights) {
            WeightedDegree::Homogeneous(self.terms[0].mono.weighted_degree(weights))
        } else {
            WeightedDegree::NotQuasihomogeneous
        })
    }

    /// Coefficients `c_j = (w_j / deg f) * df/dx_j` with `f = sum_j x_j * c_j`
    /// (Euler's relation), certifying that `f` lies in the ideal of the
    /// variables times the ideal of its partials.
    pub fn euler_combination(&self) -> Result<Vec<Self>> {
        let weights = self.ring.weights().ok_or(AlgebraError::NoWeights)?.to_vec();
        let degree = match self.weighted_degree()? {
            WeightedDegree::Homogeneous(d) => d,
            WeightedDegree::Zero => return Ok(vec![Self::zero(&self.ring); self.ring.arity()]),
            WeightedDegree::NotQuasihomogeneous => return Err(AlgebraError::NotQuasihomogeneous),
        };
        let field = self.ring.field();
        let characteristic = field.characteristic();
        let deg = field.integer(degree as i64);
        let inv = deg.inv().map_err(|_| AlgebraError::DegreeNotInvertible {
            degree,
            characteristic,
        })?;
        (0..self.ring.arity())
            .map(|j| {
                let factor = field.integer(weights[j] as i64).mul(&inv);
                Ok(self.partial_derivative(j)?.scale(&factor))
            })
            .collect()
    }

    /// Image under the ring map sending variable `i` to `images[i]`.
    pub fn substitute(&self, target: &RingRef<F>, images: &[Polynomial<F>]) -> Result<Self> {
        if images.len() != self.ring.arity() {
            return Err(AlgebraError::Precondition(format!(
                "{} images for {} variables",
                images.len(),
                self.ring.arity()
            )));
        }
        for img in images {
            target.check_same(&img.ring)?;
        }
        let mut powers: HashMap<(usize, u32), Polynomial<F>> = HashMap::new();
        let mut acc = Self::zero(target);
        for t in &self.terms {
            let mut p = Self::constant(target, t.coeff.clone());
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = powers.entry((i, e)).or_insert_with(|| images[i].pow(e));
                p = p.mul_unchecked(pw);
            }
            acc = acc.add_scaled(&p, &target.field().one());
        }
        Ok(acc)
    }

    /// Same polynomial in a ring with the same variables but another order
    /// (or weights).
    pub fn reorder(&self, target: &RingRef<F>) -> Self {
        debug_assert_eq!(target.arity(), self.ring.arity());
        let mut terms = self.terms.clone();
        let order = target.order();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial {
            ring: target.clone(),
            terms,
        }
    }

    /// Moves into `target`, where position `k` is variable `perm[k]` here.
    pub fn permute(&self, target: &RingRef<F>, perm: &[usize]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| (t.coeff.clone(), t.mono.permuted(perm)));
        Self::from_terms(target, terms)
    }

    /// Inverse of [`Polynomial::permute`].
    pub fn unpermute(&self, target: &RingRef<F>, perm: &[usize]) -> Self {
        let mut inverse = vec![0; perm.len()];
        for (k, &i) in perm.iter().enumerate() {
            inverse[i] = k;
        }
        self.permute(target, &inverse)
    }

    /// Embeds into `target`, which has `count` extra variables inserted at
    /// position `at`.
    pub fn widen(&self, target: &RingRef<F>, at: usize, count: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| (t.coeff.clone(), t.mono.widened(at, count)));
        Self::from_terms(target, terms)
    }

    /// Drops variables `range`, which must not occur.
    pub fn narrow(&self, target: &RingRef<F>, range: std::ops::Range<usize>) -> Self {
        debug_assert!(range.clone().all(|i| !self.uses_var(i)));
        let terms = self
            .terms
            .iter()
            .map(|t| (t.coeff.clone(), t.mono.narrowed(range.clone())));
        Self::from_terms(target, terms)
    }

    /// Exact quotient `self / divisor` if the division leaves no remainder.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let lead = divisor.leading_term()?;
        let lead_inv = lead.coeff.inv().ok()?;
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some(t) = rest.terms.first() {
            let m = t.mono.div(&lead.mono)?;
            let c = t.coeff.mul(&lead_inv);
            rest = rest.add_scaled(&divisor.mul_term(&c, &m), &c.kind().one().neg());
            quotient.push((c, m));
        }
        Some(Self::from_terms(&self.ring, quotient))
    }

    /// Removes the largest power of variable `index` dividing every term.
    pub fn strip_var(&self, index: usize) -> Self {
        let k = self
            .terms
            .iter()
            .map(|t| t.mono.exponent(index))
            .min()
            .unwrap_or(0);
        if k == 0 {
            return self.clone();
        }
        let m = Monomial::var(self.ring.arity(), index, k);
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.clone(),
                mono: t.mono.div(&m).expect("divides"),
            })
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl<F: Field> ops::Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.try_add(rhs).expect("polynomials from different rings")
    }
}

impl<F: Field> ops::Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.try_sub(rhs).expect("polynomials from different rings")
    }
}

impl<F: Field> ops::Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
}

impl<F: Field> ops::Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            let abs = if negative {
                t.coeff.neg()
            } else {
                t.coeff.clone()
            };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = format_monomial(&t.mono, self.ring.vars());
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

pub(crate) fn format_monomial(m: &Monomial, vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{}", vars[i], e)),
        }
    }
    parts.join("*")
}
