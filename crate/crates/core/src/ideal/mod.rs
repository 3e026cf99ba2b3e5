//! Ideal calculus on top of the Groebner engine: membership, sums, products,
//! intersections, quotients, saturation, elimination, radical membership,
//! dimension and minimal generators.

pub mod monomial;

use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::{buchberger, GroebnerBasis};
use crate::poly::{Monomial, MonomialOrder, Polynomial, RingRef};

/// Ideal given by generators, with a lazily computed reduced Groebner basis
/// for the order of its ring. Clones share the cache.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    ring: RingRef<F>,
    gens: Vec<Polynomial<F>>,
    gb: Arc<Mutex<Option<Arc<GroebnerBasis<F>>>>>,
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

impl<F: Field> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped.
    pub fn new(ring: &RingRef<F>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        for g in &gens {
            ring.check_same(g.ring())?;
        }
        Ok(Self::from_gens(ring, gens))
    }

    pub(crate) fn from_gens(ring: &RingRef<F>, gens: Vec<Polynomial<F>>) -> Self {
        let mut out: Vec<Polynomial<F>> = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.is_zero() && !out.contains(&g) {
                out.push(g);
            }
        }
        Ideal {
            ring: ring.clone(),
            gens: out,
            gb: Arc::new(Mutex::new(None)),
        }
    }

    pub fn parse(ring: &RingRef<F>, gens: &[&str]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|s| Polynomial::parse(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_gens(ring, gens))
    }

    pub fn unit(ring: &RingRef<F>) -> Self {
        Self::from_gens(ring, vec![Polynomial::one(ring)])
    }

    pub fn zero(ring: &RingRef<F>) -> Self {
        Self::from_gens(ring, Vec::new())
    }

    /// The ideal of the variables, i.e. the maximal ideal at the origin.
    pub fn maximal(ring: &RingRef<F>) -> Self {
        Self::from_gens(
            ring,
            (0..ring.arity())
                .map(|i| Polynomial::var(ring, i))
                .collect(),
        )
    }

    pub fn from_monomials(ring: &RingRef<F>, monos: Vec<Monomial>) -> Self {
        let one = ring.field().clone();
        let gens = monos
            .into_iter()
            .map(|m| Polynomial::monomial(ring, crate::field::FieldKind::one(&one), m))
            .collect();
        Self::from_gens(ring, gens)
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    /// The cached reduced Groebner basis, computed on first use. Concurrent
    /// callers wait for a single computation.
    pub fn groebner(&self) -> Result<Arc<GroebnerBasis<F>>> {
        let mut slot = self.gb.lock().expect("groebner cache poisoned");
        if let Some(gb) = slot.as_ref() {
            return Ok(gb.clone());
        }
        let gb = Arc::new(buchberger(&self.ring, &self.gens)?);
        *slot = Some(gb.clone());
        Ok(gb)
    }

    /// Groebner basis if it has already been computed.
    pub fn cached_groebner(&self) -> Option<Arc<GroebnerBasis<F>>> {
        self.gb.lock().expect("groebner cache poisoned").clone()
    }

    /// Same ideal generated by its reduced Groebner basis.
    pub fn standardized(&self) -> Result<Self> {
        let gb = self.groebner()?;
        let ideal = Self::from_gens(&self.ring, gb.elements().to_vec());
        *ideal.gb.lock().expect("groebner cache poisoned") = Some(gb);
        Ok(ideal)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.gens.iter().any(|g| g.is_constant()) {
            return Ok(true);
        }
        Ok(self.groebner()?.is_unit())
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_monomial())
    }

    /// Every generator homogeneous for the ring's grading (its weights, or
    /// the standard degree).
    pub fn is_graded(&self) -> bool {
        let g = self.ring.grading();
        self.gens.iter().all(|p| p.is_homogeneous_for(&g))
    }

    fn monomials(&self) -> Vec<Monomial> {
        self.gens
            .iter()
            .map(|g| g.leading_monomial().expect("nonzero").clone())
            .collect()
    }

    /// Normal form of `f` modulo the ideal; zero iff `f` is a member.
    pub fn reduce(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.ring.check_same(f.ring())?;
        Ok(self.groebner()?.normal_form(f))
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        if self.is_monomial()
            && f.terms()
                .iter()
                .all(|t| monomial::contains(&self.monomials(), &t.mono))
        {
            return Ok(true);
        }
        Ok(self.reduce(f)?.is_zero())
    }

    /// First generator of `other` outside `self`, if any.
    pub fn first_outside(&self, other: &Ideal<F>) -> Result<Option<Polynomial<F>>> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(Some(g.clone()));
            }
        }
        Ok(None)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        Ok(self.first_outside(other)?.is_none())
    }

    pub fn equals(&self, other: &Ideal<F>) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        Ok(Self::from_gens(
            &self.ring,
            self.gens.iter().chain(&other.gens).cloned().collect(),
        ))
    }

    pub fn product(&self, other: &Ideal<F>) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        if self.is_monomial() && other.is_monomial() {
            return Ok(Self::from_monomials(
                &self.ring,
                monomial::product(&self.monomials(), &other.monomials()),
            ));
        }
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a * b))
            .collect();
        Ok(Self::from_gens(&self.ring, gens))
    }

    /// `I^n`; the unit ideal for `n = 0`.
    pub fn power(&self, n: u32) -> Result<Self> {
        let mut acc = Self::unit(&self.ring);
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Ring `k[t, x...]` with `t` eliminated first, under the given tail
    /// order.
    fn with_auxiliary(&self) -> Result<RingRef<F>> {
        let order = MonomialOrder::block(1, MonomialOrder::Grevlex, self.ring.order().clone());
        self.ring.with_leading_vars(&["_t"], order)
    }

    /// Groebner basis elements free of the auxiliary variable, brought back.
    fn drop_auxiliary(&self, aux: &RingRef<F>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        let gb = buchberger(aux, &gens)?;
        let kept = gb
            .elements()
            .iter()
            .filter(|g| !g.uses_var(0))
            .map(|g| g.narrow(&self.ring, 0..1))
            .collect();
        Ok(Self::from_gens(&self.ring, kept))
    }

    /// `I ∩ J` by eliminating `t` from `t*I + (1-t)*J`; monomial ideals use
    /// lcms directly.
    pub fn intersect(&self, other: &Ideal<F>) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        if self.is_monomial() && other.is_monomial() {
            return Ok(Self::from_monomials(
                &self.ring,
                monomial::intersect(&self.monomials(), &other.monomials()),
            ));
        }
        let aux = self.with_auxiliary()?;
        let t = Polynomial::var(&aux, 0);
        let one_minus_t = &Polynomial::one(&aux) - &t;
        let mut gens: Vec<Polynomial<F>> = self
            .gens
            .iter()
            .map(|g| &g.widen(&aux, 0, 1) * &t)
            .collect();
        gens.extend(
            other
                .gens
                .iter()
                .map(|g| &g.widen(&aux, 0, 1) * &one_minus_t),
        );
        self.drop_auxiliary(&aux, gens)
    }

    /// `(I : f)`.
    pub fn quotient_by(&self, f: &Polynomial<F>) -> Result<Self> {
        self.ring.check_same(f.ring())?;
        if f.is_zero() {
            return Ok(Self::unit(&self.ring));
        }
        if self.is_monomial() && f.is_monomial() {
            let m = f.leading_monomial().unwrap();
            return Ok(Self::from_monomials(
                &self.ring,
                monomial::quotient(&self.monomials(), m),
            ));
        }
        let meet = self.intersect(&Self::from_gens(&self.ring, vec![f.clone()]))?;
        let gens = meet
            .gens
            .iter()
            .map(|g| {
                g.exact_div(f)
                    .ok_or_else(|| AlgebraError::Precondition("inexact division".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_gens(&self.ring, gens))
    }

    /// `(I : J) = ∩_g (I : g)` over the generators of `J`.
    pub fn quotient(&self, other: &Ideal<F>) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let mut acc: Option<Self> = None;
        for g in &other.gens {
            let q = self.quotient_by(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Self::unit(&self.ring)))
    }

    /// `(I : f^∞)`.
    ///
    /// Monomial inputs are handled combinatorially. A graded ideal saturated
    /// by a monomial uses one Groebner basis per variable in a weighted
    /// reverse lexicographic order with that variable last, where a
    /// homogeneous element is divisible by the last variable exactly when its
    /// leading term is. Everything else eliminates `t` from `I + (t*f - 1)`.
    pub fn saturate(&self, f: &Polynomial<F>) -> Result<Self> {
        self.ring.check_same(f.ring())?;
        if f.is_zero() {
            return Err(AlgebraError::Precondition("cannot saturate by zero".into()));
        }
        if f.is_constant() || self.is_zero() {
            return Ok(self.clone());
        }
        if f.is_monomial() {
            let m = f.leading_monomial().unwrap().clone();
            if self.is_monomial() {
                return Ok(Self::from_monomials(
                    &self.ring,
                    monomial::saturate(&self.monomials(), &m),
                ));
            }
            if self.is_graded() {
                let mut acc = self.clone();
                for j in m.support() {
                    acc = acc.saturate_graded_by_var(j)?;
                }
                return Ok(acc);
            }
        }
        self.saturate_by_elimination(f)
    }

    /// Saturation through `I + (t*f - 1)`, whatever the shape of the input.
    pub fn saturate_by_elimination(&self, f: &Polynomial<F>) -> Result<Self> {
        let aux = self.with_auxiliary()?;
        let t = Polynomial::var(&aux, 0);
        let mut gens: Vec<Polynomial<F>> = self.gens.iter().map(|g| g.widen(&aux, 0, 1)).collect();
        gens.push(&(&t * &f.widen(&aux, 0, 1)) - &Polynomial::one(&aux));
        self.drop_auxiliary(&aux, gens)
    }

    fn saturate_graded_by_var(&self, j: usize) -> Result<Self> {
        let n = self.ring.arity();
        let perm: Vec<usize> = (0..n)
            .filter(|&i| i != j)
            .chain(std::iter::once(j))
            .collect();
        let grading = self.ring.grading();
        let weights: Vec<u32> = perm.iter().map(|&i| grading[i]).collect();
        let ring = self
            .ring
            .permuted(&perm, MonomialOrder::weighted_revlex(weights))?;
        let gens: Vec<Polynomial<F>> = self.gens.iter().map(|g| g.permute(&ring, &perm)).collect();
        let gb = buchberger(&ring, &gens)?;
        let out = gb
            .elements()
            .iter()
            .map(|g| g.strip_var(n - 1).unpermute(&self.ring, &perm))
            .collect();
        Ok(Self::from_gens(&self.ring, out))
    }

    /// `(I : J^∞) = ∩_g (I : g^∞)` over the generators of `J`.
    pub fn saturate_by_ideal(&self, other: &Ideal<F>) -> Result<Self> {
        let mut acc: Option<Self> = None;
        for g in &other.gens {
            let s = self.saturate(g)?;
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersect(&s)?,
            });
        }
        Ok(acc.unwrap_or_else(|| self.clone()))
    }

    /// `I ∩ k[remaining variables]`, expressed in the same ring.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Self> {
        let n = self.ring.arity();
        if let Some(&bad) = vars.iter().find(|&&v| v >= n) {
            return Err(AlgebraError::VariableOutOfRange {
                index: bad,
                arity: n,
            });
        }
        if vars.is_empty() {
            return Ok(self.clone());
        }
        let mut perm: Vec<usize> = vars.to_vec();
        perm.sort_unstable();
        perm.dedup();
        let k = perm.len();
        perm.extend((0..n).filter(|i| !vars.contains(i)));
        let order = MonomialOrder::block(k, MonomialOrder::Grevlex, MonomialOrder::Grevlex);
        let ring = self.ring.permuted(&perm, order)?;
        let gens: Vec<Polynomial<F>> = self.gens.iter().map(|g| g.permute(&ring, &perm)).collect();
        let gb = buchberger(&ring, &gens)?;
        let kept = gb
            .elements()
            .iter()
            .filter(|g| (0..k).all(|i| !g.uses_var(i)))
            .map(|g| g.unpermute(&self.ring, &perm))
            .collect();
        Ok(Self::from_gens(&self.ring, kept))
    }

    /// `f ∈ √I`, decided by `1 ∈ I + (t*f - 1)`.
    pub fn radical_contains(&self, f: &Polynomial<F>) -> Result<bool> {
        self.ring.check_same(f.ring())?;
        if f.is_zero() {
            return Ok(true);
        }
        let aux = self.with_auxiliary()?;
        let t = Polynomial::var(&aux, 0);
        let mut gens: Vec<Polynomial<F>> = self.gens.iter().map(|g| g.widen(&aux, 0, 1)).collect();
        gens.push(&(&t * &f.widen(&aux, 0, 1)) - &Polynomial::one(&aux));
        Ok(buchberger(&aux, &gens)?.is_unit())
    }

    /// Krull dimension of `R/I` via maximal independent sets of the leading
    /// term ideal.
    pub fn dimension(&self) -> Result<usize> {
        if self.is_zero() {
            return Ok(self.ring.arity());
        }
        let gb = self.groebner()?;
        if gb.is_unit() {
            return Err(AlgebraError::Precondition(
                "the unit ideal has no dimension".into(),
            ));
        }
        let n = self.ring.arity();
        let supports: Vec<u64> = gb
            .elements()
            .iter()
            .map(|g| {
                g.leading_monomial()
                    .unwrap()
                    .support()
                    .fold(0u64, |acc, i| acc | (1 << i))
            })
            .collect();
        let mut best = 0;
        for subset in 0u64..(1 << n) {
            let size = subset.count_ones() as usize;
            if size > best && supports.iter().all(|&s| s & !subset != 0) {
                best = size;
            }
        }
        Ok(best)
    }

    /// `n - dim(R/I)`; fails for the unit and the zero ideal.
    pub fn codimension(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(AlgebraError::Precondition(
                "codimension of the zero ideal".into(),
            ));
        }
        Ok(self.ring.arity() - self.dimension()?)
    }

    /// Normal form of `f` modulo `𝔐·I`. Fails when `f ∉ I`.
    pub fn minimal_generator_certificate(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        if !self.contains(f)? {
            return Err(AlgebraError::NotInIdeal);
        }
        Ideal::maximal(&self.ring).product(self)?.reduce(f)
    }

    /// `f ∉ 𝔐·I` (graded Nakayama).
    pub fn is_minimal_generator(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(!self.minimal_generator_certificate(f)?.is_zero())
    }

    /// Greedy minimal generating subset: generators in ascending degree, each
    /// kept when it is not in the ideal of those kept so far. For graded
    /// ideals this is a minimal generating set.
    pub fn minimal_generators(&self) -> Result<Self> {
        let grading = self.ring.grading();
        let mut sorted = self.gens.clone();
        sorted.sort_by_key(|g| {
            g.terms()
                .iter()
                .map(|t| t.mono.weighted_degree(&grading))
                .max()
                .unwrap_or(0)
        });
        let mut kept: Vec<Polynomial<F>> = Vec::new();
        for g in sorted {
            let current = Self::from_gens(&self.ring, kept.clone());
            if kept.is_empty() || !current.contains(&g)? {
                kept.push(g);
            }
        }
        Ok(Self::from_gens(&self.ring, kept))
    }

    /// Same generators in another ring over the same variables.
    pub fn reorder(&self, ring: &RingRef<F>) -> Self {
        Self::from_gens(ring, self.gens.iter().map(|g| g.reorder(ring)).collect())
    }
}

#[cfg(test)]
mod tests;
