//! Symbolic powers by saturation, by monomial primary decomposition, and
//! membership in `I^(d+1)` through Fitting ideals of `I^(d)/(x)`.

use std::collections::BTreeMap;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::fitting::present_ideal_quotient;
use crate::ideal::{monomial, Ideal};
use crate::poly::{Monomial, Polynomial};

/// A primary component of a monomial ideal.
#[derive(Clone, Debug)]
pub struct PrimaryComponent<F: Field> {
    pub primary: Ideal<F>,
    /// Variables generating the associated prime.
    pub prime_vars: Vec<usize>,
    /// The associated prime is minimal over the decomposed ideal.
    pub isolated: bool,
}

impl<F: Field> PrimaryComponent<F> {
    pub fn prime(&self) -> Ideal<F> {
        let ring = self.primary.ring();
        Ideal::from_gens(
            ring,
            self.prime_vars
                .iter()
                .map(|&i| Polynomial::var(ring, i))
                .collect(),
        )
    }
}

fn monomial_gens<F: Field>(ideal: &Ideal<F>) -> Result<Vec<Monomial>> {
    if !ideal.is_monomial() {
        return Err(AlgebraError::Precondition("ideal is not monomial".into()));
    }
    Ok(monomial::minimalize(
        ideal
            .gens()
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect(),
    ))
}

/// Splits on the first generator that is not a pure power:
/// `(J, x^a m) = (J, x^a) ∩ (J, m)`.
fn irreducible_components(gens: Vec<Monomial>, out: &mut Vec<Vec<Monomial>>) {
    let gens = monomial::minimalize(gens);
    let Some(mixed) = gens.iter().find(|m| m.support().count() > 1) else {
        out.push(gens);
        return;
    };
    let i = mixed.support().next().unwrap();
    let a = mixed.exponent(i);
    let power = Monomial::var(mixed.arity(), i, a);
    let rest = mixed.div(&power).unwrap();
    let others: Vec<Monomial> = gens.iter().filter(|&m| m != mixed).cloned().collect();
    let mut left = others.clone();
    left.push(power);
    let mut right = others;
    right.push(rest);
    irreducible_components(left, out);
    irreducible_components(right, out);
}

fn support_of(gens: &[Monomial]) -> Vec<usize> {
    let mut vars: Vec<usize> = gens.iter().flat_map(|m| m.support()).collect();
    vars.sort_unstable();
    vars.dedup();
    vars
}

/// Irredundant primary decomposition of a monomial ideal, components sorted
/// by their primes. The unit ideal has no components.
pub fn monomial_primary_decomposition<F: Field>(
    ideal: &Ideal<F>,
) -> Result<Vec<PrimaryComponent<F>>> {
    let ring = ideal.ring();
    let gens = monomial_gens(ideal)?;
    if gens.iter().any(Monomial::is_one) {
        return Ok(Vec::new());
    }
    let mut irreducible = Vec::new();
    irreducible_components(gens, &mut irreducible);
    irreducible.sort();
    irreducible.dedup();
    // drop components containing another one; equal ones were deduplicated
    let kept: Vec<&Vec<Monomial>> = irreducible
        .iter()
        .enumerate()
        .filter(|(i, c)| {
            !irreducible
                .iter()
                .enumerate()
                .any(|(j, d)| j != *i && monomial::is_subset(d, c))
        })
        .map(|(_, c)| c)
        .collect();
    let mut by_prime: BTreeMap<Vec<usize>, Vec<Monomial>> = BTreeMap::new();
    for c in kept {
        let p = support_of(c);
        let merged = match by_prime.remove(&p) {
            None => c.clone(),
            Some(prev) => monomial::intersect(&prev, c),
        };
        by_prime.insert(p, merged);
    }
    let primes: Vec<Vec<usize>> = by_prime.keys().cloned().collect();
    Ok(by_prime
        .into_iter()
        .map(|(p, q)| {
            let isolated = !primes
                .iter()
                .any(|o| o != &p && o.iter().all(|v| p.contains(v)));
            PrimaryComponent {
                primary: Ideal::from_monomials(ring, q),
                prime_vars: p,
                isolated,
            }
        })
        .collect())
}

/// Minimal primes of a monomial ideal, as variable sets.
pub fn monomial_minimal_primes<F: Field>(ideal: &Ideal<F>) -> Result<Vec<Vec<usize>>> {
    Ok(monomial_primary_decomposition(ideal)?
        .into_iter()
        .filter(|c| c.isolated)
        .map(|c| c.prime_vars)
        .collect())
}

/// `I^(d)`: intersection of the `d`-th powers of the isolated components.
/// Embedded components are ignored.
pub fn symbolic_power_monomial<F: Field>(ideal: &Ideal<F>, d: u32) -> Result<Ideal<F>> {
    let ring = ideal.ring();
    let n = ring.arity();
    let mut acc: Option<Vec<Monomial>> = None;
    for c in monomial_primary_decomposition(ideal)?
        .into_iter()
        .filter(|c| c.isolated)
    {
        let q = monomial_gens(&c.primary)?;
        let power = monomial::power(&q, n, d);
        acc = Some(match acc {
            None => power,
            Some(a) => monomial::intersect(&a, &power),
        });
    }
    Ok(match acc {
        None => Ideal::unit(ring),
        Some(gens) => Ideal::from_monomials(ring, gens),
    })
}

/// First variable outside `I`, the default saturation witness for primes.
pub fn default_witness<F: Field>(ideal: &Ideal<F>) -> Result<Polynomial<F>> {
    let ring = ideal.ring();
    for i in 0..ring.arity() {
        let x = Polynomial::var(ring, i);
        if !ideal.contains(&x)? {
            return Ok(x);
        }
    }
    Err(AlgebraError::Precondition(
        "every variable lies in the ideal".into(),
    ))
}

/// `(I^d : h^∞)`, the symbolic power of a prime `I` (primality is the
/// caller's assertion).
pub fn symbolic_power_prime<F: Field>(
    ideal: &Ideal<F>,
    d: u32,
    h: &Polynomial<F>,
) -> Result<Ideal<F>> {
    if ideal.contains(h)? {
        return Err(AlgebraError::Precondition(format!(
            "witness {h} lies in the ideal"
        )));
    }
    ideal.power(d)?.saturate(h)
}

/// `(I^d : 𝔐^∞)`. For an ideal homogeneous in a positive grading with
/// `dim R/I = 1`, every associated prime of `I^d` other than `𝔐` is minimal
/// over `I`, so this is `I^(d)`.
pub fn symbolic_power_dimension_one<F: Field>(ideal: &Ideal<F>, d: u32) -> Result<Ideal<F>> {
    if !ideal.is_graded() {
        return Err(AlgebraError::Precondition(
            "ideal is not homogeneous".into(),
        ));
    }
    let dim = ideal.dimension()?;
    if dim != 1 {
        return Err(AlgebraError::Precondition(format!(
            "dimension {dim} instead of 1"
        )));
    }
    ideal
        .power(d)?
        .saturate_by_ideal(&Ideal::maximal(ideal.ring()))
}

/// How a symbolic power is computed.
#[derive(Clone, Debug)]
pub enum SymbolicStrategy<F: Field> {
    /// `(I^d : h^∞)`. Without `h`: `(I^d : 𝔐^∞)` for a graded ideal of
    /// dimension one, otherwise the first variable outside `I`, treating `I`
    /// as prime.
    Saturation(Option<Polynomial<F>>),
    Monomial,
    /// Fitting-ideal membership in `I^(2)`; decides single elements only.
    Fitting,
}

impl<F: Field> SymbolicStrategy<F> {
    pub fn name(&self) -> &'static str {
        match self {
            SymbolicStrategy::Saturation(_) => "saturation",
            SymbolicStrategy::Monomial => "monomial",
            SymbolicStrategy::Fitting => "fitting",
        }
    }
}

/// A computed symbolic power and how it was obtained.
#[derive(Clone, Debug)]
pub struct SymbolicPower<F: Field> {
    pub ideal: Ideal<F>,
    /// `h` with `I^(d) = (I^d : h^∞)`, `None` for the other paths.
    pub witness: Option<Polynomial<F>>,
    pub method: String,
    /// Hypotheses taken on trust.
    pub assumptions: Vec<String>,
}

pub fn symbolic_power<F: Field>(
    ideal: &Ideal<F>,
    d: u32,
    strategy: &SymbolicStrategy<F>,
) -> Result<SymbolicPower<F>> {
    match strategy {
        SymbolicStrategy::Monomial => Ok(SymbolicPower {
            ideal: symbolic_power_monomial(ideal, d)?,
            witness: None,
            method: "intersection of powers of isolated monomial primary components".into(),
            assumptions: Vec::new(),
        }),
        SymbolicStrategy::Saturation(Some(h)) => Ok(SymbolicPower {
            ideal: symbolic_power_prime(ideal, d, h)?,
            witness: Some(h.clone()),
            method: format!("saturation (I^{d} : ({h})^inf)"),
            assumptions: vec!["ideal is prime".into()],
        }),
        SymbolicStrategy::Saturation(None) => {
            if ideal.is_graded() && ideal.dimension()? == 1 {
                Ok(SymbolicPower {
                    ideal: symbolic_power_dimension_one(ideal, d)?,
                    witness: None,
                    method: format!("saturation (I^{d} : m^inf)"),
                    assumptions: Vec::new(),
                })
            } else {
                let h = default_witness(ideal)?;
                symbolic_power(ideal, d, &SymbolicStrategy::Saturation(Some(h)))
            }
        }
        SymbolicStrategy::Fitting => Err(AlgebraError::Unsupported(
            "the Fitting strategy tests elements and does not produce generators".into(),
        )),
    }
}

/// Outcome of a Fitting-ideal membership test.
#[derive(Clone, Debug)]
pub struct FittingVerdict<F: Field> {
    pub member: bool,
    /// Size of the minors tested.
    pub minor_size: usize,
    /// Index `i` of the Fitting ideal `F_i` compared with `I`.
    pub fitting_index: usize,
    /// A minor outside `I`, present exactly when `member` is false.
    pub offending_minor: Option<Polynomial<F>>,
}

/// Decides `x ∈ I^(2)` for `x ∈ I`, `I` unmixed of codimension `c` and
/// generically a complete intersection: true iff `F_{c-1}(I/(x)) ⊆ I`.
pub fn in_symbolic_square<F: Field>(
    ideal: &Ideal<F>,
    x: &Polynomial<F>,
    c: usize,
) -> Result<FittingVerdict<F>> {
    fitting_test(ideal, ideal, x, c)
}

/// Decides `x ∈ I^(d+1)` given `I^(d)` and `x ∈ I^(d)`: true iff
/// `F_{N-1}(I^(d)/(x)) ⊆ I` with `N = binomial(c+d-1, d)`.
pub fn in_symbolic_power<F: Field>(
    ideal: &Ideal<F>,
    symbolic_d: &Ideal<F>,
    x: &Polynomial<F>,
    d: u32,
    c: usize,
) -> Result<FittingVerdict<F>> {
    if d == 0 {
        return Err(AlgebraError::Precondition("d must be positive".into()));
    }
    let n = binomial(c as u64 + d as u64 - 1, d as u64) as usize;
    fitting_test(ideal, symbolic_d, x, n)
}

fn fitting_test<F: Field>(
    ideal: &Ideal<F>,
    module: &Ideal<F>,
    x: &Polynomial<F>,
    n: usize,
) -> Result<FittingVerdict<F>> {
    if n == 0 {
        return Err(AlgebraError::Precondition(
            "codimension must be positive".into(),
        ));
    }
    // Fitting ideals do not depend on the generating set; fewer rows means
    // smaller minors.
    let module = if module.is_graded() {
        module.minimal_generators()?
    } else {
        module.clone()
    };
    let pres = present_ideal_quotient(&module, x)?;
    let index = n - 1;
    let offending = pres.fitting_minor_outside(index, ideal)?;
    Ok(FittingVerdict {
        member: offending.is_none(),
        minor_size: pres.generators().saturating_sub(index),
        fitting_index: index,
        offending_minor: offending,
    })
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, Rationals};
    use crate::poly::{Ring, RingRef};

    fn q(vars: &[&str]) -> RingRef<Rational> {
        Ring::new(Rationals, vars).unwrap()
    }

    fn p(r: &RingRef<Rational>, s: &str) -> Polynomial<Rational> {
        Polynomial::parse(r, s).unwrap()
    }

    fn id(r: &RingRef<Rational>, g: &[&str]) -> Ideal<Rational> {
        Ideal::parse(r, g).unwrap()
    }

    #[test]
    fn decomposition_with_embedded_component() {
        let r = q(&["x", "y"]);
        let i = id(&r, &["x^2", "x*y"]);
        let comps = monomial_primary_decomposition(&i).unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].prime_vars, vec![0]);
        assert!(comps[0].isolated);
        assert!(comps[0].primary.equals(&id(&r, &["x"])).unwrap());
        assert!(!comps[1].isolated);
        assert!(comps[1].primary.equals(&id(&r, &["x^2", "y"])).unwrap());
        let meet = comps[0].primary.intersect(&comps[1].primary).unwrap();
        assert!(meet.equals(&i).unwrap());
        assert!(monomial_primary_decomposition(&id(&r, &["x + y"])).is_err());
    }

    #[test]
    fn squarefree_components_are_minimal_primes() {
        let r = q(&["x", "y", "z"]);
        let comps = monomial_primary_decomposition(&id(&r, &["x*y", "x*z", "y*z"])).unwrap();
        let primes: Vec<_> = comps.iter().map(|c| c.prime_vars.clone()).collect();
        assert_eq!(primes, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(comps.iter().all(|c| c.isolated));
        let single = monomial_primary_decomposition(&id(&r, &["x"])).unwrap();
        assert_eq!(single.len(), 1);
    }

    #[test]
    fn monomial_symbolic_powers() {
        let r = q(&["x", "y", "z"]);
        let s = symbolic_power_monomial(&id(&r, &["x^2", "x*y"]), 2).unwrap();
        assert!(s.equals(&id(&r, &["x^2"])).unwrap());
        let i = id(&r, &["x*y", "x*z", "y*z"]);
        let s = symbolic_power_monomial(&i, 2).unwrap();
        assert!(s.contains(&p(&r, "x*y*z")).unwrap());
        assert!(!i.power(2).unwrap().contains(&p(&r, "x*y*z")).unwrap());
        for d in 1..4 {
            let s = symbolic_power_monomial(&id(&r, &["x"]), d).unwrap();
            assert!(s.equals(&id(&r, &["x"]).power(d).unwrap()).unwrap());
        }
    }

    #[test]
    fn prime_symbolic_powers() {
        let r = q(&["x", "y"]);
        let s = symbolic_power_prime(&id(&r, &["x"]), 2, &p(&r, "y")).unwrap();
        assert!(s.equals(&id(&r, &["x^2"])).unwrap());
        assert!(symbolic_power_prime(&id(&r, &["x"]), 2, &p(&r, "x*y")).is_err());
        let r = q(&["x", "y", "z"]);
        let ci = id(&r, &["x", "y"]);
        let s = symbolic_power_prime(&ci, 2, &p(&r, "z")).unwrap();
        assert!(s.equals(&ci.power(2).unwrap()).unwrap());
    }

    #[test]
    fn dimension_one_path_matches_monomial_path() {
        let r = q(&["x", "y", "z"]);
        let i = id(&r, &["x*y", "x*z", "y*z"]);
        let a = symbolic_power_dimension_one(&i, 2).unwrap();
        let b = symbolic_power_monomial(&i, 2).unwrap();
        assert!(a.equals(&b).unwrap());
    }

    #[test]
    fn fitting_membership_in_square() {
        let r = q(&["x", "y"]);
        let i = id(&r, &["x", "y"]);
        assert!(in_symbolic_square(&i, &p(&r, "x^2"), 2).unwrap().member);
        let v = in_symbolic_square(&i, &p(&r, "x"), 2).unwrap();
        assert!(!v.member);
        assert!(v.offending_minor.unwrap().is_constant());
        assert!(in_symbolic_square(&i, &p(&r, "x + 1"), 2).is_err());
    }

    #[test]
    fn fitting_membership_in_higher_powers() {
        let r = q(&["x", "y", "z"]);
        let i = id(&r, &["x", "y"]);
        assert_eq!(binomial(2, 1), 2);
        let v = in_symbolic_power(&i, &i, &p(&r, "x*y*z"), 1, 2).unwrap();
        assert!(v.member);
        let i2 = i.power(2).unwrap();
        for (f, expected) in [("x^3", true), ("x^2*y", true), ("x^2", false)] {
            assert_eq!(
                in_symbolic_power(&i, &i2, &p(&r, f), 2, 2).unwrap().member,
                expected,
                "{f}"
            );
        }
    }
}
