//! Toric ideals of monomial curves `x_i -> t^{a_i}`, the characteristic-`p`
//! family with a nontrivial evolution, Kunz's example, and a brute-force
//! numerical-semigroup oracle independent of Groebner bases.

use crate::error::{AlgebraError, Result};
use crate::field::{Field, Gf, GfKind};
use crate::groebner::buchberger;
use crate::ideal::Ideal;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring, RingRef};

/// Step budget for Kunz's example.
pub const KUNZ_BUDGET: u64 = 200_000_000;

pub const KUNZ_EXPONENTS: [u32; 5] = [14, 20, 25, 30, 91];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialCurve {
    exponents: Vec<u32>,
}

impl MonomialCurve {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.len() < 2 {
            return Err(AlgebraError::Precondition(
                "a monomial curve needs at least two exponents".into(),
            ));
        }
        if exponents.contains(&0) {
            return Err(AlgebraError::Precondition(
                "curve exponents must be positive".into(),
            ));
        }
        Ok(MonomialCurve { exponents })
    }

    /// `(p^2, p(p+1), p^2+p+1, (p+1)^2)`.
    pub fn family(p: u32) -> Self {
        MonomialCurve {
            exponents: vec![p * p, p * (p + 1), p * p + p + 1, (p + 1) * (p + 1)],
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Image of `f` in `k[t]`.
    pub fn substitute<F: Field>(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        let target = Ring::<F>::new(f.ring().field().clone(), &["t"])?;
        let images: Vec<Polynomial<F>> = self
            .exponents
            .iter()
            .map(|&a| {
                Polynomial::monomial(
                    &target,
                    crate::field::FieldKind::one(target.field()),
                    Monomial::var(1, 0, a),
                )
            })
            .collect();
        f.substitute(&target, &images)
    }

    /// Every generator maps to zero.
    pub fn annihilates<F: Field>(&self, ideal: &Ideal<F>) -> Result<bool> {
        for g in ideal.gens() {
            if !self.substitute(g)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Kernel of `x_i -> t^{a_i}` on the variables of `ring`.
///
/// The generators `x_i - t^{a_i}` are homogeneous once `t` has weight 1 and
/// `x_i` weight `a_i`. Among terms of equal weight the order prefers larger
/// powers of `t`, so a homogeneous element whose leading term is free of `t`
/// is free of `t`, and the `t`-free part of the basis generates the kernel.
/// The result lives in `ring` reweighted by the exponents, under weighted
/// reverse lexicographic order, with its Groebner basis already cached.
pub fn toric_ideal<F: Field>(ring: &RingRef<F>, curve: &MonomialCurve) -> Result<Ideal<F>> {
    let n = curve.len();
    if ring.arity() != n {
        return Err(AlgebraError::Precondition(format!(
            "{} exponents for {} variables",
            n,
            ring.arity()
        )));
    }
    let weights = curve.exponents.clone();
    let mut aux_weights = vec![1];
    aux_weights.extend(&weights);
    let order = MonomialOrder::weighted(
        aux_weights,
        MonomialOrder::block(1, MonomialOrder::Lex, MonomialOrder::RevLex),
    );
    let aux = ring.without_weights().with_leading_vars(&["_t"], order)?;
    let t = Polynomial::var(&aux, 0);
    let gens: Vec<Polynomial<F>> = (0..n)
        .map(|i| &Polynomial::var(&aux, i + 1) - &t.pow(weights[i]))
        .collect();
    let gb = buchberger(&aux, &gens)?;
    let target = ring
        .with_weights(weights.clone())?
        .with_order(MonomialOrder::weighted_revlex(weights))?;
    let kept: Vec<Polynomial<F>> = gb
        .elements()
        .iter()
        .filter(|g| !g.uses_var(0))
        .map(|g| g.narrow(&target, 0..1))
        .collect();
    let ideal = Ideal::new(&target, kept)?.standardized()?;
    if !curve.annihilates(&ideal)? {
        return Err(AlgebraError::Precondition(
            "toric generator does not vanish on the curve".into(),
        ));
    }
    Ok(ideal)
}

/// The ideal, the candidate `f` and the auxiliary `g_1, g_2, g_3` of the
/// characteristic-`p` family.
#[derive(Clone, Debug)]
pub struct PaperFamily {
    pub p: u64,
    pub curve: MonomialCurve,
    pub ideal: Ideal<Gf>,
    pub f: Polynomial<Gf>,
    pub g: [Polynomial<Gf>; 3],
}

impl PaperFamily {
    /// `x_1^p f - (g_1 g_3 + g_2^p)`, zero in characteristic `p`.
    pub fn identity_defect(&self) -> Polynomial<Gf> {
        let ring = self.f.ring();
        let lhs = &Polynomial::var(ring, 0).pow(self.p as u32) * &self.f;
        let rhs = &(&self.g[0] * &self.g[2]) + &self.g[1].pow(self.p as u32);
        &lhs - &rhs
    }
}

/// Polynomials `f, g_1, g_2, g_3` of the family in `ring` (any field).
pub fn family_polynomials<F: Field>(
    ring: &RingRef<F>,
    p: u32,
) -> Result<(Polynomial<F>, [Polynomial<F>; 3])> {
    let f = Polynomial::parse(
        ring,
        &format!("x1^{q}*x2 - x2^{q} - x1*x3^{p} + x4^{p}", q = p + 1),
    )?;
    let g1 = Polynomial::parse(ring, &format!("x1^{} - x2^{p}", p + 1))?;
    let g2 = Polynomial::parse(ring, "x1*x4 - x2*x3")?;
    let g3 = Polynomial::parse(ring, &format!("x1^{p}*x2 - x3^{p}"))?;
    Ok((f, [g1, g2, g3]))
}

pub fn paper_family(p: u64) -> Result<PaperFamily> {
    let field = GfKind::new(p)?;
    let ring = Ring::<Gf>::with_indexed_vars(field, "x", 4)?;
    let curve = MonomialCurve::family(p as u32);
    let ideal = toric_ideal(&ring, &curve)?;
    let (f, g) = family_polynomials(ideal.ring(), p as u32)?;
    Ok(PaperFamily {
        p,
        curve,
        ideal,
        f,
        g,
    })
}

/// Toric ideal of `(14, 20, 25, 30, 91)` over GF(2), under the raised budget.
pub fn kunz_example() -> Result<Ideal<Gf>> {
    let ring = Ring::<Gf>::with_indexed_vars(GfKind::new(2)?, "x", 5)?.with_budget(KUNZ_BUDGET);
    toric_ideal(&ring, &MonomialCurve::new(KUNZ_EXPONENTS.to_vec())?)
}

/// Nonnegative solutions of `sum c_i a_i = value`, in lexicographic order of
/// the coefficient vectors, at most `limit` of them.
pub fn semigroup_representations(exponents: &[u32], value: u64, limit: usize) -> Vec<Vec<u64>> {
    fn go(
        a: &[u32],
        k: usize,
        rest: u64,
        cur: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if k + 1 == a.len() {
            if rest.is_multiple_of(a[k] as u64) {
                cur.push(rest / a[k] as u64);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for c in 0..=rest / a[k] as u64 {
            cur.push(c);
            go(a, k + 1, rest - c * a[k] as u64, cur, out, limit);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if exponents.is_empty() {
        if value == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(exponents, 0, value, &mut Vec::new(), &mut out, limit);
    out
}

/// Whether `a * a_j` is outside the semigroup of the other exponents for
/// every `0 < a < max_power`. Then no binomial `x_j^a - x^v` with `v` free
/// of `x_j` lies in the toric ideal.
pub fn binomial_absence_check(curve: &MonomialCurve, j: usize, max_power: u32) -> Result<bool> {
    if j >= curve.len() {
        return Err(AlgebraError::VariableOutOfRange {
            index: j,
            arity: curve.len(),
        });
    }
    let others: Vec<u32> = curve
        .exponents
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != j)
        .map(|(_, &a)| a)
        .collect();
    Ok((1..max_power).all(|a| {
        semigroup_representations(&others, a as u64 * curve.exponents[j] as u64, 1).is_empty()
    }))
}

/// Semigroup certificate that `f` is not in `𝔐I` for the toric ideal `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PurePowerCertificate {
    pub variable: usize,
    pub exponent: u32,
}

/// Looks for a pure power `x_j^e` among the terms of `f` such that no element
/// of `I` has a term `x_j^a` with `0 < a < e`; then no element of `𝔐I` has
/// the term `x_j^e` and `f ∉ 𝔐I`. The toric ideal is spanned by binomials,
/// so the absence of such terms reduces to [`binomial_absence_check`].
pub fn pure_power_certificate<F: Field>(
    curve: &MonomialCurve,
    f: &Polynomial<F>,
) -> Result<Option<PurePowerCertificate>> {
    for t in f.terms() {
        let support: Vec<usize> = t.mono.support().collect();
        if let [j] = support[..] {
            let e = t.mono.exponent(j);
            if binomial_absence_check(curve, j, e)? {
                return Ok(Some(PurePowerCertificate {
                    variable: j,
                    exponent: e,
                }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    #[test]
    fn cuspidal_cubic() {
        let r = Ring::<crate::field::Rational>::new(Rationals, &["x1", "x2"]).unwrap();
        let i = toric_ideal(&r, &MonomialCurve::new(vec![2, 3]).unwrap()).unwrap();
        let expected = Polynomial::parse(i.ring(), "x1^3 - x2^2").unwrap();
        assert_eq!(i.gens(), &[expected]);
    }

    #[test]
    fn curve_345_has_three_quadric_like_generators() {
        let r = Ring::<crate::field::Rational>::new(Rationals, &["x", "y", "z"]).unwrap();
        let curve = MonomialCurve::new(vec![3, 4, 5]).unwrap();
        let i = toric_ideal(&r, &curve).unwrap();
        assert!(curve.annihilates(&i).unwrap());
        assert_eq!(i.minimal_generators().unwrap().gens().len(), 3);
        assert_eq!(i.codimension().unwrap(), 2);
    }

    #[test]
    fn family_identity_is_exact() {
        for p in [2u64, 3, 5, 7] {
            let ring = Ring::<Gf>::with_indexed_vars(GfKind::new(p).unwrap(), "x", 4).unwrap();
            let (f, g) = family_polynomials(&ring, p as u32).unwrap();
            let lhs = &Polynomial::var(&ring, 0).pow(p as u32) * &f;
            let rhs = &(&g[0] * &g[2]) + &g[1].pow(p as u32);
            assert!((&lhs - &rhs).is_zero(), "p = {p}");
        }
    }

    #[test]
    fn family_at_two() {
        let fam = paper_family(2).unwrap();
        assert_eq!(fam.curve.exponents(), &[4, 6, 7, 9]);
        assert_eq!(
            fam.f.to_string(),
            Polynomial::parse(fam.f.ring(), "x1^3*x2 + x2^3 + x1*x3^2 + x4^2")
                .unwrap()
                .to_string()
        );
        assert!(fam.identity_defect().is_zero());
        for g in fam.g.iter().chain([&fam.f]) {
            assert!(fam.ideal.contains(g).unwrap());
        }
        assert_eq!(fam.ideal.codimension().unwrap(), 3);
        assert_eq!(MonomialCurve::family(3).exponents(), &[9, 12, 13, 16]);
    }

    #[test]
    fn semigroup_oracle() {
        assert!(semigroup_representations(&[2, 3], 1, usize::MAX).is_empty());
        assert_eq!(
            semigroup_representations(&[2, 3], 5, usize::MAX),
            vec![vec![1, 1]]
        );
        assert!(semigroup_representations(&[4, 6, 7], 9, usize::MAX).is_empty());
        assert!(binomial_absence_check(&MonomialCurve::family(2), 3, 2).unwrap());
        assert!(binomial_absence_check(&MonomialCurve::family(3), 3, 3).unwrap());
        assert!(binomial_absence_check(&MonomialCurve::new(vec![2, 3]).unwrap(), 0, 2).unwrap());
        assert!(binomial_absence_check(&MonomialCurve::family(2), 9, 2).is_err());
    }

    #[test]
    fn pure_power_certificate_for_f() {
        let fam = paper_family(2).unwrap();
        let cert = pure_power_certificate(&fam.curve, &fam.f).unwrap().unwrap();
        assert_eq!(
            cert,
            PurePowerCertificate {
                variable: 3,
                exponent: 2
            }
        );
    }
}
