//! Decision procedures on top of the symbolic-power machinery: whether every
//! evolution is trivial (`I^(2) ⊆ 𝔐I`), the Hilbert–Burch, licci-row and
//! almost-complete-intersection containments, the Euler-relation certificate
//! for quasihomogeneous ideals, and the annihilator explorer for random
//! determinantal ideals.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{AlgebraError, Result};
use crate::field::{Field, FieldKind};
use crate::fitting::{canonical_module, present_ideal, PolyMatrix};
use crate::ideal::Ideal;
use crate::poly::{MonomialOrder, Polynomial, Ring, RingRef, WeightedDegree};
use crate::symbolic::{
    in_symbolic_square, monomial_primary_decomposition, symbolic_power,
    symbolic_power_dimension_one, SymbolicPower, SymbolicStrategy,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    AllTrivial,
    NontrivialExists,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::AllTrivial => "all-trivial",
            Verdict::NontrivialExists => "nontrivial-exists",
        }
    }
}

/// Independent evidence that a witness lies in `I^(2)`.
#[derive(Clone, Debug)]
pub enum MembershipCertificate<F: Field> {
    /// `h^k * w ∈ I^2` for every listed `(h, k)`.
    Saturation(Vec<SaturationPower<F>>),
    /// `w ∈ Q^2` for each of this many isolated primary components `Q`.
    Components(usize),
    /// Every minor of the given size of a presentation of `I/(w)` lies in
    /// `I`.
    Fitting { minor_size: usize },
}

#[derive(Clone, Debug)]
pub struct EvolutionVerdict<F: Field> {
    pub strategy: &'static str,
    pub method: String,
    pub verdict: Verdict,
    /// Element of `I^(2)` outside `𝔐I`.
    pub witness: Option<Polynomial<F>>,
    pub membership: Option<MembershipCertificate<F>>,
    /// Normal form of the witness modulo `𝔐I`.
    pub outside_normal_form: Option<Polynomial<F>>,
    /// Generators of `I^(2)`, when the strategy computes them.
    pub symbolic_square: Option<Vec<Polynomial<F>>>,
    pub assumptions: Vec<String>,
}

/// Ascending degree, then lexicographic on the leading monomial.
pub fn sort_for_search<F: Field>(polys: &mut [Polynomial<F>]) {
    let key = |p: &Polynomial<F>| p.graded_degree().unwrap_or(0);
    polys.sort_by(|a, b| {
        key(a)
            .cmp(&key(b))
            .then_with(|| match (a.leading_monomial(), b.leading_monomial()) {
                (Some(x), Some(y)) => MonomialOrder::Lex.cmp(y, x),
                _ => Ordering::Equal,
            })
    });
}

/// `I ≠ R` and every generator vanishes at the origin.
fn check_proper_in_maximal<F: Field>(ideal: &Ideal<F>) -> Result<()> {
    if ideal.is_zero() {
        return Err(AlgebraError::Precondition("the zero ideal".into()));
    }
    let origin = crate::poly::Monomial::one(ideal.ring().arity());
    if ideal
        .gens()
        .iter()
        .any(|g| !g.coefficient_of(&origin).is_zero())
    {
        return Err(AlgebraError::Precondition(
            "ideal is not contained in the maximal ideal".into(),
        ));
    }
    Ok(())
}

pub fn maximal_times<F: Field>(ideal: &Ideal<F>) -> Result<Ideal<F>> {
    Ideal::maximal(ideal.ring()).product(ideal)
}

/// Saturating elements whose powers certify membership in `I^(2)`.
fn saturators<F: Field>(
    ideal: &Ideal<F>,
    sp: Option<&SymbolicPower<F>>,
) -> Result<Vec<Polynomial<F>>> {
    if let Some(h) = sp.and_then(|s| s.witness.clone()) {
        return Ok(vec![h]);
    }
    if ideal.is_graded() && ideal.dimension()? == 1 {
        let ring = ideal.ring();
        return Ok((0..ring.arity())
            .map(|i| Polynomial::var(ring, i))
            .collect());
    }
    Ok(vec![crate::symbolic::default_witness(ideal)?])
}

/// A saturating element with the exponent that pushes the witness into the ideal.
pub type SaturationPower<F> = (Polynomial<F>, u32);

/// Smallest `k ≤ 64` with `h^k w ∈ J`, per saturating element.
fn saturation_certificate<F: Field>(
    j: &Ideal<F>,
    w: &Polynomial<F>,
    hs: &[Polynomial<F>],
) -> Result<Option<Vec<SaturationPower<F>>>> {
    let mut out = Vec::new();
    for h in hs {
        let mut cur = w.clone();
        let mut found = None;
        for k in 0..=64 {
            if j.contains(&cur)? {
                found = Some(k);
                break;
            }
            cur = &cur * h;
        }
        match found {
            Some(k) => out.push((h.clone(), k)),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

/// Decides `I^(2) ⊆ 𝔐I`. The Fitting strategy tests single elements: the
/// supplied generators of `I`, then a minimal generating set. It fails with
/// `Unsupported` when none of them lies in `I^(2) ∖ 𝔐I`.
pub fn check_evolutions<F: Field>(
    ideal: &Ideal<F>,
    strategy: &SymbolicStrategy<F>,
) -> Result<EvolutionVerdict<F>> {
    check_proper_in_maximal(ideal)?;
    if ideal.is_unit()? {
        return Err(AlgebraError::Precondition("the unit ideal".into()));
    }
    let mi = maximal_times(ideal)?;
    let mut assumptions = vec![
        "R/I is reduced".to_string(),
        "R/I is generically separable".to_string(),
    ];
    if let SymbolicStrategy::Fitting = strategy {
        let c = ideal.codimension()?;
        let mut candidates = ideal.gens().to_vec();
        sort_for_search(&mut candidates);
        for g in ideal.minimal_generators()?.gens() {
            if !candidates.contains(g) {
                candidates.push(g.clone());
            }
        }
        assumptions.push("I is unmixed and generically a complete intersection".into());
        for g in candidates {
            let v = in_symbolic_square(ideal, &g, c)?;
            if v.member {
                let nf = mi.reduce(&g)?;
                if nf.is_zero() {
                    continue;
                }
                return Ok(EvolutionVerdict {
                    strategy: strategy.name(),
                    method: format!("F_{}(I/(w)) ⊆ I with c = {c}", c - 1),
                    verdict: Verdict::NontrivialExists,
                    witness: Some(g),
                    membership: Some(MembershipCertificate::Fitting {
                        minor_size: v.minor_size,
                    }),
                    outside_normal_form: Some(nf),
                    symbolic_square: None,
                    assumptions,
                });
            }
        }
        return Err(AlgebraError::Unsupported(
            "no tested generator lies in I^(2) outside mI; the Fitting strategy cannot certify that all evolutions are trivial"
                .into(),
        ));
    }
    let sp = symbolic_power(ideal, 2, strategy)?;
    assumptions.extend(sp.assumptions.iter().cloned());
    let mut candidates = sp.ideal.gens().to_vec();
    sort_for_search(&mut candidates);
    for g in &candidates {
        let nf = mi.reduce(g)?;
        if nf.is_zero() {
            continue;
        }
        let membership = match strategy {
            SymbolicStrategy::Monomial => component_certificate(ideal, g)?,
            _ => {
                let square = ideal.power(2)?;
                let hs = saturators(ideal, Some(&sp))?;
                saturation_certificate(&square, g, &hs)?.map(MembershipCertificate::Saturation)
            }
        };
        let Some(membership) = membership else {
            return Err(AlgebraError::Precondition(format!(
                "witness {g} failed re-verification; hypotheses violated?"
            )));
        };
        // fresh ideal, so the check does not reuse the search's basis
        let fresh = Ideal::new(ideal.ring(), mi.gens().to_vec())?;
        if fresh.contains(g)? {
            return Err(AlgebraError::Precondition(format!(
                "witness {g} lies in mI on re-verification"
            )));
        }
        return Ok(EvolutionVerdict {
            strategy: strategy.name(),
            method: sp.method,
            verdict: Verdict::NontrivialExists,
            witness: Some(g.clone()),
            membership: Some(membership),
            outside_normal_form: Some(nf),
            symbolic_square: Some(candidates.clone()),
            assumptions,
        });
    }
    Ok(EvolutionVerdict {
        strategy: strategy.name(),
        method: sp.method,
        verdict: Verdict::AllTrivial,
        witness: None,
        membership: None,
        outside_normal_form: None,
        symbolic_square: Some(candidates),
        assumptions,
    })
}

fn component_certificate<F: Field>(
    ideal: &Ideal<F>,
    w: &Polynomial<F>,
) -> Result<Option<MembershipCertificate<F>>> {
    let comps: Vec<_> = monomial_primary_decomposition(ideal)?
        .into_iter()
        .filter(|c| c.isolated)
        .collect();
    for c in &comps {
        if !c.primary.power(2)?.contains(w)? {
            return Ok(None);
        }
    }
    Ok(Some(MembershipCertificate::Components(comps.len())))
}

/// `I^(2)` for the built-in checks: monomial path for monomial ideals,
/// `(I^2 : 𝔐^∞)` for graded ideals of dimension one, otherwise saturation by
/// the first variable outside `I`.
pub fn default_symbolic_square<F: Field>(ideal: &Ideal<F>) -> Result<SymbolicPower<F>> {
    if ideal.is_monomial() {
        symbolic_power(ideal, 2, &SymbolicStrategy::Monomial)
    } else {
        symbolic_power(ideal, 2, &SymbolicStrategy::Saturation(None))
    }
}

/// Generators of `sub` outside `sup`, first failure only.
fn first_outside<F: Field>(sup: &Ideal<F>, sub: &[Polynomial<F>]) -> Result<Option<Polynomial<F>>> {
    for g in sub {
        if !sup.contains(g)? {
            return Ok(Some(g.clone()));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub struct ContainmentCheck<F: Field> {
    /// Generators of the ideal `J` in `I^(2) ⊆ IJ`.
    pub j: Vec<Polynomial<F>>,
    pub holds: bool,
    pub witness: Option<Polynomial<F>>,
}

#[derive(Clone, Debug)]
pub struct HilbertBurchReport<F: Field> {
    pub ideal: Ideal<F>,
    pub symbolic_square: Vec<Polynomial<F>>,
    /// One check per column of the matrix.
    pub columns: Vec<ContainmentCheck<F>>,
}

impl<F: Field> HilbertBurchReport<F> {
    pub fn holds(&self) -> bool {
        self.columns.iter().all(|c| c.holds)
    }
}

/// `I^(2) ⊆ I J_j` for the ideal `I` of maximal minors of an `n x (n-1)`
/// matrix and every column ideal `J_j`.
pub fn hilbert_burch_check<F: Field>(m: &PolyMatrix<F>) -> Result<HilbertBurchReport<F>> {
    let n = m.nrows();
    if n < 2 || m.ncols() + 1 != n {
        return Err(AlgebraError::Precondition(format!(
            "expected an n x (n-1) matrix, got {}x{}",
            n,
            m.ncols()
        )));
    }
    let ideal = m.minor_ideal(n - 1)?;
    if ideal.is_zero() || ideal.is_unit()? || ideal.codimension()? != 2 {
        return Err(AlgebraError::Precondition(
            "maximal minors do not have codimension 2".into(),
        ));
    }
    let sq = default_symbolic_square(&ideal)?.ideal.gens().to_vec();
    let mut columns = Vec::new();
    for col in m.columns() {
        let j = Ideal::new(m.ring(), col.clone())?;
        let witness = first_outside(&ideal.product(&j)?, &sq)?;
        columns.push(ContainmentCheck {
            j: col,
            holds: witness.is_none(),
            witness,
        });
    }
    Ok(HilbertBurchReport {
        ideal,
        symbolic_square: sq,
        columns,
    })
}

#[derive(Clone, Debug)]
pub struct RowCheckReport<F: Field> {
    /// Presentation matrix of the canonical module.
    pub canonical_presentation: PolyMatrix<F>,
    pub row: usize,
    pub symbolic_square: Vec<Polynomial<F>>,
    pub check: ContainmentCheck<F>,
}

/// For a perfect (licci by assertion) ideal: `I^(2) ⊆ J I` with `J` the
/// entries of a row of the canonical module's presentation, plus `I`.
pub fn licci_row_check<F: Field>(ideal: &Ideal<F>, row: usize) -> Result<RowCheckReport<F>> {
    let omega = canonical_module(ideal)?;
    let pres = omega.relations().clone();
    if row >= pres.nrows() {
        return Err(AlgebraError::Precondition(format!(
            "row {row} of a {}-row presentation",
            pres.nrows()
        )));
    }
    let entries: Vec<Polynomial<F>> = pres
        .row(row)
        .into_iter()
        .chain(ideal.gens().iter().cloned())
        .collect();
    let j = Ideal::new(ideal.ring(), entries)?;
    let sq = default_symbolic_square(ideal)?.ideal.gens().to_vec();
    let witness = first_outside(&j.product(ideal)?, &sq)?;
    Ok(RowCheckReport {
        canonical_presentation: pres,
        row,
        symbolic_square: sq,
        check: ContainmentCheck {
            j: j.gens().to_vec(),
            holds: witness.is_none(),
            witness,
        },
    })
}

#[derive(Clone, Debug)]
pub struct AciReport<F: Field> {
    pub codimension: usize,
    pub minimal_generators: Vec<Polynomial<F>>,
    pub symbolic_square: Vec<Polynomial<F>>,
    pub holds: bool,
    pub witness: Option<Polynomial<F>>,
}

/// `I^(2) ⊆ 𝔐I` for an ideal minimally generated by `codim + 1` elements.
pub fn aci_check<F: Field>(ideal: &Ideal<F>) -> Result<AciReport<F>> {
    check_proper_in_maximal(ideal)?;
    let c = ideal.codimension()?;
    let mingens = ideal.minimal_generators()?.gens().to_vec();
    if mingens.len() != c + 1 {
        return Err(AlgebraError::Precondition(format!(
            "{} minimal generators for codimension {c}; not an almost complete intersection",
            mingens.len()
        )));
    }
    let sq = default_symbolic_square(ideal)?.ideal.gens().to_vec();
    let witness = first_outside(&maximal_times(ideal)?, &sq)?;
    Ok(AciReport {
        codimension: c,
        minimal_generators: mingens,
        symbolic_square: sq,
        holds: witness.is_none(),
        witness,
    })
}

#[derive(Clone, Debug)]
pub struct EulerReport<F: Field> {
    pub degree: u64,
    /// Index of the first partial derivative outside `I^(d-1)`, if any.
    pub derivative_outside: Option<usize>,
    /// `c_j = w_j ∂f/∂x_j / deg f` with `f = sum x_j c_j`.
    pub cofactors: Vec<Polynomial<F>>,
    pub reconstructs: bool,
}

impl<F: Field> EulerReport<F> {
    /// `f ∈ 𝔐 I^(d-1)` is certified.
    pub fn holds(&self) -> bool {
        self.derivative_outside.is_none() && self.reconstructs
    }
}

/// Euler-relation certificate `f ∈ 𝔐 I^(d-1)` for a quasihomogeneous
/// `f ∈ I^(d)`, given `lower = I^(d-1)`. Fails when `deg f` vanishes in the
/// field.
pub fn quasihomogeneous_check<F: Field>(
    lower: &Ideal<F>,
    f: &Polynomial<F>,
) -> Result<EulerReport<F>> {
    let degree = match f.weighted_degree()? {
        WeightedDegree::Homogeneous(d) => d,
        WeightedDegree::NotQuasihomogeneous => return Err(AlgebraError::NotQuasihomogeneous),
        WeightedDegree::Zero => return Err(AlgebraError::Precondition("f is zero".into())),
    };
    let cofactors = f.euler_combination()?;
    let ring = f.ring();
    let mut derivative_outside = None;
    for j in 0..ring.arity() {
        if !lower.contains(&f.partial_derivative(j)?)? {
            derivative_outside = Some(j);
            break;
        }
    }
    let sum = cofactors
        .iter()
        .enumerate()
        .fold(Polynomial::zero(ring), |acc, (j, c)| {
            &acc + &(&Polynomial::var(ring, j) * c)
        });
    Ok(EulerReport {
        degree,
        derivative_outside,
        cofactors,
        reconstructs: &sum == f,
    })
}

/// Relation between two ideals by double containment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealRelation {
    Equal,
    /// The first ideal strictly contains the second.
    StrictlyContains,
    /// The first ideal is strictly contained in the second.
    StrictlyContained,
    Incomparable,
}

impl IdealRelation {
    pub fn compare<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<Self> {
        Ok(match (a.contains_ideal(b)?, b.contains_ideal(a)?) {
            (true, true) => IdealRelation::Equal,
            (true, false) => IdealRelation::StrictlyContains,
            (false, true) => IdealRelation::StrictlyContained,
            (false, false) => IdealRelation::Incomparable,
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            IdealRelation::Equal => "equal",
            IdealRelation::StrictlyContains => "annihilator strictly contains candidate",
            IdealRelation::StrictlyContained => "annihilator strictly inside candidate",
            IdealRelation::Incomparable => "incomparable",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConjectureReport<F: Field> {
    pub seed: u64,
    pub d: u32,
    /// Degenerate matrices skipped before this one.
    pub rerolls: u32,
    pub matrix: PolyMatrix<F>,
    pub ideal: Ideal<F>,
    pub symbolic_power: Vec<Polynomial<F>>,
    /// `(I^d : I^(d))`.
    pub annihilator: Ideal<F>,
    /// `F_1(I)^⌊d/2⌋`.
    pub candidate: Ideal<F>,
    pub relation: IdealRelation,
    /// `F_2(I) ⊆ (I^d : I^(d))`.
    pub fc_in_annihilator: bool,
}

/// Random element of the field: uniform residues for `GF(p)`, integers in
/// `-9..=9` in characteristic zero.
fn random_scalar<K: FieldKind>(kind: &K, rng: &mut ChaCha8Rng) -> K::Elem {
    match kind.characteristic() {
        0 => kind.integer(rng.gen_range(-9..=9)),
        p => kind.integer(rng.gen_range(0..p) as i64),
    }
}

/// `rows x cols` matrix of random linear forms in `ring`.
pub fn random_linear_matrix<F: Field>(
    ring: &RingRef<F>,
    rows: usize,
    cols: usize,
    rng: &mut ChaCha8Rng,
) -> Result<PolyMatrix<F>> {
    let entries = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    (0..ring.arity()).fold(Polynomial::zero(ring), |acc, v| {
                        let c = random_scalar(ring.field(), rng);
                        &acc + &Polynomial::var(ring, v).scale(&c)
                    })
                })
                .collect()
        })
        .collect();
    PolyMatrix::new(ring, entries)
}

/// Draws linear matrices until the maximal minors have codimension 2.
/// Returns the matrix, its minor ideal and the number of rejected draws.
fn draw_codim_two<F: Field>(
    ring: &RingRef<F>,
    rows: usize,
    cols: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(PolyMatrix<F>, Ideal<F>, u32)> {
    let k = rows.min(cols);
    let mut rerolls = 0;
    loop {
        let m = random_linear_matrix(ring, rows, cols, rng)?;
        let i = m.minor_ideal(k)?;
        if !i.is_zero() && !i.is_unit()? && i.codimension()? == 2 {
            return Ok((m, i, rerolls));
        }
        rerolls += 1;
        if rerolls > 1000 {
            return Err(AlgebraError::Precondition(
                "no nondegenerate matrix in 1000 draws".into(),
            ));
        }
    }
}

/// Seeded `(n+1) x n` matrix of linear forms whose maximal minors have
/// codimension 2, with the number of rejected draws.
pub fn random_hilbert_burch_matrix<F: Field>(
    ring: &RingRef<F>,
    n: usize,
    seed: u64,
) -> Result<(PolyMatrix<F>, u32)> {
    if n == 0 {
        return Err(AlgebraError::Precondition(
            "need at least one column".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (m, _, rerolls) = draw_codim_two(ring, n + 1, n, &mut rng)?;
    Ok((m, rerolls))
}

/// Compares `(I^d : I^(d))` with `F_1(I)^⌊d/2⌋` for `I` the 2x2 minors of a
/// random 2x3 matrix of linear forms in three variables.
pub fn conjecture_explorer<F: Field>(
    field: F::Kind,
    seed: u64,
    d: u32,
) -> Result<ConjectureReport<F>> {
    if !(2..=3).contains(&d) {
        return Err(AlgebraError::Precondition(format!(
            "d = {d}; the explorer runs d = 2 or 3"
        )));
    }
    let ring = Ring::<F>::new(field, &["x", "y", "z"])?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (matrix, ideal, rerolls) = draw_codim_two(&ring, 2, 3, &mut rng)?;
    let symbolic = symbolic_power_dimension_one(&ideal, d)?;
    let annihilator = ideal.power(d)?.quotient(&symbolic)?;
    let pres = present_ideal(&ideal.minimal_generators()?)?;
    let candidate = pres.fitting_ideal(1)?.power(d / 2)?;
    let relation = IdealRelation::compare(&annihilator, &candidate)?;
    let fc_in_annihilator = annihilator.contains_ideal(&pres.fitting_ideal(2)?)?;
    Ok(ConjectureReport {
        seed,
        d,
        rerolls,
        matrix,
        ideal,
        symbolic_power: symbolic.gens().to_vec(),
        annihilator,
        candidate,
        relation,
        fc_in_annihilator,
    })
}

/// `F_c(I) · I^(2) ⊆ I^2`; returns the first product outside `I^2`.
pub fn fitting_annihilates_symbolic_square<F: Field>(
    ideal: &Ideal<F>,
    c: usize,
    symbolic_square: &[Polynomial<F>],
) -> Result<Option<(Polynomial<F>, Polynomial<F>)>> {
    let gens = if ideal.is_graded() {
        ideal.minimal_generators()?
    } else {
        ideal.clone()
    };
    let fc = present_ideal(&gens)?.fitting_ideal(c)?;
    let fc_gens = if fc.is_zero() {
        Vec::new()
    } else {
        fc.standardized()?.gens().to_vec()
    };
    let square = ideal.power(2)?;
    for a in &fc_gens {
        for b in symbolic_square {
            let prod = a * b;
            if !square.contains(&prod)? {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}
