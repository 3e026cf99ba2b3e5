use evoalg::evolution::{
    check_evolutions, conjecture_explorer, fitting_annihilates_symbolic_square,
    hilbert_burch_check, licci_row_check, maximal_times, quasihomogeneous_check,
    random_hilbert_burch_matrix, sort_for_search, EvolutionVerdict, MembershipCertificate,
};
use evoalg::fitting::{present_ideal, ModulePresentation, PolyMatrix};
use evoalg::symbolic::{in_symbolic_power, in_symbolic_square, symbolic_power, SymbolicStrategy};
use evoalg::toric::{
    binomial_absence_check, family_polynomials, paper_family, pure_power_certificate, toric_ideal,
    MonomialCurve, KUNZ_BUDGET, KUNZ_EXPONENTS,
};
use evoalg::{
    AlgebraError, Field, Gf, GfKind, Ideal, Polynomial, Rational, Rationals, Result, Ring, RingRef,
};
use serde_json::{json, Value};

use crate::job::{AnyRing, Command, FieldSpec, JobSpec, StrategyFlag};
use crate::report::{poly, polys, Sections};

const DEFAULT_BUDGET: u64 = evoalg::poly::DEFAULT_STEP_BUDGET;

pub(crate) fn dispatch(job: &JobSpec, out: &mut Sections) -> Result<()> {
    match job.command {
        Command::PaperExample => paper_example(job, out),
        Command::Kunz => kunz(job, out),
        Command::Conjecture => conjecture(job, out),
        _ => match command_ring(job)? {
            AnyRing::Prime(r) => on_ring(job, &r, out),
            AnyRing::Rational(r) => on_ring(job, &r, out),
        },
    }
}

/// The declared ring, or the default ring of commands that do not need one.
fn command_ring(job: &JobSpec) -> Result<AnyRing> {
    if let Some(r) = job.ring() {
        return r;
    }
    let field = job.flags.field;
    match job.command {
        Command::Toric => {
            let n = job.flags.exponents.as_ref().map_or(0, Vec::len);
            let decl = crate::job::RingDecl {
                field: field.unwrap_or(FieldSpec::Rationals),
                vars: (1..=n).map(|i| format!("x{i}")).collect(),
                weights: None,
            };
            AnyRing::build(&decl, job.flags.order)
        }
        Command::HilbertBurch => {
            let decl = crate::job::RingDecl {
                field: field.unwrap_or(FieldSpec::Prime(101)),
                vars: vec!["x".into(), "y".into(), "z".into()],
                weights: None,
            };
            AnyRing::build(&decl, job.flags.order)
        }
        c => Err(AlgebraError::Precondition(format!(
            "`{}` needs a ring declaration",
            c.name()
        ))),
    }
}

fn on_ring<F: Field>(job: &JobSpec, ring: &RingRef<F>, out: &mut Sections) -> Result<()> {
    let ring = ring.with_budget(job.flags.budget.unwrap_or(DEFAULT_BUDGET));
    out.result("ring", ring.to_string());
    out.result("order", ring.order().to_string());
    match job.command {
        Command::Gb => gb(job, &ring, out),
        Command::Member => member(job, &ring, out),
        Command::SymbolicPower => symbolic(job, &ring, out),
        Command::Fitting => fitting(job, &ring, out),
        Command::EvolutionCheck => evolution(job, &ring, out),
        Command::Toric => toric(job, &ring, out),
        Command::HilbertBurch => hilbert_burch(job, &ring, out),
        Command::PaperExample | Command::Kunz | Command::Conjecture => {
            unreachable!("dispatched before")
        }
    }
}

fn primary_ideal<F: Field>(job: &JobSpec, ring: &RingRef<F>) -> Result<Ideal<F>> {
    let (_, gens) = job
        .primary_ideal()
        .ok_or_else(|| AlgebraError::Precondition("no ideal declared".into()))?;
    let gens: Vec<&str> = gens.iter().map(String::as_str).collect();
    Ideal::parse(ring, &gens)
}

fn declared_polys<F: Field>(
    job: &JobSpec,
    ring: &RingRef<F>,
) -> Result<Vec<(String, Polynomial<F>)>> {
    job.polys
        .iter()
        .map(|(n, p)| Ok((n.clone(), Polynomial::parse(ring, p)?)))
        .collect()
}

fn required_polys<F: Field>(
    job: &JobSpec,
    ring: &RingRef<F>,
) -> Result<Vec<(String, Polynomial<F>)>> {
    let ps = declared_polys(job, ring)?;
    if ps.is_empty() {
        return Err(AlgebraError::Precondition(format!(
            "`{}` needs at least one `poly` declaration",
            job.command.name()
        )));
    }
    Ok(ps)
}

fn strategy<F: Field>(
    job: &JobSpec,
    ring: &RingRef<F>,
    ideal: &Ideal<F>,
) -> Result<SymbolicStrategy<F>> {
    let h = job
        .flags
        .h
        .as_ref()
        .map(|h| Polynomial::parse(ring, h))
        .transpose()?;
    Ok(match job.flags.strategy {
        Some(StrategyFlag::Monomial) => SymbolicStrategy::Monomial,
        Some(StrategyFlag::Fitting) => SymbolicStrategy::Fitting,
        Some(StrategyFlag::Saturation) => SymbolicStrategy::Saturation(h),
        None if h.is_none() && ideal.is_monomial() => SymbolicStrategy::Monomial,
        None => SymbolicStrategy::Saturation(h),
    })
}

fn gb<F: Field>(job: &JobSpec, ring: &RingRef<F>, out: &mut Sections) -> Result<()> {
    let ideal = primary_ideal(job, ring)?;
    let gb = out.time("groebner", || ideal.groebner())?;
    out.result("groebner_basis", polys(gb.elements()));
    out.result("size", gb.len());
    out.certificate("buchberger_criterion", gb.satisfies_buchberger_criterion());
    out.certificate("reduced", gb.is_reduced());
    out.counter("reduction_steps", gb.steps());
    out.say(format!(
        "reduced Groebner basis: {} elements in {} reduction steps",
        gb.len(),
        gb.steps()
    ));
    for g in gb.elements() {
        out.say(format!("  {g}"));
    }
    Ok(())
}

fn member<F: Field>(job: &JobSpec, ring: &RingRef<F>, out: &mut Sections) -> Result<()> {
    let ideal = primary_ideal(job, ring)?;
    let mut rows = Vec::new();
    let mut forms = serde_json::Map::new();
    for (name, p) in required_polys(job, ring)? {
        let nf = out.time(&format!("reduce_{name}"), || ideal.reduce(&p))?;
        let inside = nf.is_zero();
        out.say(format!("{name} {} I", if inside { "∈" } else { "∉" }));
        rows.push(json!({ "name": name, "polynomial": p.to_string(), "member": inside }));
        forms.insert(name, poly(&nf));
    }
    out.result("members", rows);
    out.certificate("normal_forms", forms);
    out.counter("reduction_steps", ideal.groebner()?.steps());
    Ok(())
}

fn symbolic<F: Field>(job: &JobSpec, ring: &RingRef<F>, out: &mut Sections) -> Result<()> {
    let ideal = primary_ideal(job, ring)?;
    let d = job.flags.d.unwrap_or(2);
    if d == 0 {
        return Err(AlgebraError::Precondition("--d must be positive".into()));
    }
    let strategy = strategy(job, ring, &ideal)?;
    out.result("d", d);
    out.result("strategy", strategy.name());
    if let SymbolicStrategy::Fitting = strategy {
        return fitting_memberships(job, ring, &ideal, d, out);
    }
    let sp = out.time("symbolic_power", || symbolic_power(&ideal, d, &strategy))?;
    let mut gens = sp.ideal.gens().to_vec();
    sort_for_search(&mut gens);
    out.result("generators", polys(&gens));
    out.result("method", sp.method.clone());
    if let Some(h) = &sp.witness {
        out.certificate("saturating_element", poly(h));
    }
    out.assume(sp.assumptions.clone());
    out.say(format!(
        "I^({d}) has {} generators ({})",
        gens.len(),
        sp.method
    ));
    let mut rows = Vec::new();
    for (name, p) in declared_polys(job, ring)? {
        let inside = sp.ideal.contains(&p)?;
        out.say(format!("{name} {} I^({d})", if inside { "∈" } else { "∉" }));
        rows.push(json!({ "name": name, "member": inside }));
    }
    if !rows.is_empty() {
        out.result("members", rows);
    }
    Ok(())
}

/// Fitting-criterion membership of each declared element in `I^(d)`.
fn fitting_memberships<F: Field>(
    job: &JobSpec,
    ring: &RingRef<F>,
    ideal: &Ideal<F>,
    d: u32,
    out: &mut Sections,
) -> Result<()> {
    if d < 2 {
        return Err(AlgebraError::Precondition(
            "the Fitting criterion decides I^(d) for d >= 2".into(),
        ));
    }
    let c = ideal.codimension()?;
    let lower = if d == 2 {
        ideal.clone()
    } else {
        default_lower(ideal, d - 1)?
    };
    out.assume(["I is unmixed and generically a complete intersection".to_string()]);
    let mut rows = Vec::new();
    for (name, x) in required_polys(job, ring)? {
        if !lower.contains(&x)? {
            out.say(format!("{name} ∉ I^({d}): not even in I^({})", d - 1));
            rows.push(
                json!({ "name": name, "member": false, "reason": format!("not in I^({})", d - 1) }),
            );
            continue;
        }
        let v = out.time(&format!("fitting_{name}"), || {
            if d == 2 {
                in_symbolic_square(ideal, &x, c)
            } else {
                in_symbolic_power(ideal, &lower, &x, d - 1, c)
            }
        })?;
        out.say(format!(
            "{name} {} I^({d}): F_{}(I^({})/({name})) {} I",
            if v.member { "∈" } else { "∉" },
            v.fitting_index,
            d - 1,
            if v.member { "⊆" } else { "⊄" }
        ));
        rows.push(json!({
            "name": name,
            "member": v.member,
            "fitting_index": v.fitting_index,
            "minor_size": v.minor_size,
            "offending_minor": v.offending_minor.as_ref().map(|m| m.to_string()),
        }));
    }
    out.result("codimension", c);
    out.result("members", rows);
    Ok(())
}

fn default_lower<F: Field>(ideal: &Ideal<F>, d: u32) -> Result<Ideal<F>> {
    let s = if ideal.is_monomial() {
        SymbolicStrategy::Monomial
    } else {
        SymbolicStrategy::Saturation(None)
    };
    Ok(symbolic_power(ideal, d, &s)?.ideal)
}

fn fitting_ideals<F: Field>(pres: &ModulePresentation<F>, out: &mut Sections) -> Result<()> {
    let mut rows = Vec::new();
    for i in 0..=pres.generators() {
        let fi = pres.fitting_ideal(i)?;
        let gens = if fi.is_zero() {
            Vec::new()
        } else {
            fi.standardized()?.gens().to_vec()
        };
        out.say(format!(
            "F_{i} = ({})",
            gens.iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ));
        rows.push(json!({ "index": i, "generators": polys(&gens) }));
    }
    out.result("fitting_ideals", rows);
    Ok(())
}

fn matrix_json<F: Field>(m: &PolyMatrix<F>) -> Value {
    Value::Array((0..m.nrows()).map(|i| polys(&m.row(i))).collect())
}

fn fitting<F: Field>(job: &JobSpec, ring: &RingRef<F>, out: &mut Sections) -> Result<()> {
    if let Some((_, rows)) = job.primary_matrix() {
        let rows: Vec<Vec<&str>> = rows
            .iter()
            .map(|r| r.iter().map(String::as_str).collect())
            .collect();
        let refs: Vec<&[&str]> = rows.iter().map(Vec::as_slice).collect();
        let m = PolyMatrix::parse(ring, &refs)?;
        out.result("presentation", matrix_json(&m));
        return fitting_ideals(&ModulePresentation::new(m), out);
    }
    let ideal = primary_ideal(job, ring)?;
    if !job.polys.is_empty() {
        return fitting_memberships(job, ring, &ideal, 2, out);
    }
    let gens = if ideal.is_graded() {
        ideal.minimal_generators()?
    } else {
        ideal
    };
    let pres = out.time("presentation", || present_ideal(&gens))?;
    out.result("generators", polys(gens.gens()));
    out.result("presentation", matrix_json(pres.relations()));
    fitting_ideals(&pres, out)
}

fn membership_json<F: Field>(m: &MembershipCertificate<F>) -> Value {
    match m {
        MembershipCertificate::Saturation(powers) => json!({
            "kind": "saturation",
            "powers": powers.iter().map(|(h, k)| json!({ "h": h.to_string(), "k": k })).collect::<Vec<_>>(),
        }),
        MembershipCertificate::Components(n) => {
            json!({ "kind": "isolated-components", "components": n })
        }
        MembershipCertificate::Fitting { minor_size } => {
            json!({ "kind": "fitting", "minor_size": minor_size })
        }
    }
}

fn record_verdict<F: Field>(v: &EvolutionVerdict<F>, out: &mut Sections) {
    out.result("verdict", v.verdict.as_str());
    out.result("strategy", v.strategy);
    out.result("method", v.method.clone());
    if let Some(sq) = &v.symbolic_square {
        out.result("symbolic_square", polys(sq));
    }
    if let Some(w) = &v.witness {
        out.result("witness", poly(w));
    }
    if let Some(m) = &v.membership {
        out.certificate("witness_in_symbolic_square", membership_json(m));
    }
    if let Some(nf) = &v.outside_normal_form {
        out.certificate("witness_normal_form_mod_mI", poly(nf));
    }
    out.assume(v.assumptions.clone());
    match &v.witness {
        Some(w) => out.say(format!(
            "verdict: {} (witness {w} ∈ I^(2) ∖ mI)",
            v.verdict.as_str()
        )),
        None => out.say(format!("verdict: {} (I^(2) ⊆ mI)", v.verdict.as_str())),
    }
}

fn evolution<F: Field>(job: &JobSpec, ring: &RingRef<F>, out: &mut Sections) -> Result<()> {
    let ideal = primary_ideal(job, ring)?;
    let strategy = strategy(job, ring, &ideal)?;
    let v = out.time("check", || check_evolutions(&ideal, &strategy))?;
    record_verdict(&v, out);
    out.counter("reduction_steps", ideal.groebner()?.steps());
    Ok(())
}

fn toric<F: Field>(job: &JobSpec, ring: &RingRef<F>, out: &mut Sections) -> Result<()> {
    let exps = job
        .flags
        .exponents
        .clone()
        .ok_or_else(|| AlgebraError::Precondition("toric needs --exponents".into()))?;
    let curve = MonomialCurve::new(exps)?;
    if curve.len() != ring.arity() {
        return Err(AlgebraError::Precondition(format!(
            "{} exponents for a ring with {} variables",
            curve.len(),
            ring.arity()
        )));
    }
    let ideal = out.time("toric_ideal", || toric_ideal(ring, &curve))?;
    let gb = ideal.groebner()?;
    let mingens = out.time("minimal_generators", || ideal.minimal_generators())?;
    out.result("exponents", curve.exponents().to_vec());
    out.result("groebner_basis", polys(gb.elements()));
    out.result("minimal_generators", polys(mingens.gens()));
    out.result("codimension", ideal.codimension()?);
    out.certificate("substitution_vanishes", curve.annihilates(&ideal)?);
    out.certificate("buchberger_criterion", gb.satisfies_buchberger_criterion());
    out.counter("reduction_steps", gb.steps());
    out.say(format!(
        "toric ideal of {:?}: {} Groebner basis elements, {} minimal generators",
        curve.exponents(),
        gb.len(),
        mingens.gens().len()
    ));
    Ok(())
}

fn hilbert_burch<F: Field>(job: &JobSpec, ring: &RingRef<F>, out: &mut Sections) -> Result<()> {
    let m = match job.primary_matrix() {
        Some((_, rows)) => {
            let rows: Vec<Vec<&str>> = rows
                .iter()
                .map(|r| r.iter().map(String::as_str).collect())
                .collect();
            let refs: Vec<&[&str]> = rows.iter().map(Vec::as_slice).collect();
            PolyMatrix::parse(ring, &refs)?
        }
        None => {
            let seed = job.flags.seed.unwrap_or(0);
            let (m, rerolls) = random_hilbert_burch_matrix(ring, 2, seed)?;
            out.result("seed", seed);
            out.result("rerolls", rerolls);
            m
        }
    };
    out.result("matrix", matrix_json(&m));
    out.assume(["maximal minors are generically a complete intersection".to_string()]);
    let report = out.time("containment", || hilbert_burch_check(&m))?;
    out.result("ideal", polys(report.ideal.gens()));
    out.result("symbolic_square", polys(&report.symbolic_square));
    let cols: Vec<Value> = report
        .columns
        .iter()
        .enumerate()
        .map(|(j, c)| {
            json!({
                "column": j,
                "j": polys(&c.j),
                "holds": c.holds,
                "witness": c.witness.as_ref().map(|w| w.to_string()),
            })
        })
        .collect();
    out.result("columns", cols);
    out.result("holds", report.holds());
    for (j, c) in report.columns.iter().enumerate() {
        out.say(format!(
            "column {j}: I^(2) {} I·J_{j}",
            if c.holds { "⊆" } else { "⊄" }
        ));
    }
    let bad = out.time("fitting_annihilates", || {
        fitting_annihilates_symbolic_square(&report.ideal, 2, &report.symbolic_square)
    })?;
    out.certificate("f2_times_symbolic_square_in_square", bad.is_none());
    if report.ideal.is_graded() {
        let rows: Vec<Value> = (0..m.ncols())
            .map(|r| {
                let check = licci_row_check(&report.ideal, r)?;
                Ok(json!({ "row": r, "holds": check.check.holds }))
            })
            .collect::<Result<_>>()?;
        out.certificate("canonical_module_rows", rows);
    }
    Ok(())
}

fn smallest_power<F: Field>(
    j: &Ideal<F>,
    w: &Polynomial<F>,
    h: &Polynomial<F>,
    cap: u32,
) -> Result<Option<u32>> {
    let mut cur = w.clone();
    for k in 0..=cap {
        if j.contains(&cur)? {
            return Ok(Some(k));
        }
        cur = &cur * h;
    }
    Ok(None)
}

fn paper_example(job: &JobSpec, out: &mut Sections) -> Result<()> {
    let p = job.flags.p.unwrap_or(2);
    let field = job
        .flags
        .field
        .or(job.ring.as_ref().map(|r| r.field))
        .unwrap_or(FieldSpec::Prime(p));
    if let Some(r) = &job.ring {
        if r.vars.len() != 4 {
            return Err(AlgebraError::Precondition(
                "the family lives in four variables".into(),
            ));
        }
    }
    out.result("p", p);
    out.result("field", field.to_string());
    out.result(
        "exponents",
        MonomialCurve::family(p as u32).exponents().to_vec(),
    );
    match field {
        FieldSpec::Prime(q) if q == p => family_in_characteristic_p(job, p, out),
        FieldSpec::Prime(q) => Err(AlgebraError::Precondition(format!(
            "the identity needs characteristic {p}, not {q}"
        ))),
        FieldSpec::Rationals => family_in_characteristic_zero(job, p, out),
    }
}

fn family_in_characteristic_p(job: &JobSpec, p: u64, out: &mut Sections) -> Result<()> {
    let fam = out.time("toric_ideal", || paper_family(p))?;
    let ring = fam
        .ideal
        .ring()
        .with_budget(job.flags.budget.unwrap_or(DEFAULT_BUDGET));
    let ideal = fam.ideal.reorder(&ring);
    let f = fam.f.reorder(&ring);
    let g: Vec<Polynomial<Gf>> = fam.g.iter().map(|g| g.reorder(&ring)).collect();
    out.result("f", poly(&f));
    out.result("g", polys(&g));
    out.result("ideal", polys(ideal.gens()));

    let defect = fam.identity_defect();
    out.certificate("identity_defect", poly(&defect));
    out.result("identity_holds", defect.is_zero());
    out.say(format!("x1^{p}·f - (g1·g3 + g2^{p}) = {defect}"));

    let in_ideal = g
        .iter()
        .chain([&f])
        .map(|q| ideal.contains(q))
        .collect::<Result<Vec<_>>>()?;
    out.result("f_and_g_in_ideal", in_ideal.iter().all(|&b| b));

    let x1 = Polynomial::var(&ring, 0);
    let sat = out.time("saturation", || {
        symbolic_power(&ideal, 2, &SymbolicStrategy::Saturation(Some(x1.clone())))
    })?;
    let by_saturation = sat.ideal.contains(&f)?;
    let square = ideal.power(2)?;
    let k = smallest_power(&square, &f, &x1, 64)?;
    out.result("f_in_symbolic_square_by_saturation", by_saturation);
    out.certificate("x1_power_into_square", k.map_or(Value::Null, Value::from));
    out.say(format!(
        "saturation: f ∈ (I^2 : x1^∞) = {by_saturation} (x1^{} f ∈ I^2)",
        k.map_or("?".into(), |k| k.to_string())
    ));

    let fit = out.time("fitting", || in_symbolic_square(&ideal, &f, 3))?;
    out.result("f_in_symbolic_square_by_fitting", fit.member);
    out.certificate(
        "fitting",
        json!({ "c": 3, "fitting_index": fit.fitting_index, "minor_size": fit.minor_size,
                "offending_minor": fit.offending_minor.as_ref().map(|m| m.to_string()) }),
    );
    out.say(format!(
        "Fitting criterion (c = 3): F_2(I/(f)) ⊆ I = {}",
        fit.member
    ));

    let mi = maximal_times(&ideal)?;
    let nf = out.time("nakayama", || mi.reduce(&f))?;
    out.result("f_outside_mI", !nf.is_zero());
    out.certificate("f_normal_form_mod_mI", poly(&nf));
    let cert = pure_power_certificate(&fam.curve, &f)?;
    out.result("minimal_generator_by_semigroup", cert.is_some());
    if let Some(c) = &cert {
        out.certificate(
            "semigroup",
            json!({ "variable": format!("x{}", c.variable + 1), "exponent": c.exponent,
            "absence": binomial_absence_check(&fam.curve, c.variable, c.exponent)? }),
        );
    }
    out.say(format!(
        "Nakayama: f ∉ mI = {}; semigroup oracle agrees = {}",
        !nf.is_zero(),
        cert.is_some()
    ));

    let v = out.time("evolution_check", || {
        check_evolutions(&ideal, &SymbolicStrategy::Saturation(None))
    })?;
    record_verdict(&v, out);
    out.counter("reduction_steps", ideal.groebner()?.steps());
    Ok(())
}

fn family_in_characteristic_zero(job: &JobSpec, p: u64, out: &mut Sections) -> Result<()> {
    let ring = Ring::<Rational>::with_indexed_vars(Rationals, "x", 4)?
        .with_budget(job.flags.budget.unwrap_or(DEFAULT_BUDGET));
    let curve = MonomialCurve::family(p as u32);
    let ideal = out.time("toric_ideal", || toric_ideal(&ring, &curve))?;
    let (f, _) = family_polynomials(ideal.ring(), p as u32)?;
    out.result("ideal", polys(ideal.gens()));
    let v = out.time("evolution_check", || {
        check_evolutions(&ideal, &SymbolicStrategy::Saturation(None))
    })?;
    record_verdict(&v, out);
    let sq = v.symbolic_square.clone().unwrap_or_default();
    let mut euler = Vec::new();
    for s in &sq {
        let r = quasihomogeneous_check(&ideal, s)?;
        euler.push(
            json!({ "element": s.to_string(), "degree": r.degree, "holds": r.holds(),
                           "cofactors": polys(&r.cofactors) }),
        );
    }
    let all = euler.iter().all(|e| e["holds"] == Value::Bool(true));
    out.certificate("euler", euler);
    out.result("euler_certifies_all", all);
    let f_in_square = Ideal::new(ideal.ring(), sq)?.contains(&f)?;
    out.result("f_in_symbolic_square", f_in_square);
    out.say(format!(
        "Euler relation places every generator of I^(2) in mI: {all}"
    ));
    out.say(format!("f ∈ I^(2) over QQ: {f_in_square}"));
    out.counter("reduction_steps", ideal.groebner()?.steps());
    Ok(())
}

fn kunz(job: &JobSpec, out: &mut Sections) -> Result<()> {
    let budget = job.flags.budget.unwrap_or(KUNZ_BUDGET);
    let ring = Ring::<Gf>::with_indexed_vars(GfKind::new(2)?, "x", 5)?.with_budget(budget);
    let curve = MonomialCurve::new(KUNZ_EXPONENTS.to_vec())?;
    out.result("exponents", KUNZ_EXPONENTS.to_vec());
    out.result("budget", budget);
    let ideal = out.time("toric_ideal", || toric_ideal(&ring, &curve))?;
    let gb = ideal.groebner()?;
    let mingens = out.time("minimal_generators", || ideal.minimal_generators())?;
    out.result("groebner_basis_size", gb.len());
    out.result("minimal_generators", polys(mingens.gens()));
    out.result("codimension", ideal.codimension()?);
    let v = out.time("evolution_check", || {
        check_evolutions(&ideal, &SymbolicStrategy::Saturation(None))
    })?;
    record_verdict(&v, out);
    if let Some(w) = &v.witness {
        let minimal = ideal.is_minimal_generator(w)?;
        out.certificate("witness_is_minimal_generator", minimal);
        out.certificate(
            "witness_substitutes_to_zero",
            curve.substitute(w)?.is_zero(),
        );
    }
    out.counter("reduction_steps", gb.steps());
    Ok(())
}

fn conjecture(job: &JobSpec, out: &mut Sections) -> Result<()> {
    let field = job
        .flags
        .field
        .or(job.ring.as_ref().map(|r| r.field))
        .unwrap_or(FieldSpec::Prime(101));
    match field {
        FieldSpec::Prime(p) => conjecture_on::<Gf>(GfKind::new(p)?, job, out),
        FieldSpec::Rationals => conjecture_on::<Rational>(Rationals, job, out),
    }
}

fn conjecture_on<F: Field>(kind: F::Kind, job: &JobSpec, out: &mut Sections) -> Result<()> {
    let seed = job.flags.seed.unwrap_or(0);
    let d = job.flags.d.unwrap_or(2);
    out.result("field", kind.to_string());
    let r = out.time("explorer", || conjecture_explorer::<F>(kind, seed, d))?;
    out.result("seed", r.seed);
    out.result("d", r.d);
    out.result("rerolls", r.rerolls);
    out.result("matrix", matrix_json(&r.matrix));
    out.result("ideal", polys(r.ideal.gens()));
    out.result("symbolic_power", polys(&r.symbolic_power));
    out.result("annihilator", polys(r.annihilator.gens()));
    out.result("candidate", polys(r.candidate.gens()));
    out.result("relation", r.relation.as_str());
    let candidate_inside = r.annihilator.contains_ideal(&r.candidate)?;
    out.result("candidate_in_annihilator", candidate_inside);
    out.certificate("f2_in_annihilator", r.fc_in_annihilator);
    out.say(format!(
        "seed {seed}, d = {d}: annihilator vs F_1(I)^{}: {}",
        d / 2,
        r.relation.as_str()
    ));
    out.say(format!(
        "F_2(I) ⊆ (I^{d} : I^({d})) = {}",
        r.fc_in_annihilator
    ));
    Ok(())
}
