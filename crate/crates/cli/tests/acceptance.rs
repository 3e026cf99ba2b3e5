//! Acceptance run: one line per criterion, non-zero exit if any fails.
//! Runs without the libtest harness so the lines always reach the log.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::time::Instant;

use evoalg::evolution::{
    check_evolutions, conjecture_explorer, default_symbolic_square,
    fitting_annihilates_symbolic_square, hilbert_burch_check, maximal_times,
    quasihomogeneous_check, random_hilbert_burch_matrix, Verdict,
};
use evoalg::fitting::PolyMatrix;
use evoalg::groebner::{module_buchberger, syzygies, GroebnerBasis, ModuleElement, ModuleOrder};
use evoalg::symbolic::{
    in_symbolic_power, in_symbolic_square, monomial_minimal_primes, symbolic_power,
    symbolic_power_monomial, SymbolicStrategy,
};
use evoalg::toric::{
    binomial_absence_check, kunz_example, paper_family, pure_power_certificate, toric_ideal,
    MonomialCurve,
};
use evoalg::{
    AlgebraError, Field, Gf, GfKind, Ideal, Monomial, Polynomial, Rational, Rationals, Ring,
    RingRef,
};
use evoalg_cli::run_text;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn e(err: AlgebraError) -> String {
    err.to_string()
}

fn qq(vars: &[&str]) -> RingRef<Rational> {
    Ring::<Rational>::new(Rationals, vars).unwrap()
}

/// Every Groebner basis the run produced, for the final self-check.
#[derive(Default)]
struct Bases {
    prime: Vec<std::sync::Arc<GroebnerBasis<Gf>>>,
    rational: Vec<std::sync::Arc<GroebnerBasis<Rational>>>,
}

fn family(p: u64, bases: &mut Bases) -> Check {
    let fam = paper_family(p).map_err(e)?;
    let ideal = &fam.ideal;
    ensure!(
        fam.identity_defect().is_zero(),
        "p={p}: identity defect {}",
        fam.identity_defect()
    );
    let x1 = Polynomial::var(ideal.ring(), 0);
    let sat = symbolic_power(ideal, 2, &SymbolicStrategy::Saturation(Some(x1))).map_err(e)?;
    ensure!(
        sat.ideal.contains(&fam.f).map_err(e)?,
        "p={p}: f not in the saturation"
    );
    let fit = in_symbolic_square(ideal, &fam.f, 3).map_err(e)?;
    ensure!(fit.member, "p={p}: Fitting test rejects f");
    let m_i = maximal_times(ideal).map_err(e)?;
    ensure!(!m_i.contains(&fam.f).map_err(e)?, "p={p}: f in mI");
    let cert = pure_power_certificate(&fam.curve, &fam.f).map_err(e)?;
    ensure!(cert.is_some(), "p={p}: no pure power term");
    ensure!(
        binomial_absence_check(&fam.curve, 3, p as u32).map_err(e)?,
        "p={p}: semigroup oracle disagrees"
    );
    let v = check_evolutions(ideal, &SymbolicStrategy::Saturation(None)).map_err(e)?;
    ensure!(
        v.verdict == Verdict::NontrivialExists,
        "p={p}: verdict {}",
        v.verdict.as_str()
    );

    let report = run_text(&format!("cmd paper-example --p {p};")).map_err(|err| err.message)?;
    ensure!(
        report.result()["verdict"] == "nontrivial-exists",
        "p={p}: CLI verdict {}",
        report.result()["verdict"]
    );
    bases.prime.extend([
        ideal.groebner().map_err(e)?,
        sat.ideal.groebner().map_err(e)?,
        m_i.groebner().map_err(e)?,
    ]);
    Ok(format!("p={p}: f = {}", fam.f))
}

fn criterion_1(bases: &mut Bases) -> Check {
    Ok([family(2, bases)?, family(3, bases)?].join("; "))
}

fn criterion_2(bases: &mut Bases) -> Check {
    let ring = Ring::<Rational>::with_indexed_vars(Rationals, "x", 4).unwrap();
    let ideal = toric_ideal(&ring, &MonomialCurve::family(2)).map_err(e)?;
    let v = check_evolutions(&ideal, &SymbolicStrategy::Saturation(None)).map_err(e)?;
    ensure!(
        v.verdict == Verdict::AllTrivial,
        "QQ verdict {}",
        v.verdict.as_str()
    );
    let sq = v.symbolic_square.ok_or("no symbolic square")?;
    for s in &sq {
        let euler = quasihomogeneous_check(&ideal, s).map_err(e)?;
        ensure!(euler.holds(), "Euler certificate fails on {s}");
    }
    let fam = paper_family(2).map_err(e)?;
    let in_char_two = quasihomogeneous_check(&fam.ideal, &fam.f);
    ensure!(
        matches!(in_char_two, Err(AlgebraError::DegreeNotInvertible { .. })),
        "the Euler argument should break in characteristic 2"
    );
    bases.rational.push(ideal.groebner().map_err(e)?);
    Ok(format!("{} generators of I^(2) certified in mI", sq.len()))
}

fn criterion_3(bases: &mut Bases) -> Check {
    let ideal = kunz_example().map_err(e)?;
    let v = check_evolutions(&ideal, &SymbolicStrategy::Saturation(None)).map_err(e)?;
    ensure!(
        v.verdict == Verdict::NontrivialExists,
        "verdict {}",
        v.verdict.as_str()
    );
    let w = v.witness.ok_or("no witness")?;
    let sq = default_symbolic_square(&ideal).map_err(e)?;
    ensure!(sq.ideal.contains(&w).map_err(e)?, "witness outside I^(2)");
    ensure!(
        !maximal_times(&ideal).map_err(e)?.contains(&w).map_err(e)?,
        "witness in mI"
    );
    bases.prime.push(ideal.groebner().map_err(e)?);
    Ok(format!("witness {w}"))
}

/// Compares the Fitting test with the saturation oracle on `elems`.
fn agreement<F: Field>(
    ideal: &Ideal<F>,
    c: usize,
    elems: &[Polynomial<F>],
) -> Result<(usize, usize), String> {
    let oracle = default_symbolic_square(ideal).map_err(e)?.ideal;
    let mut members = 0;
    for x in elems {
        let by_fitting = in_symbolic_square(ideal, x, c).map_err(e)?.member;
        let by_oracle = oracle.contains(x).map_err(e)?;
        ensure!(
            by_fitting == by_oracle,
            "{x}: Fitting says {by_fitting}, saturation says {by_oracle}"
        );
        members += by_oracle as usize;
    }
    Ok((elems.len(), members))
}

fn test_elements<F: Field>(gens: &[Polynomial<F>], extra: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let mut out = gens.to_vec();
    let k = gens.len().min(3);
    for i in 0..k {
        for j in i..k {
            out.push(&gens[i] * &gens[j]);
        }
    }
    out.extend_from_slice(extra);
    out
}

fn criterion_4() -> Check {
    let fam = paper_family(2).map_err(e)?;
    let gens = fam.ideal.minimal_generators().map_err(e)?.gens().to_vec();
    let (n1, m1) = agreement(
        &fam.ideal,
        3,
        &test_elements(&gens, std::slice::from_ref(&fam.f)),
    )?;

    let r = qq(&["x", "y"]);
    let plane = Ideal::parse(&r, &["x", "y"]).map_err(e)?;
    let extra: Vec<_> = ["x^3", "x^2*y", "x + y", "x*y + y^2", "x^2 + y", "x^5 - y^4"]
        .iter()
        .map(|s| Polynomial::parse(&r, s).unwrap())
        .collect();
    let (n2, m2) = agreement(&plane, 2, &test_elements(plane.gens(), &extra))?;
    ensure!(n1 >= 10 && n2 >= 10, "too few elements ({n1}, {n2})");
    Ok(format!(
        "{n1} elements on the p=2 curve ({m1} members), {n2} on (x,y) ({m2} members)"
    ))
}

fn criterion_5() -> Check {
    let r = qq(&["x", "y"]);
    let plane = Ideal::parse(&r, &["x", "y"]).map_err(e)?;
    let square = plane.power(2).map_err(e)?;
    let cube = plane.power(3).map_err(e)?;
    let mut lines = Vec::new();
    for (s, expected) in [("x^3", true), ("x^2*y", true), ("x^2", false)] {
        let x = Polynomial::parse(&r, s).unwrap();
        let v = in_symbolic_power(&plane, &square, &x, 2, 2).map_err(e)?;
        ensure!(
            v.fitting_index == 2,
            "expected F_2, got F_{}",
            v.fitting_index
        );
        ensure!(v.member == expected, "{s}: Fitting says {}", v.member);
        ensure!(
            cube.contains(&x).map_err(e)? == expected,
            "{s}: disagrees with I^3"
        );
        lines.push(format!("{s} {}", if expected { "in" } else { "out" }));
    }
    Ok(lines.join(", "))
}

fn criterion_6() -> Check {
    let r = Ring::<Gf>::with_indexed_vars(GfKind::new(7).unwrap(), "x", 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut checked = 0;
    while checked < 100 {
        let count = rng.gen_range(1..=5);
        let monos: Vec<Monomial> = (0..count)
            .map(|_| {
                Monomial::from_exponents(
                    &(0..4).map(|_| rng.gen_range(0..=2u32)).collect::<Vec<_>>(),
                )
            })
            .filter(|m| !m.is_one())
            .collect();
        if monos.is_empty() {
            continue;
        }
        let ideal = Ideal::from_monomials(&r, monos);
        let primes = monomial_minimal_primes(&ideal).map_err(e)?;
        for d in [2, 3] {
            let upper = symbolic_power_monomial(&ideal, d).map_err(e)?;
            let lower = symbolic_power_monomial(&ideal, d - 1).map_err(e)?;
            for prime in &primes {
                let p = Ideal::new(&r, prime.iter().map(|&v| Polynomial::var(&r, v)).collect())
                    .map_err(e)?;
                let bound = p.product(&lower).map_err(e)?;
                ensure!(
                    bound.contains_ideal(&upper).map_err(e)?,
                    "I = {:?}, d = {d}",
                    ideal.gens()
                );
            }
        }
        checked += 1;
    }
    Ok(format!("{checked} ideals, d = 2 and 3"))
}

fn criterion_7(bases: &mut Bases) -> Check {
    let r = qq(&["x", "y", "z"]);
    let ideal = Ideal::parse(&r, &["x*y", "x*z", "y*z"]).map_err(e)?;
    let sq = default_symbolic_square(&ideal).map_err(e)?.ideal;
    let xyz = Polynomial::parse(&r, "x*y*z").unwrap();
    ensure!(sq.contains(&xyz).map_err(e)?, "xyz not in I^(2)");
    let ordinary = ideal.power(2).map_err(e)?;
    ensure!(!ordinary.contains(&xyz).map_err(e)?, "xyz in I^2");
    let m_i = maximal_times(&ideal).map_err(e)?;
    ensure!(m_i.contains_ideal(&sq).map_err(e)?, "I^(2) not in mI");
    let v = check_evolutions(&ideal, &SymbolicStrategy::Monomial).map_err(e)?;
    ensure!(
        v.verdict == Verdict::AllTrivial,
        "verdict {}",
        v.verdict.as_str()
    );
    bases.rational.extend([
        sq.groebner().map_err(e)?,
        ordinary.groebner().map_err(e)?,
        m_i.groebner().map_err(e)?,
    ]);
    Ok(format!(
        "I^(2) = ({})",
        sq.gens()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    ))
}

fn curve_345() -> PolyMatrix<Rational> {
    let ring = qq(&["x", "y", "z"]).with_weights(vec![3, 4, 5]).unwrap();
    PolyMatrix::parse(&ring, &[&["x", "y"], &["y", "z"], &["z", "x^2"]]).unwrap()
}

fn criterion_8() -> Check {
    let fam = paper_family(2).map_err(e)?;
    let sq = default_symbolic_square(&fam.ideal)
        .map_err(e)?
        .ideal
        .gens()
        .to_vec();
    if let Some((a, b)) = fitting_annihilates_symbolic_square(&fam.ideal, 3, &sq).map_err(e)? {
        return Err(format!("p=2 curve: {a}·{b} not in I^2"));
    }
    let r = qq(&["x", "y", "z"]);
    let triangle = Ideal::parse(&r, &["x*y", "x*z", "y*z"]).map_err(e)?;
    let sq = default_symbolic_square(&triangle)
        .map_err(e)?
        .ideal
        .gens()
        .to_vec();
    if let Some((a, b)) = fitting_annihilates_symbolic_square(&triangle, 2, &sq).map_err(e)? {
        return Err(format!("(xy,xz,yz): {a}·{b} not in I^2"));
    }
    let hb = hilbert_burch_check(&curve_345()).map_err(e)?;
    if let Some((a, b)) =
        fitting_annihilates_symbolic_square(&hb.ideal, 2, &hb.symbolic_square).map_err(e)?
    {
        return Err(format!("(3,4,5) curve: {a}·{b} not in I^2"));
    }
    Ok("p=2 curve, (xy,xz,yz), (3,4,5) curve".into())
}

fn criterion_9() -> Check {
    let hb = hilbert_burch_check(&curve_345()).map_err(e)?;
    ensure!(hb.holds(), "(3,4,5) matrix fails");
    let r = Ring::<Gf>::new(GfKind::new(101).unwrap(), &["x", "y", "z"]).unwrap();
    for seed in 0..5 {
        let (m, _) = random_hilbert_burch_matrix(&r, 2, seed).map_err(e)?;
        ensure!(m.nrows() == 3 && m.ncols() == 2, "seed {seed}: shape");
        ensure!(
            hilbert_burch_check(&m).map_err(e)?.holds(),
            "seed {seed}: fails"
        );
    }
    Ok("(3,4,5) matrix and 5 random GF(101) matrices".into())
}

fn criterion_10() -> Check {
    let mut relations = Vec::new();
    for seed in 0..10 {
        let report = conjecture_explorer::<Gf>(GfKind::new(101).unwrap(), seed, 2).map_err(e)?;
        ensure!(
            report.fc_in_annihilator,
            "seed {seed}: F_2(I) not in (I^2 : I^(2))"
        );
        relations.push(format!("seed {seed}: {}", report.relation.as_str()));
    }
    for line in &relations {
        println!("    {line}");
    }
    Ok("F_2(I) annihilates I^(2)/I^2 for seeds 0..10".into())
}

fn random_poly(r: &RingRef<Gf>, rng: &mut ChaCha8Rng) -> Polynomial<Gf> {
    let k = GfKind::new(7).unwrap();
    let terms = rng.gen_range(1..=3);
    Polynomial::from_terms(
        r,
        (0..terms).map(|_| {
            let e: Vec<u32> = (0..3).map(|_| rng.gen_range(0..=2)).collect();
            (k.element(rng.gen_range(1..7)), Monomial::from_exponents(&e))
        }),
    )
}

fn criterion_11(bases: &Bases) -> Check {
    for gb in &bases.prime {
        ensure!(
            gb.satisfies_buchberger_criterion() && gb.is_reduced(),
            "a GF(p) basis fails the criterion"
        );
    }
    for gb in &bases.rational {
        ensure!(
            gb.satisfies_buchberger_criterion() && gb.is_reduced(),
            "a QQ basis fails the criterion"
        );
    }
    let r = Ring::<Gf>::with_indexed_vars(GfKind::new(7).unwrap(), "x", 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 20 {
        let count = rng.gen_range(1..=3);
        let gens: Vec<_> = (0..count)
            .map(|_| random_poly(&r, &mut rng))
            .filter(|g| !g.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let syz = syzygies(&r, &gens).map_err(e)?;
        for s in &syz {
            ensure!(s.dot(&gens).is_zero(), "syzygy does not vanish");
        }
        let bound = gens
            .iter()
            .filter_map(|g| g.total_degree())
            .max()
            .unwrap_or(0) as u32
            + 1;
        let brute = common::brute_force_syzygies(&r, &gens, bound);
        if !brute.is_empty() {
            let module = module_buchberger(&r, &syz, gens.len(), ModuleOrder::Pot).map_err(e)?;
            for v in brute {
                ensure!(
                    module.contains(&ModuleElement::new(v)),
                    "missing syzygy for {gens:?}"
                );
            }
        }
        checked += 1;
    }
    Ok(format!(
        "{} bases pass the criterion; syzygies agree with linear algebra on {checked} ideals",
        bases.prime.len() + bases.rational.len()
    ))
}

fn main() {
    let mut bases = Bases::default();
    let mut failures = 0;
    let mut report = |n: usize, name: &str, outcome: Check, started: Instant| {
        let ms = started.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {n:>2} PASS  {name} [{detail}] ({ms} ms)"),
            Err(why) => {
                failures += 1;
                println!("criterion {n:>2} FAIL  {name}: {why} ({ms} ms)");
            }
        }
    };
    macro_rules! criterion {
        ($n:expr, $name:expr, $body:expr) => {{
            let t = Instant::now();
            let outcome = $body;
            report($n, $name, outcome, t);
        }};
    }
    criterion!(
        1,
        "characteristic-p family has a nontrivial evolution",
        criterion_1(&mut bases)
    );
    criterion!(
        2,
        "rational counterpart is trivial with Euler certificates",
        criterion_2(&mut bases)
    );
    criterion!(
        3,
        "Kunz's curve has a nontrivial evolution",
        criterion_3(&mut bases)
    );
    criterion!(4, "Fitting test agrees with saturation", criterion_4());
    criterion!(5, "third symbolic power of (x,y)", criterion_5());
    criterion!(
        6,
        "monomial symbolic powers sit in P·I^(d-1)",
        criterion_6()
    );
    criterion!(7, "(xy,xz,yz) is all-trivial", criterion_7(&mut bases));
    criterion!(8, "Fitting ideal annihilates I^(2)/I^2", criterion_8());
    criterion!(9, "Hilbert-Burch column containments", criterion_9());
    criterion!(10, "annihilator explorer", criterion_10());
    criterion!(11, "Groebner and syzygy self-checks", criterion_11(&bases));
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
