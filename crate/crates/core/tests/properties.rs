mod common;

use proptest::prelude::*;

use evoalg::evolution::fitting_annihilates_symbolic_square;
use evoalg::fitting::{free_resolution, present_ideal, PolyMatrix};
use evoalg::groebner::{buchberger, module_buchberger, syzygies, ModuleElement, ModuleOrder};
use evoalg::symbolic::{monomial_minimal_primes, symbolic_power_monomial};
use evoalg::{Gf, GfKind, Ideal, Monomial, Polynomial, Ring, RingRef};

const P: u64 = 7;

fn ring(n: usize) -> RingRef<Gf> {
    Ring::<Gf>::with_indexed_vars(GfKind::new(P).unwrap(), "x", n).unwrap()
}

type RawPoly = Vec<(u64, Vec<u32>)>;

fn raw_poly(n: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((1..P, prop::collection::vec(0..=max_deg, n)), 1..=max_terms)
}

fn build(r: &RingRef<Gf>, raw: &RawPoly) -> Polynomial<Gf> {
    let k = GfKind::new(P).unwrap();
    Polynomial::from_terms(
        r,
        raw.iter()
            .map(|(c, e)| (k.element(*c), Monomial::from_exponents(e))),
    )
}

fn build_all(r: &RingRef<Gf>, raws: &[RawPoly]) -> Vec<Polynomial<Gf>> {
    raws.iter()
        .map(|p| build(r, p))
        .filter(|p| !p.is_zero())
        .collect()
}

fn small_ideal() -> impl Strategy<Value = Vec<RawPoly>> {
    prop::collection::vec(raw_poly(3, 2, 3), 1..=3)
}

fn monomial_gens(n: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..=3u32, n), 1..=5)
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 24,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn reduced_bases_pass_the_criterion(raws in small_ideal()) {
        let r = ring(3);
        let gens = build_all(&r, &raws);
        let gb = buchberger(&r, &gens).unwrap();
        prop_assert!(gb.satisfies_buchberger_criterion());
        prop_assert!(gb.is_reduced());
        for g in &gens {
            prop_assert!(gb.contains(g));
        }
        let mut rev = gens.clone();
        rev.reverse();
        let again = buchberger(&r, &rev).unwrap();
        prop_assert_eq!(again.elements(), gb.elements());
    }

    #[test]
    fn syzygies_match_brute_force(raws in small_ideal()) {
        let r = ring(3);
        let gens = build_all(&r, &raws);
        prop_assume!(!gens.is_empty());
        let syz = syzygies(&r, &gens).unwrap();
        for s in &syz {
            prop_assert!(s.dot(&gens).is_zero());
        }
        let bound = gens.iter().map(|g| g.total_degree().unwrap() as u32).max().unwrap() + 1;
        let brute = common::brute_force_syzygies(&r, &gens, bound);
        if !brute.is_empty() {
            let module = module_buchberger(&r, &syz, gens.len(), ModuleOrder::Pot).unwrap();
            for v in brute {
                prop_assert!(module.contains(&ModuleElement::new(v)));
            }
        }
    }

    #[test]
    fn quotient_times_divisor_lies_in_ideal(a in small_ideal(), b in small_ideal()) {
        let r = ring(3);
        let i = Ideal::new(&r, build_all(&r, &a)).unwrap();
        let j = Ideal::new(&r, build_all(&r, &b)).unwrap();
        let q = i.quotient(&j).unwrap();
        prop_assert!(q.contains_ideal(&i).unwrap());
        prop_assert!(i.contains_ideal(&q.product(&j).unwrap()).unwrap());
    }

    #[test]
    fn saturation_chain(a in small_ideal(), h in raw_poly(3, 1, 2)) {
        let r = ring(3);
        let i = Ideal::new(&r, build_all(&r, &a)).unwrap();
        let h = build(&r, &h);
        prop_assume!(!h.is_zero());
        let q = i.quotient_by(&h).unwrap();
        let s = i.saturate(&h).unwrap();
        prop_assert!(q.contains_ideal(&i).unwrap());
        prop_assert!(s.contains_ideal(&q).unwrap());
        prop_assert!(s.saturate(&h).unwrap().equals(&s).unwrap());
        prop_assert!(s.equals(&i.saturate_by_elimination(&h).unwrap()).unwrap());
    }

    #[test]
    fn intersection_bounds(a in small_ideal(), b in small_ideal()) {
        let r = ring(3);
        let i = Ideal::new(&r, build_all(&r, &a)).unwrap();
        let j = Ideal::new(&r, build_all(&r, &b)).unwrap();
        let meet = i.intersect(&j).unwrap();
        prop_assert!(i.contains_ideal(&meet).unwrap());
        prop_assert!(j.contains_ideal(&meet).unwrap());
        prop_assert!(meet.contains_ideal(&i.product(&j).unwrap()).unwrap());
    }

    #[test]
    fn radical_membership_is_stable_under_powers(a in small_ideal(), f in raw_poly(3, 2, 2)) {
        let r = ring(3);
        let i = Ideal::new(&r, build_all(&r, &a)).unwrap();
        let f = build(&r, &f);
        let direct = i.radical_contains(&f).unwrap();
        prop_assert_eq!(direct, i.radical_contains(&f.pow(2)).unwrap());
        if i.contains(&f).unwrap() {
            prop_assert!(direct);
        }
    }

    #[test]
    fn triangular_sequences_have_full_codimension(
        exps in prop::collection::vec(2..=3u32, 1..=3),
        tails in prop::collection::vec(raw_poly(3, 1, 2), 3),
    ) {
        let r = ring(3);
        let k = exps.len();
        // x_i^{a_i} + (lower-degree terms in later variables)
        let gens: Vec<_> = (0..k).map(|i| {
            let tail = build(&r, &tails[i]);
            let tail = Polynomial::from_terms(&r, tail.terms().iter()
                .filter(|t| (0..=i).all(|v| t.mono.exponent(v) == 0))
                .map(|t| (t.coeff, t.mono.clone())));
            &Polynomial::var(&r, i).pow(exps[i]) + &tail
        }).collect();
        let i = Ideal::new(&r, gens).unwrap();
        prop_assert_eq!(i.codimension().unwrap(), k);
    }

    #[test]
    fn fitting_ideals_increase(entries in prop::collection::vec(raw_poly(2, 1, 2), 6)) {
        let r = ring(2);
        let rows: Vec<Vec<_>> = entries.chunks(3).map(|c| c.iter().map(|e| build(&r, e)).collect()).collect();
        let m = PolyMatrix::new(&r, rows).unwrap();
        let pres = evoalg::fitting::ModulePresentation::new(m);
        let fits: Vec<_> = (0..=2).map(|i| pres.fitting_ideal(i).unwrap()).collect();
        prop_assert!(fits[1].contains_ideal(&fits[0]).unwrap());
        prop_assert!(fits[2].contains_ideal(&fits[1]).unwrap());
        prop_assert!(fits[2].is_unit().unwrap());
    }

    #[test]
    fn fitting_ideals_ignore_redundant_generators(a in small_ideal(), extra in raw_poly(3, 1, 2)) {
        let r = ring(3);
        let gens = build_all(&r, &a);
        prop_assume!(!gens.is_empty());
        let extra = &build(&r, &extra) * &gens[0];
        let i = Ideal::new(&r, gens.clone()).unwrap();
        let padded = Ideal::new(&r, [gens, vec![extra]].concat()).unwrap();
        let (p1, p2) = (present_ideal(&i).unwrap(), present_ideal(&padded).unwrap());
        prop_assume!(p2.generators() == p1.generators() + 1);
        for k in 0..=1 {
            prop_assert!(p1.fitting_ideal(k).unwrap().equals(&p2.fitting_ideal(k).unwrap()).unwrap());
        }
    }

    #[test]
    fn resolutions_compose_to_zero(gens in monomial_gens(3), a in small_ideal()) {
        let r = ring(3);
        let monos: Vec<_> = gens.iter().map(|e| Monomial::from_exponents(e)).filter(|m| !m.is_one()).collect();
        prop_assume!(!monos.is_empty());
        let graded = Ideal::from_monomials(&r, monos);
        let other = Ideal::new(&r, build_all(&r, &a)).unwrap();
        for ideal in [graded, other] {
            let res = free_resolution(&ideal, 4).unwrap();
            for w in res.maps.windows(2) {
                prop_assert!(w[0].mul(&w[1]).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn ordinary_powers_sit_inside_symbolic_powers(gens in monomial_gens(4), d in 2..=3u32) {
        let r = ring(4);
        let monos: Vec<_> = gens.iter().map(|e| Monomial::from_exponents(e)).filter(|m| !m.is_one()).collect();
        prop_assume!(!monos.is_empty());
        let i = Ideal::from_monomials(&r, monos);
        let sym = symbolic_power_monomial(&i, d).unwrap();
        prop_assert!(sym.contains_ideal(&i.power(d).unwrap()).unwrap());
    }

    #[test]
    fn symbolic_powers_drop_into_a_prime_multiple(gens in monomial_gens(4), d in 2..=3u32) {
        let r = ring(4);
        let monos: Vec<_> = gens.iter().map(|e| Monomial::from_exponents(e)).filter(|m| !m.is_one()).collect();
        prop_assume!(!monos.is_empty());
        let i = Ideal::from_monomials(&r, monos);
        let upper = symbolic_power_monomial(&i, d).unwrap();
        let lower = symbolic_power_monomial(&i, d - 1).unwrap();
        for prime in monomial_minimal_primes(&i).unwrap() {
            let p = Ideal::new(&r, prime.iter().map(|&v| Polynomial::var(&r, v)).collect()).unwrap();
            prop_assert!(p.product(&lower).unwrap().contains_ideal(&upper).unwrap());
        }
    }

    #[test]
    fn fitting_ideal_annihilates_on_unmixed_squarefree(edges in prop::collection::vec((0..4usize, 0..4usize), 1..=5)) {
        let r = ring(4);
        let monos: Vec<_> = edges.iter().filter(|(a, b)| a != b).map(|&(a, b)| {
            let mut e = vec![0u32; 4];
            e[a] = 1;
            e[b] = 1;
            Monomial::from_exponents(&e)
        }).collect();
        prop_assume!(!monos.is_empty());
        let i = Ideal::from_monomials(&r, monos);
        let primes = monomial_minimal_primes(&i).unwrap();
        let c = primes[0].len();
        prop_assume!(primes.iter().all(|p| p.len() == c));
        let sq = symbolic_power_monomial(&i, 2).unwrap();
        prop_assert!(fitting_annihilates_symbolic_square(&i, c, sq.gens()).unwrap().is_none());
    }
}
