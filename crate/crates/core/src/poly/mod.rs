//! Monomials, monomial orders, polynomial rings and polynomials.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use polynomial::{Polynomial, Term, WeightedDegree};
pub use ring::{Ring, RingRef, DEFAULT_STEP_BUDGET};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::AlgebraError;
    use crate::field::{Field, FieldKind, Gf, GfKind, Rational, Rationals};

    fn gf_ring(p: u64, vars: &[&str]) -> RingRef<Gf> {
        Ring::new(GfKind::new(p).unwrap(), vars).unwrap()
    }

    fn q_ring(vars: &[&str]) -> RingRef<Rational> {
        Ring::new(Rationals, vars).unwrap()
    }

    #[test]
    fn frobenius_in_characteristic_two() {
        let r = gf_ring(2, &["x", "y"]);
        let s = Polynomial::parse(&r, "x + y").unwrap();
        assert_eq!(s.pow(2), Polynomial::parse(&r, "x^2 + y^2").unwrap());
        assert!((&s * &Polynomial::zero(&r)).is_zero());
    }

    #[test]
    fn square_of_g2_mod_two() {
        let r = gf_ring(2, &["x1", "x2", "x3", "x4"]);
        let g2 = Polynomial::parse(&r, "x1*x4 - x2*x3").unwrap();
        assert_eq!(
            g2.pow(2),
            Polynomial::parse(&r, "x1^2*x4^2 + x2^2*x3^2").unwrap()
        );
    }

    #[test]
    fn derivatives() {
        let r = q_ring(&["x1", "x2"]);
        let f = Polynomial::parse(&r, "x1^3*x2").unwrap();
        assert_eq!(
            f.partial_derivative(0).unwrap(),
            Polynomial::parse(&r, "3*x1^2*x2").unwrap()
        );
        assert!(matches!(
            f.partial_derivative(2),
            Err(AlgebraError::VariableOutOfRange { .. })
        ));

        for p in [2u64, 3, 5] {
            let r = gf_ring(p, &["x1", "x2", "x3", "x4"]);
            let f = Polynomial::parse(&r, &format!("x4^{p}")).unwrap();
            assert!(f.partial_derivative(3).unwrap().is_zero());
        }
    }

    #[test]
    fn derivative_of_family_polynomial_at_two() {
        // d/dx1 (x1^3 x2 + x2^3 + x1 x3^2 + x4^2) = 3 x1^2 x2 + x3^2 = x1^2 x2 + x3^2 mod 2
        let r = gf_ring(2, &["x1", "x2", "x3", "x4"]);
        let f = Polynomial::parse(&r, "x1^3*x2 - x2^3 - x1*x3^2 + x4^2").unwrap();
        let expected = Polynomial::parse(&r, "x1^2*x2 + x3^2").unwrap();
        assert_eq!(f.partial_derivative(0).unwrap(), expected);
    }

    #[test]
    fn weighted_degrees() {
        let r = q_ring(&["x", "y"]).with_weights(vec![2, 1]).unwrap();
        let f = Polynomial::parse(&r, "x + y^2").unwrap();
        assert_eq!(f.weighted_degree().unwrap(), WeightedDegree::Homogeneous(2));
        let r = q_ring(&["x", "y"]).with_weights(vec![1, 2]).unwrap();
        let f = Polynomial::parse(&r, "x + y").unwrap();
        assert_eq!(
            f.weighted_degree().unwrap(),
            WeightedDegree::NotQuasihomogeneous
        );
        let plain = q_ring(&["x", "y"]);
        assert_eq!(
            Polynomial::var(&plain, 0).weighted_degree(),
            Err(AlgebraError::NoWeights)
        );
    }

    #[test]
    fn family_polynomial_weighted_degree() {
        for p in [2u32, 3, 5] {
            let w = vec![p * p, p * (p + 1), p * p + p + 1, (p + 1) * (p + 1)];
            let r = gf_ring(p as u64, &["x1", "x2", "x3", "x4"])
                .with_weights(w.clone())
                .unwrap();
            let f = Polynomial::parse(
                &r,
                &format!("x1^{}*x2 - x2^{} - x1*x3^{p} + x4^{p}", p + 1, p + 1),
            )
            .unwrap();
            // each term evaluated separately
            for t in f.terms() {
                assert_eq!(t.mono.weighted_degree(&w), (p as u64 + 1).pow(2) * p as u64);
            }
            assert_eq!(
                f.weighted_degree().unwrap(),
                WeightedDegree::Homogeneous((p as u64 + 1).pow(2) * p as u64)
            );
        }
    }

    #[test]
    fn euler_combination_reconstructs() {
        let r = q_ring(&["x", "y"]).with_weights(vec![1, 1]).unwrap();
        let f = Polynomial::parse(&r, "x^2*y").unwrap();
        let c = f.euler_combination().unwrap();
        assert_eq!(c[0], Polynomial::parse(&r, "2/3*x*y").unwrap());
        assert_eq!(c[1], Polynomial::parse(&r, "1/3*x^2").unwrap());
        let g = Polynomial::parse(&r, "x^3 + y^3").unwrap();
        let c = g.euler_combination().unwrap();
        let back = &(&Polynomial::var(&r, 0) * &c[0]) + &(&Polynomial::var(&r, 1) * &c[1]);
        assert_eq!(back, g);
    }

    #[test]
    fn euler_fails_when_degree_vanishes_mod_p() {
        let p = 2u32;
        let w = vec![4, 6, 7, 9];
        let r = gf_ring(p as u64, &["x1", "x2", "x3", "x4"])
            .with_weights(w)
            .unwrap();
        let f = Polynomial::parse(&r, "x1^3*x2 + x2^3 + x1*x3^2 + x4^2").unwrap();
        assert_eq!(
            f.euler_combination(),
            Err(AlgebraError::DegreeNotInvertible {
                degree: 18,
                characteristic: 2
            })
        );
    }

    #[test]
    fn printing_round_trips() {
        let r = q_ring(&["x1", "x2", "x3"]);
        for s in [
            "3*x1^2*x2 - x3",
            "-1/2*x1 + 7",
            "x1*x2*x3 - 2*x2^5 + 0",
            "0",
            "-(x1 - x2)^3",
        ] {
            let p = Polynomial::parse(&r, s).unwrap();
            let printed = p.to_string();
            assert_eq!(
                Polynomial::parse(&r, &printed).unwrap(),
                p,
                "{s} -> {printed}"
            );
        }
        let p = Polynomial::parse(&r, "3*x1^2*x2 - x3").unwrap();
        assert_eq!(p.to_string(), "3*x1^2*x2 - x3");
    }

    #[test]
    fn parse_errors_are_positioned() {
        let r = q_ring(&["x", "y"]);
        match Polynomial::parse(&r, "x + z") {
            Err(AlgebraError::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(Polynomial::parse(&r, "x +").is_err());
        assert!(Polynomial::parse(&r, "x y").is_err());
        let r2 = gf_ring(3, &["x"]);
        assert!(Polynomial::parse(&r2, "1/3*x").is_err());
    }

    #[test]
    fn ring_mismatch() {
        let a = q_ring(&["x", "y"]);
        let b = q_ring(&["x", "z"]);
        let f = Polynomial::var(&a, 0);
        let g = Polynomial::var(&b, 0);
        assert_eq!(f.try_add(&g), Err(AlgebraError::RingMismatch));
    }

    #[test]
    fn substitution_is_a_ring_map() {
        let r = gf_ring(2, &["x1", "x2"]);
        let t = gf_ring(2, &["t"]);
        let images = vec![
            Polynomial::parse(&t, "t^2").unwrap(),
            Polynomial::parse(&t, "t^3").unwrap(),
        ];
        let f = Polynomial::parse(&r, "x1^3 - x2^2").unwrap();
        assert!(f.substitute(&t, &images).unwrap().is_zero());
        let _ = GfKind::new(2).unwrap().one().pow(3);
    }

    #[test]
    fn exact_division() {
        let r = q_ring(&["x", "y"]);
        let f = Polynomial::parse(&r, "x^2 - y^2").unwrap();
        let g = Polynomial::parse(&r, "x - y").unwrap();
        assert_eq!(
            f.exact_div(&g).unwrap(),
            Polynomial::parse(&r, "x + y").unwrap()
        );
        assert!(Polynomial::parse(&r, "x^2 + y")
            .unwrap()
            .exact_div(&g)
            .is_none());
    }
}
