//! Combinatorics of monomial ideals on minimal generating sets.

use crate::poly::Monomial;

/// Drops generators divisible by other generators; sorts for determinism.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

pub fn contains(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(m))
}

pub fn intersect(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    minimalize(
        a.iter()
            .flat_map(|x| b.iter().map(move |y| x.lcm(y)))
            .collect(),
    )
}

pub fn product(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    minimalize(
        a.iter()
            .flat_map(|x| b.iter().map(move |y| x.mul(y)))
            .collect(),
    )
}

pub fn power(a: &[Monomial], arity: usize, n: u32) -> Vec<Monomial> {
    let mut acc = vec![Monomial::one(arity)];
    for _ in 0..n {
        acc = product(&acc, a);
    }
    acc
}

/// `(I : m)`.
pub fn quotient(gens: &[Monomial], m: &Monomial) -> Vec<Monomial> {
    minimalize(
        gens.iter()
            .map(|g| g.lcm(m).div(m).expect("lcm is divisible"))
            .collect(),
    )
}

/// `(I : m^infinity)`: kill every variable in the support of `m`.
pub fn saturate(gens: &[Monomial], m: &Monomial) -> Vec<Monomial> {
    let support: Vec<usize> = m.support().collect();
    minimalize(
        gens.iter()
            .map(|g| {
                let mut e = g.exponents().to_vec();
                for &i in &support {
                    e[i] = 0;
                }
                Monomial::from_exponents(&e)
            })
            .collect(),
    )
}

/// `a` contained in `b`.
pub fn is_subset(a: &[Monomial], b: &[Monomial]) -> bool {
    a.iter().all(|m| contains(b, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn intersection_by_lcm() {
        // (x) ∩ (y) = (xy)
        assert_eq!(intersect(&[m(&[1, 0])], &[m(&[0, 1])]), vec![m(&[1, 1])]);
    }

    #[test]
    fn saturation_kills_support() {
        // (x^2 y) : y^inf = (x^2)
        assert_eq!(saturate(&[m(&[2, 1])], &[m(&[0, 1])][0]), vec![m(&[2, 0])]);
        assert_eq!(quotient(&[m(&[2, 0])], &m(&[1, 0])), vec![m(&[1, 0])]);
    }

    #[test]
    fn minimalize_removes_multiples() {
        assert_eq!(
            minimalize(vec![m(&[2, 1]), m(&[1, 0]), m(&[1, 0])]),
            vec![m(&[1, 0])]
        );
    }
}
