//! Oracles shared by the integration suites. Nothing here touches Groebner
//! bases: the syzygy oracle is dense linear algebra over `GF(p)`.
#![allow(dead_code)]

use std::collections::HashMap;

use evoalg::{Gf, GfKind, Monomial, Polynomial, RingRef};

/// All monomials of total degree at most `deg` in `arity` variables.
pub fn monomials_up_to(arity: usize, deg: u32) -> Vec<Monomial> {
    fn go(arity: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() == arity {
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in 0..=left {
            cur.push(e);
            go(arity, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(arity, deg, &mut Vec::with_capacity(arity), &mut out);
    out
}

fn inv(a: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Null space of a dense matrix over `GF(p)`, `rows x cols`, as a list of
/// column vectors.
pub fn null_space(mut m: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(k) = (r..m.len()).find(|&k| m[k][c] != 0) else {
            continue;
        };
        m.swap(r, k);
        let s = inv(m[r][c], p);
        for v in m[r].iter_mut() {
            *v = *v * s % p;
        }
        let pivot_row = m[r].clone();
        for (k, row) in m.iter_mut().enumerate() {
            if k != r && row[c] != 0 {
                let f = row[c];
                for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                    *v = (*v + p - f * pv % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; cols];
            v[fc] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[row][fc]) % p;
            }
            v
        })
        .collect()
}

/// A basis of the degree-`≤ bound` part of the syzygy module of `gens`:
/// tuples `(a_i)` with `deg a_i + deg g_i ≤ bound` and `sum a_i g_i = 0`.
pub fn brute_force_syzygies(
    ring: &RingRef<Gf>,
    gens: &[Polynomial<Gf>],
    bound: u32,
) -> Vec<Vec<Polynomial<Gf>>> {
    let p = ring.characteristic();
    let kind = GfKind::new(p).unwrap();
    let n = ring.arity();
    let targets: HashMap<Monomial, usize> = monomials_up_to(n, bound)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let d = g.total_degree().unwrap_or(0) as u32;
        if d > bound {
            continue;
        }
        for m in monomials_up_to(n, bound - d) {
            unknowns.push((i, m));
        }
    }
    let mut matrix = vec![vec![0u64; unknowns.len()]; targets.len()];
    for (col, (i, m)) in unknowns.iter().enumerate() {
        for t in gens[*i].terms() {
            let row = targets[&t.mono.mul(m)];
            matrix[row][col] = (matrix[row][col] + t.coeff.residue()) % p;
        }
    }
    null_space(matrix, unknowns.len(), p)
        .into_iter()
        .map(|v| {
            let mut comps = vec![Polynomial::zero(ring); gens.len()];
            for (col, c) in v.iter().enumerate() {
                if *c != 0 {
                    let (i, m) = &unknowns[col];
                    comps[*i] =
                        &comps[*i] + &Polynomial::monomial(ring, kind.element(*c), m.clone());
                }
            }
            comps
        })
        .collect()
}
