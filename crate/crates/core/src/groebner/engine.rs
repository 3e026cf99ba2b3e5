//! Buchberger's algorithm over free modules `R^r` (ideals are the `r = 1`
//! case).
//!
//! Pairs are selected by sugar degree, ties broken by the lcm in the module
//! order and then by generator indices, so results are reproducible. Useless
//! pairs are discarded with the Gebauer-Moeller criteria; the product
//! criterion is only used in rank one.

use std::cmp::Ordering;
use std::marker::PhantomData;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, RingRef};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct VTerm<F> {
    pub pos: u32,
    pub mono: Monomial,
    pub coeff: F,
}

/// Sparse module element, terms strictly descending in the module order.
pub(crate) type Vector<F> = Vec<VTerm<F>>;

/// How module terms `m * e_i` are compared.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModuleOrder {
    /// Position over term: lower position index first, then the ring order.
    Pot,
    /// Term over position with a degree shift per position: shifted degree,
    /// then the ring order, then lower position first. The first `dominant`
    /// positions beat every other position regardless of degree, which turns
    /// the order into an elimination order for those components.
    Top { shifts: Vec<u64>, dominant: usize },
}

impl ModuleOrder {
    pub(crate) fn shift(&self, pos: u32) -> u64 {
        match self {
            ModuleOrder::Pot => 0,
            ModuleOrder::Top { shifts, .. } => shifts.get(pos as usize).copied().unwrap_or(0),
        }
    }
}

pub(crate) struct Engine<'a, F: Field> {
    order: &'a MonomialOrder,
    field: PhantomData<F>,
    grading: Vec<u32>,
    morder: ModuleOrder,
    rank_one: bool,
    steps: u64,
    budget: u64,
}

struct Pair {
    i: usize,
    j: usize,
    pos: u32,
    lcm: Monomial,
    sugar: u64,
}

struct Pending<F> {
    vector: Vector<F>,
    sugar: u64,
}

pub(crate) struct GbOutput<F> {
    pub basis: Vec<Vector<F>>,
    pub steps: u64,
}

impl<'a, F: Field> Engine<'a, F> {
    pub fn new(ring: &'a RingRef<F>, morder: ModuleOrder, rank_one: bool) -> Self {
        Engine {
            order: ring.order(),
            field: PhantomData,
            grading: ring.grading().into_owned(),
            morder,
            rank_one,
            steps: 0,
            budget: ring.budget(),
        }
    }

    pub fn unbounded(mut self) -> Self {
        self.budget = u64::MAX;
        self
    }

    pub fn cmp_terms(&self, pa: u32, ma: &Monomial, pb: u32, mb: &Monomial) -> Ordering {
        match &self.morder {
            ModuleOrder::Pot => pb.cmp(&pa).then_with(|| self.order.cmp(ma, mb)),
            ModuleOrder::Top { shifts, dominant } => {
                let da = (pa as usize) < *dominant;
                let db = (pb as usize) < *dominant;
                if da != db {
                    return da.cmp(&db);
                }
                let sa = ma.weighted_degree(&self.grading)
                    + shifts.get(pa as usize).copied().unwrap_or(0);
                let sb = mb.weighted_degree(&self.grading)
                    + shifts.get(pb as usize).copied().unwrap_or(0);
                sa.cmp(&sb)
                    .then_with(|| self.order.cmp(ma, mb))
                    .then_with(|| pb.cmp(&pa))
            }
        }
    }

    pub fn sort(&self, v: &mut Vector<F>) {
        v.sort_by(|a, b| self.cmp_terms(b.pos, &b.mono, a.pos, &a.mono));
        // merge duplicates
        let mut out: Vector<F> = Vec::with_capacity(v.len());
        for t in v.drain(..) {
            match out.last_mut() {
                Some(last) if last.pos == t.pos && last.mono == t.mono => {
                    last.coeff = last.coeff.add(&t.coeff)
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        *v = out;
    }

    fn sugar(&self, v: &Vector<F>) -> u64 {
        v.iter()
            .map(|t| t.mono.weighted_degree(&self.grading) + self.morder.shift(t.pos))
            .max()
            .unwrap_or(0)
    }

    /// `a - c * m * b`, where the caller guarantees nothing about cancellation.
    pub fn sub_mul(&self, a: &[VTerm<F>], c: &F, m: &Monomial, b: &[VTerm<F>]) -> Vector<F> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut pending_b: Option<VTerm<F>> = None;
        let scaled = |t: &VTerm<F>| VTerm {
            pos: t.pos,
            mono: t.mono.mul(m),
            coeff: t.coeff.mul(c),
        };
        loop {
            if pending_b.is_none() && j < b.len() {
                pending_b = Some(scaled(&b[j]));
                j += 1;
            }
            match (a.get(i), pending_b.as_ref()) {
                (None, None) => break,
                (Some(x), None) => {
                    out.push(x.clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    let y = pending_b.take().unwrap();
                    out.push(VTerm {
                        pos: y.pos,
                        mono: y.mono,
                        coeff: y.coeff.neg(),
                    });
                }
                (Some(x), Some(y)) => match self.cmp_terms(x.pos, &x.mono, y.pos, &y.mono) {
                    Ordering::Greater => {
                        out.push(x.clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        let y = pending_b.take().unwrap();
                        out.push(VTerm {
                            pos: y.pos,
                            mono: y.mono,
                            coeff: y.coeff.neg(),
                        });
                    }
                    Ordering::Equal => {
                        let s = x.coeff.sub(&y.coeff);
                        if !s.is_zero() {
                            out.push(VTerm {
                                pos: x.pos,
                                mono: x.mono.clone(),
                                coeff: s,
                            });
                        }
                        i += 1;
                        pending_b = None;
                    }
                },
            }
        }
        out
    }

    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(AlgebraError::BudgetExceeded {
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn find_reducer<'b>(
        &self,
        t: &VTerm<F>,
        basis: &'b [Vector<F>],
        usable: &[bool],
    ) -> Option<&'b Vector<F>> {
        basis
            .iter()
            .zip(usable)
            .filter(|(_, &u)| u)
            .map(|(g, _)| g)
            .find(|g| g[0].pos == t.pos && g[0].mono.divides(&t.mono))
    }

    /// Full reduction (leading and tail terms) of `v` by monic elements.
    pub fn reduce(
        &mut self,
        v: Vector<F>,
        basis: &[Vector<F>],
        usable: &[bool],
    ) -> Result<Vector<F>> {
        let mut done: Vector<F> = Vec::new();
        let mut rest = v;
        let mut start = 0;
        while start < rest.len() {
            let t = &rest[start];
            match self.find_reducer(t, basis, usable) {
                Some(g) => {
                    self.tick()?;
                    let m = t.mono.div(&g[0].mono).expect("divisible");
                    let c = t.coeff.clone();
                    rest = self.sub_mul(&rest[start + 1..], &c, &m, &g[1..]);
                    start = 0;
                }
                None => {
                    done.push(rest[start].clone());
                    start += 1;
                }
            }
        }
        Ok(done)
    }

    /// Reduces only until the leading term is irreducible.
    fn top_reduce(
        &mut self,
        v: Vector<F>,
        basis: &[Vector<F>],
        usable: &[bool],
    ) -> Result<Vector<F>> {
        let mut rest = v;
        while let Some(t) = rest.first() {
            match self.find_reducer(t, basis, usable) {
                Some(g) => {
                    self.tick()?;
                    let m = t.mono.div(&g[0].mono).expect("divisible");
                    let c = t.coeff.clone();
                    rest = self.sub_mul(&rest[1..], &c, &m, &g[1..]);
                }
                None => break,
            }
        }
        Ok(rest)
    }

    pub fn make_monic(&self, v: &mut Vector<F>) {
        if let Some(lead) = v.first() {
            if !lead.coeff.is_one() {
                let inv = lead.coeff.inv().expect("nonzero");
                for t in v.iter_mut() {
                    t.coeff = t.coeff.mul(&inv);
                }
            }
        }
    }

    pub fn s_vector(&self, f: &Vector<F>, g: &Vector<F>) -> Option<Vector<F>> {
        if f[0].pos != g[0].pos {
            return None;
        }
        let lcm = f[0].mono.lcm(&g[0].mono);
        let mf = lcm.div(&f[0].mono).expect("lcm");
        let mg = lcm.div(&g[0].mono).expect("lcm");
        let (cf, cg) = (&f[0].coeff, &g[0].coeff);
        // cg * mf * f - cf * mg * g; the leading terms cancel
        let scaled_f: Vector<F> = f[1..]
            .iter()
            .map(|t| VTerm {
                pos: t.pos,
                mono: t.mono.mul(&mf),
                coeff: t.coeff.mul(cg),
            })
            .collect();
        Some(self.sub_mul(&scaled_f, cf, &mg, &g[1..]))
    }

    fn disjoint(&self, a: &Vector<F>, b: &Vector<F>) -> bool {
        self.rank_one && a[0].mono.is_coprime(&b[0].mono)
    }

    fn pair_sugar(
        &self,
        basis: &[Vector<F>],
        sugars: &[u64],
        i: usize,
        j: usize,
        lcm: &Monomial,
    ) -> u64 {
        let di =
            lcm.weighted_degree(&self.grading) - basis[i][0].mono.weighted_degree(&self.grading);
        let dj =
            lcm.weighted_degree(&self.grading) - basis[j][0].mono.weighted_degree(&self.grading);
        (sugars[i] + di).max(sugars[j] + dj)
    }

    /// Gebauer-Moeller update after appending basis element `h`.
    fn update(
        &self,
        basis: &[Vector<F>],
        sugars: &[u64],
        active: &mut [bool],
        pairs: &mut Vec<Pair>,
        h: usize,
    ) {
        let hv = &basis[h];
        let (hpos, hmono) = (hv[0].pos, &hv[0].mono);
        let mut cands: Vec<(usize, Monomial, bool)> = (0..h)
            .filter(|&g| active[g] && basis[g][0].pos == hpos)
            .map(|g| (g, basis[g][0].mono.lcm(hmono), self.disjoint(&basis[g], hv)))
            .collect();

        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((g, lcm, disjoint)) = if cands.is_empty() {
            None
        } else {
            Some(cands.remove(0))
        } {
            let dominated = cands
                .iter()
                .chain(kept.iter())
                .any(|(_, other, _)| other.divides(&lcm));
            if disjoint || !dominated {
                kept.push((g, lcm, disjoint));
            }
        }

        pairs.retain(|p| {
            if p.pos != hpos || !hmono.divides(&p.lcm) {
                return true;
            }
            let li = basis[p.i][0].mono.lcm(hmono);
            let lj = basis[p.j][0].mono.lcm(hmono);
            li == p.lcm || lj == p.lcm
        });

        for (g, lcm, disjoint) in kept {
            if !disjoint {
                let sugar = self.pair_sugar(basis, sugars, g, h, &lcm);
                pairs.push(Pair {
                    i: g,
                    j: h,
                    pos: hpos,
                    lcm,
                    sugar,
                });
            }
        }

        for g in 0..h {
            if active[g] && basis[g][0].pos == hpos && hmono.divides(&basis[g][0].mono) {
                active[g] = false;
            }
        }
    }

    /// Reduced Groebner basis of the submodule generated by `inputs`, sorted
    /// ascending by leading term.
    pub fn groebner(&mut self, inputs: Vec<Vector<F>>) -> Result<GbOutput<F>> {
        let mut pending: Vec<Pending<F>> = inputs
            .into_iter()
            .filter(|v| !v.is_empty())
            .map(|mut v| {
                self.sort(&mut v);
                let sugar = self.sugar(&v);
                Pending { vector: v, sugar }
            })
            .filter(|p| !p.vector.is_empty())
            .collect();

        let mut basis: Vec<Vector<F>> = Vec::new();
        let mut sugars: Vec<u64> = Vec::new();
        let mut active: Vec<bool> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();

        loop {
            // pick the smallest pending input or pair
            let best_input = pending
                .iter()
                .enumerate()
                .min_by(|(ia, a), (ib, b)| {
                    a.sugar
                        .cmp(&b.sugar)
                        .then_with(|| {
                            self.cmp_terms(
                                a.vector[0].pos,
                                &a.vector[0].mono,
                                b.vector[0].pos,
                                &b.vector[0].mono,
                            )
                        })
                        .then_with(|| ia.cmp(ib))
                })
                .map(|(k, _)| k);
            let best_pair = pairs
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| {
                    a.sugar
                        .cmp(&b.sugar)
                        .then_with(|| self.cmp_terms(a.pos, &a.lcm, b.pos, &b.lcm))
                        .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
                })
                .map(|(k, _)| k);

            let take_input = match (best_input, best_pair) {
                (None, None) => break,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (Some(a), Some(b)) => {
                    let (pa, pb) = (&pending[a], &pairs[b]);
                    pa.sugar.cmp(&pb.sugar).then_with(|| {
                        self.cmp_terms(pa.vector[0].pos, &pa.vector[0].mono, pb.pos, &pb.lcm)
                    }) != Ordering::Greater
                }
            };

            let (candidate, sugar) = if take_input {
                let p = pending.swap_remove(best_input.unwrap());
                (p.vector, p.sugar)
            } else {
                let p = pairs.swap_remove(best_pair.unwrap());
                let s = self
                    .s_vector(&basis[p.i], &basis[p.j])
                    .expect("same position");
                (s, p.sugar)
            };

            let all = vec![true; basis.len()];
            let mut h = self.top_reduce(candidate, &basis, &all)?;
            if h.is_empty() {
                continue;
            }
            self.make_monic(&mut h);
            let unit = self.rank_one && h[0].mono.is_one();
            let h_sugar = sugar.max(self.sugar(&h));
            basis.push(h);
            sugars.push(h_sugar);
            active.push(true);
            let idx = basis.len() - 1;
            self.update(&basis, &sugars, &mut active, &mut pairs, idx);
            if unit {
                pairs.clear();
                pending.clear();
            }
        }

        let minimal: Vec<Vector<F>> = basis
            .into_iter()
            .zip(active)
            .filter(|(_, a)| *a)
            .map(|(v, _)| v)
            .collect();
        let reduced = self.interreduce(minimal)?;
        Ok(GbOutput {
            basis: reduced,
            steps: self.steps,
        })
    }

    /// Tail-reduces a minimal basis and sorts it ascending.
    pub fn interreduce(&mut self, mut minimal: Vec<Vector<F>>) -> Result<Vec<Vector<F>>> {
        minimal.sort_by(|a, b| self.cmp_terms(a[0].pos, &a[0].mono, b[0].pos, &b[0].mono));
        let mut out = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let lead = minimal[k][0].clone();
            let tail: Vector<F> = minimal[k][1..].to_vec();
            let usable: Vec<bool> = (0..minimal.len()).map(|i| i != k).collect();
            let mut reduced = vec![lead];
            reduced.extend(self.reduce(tail, &minimal, &usable)?);
            out.push(reduced);
        }
        for v in out.iter_mut() {
            self.make_monic(v);
        }
        Ok(out)
    }

    /// Checks that every S-vector of `basis` reduces to zero.
    pub fn satisfies_criterion(&mut self, basis: &[Vector<F>]) -> bool {
        let usable = vec![true; basis.len()];
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                if let Some(s) = self.s_vector(&basis[i], &basis[j]) {
                    match self.reduce(s, basis, &usable) {
                        Ok(r) if r.is_empty() => {}
                        _ => return false,
                    }
                }
            }
        }
        true
    }
}
