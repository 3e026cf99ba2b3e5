//! Multivariate division, reduced Groebner bases of ideals and of submodules
//! of free modules, and syzygies.

mod engine;

pub use engine::ModuleOrder;

use engine::{Engine, VTerm, Vector};

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::poly::{Polynomial, RingRef, Term};

/// Reduced Groebner basis of an ideal, for the order of its ring.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: RingRef<F>,
    basis: Vec<Polynomial<F>>,
    raw: Vec<Vector<F>>,
    steps: u64,
}

fn to_vector<F: Field>(f: &Polynomial<F>) -> Vector<F> {
    f.terms()
        .iter()
        .map(|t| VTerm {
            pos: 0,
            mono: t.mono.clone(),
            coeff: t.coeff.clone(),
        })
        .collect()
}

fn from_vector<F: Field>(ring: &RingRef<F>, v: Vector<F>) -> Polynomial<F> {
    let terms = v
        .into_iter()
        .map(|t| Term {
            coeff: t.coeff,
            mono: t.mono,
        })
        .collect();
    Polynomial::from_sorted_terms(ring, terms)
}

/// Reduced Groebner basis of the ideal generated by `gens` in the order of
/// their ring. Fails only when the ring's step budget is exhausted.
pub fn buchberger<F: Field>(ring: &RingRef<F>, gens: &[Polynomial<F>]) -> Result<GroebnerBasis<F>> {
    for g in gens {
        ring.check_same(g.ring())?;
    }
    let mut engine = Engine::new(ring, ModuleOrder::Pot, true);
    let out = engine.groebner(gens.iter().map(to_vector).collect())?;
    let basis = out
        .basis
        .iter()
        .cloned()
        .map(|v| from_vector(ring, v))
        .collect();
    Ok(GroebnerBasis {
        ring: ring.clone(),
        basis,
        raw: out.basis,
        steps: out.steps,
    })
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    /// Basis elements, monic, ascending by leading monomial.
    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Reduction steps spent computing the basis.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    /// Remainder of multivariate division; zero iff `f` is in the ideal.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let mut engine = Engine::new(&self.ring, ModuleOrder::Pot, true).unbounded();
        let usable = vec![true; self.raw.len()];
        let v = engine
            .reduce(to_vector(f), &self.raw, &usable)
            .expect("unbounded reduction");
        from_vector(&self.ring, v)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Whether every S-polynomial of the basis reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        Engine::new(&self.ring, ModuleOrder::Pot, true)
            .unbounded()
            .satisfies_criterion(&self.raw)
    }

    /// Whether the basis is reduced: monic, and no term of any element is
    /// divisible by the leading monomial of another.
    pub fn is_reduced(&self) -> bool {
        self.basis.iter().enumerate().all(|(i, g)| {
            g.leading_coeff().is_some_and(|c| c.is_one())
                && g.terms().iter().all(|t| {
                    self.basis
                        .iter()
                        .enumerate()
                        .all(|(j, h)| i == j || !h.leading_monomial().unwrap().divides(&t.mono))
                })
        })
    }
}

/// Element of the free module `R^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement<F: Field> {
    components: Vec<Polynomial<F>>,
}

impl<F: Field> ModuleElement<F> {
    pub fn new(components: Vec<Polynomial<F>>) -> Self {
        ModuleElement { components }
    }

    pub fn zero(ring: &RingRef<F>, rank: usize) -> Self {
        ModuleElement {
            components: vec![Polynomial::zero(ring); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial<F>] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Polynomial<F>> {
        self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    /// `sum_i self_i * values_i`.
    pub fn dot(&self, values: &[Polynomial<F>]) -> Polynomial<F> {
        let ring = values[0].ring();
        self.components
            .iter()
            .zip(values)
            .fold(Polynomial::zero(ring), |acc, (a, b)| &acc + &(a * b))
    }

    pub fn scale(&self, f: &Polynomial<F>) -> Self {
        ModuleElement {
            components: self.components.iter().map(|c| c * f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        ModuleElement {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Maximal graded degree plus the shift of the component it occurs in.
    pub fn shifted_degree(&self, shifts: &[u64]) -> Option<u64> {
        self.components
            .iter()
            .zip(shifts)
            .filter_map(|(c, &s)| c.graded_degree().map(|d| d + s))
            .max()
    }

    fn to_vector(&self, engine: &Engine<'_, F>) -> Vector<F> {
        let mut v: Vector<F> = self
            .components
            .iter()
            .enumerate()
            .flat_map(|(k, c)| {
                c.terms().iter().map(move |t| VTerm {
                    pos: k as u32,
                    mono: t.mono.clone(),
                    coeff: t.coeff.clone(),
                })
            })
            .collect();
        engine.sort(&mut v);
        v
    }

    fn from_vector(ring: &RingRef<F>, rank: usize, v: &Vector<F>) -> Self {
        let mut parts: Vec<Vec<_>> = vec![Vec::new(); rank];
        for t in v {
            parts[t.pos as usize].push((t.coeff.clone(), t.mono.clone()));
        }
        ModuleElement {
            components: parts
                .into_iter()
                .map(|p| Polynomial::from_terms(ring, p))
                .collect(),
        }
    }
}

/// Groebner basis of a submodule of `R^r`.
#[derive(Clone, Debug)]
pub struct ModuleGroebnerBasis<F: Field> {
    ring: RingRef<F>,
    rank: usize,
    order: ModuleOrder,
    basis: Vec<ModuleElement<F>>,
    raw: Vec<Vector<F>>,
}

/// Groebner basis of the submodule generated by `elements` under `order`
/// (position over term is the usual choice).
pub fn module_buchberger<F: Field>(
    ring: &RingRef<F>,
    elements: &[ModuleElement<F>],
    rank: usize,
    order: ModuleOrder,
) -> Result<ModuleGroebnerBasis<F>> {
    for e in elements {
        if e.rank() != rank {
            return Err(AlgebraError::Precondition(format!(
                "element of rank {} in rank {rank}",
                e.rank()
            )));
        }
        for c in e.components() {
            ring.check_same(c.ring())?;
        }
    }
    let mut engine = Engine::new(ring, order.clone(), rank == 1);
    let inputs = elements.iter().map(|e| e.to_vector(&engine)).collect();
    let out = engine.groebner(inputs)?;
    let basis = out
        .basis
        .iter()
        .map(|v| ModuleElement::from_vector(ring, rank, v))
        .collect();
    Ok(ModuleGroebnerBasis {
        ring: ring.clone(),
        rank,
        order,
        basis,
        raw: out.basis,
    })
}

impl<F: Field> ModuleGroebnerBasis<F> {
    pub fn elements(&self) -> &[ModuleElement<F>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn normal_form(&self, v: &ModuleElement<F>) -> ModuleElement<F> {
        let mut engine = Engine::new(&self.ring, self.order.clone(), self.rank == 1).unbounded();
        let usable = vec![true; self.raw.len()];
        let vec = v.to_vector(&engine);
        let r = engine
            .reduce(vec, &self.raw, &usable)
            .expect("unbounded reduction");
        ModuleElement::from_vector(&self.ring, self.rank, &r)
    }

    pub fn contains(&self, v: &ModuleElement<F>) -> bool {
        self.normal_form(v).is_zero()
    }

    pub fn satisfies_buchberger_criterion(&self) -> bool {
        Engine::new(&self.ring, self.order.clone(), self.rank == 1)
            .unbounded()
            .satisfies_criterion(&self.raw)
    }
}

/// Generators of the syzygy module `{a : sum_i a_i * gens_i = 0}`.
///
/// Runs Buchberger on the rows `(g_i | e_i)` with the first component
/// dominating; the cofactor parts of the elements that reduce to zero in the
/// first component form a Groebner basis of the syzygies.
pub fn syzygies<F: Field>(
    ring: &RingRef<F>,
    gens: &[Polynomial<F>],
) -> Result<Vec<ModuleElement<F>>> {
    let elements: Vec<ModuleElement<F>> = gens
        .iter()
        .map(|g| ModuleElement::new(vec![g.clone()]))
        .collect();
    module_syzygies(ring, 1, &elements)
}

/// Syzygies among module elements of rank `rank`.
pub fn module_syzygies<F: Field>(
    ring: &RingRef<F>,
    rank: usize,
    elements: &[ModuleElement<F>],
) -> Result<Vec<ModuleElement<F>>> {
    let n = elements.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let grading_shift: Vec<u64> = elements
        .iter()
        .map(|e| e.shifted_degree(&vec![0; rank]).unwrap_or(0))
        .collect();
    let mut shifts = vec![0u64; rank];
    shifts.extend(&grading_shift);
    let order = ModuleOrder::Top {
        shifts,
        dominant: rank,
    };
    let total = rank + n;
    let rows: Vec<ModuleElement<F>> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let mut comps = e.components().to_vec();
            comps.extend((0..n).map(|k| {
                if k == i {
                    Polynomial::one(ring)
                } else {
                    Polynomial::zero(ring)
                }
            }));
            ModuleElement::new(comps)
        })
        .collect();
    let gb = module_buchberger(ring, &rows, total, order)?;
    Ok(gb
        .raw
        .iter()
        .filter(|v| v[0].pos as usize >= rank)
        .map(|v| {
            let full = ModuleElement::from_vector(ring, total, v);
            ModuleElement::new(full.components[rank..].to_vec())
        })
        .collect())
}
