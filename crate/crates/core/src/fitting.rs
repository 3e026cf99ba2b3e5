//! Polynomial matrices, minors, module presentations, Fitting ideals, free
//! resolutions and canonical modules of perfect ideals.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::{
    module_buchberger, module_syzygies, GroebnerBasis, ModuleElement, ModuleOrder,
};
use crate::ideal::Ideal;
use crate::poly::{Polynomial, RingRef};

/// Dense row-major matrix of polynomials over one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix<F: Field> {
    ring: RingRef<F>,
    nrows: usize,
    ncols: usize,
    entries: Vec<Polynomial<F>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn new(ring: &RingRef<F>, rows: Vec<Vec<Polynomial<F>>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(AlgebraError::Precondition("ragged matrix".into()));
        }
        for e in rows.iter().flatten() {
            ring.check_same(e.ring())?;
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            nrows,
            ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn parse(ring: &RingRef<F>, rows: &[&[&str]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| Polynomial::parse(ring, s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, rows)
    }

    pub fn zero(ring: &RingRef<F>, nrows: usize, ncols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            nrows,
            ncols,
            entries: vec![Polynomial::zero(ring); nrows * ncols],
        }
    }

    pub fn identity(ring: &RingRef<F>, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = Polynomial::one(ring);
        }
        m
    }

    /// Matrix with the given columns, each of length `nrows`.
    pub fn from_columns(
        ring: &RingRef<F>,
        nrows: usize,
        columns: Vec<Vec<Polynomial<F>>>,
    ) -> Result<Self> {
        if columns.iter().any(|c| c.len() != nrows) {
            return Err(AlgebraError::Precondition("column length mismatch".into()));
        }
        let mut m = Self::zero(ring, nrows, columns.len());
        for (j, col) in columns.into_iter().enumerate() {
            for (i, e) in col.into_iter().enumerate() {
                ring.check_same(e.ring())?;
                m.entries[i * m.ncols + j] = e;
            }
        }
        Ok(m)
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[i * self.ncols + j]
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial<F>> {
        self.entries[i * self.ncols..(i + 1) * self.ncols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial<F>> {
        (0..self.nrows).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial<F>>> {
        (0..self.ncols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.ncols {
            for i in 0..self.nrows {
                entries.push(self.entry(i, j).clone());
            }
        }
        PolyMatrix {
            ring: self.ring.clone(),
            nrows: self.ncols,
            ncols: self.nrows,
            entries,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        if self.ncols != other.nrows {
            return Err(AlgebraError::Precondition(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        let mut out = Self::zero(&self.ring, self.nrows, other.ncols);
        for i in 0..self.nrows {
            for j in 0..other.ncols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.ncols {
                    acc = &acc + &(self.entry(i, k) * other.entry(k, j));
                }
                out.entries[i * other.ncols + j] = acc;
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    /// Ideal generated by all entries.
    pub fn entry_ideal(&self) -> Ideal<F> {
        Ideal::from_gens(&self.ring, self.entries.clone())
    }

    fn check_minor_size(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.nrows.min(self.ncols) {
            return Err(AlgebraError::Precondition(format!(
                "minor size {k} outside 1..={} for a {}x{} matrix",
                self.nrows.min(self.ncols),
                self.nrows,
                self.ncols
            )));
        }
        if self.nrows > 64 || self.ncols > 64 {
            return Err(AlgebraError::Unsupported(
                "minors of matrices beyond 64x64".into(),
            ));
        }
        Ok(())
    }

    /// All `k x k` minors; row subsets outer, column subsets inner, both in
    /// lexicographic order.
    pub fn minors(&self, k: usize) -> Result<Vec<Polynomial<F>>> {
        self.check_minor_size(k)?;
        let mut dets = Determinants::new(self, None);
        let mut out = Vec::new();
        for rows in (0..self.nrows).combinations(k) {
            for cols in (0..self.ncols).combinations(k) {
                out.push(dets.det(mask(&rows), mask(&cols)));
            }
        }
        Ok(out)
    }

    pub fn minor_ideal(&self, k: usize) -> Result<Ideal<F>> {
        Ok(Ideal::from_gens(&self.ring, self.minors(k)?))
    }

    /// A `k x k` minor outside `j`, if any.
    ///
    /// Works modulo `j`, where it suffices to decide whether the minors
    /// vanish: entries are reduced, columns vanishing modulo `j` are dropped,
    /// and every constant entry is used as a pivot, which lowers the minor
    /// size by one. The returned minor is a genuine minor of `self`.
    pub fn minor_outside(&self, k: usize, j: &Ideal<F>) -> Result<Option<Polynomial<F>>> {
        self.check_minor_size(k)?;
        let gb = j.groebner()?;
        if gb.is_unit() {
            return Ok(None);
        }
        let mut rows: Vec<usize> = (0..self.nrows).collect();
        let mut cols: Vec<usize> = (0..self.ncols).collect();
        let mut a: Vec<Vec<Polynomial<F>>> = (0..self.nrows)
            .map(|r| {
                (0..self.ncols)
                    .map(|c| gb.normal_form(self.entry(r, c)))
                    .collect()
            })
            .collect();
        let (mut pivot_rows, mut pivot_cols) = (Vec::new(), Vec::new());
        let mut k = k;
        loop {
            let live: Vec<usize> = (0..cols.len())
                .filter(|&c| a.iter().any(|row| !row[c].is_zero()))
                .collect();
            cols = live.iter().map(|&c| cols[c]).collect();
            for row in a.iter_mut() {
                *row = live.iter().map(|&c| row[c].clone()).collect();
            }
            if k == 0 {
                break;
            }
            let pivot = (0..rows.len())
                .flat_map(|r| (0..cols.len()).map(move |c| (r, c)))
                .find(|&(r, c)| a[r][c].is_constant() && !a[r][c].is_zero());
            let Some((pr, pc)) = pivot else { break };
            let inv = a[pr][pc].leading_coeff().unwrap().inv()?;
            let pivot_row: Vec<Polynomial<F>> = a[pr].iter().map(|e| e.scale(&inv)).collect();
            for (r, row) in a.iter_mut().enumerate() {
                if r == pr || row[pc].is_zero() {
                    continue;
                }
                let factor = row[pc].clone();
                for (c, e) in row.iter_mut().enumerate() {
                    if c != pc && !pivot_row[c].is_zero() {
                        *e = gb.normal_form(&(&*e - &(&factor * &pivot_row[c])));
                    }
                }
            }
            a.remove(pr);
            for row in a.iter_mut() {
                row.remove(pc);
            }
            pivot_rows.push(rows.remove(pr));
            pivot_cols.push(cols.remove(pc));
            k -= 1;
        }
        let genuine = |r: &[usize], c: &[usize]| {
            let rows: Vec<usize> = r.iter().chain(&pivot_rows).copied().collect();
            let cols: Vec<usize> = c.iter().chain(&pivot_cols).copied().collect();
            Determinants::new(self, None).det(mask(&rows), mask(&cols))
        };
        if k == 0 {
            return Ok(Some(genuine(&[], &[])));
        }
        if cols.len() < k || rows.len() < k {
            return Ok(None);
        }
        let reduced = PolyMatrix::new(&self.ring, a)?;
        let mut dets = Determinants::new(&reduced, Some(&gb));
        for rs in (0..rows.len()).combinations(k) {
            for cs in (0..cols.len()).combinations(k) {
                if !dets.det(mask(&rs), mask(&cs)).is_zero() {
                    let r: Vec<usize> = rs.iter().map(|&i| rows[i]).collect();
                    let c: Vec<usize> = cs.iter().map(|&i| cols[i]).collect();
                    return Ok(Some(genuine(&r, &c)));
                }
            }
        }
        Ok(None)
    }
}

/// Bound on memoized subdeterminants before the cache is dropped.
const MEMO_LIMIT: usize = 1 << 18;

fn mask(indices: &[usize]) -> u64 {
    indices.iter().fold(0, |m, &i| m | (1 << i))
}

/// Memoized Laplace expansion along the first row of each submatrix,
/// optionally reducing every intermediate determinant by a Groebner basis.
struct Determinants<'a, F: Field> {
    m: &'a PolyMatrix<F>,
    gb: Option<&'a GroebnerBasis<F>>,
    memo: HashMap<(u64, u64), Polynomial<F>>,
}

impl<'a, F: Field> Determinants<'a, F> {
    fn new(m: &'a PolyMatrix<F>, gb: Option<&'a GroebnerBasis<F>>) -> Self {
        Determinants {
            m,
            gb,
            memo: HashMap::new(),
        }
    }

    fn det(&mut self, rows: u64, cols: u64) -> Polynomial<F> {
        if rows == 0 {
            return Polynomial::one(&self.m.ring);
        }
        if let Some(d) = self.memo.get(&(rows, cols)) {
            return d.clone();
        }
        let r = rows.trailing_zeros() as usize;
        let rest = rows & !(1 << r);
        let mut acc = Polynomial::zero(&self.m.ring);
        let mut negative = false;
        let mut bits = cols;
        while bits != 0 {
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let a = self.m.entry(r, c);
            if !a.is_zero() {
                let sub = self.det(rest, cols & !(1 << c));
                if !sub.is_zero() {
                    let term = a * &sub;
                    acc = if negative { &acc - &term } else { &acc + &term };
                }
            }
            negative = !negative;
        }
        if let Some(gb) = self.gb {
            acc = gb.normal_form(&acc);
        }
        if self.memo.len() >= MEMO_LIMIT {
            self.memo.clear();
        }
        self.memo.insert((rows, cols), acc.clone());
        acc
    }
}

impl<F: Field> fmt::Display for PolyMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.nrows {
            if i > 0 {
                f.write_str("; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        f.write_str("]")
    }
}

/// Module `R^n / (column span of relations)`.
#[derive(Clone, Debug)]
pub struct ModulePresentation<F: Field> {
    relations: PolyMatrix<F>,
    generator_images: Option<Vec<Polynomial<F>>>,
}

impl<F: Field> ModulePresentation<F> {
    pub fn new(relations: PolyMatrix<F>) -> Self {
        ModulePresentation {
            relations,
            generator_images: None,
        }
    }

    /// Presentation whose generators map to `images`; every relation column
    /// must be a syzygy of `images`.
    pub fn with_images(relations: PolyMatrix<F>, images: Vec<Polynomial<F>>) -> Result<Self> {
        if images.len() != relations.nrows() {
            return Err(AlgebraError::Precondition("one image per generator".into()));
        }
        Ok(ModulePresentation {
            relations,
            generator_images: Some(images),
        })
    }

    pub fn ring(&self) -> &RingRef<F> {
        self.relations.ring()
    }

    pub fn generators(&self) -> usize {
        self.relations.nrows()
    }

    pub fn relations(&self) -> &PolyMatrix<F> {
        &self.relations
    }

    pub fn generator_images(&self) -> Option<&[Polynomial<F>]> {
        self.generator_images.as_deref()
    }

    /// Minor size defining `F_i`; `None` when `F_i` is the unit ideal.
    fn fitting_size(&self, i: usize) -> Option<usize> {
        self.generators().checked_sub(i).filter(|&k| k > 0)
    }

    /// `F_i`: the ideal of `(n-i)`-minors; unit when `n <= i`, zero when
    /// there are too few relations.
    pub fn fitting_ideal(&self, i: usize) -> Result<Ideal<F>> {
        let ring = self.ring();
        match self.fitting_size(i) {
            None => Ok(Ideal::unit(ring)),
            Some(k) if k > self.relations.ncols() => Ok(Ideal::zero(ring)),
            Some(k) => self.relations.minor_ideal(k),
        }
    }

    /// A generator of `F_i` outside `j`, or `None` when `F_i ⊆ j`.
    pub fn fitting_minor_outside(&self, i: usize, j: &Ideal<F>) -> Result<Option<Polynomial<F>>> {
        match self.fitting_size(i) {
            None => Ok((!j.is_unit()?).then(|| Polynomial::one(self.ring()))),
            Some(k) if k > self.relations.ncols() => Ok(None),
            Some(k) => self.relations.minor_outside(k, j),
        }
    }
}

/// Relations among `gens` projected to the first `n` coordinates. Graded
/// input gets a minimal set of syzygies.
fn project_syzygies<F: Field>(
    ring: &RingRef<F>,
    n: usize,
    gens: &[Polynomial<F>],
) -> Result<PolyMatrix<F>> {
    let elements: Vec<ModuleElement<F>> = gens
        .iter()
        .map(|g| ModuleElement::new(vec![g.clone()]))
        .collect();
    let mut syz: Vec<Vec<Polynomial<F>>> = module_syzygies(ring, 1, &elements)?
        .into_iter()
        .map(ModuleElement::into_components)
        .collect();
    let grading = ring.grading();
    if gens.iter().all(|g| g.is_homogeneous_for(&grading)) {
        let shifts: Vec<u64> = gens
            .iter()
            .map(|g| {
                g.terms()
                    .first()
                    .map_or(0, |t| t.mono.weighted_degree(&grading))
            })
            .collect();
        syz = minimalize_columns(ring, gens.len(), syz, &shifts)?;
    }
    let columns: Vec<Vec<Polynomial<F>>> = syz
        .into_iter()
        .map(|s| s[..n].to_vec())
        .filter(|c| c.iter().any(|e| !e.is_zero()))
        .collect();
    PolyMatrix::from_columns(ring, n, columns)
}

/// The ideal `I` as a module, presented on its generators by their syzygies.
pub fn present_ideal<F: Field>(ideal: &Ideal<F>) -> Result<ModulePresentation<F>> {
    let gens = ideal.gens().to_vec();
    let relations = project_syzygies(ideal.ring(), gens.len(), &gens)?;
    ModulePresentation::with_images(relations, gens)
}

/// `I/(x)` on the generators `f_1..f_n` of `I`, as given: the relations are
/// the first `n` coordinates of the syzygies of `(f_1, ..., f_n, x)`.
pub fn present_ideal_quotient<F: Field>(
    ideal: &Ideal<F>,
    x: &Polynomial<F>,
) -> Result<ModulePresentation<F>> {
    if !ideal.contains(x)? {
        return Err(AlgebraError::NotInIdeal);
    }
    let mut gens = ideal.gens().to_vec();
    let n = gens.len();
    gens.push(x.clone());
    let relations = project_syzygies(ideal.ring(), n, &gens)?;
    ModulePresentation::with_images(relations, ideal.gens().to_vec())
}

/// Maps `d_1, d_2, ...` of a free resolution of `R/I`, `d_1` being the row
/// of generators of `I`.
#[derive(Clone, Debug)]
pub struct FreeResolution<F: Field> {
    pub maps: Vec<PolyMatrix<F>>,
    /// False when the length bound cut the computation short.
    pub complete: bool,
    /// Whether each module was trimmed to a minimal generating set.
    pub minimal: bool,
}

impl<F: Field> FreeResolution<F> {
    pub fn length(&self) -> usize {
        self.maps.len()
    }
}

/// Greedy minimal generating subset of a graded submodule of `R^rank`,
/// scanning columns by ascending shifted degree.
fn minimalize_columns<F: Field>(
    ring: &RingRef<F>,
    rank: usize,
    columns: Vec<Vec<Polynomial<F>>>,
    shifts: &[u64],
) -> Result<Vec<Vec<Polynomial<F>>>> {
    let mut sorted: Vec<(u64, Vec<Polynomial<F>>)> = columns
        .into_iter()
        .map(|c| {
            (
                ModuleElement::new(c.clone())
                    .shifted_degree(shifts)
                    .unwrap_or(0),
                c,
            )
        })
        .collect();
    sorted.sort_by_key(|(d, _)| *d);
    let mut kept: Vec<ModuleElement<F>> = Vec::new();
    for (_, c) in sorted {
        let e = ModuleElement::new(c);
        if e.is_zero() {
            continue;
        }
        let inside = !kept.is_empty()
            && module_buchberger(ring, &kept, rank, ModuleOrder::Pot)?.contains(&e);
        if !inside {
            kept.push(e);
        }
    }
    Ok(kept
        .into_iter()
        .map(ModuleElement::into_components)
        .collect())
}

/// Iterated syzygies of the generators of `I`, at most `bound` maps. For
/// graded ideals every step is trimmed to a minimal generating set, so the
/// length is the projective dimension of `R/I`.
pub fn free_resolution<F: Field>(ideal: &Ideal<F>, bound: usize) -> Result<FreeResolution<F>> {
    if bound == 0 {
        return Err(AlgebraError::Precondition(
            "length bound must be positive".into(),
        ));
    }
    let ring = ideal.ring();
    let graded = ideal.is_graded();
    let gens = if graded {
        ideal.minimal_generators()?.gens().to_vec()
    } else {
        ideal.gens().to_vec()
    };
    let grading = ring.grading();
    let mut shifts: Vec<u64> = gens
        .iter()
        .map(|g| {
            g.terms()
                .iter()
                .map(|t| t.mono.weighted_degree(&grading))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut maps = vec![PolyMatrix::new(ring, vec![gens])?];
    loop {
        let last = maps.last().unwrap();
        let elements: Vec<ModuleElement<F>> =
            last.columns().into_iter().map(ModuleElement::new).collect();
        let mut syz: Vec<Vec<Polynomial<F>>> = module_syzygies(ring, last.nrows(), &elements)?
            .into_iter()
            .map(ModuleElement::into_components)
            .collect();
        syz.retain(|c| c.iter().any(|e| !e.is_zero()));
        if syz.is_empty() {
            return Ok(FreeResolution {
                maps,
                complete: true,
                minimal: graded,
            });
        }
        if maps.len() == bound {
            return Ok(FreeResolution {
                maps,
                complete: false,
                minimal: graded,
            });
        }
        let rank = last.ncols();
        if graded {
            syz = minimalize_columns(ring, rank, syz, &shifts)?;
        }
        shifts = syz
            .iter()
            .map(|c| {
                ModuleElement::new(c.clone())
                    .shifted_degree(&shifts)
                    .unwrap_or(0)
            })
            .collect();
        maps.push(PolyMatrix::from_columns(ring, rank, syz)?);
    }
}

/// Presentation of the canonical module of `R/I` for a perfect ideal: the
/// transpose of the last map of a resolution of length `codim I`.
pub fn canonical_module<F: Field>(ideal: &Ideal<F>) -> Result<ModulePresentation<F>> {
    let c = ideal.codimension()?;
    let res = free_resolution(ideal, c + 1)?;
    if !res.minimal {
        return Err(AlgebraError::Unsupported(
            "canonical module of a non-graded ideal".into(),
        ));
    }
    if !res.complete || res.length() != c {
        return Err(AlgebraError::Unsupported(format!(
            "ideal is not perfect: resolution length {} exceeds codimension {c}",
            res.length()
        )));
    }
    Ok(ModulePresentation::new(
        res.maps.last().unwrap().transpose(),
    ))
}
