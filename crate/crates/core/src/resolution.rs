//! Graded syzygies, minimal free resolutions, Betti tables and canonical modules.
//!
//! Kernels are computed from a module Gröbner basis of the graph of a map:
//! the image coordinates are placed in a block that dominates the tag
//! coordinates, so basis elements whose leading term lies in the tag block
//! generate the kernel.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{self, module_groebner, ModuleOrder, Vector};
use crate::hilbert::HilbertSeries;
use crate::ideal::{codimension, is_saturated, minimal_generators, Ideal};
use crate::monideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring};

/// A homogeneous map `⊕ S(-col_degrees) -> ⊕ S(-row_degrees)`, stored by columns.
#[derive(Clone, Debug)]
pub struct GradedMatrix<F: Field> {
    ring: Arc<Ring<F>>,
    row_degrees: Vec<i64>,
    col_degrees: Vec<i64>,
    cols: Vec<Vec<Polynomial<F>>>,
}

impl<F: Field> GradedMatrix<F> {
    /// Checks that entry `(r, k)` is zero or homogeneous of degree `col_degrees[k] - row_degrees[r]`.
    pub fn new(
        ring: &Arc<Ring<F>>,
        row_degrees: Vec<i64>,
        col_degrees: Vec<i64>,
        cols: Vec<Vec<Polynomial<F>>>,
    ) -> Result<Self> {
        if cols.len() != col_degrees.len() {
            return Err(Error::InconsistentDegrees(format!(
                "{} columns but {} column degrees",
                cols.len(),
                col_degrees.len()
            )));
        }
        for (k, col) in cols.iter().enumerate() {
            if col.len() != row_degrees.len() {
                return Err(Error::InconsistentDegrees(format!(
                    "column {k} has {} entries, expected {}",
                    col.len(),
                    row_degrees.len()
                )));
            }
            for (r, e) in col.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                let want = col_degrees[k] - row_degrees[r];
                if !e.is_homogeneous() || e.degree().unwrap() as i64 != want {
                    return Err(Error::InconsistentDegrees(format!(
                        "entry ({r}, {k}) = {e} should be homogeneous of degree {want}"
                    )));
                }
            }
        }
        Ok(GradedMatrix {
            ring: ring.clone(),
            row_degrees,
            col_degrees,
            cols,
        })
    }

    /// A single row of homogeneous polynomials mapping onto `S`.
    pub fn row(ring: &Arc<Ring<F>>, entries: &[Polynomial<F>]) -> Result<Self> {
        let degs = entries
            .iter()
            .map(|e| {
                e.degree()
                    .map(|d| d as i64)
                    .ok_or_else(|| Error::InconsistentDegrees("zero entry in a row".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, vec![0], degs, entries.iter().map(|e| vec![e.clone()]).collect())
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn row_degrees(&self) -> &[i64] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[i64] {
        &self.col_degrees
    }

    pub fn entry(&self, r: usize, k: usize) -> &Polynomial<F> {
        &self.cols[k][r]
    }

    pub fn column(&self, k: usize) -> &[Polynomial<F>] {
        &self.cols[k]
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.iter().all(|e| e.is_zero()))
    }

    pub fn has_unit_entry(&self) -> bool {
        self.cols
            .iter()
            .any(|c| c.iter().any(|e| !e.is_zero() && e.is_constant()))
    }

    /// `self * other`.
    pub fn mul(&self, other: &GradedMatrix<F>) -> GradedMatrix<F> {
        assert_eq!(self.ncols(), other.nrows());
        let zero = Polynomial::zero(&self.ring);
        let cols = other
            .cols
            .iter()
            .map(|oc| {
                (0..self.nrows())
                    .map(|r| {
                        let mut acc = zero.clone();
                        for (k, b) in oc.iter().enumerate() {
                            let a = &self.cols[k][r];
                            if !a.is_zero() && !b.is_zero() {
                                acc = &acc + &(a * b);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        GradedMatrix {
            ring: self.ring.clone(),
            row_degrees: self.row_degrees.clone(),
            col_degrees: other.col_degrees.clone(),
            cols,
        }
    }

    /// The dual map between dual free modules: degrees are negated.
    pub fn transpose(&self) -> GradedMatrix<F> {
        let cols = (0..self.nrows())
            .map(|r| self.cols.iter().map(|c| c[r].clone()).collect())
            .collect();
        GradedMatrix {
            ring: self.ring.clone(),
            row_degrees: self.col_degrees.iter().map(|d| -d).collect(),
            col_degrees: self.row_degrees.iter().map(|d| -d).collect(),
            cols,
        }
    }

    /// Columns of `self` followed by columns of `other` (same target).
    pub fn concat(&self, other: &GradedMatrix<F>) -> GradedMatrix<F> {
        assert_eq!(self.row_degrees, other.row_degrees);
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        let mut col_degrees = self.col_degrees.clone();
        col_degrees.extend_from_slice(&other.col_degrees);
        GradedMatrix {
            ring: self.ring.clone(),
            row_degrees: self.row_degrees.clone(),
            col_degrees,
            cols,
        }
    }

    /// The first `k` rows.
    fn top_rows(&self, k: usize) -> GradedMatrix<F> {
        GradedMatrix {
            ring: self.ring.clone(),
            row_degrees: self.row_degrees[..k].to_vec(),
            col_degrees: self.col_degrees.clone(),
            cols: self.cols.iter().map(|c| c[..k].to_vec()).collect(),
        }
    }

    fn column_vectors(&self, order: &ModuleOrder, offset: usize) -> Vec<Vector<F>> {
        self.cols
            .iter()
            .map(|c| Vector::from_column(self.ring.field(), order, c, offset))
            .collect()
    }

    fn from_vectors(
        ring: &Arc<Ring<F>>,
        row_degrees: Vec<i64>,
        order: &ModuleOrder,
        vecs: &[Vector<F>],
    ) -> GradedMatrix<F> {
        let rank = row_degrees.len();
        let col_degrees = vecs.iter().map(|v| v.degree(order).expect("nonzero")).collect();
        let cols = vecs.iter().map(|v| v.to_column(ring, 0, rank)).collect();
        GradedMatrix {
            ring: ring.clone(),
            row_degrees,
            col_degrees,
            cols,
        }
    }

    /// Minimal generators of the column span.
    pub fn minimize_columns(&self) -> Result<GradedMatrix<F>> {
        let order = ModuleOrder::graded(self.row_degrees.clone());
        let vecs: Vec<Vector<F>> = self
            .column_vectors(&order, 0)
            .into_iter()
            .filter(|v| !v.is_zero())
            .collect();
        let kept = groebner::minimal_generators(self.ring.field(), &order, &vecs)?;
        Ok(Self::from_vectors(&self.ring, self.row_degrees.clone(), &order, &kept))
    }
}

impl<F: Field> fmt::Display for GradedMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.nrows() {
            let row: Vec<String> = self.cols.iter().map(|c| c[r].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Minimal generators of the kernel of `m`, as the columns of a matrix whose
/// rows are indexed by the columns of `m`.
pub fn syzygies<F: Field>(m: &GradedMatrix<F>) -> Result<GradedMatrix<F>> {
    let r = m.nrows();
    let k = m.ncols();
    let ring = &m.ring;
    let field = ring.field();
    let mut shifts = m.row_degrees.clone();
    shifts.extend_from_slice(&m.col_degrees);
    let order = ModuleOrder::graded_elimination(shifts, r);
    let nvars = ring.nvars();
    let gens: Vec<Vector<F>> = (0..k)
        .map(|j| {
            let mut v = Vector::from_column(field, &order, &m.cols[j], 0);
            v.terms.push((field.one(), Monomial::one(nvars), r + j));
            Vector::normalize(field, &order, v.terms)
        })
        .collect();
    let gb = module_groebner(field, &order, &gens)?;
    let tag_order = ModuleOrder::graded(m.col_degrees.clone());
    let kernel: Vec<Vector<F>> = gb
        .into_iter()
        .filter(|v| v.lead().is_some_and(|(_, c)| c >= r))
        .map(|v| {
            let terms = v.terms.into_iter().map(|(c, mo, comp)| (c, mo, comp - r)).collect();
            Vector::<F>::normalize(field, &tag_order, terms)
        })
        .collect();
    let kept = groebner::minimal_generators(field, &tag_order, &kernel)?;
    Ok(GradedMatrix::from_vectors(ring, m.col_degrees.clone(), &tag_order, &kept))
}

/// Graded Betti numbers `β_{i,j}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn from_degrees(degrees: &[Vec<i64>]) -> Self {
        let mut entries = BTreeMap::new();
        for (i, ds) in degrees.iter().enumerate() {
            for &d in ds {
                *entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    pub fn get(&self, i: usize, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, i64), usize> {
        &self.entries
    }

    /// `(i, j, β_{i,j})` for every nonzero entry.
    pub fn triples(&self) -> Vec<(usize, i64, usize)> {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v)).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Projective dimension: the largest homological index present.
    pub fn length(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Total rank in homological degree `i`.
    pub fn rank(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|(&(k, _), _)| k == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Table of `M(k)`: internal degrees move down by `k`.
    pub fn twist(&self, k: i64) -> BettiTable {
        BettiTable {
            entries: self.entries.iter().map(|(&(i, j), &v)| ((i, j - k), v)).collect(),
        }
    }

    /// `Σ_i (-1)^i Σ_j β_{i,j} t^j` over `(1-t)^nvars`.
    pub fn hilbert_series(&self, nvars: usize) -> HilbertSeries {
        if self.entries.is_empty() {
            return HilbertSeries::zero(nvars);
        }
        let low = self.entries.keys().map(|&(_, j)| j).min().unwrap();
        let high = self.entries.keys().map(|&(_, j)| j).max().unwrap();
        let mut num = vec![0i64; (high - low + 1) as usize];
        for (&(i, j), &v) in &self.entries {
            let s = if i % 2 == 0 { 1 } else { -1 };
            num[(j - low) as usize] += s * v as i64;
        }
        HilbertSeries::new(num, low, nvars)
    }

    /// `max { j - i }`, the regularity of the resolved module.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j - i as i64).max()
    }
}

impl fmt::Display for BettiTable {
    /// Macaulay layout: row `j - i`, column `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "(zero module)");
        }
        let len = self.length();
        let rows: Vec<i64> = {
            let mut r: Vec<i64> = self.entries.keys().map(|&(i, j)| j - i as i64).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let (lo, hi) = (rows[0], *rows.last().unwrap());
        let width = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(len.to_string().len());
        let label = lo.to_string().len().max(hi.to_string().len()).max(5);
        write!(f, "{:>label$}:", "")?;
        for i in 0..=len {
            write!(f, " {:>width$}", i)?;
        }
        writeln!(f)?;
        write!(f, "{:>label$}:", "total")?;
        for i in 0..=len {
            write!(f, " {:>width$}", self.rank(i))?;
        }
        writeln!(f)?;
        for row in lo..=hi {
            write!(f, "{:>label$}:", row)?;
            for i in 0..=len {
                let v = self.get(i, row + i as i64);
                if v == 0 {
                    write!(f, " {:>width$}", "-")?;
                } else {
                    write!(f, " {:>width$}", v)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A graded free resolution `F_0 <- F_1 <- ... <- F_p`.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    ring: Arc<Ring<F>>,
    /// Generator degrees of each `F_i`.
    degrees: Vec<Vec<i64>>,
    /// `maps[i]` is `d_{i+1}: F_{i+1} -> F_i`.
    maps: Vec<GradedMatrix<F>>,
}

impl<F: Field> Resolution<F> {
    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn maps(&self) -> &[GradedMatrix<F>] {
        &self.maps
    }

    pub fn degrees(&self) -> &[Vec<i64>] {
        &self.degrees
    }

    pub fn length(&self) -> usize {
        self.degrees.iter().rposition(|d| !d.is_empty()).unwrap_or(0)
    }

    pub fn betti(&self) -> BettiTable {
        BettiTable::from_degrees(&self.degrees)
    }

    /// `d_i * d_{i+1} = 0` for every `i`.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }

    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| !m.has_unit_entry())
    }
}

/// Extend a minimal presentation `d_1` to a full minimal resolution.
fn resolve_from<F: Field>(ring: &Arc<Ring<F>>, d1: GradedMatrix<F>) -> Result<Resolution<F>> {
    let mut degrees = vec![d1.row_degrees.clone()];
    let mut maps = Vec::new();
    let mut cur = d1;
    // Hilbert's syzygy theorem bounds the length
    for _ in 0..=ring.nvars() + 1 {
        if cur.ncols() == 0 {
            break;
        }
        degrees.push(cur.col_degrees.clone());
        let next = syzygies(&cur)?;
        maps.push(cur);
        cur = next;
    }
    Ok(Resolution {
        ring: ring.clone(),
        degrees,
        maps,
    })
}

/// Minimal graded free resolution of `S/I`.
pub fn minimal_free_resolution<F: Field>(i: &Ideal<F>) -> Result<Resolution<F>> {
    if !i.is_homogeneous() {
        return Err(Error::Inhomogeneous { op: "minimal_free_resolution" });
    }
    let ring = i.ring();
    if i.is_unit()? {
        return Ok(Resolution {
            ring: ring.clone(),
            degrees: vec![Vec::new()],
            maps: Vec::new(),
        });
    }
    if i.is_zero() {
        return Ok(Resolution {
            ring: ring.clone(),
            degrees: vec![vec![0]],
            maps: Vec::new(),
        });
    }
    let gens = minimal_generators(i)?;
    let d1 = GradedMatrix::row(ring, &gens)?;
    resolve_from(ring, d1)
}

fn require_saturated_proper<F: Field>(i: &Ideal<F>, op: &'static str) -> Result<()> {
    if !i.is_homogeneous() {
        return Err(Error::Inhomogeneous { op });
    }
    if i.is_zero() {
        return Err(Error::ZeroIdeal { op });
    }
    if i.is_unit()? {
        return Err(Error::UnitIdeal { op });
    }
    if !is_saturated(i)? {
        return Err(Error::NotSaturated { op });
    }
    Ok(())
}

/// Castelnuovo–Mumford regularity of a saturated ideal: `max { j - i }` over
/// the Betti table of `I`, read off the table of `S/I` with `i` shifted by one.
pub fn regularity<F: Field>(i: &Ideal<F>) -> Result<i64> {
    require_saturated_proper(i, "regularity")?;
    let betti = minimal_free_resolution(i)?.betti();
    Ok(regularity_from_betti(&betti))
}

/// Regularity of `I` from the Betti table of `S/I`.
pub fn regularity_from_betti(quotient: &BettiTable) -> i64 {
    quotient
        .entries()
        .keys()
        .filter(|&&(k, _)| k >= 1)
        .map(|&(k, j)| j - k as i64 + 1)
        .max()
        .unwrap_or(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthInfo {
    pub projective_dimension: usize,
    pub depth: usize,
    pub cohen_macaulay: bool,
}

/// Projective dimension, depth (Auslander–Buchsbaum) and Cohen–Macaulayness of `S/I`.
pub fn depth_pd_cm<F: Field>(i: &Ideal<F>) -> Result<DepthInfo> {
    if i.is_unit()? {
        return Err(Error::UnitIdeal { op: "depth_pd_cm" });
    }
    let res = minimal_free_resolution(i)?;
    Ok(depth_info(i.ring().nvars(), &res.betti(), codimension(i)?.expect("proper")))
}

pub fn depth_info(nvars: usize, quotient: &BettiTable, codim: usize) -> DepthInfo {
    let pd = quotient.length();
    DepthInfo {
        projective_dimension: pd,
        depth: nvars - pd,
        cohen_macaulay: pd == codim,
    }
}

/// `coker(relations)` with generators in `gen_degrees`, viewed as `M(twist)`.
#[derive(Clone, Debug)]
pub struct GradedModulePresentation<F: Field> {
    pub relations: GradedMatrix<F>,
    pub twist: i64,
}

impl<F: Field> GradedModulePresentation<F> {
    pub fn new(relations: GradedMatrix<F>, twist: i64) -> Self {
        GradedModulePresentation { relations, twist }
    }

    /// Free module with no relations.
    pub fn free(ring: &Arc<Ring<F>>, degrees: Vec<i64>, twist: i64) -> Self {
        let relations = GradedMatrix {
            ring: ring.clone(),
            row_degrees: degrees,
            col_degrees: Vec::new(),
            cols: Vec::new(),
        };
        GradedModulePresentation { relations, twist }
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.relations.ring
    }

    pub fn rank(&self) -> usize {
        self.relations.nrows()
    }

    /// Generator degrees of `M(twist)`.
    pub fn generator_degrees(&self) -> Vec<i64> {
        self.relations.row_degrees.iter().map(|d| d - self.twist).collect()
    }
}

/// Hilbert series of a presented module, from the leading terms of a module
/// Gröbner basis of its relations.
pub fn module_hilbert_series<F: Field>(m: &GradedModulePresentation<F>) -> Result<HilbertSeries> {
    let rel = &m.relations;
    let ring = rel.ring();
    let n = ring.nvars();
    let order = ModuleOrder::graded(rel.row_degrees.clone());
    let vecs: Vec<Vector<F>> = rel
        .column_vectors(&order, 0)
        .into_iter()
        .filter(|v| !v.is_zero())
        .collect();
    for v in &vecs {
        if !v.is_homogeneous(&order) {
            return Err(Error::InconsistentDegrees("relation column is not homogeneous".into()));
        }
    }
    let gb = module_groebner(ring.field(), &order, &vecs)?;
    let mut leads: Vec<Vec<Monomial>> = vec![Vec::new(); rel.nrows()];
    for v in &gb {
        let (mo, c) = v.lead().expect("nonzero");
        leads[c].push(mo.clone());
    }
    let mut hs = HilbertSeries::zero(n);
    for (k, lt) in leads.into_iter().enumerate() {
        let num = MonomialIdeal::new(n, lt).hilbert_numerator();
        hs = hs.add(&HilbertSeries::new(num, rel.row_degrees[k], n));
    }
    Ok(hs.twist(m.twist))
}

/// Remove unit entries from a presentation: each one cancels a generator
/// against a relation.
pub fn prune<F: Field>(m: &GradedModulePresentation<F>) -> GradedModulePresentation<F> {
    let field = m.ring().field().clone();
    let mut rel = m.relations.clone();
    loop {
        let mut pivot = None;
        'find: for (k, col) in rel.cols.iter().enumerate() {
            for (r, e) in col.iter().enumerate() {
                if !e.is_zero() && e.is_constant() {
                    pivot = Some((r, k));
                    break 'find;
                }
            }
        }
        let Some((r, k)) = pivot else {
            break;
        };
        let c = rel.cols[k][r].leading_coeff().unwrap().clone();
        let cinv = field.inv(&c).expect("nonzero");
        let pcol = rel.cols[k].clone();
        let mut cols = Vec::with_capacity(rel.ncols() - 1);
        let mut col_degrees = Vec::with_capacity(rel.ncols() - 1);
        for (j, col) in rel.cols.iter().enumerate() {
            if j == k {
                continue;
            }
            let factor = rel.cols[j][r].scale(&cinv);
            let new: Vec<Polynomial<F>> = col
                .iter()
                .zip(pcol.iter())
                .enumerate()
                .filter(|(row, _)| *row != r)
                .map(|(_, (a, b))| a - &(&factor * b))
                .collect();
            cols.push(new);
            col_degrees.push(rel.col_degrees[j]);
        }
        let mut row_degrees = rel.row_degrees.clone();
        row_degrees.remove(r);
        rel = GradedMatrix {
            ring: rel.ring.clone(),
            row_degrees,
            col_degrees,
            cols,
        };
    }
    GradedModulePresentation {
        relations: rel,
        twist: m.twist,
    }
}

/// Minimal graded free resolution of a presented module (before the twist).
pub fn resolve_module<F: Field>(m: &GradedModulePresentation<F>) -> Result<Resolution<F>> {
    let pruned = prune(m);
    let ring = pruned.ring().clone();
    if pruned.rank() == 0 {
        return Ok(Resolution {
            ring,
            degrees: vec![Vec::new()],
            maps: Vec::new(),
        });
    }
    let d1 = pruned.relations.minimize_columns()?;
    resolve_from(&ring, d1)
}

/// Betti table of `M(twist)`.
pub fn module_betti<F: Field>(m: &GradedModulePresentation<F>) -> Result<BettiTable> {
    Ok(resolve_module(m)?.betti().twist(m.twist))
}

/// `ω = Ext^c(S/I, S)(-nvars)` by dualizing the minimal resolution of `S/I`.
pub fn canonical_module<F: Field>(i: &Ideal<F>) -> Result<GradedModulePresentation<F>> {
    let res = minimal_free_resolution(i)?;
    let c = codimension(i)?.ok_or(Error::UnitIdeal { op: "canonical_module" })?;
    if c == 0 {
        return Err(Error::ZeroIdeal { op: "canonical_module" });
    }
    canonical_from_resolution(&res, c)
}

pub fn canonical_from_resolution<F: Field>(res: &Resolution<F>, c: usize) -> Result<GradedModulePresentation<F>> {
    let p = res.length();
    if p < c {
        return Err(Error::ShortResolution { length: p, codim: c });
    }
    let twist = -(res.ring.nvars() as i64);
    let dc_t = res.maps[c - 1].transpose();
    if p == c {
        return Ok(GradedModulePresentation::new(dc_t, twist));
    }
    let next_t = res.maps[c].transpose();
    let kernel = syzygies(&next_t)?;
    let combined = kernel.concat(&dc_t);
    let rel = syzygies(&combined)?.top_rows(kernel.ncols());
    Ok(GradedModulePresentation::new(rel, twist))
}
