//! Ideals with a cached Gröbner basis, and the ideal-level operations built on it.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{self, buchberger, GroebnerBasis, ModuleOrder, Vector};
use crate::hilbert::HilbertSeries;
use crate::monideal::MonomialIdeal;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{check_same_ring, Polynomial, Ring};

pub struct Ideal<F: Field> {
    ring: Arc<Ring<F>>,
    gens: Vec<Polynomial<F>>,
    gb: OnceLock<Arc<GroebnerBasis<F>>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb: self.gb.clone(),
        }
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({self})")
    }
}

impl<F: Field> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(", "))
        }
    }
}

/// Degree of a projective scheme; `empty` marks the empty scheme (degree 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degree {
    pub value: u64,
    pub empty: bool,
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<Ring<F>>, gens: Vec<Polynomial<F>>) -> Self {
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                assert!(Ring::same(g.ring(), ring), "generator from another ring");
                g
            })
            .collect();
        Ideal {
            ring: ring.clone(),
            gens,
            gb: OnceLock::new(),
        }
    }

    pub fn from_gens(gens: &[Polynomial<F>]) -> Result<Self> {
        let first = gens.first().ok_or(Error::ZeroIdeal { op: "from_gens" })?;
        for g in gens {
            check_same_ring(g.ring(), first.ring())?;
        }
        Ok(Self::new(first.ring(), gens.to_vec()))
    }

    pub fn zero(ring: &Arc<Ring<F>>) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<Ring<F>>) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)])
    }

    pub fn from_monomial(ring: &Arc<Ring<F>>, m: &MonomialIdeal) -> Self {
        assert_eq!(ring.nvars(), m.nvars());
        let one = ring.field().one();
        Self::new(
            ring,
            m.gens()
                .iter()
                .map(|g| Polynomial::term(ring, one.clone(), g.clone()))
                .collect(),
        )
    }

    /// The homogeneous maximal ideal.
    pub fn maximal(ring: &Arc<Ring<F>>) -> Self {
        Self::from_monomial(ring, &MonomialIdeal::maximal(ring.nvars()))
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// Reduced basis in the ring's own order, computed once.
    pub fn groebner(&self) -> Result<Arc<GroebnerBasis<F>>> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb.clone());
        }
        let gb = if self.gens.is_empty() {
            GroebnerBasis::empty(&self.ring)
        } else {
            buchberger(&self.gens, self.ring.order())?
        };
        Ok(self.gb.get_or_init(|| Arc::new(gb)).clone())
    }

    pub fn groebner_in(&self, order: MonomialOrder) -> Result<GroebnerBasis<F>> {
        if order == self.ring.order() {
            return Ok((*self.groebner()?).clone());
        }
        if self.gens.is_empty() {
            return Ok(GroebnerBasis::empty(&self.ring.with_order(order)));
        }
        buchberger(&self.gens, order)
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.gens.iter().any(|g| g.is_constant()) {
            return Ok(true);
        }
        Ok(self.groebner()?.is_unit())
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        self.groebner()?.contains(f)
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        check_same_ring(&self.ring, &other.ring)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn leading_ideal(&self) -> Result<MonomialIdeal> {
        Ok(MonomialIdeal::new(
            self.ring.nvars(),
            self.groebner()?.leading_monomials(),
        ))
    }

    /// The monomial ideal generated by the generators, when they are all monomials.
    pub fn as_monomial(&self) -> Option<MonomialIdeal> {
        if !self.gens.iter().all(|g| g.is_monomial()) {
            return None;
        }
        Some(MonomialIdeal::new(
            self.ring.nvars(),
            self.gens
                .iter()
                .map(|g| g.leading_monomial().unwrap().clone())
                .collect(),
        ))
    }

    pub fn is_monomial(&self) -> bool {
        self.as_monomial().is_some()
    }

    pub fn add(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        check_same_ring(&self.ring, &other.ring)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ok(Ideal::new(&self.ring, g))
    }

    pub fn mul(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        check_same_ring(&self.ring, &other.ring)?;
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a * b);
            }
        }
        Ok(Ideal::new(&self.ring, g))
    }

    /// Generators of the reduced Gröbner basis as a new ideal.
    pub fn reduced(&self) -> Result<Ideal<F>> {
        let gb = self.groebner()?;
        let out = Ideal::new(&self.ring, gb.elements().to_vec());
        let _ = out.gb.set(gb);
        Ok(out)
    }

    /// Image over another field; `None` if a coefficient has no image.
    pub fn map_field<G: Field>(&self, ring: &Arc<Ring<G>>) -> Option<Ideal<G>> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.map_field(ring))
            .collect::<Option<Vec<_>>>()?;
        Some(Ideal::new(ring, gens))
    }

    /// Degrees of the generators, in order.
    pub fn generator_degrees(&self) -> Vec<u64> {
        self.gens.iter().map(|g| g.degree().unwrap_or(0)).collect()
    }
}

/// `I ∩ J`, by eliminating `t` from `t*I + (1-t)*J`.
pub fn intersect<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    check_same_ring(&i.ring, &j.ring)?;
    let ring = &i.ring;
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if let (Some(a), Some(b)) = (i.as_monomial(), j.as_monomial()) {
        return Ok(Ideal::from_monomial(ring, &a.intersect(&b)));
    }
    if i.is_unit()? {
        return Ok(j.clone());
    }
    if j.is_unit()? {
        return Ok(i.clone());
    }
    let ext = ring.extend_front(&["t_"]);
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens = Vec::with_capacity(i.gens.len() + j.gens.len());
    gens.extend(i.gens.iter().map(|f| &t * &f.embed_front(&ext)));
    gens.extend(j.gens.iter().map(|g| &one_minus_t * &g.embed_front(&ext)));
    let (_, out) = groebner::eliminate_leading(&gens, 1)?;
    Ok(Ideal::new(ring, out.iter().map(|p| p.to_ring(ring)).collect()))
}

/// `I` intersected with the subring of the trailing variables, via a block elimination basis.
pub fn eliminate<F: Field>(i: &Ideal<F>, k: usize) -> Result<Ideal<F>> {
    let n = i.ring.nvars();
    if k == 0 || k >= n {
        return Err(Error::EliminationRange { k, nvars: n });
    }
    let sub = Ring::new(
        i.ring.field().clone(),
        i.ring.vars()[k..].to_vec(),
        MonomialOrder::Grevlex,
    );
    if i.is_zero() {
        return Ok(Ideal::zero(&sub));
    }
    let (sub, out) = groebner::eliminate_leading(&i.gens, k)?;
    Ok(Ideal::new(&sub, out))
}

fn colon_poly<F: Field>(i: &Ideal<F>, g: &Polynomial<F>) -> Result<Ideal<F>> {
    let ring = &i.ring;
    if g.is_constant() {
        return Ok(i.clone());
    }
    let k = intersect(i, &Ideal::new(ring, vec![g.clone()]))?;
    let gens = k
        .gens
        .iter()
        .map(|h| h.div_exact(g).expect("elements of (g) are multiples of g"))
        .collect();
    Ok(Ideal::new(ring, gens))
}

/// `I : J = { f : f*J ⊆ I }`.
pub fn colon<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    check_same_ring(&i.ring, &j.ring)?;
    if j.is_zero() {
        return Err(Error::ZeroIdeal { op: "colon" });
    }
    let ring = &i.ring;
    if let (Some(a), Some(b)) = (i.as_monomial(), j.as_monomial()) {
        return Ok(Ideal::from_monomial(ring, &a.colon(&b)));
    }
    if i.is_unit()? || i.contains_ideal(j)? {
        return Ok(Ideal::unit(ring));
    }
    if i.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let mut acc: Option<Ideal<F>> = None;
    for g in &j.gens {
        let q = colon_poly(i, g)?;
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(&a, &q)?,
        });
    }
    Ok(acc.expect("nonzero J"))
}

pub fn ideal_equal<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<bool> {
    check_same_ring(&i.ring, &j.ring)?;
    Ok(i.groebner()?.elements() == j.groebner()?.elements())
}

/// The variable index when `g` is a scalar multiple of a single variable.
fn as_variable<F: Field>(g: &Polynomial<F>) -> Option<usize> {
    if !g.is_monomial() {
        return None;
    }
    let m = g.leading_monomial()?;
    if m.degree() != 1 {
        return None;
    }
    m.exponents().iter().position(|&e| e == 1)
}

/// `I : x_v^∞` for homogeneous `I`: divide a grevlex basis with `x_v` last by
/// the largest power of `x_v`.
fn saturate_variable_homogeneous<F: Field>(i: &Ideal<F>, v: usize) -> Result<Ideal<F>> {
    let ring = &i.ring;
    let n = ring.nvars();
    let perm: Vec<usize> = (0..n).filter(|&k| k != v).chain(std::iter::once(v)).collect();
    let names: Vec<String> = perm.iter().map(|&k| ring.vars()[k].clone()).collect();
    let pring = Ring::new(ring.field().clone(), names, MonomialOrder::Grevlex);
    let to_perm = |p: &Polynomial<F>| {
        let raw = p
            .terms()
            .iter()
            .map(|(c, m)| {
                let e: Vec<u32> = perm.iter().map(|&k| m.exponent(k)).collect();
                (c.clone(), Monomial::from_exponents(&e))
            })
            .collect();
        Polynomial::normalize(&pring, raw)
    };
    let gens: Vec<Polynomial<F>> = i.gens.iter().map(to_perm).collect();
    let gb = buchberger(&gens, MonomialOrder::Grevlex)?;
    let out = gb
        .elements()
        .iter()
        .map(|g| {
            let k = g.terms().iter().map(|(_, m)| m.exponent(n - 1)).min().unwrap_or(0);
            let raw = g
                .terms()
                .iter()
                .map(|(c, m)| {
                    let mut e = vec![0u32; n];
                    for (pos, &orig) in perm.iter().enumerate() {
                        e[orig] = m.exponent(pos);
                    }
                    e[v] -= k;
                    (c.clone(), Monomial::from_exponents(&e))
                })
                .collect();
            Polynomial::normalize(ring, raw)
        })
        .collect();
    Ok(Ideal::new(ring, out))
}

fn saturate_by_colon<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    let mut cur = i.clone();
    loop {
        let next = colon(&cur, j)?;
        if ideal_equal(&next, &cur)? {
            return Ok(cur);
        }
        cur = next;
    }
}

/// `I : J^∞`, iterating colon until the reduced bases stop changing.
///
/// When `J` is generated by variables this becomes an intersection of
/// single-variable saturations.
pub fn saturate<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    check_same_ring(&i.ring, &j.ring)?;
    let ring = &i.ring;
    if j.is_zero() {
        return Ok(i.clone());
    }
    if i.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if let (Some(a), Some(b)) = (i.as_monomial(), j.as_monomial()) {
        return Ok(Ideal::from_monomial(ring, &a.saturate(&b)));
    }
    if i.is_unit()? {
        return Ok(Ideal::unit(ring));
    }
    let vars: Option<Vec<usize>> = j.gens.iter().map(as_variable).collect();
    match vars {
        Some(vars) if i.is_homogeneous() => {
            let mut acc: Option<Ideal<F>> = None;
            for v in vars {
                let s = saturate_variable_homogeneous(i, v)?;
                acc = Some(match acc {
                    None => s,
                    Some(a) => intersect(&a, &s)?,
                });
            }
            acc.unwrap().reduced()
        }
        _ => saturate_by_colon(i, j),
    }
}

/// Saturation with respect to the irrelevant ideal.
pub fn saturate_irrelevant<F: Field>(i: &Ideal<F>) -> Result<Ideal<F>> {
    saturate(i, &Ideal::maximal(&i.ring))
}

pub fn is_saturated<F: Field>(i: &Ideal<F>) -> Result<bool> {
    ideal_equal(&saturate_irrelevant(i)?, i)
}

/// Krull dimension of `S/I` from the leading-term ideal; `None` for the unit ideal.
pub fn dimension<F: Field>(i: &Ideal<F>) -> Result<Option<usize>> {
    Ok(i.leading_ideal()?.dimension())
}

pub fn codimension<F: Field>(i: &Ideal<F>) -> Result<Option<usize>> {
    Ok(i.leading_ideal()?.codimension())
}

/// Dimension of the projective scheme; `None` when it is empty.
pub fn projective_dimension<F: Field>(i: &Ideal<F>) -> Result<Option<usize>> {
    Ok(dimension(i)?.and_then(|d| d.checked_sub(1)))
}

/// Hilbert series of `S/I` through the leading-term ideal.
pub fn hilbert_series<F: Field>(i: &Ideal<F>) -> Result<HilbertSeries> {
    if !i.is_homogeneous() {
        return Err(Error::Inhomogeneous { op: "hilbert_series" });
    }
    let lt = i.leading_ideal()?;
    Ok(HilbertSeries::from_numerator(lt.hilbert_numerator(), i.ring.nvars()))
}

pub fn degree<F: Field>(i: &Ideal<F>) -> Result<Degree> {
    let hs = hilbert_series(i)?;
    if hs.is_zero() || hs.dimension() == 0 {
        return Ok(Degree { value: 0, empty: true });
    }
    Ok(Degree {
        value: hs.multiplicity() as u64,
        empty: false,
    })
}

/// Minimal homogeneous generators, chosen greedily by degree among the given ones.
pub fn minimal_generators<F: Field>(i: &Ideal<F>) -> Result<Vec<Polynomial<F>>> {
    if !i.is_homogeneous() {
        return Err(Error::Inhomogeneous { op: "minimal_generators" });
    }
    let order = ModuleOrder::ring(i.ring.order());
    let vecs: Vec<Vector<F>> = i.gens.iter().map(|g| Vector::from_poly(g, 0)).collect();
    let kept = groebner::minimal_generators(i.ring.field(), &order, &vecs)?;
    Ok(kept
        .into_iter()
        .map(|v| {
            let mut col = v.to_column(&i.ring, 0, 1);
            col.pop().unwrap()
        })
        .collect())
}

/// Minimal generator degrees, sorted descending.
pub fn minimal_degrees<F: Field>(i: &Ideal<F>) -> Result<Vec<u64>> {
    let mut d: Vec<u64> = minimal_generators(i)?
        .iter()
        .map(|g| g.degree().unwrap_or(0))
        .collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    Ok(d)
}

/// Whether the saturated homogeneous ideal `I` needs only codim-many generators.
pub fn is_complete_intersection<F: Field>(i: &Ideal<F>) -> Result<bool> {
    if !i.is_homogeneous() {
        return Err(Error::Inhomogeneous { op: "is_complete_intersection" });
    }
    if i.is_unit()? {
        return Err(Error::UnitIdeal { op: "is_complete_intersection" });
    }
    if !is_saturated(i)? {
        return Err(Error::NotSaturated { op: "is_complete_intersection" });
    }
    let c = codimension(i)?.expect("proper");
    Ok(minimal_generators(i)?.len() == c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::parse::parse_ring_file;

    fn ideals<F: Field>(text: &str, field: F) -> Vec<Ideal<F>> {
        let f = parse_ring_file(text).unwrap().build(field).unwrap();
        f.ideals
            .iter()
            .map(|(_, g)| Ideal::new(&f.ring, g.clone()))
            .collect()
    }

    fn q(text: &str) -> Vec<Ideal<Rationals>> {
        ideals(text, Rationals)
    }

    fn shown<F: Field>(i: &Ideal<F>) -> Vec<String> {
        i.groebner().unwrap().elements().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn intersections() {
        let v = q("ring R over QQ vars x y z w\nideal A = x\nideal B = y\nideal C = x, y\nideal D = z, w\nideal E = x + y, z - w^2");
        assert_eq!(shown(&intersect(&v[0], &v[1]).unwrap()), vec!["x*y"]);
        let cd = intersect(&v[2], &v[3]).unwrap();
        assert_eq!(cd.as_monomial().unwrap().gens().len(), 4);
        assert!(ideal_equal(&intersect(&v[4], &v[4]).unwrap(), &v[4]).unwrap());
        // nonmonomial path agrees with the membership characterization
        let k = intersect(&v[4], &v[2]).unwrap();
        assert!(v[4].contains_ideal(&k).unwrap() && v[2].contains_ideal(&k).unwrap());
    }

    #[test]
    fn colons() {
        let v = q("ring R over QQ vars x y\nideal A = x*y\nideal B = x\nideal C = x^2\nideal D = x*y + y^2\nideal E = x + y");
        assert_eq!(shown(&colon(&v[0], &v[1]).unwrap()), vec!["y"]);
        assert_eq!(shown(&colon(&v[2], &v[1]).unwrap()), vec!["x"]);
        assert_eq!(shown(&colon(&v[3], &v[4]).unwrap()), vec!["y"]);
        assert!(matches!(colon(&v[0], &Ideal::zero(v[0].ring())), Err(Error::ZeroIdeal { .. })));
    }

    #[test]
    fn saturations() {
        let v = q("ring R over QQ vars x y\nideal A = x^2*y\nideal B = x\nideal C = x^2, x*y\nideal M = x, y");
        assert_eq!(shown(&saturate(&v[0], &v[1]).unwrap()), vec!["y"]);
        assert_eq!(shown(&saturate(&v[2], &v[3]).unwrap()), vec!["x"]);
        let tc = q("ring R over QQ vars x0 x1 x2 x3\nideal I = x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2");
        assert!(is_saturated(&tc[0]).unwrap());
        // nonmonomial, non-saturated: twisted cubic times the maximal ideal
        let m = Ideal::maximal(tc[0].ring());
        let prod = tc[0].mul(&m).unwrap();
        assert!(!is_saturated(&prod).unwrap());
        assert!(ideal_equal(&saturate_irrelevant(&prod).unwrap(), &tc[0]).unwrap());
        // the colon-iteration path agrees
        assert!(ideal_equal(&saturate_by_colon(&prod, &m).unwrap(), &tc[0]).unwrap());
    }

    #[test]
    fn dimensions_and_degrees() {
        let v = q("ring R over QQ vars x y\nideal A = x*y");
        assert_eq!(dimension(&v[0]).unwrap(), Some(1));
        assert_eq!(codimension(&v[0]).unwrap(), Some(1));
        let tc = q("ring R over QQ vars x0 x1 x2 x3\nideal I = x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2\nideal H = x0\nideal U = 1, x0\nideal CI = x0^2 + x1*x2, x3^2 - x0*x1");
        assert_eq!(codimension(&tc[0]).unwrap(), Some(2));
        assert_eq!(degree(&tc[0]).unwrap(), Degree { value: 3, empty: false });
        assert_eq!(degree(&tc[1]).unwrap().value, 1);
        assert_eq!(dimension(&tc[2]).unwrap(), None);
        assert!(degree(&tc[2]).unwrap().empty);
        assert_eq!(degree(&tc[3]).unwrap().value, 4);
        let m = q("ring R over QQ vars x y z\nideal M = x, y, z");
        assert_eq!(dimension(&m[0]).unwrap(), Some(0));
        assert_eq!(codimension(&m[0]).unwrap(), Some(3));
        assert!(degree(&m[0]).unwrap().empty);
    }

    #[test]
    fn hilbert_examples() {
        let v = q("ring R over QQ vars x y\nideal A = x^2, x*y");
        assert_eq!(hilbert_series(&v[0]).unwrap().numerator(), &[1, 0, -2, 1]);
        assert_eq!(hilbert_series(&Ideal::zero(v[0].ring())).unwrap().numerator(), &[1]);
        let lines = q("ring R over QQ vars x0 x1 x2 x3 x4\nideal I = x1*x2, x1*x3, x1*x4, x2*x3, x2*x4, x3*x4");
        let hs = hilbert_series(&lines[0]).unwrap();
        assert_eq!(hs.expansion(1, 6), vec![5, 9, 13, 17, 21, 25]);
        let bad = q("ring R over QQ vars x y\nideal A = x^2 - y");
        assert!(matches!(hilbert_series(&bad[0]), Err(Error::Inhomogeneous { .. })));
    }

    #[test]
    fn complete_intersections() {
        let v = q("ring R over QQ vars x0 x1 x2 x3\nideal CI = x0^2 + x1*x2, x3^2 - x0*x1\nideal TC = x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2\nideal H = x0\nideal R = x0^2, x0*x1, x1^2, x0*x2, x0*x3, x1*x2, x1*x3, x2^4");
        assert!(is_complete_intersection(&v[0]).unwrap());
        assert!(!is_complete_intersection(&v[1]).unwrap());
        assert!(is_complete_intersection(&v[2]).unwrap());
        assert!(matches!(is_complete_intersection(&v[3]), Err(Error::NotSaturated { .. })));
    }

    #[test]
    fn equality() {
        let v = q("ring R over QQ vars x y\nideal A = x, y\nideal B = y, x + y\nideal C = x\nideal D = x^2");
        assert!(ideal_equal(&v[0], &v[1]).unwrap());
        assert!(!ideal_equal(&v[2], &v[3]).unwrap());
    }

    #[test]
    fn minimal_generator_selection() {
        let v = ideals(
            "ring R over Fp(32003) vars x y z\nideal A = x^2, x*y, x^2 + x*y, x^3 + y^3, y^3",
            PrimeField::default(),
        );
        let g = minimal_generators(&v[0]).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(minimal_degrees(&v[0]).unwrap(), vec![3, 2, 2]);
    }

    #[test]
    fn elimination_entry_point() {
        let v = q("ring R over QQ vars t x y\nideal I = t*x, y - t*y");
        let e = eliminate(&v[0], 1).unwrap();
        assert_eq!(shown(&e), vec!["x*y"]);
        assert!(matches!(eliminate(&v[0], 3), Err(Error::EliminationRange { .. })));
    }
}
