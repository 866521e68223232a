//! Buchberger's algorithm over free modules, with ideals as the rank-one case.
//!
//! Pairs are selected by sugar degree and pruned with the Gebauer–Möller
//! criteria (product and chain). Every pair reduction is charged against a
//! per-thread budget so that runaway computations abort with
//! [`Error::BudgetExceeded`] instead of hanging.

use std::cell::Cell;
use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring};

/// Default number of pair reductions a single Buchberger run may perform.
pub const DEFAULT_PAIR_BUDGET: u64 = 200_000;

thread_local! {
    static PAIR_BUDGET: Cell<u64> = const { Cell::new(DEFAULT_PAIR_BUDGET) };
}

/// Run `f` with a different pair budget on this thread.
pub fn with_pair_budget<R>(budget: u64, f: impl FnOnce() -> R) -> R {
    let old = PAIR_BUDGET.with(|b| b.replace(budget));
    struct Restore(u64);
    impl Drop for Restore {
        fn drop(&mut self) {
            PAIR_BUDGET.with(|b| b.set(self.0));
        }
    }
    let _restore = Restore(old);
    f()
}

pub fn pair_budget() -> u64 {
    PAIR_BUDGET.with(|b| b.get())
}

/// Term order on `(monomial, component)` pairs.
///
/// Components below `split` dominate all others. Within a block, a weighted
/// order compares `deg(m) + shift[c]` first (term-over-position with degree
/// shifts), then the monomial order, then prefers the smaller component.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleOrder {
    pub mono: MonomialOrder,
    pub shifts: Vec<i64>,
    pub split: usize,
    pub weighted: bool,
}

impl ModuleOrder {
    /// The ring order itself, for rank-one computations.
    pub fn ring(order: MonomialOrder) -> Self {
        ModuleOrder {
            mono: order,
            shifts: vec![0],
            split: 0,
            weighted: false,
        }
    }

    /// Degree-compatible order for graded free modules with generator degrees `shifts`.
    pub fn graded(shifts: Vec<i64>) -> Self {
        ModuleOrder {
            mono: MonomialOrder::Grevlex,
            shifts,
            split: 0,
            weighted: true,
        }
    }

    /// Graded order in which the first `split` components are eliminated.
    pub fn graded_elimination(shifts: Vec<i64>, split: usize) -> Self {
        ModuleOrder {
            mono: MonomialOrder::Grevlex,
            shifts,
            split,
            weighted: true,
        }
    }

    pub fn degree(&self, m: &Monomial, comp: usize) -> i64 {
        m.degree() as i64 + self.shifts.get(comp).copied().unwrap_or(0)
    }

    #[inline]
    pub fn cmp(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        let ba = a.1 >= self.split;
        let bb = b.1 >= self.split;
        if ba != bb {
            return if ba { Ordering::Less } else { Ordering::Greater };
        }
        if self.weighted {
            let o = self.degree(a.0, a.1).cmp(&self.degree(b.0, b.1));
            if o != Ordering::Equal {
                return o;
            }
        }
        self.mono.cmp(a.0, b.0).then_with(|| b.1.cmp(&a.1))
    }
}

/// An element of a free module `S^r`, terms sorted descending in a [`ModuleOrder`].
#[derive(Clone, Debug, PartialEq)]
pub struct Vector<F: Field> {
    pub(crate) terms: Vec<(F::Elem, Monomial, usize)>,
}

impl<F: Field> Vector<F> {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(F::Elem, Monomial, usize)] {
        &self.terms
    }

    pub fn normalize(field: &F, order: &ModuleOrder, mut raw: Vec<(F::Elem, Monomial, usize)>) -> Self {
        raw.sort_by(|a, b| order.cmp((&b.1, b.2), (&a.1, a.2)));
        let mut terms: Vec<(F::Elem, Monomial, usize)> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.1 == t.1 && last.2 == t.2 => last.0 = field.add(&last.0, &t.0),
                _ => {
                    if terms.last().is_some_and(|l| field.is_zero(&l.0)) {
                        terms.pop();
                    }
                    terms.push(t);
                }
            }
        }
        if terms.last().is_some_and(|l| field.is_zero(&l.0)) {
            terms.pop();
        }
        Vector { terms }
    }

    pub fn from_poly(p: &Polynomial<F>, comp: usize) -> Self {
        Vector {
            terms: p
                .terms()
                .iter()
                .map(|(c, m)| (c.clone(), m.clone(), comp))
                .collect(),
        }
    }

    /// Build from a dense column of polynomials placed at components `offset..`.
    pub fn from_column(field: &F, order: &ModuleOrder, col: &[Polynomial<F>], offset: usize) -> Self {
        let raw = col
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.terms().iter().map(move |(c, m)| (c.clone(), m.clone(), i + offset)))
            .collect();
        Self::normalize(field, order, raw)
    }

    /// Dense column of length `rank`, keeping components `offset..offset+rank`.
    pub fn to_column(&self, ring: &Arc<Ring<F>>, offset: usize, rank: usize) -> Vec<Polynomial<F>> {
        let mut raw: Vec<Vec<(F::Elem, Monomial)>> = vec![Vec::new(); rank];
        for (c, m, k) in &self.terms {
            if *k >= offset && *k < offset + rank {
                raw[*k - offset].push((c.clone(), m.clone()));
            }
        }
        raw.into_iter().map(|r| Polynomial::normalize(ring, r)).collect()
    }

    pub fn lead(&self) -> Option<(&Monomial, usize)> {
        self.terms.first().map(|t| (&t.1, t.2))
    }

    /// Homogeneous degree of the leading term under `order`.
    pub fn degree(&self, order: &ModuleOrder) -> Option<i64> {
        self.terms.first().map(|t| order.degree(&t.1, t.2))
    }

    pub fn is_homogeneous(&self, order: &ModuleOrder) -> bool {
        let mut d = self.terms.iter().map(|t| order.degree(&t.1, t.2));
        match d.next() {
            None => true,
            Some(first) => d.all(|x| x == first),
        }
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> Self {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|(a, m, k)| (field.mul(a, c), m.clone(), *k))
                .collect(),
        }
    }

    pub fn monic(&self, field: &F) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some(t) => self.scale(field, &field.inv(&t.0).expect("nonzero")),
        }
    }

    pub fn add(&self, field: &F, order: &ModuleOrder, other: &Self) -> Self {
        let minus_one = field.neg(&field.one());
        let one = Monomial::one(self.nvars_hint(other));
        self.sub_mul_term(field, order, &minus_one, &one, other)
    }

    fn nvars_hint(&self, other: &Self) -> usize {
        self.terms
            .first()
            .or(other.terms.first())
            .map(|t| t.1.nvars())
            .unwrap_or(0)
    }

    /// `self - c*m*g`.
    pub fn sub_mul_term(&self, field: &F, order: &ModuleOrder, c: &F::Elem, m: &Monomial, g: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let negc = field.neg(c);
        let mut a = self.terms.iter().peekable();
        let mut b = g
            .terms
            .iter()
            .map(|(gc, gm, k)| (field.mul(gc, &negc), gm.mul(m), *k))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match order.cmp((&x.1, x.2), (&y.1, y.2)) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let x = a.next().unwrap();
                        let y = b.next().unwrap();
                        let s = field.add(&x.0, &y.0);
                        if !field.is_zero(&s) {
                            out.push((s, y.1, y.2));
                        }
                    }
                },
            }
        }
        Vector { terms: out }
    }

    pub fn mul_poly(&self, field: &F, order: &ModuleOrder, p: &Polynomial<F>) -> Self {
        let raw = self
            .terms
            .iter()
            .flat_map(|(a, m, k)| p.terms().iter().map(move |(b, n)| (field.mul(a, b), m.mul(n), *k)))
            .collect();
        Self::normalize(field, order, raw)
    }
}

#[derive(Clone, Debug)]
struct Lead {
    mono: Monomial,
    comp: usize,
    mask: u64,
}

impl Lead {
    fn divides(&self, m: &Monomial, comp: usize, mask: u64) -> bool {
        self.comp == comp && self.mask & !mask == 0 && self.mono.divides(m)
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: i64,
    deg: i64,
}

/// Incremental Buchberger state: elements can be added between completion runs,
/// and completion can be truncated at a degree for homogeneous input.
pub(crate) struct GbBuilder<'a, F: Field> {
    field: &'a F,
    order: &'a ModuleOrder,
    basis: Vec<Vector<F>>,
    leads: Vec<Lead>,
    sugar: Vec<i64>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    budget: u64,
    spent: u64,
}

impl<'a, F: Field> GbBuilder<'a, F> {
    pub fn new(field: &'a F, order: &'a ModuleOrder) -> Self {
        GbBuilder {
            field,
            order,
            basis: Vec::new(),
            leads: Vec::new(),
            sugar: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            budget: pair_budget(),
            spent: 0,
        }
    }

    fn sugar_of(&self, v: &Vector<F>) -> i64 {
        v.terms
            .iter()
            .map(|t| self.order.degree(&t.1, t.2))
            .max()
            .unwrap_or(0)
    }

    fn find_reducer(&self, m: &Monomial, comp: usize) -> Option<usize> {
        let mask = m.support_mask();
        (0..self.basis.len()).find(|&k| self.active[k] && self.leads[k].divides(m, comp, mask))
    }

    /// Reduce until the leading term is irreducible; returns the sugar too.
    fn reduce_top_with_sugar(&self, mut v: Vector<F>, mut sugar: i64) -> (Vector<F>, i64) {
        while let Some(t) = v.terms.first() {
            let Some(k) = self.find_reducer(&t.1, t.2) else {
                break;
            };
            let q = t.1.div(&self.leads[k].mono).expect("divisible");
            let c = t.0.clone();
            sugar = sugar.max(self.sugar[k] + q.degree() as i64);
            v = v.sub_mul_term(self.field, self.order, &c, &q, &self.basis[k]);
        }
        (v, sugar)
    }

    pub fn reduce_top(&self, v: Vector<F>) -> Vector<F> {
        self.reduce_top_with_sugar(v, 0).0
    }

    /// Fully reduced normal form.
    pub fn reduce_full(&self, v: Vector<F>) -> Vector<F> {
        let mut rest = v;
        let mut done: Vec<(F::Elem, Monomial, usize)> = Vec::new();
        while !rest.terms.is_empty() {
            rest = self.reduce_top(rest);
            if rest.terms.is_empty() {
                break;
            }
            let t = rest.terms.remove(0);
            done.push(t);
        }
        Vector { terms: done }
    }

    /// Insert a nonzero element whose leading term is irreducible; updates pairs.
    fn insert(&mut self, h: Vector<F>, sugar: i64) {
        let h = h.monic(self.field);
        let (hm, hc) = {
            let (m, c) = h.lead().expect("nonzero");
            (m.clone(), c)
        };
        let hmask = hm.support_mask();
        let hidx = self.basis.len();

        // Gebauer–Möller: new pairs with h
        let mut cands: Vec<(usize, Monomial, bool)> = Vec::new();
        for k in 0..self.basis.len() {
            if !self.active[k] || self.leads[k].comp != hc {
                continue;
            }
            let lcm = self.leads[k].mono.lcm(&hm);
            // the product criterion needs commuting elements, i.e. rank one
            let coprime = self.order.shifts.len() <= 1 && self.leads[k].mono.is_coprime(&hm);
            cands.push((k, lcm, coprime));
        }
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for idx in 0..cands.len() {
            let (_, ref lcm, coprime) = cands[idx];
            let dominated = cands[idx + 1..]
                .iter()
                .chain(kept.iter())
                .any(|(_, l2, _)| l2.divides(lcm));
            if coprime || !dominated {
                kept.push(cands[idx].clone());
            }
        }
        // drop the new pairs satisfying the product criterion
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(_, _, coprime)| !coprime)
            .map(|(k, lcm, _)| {
                let sk = self.sugar[k] + (lcm.degree() - self.leads[k].mono.degree()) as i64;
                let sh = sugar + (lcm.degree() - hm.degree()) as i64;
                Pair {
                    i: k,
                    j: hidx,
                    deg: self.order.degree(&lcm, hc),
                    sugar: sk.max(sh),
                    lcm,
                }
            })
            .collect();
        // chain criterion on old pairs
        let leads = &self.leads;
        self.pairs.retain(|p| {
            if leads[p.i].comp != hc || !hm.divides(&p.lcm) {
                return true;
            }
            let li = leads[p.i].mono.lcm(&hm);
            let lj = leads[p.j].mono.lcm(&hm);
            li == p.lcm || lj == p.lcm
        });
        self.pairs.extend(new_pairs);
        for k in 0..self.basis.len() {
            if self.active[k] && self.leads[k].comp == hc && hm.divides(&self.leads[k].mono) {
                self.active[k] = false;
            }
        }
        self.basis.push(h);
        self.leads.push(Lead {
            mono: hm,
            comp: hc,
            mask: hmask,
        });
        self.sugar.push(sugar);
        self.active.push(true);
    }

    /// Reduce `v` and add it if its normal form is nonzero; returns whether it was added.
    pub fn add(&mut self, v: Vector<F>) -> bool {
        let s = self.sugar_of(&v);
        let (r, s) = self.reduce_top_with_sugar(v, s);
        if r.is_zero() {
            return false;
        }
        self.insert(r, s);
        true
    }

    fn spoly(&self, p: &Pair) -> Vector<F> {
        let qa = p.lcm.div(&self.leads[p.i].mono).expect("lcm");
        let qb = p.lcm.div(&self.leads[p.j].mono).expect("lcm");
        // both elements are monic
        let ma = Vector {
            terms: self.basis[p.i]
                .terms
                .iter()
                .map(|(c, m, k)| (c.clone(), m.mul(&qa), *k))
                .collect(),
        };
        ma.sub_mul_term(self.field, self.order, &self.field.one(), &qb, &self.basis[p.j])
    }

    /// Process pairs (lowest sugar first) whose degree is at most `bound`.
    pub fn complete(&mut self, bound: Option<i64>) -> Result<()> {
        loop {
            let best = self
                .pairs
                .iter()
                .enumerate()
                .filter(|(_, p)| bound.is_none_or(|b| p.deg <= b))
                .min_by(|(_, x), (_, y)| {
                    (x.sugar, x.deg, x.i, x.j).cmp(&(y.sugar, y.deg, y.i, y.j))
                })
                .map(|(k, _)| k);
            let Some(k) = best else {
                return Ok(());
            };
            let p = self.pairs.swap_remove(k);
            self.spent += 1;
            if self.spent > self.budget {
                return Err(Error::BudgetExceeded {
                    budget: self.budget,
                });
            }
            let s = self.spoly(&p);
            let (r, sugar) = self.reduce_top_with_sugar(s, p.sugar);
            if !r.is_zero() {
                self.insert(r, sugar);
            }
        }
    }

    /// The reduced Gröbner basis, sorted ascending by leading term.
    pub fn reduced(&self) -> Vec<Vector<F>> {
        let mut out = Vec::new();
        for k in 0..self.basis.len() {
            if !self.active[k] {
                continue;
            }
            let v = &self.basis[k];
            let tail = Vector {
                terms: v.terms[1..].to_vec(),
            };
            let mut red = self.reduce_full(tail);
            red.terms.insert(0, v.terms[0].clone());
            out.push(red.monic(self.field));
        }
        out.sort_by(|a, b| {
            let (am, ac) = a.lead().unwrap();
            let (bm, bc) = b.lead().unwrap();
            self.order.cmp((am, ac), (bm, bc))
        });
        out
    }
}

/// Reduced Gröbner basis of a submodule generated by `gens`.
pub fn module_groebner<F: Field>(field: &F, order: &ModuleOrder, gens: &[Vector<F>]) -> Result<Vec<Vector<F>>> {
    let mut b = GbBuilder::new(field, order);
    let mut sorted: Vec<&Vector<F>> = gens.iter().filter(|g| !g.is_zero()).collect();
    sorted.sort_by_key(|g| g.degree(order).unwrap_or(0));
    for g in sorted {
        b.add(g.clone());
        b.complete(None)?;
    }
    b.complete(None)?;
    Ok(b.reduced())
}

/// Minimal homogeneous generators of the submodule spanned by `gens`
/// (greedy by degree, using a truncated basis for membership).
pub fn minimal_generators<F: Field>(field: &F, order: &ModuleOrder, gens: &[Vector<F>]) -> Result<Vec<Vector<F>>> {
    let mut sorted: Vec<&Vector<F>> = gens.iter().filter(|g| !g.is_zero()).collect();
    sorted.sort_by(|a, b| {
        let (am, ac) = a.lead().unwrap();
        let (bm, bc) = b.lead().unwrap();
        a.degree(order)
            .cmp(&b.degree(order))
            .then_with(|| order.cmp((am, ac), (bm, bc)))
    });
    let mut builder = GbBuilder::new(field, order);
    let mut kept = Vec::new();
    for g in sorted {
        let d = g.degree(order).unwrap();
        builder.complete(Some(d))?;
        let r = builder.reduce_top(g.clone());
        if !r.is_zero() {
            kept.push(g.clone());
            builder.add(r);
        }
    }
    Ok(kept)
}

/// A Gröbner basis of a polynomial ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis<F: Field> {
    ring: Arc<Ring<F>>,
    elements: Vec<Polynomial<F>>,
    reduced: bool,
}

impl<F: Field> GroebnerBasis<F> {
    /// Basis of the zero ideal.
    pub fn empty(ring: &Arc<Ring<F>>) -> Self {
        GroebnerBasis {
            ring: ring.clone(),
            elements: Vec::new(),
            reduced: true,
        }
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().expect("nonzero").clone())
            .collect()
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }
}

/// Remainder of `f` on division by `basis`: no term is divisible by a leading term.
pub fn normal_form<F: Field>(f: &Polynomial<F>, basis: &GroebnerBasis<F>) -> Result<Polynomial<F>> {
    if f.ring().order() != basis.order() {
        return Err(Error::OrderMismatch {
            expected: basis.order().name(),
            found: f.ring().order().name(),
        });
    }
    if f.ring().vars() != basis.ring.vars() || f.field() != basis.ring.field() {
        return Err(Error::RingMismatch);
    }
    let field = basis.ring.field();
    let leads: Vec<(Monomial, u64)> = basis
        .elements
        .iter()
        .map(|g| {
            let m = g.leading_monomial().expect("nonzero").clone();
            let mask = m.support_mask();
            (m, mask)
        })
        .collect();
    let mut rest = f.to_ring(&basis.ring);
    let mut done = Vec::new();
    while let Some((c, m)) = rest.terms().first().cloned() {
        let mask = m.support_mask();
        let hit = leads
            .iter()
            .position(|(l, lm)| lm & !mask == 0 && l.divides(&m));
        match hit {
            Some(k) => {
                let g = &basis.elements[k];
                let q = m.div(&leads[k].0).expect("divisible");
                let coef = field.div(&c, g.leading_coeff().unwrap()).expect("nonzero");
                rest = rest.sub_mul_term(&coef, &q, g);
            }
            None => {
                let mut terms = rest.into_terms();
                let t = terms.remove(0);
                done.push(t);
                rest = Polynomial::from_sorted(&basis.ring, terms);
            }
        }
    }
    Ok(Polynomial::from_sorted(&basis.ring, done).to_ring(f.ring()))
}

/// Reduced Gröbner basis of `gens` under `order`.
///
/// The result lives in a copy of the generators' ring carrying `order`.
pub fn buchberger<F: Field>(gens: &[Polynomial<F>], order: MonomialOrder) -> Result<GroebnerBasis<F>> {
    let first = gens
        .first()
        .ok_or(Error::InvalidArgument("buchberger needs at least one generator".into()))?;
    let ring = if first.ring().order() == order {
        first.ring().clone()
    } else {
        first.ring().with_order(order)
    };
    let field = ring.field().clone();
    let morder = ModuleOrder::ring(order);
    let vecs: Vec<Vector<F>> = gens
        .iter()
        .map(|g| {
            if !Ring::same(g.ring(), first.ring()) {
                return Err(Error::RingMismatch);
            }
            Ok(Vector::from_poly(&g.to_ring(&ring), 0))
        })
        .collect::<Result<_>>()?;
    let red = module_groebner(&field, &morder, &vecs)?;
    let elements = red
        .into_iter()
        .map(|v| {
            Polynomial::from_sorted(
                &ring,
                v.terms.into_iter().map(|(c, m, _)| (c, m)).collect(),
            )
        })
        .collect();
    Ok(GroebnerBasis {
        ring,
        elements,
        reduced: true,
    })
}

/// Basis elements free of the first `k` variables, from a block-elimination basis.
///
/// Returns the ring of the trailing variables and the eliminated generators,
/// which form a Gröbner basis there under grevlex.
pub fn eliminate_leading<F: Field>(gens: &[Polynomial<F>], k: usize) -> Result<(Arc<Ring<F>>, Vec<Polynomial<F>>)> {
    let first = gens
        .first()
        .ok_or(Error::InvalidArgument("elimination needs at least one generator".into()))?;
    let n = first.ring().nvars();
    if k == 0 || k >= n {
        return Err(Error::EliminationRange { k, nvars: n });
    }
    let gb = buchberger(gens, MonomialOrder::Elimination(k))?;
    let src = first.ring();
    let sub = Ring::new(src.field().clone(), src.vars()[k..].to_vec(), MonomialOrder::Grevlex);
    let out = gb
        .elements()
        .iter()
        .filter_map(|g| g.restrict_front(&sub))
        .collect();
    Ok((sub, out))
}
