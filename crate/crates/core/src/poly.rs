//! Sparse distributed polynomials over a [`Field`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use rand::RngCore;

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::monomial::{Monomial, MonomialOrder};

/// Variables, coefficient field and term order of a polynomial ring.
#[derive(Clone, Debug, PartialEq)]
pub struct Ring<F: Field> {
    field: F,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl<F: Field> Ring<F> {
    pub fn new(field: F, vars: Vec<String>, order: MonomialOrder) -> Arc<Self> {
        Arc::new(Ring { field, vars, order })
    }

    pub fn with_vars(field: F, vars: &[&str]) -> Arc<Self> {
        Self::new(
            field,
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::Grevlex,
        )
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn spec(&self) -> FieldSpec {
        self.field.spec()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The same ring under another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Arc<Self> {
        Arc::new(Ring {
            field: self.field.clone(),
            vars: self.vars.clone(),
            order,
        })
    }

    /// Prepend fresh variables, ordered by an elimination order for them.
    pub fn extend_front(&self, names: &[&str]) -> Arc<Self> {
        let mut vars: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        vars.extend(self.vars.iter().cloned());
        Arc::new(Ring {
            field: self.field.clone(),
            vars,
            order: MonomialOrder::Elimination(names.len()),
        })
    }

    pub fn same(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

/// A polynomial: terms strictly descending in the ring's order, no zero coefficients.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<Ring<F>>,
    terms: Vec<(F::Elem, Monomial)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        Ring::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<Ring<F>>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring<F>>, c: F::Elem) -> Self {
        Self::term(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &Arc<Ring<F>>) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn var(ring: &Arc<Ring<F>>, i: usize) -> Self {
        Self::term(ring, ring.field.one(), Monomial::var(ring.nvars(), i))
    }

    pub fn term(ring: &Arc<Ring<F>>, c: F::Elem, m: Monomial) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial length does not match ring");
        let terms = if ring.field.is_zero(&c) {
            Vec::new()
        } else {
            vec![(c, m)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &Arc<Ring<F>>, exps: &[u32]) -> Self {
        Self::term(ring, ring.field.one(), Monomial::from_exponents(exps))
    }

    /// Build from an arbitrary term list: merge duplicates, drop zeros, sort.
    pub fn normalize(ring: &Arc<Ring<F>>, mut raw: Vec<(F::Elem, Monomial)>) -> Self {
        let order = ring.order;
        let field = &ring.field;
        raw.sort_by(|a, b| order.cmp(&b.1, &a.1));
        let mut terms: Vec<(F::Elem, Monomial)> = Vec::with_capacity(raw.len());
        for (c, m) in raw {
            assert_eq!(m.nvars(), ring.nvars(), "monomial length does not match ring");
            match terms.last_mut() {
                Some(last) if last.1 == m => last.0 = field.add(&last.0, &c),
                _ => {
                    if let Some(last) = terms.last() {
                        if field.is_zero(&last.0) {
                            terms.pop();
                        }
                    }
                    terms.push((c, m));
                }
            }
        }
        if let Some(last) = terms.last() {
            if field.is_zero(&last.0) {
                terms.pop();
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Build from terms already sorted and nonzero; checked in debug builds.
    pub(crate) fn from_sorted(ring: &Arc<Ring<F>>, terms: Vec<(F::Elem, Monomial)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order.cmp(&w[0].1, &w[1].1) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !ring.field.is_zero(&t.0)));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        &self.ring.field
    }

    pub fn terms(&self) -> &[(F::Elem, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(F::Elem, Monomial)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(_, m)| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.0)
    }

    /// Maximal total degree; `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(_, m)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = &self.ring.field;
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, m)| (field.mul(a, c), m.clone()))
                .collect(),
        }
    }

    pub fn mul_term(&self, c: &F::Elem, m: &Monomial) -> Self {
        let field = &self.ring.field;
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, n)| (field.mul(a, c), n.mul(m)))
                .collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.ring.field.inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self - c*m*g`, merging in one pass.
    pub(crate) fn sub_mul_term(&self, c: &F::Elem, m: &Monomial, g: &Self) -> Self {
        let field = &self.ring.field;
        let order = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(gc, gm)| (field.neg(&field.mul(gc, c)), gm.mul(m))).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match order.cmp(&x.1, &y.1) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let x = a.next().unwrap();
                        let y = b.next().unwrap();
                        let s = field.add(&x.0, &y.0);
                        if !field.is_zero(&s) {
                            out.push((s, y.1));
                        }
                    }
                },
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        assert!(Ring::same(&self.ring, &other.ring), "ring mismatch");
        let one = self.ring.field.one();
        let c = if negate { one } else { self.ring.field.neg(&one) };
        self.sub_mul_term(&c, &Monomial::one(self.ring.nvars()), other)
    }

    /// The same polynomial re-sorted into `ring`, which must have the same
    /// field and number of variables.
    pub fn to_ring(&self, ring: &Arc<Ring<F>>) -> Self {
        assert_eq!(ring.nvars(), self.ring.nvars());
        assert!(ring.field == self.ring.field);
        if Ring::same(ring, &self.ring) {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.order.cmp(&b.1, &a.1));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Image in `ring`, which has `ring.nvars() - self.nvars()` extra leading variables.
    pub fn embed_front(&self, ring: &Arc<Ring<F>>) -> Self {
        let extra = ring.nvars() - self.ring.nvars();
        let raw = self
            .terms
            .iter()
            .map(|(c, m)| (c.clone(), m.prepend_vars(extra)))
            .collect();
        Self::normalize(ring, raw)
    }

    /// Inverse of [`embed_front`]; `None` if a leading variable occurs.
    pub fn restrict_front(&self, ring: &Arc<Ring<F>>) -> Option<Self> {
        let extra = self.ring.nvars() - ring.nvars();
        let mut raw = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            if m.exponents()[..extra].iter().any(|&e| e > 0) {
                return None;
            }
            raw.push((c.clone(), m.drop_front(extra)));
        }
        Some(Self::normalize(ring, raw))
    }

    /// Reduce coefficients into another field (e.g. `QQ -> F_p`).
    /// `None` if a denominator vanishes there.
    pub fn map_field<G: Field>(&self, ring: &Arc<Ring<G>>) -> Option<Polynomial<G>> {
        let mut raw = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            let (num, den) = self.ring.field.to_ratio(c);
            raw.push((ring.field().from_ratio(&num, &den)?, m.clone()));
        }
        Some(Polynomial::normalize(ring, raw))
    }

    /// Exact quotient `self / g`; `None` if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Self) -> Option<Self> {
        let field = &self.ring.field;
        let (gc, gm) = g.terms.first()?;
        let ginv = field.inv(gc)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rc, rm)) = rem.terms.first() {
            let m = rm.div(gm)?;
            let c = field.mul(rc, &ginv);
            rem = rem.sub_mul_term(&c, &m, g);
            quot.push((c, m));
        }
        Some(Polynomial::from_sorted(&self.ring, quot))
    }

    /// Dense random form of degree `d` with coefficients drawn from `rng`.
    pub fn random_homogeneous<R: RngCore>(ring: &Arc<Ring<F>>, d: u64, rng: &mut R) -> Self {
        let raw = monomials_of_degree(ring.nvars(), d)
            .into_iter()
            .map(|m| (ring.field.random(rng), m))
            .collect();
        Self::normalize(ring, raw)
    }
}

/// All monomials of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u64) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut cur = vec![0u32; n];
    rec(0, d as u32, &mut cur, &mut out);
    out
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.merge(rhs, false)
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.merge(rhs, true)
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        self.scale(&self.ring.field.neg(&self.ring.field.one()))
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        assert!(Ring::same(&self.ring, &rhs.ring), "ring mismatch");
        let field = &self.ring.field;
        let mut raw = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (a, m) in &self.terms {
            for (b, n) in &rhs.terms {
                raw.push((field.mul(a, b), m.mul(n)));
            }
        }
        Polynomial::normalize(&self.ring, raw)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let (neg, abs) = self.ring.field.format(c);
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = format_monomial(&self.ring.vars, m);
            match (abs == "1", mono.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{mono}")?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}

pub(crate) fn format_monomial(vars: &[String], m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in vars.iter().zip(m.exponents()) {
        match e {
            0 => {}
            1 => parts.push(v.clone()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

/// Check that two polynomials share a ring.
pub(crate) fn check_same_ring<F: Field>(a: &Arc<Ring<F>>, b: &Arc<Ring<F>>) -> Result<()> {
    if Ring::same(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}
