//! Monomial ideals: minimal generators, Hilbert numerators, dimension and
//! the combinatorial versions of intersection, colon and saturation.

use std::fmt;

use crate::monomial::Monomial;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.gens.iter()).finish()
    }
}

/// Keep only divisibility-minimal monomials, sorted for a canonical form.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.exponents().cmp(a.exponents())));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.iter().all(|g| g.nvars() == nvars));
        MonomialIdeal {
            nvars,
            gens: minimalize(gens),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(nvars: usize) -> Self {
        Self::new(nvars, (0..nvars).map(|i| Monomial::var(nvars, i)).collect())
    }

    pub fn from_exponents(nvars: usize, exps: &[&[u32]]) -> Self {
        Self::new(nvars, exps.iter().map(|e| Monomial::from_exponents(e)).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Minimal generators.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn max_degree(&self) -> u64 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Self::new(self.nvars, g)
    }

    pub fn mul(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.mul(b));
            }
        }
        Self::new(self.nvars, g)
    }

    pub fn pow(&self, k: u32) -> MonomialIdeal {
        let mut acc = Self::unit(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.lcm(b));
            }
        }
        Self::new(self.nvars, g)
    }

    pub fn colon_monomial(&self, m: &Monomial) -> MonomialIdeal {
        let g = self
            .gens
            .iter()
            .map(|g| g.lcm(m).div(m).expect("lcm is a multiple"))
            .collect();
        Self::new(self.nvars, g)
    }

    pub fn colon(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut it = other.gens.iter();
        let Some(first) = it.next() else {
            return Self::unit(self.nvars);
        };
        let mut acc = self.colon_monomial(first);
        for m in it {
            acc = acc.intersect(&self.colon_monomial(m));
        }
        acc
    }

    pub fn saturate(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut cur = self.clone();
        loop {
            let next = cur.colon(other);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Saturation with respect to the variables themselves.
    pub fn saturate_maximal(&self) -> MonomialIdeal {
        self.saturate(&Self::maximal(self.nvars))
    }

    /// Minimal sets of variables meeting every generator (the minimal primes
    /// of the radical, for squarefree ideals).
    pub fn minimal_transversals(&self) -> Vec<Vec<usize>> {
        if self.is_unit() {
            return Vec::new();
        }
        let supports: Vec<u64> = self.gens.iter().map(|g| support_bits(g)).collect();
        let mut found: Vec<u64> = Vec::new();
        transversals(&supports, 0, &mut found);
        let mut minimal: Vec<u64> = found
            .iter()
            .copied()
            .filter(|&t| !found.iter().any(|&s| s != t && s & t == s))
            .collect();
        minimal.sort_unstable();
        minimal.dedup();
        minimal.sort_by_key(|t| (t.count_ones(), *t));
        minimal
            .into_iter()
            .map(|t| (0..self.nvars).filter(|i| t >> i & 1 == 1).collect())
            .collect()
    }

    /// Codimension: the fewest variables meeting every generator. `None` for the unit ideal.
    pub fn codimension(&self) -> Option<usize> {
        if self.is_unit() {
            return None;
        }
        let supports: Vec<u64> = self.gens.iter().map(|g| support_bits(g)).collect();
        Some(min_transversal(&supports, 0, self.nvars))
    }

    /// Krull dimension of the quotient ring. `None` for the unit ideal.
    pub fn dimension(&self) -> Option<usize> {
        self.codimension().map(|c| self.nvars - c)
    }

    /// Whether all minimal primes have the same codimension.
    pub fn is_pure(&self) -> bool {
        let t = self.minimal_transversals();
        t.iter().all(|s| s.len() == t[0].len())
    }

    /// Numerator `N(t)` with `HS(S/I) = N(t) / (1-t)^n`, as coefficients from `t^0`.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        numerator(self.gens.clone(), self.nvars)
    }
}

fn support_bits(m: &Monomial) -> u64 {
    assert!(m.nvars() <= 64, "at most 64 variables");
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

fn transversals(supports: &[u64], chosen: u64, out: &mut Vec<u64>) {
    match supports.iter().find(|&&s| s & chosen == 0) {
        None => out.push(chosen),
        Some(&s) => {
            let mut bits = s;
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                bits &= bits - 1;
                transversals(supports, chosen | b, out);
            }
        }
    }
}

fn min_transversal(supports: &[u64], chosen: u64, best: usize) -> usize {
    let size = chosen.count_ones() as usize;
    if size >= best {
        return best;
    }
    // branch on the uncovered generator with the smallest support
    let pick = supports
        .iter()
        .filter(|&&s| s & chosen == 0)
        .min_by_key(|s| s.count_ones());
    match pick {
        None => size,
        Some(&s) => {
            let mut best = best;
            let mut bits = s;
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                bits &= bits - 1;
                best = best.min(min_transversal(supports, chosen | b, best));
            }
            best
        }
    }
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn add_shifted(acc: &mut Vec<i64>, p: &[i64], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, x) in p.iter().enumerate() {
        acc[i + shift] += x;
    }
}

fn numerator(gens: Vec<Monomial>, nvars: usize) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            let mut f = vec![0i64; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    // pivot on the variable shared by the most generators
    let var = (0..nvars)
        .max_by_key(|&i| (gens.iter().filter(|g| g.exponent(i) > 0).count(), std::cmp::Reverse(i)))
        .expect("some variable");
    let mut exps: Vec<u32> = gens.iter().map(|g| g.exponent(var)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let mut pe = vec![0u32; nvars];
    pe[var] = e;
    let p = Monomial::from_exponents(&pe);

    let mut plus = gens.clone();
    plus.push(p.clone());
    let quot: Vec<Monomial> = gens.iter().map(|g| g.lcm(&p).div(&p).unwrap()).collect();
    let mut acc = numerator(plus, nvars);
    add_shifted(&mut acc, &numerator(quot, nvars), e as usize);
    acc
}
