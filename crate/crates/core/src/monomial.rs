//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A monomial, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(
            self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// Bit `i` (mod 64) set when variable `i` occurs; a quick divisibility filter.
    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | (1 << (i % 64)))
    }

    /// Insert `count` zero exponents in front.
    pub fn prepend_vars(&self, count: usize) -> Monomial {
        let mut v: SmallVec<[u32; 8]> = SmallVec::from_elem(0, count);
        v.extend_from_slice(&self.0);
        Monomial(v)
    }

    /// Drop the first `count` exponents.
    pub fn drop_front(&self, count: usize) -> Monomial {
        Monomial(SmallVec::from_slice(&self.0[count..]))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// A monomial order on exponent vectors of a fixed length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Block order: grevlex on the first `k` variables, ties broken by
    /// grevlex on the rest.
    Elimination(usize),
}

impl MonomialOrder {
    /// Compare two monomials of equal length.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex(a.exponents(), b.exponents()),
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Elimination(k) => {
                let (a0, a1) = a.exponents().split_at(k);
                let (b0, b1) = b.exponents().split_at(k);
                grevlex(a0, b0).then_with(|| grevlex(a1, b1))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Elimination(k) => format!("elimination({k})"),
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().rev().zip(b.iter().rev()) {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Checked comparison for the public contract: lengths must agree.
pub fn compare_monomials(order: MonomialOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::LengthMismatch {
            left: a.nvars(),
            right: b.nvars(),
        });
    }
    if let MonomialOrder::Elimination(k) = order {
        if k > a.nvars() {
            return Err(Error::EliminationRange { k, nvars: a.nvars() });
        }
    }
    Ok(order.cmp(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_examples() {
        // same degree: x^2 vs xy, last differing exponent y: 0 < 1 so x^2 wins
        assert_eq!(
            compare_monomials(MonomialOrder::Grevlex, &m(&[2, 0]), &m(&[1, 1])).unwrap(),
            Ordering::Greater
        );
        // xz^0 y^2 vs x^2 z in (x,y,z): x y^2 = [1,2,0], x^2 z = [2,0,1]; z exponent decides
        assert_eq!(
            MonomialOrder::Grevlex.cmp(&m(&[1, 2, 0]), &m(&[2, 0, 1])),
            Ordering::Greater
        );
        assert_eq!(
            MonomialOrder::Grevlex.cmp(&m(&[0, 0, 1]), &m(&[1, 1, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn lex_and_equal() {
        assert_eq!(
            compare_monomials(MonomialOrder::Lex, &m(&[1, 0]), &m(&[0, 100])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            compare_monomials(MonomialOrder::Grevlex, &m(&[3, 1]), &m(&[3, 1])).unwrap(),
            Ordering::Equal
        );
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(compare_monomials(MonomialOrder::Lex, &m(&[1]), &m(&[1, 0])).is_err());
    }

    #[test]
    fn elimination_order_eliminates() {
        let o = MonomialOrder::Elimination(1);
        // anything with t beats everything without t
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    fn mono(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, n).prop_map(|v| Monomial::from_exponents(&v))
    }

    fn order() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Grevlex),
            Just(MonomialOrder::Lex),
            (0usize..=4).prop_map(MonomialOrder::Elimination),
        ]
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative_and_refine_divisibility(
            o in order(), a in mono(4), b in mono(4), c in mono(4)
        ) {
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
            prop_assert_eq!(o.cmp(&b, &a), ab.reverse());
            if !c.is_one() {
                prop_assert_eq!(o.cmp(&a, &a.mul(&c)), Ordering::Less);
            }
            prop_assert_eq!(ab == Ordering::Equal, a == b);
        }

        #[test]
        fn grevlex_refines_degree(a in mono(5), b in mono(5)) {
            if a.degree() < b.degree() {
                prop_assert_eq!(MonomialOrder::Grevlex.cmp(&a, &b), Ordering::Less);
            }
        }

        #[test]
        fn orders_are_transitive(o in order(), a in mono(4), b in mono(4), c in mono(4)) {
            if o.cmp(&a, &b) != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
            }
        }
    }
}
