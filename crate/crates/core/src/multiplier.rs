//! Multiplier ideals and log canonical thresholds of monomial ideals.
//!
//! `J(c·a)` is spanned by the monomials `x^v` with `v + 1` in the interior of
//! `c·Newt(a)`. Projective versions glue the affine charts `x_i = 1`.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::polyhedron::{newton_polyhedron, NewtonPolyhedron};

/// Upper bound on lattice points scanned by [`multiplier_ideal`].
pub const ENUMERATION_CAP: u128 = 4_000_000;

pub fn lct(a: &MonomialIdeal) -> Result<Rational64> {
    Ok(newton_polyhedron(a)?.lct())
}

/// Per-coordinate exponent bound for minimal generators of `J(c·P)`.
fn caps(p: &NewtonPolyhedron, c: Rational64) -> Vec<u32> {
    let (num, den) = (*c.numer() as i128, *c.denom() as i128);
    (0..p.dim())
        .map(|i| {
            p.facets()
                .iter()
                .filter(|f| f.normal[i] > 0)
                .map(|f| (num * f.rhs as i128).div_euclid(den * f.normal[i] as i128) as u32)
                .max()
                .unwrap_or(0)
        })
        .collect()
}

fn multiplier_of(p: &NewtonPolyhedron, c: Rational64) -> Result<MonomialIdeal> {
    let n = p.dim();
    let cap = caps(p, c);
    let points: u128 = cap.iter().map(|&k| k as u128 + 1).product();
    if points > ENUMERATION_CAP {
        return Err(Error::EnumerationCap { points, cap: ENUMERATION_CAP });
    }
    let mut gens = Vec::new();
    let mut v = vec![0u32; n];
    let mut below = v.clone();
    loop {
        if p.interior_shifted(c, &v) {
            let minimal = (0..n).all(|i| {
                if v[i] == 0 {
                    return true;
                }
                below.copy_from_slice(&v);
                below[i] -= 1;
                !p.interior_shifted(c, &below)
            });
            if minimal {
                gens.push(Monomial::from_exponents(&v));
            }
        }
        let mut i = 0;
        while i < n && v[i] == cap[i] {
            v[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        v[i] += 1;
    }
    Ok(MonomialIdeal::new(n, gens))
}

/// `J(c·a)` for a nonzero proper monomial ideal and rational `c >= 0`.
pub fn multiplier_ideal(a: &MonomialIdeal, c: Rational64) -> Result<MonomialIdeal> {
    if c < Rational64::from(0) {
        return Err(Error::InvalidArgument(format!("negative coefficient {c}")));
    }
    let p = newton_polyhedron(a)?;
    let j = multiplier_of(&p, c)?;
    sanity_power(a, &j, c);
    Ok(j)
}

// a^ceil(c) ⊆ J(c·a), checked when the power is small
fn sanity_power(a: &MonomialIdeal, j: &MonomialIdeal, c: Rational64) {
    let k = c.ceil().to_integer() as u32;
    let g = a.gens().len() as f64;
    if k == 0 || g.powi(k as i32) > 20_000.0 {
        return;
    }
    assert!(j.contains_ideal(&a.pow(k)), "multiplier ideal misses a^{k}");
}

fn drop_coordinate(a: &MonomialIdeal, i: usize) -> MonomialIdeal {
    let gens = a
        .gens()
        .iter()
        .map(|m| {
            let mut e = m.exponents().to_vec();
            e.remove(i);
            Monomial::from_exponents(&e)
        })
        .collect();
    MonomialIdeal::new(a.nvars() - 1, gens)
}

fn insert_coordinate(a: &MonomialIdeal, i: usize) -> MonomialIdeal {
    let gens = a
        .gens()
        .iter()
        .map(|m| {
            let mut e = m.exponents().to_vec();
            e.insert(i, 0);
            Monomial::from_exponents(&e)
        })
        .collect();
    MonomialIdeal::new(a.nvars() + 1, gens)
}

fn charts(a: &MonomialIdeal) -> Result<Vec<(usize, MonomialIdeal)>> {
    if a.is_zero() {
        return Err(Error::ZeroIdeal { op: "projective chart" });
    }
    let out: Vec<_> = (0..a.nvars())
        .map(|i| (i, drop_coordinate(a, i)))
        .filter(|(_, d)| !d.is_unit())
        .collect();
    if out.is_empty() {
        return Err(Error::UnitIdeal { op: "projective chart" });
    }
    Ok(out)
}

/// Minimum of the affine thresholds over the charts meeting `V(a)`.
pub fn projective_lct(a: &MonomialIdeal) -> Result<Rational64> {
    let mut best: Option<Rational64> = None;
    for (_, d) in charts(a)? {
        let t = lct(&d)?;
        best = Some(best.map_or(t, |b| b.min(t)));
    }
    Ok(best.expect("nonempty charts"))
}

/// The saturated monomial ideal whose sheaf is `J(c·a)` on projective space.
pub fn projective_multiplier_ideal(a: &MonomialIdeal, c: Rational64) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(a.nvars());
    for (i, d) in charts(a)? {
        let j = multiplier_ideal(&d, c)?;
        acc = acc.intersect(&insert_coordinate(&j, i));
    }
    Ok(acc)
}

/// Whether `(P^n, c·V(a))` is log canonical, i.e. `c <= lct`.
pub fn is_log_canonical(a: &MonomialIdeal, c: Rational64, projective: bool) -> Result<bool> {
    let t = if projective { projective_lct(a)? } else { lct(a)? };
    Ok(c <= t)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EinOutcome {
    pub codim: usize,
    /// `J(c·a) == a`
    pub equality: bool,
    /// `J((c-1)·a)` is the unit ideal
    pub lower_trivial: bool,
}

impl EinOutcome {
    pub fn agrees(&self) -> bool {
        self.equality == self.lower_trivial
    }
}

/// Compares `J(c·a) = a` with triviality of `J((c-1)·a)` for a pure squarefree `a`
/// of codimension `c`.
pub fn ein_criterion(a: &MonomialIdeal) -> Result<EinOutcome> {
    if !a.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if !a.is_pure() {
        return Err(Error::NotPure);
    }
    let codim = a
        .codimension()
        .ok_or(Error::UnitIdeal { op: "ein_criterion" })?;
    if codim == 0 {
        return Err(Error::ZeroIdeal { op: "ein_criterion" });
    }
    let c = codim as i64;
    let equality = multiplier_ideal(a, Rational64::from(c))? == *a;
    let lower_trivial = c == 1 || multiplier_ideal(a, Rational64::from(c - 1))?.is_unit();
    Ok(EinOutcome { codim, equality, lower_trivial })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonLcLocus {
    pub ideal: MonomialIdeal,
    /// `None` when the locus is empty.
    pub dimension: Option<usize>,
}

impl NonLcLocus {
    pub fn is_empty(&self) -> bool {
        self.dimension.is_none()
    }
}

/// Projective non-lc locus `Z = V((J(c·a) : a)^sat)` of `(P^n, c·V(a))`.
pub fn nonlc_locus(a: &MonomialIdeal, c: Rational64) -> Result<NonLcLocus> {
    let j = projective_multiplier_ideal(a, c)?;
    let ideal = j.colon(a).saturate_maximal();
    let dimension = match ideal.dimension() {
        Some(d) if d >= 1 && !ideal.is_unit() => Some(d - 1),
        _ => None,
    };
    Ok(NonLcLocus { ideal, dimension })
}

/// Affine non-lc locus `V(J(c·a) : a)` in `A^n`.
pub fn nonlc_locus_affine(a: &MonomialIdeal, c: Rational64) -> Result<NonLcLocus> {
    let ideal = multiplier_ideal(a, c)?.colon(a);
    let dimension = if ideal.is_unit() { None } else { ideal.dimension() };
    Ok(NonLcLocus { ideal, dimension })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    fn mi(n: usize, e: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, e)
    }

    fn axes4() -> MonomialIdeal {
        let mut g = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                let mut e = vec![0u32; 4];
                e[i] = 1;
                e[j] = 1;
                g.push(Monomial::from_exponents(&e));
            }
        }
        MonomialIdeal::new(4, g)
    }

    #[test]
    fn thresholds() {
        assert_eq!(lct(&mi(2, &[&[1, 0], &[0, 1]])).unwrap(), r(2, 1));
        assert_eq!(lct(&mi(2, &[&[2, 0], &[0, 3]])).unwrap(), r(5, 6));
        assert_eq!(lct(&mi(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])).unwrap(), r(3, 2));
    }

    #[test]
    fn multiplier_examples() {
        let m = mi(2, &[&[1, 0], &[0, 1]]);
        assert!(multiplier_ideal(&m, r(3, 2)).unwrap().is_unit());
        assert_eq!(multiplier_ideal(&m, r(2, 1)).unwrap(), m);
        let cusp = mi(2, &[&[2, 0], &[0, 3]]);
        assert!(multiplier_ideal(&cusp, r(5, 6) - r(1, 100)).unwrap().is_unit());
        assert_eq!(multiplier_ideal(&cusp, r(5, 6)).unwrap(), m);
    }

    #[test]
    fn four_axes_at_three() {
        let j = multiplier_ideal(&axes4(), r(3, 1)).unwrap();
        assert!(!j.contains(&Monomial::from_exponents(&[1, 1, 0, 0])));
        assert!(j.contains(&Monomial::from_exponents(&[2, 1, 0, 0])));
        assert!(j.contains(&Monomial::from_exponents(&[1, 1, 1, 0])));
        assert_eq!(lct(&axes4()).unwrap(), r(2, 1));
        assert_eq!(multiplier_ideal(&axes4(), r(2, 1)).unwrap(), MonomialIdeal::maximal(4));
    }

    #[test]
    fn ein_examples() {
        let m = mi(2, &[&[1, 0], &[0, 1]]);
        let e = ein_criterion(&m).unwrap();
        assert!(e.equality && e.lower_trivial);
        let e = ein_criterion(&axes4()).unwrap();
        assert!(!e.equality && !e.lower_trivial);
        let e = ein_criterion(&mi(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])).unwrap();
        assert!(e.equality && e.lower_trivial);
        assert!(matches!(ein_criterion(&mi(2, &[&[2, 0]])), Err(Error::NotSquarefree)));
        assert!(matches!(ein_criterion(&mi(3, &[&[1, 1, 0], &[1, 0, 1]])), Err(Error::NotPure)));
    }

    #[test]
    fn projective_examples() {
        // skew lines x0x2, x0x3, x1x2, x1x3
        let skew = mi(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
        assert_eq!(projective_lct(&skew).unwrap(), r(2, 1));
        assert!(nonlc_locus(&skew, r(2, 1)).unwrap().is_empty());
        let pts = mi(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(projective_lct(&pts).unwrap(), r(2, 1));
        assert!(nonlc_locus(&pts, r(2, 1)).unwrap().is_empty());
        // four lines through a point in P^4: the axes in x1..x4, x0 free
        let mut g = Vec::new();
        for m in axes4().gens() {
            let mut e = vec![0u32];
            e.extend_from_slice(m.exponents());
            g.push(Monomial::from_exponents(&e));
        }
        let lines = MonomialIdeal::new(5, g);
        assert_eq!(projective_lct(&lines).unwrap(), r(2, 1));
        let z = nonlc_locus(&lines, r(3, 1)).unwrap();
        assert_eq!(z.dimension, Some(0));
        assert_eq!(z.ideal, mi(5, &[&[0, 1, 0, 0, 0], &[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]]));
        assert!(is_log_canonical(&lines, r(2, 1), true).unwrap());
        assert!(!is_log_canonical(&lines, r(3, 1), true).unwrap());
    }

    #[test]
    fn projective_is_saturated_and_below_lct_trivial() {
        let skew = mi(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
        let j = projective_multiplier_ideal(&skew, r(2, 1)).unwrap();
        assert_eq!(j, j.saturate_maximal());
        assert_eq!(j, skew);
        assert!(projective_multiplier_ideal(&skew, r(1, 1)).unwrap().is_unit());
    }

    /// Independent oracle: `x^v ∈ J(c·a)` iff for every weight `w` in a box,
    /// `w·(v+1) > c · min_g w·g`. Facet normals of small Newton polyhedra lie in
    /// the box, so this decides membership without the double description.
    fn brute_member(a: &MonomialIdeal, c: Rational64, v: &[u32], wmax: i64) -> bool {
        let n = a.nvars();
        let (p, q) = (*c.numer(), *c.denom());
        let mut w = vec![0i64; n];
        loop {
            if w.iter().any(|&x| x > 0) {
                let lhs: i64 = w.iter().zip(v).map(|(a, &x)| a * (x as i64 + 1)).sum();
                let m = a
                    .gens()
                    .iter()
                    .map(|g| w.iter().zip(g.exponents()).map(|(a, &e)| a * e as i64).sum::<i64>())
                    .min()
                    .unwrap();
                if q * lhs <= p * m {
                    return false;
                }
            }
            let mut i = 0;
            while i < n && w[i] == wmax {
                w[i] = 0;
                i += 1;
            }
            if i == n {
                return true;
            }
            w[i] += 1;
        }
    }

    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn multiplier_matches_weight_scan(
            gens in proptest::collection::vec(proptest::collection::vec(0u32..3, 3), 1..4),
            cn in 1i64..7, cd in 1i64..4,
        ) {
            let a = MonomialIdeal::new(3, gens.iter().map(|g| Monomial::from_exponents(g)).collect());
            prop_assume!(!a.is_unit());
            let c = r(cn, cd);
            let j = multiplier_ideal(&a, c).unwrap();
            for x in 0..5u32 { for y in 0..5u32 { for z in 0..5u32 {
                let v = [x, y, z];
                prop_assert_eq!(j.contains(&Monomial::from_exponents(&v)), brute_member(&a, c, &v, 6));
            }}}
        }

        #[test]
        fn lct_scales_and_is_monotone(
            gens in proptest::collection::vec(proptest::collection::vec(0u32..3, 3), 1..4),
            k in 1u32..3,
        ) {
            let a = MonomialIdeal::new(3, gens.iter().map(|g| Monomial::from_exponents(g)).collect());
            prop_assume!(!a.is_unit());
            let t = lct(&a).unwrap();
            prop_assert_eq!(lct(&a.pow(k)).unwrap(), t / Rational64::from(k as i64));
            let bigger = a.add(&MonomialIdeal::maximal(3));
            prop_assert!(lct(&bigger).unwrap() >= t);
            // J is decreasing in c
            let j1 = multiplier_ideal(&a, t).unwrap();
            let j2 = multiplier_ideal(&a, t + Rational64::from(1)).unwrap();
            prop_assert!(j1.contains_ideal(&j2));
            prop_assert!(multiplier_ideal(&a, t * Rational64::new(9, 10)).unwrap().is_unit());
            prop_assert!(!j1.is_unit());
        }
    }
}
