//! Newton polyhedra of monomial ideals by exact double description.
//!
//! The facet normals `(a, b)` of `P = conv(exponents) + R^n_{>=0}` are the
//! extreme rays of the cone `{ (a, b) : a >= 0, a·v >= b for every generator v }`
//! with `b > 0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monideal::MonomialIdeal;

/// Largest ambient dimension accepted by [`newton_polyhedron`].
pub const MAX_DIMENSION: usize = 8;

/// The halfspace `normal · u >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub rhs: i64,
}

impl Facet {
    pub fn value(&self, u: &[u32]) -> i64 {
        self.normal.iter().zip(u).map(|(a, &x)| a * x as i64).sum()
    }

    pub fn contains(&self, u: &[u32]) -> bool {
        self.value(u) >= self.rhs
    }

    /// `(Σ normal) / rhs`, the largest `c` with `(1, ..., 1) ∈ c·H`.
    pub fn threshold(&self) -> Rational64 {
        Rational64::new(self.normal.iter().sum(), self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonPolyhedron {
    dim: usize,
    facets: Vec<Facet>,
}

impl NewtonPolyhedron {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Facets other than the coordinate halfspaces `u_i >= 0`.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn contains(&self, u: &[u32]) -> bool {
        self.facets.iter().all(|f| f.contains(u))
    }

    /// Whether `v + (1, ..., 1)` lies in the interior of `c·P`.
    pub fn interior_shifted(&self, c: Rational64, v: &[u32]) -> bool {
        let (p, q) = (*c.numer() as i128, *c.denom() as i128);
        self.facets.iter().all(|f| {
            let s: i128 = f
                .normal
                .iter()
                .zip(v)
                .map(|(a, &x)| *a as i128 * (x as i128 + 1))
                .sum();
            q * s > p * f.rhs as i128
        })
    }

    /// `min (Σ normal)/rhs` over the facets.
    pub fn lct(&self) -> Rational64 {
        self.facets
            .iter()
            .map(|f| f.threshold())
            .min()
            .expect("a proper ideal has a facet")
    }
}

#[derive(Clone)]
struct Ray {
    coords: Vec<BigInt>,
    zeros: Vec<u64>,
}

fn bit(set: &mut [u64], k: usize) {
    set[k / 64] |= 1 << (k % 64);
}

fn has(set: &[u64], k: usize) -> bool {
    set[k / 64] >> (k % 64) & 1 == 1
}

fn and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn count(a: &[u64]) -> usize {
    a.iter().map(|x| x.count_ones() as usize).sum()
}

fn normalize(coords: Vec<BigInt>) -> Vec<BigInt> {
    let g = coords.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return coords;
    }
    coords.into_iter().map(|c| c / &g).collect()
}

/// Facet description of the Newton polyhedron of a nonzero proper monomial ideal.
pub fn newton_polyhedron(a: &MonomialIdeal) -> Result<NewtonPolyhedron> {
    let n = a.nvars();
    if n > MAX_DIMENSION {
        return Err(Error::DimensionCap { dim: n, max: MAX_DIMENSION });
    }
    if a.is_zero() {
        return Err(Error::ZeroIdeal { op: "newton_polyhedron" });
    }
    if a.is_unit() {
        return Err(Error::UnitIdeal { op: "newton_polyhedron" });
    }
    let verts: Vec<Vec<i64>> = a
        .gens()
        .iter()
        .map(|g| g.exponents().iter().map(|&e| e as i64).collect())
        .collect();
    // constraint k < n: a_k >= 0; constraint n + j: a·v_j - b >= 0
    let ncons = n + verts.len();
    let words = ncons.div_ceil(64);
    let eval = |r: &Ray, k: usize| -> BigInt {
        if k < n {
            r.coords[k].clone()
        } else {
            let v = &verts[k - n];
            let mut s = -r.coords[n].clone();
            for (i, &e) in v.iter().enumerate() {
                s += &r.coords[i] * e;
            }
            s
        }
    };

    let mut rays: Vec<Ray> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut coords = vec![BigInt::zero(); n + 1];
        if k < n {
            coords[k] = BigInt::from(1);
            coords[n] = BigInt::from(verts[0][k]);
        } else {
            coords[n] = BigInt::from(-1);
        }
        rays.push(Ray {
            coords,
            zeros: vec![0; words],
        });
    }
    for r in rays.iter_mut() {
        for k in 0..=n {
            if eval(r, k).is_zero() {
                bit(&mut r.zeros, k);
            }
        }
    }

    let d = n + 1;
    for k in n + 1..ncons {
        let vals: Vec<BigInt> = rays.iter().map(|r| eval(r, k)).collect();
        let mut next: Vec<Ray> = Vec::new();
        for (r, v) in rays.iter().zip(&vals) {
            if !v.is_negative() {
                let mut r = r.clone();
                if v.is_zero() {
                    bit(&mut r.zeros, k);
                }
                next.push(r);
            }
        }
        for (pi, pv) in vals.iter().enumerate() {
            if !pv.is_positive() {
                continue;
            }
            for (ni, nv) in vals.iter().enumerate() {
                if !nv.is_negative() {
                    continue;
                }
                let common = and(&rays[pi].zeros, &rays[ni].zeros);
                if count(&common) < d - 2 {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(o, r)| o == pi || o == ni || !subset(&common, &r.zeros));
                if !adjacent {
                    continue;
                }
                let coords: Vec<BigInt> = rays[ni]
                    .coords
                    .iter()
                    .zip(&rays[pi].coords)
                    .map(|(q, p)| pv * q - nv * p)
                    .collect();
                let mut zeros = common;
                bit(&mut zeros, k);
                next.push(Ray {
                    coords: normalize(coords),
                    zeros,
                });
            }
        }
        rays = next;
    }

    let mut facets: Vec<Facet> = rays
        .into_iter()
        .filter(|r| r.coords[n].is_positive())
        .map(|r| {
            let c = normalize(r.coords);
            Facet {
                normal: c[..n].iter().map(|x| x.to_i64().expect("small facet")).collect(),
                rhs: c[n].to_i64().expect("small facet"),
            }
        })
        .collect();
    facets.sort();
    facets.dedup();
    debug_assert!(facets.iter().all(|f| has_support(f, &verts)));
    let _ = has;
    Ok(NewtonPolyhedron { dim: n, facets })
}

fn has_support(f: &Facet, verts: &[Vec<i64>]) -> bool {
    verts
        .iter()
        .all(|v| v.iter().zip(&f.normal).map(|(x, a)| x * a).sum::<i64>() >= f.rhs)
        && verts
            .iter()
            .any(|v| v.iter().zip(&f.normal).map(|(x, a)| x * a).sum::<i64>() == f.rhs)
}
