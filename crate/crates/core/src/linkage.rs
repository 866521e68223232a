//! Generic links in Situations B and C, and the checks run on them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::Rational64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hilbert::HilbertSeries;
use crate::ideal::{
    codimension, colon, degree, hilbert_series, ideal_equal, intersect, is_complete_intersection,
    is_saturated, minimal_degrees, minimal_generators, saturate, saturate_irrelevant, Ideal,
};
use crate::monideal::MonomialIdeal;
use crate::multiplier::{lct, nonlc_locus, projective_lct, projective_multiplier_ideal};
use crate::poly::{Polynomial, Ring};
use crate::resolution::{
    canonical_module, depth_pd_cm, module_betti, module_hilbert_series, regularity, syzygies,
    BettiTable, GradedMatrix, GradedModulePresentation,
};

/// Number of draws before a genericity failure is reported.
pub const MAX_ATTEMPTS: usize = 5;

const SEED_STEP: u64 = 1_099_511_628_211;

/// Seed used for attempt `k` of a link drawn from `seed`.
pub fn attempt_seed(seed: u64, k: usize) -> u64 {
    if k == 0 {
        seed
    } else {
        seed.wrapping_mul(SEED_STEP).wrapping_add(k as u64)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Situation {
    B,
    C,
}

impl fmt::Display for Situation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Situation::B => "B",
            Situation::C => "C",
        })
    }
}

impl FromStr for Situation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(Situation::B),
            "C" | "c" => Ok(Situation::C),
            _ => Err(Error::InvalidArgument(format!("unknown situation {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub status: CheckStatus,
    pub details: BTreeMap<String, String>,
}

impl CheckOutcome {
    pub fn new(name: &str, ok: bool) -> Self {
        CheckOutcome {
            name: name.to_string(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            details: BTreeMap::new(),
        }
    }

    pub fn skipped(name: &str, reason: impl Into<String>) -> Self {
        let mut c = CheckOutcome {
            name: name.to_string(),
            status: CheckStatus::Skipped,
            details: BTreeMap::new(),
        };
        c.details.insert("reason".into(), reason.into());
        c
    }

    pub fn with(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.details.insert(key.to_string(), value.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }

    /// Turns a resource or applicability error into a skipped outcome.
    /// Budget errors are passed through.
    pub fn or_skip(name: &str, r: Result<CheckOutcome>) -> Result<CheckOutcome> {
        match r {
            Ok(c) => Ok(c),
            Err(e) if e.is_budget() => Err(e),
            Err(e) => Ok(CheckOutcome::skipped(name, e.to_string())),
        }
    }
}

/// One generic-linkage step.
#[derive(Clone, Debug)]
pub struct LinkResult<F: Field> {
    pub situation: Situation,
    pub degrees: Vec<u64>,
    pub seed: u64,
    /// Generators `f_j` of `I_X` the link was drawn from.
    pub x_gens: Vec<Polynomial<F>>,
    /// `alpha_i = Σ_j coefficients[i][j] f_j`.
    pub coefficients: Vec<Vec<Polynomial<F>>>,
    pub iv: Ideal<F>,
    pub iy: Ideal<F>,
    pub empty: bool,
    pub retries: usize,
    pub diagnostics: Vec<CheckOutcome>,
}

impl<F: Field> LinkResult<F> {
    pub fn codim(&self) -> usize {
        self.degrees.len()
    }

    /// `Σ d_i`
    pub fn total_degree(&self) -> u64 {
        self.degrees.iter().sum()
    }
}

fn require_proper<F: Field>(ix: &Ideal<F>, op: &'static str) -> Result<usize> {
    if ix.is_zero() {
        return Err(Error::ZeroIdeal { op });
    }
    if ix.is_unit()? {
        return Err(Error::UnitIdeal { op });
    }
    let c = codimension(ix)?.expect("proper");
    if c == 0 {
        return Err(Error::ZeroIdeal { op });
    }
    Ok(c)
}

/// Generic link of `I_X` with degrees chosen by the situation.
pub fn generic_link<F: Field>(ix: &Ideal<F>, situation: Situation, seed: u64) -> Result<LinkResult<F>> {
    generic_link_with(ix, situation, seed, None)
}

/// As [`generic_link`], with Situation C degrees raised componentwise to `floor`.
pub fn generic_link_with<F: Field>(
    ix: &Ideal<F>,
    situation: Situation,
    seed: u64,
    floor: Option<&[u64]>,
) -> Result<LinkResult<F>> {
    let c = require_proper(ix, "generic_link")?;
    let ring = ix.ring().clone();
    let graded = ix.is_homogeneous();
    if graded && !is_saturated(ix)? {
        return Err(Error::NotSaturated { op: "generic_link" });
    }
    let x_gens = if graded {
        minimal_generators(ix)?
    } else {
        ix.gens().to_vec()
    };
    let gen_deg: Vec<u64> = x_gens.iter().map(|g| g.degree().unwrap_or(0)).collect();
    let degrees: Vec<u64> = match situation {
        Situation::B => {
            if graded && gen_deg.iter().any(|&d| d != gen_deg[0]) {
                let mut d = gen_deg.clone();
                d.sort_unstable_by(|a, b| b.cmp(a));
                d.dedup();
                return Err(Error::MixedDegrees(d));
            }
            let mut d = gen_deg.clone();
            d.sort_unstable_by(|a, b| b.cmp(a));
            d.truncate(c);
            d
        }
        Situation::C => {
            if !graded {
                return Err(Error::Inhomogeneous { op: "generic_link (situation C)" });
            }
            let mut d = minimal_degrees(ix)?;
            d.truncate(c);
            if let Some(fl) = floor {
                for (a, b) in d.iter_mut().zip(fl) {
                    *a = (*a).max(*b);
                }
            }
            d
        }
    };

    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(attempt_seed(seed, attempt));
        let field = ring.field();
        let coefficients: Vec<Vec<Polynomial<F>>> = degrees
            .iter()
            .map(|&di| {
                gen_deg
                    .iter()
                    .map(|&dj| match situation {
                        Situation::B => Polynomial::constant(&ring, field.random(&mut rng)),
                        Situation::C if di >= dj => Polynomial::random_homogeneous(&ring, di - dj, &mut rng),
                        Situation::C => Polynomial::zero(&ring),
                    })
                    .collect()
            })
            .collect();
        let alphas: Vec<Polynomial<F>> = coefficients
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&x_gens)
                    .fold(Polynomial::zero(&ring), |acc, (g, f)| &acc + &(g * f))
            })
            .collect();
        if alphas.iter().any(|a| a.is_zero()) {
            continue;
        }
        let iv = Ideal::new(&ring, alphas);
        if codimension(&iv)? != Some(c) {
            continue;
        }
        let quotient = colon(&iv, ix)?;
        let empty = quotient.is_unit()?;
        if !empty && codimension(&quotient)? != Some(c) {
            continue;
        }
        let iy = if empty {
            Ideal::unit(&ring)
        } else if graded {
            Ideal::new(&ring, minimal_generators(&quotient)?)
        } else {
            quotient.reduced()?
        };
        return Ok(LinkResult {
            situation,
            degrees,
            seed,
            x_gens,
            coefficients,
            iv,
            iy,
            empty,
            retries: attempt,
            diagnostics: Vec::new(),
        });
    }
    Err(Error::Genericity { attempts: MAX_ATTEMPTS })
}

/// `I_Y = I_V : I_X`, `I_X = I_V : I_Y`, `I_V = I_X ∩ I_Y`, plus equal codimensions.
pub fn verify_geometric_linkage<F: Field>(ix: &Ideal<F>, iv: &Ideal<F>, iy: &Ideal<F>) -> Result<CheckOutcome> {
    let y_colon = ideal_equal(iy, &colon(iv, ix)?)?;
    let x_colon = if iy.is_unit()? {
        ideal_equal(ix, iv)?
    } else {
        ideal_equal(ix, &colon(iv, iy)?)?
    };
    let v_meet = ideal_equal(iv, &intersect(ix, iy)?)?;
    let cx = codimension(ix)?;
    let cv = codimension(iv)?;
    let cy = codimension(iy)?;
    let codims = cx == cv && (cy.is_none() || cy == cx);
    let mut violated = Vec::new();
    for (ok, name) in [
        (y_colon, "I_Y = I_V : I_X"),
        (x_colon, "I_X = I_V : I_Y"),
        (v_meet, "I_V = I_X ∩ I_Y"),
        (codims, "equal codimension"),
    ] {
        if !ok {
            violated.push(name);
        }
    }
    let show = |c: Option<usize>| c.map_or("-".to_string(), |c| c.to_string());
    Ok(CheckOutcome::new("linkage_identities", violated.is_empty())
        .with("iy_eq_iv_colon_ix", y_colon)
        .with("ix_eq_iv_colon_iy", x_colon)
        .with("iv_eq_ix_cap_iy", v_meet)
        .with("codims", format!("{}/{}/{}", show(cx), show(cv), show(cy)))
        .with("violated", violated.join("; ")))
}

pub fn check_degree_additivity<F: Field>(ix: &Ideal<F>, iv: &Ideal<F>, iy: &Ideal<F>) -> Result<CheckOutcome> {
    const NAME: &str = "degree_additivity";
    if !ix.is_homogeneous() || !iv.is_homogeneous() {
        return Ok(CheckOutcome::skipped(NAME, "inhomogeneous link"));
    }
    let (dx, dv) = (degree(ix)?, degree(iv)?);
    let dy = if iy.is_unit()? { 0 } else { degree(iy)?.value };
    Ok(CheckOutcome::new(NAME, dx.value + dy == dv.value)
        .with("deg_x", dx.value)
        .with("deg_y", dy)
        .with("deg_v", dv.value))
}

/// `S/I_X` is Cohen–Macaulay exactly when `S/I_Y` is.
pub fn check_cm_equivalence<F: Field>(ix: &Ideal<F>, iy: &Ideal<F>) -> Result<CheckOutcome> {
    const NAME: &str = "cm_equivalence";
    if !ix.is_homogeneous() {
        return Ok(CheckOutcome::skipped(NAME, "inhomogeneous link"));
    }
    if iy.is_unit()? {
        return Ok(CheckOutcome::skipped(NAME, "empty link"));
    }
    let x = depth_pd_cm(ix)?;
    let y = depth_pd_cm(iy)?;
    Ok(CheckOutcome::new(NAME, x.cohen_macaulay == y.cohen_macaulay)
        .with("cm_x", x.cohen_macaulay)
        .with("cm_y", y.cohen_macaulay)
        .with("pd_x", x.projective_dimension)
        .with("pd_y", y.projective_dimension))
}

/// `d - n - 1` for a link in `n + 1` variables.
fn omega_twist<F: Field>(iv: &Ideal<F>) -> i64 {
    let d: u64 = iv.gens().iter().map(|g| g.degree().unwrap_or(0)).sum();
    d as i64 - iv.ring().nvars() as i64
}

/// Series of `(I_X/I_V)(d-n-1)`.
pub fn omega_series_from_x<F: Field>(ix: &Ideal<F>, iv: &Ideal<F>) -> Result<HilbertSeries> {
    Ok(hilbert_series(iv)?.sub(&hilbert_series(ix)?).twist(omega_twist(iv)))
}

fn series_details(c: CheckOutcome, key: &str, s: &HilbertSeries) -> CheckOutcome {
    let lo = s.start().min(0);
    let coeffs: Vec<String> = s.expansion(lo, lo + 8).iter().map(|x| x.to_string()).collect();
    c.with(key, s).with(&format!("{key}_from_{lo}"), coeffs.join(","))
}

/// `HS(ω_Y) = HS((I_X/I_V)(d-n-1))`.
pub fn check_omega_formula<F: Field>(ix: &Ideal<F>, iv: &Ideal<F>, iy: &Ideal<F>) -> Result<CheckOutcome> {
    const NAME: &str = "omega_formula";
    if !ix.is_homogeneous() || !iv.is_homogeneous() {
        return Ok(CheckOutcome::skipped(NAME, "inhomogeneous link"));
    }
    if iy.is_unit()? {
        return Ok(CheckOutcome::skipped(NAME, "empty link: no canonical module to compare"));
    }
    let hs_y = module_hilbert_series(&canonical_module(iy)?)?;
    let hs_x = omega_series_from_x(ix, iv)?;
    let c = CheckOutcome::new(NAME, hs_y == hs_x)
        .with("comparison", "hilbert series (necessary condition for isomorphism)")
        .with("twist", omega_twist(iv));
    let c = series_details(c, "hs_omega_y", &hs_y);
    Ok(series_details(c, "hs_ix_over_iv", &hs_x))
}

/// Presentation of `(I_X/I_V)(d-n-1)` on the generators `f_j`.
pub fn ix_over_iv_presentation<F: Field>(link: &LinkResult<F>) -> Result<GradedModulePresentation<F>> {
    let ring = link.iv.ring();
    let row = GradedMatrix::row(ring, &link.x_gens)?;
    let syz = syzygies(&row)?;
    let alphas = GradedMatrix::new(
        ring,
        row.col_degrees().to_vec(),
        link.degrees.iter().map(|&d| d as i64).collect(),
        link.coefficients.clone(),
    )?;
    Ok(GradedModulePresentation::new(syz.concat(&alphas), omega_twist(&link.iv)))
}

/// Betti tables of `ω_Y` and `(I_X/I_V)(d-n-1)` agree.
pub fn check_omega_betti<F: Field>(link: &LinkResult<F>) -> Result<CheckOutcome> {
    const NAME: &str = "omega_betti";
    if link.empty {
        return Ok(CheckOutcome::skipped(NAME, "empty link"));
    }
    if !link.iv.is_homogeneous() {
        return Ok(CheckOutcome::skipped(NAME, "inhomogeneous link"));
    }
    let by: BettiTable = module_betti(&canonical_module(&link.iy)?)?;
    let bx: BettiTable = module_betti(&ix_over_iv_presentation(link)?)?;
    let fmt = |b: &BettiTable| {
        b.triples()
            .iter()
            .map(|(i, j, v)| format!("({i},{j},{v})"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    Ok(CheckOutcome::new(NAME, by == bx)
        .with("betti_omega_y", fmt(&by))
        .with("betti_ix_over_iv", fmt(&bx)))
}

fn monomial_x<F: Field>(ix: &Ideal<F>) -> Option<MonomialIdeal> {
    if ix.is_homogeneous() {
        ix.as_monomial()
    } else {
        None
    }
}

const NON_MONOMIAL: &str = "non-monomial input: multiplier ideal unavailable";

/// Hilbert-series shadow of `ω^GR_Y ⊆ ω_Y` with `ω^GR_Y = J(cX)·O_Y ⊗ ω(d)`.
pub fn check_gr_candidate<F: Field>(ix: &Ideal<F>, iv: &Ideal<F>, iy: &Ideal<F>, c: usize) -> Result<CheckOutcome> {
    const NAME: &str = "gr_candidate";
    let Some(mx) = monomial_x(ix) else {
        return Ok(CheckOutcome::skipped(NAME, NON_MONOMIAL));
    };
    if iy.is_unit()? {
        return Ok(CheckOutcome::skipped(NAME, "empty link"));
    }
    let ring = ix.ring();
    let cq = Rational64::from(c as i64);
    let mj = projective_multiplier_ideal(&mx, cq)?;
    let j = Ideal::from_monomial(ring, &mj);
    let j_plus_y = j.add(iy)?;
    let tw = omega_twist(iv);
    let hs_gr = hilbert_series(iy)?.sub(&hilbert_series(&j_plus_y)?).twist(tw);
    let hs_w = omega_series_from_x(ix, iv)?;
    let dominated = hs_gr.dominated_by(&hs_w);
    let j_eq = mj == mx;
    let equal = hs_gr == hs_w;
    let concordant = equal == j_eq;
    let mut support_ok = true;
    let mut out = CheckOutcome::new(NAME, true);
    if !equal {
        let q = colon(&j_plus_y, &ix.add(iy)?)?;
        let z = nonlc_locus(&mx, cq)?;
        let iz = Ideal::from_monomial(ring, &z.ideal);
        let rest = saturate_irrelevant(&saturate(&q, &iz)?)?;
        support_ok = rest.is_unit()?;
        out = out
            .with("nonlc_locus", &iz)
            .with("nonlc_dim", z.dimension.map_or("empty".into(), |d| d.to_string()))
            .with("cokernel_support_in_z", support_ok);
    }
    out.status = if dominated && concordant && support_ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    let out = out
        .with("multiplier_ideal", &j)
        .with("j_equals_ix", j_eq)
        .with("dominated", dominated)
        .with("series_equal", equal);
    let out = series_details(out, "hs_gr", &hs_gr);
    Ok(series_details(out, "hs_omega", &hs_w))
}

/// Rational-singularity verdict `CM(X) && J(cX) = I_X`; a positive verdict
/// requires a Cohen–Macaulay link.
pub fn rationality_criterion<F: Field>(ix: &Ideal<F>, iy: &Ideal<F>, c: usize) -> Result<CheckOutcome> {
    const NAME: &str = "rationality_criterion";
    let Some(mx) = monomial_x(ix) else {
        return Ok(CheckOutcome::skipped(NAME, NON_MONOMIAL));
    };
    let cm_x = depth_pd_cm(ix)?.cohen_macaulay;
    let j_eq = projective_multiplier_ideal(&mx, Rational64::from(c as i64))? == mx;
    let verdict = cm_x && j_eq;
    let cm_y = if iy.is_unit()? { None } else { Some(depth_pd_cm(iy)?.cohen_macaulay) };
    let ok = !verdict || cm_y != Some(false);
    Ok(CheckOutcome::new(NAME, ok)
        .with("verdict", verdict)
        .with("cm_x", cm_x)
        .with("j_equals_ix", j_eq)
        .with("cm_y", cm_y.map_or("empty".into(), |b| b.to_string())))
}

/// `reg I_X <= Σ d_i - c + 1`, with equality exactly for complete intersections.
///
/// `hypothesis` is an annotated value of `dim Z <= 1`; monomial inputs
/// compute it from the non-lc locus instead.
pub fn check_regularity_bound<F: Field>(ix: &Ideal<F>, hypothesis: Option<bool>) -> Result<CheckOutcome> {
    const NAME: &str = "regularity_bound";
    if !ix.is_homogeneous() {
        return Ok(CheckOutcome::skipped(NAME, "inhomogeneous input"));
    }
    let c = require_proper(ix, "check_regularity_bound")?;
    let (holds, source, zdim) = match monomial_x(ix) {
        Some(mx) => match nonlc_locus(&mx, Rational64::from(c as i64)) {
            Ok(z) => (
                z.dimension.map_or(true, |d| d <= 1),
                "computed",
                z.dimension.map_or("empty".into(), |d| d.to_string()),
            ),
            Err(e) if e.is_budget() => return Err(e),
            Err(e) => return Ok(CheckOutcome::skipped(NAME, format!("non-lc locus unavailable: {e}"))),
        },
        None => match hypothesis {
            Some(h) => (h, "annotation", "-".into()),
            None => return Ok(CheckOutcome::skipped(NAME, "hypothesis dim Z <= 1 unverifiable and unannotated")),
        },
    };
    if !holds {
        return Ok(CheckOutcome::skipped(NAME, "hypothesis dim Z <= 1 does not hold").with("dim_z", zdim));
    }
    let reg = regularity(ix)?;
    let degs = minimal_degrees(ix)?;
    let bound = degs[..c].iter().sum::<u64>() as i64 - c as i64 + 1;
    let ci = is_complete_intersection(ix)?;
    let ok = reg <= bound && ((reg == bound) == ci);
    Ok(CheckOutcome::new(NAME, ok)
        .with("reg", reg)
        .with("bound", bound)
        .with("degrees", fmt_list(&degs[..c]))
        .with("complete_intersection", ci)
        .with("dim_z", zdim)
        .with("hypothesis_source", source))
}

/// An empty link occurs exactly for complete intersections.
pub fn check_empty_link<F: Field>(ix: &Ideal<F>, empty: bool) -> Result<CheckOutcome> {
    const NAME: &str = "empty_link_iff_ci";
    if !ix.is_homogeneous() {
        return Ok(CheckOutcome::skipped(NAME, "inhomogeneous input"));
    }
    let ci = is_complete_intersection(ix)?;
    Ok(CheckOutcome::new(NAME, ci == empty)
        .with("empty", empty)
        .with("complete_intersection", ci))
}

/// Curated values for a corpus entry.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Annotations {
    pub lct_x: Option<Rational64>,
    pub lct_y: Option<Rational64>,
    /// Oracle value of `dim Z <= 1` for non-monomial inputs.
    pub regularity_hypothesis: Option<bool>,
}

/// `lct(Y) >= lct(X)` and `lct(X) <= c`.
pub fn lct_monotonicity_check<F: Field>(
    ix: &Ideal<F>,
    iy: &Ideal<F>,
    c: usize,
    notes: &Annotations,
) -> Result<CheckOutcome> {
    const NAME: &str = "lct_monotonicity";
    let projective = ix.is_homogeneous();
    let mono_lct = |m: &MonomialIdeal| if projective { projective_lct(m) } else { lct(m) };
    let lx = match ix.as_monomial() {
        Some(m) => Some(mono_lct(&m)?),
        None => notes.lct_x,
    };
    if iy.is_unit()? {
        return Ok(CheckOutcome::skipped(NAME, "empty link"));
    }
    let ly = match iy.as_monomial() {
        Some(m) => Some(mono_lct(&m)?),
        None => notes.lct_y,
    };
    let (Some(lx), Some(ly)) = (lx, ly) else {
        return Ok(CheckOutcome::skipped(NAME, "missing lct annotation"));
    };
    let cq = Rational64::from(c as i64);
    Ok(CheckOutcome::new(NAME, ly >= lx && lx <= cq)
        .with("lct_x", lx)
        .with("lct_y", ly)
        .with("c", c))
}

fn fmt_list(v: &[u64]) -> String {
    v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
}

/// Every check applicable to a computed link, in report order.
pub fn run_link_checks<F: Field>(
    ix: &Ideal<F>,
    link: &LinkResult<F>,
    notes: &Annotations,
    betti: bool,
) -> Result<Vec<CheckOutcome>> {
    let (iv, iy) = (&link.iv, &link.iy);
    let c = link.codim();
    let mut out = vec![
        verify_geometric_linkage(ix, iv, iy)?,
        check_empty_link(ix, link.empty)?,
        check_degree_additivity(ix, iv, iy)?,
        check_cm_equivalence(ix, iy)?,
        check_omega_formula(ix, iv, iy)?,
    ];
    if betti {
        out.push(check_omega_betti(link)?);
    }
    out.push(CheckOutcome::or_skip("gr_candidate", check_gr_candidate(ix, iv, iy, c))?);
    out.push(CheckOutcome::or_skip("rationality_criterion", rationality_criterion(ix, iy, c))?);
    out.push(CheckOutcome::or_skip("regularity_bound", check_regularity_bound(ix, notes.regularity_hypothesis))?);
    out.push(CheckOutcome::or_skip("lct_monotonicity", lct_monotonicity_check(ix, iy, c, notes))?);
    out.push(CheckOutcome::skipped("reduced_link", "assumed"));
    Ok(out)
}

/// Invariants of one scheme along a link sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct SequenceStep {
    pub step: usize,
    pub degrees: Vec<u64>,
    pub empty: bool,
    pub degree: u64,
    pub regularity: Option<i64>,
    pub cohen_macaulay: Option<bool>,
    pub generator_degrees: Vec<u64>,
    pub lct: Option<Rational64>,
    pub retries: usize,
    pub generators: Vec<String>,
}

fn describe<F: Field>(i: &Ideal<F>, step: usize, degrees: Vec<u64>, retries: usize) -> Result<SequenceStep> {
    if i.is_unit()? {
        return Ok(SequenceStep {
            step,
            degrees,
            empty: true,
            degree: 0,
            regularity: None,
            cohen_macaulay: None,
            generator_degrees: Vec::new(),
            lct: None,
            retries,
            generators: vec!["1".into()],
        });
    }
    let lct = match (step, i.as_monomial()) {
        (0, Some(m)) => Some(projective_lct(&m)?),
        _ => None,
    };
    Ok(SequenceStep {
        step,
        degrees,
        empty: false,
        degree: degree(i)?.value,
        regularity: Some(regularity(i)?),
        cohen_macaulay: Some(depth_pd_cm(i)?.cohen_macaulay),
        generator_degrees: minimal_degrees(i)?,
        lct,
        retries,
        generators: i.gens().iter().map(|g| g.to_string()).collect(),
    })
}

/// Seed for step `k >= 1` of a sequence.
pub fn step_seed(seed: u64, k: usize) -> u64 {
    seed.wrapping_add((k as u64 - 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Iterated Situation C links `X = Y_0, Y_1, ..., Y_m`; stops after an empty link.
///
/// Step `k > 1` uses degrees at least those of step `k - 1`.
pub fn link_sequence<F: Field>(ix: &Ideal<F>, steps: usize, seed: u64) -> Result<Vec<SequenceStep>> {
    if steps == 0 {
        return Err(Error::InvalidArgument("link_sequence needs at least one step".into()));
    }
    let mut trace = vec![describe(ix, 0, Vec::new(), 0)?];
    let mut cur = ix.clone();
    let mut prev: Option<Vec<u64>> = None;
    for k in 1..=steps {
        let link = generic_link_with(&cur, Situation::C, step_seed(seed, k), prev.as_deref())?;
        let next = if link.empty { link.iy.clone() } else { saturate_irrelevant(&link.iy)? };
        trace.push(describe(&next, k, link.degrees.clone(), link.retries)?);
        if link.empty {
            break;
        }
        prev = Some(link.degrees.clone());
        cur = Ideal::new(next.ring(), minimal_generators(&next)?);
    }
    Ok(trace)
}

/// Ring of the link, for callers holding only the result.
pub fn link_ring<F: Field>(link: &LinkResult<F>) -> &Arc<Ring<F>> {
    link.iv.ring()
}
