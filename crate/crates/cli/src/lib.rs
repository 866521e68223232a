//! Command-line surface of the linkage workbench.

pub mod args;
pub mod corpus;
pub mod manifest;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use clap::Parser;
use genlink::groebner::with_pair_budget;
use genlink::ideal::{codimension, hilbert_series, is_saturated};
use genlink::linkage::{
    generic_link, link_sequence, run_link_checks, Annotations, CheckOutcome, SequenceStep,
};
use genlink::multiplier::{
    lct, multiplier_ideal, nonlc_locus, nonlc_locus_affine, projective_lct,
    projective_multiplier_ideal,
};
use genlink::resolution::{depth_info, minimal_free_resolution, regularity_from_betti};
use genlink::{
    parse_ring_file, Error, Field, FieldSpec, Ideal, MonomialOrder, ParsedFile, RingFile,
    DEFAULT_PRIME,
};
use num_rational::Rational64;

use args::{Cli, Command, Common, MonoOp};
use report::*;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::BudgetExceeded { .. }) => 4,
            CliError::Core(Error::Genericity { .. }) => 3,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    Rationals,
    Prime(u32),
}

/// `--char` wins; otherwise the declared prime, with QQ files run over F_32003.
pub fn choose_field(declared: FieldSpec, flag: Option<u64>) -> CliResult<FieldChoice> {
    Ok(match (flag, declared) {
        (Some(0), _) => FieldChoice::Rationals,
        (Some(p), _) => match FieldSpec::prime(p)? {
            FieldSpec::Prime(p) => FieldChoice::Prime(p),
            FieldSpec::Rationals => unreachable!(),
        },
        (None, FieldSpec::Prime(p)) => FieldChoice::Prime(p),
        (None, FieldSpec::Rationals) => FieldChoice::Prime(DEFAULT_PRIME),
    })
}

/// Runs `$body` with `$f` bound to the chosen field.
#[macro_export]
macro_rules! with_field {
    ($choice:expr, |$f:ident| $body:expr) => {
        match $choice {
            $crate::FieldChoice::Prime(p) => {
                let $f = genlink::PrimeField::new(p)?;
                $body
            }
            $crate::FieldChoice::Rationals => {
                let $f = genlink::Rationals;
                $body
            }
        }
    };
}

pub struct Loaded<F: Field> {
    pub file: ParsedFile<F>,
    /// The first ideal of the file.
    pub ix: Ideal<F>,
}

pub fn read_ring_file(path: &Path) -> CliResult<RingFile> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    parse_ring_file(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn load<F: Field>(rf: &RingFile, field: F, order: MonomialOrder) -> CliResult<Loaded<F>> {
    let mut file = rf.build(field)?;
    if order != MonomialOrder::Grevlex {
        let ring = file.ring.with_order(order);
        for (_, polys) in file.ideals.iter_mut() {
            for p in polys.iter_mut() {
                *p = p.to_ring(&ring);
            }
        }
        file.ring = ring;
    }
    let gens = file
        .ideals
        .first()
        .map(|(_, g)| g.clone())
        .ok_or_else(|| CliError::Usage("the file declares no ideal".into()))?;
    let ix = Ideal::new(&file.ring, gens);
    Ok(Loaded { file, ix })
}

fn elapsed(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

fn write_out(path: Option<&Path>, json: &str) -> CliResult<()> {
    if let Some(p) = path {
        std::fs::write(p, json).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn print_checks(out: &mut dyn Write, checks: &[CheckOutcome]) {
    for c in checks {
        let status = serde_json::to_value(c.status).unwrap();
        let status = status.as_str().unwrap_or("?");
        let _ = write!(out, "[{status}] {}", c.name);
        if let Some(r) = c.details.get("reason") {
            let _ = write!(out, " ({r})");
        }
        let _ = writeln!(out);
    }
}

fn any_failed(checks: &[CheckOutcome]) -> bool {
    checks.iter().any(|c| c.failed())
}

/// Degree additivity and CM propagation along a link sequence.
pub fn sequence_checks(trace: &[SequenceStep]) -> Vec<CheckOutcome> {
    let mut additive = true;
    let mut detail = Vec::new();
    for w in trace.windows(2) {
        let v: u64 = w[1].degrees.iter().product();
        let sum = w[0].degree + w[1].degree;
        additive &= sum == v;
        detail.push(format!("{}+{}={}", w[0].degree, w[1].degree, v));
    }
    let cm: Vec<bool> = trace.iter().filter_map(|s| s.cohen_macaulay).collect();
    let propagated = cm.windows(2).all(|w| w[0] == w[1]);
    vec![
        CheckOutcome::new("sequence_degree_additivity", additive).with("steps", detail.join(" ")),
        CheckOutcome::new("sequence_cm_propagation", propagated).with(
            "cm",
            cm.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(","),
        ),
    ]
}

/// `Σ (-1)^i β_ij t^j / (1-t)^n` equals the Hilbert series of `S/I`.
pub fn betti_hilbert_check<F: Field>(ix: &Ideal<F>) -> CliResult<CheckOutcome> {
    const NAME: &str = "betti_hilbert_identity";
    if !ix.is_homogeneous() {
        return Ok(CheckOutcome::skipped(NAME, "inhomogeneous input"));
    }
    let betti = minimal_free_resolution(ix)?.betti();
    let from_betti = betti.hilbert_series(ix.ring().nvars());
    let direct = hilbert_series(ix)?;
    Ok(CheckOutcome::new(NAME, from_betti == direct)
        .with("from_betti", &from_betti)
        .with("from_leading_terms", &direct))
}

fn cmd_gb<F: Field>(common: &Common, rf: &RingFile, field: F, out: &mut dyn Write) -> CliResult<i32> {
    let t = Instant::now();
    let l = load(rf, field, common.order.into())?;
    let mut bases = Vec::new();
    for (name, gens) in &l.file.ideals {
        let gb = Ideal::new(&l.file.ring, gens.clone()).groebner()?;
        bases.push((name.clone(), gb.elements().to_vec()));
    }
    let text = genlink::parse::print_ring_file(&l.file.name, &l.file.ring, &bases);
    let _ = write!(out, "{text}");
    let report = GbReport {
        version: VERSION.into(),
        input: InputInfo::new(&l.file, &l.ix),
        order: format!("{:?}", common.order).to_lowercase(),
        bases: bases
            .iter()
            .map(|(n, g)| (n.clone(), g.iter().map(|p| p.to_string()).collect()))
            .collect(),
        timing_ms: elapsed(t),
    };
    write_out(common.out.as_deref(), &to_json(&report))?;
    Ok(0)
}

fn cmd_res<F: Field>(common: &Common, rf: &RingFile, field: F, out: &mut dyn Write) -> CliResult<i32> {
    let t = Instant::now();
    let l = load(rf, field, common.order.into())?;
    let res = minimal_free_resolution(&l.ix)?;
    let betti = res.betti();
    let proper = !l.ix.is_unit()?;
    let reg = if proper && is_saturated(&l.ix)? { Some(regularity_from_betti(&betti)) } else { None };
    let cm = match codimension(&l.ix)? {
        Some(c) => Some(depth_info(l.ix.ring().nvars(), &betti, c).cohen_macaulay),
        None => None,
    };
    let _ = write!(out, "{betti}");
    match reg {
        Some(r) => {
            let _ = writeln!(out, "regularity: {r}");
        }
        None => {
            let _ = writeln!(out, "regularity: undefined (ideal not saturated or not proper)");
        }
    }
    let _ = writeln!(out, "projective dimension: {}", betti.length());
    if let Some(cm) = cm {
        let _ = writeln!(out, "cohen-macaulay: {cm}");
    }
    let report = ResolutionReport {
        version: VERSION.into(),
        input: InputInfo::new(&l.file, &l.ix),
        betti: betti.triples(),
        regularity: reg,
        projective_dimension: betti.length(),
        cohen_macaulay: cm,
        timing_ms: elapsed(t),
    };
    write_out(common.out.as_deref(), &to_json(&report))?;
    Ok(0)
}

/// Builds the report of one `link` invocation.
pub fn link_report<F: Field>(
    l: &Loaded<F>,
    situation: genlink::Situation,
    seed: u64,
    betti: bool,
) -> CliResult<LinkReport> {
    let t = Instant::now();
    let link = generic_link(&l.ix, situation, seed)?;
    let checks = run_link_checks(&l.ix, &link, &Annotations::default(), betti)?;
    Ok(LinkReport {
        version: VERSION.into(),
        seed,
        input: InputInfo::new(&l.file, &l.ix),
        link: LinkInfo::new(&link),
        checks,
        timing_ms: elapsed(t),
    })
}

fn cmd_link<F: Field>(
    common: &Common,
    rf: &RingFile,
    field: F,
    situation: genlink::Situation,
    seed: u64,
    betti: bool,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let l = load(rf, field, common.order.into())?;
    let report = link_report(&l, situation, seed, betti)?;
    let link = &report.link;
    let degs: Vec<String> = link.degrees.iter().map(|d| d.to_string()).collect();
    let _ = writeln!(
        out,
        "situation {} degrees ({}) seed {} retries {}",
        link.situation,
        degs.join(","),
        seed,
        link.retries
    );
    let _ = writeln!(out, "I_V = {}", link.iv_gens.join(", "));
    let _ = writeln!(out, "I_Y = {}{}", link.iy_gens.join(", "), if link.empty { "  (empty link)" } else { "" });
    print_checks(out, &report.checks);
    write_out(common.out.as_deref(), &to_json(&report))?;
    Ok(if any_failed(&report.checks) { 1 } else { 0 })
}

fn cmd_seq<F: Field>(
    common: &Common,
    rf: &RingFile,
    field: F,
    seed: u64,
    steps: usize,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let t = Instant::now();
    let l = load(rf, field, common.order.into())?;
    let trace = link_sequence(&l.ix, steps, seed)?;
    let checks = sequence_checks(&trace);
    for s in &trace {
        let degs: Vec<String> = s.degrees.iter().map(|d| d.to_string()).collect();
        if s.empty {
            let _ = writeln!(out, "step {}: degrees ({}) empty link", s.step, degs.join(","));
            continue;
        }
        let _ = write!(
            out,
            "step {}: degrees ({}) degree {} reg {} cm {}",
            s.step,
            degs.join(","),
            s.degree,
            s.regularity.map_or("-".into(), |r| r.to_string()),
            s.cohen_macaulay.map_or("-".into(), |b| b.to_string()),
        );
        if let Some(q) = s.lct {
            let _ = write!(out, " lct {q}");
        }
        let _ = writeln!(out);
    }
    print_checks(out, &checks);
    let report = SequenceReport {
        version: VERSION.into(),
        seed,
        input: InputInfo::new(&l.file, &l.ix),
        steps: trace.iter().map(StepInfo::from).collect(),
        checks: checks.clone(),
        timing_ms: elapsed(t),
    };
    write_out(common.out.as_deref(), &to_json(&report))?;
    Ok(if any_failed(&checks) { 1 } else { 0 })
}

pub fn parse_rational(s: &str) -> CliResult<Rational64> {
    let q: Rational64 = s
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{s:?} is not a rational number")))?;
    if q < Rational64::from(0) {
        return Err(CliError::Usage(format!("coefficient {s} is negative")));
    }
    Ok(q)
}

fn cmd_mono<F: Field>(
    common: &Common,
    rf: &RingFile,
    field: F,
    op: MonoOp,
    c: Option<&str>,
    affine: bool,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let t = Instant::now();
    let l = load(rf, field, common.order.into())?;
    let m = l
        .ix
        .as_monomial()
        .ok_or(Error::NonMonomial { op: "mono" })?;
    let projective = !affine;
    let ring = l.ix.ring();
    let need_c = || -> CliResult<Rational64> {
        parse_rational(c.ok_or_else(|| CliError::Usage("this operation needs --c".into()))?)
    };
    let (name, coeff, result, dimension) = match op {
        MonoOp::Lct => {
            let q = if projective { projective_lct(&m)? } else { lct(&m)? };
            ("lct", None, q.to_string(), None)
        }
        MonoOp::Multiplier => {
            let q = need_c()?;
            let j = if projective { projective_multiplier_ideal(&m, q)? } else { multiplier_ideal(&m, q)? };
            ("multiplier", Some(q), Ideal::from_monomial(ring, &j).to_string(), None)
        }
        MonoOp::Nonlc => {
            let q = need_c()?;
            let z = if projective { nonlc_locus(&m, q)? } else { nonlc_locus_affine(&m, q)? };
            let dim = z.dimension.map_or("empty".to_string(), |d| d.to_string());
            ("nonlc", Some(q), Ideal::from_monomial(ring, &z.ideal).to_string(), Some(dim))
        }
    };
    let _ = writeln!(out, "{result}");
    if let Some(d) = &dimension {
        let _ = writeln!(out, "dimension: {d}");
    }
    let report = MonoReport {
        version: VERSION.into(),
        input: InputInfo::new(&l.file, &l.ix),
        operation: name.into(),
        projective,
        c: coeff.map(|q| q.to_string()),
        result,
        dimension,
        timing_ms: elapsed(t),
    };
    write_out(common.out.as_deref(), &to_json(&report))?;
    Ok(0)
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    if let Command::Corpus { common, seed, parallel, betti } = &cli.command {
        let opts = corpus::RunOptions {
            seed: *seed,
            parallel: (*parallel).max(1),
            characteristic: common.characteristic,
            order: common.order.into(),
            budget: common.budget,
            betti: *betti,
        };
        let manifest = manifest::Manifest::load(&common.input)?;
        let base = common.input.parent().unwrap_or(Path::new(".")).to_path_buf();
        let report = corpus::corpus_run(&manifest, &base, &opts);
        corpus::print_summary(out, &report);
        for e in report.entries.iter().filter(|e| e.error.is_some()) {
            let _ = writeln!(err, "{}: {}", e.name, e.error.as_deref().unwrap_or_default());
        }
        write_out(common.out.as_deref(), &to_json(&report))?;
        let s = &report.summary;
        return Ok(if s.failed_entries + s.error_entries > 0 { 1 } else { 0 });
    }
    let common = match &cli.command {
        Command::Gb(c) | Command::Res(c) => c,
        Command::Link { common, .. } | Command::Seq { common, .. } | Command::Mono { common, .. } => common,
        Command::Corpus { .. } => unreachable!(),
    };
    let rf = read_ring_file(&common.input)?;
    let choice = choose_field(rf.field, common.characteristic)?;
    let mut run = || -> CliResult<i32> {
        with_field!(choice, |field| match &cli.command {
            Command::Gb(c) => cmd_gb(c, &rf, field, out),
            Command::Res(c) => cmd_res(c, &rf, field, out),
            Command::Link { common, situation, seed, betti } => {
                cmd_link(common, &rf, field, *situation, *seed, *betti, out)
            }
            Command::Seq { common, seed, steps } => cmd_seq(common, &rf, field, *seed, *steps, out),
            Command::Mono { op, common, c, affine } => {
                cmd_mono(common, &rf, field, *op, c.as_deref(), *affine, out)
            }
            Command::Corpus { .. } => unreachable!(),
        })
    };
    match common.budget {
        Some(b) => with_pair_budget(b, run),
        None => run(),
    }
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run_command<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

