//! Manifest runner: one isolated task per entry, results in manifest order.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use genlink::groebner::with_pair_budget;
use genlink::ideal::{degree, is_complete_intersection};
use genlink::linkage::{generic_link, link_sequence, run_link_checks, CheckOutcome, CheckStatus, Situation};
use genlink::resolution::regularity;
use genlink::{Field, MonomialOrder};

use crate::manifest::{Entry, Manifest};
use crate::report::*;
use crate::{betti_hilbert_check, choose_field, load, read_ring_file, sequence_checks, with_field, CliResult};

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub seed: u64,
    pub parallel: usize,
    pub characteristic: Option<u64>,
    pub order: MonomialOrder,
    pub budget: Option<u64>,
    pub betti: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            seed: 42,
            parallel: 1,
            characteristic: None,
            order: MonomialOrder::Grevlex,
            budget: None,
            betti: false,
        }
    }
}

pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Seed of a corpus entry, independent of its position in the manifest.
pub fn entry_seed(base: u64, name: &str) -> u64 {
    splitmix64(base ^ fnv1a(name))
}

/// Seed of the `k`-th link of an entry.
pub fn link_seed(entry: u64, k: usize) -> u64 {
    if k == 0 {
        entry
    } else {
        splitmix64(entry.wrapping_add(k as u64))
    }
}

fn expectation_checks<F: Field>(entry: &Entry, ix: &genlink::Ideal<F>) -> CliResult<Vec<CheckOutcome>> {
    let a = &entry.annotations;
    let mut out = Vec::new();
    if let Some(d) = &a.degree {
        let got = degree(ix)?.value;
        out.push(
            CheckOutcome::new("expected_degree", got == d.value)
                .with("expected", d.value)
                .with("computed", got)
                .with("note", &d.note),
        );
    }
    if let Some(r) = &a.regularity {
        let got = regularity(ix)?;
        out.push(
            CheckOutcome::new("expected_regularity", got == r.value)
                .with("expected", r.value)
                .with("computed", got)
                .with("note", &r.note),
        );
    }
    if let Some(ci) = &a.complete_intersection {
        let got = is_complete_intersection(ix)?;
        out.push(
            CheckOutcome::new("expected_complete_intersection", got == ci.value)
                .with("expected", ci.value)
                .with("computed", got)
                .with("note", &ci.note),
        );
    }
    Ok(out)
}

struct EntryBody {
    input: InputInfo,
    checks: Vec<CheckOutcome>,
    links: Vec<EntryLink>,
    sequence: Vec<StepInfo>,
}

fn run_entry_in<F: Field>(
    entry: &Entry,
    rf: &genlink::RingFile,
    field: F,
    seed: u64,
    opts: &RunOptions,
) -> CliResult<EntryBody> {
    let l = load(rf, field, opts.order)?;
    let situation = entry.situation()?;
    let notes = entry.annotations.to_core()?;
    let mut checks = vec![betti_hilbert_check(&l.ix)?];
    checks.extend(expectation_checks(entry, &l.ix)?);
    let mut links = Vec::new();
    for k in 0..entry.links {
        let link = generic_link(&l.ix, situation, link_seed(seed, k))?;
        let cs = run_link_checks(&l.ix, &link, &notes, opts.betti)?;
        links.push(EntryLink { link: LinkInfo::new(&link), checks: cs });
    }
    let mut sequence = Vec::new();
    if entry.steps > 0 {
        if situation != Situation::C {
            checks.push(CheckOutcome::skipped("sequence", "link sequences use situation C"));
        } else {
            let trace = link_sequence(&l.ix, entry.steps, seed)?;
            checks.extend(sequence_checks(&trace));
            sequence = trace.iter().map(StepInfo::from).collect();
        }
    }
    Ok(EntryBody {
        input: InputInfo::new(&l.file, &l.ix),
        checks,
        links,
        sequence,
    })
}

fn run_entry(entry: &Entry, base: &Path, seed: u64, opts: &RunOptions) -> CliResult<EntryBody> {
    let rf = read_ring_file(&base.join(&entry.file))?;
    let choice = choose_field(rf.field, opts.characteristic)?;
    let go = || -> CliResult<EntryBody> { with_field!(choice, |field| run_entry_in(entry, &rf, field, seed, opts)) };
    match opts.budget {
        Some(b) => with_pair_budget(b, go),
        None => go(),
    }
}

fn panic_message(p: Box<dyn std::any::Any + Send>) -> String {
    if let Some(s) = p.downcast_ref::<&str>() {
        s.to_string()
    } else if let Some(s) = p.downcast_ref::<String>() {
        s.clone()
    } else {
        "unknown panic".into()
    }
}

/// Runs one entry; errors and panics become an `error` entry.
pub fn entry_report(entry: &Entry, base: &Path, base_seed: u64, opts: &RunOptions) -> EntryReport {
    let seed = entry_seed(base_seed, &entry.name);
    let result = catch_unwind(AssertUnwindSafe(|| run_entry(entry, base, seed, opts)));
    let mut rep = EntryReport {
        name: entry.name.clone(),
        file: entry.file.display().to_string(),
        seed,
        status: String::new(),
        error: None,
        input: None,
        checks: Vec::new(),
        links: Vec::new(),
        sequence: Vec::new(),
    };
    match result {
        Ok(Ok(body)) => {
            rep.input = Some(body.input);
            rep.checks = body.checks;
            rep.links = body.links;
            rep.sequence = body.sequence;
            let failed = rep.all_checks().any(|c| c.failed());
            rep.status = if failed { "fail" } else { "pass" }.into();
        }
        Ok(Err(e)) => {
            rep.status = "error".into();
            rep.error = Some(e.to_string());
        }
        Err(p) => {
            rep.status = "error".into();
            rep.error = Some(format!("panic: {}", panic_message(p)));
        }
    }
    rep
}

pub fn summarize(entries: &[EntryReport]) -> Summary {
    let mut s = Summary {
        entries: entries.len(),
        ..Default::default()
    };
    for e in entries {
        match e.status.as_str() {
            "pass" => s.passed_entries += 1,
            "fail" => s.failed_entries += 1,
            _ => s.error_entries += 1,
        }
        s.links += e.links.len();
        for c in e.all_checks() {
            match c.status {
                CheckStatus::Pass => s.checks_pass += 1,
                CheckStatus::Fail => s.checks_fail += 1,
                CheckStatus::Skipped => s.checks_skipped += 1,
            }
        }
    }
    s
}

/// Runs every entry with up to `opts.parallel` worker threads.
pub fn corpus_run(manifest: &Manifest, base: &Path, opts: &RunOptions) -> CorpusReport {
    let t = Instant::now();
    let n = manifest.entries.len();
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<EntryReport>>> = Mutex::new(vec![None; n]);
    let workers = opts.parallel.clamp(1, n.max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            std::thread::Builder::new()
                .stack_size(64 << 20)
                .spawn_scoped(s, || loop {
                    let k = next.fetch_add(1, Ordering::SeqCst);
                    if k >= n {
                        break;
                    }
                    let rep = entry_report(&manifest.entries[k], base, opts.seed, opts);
                    slots.lock().unwrap()[k] = Some(rep);
                })
                .expect("spawn corpus worker");
        }
    });
    let entries: Vec<EntryReport> = slots
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("every entry ran"))
        .collect();
    CorpusReport {
        version: VERSION.into(),
        seed: opts.seed,
        summary: summarize(&entries),
        entries,
        timing_ms: t.elapsed().as_millis() as u64,
    }
}

pub fn print_summary(out: &mut dyn Write, r: &CorpusReport) {
    for e in &r.entries {
        let (mut p, mut f, mut s) = (0, 0, 0);
        for c in e.all_checks() {
            match c.status {
                CheckStatus::Pass => p += 1,
                CheckStatus::Fail => f += 1,
                CheckStatus::Skipped => s += 1,
            }
        }
        let _ = writeln!(
            out,
            "{:<24} {:<5} links {:>2}  checks {p} pass / {f} fail / {s} skipped",
            e.name,
            e.status,
            e.links.len()
        );
        for c in e.all_checks().filter(|c| c.failed()) {
            let _ = writeln!(out, "    failed: {} {:?}", c.name, c.details);
        }
    }
    let s = &r.summary;
    let _ = writeln!(
        out,
        "entries {} ({} pass, {} fail, {} error), links {}, checks {} pass / {} fail / {} skipped",
        s.entries, s.passed_entries, s.failed_entries, s.error_entries, s.links, s.checks_pass, s.checks_fail, s.checks_skipped
    );
}
