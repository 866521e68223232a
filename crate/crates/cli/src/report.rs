//! JSON report shapes. Polynomials are strings in the ideal-file grammar and
//! rationals are strings `p/q`.

use genlink::linkage::{CheckOutcome, LinkResult, SequenceStep};
use genlink::{Field, Ideal, ParsedFile};
use serde::Serialize;
use sha2::{Digest, Sha256};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct InputInfo {
    pub ring: String,
    pub ideal: Vec<String>,
    pub digest: String,
}

impl InputInfo {
    pub fn new<F: Field>(file: &ParsedFile<F>, ix: &Ideal<F>) -> Self {
        let text = file.print();
        let ring = text.lines().next().unwrap_or_default().to_string();
        InputInfo {
            ring,
            ideal: ix.gens().iter().map(|g| g.to_string()).collect(),
            digest: hex::encode(Sha256::digest(text.as_bytes())),
        }
    }
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct LinkInfo {
    pub situation: String,
    pub degrees: Vec<u64>,
    #[serde(rename = "IV_gens")]
    pub iv_gens: Vec<String>,
    #[serde(rename = "IY_gens")]
    pub iy_gens: Vec<String>,
    pub empty: bool,
    pub retries: usize,
}

impl LinkInfo {
    pub fn new<F: Field>(link: &LinkResult<F>) -> Self {
        let gens = |i: &Ideal<F>| i.gens().iter().map(|g| g.to_string()).collect();
        LinkInfo {
            situation: link.situation.to_string(),
            degrees: link.degrees.clone(),
            iv_gens: gens(&link.iv),
            iy_gens: if link.empty { vec!["1".into()] } else { gens(&link.iy) },
            empty: link.empty,
            retries: link.retries,
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct LinkReport {
    pub version: String,
    pub seed: u64,
    pub input: InputInfo,
    pub link: LinkInfo,
    pub checks: Vec<CheckOutcome>,
    pub timing_ms: u64,
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct StepInfo {
    pub step: usize,
    pub degrees: Vec<u64>,
    pub empty: bool,
    pub degree: u64,
    pub regularity: Option<i64>,
    pub cohen_macaulay: Option<bool>,
    pub generator_degrees: Vec<u64>,
    pub lct: Option<String>,
    pub retries: usize,
    pub generators: Vec<String>,
}

impl From<&SequenceStep> for StepInfo {
    fn from(s: &SequenceStep) -> Self {
        StepInfo {
            step: s.step,
            degrees: s.degrees.clone(),
            empty: s.empty,
            degree: s.degree,
            regularity: s.regularity,
            cohen_macaulay: s.cohen_macaulay,
            generator_degrees: s.generator_degrees.clone(),
            lct: s.lct.map(|q| q.to_string()),
            retries: s.retries,
            generators: s.generators.clone(),
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct SequenceReport {
    pub version: String,
    pub seed: u64,
    pub input: InputInfo,
    pub steps: Vec<StepInfo>,
    pub checks: Vec<CheckOutcome>,
    pub timing_ms: u64,
}

#[derive(Serialize, Clone, Debug)]
pub struct ResolutionReport {
    pub version: String,
    pub input: InputInfo,
    /// `(i, j, β_ij)` of `S/I`.
    pub betti: Vec<(usize, i64, usize)>,
    pub regularity: Option<i64>,
    pub projective_dimension: usize,
    pub cohen_macaulay: Option<bool>,
    pub timing_ms: u64,
}

#[derive(Serialize, Clone, Debug)]
pub struct GbReport {
    pub version: String,
    pub input: InputInfo,
    pub order: String,
    pub bases: Vec<(String, Vec<String>)>,
    pub timing_ms: u64,
}

#[derive(Serialize, Clone, Debug)]
pub struct MonoReport {
    pub version: String,
    pub input: InputInfo,
    pub operation: String,
    pub projective: bool,
    pub c: Option<String>,
    pub result: String,
    pub dimension: Option<String>,
    pub timing_ms: u64,
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct EntryLink {
    pub link: LinkInfo,
    pub checks: Vec<CheckOutcome>,
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct EntryReport {
    pub name: String,
    pub file: String,
    pub seed: u64,
    pub status: String,
    pub error: Option<String>,
    pub input: Option<InputInfo>,
    pub checks: Vec<CheckOutcome>,
    pub links: Vec<EntryLink>,
    pub sequence: Vec<StepInfo>,
}

impl EntryReport {
    pub fn all_checks(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().chain(self.links.iter().flat_map(|l| l.checks.iter()))
    }
}

#[derive(Serialize, Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub entries: usize,
    pub passed_entries: usize,
    pub failed_entries: usize,
    pub error_entries: usize,
    pub links: usize,
    pub checks_pass: usize,
    pub checks_fail: usize,
    pub checks_skipped: usize,
}

#[derive(Serialize, Clone, Debug)]
pub struct CorpusReport {
    pub version: String,
    pub seed: u64,
    pub entries: Vec<EntryReport>,
    pub summary: Summary,
    pub timing_ms: u64,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}
