//! Corpus manifests (TOML).
//!
//! ```toml
//! [[entry]]
//! name = "twisted_cubic"
//! file = "twisted_cubic.ideal"
//! situation = "C"
//! links = 2
//! steps = 2
//! [entry.annotations]
//! lct_x = { value = "2", note = "smooth curve of codimension 2" }
//! ```

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use genlink::linkage::{Annotations, Situation};
use num_rational::Rational64;
use serde::Deserialize;

use crate::CliError;

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(rename = "entry", default)]
    pub entries: Vec<Entry>,
}

fn default_situation() -> String {
    "C".into()
}

fn one() -> usize {
    1
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub name: String,
    pub file: PathBuf,
    #[serde(default = "default_situation")]
    pub situation: String,
    /// Number of independently seeded links.
    #[serde(default = "one")]
    pub links: usize,
    /// Length of the link sequence; 0 skips it.
    #[serde(default)]
    pub steps: usize,
    #[serde(default)]
    pub annotations: EntryAnnotations,
}

/// A curated value and where it comes from.
#[derive(Deserialize, Debug, Clone, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Annotated<T> {
    pub value: T,
    pub note: String,
}

#[derive(Deserialize, Debug, Clone, Default, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct EntryAnnotations {
    pub lct_x: Option<Annotated<String>>,
    pub lct_y: Option<Annotated<String>>,
    pub regularity_hypothesis: Option<Annotated<bool>>,
    pub degree: Option<Annotated<u64>>,
    pub regularity: Option<Annotated<i64>>,
    pub complete_intersection: Option<Annotated<bool>>,
}

fn rational(s: &Annotated<String>, key: &str) -> Result<Rational64, CliError> {
    s.value
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("annotation {key}: {:?} is not a rational", s.value)))
}

impl EntryAnnotations {
    pub fn to_core(&self) -> Result<Annotations, CliError> {
        Ok(Annotations {
            lct_x: self.lct_x.as_ref().map(|a| rational(a, "lct_x")).transpose()?,
            lct_y: self.lct_y.as_ref().map(|a| rational(a, "lct_y")).transpose()?,
            regularity_hypothesis: self.regularity_hypothesis.as_ref().map(|a| a.value),
        })
    }

    fn notes(&self) -> Vec<(&'static str, &str)> {
        let mut v = Vec::new();
        if let Some(a) = &self.lct_x {
            v.push(("lct_x", a.note.as_str()));
        }
        if let Some(a) = &self.lct_y {
            v.push(("lct_y", a.note.as_str()));
        }
        if let Some(a) = &self.regularity_hypothesis {
            v.push(("regularity_hypothesis", a.note.as_str()));
        }
        if let Some(a) = &self.degree {
            v.push(("degree", a.note.as_str()));
        }
        if let Some(a) = &self.regularity {
            v.push(("regularity", a.note.as_str()));
        }
        if let Some(a) = &self.complete_intersection {
            v.push(("complete_intersection", a.note.as_str()));
        }
        v
    }
}

impl Entry {
    pub fn situation(&self) -> Result<Situation, CliError> {
        self.situation.parse().map_err(CliError::Core)
    }
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let m: Manifest = toml::from_str(text).map_err(|e| CliError::Usage(format!("manifest: {e}")))?;
        m.validate()?;
        Ok(m)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Unique names, known situations, parseable rationals, a note on every annotation.
    pub fn validate(&self) -> Result<(), CliError> {
        let mut seen = BTreeSet::new();
        for e in &self.entries {
            if !seen.insert(e.name.as_str()) {
                return Err(CliError::Usage(format!("duplicate corpus entry {:?}", e.name)));
            }
            e.situation()?;
            e.annotations.to_core()?;
            for (key, note) in e.annotations.notes() {
                if note.trim().is_empty() {
                    return Err(CliError::Usage(format!(
                        "entry {:?}: annotation {key} has no provenance note",
                        e.name
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_validates() {
        let m = Manifest::parse(
            r#"
[[entry]]
name = "a"
file = "a.ideal"
[entry.annotations]
lct_x = { value = "5/6", note = "cusp" }

[[entry]]
name = "b"
file = "b.ideal"
situation = "B"
links = 3
"#,
        )
        .unwrap();
        assert_eq!(m.entries.len(), 2);
        assert_eq!(m.entries[0].links, 1);
        assert_eq!(m.entries[0].annotations.to_core().unwrap().lct_x, Some(Rational64::new(5, 6)));
        assert_eq!(m.entries[1].situation().unwrap(), Situation::B);
    }

    #[test]
    fn rejects_bad_manifests() {
        let dup = "[[entry]]\nname = \"a\"\nfile = \"x\"\n[[entry]]\nname = \"a\"\nfile = \"y\"\n";
        assert!(Manifest::parse(dup).is_err());
        let no_note = "[[entry]]\nname = \"a\"\nfile = \"x\"\n[entry.annotations]\ndegree = { value = 3, note = \" \" }\n";
        assert!(Manifest::parse(no_note).is_err());
        let bad_sit = "[[entry]]\nname = \"a\"\nfile = \"x\"\nsituation = \"A\"\n";
        assert!(Manifest::parse(bad_sit).is_err());
        assert!(Manifest::parse("[[entry]]\nname = \"a\"\n").is_err());
    }
}
