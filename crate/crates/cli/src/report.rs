use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::Path;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Hex encoding of the canonical form, or the Kupisch series and module
    /// for the Nakayama suites.
    pub canonical: String,
    pub algebra: String,
    pub implication: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub bounds: BTreeMap<String, u64>,
    pub counts: BTreeMap<String, u64>,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
    pub version: String,
}

impl VerificationReport {
    pub fn new(suite: &str, bounds: BTreeMap<String, u64>) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            bounds,
            counts: BTreeMap::new(),
            counterexamples: Vec::new(),
            notes: Vec::new(),
            passed: true,
            wall_time_ms: None,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn bump(&mut self, key: &str) {
        *self.counts.entry(key.to_string()).or_insert(0) += 1;
    }

    pub fn count(&self, key: &str) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub fn fail(&mut self, canonical: String, algebra: String, implication: &str) {
        self.counterexamples.push(Counterexample {
            canonical,
            algebra,
            implication: implication.to_string(),
        });
        self.passed = false;
    }

    pub fn failures_of(&self, implication: &str) -> usize {
        self.counterexamples
            .iter()
            .filter(|c| c.implication == implication)
            .count()
    }

    /// Adds counts and counterexamples of `other` (same suite) in order.
    pub fn absorb(&mut self, other: VerificationReport) {
        for (k, v) in other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
        self.passed &= other.passed;
        self.counterexamples.extend(other.counterexamples);
        self.notes.extend(other.notes);
    }

    /// JSON with keys sorted at every level.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    /// One row per count, plus the outcome.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["suite", "key", "value"]).expect("in-memory write");
        for (k, v) in &self.counts {
            w.write_record([self.suite.as_str(), k.as_str(), &v.to_string()])
                .expect("in-memory write");
        }
        w.write_record([
            self.suite.as_str(),
            "counterexamples",
            &self.counterexamples.len().to_string(),
        ])
        .expect("in-memory write");
        w.write_record([self.suite.as_str(), "passed", &self.passed.to_string()])
            .expect("in-memory write");
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

/// Writes next to the destination, then renames, so an interrupted run never
/// leaves a partial file behind.
pub fn write_atomically(path: &Path, contents: &str) -> io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".partial");
    let tmp = Path::new(&tmp);
    fs::write(tmp, contents)?;
    fs::rename(tmp, path)
}
