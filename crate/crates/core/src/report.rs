//! Check entries and their aggregation.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    NotDecidable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::NotDecidable => "not-decidable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub check_id: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    /// Names the claim being checked.
    pub anchor: String,
    pub elapsed_ms: u64,
}

impl Entry {
    pub fn new(
        check_id: impl Into<String>,
        status: Status,
        expected: impl Into<String>,
        actual: impl Into<String>,
        anchor: impl Into<String>,
    ) -> Entry {
        Entry {
            check_id: check_id.into(),
            status,
            expected: expected.into(),
            actual: actual.into(),
            anchor: anchor.into(),
            elapsed_ms: 0,
        }
    }

    /// Pass iff `expected == actual` as printed.
    pub fn compare(
        check_id: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
        anchor: impl Into<String>,
    ) -> Entry {
        let (e, a) = (expected.to_string(), actual.to_string());
        let status = if e == a { Status::Pass } else { Status::Fail };
        Entry::new(check_id, status, e, a, anchor)
    }

    pub fn with_elapsed(mut self, ms: u64) -> Entry {
        self.elapsed_ms = ms;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub not_decidable: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, e: Entry) {
        self.entries.push(e);
    }

    /// Runs `f`, stamping every entry it produces with the elapsed time.
    pub fn timed(&mut self, f: impl FnOnce() -> Vec<Entry>) {
        let start = Instant::now();
        let entries = f();
        let ms = start.elapsed().as_millis() as u64;
        self.entries.extend(entries.into_iter().map(|e| e.with_elapsed(ms)));
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    /// Orders entries by check id; ties keep insertion order.
    pub fn sort(&mut self) {
        self.entries.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for e in &self.entries {
            match e.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
                Status::NotDecidable => s.not_decidable += 1,
            }
        }
        s
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn get(&self, check_id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.check_id == check_id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }
}

/// Version of the JSON report layout.
pub const SCHEMA: u32 = 1;

#[derive(Serialize)]
struct Document<'a> {
    schema: u32,
    tool: &'static str,
    version: &'static str,
    command: &'a str,
    seed: Option<u64>,
    summary: Summary,
    entries: &'a [Entry],
}

impl Report {
    /// Sets every `elapsed_ms` to zero so that output is reproducible.
    pub fn zero_timings(&mut self) {
        for e in &mut self.entries {
            e.elapsed_ms = 0;
        }
    }

    pub fn to_json(&self, command: &str, seed: Option<u64>) -> String {
        let doc = Document {
            schema: SCHEMA,
            tool: "steinberg",
            version: env!("CARGO_PKG_VERSION"),
            command,
            seed,
            summary: self.summary(),
            entries: &self.entries,
        };
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }

    pub fn to_markdown(&self, command: &str, seed: Option<u64>) -> String {
        let cell = |s: &str| s.replace('|', "\\|").replace('\n', "<br>");
        let s = self.summary();
        let mut out = format!("# steinberg {command}\n\n");
        if let Some(seed) = seed {
            out.push_str(&format!("seed: {seed}\n\n"));
        }
        out.push_str(&format!(
            "{} pass, {} fail, {} skipped, {} not decidable\n\n",
            s.pass, s.fail, s.skipped, s.not_decidable
        ));
        out.push_str("| check | status | expected | actual | claim | ms |\n|---|---|---|---|---|---|\n");
        for e in &self.entries {
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} |\n",
                cell(&e.check_id),
                e.status,
                cell(&e.expected),
                cell(&e.actual),
                cell(&e.anchor),
                e.elapsed_ms
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_and_ordering() {
        let mut r = Report::new();
        r.push(Entry::compare("b", 1, 1, "x"));
        r.push(Entry::compare("a", 1, 2, "x"));
        r.push(Entry::new("c", Status::Skipped, "", "", "x"));
        r.sort();
        assert_eq!(r.entries[0].check_id, "a");
        assert_eq!(r.summary(), Summary { pass: 1, fail: 1, skipped: 1, not_decidable: 0 });
        assert!(!r.passed());
        assert_eq!(serde_json::to_string(&Status::NotDecidable).unwrap(), "\"not-decidable\"");
    }

    #[test]
    fn rendering() {
        let mut r = Report::new();
        r.push(Entry::compare("x", "a|b", "a|b", "claim").with_elapsed(5));
        r.zero_timings();
        let json: serde_json::Value = serde_json::from_str(&r.to_json("verify x", Some(3))).unwrap();
        assert_eq!(json["schema"], 1);
        assert_eq!(json["seed"], 3);
        assert_eq!(json["entries"][0]["elapsed_ms"], 0);
        assert_eq!(json["summary"]["pass"], 1);
        assert!(r.to_markdown("verify x", None).contains("| x | pass | a\\|b | a\\|b | claim | 0 |"));
    }
}
