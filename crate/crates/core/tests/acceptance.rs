//! Acceptance criteria 1 to 11, one status line each.
//!
//! Every criterion is a list of sub-claims, each backed by report entries.
//! Three sub-claims do not hold for the shipped implementation and are
//! listed in `KNOWN_DEFECTS` with the value actually computed; the test
//! asserts that the failing set is exactly that list, so a regression or an
//! unexpected fix both show up.

use std::collections::BTreeSet;
use std::process::Command;

use steinberg_core::breps::{build_rep_str, weight_multiplicity};
use steinberg_core::campaigns::{self, IdealOptions};
use steinberg_core::field::Characteristic;
use steinberg_core::liealg::{cn_ideal_reduction, demazure_checks, identity_suite, span_check};
use steinberg_core::report::{Entry, Report, Status};
use steinberg_core::steinberg::{
    cross_characteristic_check, hilbert_cross_check, krull_dim_checks, min_gen_check, mnm_membership_check,
    parametrization_check, relative_generators_check, span17_check, IdealCase, QValue, Tag,
};
use steinberg_core::weights::Weight;

/// `(check id, value computed instead of the claimed one)`.
const KNOWN_DEFECTS: [(&str, &str); 3] = [
    ("bwb.chi.wedge^2(b)*b", "2[V(1,1)] + [V(0,0)]"),
    ("bwb.l5.psupp.wedge^2(b)*b.i3", "{(0,0)^5}"),
    ("cnil.n3.symbolic.char0", "1 nonzero: C[1,3] = -c*d*q + e*q^2 + a*f - e*q"),
];

fn chr(l: u64) -> Characteristic {
    Characteristic::new(l).unwrap()
}

struct Criterion {
    number: u32,
    title: &'static str,
    entries: Vec<Entry>,
}

impl Criterion {
    fn new(number: u32, title: &'static str) -> Self {
        Criterion { number, title, entries: Vec::new() }
    }

    fn add(&mut self, r: Report) -> &mut Self {
        assert!(!r.entries.is_empty(), "criterion {} got an empty report", self.number);
        self.entries.extend(r.entries);
        self
    }

    fn claim(&mut self, id: &str, expected: impl ToString, actual: impl ToString) -> &mut Self {
        self.entries.push(Entry::compare(id, expected, actual, self.title));
        self
    }

    fn failures(&self) -> Vec<&Entry> {
        self.entries.iter().filter(|e| e.status != Status::Pass).collect()
    }
}

/// Entries must pass, except rows a table leaves undetermined.
fn only_rows_skipped(r: Report) -> Report {
    for e in &r.entries {
        if e.status == Status::Skipped {
            assert!(e.check_id.contains(".j4."), "unexpected skip {}", e.check_id);
        }
    }
    Report { entries: r.entries.into_iter().filter(|e| e.status != Status::Skipped).collect() }
}

fn criteria() -> Vec<Criterion> {
    let mut out = Vec::new();

    let mut c = Criterion::new(1, "cohomology tables and Euler characteristics");
    let tables = campaigns::bwb_tables(chr(5));
    let rows = Report { entries: tables.entries.iter().filter(|e| !e.check_id.contains(".psupp.")).cloned().collect() };
    c.add(only_rows_skipped(rows)).add(campaigns::bwb_shared());
    out.push(c);

    let mut c = Criterion::new(2, "psupp of wedge^2(b) (x) b");
    c.add(Report { entries: tables.entries.into_iter().filter(|e| e.check_id.contains(".psupp.")).collect() });
    out.push(c);

    let mut c = Criterion::new(3, "Lie-algebra identities");
    for l in [0, 5, 7, 11] {
        c.add(identity_suite(chr(l)));
    }
    c.add(span_check(chr(0)));
    let demazure = demazure_checks(chr(0));
    for id in ["demazure.char0.minus-3rho-multiplicity", "demazure.char0.e-alpha-squared"] {
        c.entries.push(demazure.get(id).unwrap_or_else(|| panic!("missing {id}")).clone());
    }
    let w = build_rep_str("wedge^2(b)*wedge^2(b)").unwrap();
    c.claim("weights.minus-3rho", 2, weight_multiplicity(&w, -3 * Weight::RHO));
    out.push(c);

    let mut c = Criterion::new(4, "n = 2 presentation");
    for l in [0, 5] {
        c.add(min_gen_check(&IdealCase::new(Tag::N2), 5, chr(l), &[0, 0, 6, 0, 0, 0]));
    }
    c.add(hilbert_cross_check(Tag::N2, 6, chr(0)));
    out.push(c);

    let mut c = Criterion::new(5, "n = 3 presentation");
    for l in [0, 5, 7] {
        c.add(min_gen_check(&IdealCase::new(Tag::N3Z), 5, chr(l), &[0, 0, 3, 36, 0, 0]));
    }
    let mnm = mnm_membership_check(chr(0));
    assert_eq!(mnm.entries.iter().filter(|e| e.check_id.contains(".MNM[")).count(), 9);
    c.add(mnm);
    c.add(hilbert_cross_check(Tag::N3Z, 5, chr(0)));
    c.add(cross_characteristic_check(Tag::N3Z, 5, &[chr(0), chr(5), chr(7)]));
    out.push(c);

    let mut c = Criterion::new(6, "commutator layer");
    c.add(relative_generators_check(3, chr(0)));
    out.push(c);

    let mut c = Criterion::new(7, "17-dimensional span and invariant factors");
    for l in [0, 5] {
        c.add(span17_check(chr(l)));
    }
    out.push(c);

    let mut c = Criterion::new(8, "parametrization containment");
    for tag in [Tag::N3Z, Tag::N3X, Tag::GlN2, Tag::GlN3] {
        let r = parametrization_check(&IdealCase::new(tag), 200, campaigns::DEFAULT_SEED, &[]);
        assert!(r.get(&format!("ideal.{tag}.sz-bound")).is_some());
        c.add(r);
    }
    c.add(cn_ideal_reduction(QValue::Symbolic, chr(0), 3));
    out.push(c);

    let mut c = Criterion::new(9, "Krull dimensions");
    let dims = krull_dim_checks(chr(0));
    assert_eq!(dims.entries.len(), 4);
    c.add(dims);
    out.push(c);

    let mut c = Criterion::new(10, "class group and multiplicities");
    c.add(campaigns::classgroup()).add(campaigns::multiplicities());
    out.push(c);

    let mut c = Criterion::new(11, "determinism");
    for args in determinism_commands() {
        let (a, b) = (run(&args), run(&args));
        c.claim(
            &format!("determinism.{}", args.join(" ")),
            "identical",
            if a == b { "identical" } else { "different" },
        );
    }
    out.push(c);
    out
}

fn determinism_commands() -> Vec<Vec<&'static str>> {
    let base = ["--format", "json", "--deterministic"];
    let cmds: [&[&str]; 9] = [
        &["verify", "all", "--jobs", "4"],
        &["verify", "bwb-tables", "--l", "5"],
        &["verify", "ideal", "--case", "gl-n3", "--char", "5", "--seed", "11", "--trials", "50"],
        &["verify", "ideal", "--case", "cnil", "--char", "0", "--symbolic", "--seed", "3"],
        &["verify", "multiplicities"],
        &["verify", "classgroup"],
        &["compute", "chi", "--rep", "wedge^2(b)*b"],
        &["compute", "psupp", "--rep", "wedge^2(b)*b", "--i", "2", "--l", "5"],
        &["compute", "hilbert", "--case", "n3-z", "--degree-bound", "4"],
    ];
    cmds.iter().map(|c| c.iter().chain(&base).copied().collect()).collect()
}

fn run(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_steinberg")).args(args).output().unwrap();
    assert!(matches!(out.status.code(), Some(0 | 1)), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

#[test]
fn acceptance() {
    let known: BTreeSet<&str> = KNOWN_DEFECTS.iter().map(|(id, _)| *id).collect();
    let mut failing = BTreeSet::new();
    for c in criteria() {
        let failures = c.failures();
        let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
        let detail: Vec<String> = failures
            .iter()
            .map(|e| {
                let tag = if known.contains(e.check_id.as_str()) { "known defect" } else { "UNEXPECTED" };
                format!("{} [{tag}] expected {} got {}", e.check_id, e.expected, e.actual)
            })
            .collect();
        println!("criterion {:>2} {:<45} {verdict} ({} checks)", c.number, c.title, c.entries.len());
        for d in detail {
            println!("    {d}");
        }
        for e in failures {
            failing.insert(e.check_id.clone());
            if let Some((_, actual)) = KNOWN_DEFECTS.iter().find(|(id, _)| *id == e.check_id) {
                assert_eq!(e.actual, *actual, "{} changed", e.check_id);
            }
        }
    }
    let failing: BTreeSet<&str> = failing.iter().map(String::as_str).collect();
    assert_eq!(failing, known);
}

#[test]
fn all_is_the_union_of_the_campaigns() {
    let all = campaigns::all(4);
    let mut parts = Report::new();
    parts.extend(campaigns::bwb_shared());
    parts.extend(campaigns::multiplicities());
    parts.extend(campaigns::classgroup());
    for l in campaigns::TABLE_CHARS {
        parts.extend(campaigns::bwb_tables(chr(l)));
    }
    for l in campaigns::IDENTITY_CHARS {
        parts.extend(campaigns::identities(chr(l)));
    }
    for l in campaigns::DEFAULT_CHARS {
        parts.extend(campaigns::span(chr(l)));
        parts.extend(campaigns::dims(chr(l)));
    }
    for tag in Tag::ALL {
        let opts = IdealOptions::new(tag);
        parts.extend(campaigns::ideal_shared(&opts));
        for l in campaigns::DEFAULT_CHARS {
            parts.extend(campaigns::ideal_in(&opts, chr(l)));
        }
    }
    parts.extend(campaigns::ideal_in(&IdealOptions { q: QValue::Symbolic, ..IdealOptions::new(Tag::Cnil) }, chr(0)));
    parts.sort();
    let ids = |r: &Report| r.entries.iter().map(|e| e.check_id.clone()).collect::<Vec<_>>();
    let (a, b) = (ids(&all), ids(&parts));
    assert_eq!(a, b);
    assert_eq!(a.iter().collect::<BTreeSet<_>>().len(), a.len(), "duplicate check ids");
}
