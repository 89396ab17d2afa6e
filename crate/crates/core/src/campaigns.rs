//! Verification campaigns: the units of work behind `steinberg verify`.
//!
//! Each campaign returns a [`Report`]. Checks whose outcome does not depend
//! on the characteristic live in the `*_shared` functions so that
//! [`all`] can run them exactly once.

use rayon::prelude::*;

use crate::breps::build_rep_str;
use crate::bwb::{euler_char, psupp, verify_table, CohomologyTable};
use crate::data::{self, DataError};
use crate::field::Characteristic;
use crate::liealg::{cn_ideal_reduction, demazure_checks, identity_suite, span_check};
use crate::report::{Entry, Report, Status};
use crate::steinberg::{
    cross_characteristic_check, gl_special_fibre_check, hilbert_cross_check, krull_dim_checks, min_gen_check,
    mnm_membership_check, parametrization_check, relative_generators_check, span17_check, verify_multiplicities,
    IdealCase, QValue, Tag,
};
use crate::weights::{class_kernel_generator, class_reduce, self_dual_classes, ClassGroupElement, Weight};

/// Characteristics used when a campaign is run without `--char`.
pub const DEFAULT_CHARS: [u64; 3] = [0, 5, 7];
/// Identities are additionally checked over `F_11`.
pub const IDENTITY_CHARS: [u64; 4] = [0, 5, 7, 11];
/// Residue characteristics for the cohomology tables.
pub const TABLE_CHARS: [u64; 2] = [5, 7];
pub const DEFAULT_TRIALS: u32 = 200;
pub const DEFAULT_SEED: u64 = 1;

fn chr(l: u64) -> Characteristic {
    Characteristic::new(l).expect("built-in characteristic is prime")
}

fn data_error(id: &str, e: DataError) -> Report {
    let mut r = Report::new();
    r.push(Entry::new(id, Status::Fail, "readable data file", e.to_string(), "shipped data"));
    r
}

const CHI_CLAIMS: [(&str, &str); 3] =
    [("b*b", "-[V(0,0)]"), ("wedge^2(b)", "-[V(0,0)]"), ("wedge^2(b)*b", "2[V(1,1)] - [V(0,0)]")];

const PSUPP_REP: &str = "wedge^2(b)*b";
const PSUPP_CLAIMS: [&str; 4] = ["{(0,0)^2}", "{(0,0)^10}", "{(0,0)^14, (1,1)^2}", "{(0,0)^7}"];

/// Both cohomology tables and the `psupp` values of `wedge^2(b) * b`, in
/// residue characteristic `l`.
pub fn bwb_tables(l: Characteristic) -> Report {
    let mut report = Report::new();
    for name in [data::TABLE1, data::TABLE2] {
        let file = match data::load(name) {
            Ok(f) => f,
            Err(e) => {
                report.extend(data_error(&format!("bwb.l{l}.{name}"), e));
                continue;
            }
        };
        match CohomologyTable::parse(&file.contents) {
            Ok(t) => {
                let mut r = verify_table(&t, l);
                for e in &mut r.entries {
                    e.check_id = format!("bwb.l{l}.{}", e.check_id.trim_start_matches("bwb."));
                }
                report.extend(r);
            }
            Err(e) => report.push(Entry::new(
                format!("bwb.l{l}.{name}"),
                Status::Fail,
                "parsable table",
                e.to_string(),
                "shipped cohomology table",
            )),
        }
    }
    let v = build_rep_str(PSUPP_REP).expect("built-in expression");
    for (i, want) in PSUPP_CLAIMS.iter().enumerate() {
        let id = format!("bwb.l{l}.psupp.{PSUPP_REP}.i{i}");
        report.timed(|| {
            let got = match psupp(&v, i as u32, l) {
                Ok(m) => m.to_string(),
                Err(e) => e.to_string(),
            };
            vec![Entry::compare(id, want, got, "weights of the l-singular part of H^i")]
        });
    }
    report
}

/// Euler characteristics, which do not depend on `l`.
pub fn bwb_shared() -> Report {
    let mut report = Report::new();
    for (rep, want) in CHI_CLAIMS {
        report.timed(|| {
            let got = build_rep_str(rep).map(|v| euler_char(&v).to_string()).unwrap_or_else(|e| e.to_string());
            vec![Entry::compare(format!("bwb.chi.{rep}"), want, got, "alternating sum of cohomology")]
        });
    }
    report
}

/// Tensor identities and the hypotheses of the Demazure-type extension steps.
pub fn identities(l: Characteristic) -> Report {
    let mut report = identity_suite(l);
    report.extend(demazure_checks(l));
    report
}

pub fn span(l: Characteristic) -> Report {
    span_check(l)
}

/// Options of `verify ideal` that do not vary with the characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealOptions {
    pub tag: Tag,
    pub bound: u32,
    pub trials: u32,
    pub seed: u64,
    pub q: QValue,
}

impl IdealOptions {
    pub fn new(tag: Tag) -> Self {
        IdealOptions { tag, bound: default_bound(tag), trials: DEFAULT_TRIALS, seed: DEFAULT_SEED, q: QValue::Value(1) }
    }
}

/// Degree bound used by [`all`].
pub fn default_bound(tag: Tag) -> u32 {
    match tag {
        Tag::N2 => 6,
        Tag::N3Z => 5,
        _ => 3,
    }
}

fn padded(claim: &[u64], bound: u32) -> Vec<u64> {
    (0..=bound as usize).map(|k| claim.get(k).copied().unwrap_or(0)).collect()
}

/// Checks of one ideal case in one characteristic.
pub fn ideal_in(opts: &IdealOptions, l: Characteristic) -> Report {
    let mut report = Report::new();
    let case = IdealCase::new(opts.tag);
    match opts.tag {
        Tag::N2 => {
            report.extend(min_gen_check(&case, opts.bound, l, &padded(&[0, 0, 6], opts.bound)));
            report.extend(hilbert_cross_check(opts.tag, opts.bound, l));
        }
        Tag::N3Z => {
            report.extend(min_gen_check(&case, opts.bound, l, &padded(&[0, 0, 3, 36], opts.bound)));
            report.extend(hilbert_cross_check(opts.tag, opts.bound, l));
            report.extend(mnm_membership_check(l));
            report.extend(span17_check(l));
        }
        Tag::N3X => report.extend(relative_generators_check(opts.bound, l)),
        Tag::GlN2 => report.extend(gl_special_fibre_check(2, l)),
        Tag::GlN3 => report.extend(gl_special_fibre_check(3, l)),
        Tag::Cnil => {
            report.extend(cn_ideal_reduction(opts.q, l, 3));
            report.extend(cn_ideal_reduction(opts.q, l, 2));
        }
    }
    report
}

/// Checks of one ideal case that are independent of the characteristic.
pub fn ideal_shared(opts: &IdealOptions) -> Report {
    let mut report = parametrization_check(&IdealCase::new(opts.tag).with_q(opts.q), opts.trials, opts.seed, &[]);
    if opts.tag == Tag::N3Z {
        let chars: Vec<_> = DEFAULT_CHARS.iter().map(|&l| chr(l)).collect();
        report.extend(cross_characteristic_check(opts.tag, opts.bound, &chars));
    }
    report
}

pub fn ideal(opts: &IdealOptions, l: Characteristic) -> Report {
    let mut report = ideal_in(opts, l);
    report.extend(ideal_shared(opts));
    report
}

pub fn dims(l: Characteristic) -> Report {
    krull_dim_checks(l)
}

pub fn multiplicities() -> Report {
    verify_multiplicities().unwrap_or_else(|e| data_error("multiplicity.data", e))
}

/// Kernel of the class map on a box and the self-dual classes for `rho`.
pub fn classgroup() -> Report {
    let mut report = Report::new();
    report.timed(|| {
        let zero = ClassGroupElement::new(0, 0);
        let g = class_kernel_generator();
        let (mut kernel, mut outside) = (0usize, Vec::new());
        for a in -30..=30 {
            for b in -30..=30 {
                let w = Weight::new(a, b);
                if class_reduce(w) == zero {
                    kernel += 1;
                    if a % g.a != 0 || Weight::new(a, b) != (a / g.a) * g {
                        outside.push(w.to_string());
                    }
                }
            }
        }
        let actual = if outside.is_empty() {
            format!("<{g}>, {kernel} points")
        } else {
            format!("not cyclic on <{g}>: {}", outside.join(", "))
        };
        let expected = format!("<{}>, 21 points", Weight::new(3, -3));
        let self_dual: Vec<String> =
            self_dual_classes(Weight::RHO).iter().map(|w| class_reduce(*w).to_string()).collect();
        let mut want: Vec<ClassGroupElement> =
            [Weight::L1, -Weight::L3, 2 * Weight::L1 + Weight::L3].into_iter().map(class_reduce).collect();
        want.sort_by_key(|c| c.torsion_part);
        let want: Vec<String> = want.iter().map(ToString::to_string).collect();
        vec![
            Entry::compare("classgroup.kernel", expected, actual, "kernel of the class map on a -30..30 box"),
            Entry::compare(
                "classgroup.self-dual.rho",
                want.join(", "),
                self_dual.join(", "),
                "classes fixed by the duality twisted by rho",
            ),
        ]
    });
    report
}

type Job = Box<dyn Fn() -> Report + Send + Sync>;

fn jobs() -> Vec<Job> {
    let mut jobs: Vec<Job> = vec![Box::new(bwb_shared), Box::new(multiplicities), Box::new(classgroup)];
    for l in TABLE_CHARS {
        jobs.push(Box::new(move || bwb_tables(chr(l))));
    }
    for l in IDENTITY_CHARS {
        jobs.push(Box::new(move || identities(chr(l))));
    }
    for l in DEFAULT_CHARS {
        jobs.push(Box::new(move || span(chr(l))));
    }
    for l in DEFAULT_CHARS {
        jobs.push(Box::new(move || dims(chr(l))));
    }
    for tag in Tag::ALL {
        jobs.push(Box::new(move || ideal_shared(&IdealOptions::new(tag))));
        for l in DEFAULT_CHARS {
            jobs.push(Box::new(move || ideal_in(&IdealOptions::new(tag), chr(l))));
        }
    }
    jobs.push(Box::new(|| ideal_in(&IdealOptions { q: QValue::Symbolic, ..IdealOptions::new(Tag::Cnil) }, chr(0))));
    jobs
}

/// Every campaign, on a pool of `threads` workers; entries sorted by id.
pub fn all(threads: usize) -> Report {
    let jobs = jobs();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build().expect("thread pool");
    let parts: Vec<Report> = pool.install(|| jobs.par_iter().map(|j| j()).collect());
    let mut report = Report::new();
    for p in parts {
        report.extend(p);
    }
    report.sort();
    report
}
