//! `steinberg`: run verification campaigns and one-off computations.
//!
//! `--rep` takes a rep expression:
//!
//! ```text
//! expr   := term (('+' | '⊕') term)*
//! term   := unary (('*' | '⊗') unary)*
//! unary  := ('wedge' | 'Λ' | '') '^' INT '(' expr ')'
//!         | ('sym' | 'S') '^' INT '(' expr ')'
//!         | 'dual' '(' expr ')'
//!         | ('tw' | 'twist') '(' INT ',' INT ')' '(' expr ')'
//!         | atom | '(' expr ')'
//! atom   := 'b' | 'n' | 'g' | 'g/b' | 'F' | 'F' '(' INT ',' INT ')'
//! ```
//!
//! Exit status: 0 when no check fails, 1 when one does, 2 on usage errors.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::json;

use steinberg_core::breps::{build_rep, RepExpr};
use steinberg_core::bwb::{euler_char, psupp};
use steinberg_core::campaigns::{self, IdealOptions, DEFAULT_CHARS, IDENTITY_CHARS};
use steinberg_core::field::Characteristic;
use steinberg_core::polyalg::{parse_int_matrix, snf};
use steinberg_core::report::{Report, SCHEMA};
use steinberg_core::steinberg::{gb_hilbert, QValue, Tag};

#[derive(Parser)]
#[command(
    name = "steinberg",
    version,
    about = "Exact checks for SL3 flag-variety cohomology and commuting-pair ideals"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Markdown, global = true)]
    format: Format,
    /// Report every elapsed_ms as 0.
    #[arg(long, global = true)]
    deterministic: bool,
    /// Worker threads for `verify all`.
    #[arg(long, default_value_t = 1, global = true)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification campaigns.
    #[command(subcommand)]
    Verify(Verify),
    /// Compute a single quantity.
    #[command(subcommand)]
    Compute(Compute),
}

#[derive(Subcommand)]
enum Verify {
    /// Every campaign.
    All,
    /// Cohomology tables and psupp of wedge^2(b)*b.
    BwbTables {
        #[arg(long, default_value = "5")]
        l: Characteristic,
    },
    /// Tensor identities in Lambda^2 b (x) Lambda^2 b and extension hypotheses.
    Identities(CharArg),
    /// Weight-space span in Lambda^2 b (x) Lambda^2 b.
    Span(CharArg),
    /// Presentation checks for one ideal.
    Ideal(IdealArgs),
    /// Krull dimensions.
    Dims(CharArg),
    /// The multiplicity table.
    Multiplicities,
    /// Class-group kernel and self-dual classes.
    Classgroup,
}

#[derive(Args)]
struct CharArg {
    /// 0 or a prime; all default characteristics when omitted.
    #[arg(long = "char")]
    chr: Option<Characteristic>,
}

#[derive(Args)]
struct IdealArgs {
    #[arg(long)]
    case: Tag,
    #[arg(long = "char")]
    chr: Option<Characteristic>,
    #[arg(long)]
    degree_bound: Option<u32>,
    #[arg(long, default_value_t = campaigns::DEFAULT_TRIALS)]
    trials: u32,
    #[arg(long, default_value_t = campaigns::DEFAULT_SEED)]
    seed: u64,
    /// Keep q as a ring variable (cnil).
    #[arg(long, conflicts_with = "q")]
    symbolic: bool,
    /// Fixed value of q (cnil).
    #[arg(long)]
    q: Option<i64>,
}

#[derive(Subcommand)]
enum Compute {
    /// Euler characteristic in the Grothendieck group.
    Chi {
        #[arg(long)]
        rep: RepExpr,
    },
    /// Weights of V whose line bundles contribute to H^i in characteristic l.
    Psupp {
        #[arg(long)]
        rep: RepExpr,
        #[arg(long)]
        i: u32,
        #[arg(long)]
        l: Characteristic,
    },
    /// Hilbert function of an ideal through a degree bound.
    Hilbert {
        #[arg(long)]
        case: Tag,
        #[arg(long)]
        degree_bound: u32,
        #[arg(long = "char", default_value = "0")]
        chr: Characteristic,
    },
    /// Smith normal form of an integer matrix read from a file.
    Snf {
        #[arg(long)]
        file: std::path::PathBuf,
    },
}

fn usage(kind: ErrorKind, msg: impl std::fmt::Display) -> ! {
    Cli::command().error(kind, msg).exit()
}

fn chars(given: Option<Characteristic>, default: &[u64]) -> Vec<Characteristic> {
    match given {
        Some(l) => vec![l],
        None => default.iter().map(|&l| Characteristic::new(l).expect("prime")).collect(),
    }
}

fn verify(v: Verify, jobs: usize) -> (String, Option<u64>, Report) {
    let mut report = Report::new();
    let (name, seed) = match v {
        Verify::All => {
            report = campaigns::all(jobs);
            ("verify all".to_string(), Some(campaigns::DEFAULT_SEED))
        }
        Verify::BwbTables { l } => {
            if (1..5).contains(&l.get()) {
                usage(ErrorKind::InvalidValue, format!("the tables need l = 0 or l >= 5, got '--l {l}'"));
            }
            report.extend(campaigns::bwb_tables(l));
            report.extend(campaigns::bwb_shared());
            (format!("verify bwb-tables --l {l}"), None)
        }
        Verify::Identities(c) => {
            for l in chars(c.chr, &IDENTITY_CHARS) {
                report.extend(campaigns::identities(l));
            }
            ("verify identities".to_string(), None)
        }
        Verify::Span(c) => {
            for l in chars(c.chr, &DEFAULT_CHARS) {
                report.extend(campaigns::span(l));
            }
            ("verify span".to_string(), None)
        }
        Verify::Ideal(a) => {
            let mut opts = IdealOptions::new(a.case);
            if let Some(d) = a.degree_bound {
                opts.bound = d;
            }
            opts.trials = a.trials;
            opts.seed = a.seed;
            if a.symbolic || a.q.is_some() {
                if a.case != Tag::Cnil {
                    let flag = if a.symbolic { "--symbolic" } else { "--q" };
                    usage(ErrorKind::ArgumentConflict, format!("'{flag}' only applies to '--case cnil'"));
                }
                opts.q = if a.symbolic { QValue::Symbolic } else { QValue::Value(a.q.unwrap_or(1)) };
            }
            let ls = chars(a.chr, &DEFAULT_CHARS);
            for &l in &ls {
                if (1..5).contains(&l.get()) {
                    usage(
                        ErrorKind::InvalidValue,
                        format!("case '{}' needs characteristic 0 or >= 5, got '--char {l}'", a.case),
                    );
                }
            }
            for &l in &ls {
                report.extend(campaigns::ideal_in(&opts, l));
            }
            report.extend(campaigns::ideal_shared(&opts));
            (format!("verify ideal --case {}", a.case), Some(opts.seed))
        }
        Verify::Dims(c) => {
            for l in chars(c.chr, &DEFAULT_CHARS) {
                report.extend(campaigns::dims(l));
            }
            ("verify dims".to_string(), None)
        }
        Verify::Multiplicities => {
            report.extend(campaigns::multiplicities());
            ("verify multiplicities".to_string(), None)
        }
        Verify::Classgroup => {
            report.extend(campaigns::classgroup());
            ("verify classgroup".to_string(), None)
        }
    };
    report.sort();
    (name, seed, report)
}

fn compute(c: Compute) -> (String, serde_json::Value, String) {
    match c {
        Compute::Chi { rep } => {
            let v = build_rep(&rep).unwrap_or_else(|e| usage(ErrorKind::InvalidValue, format!("'{rep}': {e}")));
            let chi = euler_char(&v).to_string();
            ("compute chi".into(), json!({ "rep": rep.to_string() }), chi)
        }
        Compute::Psupp { rep, i, l } => {
            let v = build_rep(&rep).unwrap_or_else(|e| usage(ErrorKind::InvalidValue, format!("'{rep}': {e}")));
            let p = psupp(&v, i, l).unwrap_or_else(|e| usage(ErrorKind::InvalidValue, format!("'--i {i}': {e}")));
            ("compute psupp".into(), json!({ "rep": rep.to_string(), "i": i, "l": l.get() }), p.to_string())
        }
        Compute::Hilbert { case, degree_bound, chr } => {
            let dims = gb_hilbert(case, degree_bound, chr).unwrap_or_else(|e| {
                usage(ErrorKind::InvalidValue, format!("'--case {case}' with '--char {chr}': {e}"))
            });
            let input = json!({ "case": case.to_string(), "degree_bound": degree_bound, "char": chr.get() });
            ("compute hilbert".into(), input, dims.to_string())
        }
        Compute::Snf { file } => {
            let shown = file.display().to_string();
            let text =
                std::fs::read_to_string(&file).unwrap_or_else(|e| usage(ErrorKind::Io, format!("'{shown}': {e}")));
            let m =
                parse_int_matrix(&text).unwrap_or_else(|e| usage(ErrorKind::InvalidValue, format!("'{shown}': {e}")));
            let factors: Vec<String> = snf(&m).iter().map(ToString::to_string).collect();
            ("compute snf".into(), json!({ "file": shown }), format!("[{}]", factors.join(", ")))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(v) => {
            let (name, seed, mut report) = verify(v, cli.jobs);
            if cli.deterministic {
                report.zero_timings();
            }
            match cli.format {
                Format::Json => println!("{}", report.to_json(&name, seed)),
                Format::Markdown => print!("{}", report.to_markdown(&name, seed)),
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Compute(c) => {
            let (name, input, result) = compute(c);
            match cli.format {
                Format::Json => {
                    let doc = json!({
                        "schema": SCHEMA,
                        "tool": "steinberg",
                        "version": env!("CARGO_PKG_VERSION"),
                        "command": name,
                        "input": input,
                        "result": result,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).expect("serializes"));
                }
                Format::Markdown => println!("{result}"),
            }
            ExitCode::SUCCESS
        }
    }
}
