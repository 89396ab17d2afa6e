//! Cohomology tables: text format and consistency verification.
//!
//! ```text
//! # free-form header comments
//! @table wedge-b
//! @family wedge-b wedge^{j}(b)
//! wedge-b 0 0 V(0,0)
//! wedge-b 0 1 0
//! wedge-b 4 2 ?
//! wedge-b 3 2 V(1,1)^4 + V(0,0)^4
//! ```
//!
//! An entry line is `<family> <j> <i> <payload>`, where the payload is `0`,
//! `?` (unknown), or a sum of `V(a,b)` terms with optional `^m` multiplicity.
//! Entries are printed grouped by family in declaration order, then by `j`
//! and `i`; a file in that canonical form round-trips byte for byte.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use crate::breps::{build_rep, RepExpr, WeightMultiset};
use crate::field::Characteristic;
use crate::report::{Entry, Report, Status};
use crate::weights::Weight;

use super::{bwb_good, euler_char, psupp, GrothendieckElement};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub name: String,
    /// Rep expression with `{j}` standing for the row index.
    pub template: String,
}

impl Family {
    pub fn expr(&self, j: u32) -> RepExpr {
        RepExpr::parse(&self.template.replace("{j}", &j.to_string())).expect("template validated at parse time")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Claim {
    Known(GrothendieckElement),
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    pub name: String,
    pub comments: Vec<String>,
    pub families: Vec<Family>,
    /// `(family index, j, i) -> claim`
    pub entries: BTreeMap<(usize, u32, u32), Claim>,
}

fn parse_payload(s: &str) -> Result<Claim, String> {
    match s {
        "?" => return Ok(Claim::Unknown),
        "0" => return Ok(Claim::Known(GrothendieckElement::zero())),
        _ => {}
    }
    let mut g = GrothendieckElement::zero();
    for term in s.split(" + ") {
        let (head, mult) = match term.split_once('^') {
            Some((h, m)) => (h, m.parse::<i64>().map_err(|_| format!("bad multiplicity in '{term}'"))?),
            None => (term, 1),
        };
        let inner = head
            .strip_prefix("V(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| format!("expected V(a,b), found '{head}'"))?;
        let (a, b) = inner.split_once(',').ok_or_else(|| format!("expected V(a,b), found '{head}'"))?;
        let w = Weight::new(
            a.trim().parse().map_err(|_| format!("bad weight in '{head}'"))?,
            b.trim().parse().map_err(|_| format!("bad weight in '{head}'"))?,
        );
        if !w.is_dominant() {
            return Err(format!("{w} is not dominant"));
        }
        if mult <= 0 {
            return Err(format!("multiplicity must be positive in '{term}'"));
        }
        g.add_term(w, mult);
    }
    Ok(Claim::Known(g))
}

fn print_payload(c: &Claim) -> String {
    match c {
        Claim::Unknown => "?".to_string(),
        Claim::Known(g) if g.is_zero() => "0".to_string(),
        Claim::Known(g) => g
            .iter()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .map(|(w, m)| if m == 1 { format!("V({},{})", w.a, w.b) } else { format!("V({},{})^{m}", w.a, w.b) })
            .collect::<Vec<_>>()
            .join(" + "),
    }
}

impl CohomologyTable {
    pub fn parse(text: &str) -> Result<CohomologyTable, TableError> {
        let mut t = CohomologyTable {
            name: String::new(),
            comments: Vec::new(),
            families: Vec::new(),
            entries: BTreeMap::new(),
        };
        let mut in_header = true;
        for (n, line) in text.lines().enumerate() {
            let err = |message: String| TableError::Syntax { line: n + 1, message };
            if line.starts_with('#') {
                if in_header {
                    t.comments.push(line.to_string());
                }
                continue;
            }
            in_header = false;
            if line.trim().is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("@table ") {
                t.name = rest.trim().to_string();
            } else if let Some(rest) = line.strip_prefix("@family ") {
                let (name, template) =
                    rest.trim().split_once(' ').ok_or_else(|| err("expected '@family <name> <template>'".into()))?;
                RepExpr::parse(&template.replace("{j}", "0")).map_err(|e| err(e.to_string()))?;
                t.families.push(Family { name: name.to_string(), template: template.to_string() });
            } else if line.starts_with('@') {
                return Err(err(format!("unknown directive '{line}'")));
            } else {
                let mut parts = line.splitn(4, ' ');
                let fam = parts.next().unwrap_or_default();
                let fi = t
                    .families
                    .iter()
                    .position(|f| f.name == fam)
                    .ok_or_else(|| err(format!("undeclared family '{fam}'")))?;
                let mut num = |what: &str| -> Result<u32, TableError> {
                    parts.next().and_then(|s| s.parse().ok()).ok_or_else(|| err(format!("expected {what}")))
                };
                let j = num("row index j")?;
                let i = num("degree i")?;
                if i > 3 {
                    return Err(err(format!("degree {i} out of range 0..=3")));
                }
                let payload = parts.next().ok_or_else(|| err("missing payload".into()))?;
                let claim = parse_payload(payload).map_err(err)?;
                if t.entries.insert((fi, j, i), claim).is_some() {
                    return Err(err(format!("duplicate entry {fam} {j} {i}")));
                }
            }
        }
        if t.name.is_empty() {
            return Err(TableError::Syntax { line: 0, message: "missing @table directive".into() });
        }
        Ok(t)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.comments {
            s.push_str(c);
            s.push('\n');
        }
        let _ = writeln!(s, "@table {}", self.name);
        for f in &self.families {
            let _ = writeln!(s, "@family {} {}", f.name, f.template);
        }
        for (&(fi, j, i), c) in &self.entries {
            let _ = writeln!(s, "{} {j} {i} {}", self.families[fi].name, print_payload(c));
        }
        s
    }

    /// Distinct `(family index, j)` rows.
    pub fn rows(&self) -> Vec<(usize, u32)> {
        let mut rows: Vec<(usize, u32)> = self.entries.keys().map(|&(f, j, _)| (f, j)).collect();
        rows.dedup();
        rows
    }

    /// Claims of one row indexed by degree; missing degrees are zero.
    pub fn row(&self, family: usize, j: u32) -> [Claim; 4] {
        std::array::from_fn(|i| {
            self.entries.get(&(family, j, i as u32)).cloned().unwrap_or(Claim::Known(GrothendieckElement::zero()))
        })
    }

    pub fn set(&mut self, family: &str, j: u32, i: u32, claim: Claim) {
        let fi = self.families.iter().position(|f| f.name == family).expect("declared family");
        self.entries.insert((fi, j, i), claim);
    }
}

fn psupp_violations(claim: &GrothendieckElement, support: &WeightMultiset) -> Vec<String> {
    claim
        .iter()
        .filter(|&(w, c)| c > support.multiplicity(w) as i64)
        .map(|(w, c)| format!("V{w}^{c} > {}", support.multiplicity(w)))
        .collect()
}

/// Checks every row of `table` in characteristic `l`: (a) vanishing where the
/// potential support is empty, (b) claimed multiplicities bounded by the
/// potential support, (c) alternating sum equal to the Euler characteristic.
pub fn verify_table(table: &CohomologyTable, l: Characteristic) -> Report {
    let mut report = Report::new();
    for (fi, j) in table.rows() {
        let fam = &table.families[fi];
        let id = |check: &str| format!("bwb.{}.{}.j{j}.{check}", table.name, fam.name);
        let start = Instant::now();
        let expr = fam.expr(j);
        let anchor = format!("{} row j={j}: {}", table.name, expr);
        let row = table.row(fi, j);
        if row.contains(&Claim::Unknown) {
            report.push(Entry::new(id("row"), Status::Skipped, "known row", "row has unknown entries", &anchor));
            continue;
        }
        let claims: Vec<GrothendieckElement> = row
            .into_iter()
            .map(|c| match c {
                Claim::Known(g) => g,
                Claim::Unknown => unreachable!(),
            })
            .collect();
        let v = match build_rep(&expr) {
            Ok(v) => v,
            Err(e) => {
                report.push(Entry::new(id("row"), Status::Fail, "evaluable representation", e.to_string(), &anchor));
                continue;
            }
        };
        if let Err(bad) = bwb_good(&v, l) {
            report.push(Entry::new(
                id("row"),
                Status::NotDecidable,
                format!("BWB-good for l={l}"),
                format!("weights outside the locus: {bad}"),
                &anchor,
            ));
            continue;
        }
        let supports: Vec<WeightMultiset> = (0..4).map(|i| psupp(&v, i, l).expect("BWB-good checked")).collect();

        let vanishing: Vec<String> = (0..4)
            .filter(|&i| supports[i].is_empty() && !claims[i].is_zero())
            .map(|i| format!("H^{i} = {} but psupp^{i} is empty", claims[i]))
            .collect();
        let bound: Vec<String> = (0..4)
            .flat_map(|i| psupp_violations(&claims[i], &supports[i]).into_iter().map(move |s| format!("H^{i}: {s}")))
            .collect();
        let negative: Vec<String> = (0..4)
            .filter(|&i| !claims[i].is_effective())
            .map(|i| format!("H^{i} = {} has a negative coefficient", claims[i]))
            .collect();
        let alternating =
            claims.iter().enumerate().fold(
                GrothendieckElement::zero(),
                |acc, (i, g)| {
                    if i % 2 == 0 {
                        &acc + g
                    } else {
                        &acc - g
                    }
                },
            );
        let chi = euler_char(&v);
        let elapsed = start.elapsed().as_millis() as u64;

        let status = |ok: bool| if ok { Status::Pass } else { Status::Fail };
        let listing = |xs: &[String]| if xs.is_empty() { "none".to_string() } else { xs.join("; ") };
        report.push(
            Entry::new(id("a-vanishing"), status(vanishing.is_empty()), "no violations", listing(&vanishing), &anchor)
                .with_elapsed(elapsed),
        );
        let mut bound_all = bound;
        bound_all.extend(negative);
        report.push(
            Entry::new(
                id("b-psupp-bound"),
                status(bound_all.is_empty()),
                "no violations",
                listing(&bound_all),
                &anchor,
            )
            .with_elapsed(elapsed),
        );
        report.push(
            Entry::new(id("c-euler"), status(alternating == chi), chi.to_string(), alternating.to_string(), &anchor)
                .with_elapsed(elapsed),
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str =
        "# sample\n@table t\n@family w wedge^{j}(b)\nw 0 0 V(0,0)\nw 2 1 V(0,0)\nw 3 2 V(1,1)^4 + V(0,0)^4\nw 4 0 ?\n";

    #[test]
    fn round_trip_is_exact() {
        let t = CohomologyTable::parse(SAMPLE).unwrap();
        assert_eq!(t.to_text(), SAMPLE);
        assert_eq!(t.rows(), vec![(0, 0), (0, 2), (0, 3), (0, 4)]);
    }

    #[test]
    fn payload_parsing() {
        let Claim::Known(g) = parse_payload("V(1,1)^4 + V(0,0)^4").unwrap() else { panic!() };
        assert_eq!(g.coefficient(Weight::RHO), 4);
        assert!(parse_payload("V(-1,0)").is_err());
        assert!(parse_payload("V(1,1)^0").is_err());
        assert!(parse_payload("W(1,1)").is_err());
        assert_eq!(parse_payload("?").unwrap(), Claim::Unknown);
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let e = CohomologyTable::parse("@table t\n@family w wedge^{j}(b)\nx 0 0 0\n").unwrap_err();
        assert_eq!(e, TableError::Syntax { line: 3, message: "undeclared family 'x'".into() });
        assert!(CohomologyTable::parse("@family w wedge^{j}(q)\n").is_err());
        assert!(CohomologyTable::parse("@table t\n@family w b\nw 0 4 0\n").is_err());
    }
}
