use crate::breps::{build_rep, Atom, RepExpr};
use crate::bwb::euler_char;
use crate::data::{self, DataError};
use crate::report::{Entry, Report, Status};
use crate::weights::{weyl_dim, Weight};

use super::SteinbergError;

/// One line of the shipped multiplicity table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityRow {
    pub label: String,
    pub weight: Weight,
    pub value: u64,
}

/// Fibre dimension at the origin of the divisorial sheaf of `lambda`.
///
/// The three dominant representatives contribute `V(lambda)` in degree 0.
/// For `alpha = 2L1 + L3` the generators come from `H^1(b(alpha))` once for
/// each factor of `b + b`, so the value is twice that dimension.
pub fn multiplicity(lambda: Weight) -> Result<u64, SteinbergError> {
    const ALPHA: Weight = Weight::ALPHA;
    match lambda {
        Weight { a: 1, b: 0 } | Weight { a: 0, b: 1 } | Weight { a: 1, b: 1 } => {
            Ok(weyl_dim(lambda).expect("dominant"))
        }
        ALPHA => {
            let twisted = build_rep(&RepExpr::atom(Atom::B).twist(ALPHA)).expect("small representation");
            // only H^1 is nonzero, so chi = -[H^1]
            let h1 = -euler_char(&twisted).dim();
            Ok(2 * h1 as u64)
        }
        _ => Err(SteinbergError::UnsupportedWeight(lambda)),
    }
}

fn parse_weight(tok: &str) -> Option<Weight> {
    let inner = tok.strip_prefix('(')?.strip_suffix(')')?;
    let (a, b) = inner.split_once(',')?;
    Some(Weight::new(a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// Lines `label (a,b) value`; `#` starts a comment.
pub fn parse_multiplicity_table(text: &str) -> Result<Vec<MultiplicityRow>, SteinbergError> {
    let mut rows = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let err = |message: String| SteinbergError::Table { line: k + 1, message };
        let toks: Vec<&str> = body.split_whitespace().collect();
        let [label, w, v] = toks.as_slice() else {
            return Err(err(format!("expected 3 fields, found {}", toks.len())));
        };
        let weight = parse_weight(w).ok_or_else(|| err(format!("bad weight '{w}'")))?;
        let value = v.parse().map_err(|_| err(format!("bad multiplicity '{v}'")))?;
        rows.push(MultiplicityRow { label: label.to_string(), weight, value });
    }
    Ok(rows)
}

/// Compares the shipped table against `multiplicity`.
pub fn verify_multiplicities() -> Result<Report, DataError> {
    let file = data::load(data::MULTIPLICITIES)?;
    let mut report = Report::new();
    let rows = match parse_multiplicity_table(&file.contents) {
        Ok(rows) => rows,
        Err(e) => {
            report.push(Entry::new(
                "multiplicity.table",
                Status::Fail,
                "parsable table",
                e.to_string(),
                "multiplicity table",
            ));
            return Ok(report);
        }
    };
    for row in rows {
        let id = format!("multiplicity.{}", row.label);
        let anchor = format!("multiplicity table, sha256 {}", &file.sha256()[..12]);
        report.timed(|| {
            let actual = match multiplicity(row.weight) {
                Ok(m) => m.to_string(),
                Err(e) => e.to_string(),
            };
            vec![Entry::compare(id, row.value, actual, anchor)]
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_values() {
        assert_eq!(multiplicity(Weight::L1).unwrap(), 3);
        assert_eq!(multiplicity(-Weight::L3).unwrap(), 3);
        assert_eq!(multiplicity(2 * Weight::L1 + Weight::L3).unwrap(), 16);
        assert_eq!(multiplicity(Weight::L1 - Weight::L3).unwrap(), 8);
        assert!(matches!(multiplicity(Weight::new(2, 0)), Err(SteinbergError::UnsupportedWeight(_))));
    }

    #[test]
    fn dominant_cases_are_weyl_dimensions() {
        for w in [Weight::L1, -Weight::L3, Weight::RHO] {
            assert_eq!(multiplicity(w).ok(), weyl_dim(w));
        }
    }

    #[test]
    fn shipped_table() {
        let r = verify_multiplicities().unwrap();
        assert_eq!(r.entries.len(), 4);
        assert!(r.passed());
        assert!(parse_multiplicity_table("L1 (1,0)").is_err());
        assert!(parse_multiplicity_table("L1 1,0 3").is_err());
    }
}
