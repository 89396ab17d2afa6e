//! Character-level algebra of B-representations.

mod expr;
mod multiset;

pub use expr::{Atom, RepExpr};
pub use multiset::WeightMultiset;

use crate::weights::Weight;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("multiplicity overflow")]
    Overflow,
}

/// Weights of an atom.
pub fn atom_weights(atom: Atom) -> WeightMultiset {
    let n = [-Weight::ALPHA, -Weight::BETA, -Weight::RHO];
    match atom {
        Atom::N => WeightMultiset::from_weights(n),
        Atom::B => WeightMultiset::from_weights(n).direct_sum(&WeightMultiset::from_pairs([(Weight::ZERO, 2)])),
        Atom::GModB => WeightMultiset::from_weights(n).dual(),
        Atom::G => atom_weights(Atom::B).direct_sum(&atom_weights(Atom::GModB)),
        Atom::Line(w) => WeightMultiset::singleton(w),
    }
}

pub fn build_rep(expr: &RepExpr) -> Result<WeightMultiset, RepError> {
    Ok(match expr {
        RepExpr::Atom(a) => atom_weights(*a),
        RepExpr::Tensor(x, y) => build_rep(x)?.tensor(&build_rep(y)?)?,
        RepExpr::Sum(x, y) => build_rep(x)?.direct_sum(&build_rep(y)?),
        RepExpr::Wedge(j, e) => build_rep(e)?.wedge(*j)?,
        RepExpr::Sym(k, e) => build_rep(e)?.sym(*k)?,
        RepExpr::Dual(e) => build_rep(e)?.dual(),
        RepExpr::Twist(w, e) => build_rep(e)?.twist(*w),
    })
}

/// Parses and evaluates in one step.
pub fn build_rep_str(s: &str) -> Result<WeightMultiset, RepError> {
    build_rep(&RepExpr::parse(s)?)
}

pub fn weight_multiplicity(v: &WeightMultiset, mu: Weight) -> u64 {
    v.multiplicity(mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Torus weights of the elementary matrices E_ij in sl3, read off from
    /// conjugation by diag(t1, t2, t3): E_ij has character t_i / t_j = L_i - L_j.
    fn elementary_weight(i: usize, j: usize) -> Weight {
        let l = [Weight::L1, Weight::L2, Weight::L3];
        l[i] - l[j]
    }

    #[test]
    fn borel_weights_from_torus_conjugation() {
        // upper-triangular traceless 3x3 matrices with rows indexed by L3, L2, L1:
        // entry (r, c) has weight L_{3-r} - L_{3-c}
        let idx = [2, 1, 0];
        let mut ws = vec![Weight::ZERO, Weight::ZERO];
        for r in 0..3 {
            for c in r + 1..3 {
                ws.push(elementary_weight(idx[r], idx[c]));
            }
        }
        let want = WeightMultiset::from_weights(ws);
        assert_eq!(build_rep_str("b").unwrap(), want);
        assert_eq!(want.dim(), 5);
        assert_eq!(build_rep_str("g/b").unwrap(), build_rep_str("dual(n)").unwrap());
        assert_eq!(
            build_rep_str("g/b").unwrap(),
            WeightMultiset::from_weights([Weight::ALPHA, Weight::BETA, Weight::RHO])
        );
    }

    #[test]
    fn examples() {
        assert_eq!(build_rep_str("wedge^2(b + b)").unwrap().dim(), 45);
        let w = build_rep_str("wedge^2(b)*wedge^2(b)").unwrap();
        assert_eq!(weight_multiplicity(&w, -3 * Weight::RHO), 2);
        assert_eq!(weight_multiplicity(&build_rep_str("F(4,-1)").unwrap(), Weight::new(4, -1)), 1);
        assert_eq!(weight_multiplicity(&build_rep_str("b").unwrap(), Weight::ZERO), 2);
    }

    #[test]
    fn g_is_b_plus_quotient() {
        let g = build_rep_str("g").unwrap();
        assert_eq!(g, build_rep_str("b + g/b").unwrap());
        assert_eq!(g, g.dual());
        assert_eq!(g.dim(), 8);
    }

    #[test]
    fn wedge_of_double_decomposes() {
        let lhs = build_rep_str("wedge^2(b + b)").unwrap();
        let rhs = build_rep_str("wedge^2(b) + wedge^2(b) + b*b").unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn bad_input_reports_position() {
        assert_eq!(build_rep_str("b * h"), Err(RepError::Parse { position: 4, message: "unknown name 'h'".into() }));
    }
}
