//! The rep-expression language.
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
//! Whitespace is ignored between tokens. Positions in errors are character
//! offsets into the input.

use std::fmt;

use crate::weights::Weight;

use super::RepError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    /// Borel subalgebra of sl3.
    B,
    /// Its nilradical.
    N,
    /// sl3 restricted to B.
    G,
    /// The quotient g/b.
    GModB,
    /// One-dimensional representation of the given weight.
    Line(Weight),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RepExpr {
    Atom(Atom),
    Tensor(Box<RepExpr>, Box<RepExpr>),
    Sum(Box<RepExpr>, Box<RepExpr>),
    Wedge(u32, Box<RepExpr>),
    Sym(u32, Box<RepExpr>),
    Dual(Box<RepExpr>),
    Twist(Weight, Box<RepExpr>),
}

impl RepExpr {
    pub fn parse(s: &str) -> Result<RepExpr, RepError> {
        let mut p = Parser { chars: s.chars().collect(), pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < p.chars.len() {
            return Err(p.error(format!("unexpected '{}'", p.chars[p.pos])));
        }
        Ok(e)
    }

    pub fn atom(a: Atom) -> RepExpr {
        RepExpr::Atom(a)
    }

    pub fn tensor(self, other: RepExpr) -> RepExpr {
        RepExpr::Tensor(Box::new(self), Box::new(other))
    }

    pub fn sum(self, other: RepExpr) -> RepExpr {
        RepExpr::Sum(Box::new(self), Box::new(other))
    }

    pub fn wedge(self, j: u32) -> RepExpr {
        RepExpr::Wedge(j, Box::new(self))
    }

    pub fn sym(self, k: u32) -> RepExpr {
        RepExpr::Sym(k, Box::new(self))
    }

    pub fn dual(self) -> RepExpr {
        RepExpr::Dual(Box::new(self))
    }

    pub fn twist(self, by: Weight) -> RepExpr {
        RepExpr::Twist(by, Box::new(self))
    }

    fn precedence(&self) -> u8 {
        match self {
            RepExpr::Sum(..) => 0,
            RepExpr::Tensor(..) => 1,
            _ => 2,
        }
    }
}

impl std::str::FromStr for RepExpr {
    type Err = RepError;
    fn from_str(s: &str) -> Result<Self, RepError> {
        RepExpr::parse(s)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::B => f.write_str("b"),
            Atom::N => f.write_str("n"),
            Atom::G => f.write_str("g"),
            Atom::GModB => f.write_str("g/b"),
            Atom::Line(w) => write!(f, "F({},{})", w.a, w.b),
        }
    }
}

/// Canonical ASCII printing; `parse` inverts it.
impl fmt::Display for RepExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // operators are left-associative, so a right operand of equal
        // precedence needs parentheses
        let side = |f: &mut fmt::Formatter<'_>, e: &RepExpr, min: u8| {
            if e.precedence() < min {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        match self {
            RepExpr::Atom(a) => write!(f, "{a}"),
            RepExpr::Sum(x, y) => {
                side(f, x, 0)?;
                f.write_str(" + ")?;
                side(f, y, 1)
            }
            RepExpr::Tensor(x, y) => {
                side(f, x, 1)?;
                f.write_str("*")?;
                side(f, y, 2)
            }
            RepExpr::Wedge(j, e) => write!(f, "wedge^{j}({e})"),
            RepExpr::Sym(k, e) => write!(f, "sym^{k}({e})"),
            RepExpr::Dual(e) => write!(f, "dual({e})"),
            RepExpr::Twist(w, e) => write!(f, "tw({},{})({e})", w.a, w.b),
        }
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, message: String) -> RepError {
        RepError::Parse { position: self.pos, message }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), RepError> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = match self.peek() {
                Some(x) => format!("'{x}'"),
                None => "end of input".to_string(),
            };
            Err(self.error(format!("expected '{c}', found {found}")))
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_alphabetic() {
            self.pos += 1;
            // 'Λ' stands alone so that 'Λ^2' works without a separator
            if self.chars[self.pos - 1] == 'Λ' {
                break;
            }
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn int(&mut self) -> Result<i64, RepError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.chars.get(self.pos), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| {
            self.pos = start;
            self.error("expected an integer".to_string())
        })
    }

    fn exponent(&mut self) -> Result<u32, RepError> {
        self.expect('^')?;
        let start = self.pos;
        let n = self.int()?;
        u32::try_from(n).map_err(|_| RepError::Parse {
            position: start,
            message: format!("exponent {n} must be a non-negative integer"),
        })
    }

    fn pair(&mut self) -> Result<Weight, RepError> {
        self.expect('(')?;
        let a = self.int()?;
        self.expect(',')?;
        let b = self.int()?;
        self.expect(')')?;
        Ok(Weight::new(a, b))
    }

    fn parenthesized(&mut self) -> Result<RepExpr, RepError> {
        self.expect('(')?;
        let e = self.expr()?;
        self.expect(')')?;
        Ok(e)
    }

    fn expr(&mut self) -> Result<RepExpr, RepError> {
        let mut lhs = self.term()?;
        while self.eat('+') || self.eat('⊕') {
            let rhs = self.term()?;
            lhs = lhs.sum(rhs);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<RepExpr, RepError> {
        let mut lhs = self.unary()?;
        while self.eat('*') || self.eat('⊗') {
            let rhs = self.unary()?;
            lhs = lhs.tensor(rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<RepExpr, RepError> {
        match self.peek() {
            None => return Err(self.error("unexpected end of input".to_string())),
            Some('(') => return self.parenthesized(),
            Some('^') => {
                let j = self.exponent()?;
                return Ok(self.parenthesized()?.wedge(j));
            }
            _ => {}
        }
        let start = self.pos;
        let word = self.ident();
        match word.as_str() {
            "wedge" | "Λ" => {
                let j = self.exponent()?;
                Ok(self.parenthesized()?.wedge(j))
            }
            "sym" | "S" => {
                let k = self.exponent()?;
                Ok(self.parenthesized()?.sym(k))
            }
            "dual" => Ok(self.parenthesized()?.dual()),
            "tw" | "twist" => {
                let w = self.pair()?;
                Ok(self.parenthesized()?.twist(w))
            }
            "b" => Ok(RepExpr::Atom(Atom::B)),
            "n" => Ok(RepExpr::Atom(Atom::N)),
            "g" => {
                if self.eat('/') {
                    let at = self.pos;
                    if self.ident() != "b" {
                        self.pos = at;
                        return Err(self.error("expected 'b' after 'g/'".to_string()));
                    }
                    Ok(RepExpr::Atom(Atom::GModB))
                } else {
                    Ok(RepExpr::Atom(Atom::G))
                }
            }
            "F" => {
                if self.peek() == Some('(') {
                    Ok(RepExpr::Atom(Atom::Line(self.pair()?)))
                } else {
                    Ok(RepExpr::Atom(Atom::Line(Weight::ZERO)))
                }
            }
            "" => {
                self.pos = start;
                let c = self.chars[self.pos];
                Err(self.error(format!("unexpected '{c}'")))
            }
            other => {
                self.pos = start;
                Err(self.error(format!("unknown name '{other}'")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_aliases_to_the_same_tree() {
        let forms = ["wedge^2(b)*b", "Λ^2(b) ⊗ b", "^2(b)*b", " wedge ^ 2 ( b ) * b "];
        let want = RepExpr::atom(Atom::B).wedge(2).tensor(RepExpr::atom(Atom::B));
        for f in forms {
            assert_eq!(RepExpr::parse(f).unwrap(), want, "{f}");
        }
    }

    #[test]
    fn precedence_and_associativity() {
        let e = RepExpr::parse("b + n * g + g/b").unwrap();
        assert_eq!(e.to_string(), "b + n*g + g/b");
        let e = RepExpr::parse("b * (n + g)").unwrap();
        assert_eq!(e.to_string(), "b*(n + g)");
        let e = RepExpr::parse("b + (n + g)").unwrap();
        assert_eq!(e.to_string(), "b + (n + g)");
        assert_eq!(RepExpr::parse(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn twists_and_lines() {
        let e = RepExpr::parse("twist(1,-2)(F(0,3)) + F + dual(S^3(g))").unwrap();
        assert_eq!(e.to_string(), "tw(1,-2)(F(0,3)) + F(0,0) + dual(sym^3(g))");
    }

    #[test]
    fn error_positions() {
        let err = |s: &str| match RepExpr::parse(s) {
            Err(RepError::Parse { position, .. }) => position,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(err("b * q"), 4);
        assert_eq!(err("wedge^x(b)"), 6);
        assert_eq!(err("b)"), 1);
        assert_eq!(err("wedge^2 b"), 8);
        assert_eq!(err(""), 0);
        assert_eq!(err("g/x"), 2);
        assert_eq!(err("wedge^-1(b)"), 6);
    }
}
