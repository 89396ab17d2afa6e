//! Plain-text polynomials (`3*x^2*y - 1/2*z + 4`) and integer matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::Field;

use super::poly::{Poly, PolyRing};
use super::snf::IntMatrix;
use super::PolyError;

struct Parser<'a, 'r, F: Field> {
    src: &'a [u8],
    pos: usize,
    ring: &'r PolyRing<F>,
}

impl<F: Field> Parser<'_, '_, F> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn exponent(&mut self) -> Result<u32, PolyError> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let n = self.digits()?;
        match u32::try_from(n) {
            Ok(e) if e <= 255 => Ok(e),
            _ => self.err("exponent too large"),
        }
    }

    fn expr(&mut self) -> Result<Poly<F>, PolyError> {
        let mut acc = Poly::zero();
        let mut negate = self.eat(b'-');
        if !negate {
            self.eat(b'+');
        }
        loop {
            let t = self.term()?;
            acc = if negate { self.ring.sub(&acc, &t) } else { self.ring.add(&acc, &t) };
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly<F>, PolyError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = self.ring.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly<F>, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                let e = self.exponent()?;
                Ok(self.ring.pow(&inner, e))
            }
            Some(c) if c.is_ascii_digit() => {
                let at = self.pos;
                let num = self.digits()?;
                let den = if self.eat(b'/') { self.digits()? } else { BigInt::one() };
                if den.is_zero() {
                    return self.err("zero denominator");
                }
                let q = BigRational::new(num, den);
                if self.ring.is_integral() && !q.is_integer() {
                    return Err(PolyError::Parse { position: at, message: format!("'{q}' is not an integer") });
                }
                let e = self.exponent()?;
                match self.ring.field().from_rational(&q) {
                    Some(c) => Ok(self.ring.constant(self.ring.field().pow(&c, e as u64))),
                    None => Err(PolyError::Parse {
                        position: at,
                        message: format!("'{q}' is undefined in characteristic {}", self.ring.field().characteristic()),
                    }),
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let Some(i) = self.ring.var_index(name) else {
                    return Err(PolyError::Parse { position: start, message: format!("unknown variable '{name}'") });
                };
                let e = self.exponent()?;
                Ok(self.ring.pow(&self.ring.var(i), e))
            }
            Some(c) => self.err(format!("unexpected '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a polynomial over the ring's variables.
pub fn parse_poly<F: Field>(ring: &PolyRing<F>, s: &str) -> Result<Poly<F>, PolyError> {
    let mut p = Parser { src: s.as_bytes(), pos: 0, ring };
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Inverse of `parse_poly`: terms in descending order, `0` for zero.
pub fn format_poly<F: Field>(ring: &PolyRing<F>, p: &Poly<F>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let f = ring.field();
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let cs = f.fmt_elem(c);
        let (neg, mag) = match cs.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, cs),
        };
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mut factors: Vec<String> = Vec::new();
        if mag != "1" || m.is_one() {
            factors.push(mag);
        }
        for (i, name) in ring.var_names().iter().enumerate() {
            match m.exp(i) {
                0 => {}
                1 => factors.push(name.clone()),
                e => factors.push(format!("{name}^{e}")),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

/// One row per non-empty line, entries separated by whitespace or commas;
/// `#` starts a comment and brackets are ignored.
pub fn parse_int_matrix(s: &str) -> Result<IntMatrix, PolyError> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut offset = 0;
    for line in s.split_inclusive('\n') {
        let body = line.split('#').next().unwrap();
        let mut row = Vec::new();
        let mut col = 0;
        for tok in body.split(|c: char| c.is_whitespace() || matches!(c, ',' | '[' | ']')) {
            if !tok.is_empty() {
                let at = offset + body[col..].find(tok).unwrap() + col;
                col = at - offset + tok.len();
                let v: BigInt = tok
                    .parse()
                    .map_err(|_| PolyError::Parse { position: at, message: format!("'{tok}' is not an integer") })?;
                row.push(v);
            }
        }
        if !row.is_empty() {
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(PolyError::Parse {
                        position: offset,
                        message: format!("row has {} entries, expected {}", row.len(), first.len()),
                    });
                }
            }
            rows.push(row);
        }
        offset += line.len();
    }
    Ok(IntMatrix::from_rows(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::polyalg::integer_ring;

    #[test]
    fn round_trip() {
        let r = PolyRing::new(Rationals, ["x", "y", "z"]).unwrap();
        for s in ["0", "1", "-x", "3*x^2*y - 1/2*z + 4", "x*y - y^2", "-2*x^3 + z"] {
            let p = parse_poly(&r, s).unwrap();
            assert_eq!(format_poly(&r, &p), s);
        }
        let p = parse_poly(&r, "(x + y)^2 - 2 * x*y").unwrap();
        assert_eq!(format_poly(&r, &p), "x^2 + y^2");
    }

    #[test]
    fn errors_carry_positions() {
        let r = PolyRing::new(Rationals, ["x"]).unwrap();
        assert_eq!(
            parse_poly(&r, "x + w"),
            Err(PolyError::Parse { position: 4, message: "unknown variable 'w'".into() })
        );
        assert!(matches!(parse_poly(&r, "x +"), Err(PolyError::Parse { position: 3, .. })));
        let z = integer_ring(["x"]).unwrap();
        assert!(matches!(parse_poly(&z, "x/2"), Err(PolyError::Parse { .. })));
        assert!(matches!(parse_poly(&z, "1/2*x"), Err(PolyError::Parse { position: 0, .. })));
        let f5 = PolyRing::new(PrimeField::new(5).unwrap(), ["x"]).unwrap();
        assert!(parse_poly(&f5, "1/5*x").is_err());
        assert_eq!(format_poly(&f5, &parse_poly(&f5, "1/2*x").unwrap()), "-2*x");
    }

    #[test]
    fn matrices() {
        let m = parse_int_matrix("# header\n[1, 2]\n3 -4\n\n").unwrap();
        assert_eq!(m.dims(), (2, 2));
        assert_eq!(m.get(1, 1), &BigInt::from(-4));
        assert!(matches!(parse_int_matrix("1 2\n3\n"), Err(PolyError::Parse { position: 4, .. })));
        assert!(matches!(parse_int_matrix("1 x\n"), Err(PolyError::Parse { position: 2, .. })));
    }
}
