use std::collections::BTreeMap;

use crate::field::Field;

use super::monomial::{Monomial, MAX_VARS};
use super::PolyError;

/// Sparse polynomial: terms sorted by descending monomial, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<F: Field> {
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Default for Poly<F> {
    fn default() -> Self {
        Poly { terms: Vec::new() }
    }
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    /// Builds from terms in any order, combining duplicates.
    pub fn from_terms(field: &F, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Self {
        let mut map: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (m, c) in terms {
            match map.get_mut(&m) {
                Some(x) => *x = field.add(x, &c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        Poly { terms: map.into_iter().rev().filter(|(_, c)| !field.is_zero(c)).collect() }
    }

    /// Wraps terms already sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, F::Elem)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        Poly { terms }
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&F::Elem> {
        self.terms.iter().find(|(t, _)| t == m).map(|(_, c)| c)
    }
}

/// A polynomial ring over a field with named variables and degrevlex order.
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    field: F,
    vars: Vec<String>,
    integral: bool,
}

impl<F: Field> PolyRing<F> {
    pub fn new<S: Into<String>>(field: F, vars: impl IntoIterator<Item = S>) -> Result<Self, PolyError> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.len() > MAX_VARS {
            return Err(PolyError::TooManyVariables(vars.len()));
        }
        for (i, v) in vars.iter().enumerate() {
            let valid = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(PolyError::BadVariableName(v.clone()));
            }
            if vars[..i].contains(v) {
                return Err(PolyError::DuplicateVariable(v.clone()));
            }
        }
        Ok(PolyRing { field, vars, integral: false })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    /// Whether coefficients are restricted to the integers.
    pub fn is_integral(&self) -> bool {
        self.integral
    }

    pub(crate) fn set_integral(&mut self) {
        self.integral = true;
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn var(&self, i: usize) -> Poly<F> {
        assert!(i < self.nvars());
        Poly::from_sorted_unchecked(vec![(Monomial::var(i), self.field.one())])
    }

    /// Variable by name; panics if absent.
    pub fn v(&self, name: &str) -> Poly<F> {
        self.var(self.var_index(name).unwrap_or_else(|| panic!("no variable '{name}'")))
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F> {
        if self.field.is_zero(&c) {
            Poly::zero()
        } else {
            Poly::from_sorted_unchecked(vec![(Monomial::ONE, c)])
        }
    }

    pub fn int(&self, n: i64) -> Poly<F> {
        self.constant(self.field.from_i64(n))
    }

    pub fn one(&self) -> Poly<F> {
        self.int(1)
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> Poly<F> {
        if self.field.is_zero(&c) {
            Poly::zero()
        } else {
            Poly::from_sorted_unchecked(vec![(m, c)])
        }
    }

    fn merge(&self, p: &Poly<F>, q: &Poly<F>, negate_q: bool) -> Poly<F> {
        let f = &self.field;
        let mut out = Vec::with_capacity(p.len() + q.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&p.terms, &q.terms);
        let qc = |c: &F::Elem| if negate_q { f.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0, qc(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_q { f.sub(&a[i].1, &b[j].1) } else { f.add(&a[i].1, &b[j].1) };
                    if !f.is_zero(&c) {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, qc(c))));
        Poly::from_sorted_unchecked(out)
    }

    pub fn add(&self, p: &Poly<F>, q: &Poly<F>) -> Poly<F> {
        self.merge(p, q, false)
    }

    pub fn sub(&self, p: &Poly<F>, q: &Poly<F>) -> Poly<F> {
        self.merge(p, q, true)
    }

    pub fn neg(&self, p: &Poly<F>) -> Poly<F> {
        Poly::from_sorted_unchecked(p.terms.iter().map(|(m, c)| (*m, self.field.neg(c))).collect())
    }

    pub fn scale(&self, p: &Poly<F>, c: &F::Elem) -> Poly<F> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly::from_sorted_unchecked(p.terms.iter().map(|(m, d)| (*m, self.field.mul(c, d))).collect())
    }

    /// `c * m * p`; multiplication by a monomial preserves the order.
    pub fn mul_term(&self, p: &Poly<F>, m: &Monomial, c: &F::Elem) -> Poly<F> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly::from_sorted_unchecked(p.terms.iter().map(|(t, d)| (t.mul(m), self.field.mul(c, d))).collect())
    }

    pub fn mul(&self, p: &Poly<F>, q: &Poly<F>) -> Poly<F> {
        let f = &self.field;
        let mut acc: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (m, c) in &p.terms {
            for (n, d) in &q.terms {
                let t = m.mul(n);
                let prod = f.mul(c, d);
                match acc.get_mut(&t) {
                    Some(x) => *x = f.add(x, &prod),
                    None => {
                        acc.insert(t, prod);
                    }
                }
            }
        }
        Poly::from_sorted_unchecked(acc.into_iter().rev().filter(|(_, c)| !f.is_zero(c)).collect())
    }

    pub fn pow(&self, p: &Poly<F>, k: u32) -> Poly<F> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, p);
        }
        acc
    }

    pub fn sum<'a>(&self, ps: impl IntoIterator<Item = &'a Poly<F>>) -> Poly<F> {
        ps.into_iter().fold(Poly::zero(), |acc, p| self.add(&acc, p))
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, p: &Poly<F>) -> Poly<F> {
        match p.lead() {
            None => Poly::zero(),
            Some((_, c)) => {
                if self.field.is_one(c) {
                    p.clone()
                } else {
                    self.scale(p, &self.field.inv(c).expect("nonzero lead"))
                }
            }
        }
    }

    pub fn eval(&self, p: &Poly<F>, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.nvars());
        let f = &self.field;
        let mut total = f.zero();
        for (m, c) in &p.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    t = f.mul(&t, &f.pow(x, e as u64));
                }
            }
            total = f.add(&total, &t);
        }
        total
    }

    /// Replaces variable `i` of `self` by `images[i]`, a polynomial of `target`.
    pub fn substitute<G: Field<Elem = F::Elem>>(
        &self,
        p: &Poly<F>,
        target: &PolyRing<G>,
        images: &[Poly<G>],
    ) -> Poly<G> {
        assert_eq!(images.len(), self.nvars());
        let mut powers: Vec<Vec<Poly<G>>> = vec![vec![target.one()]; self.nvars()];
        let mut out = Poly::zero();
        for (m, c) in &p.terms {
            let mut t = target.constant(c.clone());
            for i in 0..self.nvars() {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = target.mul(powers[i].last().unwrap(), &images[i]);
                    powers[i].push(next);
                }
                t = target.mul(&t, &powers[i][e]);
            }
            out = target.add(&out, &t);
        }
        out
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, p: &Poly<F>, d: u32) -> Poly<F> {
        Poly::from_sorted_unchecked(p.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect())
    }

    /// Moves coefficients to another field through `convert`, same variables.
    pub fn map_coefficients<G: Field>(
        &self,
        p: &Poly<F>,
        target: &PolyRing<G>,
        convert: impl Fn(&F::Elem) -> Option<G::Elem>,
    ) -> Option<Poly<G>> {
        let mut terms = Vec::with_capacity(p.len());
        for (m, c) in &p.terms {
            terms.push((*m, convert(c)?));
        }
        Some(Poly::from_terms(target.field(), terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn arithmetic() {
        let r = PolyRing::new(Rationals, ["x", "y"]).unwrap();
        let (x, y) = (r.v("x"), r.v("y"));
        let s = r.add(&x, &y);
        let d = r.sub(&x, &y);
        let prod = r.mul(&s, &d);
        let want = r.sub(&r.mul(&x, &x), &r.mul(&y, &y));
        assert_eq!(prod, want);
        assert!(r.sub(&prod, &want).is_zero());
        assert_eq!(r.pow(&s, 3).len(), 4);
        assert_eq!(prod.degree(), Some(2));
        assert!(prod.is_homogeneous());
        assert!(!r.add(&x, &r.one()).is_homogeneous());
    }

    #[test]
    fn evaluation_and_substitution() {
        let f = PrimeField::new(7).unwrap();
        let r = PolyRing::new(f, ["x", "y"]).unwrap();
        let (x, y) = (r.v("x"), r.v("y"));
        let p = r.add(&r.mul(&x, &y), &r.int(3));
        assert_eq!(r.eval(&p, &[2, 5]), (2 * 5 + 3) % 7);
        // x -> y + 1, y -> y
        let q = r.substitute(&p, &r, &[r.add(&y, &r.one()), y.clone()]);
        assert_eq!(q, r.add(&r.add(&r.mul(&y, &y), &y), &r.int(3)));
    }

    #[test]
    fn ring_validation() {
        assert!(matches!(PolyRing::new(Rationals, ["x", "x"]), Err(PolyError::DuplicateVariable(_))));
        assert!(matches!(PolyRing::new(Rationals, ["1x"]), Err(PolyError::BadVariableName(_))));
        let many: Vec<String> = (0..33).map(|i| format!("x{i}")).collect();
        assert!(matches!(PolyRing::new(Rationals, many), Err(PolyError::TooManyVariables(33))));
    }
}
