use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::weights::{weyl_dim, Weight};

/// A formal integer combination of classes `[V(lambda)]`, `lambda` dominant.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GrothendieckElement {
    coeffs: BTreeMap<Weight, i64>,
}

impl GrothendieckElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `[V(lambda)]`. Panics if `lambda` is not dominant.
    pub fn irreducible(lambda: Weight) -> Self {
        let mut g = Self::zero();
        g.add_term(lambda, 1);
        g
    }

    /// Adds `c [V(lambda)]`. Panics if `lambda` is not dominant.
    pub fn add_term(&mut self, lambda: Weight, c: i64) {
        assert!(lambda.is_dominant(), "class of a non-dominant weight {lambda}");
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(lambda).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn coefficient(&self, lambda: Weight) -> i64 {
        self.coeffs.get(&lambda).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in ascending weight order.
    pub fn iter(&self) -> impl Iterator<Item = (Weight, i64)> + '_ {
        self.coeffs.iter().map(|(&w, &c)| (w, c))
    }

    /// Signed dimension `sum c * dim V(lambda)`.
    pub fn dim(&self) -> i64 {
        self.iter().map(|(w, c)| c * weyl_dim(w).expect("dominant") as i64).sum()
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut g = Self::zero();
        for (w, c) in self.iter() {
            g.add_term(w, c * k);
        }
        g
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|&c| c > 0)
    }
}

impl Add for &GrothendieckElement {
    type Output = GrothendieckElement;
    fn add(self, o: &GrothendieckElement) -> GrothendieckElement {
        let mut g = self.clone();
        for (w, c) in o.iter() {
            g.add_term(w, c);
        }
        g
    }
}

impl Sub for &GrothendieckElement {
    type Output = GrothendieckElement;
    fn sub(self, o: &GrothendieckElement) -> GrothendieckElement {
        self + &(-o)
    }
}

impl Neg for &GrothendieckElement {
    type Output = GrothendieckElement;
    fn neg(self) -> GrothendieckElement {
        self.scale(-1)
    }
}

impl fmt::Display for GrothendieckElement {
    /// Highest weights first: `2[V(1,1)] - [V(0,0)]`; the zero element prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.coeffs.iter().rev().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "[V{w}]")?;
        }
        Ok(())
    }
}
