use std::collections::BTreeMap;
use std::fmt;

use crate::weights::Weight;

use super::RepError;

/// A finite multiset of weights, kept sorted so equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeightMultiset {
    mult: BTreeMap<Weight, u64>,
}

fn binomial(n: u64, k: u64) -> Result<u64, RepError> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return Err(RepError::Overflow);
        }
    }
    Ok(acc as u64)
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(w: Weight) -> Self {
        Self::from_weights([w])
    }

    pub fn from_weights<I: IntoIterator<Item = Weight>>(ws: I) -> Self {
        let mut m = Self::new();
        for w in ws {
            m.insert(w, 1);
        }
        m
    }

    pub fn from_pairs<I: IntoIterator<Item = (Weight, u64)>>(pairs: I) -> Self {
        let mut m = Self::new();
        for (w, k) in pairs {
            m.insert(w, k);
        }
        m
    }

    pub fn insert(&mut self, w: Weight, k: u64) {
        if k > 0 {
            *self.mult.entry(w).or_insert(0) += k;
        }
    }

    pub fn multiplicity(&self, w: Weight) -> u64 {
        self.mult.get(&w).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> u64 {
        self.mult.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    /// Distinct weights with multiplicities, in ascending weight order.
    pub fn iter(&self) -> impl Iterator<Item = (Weight, u64)> + '_ {
        self.mult.iter().map(|(&w, &k)| (w, k))
    }

    /// Distinct weights.
    pub fn support(&self) -> impl Iterator<Item = Weight> + '_ {
        self.mult.keys().copied()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut m = self.clone();
        for (w, k) in other.iter() {
            m.insert(w, k);
        }
        m
    }

    pub fn tensor(&self, other: &Self) -> Result<Self, RepError> {
        let mut m = Self::new();
        for (w, k) in self.iter() {
            for (v, j) in other.iter() {
                m.insert(w + v, k.checked_mul(j).ok_or(RepError::Overflow)?);
            }
        }
        Ok(m)
    }

    pub fn dual(&self) -> Self {
        Self::from_pairs(self.iter().map(|(w, k)| (-w, k)))
    }

    pub fn twist(&self, by: Weight) -> Self {
        Self::from_pairs(self.iter().map(|(w, k)| (w + by, k)))
    }

    /// Repeated direct sum.
    pub fn scale(&self, n: u64) -> Self {
        Self::from_pairs(self.iter().map(|(w, k)| (w, k * n)))
    }

    pub fn wedge(&self, j: u32) -> Result<Self, RepError> {
        self.symmetric_power_like(j, binomial)
    }

    pub fn sym(&self, k: u32) -> Result<Self, RepError> {
        self.symmetric_power_like(k, |m, c| if c == 0 { Ok(1) } else { binomial(m + c - 1, c) })
    }

    /// Choose `c_w` basis vectors from each weight space with total `j`; the
    /// number of choices per weight space is `count(mult, c_w)`.
    fn symmetric_power_like(
        &self,
        j: u32,
        count: impl Fn(u64, u64) -> Result<u64, RepError>,
    ) -> Result<Self, RepError> {
        let j = j as u64;
        // layer[c] = multiset of weight sums using exactly c chosen vectors
        let mut layers: Vec<BTreeMap<Weight, u64>> = vec![BTreeMap::new(); j as usize + 1];
        layers[0].insert(Weight::ZERO, 1);
        for (w, m) in self.iter() {
            let mut next: Vec<BTreeMap<Weight, u64>> = vec![BTreeMap::new(); j as usize + 1];
            for (used, layer) in layers.iter().enumerate() {
                for (&sum, &k) in layer {
                    for c in 0..=(j - used as u64) {
                        let ways = count(m, c)?;
                        if ways == 0 {
                            // wedge: no more than m vectors from one space
                            break;
                        }
                        let k2 = k.checked_mul(ways).ok_or(RepError::Overflow)?;
                        let slot = next[used + c as usize].entry(sum + c as i64 * w).or_insert(0);
                        *slot = slot.checked_add(k2).ok_or(RepError::Overflow)?;
                    }
                }
            }
            layers = next;
        }
        Ok(Self::from_pairs(layers.pop().unwrap_or_default()))
    }
}

impl fmt::Display for WeightMultiset {
    /// `{(0,0)^2, (1,1)}`; multiplicity 1 is omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (w, k)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if k == 1 {
                write!(f, "{w}")?;
            } else {
                write!(f, "{w}^{k}")?;
            }
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> WeightMultiset {
        WeightMultiset::from_weights([Weight::ZERO, Weight::ZERO, -Weight::ALPHA, -Weight::BETA, -Weight::RHO])
    }

    /// Enumerates subsets of basis indices directly.
    fn wedge_by_subsets(ws: &[Weight], j: usize) -> WeightMultiset {
        let n = ws.len();
        let mut out = WeightMultiset::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == j {
                let s = (0..n).filter(|i| mask >> i & 1 == 1).fold(Weight::ZERO, |acc, i| acc + ws[i]);
                out.insert(s, 1);
            }
        }
        out
    }

    #[test]
    fn wedge_matches_subset_enumeration() {
        let basis = [Weight::ZERO, Weight::ZERO, -Weight::ALPHA, -Weight::BETA, -Weight::RHO];
        for j in 0..=5 {
            assert_eq!(b().wedge(j as u32).unwrap(), wedge_by_subsets(&basis, j));
        }
        assert!(b().wedge(6).unwrap().is_empty());
    }

    #[test]
    fn sym_dimension() {
        assert_eq!(b().sym(3).unwrap().dim(), 35);
        assert_eq!(b().sym(0).unwrap(), WeightMultiset::singleton(Weight::ZERO));
    }

    #[test]
    fn display_form() {
        assert_eq!(b().to_string(), "{(-2,1), (-1,-1), (0,0)^2, (1,-2)}");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 2).unwrap(), 45);
        assert_eq!(binomial(3, 5).unwrap(), 0);
        assert!(binomial(200, 100).is_err());
    }
}
