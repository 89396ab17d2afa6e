use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::field::Field;

use super::groebner::{groebner, GroebnerBasis};
use super::monomial::{monomials_of_degree, Monomial};
use super::poly::{Poly, PolyRing};
use super::PolyError;

/// `d_0, ..., d_D` for an explicit bound `D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct GradedDims(Vec<u64>);

impl GradedDims {
    pub fn new(dims: Vec<u64>) -> Self {
        GradedDims(dims)
    }

    pub fn bound(&self) -> u32 {
        self.0.len().saturating_sub(1) as u32
    }

    pub fn get(&self, k: u32) -> Option<u64> {
        self.0.get(k as usize).copied()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

fn standard_count(nvars: usize, leads: &[Monomial], k: u32) -> u64 {
    monomials_of_degree(nvars, k).iter().filter(|m| !leads.iter().any(|l| l.divides(m))).count() as u64
}

/// Dimensions of `(S/I)_k` for `k <= bound`, by counting standard monomials.
pub fn hilbert_function<F: Field>(
    ring: &PolyRing<F>,
    gb: &GroebnerBasis<F>,
    bound: u32,
) -> Result<GradedDims, PolyError> {
    if let Some(b) = gb.bound() {
        if b < bound {
            return Err(PolyError::DegreeExceedsBound { degree: bound, bound: b });
        }
    }
    let leads = gb.leading_monomials();
    Ok(GradedDims((0..=bound).map(|k| standard_count(ring.nvars(), &leads, k)).collect()))
}

/// Degrees of minimal generators: `dim (I / S_+ I)_k` for `k <= bound`.
/// Generators must be homogeneous.
pub fn min_gen_degrees<F: Field>(ring: &PolyRing<F>, gens: &[Poly<F>], bound: u32) -> Result<GradedDims, PolyError> {
    relative_min_gen_degrees(ring, &[], gens, bound)
}

/// For `J = base + gens`, the dimensions of `J / (base + S_+ J)` in each
/// degree: how many generators `J` needs beyond those of `base`.
pub fn relative_min_gen_degrees<F: Field>(
    ring: &PolyRing<F>,
    base: &[Poly<F>],
    gens: &[Poly<F>],
    bound: u32,
) -> Result<GradedDims, PolyError> {
    let full: Vec<Poly<F>> = base.iter().chain(gens).cloned().collect();
    let hf_full = hilbert_function(ring, &groebner(ring, &full, Some(bound))?, bound)?;
    let degrees: BTreeSet<u32> = gens.iter().filter_map(Poly::degree).collect();

    let mut out = Vec::with_capacity(bound as usize + 1);
    let mut cache: Option<(usize, GradedDims)> = None;
    for k in 0..=bound {
        let prefix: Vec<Poly<F>> =
            base.iter().chain(gens.iter().filter(|g| g.degree().is_some_and(|d| d < k))).cloned().collect();
        let below = degrees.range(..k).count();
        let hf = match &cache {
            Some((n, hf)) if *n == below => hf.clone(),
            _ if below == degrees.len() => hf_full.clone(),
            _ => {
                let hf = hilbert_function(ring, &groebner(ring, &prefix, Some(bound))?, bound)?;
                cache = Some((below, hf.clone()));
                hf
            }
        };
        out.push(hf.0[k as usize] - hf_full.0[k as usize]);
    }
    Ok(GradedDims(out))
}

/// Krull dimension of `S/I`, `None` for the unit ideal. Uses the largest set
/// of variables containing the support of no leading monomial.
pub fn krull_dim<F: Field>(ring: &PolyRing<F>, gb: &GroebnerBasis<F>) -> Result<Option<u32>, PolyError> {
    if let Some(b) = gb.bound() {
        return Err(PolyError::Truncated(b));
    }
    if gb.is_unit() {
        return Ok(None);
    }
    let masks: Vec<u32> = gb.leading_monomials().iter().map(Monomial::support).collect();
    let n = ring.nvars();

    fn search(n: usize, next: usize, set: u32, size: u32, masks: &[u32], best: &mut u32) {
        *best = (*best).max(size);
        if size + (n - next) as u32 <= *best {
            return;
        }
        for v in next..n {
            let s = set | (1 << v);
            if masks.iter().all(|&m| m & !s != 0) {
                search(n, v + 1, s, size + 1, masks, best);
            }
        }
    }
    let mut best = 0;
    search(n, 0, 0, 0, &masks, &mut best);
    Ok(Some(best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::polyalg::parse_poly;

    fn six() -> PolyRing<Rationals> {
        PolyRing::new(Rationals, ["a", "b", "c", "d", "e", "f"]).unwrap()
    }

    #[test]
    fn hilbert_of_hypersurface() {
        let r = six();
        let zero = groebner(&r, &[], Some(3)).unwrap();
        assert_eq!(hilbert_function(&r, &zero, 3).unwrap().as_slice(), &[1, 6, 21, 56]);
        let p = parse_poly(&r, "a*f - c*d").unwrap();
        let gb = groebner(&r, &[p], Some(3)).unwrap();
        assert_eq!(hilbert_function(&r, &gb, 3).unwrap().as_slice(), &[1, 6, 20, 50]);
        assert!(hilbert_function(&r, &gb, 4).is_err());
    }

    #[test]
    fn krull_dimensions() {
        let r = six();
        let p = |s: &str| parse_poly(&r, s).unwrap();
        let gb = groebner(&r, &[p("a*f - c*d")], None).unwrap();
        assert_eq!(krull_dim(&r, &gb).unwrap(), Some(5));
        let gb = groebner(&r, &[p("a*f - c*d"), p("a*c"), p("d*f")], None).unwrap();
        assert_eq!(krull_dim(&r, &gb).unwrap(), Some(4));
        let gb = groebner(&r, &[p("a - 1"), p("a")], None).unwrap();
        assert_eq!(krull_dim(&r, &gb).unwrap(), None);
        let gb = groebner(&r, &[p("a")], Some(2)).unwrap();
        assert_eq!(krull_dim(&r, &gb), Err(PolyError::Truncated(2)));
    }

    #[test]
    fn minimal_generators() {
        let r = PolyRing::new(PrimeField::new(7).unwrap(), ["x", "y", "z"]).unwrap();
        let p = |s: &str| parse_poly(&r, s).unwrap();
        // x^2*y and x*y*z are multiples of x*y
        let gens = [p("x^2"), p("x*y"), p("x^2*y"), p("y^3"), p("x*y*z")];
        assert_eq!(min_gen_degrees(&r, &gens, 4).unwrap().as_slice(), &[0, 0, 2, 1, 0]);
        let rel = relative_min_gen_degrees(&r, &[p("x^2")], &[p("x^2"), p("x*y")], 3).unwrap();
        assert_eq!(rel.as_slice(), &[0, 0, 1, 0]);
        assert_eq!(rel.to_string(), "[0, 0, 1, 0]");
    }
}
