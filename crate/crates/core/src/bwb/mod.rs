//! Line-bundle cohomology on the flag variety of SL3, Euler characteristics,
//! potential supports, and consistency checking of cohomology tables.

mod grothendieck;
pub mod table;

use std::collections::BTreeMap;

pub use grothendieck::GrothendieckElement;
pub use table::{verify_table, Claim, CohomologyTable, Family, TableError};

use crate::breps::WeightMultiset;
use crate::field::Characteristic;
use crate::weights::{in_bwb_locus, in_closed_alcove, locate, Location, PositiveRoot, Weight, WeylElement};

pub use crate::weights::weyl_dim;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BwbError {
    #[error("cohomology of O{weight} is not determined in characteristic {l} by the available rules")]
    NotDecidable { weight: Weight, l: Characteristic },
    #[error("not BWB-good in characteristic {l}; offending weights {witness}")]
    NotBwbGood { l: Characteristic, witness: WeightMultiset },
    #[error("{0} is not dominant")]
    NotDominant(Weight),
    #[error("cohomological degree {0} out of range 0..=3")]
    Degree(u32),
}

/// Nonzero cohomology groups by degree.
pub type Cohomology = BTreeMap<u32, GrothendieckElement>;

/// Cohomology of the line bundle `O(mu)` as classes in the Grothendieck group.
///
/// Decidable cases: `mu + rho` on a simple wall (always zero); `mu` dominant
/// (Kempf) or `mu = w0 . lambda` with `lambda` dominant (Serre duality);
/// characteristic zero (Bott); and the BWB locus in characteristic `l`.
pub fn line_cohomology(mu: Weight, l: Characteristic) -> Result<Cohomology, BwbError> {
    let shifted = mu + Weight::RHO;
    if shifted.pair(PositiveRoot::Alpha) == 0 || shifted.pair(PositiveRoot::Beta) == 0 {
        return Ok(Cohomology::new());
    }
    let single = |deg: u32, lambda: Weight| Cohomology::from([(deg, GrothendieckElement::irreducible(lambda))]);
    if mu.is_dominant() {
        return Ok(single(0, mu));
    }
    let antidominant = WeylElement::longest().dot(mu);
    if antidominant.is_dominant() {
        return Ok(single(3, antidominant));
    }
    if !l.is_zero() && !in_bwb_locus(mu, l) {
        return Err(BwbError::NotDecidable { weight: mu, l });
    }
    Ok(match locate(mu, l) {
        Location::Singular => Cohomology::new(),
        Location::Regular { w, lambda } => single(w.length(), lambda),
        Location::OutsideLocus { .. } => unreachable!("locus membership checked above"),
    })
}

/// Signed class of a single weight: `(-1)^l(w) [V(lambda)]` or zero.
fn weight_class(mu: Weight) -> Option<(u32, Weight)> {
    match locate(mu, Characteristic::ZERO) {
        Location::Singular => None,
        Location::Regular { w, lambda } | Location::OutsideLocus { w, lambda } => Some((w.length(), lambda)),
    }
}

pub fn euler_char(v: &WeightMultiset) -> GrothendieckElement {
    let mut chi = GrothendieckElement::zero();
    for (mu, k) in v.iter() {
        if let Some((len, lambda)) = weight_class(mu) {
            let sign = if len % 2 == 0 { 1 } else { -1 };
            chi.add_term(lambda, sign * k as i64);
        }
    }
    chi
}

/// Weights of `v` outside the BWB locus, with multiplicity.
pub fn bwb_bad_weights(v: &WeightMultiset, l: Characteristic) -> WeightMultiset {
    WeightMultiset::from_pairs(v.iter().filter(|(w, _)| !in_bwb_locus(*w, l)))
}

/// `Ok(())` if every weight lies in the BWB locus, else the offending weights.
pub fn bwb_good(v: &WeightMultiset, l: Characteristic) -> Result<(), WeightMultiset> {
    let bad = bwb_bad_weights(v, l);
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}

/// Potential support in degree `i`: dominant alcove weights `lambda` such that
/// `w . lambda` is a weight of `v` for some `w` of length `i`, counted with
/// the multiplicity of that weight.
pub fn psupp(v: &WeightMultiset, i: u32, l: Characteristic) -> Result<WeightMultiset, BwbError> {
    if i > 3 {
        return Err(BwbError::Degree(i));
    }
    bwb_good(v, l).map_err(|witness| BwbError::NotBwbGood { l, witness })?;
    let mut out = WeightMultiset::new();
    for w in WeylElement::all().iter().filter(|w| w.length() == i) {
        let winv = w.inverse();
        for (mu, k) in v.iter() {
            let lambda = winv.dot(mu);
            if lambda.is_dominant() && in_closed_alcove(lambda, l) {
                out.insert(lambda, k);
            }
        }
    }
    Ok(out)
}

/// Dimension of `V(lambda)` as a checked operation.
pub fn weyl_dimension(lambda: Weight) -> Result<u64, BwbError> {
    weyl_dim(lambda).ok_or(BwbError::NotDominant(lambda))
}

/// Alternating sum of a cohomology assignment.
pub fn alternating_sum(h: &Cohomology) -> GrothendieckElement {
    h.iter().fold(GrothendieckElement::zero(), |acc, (i, g)| if i % 2 == 0 { &acc + g } else { &acc - g })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::breps::build_rep_str;

    fn ch(l: u64) -> Characteristic {
        Characteristic::new(l).unwrap()
    }

    fn rep(s: &str) -> WeightMultiset {
        build_rep_str(s).unwrap()
    }

    #[test]
    fn line_cohomology_examples() {
        for l in [0, 5, 7] {
            let h = line_cohomology(Weight::ZERO, ch(l)).unwrap();
            assert_eq!(h, Cohomology::from([(0, GrothendieckElement::irreducible(Weight::ZERO))]));
        }
        assert!(line_cohomology(-Weight::RHO, ch(5)).unwrap().is_empty());
        assert_eq!(
            line_cohomology(-Weight::ALPHA, ch(5)).unwrap(),
            Cohomology::from([(1, GrothendieckElement::irreducible(Weight::ZERO))])
        );
    }

    #[test]
    fn line_cohomology_refuses_to_guess() {
        // 2rho - 3alpha = (-4, 5) is regular, outside the l = 5 locus, neither
        // dominant nor antidominant-shifted
        let mu = Weight::new(-4, 5);
        assert!(!mu.is_singular());
        assert_eq!(line_cohomology(mu, ch(5)), Err(BwbError::NotDecidable { weight: mu, l: ch(5) }));
        assert!(line_cohomology(mu, Characteristic::ZERO).is_ok());
    }

    #[test]
    fn rho_wall_outside_locus_is_not_decidable() {
        // mu + rho = (6,-6) lies only on the rho wall; its dominant conjugate is (0,6)
        let mu = Weight::new(5, -7);
        assert!(mu.is_singular());
        assert!(line_cohomology(mu, ch(5)).is_err());
        assert!(line_cohomology(mu, ch(7)).unwrap().is_empty());
    }

    #[test]
    fn line_cohomology_agrees_with_euler_char() {
        for l in [0, 5, 7] {
            for a in -10..=10 {
                for b in -10..=10 {
                    let mu = Weight::new(a, b);
                    if let Ok(h) = line_cohomology(mu, ch(l)) {
                        assert_eq!(alternating_sum(&h), euler_char(&WeightMultiset::singleton(mu)), "{mu} l={l}");
                    }
                }
            }
        }
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_char(&rep("b*b")).to_string(), "-[V(0,0)]");
        // H^2 = g^2 + F and nothing else, so the alternating sum is positive
        assert_eq!(euler_char(&rep("wedge^2(b)*b")).to_string(), "2[V(1,1)] + [V(0,0)]");
        assert_eq!(euler_char(&rep("F")).to_string(), "[V(0,0)]");
        assert!(euler_char(&rep("b")).is_zero());
    }

    #[test]
    fn serre_duality_dimensions() {
        for a in -10..=10 {
            for b in -10..=10 {
                let mu = Weight::new(a, b);
                let dual = -2 * Weight::RHO - mu;
                assert_eq!(
                    euler_char(&WeightMultiset::singleton(mu)).dim(),
                    -euler_char(&WeightMultiset::singleton(dual)).dim()
                );
            }
        }
    }

    #[test]
    fn tensoring_with_g_scales_dimension() {
        for v in ["b", "wedge^2(b)"] {
            let chi = euler_char(&rep(v)).dim();
            let chi_g = euler_char(&rep(&format!("({v})*g"))).dim();
            assert_eq!(chi_g, 8 * chi, "{v}");
        }
    }

    #[test]
    fn potential_supports() {
        let l5 = ch(5);
        assert_eq!(psupp(&rep("g/b"), 0, l5).unwrap(), WeightMultiset::singleton(Weight::RHO));
        let two_zeros = WeightMultiset::from_pairs([(Weight::ZERO, 2)]);
        assert_eq!(psupp(&rep("b"), 0, l5).unwrap(), two_zeros);
        assert_eq!(psupp(&rep("b"), 1, l5).unwrap(), two_zeros);
        assert!(psupp(&rep("b"), 2, l5).unwrap().is_empty());
        let v = rep("wedge^2(b)*b");
        let want = [
            WeightMultiset::from_pairs([(Weight::ZERO, 2)]),
            WeightMultiset::from_pairs([(Weight::ZERO, 10)]),
            WeightMultiset::from_pairs([(Weight::ZERO, 14), (Weight::RHO, 2)]),
            // weight -2rho = w0 . 0 has multiplicity 5
            WeightMultiset::from_pairs([(Weight::ZERO, 5)]),
        ];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(&psupp(&v, i as u32, l5).unwrap(), w, "i={i}");
        }
        assert_eq!(psupp(&v, 4, l5), Err(BwbError::Degree(4)));
    }

    #[test]
    fn bwb_goodness() {
        let l5 = ch(5);
        assert!(bwb_good(&rep("b*b"), l5).is_ok());
        assert_eq!(bwb_good(&rep("g/b*g/b"), l5), Err(WeightMultiset::singleton(2 * Weight::RHO)));
        assert!(bwb_good(&rep("g/b*g/b"), ch(7)).is_ok());
        assert!(bwb_good(&rep("F"), ch(2)).is_ok());
        assert!(matches!(psupp(&rep("g/b*g/b"), 0, l5), Err(BwbError::NotBwbGood { .. })));
    }

    #[test]
    fn weyl_dimension_errors() {
        assert_eq!(weyl_dimension(Weight::RHO), Ok(8));
        assert_eq!(weyl_dimension(-Weight::L1), Err(BwbError::NotDominant(-Weight::L1)));
    }
}
