use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use steinberg_core::breps::{build_rep, Atom, RepExpr, WeightMultiset};
use steinberg_core::bwb::{euler_char, psupp, GrothendieckElement};
use steinberg_core::field::{Characteristic, Field, PrimeField};
use steinberg_core::liealg::build_based_rep;
use steinberg_core::polyalg::{
    format_poly, gcd_of_minors, groebner, hilbert_function, parse_poly, snf, IntMatrix, Monomial, Poly, PolyRing,
};
use steinberg_core::weights::{class_reduce, Weight, WeylElement};

fn weight() -> impl Strategy<Value = Weight> {
    (-12i64..=12, -12i64..=12).prop_map(|(a, b)| Weight::new(a, b))
}

fn weyl() -> impl Strategy<Value = WeylElement> {
    (0usize..6).prop_map(|i| WeylElement::all()[i])
}

fn atom() -> impl Strategy<Value = RepExpr> {
    prop_oneof![
        Just(Atom::B),
        Just(Atom::N),
        Just(Atom::G),
        Just(Atom::GModB),
        (-3i64..=3, -3i64..=3).prop_map(|(a, b)| Atom::Line(Weight::new(a, b))),
    ]
    .prop_map(RepExpr::atom)
}

/// Expressions of dimension at most a few hundred.
fn small_expr() -> impl Strategy<Value = RepExpr> {
    atom().prop_recursive(2, 6, 2, |inner| {
        prop_oneof![
            (inner.clone(), atom()).prop_map(|(x, y)| x.tensor(y)),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| x.sum(y)),
            (atom(), 0u32..=3).prop_map(|(x, j)| x.wedge(j)),
            (atom(), 0u32..=2).prop_map(|(x, k)| x.sym(k)),
            inner.clone().prop_map(RepExpr::dual),
            (inner, (-2i64..=2, -2i64..=2)).prop_map(|(x, (a, b))| x.twist(Weight::new(a, b))),
        ]
    })
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn coefficients(x: &GrothendieckElement) -> BTreeMap<Weight, i64> {
    x.iter().collect()
}

proptest! {
    #[test]
    fn dot_action_is_a_group_action(w in weyl(), v in weyl(), lambda in weight()) {
        prop_assert_eq!(w.dot(v.dot(lambda)), w.compose(&v).dot(lambda));
        prop_assert_eq!(w.inverse().dot(w.dot(lambda)), lambda);
        prop_assert_eq!(w.dot(-Weight::RHO), -Weight::RHO);
    }

    #[test]
    fn weyl_action_preserves_the_pairing_norm(w in weyl(), lambda in weight()) {
        // quadratic form invariant under W, in fundamental coordinates
        let q = |x: Weight| x.a * x.a + x.a * x.b + x.b * x.b;
        prop_assert_eq!(q(w.apply(lambda)), q(lambda));
    }

    #[test]
    fn class_map_is_a_homomorphism(x in weight(), y in weight(), k in -10i64..=10) {
        prop_assert_eq!(class_reduce(x + y), class_reduce(x) + class_reduce(y));
        prop_assert_eq!(class_reduce(x + k * Weight::new(3, -3)), class_reduce(x));
    }

    #[test]
    fn printer_and_parser_round_trip(e in small_expr()) {
        let text = e.to_string();
        prop_assert_eq!(RepExpr::parse(&text).unwrap(), e);
    }

    #[test]
    fn character_dimensions(e in small_expr(), f in atom(), j in 0u32..=4, k in 0u32..=3) {
        let v = build_rep(&e).unwrap();
        let w = build_rep(&f).unwrap();
        prop_assert_eq!(v.tensor(&w).unwrap().dim(), v.dim() * w.dim());
        prop_assert_eq!(w.wedge(j).unwrap().dim(), binom(w.dim(), j as u64));
        prop_assert_eq!(w.sym(k).unwrap().dim(), binom(w.dim() + k as u64 - 1, k as u64));
        prop_assert_eq!(v.dual().dual(), v.clone());
        prop_assert_eq!(v.direct_sum(&w).dim(), v.dim() + w.dim());
    }

    #[test]
    fn twisting_translates(e in small_expr(), by in weight(), mu in weight()) {
        let v = build_rep(&e).unwrap();
        prop_assert_eq!(v.twist(by).multiplicity(mu + by), v.multiplicity(mu));
    }

    #[test]
    fn euler_characteristic_is_additive(x in small_expr(), y in small_expr()) {
        let (v, w) = (build_rep(&x).unwrap(), build_rep(&y).unwrap());
        let mut sum = coefficients(&euler_char(&v));
        for (lambda, c) in euler_char(&w).iter() {
            *sum.entry(lambda).or_insert(0) += c;
        }
        sum.retain(|_, c| *c != 0);
        prop_assert_eq!(coefficients(&euler_char(&v.direct_sum(&w))), sum);
    }

    #[test]
    fn euler_characteristic_of_a_line(lambda in weight()) {
        // chi(F(lambda)) is zero or plus/minus one irreducible, at the dot orbit of lambda
        let chi = euler_char(&WeightMultiset::singleton(lambda));
        let terms: Vec<_> = chi.iter().collect();
        prop_assert!(terms.len() <= 1);
        for (mu, c) in terms {
            prop_assert!(mu.is_dominant());
            prop_assert_eq!(c.abs(), 1);
            prop_assert!(WeylElement::all().iter().any(|w| w.dot(lambda) == mu));
        }
    }

    #[test]
    fn psupp_alternating_sum_is_chi(e in small_expr()) {
        let v = build_rep(&e).unwrap();
        let l = Characteristic::new(7).unwrap();
        prop_assume!(psupp(&v, 0, l).is_ok());
        let mut signed: BTreeMap<Weight, i64> = BTreeMap::new();
        for i in 0..=3u32 {
            for (lambda, m) in psupp(&v, i, l).unwrap().iter() {
                prop_assert!(lambda.is_dominant());
                *signed.entry(lambda).or_insert(0) += if i % 2 == 0 { m as i64 } else { -(m as i64) };
            }
        }
        signed.retain(|_, c| *c != 0);
        prop_assert_eq!(signed, coefficients(&euler_char(&v)));
    }

    #[test]
    fn based_reps_match_characters(e in small_expr()) {
        let v = build_rep(&e).unwrap();
        prop_assume!(v.dim() <= 400);
        let f = PrimeField::new(7).unwrap();
        let based = build_based_rep(&e, &f).unwrap();
        prop_assert_eq!(based.dim() as u64, v.dim());
        for (mu, m) in v.iter() {
            prop_assert_eq!(based.weight_space_dim(mu) as u64, m);
        }
    }
}

fn poly_in(ring: &PolyRing<PrimeField>, terms: &[(u32, u32, u32, i64)]) -> Poly<PrimeField> {
    let f = *ring.field();
    Poly::from_terms(&f, terms.iter().map(|&(a, b, c, k)| (Monomial::from_exps(&[a, b, c]), f.from_i64(k))))
}

fn homogeneous_terms(d: u32) -> impl Strategy<Value = Vec<(u32, u32, u32, i64)>> {
    prop::collection::vec((0..=d, 0..=d, -3i64..=3), 1..4).prop_map(move |ts| {
        ts.into_iter().filter(|(a, b, _)| a + b <= d).map(|(a, b, k)| (a, b, d - a - b, k)).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generators_reduce_to_zero(gens in prop::collection::vec((1u32..=3).prop_flat_map(homogeneous_terms), 1..4)) {
        let ring = PolyRing::new(PrimeField::new(7).unwrap(), ["x", "y", "z"]).unwrap();
        let polys: Vec<_> = gens.iter().map(|t| poly_in(&ring, t)).collect();
        let gb = groebner(&ring, &polys, None).unwrap();
        for p in &polys {
            prop_assert!(gb.normal_form(&ring, p).unwrap().is_zero());
        }
        // Hilbert function of a homogeneous ideal never exceeds the ambient count
        let h = hilbert_function(&ring, &gb, 4).unwrap();
        for k in 0..=4 {
            prop_assert!(h.get(k).unwrap() <= binom(k as u64 + 2, 2));
        }
        let q = ring.mul(&polys[0], &ring.add(&ring.v("x"), &ring.v("y")));
        prop_assert!(gb.contains(&ring, &q).unwrap());
    }

    #[test]
    fn polynomial_text_round_trips(t in (1u32..=3).prop_flat_map(homogeneous_terms)) {
        let ring = PolyRing::new(PrimeField::new(7).unwrap(), ["x", "y", "z"]).unwrap();
        let p = poly_in(&ring, &t);
        let text = format_poly(&ring, &p);
        prop_assert_eq!(parse_poly(&ring, &text).unwrap(), p);
    }

    #[test]
    fn smith_form_divisibility(rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 3), 1..4)) {
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = IntMatrix::from_i64(&refs);
        let d = snf(&m);
        for w in d.windows(2) {
            prop_assert_eq!(&w[1] % &w[0], BigInt::from(0));
        }
        // d_1 ... d_k equals the gcd of k x k minors
        let mut prod = BigInt::from(1);
        for (k, dk) in d.iter().enumerate() {
            prod *= dk;
            prop_assert_eq!(&prod, &gcd_of_minors(&m, k + 1));
        }
        prop_assert_eq!(gcd_of_minors(&m, d.len() + 1), BigInt::from(0));
    }
}
