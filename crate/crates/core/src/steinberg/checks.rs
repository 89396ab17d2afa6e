#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::breps::{build_rep, Atom, RepExpr};
use crate::bwb::euler_char;
use crate::field::{Characteristic, Field, PrimeField, Rationals};
use crate::linalg;
use crate::polyalg::{
    format_poly, groebner, hilbert_function, krull_dim, min_gen_degrees, parse_poly, relative_min_gen_degrees, snf,
    GradedDims, IntMatrix, Monomial, Poly, PolyRing,
};
use crate::report::{Entry, Report, Status};
use crate::weights::sl2;
use crate::with_field;

use super::ideals::{
    det, generic_matrix, make_ideal, mat_add, mat_mul, mat_scalar, pair_variables, trace, Ambient, IdealCase, QValue,
    Tag,
};
use super::SteinbergError;

/// Prime used for randomized evaluation, `2^31 - 1`.
pub const EVAL_PRIME: u64 = 2_147_483_647;

fn error_entry(id: impl Into<String>, e: impl ToString, anchor: &str) -> Entry {
    Entry::new(id, Status::Fail, "no error", e.to_string(), anchor)
}

// ---- dense matrices over F_p for sampling points ----

type DMat = Vec<Vec<u64>>;

fn dmul(f: &PrimeField, a: &DMat, b: &DMat) -> DMat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut s = 0;
                    for k in 0..n {
                        f.add_mul_assign(&mut s, &a[i][k], &b[k][j]);
                    }
                    s
                })
                .collect()
        })
        .collect()
}

fn dadd(f: &PrimeField, a: &DMat, b: &DMat) -> DMat {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(p, q)| f.add(p, q)).collect()).collect()
}

fn dscale(f: &PrimeField, c: u64, a: &DMat) -> DMat {
    a.iter().map(|r| r.iter().map(|x| f.mul(&c, x)).collect()).collect()
}

fn did(n: usize) -> DMat {
    (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect()
}

/// Gauss-Jordan inverse, `None` if singular.
fn dinv(f: &PrimeField, a: &DMat) -> Option<DMat> {
    let n = a.len();
    let mut m: Vec<Vec<u64>> = a.iter().zip(did(n)).map(|(r, e)| r.iter().copied().chain(e).collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&r| m[r][c] != 0)?;
        m.swap(c, p);
        let inv = f.inv(&m[c][c])?;
        for x in m[c].iter_mut() {
            *x = f.mul(x, &inv);
        }
        for r in 0..n {
            if r != c && m[r][c] != 0 {
                let k = m[r][c];
                for j in 0..2 * n {
                    let d = f.mul(&k, &m[c][j]);
                    m[r][j] = f.sub(&m[r][j], &d);
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn ddet(f: &PrimeField, a: &DMat) -> u64 {
    // via elimination
    let n = a.len();
    let mut m = a.clone();
    let mut d = 1;
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| m[r][c] != 0) else { return 0 };
        if p != c {
            m.swap(c, p);
            d = f.neg(&d);
        }
        d = f.mul(&d, &m[c][c]);
        let inv = f.inv(&m[c][c]).unwrap();
        for r in c + 1..n {
            let k = f.mul(&m[r][c], &inv);
            for j in c..n {
                let t = f.mul(&k, &m[c][j]);
                m[r][j] = f.sub(&m[r][j], &t);
            }
        }
    }
    d
}

struct Sampler {
    f: PrimeField,
    rng: ChaCha8Rng,
}

impl Sampler {
    fn elem(&mut self) -> u64 {
        self.rng.gen_range(0..self.f.modulus())
    }

    fn nonzero(&mut self) -> u64 {
        self.rng.gen_range(1..self.f.modulus())
    }

    /// Avoids 0 and +-1.
    fn generic_q(&mut self) -> u64 {
        self.rng.gen_range(2..self.f.modulus() - 1)
    }

    fn invertible(&mut self, n: usize) -> (DMat, DMat) {
        loop {
            let g: DMat = (0..n).map(|_| (0..n).map(|_| self.elem()).collect()).collect();
            if let Some(gi) = dinv(&self.f, &g) {
                return (g, gi);
            }
        }
    }

    fn conj(&self, g: &(DMat, DMat), a: &DMat) -> DMat {
        dmul(&self.f, &dmul(&self.f, &g.0, a), &g.1)
    }

    fn upper(&mut self, n: usize) -> DMat {
        let mut m = vec![vec![0; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                m[i][j] = self.elem();
            }
        }
        m
    }
}

fn flatten(m: &DMat, skip_last: bool) -> Vec<u64> {
    let n = m.len();
    let mut v: Vec<u64> = m.iter().flatten().copied().collect();
    if skip_last {
        v.truncate(n * n - 1);
    }
    v
}

/// A random point of the variety the case describes, in ring coordinates.
fn sample_point(case: &IdealCase, s: &mut Sampler) -> Vec<u64> {
    let f = s.f;
    let n = case.tag.n();
    match case.tag {
        Tag::N2 | Tag::N3Z | Tag::N3X => {
            let (m, nn) = match case.tag {
                Tag::N3X => {
                    // commuting: af = cd with a != 0
                    let (a, b, c, d, e) = (s.nonzero(), s.elem(), s.elem(), s.elem(), s.elem());
                    let ff = f.mul(&f.mul(&c, &d), &f.inv(&a).unwrap());
                    (vec![vec![0, a, b], vec![0, 0, c], vec![0; 3]], vec![vec![0, d, e], vec![0, 0, ff], vec![0; 3]])
                }
                // for n = 2 any two strictly upper matrices commute
                _ => (s.upper(n), s.upper(n)),
            };
            let g = s.invertible(n);
            let traceless = case.ambient == Ambient::Traceless;
            let mut pt = flatten(&s.conj(&g, &m), traceless);
            pt.extend(flatten(&s.conj(&g, &nn), traceless));
            pt
        }
        Tag::GlN2 | Tag::GlN3 => {
            let q = match case.q {
                QValue::Symbolic => s.generic_q(),
                QValue::Value(v) => f.from_i64(v),
            };
            let g = s.invertible(n);
            let mut d = vec![vec![0; n]; n];
            let mut nil = vec![vec![0; n]; n];
            for i in 0..n {
                d[i][i] = f.pow(&q, (n - 1 - i) as u64);
                if i + 1 < n {
                    nil[i][i + 1] = s.elem();
                }
            }
            let phi = s.conj(&g, &d);
            let nn = s.conj(&g, &nil);
            // exp(N), truncated since N^n = 0
            let mut sigma = dadd(&f, &did(n), &nn);
            if n == 3 {
                let half = f.inv(&2).unwrap();
                sigma = dadd(&f, &sigma, &dscale(&f, half, &dmul(&f, &nn, &nn)));
            }
            let mut pt = flatten(&phi, false);
            pt.extend(flatten(&sigma, false));
            pt.push(f.inv(&ddet(&f, &phi)).unwrap_or(0));
            pt.push(f.inv(&ddet(&f, &sigma)).unwrap_or(0));
            if case.q == QValue::Symbolic {
                pt.push(q);
            }
            pt
        }
        Tag::Cnil => {
            let q = match case.q {
                QValue::Symbolic => s.generic_q(),
                QValue::Value(v) => f.from_i64(v),
            };
            let (a, b, c, d) = (s.nonzero(), s.elem(), s.elem(), s.elem());
            // the fibre equation is (q^2 - q) e + a f - q c d = 0: solve for e
            // when q^2 - q is a unit, otherwise for f
            let coeff = f.sub(&f.mul(&q, &q), &q);
            let qcd = f.mul(&q, &f.mul(&c, &d));
            let (e, ff) = match f.inv(&coeff) {
                Some(ci) => {
                    let ff = s.elem();
                    let rest = f.sub(&f.mul(&a, &ff), &qcd);
                    (f.neg(&f.mul(&rest, &ci)), ff)
                }
                None => (s.elem(), f.mul(&qcd, &f.inv(&a).unwrap())),
            };
            let mut pt = vec![a, b, c, d, e, ff];
            if case.q == QValue::Symbolic {
                pt.push(q);
            }
            pt
        }
    }
}

/// Evaluates every generator (plus `extra` polynomials, parsed in the case's
/// ring) at `trials` random points of the parametrized variety over
/// `F_{2^31-1}`; passes iff all vanish.
pub fn parametrization_check(case: &IdealCase, trials: u32, seed: u64, extra: &[&str]) -> Report {
    let anchor = "generators vanish on the parametrized component";
    let id = format!("ideal.{}.parametrization", case.tag);
    let mut report = Report::new();
    let field = PrimeField::new(EVAL_PRIME).expect("prime");
    let ideal = match make_ideal(case, field) {
        Ok(i) => i,
        Err(e) => {
            report.push(error_entry(id, e, anchor));
            return report;
        }
    };
    let mut gens = ideal.gens.clone();
    let mut labels = ideal.labels.clone();
    for s in extra {
        match parse_poly(&ideal.ring, s) {
            Ok(p) => {
                gens.push(p);
                labels.push(format!("extra {s}"));
            }
            Err(e) => {
                report.push(error_entry(id, e, anchor));
                return report;
            }
        }
    }
    let mut sampler = Sampler { f: field, rng: ChaCha8Rng::seed_from_u64(seed) };
    report.timed(|| {
        let mut first_failure = None;
        'trials: for t in 0..trials {
            let pt = sample_point(case, &mut sampler);
            for (g, l) in gens.iter().zip(&labels) {
                if ideal.ring.eval(g, &pt) != 0 {
                    first_failure = Some(format!("{l} nonzero at trial {t}"));
                    break 'trials;
                }
            }
        }
        let expected = format!("{} generators vanish at {trials} points", gens.len());
        let (status, actual) = match first_failure {
            None => (Status::Pass, expected.clone()),
            Some(msg) => (Status::Fail, msg),
        };
        vec![Entry::new(id.clone(), status, expected, actual, anchor)]
    });

    // Schwartz-Zippel: a polynomial of degree d in the generator coordinates
    // pulls back, after clearing the inverse of g and of det, to degree at
    // most d * (2n + 2) in the sampled parameters.
    let n = case.tag.n() as u64;
    let d = gens.iter().filter_map(Poly::degree).max().unwrap_or(0) as u64;
    let per_trial = (d * (2 * n + 2)) as f64 / EVAL_PRIME as f64;
    let status = if per_trial < 1e-6 { Status::Pass } else { Status::Fail };
    report.push(Entry::new(
        format!("ideal.{}.sz-bound", case.tag),
        status,
        "per-trial miss probability < 1e-6",
        format!("per-trial {per_trial:.3e}, over {trials} trials 10^{:.0}", trials as f64 * per_trial.log10()),
        "Schwartz-Zippel bound for the randomized containment test",
    ));
    report
}

/// Character-side dimensions of degree `k` sections on the flag variety:
/// `dim chi(Sym^k[(g/b)^2])`.
fn character_dims(tag: Tag, bound: u32) -> Vec<u64> {
    (0..=bound)
        .map(|k| match tag {
            // (g/b)^2 = O(2)^2 on P^1, so Sym^k is (k+1) copies of O(2k)
            Tag::N2 => (k as i64 + 1) as u64 * sl2::euler_char_dim(2 * k as i64) as u64,
            _ => {
                let g_b = RepExpr::atom(Atom::GModB);
                let rep = build_rep(&g_b.clone().sum(g_b).sym(k)).expect("small representation");
                euler_char(&rep).dim() as u64
            }
        })
        .collect()
}

fn gb_hilbert_in<F: Field>(field: F, tag: Tag, bound: u32) -> Result<GradedDims, SteinbergError> {
    let ideal = make_ideal(&IdealCase::new(tag), field)?;
    let gb = groebner(&ideal.ring, &ideal.gens, Some(bound))?;
    Ok(hilbert_function(&ideal.ring, &gb, bound)?)
}

/// Hilbert function of the case's ideal (default ambient, `q = 1`) through
/// degree `bound`.
pub fn gb_hilbert(tag: Tag, bound: u32, l: Characteristic) -> Result<GradedDims, SteinbergError> {
    with_field!(l, |f| gb_hilbert_in(f, tag, bound))
}

/// Compares the Hilbert function of the ideal with the character-side
/// dimensions (all higher cohomology of `Sym[(g/b)^2]` vanishes).
pub fn hilbert_cross_check(tag: Tag, bound: u32, l: Characteristic) -> Report {
    let id = format!("hilbert.{tag}.char{l}");
    let anchor = "coordinate ring dimensions equal sections of Sym[(g/b)^2]";
    let mut report = Report::new();
    if !matches!(tag, Tag::N2 | Tag::N3Z) {
        report.push(Entry::new(id, Status::Skipped, "case n2 or n3-z", tag.to_string(), anchor));
        return report;
    }
    report.timed(|| {
        let expected = GradedDims::new(character_dims(tag, bound));
        match gb_hilbert(tag, bound, l) {
            Ok(actual) => vec![Entry::compare(id, expected, actual, anchor)],
            Err(e) => vec![error_entry(id, e, anchor)],
        }
    });
    report
}

/// Hilbert functions agree across the given characteristics.
pub fn cross_characteristic_check(tag: Tag, bound: u32, chars: &[Characteristic]) -> Report {
    let names: Vec<String> = chars.iter().map(ToString::to_string).collect();
    let id = format!("hilbert.{tag}.flatness");
    let anchor = "Hilbert function independent of the characteristic";
    let mut report = Report::new();
    report.timed(|| {
        let mut dims = Vec::new();
        for &l in chars {
            match gb_hilbert(tag, bound, l) {
                Ok(d) => dims.push(d),
                Err(e) => return vec![error_entry(id.clone(), e, anchor)],
            }
        }
        let same = dims.windows(2).all(|w| w[0] == w[1]);
        let actual: Vec<String> = dims.iter().zip(&names).map(|(d, l)| format!("char {l}: {d}")).collect();
        let status = if same { Status::Pass } else { Status::Fail };
        vec![Entry::new(
            id.clone(),
            status,
            format!("identical over characteristics {}", names.join(", ")),
            actual.join("; "),
            anchor,
        )]
    });
    report
}

/// Degrees of minimal generators of the case's ideal against `expected`.
pub fn min_gen_check(case: &IdealCase, bound: u32, l: Characteristic, expected: &[u64]) -> Report {
    let id = format!("mingens.{}.char{l}", case.tag);
    let anchor = "graded dimensions of I/S_+I";
    let mut report = Report::new();
    report.timed(|| {
        let res: Result<GradedDims, SteinbergError> =
            with_field!(l, |f| make_ideal(case, f).and_then(|i| Ok(min_gen_degrees(&i.ring, &i.gens, bound)?)) );
        match res {
            Ok(d) => vec![Entry::compare(id.clone(), GradedDims::new(expected.to_vec()), d, anchor)],
            Err(e) => vec![error_entry(id.clone(), e, anchor)],
        }
    });
    report
}

fn mnm_in<F: Field>(field: F) -> Result<Vec<(String, String)>, SteinbergError> {
    let ideal = make_ideal(&IdealCase::new(Tag::N3Z), field)?;
    let r = &ideal.ring;
    let gb = groebner(r, &ideal.gens, Some(3))?;
    let m = generic_matrix(r, "m", 3, true);
    let n = generic_matrix(r, "n", 3, true);
    let mut out = Vec::new();
    for (name, prod) in [("MNM", mat_mul(r, &mat_mul(r, &m, &n), &m)), ("NMN", mat_mul(r, &mat_mul(r, &n, &m), &n))] {
        for (i, row) in prod.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                let nf = gb.normal_form(r, p)?;
                out.push((format!("{name}[{},{}]", i + 1, j + 1), format_poly(r, &nf)));
            }
        }
    }
    Ok(out)
}

/// Entries of `MNM` and `NMN` reduce to zero modulo the degree-3 ideal.
pub fn mnm_membership_check(l: Characteristic) -> Report {
    let anchor = "entries of MNM and NMN lie in the ideal";
    let mut report = Report::new();
    report.timed(|| match with_field!(l, |f| mnm_in(f)) {
        Ok(rows) => rows
            .into_iter()
            .map(|(label, nf)| Entry::compare(format!("membership.n3-z.char{l}.{label}"), "0", nf, anchor))
            .collect(),
        Err(e) => vec![error_entry(format!("membership.n3-z.char{l}"), e, anchor)],
    });
    report
}

fn relative_in<F: Field>(f: F, bound: u32) -> Result<GradedDims, SteinbergError> {
    let base = make_ideal(&IdealCase::new(Tag::N3Z), f.clone())?;
    let x = make_ideal(&IdealCase::new(Tag::N3X).with_ambient(Ambient::Traceless), f)?;
    Ok(relative_min_gen_degrees(&base.ring, &base.gens, &x.gens, bound)?)
}

/// Generators the commuting ideal needs beyond the ideal of the nilpotent
/// bundle: 8 in degree 2 and none elsewhere.
pub fn relative_generators_check(bound: u32, l: Characteristic) -> Report {
    let id = format!("relative-gens.n3-x.char{l}");
    let anchor = "commutator entries generate I_X over R";
    let mut report = Report::new();
    report.timed(|| {
        let res = with_field!(l, |f| relative_in(f, bound));
        let mut expected = vec![0; bound as usize + 1];
        if bound >= 2 {
            expected[2] = 8;
        }
        match res {
            Ok(d) => vec![Entry::compare(id.clone(), GradedDims::new(expected), d, anchor)],
            Err(e) => vec![error_entry(id.clone(), e, anchor)],
        }
    });
    report
}

/// Results of the degree-3 span computation in one ambient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span17 {
    pub ambient: Ambient,
    /// Rank of the 18 entries modulo the subspace, over the requested field.
    pub rank: usize,
    /// Invariant factors of the subspace generators alone and together with
    /// the 18 entries.
    pub snf_subspace: Vec<BigInt>,
    pub snf_all: Vec<BigInt>,
}

impl Span17 {
    /// Primes dividing some invariant factor; outside these the rank over
    /// `F_l` equals the rank over `Q`.
    pub fn bad_primes(&self) -> Vec<u64> {
        let mut ps = Vec::new();
        for d in self.snf_subspace.iter().chain(&self.snf_all) {
            let mut d = d.abs();
            let mut p = BigInt::from(2);
            while d > BigInt::one() {
                if d.is_multiple_of(&p) {
                    let pu = p.to_u64().expect("small prime");
                    if !ps.contains(&pu) {
                        ps.push(pu);
                    }
                    d /= &p;
                } else {
                    p += 1;
                }
            }
        }
        ps.sort();
        ps
    }
}

fn integer_rows(
    r: &PolyRing<Rationals>,
    polys: &[Poly<Rationals>],
    index: &BTreeMap<Monomial, usize>,
) -> Vec<Vec<BigInt>> {
    let _ = r;
    polys
        .iter()
        .map(|p| {
            let mut row = vec![BigInt::from(0); index.len()];
            for (m, c) in p.terms() {
                assert!(c.is_integer(), "integer coefficients");
                row[index[m]] = c.numer().clone();
            }
            row
        })
        .collect()
}

/// Rank of the entries of `M^2 N` and `N M^2` modulo the span of the entries
/// of `M tr(MN)`, `N tr(M^2)` (and `tr(M)^2 N` in the full ambient), plus
/// the Smith invariant factors of the integer coefficient matrices.
pub fn span17_data(ambient: Ambient, l: Characteristic) -> Result<Span17, SteinbergError> {
    let traceless = ambient == Ambient::Traceless;
    let r = PolyRing::new(Rationals, pair_variables(3, traceless))?;
    let m = generic_matrix(&r, "m", 3, traceless);
    let n = generic_matrix(&r, "n", 3, traceless);
    let m2 = mat_mul(&r, &m, &m);
    let entries = |a: &Vec<Vec<Poly<Rationals>>>| a.iter().flatten().cloned().collect::<Vec<_>>();
    let scalar_times = |c: &Poly<Rationals>, a: &Vec<Vec<Poly<Rationals>>>| {
        a.iter().flatten().map(|p| r.mul(c, p)).collect::<Vec<_>>()
    };

    let mut sub = scalar_times(&trace(&r, &mat_mul(&r, &m, &n)), &m);
    sub.extend(scalar_times(&trace(&r, &m2), &n));
    if !traceless {
        let t = trace(&r, &m);
        sub.extend(scalar_times(&r.mul(&t, &t), &n));
    }
    let mut target = entries(&mat_mul(&r, &m2, &n));
    target.extend(entries(&mat_mul(&r, &n, &m2)));

    let mut monos: Vec<Monomial> = sub.iter().chain(&target).flat_map(|p| p.terms().iter().map(|t| t.0)).collect();
    monos.sort();
    monos.dedup();
    let index: BTreeMap<Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let sub_rows = integer_rows(&r, &sub, &index);
    let target_rows = integer_rows(&r, &target, &index);

    let rank = with_field!(l, |f| {
        let conv = |rows: &[Vec<BigInt>]| -> Vec<Vec<_>> {
            rows.iter().map(|row| row.iter().map(|x| f.from_rational(&x.clone().into()).unwrap()).collect()).collect()
        };
        let s = conv(&sub_rows);
        let mut all = s.clone();
        all.extend(conv(&target_rows));
        linalg::rank(&f, index.len(), &all) - linalg::rank(&f, index.len(), &s)
    });
    let mut all_rows = sub_rows.clone();
    all_rows.extend(target_rows);
    Ok(Span17 {
        ambient,
        rank,
        snf_subspace: snf(&IntMatrix::from_rows(sub_rows)),
        snf_all: snf(&IntMatrix::from_rows(all_rows)),
    })
}

/// The 17-dimensional span claim, in both ambients.
pub fn span17_check(l: Characteristic) -> Report {
    let anchor = "degree-3 entries span a 17-dimensional space";
    let mut report = Report::new();
    for ambient in [Ambient::Traceless, Ambient::FullMatrix] {
        let base = format!("span17.{ambient}.char{l}");
        report.timed(|| match span17_data(ambient, l) {
            Ok(s) => {
                let bad: Vec<String> = s.bad_primes().iter().map(u64::to_string).collect();
                let primes_ok = s.bad_primes().iter().all(|&p| p == 2);
                vec![
                    Entry::compare(format!("{base}.rank"), 17, s.rank, anchor),
                    Entry::new(
                        format!("{base}.snf-primes"),
                        if primes_ok { Status::Pass } else { Status::Fail },
                        "{2} or smaller",
                        format!("{{{}}}", bad.join(",")),
                        "invariant factors only involve the prime 2",
                    ),
                ]
            }
            Err(e) => vec![error_entry(base, e, anchor)],
        });
    }
    report
}

/// `(locus, expected dimension, computed dimension)`
type KrullRow = (&'static str, u32, Option<u32>);

fn krull_in<F: Field>(field: F) -> Result<Vec<KrullRow>, SteinbergError> {
    let mut out = Vec::new();
    let six = PolyRing::new(field.clone(), ["a", "b", "c", "d", "e", "f"])?;
    let p = |s: &str| parse_poly(&six, s);
    let hyper = [p("a*f - c*d")?];
    out.push(("commuting-nilradical", 5, krull_dim(&six, &groebner(&six, &hyper, None)?)?));
    let sing = [p("a*f - c*d")?, p("a*c")?, p("d*f")?];
    out.push(("irregular-locus", 4, krull_dim(&six, &groebner(&six, &sing, None)?)?));

    let x = make_ideal(&IdealCase::new(Tag::N3X).with_ambient(Ambient::Traceless), field)?;
    let r = &x.ring;
    let gb = groebner(r, &x.gens, None)?;
    out.push(("commuting-variety", 8, krull_dim(r, &gb)?));
    let m = generic_matrix(r, "m", 3, true);
    let n = generic_matrix(r, "n", 3, true);
    let mut gens = gb.polys().to_vec();
    gens.extend(mat_mul(r, &m, &m).into_iter().flatten());
    gens.extend(mat_mul(r, &n, &n).into_iter().flatten());
    gens.retain(|g| !g.is_zero());
    out.push(("square-zero-locus", 6, krull_dim(r, &groebner(r, &gens, None)?)?));
    Ok(out)
}

/// Krull dimensions of the commuting nilradical, its irregular locus, the
/// commuting variety and the locus where neither matrix is regular.
pub fn krull_dim_checks(l: Characteristic) -> Report {
    let anchor = "dimension count";
    let mut report = Report::new();
    report.timed(|| match with_field!(l, |f| krull_in(f)) {
        Ok(rows) => rows
            .into_iter()
            .map(|(name, want, got)| {
                let got = got.map_or("empty".to_string(), |d| d.to_string());
                Entry::compare(format!("krull.{name}.char{l}"), want, got, anchor)
            })
            .collect(),
        Err(e) => vec![error_entry(format!("krull.char{l}"), e, anchor)],
    });
    report
}

/// Substitutes `Phi = I + M`, `Sigma = I + N` into the group ideal at `q = 1`
/// and checks two-sided containment with the nilpotent-pair ideal (full
/// ambient) extended by the inverse-determinant relations.
fn special_fibre_in<F: Field>(field: F, n: usize) -> Result<(bool, bool), SteinbergError> {
    let (gl_tag, nil_tag) = if n == 2 { (Tag::GlN2, Tag::N2) } else { (Tag::GlN3, Tag::N3X) };
    let gl = make_ideal(&IdealCase::new(gl_tag).with_q(QValue::Value(1)), field.clone())?;
    let nil = make_ideal(&IdealCase::new(nil_tag).with_ambient(Ambient::FullMatrix), field.clone())?;

    let mut vars = pair_variables(n, false);
    vars.push("u".into());
    vars.push("v".into());
    let r = PolyRing::new(field, vars)?;
    let k = n * n;
    let shift = |i: usize, j: usize| if i == j { r.one() } else { Poly::zero() };
    let images: Vec<Poly<F>> = (0..gl.ring.nvars())
        .map(|i| {
            let v = r.var(i);
            if i < 2 * k {
                r.add(&v, &shift(i % k / n, i % k % n))
            } else {
                v
            }
        })
        .collect();
    let lhs: Vec<Poly<F>> = gl.gens.iter().map(|g| gl.ring.substitute(g, &r, &images)).collect();

    let embed: Vec<Poly<F>> = (0..nil.ring.nvars()).map(|i| r.var(i)).collect();
    let mut rhs: Vec<Poly<F>> = nil.gens.iter().map(|g| nil.ring.substitute(g, &r, &embed)).collect();
    let id = mat_scalar(n, &r.one());
    let m = mat_add(&r, &id, &generic_matrix(&r, "m", n, false));
    let nn = mat_add(&r, &id, &generic_matrix(&r, "n", n, false));
    rhs.push(r.sub(&r.mul(&r.v("u"), &det(&r, &m)), &r.one()));
    rhs.push(r.sub(&r.mul(&r.v("v"), &det(&r, &nn)), &r.one()));

    let gl_gb = groebner(&r, &lhs, None)?;
    let nil_gb = groebner(&r, &rhs, None)?;
    let contains = |gb: &crate::polyalg::GroebnerBasis<F>, ps: &[Poly<F>]| -> Result<bool, SteinbergError> {
        for p in ps {
            if !gb.contains(&r, p)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    Ok((contains(&gl_gb, &rhs)?, contains(&nil_gb, &lhs)?))
}

/// At `q = 1`, the group equations become the nilpotent-pair equations.
pub fn gl_special_fibre_check(n: usize, l: Characteristic) -> Report {
    let tag = if n == 2 { Tag::GlN2 } else { Tag::GlN3 };
    let id = format!("ideal.{tag}.special-fibre.char{l}");
    let anchor = "group equations at q = 1 reduce to the nilpotent-pair equations";
    let mut report = Report::new();
    report.timed(|| match with_field!(l, |f| special_fibre_in(f, n)) {
        Ok((a, b)) => vec![Entry::compare(
            id.clone(),
            "equal",
            if a && b {
                "equal".into()
            } else {
                format!("nilpotent-pair ideal contained: {a}, group ideal contained: {b}")
            },
            anchor,
        )],
        Err(e) => vec![error_entry(id.clone(), e, anchor)],
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_inverse() {
        let f = PrimeField::new(7).unwrap();
        let a = vec![vec![1, 2, 0], vec![0, 1, 3], vec![4, 0, 1]];
        let ai = dinv(&f, &a).unwrap();
        assert_eq!(dmul(&f, &a, &ai), did(3));
        assert_eq!(ddet(&f, &a), (1 + 2 * 12) % 7);
        assert!(dinv(&f, &vec![vec![1, 2], vec![2, 4]]).is_none());
    }

    #[test]
    fn sampled_points_are_reproducible() {
        let case = IdealCase::new(Tag::N3Z);
        let a = parametrization_check(&case, 5, 9, &[]);
        let b = parametrization_check(&case, 5, 9, &[]);
        assert_eq!(
            a.entries.iter().map(|e| &e.actual).collect::<Vec<_>>(),
            b.entries.iter().map(|e| &e.actual).collect::<Vec<_>>()
        );
        assert!(a.passed());
    }

    #[test]
    fn character_side_small_degrees() {
        assert_eq!(character_dims(Tag::N2, 3), vec![1, 6, 15, 28]);
        // Sym^1 = (g/b)^2 has H^0 = g + g
        assert_eq!(character_dims(Tag::N3Z, 1), vec![1, 16]);
    }
}
