//! Generator lists for the ideals of pairs of matrices studied here.

#![allow(clippy::needless_range_loop)]

use std::fmt;
use std::str::FromStr;

use crate::field::Field;
use crate::polyalg::{Poly, PolyRing};

use super::SteinbergError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    /// Commuting nilpotent pairs in sl2.
    N2,
    /// Pairs in a common Borel nilradical of sl3.
    N3Z,
    /// Commuting pairs in a common Borel nilradical of sl3.
    N3X,
    /// Steinberg component, n = 2, in GL2 x GL2.
    GlN2,
    /// Steinberg component, n = 3, in GL3 x GL3.
    GlN3,
    /// Fibre equation over the flag variety: `(Phi0 + M)N - qN(Phi0 + M)`.
    Cnil,
}

impl Tag {
    pub const ALL: [Tag; 6] = [Tag::N2, Tag::N3Z, Tag::N3X, Tag::GlN2, Tag::GlN3, Tag::Cnil];

    pub fn name(self) -> &'static str {
        match self {
            Tag::N2 => "n2",
            Tag::N3Z => "n3-z",
            Tag::N3X => "n3-x",
            Tag::GlN2 => "gl-n2",
            Tag::GlN3 => "gl-n3",
            Tag::Cnil => "cnil",
        }
    }

    /// Matrix size.
    pub fn n(self) -> usize {
        match self {
            Tag::N2 | Tag::GlN2 => 2,
            _ => 3,
        }
    }

    pub fn default_ambient(self) -> Ambient {
        match self {
            Tag::N2 | Tag::N3Z => Ambient::Traceless,
            Tag::N3X | Tag::GlN2 | Tag::GlN3 => Ambient::FullMatrix,
            Tag::Cnil => Ambient::UpperNilpotent,
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Tag {
    type Err = String;
    fn from_str(s: &str) -> Result<Tag, String> {
        Tag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown case '{s}' (expected one of n2, n3-z, n3-x, gl-n2, gl-n3, cnil)"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    /// Pairs of trace-zero matrices; the last diagonal entry is eliminated.
    Traceless,
    /// All matrix entries are coordinates.
    FullMatrix,
    /// Strictly upper triangular `M`, `N` with entries `a, b, c` and `d, e, f`.
    UpperNilpotent,
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ambient::Traceless => "traceless",
            Ambient::FullMatrix => "full-matrix",
            Ambient::UpperNilpotent => "upper-nilpotent",
        })
    }
}

/// The deformation parameter `q`: a ring variable or a fixed integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QValue {
    Symbolic,
    Value(i64),
}

impl fmt::Display for QValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QValue::Symbolic => f.write_str("q"),
            QValue::Value(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IdealCase {
    pub tag: Tag,
    pub ambient: Ambient,
    pub q: QValue,
}

impl IdealCase {
    /// Default ambient, `q = 1`.
    pub fn new(tag: Tag) -> Self {
        IdealCase { tag, ambient: tag.default_ambient(), q: QValue::Value(1) }
    }

    pub fn with_ambient(mut self, ambient: Ambient) -> Self {
        self.ambient = ambient;
        self
    }

    pub fn with_q(mut self, q: QValue) -> Self {
        self.q = q;
        self
    }
}

/// Generators with human-readable labels, in their ring.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    pub ring: PolyRing<F>,
    pub gens: Vec<Poly<F>>,
    pub labels: Vec<String>,
}

impl<F: Field> Ideal<F> {
    fn push(&mut self, label: impl Into<String>, p: Poly<F>) {
        if !p.is_zero() {
            self.labels.push(label.into());
            self.gens.push(p);
        }
    }

    fn push_entries(&mut self, name: &str, m: &Mat<F>) {
        for (i, row) in m.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                self.push(format!("{name}[{},{}]", i + 1, j + 1), p.clone());
            }
        }
    }

    /// Generators whose label starts with `prefix`.
    pub fn select(&self, prefix: &str) -> Vec<Poly<F>> {
        self.gens.iter().zip(&self.labels).filter(|(_, l)| l.starts_with(prefix)).map(|(g, _)| g.clone()).collect()
    }
}

/// Square matrix of polynomials.
pub type Mat<F> = Vec<Vec<Poly<F>>>;

pub fn mat_mul<F: Field>(r: &PolyRing<F>, a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).fold(Poly::zero(), |acc, k| r.add(&acc, &r.mul(&a[i][k], &b[k][j])))).collect())
        .collect()
}

pub fn mat_sub<F: Field>(r: &PolyRing<F>, a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(p, q)| r.sub(p, q)).collect()).collect()
}

pub fn mat_add<F: Field>(r: &PolyRing<F>, a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(p, q)| r.add(p, q)).collect()).collect()
}

pub fn mat_scale<F: Field>(r: &PolyRing<F>, c: &Poly<F>, a: &Mat<F>) -> Mat<F> {
    a.iter().map(|row| row.iter().map(|p| r.mul(c, p)).collect()).collect()
}

/// `c * I`
pub fn mat_scalar<F: Field>(n: usize, c: &Poly<F>) -> Mat<F> {
    (0..n).map(|i| (0..n).map(|j| if i == j { c.clone() } else { Poly::zero() }).collect()).collect()
}

pub fn trace<F: Field>(r: &PolyRing<F>, a: &Mat<F>) -> Poly<F> {
    r.sum((0..a.len()).map(|i| &a[i][i]))
}

pub fn det<F: Field>(r: &PolyRing<F>, a: &Mat<F>) -> Poly<F> {
    match a.len() {
        1 => a[0][0].clone(),
        2 => r.sub(&r.mul(&a[0][0], &a[1][1]), &r.mul(&a[0][1], &a[1][0])),
        3 => {
            let minor =
                |i: usize, j: usize, k: usize, l: usize| r.sub(&r.mul(&a[i][k], &a[j][l]), &r.mul(&a[i][l], &a[j][k]));
            let t0 = r.mul(&a[0][0], &minor(1, 2, 1, 2));
            let t1 = r.mul(&a[0][1], &minor(1, 2, 0, 2));
            let t2 = r.mul(&a[0][2], &minor(1, 2, 0, 1));
            r.add(&r.sub(&t0, &t1), &t2)
        }
        n => panic!("det of {n}x{n} not supported"),
    }
}

/// Sum of principal 2x2 minors (second characteristic coefficient).
pub fn principal_minors2<F: Field>(r: &PolyRing<F>, a: &Mat<F>) -> Poly<F> {
    let n = a.len();
    let mut acc = Poly::zero();
    for i in 0..n {
        for j in i + 1..n {
            acc = r.add(&acc, &r.sub(&r.mul(&a[i][i], &a[j][j]), &r.mul(&a[i][j], &a[j][i])));
        }
    }
    acc
}

fn sq_names(prefix: &str, n: usize, traceless: bool) -> Vec<String> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if !(traceless && i == n && j == n) {
                out.push(format!("{prefix}{i}{j}"));
            }
        }
    }
    out
}

/// Generic `n x n` matrix over the variables `{prefix}ij`; in the traceless
/// ambient the last diagonal entry is minus the sum of the others.
pub fn generic_matrix<F: Field>(r: &PolyRing<F>, prefix: &str, n: usize, traceless: bool) -> Mat<F> {
    let mut m: Mat<F> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if traceless && i == n - 1 && j == n - 1 {
                        Poly::zero()
                    } else {
                        r.v(&format!("{prefix}{}{}", i + 1, j + 1))
                    }
                })
                .collect()
        })
        .collect();
    if traceless {
        let s = r.sum((0..n - 1).map(|i| &m[i][i]));
        m[n - 1][n - 1] = r.neg(&s);
    }
    m
}

/// Coordinate names of the pair `(M, N)`: entries of `M` row-major, then `N`.
pub fn pair_variables(n: usize, traceless: bool) -> Vec<String> {
    let mut v = sq_names("m", n, traceless);
    v.extend(sq_names("n", n, traceless));
    v
}

fn q_poly<F: Field>(r: &PolyRing<F>, q: QValue) -> Poly<F> {
    match q {
        QValue::Symbolic => r.v("q"),
        QValue::Value(v) => r.int(v),
    }
}

fn with_q(mut vars: Vec<String>, q: QValue) -> Vec<String> {
    if q == QValue::Symbolic {
        vars.push("q".into());
    }
    vars
}

/// The literal generator list of a case, expanded in its ambient.
pub fn make_ideal<F: Field>(case: &IdealCase, field: F) -> Result<Ideal<F>, SteinbergError> {
    let unsupported = || SteinbergError::UnsupportedAmbient { tag: case.tag, ambient: case.ambient };
    match case.tag {
        Tag::N2 | Tag::N3Z | Tag::N3X => {
            let traceless = match case.ambient {
                Ambient::Traceless => true,
                Ambient::FullMatrix => false,
                Ambient::UpperNilpotent => return Err(unsupported()),
            };
            nilpotent_pair_ideal(case.tag, field, traceless)
        }
        Tag::GlN2 | Tag::GlN3 => {
            if case.ambient != Ambient::FullMatrix {
                return Err(unsupported());
            }
            steinberg_ideal(case.tag.n(), field, case.q)
        }
        Tag::Cnil => {
            if case.ambient != Ambient::UpperNilpotent {
                return Err(unsupported());
            }
            cnil_ideal(field, 3, case.q)
        }
    }
}

fn nilpotent_pair_ideal<F: Field>(tag: Tag, field: F, traceless: bool) -> Result<Ideal<F>, SteinbergError> {
    let n = tag.n();
    let ring = PolyRing::new(field, pair_variables(n, traceless))?;
    let m = generic_matrix(&ring, "m", n, traceless);
    let nn = generic_matrix(&ring, "n", n, traceless);
    let r = &ring;
    let mut id = Ideal { ring: ring.clone(), gens: Vec::new(), labels: Vec::new() };
    // in the traceless ambient these vanish and are dropped by push
    id.push("tr(M)", trace(r, &m));
    id.push("tr(N)", trace(r, &nn));
    let mn = mat_mul(r, &m, &nn);
    let nm = mat_mul(r, &nn, &m);
    match tag {
        Tag::N2 => {
            id.push("det(M)", det(r, &m));
            id.push("det(N)", det(r, &nn));
            id.push_entries("MN-NM", &mat_sub(r, &mn, &nm));
            id.push("tr(MN)", trace(r, &mn));
        }
        Tag::N3Z | Tag::N3X => {
            let m2 = mat_mul(r, &m, &m);
            let n2 = mat_mul(r, &nn, &nn);
            id.push("tr(M^2)", trace(r, &m2));
            id.push("tr(N^2)", trace(r, &n2));
            id.push("tr(MN)", trace(r, &mn));
            if tag == Tag::N3X {
                id.push_entries("MN-NM", &mat_sub(r, &mn, &nm));
            }
            id.push("tr(M^3)", trace(r, &mat_mul(r, &m2, &m)));
            id.push("tr(N^3)", trace(r, &mat_mul(r, &n2, &nn)));
            id.push_entries("M^2N", &mat_mul(r, &m2, &nn));
            if tag == Tag::N3Z {
                id.push_entries("N^2M", &mat_mul(r, &n2, &m));
                id.push_entries("NM^2", &mat_mul(r, &nn, &m2));
            }
            id.push_entries("MN^2", &mat_mul(r, &m, &n2));
        }
        _ => unreachable!(),
    }
    Ok(id)
}

/// Variables of the group ambient: `Phi` entries, `Sigma` entries, then the
/// inverse determinants `u`, `v`, then `q` when symbolic.
pub fn group_variables(n: usize, q: QValue) -> Vec<String> {
    let mut v = sq_names("p", n, false);
    v.extend(sq_names("s", n, false));
    v.push("u".into());
    v.push("v".into());
    with_q(v, q)
}

/// `Sigma^q` as the binomial series in `E = Sigma - I`, truncated after
/// `E^(n-1)` (the characteristic polynomial forces `E^n = 0`).
fn unipotent_power<F: Field>(r: &PolyRing<F>, sigma: &Mat<F>, q: &Poly<F>) -> Result<Mat<F>, SteinbergError> {
    let n = sigma.len();
    let e = mat_sub(r, sigma, &mat_scalar(n, &r.one()));
    let mut acc = mat_scalar(n, &r.one());
    let mut power = mat_scalar(n, &r.one());
    let mut binom = r.one();
    for k in 1..n as i64 {
        power = mat_mul(r, &power, &e);
        // binom(q, k) = binom(q, k-1) * (q - k + 1) / k
        let inv_k =
            r.field().inv(&r.field().from_i64(k)).ok_or(SteinbergError::CharacteristicTooSmall { needed: k as u64 })?;
        binom = r.scale(&r.mul(&binom, &r.sub(q, &r.int(k - 1))), &inv_k);
        acc = mat_add(r, &acc, &mat_scale(r, &binom, &power));
    }
    Ok(acc)
}

fn steinberg_ideal<F: Field>(n: usize, field: F, q: QValue) -> Result<Ideal<F>, SteinbergError> {
    let ring = PolyRing::new(field, group_variables(n, q))?;
    let r = &ring;
    let phi = generic_matrix(r, "p", n, false);
    let sigma = generic_matrix(r, "s", n, false);
    let qp = q_poly(r, q);
    let one = r.one();
    let id_n = mat_scalar(n, &one);
    let e = mat_sub(r, &sigma, &id_n);
    let mut id = Ideal { ring: ring.clone(), gens: Vec::new(), labels: Vec::new() };

    let sq = unipotent_power(r, &sigma, &qp)?;
    id.push_entries("Phi*Sigma-Sigma^q*Phi", &mat_sub(r, &mat_mul(r, &phi, &sigma), &mat_mul(r, &sq, &phi)));

    // characteristic polynomials: roots 1, q, .., q^(n-1) for Phi and 1 (n times) for Sigma
    let roots: Vec<Poly<F>> = (0..n as u32).map(|k| r.pow(&qp, k)).collect();
    let e1 = r.sum(roots.iter());
    let en = roots.iter().fold(r.one(), |a, b| r.mul(&a, b));
    id.push("tr(Phi)-e1", r.sub(&trace(r, &phi), &e1));
    if n == 3 {
        let e2 = r.sum([r.mul(&roots[0], &roots[1]), r.mul(&roots[0], &roots[2]), r.mul(&roots[1], &roots[2])].iter());
        id.push("m2(Phi)-e2", r.sub(&principal_minors2(r, &phi), &e2));
    }
    id.push("det(Phi)-en", r.sub(&det(r, &phi), &en));
    id.push("tr(Sigma)-n", r.sub(&trace(r, &sigma), &r.int(n as i64)));
    if n == 3 {
        id.push("m2(Sigma)-3", r.sub(&principal_minors2(r, &sigma), &r.int(3)));
    }
    id.push("det(Sigma)-1", r.sub(&det(r, &sigma), &one));
    id.push("tr(Phi(Sigma-I))", trace(r, &mat_mul(r, &phi, &e)));
    if n == 3 {
        let q2 = r.mul(&qp, &qp);
        let phi_q2 = mat_sub(r, &phi, &mat_scalar(n, &q2));
        let phi_q = mat_sub(r, &phi, &mat_scalar(n, &qp));
        id.push_entries("(Phi-q^2)(Sigma-I)^2", &mat_mul(r, &phi_q2, &mat_mul(r, &e, &e)));
        id.push_entries("(Phi-q^2)(Phi-q)(Sigma-I)", &mat_mul(r, &mat_mul(r, &phi_q2, &phi_q), &e));
    }
    id.push("u*det(Phi)-1", r.sub(&r.mul(&r.v("u"), &det(r, &phi)), &one));
    id.push("v*det(Sigma)-1", r.sub(&r.mul(&r.v("v"), &det(r, &sigma)), &one));
    Ok(id)
}

/// Entries of `(Phi0 + M)N - qN(Phi0 + M)` with `Phi0 = diag(q^(n-1), .., q, 1)`
/// and `M`, `N` strictly upper triangular. For `n = 3` the variables are
/// `a, b, c` (entries 12, 13, 23 of `M`) and `d, e, f` (same for `N`); for
/// `n = 2` they are `a` and `d`.
pub fn cnil_ideal<F: Field>(field: F, n: usize, q: QValue) -> Result<Ideal<F>, SteinbergError> {
    let names: Vec<&str> = match n {
        2 => vec!["a", "d"],
        3 => vec!["a", "b", "c", "d", "e", "f"],
        _ => return Err(SteinbergError::UnsupportedSize(n)),
    };
    let ring = PolyRing::new(field, with_q(names.iter().map(|s| s.to_string()).collect(), q))?;
    let r = &ring;
    let qp = q_poly(r, q);
    let upper = |vars: &[&str]| -> Mat<F> {
        let mut m = mat_scalar(n, &Poly::zero());
        let mut it = vars.iter();
        for i in 0..n {
            for j in i + 1..n {
                m[i][j] = r.v(it.next().unwrap());
            }
        }
        m
    };
    let half = names.len() / 2;
    let m = upper(&names[..half]);
    let nn = upper(&names[half..]);
    let mut phi0 = mat_scalar(n, &Poly::zero());
    for (i, row) in phi0.iter_mut().enumerate() {
        row[i] = r.pow(&qp, (n - 1 - i) as u32);
    }
    let pm = mat_add(r, &phi0, &m);
    let lhs = mat_mul(r, &pm, &nn);
    let rhs = mat_scale(r, &qp, &mat_mul(r, &nn, &pm));
    let mut id = Ideal { ring: ring.clone(), gens: Vec::new(), labels: Vec::new() };
    id.push_entries("C", &mat_sub(r, &lhs, &rhs));
    Ok(id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::polyalg::{format_poly, parse_poly};

    #[test]
    fn generator_counts() {
        let count = |c: IdealCase| make_ideal(&c, Rationals).unwrap().gens.len();
        // det M, det N, 4 commutator entries, tr(MN)
        assert_eq!(count(IdealCase::new(Tag::N2)), 7);
        // 3 + 2 + 4 * 9 entries
        assert_eq!(count(IdealCase::new(Tag::N3Z)), 41);
        assert_eq!(count(IdealCase::new(Tag::N3Z).with_ambient(Ambient::FullMatrix)), 43);
        // 2 traces + 3 + 9 commutator entries + 2 + 18
        assert_eq!(count(IdealCase::new(Tag::N3X)), 34);
        assert_eq!(make_ideal(&IdealCase::new(Tag::N3Z), Rationals).unwrap().ring.nvars(), 16);
    }

    #[test]
    fn ambient_combinations() {
        assert!(make_ideal(&IdealCase::new(Tag::GlN3).with_ambient(Ambient::Traceless), Rationals).is_err());
        assert!(make_ideal(&IdealCase::new(Tag::N2).with_ambient(Ambient::UpperNilpotent), Rationals).is_err());
        assert!(make_ideal(&IdealCase::new(Tag::Cnil).with_ambient(Ambient::FullMatrix), Rationals).is_err());
    }

    #[test]
    fn traceless_matrix() {
        let r = PolyRing::new(Rationals, pair_variables(3, true)).unwrap();
        let m = generic_matrix(&r, "m", 3, true);
        assert!(trace(&r, &m).is_zero());
        assert_eq!(format_poly(&r, &m[2][2]), "-m11 - m22");
    }

    #[test]
    fn cnil_expansion() {
        let id = cnil_ideal(Rationals, 3, QValue::Symbolic).unwrap();
        assert_eq!(id.labels, ["C[1,3]"]);
        let want = parse_poly(&id.ring, "q^2*e - q*e + a*f - q*c*d").unwrap();
        assert_eq!(id.gens[0], want);
        let at_one = cnil_ideal(PrimeField::new(5).unwrap(), 3, QValue::Value(1)).unwrap();
        assert_eq!(format_poly(&at_one.ring, &at_one.gens[0]), "-c*d + a*f");
        assert!(cnil_ideal(Rationals, 2, QValue::Value(1)).unwrap().gens.is_empty());
    }

    #[test]
    fn unipotent_power_is_binomial() {
        let f = PrimeField::new(7).unwrap();
        let id = make_ideal(&IdealCase::new(Tag::GlN3).with_q(QValue::Value(1)), f).unwrap();
        // at q = 1, Sigma^q = Sigma so the first block is the commutator
        let r = &id.ring;
        let phi = generic_matrix(r, "p", 3, false);
        let sigma = generic_matrix(r, "s", 3, false);
        let comm = mat_sub(r, &mat_mul(r, &phi, &sigma), &mat_mul(r, &sigma, &phi));
        assert_eq!(
            id.select("Phi*Sigma-Sigma^q*Phi"),
            comm.into_iter().flatten().filter(|p| !p.is_zero()).collect::<Vec<_>>()
        );
    }
}
