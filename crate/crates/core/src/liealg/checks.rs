use std::collections::BTreeMap;

use crate::breps::{RepExpr, WeightMultiset};
use crate::bwb::psupp;
use crate::field::{rat, Characteristic, Field};
use crate::linalg::Echelon;
use crate::polyalg::{format_poly, groebner, parse_poly, Poly, PolyRing};
use crate::report::{Entry, Report, Status};
use crate::steinberg::{cnil_ideal, QValue};
use crate::weights::{PositiveRoot, Weight};
use crate::with_field;

use super::rep::{build_based_rep, BasedRep, LoweringOp};
use super::LieError;

// ---- elements of b and the displayed identities ----

/// Basis elements of `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootElem {
    Fa,
    Fb,
    Fr,
    Ta,
    Tb,
}

impl RootElem {
    pub fn label(self) -> &'static str {
        match self {
            RootElem::Fa => "fa",
            RootElem::Fb => "fb",
            RootElem::Fr => "fr",
            RootElem::Ta => "ta",
            RootElem::Tb => "tb",
        }
    }

    /// The relabelling `alpha <-> beta`.
    pub fn conjugate(self) -> Self {
        match self {
            RootElem::Fa => RootElem::Fb,
            RootElem::Fb => RootElem::Fa,
            RootElem::Fr => RootElem::Fr,
            RootElem::Ta => RootElem::Tb,
            RootElem::Tb => RootElem::Ta,
        }
    }
}

type Simple = ([RootElem; 2], [RootElem; 2]);

fn simple_name(s: &Simple) -> String {
    format!("({}^{})x({}^{})", s.0[0].label(), s.0[1].label(), s.1[0].label(), s.1[1].label())
}

/// `coef * (x1 ^ x2) (x) (y1 ^ y2)`. `flips` marks the terms whose sign
/// changes under the `alpha <-> beta` symmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityTerm {
    pub coef: (i64, i64),
    pub tensor: Simple,
    pub flips: bool,
}

/// `lhs = scale * op[arg] + extra` in `wedge^2(b) (x) wedge^2(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorIdentity {
    pub name: String,
    pub lhs: Simple,
    pub scale: (i64, i64),
    pub op: LoweringOp,
    pub arg: Vec<IdentityTerm>,
    pub extra: Vec<IdentityTerm>,
}

impl TensorIdentity {
    /// Exchanges the two tensor factors everywhere.
    pub fn swapped(&self) -> Self {
        let sw = |s: &Simple| (s.1, s.0);
        let terms =
            |ts: &[IdentityTerm]| ts.iter().map(|t| IdentityTerm { tensor: sw(&t.tensor), ..t.clone() }).collect();
        TensorIdentity {
            name: format!("{}.swap", self.name),
            lhs: sw(&self.lhs),
            arg: terms(&self.arg),
            extra: terms(&self.extra),
            ..self.clone()
        }
    }

    /// Relabels `alpha <-> beta`, exchanges the operators and negates the
    /// flagged terms.
    pub fn conjugated(&self) -> Self {
        let c2 = |x: [RootElem; 2]| x.map(RootElem::conjugate);
        let cs = |s: &Simple| (c2(s.0), c2(s.1));
        let terms = |ts: &[IdentityTerm]| {
            ts.iter()
                .map(|t| IdentityTerm {
                    coef: if t.flips { (-t.coef.0, t.coef.1) } else { t.coef },
                    tensor: cs(&t.tensor),
                    flips: t.flips,
                })
                .collect()
        };
        TensorIdentity {
            name: format!("{}.conj", self.name),
            lhs: cs(&self.lhs),
            scale: self.scale,
            op: match self.op {
                LoweringOp::Alpha => LoweringOp::Beta,
                LoweringOp::Beta => LoweringOp::Alpha,
                LoweringOp::Rho => LoweringOp::Rho,
            },
            arg: terms(&self.arg),
            extra: terms(&self.extra),
        }
    }
}

/// The identities exhibiting the weight `-2rho` space of `V = W2/W1` inside
/// `e_{-alpha}(V_{-rho-beta}) + e_{-beta}(V_{-rho-alpha})`.
pub fn displayed_identities() -> Vec<TensorIdentity> {
    use RootElem::*;
    let t = |coef: i64, tensor: Simple, flips: bool| IdentityTerm { coef: (coef, 1), tensor, flips };
    let id = |name: &str, lhs, scale, op, arg: Vec<IdentityTerm>| TensorIdentity {
        name: name.to_string(),
        lhs,
        scale,
        op,
        arg,
        extra: vec![],
    };
    let mut last = id("6", ([Fa, Fb], [Fa, Fb]), (1, 1), LoweringOp::Beta, vec![t(1, ([Fa, Fb], [Fa, Tb]), false)]);
    last.extra = vec![t(-1, ([Fa, Fb], [Fr, Tb]), false), t(-1, ([Fr, Fb], [Fa, Tb]), false)];
    vec![
        id("1", ([Fa, Fr], [Ta, Fb]), (1, 1), LoweringOp::Beta, vec![t(1, ([Fa, Fr], [Ta, Tb]), false)]),
        id(
            "2",
            ([Fa, Fr], [Tb, Fb]),
            (1, 2),
            LoweringOp::Alpha,
            vec![
                t(1, ([Ta, Fr], [Tb, Fb]), false),
                t(1, ([Fb, Fa], [Tb, Fb]), true),
                t(1, ([Fb, Ta], [Tb, Fr]), false),
            ],
        ),
        id(
            "3",
            ([Ta, Fr], [Fa, Fb]),
            (1, 2),
            LoweringOp::Beta,
            vec![t(1, ([Ta, Fa], [Tb, Fr]), true), t(1, ([Ta, Fa], [Fa, Fb]), false), t(1, ([Ta, Fr], [Fa, Tb]), true)],
        ),
        id("4", ([Ta, Fr], [Ta, Fr]), (1, 1), LoweringOp::Beta, vec![t(1, ([Ta, Fa], [Ta, Fr]), true)]),
        id(
            "5",
            ([Ta, Fr], [Tb, Fr]),
            (1, 2),
            LoweringOp::Beta,
            vec![
                t(1, ([Ta, Fa], [Tb, Fr]), true),
                t(1, ([Ta, Fa], [Fa, Fb]), false),
                t(-1, ([Ta, Fr], [Fa, Tb]), true),
            ],
        ),
        last,
    ]
}

/// The identities with their tensor-swapped and `alpha <-> beta` forms.
/// The final identity is used as stated.
fn identity_family() -> Vec<TensorIdentity> {
    let ids = displayed_identities();
    let (last, first) = ids.split_last().expect("nonempty");
    let mut out = Vec::new();
    for id in first {
        let sw = id.swapped();
        out.extend([id.clone(), sw.clone(), id.conjugated(), sw.conjugated()]);
    }
    out.push(last.clone());
    out
}

// ---- the ambient W3 = wedge^2(b) (x) wedge^2(b) ----

const ANCHOR_IDENTITIES: &str = "lowering-operator identities in wedge^2(b) x wedge^2(b)";
const ANCHOR_SPAN: &str = "V_{-2rho} = e_{-alpha} V_{-rho-beta} + e_{-beta} V_{-rho-alpha}";
const ANCHOR_DEMAZURE: &str = "vanishing of H^3(wedge^2(b) x wedge^2(b)) through parabolic extensions";

/// Weights spanning `W1`.
pub fn w1_weights() -> Vec<Weight> {
    let (a, b, r) = (Weight::ALPHA, Weight::BETA, Weight::RHO);
    vec![-r - 2 * a, -2 * r - 2 * a, -2 * r - a, -3 * r, -2 * r - b, -2 * r - 2 * b, -r - 2 * b]
}

/// Weights spanning `W2`.
pub fn w2_weights() -> Vec<Weight> {
    let (a, b, r) = (Weight::ALPHA, Weight::BETA, Weight::RHO);
    let mut w = w1_weights();
    w.extend([-2 * r, -r - a, -r - b]);
    w
}

struct Setting<F: Field> {
    b: BasedRep<F>,
    l2: BasedRep<F>,
    w3: BasedRep<F>,
}

impl<F: Field> Setting<F> {
    fn new(field: &F) -> Result<Self, LieError> {
        let b = build_based_rep(&RepExpr::parse("b").expect("literal"), field)?;
        let l2 = b.wedge(2)?;
        let w3 = l2.tensor(&l2)?;
        Ok(Setting { b, l2, w3 })
    }

    fn f(&self) -> &F {
        self.b.field()
    }

    fn wedge2(&self, x: [RootElem; 2]) -> Vec<F::Elem> {
        let v = x.map(|e| self.b.basis(e.label()).expect("basis label"));
        self.l2.power_of(&v).expect("exterior square")
    }

    fn simple(&self, s: &Simple) -> Vec<F::Elem> {
        self.w3.tensor_of(&self.wedge2(s.0), &self.wedge2(s.1)).expect("tensor square")
    }

    fn scalar(&self, c: (i64, i64)) -> F::Elem {
        self.f().from_rational(&rat(c.0, c.1)).expect("denominator invertible")
    }

    fn terms(&self, ts: &[IdentityTerm]) -> Vec<F::Elem> {
        let parts: Vec<_> = ts.iter().map(|t| (self.scalar(t.coef), self.simple(&t.tensor))).collect();
        self.w3.combine(&parts)
    }
}

/// Human-readable `sum c * label`.
fn show<F: Field>(rep: &BasedRep<F>, v: &[F::Elem]) -> String {
    let f = rep.field();
    let parts: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !f.is_zero(c))
        .map(|(i, c)| format!("{}*{}", signed(f, c), rep.labels()[i]))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Prints small units with a sign, so `-1` in `F_5` shows as `-1`.
fn signed<F: Field>(f: &F, c: &F::Elem) -> String {
    for k in 1..=4i64 {
        if f.is_zero(&f.sub(c, &f.from_i64(-k))) && f.characteristic() != 0 {
            return format!("-{k}");
        }
    }
    f.fmt_elem(c)
}

/// `Some(c)` with `x = c * y`, `c` a unit.
fn proportional<F: Field>(f: &F, x: &[F::Elem], y: &[F::Elem]) -> Option<F::Elem> {
    let k = y.iter().position(|c| !f.is_zero(c))?;
    let c = f.div(&x[k], &y[k])?;
    if f.is_zero(&c) {
        return None;
    }
    x.iter().zip(y).all(|(a, b)| f.is_zero(&f.sub(a, &f.mul(&c, b)))).then_some(c)
}

fn supported(chr: Characteristic) -> bool {
    chr.is_zero() || chr.get() >= 5
}

fn unsupported_entry(id: String, anchor: &str) -> Entry {
    Entry::new(id, Status::Skipped, "characteristic 0 or at least 5", "unsupported characteristic", anchor)
}

fn error_entry(id: String, e: impl ToString, anchor: &str) -> Entry {
    Entry::new(id, Status::Fail, "no error", e.to_string(), anchor)
}

// ---- identity suite ----

fn identities_in<F: Field>(field: &F, ids: &[TensorIdentity], prefix: &str) -> Result<Vec<Entry>, LieError> {
    let s = Setting::new(field)?;
    let f = s.f();
    let w3 = &s.w3;
    let mut out = Vec::new();

    // bracket convention
    let mut unit: Option<F::Elem> = None;
    let mut consistent = true;
    for i in 0..w3.dim() {
        let v = w3.basis_vector(i);
        let ab = w3.act(LoweringOp::Alpha, &w3.act(LoweringOp::Beta, &v));
        let ba = w3.act(LoweringOp::Beta, &w3.act(LoweringOp::Alpha, &v));
        let comm: Vec<_> = ab.iter().zip(&ba).map(|(x, y)| f.sub(x, y)).collect();
        let rho = w3.act(LoweringOp::Rho, &v);
        if rho.iter().all(|x| f.is_zero(x)) {
            consistent &= comm.iter().all(|x| f.is_zero(x));
            continue;
        }
        match (proportional(f, &comm, &rho), &unit) {
            (Some(c), None) => unit = Some(c),
            (Some(c), Some(u)) => consistent &= f.is_zero(&f.sub(&c, u)),
            (None, _) => consistent = false,
        }
    }
    let actual = match (&unit, consistent) {
        (Some(c), true) => format!("[e_-alpha, e_-beta] = {} * e_-rho", signed(f, c)),
        _ => "no constant c".into(),
    };
    let status = if unit.is_some() && consistent { Status::Pass } else { Status::Fail };
    out.push(Entry::new(
        format!("{prefix}.bracket-unit"),
        status,
        "[e_-alpha, e_-beta] = c * e_-rho, c a unit",
        actual,
        ANCHOR_IDENTITIES,
    ));

    // weight multiset against the character-level construction
    let expr = RepExpr::parse("wedge^2(b)*wedge^2(b)").expect("literal");
    let from_basis = WeightMultiset::from_weights(w3.weights().iter().copied());
    let matches = crate::breps::build_rep(&expr).map(|m| m == from_basis).unwrap_or(false);
    out.push(Entry::new(
        format!("{prefix}.weights"),
        if matches { Status::Pass } else { Status::Fail },
        "weights of the explicit basis equal the character of wedge^2(b)*wedge^2(b)",
        format!("dim {}, {}", w3.dim(), if matches { "equal" } else { "different" }),
        ANCHOR_IDENTITIES,
    ));

    let v = w3.weight_subquotient(&w1_weights(), &w2_weights())?;
    let to_v = |x: &[F::Elem]| v.from_base(x).expect("quotient coordinates");

    let mut lhs_span = Echelon::new(f.clone(), v.dim());
    let mut rank_after: BTreeMap<String, usize> = BTreeMap::new();
    for id in ids {
        let lhs = to_v(&s.simple(&id.lhs));
        let arg = s.terms(&id.arg);
        let image = to_v(&w3.combine(&[(s.scalar(id.scale), w3.act(id.op, &arg))]));
        let rest = to_v(&w3.combine(&[(f.one(), s.simple(&id.lhs)), (f.neg(&f.one()), s.terms(&id.extra))]));
        let expected = format!("{} = unit * {}", simple_name(&id.lhs), id.op.name());
        let entry = match proportional(f, &rest, &image) {
            Some(c) => Entry::new(
                format!("{prefix}.identity-{}", id.name),
                Status::Pass,
                expected,
                format!("holds with unit {}", signed(f, &c)),
                ANCHOR_IDENTITIES,
            ),
            None => Entry::new(
                format!("{prefix}.identity-{}", id.name),
                Status::Fail,
                expected,
                format!("lhs - extra = {}; rhs = {}", show(&v, &rest), show(&v, &image)),
                ANCHOR_IDENTITIES,
            ),
        };
        out.push(entry);
        lhs_span.insert(lhs);
        let family = id.name.split('.').next().unwrap_or_default().to_string();
        rank_after.insert(family, lhs_span.rank());
    }

    // how many of the 17 spanning tensors each group of identities reaches
    for (family, want) in [("3", 12usize), ("5", 16), ("6", 17)] {
        if let Some(&r) = rank_after.get(family) {
            out.push(Entry::compare(
                format!("{prefix}.rank-through-{family}"),
                want,
                r,
                "left-hand sides are linearly independent in V_{-2rho}",
            ));
        }
    }

    // the two correction terms of the last identity lie in the joint image
    if let Some(last) = ids.iter().find(|i| i.name == "6") {
        let joint = joint_image(&v);
        let inside = last.extra.iter().all(|t| joint.contains(&to_v(&s.simple(&t.tensor))));
        out.push(Entry::new(
            format!("{prefix}.identity-6.corrections"),
            if inside { Status::Pass } else { Status::Fail },
            "correction terms lie in e_-alpha V_{-rho-beta} + e_-beta V_{-rho-alpha}",
            if inside { "inside" } else { "outside" },
            ANCHOR_IDENTITIES,
        ));
    }
    Ok(out)
}

/// Verifies the given identities in `V = W2/W1` over the field of
/// characteristic `chr`.
pub fn verify_identities(chr: Characteristic, ids: &[TensorIdentity]) -> Report {
    let prefix = format!("identities.char{chr}");
    let mut report = Report::new();
    if !supported(chr) {
        report.push(unsupported_entry(prefix, ANCHOR_IDENTITIES));
        return report;
    }
    report.timed(|| {
        with_field!(chr, |f| identities_in(&f, ids, &prefix))
            .unwrap_or_else(|e| vec![error_entry(prefix.clone(), e, ANCHOR_IDENTITIES)])
    });
    report
}

/// Every identity, its swapped and conjugated forms, and the rank claims.
pub fn identity_suite(chr: Characteristic) -> Report {
    verify_identities(chr, &identity_family())
}

fn joint_image<F: Field>(v: &BasedRep<F>) -> Echelon<F> {
    let r = Weight::RHO;
    let mut e = Echelon::new(v.field().clone(), v.dim());
    for (op, mu) in [(LoweringOp::Alpha, -r - Weight::BETA), (LoweringOp::Beta, -r - Weight::ALPHA)] {
        for i in v.weight_indices(mu) {
            e.insert(v.act(op, &v.basis_vector(i)));
        }
    }
    e
}

// ---- span check ----

fn span_in<F: Field>(field: &F, prefix: &str) -> Result<Vec<Entry>, LieError> {
    let s = Setting::new(field)?;
    let v = s.w3.weight_subquotient(&w1_weights(), &w2_weights())?;
    let r = Weight::RHO;
    let dim = v.weight_space_dim(-2 * r);
    let joint = joint_image(&v).rank();
    let single =
        |op, mu| v.rank(&v.weight_indices(mu).into_iter().map(|i| v.act(op, &v.basis_vector(i))).collect::<Vec<_>>());
    let ra = single(LoweringOp::Alpha, -r - Weight::BETA);
    let rb = single(LoweringOp::Beta, -r - Weight::ALPHA);
    Ok(vec![
        Entry::compare(format!("{prefix}.dim"), 17, dim, "V_{-2rho} is 17-dimensional"),
        Entry::compare(format!("{prefix}.joint-rank"), dim, joint, ANCHOR_SPAN),
        Entry::new(
            format!("{prefix}.single-ranks"),
            if ra < dim && rb < dim { Status::Pass } else { Status::Fail },
            format!("each single image has rank < {dim}"),
            format!("e_-alpha: {ra}, e_-beta: {rb}"),
            ANCHOR_SPAN,
        ),
    ])
}

/// Compares `dim V_{-2rho}` with the rank of the joint image of the two
/// simple lowering operators in `V = W2/W1`.
pub fn span_check(chr: Characteristic) -> Report {
    let prefix = format!("span.char{chr}");
    let mut report = Report::new();
    if !supported(chr) {
        report.push(unsupported_entry(prefix, ANCHOR_SPAN));
        return report;
    }
    report.timed(|| {
        with_field!(chr, |f| span_in(&f, &prefix)).unwrap_or_else(|e| vec![error_entry(prefix.clone(), e, ANCHOR_SPAN)])
    });
    report
}

// ---- extension to a parabolic ----

/// The parabolic `P` whose Levi factor contains the given simple root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parabolic {
    Alpha,
    Beta,
}

impl Parabolic {
    fn lowering(self) -> LoweringOp {
        match self {
            Parabolic::Alpha => LoweringOp::Alpha,
            Parabolic::Beta => LoweringOp::Beta,
        }
    }

    /// Operators that must vanish: the radical of `P`.
    fn radical(self) -> [LoweringOp; 2] {
        match self {
            Parabolic::Alpha => [LoweringOp::Beta, LoweringOp::Rho],
            Parabolic::Beta => [LoweringOp::Alpha, LoweringOp::Rho],
        }
    }

    fn coroot(self) -> PositiveRoot {
        match self {
            Parabolic::Alpha => PositiveRoot::Alpha,
            Parabolic::Beta => PositiveRoot::Beta,
        }
    }
}

/// Outcome of the extension test, with the chain `v, e v, e^2 v, ..` when
/// one exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension<E> {
    pub extends: bool,
    pub reason: String,
    pub top_weight: Option<Weight>,
    pub chain: Vec<Vec<E>>,
}

/// Tests the sufficient criterion for `V` to extend from `B` to `P`: small
/// dimension, the radical acting by zero, and a single string under the Levi
/// lowering operator starting at a weight of the right height. `l = 0`
/// imposes no dimension bound.
pub fn p_extend_check_for<F: Field>(v: &BasedRep<F>, l: Characteristic, parabolic: Parabolic) -> Extension<F::Elem> {
    let fail = |reason: String| Extension { extends: false, reason, top_weight: None, chain: vec![] };
    let d = v.dim();
    if !l.is_zero() && d as u64 > l.get() {
        return fail(format!("dimension {d} exceeds {l}"));
    }
    for op in parabolic.radical() {
        if !v.op_is_zero(op) {
            return fail(format!("{} acts nonzero", op.name()));
        }
    }
    if d == 0 {
        return Extension { extends: true, reason: "zero representation".into(), top_weight: None, chain: vec![] };
    }
    let lower = parabolic.lowering();
    for i in 0..d {
        let mu = v.weights()[i];
        if mu.pair(parabolic.coroot()) != d as i64 - 1 || v.weight_space_dim(mu) != 1 {
            continue;
        }
        let mut chain = vec![v.basis_vector(i)];
        while chain.len() < d {
            let next = v.act(lower, chain.last().unwrap());
            chain.push(next);
        }
        if v.rank(&chain) == d {
            return Extension {
                extends: true,
                reason: format!("string of length {d} from {mu}"),
                top_weight: Some(mu),
                chain,
            };
        }
    }
    fail(format!("no weight vector generates a string of length {d}"))
}

/// [`p_extend_check_for`] for the parabolic containing `e_alpha`.
pub fn p_extend_check<F: Field>(v: &BasedRep<F>, l: Characteristic) -> Extension<F::Elem> {
    p_extend_check_for(v, l, Parabolic::Alpha)
}

/// Splits the subrepresentation generated by the weight space `mu` of `q`
/// into strings under the Levi operator; every two-element string, twisted
/// by `twist`, must extend to `P`. Returns (strings, fixed lines, dim, all
/// extend).
fn string_decomposition<F: Field>(
    q: &BasedRep<F>,
    mu: Weight,
    parabolic: Parabolic,
    twist: Weight,
    l: Characteristic,
) -> Result<(usize, usize, usize, bool), LieError> {
    let op = parabolic.lowering();
    let gens: Vec<_> = q.weight_indices(mu).into_iter().map(|i| q.basis_vector(i)).collect();
    let generated = q.generated(&gens)?;
    let mut images = Echelon::new(q.field().clone(), q.dim());
    let mut strings = 0;
    let mut ok = true;
    for v in &gens {
        let ev = q.act(op, v);
        if !images.insert(ev.clone()) {
            continue;
        }
        strings += 1;
        let sub = q.generated(&[v.clone(), ev])?;
        ok &= sub.dim() == 2 && p_extend_check_for(&sub.twist(twist)?, l, parabolic).extends;
    }
    Ok((strings, gens.len() - strings, generated.dim(), ok))
}

fn demazure_in<F: Field>(field: &F, l: Characteristic, prefix: &str) -> Result<Vec<Entry>, LieError> {
    let s = Setting::new(field)?;
    let f = s.f();
    let (a, b, r) = (Weight::ALPHA, Weight::BETA, Weight::RHO);
    let w3 = &s.w3;
    let mut out = Vec::new();

    let v = w3.weight_subquotient(&w1_weights(), &w2_weights())?;
    out.push(Entry::new(
        format!("{prefix}.w1-w2"),
        Status::Pass,
        "W1 and W2 are B-stable",
        format!("dim W1 = {}, dim W2/W1 = {}", w3.weight_span(&w1_weights())?.dim(), v.dim()),
        ANCHOR_DEMAZURE,
    ));

    // V^beta: generated by V_{-rho-beta}, strings under e_-alpha
    let (strings, lines, dim_vb, ok) = string_decomposition(&v, -r - b, Parabolic::Alpha, Weight::L1, l)?;
    out.push(Entry::new(
        format!("{prefix}.v-beta"),
        if ok && dim_vb == strings * 2 + lines { Status::Pass } else { Status::Fail },
        "V^beta = lines + strings of length 2, each string extends to P_alpha after twisting by L1",
        format!("{strings} strings, {lines} lines, dim {dim_vb}"),
        ANCHOR_DEMAZURE,
    ));

    // V^alpha inside V / V^beta, roles exchanged
    let gens_b: Vec<_> = v.weight_indices(-r - b).into_iter().map(|i| v.basis_vector(i)).collect();
    let vb = v.generated(&gens_b)?;
    let vb_vectors: Vec<_> = (0..vb.dim()).map(|i| vb.to_ambient(&vb.basis_vector(i))).collect::<Result<_, _>>()?;
    let quot = v.quotient(&vb_vectors)?;
    let (strings, lines, dim_va, ok) = string_decomposition(&quot, -r - a, Parabolic::Beta, -Weight::L3, l)?;
    out.push(Entry::new(
        format!("{prefix}.v-alpha"),
        if ok && dim_va == quot.dim() { Status::Pass } else { Status::Fail },
        "V^alpha = V / V^beta, each string extends to P_beta after twisting by -L3",
        format!("{strings} strings, {lines} lines, dim V^alpha {dim_va}, dim V/V^beta {}", quot.dim()),
        ANCHOR_DEMAZURE,
    ));

    out.push(Entry::compare(
        format!("{prefix}.minus-3rho-multiplicity"),
        2,
        w3.weight_space_dim(-3 * r),
        "weight -3rho occurs twice in wedge^2(b) x wedge^2(b)",
    ));

    // e_-alpha^2 (fr^fb) (x) (fb^ta) = 2 (fr^fb) (x) (fr^fa), up to the sign convention
    use RootElem::*;
    let vt = s.simple(&([Fr, Fb], [Fb, Ta]));
    let target = s.simple(&([Fr, Fb], [Fr, Fa]));
    let sq = w3.act_pow(LoweringOp::Alpha, &vt, 2);
    let (status, actual) = match proportional(f, &sq, &target) {
        Some(c) if f.is_zero(&f.sub(&c, &f.from_i64(2))) || f.is_zero(&f.add(&c, &f.from_i64(2))) => {
            (Status::Pass, format!("coefficient {}", signed(f, &c)))
        }
        Some(c) => (Status::Fail, format!("coefficient {}", signed(f, &c))),
        None => (Status::Fail, show(w3, &sq)),
    };
    out.push(Entry::new(
        format!("{prefix}.e-alpha-squared"),
        status,
        "coefficient 2 up to the sign of [f_alpha, f_beta]",
        actual,
        ANCHOR_DEMAZURE,
    ));

    // U_P-coinvariants of the representations generated by v and v'
    let mu = -2 * b - r;
    let mut covered = Echelon::new(f.clone(), w3.dim());
    for (name, vec) in [("v-tilde", vt.clone()), ("v-tilde-prime", s.simple(&([Fb, Ta], [Fr, Fb])))] {
        let gen = w3.generated(&[vec])?;
        for i in gen.weight_indices(-3 * r) {
            covered.insert(gen.to_ambient(&gen.basis_vector(i))?);
        }
        let co = gen.coinvariants(&LoweringOp::ALL[1..])?;
        let allowed = [mu, mu - a, mu - 2 * a];
        let weights_ok = co.weights().iter().all(|w| allowed.contains(w));
        let ext = p_extend_check(&co.twist(Weight::L1)?, l);
        // the kernel of the projection onto the coinvariants has no psupp^3
        let kernel = multiset_difference(gen.weights(), co.weights());
        let kernel_chr = if l.is_zero() { Characteristic::ZERO } else { l };
        let ps = psupp(&kernel, 3, kernel_chr).map(|m| m.is_empty());
        let pass = weights_ok && ext.extends && ps == Ok(true);
        out.push(Entry::new(
            format!("{prefix}.{name}"),
            if pass { Status::Pass } else { Status::Fail },
            "coinvariants extend to P_alpha after twisting by L1; kernel has empty psupp^3",
            format!(
                "dim {} -> {}, {}, kernel psupp^3 {}",
                gen.dim(),
                co.dim(),
                ext.reason,
                match ps {
                    Ok(true) => "empty".to_string(),
                    Ok(false) => "nonempty".to_string(),
                    Err(e) => e.to_string(),
                }
            ),
            ANCHOR_DEMAZURE,
        ));
    }
    out.push(Entry::compare(
        format!("{prefix}.minus-3rho-covered"),
        w3.weight_space_dim(-3 * r),
        covered.rank(),
        "V~ + V~' contains the weight -3rho space",
    ));
    Ok(out)
}

fn multiset_difference(all: &[Weight], remove: &[Weight]) -> WeightMultiset {
    let mut counts: BTreeMap<(i64, i64), u64> = BTreeMap::new();
    for w in all {
        *counts.entry((w.a, w.b)).or_default() += 1;
    }
    for w in remove {
        if let Some(c) = counts.get_mut(&(w.a, w.b)) {
            *c = c.saturating_sub(1);
        }
    }
    WeightMultiset::from_pairs(counts.into_iter().filter(|&(_, c)| c > 0).map(|((a, b), c)| (Weight::new(a, b), c)))
}

/// Hypotheses of the parabolic-extension vanishing argument in
/// `wedge^2(b) (x) wedge^2(b)`.
pub fn demazure_checks(chr: Characteristic) -> Report {
    let prefix = format!("demazure.char{chr}");
    let mut report = Report::new();
    if !supported(chr) {
        report.push(unsupported_entry(prefix, ANCHOR_DEMAZURE));
        return report;
    }
    report.timed(|| {
        with_field!(chr, |f| demazure_in(&f, chr, &prefix))
            .unwrap_or_else(|e| vec![error_entry(prefix.clone(), e, ANCHOR_DEMAZURE)])
    });
    report
}

// ---- the commuting-nilpotent deformation ----

const ANCHOR_CNIL: &str = "(Phi0 + M)N - qN(Phi0 + M) is generated by (q^2 - 1)e + af - dc";

/// Two-sided containment of ideals via untruncated Groebner bases.
fn same_ideal<F: Field>(r: &PolyRing<F>, x: &[Poly<F>], y: &[Poly<F>]) -> Result<bool, crate::polyalg::PolyError> {
    let gx = groebner(r, x, None)?;
    let gy = groebner(r, y, None)?;
    for p in y {
        if !gx.contains(r, p)? {
            return Ok(false);
        }
    }
    for p in x {
        if !gy.contains(r, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cnil_in<F: Field>(field: F, q: QValue, n: usize, id: &str) -> Result<Vec<Entry>, crate::steinberg::SteinbergError> {
    let ideal = cnil_ideal(field, n, q)?;
    let r = &ideal.ring;
    let entries: Vec<String> =
        ideal.labels.iter().zip(&ideal.gens).map(|(l, g)| format!("{l} = {}", format_poly(r, g))).collect();
    let actual = if entries.is_empty() {
        "no nonzero entries".to_string()
    } else {
        format!("{} nonzero: {}", entries.len(), entries.join("; "))
    };
    let (claim, target) = match (n, q) {
        (2, _) => ("zero ideal".to_string(), vec![]),
        (_, QValue::Symbolic) => {
            ("((q^2 - 1)*e + a*f - d*c)".to_string(), vec![parse_poly(r, "(q^2 - 1)*e + a*f - d*c")?])
        }
        (_, QValue::Value(v)) => {
            let text = format!("{}*e + a*f - d*c", v * v - 1);
            (format!("({text})"), vec![parse_poly(r, &text)?])
        }
    };
    let equal = same_ideal(r, &ideal.gens, &target)?;
    let mut out = vec![Entry::new(id, if equal { Status::Pass } else { Status::Fail }, claim, actual, ANCHOR_CNIL)];

    if q == QValue::Symbolic && n == 3 {
        // q -> 1 lands on the commuting variety of n
        let names = ["a", "b", "c", "d", "e", "f"];
        let target_ring = PolyRing::new(r.field().clone(), names)?;
        let images: Vec<Poly<F>> =
            r.var_names().iter().map(|v| if v == "q" { target_ring.one() } else { target_ring.v(v) }).collect();
        let special: Vec<Poly<F>> = ideal.gens.iter().map(|g| r.substitute(g, &target_ring, &images)).collect();
        let want = parse_poly(&target_ring, "a*f - c*d")?;
        let equal = same_ideal(&target_ring, &special, &[want])?;
        let shown: Vec<String> = special.iter().map(|p| format_poly(&target_ring, p)).collect();
        out.push(Entry::new(
            format!("{id}.at-q1"),
            if equal { Status::Pass } else { Status::Fail },
            "(a*f - c*d)",
            shown.join("; "),
            "at q = 1 the ideal is that of the commuting variety af = cd",
        ));
    }
    Ok(out)
}

/// Expands the entries of `(Phi0 + M)N - qN(Phi0 + M)` for strictly upper
/// triangular `M`, `N` and compares the ideal they generate with the claimed
/// single generator (the zero ideal for `n = 2`).
pub fn cn_ideal_reduction(q: QValue, chr: Characteristic, n: usize) -> Report {
    let qname = match q {
        QValue::Symbolic => "symbolic".to_string(),
        QValue::Value(v) => format!("q{v}"),
    };
    let id = format!("cnil.n{n}.{qname}.char{chr}");
    let mut report = Report::new();
    report.timed(|| {
        with_field!(chr, |f| cnil_in(f, q, n, &id)).unwrap_or_else(|e| vec![error_entry(id.clone(), e, ANCHOR_CNIL)])
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn chr(l: u64) -> Characteristic {
        Characteristic::new(l).unwrap()
    }

    #[test]
    fn family_sizes() {
        let fam = identity_family();
        assert_eq!(fam.len(), 21);
        assert_eq!(fam[2].name, "1.conj");
        assert_eq!(fam[2].op, LoweringOp::Alpha);
        // conjugating twice is the identity up to the name
        let id = &displayed_identities()[1];
        let back = id.conjugated().conjugated();
        assert_eq!((back.lhs, back.arg.clone(), back.op), (id.lhs, id.arg.clone(), id.op));
    }

    #[test]
    fn identities_over_rationals() {
        let r = identity_suite(Characteristic::ZERO);
        let bad: Vec<_> = r.failures().map(|e| (e.check_id.clone(), e.actual.clone())).collect();
        assert!(bad.is_empty(), "{bad:#?}");
        assert_eq!(r.get("identities.char0.bracket-unit").unwrap().actual, "[e_-alpha, e_-beta] = -1 * e_-rho");
        assert_eq!(r.get("identities.char0.rank-through-6").unwrap().actual, "17");
    }

    #[test]
    fn corrupted_coefficient_is_caught() {
        let mut ids = identity_family();
        ids[4].arg[1].coef = (2, 1);
        let r = verify_identities(chr(7), &ids);
        let first = r.failures().next().unwrap();
        assert_eq!(first.check_id, "identities.char7.identity-2");
    }

    #[test]
    fn small_characteristics_are_skipped() {
        let r = identity_suite(chr(3));
        assert_eq!(r.entries.len(), 1);
        assert_eq!(r.entries[0].status, Status::Skipped);
    }

    #[test]
    fn span_over_f7() {
        let r = span_check(chr(7));
        assert!(r.passed());
        assert_eq!(r.get("span.char7.dim").unwrap().actual, "17");
    }

    #[test]
    fn extension_examples() {
        let f = Rationals;
        let line = build_based_rep(&RepExpr::parse("F(0,3)").unwrap(), &f).unwrap();
        assert!(p_extend_check(&line, chr(7)).extends);
        let g = build_based_rep(&RepExpr::parse("n").unwrap(), &f).unwrap();
        let ext = p_extend_check(&g, chr(7));
        assert!(!ext.extends);
        assert_eq!(ext.reason, "e_-beta acts nonzero");
        // the 2-dimensional string fa, ta/fa twisted to the right height
        let b = build_based_rep(&RepExpr::parse("b").unwrap(), &f).unwrap();
        let q = b.quotient(&[b.basis("fb").unwrap(), b.basis("fr").unwrap(), b.basis("tb").unwrap()]).unwrap();
        let ext = p_extend_check(&q.twist(Weight::L1).unwrap(), chr(7));
        assert!(ext.extends, "{}", ext.reason);
        assert_eq!(ext.chain.len(), 2);
        assert!(!p_extend_check(&q.twist(Weight::L1).unwrap(), chr(0)).chain.is_empty());
    }

    #[test]
    fn demazure_hypotheses() {
        for l in [0, 5, 7] {
            let r = demazure_checks(chr(l));
            let bad: Vec<_> = r.failures().map(|e| (e.check_id.clone(), e.actual.clone())).collect();
            assert!(bad.is_empty(), "{bad:#?}");
        }
    }

    #[test]
    fn cnil_reductions() {
        let sym = cn_ideal_reduction(QValue::Symbolic, Characteristic::ZERO, 3);
        let e = sym.get("cnil.n3.symbolic.char0").unwrap();
        assert_eq!(e.status, Status::Fail);
        assert_eq!(e.actual, "1 nonzero: C[1,3] = -c*d*q + e*q^2 + a*f - e*q");
        assert_eq!(sym.get("cnil.n3.symbolic.char0.at-q1").unwrap().status, Status::Pass);
        assert!(cn_ideal_reduction(QValue::Value(1), chr(5), 3).passed());
        let two = cn_ideal_reduction(QValue::Value(1), Characteristic::ZERO, 2);
        assert!(two.passed());
        assert_eq!(two.entries[0].actual, "no nonzero entries");
    }
}
