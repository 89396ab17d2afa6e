use std::collections::{BTreeMap, HashMap};

use crate::breps::{Atom, RepExpr};
use crate::field::Field;
use crate::linalg::{self, Echelon};
use crate::weights::Weight;

use super::LieError;

/// The lowering operators `e_{-alpha}`, `e_{-beta}`, `e_{-rho}`, acting as
/// `ad f` for the root vectors `f_alpha = E23`, `f_beta = E12`, `f_rho = E13`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LoweringOp {
    Alpha,
    Beta,
    Rho,
}

impl LoweringOp {
    pub const ALL: [LoweringOp; 3] = [LoweringOp::Alpha, LoweringOp::Beta, LoweringOp::Rho];

    /// The positive root `kappa`; the operator shifts weights by `-kappa`.
    pub fn root(self) -> Weight {
        match self {
            LoweringOp::Alpha => Weight::ALPHA,
            LoweringOp::Beta => Weight::BETA,
            LoweringOp::Rho => Weight::RHO,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LoweringOp::Alpha => "e_-alpha",
            LoweringOp::Beta => "e_-beta",
            LoweringOp::Rho => "e_-rho",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Sparse column: the image of one basis vector.
type Column<E> = Vec<(usize, E)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PowerKind {
    Wedge,
    Sym,
}

#[derive(Clone, Debug)]
enum Shape<F: Field> {
    Atom,
    Sum,
    Tensor { left: usize, right: usize },
    Power { kind: PowerKind, index: HashMap<Vec<usize>, usize> },
    Dual,
    Twist,
    Sub { ambient: Box<BasedRep<F>>, span: Echelon<F> },
    Quotient { ambient: Box<BasedRep<F>>, kernel: Echelon<F>, complement: Vec<usize> },
}

/// A B-representation with an explicit weight basis and the matrices of the
/// three lowering operators.
#[derive(Clone, Debug)]
pub struct BasedRep<F: Field> {
    field: F,
    weights: Vec<Weight>,
    labels: Vec<String>,
    ops: [Vec<Column<F::Elem>>; 3],
    shape: Shape<F>,
}

impl<F: Field> BasedRep<F> {
    fn assemble(
        field: F,
        weights: Vec<Weight>,
        labels: Vec<String>,
        ops: [Vec<Column<F::Elem>>; 3],
        shape: Shape<F>,
    ) -> Result<Self, LieError> {
        let rep = BasedRep { field, weights, labels, ops, shape };
        rep.check_grading()?;
        Ok(rep)
    }

    fn check_grading(&self) -> Result<(), LieError> {
        for op in LoweringOp::ALL {
            for (j, col) in self.ops[op.index()].iter().enumerate() {
                for (i, _) in col {
                    if self.weights[*i] != self.weights[j] - op.root() {
                        return Err(LieError::Grading {
                            op: op.name(),
                            from: self.labels[j].clone(),
                            to: self.labels[*i].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn zero(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    pub fn index_of(&self, label: &str) -> Result<usize, LieError> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| LieError::UnknownLabel(label.to_string()))
    }

    pub fn basis(&self, label: &str) -> Result<Vec<F::Elem>, LieError> {
        Ok(self.basis_vector(self.index_of(label)?))
    }

    /// Basis indices whose weight is `mu`.
    pub fn weight_indices(&self, mu: Weight) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.weights[i] == mu).collect()
    }

    pub fn weight_space_dim(&self, mu: Weight) -> usize {
        self.weights.iter().filter(|&&w| w == mu).count()
    }

    /// The weight of a nonzero vector supported on a single weight space.
    pub fn weight_of(&self, v: &[F::Elem]) -> Option<Weight> {
        let mut ws = v.iter().zip(&self.weights).filter(|(x, _)| !self.field.is_zero(x)).map(|(_, w)| *w);
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    pub fn act(&self, op: LoweringOp, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = self.zero();
        for (x, col) in v.iter().zip(&self.ops[op.index()]) {
            if f.is_zero(x) {
                continue;
            }
            for (i, c) in col {
                f.add_mul_assign(&mut out[*i], x, c);
            }
        }
        out
    }

    pub fn act_pow(&self, op: LoweringOp, v: &[F::Elem], k: u32) -> Vec<F::Elem> {
        (0..k).fold(v.to_vec(), |x, _| self.act(op, &x))
    }

    pub fn op_is_zero(&self, op: LoweringOp) -> bool {
        self.ops[op.index()].iter().all(|col| col.iter().all(|(_, c)| self.field.is_zero(c)))
    }

    /// `sum_i c_i v_i`.
    pub fn combine(&self, terms: &[(F::Elem, Vec<F::Elem>)]) -> Vec<F::Elem> {
        let mut out = self.zero();
        for (c, v) in terms {
            for (o, x) in out.iter_mut().zip(v) {
                self.field.add_mul_assign(o, c, x);
            }
        }
        out
    }

    // ---- element builders ----

    /// `u (x) v` in a tensor product.
    pub fn tensor_of(&self, u: &[F::Elem], v: &[F::Elem]) -> Result<Vec<F::Elem>, LieError> {
        let Shape::Tensor { left, right } = self.shape else {
            return Err(LieError::Shape("tensor product"));
        };
        let f = &self.field;
        let mut out = self.zero();
        for (i, x) in u.iter().enumerate().filter(|(_, x)| !f.is_zero(x)) {
            for (j, y) in v.iter().enumerate().filter(|(_, y)| !f.is_zero(y)) {
                out[i * right + j] = f.mul(x, y);
            }
        }
        debug_assert_eq!(u.len(), left);
        Ok(out)
    }

    /// `v_1 ^ ... ^ v_k` in an exterior power, or their product in a
    /// symmetric power.
    pub fn power_of(&self, vs: &[Vec<F::Elem>]) -> Result<Vec<F::Elem>, LieError> {
        let Shape::Power { kind, index, .. } = &self.shape else {
            return Err(LieError::Shape("exterior or symmetric power"));
        };
        let f = &self.field;
        let mut out = self.zero();
        // multilinear expansion over the supports of the factors
        let supports: Vec<Vec<usize>> =
            vs.iter().map(|v| (0..v.len()).filter(|&i| !f.is_zero(&v[i])).collect()).collect();
        let mut pick = vec![0usize; vs.len()];
        if supports.iter().any(Vec::is_empty) {
            return Ok(out);
        }
        loop {
            let idx: Vec<usize> = pick.iter().zip(&supports).map(|(&p, s)| s[p]).collect();
            let coef = idx.iter().zip(vs).fold(f.one(), |acc, (&i, v)| f.mul(&acc, &v[i]));
            if let Some((key, sign)) = normalize(*kind, idx) {
                let c = if sign { f.neg(&coef) } else { coef };
                let k = index[&key];
                out[k] = f.add(&out[k], &c);
            }
            let mut r = 0;
            loop {
                if r == pick.len() {
                    return Ok(out);
                }
                pick[r] += 1;
                if pick[r] < supports[r].len() {
                    break;
                }
                pick[r] = 0;
                r += 1;
            }
        }
    }

    /// Coordinates in `self` of a vector of the ambient space, for
    /// subrepresentations and quotients.
    pub fn from_ambient(&self, x: &[F::Elem]) -> Result<Vec<F::Elem>, LieError> {
        match &self.shape {
            Shape::Sub { span, .. } => span.coordinates(x).ok_or(LieError::NotInSubspace),
            Shape::Quotient { kernel, complement, .. } => {
                let r = kernel.reduce(x);
                Ok(complement.iter().map(|&i| r[i].clone()).collect())
            }
            _ => Err(LieError::Shape("subrepresentation or quotient")),
        }
    }

    /// Coordinates of a vector of the innermost space a chain of
    /// subrepresentations and quotients was built from.
    pub fn from_base(&self, x: &[F::Elem]) -> Result<Vec<F::Elem>, LieError> {
        match &self.shape {
            Shape::Sub { ambient, .. } | Shape::Quotient { ambient, .. } => {
                let y = match ambient.shape {
                    Shape::Sub { .. } | Shape::Quotient { .. } => ambient.from_base(x)?,
                    _ => x.to_vec(),
                };
                self.from_ambient(&y)
            }
            _ => Err(LieError::Shape("subrepresentation or quotient")),
        }
    }

    /// The ambient vector of a basis element of a subrepresentation.
    pub fn to_ambient(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>, LieError> {
        let Shape::Sub { ambient, span } = &self.shape else {
            return Err(LieError::Shape("subrepresentation"));
        };
        let terms: Vec<_> = v.iter().cloned().zip(span.rows().iter().cloned()).collect();
        Ok(ambient.combine(&terms))
    }

    // ---- constructions ----

    pub fn direct_sum(&self, other: &Self) -> Result<Self, LieError> {
        let n = self.dim();
        let weights = self.weights.iter().chain(&other.weights).copied().collect();
        let labels =
            self.labels.iter().map(|l| format!("1:{l}")).chain(other.labels.iter().map(|l| format!("2:{l}"))).collect();
        let ops = LoweringOp::ALL.map(|op| {
            let k = op.index();
            let mut cols = self.ops[k].clone();
            cols.extend(other.ops[k].iter().map(|c| c.iter().map(|(i, x)| (i + n, x.clone())).collect()));
            cols
        });
        Self::assemble(self.field.clone(), weights, labels, ops, Shape::Sum)
    }

    pub fn tensor(&self, other: &Self) -> Result<Self, LieError> {
        let (n, m) = (self.dim(), other.dim());
        let mut weights = Vec::with_capacity(n * m);
        let mut labels = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                weights.push(self.weights[i] + other.weights[j]);
                labels.push(format!("{}⊗{}", wrap(&self.labels[i]), wrap(&other.labels[j])));
            }
        }
        let ops = LoweringOp::ALL.map(|op| {
            let k = op.index();
            let mut cols = Vec::with_capacity(n * m);
            for i in 0..n {
                for j in 0..m {
                    let mut col: Column<F::Elem> = self.ops[k][i].iter().map(|(a, c)| (a * m + j, c.clone())).collect();
                    col.extend(other.ops[k][j].iter().map(|(b, c)| (i * m + b, c.clone())));
                    cols.push(col);
                }
            }
            cols
        });
        let shape = Shape::Tensor { left: n, right: m };
        Self::assemble(self.field.clone(), weights, labels, ops, shape)
    }

    pub fn wedge(&self, k: u32) -> Result<Self, LieError> {
        self.power(PowerKind::Wedge, k)
    }

    pub fn sym(&self, k: u32) -> Result<Self, LieError> {
        self.power(PowerKind::Sym, k)
    }

    fn power(&self, kind: PowerKind, k: u32) -> Result<Self, LieError> {
        let f = &self.field;
        let keys = match kind {
            PowerKind::Wedge => combinations(self.dim(), k as usize, false),
            PowerKind::Sym => combinations(self.dim(), k as usize, true),
        };
        if keys.len() > MAX_DIM {
            return Err(LieError::TooLarge(keys.len()));
        }
        let index: HashMap<Vec<usize>, usize> = keys.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let sep = if kind == PowerKind::Wedge { "∧" } else { "·" };
        let weights = keys.iter().map(|s| s.iter().fold(Weight::ZERO, |a, &i| a + self.weights[i])).collect();
        let labels =
            keys.iter().map(|s| s.iter().map(|&i| wrap(&self.labels[i])).collect::<Vec<_>>().join(sep)).collect();
        let ops = LoweringOp::ALL.map(|op| {
            keys.iter()
                .map(|s| {
                    let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
                    for r in 0..s.len() {
                        for (m, c) in &self.ops[op.index()][s[r]] {
                            let mut t = s.clone();
                            t[r] = *m;
                            if let Some((key, sign)) = normalize(kind, t) {
                                let c = if sign { f.neg(c) } else { c.clone() };
                                let e = acc.entry(index[&key]).or_insert_with(|| f.zero());
                                *e = f.add(e, &c);
                            }
                        }
                    }
                    acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect()
                })
                .collect()
        });
        let shape = Shape::Power { kind, index };
        Self::assemble(self.field.clone(), weights, labels, ops, shape)
    }

    pub fn dual(&self) -> Result<Self, LieError> {
        let f = &self.field;
        let weights = self.weights.iter().map(|&w| -w).collect();
        let labels = self.labels.iter().map(|l| format!("{}*", wrap(l))).collect();
        // X e_j^* = -sum_k <e_j, X e_k> e_k^*
        let ops = LoweringOp::ALL.map(|op| {
            let mut cols: Vec<Column<F::Elem>> = vec![Vec::new(); self.dim()];
            for (k, col) in self.ops[op.index()].iter().enumerate() {
                for (j, c) in col {
                    cols[*j].push((k, f.neg(c)));
                }
            }
            cols
        });
        Self::assemble(f.clone(), weights, labels, ops, Shape::Dual)
    }

    /// Tensor with the one-dimensional representation of weight `by`.
    pub fn twist(&self, by: Weight) -> Result<Self, LieError> {
        let weights = self.weights.iter().map(|&w| w + by).collect();
        Self::assemble(self.field.clone(), weights, self.labels.clone(), self.ops.clone(), Shape::Twist)
    }

    fn op_image_coords(&self, span: &Echelon<F>) -> Result<[Vec<Column<F::Elem>>; 3], LieError> {
        let f = &self.field;
        let mut out: [Vec<Column<F::Elem>>; 3] = Default::default();
        for op in LoweringOp::ALL {
            for row in span.rows() {
                let image = self.act(op, row);
                let coords = span.coordinates(&image).ok_or(LieError::NotInvariant(op.name()))?;
                out[op.index()].push(coords.into_iter().enumerate().filter(|(_, c)| !f.is_zero(c)).collect());
            }
        }
        Ok(out)
    }

    fn sub_from_span(&self, span: Echelon<F>) -> Result<Self, LieError> {
        let ops = self.op_image_coords(&span)?;
        let mut weights = Vec::new();
        let mut labels = Vec::new();
        for (row, &p) in span.rows().iter().zip(span.pivots()) {
            // rows are reduced, so a homogeneous row has the weight of its pivot
            if self.weight_of(row) != Some(self.weights[p]) {
                return Err(LieError::NotHomogeneous);
            }
            weights.push(self.weights[p]);
            labels.push(self.labels[p].clone());
        }
        let shape = Shape::Sub { ambient: Box::new(self.clone()), span };
        Self::assemble(self.field.clone(), weights, labels, ops, shape)
    }

    /// The subrepresentation spanned by weight vectors; fails unless the span
    /// is stable under every lowering operator.
    pub fn span(&self, vectors: &[Vec<F::Elem>]) -> Result<Self, LieError> {
        let mut span = Echelon::new(self.field.clone(), self.dim());
        for v in vectors {
            if !v.iter().all(|x| self.field.is_zero(x)) && self.weight_of(v).is_none() {
                return Err(LieError::NotHomogeneous);
            }
            span.insert(v.clone());
        }
        self.sub_from_span(span)
    }

    /// The span of all basis vectors whose weight lies in `set`.
    pub fn weight_span(&self, set: &[Weight]) -> Result<Self, LieError> {
        let vs: Vec<_> =
            (0..self.dim()).filter(|&i| set.contains(&self.weights[i])).map(|i| self.basis_vector(i)).collect();
        self.span(&vs)
    }

    /// The smallest subrepresentation containing the given weight vectors.
    pub fn generated(&self, vectors: &[Vec<F::Elem>]) -> Result<Self, LieError> {
        let mut span = Echelon::new(self.field.clone(), self.dim());
        let mut queue: Vec<Vec<F::Elem>> = vectors.to_vec();
        while let Some(v) = queue.pop() {
            if !v.iter().all(|x| self.field.is_zero(x)) && self.weight_of(&v).is_none() {
                return Err(LieError::NotHomogeneous);
            }
            if span.insert(v.clone()) {
                queue.extend(LoweringOp::ALL.map(|op| self.act(op, &v)));
            }
        }
        self.sub_from_span(span)
    }

    /// `self / W` for a subrepresentation `W` given by spanning weight
    /// vectors. The basis of the quotient is the set of basis vectors of
    /// `self` that are not pivots of the reduced echelon form of `W`.
    pub fn quotient(&self, vectors: &[Vec<F::Elem>]) -> Result<Self, LieError> {
        let kernel_rep = self.span(vectors)?;
        let Shape::Sub { span: kernel, .. } = kernel_rep.shape else { unreachable!() };
        let complement: Vec<usize> = (0..self.dim()).filter(|i| !kernel.pivots().contains(i)).collect();
        let f = &self.field;
        let pos: HashMap<usize, usize> = complement.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let ops = LoweringOp::ALL.map(|op| {
            complement
                .iter()
                .map(|&i| {
                    let image = kernel.reduce(&self.act(op, &self.basis_vector(i)));
                    image.into_iter().enumerate().filter(|(_, c)| !f.is_zero(c)).map(|(j, c)| (pos[&j], c)).collect()
                })
                .collect()
        });
        let weights = complement.iter().map(|&i| self.weights[i]).collect();
        let labels = complement.iter().map(|&i| self.labels[i].clone()).collect();
        let shape = Shape::Quotient { ambient: Box::new(self.clone()), kernel, complement };
        Self::assemble(self.field.clone(), weights, labels, ops, shape)
    }

    /// `W_upper / W_lower` for the weight spans of two weight sets.
    pub fn weight_subquotient(&self, lower: &[Weight], upper: &[Weight]) -> Result<Self, LieError> {
        let top = self.weight_span(upper)?;
        let bottom: Vec<_> =
            (0..top.dim()).filter(|&i| lower.contains(&top.weights[i])).map(|i| top.basis_vector(i)).collect();
        // `lower` must itself be a subrepresentation of the ambient space
        self.weight_span(lower)?;
        top.quotient(&bottom)
    }

    /// Coinvariants for the subalgebra spanned by `ops`: the quotient by the
    /// span of their images.
    pub fn coinvariants(&self, ops: &[LoweringOp]) -> Result<Self, LieError> {
        let images: Vec<_> = ops
            .iter()
            .flat_map(|&op| (0..self.dim()).map(move |i| (op, i)))
            .map(|(op, i)| self.act(op, &self.basis_vector(i)))
            .filter(|v| v.iter().any(|x| !self.field.is_zero(x)))
            .collect();
        self.quotient(&images)
    }

    /// Rank of a list of vectors of this space.
    pub fn rank(&self, vectors: &[Vec<F::Elem>]) -> usize {
        linalg::rank(&self.field, self.dim(), vectors)
    }
}

/// Upper bound on constructed dimensions.
pub const MAX_DIM: usize = 20_000;

fn wrap(label: &str) -> String {
    if label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        label.to_string()
    } else {
        format!("({label})")
    }
}

/// Sorted key and whether the sorting permutation is odd. `None` for a
/// repeated index in an exterior power.
fn normalize(kind: PowerKind, mut idx: Vec<usize>) -> Option<(Vec<usize>, bool)> {
    let mut odd = false;
    // insertion sort counts transpositions
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    match kind {
        PowerKind::Wedge if idx.windows(2).any(|w| w[0] == w[1]) => None,
        PowerKind::Wedge => Some((idx, odd)),
        PowerKind::Sym => Some((idx, false)),
    }
}

/// Index tuples `i_1 < ... < i_k` (or `<=` with repetition) in lexicographic order.
fn combinations(n: usize, k: usize, repeat: bool) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, repeat: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, if repeat { i } else { i + 1 }, repeat, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, repeat, &mut Vec::with_capacity(k), &mut out);
    out
}

// ---- sl3 as 3x3 matrices ----

type Mat3<E> = [E; 9];

fn unit<F: Field>(f: &F, i: usize, j: usize) -> Mat3<F::Elem> {
    let mut m: Mat3<F::Elem> = std::array::from_fn(|_| f.zero());
    m[3 * i + j] = f.one();
    m
}

fn bracket<F: Field>(f: &F, x: &Mat3<F::Elem>, y: &Mat3<F::Elem>) -> Mat3<F::Elem> {
    std::array::from_fn(|k| {
        let (i, j) = (k / 3, k % 3);
        let mut s = f.zero();
        for m in 0..3 {
            f.add_mul_assign(&mut s, &x[3 * i + m], &y[3 * m + j]);
            let p = f.mul(&y[3 * i + m], &x[3 * m + j]);
            s = f.sub(&s, &p);
        }
        s
    })
}

/// Root vectors of `sl3` with their weights. Rows and columns are indexed by
/// `L3, L2, L1`, so `E12` has weight `L3 - L2 = -beta`.
fn root_vectors<F: Field>(f: &F) -> [(&'static str, Weight, Mat3<F::Elem>); 6] {
    [
        ("fa", -Weight::ALPHA, unit(f, 1, 2)),
        ("fb", -Weight::BETA, unit(f, 0, 1)),
        ("fr", -Weight::RHO, unit(f, 0, 2)),
        ("ea", Weight::ALPHA, unit(f, 2, 1)),
        ("eb", Weight::BETA, unit(f, 1, 0)),
        ("er", Weight::RHO, unit(f, 2, 0)),
    ]
}

/// Coefficient `phi` with `[f_kappa, t] = phi(t) f_kappa` for diagonal `t`.
fn root_value<F: Field>(f: &F, root: &Mat3<F::Elem>, pos: usize, t: &Mat3<F::Elem>) -> F::Elem {
    bracket(f, root, t)[pos].clone()
}

/// `t_alpha`, `t_beta`: the traceless diagonal matrices with
/// `e_{-nu}(t_mu) = delta_{nu,mu} f_nu` for `nu, mu` simple. They exist iff 3
/// is invertible.
pub fn torus_basis<F: Field>(f: &F) -> Result<[Mat3<F::Elem>; 2], LieError> {
    let mut h1 = unit(f, 0, 0);
    h1[8] = f.neg(&f.one());
    let mut h2 = unit(f, 1, 1);
    h2[8] = f.neg(&f.one());
    let (fa, fb) = (unit(f, 1, 2), unit(f, 0, 1));
    let rows: Vec<Vec<F::Elem>> =
        [&h1, &h2].iter().map(|h| vec![root_value(f, &fa, 5, h), root_value(f, &fb, 1, h)]).collect();
    if linalg::rank(f, 2, &rows) < 2 {
        return Err(LieError::NoTorusBasis { characteristic: f.characteristic() });
    }
    let solve = |target: [i64; 2]| -> Mat3<F::Elem> {
        let b = vec![f.from_i64(target[0]), f.from_i64(target[1])];
        let x = linalg::solve_left(f, &rows, &b).expect("invertible system");
        std::array::from_fn(|k| f.add(&f.mul(&x[0], &h1[k]), &f.mul(&x[1], &h2[k])))
    };
    Ok([solve([1, 0]), solve([0, 1])])
}

struct MatrixAtom<E> {
    labels: Vec<&'static str>,
    weights: Vec<Weight>,
    basis: Vec<Mat3<E>>,
    /// Spans the subspace divided out (for quotients of `sl3`).
    modulo: Vec<Mat3<E>>,
}

fn matrix_atom<F: Field>(f: &F, atom: MatrixAtom<F::Elem>) -> Result<BasedRep<F>, LieError> {
    let (fa, fb, fr) = (unit(f, 1, 2), unit(f, 0, 1), unit(f, 0, 2));
    let rows: Vec<Vec<F::Elem>> = atom.basis.iter().chain(&atom.modulo).map(|m| m.to_vec()).collect();
    let n = atom.basis.len();
    let ops = [fa, fb, fr].map(|x| {
        atom.basis
            .iter()
            .map(|b| {
                let image = bracket(f, &x, b);
                let coords = linalg::solve_left(f, &rows, &image).expect("bracket stays in the model");
                coords.into_iter().take(n).enumerate().filter(|(_, c)| !f.is_zero(c)).collect()
            })
            .collect()
    });
    let labels = atom.labels.iter().map(|s| s.to_string()).collect();
    BasedRep::assemble(f.clone(), atom.weights, labels, ops, Shape::Atom)
}

fn atom_rep<F: Field>(f: &F, atom: Atom) -> Result<BasedRep<F>, LieError> {
    let roots = root_vectors(f);
    let pick = |names: &[&str]| roots.iter().filter(|r| names.contains(&r.0)).cloned().collect::<Vec<_>>();
    let with_torus = |mut items: Vec<(&'static str, Weight, Mat3<F::Elem>)>| -> Result<_, LieError> {
        let [ta, tb] = torus_basis(f)?;
        items.push(("ta", Weight::ZERO, ta));
        items.push(("tb", Weight::ZERO, tb));
        Ok(items)
    };
    let split = |items: Vec<(&'static str, Weight, Mat3<F::Elem>)>, modulo| MatrixAtom {
        labels: items.iter().map(|x| x.0).collect(),
        weights: items.iter().map(|x| x.1).collect(),
        basis: items.into_iter().map(|x| x.2).collect(),
        modulo,
    };
    match atom {
        Atom::N => matrix_atom(f, split(pick(&["fa", "fb", "fr"]), vec![])),
        Atom::B => matrix_atom(f, split(with_torus(pick(&["fa", "fb", "fr"]))?, vec![])),
        Atom::G => matrix_atom(f, split(with_torus(pick(&["fa", "fb", "fr", "ea", "eb", "er"]))?, vec![])),
        Atom::GModB => {
            // divide out every upper-triangular matrix unit, diagonal included
            let upper = (0..3).flat_map(|i| (i..3).map(move |j| (i, j))).map(|(i, j)| unit(f, i, j)).collect();
            matrix_atom(f, split(pick(&["ea", "eb", "er"]), upper))
        }
        Atom::Line(w) => BasedRep::assemble(
            f.clone(),
            vec![w],
            vec![format!("F{w}")],
            [vec![vec![]], vec![vec![]], vec![vec![]]],
            Shape::Atom,
        ),
    }
}

/// Builds the explicit representation described by `expr`.
pub fn build_based_rep<F: Field>(expr: &RepExpr, field: &F) -> Result<BasedRep<F>, LieError> {
    match expr {
        RepExpr::Atom(a) => atom_rep(field, *a),
        RepExpr::Tensor(x, y) => build_based_rep(x, field)?.tensor(&build_based_rep(y, field)?),
        RepExpr::Sum(x, y) => build_based_rep(x, field)?.direct_sum(&build_based_rep(y, field)?),
        RepExpr::Wedge(k, e) => build_based_rep(e, field)?.wedge(*k),
        RepExpr::Sym(k, e) => build_based_rep(e, field)?.sym(*k),
        RepExpr::Dual(e) => build_based_rep(e, field)?.dual(),
        RepExpr::Twist(w, e) => build_based_rep(e, field)?.twist(*w),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::breps::{build_rep, WeightMultiset};
    use crate::field::{PrimeField, Rationals};

    fn rep(s: &str) -> BasedRep<Rationals> {
        build_based_rep(&RepExpr::parse(s).unwrap(), &Rationals).unwrap()
    }

    fn multiset<F: Field>(r: &BasedRep<F>) -> WeightMultiset {
        WeightMultiset::from_weights(r.weights().iter().copied())
    }

    #[test]
    fn torus_basis_values() {
        let f = Rationals;
        let [ta, tb] = torus_basis(&f).unwrap();
        let d = |m: &Mat3<_>| [0, 4, 8].map(|k| f.fmt_elem(&m[k]));
        assert_eq!(d(&ta), ["-1/3", "-1/3", "2/3"]);
        assert_eq!(d(&tb), ["-2/3", "1/3", "1/3"]);
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(torus_basis(&f3).unwrap_err(), LieError::NoTorusBasis { characteristic: 3 });
        // the nilradical needs no torus
        assert!(build_based_rep(&RepExpr::parse("wedge^2(n)").unwrap(), &f3).is_ok());
    }

    #[test]
    fn borel_action() {
        let b = rep("b");
        let f = Rationals;
        let act = |op, x: &str| b.act(op, &b.basis(x).unwrap());
        assert_eq!(act(LoweringOp::Beta, "tb"), b.basis("fb").unwrap());
        assert_eq!(act(LoweringOp::Beta, "ta"), b.zero());
        assert_eq!(act(LoweringOp::Alpha, "ta"), b.basis("fa").unwrap());
        assert_eq!(act(LoweringOp::Alpha, "fa"), b.zero());
        // [f_alpha, f_beta] = -f_rho
        let neg = b.combine(&[(f.from_i64(-1), b.basis("fr").unwrap())]);
        assert_eq!(act(LoweringOp::Alpha, "fb"), neg);
        assert_eq!(
            b.weight_of(&act(LoweringOp::Alpha, "fb")),
            Some(b.weights()[b.index_of("fb").unwrap()] - Weight::ALPHA)
        );
    }

    #[test]
    fn dimensions_and_weights_match_characters() {
        for s in ["b", "n", "g", "g/b", "wedge^2(b)*wedge^2(b)", "sym^2(g/b + g/b)", "dual(b)*F(1,0)", "wedge^3(b)"] {
            let r = rep(s);
            assert_eq!(multiset(&r), build_rep(&RepExpr::parse(s).unwrap()).unwrap(), "{s}");
        }
        assert_eq!(rep("wedge^2(b)*wedge^2(b)").dim(), 100);
    }

    #[test]
    fn adjoint_is_a_representation() {
        // [e_-alpha, e_-beta] = -e_-rho on any construction
        for s in ["g", "wedge^2(b)*b", "sym^2(g/b)", "dual(wedge^2(b))"] {
            let r = rep(s);
            let f = Rationals;
            for i in 0..r.dim() {
                let v = r.basis_vector(i);
                let ab = r.act(LoweringOp::Alpha, &r.act(LoweringOp::Beta, &v));
                let ba = r.act(LoweringOp::Beta, &r.act(LoweringOp::Alpha, &v));
                let comm: Vec<_> = ba.iter().zip(&ab).map(|(x, y)| f.sub(x, y)).collect();
                assert_eq!(comm, r.act(LoweringOp::Rho, &v), "{s} basis {i}");
            }
        }
    }

    #[test]
    fn wedge_elements_are_alternating() {
        let l2 = rep("wedge^2(b)");
        let b = rep("b");
        let (x, y) = (b.basis("fa").unwrap(), b.basis("tb").unwrap());
        let xy = l2.power_of(&[x.clone(), y.clone()]).unwrap();
        let yx = l2.power_of(&[y, x.clone()]).unwrap();
        assert_eq!(l2.combine(&[(Rationals.one(), xy), (Rationals.one(), yx)]), l2.zero());
        assert_eq!(l2.power_of(&[x.clone(), x]).unwrap(), l2.zero());
        assert!(l2.tensor_of(&l2.zero(), &l2.zero()).is_err());
    }

    #[test]
    fn subquotients() {
        let b = rep("b");
        // n is a subrepresentation of b, the torus alone is not
        let n = b.weight_span(&[-Weight::ALPHA, -Weight::BETA, -Weight::RHO]).unwrap();
        assert_eq!(n.dim(), 3);
        assert!(matches!(b.weight_span(&[Weight::ZERO]), Err(LieError::NotInvariant(_))));
        let t = b.quotient(&[b.basis("fa").unwrap(), b.basis("fb").unwrap(), b.basis("fr").unwrap()]).unwrap();
        assert_eq!(t.dim(), 2);
        assert!(LoweringOp::ALL.iter().all(|&op| t.op_is_zero(op)));
        let gen = b.generated(&[b.basis("ta").unwrap()]).unwrap();
        assert_eq!(gen.labels(), ["fa", "fr", "ta"]);
        let co = b.coinvariants(&[LoweringOp::Beta, LoweringOp::Rho]).unwrap();
        assert_eq!(co.labels(), ["fa", "ta", "tb"]);
        let fr = n.from_ambient(&b.basis("fr").unwrap()).unwrap();
        assert_eq!(n.to_ambient(&fr).unwrap(), b.basis("fr").unwrap());
    }
}
