//! Buchberger's algorithm with the Gebauer–Möller criteria, normal selection
//! strategy, and optional degree truncation for homogeneous input.

use std::collections::{BTreeMap, BTreeSet};

use crate::field::Field;

use super::monomial::Monomial;
use super::poly::{Poly, PolyRing};
use super::PolyError;

/// A reduced Gröbner basis, possibly complete only up to a degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<F: Field> {
    /// Monic, sorted by ascending leading monomial.
    polys: Vec<Poly<F>>,
    bound: Option<u32>,
}

struct Reducers<'a, F: Field> {
    leads: Vec<Monomial>,
    polys: Vec<&'a Poly<F>>,
}

impl<'a, F: Field> Reducers<'a, F> {
    fn new(polys: impl IntoIterator<Item = &'a Poly<F>>) -> Self {
        let polys: Vec<&Poly<F>> = polys.into_iter().collect();
        Reducers { leads: polys.iter().map(|p| p.lead_monomial().expect("nonzero")).collect(), polys }
    }

    #[inline]
    fn find(&self, t: &Monomial) -> Option<usize> {
        self.leads.iter().position(|l| l.divides(t))
    }
}

/// Fully reduces `p` by monic reducers.
fn reduce<F: Field>(field: &F, p: &Poly<F>, reducers: &Reducers<'_, F>) -> Poly<F> {
    let mut work: BTreeMap<Monomial, F::Elem> = p.terms().iter().cloned().collect();
    let mut out: Vec<(Monomial, F::Elem)> = Vec::new();
    while let Some((t, c)) = work.pop_last() {
        match reducers.find(&t) {
            None => out.push((t, c)),
            Some(k) => {
                let g = reducers.polys[k];
                let q = reducers.leads[k].quotient_of(&t);
                for (m, d) in &g.terms()[1..] {
                    let mono = m.mul(&q);
                    let delta = field.mul(&c, d);
                    match work.get_mut(&mono) {
                        Some(x) => {
                            *x = field.sub(x, &delta);
                            if field.is_zero(x) {
                                work.remove(&mono);
                            }
                        }
                        None => {
                            work.insert(mono, field.neg(&delta));
                        }
                    }
                }
            }
        }
    }
    Poly::from_sorted_unchecked(out)
}

fn s_poly<F: Field>(ring: &PolyRing<F>, p: &Poly<F>, q: &Poly<F>) -> Poly<F> {
    let (lp, lq) = (p.lead_monomial().unwrap(), q.lead_monomial().unwrap());
    let l = lp.lcm(&lq);
    let one = ring.field().one();
    let a = ring.mul_term(p, &lp.quotient_of(&l), &one);
    let b = ring.mul_term(q, &lq.quotient_of(&l), &one);
    ring.sub(&a, &b)
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Pair {
    lcm: Monomial,
    j: usize,
    i: usize,
}

struct Buchberger<'r, F: Field> {
    ring: &'r PolyRing<F>,
    basis: Vec<Poly<F>>,
    leads: Vec<Monomial>,
    in_g: Vec<bool>,
    pairs: BTreeSet<Pair>,
}

impl<'r, F: Field> Buchberger<'r, F> {
    fn reducers(&self) -> Reducers<'_, F> {
        Reducers::new(self.basis.iter().zip(&self.in_g).filter(|(_, &a)| a).map(|(p, _)| p))
    }

    /// Gebauer–Möller update for a new monic element.
    fn update(&mut self, h: Poly<F>) {
        let t = self.basis.len();
        let lh = h.lead_monomial().unwrap();
        self.basis.push(h);
        self.leads.push(lh);
        self.in_g.push(false);

        let active: Vec<usize> = (0..t).filter(|&i| self.in_g[i]).collect();
        let lcm_of = |i: usize| self.leads[i].lcm(&lh);
        let candidates: Vec<(usize, Monomial)> = active.iter().map(|&i| (i, lcm_of(i))).collect();

        // chain criterion among the new pairs; equal lcms keep the first
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (idx, &(i, l)) in candidates.iter().enumerate() {
            let coprime = self.leads[i].coprime(&lh);
            let dominated =
                candidates.iter().enumerate().any(|(k, &(_, l2))| k != idx && l2.divides(&l) && (l2 != l || k < idx));
            if coprime || !dominated {
                kept.push((i, l));
            }
        }
        // drop equal-lcm duplicates that survived because one was coprime
        let mut seen: BTreeSet<Monomial> = BTreeSet::new();
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|&(i, l)| {
                let first = seen.insert(l);
                first && !self.leads[i].coprime(&lh)
            })
            .map(|(i, l)| Pair { lcm: l, j: t, i })
            .collect();

        // old pairs made redundant by the new lead
        let leads = &self.leads;
        self.pairs.retain(|p| !(lh.divides(&p.lcm) && leads[p.i].lcm(&lh) != p.lcm && leads[p.j].lcm(&lh) != p.lcm));
        self.pairs.extend(new_pairs);

        for &i in &active {
            if lh.divides(&self.leads[i]) {
                self.in_g[i] = false;
            }
        }
        self.in_g[t] = true;
    }

    fn add_reduced(&mut self, p: &Poly<F>) {
        let r = reduce(self.ring.field(), p, &self.reducers());
        if !r.is_zero() {
            let r = self.ring.monic(&r);
            self.update(r);
        }
    }
}

/// Degree used for selection and truncation.
fn sugar<F: Field>(p: &Poly<F>) -> u32 {
    p.degree().unwrap_or(0)
}

/// Computes a reduced Gröbner basis of the ideal generated by `gens` in
/// degrevlex order. With `bound = Some(d)` the input must be homogeneous and
/// the result is correct in all degrees up to `d`.
pub fn groebner<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Poly<F>],
    bound: Option<u32>,
) -> Result<GroebnerBasis<F>, PolyError> {
    if ring.is_integral() {
        return Err(PolyError::IntegerCoefficients);
    }
    if bound.is_some() && !gens.iter().all(|g| g.is_homogeneous()) {
        return Err(PolyError::TruncatedInhomogeneous);
    }
    let mut pending: Vec<&Poly<F>> =
        gens.iter().filter(|g| !g.is_zero() && bound.is_none_or(|d| sugar(*g) <= d)).collect();
    pending.sort_by_key(|g| sugar(*g));
    let mut pending = pending.into_iter().peekable();

    let mut bb = Buchberger { ring, basis: Vec::new(), leads: Vec::new(), in_g: Vec::new(), pairs: BTreeSet::new() };
    loop {
        let next_pair_deg = bb.pairs.first().map(|p| p.lcm.degree());
        let next_gen_deg = pending.peek().map(|g| sugar(*g));
        match (next_gen_deg, next_pair_deg) {
            (None, None) => break,
            (Some(dg), dp) if dp.is_none_or(|dp| dg <= dp) => {
                let g = pending.next().unwrap();
                bb.add_reduced(g);
            }
            _ => {
                let pair = bb.pairs.pop_first().unwrap();
                if bound.is_some_and(|d| pair.lcm.degree() > d) {
                    // everything left is above the bound
                    bb.pairs.clear();
                    continue;
                }
                let s = s_poly(ring, &bb.basis[pair.i], &bb.basis[pair.j]);
                bb.add_reduced(&s);
            }
        }
    }

    // interreduce the tails of the (already minimal) active set
    let active: Vec<&Poly<F>> = bb.basis.iter().zip(&bb.in_g).filter(|(_, &a)| a).map(|(p, _)| p).collect();
    let mut out: Vec<Poly<F>> = Vec::with_capacity(active.len());
    for (k, g) in active.iter().enumerate() {
        let others = Reducers::new(active.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| *p));
        let (lead_m, lead_c) = g.lead().unwrap().clone();
        let tail = Poly::from_sorted_unchecked(g.terms()[1..].to_vec());
        let tail = reduce(ring.field(), &tail, &others);
        out.push(ring.add(&ring.term(lead_m, lead_c), &tail));
    }
    out.sort_by_key(|p| p.lead_monomial().unwrap());
    Ok(GroebnerBasis { polys: out, bound })
}

impl<F: Field> GroebnerBasis<F> {
    pub fn polys(&self) -> &[Poly<F>] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Truncation degree, `None` when complete.
    pub fn bound(&self) -> Option<u32> {
        self.bound
    }

    pub fn is_complete(&self) -> bool {
        self.bound.is_none()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p.lead_monomial().unwrap()).collect()
    }

    /// The unit ideal.
    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(|p| p.lead_monomial() == Some(Monomial::ONE))
    }

    pub fn normal_form(&self, ring: &PolyRing<F>, p: &Poly<F>) -> Result<Poly<F>, PolyError> {
        if let (Some(d), Some(b)) = (p.degree(), self.bound) {
            if d > b {
                return Err(PolyError::DegreeExceedsBound { degree: d, bound: b });
            }
        }
        Ok(reduce(ring.field(), p, &Reducers::new(&self.polys)))
    }

    pub fn contains(&self, ring: &PolyRing<F>, p: &Poly<F>) -> Result<bool, PolyError> {
        Ok(self.normal_form(ring, p)?.is_zero())
    }
}

/// Generators together with optional Gröbner data.
#[derive(Clone, Debug)]
pub struct IdealBasis<F: Field> {
    pub gens: Vec<Poly<F>>,
    groebner: Option<GroebnerBasis<F>>,
}

impl<F: Field> IdealBasis<F> {
    pub fn new(gens: Vec<Poly<F>>) -> Self {
        IdealBasis { gens, groebner: None }
    }

    /// Computes (or reuses, when the stored bound suffices) Gröbner data.
    pub fn compute_groebner(&mut self, ring: &PolyRing<F>, bound: Option<u32>) -> Result<&GroebnerBasis<F>, PolyError> {
        let sufficient = match (&self.groebner, bound) {
            (Some(g), _) if g.bound.is_none() => true,
            (Some(g), Some(d)) => g.bound.is_some_and(|b| b >= d),
            _ => false,
        };
        if !sufficient {
            self.groebner = Some(groebner(ring, &self.gens, bound)?);
        }
        Ok(self.groebner.as_ref().unwrap())
    }

    pub fn groebner(&self) -> Option<&GroebnerBasis<F>> {
        self.groebner.as_ref()
    }
}
