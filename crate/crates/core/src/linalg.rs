//! Dense linear algebra over an exact field.

use crate::field::Field;

/// Row-reduced echelon basis of a span of vectors.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    dim: usize,
    /// Reduced rows, each with a pivot that is 1 and zero in all other rows.
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, dim: usize) -> Self {
        Echelon { field, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors<'a, I>(field: F, dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a Vec<F::Elem>>,
    {
        let mut e = Echelon::new(field, dim);
        for v in vectors {
            e.insert(v.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    /// Reduces `v` against the current rows; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Adds a vector; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let f = self.field.clone();
        let mut v = self.reduce(&v);
        let Some(p) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[p]).expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for row in self.rows.iter_mut() {
            if f.is_zero(&row[p]) {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        // keep rows sorted by pivot for deterministic output
        let pos = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(pos, v);
        self.pivots.insert(pos, p);
        true
    }

    /// Coordinates of `v` in terms of the echelon rows, if `v` is in the span.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}

/// Rank of a list of equal-length vectors.
pub fn rank<F: Field>(field: &F, dim: usize, vectors: &[Vec<F::Elem>]) -> usize {
    Echelon::from_vectors(field.clone(), dim, vectors.iter()).rank()
}

/// Solves `x * A = b` where `A` is given by its rows; returns one solution if any.
pub fn solve_left<F: Field>(field: &F, rows: &[Vec<F::Elem>], b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let n = rows.len();
    let m = b.len();
    // augment each row with an identity tag to recover the combination
    let mut aug: Vec<Vec<F::Elem>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            v
        })
        .collect();
    let mut target: Vec<F::Elem> = b.to_vec();
    target.extend((0..n).map(|_| field.zero()));
    let mut pivot_rows: Vec<(usize, usize)> = Vec::new();
    let mut used = vec![false; n];
    for col in 0..m {
        let Some(r) = (0..n).find(|&r| !used[r] && !field.is_zero(&aug[r][col])) else {
            continue;
        };
        used[r] = true;
        let inv = field.inv(&aug[r][col]).unwrap();
        for x in aug[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot = aug[r].clone();
        for (k, row) in aug.iter_mut().enumerate() {
            if k != r && !field.is_zero(&row[col]) {
                let c = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = field.sub(x, &field.mul(&c, y));
                }
            }
        }
        pivot_rows.push((r, col));
    }
    for &(r, col) in &pivot_rows {
        if field.is_zero(&target[col]) {
            continue;
        }
        let c = target[col].clone();
        for (x, y) in target.iter_mut().zip(&aug[r]) {
            *x = field.sub(x, &field.mul(&c, y));
        }
    }
    if target[..m].iter().any(|x| !field.is_zero(x)) {
        return None;
    }
    // target tail now holds minus the combination
    Some(target[m..].iter().map(|x| field.neg(x)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn q(v: &[i64]) -> Vec<num_rational::BigRational> {
        v.iter().map(|&x| Rationals.from_i64(x)).collect()
    }

    #[test]
    fn rank_over_q_and_fp() {
        let rows = vec![q(&[1, 2, 3]), q(&[2, 4, 6]), q(&[0, 1, 1])];
        assert_eq!(rank(&Rationals, 3, &rows), 2);
        let f = PrimeField::new(5).unwrap();
        let rows: Vec<Vec<u64>> = vec![vec![1, 0, 0], vec![0, 5 % 5, 1], vec![1, 0, 1]];
        assert_eq!(rank(&f, 3, &rows), 2);
    }

    #[test]
    fn solve_left_finds_combination() {
        let rows = vec![q(&[1, 0, 1]), q(&[0, 1, 1])];
        let b = q(&[2, 3, 5]);
        let x = solve_left(&Rationals, &rows, &b).unwrap();
        assert_eq!(x, q(&[2, 3]));
        assert!(solve_left(&Rationals, &rows, &q(&[1, 1, 1])).is_none());
    }

    #[test]
    fn echelon_membership() {
        let e = Echelon::from_vectors(Rationals, 3, [q(&[1, 1, 0]), q(&[0, 1, 1])].iter());
        assert!(e.contains(&q(&[1, 2, 1])));
        assert!(!e.contains(&q(&[1, 0, 0])));
        assert_eq!(e.coordinates(&q(&[1, 2, 1])).unwrap().len(), 2);
    }
}
