use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] -= k * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(src, j) * k;
            self.data[dst * self.cols + j] -= v;
        }
    }

    fn col_axpy(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, src) * k;
            self.data[i * self.cols + dst] -= v;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Nonzero invariant factors d_1 | d_2 | ... | d_r, all positive.
pub fn snf(a: &IntMatrix) -> Vec<BigInt> {
    let mut m = a.clone();
    let (rows, cols) = m.dims();
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block as pivot
        let pick = |m: &IntMatrix| {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let v = m.get(i, j);
                    if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < m.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            best
        };
        let Some((pi, pj)) = pick(&m) else { break };
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                let q = m.get(i, t).div_floor(m.get(t, t));
                m.row_axpy(i, t, &q);
                dirty |= !m.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                let q = m.get(t, j).div_floor(m.get(t, t));
                m.col_axpy(j, t, &q);
                dirty |= !m.get(t, j).is_zero();
            }
            if !dirty {
                // enforce divisibility into the rest of the block
                let p = m.get(t, t).clone();
                let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !m.get(i, j).is_multiple_of(&p)));
                match bad {
                    None => break,
                    Some(i) => {
                        m.row_axpy(t, i, &BigInt::from(-1));
                        continue;
                    }
                }
            }
            // a smaller remainder appeared in row t or column t; move it to the pivot
            let mut best = (t, t);
            for i in t..rows {
                let v = m.get(i, t);
                if !v.is_zero() && v.abs() < m.get(best.0, best.1).abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                let v = m.get(t, j);
                if !v.is_zero() && v.abs() < m.get(best.0, best.1).abs() {
                    best = (t, j);
                }
            }
            m.swap_rows(t, best.0);
            m.swap_cols(t, best.1);
        }
        out.push(m.get(t, t).abs());
    }
    out
}

/// gcd of all `k x k` minors by enumeration; only for small matrices.
pub fn gcd_of_minors(a: &IntMatrix, k: usize) -> BigInt {
    fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        if n < k {
            return Vec::new();
        }
        let mut out = combos(n - 1, k);
        for mut c in combos(n - 1, k - 1) {
            c.push(n - 1);
            out.push(c);
        }
        out
    }
    fn det(m: &[Vec<BigInt>]) -> BigInt {
        // fraction-free Bareiss elimination
        let n = m.len();
        if n == 0 {
            return BigInt::from(1);
        }
        let mut a = m.to_vec();
        let mut sign = 1;
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    None => return BigInt::zero(),
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        &a[n - 1][n - 1] * sign
    }
    let (rows, cols) = a.dims();
    let mut g = BigInt::zero();
    for rs in combos(rows, k) {
        for cs in combos(cols, k) {
            let sub: Vec<Vec<BigInt>> = rs.iter().map(|&i| cs.iter().map(|&j| a.get(i, j).clone()).collect()).collect();
            g = g.gcd(&det(&sub));
        }
    }
    g
}
