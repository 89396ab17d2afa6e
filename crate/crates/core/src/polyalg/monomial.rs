use std::cmp::Ordering;
use std::fmt;

/// Largest number of variables a ring may have.
pub const MAX_VARS: usize = 32;

/// Exponent vector with cached total degree and support mask, ordered by
/// degree reverse lexicographic order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    deg: u16,
    mask: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; MAX_VARS], deg: 0, mask: 0 };

    pub fn var(i: usize) -> Monomial {
        let mut m = Monomial::ONE;
        m.exps[i] = 1;
        m.deg = 1;
        m.mask = 1 << i;
        m
    }

    /// Panics if an exponent exceeds 255 or there are too many variables.
    pub fn from_exps(exps: &[u32]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::ONE;
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u8::try_from(e).expect("exponent fits in u8");
            m.deg += e as u16;
            if e > 0 {
                m.mask |= 1 << i;
            }
        }
        m
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exps(&self, nvars: usize) -> &[u8] {
        &self.exps[..nvars]
    }

    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    /// Bit `i` is set iff variable `i` occurs.
    pub fn support(&self) -> u32 {
        self.mask
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].checked_add(o.exps[i]).expect("exponent overflow");
        }
        m.deg += o.deg;
        m.mask |= o.mask;
        m
    }

    #[inline]
    pub fn divides(&self, o: &Monomial) -> bool {
        if self.mask & !o.mask != 0 || self.deg > o.deg {
            return false;
        }
        self.exps.iter().zip(o.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self` divides `o`.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        let mut m = Monomial::ONE;
        for i in 0..MAX_VARS {
            let e = o.exps[i] - self.exps[i];
            m.exps[i] = e;
            if e > 0 {
                m.mask |= 1 << i;
            }
        }
        m.deg = o.deg - self.deg;
        m
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut m = Monomial::ONE;
        for i in 0..MAX_VARS {
            let e = self.exps[i].max(o.exps[i]);
            m.exps[i] = e;
            m.deg += e as u16;
        }
        m.mask = self.mask | o.mask;
        m
    }

    pub fn coprime(&self, o: &Monomial) -> bool {
        self.mask & o.mask == 0
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut m = Monomial::ONE;
        for _ in 0..k {
            m = m.mul(self);
        }
        m
    }
}

impl Ord for Monomial {
    /// Degree first; ties broken by the last differing variable, where the
    /// smaller exponent wins.
    fn cmp(&self, o: &Self) -> Ordering {
        match self.deg.cmp(&o.deg) {
            Ordering::Equal => {}
            c => return c,
        }
        for i in (0..MAX_VARS).rev() {
            match self.exps[i].cmp(&o.exps[i]) {
                Ordering::Equal => continue,
                c => return c.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = (0..MAX_VARS).rev().find(|&i| self.exps[i] > 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

/// All monomials of total degree `d` in `n` variables, ascending in the order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::from_exps(cur));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(n, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        return if d == 0 { vec![Monomial::ONE] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(n, 0, d, &mut vec![0; n], &mut out);
    out.sort();
    out
}
