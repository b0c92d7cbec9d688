use std::cmp::Ordering;
use std::fmt;

/// Exponent vector in 2 or 4 variables. Unused slots stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: [u32; 4],
    nvars: u8,
}

pub const VARS4: [&str; 4] = ["X", "Y", "Z", "W"];
pub const VARS2: [&str; 2] = ["x", "y"];

pub fn var_names(nvars: usize) -> &'static [&'static str] {
    if nvars == 2 {
        &VARS2
    } else {
        &VARS4
    }
}

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        assert!(exps.len() <= 4, "at most four variables");
        let mut e = [0u32; 4];
        e[..exps.len()].copy_from_slice(exps);
        Monomial { exps: e, nvars: exps.len() as u8 }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: [0; 4], nvars: nvars as u8 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn exps(&self) -> &[u32] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut e = self.exps;
        for (a, b) in e.iter_mut().zip(other.exps.iter()) {
            *a += b;
        }
        Monomial { exps: e, nvars: self.nvars }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// Lower the exponent of variable `i` by one, if possible.
    pub fn lower(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut m = *self;
        m.exps[i] -= 1;
        Some(m)
    }

    /// All monomials of total degree `d`, in no particular order.
    pub fn of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = [0u32; 4];
        fill(nvars, 0, d, &mut cur, &mut out);
        out
    }

    /// All monomials with degree in `[lo, hi]`, sorted ascending in `order`.
    pub fn in_range(nvars: usize, lo: u32, hi: u32, order: MonomialOrder) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = (lo..=hi).flat_map(|d| Self::of_degree(nvars, d)).collect();
        out.sort_by(|a, b| order.cmp(a, b));
        out
    }
}

fn fill(nvars: usize, i: usize, left: u32, cur: &mut [u32; 4], out: &mut Vec<Monomial>) {
    if i + 1 == nvars {
        cur[i] = left;
        out.push(Monomial { exps: *cur, nvars: nvars as u8 });
        cur[i] = 0;
        return;
    }
    for e in 0..=left {
        cur[i] = e;
        fill(nvars, i + 1, left - e, cur, out);
    }
    cur[i] = 0;
}

/// Number of monomials of degree exactly `d` in `n` variables.
pub fn count_of_degree(n: usize, d: u32) -> usize {
    binom(d as usize + n - 1, n - 1)
}

fn binom(n: usize, k: usize) -> usize {
    let mut r = 1usize;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let names = var_names(self.nvars());
        let mut first = true;
        for (i, &e) in self.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", names[i])?;
            } else {
                write!(f, "{}^{}", names[i], e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Degree-compatible monomial orders, variables ranked X>Y>Z>W (or x>y).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    GrLex,
    GrevLex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (da, db) = (a.degree(), b.degree());
        if da != db {
            return da.cmp(&db);
        }
        match self {
            MonomialOrder::GrLex => a.exps.cmp(&b.exps),
            MonomialOrder::GrevLex => {
                let n = a.nvars();
                for i in (0..n).rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::GrLex => "grlex",
            MonomialOrder::GrevLex => "grevlex",
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "grlex" => Ok(MonomialOrder::GrLex),
            "grevlex" => Ok(MonomialOrder::GrevLex),
            other => Err(format!("unknown monomial order `{other}`")),
        }
    }
}
