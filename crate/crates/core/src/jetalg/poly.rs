use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, One, Signed, ToPrimitive, Zero};

use super::monomial::{Monomial, MonomialOrder};
use super::{JetError, Rat};

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // fall back for huge numerators/denominators
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Sparse polynomial with exact rational coefficients in 2 or 4 variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Rat::one())
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        let mut p = Poly::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(nvars: usize, it: I) -> Self {
        let mut p = Poly::zero(nvars);
        for (m, c) in it {
            assert_eq!(m.nvars(), nvars);
            p.add_term(m, c);
        }
        p
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Terms sorted descending in `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Monomial, Rat)> {
        let mut v: Vec<(Monomial, Rat)> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Total degree, with -1 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms.keys().map(|m| m.degree() as i64).max().unwrap_or(-1)
    }

    /// Lowest degree present, with -1 for the zero polynomial.
    pub fn order(&self) -> i64 {
        self.terms.keys().map(|m| m.degree() as i64).min().unwrap_or(-1)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn truncate(&self, d: u32) -> Poly {
        self.filter(|m| m.degree() <= d)
    }

    pub fn homogeneous(&self, d: u32) -> Poly {
        self.filter(|m| m.degree() == d)
    }

    pub fn degree_range(&self, lo: u32, hi: u32) -> Poly {
        self.filter(|m| m.degree() >= lo && m.degree() <= hi)
    }

    pub fn filter<F: Fn(&Monomial) -> bool>(&self, keep: F) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect() }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, JetError> {
        check(self, other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, JetError> {
        self.try_mul_trunc(other, None)
    }

    /// Product, dropping every term of degree above `trunc`.
    pub fn try_mul_trunc(&self, other: &Poly, trunc: Option<u32>) -> Result<Poly, JetError> {
        check(self, other)?;
        let mut out = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if let Some(t) = trunc {
                    if m.degree() > t {
                        continue;
                    }
                }
                out.add_term(m, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn mul_trunc(&self, other: &Poly, trunc: u32) -> Poly {
        self.try_mul_trunc(other, Some(trunc)).expect("variable count mismatch")
    }

    pub fn pow_trunc(&self, e: u32, trunc: Option<u32>) -> Poly {
        let mut acc = Poly::one(self.nvars).truncate(trunc.unwrap_or(u32::MAX));
        for _ in 0..e {
            acc = acc.try_mul_trunc(self, trunc).expect("same ring");
        }
        acc
    }

    pub fn partial(&self, i: usize) -> Result<Poly, JetError> {
        if i >= self.nvars {
            return Err(JetError::IndexOutOfRange { index: i, nvars: self.nvars });
        }
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            out.add_term(m.lower(i).unwrap(), c * int(e as i64));
        }
        Ok(out)
    }

    /// Substitute `subs[i]` for variable `i`. With a finite truncation every
    /// substituted component must vanish at the origin.
    pub fn compose(&self, subs: &[Poly], trunc: Option<u32>) -> Result<Poly, JetError> {
        if subs.len() != self.nvars {
            return Err(JetError::VarCountMismatch { left: self.nvars, right: subs.len() });
        }
        let target = subs.first().map(|p| p.nvars).unwrap_or(self.nvars);
        for s in subs {
            if s.nvars != target {
                return Err(JetError::VarCountMismatch { left: target, right: s.nvars });
            }
            if trunc.is_some() && !s.constant_term().is_zero() {
                return Err(JetError::NonzeroConstant);
            }
        }
        let maxdeg = self.degree().max(0) as u32;
        // cache powers of each substituted component
        let mut powers: Vec<Vec<Poly>> = Vec::with_capacity(subs.len());
        for (i, s) in subs.iter().enumerate() {
            let top = self.terms.keys().map(|m| m.exp(i)).max().unwrap_or(0).min(maxdeg);
            let mut v = vec![Poly::one(target)];
            for k in 1..=top {
                let next = v[k as usize - 1].try_mul_trunc(s, trunc)?;
                v.push(next);
            }
            powers.push(v);
        }
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut acc = Poly::constant(target, c.clone());
            for (i, pw) in powers.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e > 0 {
                    acc = acc.try_mul_trunc(&pw[e], trunc)?;
                }
                if acc.is_zero() {
                    break;
                }
            }
            for (k, v) in acc.terms {
                out.add_term(k, v);
            }
        }
        Ok(out)
    }

    pub fn eval_f64(&self, pt: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut v = rat_to_f64(c);
                for (i, &e) in m.exps().iter().enumerate() {
                    v *= pt[i].powi(e as i32);
                }
                v
            })
            .sum()
    }

    pub fn eval(&self, pt: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    v *= &pt[i];
                }
            }
            acc += v;
        }
        acc
    }

    /// Coefficients as floats, for the numeric geometry layers.
    pub fn to_f64_terms(&self) -> Vec<(Monomial, f64)> {
        self.terms.iter().map(|(m, c)| (*m, rat_to_f64(c))).collect()
    }

    pub fn fmt_with(&self, order: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.degree() == 0 {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&m.to_string());
            } else {
                s.push_str(&format!("{}*{}", a, m));
            }
        }
        s
    }
}

fn check(a: &Poly, b: &Poly) -> Result<(), JetError> {
    if a.nvars != b.nvars {
        Err(JetError::VarCountMismatch { left: a.nvars, right: b.nvars })
    } else {
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(MonomialOrder::GrLex))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.nvars, self)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("variable count mismatch")
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_add(&-rhs).expect("variable count mismatch")
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("variable count mismatch")
    }
}

impl<'a> Neg for &'a Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Polynomial kept modulo terms of degree above `trunc`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Jet {
    poly: Poly,
    trunc: u32,
}

impl Jet {
    pub fn new(poly: Poly, trunc: u32) -> Self {
        Jet { poly: poly.truncate(trunc), trunc }
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn truncation(&self) -> u32 {
        self.trunc
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn mul(&self, other: &Jet) -> Jet {
        let t = self.trunc.min(other.trunc);
        Jet { poly: self.poly.mul_trunc(&other.poly, t), trunc: t }
    }

    pub fn add(&self, other: &Jet) -> Jet {
        let t = self.trunc.min(other.trunc);
        Jet::new(&self.poly + &other.poly, t)
    }
}

/// Jet-level composition `g(subs)`, truncated at `trunc`.
pub fn poly_compose(g: &Poly, subs: &[Poly], trunc: Option<u32>) -> Result<Poly, JetError> {
    g.compose(subs, trunc)
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Result<Poly, JetError> {
    a.try_mul(b)
}

pub fn partial(g: &Poly, i: usize) -> Result<Poly, JetError> {
    g.partial(i)
}
