use std::fmt;

use super::{rat_to_f64, Poly};

fn idx(i: u32, j: u32) -> usize {
    let d = (i + j) as usize;
    d * (d + 1) / 2 + j as usize
}

/// Floating-point jet in (x, y), dense up to its truncation degree.
#[derive(Clone, Debug, PartialEq)]
pub struct RealJet {
    trunc: u32,
    c: Vec<f64>,
}

impl RealJet {
    pub fn zero(trunc: u32) -> Self {
        RealJet { trunc, c: vec![0.0; idx(0, trunc + 1)] }
    }

    pub fn x(trunc: u32) -> Self {
        let mut j = Self::zero(trunc);
        j.set(1, 0, 1.0);
        j
    }

    pub fn y(trunc: u32) -> Self {
        let mut j = Self::zero(trunc);
        j.set(0, 1, 1.0);
        j
    }

    pub fn from_terms(trunc: u32, terms: &[(u32, u32, f64)]) -> Self {
        let mut j = Self::zero(trunc);
        for &(a, b, v) in terms {
            j.add_to(a, b, v);
        }
        j
    }

    /// Two-variable exact polynomial, rounded and truncated.
    pub fn from_poly(p: &Poly, trunc: u32) -> Self {
        assert_eq!(p.nvars(), 2, "RealJet needs a polynomial in x, y");
        let mut j = Self::zero(trunc);
        for (m, c) in p.terms() {
            j.add_to(m.exp(0), m.exp(1), rat_to_f64(c));
        }
        j
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn coeff(&self, i: u32, j: u32) -> f64 {
        if i + j > self.trunc {
            0.0
        } else {
            self.c[idx(i, j)]
        }
    }

    pub fn set(&mut self, i: u32, j: u32, v: f64) {
        if i + j <= self.trunc {
            self.c[idx(i, j)] = v;
        }
    }

    pub fn add_to(&mut self, i: u32, j: u32, v: f64) {
        if i + j <= self.trunc {
            self.c[idx(i, j)] += v;
        }
    }

    /// Nonzero terms (i, j, c), by degree then by descending power of x.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, f64)> + '_ {
        (0..=self.trunc).flat_map(move |d| (0..=d).map(move |j| (d - j, j))).filter_map(move |(i, j)| {
            let v = self.coeff(i, j);
            (v != 0.0).then_some((i, j, v))
        })
    }

    pub fn with_trunc(&self, trunc: u32) -> Self {
        let mut out = Self::zero(trunc);
        for (i, j, v) in self.terms() {
            out.add_to(i, j, v);
        }
        out
    }

    /// Terms of degree ≤ d, keeping the truncation.
    pub fn truncate(&self, d: u32) -> Self {
        let mut out = Self::zero(self.trunc);
        for (i, j, v) in self.terms().filter(|t| t.0 + t.1 <= d) {
            out.set(i, j, v);
        }
        out
    }

    pub fn homogeneous(&self, d: u32) -> Self {
        let mut out = Self::zero(self.trunc);
        for (i, j, v) in self.terms().filter(|t| t.0 + t.1 == d) {
            out.set(i, j, v);
        }
        out
    }

    pub fn add(&self, o: &RealJet) -> RealJet {
        let mut out = Self::zero(self.trunc.min(o.trunc));
        for (i, j, v) in self.terms().chain(o.terms()) {
            out.add_to(i, j, v);
        }
        out
    }

    pub fn sub(&self, o: &RealJet) -> RealJet {
        self.add(&o.scale(-1.0))
    }

    pub fn scale(&self, k: f64) -> RealJet {
        RealJet { trunc: self.trunc, c: self.c.iter().map(|v| v * k).collect() }
    }

    pub fn mul(&self, o: &RealJet) -> RealJet {
        let t = self.trunc.min(o.trunc);
        let mut out = Self::zero(t);
        for (i, j, a) in self.terms() {
            for (k, l, b) in o.terms() {
                out.add_to(i + k, j + l, a * b);
            }
        }
        out
    }

    /// self(x(u,v), y(u,v)). The substituted jets must vanish at the origin.
    pub fn compose(&self, x: &RealJet, y: &RealJet) -> RealJet {
        debug_assert!(x.coeff(0, 0) == 0.0 && y.coeff(0, 0) == 0.0);
        let t = self.trunc.min(x.trunc).min(y.trunc);
        let pow = |b: &RealJet| {
            let mut ps = vec![Self::from_terms(t, &[(0, 0, 1.0)])];
            for k in 1..=t as usize {
                let next = ps[k - 1].mul(b);
                ps.push(next);
            }
            ps
        };
        let (xp, yp) = (pow(x), pow(y));
        let mut out = Self::zero(t);
        for (i, j, v) in self.terms() {
            let term = xp[i as usize].mul(&yp[j as usize]).scale(v);
            out = out.add(&term);
        }
        out
    }

    pub fn partial_x(&self) -> RealJet {
        let mut out = Self::zero(self.trunc.saturating_sub(1));
        for (i, j, v) in self.terms().filter(|t| t.0 > 0) {
            out.add_to(i - 1, j, v * i as f64);
        }
        out
    }

    pub fn partial_y(&self) -> RealJet {
        let mut out = Self::zero(self.trunc.saturating_sub(1));
        for (i, j, v) in self.terms().filter(|t| t.1 > 0) {
            out.add_to(i, j - 1, v * j as f64);
        }
        out
    }

    /// ∂^{i+j} / ∂x^i ∂y^j at the origin.
    pub fn derivative_at_origin(&self, i: u32, j: u32) -> f64 {
        let fact = |n: u32| (1..=n).map(f64::from).product::<f64>();
        self.coeff(i, j) * fact(i) * fact(j)
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.terms().map(|(i, j, v)| v * x.powi(i as i32) * y.powi(j as i32)).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.c.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Largest coefficient difference over the common truncation.
    pub fn max_abs_diff(&self, o: &RealJet) -> f64 {
        let t = self.trunc.min(o.trunc);
        self.with_trunc(t).sub(&o.with_trunc(t)).max_abs()
    }

    /// Lowest degree holding a coefficient above `tol`.
    pub fn order(&self, tol: f64) -> Option<u32> {
        self.terms().find(|t| t.2.abs() > tol).map(|t| t.0 + t.1)
    }
}

impl fmt::Display for RealJet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j, v) in self.terms() {
            let mono: Vec<String> = [("x", i), ("y", j)]
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(n, e)| if *e == 1 { n.to_string() } else { format!("{n}^{e}") })
                .collect();
            let sign = if v < 0.0 { "-" } else { "+" };
            if first {
                if v < 0.0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = v.abs();
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a == 1.0 {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{a}*{}", mono.join("*"))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
