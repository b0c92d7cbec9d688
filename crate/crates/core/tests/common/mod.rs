//! Random jets, isometries and source changes shared by the property tests.
#![allow(dead_code)]

use proptest::prelude::*;
use rxsurf::jetalg::RealJet;

/// Orthonormal 4×4 matrix from four raw vectors by Gram–Schmidt.
pub fn orthonormalize(raw: [[f64; 4]; 4]) -> Option<[[f64; 4]; 4]> {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        let mut v = raw[i];
        for u in out.iter().take(i) {
            let d: f64 = (0..4).map(|k| v[k] * u[k]).sum();
            for k in 0..4 {
                v[k] -= d * u[k];
            }
        }
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n < 0.1 {
            return None;
        }
        out[i] = v.map(|x| x / n);
    }
    Some(out)
}

pub fn isometry() -> impl Strategy<Value = [[f64; 4]; 4]> {
    prop::array::uniform4(prop::array::uniform4(-1.0f64..1.0)).prop_filter_map("degenerate", orthonormalize)
}

/// (x, y) ↦ R_θ(x, y) plus small quadratic and cubic terms.
pub fn source_change(trunc: u32) -> impl Strategy<Value = (RealJet, RealJet)> {
    (0.0f64..std::f64::consts::TAU, prop::collection::vec(-0.5f64..0.5, 14)).prop_map(move |(t, h)| {
        let (s, c) = t.sin_cos();
        let mut x = RealJet::from_terms(trunc, &[(1, 0, c), (0, 1, -s)]);
        let mut y = RealJet::from_terms(trunc, &[(1, 0, s), (0, 1, c)]);
        let exps = [(2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)];
        for (k, (i, j)) in exps.iter().enumerate() {
            x.add_to(*i, *j, h[k]);
            y.add_to(*i, *j, h[k + 7]);
        }
        (x, y)
    })
}

/// (x, xy + a03 y³, Σ b xⁱyʲ, c20 x² + Σ c xⁱyʲ) with b02 > 0.
#[derive(Clone, Debug)]
pub struct Form {
    pub a03: f64,
    pub b: [f64; 7],
    pub c20: f64,
    pub c: [f64; 4],
}

pub const B_EXPS: [(u32, u32); 7] = [(2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)];
pub const C_EXPS: [(u32, u32); 4] = [(3, 0), (2, 1), (1, 2), (0, 3)];

impl Form {
    pub fn components(&self, trunc: u32) -> [RealJet; 4] {
        let mut z = RealJet::zero(trunc);
        for (v, (i, j)) in self.b.iter().zip(B_EXPS) {
            z.add_to(i, j, *v);
        }
        let mut w = RealJet::from_terms(trunc, &[(2, 0, self.c20)]);
        for (v, (i, j)) in self.c.iter().zip(C_EXPS) {
            w.add_to(i, j, *v);
        }
        [RealJet::x(trunc), RealJet::from_terms(trunc, &[(1, 1, 1.0), (0, 3, self.a03)]), z, w]
    }
}

/// Coefficients on a 1/8 grid so that zero cases actually occur.
fn coef(lo: i32, hi: i32) -> impl Strategy<Value = f64> {
    (lo..=hi).prop_map(|k| k as f64 / 8.0)
}

pub fn form() -> impl Strategy<Value = Form> {
    (coef(-16, 16), prop::array::uniform7(coef(-24, 24)), 1..=32i32, coef(-24, 24), prop::array::uniform4(coef(-24, 24)))
        .prop_map(|(a03, mut b, b02, c20, c)| {
            b[2] = b02 as f64 / 8.0;
            Form { a03, b, c20, c }
        })
}
