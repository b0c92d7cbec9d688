//! I₁ recognition and reduction of a pre-normal form
//! (x, xy + a₀₃y³, Σb_ij xⁱyʲ, c₂₀x² + Σc_ij xⁱyʲ) + o(4)
//! to the generic normal form by a rotation in the Y–W plane and source
//! changes, with a replayable trace.

use std::fmt;

use num::{FromPrimitive, Signed, Zero};

use crate::geometry::{analyze, dot, norm, reject, CorankOneJet, Degeneracy, GeometryError, TOL, V4};
use crate::heights::BCoeffs;
use crate::jetalg::{rat_to_f64, Monomial, Poly, Rat, RealJet};
use crate::rxclass::rational_root;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NormalFormError {
    #[error("b02 must be positive")]
    NonPositiveB02,
    #[error("c03 = 0: not an I1 jet")]
    ZeroC03,
    #[error("not I1: {0}")]
    NotI1(String),
    #[error("jet is not in pre-normal shape: {0}")]
    Shape(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

fn mono(i: u32, j: u32) -> Monomial {
    Monomial::new(&[i, j])
}

fn tail(p: &Poly) -> Poly {
    p.filter(|m| m.degree() >= 4)
}

/// (x, xy + a₀₃y³, Σ_{i+j=2,3} b_ij xⁱyʲ, c₂₀x² + Σ_{i+j=3} c_ij xⁱyʲ) + remainder.
#[derive(Clone, Debug, PartialEq)]
pub struct PreNormalForm {
    pub a03: Rat,
    pub b20: Rat,
    pub b11: Rat,
    pub b02: Rat,
    pub b30: Rat,
    pub b21: Rat,
    pub b12: Rat,
    pub b03: Rat,
    pub c20: Rat,
    pub c30: Rat,
    pub c21: Rat,
    pub c12: Rat,
    pub c03: Rat,
    /// Terms of degree ≥ 4, per coordinate.
    pub remainder: [Poly; 4],
    pub trunc: u32,
}

impl PreNormalForm {
    pub fn polys(&self) -> [Poly; 4] {
        let t = |c: &Rat, i, j| Poly::term(mono(i, j), c.clone());
        let one = Rat::from_integer(1.into());
        let p = [
            t(&one, 1, 0),
            &t(&one, 1, 1) + &t(&self.a03, 0, 3),
            [(&self.b20, 2, 0), (&self.b11, 1, 1), (&self.b02, 0, 2), (&self.b30, 3, 0), (&self.b21, 2, 1), (&self.b12, 1, 2), (&self.b03, 0, 3)]
                .iter()
                .fold(Poly::zero(2), |acc, (c, i, j)| &acc + &t(c, *i, *j)),
            [(&self.c20, 2, 0), (&self.c30, 3, 0), (&self.c21, 2, 1), (&self.c12, 1, 2), (&self.c03, 0, 3)]
                .iter()
                .fold(Poly::zero(2), |acc, (c, i, j)| &acc + &t(c, *i, *j)),
        ];
        std::array::from_fn(|i| (&p[i] + &self.remainder[i]).truncate(self.trunc))
    }

    /// Read the coefficients off components already in pre-normal shape.
    pub fn from_polys(ps: &[Poly; 4], trunc: u32) -> Result<Self, NormalFormError> {
        let c = |k: usize, i, j| ps[k].coeff(&mono(i, j));
        let low = |k: usize, allowed: &[(u32, u32)]| -> Result<(), NormalFormError> {
            for (m, _) in ps[k].terms() {
                let e = (m.exp(0), m.exp(1));
                if m.degree() <= 3 && !allowed.contains(&e) {
                    return Err(NormalFormError::Shape(format!("coordinate {} has a term x^{}*y^{}", k + 1, e.0, e.1)));
                }
            }
            Ok(())
        };
        let one = Rat::from_integer(1.into());
        if c(0, 1, 0) != one || c(1, 1, 1) != one {
            return Err(NormalFormError::Shape("first two coordinates must start x, x*y".into()));
        }
        low(0, &[(1, 0)])?;
        low(1, &[(1, 1), (0, 3)])?;
        low(2, &[(2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)])?;
        low(3, &[(2, 0), (3, 0), (2, 1), (1, 2), (0, 3)])?;
        let p = PreNormalForm {
            a03: c(1, 0, 3),
            b20: c(2, 2, 0),
            b11: c(2, 1, 1),
            b02: c(2, 0, 2),
            b30: c(2, 3, 0),
            b21: c(2, 2, 1),
            b12: c(2, 1, 2),
            b03: c(2, 0, 3),
            c20: c(3, 2, 0),
            c30: c(3, 3, 0),
            c21: c(3, 2, 1),
            c12: c(3, 1, 2),
            c03: c(3, 0, 3),
            remainder: std::array::from_fn(|k| tail(&ps[k]).truncate(trunc)),
            trunc,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), NormalFormError> {
        if !self.b02.is_positive() {
            return Err(NormalFormError::NonPositiveB02);
        }
        if self.c03.is_zero() {
            return Err(NormalFormError::ZeroC03);
        }
        Ok(())
    }

    pub fn jet(&self) -> Result<CorankOneJet, NormalFormError> {
        Ok(CorankOneJet::new(self.polys().to_vec(), self.trunc)?)
    }
}

/// (x, xy + h, Σb_ij xⁱyʲ, c₂₀x² + c₁₁xy + Σc_ij xⁱyʲ) + o(4).
///
/// c₁₁ = tan θ = a₀₃/c₀₃ is what the rotation leaves in the fourth
/// coordinate; it vanishes exactly when no rotation was needed.
#[derive(Clone, Debug, PartialEq)]
pub struct GenericNormalForm {
    pub b: BCoeffs,
    pub c20: f64,
    pub c11: f64,
    pub c30: f64,
    pub c21: f64,
    pub c12: f64,
    pub c03: f64,
    /// Degree ≥ 4 part of the second coordinate.
    pub h: RealJet,
    /// Degree ≥ 4 parts of all coordinates (the second repeats `h`).
    pub o4: [RealJet; 4],
    pub components: [RealJet; 4],
    pub exact: Option<[Poly; 4]>,
}

impl GenericNormalForm {
    fn from_components(components: [RealJet; 4], exact: Option<[Poly; 4]>) -> Self {
        let (z, w) = (&components[2], &components[3]);
        let t = components[0].trunc();
        let o4: [RealJet; 4] = std::array::from_fn(|k| components[k].sub(&components[k].truncate(3)).with_trunc(t));
        GenericNormalForm {
            b: BCoeffs {
                b20: z.coeff(2, 0),
                b11: z.coeff(1, 1),
                b02: z.coeff(0, 2),
                b30: z.coeff(3, 0),
                b21: z.coeff(2, 1),
                b12: z.coeff(1, 2),
                b03: z.coeff(0, 3),
            },
            c20: w.coeff(2, 0),
            c11: w.coeff(1, 1),
            c30: w.coeff(3, 0),
            c21: w.coeff(2, 1),
            c12: w.coeff(1, 2),
            c03: w.coeff(0, 3),
            h: o4[1].clone(),
            o4,
            components,
            exact,
        }
    }

    /// y³ coefficient of the second coordinate.
    pub fn second_y3(&self) -> f64 {
        self.components[1].coeff(0, 3)
    }

    pub fn jet(&self) -> Result<CorankOneJet, NormalFormError> {
        Ok(match &self.exact {
            Some(ps) => CorankOneJet::new(ps.to_vec(), self.components[0].trunc())?,
            None => CorankOneJet::from_real(self.components.clone())?,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum TransformStep {
    /// f ↦ M·f.
    TargetIsometry { name: String, matrix: [[f64; 4]; 4], exact: Option<[[Rat; 4]; 4]> },
    /// f ↦ f(x(u, v), y(u, v)).
    SourceChange { name: String, x: RealJet, y: RealJet, exact: Option<[Poly; 2]> },
}

impl fmt::Display for TransformStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransformStep::TargetIsometry { name, matrix, .. } => {
                let rows: Vec<String> = matrix
                    .iter()
                    .map(|r| format!("[{}]", r.iter().map(|v| format!("{v:.6}")).collect::<Vec<_>>().join(", ")))
                    .collect();
                write!(f, "target isometry ({name}): {}", rows.join(" "))
            }
            TransformStep::SourceChange { name, x, y, exact } => match exact {
                Some([ex, ey]) => write!(f, "source change ({name}): x -> {ex}, y -> {ey}"),
                None => write!(f, "source change ({name}): x -> {x}, y -> {y}"),
            },
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct TransformTrace {
    pub steps: Vec<TransformStep>,
}

fn apply_matrix(m: &[[f64; 4]; 4], f: &[RealJet; 4]) -> [RealJet; 4] {
    std::array::from_fn(|i| (0..4).fold(RealJet::zero(f[0].trunc()), |acc, k| acc.add(&f[k].scale(m[i][k]))))
}

fn apply_matrix_exact(m: &[[Rat; 4]; 4], f: &[Poly; 4]) -> [Poly; 4] {
    std::array::from_fn(|i| (0..4).fold(Poly::zero(2), |acc, k| &acc + &f[k].scale(&m[i][k])))
}

impl TransformTrace {
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn then(mut self, other: TransformTrace) -> TransformTrace {
        self.steps.extend(other.steps);
        self
    }

    pub fn replay(&self, input: &[RealJet; 4]) -> [RealJet; 4] {
        self.steps.iter().fold(input.clone(), |f, s| match s {
            TransformStep::TargetIsometry { matrix, .. } => apply_matrix(matrix, &f),
            TransformStep::SourceChange { x, y, .. } => f.map(|c| c.compose(x, y)),
        })
    }

    /// Exact replay, when every step is rational.
    pub fn replay_exact(&self, input: &[Poly; 4], trunc: u32) -> Option<[Poly; 4]> {
        let mut f = input.clone();
        for s in &self.steps {
            f = match s {
                TransformStep::TargetIsometry { exact: Some(m), .. } => apply_matrix_exact(m, &f),
                TransformStep::SourceChange { exact: Some(sub), .. } => {
                    let out: Vec<Poly> = f.iter().map(|c| c.compose(sub, Some(trunc)).ok()).collect::<Option<_>>()?;
                    out.try_into().ok()?
                }
                _ => return None,
            };
        }
        Some(f)
    }

    pub fn is_exact(&self) -> bool {
        self.steps.iter().all(|s| match s {
            TransformStep::TargetIsometry { exact, .. } => exact.is_some(),
            TransformStep::SourceChange { exact, .. } => exact.is_some(),
        })
    }
}

fn f64r(r: &Rat) -> f64 {
    rat_to_f64(r)
}

fn rot_matrix(s: f64, c: f64) -> [[f64; 4]; 4] {
    [[1.0, 0.0, 0.0, 0.0], [0.0, c, 0.0, -s], [0.0, 0.0, 1.0, 0.0], [0.0, s, 0.0, c]]
}

/// Remove a₀₃y³ from the second coordinate: rotation T with
/// (sin θ, cos θ) = (a₀₃, c₀₃)/√(a₀₃² + c₀₃²), the source change
/// y' = y − tan θ (c₂₀x + c₃₀x² + c₂₁xy + c₁₂y²) (so that the second
/// coordinate becomes cos θ·x y'), then (x, y) ↦ (x, y/cos θ).
pub fn reduce_to_generic(p: &PreNormalForm) -> Result<(GenericNormalForm, TransformTrace), NormalFormError> {
    p.validate()?;
    let n = p.trunc;
    let input = p.polys();
    let real_in = input.clone().map(|q| RealJet::from_poly(&q, n));
    if p.a03.is_zero() {
        return Ok((GenericNormalForm::from_components(real_in, Some(input)), TransformTrace::default()));
    }
    let r2 = &p.a03 * &p.a03 + &p.c03 * &p.c03;
    let root = rational_root(&r2, 2);
    let (s, c) = match &root {
        Some(r) => (f64r(&(&p.a03 / r)), f64r(&(&p.c03 / r))),
        None => {
            let r = f64r(&r2).sqrt();
            (f64r(&p.a03) / r, f64r(&p.c03) / r)
        }
    };
    let tan_exact = &p.a03 / &p.c03;
    let mut trace = TransformTrace::default();

    let exact_t = root.as_ref().map(|r| {
        let (s, c) = (&p.a03 / r, &p.c03 / r);
        let z = Rat::zero;
        let o = || Rat::from_integer(1.into());
        [[o(), z(), z(), z()], [z(), c.clone(), z(), -s.clone()], [z(), z(), o(), z()], [z(), s, z(), c]]
    });
    trace.steps.push(TransformStep::TargetIsometry { name: "T, rotation in the Y-W plane".into(), matrix: rot_matrix(s, c), exact: exact_t });

    // y = Y + tan θ · q(x, y), solved by iteration
    let q_exact = [(&p.c20, 1, 0), (&p.c30, 2, 0), (&p.c21, 1, 1), (&p.c12, 0, 2)]
        .iter()
        .fold(Poly::zero(2), |acc, (k, i, j)| &acc + &Poly::term(mono(*i, *j), (*k).clone()));
    let xe = Poly::term(mono(1, 0), Rat::from_integer(1.into()));
    let ye = Poly::term(mono(0, 1), Rat::from_integer(1.into()));
    let mut ys = ye.clone();
    for _ in 0..=n {
        let qv = q_exact.compose(&[xe.clone(), ys.clone()], Some(n)).expect("substitution vanishes at 0");
        ys = &ye + &qv.scale(&tan_exact);
    }
    trace.steps.push(TransformStep::SourceChange {
        name: "y' = y - tan(theta)*(c20*x + c30*x^2 + c21*x*y + c12*y^2)".into(),
        x: RealJet::x(n),
        y: RealJet::from_poly(&ys, n),
        exact: Some([xe.clone(), ys]),
    });

    let inv_cos_exact = root.as_ref().map(|r| r / &p.c03);
    let inv_cos = 1.0 / c;
    trace.steps.push(TransformStep::SourceChange {
        name: "(x, y) -> (x, y/cos(theta))".into(),
        x: RealJet::x(n),
        y: RealJet::from_terms(n, &[(0, 1, inv_cos)]),
        exact: inv_cos_exact.map(|k| [xe.clone(), ye.scale(&k)]),
    });

    let mut real = trace.steps[..1].iter().fold(real_in.clone(), |f, st| match st {
        TransformStep::TargetIsometry { matrix, .. } => apply_matrix(matrix, &f),
        _ => unreachable!(),
    });
    // cos θ a₀₃ − sin θ c₀₃ = 0; drop the rounding residue
    real[1].set(0, 3, 0.0);
    let real = TransformTrace { steps: trace.steps[1..].to_vec() }.replay(&real);
    let exact = trace.replay_exact(&input, n);
    let components = match &exact {
        Some(ps) => ps.clone().map(|q| RealJet::from_poly(&q, n)),
        None => real,
    };
    Ok((GenericNormalForm::from_components(components, exact), trace))
}

#[derive(Clone, Debug, PartialEq)]
pub struct DerivedQuantities {
    /// Orthonormal basis of E_p.
    pub ep: [V4; 2],
    pub ep_is_yz_plane: bool,
    /// Tangent cone, always the XZ-plane.
    pub cone: [V4; 2],
    /// 2|c₂₀|/√(1 + c₁₁²), which is 2|c₂₀| when c₁₁ = 0.
    pub kappa_u: f64,
}

pub fn derived_quantities(g: &GenericNormalForm) -> DerivedQuantities {
    let k = (1.0 + g.c11 * g.c11).sqrt();
    DerivedQuantities {
        ep: [[0.0, 1.0 / k, 0.0, g.c11 / k], [0.0, 0.0, 1.0, 0.0]],
        ep_is_yz_plane: g.c11 == 0.0,
        cone: [[1.0, 0.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0]],
        kappa_u: 2.0 * g.c20.abs() / k,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct I1Diagnosis {
    pub is_i1: bool,
    pub reason: String,
    /// y³ coefficient of ⟨f, ν₃⟩ in the adapted source coordinates.
    pub c03: Option<f64>,
}

/// Corank 1 (by construction of the input), nondegenerate curvature parabola
/// and c₀₃ ≠ 0.
pub fn is_i1(j: &CorankOneJet) -> I1Diagnosis {
    let geo = analyze(j);
    if geo.parabola.degeneracy != Degeneracy::Nondegenerate {
        return I1Diagnosis { is_i1: false, reason: format!("curvature parabola is a {}", geo.parabola.degeneracy), c03: None };
    }
    let (sx, sy) = geo.frame.source_map(j.trunc());
    let nu3 = geo.frame.normals[2];
    let w = (0..4).fold(RealJet::zero(j.trunc()), |acc, i| acc.add(&j.components()[i].compose(&sx, &sy).scale(nu3[i])));
    let c03 = w.coeff(0, 3);
    if c03.abs() <= TOL {
        I1Diagnosis { is_i1: false, reason: "c03 = 0 along E_p^perp: I_k with k >= 2 or worse".into(), c03: Some(c03) }
    } else {
        I1Diagnosis { is_i1: true, reason: "corank 1, nondegenerate parabola, c03 != 0".into(), c03: Some(c03) }
    }
}

fn check_i1(j: &CorankOneJet) -> Result<(), NormalFormError> {
    let d = is_i1(j);
    if d.is_i1 {
        Ok(())
    } else {
        Err(NormalFormError::NotI1(d.reason))
    }
}

/// Best-effort floating-point reduction of an I₁ jet to pre-normal shape:
/// adapted rotation, target frame (T_pM, ν₁, A/|A|, ν₃), straightening of
/// the first coordinate, removal of the x-divisible terms of the second
/// coordinate and rescaling of y.
pub fn pre_normalize(j: &CorankOneJet) -> Result<(PreNormalForm, TransformTrace), NormalFormError> {
    check_i1(j)?;
    let n = j.trunc().max(4);
    let geo = analyze(j);
    let mut trace = TransformTrace::default();
    let (sx, sy) = geo.frame.source_map(n);
    trace.steps.push(TransformStep::SourceChange { name: "adapted rotation".into(), x: sx, y: sy, exact: None });

    let t = geo.frame.tangent;
    let a = geo.parabola.a;
    let z = a.map(|v| v / norm(&a));
    let by = reject(&geo.parabola.b, &[t, z]);
    let y = by.map(|v| v / norm(&by));
    let mut w = geo.frame.normals[2];
    let comps0 = trace.replay(&j.components().clone().map(|c| c.with_trunc(n)));
    let w_c03 = (0..4).map(|i| comps0[i].coeff(0, 3) * w[i]).sum::<f64>();
    if w_c03 < 0.0 {
        w = w.map(|v| -v);
    }
    debug_assert!(dot(&w, &z).abs() < 1e-9 && dot(&w, &y).abs() < 1e-9);
    trace.steps.push(TransformStep::TargetIsometry { name: "adapted target frame".into(), matrix: [t, y, z, w], exact: None });
    let mut f = trace.replay(&j.components().clone().map(|c| c.with_trunc(n)));

    // first coordinate = x
    let e = f[0].coeff(1, 0);
    let rest = f[0].sub(&RealJet::from_terms(n, &[(1, 0, e)]));
    let yv = RealJet::y(n);
    let mut psi = RealJet::from_terms(n, &[(1, 0, 1.0 / e)]);
    for _ in 0..=n {
        psi = RealJet::x(n).sub(&rest.compose(&psi, &yv)).scale(1.0 / e);
    }
    let step = TransformStep::SourceChange { name: "straighten first coordinate".into(), x: psi.clone(), y: yv.clone(), exact: None };
    f = f.map(|c| c.compose(&psi, &yv));
    trace.steps.push(step);

    // second coordinate = m x y + a y³ + o(4)
    for _ in 0..6 {
        let m = f[1].coeff(1, 1);
        let mut q = RealJet::zero(n);
        let mut worst: f64 = 0.0;
        for (i, k, v) in f[1].truncate(3).terms() {
            if i >= 1 && (i, k) != (1, 1) {
                q.add_to(i - 1, k, v / m);
                worst = worst.max(v.abs());
            }
        }
        if worst < 1e-15 {
            break;
        }
        let ny = yv.sub(&q);
        f = f.map(|c| c.compose(&RealJet::x(n), &ny));
        trace.steps.push(TransformStep::SourceChange {
            name: "clear x-divisible terms of the second coordinate".into(),
            x: RealJet::x(n),
            y: ny,
            exact: None,
        });
    }
    let m = f[1].coeff(1, 1);
    let ny = RealJet::from_terms(n, &[(0, 1, 1.0 / m)]);
    f = f.map(|c| c.compose(&RealJet::x(n), &ny));
    trace.steps.push(TransformStep::SourceChange { name: "rescale y".into(), x: RealJet::x(n), y: ny, exact: None });

    let r = |v: f64| Rat::from_f64(v).unwrap_or_else(Rat::zero);
    let to_poly = |jet: &RealJet, keep: &dyn Fn(u32, u32) -> bool| {
        jet.terms().filter(|(i, k, _)| keep(*i, *k)).fold(Poly::zero(2), |acc, (i, k, v)| &acc + &Poly::term(mono(i, k), r(v)))
    };
    let deg4 = |i: u32, k: u32| i + k >= 4;
    let pre = PreNormalForm {
        a03: r(f[1].coeff(0, 3)),
        b20: r(f[2].coeff(2, 0)),
        b11: r(f[2].coeff(1, 1)),
        b02: r(f[2].coeff(0, 2)),
        b30: r(f[2].coeff(3, 0)),
        b21: r(f[2].coeff(2, 1)),
        b12: r(f[2].coeff(1, 2)),
        b03: r(f[2].coeff(0, 3)),
        c20: r(f[3].coeff(2, 0)),
        c30: r(f[3].coeff(3, 0)),
        c21: r(f[3].coeff(2, 1)),
        c12: r(f[3].coeff(1, 2)),
        c03: r(f[3].coeff(0, 3)),
        remainder: std::array::from_fn(|k| to_poly(&f[k], &deg4)),
        trunc: n,
    };
    pre.validate()?;
    Ok((pre, trace))
}
