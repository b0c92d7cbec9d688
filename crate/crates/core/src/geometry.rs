//! Second-order geometry of a corank-1 surface jet f: (ℝ², 0) → (ℝ⁴, 0):
//! fundamental forms, curvature parabola, E_p, umbilic curvature, binormal
//! and asymptotic directions, point type.
//!
//! Floating point with absolute tolerance [`TOL`] for rank and root
//! decisions. When the adapted frame is made of coordinate axes the forms and
//! the parabola are also returned exactly.

use std::fmt;

use num::Zero;

use crate::jetalg::{parse_poly_list, JetError, Monomial, Poly, Rat, RealJet};

pub const TOL: f64 = 1e-9;

pub type V4 = [f64; 4];

pub(crate) fn dot(a: &V4, b: &V4) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &V4) -> f64 {
    dot(a, a).sqrt()
}

fn axpy(k: f64, a: &V4, b: &V4) -> V4 {
    std::array::from_fn(|i| k * a[i] + b[i])
}

fn scale(k: f64, a: &V4) -> V4 {
    a.map(|v| k * v)
}

/// Component of `v` orthogonal to the orthonormal vectors in `basis`.
pub(crate) fn reject(v: &V4, basis: &[V4]) -> V4 {
    basis.iter().fold(*v, |acc, b| axpy(-dot(&acc, b), b, &acc))
}

fn unit(i: usize) -> V4 {
    std::array::from_fn(|k| if k == i { 1.0 } else { 0.0 })
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeometryError {
    #[error("a surface needs 4 components, got {0}")]
    ComponentCount(usize),
    #[error("component {0} has a nonzero constant term")]
    NonzeroConstant(usize),
    #[error("truncation {0} is below 3")]
    TruncationTooLow(u32),
    #[error("differential at the origin has rank {0}, not 1")]
    NotCorankOne(usize),
    #[error("curvature parabola is {0}; only the nondegenerate case is supported")]
    DegenerateParabola(Degeneracy),
    #[error(transparent)]
    Jet(#[from] JetError),
}

/// Parametrization jet with a corank-1 differential at the origin.
#[derive(Clone, Debug)]
pub struct CorankOneJet {
    comps: [RealJet; 4],
    exact: Option<[Poly; 4]>,
    trunc: u32,
}

/// Area of the parallelogram on a, b from its 2x2 minors, which avoids the
/// cancellation in |a|²|b|² - <a, b>².
fn area(a: &V4, b: &V4) -> f64 {
    let mut s = 0.0;
    for i in 0..4 {
        for k in i + 1..4 {
            s += (a[i] * b[k] - a[k] * b[i]).powi(2);
        }
    }
    s.sqrt()
}

fn df_rank(fx: &V4, fy: &V4) -> usize {
    let (a, b) = (norm(fx), norm(fy));
    if a <= TOL && b <= TOL {
        return 0;
    }
    if area(fx, fy) > TOL {
        2
    } else {
        1
    }
}

impl CorankOneJet {
    /// Exact components in x, y.
    pub fn new(polys: Vec<Poly>, trunc: u32) -> Result<Self, GeometryError> {
        let polys: [Poly; 4] = polys.try_into().map_err(|v: Vec<Poly>| GeometryError::ComponentCount(v.len()))?;
        for (i, p) in polys.iter().enumerate() {
            if p.nvars() != 2 {
                return Err(JetError::VarCountMismatch { left: p.nvars(), right: 2 }.into());
            }
            if !p.constant_term().is_zero() {
                return Err(GeometryError::NonzeroConstant(i));
            }
        }
        let polys = polys.map(|p| p.truncate(trunc));
        let comps = std::array::from_fn(|i| RealJet::from_poly(&polys[i], trunc));
        // exact rank of the differential
        let col = |m: Monomial| polys.iter().map(|p| p.coeff(&m)).collect::<Vec<Rat>>();
        let (cx, cy) = (col(Monomial::new(&[1, 0])), col(Monomial::new(&[0, 1])));
        let zero_x = cx.iter().all(Zero::is_zero);
        let zero_y = cy.iter().all(Zero::is_zero);
        let rank = if zero_x && zero_y {
            0
        } else {
            let dependent = (0..4).all(|i| (0..4).all(|k| &cx[i] * &cy[k] == &cx[k] * &cy[i]));
            if dependent {
                1
            } else {
                2
            }
        };
        Self::checked(comps, Some(polys), trunc, Some(rank))
    }

    pub fn from_real(comps: [RealJet; 4]) -> Result<Self, GeometryError> {
        let trunc = comps.iter().map(RealJet::trunc).min().unwrap_or(0);
        Self::checked(comps, None, trunc, None)
    }

    fn checked(comps: [RealJet; 4], exact: Option<[Poly; 4]>, trunc: u32, rank: Option<usize>) -> Result<Self, GeometryError> {
        if trunc < 3 {
            return Err(GeometryError::TruncationTooLow(trunc));
        }
        if let Some(i) = comps.iter().position(|c| c.coeff(0, 0) != 0.0) {
            return Err(GeometryError::NonzeroConstant(i));
        }
        let j = CorankOneJet { comps, exact, trunc };
        let rank = rank.unwrap_or_else(|| {
            let (fx, fy) = j.first();
            df_rank(&fx, &fy)
        });
        if rank != 1 {
            return Err(GeometryError::NotCorankOne(rank));
        }
        Ok(j)
    }

    /// Comma-separated components in x, y.
    pub fn parse(text: &str, trunc: u32) -> Result<Self, GeometryError> {
        Self::new(parse_poly_list(text, 2)?, trunc)
    }

    pub fn components(&self) -> &[RealJet; 4] {
        &self.comps
    }

    pub fn exact(&self) -> Option<&[Poly; 4]> {
        self.exact.as_ref()
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    /// Q·f for a 4×4 matrix Q (an isometry in practice).
    pub fn map_target(&self, q: &[[f64; 4]; 4]) -> Result<Self, GeometryError> {
        let comps = std::array::from_fn(|i| {
            (0..4).fold(RealJet::zero(self.trunc), |acc, k| acc.add(&self.comps[k].scale(q[i][k])))
        });
        Self::from_real(comps)
    }

    /// f∘φ for a source change φ = (x(u,v), y(u,v)).
    pub fn map_source(&self, x: &RealJet, y: &RealJet) -> Result<Self, GeometryError> {
        Self::from_real(self.comps.clone().map(|c| c.compose(x, y)))
    }

    fn first(&self) -> (V4, V4) {
        (self.comps.clone().map(|c| c.coeff(1, 0)), self.comps.clone().map(|c| c.coeff(0, 1)))
    }
}

impl fmt::Display for CorankOneJet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(ps) => write!(f, "({}, {}, {}, {})", ps[0], ps[1], ps[2], ps[3]),
            None => write!(f, "({}, {}, {}, {})", self.comps[0], self.comps[1], self.comps[2], self.comps[3]),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Degeneracy {
    Nondegenerate,
    HalfLine,
    Line,
    Point,
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Degeneracy::Nondegenerate => "nondegenerate parabola",
            Degeneracy::HalfLine => "half-line",
            Degeneracy::Line => "line",
            Degeneracy::Point => "point",
        })
    }
}

/// Orthogonal source change (x, y) = R·(x', y') putting the kernel of df on
/// the y'-axis, unit tangent f_{x'}/|f_{x'}| and orthonormal normals, with
/// E_p = span(ν₁, ν₂) and ν₃ ⊥ E_p.
#[derive(Clone, Debug, PartialEq)]
pub struct AdaptedFrame {
    pub rotation: [[f64; 2]; 2],
    pub tangent: V4,
    pub normals: [V4; 3],
    /// E_p was picked among admissible planes (radial and point cases).
    pub ep_chosen: bool,
}

impl AdaptedFrame {
    pub fn is_identity_rotation(&self) -> bool {
        self.rotation == [[1.0, 0.0], [0.0, 1.0]]
    }

    /// Source-side jets x(x', y'), y(x', y') of the rotation.
    pub fn source_map(&self, trunc: u32) -> (RealJet, RealJet) {
        let r = &self.rotation;
        (
            RealJet::from_terms(trunc, &[(1, 0, r[0][0]), (0, 1, r[0][1])]),
            RealJet::from_terms(trunc, &[(1, 0, r[1][0]), (0, 1, r[1][1])]),
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExactForms {
    pub e: Rat,
    pub f: Rat,
    pub g: Rat,
    pub ii: [[Rat; 3]; 3],
}

#[derive(Clone, Debug, PartialEq)]
pub struct FundamentalForms {
    pub e: f64,
    pub f: f64,
    pub g: f64,
    /// Rows ν₁, ν₂, ν₃; columns (l, m, n).
    pub ii: [[f64; 3]; 3],
    pub exact: Option<ExactForms>,
}

/// η(y) = A y² + B y + C in N_pM, ambient coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureParabola {
    pub a: V4,
    pub b: V4,
    pub c: V4,
    pub degeneracy: Degeneracy,
    /// Line and half-line cases: the affine span passes through the origin.
    pub radial: Option<bool>,
    /// Exact (A, B, C) when the frame is rational and √E is rational.
    pub exact: Option<[[Rat; 4]; 3]>,
}

impl CurvatureParabola {
    pub fn eval(&self, y: f64) -> V4 {
        axpy(y * y, &self.a, &axpy(y, &self.b, &self.c))
    }

    /// η on the branch u = (−1/√E, y) of unit vectors.
    pub fn eval_negative_branch(&self, y: f64) -> V4 {
        axpy(y * y, &self.a, &axpy(-y, &self.b, &self.c))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointKind {
    Elliptic,
    Hyperbolic,
    Parabolic,
    Inflection,
}

impl fmt::Display for PointKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PointKind::Elliptic => "elliptic",
            PointKind::Hyperbolic => "hyperbolic",
            PointKind::Parabolic => "parabolic",
            PointKind::Inflection => "inflection",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Count {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(n) => write!(f, "{n}"),
            Count::Infinite => write!(f, "infinite"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointType {
    pub kind: PointKind,
    pub binormal_count: Count,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DirectionSet {
    /// Unit source directions, original coordinates; one per binormal.
    pub asymptotic: Vec<[f64; 2]>,
    /// Unit binormal directions in E_p, ambient coordinates.
    pub binormal: Vec<V4>,
    /// det II_ν as a quadratic form in the frame coordinates of ν.
    pub degenerate_cone: [[f64; 3]; 3],
    /// det II_{aν₁+bν₂} = p a² + q ab + r b².
    pub binormal_quadratic: [f64; 3],
}

/// Everything second order at the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceGeometry {
    pub frame: AdaptedFrame,
    pub forms: FundamentalForms,
    pub parabola: CurvatureParabola,
    pub directions: DirectionSet,
    pub point_type: PointType,
    pub kappa_u: Option<f64>,
    pub rank_ii: usize,
    /// Tangent cone span(tangent, A) when A ≠ 0.
    pub tangent_cone: Option<[V4; 2]>,
}

fn is_signed_axis(v: &V4) -> Option<(usize, f64)> {
    let nz: Vec<usize> = (0..4).filter(|&i| v[i] != 0.0).collect();
    (nz.len() == 1 && v[nz[0]].abs() == 1.0).then(|| (nz[0], v[nz[0]]))
}

struct Raw {
    frame: AdaptedFrame,
    e: f64,
    xx: V4,
    xy: V4,
    yy: V4,
    parabola: CurvatureParabola,
    adapted: Option<[Poly; 4]>,
}

/// Fill `basis` up to `want` orthonormal vectors, first from `seeds`, then
/// from the coordinate axes projected away from `avoid`.
fn complete(basis: &mut Vec<V4>, seeds: &[V4], avoid: &[V4], want: usize) -> bool {
    let mut chosen = false;
    for s in seeds {
        if basis.len() == want {
            return chosen;
        }
        let r = reject(&reject(s, avoid), basis);
        if norm(&r) > TOL {
            basis.push(scale(1.0 / norm(&r), &r));
        }
    }
    for i in 0..4 {
        if basis.len() == want {
            break;
        }
        let r = reject(&reject(&unit(i), avoid), basis);
        if norm(&r) > TOL {
            basis.push(scale(1.0 / norm(&r), &r));
            chosen = true;
        }
    }
    chosen
}

fn raw(j: &CorankOneJet) -> Raw {
    let (fx, fy) = j.first();
    // kernel of df
    let k = if norm(&fx) >= norm(&fy) {
        let l = dot(&fx, &fy) / dot(&fx, &fx);
        [-l, 1.0]
    } else {
        let m = dot(&fx, &fy) / dot(&fy, &fy);
        [1.0, -m]
    };
    let kn = (k[0] * k[0] + k[1] * k[1]).sqrt();
    let k = [k[0] / kn, k[1] / kn];
    let mut e1 = [k[1], -k[0]];
    let tan0: V4 = std::array::from_fn(|i| fx[i] * e1[0] + fy[i] * e1[1]);
    let big = (0..4).max_by(|&a, &b| tan0[a].abs().total_cmp(&tan0[b].abs())).unwrap();
    if tan0[big] < 0.0 {
        e1 = [-e1[0], -e1[1]];
    }
    let rotation = [[e1[0], k[0]], [e1[1], k[1]]];
    let mut frame = AdaptedFrame { rotation, tangent: [0.0; 4], normals: [[0.0; 4]; 3], ep_chosen: false };
    let (sx, sy) = frame.source_map(j.trunc);
    let g = j.comps.clone().map(|c| c.compose(&sx, &sy));
    let d = |a: u32, b: u32| -> V4 { std::array::from_fn(|i| g[i].derivative_at_origin(a, b)) };
    let gx = d(1, 0);
    let e = dot(&gx, &gx);
    let t = scale(1.0 / e.sqrt(), &gx);
    frame.tangent = t;
    let (xx, xy, yy) = (d(2, 0), d(1, 1), d(0, 2));
    let perp = |v: &V4| reject(v, &[t]);
    let a = perp(&yy);
    let b = scale(2.0 / e.sqrt(), &perp(&xy));
    let c = scale(1.0 / e, &perp(&xx));

    let (degeneracy, dir) = if area(&a, &b) > TOL {
        (Degeneracy::Nondegenerate, None)
    } else if norm(&a) <= TOL && norm(&b) <= TOL {
        (Degeneracy::Point, None)
    } else if norm(&a) <= TOL {
        (Degeneracy::Line, Some(b))
    } else {
        (Degeneracy::HalfLine, Some(a))
    };
    let radial = dir.map(|d| {
        let u = scale(1.0 / norm(&d), &d);
        norm(&reject(&c, &[u])) <= TOL
    });

    let mut ep = Vec::new();
    let chosen = match (degeneracy, radial) {
        (Degeneracy::Nondegenerate, _) => {
            let mut span = Vec::new();
            complete(&mut span, &[a, b], &[t], 2);
            // prefer axis-aligned representatives inside E_p
            let axes: Vec<V4> = (0..4).map(|i| reject(&unit(i), &[t])).map(|v| project(&v, &span)).collect();
            complete(&mut ep, &axes, &[], 2);
            false
        }
        (_, Some(false)) => {
            complete(&mut ep, &[dir.unwrap(), c], &[t], 2);
            false
        }
        _ => {
            let seeds: Vec<V4> = dir.into_iter().chain(std::iter::once(c)).collect();
            complete(&mut ep, &seeds, &[t], 2)
        }
    };
    frame.ep_chosen = chosen && degeneracy != Degeneracy::Nondegenerate;
    let mut all = ep.clone();
    complete(&mut all, &[], &[t], 3);
    frame.normals = [all[0], all[1], all[2]];

    // exact path: signed-permutation rotation and coordinate-axis frame
    let adapted = j.exact.as_ref().and_then(|ps| {
        let r = &frame.rotation;
        let flat = [r[0][0], r[0][1], r[1][0], r[1][1]];
        if !flat.iter().all(|v| *v == 0.0 || v.abs() == 1.0) {
            return None;
        }
        let lin = |a: f64, b: f64| {
            let mut p = Poly::zero(2);
            p.add_term(Monomial::new(&[1, 0]), Rat::from_integer((a as i64).into()));
            p.add_term(Monomial::new(&[0, 1]), Rat::from_integer((b as i64).into()));
            p
        };
        let subs = [lin(r[0][0], r[0][1]), lin(r[1][0], r[1][1])];
        let out: Vec<Poly> = ps.iter().map(|p| p.compose(&subs, Some(j.trunc)).ok()).collect::<Option<_>>()?;
        out.try_into().ok()
    });
    let frame_axes = std::iter::once(&frame.tangent).chain(frame.normals.iter()).all(|v| is_signed_axis(v).is_some());
    let adapted: Option<[Poly; 4]> = adapted.filter(|_| frame_axes);

    let exact_parabola = adapted.as_ref().and_then(|ps| {
        let (ti, _) = is_signed_axis(&frame.tangent)?;
        let co = |a: u32, b: u32| -> [Rat; 4] {
            std::array::from_fn(|i| {
                if i == ti {
                    Rat::zero()
                } else {
                    ps[i].coeff(&Monomial::new(&[a, b]))
                }
            })
        };
        let e_exact = ps[ti].coeff(&Monomial::new(&[1, 0])).pow(2);
        let sqrt_e = crate::rxclass::rational_root(&e_exact, 2)?;
        let two = Rat::from_integer(2.into());
        let a = co(0, 2).map(|v| v * &two);
        let b = co(1, 1).map(|v| v * &two / &sqrt_e);
        let c = co(2, 0).map(|v| v * &two / &e_exact);
        Some([a, b, c])
    });

    let parabola = CurvatureParabola { a, b, c, degeneracy, radial, exact: exact_parabola };
    Raw { frame, e, xx, xy, yy, parabola, adapted }
}

fn project(v: &V4, onto: &[V4]) -> V4 {
    onto.iter().fold([0.0; 4], |acc, b| axpy(dot(v, b), b, &acc))
}

pub fn adapted_frame(j: &CorankOneJet) -> AdaptedFrame {
    raw(j).frame
}

fn forms_of(r: &Raw) -> FundamentalForms {
    let ii = r.frame.normals.map(|nu| [dot(&r.xx, &nu), dot(&r.xy, &nu), dot(&r.yy, &nu)]);
    let exact = r.adapted.as_ref().map(|ps| {
        let axis = |v: &V4| is_signed_axis(v).unwrap();
        let (ti, ts) = axis(&r.frame.tangent);
        let fx = ps[ti].coeff(&Monomial::new(&[1, 0])) * Rat::from_integer((ts as i64).into());
        let two = Rat::from_integer(2.into());
        let ii = r.frame.normals.map(|nu| {
            let (k, s) = axis(&nu);
            let s = Rat::from_integer((s as i64).into());
            let c = |a: u32, b: u32| ps[k].coeff(&Monomial::new(&[a, b])) * &s;
            [c(2, 0) * &two, c(1, 1), c(0, 2) * &two]
        });
        ExactForms { e: fx.pow(2), f: Rat::zero(), g: Rat::zero(), ii }
    });
    FundamentalForms { e: r.e, f: 0.0, g: 0.0, ii, exact }
}

pub fn fundamental_forms(j: &CorankOneJet) -> FundamentalForms {
    forms_of(&raw(j))
}

pub fn curvature_parabola(j: &CorankOneJet) -> CurvatureParabola {
    raw(j).parabola
}

fn kappa_of(r: &Raw) -> Result<f64, GeometryError> {
    if r.parabola.degeneracy != Degeneracy::Nondegenerate {
        return Err(GeometryError::DegenerateParabola(r.parabola.degeneracy));
    }
    let nu3 = r.frame.normals[2];
    let k = dot(&r.parabola.c, &nu3);
    debug_assert!((-10..=10).all(|s| (dot(&r.parabola.eval(s as f64 / 3.0), &nu3) - k).abs() < 1e-9 * (1.0 + k.abs())));
    Ok(k.abs())
}

/// κ_u = |⟨η(y), ν₃⟩| for a nondegenerate parabola.
pub fn umbilic_curvature(j: &CorankOneJet) -> Result<f64, GeometryError> {
    kappa_of(&raw(j))
}

fn kernel_2x2(l: f64, m: f64, n: f64) -> Option<[f64; 2]> {
    let rows = [[l, m], [m, n]];
    let r = if l.hypot(m) >= m.hypot(n) { rows[0] } else { rows[1] };
    let h = r[0].hypot(r[1]);
    (h > TOL).then(|| [-r[1] / h, r[0] / h])
}

fn directions_of(r: &Raw, forms: &FundamentalForms) -> (DirectionSet, PointType) {
    let ii = &forms.ii;
    let [l1, m1, n1] = ii[0];
    let [l2, m2, n2] = ii[1];
    let p = l1 * n1 - m1 * m1;
    let q = l1 * n2 + l2 * n1 - 2.0 * m1 * m2;
    let rr = l2 * n2 - m2 * m2;
    let cone = std::array::from_fn(|i| {
        std::array::from_fn(|k| 0.5 * (ii[i][0] * ii[k][2] + ii[k][0] * ii[i][2]) - ii[i][1] * ii[k][1])
    });
    let mut set = DirectionSet { asymptotic: vec![], binormal: vec![], degenerate_cone: cone, binormal_quadratic: [p, q, rr] };
    if p.abs() <= TOL && q.abs() <= TOL && rr.abs() <= TOL {
        let pt = PointType { kind: PointKind::Inflection, binormal_count: Count::Infinite };
        return (set, pt);
    }
    let disc = q * q - 4.0 * p * rr;
    let roots: Vec<[f64; 2]> = if disc < -TOL {
        vec![]
    } else if p.abs() > TOL {
        let s = disc.max(0.0).sqrt();
        if disc <= TOL {
            vec![[-q / (2.0 * p), 1.0]]
        } else {
            vec![[(-q + s) / (2.0 * p), 1.0], [(-q - s) / (2.0 * p), 1.0]]
        }
    } else if disc <= TOL {
        vec![[1.0, 0.0]]
    } else {
        vec![[1.0, 0.0], [rr, -q]]
    };
    let [nu1, nu2, _] = r.frame.normals;
    let rot = &r.frame.rotation;
    let mut all_asymptotic = false;
    for [a, b] in &roots {
        let nu = axpy(*a, &nu1, &scale(*b, &nu2));
        let nu = scale(1.0 / norm(&nu), &nu);
        let (l, m, n) = (dot(&r.xx, &nu), dot(&r.xy, &nu), dot(&r.yy, &nu));
        match kernel_2x2(l, m, n) {
            Some(u) => set.asymptotic.push([rot[0][0] * u[0] + rot[0][1] * u[1], rot[1][0] * u[0] + rot[1][1] * u[1]]),
            // II_ν ≡ 0: every direction is asymptotic
            None => all_asymptotic = true,
        }
        set.binormal.push(nu);
    }
    if all_asymptotic {
        return (set, PointType { kind: PointKind::Inflection, binormal_count: Count::Infinite });
    }
    let kind = match roots.len() {
        0 => PointKind::Elliptic,
        1 => PointKind::Parabolic,
        _ => PointKind::Hyperbolic,
    };
    (set, PointType { kind, binormal_count: Count::Finite(roots.len()) })
}

pub fn directions_and_type(j: &CorankOneJet) -> (DirectionSet, PointType) {
    let r = raw(j);
    let forms = forms_of(&r);
    directions_of(&r, &forms)
}

fn rank_f64(rows: &[[f64; 3]; 3]) -> usize {
    let mut m = *rows;
    let mut rank = 0;
    for col in 0..3 {
        let Some(piv) = (rank..3).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs())) else { break };
        if m[piv][col].abs() <= TOL {
            continue;
        }
        m.swap(rank, piv);
        for r in 0..3 {
            if r != rank {
                let f = m[r][col] / m[rank][col];
                for c in 0..3 {
                    m[r][c] -= f * m[rank][c];
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rank_rat(rows: &[[Rat; 3]; 3]) -> usize {
    let mut s = crate::jetalg::LinearSpan::new();
    rows.iter()
        .filter(|r| s.insert(&r.iter().cloned().enumerate().filter(|(_, v)| !v.is_zero()).collect::<Vec<_>>()))
        .count()
}

fn rank_of(forms: &FundamentalForms) -> usize {
    match &forms.exact {
        Some(e) => rank_rat(&e.ii),
        None => rank_f64(&forms.ii),
    }
}

/// Rank of the II coefficient matrix and the stratum M_i.
pub fn rank_ii(j: &CorankOneJet) -> (usize, String) {
    let r = rank_of(&fundamental_forms(j));
    (r, format!("M_{r}"))
}

/// δ = ¼(4(l₁m₂−m₁n₂)(m₁n₂−n₁m₂) − (l₁n₂−n₁l₂)²), rows (l, m, n), as printed.
pub fn little_resultant(alpha: &[[f64; 3]; 2]) -> f64 {
    let [l1, m1, n1] = alpha[0];
    let [l2, m2, n2] = alpha[1];
    0.25 * (4.0 * (l1 * m2 - m1 * n2) * (m1 * n2 - n1 * m2) - (l1 * n2 - n1 * l2).powi(2))
}

pub fn little_resultant_exact(alpha: &[[Rat; 3]; 2]) -> Rat {
    let [l1, m1, n1] = &alpha[0];
    let [l2, m2, n2] = &alpha[1];
    let four = Rat::from_integer(4.into());
    let a = (l1 * m2 - m1 * n2) * (m1 * n2 - n1 * m2) * &four;
    let b = (l1 * n2 - n1 * l2).pow(2);
    (a - b) / four
}

pub fn analyze(j: &CorankOneJet) -> SurfaceGeometry {
    let r = raw(j);
    let forms = forms_of(&r);
    let (directions, point_type) = directions_of(&r, &forms);
    let kappa_u = kappa_of(&r).ok();
    let rank_ii = rank_of(&forms);
    let a = r.parabola.a;
    let tangent_cone = (norm(&a) > TOL).then(|| [r.frame.tangent, scale(1.0 / norm(&a), &a)]);
    SurfaceGeometry { frame: r.frame, forms, parabola: r.parabola, directions, point_type, kappa_u, rank_ii, tangent_cone }
}

pub fn fmt_rat_vec(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(|r| r.to_string()).collect();
    format!("({})", parts.join(", "))
}
