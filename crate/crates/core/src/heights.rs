//! Height functions h_v = ⟨f, v⟩ of a corank-1 jet: A_k recognition,
//! binormal and torsion certificates, contact reports and direction scans.

use std::collections::BTreeMap;
use std::fmt;

use crate::exec::Exec;
use crate::geometry::{analyze, dot, norm, CorankOneJet, SurfaceGeometry, TOL, V4};
use crate::jetalg::RealJet;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HeightError {
    #[error("direction must be nonzero")]
    ZeroDirection,
    #[error("truncation {0} is too low for a height germ")]
    TruncationTooLow(u32),
    #[error("undecided within truncation: {0}")]
    Undecided(String),
    #[error("direction outside the (0, v2, v3, 0) family with v3 != 0")]
    OutsideFamily,
    #[error("torsion expression needs b02 > 0 and b20 >= 0")]
    BadCoefficients,
}

/// Unit vector of ℝ⁴.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Direction4([f64; 4]);

impl Direction4 {
    pub fn new(v: [f64; 4]) -> Result<Self, HeightError> {
        let n = norm(&v);
        if n <= TOL {
            return Err(HeightError::ZeroDirection);
        }
        Ok(Direction4(v.map(|c| c / n)))
    }

    pub fn as_array(&self) -> &[f64; 4] {
        &self.0
    }
}

impl fmt::Display for Direction4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.0;
        write!(f, "({:.6}, {:.6}, {:.6}, {:.6})", v[0], v[1], v[2], v[3])
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HeightGerm {
    pub h: RealJet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingularityType {
    Regular,
    /// Definite Morse: ±(x² + y²).
    A1Plus,
    /// Saddle: x² − y².
    A1Minus,
    A2,
    A3,
    /// Corank 2, or A_k with k ≥ 4 within the truncation.
    DegenerateBeyond,
}

impl SingularityType {
    pub fn is_a1(&self) -> bool {
        matches!(self, SingularityType::A1Plus | SingularityType::A1Minus)
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SingularityType::Regular => "Regular",
            SingularityType::A1Plus => "A1+",
            SingularityType::A1Minus => "A1-",
            SingularityType::A2 => "A2",
            SingularityType::A3 => "A3",
            SingularityType::DegenerateBeyond => "DegenerateBeyond",
        })
    }
}

/// Σ vᵢ fᵢ, without normalizing v.
fn combine(j: &CorankOneJet, v: &[f64; 4]) -> RealJet {
    let c = j.components();
    (0..4).fold(RealJet::zero(j.trunc()), |acc, i| acc.add(&c[i].scale(v[i])))
}

pub fn height_germ(j: &CorankOneJet, v: &Direction4) -> HeightGerm {
    HeightGerm { h: combine(j, &v.0) }
}

/// Regular, Morse with signature, or corank 1 decided by the order of the
/// splitting-lemma residual: 3 gives A2, 4 gives A3, higher is beyond scope.
pub fn recognize_ak(g: &HeightGerm) -> Result<SingularityType, HeightError> {
    let h = &g.h;
    let n = h.trunc();
    if n < 2 {
        return Err(HeightError::TruncationTooLow(n));
    }
    if h.coeff(1, 0).hypot(h.coeff(0, 1)) > TOL {
        return Ok(SingularityType::Regular);
    }
    let (a, b, d) = (2.0 * h.coeff(2, 0), h.coeff(1, 1), 2.0 * h.coeff(0, 2));
    let mean = 0.5 * (a + d);
    let rad = (0.5 * (a - d)).hypot(b);
    let (l1, l2) = (mean + rad, mean - rad);
    let big = if l1.abs() >= l2.abs() { l1 } else { l2 };
    let small = if l1.abs() >= l2.abs() { l2 } else { l1 };
    if big.abs() <= TOL {
        return Ok(SingularityType::DegenerateBeyond);
    }
    if small.abs() > TOL {
        return Ok(if a * d - b * b > 0.0 { SingularityType::A1Plus } else { SingularityType::A1Minus });
    }
    // eigenvector of the nonzero eigenvalue, kernel orthogonal to it
    let e = if (big - a).hypot(b) >= (big - d).hypot(b) { [b, big - a] } else { [big - d, b] };
    let en = e[0].hypot(e[1]);
    let e = [e[0] / en, e[1] / en];
    let k = [-e[1], e[0]];
    let sx = RealJet::from_terms(n, &[(1, 0, e[0]), (0, 1, k[0])]);
    let sy = RealJet::from_terms(n, &[(1, 0, e[1]), (0, 1, k[1])]);
    let mut ht = h.compose(&sx, &sy);
    ht.set(1, 1, 0.0);
    ht.set(0, 2, 0.0);
    let c = ht.coeff(2, 0);
    // X = φ(Y) solving ∂h/∂X = 0
    let hx = ht.partial_x().with_trunc(n);
    let yv = RealJet::y(n);
    let mut phi = RealJet::zero(n);
    for _ in 0..=n {
        let rest = hx.compose(&phi, &yv).sub(&phi.scale(2.0 * c));
        phi = rest.scale(-1.0 / (2.0 * c));
    }
    let r = ht.compose(&phi, &yv);
    match r.order(TOL) {
        Some(3) => Ok(SingularityType::A2),
        Some(4) => Ok(SingularityType::A3),
        Some(_) => Ok(SingularityType::DegenerateBeyond),
        None if n >= 4 => Ok(SingularityType::DegenerateBeyond),
        None => Err(HeightError::Undecided(format!("residual vanishes through degree {n}"))),
    }
}

/// Coefficients of the third coordinate of the generic normal form.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct BCoeffs {
    pub b20: f64,
    pub b11: f64,
    pub b02: f64,
    pub b30: f64,
    pub b21: f64,
    pub b12: f64,
    pub b03: f64,
}

/// Choice of sign in v₂ = −b₁₁ ± 2√(b₂₀b₀₂). `Upper` takes +, and then the
/// upper signs of ∓ in the torsion expression and u = (1, −√(b₂₀b₀₂)/b₀₂).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Upper,
    Lower,
}

impl Branch {
    fn sigma(&self) -> f64 {
        match self {
            Branch::Upper => 1.0,
            Branch::Lower => -1.0,
        }
    }
}

pub fn binormal_v2(b: &BCoeffs, branch: Branch) -> Result<f64, HeightError> {
    if b.b02 <= 0.0 || b.b20 < 0.0 {
        return Err(HeightError::BadCoefficients);
    }
    Ok(-b.b11 + 2.0 * branch.sigma() * (b.b20 * b.b02).sqrt())
}

/// b₃₀ ∓ b₂₁√(b₂₀b₀₂)/b₀₂ + b₁₂b₂₀/b₀₂ ∓ b₀₃b₂₀√(b₂₀b₀₂)/b₀₂²: the cubic part
/// of h_v along the asymptotic direction; zero exactly when τ = 0.
pub fn torsion_expr(b: &BCoeffs, branch: Branch) -> Result<f64, HeightError> {
    if b.b02 <= 0.0 || b.b20 < 0.0 {
        return Err(HeightError::BadCoefficients);
    }
    let s = (b.b20 * b.b02).sqrt();
    let sg = branch.sigma();
    Ok(b.b30 - sg * b.b21 * s / b.b02 + b.b12 * b.b20 / b.b02 - sg * b.b03 * b.b20 * s / (b.b02 * b.b02))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BinormalCertificate {
    pub is_binormal: bool,
    pub hessian_det: f64,
}

fn in_family(v: &[f64; 4]) -> Option<[f64; 4]> {
    (v[0].abs() <= TOL && v[3].abs() <= TOL && v[2].abs() > TOL).then(|| [0.0, v[1] / v[2], 1.0, 0.0])
}

fn hessian_det(h: &RealJet) -> f64 {
    4.0 * h.coeff(2, 0) * h.coeff(0, 2) - h.coeff(1, 1).powi(2)
}

/// For v = (0, v₂, v₃, 0), v₃ ≠ 0, normalized to v₃ = 1: Hessian determinant
/// of h_v, which on the normal form equals 4b₂₀b₀₂ − (v₂ + b₁₁)².
pub fn binormal_certificate(j: &CorankOneJet, v: &[f64; 4]) -> Result<BinormalCertificate, HeightError> {
    let w = in_family(v).ok_or(HeightError::OutsideFamily)?;
    let det = hessian_det(&combine(j, &w));
    Ok(BinormalCertificate { is_binormal: det.abs() <= TOL, hessian_det: det })
}

/// Rows of the contact table: the submersion whose zero fibre models Γ_v.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelSubmersion {
    /// g₁ = X
    G1,
    /// g₂ₖ = ±Z + (−1)^{k+1} X^k, k = 2, 3, 4 when the type is A_{k−1}.
    G2k { k: Option<u32> },
    /// g₃ = Y
    G3,
    /// g₄ = ±W ± X²
    G4,
}

impl fmt::Display for ModelSubmersion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSubmersion::G1 => write!(f, "g1 = X"),
            ModelSubmersion::G2k { k: Some(k) } => write!(f, "g2k = ±Z+(-1)^(k+1)X^k, k={k}"),
            ModelSubmersion::G2k { k: None } => write!(f, "g2k = ±Z+(-1)^(k+1)X^k"),
            ModelSubmersion::G3 => write!(f, "g3 = Y"),
            ModelSubmersion::G4 => write!(f, "g4 = ±W±X^2"),
        }
    }
}

/// Position of Γ_v = v^⊥ against T_pM, E_p and C_pM. For a line or a plane
/// through p, being transversal to a hyperplane is not being contained in it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Incidence {
    pub contains_tangent: bool,
    pub contains_ep: bool,
    pub contains_cone: bool,
}

impl Incidence {
    pub fn transversal_tangent(&self) -> bool {
        !self.contains_tangent
    }
    pub fn transversal_ep(&self) -> bool {
        !self.contains_ep
    }
    pub fn transversal_cone(&self) -> bool {
        !self.contains_cone
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContactCertificate {
    pub is_binormal: bool,
    /// Cubic part of h_v along the asymptotic direction u = (1, u₂), with v
    /// normalized to v₃ = 1; defined for binormal v in the (0, v₂, v₃, 0) family.
    pub tau_value: Option<f64>,
    pub kappa_u: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ContactReport {
    pub v: Direction4,
    pub incidence: Incidence,
    pub model_submersion: ModelSubmersion,
    pub singularity: SingularityType,
    pub certificate: ContactCertificate,
}

pub fn contact_report(j: &CorankOneJet, v: &Direction4) -> Result<ContactReport, HeightError> {
    contact_report_with(j, &analyze(j), v)
}

/// Same as [`contact_report`] with the surface geometry computed once.
pub fn contact_report_with(j: &CorankOneJet, geo: &SurfaceGeometry, v: &Direction4) -> Result<ContactReport, HeightError> {
    let w = v.as_array();
    let perp = |u: &V4| dot(w, u).abs() <= TOL;
    let [nu1, nu2, nu3] = geo.frame.normals;
    let incidence = Incidence {
        contains_tangent: perp(&geo.frame.tangent),
        contains_ep: perp(&nu1) && perp(&nu2),
        contains_cone: geo.tangent_cone.map(|[a, b]| perp(&a) && perp(&b)).unwrap_or(false),
    };
    let germ = height_germ(j, v);
    let singularity = recognize_ak(&germ)?;
    let model_submersion = if !incidence.contains_tangent {
        ModelSubmersion::G1
    } else {
        match (incidence.contains_ep, incidence.contains_cone) {
            (false, false) => ModelSubmersion::G2k {
                k: match singularity {
                    SingularityType::A1Plus | SingularityType::A1Minus => Some(2),
                    SingularityType::A2 => Some(3),
                    SingularityType::A3 => Some(4),
                    _ => None,
                },
            },
            (false, true) => ModelSubmersion::G3,
            (true, _) => ModelSubmersion::G4,
        }
    };
    let in_ep = incidence.contains_tangent && perp(&nu3);
    let is_binormal = in_ep && hessian_det(&germ.h).abs() <= TOL;
    let tau_value = match (is_binormal, in_family(w)) {
        (true, Some(fam)) => {
            let h = combine(j, &fam);
            let (a, b, d) = (h.coeff(2, 0), h.coeff(1, 1), h.coeff(0, 2));
            // kernel of [[2a, b], [b, 2d]] with first coordinate 1
            let u2 = if d.abs() > TOL {
                Some(-b / (2.0 * d))
            } else if a.abs() <= TOL {
                Some(0.0)
            } else {
                None
            };
            u2.map(|u2| h.homogeneous(3).eval(1.0, u2))
        }
        _ => None,
    };
    let certificate = ContactCertificate { is_binormal, tau_value, kappa_u: geo.kappa_u };
    Ok(ContactReport { v: *v, incidence, model_submersion, singularity, certificate })
}

/// Deterministic near-uniform points of 𝕊³ (super-Fibonacci spiral).
pub fn fibonacci_s3(n: usize) -> Vec<Direction4> {
    const PHI: f64 = std::f64::consts::SQRT_2;
    const PSI: f64 = 1.533_751_168_755_204_3;
    (0..n)
        .map(|i| {
            let s = i as f64 + 0.5;
            let t = s / n as f64;
            let (r, big_r) = (t.sqrt(), (1.0 - t).sqrt());
            let alpha = std::f64::consts::TAU * s / PHI;
            let beta = std::f64::consts::TAU * s / PSI;
            Direction4::new([r * alpha.sin(), r * alpha.cos(), big_r * beta.sin(), big_r * beta.cos()]).unwrap()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct HeightScan {
    /// v₂ of the binormal directions (0, v₂, 1, 0), refined to 1e-12.
    pub binormal_v2: Vec<f64>,
    /// Reports for (1,0,0,0), (0,1,0,0), (0,0,0,1), the binormals and one
    /// non-binormal member of the (0, v₂, 1, 0) family.
    pub structured: Vec<ContactReport>,
    pub grid: Vec<ContactReport>,
    /// Singularity counts over the grid.
    pub grid_summary: BTreeMap<SingularityType, usize>,
}

/// Roots of v₂ ↦ det Hess h_{(0,v₂,1,0)}, a quadratic, polished by Newton.
pub fn binormal_roots(j: &CorankOneJet) -> Vec<f64> {
    let c = j.components();
    let (hy, hz) = (&c[1], &c[2]);
    let lin = |i: u32, k: u32| (hz.coeff(i, k), hy.coeff(i, k));
    let ((a20, b20), (a11, b11), (a02, b02)) = (lin(2, 0), lin(1, 1), lin(0, 2));
    // D(t) = 4(a20 + t b20)(a02 + t b02) − (a11 + t b11)²
    let qa = 4.0 * b20 * b02 - b11 * b11;
    let qb = 4.0 * (a20 * b02 + b20 * a02) - 2.0 * a11 * b11;
    let qc = 4.0 * a20 * a02 - a11 * a11;
    let d = |t: f64| qa * t * t + qb * t + qc;
    let dd = |t: f64| 2.0 * qa * t + qb;
    let mut roots = if qa.abs() > TOL {
        let disc = qb * qb - 4.0 * qa * qc;
        if disc < -TOL {
            vec![]
        } else if disc <= TOL {
            vec![-qb / (2.0 * qa)]
        } else {
            let s = disc.sqrt();
            vec![(-qb - s) / (2.0 * qa), (-qb + s) / (2.0 * qa)]
        }
    } else if qb.abs() > TOL {
        vec![-qc / qb]
    } else {
        vec![]
    };
    for r in roots.iter_mut() {
        for _ in 0..50 {
            let g = dd(*r);
            if g.abs() <= TOL {
                break;
            }
            let step = d(*r) / g;
            *r -= step;
            if step.abs() < 1e-12 {
                break;
            }
        }
    }
    roots.sort_by(f64::total_cmp);
    roots
}

pub fn height_scan(j: &CorankOneJet, grid: usize, exec: Exec) -> Result<HeightScan, HeightError> {
    let geo = analyze(j);
    let roots = binormal_roots(j);
    let sample = match roots.as_slice() {
        [] => 0.0,
        [r] => r + 1.0,
        rs => rs.iter().sum::<f64>() / rs.len() as f64,
    };
    let mut dirs = vec![[1.0, 0.0, 0.0, 0.0], [0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 0.0, 1.0], [0.0, sample, 1.0, 0.0]];
    dirs.extend(roots.iter().map(|r| [0.0, *r, 1.0, 0.0]));
    let structured = dirs
        .iter()
        .map(|d| contact_report_with(j, &geo, &Direction4::new(*d)?))
        .collect::<Result<Vec<_>, _>>()?;
    let pts = fibonacci_s3(grid);
    let grid: Vec<ContactReport> =
        exec.map(&pts, |v| contact_report_with(j, &geo, v)).into_iter().collect::<Result<_, _>>()?;
    let mut grid_summary = BTreeMap::new();
    for r in &grid {
        *grid_summary.entry(r.singularity).or_insert(0) += 1;
    }
    Ok(HeightScan { binormal_v2: roots, structured, grid, grid_summary })
}
