//! The model surface X = image of f(x,y) = (x, xy, y², y³), its defining ideal,
//! the tangent vector fields ξ₁..ξ₁₃ and the linear changes η₁..η₈ preserving X.

use std::fmt;
use std::sync::OnceLock;

use num::{One, Signed, Zero};

use crate::jetalg::{int, parse_poly, parse_poly_list, Monomial, Poly, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldLabel {
    Canonical(u8),
    Derived,
}

impl fmt::Display for FieldLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldLabel::Canonical(i) => write!(f, "xi{i}"),
            FieldLabel::Derived => write!(f, "derived"),
        }
    }
}

/// Vector field Σ cᵢ ∂/∂Xᵢ on 4-space with polynomial components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    pub components: [Poly; 4],
    pub label: FieldLabel,
}

impl VectorField {
    pub fn new(components: [Poly; 4], label: FieldLabel) -> Self {
        VectorField { components, label }
    }

    pub fn zero() -> Self {
        VectorField::new(std::array::from_fn(|_| Poly::zero(4)), FieldLabel::Derived)
    }

    pub fn parse(comps: &str, label: FieldLabel) -> Self {
        let v = parse_poly_list(comps, 4).expect("field literal");
        VectorField::new([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()], label)
    }

    /// Apply the field as a derivation: Σ cᵢ ∂g/∂Xᵢ.
    pub fn apply(&self, g: &Poly) -> Poly {
        let mut out = Poly::zero(g.nvars());
        for (i, c) in self.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = g.partial(i).expect("four variables");
            if !d.is_zero() {
                out = &out + &(c * &d);
            }
        }
        out
    }

    /// Same, discarding terms above degree `trunc`.
    pub fn apply_trunc(&self, g: &Poly, trunc: u32) -> Poly {
        let mut out = Poly::zero(g.nvars());
        for (i, c) in self.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = g.partial(i).expect("four variables");
            if !d.is_zero() {
                out = &out + &c.mul_trunc(&d, trunc);
            }
        }
        out
    }

    pub fn scale_by(&self, m: &Monomial, c: &Rat) -> VectorField {
        VectorField::new(std::array::from_fn(|i| self.components[i].mul_monomial(m, c)), FieldLabel::Derived)
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        VectorField::new(std::array::from_fn(|i| &self.components[i] + &other.components[i]), FieldLabel::Derived)
    }

    pub fn neg(&self) -> VectorField {
        VectorField::new(std::array::from_fn(|i| -&self.components[i]), FieldLabel::Derived)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.components.iter().all(|c| c.constant_term().is_zero())
    }

    /// The 1-jet of the field, as a field.
    pub fn linear_part(&self) -> VectorField {
        VectorField::new(std::array::from_fn(|i| self.components[i].homogeneous(1)), FieldLabel::Derived)
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["X", "Y", "Z", "W"];
        let mut first = true;
        for (c, n) in self.components.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            if c.len() == 1 {
                match (first, text.strip_prefix('-')) {
                    (false, Some(rest)) => write!(f, " - {rest}*d/d{n}")?,
                    (false, None) => write!(f, " + {text}*d/d{n}")?,
                    (true, _) => write!(f, "{text}*d/d{n}")?,
                }
            } else {
                if !first {
                    write!(f, " + ")?;
                }
                write!(f, "({c})*d/d{n}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("field is not liftable: equation {equation} fails ({detail})")]
    NotLiftable { equation: u8, detail: String },
    #[error("invalid parameter for {change}: {reason}")]
    InvalidParameter { change: String, reason: String },
    #[error("flow series did not terminate within truncation {trunc}; the field's linear part is not nilpotent")]
    NonNilpotentFlow { trunc: u32 },
}

/// η = (a, b) with df(η) = ξ∘f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftWitness {
    pub a: Poly,
    pub b: Poly,
}

impl LiftWitness {
    /// Recheck df(η) = ξ∘f by composing both sides from scratch.
    pub fn verify(&self, xi: &VectorField) -> bool {
        let s = model();
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        // columns of df: f_x = (1, y, 0, 0), f_y = (0, x, 2y, 3y²)
        let df = [
            self.a.clone(),
            &(&y * &self.a) + &(&x * &self.b),
            (&y * &self.b).scale(&int(2)),
            (&(&y * &y) * &self.b).scale(&int(3)),
        ];
        (0..4).all(|i| df[i] == s.pullback(&xi.components[i]))
    }
}

/// The I1 model surface and its Derlog data.
#[derive(Clone, Debug)]
pub struct ModelSurface {
    pub f: [Poly; 4],
    pub ideal_gens: [Poly; 4],
    pub fields: Vec<VectorField>,
}

static MODEL: OnceLock<ModelSurface> = OnceLock::new();

/// Shared immutable instance.
pub fn model() -> &'static ModelSurface {
    MODEL.get_or_init(ModelSurface::new)
}

const FIELDS: [&str; 13] = [
    "X, Y, 0, 0",
    "0, X^2, 2*Y, 3*X*Z",
    "0, Y, 2*Z, 3*W",
    "Y, X*Z, 0, 0",
    "Z, W, 0, 0",
    "0, X*Z, 2*W, 3*Z^2",
    "W, Z^2, 0, 0",
    "0, 0, 0, Y^2 - X^2*Z",
    "0, 0, 0, Y*Z - X*W",
    "0, X*W, 2*Z^2, 3*Z*W",
    "0, 0, 0, Y*W - X*Z^2",
    "0, 0, 0, W^2 - Z^3",
    "0, W^2 - Z^3, 0, 0",
];

/// The second field exactly as it is commonly printed, with X² on ∂/∂X. It is
/// not tangent to X; the canonical list carries X² on ∂/∂Y instead.
pub fn printed_xi2() -> VectorField {
    VectorField::parse("X^2, 0, 2*Y, 3*X*Z", FieldLabel::Derived)
}

impl ModelSurface {
    pub fn new() -> Self {
        let f = parse_poly_list("x, x*y, y^2, y^3", 2).unwrap();
        let h = ["Y^2 - X^2*Z", "W^2 - Z^3", "X*W - Y*Z", "Y*W - X*Z^2"].map(|s| parse_poly(s, 4).unwrap());
        let fields = FIELDS
            .iter()
            .enumerate()
            .map(|(i, s)| VectorField::parse(s, FieldLabel::Canonical(i as u8 + 1)))
            .collect();
        let s = ModelSurface { f: [f[0].clone(), f[1].clone(), f[2].clone(), f[3].clone()], ideal_gens: h, fields };
        for g in &s.ideal_gens {
            assert!(s.pullback(g).is_zero(), "ideal generator does not vanish on the model");
        }
        s
    }

    pub fn field(&self, i: usize) -> &VectorField {
        &self.fields[i - 1]
    }

    pub fn pullback(&self, g: &Poly) -> Poly {
        g.compose(&self.f, None).expect("four-variable input")
    }

    /// Vanishing on X, used as the ideal membership test.
    pub fn is_in_ideal(&self, g: &Poly) -> bool {
        self.pullback(g).is_zero()
    }

    pub fn apply_field(&self, xi: &VectorField, g: &Poly) -> Poly {
        xi.apply(g)
    }

    /// One pullback check per ideal generator.
    pub fn tangency_checks(&self, xi: &VectorField) -> [bool; 4] {
        std::array::from_fn(|j| self.is_in_ideal(&xi.apply(&self.ideal_gens[j])))
    }

    pub fn verify_tangency(&self, xi: &VectorField) -> bool {
        self.tangency_checks(xi).iter().all(|b| *b)
    }

    /// Solve df(η) = ξ∘f with df rows (1,0), (y,x), (0,2y), (0,3y²).
    pub fn lift_vector_field(&self, xi: &VectorField) -> Result<LiftWitness, ModelError> {
        let p: Vec<Poly> = xi.components.iter().map(|c| self.pullback(c)).collect();
        let a = p[0].clone();
        let y = Poly::var(2, 1);
        // b from the third component: 2y·b = p3
        let mut b = Poly::zero(2);
        for (m, c) in p[2].terms() {
            match m.lower(1) {
                Some(q) => b.add_term(q, c / int(2)),
                None => {
                    return Err(ModelError::NotLiftable {
                        equation: 3,
                        detail: format!("{} is not divisible by 2y", p[2]),
                    })
                }
            }
        }
        let lhs2 = &(&y * &a) + &(&Poly::var(2, 0) * &b);
        if lhs2 != p[1] {
            return Err(ModelError::NotLiftable { equation: 2, detail: format!("y*a + x*b = {lhs2} but need {}", p[1]) });
        }
        let lhs4 = (&(&y * &y) * &b).scale(&int(3));
        if lhs4 != p[3] {
            return Err(ModelError::NotLiftable { equation: 4, detail: format!("3y^2*b = {lhs4} but need {}", p[3]) });
        }
        Ok(LiftWitness { a, b })
    }
}

impl Default for ModelSurface {
    fn default() -> Self {
        Self::new()
    }
}

/// Exact time-one flow of a field vanishing at the origin, acting on a jet:
/// g ↦ Σ ξⁿ(g)/n!, truncated at `trunc`. The series terminates when the linear
/// part of ξ is nilpotent.
pub fn apply_flow(xi: &VectorField, g: &Poly, trunc: u32) -> Result<Poly, ModelError> {
    assert!(xi.vanishes_at_origin(), "flow needs a field vanishing at the origin");
    let cap = 4 * (trunc as usize + 1) * (trunc as usize + 1) + 4;
    let mut out = g.truncate(trunc);
    let mut term = out.clone();
    for n in 1..=cap {
        term = xi.apply_trunc(&term, trunc).scale(&Rat::new(1.into(), (n as i64).into()));
        if term.is_zero() {
            return Ok(out);
        }
        out = &out + &term;
    }
    Err(ModelError::NonNilpotentFlow { trunc })
}

/// The linear changes preserving X obtained by integrating 1-jets of Θ(X).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LinearChange {
    Eta1,
    Eta2,
    Eta3,
    Eta4,
    Eta5,
    Eta6,
    Eta7,
    Eta8,
}

pub const ALL_CHANGES: [LinearChange; 8] = [
    LinearChange::Eta1,
    LinearChange::Eta2,
    LinearChange::Eta3,
    LinearChange::Eta4,
    LinearChange::Eta5,
    LinearChange::Eta6,
    LinearChange::Eta7,
    LinearChange::Eta8,
];

impl LinearChange {
    pub fn index(&self) -> u8 {
        *self as u8 + 1
    }

    pub fn from_index(i: u8) -> Option<Self> {
        ALL_CHANGES.get((i as usize).wrapping_sub(1)).copied()
    }

    /// η₁ and η₃ take t = e^α > 0; η₂, η₄..η₇ take α ≠ 0; η₈ ignores its parameter.
    pub fn is_scaling(&self) -> bool {
        matches!(self, LinearChange::Eta1 | LinearChange::Eta3)
    }

    pub fn check_param(&self, p: &Rat) -> Result<(), ModelError> {
        let bad = |reason: &str| Err(ModelError::InvalidParameter { change: self.to_string(), reason: reason.into() });
        match self {
            LinearChange::Eta1 | LinearChange::Eta3 if !p.is_positive() => bad("scaling t = e^alpha must be positive"),
            LinearChange::Eta2 | LinearChange::Eta4 | LinearChange::Eta5 | LinearChange::Eta6 | LinearChange::Eta7
                if p.is_zero() =>
            {
                bad("alpha must be nonzero")
            }
            _ => Ok(()),
        }
    }

    /// The printed linear map: images of X, Y, Z, W.
    pub fn linear_components(&self, p: &Rat) -> Result<[Poly; 4], ModelError> {
        self.check_param(p)?;
        let v = |i| Poly::var(4, i);
        let (x, y, z, w) = (v(0), v(1), v(2), v(3));
        let t = p;
        Ok(match self {
            LinearChange::Eta1 => [x.scale(t), y.scale(t), z, w],
            LinearChange::Eta2 => {
                let z2 = &z + &y.scale(t);
                [x, y, z2, w]
            }
            LinearChange::Eta3 => [x, y.scale(t), z.scale(&(t * t)), w.scale(&(t * t * t))],
            LinearChange::Eta4 => {
                let x2 = &x + &y.scale(t);
                [x2, y, z, w]
            }
            LinearChange::Eta5 => {
                let x2 = &x + &z.scale(t);
                let y2 = &y + &w.scale(t);
                [x2, y2, z, w]
            }
            LinearChange::Eta6 => {
                let z2 = &z + &w.scale(t);
                [x, y, z2, w]
            }
            LinearChange::Eta7 => {
                let x2 = &x + &w.scale(t);
                [x2, y, z, w]
            }
            LinearChange::Eta8 => [-&x, -&y, z, w],
        })
    }

    /// Row i holds the coefficients of the image of the i-th variable.
    pub fn matrix(&self, p: &Rat) -> Result<[[Rat; 4]; 4], ModelError> {
        let comps = self.linear_components(p)?;
        Ok(std::array::from_fn(|i| std::array::from_fn(|j| comps[i].coeff(&Monomial::var(4, j)))))
    }

    /// True when the linear map itself preserves X. The others (η₂, η₄, η₆,
    /// η₇) are only 1-jets of elements of R(X); those are realized by the flow
    /// of the field they integrate.
    pub fn is_exactly_linear(&self) -> bool {
        matches!(self, LinearChange::Eta1 | LinearChange::Eta3 | LinearChange::Eta5 | LinearChange::Eta8)
    }

    /// Field and time whose flow has this change as its 1-jet.
    pub fn generating_flow(&self, p: &Rat) -> Option<VectorField> {
        let s = model();
        let half = Rat::new(1.into(), 2.into());
        let (i, tau) = match self {
            LinearChange::Eta2 => (2, p * &half),
            LinearChange::Eta4 => (4, p.clone()),
            LinearChange::Eta6 => (6, p * &half),
            LinearChange::Eta7 => (7, p.clone()),
            _ => return None,
        };
        Some(s.field(i).scale_by(&Monomial::one(4), &tau))
    }

    /// g composed with the change, as an element of R(X), on jets of order `trunc`.
    pub fn apply(&self, g: &Poly, p: &Rat, trunc: u32) -> Result<Poly, ModelError> {
        if let Some(xi) = self.generating_flow(p) {
            self.check_param(p)?;
            return apply_flow(&xi, g, trunc);
        }
        let comps = self.linear_components(p)?;
        Ok(g.compose(&comps, Some(trunc)).expect("four variables").truncate(trunc))
    }
}

impl fmt::Display for LinearChange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "eta{}", self.index())
    }
}

pub fn apply_linear_change(eta: LinearChange, g: &Poly, param: &Rat, trunc: u32) -> Result<Poly, ModelError> {
    eta.apply(g, param, trunc)
}

/// Identity parameter for each change (t = 1 for scalings).
pub fn neutral_param(eta: LinearChange) -> Option<Rat> {
    match eta {
        LinearChange::Eta1 | LinearChange::Eta3 => Some(Rat::one()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jetalg::rat;

    fn p4(s: &str) -> Poly {
        parse_poly(s, 4).unwrap()
    }

    fn p2(s: &str) -> Poly {
        parse_poly(s, 2).unwrap()
    }

    #[test]
    fn pullback_examples() {
        let s = model();
        assert!(s.pullback(&p4("Y^2 - X^2*Z")).is_zero());
        assert_eq!(s.pullback(&p4("X")), p2("x"));
        assert!(s.pullback(&p4("Y*W - X*Z^2")).is_zero());
    }

    #[test]
    fn ideal_membership() {
        let s = model();
        assert!(s.is_in_ideal(&p4("Y^2 - X^2*Z")));
        assert!(!s.is_in_ideal(&p4("Z")));
        assert!(s.is_in_ideal(&(&p4("X*W - Y*Z") * &p4("3*X^2 - Z*W + 7"))));
    }

    #[test]
    fn apply_field_examples() {
        let s = model();
        assert_eq!(s.apply_field(s.field(2), &p4("Z")), p4("2*Y"));
        assert_eq!(s.apply_field(s.field(8), &p4("W")), p4("Y^2 - X^2*Z"));
        for xi in &s.fields {
            assert!(s.apply_field(xi, &p4("1")).is_zero());
        }
    }

    #[test]
    fn all_canonical_fields_are_tangent() {
        let s = model();
        let mut checks = 0;
        for xi in &s.fields {
            for ok in s.tangency_checks(xi) {
                assert!(ok, "{} fails", xi.label);
                checks += 1;
            }
        }
        assert_eq!(checks, 52);
    }

    #[test]
    fn non_tangent_fields_are_rejected() {
        let s = model();
        let dz = VectorField::parse("0, 0, 1, 0", FieldLabel::Derived);
        assert!(!s.verify_tangency(&dz));
        assert_eq!(s.pullback(&dz.apply(&p4("W^2 - Z^3"))), p2("-3*y^4"));
        let printed = printed_xi2();
        assert_eq!(s.tangency_checks(&printed), [false, true, false, false]);
        assert!(s.lift_vector_field(&printed).is_err());
    }

    #[test]
    fn witnesses() {
        let s = model();
        let w5 = s.lift_vector_field(s.field(5)).unwrap();
        assert_eq!((w5.a.clone(), w5.b.clone()), (p2("y^2"), Poly::zero(2)));
        let w1 = s.lift_vector_field(s.field(1)).unwrap();
        assert_eq!((w1.a, w1.b), (p2("x"), Poly::zero(2)));
        let expected = [
            ("x", "0"),
            ("0", "x"),
            ("0", "y"),
            ("x*y", "0"),
            ("y^2", "0"),
            ("0", "y^2"),
            ("y^3", "0"),
            ("0", "0"),
            ("0", "0"),
            ("0", "y^3"),
            ("0", "0"),
            ("0", "0"),
            ("0", "0"),
        ];
        for (xi, (a, b)) in s.fields.iter().zip(expected) {
            let w = s.lift_vector_field(xi).unwrap();
            assert!(w.verify(xi));
            assert_eq!((w.a, w.b), (p2(a), p2(b)), "{}", xi.label);
        }
    }

    #[test]
    fn linear_change_examples() {
        let x = p4("X");
        assert_eq!(LinearChange::Eta8.apply(&x, &Rat::zero(), 8).unwrap(), p4("-X"));
        assert_eq!(LinearChange::Eta4.apply(&x, &int(1), 8).unwrap().truncate(1), p4("X + Y"));
        assert_eq!(LinearChange::Eta4.linear_components(&int(1)).unwrap()[0], p4("X + Y"));
        let g = p4("X + Y^2 - 3*W*Z");
        assert_eq!(LinearChange::Eta3.apply(&g, &int(1), 8).unwrap(), g);
        assert!(LinearChange::Eta3.apply(&g, &int(-1), 8).is_err());
        assert!(LinearChange::Eta5.apply(&g, &Rat::zero(), 8).is_err());
    }

    #[test]
    fn linear_changes_preserve_the_surface() {
        let s = model();
        let samples = [rat(1, 2), rat(2, 1), rat(3, 7), rat(5, 3), rat(9, 4)];
        for eta in ALL_CHANGES {
            for p in &samples {
                for h in &s.ideal_gens {
                    let moved = eta.apply(h, p, 9).unwrap();
                    assert!(s.pullback(&moved).truncate(9).is_zero(), "{eta} at {p}");
                    if eta.is_exactly_linear() {
                        let lin = h.compose(&eta.linear_components(p).unwrap(), None).unwrap();
                        assert!(s.is_in_ideal(&lin));
                    }
                }
            }
        }
    }

    #[test]
    fn bare_linear_maps_of_flow_changes_leave_the_surface() {
        let s = model();
        for eta in [LinearChange::Eta2, LinearChange::Eta4, LinearChange::Eta6, LinearChange::Eta7] {
            let comps = eta.linear_components(&int(1)).unwrap();
            let broken = s.ideal_gens.iter().any(|h| !s.is_in_ideal(&h.compose(&comps, None).unwrap()));
            assert!(broken, "{eta}");
            let flow = eta.generating_flow(&int(1)).unwrap();
            for (i, c) in comps.iter().enumerate() {
                assert_eq!(&apply_flow(&flow, &Poly::var(4, i), 6).unwrap().truncate(1), c);
            }
        }
    }

    #[test]
    fn flow_of_nilpotent_field_is_exact() {
        // ξ₄ has linear part Y ∂/∂X; its flow is X ↦ X + Y + ... on jets
        let s = model();
        let g = p4("X");
        let out = apply_flow(s.field(4), &g, 6).unwrap();
        assert_eq!(out.truncate(1), p4("X + Y"));
        for h in &s.ideal_gens {
            let moved = apply_flow(s.field(4), h, 8).unwrap();
            assert!(s.pullback(&moved).truncate(8).is_zero());
        }
        assert!(apply_flow(s.field(1), &g, 4).is_err());
    }
}
