use std::fmt;

use num::{BigInt, One, Signed, Zero};

use crate::jetalg::{count_of_degree, GradedSpan, Monomial, MonomialOrder, Poly, Rat};
use crate::modelsurface::{apply_flow, model, LinearChange, VectorField};

use super::tangent::{
    codimension_with, generators, is_k_determined_with, tangent_space_with, versal_monomials, Codimension,
    DeterminacyCriterion, SubmersionGerm, NILPOTENT_BARE,
};
use super::ClassError;
use crate::exec::Exec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(r: &Rat) -> Sign {
        if r.is_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn rat(&self) -> Rat {
        match self {
            Sign::Plus => Rat::one(),
            Sign::Minus => -Rat::one(),
        }
    }

    fn sym(&self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Rows of the table of R(X)-orbits of codimension at most 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrbitLabel {
    X,
    ZPlusX2 { z: Sign, x: Sign },
    ZPlusX3 { z: Sign },
    ZPlusX4 { z: Sign, x: Sign },
    Y,
    WPlusX2 { w: Sign, x: Sign },
    BeyondScope,
}

impl OrbitLabel {
    pub fn normal_form(&self) -> Option<Poly> {
        let v = |i| Poly::var(4, i);
        let xk = |k: u32, s: &Sign| v(0).pow_trunc(k, None).scale(&s.rat());
        Some(match self {
            OrbitLabel::X => v(0),
            OrbitLabel::Y => v(1),
            OrbitLabel::ZPlusX2 { z, x } => &v(2).scale(&z.rat()) + &xk(2, x),
            OrbitLabel::ZPlusX3 { z } => &v(2).scale(&z.rat()) + &xk(3, &Sign::Plus),
            OrbitLabel::ZPlusX4 { z, x } => &v(2).scale(&z.rat()) + &xk(4, x),
            OrbitLabel::WPlusX2 { w, x } => &v(3).scale(&w.rat()) + &xk(2, x),
            OrbitLabel::BeyondScope => return None,
        })
    }

    /// Codimension listed for the row.
    pub fn table_codim(&self) -> Option<usize> {
        Some(match self {
            OrbitLabel::X => 0,
            OrbitLabel::ZPlusX2 { .. } => 1,
            OrbitLabel::ZPlusX3 { .. } => 2,
            OrbitLabel::ZPlusX4 { .. } => 3,
            OrbitLabel::Y => 2,
            OrbitLabel::WPlusX2 { .. } => 3,
            OrbitLabel::BeyondScope => return None,
        })
    }

    pub fn table_determinacy(&self) -> Option<u32> {
        Some(match self {
            OrbitLabel::X => 1,
            OrbitLabel::ZPlusX2 { .. } => 2,
            OrbitLabel::ZPlusX3 { .. } => 3,
            OrbitLabel::ZPlusX4 { .. } => 4,
            OrbitLabel::Y => 2,
            OrbitLabel::WPlusX2 { .. } => 2,
            OrbitLabel::BeyondScope => return None,
        })
    }

    /// Unfolding monomials of the versal deformation column.
    pub fn table_unfolding(&self) -> Vec<Poly> {
        let p = |s: &str| crate::jetalg::parse_poly(s, 4).unwrap();
        match self {
            OrbitLabel::X | OrbitLabel::BeyondScope => vec![],
            OrbitLabel::ZPlusX2 { .. } => vec![p("X")],
            OrbitLabel::ZPlusX3 { .. } => vec![p("X"), p("X^2")],
            OrbitLabel::ZPlusX4 { .. } => vec![p("X"), p("X^2"), p("X^3")],
            OrbitLabel::Y => vec![p("X"), p("Z")],
            OrbitLabel::WPlusX2 { .. } => vec![p("X"), p("Y"), p("Z")],
        }
    }

    pub fn id(&self) -> String {
        match self {
            OrbitLabel::X => "X".into(),
            OrbitLabel::ZPlusX2 { z, x } => format!("Z_plus_X2({},{})", z.sym(), x.sym()),
            OrbitLabel::ZPlusX3 { z } => format!("Z_plus_X3({})", z.sym()),
            OrbitLabel::ZPlusX4 { z, x } => format!("Z_plus_X4({},{})", z.sym(), x.sym()),
            OrbitLabel::Y => "Y".into(),
            OrbitLabel::WPlusX2 { w, x } => format!("W_plus_X2({},{})", w.sym(), x.sym()),
            OrbitLabel::BeyondScope => "BeyondScope".into(),
        }
    }

    /// Same row of the table, signs ignored.
    pub fn row(&self) -> &'static str {
        match self {
            OrbitLabel::X => "X",
            OrbitLabel::ZPlusX2 { .. } => "±Z±X^2",
            OrbitLabel::ZPlusX3 { .. } => "±Z+X^3",
            OrbitLabel::ZPlusX4 { .. } => "±Z±X^4",
            OrbitLabel::Y => "Y",
            OrbitLabel::WPlusX2 { .. } => "±W±X^2",
            OrbitLabel::BeyondScope => "beyond scope",
        }
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

/// Class of the 1-jet after the linear reduction. Z and W keep their
/// coefficient: normalizing it needs a root, which is deferred.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearClass {
    X,
    Z(Rat),
    Y,
    W(Rat),
}

impl fmt::Display for LinearClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinearClass::X => write!(f, "X"),
            LinearClass::Y => write!(f, "Y"),
            LinearClass::Z(c) => write!(f, "{}Z", if c.is_negative() { "-" } else { "+" }),
            LinearClass::W(c) => write!(f, "{}W", if c.is_negative() { "-" } else { "+" }),
        }
    }
}

/// One step of a classification trace, acting on g by composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceStep {
    /// One of η₁..η₈ with its parameter.
    Linear { change: LinearChange, param: Rat },
    /// Time-one flow of a field in Θ(X): g ↦ Σ ξⁿ(g)/n!.
    Flow { field: VectorField, degree: u32 },
    /// η₁ with s = S^{1/m} and η₃ with t = T^{1/n}; real roots of positive rationals.
    RadicalScaling { s: Option<(Rat, u32)>, t: Option<(Rat, u32)> },
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceStep::Linear { change, param } => {
                if *change == LinearChange::Eta8 {
                    write!(f, "{change}")
                } else if change.is_scaling() {
                    write!(f, "{change}(t={param})")
                } else {
                    write!(f, "{change}(alpha={param})")
                }
            }
            TraceStep::Flow { field, degree } => write!(f, "flow[deg {degree}] exp({field})"),
            TraceStep::RadicalScaling { s, t } => {
                let mut parts = Vec::new();
                if let Some((v, m)) = s {
                    parts.push(format!("eta1(t=({v})^(1/{m}))"));
                }
                if let Some((v, n)) = t {
                    parts.push(format!("eta3(t=({v})^(1/{n}))"));
                }
                write!(f, "{}", parts.join(" ; "))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub input: Poly,
    pub linear_class: LinearClass,
    pub label: OrbitLabel,
    pub codim: Option<Codimension>,
    pub determinacy_degree: Option<u32>,
    pub criterion: Option<DeterminacyCriterion>,
    pub versal_monomials: Vec<Monomial>,
    pub trace: Vec<TraceStep>,
    /// Jet reached by the rational part of the trace, cut at the determinacy degree.
    pub rational_jet: Poly,
    pub normal_form: Option<Poly>,
    pub notes: Vec<String>,
    pub trunc: u32,
}

#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    pub trunc: u32,
    pub order: MonomialOrder,
    pub max_degree: u32,
    pub max_codim: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { trunc: 8, order: MonomialOrder::GrLex, max_degree: 6, max_codim: 3 }
    }
}

fn lin_coeffs(g: &Poly) -> [Rat; 4] {
    std::array::from_fn(|i| g.coeff(&Monomial::var(4, i)))
}

struct Stepper {
    g: Poly,
    trace: Vec<TraceStep>,
    trunc: u32,
}

impl Stepper {
    fn linear(&mut self, change: LinearChange, param: Rat) -> Result<(), ClassError> {
        if !change.is_scaling() && change != LinearChange::Eta8 && param.is_zero() {
            return Ok(());
        }
        if change.is_scaling() && param.is_one() {
            return Ok(());
        }
        self.g = change.apply(&self.g, &param, self.trunc)?;
        self.trace.push(TraceStep::Linear { change, param });
        Ok(())
    }

    fn flow(&mut self, field: VectorField, degree: u32) -> Result<(), ClassError> {
        self.g = apply_flow(&field, &self.g, self.trunc)?;
        self.trace.push(TraceStep::Flow { field, degree });
        Ok(())
    }
}

/// Bring the 1-jet aX+bY+cZ+dW to X, ±Z, Y or ±W with the η-changes.
pub fn reduce_linear_part(g: &Poly, trunc: u32) -> Result<(LinearClass, Poly, Vec<TraceStep>), ClassError> {
    let germ = SubmersionGerm::new(g.clone(), trunc)?;
    if !germ.is_submersion() {
        return Err(ClassError::NotSubmersion);
    }
    let mut st = Stepper { g: germ.jet, trace: Vec::new(), trunc };
    let [a, _, c, _] = lin_coeffs(&st.g);
    let class = if !a.is_zero() {
        let l = lin_coeffs(&st.g);
        st.linear(LinearChange::Eta4, -&l[1] / &l[0])?;
        let l = lin_coeffs(&st.g);
        st.linear(LinearChange::Eta5, -&l[2] / &l[0])?;
        let l = lin_coeffs(&st.g);
        st.linear(LinearChange::Eta7, -&l[3] / &l[0])?;
        let l = lin_coeffs(&st.g);
        st.linear(LinearChange::Eta1, Rat::one() / l[0].abs())?;
        if lin_coeffs(&st.g)[0].is_negative() {
            st.linear(LinearChange::Eta8, Rat::zero())?;
        }
        LinearClass::X
    } else if !c.is_zero() {
        let l = lin_coeffs(&st.g);
        st.linear(LinearChange::Eta2, -&l[1] / &l[2])?;
        let l = lin_coeffs(&st.g);
        st.linear(LinearChange::Eta6, -&l[3] / &l[2])?;
        LinearClass::Z(lin_coeffs(&st.g)[2].clone())
    } else if !lin_coeffs(&st.g)[1].is_zero() {
        let l = lin_coeffs(&st.g);
        st.linear(LinearChange::Eta5, -&l[3] / &l[1])?;
        let l = lin_coeffs(&st.g);
        st.linear(LinearChange::Eta1, Rat::one() / l[1].abs())?;
        if lin_coeffs(&st.g)[1].is_negative() {
            st.linear(LinearChange::Eta8, Rat::zero())?;
        }
        LinearClass::Y
    } else {
        LinearClass::W(lin_coeffs(&st.g)[3].clone())
    };
    Ok((class, st.g, st.trace))
}

/// Σ cₜ · mₜ ξ_{iₜ} from a provenance combination.
fn assemble_field(gens: &[(super::tangent::Generator, Poly)], combo: &[(usize, Rat)]) -> VectorField {
    let s = model();
    let mut acc = VectorField::zero();
    for (tag, c) in combo {
        let g = &gens[*tag].0;
        acc = acc.add(&s.field(g.field).scale_by(&g.multiplier, c));
    }
    acc
}

/// Remove from the degree-`e` part of the jet everything the given generators
/// can absorb, by exact flows. Returns the number of flows used.
fn absorb_degree(st: &mut Stepper, e: u32, bare: &[usize], order: MonomialOrder, max_rounds: usize) -> Result<(), ClassError> {
    for _ in 0..max_rounds {
        let head = st.g.truncate(e);
        let gens = generators(&head, e, true, bare);
        let mut span = GradedSpan::tracked(4, 1, e, order);
        for (i, (_, p)) in gens.iter().enumerate() {
            span.insert_tagged(p, Some(i));
        }
        let part = st.g.homogeneous(e);
        let (_, combo) = span.reduce(&part);
        if combo.is_empty() {
            return Ok(());
        }
        let combo: Vec<(usize, Rat)> = combo.into_iter().collect();
        let xi = assemble_field(&gens, &combo);
        // ξ(g) matches the absorbed part in degree e and vanishes below
        debug_assert!(xi.apply_trunc(&head, e).truncate(e - 1).is_zero());
        st.flow(xi.neg(), e)?;
    }
    Err(ClassError::Undecided(format!("degree-{e} normalization did not settle")))
}

/// Lower bound for dim M₄/Θ(X)·g from the e-jet.
fn codim_lower_bound(g: &Poly, e: u32, order: MonomialOrder) -> usize {
    let t = tangent_space_with(&g.truncate(e), e, false, order, Exec::Sequential);
    let total: usize = (1..=e).map(|d| count_of_degree(4, d)).sum();
    total - t.space.rank()
}

pub fn classify(g: &Poly) -> Result<ClassificationReport, ClassError> {
    classify_with(g, ClassifyOptions::default())
}

pub fn classify_with(g: &Poly, opts: ClassifyOptions) -> Result<ClassificationReport, ClassError> {
    let d = opts.trunc;
    if d < opts.max_degree.min(4) + 1 {
        return Err(ClassError::TruncationTooLow(d));
    }
    let (class, h, trace) = reduce_linear_part(g, d)?;
    let mut st = Stepper { g: h, trace, trunc: d };
    let mut report = ClassificationReport {
        input: g.clone(),
        linear_class: class.clone(),
        label: OrbitLabel::BeyondScope,
        codim: None,
        determinacy_degree: None,
        criterion: None,
        versal_monomials: Vec::new(),
        trace: Vec::new(),
        rational_jet: Poly::zero(4),
        normal_form: None,
        notes: Vec::new(),
        trunc: d,
    };
    let mut found = None;
    for k in 1..=opts.max_degree.min(d - 1) {
        let det = is_k_determined_with(&st.g.truncate(k), k, opts.order);
        if let Some(c) = det.criterion {
            found = Some((k, c));
            break;
        }
        let e = k + 1;
        absorb_degree(&mut st, e, &[], opts.order, 4)?;
        absorb_degree(&mut st, e, &NILPOTENT_BARE, opts.order, 64)?;
        let lb = codim_lower_bound(&st.g, e, opts.order);
        if lb > opts.max_codim {
            report.notes.push(format!("codimension at least {lb} from the {e}-jet"));
            break;
        }
    }
    let Some((k, crit)) = found else {
        report.trace = st.trace;
        report.rational_jet = st.g.clone();
        if report.notes.is_empty() {
            report.notes.push(format!("no determinacy certified up to degree {}", opts.max_degree));
        }
        return Ok(report);
    };
    report.determinacy_degree = Some(k);
    report.criterion = Some(crit);

    let jk = st.g.truncate(k);
    let x = Monomial::var(4, 0);
    let power_of_x = |j: u32| Monomial::new(&[j, 0, 0, 0]);
    let two_terms = |lead: Monomial, j: u32| -> Option<(Rat, Rat)> {
        if jk.len() != 2 {
            return None;
        }
        let a = jk.coeff(&lead);
        let b = jk.coeff(&power_of_x(j));
        (!a.is_zero() && !b.is_zero()).then_some((a, b))
    };
    let mut radical = (None, None);
    let label = match &class {
        LinearClass::X if jk == Poly::var(4, 0) => OrbitLabel::X,
        LinearClass::Y if jk == Poly::var(4, 1) => OrbitLabel::Y,
        LinearClass::Z(_) if (2..=4).contains(&k) => match two_terms(Monomial::var(4, 2), k) {
            Some((c, mut delta)) => {
                if k % 2 == 1 && delta.is_negative() {
                    st.linear(LinearChange::Eta8, Rat::zero())?;
                    delta = st.g.coeff(&power_of_x(k));
                }
                radical.0 = scale_step(&mut st, LinearChange::Eta1, Rat::one() / delta.abs(), k)?;
                radical.1 = scale_step(&mut st, LinearChange::Eta3, Rat::one() / c.abs(), 2)?;
                let z = Sign::of(&c);
                match k {
                    2 => OrbitLabel::ZPlusX2 { z, x: Sign::of(&delta) },
                    3 => OrbitLabel::ZPlusX3 { z },
                    _ => OrbitLabel::ZPlusX4 { z, x: Sign::of(&delta) },
                }
            }
            None => OrbitLabel::BeyondScope,
        },
        LinearClass::W(_) if k == 2 => match two_terms(Monomial::var(4, 3), 2) {
            Some((w, alpha)) => {
                radical.0 = scale_step(&mut st, LinearChange::Eta1, Rat::one() / alpha.abs(), 2)?;
                radical.1 = scale_step(&mut st, LinearChange::Eta3, Rat::one() / w.abs(), 3)?;
                OrbitLabel::WPlusX2 { w: Sign::of(&w), x: Sign::of(&alpha) }
            }
            None => OrbitLabel::BeyondScope,
        },
        _ => OrbitLabel::BeyondScope,
    };
    let _ = x;
    if radical.0.is_some() || radical.1.is_some() {
        st.trace.push(TraceStep::RadicalScaling { s: radical.0, t: radical.1 });
    }
    report.rational_jet = st.g.truncate(k);
    report.trace = st.trace;
    report.label = label;
    if let Some(nf) = label.normal_form() {
        let codim = codimension_with(&nf, d, opts.order, Exec::Sequential)?;
        if codim.value > opts.max_codim {
            report.label = OrbitLabel::BeyondScope;
        } else {
            report.versal_monomials = versal_monomials(&nf, d, opts.order);
            report.normal_form = Some(nf);
        }
        report.codim = Some(codim);
        if matches!(label, OrbitLabel::ZPlusX4 { .. }) {
            report.notes.push(
                "versal deformation base printed as ±Z±X^3 in the source table; verified here with ±Z±X^4 + a1*X + a2*X^2 + a3*X^3"
                    .into(),
            );
        }
    } else {
        report.notes.push(format!("{k}-jet {jk} is outside the table"));
    }
    Ok(report)
}

/// Apply η₁/η₃ with t = value^{1/root}. Exact rational roots become ordinary
/// linear steps; otherwise the root is returned for the deferred scaling.
fn scale_step(st: &mut Stepper, change: LinearChange, value: Rat, root: u32) -> Result<Option<(Rat, u32)>, ClassError> {
    if value.is_one() {
        return Ok(None);
    }
    match rational_root(&value, root) {
        Some(t) => {
            st.linear(change, t)?;
            Ok(None)
        }
        None => Ok(Some((value, root))),
    }
}

fn int_root(n: &BigInt, k: u32) -> Option<BigInt> {
    let r = n.nth_root(k);
    (num::pow(r.clone(), k as usize) == *n).then_some(r)
}

/// Positive rational k-th root of a positive rational, when it exists.
pub fn rational_root(v: &Rat, k: u32) -> Option<Rat> {
    if !v.is_positive() {
        return None;
    }
    Some(Rat::new(int_root(v.numer(), k)?, int_root(v.denom(), k)?))
}

/// Check exactly that the scaling with s = S^{1/m} (η₁) and t = T^{1/n} (η₃)
/// maps `from` onto `to`: X^a Y^b Z^c W^d picks up s^{a+b} t^{b+2c+3d}.
pub fn radical_scaling_maps(from: &Poly, to: &Poly, s: &Option<(Rat, u32)>, t: &Option<(Rat, u32)>) -> bool {
    let (sv, m) = s.clone().unwrap_or((Rat::one(), 1));
    let (tv, n) = t.clone().unwrap_or((Rat::one(), 1));
    if from.len() != to.len() {
        return false;
    }
    from.terms().all(|(mono, r)| {
        let tau = to.coeff(mono);
        if tau.is_zero() || Sign::of(&tau) != Sign::of(r) {
            return false;
        }
        let e = mono.exps();
        let es = e[0] + e[1];
        let et = e[1] + 2 * e[2] + 3 * e[3];
        let lhs = num::pow(&tau / r, (m * n) as usize);
        let rhs = num::pow(sv.clone(), (es * n) as usize) * num::pow(tv.clone(), (et * m) as usize);
        lhs == rhs
    })
}

/// Replay the rational steps of a trace on `input`, truncated at `trunc`.
pub fn replay_rational(input: &Poly, trace: &[TraceStep], trunc: u32) -> Result<Poly, ClassError> {
    let mut g = input.truncate(trunc);
    for step in trace {
        match step {
            TraceStep::Linear { change, param } => g = change.apply(&g, param, trunc)?,
            TraceStep::Flow { field, .. } => g = apply_flow(field, &g, trunc)?,
            TraceStep::RadicalScaling { .. } => {}
        }
    }
    Ok(g)
}

/// Replaying the trace on the input reaches the labelled normal form up to the
/// determinacy degree, exactly.
pub fn verify_trace(report: &ClassificationReport) -> bool {
    let (Some(k), Some(nf)) = (report.determinacy_degree, report.normal_form.as_ref()) else {
        return false;
    };
    let Ok(g) = replay_rational(&report.input, &report.trace, report.trunc) else {
        return false;
    };
    let jk = g.truncate(k);
    if jk != report.rational_jet {
        return false;
    }
    match report.trace.last() {
        Some(TraceStep::RadicalScaling { s, t }) => radical_scaling_maps(&jk, nf, s, t),
        _ => &jk == nf,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jetalg::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s, 4).unwrap()
    }

    fn check(input: &str, id: &str) -> ClassificationReport {
        let r = classify(&p(input)).unwrap();
        assert_eq!(r.label.id(), id, "input {input}: trace {:?}", r.trace);
        assert!(verify_trace(&r), "trace replay failed for {input}");
        r
    }

    #[test]
    fn normal_forms_classify_to_themselves() {
        check("X", "X");
        check("Z + X^2", "Z_plus_X2(+,+)");
        check("-Z - X^2", "Z_plus_X2(-,-)");
        check("Z + X^3", "Z_plus_X3(+)");
        check("-Z + X^4", "Z_plus_X4(-,+)");
        check("Y", "Y");
        check("W - X^2", "W_plus_X2(+,-)");
    }

    #[test]
    fn perturbed_germs() {
        let r = check("2*X + Y - Z + X*W + Y^3", "X");
        assert_eq!(r.linear_class, LinearClass::X);
        check("3*Z + Y + 2*X^2 + X*Y", "Z_plus_X2(+,+)");
        check("-Z - X^3 + X^2*Z", "Z_plus_X3(-)");
        check("Y + W + X^2 + Z^2", "Y");
        check("-2*W + X^2 + X*Z + Y^2", "W_plus_X2(-,+)");
    }

    #[test]
    fn radical_scaling_is_deferred() {
        let r = check("2*Z + 3*X^2", "Z_plus_X2(+,+)");
        assert!(matches!(r.trace.last(), Some(TraceStep::RadicalScaling { .. })));
        let r = check("4*Z + 9*X^2", "Z_plus_X2(+,+)");
        assert!(!r.trace.iter().any(|s| matches!(s, TraceStep::RadicalScaling { .. })));
    }

    #[test]
    fn out_of_table() {
        let r = classify(&p("Z + X^5")).unwrap();
        assert_eq!(r.label, OrbitLabel::BeyondScope);
        let r = classify(&p("W + X^3")).unwrap();
        assert_eq!(r.label, OrbitLabel::BeyondScope);
        assert_eq!(classify(&p("X^2 + Y^2")).unwrap_err(), ClassError::NotSubmersion);
        assert_eq!(classify(&p("1 + X")).unwrap_err(), ClassError::NonzeroConstant);
    }

    #[test]
    fn roots() {
        assert_eq!(rational_root(&Rat::new(4.into(), 9.into()), 2), Some(Rat::new(2.into(), 3.into())));
        assert_eq!(rational_root(&Rat::from_integer(2.into()), 2), None);
        assert_eq!(rational_root(&Rat::from_integer((-8).into()), 3), None);
    }
}
