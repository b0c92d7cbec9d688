use rxsurf::exec::Exec;
use rxsurf::geometry::{analyze, little_resultant, rank_ii, CorankOneJet, GeometryError, SurfaceGeometry, V4};
use rxsurf::heights::{contact_report_with, height_scan, ContactReport, Direction4, HeightError};
use rxsurf::jetalg::{parse_poly, parse_rat, rat_to_f64, Monomial, MonomialOrder, Poly, Rat};
use rxsurf::modelsurface::model;
use rxsurf::normalform::{
    derived_quantities, is_i1, pre_normalize, reduce_to_generic, GenericNormalForm, NormalFormError, PreNormalForm,
    TransformTrace,
};
use rxsurf::rxclass::{
    classify_with, codimension_with, complete_transversal_with, ClassError, ClassifyOptions,
};

use crate::report::{Node, Obj};

/// Process exit codes.
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_UNDECIDED: i32 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn parse(m: impl ToString) -> Self {
        CliError { code: EXIT_PARSE, message: m.to_string() }
    }
    fn pre(m: impl ToString) -> Self {
        CliError { code: EXIT_PRECONDITION, message: m.to_string() }
    }
    fn undecided(m: impl ToString) -> Self {
        CliError { code: EXIT_UNDECIDED, message: m.to_string() }
    }
}

impl From<ClassError> for CliError {
    fn from(e: ClassError) -> Self {
        match e {
            ClassError::Undecided(_) => CliError::undecided(e),
            _ => CliError::pre(e),
        }
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::Jet(_) | GeometryError::ComponentCount(_) => CliError::parse(e),
            _ => CliError::pre(e),
        }
    }
}

impl From<HeightError> for CliError {
    fn from(e: HeightError) -> Self {
        match e {
            HeightError::Undecided(_) => CliError::undecided(e),
            _ => CliError::pre(e),
        }
    }
}

impl From<NormalFormError> for CliError {
    fn from(e: NormalFormError) -> Self {
        match e {
            NormalFormError::Geometry(g) => g.into(),
            _ => CliError::pre(e),
        }
    }
}

pub type CmdResult = Result<Node, CliError>;

fn germ(text: &str) -> Result<Poly, CliError> {
    parse_poly(text, 4).map_err(CliError::parse)
}

pub fn surface(text: &str, trunc: u32) -> Result<CorankOneJet, CliError> {
    Ok(CorankOneJet::parse(text, trunc)?)
}

fn has_constant(g: &Poly) -> bool {
    g.constant_term() != Rat::from_integer(0.into())
}

fn monomials(ms: &[Monomial]) -> Node {
    Node::texts(ms.iter())
}

fn rats(v: &[Rat]) -> Node {
    Node::List(v.iter().map(Node::exact).collect())
}

fn v4(v: &V4) -> Node {
    Node::floats(v)
}

pub fn verify_derlog() -> CmdResult {
    let m = model();
    let mut fields = Vec::new();
    let (mut checks, mut lifts) = (0usize, 0usize);
    for xi in &m.fields {
        let t = m.tangency_checks(xi);
        checks += t.iter().filter(|b| **b).count();
        let mut o = Obj::new()
            .with("label", Node::text(xi.label))
            .with("field", Node::text(xi))
            .with("tangency", Node::List(t.iter().map(|b| Node::Bool(*b)).collect()));
        match m.lift_vector_field(xi) {
            Ok(w) => {
                let ok = w.verify(xi);
                lifts += usize::from(ok);
                o.push("lift", Obj::new().with("a", Node::text(&w.a)).with("b", Node::text(&w.b)).node());
                o.push("lift_verified", Node::Bool(ok));
            }
            Err(e) => o.push("lift_error", Node::text(e)),
        }
        fields.push(o.node());
    }
    let total = 4 * m.fields.len();
    let report = Obj::new()
        .with("fields", Node::List(fields))
        .with("tangency_checks_passed", Node::exact(checks))
        .with("tangency_checks_total", Node::exact(total))
        .with("lifts_verified", Node::exact(lifts))
        .node();
    if checks == total && lifts == m.fields.len() {
        Ok(report)
    } else {
        Err(CliError::pre(format!("derlog verification failed: {checks}/{total} checks, {lifts} lifts")))
    }
}

pub fn classify(text: &str, trunc: u32, order: MonomialOrder) -> CmdResult {
    let g = germ(text)?;
    let r = classify_with(&g, ClassifyOptions { trunc, order, ..ClassifyOptions::default() })?;
    let mut o = Obj::new()
        .with("input", Node::text(&r.input))
        .with("label", Node::text(r.label.id()))
        .with("row", Node::text(r.label.row()))
        .with("linear_class", Node::text(&r.linear_class));
    if let Some(nf) = &r.normal_form {
        o.push("normal_form", Node::text(nf));
    }
    match &r.codim {
        Some(c) => o.push("codim", Node::exact(c.value)),
        None => o.push("codim", Node::text("unknown")),
    }
    match r.determinacy_degree {
        Some(d) => o.push("determinacy_degree", Node::exact(d)),
        None => o.push("determinacy_degree", Node::text("not certified")),
    }
    if let Some(c) = r.criterion {
        o.push("determinacy_criterion", Node::text(format!("{c:?}")));
    }
    o.push("versal_monomials", monomials(&r.versal_monomials));
    o.push("trace", Node::texts(r.trace.iter()));
    o.push("rational_jet", Node::text(&r.rational_jet));
    if !r.notes.is_empty() {
        o.push("notes", Node::texts(r.notes.iter()));
    }
    o.push("trunc", Node::exact(r.trunc));
    Ok(o.node())
}

pub fn transversal(text: &str, k: u32, order: MonomialOrder) -> CmdResult {
    let g = germ(text)?;
    if has_constant(&g) {
        return Err(CliError::pre("germ has a nonzero constant term"));
    }
    let t = complete_transversal_with(&g, k, order);
    Ok(Obj::new().with("germ", Node::text(&g)).with("k", Node::exact(k)).with("transversal", monomials(&t)).node())
}

pub fn codim(text: &str, trunc: u32, order: MonomialOrder, exec: Exec) -> CmdResult {
    let g = germ(text)?;
    if has_constant(&g) {
        return Err(CliError::pre("germ has a nonzero constant term"));
    }
    let c = codimension_with(&g, trunc, order, exec)?;
    if !c.stable && !c.certified {
        return Err(CliError::undecided(format!("codimension still growing at truncation {trunc} ({})", c.value)));
    }
    Ok(Obj::new()
        .with("germ", Node::text(&g))
        .with("codim", Node::exact(c.value))
        .with("e4_codim", Node::exact(c.e4_value))
        .with("certified", Node::Bool(c.certified))
        .with("stable", Node::Bool(c.stable))
        .with("trunc", Node::exact(c.trunc))
        .node())
}

/// η(y) = C + B y + A y², componentwise in y.
fn parabola_components(geo: &SurfaceGeometry) -> Node {
    let p = &geo.parabola;
    let comp = |i: usize| -> String {
        match &p.exact {
            Some([a, b, c]) => {
                let y = |k: u32| Poly::term(Monomial::new(&[0, k]), Rat::from_integer(1.into()));
                let q = &(&y(0).scale(&c[i]) + &y(1).scale(&b[i])) + &y(2).scale(&a[i]);
                q.to_string()
            }
            None => {
                let terms: Vec<String> = [(p.c[i], ""), (p.b[i], "*y"), (p.a[i], "*y^2")]
                    .iter()
                    .filter(|(v, _)| v.abs() > 1e-12)
                    .map(|(v, s)| format!("{}{s}", crate::report::fmt_float(*v)))
                    .collect();
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join(" + ").replace("+ -", "- ")
                }
            }
        }
    };
    Node::text(format!("({})", (0..4).map(comp).collect::<Vec<_>>().join(", ")))
}

pub fn geometry_node(j: &CorankOneJet) -> Node {
    let geo = analyze(j);
    let mut forms = Obj::new();
    match &geo.forms.exact {
        Some(ex) => {
            forms.push("E", Node::exact(&ex.e));
            forms.push("F", Node::exact(&ex.f));
            forms.push("G", Node::exact(&ex.g));
            forms.push("II", Node::List(ex.ii.iter().map(|r| rats(r)).collect()));
        }
        None => {
            forms.push("E", Node::float(geo.forms.e));
            forms.push("F", Node::float(geo.forms.f));
            forms.push("G", Node::float(geo.forms.g));
            forms.push("II", Node::List(geo.forms.ii.iter().map(|r| Node::floats(r)).collect()));
        }
    }
    let p = &geo.parabola;
    let mut par = Obj::new().with("eta", parabola_components(&geo)).with("degeneracy", Node::text(p.degeneracy));
    if let Some(r) = p.radial {
        par.push("radial", Node::Bool(r));
    }
    let (rank, stratum) = rank_ii(j);
    let ii = &geo.forms.ii;
    let alpha = [ii[0], ii[1]];
    let mut o = Obj::new()
        .with("surface", Node::text(j))
        .with("frame", {
            let mut f = Obj::new()
                .with("rotation", Node::List(geo.frame.rotation.iter().map(|r| Node::floats(r)).collect()))
                .with("tangent", v4(&geo.frame.tangent))
                .with("normals", Node::List(geo.frame.normals.iter().map(v4).collect()));
            if geo.frame.ep_chosen {
                f.push("ep_chosen", Node::Bool(true));
            }
            f.node()
        })
        .with("fundamental_forms", forms.node())
        .with("curvature_parabola", par.node());
    match geo.kappa_u {
        Some(k) => o.push("kappa_u", Node::float(k)),
        None => o.push("kappa_u", Node::text("undefined")),
    }
    o.push("point_type", Node::text(geo.point_type.kind));
    o.push("binormal_count", Node::text(geo.point_type.binormal_count));
    o.push("asymptotic_directions", Node::List(geo.directions.asymptotic.iter().map(|d| Node::floats(d)).collect()));
    o.push("binormal_directions", Node::List(geo.directions.binormal.iter().map(v4).collect()));
    o.push("rank_ii", Node::exact(rank));
    o.push("stratum", Node::text(stratum));
    o.push("little_resultant", Node::float(little_resultant(&alpha)));
    if let Some(c) = &geo.tangent_cone {
        o.push("tangent_cone", Node::List(c.iter().map(v4).collect()));
    }
    o.node()
}

pub fn geometry(text: &str, trunc: u32) -> CmdResult {
    Ok(geometry_node(&surface(text, trunc)?))
}

pub fn parse_direction(text: &str) -> Result<[f64; 4], CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(CliError::parse(format!("direction needs 4 components, got {}", parts.len())));
    }
    let mut v = [0.0; 4];
    for (i, p) in parts.iter().enumerate() {
        v[i] = match p.parse::<f64>() {
            Ok(x) => x,
            Err(_) => rat_to_f64(&parse_rat(p).map_err(CliError::parse)?),
        };
    }
    Ok(v)
}

fn contact_node(r: &ContactReport) -> Node {
    let mut cert = Obj::new().with("is_binormal", Node::Bool(r.certificate.is_binormal));
    if let Some(t) = r.certificate.tau_value {
        cert.push("tau_value", Node::float(t));
    }
    if let Some(k) = r.certificate.kappa_u {
        cert.push("kappa_u", Node::float(k));
    }
    Obj::new()
        .with("v", Node::floats(r.v.as_array()))
        .with("singularity", Node::text(r.singularity))
        .with("model_submersion", Node::text(r.model_submersion))
        .with(
            "incidence",
            Obj::new()
                .with("contains_tangent", Node::Bool(r.incidence.contains_tangent))
                .with("contains_ep", Node::Bool(r.incidence.contains_ep))
                .with("contains_cone", Node::Bool(r.incidence.contains_cone))
                .node(),
        )
        .with("certificate", cert.node())
        .node()
}

pub fn height(text: &str, v: &str, trunc: u32) -> CmdResult {
    let j = surface(text, trunc)?;
    let v = Direction4::new(parse_direction(v)?)?;
    let geo = analyze(&j);
    Ok(contact_node(&contact_report_with(&j, &geo, &v)?))
}

pub fn height_scan_cmd(text: &str, grid: usize, trunc: u32, exec: Exec) -> CmdResult {
    let j = surface(text, trunc)?;
    let s = height_scan(&j, grid, exec)?;
    let rows: Vec<Node> = s
        .structured
        .iter()
        .map(|r| {
            Obj::new()
                .with("v", Node::floats(r.v.as_array()))
                .with("singularity", Node::text(r.singularity))
                .with("model_submersion", Node::text(r.model_submersion))
                .with("binormal", Node::Bool(r.certificate.is_binormal))
                .node()
        })
        .collect();
    let mut summary = Obj::new();
    for (k, n) in &s.grid_summary {
        summary.push(&k.to_string(), Node::exact(n));
    }
    Ok(Obj::new()
        .with("surface", Node::text(&j))
        .with("binormal_v2", Node::floats(&s.binormal_v2))
        .with("structured", Node::List(rows))
        .with("grid_points", Node::exact(s.grid.len()))
        .with("grid_summary", summary.node())
        .node())
}

fn generic_node(g: &GenericNormalForm) -> Node {
    let mut o = Obj::new();
    match &g.exact {
        Some(ps) => o.push("components", Node::texts(ps.iter())),
        None => o.push("components", Node::texts(g.components.iter())),
    }
    let b = &g.b;
    o.push(
        "b",
        Obj::new()
            .with("b20", Node::float(b.b20))
            .with("b11", Node::float(b.b11))
            .with("b02", Node::float(b.b02))
            .with("b30", Node::float(b.b30))
            .with("b21", Node::float(b.b21))
            .with("b12", Node::float(b.b12))
            .with("b03", Node::float(b.b03))
            .node(),
    );
    o.push(
        "c",
        Obj::new()
            .with("c20", Node::float(g.c20))
            .with("c11", Node::float(g.c11))
            .with("c30", Node::float(g.c30))
            .with("c21", Node::float(g.c21))
            .with("c12", Node::float(g.c12))
            .with("c03", Node::float(g.c03))
            .node(),
    );
    o.push("second_y3", Node::float(g.second_y3()));
    o.push("h", Node::text(&g.h));
    o.node()
}

fn trace_node(t: &TransformTrace) -> Node {
    Node::texts(t.steps.iter())
}

pub fn normal_form(text: &str, trunc: u32) -> CmdResult {
    let j = surface(text, trunc)?;
    let trunc = j.trunc();
    let d = is_i1(&j);
    if !d.is_i1 {
        return Err(CliError::pre(format!("not I1: {}", d.reason)));
    }
    let exact_pre = j.exact().and_then(|ps| PreNormalForm::from_polys(ps, trunc).ok());
    let (pre, pre_trace, source) = match exact_pre {
        Some(p) => (p, TransformTrace::default(), "input already in pre-normal shape"),
        None => {
            let (p, t) = pre_normalize(&j)?;
            (p, t, "pre-normalized in floating point")
        }
    };
    let (g, trace) = reduce_to_generic(&pre)?;
    let dq = derived_quantities(&g);
    Ok(Obj::new()
        .with("surface", Node::text(&j))
        .with("pre_normal_form", Node::texts(pre.polys().iter()))
        .with("pre_normal_source", Node::text(source))
        .with("a03", Node::exact(&pre.a03))
        .with("pre_trace", trace_node(&pre_trace))
        .with("generic_normal_form", generic_node(&g))
        .with("trace", trace_node(&trace))
        .with("trace_exact", Node::Bool(trace.is_exact()))
        .with(
            "derived",
            Obj::new()
                .with("E_p", Node::List(dq.ep.iter().map(v4).collect()))
                .with("E_p_is_YZ_plane", Node::Bool(dq.ep_is_yz_plane))
                .with("tangent_cone", Node::List(dq.cone.iter().map(v4).collect()))
                .with("kappa_u", Node::float(dq.kappa_u))
                .node(),
        )
        .node())
}
