use std::collections::HashMap;

use num::{One, Zero};

use crate::exec::Exec;
use crate::jetalg::{count_of_degree, quotient_complement, GradedSpan, LinearSpan, Monomial, MonomialOrder, Poly, Rat};
use crate::modelsurface::model;

use super::ClassError;

/// Germ g: (R⁴,0) → (R,0), kept as a jet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmersionGerm {
    pub jet: Poly,
    pub trunc: u32,
}

impl SubmersionGerm {
    pub fn new(g: Poly, trunc: u32) -> Result<Self, ClassError> {
        if g.nvars() != 4 {
            return Err(ClassError::WrongVariables(g.nvars()));
        }
        if !g.constant_term().is_zero() {
            return Err(ClassError::NonzeroConstant);
        }
        Ok(SubmersionGerm { jet: g.truncate(trunc), trunc })
    }

    pub fn is_submersion(&self) -> bool {
        !self.jet.homogeneous(1).is_zero()
    }
}

/// Graded model of Θ(X)·g or Θ₁(X)·g, truncated at degree D.
#[derive(Clone, Debug)]
pub struct TangentSpaceModel {
    pub space: GradedSpan,
    pub restricted: bool,
    pub germ: Poly,
    pub trunc: u32,
    /// Whether any generator has a nonzero constant term (never, since all
    /// fields vanish at the origin; kept for the versality bookkeeping).
    pub has_constant: bool,
}

/// A tagged generator m·ξᵢ(g).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub field: usize,
    pub multiplier: Monomial,
}

/// Fields whose linear part is nilpotent, usable bare inside the
/// classification without any exponential scaling.
pub const NILPOTENT_BARE: [usize; 5] = [2, 4, 5, 6, 7];

pub(crate) fn field_images(g: &Poly, trunc: u32) -> Vec<Poly> {
    model().fields.iter().map(|xi| xi.apply_trunc(g, trunc)).collect()
}

/// Enumerate the generators m·ξᵢ(g) up to degree `trunc`. With `restricted`,
/// ξ₁..ξ₇ need a multiplier in the maximal ideal. `bare` lists fields that are
/// additionally allowed with multiplier 1 even when restricted.
pub(crate) fn generators(g: &Poly, trunc: u32, restricted: bool, bare: &[usize]) -> Vec<(Generator, Poly)> {
    let images = field_images(g, trunc);
    let mut out = Vec::new();
    for (idx, base) in images.iter().enumerate() {
        let i = idx + 1;
        if base.is_zero() {
            continue;
        }
        let ord = base.order().max(0) as u32;
        if ord > trunc {
            continue;
        }
        let min = if restricted && i <= 7 && !bare.contains(&i) { 1 } else { 0 };
        for d in min..=(trunc - ord) {
            for m in Monomial::of_degree(4, d) {
                out.push((Generator { field: i, multiplier: m }, base.mul_monomial(&m, &Rat::one()).truncate(trunc)));
            }
        }
    }
    out
}

pub fn tangent_space(g: &Poly, trunc: u32, restricted: bool) -> TangentSpaceModel {
    tangent_space_with(g, trunc, restricted, MonomialOrder::default(), Exec::default())
}

pub fn tangent_space_with(g: &Poly, trunc: u32, restricted: bool, order: MonomialOrder, exec: Exec) -> TangentSpaceModel {
    let germ = g.truncate(trunc);
    let images = Exec::Sequential.map(&model().fields, |xi| xi.apply_trunc(&germ, trunc));
    let mut jobs: Vec<(usize, u32)> = Vec::new();
    for (idx, base) in images.iter().enumerate() {
        if base.is_zero() {
            continue;
        }
        let ord = base.order().max(0) as u32;
        let min = if restricted && idx < 7 { 1 } else { 0 };
        for d in min..=trunc.saturating_sub(ord) {
            jobs.push((idx, d));
        }
    }
    // building m·ξᵢ(g) rows is embarrassingly parallel; the echelon insert is not
    let batches: Vec<Vec<Poly>> = exec.map(&jobs, |&(idx, d)| {
        Monomial::of_degree(4, d).iter().map(|m| images[idx].mul_monomial(m, &Rat::one()).truncate(trunc)).collect()
    });
    let mut space = GradedSpan::new(4, 1, trunc, order);
    let mut rows: Vec<Poly> = batches.into_iter().flatten().filter(|p| !p.is_zero()).collect();
    // short rows first keeps fill-in low
    rows.sort_by_key(|p| (std::cmp::Reverse(p.order()), p.len()));
    for r in &rows {
        if space.is_full() {
            break;
        }
        space.insert(r);
    }
    let has_constant = rows.iter().any(|r| !r.constant_term().is_zero());
    TangentSpaceModel { space, restricted, germ, trunc, has_constant }
}

/// Degree-(k+1) monomials completing LR₁(X)·g there.
pub fn complete_transversal(g: &Poly, k: u32) -> Vec<Monomial> {
    complete_transversal_with(g, k, MonomialOrder::default())
}

pub fn complete_transversal_with(g: &Poly, k: u32, order: MonomialOrder) -> Vec<Monomial> {
    let t = tangent_space_with(g, k + 1, true, order, Exec::Sequential);
    t.space.free_monomials_in_degree(k + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeterminacyCriterion {
    /// Θ₁(X)·g + M^{k+2} ⊃ M^{k+1}
    Restricted,
    /// Θ(X)·g + M^{k+1} ⊃ M^k
    Unrestricted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Determinacy {
    pub holds: bool,
    pub criterion: Option<DeterminacyCriterion>,
}

/// Sufficient test for k-R(X)-determinacy.
pub fn is_k_determined(g: &Poly, k: u32) -> Determinacy {
    is_k_determined_with(g, k, MonomialOrder::default())
}

pub fn is_k_determined_with(g: &Poly, k: u32, order: MonomialOrder) -> Determinacy {
    let t1 = tangent_space_with(g, k + 1, true, order, Exec::Sequential);
    if t1.space.rank_in_degree(k + 1) == count_of_degree(4, k + 1) {
        return Determinacy { holds: true, criterion: Some(DeterminacyCriterion::Restricted) };
    }
    let t = tangent_space_with(g, k, false, order, Exec::Sequential);
    if t.space.rank_in_degree(k) == count_of_degree(4, k) {
        return Determinacy { holds: true, criterion: Some(DeterminacyCriterion::Unrestricted) };
    }
    Determinacy { holds: false, criterion: None }
}

/// Smallest certified determinacy degree up to `max`.
pub fn determinacy_degree(g: &Poly, max: u32) -> Option<(u32, DeterminacyCriterion)> {
    (1..=max).find_map(|k| {
        let d = is_k_determined(g, k);
        d.criterion.map(|c| (k, c))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codimension {
    /// dim M₄ / Θ(X)·g, truncated at D.
    pub value: usize,
    /// dim E₄ / Θ(X)·g, truncated at D.
    pub e4_value: usize,
    /// Values at D-1 and D agree.
    pub stable: bool,
    /// M^D lies in the tangent space, so by Nakayama the value is exact.
    pub certified: bool,
    pub trunc: u32,
}

pub fn codimension(g: &Poly, trunc: u32) -> Result<Codimension, ClassError> {
    codimension_with(g, trunc, MonomialOrder::default(), Exec::default())
}

pub fn codimension_with(g: &Poly, trunc: u32, order: MonomialOrder, exec: Exec) -> Result<Codimension, ClassError> {
    if trunc < 2 {
        return Err(ClassError::TruncationTooLow(trunc));
    }
    let t = tangent_space_with(g, trunc, false, order, exec);
    let value_at = |d: u32| -> usize {
        let total: usize = (1..=d).map(|e| count_of_degree(4, e)).sum();
        let rank: usize = (1..=d).map(|e| t.space.rank_in_degree(e)).sum();
        total - rank
    };
    let value = t.space.ambient_dim() - t.space.rank();
    // the rows with pivot in degree ≤ D-1 give the image of T in J^{D-1}
    let prev = value_at(trunc - 1);
    let certified = t.space.rank_in_degree(trunc) == count_of_degree(4, trunc);
    let e4_value = value + usize::from(!t.has_constant);
    Ok(Codimension { value, e4_value, stable: prev == value, certified, trunc })
}

/// Does Θ(X)·g + R{1, unfolding monomials} fill E₄ (up to degree D)?
pub fn versal_check(g: &Poly, unfolding: &[Poly], trunc: u32) -> bool {
    let t = tangent_space(g, trunc, false);
    let mut s = GradedSpan::new(4, 0, trunc, MonomialOrder::default());
    for r in t.space.basis() {
        s.insert(&r);
    }
    s.insert(&Poly::one(4));
    for u in unfolding {
        s.insert(u);
    }
    s.is_full()
}

/// Sufficient test for k-R(X)-triviality of F = g + tφ: look for coefficients
/// polynomial in t, of degree at most `tdeg`, with
/// φ = Σ a_{i,m,j} tʲ m ξᵢ(F) modulo M₄^{k+1}, as an identity in t.
pub fn triviality_check(g: &Poly, phi: &Poly, k: u32, tdeg: u32) -> bool {
    let g = g.truncate(k);
    let phi = phi.truncate(k);
    if !g.constant_term().is_zero() || !phi.constant_term().is_zero() {
        return false;
    }
    let mut cols: HashMap<(u32, Monomial), usize> = HashMap::new();
    let mut span = LinearSpan::new();
    for xi in &model().fields {
        let a = xi.apply_trunc(&g, k);
        let b = xi.apply_trunc(&phi, k);
        if a.is_zero() && b.is_zero() {
            continue;
        }
        // every field vanishes at the origin, so multipliers stop at degree k-1
        for d in 0..k {
            for m in Monomial::of_degree(4, d) {
                let am = a.mul_monomial(&m, &Rat::one()).truncate(k);
                let bm = b.mul_monomial(&m, &Rat::one()).truncate(k);
                for j in 0..=tdeg {
                    let mut v = Vec::new();
                    encode(&am, j, &mut cols, &mut v);
                    encode(&bm, j + 1, &mut cols, &mut v);
                    if !v.is_empty() {
                        span.insert(&v);
                    }
                }
            }
        }
    }
    let mut target = Vec::new();
    encode(&phi, 0, &mut cols, &mut target);
    span.contains(&target)
}

fn encode(p: &Poly, tpow: u32, cols: &mut HashMap<(u32, Monomial), usize>, out: &mut Vec<(usize, Rat)>) {
    for (m, c) in p.terms() {
        let n = cols.len();
        let i = *cols.entry((tpow, *m)).or_insert(n);
        out.push((i, c.clone()));
    }
}

/// Greedy complement of Θ(X)·g in M₄, i.e. a versal unfolding basis.
pub fn versal_monomials(g: &Poly, trunc: u32, order: MonomialOrder) -> Vec<Monomial> {
    let t = tangent_space_with(g, trunc, false, order, Exec::Sequential);
    let mut out = quotient_complement(&t.space, 1, trunc).expect("range inside");
    out.sort_by(|a, b| order.cmp(b, a));
    out
}
