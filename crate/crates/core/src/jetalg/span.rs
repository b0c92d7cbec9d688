use std::collections::{BTreeMap, HashMap};

use num::{One, Zero};

use super::monomial::{count_of_degree, Monomial, MonomialOrder};
use super::poly::{Jet, Poly};
use super::{JetError, Rat};

type SparseVec = BTreeMap<usize, Rat>;

#[derive(Clone, Debug)]
struct Row {
    entries: Vec<(usize, Rat)>,
    combo: Vec<(usize, Rat)>,
}

/// Echelon basis of a span of polynomials, restricted to monomials whose degree
/// lies in `[lo, hi]`.
///
/// Columns run by ascending degree and, inside one degree, by descending
/// monomial order. A row's pivot is its first nonzero column, so the rows whose
/// pivot sits in degree `d` span the part of the space inside `M^d`, read
/// modulo `M^{d+1}`. Optionally each row remembers which tagged generators it
/// came from.
#[derive(Clone, Debug)]
pub struct GradedSpan {
    nvars: usize,
    lo: u32,
    hi: u32,
    order: MonomialOrder,
    columns: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    deg_start: Vec<usize>,
    rows: BTreeMap<usize, Row>,
    track: bool,
}

impl GradedSpan {
    pub fn new(nvars: usize, lo: u32, hi: u32, order: MonomialOrder) -> Self {
        let mut columns = Vec::new();
        let mut deg_start = Vec::new();
        for d in lo..=hi {
            deg_start.push(columns.len());
            let mut ms = Monomial::of_degree(nvars, d);
            ms.sort_by(|a, b| order.cmp(b, a));
            columns.extend(ms);
        }
        deg_start.push(columns.len());
        let index = columns.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        GradedSpan { nvars, lo, hi, order, columns, index, deg_start, rows: BTreeMap::new(), track: false }
    }

    /// Same as `new`, but rows record their provenance over generator tags.
    pub fn tracked(nvars: usize, lo: u32, hi: u32, order: MonomialOrder) -> Self {
        let mut s = Self::new(nvars, lo, hi, order);
        s.track = true;
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree_range(&self) -> (u32, u32) {
        (self.lo, self.hi)
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of monomials in the ambient range.
    pub fn ambient_dim(&self) -> usize {
        self.columns.len()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient_dim()
    }

    fn to_vec(&self, p: &Poly) -> SparseVec {
        p.terms().filter_map(|(m, c)| self.index.get(m).map(|&i| (i, c.clone()))).collect()
    }

    fn to_poly(&self, v: &[(usize, Rat)]) -> Poly {
        Poly::from_terms(self.nvars, v.iter().map(|(i, c)| (self.columns[*i], c.clone())))
    }

    fn degree_of_col(&self, c: usize) -> u32 {
        self.columns[c].degree()
    }

    pub fn insert(&mut self, p: &Poly) -> bool {
        self.insert_tagged(p, None)
    }

    /// Add a generator; returns true when the rank grows.
    pub fn insert_tagged(&mut self, p: &Poly, tag: Option<usize>) -> bool {
        assert_eq!(p.nvars(), self.nvars, "variable count mismatch");
        let mut v = self.to_vec(p);
        let mut w = SparseVec::new();
        while let Some((&lead, _)) = v.iter().next() {
            match self.rows.get(&lead) {
                Some(row) => {
                    let f = v[&lead].clone();
                    axpy(&mut v, &f, &row.entries);
                    if self.track {
                        axpy(&mut w, &-f, &row.combo);
                    }
                }
                None => break,
            }
        }
        let Some((&lead, c)) = v.iter().next() else {
            return false;
        };
        let inv = Rat::one() / c;
        let entries: Vec<(usize, Rat)> = v.into_iter().map(|(i, x)| (i, x * &inv)).collect();
        let combo = if self.track {
            // row = generator - sum w_j gen_j
            let mut cmb: SparseVec = w.into_iter().map(|(i, x)| (i, -x)).collect();
            if let Some(t) = tag {
                let e = cmb.entry(t).or_insert_with(Rat::zero);
                *e += Rat::one();
                if e.is_zero() {
                    cmb.remove(&t);
                }
            }
            cmb.into_iter().map(|(i, x)| (i, x * &inv)).collect()
        } else {
            Vec::new()
        };
        self.rows.insert(lead, Row { entries, combo });
        true
    }

    /// Sweep every pivot column out of `p`. Returns the remainder, which lives
    /// on non-pivot columns, and the combination of tagged generators that was
    /// subtracted: `p = remainder + sum combo[t] * gen[t]` on the range.
    pub fn reduce(&self, p: &Poly) -> (Poly, BTreeMap<usize, Rat>) {
        let mut v = self.to_vec(p);
        let mut w = SparseVec::new();
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).find(|(c, _)| self.rows.contains_key(c)).map(|(c, x)| (*c, x.clone()));
            let Some((c, f)) = next else { break };
            let row = &self.rows[&c];
            axpy(&mut v, &f, &row.entries);
            if self.track {
                axpy(&mut w, &-f, &row.combo);
            }
            cursor = c + 1;
        }
        let rem: Vec<(usize, Rat)> = v.into_iter().collect();
        (self.to_poly(&rem), w)
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.reduce(p).0.is_zero()
    }

    /// Membership for a jet; the jet must be known up to the top of the range.
    pub fn member(&self, j: &Jet) -> Result<bool, JetError> {
        if j.truncation() < self.hi {
            return Err(JetError::RangeMismatch {
                need: (self.lo, self.hi),
                have: (0, j.truncation()),
            });
        }
        Ok(self.contains(j.poly()))
    }

    /// Number of pivots in degree `d`: the dimension of `(span ∩ M^d) / M^{d+1}`.
    pub fn rank_in_degree(&self, d: u32) -> usize {
        if d < self.lo || d > self.hi {
            return 0;
        }
        let k = (d - self.lo) as usize;
        self.rows.range(self.deg_start[k]..self.deg_start[k + 1]).count()
    }

    /// Rows with pivot in degree `d`, projected to degree `d`, with provenance.
    pub fn rows_in_degree(&self, d: u32) -> Vec<(Poly, Vec<(usize, Rat)>)> {
        if d < self.lo || d > self.hi {
            return Vec::new();
        }
        let k = (d - self.lo) as usize;
        self.rows
            .range(self.deg_start[k]..self.deg_start[k + 1])
            .map(|(_, r)| {
                let proj: Vec<(usize, Rat)> =
                    r.entries.iter().filter(|(c, _)| self.degree_of_col(*c) == d).cloned().collect();
                (self.to_poly(&proj), r.combo.clone())
            })
            .collect()
    }

    /// Monomials of degree `d` that carry no pivot. Together they span a
    /// complement of the degree-`d` slice; this agrees with the greedy
    /// smallest-first choice because columns inside a degree run largest first.
    pub fn free_monomials_in_degree(&self, d: u32) -> Vec<Monomial> {
        if d < self.lo || d > self.hi {
            return Vec::new();
        }
        let k = (d - self.lo) as usize;
        let mut out: Vec<Monomial> =
            (self.deg_start[k]..self.deg_start[k + 1]).filter(|c| !self.rows.contains_key(c)).map(|c| self.columns[c]).collect();
        out.sort_by(|a, b| self.order.cmp(a, b));
        out
    }

    /// Reduced row-echelon basis.
    pub fn basis(&self) -> Vec<Poly> {
        let mut reduced: BTreeMap<usize, Vec<(usize, Rat)>> = BTreeMap::new();
        for (&p, row) in self.rows.iter().rev() {
            let mut v: SparseVec = row.entries.iter().cloned().collect();
            let later: Vec<usize> = v.keys().copied().filter(|c| *c != p && reduced.contains_key(c)).collect();
            for c in later {
                if let Some(f) = v.get(&c).cloned() {
                    axpy(&mut v, &f, &reduced[&c]);
                }
            }
            reduced.insert(p, v.into_iter().collect());
        }
        reduced.values().map(|r| self.to_poly(r)).collect()
    }

    /// Monomials counted in degree `d` of the ambient range.
    pub fn ambient_in_degree(&self, d: u32) -> usize {
        if d < self.lo || d > self.hi {
            0
        } else {
            count_of_degree(self.nvars, d)
        }
    }
}

/// Echelon span over plain integer column indices, for systems whose columns
/// are not single monomials (e.g. monomial times a power of a parameter).
#[derive(Clone, Debug, Default)]
pub struct LinearSpan {
    rows: BTreeMap<usize, Vec<(usize, Rat)>>,
}

impl LinearSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce_vec(&self, mut v: SparseVec) -> SparseVec {
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).find(|(c, _)| self.rows.contains_key(c)).map(|(c, x)| (*c, x.clone()));
            let Some((c, f)) = next else { break };
            axpy(&mut v, &f, &self.rows[&c]);
            cursor = c + 1;
        }
        v
    }

    pub fn insert(&mut self, v: &[(usize, Rat)]) -> bool {
        let mut w: SparseVec = SparseVec::new();
        for (c, x) in v {
            let e = w.entry(*c).or_insert_with(Rat::zero);
            *e += x;
            if e.is_zero() {
                w.remove(c);
            }
        }
        let w = self.reduce_vec(w);
        let Some((&lead, c)) = w.iter().next() else { return false };
        let inv = Rat::one() / c;
        self.rows.insert(lead, w.into_iter().map(|(i, x)| (i, x * &inv)).collect());
        true
    }

    pub fn contains(&self, v: &[(usize, Rat)]) -> bool {
        let mut w: SparseVec = SparseVec::new();
        for (c, x) in v {
            let e = w.entry(*c).or_insert_with(Rat::zero);
            *e += x;
            if e.is_zero() {
                w.remove(c);
            }
        }
        self.reduce_vec(w).is_empty()
    }
}

/// v -= f * row
fn axpy(v: &mut SparseVec, f: &Rat, row: &[(usize, Rat)]) {
    for (c, x) in row {
        let e = v.entry(*c).or_insert_with(Rat::zero);
        *e -= f * x;
        if e.is_zero() {
            v.remove(c);
        }
    }
}

/// Span of jets, restricted to degrees `[lo, hi]`, in the default order.
pub fn span_of(jets: &[Jet], lo: u32, hi: u32) -> GradedSpan {
    span_of_with(jets, lo, hi, MonomialOrder::default())
}

pub fn span_of_with(jets: &[Jet], lo: u32, hi: u32, order: MonomialOrder) -> GradedSpan {
    let n = jets.first().map(|j| j.nvars()).unwrap_or(4);
    let mut s = GradedSpan::new(n, lo, hi, order);
    for j in jets {
        s.insert(j.poly());
    }
    s
}

/// Greedy complement: walk the monomials of `[lo, hi]` in ascending order and
/// keep those that enlarge the span.
pub fn quotient_complement(sub: &GradedSpan, lo: u32, hi: u32) -> Result<Vec<Monomial>, JetError> {
    let (slo, shi) = sub.degree_range();
    if lo < slo || hi > shi {
        return Err(JetError::RangeMismatch { need: (lo, hi), have: (slo, shi) });
    }
    let mut work = sub.clone();
    work.track = false;
    let mut out = Vec::new();
    for m in Monomial::in_range(sub.nvars(), lo, hi, sub.order()) {
        if work.insert(&Poly::term(m, Rat::one())) {
            out.push(m);
        }
    }
    Ok(out)
}
