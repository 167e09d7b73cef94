//! Homogeneous Buchberger with the Gebauer–Möller pair update.

use std::collections::BTreeMap;

use super::vector::{Accum, Ctx, LeadTable, MTerm, ModVec};
use crate::error::{Error, Result};
use crate::ring::Monomial;

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
}

/// Output of a run: the reduced basis and which inputs were minimal generators.
pub(crate) struct BuchbergerRun {
    pub basis: Vec<ModVec>,
    /// Indices of input generators that were not in the span of
    /// lower-degree data when their degree was processed.
    pub minimal: Vec<usize>,
}

/// Fully reduces the accumulated vector against the basis; the remainder
/// has no term divisible by an active lead.
pub(crate) fn reduce_accum(ctx: &Ctx, acc: &mut Accum, basis: &[ModVec], leads: &LeadTable) -> ModVec {
    let mut rem = Vec::new();
    while let Some(t) = acc.pop_max() {
        match leads.find(&t.mon, t.comp) {
            Some(r) => {
                let g = &basis[r];
                let q = g.terms[0].mon.quotient_of(&t.mon);
                let c = ctx.field.neg(ctx.field.mul(t.coef, ctx.field.inv(g.terms[0].coef).expect("nonzero lead")));
                acc.add_scaled(ctx, &g.terms[1..], &q, c);
            }
            None => rem.push(t),
        }
    }
    ModVec { terms: rem }
}

pub(crate) fn reduce_vec(ctx: &Ctx, f: &ModVec, basis: &[ModVec], leads: &LeadTable) -> ModVec {
    let mut acc = Accum::default();
    for t in &f.terms {
        acc.add_term(ctx, t.mon, t.comp, t.coef);
    }
    reduce_accum(ctx, &mut acc, basis, leads)
}

fn spoly(ctx: &Ctx, a: &ModVec, b: &ModVec, lcm: &Monomial) -> Accum {
    let mut acc = Accum::default();
    let la = a.terms[0].mon.quotient_of(lcm);
    let lb = b.terms[0].mon.quotient_of(lcm);
    // both inputs are monic; the leading terms cancel
    acc.add_scaled(ctx, &a.terms[1..], &la, 1);
    acc.add_scaled(ctx, &b.terms[1..], &lb, ctx.field.neg(1));
    acc
}

struct State<'a> {
    ctx: &'a Ctx,
    ideal: bool,
    basis: Vec<ModVec>,
    active: Vec<bool>,
    leads: LeadTable,
    queue: BTreeMap<i64, Vec<Pair>>,
}

impl<'a> State<'a> {
    fn lead(&self, i: usize) -> (Monomial, u32) {
        let t = &self.basis[i].terms[0];
        (t.mon, t.comp)
    }

    fn pair_degree(&self, lcm: &Monomial, comp: u32) -> i64 {
        self.ctx.term_degree(lcm, comp)
    }

    /// Inserts a new monic, reduced element and updates the pair set.
    fn insert(&mut self, h: ModVec) {
        let n = self.basis.len();
        let (hm, hc) = (h.terms[0].mon, h.terms[0].comp);

        // chain criterion on the existing pairs
        for pairs in self.queue.values_mut() {
            pairs.retain(|p| {
                if p.comp != hc || !hm.divides(&p.lcm) {
                    return true;
                }
                let li = hm.lcm(&self.basis[p.i].terms[0].mon);
                let lj = hm.lcm(&self.basis[p.j].terms[0].mon);
                li == p.lcm || lj == p.lcm
            });
        }
        self.queue.retain(|_, v| !v.is_empty());

        // candidate pairs with h
        let mut cands: Vec<(usize, Monomial, bool)> = Vec::new();
        for g in 0..n {
            if !self.active[g] {
                continue;
            }
            let (gm, gc) = self.lead(g);
            if gc != hc {
                continue;
            }
            let coprime = self.ideal && gm.is_coprime(&hm);
            cands.push((g, gm.lcm(&hm), coprime));
        }
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        let mut rest = cands.as_slice();
        while let Some((&(g, l, coprime), tail)) = rest.split_first() {
            rest = tail;
            let dominated = rest.iter().chain(kept.iter()).any(|(_, l2, _)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((g, l, coprime));
            }
        }
        for (g, l, coprime) in kept {
            if coprime {
                continue;
            }
            let d = self.pair_degree(&l, hc);
            self.queue.entry(d).or_default().push(Pair { i: g, j: n, lcm: l, comp: hc });
        }

        // elements whose lead became redundant stop taking part
        for g in 0..n {
            if self.active[g] {
                let (gm, gc) = self.lead(g);
                if gc == hc && hm.divides(&gm) {
                    self.active[g] = false;
                    self.leads.deactivate(g);
                }
            }
        }
        self.leads.push(hm, hc, n);
        self.basis.push(h);
        self.active.push(true);
    }
}

/// Runs Buchberger on homogeneous generators.
///
/// `ideal` enables the coprime-lead criterion, which is only valid when all
/// elements live in one component.
pub(crate) fn buchberger(ctx: &Ctx, gens: &[ModVec], ideal: bool) -> Result<BuchbergerRun> {
    let mut by_degree: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (k, g) in gens.iter().enumerate() {
        if !ctx.is_homogeneous(g) {
            return Err(Error::NotHomogeneous(format!("generator {k}")));
        }
        if let Some(d) = ctx.degree(g) {
            by_degree.entry(d).or_default().push(k);
        }
    }
    let mut st = State {
        ctx,
        ideal,
        basis: Vec::new(),
        active: Vec::new(),
        leads: LeadTable::default(),
        queue: BTreeMap::new(),
    };
    let mut minimal = Vec::new();
    loop {
        let dp = st.queue.keys().next().copied();
        let dg = by_degree.keys().next().copied();
        let d = match (dp, dg) {
            (None, None) => break,
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
        };
        // S-pairs of this degree first, so surviving generators are minimal
        while let Some(mut pairs) = st.queue.remove(&d) {
            pairs.sort_by_key(|p| (p.j, p.i));
            for p in pairs {
                let mut acc = spoly(ctx, &st.basis[p.i], &st.basis[p.j], &p.lcm);
                let h = reduce_accum(ctx, &mut acc, &st.basis, &st.leads);
                if !h.is_zero() {
                    st.insert(ctx.monic(&h));
                }
            }
        }
        if dg == Some(d) {
            let idxs = by_degree.remove(&d).unwrap_or_default();
            for k in idxs {
                let h = reduce_vec(ctx, &gens[k], &st.basis, &st.leads);
                if !h.is_zero() {
                    minimal.push(k);
                    st.insert(ctx.monic(&h));
                }
                // new pairs of degree d are handled before moving on
                while let Some(mut pairs) = st.queue.remove(&d) {
                    pairs.sort_by_key(|p| (p.j, p.i));
                    for p in pairs {
                        let mut acc = spoly(ctx, &st.basis[p.i], &st.basis[p.j], &p.lcm);
                        let h = reduce_accum(ctx, &mut acc, &st.basis, &st.leads);
                        if !h.is_zero() {
                            st.insert(ctx.monic(&h));
                        }
                    }
                }
            }
        }
    }
    let basis: Vec<ModVec> =
        st.basis.into_iter().zip(st.active).filter(|(_, a)| *a).map(|(g, _)| g).collect();
    Ok(BuchbergerRun { basis: interreduce(ctx, basis), minimal })
}

/// Tail-reduces a basis with pairwise non-dividing leads; returns it sorted
/// by increasing lead term.
pub(crate) fn interreduce(ctx: &Ctx, mut basis: Vec<ModVec>) -> Vec<ModVec> {
    basis.sort_by(|a, b| {
        let (x, y) = (&a.terms[0], &b.terms[0]);
        ctx.cmp((&x.mon, x.comp), (&y.mon, y.comp))
    });
    let mut leads = LeadTable::default();
    for (k, g) in basis.iter().enumerate() {
        leads.push(g.terms[0].mon, g.terms[0].comp, k);
    }
    for k in 0..basis.len() {
        let head = basis[k].terms[0];
        let mut acc = Accum::default();
        for t in &basis[k].terms[1..] {
            acc.add_term(ctx, t.mon, t.comp, t.coef);
        }
        let tail = reduce_accum(ctx, &mut acc, &basis, &leads);
        let mut terms = Vec::with_capacity(tail.terms.len() + 1);
        terms.push(MTerm { coef: 1, ..head });
        terms.extend(tail.terms);
        basis[k] = ctx.monic(&ModVec { terms });
    }
    basis
}

/// Certifies the Gröbner property: every S-pair reduces to zero.
pub(crate) fn is_groebner(ctx: &Ctx, basis: &[ModVec]) -> bool {
    let mut leads = LeadTable::default();
    let monic: Vec<ModVec> = basis.iter().map(|g| ctx.monic(g)).collect();
    for (k, g) in monic.iter().enumerate() {
        if g.is_zero() {
            return false;
        }
        leads.push(g.terms[0].mon, g.terms[0].comp, k);
    }
    for j in 0..monic.len() {
        for i in 0..j {
            let (a, b) = (&monic[i].terms[0], &monic[j].terms[0]);
            if a.comp != b.comp {
                continue;
            }
            let l = a.mon.lcm(&b.mon);
            let mut acc = spoly(ctx, &monic[i], &monic[j], &l);
            if !reduce_accum(ctx, &mut acc, &monic, &leads).is_zero() {
                return false;
            }
        }
    }
    true
}
