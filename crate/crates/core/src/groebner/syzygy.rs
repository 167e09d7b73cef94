//! Schreyer syzygies: S-pair reductions with recorded quotients.

use rayon::prelude::*;

use super::vector::{Accum, Ctx, LeadTable, MTerm, ModVec};
use crate::error::{Error, Result};
use crate::ring::Monomial;

/// Reduces `acc` by `basis`, calling `record(r, q, c)` whenever `c * q * basis[r]`
/// is subtracted. Returns the remainder.
pub(crate) fn reduce_recording(
    ctx: &Ctx,
    acc: &mut Accum,
    basis: &[ModVec],
    leads: &LeadTable,
    mut record: impl FnMut(usize, Monomial, u32),
) -> ModVec {
    let f = ctx.field;
    let mut rem = Vec::new();
    while let Some(t) = acc.pop_max() {
        match leads.find(&t.mon, t.comp) {
            Some(r) => {
                let g = &basis[r];
                let q = g.terms[0].mon.quotient_of(&t.mon);
                let lc = g.terms[0].coef;
                let c = if lc == 1 { t.coef } else { f.mul(t.coef, f.inv(lc).expect("nonzero lead")) };
                acc.add_scaled(ctx, &g.terms[1..], &q, f.neg(c));
                record(r, q, c);
            }
            None => rem.push(t),
        }
    }
    ModVec { terms: rem }
}

/// A syzygy pair `(k, l)`, `k < l`, whose new lead is `mult * e_l`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct FramePair {
    pub k: usize,
    pub l: usize,
    pub mult: Monomial,
}

/// For each `l`, the pairs `(k, l)` with `k < l` in the same lead component
/// whose monomials `lcm(m_k, m_l) / m_l` minimally generate their ideal.
pub(crate) fn minimal_pairs(elems: &[ModVec]) -> Vec<FramePair> {
    let mut out = Vec::new();
    for l in 0..elems.len() {
        let Some(ll) = elems[l].lead() else { continue };
        let mut cands: Vec<FramePair> = Vec::new();
        for (k, e) in elems.iter().enumerate().take(l) {
            let Some(lk) = e.lead() else { continue };
            if lk.comp != ll.comp {
                continue;
            }
            let mult = ll.mon.quotient_of(&lk.mon.lcm(&ll.mon));
            cands.push(FramePair { k, l, mult });
        }
        for (a, p) in cands.iter().enumerate() {
            let redundant = cands.iter().enumerate().any(|(b, q)| {
                b != a && q.mult.divides(&p.mult) && (q.mult != p.mult || b < a)
            });
            if !redundant {
                out.push(*p);
            }
        }
    }
    out
}

/// Computes the syzygy attached to one frame pair: a vector over the basis
/// `elems` of the ambient module `ctx`, expressed in the order `target`.
pub(crate) fn pair_syzygy(
    ctx: &Ctx,
    elems: &[ModVec],
    leads: &LeadTable,
    pair: FramePair,
    target: &Ctx,
) -> Result<ModVec> {
    let f = ctx.field;
    let (gk, gl) = (&elems[pair.k], &elems[pair.l]);
    let lcm = pair.mult.mul(&gl.terms[0].mon);
    let mk = gk.terms[0].mon.quotient_of(&lcm);
    let ck = f.div(gl.terms[0].coef, gk.terms[0].coef)?;
    let mut acc = Accum::default();
    acc.add_scaled(ctx, &gl.terms[1..], &pair.mult, 1);
    acc.add_scaled(ctx, &gk.terms[1..], &mk, f.neg(ck));
    let mut terms = vec![
        MTerm { mon: pair.mult, comp: pair.l as u32, coef: 1 },
        MTerm { mon: mk, comp: pair.k as u32, coef: f.neg(ck) },
    ];
    let rem = reduce_recording(ctx, &mut acc, elems, leads, |r, q, c| {
        terms.push(MTerm { mon: q, comp: r as u32, coef: f.neg(c) });
    });
    if !rem.is_zero() {
        return Err(Error::Internal("S-pair of a Gröbner basis did not reduce to zero".into()));
    }
    let v = target.vector(terms);
    debug_assert_eq!(v.terms[0].comp, pair.l as u32);
    Ok(v)
}

/// All frame syzygies of a Gröbner basis, in pair order.
pub(crate) fn frame_syzygies(ctx: &Ctx, elems: &[ModVec], target: &Ctx) -> Result<Vec<ModVec>> {
    let mut leads = LeadTable::default();
    for (k, g) in elems.iter().enumerate() {
        leads.push(g.terms[0].mon, g.terms[0].comp, k);
    }
    let pairs = minimal_pairs(elems);
    pairs.par_iter().map(|&p| pair_syzygy(ctx, elems, &leads, p, target)).collect()
}
