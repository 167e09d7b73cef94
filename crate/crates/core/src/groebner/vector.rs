use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rustc_hash::FxHashMap;

use crate::ring::{ModuleOrder, Monomial, MonomialOrder, Poly, PrimeField, Ring, Term, TermKey, VarMask};

/// One term `coef * mon * e_comp` of a free-module element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MTerm {
    pub mon: Monomial,
    pub comp: u32,
    pub coef: u32,
}

/// A graded free module `⊕ S(-a_k)` over a ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeModule {
    pub ring: Ring,
    pub twists: Vec<i32>,
}

impl FreeModule {
    pub fn new(ring: Ring, twists: Vec<i32>) -> Self {
        FreeModule { ring, twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    /// Degree of `m e_k`, namely `deg m + a_k`.
    pub fn term_degree(&self, mon: &Monomial, comp: u32) -> i64 {
        self.ring.wdeg(mon) as i64 + self.twists[comp as usize] as i64
    }

    pub fn order(&self) -> ModuleOrder {
        ModuleOrder::top(self.ring.order(), self.twists.clone())
    }

    pub fn ctx(&self) -> Ctx {
        Ctx::new(self.ring.field(), self.order(), self.ring.zero_weight())
    }
}

/// Element of a free module: terms strictly decreasing in the module order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ModVec {
    pub(crate) terms: Vec<MTerm>,
}

impl ModVec {
    pub fn zero() -> Self {
        ModVec { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[MTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&MTerm> {
        self.terms.first()
    }

    pub fn from_poly(f: &Poly, comp: u32) -> Self {
        ModVec { terms: f.terms().iter().map(|t| MTerm { mon: t.mon, comp, coef: t.coef }).collect() }
    }

    /// The polynomial in component `comp` (terms stay sorted).
    pub fn component(&self, comp: u32) -> Poly {
        Poly { terms: self.terms.iter().filter(|t| t.comp == comp).map(|t| Term { mon: t.mon, coef: t.coef }).collect() }
    }

    /// Component-wise split into polynomials.
    pub fn components(&self, rank: usize) -> Vec<Poly> {
        let mut out = vec![Poly::zero(); rank];
        for t in &self.terms {
            out[t.comp as usize].terms.push(Term { mon: t.mon, coef: t.coef });
        }
        out
    }
}

/// Everything the reduction machinery needs to know about an ambient module.
#[derive(Clone, Debug)]
pub struct Ctx {
    pub field: PrimeField,
    pub order: ModuleOrder,
    pub zero_weight: VarMask,
    fast: bool,
}

impl Ctx {
    pub fn new(field: PrimeField, order: ModuleOrder, zero_weight: VarMask) -> Self {
        let fast = order.monomial == MonomialOrder::Degrevlex
            && order.rule == crate::ring::PositionRule::TermOverPosition
            && zero_weight.is_empty();
        Ctx { field, order, zero_weight, fast }
    }

    pub fn for_ring(ring: &Ring) -> Self {
        Ctx::new(ring.field(), ModuleOrder::ideal(ring.order()), ring.zero_weight())
    }

    #[inline]
    pub fn wdeg(&self, mon: &Monomial) -> i64 {
        if self.zero_weight.is_empty() {
            mon.degree() as i64
        } else {
            (mon.degree() - mon.masked_degree(&self.zero_weight)) as i64
        }
    }

    #[inline]
    pub fn term_degree(&self, mon: &Monomial, comp: u32) -> i64 {
        self.wdeg(mon) + self.order.twist(comp) as i64
    }

    #[inline]
    pub fn key(&self, mon: &Monomial, comp: u32) -> TermKey {
        self.order.key(mon, comp)
    }

    #[inline]
    pub fn cmp(&self, a: (&Monomial, u32), b: (&Monomial, u32)) -> Ordering {
        if self.fast {
            let da = a.0.degree() as i64 + self.order.twist(a.1) as i64;
            let db = b.0.degree() as i64 + self.order.twist(b.1) as i64;
            da.cmp(&db).then_with(|| a.0.cmp_degrevlex(b.0)).then_with(|| b.1.cmp(&a.1))
        } else {
            self.key(a.0, a.1).cmp(&self.key(b.0, b.1))
        }
    }

    pub fn sort(&self, terms: &mut [MTerm]) {
        if self.fast {
            terms.sort_unstable_by(|a, b| self.cmp((&b.mon, b.comp), (&a.mon, a.comp)));
        } else {
            terms.sort_by_cached_key(|t| std::cmp::Reverse(self.key(&t.mon, t.comp)));
        }
    }

    /// Canonical vector from arbitrary terms.
    pub fn vector<I: IntoIterator<Item = MTerm>>(&self, terms: I) -> ModVec {
        let mut acc: FxHashMap<(Monomial, u32), u32> = FxHashMap::default();
        for t in terms {
            let e = acc.entry((t.mon, t.comp)).or_insert(0);
            *e = self.field.add(*e, t.coef % self.field.modulus());
        }
        let mut terms: Vec<MTerm> =
            acc.into_iter().filter(|&(_, c)| c != 0).map(|((mon, comp), coef)| MTerm { mon, comp, coef }).collect();
        self.sort(&mut terms);
        ModVec { terms }
    }

    pub fn add(&self, a: &ModVec, b: &ModVec) -> ModVec {
        self.axpy(a, b, 1, &Monomial::ONE)
    }

    pub fn sub(&self, a: &ModVec, b: &ModVec) -> ModVec {
        self.axpy(a, b, self.field.neg(1), &Monomial::ONE)
    }

    /// `a + c * m * b` by merging.
    pub fn axpy(&self, a: &ModVec, b: &ModVec, c: u32, m: &Monomial) -> ModVec {
        let f = self.field;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        let scaled = |t: &MTerm| MTerm { mon: t.mon.mul(m), comp: t.comp, coef: f.mul(t.coef, c) };
        while i < a.terms.len() && j < b.terms.len() {
            let bt = scaled(&b.terms[j]);
            let at = a.terms[i];
            match self.cmp((&at.mon, at.comp), (&bt.mon, bt.comp)) {
                Ordering::Greater => {
                    out.push(at);
                    i += 1;
                }
                Ordering::Less => {
                    if bt.coef != 0 {
                        out.push(bt);
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(at.coef, bt.coef);
                    if s != 0 {
                        out.push(MTerm { coef: s, ..at });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        for t in &b.terms[j..] {
            let bt = scaled(t);
            if bt.coef != 0 {
                out.push(bt);
            }
        }
        ModVec { terms: out }
    }

    pub fn scale(&self, a: &ModVec, c: u32) -> ModVec {
        let c = c % self.field.modulus();
        if c == 0 {
            return ModVec::zero();
        }
        ModVec { terms: a.terms.iter().map(|t| MTerm { coef: self.field.mul(t.coef, c), ..*t }).collect() }
    }

    pub fn monic(&self, a: &ModVec) -> ModVec {
        match a.lead() {
            None => ModVec::zero(),
            Some(t) if t.coef == 1 => a.clone(),
            Some(t) => self.scale(a, self.field.inv(t.coef).expect("nonzero lead")),
        }
    }

    /// `f * v` for a polynomial `f`.
    pub fn mul_poly(&self, f: &Poly, v: &ModVec) -> ModVec {
        let mut acc = Accum::default();
        for t in f.terms() {
            acc.add_scaled(self, &v.terms, &t.mon, t.coef);
        }
        acc.into_vec(self)
    }

    pub fn is_homogeneous(&self, v: &ModVec) -> bool {
        match v.terms.first() {
            None => true,
            Some(t) => {
                let d = self.term_degree(&t.mon, t.comp);
                v.terms.iter().all(|u| self.term_degree(&u.mon, u.comp) == d)
            }
        }
    }

    pub fn degree(&self, v: &ModVec) -> Option<i64> {
        v.terms.first().map(|t| self.term_degree(&t.mon, t.comp))
    }
}

#[derive(PartialEq, Eq)]
struct HeapItem {
    key: TermKey,
    mon: Monomial,
    comp: u32,
}

impl Ord for HeapItem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}

impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse accumulator with access to its largest term.
///
/// Coefficients live in a hash map; a max-heap of keys gives the leading
/// term. Cancelled entries leave stale heap items that are skipped on pop.
#[derive(Default)]
pub struct Accum {
    map: FxHashMap<(Monomial, u32), u32>,
    heap: BinaryHeap<HeapItem>,
}

impl Accum {
    #[inline]
    pub fn add_term(&mut self, ctx: &Ctx, mon: Monomial, comp: u32, coef: u32) {
        if coef == 0 {
            return;
        }
        match self.map.entry((mon, comp)) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let s = ctx.field.add(*e.get(), coef);
                if s == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(coef);
                self.heap.push(HeapItem { key: ctx.key(&mon, comp), mon, comp });
            }
        }
    }

    /// Adds `c * m * v`.
    pub fn add_scaled(&mut self, ctx: &Ctx, v: &[MTerm], m: &Monomial, c: u32) {
        if c == 0 {
            return;
        }
        for t in v {
            self.add_term(ctx, t.mon.mul(m), t.comp, ctx.field.mul(t.coef, c));
        }
    }

    /// Removes and returns the largest nonzero term.
    pub fn pop_max(&mut self) -> Option<MTerm> {
        while let Some(item) = self.heap.pop() {
            if let Some(coef) = self.map.remove(&(item.mon, item.comp)) {
                return Some(MTerm { mon: item.mon, comp: item.comp, coef });
            }
        }
        None
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn into_vec(mut self, _ctx: &Ctx) -> ModVec {
        let mut terms = Vec::with_capacity(self.map.len());
        while let Some(t) = self.pop_max() {
            terms.push(t);
        }
        ModVec { terms }
    }
}

/// Support bits of a monomial (variables 0..31), a cheap divisibility prefilter.
#[inline]
pub fn sev(m: &Monomial) -> u32 {
    m.support_bits()
}

/// Lead-term table for finding reducers.
#[derive(Clone, Default, Debug)]
pub struct LeadTable {
    entries: Vec<(Monomial, u32, u32, usize, bool)>,
}

impl LeadTable {
    pub fn push(&mut self, mon: Monomial, comp: u32, idx: usize) {
        self.entries.push((mon, comp, sev(&mon), idx, true));
    }

    pub fn deactivate(&mut self, idx: usize) {
        for e in &mut self.entries {
            if e.3 == idx {
                e.4 = false;
            }
        }
    }

    /// First active entry (in insertion order) whose lead divides `mon e_comp`.
    #[inline]
    pub fn find(&self, mon: &Monomial, comp: u32) -> Option<usize> {
        let s = sev(mon);
        self.entries
            .iter()
            .find(|e| e.4 && e.1 == comp && e.2 & !s == 0 && e.0.divides(mon))
            .map(|e| e.3)
    }
}

