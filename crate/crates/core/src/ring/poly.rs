use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::field::PrimeField;
use super::monomial::{Monomial, VarMask, MAX_VARS};
use super::order::MonomialOrder;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct RingData {
    field: PrimeField,
    names: Vec<String>,
    order: MonomialOrder,
    /// Variables of degree 0; used only by the auxiliary variable of
    /// intersections. Everything user-facing is standard graded.
    zero_weight: VarMask,
}

/// A standard graded polynomial ring `F_p[x_0..x_r]` with a monomial order.
///
/// Cheap to clone; two rings are the same ring when prime, variable names,
/// order and grading agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring(Arc<RingData>);

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.0.field, self.0.names.join(","))
    }
}

/// One term `coef * mon`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub mon: Monomial,
    pub coef: u32,
}

/// A polynomial: terms strictly decreasing in the ring's order, no zero
/// coefficients. The zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    pub(crate) terms: Vec<Term>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.mon)
    }

    /// Total degree of the leading term (standard grading).
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mon.degree()).max()
    }

    /// True when every term has the same standard degree.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|u| u.mon.degree() == t.mon.degree()),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mon.is_one()
    }

    pub fn support(&self) -> VarMask {
        let mut m = VarMask::EMPTY;
        for t in &self.terms {
            let s = t.mon.support();
            for k in 0..4 {
                m.0[k] |= s.0[k];
            }
        }
        m
    }
}

impl Ring {
    pub fn new(field: PrimeField, names: Vec<String>, order: MonomialOrder) -> Result<Self> {
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        if names.is_empty() {
            return Err(Error::InvalidArgument("a ring needs at least one variable".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            if !seen.insert(n) {
                return Err(Error::InvalidArgument(format!("duplicate variable name {n}")));
            }
        }
        Ok(Ring(Arc::new(RingData { field, names, order, zero_weight: VarMask::EMPTY })))
    }

    /// `F_p[x0..x{n-1}]` with degrevlex.
    pub fn standard(field: PrimeField, nvars: usize) -> Result<Self> {
        Ring::new(field, (0..nvars).map(|i| format!("x{i}")).collect(), MonomialOrder::Degrevlex)
    }

    pub fn with_names(field: PrimeField, names: &[&str]) -> Result<Self> {
        Ring::new(field, names.iter().map(|s| s.to_string()).collect(), MonomialOrder::Degrevlex)
    }

    pub fn field(&self) -> PrimeField {
        self.0.field
    }

    pub fn nvars(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn zero_weight(&self) -> VarMask {
        self.0.zero_weight
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Ring(Arc::new(RingData { order, ..(*self.0).clone() }))
    }

    pub(crate) fn with_zero_weight(&self, zero_weight: VarMask) -> Ring {
        Ring(Arc::new(RingData { zero_weight, ..(*self.0).clone() }))
    }

    /// Same field and names, ignoring order and grading.
    pub fn same_space(&self, other: &Ring) -> bool {
        self.0.field == other.0.field && self.0.names == other.0.names
    }

    pub fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{self:?} vs {other:?}")))
        }
    }

    /// Degree in the ring's grading (standard unless auxiliary variables exist).
    #[inline]
    pub fn wdeg(&self, m: &Monomial) -> u32 {
        if self.0.zero_weight.is_empty() {
            m.degree()
        } else {
            m.degree() - m.masked_degree(&self.0.zero_weight)
        }
    }

    pub fn is_homogeneous(&self, f: &Poly) -> bool {
        match f.terms.first() {
            None => true,
            Some(t) => {
                let d = self.wdeg(&t.mon);
                f.terms.iter().all(|u| self.wdeg(&u.mon) == d)
            }
        }
    }

    #[inline]
    pub fn cmp_mon(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.0.order.cmp(a, b)
    }

    // ---- construction ----

    pub fn zero(&self) -> Poly {
        Poly::zero()
    }

    pub fn one(&self) -> Poly {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Poly {
        let c = self.field().from_i64(c);
        if c == 0 {
            Poly::zero()
        } else {
            Poly { terms: vec![Term { mon: Monomial::one(), coef: c }] }
        }
    }

    pub fn var(&self, i: usize) -> Poly {
        assert!(i < self.nvars(), "variable index out of range");
        Poly { terms: vec![Term { mon: Monomial::var(i), coef: 1 }] }
    }

    pub fn monomial(&self, m: Monomial, c: i64) -> Poly {
        let c = self.field().from_i64(c);
        if c == 0 {
            Poly::zero()
        } else {
            Poly { terms: vec![Term { mon: m, coef: c }] }
        }
    }

    /// Canonical polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, u32)>>(&self, terms: I) -> Poly {
        let f = self.field();
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert(0);
            *e = f.add(*e, c % f.modulus());
        }
        let mut terms: Vec<Term> =
            acc.into_iter().filter(|&(_, c)| c != 0).map(|(mon, coef)| Term { mon, coef }).collect();
        self.sort_terms(&mut terms);
        Poly { terms }
    }

    /// Linear form `sum c_i x_i`.
    pub fn linear_form(&self, coeffs: &[i64]) -> Poly {
        let f = self.field();
        self.from_terms(
            coeffs.iter().enumerate().map(|(i, &c)| (Monomial::var(i), f.from_i64(c))),
        )
    }

    pub(crate) fn sort_terms(&self, terms: &mut [Term]) {
        let ord = self.order();
        match ord {
            MonomialOrder::Degrevlex => terms.sort_unstable_by(|a, b| b.mon.cmp_degrevlex(&a.mon)),
            _ => terms.sort_by_cached_key(|t| std::cmp::Reverse(ord.key(&t.mon))),
        }
    }

    /// Re-express a polynomial of a ring with the same variables in this ring's order.
    pub fn import(&self, from: &Ring, f: &Poly) -> Result<Poly> {
        if !self.same_space(from) {
            return Err(Error::RingMismatch(format!("{from:?} -> {self:?}")));
        }
        let mut terms = f.terms.clone();
        if from.order() != self.order() {
            self.sort_terms(&mut terms);
        }
        Ok(Poly { terms })
    }

    // ---- arithmetic ----

    fn merge(&self, f: &Poly, g: &Poly, g_scale: u32) -> Poly {
        let fld = self.field();
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < f.terms.len() && j < g.terms.len() {
            let (a, b) = (&f.terms[i], &g.terms[j]);
            match self.cmp_mon(&a.mon, &b.mon) {
                Ordering::Greater => {
                    out.push(*a);
                    i += 1;
                }
                Ordering::Less => {
                    let c = fld.mul(b.coef, g_scale);
                    if c != 0 {
                        out.push(Term { mon: b.mon, coef: c });
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let c = fld.add(a.coef, fld.mul(b.coef, g_scale));
                    if c != 0 {
                        out.push(Term { mon: a.mon, coef: c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&f.terms[i..]);
        for b in &g.terms[j..] {
            let c = fld.mul(b.coef, g_scale);
            if c != 0 {
                out.push(Term { mon: b.mon, coef: c });
            }
        }
        Poly { terms: out }
    }

    pub fn add(&self, f: &Poly, g: &Poly) -> Poly {
        self.merge(f, g, 1)
    }

    pub fn sub(&self, f: &Poly, g: &Poly) -> Poly {
        self.merge(f, g, self.field().neg(1))
    }

    pub fn neg(&self, f: &Poly) -> Poly {
        self.scale(f, self.field().neg(1))
    }

    pub fn scale(&self, f: &Poly, c: u32) -> Poly {
        let fld = self.field();
        let c = c % fld.modulus();
        if c == 0 {
            return Poly::zero();
        }
        Poly { terms: f.terms.iter().map(|t| Term { mon: t.mon, coef: fld.mul(t.coef, c) }).collect() }
    }

    /// `c * m * f`; multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, f: &Poly, m: &Monomial, c: u32) -> Poly {
        let fld = self.field();
        if c % fld.modulus() == 0 {
            return Poly::zero();
        }
        Poly { terms: f.terms.iter().map(|t| Term { mon: t.mon.mul(m), coef: fld.mul(t.coef, c) }).collect() }
    }

    pub fn mul(&self, f: &Poly, g: &Poly) -> Poly {
        if f.is_zero() || g.is_zero() {
            return Poly::zero();
        }
        let fld = self.field();
        let mut acc: HashMap<Monomial, u32> = HashMap::with_capacity(f.len() * g.len());
        for a in &f.terms {
            for b in &g.terms {
                let e = acc.entry(a.mon.mul(&b.mon)).or_insert(0);
                *e = fld.add(*e, fld.mul(a.coef, b.coef));
            }
        }
        let mut terms: Vec<Term> =
            acc.into_iter().filter(|&(_, c)| c != 0).map(|(mon, coef)| Term { mon, coef }).collect();
        self.sort_terms(&mut terms);
        Poly { terms }
    }

    pub fn pow(&self, f: &Poly, e: u32) -> Poly {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Scale so the leading coefficient is one.
    pub fn monic(&self, f: &Poly) -> Poly {
        match f.lead() {
            None => Poly::zero(),
            Some(t) if t.coef == 1 => f.clone(),
            Some(t) => self.scale(f, self.field().inv_nz(t.coef)),
        }
    }

    /// Exact division by a polynomial known to divide `f` (used after colon computations).
    pub fn exact_div(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        let g_lead = g.lead().ok_or(Error::DivisionByZero)?;
        let fld = self.field();
        let inv = fld.inv_nz(g_lead.coef);
        let mut rem = f.clone();
        let mut quot = Vec::new();
        while let Some(t) = rem.lead().copied() {
            let q = g_lead.mon.checked_div_of(&t.mon).ok_or_else(|| {
                Error::Internal("exact_div: divisor does not divide".into())
            })?;
            let c = fld.mul(t.coef, inv);
            quot.push(Term { mon: q, coef: c });
            rem = self.sub(&rem, &self.mul_term(g, &q, c));
        }
        let mut terms = quot;
        self.sort_terms(&mut terms);
        Ok(Poly { terms })
    }

    /// Evaluate at a point of `F_p^{n}`.
    pub fn eval(&self, f: &Poly, point: &[u32]) -> u32 {
        let fld = self.field();
        let mut acc = 0;
        for t in &f.terms {
            let mut v = t.coef;
            for (i, &x) in point.iter().enumerate() {
                let e = t.mon.exponent(i);
                if e > 0 {
                    v = fld.mul(v, fld.pow(x, e as u64));
                }
            }
            acc = fld.add(acc, v);
        }
        acc
    }

    /// Substitute polynomials (from ring `target`) for the variables of this ring.
    pub fn substitute(&self, f: &Poly, images: &[Poly], target: &Ring) -> Poly {
        assert_eq!(images.len(), self.nvars());
        let mut cache: HashMap<(usize, u32), Poly> = HashMap::new();
        let mut out = Poly::zero();
        for t in &f.terms {
            let mut prod = target.constant(t.coef as i64);
            for (i, img) in images.iter().enumerate() {
                let e = t.mon.exponent(i);
                if e == 0 {
                    continue;
                }
                let p = cache.entry((i, e)).or_insert_with(|| target.pow(img, e)).clone();
                prod = target.mul(&prod, &p);
            }
            out = target.add(&out, &prod);
        }
        out
    }

    pub fn fmt_poly(&self, f: &Poly) -> String {
        super::text::format_poly(self, f)
    }
}

impl Monomial {
    /// `other / self` when divisible.
    #[inline]
    pub fn checked_div_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| self.quotient_of(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(p: u32, n: usize) -> Ring {
        Ring::standard(PrimeField::new(p).unwrap(), n).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let r = Ring::with_names(PrimeField::new(5).unwrap(), &["x", "y"]).unwrap();
        let (x, y) = (r.var(0), r.var(1));
        let s = r.add(&r.add(&x, &y), &r.scale(&x, 4));
        assert_eq!(s, y);
        let prod = r.mul(&r.add(&x, &y), &r.sub(&x, &y));
        assert_eq!(prod, r.sub(&r.mul(&x, &x), &r.mul(&y, &y)));
        assert!(r.mul(&x, &Poly::zero()).is_zero());
        assert_eq!(r.exact_div(&prod, &r.add(&x, &y)).unwrap(), r.sub(&x, &y));
    }

    fn arb_poly(r: Ring) -> impl Strategy<Value = Poly> {
        let n = r.nvars();
        proptest::collection::vec(
            (proptest::collection::vec(0u32..3, n), 0u32..101),
            0..6,
        )
        .prop_map(move |ts| {
            r.from_terms(ts.into_iter().map(|(e, c)| {
                // keep total degree <= 4
                let mut e = e;
                while e.iter().sum::<u32>() > 4 {
                    let i = e.iter().position(|&x| x > 0).unwrap();
                    e[i] -= 1;
                }
                (Monomial::from_exponents(&e).unwrap(), c)
            }))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(
            (f, g, h) in {
                let r = ring(101, 5);
                (arb_poly(r.clone()), arb_poly(r.clone()), arb_poly(r))
            }
        ) {
            let r = ring(101, 5);
            prop_assert_eq!(r.add(&r.add(&f, &g), &h), r.add(&f, &r.add(&g, &h)));
            prop_assert_eq!(r.mul(&f, &r.add(&g, &h)), r.add(&r.mul(&f, &g), &r.mul(&f, &h)));
            prop_assert_eq!(r.mul(&f, &g), r.mul(&g, &f));
            // canonical form does not depend on insertion order
            let mut rev: Vec<(Monomial, u32)> = f.terms().iter().map(|t| (t.mon, t.coef)).collect();
            rev.reverse();
            prop_assert_eq!(r.from_terms(rev), f.clone());
            for w in f.terms().windows(2) {
                prop_assert_eq!(r.cmp_mon(&w[0].mon, &w[1].mon), Ordering::Greater);
            }
        }
    }
}
