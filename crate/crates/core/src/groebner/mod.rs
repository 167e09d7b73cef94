//! Normal forms, Buchberger's algorithm and Schreyer syzygies.

mod engine;
pub(crate) mod syzygy;
mod vector;

pub use vector::{Accum, Ctx, FreeModule, LeadTable, MTerm, ModVec};

pub(crate) use engine::reduce_accum;

use crate::error::{Error, Result};
use crate::ring::{ModuleOrder, Monomial, Poly, Ring};

/// A reduced Gröbner basis of a homogeneous ideal with respect to its ring's order.
///
/// Elements are monic, autoreduced and sorted by increasing leading monomial,
/// so two bases of the same ideal are equal as vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    elems: Vec<Poly>,
}

fn to_vecs(gens: &[Poly]) -> Vec<ModVec> {
    gens.iter().filter(|g| !g.is_zero()).map(|g| ModVec::from_poly(g, 0)).collect()
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Poly] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|g| g.terms()[0].mon).collect()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.elems.iter().any(|g| g.is_constant())
    }

    fn table(&self) -> (Vec<ModVec>, LeadTable) {
        let vecs = to_vecs(&self.elems);
        let mut leads = LeadTable::default();
        for (k, v) in vecs.iter().enumerate() {
            leads.push(v.terms[0].mon, 0, k);
        }
        (vecs, leads)
    }

    /// Normal form: no term of the result is divisible by a leading monomial.
    pub fn reduce(&self, f: &Poly) -> Poly {
        let ctx = Ctx::for_ring(&self.ring);
        let (vecs, leads) = self.table();
        let mut acc = Accum::default();
        for t in f.terms() {
            acc.add_term(&ctx, t.mon, 0, t.coef);
        }
        reduce_accum(&ctx, &mut acc, &vecs, &leads).component(0)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.reduce(f).is_zero()
    }

    /// Re-runs every S-pair reduction over the basis.
    pub fn certify(&self) -> bool {
        engine::is_groebner(&Ctx::for_ring(&self.ring), &to_vecs(&self.elems))
    }
}

/// Normal form of `f` modulo `g`; `f` must live in `g`'s ring (same order).
pub fn normal_form(f: &Poly, g: &GroebnerBasis, ring: &Ring) -> Result<Poly> {
    if ring != g.ring() {
        return Err(Error::RingMismatch("normal form needs the basis ring and order".into()));
    }
    Ok(g.reduce(f))
}

/// Reduced Gröbner basis of the ideal generated by homogeneous `gens`, for
/// the order of `ring`.
pub fn buchberger(ring: &Ring, gens: &[Poly]) -> Result<GroebnerBasis> {
    let ctx = Ctx::for_ring(ring);
    let run = engine::buchberger(&ctx, &to_vecs(gens), true)?;
    Ok(GroebnerBasis { ring: ring.clone(), elems: run.basis.iter().map(|v| v.component(0)).collect() })
}

/// A minimal homogeneous generating set, chosen among `gens`.
pub fn minimal_generators(ring: &Ring, gens: &[Poly]) -> Result<Vec<Poly>> {
    let ctx = Ctx::for_ring(ring);
    let nonzero: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let run = engine::buchberger(&ctx, &to_vecs(&nonzero), true)?;
    Ok(run.minimal.into_iter().map(|k| nonzero[k].clone()).collect())
}

/// Reduced Gröbner basis of a graded submodule of a free module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleGroebnerBasis {
    module: FreeModule,
    elems: Vec<ModVec>,
}

impl ModuleGroebnerBasis {
    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn elements(&self) -> &[ModVec] {
        &self.elems
    }

    pub fn reduce(&self, v: &ModVec) -> ModVec {
        let ctx = self.module.ctx();
        let mut leads = LeadTable::default();
        for (k, g) in self.elems.iter().enumerate() {
            leads.push(g.terms[0].mon, g.terms[0].comp, k);
        }
        engine::reduce_vec(&ctx, v, &self.elems, &leads)
    }

    pub fn certify(&self) -> bool {
        engine::is_groebner(&self.module.ctx(), &self.elems)
    }
}

pub fn module_buchberger(module: &FreeModule, gens: &[ModVec]) -> Result<ModuleGroebnerBasis> {
    let ctx = module.ctx();
    let gens: Vec<ModVec> = gens.iter().filter(|g| !g.is_zero()).map(|g| ctx.vector(g.terms.iter().copied())).collect();
    for g in &gens {
        if g.terms.iter().any(|t| t.comp as usize >= module.rank()) {
            return Err(Error::DimensionMismatch("component index beyond module rank".into()));
        }
    }
    let run = engine::buchberger(&ctx, &gens, module.rank() == 1)?;
    Ok(ModuleGroebnerBasis { module: module.clone(), elems: run.basis })
}

/// Syzygies of a Gröbner basis by Schreyer's construction.
///
/// `source` has one summand per basis element, twisted by its degree. The
/// generators form a Gröbner basis of the syzygy module for the induced
/// order, and only pairs with minimal new leads are kept.
#[derive(Clone, Debug)]
pub struct SyzygyModule {
    pub source: FreeModule,
    pub order: ModuleOrder,
    pub gens: Vec<ModVec>,
}

impl SyzygyModule {
    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    /// Degrees of the generators.
    pub fn degrees(&self) -> Vec<i64> {
        let ctx = Ctx::new(self.source.ring.field(), self.order.clone(), self.source.ring.zero_weight());
        self.gens.iter().map(|g| ctx.degree(g).unwrap_or(0)).collect()
    }
}

pub fn syzygies(g: &GroebnerBasis) -> Result<SyzygyModule> {
    let ring = g.ring();
    let ctx = Ctx::for_ring(ring);
    let elems = to_vecs(&g.elems);
    let totals: Vec<Monomial> = elems.iter().map(|e| e.terms[0].mon).collect();
    let order = if ring.order() == crate::ring::MonomialOrder::Degrevlex && ring.zero_weight().is_empty() {
        ModuleOrder::schreyer(totals.clone())
    } else {
        ModuleOrder::top(ring.order(), totals.iter().map(|m| m.degree() as i32).collect())
    };
    let target = Ctx::new(ring.field(), order.clone(), ring.zero_weight());
    let gens = if order.rule == crate::ring::PositionRule::Schreyer {
        syzygy::frame_syzygies(&ctx, &elems, &target)?
    } else {
        // outside degrevlex the Schreyer order is not representable; keep all pairs
        let mut leads = LeadTable::default();
        for (k, e) in elems.iter().enumerate() {
            leads.push(e.terms[0].mon, 0, k);
        }
        let mut out = Vec::new();
        for l in 0..elems.len() {
            for k in 0..l {
                let m = elems[l].terms[0].mon;
                let mult = m.quotient_of(&m.lcm(&elems[k].terms[0].mon));
                out.push(syzygy::pair_syzygy(&ctx, &elems, &leads, syzygy::FramePair { k, l, mult }, &target)?);
            }
        }
        out
    };
    let twists = totals.iter().map(|m| ring.wdeg(m) as i32).collect();
    Ok(SyzygyModule { source: FreeModule::new(ring.clone(), twists), order, gens })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{text::parse_poly, PrimeField};

    fn ring(names: &[&str]) -> Ring {
        Ring::with_names(PrimeField::default_field(), names).unwrap()
    }

    fn polys(r: &Ring, src: &[&str]) -> Vec<Poly> {
        src.iter().map(|s| parse_poly(r, s, 0).unwrap()).collect()
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["x", "y"]);
        let g = buchberger(&r, &polys(&r, &["x"])).unwrap();
        assert!(g.reduce(&polys(&r, &["x^2"])[0]).is_zero());
        assert_eq!(g.reduce(&polys(&r, &["y"])[0]), polys(&r, &["y"])[0]);
        let g = buchberger(&r, &polys(&r, &["x-y"])).unwrap();
        assert!(g.contains(&polys(&r, &["x^2-y^2"])[0]));
    }

    #[test]
    fn buchberger_examples() {
        let r = ring(&["x", "y"]);
        let g = buchberger(&r, &polys(&r, &["x", "y"])).unwrap();
        assert_eq!(g.elements(), polys(&r, &["y", "x"]).as_slice());
        let r = ring(&["x", "y", "z", "w"]);
        let cubic = polys(&r, &["x*z-y^2", "x*w-y*z", "y*w-z^2"]);
        let g = buchberger(&r, &cubic).unwrap();
        assert_eq!(g.len(), 3);
        assert!(g.certify());
        for f in &cubic {
            assert!(g.contains(f));
        }
        let r = ring(&["x", "y", "z"]);
        let g = buchberger(&r, &polys(&r, &["x-y", "y-z"])).unwrap();
        assert_eq!(g.elements(), polys(&r, &["y-z", "x-z"]).as_slice());
    }

    #[test]
    fn rejects_inhomogeneous() {
        let r = ring(&["x", "y"]);
        assert!(matches!(buchberger(&r, &polys(&r, &["x^2-y"])), Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn syzygy_examples() {
        let r = ring(&["x", "y"]);
        let g = buchberger(&r, &polys(&r, &["x", "y"])).unwrap();
        let s = syzygies(&g).unwrap();
        assert_eq!(s.rank(), 1);
        let g = buchberger(&r, &polys(&r, &["x"])).unwrap();
        assert_eq!(syzygies(&g).unwrap().rank(), 0);
        let r = ring(&["x", "y", "z", "w"]);
        let g = buchberger(&r, &polys(&r, &["x*z-y^2", "x*w-y*z", "y*w-z^2"])).unwrap();
        let s = syzygies(&g).unwrap();
        assert_eq!(s.degrees(), vec![3, 3]);
        // each syzygy maps to zero
        for v in &s.gens {
            let mut acc = r.zero();
            for (k, p) in v.components(g.len()).iter().enumerate() {
                acc = r.add(&acc, &r.mul(p, &g.elements()[k]));
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn minimal_generators_drop_redundant() {
        let r = ring(&["x", "y"]);
        let m = minimal_generators(&r, &polys(&r, &["x^2", "x*y", "x^2+x*y", "y^3", "x^2*y"])).unwrap();
        assert_eq!(m.len(), 3);
    }
}
