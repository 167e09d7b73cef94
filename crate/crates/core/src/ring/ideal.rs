use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::order::MonomialOrder;
use super::poly::{Poly, Ring};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};

/// A homogeneous ideal given by generators, with Gröbner bases cached per order.
pub struct GradedIdeal {
    ring: Ring,
    gens: Vec<Poly>,
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for GradedIdeal {
    fn clone(&self) -> Self {
        let cache = self.cache.lock().expect("cache lock").clone();
        GradedIdeal { ring: self.ring.clone(), gens: self.gens.clone(), cache: Mutex::new(cache) }
    }
}

impl std::fmt::Debug for GradedIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| self.ring.fmt_poly(g)).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl GradedIdeal {
    /// Zero generators are dropped; the rest must be homogeneous.
    pub fn new(ring: &Ring, gens: Vec<Poly>) -> Result<Self> {
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for (k, g) in gens.iter().enumerate() {
            if !ring.is_homogeneous(g) {
                return Err(Error::NotHomogeneous(format!("generator {k}: {}", ring.fmt_poly(g))));
            }
        }
        let ring = ring.with_order(MonomialOrder::Degrevlex);
        Ok(GradedIdeal { ring, gens, cache: Mutex::new(HashMap::new()) })
    }

    pub fn zero(ring: &Ring) -> Self {
        GradedIdeal::new(ring, Vec::new()).expect("empty ideal")
    }

    pub fn unit(ring: &Ring) -> Self {
        GradedIdeal::new(ring, vec![ring.one()]).expect("unit ideal")
    }

    /// The ideal of all variables.
    pub fn maximal(ring: &Ring) -> Self {
        GradedIdeal::new(ring, (0..ring.nvars()).map(|i| ring.var(i)).collect()).expect("variables")
    }

    pub(crate) fn from_basis(gb: GroebnerBasis) -> Self {
        let ring = gb.ring().with_order(MonomialOrder::Degrevlex);
        let gens = gb.elements().to_vec();
        let mut cache = HashMap::new();
        if gb.ring().order() == MonomialOrder::Degrevlex && gb.ring() == &ring {
            cache.insert(MonomialOrder::Degrevlex, Arc::new(gb));
        }
        GradedIdeal { ring, gens, cache: Mutex::new(cache) }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    /// Gröbner basis for `order` (computed once, then cached).
    pub fn groebner(&self, order: MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(g) = self.cache.lock().expect("cache lock").get(&order) {
            return Ok(g.clone());
        }
        let ring = self.ring.with_order(order);
        let gens = if order == MonomialOrder::Degrevlex {
            self.gens.clone()
        } else {
            self.gens.iter().map(|g| ring.import(&self.ring, g)).collect::<Result<Vec<_>>>()?
        };
        let gb = Arc::new(buchberger(&ring, &gens)?);
        self.cache.lock().expect("cache lock").insert(order, gb.clone());
        Ok(gb)
    }

    /// The degrevlex Gröbner basis.
    pub fn gb(&self) -> Result<Arc<GroebnerBasis>> {
        self.groebner(MonomialOrder::Degrevlex)
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.gb()?.contains(f))
    }

    pub fn contains_ideal(&self, other: &GradedIdeal) -> Result<bool> {
        let g = self.gb()?;
        Ok(other.gens.iter().all(|f| g.contains(f)))
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.gb()?.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Equality of ideals via reduced degrevlex bases.
    pub fn same_ideal(&self, other: &GradedIdeal) -> Result<bool> {
        if !self.ring.same_space(&other.ring) {
            return Ok(false);
        }
        Ok(self.gb()?.elements() == other.gb()?.elements())
    }

    /// A minimal generating set.
    pub fn minimal_gens(&self) -> Result<Vec<Poly>> {
        crate::groebner::minimal_generators(&self.ring, &self.gens)
    }

    /// The same ideal, generated by its reduced degrevlex basis.
    pub fn canonical(&self) -> Result<GradedIdeal> {
        Ok(GradedIdeal::from_basis((*self.gb()?).clone()))
    }
}
