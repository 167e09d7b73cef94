use std::cmp::Ordering;
use std::sync::Arc;

use super::monomial::{Monomial, VarMask};

/// Sort key for monomials and module terms: larger key means larger term.
///
/// Keys are plain arrays compared lexicographically, which lets heaps and
/// sorts run without carrying the order around.
pub type TermKey = [u64; 12];

/// Monomial orders on `K[x_0..x_r]`, all with `x_0 > x_1 > ... > x_r`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic order.
    #[default]
    Degrevlex,
    /// Product order: degrevlex on the `block` variables first, then degrevlex
    /// on the remaining ones. Any term containing a block variable dominates
    /// every term free of them.
    Elimination { block: VarMask },
}

#[inline]
fn revlex_words(m: &Monomial, mask: Option<&VarMask>, out: &mut [u64]) {
    let w = m.words();
    for k in 0..4 {
        let word = match mask {
            Some(mk) => w[3 - k] & mk.0[3 - k],
            None => w[3 - k],
        };
        out[k] = !word;
    }
}

impl MonomialOrder {
    pub fn elimination(vars: &[usize]) -> Self {
        MonomialOrder::Elimination { block: VarMask::from_vars(vars) }
    }

    /// Writes the monomial key into `out[0..10]`.
    #[inline]
    pub fn write_key(&self, m: &Monomial, out: &mut [u64]) {
        match self {
            MonomialOrder::Degrevlex => {
                out[0] = m.degree() as u64;
                revlex_words(m, None, &mut out[1..5]);
            }
            MonomialOrder::Elimination { block } => {
                let bdeg = m.masked_degree(block);
                out[0] = bdeg as u64;
                revlex_words(m, Some(block), &mut out[1..5]);
                out[5] = (m.degree() - bdeg) as u64;
                let rest = VarMask([!block.0[0], !block.0[1], !block.0[2], !block.0[3]]);
                revlex_words(m, Some(&rest), &mut out[6..10]);
            }
        }
    }

    #[inline]
    pub fn key(&self, m: &Monomial) -> TermKey {
        let mut k = [0u64; 12];
        self.write_key(m, &mut k);
        k
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Degrevlex => a.cmp_degrevlex(b),
            _ => self.key(a).cmp(&self.key(b)),
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::Degrevlex)
    }
}

/// How module terms `m e_k` compare across components.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum PositionRule {
    /// Compare twisted degree, then the monomial, then prefer lower component index.
    #[default]
    TermOverPosition,
    /// Lower component index dominates, then the monomial.
    PositionOverTerm,
    /// Induced order of a resolution frame: `m e_k` is compared through the
    /// total monomial `m * M_k` (degrevlex), ties going to the larger index.
    Schreyer,
}

/// Order on terms of a graded free module `⊕ S(-a_k)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ModuleOrder {
    pub monomial: MonomialOrder,
    pub rule: PositionRule,
    pub twists: Vec<i32>,
    /// Total monomials `M_k`, used by [`PositionRule::Schreyer`] only.
    pub totals: Option<Arc<Vec<Monomial>>>,
}

impl ModuleOrder {
    pub fn ideal(monomial: MonomialOrder) -> Self {
        ModuleOrder { monomial, rule: PositionRule::TermOverPosition, twists: vec![0], totals: None }
    }

    pub fn top(monomial: MonomialOrder, twists: Vec<i32>) -> Self {
        ModuleOrder { monomial, rule: PositionRule::TermOverPosition, twists, totals: None }
    }

    /// Frame order with the given total monomials; twists are their degrees.
    pub fn schreyer(totals: Vec<Monomial>) -> Self {
        let twists = totals.iter().map(|m| m.degree() as i32).collect();
        ModuleOrder {
            monomial: MonomialOrder::Degrevlex,
            rule: PositionRule::Schreyer,
            twists,
            totals: Some(Arc::new(totals)),
        }
    }

    pub fn twist(&self, comp: u32) -> i32 {
        self.twists.get(comp as usize).copied().unwrap_or(0)
    }

    #[inline]
    pub fn key(&self, m: &Monomial, comp: u32) -> TermKey {
        let mut k = [0u64; 12];
        match self.rule {
            PositionRule::TermOverPosition => {
                // Twisted degree leads only for degree-compatible orders; ideals
                // (one component, no twist) reduce to the plain monomial key.
                if self.monomial.is_degree_compatible() {
                    k[0] = (m.degree() as i64 + self.twist(comp) as i64 + (1 << 32)) as u64;
                }
                self.monomial.write_key(m, &mut k[1..11]);
                k[11] = !(comp as u64);
            }
            PositionRule::PositionOverTerm => {
                k[0] = !(comp as u64);
                self.monomial.write_key(m, &mut k[1..11]);
            }
            PositionRule::Schreyer => {
                let totals = self.totals.as_ref().expect("schreyer order without totals");
                let t = m.mul(&totals[comp as usize]);
                self.monomial.write_key(&t, &mut k[0..10]);
                k[10] = comp as u64;
            }
        }
        k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn block_elimination_dominates() {
        let ord = MonomialOrder::elimination(&[0]);
        // t vs x^5 in vars (t, x, y)
        assert_eq!(ord.cmp(&mono(&[1, 0, 0]), &mono(&[0, 5, 0])), Ordering::Greater);
        assert_eq!(ord.cmp(&mono(&[0, 2, 1]), &mono(&[0, 1, 2])), Ordering::Greater);
        // elimination of a non-leading variable
        let ord = MonomialOrder::elimination(&[2]);
        assert_eq!(ord.cmp(&mono(&[0, 0, 1]), &mono(&[4, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn degrevlex_key_agrees_with_comparison() {
        let ms = [mono(&[2, 1, 0]), mono(&[1, 1, 1]), mono(&[0, 0, 3]), mono(&[3]), mono(&[0, 1])];
        let ord = MonomialOrder::Degrevlex;
        for a in &ms {
            for b in &ms {
                assert_eq!(ord.key(a).cmp(&ord.key(b)), a.cmp_degrevlex(b));
            }
        }
    }

    #[test]
    fn module_orders() {
        let top = ModuleOrder::top(MonomialOrder::Degrevlex, vec![0, 2]);
        // x^3 e_0 (degree 3) vs x e_1 (twisted degree 3): equal degree, x^3 > x
        assert!(top.key(&mono(&[3]), 0) > top.key(&mono(&[1]), 1));
        let flat = ModuleOrder::top(MonomialOrder::Degrevlex, vec![0, 0]);
        assert!(flat.key(&mono(&[1]), 0) > flat.key(&mono(&[1]), 1));
        assert!(top.key(&mono(&[1]), 1) > top.key(&mono(&[1]), 0));
        let pot = ModuleOrder { rule: PositionRule::PositionOverTerm, ..top.clone() };
        assert!(pot.key(&mono(&[0, 1]), 0) > pot.key(&mono(&[5]), 1));
        let sch = ModuleOrder::schreyer(vec![mono(&[0, 1]), mono(&[1])]);
        // x e_0 and y e_1 share the total monomial x y; the larger index wins
        assert!(sch.key(&mono(&[1]), 0) < sch.key(&mono(&[0, 1]), 1));
        assert!(sch.key(&mono(&[2]), 0) > sch.key(&mono(&[0, 1]), 1));
    }
}
