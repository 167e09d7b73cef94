//! Minimal graded free resolutions of cyclic modules `S/I`.
//!
//! A Schreyer frame is built level by level from the degrevlex Gröbner basis,
//! then pruned by splitting off unit entries.

use rustc_hash::FxHashMap;

use super::betti::BettiTable;
use crate::error::{Error, Result};
use crate::groebner::syzygy::frame_syzygies;
use crate::groebner::{Ctx, ModVec};
use crate::ring::{GradedIdeal, ModuleOrder, Monomial, Poly, Ring, Term, VarMask};

/// A matrix of polynomials stored by sparse columns; each column lists
/// `(row, entry)` with increasing rows and nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub nrows: usize,
    pub cols: Vec<Vec<(usize, Poly)>>,
}

impl PolyMatrix {
    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<&Poly> {
        let c = &self.cols[col];
        c.binary_search_by_key(&row, |e| e.0).ok().map(|k| &c[k].1)
    }

    /// Number of nonzero constant entries.
    pub fn unit_entries(&self) -> usize {
        self.cols.iter().flatten().filter(|(_, f)| f.is_constant() && !f.is_zero()).count()
    }
}

/// One frame level: vectors over the previous level, with their degrees.
struct FrameLevel {
    elems: Vec<ModVec>,
    totals: Vec<Monomial>,
}

/// Sort key for frame elements at `level`: lead component, then the exponent
/// of `x_{level-1}` in the lead monomial, then the lead monomial itself.
fn frame_sort(elems: Vec<ModVec>, level: usize, prev_totals: &[Monomial]) -> FrameLevel {
    let var = level - 1;
    let mut keyed: Vec<((u32, u32, Vec<u64>), ModVec)> = elems
        .into_iter()
        .map(|v| {
            let l = v.terms()[0];
            let key = crate::ring::MonomialOrder::Degrevlex.key(&l.mon).to_vec();
            ((l.comp, l.mon.exponent(var), key), v)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let elems: Vec<ModVec> = keyed.into_iter().map(|(_, v)| v).collect();
    let totals = elems
        .iter()
        .map(|v| {
            let l = v.terms()[0];
            l.mon.mul(&prev_totals[l.comp as usize])
        })
        .collect();
    FrameLevel { elems, totals }
}

fn to_columns(ring: &Ring, elems: &[ModVec]) -> Vec<Vec<(usize, Poly)>> {
    elems
        .iter()
        .map(|v| {
            let mut by_row: FxHashMap<u32, Vec<Term>> = FxHashMap::default();
            for t in v.terms() {
                by_row.entry(t.comp).or_default().push(Term { mon: t.mon, coef: t.coef });
            }
            let mut col: Vec<(usize, Poly)> = by_row
                .into_iter()
                .map(|(r, mut terms)| {
                    ring.sort_terms(&mut terms);
                    (r as usize, Poly { terms })
                })
                .collect();
            col.sort_by_key(|e| e.0);
            col
        })
        .collect()
}

/// `a - f * b` for sparse columns, dropping rows that are not alive.
fn column_axpy(ring: &Ring, a: &[(usize, Poly)], f: &Poly, b: &[(usize, Poly)], alive: &[bool]) -> Vec<(usize, Poly)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ra = a.get(i).map_or(usize::MAX, |e| e.0);
        let rb = b.get(j).map_or(usize::MAX, |e| e.0);
        let (row, val) = if ra < rb {
            i += 1;
            (ra, a[i - 1].1.clone())
        } else if rb < ra {
            j += 1;
            (rb, ring.neg(&ring.mul(f, &b[j - 1].1)))
        } else {
            i += 1;
            j += 1;
            (ra, ring.sub(&a[i - 1].1, &ring.mul(f, &b[j - 1].1)))
        };
        if alive[row] && !val.is_zero() {
            out.push((row, val));
        }
    }
    out
}

/// Minimal graded free resolution `0 <- S/I <- F_0 <- F_1 <- ... <- F_p <- 0`.
#[derive(Clone, Debug)]
pub struct Resolution {
    ring: Ring,
    /// `degrees[i][k]`: degree of the `k`-th generator of `F_i`.
    degrees: Vec<Vec<i64>>,
    /// `maps[i - 1]` is `d_i : F_i -> F_{i-1}`.
    maps: Vec<PolyMatrix>,
    frame_ranks: Vec<usize>,
}

impl Resolution {
    /// Resolves `S/I`. With `max_length`, fails if the resolution is longer.
    pub fn of_ideal(ideal: &GradedIdeal, max_length: Option<usize>) -> Result<Self> {
        let ring = ideal.ring().clone();
        let n = ring.nvars();
        if !ring.zero_weight().is_empty() {
            return Err(Error::InvalidArgument("resolutions need the standard grading".into()));
        }
        if ideal.is_unit()? {
            return Err(Error::InvalidArgument("the unit ideal has no cyclic resolution".into()));
        }
        let gb = ideal.gb()?;
        let ctx0 = Ctx::for_ring(&ring);
        let level1: Vec<ModVec> = gb.elements().iter().map(|g| ModVec::from_poly(g, 0)).collect();
        let mut levels: Vec<FrameLevel> = vec![FrameLevel { elems: Vec::new(), totals: vec![Monomial::one()] }];
        if !level1.is_empty() {
            levels.push(frame_sort(level1, 1, &levels[0].totals));
        }
        let mut prev_ctx = ctx0;
        loop {
            let i = levels.len() - 1;
            if i == 0 || levels[i].elems.is_empty() {
                break;
            }
            if i > n + 1 {
                return Err(Error::Internal(format!("frame longer than {} levels", n + 1)));
            }
            let cur = &levels[i];
            let ctx = Ctx::new(ring.field(), ModuleOrder::schreyer(cur.totals.clone()), VarMask::EMPTY);
            let next = frame_syzygies(&prev_ctx, &cur.elems, &ctx)?;
            if next.is_empty() {
                break;
            }
            let sorted = frame_sort(next, i + 1, &cur.totals);
            levels.push(sorted);
            prev_ctx = ctx;
        }
        let frame_ranks: Vec<usize> =
            levels.iter().enumerate().map(|(i, l)| if i == 0 { 1 } else { l.elems.len() }).collect();
        let mut degrees: Vec<Vec<i64>> =
            levels.iter().map(|l| l.totals.iter().map(|m| m.degree() as i64).collect()).collect();
        let mut maps: Vec<PolyMatrix> = levels
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, l)| PolyMatrix { nrows: frame_ranks[i - 1], cols: to_columns(&ring, &l.elems) })
            .collect();
        drop(levels);
        prune(&ring, &mut degrees, &mut maps);
        while maps.last().is_some_and(|m| m.ncols() == 0) {
            maps.pop();
            degrees.pop();
        }
        if let Some(max) = max_length {
            if maps.len() > max {
                return Err(Error::Internal(format!("resolution longer than {max}")));
            }
        }
        Ok(Resolution { ring, degrees, maps, frame_ranks })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Projective dimension of `S/I`.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.degrees.get(i).map_or(0, |d| d.len())
    }

    pub fn degrees(&self, i: usize) -> &[i64] {
        self.degrees.get(i).map_or(&[], |d| d.as_slice())
    }

    /// `d_i : F_i -> F_{i-1}` for `1 <= i <= length`.
    pub fn map(&self, i: usize) -> &PolyMatrix {
        &self.maps[i - 1]
    }

    /// Ranks of the Schreyer frame before pruning.
    pub fn frame_ranks(&self) -> &[usize] {
        &self.frame_ranks
    }

    pub fn betti(&self) -> BettiTable {
        let mut b = BettiTable::new(self.ring.nvars());
        for (i, ds) in self.degrees.iter().enumerate() {
            for &d in ds {
                b.add(i, d, 1);
            }
        }
        b
    }

    /// True when no map has a nonzero constant entry.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| m.unit_entries() == 0)
    }

    /// True when every map is homogeneous of degree zero for the recorded twists.
    pub fn is_graded(&self) -> bool {
        self.maps.iter().enumerate().all(|(k, m)| {
            m.cols.iter().enumerate().all(|(c, col)| {
                col.iter().all(|(r, f)| {
                    f.is_homogeneous() && f.degree().map(|d| d as i64) == Some(self.degrees[k + 1][c] - self.degrees[k][*r])
                })
            })
        })
    }

    /// Checks `d_i ∘ d_{i+1} = 0` for all `i`.
    pub fn is_complex(&self) -> bool {
        let ring = &self.ring;
        self.maps.windows(2).all(|w| {
            let (a, b) = (&w[0], &w[1]);
            b.cols.iter().all(|col| {
                let mut acc: FxHashMap<usize, Poly> = FxHashMap::default();
                for (k, g) in col {
                    for (r, f) in &a.cols[*k] {
                        let e = acc.entry(*r).or_insert_with(Poly::zero);
                        *e = ring.add(e, &ring.mul(g, f));
                    }
                }
                acc.values().all(|p| p.is_zero())
            })
        })
    }
}

/// Splits off unit entries level by level until no map has one.
fn prune(ring: &Ring, degrees: &mut [Vec<i64>], maps: &mut [PolyMatrix]) {
    let fld = ring.field();
    let mut alive: Vec<Vec<bool>> = degrees.iter().map(|d| vec![true; d.len()]).collect();
    for i in 1..=maps.len() {
        let (lower, upper) = alive.split_at_mut(i);
        let rows_alive = &mut lower[i - 1];
        let cols_alive = &upper[0];
        let m = &mut maps[i - 1];
        for (c, col) in m.cols.iter_mut().enumerate() {
            if cols_alive[c] {
                col.retain(|(r, _)| rows_alive[*r]);
            }
        }
        let mut killed_cols: Vec<usize> = Vec::new();
        let mut col_dead = cols_alive.clone().into_iter().map(|a| !a).collect::<Vec<_>>();
        loop {
            let mut changed = false;
            for q in 0..m.ncols() {
                if col_dead[q] {
                    continue;
                }
                let Some((p, u)) = m.cols[q]
                    .iter()
                    .find(|(r, f)| rows_alive[*r] && f.is_constant() && !f.is_zero())
                    .map(|(r, f)| (*r, f.terms()[0].coef))
                else {
                    continue;
                };
                let pivot = m.cols[q].clone();
                let uinv = fld.inv(u).expect("nonzero unit");
                rows_alive[p] = false;
                for c in 0..m.ncols() {
                    if c == q || col_dead[c] {
                        continue;
                    }
                    let Ok(k) = m.cols[c].binary_search_by_key(&p, |e| e.0) else { continue };
                    let factor = ring.scale(&m.cols[c][k].1, uinv);
                    m.cols[c] = column_axpy(ring, &m.cols[c], &factor, &pivot, rows_alive);
                }
                col_dead[q] = true;
                killed_cols.push(q);
                changed = true;
            }
            if !changed {
                break;
            }
        }
        for q in killed_cols {
            upper[0][q] = false;
        }
    }
    // renumber survivors
    let maps_len = maps.len();
    for i in 1..=maps_len {
        let row_map: Vec<Option<usize>> = renumber(&alive[i - 1]);
        let m = &mut maps[i - 1];
        let cols = std::mem::take(&mut m.cols);
        m.cols = cols
            .into_iter()
            .enumerate()
            .filter(|(c, _)| alive[i][*c])
            .map(|(_, col)| {
                col.into_iter().filter_map(|(r, f)| row_map[r].map(|r2| (r2, f))).collect()
            })
            .collect();
        m.nrows = alive[i - 1].iter().filter(|a| **a).count();
    }
    for (i, d) in degrees.iter_mut().enumerate() {
        let kept: Vec<i64> = d.iter().zip(&alive[i]).filter(|(_, a)| **a).map(|(x, _)| *x).collect();
        *d = kept;
    }
}

fn renumber(alive: &[bool]) -> Vec<Option<usize>> {
    let mut k = 0;
    alive
        .iter()
        .map(|&a| {
            if a {
                k += 1;
                Some(k - 1)
            } else {
                None
            }
        })
        .collect()
}

/// Minimal resolution of `S/I` and its Betti table.
pub fn minimal_free_resolution(ideal: &GradedIdeal, max_length: Option<usize>) -> Result<(BettiTable, Resolution)> {
    let res = Resolution::of_ideal(ideal, max_length)?;
    Ok((res.betti(), res))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::hilbert::{binom, HilbertSeries};
    use crate::ring::{text::parse_poly, PrimeField};

    fn ideal(names: &[&str], src: &[&str]) -> GradedIdeal {
        let r = Ring::with_names(PrimeField::default_field(), names).unwrap();
        GradedIdeal::new(&r, src.iter().map(|s| parse_poly(&r, s, 0).unwrap()).collect()).unwrap()
    }

    #[test]
    fn koszul() {
        let i = ideal(&["a", "b", "c", "d"], &["a", "b", "c", "d"]);
        let res = Resolution::of_ideal(&i, None).unwrap();
        assert_eq!(res.length(), 4);
        for k in 0..=4 {
            assert_eq!(res.rank(k) as i64, binom(4, k as i64));
            assert!(res.degrees(k).iter().all(|&d| d == k as i64));
        }
        assert!(res.is_complex() && res.is_minimal() && res.is_graded());
    }

    #[test]
    fn twisted_cubic_eagon_northcott() {
        let i = ideal(&["x", "y", "z", "w"], &["x*z-y^2", "x*w-y*z", "y*w-z^2"]);
        let res = Resolution::of_ideal(&i, None).unwrap();
        assert_eq!(res.degrees(1), &[2, 2, 2]);
        assert_eq!(res.degrees(2), &[3, 3]);
        assert_eq!(res.length(), 2);
        assert!(res.is_complex() && res.is_minimal() && res.is_graded());
    }

    #[test]
    fn nonminimal_input_is_pruned() {
        // complete intersection whose Gröbner basis has an extra cubic
        let i = ideal(&["x", "y", "z"], &["x^2-y*z", "x*y"]);
        assert!(i.gb().unwrap().len() > 2);
        let res = Resolution::of_ideal(&i, None).unwrap();
        assert!(res.is_complex() && res.is_minimal() && res.is_graded());
        let hs = HilbertSeries::of_ideal(&i).unwrap();
        assert_eq!(res.betti().hilbert_numerator(), hs.numerator);
        assert_eq!(res.degrees(1), &[2, 2]);
        assert_eq!(res.degrees(2), &[4]);
    }

    #[test]
    fn zero_ideal() {
        let i = ideal(&["x", "y"], &[]);
        let res = Resolution::of_ideal(&i, None).unwrap();
        assert_eq!(res.length(), 0);
        assert_eq!(res.rank(0), 1);
    }
}
