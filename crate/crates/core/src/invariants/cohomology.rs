//! Graded Ext into the canonical module and local cohomology dimensions.
//!
//! `dim Ext^i(S/I, S(-N))_n` is read off the dual of the minimal resolution,
//! one degree slice at a time; local duality then gives
//! `h^i(n) = dim H^i_m(S/I)_n = dim Ext^{N-i}(S/I, S(-N))_{-n}` with `N = nvars`.

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::hilbert::{binom, HilbertSeries};
use super::resolution::{PolyMatrix, Resolution};
use crate::error::{Error, Result};
use crate::ideal_ops::saturate_irrelevant;
use crate::linalg::{sparse_rank, SparseRow};
use crate::ring::{GradedIdeal, Monomial, Ring};

/// Largest number of basis vectors allowed in one degree slice.
pub const MAX_SLICE_DIM: usize = 3_000_000;

fn slice_dim(nvars: usize, degrees: &[i64], shift: i64) -> usize {
    degrees
        .iter()
        .map(|&a| {
            let e = shift + a;
            if e < 0 {
                0
            } else {
                binom(e + nvars as i64 - 1, nvars as i64 - 1) as usize
            }
        })
        .sum()
}

/// Rank in degree `n` of `d^T : Hom(F_{i-1}, S(-N)) -> Hom(F_i, S(-N))`,
/// where `d = d_i` has rows indexed by `F_{i-1}` (degrees `src`) and columns
/// by `F_i` (degrees `dst`).
fn dual_rank(ring: &Ring, d: &PolyMatrix, src: &[i64], n: i64) -> Result<usize> {
    let nv = ring.nvars();
    let shift = n - nv as i64;
    let dim = slice_dim(nv, src, shift);
    if dim > MAX_SLICE_DIM {
        return Err(Error::Resource(format!("degree slice of dimension {dim} exceeds {MAX_SLICE_DIM}")));
    }
    if dim == 0 || d.ncols() == 0 {
        return Ok(0);
    }
    let mut by_row: Vec<Vec<(usize, &crate::ring::Poly)>> = vec![Vec::new(); d.nrows];
    for (c, col) in d.cols.iter().enumerate() {
        for (r, f) in col {
            by_row[*r].push((c, f));
        }
    }
    let mut index: FxHashMap<(usize, Monomial), usize> = FxHashMap::default();
    let mut rows: Vec<SparseRow> = Vec::with_capacity(dim);
    for (k, &a) in src.iter().enumerate() {
        let e = shift + a;
        if e < 0 || by_row[k].is_empty() {
            continue;
        }
        for m in Monomial::all_of_degree(nv, e as u32) {
            let mut row: SparseRow = Vec::new();
            for (c, f) in &by_row[k] {
                for t in f.terms() {
                    let key = (*c, m.mul(&t.mon));
                    let next = index.len();
                    let col = *index.entry(key).or_insert(next);
                    row.push((col, t.coef));
                }
            }
            rows.push(row);
        }
    }
    Ok(sparse_rank(ring.field(), index.len(), &rows))
}

/// `dim Ext^i(S/I, S(-N))_n` for every `n` in `window`, from a minimal resolution.
pub fn ext_dims_from_resolution(res: &Resolution, i: usize, window: (i64, i64)) -> Result<Vec<(i64, i64)>> {
    let ring = res.ring();
    let nv = ring.nvars();
    let (lo, hi) = window;
    if lo > hi {
        return Err(Error::InvalidArgument(format!("empty window {lo}:{hi}")));
    }
    let pd = res.length();
    (lo..=hi)
        .into_par_iter()
        .map(|n| {
            if i > pd {
                return Ok((n, 0));
            }
            let shift = n - nv as i64;
            let dim = slice_dim(nv, res.degrees(i), shift);
            if dim > MAX_SLICE_DIM {
                return Err(Error::Resource(format!("degree slice of dimension {dim} exceeds {MAX_SLICE_DIM}")));
            }
            if dim == 0 {
                return Ok((n, 0));
            }
            let out_rank = if i < pd { dual_rank(ring, res.map(i + 1), res.degrees(i), n)? } else { 0 };
            let in_rank = if i >= 1 { dual_rank(ring, res.map(i), res.degrees(i - 1), n)? } else { 0 };
            Ok((n, dim as i64 - out_rank as i64 - in_rank as i64))
        })
        .collect()
}

/// `dim Ext^i(S/I, S(-N))_n` for `n` in the window.
pub fn graded_ext_dims(i_ideal: &GradedIdeal, i: usize, window: (i64, i64)) -> Result<Vec<(i64, i64)>> {
    let res = Resolution::of_ideal(i_ideal, None)?;
    ext_dims_from_resolution(&res, i, window)
}

/// `h^i(n) = dim H^i_m(S/I)_n` for `i = 0..=3` on a window of degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyProfile {
    pub lo: i64,
    pub hi: i64,
    /// `table[i][n - lo]`.
    pub table: Vec<Vec<i64>>,
}

impl CohomologyProfile {
    pub fn h(&self, i: usize, n: i64) -> Option<i64> {
        if n < self.lo || n > self.hi {
            return None;
        }
        self.table.get(i).map(|row| row[(n - self.lo) as usize])
    }

    /// Nonzero values of `h^i` inside the window.
    pub fn support(&self, i: usize) -> Vec<(i64, i64)> {
        (self.lo..=self.hi).filter_map(|n| self.h(i, n).filter(|&v| v != 0).map(|v| (n, v))).collect()
    }

    pub fn format_kv(&self) -> String {
        let mut out = format!("window {} {}\n", self.lo, self.hi);
        for (i, row) in self.table.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                out.push_str(&format!("h {i} {} {v}\n", self.lo + k as i64));
            }
        }
        out
    }

    pub fn format_ascii(&self) -> String {
        let ns: Vec<i64> = (self.lo..=self.hi).collect();
        let cells: Vec<Vec<String>> = std::iter::once(ns.iter().map(|n| n.to_string()).collect())
            .chain(self.table.iter().map(|row| row.iter().map(|v| v.to_string()).collect()))
            .collect();
        let width = cells.iter().flatten().map(|c| c.len()).max().unwrap_or(1);
        let mut out = String::new();
        for (k, row) in cells.iter().enumerate() {
            let label = if k == 0 { "n".to_string() } else { format!("h^{}", k - 1) };
            out.push_str(&format!("{label:>4} |"));
            for c in row {
                out.push_str(&format!(" {c:>width$}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Default window `[-3, reg A + 2]`.
pub fn default_window(res: &Resolution) -> (i64, i64) {
    (-3, res.betti().reg() + 2)
}

pub fn profile_from_resolution(res: &Resolution, window: (i64, i64)) -> Result<CohomologyProfile> {
    let nv = res.ring().nvars();
    let (lo, hi) = window;
    let mut table = Vec::new();
    for i in 0..=3usize {
        if i > nv {
            table.push(vec![0; (hi - lo + 1) as usize]);
            continue;
        }
        let dims = ext_dims_from_resolution(res, nv - i, (-hi, -lo))?;
        let mut row = vec![0i64; (hi - lo + 1) as usize];
        for (t, v) in dims {
            row[(-t - lo) as usize] = v;
        }
        table.push(row);
    }
    Ok(CohomologyProfile { lo, hi, table })
}

/// Local cohomology profile of `S/I`; `window` defaults to `[-3, reg + 2]`.
pub fn cohomology_profile(i: &GradedIdeal, window: Option<(i64, i64)>) -> Result<CohomologyProfile> {
    let res = Resolution::of_ideal(i, None)?;
    let w = window.unwrap_or_else(|| default_window(&res));
    profile_from_resolution(&res, w)
}

/// `dim (I^sat / I)_n`, which must agree with `h^0(n)`.
pub fn h0_via_saturation(i: &GradedIdeal, window: (i64, i64)) -> Result<Vec<(i64, i64)>> {
    let sat = saturate_irrelevant(i)?;
    let a = HilbertSeries::of_ideal(i)?;
    let b = HilbertSeries::of_ideal(&sat)?;
    Ok((window.0..=window.1).map(|n| (n, a.hilbert_function(n) - b.hilbert_function(n))).collect())
}

/// Invariants read off a cohomology profile of a surface or curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedInvariants {
    /// `None` when `h^1` vanishes identically (the infimum is `-inf`).
    pub delta: Option<i64>,
    /// Stable value of `h^2(n)` for `n << 0` (surfaces only).
    pub e: Option<i64>,
    /// True unless `sigma = 0` and `4 < r < d <= 2r - 2`, where the stable
    /// value is known to equal the non-Cohen–Macaulay count.
    pub e_caveat: bool,
    /// `h^2(0) - h^2(-1) - (h^3(0) - h^3(-1))`.
    pub sigma: i64,
    pub beg_h1: Option<i64>,
    pub end_h1: Option<i64>,
    /// `h^1(1)`.
    pub lin_deficiency: i64,
}

/// `dim` is the Krull dimension of `S/I` (3 for surfaces, 2 for curves).
pub fn derived_invariants(p: &CohomologyProfile, d: i64, r: i64, dim: usize) -> Result<DerivedInvariants> {
    let widen = |reason: &str| Error::WidenWindow { lo: p.lo as i32, hi: p.hi as i32, reason: reason.to_string() };
    if p.lo > -1 || p.hi < 1 {
        return Err(widen("the window must contain -1, 0 and 1"));
    }
    let h1 = |n: i64| p.h(1, n).expect("inside window");
    if h1(p.lo) != 0 || h1(p.hi) != 0 {
        return Err(widen("h^1 does not vanish at both ends of the window"));
    }
    let support = p.support(1);
    let beg_h1 = support.first().map(|s| s.0);
    let end_h1 = support.last().map(|s| s.0);
    let delta = (p.lo + 1..=p.hi).rev().find(|&n| h1(n) > (h1(n - 1) - 1).max(0));
    let h = |i: usize, n: i64| p.h(i, n).expect("inside window");
    let sigma = h(2, 0) - h(2, -1) - (h(3, 0) - h(3, -1));
    let e = if dim == 3 {
        if p.lo + 2 > 0 {
            return Err(widen("need three degrees at or below zero for h^2 to stabilize"));
        }
        let (a, b, c) = (h(2, p.lo), h(2, p.lo + 1), h(2, p.lo + 2));
        if a != b || b != c {
            return Err(widen("h^2 has not stabilized at the low end"));
        }
        Some(a)
    } else {
        None
    };
    let e_caveat = !(sigma == 0 && 4 < r && r < d && d <= 2 * r - 2);
    Ok(DerivedInvariants { delta, e, e_caveat, sigma, beg_h1, end_h1, lin_deficiency: h1(1) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{text::parse_poly, PrimeField};

    fn ideal(names: &[&str], src: &[&str]) -> GradedIdeal {
        let r = Ring::with_names(PrimeField::default_field(), names).unwrap();
        GradedIdeal::new(&r, src.iter().map(|s| parse_poly(&r, s, 0).unwrap()).collect()).unwrap()
    }

    #[test]
    fn complete_intersection_has_no_low_ext() {
        let i = ideal(&["x", "y", "z", "w"], &["x*y-z*w", "x^2+y^2+z^2+w^2"]);
        for k in 0..2 {
            assert!(graded_ext_dims(&i, k, (-6, 6)).unwrap().iter().all(|&(_, v)| v == 0));
        }
        // Ext^2(S/I, S(-4)) = (S/I)(4 - 4) up to the twist: dim in degree n is HF(n + 4 - 4)
        let hs = HilbertSeries::of_ideal(&i).unwrap();
        for (n, v) in graded_ext_dims(&i, 2, (-2, 6)).unwrap() {
            assert_eq!(v, hs.hilbert_function(n + 4 - 4));
        }
    }

    #[test]
    fn points_and_maximal_ideal() {
        // S/m: H^0 = K in degree 0
        let m = ideal(&["x", "y", "z"], &["x", "y", "z"]);
        let p = cohomology_profile(&m, Some((-2, 2))).unwrap();
        assert_eq!(p.support(0), vec![(0, 1)]);
        assert!(p.support(1).is_empty());
        // two points in P^2: H^1(S/I)_n = 2 - HF(n) for n < 1
        let pts = ideal(&["x", "y", "z"], &["x", "y*z"]);
        let p = cohomology_profile(&pts, Some((-3, 3))).unwrap();
        assert_eq!(p.support(1), vec![(-3, 2), (-2, 2), (-1, 2), (0, 1)]);
    }

    #[test]
    fn twisted_cubic_profile() {
        let i = ideal(&["x", "y", "z", "w"], &["x*z-y^2", "x*w-y*z", "y*w-z^2"]);
        let p = cohomology_profile(&i, Some((-4, 3))).unwrap();
        assert!(p.support(0).is_empty() && p.support(1).is_empty());
        // H^2_m(A)_n = H^1(O_C(n)) = h^1(O_{P^1}(3n)) = -3n - 1 for n < 0
        assert_eq!(p.support(2), vec![(-4, 11), (-3, 8), (-2, 5), (-1, 2)]);
        let inv = derived_invariants(&p, 3, 3, 2).unwrap();
        assert_eq!(inv.delta, None);
        assert_eq!(inv.lin_deficiency, 0);
    }

    #[test]
    fn h0_agrees_with_saturation() {
        let i = ideal(&["x", "y"], &["x^2", "x*y"]);
        let p = cohomology_profile(&i, Some((-1, 4))).unwrap();
        let h0 = h0_via_saturation(&i, (-1, 4)).unwrap();
        for (n, v) in h0 {
            assert_eq!(p.h(0, n), Some(v));
        }
        assert_eq!(p.support(0), vec![(1, 1)]);
    }
}
