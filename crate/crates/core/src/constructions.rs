//! Rational normal curves and scrolls, projections, hyperplane sections,
//! unions with lines, curves of maximal regularity and point-set tests.

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal_ops::{
    add_forms, eliminate, ideal_intersect, quotient_by, saturate_irrelevant, subring, substitute, LinearMap,
};
use crate::invariants::{minimal_free_resolution, HilbertSeries};
use crate::linalg::Matrix;
use crate::ring::{GradedIdeal, Monomial, Poly, PrimeField, Ring};

/// All 2x2 minors of the matrix with the given rows.
pub fn minors_2x2(ring: &Ring, top: &[Poly], bottom: &[Poly]) -> Vec<Poly> {
    let mut out = Vec::new();
    for j in 0..top.len() {
        for k in j + 1..top.len() {
            let m = ring.sub(&ring.mul(&top[j], &bottom[k]), &ring.mul(&top[k], &bottom[j]));
            if !m.is_zero() {
                out.push(m);
            }
        }
    }
    out
}

/// Ring `K[x_0, ..., x_{n-1}]` with the usual names.
pub fn standard_ring(field: PrimeField, n: usize) -> Result<Ring> {
    Ring::standard(field, n)
}

/// The rational normal curve of degree `nvars - 1`: minors of the Hankel matrix.
pub fn rational_normal_curve(ring: &Ring) -> Result<GradedIdeal> {
    let d = ring.nvars().saturating_sub(1);
    if d < 2 {
        return Err(Error::InvalidArgument("rational normal curve needs degree at least 2".into()));
    }
    let top: Vec<Poly> = (0..d).map(|i| ring.var(i)).collect();
    let bottom: Vec<Poly> = (1..=d).map(|i| ring.var(i)).collect();
    GradedIdeal::new(ring, minors_2x2(ring, &top, &bottom))
}

/// The rational normal surface scroll `S(a1, a2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScrollSpec {
    pub a1: usize,
    pub a2: usize,
}

impl ScrollSpec {
    pub fn new(a1: usize, a2: usize) -> Result<Self> {
        if a1 < 1 || a1 > a2 {
            return Err(Error::InvalidArgument(format!("scroll type ({a1},{a2}) needs 1 <= a1 <= a2")));
        }
        Ok(ScrollSpec { a1, a2 })
    }

    pub fn ambient_dim(&self) -> usize {
        self.a1 + self.a2 + 1
    }

    pub fn degree(&self) -> usize {
        self.a1 + self.a2
    }
}

/// Minors of the block matrix
/// `[x_0 .. x_{a1-1} | x_{a1+1} .. x_{a1+a2}; x_1 .. x_{a1} | x_{a1+2} .. x_{a1+a2+1}]`
/// in `K[x_0, ..., x_{a1+a2+1}]`.
pub fn scroll(field: PrimeField, spec: ScrollSpec) -> Result<GradedIdeal> {
    let ring = Ring::standard(field, spec.ambient_dim() + 1)?;
    let (a1, a2) = (spec.a1, spec.a2);
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for k in 0..a1 {
        top.push(ring.var(k));
        bottom.push(ring.var(k + 1));
    }
    for k in 0..a2 {
        top.push(ring.var(a1 + 1 + k));
        bottom.push(ring.var(a1 + 2 + k));
    }
    GradedIdeal::new(&ring, minors_2x2(&ring, &top, &bottom))
}

/// A projection center: an optional coordinate change of the ambient ring,
/// followed by elimination of coordinates. The center is the subspace where
/// all kept coordinates vanish.
#[derive(Clone, Debug)]
pub struct Center {
    pub substitution: Option<LinearMap>,
    pub eliminate: Vec<usize>,
}

impl Center {
    pub fn coordinates(eliminate: Vec<usize>) -> Self {
        Center { substitution: None, eliminate }
    }

    /// Eliminates the named coordinates.
    pub fn named(ring: &Ring, names: &[&str]) -> Result<Self> {
        Ok(Center::coordinates(var_indices(ring, names)?))
    }

    /// `x_a -> x_a + x_b` in `ring`, then elimination of the named coordinates.
    /// Projects from a center containing the point `e_a + e_b`
    /// when `x_b` is eliminated.
    pub fn sheared(ring: &Ring, a: &str, b: &str, names: &[&str]) -> Result<Self> {
        let ia = var_indices(ring, &[a])?[0];
        let ib = var_indices(ring, &[b])?[0];
        let n = ring.nvars();
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j) + i64::from(i == ia && j == ib)).collect())
            .collect();
        Ok(Center { substitution: Some(LinearMap::new(ring, ring, matrix)?), eliminate: var_indices(ring, names)? })
    }
}

pub fn var_indices(ring: &Ring, names: &[&str]) -> Result<Vec<usize>> {
    names
        .iter()
        .map(|n| ring.var_index(n).ok_or_else(|| Error::InvalidArgument(format!("unknown variable {n}"))))
        .collect()
}

/// Image of `V(I)` under the projection from `center`.
pub fn project(i: &GradedIdeal, center: &Center) -> Result<GradedIdeal> {
    let moved = match &center.substitution {
        Some(map) => substitute(i, map)?,
        None => i.clone(),
    };
    let ring = moved.ring().clone();
    let kept: Vec<Poly> = (0..ring.nvars()).filter(|v| !center.eliminate.contains(v)).map(|v| ring.var(v)).collect();
    let meet = add_forms(&moved, &kept)?;
    if HilbertSeries::of_ideal(&meet)?.dimension() > 0 {
        return Err(Error::Geometry("the projection center meets the variety".into()));
    }
    eliminate(&moved, &center.eliminate)
}

/// `(I + f)^sat` in the ring without the pivot variable of `f` (its highest
/// index variable), after solving `f = 0` for it.
pub fn hyperplane_section(i: &GradedIdeal, f: &Poly) -> Result<GradedIdeal> {
    let ring = i.ring();
    if f.is_zero() || f.degree() != Some(1) || !ring.is_homogeneous(f) {
        return Err(Error::InvalidArgument("a hyperplane needs a nonzero linear form".into()));
    }
    if !quotient_by(i, f)?.same_ideal(i)? {
        return Err(Error::Geometry("the linear form is a zerodivisor on S/I; retry with another form".into()));
    }
    let (target, images) = solve_linear(ring, f)?;
    let gens = i.gens().iter().map(|g| ring.substitute(g, &images, &target)).collect();
    saturate_irrelevant(&GradedIdeal::new(&target, gens)?)
}

/// The ring without the pivot of `f` and the images of all variables
/// restricted to `f = 0`.
pub fn solve_linear(ring: &Ring, f: &Poly) -> Result<(Ring, Vec<Poly>)> {
    let fld = ring.field();
    let n = ring.nvars();
    let mut c = vec![0u32; n];
    for t in f.terms() {
        let v = (0..n).find(|&v| t.mon.exponent(v) == 1).expect("linear term");
        c[v] = t.coef;
    }
    let p = (0..n).rev().find(|&v| c[v] != 0).ok_or_else(|| Error::InvalidArgument("zero form".into()))?;
    let target = subring(ring, &[p])?;
    let idx = |v: usize| if v < p { v } else { v - 1 };
    let inv = fld.inv(c[p])?;
    let images = (0..n)
        .map(|v| {
            if v == p {
                target.from_terms(
                    (0..n).filter(|&w| w != p && c[w] != 0).map(|w| (Monomial::var(idx(w)), fld.neg(fld.mul(c[w], inv)))),
                )
            } else {
                target.var(idx(v))
            }
        })
        .collect();
    Ok((target, images))
}

/// Checks that `i_l` is generated by `nvars - 2` independent linear forms.
pub fn is_line(i_l: &GradedIdeal) -> Result<bool> {
    let ring = i_l.ring();
    let n = ring.nvars();
    if i_l.gens().iter().any(|g| g.degree() != Some(1)) {
        return Ok(false);
    }
    let rows: Vec<Vec<u32>> = i_l.gens().iter().map(|g| linear_coeffs(ring, g)).collect();
    let rank = if rows.is_empty() { 0 } else { Matrix::from_rows(&rows).rank(ring.field()) };
    Ok(n >= 2 && rank == n - 2)
}

pub fn linear_coeffs(ring: &Ring, f: &Poly) -> Vec<u32> {
    let n = ring.nvars();
    let mut c = vec![0u32; n];
    for t in f.terms() {
        if let Some(v) = (0..n).find(|&v| t.mon.exponent(v) == 1) {
            if t.mon.degree() == 1 {
                c[v] = t.coef;
            }
        }
    }
    c
}

/// Ideal of `C ∪ L`; checks degree additivity when `L` is not contained in `C`.
pub fn union_with_line(i_c: &GradedIdeal, i_l: &GradedIdeal) -> Result<GradedIdeal> {
    if !is_line(i_l)? {
        return Err(Error::InvalidArgument("the second ideal is not the ideal of a line".into()));
    }
    let j = ideal_intersect(i_c, i_l)?;
    if !i_l.contains_ideal(i_c)? {
        let dc = HilbertSeries::of_ideal(i_c)?;
        let dj = HilbertSeries::of_ideal(&j)?;
        if dc.dimension() == 2 && dj.degree() != dc.degree() + 1 {
            return Err(Error::Internal("degree of the union is not additive".into()));
        }
    }
    Ok(j)
}

/// Length of the finite scheme `X ∩ L`.
pub fn secant_length(i_x: &GradedIdeal, i_l: &GradedIdeal) -> Result<i64> {
    let sum = add_forms(i_x, i_l.gens())?;
    let sat = saturate_irrelevant(&sum)?;
    let hp = HilbertSeries::of_ideal(&sat)?.hilbert_polynomial();
    match hp.dim {
        0 => Ok(0),
        1 => Ok(hp.coeffs[0]),
        _ => Err(Error::Geometry("the intersection with the line is not finite".into())),
    }
}

/// A map `P^1 -> P^r`: coordinate `i` is the binary form
/// `sum_k forms[i][k] s^{d-k} t^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parametrization {
    pub field: PrimeField,
    pub degree: usize,
    pub forms: Vec<Vec<u32>>,
}

impl Parametrization {
    /// Image of `(s : t)`.
    pub fn point(&self, s: u32, t: u32) -> Vec<u32> {
        let f = self.field;
        let d = self.degree;
        let monos: Vec<u32> = (0..=d).map(|k| f.mul(f.pow(s, (d - k) as u64), f.pow(t, k as u64))).collect();
        self.forms.iter().map(|row| row.iter().zip(&monos).fold(0, |acc, (a, b)| f.add(acc, f.mul(*a, *b)))).collect()
    }

    /// Coefficients of `h(phi(s, t))` for a linear form with coefficients `h`.
    pub fn pullback(&self, h: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; self.degree + 1];
        for (hi, row) in h.iter().zip(&self.forms) {
            for (k, c) in row.iter().enumerate() {
                out[k] = f.add(out[k], f.mul(*hi, *c));
            }
        }
        out
    }
}

fn binary_mul(f: PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(*x, *y));
        }
    }
    out
}

/// Ideal of the image of a parametrization, generated in degrees `<= max_degree`.
pub fn implicitize(ring: &Ring, param: &Parametrization, max_degree: usize) -> Result<GradedIdeal> {
    let fld = ring.field();
    let n = ring.nvars();
    if param.forms.len() != n {
        return Err(Error::DimensionMismatch("one binary form per variable".into()));
    }
    let mut gens: Vec<Poly> = Vec::new();
    for k in 1..=max_degree {
        let mono_objs = Monomial::all_of_degree(n, k as u32);
        let monos: Vec<Vec<u32>> = mono_objs.iter().map(|m| m.exponents(n)).collect();
        let width = param.degree * k + 1;
        let images: Vec<Vec<u32>> = monos
            .par_iter()
            .map(|e| {
                let mut acc = vec![1u32];
                for (v, &ev) in e.iter().enumerate() {
                    for _ in 0..ev {
                        acc = binary_mul(fld, &acc, &param.forms[v]);
                    }
                }
                acc.resize(width, 0);
                acc
            })
            .collect();
        // columns are monomials; the kernel gives the degree-k part of the ideal
        let mut m = Matrix::zeros(width, monos.len());
        for (c, img) in images.iter().enumerate() {
            for (r, &v) in img.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        let kernel = m.kernel(fld);
        if kernel.is_empty() {
            continue;
        }
        let current = GradedIdeal::new(ring, gens.clone())?;
        let gb = current.gb()?;
        let mut reduced: Vec<Poly> = Vec::new();
        for v in kernel {
            let f = ring.from_terms(mono_objs.iter().zip(&v).filter(|(_, c)| **c != 0).map(|(m, c)| (*m, *c)));
            let r = gb.reduce(&f);
            if !r.is_zero() {
                reduced.push(r);
            }
        }
        if reduced.is_empty() {
            continue;
        }
        // keep a linearly independent subset of the normal forms
        let index: std::collections::HashMap<Monomial, usize> =
            mono_objs.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut e = crate::linalg::SparseEchelon::new(fld, mono_objs.len());
        for r in reduced {
            let row: Vec<(usize, u32)> = r.terms().iter().map(|t| (index[&t.mon], t.coef)).collect();
            if e.add_row(&row) {
                gens.push(r);
            }
        }
    }
    GradedIdeal::new(ring, gens)
}

/// A curve of maximal regularity with an extremal secant line.
#[derive(Clone, Debug)]
pub struct MaxRegCurve {
    pub r: usize,
    pub d: usize,
    pub ideal: GradedIdeal,
    pub line: GradedIdeal,
    pub param: Parametrization,
    /// Two spanning vectors of the line.
    pub line_span: [Vec<u32>; 2],
    pub seed: u64,
}

const MAXREG_RETRIES: usize = 10;

/// Projects the rational normal curve of degree `d` from a general
/// `P^{d-r-1}` inside the span of `d - r + 2` of its points.
pub fn maxreg_curve(field: PrimeField, r: usize, d: usize, seed: u64) -> Result<MaxRegCurve> {
    if r < 4 || d <= r + 1 {
        return Err(Error::InvalidArgument(format!("maxreg curve needs r >= 4 and d > r + 1, got r={r}, d={d}")));
    }
    let mut last = String::new();
    for attempt in 0..MAXREG_RETRIES {
        let s = seed.wrapping_add(attempt as u64);
        match maxreg_attempt(field, r, d, s) {
            Ok(Some(c)) => return Ok(c),
            Ok(None) => last = format!("seed {s}: postcondition failed"),
            Err(e) => last = format!("seed {s}: {e}"),
        }
    }
    Err(Error::RetriesExhausted { attempts: MAXREG_RETRIES, reason: last })
}

fn maxreg_attempt(field: PrimeField, r: usize, d: usize, seed: u64) -> Result<Option<MaxRegCurve>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = field.modulus();
    let m = d - r + 2;
    let mut params: Vec<u32> = Vec::new();
    while params.len() < m {
        let t = rng.gen_range(1..p);
        if !params.contains(&t) {
            params.push(t);
        }
    }
    let pts: Vec<Vec<u32>> = params.iter().map(|&t| rnc_point(field, d, t)).collect();
    // center: m - 2 general combinations of the points
    let center: Vec<Vec<u32>> = (0..m - 2)
        .map(|_| {
            let coeffs: Vec<u32> = (0..m).map(|_| rng.gen_range(1..p)).collect();
            (0..=d)
                .map(|k| coeffs.iter().zip(&pts).fold(0, |acc, (c, v)| field.add(acc, field.mul(*c, v[k]))))
                .collect()
        })
        .collect();
    maxreg_from_center(field, r, d, [&pts[0], &pts[1]], &center, seed)
}

/// The point `(1 : t : ... : t^d)` of the rational normal curve of degree `d`.
pub fn rnc_point(field: PrimeField, d: usize, t: u32) -> Vec<u32> {
    (0..=d).map(|k| field.pow(t, k as u64)).collect()
}

/// Projects the rational normal curve of degree `d` from the span of `center`
/// into `P^r` and runs the postcondition suite: degree `d`, regularity
/// `d - r + 2`, and the images of `line_points` spanning a
/// `(d - r + 2)`-secant line. Returns `None` when a postcondition fails.
pub fn maxreg_from_center(
    field: PrimeField,
    r: usize,
    d: usize,
    line_points: [&[u32]; 2],
    center: &[Vec<u32>],
    seed: u64,
) -> Result<Option<MaxRegCurve>> {
    let m = d - r + 2;
    let proj = Matrix::from_rows(center).kernel(field);
    if proj.len() != r + 1 {
        return Ok(None);
    }
    // forms[i][k]: coefficient of s^{d-k} t^k in coordinate i
    let param = Parametrization { field, degree: d, forms: proj.clone() };
    let img = |v: &[u32]| -> Vec<u32> {
        proj.iter().map(|row| row.iter().zip(v).fold(0, |acc, (a, b)| field.add(acc, field.mul(*a, *b)))).collect()
    };
    let (u1, u2) = (img(line_points[0]), img(line_points[1]));
    if Matrix::from_rows(&[u1.clone(), u2.clone()]).rank(field) != 2 {
        return Ok(None);
    }
    let ring = Ring::standard(field, r + 1)?;
    let line_forms: Vec<Poly> = Matrix::from_rows(&[u1.clone(), u2.clone()])
        .kernel(field)
        .iter()
        .map(|c| ring.from_terms(c.iter().enumerate().map(|(v, &x)| (Monomial::var(v), x))))
        .collect();
    let line = GradedIdeal::new(&ring, line_forms)?;
    let ideal = implicitize(&ring, &param, m)?;
    let hs = HilbertSeries::of_ideal(&ideal)?;
    if hs.dimension() != 2 || hs.degree() != d as i64 {
        return Ok(None);
    }
    let (betti, _) = minimal_free_resolution(&ideal, None)?;
    if betti.scheme_reg() != m as i64 {
        return Ok(None);
    }
    if secant_length(&ideal, &line)? != m as i64 {
        return Ok(None);
    }
    Ok(Some(MaxRegCurve { r, d, ideal, line, param, line_span: [u1, u2], seed }))
}

/// Points in `P^dim` given by homogeneous coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    pub field: PrimeField,
    pub dim: usize,
    pub points: Vec<Vec<u32>>,
}

impl PointSet {
    /// Rejects zero vectors, wrong lengths and repeated points.
    pub fn new(field: PrimeField, dim: usize, points: Vec<Vec<u32>>) -> Result<Self> {
        for (k, p) in points.iter().enumerate() {
            if p.len() != dim + 1 {
                return Err(Error::DimensionMismatch(format!("point {k} has {} coordinates", p.len())));
            }
            if p.iter().all(|&c| c == 0) {
                return Err(Error::InvalidArgument(format!("point {k} is the zero vector")));
            }
        }
        for a in 0..points.len() {
            for b in 0..a {
                if Matrix::from_rows(&[points[a].clone(), points[b].clone()]).rank(field) < 2 {
                    return Err(Error::InvalidArgument(format!("points {b} and {a} coincide")));
                }
            }
        }
        Ok(PointSet { field, dim, points })
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else { return out };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Linear general position: every `dim + 1` of the points span `P^dim`.
/// Returns the first violating subset, if any.
pub fn lgp_test(ps: &PointSet) -> Result<Option<Vec<usize>>> {
    let k = ps.dim + 1;
    if ps.points.len() < k {
        return Err(Error::InvalidArgument(format!("need at least {k} points in P^{}", ps.dim)));
    }
    let subsets = combinations(ps.points.len(), k);
    let bad: Vec<Vec<usize>> = subsets
        .into_par_iter()
        .filter(|s| {
            let rows: Vec<Vec<u32>> = s.iter().map(|&i| ps.points[i].clone()).collect();
            Matrix::from_rows(&rows).rank(ps.field) < k
        })
        .collect();
    Ok(bad.into_iter().min())
}

/// Coordinates of points of `P^r` lying on the hyperplane `h`, in the `P^{r-1}`
/// obtained by dropping the pivot coordinate of `h`.
pub fn hyperplane_coordinates(h: &[u32], points: &[Vec<u32>]) -> Result<Vec<Vec<u32>>> {
    let p = (0..h.len()).rev().find(|&v| h[v] != 0).ok_or_else(|| Error::InvalidArgument("zero form".into()))?;
    Ok(points.iter().map(|x| x.iter().enumerate().filter(|(v, _)| *v != p).map(|(_, c)| *c).collect()).collect())
}

/// Distinct roots in `P^1(F_p)` of a binary form given by its coefficients
/// (`coeffs[k]` multiplies `s^{d-k} t^k`), as `(s, t)` pairs.
pub fn binary_form_roots(field: PrimeField, coeffs: &[u32]) -> Vec<(u32, u32)> {
    let d = coeffs.len() - 1;
    let mut roots = Vec::new();
    if coeffs[d] == 0 {
        roots.push((0, 1));
    }
    // affine part s = 1: sum_k coeffs[k] t^k
    let mut f: Vec<u32> = coeffs.to_vec();
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
    let ts = if field.modulus() <= 1 << 20 { scan_roots(field, &f) } else { crate::linalg::poly_roots(field, &f) };
    roots.extend(ts.into_iter().map(|t| (1, t)));
    roots
}

fn scan_roots(field: PrimeField, f: &[u32]) -> Vec<u32> {
    if f.iter().all(|&c| c == 0) {
        return Vec::new();
    }
    (0..field.modulus())
        .into_par_iter()
        .filter(|&t| f.iter().rev().fold(0, |acc, &c| field.add(field.mul(acc, t), c)) == 0)
        .collect()
}

/// A seeded hyperplane whose pullback splits into `d` distinct linear
/// factors, with the `d` curve points on it and the point where it meets the
/// line. Each candidate passes through `r` seeded points of the curve, so only
/// the remaining `d - r` roots need to be rational.
#[derive(Clone, Debug)]
pub struct SplitSection {
    pub hyperplane: Vec<u32>,
    pub points: Vec<Vec<u32>>,
}

const SPLIT_STREAM: u64 = 1;

pub fn split_hyperplane_section_points(curve: &MaxRegCurve, seed: u64, max_retries: usize) -> Result<SplitSection> {
    let f = curve.param.field;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // independent of the stream that placed the curve's secant points
    rng.set_stream(SPLIT_STREAM);
    for _ in 0..max_retries {
        let pts: Vec<Vec<u32>> = (0..curve.r).map(|_| curve.param.point(1, rng.gen_range(0..f.modulus()))).collect();
        let normals = Matrix::from_rows(&pts).kernel(f);
        let [h] = &normals[..] else { continue };
        if let Some(s) = split_with(curve, h)? {
            return Ok(s);
        }
    }
    Err(Error::RetriesExhausted { attempts: max_retries, reason: "no split hyperplane section found".into() })
}

/// The split section for a given hyperplane, or `None` when the pullback
/// does not have `d` distinct roots over the field.
pub fn split_with(curve: &MaxRegCurve, h: &[u32]) -> Result<Option<SplitSection>> {
    let f = curve.param.field;
    let pull = curve.param.pullback(h);
    if pull.iter().all(|&c| c == 0) {
        return Ok(None);
    }
    let roots = binary_form_roots(f, &pull);
    if roots.len() != curve.d {
        return Ok(None);
    }
    let mut points: Vec<Vec<u32>> = roots.iter().map(|&(s, t)| curve.param.point(s, t)).collect();
    let dot = |v: &[u32]| v.iter().zip(h).fold(0, |acc, (a, b)| f.add(acc, f.mul(*a, *b)));
    let [a, b] = &curve.line_span;
    let (ha, hb) = (dot(a), dot(b));
    let q: Vec<u32> = a.iter().zip(b).map(|(x, y)| f.sub(f.mul(hb, *x), f.mul(ha, *y))).collect();
    if q.iter().all(|&c| c == 0) {
        return Ok(None);
    }
    points.push(q);
    Ok(Some(SplitSection { hyperplane: h.to_vec(), points }))
}
