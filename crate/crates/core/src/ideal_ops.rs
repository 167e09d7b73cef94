//! Sums, intersections, colons, saturation, elimination and linear substitution.

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::invariants::hilbert::HilbertSeries;
use crate::ring::{GradedIdeal, Monomial, MonomialOrder, Poly, Ring, Term, VarMask};

/// Linear substitution `x_i -> sum_j m[i][j] y_j` from `source` to `target`.
#[derive(Clone, Debug)]
pub struct LinearMap {
    source: Ring,
    target: Ring,
    matrix: Vec<Vec<u32>>,
}

impl LinearMap {
    /// `matrix` has one row per source variable and one column per target variable.
    pub fn new(source: &Ring, target: &Ring, matrix: Vec<Vec<i64>>) -> Result<Self> {
        if matrix.len() != source.nvars() || matrix.iter().any(|r| r.len() != target.nvars()) {
            return Err(Error::DimensionMismatch(format!(
                "substitution matrix must be {}x{}",
                source.nvars(),
                target.nvars()
            )));
        }
        if source.field() != target.field() {
            return Err(Error::RingMismatch("substitution across different fields".into()));
        }
        let f = source.field();
        let matrix = matrix.into_iter().map(|r| r.into_iter().map(|c| f.from_i64(c)).collect()).collect();
        Ok(LinearMap { source: source.clone(), target: target.clone(), matrix })
    }

    pub fn identity(ring: &Ring) -> Self {
        let n = ring.nvars();
        let matrix = (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect();
        LinearMap { source: ring.clone(), target: ring.clone(), matrix }
    }

    /// From images of the source variables, which must be linear forms of `target`.
    pub fn from_images(source: &Ring, target: &Ring, images: &[Poly]) -> Result<Self> {
        if images.len() != source.nvars() {
            return Err(Error::DimensionMismatch("one image per source variable".into()));
        }
        let mut matrix = vec![vec![0u32; target.nvars()]; source.nvars()];
        for (i, img) in images.iter().enumerate() {
            for t in img.terms() {
                if t.mon.degree() != 1 {
                    return Err(Error::InvalidArgument("images must be linear forms".into()));
                }
                let j = (0..target.nvars()).find(|&j| t.mon.exponent(j) == 1).expect("linear monomial");
                matrix[i][j] = t.coef;
            }
        }
        Ok(LinearMap { source: source.clone(), target: target.clone(), matrix })
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn image(&self, i: usize) -> Poly {
        self.target.from_terms(
            self.matrix[i].iter().enumerate().map(|(j, &c)| (Monomial::var(j), c)),
        )
    }

    pub fn images(&self) -> Vec<Poly> {
        (0..self.source.nvars()).map(|i| self.image(i)).collect()
    }

    pub fn apply(&self, f: &Poly) -> Poly {
        self.source.substitute(f, &self.images(), &self.target)
    }
}

fn same_ring(i: &GradedIdeal, j: &GradedIdeal) -> Result<()> {
    if i.ring().same_space(j.ring()) {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!("{:?} vs {:?}", i.ring(), j.ring())))
    }
}

pub fn ideal_sum(i: &GradedIdeal, j: &GradedIdeal) -> Result<GradedIdeal> {
    same_ring(i, j)?;
    let mut gens = i.gens().to_vec();
    gens.extend(j.gens().iter().cloned());
    GradedIdeal::new(i.ring(), gens)
}

/// `I + (f_1, ..., f_k)`.
pub fn add_forms(i: &GradedIdeal, forms: &[Poly]) -> Result<GradedIdeal> {
    let mut gens = i.gens().to_vec();
    gens.extend(forms.iter().cloned());
    GradedIdeal::new(i.ring(), gens)
}

/// The ring with the listed variables removed (names of the others kept).
pub fn subring(ring: &Ring, drop: &[usize]) -> Result<Ring> {
    let names = (0..ring.nvars()).filter(|v| !drop.contains(v)).map(|v| ring.names()[v].clone()).collect();
    Ring::new(ring.field(), names, MonomialOrder::Degrevlex)
}

/// Moves a polynomial between rings by variable name; every occurring
/// variable must exist in `to`.
pub fn transfer(f: &Poly, from: &Ring, to: &Ring) -> Result<Poly> {
    let map: Vec<Option<usize>> = from.names().iter().map(|n| to.var_index(n)).collect();
    let mut terms = Vec::with_capacity(f.len());
    for t in f.terms() {
        for (v, m) in map.iter().enumerate() {
            if m.is_none() && t.mon.exponent(v) > 0 {
                return Err(Error::RingMismatch(format!("variable {} missing in target ring", from.names()[v])));
            }
        }
        terms.push((t.mon.relabel(&map), t.coef));
    }
    Ok(to.from_terms(terms))
}

/// The same ideal with the variables renamed positionally.
pub fn rename_vars(i: &GradedIdeal, names: &[&str]) -> Result<GradedIdeal> {
    let ring = i.ring();
    if names.len() != ring.nvars() {
        return Err(Error::DimensionMismatch(format!("{} names for {} variables", names.len(), ring.nvars())));
    }
    let to = Ring::new(ring.field(), names.iter().map(|s| s.to_string()).collect(), MonomialOrder::Degrevlex)?;
    GradedIdeal::new(&to, i.gens().to_vec())
}

pub fn transfer_ideal(i: &GradedIdeal, to: &Ring) -> Result<GradedIdeal> {
    let gens = i.gens().iter().map(|g| transfer(g, i.ring(), to)).collect::<Result<Vec<_>>>()?;
    GradedIdeal::new(to, gens)
}

/// Generators of `I ∩ K[remaining variables]`, expressed in the smaller ring.
pub fn eliminate(i: &GradedIdeal, vars: &[usize]) -> Result<GradedIdeal> {
    let ring = i.ring();
    if vars.iter().any(|&v| v >= ring.nvars()) {
        return Err(Error::OutOfRange("elimination variable index".into()));
    }
    let target = subring(ring, vars)?;
    if vars.is_empty() {
        return transfer_ideal(i, &target);
    }
    let block = VarMask::from_vars(vars);
    let gb = i.groebner(MonomialOrder::Elimination { block })?;
    let mut gens = Vec::new();
    for g in gb.elements() {
        if g.terms().iter().all(|t| !block.intersects(&t.mon)) {
            let g = Poly { terms: g.terms().to_vec() };
            gens.push(transfer(&g, ring, &target)?);
        }
    }
    GradedIdeal::new(&target, gens)
}

pub fn eliminate_names(i: &GradedIdeal, names: &[&str]) -> Result<GradedIdeal> {
    let vars = names
        .iter()
        .map(|n| i.ring().var_index(n).ok_or_else(|| Error::InvalidArgument(format!("unknown variable {n}"))))
        .collect::<Result<Vec<_>>>()?;
    eliminate(i, &vars)
}

/// Applies a linear substitution to every generator.
pub fn substitute(i: &GradedIdeal, map: &LinearMap) -> Result<GradedIdeal> {
    if !map.source().same_space(i.ring()) {
        return Err(Error::DimensionMismatch("substitution source ring differs from the ideal's ring".into()));
    }
    let images = map.images();
    let gens = i.gens().iter().map(|g| i.ring().substitute(g, &images, map.target())).collect();
    GradedIdeal::new(map.target(), gens)
}

fn aux_name(ring: &Ring) -> String {
    let mut name = "_t".to_string();
    while ring.var_index(&name).is_some() {
        name.push('_');
    }
    name
}

/// `I ∩ J` by eliminating `t` from `t I + (1 - t) J`, with `t` of degree 0.
pub fn ideal_intersect(i: &GradedIdeal, j: &GradedIdeal) -> Result<GradedIdeal> {
    same_ring(i, j)?;
    let ring = i.ring();
    if i.is_zero() || j.is_zero() {
        return Ok(GradedIdeal::zero(ring));
    }
    if i.is_unit()? {
        return Ok(j.clone());
    }
    if j.is_unit()? {
        return Ok(i.clone());
    }
    let n = ring.nvars();
    let mut names = ring.names().to_vec();
    names.push(aux_name(ring));
    let big = Ring::new(ring.field(), names, MonomialOrder::Degrevlex)?.with_zero_weight(VarMask::from_vars(&[n]));
    let t = big.var(n);
    let one_minus_t = big.sub(&big.one(), &t);
    let mut gens = Vec::new();
    for f in i.gens() {
        gens.push(big.mul(&t, &transfer(f, ring, &big)?));
    }
    for g in j.gens() {
        gens.push(big.mul(&one_minus_t, &transfer(g, ring, &big)?));
    }
    let aux = GradedIdeal::new(&big, gens)?;
    let block = VarMask::from_vars(&[n]);
    let gb = aux.groebner(MonomialOrder::Elimination { block })?;
    let mut out = Vec::new();
    for g in gb.elements() {
        if g.terms().iter().all(|tm| tm.mon.exponent(n) == 0) {
            out.push(transfer(&Poly { terms: g.terms().to_vec() }, &big, ring)?);
        }
    }
    GradedIdeal::new(ring, out)
}

/// `I : (g)` as `(I ∩ (g)) / g`.
pub fn quotient_by(i: &GradedIdeal, g: &Poly) -> Result<GradedIdeal> {
    let ring = i.ring();
    if g.is_zero() {
        return Err(Error::InvalidArgument("colon by the zero ideal".into()));
    }
    let gi = GradedIdeal::new(ring, vec![g.clone()])?;
    let meet = ideal_intersect(i, &gi)?;
    let gens = meet.gens().iter().map(|f| ring.exact_div(f, g)).collect::<Result<Vec<_>>>()?;
    GradedIdeal::new(ring, gens)
}

/// `I : J`, intersecting the colons by the generators of `J` in order.
pub fn ideal_quotient(i: &GradedIdeal, j: &GradedIdeal) -> Result<GradedIdeal> {
    same_ring(i, j)?;
    if j.is_zero() {
        return Err(Error::InvalidArgument("colon by the zero ideal".into()));
    }
    let mut acc: Option<GradedIdeal> = None;
    for g in j.gens() {
        let q = quotient_by(i, g)?;
        acc = Some(match acc {
            None => q,
            Some(a) => ideal_intersect(&a, &q)?,
        });
    }
    Ok(acc.expect("nonzero J"))
}

/// Coordinate change making the linear form `l` the last variable.
///
/// Returns `(forward, backward)` substitutions on the same ring, where
/// `backward(forward(f)) = f` and `forward(l) = x_last`.
fn last_variable_change(ring: &Ring, l: &Poly) -> Result<(Vec<Poly>, Vec<Poly>)> {
    let n = ring.nvars();
    let last = n - 1;
    let fld = ring.field();
    let mut c = vec![0u32; n];
    for t in l.terms() {
        if t.mon.degree() != 1 {
            return Err(Error::InvalidArgument("expected a linear form".into()));
        }
        let v = (0..n).find(|&v| t.mon.exponent(v) == 1).expect("linear");
        c[v] = t.coef;
    }
    let p = (0..n).rev().find(|&v| c[v] != 0).ok_or_else(|| Error::InvalidArgument("zero linear form".into()))?;
    // new coordinates y: y_last = l, y_p = x_last (when p != last), others unchanged
    let mut backward: Vec<Poly> = (0..n).map(|v| ring.var(v)).collect();
    backward[last] = l.clone();
    if p != last {
        backward[p] = ring.var(last);
    }
    // forward expresses each x through y
    let inv = fld.inv(c[p])?;
    let mut forward: Vec<Poly> = (0..n).map(|v| ring.var(v)).collect();
    if p != last {
        forward[last] = ring.var(p);
    }
    let mut terms = vec![(Monomial::var(last), inv)];
    for v in 0..n {
        if v == p || c[v] == 0 {
            continue;
        }
        let img = &forward[v];
        for t in img.terms() {
            terms.push((t.mon, fld.neg(fld.mul(fld.mul(c[v], inv), t.coef))));
        }
    }
    forward[p] = ring.from_terms(terms);
    Ok((forward, backward))
}

/// `I : l^∞` for a linear form `l`, by Bayer's criterion in coordinates where
/// `l` is the last variable of degrevlex.
pub fn saturate_by_linear(i: &GradedIdeal, l: &Poly) -> Result<GradedIdeal> {
    let ring = i.ring();
    let last = ring.nvars() - 1;
    let is_last_var = l.len() == 1 && l.terms()[0].mon == Monomial::var(last);
    let (work, back) = if is_last_var {
        (i.clone(), None)
    } else {
        let (fwd, bwd) = last_variable_change(ring, l)?;
        let gens = i.gens().iter().map(|g| ring.substitute(g, &fwd, ring)).collect();
        (GradedIdeal::new(ring, gens)?, Some(bwd))
    };
    let gb = work.gb()?;
    let x = Monomial::var(last);
    let mut gens = Vec::with_capacity(gb.len());
    for g in gb.elements() {
        let e = g.terms().iter().map(|t| t.mon.exponent(last)).min().unwrap_or(0);
        let div = Monomial::from_exponents(&{
            let mut v = vec![0u32; ring.nvars()];
            v[last] = e;
            v
        })?;
        let _ = x;
        let h = Poly { terms: g.terms().iter().map(|t| Term { mon: div.quotient_of(&t.mon), coef: t.coef }).collect() };
        gens.push(match &back {
            None => h,
            Some(b) => ring.substitute(&h, b, ring),
        });
    }
    GradedIdeal::new(ring, gens)
}

/// `I : g^∞` by iterated colons until the reduced bases stabilize.
pub fn saturate_by(i: &GradedIdeal, g: &Poly) -> Result<GradedIdeal> {
    if g.degree() == Some(1) && i.ring().is_homogeneous(g) {
        return saturate_by_linear(i, g);
    }
    let mut cur = i.canonical()?;
    loop {
        let next = quotient_by(&cur, g)?.canonical()?;
        if next.gens() == cur.gens() {
            return Ok(cur);
        }
        cur = next;
    }
}

fn is_irrelevant(j: &GradedIdeal) -> Result<bool> {
    let ring = j.ring();
    let gb = j.gb()?;
    Ok((0..ring.nvars()).all(|v| gb.contains(&ring.var(v))) && !gb.is_unit())
}

/// `I : J^∞`. For `J = S_+` a fast route is tried first: `I : l^∞` for
/// coordinate and seeded random linear forms `l`, accepted once the
/// Hilbert polynomial agrees with that of `S/I`. Otherwise the result is the
/// intersection of `I : g^∞` over the generators `g` of `J`.
pub fn saturate(i: &GradedIdeal, j: &GradedIdeal) -> Result<GradedIdeal> {
    same_ring(i, j)?;
    if j.is_zero() {
        return Err(Error::InvalidArgument("saturation by the zero ideal".into()));
    }
    if i.is_unit()? {
        return Ok(i.clone());
    }
    if is_irrelevant(j)? {
        if let Some(s) = saturate_irrelevant_fast(i, 20)? {
            return Ok(s);
        }
    }
    let mut acc: Option<GradedIdeal> = None;
    for g in j.gens() {
        let s = saturate_by(i, g)?;
        acc = Some(match acc {
            None => s,
            Some(a) => ideal_intersect(&a, &s)?,
        });
    }
    Ok(acc.expect("nonzero J"))
}

/// Saturation with respect to the irrelevant ideal.
pub fn saturate_irrelevant(i: &GradedIdeal) -> Result<GradedIdeal> {
    saturate(i, &GradedIdeal::maximal(i.ring()))
}

fn saturate_irrelevant_fast(i: &GradedIdeal, random_tries: usize) -> Result<Option<GradedIdeal>> {
    let ring = i.ring();
    let hp = HilbertSeries::of_ideal(i)?.hilbert_polynomial();
    let n = ring.nvars();
    let mut candidates: Vec<Poly> = (0..n).rev().map(|v| ring.var(v)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a7);
    for _ in 0..random_tries {
        let coeffs: Vec<i64> = (0..n).map(|_| rng.gen_range(1..ring.field().modulus() as i64)).collect();
        candidates.push(ring.linear_form(&coeffs));
    }
    for l in candidates {
        let s = saturate_by_linear(i, &l)?;
        if s.is_unit()? {
            // only possible when I itself is irrelevant-primary up to l
            if hp.dim == 0 {
                return Ok(Some(s));
            }
            continue;
        }
        if HilbertSeries::of_ideal(&s)?.hilbert_polynomial() == hp {
            return Ok(Some(s.canonical()?));
        }
    }
    Ok(None)
}

/// A seeded random linear form with all coefficients nonzero.
pub fn random_linear_form(ring: &Ring, rng: &mut ChaCha8Rng) -> Poly {
    let p = ring.field().modulus() as i64;
    let coeffs: Vec<i64> = (0..ring.nvars()).map(|_| rng.gen_range(1..p)).collect();
    ring.linear_form(&coeffs)
}

/// `random_linear_form` drawn from a generator seeded with `seed`.
pub fn seeded_linear_form(ring: &Ring, seed: u64) -> Poly {
    random_linear_form(ring, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{text::parse_poly, PrimeField};

    fn ring(names: &[&str]) -> Ring {
        Ring::with_names(PrimeField::default_field(), names).unwrap()
    }

    fn ideal(r: &Ring, src: &[&str]) -> GradedIdeal {
        GradedIdeal::new(r, src.iter().map(|s| parse_poly(r, s, 0).unwrap()).collect()).unwrap()
    }

    #[test]
    fn sums() {
        let r = ring(&["x", "y"]);
        let s = ideal_sum(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap();
        assert!(s.same_ideal(&ideal(&r, &["x", "y"])).unwrap());
        assert!(ideal_sum(&ideal(&r, &["x"]), &GradedIdeal::unit(&r)).unwrap().is_unit().unwrap());
    }

    #[test]
    fn intersections_and_colons() {
        let r = ring(&["x", "y"]);
        let m = ideal_intersect(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap();
        assert!(m.same_ideal(&ideal(&r, &["x*y"])).unwrap());
        let q = ideal_quotient(&ideal(&r, &["x*y"]), &ideal(&r, &["y"])).unwrap();
        assert!(q.same_ideal(&ideal(&r, &["x"])).unwrap());
        let i = ideal(&r, &["x^2", "x*y"]);
        assert!(ideal_quotient(&i, &GradedIdeal::unit(&r)).unwrap().same_ideal(&i).unwrap());
        assert!(ideal_intersect(&i, &i).unwrap().same_ideal(&i).unwrap());
    }

    #[test]
    fn saturations() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2", "x*y"]);
        let x = ideal(&r, &["x"]);
        assert!(saturate(&i, &x).unwrap().is_unit().unwrap());
        let s = saturate_irrelevant(&i).unwrap();
        assert!(s.same_ideal(&x).unwrap());
        assert!(saturate_irrelevant(&s).unwrap().same_ideal(&s).unwrap());
        // general route agrees with the fast one
        let m = GradedIdeal::maximal(&r);
        let mut acc = saturate_by(&i, &r.var(0)).unwrap();
        acc = ideal_intersect(&acc, &saturate_by(&i, &r.var(1)).unwrap()).unwrap();
        assert!(acc.same_ideal(&x).unwrap());
        assert!(saturate(&x, &m).unwrap().same_ideal(&x).unwrap());
    }

    #[test]
    fn elimination_and_substitution() {
        let r = ring(&["x", "y", "z"]);
        let e = eliminate(&ideal(&r, &["x-y", "y-z"]), &[1]).unwrap();
        assert_eq!(e.ring().names(), &["x".to_string(), "z".to_string()]);
        assert!(e.same_ideal(&ideal(e.ring(), &["x-z"])).unwrap());
        let i = ideal(&r, &["x^2-y*z"]);
        assert!(eliminate(&i, &[]).unwrap().same_ideal(&transfer_ideal(&i, &subring(&r, &[]).unwrap()).unwrap()).unwrap());
        let id = LinearMap::identity(&r);
        assert!(substitute(&i, &id).unwrap().same_ideal(&i).unwrap());
        let r2 = ring(&["x", "y"]);
        let swap = LinearMap::new(&r2, &r2, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert!(substitute(&ideal(&r2, &["x"]), &swap).unwrap().same_ideal(&ideal(&r2, &["y"])).unwrap());
        assert!(LinearMap::new(&r2, &r2, vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn coordinate_change_roundtrip() {
        let r = ring(&["a", "b", "c"]);
        let l = parse_poly(&r, "3*a - b + 2*c", 0).unwrap();
        let (fwd, bwd) = last_variable_change(&r, &l).unwrap();
        assert_eq!(r.substitute(&l, &fwd, &r), r.var(2));
        for v in 0..3 {
            let x = r.var(v);
            assert_eq!(r.substitute(&r.substitute(&x, &fwd, &r), &bwd, &r), x);
        }
    }
}
