//! Hilbert series of `S/I` through the lead-term ideal.

use crate::error::Result;
use crate::ring::{GradedIdeal, Monomial};

/// `H_{S/I}(t) = numerator(t) / (1 - t)^nvars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub nvars: usize,
    pub numerator: Vec<i64>,
}

/// The Hilbert polynomial in the basis of Hilbert coefficients:
/// `P(n) = sum_j (-1)^j e_j C(n + d - 1 - j, d - 1 - j)` with `d = dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    /// Krull dimension of `S/I`; the polynomial has degree `dim - 1`.
    pub dim: usize,
    pub coeffs: Vec<i64>,
}

/// Generalized binomial `C(n, k)` for any integer `n`, `k >= 0`.
pub fn binom_poly(n: i64, k: usize) -> i64 {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..k as i128 {
        num *= n as i128 - i;
        den *= i + 1;
    }
    (num / den) as i64
}

/// `C(n, k)` with the convention that it vanishes outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        0
    } else {
        binom_poly(n, k as usize)
    }
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    if v.is_empty() {
        v.push(0);
    }
    v
}

fn poly_sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    out
}

fn shift(a: &[i64], k: usize) -> Vec<i64> {
    let mut out = vec![0i64; k];
    out.extend_from_slice(a);
    out
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the Hilbert series of `S/(gens)` for a monomial ideal.
pub fn monomial_numerator(gens: &[Monomial], nvars: usize) -> Vec<i64> {
    trim(numerator_rec(minimalize(gens.to_vec()), nvars))
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    // pairwise coprime generators: product formula
    let mut coprime = true;
    'outer: for i in 0..gens.len() {
        for j in 0..i {
            if !gens[i].is_coprime(&gens[j]) {
                coprime = false;
                break 'outer;
            }
        }
    }
    if coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            acc = poly_sub(&acc, &shift(&acc, g.degree() as usize));
        }
        return acc;
    }
    // pivot on the variable occurring in the most non-linear generators
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        if g.degree() > 1 {
            for (v, c) in counts.iter_mut().enumerate() {
                if g.exponent(v) > 0 {
                    *c += 1;
                }
            }
        }
    }
    let v = (0..nvars).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).expect("nonempty ring");
    let x = Monomial::var(v);
    // N(I) = N(I + x) + t * N(I : x)
    let mut with_x: Vec<Monomial> = gens.iter().filter(|g| g.exponent(v) == 0).copied().collect();
    with_x.push(x);
    let colon: Vec<Monomial> =
        gens.iter().map(|g| if g.exponent(v) > 0 { x.quotient_of(g) } else { *g }).collect();
    let a = numerator_rec(minimalize(with_x), nvars);
    let b = numerator_rec(minimalize(colon), nvars);
    let mut out = a;
    let sb = shift(&b, 1);
    if out.len() < sb.len() {
        out.resize(sb.len(), 0);
    }
    for (i, c) in sb.iter().enumerate() {
        out[i] += c;
    }
    out
}

impl HilbertSeries {
    pub fn of_monomials(gens: &[Monomial], nvars: usize) -> Self {
        HilbertSeries { nvars, numerator: monomial_numerator(gens, nvars) }
    }

    pub fn of_ideal(ideal: &GradedIdeal) -> Result<Self> {
        let gb = ideal.gb()?;
        Ok(Self::of_monomials(&gb.lead_monomials(), ideal.ring().nvars()))
    }

    /// Divides out `(1 - t)` as often as possible: `(q, dim)` with
    /// `H = q / (1 - t)^dim` and `q(1) != 0` (or `q = 0`, `dim = 0`).
    pub fn reduced(&self) -> (Vec<i64>, usize) {
        let mut q = self.numerator.clone();
        let mut dim = self.nvars;
        if q.iter().all(|&c| c == 0) {
            return (vec![0], 0);
        }
        while dim > 0 && q.iter().sum::<i64>() == 0 {
            // synthetic division by (1 - t): q = (1 - t) r, r_k = sum_{i<=k} q_i
            let mut r = Vec::with_capacity(q.len() - 1);
            let mut s = 0;
            for &c in &q[..q.len() - 1] {
                s += c;
                r.push(s);
            }
            q = trim(r);
            dim -= 1;
        }
        (q, dim)
    }

    /// Krull dimension of `S/I`.
    pub fn dimension(&self) -> usize {
        self.reduced().1
    }

    /// Degree (multiplicity) of `S/I`.
    pub fn degree(&self) -> i64 {
        self.reduced().0.iter().sum()
    }

    /// `dim_K (S/I)_n`.
    pub fn hilbert_function(&self, n: i64) -> i64 {
        if n < 0 {
            return 0;
        }
        let r = self.nvars as i64;
        self.numerator
            .iter()
            .enumerate()
            .map(|(k, &c)| if n - (k as i64) < 0 { 0 } else { c * binom(n - k as i64 + r - 1, r - 1) })
            .sum()
    }

    pub fn hilbert_polynomial(&self) -> HilbertPolynomial {
        let (q, dim) = self.reduced();
        if dim == 0 {
            return HilbertPolynomial { dim: 0, coeffs: Vec::new() };
        }
        let coeffs = (0..dim).map(|j| q.iter().enumerate().map(|(k, &c)| c * binom(k as i64, j as i64)).sum()).collect();
        HilbertPolynomial { dim, coeffs }
    }
}

impl HilbertPolynomial {
    pub fn eval(&self, n: i64) -> i64 {
        let d = self.dim as i64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, &e)| {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * e * binom_poly(n + d - 1 - j as i64, (d - 1 - j as i64) as usize)
            })
            .sum()
    }

    /// Leading coefficient times `(dim - 1)!`: the degree of the scheme.
    pub fn degree(&self) -> i64 {
        self.coeffs.first().copied().unwrap_or(0)
    }

    /// The constant value when the scheme is zero-dimensional.
    pub fn constant(&self) -> Option<i64> {
        match self.dim {
            0 => Some(0),
            1 => Some(self.coeffs[0]),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn basic_series() {
        let h = HilbertSeries::of_monomials(&[], 3);
        assert_eq!(h.numerator, vec![1]);
        assert_eq!(h.dimension(), 3);
        let h = HilbertSeries::of_monomials(&[mono(&[2])], 1);
        assert_eq!(h.numerator, vec![1, 0, -1]);
        assert_eq!((0..4).map(|n| h.hilbert_function(n)).collect::<Vec<_>>(), vec![1, 1, 0, 0]);
        assert_eq!(h.dimension(), 0);
        // twisted cubic leads x1^2, x1x2, x2^2: H = (1 + 2t)/(1-t)^2
        let h = HilbertSeries::of_monomials(&[mono(&[0, 2]), mono(&[0, 1, 1]), mono(&[0, 0, 2])], 4);
        assert_eq!(h.reduced(), (vec![1, 2], 2));
        assert_eq!(h.degree(), 3);
        let p = h.hilbert_polynomial();
        assert_eq!((0..5).map(|n| p.eval(n)).collect::<Vec<_>>(), vec![1, 4, 7, 10, 13]);
    }

    fn brute(gens: &[Monomial], nvars: usize, n: u32) -> i64 {
        fn rec(v: usize, left: u32, cur: &mut Vec<u32>, nvars: usize, gens: &[Monomial], out: &mut i64) {
            if v + 1 == nvars {
                cur.push(left);
                let m = Monomial::from_exponents(cur).unwrap();
                if !gens.iter().any(|g| g.divides(&m)) {
                    *out += 1;
                }
                cur.pop();
                return;
            }
            for e in 0..=left {
                cur.push(e);
                rec(v + 1, left - e, cur, nvars, gens, out);
                cur.pop();
            }
        }
        let mut out = 0;
        rec(0, n, &mut Vec::new(), nvars, gens, &mut out);
        out
    }

    proptest! {
        #[test]
        fn matches_brute_force(
            nvars in 1usize..=5,
            raw in proptest::collection::vec(proptest::collection::vec(0u32..4, 5), 0..6),
        ) {
            let gens: Vec<Monomial> = raw.iter().map(|e| mono(&e[..nvars])).filter(|m| !m.is_one()).collect();
            let h = HilbertSeries::of_monomials(&gens, nvars);
            for n in 0..=8 {
                prop_assert_eq!(h.hilbert_function(n as i64), brute(&gens, nvars, n));
            }
        }
    }
}
