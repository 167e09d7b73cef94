#![allow(dead_code)]

use proptest::prelude::*;
use syzlab::ring::{GradedIdeal, Monomial, Poly, PrimeField, Ring};

pub fn field() -> PrimeField {
    PrimeField::default_field()
}

pub fn ring(n: usize) -> Ring {
    Ring::standard(field(), n).unwrap()
}

/// A homogeneous form of degree `deg` from a choice of monomials and coefficients.
pub fn form(ring: &Ring, deg: u32, picks: &[(usize, u32)]) -> Poly {
    let monos = Monomial::all_of_degree(ring.nvars(), deg);
    ring.from_terms(picks.iter().map(|&(k, c)| (monos[k % monos.len()], c)))
}

/// Raw data for a form: degree and up to four (monomial index, coefficient) pairs.
pub fn arb_form_data(max_deg: u32) -> impl Strategy<Value = (u32, Vec<(usize, u32)>)> {
    (1..=max_deg, proptest::collection::vec((0usize..64, 1u32..50), 1..4))
}

/// A small homogeneous ideal in `n` variables.
pub fn arb_ideal(n: usize, max_gens: usize, max_deg: u32) -> impl Strategy<Value = GradedIdeal> {
    proptest::collection::vec(arb_form_data(max_deg), 1..=max_gens).prop_map(move |data| {
        let r = ring(n);
        let gens = data.iter().map(|(d, p)| form(&r, *d, p)).filter(|f| !f.is_zero()).collect();
        GradedIdeal::new(&r, gens).unwrap()
    })
}

pub fn arb_monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=max_exp, n).prop_map(|e| Monomial::from_exponents(&e).unwrap())
}

/// Generators of a monomial ideal, none equal to 1.
pub fn arb_monomials(n: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = Vec<Monomial>> {
    proptest::collection::vec(arb_monomial(n, max_exp), 1..=max_gens)
        .prop_map(|v| v.into_iter().filter(|m| !m.is_one()).collect())
}

pub fn monomial_ideal(ring: &Ring, gens: &[Monomial]) -> GradedIdeal {
    GradedIdeal::new(ring, gens.iter().map(|m| ring.monomial(*m, 1)).collect()).unwrap()
}

/// `dim_K (S/(gens))_n` by listing every monomial of degree `n`.
pub fn brute_hilbert(gens: &[Monomial], nvars: usize, n: u32) -> i64 {
    Monomial::all_of_degree(nvars, n).iter().filter(|m| !gens.iter().any(|g| g.divides(m))).count() as i64
}
