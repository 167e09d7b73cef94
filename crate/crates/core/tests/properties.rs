mod common;

use common::*;
use proptest::prelude::*;
use syzlab::groebner::syzygies;
use syzlab::ideal_ops::{eliminate, ideal_intersect, ideal_quotient, ideal_sum, saturate_irrelevant};
use syzlab::invariants::{cohomology_profile, HilbertSeries, Resolution};
use syzlab::ring::text::Document;
use syzlab::ring::{GradedIdeal, Monomial, MonomialOrder, Poly};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

/// `sum_k m_k g_k` for multipliers built from `data`, homogeneous of degree `deg`.
fn combination(i: &GradedIdeal, deg: u32, data: &[(usize, u32)]) -> Poly {
    let ring = i.ring();
    let mut f = ring.zero();
    for (k, g) in i.gens().iter().enumerate() {
        let gd = g.degree().unwrap();
        if gd <= deg {
            let m = form(ring, deg - gd, &data[k % data.len()..(k % data.len() + 1)]);
            f = ring.add(&f, &ring.mul(&m, g));
        }
    }
    f
}

fn lcm_intersection(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    a.iter().flat_map(|x| b.iter().map(move |y| x.lcm(y))).collect()
}

/// Saturation of a monomial ideal by the maximal ideal: the intersection over
/// `i` of the ideals obtained by setting the exponent of `x_i` to zero.
fn monomial_saturation(gens: &[Monomial], n: usize) -> Vec<Monomial> {
    let mut acc: Option<Vec<Monomial>> = None;
    for v in 0..n {
        let cut: Vec<Monomial> = gens
            .iter()
            .map(|m| {
                let mut e = m.exponents(n);
                e[v] = 0;
                Monomial::from_exponents(&e).unwrap()
            })
            .collect();
        acc = Some(match acc {
            None => cut,
            Some(prev) => lcm_intersection(&prev, &cut),
        });
    }
    acc.unwrap()
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn membership_does_not_depend_on_the_order(
        i in arb_ideal(4, 3, 2),
        deg in 2u32..4,
        mult in proptest::collection::vec((0usize..64, 1u32..50), 1..4),
        noise in arb_form_data(3),
        add_noise in any::<bool>(),
    ) {
        let ring = i.ring().clone();
        let mut f = combination(&i, deg, &mult);
        if add_noise {
            f = ring.add(&f, &form(&ring, deg, &noise.1));
        }
        let grevlex = i.gb().unwrap().contains(&f);
        let order = MonomialOrder::elimination(&[0]);
        let elim = i.groebner(order).unwrap();
        let g = ring.with_order(order).import(&ring, &f).unwrap();
        prop_assert_eq!(grevlex, elim.contains(&g));
        if !add_noise {
            prop_assert!(grevlex);
        }
    }

    #[test]
    fn bases_are_certified(i in arb_ideal(4, 4, 3)) {
        prop_assert!(i.gb().unwrap().certify());
        prop_assert!(i.groebner(MonomialOrder::elimination(&[1, 2])).unwrap().certify());
    }

    #[test]
    fn syzygies_are_relations_with_balanced_dimensions(i in arb_ideal(3, 3, 2)) {
        let gb = i.gb().unwrap();
        let ring = gb.ring().clone();
        let syz = syzygies(&gb).unwrap();
        for v in &syz.gens {
            let mut total = ring.zero();
            for (k, g) in gb.elements().iter().enumerate() {
                total = ring.add(&total, &ring.mul(&v.component(k as u32), g));
            }
            prop_assert!(total.is_zero());
        }
        // lead terms of a Groebner basis of the syzygies, per component
        let leads: Vec<(u32, Monomial)> = syz.gens.iter().filter_map(|v| v.lead().map(|t| (t.comp, t.mon))).collect();
        let degs: Vec<i64> = gb.elements().iter().map(|g| g.degree().unwrap() as i64).collect();
        let n = ring.nvars();
        let hs = HilbertSeries::of_ideal(&i).unwrap();
        for t in 0..=6i64 {
            let free: i64 = degs.iter().map(|&d| if t >= d { Monomial::all_of_degree(n, (t - d) as u32).len() as i64 } else { 0 }).sum();
            let ideal_dim = Monomial::all_of_degree(n, t as u32).len() as i64 - hs.hilbert_function(t);
            let syz_dim: i64 = degs
                .iter()
                .enumerate()
                .filter(|(_, &d)| t >= d)
                .map(|(k, &d)| {
                    Monomial::all_of_degree(n, (t - d) as u32)
                        .iter()
                        .filter(|m| leads.iter().any(|(c, l)| *c == k as u32 && l.divides(m)))
                        .count() as i64
                })
                .sum();
            prop_assert_eq!(free - ideal_dim, syz_dim, "degree {}", t);
        }
    }

    #[test]
    fn monomial_intersection_matches_lcm_oracle(
        a in arb_monomials(4, 4, 3),
        b in arb_monomials(4, 4, 3),
    ) {
        let r = ring(4);
        let (i, j) = (monomial_ideal(&r, &a), monomial_ideal(&r, &b));
        let k = ideal_intersect(&i, &j).unwrap();
        prop_assert!(i.contains_ideal(&k).unwrap() && j.contains_ideal(&k).unwrap());
        prop_assert!(k.same_ideal(&monomial_ideal(&r, &lcm_intersection(&a, &b))).unwrap());
    }

    #[test]
    fn intersection_contains_the_product(i in arb_ideal(3, 2, 2), j in arb_ideal(3, 2, 2)) {
        let r = i.ring().clone();
        let j = GradedIdeal::new(&r, j.gens().to_vec()).unwrap();
        let k = ideal_intersect(&i, &j).unwrap();
        prop_assert!(i.contains_ideal(&k).unwrap() && j.contains_ideal(&k).unwrap());
        for f in i.gens() {
            for g in j.gens() {
                prop_assert!(k.contains(&r.mul(f, g)).unwrap());
            }
        }
    }

    #[test]
    fn quotient_laws(i in arb_ideal(3, 3, 2), j in arb_ideal(3, 2, 1)) {
        let r = i.ring().clone();
        let j = GradedIdeal::new(&r, j.gens().to_vec()).unwrap();
        let q = ideal_quotient(&i, &j).unwrap();
        prop_assert!(q.contains_ideal(&i).unwrap());
        for f in q.gens() {
            for g in j.gens() {
                prop_assert!(i.contains(&r.mul(f, g)).unwrap());
            }
        }
    }

    #[test]
    fn monomial_saturation_matches_truncation_oracle(a in arb_monomials(3, 4, 3)) {
        let r = ring(3);
        let i = monomial_ideal(&r, &a);
        let sat = saturate_irrelevant(&i).unwrap();
        prop_assert!(sat.same_ideal(&monomial_ideal(&r, &monomial_saturation(&a, 3))).unwrap());
        prop_assert!(saturate_irrelevant(&sat).unwrap().same_ideal(&sat).unwrap());
    }

    #[test]
    fn elimination_commutes_with_sums_in_disjoint_variables(
        a in proptest::collection::vec(arb_form_data(2), 1..3),
        b in proptest::collection::vec(arb_form_data(2), 1..3),
    ) {
        // I in x0, x1, x2 and J in x3, x4
        let r = ring(5);
        let sub_i = ring(3);
        let sub_j = ring(2);
        // x_k of a subring with `n` variables becomes x_{k + shift}
        let lift = |f: &Poly, n: usize, shift: usize| {
            r.from_terms(f.terms().iter().map(|t| {
                let mut e = vec![0u32; 5];
                for (k, x) in t.mon.exponents(n).into_iter().enumerate() {
                    e[k + shift] = x;
                }
                (Monomial::from_exponents(&e).unwrap(), t.coef)
            }))
        };
        let gi: Vec<Poly> = a.iter().map(|(d, p)| lift(&form(&sub_i, *d, p), 3, 0)).filter(|f| !f.is_zero()).collect();
        let gj: Vec<Poly> = b.iter().map(|(d, p)| lift(&form(&sub_j, *d, p), 2, 3)).filter(|f| !f.is_zero()).collect();
        let i = GradedIdeal::new(&r, gi).unwrap();
        let j = GradedIdeal::new(&r, gj).unwrap();
        let lhs = eliminate(&ideal_sum(&i, &j).unwrap(), &[0]).unwrap();
        let rhs = ideal_sum(&eliminate(&i, &[0]).unwrap(), &eliminate(&j, &[0]).unwrap()).unwrap();
        prop_assert!(lhs.same_ideal(&rhs).unwrap());
    }
}

proptest! {
    #![proptest_config(config(16))]

    #[test]
    fn resolutions_are_minimal_complexes(i in arb_ideal(4, 4, 3)) {
        let res = Resolution::of_ideal(&i, None).unwrap();
        prop_assert!(res.is_complex());
        prop_assert!(res.is_minimal());
        let b = res.betti();
        let hs = HilbertSeries::of_ideal(&i).unwrap();
        let mut num = hs.numerator.clone();
        while num.len() > 1 && *num.last().unwrap() == 0 {
            num.pop();
        }
        prop_assert_eq!(b.hilbert_numerator(), num);
    }

    #[test]
    fn depth_is_the_first_nonvanishing_local_cohomology(i in arb_ideal(4, 3, 2)) {
        let b = Resolution::of_ideal(&i, None).unwrap().betti();
        let p = cohomology_profile(&i, None).unwrap();
        let first = (0..=3usize).find(|&k| !p.support(k).is_empty());
        prop_assert_eq!(first, Some(b.depth()));
    }

    #[test]
    fn ideal_files_roundtrip(i in arb_ideal(4, 4, 3)) {
        let text = Document::single(i.ring().clone(), i.gens().to_vec()).format();
        let doc = Document::parse(&text).unwrap();
        let back = GradedIdeal::new(&doc.ring, doc.primary().unwrap().to_vec()).unwrap();
        let (a, b) = (back.gb().unwrap(), i.gb().unwrap());
        prop_assert_eq!(a.elements(), b.elements());
    }
}
