//! Betti numbers of curves of maximal regularity with `r + 2 <= d <= 2r - 3`.

use super::Report;
use crate::error::{Error, Result};
use crate::invariants::hilbert::binom;
use crate::invariants::BettiTable;

/// Linear strand entry `u_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UValue {
    Exact(i64),
    AtMost(i64),
}

/// Quadratic strand entry `v_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VValue {
    Exact(i64),
    /// `v_i = u_{i+1} + offset`, with `offset = a_{i+1} - c_{i+1}`.
    FromNext { offset: i64 },
}

/// Predicted `Tor_i(K, S/I)` for `1 <= i <= r`: `u_i` copies in degree `i + 1`,
/// `v_i` in degree `i + 2` and `C(r-1, i-1)` in degree `i + d - r + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm32Prediction {
    pub r: usize,
    pub d: usize,
    /// Indexed by `i` in `0..=r+1`; entry 0 is unused.
    pub a: Vec<i64>,
    pub c: Vec<i64>,
    /// Indexed by `i` in `0..=r`; entry 0 is unused.
    pub u: Vec<UValue>,
    pub v: Vec<VValue>,
    pub top: Vec<i64>,
}

impl Thm32Prediction {
    /// Degree shifts `j` (with `Tor_i` in degree `i + j`) of the three strands.
    pub fn strands(&self) -> [i64; 3] {
        [1, 2, (self.d - self.r + 1) as i64]
    }

    pub fn quadrics(&self) -> i64 {
        binom(self.r as i64 + 1, 2) - self.d as i64 - 1
    }
}

pub fn thm32_predict(r: usize, d: usize) -> Result<Thm32Prediction> {
    if r <= 3 || d < r + 2 || d + 3 > 2 * r {
        return Err(Error::OutOfRange(format!("need r > 3 and r + 2 <= d <= 2r - 3, got r={r}, d={d}")));
    }
    let (ri, di) = (r as i64, d as i64);
    let a: Vec<i64> = (0..=ri + 1).map(|i| (di - ri) * binom(ri, i) + binom(ri - 1, i - 1)).collect();
    let c: Vec<i64> = (0..=ri + 1).map(|i| (di - 1) * binom(ri - 1, i) - binom(ri - 1, i + 1)).collect();
    let mut u = vec![UValue::Exact(0); r + 1];
    let mut v = vec![VValue::Exact(0); r + 1];
    for i in 1..=ri {
        let iu = i as usize;
        u[iu] = if i == 1 {
            UValue::Exact(binom(ri + 1, 2) - di - 1)
        } else if i <= 2 * ri - di - 1 {
            UValue::Exact(c[iu] - a[iu])
        } else {
            UValue::AtMost(c[iu])
        };
        v[iu] = if i <= 2 * ri - di - 2 || i == ri {
            VValue::Exact(0)
        } else if i == ri - 1 {
            VValue::Exact(di - ri + 1)
        } else {
            VValue::FromNext { offset: a[iu + 1] - c[iu + 1] }
        };
    }
    let top = (0..=ri).map(|i| binom(ri - 1, i - 1)).collect();
    Ok(Thm32Prediction { r, d, a, c, u, v, top })
}

/// Compares the Betti table of a curve in `P^r` against the prediction, cell by cell.
pub fn thm32_check(b: &BettiTable, pred: &Thm32Prediction) -> Result<Report> {
    if b.nvars() != pred.r + 1 {
        return Err(Error::DimensionMismatch(format!(
            "Betti table lives over {} variables, prediction is for P^{}",
            b.nvars(),
            pred.r
        )));
    }
    let (r, d) = (pred.r, pred.d);
    let strands = pred.strands();
    let mut rep = Report::new(format!("Betti prediction for r={r}, d={d}"));
    rep.check("reg", b.scheme_reg() == (d - r + 2) as i64, format!("reg = {}, expected {}", b.scheme_reg(), d - r + 2));
    let stray: Vec<String> = b
        .entries()
        .filter(|&(i, j, _)| i >= 1 && (i > r || !strands.contains(&j)))
        .map(|(i, j, v)| format!("beta_{i},{j}={v}"))
        .collect();
    rep.check("support", stray.is_empty(), if stray.is_empty() { "only the three strands".into() } else { stray.join(" ") });
    let beta = |i: usize, j: i64| b.beta(i, j) as i64;
    for i in 1..=r {
        let got_u = beta(i, 1);
        match pred.u[i] {
            UValue::Exact(x) => rep.check(format!("u_{i}"), got_u == x, format!("{got_u} = {x}")),
            UValue::AtMost(x) => rep.check(format!("u_{i}"), got_u <= x, format!("{got_u} <= {x}")),
        }
        let got_v = beta(i, 2);
        match pred.v[i] {
            VValue::Exact(x) => rep.check(format!("v_{i}"), got_v == x, format!("{got_v} = {x}")),
            VValue::FromNext { offset } => {
                let want = beta(i + 1, 1) + offset;
                rep.check(format!("v_{i}"), got_v == want, format!("{got_v} = u_{} + ({offset}) = {want}", i + 1))
            }
        }
        let got_t = beta(i, strands[2]);
        rep.check(format!("top_{i}"), got_t == pred.top[i], format!("{got_t} = C({}, {})", r - 1, i - 1));
    }
    let cubics = beta(1, 2);
    rep.check(
        "generators",
        beta(1, 1) == pred.quadrics() && beta(1, strands[2]) == 1 && cubics == 0,
        format!(
            "{} quadrics (expected {}), {cubics} cubics, {} forms of degree {}",
            beta(1, 1),
            pred.quadrics(),
            beta(1, strands[2]),
            d - r + 2
        ),
    );
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_values() {
        let p = thm32_predict(6, 8).unwrap();
        assert_eq!(p.u[1], UValue::Exact(12));
        assert_eq!(p.v[5], VValue::Exact(3));
        assert_eq!(p.top[1..].to_vec(), vec![1, 5, 10, 10, 5, 1]);
        // 2r - d - 1 = 3: u_2, u_3 exact, v_1, v_2 zero
        assert_eq!(p.u[2], UValue::Exact(p.c[2] - p.a[2]));
        assert!(matches!(p.u[4], UValue::AtMost(_)));
        assert_eq!((p.v[1], p.v[2]), (VValue::Exact(0), VValue::Exact(0)));
        let q = thm32_predict(6, 9).unwrap();
        assert_eq!(q.v[1], VValue::Exact(0));
        assert!(matches!(q.v[2], VValue::FromNext { .. }));
        assert_eq!(q.v[5], VValue::Exact(4));
        assert!(matches!(thm32_predict(6, 12), Err(Error::OutOfRange(_))));
        assert!(matches!(thm32_predict(3, 5), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn binomial_convention() {
        let p = thm32_predict(5, 7).unwrap();
        // c_{r+1} = (d-1) C(r-1, r+1) - C(r-1, r+2) = 0
        assert_eq!(p.c[6], 0);
        assert_eq!(p.a[6], 0);
        assert_eq!(p.a[1], 2 * 5 + 1);
    }
}
