use std::fmt;

use crate::error::{Error, Result};

/// Maximum number of ring variables.
pub const MAX_VARS: usize = 32;
/// Largest exponent a single variable may carry.
pub const MAX_EXPONENT: u32 = 127;

const WORDS: usize = MAX_VARS / 8;
const HIGH: u64 = 0x8080_8080_8080_8080;

/// A monomial in at most [`MAX_VARS`] variables.
///
/// Exponents are packed one byte per variable: variable `i` lives in byte
/// `i % 8` of word `i / 8`. Every byte stays below 128, so divisibility, lcm
/// and overflow checks are word-parallel. The total degree is cached.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    w: [u64; WORDS],
    deg: u32,
}

#[inline]
fn byte_sum(w: u64) -> u32 {
    w.to_le_bytes().iter().map(|&b| b as u32).sum()
}

impl Monomial {
    pub const ONE: Monomial = Monomial { w: [0; WORDS], deg: 0 };

    #[inline]
    pub fn one() -> Self {
        Self::ONE
    }

    pub fn var(i: usize) -> Self {
        assert!(i < MAX_VARS);
        let mut m = Self::ONE;
        m.w[i / 8] = 1u64 << (8 * (i % 8));
        m.deg = 1;
        m
    }

    /// All monomials of degree `k` in `n` variables, decreasing in lex order.
    pub fn all_of_degree(n: usize, k: u32) -> Vec<Monomial> {
        fn rec(v: usize, left: u32, cur: Monomial, n: usize, out: &mut Vec<Monomial>) {
            if v + 1 == n {
                let mut m = cur;
                m.w[v / 8] |= (left as u64) << (8 * (v % 8));
                m.deg += left;
                out.push(m);
                return;
            }
            for e in (0..=left).rev() {
                let mut m = cur;
                m.w[v / 8] |= (e as u64) << (8 * (v % 8));
                m.deg += e;
                rec(v + 1, left - e, m, n, out);
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if k == 0 {
                out.push(Self::ONE);
            }
            return out;
        }
        assert!(n <= MAX_VARS && k <= MAX_EXPONENT);
        rec(0, k, Self::ONE, n, &mut out);
        out
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables(exps.len()));
        }
        let mut m = Self::ONE;
        for (i, &e) in exps.iter().enumerate() {
            if e > MAX_EXPONENT {
                return Err(Error::ExponentOverflow { max: MAX_EXPONENT });
            }
            m.w[i / 8] |= (e as u64) << (8 * (i % 8));
            m.deg += e;
        }
        Ok(m)
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        ((self.w[i / 8] >> (8 * (i % 8))) & 0xff) as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exponent(i)).collect()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub(crate) fn words(&self) -> &[u64; WORDS] {
        &self.w
    }

    /// Degree counted only over the variables selected by `mask`.
    #[inline]
    pub fn masked_degree(&self, mask: &VarMask) -> u32 {
        let mut s = 0;
        for k in 0..WORDS {
            s += byte_sum(self.w[k] & mask.0[k]);
        }
        s
    }

    /// Product, failing when some exponent would exceed [`MAX_EXPONENT`].
    #[inline]
    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut out = Self::ONE;
        let mut over = 0;
        for k in 0..WORDS {
            let s = self.w[k] + other.w[k];
            over |= s & HIGH;
            out.w[k] = s;
        }
        if over != 0 {
            return Err(Error::ExponentOverflow { max: MAX_EXPONENT });
        }
        out.deg = self.deg + other.deg;
        Ok(out)
    }

    /// Product for internal hot loops. Exponent overflow is a hard error there
    /// since every degree in scope stays far below the limit.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        match self.checked_mul(other) {
            Ok(m) => m,
            Err(e) => panic!("{e}"),
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg {
            return false;
        }
        for k in 0..WORDS {
            if ((other.w[k] | HIGH) - self.w[k]) & HIGH != HIGH {
                return false;
            }
        }
        true
    }

    /// `other / self`; caller guarantees divisibility.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut out = Self::ONE;
        for k in 0..WORDS {
            out.w[k] = other.w[k] - self.w[k];
        }
        out.deg = other.deg - self.deg;
        out
    }

    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        divisor.divides(self).then(|| divisor.quotient_of(self))
    }

    #[inline]
    fn ge_bytes(a: u64, b: u64) -> u64 {
        // 0xff in each byte where a >= b
        let flags = ((a | HIGH) - b) & HIGH;
        (flags >> 7) * 0xff
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Self::ONE;
        for k in 0..WORDS {
            let f = Self::ge_bytes(self.w[k], other.w[k]);
            out.w[k] = (self.w[k] & f) | (other.w[k] & !f);
            out.deg += byte_sum(out.w[k]);
        }
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Self::ONE;
        for k in 0..WORDS {
            let f = Self::ge_bytes(self.w[k], other.w[k]);
            out.w[k] = (other.w[k] & f) | (self.w[k] & !f);
            out.deg += byte_sum(out.w[k]);
        }
        out
    }

    #[inline]
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..WORDS).all(|k| {
            // nonzero bytes of each side never overlap
            let a = ((self.w[k] | HIGH) - 0x0101_0101_0101_0101) & HIGH | (self.w[k] & HIGH);
            let b = ((other.w[k] | HIGH) - 0x0101_0101_0101_0101) & HIGH | (other.w[k] & HIGH);
            a & b == 0
        })
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Support of the monomial as a variable mask.
    pub fn support(&self) -> VarMask {
        let mut m = VarMask::EMPTY;
        for k in 0..WORDS {
            let nz = ((self.w[k] | HIGH) - 0x0101_0101_0101_0101) & HIGH;
            m.0[k] = (nz >> 7) * 0xff;
        }
        m
    }

    /// Bit `i` set iff variable `i` occurs; a cheap prefilter for divisibility.
    #[inline]
    pub fn support_bits(&self) -> u32 {
        let mut out = 0u32;
        for k in 0..WORDS {
            let nz = (((self.w[k] | HIGH) - 0x0101_0101_0101_0101) & HIGH | (self.w[k] & HIGH)) >> 7;
            let packed = (nz.wrapping_mul(0x0102_0408_1020_4080) >> 56) as u32;
            out |= packed << (8 * k);
        }
        out
    }

    /// Keep only the variables in `mask`.
    pub fn restrict(&self, mask: &VarMask) -> Monomial {
        let mut out = Self::ONE;
        for k in 0..WORDS {
            out.w[k] = self.w[k] & mask.0[k];
            out.deg += byte_sum(out.w[k]);
        }
        out
    }

    /// Relabel variables: variable `i` of `self` becomes variable `map[i]`.
    /// Variables with `map[i] == None` must have exponent zero.
    pub fn relabel(&self, map: &[Option<usize>]) -> Monomial {
        let mut exps = [0u32; MAX_VARS];
        for (i, target) in map.iter().enumerate() {
            let e = self.exponent(i);
            if e != 0 {
                let t = target.expect("relabel drops a variable that occurs");
                exps[t] += e;
            }
        }
        Monomial::from_exponents(&exps).expect("relabel stays in range")
    }

    /// Degree-reverse-lexicographic comparison with `x_0 > x_1 > ...`.
    #[inline]
    pub fn cmp_degrevlex(&self, other: &Monomial) -> std::cmp::Ordering {
        self.deg.cmp(&other.deg).then_with(|| {
            for k in (0..WORDS).rev() {
                if self.w[k] != other.w[k] {
                    return other.w[k].cmp(&self.w[k]);
                }
            }
            std::cmp::Ordering::Equal
        })
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, name) in names.iter().enumerate() {
            match self.exponent(i) {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps: Vec<u32> = (0..MAX_VARS).map(|i| self.exponent(i)).collect();
        let last = exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &exps[..last])
    }
}

/// A set of variables, stored as byte masks aligned with [`Monomial`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct VarMask(pub(crate) [u64; WORDS]);

impl VarMask {
    pub const EMPTY: VarMask = VarMask([0; WORDS]);

    pub fn from_vars(vars: &[usize]) -> Self {
        let mut m = Self::EMPTY;
        for &v in vars {
            assert!(v < MAX_VARS);
            m.0[v / 8] |= 0xffu64 << (8 * (v % 8));
        }
        m
    }

    pub fn all(nvars: usize) -> Self {
        Self::from_vars(&(0..nvars).collect::<Vec<_>>())
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        (self.0[v / 8] >> (8 * (v % 8))) & 0xff != 0
    }

    pub fn complement(&self, nvars: usize) -> Self {
        let all = Self::all(nvars);
        let mut m = Self::EMPTY;
        for k in 0..WORDS {
            m.0[k] = all.0[k] & !self.0[k];
        }
        m
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn vars(&self) -> Vec<usize> {
        (0..MAX_VARS).filter(|&v| self.contains(v)).collect()
    }

    #[inline]
    pub fn intersects(&self, m: &Monomial) -> bool {
        (0..WORDS).any(|k| self.0[k] & m.w[k] != 0)
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
    fn degrevlex_examples() {
        use std::cmp::Ordering::*;
        // x^2 y vs x y z
        assert_eq!(mono(&[2, 1, 0]).cmp_degrevlex(&mono(&[1, 1, 1])), Greater);
        assert_eq!(mono(&[1, 1, 1]).cmp_degrevlex(&mono(&[1, 1, 1])), Equal);
        assert_eq!(Monomial::var(0).cmp_degrevlex(&Monomial::var(1)), Greater);
        // x z vs y^2: revlex puts y^2 above x z
        assert_eq!(mono(&[1, 0, 1]).cmp_degrevlex(&mono(&[0, 2, 0])), Less);
    }

    #[test]
    fn support_bits_match_exponents() {
        let m = mono(&[0, 3, 0, 0, 0, 0, 0, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 9]);
        assert_eq!(m.support_bits(), (1 << 1) | (1 << 7) | (1 << 8) | (1 << 31));
        assert_eq!(Monomial::ONE.support_bits(), 0);
    }

    #[test]
    fn word_parallel_ops() {
        let a = mono(&[3, 0, 2, 0, 0, 0, 0, 0, 1]);
        let b = mono(&[1, 4, 2, 0, 0, 0, 0, 0, 0, 5]);
        assert_eq!(a.lcm(&b), mono(&[3, 4, 2, 0, 0, 0, 0, 0, 1, 5]));
        assert_eq!(a.gcd(&b), mono(&[1, 0, 2]));
        assert!(mono(&[1, 0, 2]).divides(&a));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&a.lcm(&b)), mono(&[0, 4, 0, 0, 0, 0, 0, 0, 0, 5]));
        assert!(mono(&[1, 0, 0]).is_coprime(&mono(&[0, 3, 1])));
        assert!(!mono(&[1, 0, 1]).is_coprime(&mono(&[0, 3, 1])));
        assert_eq!(a.support(), VarMask::from_vars(&[0, 2, 8]));
    }

    #[test]
    fn overflow_is_checked() {
        let m = mono(&[100]);
        assert!(matches!(m.checked_mul(&m), Err(Error::ExponentOverflow { .. })));
        assert!(Monomial::from_exponents(&[128]).is_err());
    }

    fn arb_mono(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, n).prop_map(|e| Monomial::from_exponents(&e).unwrap())
    }

    proptest! {
        #[test]
        fn degrevlex_is_a_multiplicative_total_order(u in arb_mono(5), v in arb_mono(5), w in arb_mono(5)) {
            use std::cmp::Ordering::*;
            let uv = u.cmp_degrevlex(&v);
            prop_assert_eq!(uv.reverse(), v.cmp_degrevlex(&u));
            prop_assert_eq!(uv == Equal, u == v);
            if uv == Less && v.cmp_degrevlex(&w) == Less {
                prop_assert_eq!(u.cmp_degrevlex(&w), Less);
            }
            prop_assert_eq!(u.mul(&w).cmp_degrevlex(&v.mul(&w)), uv);
        }

        #[test]
        fn divisibility_matches_exponents(u in arb_mono(9), v in arb_mono(9)) {
            let naive = (0..9).all(|i| u.exponent(i) <= v.exponent(i));
            prop_assert_eq!(u.divides(&v), naive);
            let l = u.lcm(&v);
            for i in 0..9 {
                prop_assert_eq!(l.exponent(i), u.exponent(i).max(v.exponent(i)));
                prop_assert_eq!(u.gcd(&v).exponent(i), u.exponent(i).min(v.exponent(i)));
            }
            prop_assert_eq!(u.is_coprime(&v), (0..9).all(|i| u.exponent(i) == 0 || v.exponent(i) == 0));
        }
    }
}
