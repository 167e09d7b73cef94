//! Exact linear algebra over `F_p`: sparse rank, dense reduction and kernels.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::ring::PrimeField;

/// A sparse row: `(column, nonzero value)` pairs in any order.
pub type SparseRow = Vec<(usize, u32)>;

/// Incremental row echelon form of sparse rows.
///
/// Pivot rows are stored normalized (leading entry one) and keyed by their
/// leading column, so adding a row costs one elimination pass.
pub struct SparseEchelon {
    field: PrimeField,
    pivots: Vec<Option<Vec<(usize, u32)>>>,
    dense: Vec<u32>,
    rank: usize,
}

impl SparseEchelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        SparseEchelon { field, pivots: vec![None; ncols], dense: vec![0; ncols], rank: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Adds a row; returns true when it was independent of the previous ones.
    pub fn add_row(&mut self, row: &[(usize, u32)]) -> bool {
        let f = self.field;
        let mut heap: BinaryHeap<Reverse<usize>> = BinaryHeap::with_capacity(row.len());
        for &(c, v) in row {
            let v = v % f.modulus();
            if v == 0 {
                continue;
            }
            if self.dense[c] == 0 {
                heap.push(Reverse(c));
            }
            self.dense[c] = f.add(self.dense[c], v);
        }
        let mut touched: Vec<usize> = Vec::new();
        while let Some(Reverse(c)) = heap.pop() {
            if heap.peek() == Some(&Reverse(c)) {
                continue;
            }
            let v = self.dense[c];
            if v == 0 {
                continue;
            }
            match &self.pivots[c] {
                Some(prow) => {
                    let m = f.neg(v);
                    for &(pc, pv) in prow {
                        let old = self.dense[pc];
                        let new = f.add(old, f.mul(m, pv));
                        if old == 0 && new != 0 {
                            heap.push(Reverse(pc));
                        }
                        self.dense[pc] = new;
                    }
                    debug_assert_eq!(self.dense[c], 0);
                }
                None => {
                    // c is the leading column: collect the rest of the row
                    touched.push(c);
                    while let Some(Reverse(d)) = heap.pop() {
                        if touched.last() != Some(&d) && self.dense[d] != 0 {
                            touched.push(d);
                        }
                    }
                    let inv = f.inv(v).expect("nonzero pivot");
                    let prow: Vec<(usize, u32)> = touched.iter().map(|&d| (d, f.mul(self.dense[d], inv))).collect();
                    for &d in &touched {
                        self.dense[d] = 0;
                    }
                    self.pivots[c] = Some(prow);
                    self.rank += 1;
                    return true;
                }
            }
        }
        false
    }
}

/// Rank of a sparse matrix with `ncols` columns.
pub fn sparse_rank(field: PrimeField, ncols: usize, rows: &[SparseRow]) -> usize {
    if rows.is_empty() || ncols == 0 {
        return 0;
    }
    let mut e = SparseEchelon::new(field, ncols);
    for r in rows {
        e.add_row(r);
        if e.rank() == ncols {
            break;
        }
    }
    e.rank()
}

/// Dense matrix over `F_p`, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, field: PrimeField, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = field.add(out.get(i, j), field.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self, field: PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else { continue };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = field.inv(self.get(r, c)).expect("nonzero pivot");
            for j in c..self.cols {
                let v = field.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let m = self.get(i, c);
                if m == 0 {
                    continue;
                }
                let m = field.neg(m);
                for j in c..self.cols {
                    let v = field.add(self.get(i, j), field.mul(m, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, field: PrimeField) -> usize {
        self.clone().rref(field).len()
    }

    /// Basis of `{v : self * v = 0}`.
    pub fn kernel(&self, field: PrimeField) -> Vec<Vec<u32>> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(m.get(r, free));
            }
            basis.push(v);
        }
        basis
    }
}

/// Dense univariate polynomials over `F_p`, lowest coefficient first.
fn upoly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn upoly_rem(f: PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = f.inv(b[db]).expect("nonzero leading coefficient");
    while r.len() > db {
        let c = f.mul(*r.last().unwrap(), inv);
        let shift = r.len() - 1 - db;
        for (k, &x) in b.iter().enumerate() {
            r[shift + k] = f.sub(r[shift + k], f.mul(c, x));
        }
        r.pop();
        r = upoly_trim(r);
    }
    upoly_trim(r)
}

fn upoly_mulmod(f: PrimeField, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    upoly_rem(f, &out, m)
}

fn upoly_powmod(f: PrimeField, base: &[u32], mut e: u64, m: &[u32]) -> Vec<u32> {
    let mut acc = upoly_rem(f, &[1], m);
    let mut b = upoly_rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = upoly_mulmod(f, &acc, &b, m);
        }
        b = upoly_mulmod(f, &b, &b, m);
        e >>= 1;
    }
    acc
}

fn upoly_gcd(f: PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let (mut a, mut b) = (upoly_trim(a.to_vec()), upoly_trim(b.to_vec()));
    while !b.is_empty() {
        let r = upoly_rem(f, &a, &b);
        a = b;
        b = r;
    }
    if let Some(&lc) = a.last() {
        let inv = f.inv(lc).expect("nonzero");
        a = a.into_iter().map(|c| f.mul(c, inv)).collect();
    }
    a
}

/// Distinct roots in `F_p` of a nonzero polynomial, by equal-degree splitting.
pub fn poly_roots(f: PrimeField, poly: &[u32]) -> Vec<u32> {
    let p = f.modulus();
    let g = upoly_trim(poly.to_vec());
    if g.len() <= 1 {
        return Vec::new();
    }
    if p == 2 {
        return (0..2).filter(|&t| g.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, t), c)) == 0).collect();
    }
    // product of the distinct linear factors: gcd(g, x^p - x)
    let mut xp = upoly_powmod(f, &[0, 1], p as u64, &g);
    if xp.len() < 2 {
        xp.resize(2, 0);
    }
    xp[1] = f.sub(xp[1], 1);
    let lin = upoly_gcd(f, &g, &upoly_trim(xp));
    let mut roots = Vec::new();
    let mut stack = vec![lin];
    let mut a: u32 = 1;
    while let Some(h) = stack.pop() {
        match h.len() {
            0 | 1 => {}
            2 => roots.push(f.neg(f.mul(h[0], f.inv(h[1]).expect("nonzero")))),
            _ => {
                // split by (x + a)^((p-1)/2) - 1
                loop {
                    let mut w = upoly_powmod(f, &[a, 1], ((p - 1) / 2) as u64, &h);
                    a = a.wrapping_add(1) % p;
                    if w.is_empty() {
                        w.push(0);
                    }
                    w[0] = f.sub(w[0], 1);
                    let d = upoly_gcd(f, &h, &upoly_trim(w));
                    if d.len() > 1 && d.len() < h.len() {
                        let mut q = h.clone();
                        // h / d by long division
                        let mut quot = vec![0u32; h.len() - d.len() + 1];
                        for k in (0..quot.len()).rev() {
                            let c = q[k + d.len() - 1];
                            quot[k] = c;
                            for (j, &x) in d.iter().enumerate() {
                                q[k + j] = f.sub(q[k + j], f.mul(c, x));
                            }
                        }
                        stack.push(d);
                        stack.push(quot);
                        break;
                    }
                }
            }
        }
    }
    roots.sort_unstable();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn small_ranks() {
        let m = Matrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(m.rank(f()), 2);
        let k = m.kernel(f());
        assert_eq!(k.len(), 1);
        let v = Matrix::from_rows(&k).transpose();
        assert!(m.mul(f(), &v).data.iter().all(|&x| x == 0));
    }

    #[test]
    fn splitting_roots() {
        let big = PrimeField::new(1_000_003).unwrap();
        // (x - 5)(x - 7)(x^2 + 1): x^2 + 1 has roots iff p = 1 mod 4; 1000003 = 3 mod 4
        let f5 = big.from_i64(-5);
        let f7 = big.from_i64(-7);
        let lin = [big.mul(f5, f7), big.add(f5, f7), 1];
        let poly = [lin[0], lin[1], big.add(lin[0], 1), lin[1], 1];
        assert_eq!(poly_roots(big, &poly), vec![5, 7]);
        let small = PrimeField::new(13).unwrap();
        // x^2 + 1 over F_13: roots 5 and 8
        assert_eq!(poly_roots(small, &[1, 0, 1]), vec![5, 8]);
        assert_eq!(poly_roots(small, &[0, 1]), vec![0]);
    }

    proptest! {
        #[test]
        fn sparse_and_dense_rank_agree(rows in proptest::collection::vec(proptest::collection::vec(0u32..4, 7), 0..9)) {
            let dense = if rows.is_empty() { 0 } else { Matrix::from_rows(&rows).rank(f()) };
            let sparse: Vec<SparseRow> = rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(c, &v)| (c, v)).collect())
                .collect();
            prop_assert_eq!(sparse_rank(f(), 7, &sparse), dense);
            if !rows.is_empty() {
                let m = Matrix::from_rows(&rows);
                prop_assert_eq!(m.kernel(f()).len(), 7 - dense);
            }
        }
    }
}
