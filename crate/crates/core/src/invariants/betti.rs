//! Graded Betti numbers and their text formats.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Betti numbers of `A = S/I` over `S` with `nvars` variables.
///
/// `beta(i, j)` follows the shifted convention: the dimension of `Tor_i(K, A)`
/// in internal degree `i + j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    nvars: usize,
    entries: BTreeMap<(usize, i64), u64>,
}

impl BettiTable {
    pub fn new(nvars: usize) -> Self {
        BettiTable { nvars, entries: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Adds `count` to the entry of homological degree `i` and internal degree `deg`.
    pub fn add(&mut self, i: usize, deg: i64, count: u64) {
        if count > 0 {
            *self.entries.entry((i, deg)).or_insert(0) += count;
        }
    }

    /// Dimension of `Tor_i(K, A)` in internal degree `deg`.
    pub fn at_degree(&self, i: usize, deg: i64) -> u64 {
        self.entries.get(&(i, deg)).copied().unwrap_or(0)
    }

    /// `beta_{i,j} = dim Tor_i(K, A)_{i+j}`.
    pub fn beta(&self, i: usize, j: i64) -> u64 {
        self.at_degree(i, i as i64 + j)
    }

    /// Nonzero entries as `(i, j, beta_{i,j})` with shifted `j`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, u64)> + '_ {
        self.entries.iter().map(|(&(i, d), &v)| (i, d - i as i64, v))
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, v)| v).sum()
    }

    /// Projective dimension.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// `reg A = max { j : beta_{i,j} != 0 }`.
    pub fn reg(&self) -> i64 {
        self.entries().map(|e| e.1).max().unwrap_or(0)
    }

    /// Regularity of the projective scheme defined by a saturated ideal, `reg A + 1`.
    pub fn scheme_reg(&self) -> i64 {
        self.reg() + 1
    }

    /// Auslander–Buchsbaum: `depth A = nvars - pd`.
    pub fn depth(&self) -> usize {
        self.nvars - self.pd()
    }

    /// `(reg, depth, pd)` of `A`.
    pub fn regularity_and_depth(&self) -> (i64, usize, usize) {
        (self.reg(), self.depth(), self.pd())
    }

    /// Numerator of the Hilbert series, `sum_{i,d} (-1)^i beta_i(d) t^d`.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|k| k.1).max().unwrap_or(0).max(0) as usize;
        let mut out = vec![0i64; top + 1];
        for (&(i, d), &v) in &self.entries {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            out[d as usize] += sign * v as i64;
        }
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        out
    }

    /// Rows `j = 1..=reg`, columns `i = 1..=pd`, as printed for ideals of
    /// nondegenerate schemes. Row `j` lists `beta_{1,j}, ..., beta_{pd,j}`.
    pub fn paper_rows(&self) -> Vec<Vec<u64>> {
        let (reg, pd) = (self.reg(), self.pd());
        (1..=reg).map(|j| (1..=pd).map(|i| self.beta(i, j)).collect()).collect()
    }

    /// The table in the printed layout, aligned.
    pub fn format_ascii(&self) -> String {
        let rows = self.paper_rows();
        let pd = self.pd();
        let width = rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .chain((1..=pd).map(|i| i.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = rows.len().to_string().len().max(1);
        let mut out = String::new();
        let _ = write!(out, "{:>label$} |", "");
        for i in 1..=pd {
            let _ = write!(out, " {i:>width$}");
        }
        out.push('\n');
        let _ = writeln!(out, "{}+{}", "-".repeat(label + 1), "-".repeat(pd * (width + 1)));
        for (k, row) in rows.iter().enumerate() {
            let _ = write!(out, "{:>label$} |", k + 1);
            for v in row {
                let _ = write!(out, " {v:>width$}");
            }
            out.push('\n');
        }
        out
    }

    /// One `beta i j value` line per nonzero entry, preceded by `nvars n`.
    pub fn format_kv(&self) -> String {
        let mut out = format!("nvars {}\n", self.nvars);
        for (i, j, v) in self.entries() {
            let _ = writeln!(out, "beta {i} {j} {v}");
        }
        out
    }

    pub fn parse_kv(src: &str) -> Result<Self> {
        let mut table = BettiTable::new(0);
        for (idx, line) in src.lines().enumerate() {
            let toks: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse { line: idx + 1, msg: format!("bad betti line `{line}`") };
            match toks.as_slice() {
                [] => {}
                ["nvars", n] => table.nvars = n.parse().map_err(|_| bad())?,
                ["beta", i, j, v] => {
                    let i: usize = i.parse().map_err(|_| bad())?;
                    let j: i64 = j.parse().map_err(|_| bad())?;
                    table.add(i, i as i64 + j, v.parse().map_err(|_| bad())?);
                }
                _ => return Err(bad()),
            }
        }
        Ok(table)
    }

    /// Builds a table of `S/I` from printed rows: `rows[j-1][i-1] = beta_{i,j}`,
    /// with `beta_{0,0} = 1`.
    pub fn from_paper_rows(nvars: usize, rows: &[&[u64]]) -> Self {
        let mut t = BettiTable::new(nvars);
        t.add(0, 0, 1);
        for (jm1, row) in rows.iter().enumerate() {
            for (im1, &v) in row.iter().enumerate() {
                let (i, j) = (im1 + 1, jm1 as i64 + 1);
                t.add(i, i as i64 + j, v);
            }
        }
        t
    }

    /// First cell `(i, j)` where the two tables differ, if any.
    pub fn first_difference(&self, other: &BettiTable) -> Option<(usize, i64, u64, u64)> {
        let mut keys: Vec<(usize, i64)> = self.entries().chain(other.entries()).map(|(i, j, _)| (i, j)).collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter().find_map(|(i, j)| {
            let (a, b) = (self.beta(i, j), other.beta(i, j));
            (a != b).then_some((i, j, a, b))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_and_roundtrip() {
        let t = BettiTable::from_paper_rows(4, &[&[3, 2]]);
        assert_eq!(t.reg(), 1);
        assert_eq!(t.pd(), 2);
        assert_eq!(t.depth(), 2);
        assert_eq!(t.hilbert_numerator(), vec![1, 0, -3, 2]);
        assert_eq!(t.paper_rows(), vec![vec![3, 2]]);
        assert_eq!(t.format_ascii(), "  | 1 2\n--+----\n1 | 3 2\n");
        assert_eq!(BettiTable::parse_kv(&t.format_kv()).unwrap(), t);
        assert_eq!(t.first_difference(&t), None);
        let u = BettiTable::from_paper_rows(4, &[&[3, 1]]);
        assert_eq!(t.first_difference(&u), Some((2, 1, 2, 1)));
    }

    #[test]
    fn gaps_in_rows() {
        let t = BettiTable::from_paper_rows(7, &[&[6, 8, 3, 0, 0, 0], &[0; 6], &[4, 12, 12, 4, 0, 0]]);
        assert_eq!(t.paper_rows()[1], vec![0; 4]);
        assert_eq!(t.reg(), 3);
        assert_eq!(t.pd(), 4);
    }
}
