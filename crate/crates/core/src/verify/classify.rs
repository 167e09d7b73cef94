//! Cohomological signatures of surfaces with high linear deficiency.
//!
//! Only the numerical shadow of each case is matched: `h = h^1(1)` relative to
//! `d - r`, the shape of `h^2`, and `sigma`. Geometric statements about the
//! projecting surface are out of reach and are not asserted.

use std::fmt;

use crate::invariants::CohomologyProfile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    A,
    BI,
    BII,
    CI,
    CII,
    CIII,
    CIV,
    CV,
    NoMatch,
}

impl CaseTag {
    pub const ALL: [CaseTag; 8] =
        [CaseTag::A, CaseTag::BI, CaseTag::BII, CaseTag::CI, CaseTag::CII, CaseTag::CIII, CaseTag::CIV, CaseTag::CV];

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::A => "a",
            CaseTag::BI => "b-i",
            CaseTag::BII => "b-ii",
            CaseTag::CI => "c-i",
            CaseTag::CII => "c-ii",
            CaseTag::CIII => "c-iii",
            CaseTag::CIV => "c-iv",
            CaseTag::CV => "c-v",
            CaseTag::NoMatch => "no-match",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().chain([CaseTag::NoMatch]).find(|t| t.as_str() == s)
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Shape of `n -> h^2(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum H2Shape {
    Zero,
    /// `h^2(0) = 1` and `h^2(n) = 0` for `n != 0`.
    OnlyAtZero,
    /// `h^2(n) = e` for `n <= 0`, `h^2(1) = at_one`, and zero for `n > 1`.
    Stable { e: i64, at_one: i64 },
}

impl H2Shape {
    fn expected(&self, n: i64) -> i64 {
        match *self {
            H2Shape::Zero => 0,
            H2Shape::OnlyAtZero => i64::from(n == 0),
            H2Shape::Stable { e, at_one } => match n {
                n if n <= 0 => e,
                1 => at_one,
                _ => 0,
            },
        }
    }

    /// First degree in the window where the profile disagrees.
    fn mismatch(&self, p: &CohomologyProfile) -> Option<(i64, i64, i64)> {
        (p.lo..=p.hi).find_map(|n| {
            let got = p.h(2, n).unwrap_or(0);
            let want = self.expected(n);
            (got != want).then_some((n, got, want))
        })
    }
}

/// One row of the case table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseRow {
    pub tag: CaseTag,
    /// `h - (d - r)`.
    pub h_offset: i64,
    pub h2: H2Shape,
    /// Printed value of `sigma(X)` in the case statement.
    pub sigma: i64,
    /// Value implied by the projecting surface's type, when it differs.
    pub sigma_alt: Option<i64>,
}

pub fn case_table() -> Vec<CaseRow> {
    let row = |tag, h_offset, h2, sigma, sigma_alt| CaseRow { tag, h_offset, h2, sigma, sigma_alt };
    vec![
        row(CaseTag::A, 1, H2Shape::Zero, 0, None),
        row(CaseTag::BI, 0, H2Shape::Zero, 1, None),
        row(CaseTag::BII, 0, H2Shape::Stable { e: 1, at_one: 0 }, 0, None),
        row(CaseTag::CI, -1, H2Shape::Zero, 2, None),
        row(CaseTag::CII, -1, H2Shape::OnlyAtZero, 1, Some(2)),
        row(CaseTag::CIII, -1, H2Shape::Stable { e: 1, at_one: 0 }, 1, Some(0)),
        row(CaseTag::CIV, -1, H2Shape::Stable { e: 2, at_one: 0 }, 0, None),
        row(CaseTag::CV, -1, H2Shape::Stable { e: 3, at_one: 1 }, 0, None),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm63Signature {
    pub h: i64,
    pub sigma: i64,
    pub tag: CaseTag,
    /// Set when the computed `sigma` equals only one of two printed values.
    pub sigma_note: Option<String>,
    /// For `NoMatch`, the closest case and what differs.
    pub nearest: Option<(CaseTag, Vec<String>)>,
}

impl Thm63Signature {
    pub fn describe(&self) -> String {
        let mut s = format!("h^1(1) = {}, sigma = {}: ", self.h, self.sigma);
        if self.tag == CaseTag::NoMatch {
            s.push_str("no case matches");
            if let Some((t, diffs)) = &self.nearest {
                s.push_str(&format!("; nearest {t}: {}", diffs.join(", ")));
            }
        } else {
            s.push_str(&format!("signature consistent with case {}", self.tag));
        }
        if let Some(n) = &self.sigma_note {
            s.push_str(&format!(" [{n}]"));
        }
        s
    }
}

fn diffs(row: &CaseRow, p: &CohomologyProfile, h: i64, sigma: i64, d: i64, r: i64) -> Vec<String> {
    let mut out = Vec::new();
    if h != d - r + row.h_offset {
        out.push(format!("h^1(1) = {h}, needs {}", d - r + row.h_offset));
    }
    if let Some((n, got, want)) = row.h2.mismatch(p) {
        out.push(format!("h^2({n}) = {got}, needs {want}"));
    }
    if sigma != row.sigma && Some(sigma) != row.sigma_alt {
        out.push(format!("sigma = {sigma}, needs {}", row.sigma));
    }
    out
}

/// Matches a surface in `P^r` of degree `d` against the case table.
pub fn thm63_classify(p: &CohomologyProfile, d: i64, r: i64) -> Thm63Signature {
    let h = p.h(1, 1).unwrap_or(0);
    let sigma = match (p.h(2, 0), p.h(2, -1), p.h(3, 0), p.h(3, -1)) {
        (Some(a), Some(b), Some(c), Some(e)) => a - b - (c - e),
        _ => 0,
    };
    let table = case_table();
    let scored: Vec<(&CaseRow, Vec<String>)> = table.iter().map(|row| (row, diffs(row, p, h, sigma, d, r))).collect();
    let hits: Vec<&CaseRow> = scored.iter().filter(|(_, df)| df.is_empty()).map(|(row, _)| *row).collect();
    if hits.len() == 1 {
        let row = hits[0];
        let sigma_note = row.sigma_alt.map(|alt| {
            let which = if sigma == row.sigma { "case statement" } else { "projecting surface type" };
            format!(
                "printed sigma values disagree ({} in the case statement, {alt} from the projecting surface type); computed {sigma} agrees with the {which}",
                row.sigma
            )
        });
        return Thm63Signature { h, sigma, tag: row.tag, sigma_note, nearest: None };
    }
    let nearest = scored
        .into_iter()
        .min_by_key(|(_, df)| df.len())
        .map(|(row, df)| (row.tag, if hits.len() > 1 { vec![format!("{} cases match", hits.len())] } else { df }));
    Thm63Signature { h, sigma, tag: CaseTag::NoMatch, sigma_note: None, nearest }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(h1_at_1: i64, h2: &[i64], h3: &[i64]) -> CohomologyProfile {
        // window -3..=3
        let mut h1 = vec![0; 7];
        h1[4] = h1_at_1;
        CohomologyProfile { lo: -3, hi: 3, table: vec![vec![0; 7], h1, h2.to_vec(), h3.to_vec()] }
    }

    #[test]
    fn tags() {
        let z = [0; 7];
        assert_eq!(thm63_classify(&profile(4, &z, &[9, 3, 0, 0, 0, 0, 0]), 9, 6).tag, CaseTag::A);
        assert_eq!(thm63_classify(&profile(2, &z, &[9, 3, 1, 0, 0, 0, 0]), 9, 7).tag, CaseTag::BI);
        let stable = [1, 1, 1, 1, 0, 0, 0];
        assert_eq!(thm63_classify(&profile(2, &stable, &z), 9, 7).tag, CaseTag::BII);
        let s = thm63_classify(&profile(1, &stable, &[0, 0, 1, 0, 0, 0, 0]), 9, 7);
        assert_eq!(s.tag, CaseTag::CIII);
        assert!(s.sigma_note.unwrap().contains("computed 1 agrees with the case statement"));
        let s = thm63_classify(&profile(1, &stable, &z), 9, 7);
        assert_eq!(s.tag, CaseTag::CIII);
        assert!(s.sigma_note.unwrap().contains("projecting surface type"));
        let v = [3, 3, 3, 3, 1, 0, 0];
        assert_eq!(thm63_classify(&profile(1, &v, &z), 9, 7).tag, CaseTag::CV);
        let miss = thm63_classify(&profile(0, &z, &z), 9, 7);
        assert_eq!(miss.tag, CaseTag::NoMatch);
        assert!(miss.nearest.is_some());
        for t in CaseTag::ALL {
            assert_eq!(CaseTag::parse(t.as_str()), Some(t));
        }
    }
}
