//! Descent inequalities for the Hartshorne–Rao function and the degree bound
//! for surfaces of maximal sectional regularity.

use super::{Report, Status};
use crate::error::Result;
use crate::invariants::cohomology::{default_window, profile_from_resolution};
use crate::invariants::{derived_invariants, CohomologyProfile, DerivedInvariants, HilbertSeries, Resolution};
use crate::ring::GradedIdeal;

/// Numerical data of a projective surface `X` in `P^r`.
#[derive(Clone, Debug)]
pub struct SurfaceData {
    pub d: i64,
    pub r: i64,
    /// Arithmetic depth of the coordinate ring.
    pub depth: usize,
    /// Regularity of `X` as a scheme.
    pub reg_x: i64,
    /// Regularity of a reduced irreducible hyperplane section, if one is known.
    pub reg_c: Option<i64>,
    /// Upper bound on the sectional regularity.
    pub sreg: Option<i64>,
    pub profile: CohomologyProfile,
    pub derived: DerivedInvariants,
}

impl SurfaceData {
    /// Resolves `i`, computes its cohomology on `window` (or the default
    /// window) and the derived invariants.
    pub fn compute(i: &GradedIdeal, window: Option<(i64, i64)>, reg_c: Option<i64>, sreg: Option<i64>) -> Result<Self> {
        let res = Resolution::of_ideal(i, None)?;
        let betti = res.betti();
        let profile = profile_from_resolution(&res, window.unwrap_or_else(|| default_window(&res)))?;
        let hs = HilbertSeries::of_ideal(i)?;
        let (d, r) = (hs.degree(), i.ring().nvars() as i64 - 1);
        let derived = derived_invariants(&profile, d, r, hs.dimension())?;
        Ok(SurfaceData { d, r, depth: betti.depth(), reg_x: betti.scheme_reg(), reg_c, sreg, profile, derived })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    Lemma45,
    Cor46,
    Prop43d,
}

impl Claim {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "lemma45" => Some(Claim::Lemma45),
            "cor46" => Some(Claim::Cor46),
            "prop43" | "prop43d" => Some(Claim::Prop43d),
            _ => None,
        }
    }
}

fn fmt_opt(x: Option<i64>) -> String {
    x.map_or("-inf".to_string(), |v| v.to_string())
}

/// `a <= b` where `None` stands for `-inf`.
fn le(a: Option<i64>, b: Option<i64>) -> bool {
    match (a, b) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(x), Some(y)) => x <= y,
    }
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        _ => None,
    }
}

/// Evaluates the requested descent inequalities on the computed numbers.
pub fn descent_audit(s: &SurfaceData, claims: &[Claim]) -> Report {
    let p = &s.profile;
    let delta = s.derived.delta;
    let mut rep = Report::new(format!("descent audit (d={}, r={}, delta={})", s.d, s.r, fmt_opt(delta)));
    for claim in claims {
        match claim {
            Claim::Lemma45 => {
                let end = s.derived.end_h1;
                match s.reg_c {
                    Some(rc) => {
                        rep.check(
                            "lemma45(a)",
                            rc <= s.reg_x.min(s.d - s.r + 3),
                            format!("reg C = {rc} <= min(reg X = {}, d-r+3 = {})", s.reg_x, s.d - s.r + 3),
                        );
                        let bound = min_opt(Some(rc - 1), end);
                        rep.check(
                            "lemma45(b)",
                            le(delta, bound) && le(bound, Some(s.reg_x - 2)),
                            format!(
                                "delta = {} <= min(reg C - 1 = {}, end H^1 = {}) = {} <= reg X - 2 = {}",
                                fmt_opt(delta),
                                rc - 1,
                                fmt_opt(end),
                                fmt_opt(bound),
                                s.reg_x - 2
                            ),
                        );
                    }
                    None => rep.check(
                        "lemma45(b)",
                        le(delta, end) && le(end, Some(s.reg_x - 2)),
                        format!("delta = {} <= end H^1 = {} <= reg X - 2 = {}", fmt_opt(delta), fmt_opt(end), s.reg_x - 2),
                    ),
                }
            }
            Claim::Cor46 => {
                let (h1, h2) = (p.h(1, 1).unwrap_or(0), p.h(2, 0).unwrap_or(0));
                let bound = (s.d - s.r + 2).min(h1 + h2);
                let detail = format!(
                    "delta = {} <= min(d-r+2 = {}, h^1(1) + h^2(0) = {}) = {bound}",
                    fmt_opt(delta),
                    s.d - s.r + 2,
                    h1 + h2
                );
                if in_prop43_range(s) {
                    rep.check("cor46", le(delta, Some(bound)), detail);
                } else {
                    rep.push("cor46", Status::Vacuous, format!("outside 6 <= r+1 <= d <= 2r-4; {detail}"));
                }
            }
            Claim::Prop43d => {
                if !in_prop43_range(s) {
                    rep.push("prop43(d)", Status::Vacuous, "outside 6 <= r+1 <= d <= 2r-4");
                    continue;
                }
                for m in 1..=p.hi {
                    let (Some(h1), Some(h2)) = (p.h(1, m), p.h(2, m - 1)) else { continue };
                    let start = h1 + h2 + m;
                    let bad: Vec<i64> = (start.max(p.lo + 1)..=p.hi)
                        .filter(|&n| p.h(1, n).unwrap() > (p.h(1, n - 1).unwrap() - 1).max(0))
                        .collect();
                    rep.check(
                        format!("prop43(d) m={m}"),
                        bad.is_empty(),
                        if bad.is_empty() {
                            format!("h^1 descends for n >= {start}")
                        } else {
                            format!("h^1 fails to descend at n = {bad:?} (threshold {start})")
                        },
                    );
                }
            }
        }
    }
    rep
}

fn in_prop43_range(s: &SurfaceData) -> bool {
    6 <= s.r + 1 && s.r + 1 <= s.d && s.d <= 2 * s.r - 4
}

/// Degree bound for surfaces of maximal sectional regularity and depth one
/// whose Hartshorne–Rao function descends early.
pub fn thm510_audit(s: &SurfaceData) -> Report {
    let (d, r) = (s.d, s.r);
    let mut rep = Report::new(format!("degree bound audit (d={d}, r={r})"));
    let conclusion = d > 2 * r - 5;
    let msr = s.sreg == Some(d - r + 3);
    let hyps = [
        ("4 < r < d", 4 < r && r < d),
        ("maximal sectional regularity", msr),
        ("depth 1", s.depth == 1),
        ("delta <= d-r+1", le(s.derived.delta, Some(d - r + 1))),
    ];
    let failed: Vec<&str> = hyps.iter().filter(|h| !h.1).map(|h| h.0).collect();
    let detail = format!(
        "sreg {}, depth {}, delta {}; d = {d} {} 2r-5 = {}",
        s.sreg.map_or("unknown".to_string(), |v| format!("<= {v}")),
        s.depth,
        fmt_opt(s.derived.delta),
        if conclusion { ">" } else { "<=" },
        2 * r - 5
    );
    if failed.is_empty() {
        rep.check("thm510", conclusion, detail);
    } else {
        let note = if conclusion { "; the conclusion holds without the hypotheses" } else { "" };
        rep.push("thm510", Status::Vacuous, format!("hypothesis fails: {}; {detail}{note}", failed.join(", ")));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::derived_invariants;

    fn profile(h1: &[i64]) -> CohomologyProfile {
        let lo = -3;
        let hi = lo + h1.len() as i64 - 1;
        let zeros = vec![0; h1.len()];
        CohomologyProfile { lo, hi, table: vec![zeros.clone(), h1.to_vec(), zeros.clone(), zeros] }
    }

    fn data(h1: &[i64], d: i64, r: i64, depth: usize, sreg: Option<i64>) -> SurfaceData {
        let p = profile(h1);
        let derived = derived_invariants(&p, d, r, 3).unwrap();
        SurfaceData { d, r, depth, reg_x: 4, reg_c: Some(3), sreg, profile: p, derived }
    }

    #[test]
    fn descent_examples() {
        // h^1 = 2, 2 at n = 1, 2 on the window -3..5
        let s = data(&[0, 0, 0, 0, 2, 2, 0, 0, 0], 7, 6, 1, Some(3));
        assert_eq!(s.derived.delta, Some(2));
        let rep = descent_audit(&s, &[Claim::Lemma45, Claim::Cor46, Claim::Prop43d]);
        assert!(rep.passed(), "{}", rep.format_text());
        // an acm surface descends trivially
        let acm = data(&[0; 9], 7, 6, 3, Some(3));
        assert_eq!(acm.derived.delta, None);
        assert!(descent_audit(&acm, &[Claim::Lemma45, Claim::Cor46]).passed());
        assert_eq!(thm510_audit(&acm).items[0].status, Status::Vacuous);
    }

    #[test]
    fn violations_are_reported() {
        // h^1 rising late contradicts the bound from reg C = 3
        let s = data(&[0, 0, 0, 0, 1, 1, 1, 1, 0], 7, 6, 1, Some(3));
        assert_eq!(s.derived.delta, Some(4));
        assert!(!descent_audit(&s, &[Claim::Lemma45]).passed());
        // max sectional regularity, depth 1 and early descent with d <= 2r - 5
        let t = data(&[0, 0, 0, 0, 1, 0, 0, 0, 0], 7, 6, 1, Some(4));
        assert_eq!(thm510_audit(&t).items[0].status, Status::Violated);
    }
}
