//! Scripted constructions of the worked surface examples, compared cell by
//! cell against their printed Betti diagrams and cohomology.

use std::fmt;

use crate::constructions::{hyperplane_section, project, scroll, secant_length, Center, ScrollSpec};
use crate::error::{Error, Result};
use crate::ideal_ops::{add_forms, ideal_quotient, rename_vars, seeded_linear_form};
use crate::invariants::cohomology::{default_window, profile_from_resolution};
use crate::invariants::{
    derived_invariants, BettiTable, CohomologyProfile, HilbertSeries, Resolution,
};
use crate::ring::text::{parse_poly, Document};
use crate::ring::{GradedIdeal, Poly, PrimeField};
use crate::verify::{
    descent_audit, sreg_estimate, thm510_audit, thm63_classify, CaseTag, Claim, Report, SurfaceData,
    Thm63Signature,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExampleId {
    E71,
    E72,
    E73A,
    E73B,
    E74A,
    E74B,
    E74C,
    E74D,
    E74E,
}

impl ExampleId {
    pub const ALL: [ExampleId; 9] = [
        ExampleId::E71,
        ExampleId::E72,
        ExampleId::E73A,
        ExampleId::E73B,
        ExampleId::E74A,
        ExampleId::E74B,
        ExampleId::E74C,
        ExampleId::E74D,
        ExampleId::E74E,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ExampleId::E71 => "7.1",
            ExampleId::E72 => "7.2",
            ExampleId::E73A => "7.3A",
            ExampleId::E73B => "7.3B",
            ExampleId::E74A => "7.4A",
            ExampleId::E74B => "7.4B",
            ExampleId::E74C => "7.4C",
            ExampleId::E74D => "7.4D",
            ExampleId::E74E => "7.4E",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        let norm = s.trim().to_ascii_uppercase().replace(['(', ')', ' '], "");
        Self::ALL.into_iter().find(|e| e.as_str().to_ascii_uppercase() == norm)
    }

    /// Case of the high linear deficiency classification stated for `X`.
    pub fn expected_case(&self) -> Option<CaseTag> {
        match self {
            ExampleId::E71 => None,
            ExampleId::E72 => Some(CaseTag::A),
            ExampleId::E73A => Some(CaseTag::BI),
            ExampleId::E73B => Some(CaseTag::BII),
            ExampleId::E74A => Some(CaseTag::CI),
            ExampleId::E74B => Some(CaseTag::CII),
            ExampleId::E74C => Some(CaseTag::CIII),
            ExampleId::E74D => Some(CaseTag::CIV),
            ExampleId::E74E => Some(CaseTag::CV),
        }
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A file produced by a reproduction, relative to the output directory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Artifact {
    pub path: String,
    pub contents: String,
}

/// Everything computed for one example.
#[derive(Clone, Debug)]
pub struct Reproduction {
    pub id: ExampleId,
    /// Comparisons with printed values; labels start with the stage name.
    pub report: Report,
    /// Internal consistency of the engine: labels start with `engine`.
    pub engine: Report,
    /// Inequality audits on every surface of the example.
    pub audits: Vec<Report>,
    pub surface: SurfaceData,
    pub signature: Option<Thm63Signature>,
    pub artifacts: Vec<Artifact>,
}

/// Printed values that cannot be reproduced, as `(example, check label)`.
///
/// In 7.1 the printed form for `C` gives the diagram printed for `D` at every
/// characteristic tried. In 7.4A the printed diagram and `H^2(A) = 0` force
/// `h^1(2) = HP(2) - HF(2) = 1`, so the printed `h^1(2) = 2` and the `delta`
/// derived from it cannot both hold; the section by `x0 - x6` has regularity 3
/// in these coordinates.
pub const DOCUMENTED_DISCREPANCIES: &[(ExampleId, &str)] = &[
    (ExampleId::E71, "C (printed form) betti"),
    (ExampleId::E71, "C (printed form) reg"),
    (ExampleId::E74A, "X h^1 nonzero values"),
    (ExampleId::E74A, "X delta"),
    (ExampleId::E74A, "C1 reg"),
];

impl Reproduction {
    /// All comparisons hold.
    pub fn passed(&self) -> bool {
        self.report.passed() && self.engine.passed() && self.audits.iter().all(Report::passed)
    }

    /// Failing comparisons that are not among the documented discrepancies.
    pub fn unexpected_failures(&self) -> Vec<String> {
        std::iter::once(&self.report)
            .chain(std::iter::once(&self.engine))
            .chain(self.audits.iter())
            .flat_map(|r| r.failures())
            .filter(|it| !DOCUMENTED_DISCREPANCIES.contains(&(self.id, it.label.as_str())))
            .map(|it| format!("{}: {}", it.label, it.detail))
            .collect()
    }

    /// Failing comparisons that are documented discrepancies.
    pub fn documented_failures(&self) -> Vec<String> {
        self.report
            .failures()
            .filter(|it| DOCUMENTED_DISCREPANCIES.contains(&(self.id, it.label.as_str())))
            .map(|it| format!("{}: {}", it.label, it.detail))
            .collect()
    }

    /// The first failing comparison, if any.
    pub fn first_failure(&self) -> Option<String> {
        std::iter::once(&self.report)
            .chain(std::iter::once(&self.engine))
            .chain(self.audits.iter())
            .flat_map(|r| r.failures())
            .next()
            .map(|it| format!("{}: {}", it.label, it.detail))
    }
}

type Rows = &'static [&'static [u64]];

struct Run {
    id: ExampleId,
    rep: Report,
    engine: Report,
    artifacts: Vec<Artifact>,
    /// Audits of the intermediate surfaces.
    surface_audits: Vec<Report>,
}

struct Stage {
    ideal: GradedIdeal,
    betti: BettiTable,
    res: Resolution,
    profile: CohomologyProfile,
}

impl Stage {
    fn degree(&self) -> Result<i64> {
        Ok(HilbertSeries::of_ideal(&self.ideal)?.degree())
    }

    fn r(&self) -> i64 {
        self.ideal.ring().nvars() as i64 - 1
    }
}

impl Run {
    fn new(id: ExampleId) -> Self {
        Run { id, rep: Report::new(format!("example {id}")), engine: Report::new(format!("engine checks {id}")), artifacts: Vec::new(), surface_audits: Vec::new() }
    }

    fn artifact(&mut self, name: &str, contents: String) {
        self.artifacts.push(Artifact { path: format!("{}/{name}", self.id), contents });
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, label: impl Into<String>, got: T, want: T) {
        let ok = got == want;
        self.rep.check(label, ok, format!("got {got:?}, printed {want:?}"));
    }

    /// Resolves, compares with the printed diagram, and computes local cohomology.
    fn stage(&mut self, name: &str, ideal: GradedIdeal, rows: Option<Rows>) -> Result<Stage> {
        self.artifact(&format!("{name}.ideal"), Document::single(ideal.ring().clone(), ideal.gens().to_vec()).format());
        let res = Resolution::of_ideal(&ideal, None)?;
        let betti = res.betti();
        self.artifact(&format!("{name}.betti"), format!("{}{}", betti.format_kv(), betti.format_ascii()));
        if let Some(rows) = rows {
            let want = BettiTable::from_paper_rows(ideal.ring().nvars(), rows);
            let detail = match betti.first_difference(&want) {
                None => "matches the printed diagram".to_string(),
                Some((i, j, a, b)) => format!("first difference at beta_{i},{j}: computed {a}, printed {b}"),
            };
            self.rep.check(format!("{name} betti"), betti.first_difference(&want).is_none(), detail);
        }
        let hs = HilbertSeries::of_ideal(&ideal)?;
        let mut num = hs.numerator.clone();
        while num.len() > 1 && *num.last().unwrap() == 0 {
            num.pop();
        }
        self.engine.check(format!("engine {name} complex"), res.is_complex(), "d o d = 0");
        self.engine.check(format!("engine {name} minimal"), res.is_minimal(), "no unit entries");
        self.engine.check(
            format!("engine {name} numerator"),
            betti.hilbert_numerator() == num,
            format!("alternating Betti sum {:?} vs Hilbert numerator {:?}", betti.hilbert_numerator(), num),
        );
        let profile = profile_from_resolution(&res, default_window(&res))?;
        self.artifact(&format!("{name}.coh"), format!("{}{}", profile.format_kv(), profile.format_ascii()));
        let first = (0..=3usize).find(|&i| !profile.support(i).is_empty());
        self.engine.check(
            format!("engine {name} depth"),
            first == Some(betti.depth()),
            format!("depth {} from Betti numbers, first nonvanishing local cohomology {first:?}", betti.depth()),
        );
        let stage = Stage { ideal, betti, res, profile };
        if name != "X" && hs.dimension() == 3 {
            self.surface_audits.extend(audits(name, &surface_data(&stage, None, None)?));
        }
        Ok(stage)
    }

    fn reg_depth(&mut self, name: &str, s: &Stage, reg: Option<i64>, depth: Option<usize>) {
        if let Some(r) = reg {
            self.eq(format!("{name} reg"), s.betti.scheme_reg(), r);
        }
        if let Some(d) = depth {
            self.eq(format!("{name} depth"), s.betti.depth(), d);
        }
    }

    fn h_support(&mut self, name: &str, s: &Stage, i: usize, want: &[(i64, i64)]) {
        self.eq(format!("{name} h^{i} nonzero values"), s.profile.support(i), want.to_vec());
    }

    /// `h^i(n) = v` for every `n <= 0` in the window.
    fn h_nonpositive(&mut self, name: &str, s: &Stage, i: usize, v: i64) {
        let got: Vec<i64> = (s.profile.lo..=0).map(|n| s.profile.h(i, n).unwrap()).collect();
        let want = vec![v; got.len()];
        self.eq(format!("{name} h^{i}(n) for n <= 0"), got, want);
    }

    fn section(&mut self, name: &str, x: &Stage, f: &str, rows: Option<Rows>, reg: i64) -> Result<Stage> {
        let form = parse_poly(x.ideal.ring(), f, 0)?;
        self.section_by(name, x, &form, rows, reg)
    }

    fn section_by(&mut self, name: &str, x: &Stage, form: &Poly, rows: Option<Rows>, reg: i64) -> Result<Stage> {
        let c = self.stage(name, hyperplane_section(&x.ideal, form)?, rows)?;
        self.rep.check(
            format!("{name} reg"),
            c.betti.scheme_reg() == reg,
            format!("section by {}: got {}, printed {reg}", x.ideal.ring().fmt_poly(form), c.betti.scheme_reg()),
        );
        Ok(c)
    }
}

fn surface_data(s: &Stage, reg_c: Option<i64>, sreg: Option<i64>) -> Result<SurfaceData> {
    let (d, r) = (s.degree()?, s.r());
    let derived = derived_invariants(&s.profile, d, r, 3)?;
    Ok(SurfaceData {
        d,
        r,
        depth: s.betti.depth(),
        reg_x: s.betti.scheme_reg(),
        reg_c,
        sreg,
        profile: s.profile.clone(),
        derived,
    })
}

fn audits(name: &str, s: &SurfaceData) -> Vec<Report> {
    let mut a = descent_audit(s, &[Claim::Lemma45, Claim::Cor46, Claim::Prop43d]);
    a.title = format!("{name}: {}", a.title);
    let mut b = thm510_audit(s);
    b.title = format!("{name}: {}", b.title);
    vec![a, b]
}

fn named(ideal: &GradedIdeal, names: &[&str]) -> Result<Center> {
    Center::named(ideal.ring(), names)
}

/// Number of random hyperplane sections used for the sectional regularity bound.
pub const SREG_TRIALS: usize = 2;

/// Runs one example at characteristic `field` with `seed` for the random sections.
pub fn reproduce(id: ExampleId, field: PrimeField, seed: u64) -> Result<Reproduction> {
    let mut run = Run::new(id);
    let mut extra_audits: Vec<Report> = Vec::new();
    // (X stage, section regularities used for the sectional bound, printed sreg)
    let (x, section_regs, printed_sreg): (Stage, Vec<i64>, Option<i64>) = match id {
        ExampleId::E71 => {
            let y = scroll(field, ScrollSpec::new(2, 5)?)?;
            let x = run.stage("X", project(&y, &named(&y, &["x5", "x6"])?)?, Some(&[
                &[6, 8, 3, 0, 0, 0],
                &[4, 12, 12, 4, 0, 0],
                &[4, 18, 32, 28, 12, 2],
            ]))?;
            run.reg_depth("X", &x, Some(4), Some(1));
            run.h_support("X", &x, 1, &[(1, 2), (2, 2)]);
            const C_ROWS: Rows = &[&[6, 8, 3, 0, 0], &[6, 20, 24, 12, 2]];
            // the printed form for C lands in the special locus of D; a general form gives C
            let general = seeded_linear_form(x.ideal.ring(), seed);
            let c = run.section_by("C", &x, &general, Some(C_ROWS), 3)?;
            run.section("C (printed form)", &x, "x0-x1-x2-x3-x4-x7-x8", Some(C_ROWS), 3)?;
            let dd = run.section("D", &x, "x0-x1-x8", Some(&[&[7, 8, 3, 0, 0], &[0, 6, 8, 3, 0], &[1, 4, 6, 4, 1]]), 4)?;
            let regs = vec![c.betti.scheme_reg(), dd.betti.scheme_reg()];
            (x, regs, Some(3))
        }
        ExampleId::E72 => {
            let y = scroll(field, ScrollSpec::new(1, 8)?)?;
            let x = run.stage("X", project(&y, &named(&y, &["x5", "x6", "x7", "x8"])?)?, Some(&[
                &[6, 8, 3, 0, 0, 0],
                &[0, 0, 0, 0, 0, 0],
                &[4, 12, 12, 4, 0, 0],
                &[4, 18, 32, 28, 12, 2],
                &[6, 28, 52, 48, 22, 4],
            ]))?;
            run.reg_depth("X", &x, Some(6), Some(1));
            run.h_support("X", &x, 1, &[(1, 4), (2, 8), (3, 8), (4, 4)]);
            run.h_support("X", &x, 2, &[]);
            let c = run.section("C", &x, "x1-x2", Some(&[
                &[6, 8, 3, 0, 0],
                &[2, 4, 0, 0, 0],
                &[1, 4, 10, 6, 1],
                &[0, 0, 0, 0, 0],
                &[1, 4, 6, 4, 1],
            ]), 6)?;
            // the section module A/fA, not its saturation
            let f = parse_poly(x.ideal.ring(), "x1-x2", 0)?;
            let af = run.stage("A_f", add_forms(&x.ideal, &[f])?, None)?;
            let (h1, h2) = (af.profile.h(1, 1).unwrap_or(0), af.profile.h(1, 2).unwrap_or(0));
            run.eq("A_f h^1(1)", h1, 4);
            run.rep.check("A_f h^1(2)", h2 >= 4, format!("got {h2}, printed >= 4"));
            let mut sharp = Report::new("X: descent of the section module at d = 2r - 3");
            sharp.check(
                "prop43(c) sharpness",
                h2 > (h1 - 1).max(0),
                format!("h^1(A/fA)(2) = {h2} > max(h^1(A/fA)(1) - 1, 0) = {}", (h1 - 1).max(0)),
            );
            extra_audits.push(sharp);
            (x, vec![c.betti.scheme_reg()], None)
        }
        ExampleId::E73A | ExampleId::E74A => {
            let w = scroll(field, ScrollSpec::new(1, 8)?)?;
            let y = run.stage("Y", project(&w, &Center::sheared(w.ring(), "x1", "x2", &["x2"])?)?, Some(&[
                &[27, 105, 189, 189, 105, 27, 0],
                &[0, 0, 0, 0, 0, 0, 1],
            ]))?;
            run.reg_depth("Y", &y, None, Some(3));
            if id == ExampleId::E73A {
                let x = run.stage("X", project(&y.ideal, &named(&y.ideal, &["x6", "x7", "x8"])?)?, Some(&[
                    &[4, 2, 0, 0, 0, 0],
                    &[6, 21, 20, 6, 0, 0],
                    &[0, 0, 0, 0, 0, 0],
                    &[5, 23, 42, 38, 17, 3],
                ]))?;
                run.reg_depth("X", &x, Some(5), Some(1));
                run.h_support("X", &x, 1, &[(1, 3), (2, 4), (3, 3)]);
                let c = run.section("C", &x, "x1-x5+x10", Some(&[
                    &[5, 2, 0, 0, 0],
                    &[2, 15, 16, 5, 0],
                    &[0, 0, 0, 0, 0],
                    &[1, 4, 6, 4, 1],
                ]), 5)?;
                (x, vec![c.betti.scheme_reg()], None)
            } else {
                let names = ["x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9"];
                let w2 = rename_vars(&y.ideal, &names)?;
                let y2 = run.stage("Y2", project(&w2, &Center::sheared(w2.ring(), "x0", "x9", &["x9"])?)?, Some(&[
                    &[19, 58, 75, 44, 5, 0],
                    &[0, 0, 0, 0, 6, 2],
                ]))?;
                run.reg_depth("Y2", &y2, None, Some(3));
                // generators of the canonical module sit in degree nvars - a for the last shifts a
                let pd = y2.res.length();
                let gens: Vec<i64> = y2.res.degrees(pd).iter().map(|a| y2.ideal.ring().nvars() as i64 - a).collect();
                run.eq("Y2 canonical module generators", gens, vec![1, 1]);
                let x = run.stage("X", project(&y2.ideal, &named(&y2.ideal, &["x4", "x5"])?)?, Some(&[
                    &[3, 2, 0, 0, 0, 0],
                    &[13, 39, 42, 19, 3, 0],
                    &[1, 5, 10, 10, 5, 1],
                ]))?;
                run.reg_depth("X", &x, Some(4), None);
                run.h_support("X", &x, 1, &[(1, 2), (2, 2)]);
                run.h_support("X", &x, 2, &[]);
                let c1 = run.section("C1", &x, "x0-x6", None, 4)?;
                let c2 = run.section("C2", &x, "x1-x2", None, 3)?;
                (x, vec![c1.betti.scheme_reg(), c2.betti.scheme_reg()], None)
            }
        }
        ExampleId::E73B => {
            let w = scroll(field, ScrollSpec::new(1, 8)?)?;
            let y = run.stage("Y", project(&w, &named(&w, &["x3"])?)?, Some(&[
                &[26, 98, 168, 154, 70, 6, 0, 0],
                &[1, 7, 21, 35, 35, 28, 9, 1],
            ]))?;
            run.reg_depth("Y", &y, None, Some(2));
            let x = run.stage("X", project(&y.ideal, &named(&y.ideal, &["x6", "x7", "x8"])?)?, Some(&[
                &[3, 2, 0, 0, 0, 0],
                &[11, 31, 30, 11, 1, 0],
                &[0, 0, 0, 0, 0, 0],
                &[5, 23, 42, 38, 17, 3],
            ]))?;
            run.reg_depth("X", &x, Some(5), Some(1));
            run.h_support("X", &x, 1, &[(1, 3), (2, 4), (3, 3)]);
            run.h_nonpositive("X", &x, 2, 1);
            let pos: Vec<(i64, i64)> = x.profile.support(2).into_iter().filter(|&(n, _)| n > 0).collect();
            run.eq("X h^2(n) for n > 0", pos, vec![]);
            let c = run.section("C", &x, "x1-x2", Some(&[
                &[4, 2, 0, 0, 0],
                &[7, 25, 26, 10, 1],
                &[0, 0, 0, 0, 0],
                &[1, 4, 6, 4, 1],
            ]), 5)?;
            (x, vec![c.betti.scheme_reg()], None)
        }
        ExampleId::E74B | ExampleId::E74D => {
            let w = scroll(field, ScrollSpec::new(3, 6)?)?;
            if id == ExampleId::E74B {
                let y = run.stage("Y", project(&w, &named(&w, &["x2", "x9"])?)?, Some(&[
                    &[18, 52, 60, 24, 0, 0, 0],
                    &[1, 6, 15, 30, 27, 9, 1],
                ]))?;
                run.reg_depth("Y", &y, Some(3), Some(2));
                let center = Center::sheared(y.ideal.ring(), "x0", "x8", &["x6", "x8"])?;
                let x = run.stage("X", project(&y.ideal, &center)?, Some(&[
                    &[3, 0, 0, 0, 0, 0],
                    &[9, 30, 27, 8, 0, 0],
                    &[3, 15, 29, 27, 12, 2],
                ]))?;
                run.reg_depth("X", &x, Some(4), Some(1));
                run.h_support("X", &x, 1, &[(1, 2), (2, 2)]);
                run.h_support("X", &x, 2, &[(0, 1)]);
                let c = run.section("C", &x, "x3-x4", None, 4)?;
                (x, vec![c.betti.scheme_reg()], None)
            } else {
                let y = run.stage("Y", project(&w, &named(&w, &["x1", "x9"])?)?, Some(&[
                    &[17, 46, 45, 8, 0, 0, 0],
                    &[2, 12, 34, 65, 48, 16, 2],
                ]))?;
                run.reg_depth("Y", &y, Some(3), Some(2));
                let x = run.stage("X", project(&y.ideal, &named(&y.ideal, &["x6"])?)?, Some(&[
                    &[8, 12, 3, 0, 0, 0, 0],
                    &[12, 54, 101, 90, 42, 10, 1],
                ]))?;
                run.reg_depth("X", &x, Some(3), Some(1));
                run.h_support("X", &x, 1, &[(1, 1)]);
                run.h_nonpositive("X", &x, 2, 2);
                let c = run.section("C", &x, "x0-x10", None, 3)?;
                (x, vec![c.betti.scheme_reg()], None)
            }
        }
        ExampleId::E74C => {
            let w = scroll(field, ScrollSpec::new(1, 8)?)?;
            let y = run.stage("Y", project(&w, &Center::sheared(w.ring(), "x1", "x2", &["x2", "x4"])?)?, Some(&[
                &[18, 52, 60, 24, 0, 0, 0],
                &[1, 6, 15, 30, 27, 9, 1],
            ]))?;
            run.reg_depth("Y", &y, None, Some(2));
            run.h_nonpositive("Y", &y, 2, 1);
            let x = run.stage("X", project(&y.ideal, &named(&y.ideal, &["x8"])?)?, Some(&[
                &[9, 11, 0, 0, 0, 0, 0],
                &[5, 36, 81, 75, 36, 9, 1],
            ]))?;
            run.h_support("X", &x, 1, &[(1, 1)]);
            let c = run.section("C", &x, "x0-x1-x5-x6", None, 3)?;
            (x, vec![c.betti.scheme_reg()], Some(3))
        }
        ExampleId::E74E => {
            let w = scroll(field, ScrollSpec::new(1, 8)?)?;
            let y = run.stage("Y", project(&w, &named(&w, &["x3", "x4"])?)?, Some(&[
                &[18, 52, 60, 24, 5, 0, 0],
                &[0, 0, 0, 15, 12, 3, 0],
                &[1, 6, 15, 20, 15, 6, 1],
            ]))?;
            run.reg_depth("Y", &y, None, Some(2));
            run.h_nonpositive("Y", &y, 2, 3);
            let pos: Vec<(i64, i64)> = y.profile.support(2).into_iter().filter(|&(n, _)| n > 0).collect();
            run.eq("Y h^2(n) for n > 0", pos, vec![(1, 1)]);
            quartic_plane(&mut run, &y.ideal)?;
            let center = Center::sheared(y.ideal.ring(), "x7", "x8", &["x8"])?;
            let x = run.stage("X", project(&y.ideal, &center)?, Some(&[
                &[9, 12, 3, 0, 0, 0, 0],
                &[5, 34, 71, 65, 31, 8, 1],
                &[1, 5, 10, 10, 5, 1, 0],
            ]))?;
            run.reg_depth("X", &x, None, Some(1));
            run.h_support("X", &x, 1, &[(1, 1)]);
            let c = run.section("C", &x, "x0-x2+x10", None, 4)?;
            (x, vec![c.betti.scheme_reg()], Some(4))
        }
    };

    let (d, r) = (x.degree()?, x.r());
    run.artifact("X.hilbert", format!("degree {d}\nr {r}\n"));
    let random = sreg_estimate(&x.ideal, SREG_TRIALS, seed)?;
    let mut sreg_lines = String::new();
    for (f, reg) in &random.trials {
        sreg_lines.push_str(&format!("trial {f} reg {reg}\n"));
    }
    let sreg = section_regs.iter().copied().chain(std::iter::once(random.bound)).min();
    sreg_lines.push_str(&format!("bound {}\n", sreg.unwrap()));
    run.artifact("X.sreg", sreg_lines);
    if let Some(s) = printed_sreg {
        run.eq("X sreg", sreg, Some(s));
    }
    let data = surface_data(&x, section_regs.first().copied(), sreg)?;
    match id {
        ExampleId::E71 => {
            run.eq("X delta", data.derived.delta, Some(2));
            run.eq("X end H^1", data.derived.end_h1, Some(2));
        }
        ExampleId::E72 => {
            run.eq("X delta", data.derived.delta, Some(3));
            run.eq("X end H^1", data.derived.end_h1, Some(4));
        }
        ExampleId::E73B => {
            run.eq("X delta", data.derived.delta, Some(2));
            run.eq("X end H^1", data.derived.end_h1, Some(3));
        }
        ExampleId::E74A => {
            run.eq("X delta", data.derived.delta, Some(2));
            run.eq("X end H^1", data.derived.end_h1, Some(2));
        }
        _ => {}
    }
    let mut audit_reports = audits("X", &data);
    audit_reports.extend(extra_audits);
    audit_reports.append(&mut run.surface_audits);
    let signature = id.expected_case().map(|want| {
        let sig = thm63_classify(&x.profile, d, r);
        run.rep.check("X case", sig.tag == want, format!("{}; printed case {want}", sig.describe()));
        sig
    });
    let mut text = run.rep.format_text();
    text.push_str(&run.engine.format_text());
    for a in &audit_reports {
        text.push_str(&a.format_text());
    }
    run.artifact("report.txt", text);
    Ok(Reproduction {
        id,
        report: run.rep,
        engine: run.engine,
        audits: audit_reports,
        surface: data,
        signature,
        artifacts: run.artifacts,
    })
}

/// The plane of 4-secant lines of the surface `Y` of the last example.
fn quartic_plane(run: &mut Run, j: &GradedIdeal) -> Result<()> {
    let ring = j.ring();
    let p = |s: &str| parse_poly(ring, s, 0);
    let q = p("x1^3*x2-x0^3*x5")?;
    run.rep.check("Y contains Q", j.contains(&q)?, "x1^3*x2 - x0^3*x5 lies in the ideal");
    let gens = j.minimal_gens()?;
    let quad: Vec<Poly> = gens.iter().filter(|g| g.degree() == Some(2)).cloned().collect();
    let degs: Vec<u32> = gens.iter().filter_map(|g| g.degree()).collect();
    run.eq("Y generator degrees", (quad.len(), degs.iter().filter(|&&d| d == 4).count(), degs.len()), (18, 1, 19));
    let j2 = GradedIdeal::new(ring, quad)?;
    run.rep.check("Q is a minimal generator", !j2.contains(&q)?, "Q is not in the ideal of the quadrics");
    let plane_forms: Vec<Poly> = ["x5", "x6", "x7", "x8", "x9", "x10"].iter().map(|s| p(s)).collect::<Result<_>>()?;
    let l = GradedIdeal::new(ring, plane_forms.clone())?;
    let colon = ideal_quotient(&j2, &GradedIdeal::new(ring, vec![q.clone()])?)?;
    run.rep.check("J_2 : Q", colon.same_ideal(&l)?, "equals (x5, ..., x10)");
    let lhs = add_forms(j, &plane_forms)?;
    let rhs = add_forms(&l, &[q])?;
    run.rep.check("J + L", lhs.same_ideal(&rhs)?, "equals L + (Q)");
    let mut line_forms = plane_forms;
    line_forms.push(p("x0-x1-x2")?);
    let line = GradedIdeal::new(ring, line_forms)?;
    let len = secant_length(j, &line)?;
    run.eq("Y secant length in the plane", len, 4);
    run.artifact("Y.plane", Document::single(ring.clone(), l.gens().to_vec()).format());
    Ok(())
}

/// Parses a list like `7.1,7.4E` or `all`.
pub fn parse_ids(s: &str) -> Result<Vec<ExampleId>> {
    if s.trim() == "all" {
        return Ok(ExampleId::ALL.to_vec());
    }
    s.split(',')
        .map(|t| ExampleId::parse(t).ok_or_else(|| Error::InvalidArgument(format!("unknown example `{t}`"))))
        .collect()
}
