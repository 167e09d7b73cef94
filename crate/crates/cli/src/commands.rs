use std::path::Path;

use syzlab::constructions::{
    hyperplane_coordinates, hyperplane_section, lgp_test, maxreg_curve, project, rational_normal_curve, scroll,
    secant_length, split_hyperplane_section_points, union_with_line, Center, PointSet, ScrollSpec,
};
use syzlab::ideal_ops::{
    eliminate_names, ideal_intersect, ideal_quotient, saturate, saturate_irrelevant, seeded_linear_form, substitute,
    LinearMap,
};
use syzlab::invariants::{cohomology_profile, derived_invariants, HilbertSeries, Resolution};
use syzlab::reproduce::{parse_ids, reproduce};
use syzlab::ring::text::{format_ring_header, parse_poly, Document};
use syzlab::ring::{GradedIdeal, PrimeField, Ring};
use syzlab::verify::{
    descent_audit, sreg_estimate, thm32_check, thm32_predict, thm510_audit, thm63_classify, CaseTag, Claim, Report,
    SurfaceData,
};

use crate::error::{CliError, CliResult};
use crate::io::{
    curve_document, curve_from_document, document_ideal, ideal_document, load_document, parse_forms, split_list, Output,
};
use crate::{Command, Global, Input, Operand};

fn field(g: &Global) -> CliResult<PrimeField> {
    Ok(PrimeField::new(g.prime)?)
}

fn load(input: &Input) -> CliResult<(Document, GradedIdeal)> {
    let doc = load_document(input.input.as_deref())?;
    let ideal = document_ideal(&doc, input.name.as_deref())?;
    Ok((doc, ideal))
}

fn load_ideal(input: &Input) -> CliResult<GradedIdeal> {
    Ok(load(input)?.1)
}

fn operand(ring: &Ring, op: &Operand) -> CliResult<Option<GradedIdeal>> {
    if let Some(path) = &op.with {
        let doc = load_document(Some(path))?;
        let j = document_ideal(&doc, None)?;
        if !j.ring().same_space(ring) {
            return Err(CliError::Usage(format!("{} lives in a different ring", path.display())));
        }
        return Ok(Some(GradedIdeal::new(ring, j.gens().to_vec())?));
    }
    match &op.forms {
        Some(f) => Ok(Some(GradedIdeal::new(ring, parse_forms(ring, f)?)?)),
        None => Ok(None),
    }
}

fn required(ring: &Ring, op: &Operand) -> CliResult<GradedIdeal> {
    operand(ring, op)?.ok_or_else(|| CliError::Usage("give the second ideal with --with or --forms".into()))
}

/// The line given on the command line, or the document's `line` ideal.
fn line_ideal(doc: &Document, ring: &Ring, line: Option<&str>) -> CliResult<GradedIdeal> {
    match line {
        Some(f) => Ok(GradedIdeal::new(ring, parse_forms(ring, f)?)?),
        None => document_ideal(doc, Some("line")),
    }
}

fn emit_ideal(out: &Output, cmd: &str, i: &GradedIdeal) -> CliResult<()> {
    out.emit(&format!("{cmd}.ideal"), &ideal_document(i).format())
}

fn fmt_opt(x: Option<i64>) -> String {
    x.map_or("-inf".to_string(), |v| v.to_string())
}

fn verdict(reports: &[Report]) -> CliResult<()> {
    let bad: Vec<String> =
        reports.iter().flat_map(|r| r.failures()).map(|it| format!("{}: {}", it.label, it.detail)).collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(CliError::Violation(format!("{} check(s) failed; first: {}", bad.len(), bad[0])))
    }
}

pub fn run(g: &Global, cmd: Command) -> CliResult<()> {
    let out = Output::new(g.out.clone());
    match cmd {
        Command::Ring { vars, n } => {
            let f = field(g)?;
            let ring = match (vars, n) {
                (Some(v), _) => Ring::with_names(f, &split_list(&v))?,
                (None, Some(n)) => Ring::standard(f, n)?,
                (None, None) => return Err(CliError::Usage("give --vars or -n".into())),
            };
            out.emit("ring.txt", &format!("{}\n", format_ring_header(&ring)))
        }
        Command::Ideal { input, gb, minimal } => {
            let i = load_ideal(&input)?;
            let gens = if gb {
                i.gb()?.elements().to_vec()
            } else if minimal {
                i.minimal_gens()?
            } else {
                i.gens().to_vec()
            };
            out.emit("ideal.ideal", &Document::single(i.ring().clone(), gens).format())
        }
        Command::Scroll { spec } => {
            let parts: Vec<usize> = split_list(&spec)
                .into_iter()
                .map(|t| t.parse().map_err(|_| CliError::Usage(format!("bad scroll index `{t}`"))))
                .collect::<CliResult<_>>()?;
            let [a1, a2] = parts[..] else { return Err(CliError::Usage("scroll needs `a1,a2`".into())) };
            emit_ideal(&out, "scroll", &scroll(field(g)?, ScrollSpec::new(a1, a2)?)?)
        }
        Command::Rnc { d } => {
            if d == 0 {
                return Err(CliError::Usage("the degree must be positive".into()));
            }
            let ring = Ring::standard(field(g)?, d + 1)?;
            emit_ideal(&out, "rnc", &rational_normal_curve(&ring)?)
        }
        Command::MaxregCurve { r, d } => {
            let c = maxreg_curve(field(g)?, r, d, g.seed)?;
            out.emit("maxreg-curve.ideal", &curve_document(&c).format())
        }
        Command::Project { input, drop, shear } => {
            let i = load_ideal(&input)?;
            let names = split_list(&drop);
            let center = match shear {
                Some(s) => {
                    let (a, b) =
                        s.split_once(':').ok_or_else(|| CliError::Usage("--shear needs `a:b`".into()))?;
                    Center::sheared(i.ring(), a.trim(), b.trim(), &names)?
                }
                None => Center::named(i.ring(), &names)?,
            };
            emit_ideal(&out, "project", &project(&i, &center)?)
        }
        Command::Subst { input, map } => {
            let i = load_ideal(&input)?;
            let ring = i.ring();
            let mut images: Vec<_> = (0..ring.nvars()).map(|v| ring.var(v)).collect();
            for item in split_list(&map) {
                let (lhs, rhs) = item
                    .split_once('=')
                    .ok_or_else(|| CliError::Usage(format!("`{item}` is not of the form var=form")))?;
                let v = ring
                    .var_index(lhs.trim())
                    .ok_or_else(|| CliError::Usage(format!("unknown variable `{}`", lhs.trim())))?;
                images[v] = parse_poly(ring, rhs, 0)?;
            }
            let lm = LinearMap::from_images(ring, ring, &images)?;
            emit_ideal(&out, "subst", &substitute(&i, &lm)?)
        }
        Command::Section { input, form } => {
            let i = load_ideal(&input)?;
            let f = match form {
                Some(s) => parse_poly(i.ring(), &s, 0)?,
                None => seeded_linear_form(i.ring(), g.seed),
            };
            let c = hyperplane_section(&i, &f)?;
            let mut doc = ideal_document(&c);
            doc.params.push(("form".into(), i.ring().fmt_poly(&f)));
            out.emit("section.ideal", &doc.format())
        }
        Command::UnionLine { input, line } => {
            let (doc, c) = load(&input)?;
            let l = line_ideal(&doc, c.ring(), line.as_deref())?;
            emit_ideal(&out, "union-line", &union_with_line(&c, &l)?)
        }
        Command::Intersect { input, operand: op } => {
            let i = load_ideal(&input)?;
            let j = required(i.ring(), &op)?;
            emit_ideal(&out, "intersect", &ideal_intersect(&i, &j)?)
        }
        Command::Colon { input, operand: op } => {
            let i = load_ideal(&input)?;
            let j = required(i.ring(), &op)?;
            emit_ideal(&out, "colon", &ideal_quotient(&i, &j)?)
        }
        Command::Saturate { input, operand: op } => {
            let i = load_ideal(&input)?;
            let s = match operand(i.ring(), &op)? {
                Some(j) => saturate(&i, &j)?,
                None => saturate_irrelevant(&i)?,
            };
            emit_ideal(&out, "saturate", &s)
        }
        Command::Eliminate { input, vars } => {
            let i = load_ideal(&input)?;
            emit_ideal(&out, "eliminate", &eliminate_names(&i, &split_list(&vars))?)
        }
        Command::Betti { input, kv } => {
            let b = Resolution::of_ideal(&load_ideal(&input)?, None)?.betti();
            out.write("betti.kv", &b.format_kv())?;
            out.write("betti.txt", &b.format_ascii())?;
            print!("{}", if kv { b.format_kv() } else { b.format_ascii() });
            Ok(())
        }
        Command::Hilbert { input, upto } => {
            let hs = HilbertSeries::of_ideal(&load_ideal(&input)?)?;
            let hp = hs.hilbert_polynomial();
            let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
            let mut text = format!(
                "nvars {}\nnumerator {}\ndimension {}\ndegree {}\nhilbert_coefficients {}\n",
                hs.nvars,
                join(&hs.numerator),
                hs.dimension(),
                hs.degree(),
                join(&hp.coeffs)
            );
            for n in 0..=upto {
                text.push_str(&format!("hf {n} {} hp {}\n", hs.hilbert_function(n), hp.eval(n)));
            }
            out.emit("hilbert.txt", &text)
        }
        Command::Cohomology { input, kv } => {
            let p = cohomology_profile(&load_ideal(&input)?, g.window)?;
            out.write("cohomology.kv", &p.format_kv())?;
            out.write("cohomology.txt", &p.format_ascii())?;
            print!("{}", if kv { p.format_kv() } else { p.format_ascii() });
            Ok(())
        }
        Command::Invariants { input } => {
            let i = load_ideal(&input)?;
            let hs = HilbertSeries::of_ideal(&i)?;
            let res = Resolution::of_ideal(&i, None)?;
            let b = res.betti();
            let p = cohomology_profile(&i, g.window)?;
            let (d, r, dim) = (hs.degree(), i.ring().nvars() as i64 - 1, hs.dimension());
            let inv = derived_invariants(&p, d, r, dim)?;
            let text = format!(
                "degree {d}\nr {r}\ndimension {dim}\nreg {}\ndepth {}\npd {}\ndelta {}\ne {}\ne_caveat {}\nsigma {}\nbeg_h1 {}\nend_h1 {}\nlin_deficiency {}\n",
                b.scheme_reg(),
                b.depth(),
                b.pd(),
                fmt_opt(inv.delta),
                inv.e.map_or("none".to_string(), |e| e.to_string()),
                inv.e_caveat,
                inv.sigma,
                fmt_opt(inv.beg_h1),
                fmt_opt(inv.end_h1),
                inv.lin_deficiency
            );
            out.emit("invariants.txt", &text)
        }
        Command::Sreg { input, trials } => {
            let est = sreg_estimate(&load_ideal(&input)?, trials, g.seed)?;
            let mut text = String::new();
            for (f, reg) in &est.trials {
                text.push_str(&format!("trial {f} reg {reg}\n"));
            }
            text.push_str(&format!("bound {}\n", est.bound));
            out.emit("sreg.txt", &text)
        }
        Command::SecantLength { input, line } => {
            let (doc, x) = load(&input)?;
            let l = line_ideal(&doc, x.ring(), line.as_deref())?;
            out.emit("secant-length.txt", &format!("{}\n", secant_length(&x, &l)?))
        }
        Command::Lgp { input, hyperplanes, retries } => lgp(g, &out, input.as_deref(), hyperplanes, retries),
        Command::Thm32Check { input } => {
            let doc = load_document(input.input.as_deref())?;
            let name = input.name.as_deref().or(doc.ideal("curve").map(|_| "curve"));
            let c = document_ideal(&doc, name)?;
            let hs = HilbertSeries::of_ideal(&c)?;
            let r = doc.param("r").and_then(|v| v.parse().ok()).unwrap_or(c.ring().nvars() - 1);
            let d = doc.param("d").and_then(|v| v.parse().ok()).unwrap_or(hs.degree() as usize);
            let b = Resolution::of_ideal(&c, None)?.betti();
            let rep = thm32_check(&b, &thm32_predict(r, d)?)?;
            out.emit("thm32-check.txt", &rep.format_text())?;
            verdict(&[rep])
        }
        Command::Audit { claim, input, section_form, trials } => {
            let i = load_ideal(&input)?;
            let est = sreg_estimate(&i, trials, g.seed)?;
            let reg_c = match section_form {
                Some(f) => {
                    let c = hyperplane_section(&i, &parse_poly(i.ring(), &f, 0)?)?;
                    Resolution::of_ideal(&c, None)?.betti().scheme_reg()
                }
                None => est.trials[0].1,
            };
            let s = SurfaceData::compute(&i, g.window, Some(reg_c), Some(est.bound))?;
            let rep = if claim == "thm510" {
                thm510_audit(&s)
            } else {
                let c = Claim::parse(&claim).ok_or_else(|| {
                    CliError::Usage(format!("unknown claim `{claim}`; use lemma45, cor46, prop43 or thm510"))
                })?;
                descent_audit(&s, &[c])
            };
            out.emit(&format!("audit-{claim}.txt"), &rep.format_text())?;
            verdict(&[rep])
        }
        Command::Classify63 { input, expect } => {
            let i = load_ideal(&input)?;
            let expect = match expect {
                Some(t) => Some(CaseTag::parse(&t).ok_or_else(|| CliError::Usage(format!("unknown case tag `{t}`")))?),
                None => None,
            };
            let hs = HilbertSeries::of_ideal(&i)?;
            let p = cohomology_profile(&i, g.window)?;
            let sig = thm63_classify(&p, hs.degree(), i.ring().nvars() as i64 - 1);
            out.emit("classify63.txt", &format!("case {}\n{}\n", sig.tag, sig.describe()))?;
            match expect {
                Some(t) if t != sig.tag => Err(CliError::Violation(format!("expected case {t}, got {}", sig.tag))),
                _ => Ok(()),
            }
        }
        Command::Reproduce { ids, verbose } => reproduce_cmd(g, &out, &ids, verbose),
    }
}

fn lgp(g: &Global, out: &Output, input: Option<&Path>, hyperplanes: usize, retries: usize) -> CliResult<()> {
    let doc = load_document(input)?;
    let curve = curve_from_document(&doc)?;
    let mut rep = Report::new(format!("linear general position of (C u L) n H (d={}, r={})", curve.d, curve.r));
    for k in 0..hyperplanes {
        let split = split_hyperplane_section_points(&curve, g.seed.wrapping_add(k as u64), retries)?;
        let pts = hyperplane_coordinates(&split.hyperplane, &split.points)?;
        let count = pts.len();
        let distinct = PointSet::new(curve.param.field, curve.r - 1, pts);
        let (ok, detail) = match distinct {
            Ok(ps) => match lgp_test(&ps)? {
                None => (count == curve.d + 1, format!("{count} distinct points, every {} span P^{}", curve.r, curve.r - 1)),
                Some(bad) => (false, format!("points {bad:?} are dependent")),
            },
            Err(e) => (false, e.to_string()),
        };
        let h: Vec<String> = split.hyperplane.iter().map(u32::to_string).collect();
        rep.check(format!("hyperplane {k} [{}]", h.join(" ")), ok, detail);
    }
    out.emit("lgp.txt", &rep.format_text())?;
    verdict(&[rep])
}

fn reproduce_cmd(g: &Global, out: &Output, ids: &str, verbose: bool) -> CliResult<()> {
    let f = field(g)?;
    let mut failed = Vec::new();
    for id in parse_ids(ids)? {
        let rep = reproduce(id, f, g.seed)?;
        for a in &rep.artifacts {
            out.write(&a.path, &a.contents)?;
        }
        let documented = rep.documented_failures();
        let unexpected = rep.unexpected_failures();
        if rep.passed() {
            println!("PASS {id}");
        } else {
            println!("FAIL {id}: {} unexpected, {} documented discrepancies", unexpected.len(), documented.len());
            failed.push(id);
        }
        if verbose {
            print!("{}{}", rep.report.format_text(), rep.engine.format_text());
            for a in &rep.audits {
                print!("{}", a.format_text());
            }
        } else {
            for line in unexpected.iter() {
                println!("  mismatch {line}");
            }
            for line in documented.iter() {
                println!("  documented {line}");
            }
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        let names: Vec<String> = failed.iter().map(|id| id.to_string()).collect();
        Err(CliError::Violation(format!("printed data not reproduced for {}", names.join(", "))))
    }
}
