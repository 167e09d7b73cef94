//! Reading ideal documents and writing command output.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use syzlab::constructions::{MaxRegCurve, Parametrization};
use syzlab::ring::text::{parse_poly, Document};
use syzlab::ring::{GradedIdeal, Poly, Ring};

use crate::error::{CliError, CliResult};

/// Reads a file, or standard input for `None` and `-`.
pub fn read_source(path: Option<&Path>) -> CliResult<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|source| CliError::Read { path: p.to_path_buf(), source })
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|source| CliError::Read { path: PathBuf::from("<stdin>"), source })?;
            Ok(s)
        }
    }
}

pub fn load_document(path: Option<&Path>) -> CliResult<Document> {
    Ok(Document::parse(&read_source(path)?)?)
}

/// The ideal called `name`, or the first ideal of the document.
pub fn document_ideal(doc: &Document, name: Option<&str>) -> CliResult<GradedIdeal> {
    let gens = match name {
        Some(n) => doc.ideal(n).ok_or_else(|| CliError::Usage(format!("the input has no ideal named `{n}`")))?,
        None => doc.primary().unwrap_or(&[]),
    };
    Ok(GradedIdeal::new(&doc.ring, gens.to_vec())?)
}

pub fn ideal_document(i: &GradedIdeal) -> Document {
    Document::single(i.ring().clone(), i.gens().to_vec())
}

/// Comma-separated items with surrounding whitespace removed.
pub fn split_list(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).collect()
}

pub fn parse_forms(ring: &Ring, s: &str) -> CliResult<Vec<Poly>> {
    split_list(s).into_iter().map(|f| Ok(parse_poly(ring, f, 0)?)).collect()
}

/// Collects the text of one command: printed to standard output and, with an
/// output directory, written there as well.
pub struct Output {
    dir: Option<PathBuf>,
}

impl Output {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Output { dir }
    }

    pub fn emit(&self, file: &str, contents: &str) -> CliResult<()> {
        print!("{contents}");
        self.write(file, contents)
    }

    /// Writes `contents` under the output directory only.
    pub fn write(&self, file: &str, contents: &str) -> CliResult<()> {
        let Some(dir) = &self.dir else { return Ok(()) };
        let path = dir.join(file);
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent).map_err(|source| CliError::Write { path: parent.to_path_buf(), source })?;
        }
        fs::write(&path, contents).map_err(|source| CliError::Write { path, source })
    }
}

fn join_u32(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

/// A curve together with its secant line and parametrization.
pub fn curve_document(c: &MaxRegCurve) -> Document {
    let mut doc = Document::new(c.ideal.ring().clone());
    doc.params.push(("r".into(), c.r.to_string()));
    doc.params.push(("d".into(), c.d.to_string()));
    doc.params.push(("seed".into(), c.seed.to_string()));
    for (k, row) in c.param.forms.iter().enumerate() {
        doc.params.push((format!("param.{k}"), join_u32(row)));
    }
    for (k, v) in c.line_span.iter().enumerate() {
        doc.params.push((format!("line_span.{k}"), join_u32(v)));
    }
    doc.ideals.push(("curve".into(), c.ideal.gens().to_vec()));
    doc.ideals.push(("line".into(), c.line.gens().to_vec()));
    doc
}

fn param<T: std::str::FromStr>(doc: &Document, key: &str) -> CliResult<T> {
    doc.param(key)
        .ok_or_else(|| CliError::Usage(format!("the input lacks `@param {key}`; produce it with maxreg-curve")))?
        .parse()
        .map_err(|_| CliError::Usage(format!("bad value for `@param {key}`")))
}

fn param_vec(doc: &Document, key: &str) -> CliResult<Vec<u32>> {
    let raw: String = param(doc, key)?;
    raw.split_whitespace()
        .map(|t| t.parse().map_err(|_| CliError::Usage(format!("bad entry `{t}` in `@param {key}`"))))
        .collect()
}

pub fn curve_from_document(doc: &Document) -> CliResult<MaxRegCurve> {
    let r: usize = param(doc, "r")?;
    let d: usize = param(doc, "d")?;
    let forms = (0..=r).map(|k| param_vec(doc, &format!("param.{k}"))).collect::<CliResult<Vec<_>>>()?;
    if forms.iter().any(|f| f.len() != d + 1) {
        return Err(CliError::Usage(format!("each `@param param.k` needs {} coefficients", d + 1)));
    }
    let line_span = [param_vec(doc, "line_span.0")?, param_vec(doc, "line_span.1")?];
    Ok(MaxRegCurve {
        r,
        d,
        ideal: document_ideal(doc, Some("curve"))?,
        line: document_ideal(doc, Some("line"))?,
        param: Parametrization { field: doc.ring.field(), degree: d, forms },
        line_span,
        seed: param(doc, "seed")?,
    })
}
