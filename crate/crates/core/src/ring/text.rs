//! The plain-text ring and ideal format.
//!
//! ```text
//! ring p 32003 vars x0,x1,x2,x3 order degrevlex
//! # twisted cubic
//! x0*x2 - x1^2
//! x0*x3 - x1*x2
//! x1*x3 - x2^2
//! ```
//!
//! A document may hold several named ideals introduced by `@ideal <name>`
//! lines, plus free-form `@param <key> <value>` lines. Polynomials before the
//! first `@ideal` belong to the ideal named `main`.

use super::field::PrimeField;
use super::monomial::{Monomial, MAX_EXPONENT};
use super::order::MonomialOrder;
use super::poly::{Poly, Ring};
use crate::error::{Error, Result};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Parses `ring p <prime> vars a,b,c order degrevlex`.
pub fn parse_ring_header(s: &str, line: usize) -> Result<Ring> {
    let toks: Vec<&str> = s.split_whitespace().collect();
    if toks.len() != 7 || toks[0] != "ring" || toks[1] != "p" || toks[3] != "vars" || toks[5] != "order" {
        return Err(perr(line, "expected `ring p <prime> vars <names> order degrevlex`"));
    }
    let p: u32 = toks[2].parse().map_err(|_| perr(line, format!("bad prime `{}`", toks[2])))?;
    let field = PrimeField::new(p).map_err(|e| perr(line, e.to_string()))?;
    if toks[6] != "degrevlex" {
        return Err(perr(line, format!("unsupported order `{}`", toks[6])));
    }
    let names: Vec<String> = toks[4].split(',').map(|s| s.trim().to_string()).collect();
    for n in &names {
        let ok = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(perr(line, format!("bad variable name `{n}`")));
        }
    }
    Ring::new(field, names, MonomialOrder::Degrevlex).map_err(|e| perr(line, e.to_string()))
}

pub fn format_ring_header(ring: &Ring) -> String {
    format!("ring p {} vars {} order degrevlex", ring.field().modulus(), ring.names().join(","))
}

/// Parses one polynomial such as `3*x0^2*x3 - x1 + 7`.
pub fn parse_poly(ring: &Ring, s: &str, line: usize) -> Result<Poly> {
    let fld = ring.field();
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(perr(line, "empty polynomial"));
    }
    let mut terms = Vec::new();
    let bytes = compact.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1i64;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
        } else if i != 0 {
            return Err(perr(line, "expected `+` or `-` between terms"));
        }
        let start = i;
        while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            i += 1;
        }
        let term = &compact[start..i];
        if term.is_empty() {
            return Err(perr(line, "missing term"));
        }
        let mut coef = fld.from_i64(sign);
        let mut exps = vec![0u32; ring.nvars()];
        for factor in term.split('*') {
            if factor.is_empty() {
                return Err(perr(line, format!("empty factor in `{term}`")));
            }
            if factor.as_bytes()[0].is_ascii_digit() {
                let v: u64 = factor.parse().map_err(|_| perr(line, format!("bad coefficient `{factor}`")))?;
                coef = fld.mul(coef, (v % fld.modulus() as u64) as u32);
                continue;
            }
            let (name, e) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: u32 = e.parse().map_err(|_| perr(line, format!("bad exponent in `{factor}`")))?;
                    (n, e)
                }
                None => (factor, 1),
            };
            let v = ring.var_index(name).ok_or_else(|| perr(line, format!("unknown variable `{name}`")))?;
            exps[v] += e;
            if exps[v] > MAX_EXPONENT {
                return Err(perr(line, format!("exponent above {MAX_EXPONENT}")));
            }
        }
        terms.push((Monomial::from_exponents(&exps).map_err(|e| perr(line, e.to_string()))?, coef));
    }
    Ok(ring.from_terms(terms))
}

pub fn format_poly(ring: &Ring, f: &Poly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let fld = ring.field();
    let mut out = String::new();
    for (k, t) in f.terms().iter().enumerate() {
        let c = fld.to_signed(t.coef);
        let (neg, a) = (c < 0, c.unsigned_abs());
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mon = t.mon.fmt_with(ring.names());
        if t.mon.is_one() {
            out.push_str(&a.to_string());
        } else if a == 1 {
            out.push_str(&mon);
        } else {
            out.push_str(&format!("{a}*{mon}"));
        }
    }
    out
}

/// A parsed document: one ring, named ideals (as generator lists) and parameters.
#[derive(Clone, Debug)]
pub struct Document {
    pub ring: Ring,
    pub ideals: Vec<(String, Vec<Poly>)>,
    pub params: Vec<(String, String)>,
}

impl Document {
    pub fn new(ring: Ring) -> Self {
        Document { ring, ideals: Vec::new(), params: Vec::new() }
    }

    pub fn single(ring: Ring, gens: Vec<Poly>) -> Self {
        Document { ring, ideals: vec![("main".into(), gens)], params: Vec::new() }
    }

    pub fn ideal(&self, name: &str) -> Option<&[Poly]> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, g)| g.as_slice())
    }

    /// The first ideal of the document.
    pub fn primary(&self) -> Option<&[Poly]> {
        self.ideals.first().map(|(_, g)| g.as_slice())
    }

    pub fn param(&self, key: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn parse(src: &str) -> Result<Self> {
        let mut doc: Option<Document> = None;
        let mut current: Option<usize> = None;
        for (idx, raw) in src.lines().enumerate() {
            let line = idx + 1;
            let text = raw.split('#').next().unwrap_or("").trim();
            if text.is_empty() {
                continue;
            }
            let Some(d) = doc.as_mut() else {
                doc = Some(Document::new(parse_ring_header(text, line)?));
                continue;
            };
            if let Some(rest) = text.strip_prefix("@ideal") {
                let name = rest.trim();
                if name.is_empty() {
                    return Err(perr(line, "`@ideal` needs a name"));
                }
                d.ideals.push((name.to_string(), Vec::new()));
                current = Some(d.ideals.len() - 1);
            } else if let Some(rest) = text.strip_prefix("@param") {
                let rest = rest.trim();
                let (k, v) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                d.params.push((k.to_string(), v.trim().to_string()));
            } else {
                let f = parse_poly(&d.ring, text, line)?;
                let slot = match current {
                    Some(s) => s,
                    None => {
                        d.ideals.push(("main".into(), Vec::new()));
                        let s = d.ideals.len() - 1;
                        current = Some(s);
                        s
                    }
                };
                if !f.is_zero() {
                    d.ideals[slot].1.push(f);
                }
            }
        }
        let mut d = doc.ok_or_else(|| perr(0, "missing ring header"))?;
        if d.ideals.is_empty() {
            d.ideals.push(("main".into(), Vec::new()));
        }
        Ok(d)
    }

    pub fn format(&self) -> String {
        let mut out = format_ring_header(&self.ring);
        out.push('\n');
        for (k, v) in &self.params {
            out.push_str(&format!("@param {k} {v}\n"));
        }
        let bare = self.ideals.len() == 1 && self.ideals[0].0 == "main";
        for (name, gens) in &self.ideals {
            if !bare {
                out.push_str(&format!("@ideal {name}\n"));
            }
            for g in gens {
                out.push_str(&format_poly(&self.ring, g));
                out.push('\n');
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let src = "ring p 32003 vars x0,x1,x2,x3 order degrevlex\n# cubic\n\nx0*x2 - x1^2\n3*x0*x3 + 32002*x1*x2\nx1*x3-x2^2 + 0*x0^2\n";
        let d = Document::parse(src).unwrap();
        assert_eq!(d.ideals[0].1.len(), 3);
        let again = Document::parse(&d.format()).unwrap();
        assert_eq!(again.ideals, d.ideals);
        assert_eq!(format_poly(&d.ring, &d.ideals[0].1[1]), "-x1*x2 + 3*x0*x3");
    }

    #[test]
    fn sections_and_errors() {
        let src = "ring p 101 vars a,b order degrevlex\n@param seed 7\n@ideal curve\na^2\n@ideal line\nb\n";
        let d = Document::parse(src).unwrap();
        assert_eq!(d.ideal("line").unwrap().len(), 1);
        assert_eq!(d.param("seed"), Some("7"));
        assert!(Document::parse(&d.format()).is_ok());
        assert!(matches!(Document::parse("ring p 100 vars a order degrevlex"), Err(Error::Parse { .. })));
        assert!(matches!(Document::parse("ring p 101 vars a order degrevlex\na+c"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Document::parse("ring p 101 vars a order degrevlex\na b"), Err(Error::Parse { .. })));
    }
}
