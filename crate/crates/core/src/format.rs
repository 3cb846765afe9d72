//! Line-oriented text format for maps and point lists.
//!
//! ```text
//! kind: multipolynomial
//! m: 2
//! degrees: 2 2
//! dim: 2
//! codim: 1
//! terms:
//! 1 1 | 1 1 => 1
//! ```
//!
//! Multilinear maps use `kind: multilinear`, `degrees` all ones, and keys
//! made of 1-based coordinate indices (`1 2 => 1/2`). Multipolynomial keys
//! are exponent matrices with rows separated by `|`. Values are `codim`
//! rationals written `p` or `p/q` in lowest terms. Terms appear in
//! lexicographic key order and zero terms are omitted, so writing a parsed
//! document reproduces canonical input byte for byte.
//!
//! Blank lines and lines starting with `#` are ignored when parsing.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::combinatorics::{MultiIndex, MultiIndexMatrix};
use crate::error::{Error, Result};
use crate::multilinear::MultilinearMap;
use crate::multipoly::{DegreeSignature, Multipolynomial};
use crate::scalar::{parse_scalar, Vector};

/// A parsed file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Multilinear(MultilinearMap),
    Multipolynomial(Multipolynomial),
}

impl Document {
    pub fn parse(text: &str) -> Result<Document> {
        Parser::new(text).document()
    }

    pub fn to_text(&self) -> String {
        match self {
            Document::Multilinear(a) => write_multilinear(a),
            Document::Multipolynomial(p) => write_multipolynomial(p),
        }
    }
}

fn header(out: &mut String, kind: &str, degrees: &str, m: usize, dim: usize, codim: usize) {
    writeln!(out, "kind: {kind}").unwrap();
    writeln!(out, "m: {m}").unwrap();
    writeln!(out, "degrees: {degrees}").unwrap();
    writeln!(out, "dim: {dim}").unwrap();
    writeln!(out, "codim: {codim}").unwrap();
    out.push_str("terms:\n");
}

pub fn write_multilinear(map: &MultilinearMap) -> String {
    let mut out = String::new();
    let degrees = vec!["1"; map.arity()].join(" ");
    header(&mut out, "multilinear", &degrees, map.arity(), map.dim(), map.codim());
    for (key, value) in map.coeffs() {
        let key: Vec<String> = key.iter().map(|j| (j + 1).to_string()).collect();
        writeln!(out, "{} => {value}", key.join(" ")).unwrap();
    }
    out
}

pub fn write_multipolynomial(poly: &Multipolynomial) -> String {
    let mut out = String::new();
    let sig = poly.signature();
    header(
        &mut out,
        "multipolynomial",
        &sig.to_string(),
        sig.slots(),
        poly.dim(),
        poly.codim(),
    );
    for (alpha, value) in poly.terms() {
        writeln!(out, "{alpha} => {value}").unwrap();
    }
    out
}

/// One point per line, coordinates separated by whitespace.
pub fn write_points(points: &[Vector]) -> String {
    points.iter().map(|p| format!("{p}\n")).collect()
}

/// Parses a point list written by [`write_points`].
pub fn parse_points(text: &str) -> Result<Vec<Vector>> {
    let mut out = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut values = Vec::new();
        for (column, token) in tokens(line) {
            values.push(parse_scalar(token).map_err(|_| Error::Parse {
                line: line_no + 1,
                column,
                message: format!("invalid rational `{token}`"),
            })?);
        }
        out.push(Vector(values));
    }
    Ok(out)
}

/// Whitespace separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

struct Parser<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| {
                let t = l.trim();
                !t.is_empty() && !t.starts_with('#')
            })
            .map(|(n, l)| (n + 1, l))
            .collect();
        Parser { lines, pos: 0 }
    }

    fn error(&self, line: usize, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn last_line(&self) -> usize {
        self.lines.last().map_or(1, |(n, _)| *n)
    }

    /// Reads `name: value` and returns the value with its column.
    fn field(&mut self, name: &str) -> Result<(usize, usize, &'a str)> {
        let Some(&(line_no, line)) = self.lines.get(self.pos) else {
            return Err(self.error(self.last_line(), 1, format!("missing field `{name}`")));
        };
        let Some((key, value)) = line.split_once(':') else {
            return Err(self.error(line_no, 1, format!("expected `{name}:`")));
        };
        if key.trim() != name {
            return Err(self.error(line_no, 1, format!("expected field `{name}`, found `{}`", key.trim())));
        }
        self.pos += 1;
        let column = key.len() + 2 + (value.len() - value.trim_start().len());
        Ok((line_no, column, value.trim()))
    }

    fn number(&mut self, name: &str) -> Result<usize> {
        let (line, column, value) = self.field(name)?;
        match value.parse::<usize>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(self.error(line, column, format!("`{name}` must be a positive integer, found `{value}`"))),
        }
    }

    fn document(&mut self) -> Result<Document> {
        let (kind_line, kind_col, kind) = self.field("kind")?;
        if kind != "multilinear" && kind != "multipolynomial" {
            return Err(self.error(kind_line, kind_col, format!("unknown kind `{kind}`")));
        }
        let m = self.number("m")?;
        let (deg_line, deg_col, degrees_text) = self.field("degrees")?;
        let mut degrees = Vec::new();
        for (offset, token) in tokens(degrees_text) {
            match token.parse::<usize>() {
                Ok(n) if n > 0 => degrees.push(n),
                _ => {
                    return Err(self.error(deg_line, deg_col + offset - 1, format!("invalid degree `{token}`")))
                }
            }
        }
        if degrees.len() != m {
            return Err(self.error(
                deg_line,
                deg_col,
                format!("expected {m} degrees, found {}", degrees.len()),
            ));
        }
        if kind == "multilinear" && degrees.iter().any(|&n| n != 1) {
            return Err(self.error(deg_line, deg_col, "multilinear maps have all degrees 1"));
        }
        let dim = self.number("dim")?;
        let codim = self.number("codim")?;
        let (terms_line, terms_col, rest) = self.field("terms")?;
        if !rest.is_empty() {
            return Err(self.error(terms_line, terms_col, "unexpected text after `terms:`"));
        }

        let mut linear = MultilinearMap::zero(m, dim, codim);
        let mut poly = Multipolynomial::zero(DegreeSignature::new(degrees)?, dim, codim);
        let mut seen: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        while let Some(&(line_no, line)) = self.lines.get(self.pos) {
            self.pos += 1;
            let Some(arrow) = line.find("=>") else {
                return Err(self.error(line_no, 1, "expected `key => value`"));
            };
            let value_col = arrow + 1;
            let mut values = Vec::new();
            for (offset, token) in tokens(&line[arrow + 2..]) {
                values.push(parse_scalar(token).map_err(|_| {
                    self.error(line_no, arrow + 2 + offset, format!("invalid rational `{token}`"))
                })?);
            }
            if values.len() != codim {
                return Err(self.error(
                    line_no,
                    value_col,
                    format!("expected {codim} values, found {}", values.len()),
                ));
            }
            let value = Vector(values);
            let key_text = &line[..arrow];
            let flat = if kind == "multilinear" {
                let key = self.multilinear_key(key_text, line_no, m, dim)?;
                let flat = key.clone();
                linear.set(key, value).map_err(|e| self.error(line_no, 1, e.to_string()))?;
                flat
            } else {
                let alpha = self.matrix_key(key_text, line_no, m, dim)?;
                let flat = alpha.entries().to_vec();
                poly.set(alpha, value).map_err(|e| self.error(line_no, 1, e.to_string()))?;
                flat
            };
            if let Some(first) = seen.insert(flat, line_no) {
                return Err(self.error(line_no, 1, format!("duplicate key (first on line {first})")));
            }
        }
        Ok(if kind == "multilinear" {
            Document::Multilinear(linear)
        } else {
            Document::Multipolynomial(poly)
        })
    }

    fn multilinear_key(&self, text: &str, line: usize, m: usize, dim: usize) -> Result<Vec<usize>> {
        let mut key = Vec::new();
        for (column, token) in tokens(text) {
            match token.parse::<usize>() {
                Ok(j) if (1..=dim).contains(&j) => key.push(j - 1),
                _ => return Err(self.error(line, column, format!("index `{token}` outside 1..{dim}"))),
            }
        }
        if key.len() != m {
            return Err(self.error(line, 1, format!("expected {m} indices, found {}", key.len())));
        }
        Ok(key)
    }

    fn matrix_key(&self, text: &str, line: usize, m: usize, dim: usize) -> Result<MultiIndexMatrix> {
        let mut rows = Vec::new();
        let mut offset = 0;
        for row_text in text.split('|') {
            let mut row = Vec::new();
            for (column, token) in tokens(row_text) {
                let col = offset + column;
                row.push(
                    token
                        .parse::<usize>()
                        .map_err(|_| self.error(line, col, format!("invalid exponent `{token}`")))?,
                );
            }
            if row.len() != dim {
                return Err(self.error(line, offset + 1, format!("expected {dim} exponents, found {}", row.len())));
            }
            rows.push(MultiIndex(row));
            offset += row_text.len() + 1;
        }
        if rows.len() != m {
            return Err(self.error(line, 1, format!("expected {m} rows, found {}", rows.len())));
        }
        MultiIndexMatrix::from_rows(&rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    const EXAMPLE: &str = "kind: multipolynomial\nm: 2\ndegrees: 2 2\ndim: 2\ncodim: 1\nterms:\n1 1 | 1 1 => 1\n";

    #[test]
    fn multipolynomial_round_trip() {
        let doc = Document::parse(EXAMPLE).unwrap();
        assert_eq!(doc.to_text(), EXAMPLE);
    }

    #[test]
    fn multilinear_round_trip() {
        let text = "kind: multilinear\nm: 2\ndegrees: 1 1\ndim: 2\ncodim: 2\nterms:\n1 2 => 1/2 0\n2 1 => 1/2 -3\n";
        let doc = Document::parse(text).unwrap();
        let Document::Multilinear(a) = &doc else { panic!("wrong kind") };
        assert_eq!(a.coeff(&[0, 1]), Vector(vec![ratio(1, 2), ratio(0, 1)]));
        assert_eq!(doc.to_text(), text);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = format!("# the example\n\n{EXAMPLE}\n");
        assert_eq!(Document::parse(&text).unwrap().to_text(), EXAMPLE);
    }

    #[test]
    fn reports_positions() {
        let bad = EXAMPLE.replace("=> 1", "=> 1/0");
        match Document::parse(&bad) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (7, 14)),
            other => panic!("unexpected {other:?}"),
        }
        let bad = EXAMPLE.replace("1 1 | 1 1", "1 1 | 2 1");
        assert!(matches!(Document::parse(&bad), Err(Error::Parse { line: 7, .. })));
        let bad = EXAMPLE.replace("kind: multipolynomial", "kind: tensor");
        assert!(matches!(Document::parse(&bad), Err(Error::Parse { line: 1, column: 7, .. })));
        let bad = EXAMPLE.replace("dim: 2", "dim: x");
        assert!(matches!(Document::parse(&bad), Err(Error::Parse { line: 4, .. })));
        let dup = format!("{EXAMPLE}1 1 | 1 1 => 2\n");
        assert!(matches!(Document::parse(&dup), Err(Error::Parse { line: 8, .. })));
        assert!(matches!(Document::parse(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn points() {
        let pts = parse_points("1 0\n# c\n-1/2 3\n").unwrap();
        assert_eq!(pts, vec![Vector::from_ints(&[1, 0]), Vector(vec![ratio(-1, 2), ratio(3, 1)])]);
        assert_eq!(write_points(&pts), "1 0\n-1/2 3\n");
        assert!(matches!(parse_points("1 q"), Err(Error::Parse { line: 1, column: 3, .. })));
    }
}
