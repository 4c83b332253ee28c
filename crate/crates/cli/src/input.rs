//! Matrix and graph file formats.
//!
//! A matrix file is either plain text, a `d n` header followed by `d` rows of
//! `n` integers, or a JSON document `{"rows": [[...], ...]}`. Lines whose
//! first non-blank character is `#` are comments, and `#` also ends a line
//! early. A graph file has one `u v` edge per line.

use std::fmt;
use std::path::Path;

use hypertoric::{Graph, IntMatrix};
use num_bigint::BigInt;
use serde::de::{Deserializer, Error as _};
use serde::Deserialize;
use serde_json::Value;

use crate::error::CliError;
use crate::report::{int_value, matrix_value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixFormat {
    Text,
    Json,
}

impl fmt::Display for MatrixFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatrixFormat::Text => "text",
            MatrixFormat::Json => "json",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFile {
    pub source: String,
    pub format: MatrixFormat,
    pub matrix: IntMatrix,
}

impl MatrixFile {
    pub fn read(path: &str) -> Result<Self, CliError> {
        let text = read_source(path)?;
        parse_matrix(path, &text)
    }

    pub fn echo(&self) -> Value {
        serde_json::json!({
            "path": self.source,
            "format": self.format.to_string(),
            "rows": self.matrix.rows(),
            "cols": self.matrix.cols(),
            "matrix": matrix_value(&self.matrix),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub source: String,
    pub graph: Graph,
}

impl GraphFile {
    pub fn read(path: &str) -> Result<Self, CliError> {
        let text = read_source(path)?;
        parse_graph(path, &text)
    }

    pub fn echo(&self) -> Value {
        let edges: Vec<Value> = self
            .graph
            .edges()
            .iter()
            .map(|&(u, v)| serde_json::json!([u, v]))
            .collect();
        serde_json::json!({
            "path": self.source,
            "vertices": self.graph.vertex_count(),
            "edges": edges,
        })
    }
}

/// Reads a file, or standard input for `-`.
pub fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|e| CliError::Io {
            path: path.to_owned(),
            message: e.to_string(),
        })?;
        return Ok(s);
    }
    std::fs::read_to_string(Path::new(path)).map_err(|e| CliError::Io {
        path: path.to_owned(),
        message: e.to_string(),
    })
}

/// Non-comment lines with their 1-based line numbers, comments cut off.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = match line.find('#') {
            Some(k) => &line[..k],
            None => line,
        };
        (!body.trim().is_empty()).then_some((i + 1, body))
    })
}

/// Whitespace-separated tokens with their 1-based character columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (byte, ch)) in line.char_indices().enumerate() {
        if ch.is_whitespace() {
            if let Some((c, b)) = start.take() {
                out.push((c, &line[b..byte]));
            }
        } else if start.is_none() {
            start = Some((col + 1, byte));
        }
    }
    if let Some((c, b)) = start {
        out.push((c, &line[b..]));
    }
    out
}

fn is_integer_literal(s: &str) -> bool {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

fn looks_like_float(s: &str) -> bool {
    let body = s.strip_prefix(['-', '+']).unwrap_or(s);
    body.bytes().any(|b| b.is_ascii_digit())
        && body
            .bytes()
            .all(|b| b.is_ascii_digit() || matches!(b, b'.' | b'e' | b'E' | b'-' | b'+'))
}

fn parse_int(source: &str, line: usize, col: usize, tok: &str) -> Result<BigInt, CliError> {
    if is_integer_literal(tok) {
        let digits = tok.strip_prefix('+').unwrap_or(tok);
        return Ok(digits.parse().expect("validated integer literal"));
    }
    let message = if looks_like_float(tok) {
        format!("expected an integer, found the non-integer number '{tok}'")
    } else {
        format!("expected an integer, found '{tok}'")
    };
    Err(CliError::parse(source, Some((line, col)), message))
}

fn parse_count(source: &str, line: usize, col: usize, tok: &str, what: &str) -> Result<usize, CliError> {
    let v = parse_int(source, line, col, tok)?;
    usize::try_from(&v)
        .map_err(|_| CliError::parse(source, Some((line, col)), format!("{what} must be a non-negative size, found {v}")))
}

pub fn parse_matrix(source: &str, text: &str) -> Result<MatrixFile, CliError> {
    let (format, matrix) = if text.trim_start().starts_with('{') {
        (MatrixFormat::Json, parse_matrix_json(source, text)?)
    } else {
        (MatrixFormat::Text, parse_matrix_text(source, text)?)
    };
    Ok(MatrixFile {
        source: source.to_owned(),
        format,
        matrix,
    })
}

fn parse_matrix_text(source: &str, text: &str) -> Result<IntMatrix, CliError> {
    let mut lines = content_lines(text);
    let Some((hline, header)) = lines.next() else {
        return Err(CliError::parse(source, None, "empty input, expected a 'd n' header".into()));
    };
    let htoks = tokens(header);
    if htoks.len() != 2 {
        let col = htoks.get(2).map_or(1, |t| t.0);
        return Err(CliError::parse(
            source,
            Some((hline, col)),
            format!("header must be 'd n', found {} fields", htoks.len()),
        ));
    }
    let d = parse_count(source, hline, htoks[0].0, htoks[0].1, "row count")?;
    let n = parse_count(source, hline, htoks[1].0, htoks[1].1, "column count")?;
    let mut data = Vec::with_capacity(d.saturating_mul(n));
    let mut last_line = hline;
    // rows of a matrix without columns are blank, and blank lines are skipped
    let listed = if n == 0 { 0 } else { d };
    for r in 0..listed {
        let Some((lno, body)) = lines.next() else {
            return Err(CliError::parse(
                source,
                Some((last_line, 1)),
                format!("expected {d} rows after the header, found {r}"),
            ));
        };
        last_line = lno;
        let toks = tokens(body);
        if toks.len() != n {
            let col = if toks.len() > n { toks[n].0 } else { body.chars().count() + 1 };
            return Err(CliError::parse(
                source,
                Some((lno, col)),
                format!("row {} has {} entries, expected {n}", r + 1, toks.len()),
            ));
        }
        for (col, tok) in toks {
            data.push(parse_int(source, lno, col, tok)?);
        }
    }
    if let Some((lno, body)) = lines.next() {
        let col = tokens(body).first().map_or(1, |t| t.0);
        return Err(CliError::parse(
            source,
            Some((lno, col)),
            format!("unexpected content after {d} rows"),
        ));
    }
    Ok(IntMatrix::new(d, n, data).expect("row lengths were checked"))
}

struct JsonInt(BigInt);

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(deserializer)?;
        let s = n.to_string();
        if is_integer_literal(&s) {
            Ok(JsonInt(s.parse().map_err(D::Error::custom)?))
        } else {
            Err(D::Error::custom(format!(
                "expected an integer, found the non-integer number {s}"
            )))
        }
    }
}

#[derive(Deserialize)]
struct MatrixDoc {
    rows: Vec<Vec<JsonInt>>,
    #[serde(default)]
    cols: Option<usize>,
}

fn parse_matrix_json(source: &str, text: &str) -> Result<IntMatrix, CliError> {
    let doc: MatrixDoc = serde_json::from_str(text).map_err(|e| {
        let at = (e.line() > 0).then(|| (e.line(), e.column()));
        let msg = e.to_string();
        let msg = match msg.rfind(" at line ") {
            Some(k) => msg[..k].to_owned(),
            None => msg,
        };
        CliError::parse(source, at, msg)
    })?;
    let n = match (doc.rows.first(), doc.cols) {
        (Some(r), Some(c)) if r.len() != c => {
            return Err(CliError::parse(
                source,
                None,
                format!("\"cols\" is {c} but row 1 has {} entries", r.len()),
            ))
        }
        (Some(r), _) => r.len(),
        (None, Some(c)) => c,
        (None, None) => {
            return Err(CliError::parse(
                source,
                None,
                "\"rows\" is empty; give \"cols\" to fix the column count".into(),
            ))
        }
    };
    let d = doc.rows.len();
    let mut data = Vec::with_capacity(d * n);
    for (i, row) in doc.rows.into_iter().enumerate() {
        if row.len() != n {
            return Err(CliError::parse(
                source,
                None,
                format!("row {} has {} entries, expected {n}", i + 1, row.len()),
            ));
        }
        data.extend(row.into_iter().map(|x| x.0));
    }
    Ok(IntMatrix::new(d, n, data).expect("row lengths were checked"))
}

/// Text form of a matrix, readable by [`parse_matrix`].
pub fn format_matrix(m: &IntMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    let width = m
        .entries()
        .iter()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    for i in 0..m.rows() {
        if m.cols() == 0 {
            break;
        }
        let row: Vec<String> = m.row(i).iter().map(|x| format!("{x:>width$}")).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_graph(source: &str, text: &str) -> Result<GraphFile, CliError> {
    let mut edges = Vec::new();
    let mut vertex_count = 0usize;
    for (lno, body) in content_lines(text) {
        let toks = tokens(body);
        if toks.len() != 2 {
            let col = toks.get(2).map_or(1, |t| t.0);
            return Err(CliError::parse(
                source,
                Some((lno, col)),
                format!("an edge line must be 'u v', found {} fields", toks.len()),
            ));
        }
        let u = parse_count(source, lno, toks[0].0, toks[0].1, "vertex label")?;
        let v = parse_count(source, lno, toks[1].0, toks[1].1, "vertex label")?;
        if u == v {
            return Err(CliError::parse(
                source,
                Some((lno, toks[0].0)),
                format!("self-loop at vertex {u}"),
            ));
        }
        vertex_count = vertex_count.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    let graph = Graph::new(vertex_count, edges).map_err(|e| CliError::parse(source, None, e.to_string()))?;
    Ok(GraphFile {
        source: source.to_owned(),
        graph,
    })
}

/// JSON value of an integer vector.
pub fn vector_value(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_value).collect())
}
