//! Line-oriented instance files.
//!
//! ```text
//! # optional comments
//! allones 3
//! switches +-+
//! on 010
//! e 0 1
//! e 1 2
//! ```
//!
//! The header comes first. `switches` and `on` appear exactly once each, in
//! any position after the header; `+` is a `σ⁺` switch, `-` a `σ` switch, and
//! bit `i` of `on` is lamp `i`'s initial state. Each `e i j` line is an
//! undirected edge between 0-based vertices. Blank lines are ignored.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::gf2::BitVector;
use crate::lamp::{Instance, SwitchType};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("expected header `allones <n>`")]
    MissingHeader,
    #[error("invalid vertex count `{0}`")]
    BadCount(String),
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
    #[error("duplicate `{0}` line")]
    Repeated(&'static str),
    #[error("missing `{0}` line")]
    Missing(&'static str),
    #[error("`{what}` string has length {found}, expected {expected}")]
    WrongLength { what: &'static str, expected: usize, found: usize },
    #[error("invalid character `{0}`")]
    BadChar(char),
    #[error("malformed edge line")]
    MalformedEdge,
    #[error("invalid vertex index `{0}`")]
    BadIndex(String),
    #[error("vertex {index} out of range for {n} vertices")]
    OutOfRange { index: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

pub fn render(inst: &Instance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "allones {}", inst.n());
    out.push_str("switches ");
    out.extend(inst.switches().iter().map(|s| s.symbol()));
    out.push('\n');
    let _ = writeln!(out, "on {}", inst.initially_on());
    for &(i, j) in inst.edges() {
        let _ = writeln!(out, "e {i} {j}");
    }
    out
}

pub fn parse(text: &str) -> Result<Instance, ParseError> {
    let mut n: Option<usize> = None;
    let mut switches: Option<Vec<SwitchType>> = None;
    let mut on: Option<BitVector> = None;
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let directive = fields.next().unwrap_or_default();

        let Some(count) = n else {
            if directive != "allones" {
                return Err(err(line, ParseErrorKind::MissingHeader));
            }
            let value = fields.next().ok_or(err(line, ParseErrorKind::MissingHeader))?;
            if fields.next().is_some() {
                return Err(err(line, ParseErrorKind::MissingHeader));
            }
            n = Some(value.parse().map_err(|_| err(line, ParseErrorKind::BadCount(value.to_string())))?);
            continue;
        };

        let rest: Vec<&str> = fields.collect();
        match directive {
            "switches" => {
                if switches.is_some() {
                    return Err(err(line, ParseErrorKind::Repeated("switches")));
                }
                let s = single_field(&rest, count, "switches", line)?;
                let parsed = s
                    .chars()
                    .map(|c| SwitchType::from_symbol(c).ok_or(err(line, ParseErrorKind::BadChar(c))))
                    .collect::<Result<Vec<_>, _>>()?;
                switches = Some(parsed);
            }
            "on" => {
                if on.is_some() {
                    return Err(err(line, ParseErrorKind::Repeated("on")));
                }
                let s = single_field(&rest, count, "on", line)?;
                let bits = s
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        other => Err(err(line, ParseErrorKind::BadChar(other))),
                    })
                    .collect::<Result<BitVector, _>>()?;
                on = Some(bits);
            }
            "e" => {
                let [a, b] = rest[..] else {
                    return Err(err(line, ParseErrorKind::MalformedEdge));
                };
                let i = vertex(a, count, line)?;
                let j = vertex(b, count, line)?;
                if i == j {
                    return Err(err(line, ParseErrorKind::SelfLoop(i)));
                }
                if !seen.insert((i.min(j), i.max(j))) {
                    return Err(err(line, ParseErrorKind::DuplicateEdge(i, j)));
                }
                edges.push((i, j));
            }
            other => return Err(err(line, ParseErrorKind::UnknownDirective(other.to_string()))),
        }
    }

    let end = last_line.max(1);
    let n = n.ok_or(err(end, ParseErrorKind::MissingHeader))?;
    let switches = switches.ok_or(err(end, ParseErrorKind::Missing("switches")))?;
    let on = on.ok_or(err(end, ParseErrorKind::Missing("on")))?;
    Ok(Instance::new(n, edges, switches, on).expect("parser validated every instance invariant"))
}

// An empty string for n = 0 leaves the directive without an argument.
fn single_field<'a>(rest: &[&'a str], n: usize, what: &'static str, line: usize) -> Result<&'a str, ParseError> {
    match rest {
        [] if n == 0 => Ok(""),
        [s] => {
            let len = s.chars().count();
            if len != n {
                return Err(err(line, ParseErrorKind::WrongLength { what, expected: n, found: len }));
            }
            Ok(s)
        }
        _ => Err(err(line, ParseErrorKind::WrongLength { what, expected: n, found: rest.iter().map(|s| s.len()).sum() })),
    }
}

fn vertex(field: &str, n: usize, line: usize) -> Result<usize, ParseError> {
    let index: usize = field.parse().map_err(|_| err(line, ParseErrorKind::BadIndex(field.to_string())))?;
    if index >= n {
        return Err(err(line, ParseErrorKind::OutOfRange { index, n }));
    }
    Ok(index)
}
