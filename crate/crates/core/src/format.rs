//! Plain-text problem files.
//!
//! ```text
//! # comment
//! vertices:
//! 0 0
//! 1 2
//! 2 0
//! nodes:
//! 1/2 1/4
//! 1 1
//! 3/2 1/4
//! boundary: left
//! ```
//!
//! Each coordinate is an integer or `p/q` with `q > 0` written in decimal
//! digits, optionally preceded by `-`. Blank lines and text after `#` are
//! ignored. `vertices:` must come before `nodes:`; `boundary:` is optional
//! and takes `none`, `left`, `right` or `both`.

use std::fmt::{self, Write as _};

use num::{BigInt, Zero};
use thiserror::Error;

use crate::geometry::{Point, Rational};
use crate::problem::{Boundary, Problem, ProblemError};
use crate::strip::{Strip, StripError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing section '{0}'")]
    MissingSection(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("invalid strip: {0}")]
    Strip(#[from] StripError),
    #[error(transparent)]
    Problem(#[from] ProblemError),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ProblemFile {
    pub vertices: Vec<Point>,
    pub nodes: Vec<Point>,
    pub boundary: Boundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BadRational;

impl fmt::Display for BadRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected an integer or p/q with q > 0")
    }
}

fn digits(s: &str) -> Result<BigInt, BadRational> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(BadRational);
    }
    s.parse().map_err(|_| BadRational)
}

/// Parse `-?digits(/digits)?` with a nonzero denominator.
pub fn parse_rational(s: &str) -> Result<Rational, BadRational> {
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (numer, denom) = match body.split_once('/') {
        Some((p, q)) => (digits(p)?, digits(q)?),
        None => (digits(body)?, BigInt::from(1)),
    };
    if denom.is_zero() {
        return Err(BadRational);
    }
    let value = Rational::new(numer, denom);
    Ok(if negative { -value } else { value })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Vertices,
    Nodes,
}

pub fn parse(text: &str) -> Result<ProblemFile, FormatError> {
    let mut file = ProblemFile::default();
    let mut section = Section::None;
    let mut seen_vertices = false;
    let mut seen_nodes = false;
    let mut seen_boundary = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |message: String| FormatError::Syntax { line: line_no, message };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("boundary:") {
            if seen_boundary {
                return Err(err("duplicate 'boundary:'".into()));
            }
            seen_boundary = true;
            file.boundary = rest.trim().parse().map_err(err)?;
            continue;
        }
        match line {
            "vertices:" => {
                if seen_vertices {
                    return Err(err("duplicate 'vertices:' section".into()));
                }
                seen_vertices = true;
                section = Section::Vertices;
                continue;
            }
            "nodes:" => {
                if seen_nodes {
                    return Err(err("duplicate 'nodes:' section".into()));
                }
                if !seen_vertices {
                    return Err(err("'nodes:' before 'vertices:'".into()));
                }
                seen_nodes = true;
                section = Section::Nodes;
                continue;
            }
            _ => {}
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [x, y] = fields.as_slice() else {
            return Err(err(format!("expected two coordinates, found '{line}'")));
        };
        let coord = |s: &str| parse_rational(s).map_err(|e| err(format!("bad rational '{s}': {e}")));
        let p = Point::new(coord(x)?, coord(y)?);
        match section {
            Section::Vertices => file.vertices.push(p),
            Section::Nodes => file.nodes.push(p),
            Section::None => return Err(err("coordinates outside a section".into())),
        }
    }
    if !seen_vertices {
        return Err(FormatError::MissingSection("vertices:"));
    }
    if !seen_nodes {
        return Err(FormatError::MissingSection("nodes:"));
    }
    Ok(file)
}

pub fn print(file: &ProblemFile) -> String {
    let mut out = String::from("vertices:\n");
    for v in &file.vertices {
        let _ = writeln!(out, "{} {}", v.x, v.y);
    }
    out.push_str("nodes:\n");
    for a in &file.nodes {
        let _ = writeln!(out, "{} {}", a.x, a.y);
    }
    if file.boundary != Boundary::None {
        let _ = writeln!(out, "boundary: {}", file.boundary);
    }
    out
}

impl ProblemFile {
    pub fn from_problem(p: &Problem, boundary: Boundary) -> ProblemFile {
        ProblemFile { vertices: p.strip().vertices().to_vec(), nodes: p.nodes().to_vec(), boundary }
    }

    pub fn strip(&self) -> Result<Strip, BuildError> {
        Ok(Strip::new(self.vertices.clone())?)
    }

    /// The problem as written, ignoring the boundary line.
    pub fn problem(&self) -> Result<Problem, BuildError> {
        Ok(Problem::new(self.strip()?, self.nodes.clone())?)
    }

    /// The plain problem equivalent to this file: constrained boundary sides
    /// contribute their endpoints as extra nodes.
    pub fn augmented(&self) -> Result<Problem, BuildError> {
        let strip = self.strip()?;
        let nodes = self.boundary.augment(&strip, &self.nodes);
        Ok(Problem::new(strip, nodes)?)
    }
}
