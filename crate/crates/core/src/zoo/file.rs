//! Plain-text group files.
//!
//! ```text
//! # comment
//! degree 11
//! order 7920
//! (1,2,3,4,5,6,7,8,9,10,11)
//! (3,7,11,8)(4,10,5,6)
//! ```
//!
//! The `order` line is optional; when present it is checked against the
//! computed order.

use std::fmt::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::{Permutation, MAX_INPUT_DEGREE};

pub fn parse_group_file(text: &str) -> Result<Group> {
    let mut degree: Option<usize> = None;
    let mut declared: Option<u64> = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let Some(n) = degree else {
            let value = line
                .strip_prefix("degree")
                .ok_or_else(|| err("expected 'degree N'".into()))?;
            let n: usize = value
                .trim()
                .parse()
                .map_err(|_| err(format!("invalid degree {:?}", value.trim())))?;
            if n == 0 || n > MAX_INPUT_DEGREE {
                return Err(Error::DegreeCap {
                    degree: n,
                    cap: MAX_INPUT_DEGREE,
                });
            }
            degree = Some(n);
            continue;
        };
        if let Some(value) = line.strip_prefix("order") {
            if declared.is_some() || !gens.is_empty() {
                return Err(err("'order' must directly follow 'degree'".into()));
            }
            let m = value
                .trim()
                .parse()
                .map_err(|_| err(format!("invalid order {:?}", value.trim())))?;
            declared = Some(m);
            continue;
        }
        let g = Permutation::parse(line, n).map_err(|e| match e {
            Error::Parse { message, .. } => err(message),
            other => other,
        })?;
        gens.push(g);
    }
    let degree = degree.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing 'degree N' line".into(),
    })?;
    let g = if gens.is_empty() {
        Group::trivial(degree)
    } else {
        Group::new(gens)?
    };
    if let Some(m) = declared {
        if m != g.order() {
            return Err(Error::OrderMismatch {
                declared: m,
                computed: g.order(),
            });
        }
    }
    Ok(g)
}

pub fn ingest(path: impl AsRef<Path>) -> Result<Group> {
    parse_group_file(&std::fs::read_to_string(path)?)
}

/// Serializes `g` in the group-file format, with its order declared.
pub fn write_group_file(g: &Group, comment: &str) -> String {
    let mut out = String::new();
    for line in comment.lines() {
        writeln!(out, "# {line}").unwrap();
    }
    writeln!(out, "degree {}", g.degree()).unwrap();
    writeln!(out, "order {}", g.order()).unwrap();
    for p in g.generators() {
        writeln!(out, "{p}").unwrap();
    }
    out
}
