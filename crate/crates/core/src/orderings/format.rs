//! Ordering files list one cyclic ordering per part, rows before columns:
//!
//! ```text
//! row 1: 1 -2 -10 11
//! col 1: 1 -8 7
//! ```
//!
//! Indices are 1-based and must cover `1..=count` exactly once per kind.

use std::fmt;
use std::str::FromStr;

use super::SystemOrdering;
use crate::algebra::Modulus;
use crate::error::{parse_error, Error, Result};
use crate::text::{join, parse_int, parse_usize};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrderingFile {
    pub rows: Vec<Vec<i64>>,
    pub cols: Vec<Vec<i64>>,
}

impl OrderingFile {
    pub fn from_orderings(omega_r: &SystemOrdering, omega_c: &SystemOrdering) -> Self {
        OrderingFile { rows: omega_r.cycles().to_vec(), cols: omega_c.cycles().to_vec() }
    }

    pub fn to_orderings(&self, modulus: Modulus) -> Result<(SystemOrdering, SystemOrdering)> {
        Ok((SystemOrdering::new(modulus, self.rows.clone())?, SystemOrdering::new(modulus, self.cols.clone())?))
    }
}

impl FromStr for OrderingFile {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut rows: Vec<Option<Vec<i64>>> = Vec::new();
        let mut cols: Vec<Option<Vec<i64>>> = Vec::new();
        let mut last_line = 0;
        for (k, line) in text.lines().enumerate() {
            let ln = k + 1;
            last_line = ln;
            if line.trim().is_empty() {
                continue;
            }
            let (head, body) =
                line.split_once(':').ok_or_else(|| parse_error(ln, "expected `row <i>: ...` or `col <j>: ...`"))?;
            let head: Vec<&str> = head.split_ascii_whitespace().collect();
            let target = match head.as_slice() {
                ["row", _] => &mut rows,
                ["col", _] => &mut cols,
                _ => return Err(parse_error(ln, "line must start with `row <i>:` or `col <j>:`")),
            };
            let idx = parse_usize(head[1], ln)?;
            if idx == 0 {
                return Err(parse_error(ln, "indices are 1-based"));
            }
            let seq: Vec<i64> = body.split_ascii_whitespace().map(|t| parse_int(t, ln)).collect::<Result<_>>()?;
            if seq.is_empty() {
                return Err(parse_error(ln, "empty ordering"));
            }
            if target.len() < idx {
                target.resize(idx, None);
            }
            if target[idx - 1].replace(seq).is_some() {
                return Err(parse_error(ln, format!("{} {idx} given twice", head[0])));
            }
        }
        let finish = |v: Vec<Option<Vec<i64>>>, kind: &str| -> Result<Vec<Vec<i64>>> {
            v.into_iter()
                .enumerate()
                .map(|(i, o)| o.ok_or_else(|| parse_error(last_line.max(1), format!("{kind} {} missing", i + 1))))
                .collect()
        };
        Ok(OrderingFile { rows: finish(rows, "row")?, cols: finish(cols, "col")? })
    }
}

impl fmt::Display for OrderingFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            writeln!(f, "row {}: {}", i + 1, join(r))?;
        }
        for (j, c) in self.cols.iter().enumerate() {
            writeln!(f, "col {}: {}", j + 1, join(c))?;
        }
        Ok(())
    }
}
