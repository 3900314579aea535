//! Graph dump: a `current-graph <m> <n> <M>` header, then one
//! `edge R<i> C<j> <current> <sign>` line per edge with `sign` `+` or `-`.

use std::fmt;
use std::str::FromStr;

use super::{CurrentEdge, CurrentGraph};
use crate::algebra::Modulus;
use crate::error::{parse_error, Error, Result};
use crate::graph::Sign;
use crate::text::{parse_int, parse_usize};

impl fmt::Display for CurrentGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "current-graph {} {} {}", self.m, self.n, self.modulus)?;
        for e in &self.edges {
            writeln!(f, "edge R{} C{} {} {}", e.row + 1, e.col + 1, e.current, e.sign.symbol())?;
        }
        Ok(())
    }
}

fn vertex(tok: &str, prefix: char, bound: usize, line: usize) -> Result<usize> {
    let idx = tok
        .strip_prefix(prefix)
        .ok_or_else(|| parse_error(line, format!("expected {prefix}<index>, found `{tok}`")))?;
    let i = parse_usize(idx, line)?;
    if i == 0 || i > bound {
        return Err(parse_error(line, format!("{tok} out of range 1..={bound}")));
    }
    Ok(i - 1)
}

impl FromStr for CurrentGraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l)).filter(|(_, l)| !l.trim().is_empty());
        let (hl, header) = lines.next().ok_or_else(|| parse_error(1, "empty file"))?;
        let toks: Vec<&str> = header.split_ascii_whitespace().collect();
        if toks.len() != 4 || toks[0] != "current-graph" {
            return Err(parse_error(hl, "header must be `current-graph <m> <n> <M>`"));
        }
        let (m, n) = (parse_usize(toks[1], hl)?, parse_usize(toks[2], hl)?);
        let modulus = Modulus::new(parse_int(toks[3], hl)?).map_err(|e| parse_error(hl, e.to_string()))?;
        let mut edges = Vec::new();
        for (ln, line) in lines {
            let toks: Vec<&str> = line.split_ascii_whitespace().collect();
            if toks.len() != 5 || toks[0] != "edge" {
                return Err(parse_error(ln, "expected `edge R<i> C<j> <current> <sign>`"));
            }
            let sign = match toks[4] {
                "+" => Sign::Positive,
                "-" => Sign::Negative,
                other => return Err(parse_error(ln, format!("sign must be + or -, found `{other}`"))),
            };
            edges.push(CurrentEdge {
                row: vertex(toks[1], 'R', m, ln)?,
                col: vertex(toks[2], 'C', n, ln)?,
                current: parse_int(toks[3], ln)?,
                sign,
            });
        }
        CurrentGraph::new(m, n, modulus, edges)
    }
}
