//! Text format, one array per file:
//!
//! ```text
//! heffter 3 4 4 3
//! 1 -2 -10 11
//! -8 6 -3 5
//! 7 -4 -12 9
//! ```
//!
//! `.` marks an empty cell and `a:b` a weak cell with row value `a` and
//! column value `b`. Serialization separates tokens by one space and ends
//! every line with `\n`.

use std::fmt;

use super::{Grid, HeffterArray, Shape, WeakCell, WeakHeffterArray};
use crate::error::{parse_error, Error, Result};
use crate::text::{parse_int, parse_usize};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrayFile {
    Plain(HeffterArray),
    Weak(WeakHeffterArray),
}

impl ArrayFile {
    pub fn into_weak(self) -> WeakHeffterArray {
        match self {
            ArrayFile::Plain(h) => h.to_weak(),
            ArrayFile::Weak(w) => w,
        }
    }

    pub fn shape(&self) -> Shape {
        match self {
            ArrayFile::Plain(h) => h.shape(),
            ArrayFile::Weak(w) => w.shape(),
        }
    }
}

/// Parses an array file. A file is weak when any cell uses the `a:b` form,
/// or when `force_weak` is set.
pub fn parse_array_file(text: &str, force_weak: bool) -> Result<ArrayFile> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l));
    let (hline, header) = lines.next().ok_or_else(|| parse_error(1, "empty file"))?;
    let toks: Vec<&str> = header.split_ascii_whitespace().collect();
    if toks.len() != 5 || toks[0] != "heffter" {
        return Err(parse_error(hline, "header must be `heffter <m> <n> <s> <t>`"));
    }
    let dims: Vec<usize> = toks[1..].iter().map(|t| parse_usize(t, hline)).collect::<Result<_>>()?;
    let shape = Shape::new(dims[0], dims[1], dims[2], dims[3]);
    shape.modulus().map_err(|e| parse_error(hline, e.to_string()))?;

    let mut cells: Vec<Option<WeakCell>> = Vec::with_capacity(shape.m * shape.n);
    let mut weak = force_weak;
    for r in 0..shape.m {
        let (ln, text) = lines.next().ok_or_else(|| parse_error(hline + r + 1, format!("missing row {}", r + 1)))?;
        let toks: Vec<&str> = text.split_ascii_whitespace().collect();
        if toks.len() != shape.n {
            return Err(parse_error(ln, format!("expected {} cells, found {}", shape.n, toks.len())));
        }
        for tok in toks {
            cells.push(match tok {
                "." => None,
                _ => match tok.split_once(':') {
                    Some((a, b)) => {
                        weak = true;
                        let (a, b) = (parse_int(a, ln)?, parse_int(b, ln)?);
                        Some(WeakCell::new(a, b).map_err(|e| parse_error(ln, e.to_string()))?)
                    }
                    None => Some(WeakCell::plain(parse_int(tok, ln)?)),
                },
            });
        }
    }
    if let Some((ln, _)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(parse_error(ln, "unexpected content after the last row"));
    }
    let grid = Grid::new(shape.m, shape.n, cells)?;
    if weak {
        Ok(ArrayFile::Weak(WeakHeffterArray::new(shape, grid)?))
    } else {
        Ok(ArrayFile::Plain(HeffterArray::new(shape, grid.map(|c| c.row_value()))?))
    }
}

impl std::str::FromStr for HeffterArray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse_array_file(s, false)? {
            ArrayFile::Plain(h) => Ok(h),
            ArrayFile::Weak(_) => Err(Error::Domain("weak cells in a plain array file".into())),
        }
    }
}

impl std::str::FromStr for WeakHeffterArray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(parse_array_file(s, true)?.into_weak())
    }
}

fn write_grid<T: Copy>(f: &mut fmt::Formatter<'_>, shape: Shape, grid: &Grid<T>, cell: impl Fn(T) -> String) -> fmt::Result {
    writeln!(f, "heffter {} {} {} {}", shape.m, shape.n, shape.s, shape.t)?;
    for i in 0..grid.rows() {
        let toks: Vec<String> = grid.row(i).map(|c| c.map_or_else(|| ".".to_string(), &cell)).collect();
        writeln!(f, "{}", toks.join(" "))?;
    }
    Ok(())
}

impl fmt::Display for HeffterArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_grid(f, self.shape(), self.grid(), |v| v.to_string())
    }
}

impl fmt::Display for WeakHeffterArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_grid(f, self.shape(), self.grid(), |c| {
            if c.is_plain() {
                c.row_value().to_string()
            } else {
                format!("{}:{}", c.row_value(), c.col_value())
            }
        })
    }
}
