use std::collections::BTreeMap;

use super::{check_fill, check_sums, Grid, Shape};
use crate::text::join;
use crate::algebra::Modulus;
use crate::error::{Error, Result};
use crate::report::{Location, ValidationReport, ViolationKind};

/// A cell of a weak Heffter array: the value used in its row sum and the
/// value used in its column sum. They agree up to sign; `(10, -10)` is the
/// cell written `±10` and `(-8, 8)` the cell written `∓8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeakCell {
    row_value: i64,
    col_value: i64,
}

impl WeakCell {
    pub fn new(row_value: i64, col_value: i64) -> Result<Self> {
        if row_value.abs() != col_value.abs() {
            return Err(Error::MalformedCell { row_value, col_value });
        }
        Ok(WeakCell { row_value, col_value })
    }

    pub fn plain(value: i64) -> Self {
        WeakCell { row_value: value, col_value: value }
    }

    pub fn row_value(self) -> i64 {
        self.row_value
    }

    pub fn col_value(self) -> i64 {
        self.col_value
    }

    /// Row and column signs agree.
    pub fn is_plain(self) -> bool {
        self.row_value == self.col_value
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeakHeffterArray {
    shape: Shape,
    modulus: Modulus,
    grid: Grid<WeakCell>,
}

impl WeakHeffterArray {
    pub fn new(shape: Shape, grid: Grid<WeakCell>) -> Result<Self> {
        if grid.rows() != shape.m || grid.cols() != shape.n {
            return Err(Error::Domain(format!(
                "grid is {}x{}, header says {}x{}",
                grid.rows(),
                grid.cols(),
                shape.m,
                shape.n
            )));
        }
        let modulus = shape.modulus()?;
        Ok(WeakHeffterArray { shape, modulus, grid })
    }

    pub(crate) fn from_parts(shape: Shape, modulus: Modulus, grid: Grid<WeakCell>) -> Self {
        WeakHeffterArray { shape, modulus, grid }
    }

    /// Builds from rows of optional `(row_value, col_value)` pairs; `s` and
    /// `t` are read off the first row and column.
    pub fn from_pairs(rows: Vec<Vec<Option<(i64, i64)>>>) -> Result<Self> {
        let cells = rows
            .into_iter()
            .map(|r| r.into_iter().map(|c| c.map(|(a, b)| WeakCell::new(a, b)).transpose()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let grid = Grid::from_rows(cells)?;
        let s = if grid.rows() > 0 { grid.row_fill(0) } else { 0 };
        let t = if grid.cols() > 0 { grid.col_fill(0) } else { 0 };
        WeakHeffterArray::new(Shape::new(grid.rows(), grid.cols(), s, t), grid)
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn grid(&self) -> &Grid<WeakCell> {
        &self.grid
    }

    pub fn get(&self, i: usize, j: usize) -> Option<WeakCell> {
        self.grid.get(i, j)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, WeakCell)> + '_ {
        self.grid.filled()
    }

    pub fn is_plain(&self) -> bool {
        self.entries().all(|(_, _, c)| c.is_plain())
    }

    /// Canonical row values of each row, left to right.
    pub fn row_parts(&self) -> Vec<Vec<i64>> {
        (0..self.shape.m)
            .map(|i| self.grid.row(i).flatten().map(|c| self.modulus.reduce(c.row_value)).collect())
            .collect()
    }

    /// Canonical column values of each column, top to bottom.
    pub fn col_parts(&self) -> Vec<Vec<i64>> {
        (0..self.shape.n)
            .map(|j| self.grid.col(j).flatten().map(|c| self.modulus.reduce(c.col_value)).collect())
            .collect()
    }

    pub fn set(&mut self, i: usize, j: usize, cell: Option<WeakCell>) {
        self.grid.set(i, j, cell);
    }
}

/// Checks the weak-array axioms: fill counts, pairwise distinct supports
/// covering `{1, ..., ms}`, zero row sums under row values and zero column
/// sums under column values.
pub fn validate_weak(w: &WeakHeffterArray) -> ValidationReport {
    let mut report = ValidationReport::default();
    let m = w.modulus;
    w.shape.check(&mut report);
    check_fill(&w.grid, w.shape, &mut report);
    let mut seen: BTreeMap<i64, (usize, usize)> = BTreeMap::new();
    for (i, j, c) in w.entries() {
        let sup = m.reduce(c.row_value).abs();
        if sup == 0 {
            report.push(ViolationKind::Zero, Location::Cell(i + 1, j + 1), format!("entry {} is 0 mod {m}", c.row_value));
            continue;
        }
        if let Some(&(pi, pj)) = seen.get(&sup) {
            report.push(
                ViolationKind::HalfSet,
                Location::Cell(i + 1, j + 1),
                format!("support {sup} already used at cell({},{})", pi + 1, pj + 1),
            );
        } else {
            seen.insert(sup, (i, j));
        }
    }
    let missing: Vec<i64> = (1..=m.half()).filter(|x| !seen.contains_key(x)).collect();
    if !missing.is_empty() {
        report.push(ViolationKind::HalfSet, Location::Global, format!("supports missing: {}", join(&missing)));
    }
    check_sums(&w.grid.map(|c| c.row_value), &w.grid.map(|c| c.col_value), m, &mut report);
    report
}
