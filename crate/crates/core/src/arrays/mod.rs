//! Heffter arrays `H(m,n;s,t)`, their integer, shiftable and weak variants,
//! and the validators for each.
//!
//! An array is stored exactly as written: entries keep their integer value
//! (so `26` and `1` are different entries of an array over `Z_25`), and the
//! modular checks reduce on the fly. Empty cells are `None`, never `0`.

mod canonical;
mod format;
mod grid;
mod weak;

use std::collections::BTreeMap;

pub use canonical::canonical_form;
pub use format::{parse_array_file, ArrayFile};
pub use grid::Grid;
pub use weak::{validate_weak, WeakCell, WeakHeffterArray};

use crate::algebra::Modulus;
use crate::error::{Error, Result};
use crate::graph::UnionFind;
use crate::text::join;
use crate::report::{Location, ValidationReport, ViolationKind};

/// Shape parameters shared by plain and weak arrays.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Shape {
    pub m: usize,
    pub n: usize,
    pub s: usize,
    pub t: usize,
}

impl Shape {
    pub fn new(m: usize, n: usize, s: usize, t: usize) -> Self {
        Shape { m, n, s, t }
    }

    /// `2ms + 1`.
    pub fn modulus(&self) -> Result<Modulus> {
        Modulus::new(2 * (self.m * self.s) as i64 + 1)
    }

    /// Name in the usual notation: `H(m,n)` when full, `H(n;k)` when square
    /// with empty cells, `H(m,n;s,t)` otherwise.
    pub fn name(&self) -> String {
        let Shape { m, n, s, t } = *self;
        if s == n && t == m {
            format!("H({m},{n})")
        } else if m == n && s == t {
            format!("H({n};{s})")
        } else {
            format!("H({m},{n};{s},{t})")
        }
    }

    pub(crate) fn check(&self, report: &mut ValidationReport) {
        let Shape { m, n, s, t } = *self;
        if m * s != n * t {
            report.push(ViolationKind::Dimensions, Location::Global, format!("ms = {} but nt = {}", m * s, n * t));
        }
        if !(3 <= s && s <= n) {
            report.push(ViolationKind::Dimensions, Location::Global, format!("need 3 <= s <= n, got s={s}, n={n}"));
        }
        if !(3 <= t && t <= m) {
            report.push(ViolationKind::Dimensions, Location::Global, format!("need 3 <= t <= m, got t={t}, m={m}"));
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HeffterArray {
    shape: Shape,
    modulus: Modulus,
    grid: Grid<i64>,
}

impl HeffterArray {
    /// Builds an array without validating it; only the grid dimensions and
    /// the modulus `2ms+1` are checked.
    pub fn new(shape: Shape, grid: Grid<i64>) -> Result<Self> {
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
        Ok(HeffterArray { shape, modulus, grid })
    }

    /// A full array `H(m,n)` from its rows.
    pub fn full(rows: &[&[i64]]) -> Result<Self> {
        let grid = Grid::from_rows(rows.iter().map(|r| r.iter().map(|&v| Some(v)).collect()).collect())?;
        let shape = Shape::new(grid.rows(), grid.cols(), grid.cols(), grid.rows());
        HeffterArray::new(shape, grid)
    }

    /// An array with empty cells; `s` and `t` are read off the first row and
    /// column.
    pub fn with_empty(rows: Vec<Vec<Option<i64>>>) -> Result<Self> {
        let grid = Grid::from_rows(rows)?;
        let s = if grid.rows() > 0 { grid.row_fill(0) } else { 0 };
        let t = if grid.cols() > 0 { grid.col_fill(0) } else { 0 };
        HeffterArray::new(Shape::new(grid.rows(), grid.cols(), s, t), grid)
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn grid(&self) -> &Grid<i64> {
        &self.grid
    }

    /// 0-based access.
    pub fn get(&self, i: usize, j: usize) -> Option<i64> {
        self.grid.get(i, j)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.grid.filled()
    }

    /// Canonical entries of each row, left to right.
    pub fn row_parts(&self) -> Vec<Vec<i64>> {
        (0..self.shape.m).map(|i| self.grid.row(i).flatten().map(|v| self.modulus.reduce(v)).collect()).collect()
    }

    /// Canonical entries of each column, top to bottom.
    pub fn col_parts(&self) -> Vec<Vec<i64>> {
        (0..self.shape.n).map(|j| self.grid.col(j).flatten().map(|v| self.modulus.reduce(v)).collect()).collect()
    }

    pub fn transpose(&self) -> HeffterArray {
        let Shape { m, n, s, t } = self.shape;
        HeffterArray { shape: Shape::new(n, m, t, s), modulus: self.modulus, grid: self.grid.transpose() }
    }

    pub fn negated(&self) -> HeffterArray {
        HeffterArray { grid: self.grid.map(|v| -v), ..self.clone() }
    }

    /// Entrywise product with `unit`, reduced to canonical form. When `unit`
    /// is coprime to the modulus this maps Heffter arrays to Heffter arrays.
    pub fn scaled(&self, unit: i64) -> HeffterArray {
        let m = self.modulus;
        HeffterArray { grid: self.grid.map(|v| m.reduce(v * unit)), ..self.clone() }
    }

    pub fn permuted(&self, row_order: &[usize], col_order: &[usize]) -> HeffterArray {
        HeffterArray { grid: self.grid.permuted(row_order, col_order), ..self.clone() }
    }

    pub fn to_weak(&self) -> WeakHeffterArray {
        WeakHeffterArray::from_parts(self.shape, self.modulus, self.grid.map(WeakCell::plain))
    }
}

/// Checks every axiom of a Heffter array and lists each violation.
pub fn validate(h: &HeffterArray) -> ValidationReport {
    let mut report = ValidationReport::default();
    let shape = h.shape;
    let m = h.modulus;
    shape.check(&mut report);
    check_fill(&h.grid, shape, &mut report);

    let mut seen: BTreeMap<i64, (usize, usize)> = BTreeMap::new();
    for (i, j, v) in h.entries() {
        let c = m.reduce(v);
        if c == 0 {
            report.push(ViolationKind::Zero, Location::Cell(i + 1, j + 1), format!("entry {v} is 0 mod {m}"));
            continue;
        }
        if let Some(&(pi, pj)) = seen.get(&c.abs()) {
            report.push(
                ViolationKind::HalfSet,
                Location::Cell(i + 1, j + 1),
                format!("support {} already used at cell({},{})", c.abs(), pi + 1, pj + 1),
            );
        } else {
            seen.insert(c.abs(), (i, j));
        }
    }
    let missing: Vec<i64> = (1..=m.half()).filter(|x| !seen.contains_key(x)).collect();
    if !missing.is_empty() {
        report.push(ViolationKind::HalfSet, Location::Global, format!("supports missing: {}", join(&missing)));
    }
    check_sums(&h.grid, &h.grid, m, &mut report);
    report
}

pub(crate) fn check_fill<T: Copy>(grid: &Grid<T>, shape: Shape, report: &mut ValidationReport) {
    for i in 0..grid.rows() {
        let f = grid.row_fill(i);
        if f != shape.s {
            report.push(ViolationKind::FillCount, Location::Row(i + 1), format!("{f} filled cells, expected {}", shape.s));
        }
    }
    for j in 0..grid.cols() {
        let f = grid.col_fill(j);
        if f != shape.t {
            report.push(ViolationKind::FillCount, Location::Col(j + 1), format!("{f} filled cells, expected {}", shape.t));
        }
    }
}

pub(crate) fn check_sums(rows: &Grid<i64>, cols: &Grid<i64>, m: Modulus, report: &mut ValidationReport) {
    for i in 0..rows.rows() {
        let sum = m.reduce(rows.row(i).flatten().sum());
        if sum != 0 {
            report.push(ViolationKind::RowSum, Location::Row(i + 1), format!("sum is {sum} mod {m}"));
        }
    }
    for j in 0..cols.cols() {
        let sum = m.reduce(cols.col(j).flatten().sum());
        if sum != 0 {
            report.push(ViolationKind::ColSum, Location::Col(j + 1), format!("sum is {sum} mod {m}"));
        }
    }
}

/// Integer Heffter array: valid, with row and column sums exactly zero and
/// support `{1, ..., ms}`.
pub fn validate_integer(h: &HeffterArray) -> bool {
    if !validate(h).verdict() {
        return false;
    }
    let g = &h.grid;
    let rows_zero = (0..g.rows()).all(|i| g.row(i).flatten().sum::<i64>() == 0);
    let cols_zero = (0..g.cols()).all(|j| g.col(j).flatten().sum::<i64>() == 0);
    let ms = (h.shape.m * h.shape.s) as u64;
    rows_zero && cols_zero && crate::algebra::support(h.entries().map(|e| e.2)) == (1..=ms).collect()
}

/// Lines whose positive and negative entry counts differ.
pub fn sign_imbalances(h: &HeffterArray) -> Vec<Location> {
    let balance = |it: &mut dyn Iterator<Item = Option<i64>>| it.flatten().map(|v| v.signum()).sum::<i64>();
    let g = &h.grid;
    let mut out: Vec<Location> = (0..g.rows()).filter(|&i| balance(&mut g.row(i)) != 0).map(|i| Location::Row(i + 1)).collect();
    out.extend((0..g.cols()).filter(|&j| balance(&mut g.col(j)) != 0).map(|j| Location::Col(j + 1)));
    out
}

/// Shiftable: integer, and every row and column holds as many positive as
/// negative entries.
pub fn validate_shiftable(h: &HeffterArray) -> bool {
    validate_integer(h) && sign_imbalances(h).is_empty()
}

/// The shift `H ± k`: positive entries grow by `k`, negative entries shrink
/// by `k`. Row and column sums stay exactly zero.
pub fn shift(h: &HeffterArray, k: i64) -> Result<Grid<i64>> {
    if k < 0 {
        return Err(Error::Parameter(format!("shift amount {k} is negative")));
    }
    if !validate_shiftable(h) {
        return Err(Error::Precondition("array is not shiftable".into()));
    }
    Ok(h.grid.map(|v| if v > 0 { v + k } else { v - k }))
}

/// Necessary condition for an integer `H(m,n;s,t)`: `ms ≡ 0, 3 (mod 4)`.
/// Returns false when `ms != nt`.
pub fn check_integer_necessity(m: usize, n: usize, s: usize, t: usize) -> bool {
    m * s == n * t && matches!((m * s) % 4, 0 | 3)
}

/// Necessary condition for a shiftable `H(m,n;s,t)`: `s` and `t` even and at
/// least 4, and `ms ≡ 0 (mod 4)`.
pub fn check_shiftable_necessity(m: usize, n: usize, s: usize, t: usize) -> bool {
    m * s == n * t && s % 2 == 0 && t % 2 == 0 && s >= 4 && t >= 4 && (m * s) % 4 == 0
}

/// True iff the row/column incidence graph of the filled cells is
/// disconnected.
pub fn is_block_diagonal(h: &HeffterArray) -> bool {
    let Shape { m, n, .. } = h.shape;
    let mut uf = UnionFind::new(m + n);
    let mut parts = m + n;
    for (i, j, _) in h.entries() {
        if uf.union(i, m + j) {
            parts -= 1;
        }
    }
    parts > 1
}
