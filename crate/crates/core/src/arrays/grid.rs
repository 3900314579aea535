use crate::error::{Error, Result};

/// A rectangular array of optional cells, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grid<T> {
    rows: usize,
    cols: usize,
    cells: Vec<Option<T>>,
}

impl<T: Copy> Grid<T> {
    pub fn new(rows: usize, cols: usize, cells: Vec<Option<T>>) -> Result<Self> {
        if cells.len() != rows * cols {
            return Err(Error::Domain(format!("{} cells do not fill a {rows}x{cols} grid", cells.len())));
        }
        Ok(Grid { rows, cols, cells })
    }

    pub fn from_rows(rows: Vec<Vec<Option<T>>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != c) {
            return Err(Error::Domain(format!("row {} has {} cells, expected {c}", i + 1, row.len())));
        }
        Ok(Grid { rows: r, cols: c, cells: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 0-based access.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Option<T> {
        self.cells[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Option<T>) {
        self.cells[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = Option<T>> + '_ {
        self.cells[i * self.cols..(i + 1) * self.cols].iter().copied()
    }

    pub fn col(&self, j: usize) -> impl Iterator<Item = Option<T>> + '_ {
        (0..self.rows).map(move |i| self.get(i, j))
    }

    /// Filled cells in row-major order as `(row, col, value)`.
    pub fn filled(&self) -> impl Iterator<Item = (usize, usize, T)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter_map(move |(k, c)| c.map(|v| (k / self.cols, k % self.cols, v)))
    }

    pub fn row_fill(&self, i: usize) -> usize {
        self.row(i).flatten().count()
    }

    pub fn col_fill(&self, j: usize) -> usize {
        self.col(j).flatten().count()
    }

    pub fn map<U: Copy>(&self, mut f: impl FnMut(T) -> U) -> Grid<U> {
        Grid { rows: self.rows, cols: self.cols, cells: self.cells.iter().map(|c| c.map(&mut f)).collect() }
    }

    pub fn transpose(&self) -> Grid<T> {
        let mut cells = Vec::with_capacity(self.cells.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                cells.push(self.get(i, j));
            }
        }
        Grid { rows: self.cols, cols: self.rows, cells }
    }

    /// Rows reordered by `row_order` and columns by `col_order`
    /// (new index `k` takes old index `order[k]`).
    pub fn permuted(&self, row_order: &[usize], col_order: &[usize]) -> Grid<T> {
        let mut cells = Vec::with_capacity(self.cells.len());
        for &i in row_order {
            for &j in col_order {
                cells.push(self.get(i, j));
            }
        }
        Grid { rows: self.rows, cols: self.cols, cells }
    }
}
