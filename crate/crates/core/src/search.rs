//! Backtracking searches for Heffter systems and small Heffter arrays.
//!
//! Array search fills the cyclic band pattern (row `i` occupies columns
//! `is, ..., is + s - 1` mod `n`) cell by cell, least absolute value first.
//! The last cell of a row or column is forced by its sum. The pattern is
//! invariant under shifting rows by one and columns by `s`, and under global
//! negation, so the search may insist that `+1` lies in the first row.

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

use crate::algebra::Modulus;
use crate::arrays::{
    canonical_form, check_integer_necessity, check_shiftable_necessity, Grid, HeffterArray, Shape,
};
use crate::error::{Error, Result};
use crate::orderings::HeffterSystem;

/// Finds a Heffter system `D(M, k)`: a partition of a half-set of `Z_M`
/// into parts of size `k` summing to zero. `Ok(None)` after exhausting the
/// space.
///
/// ```
/// use heffter::algebra::Modulus;
/// use heffter::search::find_heffter_system;
///
/// let d = find_heffter_system(Modulus::new(7).unwrap(), 3).unwrap().unwrap();
/// assert_eq!(d.parts(), &[vec![-3, 1, 2]]);
/// ```
pub fn find_heffter_system(modulus: Modulus, k: usize) -> Result<Option<HeffterSystem>> {
    let half = modulus.half() as usize;
    if k == 0 || half % k != 0 {
        return Err(Error::Parameter(format!("part size {k} does not divide (M-1)/2 = {half}")));
    }
    if k < 3 {
        // x = 0 or x + y = 0 cannot happen inside a half-set
        return Ok(None);
    }
    let mut used = vec![false; half + 1];
    let mut parts: Vec<Vec<i64>> = Vec::new();
    if system_dfs(modulus, k, &mut used, &mut parts, &mut Vec::new()) {
        HeffterSystem::new(modulus, parts).map(Some)
    } else {
        Ok(None)
    }
}

fn system_dfs(m: Modulus, k: usize, used: &mut [bool], parts: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>) -> bool {
    let half = used.len() - 1;
    if cur.is_empty() {
        let Some(first) = (1..=half).find(|&x| !used[x]) else { return true };
        // global negation fixes the sign of 1
        let signs: &[i64] = if first == 1 { &[1] } else { &[1, -1] };
        for &sg in signs {
            used[first] = true;
            cur.push(sg * first as i64);
            if system_dfs(m, k, used, parts, cur) {
                return true;
            }
            cur.pop();
            used[first] = false;
        }
        return false;
    }
    if cur.len() == k - 1 {
        let v = m.reduce(-cur.iter().sum::<i64>());
        let a = v.unsigned_abs() as usize;
        if v == 0 || used[a] {
            return false;
        }
        used[a] = true;
        cur.push(v);
        parts.push(std::mem::take(cur));
        if system_dfs(m, k, used, parts, cur) {
            return true;
        }
        *cur = parts.pop().unwrap();
        cur.pop();
        used[a] = false;
        return false;
    }
    // elements after the first increase in support to avoid permutations
    let lo = cur[1..].last().map_or(cur[0].unsigned_abs() as usize, |v| v.unsigned_abs() as usize) + 1;
    for x in lo..=half {
        if used[x] {
            continue;
        }
        for sg in [1, -1] {
            used[x] = true;
            cur.push(sg * x as i64);
            if system_dfs(m, k, used, parts, cur) {
                return true;
            }
            cur.pop();
            used[x] = false;
        }
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchMode {
    /// Sums vanish mod `M`.
    #[default]
    General,
    /// Sums vanish over the integers.
    Integer,
    /// Integer, with as many positive as negative entries in every line.
    Shiftable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A solution, in canonical form.
    Found(HeffterArray),
    /// Every filling of the band pattern was tried.
    Exhausted,
    /// Some branch ran out of nodes before a solution turned up.
    BudgetExceeded,
}

/// Search limits. `budget` counts nodes per top-level branch; `jobs` is the
/// worker count (`None` uses every core).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub budget: Option<u64>,
    pub jobs: Option<usize>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { budget: None, jobs: Some(1) }
    }
}

/// Finds an `H(m,n;s,t)` of the requested kind.
///
/// Branches split on the first cell and run in parallel; the solution of
/// the lowest branch wins, so the answer does not depend on `jobs`.
pub fn find_heffter_array(shape: Shape, mode: SearchMode, limits: SearchLimits) -> Result<SearchOutcome> {
    let Shape { m, n, s, t } = shape;
    if m * s != n * t {
        return Err(Error::Parameter(format!("ms = {} differs from nt = {}", m * s, n * t)));
    }
    if !(3..=n).contains(&s) || !(3..=m).contains(&t) {
        return Err(Error::Parameter(format!("need 3 <= s <= n and 3 <= t <= m, got s = {s}, t = {t}")));
    }
    match mode {
        SearchMode::Integer if !check_integer_necessity(m, n, s, t) => {
            return Err(Error::Parameter(format!("an integer array needs ms = 0 or 3 mod 4; ms = {}", m * s)));
        }
        SearchMode::Shiftable if !check_shiftable_necessity(m, n, s, t) => {
            return Err(Error::Parameter(format!(
                "a shiftable array needs s, t even and at least 4 with ms = 0 mod 4; got s = {s}, t = {t}, ms = {}",
                m * s
            )));
        }
        _ => {}
    }
    let modulus = shape.modulus()?;
    let base = ArraySearch::new(shape, modulus, mode);
    let first = base.cells[0];
    let branches: Vec<i64> = base.candidates().collect();
    let budget_hit = AtomicBool::new(false);
    let run = |&v: &i64| -> Option<Grid<i64>> {
        let mut st = base.clone();
        st.budget = limits.budget;
        if !st.place(first, v) {
            return None;
        }
        let found = st.dfs(1);
        if st.exhausted_budget {
            budget_hit.store(true, Ordering::Relaxed);
        }
        found.then(|| st.grid())
    };
    let found = match limits.jobs {
        Some(1) => branches.iter().find_map(run),
        jobs => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .map_err(|e| Error::Parameter(e.to_string()))?;
            pool.install(|| branches.par_iter().find_map_first(run))
        }
    };
    Ok(match found {
        Some(grid) => SearchOutcome::Found(canonical_form(&HeffterArray::new(shape, grid)?)),
        None if budget_hit.load(Ordering::Relaxed) => SearchOutcome::BudgetExceeded,
        None => SearchOutcome::Exhausted,
    })
}

#[derive(Clone)]
struct ArraySearch {
    shape: Shape,
    modulus: Modulus,
    mode: SearchMode,
    /// Filled cells in search order (row-major).
    cells: Vec<(usize, usize)>,
    /// How many cells of each row/column precede a given cell, and the
    /// line totals.
    row_left: Vec<usize>,
    col_left: Vec<usize>,
    values: Vec<Option<i64>>,
    row_sum: Vec<i64>,
    col_sum: Vec<i64>,
    row_pos: Vec<usize>,
    col_pos: Vec<usize>,
    used: Vec<bool>,
    budget: Option<u64>,
    exhausted_budget: bool,
}

impl ArraySearch {
    fn new(shape: Shape, modulus: Modulus, mode: SearchMode) -> Self {
        let Shape { m, n, s, t } = shape;
        let mut cells: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..s).map(move |c| (i, (i * s + c) % n))).collect();
        cells.sort_unstable();
        ArraySearch {
            shape,
            modulus,
            mode,
            cells,
            row_left: vec![s; m],
            col_left: vec![t; n],
            values: vec![None; m * n],
            row_sum: vec![0; m],
            col_sum: vec![0; n],
            row_pos: vec![0; m],
            col_pos: vec![0; n],
            used: vec![false; m * s + 1],
            budget: None,
            exhausted_budget: false,
        }
    }

    fn candidates(&self) -> impl Iterator<Item = i64> + '_ {
        (1..=self.shape.m * self.shape.s).filter(|&x| !self.used[x]).flat_map(|x| [x as i64, -(x as i64)])
    }

    /// The value a line's last cell must take, if any.
    fn closing(&self, sum: i64) -> Option<i64> {
        let v = match self.mode {
            SearchMode::General => self.modulus.reduce(-sum),
            _ => -sum,
        };
        let a = v.unsigned_abs() as usize;
        (v != 0 && a < self.used.len() && !self.used[a]).then_some(v)
    }

    fn admissible(&self, (i, j): (usize, usize), v: i64) -> bool {
        let a = v.unsigned_abs() as usize;
        if v == 0 || a >= self.used.len() || self.used[a] {
            return false;
        }
        if v == -1 {
            return false;
        }
        if i == 0 && self.row_left[0] == 1 && !self.used[1] && v != 1 {
            return false;
        }
        if self.mode == SearchMode::Shiftable {
            let Shape { s, t, .. } = self.shape;
            let side = usize::from(v > 0);
            let (rp, cp) = (self.row_pos[i], self.col_pos[j]);
            let (rn, cn) = (s - self.row_left[i] - rp, t - self.col_left[j] - cp);
            let (r, c) = if side == 1 { (rp, cp) } else { (rn, cn) };
            if r + 1 > s / 2 || c + 1 > t / 2 {
                return false;
            }
        }
        true
    }

    fn place(&mut self, (i, j): (usize, usize), v: i64) -> bool {
        if !self.admissible((i, j), v) {
            return false;
        }
        self.used[v.unsigned_abs() as usize] = true;
        self.values[i * self.shape.n + j] = Some(v);
        self.row_sum[i] += v;
        self.col_sum[j] += v;
        self.row_left[i] -= 1;
        self.col_left[j] -= 1;
        if v > 0 {
            self.row_pos[i] += 1;
            self.col_pos[j] += 1;
        }
        true
    }

    fn unplace(&mut self, (i, j): (usize, usize), v: i64) {
        self.used[v.unsigned_abs() as usize] = false;
        self.values[i * self.shape.n + j] = None;
        self.row_sum[i] -= v;
        self.col_sum[j] -= v;
        self.row_left[i] += 1;
        self.col_left[j] += 1;
        if v > 0 {
            self.row_pos[i] -= 1;
            self.col_pos[j] -= 1;
        }
    }

    /// Integer modes: the remaining cells of a line must be able to cancel
    /// its sum with the largest unused supports.
    fn reachable(&self, sum: i64, left: usize) -> bool {
        if self.mode == SearchMode::General || left == 0 {
            return true;
        }
        let reach: i64 = (1..self.used.len()).rev().filter(|&x| !self.used[x]).take(left).map(|x| x as i64).sum();
        sum.abs() <= reach
    }

    fn dfs(&mut self, idx: usize) -> bool {
        if let Some(b) = self.budget.as_mut() {
            if *b == 0 {
                self.exhausted_budget = true;
                return false;
            }
            *b -= 1;
        }
        let Some(&(i, j)) = self.cells.get(idx) else { return true };
        let row_last = self.row_left[i] == 1;
        let col_last = self.col_left[j] == 1;
        let forced = match (row_last, col_last) {
            (true, true) => match (self.closing(self.row_sum[i]), self.closing(self.col_sum[j])) {
                (Some(a), Some(b)) if a == b => Some(a),
                _ => return false,
            },
            (true, false) => Some(match self.closing(self.row_sum[i]) {
                Some(a) => a,
                None => return false,
            }),
            (false, true) => Some(match self.closing(self.col_sum[j]) {
                Some(b) => b,
                None => return false,
            }),
            (false, false) => None,
        };
        let options: Vec<i64> = match forced {
            Some(v) => vec![v],
            None => self.candidates().collect(),
        };
        for v in options {
            if !self.place((i, j), v) {
                continue;
            }
            let ok = self.reachable(self.row_sum[i], self.row_left[i]) && self.reachable(self.col_sum[j], self.col_left[j]);
            if ok && self.dfs(idx + 1) {
                return true;
            }
            self.unplace((i, j), v);
            if self.exhausted_budget {
                return false;
            }
        }
        false
    }

    fn grid(&self) -> Grid<i64> {
        Grid::new(self.shape.m, self.shape.n, self.values.clone()).expect("dimensions match")
    }
}
