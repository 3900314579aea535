use super::SystemOrdering;
use crate::algebra::Modulus;
use crate::arrays::{is_block_diagonal, HeffterArray, Shape};

/// Which part orderings a compatible-pair search may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Simplicity {
    /// Only simple orderings.
    #[default]
    Required,
    /// Simple orderings first; if that space is exhausted, search again
    /// over all orderings.
    Preferred,
}

/// Every cyclic ordering of `part` up to rotation: the least element comes
/// first and the rest follow in lexicographic order.
pub fn cyclic_orderings(part: &[i64], modulus: Modulus) -> Vec<Vec<i64>> {
    let mut vals: Vec<i64> = part.iter().map(|&v| modulus.reduce(v)).collect();
    vals.sort_unstable();
    let Some((&first, rest)) = vals.split_first() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut cur = vec![first];
    let mut used = vec![false; rest.len()];
    permute(rest, &mut used, &mut cur, &mut out);
    out
}

fn permute(rest: &[i64], used: &mut [bool], cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if cur.len() == rest.len() + 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..rest.len() {
        if !used[i] {
            used[i] = true;
            cur.push(rest[i]);
            permute(rest, used, cur, out);
            cur.pop();
            used[i] = false;
        }
    }
}

/// The simple orderings among [`cyclic_orderings`], in the same order.
pub fn simple_orderings(part: &[i64], modulus: Modulus) -> Vec<Vec<i64>> {
    let mut vals: Vec<i64> = part.iter().map(|&v| modulus.reduce(v)).collect();
    vals.sort_unstable();
    let mut out = Vec::new();
    if let Some((&first, rest)) = vals.split_first() {
        let mut seen = vec![false; modulus.get() as usize];
        seen[modulus.residue(first) as usize] = true;
        let mut used = vec![false; rest.len()];
        simple_dfs(rest, modulus, first, &mut used, &mut seen, &mut vec![first], &mut out, usize::MAX);
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn simple_dfs(
    rest: &[i64],
    m: Modulus,
    sum: i64,
    used: &mut [bool],
    seen: &mut [bool],
    cur: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
    limit: usize,
) {
    if cur.len() == rest.len() + 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..rest.len() {
        if used[i] || out.len() >= limit {
            continue;
        }
        let s = m.residue(sum + rest[i]) as usize;
        if seen[s] {
            continue;
        }
        used[i] = true;
        seen[s] = true;
        cur.push(rest[i]);
        simple_dfs(rest, m, sum + rest[i], used, seen, cur, out, limit);
        cur.pop();
        seen[s] = false;
        used[i] = false;
    }
}

/// First simple cyclic ordering of `part` in the order of
/// [`cyclic_orderings`], found by backtracking on repeated partial sums.
pub fn find_simple_ordering(part: &[i64], modulus: Modulus) -> Option<Vec<i64>> {
    let mut vals: Vec<i64> = part.iter().map(|&v| modulus.reduce(v)).collect();
    vals.sort_unstable();
    let (&first, rest) = vals.split_first()?;
    let mut seen = vec![false; modulus.get() as usize];
    seen[modulus.residue(first) as usize] = true;
    let mut out = Vec::new();
    simple_dfs(rest, modulus, first, &mut vec![false; rest.len()], &mut seen, &mut vec![first], &mut out, 1);
    out.pop()
}

/// Necessary condition for compatible orderings of an array with this shape:
/// a one-face orientable embedding of the current graph has `V - E + 1` even,
/// so `m + n + ms` must be odd.
pub fn compatible_parity(shape: Shape) -> bool {
    (shape.m + shape.n + shape.m * shape.s) % 2 == 1
}

/// Searches for row and column orderings of `h` whose composition is one
/// cycle. Returns `None` for block-diagonal arrays, for shapes failing
/// [`compatible_parity`], and when the allowed orderings are exhausted.
pub fn find_compatible_pair(h: &HeffterArray, simplicity: Simplicity) -> Option<(SystemOrdering, SystemOrdering)> {
    if is_block_diagonal(h) || !compatible_parity(h.shape()) {
        return None;
    }
    let m = h.modulus();
    let (rows, cols) = (h.row_parts(), h.col_parts());
    let pass = |gen: fn(&[i64], Modulus) -> Vec<Vec<i64>>| {
        let rc: Vec<_> = rows.iter().map(|p| gen(p, m)).collect();
        let cc: Vec<_> = cols.iter().map(|p| gen(p, m)).collect();
        find_compatible_orderings(m, &rc, &cc)
    };
    let found = pass(simple_orderings).or_else(|| match simplicity {
        Simplicity::Required => None,
        Simplicity::Preferred => pass(cyclic_orderings),
    })?;
    let omega_r = SystemOrdering::new(m, found.0).ok()?;
    let omega_c = SystemOrdering::new(m, found.1).ok()?;
    Some((omega_r, omega_c))
}

/// Depth-first search over explicit candidate lists, one list per row part
/// and per column part. Rows are fixed first; each column choice defines the
/// composition on that column's elements, and any cycle that closes early
/// prunes the branch.
pub fn find_compatible_orderings(
    modulus: Modulus,
    row_candidates: &[Vec<Vec<i64>>],
    col_candidates: &[Vec<Vec<i64>>],
) -> Option<(Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    let size = modulus.get() as usize;
    let n: usize = col_candidates.iter().map(|c| c.first().map_or(0, Vec::len)).sum();
    let mut st = PairSearch {
        m: modulus,
        n,
        rows: row_candidates,
        cols: col_candidates,
        omega_r: vec![usize::MAX; size],
        pi: vec![usize::MAX; size],
        row_pick: vec![0; row_candidates.len()],
        col_pick: vec![0; col_candidates.len()],
    };
    if !st.rows_dfs(0) {
        return None;
    }
    let pick = |cands: &[Vec<Vec<i64>>], p: &[usize]| cands.iter().zip(p).map(|(c, &k)| c[k].clone()).collect();
    Some((pick(row_candidates, &st.row_pick), pick(col_candidates, &st.col_pick)))
}

struct PairSearch<'a> {
    m: Modulus,
    n: usize,
    rows: &'a [Vec<Vec<i64>>],
    cols: &'a [Vec<Vec<i64>>],
    omega_r: Vec<usize>,
    pi: Vec<usize>,
    row_pick: Vec<usize>,
    col_pick: Vec<usize>,
}

impl PairSearch<'_> {
    fn idx(&self, v: i64) -> usize {
        self.m.residue(v) as usize
    }

    fn rows_dfs(&mut self, r: usize) -> bool {
        if r == self.rows.len() {
            return self.cols_dfs(0);
        }
        for k in 0..self.rows[r].len() {
            let cyc = &self.rows[r][k];
            for (a, b) in cyc.iter().zip(cyc.iter().cycle().skip(1)) {
                let (a, b) = (self.idx(*a), self.idx(*b));
                self.omega_r[a] = b;
            }
            self.row_pick[r] = k;
            if self.rows_dfs(r + 1) {
                return true;
            }
        }
        false
    }

    fn cols_dfs(&mut self, c: usize) -> bool {
        if c == self.cols.len() {
            return true;
        }
        for k in 0..self.cols[c].len() {
            let cyc = &self.cols[c][k];
            let pairs: Vec<(usize, usize)> =
                cyc.iter().zip(cyc.iter().cycle().skip(1)).map(|(a, b)| (self.idx(*a), self.idx(*b))).collect();
            for &(a, b) in &pairs {
                self.pi[a] = self.omega_r[b];
            }
            if pairs.iter().all(|&(a, _)| !self.closes_early(a)) {
                self.col_pick[c] = k;
                if self.cols_dfs(c + 1) {
                    return true;
                }
            }
            for &(a, _) in &pairs {
                self.pi[a] = usize::MAX;
            }
        }
        false
    }

    fn closes_early(&self, start: usize) -> bool {
        let mut x = self.pi[start];
        let mut len = 1;
        while x != usize::MAX && x != start {
            x = self.pi[x];
            len += 1;
        }
        x == start && len < self.n
    }
}
