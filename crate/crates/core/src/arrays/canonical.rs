use super::{Grid, HeffterArray};

/// Sort key of a cell: filled cells by value, empty cells after all values.
fn key(c: Option<i64>) -> (u8, i64) {
    match c {
        Some(v) => (0, v),
        None => (1, 0),
    }
}

/// Lexicographically least representative (row-major, empty cells last)
/// under row permutations, column permutations and global negation.
///
/// For a fixed sign the least form is built row by row: the next row is the
/// one whose entries, sorted within each block of still-interchangeable
/// columns, give the least sequence. Entries of a Heffter array are
/// distinct, so the choice at each step is unique.
pub fn canonical_form(h: &HeffterArray) -> HeffterArray {
    let plus = canonical_grid(h.grid());
    let minus = canonical_grid(&h.grid().map(|v| -v));
    let flat = |g: &Grid<i64>| (0..g.rows()).flat_map(|i| g.row(i).map(key).collect::<Vec<_>>()).collect::<Vec<_>>();
    let grid = if flat(&minus) < flat(&plus) { minus } else { plus };
    HeffterArray::new(h.shape(), grid).expect("same shape")
}

fn canonical_grid(g: &Grid<i64>) -> Grid<i64> {
    let mut blocks: Vec<Vec<usize>> = vec![(0..g.cols()).collect()];
    let mut remaining: Vec<usize> = (0..g.rows()).collect();
    let mut row_order = Vec::with_capacity(g.rows());
    while !remaining.is_empty() {
        let seq = |r: usize| -> Vec<(u8, i64)> {
            blocks
                .iter()
                .flat_map(|b| {
                    let mut ks: Vec<(u8, i64)> = b.iter().map(|&j| key(g.get(r, j))).collect();
                    ks.sort_unstable();
                    ks
                })
                .collect()
        };
        let (pos, &best) = remaining.iter().enumerate().min_by_key(|&(_, &r)| seq(r)).expect("nonempty");
        remaining.remove(pos);
        row_order.push(best);
        blocks = blocks
            .into_iter()
            .flat_map(|mut b| {
                b.sort_by_key(|&j| key(g.get(best, j)));
                let (filled, empty): (Vec<usize>, Vec<usize>) = b.into_iter().partition(|&j| g.get(best, j).is_some());
                let mut out: Vec<Vec<usize>> = filled.into_iter().map(|j| vec![j]).collect();
                if !empty.is_empty() {
                    out.push(empty);
                }
                out
            })
            .collect();
    }
    let col_order: Vec<usize> = blocks.into_iter().flatten().collect();
    g.permuted(&row_order, &col_order)
}
