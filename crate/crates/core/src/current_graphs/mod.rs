//! Bipartite current graphs built from (weak) Heffter arrays.
//!
//! Row `i` is vertex `i` and column `j` is vertex `m + j`. Edge `e` runs
//! from its row to its column; dart `2e` leaves the row and carries the
//! stored current `κ`, dart `2e + 1` leaves the column and carries `-κ` on a
//! positive edge and `κ` on a negative one.

mod format;
mod rotation;

use std::collections::BTreeMap;

use crate::algebra::Modulus;
use crate::arrays::{Grid, HeffterArray, Shape, WeakCell, WeakHeffterArray};
use crate::error::{Error, Result};
use crate::graph::{Graph, Sign};

pub use rotation::{current_cycles, rotation_from_orderings, RotationSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurrentEdge {
    pub row: usize,
    pub col: usize,
    /// Current on the dart leaving the row, canonical.
    pub current: i64,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurrentGraph {
    m: usize,
    n: usize,
    modulus: Modulus,
    edges: Vec<CurrentEdge>,
}

impl CurrentGraph {
    pub fn new(m: usize, n: usize, modulus: Modulus, edges: Vec<CurrentEdge>) -> Result<Self> {
        let mut edges = edges;
        for e in &mut edges {
            if e.row >= m || e.col >= n {
                return Err(Error::Domain(format!("edge R{} C{} outside {m}x{n}", e.row + 1, e.col + 1)));
            }
            e.current = modulus.reduce(e.current);
        }
        Ok(CurrentGraph { m, n, modulus, edges })
    }

    /// One positive edge per filled cell, in row-major order.
    pub fn from_array(h: &HeffterArray) -> Self {
        let m = h.modulus();
        let edges = h
            .entries()
            .map(|(row, col, v)| CurrentEdge { row, col, current: m.reduce(v), sign: Sign::Positive })
            .collect();
        CurrentGraph { m: h.shape().m, n: h.shape().n, modulus: m, edges }
    }

    /// Plain cells give positive edges; sign-split cells give negative edges
    /// carrying the row value on both darts.
    pub fn from_weak_array(w: &WeakHeffterArray) -> Self {
        let m = w.modulus();
        let edges = w
            .entries()
            .map(|(row, col, c)| CurrentEdge {
                row,
                col,
                current: m.reduce(c.row_value()),
                sign: if c.is_plain() { Sign::Positive } else { Sign::Negative },
            })
            .collect();
        CurrentGraph { m: w.shape().m, n: w.shape().n, modulus: m, edges }
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.m + self.n
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn edges(&self) -> &[CurrentEdge] {
        &self.edges
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.edges.iter().map(|e| e.sign).collect()
    }

    pub fn is_signed(&self) -> bool {
        self.edges.iter().any(|e| e.sign.is_negative())
    }

    /// `R1..Rm` then `C1..Cn`.
    pub fn vertex_label(&self, v: usize) -> String {
        if v < self.m {
            format!("R{}", v + 1)
        } else {
            format!("C{}", v - self.m + 1)
        }
    }

    pub fn graph(&self) -> Graph {
        Graph::new(self.vertex_count(), self.edges.iter().map(|e| (e.row, self.m + e.col)).collect())
            .expect("endpoints checked at construction")
    }

    pub fn tail(&self, dart: usize) -> usize {
        let e = &self.edges[dart / 2];
        if dart % 2 == 0 {
            e.row
        } else {
            self.m + e.col
        }
    }

    pub fn dart_current(&self, dart: usize) -> i64 {
        let e = &self.edges[dart / 2];
        if dart % 2 == 0 || e.sign.is_negative() {
            e.current
        } else {
            self.modulus.reduce(-e.current)
        }
    }

    /// Darts leaving each vertex, in edge order.
    pub fn out_darts(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count()];
        for d in 0..2 * self.edges.len() {
            out[self.tail(d)].push(d);
        }
        out
    }

    /// `(s, t)` when every row has degree `s` and every column degree `t`.
    pub fn biregular_degrees(&self) -> Option<(usize, usize)> {
        let deg: Vec<usize> = self.out_darts().iter().map(Vec::len).collect();
        let (rows, cols) = deg.split_at(self.m);
        let s = *rows.first()?;
        let t = *cols.first()?;
        (rows.iter().all(|&d| d == s) && cols.iter().all(|&d| d == t)).then_some((s, t))
    }

    /// Reads the currents back into a grid; fails on parallel edges or
    /// negative edges.
    pub fn to_array(&self) -> Result<HeffterArray> {
        if self.is_signed() {
            return Err(Error::Domain("signed graph; use to_weak_array".into()));
        }
        let w = self.to_weak_array()?;
        HeffterArray::new(w.shape(), w.grid().map(|c| c.row_value()))
    }

    pub fn to_weak_array(&self) -> Result<WeakHeffterArray> {
        let (s, t) = self.biregular_degrees().ok_or_else(|| Error::Domain("graph is not biregular".into()))?;
        let mut cells: Vec<Option<WeakCell>> = vec![None; self.m * self.n];
        for e in &self.edges {
            let col_value = if e.sign.is_negative() { -e.current } else { e.current };
            if cells[e.row * self.n + e.col].replace(WeakCell::new(e.current, col_value)?).is_some() {
                return Err(Error::Domain(format!("parallel edges between R{} and C{}", e.row + 1, e.col + 1)));
            }
        }
        WeakHeffterArray::new(Shape::new(self.m, self.n, s, t), Grid::new(self.m, self.n, cells)?)
    }

    /// Switches at `v`: flips the signs of its edges and negates the currents
    /// on darts leaving `v`, so every other dart keeps its current.
    pub fn local_switch(&self, v: usize) -> Result<CurrentGraph> {
        if v >= self.vertex_count() {
            return Err(Error::Domain(format!("no vertex {v} in a graph with {} vertices", self.vertex_count())));
        }
        let mut g = self.clone();
        for e in &mut g.edges {
            if e.row == v {
                e.sign = e.sign.flip();
                e.current = self.modulus.reduce(-e.current);
            } else if self.m + e.col == v {
                e.sign = e.sign.flip();
            }
        }
        Ok(g)
    }

    /// Edge ids of a cycle with an odd number of negative edges.
    pub fn negative_cycle(&self) -> Option<Vec<usize>> {
        self.graph().negative_cycle(&self.signs())
    }
}

/// Vertices whose outgoing currents do not sum to 0, with the offending sum.
pub fn kcl_defects(g: &CurrentGraph) -> Vec<(usize, i64)> {
    g.out_darts()
        .iter()
        .enumerate()
        .filter_map(|(v, ds)| {
            let sum = g.modulus.reduce(ds.iter().map(|&d| g.dart_current(d)).sum());
            (sum != 0).then_some((v, sum))
        })
        .collect()
}

pub fn check_kcl(g: &CurrentGraph) -> bool {
    kcl_defects(g).is_empty()
}

/// True iff the dart currents are exactly the nonzero elements, once each.
pub fn check_unique_currents(g: &CurrentGraph) -> bool {
    let m = g.modulus;
    let mut seen = vec![false; m.get() as usize];
    seen[0] = true;
    let all = (0..2 * g.edges.len()).all(|d| !std::mem::replace(&mut seen[m.residue(g.dart_current(d)) as usize], true));
    all && seen.iter().all(|&b| b)
}

/// Each positive edge carries a distinct pair `±κ`, each negative edge a
/// current `κ` on both darts with `-κ` absent, and together the edges use
/// every support `1..=(M-1)/2` exactly once.
pub fn check_signed_unique_currents(g: &CurrentGraph) -> bool {
    let m = g.modulus;
    let mut supports: BTreeMap<i64, usize> = BTreeMap::new();
    for e in &g.edges {
        if e.current == 0 {
            return false;
        }
        *supports.entry(e.current.abs()).or_default() += 1;
    }
    supports.len() as i64 == m.half() && supports.values().all(|&c| c == 1)
}

pub fn is_balanced(g: &CurrentGraph) -> bool {
    g.negative_cycle().is_none()
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::arrays::fixtures::h3x4;
    use crate::arrays::fixtures::weak3x4;

    pub fn k34() -> CurrentGraph {
        CurrentGraph::from_array(&h3x4())
    }

    pub fn signed_k34() -> CurrentGraph {
        CurrentGraph::from_weak_array(&weak3x4())
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::arrays::fixtures::{block_diagonal_pair, h3x4, h5k4};
    use crate::arrays::fixtures::weak3x4;

    #[test]
    fn plain_graph_from_array() {
        let g = k34();
        assert_eq!(g.edges().len(), 12);
        assert_eq!(g.biregular_degrees(), Some((4, 3)));
        assert!(check_kcl(&g) && check_unique_currents(&g) && check_signed_unique_currents(&g));
        let c4: Vec<i64> = g.out_darts()[6].iter().map(|&d| g.dart_current(d)).collect();
        let mut sorted = c4.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![-11, -9, -5]);
        assert!(g.graph().is_connected());
        assert_eq!(g.to_array().unwrap(), h3x4());
    }

    #[test]
    fn square_with_empty_cells() {
        let g = CurrentGraph::from_array(&h5k4());
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edges().len(), 20);
        assert_eq!(g.biregular_degrees(), Some((4, 4)));
        assert_eq!(g.to_array().unwrap(), h5k4());
    }

    #[test]
    fn block_diagonal_is_disconnected() {
        assert!(!CurrentGraph::from_array(&block_diagonal_pair()).graph().is_connected());
    }

    #[test]
    fn signed_graph_from_weak() {
        let g = signed_k34();
        let mut neg: Vec<i64> = g.edges().iter().filter(|e| e.sign.is_negative()).map(|e| e.current).collect();
        neg.sort_unstable();
        assert_eq!(neg, vec![-11, -8, 9, 10]);
        assert!(check_kcl(&g));
        assert!(check_signed_unique_currents(&g));
        assert!(!check_unique_currents(&g));
        assert!(!is_balanced(&g));
        let cyc = g.negative_cycle().unwrap();
        let negs = cyc.iter().filter(|&&e| g.edges()[e].sign.is_negative()).count();
        assert_eq!(negs % 2, 1);
        assert_eq!(g.to_weak_array().unwrap(), weak3x4());
    }

    #[test]
    fn plain_weak_matches_plain() {
        assert_eq!(CurrentGraph::from_weak_array(&h3x4().to_weak()), k34());
    }

    #[test]
    fn one_cell_made_plain() {
        let mut w = weak3x4();
        w.set(1, 3, Some(WeakCell::plain(-8)));
        let g = CurrentGraph::from_weak_array(&w);
        assert_eq!(g.edges().iter().filter(|e| e.sign.is_negative()).count(), 3);
        // column 4 no longer sums to zero under column values
        assert!(!check_kcl(&g));
        assert!(check_signed_unique_currents(&g));
    }

    #[test]
    fn perturbed_current() {
        let mut edges = k34().edges().to_vec();
        edges[0].current += 1;
        let g = CurrentGraph::new(3, 4, Modulus::new(25).unwrap(), edges).unwrap();
        let bad: Vec<usize> = kcl_defects(&g).iter().map(|x| x.0).collect();
        assert_eq!(bad, vec![0, 3]);
        assert!(!check_unique_currents(&g));
    }

    #[test]
    fn repeated_currents() {
        let m = Modulus::new(5).unwrap();
        let e = |row, col, current| CurrentEdge { row, col, current, sign: Sign::Positive };
        let g = CurrentGraph::new(1, 2, m, vec![e(0, 0, 2), e(0, 1, 2)]).unwrap();
        assert!(!check_unique_currents(&g));
        assert!(!check_signed_unique_currents(&g));
        let ok = CurrentGraph::new(1, 2, m, vec![e(0, 0, 1), e(0, 1, 2)]).unwrap();
        assert!(check_unique_currents(&ok));
    }

    #[test]
    fn negative_support_collision() {
        let m = Modulus::new(5).unwrap();
        let g = CurrentGraph::new(
            1,
            2,
            m,
            vec![
                CurrentEdge { row: 0, col: 0, current: 2, sign: Sign::Positive },
                CurrentEdge { row: 0, col: 1, current: -2, sign: Sign::Negative },
            ],
        )
        .unwrap();
        assert!(!check_signed_unique_currents(&g));
    }

    #[test]
    fn switching() {
        let g = signed_k34();
        for v in 0..7 {
            let s = g.local_switch(v).unwrap();
            assert_eq!(s.local_switch(v).unwrap(), g);
            assert_eq!(is_balanced(&s), is_balanced(&g));
            assert!(check_kcl(&s));
            // darts not leaving v keep their currents
            for d in 0..24 {
                if g.tail(d) != v {
                    assert_eq!(s.dart_current(d), g.dart_current(d));
                } else {
                    assert_eq!(s.dart_current(d), -g.dart_current(d));
                }
            }
        }
        assert!(g.local_switch(7).is_err());
    }

    #[test]
    fn switching_a_cocycle_clears_signs() {
        // all edges at R1 negative: a cut, hence balanced
        let mut g = k34();
        for e in &mut g.edges {
            if e.row == 0 {
                e.sign = Sign::Negative;
            }
        }
        assert!(is_balanced(&g));
        assert!(!g.local_switch(0).unwrap().is_signed());
        // with currents kept consistent, switching back recovers the plain graph
        let valid = k34().local_switch(0).unwrap();
        assert!(valid.is_signed() && is_balanced(&valid) && check_kcl(&valid));
        assert_eq!(valid.local_switch(0).unwrap(), k34());
    }

    #[test]
    fn single_negative_edge_tree() {
        let m = Modulus::new(3).unwrap();
        let g = CurrentGraph::new(1, 1, m, vec![CurrentEdge { row: 0, col: 0, current: 1, sign: Sign::Negative }])
            .unwrap();
        assert!(is_balanced(&g));
        let mut digon = g.clone();
        digon.edges.push(CurrentEdge { sign: Sign::Positive, ..g.edges[0] });
        assert!(!is_balanced(&digon));
    }
}
