//! Small multigraphs with explicit darts.
//!
//! Edge `e` joins `edges[e].0` to `edges[e].1`; its darts are `2e` (tail at
//! the first endpoint) and `2e + 1` (tail at the second). Loops and parallel
//! edges are allowed.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), rank: vec![0; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// An undirected multigraph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= vertex_count || v >= vertex_count) {
            return Err(Error::Domain(format!("edge ({u},{v}) leaves the vertex range 0..{vertex_count}")));
        }
        Ok(Graph { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    #[inline]
    pub fn tail(&self, dart: usize) -> usize {
        let (u, v) = self.edges[dart / 2];
        if dart % 2 == 0 {
            u
        } else {
            v
        }
    }

    #[inline]
    pub fn head(&self, dart: usize) -> usize {
        self.tail(dart ^ 1)
    }

    /// Darts leaving each vertex, in increasing dart order.
    pub fn out_darts(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count];
        for d in 0..self.dart_count() {
            out[self.tail(d)].push(d);
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut uf = UnionFind::new(self.vertex_count);
        let mut parts = self.vertex_count;
        for &(u, v) in &self.edges {
            if uf.union(u, v) {
                parts -= 1;
            }
        }
        parts == 1
    }

    /// Calls `visit` with the edge indices of every spanning tree, in
    /// lexicographic order of the sorted index lists. Stops early when
    /// `visit` breaks. Disconnected graphs have no spanning trees.
    pub fn for_each_spanning_tree<B>(&self, mut visit: impl FnMut(&[usize]) -> ControlFlow<B>) -> Option<B> {
        if self.vertex_count == 0 {
            return None;
        }
        let need = self.vertex_count - 1;
        let mut chosen = Vec::with_capacity(need);
        let uf = UnionFind::new(self.vertex_count);
        match self.spanning_rec(0, need, uf, &mut chosen, &mut visit) {
            ControlFlow::Break(b) => Some(b),
            ControlFlow::Continue(()) => None,
        }
    }

    fn spanning_rec<B>(
        &self,
        next: usize,
        need: usize,
        uf: UnionFind,
        chosen: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if chosen.len() == need {
            return visit(chosen);
        }
        if self.edges.len() - next < need - chosen.len() {
            return ControlFlow::Continue(());
        }
        let (u, v) = self.edges[next];
        let mut with = uf.clone();
        if with.union(u, v) {
            chosen.push(next);
            self.spanning_rec(next + 1, need, with, chosen, visit)?;
            chosen.pop();
        }
        self.spanning_rec(next + 1, need, uf, chosen, visit)
    }

    pub fn spanning_tree_count(&self) -> usize {
        let mut count = 0;
        self.for_each_spanning_tree::<()>(|_| {
            count += 1;
            ControlFlow::Continue(())
        });
        count
    }

    /// Groups `edge_ids` into connected components (by shared endpoints).
    /// Components are returned in order of their least edge index.
    pub fn edge_components(&self, edge_ids: &[usize]) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.vertex_count);
        for &e in edge_ids {
            let (u, v) = self.edges[e];
            uf.union(u, v);
        }
        let mut roots: Vec<usize> = Vec::new();
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut sorted = edge_ids.to_vec();
        sorted.sort_unstable();
        for e in sorted {
            let r = uf.find(self.edges[e].0);
            match roots.iter().position(|&x| x == r) {
                Some(i) => comps[i].push(e),
                None => {
                    roots.push(r);
                    comps.push(vec![e]);
                }
            }
        }
        comps
    }

    /// Searches for a cycle whose sign product is negative.
    ///
    /// Returns `None` when the signature is balanced, otherwise the edge
    /// indices of a closed walk with an odd number of negative edges. A
    /// negative loop is itself such a cycle.
    pub fn negative_cycle(&self, signs: &[Sign]) -> Option<Vec<usize>> {
        assert_eq!(signs.len(), self.edges.len());
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.vertex_count];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, e));
            if u != v {
                adj[v].push((u, e));
            }
        }
        let mut parity: Vec<Option<bool>> = vec![None; self.vertex_count];
        let mut via: Vec<Option<usize>> = vec![None; self.vertex_count];
        for root in 0..self.vertex_count {
            if parity[root].is_some() {
                continue;
            }
            parity[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &(w, e) in &adj[u] {
                    let want = parity[u].unwrap() ^ signs[e].is_negative();
                    match parity[w] {
                        None => {
                            parity[w] = Some(want);
                            via[w] = Some(e);
                            queue.push_back(w);
                        }
                        Some(p) if p != want => {
                            let mut cycle = self.tree_path(&via, u, w);
                            cycle.push(e);
                            return Some(cycle);
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        None
    }

    /// Edges of the BFS-tree path between `a` and `b`.
    fn tree_path(&self, via: &[Option<usize>], a: usize, b: usize) -> Vec<usize> {
        let climb = |mut x: usize| {
            let mut path = vec![x];
            while let Some(e) = via[x] {
                let (p, q) = self.edges[e];
                x = if p == x { q } else { p };
                path.push(x);
            }
            path
        };
        let pa = climb(a);
        let pb = climb(b);
        let common = pa.iter().find(|x| pb.contains(x)).copied().expect("same BFS tree");
        let mut edges = Vec::new();
        for path in [&pa, &pb] {
            for &x in path.iter().take_while(|&&x| x != common) {
                edges.push(via[x].unwrap());
            }
        }
        edges
    }

    /// A set of vertices whose local switching makes every edge positive, or
    /// `None` when the signature is unbalanced.
    pub fn balancing_switch(&self, signs: &[Sign]) -> Option<Vec<usize>> {
        if self.negative_cycle(signs).is_some() {
            return None;
        }
        let mut parity = vec![None; self.vertex_count];
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.vertex_count];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        for root in 0..self.vertex_count {
            if parity[root].is_some() {
                continue;
            }
            parity[root] = Some(false);
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &(w, e) in &adj[u] {
                    if parity[w].is_none() {
                        parity[w] = Some(parity[u].unwrap() ^ signs[e].is_negative());
                        stack.push(w);
                    }
                }
            }
        }
        Some((0..self.vertex_count).filter(|&v| parity[v] == Some(true)).collect())
    }
}
