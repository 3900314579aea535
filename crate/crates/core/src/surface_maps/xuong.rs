use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{Graph, Sign, UnionFind};

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Domain("graph is disconnected".into()))
    }
}

/// A spanning tree whose cotree components all have an even number of
/// edges, found by enumerating spanning trees; such a tree exists exactly
/// when the graph has an orientable one-face embedding.
pub fn xuong_monofacial_exists(g: &Graph) -> Result<Option<Vec<usize>>> {
    require_connected(g)?;
    if (g.vertex_count() + g.edge_count()) % 2 == 0 {
        return Ok(None);
    }
    Ok(g.for_each_spanning_tree(|tree| {
        let cotree = complement(g, tree);
        if g.edge_components(&cotree).iter().all(|c| c.len() % 2 == 0) {
            ControlFlow::Break(tree.to_vec())
        } else {
            ControlFlow::Continue(())
        }
    }))
}

/// A spanning tree with no odd cotree component, after switching so that
/// the tree is positive. A component is odd when it has an odd number of
/// edges and each of its negative edges is a bridge splitting it into two
/// parts with odd edge counts.
pub fn signed_monofacial_exists(g: &Graph, signs: &[Sign]) -> Result<Option<Vec<usize>>> {
    require_connected(g)?;
    if signs.len() != g.edge_count() {
        return Err(Error::Domain(format!("{} signs for {} edges", signs.len(), g.edge_count())));
    }
    Ok(g.for_each_spanning_tree(|tree| {
        let switched = tree_positive(g, tree, signs);
        let cotree = complement(g, tree);
        if g.edge_components(&cotree).iter().all(|c| !is_odd_component(g, c, &switched)) {
            ControlFlow::Break(tree.to_vec())
        } else {
            ControlFlow::Continue(())
        }
    }))
}

fn complement(g: &Graph, tree: &[usize]) -> Vec<usize> {
    let mut in_tree = vec![false; g.edge_count()];
    for &e in tree {
        in_tree[e] = true;
    }
    (0..g.edge_count()).filter(|&e| !in_tree[e]).collect()
}

/// Signs after switching at the vertices an odd number of negative tree
/// edges away from vertex 0.
fn tree_positive(g: &Graph, tree: &[usize], signs: &[Sign]) -> Vec<Sign> {
    let mut parity: Vec<Option<bool>> = vec![None; g.vertex_count()];
    parity[0] = Some(false);
    let mut changed = true;
    while changed {
        changed = false;
        for &e in tree {
            let (u, v) = g.edges()[e];
            let neg = signs[e].is_negative();
            match (parity[u], parity[v]) {
                (Some(p), None) => parity[v] = Some(p ^ neg),
                (None, Some(p)) => parity[u] = Some(p ^ neg),
                _ => continue,
            }
            changed = true;
        }
    }
    g.edges()
        .iter()
        .zip(signs)
        .map(|(&(u, v), &s)| if parity[u] != parity[v] { s.flip() } else { s })
        .collect()
}

fn is_odd_component(g: &Graph, comp: &[usize], signs: &[Sign]) -> bool {
    if comp.len() % 2 == 0 {
        return false;
    }
    comp.iter().filter(|&&e| signs[e].is_negative()).all(|&bridge| {
        let mut uf = UnionFind::new(g.vertex_count());
        for &e in comp.iter().filter(|&&e| e != bridge) {
            let (u, v) = g.edges()[e];
            uf.union(u, v);
        }
        let (a, b) = g.edges()[bridge];
        let (ra, rb) = (uf.find(a), uf.find(b));
        if ra == rb {
            return false;
        }
        let side = |r: usize, uf: &mut UnionFind| {
            comp.iter().filter(|&&e| e != bridge && uf.find(g.edges()[e].0) == r).count()
        };
        side(ra, &mut uf) % 2 == 1 && side(rb, &mut uf) % 2 == 1
    })
}
