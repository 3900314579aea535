//! Embeddings of `K_M` derived from one-face current graphs.
//!
//! The currents met along the single face, in order, form the rotation at
//! vertex 0; vertex `i` uses the same rotation shifted by `i`. The faces need
//! no tracing: a current-graph vertex whose outgoing currents have partial
//! sums `s_1, ..., s_k` yields the `M` translates of `(0, s_1, ..., s_{k-1})`.
//! Row vertices give color `A`, column vertices color `B`.

mod certificate;
mod verify;

use std::fmt;

use crate::algebra::Modulus;
use crate::current_graphs::{
    check_kcl, check_signed_unique_currents, check_unique_currents, current_cycles, kcl_defects, CurrentGraph,
    RotationSystem,
};
use crate::cycle_systems::EdgeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Graph, Sign};
use crate::orderings::partial_sums;
use crate::surface_maps::{
    euler_summary, face_currents, trace_faces, trace_faces_signed, trace_rotation, trace_rotation_signed,
    EmbeddingSummary, Sense,
};

pub use certificate::Certificate;
pub use verify::{verify_biembedding, BiembeddingReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    A,
    B,
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::A => "A",
            Color::B => "B",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredFace {
    pub color: Color,
    /// Residues in `0..M`.
    pub vertices: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedEmbedding {
    modulus: Modulus,
    s: usize,
    t: usize,
    rotation_at_zero: Vec<i64>,
    bases: Vec<(Color, Vec<i64>)>,
    summary: EmbeddingSummary,
    /// Sign of each difference `r` in `1..=(M-1)/2`, for signed derivations.
    lifted: Option<Vec<Sign>>,
}

impl DerivedEmbedding {
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// Length of the color `A` faces.
    pub fn s(&self) -> usize {
        self.s
    }

    /// Length of the color `B` faces.
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn rotation_at_zero(&self) -> &[i64] {
        &self.rotation_at_zero
    }

    /// Rotation at vertex `i` as a list of neighbors.
    pub fn rotation_at(&self, i: i64) -> Vec<i64> {
        self.rotation_at_zero.iter().map(|&r| self.modulus.residue(r + i)).collect()
    }

    /// One base face per current-graph vertex, rows first.
    pub fn bases(&self) -> &[(Color, Vec<i64>)] {
        &self.bases
    }

    /// All faces: for each base in turn, translates `0..M`.
    pub fn faces(&self) -> Vec<ColoredFace> {
        let m = self.modulus;
        self.bases
            .iter()
            .flat_map(|(c, b)| {
                (0..m.get()).map(move |i| ColoredFace {
                    color: *c,
                    vertices: b.iter().map(|&v| m.residue(v + i)).collect(),
                })
            })
            .collect()
    }

    pub fn face_count(&self) -> usize {
        self.bases.len() * self.modulus.get() as usize
    }

    pub fn summary(&self) -> EmbeddingSummary {
        self.summary
    }

    pub fn is_orientable(&self) -> bool {
        self.summary.is_orientable()
    }

    pub fn lifted_signature(&self) -> Option<&[Sign]> {
        self.lifted.as_deref()
    }
}

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Axiom(what()))
    }
}

fn check_kcl_named(g: &CurrentGraph) -> Result<()> {
    require(check_kcl(g), || {
        let bad: Vec<String> = kcl_defects(g).iter().map(|&(v, s)| format!("{} (sum {s})", g.vertex_label(v))).collect();
        format!("KCL fails at {}", bad.join(", "))
    })
}

fn bases(g: &CurrentGraph, rho: &RotationSystem) -> Vec<(Color, Vec<i64>)> {
    let m = g.modulus();
    current_cycles(g, rho)
        .iter()
        .enumerate()
        .map(|(v, cyc)| {
            let mut base = vec![0];
            base.extend(partial_sums(cyc, m).iter().take(cyc.len().saturating_sub(1)).map(|&x| m.residue(x)));
            (if v < g.rows() { Color::A } else { Color::B }, base)
        })
        .collect()
}

fn degrees(g: &CurrentGraph) -> Result<(usize, usize)> {
    g.biregular_degrees().ok_or_else(|| Error::Domain("current graph is not biregular".into()))
}

fn complete_graph_counts(m: Modulus) -> (usize, usize) {
    let v = m.get() as usize;
    (v, v * (v - 1) / 2)
}

/// Derives the orientable embedding of `K_M`. Refuses, naming the axiom,
/// unless KCL, unique currents and a single face all hold.
pub fn derive(g: &CurrentGraph, rho: &RotationSystem) -> Result<DerivedEmbedding> {
    let (s, t) = degrees(g)?;
    check_kcl_named(g)?;
    require(check_unique_currents(g), || "currents are not unique".into())?;
    let trace = trace_faces(g, rho)?;
    require(trace.is_monofacial(), || format!("embedding is not monofacial ({} faces)", trace.faces.len()))?;
    let rotation_at_zero = face_currents(g, &trace.faces[0]);
    let bases = bases(g, rho);
    let (v, e) = complete_graph_counts(g.modulus());
    let summary = euler_summary(v, e, bases.len() * v, true)?;
    Ok(DerivedEmbedding { modulus: g.modulus(), s, t, rotation_at_zero, bases, summary, lifted: None })
}

/// Derives the nonorientable embedding from an unbalanced signed current
/// graph. The rotation at 0 lists the currents along the single face,
/// negated where the face leaves in the clockwise sense.
pub fn derive_signed(g: &CurrentGraph, rho: &RotationSystem) -> Result<DerivedEmbedding> {
    let (s, t) = degrees(g)?;
    check_kcl_named(g)?;
    require(check_signed_unique_currents(g), || "currents are not signed-unique".into())?;
    require(g.negative_cycle().is_some(), || "signature is balanced; the derived surface would be orientable".into())?;
    let trace = trace_faces_signed(g, rho)?;
    require(trace.is_monofacial(), || format!("signed embedding is not monofacial ({} faces)", trace.faces.len()))?;
    let m = g.modulus();
    let face = &trace.faces[0];
    let rotation_at_zero: Vec<i64> = face
        .darts
        .iter()
        .zip(&face.senses)
        .map(|(&d, &sense)| {
            let c = g.dart_current(d);
            if sense == Sense::Anticlockwise {
                c
            } else {
                m.reduce(-c)
            }
        })
        .collect();
    let mut seen = vec![false; m.get() as usize];
    for &r in &rotation_at_zero {
        if std::mem::replace(&mut seen[m.residue(r) as usize], true) {
            return Err(Error::Inconsistent(format!("current {r} repeats in the rotation at 0")));
        }
    }
    // The face crosses every edge twice; the lifted edges are twisted
    // exactly when both crossings use the same dart.
    let mut seen_dart = vec![false; 2 * g.edges().len()];
    let mut lifted = vec![Sign::Positive; m.half() as usize + 1];
    for &d in &face.darts {
        if std::mem::replace(&mut seen_dart[d], true) {
            lifted[g.edges()[d / 2].current.unsigned_abs() as usize] = Sign::Negative;
        }
    }
    let bases = bases(g, rho);
    let (v, e) = complete_graph_counts(m);
    let summary = euler_summary(v, e, bases.len() * v, false)?;
    Ok(DerivedEmbedding { modulus: m, s, t, rotation_at_zero, bases, summary, lifted: Some(lifted) })
}

/// The faces of each color as closed-trail decompositions `(A, B)`.
pub fn extract_cycle_systems(d: &DerivedEmbedding) -> (EdgeDecomposition, EdgeDecomposition) {
    let pick = |c: Color| d.bases.iter().filter(|(k, _)| *k == c).map(|(_, b)| b.clone()).collect();
    (EdgeDecomposition::from_bases(d.modulus, pick(Color::A)), EdgeDecomposition::from_bases(d.modulus, pick(Color::B)))
}

/// The developed map on `K_M`: the graph with edge `(a, b)` for `a < b`,
/// the translated rotations, and the edge signs. A signed derivation uses
/// its lifted signature: edge `{i, i + r}` is negative when the single face
/// of the current graph crosses the edge carrying `±r` twice along the same
/// dart. Otherwise all edges are positive.
pub fn developed_map(d: &DerivedEmbedding) -> Result<(Graph, RotationSystem, Vec<Sign>)> {
    let m = d.modulus;
    let size = m.get() as usize;
    let mut edges = Vec::with_capacity(size * (size - 1) / 2);
    let mut dart_of = vec![usize::MAX; size * size];
    for a in 0..size {
        for b in a + 1..size {
            let e = edges.len();
            edges.push((a, b));
            dart_of[a * size + b] = 2 * e;
            dart_of[b * size + a] = 2 * e + 1;
        }
    }
    let graph = Graph::new(size, edges)?;
    let rotations: Vec<Vec<usize>> = (0..size)
        .map(|u| d.rotation_at(u as i64).iter().map(|&w| dart_of[u * size + w as usize]).collect())
        .collect();
    let rho = RotationSystem::new(&graph, rotations)?;
    let signs = graph
        .edges()
        .iter()
        .map(|&(a, b)| match &d.lifted {
            None => Sign::Positive,
            Some(lifted) => lifted[m.reduce(b as i64 - a as i64).unsigned_abs() as usize],
        })
        .collect();
    Ok((graph, rho, signs))
}

/// Faces found by full face tracing of the [`developed_map`], as vertex
/// sequences.
pub fn trace_developed(d: &DerivedEmbedding) -> Result<Vec<Vec<i64>>> {
    let (graph, rho, signs) = developed_map(d)?;
    let trace = if d.lifted.is_some() { trace_rotation_signed(&graph, &rho, &signs)? } else { trace_rotation(&graph, &rho)? };
    Ok(trace.faces.iter().map(|f| f.darts.iter().map(|&x| graph.tail(x) as i64).collect()).collect())
}

/// A closed walk in `K_M` with an odd number of twisted edges, as vertices,
/// witnessing that a signed derivation is nonorientable.
pub fn twisted_cycle(d: &DerivedEmbedding) -> Result<Option<Vec<i64>>> {
    let (graph, _, signs) = developed_map(d)?;
    let Some(cycle) = graph.negative_cycle(&signs) else { return Ok(None) };
    Ok(Some(walk_vertices(&graph, &cycle)))
}

fn walk_vertices(graph: &Graph, edge_ids: &[usize]) -> Vec<i64> {
    let edges = graph.edges();
    let Some(&first) = edge_ids.first() else { return Vec::new() };
    let (a, b) = edges[first];
    // start at the endpoint not shared with the next edge
    let mut at = match edge_ids.get(1).map(|&e| edges[e]) {
        Some((x, y)) if a == x || a == y => b,
        _ => a,
    };
    let mut out = Vec::with_capacity(edge_ids.len());
    for &e in edge_ids {
        out.push(at as i64);
        let (x, y) = edges[e];
        at = if x == at { y } else { x };
    }
    out
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::current_graphs::fixtures::{k34, signed_k34};
    use crate::current_graphs::rotation_from_orderings;
    use crate::orderings::fixtures::{omega_c, omega_r};
    use crate::surface_maps::fixtures::signed_rotation;

    pub fn k25() -> DerivedEmbedding {
        let g = k34();
        derive(&g, &rotation_from_orderings(&g, &omega_r(), &omega_c()).unwrap()).unwrap()
    }

    pub fn k25_signed() -> DerivedEmbedding {
        derive_signed(&signed_k34(), &signed_rotation()).unwrap()
    }
}
