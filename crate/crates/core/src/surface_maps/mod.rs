//! Face tracing for rotation systems, with and without signatures.
//!
//! An orientable face is an orbit of `ρ ∘ τ` on darts. A signed trace walks
//! states `(dart, sense)`: after crossing a dart the sense flips if its edge
//! is negative, and the walk leaves the head along `ρ_v(τd)` when the sense
//! is anticlockwise and along `ρ_v⁻¹(τd)` when it is clockwise. Every
//! geometric face is met twice, once in each direction; the state
//! `(τd, ¬(σ xor neg d))` is the mirror of `(d, σ)` and only the first of
//! each mirror pair is reported.

mod format;
mod xuong;

use crate::current_graphs::{current_cycles, CurrentGraph, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{Graph, Sign};
use crate::orderings::is_simple;

pub use format::{format_faces, parse_graph, SignedGraph};
pub use xuong::{signed_monofacial_exists, xuong_monofacial_exists};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sense {
    Anticlockwise,
    Clockwise,
}

impl Sense {
    pub fn flip(self) -> Sense {
        self.flip_if(true)
    }

    fn flip_if(self, cond: bool) -> Sense {
        match (self, cond) {
            (s, false) => s,
            (Sense::Anticlockwise, true) => Sense::Clockwise,
            (Sense::Clockwise, true) => Sense::Anticlockwise,
        }
    }
}

/// A face as the darts it crosses and the sense in which each is left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<usize>,
    pub senses: Vec<Sense>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceTrace {
    pub faces: Vec<Face>,
    /// False when traced with an unbalanced signature.
    pub orientable: bool,
}

impl FaceTrace {
    pub fn is_monofacial(&self) -> bool {
        is_monofacial(self)
    }

    pub fn summary(&self, g: &Graph) -> Result<EmbeddingSummary> {
        euler_summary(g.vertex_count(), g.edge_count(), self.faces.len(), self.orientable)
    }
}

/// Faces of an orientable rotation system, each started from its least
/// unvisited dart.
pub fn trace_rotation(g: &Graph, rho: &RotationSystem) -> Result<FaceTrace> {
    rho.check(g)?;
    let (succ, _) = rho.successors(g.dart_count());
    let mut seen = vec![false; g.dart_count()];
    let mut faces = Vec::new();
    for start in 0..g.dart_count() {
        if seen[start] {
            continue;
        }
        let mut darts = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            darts.push(d);
            d = succ[d ^ 1];
        }
        let senses = vec![Sense::Anticlockwise; darts.len()];
        faces.push(Face { darts, senses });
    }
    Ok(FaceTrace { faces, orientable: true })
}

/// The modified walk over `(dart, sense)` states. States are scanned with
/// all anticlockwise states first, so an all-positive signature gives the
/// same faces as [`trace_rotation`].
pub fn trace_rotation_signed(g: &Graph, rho: &RotationSystem, signs: &[Sign]) -> Result<FaceTrace> {
    rho.check(g)?;
    if signs.len() != g.edge_count() {
        return Err(Error::Domain(format!("{} signs for {} edges", signs.len(), g.edge_count())));
    }
    let (succ, pred) = rho.successors(g.dart_count());
    let neg = |d: usize| signs[d / 2].is_negative();
    let idx = |d: usize, s: Sense| 2 * d + (s == Sense::Clockwise) as usize;
    let mut seen = vec![false; 2 * g.dart_count()];
    let mut faces = Vec::new();
    for sense in [Sense::Anticlockwise, Sense::Clockwise] {
        for start in 0..g.dart_count() {
            if seen[idx(start, sense)] {
                continue;
            }
            let (mut d, mut s) = (start, sense);
            let mut face = Face { darts: Vec::new(), senses: Vec::new() };
            loop {
                seen[idx(d, s)] = true;
                seen[idx(d ^ 1, s.flip_if(neg(d)).flip())] = true;
                face.darts.push(d);
                face.senses.push(s);
                let s2 = s.flip_if(neg(d));
                let back = d ^ 1;
                d = if s2 == Sense::Anticlockwise { succ[back] } else { pred[back] };
                s = s2;
                if (d, s) == (start, sense) {
                    break;
                }
            }
            faces.push(face);
        }
    }
    let orientable = g.negative_cycle(signs).is_none();
    Ok(FaceTrace { faces, orientable })
}

/// Orientable trace of the underlying graph; edge signs are ignored.
pub fn trace_faces(g: &CurrentGraph, rho: &RotationSystem) -> Result<FaceTrace> {
    trace_rotation(&g.graph(), rho)
}

pub fn trace_faces_signed(g: &CurrentGraph, rho: &RotationSystem) -> Result<FaceTrace> {
    trace_rotation_signed(&g.graph(), rho, &g.signs())
}

pub fn is_monofacial(trace: &FaceTrace) -> bool {
    trace.faces.len() == 1
}

/// Current on each dart of a face, as the face is walked.
pub fn face_currents(g: &CurrentGraph, face: &Face) -> Vec<i64> {
    face.darts.iter().map(|&d| g.dart_current(d)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Surface {
    Orientable { genus: u64 },
    Nonorientable { crosscaps: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbeddingSummary {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub surface: Surface,
}

impl EmbeddingSummary {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }

    pub fn is_orientable(&self) -> bool {
        matches!(self.surface, Surface::Orientable { .. })
    }
}

/// Genus from `V - E + F = 2 - 2g`, or crosscaps from `V - E + F = 2 - c`.
///
/// ```
/// use heffter::surface_maps::{euler_summary, Surface};
/// let s = euler_summary(25, 300, 175, true).unwrap();
/// assert_eq!(s.surface, Surface::Orientable { genus: 51 });
/// assert!(euler_summary(3, 3, 1, true).is_err());
/// ```
pub fn euler_summary(v: usize, e: usize, f: usize, orientable: bool) -> Result<EmbeddingSummary> {
    let chi = v as i64 - e as i64 + f as i64;
    let surface = if orientable {
        if chi > 2 || chi % 2 != 0 {
            return Err(Error::Inconsistent(format!("Euler characteristic {chi} gives no orientable genus")));
        }
        Surface::Orientable { genus: ((2 - chi) / 2) as u64 }
    } else {
        if chi > 1 {
            return Err(Error::Inconsistent(format!("Euler characteristic {chi} gives no crosscap number")));
        }
        Surface::Nonorientable { crosscaps: (2 - chi) as u64 }
    };
    Ok(EmbeddingSummary { vertices: v, edges: e, faces: f, surface })
}

/// Partial sums of the currents leaving `v`, in rotation order, are
/// pairwise distinct.
pub fn local_rotation_simple(g: &CurrentGraph, rho: &RotationSystem, v: usize) -> bool {
    let rot: Vec<i64> = rho.local(v).iter().map(|&d| g.dart_current(d)).collect();
    is_simple(&rot, g.modulus())
}

pub fn rotation_is_simple(g: &CurrentGraph, rho: &RotationSystem) -> bool {
    current_cycles(g, rho).iter().all(|c| is_simple(c, g.modulus()))
}
