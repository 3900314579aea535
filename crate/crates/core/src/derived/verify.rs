use std::collections::VecDeque;

use super::{Color, ColoredFace};
use crate::algebra::Modulus;
use crate::graph::UnionFind;
use crate::report::{Location, ValidationReport, ViolationKind};
use crate::surface_maps::{euler_summary, EmbeddingSummary};

/// Outcome of [`verify_biembedding`]. Face simplicity does not affect the
/// verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiembeddingReport {
    pub report: ValidationReport,
    /// Every face visits pairwise distinct vertices.
    pub simple_faces: bool,
    /// Found by orienting faces consistently; `None` when coverage fails.
    pub orientable: Option<bool>,
    pub summary: Option<EmbeddingSummary>,
}

impl BiembeddingReport {
    pub fn verdict(&self) -> bool {
        self.report.verdict()
    }
}

/// Checks that the faces form a 2-face-colored embedding of `K_M`:
/// color `A` faces have length `s`, color `B` faces length `t`, every edge
/// lies on exactly one face of each color, and the face corners around each
/// vertex close up into a single cycle. Orientability comes from trying to
/// orient all faces coherently.
pub fn verify_biembedding(modulus: Modulus, s: usize, t: usize, faces: &[ColoredFace]) -> BiembeddingReport {
    let m = modulus.get() as usize;
    let mut report = ValidationReport::default();
    let mut simple_faces = true;
    let mut tally = vec![[0u32; 2]; m * m];
    let mut well_formed = true;

    for (i, f) in faces.iter().enumerate() {
        let loc = Location::Face(i + 1);
        let want = if f.color == Color::A { s } else { t };
        if f.vertices.len() != want {
            report.push(
                ViolationKind::FaceSize,
                loc.clone(),
                format!("color {} face has length {}, expected {want}", f.color, f.vertices.len()),
            );
        }
        if f.vertices.iter().any(|&v| v < 0 || v as usize >= m) || f.vertices.len() < 2 {
            report.push(ViolationKind::EdgeCoverage, loc, "vertex out of range or degenerate face");
            well_formed = false;
            continue;
        }
        let mut sorted = f.vertices.clone();
        sorted.sort_unstable();
        simple_faces &= sorted.windows(2).all(|w| w[0] != w[1]);
        for (a, b) in face_edges(&f.vertices) {
            if a == b {
                report.push(ViolationKind::EdgeCoverage, Location::Face(i + 1), format!("loop at {a}"));
                well_formed = false;
                continue;
            }
            let (x, y) = (a.min(b) as usize, a.max(b) as usize);
            tally[x * m + y][f.color as usize] += 1;
        }
    }
    for a in 0..m {
        for b in a + 1..m {
            for (c, color) in [Color::A, Color::B].into_iter().enumerate() {
                let n = tally[a * m + b][c];
                if n != 1 {
                    well_formed = false;
                    report.push(
                        ViolationKind::EdgeCoverage,
                        Location::Edge(a as i64, b as i64),
                        format!("on {n} faces of color {color}"),
                    );
                }
            }
        }
    }

    let mut orientable = None;
    let mut summary = None;
    if well_formed {
        check_links(m, faces, &mut report);
        let o = coherent_orientation(m, faces);
        orientable = Some(o);
        match euler_summary(m, m * (m - 1) / 2, faces.len(), o) {
            Ok(sm) => summary = Some(sm),
            Err(e) => report.push(ViolationKind::Euler, Location::Global, e.to_string()),
        }
    }
    BiembeddingReport { report, simple_faces, orientable, summary }
}

fn face_edges(vs: &[i64]) -> impl Iterator<Item = (i64, i64)> + '_ {
    (0..vs.len()).map(move |k| (vs[k], vs[(k + 1) % vs.len()]))
}

/// At each vertex, the corners `(prev, next)` must chain all `M - 1`
/// neighbors into one cycle.
fn check_links(m: usize, faces: &[ColoredFace], report: &mut ValidationReport) {
    let mut corners: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
    for f in faces {
        let k = f.vertices.len();
        for i in 0..k {
            let v = f.vertices[i] as usize;
            corners[v].push((f.vertices[(i + k - 1) % k] as usize, f.vertices[(i + 1) % k] as usize));
        }
    }
    for (v, cs) in corners.iter().enumerate() {
        let mut degree = vec![0u32; m];
        let mut uf = UnionFind::new(m);
        let mut parts = m - 1;
        for &(a, b) in cs {
            degree[a] += 1;
            degree[b] += 1;
            if uf.union(a, b) {
                parts -= 1;
            }
        }
        let regular = (0..m).all(|u| degree[u] == if u == v { 0 } else { 2 });
        if !regular || parts != 1 {
            report.push(
                ViolationKind::PinchPoint,
                Location::Vertex(v as i64),
                format!("faces around the vertex form {parts} cyclic fans"),
            );
        }
    }
}

/// Tries to orient every face so that each edge is crossed in opposite
/// directions by its two faces.
fn coherent_orientation(m: usize, faces: &[ColoredFace]) -> bool {
    let mut uses: Vec<Vec<(usize, bool)>> = vec![Vec::new(); m * m];
    for (i, f) in faces.iter().enumerate() {
        for (a, b) in face_edges(&f.vertices) {
            let (x, y) = (a.min(b) as usize, a.max(b) as usize);
            uses[x * m + y].push((i, a < b));
        }
    }
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); faces.len()];
    for u in uses.iter().filter(|u| u.len() == 2) {
        let ((f, df), (g, dg)) = (u[0], u[1]);
        // same direction forces opposite orientations
        let flip = df == dg;
        adj[f].push((g, flip));
        adj[g].push((f, flip));
    }
    let mut orient: Vec<Option<bool>> = vec![None; faces.len()];
    for root in 0..faces.len() {
        if orient[root].is_some() {
            continue;
        }
        orient[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(f) = queue.pop_front() {
            for &(g, flip) in &adj[f] {
                let want = orient[f].unwrap() ^ flip;
                match orient[g] {
                    None => {
                        orient[g] = Some(want);
                        queue.push_back(g);
                    }
                    Some(o) if o != want => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}
