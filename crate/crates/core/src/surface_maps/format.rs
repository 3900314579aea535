//! Face dumps and the plain graph file read by the Xuong checks.
//!
//! A graph file is a `graph <V>` header followed by `edge <u> <v> [+|-]`
//! lines with 0-based vertices; a missing sign means `+`. A current-graph
//! dump is accepted as well.

use std::fmt::Write;

use super::FaceTrace;
use crate::current_graphs::{check_signed_unique_currents, check_unique_currents, CurrentGraph};
use crate::error::{parse_error, Result};
use crate::graph::{Graph, Sign};
use crate::text::parse_usize;

/// One `face <index> length <k>: ...` line per face, 1-based. Darts print as
/// currents when the currents are (signed-)unique, else as `e<id>+` for the
/// row-to-column dart and `e<id>-` for its reverse.
pub fn format_faces(g: &CurrentGraph, trace: &FaceTrace) -> String {
    let by_current = check_unique_currents(g) || check_signed_unique_currents(g);
    let mut out = String::new();
    for (i, f) in trace.faces.iter().enumerate() {
        let toks: Vec<String> = f
            .darts
            .iter()
            .map(|&d| {
                if by_current {
                    g.dart_current(d).to_string()
                } else {
                    format!("e{}{}", d / 2, if d % 2 == 0 { '+' } else { '-' })
                }
            })
            .collect();
        writeln!(out, "face {} length {}: {}", i + 1, f.len(), toks.join(" ")).expect("writing to a String");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    pub graph: Graph,
    pub signs: Vec<Sign>,
}

pub fn parse_graph(text: &str) -> Result<SignedGraph> {
    if text.trim_start().starts_with("current-graph") {
        let g: CurrentGraph = text.parse()?;
        return Ok(SignedGraph { graph: g.graph(), signs: g.signs() });
    }
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l)).filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines.next().ok_or_else(|| parse_error(1, "empty file"))?;
    let toks: Vec<&str> = header.split_ascii_whitespace().collect();
    if toks.len() != 2 || toks[0] != "graph" {
        return Err(parse_error(hl, "header must be `graph <V>` or `current-graph <m> <n> <M>`"));
    }
    let n = parse_usize(toks[1], hl)?;
    let mut edges = Vec::new();
    let mut signs = Vec::new();
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_ascii_whitespace().collect();
        if !(3..=4).contains(&toks.len()) || toks[0] != "edge" {
            return Err(parse_error(ln, "expected `edge <u> <v> [+|-]`"));
        }
        let (u, v) = (parse_usize(toks[1], ln)?, parse_usize(toks[2], ln)?);
        if u >= n || v >= n {
            return Err(parse_error(ln, format!("vertex out of range 0..{n}")));
        }
        signs.push(match toks.get(3) {
            None | Some(&"+") => Sign::Positive,
            Some(&"-") => Sign::Negative,
            Some(other) => return Err(parse_error(ln, format!("sign must be + or -, found `{other}`"))),
        });
        edges.push((u, v));
    }
    Ok(SignedGraph { graph: Graph::new(n, edges)?, signs })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::signed_rotation;
    use super::super::trace_faces_signed;
    use super::*;
    use crate::current_graphs::fixtures::signed_k34;
    use crate::current_graphs::CurrentEdge;
    use crate::error::Error;

    #[test]
    fn dump_signed_face() {
        let g = signed_k34();
        let t = trace_faces_signed(&g, &signed_rotation()).unwrap();
        let text = format_faces(&g, &t);
        assert_eq!(
            text,
            "face 1 length 24: 1 3 -11 7 1 -2 -8 -5 -3 -2 -4 7 -6 10 -4 -11 9 10 -8 -12 -6 9 5 -12\n"
        );
    }

    #[test]
    fn dump_by_edge_ids() {
        let m = crate::algebra::Modulus::new(5).unwrap();
        let e = CurrentEdge { row: 0, col: 0, current: 1, sign: Sign::Positive };
        let g = CurrentGraph::new(1, 1, m, vec![e]).unwrap();
        let t = super::super::trace_faces(&g, &crate::current_graphs::RotationSystem::new(&g.graph(), vec![vec![0], vec![1]]).unwrap())
            .unwrap();
        assert_eq!(format_faces(&g, &t), "face 1 length 2: e0+ e0-\n");
    }

    #[test]
    fn graph_files() {
        let sg = parse_graph("graph 3\nedge 0 1\nedge 1 2 -\n").unwrap();
        assert_eq!(sg.graph.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(sg.signs, vec![Sign::Positive, Sign::Negative]);
        let from_dump = parse_graph(&signed_k34().to_string()).unwrap();
        assert_eq!(from_dump.graph.edge_count(), 12);
        assert!(matches!(parse_graph("graph 2\nedge 0 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("graf 2\n"), Err(Error::Parse { line: 1, .. })));
    }
}
