//! Certificate text: a header
//! `biembedding M=<M> s=<s> t=<t> orientable=<0|1> genus=<g>` (or
//! `crosscaps=<c>` when nonorientable), then one face per line as a color
//! tag `A` or `B` followed by the vertex residues.

use std::fmt;
use std::str::FromStr;

use super::{verify_biembedding, BiembeddingReport, Color, ColoredFace, DerivedEmbedding};
use crate::algebra::Modulus;
use crate::error::{parse_error, Error, Result};
use crate::report::{Location, ViolationKind};
use crate::surface_maps::Surface;
use crate::text::{join, parse_int, parse_usize};

/// A standalone, checkable record of a 2-face-colored embedding of `K_M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub modulus: Modulus,
    pub s: usize,
    pub t: usize,
    /// The claimed surface.
    pub surface: Surface,
    pub faces: Vec<ColoredFace>,
}

impl Certificate {
    pub fn from_embedding(d: &DerivedEmbedding) -> Self {
        Certificate { modulus: d.modulus(), s: d.s(), t: d.t(), surface: d.summary().surface, faces: d.faces() }
    }

    /// Verifies the faces and checks the claimed surface against the one
    /// computed from them. A wrong claim is an `Euler` violation.
    pub fn verify(&self) -> BiembeddingReport {
        let mut r = verify_biembedding(self.modulus, self.s, self.t, &self.faces);
        if let Some(sm) = r.summary {
            if sm.surface != self.surface {
                r.report.push(
                    ViolationKind::Euler,
                    Location::Global,
                    format!(
                        "claimed {} but V - E + F = {} - {} + {} gives {}",
                        describe(self.surface),
                        sm.vertices,
                        sm.edges,
                        sm.faces,
                        describe(sm.surface)
                    ),
                );
            }
        }
        r
    }
}

fn describe(s: Surface) -> String {
    match s {
        Surface::Orientable { genus } => format!("orientable genus {genus}"),
        Surface::Nonorientable { crosscaps } => format!("nonorientable with {crosscaps} crosscaps"),
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tail = match self.surface {
            Surface::Orientable { genus } => format!("orientable=1 genus={genus}"),
            Surface::Nonorientable { crosscaps } => format!("orientable=0 crosscaps={crosscaps}"),
        };
        writeln!(f, "biembedding M={} s={} t={} {tail}", self.modulus, self.s, self.t)?;
        for face in &self.faces {
            writeln!(f, "{} {}", face.color, join(&face.vertices))?;
        }
        Ok(())
    }
}

fn field<'a>(tok: Option<&&'a str>, key: &str, line: usize) -> Result<&'a str> {
    tok.and_then(|t| t.strip_prefix(key)).and_then(|t| t.strip_prefix('=')).ok_or_else(|| {
        parse_error(line, format!("header must be `biembedding M=<M> s=<s> t=<t> orientable=<0|1> genus|crosscaps=<g>`, missing `{key}=`"))
    })
}

impl FromStr for Certificate {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l)).filter(|(_, l)| !l.trim().is_empty());
        let (hl, header) = lines.next().ok_or_else(|| parse_error(1, "empty file"))?;
        let toks: Vec<&str> = header.split_ascii_whitespace().collect();
        if toks.first() != Some(&"biembedding") || toks.len() != 6 {
            return Err(parse_error(hl, "header must start with `biembedding` and have five fields"));
        }
        let modulus = Modulus::new(parse_int(field(toks.get(1), "M", hl)?, hl)?).map_err(|e| parse_error(hl, e.to_string()))?;
        let s = parse_usize(field(toks.get(2), "s", hl)?, hl)?;
        let t = parse_usize(field(toks.get(3), "t", hl)?, hl)?;
        let surface = match field(toks.get(4), "orientable", hl)? {
            "1" => Surface::Orientable { genus: parse_usize(field(toks.get(5), "genus", hl)?, hl)? as u64 },
            "0" => Surface::Nonorientable { crosscaps: parse_usize(field(toks.get(5), "crosscaps", hl)?, hl)? as u64 },
            other => return Err(parse_error(hl, format!("orientable must be 0 or 1, found `{other}`"))),
        };
        let mut faces = Vec::new();
        for (ln, line) in lines {
            let mut it = line.split_ascii_whitespace();
            let color = match it.next() {
                Some("A") => Color::A,
                Some("B") => Color::B,
                _ => return Err(parse_error(ln, "face line must start with `A` or `B`")),
            };
            let vertices = it.map(|tok| parse_int(tok, ln)).collect::<Result<Vec<_>>>()?;
            faces.push(ColoredFace { color, vertices });
        }
        Ok(Certificate { modulus, s, t, surface, faces })
    }
}
