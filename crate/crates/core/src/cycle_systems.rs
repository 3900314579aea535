//! Cyclic decompositions of `E(K_M)` developed from ordered Heffter systems.
//!
//! An ordered part `(a_1, ..., a_k)` with partial sums `s_i` gives the base
//! trail `(0, s_1, ..., s_{k-1})`; its `M` translates use every difference
//! `±a_i` once each, so a whole system covers each edge of `K_M` once.
//! Vertices are residues in `0..M`.

use std::fmt;

use crate::algebra::Modulus;
use crate::orderings::{partial_sums, SystemOrdering};

/// One translate of a base trail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedTrail {
    pub part: usize,
    pub translate: i64,
    pub vertices: Vec<i64>,
}

impl ClosedTrail {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Closing edge included.
    pub fn edges(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    pub fn is_cycle(&self) -> bool {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        v.windows(2).all(|w| w[0] != w[1])
    }
}

/// Closed trails stored as base trails plus `(part, translate)` references.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeDecomposition {
    modulus: Modulus,
    bases: Vec<Vec<i64>>,
    trails: Vec<(usize, i64)>,
}

impl EdgeDecomposition {
    /// All `M` translates of every base; base vertices are reduced to `0..M`.
    pub fn from_bases(modulus: Modulus, bases: Vec<Vec<i64>>) -> Self {
        let bases: Vec<Vec<i64>> = bases.iter().map(|b| b.iter().map(|&v| modulus.residue(v)).collect()).collect();
        let trails = (0..bases.len()).flat_map(|p| (0..modulus.get()).map(move |i| (p, i))).collect();
        EdgeDecomposition { modulus, bases, trails }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn bases(&self) -> &[Vec<i64>] {
        &self.bases
    }

    pub fn len(&self) -> usize {
        self.trails.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trails.is_empty()
    }

    pub fn trail(&self, idx: usize) -> ClosedTrail {
        let (part, translate) = self.trails[idx];
        let m = self.modulus;
        ClosedTrail { part, translate, vertices: self.bases[part].iter().map(|&v| m.residue(v + translate)).collect() }
    }

    pub fn trails(&self) -> impl Iterator<Item = ClosedTrail> + '_ {
        (0..self.trails.len()).map(|i| self.trail(i))
    }

    pub fn remove(&mut self, idx: usize) -> ClosedTrail {
        let t = self.trail(idx);
        self.trails.remove(idx);
        t
    }

    /// Consecutive differences around each base trail, closing edge included.
    pub fn base_differences(&self) -> Vec<i64> {
        let m = self.modulus;
        self.bases
            .iter()
            .flat_map(|b| (0..b.len()).map(move |i| m.reduce(b[(i + 1) % b.len()] - b[i])))
            .collect()
    }
}

/// Develops each ordered part into its base trail and all `M` translates.
///
/// ```
/// use heffter::algebra::Modulus;
/// use heffter::cycle_systems::{develop, is_cycle_system, verify_decomposition};
/// use heffter::orderings::SystemOrdering;
/// let m = Modulus::new(7).unwrap();
/// let d = develop(&SystemOrdering::new(m, vec![vec![1, 2, -3]]).unwrap());
/// assert_eq!(d.len(), 7);
/// assert!(verify_decomposition(&d) && is_cycle_system(&d));
/// ```
pub fn develop(omega: &SystemOrdering) -> EdgeDecomposition {
    develop_parts(omega.modulus(), omega.cycles())
}

/// [`develop`] without requiring the parts to form a Heffter system.
pub fn develop_parts(modulus: Modulus, cycles: &[Vec<i64>]) -> EdgeDecomposition {
    let bases = cycles
        .iter()
        .map(|c| {
            let mut b = vec![0];
            b.extend(partial_sums(c, modulus).iter().take(c.len().saturating_sub(1)));
            b
        })
        .collect();
    EdgeDecomposition::from_bases(modulus, bases)
}

/// True iff every edge of `K_M` lies on exactly one trail and no trail
/// uses a loop.
pub fn verify_decomposition(d: &EdgeDecomposition) -> bool {
    let m = d.modulus.get() as usize;
    let mut tally = vec![0u32; m * m];
    for t in d.trails() {
        for (a, b) in t.edges() {
            if a == b {
                return false;
            }
            let (a, b) = (a.min(b) as usize, a.max(b) as usize);
            tally[a * m + b] += 1;
        }
    }
    (0..m).all(|a| (a + 1..m).all(|b| tally[a * m + b] == 1))
}

/// True iff every trail visits pairwise distinct vertices.
pub fn is_cycle_system(d: &EdgeDecomposition) -> bool {
    d.bases.iter().all(|b| {
        let mut v = b.clone();
        v.sort_unstable();
        v.windows(2).all(|w| w[0] != w[1])
    })
}

impl fmt::Display for EdgeDecomposition {
    /// One `trail <part> <translate>: v0 v1 ...` line per trail, parts 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in self.trails() {
            writeln!(f, "trail {} {}: {}", t.part + 1, t.translate, crate::text::join(&t.vertices))?;
        }
        Ok(())
    }
}
