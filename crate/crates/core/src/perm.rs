//! Permutations of `0..n` and of the nonzero elements of `Z_M`.

use std::fmt;

use crate::algebra::Modulus;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    /// Builds from disjoint cycles; points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<Option<usize>> = vec![None; n];
        for cyc in cycles {
            for (k, &x) in cyc.iter().enumerate() {
                let y = cyc[(k + 1) % cyc.len()];
                if x >= n || y >= n {
                    return Err(Error::Domain(format!("point {} outside 0..{n}", x.max(y))));
                }
                if image[x].replace(y).is_some() {
                    return Err(Error::Domain(format!("point {x} appears in two cycles")));
                }
            }
        }
        Ok(Permutation { image: image.iter().enumerate().map(|(i, y)| y.unwrap_or(i)).collect() })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Permutation { image: other.image.iter().map(|&y| self.image[y]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { image: inv }
    }

    /// All cycles including fixed points, each starting at its least point,
    /// ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.image[start];
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.image[x];
            }
            out.push(cyc);
        }
        out
    }

    /// Sorted cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }
}

/// A permutation of `Z_M \ {0}`, addressed by canonical values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResiduePermutation {
    modulus: Modulus,
    perm: Permutation,
}

impl ResiduePermutation {
    #[inline]
    fn index(modulus: Modulus, v: i64) -> usize {
        (modulus.residue(v) - 1) as usize
    }

    #[inline]
    fn value(&self, i: usize) -> i64 {
        self.modulus.reduce(i as i64 + 1)
    }

    pub fn from_cycles(modulus: Modulus, cycles: &[Vec<i64>]) -> Result<Self> {
        if cycles.iter().flatten().any(|&v| modulus.reduce(v) == 0) {
            return Err(Error::Domain("0 cannot be permuted".into()));
        }
        let idx: Vec<Vec<usize>> = cycles.iter().map(|c| c.iter().map(|&v| Self::index(modulus, v)).collect()).collect();
        let n = (modulus.get() - 1) as usize;
        Ok(ResiduePermutation { modulus, perm: Permutation::from_cycles(n, &idx)? })
    }

    /// The map `x -> -x`.
    pub fn negation(modulus: Modulus) -> Self {
        let n = (modulus.get() - 1) as usize;
        let image = (0..n).map(|i| Self::index(modulus, -(i as i64 + 1))).collect();
        ResiduePermutation { modulus, perm: Permutation { image } }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn apply(&self, v: i64) -> i64 {
        self.value(self.perm.apply(Self::index(self.modulus, v)))
    }

    pub fn compose(&self, other: &ResiduePermutation) -> Result<ResiduePermutation> {
        if self.modulus != other.modulus {
            return Err(Error::MixedModulus(self.modulus.get(), other.modulus.get()));
        }
        Ok(ResiduePermutation { modulus: self.modulus, perm: self.perm.compose(&other.perm) })
    }

    pub fn inverse(&self) -> ResiduePermutation {
        ResiduePermutation { modulus: self.modulus, perm: self.perm.inverse() }
    }

    /// Cycles of length at least two, each rotated to start at its least
    /// canonical value, sorted by that value.
    pub fn cycles(&self) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = self
            .perm
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| rotate_to_min(&c.iter().map(|&i| self.value(i)).collect::<Vec<_>>()))
            .collect();
        out.sort();
        out
    }

    /// The cycle through `v` starting at `v`.
    pub fn cycle_of(&self, v: i64) -> Vec<i64> {
        let start = self.modulus.reduce(v);
        let mut cyc = vec![start];
        let mut x = self.apply(start);
        while x != start {
            cyc.push(x);
            x = self.apply(x);
        }
        cyc
    }
}

impl fmt::Display for ResiduePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cycles() {
            let body: Vec<String> = c.iter().map(i64::to_string).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

/// Rotates a cyclic sequence so that its least element comes first.
pub fn rotate_to_min<T: Ord + Clone>(seq: &[T]) -> Vec<T> {
    match seq.iter().enumerate().min_by(|a, b| a.1.cmp(b.1)) {
        Some((k, _)) => seq[k..].iter().chain(&seq[..k]).cloned().collect(),
        None => Vec::new(),
    }
}

/// The lexicographically least rotation of a cyclic sequence, which may
/// repeat elements.
pub fn least_rotation<T: Ord + Clone>(seq: &[T]) -> Vec<T> {
    (0..seq.len().max(1))
        .map(|k| seq[k.min(seq.len())..].iter().chain(&seq[..k.min(seq.len())]).cloned().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// Least rotation of the sequence or of its reversal.
pub fn least_dihedral<T: Ord + Clone>(seq: &[T]) -> Vec<T> {
    let rev: Vec<T> = seq.iter().rev().cloned().collect();
    least_rotation(seq).min(least_rotation(&rev))
}
