//! Cyclic orderings of the parts of a Heffter system.
//!
//! A Heffter system `D(M,k)` partitions a half-set of `Z_M` into zero-sum
//! parts of size `k`. Ordering each part cyclically gives a permutation of
//! the half-set; two such permutations are compatible when their composition
//! is a single cycle.

mod alspach;
mod format;
mod search;

use std::collections::BTreeSet;

use crate::algebra::{HalfSet, Modulus};
use crate::error::{Error, Result};
use crate::perm::ResiduePermutation;
use crate::text::join;

pub use alspach::{alspach_check, alspach_sweep, AlspachReport};
pub use format::OrderingFile;
pub use search::{
    compatible_parity, cyclic_orderings, find_compatible_orderings, find_compatible_pair, find_simple_ordering, simple_orderings,
    Simplicity,
};

/// A partition of a half-set into zero-sum parts of equal size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeffterSystem {
    modulus: Modulus,
    k: usize,
    parts: Vec<Vec<i64>>,
}

impl HeffterSystem {
    /// Canonicalizes and checks the parts; each part is stored sorted.
    pub fn new(modulus: Modulus, parts: Vec<Vec<i64>>) -> Result<Self> {
        let k = parts.first().map_or(0, Vec::len);
        if k == 0 {
            return Err(Error::Axiom("a Heffter system needs nonempty parts".into()));
        }
        let mut seen = BTreeSet::new();
        let mut canon = Vec::with_capacity(parts.len());
        for (p, part) in parts.iter().enumerate() {
            if part.len() != k {
                return Err(Error::Axiom(format!("part {} has {} elements, expected {k}", p + 1, part.len())));
            }
            let mut c: Vec<i64> = part.iter().map(|&v| modulus.reduce(v)).collect();
            if modulus.reduce(c.iter().sum()) != 0 {
                return Err(Error::Axiom(format!("part {} ({}) does not sum to 0 mod {modulus}", p + 1, join(&c))));
            }
            for &v in &c {
                if v == 0 || !seen.insert(v.abs()) {
                    return Err(Error::Axiom(format!("part {} breaks the half-set property at {v}", p + 1)));
                }
            }
            c.sort_unstable();
            canon.push(c);
        }
        if seen.len() as i64 != modulus.half() {
            return Err(Error::Axiom(format!(
                "parts cover {} of the {} required supports",
                seen.len(),
                modulus.half()
            )));
        }
        Ok(HeffterSystem { modulus, k, parts: canon })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// Part size.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn parts(&self) -> &[Vec<i64>] {
        &self.parts
    }

    pub fn half_set(&self) -> HalfSet {
        HalfSet::new(self.modulus, self.parts.iter().flatten().copied()).expect("checked at construction")
    }
}

/// One cyclic ordering per part of a Heffter system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemOrdering {
    system: HeffterSystem,
    cycles: Vec<Vec<i64>>,
}

impl SystemOrdering {
    /// The `i`-th cycle orders the `i`-th part.
    pub fn new(modulus: Modulus, cycles: Vec<Vec<i64>>) -> Result<Self> {
        let cycles: Vec<Vec<i64>> = cycles.iter().map(|c| c.iter().map(|&v| modulus.reduce(v)).collect()).collect();
        let system = HeffterSystem::new(modulus, cycles.clone())?;
        Ok(SystemOrdering { system, cycles })
    }

    pub fn system(&self) -> &HeffterSystem {
        &self.system
    }

    pub fn modulus(&self) -> Modulus {
        self.system.modulus
    }

    pub fn cycles(&self) -> &[Vec<i64>] {
        &self.cycles
    }

    /// Same ordering with each cycle rotated to start at its least value.
    pub fn normalized(&self) -> SystemOrdering {
        SystemOrdering { cycles: self.cycles.iter().map(|c| crate::perm::rotate_to_min(c)).collect(), ..self.clone() }
    }

    pub fn induced_permutation(&self) -> ResiduePermutation {
        induced_permutation(self)
    }

    pub fn is_simple(&self) -> bool {
        self.cycles.iter().all(|c| is_simple(c, self.modulus()))
    }

    /// Checks that cycle `i` orders exactly the elements of `parts[i]`.
    pub fn orders_parts(&self, parts: &[Vec<i64>]) -> bool {
        let m = self.modulus();
        parts.len() == self.cycles.len()
            && parts.iter().zip(&self.cycles).all(|(p, c)| {
                let mut a: Vec<i64> = p.iter().map(|&v| m.reduce(v)).collect();
                let mut b = c.clone();
                a.sort_unstable();
                b.sort_unstable();
                a == b
            })
    }
}

/// `(s_1, ..., s_k)` with `s_i = a_1 + ... + a_i` in canonical form.
///
/// ```
/// use heffter::algebra::Modulus;
/// use heffter::orderings::partial_sums;
/// let m = Modulus::new(25).unwrap();
/// assert_eq!(partial_sums(&[1, -2, -10, 11], m), vec![1, -1, -11, 0]);
/// ```
pub fn partial_sums(seq: &[i64], modulus: Modulus) -> Vec<i64> {
    seq.iter()
        .scan(0i64, |acc, &v| {
            *acc = modulus.reduce(*acc + modulus.reduce(v));
            Some(*acc)
        })
        .collect()
}

/// True iff the partial sums are pairwise distinct, which for a zero-sum
/// cyclic sequence means no cyclically consecutive block sums to zero.
pub fn is_simple(seq: &[i64], modulus: Modulus) -> bool {
    let mut seen = vec![false; modulus.get() as usize];
    partial_sums(seq, modulus).into_iter().all(|s| !std::mem::replace(&mut seen[modulus.residue(s) as usize], true))
}

/// Maps each element to its cyclic successor within its part; elements
/// outside the half-set are fixed.
pub fn induced_permutation(omega: &SystemOrdering) -> ResiduePermutation {
    ResiduePermutation::from_cycles(omega.modulus(), &omega.cycles).expect("parts are disjoint and nonzero")
}

/// True iff `ω_r ∘ ω_c` is one cycle through the whole half-set.
pub fn are_compatible(omega_r: &SystemOrdering, omega_c: &SystemOrdering) -> Result<bool> {
    let (mr, mc) = (omega_r.modulus(), omega_c.modulus());
    if mr != mc {
        return Err(Error::MixedModulus(mr.get(), mc.get()));
    }
    let l = omega_r.system.half_set();
    if l != omega_c.system.half_set() {
        return Err(Error::Domain("row and column orderings act on different half-sets".into()));
    }
    let pi = omega_r.induced_permutation().compose(&omega_c.induced_permutation())?;
    let start = l.iter().next().expect("half-set is nonempty");
    Ok(pi.cycle_of(start).len() == l.len())
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn omega_r() -> SystemOrdering {
        let m = Modulus::new(25).unwrap();
        SystemOrdering::new(m, vec![vec![1, -2, -10, 11], vec![-8, 6, -3, 5], vec![7, -4, -12, 9]]).unwrap()
    }

    pub fn omega_c() -> SystemOrdering {
        let m = Modulus::new(25).unwrap();
        SystemOrdering::new(m, vec![vec![1, -8, 7], vec![-2, 6, -4], vec![-10, -3, -12], vec![11, 5, 9]]).unwrap()
    }
}
