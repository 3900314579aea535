use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::partial_sums;
use crate::algebra::Modulus;
use crate::error::{Error, Result};

/// Orders `a` linearly so that its partial sums are pairwise distinct.
///
/// Candidates are tried in increasing canonical order, so the answer is
/// deterministic. `Ok(None)` means the search space was exhausted.
///
/// ```
/// use heffter::algebra::Modulus;
/// use heffter::orderings::alspach_check;
/// let m = Modulus::new(25).unwrap();
/// assert_eq!(alspach_check(m, &[1, 2, -3]).unwrap(), Some(vec![-3, 1, 2]));
/// ```
pub fn alspach_check(modulus: Modulus, a: &[i64]) -> Result<Option<Vec<i64>>> {
    let mut vals: Vec<i64> = a.iter().map(|&v| modulus.reduce(v)).collect();
    vals.sort_unstable();
    if vals.is_empty() {
        return Err(Error::Precondition("the set must be nonempty".into()));
    }
    if vals.contains(&0) {
        return Err(Error::Precondition("the set must not contain 0".into()));
    }
    if vals.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Precondition("elements must be distinct mod M".into()));
    }
    let mut seen = vec![false; modulus.get() as usize];
    // every ordering ends on the total, so no proper prefix may reach it
    let total = modulus.residue(vals.iter().sum());
    seen[total as usize] = true;
    let mut used = vec![false; vals.len()];
    let mut order = Vec::with_capacity(vals.len());
    Ok(linear_dfs(&vals, modulus, 0, &mut used, &mut seen, &mut order).then(|| {
        debug_assert!(distinct(&partial_sums(&order, modulus)));
        order
    }))
}

fn distinct(sums: &[i64]) -> bool {
    let mut s = sums.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

fn linear_dfs(vals: &[i64], m: Modulus, sum: i64, used: &mut [bool], seen: &mut [bool], order: &mut Vec<i64>) -> bool {
    if order.len() + 1 == vals.len() {
        order.extend(used.iter().zip(vals).filter(|(u, _)| !**u).map(|(_, &v)| v));
        return true;
    }
    for i in 0..vals.len() {
        if used[i] {
            continue;
        }
        let s = m.residue(sum + vals[i]);
        if seen[s as usize] {
            continue;
        }
        used[i] = true;
        seen[s as usize] = true;
        order.push(vals[i]);
        if linear_dfs(vals, m, s, used, seen, order) {
            return true;
        }
        order.pop();
        seen[s as usize] = false;
        used[i] = false;
    }
    false
}

/// Bitmask variant of [`linear_dfs`] for moduli below 64. `vals` holds
/// residues in `0..M`. `sums` starts with the final sum marked
/// taken: every ordering ends there, so no earlier prefix may reach it.
fn orderable(vals: &[u32], m: u32, used: u64, sums: u64, sum: u32) -> bool {
    let placed = used.count_ones() as usize;
    if placed + 1 == vals.len() {
        // the last element always lands on `total`
        return true;
    }
    for (i, &v) in vals.iter().enumerate() {
        if used >> i & 1 == 1 {
            continue;
        }
        let s = (sum + v) % m;
        if sums >> s & 1 == 1 {
            continue;
        }
        if orderable(vals, m, used | 1 << i, sums | 1 << s, s) {
            return true;
        }
    }
    false
}

fn mask_orderable(vals: &[u32], m: u32) -> bool {
    let total = vals.iter().sum::<u32>() % m;
    orderable(vals, m, 0, 1 << total, 0)
}

/// Outcome of checking every nonempty subset of `Z_M \ {0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlspachReport {
    pub modulus: Modulus,
    pub subsets: u64,
    /// Subsets with no valid ordering, sorted.
    pub failures: Vec<Vec<i64>>,
    pub elapsed: Duration,
}

impl AlspachReport {
    pub fn orderable(&self) -> u64 {
        self.subsets - self.failures.len() as u64
    }
}

/// Runs [`alspach_check`]'s search on all `2^(M-1) - 1` nonempty subsets,
/// using `jobs` worker threads (all cores when `None`).
///
/// Multiplying a set by a unit of `Z_M` multiplies its partial sums by the
/// same unit, so only the least mask of each orbit under the unit group is
/// searched; a failing representative contributes its whole orbit.
pub fn alspach_sweep(modulus: Modulus, jobs: Option<usize>) -> Result<AlspachReport> {
    let m = modulus.get();
    if m > 63 {
        return Err(Error::Parameter(format!("sweep supports moduli up to 63, got {m}")));
    }
    let elements: Vec<i64> = modulus.nonzero().collect();
    let index = |v: i64| elements.iter().position(|&e| e == modulus.reduce(v)).expect("nonzero residue");
    // unit u as the bit permutation it induces on masks
    let units: Vec<Vec<usize>> = (1..m)
        .filter(|&u| gcd(u, m) == 1)
        .map(|u| elements.iter().map(|&e| index(e * u)).collect())
        .collect();
    let image = |mask: u64, perm: &[usize]| -> u64 {
        (0..elements.len()).filter(|i| mask >> i & 1 == 1).fold(0, |acc, i| acc | 1 << perm[i])
    };
    let total = (1u64 << elements.len()) - 1;
    let start = Instant::now();
    let check = |mask: u64| -> Option<Vec<u64>> {
        if units.iter().any(|p| image(mask, p) < mask) {
            return None;
        }
        let vals: Vec<u32> = (0..elements.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| modulus.residue(elements[i]) as u32)
            .collect();
        if mask_orderable(&vals, m as u32) {
            return None;
        }
        let mut orbit: Vec<u64> = units.iter().map(|p| image(mask, p)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        Some(orbit)
    };
    let orbits: Vec<Vec<u64>> = match jobs {
        Some(1) => (1..=total).filter_map(check).collect(),
        _ => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .map_err(|e| Error::Parameter(e.to_string()))?;
            pool.install(|| (1..total + 1).into_par_iter().filter_map(check).collect())
        }
    };
    let mut failures: Vec<Vec<i64>> = orbits
        .into_iter()
        .flatten()
        .map(|mask| (0..elements.len()).filter(|i| mask >> i & 1 == 1).map(|i| elements[i]).collect())
        .collect();
    failures.sort();
    Ok(AlspachReport { modulus, subsets: total, failures, elapsed: start.elapsed() })
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let m = Modulus::new(25).unwrap();
        assert_eq!(alspach_check(m, &[1]).unwrap(), Some(vec![1]));
        let o = alspach_check(m, &[1, 2, -3]).unwrap().unwrap();
        assert!(distinct(&partial_sums(&o, m)));
        assert!(alspach_check(m, &[]).is_err());
        assert!(alspach_check(m, &[0, 1]).is_err());
        assert!(alspach_check(m, &[1, 26]).is_err());
    }

    #[test]
    fn sweep_three() {
        let r = alspach_sweep(Modulus::new(3).unwrap(), Some(1)).unwrap();
        assert_eq!(r.subsets, 3);
        assert!(r.failures.is_empty());
    }

    #[test]
    fn mask_search_agrees() {
        let m = Modulus::new(11).unwrap();
        let elements: Vec<i64> = m.nonzero().collect();
        for mask in 1u64..1 << 10 {
            let a: Vec<i64> = (0..10).filter(|i| mask >> i & 1 == 1).map(|i| elements[i]).collect();
            let vals: Vec<u32> = a.iter().map(|&v| m.residue(v) as u32).collect();
            let slow = alspach_check(m, &a).unwrap();
            assert_eq!(slow.is_some(), mask_orderable(&vals, 11));
            if let Some(o) = slow {
                assert!(distinct(&partial_sums(&o, m)));
            }
        }
    }

    #[test]
    fn sweep_eleven_parallel() {
        let r = alspach_sweep(Modulus::new(11).unwrap(), Some(2)).unwrap();
        assert_eq!(r.subsets, 1023);
        assert_eq!(r.orderable(), 1023);
    }

    #[test]
    fn orbit_sweep_matches_direct_checks() {
        for m in [9, 15] {
            let modulus = Modulus::new(m).unwrap();
            let elements: Vec<i64> = modulus.nonzero().collect();
            let direct: Vec<Vec<i64>> = (1u64..1 << elements.len())
                .map(|mask| (0..elements.len()).filter(|i| mask >> i & 1 == 1).map(|i| elements[i]).collect::<Vec<_>>())
                .filter(|a| alspach_check(modulus, a).unwrap().is_none())
                .collect();
            assert_eq!(alspach_sweep(modulus, Some(1)).unwrap().failures, direct);
        }
    }
}
