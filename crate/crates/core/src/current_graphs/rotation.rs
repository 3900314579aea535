use super::CurrentGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orderings::SystemOrdering;
use crate::perm::ResiduePermutation;

/// A cyclic order of the darts leaving each vertex, read anticlockwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    rotations: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Checks that `rotations[v]` lists each dart leaving `v` exactly once.
    pub fn new(g: &Graph, rotations: Vec<Vec<usize>>) -> Result<Self> {
        if rotations.len() != g.vertex_count() {
            return Err(Error::Domain(format!(
                "rotation has {} local rotations for {} vertices",
                rotations.len(),
                g.vertex_count()
            )));
        }
        for (v, (rot, out)) in rotations.iter().zip(g.out_darts()).enumerate() {
            let mut a = rot.clone();
            a.sort_unstable();
            if a != out {
                return Err(Error::Domain(format!("local rotation at vertex {v} is not a cyclic order of its darts")));
            }
        }
        Ok(RotationSystem { rotations })
    }

    /// Builds the rotation from the currents leaving each vertex.
    pub fn from_currents(g: &CurrentGraph, per_vertex: &[Vec<i64>]) -> Result<Self> {
        let m = g.modulus();
        let out = g.out_darts();
        if per_vertex.len() != out.len() {
            return Err(Error::Domain(format!("{} local rotations for {} vertices", per_vertex.len(), out.len())));
        }
        let mut rotations = Vec::with_capacity(out.len());
        for (v, (seq, darts)) in per_vertex.iter().zip(&out).enumerate() {
            let mut rot = Vec::with_capacity(seq.len());
            for &c in seq {
                let c = m.reduce(c);
                let mut hits = darts.iter().filter(|&&d| g.dart_current(d) == c);
                match (hits.next(), hits.next()) {
                    (Some(&d), None) => rot.push(d),
                    (None, _) => {
                        return Err(Error::Domain(format!("no dart with current {c} leaves {}", g.vertex_label(v))))
                    }
                    _ => return Err(Error::Domain(format!("current {c} is ambiguous at {}", g.vertex_label(v)))),
                }
            }
            rotations.push(rot);
        }
        RotationSystem::new(&g.graph(), rotations)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn local(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn locals(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    /// The same rotation with vertex `v` read clockwise.
    pub fn reversed_at(&self, v: usize) -> RotationSystem {
        let mut r = self.clone();
        r.rotations[v].reverse();
        r
    }

    /// `(succ, pred)` over darts: the next and previous dart in the local
    /// rotation at each dart's tail.
    pub(crate) fn successors(&self, dart_count: usize) -> (Vec<usize>, Vec<usize>) {
        let mut succ = vec![usize::MAX; dart_count];
        let mut pred = vec![usize::MAX; dart_count];
        for rot in &self.rotations {
            for (k, &d) in rot.iter().enumerate() {
                let nxt = rot[(k + 1) % rot.len()];
                succ[d] = nxt;
                pred[nxt] = d;
            }
        }
        (succ, pred)
    }

    /// Checks that this rotation fits `g`.
    pub fn check(&self, g: &Graph) -> Result<()> {
        RotationSystem::new(g, self.rotations.clone()).map(|_| ())
    }

    /// The rotation as a permutation of currents; needs unique currents.
    pub fn as_permutation(&self, g: &CurrentGraph) -> Result<ResiduePermutation> {
        if !super::check_unique_currents(g) {
            return Err(Error::Axiom("currents are not unique".into()));
        }
        ResiduePermutation::from_cycles(g.modulus(), &current_cycles(g, self))
    }
}

/// The currents leaving each vertex in rotation order.
pub fn current_cycles(g: &CurrentGraph, rho: &RotationSystem) -> Vec<Vec<i64>> {
    rho.rotations.iter().map(|r| r.iter().map(|&d| g.dart_current(d)).collect()).collect()
}

/// Row orderings list the currents leaving each row; column orderings list
/// column values, and the dart leaving a column carries the negated column
/// value. Each cycle is matched to the vertex whose darts it orders.
pub fn rotation_from_orderings(
    g: &CurrentGraph,
    omega_r: &SystemOrdering,
    omega_c: &SystemOrdering,
) -> Result<RotationSystem> {
    let m = g.modulus();
    if omega_r.modulus() != m || omega_c.modulus() != m {
        return Err(Error::MixedModulus(m.get(), omega_r.modulus().get().max(omega_c.modulus().get())));
    }
    let out = g.out_darts();
    let key = |v: usize| {
        let mut c: Vec<i64> = out[v].iter().map(|&d| g.dart_current(d)).collect();
        c.sort_unstable();
        c
    };
    let mut per_vertex: Vec<Option<Vec<i64>>> = vec![None; g.vertex_count()];
    let sides = [(omega_r, 0..g.rows(), 1i64, "row"), (omega_c, g.rows()..g.vertex_count(), -1, "column")];
    for (omega, range, sign, side) in sides {
        if omega.cycles().len() != range.len() {
            return Err(Error::Domain(format!(
                "{} {side} orderings for {} {side}s",
                omega.cycles().len(),
                range.len()
            )));
        }
        for cyc in omega.cycles() {
            let darts: Vec<i64> = cyc.iter().map(|&a| m.reduce(sign * a)).collect();
            let mut sorted = darts.clone();
            sorted.sort_unstable();
            let v = range
                .clone()
                .find(|&v| per_vertex[v].is_none() && key(v) == sorted)
                .ok_or_else(|| Error::Domain(format!("{side} ordering ({}) matches no {side}", crate::text::join(cyc))))?;
            per_vertex[v] = Some(darts);
        }
    }
    let per_vertex: Vec<Vec<i64>> = per_vertex.into_iter().map(|o| o.expect("every vertex matched")).collect();
    RotationSystem::from_currents(g, &per_vertex)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::k34;
    use super::*;
    use crate::algebra::Modulus;
    use crate::arrays::fixtures::h3x4;
    use crate::orderings::fixtures::{omega_c, omega_r};

    #[test]
    fn worked_rotation() {
        let g = k34();
        let rho = rotation_from_orderings(&g, &omega_r(), &omega_c()).unwrap();
        let p = rho.as_permutation(&g).unwrap();
        let m = Modulus::new(25).unwrap();
        // the printed rotation with its -13 read as -12
        let expected = ResiduePermutation::from_cycles(
            m,
            &[
                vec![1, -2, -10, 11],
                vec![7, -4, -12, 9],
                vec![-8, 6, -3, 5],
                vec![-1, 8, -7],
                vec![2, -6, 4],
                vec![10, 3, 12],
                vec![-11, -5, -9],
            ],
        )
        .unwrap();
        assert_eq!(p, expected);
        // the literal -13 is 12 mod 25, which repeats 12
        let literal = ResiduePermutation::from_cycles(
            m,
            &[vec![1, -2, -10, 11], vec![7, -4, -13, 9], vec![-8, 6, -3, 5], vec![10, 3, 12]],
        );
        assert!(literal.is_err());
        let mut lens = p.cycles().iter().map(Vec::len).collect::<Vec<_>>();
        lens.sort_unstable();
        assert_eq!(lens, vec![3, 3, 3, 3, 4, 4, 4]);
    }

    #[test]
    fn transpose_conjugates_by_negation() {
        let h = h3x4();
        let g = k34();
        let rho = rotation_from_orderings(&g, &omega_r(), &omega_c()).unwrap().as_permutation(&g).unwrap();
        let gt = CurrentGraph::from_array(&h.transpose());
        let rho_t = rotation_from_orderings(&gt, &omega_c(), &omega_r()).unwrap().as_permutation(&gt).unwrap();
        let tau = ResiduePermutation::negation(Modulus::new(25).unwrap());
        assert_eq!(rho_t, tau.compose(&rho).unwrap().compose(&tau).unwrap());
    }

    #[test]
    fn mismatched_orderings() {
        let g = k34();
        let m = Modulus::new(25).unwrap();
        let wrong = SystemOrdering::new(m, vec![vec![1, -8, 7], vec![-2, 6, -4], vec![-10, -3, -12], vec![11, 5, 9]])
            .unwrap();
        assert!(rotation_from_orderings(&g, &wrong, &omega_c()).is_err());
    }

    #[test]
    fn rejects_foreign_rotation() {
        let g = k34();
        assert!(RotationSystem::new(&g.graph(), vec![vec![0, 2, 4, 6]]).is_err());
        let mut locals = rotation_from_orderings(&g, &omega_r(), &omega_c()).unwrap().locals().to_vec();
        let stolen = locals[0][0];
        locals[1][0] = stolen;
        assert!(RotationSystem::new(&g.graph(), locals).is_err());
    }
}
