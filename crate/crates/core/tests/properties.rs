mod common;

use std::sync::OnceLock;

use heffter::algebra::Modulus;
use heffter::arrays::{parse_array_file, validate, ArrayFile, HeffterArray, Shape};
use heffter::current_graphs::{rotation_from_orderings, CurrentGraph};
use heffter::cycle_systems::{develop, is_cycle_system, verify_decomposition};
use heffter::orderings::{are_compatible, find_compatible_pair, Simplicity, SystemOrdering};
use heffter::search::{find_heffter_array, SearchLimits, SearchMode, SearchOutcome};
use heffter::surface_maps::trace_faces;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn ordered_system(seed: u64, pick: usize) -> (Modulus, Vec<Vec<i64>>) {
    let mut rng = StdRng::seed_from_u64(seed);
    let (m, k) = common::SYSTEM_PARAMS[pick % common::SYSTEM_PARAMS.len()];
    let mut parts = common::random_heffter_system(&mut rng, m, k).expect("generator succeeds");
    for p in &mut parts {
        p.shuffle(&mut rng);
    }
    (Modulus::new(m).unwrap(), parts)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn development_is_a_decomposition(seed in any::<u64>(), pick in 0usize..64) {
        let (m, parts) = ordered_system(seed, pick);
        let simple = parts.iter().all(|p| common::simple_by_runs(p, m.get()));
        let ord = SystemOrdering::new(m, parts).unwrap();
        let d = develop(&ord);
        prop_assert!(verify_decomposition(&d));
        prop_assert_eq!(is_cycle_system(&d), simple);
        prop_assert_eq!(ord.is_simple(), simple);
    }
}

fn plain(text: &str) -> HeffterArray {
    match parse_array_file(text, false).unwrap() {
        ArrayFile::Plain(h) => h,
        ArrayFile::Weak(_) => unreachable!(),
    }
}

fn arrays() -> &'static [HeffterArray] {
    static ARRAYS: OnceLock<Vec<HeffterArray>> = OnceLock::new();
    ARRAYS.get_or_init(build_arrays)
}

fn build_arrays() -> Vec<HeffterArray> {
    let mut out = vec![
        plain(include_str!("data/h3x4.ha")),
        plain(include_str!("data/h5k4.ha")),
        plain(include_str!("data/nonsimple37.ha")),
    ];
    for shape in [Shape::new(3, 3, 3, 3), Shape::new(5, 5, 3, 3), Shape::new(3, 6, 6, 3), Shape::new(4, 4, 3, 3)] {
        if let SearchOutcome::Found(h) = find_heffter_array(shape, SearchMode::General, SearchLimits::default()).unwrap() {
            out.push(h);
        }
    }
    out
}

/// Row and column orderings for `h`: the compatible pair when `kind` is 0,
/// that pair with one part reversed when 1, and random orderings otherwise.
fn orderings(h: &HeffterArray, kind: u8, seed: u64) -> (SystemOrdering, SystemOrdering) {
    let m = h.modulus();
    let mut rng = StdRng::seed_from_u64(seed);
    let pair = find_compatible_pair(h, Simplicity::Preferred);
    let (mut rows, mut cols) = match (&pair, kind) {
        (Some((r, c)), 0 | 1) => (r.cycles().to_vec(), c.cycles().to_vec()),
        _ => {
            let mut rows = h.row_parts();
            let mut cols = h.col_parts();
            rows.iter_mut().chain(cols.iter_mut()).for_each(|p| p.shuffle(&mut rng));
            (rows, cols)
        }
    };
    if kind == 1 {
        let i = rng.gen_range(0..rows.len() + cols.len());
        if i < rows.len() {
            rows[i].reverse();
        } else {
            cols[i - rows.len()].reverse();
        }
    }
    (SystemOrdering::new(m, rows).unwrap(), SystemOrdering::new(m, cols).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compatibility_is_monofaciality(pick in 0usize..16, kind in 0u8..3, seed in any::<u64>()) {
        let all = arrays();
        let h = &all[pick % all.len()];
        prop_assert!(validate(h).verdict());
        let (r, c) = orderings(h, kind, seed);
        let g = CurrentGraph::from_array(h);
        let rho = rotation_from_orderings(&g, &r, &c).unwrap();
        let one_face = trace_faces(&g, &rho).unwrap().is_monofacial();
        prop_assert_eq!(are_compatible(&r, &c).unwrap(), one_face);
    }
}
