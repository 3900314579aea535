use heffter::arrays::{parse_array_file, validate, ArrayFile, HeffterArray};
use heffter::current_graphs::{rotation_from_orderings, CurrentGraph, RotationSystem};
use heffter::cycle_systems::{is_cycle_system, verify_decomposition};
use heffter::derived::{derive, derive_signed, extract_cycle_systems, trace_developed, verify_biembedding, Certificate};
use heffter::orderings::{are_compatible, find_compatible_pair, OrderingFile, Simplicity};
use heffter::perm::{least_dihedral, least_rotation};
use heffter::surface_maps::{rotation_is_simple, trace_faces, trace_faces_signed, Surface};

fn plain(text: &str) -> HeffterArray {
    match parse_array_file(text, false).unwrap() {
        ArrayFile::Plain(h) => h,
        ArrayFile::Weak(_) => panic!("expected a plain array"),
    }
}

fn rotation(g: &CurrentGraph, ord: &str) -> RotationSystem {
    let f: OrderingFile = ord.parse().unwrap();
    let (r, c) = f.to_orderings(g.modulus()).unwrap();
    if !g.is_signed() {
        assert!(are_compatible(&r, &c).unwrap());
    }
    rotation_from_orderings(g, &r, &c).unwrap()
}

#[test]
fn three_by_four_files() {
    let h = plain(include_str!("data/h3x4.ha"));
    assert!(validate(&h).verdict());
    let g = CurrentGraph::from_array(&h);
    let rho = rotation(&g, include_str!("data/h3x4.ord"));
    let d = derive(&g, &rho).unwrap();
    let c = Certificate::from_embedding(&d);
    let again: Certificate = c.to_string().parse().unwrap();
    let r = again.verify();
    assert!(r.verdict() && r.simple_faces);
    assert_eq!(r.summary.unwrap().surface, Surface::Orientable { genus: 51 });
}

#[test]
fn weak_orderings_give_the_signed_rotation() {
    let ArrayFile::Weak(w) = parse_array_file(include_str!("data/weak3x4.ha"), false).unwrap() else { panic!() };
    let g = CurrentGraph::from_weak_array(&w);
    let rho = rotation(&g, include_str!("data/weak3x4.ord"));
    let expected = [
        vec![1, -7, -6, 12],
        vec![2, -4, 10, -8],
        vec![-3, -11, 9, 5],
        vec![-1, 3, -2],
        vec![7, -11, 4],
        vec![6, 10, 9],
        vec![-12, -8, -5],
    ];
    assert_eq!(rho, RotationSystem::from_currents(&g, &expected).unwrap());
    let trace = trace_faces_signed(&g, &rho).unwrap();
    assert!(trace.is_monofacial() && !trace.orientable);
    let d = derive_signed(&g, &rho).unwrap();
    let r = Certificate::from_embedding(&d).verify();
    assert!(r.verdict());
    assert_eq!(r.orientable, Some(false));
}

#[test]
fn non_simple_row_gives_non_simple_faces() {
    let h = plain(include_str!("data/nonsimple37.ha"));
    assert!(validate(&h).verdict());
    let g = CurrentGraph::from_array(&h);
    let rho = rotation(&g, include_str!("data/nonsimple37.ord"));
    assert!(trace_faces(&g, &rho).unwrap().is_monofacial());
    assert!(!rotation_is_simple(&g, &rho));
    let d = derive(&g, &rho).unwrap();
    let r = verify_biembedding(d.modulus(), d.s(), d.t(), &d.faces());
    assert!(r.verdict(), "{:?}", r.report.violations);
    assert!(!r.simple_faces);
    let (a, b) = extract_cycle_systems(&d);
    assert!(verify_decomposition(&a) && verify_decomposition(&b));
    assert!(!is_cycle_system(&a));
    assert!(is_cycle_system(&b));
    let norm = |f: &Vec<i64>| least_rotation(f);
    let mut quick: Vec<Vec<i64>> = d.faces().iter().map(|f| norm(&f.vertices)).collect();
    let mut full: Vec<Vec<i64>> = trace_developed(&d).unwrap().iter().map(norm).collect();
    quick.sort();
    full.sort();
    assert_eq!(quick, full);
}

#[test]
fn five_by_five_has_no_compatible_pair() {
    let h = plain(include_str!("data/h5k4.ha"));
    assert!(validate(&h).verdict());
    assert_eq!(find_compatible_pair(&h, Simplicity::Preferred), None);
}

#[test]
fn signed_quick_faces_dihedral() {
    let ArrayFile::Weak(w) = parse_array_file(include_str!("data/weak3x4.ha"), false).unwrap() else { panic!() };
    let g = CurrentGraph::from_weak_array(&w);
    let d = derive_signed(&g, &rotation(&g, include_str!("data/weak3x4.ord"))).unwrap();
    let mut quick: Vec<Vec<i64>> = d.faces().iter().map(|f| least_dihedral(&f.vertices)).collect();
    let mut full: Vec<Vec<i64>> = trace_developed(&d).unwrap().iter().map(|f| least_dihedral(f)).collect();
    quick.sort();
    full.sort();
    assert_eq!(quick, full);
}
