use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data").join(name)
}

fn golden(name: &str) -> String {
    fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

fn heffter(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heffter")).args(args).output().unwrap()
}

fn path(p: &PathBuf) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_valid_and_broken() {
    let o = heffter(&["verify", path(&data("h3x4.ha"))]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("valid H(3,4) over Z_25"));
    assert_eq!(stdout(&o), golden("verify_h3x4.txt"));

    let o = heffter(&["verify", path(&data("h3x4_broken.ha"))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violation=row-sum at row2"));
    assert_eq!(stdout(&o), golden("verify_h3x4_broken.txt"));
}

#[test]
fn verify_integer_and_shiftable() {
    let o = heffter(&["verify", path(&data("h6x12.ha")), "--integer", "--shiftable"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("integer=true") && out.contains("shiftable=true"));
    let o = heffter(&["verify", path(&data("h3x4.ha")), "--integer"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("integer=false"));
}

#[test]
fn malformed_file_is_a_format_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ha");
    fs::write(&bad, "heffter 3 4 4 3\n1 -2 -10 11\n-8 6 x 5\n7 -4 -12 9\n").unwrap();
    let o = heffter(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
    assert_eq!(heffter(&["verify"]).status.code(), Some(2));
    assert_eq!(heffter(&["verify", "/nonexistent/file.ha"]).status.code(), Some(2));
}

#[test]
fn orderings_written_and_refused() {
    let o = heffter(&["orderings", path(&data("h3x4.ha"))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("orderings_h3x4.txt"));

    let dir = tempfile::tempdir().unwrap();
    let ord = dir.path().join("found.ord");
    let o = heffter(&["orderings", path(&data("h3x4.ha")), "--require-simple", "-o", ord.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = heffter(&["trace", path(&data("h3x4.ha")), ord.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("monofacial=true"));

    let o = heffter(&["orderings", path(&data("h5k4.ha"))]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn trace_golden() {
    let o = heffter(&["trace", path(&data("h3x4.ha")), path(&data("h3x4.ord"))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("trace_h3x4.txt"));
    let o = heffter(&["trace", path(&data("weak3x4.ha")), path(&data("weak3x4.ord")), "--signed"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("trace_weak3x4.txt"));
}

#[test]
fn derive_round_trips_through_verify_embedding() {
    let dir = tempfile::tempdir().unwrap();
    for (array, ord, signed) in [("h3x4.ha", "h3x4.ord", false), ("weak3x4.ha", "weak3x4.ord", true), ("nonsimple37.ha", "nonsimple37.ord", false)] {
        let cert = dir.path().join(format!("{array}.cert"));
        let (array_path, ord_path) = (data(array), data(ord));
        let mut args = vec!["derive", path(&array_path), path(&ord_path), "-o", cert.to_str().unwrap()];
        if signed {
            args.push("--signed");
        }
        let o = heffter(&args);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        let o = heffter(&["verify-embedding", cert.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("verdict=valid"));
    }
    let k25 = fs::read_to_string(dir.path().join("h3x4.ha.cert")).unwrap();
    assert!(k25.starts_with("biembedding M=25 s=4 t=3 orientable=1 genus=51\n"));
    assert_eq!(k25.lines().count(), 176);
    let signed = fs::read_to_string(dir.path().join("weak3x4.ha.cert")).unwrap();
    assert!(signed.starts_with("biembedding M=25 s=4 t=3 orientable=0 crosscaps=102\n"));
    let o = heffter(&["verify-embedding", dir.path().join("nonsimple37.ha.cert").to_str().unwrap()]);
    assert!(stdout(&o).contains("simple_faces=false"));
}

#[test]
fn tampered_certificate_fails() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("k25.cert");
    heffter(&["derive", path(&data("h3x4.ha")), path(&data("h3x4.ord")), "-o", cert.to_str().unwrap()]);
    let text = fs::read_to_string(&cert).unwrap();
    fs::write(&cert, text.replace("genus=51", "genus=49")).unwrap();
    let o = heffter(&["verify-embedding", cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violation=euler"));
    let mut lines: Vec<&str> = text.lines().collect();
    lines.remove(5);
    fs::write(&cert, lines.join("\n")).unwrap();
    let o = heffter(&["verify-embedding", cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violation=edge-coverage"));
}

#[test]
fn deterministic_output() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.cert"), dir.path().join("b.cert"));
    for c in [&a, &b] {
        heffter(&["derive", path(&data("h3x4.ha")), path(&data("h3x4.ord")), "-o", c.to_str().unwrap()]);
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let one = heffter(&["search", "array", "5", "5", "4", "4"]);
    let two = heffter(&["search", "array", "5", "5", "4", "4", "--jobs", "3"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, two.stdout);
}

#[test]
fn develop_reports_both_sides() {
    let o = heffter(&["develop", path(&data("h3x4.ord"))]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("rows.trails=75 rows.decomposition=true rows.cycle_system=true"));
    assert!(out.contains("cols.trails=100 cols.decomposition=true cols.cycle_system=true"));
    let o = heffter(&["develop", path(&data("nonsimple37.ord"))]);
    assert!(stdout(&o).contains("rows.decomposition=true rows.cycle_system=false"));
}

#[test]
fn searches() {
    let o = heffter(&["search", "array", "3", "4", "4", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("search_3443.txt"));
    assert_eq!(heffter(&["search", "array", "3", "4", "4", "3", "--mode", "shiftable"]).status.code(), Some(2));
    assert_eq!(heffter(&["search", "array", "5", "5", "4", "4", "--budget", "2"]).status.code(), Some(1));
    let o = heffter(&["search", "system", "7", "3"]);
    assert_eq!(stdout(&o), "part 1: -3 1 2\n");
    assert_eq!(heffter(&["search", "system", "9", "3"]).status.code(), Some(2));
}

#[test]
fn alspach_and_xuong() {
    let o = heffter(&["alspach", "13", "--exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("subsets=4095 orderable=4095 failures=0"));
    let o = heffter(&["alspach", "25", "--subset", "1,2,-3"]);
    assert_eq!(stdout(&o), "ordering=-3 1 2\n");
    assert_eq!(heffter(&["alspach", "13"]).status.code(), Some(2));

    let o = heffter(&["xuong", path(&data("k4.graph"))]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "monofacial=false\n");
    let o = heffter(&["xuong", path(&data("theta_signed.graph")), "--signed"]);
    assert_eq!(o.status.code(), Some(0));
}
