use std::fmt;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use heffter::algebra::Modulus;
use heffter::arrays::{
    parse_array_file, sign_imbalances, validate, validate_integer, validate_shiftable, validate_weak, ArrayFile,
    HeffterArray, Shape,
};
use heffter::current_graphs::{rotation_from_orderings, CurrentGraph, RotationSystem};
use heffter::cycle_systems::{develop, is_cycle_system, verify_decomposition};
use heffter::derived::{derive, derive_signed, Certificate};
use heffter::orderings::{
    alspach_check, alspach_sweep, compatible_parity, find_compatible_pair, OrderingFile, Simplicity,
};
use heffter::search::{find_heffter_array, find_heffter_system, SearchLimits, SearchMode, SearchOutcome};
use heffter::surface_maps::{format_faces, parse_graph, signed_monofacial_exists, trace_faces, trace_faces_signed, xuong_monofacial_exists, Surface};
use heffter::{Error, ValidationReport};

use crate::{Command, Mode, SearchCommand};

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input, or bad parameters.
    Usage(String),
    /// Well-formed input that fails a requirement.
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Invalid(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Invalid(m) => f.write_str(m),
        }
    }
}

/// Attaches the file name and sorts the library error into an exit class.
fn classify(path: Option<&Path>, e: Error) -> CliError {
    let msg = match path {
        Some(p) => format!("{}: {e}", p.display()),
        None => e.to_string(),
    };
    match e {
        Error::Parse { .. } | Error::Modulus(_) | Error::MalformedCell { .. } | Error::Parameter(_) | Error::MixedModulus(..) => {
            CliError::Usage(msg)
        }
        Error::Domain(_) | Error::Precondition(_) | Error::Axiom(_) | Error::Inconsistent(_) => CliError::Invalid(msg),
    }
}

type Outcome = Result<ExitCode, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn code(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn modulus(m: i64) -> Result<Modulus, CliError> {
    Modulus::new(m).map_err(|e| classify(None, e))
}

pub fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Verify { array, integer, shiftable, weak } => verify(&array, integer, shiftable, weak),
        Command::Orderings { array, require_simple, output } => orderings(&array, require_simple, output.as_deref()),
        Command::Trace { array, orderings, signed } => trace(&array, &orderings, signed),
        Command::Derive { array, orderings, signed, output } => derive_cmd(&array, &orderings, signed, &output),
        Command::VerifyEmbedding { certificate } => verify_embedding(&certificate),
        Command::Develop { orderings, modulus } => develop_cmd(&orderings, modulus),
        Command::Search(SearchCommand::Array { m, n, s, t, mode, budget, jobs }) => {
            search_array(Shape::new(m, n, s, t), mode, budget, jobs)
        }
        Command::Search(SearchCommand::System { modulus, k }) => search_system(modulus, k),
        Command::Alspach { modulus, exhaustive, subset, jobs } => alspach(modulus, exhaustive, subset, jobs),
        Command::Xuong { graph, signed } => xuong(&graph, signed),
    }
}

fn print_report(report: &ValidationReport) {
    for v in &report.violations {
        println!("violation={v}");
    }
}

fn verify(path: &Path, integer: bool, shiftable: bool, weak: bool) -> Outcome {
    let file = parse_array_file(&read(path)?, weak).map_err(|e| classify(Some(path), e))?;
    let shape = file.shape();
    let (report, m) = match &file {
        ArrayFile::Plain(h) => (validate(h), h.modulus()),
        ArrayFile::Weak(w) => (validate_weak(w), w.modulus()),
    };
    let mut ok = report.verdict();
    println!("kind={}", if matches!(file, ArrayFile::Weak(_)) { "weak" } else { "plain" });
    println!("shape={}", shape.name());
    println!("modulus={m}");
    print_report(&report);
    if let ArrayFile::Plain(h) = &file {
        if integer || shiftable {
            let int = validate_integer(h);
            println!("integer={int}");
            ok &= int;
        }
        if shiftable {
            let sh = validate_shiftable(h);
            for loc in sign_imbalances(h) {
                println!("violation=sign-balance at {loc}");
            }
            println!("shiftable={sh}");
            ok &= sh;
        }
    } else if integer || shiftable {
        return Err(CliError::Usage("--integer and --shiftable apply to plain arrays only".into()));
    }
    println!("verdict={}", if ok { "valid" } else { "invalid" });
    let weak_word = if matches!(file, ArrayFile::Weak(_)) { "weak " } else { "" };
    println!("{} {weak_word}{} over Z_{m}", if ok { "valid" } else { "invalid" }, shape.name());
    Ok(code(ok))
}

fn plain_array(path: &Path) -> Result<HeffterArray, CliError> {
    match parse_array_file(&read(path)?, false).map_err(|e| classify(Some(path), e))? {
        ArrayFile::Plain(h) => {
            let report = validate(&h);
            if !report.verdict() {
                return Err(CliError::Invalid(format!("{}: not a Heffter array: {}", path.display(), report.violations[0])));
            }
            Ok(h)
        }
        ArrayFile::Weak(_) => Err(CliError::Usage(format!("{}: expected a plain array", path.display()))),
    }
}

fn orderings(path: &Path, require_simple: bool, output: Option<&Path>) -> Outcome {
    let h = plain_array(path)?;
    let mode = if require_simple { Simplicity::Required } else { Simplicity::Preferred };
    let Some((r, c)) = find_compatible_pair(&h, mode) else {
        println!("found=false");
        if !compatible_parity(h.shape()) {
            eprintln!("m + n + ms is even, so no one-face embedding exists");
        }
        return Ok(code(false));
    };
    let text = OrderingFile::from_orderings(&r, &c).to_string();
    match output {
        Some(out) => fs::write(out, &text).map_err(|e| CliError::Usage(format!("{}: {e}", out.display())))?,
        None => print!("{text}"),
    }
    eprintln!("found=true simple={}", r.is_simple() && c.is_simple());
    Ok(ExitCode::SUCCESS)
}

/// The current graph of an array file and its rotation from an ordering
/// file. Weak files, or `signed`, give the signed graph.
fn graph_and_rotation(array: &Path, orderings: &Path, signed: bool) -> Result<(CurrentGraph, RotationSystem), CliError> {
    let file = parse_array_file(&read(array)?, signed).map_err(|e| classify(Some(array), e))?;
    let g = match file {
        ArrayFile::Plain(h) => CurrentGraph::from_array(&h),
        ArrayFile::Weak(w) => CurrentGraph::from_weak_array(&w),
    };
    let f: OrderingFile = read(orderings)?.parse().map_err(|e| classify(Some(orderings), e))?;
    let (r, c) = f.to_orderings(g.modulus()).map_err(|e| classify(Some(orderings), e))?;
    let rho = rotation_from_orderings(&g, &r, &c).map_err(|e| classify(Some(orderings), e))?;
    Ok((g, rho))
}

fn surface_words(s: Surface) -> String {
    match s {
        Surface::Orientable { genus } => format!("orientable=true genus={genus}"),
        Surface::Nonorientable { crosscaps } => format!("orientable=false crosscaps={crosscaps}"),
    }
}

fn trace(array: &Path, orderings: &Path, signed: bool) -> Outcome {
    let (g, rho) = graph_and_rotation(array, orderings, signed)?;
    let signed = signed || g.is_signed();
    let t = if signed { trace_faces_signed(&g, &rho) } else { trace_faces(&g, &rho) }.map_err(|e| classify(None, e))?;
    print!("{}", format_faces(&g, &t));
    println!("faces={}", t.faces.len());
    println!("monofacial={}", t.is_monofacial());
    let summary = t.summary(&g.graph()).map_err(|e| classify(None, e))?;
    println!("{}", surface_words(summary.surface));
    Ok(code(t.is_monofacial()))
}

fn derive_cmd(array: &Path, orderings: &Path, signed: bool, output: &Path) -> Outcome {
    let (g, rho) = graph_and_rotation(array, orderings, signed)?;
    let signed = signed || g.is_signed();
    let d = if signed { derive_signed(&g, &rho) } else { derive(&g, &rho) }.map_err(|e| classify(None, e))?;
    let cert = Certificate::from_embedding(&d);
    let report = cert.verify();
    fs::write(output, cert.to_string()).map_err(|e| CliError::Usage(format!("{}: {e}", output.display())))?;
    println!("modulus={}", d.modulus());
    println!("faces={}", d.face_count());
    println!("{}", surface_words(d.summary().surface));
    println!("simple_faces={}", report.simple_faces);
    print_report(&report.report);
    println!("verdict={}", if report.verdict() { "valid" } else { "invalid" });
    Ok(code(report.verdict()))
}

fn verify_embedding(path: &Path) -> Outcome {
    let cert: Certificate = read(path)?.parse().map_err(|e| classify(Some(path), e))?;
    let r = cert.verify();
    println!("modulus={}", cert.modulus);
    println!("faces={}", cert.faces.len());
    if let Some(sm) = r.summary {
        println!("{}", surface_words(sm.surface));
    }
    println!("simple_faces={}", r.simple_faces);
    print_report(&r.report);
    println!("verdict={}", if r.verdict() { "valid" } else { "invalid" });
    Ok(code(r.verdict()))
}

fn develop_cmd(path: &Path, m: Option<i64>) -> Outcome {
    let f: OrderingFile = read(path)?.parse().map_err(|e| classify(Some(path), e))?;
    let m = match m {
        Some(m) => m,
        None => 2 * f.rows.iter().map(Vec::len).sum::<usize>() as i64 + 1,
    };
    let (r, c) = f.to_orderings(modulus(m)?).map_err(|e| classify(Some(path), e))?;
    let mut ok = true;
    for (side, omega) in [("rows", &r), ("cols", &c)] {
        if omega.cycles().is_empty() {
            continue;
        }
        let d = develop(omega);
        let decomposition = verify_decomposition(&d);
        ok &= decomposition;
        print!("{d}");
        println!("{side}.trails={} {side}.decomposition={decomposition} {side}.cycle_system={}", d.len(), is_cycle_system(&d));
    }
    Ok(code(ok))
}

fn search_array(shape: Shape, mode: Mode, budget: Option<u64>, jobs: usize) -> Outcome {
    let mode = match mode {
        Mode::General => SearchMode::General,
        Mode::Integer => SearchMode::Integer,
        Mode::Shiftable => SearchMode::Shiftable,
    };
    eprintln!("searching for {} over Z_{}", shape.name(), 2 * shape.m * shape.s + 1);
    match find_heffter_array(shape, mode, SearchLimits { budget, jobs: Some(jobs) }).map_err(|e| classify(None, e))? {
        SearchOutcome::Found(h) => {
            print!("{h}");
            Ok(ExitCode::SUCCESS)
        }
        SearchOutcome::Exhausted => {
            eprintln!("no array with the band pattern");
            Ok(code(false))
        }
        SearchOutcome::BudgetExceeded => {
            eprintln!("budget exhausted");
            Ok(code(false))
        }
    }
}

fn search_system(m: i64, k: usize) -> Outcome {
    match find_heffter_system(modulus(m)?, k).map_err(|e| classify(None, e))? {
        Some(d) => {
            for (i, p) in d.parts().iter().enumerate() {
                println!("part {}: {}", i + 1, p.iter().map(i64::to_string).collect::<Vec<_>>().join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        None => {
            println!("found=false");
            Ok(code(false))
        }
    }
}

fn alspach(m: i64, exhaustive: bool, subset: Option<Vec<i64>>, jobs: usize) -> Outcome {
    let m = modulus(m)?;
    match subset {
        Some(a) => match alspach_check(m, &a).map_err(|e| classify(None, e))? {
            Some(order) => {
                println!("ordering={}", order.iter().map(i64::to_string).collect::<Vec<_>>().join(" "));
                Ok(ExitCode::SUCCESS)
            }
            None => {
                println!("ordering=none");
                Ok(code(false))
            }
        },
        None if exhaustive => {
            let r = alspach_sweep(m, Some(jobs)).map_err(|e| classify(None, e))?;
            for f in &r.failures {
                println!("failure={}", f.iter().map(i64::to_string).collect::<Vec<_>>().join(" "));
            }
            println!("subsets={} orderable={} failures={}", r.subsets, r.orderable(), r.failures.len());
            eprintln!("elapsed={:.3}s", r.elapsed.as_secs_f64());
            Ok(code(r.failures.is_empty()))
        }
        None => Err(CliError::Usage("give --exhaustive or --subset".into())),
    }
}

fn xuong(path: &Path, signed: bool) -> Outcome {
    let sg = parse_graph(&read(path)?).map_err(|e| classify(Some(path), e))?;
    let tree = if signed {
        signed_monofacial_exists(&sg.graph, &sg.signs)
    } else {
        xuong_monofacial_exists(&sg.graph)
    }
    .map_err(|e| classify(Some(path), e))?;
    println!("monofacial={}", tree.is_some());
    if let Some(t) = &tree {
        println!("tree={}", t.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
    }
    Ok(code(tree.is_some()))
}
