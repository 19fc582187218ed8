use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vinberg::symmetry::diagram_symmetries;
use vinberg::{
    analyze_diagram, certify_nonreflective, diagram, gram, run, run_to_budget, Budget,
    CertifyError, CoxeterDiagram, GramMatrix, QuadraticForm, Root, Verdict,
};

use vinberg_cli::document::{self, Int, RunDocument};
use vinberg_cli::render;

/// The diagram machinery indexes wall subsets with u64 bitmasks.
const MAX_WALLS: usize = 64;
const DEFAULT_ENUM_CAP: usize = 10_000_000;

#[derive(Parser)]
#[command(name = "vinberg", version, about = "Reflection groups of -phi*x0^2 + x1^2 + ... + xn^2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Ascii,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the document to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build the fundamental polyhedron wall by wall.
    Run {
        #[arg(long)]
        phi: i64,
        #[arg(long)]
        dim: usize,
        /// Stop after this many walls (including the initial cone).
        #[arg(long)]
        max_roots: Option<usize>,
        /// Largest time-like coefficient to enumerate.
        #[arg(long)]
        max_k0: Option<i64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Re-analyze a document: recompute diagram, volume, cusps, symmetry.
    Check {
        /// A JSON document produced by `run` (roots, or a raw gram block).
        input: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Certify that the form is not reflective (phi = 3, dim >= 14).
    CertifyNonreflective {
        #[arg(long)]
        phi: i64,
        #[arg(long)]
        dim: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Diff the engine against an independent brute-force enumeration.
    Oracle {
        #[arg(long)]
        phi: i64,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value = "5")]
        max_k0: i64,
    },
}

fn error_out(kind: &str, message: &str) -> ExitCode {
    let obj = serde_json::json!({ "error": { "kind": kind, "message": message } });
    eprintln!("{obj}");
    ExitCode::from(1)
}

fn emit(doc: &RunDocument, out: &OutputArgs) -> Result<(), String> {
    let text = match out.format {
        Format::Json => document::serialize(doc),
        Format::Dot => render::dot(doc),
        Format::Ascii => render::ascii(doc),
    };
    match &out.output {
        Some(path) => fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Diagram, volume, and symmetry sections computed from a diagram alone.
fn analyses(
    n: usize,
    d: &CoxeterDiagram,
) -> Result<(document::DiagramDoc, document::VolumeDoc, document::SymmetryDoc), String> {
    let vol = analyze_diagram(n, d, DEFAULT_ENUM_CAP).map_err(|e| e.to_string())?;
    let sym = diagram_symmetries(d);
    let orbits = if vol.ideal_vertices.is_empty() {
        None
    } else {
        Some(sym.orbit_count(&vol.ideal_vertices))
    };
    Ok((
        document::diagram_doc(d),
        document::volume_doc(&vol),
        document::symmetry_doc(&sym, orbits),
    ))
}

fn cmd_run(phi: i64, dim: usize, max_roots: Option<usize>, max_k0: Option<i64>, out: &OutputArgs) -> ExitCode {
    let form = match QuadraticForm::new(phi, dim) {
        Ok(f) => f,
        Err(e) => return error_out("usage", &e.to_string()),
    };
    let mut budget = Budget::for_dimension(dim);
    if let Some(m) = max_roots {
        budget.max_roots = m;
    }
    if let Some(k) = max_k0 {
        budget.max_k0 = k;
    }
    budget.max_roots = budget.max_roots.min(MAX_WALLS);
    let report = match run(&form, &budget) {
        Ok(r) => r,
        Err(e) => return error_out("internal", &e.to_string()),
    };
    let g = gram(&form, &report.roots);
    let d = match diagram(&g) {
        Ok(d) => d,
        Err(e) => return error_out("internal", &e.to_string()),
    };
    let sym = diagram_symmetries(&d);
    let orbits = if report.volume.ideal_vertices.is_empty() {
        None
    } else {
        Some(sym.orbit_count(&report.volume.ideal_vertices))
    };
    let doc = RunDocument {
        form: document::FormDoc { phi: Int(phi), n: dim },
        roots: Some(document::roots_doc(&report)),
        gram: document::gram_doc(&g),
        diagram: document::diagram_doc(&d),
        volume: Some(document::volume_doc(&report.volume)),
        symmetry: Some(document::symmetry_doc(&sym, orbits)),
        certificate: None,
        meta: document::meta(Some(document::verdict_string(report.verdict))),
    };
    if let Err(e) = emit(&doc, out) {
        return error_out("internal", &e);
    }
    match report.verdict {
        Verdict::FiniteVolume => ExitCode::from(0),
        Verdict::BudgetExhausted => ExitCode::from(2),
    }
}

fn cmd_check(input: &PathBuf, out: &OutputArgs) -> ExitCode {
    let text = match fs::read_to_string(input) {
        Ok(t) => t,
        Err(e) => return error_out("usage", &format!("cannot read {}: {e}", input.display())),
    };
    let doc: RunDocument = match serde_json::from_str(&text) {
        Ok(d) => d,
        Err(e) => return error_out("usage", &format!("parse error: {e}")),
    };
    let n = doc.form.n;
    let phi = doc.form.phi.0;
    // Prefer the roots; fall back to the raw gram block.
    let (roots, g) = if let Some(rd) = &doc.roots {
        let form = match QuadraticForm::new(phi, n) {
            Ok(f) => f,
            Err(e) => return error_out("usage", &e.to_string()),
        };
        let mut roots = Vec::with_capacity(rd.vectors.len());
        for v in &rd.vectors {
            let coords: Vec<i64> = v.iter().map(|x| x.0).collect();
            match Root::new(&form, coords) {
                Ok(r) => roots.push(r),
                Err(e) => return error_out("usage", &format!("invalid root {v:?}: {e}")),
            }
        }
        let g = gram(&form, &roots);
        (Some((rd.initial, roots)), g)
    } else {
        let norms: Vec<i64> = doc.gram.norms.iter().map(|x| x.0).collect();
        let entries: Vec<Vec<i64>> = doc
            .gram
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x.0).collect())
            .collect();
        if norms.is_empty() || entries.len() != norms.len() || entries.iter().any(|r| r.len() != norms.len()) {
            return error_out("usage", "document has neither roots nor a square gram block");
        }
        (None, GramMatrix::from_raw(norms, entries))
    };
    if g.size() > MAX_WALLS {
        return error_out("usage", &format!("more than {MAX_WALLS} walls are not supported"));
    }
    let d = match diagram(&g) {
        Ok(d) => d,
        Err(e) => return error_out("usage", &e.to_string()),
    };
    let (diagram_doc, volume_doc, symmetry_doc) = match analyses(n, &d) {
        Ok(t) => t,
        Err(e) => return error_out("internal", &e),
    };
    let finite = volume_doc.finite;
    let roots_doc = roots.map(|(initial, roots)| document::RootsDoc {
        initial,
        vectors: roots.iter().map(|r| r.coords().iter().copied().map(Int).collect()).collect(),
        norms: roots.iter().map(|r| Int(r.norm())).collect(),
        priorities: roots.iter().map(|r| document::rat_string(r.priority())).collect(),
    });
    let checked = RunDocument {
        form: doc.form.clone(),
        roots: roots_doc,
        gram: document::gram_doc(&g),
        diagram: diagram_doc,
        volume: Some(volume_doc),
        symmetry: Some(symmetry_doc),
        certificate: None,
        meta: document::meta(Some(if finite { "finite-volume" } else { "infinite-volume" })),
    };
    if let Err(e) = emit(&checked, out) {
        return error_out("internal", &e);
    }
    ExitCode::from(if finite { 0 } else { 2 })
}

fn cmd_certify(phi: i64, dim: usize, out: &OutputArgs) -> ExitCode {
    let form = match QuadraticForm::new(phi, dim) {
        Ok(f) => f,
        Err(e) => return error_out("usage", &e.to_string()),
    };
    let cert = match certify_nonreflective(&form) {
        Ok(c) => c,
        Err(e @ (CertifyError::DimensionTooSmall(_) | CertifyError::WrongForm(_))) => {
            return error_out("usage", &e.to_string())
        }
        Err(e) => return error_out("internal", &e.to_string()),
    };
    let g = gram(&form, &cert.roots);
    let d = match diagram(&g) {
        Ok(d) => d,
        Err(e) => return error_out("internal", &e.to_string()),
    };
    let doc = RunDocument {
        form: document::FormDoc { phi: Int(phi), n: dim },
        roots: None,
        gram: document::gram_doc(&g),
        diagram: document::diagram_doc(&d),
        volume: None,
        symmetry: None,
        certificate: Some(document::certificate_doc(&cert)),
        meta: document::meta(Some("nonreflective")),
    };
    if let Err(e) = emit(&doc, out) {
        return error_out("internal", &e);
    }
    ExitCode::from(3)
}

fn cmd_oracle(phi: i64, dim: usize, max_k0: i64) -> ExitCode {
    if !(2..=5).contains(&dim) {
        return error_out("usage", "oracle requires 2 <= dim <= 5");
    }
    if !(1..=5).contains(&max_k0) {
        return error_out("usage", "oracle requires 1 <= max-k0 <= 5");
    }
    let form = match QuadraticForm::new(phi, dim) {
        Ok(f) => f,
        Err(e) => return error_out("usage", &e.to_string()),
    };
    let max_roots = MAX_WALLS;
    let oracle = vinberg::oracle::brute_force_roots(&form, max_k0, max_roots);
    let budget = Budget {
        max_roots,
        max_k0,
        enum_cap: DEFAULT_ENUM_CAP,
    };
    let (engine, _) = match run_to_budget(&form, &budget) {
        Ok(r) => r,
        Err(e) => return error_out("internal", &e.to_string()),
    };
    let coords = |v: &[Root]| -> Vec<Vec<i64>> { v.iter().map(|r| r.coords().to_vec()).collect() };
    let o = coords(&oracle);
    let e = coords(&engine);
    let identical = o == e;
    let first_divergence = o.iter().zip(&e).position(|(a, b)| a != b).or_else(|| {
        if o.len() == e.len() {
            None
        } else {
            Some(o.len().min(e.len()))
        }
    });
    let report = serde_json::json!({
        "phi": phi,
        "dim": dim,
        "max_k0": max_k0,
        "engine_roots": e,
        "oracle_roots": o,
        "identical": identical,
        "first_divergence": first_divergence,
    });
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    ExitCode::from(if identical { 0 } else { 1 })
}

fn main() -> ExitCode {
    // Exit code 2 is reserved for budget exhaustion; flag errors are 1.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match &cli.command {
        Command::Run {
            phi,
            dim,
            max_roots,
            max_k0,
            out,
        } => cmd_run(*phi, *dim, *max_roots, *max_k0, out),
        Command::Check { input, out } => cmd_check(input, out),
        Command::CertifyNonreflective { phi, dim, out } => cmd_certify(*phi, *dim, out),
        Command::Oracle { phi, dim, max_k0 } => cmd_oracle(*phi, *dim, *max_k0),
    }
}
