//! Command-line front end: loads algebra/subalgebra/module documents (or
//! named presets), runs the requested computation, and emits deterministic
//! JSON or human-readable text.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use supercoh::algebra::{
    cartan_subalgebra, center_subalgebra, induced_gl11_module, make_gl, make_sl2,
    EvenSubalgebra, LieSuperalgebra, Representation,
};
use supercoh::cochain::RelativeComplex;
use supercoh::io::{sha256_hex, AlgebraDoc, ModuleDoc, SubalgebraDoc};
use supercoh::rational::format_rat;
use supercoh::ring::{
    cochain_super_parity, ext_module, generator_probe, hilbert_series, ring_truncation,
    GradedRingTruncation,
};
use supercoh::spectral::{e2_factorization, edge_vs_restriction, g0_subalgebra, SpectralSequence};

const DEGREE_CAP: usize = 12;

#[derive(Parser)]
#[command(
    name = "supercoh",
    about = "Relative cohomology of finite-dimensional Lie superalgebras over Q",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the algebra (and optional subalgebra/module) documents.
    Validate(Job),
    /// Per-degree dimensions of H^n(g, a; M) with parity breakdown.
    Cohomology(Job),
    /// Page dimensions of the spectral sequence of the even-argument filtration.
    Spectral(Job),
    /// Compare E_2^{p,q} with H^p(g, g0; M) (x) H^q(g0, a; C).
    E2check(Job),
    /// Detect whether all page differentials d_r (r >= 2) vanish.
    Collapse(Job),
    /// Compare the rank of restriction with the edge of the spectral sequence.
    Edge(Job),
    /// The truncated cohomology ring: dims, generators, multiplication tables.
    Ring(Job),
    /// Ext*(M, M) with its ring action and degreewise annihilator.
    Ext(Job),
}

#[derive(Args)]
struct Job {
    /// Algebra: preset glMN (e.g. gl11, gl21), sl2, or a JSON document path.
    #[arg(long, default_value = "gl11")]
    algebra: String,
    /// Subalgebra: zero | center | cartan | g0 | comma-separated indices |
    /// JSON document path.
    #[arg(long, default_value = "zero")]
    subalgebra: String,
    /// Module: trivial | adjoint | induced (gl11 only) | JSON document path.
    #[arg(long, default_value = "trivial")]
    module: String,
    /// Largest cohomological degree to compute (hard cap 12).
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
    /// Output format.
    #[arg(long, default_value = "json")]
    format: String,
    /// Restrict reported dimensions to even (parity-0) cochain classes.
    #[arg(long)]
    even_hom_only: bool,
    /// Highest page to print (spectral command).
    #[arg(long, default_value_t = 2)]
    pages: isize,
}

/// Error classes map onto the exit codes: schema/config problems exit 2,
/// validation failures exit 1.
enum CliError {
    Schema(String),
    Validation(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Schema(_) => 2,
            CliError::Validation(_) => 1,
        }
    }
    fn message(&self) -> &str {
        match self {
            CliError::Schema(m) => m,
            CliError::Validation(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, job) = match &cli.command {
        Command::Validate(j) => ("validate", j),
        Command::Cohomology(j) => ("cohomology", j),
        Command::Spectral(j) => ("spectral", j),
        Command::E2check(j) => ("e2check", j),
        Command::Collapse(j) => ("collapse", j),
        Command::Edge(j) => ("edge", j),
        Command::Ring(j) => ("ring", j),
        Command::Ext(j) => ("ext", j),
    };
    match run(name, job) {
        Ok(report) => {
            emit(&report, &job.format);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

struct Inputs {
    alg: LieSuperalgebra,
    sub: EvenSubalgebra,
    rep: Representation,
    hash: String,
}

fn load_inputs(job: &Job) -> Result<Inputs, CliError> {
    if job.max_degree > DEGREE_CAP {
        return Err(CliError::Schema(format!(
            "max-degree {} exceeds the hard cap {DEGREE_CAP}",
            job.max_degree
        )));
    }
    let alg = resolve_algebra(&job.algebra)?;
    let sub = resolve_subalgebra(&job.subalgebra, &alg)?;
    let rep = resolve_module(&job.module, &alg)?;
    let combined = json!({
        "algebra": serde_json::to_value(AlgebraDoc::from_algebra(&alg)).unwrap(),
        "subalgebra": sub
            .vectors()
            .iter()
            .map(|v| v.iter().map(format_rat).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "module": serde_json::to_value(ModuleDoc::from_representation(&rep)).unwrap(),
    });
    let hash = sha256_hex(&combined);
    Ok(Inputs {
        alg,
        sub,
        rep,
        hash,
    })
}

fn resolve_algebra(spec: &str) -> Result<LieSuperalgebra, CliError> {
    let b = spec.as_bytes();
    if b.len() == 4 && &b[..2] == b"gl" && b[2].is_ascii_digit() && b[3].is_ascii_digit() {
        let m = (b[2] - b'0') as usize;
        let n = (b[3] - b'0') as usize;
        return make_gl(m, n).map_err(|e| CliError::Schema(e.to_string()));
    }
    if spec == "sl2" {
        return Ok(make_sl2());
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| CliError::Schema(format!("cannot read algebra file {spec:?}: {e}")))?;
    let doc: AlgebraDoc = serde_json::from_str(&text)
        .map_err(|e| CliError::Schema(format!("algebra document {spec:?}: {e}")))?;
    doc.to_algebra()
        .map_err(|e| CliError::Schema(format!("algebra document {spec:?}: {e}")))
}

fn resolve_subalgebra(spec: &str, alg: &LieSuperalgebra) -> Result<EvenSubalgebra, CliError> {
    match spec {
        "zero" => return Ok(EvenSubalgebra::zero()),
        "g0" => return Ok(g0_subalgebra(alg)),
        "center" => return Ok(center_subalgebra(alg)),
        "cartan" => return Ok(cartan_subalgebra(alg)),
        _ => {}
    }
    if spec.chars().all(|c| c.is_ascii_digit() || c == ',') && !spec.is_empty() {
        let indices: Vec<usize> = spec
            .split(',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse().unwrap())
            .collect();
        return EvenSubalgebra::from_indices(alg, &indices)
            .map_err(|e| CliError::Schema(format!("subalgebra indices {spec:?}: {e}")));
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| CliError::Schema(format!("cannot read subalgebra file {spec:?}: {e}")))?;
    let doc: SubalgebraDoc = serde_json::from_str(&text)
        .map_err(|e| CliError::Schema(format!("subalgebra document {spec:?}: {e}")))?;
    doc.to_subalgebra(alg)
        .map_err(|e| CliError::Schema(format!("subalgebra document {spec:?}: {e}")))
}

fn resolve_module(spec: &str, alg: &LieSuperalgebra) -> Result<Representation, CliError> {
    match spec {
        "trivial" => return Ok(Representation::trivial(alg)),
        "adjoint" => return Ok(Representation::adjoint(alg)),
        "induced" => {
            return induced_gl11_module(alg).map_err(|e| CliError::Schema(e.to_string()))
        }
        _ => {}
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| CliError::Schema(format!("cannot read module file {spec:?}: {e}")))?;
    let doc: ModuleDoc = serde_json::from_str(&text)
        .map_err(|e| CliError::Schema(format!("module document {spec:?}: {e}")))?;
    doc.to_representation(alg, "custom")
        .map_err(|e| CliError::Schema(format!("module document {spec:?}: {e}")))
}

fn validate_inputs(inputs: &Inputs) -> Vec<String> {
    let mut violations: Vec<String> = inputs
        .alg
        .validate()
        .violations
        .iter()
        .map(|v| v.to_string())
        .collect();
    match inputs.rep.validate(&inputs.alg) {
        Ok(report) => violations.extend(report.violations.iter().map(|v| v.to_string())),
        Err(e) => violations.push(e.to_string()),
    }
    violations
}

fn run(command: &str, job: &Job) -> Result<Value, CliError> {
    let inputs = load_inputs(job)?;
    let violations = validate_inputs(&inputs);
    if command == "validate" {
        let valid = violations.is_empty();
        let report = envelope(
            command,
            job,
            &inputs,
            json!({"valid": valid, "violations": violations}),
        );
        if valid {
            return Ok(report);
        }
        emit(&report, &job.format);
        return Err(CliError::Validation("input documents are invalid".into()));
    }
    if !violations.is_empty() {
        return Err(CliError::Validation(format!(
            "invalid inputs: {}",
            violations.join("; ")
        )));
    }
    let body = match command {
        "cohomology" => cohomology_report(job, &inputs)?,
        "spectral" => spectral_report(job, &inputs)?,
        "e2check" => e2check_report(job, &inputs)?,
        "collapse" => collapse_report(job, &inputs)?,
        "edge" => edge_report(job, &inputs)?,
        "ring" => ring_report(job, &inputs)?,
        "ext" => ext_report(job, &inputs)?,
        _ => unreachable!("command list is fixed"),
    };
    Ok(envelope(command, job, &inputs, body))
}

fn envelope(command: &str, job: &Job, inputs: &Inputs, body: Value) -> Value {
    json!({
        "command": command,
        "input_sha256": inputs.hash,
        "parameters": {
            "algebra": job.algebra,
            "subalgebra": job.subalgebra,
            "module": job.module,
            "max_degree": job.max_degree,
            "even_hom_only": job.even_hom_only,
        },
        "report": body,
    })
}

fn complex(inputs: &Inputs) -> Result<RelativeComplex, CliError> {
    RelativeComplex::new(
        inputs.alg.clone(),
        inputs.sub.clone(),
        inputs.rep.clone(),
    )
    .map_err(CliError::Schema)
}

fn cohomology_report(job: &Job, inputs: &Inputs) -> Result<Value, CliError> {
    let c = complex(inputs)?;
    let mut degrees = Vec::new();
    for n in 0..=job.max_degree {
        let h = c.cohomology(n);
        let mut even = 0usize;
        let mut odd = 0usize;
        for r in &h.representatives {
            match cochain_super_parity(&c, n, r) {
                Some(1) => odd += 1,
                _ => even += 1,
            }
        }
        let dim = if job.even_hom_only { even } else { h.dim };
        degrees.push(json!({
            "degree": n,
            "dim": dim,
            "dim_even": even,
            "dim_odd": odd,
        }));
    }
    Ok(json!({"degrees": degrees}))
}

fn spectral_report(job: &Job, inputs: &Inputs) -> Result<Value, CliError> {
    let c = complex(inputs)?;
    let ss = SpectralSequence::new(&c, job.max_degree);
    ss.check_filtration_invariants()
        .map_err(CliError::Validation)?;
    let window = job.max_degree.saturating_sub(2);
    let mut pages = BTreeMap::new();
    for r in 0..=job.pages.max(0) {
        let mut cells = BTreeMap::new();
        for (k, v) in ss.page_table(r, window) {
            cells.insert(format!("{},{}", k.0, k.1), v);
        }
        pages.insert(r.to_string(), cells);
    }
    let mut infinity = BTreeMap::new();
    for n in 0..=window as isize {
        for p in 0..=n {
            infinity.insert(format!("{},{}", p, n - p), ss.infinity_dim(p, n - p));
        }
    }
    Ok(json!({"pages": pages, "infinity": infinity, "window": window}))
}

fn e2check_report(job: &Job, inputs: &Inputs) -> Result<Value, CliError> {
    let cells = e2_factorization(&inputs.alg, &inputs.sub, &inputs.rep, job.max_degree);
    let mut out = Vec::new();
    let mut mismatches = 0usize;
    for (p, q, e2, product) in cells {
        if e2 != product {
            mismatches += 1;
        }
        out.push(json!({
            "p": p, "q": q, "e2": e2, "product": product, "match": e2 == product,
        }));
    }
    Ok(json!({"cells": out, "mismatches": mismatches}))
}

fn collapse_report(job: &Job, inputs: &Inputs) -> Result<Value, CliError> {
    let c = complex(inputs)?;
    let ss = SpectralSequence::new(&c, job.max_degree);
    let window = job.max_degree.saturating_sub(2);
    let nonzero = ss.nonzero_differentials(window);
    let collapses = nonzero.is_empty();
    let list: Vec<Value> = nonzero
        .into_iter()
        .map(|(r, p, q, rank)| json!({"r": r, "p": p, "q": q, "rank": rank}))
        .collect();
    Ok(json!({"collapses_at_e2": collapses, "window": window, "nonzero_differentials": list}))
}

fn edge_report(job: &Job, inputs: &Inputs) -> Result<Value, CliError> {
    let mut degrees = Vec::new();
    let mut all_equal = true;
    for n in 0..=job.max_degree {
        let (res, edge) = edge_vs_restriction(&inputs.alg, &inputs.sub, &inputs.rep, n);
        all_equal &= res == edge;
        degrees.push(json!({
            "degree": n, "restriction_rank": res, "edge_rank": edge, "match": res == edge,
        }));
    }
    Ok(json!({"degrees": degrees, "all_match": all_equal}))
}

/// Restricts a ring truncation to the even (parity-0) classes: products of
/// even classes are even, so the tables close after slicing.
fn even_positions(c: &RelativeComplex, rt: &GradedRingTruncation) -> Vec<Vec<usize>> {
    (0..=rt.max_degree)
        .map(|n| {
            rt.groups[n]
                .representatives
                .iter()
                .enumerate()
                .filter(|(_, r)| cochain_super_parity(c, n, r) != Some(1))
                .map(|(i, _)| i)
                .collect()
        })
        .collect()
}

fn ring_report(job: &Job, inputs: &Inputs) -> Result<Value, CliError> {
    // the ring always uses trivial coefficients, whatever module was loaded
    let c = RelativeComplex::new(
        inputs.alg.clone(),
        inputs.sub.clone(),
        Representation::trivial(&inputs.alg),
    )
    .map_err(CliError::Schema)?;
    let rt = ring_truncation(&c, job.max_degree);
    let keep: Vec<Vec<usize>> = if job.even_hom_only {
        even_positions(&c, &rt)
    } else {
        (0..=rt.max_degree)
            .map(|n| (0..rt.dims[n]).collect())
            .collect()
    };
    let dims: Vec<usize> = keep.iter().map(|k| k.len()).collect();

    let mut tables = BTreeMap::new();
    for (&(i, j), table) in &rt.tables {
        let sliced: Vec<Vec<Vec<String>>> = keep[i]
            .iter()
            .map(|&a| {
                keep[j]
                    .iter()
                    .map(|&b| {
                        keep[i + j]
                            .iter()
                            .map(|&t| format_rat(&table[a][b][t]))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        tables.insert(format!("{i},{j}"), sliced);
    }

    // generator degrees, one entry per independent generator
    let probe = generator_probe(&rt);
    let mut generators = Vec::new();
    for (deg, count) in &probe.generators {
        for _ in 0..*count {
            generators.push(*deg);
        }
    }
    Ok(json!({
        "dims": dims,
        "hilbert_series": hilbert_series(&rt),
        "generators": generators,
        "generated_by_half_degrees": probe.generated_by_half,
        "tables": tables,
    }))
}

fn ext_report(job: &Job, inputs: &Inputs) -> Result<Value, CliError> {
    let ext = ext_module(&inputs.alg, &inputs.sub, &inputs.rep, job.max_degree);
    let annihilator: Vec<Value> = ext
        .annihilator
        .iter()
        .enumerate()
        .map(|(k, ann)| {
            json!({
                "degree": k + 1,
                "dim": ann.dim(),
                "ring_dim": ext.ring.dims[k + 1],
            })
        })
        .collect();
    let mut action = BTreeMap::new();
    for (&(i, j), table) in &ext.action {
        let rendered: Vec<Vec<Vec<String>>> = table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|coords| coords.iter().map(format_rat).collect())
                    .collect()
            })
            .collect();
        action.insert(format!("{i},{j}"), rendered);
    }
    Ok(json!({
        "ext_dims": ext.ext_dims,
        "ring_dims": ext.ring.dims,
        "annihilator": annihilator,
        "action_tables": action,
    }))
}

fn emit(report: &Value, format: &str) {
    if format == "text" {
        print_text(report, 0);
    } else {
        println!("{}", serde_json::to_string(report).expect("report serializes"));
    }
}

/// Plain indented rendering of the report tree for --format text.
fn print_text(v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        println!("{pad}{k}:");
                        print_text(val, indent + 1);
                    }
                    _ => println!("{pad}{k}: {val}"),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        print_text(item, indent);
                        println!();
                    }
                    _ => println!("{pad}- {item}"),
                }
            }
        }
        _ => println!("{pad}{v}"),
    }
}
