use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use coxeter_om::affine;
use coxeter_om::coxeter::{ngcm_det, ngcm_homotopy_exact, symmetrize_forest};
use coxeter_om::io::{
    self, ngcm_json, parse_ray_set, read_ngcm, read_snapshot, snapshot_json, AnyNgcm, AnySnapshot,
};
use coxeter_om::omclosure::{
    closure, is_biclosed, om_axioms_check, snapshot_cone_closure, BiclosedVerdict, ClosureKind,
    ConeCertificate,
};
use coxeter_om::rootsys::{enumerate_roots, Snapshot};
use coxeter_om::scalars::{parse_rational, OrderedScalar, Scalar};
use coxeter_om::verify::{
    recheck, run_example_61, run_example_62, run_forest_uniqueness, run_rank3_homotopy,
    run_trichotomy, standard_233_pair, standard_a2_tilde_pair, standard_a3_pair,
    Example62Params, ScenarioReport,
};

/// Exact realized root systems of Coxeter groups and their oriented-matroid
/// data: validation, enumeration, closures, and scenario verification.
#[derive(Parser)]
#[command(name = "coxeter-om", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an NGCM file and print the derived Coxeter matrix.
    ValidateNgcm { file: PathBuf },
    /// Rescale a forest NGCM to its symmetric form.
    Symmetrize {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Interpolate between two NGCMs of the same Coxeter system at rational t.
    Homotopy {
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(long)]
        t: String,
    },
    /// Enumerate a root-system fragment breadth-first to a depth bound.
    Enumerate {
        #[arg(long)]
        ngcm: PathBuf,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Close a set of snapshot rays under the chosen closure operator.
    Closure {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        snapshot: PathBuf,
        /// Inline JSON (`{"rays": [..]}` or `[..]`) or a path to a JSON file.
        #[arg(long)]
        set: String,
    },
    /// Test whether a set and its complement are both closed.
    Biclosed {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        snapshot: PathBuf,
        #[arg(long)]
        set: String,
        /// Ambient ray set; defaults to every ray of the snapshot.
        #[arg(long)]
        positives: Option<String>,
    },
    /// Check the oriented-matroid closure axioms on a snapshot restriction.
    OmAxioms {
        #[arg(long)]
        snapshot: PathBuf,
        /// Rays to restrict to; defaults to all (ground set doubles them
        /// with signs, so keep this small).
        #[arg(long)]
        rays: Option<String>,
    },
    /// Type Ã_n computations over the symbolic Laurent tower.
    #[command(subcommand, name = "affine-a")]
    AffineA(AffineCmd),
    /// Run a verification scenario and emit a machine-checkable report.
    Verify {
        #[command(subcommand)]
        scenario: Scenario,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Cone,
    Two,
}

impl From<KindArg> for ClosureKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Cone => ClosureKind::Cone,
            KindArg::Two => ClosureKind::Two,
        }
    }
}

#[derive(Subcommand)]
enum AffineCmd {
    /// Determinant of n+1 indexed roots, with its factorization certificate.
    Det {
        #[arg(long)]
        n: usize,
        /// JSON array of indices `{"eta": 1, "m": 0, "k": 0, "i": 1, "j": 1}`.
        #[arg(long)]
        tuple: String,
    },
    /// Factor a Laurent polynomial into the canonical determinant form.
    Factor {
        /// JSON exponent->coefficient map, e.g. `{"1": "1", "-1": "-1"}`.
        #[arg(long)]
        poly: String,
    },
    /// Sample tuples and verify the trichotomy behaviour for this n.
    Trichotomy {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: ReportOut,
    },
}

#[derive(Args)]
struct ReportOut {
    /// Write the JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Append one `scenario,check,passed` line per check here.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Scenario {
    /// Ã_n trichotomy: factorization and regime signs of sampled tuples.
    Trichotomy {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: ReportOut,
    },
    /// Rank-3 homotopy sign constancy between two NGCMs.
    Rank3Homotopy {
        /// Built-in pair: the affine (3,3,3) pair or the (2,3,inf) pair.
        #[arg(long, value_enum)]
        pair: Option<BuiltinPair>,
        #[arg(long)]
        ngcm_a: Option<PathBuf>,
        #[arg(long)]
        ngcm_b: Option<PathBuf>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Number of grid intervals (grid points = this + 1).
        #[arg(long, default_value_t = 100)]
        grid: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: ReportOut,
    },
    /// The rank-4 symmetric-NGCM chirotope family.
    Example61 {
        #[arg(long, default_value_t = 3)]
        m: u32,
        #[arg(long, default_value_t = 3)]
        n_label: u32,
        #[arg(long, default_value = "2")]
        c: String,
        #[arg(long, default_value = "2")]
        d: String,
        #[command(flatten)]
        out: ReportOut,
    },
    /// The golden-ratio biclosed/biconvex counterexample.
    Example62 {
        #[arg(long, default_value_t = 16)]
        depth: usize,
        #[arg(long, default_value_t = 5)]
        biclosed_depth: usize,
        #[command(flatten)]
        out: ReportOut,
    },
    /// Forest uniqueness across realizations (defaults to an A_3 pair).
    ForestUniqueness {
        /// NGCM files; all must share a forest Coxeter matrix.
        #[arg(long)]
        ngcm: Vec<PathBuf>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: ReportOut,
    },
    /// Re-verify every certificate embedded in an existing report.
    Recheck { report: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum BuiltinPair {
    A2Tilde,
    M233,
}

fn inline_or_file(arg: &str) -> Result<Value, String> {
    match serde_json::from_str(arg) {
        Ok(v) => Ok(v),
        Err(_) => {
            let text = std::fs::read_to_string(arg)
                .map_err(|e| format!("{arg}: neither inline JSON nor a readable file ({e})"))?;
            serde_json::from_str(&text).map_err(|e| format!("{arg}: {e}"))
        }
    }
}

fn write_json(path: &Path, value: &Value) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    std::fs::write(path, text + "\n").map_err(|e| format!("{}: {e}", path.display()))
}

fn emit_report(report: &ScenarioReport, out: &ReportOut) -> Result<bool, String> {
    for check in &report.checks {
        println!(
            "[{}] {}: {}",
            if check.passed { "pass" } else { "FAIL" },
            check.id,
            check.detail
        );
    }
    println!(
        "{}: {} ({} checks, {} ms{})",
        report.scenario,
        if report.passed { "pass" } else { "FAIL" },
        report.checks.len(),
        report.wall_time_ms,
        if report.contaminated {
            ", CONTAMINATED"
        } else {
            ""
        }
    );
    if let Some(path) = &out.out {
        let value = serde_json::to_value(report).map_err(|e| e.to_string())?;
        write_json(path, &value)?;
    }
    if let Some(path) = &out.csv {
        let mut text = String::from("scenario,check,passed\n");
        for check in &report.checks {
            text.push_str(&format!(
                "{},{},{}\n",
                report.scenario, check.id, check.passed
            ));
        }
        std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(report.passed && !report.contaminated)
}

fn with_snapshot<R>(
    snap: &AnySnapshot,
    mut f: impl FnMut(&Snapshot<coxeter_om::Rational>) -> R,
    mut g: impl FnMut(&Snapshot<coxeter_om::Quad5>) -> R,
) -> Result<R, String> {
    match snap {
        AnySnapshot::Rational(s) => Ok(f(s)),
        AnySnapshot::Quad5(s) => Ok(g(s)),
        AnySnapshot::Laurent(_) => Err(
            "closure operations need an ordered tower: instantiate the Laurent parameter first"
                .to_string(),
        ),
    }
}

fn cmd_validate(file: &Path) -> Result<bool, String> {
    match read_ngcm(file) {
        Ok(ngcm) => {
            println!("valid NGCM: rank {}, tower {}", ngcm.rank(), ngcm.tower());
            let cox = match &ngcm {
                AnyNgcm::Rational(n) => {
                    println!("det = {}", ngcm_det(n));
                    n.cox().clone()
                }
                AnyNgcm::Quad5(n) => {
                    println!("det = {}", ngcm_det(n));
                    n.cox().clone()
                }
                AnyNgcm::Laurent(n) => {
                    println!("det = {}", ngcm_det(n));
                    n.cox().clone()
                }
            };
            for r in 0..cox.rank() {
                for s in r + 1..cox.rank() {
                    println!("  m({r},{s}) = {}", cox.label(r, s));
                }
            }
            Ok(true)
        }
        Err(io::IoError::InvalidNgcm(violations)) => {
            for v in violations {
                println!("violation: {v}");
            }
            Ok(false)
        }
        Err(e) => Err(e.to_string()),
    }
}

fn cmd_symmetrize(file: &Path, out: Option<&Path>) -> Result<bool, String> {
    fn go<K: Scalar>(
        ngcm: &coxeter_om::coxeter::Ngcm<K>,
        out: Option<&Path>,
    ) -> Result<bool, String> {
        match symmetrize_forest(ngcm) {
            Ok(diag) => {
                let rescaled = diag.apply(ngcm);
                println!(
                    "rescaling diagonal: [{}]",
                    diag.factors()
                        .iter()
                        .map(|d| d.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                );
                let doc = ngcm_json(&rescaled);
                if let Some(path) = out {
                    write_json(path, &doc)?;
                } else {
                    println!("{doc}");
                }
                Ok(true)
            }
            Err(e) => {
                println!("cannot symmetrize: {e}");
                Ok(false)
            }
        }
    }
    match read_ngcm(file).map_err(|e| e.to_string())? {
        AnyNgcm::Rational(n) => go(&n, out),
        AnyNgcm::Quad5(n) => go(&n, out),
        AnyNgcm::Laurent(n) => go(&n, out),
    }
}

fn cmd_homotopy(file_a: &Path, file_b: &Path, t: &str) -> Result<bool, String> {
    let t = parse_rational(t).map_err(|e| e.to_string())?;
    let a = read_ngcm(file_a).map_err(|e| e.to_string())?;
    let b = read_ngcm(file_b).map_err(|e| e.to_string())?;
    fn go<K: OrderedScalar>(
        a: &coxeter_om::coxeter::Ngcm<K>,
        b: &coxeter_om::coxeter::Ngcm<K>,
        t: &coxeter_om::Rational,
    ) -> Result<bool, String> {
        match ngcm_homotopy_exact(a, b, t) {
            Ok(m) => {
                println!("{}", ngcm_json(&m));
                Ok(true)
            }
            Err(e) => {
                println!("exact interpolation unavailable: {e}");
                Ok(false)
            }
        }
    }
    match (a, b) {
        (AnyNgcm::Rational(a), AnyNgcm::Rational(b)) => go(&a, &b, &t),
        (AnyNgcm::Quad5(a), AnyNgcm::Quad5(b)) => go(&a, &b, &t),
        _ => Err("homotopy endpoints must share an ordered tower".into()),
    }
}

fn cmd_enumerate(ngcm: &Path, depth: usize, out: Option<&Path>) -> Result<bool, String> {
    fn go<K: Scalar>(
        ngcm: coxeter_om::coxeter::Ngcm<K>,
        depth: usize,
        out: Option<&Path>,
    ) -> Result<bool, String> {
        let datum = coxeter_om::rootsys::RootDatum::new(ngcm);
        let snap = enumerate_roots(&datum, depth).map_err(|e| e.to_string())?;
        println!(
            "{} rays at depth <= {depth}{}",
            snap.len(),
            if snap.complete() { " (orbit exhausted)" } else { "" }
        );
        let doc = snapshot_json(&snap).map_err(|e| e.to_string())?;
        if let Some(path) = out {
            write_json(path, &doc)?;
        } else {
            println!("{doc}");
        }
        Ok(true)
    }
    match read_ngcm(ngcm).map_err(|e| e.to_string())? {
        AnyNgcm::Rational(n) => go(n, depth, out),
        AnyNgcm::Quad5(n) => go(n, depth, out),
        AnyNgcm::Laurent(n) => go(n, depth, out),
    }
}

fn cmd_closure(kind: ClosureKind, snapshot: &Path, set: &str) -> Result<bool, String> {
    let snap = read_snapshot(snapshot).map_err(|e| e.to_string())?;
    let set_doc = inline_or_file(set)?;
    let set = parse_ray_set(&set_doc, snap.len()).map_err(|e| e.to_string())?;
    with_snapshot(
        &snap,
        |s| {
            let report = closure(s, &set, kind);
            println!("{}", json!({
                "input": report.input,
                "closed": report.closed,
                "contaminated": report.contaminated,
            }));
        },
        |s| {
            let report = closure(s, &set, kind);
            println!("{}", json!({
                "input": report.input,
                "closed": report.closed,
                "contaminated": report.contaminated,
            }));
        },
    )?;
    Ok(true)
}

fn cmd_biclosed(
    kind: ClosureKind,
    snapshot: &Path,
    set: &str,
    positives: Option<&str>,
) -> Result<bool, String> {
    let snap = read_snapshot(snapshot).map_err(|e| e.to_string())?;
    let set_doc = inline_or_file(set)?;
    let set = parse_ray_set(&set_doc, snap.len()).map_err(|e| e.to_string())?;
    let positives = match positives {
        Some(p) => parse_ray_set(&inline_or_file(p)?, snap.len()).map_err(|e| e.to_string())?,
        None => (0..snap.len()).collect(),
    };
    fn render<K: OrderedScalar>(verdict: &BiclosedVerdict<K>) -> Value {
        match verdict {
            BiclosedVerdict::Biclosed { contaminated } => json!({
                "biclosed": true,
                "contaminated": contaminated,
            }),
            BiclosedVerdict::NotBiclosed {
                witness,
                witness_in_set,
                certificate,
                generators,
            } => json!({
                "biclosed": false,
                "witness": witness,
                "witness_in_set": witness_in_set,
                "generators": generators,
                "certificate": match certificate {
                    ConeCertificate::Member { coeffs } =>
                        json!({"member": coeffs.iter().map(Scalar::to_json).collect::<Vec<_>>()}),
                    ConeCertificate::Separated { functional } =>
                        json!({"separated": functional.iter().map(Scalar::to_json).collect::<Vec<_>>()}),
                },
            }),
        }
    }
    with_snapshot(
        &snap,
        |s| println!("{}", render(&is_biclosed(s, &set, &positives, kind))),
        |s| println!("{}", render(&is_biclosed(s, &set, &positives, kind))),
    )?;
    Ok(true)
}

fn cmd_om_axioms(snapshot: &Path, rays: Option<&str>) -> Result<bool, String> {
    let snap = read_snapshot(snapshot).map_err(|e| e.to_string())?;
    let rays = match rays {
        Some(r) => parse_ray_set(&inline_or_file(r)?, snap.len()).map_err(|e| e.to_string())?,
        None => (0..snap.len()).collect(),
    };
    if 2 * rays.len() > 16 {
        return Err(format!(
            "{} rays give a signed ground set of {} elements; restrict with --rays (limit 16)",
            rays.len(),
            2 * rays.len()
        ));
    }
    let passed = with_snapshot(
        &snap,
        |s| {
            let (set, cx) = snapshot_cone_closure(s, &rays);
            let report = om_axioms_check(&set, cx);
            for v in &report.violations {
                println!("violation: {v:?}");
            }
            println!(
                "axioms on {} signed elements over {} subsets: {}",
                report.ground_size,
                report.subsets_checked,
                if report.passed() { "pass" } else { "FAIL" }
            );
            report.passed()
        },
        |s| {
            let (set, cx) = snapshot_cone_closure(s, &rays);
            let report = om_axioms_check(&set, cx);
            for v in &report.violations {
                println!("violation: {v:?}");
            }
            println!(
                "axioms on {} signed elements over {} subsets: {}",
                report.ground_size,
                report.subsets_checked,
                if report.passed() { "pass" } else { "FAIL" }
            );
            report.passed()
        },
    )?;
    Ok(passed)
}

fn parse_affine_tuple(n: usize, arg: &str) -> Result<Vec<affine::AffineIndex>, String> {
    let doc = inline_or_file(arg)?;
    let arr = doc
        .as_array()
        .ok_or_else(|| "tuple must be a JSON array of indices".to_string())?;
    if arr.len() != n + 1 {
        return Err(format!("need {} indices for n = {n}", n + 1));
    }
    arr.iter()
        .map(|v| serde_json::from_value(v.clone()).map_err(|e| e.to_string()))
        .collect()
}

fn cmd_affine(cmd: &AffineCmd) -> Result<bool, String> {
    match cmd {
        AffineCmd::Det { n, tuple } => {
            let tuple = parse_affine_tuple(*n, tuple)?;
            let det = affine::det_roots(*n, &tuple);
            let factored = affine::factor_det(&det);
            println!("{}", json!({
                "det": det.to_json(),
                "factored": factored,
            }));
            Ok(true)
        }
        AffineCmd::Factor { poly } => {
            let doc = inline_or_file(poly)?;
            let p = coxeter_om::LaurentPoly::from_json(&doc).map_err(|e| e.to_string())?;
            let factored = affine::factor_det(&p);
            println!("{}", serde_json::to_string(&factored).unwrap());
            Ok(factored.is_of_form())
        }
        AffineCmd::Trichotomy { n, samples, seed, out } => {
            let report = run_trichotomy(*n, *samples, *seed);
            emit_report(&report, out)
        }
    }
}

fn cmd_verify(scenario: &Scenario) -> Result<bool, String> {
    match scenario {
        Scenario::Trichotomy { n, samples, seed, out } => {
            emit_report(&run_trichotomy(*n, *samples, *seed), out)
        }
        Scenario::Rank3Homotopy {
            pair,
            ngcm_a,
            ngcm_b,
            samples,
            grid,
            seed,
            out,
        } => {
            let (a, b) = match (pair, ngcm_a, ngcm_b) {
                (Some(BuiltinPair::A2Tilde), None, None) => standard_a2_tilde_pair(),
                (Some(BuiltinPair::M233), None, None) => standard_233_pair(),
                (None, Some(pa), Some(pb)) => {
                    let a = read_ngcm(pa).map_err(|e| e.to_string())?;
                    let b = read_ngcm(pb).map_err(|e| e.to_string())?;
                    match (a, b) {
                        (AnyNgcm::Rational(a), AnyNgcm::Rational(b)) => (a, b),
                        _ => {
                            return Err(
                                "rank-3 homotopy files must both use the rational tower".into()
                            )
                        }
                    }
                }
                _ => return Err("give either --pair or both --ngcm-a and --ngcm-b".into()),
            };
            emit_report(&run_rank3_homotopy(&a, &b, *samples, *grid, *seed), out)
        }
        Scenario::Example61 { m, n_label, c, d, out } => {
            let c = parse_rational(c).map_err(|e| e.to_string())?;
            let d = parse_rational(d).map_err(|e| e.to_string())?;
            emit_report(&run_example_61(*m, *n_label, c, d)?, out)
        }
        Scenario::Example62 { depth, biclosed_depth, out } => {
            let report = run_example_62(Example62Params {
                depth: *depth,
                biclosed_depth: *biclosed_depth,
            });
            emit_report(&report, out)
        }
        Scenario::ForestUniqueness { ngcm, samples, seed, out } => {
            let ngcms = if ngcm.is_empty() {
                let (a, b) = standard_a3_pair();
                vec![a, b]
            } else {
                let mut v = Vec::new();
                for path in ngcm {
                    match read_ngcm(path).map_err(|e| e.to_string())? {
                        AnyNgcm::Rational(n) => v.push(n),
                        _ => return Err("forest uniqueness expects rational-tower files".into()),
                    }
                }
                v
            };
            emit_report(&run_forest_uniqueness(&ngcms, *samples, *seed), out)
        }
        Scenario::Recheck { report } => {
            let text = std::fs::read_to_string(report).map_err(|e| e.to_string())?;
            let report: ScenarioReport = serde_json::from_str(&text).map_err(|e| e.to_string())?;
            let results = recheck(&report);
            let mut all_ok = true;
            for (id, ok) in &results {
                println!("[{}] {id}", if *ok { "ok" } else { "BAD" });
                all_ok &= ok;
            }
            println!(
                "recheck: {} certificates, {}",
                results.len(),
                if all_ok { "all verified" } else { "FAILURES" }
            );
            Ok(all_ok)
        }
    }
}

fn run(cli: &Cli) -> Result<bool, String> {
    match &cli.command {
        Command::ValidateNgcm { file } => cmd_validate(file),
        Command::Symmetrize { file, out } => cmd_symmetrize(file, out.as_deref()),
        Command::Homotopy { file_a, file_b, t } => cmd_homotopy(file_a, file_b, t),
        Command::Enumerate { ngcm, depth, out } => cmd_enumerate(ngcm, *depth, out.as_deref()),
        Command::Closure { kind, snapshot, set } => {
            cmd_closure((*kind).into(), snapshot, set)
        }
        Command::Biclosed { kind, snapshot, set, positives } => {
            cmd_biclosed((*kind).into(), snapshot, set, positives.as_deref())
        }
        Command::OmAxioms { snapshot, rays } => cmd_om_axioms(snapshot, rays.as_deref()),
        Command::AffineA(cmd) => cmd_affine(cmd),
        Command::Verify { scenario } => cmd_verify(scenario),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
