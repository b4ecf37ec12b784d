mod config;
mod output;

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use config::FileConfig;
use output::{big_int, fmt_float, to_pretty};
use walled_core::linalg;
use walled_core::multiplicity::{checksum, inventory, total_dimension, Sector};
use walled_core::oracle::{verify, SweepMode};
use walled_core::permgroup::{all_permutations, classify, enumerate_sab, partitions_of, Partition, Permutation, SabClass};
use walled_core::ppt::{ppt_region, ProjectorMixture, SpectrumModel};
use walled_core::walled::{gram, generator_permutations, EmbeddingContext, WalledIrrep};
use walled_core::Error;

const SCHEMA: &str = "walled-irreps/1";

#[derive(Parser, Debug)]
#[command(name = "walled", version, about = "Irreps of partially transposed permutation operators")]
struct Cli {
    /// key=value file supplying defaults for any flag
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct Size {
    /// number of tensor factors
    #[arg(long)]
    n: Option<usize>,
    /// local dimension
    #[arg(long)]
    d: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Irrep matrices of permutations or of the algebra generators
    Irreps {
        #[command(flatten)]
        size: Size,
        /// partition of n-2, e.g. 2,1 (default: every irrep)
        #[arg(long)]
        alpha: Option<String>,
        /// only the generators e, (k k+1) and (n-1 n)'
        #[arg(long)]
        generators: bool,
    },
    /// Gram matrix Q(alpha), its rank, smallest eigenvalue and inverse
    Gram {
        #[command(flatten)]
        size: Size,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Irrep inventory with multiplicities and the d^n checksum
    Mult {
        #[command(flatten)]
        size: Size,
    },
    /// Compare closed forms against the dense tensor oracle
    Verify {
        #[command(flatten)]
        size: Size,
        /// every permutation of S(n) (the default)
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        /// number of random permutations and products
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// largest accepted absolute error
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// PPT feasibility grid for three-party Young projector mixtures
    PptRegion {
        #[arg(long)]
        d: Option<usize>,
        /// grid resolution R; points are (i/R, j/R) with i + j <= R
        #[arg(long)]
        grid: Option<usize>,
        /// write the CSV here instead of standard output
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// print the spectrum for trace weights a1,a2 instead of the grid
        #[arg(long, value_name = "A1,A2")]
        spectrum: Option<String>,
    },
    /// The S_ab classes of S(n)
    Classes {
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Validation(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Validation(e.to_string())
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 64,
            Failure::Validation(_) => 1,
            Failure::Verification(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Validation(m) | Failure::Verification(m) => m,
        }
    }
}

type Outcome = Result<String, Failure>;

fn pick<T: std::str::FromStr>(flag: Option<T>, cfg: &FileConfig, key: &str) -> Result<Option<T>, Failure> {
    match flag {
        Some(v) => Ok(Some(v)),
        None => cfg.parsed(key).map_err(Failure::Usage),
    }
}

fn require<T: std::str::FromStr>(flag: Option<T>, cfg: &FileConfig, key: &str) -> Result<T, Failure> {
    pick(flag, cfg, key)?.ok_or_else(|| Failure::Usage(format!("missing required --{key}")))
}

fn at_least(value: usize, min: usize, key: &str) -> Result<usize, Failure> {
    if value < min {
        return Err(Failure::Validation(format!("--{key} must be at least {min}, got {value}")));
    }
    Ok(value)
}

fn size(s: &Size, cfg: &FileConfig) -> Result<(usize, usize), Failure> {
    let n = at_least(require(s.n, cfg, "n")?, 2, "n")?;
    let d = at_least(require(s.d, cfg, "d")?, 2, "d")?;
    Ok((n, d))
}

fn parse_alpha(text: &str, n: usize) -> Result<Partition, Failure> {
    let alpha = Partition::parse(text)?;
    if alpha.weight() + 2 != n {
        return Err(Failure::Validation(format!("alpha {alpha} must be a partition of n-2 = {}", n - 2)));
    }
    Ok(alpha)
}

fn label(sigma: &Permutation) -> String {
    match classify(sigma) {
        SabClass::FixesN => sigma.to_string(),
        SabClass::Transposed { .. } => format!("{sigma}'"),
    }
}

fn irrep_json(w: &WalledIrrep, perms: &[Permutation]) -> Result<Value, Failure> {
    let mut matrices = Map::new();
    for p in perms {
        matrices.insert(label(p), json!(linalg::rows(&w.image(p)?)));
    }
    Ok(json!({
        "alpha": w.alpha().parts(),
        "dimension": w.dim(),
        "reduced": w.is_reduced(),
        "basis": w.labels().iter().map(|&(a, i)| json!([a, i])).collect::<Vec<_>>(),
        "matrices": matrices,
    }))
}

fn cmd_irreps(size_args: &Size, alpha: Option<String>, generators: bool, cfg: &FileConfig) -> Outcome {
    let (n, d) = size(size_args, cfg)?;
    let generators = generators || cfg.flag("generators").map_err(Failure::Usage)?;
    let alpha = pick(alpha, cfg, "alpha")?;
    let ctx = EmbeddingContext::new(n, d)?;
    let perms = if generators { generator_permutations(n) } else { all_permutations(n) };
    let head = json!({ "schema": SCHEMA, "n": n, "d": d });
    let mut out = head.as_object().cloned().unwrap_or_default();
    match alpha {
        Some(text) => {
            let a = parse_alpha(&text, n)?;
            let w = WalledIrrep::new(&a, &ctx)?;
            if let Value::Object(body) = irrep_json(&w, &perms)? {
                out.extend(body);
            }
        }
        None => {
            let mut irreps = Vec::new();
            let mut absent = Vec::new();
            for a in partitions_of(n - 2) {
                match WalledIrrep::new(&a, &ctx) {
                    Ok(w) => irreps.push(irrep_json(&w, &perms)?),
                    Err(Error::AbsentIrrep(_)) => absent.push(json!(a.parts())),
                    Err(e) => return Err(e.into()),
                }
            }
            out.insert("irreps".into(), Value::Array(irreps));
            out.insert("absent".into(), Value::Array(absent));
        }
    }
    Ok(to_pretty(Value::Object(out)))
}

fn cmd_gram(size_args: &Size, alpha: Option<String>, cfg: &FileConfig) -> Outcome {
    let (n, d) = size(size_args, cfg)?;
    let text = require(alpha, cfg, "alpha")?;
    let a = parse_alpha(&text, n)?;
    let g = gram(&a, &EmbeddingContext::new(n, d)?)?;
    Ok(to_pretty(json!({
        "schema": SCHEMA,
        "n": n,
        "d": d,
        "alpha": a.parts(),
        "q": linalg::rows(&g.q),
        "rank": g.rank,
        "min_eigenvalue": g.min_eigenvalue(),
        "inverse": g.inverse.as_ref().map(linalg::rows),
    })))
}

fn cmd_mult(size_args: &Size, cfg: &FileConfig) -> Outcome {
    let (n, d) = size(size_args, cfg)?;
    let inv = inventory(n, d)?;
    let entries: Vec<Value> = inv
        .iter()
        .map(|e| {
            json!({
                "label": e.label.partition.parts(),
                "sector": match e.label.sector { Sector::N => "N", Sector::M => "M" },
                "weights": e.label.weights,
                "dim": e.dim,
                "mult": big_int(e.mult),
                "product": big_int(e.product()),
            })
        })
        .collect();
    let total = checksum(&inv);
    let expected = total_dimension(n, d)?;
    let mut text = to_pretty(json!({ "schema": SCHEMA, "n": n, "d": d, "entries": entries }));
    let status = if total == expected { "OK" } else { "MISMATCH" };
    write!(text, "\nchecksum {total} = {d}^{n} {status}").expect("writing to a String");
    if total != expected {
        return Err(Failure::Verification(format!("{text}\nexpected {expected}")));
    }
    Ok(text)
}

fn cmd_verify(
    size_args: &Size,
    exhaustive: bool,
    samples: Option<usize>,
    seed: Option<u64>,
    tolerance: Option<f64>,
    cfg: &FileConfig,
) -> Outcome {
    let (n, d) = size(size_args, cfg)?;
    let exhaustive = exhaustive || cfg.flag("exhaustive").map_err(Failure::Usage)?;
    let samples = if exhaustive { None } else { pick(samples, cfg, "samples")? };
    let seed = pick(seed, cfg, "seed")?.unwrap_or(1);
    let tol = pick(tolerance, cfg, "tolerance")?.unwrap_or(1e-8);
    if tol.is_nan() || tol <= 0.0 {
        return Err(Failure::Validation(format!("--tolerance must be positive, got {tol}")));
    }
    let mode = match samples {
        Some(count) => SweepMode::Samples { count, seed },
        None => SweepMode::Exhaustive,
    };
    let report = verify(n, d, mode)?;
    let mut text = format!("{:<10} {:<13} {:>6} {:>12}  status\n", "alpha", "check", "cases", "max_error");
    let mut ok = true;
    for r in &report.rows {
        let pass = r.max_error <= tol;
        ok &= pass;
        writeln!(
            text,
            "{:<10} {:<13} {:>6} {:>12.3e}  {}",
            r.alpha,
            r.check,
            r.cases,
            r.max_error,
            if pass { "PASS" } else { "FAIL" }
        )
        .expect("writing to a String");
    }
    write!(text, "verify n={n} d={d}: {}", if ok { "PASS" } else { "FAIL" }).expect("writing to a String");
    if ok {
        Ok(text)
    } else {
        Err(Failure::Verification(text))
    }
}

fn parse_pair(text: &str) -> Result<(f64, f64), Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let bad = || Failure::Usage(format!("--spectrum expects A1,A2, got {text:?}"));
    if parts.len() != 2 {
        return Err(bad());
    }
    Ok((parts[0].parse().map_err(|_| bad())?, parts[1].parse().map_err(|_| bad())?))
}

fn cmd_ppt(d: Option<usize>, grid: Option<usize>, out: Option<PathBuf>, spectrum: Option<String>, cfg: &FileConfig) -> Outcome {
    let d = require(d, cfg, "d")?;
    if let Some(text) = pick(spectrum, cfg, "spectrum")? {
        let (a1, a2) = parse_pair(&text)?;
        let a3 = 1.0 - a1 - a2;
        if a1 < 0.0 || a2 < 0.0 || a3 < -1e-12 {
            return Err(Failure::Validation(format!("weights ({a1}, {a2}, {a3}) are not on the simplex")));
        }
        let mix = ProjectorMixture::from_trace_weights(d, [a1, a2, a3.max(0.0)])?;
        let entries = SpectrumModel::new(d)?.spectrum(mix.raw_coeffs)?;
        let mut text = format!("{:<6} {:<8} {:>20} {:>10}\n", "sector", "label", "eigenvalue", "mult");
        let mut total: u128 = 0;
        for e in &entries {
            total += e.mult;
            writeln!(text, "{:<6} {:<8} {:>20} {:>10}", e.sector, e.label.to_string(), fmt_float(e.eigenvalue), e.mult)
                .expect("writing to a String");
        }
        write!(text, "total multiplicity {total} = {d}^3").expect("writing to a String");
        return Ok(text);
    }
    let grid = pick(grid, cfg, "grid")?.unwrap_or(400);
    let points = ppt_region(d, grid)?;
    let mut csv = String::from("a_lambda1,a_lambda2,feasible,min_eig\n");
    for p in &points {
        writeln!(csv, "{},{},{},{}", fmt_float(p.a_lambda1), fmt_float(p.a_lambda2), u8::from(p.feasible), fmt_float(p.min_eig))
            .expect("writing to a String");
    }
    match pick(out, cfg, "out")? {
        Some(path) => {
            fs::write(&path, csv).map_err(|e| Failure::Validation(format!("cannot write {}: {e}", path.display())))?;
            let feasible = points.iter().filter(|p| p.feasible).count();
            Ok(format!("wrote {} points ({feasible} feasible) to {}", points.len(), path.display()))
        }
        None => Ok(csv.trim_end().to_string()),
    }
}

fn perm_json(p: &Permutation) -> Value {
    json!({ "images": p.images(), "cycles": p.to_string() })
}

fn cmd_classes(n: Option<usize>, cfg: &FileConfig) -> Outcome {
    let n = at_least(require(n, cfg, "n")?, 2, "n")?;
    if n > 10 {
        return Err(Failure::Validation(format!("classes lists all of S(n); n = {n} is too large")));
    }
    let part = enumerate_sab(n);
    let classes: Vec<Value> = part
        .classes
        .iter()
        .map(|(&(a, b), members)| json!({ "a": a, "b": b, "members": members.iter().map(perm_json).collect::<Vec<_>>() }))
        .collect();
    Ok(to_pretty(json!({
        "n": n,
        "classes": classes,
        "fixes_n": part.fixes_n.iter().map(perm_json).collect::<Vec<_>>(),
    })))
}

fn configure_threads() -> Result<(), Failure> {
    if let Ok(v) = std::env::var("WALLED_THREADS") {
        let k: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&k| k > 0)
            .ok_or_else(|| Failure::Validation(format!("WALLED_THREADS must be a positive integer, got {v:?}")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| Failure::Validation(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    configure_threads()?;
    let cfg = match &cli.config {
        Some(path) => FileConfig::load(path).map_err(Failure::Usage)?,
        None => FileConfig::default(),
    };
    match cli.command {
        Command::Irreps { size, alpha, generators } => cmd_irreps(&size, alpha, generators, &cfg),
        Command::Gram { size, alpha } => cmd_gram(&size, alpha, &cfg),
        Command::Mult { size } => cmd_mult(&size, &cfg),
        Command::Verify { size, exhaustive, samples, seed, tolerance } => {
            cmd_verify(&size, exhaustive, samples, seed, tolerance, &cfg)
        }
        Command::PptRegion { d, grid, out, spectrum } => cmd_ppt(d, grid, out, spectrum, &cfg),
        Command::Classes { n } => cmd_classes(n, &cfg),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Verification(text) => println!("{text}"),
                other => eprintln!("walled: {}", other.message()),
            }
            if matches!(f, Failure::Usage(_)) {
                eprintln!("run `walled --help` for usage");
            }
            ExitCode::from(f.code())
        }
    }
}
