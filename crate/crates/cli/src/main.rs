use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use hesslucas::hessenberg::{
    brute_det_counted, brute_per_counted, hess_det_counted, hess_per_counted, Family,
    HessenbergMatrix, BRUTE_FORCE_MAX_N,
};
use hesslucas::ring::{parse_poly, GaussianInt, LaurentPoly, Ring};
use hesslucas::sequences::{SequenceFamily, SequenceSpec};
use hesslucas::verify::{check_matrix_theorem_range, Identity, VerificationReport, IDENTITY_NAMES};
use hesslucas::Error;
use serde_json::json;

const THREADS_ENV: &str = "HESSLUCAS_THREADS";

#[derive(Parser)]
#[command(
    name = "hesslucas",
    version,
    about = "Exact Hessenberg determinants, permanents and generalized Lucas polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one term of a sequence family.
    Gen {
        /// F, G, R, miles, er, pell, fibonacci, lucas or perrin.
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Er/Pell branch index, 1..=k.
        #[arg(long)]
        branch: Option<usize>,
        /// Coefficient assignment, e.g. `t1=1,t2=-1,t3=t4`.
        #[arg(long)]
        set: Option<String>,
        #[arg(long, value_enum, default_value_t = GenFormat::Text)]
        format: GenFormat,
    },
    /// Print a family matrix.
    Matrix {
        /// C, B, H or L.
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Coefficient assignment applied to every entry.
        #[arg(long)]
        set: Option<String>,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Text)]
        format: MatrixFormat,
    },
    /// Check an identity over a grid and print a JSON report.
    Verify {
        #[arg(long)]
        identity: String,
        /// Orders to check: `3`, `2..5`, `2..=5` or `2,4`.
        #[arg(long)]
        k: Option<String>,
        /// First index for the det-/per- identities (default 1).
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        /// Random matrices for detper-flip and oracle.
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Include wall time in the report (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
    },
    /// Time and count ring operations of the recursions against brute force.
    Bench {
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Comma-separated matrix sizes.
        #[arg(long, default_value = "4,6,8")]
        n: String,
        /// Family used for the determinant rows; the permanent rows use its flip.
        #[arg(long, default_value = "B")]
        family: String,
        #[arg(long, value_enum, default_value_t = BenchRing::Int)]
        ring: BenchRing,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchRing {
    /// Entries specialized at t = (1, ..., 1), evaluated over Z[i].
    Int,
    /// Symbolic entries.
    Poly,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

/// Failures that map to the usage exit code.
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<(String, bool), UsageError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(UsageError(msg)) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok((out, passed)) => {
            print!("{out}");
            ExitCode::from(if passed { 0 } else { 1 })
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> Result<(), UsageError> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| {
                UsageError(format!(
                    "{THREADS_ENV} must be a positive integer, got {v:?}"
                ))
            })?,
        Err(_) => 1,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| UsageError(e.to_string()))
}

fn run(cmd: Command) -> CmdResult {
    match cmd {
        Command::Gen {
            family,
            k,
            n,
            branch,
            set,
            format,
        } => cmd_gen(&family, k, n, branch, set.as_deref(), format),
        Command::Matrix {
            family,
            k,
            n,
            set,
            format,
        } => cmd_matrix(&family, k, n, set.as_deref(), format),
        Command::Verify {
            identity,
            k,
            n_min,
            n_max,
            trials,
            seed,
            timing,
        } => cmd_verify(&identity, k.as_deref(), n_min, n_max, trials, seed, timing),
        Command::Bench {
            k,
            n,
            family,
            ring,
            format,
        } => cmd_bench(k, &n, &family, ring, format),
    }
}

/// Parses `t1=1,t2=t3` (or `c1=...`) into `(index, value)` pairs.
fn parse_assignment(s: &str) -> Result<Vec<(usize, LaurentPoly)>, UsageError> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| UsageError(format!("expected NAME=VALUE in --set, got {item:?}")))?;
        let key = key.trim();
        let idx = key
            .strip_prefix('t')
            .or_else(|| key.strip_prefix('c'))
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&j| j >= 1)
            .ok_or_else(|| {
                UsageError(format!("unknown coefficient name {key:?}; use t1, t2, ..."))
            })?;
        out.push((idx, parse_poly(value.trim())?));
    }
    Ok(out)
}

fn cmd_gen(
    family: &str,
    k: usize,
    n: i64,
    branch: Option<usize>,
    set: Option<&str>,
    format: GenFormat,
) -> CmdResult {
    let family = SequenceFamily::from_str(family)?;
    let mut spec = SequenceSpec::new(family, k)?;
    if let Some(b) = branch {
        spec = spec.with_branch(b)?;
    }
    if let Some(s) = set {
        for (j, v) in parse_assignment(s)? {
            spec = spec.with_coeff(j, v)?;
        }
    }
    let value = spec.term(n)?;
    let out = match format {
        GenFormat::Text => format!("{value}\n"),
        GenFormat::Json => {
            let mut obj = json!({
                "family": family.to_string(),
                "n": n,
                "ring": value.ring_name(),
                "value": value.to_json(),
            });
            if family.has_order() {
                obj["k"] = json!(spec.k());
            }
            if family.has_branch() {
                obj["branch"] = json!(spec.branch());
            }
            format!("{obj}\n")
        }
    };
    Ok((out, true))
}

fn cmd_matrix(
    family: &str,
    k: usize,
    n: usize,
    set: Option<&str>,
    format: MatrixFormat,
) -> CmdResult {
    let family = Family::from_str(family)?;
    let mut m = family.build(k, n)?;
    if let Some(s) = set {
        let assignment = parse_assignment(s)?;
        if let Some((j, _)) = assignment.iter().find(|(j, _)| *j > k) {
            return Err(UsageError(format!(
                "coefficient t{j} is out of range for k = {k}"
            )));
        }
        let map = assignment.into_iter().map(|(j, v)| (j as u32, v)).collect();
        m = m.try_map(|e| e.partial_substitute(&map))?;
    }
    let out = match format {
        MatrixFormat::Text => m.to_text(),
        MatrixFormat::Json => m.to_json().to_string(),
        MatrixFormat::Latex => m.to_latex(),
    };
    Ok((out + "\n", true))
}

/// Accepts `3`, `2..5` (inclusive), `2..=5` and `2,3,5`.
fn parse_orders(s: &str) -> Result<Vec<usize>, UsageError> {
    let bad = || {
        UsageError(format!(
            "invalid order range {s:?}; use e.g. 3, 2..5 or 2,4"
        ))
    };
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let ks = if let Some((a, b)) = s.split_once("..") {
        let (lo, hi) = (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?);
        if lo > hi {
            return Err(bad());
        }
        (lo..=hi).collect()
    } else {
        s.split(',').map(num).collect::<Result<Vec<_>, _>>()?
    };
    if ks.is_empty() {
        return Err(bad());
    }
    Ok(ks)
}

fn cmd_verify(
    identity: &str,
    k: Option<&str>,
    n_min: Option<usize>,
    n_max: usize,
    trials: usize,
    seed: u64,
    timing: bool,
) -> CmdResult {
    let identity: Identity = identity.parse().map_err(|_| {
        UsageError(format!(
            "unknown identity {identity:?}; expected one of {}",
            IDENTITY_NAMES.join(", ")
        ))
    })?;
    let ks = match k {
        Some(s) => parse_orders(s)?,
        None => identity.default_orders(),
    };
    let start = Instant::now();
    let mut report = match (identity, n_min) {
        (_, None) => identity.run(&ks, n_max, trials, seed)?,
        (Identity::Matrix(family), Some(n_min)) => {
            let reports = ks
                .iter()
                .map(|&k| check_matrix_theorem_range(family, k, n_min, n_max))
                .collect::<Result<Vec<_>, _>>()?;
            VerificationReport::merge(&identity.to_string(), reports)
        }
        (_, Some(_)) => {
            return Err(UsageError(
                "--n-min applies only to det-C, det-B, per-H and per-L".into(),
            ))
        }
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    if timing {
        report.wall_time_ms = Some(elapsed_ms);
    }
    eprintln!(
        "{}: {} ({} cells, {elapsed_ms:.1} ms)",
        report.identity,
        if report.passed { "pass" } else { "FAIL" },
        report.cells.len()
    );
    let out = serde_json::to_string_pretty(&report.to_json()).expect("report serializes");
    Ok((out + "\n", report.passed))
}

struct BenchRow {
    n: usize,
    method: &'static str,
    ops: Option<u64>,
    micros: Option<f64>,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed().as_secs_f64() * 1e6)
}

fn bench_rows<E: Ring>(n: usize, m: &HessenbergMatrix<E>) -> Result<Vec<BenchRow>, UsageError> {
    let flipped = m.flip_superdiagonal();
    let ((det, det_ops), det_us) = timed(|| hess_det_counted(m));
    let ((per, per_ops), per_us) = timed(|| hess_per_counted(&flipped));
    let mut rows = vec![
        BenchRow {
            n,
            method: "hess_det",
            ops: Some(det_ops.multiplications),
            micros: Some(det_us),
        },
        BenchRow {
            n,
            method: "hess_per",
            ops: Some(per_ops.multiplications),
            micros: Some(per_us),
        },
    ];
    if n <= BRUTE_FORCE_MAX_N {
        let dense = m.to_dense();
        let flipped_dense = flipped.to_dense();
        let (bdet, bdet_us) = timed(|| brute_det_counted(&dense));
        let (bper, bper_us) = timed(|| brute_per_counted(&flipped_dense));
        let ((bdet, bdet_ops), (bper, bper_ops)) = (bdet?, bper?);
        if bdet != det || bper != per {
            return Err(UsageError(format!(
                "brute force disagrees with the recursion at n = {n}"
            )));
        }
        rows.push(BenchRow {
            n,
            method: "brute_det",
            ops: Some(bdet_ops),
            micros: Some(bdet_us),
        });
        rows.push(BenchRow {
            n,
            method: "brute_per",
            ops: Some(bper_ops),
            micros: Some(bper_us),
        });
    } else {
        for method in ["brute_det", "brute_per"] {
            rows.push(BenchRow {
                n,
                method,
                ops: None,
                micros: None,
            });
        }
    }
    Ok(rows)
}

fn cmd_bench(
    k: usize,
    n_list: &str,
    family: &str,
    ring: BenchRing,
    format: TableFormat,
) -> CmdResult {
    let family = Family::from_str(family)?;
    if family.uses_permanent() {
        return Err(UsageError(format!(
            "bench takes a determinant family (C or B); {family} is its permanent counterpart"
        )));
    }
    let ns = n_list
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| UsageError(format!("invalid size list {n_list:?}; use e.g. 4,6,8")))?;
    if ns.is_empty() || ns.contains(&0) {
        return Err(UsageError("sizes must be positive".into()));
    }
    let ones = (1..=k as u32).map(|j| (j, GaussianInt::from(1))).collect();
    let mut rows = Vec::new();
    for &n in &ns {
        let m = family.build(k, n)?;
        match ring {
            BenchRing::Poly => rows.extend(bench_rows(n, &m)?),
            BenchRing::Int => rows.extend(bench_rows(n, &m.try_map(|e| e.substitute(&ones))?)?),
        }
    }
    let ring_name = match ring {
        BenchRing::Int => "int",
        BenchRing::Poly => "poly",
    };
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            out.push_str("family,k,ring,n,method,multiplications,time_us\n");
            for r in &rows {
                let ops = r.ops.map_or("skipped".to_string(), |v| v.to_string());
                let us = r.micros.map_or(String::new(), |v| format!("{v:.1}"));
                let _ = writeln!(
                    out,
                    "{family},{k},{ring_name},{},{},{ops},{us}",
                    r.n, r.method
                );
            }
        }
        TableFormat::Text => {
            let _ = writeln!(out, "family {family}, k = {k}, ring = {ring_name}");
            let _ = writeln!(
                out,
                "{:>4}  {:<10}  {:>16}  {:>12}",
                "n", "method", "multiplications", "time_us"
            );
            for r in &rows {
                let ops = r.ops.map_or("skipped".to_string(), |v| v.to_string());
                let us = r.micros.map_or("-".to_string(), |v| format!("{v:.1}"));
                let _ = writeln!(out, "{:>4}  {:<10}  {:>16}  {:>12}", r.n, r.method, ops, us);
            }
        }
    }
    Ok((out, true))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_ranges() {
        assert_eq!(parse_orders("3").ok().unwrap(), vec![3]);
        assert_eq!(parse_orders("2..5").ok().unwrap(), vec![2, 3, 4, 5]);
        assert_eq!(parse_orders("2..=4").ok().unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_orders("2,4").ok().unwrap(), vec![2, 4]);
        assert!(parse_orders("5..2").is_err());
        assert!(parse_orders("x").is_err());
    }

    #[test]
    fn assignments() {
        let a = parse_assignment("t1=1, c2=t3").ok().unwrap();
        assert_eq!(a, vec![(1, LaurentPoly::one()), (2, LaurentPoly::var(3))]);
        assert!(parse_assignment("t0=1").is_err());
        assert!(parse_assignment("x=1").is_err());
        assert!(parse_assignment("t1").is_err());
        assert!(parse_assignment("t1=1/2").is_err());
    }
}
