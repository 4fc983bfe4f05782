//! `jnzeros` — zeros of Bessel-function derivatives from the command line.
//!
//! Exit codes: 0 success, 1 invalid flags or configuration, 2 query outside
//! the method's regime, 3 a certified row (or table cross-check) failed.

use clap::{Args, Parser, Subcommand};
use jnzeros::harness::{self, CertifyConfig, Format, SweepConfig};
use jnzeros::mcmahon::cubic_candidates;
use jnzeros::polycoeff::{alpha_oracle, recurrence_table, AlphaTable};
use jnzeros::uniform::airy_family_cross_check;
use jnzeros::{Error, Exec, Method, ZeroQuery};
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser, Debug)]
#[command(name = "jnzeros", version, about = "Zeros of derivatives of Bessel functions J_nu")]
struct Cli {
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write results here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Estimate j^(n)_{nu,k} by one method.
    Zeros(ZerosArgs),
    /// Compare estimators against the oracle over a sweep.
    Compare(CompareArgs),
    /// Check the amplitude-remainder bound on an x grid.
    Certify(CertifyArgs),
    /// Dump the alpha_{m,n}(nu) coefficient tables.
    Coeffs(CoeffsArgs),
}

#[derive(Args, Debug)]
struct ZerosArgs {
    #[arg(long)]
    deriv: u32,
    #[arg(long, allow_hyphen_values = true)]
    nu: f64,
    #[arg(long)]
    k: u32,
    /// Last index of a run k..=k-max (default: just k).
    #[arg(long)]
    k_max: Option<u32>,
    /// mcmahon-{1,2,3}, large-nu-{1,2,3} or oracle.
    #[arg(long, default_value = "oracle")]
    method: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct CompareArgs {
    /// Comma-separated derivative orders.
    #[arg(long)]
    deriv_list: String,
    /// Comma-separated orders nu.
    #[arg(long, allow_hyphen_values = true)]
    nu_list: String,
    #[arg(long, default_value_t = 1)]
    k_min: u32,
    #[arg(long)]
    k_max: Option<u32>,
    /// Comma-separated method names.
    #[arg(long)]
    methods: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct CertifyArgs {
    #[arg(long)]
    deriv_list: String,
    #[arg(long, allow_hyphen_values = true)]
    nu_list: String,
    #[arg(long)]
    x_min: f64,
    #[arg(long)]
    x_max: f64,
    #[arg(long, default_value_t = 50)]
    points: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct CoeffsArgs {
    #[arg(long)]
    m_max: usize,
    #[arg(long)]
    n_max: usize,
    /// JSON output (the default).
    #[arg(long, conflicts_with = "pretty")]
    json: bool,
    /// Aligned human-readable polynomials.
    #[arg(long)]
    pretty: bool,
}

/// A failed command: message for stderr and the exit code.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Regime(_) | Error::Applicability(_) | Error::Precondition { .. } | Error::NotFound(_) => 2,
            Error::Convergence(_) | Error::Build { .. } | Error::Verification(_) => 3,
            _ => 1,
        };
        Failure(code, e.to_string())
    }
}

fn parse_list<T: FromStr>(s: &str, what: &str) -> Result<Vec<T>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure(1, format!("bad {what} '{t}'"))))
        .collect()
}

fn exec_for(threads: Option<usize>) -> Result<Exec, Failure> {
    match threads {
        Some(0) => Err(Failure(1, "--threads must be positive".into())),
        Some(1) => Ok(Exec::Sequential),
        #[cfg(feature = "parallel")]
        Some(n) => {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| Failure(1, format!("thread pool: {e}")))?;
            Ok(Exec::Parallel)
        }
        _ => Ok(Exec::default()),
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure(1, format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| Failure(1, e.to_string()))
        }
    }
}

fn cmd_zeros(a: &ZerosArgs, output: &Option<PathBuf>) -> Result<u8, Failure> {
    let method: Method = a.method.parse()?;
    let k_max = a.k_max.unwrap_or(a.k);
    if k_max < a.k {
        return Err(Failure(1, format!("--k-max {k_max} below --k {}", a.k)));
    }
    let mut text = String::new();
    for k in a.k..=k_max {
        let q = ZeroQuery::new(a.deriv, a.nu, k)?;
        let e = harness::estimate(&q, method)?;
        if matches!(method, Method::LargeNu(_)) && k == a.k {
            match airy_family_cross_check(q.n, q.nu, k) {
                Ok(c) => eprintln!("airy family check: {c}"),
                Err(err) => eprintln!("airy family check unavailable: {err}"),
            }
        }
        if a.json {
            text += &serde_json::to_string(&e).expect("estimate serializes");
        } else {
            let bound = e.bound.map_or("-".to_string(), |b| b.to_string());
            text += &format!(
                "{}\td={} nu={} k={} target={} method={} bound={} applicable={}",
                e.value, q.n, q.nu, q.k, e.target_index, e.method, bound, e.applicable
            );
        }
        text.push('\n');
    }
    emit(output, &text)?;
    Ok(0)
}

fn cmd_compare(a: &CompareArgs, threads: Option<usize>, output: &Option<PathBuf>) -> Result<u8, Failure> {
    let methods: Vec<Method> =
        a.methods.split(',').map(str::trim).filter(|t| !t.is_empty()).map(Method::from_str).collect::<Result<_, _>>()?;
    let cfg = SweepConfig {
        d_list: parse_list(&a.deriv_list, "derivative order")?,
        nu_list: parse_list(&a.nu_list, "order")?,
        k_min: a.k_min,
        k_max: a.k_max.unwrap_or(a.k_min),
        methods,
        format: if a.json { Format::Json } else { Format::Csv },
        output: output.clone(),
        threads,
    };
    cfg.validate()?;
    let exec = exec_for(threads)?;
    let (rows, notes) = harness::compare(&cfg, exec)?;
    for n in &notes {
        eprintln!("note: {n}");
    }
    if cfg.methods.iter().any(|m| matches!(m, Method::LargeNu(_))) {
        for &d in &cfg.d_list {
            for &nu in &cfg.nu_list {
                if let Ok(c) = airy_family_cross_check(d, nu, cfg.k_min) {
                    eprintln!("airy family check: {c}");
                }
            }
        }
    }
    emit(output, &harness::render(&rows, cfg.format))?;
    Ok(if harness::all_pass(&rows) { 0 } else { 3 })
}

fn cmd_certify(a: &CertifyArgs, threads: Option<usize>, output: &Option<PathBuf>) -> Result<u8, Failure> {
    let cfg = CertifyConfig {
        d_list: parse_list(&a.deriv_list, "derivative order")?,
        nu_list: parse_list(&a.nu_list, "order")?,
        x_min: a.x_min,
        x_max: a.x_max,
        points: a.points,
    };
    cfg.validate()?;
    let exec = exec_for(threads)?;
    let (rows, notes) = harness::certify(&cfg, exec)?;
    for n in &notes {
        eprintln!("note: {n}");
    }
    emit(output, &harness::render(&rows, if a.json { Format::Json } else { Format::Csv }))?;
    Ok(if harness::all_pass(&rows) { 0 } else { 3 })
}

fn pretty_table(title: &str, t: &AlphaTable, out: &mut String) {
    out.push_str(title);
    out.push('\n');
    for e in t.entries() {
        let p = t.get(e.m as i64, e.n).expect("entry in range");
        out.push_str(&format!("  alpha[{:>2},{:>2}] = {p}\n", e.m, e.n));
    }
}

fn cmd_coeffs(a: &CoeffsArgs, output: &Option<PathBuf>) -> Result<u8, Failure> {
    let rec = recurrence_table(a.m_max, a.n_max)?;
    let ora = alpha_oracle(a.m_max, a.n_max)?;
    let diff = rec.diff(&ora);
    let mut cubic = Vec::new();
    for d in 0..=a.n_max as u32 {
        for (form, poly, matches) in cubic_candidates(d)? {
            cubic.push((d, form.label(), poly, matches));
        }
    }
    let text = if a.pretty {
        let mut s = String::new();
        pretty_table("recurrence", &rec, &mut s);
        pretty_table("oracle", &ora, &mut s);
        s.push_str("diff\n");
        for &(m, n) in &diff {
            s.push_str(&format!(
                "  alpha[{m},{n}]: recurrence {} vs oracle {}\n",
                rec.get(m as i64, n)?,
                ora.get(m as i64, n)?
            ));
        }
        s.push_str("cubic candidates\n");
        for (d, label, poly, matches) in &cubic {
            s.push_str(&format!("  d={d:>2} {label}: {poly}  [{}]\n", if *matches { "matches" } else { "differs" }));
        }
        s
    } else {
        let diff_json: Vec<_> = diff
            .iter()
            .map(|&(m, n)| {
                json!({
                    "m": m, "n": n,
                    "recurrence": rec.get(m as i64, n).map(|p| p.to_strings()).unwrap_or_default(),
                    "oracle": ora.get(m as i64, n).map(|p| p.to_strings()).unwrap_or_default(),
                })
            })
            .collect();
        let cubic_json: Vec<_> = cubic
            .iter()
            .map(|(d, label, poly, matches)| json!({"d": d, "form": label, "coeffs": poly.to_strings(), "matches": matches}))
            .collect();
        let v = json!({
            "recurrence": rec.entries(),
            "oracle": ora.entries(),
            "diff": diff_json,
            "cubic_candidates": cubic_json,
        });
        serde_json::to_string_pretty(&v).expect("json") + "\n"
    };
    emit(output, &text)?;
    Ok(if diff.is_empty() { 0 } else { 3 })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let res = match &cli.cmd {
        Cmd::Zeros(a) => cmd_zeros(a, &cli.output),
        Cmd::Compare(a) => cmd_compare(a, cli.threads, &cli.output),
        Cmd::Certify(a) => cmd_certify(a, cli.threads, &cli.output),
        Cmd::Coeffs(a) => cmd_coeffs(a, &cli.output),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
