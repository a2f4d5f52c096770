//! Batch front end: norms, the degree-1 closed form, searches, kappa
//! bisections, sweeps, and the dual demo, emitting deterministic CSV/JSON.
//!
//! Data payloads go to stdout (or `--out FILE`); the run manifest, which is
//! the only place timestamps live, goes to stderr (or `<FILE>.manifest.json`
//! next to the payload).
//! Exit codes: 0 success, 2 usage/parse/domain error, 3 search
//! non-convergence (the result is still written).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

use korenblum::bounds::{bound_f_lower, bound_fb, dual_demo, DualDemoRow};
use korenblum::exec::with_thread_cap;
use korenblum::mobius::{case_candidates, f1_closed_form};
use korenblum::search::{
    estimate_kappa_n, maximize_fb, minimize_f, minimize_f_blaschke, SearchConfig,
};
use korenblum::Poly;

mod manifest;
use manifest::RunManifest;

#[derive(Parser)]
#[command(name = "korenblum", version, about = "Bergman-space extremal problem laboratory")]
struct Cli {
    /// JSON config file; precedence is flags > config file > defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write the data payload here (manifest goes to `<FILE>.manifest.json`);
    /// default is stdout with the manifest on stderr.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the Bergman norm of a coefficient file (JSON [re, im] pairs).
    Norm { coeff_file: PathBuf },
    /// The exact degree-1 value with its lower bound and case candidates.
    F1 {
        #[arg(long)]
        c: Option<f64>,
        /// Grid spec start:stop:steps.
        #[arg(long)]
        grid: Option<String>,
    },
    /// Coefficient-space search: F_n(c) by default, F_B(c) with --fb, the
    /// Blaschke variant with --blaschke.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: f64,
        #[command(flatten)]
        knobs: SearchKnobs,
        #[arg(long)]
        fb: bool,
        #[arg(long)]
        blaschke: bool,
    },
    /// Bisection bracket for kappa_n.
    Kappa {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        eps: Option<f64>,
        #[command(flatten)]
        knobs: SearchKnobs,
    },
    /// CSV of the inner-disk demonstration rows for n = 1..n_max.
    DualDemo {
        #[arg(long)]
        r: f64,
        #[arg(long)]
        n_max: usize,
    },
    /// One search per grid point with the matching bound column and a
    /// post-hoc monotonicity flag.
    Sweep {
        /// f or fb.
        #[arg(long)]
        what: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c_grid: String,
        #[command(flatten)]
        knobs: SearchKnobs,
    },
}

#[derive(Args, Clone, Copy)]
struct SearchKnobs {
    #[arg(long)]
    restarts: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    max_iters: Option<usize>,
    #[arg(long)]
    simplex_tol: Option<f64>,
    #[arg(long)]
    penalty_weight: Option<f64>,
    #[arg(long)]
    n_grid: Option<usize>,
}

/// Optional keys of the JSON config file.
#[derive(Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    restarts: Option<usize>,
    seed: Option<u64>,
    max_iters: Option<usize>,
    simplex_tol: Option<f64>,
    penalty_weight: Option<f64>,
    n_grid: Option<usize>,
    eps: Option<f64>,
}

/// Usage/parse/domain failure; maps to exit code 2. Non-convergence is not
/// an error: the result is still written and the exit code becomes 3.
struct CliError(String);

impl From<korenblum::Error> for CliError {
    fn from(e: korenblum::Error) -> Self {
        CliError(e.to_string())
    }
}

/// Fixed-notation formatting with 12 significant digits.
fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return format!("{:.11}", 0.0);
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (11 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError(format!("grid spec `{spec}` is not start:stop:steps")));
    }
    let start: f64 = parts[0]
        .parse()
        .map_err(|_| CliError(format!("bad grid start `{}`", parts[0])))?;
    let stop: f64 = parts[1]
        .parse()
        .map_err(|_| CliError(format!("bad grid stop `{}`", parts[1])))?;
    let steps: usize = parts[2]
        .parse()
        .map_err(|_| CliError(format!("bad grid steps `{}`", parts[2])))?;
    if steps == 0 {
        return Err(CliError("empty grid".into()));
    }
    if steps == 1 {
        return Ok(vec![start]);
    }
    Ok((0..steps)
        .map(|i| start + (stop - start) * i as f64 / (steps - 1) as f64)
        .collect())
}

fn load_file_config(path: &Option<PathBuf>) -> Result<FileConfig, CliError> {
    match path {
        None => Ok(FileConfig::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError(format!("cannot read config {}: {e}", p.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| CliError(format!("bad config {}: {e}", p.display())))
        }
    }
}

fn resolve_config(
    n: usize,
    c: f64,
    knobs: &SearchKnobs,
    file: &FileConfig,
) -> SearchConfig {
    let mut cfg = SearchConfig::new(n, c);
    cfg.restarts = knobs.restarts.or(file.restarts).unwrap_or(cfg.restarts);
    cfg.seed = knobs.seed.or(file.seed).unwrap_or(cfg.seed);
    cfg.max_iters = knobs.max_iters.or(file.max_iters).unwrap_or(cfg.max_iters);
    cfg.simplex_tol = knobs.simplex_tol.or(file.simplex_tol).unwrap_or(cfg.simplex_tol);
    cfg.penalty_weight = knobs
        .penalty_weight
        .or(file.penalty_weight)
        .unwrap_or(cfg.penalty_weight);
    cfg.n_grid = knobs.n_grid.or(file.n_grid).unwrap_or(cfg.n_grid);
    cfg
}

struct RunOutput {
    payload: String,
    manifest_config: serde_json::Value,
    seed: Option<u64>,
    converged: bool,
}

fn cmd_norm(coeff_file: &PathBuf) -> Result<RunOutput, CliError> {
    let text = std::fs::read_to_string(coeff_file)
        .map_err(|e| CliError(format!("cannot read {}: {e}", coeff_file.display())))?;
    let poly: Poly = serde_json::from_str(&text).map_err(|e| {
        CliError(format!(
            "parse error in {} at line {}, column {}: {e}",
            coeff_file.display(),
            e.line(),
            e.column()
        ))
    })?;
    // 12 significant digits for order-one norms
    Ok(RunOutput {
        payload: format!("{:.11}\n", poly.bergman_norm()),
        manifest_config: json!({ "coeff_file": coeff_file.display().to_string() }),
        seed: None,
        converged: true,
    })
}

fn cmd_f1(c: Option<f64>, grid: Option<&str>) -> Result<RunOutput, CliError> {
    let cs = match (c, grid) {
        (Some(c), None) => vec![c],
        (None, Some(g)) => parse_grid(g)?,
        _ => return Err(CliError("f1 needs exactly one of --c or --grid".into())),
    };
    let mut payload = String::from("c,f1,f_lower_bound,cand_numerator_zero_at_c,cand_pole_at_origin\n");
    for &cv in &cs {
        let f1 = f1_closed_form(cv)?;
        let lower = if cv < 1.0 { bound_f_lower(cv)? } else { 0.0 };
        let cands = case_candidates(cv).ok();
        let cand = |label: &str| {
            cands
                .as_ref()
                .and_then(|v| v.iter().find(|(l, _)| *l == label))
                .map(|(_, v)| fmt_sig(*v))
                .unwrap_or_default()
        };
        writeln!(
            payload,
            "{},{},{},{},{}",
            fmt_sig(cv),
            fmt_sig(f1),
            fmt_sig(lower),
            cand("numerator_zero_at_c"),
            cand("pole_at_origin")
        )
        .unwrap();
    }
    Ok(RunOutput {
        payload,
        manifest_config: json!({ "c": c, "grid": grid }),
        seed: None,
        converged: true,
    })
}

fn cmd_search(
    n: usize,
    c: f64,
    knobs: &SearchKnobs,
    fb: bool,
    blaschke: bool,
    file: &FileConfig,
) -> Result<RunOutput, CliError> {
    if fb && blaschke {
        return Err(CliError("--fb and --blaschke are mutually exclusive".into()));
    }
    let cfg = resolve_config(n, c, knobs, file);
    let result = if fb {
        maximize_fb(&cfg)?
    } else if blaschke {
        minimize_f_blaschke(&cfg)?
    } else {
        minimize_f(&cfg)?
    };
    // a heuristic optimizer certifies one side only
    let (kind, bound_side) = if fb {
        ("fb", "lower")
    } else if blaschke {
        ("blaschke", "upper")
    } else {
        ("f", "upper")
    };
    let payload = serde_json::to_string_pretty(&json!({
        "config": cfg,
        "kind": kind,
        "bound_side": bound_side,
        "result": result,
    }))
    .unwrap()
        + "\n";
    Ok(RunOutput {
        payload,
        manifest_config: serde_json::to_value(&cfg).unwrap(),
        seed: Some(cfg.seed),
        converged: result.converged,
    })
}

fn cmd_kappa(
    n: usize,
    eps: Option<f64>,
    knobs: &SearchKnobs,
    file: &FileConfig,
) -> Result<RunOutput, CliError> {
    let eps = eps.or(file.eps).unwrap_or(1e-3);
    let base = resolve_config(n, 0.5, knobs, file);
    let estimate = estimate_kappa_n(n, eps, &base)?;
    let payload = serde_json::to_string_pretty(&json!({
        "config": base,
        "eps": eps,
        "estimate": estimate,
    }))
    .unwrap()
        + "\n";
    Ok(RunOutput {
        payload,
        manifest_config: serde_json::to_value(&base).unwrap(),
        seed: Some(base.seed),
        converged: true,
    })
}

fn cmd_dual_demo(r: f64, n_max: usize) -> Result<RunOutput, CliError> {
    if n_max == 0 {
        return Err(CliError("n_max must be >= 1".into()));
    }
    let mut payload = format!("{}\n", DualDemoRow::CSV_HEADER);
    for n in 1..=n_max {
        let row = dual_demo(n, r)?;
        writeln!(payload, "{}", row.csv_row(fmt_sig)).unwrap();
    }
    Ok(RunOutput {
        payload,
        manifest_config: json!({ "r": r, "n_max": n_max }),
        seed: None,
        converged: true,
    })
}

fn cmd_sweep(
    what: &str,
    n: usize,
    c_grid: &str,
    knobs: &SearchKnobs,
    file: &FileConfig,
) -> Result<RunOutput, CliError> {
    let cs = parse_grid(c_grid)?;
    // per the monotone-trend checks: 2e-3 noise allowance
    const NOISE: f64 = 2e-3;
    let (header, is_fb) = match what {
        "f" => ("c,f_estimate,f_lower_bound,monotone_ok", false),
        "fb" => ("c,fb_estimate,fb_upper_bound,monotone_ok", true),
        _ => return Err(CliError(format!("--what must be f or fb, got `{what}`"))),
    };
    let mut payload = format!("{header}\n");
    let mut all_converged = true;
    let mut prev: Option<f64> = None;
    let mut cfg_echo = None;
    for &c in &cs {
        let cfg = resolve_config(n, c, knobs, file);
        if cfg_echo.is_none() {
            cfg_echo = Some(serde_json::to_value(&cfg).unwrap());
        }
        let (estimate, bound, converged) = if is_fb {
            let res = maximize_fb(&cfg)?;
            (res.objective, bound_fb(c)?, res.converged)
        } else {
            let res = minimize_f(&cfg)?;
            (res.objective, bound_f_lower(c)?, res.converged)
        };
        all_converged &= converged;
        let monotone_ok = match prev {
            None => true,
            // F non-increasing in c, F_B non-decreasing
            Some(p) if is_fb => estimate >= p - NOISE,
            Some(p) => estimate <= p + NOISE,
        };
        prev = Some(estimate);
        writeln!(
            payload,
            "{},{},{},{}",
            fmt_sig(c),
            fmt_sig(estimate),
            fmt_sig(bound),
            monotone_ok
        )
        .unwrap();
    }
    Ok(RunOutput {
        payload,
        manifest_config: json!({
            "what": what,
            "c_grid": c_grid,
            "search": cfg_echo,
        }),
        seed: Some(knobs.seed.or(file.seed).unwrap_or(0)),
        converged: all_converged,
    })
}

fn dispatch(cli: &Cli) -> Result<RunOutput, CliError> {
    let file = load_file_config(&cli.config)?;
    match &cli.cmd {
        Cmd::Norm { coeff_file } => cmd_norm(coeff_file),
        Cmd::F1 { c, grid } => cmd_f1(*c, grid.as_deref()),
        Cmd::Search { n, c, knobs, fb, blaschke } => {
            cmd_search(*n, *c, knobs, *fb, *blaschke, &file)
        }
        Cmd::Kappa { n, eps, knobs } => cmd_kappa(*n, *eps, knobs, &file),
        Cmd::DualDemo { r, n_max } => cmd_dual_demo(*r, *n_max),
        Cmd::Sweep { what, n, c_grid, knobs } => cmd_sweep(what, *n, c_grid, knobs, &file),
    }
}

fn thread_cap() -> Option<usize> {
    std::env::var("KORENBLUM_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .map(|n| n.max(1))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let command = std::env::args().nth(1).unwrap_or_default();
    let outcome = with_thread_cap(thread_cap(), || dispatch(&cli));
    match outcome {
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok(out) => {
            let manifest = RunManifest {
                command,
                config: out.manifest_config,
                seed: out.seed,
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
                duration_ms: started.elapsed().as_millis() as u64,
            };
            let manifest_json = serde_json::to_string_pretty(&manifest).unwrap();
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &out.payload) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                    let mpath = path.with_extension(match path.extension() {
                        Some(ext) => format!("{}.manifest.json", ext.to_string_lossy()),
                        None => "manifest.json".to_string(),
                    });
                    if let Err(e) = std::fs::write(&mpath, manifest_json + "\n") {
                        eprintln!("error: cannot write {}: {e}", mpath.display());
                        return ExitCode::from(2);
                    }
                }
                None => {
                    print!("{}", out.payload);
                    eprintln!("{manifest_json}");
                }
            }
            if out.converged {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
    }
}
