//! Command-line front end. `run` returns the process exit code: 0 on
//! success, 1 on input errors, 2 when a resource cap is hit.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::catalog::{
    builtin_catalog, builtin_catalog_text, derive_catalog_entry, search_ids, SearchConstraints,
};
use crate::error::{Error, Result};
use crate::harness::{
    read_csv, report, run_sweep, write_csv, ChipPreset, ReportKind, SweepSpec, MEDIAN_T2_US,
    MEDIAN_W_RAD,
};
use crate::id::{
    ghz_parity_check, is_maximally_entangled, parse_catalog, validate_id, write_catalog, IdTable,
};
use crate::sim::{run_benchmark, MeasureMode, NoiseParams};

#[derive(Parser, Debug)]
#[command(
    name = "idbench",
    version,
    about = "Identity-product nonclassicality benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every ID in a catalog file (or `builtin`).
    Validate { catalog: String },
    /// Search the cluster stabilizer group for IDs.
    Search(SearchArgs),
    /// Simulate one benchmark run.
    Run(RunArgs),
    /// Run a parameter sweep described by a spec file and write CSV.
    Sweep {
        #[arg(long)]
        spec: PathBuf,
        /// Overrides the spec's `out` key; stdout when neither is set.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Turn a sweep CSV into a plot-data file.
    Report {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the built-in catalog, or re-derive it by search.
    Catalog {
        #[arg(long)]
        derive: bool,
    },
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    /// Require the GHZ parity condition.
    #[arg(long)]
    ghz: bool,
    /// Require maximal entanglement.
    #[arg(long)]
    maxent: bool,
    #[arg(long)]
    limit: Option<usize>,
    /// Keep a table and its qubit reversal as separate results.
    #[arg(long)]
    no_dedup: bool,
    /// Only report IDs with the fewest non-identity entries.
    #[arg(long)]
    lightest: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RunArgs {
    #[arg(long)]
    n: usize,
    /// Noiseless run.
    #[arg(long, conflicts_with_all = ["preset", "t1", "pe"])]
    ideal: bool,
    /// Per-qubit T1 and initialisation error from a chip preset.
    #[arg(long)]
    preset: Option<String>,
    /// Uniform T1 in µs.
    #[arg(long, conflicts_with = "preset")]
    t1: Option<f64>,
    /// T2 in µs.
    #[arg(long, conflicts_with = "ideal")]
    t2: Option<f64>,
    /// Jitter width in rad.
    #[arg(long, conflicts_with = "ideal")]
    w: Option<f64>,
    /// Uniform initialisation error probability.
    #[arg(long, conflicts_with = "preset")]
    pe: Option<f64>,
    /// Sample this many shots per setting instead of exact traces.
    #[arg(long)]
    shots: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Catalog file to take the ID from instead of the built-in one.
    #[arg(long)]
    catalog: Option<PathBuf>,
}

/// Parses `argv` (including the program name) and executes the command.
pub fn run<O: Write, E: Write>(argv: &[String], out: &mut O, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{}", e.render());
            } else {
                let _ = write!(err, "{}", e.render());
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_resource() {
                2
            } else {
                1
            }
        }
    }
}

fn load_catalog(path: &Path) -> Result<Vec<IdTable>> {
    parse_catalog(&fs::read_to_string(path)?)
}

fn catalog_by_n(path: Option<&Path>) -> Result<BTreeMap<usize, IdTable>> {
    match path {
        None => Ok(builtin_catalog()),
        Some(p) => Ok(load_catalog(p)?
            .into_iter()
            .map(|t| (t.n_qubits(), t))
            .collect()),
    }
}

fn emit<O: Write>(text: &[u8], path: Option<&Path>, out: &mut O) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text)?,
    }
    Ok(())
}

fn execute<O: Write>(cmd: Command, out: &mut O) -> Result<i32> {
    match cmd {
        Command::Validate { catalog } => {
            let tables = if catalog == "builtin" {
                builtin_catalog().into_values().collect()
            } else {
                load_catalog(Path::new(&catalog))?
            };
            let mut all_ok = true;
            for (k, t) in tables.iter().enumerate() {
                let report = validate_id(t);
                let (ghz, maxent) = if report.is_valid() {
                    (ghz_parity_check(t)?, is_maximally_entangled(t)?)
                } else {
                    (false, false)
                };
                let ok = report.is_valid() && ghz && maxent;
                all_ok &= ok;
                write!(
                    out,
                    "ID {} N={} M={} sign={} ghz={} maxent={}",
                    k + 1,
                    t.n_qubits(),
                    t.n_rows(),
                    report
                        .computed_sign
                        .map_or("?".to_string(), |s| format!("{s:+}")),
                    ghz,
                    maxent
                )?;
                if report.failures.is_empty() {
                    writeln!(out, " {}", if ok { "ok" } else { "FAIL" })?;
                } else {
                    let why: Vec<String> =
                        report.failures.iter().map(ToString::to_string).collect();
                    writeln!(out, " FAIL: {}", why.join("; "))?;
                }
            }
            Ok(if all_ok { 0 } else { 1 })
        }
        Command::Search(a) => {
            let found = search_ids(
                a.n,
                &SearchConstraints {
                    m: a.m,
                    require_ghz: a.ghz,
                    require_maxent: a.maxent,
                    max_results: a.limit,
                    canonical_dedup: !a.no_dedup,
                    lightest_only: a.lightest,
                },
            )?;
            let text = format!("# {} IDs\n{}", found.len(), write_catalog(&found));
            emit(text.as_bytes(), a.out.as_deref(), out)?;
            Ok(0)
        }
        Command::Run(a) => run_one(a, out),
        Command::Sweep {
            spec,
            out: out_path,
            catalog,
        } => {
            let spec = SweepSpec::parse(&fs::read_to_string(&spec)?)?;
            let cat = catalog_by_n(catalog.as_deref())?;
            let rows = run_sweep(&spec, &cat)?;
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf)?;
            emit(&buf, out_path.as_deref().or(spec.out.as_deref()), out)?;
            Ok(0)
        }
        Command::Report {
            kind,
            input,
            out: out_path,
        } => {
            let kind: ReportKind = kind.parse()?;
            let rows = read_csv(fs::File::open(&input)?)?;
            let text = report(&rows, kind)?;
            emit(text.as_bytes(), out_path.as_deref(), out)?;
            Ok(0)
        }
        Command::Catalog { derive: false } => {
            out.write_all(builtin_catalog_text().as_bytes())?;
            Ok(0)
        }
        Command::Catalog { derive: true } => {
            let tables = (3..=9)
                .map(derive_catalog_entry)
                .collect::<Result<Vec<_>>>()?;
            out.write_all(write_catalog(&tables).as_bytes())?;
            Ok(0)
        }
    }
}

fn run_one<O: Write>(a: RunArgs, out: &mut O) -> Result<i32> {
    let n = a.n;
    let cat = catalog_by_n(a.catalog.as_deref())?;
    let table = cat
        .get(&n)
        .ok_or_else(|| Error::input(format!("catalog has no ID for N={n}")))?;
    let mut noise = NoiseParams::ideal(n);
    if !a.ideal {
        if let Some(name) = &a.preset {
            let chip = ChipPreset::by_name(name)
                .ok_or_else(|| Error::input(format!("unknown preset {name:?}")))?;
            if n > chip.t1_us.len() {
                return Err(Error::input(format!(
                    "preset {name} has only {} qubits",
                    chip.t1_us.len()
                )));
            }
            noise.t1 = chip.t1_seconds(n);
            noise.init_error = chip.init_error(n);
            noise.t2 = a.t2.unwrap_or(MEDIAN_T2_US) * 1e-6;
            noise.jitter_width = a.w.unwrap_or(MEDIAN_W_RAD);
        } else {
            if let Some(t1) = a.t1 {
                noise.t1 = vec![t1 * 1e-6; n];
            }
            if let Some(t2) = a.t2 {
                noise.t2 = t2 * 1e-6;
            }
            noise.jitter_width = a.w.unwrap_or(0.0);
            noise.init_error = vec![a.pe.unwrap_or(0.0); n];
        }
    }
    let mode = match a.shots {
        Some(count) => MeasureMode::Shots {
            count,
            seed: a.seed,
        },
        None => MeasureMode::Exact,
    };
    let r = run_benchmark(table, &noise, mode)?;
    writeln!(out, "N={n} M={}", table.n_rows())?;
    for i in 0..table.n_rows() {
        writeln!(
            out,
            "O_{} {} <O>={:.6}",
            i + 1,
            table.signed_row(i),
            r.row_expectations[i]
        )?;
    }
    writeln!(out, "alpha={:.6}", r.alpha)?;
    writeln!(out, "B={:.6}", r.score)?;
    writeln!(out, "F_ID={:.6}", r.fid_bound)?;
    writeln!(out, "F={:.6}", r.true_fidelity)?;
    Ok(0)
}
