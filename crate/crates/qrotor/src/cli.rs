//! Command-line driver.
//!
//! Exit codes: 0 on success, 1 on validation or regime failures, 2 on usage
//! errors. Diagnostics go to standard error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::ingest::read_band_file;
use crate::report::{emit_plot_data, write_json, write_table, BandReport};
use crate::verify::{default_tolerance, run_sweep, DEFAULT_MAX_DIM, MAX_DENSE_DIM};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "qrotor",
    version,
    about = "q-deformed rotor fits of nuclear rotational bands"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit A for each band (tau fixed by the band's spins) and print residuals and a summary table.
    Fit(FitArgs),
    /// Print only the summary table (or JSON) for the given bands.
    Table(FitArgs),
    /// Emit plot-ready columns: j E_exp E_q E_classical residual_q residual_classical.
    Plotdata(PlotArgs),
    /// Check the angle-space and SU_q(2) operator identities numerically.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// Band files, or directories searched for `*.band` files.
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Fit only the rigid-rotor j(j+1) formula.
    #[arg(long)]
    pub classical_only: bool,
    /// Emit the JSON report instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest angle-space dimension 2l+1 in the sweep (odd, 3..=1001).
    #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
    pub max_dim: u64,
    /// Max-norm tolerance; defaults to 1e-11, or 1e-10 above dimension 201.
    #[arg(long)]
    pub tolerance: Option<f64>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match config.command {
        Command::Fit(args) => cmd_fit(&args, true, stdout, stderr),
        Command::Table(args) => cmd_fit(&args, false, stdout, stderr),
        Command::Plotdata(args) => cmd_plotdata(&args, stdout, stderr),
        Command::Verify(args) => cmd_verify(&args, stdout, stderr),
    }
}

fn expand_inputs(inputs: &[PathBuf], stderr: &mut dyn Write) -> (Vec<PathBuf>, bool) {
    let mut files = Vec::new();
    let mut ok = true;
    for input in inputs {
        if !input.is_dir() {
            files.push(input.clone());
            continue;
        }
        match std::fs::read_dir(input) {
            Ok(entries) => {
                let mut found: Vec<PathBuf> = entries
                    .filter_map(|e| e.ok().map(|e| e.path()))
                    .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "band"))
                    .collect();
                found.sort();
                if found.is_empty() {
                    let _ = writeln!(
                        stderr,
                        "error: {}: no .band files in directory",
                        input.display()
                    );
                    ok = false;
                }
                files.extend(found);
            }
            Err(e) => {
                let _ = writeln!(stderr, "error: {}: {e}", input.display());
                ok = false;
            }
        }
    }
    (files, ok)
}

fn load_reports(
    inputs: &[PathBuf],
    classical_only: bool,
    stderr: &mut dyn Write,
) -> (Vec<BandReport>, bool) {
    let (files, mut ok) = expand_inputs(inputs, stderr);
    let mut reports = Vec::new();
    for path in files {
        let band = match read_band_file(&path) {
            Ok(f) => f.band,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                ok = false;
                continue;
            }
        };
        let fitted = if classical_only {
            BandReport::fit_classical(band)
        } else {
            BandReport::fit(band)
        };
        match fitted {
            Ok(r) => reports.push(r),
            Err(e) => {
                let _ = writeln!(stderr, "error: {}: {e}", path.display());
                ok = false;
            }
        }
    }
    (reports, ok)
}

fn emit(output: Option<&Path>, text: &str, stdout: &mut dyn Write, stderr: &mut dyn Write) -> bool {
    let result = match output {
        Some(path) => std::fs::write(path, text),
        None => stdout.write_all(text.as_bytes()),
    };
    if let Err(e) = result {
        let target = output.map_or_else(|| String::from("<stdout>"), |p| p.display().to_string());
        let _ = writeln!(stderr, "error: {target}: {e}");
        return false;
    }
    true
}

fn residual_block(report: &BandReport) -> String {
    let mut out = String::new();
    let band = &report.band;
    write!(
        out,
        "== {}: {} levels, j = {}..{} step {}",
        band.name(),
        band.len(),
        band.j_min(),
        band.j_max(),
        band.step()
    )
    .unwrap();
    if let Some(qp) = report.q.as_ref().and_then(|q| q.qp) {
        write!(out, ", D = {}, tau = {:.6}", qp.dim(), qp.tau()).unwrap();
    }
    out.push('\n');
    writeln!(
        out,
        "{:>6} {:>12} {:>12} {:>10} {:>12} {:>10}",
        "j", "E_exp", "E_q", "diff_q", "E_cl", "diff_cl"
    )
    .unwrap();
    for (k, rc) in report.classical.residuals.iter().enumerate() {
        let (eq, dq) = report
            .q
            .as_ref()
            .map(|q| {
                (
                    format!("{:.2}", q.residuals[k].theo_kev),
                    format!("{:.2}", q.residuals[k].diff_kev()),
                )
            })
            .unwrap_or_else(|| ("-".into(), "-".into()));
        writeln!(
            out,
            "{:>6} {:>12.2} {:>12} {:>10} {:>12.2} {:>10.2}",
            rc.spin.to_string(),
            rc.exp_kev,
            eq,
            dq,
            rc.theo_kev,
            rc.diff_kev()
        )
        .unwrap();
    }
    out
}

/// `fit` (with residual detail) and `table` (summary only).
pub fn cmd_fit(
    args: &FitArgs,
    details: bool,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let (reports, ok) = load_reports(&args.inputs, args.classical_only, stderr);
    if reports.is_empty() {
        return EXIT_FAILURE;
    }
    let text = if args.json {
        write_json(&reports).expect("nonempty")
    } else {
        let mut text = String::new();
        if details {
            for r in &reports {
                text.push_str(&residual_block(r));
                text.push('\n');
            }
        }
        text.push_str(&write_table(&reports).expect("nonempty"));
        text
    };
    let written = emit(args.output.as_deref(), &text, stdout, stderr);
    if ok && written {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

pub fn cmd_plotdata(args: &PlotArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let (reports, ok) = load_reports(&args.inputs, false, stderr);
    if reports.is_empty() {
        return EXIT_FAILURE;
    }
    let blocks: Vec<String> = reports
        .iter()
        .map(|r| emit_plot_data(r).expect("q fit present"))
        .collect();
    let written = emit(args.output.as_deref(), &blocks.join("\n"), stdout, stderr);
    if ok && written {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

pub fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let max_dim = args.max_dim;
    if max_dim < 3 || max_dim.is_multiple_of(2) || max_dim > MAX_DENSE_DIM {
        let _ = writeln!(
            stderr,
            "error: --max-dim must be odd and in 3..={MAX_DENSE_DIM}, got {max_dim}"
        );
        return EXIT_USAGE;
    }
    let tol = args.tolerance.unwrap_or_else(|| default_tolerance(max_dim));
    if !(tol > 0.0 && tol.is_finite()) {
        let _ = writeln!(stderr, "error: --tolerance must be positive, got {tol}");
        return EXIT_USAGE;
    }

    let outcomes = run_sweep(max_dim);
    let mut text = String::new();
    let mut failed = 0;
    for o in &outcomes {
        let pass = o.deviation <= tol;
        if !pass {
            failed += 1;
            let _ = writeln!(
                stderr,
                "FAIL {} {}: deviation {:.3e} > {tol:.1e}",
                o.identity, o.params, o.deviation
            );
        }
        let status = if pass { "ok" } else { "FAIL" };
        writeln!(
            text,
            "{:<14} {:<28} {:>10.3e}  {status}",
            o.identity, o.params, o.deviation
        )
        .unwrap();
    }
    writeln!(
        text,
        "{} of {} identities within {tol:.1e}",
        outcomes.len() - failed,
        outcomes.len()
    )
    .unwrap();
    let written = emit(args.output.as_deref(), &text, stdout, stderr);
    if failed == 0 && written {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}
