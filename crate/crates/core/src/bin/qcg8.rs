//! Command-line front end: reproducible construction, verification,
//! certification, bound evaluation, scanning, export, and simulation
//! workflows with machine-readable output.
//!
//! Exit codes: 0 on success, 1 on domain errors, 2 on usage errors.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use qcg8::{
    bounds, construction, girth, pcm, sim, triples, ExponentMatrix, Girth, GirthReport, SimConfig,
    SCHEMA_VERSION,
};

#[derive(Parser)]
#[command(
    name = "qcg8",
    version,
    about = "Girth-8 quasi-cyclic LDPC code construction and verification toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy)]
enum ExportFormat {
    Alist,
}

#[derive(Subcommand)]
enum Command {
    /// Select the construction for (J, L) and emit its exponent matrix as CSV
    /// plus a JSON header
    Construct {
        #[arg(long)]
        col_weight: u32,
        #[arg(long)]
        row_weight: u64,
        /// CSV destination; a JSON header is written next to it. Stdout when
        /// omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide the girth (up to 8) of a construction or a matrix file at a
    /// circulant size
    Verify {
        #[arg(long, required_unless_present = "exponent")]
        col_weight: Option<u32>,
        #[arg(long, required_unless_present = "exponent")]
        row_weight: Option<u64>,
        #[arg(long)]
        p: u64,
        /// Exponent matrix CSV to verify instead of a named construction.
        #[arg(long = "e")]
        exponent: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze every row-triple of the selected construction (the
    /// analysis-table reproduction)
    Certify {
        #[arg(long)]
        col_weight: u32,
        #[arg(long)]
        row_weight: u64,
        /// Certify at a concrete circulant size; without it the table reports
        /// the GCD indicators alone.
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate every circulant-size landmark for (J, L)
    Bounds {
        #[arg(long)]
        col_weight: u32,
        #[arg(long)]
        row_weight: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the circulant sizes in a range whose girth is exactly eight
    Scan {
        #[arg(long)]
        col_weight: u32,
        #[arg(long)]
        row_weight: u64,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write gnuplot-ready points (L P) with a landmark header.
        #[arg(long)]
        gnuplot: Option<PathBuf>,
    },
    /// Find the smallest feasible circulant size and re-verify it
    SearchMin {
        #[arg(long)]
        col_weight: u32,
        #[arg(long)]
        row_weight: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expand an exponent matrix at a circulant size and export it
    Export {
        /// Exponent matrix CSV (as written by `construct`).
        #[arg(long = "e")]
        exponent: PathBuf,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long)]
        out: PathBuf,
    },
    /// Monte-Carlo min-sum decoding of an alist code over BPSK/AWGN
    Simulate {
        #[arg(long)]
        alist: PathBuf,
        /// Comma-separated Eb/N0 points in dB, e.g. `1.0,2.0,3.0`.
        #[arg(long)]
        snr: String,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        max_frames: u64,
        #[arg(long, default_value_t = 100)]
        target_frame_errors: u64,
        #[arg(long, default_value_t = 50)]
        max_iterations: u32,
        #[arg(long, default_value_t = 0.75)]
        normalization_factor: f64,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        gnuplot: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}

/// Relative output paths resolve under `QCG8_OUT_DIR` when it is set.
fn resolve_out(path: &Path) -> PathBuf {
    if path.is_relative() {
        if let Ok(dir) = std::env::var("QCG8_OUT_DIR") {
            if !dir.is_empty() {
                return PathBuf::from(dir).join(path);
            }
        }
    }
    path.to_path_buf()
}

fn write_output(path: &Path, contents: &str) -> Result<(), String> {
    let path = resolve_out(path);
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)
                .map_err(|e| format!("cannot create {}: {e}", parent.display()))?;
        }
    }
    std::fs::write(&path, contents).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn emit(out: Option<&Path>, contents: &str) -> Result<(), String> {
    match out {
        Some(path) => write_output(path, contents),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn with_jobs<T>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, String>
where
    T: Send,
{
    match jobs {
        Some(n) => {
            if n == 0 {
                return Err("--jobs must be at least 1".into());
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| e.to_string())?;
            Ok(pool.install(f))
        }
        None => Ok(f()),
    }
}

fn girth_report_json(
    report: &GirthReport,
    j: usize,
    l: usize,
    p: u64,
    family: Option<&str>,
) -> serde_json::Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "j": j,
        "l": l,
        "p": p,
        "family": family,
        "girth": report.girth.as_u32(),
        "girth_is_exact": report.girth.is_exact(),
        "witness": report.witness,
    })
}

fn run(command: Command) -> Result<(), String> {
    match command {
        Command::Construct {
            col_weight,
            row_weight,
            out,
        } => {
            let ms = construction::select_construction(col_weight, row_weight)
                .map_err(|e| e.to_string())?;
            let e = construction::exponent_matrix(&ms).map_err(|e| e.to_string())?;
            let csv = e.to_csv();
            let matrix_rows: Vec<&[i64]> = (0..e.rows()).map(|r| e.row(r)).collect();
            let header = json!({
                "schema_version": SCHEMA_VERSION,
                "j": col_weight,
                "l": row_weight,
                "family": ms.family().label(),
                "kind": match ms.family().kind() {
                    construction::Kind::Basic => "basic",
                    construction::Kind::Derived => "derived",
                },
                "entries": ms.entries(),
                "max_entry": ms.max_entry(),
                "matrix": matrix_rows,
            });
            match out {
                Some(path) => {
                    write_output(&path, &csv)?;
                    let json_path = path.with_extension("json");
                    write_output(&json_path, &format!("{:#}\n", header))?;
                }
                None => print!("{csv}"),
            }
            Ok(())
        }

        Command::Verify {
            col_weight,
            row_weight,
            p,
            exponent,
            out,
        } => {
            let (e, family) = load_matrix(exponent.as_deref(), col_weight, row_weight)?;
            let report = girth::girth_upper8(&e, p).map_err(|e| e.to_string())?;
            let value = girth_report_json(&report, e.rows(), e.cols(), p, family.as_deref());
            emit(out.as_deref(), &format!("{:#}\n", value))
        }

        Command::Certify {
            col_weight,
            row_weight,
            p,
            out,
        } => {
            let ms = construction::select_construction(col_weight, row_weight)
                .map_err(|e| e.to_string())?;
            let rows = triples::table_report(&ms, p).map_err(|e| e.to_string())?;
            emit(out.as_deref(), &triples::table_to_csv(&rows))
        }

        Command::Bounds {
            col_weight,
            row_weight,
            out,
        } => {
            let b = bounds::bound_set(col_weight, row_weight).map_err(|e| e.to_string())?;
            let value = json!({
                "schema_version": SCHEMA_VERSION,
                "j": b.j,
                "l": b.l,
                "family": b.family.label(),
                "search_floor": b.search_floor,
                "special_p": {
                    "p": b.special_p.p,
                    "family": b.special_p.family.label(),
                    "truncate_from_next": b.special_p.truncate_from_next,
                    "formula": b.special_p.formula,
                },
                "ccs_class_bound": b.ccs_class_bound,
                "global_lower_bound": b.global_lower_bound,
                "min_p_upper_bound": b.min_p_upper_bound,
            });
            emit(out.as_deref(), &format!("{:#}\n", value))
        }

        Command::Scan {
            col_weight,
            row_weight,
            from,
            to,
            jobs,
            out,
            gnuplot,
        } => {
            let scan = with_jobs(jobs, || {
                bounds::scan_feasible(col_weight, row_weight, from, to)
            })?
            .map_err(|e| e.to_string())?;
            emit(out.as_deref(), &scan.to_csv())?;
            if let Some(path) = gnuplot {
                let b = bounds::bound_set(col_weight, row_weight).map_err(|e| e.to_string())?;
                write_output(&path, &scan.to_gnuplot(&b))?;
            }
            Ok(())
        }

        Command::SearchMin {
            col_weight,
            row_weight,
            out,
        } => {
            let min_p = bounds::search_min_p(col_weight, row_weight).map_err(|e| e.to_string())?;
            // Re-verify: the reported size must itself pass the girth check.
            let ms = construction::select_construction(col_weight, row_weight)
                .map_err(|e| e.to_string())?;
            let e = construction::exponent_matrix(&ms).map_err(|e| e.to_string())?;
            let report = girth::girth_upper8(&e, min_p).map_err(|e| e.to_string())?;
            if report.girth != Girth::Eight {
                return Err(format!(
                    "internal inconsistency: P={min_p} re-verified with girth {}",
                    report.girth.as_u32()
                ));
            }
            let b = bounds::bound_set(col_weight, row_weight).map_err(|e| e.to_string())?;
            let value = json!({
                "schema_version": SCHEMA_VERSION,
                "j": col_weight,
                "l": row_weight,
                "family": ms.family().label(),
                "search_floor": b.search_floor,
                "min_p_upper_bound": b.min_p_upper_bound,
                "min_p": min_p,
                "verification": girth_report_json(
                    &report,
                    e.rows(),
                    e.cols(),
                    min_p,
                    Some(ms.family().label()),
                ),
            });
            emit(out.as_deref(), &format!("{:#}\n", value))
        }

        Command::Export {
            exponent,
            p,
            format: ExportFormat::Alist,
            out,
        } => {
            let text = std::fs::read_to_string(&exponent)
                .map_err(|e| format!("cannot read {}: {e}", exponent.display()))?;
            let e = ExponentMatrix::from_csv(&text).map_err(|e| e.to_string())?;
            let h = pcm::expand(&e, p).map_err(|e| e.to_string())?;
            write_output(&out, &pcm::export_alist(h.matrix()))?;
            let report = girth::girth_upper8(&e, p).map_err(|e| e.to_string())?;
            let sidecar = json!({
                "schema_version": SCHEMA_VERSION,
                "j": e.rows(),
                "l": e.cols(),
                "p": p,
                "family": e.family().map(|f| f.label()),
                "girth": report.girth.as_u32(),
                "girth_is_exact": report.girth.is_exact(),
                "code_length": h.code_length(),
            });
            write_output(&out.with_extension("json"), &format!("{:#}\n", sidecar))
        }

        Command::Simulate {
            alist,
            snr,
            seed,
            max_frames,
            target_frame_errors,
            max_iterations,
            normalization_factor,
            jobs,
            out,
            gnuplot,
        } => {
            let text = std::fs::read_to_string(&alist)
                .map_err(|e| format!("cannot read {}: {e}", alist.display()))?;
            let h = pcm::import_alist(&text).map_err(|e| e.to_string())?;
            let snr_points_db = parse_snr_list(&snr)?;
            let cfg = SimConfig {
                snr_points_db,
                max_iterations,
                normalization_factor,
                stop_rule: sim::StopRule {
                    target_frame_errors,
                    max_frames,
                },
                seed,
            };
            let result = with_jobs(jobs, || sim::run_ber(&h, &cfg))?.map_err(|e| e.to_string())?;
            emit(out.as_deref(), &result.to_csv())?;
            if let Some(path) = gnuplot {
                write_output(&path, &result.to_gnuplot())?;
            }
            Ok(())
        }
    }
}

fn parse_snr_list(s: &str) -> Result<Vec<f64>, String> {
    let mut points = Vec::new();
    for field in s.split(',') {
        let field = field.trim();
        if field.is_empty() {
            continue;
        }
        points.push(
            field
                .parse::<f64>()
                .map_err(|_| format!("invalid SNR value {field:?} in --snr"))?,
        );
    }
    if points.is_empty() {
        return Err("--snr must list at least one Eb/N0 point".into());
    }
    Ok(points)
}

fn load_matrix(
    exponent: Option<&Path>,
    col_weight: Option<u32>,
    row_weight: Option<u64>,
) -> Result<(ExponentMatrix, Option<String>), String> {
    match exponent {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let e = ExponentMatrix::from_csv(&text).map_err(|e| e.to_string())?;
            Ok((e, None))
        }
        None => {
            let j = col_weight.expect("clap enforces col-weight without --e");
            let l = row_weight.expect("clap enforces row-weight without --e");
            let ms = construction::select_construction(j, l).map_err(|e| e.to_string())?;
            let e = construction::exponent_matrix(&ms).map_err(|e| e.to_string())?;
            Ok((e, Some(ms.family().label().to_string())))
        }
    }
}
