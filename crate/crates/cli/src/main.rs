//! Command-line front end for the genus-gap bound machinery.
//!
//! Exit codes: 0 on success, 2 for input problems (bad flags, invalid
//! invariants, malformed files), 3 when a certification or audit fails.

mod hilbert;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use genus_gaps_core::absgaps::{
    contiguity_check, full_coverage_audit, plan_realization, pnd, verify_realizations,
    verify_witness,
};
use genus_gaps_core::exact::int;
use genus_gaps_core::intervals::certify_coverage;
use genus_gaps_core::nfold::find_m_xl;
use genus_gaps_core::p3;
use genus_gaps_core::{Error as CoreError, Int, PolarizedSurface};
use num_traits::One;

#[derive(Parser)]
#[command(
    name = "genus-gaps",
    version,
    about = "Exact bounds and realization witnesses for genera of curves on polarized surfaces"
)]
struct Cli {
    /// Output format (defaults to table; the GENUS_GAPS_FORMAT environment
    /// variable overrides the default).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Bound profile and interval-chain certificate for a polarized surface.
    Surface {
        /// Self-intersection of the polarization (L^2).
        #[arg(long, value_parser = parse_int)]
        d: Int,
        /// Intersection with the canonical class (K.L).
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        e: Int,
        /// Geometric genus of the surface.
        #[arg(long, value_parser = parse_int)]
        pg: Int,
        /// Irregularity of the surface.
        #[arg(long, value_parser = parse_int)]
        q: Int,
        /// Level from which the linear-system dimension formula is valid.
        #[arg(long, value_parser = parse_int)]
        n4: Int,
        /// Verify the interval chain up to this level (default: n0* + 10).
        #[arg(long, value_parser = parse_int)]
        horizon: Option<Int>,
    },
    /// Derived invariants and thresholds for smooth surfaces in projective
    /// 3-space.
    P3 {
        /// Single degree to analyze.
        #[arg(long, value_parser = parse_int)]
        d: Option<Int>,
        /// Inclusive degree range, e.g. 4..40.
        #[arg(long = "d-range")]
        d_range: Option<String>,
    },
    /// Realization witnesses for (degree, genus) pairs, or a coverage audit
    /// over a genus range.
    AbsGaps {
        #[arg(long, value_parser = parse_int)]
        d: Int,
        /// Single genus to realize.
        #[arg(long, value_parser = parse_int)]
        g: Option<Int>,
        /// Inclusive genus range, e.g. 0..1000.
        #[arg(long = "g-range")]
        g_range: Option<String>,
        /// Audit the range for gap-free coverage instead of listing
        /// witnesses.
        #[arg(long)]
        audit: bool,
    },
    /// Threshold and genus bound from a Hilbert data file.
    Nfold {
        /// Path to the data file (see the Hilbert file format in the README).
        file: PathBuf,
    },
    /// Re-verify witnesses, coverage, and contiguity across a degree range.
    Audit {
        /// Single degree to audit.
        #[arg(long, value_parser = parse_int)]
        d: Option<Int>,
        /// Inclusive degree range, e.g. 5..30.
        #[arg(long = "d-range")]
        d_range: Option<String>,
        /// Upper genus bound per degree (default: the genus p(d,d)).
        #[arg(long = "g-max", value_parser = parse_int)]
        g_max: Option<Int>,
    },
}

fn parse_int(value: &str) -> Result<Int, String> {
    value
        .parse::<Int>()
        .map_err(|_| format!("expected an integer, got '{value}'"))
}

enum AppError {
    Core(CoreError),
    Io(PathBuf, std::io::Error),
    Syntax { line: usize, msg: String },
    Usage(String),
}

impl From<CoreError> for AppError {
    fn from(e: CoreError) -> Self {
        AppError::Core(e)
    }
}

impl From<hilbert::HilbertError> for AppError {
    fn from(e: hilbert::HilbertError) -> Self {
        match e {
            hilbert::HilbertError::Syntax { line, msg } => AppError::Syntax { line, msg },
            hilbert::HilbertError::Data(e) => AppError::Core(e),
        }
    }
}

impl std::fmt::Display for AppError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AppError::Core(e) => write!(f, "{e}"),
            AppError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            AppError::Syntax { line: 0, msg } => write!(f, "{msg}"),
            AppError::Syntax { line, msg } => write!(f, "line {line}: {msg}"),
            AppError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl AppError {
    /// 2 for input problems, 3 for failed certifications and audits.
    fn exit_code(&self) -> u8 {
        match self {
            AppError::Core(e) => match e {
                CoreError::Domain(_) | CoreError::Precondition(_) | CoreError::Integrity(_) => 2,
                CoreError::Certification { .. }
                | CoreError::CertificationImpossible(_)
                | CoreError::AuditFailure { .. }
                | CoreError::CoverageFailure { .. } => 3,
            },
            AppError::Io(..) | AppError::Syntax { .. } | AppError::Usage(_) => 2,
        }
    }
}

/// Parses an inclusive range written as `lo..hi` (or `lo..=hi`).
fn parse_range(text: &str) -> Result<(Int, Int), AppError> {
    let err = || {
        AppError::Usage(format!(
            "expected an inclusive range like 4..40, got '{text}'"
        ))
    };
    let (lo, hi) = text.split_once("..").ok_or_else(err)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: Int = lo.trim().parse().map_err(|_| err())?;
    let hi: Int = hi.trim().parse().map_err(|_| err())?;
    if lo > hi {
        return Err(AppError::Usage(format!("range '{text}' runs backwards")));
    }
    Ok((lo, hi))
}

fn resolve_format(flag: Option<Format>) -> Result<Format, AppError> {
    if let Some(f) = flag {
        return Ok(f);
    }
    match std::env::var("GENUS_GAPS_FORMAT") {
        Ok(value) => match value.to_ascii_lowercase().as_str() {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(AppError::Usage(format!(
                "GENUS_GAPS_FORMAT must be table, json, or csv, got '{other}'"
            ))),
        },
        Err(std::env::VarError::NotPresent) => Ok(Format::Table),
        Err(std::env::VarError::NotUnicode(_)) => Err(AppError::Usage(
            "GENUS_GAPS_FORMAT is not valid unicode".to_string(),
        )),
    }
}

fn run(cmd: Cmd, format: Format) -> Result<String, AppError> {
    match cmd {
        Cmd::Surface {
            d,
            e,
            pg,
            q,
            n4,
            horizon,
        } => {
            let s = PolarizedSurface::new(d, e, pg, q, n4)?;
            let profile = s.bound_profile()?;
            let horizon = horizon.unwrap_or_else(|| &profile.n0_star + int(10));
            let cert = certify_coverage(&s, &horizon)?;
            Ok(render::surface(&profile, &cert, format))
        }
        Cmd::P3 { d, d_range } => match (d, d_range) {
            (Some(d), None) => {
                let rep = p3::report(&d)?;
                let roots = p3::root_table(&d, &d)?;
                Ok(render::p3_single(&rep, &roots, format))
            }
            (None, Some(range)) => {
                let (lo, hi) = parse_range(&range)?;
                let reps = p3::batch_reports(&lo, &hi)?;
                Ok(render::p3_range(&reps, format))
            }
            _ => Err(AppError::Usage(
                "pass exactly one of --d or --d-range".to_string(),
            )),
        },
        Cmd::AbsGaps {
            d,
            g,
            g_range,
            audit,
        } => match (g, g_range) {
            (Some(g), None) => {
                if audit {
                    return Err(AppError::Usage(
                        "--audit applies to --g-range, not a single --g".to_string(),
                    ));
                }
                let witness = plan_realization(&d, &g)?;
                verify_witness(&d, &g, &witness)?;
                Ok(render::witness_single(&d, &g, &witness, format))
            }
            (None, Some(range)) => {
                let (lo, hi) = parse_range(&range)?;
                if audit {
                    verify_realizations(&d, &lo, &hi)?;
                    full_coverage_audit(&d, &hi)?;
                    Ok(render::absgaps_audit(&d, &lo, &hi, format))
                } else {
                    let mut rows = Vec::new();
                    let mut g = lo;
                    while g <= hi {
                        let witness = plan_realization(&d, &g)?;
                        verify_witness(&d, &g, &witness)?;
                        rows.push((g.clone(), witness));
                        g += 1;
                    }
                    Ok(render::witness_rows(&d, &rows, format))
                }
            }
            _ => Err(AppError::Usage(
                "pass exactly one of --g or --g-range".to_string(),
            )),
        },
        Cmd::Nfold { file } => {
            let text = std::fs::read_to_string(&file).map_err(|e| AppError::Io(file.clone(), e))?;
            let data = hilbert::parse_str(&text)?;
            let result = find_m_xl(&data)?;
            Ok(render::nfold(&result, format))
        }
        Cmd::Audit { d, d_range, g_max } => {
            let (lo, hi) = match (d, d_range) {
                (Some(d), None) => (d.clone(), d),
                (None, Some(range)) => parse_range(&range)?,
                _ => {
                    return Err(AppError::Usage(
                        "pass exactly one of --d or --d-range".to_string(),
                    ))
                }
            };
            let mut rows = Vec::new();
            let mut d = lo;
            while d <= hi {
                let top = match &g_max {
                    Some(g) => g.clone(),
                    None => pnd(&d, &d)?,
                };
                verify_realizations(&d, &int(0), &top)?;
                full_coverage_audit(&d, &top)?;
                let mut n = int(4);
                while n <= &d - int(2) {
                    let rep = contiguity_check(&n, &d)?;
                    if !rep.holds {
                        return Err(AppError::Core(CoreError::Certification {
                            n: n.clone(),
                            reason: format!("contiguity fails at n = {n}, d = {d}"),
                        }));
                    }
                    n += 1;
                }
                rows.push((d.clone(), top));
                d += Int::one();
            }
            Ok(render::audit_rows(&rows, format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match resolve_format(cli.format) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    match run(cli.cmd, format) {
        Ok(output) => {
            print!("{output}");
            if !output.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
