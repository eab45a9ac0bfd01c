//! `zetterberg`: fields, minimum distance, covering radius, threshold tables
//! and classification sweeps from the command line.
//!
//! Exit codes: 0 success, 1 internal inconsistency, 2 usage, 3 cap exceeded,
//! 4 undecidable.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use zetterberg::classify::{sweep, sweep_csv, sweep_markdown};
use zetterberg::code::{code_parameters, min_distance_exhaustive, min_distance_formula, MinDistance, Variant, ZetterbergCode};
use zetterberg::radius::{covering_radius, Strategy};
use zetterberg::thresholds::{table_csv, threshold_table, Parity};
use zetterberg::{Arena, Caps, Error, FieldContext, Subgroup};

#[derive(Parser)]
#[command(name = "zetterberg", version, about = "Generalized Zetterberg codes")]
struct Cli {
    /// Caps file (key = value lines); defaults to $ZETTERBERG_CONFIG when set.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Report elapsed_ms as null so repeated runs are byte-identical.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build F_{p^{2sm}} and describe it.
    Field {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        s: u32,
        /// Also print modulus, generator and subgroup orders.
        #[arg(long)]
        dump: bool,
    },
    /// Covering radius of C_s(q0).
    Radius {
        #[arg(long)]
        q0: u64,
        #[arg(long)]
        s: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = RadiusFormat::Json)]
        format: RadiusFormat,
    },
    /// Minimum distance from the closed form, optionally checked by search.
    Mindist {
        #[arg(long)]
        q0: u64,
        #[arg(long)]
        s: u32,
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        exhaustive: bool,
    },
    /// Threshold table over prime powers of one parity.
    Thresholds {
        #[arg(long, value_enum)]
        parity: ParityArg,
        #[arg(long)]
        q0_max: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Classification sweep over s = 1..=s_max.
    Classify {
        #[arg(long)]
        q0: u64,
        #[arg(long)]
        s_max: u32,
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = SweepFormat::Json)]
        format: SweepFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Oracle,
    Criterion,
    Shortcut,
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Full,
    Half,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
}

#[derive(Clone, Copy, ValueEnum)]
enum RadiusFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFormat {
    Json,
    Csv,
    Markdown,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Full => Variant::Full,
            VariantArg::Half => Variant::Half,
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::SizeCapExceeded { .. } => 3,
        Error::Undecidable { .. } => 4,
        Error::FormulaMismatch(_) | Error::Inconsistent(_) | Error::NotFound(_) | Error::DivisionByZero => 1,
        _ => 2,
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn run(cli: Cli) -> Result<String, Error> {
    let caps = match &cli.config {
        Some(path) => Caps::from_file(path)?,
        None => Caps::from_env()?,
    };
    match cli.command {
        Command::Field { p, m, s, dump } => {
            let ctx = FieldContext::new(p, m, s, Arena::Quadratic, &caps)?;
            let mut out = json!({
                "p": p,
                "m": m,
                "s": s,
                "degree": ctx.degree(),
                "order": ctx.order(),
                "q0": ctx.q0(),
                "q": ctx.q(),
                "h_order": ctx.subgroup_order(Subgroup::H)?,
            });
            if dump {
                let f = ctx.to_json();
                out["modulus"] = json!(f.modulus);
                out["generator"] = json!(f.generator);
                out["fq_star_order"] = json!(ctx.subgroup_order(Subgroup::FqStar)?);
                out["fq0_star_order"] = json!(ctx.subgroup_order(Subgroup::Fq0Star)?);
                out["xi"] = json!(ctx.coeffs(ctx.subgroup_generator(Subgroup::H)?));
            }
            Ok(pretty(&out))
        }
        Command::Radius { q0, s, method, format } => {
            let strategy = match method {
                MethodArg::Auto => Strategy::Auto,
                MethodArg::Oracle => Strategy::Oracle,
                MethodArg::Criterion => Strategy::Criterion,
                MethodArg::Shortcut => Strategy::Shortcut,
                MethodArg::Verify => Strategy::Verify,
            };
            let mut report = covering_radius(q0, s, strategy, &caps)?;
            if cli.no_timing {
                report.elapsed_ms = None;
            }
            Ok(match format {
                RadiusFormat::Json => pretty(&report),
                RadiusFormat::Text => {
                    let checks: Vec<String> =
                        report.cross_checks.iter().map(|c| format!("{}={}", c.method, c.rho)).collect();
                    format!("rho = {} by {} [{}]", report.rho, report.method, checks.join(", "))
                }
            })
        }
        Command::Mindist { q0, s, variant, exhaustive } => {
            let variant = Variant::from(variant);
            let (length, dimension) = code_parameters(q0, s, variant)?;
            let d = min_distance_formula(q0, s, variant)?;
            let mut out = json!({
                "q0": q0,
                "s": s,
                "variant": variant,
                "length": length,
                "dimension": dimension,
                "d": d,
            });
            if exhaustive {
                let code = ZetterbergCode::for_params(q0, s, variant, &caps)?;
                match min_distance_exhaustive(&code, d, &caps)? {
                    MinDistance::Exact { d: found, witness } if found == d => {
                        out["verified"] = json!(true);
                        out["witness"] = json!(code.to_json(&witness));
                    }
                    other => {
                        return Err(Error::Inconsistent(format!(
                            "formula gives d = {d}, search gives {other:?}"
                        )))
                    }
                }
            }
            Ok(pretty(&out))
        }
        Command::Thresholds { parity, q0_max, format } => {
            let parity = match parity {
                ParityArg::Odd => Parity::Odd,
                ParityArg::Even => Parity::Even,
            };
            let rows = threshold_table(parity, q0_max)?;
            Ok(match format {
                TableFormat::Csv => table_csv(parity, &rows).trim_end().to_string(),
                TableFormat::Json => pretty(&rows),
            })
        }
        Command::Classify { q0, s_max, variant, format } => {
            let cells = sweep(&[q0], 1..=s_max, variant.into(), &caps);
            Ok(match format {
                SweepFormat::Json => pretty(&cells),
                SweepFormat::Csv => sweep_csv(&cells).trim_end().to_string(),
                SweepFormat::Markdown => sweep_markdown(&cells).trim_end().to_string(),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
