//! Command-line front end: expression parsing, report rendering, Upsilon
//! export and the sweep runner.

pub mod expr;
pub mod render;
pub mod sweep;

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::Context;
use clap::{Parser, Subcommand};
use lspace_core::obstruction::SweepMode;
use lspace_core::{full_report, upsilon_of_sum, UpsilonMethod, Verdict};

pub use expr::{parse_expression, KnotExpression, ParseError, Term};
pub use sweep::{ConfigError, SweepConfig};

#[derive(Debug, Parser)]
#[command(
    name = "lspace",
    version,
    about = "Concordance obstructions for sums of torus knots"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every obstruction check on a sum such as "3*T(5,6) - T(2,5) - T(3,5)".
    Report {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Write the Upsilon function (or its derivative) as exact CSV.
    Upsilon {
        expr: String,
        #[arg(long)]
        derivative: bool,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Print tau, genus, Alexander exponents, the Upsilon basis decomposition and signature jumps.
    Invariants {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Run an exhaustive sweep described by a config file.
    Sweep {
        #[arg(short, long)]
        config: PathBuf,
    },
}

/// Exit status for a successful run: 0, or 1 when something was obstructed
/// (`report`) or a sweep found violations. Errors map to 2 in the binary.
pub fn run(cli: Cli, out: &mut dyn Write) -> anyhow::Result<u8> {
    match cli.command {
        Command::Report { expr, json } => {
            let sum = parse_expression(&expr)?.to_sum();
            let report = full_report(&sum);
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&render::report_json(&expr, &report))?
                )?;
            } else {
                write!(out, "{}", render::report_text(&expr, &report))?;
            }
            Ok(u8::from(report.verdict == Verdict::Obstructed))
        }
        Command::Upsilon {
            expr,
            derivative,
            output,
        } => {
            let sum = parse_expression(&expr)?.to_sum();
            let f = upsilon_of_sum(&sum, UpsilonMethod::Direct);
            let csv = if derivative {
                render::derivative_csv(&f)
            } else {
                render::upsilon_csv(&f)
            };
            fs::write(&output, csv).with_context(|| format!("writing {}", output.display()))?;
            Ok(0)
        }
        Command::Invariants { expr, json } => {
            let sum = parse_expression(&expr)?.to_sum();
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&render::invariants_json(&expr, &sum))?
                )?;
            } else {
                write!(out, "{}", render::invariants_text(&expr, &sum))?;
            }
            Ok(0)
        }
        Command::Sweep { config } => {
            let text = fs::read_to_string(&config)
                .with_context(|| format!("reading {}", config.display()))?;
            let cfg: SweepConfig = text
                .parse()
                .with_context(|| format!("in {}", config.display()))?;
            let summary = cfg.run();
            let mode = match cfg.mode() {
                SweepMode::Assert => "assert",
                SweepMode::Explore => "explore",
            };
            let header = format!(
                "sweep: knot_count {}, bound_q {}, bound_mult {} ({mode})",
                cfg.knot_count, cfg.bound_q, cfg.bound_mult
            );
            write!(out, "{}", render::sweep_text(&header, &summary))?;
            if let Some(path) = &cfg.output {
                let doc = render::sweep_json(cfg.to_json(), mode, &summary);
                fs::write(path, serde_json::to_string_pretty(&doc)? + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(u8::from(!summary.violations.is_empty()))
        }
    }
}
