//! Command-line front end: argument definitions, command execution and
//! report rendering. `main.rs` only maps the outcome to an exit status.

pub mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use ncent_core::analytics::GroupAnalysis;
use ncent_core::io::{export_cayley, load_catalog, parse_spec};
use ncent_core::verifier::{
    build_catalog, default_catalog, run_suite, search, CatalogEntry, SearchPredicate, SearchQuery,
    SuiteReport, VerifyConfig,
};

use report::{suite_text, Format, Report, SearchReport};

pub const EXIT_CHECK_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INPUT: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "ncent",
    version,
    about = "Element-centralizer structure of finite groups"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Sampling seed for element-pair checks on large groups (decimal or 0x-hex).
    #[arg(long, value_parser = parse_seed, default_value = "0x5EED", global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze one group given as a spec such as `builtin:dihedral:14`.
    Analyze { spec: String },
    /// Run every check on every catalog group.
    Verify {
        /// `default` or a catalog file.
        #[arg(long, default_value = "default")]
        catalog: String,
        /// Worker threads.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
    /// List catalog groups satisfying a predicate.
    Search {
        /// cent_eq_half, cent_eq_half_plus_two or cent_ge_half.
        #[arg(value_parser = parse_predicate)]
        query: SearchPredicate,
        /// Only consider groups of at most this order.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_order: Option<u64>,
        /// Only report F-groups.
        #[arg(long)]
        f_only: bool,
        #[arg(long, default_value = "default")]
        catalog: String,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
    /// Write the Cayley table of a group to a file.
    Export { spec: String, path: PathBuf },
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed {s:?}: {e}"))
}

fn parse_predicate(s: &str) -> Result<SearchPredicate, String> {
    s.parse().map_err(|e| format!("{e}"))
}

/// A command's rendered output and its exit status.
pub struct Outcome {
    pub output: String,
    pub exit: ExitCode,
}

impl Outcome {
    fn new(output: String, failed: bool) -> Self {
        Outcome {
            output,
            exit: if failed {
                ExitCode::from(EXIT_CHECK_FAILURE)
            } else {
                ExitCode::SUCCESS
            },
        }
    }
}

/// Check failures take precedence; otherwise entries that failed to build
/// make the run an input error.
fn suite_exit(report: &SuiteReport) -> ExitCode {
    if report.has_failures() {
        ExitCode::from(EXIT_CHECK_FAILURE)
    } else if report.summary.error > 0 {
        ExitCode::from(EXIT_INPUT)
    } else {
        ExitCode::SUCCESS
    }
}

fn catalog(selector: &str) -> Result<Vec<CatalogEntry>> {
    if selector == "default" {
        return Ok(default_catalog());
    }
    load_catalog(selector.as_ref()).with_context(|| format!("loading catalog {selector}"))
}

fn json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Executes a parsed command. Errors are input errors.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let config = VerifyConfig {
        seed: cli.seed,
        ..VerifyConfig::default()
    };
    match &cli.command {
        Command::Analyze { spec } => {
            let g = parse_spec(spec)?
                .build()
                .with_context(|| format!("building {spec}"))?;
            let g = if g.name().is_empty() {
                g.with_name(spec.clone())
            } else {
                g
            };
            let report = Report::new(&GroupAnalysis::new(g), &config);
            let output = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => json(&report),
            };
            Ok(Outcome::new(output, report.has_failures()))
        }
        Command::Verify { catalog: sel, jobs } => {
            let report = run_suite(&catalog(sel)?, &config, usize::from(*jobs));
            let output = match cli.format {
                Format::Text => suite_text(&report),
                Format::Json => json(&report),
            };
            Ok(Outcome {
                output,
                exit: suite_exit(&report),
            })
        }
        Command::Search {
            query,
            max_order,
            f_only,
            catalog: sel,
            jobs,
        } => {
            let mut q = SearchQuery::new(query.clone());
            if let Some(m) = max_order {
                q = q.max_order(usize::try_from(*m).unwrap_or(usize::MAX));
            }
            if *f_only {
                q = q.f_groups_only();
            }
            let built = build_catalog(&catalog(sel)?, usize::from(*jobs));
            let report = SearchReport {
                predicate: query.label().to_string(),
                max_order: max_order.map(|m| m as usize),
                f_groups_only: *f_only,
                hits: search(&q, &built),
            };
            let output = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => json(&report),
            };
            Ok(Outcome::new(output, false))
        }
        Command::Export { spec, path } => {
            let g = parse_spec(spec)?
                .build()
                .with_context(|| format!("building {spec}"))?;
            let g = if g.name().is_empty() {
                g.with_name(spec.clone())
            } else {
                g
            };
            export_cayley(&g, path)?;
            Ok(Outcome::new(
                format!(
                    "wrote {} ({} elements) to {}\n",
                    g.name(),
                    g.order(),
                    path.display()
                ),
                false,
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ncent_core::verifier::{CheckResult, Details, Status, Summary};

    fn report(status: Status) -> SuiteReport {
        let results = vec![CheckResult {
            check_id: "t1".into(),
            group_name: "G".into(),
            status,
            reason: None,
            details: Details::new(),
        }];
        SuiteReport {
            summary: Summary {
                groups: 1,
                results: 1,
                fail: usize::from(status == Status::Fail),
                error: usize::from(status == Status::Error),
                ..Summary::default()
            },
            results,
        }
    }

    #[test]
    fn exit_statuses() {
        assert_eq!(
            suite_exit(&report(Status::Fail)),
            ExitCode::from(EXIT_CHECK_FAILURE)
        );
        assert_eq!(
            suite_exit(&report(Status::Error)),
            ExitCode::from(EXIT_INPUT)
        );
        assert_eq!(suite_exit(&report(Status::Pass)), ExitCode::SUCCESS);
    }

    #[test]
    fn seeds() {
        assert_eq!(parse_seed("0x5EED"), Ok(0x5EED));
        assert_eq!(parse_seed("24301"), Ok(24301));
        assert!(parse_seed("0xZZ").is_err());
    }
}
