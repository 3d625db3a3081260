//! Command-line front end: JSON in, JSON out, diagnostics on stderr.
//! Exit status 0 means success, 1 means a verification found violations,
//! 2 means the invocation or its input was invalid.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use rowmotion_cli::json::{
    labeling_from_str, labeling_to_json, labels_map, minor_dump, profile_from_str,
    profile_to_json,
};
use rowmotion_cli::suite::{check_names, ideal_orbits, run_suite, Mutation, SuiteConfig};

use rowmotion_core::algebra::{Birational, ToggleAlgebra, Tropical};
use rowmotion_core::closed_form::PowerTable;
use rowmotion_core::dynamics::{self, Labeling};
use rowmotion_core::paths::{
    enumerate_interval_collections, w_interval_from, GrGraph, RPathCollection,
};
use rowmotion_core::poset::{Cell, Interval, Rect};
use rowmotion_core::rsk;
use rowmotion_core::st_words;
use rowmotion_core::Rational;

#[derive(Parser)]
#[command(
    name = "rowmotion",
    version,
    about = "Exact birational, piecewise-linear and combinatorial rowmotion on rectangles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct LabelsArg {
    /// Path to a labeling JSON file.
    #[arg(long)]
    labels: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a power of rowmotion on transfer_inverse(labels), through
    /// the minor quotients and through toggles, and print both.
    Orbit {
        #[command(flatten)]
        labels: LabelsArg,
        /// Signed exponent of rowmotion.
        #[arg(long, allow_negative_numbers = true)]
        power: i64,
        /// Restrict output to one cell, written `i,j`.
        #[arg(long)]
        cell: Option<String>,
    },
    /// Apply the toggle-based RSK map.
    Rsk {
        #[command(flatten)]
        labels: LabelsArg,
        /// Run over the max-plus algebra instead of positive rationals.
        #[arg(long)]
        tropical: bool,
        /// Empty-min value for the tropical run.
        #[arg(long, default_value = "1")]
        ceiling: String,
    },
    /// Print a generalized Stanley-Thomas word.
    Stword {
        #[command(flatten)]
        labels: LabelsArg,
        /// Row word index.
        #[arg(long, conflicts_with = "col")]
        row: Option<usize>,
        /// Column word index.
        #[arg(long)]
        col: Option<usize>,
    },
    /// Check the border products of the RSK image against family weights.
    Greene {
        #[command(flatten)]
        labels: LabelsArg,
    },
    /// Check the chain-sum shifting identities for one inverse step.
    Shift {
        #[command(flatten)]
        labels: LabelsArg,
    },
    /// Recover a labeling from its border chain sums.
    Reconstruct {
        /// Path to a chain-sum profile JSON file.
        #[arg(long)]
        sums: PathBuf,
    },
    /// Print the border chain sums of a labeling.
    Sums {
        #[command(flatten)]
        labels: LabelsArg,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value_t = 4)]
        r_max: usize,
        #[arg(long, default_value_t = 4)]
        s_max: usize,
        #[arg(long, default_value_t = 10)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Bound for random numerators and denominators.
        #[arg(long, default_value_t = 20)]
        bound: u64,
        /// Check names to run (repeatable); default is all.
        #[arg(long)]
        suite: Vec<String>,
    },
    /// Enumerate the order ideals of a rectangle and their orbits.
    Ideals {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// Dump the solid-minor array of the path matrix.
    Minors {
        #[command(flatten)]
        labels: LabelsArg,
    },
    /// Enumerate vertex-disjoint path families in an interval.
    Paths {
        #[command(flatten)]
        labels: LabelsArg,
        /// Interval written `i1,i2,j1,j2`.
        #[arg(long)]
        interval: String,
        /// Number of paths in a family.
        #[arg(long)]
        k: usize,
    },
}

/// Usage problems exit with status 2; verification failures with 1.
enum CliError {
    Usage(String),
}

impl From<rowmotion_cli::json::JsonError> for CliError {
    fn from(e: rowmotion_cli::json::JsonError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<rowmotion_core::Error> for CliError {
    fn from(e: rowmotion_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn read_positive_labeling(path: &PathBuf) -> Result<Labeling, CliError> {
    let x = labeling_from_str(&read_file(path)?)?;
    x.check_carrier(&Birational)?;
    Ok(x)
}

fn parse_cell(rect: Rect, text: &str) -> Result<Cell, CliError> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| CliError::Usage(format!("cell `{text}` is not of the form i,j")))?;
    let i = a
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("bad row in `{text}`")))?;
    let j = b
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("bad column in `{text}`")))?;
    let cell = Cell::new(i, j);
    rect.check_cell(cell)?;
    Ok(cell)
}

fn emit(value: serde_json::Value) {
    println!("{value}");
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Orbit {
            labels,
            power,
            cell,
        } => {
            let x = read_positive_labeling(&labels.labels)?;
            let rect = x.rect();
            let table = PowerTable::new(&x)?;
            let closed = table.power_labeling(power)?;
            let toggled = toggle_route(&x, power)?;
            let agree = closed == toggled;
            match cell {
                Some(text) => {
                    let cell = parse_cell(rect, &text)?;
                    emit(json!({
                        "r": rect.rows(),
                        "s": rect.cols(),
                        "power": power,
                        "cell": format!("{},{}", cell.i, cell.j),
                        "closed_form": closed.get(cell).to_string(),
                        "toggle": toggled.get(cell).to_string(),
                        "agree": agree,
                    }));
                }
                None => {
                    emit(json!({
                        "r": rect.rows(),
                        "s": rect.cols(),
                        "power": power,
                        "closed_form": labels_map(&closed),
                        "toggle": labels_map(&toggled),
                        "agree": agree,
                    }));
                }
            }
            Ok(exit_flag(agree))
        }
        Command::Rsk {
            labels,
            tropical,
            ceiling,
        } => {
            let text = read_file(&labels.labels)?;
            let x = labeling_from_str(&text)?;
            if tropical {
                let ceiling: Rational = ceiling
                    .parse()
                    .map_err(|e| CliError::Usage(format!("bad ceiling: {e}")))?;
                let alg = Tropical::with_ceiling(ceiling.clone());
                let (image, agree) = rsk_both_routes(&x, &alg)?;
                emit(json!({
                    "r": x.rect().rows(),
                    "s": x.rect().cols(),
                    "algebra": "tropical",
                    "ceiling": ceiling.to_string(),
                    "image": labels_map(&image),
                    "routes_agree": agree,
                }));
                Ok(exit_flag(agree))
            } else {
                x.check_carrier(&Birational)?;
                let (image, agree) = rsk_both_routes(&x, &Birational)?;
                emit(json!({
                    "r": x.rect().rows(),
                    "s": x.rect().cols(),
                    "algebra": "birational",
                    "image": labels_map(&image),
                    "routes_agree": agree,
                }));
                Ok(exit_flag(agree))
            }
        }
        Command::Stword { labels, row, col } => {
            let x = read_positive_labeling(&labels.labels)?;
            let rect = x.rect();
            let (kind, label) = match (row, col) {
                (Some(i), None) => {
                    if i < 1 || i > rect.rows() {
                        return Err(CliError::Usage(format!("row {i} out of range")));
                    }
                    (st_words::WordKind::Row(i), json!({"kind": "ST_i", "i": i}))
                }
                (None, Some(j)) => {
                    if j < 1 || j > rect.cols() {
                        return Err(CliError::Usage(format!("column {j} out of range")));
                    }
                    (st_words::WordKind::Col(j), json!({"kind": "STbar_j", "j": j}))
                }
                _ => {
                    return Err(CliError::Usage(
                        "exactly one of --row or --col is required".into(),
                    ))
                }
            };
            let word = st_words::generalized_st(&x, kind)?;
            let mut value = label;
            value.as_object_mut().expect("object").insert(
                "entries".into(),
                json!(word
                    .entries
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()),
            );
            emit(value);
            Ok(ExitCode::SUCCESS)
        }
        Command::Greene { labels } => {
            let x = read_positive_labeling(&labels.labels)?;
            let violations = rsk::greene_violations(&x)?;
            emit(json!({
                "passed": violations.is_empty(),
                "violations": violations
                    .iter()
                    .map(|v| json!({
                        "i": v.i,
                        "j": v.j,
                        "k": v.k,
                        "product": v.product.to_string(),
                        "expected": v.expected.to_string(),
                    }))
                    .collect::<Vec<_>>(),
            }));
            Ok(exit_flag(violations.is_empty()))
        }
        Command::Shift { labels } => {
            let x = read_positive_labeling(&labels.labels)?;
            let bands = rsk::chain_shift_violations(&x)?;
            let entries = rsk::chain_shift_rsk_violations(&x)?;
            let passed = bands.is_empty() && entries.is_empty();
            emit(json!({
                "passed": passed,
                "band_violations": bands.iter().map(|v| v.detail.clone()).collect::<Vec<_>>(),
                "rsk_entry_violations": entries.iter().map(|v| v.detail.clone()).collect::<Vec<_>>(),
            }));
            Ok(exit_flag(passed))
        }
        Command::Reconstruct { sums } => {
            let profile = profile_from_str(&read_file(&sums)?)?;
            let rect = profile.rect;
            let x = rsk::reconstruct_from_chain_sums(&profile, rect)?;
            emit(serde_json::to_value(labeling_to_json(&x)).expect("serializable"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Sums { labels } => {
            let x = read_positive_labeling(&labels.labels)?;
            let profile = rsk::chain_sum_profile(&x)?;
            emit(serde_json::to_value(profile_to_json(&profile)).expect("serializable"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            r_max,
            s_max,
            trials,
            seed,
            bound,
            suite,
        } => {
            if r_max < 1 || s_max < 1 || trials < 1 {
                return Err(CliError::Usage(
                    "--r-max, --s-max and --trials must be at least 1".into(),
                ));
            }
            let known: BTreeSet<String> = check_names().iter().map(|s| s.to_string()).collect();
            for name in &suite {
                if !known.contains(name) {
                    return Err(CliError::Usage(format!(
                        "unknown suite `{name}`; available: {}",
                        check_names().join(", ")
                    )));
                }
            }
            let config = SuiteConfig {
                r_max,
                s_max,
                trials,
                seed,
                bound,
                suites: if suite.is_empty() {
                    None
                } else {
                    Some(suite.into_iter().collect())
                },
                mutation: Mutation::None,
            };
            let report = run_suite(&config);
            for check in &report.checks {
                eprintln!(
                    "{}: {} ({} ms)",
                    check.name,
                    if check.passed { "pass" } else { "FAIL" },
                    check.millis
                );
            }
            emit(serde_json::to_value(&report).expect("serializable"));
            Ok(exit_flag(report.all_passed))
        }
        Command::Ideals { r, s } => {
            if r < 1 || s < 1 {
                return Err(CliError::Usage("--r and --s must be at least 1".into()));
            }
            let rect = Rect::new(r, s);
            let orbits = ideal_orbits(rect)?;
            let count: usize = orbits.iter().map(|o| o.len()).sum();
            emit(json!({
                "r": r,
                "s": s,
                "ideal_count": count,
                "rowmotion_order": r + s,
                "orbits": orbits
                    .iter()
                    .map(|orbit| json!({
                        "length": orbit.len(),
                        "ideals": orbit
                            .iter()
                            .map(|ideal| json!({
                                "cells": ideal
                                    .cells()
                                    .iter()
                                    .map(|c| json!([c.i, c.j]))
                                    .collect::<Vec<_>>(),
                                "word": rowmotion_core::poset::stanley_thomas_word(
                                    &ideal.maximal_antichain(),
                                    rect
                                ),
                            }))
                            .collect::<Vec<_>>(),
                    }))
                    .collect::<Vec<_>>(),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Minors { labels } => {
            let x = read_positive_labeling(&labels.labels)?;
            let w = GrGraph::new(&x)?.minor_array();
            emit(json!({
                "r": x.rect().rows(),
                "s": x.rect().cols(),
                "n": w.n(),
                "entries": minor_dump(&w),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Paths {
            labels,
            interval,
            k,
        } => {
            let x = read_positive_labeling(&labels.labels)?;
            let rect = x.rect();
            let parts: Vec<usize> = interval
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| CliError::Usage(format!("bad interval `{interval}`")))?;
            let [i1, i2, j1, j2] = parts.as_slice() else {
                return Err(CliError::Usage(
                    "interval must be of the form i1,i2,j1,j2".into(),
                ));
            };
            let interval = Interval::new(rect, *i1, *i2, *j1, *j2)?;
            let families = enumerate_interval_collections(interval, k)?;
            let total = families
                .iter()
                .fold(Rational::zero(), |acc, c| &acc + &c.weight(&x));
            let fast = if interval.corner_anchored(rect) {
                let w = GrGraph::new(&x)?.minor_array();
                Some(w_interval_from(&w, rect, interval, k)?.to_string())
            } else {
                None
            };
            emit(json!({
                "interval": [i1, i2, j1, j2],
                "k": k,
                "collections": families
                    .iter()
                    .map(|family| collection_json(family, &x))
                    .collect::<Vec<_>>(),
                "total": total.to_string(),
                "minor_quotient": fast,
            }));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn collection_json(family: &RPathCollection, x: &Labeling) -> serde_json::Value {
    json!({
        "paths": family
            .paths
            .iter()
            .map(|path| path.iter().map(|c| json!([c.i, c.j])).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "weight": family.weight(x).to_string(),
    })
}

fn exit_flag(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

/// The toggle route for `orbit`: reduce the exponent modulo the period and
/// iterate plain rowmotion.
fn toggle_route(x: &Labeling, power: i64) -> Result<Labeling, CliError> {
    let rect = x.rect();
    let period = (rect.rows() + rect.cols()) as i64;
    let steps = power.rem_euclid(period);
    let mut current = dynamics::transfer_inverse(x, &Birational)?;
    for _ in 0..steps {
        current = dynamics::rowmotion(&current, &Birational)?;
    }
    Ok(current)
}

fn rsk_both_routes<A: ToggleAlgebra>(
    x: &Labeling,
    alg: &A,
) -> Result<(Labeling, bool), CliError> {
    let image = rsk::birational_rsk(x, alg)?;
    let scanned = rsk::rsk_by_file_toggles(x, alg)?;
    let agree = image == scanned;
    Ok((image, agree))
}
