//! `xcomplex`: count morphisms, invariants and homotopy classes from the
//! command line. Reports go to stdout as JSON; a short summary goes to stderr.

mod input;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use xcomplex::enumerate::{DEFAULT_BRUTEFORCE_CAP, DEFAULT_ENUMERATION_CAP};
use xcomplex::homotopy::DEFAULT_EDGE_BUDGET;
use xcomplex::presentation::builders;
use xcomplex::{
    count_homs_bruteforce, count_homs_with, enumerate_homs_with, euler_char_mapping_space, homotopy_classes_with,
    invariant_ia_with, normalization_factor, selfcheck, suite, CWPresentation, Error, FiniteCrossedComplex, Morphism,
    SearchConfig, ValidationReport,
};

use report::{Failure, RunReport};

#[derive(Parser)]
#[command(name = "xcomplex", version, about = "Exact morphism counts from CW-complexes into finite crossed complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check group, crossed complex and presentation documents.
    Validate {
        #[arg(long, value_name = "FILE")]
        group: Option<String>,
        #[arg(long, value_name = "FILE")]
        complex: Option<String>,
        #[arg(long, value_name = "FILE")]
        presentation: Option<String>,
    },
    /// Count morphisms Π(M) -> A.
    Count {
        #[command(flatten)]
        pair: Pair,
        /// List every morphism in canonical order.
        #[arg(long)]
        enumerate: bool,
        /// Cross-check against brute force when the instance is under the cap.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        knobs: Knobs,
    },
    /// Compute the invariant I_A(M) as an exact rational.
    Invariant {
        #[command(flatten)]
        pair: Pair,
        /// Also compute the mapping-space Euler characteristic and require equality.
        #[arg(long)]
        euler: bool,
        #[command(flatten)]
        knobs: Knobs,
    },
    /// Pointed homotopy classes of maps M -> |A|.
    Classes {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        knobs: Knobs,
    },
    /// List builtin spaces and coefficient complexes.
    Library,
    /// Run the acceptance checks.
    Selfcheck,
}

#[derive(Args, Clone)]
struct Pair {
    /// Presentation document, or builtin:NAME (e.g. builtin:torus).
    #[arg(long, value_name = "FILE")]
    presentation: String,
    /// Crossed complex document, or builtin:NAME (e.g. builtin:S3).
    #[arg(long, value_name = "FILE")]
    complex: String,
}

#[derive(Args, Clone, Copy)]
struct Knobs {
    /// Cap on enumerated morphisms, brute-force assignments and homotopy edges.
    #[arg(long, value_name = "N")]
    cap: Option<u64>,
    /// Worker threads (0 = all cores).
    #[arg(long, value_name = "N", default_value_t = 0)]
    threads: usize,
}

impl Knobs {
    /// `--cap`, then `XCOMPLEX_CAP`, then the per-operation default.
    fn cap(&self, default: u64) -> Result<u64, Failure> {
        if let Some(c) = self.cap {
            return Ok(c);
        }
        match std::env::var("XCOMPLEX_CAP") {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Failure::input(format!("XCOMPLEX_CAP is not a non-negative integer: {v:?}"))),
            Err(_) => Ok(default),
        }
    }

    fn config(&self) -> Result<SearchConfig, Failure> {
        Ok(SearchConfig::default().with_threads(self.threads).with_cap(self.cap(DEFAULT_ENUMERATION_CAP)?))
    }

    fn echo(&self) -> Value {
        json!({ "cap": self.cap, "threads": self.threads })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = RunReport::new(command_echo(&cli.command));
    let outcome = run(&cli.command, &mut report);
    report.finish(outcome, start.elapsed())
}

fn command_echo(c: &Command) -> Value {
    match c {
        Command::Validate { group, complex, presentation } => {
            json!({ "name": "validate", "group": group, "complex": complex, "presentation": presentation })
        }
        Command::Count { pair, enumerate, oracle, knobs } => json!({
            "name": "count", "presentation": pair.presentation, "complex": pair.complex,
            "enumerate": enumerate, "oracle": oracle, "knobs": knobs.echo()
        }),
        Command::Invariant { pair, euler, knobs } => json!({
            "name": "invariant", "presentation": pair.presentation, "complex": pair.complex,
            "euler": euler, "knobs": knobs.echo()
        }),
        Command::Classes { pair, knobs } => json!({
            "name": "classes", "presentation": pair.presentation, "complex": pair.complex, "knobs": knobs.echo()
        }),
        Command::Library => json!({ "name": "library" }),
        Command::Selfcheck => json!({ "name": "selfcheck" }),
    }
}

fn run(command: &Command, report: &mut RunReport) -> Result<(), Failure> {
    match command {
        Command::Validate { group, complex, presentation } => validate(group, complex, presentation, report),
        Command::Count { pair, enumerate, oracle, knobs } => {
            let (p, a) = load_pair(pair, report)?;
            let cfg = knobs.config()?;
            let count = count_homs_with(&p, &a, &cfg)?;
            let mut result = json!({ "count": count.to_string() });
            report.summary(format!("count = {count}"));
            if *enumerate {
                let homs = enumerate_homs_with(&p, &a, &cfg)?;
                result["morphisms"] = homs.iter().map(morphism_json).collect();
            }
            if *oracle {
                let cap = knobs.cap(DEFAULT_BRUTEFORCE_CAP)?;
                result["oracle"] = match count_homs_bruteforce(&p, &a, cap) {
                    Ok(brute) if brute == count => json!({ "count": brute.to_string(), "agrees": true }),
                    Ok(brute) => {
                        return Err(Failure::from(Error::CrossCheckFailed(format!(
                            "search counted {count}, brute force counted {brute}"
                        ))))
                    }
                    Err(Error::InstanceTooLarge { size, cap }) => {
                        report.summary(format!("oracle skipped: {size} assignments over cap {cap}"));
                        json!({ "skipped": format!("{size} assignments exceed cap {cap}") })
                    }
                    Err(e) => return Err(e.into()),
                };
            }
            report.result(result);
            Ok(())
        }
        Command::Invariant { pair, euler, knobs } => {
            let (p, a) = load_pair(pair, report)?;
            let cfg = knobs.config()?;
            let value = invariant_ia_with(&p, &a, &cfg)?;
            let count = count_homs_with(&p, &a, &cfg)?;
            let mut result = json!({
                "invariant": value.to_string(),
                "count": count.to_string(),
                "normalization": normalization_factor(&p, &a).to_string(),
            });
            report.summary(format!("I = {value}"));
            if *euler {
                let chi = euler_char_mapping_space(&p, &a, &cfg, true)?;
                if chi != value {
                    return Err(Error::CrossCheckFailed(format!("Euler characteristic {chi} differs from {value}")).into());
                }
                report.summary(format!("Euler characteristic = {chi}"));
                result["euler"] = json!(chi.to_string());
            }
            report.result(result);
            Ok(())
        }
        Command::Classes { pair, knobs } => {
            let (p, a) = load_pair(pair, report)?;
            let cfg = knobs.config()?;
            let classes = homotopy_classes_with(&p, &a, &cfg, knobs.cap(DEFAULT_EDGE_BUDGET)?)?;
            report.summary(format!("{} classes, sizes {:?}", classes.count(), classes.sizes));
            report.result(json!({
                "count": classes.count(),
                "sizes": classes.sizes,
                "representatives": classes.representatives.iter().map(morphism_json).collect::<Vec<_>>(),
            }));
            Ok(())
        }
        Command::Library => {
            let spaces: Vec<Value> = builders::library()
                .iter()
                .map(|p| {
                    let line = library_line(p);
                    report.summary(line.clone());
                    json!({ "name": p.name(), "cells": p.cell_counts(), "entry": line })
                })
                .collect();
            let complexes: Vec<Value> = suite::extended_suite()
                .iter()
                .map(|a| {
                    let orders: Vec<usize> = (1..=a.len()).map(|n| a.size_at(n).unwrap_or(1)).collect();
                    report.summary(format!("builtin:{} L={} orders {:?}", a.name().unwrap_or("?"), a.len(), orders));
                    json!({ "name": a.name(), "L": a.len(), "orders": orders })
                })
                .collect();
            report.result(json!({ "spaces": spaces, "complexes": complexes }));
            Ok(())
        }
        Command::Selfcheck => {
            let outcomes = selfcheck::run_all();
            let passed = outcomes.iter().all(|o| o.passed);
            for o in &outcomes {
                report.summary(o.to_string());
            }
            report.result(json!({
                "passed": passed,
                "criteria": outcomes
                    .iter()
                    .map(|o| json!({ "id": o.id, "name": o.name, "passed": o.passed, "detail": o.detail }))
                    .collect::<Vec<_>>(),
            }));
            if passed {
                Ok(())
            } else {
                Err(Failure::internal("one or more acceptance criteria failed"))
            }
        }
    }
}

/// `torus (1,2,1)`.
fn library_line(p: &CWPresentation) -> String {
    let cells: Vec<String> = p.cell_counts().iter().map(usize::to_string).collect();
    format!("{} ({})", p.name().unwrap_or("?"), cells.join(","))
}

fn morphism_json(m: &Morphism) -> Value {
    json!(m.colours)
}

fn report_json(r: &ValidationReport) -> Value {
    json!({
        "ok": r.ok(),
        "violations": r.violations.iter().map(|v| json!({
            "axiom": v.axiom, "degree": v.degree, "witness": v.witness, "message": v.to_string(),
        })).collect::<Vec<_>>(),
    })
}

fn load_pair(pair: &Pair, report: &mut RunReport) -> Result<(CWPresentation, FiniteCrossedComplex), Failure> {
    let pi = input::read(&pair.presentation)?;
    let ci = input::read(&pair.complex)?;
    report.input("presentation", &pi);
    report.input("complex", &ci);
    let p = input::presentation(&pi)?.map_err(Failure::validation)?;
    let vp = p.validate();
    if !vp.ok() {
        return Err(Failure::validation(Error::InvalidPresentation(vp)));
    }
    let a = input::complex(&ci)?.map_err(Failure::validation)?;
    let va = a.validate();
    if !va.ok() {
        return Err(Failure::validation(Error::InvalidComplex(va)));
    }
    Ok((p, a))
}

fn validate(
    group: &Option<String>,
    complex: &Option<String>,
    presentation: &Option<String>,
    report: &mut RunReport,
) -> Result<(), Failure> {
    if group.is_none() && complex.is_none() && presentation.is_none() {
        return Err(Failure::input("nothing to validate: pass --group, --complex or --presentation"));
    }
    let mut result = serde_json::Map::new();
    let mut all_ok = true;
    let mut record = |kind: &str, outcome: Result<ValidationReport, Error>, report: &mut RunReport| {
        let value = match outcome {
            Ok(r) => {
                all_ok &= r.ok();
                let verdict = if r.ok() { "ok".to_string() } else { r.to_string() };
                report.summary(format!("{kind}: {verdict}"));
                report_json(&r)
            }
            Err(e) => {
                all_ok = false;
                report.summary(format!("{kind}: {e}"));
                json!({ "ok": false, "error": e.to_string() })
            }
        };
        result.insert(kind.to_string(), value);
    };
    if let Some(path) = group {
        let i = input::read(path)?;
        report.input("group", &i);
        let outcome = input::group(&i)?.map(|_| ValidationReport::default());
        record("group", outcome, report);
    }
    if let Some(path) = complex {
        let i = input::read(path)?;
        report.input("complex", &i);
        let outcome = input::complex(&i)?.map(|c| c.validate());
        record("complex", outcome, report);
    }
    if let Some(path) = presentation {
        let i = input::read(path)?;
        report.input("presentation", &i);
        let outcome = input::presentation(&i)?.map(|p| p.validate());
        record("presentation", outcome, report);
    }
    report.result(Value::Object(result));
    if all_ok {
        Ok(())
    } else {
        Err(Failure::validation_quiet())
    }
}
