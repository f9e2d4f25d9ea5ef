use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use stong_core::ast::{SpaceAst, Verification};
use stong_core::cobordism::NullReport;
use stong_core::suites::{Suite, DEFAULT_SEED};
use stong_core::{eta, FixedPointModel};

/// Exact Stong-invariant calculator for (Z2)^q-spaces with finite stationary sets.
#[derive(Debug, Parser)]
#[command(name = "stong", version)]
struct Cli {
    /// Emit JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
    /// Cross-check the model against the first-principles oracles.
    #[arg(long, global = true)]
    verify: bool,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Stong invariant of a space (`-` reads stdin).
    Eta { file: PathBuf },
    /// Decide null-cobordance and print a pairing witness.
    Null { file: PathBuf },
    /// Run a criterion suite and print a JSON report.
    Check { suite: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, code)) => {
            let mut stdout = io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<(String, u8)> {
    match &cli.command {
        Command::Eta { file } => {
            let (ast, model, verification) = load(file, cli.verify)?;
            let value = eta(&model);
            let out = if cli.json {
                let mut doc = json!({
                    "eta": value.to_string(),
                    "polynomial": value,
                    "points": model.len(),
                    "dimension": model.dimension(),
                    "space": ast,
                });
                attach(&mut doc, verification);
                to_json(&doc)
            } else {
                let mut rows = vec![
                    ("eta", value.to_string()),
                    ("points", model.len().to_string()),
                    ("dimension", model.dimension().to_string()),
                ];
                rows.extend(verification_rows(&verification));
                aligned(&rows)
            };
            Ok((out, 0))
        }
        Command::Null { file } => {
            let (ast, model, verification) = load(file, cli.verify)?;
            let report = NullReport::new(&model);
            if !report.checks.values().all(|&ok| ok) {
                bail!("internal witness check failed: {:?}", report.checks);
            }
            let code = if report.null { 0 } else { 2 };
            let out = if cli.json {
                let mut doc = serde_json::to_value(&report)?;
                doc["space"] = serde_json::to_value(&ast)?;
                attach(&mut doc, verification);
                to_json(&doc)
            } else {
                null_text(&report, &verification)
            };
            Ok((out, code))
        }
        Command::Check { suite } => {
            let suite: Suite = suite.parse()?;
            let report = suite.run(cli.seed)?;
            let code = if report.passed { 0 } else { 2 };
            Ok((to_json(&serde_json::to_value(&report)?), code))
        }
    }
}

fn load(
    file: &PathBuf,
    verify: bool,
) -> anyhow::Result<(SpaceAst, FixedPointModel, Option<Verification>)> {
    let text = if file.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).context("reading stdin")?;
        buf
    } else {
        std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?
    };
    let ast = SpaceAst::from_json(&text)?;
    let model = ast.build()?.into_model();
    let verification = if verify {
        let v = ast.verify()?;
        if !v.passed() {
            let failed: Vec<_> = v.checks.iter().filter(|(_, ok)| !**ok).map(|(k, _)| k.as_str()).collect();
            bail!("oracle cross-check failed: {}", failed.join(", "));
        }
        Some(v)
    } else {
        None
    };
    Ok((ast, model, verification))
}

fn attach(doc: &mut Value, verification: Option<Verification>) {
    if let Some(v) = verification {
        doc["verification"] = serde_json::to_value(v).expect("verification serializes");
    }
}

fn to_json(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("json value serializes");
    s.push('\n');
    s
}

fn verification_rows(v: &Option<Verification>) -> Vec<(&'static str, String)> {
    let Some(v) = v else { return Vec::new() };
    let mut rows = vec![("verified", format!("{} checks passed", v.checks.len()))];
    if !v.skipped.is_empty() {
        rows.push(("skipped", v.skipped.join("; ")));
    }
    rows
}

fn aligned(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0) + 1;
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{:<width$} {v}\n", format!("{k}:")));
    }
    out
}

fn null_text(report: &NullReport, verification: &Option<Verification>) -> String {
    let mut out = String::from(if report.null { "null\n" } else { "non-null\n" });
    let mut rows = vec![
        ("eta", report.eta.clone()),
        ("points", report.points.to_string()),
        ("dimension", report.dimension.to_string()),
        ("pairs", report.witness.pairs.len().to_string()),
        ("residual", report.witness.residual.len().to_string()),
    ];
    rows.extend(verification_rows(verification));
    out.push_str(&aligned(&rows));
    let width = report.witness.pairs.iter().map(|(a, _)| a.len()).max().unwrap_or(0);
    for (a, b) in &report.witness.pairs {
        out.push_str(&format!("  {a:<width$} <-> {b}\n"));
    }
    for r in &report.witness.residual {
        out.push_str(&format!("  unpaired {r}\n"));
    }
    out
}
