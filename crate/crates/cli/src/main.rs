//! `k3sym`: verification and census runs over the `k3sym` library.

mod commands;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use k3sym::census::Report;
use k3sym::index::RochlinTable;
use k3sym::kummer::{Generator, PairingTable, GENERATORS};
use k3sym::sgnperm::H_ORDER;

use commands::Config;

#[derive(Parser)]
#[command(name = "k3sym", version, about = "Exact checks for prime-order symmetries of K3-type manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Decimal places in rendered values.
    #[arg(long, default_value_t = 5, global = true, value_parser = clap::value_parser!(u32).range(1..=60))]
    digits: u32,
    /// Element budget for exhaustive searches over H.
    #[arg(long, default_value_t = H_ORDER, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Record wall-clock timings (makes output nondeterministic).
    #[arg(long, global = true)]
    timings: bool,
    /// Overrides for the generator pairing table, one `i j value` per line.
    #[arg(long, global = true)]
    pairing_table: Option<PathBuf>,
    /// Rochlin invariants as `p,q,rochlin,source` CSV.
    #[arg(long, global = true)]
    rochlin_table: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check one lemma or theorem.
    Verify {
        #[arg(value_enum)]
        target: Target,
    },
    /// Run a census.
    Census {
        #[arg(value_enum)]
        target: CensusTarget,
    },
    /// Signature defects and the δ/ν contribution tables.
    DefectTable,
    /// All checks except the exhaustive scans of H.
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    #[value(name = "lemma-4.2")]
    Lemma42,
    #[value(name = "lemma-4.5")]
    Lemma45,
    #[value(name = "lemma-5.1")]
    Lemma51,
    #[value(name = "lemma-5.2")]
    Lemma52,
    #[value(name = "lemma-5.3")]
    Lemma53,
    #[value(name = "lemma-6.3")]
    Lemma63,
    #[value(name = "lemma-6.4")]
    Lemma64,
    #[value(name = "lemma-6.5")]
    Lemma65,
    #[value(name = "remark-4.7")]
    Remark47,
    #[value(name = "theorem-1.7")]
    Theorem17,
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusTarget {
    P5,
    P7,
    Q8,
    Involution,
}

fn parse_pairing(text: &str) -> Result<PairingTable, String> {
    let mut table = PairingTable::standard();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [i, j, v] = fields[..] else {
            return Err(format!("line {}: expected `i j value`", n + 1));
        };
        let idx = |s: &str| match s.parse::<usize>() {
            Ok(k) if k < GENERATORS => Ok(Generator::from_index(k)),
            _ => Err(format!("line {}: generator index {s:?} not in 0..{GENERATORS}", n + 1)),
        };
        let value = v.parse::<i64>().map_err(|_| format!("line {}: bad value {v:?}", n + 1))?;
        table = table.with_entry(idx(i)?, idx(j)?, value);
    }
    Ok(table)
}

fn render_text(r: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "command: {}", r.command);
    if !r.inputs.is_empty() {
        let _ = writeln!(s, "inputs:");
        for (k, v) in &r.inputs {
            let _ = writeln!(s, "  {k} = {v}");
        }
    }
    for (name, records) in [("candidates", &r.candidates), ("filters", &r.filters)] {
        if records.is_empty() {
            continue;
        }
        let _ = writeln!(s, "{name}:");
        for rec in records {
            let vals: Vec<String> = rec.values.iter().map(|(k, v)| format!("{k}: {v}")).collect();
            let _ = writeln!(s, "  [{}] {}", rec.id, vals.join("; "));
        }
    }
    if !r.survivors.is_empty() {
        let _ = writeln!(s, "survivors:");
        for v in &r.survivors {
            let _ = writeln!(s, "  {v}");
        }
    }
    let _ = writeln!(s, "checks:");
    for c in &r.checks {
        let _ = writeln!(s, "  {} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    if !r.timings.is_empty() {
        let _ = writeln!(s, "timings:");
        for (k, v) in &r.timings {
            let _ = writeln!(s, "  {k} = {v}");
        }
    }
    let passed = r.checks.iter().filter(|c| c.passed).count();
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    let _ = writeln!(s, "result: {verdict} ({passed}/{} checks)", r.checks.len());
    s
}

fn run(cli: &Cli) -> Result<Report, (u8, String)> {
    let usage = |e: String| (2u8, e);
    let pairing = match &cli.pairing_table {
        Some(path) => parse_pairing(&std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?)
            .map_err(usage)?,
        None => PairingTable::standard(),
    };
    let table = match &cli.rochlin_table {
        Some(path) => RochlinTable::parse(&std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?)
            .map_err(usage)?,
        None => RochlinTable::bundled(),
    };
    let cfg = Config { digits: cli.digits, budget: cli.budget, pairing };
    let start = Instant::now();
    let out = match cli.command {
        Command::Verify { target } => match target {
            Target::Lemma42 => commands::lemma_4_2(&cfg),
            Target::Lemma45 => commands::lemma_4_5(&cfg),
            Target::Lemma51 => commands::lemma_5_1(&cfg),
            Target::Lemma52 => commands::lemma_5_2(&cfg),
            Target::Lemma53 => commands::lemma_5_3(&cfg),
            Target::Lemma63 => commands::lemma_6_3(&cfg),
            Target::Lemma64 => commands::lemma_6_4(&cfg),
            Target::Lemma65 => commands::lemma_6_5(&cfg),
            Target::Remark47 => commands::remark_4_7(&cfg),
            Target::Theorem17 => commands::theorem_1_7(&cfg),
        },
        Command::Census { target } => match target {
            CensusTarget::P5 => commands::census_p5(&cfg, &table),
            CensusTarget::P7 => commands::census_p7(&cfg, &table),
            CensusTarget::Q8 => commands::census_q8(&cfg),
            CensusTarget::Involution => commands::census_involution(&cfg),
        },
        Command::DefectTable => commands::defect_table(&cfg),
        Command::Selftest => commands::selftest(&cfg, &table),
    };
    let mut report = out.map_err(|e| (1, e))?;
    if cli.timings {
        report.timings.insert("total_ms".into(), start.elapsed().as_millis().to_string());
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(code);
        }
    };
    let body = match cli.format {
        Format::Text => render_text(&report),
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &body).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match report.first_failure() {
        None => ExitCode::SUCCESS,
        Some(c) => {
            eprintln!("first failure: {}: {}", c.name, c.detail);
            ExitCode::from(1)
        }
    }
}
