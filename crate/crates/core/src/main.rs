use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};

use centra::cdim::{cdim, subgroup_chain_length};
use centra::corpus::{builtin, corpus_with_caps};
use centra::harness::{to_csv, to_json, Verifier, SUITES};
use centra::layer::{components, generalized_fitting};
use centra::permcore::parse_group_with_caps;
use centra::simplerec::{lambda_invariant, RecognitionTable};
use centra::subgrp::{derived_length, fitting, socle, soluble_radical, upper_fitting};
use centra::{Caps, GroupHandle};

#[derive(Parser)]
#[command(name = "centra", version, about = "Centralizer dimension and radical structure of finite permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariants of a group file or `builtin:NAME`.
    Invariants { group: String },
    /// Run verification suites over the corpus.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Recognition table replacing the built-in one.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Show the corpus.
    Corpus {
        #[arg(long)]
        list: bool,
    },
    /// Evaluate a Steinitz-number expression.
    Steinitz { expr: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn load(source: &str, caps: Caps) -> centra::Result<GroupHandle> {
    match source.strip_prefix("builtin:") {
        Some(name) => Ok(builtin(name)?.recapped(caps)),
        None => {
            let text = std::fs::read_to_string(source)?;
            parse_group_with_caps(&text, caps)
        }
    }
}

fn show<T: std::fmt::Display>(label: &str, value: centra::Result<T>) {
    match value {
        Ok(v) => println!("{label} {v}"),
        Err(e) => println!("{label} unavailable ({e})"),
    }
}

fn invariants(g: &GroupHandle) {
    println!("order {}", g.order());
    println!("degree {}", g.degree());
    match derived_length(g) {
        Some(d) => {
            println!("soluble: yes");
            println!("derived length {d}");
        }
        None => {
            println!("soluble: no");
            println!("derived length: not soluble");
        }
    }
    match cdim(g) {
        Ok(r) => {
            println!("cdim_steps {}", r.value_steps);
            println!("cdim_terms {}", r.value_terms);
        }
        Err(e) => println!("cdim unavailable ({e})"),
    }
    show("l", subgroup_chain_length(g));
    show("lambda", lambda_invariant(g));
    show("fitting", fitting(g).map(|h| h.order()));
    show("upper_fitting_3", upper_fitting(g, 3).map(|h| h.order()));
    show("soluble_radical", soluble_radical(g).map(|h| h.order()));
    show("socle", socle(g).map(|h| h.order()));
    match components(g) {
        Ok(set) => {
            let orders: Vec<String> = set.components.iter().map(|q| q.order().to_string()).collect();
            println!("components {} [{}]", set.components.len(), orders.join(", "));
            println!("layer {}", set.layer.order());
        }
        Err(e) => println!("components unavailable ({e})"),
    }
    show("generalized_fitting", generalized_fitting(g).map(|h| h.order()));
}

/// Writes to stdout, treating a closed pipe as success.
fn emit(text: &str) -> centra::Result<()> {
    use std::io::Write;
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

fn run(cli: Cli) -> centra::Result<ExitCode> {
    let caps = Caps::from_env()?;
    match cli.command {
        Command::Invariants { group } => {
            invariants(&load(&group, caps)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, format, out, table } => {
            let table = match table {
                Some(path) => RecognitionTable::load(path)?,
                None => RecognitionTable::builtin().clone(),
            };
            let verifier = Verifier::with_table(caps, table)?;
            let results = match suite {
                Some(s) => vec![verifier.run(&s)?],
                None => verifier.run_all(),
            };
            let stamp = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
            let text = match format {
                Format::Json => to_json(&results, stamp),
                Format::Csv => to_csv(&results)?,
            };
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => emit(&text)?,
            }
            let failed = results.iter().any(|r| r.has_failures());
            Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Corpus { list } => {
            let corpus = corpus_with_caps(caps)?;
            if list {
                let lines: String =
                    corpus.iter().map(|e| format!("{}\t{}\t{}\n", e.name, e.annotations.order, e.builder)).collect();
                emit(&lines)?;
            } else {
                println!("{} groups (use --list to show them)", corpus.len());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Steinitz { expr } => {
            println!("{}", centra::steinitz::evaluate(&expr)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
