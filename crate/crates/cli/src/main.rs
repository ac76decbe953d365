//! Command-line front end for the conjugacy-limit classifier.
//!
//! Every command prints one JSON object with sorted keys on standard output
//! and diagnostics on standard error. Exit status is 0 on success, 1 on bad
//! input and 2 when an internal invariant fails.

mod commands;
mod error;

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;

use commands::Output;
use error::CliError;

#[derive(Parser)]
#[command(
    name = "cartan-limits",
    version,
    about = "Conjugacy limits of the diagonal group of SL(3, R)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the triangle of columns of `{"P": [[..], [..], [..]]}`.
    Classify {
        /// JSON object, or `-` for standard input.
        input: Option<String>,
        /// Classify one JSON object per line of FILE, in parallel.
        #[arg(long, value_name = "FILE", conflicts_with = "input")]
        batch: Option<String>,
    },
    /// Identify the abelian subalgebra `{"basis": [X, Y]}` of sl(3).
    Subalgebra { input: String },
    /// Shortest path between two classes in the limit digraph.
    Digraph {
        from: String,
        to: String,
        /// Require at least one edge.
        #[arg(long)]
        proper: bool,
    },
    /// Limit of the diagonal group of SL(2) fixing `[1:0]` and `[1:delta]`.
    Sl2 {
        #[arg(allow_hyphen_values = true)]
        delta: String,
    },
    /// Follow the conjugated diagonal algebra numerically along `t = 1/n`.
    Sequence {
        input: String,
        #[arg(long, value_delimiter = ',', default_value = "100,10000,1000000")]
        schedule: Vec<u64>,
    },
    /// Characteristic configuration of a class, or a configuration by name.
    Config { class: String },
    /// Random instances of every table row through both classifiers.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instances per row.
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

fn read_input(arg: Option<&str>) -> Result<String, CliError> {
    match arg {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|source| CliError::Io {
                    path: "<stdin>".into(),
                    source,
                })?;
            Ok(s)
        }
        Some(text) => Ok(text.to_string()),
    }
}

fn print(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("values serialize")
    );
}

fn fail(e: &CliError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code())
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Classify {
            batch: Some(path), ..
        } => {
            let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            let (values, error) = commands::classify_batch(&text);
            for v in &values {
                println!("{}", serde_json::to_string(v).expect("values serialize"));
            }
            Ok(Output {
                json: Value::Null,
                error,
            })
        }
        Command::Classify { input, .. } => commands::classify(&read_input(input.as_deref())?),
        Command::Subalgebra { input } => commands::subalgebra(&read_input(Some(&input))?),
        Command::Digraph { from, to, proper } => commands::digraph(&from, &to, proper),
        Command::Sl2 { delta } => commands::sl2(&delta),
        Command::Sequence { input, schedule } => {
            commands::sequence(&read_input(Some(&input))?, &schedule)
        }
        Command::Config { class } => commands::config(&class),
        Command::Selftest { seed, count } => commands::selftest(seed, count),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            if !out.json.is_null() {
                print(&out.json);
            }
            match out.error {
                Some(e) => fail(&e),
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => fail(&e),
    }
}
