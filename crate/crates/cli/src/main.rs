use std::path::PathBuf;
use std::process::ExitCode;

use cgframe_cli::{eval, run_suite, CliError, EvalOptions, DEFAULT_MAX_PRECISION};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "cgframe", version, about = "Certified evaluation of frames and g-frames")]
struct Cli {
    /// Largest precision any task may request.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_PRECISION)]
    max_precision: u32,
    /// Worker threads for concurrent tasks.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the tasks of a spec file.
    Eval {
        file: PathBuf,
        /// Run only this task (1-based).
        #[arg(long)]
        task: Option<usize>,
        /// Precision in bits for every task, overriding the file.
        #[arg(long)]
        precision: Option<u32>,
    },
    /// Run an acceptance battery: invariants, roundtrips, reconstruction or gallery.
    Suite { name: String },
}

fn fail(e: &CliError) -> ExitCode {
    eprintln!("error: {}: {e}", e.label());
    ExitCode::from(e.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Eval { file, task, precision } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => return fail(&CliError::Usage(format!("cannot read {}: {e}", file.display()))),
            };
            let opts = EvalOptions {
                task,
                precision,
                max_precision: cli.max_precision,
                threads: cli.threads,
            };
            match eval(&text, &opts) {
                Ok(report) => {
                    print!("{}", report.text);
                    ExitCode::from(report.exit_code() as u8)
                }
                Err(e) => fail(&e),
            }
        }
        Command::Suite { name } => match run_suite(&name, cli.threads) {
            Ok((text, ok)) => {
                print!("{text}");
                ExitCode::from(if ok { 0 } else { 1 })
            }
            Err(e) => fail(&e),
        },
    }
}
