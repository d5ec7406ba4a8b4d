use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use parkstat::cli::{self, Command, Format, Params, RunConfig};

/// Enumerate parking functions and their relatives and check identities about them.
#[derive(Parser)]
#[command(name = "parkstat", version)]
struct Args {
    #[command(subcommand)]
    command: Cmd,
    /// Output format: text, csv, json or bfile.
    #[arg(long, global = true)]
    format: Option<String>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true, env = "PARKSTAT_THREADS")]
    threads: Option<usize>,
    /// Lift the caps on n and N.
    #[arg(long, global = true)]
    allow_large: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// List a family in lexicographic order.
    Enumerate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
    },
    /// Print a generating polynomial.
    Poly {
        /// pf_q, upf_q, a_inv_asc, pf_sym or upf_sym_t.
        #[arg(long)]
        which: String,
        #[arg(long)]
        n: usize,
    },
    /// Run a verification suite and emit a JSON report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Check a single size instead of the range.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        /// Series truncation order.
        #[arg(long = "N", default_value_t = 6)]
        order: usize,
        /// Raise the default range to n = 6.
        #[arg(long)]
        extended: bool,
        /// Bump the input of this degree to force a mismatch.
        #[arg(long)]
        corrupt: Option<usize>,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
    /// Emit a sequence as an OEIS-style b-file.
    Bfile {
        #[arg(long)]
        sequence: String,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Local b-file to compare against.
        #[arg(long)]
        compare: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    match dispatch(args) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn dispatch(args: Args) -> Result<u8, cli::CliError> {
    let (command, default_format) = match args.command {
        Cmd::Enumerate { family, n } => (Command::Enumerate { family, n }, Format::Text),
        Cmd::Poly { which, n } => (Command::Poly { which, n }, Format::Text),
        Cmd::Verify { suite, n, max_n, order, extended, corrupt, seed } => {
            let max_n = max_n.unwrap_or(if extended { 6 } else { 5 });
            (Command::Verify { suite, params: Params { max_n, n, order, corrupt, seed } }, Format::Json)
        }
        Cmd::Bfile { sequence, max_n, compare } => (Command::Bfile { sequence, max_n, compare }, Format::Bfile),
    };
    let format = args.format.as_deref().map(str::parse).transpose()?.unwrap_or(default_format);
    let cfg = RunConfig { command, format, output: args.output, threads: args.threads, allow_large: args.allow_large };
    let outcome = cli::run(&cfg)?;
    let io = |e: std::io::Error| cli::CliError::Io(e.to_string());
    match &cfg.output {
        Some(path) => std::fs::write(path, &outcome.body).map_err(io)?,
        None => std::io::stdout().write_all(outcome.body.as_bytes()).map_err(io)?,
    }
    if let Some(note) = &outcome.note {
        eprintln!("{note}");
    }
    Ok(outcome.code as u8)
}
