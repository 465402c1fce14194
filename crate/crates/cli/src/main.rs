use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nonrep::gen::GenKind;
use nonrep_cli::bench::{check_exponent, run_bench, DEFAULT_SIZES};
use nonrep_cli::search::search;
use nonrep_cli::{
    cmd_colour, cmd_export, cmd_gen, cmd_verify, diag, CliError, CliResult, ColourArgs, ExportArgs, ExportFormat,
    GenArgs, Mode, Outcome, VerifyArgs,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "nonrep", version, about = "Facial nonrepetitive colourings of outerplane and plane graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn kind(s: &str) -> Result<GenKind, String> {
    s.parse().map_err(|e: nonrep::Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Colour a graph and verify the result.
    Colour {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "outerplane")]
        mode: Mode,
        /// Colouring JSON destination; stdout if absent.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Run report destination; written to stderr if absent.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check a colouring against every facial path.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        colouring: PathBuf,
    },
    /// Generate a random graph.
    Gen {
        #[arg(long, value_parser = kind)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        chord_prob: Option<f64>,
        #[arg(long)]
        attach_prob: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact facial nonrepetitive chromatic numbers over all small graphs.
    Search {
        #[arg(long, value_parser = kind)]
        kind: GenKind,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 5)]
        max_colours: usize,
    },
    /// Render a graph, optionally coloured, as SVG or DOT.
    Export {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        colouring: Option<PathBuf>,
        #[arg(long, conflicts_with = "dot")]
        svg: bool,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time a pipeline across corpus sizes and fit the scaling exponent.
    Bench {
        #[arg(long, value_parser = kind, default_value = "outerplane")]
        corpus: GenKind,
        #[arg(long, default_value_t = 3)]
        repeat: usize,
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Fail with exit 4 when the fitted exponent is larger.
        #[arg(long)]
        max_exponent: Option<f64>,
    },
}

fn run(cmd: Command) -> CliResult<Outcome> {
    match cmd {
        Command::Colour { input, mode, output, report } => cmd_colour(&ColourArgs { input, mode, output, report }),
        Command::Verify { input, colouring } => cmd_verify(&VerifyArgs { input, colouring }),
        Command::Gen { kind, n, seed, chord_prob, attach_prob, out } => {
            cmd_gen(&GenArgs { kind, n, seed, chord_prob, attach_prob, out })
        }
        Command::Search { kind, max_n, max_colours } => {
            let rows = search(kind, max_n, max_colours)?;
            let lines: Vec<String> = rows.iter().map(|r| serde_json::to_string(r).unwrap()).collect();
            Ok(Outcome::ok(Some(lines.join("\n"))))
        }
        Command::Export { input, colouring, svg, dot, out } => {
            let format = if dot && !svg { ExportFormat::Dot } else { ExportFormat::Svg };
            cmd_export(&ExportArgs { input, colouring, format, out })
        }
        Command::Bench { corpus, repeat, sizes, seed, max_exponent } => {
            let sizes = sizes.unwrap_or_else(|| DEFAULT_SIZES.to_vec());
            let report = run_bench(corpus, &sizes, repeat, seed)?;
            let text = serde_json::to_string(&report).unwrap();
            if let Some(limit) = max_exponent {
                if let Err(e) = check_exponent(&report, limit) {
                    println!("{text}");
                    return Err(e);
                }
            }
            Ok(Outcome::ok(Some(text)))
        }
    }
}

fn fail(e: &CliError) -> ExitCode {
    let code = e.exit_code();
    diag::emit("error", "failed", json!({"exit": code, "message": e.to_string()}));
    ExitCode::from(code as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if let Some(text) = out.stdout {
                println!("{text}");
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => fail(&e),
    }
}
