use std::path::PathBuf;

use clap::ValueEnum;
use nonrep::colour::{colour_cactus_even, colour_outerplane, colour_outerplane_single_block, colour_plane, Colouring};
use nonrep::gen::{generate, GenKind, GenSpec};
use nonrep::verify::verify_facial_nonrepetitive;
use nonrep::EmbeddedGraph;
use serde::Deserialize;
use serde_json::json;

use crate::report::{sha256_hex, RunReport, Timer};
use crate::{diag, export, read_file, write_or_return, CliError, CliResult, Outcome, EXIT_VERIFY};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Outerplane,
    Plane,
    Cactus,
    SingleBlock,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Outerplane => "outerplane",
            Mode::Plane => "plane",
            Mode::Cactus => "cactus",
            Mode::SingleBlock => "single-block",
        }
    }

    pub fn run(self, g: &EmbeddedGraph) -> nonrep::Result<Colouring> {
        match self {
            Mode::Outerplane => colour_outerplane(g),
            Mode::Plane => colour_plane(g),
            Mode::Cactus => colour_cactus_even(g),
            Mode::SingleBlock => colour_outerplane_single_block(g),
        }
    }
}

pub(crate) fn parse_graph(text: &str, what: &str) -> CliResult<EmbeddedGraph> {
    EmbeddedGraph::from_json_str(text).map_err(|e| match e {
        nonrep::Error::Json(j) => CliError::Parse { what: what.into(), message: j.to_string() },
        other => CliError::Parse { what: what.into(), message: other.to_string() },
    })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ColoursFile {
    Full(Colouring),
    Bare(Vec<usize>),
}

pub(crate) fn parse_colours(text: &str, what: &str) -> CliResult<Vec<usize>> {
    match serde_json::from_str::<ColoursFile>(text) {
        Ok(ColoursFile::Full(c)) => Ok(c.colours),
        Ok(ColoursFile::Bare(c)) => Ok(c),
        Err(e) => Err(CliError::Parse { what: what.into(), message: e.to_string() }),
    }
}

#[derive(Clone, Debug)]
pub struct ColourArgs {
    pub input: PathBuf,
    pub mode: Mode,
    pub output: Option<PathBuf>,
    pub report: Option<PathBuf>,
}

pub fn cmd_colour(args: &ColourArgs) -> CliResult<Outcome> {
    let mut timer = Timer::start();
    let text = read_file(&args.input)?;
    let g = parse_graph(&text, &args.input.display().to_string())?;
    timer.lap("parse");
    let colouring = args.mode.run(&g)?;
    timer.lap("colour");
    let report = RunReport {
        input_digest: sha256_hex(text.as_bytes()),
        mode: args.mode.name().into(),
        vertices: g.vertex_count(),
        colours_used: colouring.distinct_colours(),
        palette_max: colouring.palette_max,
        verified: colouring.verified,
        wall_ms: timer.wall_ms(),
        phases: timer.phases,
    };
    let report_json = serde_json::to_string(&report).expect("report serializes");
    match &args.report {
        Some(p) => {
            write_or_return(Some(p), report_json)?;
        }
        None => diag::emit("info", "report", serde_json::from_str(&report_json).unwrap()),
    }
    let code = if colouring.verified { 0 } else { EXIT_VERIFY };
    let out = write_or_return(args.output.as_deref(), serde_json::to_string(&colouring).unwrap())?;
    Ok(Outcome { code, stdout: out })
}

#[derive(Clone, Debug)]
pub struct VerifyArgs {
    pub input: PathBuf,
    pub colouring: PathBuf,
}

/// Exit 0 when every facial path is nonrepetitive, otherwise prints the
/// first counterexample and exits 4.
pub fn cmd_verify(args: &VerifyArgs) -> CliResult<Outcome> {
    let g = parse_graph(&read_file(&args.input)?, &args.input.display().to_string())?;
    let colours = parse_colours(&read_file(&args.colouring)?, &args.colouring.display().to_string())?;
    match verify_facial_nonrepetitive(&g, &colours)? {
        None => Ok(Outcome::ok(Some(json!({"ok": true}).to_string()))),
        Some(cx) => {
            Ok(Outcome { code: EXIT_VERIFY, stdout: Some(json!({"ok": false, "counterexample": cx}).to_string()) })
        }
    }
}

#[derive(Clone, Debug)]
pub struct GenArgs {
    pub kind: GenKind,
    pub n: usize,
    pub seed: u64,
    pub chord_prob: Option<f64>,
    pub attach_prob: Option<f64>,
    pub out: Option<PathBuf>,
}

pub fn cmd_gen(args: &GenArgs) -> CliResult<Outcome> {
    let mut spec = GenSpec::new(args.kind, args.n, args.seed);
    if let Some(p) = args.chord_prob {
        spec.chord_prob = p;
    }
    if let Some(p) = args.attach_prob {
        spec.attach_prob = p;
    }
    let g = generate(&spec)?;
    Ok(Outcome::ok(write_or_return(args.out.as_deref(), g.to_json_string())?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Svg,
    Dot,
}

#[derive(Clone, Debug)]
pub struct ExportArgs {
    pub input: PathBuf,
    pub colouring: Option<PathBuf>,
    pub format: ExportFormat,
    pub out: Option<PathBuf>,
}

pub fn cmd_export(args: &ExportArgs) -> CliResult<Outcome> {
    let g = parse_graph(&read_file(&args.input)?, &args.input.display().to_string())?;
    let colours = match &args.colouring {
        Some(p) => {
            let c = parse_colours(&read_file(p)?, &p.display().to_string())?;
            if c.len() != g.vertex_count() {
                return Err(nonrep::Error::PartialColouring { expected: g.vertex_count(), got: c.len() }.into());
            }
            Some(c)
        }
        None => None,
    };
    let text = match args.format {
        ExportFormat::Dot => export::to_dot(&g, colours.as_deref()),
        ExportFormat::Svg => export::to_svg(&g, colours.as_deref()),
    };
    Ok(Outcome::ok(write_or_return(args.out.as_deref(), text)?))
}
