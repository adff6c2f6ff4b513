//! `mysticum` — build, verify, print and render the hexagrammum mysticum and
//! its tower of mutations, in exact rational arithmetic.
//!
//! Exit codes: 0 success, 1 usage error, 2 degenerate input,
//! 3 verification failure.

mod render;
mod report;

use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use mysticum_core::serial::from_doc;
use mysticum_core::{
    proof_witnesses, random_sextuple, verify_all, veronese_sequence, Error as CoreError,
    ExtendedScalar, Multimysticum, Sextuple,
};
use report::{ConfigEcho, ReportDocument};

const EXIT_USAGE: u8 = 1;
const EXIT_DEGENERATE: u8 = 2;
const EXIT_VERIFICATION: u8 = 3;

#[derive(Parser)]
#[command(name = "mysticum", about, version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the tower from six conic parameters and emit the full report.
    Build(BuildArgs),
    /// Build (or load) a tower, verify all 300 ranges and the proof
    /// witnesses; exit 3 on the first exact mismatch.
    Verify(VerifyArgs),
    /// Print the leading terms of the coordinate sequence.
    Sequence(SequenceArgs),
    /// Render selected elements as an SVG diagram.
    Render(RenderArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Six comma-separated conic parameters: rationals like 3/2 or `inf`.
    #[arg(long, value_name = "a,b,c,d,e,f", allow_hyphen_values = true)]
    params: Option<String>,
    /// Draw six distinct random rationals with small numerators and
    /// denominators instead of --params.
    #[arg(long)]
    random: bool,
    /// Seed for --random; identical seeds give identical parameters.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Number of mutation layers to build above the base.
    #[arg(long, default_value_t = 8)]
    height: usize,
    /// `json` or `text`.
    #[arg(long, default_value = "json")]
    format: String,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Load a previously built report instead of rebuilding.
    #[arg(long, value_name = "PATH", conflicts_with_all = ["params", "random"])]
    r#in: Option<String>,
    #[arg(long, default_value_t = 8)]
    height: usize,
    /// Deepest coordinate index to verify; defaults to the height.
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long, default_value = "json")]
    format: String,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct SequenceArgs {
    /// Number of terms to print.
    count: usize,
    #[arg(long, default_value = "text")]
    format: String,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Load a previously built report instead of rebuilding.
    #[arg(long, value_name = "PATH", conflicts_with_all = ["params", "random"])]
    r#in: Option<String>,
    #[arg(long, default_value_t = 2)]
    height: usize,
    /// Comma-separated selection: family keywords (`conic`, `sextuple`,
    /// `pascals`, `kirkmans@2`, `steiners`, ...), range selectors
    /// (`krange:3;05`) or exact label texts (`P 2;04`).
    #[arg(long, default_value = "conic,sextuple,pascals")]
    labels: String,
    /// Canvas size in pixels.
    #[arg(long, value_name = "WxH", default_value = "800x600")]
    svg_size: String,
    #[arg(long)]
    out: Option<String>,
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::DegenerateSextuple { .. }
            | CoreError::PascalViolation { .. }
            | CoreError::MutationDegeneracy { .. } => EXIT_DEGENERATE,
            _ => EXIT_USAGE,
        };
        fail(code, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are successful outputs, not usage errors.
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let outcome = match cli.command {
        Command::Build(args) => cmd_build(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sequence(args) => cmd_sequence(args),
        Command::Render(args) => cmd_render(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("mysticum: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_params(raw: &str) -> Result<[ExtendedScalar; 6], Failure> {
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != 6 {
        return Err(fail(
            EXIT_USAGE,
            format!("--params needs 6 values, got {}", parts.len()),
        ));
    }
    let mut values = Vec::with_capacity(6);
    for p in parts {
        values.push(
            p.parse::<ExtendedScalar>()
                .map_err(|e| fail(EXIT_USAGE, e.to_string()))?,
        );
    }
    Ok(values.try_into().expect("length checked"))
}

fn sextuple_from_input(input: &InputArgs) -> Result<(Sextuple, Option<u64>), Failure> {
    match (&input.params, input.random) {
        (Some(raw), false) => Ok((Sextuple::new(parse_params(raw)?)?, None)),
        (None, true) => {
            let mut rng = ChaCha8Rng::seed_from_u64(input.seed);
            Ok((random_sextuple(&mut rng, 20), Some(input.seed)))
        }
        (Some(_), true) => Err(fail(EXIT_USAGE, "--params conflicts with --random")),
        (None, false) => Err(fail(EXIT_USAGE, "one of --params or --random is required")),
    }
}

fn emit(doc: &ReportDocument, format: &str, out: Option<&str>) -> Result<(), Failure> {
    let body = match format {
        "json" => doc.to_json(),
        "text" => doc.to_text(),
        other => return Err(fail(EXIT_USAGE, format!("unknown format {other:?}"))),
    };
    write_out(&body, out)
}

fn write_out(body: &str, out: Option<&str>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, body).map_err(|e| fail(EXIT_USAGE, format!("cannot write {path}: {e}")))
        }
        None => {
            println!("{body}");
            Ok(())
        }
    }
}

fn cmd_build(args: BuildArgs) -> Result<(), Failure> {
    let start = Instant::now();
    let (sextuple, seed) = sextuple_from_input(&args.input)?;
    let tower = Multimysticum::build(&sextuple, args.height)?;
    let config = ConfigEcho {
        command: "build".into(),
        params: sextuple.params().iter().map(|t| t.to_string()).collect(),
        height: args.height,
        depth: None,
        seed,
    };
    let mut doc = ReportDocument::new(config, &tower);
    doc.timing_ms = Some(start.elapsed().as_millis());
    emit(&doc, &args.format, args.out.as_deref())
}

fn load_tower(path: &str) -> Result<(Multimysticum, ConfigEcho), Failure> {
    let body = fs::read_to_string(path)
        .map_err(|e| fail(EXIT_USAGE, format!("cannot read {path}: {e}")))?;
    let report: ReportDocument = serde_json::from_str(&body)
        .map_err(|e| fail(EXIT_USAGE, format!("cannot parse {path}: {e}")))?;
    let tower = from_doc(&report.tower_doc())?;
    Ok((tower, report.config))
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let start = Instant::now();
    let (tower, seed) = match &args.r#in {
        Some(path) => {
            let (tower, _config) = load_tower(path)?;
            (tower, None)
        }
        None => {
            let (sextuple, seed) = sextuple_from_input(&args.input)?;
            (Multimysticum::build(&sextuple, args.height)?, seed)
        }
    };
    let height = tower.built_height();
    let depth = args.depth.unwrap_or(height);
    let config = ConfigEcho {
        command: "verify".into(),
        params: tower
            .base()
            .sextuple()
            .params()
            .iter()
            .map(|t| t.to_string())
            .collect(),
        height,
        depth: Some(depth),
        seed,
    };

    let summary = verify_all(&tower, depth)?;
    let witnesses = proof_witnesses(&tower);
    let mut doc = ReportDocument::new(config, &tower);
    doc.attach_ranges(&summary);
    let witnesses_pass = match &witnesses {
        Ok(w) => {
            doc.attach_witnesses(w);
            w.all_pass()
        }
        Err(e) => {
            eprintln!("mysticum: witnesses unavailable: {e}");
            false
        }
    };
    let pass = summary.all_pass() && witnesses_pass;
    doc.verdict = Some(pass);
    doc.timing_ms = Some(start.elapsed().as_millis());
    emit(&doc, &args.format, args.out.as_deref())?;

    if !pass {
        let detail = summary
            .first_failure()
            .and_then(|r| {
                r.first_mismatch.as_ref().map(|mm| {
                    format!(
                        "{} mismatches at index {}: found {}, expected {}",
                        r.spec.text(),
                        mm.index,
                        mm.found
                            .as_ref()
                            .map(|v| v.to_string())
                            .unwrap_or_else(|| "<off carrier>".into()),
                        mm.expected
                    )
                })
            })
            .unwrap_or_else(|| "witness check failed".into());
        return Err(fail(EXIT_VERIFICATION, detail));
    }
    eprintln!(
        "mysticum: {}/{} ranges exact, witnesses pass",
        summary.passed, summary.total
    );
    Ok(())
}

fn cmd_sequence(args: SequenceArgs) -> Result<(), Failure> {
    let terms = veronese_sequence(args.count);
    let body = match args.format.as_str() {
        "text" => terms
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join("\n"),
        "json" => {
            serde_json::to_string_pretty(&terms.iter().map(|t| t.to_string()).collect::<Vec<_>>())
                .expect("strings serialize")
        }
        other => return Err(fail(EXIT_USAGE, format!("unknown format {other:?}"))),
    };
    write_out(&body, args.out.as_deref())
}

fn parse_size(raw: &str) -> Result<(u32, u32), Failure> {
    let bad = || fail(EXIT_USAGE, format!("--svg-size expects WxH, got {raw:?}"));
    let (w, h) = raw.split_once('x').ok_or_else(bad)?;
    let w = w.parse().map_err(|_| bad())?;
    let h = h.parse().map_err(|_| bad())?;
    if w == 0 || h == 0 {
        return Err(bad());
    }
    Ok((w, h))
}

fn cmd_render(args: RenderArgs) -> Result<(), Failure> {
    let tower = match &args.r#in {
        Some(path) => load_tower(path)?.0,
        None => {
            let (sextuple, _) = sextuple_from_input(&args.input)?;
            Multimysticum::build(&sextuple, args.height)?
        }
    };
    let (width, height) = parse_size(&args.svg_size)?;
    let selections: Result<Vec<_>, _> = args
        .labels
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(render::parse_selection)
        .collect();
    let selections = selections.map_err(|e| fail(EXIT_USAGE, e))?;
    if selections.is_empty() {
        return Err(fail(EXIT_USAGE, "empty label selection"));
    }
    let svg =
        render::render_svg(&tower, &selections, width, height).map_err(|e| fail(EXIT_USAGE, e))?;
    write_out(&svg, args.out.as_deref())
}
