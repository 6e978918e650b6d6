//! JSON front end: `spraylab <command> [input.json]`.
//!
//! Every report is `{"manifest": …, "result": …}` on stdout. Verified
//! negative answers exit with 1 and carry `{"manifest": …, "error": …}`;
//! malformed input exits with 2 and a message on stderr.

mod commands;
mod manifest;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub(crate) use commands::witness_report;
pub use manifest::{sha256_hex, InputHash, RunManifest};

use crate::error::Error;

pub const SEED_ENV: &str = "SPRAYLAB_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "spraylab",
    version,
    about = "Exact sphere, duality and covering computations"
)]
pub struct Cli {
    /// Seed for synthetic inputs; SPRAYLAB_SEED takes precedence.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Record wall-clock time in the manifest.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// General-position and well-placed checks.
    GpCheck(GpCheckArgs),
    #[command(subcommand)]
    Spheres(SpheresCmd),
    Duality(DualityArgs),
    #[command(subcommand)]
    Cover(CoverCmd),
    /// Regenerate the worked examples and compare with the golden files.
    Fixtures(FixturesArgs),
}

#[derive(Debug, Clone, Args)]
pub struct InputArg {
    /// JSON input file, `-` for stdin.
    #[arg(default_value = "-")]
    pub input: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GpMode {
    Points,
    Vectors,
    WellPlaced,
}

#[derive(Debug, Args)]
pub struct GpCheckArgs {
    #[command(flatten)]
    pub input: InputArg,
    #[arg(long)]
    pub ambient_dim: Option<usize>,
    #[arg(long, value_enum, default_value_t = GpMode::Points)]
    pub mode: GpMode,
}

#[derive(Debug, Subcommand)]
pub enum SpheresCmd {
    /// Two spheres, or a sphere and a hyperplane.
    Intersect(InputArg),
    Chain(InputArg),
    Enclose(InputArg),
    Witness(InputArg),
    Mesh(InputArg),
}

#[derive(Debug, Args)]
pub struct DualityArgs {
    /// Center configuration JSON.
    #[arg(long)]
    pub config: Option<String>,
    #[command(subcommand)]
    pub op: DualityCmd,
}

#[derive(Debug, Subcommand)]
pub enum DualityCmd {
    Phi(InputArg),
    PhiInv(InputArg),
    Uspace(InputArg),
    Ivan(InputArg),
    /// Directions and dual coefficients for every extra center.
    Dualize,
    BasisChange(InputArg),
}

#[derive(Debug, Subcommand)]
pub enum CoverCmd {
    Drizzle(DrizzleArgs),
    Pullback(PullbackArgs),
    Verify(InputArg),
    Zset(InputArg),
    Escape(InputArg),
    Project(ProjectArgs),
}

#[derive(Debug, Args)]
pub struct DrizzleArgs {
    /// Input with `points` (and optionally explicit `directions`).
    pub input: Option<String>,
    /// Generate this many random rational points instead.
    #[arg(long, conflicts_with = "input")]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 3)]
    pub dim: usize,
}

#[derive(Debug, Args)]
pub struct PullbackArgs {
    #[arg(long)]
    pub config: String,
    #[command(flatten)]
    pub input: InputArg,
}

#[derive(Debug, Args)]
pub struct ProjectArgs {
    #[command(flatten)]
    pub input: InputArg,
    /// Merge parts whose projected centers coincide.
    #[arg(long)]
    pub glue: bool,
}

#[derive(Debug, Args)]
pub struct FixturesArgs {
    /// Overwrite the golden files instead of comparing.
    #[arg(long)]
    pub update: bool,
    #[arg(long)]
    pub dir: Option<PathBuf>,
}

/// Exit code, stdout and stderr of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Raw bytes of a named input (`-` is stdin).
pub type Reader<'a> = &'a dyn Fn(&str) -> std::io::Result<Vec<u8>>;

pub(crate) struct Ctx<'a> {
    read: Reader<'a>,
    pub manifest: RunManifest,
    pub seed: u64,
}

impl Ctx<'_> {
    pub fn load(&mut self, name: &str) -> crate::Result<Value> {
        let bytes = (self.read)(name).map_err(|e| Error::Parse(format!("{name}: {e}")))?;
        self.manifest.record(name, &bytes);
        serde_json::from_slice(&bytes).map_err(|e| Error::Parse(format!("{name}: {e}")))
    }
}

/// Outcome of a command body: the result and whether it is a negative
/// answer (exit code 1).
pub(crate) type Outcome = crate::Result<(Value, bool)>;

pub fn command_name(c: &Command) -> &'static str {
    match c {
        Command::GpCheck(_) => "gp-check",
        Command::Spheres(s) => match s {
            SpheresCmd::Intersect(_) => "spheres intersect",
            SpheresCmd::Chain(_) => "spheres chain",
            SpheresCmd::Enclose(_) => "spheres enclose",
            SpheresCmd::Witness(_) => "spheres witness",
            SpheresCmd::Mesh(_) => "spheres mesh",
        },
        Command::Duality(d) => match d.op {
            DualityCmd::Phi(_) => "duality phi",
            DualityCmd::PhiInv(_) => "duality phi-inv",
            DualityCmd::Uspace(_) => "duality uspace",
            DualityCmd::Ivan(_) => "duality ivan",
            DualityCmd::Dualize => "duality dualize",
            DualityCmd::BasisChange(_) => "duality basis-change",
        },
        Command::Cover(c) => match c {
            CoverCmd::Drizzle(_) => "cover drizzle",
            CoverCmd::Pullback(_) => "cover pullback",
            CoverCmd::Verify(_) => "cover verify",
            CoverCmd::Zset(_) => "cover zset",
            CoverCmd::Escape(_) => "cover escape",
            CoverCmd::Project(_) => "cover project",
        },
        Command::Fixtures(_) => "fixtures",
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Runs a parsed command with the given seed and input source.
pub fn execute(cli: &Cli, seed: u64, read: Reader) -> Execution {
    let started = Instant::now();
    let mut ctx = Ctx {
        read,
        manifest: RunManifest::new(command_name(&cli.command), seed),
        seed,
    };
    let outcome = commands::dispatch(&cli.command, &mut ctx);
    if cli.timing {
        ctx.manifest.elapsed_ms = Some(started.elapsed().as_millis() as u64);
    }
    let manifest = serde_json::to_value(&ctx.manifest).expect("manifest serializes");
    match outcome {
        Ok((result, negative)) => Execution {
            code: i32::from(negative),
            stdout: pretty(&json!({ "manifest": manifest, "result": result })),
            stderr: String::new(),
        },
        Err(e) if e.is_negative_result() => Execution {
            code: 1,
            stdout: pretty(&json!({
                "manifest": manifest,
                "error": { "kind": e.kind(), "message": e.to_string() },
            })),
            stderr: String::new(),
        },
        Err(e) => Execution {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Parses, runs against the file system and stdin, prints; returns the exit
/// code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let seed = match std::env::var(SEED_ENV) {
        Ok(s) => match s.trim().parse::<u64>() {
            Ok(v) => v,
            Err(_) => {
                eprintln!("error: {SEED_ENV} must be an unsigned integer");
                return 2;
            }
        },
        Err(_) => cli.seed,
    };
    let read = |name: &str| -> std::io::Result<Vec<u8>> {
        if name == "-" {
            let mut buf = Vec::new();
            std::io::Read::read_to_end(&mut std::io::stdin(), &mut buf)?;
            Ok(buf)
        } else {
            std::fs::read(name)
        }
    };
    let out = execute(&cli, seed, &read);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

/// Runs an argument list against in-memory files.
pub fn run_in_memory(args: &[&str], files: &[(&str, &str)]) -> Execution {
    let cli = match Cli::try_parse_from(std::iter::once("spraylab").chain(args.iter().copied())) {
        Ok(c) => c,
        Err(e) => {
            return Execution {
                code: e.exit_code(),
                stdout: String::new(),
                stderr: e.to_string(),
            }
        }
    };
    let read = |name: &str| -> std::io::Result<Vec<u8>> {
        files
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, body)| body.as_bytes().to_vec())
            .ok_or_else(|| std::io::Error::new(std::io::ErrorKind::NotFound, name.to_string()))
    };
    let seed = cli.seed;
    execute(&cli, seed, &read)
}
