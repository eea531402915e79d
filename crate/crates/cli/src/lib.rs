//! Command-line front-end: build, verify and tabulate cosets, as text tables
//! or JSON.

pub mod commands;
pub mod input;
pub mod text;

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

pub const TOOL: &str = "cosets";

#[derive(Parser, Debug)]
#[command(name = TOOL, version, about = "Homogeneous KT, HKT and QKT cosets from Dynkin diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Simple types with their node numbering, highest root and bonds.
    Catalog(Flags),
    /// G/K from a colouring, with its complex structure and KT checks.
    DecomposeKt(Flags),
    /// Level decomposition, hyper-complex triple and HKT checks.
    DecomposeHkt(Flags),
    /// Algebra-layer scans plus the KT (with --colour) or HKT/QKT checks.
    Verify(Flags),
    /// Enumerated hyper-complex cosets against the closed forms.
    Table2(Flags),
    /// Hyper-complex cosets of a given dimension and their U(2) quotients.
    Table3(Flags),
    /// The U(2) quotient of a hyper-complex coset.
    Qkt(Flags),
}

#[derive(Args, Debug, Clone, Default)]
pub struct Flags {
    /// Simple types and u(1) factors joined by '+', e.g. A4, A1+A1+u1^2.
    #[arg(long)]
    pub algebra: Option<String>,
    /// One-based coloured nodes, comma separated; '/' between simple ideals.
    #[arg(long, visible_alias = "color", allow_hyphen_values = true)]
    pub colour: Option<String>,
    /// decompose-kt: Cartan vectors (',' within, ';' between) taken into k.
    /// Otherwise: number of U directions taken into k.
    #[arg(long, allow_hyphen_values = true)]
    pub k_u1: Option<String>,
    /// Appended u(1) factors.
    #[arg(long)]
    pub extra_u1: Option<usize>,
    /// Stop the level decomposition after this many levels.
    #[arg(long)]
    pub stop_level: Option<usize>,
    /// Weights over the simple roots fixing the positive roots of m.
    #[arg(long, allow_hyphen_values = true)]
    pub seed_lambda: Option<String>,
    #[arg(long)]
    pub json: bool,
    /// Rank cap for enumerations (default 8).
    #[arg(long)]
    pub max_rank: Option<usize>,
    /// table3: dimension of the hyper-complex cosets (default 8).
    #[arg(long)]
    pub dim: Option<usize>,
}

/// JSON output: the data with the tool version and the arguments used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub arguments: Vec<String>,
    pub passed: bool,
    pub data: T,
}

fn reject(command: &str, f: &Flags, allowed: &[&str]) -> Result<(), String> {
    let given = [
        ("algebra", f.algebra.is_some()),
        ("colour", f.colour.is_some()),
        ("k-u1", f.k_u1.is_some()),
        ("extra-u1", f.extra_u1.is_some()),
        ("stop-level", f.stop_level.is_some()),
        ("seed-lambda", f.seed_lambda.is_some()),
        ("max-rank", f.max_rank.is_some()),
        ("dim", f.dim.is_some()),
    ];
    match given.iter().find(|(name, set)| *set && !allowed.contains(name)) {
        Some((name, _)) => Err(format!("--{name} does not apply to {command}")),
        None => Ok(()),
    }
}

fn emit<T: Serialize>(
    out: &mut dyn Write,
    command: &str,
    args: &[String],
    json: bool,
    r: Result<commands::Outcome<T>, String>,
) -> Result<bool, String> {
    let o = r?;
    let res = if json {
        let env = Envelope {
            tool: TOOL.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            arguments: args.to_vec(),
            passed: o.passed,
            data: o.data,
        };
        let s = serde_json::to_string_pretty(&env).map_err(|e| e.to_string())?;
        writeln!(out, "{s}")
    } else {
        write!(out, "{}", o.text)
    };
    res.map_err(|e| format!("write failed: {e}"))?;
    Ok(o.passed)
}

fn dispatch(cli: Cli, args: &[String], out: &mut dyn Write) -> Result<bool, String> {
    use commands::*;
    let hkt_flags = ["algebra", "k-u1", "extra-u1", "stop-level"];
    match cli.command {
        Command::Catalog(f) => {
            reject("catalog", &f, &["algebra", "max-rank"])?;
            emit(out, "catalog", args, f.json, catalog(&f))
        }
        Command::DecomposeKt(f) => {
            reject("decompose-kt", &f, &["algebra", "colour", "k-u1", "extra-u1", "seed-lambda"])?;
            emit(out, "decompose-kt", args, f.json, decompose_kt(&f))
        }
        Command::DecomposeHkt(f) => {
            reject("decompose-hkt", &f, &hkt_flags)?;
            emit(out, "decompose-hkt", args, f.json, decompose_hkt(&f))
        }
        Command::Verify(f) => {
            if f.colour.is_some() {
                reject("verify", &f, &["algebra", "colour", "k-u1", "extra-u1", "seed-lambda"])?;
            } else {
                reject("verify", &f, &hkt_flags)?;
            }
            emit(out, "verify", args, f.json, verify(&f))
        }
        Command::Table2(f) => {
            reject("table2", &f, &["algebra", "max-rank"])?;
            emit(out, "table2", args, f.json, table2(&f))
        }
        Command::Table3(f) => {
            reject("table3", &f, &["max-rank", "dim"])?;
            emit(out, "table3", args, f.json, table3(&f))
        }
        Command::Qkt(f) => {
            reject("qkt", &f, &hkt_flags)?;
            emit(out, "qkt", args, f.json, qkt(&f))
        }
    }
}

/// Run with `argv` (program name first). Exit code 0 when every
/// verification passed, 1 when some failed, 2 on a usage or input error.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let msg = e.to_string();
                    let _ = writeln!(err, "{}", msg.lines().next().unwrap_or("usage error"));
                    2
                }
            };
        }
    };
    let args = argv.get(1..).unwrap_or_default();
    match dispatch(cli, args, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
