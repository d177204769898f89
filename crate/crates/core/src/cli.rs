//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 input error, 3 budget or cap
//! exhaustion.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::bracket::{normalized_bracket_with, stuck_bracket_with, BracketConfig};
use crate::catalog;
use crate::diagram::StuckDiagram;
use crate::error::Error;
use crate::isotopy::{check_classical_match, fuzz_sequence, simplify, unsticking_distance};
use crate::skein::{rigid_homflypt_with, SkeinConfig, DEFAULT_NODE_BUDGET};

pub const BUDGET_ENV: &str = "STUCKKNOT_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "stuckknot", version, about = "Invariants and unsticking distance of stuck knot diagrams")]
struct Cli {
    /// Worker threads for parallel engines (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Diagram file, `-` for stdin, or `catalog:<name>`.
    file: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stuck bracket polynomial.
    Bracket {
        #[command(flatten)]
        input: Input,
        /// Unnormalized state sum (the default).
        #[arg(long, conflicts_with = "normalized")]
        raw: bool,
        /// Multiply by (-A^3)^(-writhe).
        #[arg(long)]
        normalized: bool,
        #[arg(long)]
        json: bool,
    },
    /// Rigid HOMFLYPT polynomial.
    Homflypt {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
        /// Maximum number of skein recursion nodes.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Bounds on the unsticking distance between two diagrams.
    Distance {
        file1: String,
        file2: String,
        /// Largest crossing count explored (default: larger input + 2).
        #[arg(long)]
        max_crossings: Option<usize>,
        /// Maximum number of expanded search states.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Reduce crossings by stuck isotopy.
    Simplify {
        #[command(flatten)]
        input: Input,
    },
    /// Seeded random walk of stuck-isotopy moves.
    Fuzz {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        length: usize,
        #[arg(long)]
        seed: u64,
        /// Largest crossing count reached (default: input + 4).
        #[arg(long)]
        max_crossings: Option<usize>,
    },
    /// Built-in diagrams.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Parse and check a diagram.
    Validate {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Show { name: String },
}

enum Failure {
    Input(String),
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded(_) | Error::CapExceeded { .. } => Failure::Limit(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn read_diagram(path: &str) -> Result<StuckDiagram, Failure> {
    let text = if let Some(name) = path.strip_prefix("catalog:") {
        catalog::lookup(name)?.text.to_string()
    } else if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?
    };
    Ok(StuckDiagram::parse(&text)?)
}

fn budget(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Input(format!("{BUDGET_ENV}: not a count: {v}"))),
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let w = |out: &mut dyn Write, s: String| writeln!(out, "{s}").map_err(|e| Failure::Input(e.to_string()));
    match cli.command {
        Command::Bracket { input, normalized, json, .. } => {
            let d = read_diagram(&input.file)?;
            let cfg = BracketConfig::default();
            let p = if normalized { normalized_bracket_with(&d, &cfg)? } else { stuck_bracket_with(&d, &cfg)? };
            if json {
                let kind = if normalized { "normalized" } else { "raw" };
                w(out, json!({"invariant": "bracket", "kind": kind, "text": p.to_string(), "terms": p.to_json()}).to_string())
            } else {
                w(out, p.to_string())
            }
        }
        Command::Homflypt { input, json, budget: b } => {
            let d = read_diagram(&input.file)?;
            let cfg = SkeinConfig { budget: budget(b)?, ..SkeinConfig::default() };
            let p = rigid_homflypt_with(&d, &cfg)?;
            if json {
                w(out, json!({"invariant": "homflypt", "text": p.to_string(), "terms": p.to_json()}).to_string())
            } else {
                w(out, p.to_string())
            }
        }
        Command::Distance { file1, file2, max_crossings, budget: b, json } => {
            let d1 = read_diagram(&file1)?;
            let d2 = read_diagram(&file2)?;
            // different classical knot types: no relaxed isotopy exists
            check_classical_match(&d1, &d2)?;
            let cap = max_crossings.unwrap_or(d1.crossing_count().max(d2.crossing_count()) + 2);
            let r = unsticking_distance(&d1, &d2, cap, budget(b)?);
            if json {
                return w(out, r.to_json().to_string());
            }
            let opt = |x: Option<usize>| x.map_or("unknown".to_string(), |v| v.to_string());
            w(out, format!("lower: {}", r.lower))?;
            w(out, format!("upper: {}", opt(r.upper)))?;
            w(out, format!("exact: {}", opt(r.exact)))?;
            w(out, format!("exhausted: {}", r.exhausted))?;
            if let Some(cert) = &r.certificate {
                w(out, "certificate:".to_string())?;
                for m in cert {
                    w(out, format!("  {m}"))?;
                }
            }
            Ok(())
        }
        Command::Simplify { input } => {
            let d = read_diagram(&input.file)?;
            w(out, simplify(&d).0.canonical_code().to_string())
        }
        Command::Fuzz { input, length, seed, max_crossings } => {
            let d = read_diagram(&input.file)?;
            let cap = max_crossings.unwrap_or(d.crossing_count() + 4);
            let (res, moves) = fuzz_sequence(&d, length, seed, cap);
            w(out, res.canonical_code().to_string())?;
            for m in moves {
                w(out, format!("# {m}"))?;
            }
            Ok(())
        }
        Command::Catalog { action: CatalogAction::List } => {
            for e in catalog::entries() {
                w(out, format!("{}\t{}", e.name, e.note))?;
            }
            Ok(())
        }
        Command::Catalog { action: CatalogAction::Show { name } } => {
            let e = catalog::lookup(&name)?;
            w(out, e.text.to_string())?;
            if let Some(p) = e.homflypt {
                w(out, format!("# homflypt: {p}"))?;
            }
            if let Some(b) = e.bracket {
                w(out, format!("# bracket normalized: {b}"))?;
            }
            Ok(())
        }
        Command::Validate { input } => {
            let d = read_diagram(&input.file)?;
            w(
                out,
                format!(
                    "valid: {} crossings ({} stuck), {} components, writhe {}",
                    d.crossing_count(),
                    d.stuck_count(),
                    d.component_count(),
                    d.writhe()
                ),
            )
        }
    }
}

/// Runs the tool on `argv` (program name first) and returns the exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    if let Some(n) = cli.threads {
        // the global pool can only be set once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match execute(cli, out) {
        Ok(()) => 0,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "{msg}");
            2
        }
        Err(Failure::Limit(msg)) => {
            let _ = writeln!(err, "{msg}");
            3
        }
    }
}
