use std::path::PathBuf;
use std::process::ExitCode;

use circ_iso_cli::{
    golden_compare, golden_compare_json, preset, run_grid, CliError, FamilyArgs, Options, Request,
};
use circ_iso_core::DEFAULT_ORACLE_BUDGET;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "circ-iso",
    version,
    about = "Adam's and Type-2 isomorphisms of circulant graphs"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Node budget for the brute-force oracle.
    #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET, global = true)]
    budget: u64,

    /// Depth of the composite witness search.
    #[arg(long, default_value_t = 3, global = true)]
    depth: usize,

    /// Reserved. Every command is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Compare the output with this file and exit 1 on any difference.
    #[arg(long, global = true)]
    golden: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether two circulants are Adam's, Type-2 or composite isomorphic.
    Classify {
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
    },
    /// Adam's orbit, plus the circulant Θ images for a given r.
    Orbit {
        graph: String,
        #[arg(long)]
        r: Option<u64>,
    },
    /// Type-2 isomorphism group w.r.t. r.
    T2group {
        graph: String,
        #[arg(long)]
        r: u64,
    },
    /// Table of Θ images of the full connection set.
    ThetaTable {
        graph: String,
        #[arg(long)]
        r: u64,
    },
    /// Members of the np³ family.
    Family(FamilyCli),
    /// Members of the np³ family, with every group property checked.
    VerifyFamily(FamilyCli),
    /// All families for given p and n in listing form.
    Annexure {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
    },
    /// Search same-order graphs with the same gcd profile for CI violations.
    CiScan {
        graph: String,
        #[arg(long)]
        max_candidates: Option<u64>,
    },
    /// Run the brute-force oracle alone.
    Oracle {
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
    },
    /// Check a Type-2 pair extended by multiples of m against the gcd(m, m1) prediction.
    ConjectureProbe {
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
        #[arg(long)]
        m: u64,
    },
    /// Run a JSON list of requests, or a preset, in parallel.
    Grid {
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        preset: Option<String>,
    },
}

#[derive(Args)]
struct FamilyCli {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    x: u64,
    #[arg(long)]
    y: u64,
    #[arg(long, value_delimiter = ',')]
    multiples: Option<Vec<u64>>,
    /// Allow multiples with gcd > 1.
    #[arg(long)]
    relaxed: bool,
}

impl From<FamilyCli> for FamilyArgs {
    fn from(f: FamilyCli) -> Self {
        FamilyArgs {
            p: f.p,
            n: f.n,
            x: f.x,
            y: f.y,
            multiples: f.multiples,
            relaxed: f.relaxed,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let opts = Options {
        oracle_budget: cli.budget,
        depth: cli.depth,
    };
    let request = match cli.command {
        Command::Classify { g1, g2 } => Request::Classify { g1, g2 },
        Command::Orbit { graph, r } => Request::Orbit { graph, r },
        Command::T2group { graph, r } => Request::T2group { graph, r },
        Command::ThetaTable { graph, r } => Request::ThetaTable { graph, r },
        Command::Family(f) => Request::Family(f.into()),
        Command::VerifyFamily(f) => Request::VerifyFamily(f.into()),
        Command::Annexure { p, n } => Request::Annexure { p, n },
        Command::CiScan {
            graph,
            max_candidates,
        } => Request::CiScan {
            graph,
            max_candidates,
        },
        Command::Oracle { g1, g2 } => Request::Oracle { g1, g2 },
        Command::ConjectureProbe { g1, g2, m } => Request::ConjectureProbe { g1, g2, m },
        Command::Grid { file, preset: name } => {
            return grid(file, name, &opts, cli.golden);
        }
    };
    let out = request.execute(&opts)?;
    match cli.format {
        Format::Text => {
            print!("{}", out.text);
            if let Some(path) = cli.golden {
                check_text(&out.text, &path)?;
            }
        }
        Format::Json => {
            println!("{}", out.report.to_json());
            if let Some(path) = cli.golden {
                let diffs = golden_compare_json(&serde_json::to_value(&out.report)?, &path)?;
                if !diffs.is_empty() {
                    return Err(CliError::GoldenMismatch(diffs.join("\n")));
                }
            }
        }
    }
    Ok(())
}

fn check_text(text: &str, path: &std::path::Path) -> Result<(), CliError> {
    let diffs = golden_compare(text, path)?;
    if diffs.is_empty() {
        return Ok(());
    }
    Err(CliError::GoldenMismatch(
        diffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("\n"),
    ))
}

fn grid(
    file: Option<PathBuf>,
    name: Option<String>,
    opts: &Options,
    golden: Option<PathBuf>,
) -> Result<(), CliError> {
    let requests: Vec<Request> = match (file, name) {
        (_, Some(name)) => preset(&name)?,
        (Some(path), None) => {
            let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            serde_json::from_str(&text)?
        }
        (None, None) => return Err(CliError::Usage("grid needs a file or --preset".into())),
    };
    let reports = run_grid(&requests, opts)?;
    let value = serde_json::to_value(&reports)?;
    println!("{}", serde_json::to_string_pretty(&value)?);
    if let Some(path) = golden {
        let diffs = golden_compare_json(&value, &path)?;
        if !diffs.is_empty() {
            return Err(CliError::GoldenMismatch(diffs.join("\n")));
        }
    }
    Ok(())
}
