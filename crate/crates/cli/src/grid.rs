use circ_iso_core::{family_all, FamilyParams};
use rayon::prelude::*;
use serde_json::json;

use crate::error::CliError;
use crate::report::{Provenance, Report};
use crate::request::{FamilyArgs, Options, Request};

/// Caps the worker count of the grid pool.
pub const THREADS_ENV: &str = "CIRC_ISO_THREADS";

/// Runs every request on a rayon pool. Failures become reports with an
/// `error` result, so one bad cell never aborts the grid. Output is sorted by
/// the serialised request and does not depend on the thread count.
pub fn run_grid(requests: &[Request], opts: &Options) -> Result<Vec<Report>, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;

    let mut keyed: Vec<(String, Report)> = pool.install(|| {
        requests
            .par_iter()
            .map(|req| (req.key(), run_one(req, opts)))
            .collect()
    });
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, r)| r).collect())
}

fn run_one(req: &Request, opts: &Options) -> Report {
    match req.execute(opts) {
        Ok(out) => out.report,
        Err(e) => Report {
            command: req.name().to_string(),
            inputs: req.inputs(),
            result: json!({ "error": e.to_string(), "exit_code": e.exit_code() }),
            provenance: Provenance::new(opts.oracle_budget, opts.depth),
        },
    }
}

/// Named request lists.
pub fn preset(name: &str) -> Result<Vec<Request>, CliError> {
    match name {
        "verify-family-p3" => Ok(p3_params().map(Request::VerifyFamily).collect()),
        "comembers-p3" => {
            let mut out = Vec::new();
            for args in p3_params().filter(|a| a.n <= 2) {
                let fp = FamilyParams::new(args.p, args.n, args.x, args.y)?;
                let members = family_all(&fp)?;
                for (i, a) in members.iter().enumerate() {
                    for b in &members[i + 1..] {
                        out.push(Request::Classify {
                            g1: a.to_string(),
                            g2: b.to_string(),
                        });
                    }
                }
            }
            Ok(out)
        }
        other => Err(CliError::Usage(format!(
            "unknown preset `{other}`, expected verify-family-p3 or comembers-p3"
        ))),
    }
}

fn p3_params() -> impl Iterator<Item = FamilyArgs> {
    (1..=5u64).flat_map(|n| {
        (0..n).flat_map(move |y| {
            (1..3u64).map(move |x| FamilyArgs {
                p: 3,
                n,
                x,
                y,
                multiples: None,
                relaxed: false,
            })
        })
    })
}
