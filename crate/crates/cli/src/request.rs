//! One request per subcommand; also the unit of work in a grid file.

use std::fmt::Write as _;

use circ_iso_core::zmod::gcd;
use circ_iso_core::{
    adams_orbit, adams_witness, annexure_blocks, brute_force_isomorphic, ci_scan, classify_pair,
    extended_family_all, extended_family_set, parse_graph, render_full, theta_graph, theta_table,
    type2_group, v_orbit, verify_certificate, verify_family, witness_to_certificate,
    CirculantGraph, ExtendedParams, FamilyParams, IsoVerdict, OracleOutcome, SearchBudget,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::report::{Provenance, Report};

pub const DEFAULT_MAX_CANDIDATES: u64 = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Request {
    Classify {
        g1: String,
        g2: String,
    },
    Orbit {
        graph: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        r: Option<u64>,
    },
    T2group {
        graph: String,
        r: u64,
    },
    ThetaTable {
        graph: String,
        r: u64,
    },
    Family(FamilyArgs),
    VerifyFamily(FamilyArgs),
    Annexure {
        p: u64,
        n: u64,
    },
    CiScan {
        graph: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_candidates: Option<u64>,
    },
    Oracle {
        g1: String,
        g2: String,
    },
    ConjectureProbe {
        g1: String,
        g2: String,
        m: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyArgs {
    pub p: u64,
    pub n: u64,
    pub x: u64,
    pub y: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiples: Option<Vec<u64>>,
    /// Accept multiples whose gcd is not 1.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub relaxed: bool,
}

impl FamilyArgs {
    fn params(&self) -> Result<ExtendedParams, CliError> {
        let base = FamilyParams::new(self.p, self.n, self.x, self.y)?;
        let multiples = self.multiples.clone().unwrap_or_else(|| vec![1]);
        let ep = if self.relaxed {
            ExtendedParams::relaxed(base, multiples)?
        } else {
            ExtendedParams::new(base, multiples)?
        };
        Ok(ep)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub oracle_budget: u64,
    pub depth: usize,
}

impl Default for Options {
    fn default() -> Self {
        let b = SearchBudget::default();
        Options {
            oracle_budget: b.oracle_nodes,
            depth: b.depth,
        }
    }
}

/// Output of one request: the JSON report and its text rendering.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Report,
    pub text: String,
}

impl Request {
    pub fn name(&self) -> &'static str {
        match self {
            Request::Classify { .. } => "classify",
            Request::Orbit { .. } => "orbit",
            Request::T2group { .. } => "t2group",
            Request::ThetaTable { .. } => "theta-table",
            Request::Family(_) => "family",
            Request::VerifyFamily(_) => "verify-family",
            Request::Annexure { .. } => "annexure",
            Request::CiScan { .. } => "ci-scan",
            Request::Oracle { .. } => "oracle",
            Request::ConjectureProbe { .. } => "conjecture-probe",
        }
    }

    /// Stable sort key: the canonical JSON of the request.
    pub fn key(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    pub fn inputs(&self) -> Value {
        serde_json::to_value(self).expect("plain data")
    }

    pub fn execute(&self, opts: &Options) -> Result<Outcome, CliError> {
        let (result, text) = match self {
            Request::Classify { g1, g2 } => classify(&graph(g1)?, &graph(g2)?, opts)?,
            Request::Orbit { graph: g, r } => orbit(&graph(g)?, *r)?,
            Request::T2group { graph: g, r } => t2group(&graph(g)?, *r)?,
            Request::ThetaTable { graph: g, r } => {
                let table = theta_table(&graph(g)?, *r)?;
                (serde_json::to_value(&table)?, table.render_text())
            }
            Request::Family(args) => family(args)?,
            Request::VerifyFamily(args) => {
                let report = verify_family(&args.params()?)?;
                let mut text = format!(
                    "verified: order {}, group order {}, t1 = {}\n",
                    report.order, report.group_order, report.t1
                );
                for g in &report.members {
                    writeln!(text, "{g}").unwrap();
                }
                (serde_json::to_value(&report)?, text)
            }
            Request::Annexure { p, n } => {
                let blocks = annexure_blocks(*p, *n)?;
                let text = blocks
                    .iter()
                    .map(|b| b.render())
                    .collect::<Vec<_>>()
                    .join("\n");
                (serde_json::to_value(&blocks)?, text)
            }
            Request::CiScan {
                graph: g,
                max_candidates,
            } => {
                let report = ci_scan(
                    &graph(g)?,
                    max_candidates.unwrap_or(DEFAULT_MAX_CANDIDATES),
                    opts.oracle_budget,
                )?;
                let mut text = format!(
                    "{}: {} candidates, {} with the same gcd profile, Adam's orbit of size {}\n",
                    report.graph, report.candidates, report.same_profile, report.adams_orbit_size
                );
                if report.ci_holds {
                    text.push_str("CI holds at this size and profile\n");
                }
                for v in &report.violations {
                    writeln!(text, "violation {v}").unwrap();
                }
                for u in &report.unknown {
                    writeln!(text, "unknown {u}").unwrap();
                }
                (serde_json::to_value(&report)?, text)
            }
            Request::Oracle { g1, g2 } => oracle(&graph(g1)?, &graph(g2)?, opts)?,
            Request::ConjectureProbe { g1, g2, m } => probe(&graph(g1)?, &graph(g2)?, *m)?,
        };
        Ok(Outcome {
            report: Report {
                command: self.name().to_string(),
                inputs: self.inputs(),
                result,
                provenance: Provenance::new(opts.oracle_budget, opts.depth),
            },
            text,
        })
    }
}

fn graph(text: &str) -> Result<CirculantGraph, CliError> {
    Ok(parse_graph(text)?)
}

fn classify(
    g1: &CirculantGraph,
    g2: &CirculantGraph,
    opts: &Options,
) -> Result<(Value, String), CliError> {
    let budget = SearchBudget {
        depth: opts.depth,
        oracle_nodes: opts.oracle_budget,
    };
    let verdict = classify_pair(g1, g2, &budget);
    let verified = if verdict.is_isomorphic() {
        let cert = witness_to_certificate(&verdict, g1.modulus())?;
        Some(verify_certificate(g1, g2, &cert)?)
    } else {
        None
    };
    let mut text = format!("{g1} vs {g2}: {verdict}\n");
    if let Some(ok) = verified {
        let word = if ok { "verified" } else { "FAILED" };
        writeln!(text, "certificate {word}").unwrap();
    }
    Ok((
        json!({ "verdict": verdict, "certificate_verified": verified }),
        text,
    ))
}

fn orbit(g: &CirculantGraph, r: Option<u64>) -> Result<(Value, String), CliError> {
    let orbit = adams_orbit(g);
    let mut text = format!("Ad_{}({g}): {} members\n", g.order(), orbit.len());
    for m in &orbit.members {
        writeln!(text, "a = {:<4} {}", m.witness, m.graph).unwrap();
    }
    let mut result = json!({ "adams": orbit });
    if let Some(r) = r {
        let v = v_orbit(g, r)?;
        writeln!(
            text,
            "V_{{{},{r}}}: {} circulant images",
            g.order(),
            v.len()
        )
        .unwrap();
        for (t, h) in &v {
            writeln!(text, "t = {t:<4} {h}").unwrap();
        }
        result["v_orbit"] = serde_json::to_value(
            v.iter()
                .map(|(t, h)| json!({ "t": t, "graph": h }))
                .collect::<Vec<_>>(),
        )?;
    }
    Ok((result, text))
}

fn t2group(g: &CirculantGraph, r: u64) -> Result<(Value, String), CliError> {
    let group = type2_group(g, r)?;
    let v_size = v_orbit(g, r)?.len();
    let mut text = format!(
        "T2_{{{},{r}}}({g}): order {}, t1 = {}, |V| = {v_size}\n",
        g.order(),
        group.order,
        group.t1
    );
    for (j, h) in group.members.iter().enumerate() {
        writeln!(text, "t = {:<4} {h}", j as u64 * group.t1).unwrap();
    }
    let mut result = serde_json::to_value(&group)?;
    result["v_size"] = json!(v_size);
    Ok((result, text))
}

fn family(args: &FamilyArgs) -> Result<(Value, String), CliError> {
    let ep = args.params()?;
    let members = extended_family_all(&ep)?;
    let mut text = String::new();
    for (i, g) in members.iter().enumerate() {
        writeln!(text, "{g}").unwrap();
        debug_assert_eq!(&extended_family_set(&ep, i as u64 + 1)?, g);
    }
    let full: Vec<String> = members.iter().map(render_full).collect();
    Ok((json!({ "members": members, "full_sets": full }), text))
}

fn oracle(
    g1: &CirculantGraph,
    g2: &CirculantGraph,
    opts: &Options,
) -> Result<(Value, String), CliError> {
    let res = brute_force_isomorphic(g1, g2, opts.oracle_budget)?;
    let text = match &res.outcome {
        OracleOutcome::Yes { certificate } => {
            let ok = verify_certificate(g1, g2, certificate)?;
            format!(
                "Yes ({} nodes), certificate {}\n",
                res.nodes,
                if ok { "verified" } else { "FAILED" }
            )
        }
        OracleOutcome::No => format!("No ({} nodes)\n", res.nodes),
        OracleOutcome::Exceeded { nodes } => format!("Exceeded after {nodes} nodes\n"),
    };
    Ok((serde_json::to_value(&res)?, text))
}

/// Adds `qm` to both sides of a pair that is Type-2 w.r.t. `m` and records
/// whether the enlarged pair stays Type-2 w.r.t. `m`. Reports evidence only.
fn probe(g1: &CirculantGraph, g2: &CirculantGraph, m: u64) -> Result<(Value, String), CliError> {
    let n = g1.order();
    if g2.order() != n {
        return Err(circ_iso_core::Error::OrderMismatch {
            left: n,
            right: g2.order(),
        }
        .into());
    }
    if m < 2 || gcd(n, m) != m || !g1.jumps().contains(m) || !g2.jumps().contains(m) {
        return Err(CliError::Usage(format!(
            "m = {m} must be a proper divisor of {n} present in both jump sets"
        )));
    }
    let shifts = n / m;
    let type2_shift = |a: &CirculantGraph, b: &CirculantGraph| -> Result<Option<u64>, CliError> {
        if adams_witness(a, b).is_some() {
            return Ok(None);
        }
        for t in 1..shifts {
            if theta_graph(a, m, t)?.as_ref() == Some(b) {
                return Ok(Some(t));
            }
        }
        Ok(None)
    };
    let base_t = type2_shift(g1, g2)?;
    let strip = |g: &CirculantGraph| -> Vec<u64> {
        g.jumps()
            .as_slice()
            .iter()
            .copied()
            .filter(|&s| s != m)
            .collect()
    };
    let (r, s) = (strip(g1), strip(g2));

    let mut rows = Vec::new();
    let mut text = format!(
        "{g1} / {g2} w.r.t. m = {m}: base pair {}\n",
        match base_t {
            Some(t) => format!("Type-2 at t = {t}"),
            None => "not Type-2".into(),
        }
    );
    for q in 2..=(n / 2) / m {
        let qm = q * m;
        let m1 = gcd(n, qm) / m;
        if m1 < 2 || r.contains(&qm) || s.contains(&qm) {
            continue;
        }
        let a = CirculantGraph::from_values(n, r.iter().copied().chain([qm]))?;
        let b = CirculantGraph::from_values(n, s.iter().copied().chain([qm]))?;
        let coprime = gcd(m, m1) == 1;
        let observed = type2_shift(&a, &b)?;
        let predicted_type2 = coprime;
        rows.push(json!({
            "q": q,
            "qm": qm,
            "m1": m1,
            "gcd_m_m1": gcd(m, m1),
            "pair": [a.to_string(), b.to_string()],
            "predicted_type2": predicted_type2,
            "observed_t": observed,
            "consistent": predicted_type2 == observed.is_some(),
        }));
        writeln!(
            text,
            "q = {q:<3} {a} / {b}: m1 = {m1}, predicted {}, observed {}",
            if predicted_type2 {
                "Type-2"
            } else {
                "not Type-2"
            },
            match observed {
                Some(t) => format!("Type-2 at t = {t}"),
                None => "not Type-2".into(),
            }
        )
        .unwrap();
    }
    let consistent = rows.iter().filter(|r| r["consistent"] == true).count();
    writeln!(
        text,
        "{consistent} of {} rows match the prediction",
        rows.len()
    )
    .unwrap();
    Ok((
        json!({ "base_t": base_t, "rows": rows, "consistent": consistent, "total": rows.len() }),
        text,
    ))
}

/// `true` when the verdict carries a witness that re-validates.
pub fn verdict_witness_checks(
    g1: &CirculantGraph,
    g2: &CirculantGraph,
    verdict: &IsoVerdict,
) -> Result<bool, CliError> {
    let cert = witness_to_certificate(verdict, g1.modulus())?;
    Ok(verify_certificate(g1, g2, &cert)?)
}
