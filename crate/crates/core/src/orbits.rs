//! Adam's orbits, `Θ`-orbits, Type-2 groups and pairwise classification.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{brute_force_isomorphic, IsoCertificate, OracleOutcome, DEFAULT_ORACLE_BUDGET};
use crate::transforms::{
    adams_image, adams_witness, theta_image_with, theta_set_period, ThetaParams,
};
use crate::zmod::{
    gcd, gcd_profile, spectra_match, spectrum_invariant, units, CirculantGraph, JumpSet,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitMember {
    pub graph: CirculantGraph,
    /// Smallest unit `a` with `φ_{n,a}(base) = graph`.
    pub witness: u64,
}

/// `Ad_n(C_n(R)) = {φ_{n,a}(C_n(R)) : a ∈ Z_n^*}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdamsOrbit {
    pub base: CirculantGraph,
    /// Sorted by graph.
    pub members: Vec<OrbitMember>,
}

impl AdamsOrbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, g: &CirculantGraph) -> bool {
        self.members.binary_search_by(|m| m.graph.cmp(g)).is_ok()
    }

    pub fn graphs(&self) -> impl Iterator<Item = &CirculantGraph> {
        self.members.iter().map(|m| &m.graph)
    }
}

pub fn adams_orbit(g: &CirculantGraph) -> AdamsOrbit {
    let mut seen: BTreeMap<CirculantGraph, u64> = BTreeMap::new();
    for a in units(g.modulus()) {
        let h = adams_image(g, a).expect("a is a unit");
        seen.entry(h).or_insert(a);
    }
    AdamsOrbit {
        base: g.clone(),
        members: seen
            .into_iter()
            .map(|(graph, witness)| OrbitMember { graph, witness })
            .collect(),
    }
}

/// Circulant `Θ_{n,r,t}` images of `g` for `t` over one set period.
pub fn v_orbit(g: &CirculantGraph, r: u64) -> Result<Vec<(u64, CirculantGraph)>> {
    let base = ThetaParams::new(g.modulus(), r, 0)?;
    let period = theta_set_period(g, r)?;
    Ok((0..period)
        .filter_map(|t| {
            theta_image_with(g, &base.with_shift(t))
                .graph
                .map(|h| (t, h))
        })
        .collect())
}

/// `T2_{n,r}(C_n(R)) = {Θ_{n,r,j·t1}(C_n(R)) : j = 0..order-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Type2Group {
    pub base: CirculantGraph,
    pub r: u64,
    pub m: u64,
    /// Generator step; equals `period` for the trivial group.
    pub t1: u64,
    /// Smallest `t >= 1` with `Θ_{n,r,t}(R) = R`.
    pub period: u64,
    /// `members[j] = Θ_{n,r,j·t1}(base)`.
    pub members: Vec<CirculantGraph>,
    pub order: u64,
}

impl Type2Group {
    pub fn member_set(&self) -> BTreeSet<CirculantGraph> {
        self.members.iter().cloned().collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

pub fn type2_group(g: &CirculantGraph, r: u64) -> Result<Type2Group> {
    let base = ThetaParams::new(g.modulus(), r, 0)?;
    let m = base.m();
    if !g.jumps().as_slice().iter().any(|&s| s % m == 0) {
        return Err(Error::NoMultipleOfM {
            graph: g.to_string(),
            m,
        });
    }
    let period = theta_set_period(g, r)?;
    let violation = |detail: String| Error::ClosureViolation {
        graph: g.to_string(),
        r,
        detail,
    };

    let t1 = (1..period).find(|&t| {
        theta_image_with(g, &base.with_shift(t))
            .graph
            .is_some_and(|h| adams_witness(g, &h).is_none())
    });
    let Some(t1) = t1 else {
        return Ok(Type2Group {
            base: g.clone(),
            r,
            m,
            t1: period,
            period,
            members: vec![g.clone()],
            order: 1,
        });
    };
    if period % t1 != 0 {
        return Err(violation(format!(
            "t1 = {t1} does not divide the period {period}"
        )));
    }
    let order = period / t1;
    let mut members = Vec::with_capacity(order as usize);
    for j in 0..order {
        let h = theta_image_with(g, &base.with_shift(j * t1))
            .graph
            .ok_or_else(|| violation(format!("Θ with t = {} is not circulant", j * t1)))?;
        members.push(h);
    }
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            if a == b || adams_witness(a, b).is_some() {
                return Err(violation(format!("{a} and {b} are Adam's-isomorphic")));
            }
        }
    }
    // Closure: Θ_{t1} moves member j onto member j+1 and the last back to base.
    let step = base.with_shift(t1);
    for (j, h) in members.iter().enumerate() {
        let next = &members[(j + 1) % members.len()];
        if theta_image_with(h, &step).graph.as_ref() != Some(next) {
            return Err(violation(format!("Θ_t1 does not send {h} to {next}")));
        }
    }
    Ok(Type2Group {
        base: g.clone(),
        r,
        m,
        t1,
        period,
        members,
        order,
    })
}

/// One move in a chain of isomorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    Adams(u64),
    Theta { r: u64, t: u64 },
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Adams(a) => write!(f, "Adams({a})"),
            Step::Theta { r, t } => write!(f, "Theta({r},{t})"),
        }
    }
}

/// Applies `path` to `g`. `None` when some `Θ` step leaves the circulants.
pub fn apply_path(g: &CirculantGraph, path: &[Step]) -> Result<Option<CirculantGraph>> {
    let mut cur = g.clone();
    for step in path {
        cur = match *step {
            Step::Adams(a) => adams_image(&cur, a)?,
            Step::Theta { r, t } => {
                let p = ThetaParams::new(cur.modulus(), r, t)?;
                match theta_image_with(&cur, &p).graph {
                    Some(h) => h,
                    None => return Ok(None),
                }
            }
        };
    }
    Ok(Some(cur))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoVerdict {
    NotIsomorphic {
        reason: String,
    },
    Adams {
        a: u64,
    },
    Type2 {
        r: u64,
        t: u64,
    },
    /// Either a structured path or, past the search depth, an oracle certificate.
    Composite {
        path: Vec<Step>,
        oracle_certificate: Option<IsoCertificate>,
    },
    Unknown {
        nodes: u64,
    },
}

impl IsoVerdict {
    pub fn kind(&self) -> &'static str {
        match self {
            IsoVerdict::NotIsomorphic { .. } => "NotIsomorphic",
            IsoVerdict::Adams { .. } => "Adams",
            IsoVerdict::Type2 { .. } => "Type2",
            IsoVerdict::Composite { .. } => "Composite",
            IsoVerdict::Unknown { .. } => "Unknown",
        }
    }

    /// Adams, Type2 or Composite.
    pub fn is_isomorphic(&self) -> bool {
        matches!(
            self,
            IsoVerdict::Adams { .. } | IsoVerdict::Type2 { .. } | IsoVerdict::Composite { .. }
        )
    }

    /// Steps mapping the first graph onto the second, when structured.
    pub fn steps(&self) -> Option<Vec<Step>> {
        match self {
            IsoVerdict::Adams { a } => Some(vec![Step::Adams(*a)]),
            IsoVerdict::Type2 { r, t } => Some(vec![Step::Theta { r: *r, t: *t }]),
            IsoVerdict::Composite {
                path,
                oracle_certificate: None,
            } => Some(path.clone()),
            _ => None,
        }
    }
}

impl fmt::Display for IsoVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoVerdict::NotIsomorphic { reason } => write!(f, "NotIsomorphic ({reason})"),
            IsoVerdict::Adams { a } => write!(f, "Adams({a})"),
            IsoVerdict::Type2 { r, t } => write!(f, "Type2({r},{t})"),
            IsoVerdict::Composite {
                path,
                oracle_certificate,
            } => {
                if oracle_certificate.is_some() {
                    return f.write_str("Composite (oracle certificate)");
                }
                let steps: Vec<String> = path.iter().map(Step::to_string).collect();
                write!(f, "Composite [{}]", steps.join(", "))
            }
            IsoVerdict::Unknown { nodes } => write!(f, "Unknown ({nodes} oracle nodes)"),
        }
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum Witness<'a> {
    Reason { reason: &'a str },
    Adams { a: u64 },
    Theta { r: u64, t: u64 },
    Nodes { oracle_nodes: u64 },
    Empty {},
}

impl Serialize for IsoVerdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (witness, path, cert) = match self {
            IsoVerdict::NotIsomorphic { reason } => (Witness::Reason { reason }, &[][..], None),
            IsoVerdict::Adams { a } => (Witness::Adams { a: *a }, &[][..], None),
            IsoVerdict::Type2 { r, t } => (Witness::Theta { r: *r, t: *t }, &[][..], None),
            IsoVerdict::Composite {
                path,
                oracle_certificate,
            } => (Witness::Empty {}, &path[..], oracle_certificate.as_ref()),
            IsoVerdict::Unknown { nodes } => (
                Witness::Nodes {
                    oracle_nodes: *nodes,
                },
                &[][..],
                None,
            ),
        };
        let mut st = s.serialize_struct("IsoVerdict", 4)?;
        st.serialize_field("kind", self.kind())?;
        st.serialize_field("witness", &witness)?;
        st.serialize_field("path", path)?;
        st.serialize_field("oracle_certificate", &cert)?;
        st.end()
    }
}

/// Limits for [`classify_pair`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub depth: usize,
    pub oracle_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            depth: 3,
            oracle_nodes: DEFAULT_ORACLE_BUDGET,
        }
    }
}

/// Smallest `r` per distinct `m = gcd(n, r) > 1` among the jumps of `g`.
/// `Θ` only depends on `m`, so one representative per class suffices.
fn theta_representatives(g: &CirculantGraph) -> Vec<u64> {
    let n = g.order();
    let mut seen = BTreeSet::new();
    g.jumps()
        .as_slice()
        .iter()
        .copied()
        .filter(|&r| {
            let m = gcd(n, r);
            m > 1 && seen.insert(m)
        })
        .collect()
}

/// Smallest `(r, t)` with `Θ_{n,r,t}(g1) = g2`, `r` a shared jump and
/// `|R| >= 3`. Does not exclude Adam's witnesses.
pub fn type2_witness(g1: &CirculantGraph, g2: &CirculantGraph) -> Option<(u64, u64)> {
    if g1.order() != g2.order() || g1.jumps().len() < 3 {
        return None;
    }
    for &r in g1.jumps().as_slice() {
        if gcd(g1.order(), r) == 1 || !g2.jumps().contains(r) {
            continue;
        }
        let base = ThetaParams::new(g1.modulus(), r, 0).expect("gcd > 1");
        for t in 1..base.shift_count() {
            if theta_image_with(g1, &base.with_shift(t)).graph.as_ref() == Some(g2) {
                return Some((r, t));
            }
        }
    }
    None
}

/// Classifies `(g1, g2)`: quick invariants, then Adam's, Type-2, a bounded
/// composite search and finally the oracle.
pub fn classify_pair(
    g1: &CirculantGraph,
    g2: &CirculantGraph,
    budget: &SearchBudget,
) -> IsoVerdict {
    let reject = |reason: &str| IsoVerdict::NotIsomorphic {
        reason: reason.to_string(),
    };
    if g1.order() != g2.order() {
        return reject("orders differ");
    }
    if g1.jumps().len() != g2.jumps().len() || g1.degree() != g2.degree() {
        return reject("jump set sizes differ");
    }
    if gcd_profile(g1) != gcd_profile(g2) {
        return reject("gcd profiles differ");
    }
    if !spectra_match(&spectrum_invariant(g1), &spectrum_invariant(g2)) {
        return reject("spectra differ");
    }
    if let Some(a) = adams_witness(g1, g2) {
        return IsoVerdict::Adams { a };
    }
    if let Some((r, t)) = type2_witness(g1, g2) {
        return IsoVerdict::Type2 { r, t };
    }
    if let Some(path) = composite_search(g1, g2, budget.depth) {
        return IsoVerdict::Composite {
            path,
            oracle_certificate: None,
        };
    }
    match brute_force_isomorphic(g1, g2, budget.oracle_nodes)
        .expect("orders checked above")
        .outcome
    {
        OracleOutcome::Yes { certificate } => IsoVerdict::Composite {
            path: Vec::new(),
            oracle_certificate: Some(certificate),
        },
        OracleOutcome::No => reject("oracle found no isomorphism"),
        OracleOutcome::Exceeded { nodes } => IsoVerdict::Unknown { nodes },
    }
}

/// Shortest chain of `Θ` and Adam's steps from `g1` to `g2`, at most
/// `max_depth` steps. Breadth first; at each graph `Θ` moves (by `r`, then
/// `t`) are tried before Adam's moves (by `a`).
pub fn composite_search(
    g1: &CirculantGraph,
    g2: &CirculantGraph,
    max_depth: usize,
) -> Option<Vec<Step>> {
    if g1 == g2 {
        return Some(Vec::new());
    }
    if g1.order() != g2.order() || g1.jumps().len() != g2.jumps().len() {
        return None;
    }
    let unit_list = units(g1.modulus());
    let mut parent: BTreeMap<CirculantGraph, Option<(CirculantGraph, Step)>> = BTreeMap::new();
    parent.insert(g1.clone(), None);
    let mut frontier = VecDeque::from([(g1.clone(), 0usize)]);

    let trace = |parent: &BTreeMap<CirculantGraph, Option<(CirculantGraph, Step)>>| {
        let mut path = Vec::new();
        let mut cur = g2.clone();
        while let Some(Some((prev, step))) = parent.get(&cur) {
            path.push(*step);
            cur = prev.clone();
        }
        path.reverse();
        path
    };

    while let Some((h, depth)) = frontier.pop_front() {
        if depth == max_depth {
            continue;
        }
        let mut moves: Vec<(CirculantGraph, Step)> = Vec::new();
        for r in theta_representatives(&h) {
            let base = ThetaParams::new(h.modulus(), r, 0).expect("gcd > 1");
            for t in 1..base.shift_count() {
                if let Some(img) = theta_image_with(&h, &base.with_shift(t)).graph {
                    moves.push((img, Step::Theta { r, t }));
                }
            }
        }
        for &a in &unit_list[1..] {
            moves.push((adams_image(&h, a).expect("unit"), Step::Adams(a)));
        }
        for (img, step) in moves {
            if parent.contains_key(&img) {
                continue;
            }
            parent.insert(img.clone(), Some((h.clone(), step)));
            if img == *g2 {
                return Some(trace(&parent));
            }
            frontier.push_back((img, depth + 1));
        }
    }
    None
}

/// Outcome of an exhaustive CI check around one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CiReport {
    pub graph: CirculantGraph,
    /// Jump sets of the same size.
    pub candidates: u64,
    /// Of those, the ones sharing the gcd profile.
    pub same_profile: u64,
    pub adams_orbit_size: usize,
    /// Isomorphic to `graph` but outside its Adam's orbit.
    pub violations: Vec<CirculantGraph>,
    /// Candidates on which the oracle ran out of budget.
    pub unknown: Vec<CirculantGraph>,
    pub ci_holds: bool,
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n.saturating_sub(k));
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Tests every jump set of the same size and gcd profile as `g` for
/// isomorphism to `g` and reports the ones outside Adam's orbit.
pub fn ci_scan(g: &CirculantGraph, candidate_budget: u64, oracle_nodes: u64) -> Result<CiReport> {
    let n = g.modulus();
    let k = g.jumps().len();
    let half = n.half();
    let candidates = binomial(half, k as u64);
    if candidates > candidate_budget {
        return Err(Error::BudgetExceeded {
            candidates,
            budget: candidate_budget,
        });
    }
    let orbit = adams_orbit(g);
    let profile = gcd_profile(g);
    let mut same_profile = 0;
    let mut violations = Vec::new();
    let mut unknown = Vec::new();

    let mut combo: Vec<u64> = (1..=k as u64).collect();
    loop {
        let h = CirculantGraph::new(JumpSet::new(n, combo.clone()).expect("ascending in range"));
        if gcd_profile(&h) == profile {
            same_profile += 1;
            if !orbit.contains(&h) {
                match brute_force_isomorphic(g, &h, oracle_nodes)?.outcome {
                    OracleOutcome::Yes { .. } => violations.push(h),
                    OracleOutcome::No => {}
                    OracleOutcome::Exceeded { .. } => unknown.push(h),
                }
            }
        }
        // Next k-subset of 1..=half in lexicographic order.
        let Some(i) = (0..k).rev().find(|&i| combo[i] < half - (k - 1 - i) as u64) else {
            break;
        };
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
    Ok(CiReport {
        graph: g.clone(),
        candidates,
        same_profile,
        adams_orbit_size: orbit.len(),
        ci_holds: violations.is_empty() && unknown.is_empty(),
        violations,
        unknown,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_graph;

    fn g(s: &str) -> CirculantGraph {
        parse_graph(s).unwrap()
    }

    fn gs(list: &[&str]) -> Vec<CirculantGraph> {
        list.iter().map(|s| g(s)).collect()
    }

    #[test]
    fn adams_orbit_examples() {
        let orbit = adams_orbit(&g("C54(1,17,18,19)"));
        let got: Vec<_> = orbit.graphs().cloned().collect();
        assert_eq!(
            got,
            gs(&["C54(1,17,18,19)", "C54(5,13,18,23)", "C54(7,11,18,25)"])
        );
        assert_eq!(orbit.members[0].witness, 1);

        let orbit = adams_orbit(&g("C54(1,3,17,19)"));
        let got: Vec<_> = orbit.graphs().cloned().collect();
        assert_eq!(
            got,
            gs(&["C54(1,3,17,19)", "C54(5,13,15,23)", "C54(7,11,21,25)"])
        );

        let orbit = adams_orbit(&g("C13(1,5)"));
        assert_eq!(12 % orbit.len(), 0);
    }

    #[test]
    fn v_orbit_examples() {
        let v = v_orbit(&g("C54(1,3,17,19)"), 3).unwrap();
        assert_eq!(
            v,
            vec![
                (0, g("C54(1,3,17,19)")),
                (2, g("C54(3,7,11,25)")),
                (4, g("C54(3,5,13,23)"))
            ]
        );
        let ts: Vec<u64> = v_orbit(&g("C81(1,3,26,28)"), 3)
            .unwrap()
            .into_iter()
            .map(|(t, _)| t)
            .collect();
        assert_eq!(ts, vec![0, 3, 6]);
        assert!(v_orbit(&g("C54(1,3,17,19)"), 5).is_err());
    }

    #[test]
    fn type2_group_examples() {
        let grp = type2_group(&g("C81(1,3,26,28)"), 3).unwrap();
        assert_eq!(grp.order, 3);
        assert_eq!(grp.t1, 3);
        assert_eq!(
            grp.members,
            gs(&["C81(1,3,26,28)", "C81(3,10,17,37)", "C81(3,8,19,35)"])
        );

        let grp = type2_group(&g("C81(3,7,20,34)"), 3).unwrap();
        assert_eq!(
            grp.members,
            gs(&["C81(3,7,20,34)", "C81(3,11,16,38)", "C81(2,3,25,29)"])
        );

        let grp = type2_group(&g("C54(1,3,17,19)"), 3).unwrap();
        assert_eq!(
            grp.members,
            gs(&["C54(1,3,17,19)", "C54(3,7,11,25)", "C54(3,5,13,23)"])
        );

        let grp = type2_group(&g("C54(1,17,18,19)"), 18).unwrap();
        assert!(grp.is_trivial());
        assert_eq!(grp.members, gs(&["C54(1,17,18,19)"]));
    }

    #[test]
    fn type2_group_errors() {
        assert!(matches!(
            type2_group(&g("C54(1,5,7)"), 3),
            Err(Error::NoMultipleOfM { m: 3, .. })
        ));
        assert!(matches!(
            type2_group(&g("C54(1,3,17,19)"), 5),
            Err(Error::InvalidR { .. })
        ));
    }

    #[test]
    fn classify_examples() {
        let b = SearchBudget::default();
        assert_eq!(
            classify_pair(&g("C48(1,4,23)"), &g("C48(4,11,13)"), &b),
            IsoVerdict::Adams { a: 11 }
        );
        assert_eq!(
            classify_pair(&g("C48(1,2,23)"), &g("C48(2,11,13)"), &b),
            IsoVerdict::Type2 { r: 2, t: 6 }
        );
        let h = g("C54(1,3,17,19)");
        assert_eq!(classify_pair(&h, &h, &b), IsoVerdict::Adams { a: 1 });
        assert_eq!(
            classify_pair(&h, &g("C54(5,13,21,23)"), &b),
            IsoVerdict::Composite {
                path: vec![Step::Theta { r: 3, t: 2 }, Step::Adams(7)],
                oracle_certificate: None
            }
        );
        assert!(matches!(
            classify_pair(&g("C8(1,4)"), &g("C8(2,4)"), &b),
            IsoVerdict::NotIsomorphic { .. }
        ));
    }

    #[test]
    fn composite_search_examples() {
        let a = g("C54(1,3,17,19)");
        assert_eq!(
            composite_search(&a, &g("C54(3,7,11,25)"), 1),
            Some(vec![Step::Theta { r: 3, t: 2 }])
        );
        assert_eq!(composite_search(&a, &a, 1), Some(vec![]));
        assert_eq!(composite_search(&a, &g("C54(5,13,21,23)"), 1), None);
        let path = composite_search(&a, &g("C54(5,13,21,23)"), 2).unwrap();
        assert_eq!(apply_path(&a, &path).unwrap(), Some(g("C54(5,13,21,23)")));
    }

    #[test]
    fn ci_scan_examples() {
        let report = ci_scan(&g("C27(1,3,8,10)"), 10_000, DEFAULT_ORACLE_BUDGET).unwrap();
        assert!(!report.ci_holds);
        assert!(report.violations.contains(&g("C27(2,3,7,11)")));
        assert!(report.violations.contains(&g("C27(3,4,5,13)")));

        let report = ci_scan(&g("C8(1,2,3)"), 10_000, DEFAULT_ORACLE_BUDGET).unwrap();
        assert_eq!(report.candidates, 4);
        assert!(report.ci_holds);

        let report = ci_scan(&g("C5(1)"), 10_000, DEFAULT_ORACLE_BUDGET).unwrap();
        assert!(report.ci_holds);
        assert_eq!(report.adams_orbit_size, 2);

        assert_eq!(
            ci_scan(&g("C81(1,3,26,28)"), 100, 10),
            Err(Error::BudgetExceeded {
                candidates: 91_390,
                budget: 100
            })
        );
    }

    #[test]
    fn verdict_json_shape() {
        let v = IsoVerdict::Type2 { r: 2, t: 6 };
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"kind":"Type2","witness":{"r":2,"t":6},"path":[],"oracle_certificate":null}"#
        );
        let v = IsoVerdict::Composite {
            path: vec![Step::Theta { r: 3, t: 2 }, Step::Adams(7)],
            oracle_certificate: None,
        };
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"kind":"Composite","witness":{},"path":[{"Theta":{"r":3,"t":2}},{"Adams":7}],"oracle_certificate":null}"#
        );
    }
}
