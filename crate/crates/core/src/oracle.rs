//! Brute-force isomorphism test by individualisation and refinement.
//!
//! The search only touches plain adjacency data, so it is independent of
//! the multiplier and theta machinery it is used to check.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::{IsoVerdict, Step};
use crate::transforms::{adams_vertex_map, theta_vertex_map, ThetaParams};
use crate::zmod::{spectra_match, spectrum_invariant, CirculantGraph, Modulus};

pub const DEFAULT_ORACLE_BUDGET: u64 = 10_000_000;

/// Vertex bijection `perm[u]` of `g1` onto `g2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IsoCertificate {
    pub perm: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum OracleOutcome {
    Yes { certificate: IsoCertificate },
    No,
    Exceeded { nodes: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    #[serde(flatten)]
    pub outcome: OracleOutcome,
    /// Search nodes visited.
    pub nodes: u64,
}

impl OracleResult {
    pub fn is_yes(&self) -> bool {
        matches!(self.outcome, OracleOutcome::Yes { .. })
    }
}

struct Dense {
    n: usize,
    adj: Vec<Vec<usize>>,
    bits: Vec<bool>,
}

impl Dense {
    fn new(g: &CirculantGraph) -> Self {
        let adj = g.adjacency();
        let n = adj.len();
        let mut bits = vec![false; n * n];
        for (u, row) in adj.iter().enumerate() {
            for &v in row {
                bits[u * n + v] = true;
            }
        }
        Dense { n, adj, bits }
    }

    #[inline]
    fn edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.n + v]
    }

    /// Per-vertex `(|ball of radius 2|, sorted triangle counts per edge)`.
    fn local_signature(&self, v: usize) -> (usize, Vec<usize>) {
        let mut ball = vec![false; self.n];
        ball[v] = true;
        for &u in &self.adj[v] {
            ball[u] = true;
            for &w in &self.adj[u] {
                ball[w] = true;
            }
        }
        let mut tri: Vec<usize> = self.adj[v]
            .iter()
            .map(|&u| self.adj[u].iter().filter(|&&w| self.edge(v, w)).count())
            .collect();
        tri.sort_unstable();
        (ball.iter().filter(|&&b| b).count(), tri)
    }
}

/// Joint colouring of both graphs. Colour ids come from one shared table,
/// so equal ids mean equal refinement history on either side.
#[derive(Clone)]
struct Colouring {
    left: Vec<u32>,
    right: Vec<u32>,
}

struct Search<'a> {
    a: &'a Dense,
    b: &'a Dense,
    nodes: u64,
    budget: u64,
}

enum Branch {
    Found(Vec<u64>),
    Exhausted,
    Budget,
}

impl Search<'_> {
    fn histograms_match(c: &Colouring) -> bool {
        let mut l = c.left.clone();
        let mut r = c.right.clone();
        l.sort_unstable();
        r.sort_unstable();
        l == r
    }

    /// Equitable refinement; `false` when the two sides diverge.
    fn refine(&mut self, c: &mut Colouring) -> bool {
        let count = |c: &Colouring| {
            let mut all = c.left.clone();
            all.sort_unstable();
            all.dedup();
            all.len()
        };
        let mut classes = count(c);
        loop {
            let mut table: HashMap<(u32, Vec<u32>), u32> = HashMap::new();
            let sig = |g: &Dense, col: &[u32], v: usize| {
                let mut nb: Vec<u32> = g.adj[v].iter().map(|&u| col[u]).collect();
                nb.sort_unstable();
                (col[v], nb)
            };
            let left_sigs: Vec<_> = (0..self.a.n).map(|v| sig(self.a, &c.left, v)).collect();
            let right_sigs: Vec<_> = (0..self.b.n).map(|v| sig(self.b, &c.right, v)).collect();
            let mut keys: Vec<&(u32, Vec<u32>)> = left_sigs.iter().chain(&right_sigs).collect();
            keys.sort();
            keys.dedup();
            for (id, k) in keys.into_iter().enumerate() {
                table.insert(k.clone(), id as u32);
            }
            c.left = left_sigs.iter().map(|s| table[s]).collect();
            c.right = right_sigs.iter().map(|s| table[s]).collect();
            if !Self::histograms_match(c) {
                return false;
            }
            let now = count(c);
            if now == classes {
                return true;
            }
            classes = now;
        }
    }

    fn individualise(c: &Colouring, v: usize, w: usize) -> Colouring {
        let fresh = c.left.iter().max().map_or(0, |m| m + 1);
        let mut next = c.clone();
        next.left[v] = fresh;
        next.right[w] = fresh;
        next
    }

    fn search(&mut self, c: Colouring) -> Branch {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Branch::Budget;
        }
        // First vertex of g1 in the smallest non-singleton cell.
        let mut size: HashMap<u32, usize> = HashMap::new();
        for &col in &c.left {
            *size.entry(col).or_default() += 1;
        }
        let target = (0..self.a.n)
            .filter(|&v| size[&c.left[v]] > 1)
            .min_by_key(|&v| (size[&c.left[v]], v));
        let Some(v) = target else {
            // Discrete: the colouring is the bijection.
            let mut pos: HashMap<u32, usize> = HashMap::new();
            for (w, &col) in c.right.iter().enumerate() {
                pos.insert(col, w);
            }
            let perm: Vec<u64> = c.left.iter().map(|col| pos[col] as u64).collect();
            return if self.preserves_edges(&perm) {
                Branch::Found(perm)
            } else {
                Branch::Exhausted
            };
        };
        let colour = c.left[v];
        let candidates: Vec<usize> = (0..self.b.n).filter(|&w| c.right[w] == colour).collect();
        for w in candidates {
            let mut next = Self::individualise(&c, v, w);
            if !self.refine(&mut next) {
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Branch::Budget;
                }
                continue;
            }
            match self.search(next) {
                Branch::Exhausted => {}
                done => return done,
            }
        }
        Branch::Exhausted
    }

    fn preserves_edges(&self, perm: &[u64]) -> bool {
        self.a.adj.iter().enumerate().all(|(u, row)| {
            row.iter()
                .all(|&v| self.b.edge(perm[u] as usize, perm[v] as usize))
        })
    }
}

/// Decides `g1 ≅ g2` by exhaustive backtracking.
///
/// Both graphs are vertex-transitive, so vertex 0 may be sent to vertex 0.
pub fn brute_force_isomorphic(
    g1: &CirculantGraph,
    g2: &CirculantGraph,
    node_budget: u64,
) -> Result<OracleResult> {
    if g1.order() != g2.order() {
        return Err(Error::OrderMismatch {
            left: g1.order(),
            right: g2.order(),
        });
    }
    let no = OracleResult {
        outcome: OracleOutcome::No,
        nodes: 0,
    };
    if g1.degree() != g2.degree()
        || !spectra_match(&spectrum_invariant(g1), &spectrum_invariant(g2))
    {
        return Ok(no);
    }
    let a = Dense::new(g1);
    let b = Dense::new(g2);
    if a.local_signature(0) != b.local_signature(0) {
        return Ok(no);
    }
    let mut search = Search {
        a: &a,
        b: &b,
        nodes: 0,
        budget: node_budget,
    };
    let start = Colouring {
        left: vec![0; a.n],
        right: vec![0; b.n],
    };
    let mut root = Search::individualise(&start, 0, 0);
    let outcome = if !search.refine(&mut root) {
        OracleOutcome::No
    } else {
        match search.search(root) {
            Branch::Found(perm) => OracleOutcome::Yes {
                certificate: IsoCertificate { perm },
            },
            Branch::Exhausted => OracleOutcome::No,
            Branch::Budget => OracleOutcome::Exceeded {
                nodes: search.nodes,
            },
        }
    };
    Ok(OracleResult {
        outcome,
        nodes: search.nodes,
    })
}

/// `true` iff `cert` maps the edges of `g1` exactly onto those of `g2`.
pub fn verify_certificate(
    g1: &CirculantGraph,
    g2: &CirculantGraph,
    cert: &IsoCertificate,
) -> Result<bool> {
    if g1.order() != g2.order() {
        return Err(Error::OrderMismatch {
            left: g1.order(),
            right: g2.order(),
        });
    }
    let n = g1.order();
    let mut seen = vec![false; n as usize];
    if cert.perm.len() as u64 != n {
        return Err(Error::NotABijection { n });
    }
    for &x in &cert.perm {
        if x >= n || std::mem::replace(&mut seen[x as usize], true) {
            return Err(Error::NotABijection { n });
        }
    }
    if g1.degree() != g2.degree() {
        return Ok(false);
    }
    let ok = (0..n).all(|u| {
        g1.neighbors(u)
            .iter()
            .all(|&v| g2.has_edge(cert.perm[u as usize], cert.perm[v as usize]))
    });
    Ok(ok)
}

/// Vertex bijection realising a structured verdict.
pub fn witness_to_certificate(verdict: &IsoVerdict, n: Modulus) -> Result<IsoCertificate> {
    let steps: Vec<Step> = match verdict {
        IsoVerdict::Adams { a } => vec![Step::Adams(*a)],
        IsoVerdict::Type2 { r, t } => vec![Step::Theta { r: *r, t: *t }],
        IsoVerdict::Composite {
            oracle_certificate: Some(cert),
            ..
        } => return Ok(cert.clone()),
        IsoVerdict::Composite { path, .. } => path.clone(),
        _ => return Err(Error::NotAWitnessVerdict),
    };
    let mut perm: Vec<u64> = (0..n.get()).collect();
    for step in steps {
        let map = match step {
            Step::Adams(a) => adams_vertex_map(n, a)?,
            Step::Theta { r, t } => theta_vertex_map(&ThetaParams::new(n, r, t)?),
        };
        for x in perm.iter_mut() {
            *x = map[*x as usize];
        }
    }
    Ok(IsoCertificate { perm })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_graph;

    fn g(s: &str) -> CirculantGraph {
        parse_graph(s).unwrap()
    }

    fn check_yes(a: &str, b: &str) {
        let (a, b) = (g(a), g(b));
        let res = brute_force_isomorphic(&a, &b, DEFAULT_ORACLE_BUDGET).unwrap();
        match res.outcome {
            OracleOutcome::Yes { certificate } => {
                assert!(verify_certificate(&a, &b, &certificate).unwrap())
            }
            other => panic!("{a} vs {b}: {other:?}"),
        }
    }

    fn check_no(a: &str, b: &str) {
        let res = brute_force_isomorphic(&g(a), &g(b), DEFAULT_ORACLE_BUDGET).unwrap();
        assert_eq!(res.outcome, OracleOutcome::No, "{a} vs {b}");
    }

    #[test]
    fn known_isomorphic_pairs() {
        check_yes("C27(1,3,8,10)", "C27(2,3,7,11)");
        check_yes("C54(1,3,17,19)", "C54(5,13,21,23)");
        check_yes("C5(1)", "C5(2)");
        check_yes("C81(1,3,26,28)", "C81(3,10,17,37)");
    }

    #[test]
    fn known_non_isomorphic_pairs() {
        check_no("C6(1)", "C6(1,2)");
        check_no("C8(1,4)", "C8(2,4)");
        // Same degree and connected, different gcd profile.
        check_no("C12(1,2)", "C12(1,5)");
        check_no("C16(1,2)", "C16(1,4)");
    }

    #[test]
    fn order_mismatch() {
        assert_eq!(
            brute_force_isomorphic(&g("C6(1)"), &g("C7(1)"), 10),
            Err(Error::OrderMismatch { left: 6, right: 7 })
        );
    }

    #[test]
    fn tiny_budget_is_reported() {
        let res = brute_force_isomorphic(&g("C54(1,3,17,19)"), &g("C54(5,13,21,23)"), 1).unwrap();
        assert!(matches!(res.outcome, OracleOutcome::Exceeded { .. }));
    }

    #[test]
    fn certificates() {
        let a = g("C81(1,3,26,28)");
        let id = IsoCertificate {
            perm: (0..81).collect(),
        };
        assert!(verify_certificate(&a, &a, &id).unwrap());
        assert!(!verify_certificate(&a, &g("C81(3,10,17,37)"), &id).unwrap());

        let p = ThetaParams::new(a.modulus(), 3, 3).unwrap();
        let theta = IsoCertificate {
            perm: theta_vertex_map(&p),
        };
        assert!(verify_certificate(&a, &g("C81(3,10,17,37)"), &theta).unwrap());

        let five = IsoCertificate {
            perm: adams_vertex_map(Modulus::new(54).unwrap(), 5).unwrap(),
        };
        assert!(verify_certificate(&g("C54(5,13,21,23)"), &g("C54(3,7,11,25)"), &five).unwrap());

        let bad = IsoCertificate { perm: vec![0; 81] };
        assert_eq!(
            verify_certificate(&a, &a, &bad),
            Err(Error::NotABijection { n: 81 })
        );
    }

    #[test]
    fn witness_certificates() {
        let n = Modulus::new(81).unwrap();
        let id = witness_to_certificate(&IsoVerdict::Adams { a: 1 }, n).unwrap();
        assert_eq!(id.perm, (0..81).collect::<Vec<_>>());

        let n54 = Modulus::new(54).unwrap();
        let v = IsoVerdict::Composite {
            path: vec![Step::Theta { r: 3, t: 2 }, Step::Adams(7)],
            oracle_certificate: None,
        };
        let cert = witness_to_certificate(&v, n54).unwrap();
        assert!(verify_certificate(&g("C54(1,3,17,19)"), &g("C54(5,13,21,23)"), &cert).unwrap());

        let unknown = IsoVerdict::Unknown { nodes: 5 };
        assert_eq!(
            witness_to_certificate(&unknown, n54),
            Err(Error::NotAWitnessVerdict)
        );
    }
}
