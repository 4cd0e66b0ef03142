//! Adam's multiplier maps `φ_{n,a}` and the Type-2 transformation `Θ_{n,r,t}`.
//!
//! `Θ_{n,r,t}` with `m = gcd(n, r) > 1` sends `x = qm + j` (`0 <= j < m`)
//! to `x + j·t·m (mod n)`. It only depends on `m`, is a bijection of `Z_n`,
//! fixes every multiple of `m`, and composes additively in `t` modulo `n/m`.
//! Applied to the full connection set of `C_n(R)` it yields another
//! circulant graph exactly when the image is closed under negation.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::zmod::{
    expand_full, gcd, reflexive_reduce, units, CirculantGraph, FullConnectionSet, Modulus,
};

/// Validated `(n, r, t)` for `Θ_{n,r,t}`; `t` is normalised modulo `n/m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThetaParams {
    n: Modulus,
    r: u64,
    m: u64,
    t: u64,
}

impl ThetaParams {
    pub fn new(n: Modulus, r: u64, t: u64) -> Result<Self> {
        let m = gcd(n.get(), r % n.get());
        if m == 1 || r.is_multiple_of(n.get()) {
            return Err(Error::InvalidR { r, n: n.get() });
        }
        let period = n.get() / m;
        Ok(ThetaParams {
            n,
            r,
            m,
            t: t % period,
        })
    }

    pub fn modulus(&self) -> Modulus {
        self.n
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// `n / m`, the number of distinct shifts.
    pub fn shift_count(&self) -> u64 {
        self.n.get() / self.m
    }

    pub fn with_shift(&self, t: u64) -> Self {
        ThetaParams {
            t: t % self.shift_count(),
            ..*self
        }
    }
}

#[inline]
pub fn theta_residue(x: u64, p: &ThetaParams) -> u64 {
    let n = p.n.get();
    let x = x % n;
    let j = x % p.m;
    // j < m and t < n/m, so j·t·m < n·m: no overflow for any sane order.
    (x + j * p.t * p.m) % n
}

/// Image of every residue in `s`, in the same order as `s`.
pub fn theta_row(s: &FullConnectionSet, p: &ThetaParams) -> Vec<u64> {
    s.iter().map(|x| theta_residue(x, p)).collect()
}

pub fn theta_set(s: &FullConnectionSet, p: &ThetaParams) -> BTreeSet<u64> {
    s.iter().map(|x| theta_residue(x, p)).collect()
}

/// `s == -s (mod n)`: the symmetric equidistance condition.
pub fn is_symmetric(s: &BTreeSet<u64>, n: Modulus) -> bool {
    s.iter().all(|&x| s.contains(&n.neg(x)))
}

/// Full description of `Θ_{n,r,t}(C_n(R))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaImage {
    pub params: ThetaParams,
    /// Images of the full connection set, column order = ascending source residue.
    pub residues: Vec<u64>,
    pub symmetric: bool,
    pub graph: Option<CirculantGraph>,
    /// Whether `r` itself (folded into `[1, n/2]`) is a jump of the source graph.
    pub r_in_jumps: bool,
}

pub fn theta_image(g: &CirculantGraph, r: u64, t: u64) -> Result<ThetaImage> {
    let params = ThetaParams::new(g.modulus(), r, t)?;
    Ok(theta_image_with(g, &params))
}

pub(crate) fn theta_image_with(g: &CirculantGraph, params: &ThetaParams) -> ThetaImage {
    let full = g.full_set();
    let residues = theta_row(&full, params);
    let set: BTreeSet<u64> = residues.iter().copied().collect();
    let symmetric = is_symmetric(&set, g.modulus());
    let graph = if symmetric {
        // Θ is a bijection fixing 0, so the image never contains 0.
        Some(CirculantGraph::new(
            reflexive_reduce(set, g.modulus()).expect("theta image avoids 0"),
        ))
    } else {
        None
    };
    ThetaImage {
        params: *params,
        residues,
        symmetric,
        graph,
        r_in_jumps: g.jumps().contains(params.r()),
    }
}

/// `Θ_{n,r,t}(C_n(R))` when the image is circulant.
pub fn theta_graph(g: &CirculantGraph, r: u64, t: u64) -> Result<Option<CirculantGraph>> {
    Ok(theta_image(g, r, t)?.graph)
}

/// Smallest `t >= 1` with `Θ_{n,r,t}(S) = S` as a set. Divides `n/m`.
pub fn theta_set_period(g: &CirculantGraph, r: u64) -> Result<u64> {
    let base = ThetaParams::new(g.modulus(), r, 0)?;
    let full = g.full_set();
    let period = (1..=base.shift_count())
        .find(|&t| theta_set(&full, &base.with_shift(t)) == *full.residues())
        .expect("t = n/m is the identity");
    Ok(period)
}

/// `φ_{n,a}(C_n(R)) = C_n(aR)`.
pub fn adams_image(g: &CirculantGraph, a: u64) -> Result<CirculantGraph> {
    let n = g.modulus();
    if gcd(n.get(), a % n.get()) != 1 {
        return Err(Error::NotAUnit { a, n: n.get() });
    }
    let a = a % n.get();
    let jumps = reflexive_reduce(g.jumps().as_slice().iter().map(|&r| a * r), n)
        .expect("a unit multiple of a nonzero residue is nonzero");
    Ok(CirculantGraph::new(jumps))
}

/// Smallest unit `a` with `φ_{n,a}(g) = h`.
pub fn adams_witness(g: &CirculantGraph, h: &CirculantGraph) -> Option<u64> {
    if g.order() != h.order() || g.jumps().len() != h.jumps().len() {
        return None;
    }
    units(g.modulus())
        .into_iter()
        .find(|&a| adams_image(g, a).as_ref() == Ok(h))
}

/// Vertex map `x ↦ a·x` of an Adam's isomorphism.
pub fn adams_vertex_map(n: Modulus, a: u64) -> Result<Vec<u64>> {
    if gcd(n.get(), a % n.get()) != 1 {
        return Err(Error::NotAUnit { a, n: n.get() });
    }
    Ok((0..n.get()).map(|x| (a % n.get()) * x % n.get()).collect())
}

/// Vertex map `v_x ↦ u_{x + j·t·m}` of `Θ_{n,r,t}`.
pub fn theta_vertex_map(p: &ThetaParams) -> Vec<u64> {
    (0..p.n.get()).map(|x| theta_residue(x, p)).collect()
}

/// Final column of a theta table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RowClass {
    Identity,
    #[serde(rename = "Type-2")]
    Type2,
    #[serde(rename = "Type-1")]
    Type1,
    #[serde(rename = "NS")]
    NonSymmetric,
}

impl fmt::Display for RowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowClass::Identity => "Identity",
            RowClass::Type2 => "Type-2",
            RowClass::Type1 => "Type-1",
            RowClass::NonSymmetric => "NS",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaRow {
    pub t: u64,
    pub values: Vec<u64>,
    pub class: RowClass,
    pub graph: Option<CirculantGraph>,
}

/// `Θ_{n,r,t}` applied to the full connection set for every `t` up to the
/// set period, as laid out in the classic calculation tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaTable {
    pub graph: CirculantGraph,
    pub r: u64,
    pub m: u64,
    pub shift_count: u64,
    pub columns: Vec<u64>,
    pub rows: Vec<ThetaRow>,
}

pub fn theta_table(g: &CirculantGraph, r: u64) -> Result<ThetaTable> {
    let base = ThetaParams::new(g.modulus(), r, 0)?;
    let period = theta_set_period(g, r)?;
    let full: FullConnectionSet = expand_full(g.jumps());
    let rows = (0..period)
        .map(|t| {
            let img = theta_image_with(g, &base.with_shift(t));
            let class = match &img.graph {
                None => RowClass::NonSymmetric,
                Some(h) if h == g => RowClass::Identity,
                Some(h) if adams_witness(g, h).is_some() => RowClass::Type1,
                Some(_) => RowClass::Type2,
            };
            ThetaRow {
                t,
                values: img.residues,
                class,
                graph: img.graph,
            }
        })
        .collect();
    Ok(ThetaTable {
        graph: g.clone(),
        r,
        m: base.m(),
        shift_count: base.shift_count(),
        columns: full.iter().collect(),
        rows,
    })
}

impl ThetaTable {
    /// Whitespace separated text layout: a header row of source residues,
    /// then one row per shift ending in the row class.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let cols: Vec<String> = self.columns.iter().map(u64::to_string).collect();
        out.push_str(&format!("t {} type\n", cols.join(" ")));
        for row in &self.rows {
            let vals: Vec<String> = row.values.iter().map(u64::to_string).collect();
            out.push_str(&format!("{} {} {}\n", row.t, vals.join(" "), row.class));
        }
        out
    }
}
