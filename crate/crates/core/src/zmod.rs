//! Residue arithmetic modulo `n`, connection sets and circulant graphs.
//!
//! A circulant graph `C_n(R)` lives on `Z_n`; vertex `i` is joined to
//! `i + r (mod n)` for every jump `r`. Jump sets are stored in canonical
//! form: every value folded into `[1, n/2]`, sorted, without repeats.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Spectra are rounded to this grid before comparison.
pub const SPECTRUM_TOLERANCE: f64 = 1e-9;

#[inline]
pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Order of a circulant graph. Always at least 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(n: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidModulus(n));
        }
        Ok(Modulus(n))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn half(self) -> u64 {
        self.0 / 2
    }

    /// Folds a residue into `[0, n/2]`.
    #[inline]
    pub fn fold(self, value: u64) -> u64 {
        let v = value % self.0;
        v.min(self.0 - v)
    }

    #[inline]
    pub fn neg(self, value: u64) -> u64 {
        (self.0 - value % self.0) % self.0
    }
}

impl<'de> Deserialize<'de> for Modulus {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let n = u64::deserialize(d)?;
        Modulus::new(n).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Canonical connection set `R = {r_1 < ... < r_k}` with `1 <= r_i <= n/2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JumpSet {
    n: Modulus,
    jumps: Vec<u64>,
}

impl JumpSet {
    /// Accepts only an already canonical list.
    pub fn new(n: Modulus, jumps: Vec<u64>) -> Result<Self> {
        if jumps.is_empty() {
            return Err(Error::EmptyJumpSet);
        }
        let canonical =
            jumps.windows(2).all(|w| w[0] < w[1]) && jumps.iter().all(|&r| r >= 1 && r <= n.half());
        if !canonical {
            return Err(Error::NotCanonical { n: n.get(), jumps });
        }
        Ok(JumpSet { n, jumps })
    }

    #[inline]
    pub fn modulus(&self) -> Modulus {
        self.n
    }

    #[inline]
    pub fn as_slice(&self) -> &[u64] {
        &self.jumps
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.jumps.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.jumps.is_empty()
    }

    pub fn contains(&self, r: u64) -> bool {
        self.jumps.binary_search(&self.n.fold(r)).is_ok()
    }
}

/// Full symmetric residue set `R ∪ (n - R)`, never containing 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FullConnectionSet {
    n: Modulus,
    residues: BTreeSet<u64>,
}

impl FullConnectionSet {
    pub fn new(n: Modulus, residues: BTreeSet<u64>) -> Result<Self> {
        if residues.is_empty() {
            return Err(Error::EmptyJumpSet);
        }
        if let Some(&bad) = residues.iter().find(|&&s| s == 0 || s >= n.get()) {
            return Err(Error::ZeroJump {
                value: bad,
                n: n.get(),
            });
        }
        if !residues.iter().all(|&s| residues.contains(&n.neg(s))) {
            return Err(Error::NotSymmetric { n: n.get() });
        }
        Ok(FullConnectionSet { n, residues })
    }

    #[inline]
    pub fn modulus(&self) -> Modulus {
        self.n
    }

    #[inline]
    pub fn residues(&self) -> &BTreeSet<u64> {
        &self.residues
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn contains(&self, s: u64) -> bool {
        self.residues.contains(&(s % self.n.get()))
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.residues.iter().copied()
    }
}

/// Reduces every value mod `n`, folds values above `n/2` onto `n - v`,
/// then sorts and deduplicates.
pub fn reflexive_reduce<I>(values: I, n: Modulus) -> Result<JumpSet>
where
    I: IntoIterator<Item = u64>,
{
    let mut jumps = BTreeSet::new();
    for value in values {
        let folded = n.fold(value);
        if folded == 0 {
            return Err(Error::ZeroJump { value, n: n.get() });
        }
        jumps.insert(folded);
    }
    JumpSet::new(n, jumps.into_iter().collect())
}

pub fn expand_full(jumps: &JumpSet) -> FullConnectionSet {
    let n = jumps.modulus();
    let residues = jumps
        .as_slice()
        .iter()
        .flat_map(|&r| [r, n.get() - r])
        .collect();
    FullConnectionSet { n, residues }
}

/// `C_n(R)`. Equality is equality of order and canonical jump set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CirculantGraph {
    jumps: JumpSet,
}

impl CirculantGraph {
    pub fn new(jumps: JumpSet) -> Self {
        CirculantGraph { jumps }
    }

    /// Builds `C_n(values)` after reflexive reduction.
    pub fn from_values<I>(n: u64, values: I) -> Result<Self>
    where
        I: IntoIterator<Item = u64>,
    {
        let n = Modulus::new(n)?;
        Ok(CirculantGraph::new(reflexive_reduce(values, n)?))
    }

    #[inline]
    pub fn modulus(&self) -> Modulus {
        self.jumps.modulus()
    }

    #[inline]
    pub fn order(&self) -> u64 {
        self.jumps.modulus().get()
    }

    #[inline]
    pub fn jumps(&self) -> &JumpSet {
        &self.jumps
    }

    pub fn full_set(&self) -> FullConnectionSet {
        expand_full(&self.jumps)
    }

    /// Vertex degree; the `n/2` jump contributes a single edge.
    pub fn degree(&self) -> usize {
        self.full_set().len()
    }

    /// `gcd(n, r_1, ..., r_k) == 1`.
    pub fn is_connected(&self) -> bool {
        self.jumps
            .as_slice()
            .iter()
            .fold(self.order(), |acc, &r| gcd(acc, r))
            == 1
    }

    pub fn has_edge(&self, u: u64, v: u64) -> bool {
        let n = self.modulus();
        let d = n.fold((v + n.get() - u % n.get()) % n.get());
        d != 0 && self.jumps.as_slice().binary_search(&d).is_ok()
    }

    /// Neighbours of `v`, ascending.
    pub fn neighbors(&self, v: u64) -> Vec<u64> {
        let n = self.order();
        let mut out: Vec<u64> = self.full_set().iter().map(|s| (v + s) % n).collect();
        out.sort_unstable();
        out
    }

    /// Adjacency lists for every vertex.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let full: Vec<u64> = self.full_set().iter().collect();
        (0..n)
            .map(|v| {
                let mut row: Vec<usize> = full.iter().map(|&s| ((v + s) % n) as usize).collect();
                row.sort_unstable();
                row
            })
            .collect()
    }
}

impl fmt::Display for CirculantGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}(", self.order())?;
        for (i, r) in self.jumps.as_slice().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: u64,
    jumps: Vec<u64>,
}

impl Serialize for CirculantGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.order(),
            jumps: self.jumps.as_slice().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CirculantGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        CirculantGraph::from_values(repr.n, repr.jumps).map_err(serde::de::Error::custom)
    }
}

/// Sorted multiset `{gcd(n, r) : r in R}`. Equal for isomorphic graphs.
pub fn gcd_profile(g: &CirculantGraph) -> Vec<u64> {
    let n = g.order();
    let mut profile: Vec<u64> = g.jumps().as_slice().iter().map(|&r| gcd(n, r)).collect();
    profile.sort_unstable();
    profile
}

/// Length `n / gcd(n, r)` of each of the `gcd(n, r)` cycles of period `r`.
pub fn periodic_cycle_length(n: Modulus, r: u64) -> u64 {
    n.get() / gcd(n.get(), r)
}

/// Multiplicative units of `Z_n`, ascending.
pub fn units(n: Modulus) -> Vec<u64> {
    (1..n.get()).filter(|&x| gcd(n.get(), x) == 1).collect()
}

/// Eigenvalues `λ_k = Σ_{s ∈ S} cos(2πks/n)` sorted descending and
/// rounded to [`SPECTRUM_TOLERANCE`].
pub fn spectrum_invariant(g: &CirculantGraph) -> Vec<f64> {
    let n = g.order();
    let full: Vec<u64> = g.full_set().iter().collect();
    let mut values: Vec<f64> = (0..n)
        .map(|k| {
            let sum: f64 = full
                .iter()
                .map(|&s| {
                    let phase = ((k * s) % n) as f64 / n as f64;
                    (2.0 * PI * phase).cos()
                })
                .sum();
            let rounded = (sum / SPECTRUM_TOLERANCE).round() * SPECTRUM_TOLERANCE;
            if rounded == 0.0 {
                0.0
            } else {
                rounded
            }
        })
        .collect();
    values.sort_by(|a, b| b.total_cmp(a));
    values
}

/// Elementwise comparison of two rounded spectra. One grid step of slack
/// absorbs values that straddle a rounding boundary.
pub fn spectra_match(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len()
        && a.iter()
            .zip(b)
            .all(|(x, y)| (x - y).abs() <= 1.5 * SPECTRUM_TOLERANCE)
}
