//! Type-2 isomorphic families of order `np³` with respect to `r = p`.
//!
//! For `d_i = (i-1)·x·p·n + x + y·p` the member `R_i` holds
//! `k·np² ± d_i` for `k = 0..p-1`, `np³ - d_i` and a block of multiples of
//! `p` (by default `{p, np³ - p}`). `Θ_{np³,p,n}` sends `R_i` to `R_{i+1}`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::{adams_orbit, type2_group};
use crate::text::render_full;
use crate::transforms::theta_graph;
use crate::zmod::{
    gcd, gcd_profile, reflexive_reduce, spectra_match, spectrum_invariant, CirculantGraph, Modulus,
};

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// `(p, n, x, y)` with `p` prime, `1 <= x <= p-1`, `0 <= y <= np-1` and
/// `1 <= x + yp <= np² - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub p: u64,
    pub n: u64,
    pub x: u64,
    pub y: u64,
}

impl FamilyParams {
    pub fn new(p: u64, n: u64, x: u64, y: u64) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidFamilyParams(msg));
        if !is_prime(p) {
            return bad(format!("p = {p} is not prime"));
        }
        if n == 0 {
            return bad("n must be positive".into());
        }
        if !(1..p).contains(&x) {
            return bad(format!("x = {x} outside 1..={}", p - 1));
        }
        if y > n * p - 1 {
            return bad(format!("y = {y} exceeds np - 1 = {}", n * p - 1));
        }
        let s = x + y * p;
        if s > n * p * p - 1 {
            return bad(format!("x + yp = {s} exceeds np² - 1 = {}", n * p * p - 1));
        }
        // np³ >= 8 > 3, so the order is always a valid modulus.
        Ok(FamilyParams { p, n, x, y })
    }

    /// `np³`.
    pub fn order(&self) -> u64 {
        self.n * self.p.pow(3)
    }

    /// `x + yp`.
    pub fn seed(&self) -> u64 {
        self.x + self.y * self.p
    }

    fn modulus(&self) -> Modulus {
        Modulus::new(self.order()).expect("np³ >= 8")
    }
}

/// Family parameters with the multiples-of-`p` block `{p·p_j, np³ - p·p_j}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtendedParams {
    pub base: FamilyParams,
    /// `p_1 < p_2 < ...` with `gcd = 1`.
    pub multiples: Vec<u64>,
}

impl ExtendedParams {
    pub fn new(base: FamilyParams, multiples: Vec<u64>) -> Result<Self> {
        let ep = Self::relaxed(base, multiples)?;
        if ep.multiples.iter().fold(0, |acc, &q| gcd(acc, q)) != 1 {
            return Err(Error::GcdNotOne(ep.multiples));
        }
        Ok(ep)
    }

    /// Skips the `gcd = 1` hypothesis. Some worked examples use a single
    /// multiple such as `{2}`.
    pub fn relaxed(base: FamilyParams, mut multiples: Vec<u64>) -> Result<Self> {
        multiples.sort_unstable();
        multiples.dedup();
        if multiples.is_empty() || multiples[0] == 0 {
            return Err(Error::InvalidFamilyParams(
                "multiples must be positive and nonempty".into(),
            ));
        }
        let big_n = base.order();
        if let Some(q) = multiples
            .iter()
            .find(|&&q| (base.p * q).is_multiple_of(big_n))
        {
            return Err(Error::DegenerateSet(format!("p·{q} is 0 modulo {big_n}")));
        }
        Ok(ExtendedParams { base, multiples })
    }
}

impl From<FamilyParams> for ExtendedParams {
    fn from(base: FamilyParams) -> Self {
        ExtendedParams {
            base,
            multiples: vec![1],
        }
    }
}

/// `d_i = (i-1)·x·p·n + x + y·p (mod np³)`.
pub fn family_base_jump(fp: &FamilyParams, i: u64) -> Result<u64> {
    if !(1..=fp.p).contains(&i) {
        return Err(Error::BadIndex { i, p: fp.p });
    }
    Ok(((i - 1) * fp.x * fp.p * fp.n + fp.seed()) % fp.order())
}

/// The `±d_i` block `{k·np² ± d_i : k = 0..p-1} ∪ {np³ - d_i}`.
fn d_block(fp: &FamilyParams, i: u64) -> Result<BTreeSet<u64>> {
    let d = family_base_jump(fp, i)?;
    let big_n = fp.order();
    let step = fp.n * fp.p * fp.p;
    let mut out = BTreeSet::new();
    for k in 0..fp.p {
        out.insert((k * step + d) % big_n);
        out.insert((k * step + big_n - d) % big_n);
    }
    out.insert((big_n - d) % big_n);
    Ok(out)
}

/// Full residue set of `R_i` before reduction.
pub fn extended_full_set(ep: &ExtendedParams, i: u64) -> Result<BTreeSet<u64>> {
    let fp = &ep.base;
    let big_n = fp.order();
    let block = d_block(fp, i)?;
    if block.len() as u64 != 2 * fp.p {
        return Err(Error::DegenerateSet(format!(
            "±d_{i} block of {fp:?} has {} residues instead of {}",
            block.len(),
            2 * fp.p
        )));
    }
    if let Some(v) = block.iter().find(|&&v| v % fp.p == 0) {
        return Err(Error::DegenerateSet(format!(
            "residue {v} of the ±d_{i} block is a multiple of p"
        )));
    }
    let mut full = block;
    for &q in &ep.multiples {
        let v = (fp.p * q) % big_n;
        full.insert(v);
        full.insert(big_n - v);
    }
    Ok(full)
}

pub fn family_full_set(fp: &FamilyParams, i: u64) -> Result<BTreeSet<u64>> {
    extended_full_set(&(*fp).into(), i)
}

pub fn extended_family_set(ep: &ExtendedParams, i: u64) -> Result<CirculantGraph> {
    let full = extended_full_set(ep, i)?;
    let jumps = reflexive_reduce(full, ep.base.modulus())?;
    Ok(CirculantGraph::new(jumps))
}

/// `C_{np³}(R_i)`.
pub fn family_set(fp: &FamilyParams, i: u64) -> Result<CirculantGraph> {
    extended_family_set(&(*fp).into(), i)
}

/// `[R_1, ..., R_p]`, all distinct.
pub fn extended_family_all(ep: &ExtendedParams) -> Result<Vec<CirculantGraph>> {
    let members = (1..=ep.base.p)
        .map(|i| extended_family_set(ep, i))
        .collect::<Result<Vec<_>>>()?;
    let distinct: BTreeSet<&CirculantGraph> = members.iter().collect();
    if distinct.len() != members.len() {
        return Err(Error::DegenerateSet(format!(
            "members of {:?} coincide",
            ep.base
        )));
    }
    Ok(members)
}

pub fn family_all(fp: &FamilyParams) -> Result<Vec<CirculantGraph>> {
    extended_family_all(&(*fp).into())
}

/// Outcome of [`verify_family`]; only produced when every check passes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub params: FamilyParams,
    pub multiples: Vec<u64>,
    pub order: u64,
    pub members: Vec<CirculantGraph>,
    pub t1: u64,
    pub group_order: u64,
    pub checks: Vec<String>,
}

/// Checks the family claims on explicit members:
/// Θ-cycling, pairwise non-Adam's, the Type-2 group of `R_1` and shared
/// invariants.
pub fn verify_family(ep: &ExtendedParams) -> Result<FamilyReport> {
    let fp = &ep.base;
    let members = extended_family_all(ep)?;
    let p = fp.p as usize;
    let fail = |check: &str, detail: String| Error::TheoremViolation {
        check: check.to_string(),
        detail,
    };

    for (i, g) in members.iter().enumerate() {
        for j in 0..p {
            let got = theta_graph(g, fp.p, j as u64 * fp.n)?;
            let want = &members[(i + j) % p];
            if got.as_ref() != Some(want) {
                return Err(fail(
                    "theta-cycling",
                    format!(
                        "Θ_{{{},{},{}}}({g}) = {:?}, expected {want}",
                        fp.order(),
                        fp.p,
                        j as u64 * fp.n,
                        got.map(|h| h.to_string())
                    ),
                ));
            }
        }
    }

    for (i, g) in members.iter().enumerate() {
        let orbit = adams_orbit(g);
        if let Some(h) = members[i + 1..].iter().find(|h| orbit.contains(h)) {
            return Err(fail(
                "non-adams",
                format!("{g} and {h} are Adam's-isomorphic"),
            ));
        }
    }

    let group = type2_group(&members[0], fp.p)?;
    if group.order != fp.p || group.member_set() != members.iter().cloned().collect() {
        return Err(fail(
            "type2-group",
            format!(
                "group of {} has order {} and members {:?}",
                members[0],
                group.order,
                group
                    .members
                    .iter()
                    .map(|h| h.to_string())
                    .collect::<Vec<_>>()
            ),
        ));
    }

    let profile = gcd_profile(&members[0]);
    let spectrum = spectrum_invariant(&members[0]);
    for g in &members[1..] {
        if gcd_profile(g) != profile || !spectra_match(&spectrum_invariant(g), &spectrum) {
            return Err(fail(
                "invariants",
                format!("{g} differs from {} in gcd profile or spectrum", members[0]),
            ));
        }
    }

    Ok(FamilyReport {
        params: *fp,
        multiples: ep.multiples.clone(),
        order: fp.order(),
        members,
        t1: group.t1,
        group_order: group.order,
        checks: ["theta-cycling", "non-adams", "type2-group", "invariants"]
            .map(String::from)
            .to_vec(),
    })
}

/// `(x', y')` with `x' + y'p = np² - x - yp`; generates the same members.
pub fn complement_params(fp: &FamilyParams) -> FamilyParams {
    FamilyParams {
        p: fp.p,
        n: fp.n,
        x: fp.p - fp.x,
        y: fp.n * fp.p - 1 - fp.y,
    }
}

/// `x + yp = np² - x - yp`. Never holds for valid parameters, since it
/// would force `p | x`.
pub fn is_self_complementary(fp: &FamilyParams) -> bool {
    2 * fp.seed() == fp.n * fp.p * fp.p
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnnexureBlock {
    pub params: FamilyParams,
    pub header: String,
    pub members: Vec<CirculantGraph>,
}

impl AnnexureBlock {
    pub fn render(&self) -> String {
        let mut out = self.header.clone();
        out.push('\n');
        for g in &self.members {
            out.push_str(&render_full(g));
            out.push('\n');
        }
        out
    }
}

/// Blocks for `y = 0..n-1` (outer) and `x = 1..p-1` (inner).
pub fn annexure_blocks(p: u64, n: u64) -> Result<Vec<AnnexureBlock>> {
    let mut blocks = Vec::new();
    for y in 0..n {
        for x in 1..p {
            let fp = match FamilyParams::new(p, n, x, y) {
                Ok(fp) => fp,
                Err(Error::InvalidFamilyParams(_)) if x + y * p >= n * p * p => continue,
                Err(e) => return Err(e),
            };
            let big_n = fp.order();
            let header = format!(
                "T2_{{{big_n},{p}}}(C_{{{big_n}}}(R^{{{big_n},{}}}_i)), p = {p}, x = {x}, y = {y} and n = {n}.",
                fp.seed()
            );
            blocks.push(AnnexureBlock {
                params: fp,
                header,
                members: family_all(&fp)?,
            });
        }
    }
    Ok(blocks)
}

pub fn annexure_listing(p: u64, n: u64) -> Result<String> {
    let blocks = annexure_blocks(p, n)?;
    Ok(blocks
        .iter()
        .map(AnnexureBlock::render)
        .collect::<Vec<_>>()
        .join("\n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_graph;

    fn g(s: &str) -> CirculantGraph {
        parse_graph(s).unwrap()
    }

    fn fp(p: u64, n: u64, x: u64, y: u64) -> FamilyParams {
        FamilyParams::new(p, n, x, y).unwrap()
    }

    #[test]
    fn param_validation() {
        assert!(FamilyParams::new(4, 1, 1, 0).is_err());
        assert!(FamilyParams::new(3, 1, 0, 0).is_err());
        assert!(FamilyParams::new(3, 1, 3, 0).is_err());
        assert!(FamilyParams::new(3, 1, 1, 3).is_err());
        assert!(FamilyParams::new(3, 0, 1, 0).is_err());
        assert!(FamilyParams::new(3, 1, 2, 2).is_ok());
    }

    #[test]
    fn base_jumps() {
        assert_eq!(family_base_jump(&fp(3, 1, 1, 0), 1).unwrap(), 1);
        assert_eq!(family_base_jump(&fp(3, 1, 1, 0), 2).unwrap(), 4);
        assert_eq!(family_base_jump(&fp(7, 5, 3, 2), 3).unwrap(), 227);
        assert_eq!(
            family_base_jump(&fp(3, 1, 1, 0), 4),
            Err(Error::BadIndex { i: 4, p: 3 })
        );
    }

    #[test]
    fn family_sets() {
        assert_eq!(family_set(&fp(3, 1, 1, 0), 1).unwrap(), g("C27(1,3,8,10)"));
        assert_eq!(family_set(&fp(3, 2, 2, 1), 1).unwrap(), g("C54(3,5,13,23)"));
        assert_eq!(
            family_set(&fp(7, 5, 3, 2), 2).unwrap(),
            g("C1715(7,122,123,367,368,612,613,857)")
        );
        let full = family_full_set(&fp(5, 2, 3, 4), 2).unwrap();
        assert_eq!(full.len(), 12);
        assert!(full.contains(&5) && full.contains(&245));
    }

    #[test]
    fn family_all_examples() {
        assert_eq!(
            family_all(&fp(3, 3, 1, 2)).unwrap(),
            vec![
                g("C81(3,7,20,34)"),
                g("C81(3,11,16,38)"),
                g("C81(2,3,25,29)")
            ]
        );
        assert_eq!(
            family_all(&fp(2, 2, 1, 0)).unwrap(),
            vec![g("C16(1,2,7)"), g("C16(2,3,5)")]
        );
        // d_1 = n makes both members coincide.
        assert!(matches!(
            family_all(&fp(2, 1, 1, 0)),
            Err(Error::DegenerateSet(_))
        ));
    }

    #[test]
    fn extended_sets() {
        assert_eq!(
            ExtendedParams::new(fp(3, 2, 1, 0), vec![2]),
            Err(Error::GcdNotOne(vec![2]))
        );
        let ep = ExtendedParams::relaxed(fp(3, 2, 1, 0), vec![2]).unwrap();
        assert_eq!(extended_family_set(&ep, 1).unwrap(), g("C54(1,6,17,19)"));
        assert_eq!(verify_family(&ep).unwrap().group_order, 3);
        assert_eq!(
            extended_family_all(&ep).unwrap(),
            vec![
                g("C54(1,6,17,19)"),
                g("C54(6,7,11,25)"),
                g("C54(5,6,13,23)")
            ]
        );
        let ep = ExtendedParams::new(fp(3, 2, 1, 0), vec![1]).unwrap();
        assert_eq!(extended_family_set(&ep, 1).unwrap(), g("C54(1,3,17,19)"));
        let ep = ExtendedParams::new(fp(2, 6, 1, 0), vec![1]).unwrap();
        assert_eq!(
            extended_family_all(&ep).unwrap(),
            vec![g("C48(1,2,23)"), g("C48(2,11,13)")]
        );
        assert_eq!(
            ExtendedParams::new(fp(3, 2, 1, 0), vec![2, 4]),
            Err(Error::GcdNotOne(vec![2, 4]))
        );
    }

    #[test]
    fn verify_examples() {
        let report = verify_family(&fp(3, 3, 1, 0).into()).unwrap();
        assert_eq!(
            report.members,
            vec![
                g("C81(1,3,26,28)"),
                g("C81(3,10,17,37)"),
                g("C81(3,8,19,35)")
            ]
        );
        assert_eq!(report.group_order, 3);
        assert_eq!(report.t1, 3);

        let report = verify_family(&fp(5, 1, 1, 0).into()).unwrap();
        assert_eq!(report.group_order, 5);

        let a: BTreeSet<_> = family_all(&fp(3, 1, 1, 0)).unwrap().into_iter().collect();
        let b: BTreeSet<_> = family_all(&fp(3, 1, 2, 0)).unwrap().into_iter().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn complements() {
        assert_eq!(complement_params(&fp(3, 1, 1, 0)), fp(3, 1, 2, 2));
        assert_eq!(complement_params(&fp(3, 2, 1, 0)), fp(3, 2, 2, 5));
        for q in [fp(3, 1, 1, 0), fp(3, 2, 1, 0), fp(5, 2, 3, 7)] {
            let c = complement_params(&q);
            assert_eq!(family_all(&q).unwrap(), family_all(&c).unwrap());
            assert!(!is_self_complementary(&q));
        }
        // 2(x + yp) = np² forces p | x, so no parameter tuple is its own complement.
        for n in 1..6 {
            for y in 0..2 * n {
                let q = fp(2, n, 1, y);
                assert!(!is_self_complementary(&q));
                assert_ne!(complement_params(&q), q);
            }
        }
    }

    #[test]
    fn annexure_shape() {
        let blocks = annexure_blocks(3, 2).unwrap();
        let seeds: Vec<u64> = blocks.iter().map(|b| b.params.seed()).collect();
        assert_eq!(seeds, vec![1, 2, 4, 5]);
        assert_eq!(annexure_blocks(3, 1).unwrap().len(), 2);
        assert_eq!(annexure_blocks(5, 1).unwrap().len(), 4);
        let text = annexure_listing(3, 1).unwrap();
        assert!(text.starts_with(
            "T2_{27,3}(C_{27}(R^{27,1}_i)), p = 3, x = 1, y = 0 and n = 1.\n\
             C27(1,3,8,10,17,19,24,26)\n\
             C27(3,4,5,13,14,22,23,24)\n\
             C27(2,3,7,11,16,20,24,25)\n"
        ));
    }
}
