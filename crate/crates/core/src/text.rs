//! Canonical text form `C<n>(<j1>,<j2>,...)`.

use std::collections::BTreeSet;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::zmod::{reflexive_reduce, CirculantGraph, Modulus};

/// Result of parsing, with residues that appeared more than once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: CirculantGraph,
    pub duplicates: Vec<u64>,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", c as char)))
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an unsigned integer".into()));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "integer out of range".into(),
            })
    }

    fn error(&self, msg: String) -> Error {
        Error::Parse { pos: self.pos, msg }
    }
}

/// Parses `C<n>(...)`. Jumps are reflexively reduced, so both the reduced
/// form `C54(1,3,17,19)` and the full form `C54(1,3,17,19,35,37,51,53)`
/// are accepted. `C_54(...)` and `C_{54}(...)` are accepted as well.
pub fn parse_graph_detailed(text: &str) -> Result<ParsedGraph> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    cur.expect(b'C')?;
    let braced = if cur.bytes.get(cur.pos) == Some(&b'_') {
        cur.pos += 1;
        if cur.bytes.get(cur.pos) == Some(&b'{') {
            cur.pos += 1;
            true
        } else {
            false
        }
    } else {
        false
    };
    let n_pos = cur.pos;
    let n = cur.number()?;
    if braced {
        cur.expect(b'}')?;
    }
    let modulus = Modulus::new(n).map_err(|e| Error::Parse {
        pos: n_pos,
        msg: e.to_string(),
    })?;
    cur.expect(b'(')?;
    let mut values = Vec::new();
    loop {
        values.push(cur.number()?);
        cur.skip_ws();
        match cur.bytes.get(cur.pos) {
            Some(b',') => cur.pos += 1,
            Some(b')') => {
                cur.pos += 1;
                break;
            }
            _ => return Err(cur.error("expected `,` or `)`".into())),
        }
    }
    cur.skip_ws();
    if cur.pos != cur.bytes.len() {
        return Err(cur.error("trailing input".into()));
    }

    let mut seen = BTreeSet::new();
    let mut duplicates = Vec::new();
    for &v in &values {
        if !seen.insert(v % n) {
            duplicates.push(v);
        }
    }
    let jumps = reflexive_reduce(values, modulus)?;
    Ok(ParsedGraph {
        graph: CirculantGraph::new(jumps),
        duplicates,
    })
}

pub fn parse_graph(text: &str) -> Result<CirculantGraph> {
    parse_graph_detailed(text).map(|p| p.graph)
}

impl FromStr for CirculantGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_graph(s)
    }
}

/// Canonical text form, e.g. `C81(1,3,26,28)`.
pub fn render_graph(g: &CirculantGraph) -> String {
    g.to_string()
}

/// Text form listing the full symmetric residue set, e.g.
/// `C27(1,3,8,10,17,19,24,26)`.
pub fn render_full(g: &CirculantGraph) -> String {
    let body: Vec<String> = g.full_set().iter().map(|s| s.to_string()).collect();
    format!("C{}({})", g.order(), body.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_reduced_form() {
        let g = parse_graph("C81(1,3,26,28)").unwrap();
        assert_eq!(g.order(), 81);
        assert_eq!(g.jumps().as_slice(), &[1, 3, 26, 28]);
    }

    #[test]
    fn parses_and_reduces_full_form() {
        let g = parse_graph("C54(53,37,35,19,17,3,1,51)").unwrap();
        assert_eq!(g.to_string(), "C54(1,3,17,19)");
        let parsed = parse_graph_detailed("C54(53,37,35,19,17,3,1,51)").unwrap();
        assert!(parsed.duplicates.is_empty());
    }

    #[test]
    fn duplicate_half_jump_warns() {
        let parsed = parse_graph_detailed("C10(5,5)").unwrap();
        assert_eq!(parsed.graph.to_string(), "C10(5)");
        assert_eq!(parsed.duplicates, vec![5]);
    }

    #[test]
    fn accepts_subscript_forms_and_spaces() {
        assert_eq!(
            parse_graph("C_{54}(3, 7, 11, 25)").unwrap().to_string(),
            "C54(3,7,11,25)"
        );
        assert_eq!(
            parse_graph(" C_48(1,2,23) ").unwrap().to_string(),
            "C48(1,2,23)"
        );
    }

    #[test]
    fn reports_positions() {
        match parse_graph("C81(1,3;26)") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_graph("D81(1)"),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(parse_graph("C81()"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("C81(1) x"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph("C2(1)"),
            Err(Error::Parse { pos: 1, .. })
        ));
    }

    #[test]
    fn zero_jump_propagates() {
        assert_eq!(
            parse_graph("C12(1,12)"),
            Err(Error::ZeroJump { value: 12, n: 12 })
        );
    }

    #[test]
    fn full_rendering() {
        let g = parse_graph("C27(1,3,8,10)").unwrap();
        assert_eq!(render_full(&g), "C27(1,3,8,10,17,19,24,26)");
        assert_eq!(parse_graph(&render_full(&g)).unwrap(), g);
    }
}
