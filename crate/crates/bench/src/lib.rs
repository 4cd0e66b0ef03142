//! Shared inputs for the criterion benchmarks.

use circ_iso_core::{parse_graph, CirculantGraph};

/// Isomorphic, but neither Adam's nor Type-2: needs a Θ step and a multiplier.
pub fn composite_pair() -> (CirculantGraph, CirculantGraph) {
    (
        parse_graph("C54(1,3,17,19)").expect("valid"),
        parse_graph("C54(5,13,21,23)").expect("valid"),
    )
}

pub fn order81_graph() -> CirculantGraph {
    parse_graph("C81(1,3,26,28)").expect("valid")
}
