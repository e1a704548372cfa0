//! Parsed fixtures shared by the benchmarks.

use grk_core::{fixtures, GaussCode, MatchedGraph};

pub fn graph(text: &str) -> MatchedGraph {
    MatchedGraph::parse(text).expect("fixture parses")
}

pub fn code(text: &str) -> GaussCode {
    GaussCode::parse(text).expect("fixture parses")
}

pub fn graphs() -> Vec<(&'static str, MatchedGraph)> {
    fixtures::ALL_MATCHED.iter().map(|(n, t)| (*n, graph(t))).collect()
}

pub fn codes() -> Vec<(&'static str, GaussCode)> {
    fixtures::ALL_CODES.iter().map(|(n, t)| (*n, code(t))).collect()
}
