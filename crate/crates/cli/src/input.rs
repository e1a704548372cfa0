//! Reading inputs: files or `-` for stdin, sniffed into one of three kinds.

use std::fs;
use std::io::Read;
use std::path::Path;

use grk_core::{GaussCode, Graph, MatchedGraph};

use crate::CliError;

pub enum Input {
    Matched(MatchedGraph),
    Code(GaussCode),
    Plain(Graph),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Matched(_) => "matched-graph",
            Input::Code(_) => "gauss-code",
            Input::Plain(_) => "graph",
        }
    }
}

pub fn read_text(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Domain(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Domain(format!("{path}: {e}")))
    }
}

fn sniff(path: &str, text: &str) -> &'static str {
    match Path::new(path).extension().and_then(|e| e.to_str()) {
        Some("mg") => return "mg",
        Some("gc") => return "gc",
        Some("graph") => return "graph",
        _ => {}
    }
    for line in text.lines() {
        let mut t = line.split('#').next().unwrap_or("").split_whitespace();
        match (t.next(), t.next(), t.next()) {
            (Some("component:") | Some("component"), _, _) => return "gc",
            (Some("medge"), _, _) => return "mg",
            (Some("vertex"), Some(_), Some("solid" | "hollow")) => return "mg",
            (Some("edge"), Some(_), Some(_)) => return "graph",
            _ => {}
        }
    }
    "mg"
}

pub fn parse_input(path: &str, text: &str) -> Result<Input, CliError> {
    let wrap = |e: grk_core::Error| CliError::Domain(format!("{path}: {e}"));
    Ok(match sniff(path, text) {
        "gc" => Input::Code(GaussCode::parse(text).map_err(wrap)?),
        "graph" => Input::Plain(Graph::parse(text).map_err(wrap)?),
        _ => Input::Matched(MatchedGraph::parse(text).map_err(wrap)?),
    })
}

pub fn matched(path: &str, text: &str) -> Result<MatchedGraph, CliError> {
    match parse_input(path, text)? {
        Input::Matched(g) => Ok(g),
        other => Err(CliError::Domain(format!("{path}: expected a matched graph, found a {}", other.kind()))),
    }
}

pub fn code(path: &str, text: &str) -> Result<GaussCode, CliError> {
    match parse_input(path, text)? {
        Input::Code(d) => Ok(d),
        other => Err(CliError::Domain(format!("{path}: expected a Gauss code, found a {}", other.kind()))),
    }
}

/// The abstract graph of any input; a Gauss code stands for its K inverse.
pub fn graph(path: &str, text: &str) -> Result<Graph, CliError> {
    Ok(match parse_input(path, text)? {
        Input::Matched(g) => g.underlying(),
        Input::Code(d) => grk_core::k_inverse(&d).underlying(),
        Input::Plain(g) => g,
    })
}
