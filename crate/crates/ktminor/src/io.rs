//! Graph input and output: graph6 lines or adjacency-list JSON.

use std::fs;
use std::io::{self, Read};
use std::path::Path;

use ktminor_core::{graph6, Graph};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("reading {path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("line {line}: {source}")]
    Graph6 {
        line: usize,
        source: ktminor_core::Error,
    },
    #[error("invalid JSON graph: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid graph: {0}")]
    Graph(#[from] ktminor_core::Error),
    #[error("no graph in input")]
    Empty,
}

/// `{"n": 4, "edges": [[0, 1], [1, 2]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonGraph {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl JsonGraph {
    pub fn from_graph(g: &Graph) -> Self {
        JsonGraph {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, IoError> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        Ok(Graph::from_edges(self.n, &edges)?)
    }
}

/// Parses one or more graphs. Input whose first non-blank byte is `{` or `[`
/// is tried as JSON first (one object, an array of objects, or one object per
/// line); graph6 lines may also start with those bytes, so unparseable JSON
/// falls back to graph6, one graph per non-blank line.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>, IoError> {
    let trimmed = text.trim_start();
    let json = match trimmed.as_bytes().first() {
        None => return Err(IoError::Empty),
        Some(b'[') => Some(serde_json::from_str::<Vec<JsonGraph>>(trimmed)),
        Some(b'{') => Some(
            serde_json::Deserializer::from_str(trimmed)
                .into_iter::<JsonGraph>()
                .collect::<Result<Vec<_>, _>>(),
        ),
        Some(_) => None,
    };
    let graphs: Vec<Graph> = match json {
        Some(Ok(items)) => items.iter().map(JsonGraph::to_graph).collect::<Result<_, _>>()?,
        Some(Err(e)) => parse_graph6_lines(text).map_err(|_| IoError::Json(e))?,
        None => parse_graph6_lines(text)?,
    };
    if graphs.is_empty() {
        return Err(IoError::Empty);
    }
    Ok(graphs)
}

fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, IoError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| graph6::decode(l.trim()).map_err(|source| IoError::Graph6 { line: i + 1, source }))
        .collect()
}

/// Reads a file, or standard input for `-`.
pub fn read_input(path: &Path) -> Result<String, IoError> {
    let err = |source| IoError::Read {
        path: path.display().to_string(),
        source,
    };
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(err)
    }
}

pub fn read_graphs(path: &Path) -> Result<Vec<Graph>, IoError> {
    parse_graphs(&read_input(path)?)
}

/// Output encodings for generated graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Json,
}

pub fn format_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => graph6::encode(g),
        GraphFormat::Json => serde_json::to_string(&JsonGraph::from_graph(g)).expect("plain data serializes"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ktminor_core::graph::complete_graph;

    #[test]
    fn detects_formats() {
        let k3 = complete_graph(3).unwrap();
        assert_eq!(parse_graphs("Bw\n\nBw\n").unwrap(), vec![k3.clone(), k3.clone()]);
        assert_eq!(parse_graphs(r#"{"n":3,"edges":[[0,1],[1,2],[0,2]]}"#).unwrap(), vec![k3.clone()]);
        assert_eq!(
            parse_graphs("{\"n\":3,\"edges\":[[0,1],[1,2],[0,2]]}\n{\"n\":1,\"edges\":[]}\n").unwrap().len(),
            2
        );
        assert_eq!(parse_graphs(r#" [{"n":2,"edges":[[0,1]]}]"#).unwrap()[0].edge_count(), 1);
    }

    #[test]
    fn reports_errors() {
        assert!(matches!(parse_graphs("   \n"), Err(IoError::Empty)));
        assert!(matches!(parse_graphs("Bw\nB!\n"), Err(IoError::Graph6 { line: 2, .. })));
        assert!(matches!(parse_graphs(r#"{"n":2,"edges":[[0,2]]}"#), Err(IoError::Graph(_))));
        assert!(matches!(parse_graphs(r#"{"n":2}"#), Err(IoError::Json(_))));
    }

    #[test]
    fn json_round_trip() {
        let g = complete_graph(5).unwrap();
        let text = format_graph(&g, GraphFormat::Json);
        assert_eq!(parse_graphs(&text).unwrap(), vec![g.clone()]);
        assert_eq!(format_graph(&g, GraphFormat::Graph6), graph6::encode(&g));
    }
}
