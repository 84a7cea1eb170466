use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::Graph;

/// JSON form of a graph: `{"n": int, "edges": [[u, v], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphRepr {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphRepr {
    fn from(g: &Graph) -> Self {
        GraphRepr {
            n: g.n(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;
    fn try_from(r: GraphRepr) -> Result<Graph> {
        for &[u, v] in &r.edges {
            if u >= v {
                return Err(Error::Parse(format!("edge [{u}, {v}] must satisfy u < v")));
            }
        }
        Graph::from_edges(r.n, r.edges.iter().map(|&[u, v]| (u, v)))
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        Graph::try_from(repr).map_err(serde::de::Error::custom)
    }
}

impl Graph {
    /// Edge-list text: `"n m"` then `m` lines `"u v"` with `u < v`, LF-terminated.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for &(u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphRepr::from(self)).expect("graph serializes")
    }
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::Parse(format!("line {line}: missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::Parse(format!("line {line}: bad {what} {tok:?}")))
}

/// Parses the edge-list text format.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let mut it = header.split_whitespace();
    let n = parse_usize(it.next(), 1, "vertex count")?;
    let m = parse_usize(it.next(), 1, "edge count")?;
    if it.next().is_some() {
        return Err(Error::Parse("line 1: trailing tokens".into()));
    }
    let mut edges = Vec::with_capacity(m);
    for (i, line) in lines {
        let mut it = line.split_whitespace();
        let u = parse_usize(it.next(), i + 1, "endpoint")?;
        let v = parse_usize(it.next(), i + 1, "endpoint")?;
        if it.next().is_some() {
            return Err(Error::Parse(format!("line {}: trailing tokens", i + 1)));
        }
        if u >= v {
            return Err(Error::Parse(format!("line {}: need u < v, got {u} {v}", i + 1)));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!("header says {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

/// Parses either the JSON form or the edge-list form, by the first
/// non-blank character.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        let repr: GraphRepr =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Graph::try_from(repr)
    } else {
        parse_edge_list(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use proptest::prelude::*;

    #[test]
    fn edge_list_format_is_exact() {
        assert_eq!(path(3).to_edge_list(), "3 2\n0 1\n1 2\n");
        assert_eq!(Graph::empty(2).to_edge_list(), "2 0\n");
        assert_eq!(complete(3).to_json(), r#"{"n":3,"edges":[[0,1],[0,2],[1,2]]}"#);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 1\n1 0\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 3\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n0 1\n").is_err());
        assert!(parse_graph(r#"{"n":2,"edges":[[1,0]]}"#).is_err());
        assert!(parse_graph(r#"{"n":2}"#).is_err());
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..9, bits in any::<u64>()) {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let g = Graph::from_edges(
                n,
                pairs.enumerate().filter(|(i, _)| bits >> (i % 64) & 1 == 1).map(|(_, e)| e),
            ).unwrap();
            prop_assert_eq!(parse_graph(&g.to_edge_list()).unwrap(), g.clone());
            prop_assert_eq!(parse_graph(&g.to_json()).unwrap(), g.clone());
            let via_serde: Graph = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
            prop_assert_eq!(via_serde, g);
        }
    }
}
