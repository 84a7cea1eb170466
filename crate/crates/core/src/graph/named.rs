//! Standard graphs and the name parser used by the CLI.
//!
//! Recognised names: `K<n>`, `K<a>,<b>`, `C<n>`, `P<n>`, `I<n>`,
//! `star<s>` (= `K1,s`), `petersen`, `bowtie`.

use crate::error::{Error, Result};

use super::{join, Graph};

pub fn complete(n: usize) -> Graph {
    Graph::from_edges_merged(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{a,b}`: side `A` is `0..a`, side `B` is `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    join(&Graph::empty(a), &Graph::empty(b))
}

/// `C_n` for `n >= 3`; smaller `n` gives a path.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    if n >= 3 {
        edges.push((0, n - 1));
    }
    Graph::from_edges_merged(n, edges)
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    Graph::from_edges_merged(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_{1,s}` with centre 0.
pub fn star(s: usize) -> Graph {
    complete_bipartite(1, s)
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    Graph::from_edges_merged(10, outer.chain(spokes).chain(inner))
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> Graph {
    Graph::from_edges_merged(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
}

/// Built-in graphs used by the test corpus, paired with their names.
pub fn builtins() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push((format!("K{n}"), complete(n)));
    }
    for (a, b) in [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 3), (3, 4)] {
        out.push((format!("K{a},{b}"), complete_bipartite(a, b)));
    }
    for n in 3..=8 {
        out.push((format!("C{n}"), cycle(n)));
    }
    for n in 2..=7 {
        out.push((format!("P{n}"), path(n)));
    }
    for n in 1..=4 {
        out.push((format!("I{n}"), Graph::empty(n)));
    }
    out.push(("petersen".into(), petersen()));
    out.push(("bowtie".into(), bowtie()));
    out
}

fn num(s: &str, name: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::Parse(format!("unknown graph name {name:?}")))
}

/// Parses a built-in graph name. Case-insensitive for the word names.
pub fn by_name(name: &str) -> Result<Graph> {
    let lower = name.trim().to_ascii_lowercase();
    match lower.as_str() {
        "petersen" => return Ok(petersen()),
        "bowtie" => return Ok(bowtie()),
        _ => {}
    }
    if let Some(rest) = lower.strip_prefix("star") {
        return Ok(star(num(rest, name)?));
    }
    let (head, rest) = lower.split_at(lower.chars().next().map_or(0, char::len_utf8));
    match head {
        "k" => match rest.split_once(',') {
            Some((a, b)) => Ok(complete_bipartite(num(a, name)?, num(b, name)?)),
            None => Ok(complete(num(rest, name)?)),
        },
        "c" => {
            let n = num(rest, name)?;
            if n < 3 {
                return Err(Error::Parse(format!("cycle needs at least 3 vertices: {name:?}")));
            }
            Ok(cycle(n))
        }
        "p" => Ok(path(num(rest, name)?)),
        "i" => Ok(Graph::empty(num(rest, name)?)),
        _ => Err(Error::Parse(format!("unknown graph name {name:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!((complete(5).n(), complete(5).m()), (5, 10));
        assert_eq!(complete_bipartite(3, 3).m(), 9);
        assert_eq!(cycle(5).m(), 5);
        assert_eq!(path(1).m(), 0);
        assert_eq!(star(4).degree(0), 4);
        let p = petersen();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!(p.degrees().iter().all(|&d| d == 3));
        assert_eq!(bowtie().degree(0), 4);
    }

    #[test]
    fn names() {
        assert_eq!(by_name("K5").unwrap(), complete(5));
        assert_eq!(by_name("K3,3").unwrap(), complete_bipartite(3, 3));
        assert_eq!(by_name("c4").unwrap(), cycle(4));
        assert_eq!(by_name("star3").unwrap(), star(3));
        assert_eq!(by_name("I3").unwrap(), Graph::empty(3));
        assert_eq!(by_name("Petersen").unwrap(), petersen());
        assert!(by_name("Q7").is_err());
        assert!(by_name("K").is_err());
        assert!(by_name("C2").is_err());
        for (name, g) in builtins() {
            assert_eq!(by_name(&name).unwrap(), g, "{name}");
        }
    }
}
