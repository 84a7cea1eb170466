#![allow(dead_code)]

use minorperc::graph::named::builtins;
use minorperc::percolation::rng;
use minorperc::Graph;

/// Named built-ins with at most `max_edges` edges.
pub fn named_corpus(max_edges: usize) -> Vec<(String, Graph)> {
    builtins().into_iter().filter(|(_, g)| g.m() <= max_edges).collect()
}

/// Seeded random graphs on 4..=9 vertices with at most `max_edges` edges.
/// Edge density varies per graph; edges past the cap are dropped in order.
pub fn random_corpus(count: usize, max_edges: usize, seed: u64) -> Vec<(String, Graph)> {
    (0..count)
        .map(|i| {
            let s = seed.wrapping_add(i as u64);
            let n = 4 + (rng::mix(s, 1, 0) % 6) as usize;
            let density = 0.2 + 0.6 * rng::uniform(s, 2, 0);
            let mut edges = Vec::new();
            let mut c = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if rng::uniform(s, 3, c) < density && edges.len() < max_edges {
                        edges.push((u, v));
                    }
                    c += 1;
                }
            }
            (format!("random-{i}"), Graph::from_edges(n, edges).unwrap())
        })
        .collect()
}

/// Random forest on `n` vertices: each vertex after the first attaches to an
/// earlier one with probability 0.8.
pub fn random_forest(n: usize, seed: u64) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n)
        .filter(|&v| rng::uniform(seed, 4, v as u64) < 0.8)
        .map(|v| ((rng::mix(seed, 5, v as u64) % v as u64) as usize, v))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Built-ins with at most 18 edges plus 200 random graphs with at most 16.
pub fn full_corpus() -> Vec<(String, Graph)> {
    let mut c = named_corpus(18);
    c.extend(random_corpus(200, 16, 0xc0ffee));
    c
}
