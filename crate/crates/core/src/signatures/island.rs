use num_rational::Ratio;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::graph::{ball_within, bfs_within, Graph, VertexSet};

use super::span::{span_within, y_neighbours, SpanResult};

/// The pair `(X, Z)` produced by the island iteration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IslandResult {
    pub x: VertexSet,
    pub z: VertexSet,
    pub d: usize,
    pub l: usize,
    /// Index of the round that produced `(X, Z)`.
    pub rounds: usize,
}

/// Sizes of one round of the iteration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IslandRound {
    pub x_size: usize,
    pub spans: usize,
    pub d_size: usize,
    pub z_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum IslandOutcome {
    Found { result: IslandResult, trace: Vec<IslandRound> },
    Failed { trace: Vec<IslandRound> },
}

impl IslandOutcome {
    pub fn found(&self) -> Option<&IslandResult> {
        match self {
            IslandOutcome::Found { result, .. } => Some(result),
            IslandOutcome::Failed { .. } => None,
        }
    }

    pub fn trace(&self) -> &[IslandRound] {
        match self {
            IslandOutcome::Found { trace, .. } | IslandOutcome::Failed { trace } => trace,
        }
    }
}

/// Runs the island iteration with degree cap `d` and ratio `β`.
///
/// Starting from `X_0` (vertices of degree at most `d`), each round collects
/// a maximal family of disjoint minimal `(v, Y_i, ℓ, r)`-spans in `G[X_i]`,
/// then a maximal `Z_i` of far-apart vertices whose `(ℓ-1)`-balls avoid the
/// spans' neighbourhood. The first round with `|Z_i| > β |V - X_i|` wins;
/// after `(r+1)^ℓ + 1` rounds the run is reported as failed. Greedy choices
/// scan vertices in ascending id.
pub fn island_partition(g: &Graph, r: usize, l: usize, d: usize, beta: Ratio<i64>) -> Result<IslandOutcome> {
    if r < 1 {
        return Err(invalid("island partition needs r >= 1"));
    }
    if beta < Ratio::from_integer(0) {
        return Err(invalid("beta must be nonnegative"));
    }
    let n = g.n();
    let max_rounds = (r as u64 + 1).checked_pow(l as u32).map_or(u64::MAX, |b| b.saturating_add(1));
    let mut x: Vec<bool> = (0..n).map(|v| g.degree(v) <= d).collect();
    let mut trace = Vec::new();
    let mut round = 0u64;
    while round < max_rounds {
        let x_size = x.iter().filter(|&&b| b).count();
        if x_size == 0 {
            break;
        }
        let in_y: Vec<bool> = x.iter().map(|&b| !b).collect();
        let spans = collect_spans(g, &x, &in_y, l, r);
        let mut in_d = vec![false; n];
        for s in &spans {
            for v in s.vertices.iter() {
                in_d[v] = true;
            }
        }
        let z = collect_islands(g, &x, &in_d, l);
        let d_size = in_d.iter().filter(|&&b| b).count();
        trace.push(IslandRound {
            x_size,
            spans: spans.len(),
            d_size,
            z_size: z.len(),
        });
        let outside = (n - x_size) as i64;
        if Ratio::from_integer(z.len() as i64) > beta * outside {
            return Ok(IslandOutcome::Found {
                result: IslandResult {
                    x: VertexSet::from_mask(&x),
                    z: z.into_iter().collect(),
                    d,
                    l,
                    rounds: round as usize,
                },
                trace,
            });
        }
        for v in z {
            x[v] = false;
        }
        for v in 0..n {
            if in_d[v] {
                x[v] = false;
            }
        }
        round += 1;
    }
    Ok(IslandOutcome::Failed { trace })
}

/// Greedy maximal family of disjoint minimal spans in `G[X]`.
fn collect_spans(g: &Graph, x: &[bool], in_y: &[bool], l: usize, r: usize) -> Vec<SpanResult> {
    let n = g.n();
    let mut free = x.to_vec();
    let mut out = Vec::new();
    for v in 0..n {
        if !free[v] {
            continue;
        }
        if l >= 1 {
            let ball = ball_within(g, x, v, l as i64 - 1);
            let mut mask = vec![false; n];
            for u in ball {
                mask[u] = true;
            }
            if y_neighbours(g, &mask, in_y) < r {
                continue;
            }
        }
        if let Some(s) = span_within(g, &free, in_y, v, l, r) {
            for u in s.vertices.iter() {
                free[u] = false;
            }
            out.push(s);
        }
    }
    out
}

/// Greedy maximal `Z ⊆ X - D` with pairwise `G[X]`-distance at least `ℓ+1`
/// and `N^{≤ℓ-1}_{G[X-D]}[z]` missing `N_G(D)`.
fn collect_islands(g: &Graph, x: &[bool], in_d: &[bool], l: usize) -> Vec<usize> {
    let n = g.n();
    let mut near_d = vec![false; n];
    for v in (0..n).filter(|&v| in_d[v]) {
        for &u in g.neighbors(v) {
            near_d[u] = true;
        }
    }
    let x_minus_d: Vec<bool> = (0..n).map(|v| x[v] && !in_d[v]).collect();
    let mut blocked = vec![false; n];
    let mut z = Vec::new();
    for v in 0..n {
        if !x_minus_d[v] || blocked[v] {
            continue;
        }
        if ball_within(g, &x_minus_d, v, l as i64 - 1).iter().any(|&u| near_d[u]) {
            continue;
        }
        z.push(v);
        for u in ball_within(g, x, v, l as i64) {
            blocked[u] = true;
        }
    }
    z
}

/// Lists the outcome conditions that `res` violates: `(a)` degree cap on
/// `X`, `(b)` spacing of `Z` in `G[X]`, `(c)` few outside neighbours near
/// `Z`, `(d)` few outside neighbours of each `(ℓ-1)`-ball, and the size
/// condition `|Z| > β |V - X|`. Empty when all hold.
pub fn island_violations(g: &Graph, r: usize, beta: Ratio<i64>, res: &IslandResult) -> Vec<String> {
    let n = g.n();
    let x = res.x.to_mask(n);
    let outside: Vec<bool> = x.iter().map(|&b| !b).collect();
    let l = res.l;
    let mut out = Vec::new();
    if !res.z.is_subset(&res.x) {
        out.push("Z is not contained in X".to_string());
    }
    if let Some(v) = res.x.iter().find(|&v| g.degree(v) > res.d) {
        out.push(format!("(a) vertex {v} has degree {} > {}", g.degree(v), res.d));
    }
    let zs: Vec<usize> = res.z.iter().collect();
    for (i, &z) in zs.iter().enumerate() {
        if !x[z] {
            continue;
        }
        let dist = bfs_within(g, Some(&x), z, l);
        if let Some(&w) = zs[i + 1..].iter().find(|&&w| dist[w].is_some()) {
            out.push(format!("(b) {z} and {w} are within distance {l} in G[X]"));
        }
        for u in (0..n).filter(|&u| dist[u].is_some()) {
            let k = g.neighbors(u).iter().filter(|&&w| outside[w]).count();
            if k + 1 > r {
                out.push(format!("(c) vertex {u} near {z} has {k} neighbours outside X"));
            }
        }
        let mut ball = vec![false; n];
        for u in ball_within(g, &x, z, l as i64 - 1) {
            ball[u] = true;
        }
        let k = y_neighbours(g, &ball, &outside);
        if k + 1 > r {
            out.push(format!("(d) the ball around {z} has {k} neighbours outside X"));
        }
    }
    let rest = (n - res.x.len()) as i64;
    if Ratio::from_integer(res.z.len() as i64) <= beta * rest {
        out.push(format!("|Z| = {} is not above beta * {rest}", res.z.len()));
    }
    out
}

/// The degree cap the existence argument guarantees:
/// `d = (1 + (1+γ)^((r+1)^ℓ)) k` with `γ = β + (ℓr+1) α`.
pub fn island_degree_formula(k: f64, alpha: f64, beta: f64, l: u32, r: u32) -> f64 {
    let gamma = beta + (l as f64 * r as f64 + 1.0) * alpha;
    let exp = (r as f64 + 1.0).powi(l as i32);
    (1.0 + (1.0 + gamma).powf(exp)) * k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::graph::{disjoint_union, join};
    use proptest::prelude::*;

    fn apex_matching() -> Graph {
        let parts: Vec<Graph> = (0..5).map(|_| complete(2)).collect();
        join(&Graph::empty(1), &disjoint_union(&parts).0)
    }

    #[test]
    fn apex_over_matching() {
        let g = apex_matching();
        let beta = Ratio::new(1, 2);
        let out = island_partition(&g, 2, 0, 2, beta).unwrap();
        let res = out.found().unwrap();
        assert_eq!(res.x.len(), 10);
        assert_eq!(res.z.len(), 10);
        assert!(island_violations(&g, 2, beta, res).is_empty());
    }

    #[test]
    fn path_with_everything_low() {
        let g = path(6);
        let beta = Ratio::from_integer(0);
        let res = island_partition(&g, 2, 0, 5, beta).unwrap().found().cloned().unwrap();
        assert_eq!(res.x, VertexSet::all(6));
        assert!(!res.z.is_empty());
        assert!(island_violations(&g, 2, beta, &res).is_empty());
    }

    #[test]
    fn no_low_degree_vertices() {
        let out = island_partition(&complete(5), 2, 0, 1, Ratio::from_integer(1)).unwrap();
        assert!(out.found().is_none());
    }

    #[test]
    fn spans_get_peeled() {
        // K_{2,6}: the two hubs exceed d, every leaf sees both of them
        let g = complete_bipartite(2, 6);
        let out = island_partition(&g, 2, 1, 2, Ratio::from_integer(0)).unwrap();
        assert_eq!(out.trace()[0].spans, 6);
        assert!(out.found().is_none());
        let out = island_partition(&g, 3, 1, 2, Ratio::from_integer(0)).unwrap();
        assert!(island_violations(&g, 3, Ratio::from_integer(0), out.found().unwrap()).is_empty());
    }

    #[test]
    fn formula_grows() {
        assert_eq!(island_degree_formula(2.0, 0.0, 0.0, 0, 2), 4.0);
        assert!(island_degree_formula(2.0, 1.0, 1.0, 2, 2) > 1e6);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (3usize..12).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut i = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[i] {
                            edges.push((u, v));
                        }
                        i += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn success_satisfies_conditions(g in arb_graph(), r in 1usize..4, l in 0usize..3, d in 0usize..6, b in 0i64..3) {
            let beta = Ratio::new(b, 2);
            if let Some(res) = island_partition(&g, r, l, d, beta).unwrap().found() {
                let bad = island_violations(&g, r, beta, res);
                prop_assert!(bad.is_empty(), "{:?}", bad);
            }
        }
    }
}
