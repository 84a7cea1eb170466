use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bfs_within, Graph, VertexSet};

/// A minimal `(v, Y, k, r)`-span: a connected piece of `G - Y` around the
/// root reaching at least `r` vertices of `Y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanResult {
    pub vertices: VertexSet,
    pub root: usize,
    /// Shortest root paths (inside the span) whose union is the span.
    pub paths: Vec<Vec<usize>>,
}

impl SpanResult {
    /// Checks the span conditions for `(Y, k, r)`: disjoint from `Y`, at most
    /// `kr+1` vertices, at least `r` neighbours in `Y`, every vertex on a
    /// stored path of length at most `k`, and no removable vertex.
    pub fn validate(&self, g: &Graph, y: &VertexSet, k: usize, r: usize) -> bool {
        let n = g.n();
        let in_y = y.to_mask(n);
        let mask = self.vertices.to_mask(n);
        if self.vertices.iter().any(|v| in_y[v]) || !mask[self.root] {
            return false;
        }
        if self.vertices.len() > k * r + 1 || self.paths.len() > r.max(1) {
            return false;
        }
        let mut covered = vec![false; n];
        for p in &self.paths {
            if p.first() != Some(&self.root) || p.len() > k + 1 {
                return false;
            }
            if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) || p.iter().any(|&v| !mask[v]) {
                return false;
            }
            for &v in p {
                covered[v] = true;
            }
        }
        if self.vertices.iter().any(|v| !covered[v]) {
            return false;
        }
        if !is_span(g, &mask, &in_y, self.root, k, r) {
            return false;
        }
        self.vertices.iter().filter(|&v| v != self.root).all(|v| {
            let mut less = mask.clone();
            less[v] = false;
            !is_span(g, &less, &in_y, self.root, k, r)
        })
    }
}

/// `H` is `r`-adherent to `Y`: disjoint from `Y` with at least `r`
/// neighbours in `Y`.
pub fn is_r_adherent(g: &Graph, y: &VertexSet, h_vertices: &VertexSet, r: usize) -> bool {
    if h_vertices.iter().any(|v| y.contains(v) || v >= g.n()) {
        return false;
    }
    y_neighbours(g, &h_vertices.to_mask(g.n()), &y.to_mask(g.n())) >= r
}

/// `|N_G(S) ∩ Y|` for `S` given as a mask disjoint from `Y`.
pub(crate) fn y_neighbours(g: &Graph, s: &[bool], in_y: &[bool]) -> usize {
    let mut seen = vec![false; g.n()];
    let mut count = 0;
    for v in (0..g.n()).filter(|&v| s[v]) {
        for &u in g.neighbors(v) {
            if in_y[u] && !seen[u] {
                seen[u] = true;
                count += 1;
            }
        }
    }
    count
}

/// `G[mask]` restricted to the part within distance `k` of the root is a
/// span, and all of `mask` lies within that distance.
fn is_span(g: &Graph, mask: &[bool], in_y: &[bool], root: usize, k: usize, r: usize) -> bool {
    let dist = bfs_within(g, Some(mask), root, k);
    if (0..g.n()).any(|v| mask[v] && dist[v].is_none()) {
        return false;
    }
    y_neighbours(g, mask, in_y) >= r
}

/// A minimal `(v, Y, k, r)`-span, or `None` when no span exists.
pub fn minimal_span(g: &Graph, y: &VertexSet, v: usize, k: usize, r: usize) -> Result<Option<SpanResult>> {
    y.check_within(g.n())?;
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if y.contains(v) {
        return Err(Error::Precondition(format!("span root {v} lies in Y")));
    }
    let in_y = y.to_mask(g.n());
    let allowed: Vec<bool> = in_y.iter().map(|&b| !b).collect();
    Ok(span_within(g, &allowed, &in_y, v, k, r))
}

/// Span search inside `allowed` (which must avoid `Y`). Any span inside
/// `allowed` lies in the `k`-ball of the root there, so the ball decides
/// existence; greedy root paths then give a span that is pruned to a
/// vertex-minimal one.
pub(crate) fn span_within(
    g: &Graph,
    allowed: &[bool],
    in_y: &[bool],
    root: usize,
    k: usize,
    r: usize,
) -> Option<SpanResult> {
    let n = g.n();
    if !allowed[root] {
        return None;
    }
    let dist = bfs_within(g, Some(allowed), root, k);
    let ball: Vec<bool> = dist.iter().map(Option::is_some).collect();
    if y_neighbours(g, &ball, in_y) < r {
        return None;
    }
    let mut mask = vec![false; n];
    mask[root] = true;
    for p in greedy_paths(g, &ball, in_y, root, k, r) {
        for v in p {
            mask[v] = true;
        }
    }
    // drop vertices while the rest stays a span, highest id first
    loop {
        let candidates: Vec<usize> = (0..n).rev().filter(|&v| mask[v] && v != root).collect();
        let removable = candidates.into_iter().find(|&v| {
            mask[v] = false;
            let ok = is_span(g, &mask, in_y, root, k, r);
            mask[v] = true;
            ok
        });
        match removable {
            Some(v) => mask[v] = false,
            None => break,
        }
    }
    let paths = greedy_paths(g, &mask, in_y, root, k, r);
    Some(SpanResult {
        vertices: VertexSet::from_mask(&mask),
        root,
        paths,
    })
}

/// Walks `G[mask]` in BFS order from the root and keeps the shortest path
/// to each vertex that sees a new `Y`-vertex, until `r` are seen.
fn greedy_paths(g: &Graph, mask: &[bool], in_y: &[bool], root: usize, k: usize, r: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    let mut seen_v = vec![false; n];
    seen_v[root] = true;
    let mut depth = vec![0usize; n];
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        if depth[x] >= k {
            continue;
        }
        for &y in g.neighbors(x) {
            if mask[y] && !seen_v[y] {
                seen_v[y] = true;
                parent[y] = x;
                depth[y] = depth[x] + 1;
                order.push(y);
            }
        }
    }
    let mut seen_y = vec![false; n];
    let mut hit = 0;
    let mut paths = Vec::new();
    for &x in &order {
        if hit >= r {
            break;
        }
        let fresh: Vec<usize> = g.neighbors(x).iter().copied().filter(|&u| in_y[u] && !seen_y[u]).collect();
        if fresh.is_empty() {
            continue;
        }
        for u in fresh {
            seen_y[u] = true;
            hit += 1;
        }
        let mut path = vec![x];
        while *path.last().unwrap() != root {
            path.push(parent[*path.last().unwrap()]);
        }
        path.reverse();
        paths.push(path);
    }
    if paths.is_empty() {
        // r = 0: the root alone is a span
        paths.push(vec![root]);
    }
    paths
}
