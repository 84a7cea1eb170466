//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Every combinator that relabels
//! vertices reports the mapping it used, so callers can locate the copies,
//! hearts and apex vertices of the constructions later on.

mod io;
pub mod named;
mod ops;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub use io::{parse_edge_list, parse_graph, GraphRepr};
pub use ops::{disjoint_union, join, wedge, WedgeMap};

/// A simple undirected graph with vertex ids `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// The edgeless graph `I_n`.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Strict constructor: rejects self-loops, duplicates and out-of-range
    /// endpoints. Pairs may be given in either orientation.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            let e = (u.min(v), u.max(v));
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self::from_sorted_set(n, set))
    }

    /// Lenient constructor used by the combinators: parallel edges are merged
    /// and self-loops dropped. Endpoints must still be in range.
    pub(crate) fn from_edges_merged<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let set: BTreeSet<(usize, usize)> = edges
            .into_iter()
            .filter(|(u, v)| u != v)
            .map(|(u, v)| {
                debug_assert!(u < n && v < n);
                (u.min(v), u.max(v))
            })
            .collect();
        Self::from_sorted_set(n, set)
    }

    fn from_sorted_set(n: usize, set: BTreeSet<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            adj,
            edges: set.into_iter().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order. The position of
    /// an edge in this slice is its edge index.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Adds isolated vertices until the graph has `n` vertices.
    pub fn pad_to(&self, n: usize) -> Result<Graph> {
        if n < self.n {
            return Err(Error::InvalidParameter(format!(
                "cannot pad a graph on {} vertices down to {n}",
                self.n
            )));
        }
        let mut g = self.clone();
        g.adj.resize(n, Vec::new());
        g.n = n;
        Ok(g)
    }

    /// The spanning subgraph keeping the edges whose index satisfies `keep`.
    pub fn spanning_subgraph<F: FnMut(usize) -> bool>(&self, mut keep: F) -> Graph {
        let kept: BTreeSet<(usize, usize)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| keep(*i))
            .map(|(_, &e)| e)
            .collect();
        Self::from_sorted_set(self.n, kept)
    }

    /// Subgraph induced by `vertices`, relabelled in ascending id order.
    /// Returns the graph and the map from new id to old id.
    pub fn induced_subgraph(&self, vertices: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        vertices.check_within(self.n)?;
        let map: Vec<usize> = vertices.iter().collect();
        let mut inv = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            inv[v] = i;
        }
        let edges = self.edges.iter().filter_map(|&(u, v)| {
            (inv[u] != usize::MAX && inv[v] != usize::MAX).then(|| (inv[u], inv[v]))
        });
        Ok((Graph::from_edges_merged(map.len(), edges), map))
    }

    /// Subgraph induced by a boolean mask, keeping all `n` ids (masked-out
    /// vertices become isolated).
    pub(crate) fn restrict(&self, alive: &[bool]) -> Graph {
        self.spanning_subgraph(|i| {
            let (u, v) = self.edges[i];
            alive[u] && alive[v]
        })
    }

    /// Contracts edge `{u, v}`: `v` is merged into `u`, parallel edges are
    /// merged, and ids above `v` shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        let relabel = |w: usize| {
            let w = if w == v { u } else { w };
            if w > v {
                w - 1
            } else {
                w
            }
        };
        let edges = self.edges.iter().map(|&(a, b)| (relabel(a), relabel(b)));
        Ok(Graph::from_edges_merged(self.n - 1, edges))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// BFS distances from `s` (None = unreachable).
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        bfs_within(self, None, s, usize::MAX)
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.distances_from(u)[v]
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }
}

/// BFS from `s` inside the vertices allowed by `mask` (all when `None`),
/// stopping at depth `max_depth`.
pub(crate) fn bfs_within(
    g: &Graph,
    mask: Option<&[bool]>,
    s: usize,
    max_depth: usize,
) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n];
    if mask.is_some_and(|m| !m[s]) {
        return dist;
    }
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        let d = dist[x].unwrap();
        if d >= max_depth {
            continue;
        }
        for &y in g.neighbors(x) {
            if dist[y].is_none() && mask.is_none_or(|m| m[y]) {
                dist[y] = Some(d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

/// `N^{<=l}[v]` inside the masked subgraph, as a sorted list. Negative radii
/// give the empty set.
pub(crate) fn ball_within(g: &Graph, mask: &[bool], v: usize, radius: i64) -> Vec<usize> {
    if radius < 0 || !mask[v] {
        return Vec::new();
    }
    bfs_within(g, Some(mask), v, radius as usize)
        .into_iter()
        .enumerate()
        .filter_map(|(i, d)| d.map(|_| i))
        .collect()
}

/// The closed ball of radius `radius` around `v` in `G[X]`.
pub fn neighborhood_ball(g: &Graph, x: &VertexSet, v: usize, radius: i64) -> Result<VertexSet> {
    x.check_within(g.n())?;
    if !x.contains(v) {
        return Err(Error::NotInSet(v));
    }
    let mask = x.to_mask(g.n());
    Ok(ball_within(g, &mask, v, radius).into_iter().collect())
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn all(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        mask.iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        self.0.remove(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.iter().filter(|&v| v < n) {
            mask[v] = true;
        }
        mask
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.0.iter().next_back() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::collections::btree_set::Iter<'a, usize>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// A set of edges, stored as normalized pairs `(u, v)` with `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct EdgeSet(BTreeSet<(usize, usize)>);

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, u: usize, v: usize) -> bool {
        self.0.insert((u.min(v), u.max(v)))
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.0.contains(&(u.min(v), u.max(v)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Every member is an edge of `g`.
    pub fn is_within(&self, g: &Graph) -> bool {
        self.iter().all(|(u, v)| g.has_edge(u, v))
    }

    pub fn vertices(&self) -> VertexSet {
        self.iter().flat_map(|(u, v)| [u, v]).collect()
    }
}

impl FromIterator<(usize, usize)> for EdgeSet {
    fn from_iter<T: IntoIterator<Item = (usize, usize)>>(iter: T) -> Self {
        EdgeSet(iter.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn strict_constructor_rejects_bad_input() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn ball_on_path_and_cycle() {
        let p5 = path(5);
        let all = VertexSet::all(5);
        let b = neighborhood_ball(&p5, &all, 0, 2).unwrap();
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert!(neighborhood_ball(&p5, &all, 0, -1).unwrap().is_empty());
        assert_eq!(neighborhood_ball(&p5, &all, 3, 0).unwrap().len(), 1);
        let c6 = cycle(6);
        assert_eq!(neighborhood_ball(&c6, &VertexSet::all(6), 4, 3).unwrap().len(), 6);
    }

    #[test]
    fn ball_requires_membership() {
        let x: VertexSet = [1, 2].into_iter().collect();
        assert_eq!(
            neighborhood_ball(&path(4), &x, 0, 1),
            Err(Error::NotInSet(0))
        );
        // distances are measured inside G[X]
        let x: VertexSet = [0, 1, 3].into_iter().collect();
        let b = neighborhood_ball(&path(4), &x, 0, 5).unwrap();
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn induced_and_contract() {
        let k4 = complete(4);
        let (tri, map) = k4.induced_subgraph(&[0, 2, 3].into_iter().collect()).unwrap();
        assert_eq!((tri.n(), tri.m()), (3, 3));
        assert_eq!(map, vec![0, 2, 3]);

        let c5 = cycle(5);
        let c4 = c5.contract_edge(0, 1).unwrap();
        assert_eq!((c4.n(), c4.m()), (4, 4));
        let k3 = complete(3).contract_edge(1, 2).unwrap();
        assert_eq!((k3.n(), k3.m()), (2, 1));
        assert!(path(3).contract_edge(0, 2).is_err());
    }

    #[test]
    fn components_degree_distance() {
        let g = disjoint_union(&[complete(3), complete(1), path(2)]).0;
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3], vec![4, 5]]);
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.degree(3), 0);
        assert_eq!(path(5).distance(0, 4), Some(4));
        assert_eq!(cycle(6).distance(0, 4), Some(2));
        assert_eq!(g.distance(0, 4), None);
        assert_eq!(complete(5).distance(1, 3), Some(1));
    }

    #[test]
    fn pad_adds_isolated_vertices() {
        let g = complete(3).pad_to(7).unwrap();
        assert_eq!((g.n(), g.m()), (7, 3));
        assert!(complete(3).pad_to(2).is_err());
    }
}
