use crate::error::{Error, Result};

use super::{Graph, VertexSet};

/// `G ∨ H`: disjoint copies of both plus every cross edge. `g` keeps ids
/// `0..|V(g)|`, `h` is shifted by `|V(g)|`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(u, v)| (u + off, v + off)));
    for u in 0..g.n() {
        for v in 0..h.n() {
            edges.push((u, v + off));
        }
    }
    Graph::from_edges_merged(g.n() + h.n(), edges)
}

/// Disjoint union of `parts`; part `i` occupies ids `offsets[i]..offsets[i]+n_i`.
pub fn disjoint_union(parts: &[Graph]) -> (Graph, Vec<usize>) {
    let mut offsets = Vec::with_capacity(parts.len());
    let mut edges = Vec::new();
    let mut n = 0;
    for p in parts {
        offsets.push(n);
        edges.extend(p.edges().iter().map(|&(u, v)| (u + n, v + n)));
        n += p.n();
    }
    (Graph::from_edges_merged(n, edges), offsets)
}

/// Vertex bookkeeping for `G ∧_k Z`.
///
/// Copy 0 keeps the original ids of `G` (so `k = 1` is the identity). Copy
/// `c >= 1` places the non-`Z` vertices of `G`, in ascending order, at
/// `n + (c-1)(n-|Z|) + i`. Every `z ∈ Z` keeps its id in all copies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeMap {
    pub k: usize,
    pub base_n: usize,
    pub z: VertexSet,
    non_z: Vec<usize>,
    non_z_rank: Vec<Option<usize>>,
    base_edges: Vec<(usize, usize)>,
}

impl WedgeMap {
    /// Id of vertex `v` of the base graph inside copy `copy`.
    pub fn map(&self, copy: usize, v: usize) -> usize {
        assert!(copy < self.k && v < self.base_n);
        match self.non_z_rank[v] {
            None => v,
            Some(_) if copy == 0 => v,
            Some(i) => self.base_n + (copy - 1) * self.non_z.len() + i,
        }
    }

    /// The non-`Z` vertices of copy `copy`.
    pub fn copy_block(&self, copy: usize) -> Vec<usize> {
        self.non_z.iter().map(|&v| self.map(copy, v)).collect()
    }

    /// Edges of copy `copy` in the wedge graph. Edges inside `Z` are shared
    /// by every copy.
    pub fn copy_edges(&self, copy: usize) -> Vec<(usize, usize)> {
        self.base_edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (self.map(copy, u), self.map(copy, v));
                (a.min(b), a.max(b))
            })
            .collect()
    }
}

/// `G ∧_k Z`: `k` disjoint copies of `G` with the copies of each `z ∈ Z`
/// identified. Parallel edges created by the identification are merged.
pub fn wedge(g: &Graph, z: &VertexSet, k: usize) -> Result<(Graph, WedgeMap)> {
    z.check_within(g.n())?;
    if k == 0 {
        return Err(Error::InvalidParameter("wedge multiplicity k must be >= 1".into()));
    }
    let n = g.n();
    let mut non_z_rank = vec![None; n];
    let mut non_z = Vec::new();
    for v in 0..n {
        if !z.contains(v) {
            non_z_rank[v] = Some(non_z.len());
            non_z.push(v);
        }
    }
    let map = WedgeMap {
        k,
        base_n: n,
        z: z.clone(),
        non_z,
        non_z_rank,
        base_edges: g.edges().to_vec(),
    };
    let total = z.len() + k * (n - z.len());
    let edges: Vec<(usize, usize)> = (0..k).flat_map(|c| map.copy_edges(c)).collect();
    Ok((Graph::from_edges_merged(total, edges), map))
}
