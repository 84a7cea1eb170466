//! Minors, shallow minors, vertex cover and the cover-shape predicates
//! `H ⊆ K_a ∨ tK_b`.

mod cover;
mod search;
mod wedge;

pub use cover::{
    in_hr, min_t_subgraph, subgraph_of_cover_shape, tau, tau_brute_force, CoverShape, VertexCover,
};
pub use search::{contains_minor, contains_shallow_minor};
pub use wedge::wedge_contains_minor;

use std::fmt;

use crate::graph::{bfs_within, Graph, VertexSet};

/// Branch-set radius bound for shallow minors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Depth {
    Bounded(usize),
    Unbounded,
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Depth::Bounded(l) => write!(f, "{l}"),
            Depth::Unbounded => f.write_str("inf"),
        }
    }
}

/// Branch sets of a minor model, indexed by the vertices of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorModel {
    pub branch_sets: Vec<VertexSet>,
}

impl MinorModel {
    /// Checks the model from scratch: nonempty, pairwise disjoint, connected
    /// branch sets inside `g`, and every edge of `h` realised by an edge of `g`.
    pub fn validate(&self, g: &Graph, h: &Graph) -> Result<(), String> {
        if self.branch_sets.len() != h.n() {
            return Err(format!(
                "{} branch sets for {} vertices of H",
                self.branch_sets.len(),
                h.n()
            ));
        }
        let mut owner = vec![None; g.n()];
        for (i, set) in self.branch_sets.iter().enumerate() {
            if set.is_empty() {
                return Err(format!("branch set {i} is empty"));
            }
            if set.check_within(g.n()).is_err() {
                return Err(format!("branch set {i} leaves the host graph"));
            }
            for v in set.iter() {
                if let Some(j) = owner[v] {
                    return Err(format!("vertex {v} is in branch sets {j} and {i}"));
                }
                owner[v] = Some(i);
            }
            let mask = set.to_mask(g.n());
            let first = set.iter().next().unwrap();
            let reached = bfs_within(g, Some(&mask), first, usize::MAX)
                .iter()
                .filter(|d| d.is_some())
                .count();
            if reached != set.len() {
                return Err(format!("branch set {i} is not connected"));
            }
        }
        for &(a, b) in h.edges() {
            let realised = self.branch_sets[a]
                .iter()
                .any(|x| g.neighbors(x).iter().any(|&y| owner[y] == Some(b)));
            if !realised {
                return Err(format!("edge {{{a}, {b}}} of H is not realised"));
            }
        }
        Ok(())
    }

    /// Largest branch-set radius (min over centres of the eccentricity
    /// inside the branch set).
    pub fn radius(&self, g: &Graph) -> usize {
        self.branch_sets
            .iter()
            .map(|s| set_radius(g, s))
            .max()
            .unwrap_or(0)
    }

    /// Total number of host vertices used.
    pub fn size(&self) -> usize {
        self.branch_sets.iter().map(VertexSet::len).sum()
    }
}

/// Radius of `G[set]`; `usize::MAX` if disconnected.
pub(crate) fn set_radius(g: &Graph, set: &VertexSet) -> usize {
    let mask = set.to_mask(g.n());
    set.iter()
        .map(|c| {
            let dist = bfs_within(g, Some(&mask), c, usize::MAX);
            set.iter()
                .map(|v| dist[v].unwrap_or(usize::MAX))
                .max()
                .unwrap_or(0)
        })
        .min()
        .unwrap_or(0)
}
