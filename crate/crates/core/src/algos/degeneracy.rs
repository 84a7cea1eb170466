use std::collections::BTreeSet;

use crate::graph::{Graph, VertexSet};

/// Degeneracy together with the elimination order that certifies it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyResult {
    pub degeneracy: usize,
    /// Vertices in removal order; each has at most `degeneracy` neighbours
    /// later in the order.
    pub elimination_order: Vec<usize>,
}

/// Alive-mask of the `r`-core, by iterated peeling of vertices of degree `< r`.
pub(crate) fn core_mask(g: &Graph, r: usize) -> Vec<bool> {
    let mut deg = g.degrees();
    let mut alive = vec![true; g.n()];
    let mut stack: Vec<usize> = g.vertices().filter(|&v| deg[v] < r).collect();
    for &v in &stack {
        alive[v] = false;
    }
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] < r {
                    alive[w] = false;
                    stack.push(w);
                }
            }
        }
    }
    alive
}

/// Vertex set of the `r`-core: the unique maximal subgraph with minimum
/// degree at least `r`. Empty iff `g` is `(r-1)`-degenerate.
pub fn core(g: &Graph, r: usize) -> VertexSet {
    VertexSet::from_mask(&core_mask(g, r))
}

/// The `r`-core as a graph, relabelled; second value maps new ids to old.
pub fn core_subgraph(g: &Graph, r: usize) -> (Graph, Vec<usize>) {
    g.induced_subgraph(&core(g, r)).expect("core vertices are in range")
}

/// Membership in `D_r`: the graph is `(r-1)`-degenerate.
pub fn is_in_dr(g: &Graph, r: usize) -> bool {
    !core_mask(g, r).contains(&true)
}

/// Min-degree elimination, lowest id first among ties.
pub fn degeneracy(g: &Graph) -> DegeneracyResult {
    let mut deg = g.degrees();
    let mut queue: BTreeSet<(usize, usize)> = g.vertices().map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut best = 0;
    while let Some((d, v)) = queue.pop_first() {
        best = best.max(d);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    DegeneracyResult {
        degeneracy: best,
        elimination_order: order,
    }
}

/// Proper colouring with at most `degeneracy + 1` colours (`0..`), assigned
/// along the reversed elimination order.
pub fn greedy_color_from_degeneracy(g: &Graph) -> Vec<usize> {
    let order = degeneracy(g).elimination_order;
    let mut color: Vec<Option<usize>> = vec![None; g.n()];
    for &v in order.iter().rev() {
        let used: BTreeSet<usize> = g.neighbors(v).iter().filter_map(|&w| color[w]).collect();
        color[v] = Some((0..).find(|c| !used.contains(c)).unwrap());
    }
    color.into_iter().map(Option::unwrap).collect()
}
