use crate::algos::for_each_combination;
use crate::error::{invalid, Result};
use crate::graph::{Graph, VertexSet};

/// A minimum vertex cover and its size `τ(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCover {
    pub size: usize,
    pub cover: VertexSet,
}

/// Witness that `H ⊆ K_a ∨ tK_b` for some `t`: deleting `witness`
/// (at most `a` vertices) leaves components with at most `b` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverShape {
    pub a: usize,
    pub b: usize,
    pub witness: VertexSet,
}

struct TauSearch<'a> {
    g: &'a Graph,
    alive: Vec<bool>,
    chosen: Vec<usize>,
    best: Vec<usize>,
}

impl TauSearch<'_> {
    fn live_degree(&self, v: usize) -> usize {
        self.g.neighbors(v).iter().filter(|&&w| self.alive[w]).count()
    }

    /// Greedy maximal matching on the remaining graph: a lower bound.
    fn matching_bound(&self) -> usize {
        let mut used = vec![false; self.g.n()];
        let mut size = 0;
        for &(u, v) in self.g.edges() {
            if self.alive[u] && self.alive[v] && !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                size += 1;
            }
        }
        size
    }

    fn take(&mut self, vs: &[usize]) {
        for &v in vs {
            self.alive[v] = false;
            self.chosen.push(v);
        }
    }

    fn untake(&mut self, vs: &[usize]) {
        for &v in vs {
            self.alive[v] = true;
            self.chosen.pop();
        }
    }

    fn run(&mut self) {
        if self.chosen.len() + self.matching_bound() >= self.best.len() {
            return;
        }
        let pick = (0..self.g.n())
            .filter(|&v| self.alive[v])
            .map(|v| (self.live_degree(v), v))
            .filter(|&(d, _)| d > 0)
            .min_by_key(|&(d, v)| (std::cmp::Reverse(d), v));
        let Some((deg, v)) = pick else {
            self.best = self.chosen.clone();
            return;
        };
        let nbrs: Vec<usize> = self
            .g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.alive[w])
            .collect();
        if deg == 1 {
            // taking the neighbour is never worse than taking a leaf
            self.take(&nbrs);
            self.run();
            self.untake(&nbrs);
            return;
        }
        self.take(&[v]);
        self.run();
        self.untake(&[v]);
        self.take(&nbrs);
        self.run();
        self.untake(&nbrs);
    }
}

/// Exact minimum vertex cover by branch and bound: branch on a vertex of
/// maximum remaining degree (it is in the cover, or all its neighbours are),
/// bounded below by a greedy matching.
pub fn tau(h: &Graph) -> VertexCover {
    let mut s = TauSearch {
        g: h,
        alive: vec![true; h.n()],
        chosen: Vec::new(),
        best: h.vertices().collect(),
    };
    if h.m() == 0 {
        s.best.clear();
    } else {
        s.run();
    }
    VertexCover {
        size: s.best.len(),
        cover: s.best.into_iter().collect(),
    }
}

/// Smallest vertex cover by subset enumeration (oracle for small graphs).
pub fn tau_brute_force(h: &Graph) -> usize {
    assert!(h.n() <= 24, "brute-force cover is for small graphs");
    (0u32..1 << h.n())
        .filter(|&mask| h.edges().iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1))
        .map(u32::count_ones)
        .min()
        .unwrap_or(0) as usize
}

fn component_sizes(h: &Graph, removed: &[usize]) -> Vec<usize> {
    let mut alive = vec![true; h.n()];
    for &v in removed {
        alive[v] = false;
    }
    h.restrict(&alive)
        .components()
        .into_iter()
        .filter(|c| alive[c[0]])
        .map(|c| c.len())
        .collect()
}

/// All `S` with `|S| <= a` (by size, then lexicographically) leaving
/// components of at most `b` vertices; `visit` returns false to stop.
fn for_each_shape_witness(h: &Graph, a: usize, b: usize, mut visit: impl FnMut(&[usize], &[usize]) -> bool) {
    let verts: Vec<usize> = h.vertices().collect();
    for size in 0..=a.min(h.n()) {
        let go_on = for_each_combination(&verts, size, |s| {
            let sizes = component_sizes(h, s);
            if sizes.iter().all(|&c| c <= b) {
                visit(s, &sizes)
            } else {
                true
            }
        });
        if !go_on {
            return;
        }
    }
}

/// Decides `∃t: H ⊆ K_a ∨ tK_b` through the equivalent condition that some
/// `S` with `|S| <= a` leaves only components on at most `b` vertices.
pub fn subgraph_of_cover_shape(h: &Graph, a: usize, b: usize) -> Result<Option<CoverShape>> {
    if b == 0 {
        return Err(invalid("cover shape needs b >= 1"));
    }
    let mut found = None;
    for_each_shape_witness(h, a, b, |s, _| {
        found = Some(s.iter().copied().collect());
        false
    });
    Ok(found.map(|witness| CoverShape { a, b, witness }))
}

/// Fewest bins of capacity `b` holding items of the given sizes.
fn bin_packing(sizes: &[usize], b: usize) -> usize {
    fn place(items: &[usize], bins: &mut Vec<usize>, b: usize, best: &mut usize) {
        if bins.len() >= *best {
            return;
        }
        let Some((&first, rest)) = items.split_first() else {
            *best = bins.len();
            return;
        };
        for i in 0..bins.len() {
            if bins[i] + first <= b && !bins[..i].contains(&bins[i]) {
                bins[i] += first;
                place(rest, bins, b, best);
                bins[i] -= first;
            }
        }
        bins.push(first);
        place(rest, bins, b, best);
        bins.pop();
    }
    let mut items = sizes.to_vec();
    items.sort_unstable_by(|x, y| y.cmp(x));
    let mut best = items.len() + 1;
    place(&items, &mut Vec::new(), b, &mut best);
    best.min(items.len())
}

/// Least `t >= 1` with `H ⊆ K_a ∨ tK_b`, or `None` if no `t` works.
/// Components of `H - S` share a `K_b` copy when their sizes fit, so the
/// count is an exact bin packing, minimised over all valid `S`.
pub fn min_t_subgraph(h: &Graph, a: usize, b: usize) -> Result<Option<usize>> {
    if b == 0 {
        return Err(invalid("cover shape needs b >= 1"));
    }
    let mut best: Option<usize> = None;
    for_each_shape_witness(h, a, b, |_, sizes| {
        let t = bin_packing(sizes, b).max(1);
        best = Some(best.map_or(t, |x| x.min(t)));
        best != Some(1)
    });
    Ok(best)
}

/// Membership in `H_r`: `1 <= τ(H) <= r` and `H ⊆ K_{τ-1} ∨ tK_{r+2-τ}`.
pub fn in_hr(h: &Graph, r: usize) -> Result<bool> {
    if r < 2 {
        return Err(invalid("H_r is defined for r >= 2"));
    }
    let t = tau(h).size;
    if t == 0 || t > r {
        return Ok(false);
    }
    Ok(subgraph_of_cover_shape(h, t - 1, r + 2 - t)?.is_some())
}
