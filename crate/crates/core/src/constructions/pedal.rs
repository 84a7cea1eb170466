use std::collections::BTreeSet;

use crate::error::{invalid, Result};
use crate::graph::{Graph, VertexSet};

/// A member of `F(I_{r'}, F_0, r)`: the heart `I_{r'}` on `0..r'`, the
/// `F_0` vertices after it, and cross edges between the two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PedalGraph {
    pub graph: Graph,
    pub heart: VertexSet,
    pub f0_vertices: VertexSet,
    pub type_s: usize,
    pub r: usize,
}

impl PedalGraph {
    /// Re-checks the invariants: heart and `F_0` partition the vertices, the
    /// heart is independent, `F_0` vertices have degree at least `r`, and the
    /// type counts the edges touching `F_0`.
    pub fn validate(&self) -> Result<()> {
        let n = self.graph.n();
        if self.heart.len() + self.f0_vertices.len() != n
            || self.heart.iter().any(|v| self.f0_vertices.contains(v))
            || self.heart.check_within(n).is_err()
            || self.f0_vertices.check_within(n).is_err()
        {
            return Err(invalid("heart and F0 vertices do not partition the graph"));
        }
        if self.graph.edges().iter().any(|&(u, v)| self.heart.contains(u) && self.heart.contains(v)) {
            return Err(invalid("heart is not independent"));
        }
        if let Some(v) = self.f0_vertices.iter().find(|&v| self.graph.degree(v) < self.r) {
            return Err(invalid(format!("F0 vertex {v} has degree below {}", self.r)));
        }
        let touching = self
            .graph
            .edges()
            .iter()
            .filter(|&&(u, v)| self.f0_vertices.contains(u) || self.f0_vertices.contains(v))
            .count();
        if touching != self.type_s {
            return Err(invalid("type does not match the edges touching F0"));
        }
        Ok(())
    }
}

/// Builds the pedal graph on heart `I_{r'}` and `F_0` with the given cross
/// edges `(f0 vertex, heart vertex)`.
pub fn gen_pedal(r_prime: usize, f0: &Graph, r: usize, cross: &[(usize, usize)]) -> Result<PedalGraph> {
    if f0.n() == 0 {
        return Err(invalid("F0 must have at least one vertex"));
    }
    let mut seen = BTreeSet::new();
    for &(x, h) in cross {
        if x >= f0.n() || h >= r_prime {
            return Err(invalid(format!("cross pair ({x}, {h}) out of range")));
        }
        if !seen.insert((x, h)) {
            return Err(invalid(format!("cross pair ({x}, {h}) repeated")));
        }
    }
    let edges = f0
        .edges()
        .iter()
        .map(|&(u, v)| (r_prime + u, r_prime + v))
        .chain(cross.iter().map(|&(x, h)| (h, r_prime + x)));
    let graph = Graph::from_edges(r_prime + f0.n(), edges)?;
    let pedal = PedalGraph {
        graph,
        heart: (0..r_prime).collect(),
        f0_vertices: (r_prime..r_prime + f0.n()).collect(),
        type_s: f0.m() + cross.len(),
        r,
    };
    pedal.validate()?;
    Ok(pedal)
}

/// Canonical key of a pedal: `F_0` adjacency bits and the sorted heart
/// neighbourhoods, minimised over relabellings of `F_0` that respect a
/// degree-based cell order. Heart symmetry is absorbed by the sorting.
type Key = (u64, Vec<u16>);

/// `F_0` adjacency must fit the 64 pair bits.
const MAX_F0: usize = 11;

struct Shape {
    m: usize,
    adj: Vec<u16>,
    cross: Vec<u32>,
}

impl Shape {
    fn pair_bit(m: usize, a: usize, b: usize) -> u64 {
        let (a, b) = (a.min(b), a.max(b));
        1 << (a * (2 * m - a - 1) / 2 + b - a - 1)
    }

    fn key_under(&self, perm: &[usize], r_prime: usize) -> Key {
        let mut bits = 0u64;
        for a in 0..self.m {
            for b in a + 1..self.m {
                if self.adj[a] >> b & 1 == 1 {
                    bits |= Self::pair_bit(self.m, perm[a], perm[b]);
                }
            }
        }
        let mut heart: Vec<u16> = (0..r_prime)
            .map(|h| {
                (0..self.m)
                    .filter(|&x| self.cross[x] >> h & 1 == 1)
                    .fold(0u16, |acc, x| acc | 1 << perm[x])
            })
            .collect();
        heart.sort_unstable();
        (bits, heart)
    }

    fn canonical(&self, r_prime: usize) -> Key {
        let inv = |x: usize| (self.adj[x].count_ones(), self.cross[x].count_ones());
        let mut order: Vec<usize> = (0..self.m).collect();
        order.sort_by_key(|&x| inv(x));
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for &x in &order {
            match cells.last_mut() {
                Some(c) if inv(c[0]) == inv(x) => c.push(x),
                _ => cells.push(vec![x]),
            }
        }
        let mut perm = vec![0; self.m];
        let mut best: Option<Key> = None;
        self.permute_cells(&cells, 0, 0, &mut perm, &mut vec![false; self.m], r_prime, &mut best);
        best.unwrap()
    }

    #[allow(clippy::too_many_arguments)]
    fn permute_cells(
        &self,
        cells: &[Vec<usize>],
        cell: usize,
        pos: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        r_prime: usize,
        best: &mut Option<Key>,
    ) {
        let Some(current) = cells.get(cell) else {
            let key = self.key_under(perm, r_prime);
            if best.as_ref().is_none_or(|b| key < *b) {
                *best = Some(key);
            }
            return;
        };
        let start: usize = cells[..cell].iter().map(Vec::len).sum();
        if pos == current.len() {
            self.permute_cells(cells, cell + 1, 0, perm, used, r_prime, best);
            return;
        }
        for &x in current {
            if !used[x] {
                used[x] = true;
                perm[x] = start + pos;
                self.permute_cells(cells, cell, pos + 1, perm, used, r_prime, best);
                used[x] = false;
            }
        }
    }

    fn from_key(m: usize, key: &Key, r_prime: usize) -> Shape {
        let mut adj = vec![0u16; m];
        let mut cross = vec![0u32; m];
        for a in 0..m {
            for b in a + 1..m {
                if key.0 & Self::pair_bit(m, a, b) != 0 {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
            }
        }
        for (h, &nb) in key.1.iter().enumerate().take(r_prime) {
            for (x, c) in cross.iter_mut().enumerate() {
                if nb >> x & 1 == 1 {
                    *c |= 1 << h;
                }
            }
        }
        Shape { m, adj, cross }
    }

    fn is_connected(&self) -> bool {
        let mut seen = 1u16;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            let fresh = self.adj[x] & !seen;
            seen |= fresh;
            stack.extend((0..self.m).filter(|&y| fresh >> y & 1 == 1));
        }
        seen.count_ones() as usize == self.m
    }
}

/// All connected graphs on `m` vertices with at most `max_edges` edges and
/// minimum degree at least `min_deg`, one per isomorphism class. Built edge
/// by edge with a canonical dedup at every level.
fn connected_f0(m: usize, max_edges: usize, min_deg: usize) -> Vec<Shape> {
    let empty = Shape {
        m,
        adj: vec![0; m],
        cross: vec![0; m],
    };
    let mut level: BTreeSet<Key> = [empty.canonical(0)].into_iter().collect();
    let mut out = Vec::new();
    for edges in 0..=max_edges.min(m * (m - 1) / 2) {
        let shapes: Vec<Shape> = level.iter().map(|k| Shape::from_key(m, k, 0)).collect();
        let mut next = BTreeSet::new();
        for s in shapes {
            if edges + 1 <= max_edges {
                for a in 0..m {
                    for b in a + 1..m {
                        if s.adj[a] >> b & 1 == 0 {
                            let mut t = Shape {
                                m,
                                adj: s.adj.clone(),
                                cross: s.cross.clone(),
                            };
                            t.adj[a] |= 1 << b;
                            t.adj[b] |= 1 << a;
                            next.insert(t.canonical(0));
                        }
                    }
                }
            }
            if s.is_connected() && s.adj.iter().all(|a| a.count_ones() as usize >= min_deg) {
                out.push(s);
            }
        }
        level = next;
    }
    out
}

/// Every graph on `m <= 11` vertices satisfying `keep`, one per
/// isomorphism class, assuming `keep` is closed under deleting edges. Only
/// kept graphs are extended, so the search never leaves the class.
pub(crate) fn subgraph_closed_class(m: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    assert!(m <= MAX_F0, "too many vertices for canonical enumeration");
    let to_graph = |s: &Shape| {
        let edges = (0..m).flat_map(|a| (a + 1..m).filter(move |&b| s.adj[a] >> b & 1 == 1).map(move |b| (a, b)));
        Graph::from_edges(m, edges.collect::<Vec<_>>()).expect("shape edges are simple")
    };
    let empty = Shape {
        m,
        adj: vec![0; m],
        cross: vec![0; m],
    };
    let mut out = Vec::new();
    if !keep(&to_graph(&empty)) {
        return out;
    }
    let mut level: BTreeSet<Key> = [empty.canonical(0)].into_iter().collect();
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for key in &level {
            let s = Shape::from_key(m, key, 0);
            out.push(to_graph(&s));
            for a in 0..m {
                for b in a + 1..m {
                    if s.adj[a] >> b & 1 == 0 {
                        let mut t = Shape {
                            m,
                            adj: s.adj.clone(),
                            cross: s.cross.clone(),
                        };
                        t.adj[a] |= 1 << b;
                        t.adj[b] |= 1 << a;
                        let k = t.canonical(0);
                        if !next.contains(&k) && keep(&to_graph(&Shape::from_key(m, &k, 0))) {
                            next.insert(k);
                        }
                    }
                }
            }
        }
        level = next;
    }
    out
}

/// Every pedal graph of type exactly `s` over the heart `I_{r'}`, with `F_0`
/// connected, one per isomorphism class (heart fixed setwise), in canonical
/// order.
pub fn enumerate_pedals(r_prime: usize, r: usize, s: usize) -> Vec<PedalGraph> {
    assert!(r_prime <= 16, "heart too large for pedal enumeration");
    let mut keys: BTreeSet<(usize, Key)> = BTreeSet::new();
    // degrees in F_0 plus cross sum to 2|E_0| + cross <= 2s, and each is >= r
    let max_m = if r == 0 { s + 1 } else { (2 * s / r).min(s + 1) };
    for m in 1..=max_m.min(MAX_F0) {
        for f0 in connected_f0(m, s, r.saturating_sub(r_prime)) {
            let e0 = f0.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2;
            let need: Vec<usize> = f0.adj.iter().map(|a| r.saturating_sub(a.count_ones() as usize)).collect();
            let Some(budget) = s.checked_sub(e0) else { continue };
            if need.iter().sum::<usize>() > budget {
                continue;
            }
            let mut shape = f0;
            distribute(&mut shape, 0, budget, &need, r_prime, &mut |sh| {
                keys.insert((m, sh.canonical(r_prime)));
            });
        }
    }
    keys.into_iter()
        .map(|(m, key)| {
            let sh = Shape::from_key(m, &key, r_prime);
            let f0 = Graph::from_edges(
                m,
                (0..m).flat_map(|a| (a + 1..m).filter(move |&b| key.0 & Shape::pair_bit(m, a, b) != 0).map(move |b| (a, b))),
            )
            .expect("canonical F0 is simple");
            let cross: Vec<(usize, usize)> = (0..m)
                .flat_map(|x| {
                    let c = sh.cross[x];
                    (0..r_prime).filter(move |&h| c >> h & 1 == 1).map(move |h| (x, h))
                })
                .collect();
            gen_pedal(r_prime, &f0, r, &cross).expect("enumerated pedal is valid")
        })
        .collect()
}

/// Assigns cross sets to `F_0` vertices `x..` so the total is exactly `left`.
fn distribute(
    sh: &mut Shape,
    x: usize,
    left: usize,
    need: &[usize],
    r_prime: usize,
    visit: &mut impl FnMut(&Shape),
) {
    if x == sh.m {
        if left == 0 {
            visit(sh);
        }
        return;
    }
    let rest_need: usize = need[x + 1..].iter().sum();
    let rest_cap = (sh.m - x - 1) * r_prime;
    for c in need[x]..=r_prime.min(left) {
        if left - c < rest_need || left - c > rest_cap {
            continue;
        }
        for mask in 0u32..1 << r_prime {
            if mask.count_ones() as usize == c {
                sh.cross[x] = mask;
                distribute(sh, x + 1, left - c, need, r_prime, visit);
            }
        }
    }
    sh.cross[x] = 0;
}
