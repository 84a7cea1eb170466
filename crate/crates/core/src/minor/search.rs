use std::collections::VecDeque;

use crate::algos::{Budget, Exhausted, Meter, Search};
use crate::error::{invalid, Result};
use crate::graph::{Graph, VertexSet};

use super::{set_radius, Depth, MinorModel};

/// Order in which `H`'s vertices receive branch sets: components by
/// decreasing size, each by BFS from a maximum-degree vertex, isolated
/// vertices last. Every non-first vertex of a component has an earlier
/// neighbour.
fn placement_order(h: &Graph) -> Vec<usize> {
    let mut comps = h.components();
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut order = Vec::with_capacity(h.n());
    for comp in comps {
        let root = *comp
            .iter()
            .max_by_key(|&&v| (h.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let mut seen = vec![false; h.n()];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            let mut next: Vec<usize> = h.neighbors(v).iter().copied().filter(|&w| !seen[w]).collect();
            next.sort_by_key(|&w| (std::cmp::Reverse(h.degree(w)), w));
            for w in next {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

struct MinorSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    depth: Depth,
    order: Vec<usize>,
    /// Branch set owner of each host vertex, as an index into `order`.
    owner: Vec<Option<usize>>,
    sets: Vec<Vec<usize>>,
    free: usize,
    meter: Meter,
}

impl MinorSearch<'_> {
    fn earlier_neighbours(&self, i: usize) -> Vec<usize> {
        let hv = self.order[i];
        (0..i).filter(|&j| self.h.has_edge(hv, self.order[j])).collect()
    }

    fn touches(&self, set: &[usize], j: usize) -> bool {
        set.iter()
            .any(|&x| self.g.neighbors(x).iter().any(|&y| self.owner[y] == Some(j)))
    }

    /// Every placed branch set that still has unplaced `H`-neighbours must
    /// border a free host vertex.
    fn frontier_ok(&self, placed: usize) -> bool {
        (0..placed).all(|j| {
            let hv = self.order[j];
            let pending = self.order[placed..].iter().any(|&u| self.h.has_edge(hv, u));
            !pending
                || self.sets[j]
                    .iter()
                    .any(|&x| self.g.neighbors(x).iter().any(|&y| self.owner[y].is_none()))
        })
    }

    fn boundary_edges(&self, set: &[usize], mark: &[bool]) -> usize {
        set.iter()
            .map(|&x| self.g.neighbors(x).iter().filter(|&&y| !mark[y]).count())
            .sum()
    }

    fn admissible(&self, i: usize, set: &[usize], need: &[usize]) -> bool {
        let hv = self.order[i];
        let mut mark = vec![false; self.g.n()];
        for &x in set {
            mark[x] = true;
        }
        if self.boundary_edges(set, &mark) < self.h.degree(hv) {
            return false;
        }
        if !need.iter().all(|&j| self.touches(set, j)) {
            return false;
        }
        match self.depth {
            Depth::Unbounded => true,
            Depth::Bounded(l) => set_radius(self.g, &set.iter().copied().collect()) <= l,
        }
    }

    fn place(&mut self, i: usize) -> std::result::Result<bool, Exhausted> {
        self.meter.tick()?;
        if i == self.order.len() {
            return Ok(true);
        }
        let remaining = self.order.len() - i;
        if self.free < remaining {
            return Ok(false);
        }
        let need = self.earlier_neighbours(i);
        let roots: Vec<usize> = match need.first() {
            Some(&j) => {
                let mut r: Vec<usize> = self.sets[j]
                    .iter()
                    .flat_map(|&x| self.g.neighbors(x).iter().copied())
                    .filter(|&y| self.owner[y].is_none())
                    .collect();
                r.sort_unstable();
                r.dedup();
                r
            }
            None => (0..self.g.n()).filter(|&v| self.owner[v].is_none()).collect(),
        };
        let max_size = match self.depth {
            Depth::Bounded(0) => 1,
            _ => self.free - (remaining - 1),
        };
        let mut banned = vec![false; self.g.n()];
        for &root in &roots {
            let mut set = vec![root];
            let ext: Vec<usize> = self.exclusive_neighbours(root, &set, &banned);
            if self.grow(i, &need, &mut set, ext, &banned, max_size)? {
                return Ok(true);
            }
            banned[root] = true;
        }
        Ok(false)
    }

    /// Free, unbanned neighbours of `w` not already in or next to `set`.
    fn exclusive_neighbours(&self, w: usize, set: &[usize], banned: &[bool]) -> Vec<usize> {
        self.g
            .neighbors(w)
            .iter()
            .copied()
            .filter(|&u| self.owner[u].is_none() && !banned[u] && !set.contains(&u))
            .filter(|&u| {
                !set.iter()
                    .filter(|&&s| s != w)
                    .any(|&s| self.g.has_edge(s, u))
            })
            .collect()
    }

    /// Enumerates connected sets containing `set` (each exactly once, in the
    /// manner of ESU) and recurses into the next placement for each.
    fn grow(
        &mut self,
        i: usize,
        need: &[usize],
        set: &mut Vec<usize>,
        mut ext: Vec<usize>,
        banned: &[bool],
        max_size: usize,
    ) -> std::result::Result<bool, Exhausted> {
        self.meter.tick()?;
        if self.admissible(i, set, need) && self.commit(i, set)? {
            return Ok(true);
        }
        if set.len() == max_size {
            return Ok(false);
        }
        while let Some(w) = ext.pop() {
            let mut grown = ext.clone();
            let before_w: Vec<usize> = set.clone();
            for u in self.exclusive_neighbours(w, &before_w, banned) {
                if !grown.contains(&u) && !set.contains(&u) && !self.adjacent_to_set(u, set) {
                    grown.push(u);
                }
            }
            set.push(w);
            let done = self.grow(i, need, set, grown, banned, max_size)?;
            set.pop();
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn adjacent_to_set(&self, u: usize, set: &[usize]) -> bool {
        set.iter().any(|&s| self.g.has_edge(s, u))
    }

    fn commit(&mut self, i: usize, set: &[usize]) -> std::result::Result<bool, Exhausted> {
        for &x in set {
            self.owner[x] = Some(i);
        }
        self.sets.push(set.to_vec());
        self.free -= set.len();
        let ok = self.frontier_ok(i + 1) && self.place(i + 1)?;
        if !ok {
            self.free += set.len();
            self.sets.pop();
            for &x in set {
                self.owner[x] = None;
            }
        }
        Ok(ok)
    }
}

/// Vertices of `g` that can be dropped when every vertex of `h` has degree
/// at least two: repeatedly delete host vertices of degree at most one.
fn prune_host(g: &Graph, h: &Graph) -> Vec<bool> {
    let mut alive = vec![true; g.n()];
    if h.n() == 0 || h.min_degree().unwrap_or(0) < 2 {
        return alive;
    }
    let mut deg = g.degrees();
    let mut stack: Vec<usize> = g.vertices().filter(|&v| deg[v] <= 1).collect();
    for &v in &stack {
        alive[v] = false;
    }
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] <= 1 {
                    alive[w] = false;
                    stack.push(w);
                }
            }
        }
    }
    alive
}

/// Searches for a model of `h` in `g` whose branch sets have radius at most
/// `depth`. `Depth::Bounded(0)` is subgraph containment.
pub fn contains_shallow_minor(
    g: &Graph,
    h: &Graph,
    depth: Depth,
    budget: Budget,
) -> Search<MinorModel> {
    if h.n() == 0 {
        return Search::Found(MinorModel { branch_sets: Vec::new() });
    }
    if h.n() > g.n() || h.m() > g.m() {
        return Search::Absent;
    }
    let alive = prune_host(g, h);
    let host = g.restrict(&alive);
    let mut owner = vec![None; g.n()];
    for v in g.vertices().filter(|&v| !alive[v]) {
        owner[v] = Some(usize::MAX);
    }
    let free = alive.iter().filter(|&&a| a).count();
    let order = placement_order(h);
    let mut search = MinorSearch {
        g: &host,
        h,
        depth,
        order,
        owner,
        sets: Vec::new(),
        free,
        meter: budget.meter(),
    };
    match search.place(0) {
        Err(Exhausted) => Search::Undecided,
        Ok(false) => Search::Absent,
        Ok(true) => {
            let mut branch_sets = vec![VertexSet::new(); h.n()];
            for (i, set) in search.sets.iter().enumerate() {
                branch_sets[search.order[i]] = set.iter().copied().collect();
            }
            Search::Found(MinorModel { branch_sets })
        }
    }
}

/// Searches for a model of `h` as a minor of `g`.
pub fn contains_minor(g: &Graph, h: &Graph, budget: Budget) -> Search<MinorModel> {
    contains_shallow_minor(g, h, Depth::Unbounded, budget)
}

/// Parses `"inf"` or a nonnegative integer.
impl std::str::FromStr for Depth {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "unbounded" => Ok(Depth::Unbounded),
            other => other
                .parse()
                .map(Depth::Bounded)
                .map_err(|_| invalid(format!("depth must be an integer or 'inf', got {other:?}"))),
        }
    }
}
