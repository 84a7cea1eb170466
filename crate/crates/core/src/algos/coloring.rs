use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{for_each_combination, Budget, Decision, Exhausted, Meter, Search};

/// Exhaustive choosability is limited to graphs whose `r`-core has at most
/// this many vertices.
pub const CHOOSABLE_MAX_N: usize = 8;
pub const CHOOSABLE_MAX_R: usize = 3;

/// A colour list for every vertex. Colours are arbitrary integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<BTreeSet<i64>>,
}

impl ListAssignment {
    pub fn new<I, L>(lists: I) -> Self
    where
        I: IntoIterator<Item = L>,
        L: IntoIterator<Item = i64>,
    {
        ListAssignment {
            lists: lists.into_iter().map(|l| l.into_iter().collect()).collect(),
        }
    }

    /// The same list `0..k` on each of `n` vertices.
    pub fn uniform(n: usize, k: usize) -> Self {
        Self::new((0..n).map(|_| 0..k as i64))
    }

    pub fn list(&self, v: usize) -> &BTreeSet<i64> {
        &self.lists[v]
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn min_size(&self) -> Option<usize> {
        self.lists.iter().map(BTreeSet::len).min()
    }

    pub fn max_size(&self) -> Option<usize> {
        self.lists.iter().map(BTreeSet::len).max()
    }

    /// Lists of the vertices `map[0], map[1], ...` in that order.
    pub fn restrict(&self, map: &[usize]) -> Self {
        ListAssignment {
            lists: map.iter().map(|&v| self.lists[v].clone()).collect(),
        }
    }

    /// Whether `coloring` is proper and respects the lists.
    pub fn admits(&self, g: &Graph, coloring: &[i64]) -> bool {
        coloring.len() == g.n()
            && self.lists.len() == g.n()
            && g.vertices().all(|v| self.lists[v].contains(&coloring[v]))
            && g.edges().iter().all(|&(u, v)| coloring[u] != coloring[v])
    }
}

/// Backtracking over colour indices with forward checking. The next vertex
/// is the uncoloured one with the fewest available colours, then the
/// highest degree, then the lowest id.
struct Solver<'a> {
    g: &'a Graph,
    colors: usize,
    allowed: Vec<Vec<usize>>,
    blocked: Vec<u32>,
    avail: Vec<usize>,
    color: Vec<Option<usize>>,
    active: Vec<bool>,
    /// Colours are interchangeable: never open colour `c + 1` before `c`.
    symmetric: bool,
    used_prefix: usize,
}

impl<'a> Solver<'a> {
    fn new(g: &'a Graph, colors: usize, allowed: Vec<Vec<usize>>, symmetric: bool) -> Self {
        let avail = allowed.iter().map(Vec::len).collect();
        Solver {
            g,
            colors,
            allowed,
            blocked: vec![0; g.n() * colors],
            avail,
            color: vec![None; g.n()],
            active: vec![false; g.n()],
            symmetric,
            used_prefix: 0,
        }
    }

    fn is_allowed(&self, v: usize, c: usize) -> bool {
        self.allowed[v].binary_search(&c).is_ok()
    }

    fn select(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.active[v] && self.color[v].is_none())
            .min_by_key(|&v| (self.avail[v], Reverse(self.g.degree(v)), v))
    }

    /// Colours `v` with `c`; false if some neighbour is left without options.
    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = Some(c);
        let mut ok = true;
        for &w in self.g.neighbors(v) {
            if self.active[w] && self.color[w].is_none() && self.is_allowed(w, c) {
                let slot = &mut self.blocked[w * self.colors + c];
                *slot += 1;
                if *slot == 1 {
                    self.avail[w] -= 1;
                    if self.avail[w] == 0 {
                        ok = false;
                    }
                }
            }
        }
        ok
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = None;
        for &w in self.g.neighbors(v) {
            if self.active[w] && self.color[w].is_none() && self.is_allowed(w, c) {
                let slot = &mut self.blocked[w * self.colors + c];
                *slot -= 1;
                if *slot == 0 {
                    self.avail[w] += 1;
                }
            }
        }
    }

    fn dfs(&mut self, meter: &mut Meter) -> std::result::Result<bool, Exhausted> {
        meter.tick()?;
        let Some(v) = self.select() else {
            return Ok(true);
        };
        if self.avail[v] == 0 {
            return Ok(false);
        }
        let candidates: Vec<usize> = self.allowed[v]
            .iter()
            .copied()
            .filter(|&c| self.blocked[v * self.colors + c] == 0)
            .filter(|&c| !self.symmetric || c <= self.used_prefix)
            .collect();
        for c in candidates {
            let saved = self.used_prefix;
            if self.symmetric && c == self.used_prefix {
                self.used_prefix += 1;
            }
            if self.assign(v, c) && self.dfs(meter)? {
                return Ok(true);
            }
            self.unassign(v, c);
            self.used_prefix = saved;
        }
        Ok(false)
    }

    /// Solves each component of the active vertices separately.
    fn solve(&mut self, active: &[bool], meter: &mut Meter) -> std::result::Result<bool, Exhausted> {
        let comps = self.g.restrict(active).components();
        for comp in comps.into_iter().filter(|c| active[c[0]]) {
            for &v in &comp {
                self.active[v] = true;
            }
            self.used_prefix = 0;
            let ok = self.dfs(meter)?;
            for &v in &comp {
                self.active[v] = false;
            }
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Peels vertices whose list is longer than their remaining degree; these
/// can always be coloured last. Returns the alive mask and the peel order.
fn peel_easy(g: &Graph, sizes: &[usize]) -> (Vec<bool>, Vec<usize>) {
    let mut deg = g.degrees();
    let mut alive = vec![true; g.n()];
    let mut order = Vec::new();
    let mut stack: Vec<usize> = g.vertices().filter(|&v| sizes[v] > deg[v]).collect();
    for &v in &stack {
        alive[v] = false;
    }
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if sizes[w] > deg[w] {
                    alive[w] = false;
                    stack.push(w);
                }
            }
        }
    }
    (alive, order)
}

fn solve_indexed(
    g: &Graph,
    colors: usize,
    allowed: Vec<Vec<usize>>,
    symmetric: bool,
    budget: Budget,
) -> Search<Vec<usize>> {
    let sizes: Vec<usize> = allowed.iter().map(Vec::len).collect();
    let (hard, peeled) = peel_easy(g, &sizes);
    let mut solver = Solver::new(g, colors, allowed, symmetric);
    let mut meter = budget.meter();
    match solver.solve(&hard, &mut meter) {
        Err(Exhausted) => return Search::Undecided,
        Ok(false) => return Search::Absent,
        Ok(true) => {}
    }
    let mut color = solver.color;
    for &v in peeled.iter().rev() {
        let taken: BTreeSet<usize> = g.neighbors(v).iter().filter_map(|&w| color[w]).collect();
        let c = solver.allowed[v]
            .iter()
            .copied()
            .find(|c| !taken.contains(c))
            .expect("peeled vertex has a free colour");
        color[v] = Some(c);
    }
    Search::Found(color.into_iter().map(Option::unwrap).collect())
}

/// Searches for a proper colouring `c` with `c(v) ∈ L_v` for every vertex.
pub fn list_color_feasible(
    g: &Graph,
    lists: &ListAssignment,
    budget: Budget,
) -> Result<Search<Vec<i64>>> {
    if lists.len() != g.n() {
        return Err(Error::Precondition(format!(
            "{} lists for a graph on {} vertices",
            lists.len(),
            g.n()
        )));
    }
    let palette: Vec<i64> = lists
        .lists
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index: BTreeMap<i64, usize> = palette.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let allowed = lists
        .lists
        .iter()
        .map(|l| l.iter().map(|c| index[c]).collect())
        .collect();
    Ok(solve_indexed(g, palette.len(), allowed, false, budget)
        .map(|col| col.into_iter().map(|i| palette[i]).collect()))
}

/// Whether `g` has a proper `r`-colouring.
pub fn chromatic_feasible(g: &Graph, r: usize, budget: Budget) -> Decision {
    if r == 0 {
        return Decision::from_bool(g.n() == 0);
    }
    if r > g.max_degree() {
        return Decision::Yes;
    }
    let allowed = vec![(0..r).collect(); g.n()];
    solve_indexed(g, r, allowed, true, budget).decision()
}

/// Exhaustive `r`-choosability.
///
/// Works on the `r`-core (vertices peeled off have fewer than `r` coloured
/// neighbours when put back). Lists are enumerated up to renaming of colours
/// over a palette of size `r·n`: each new list takes some colours already in
/// use and the next unused ones in order. The search stops at the first
/// prefix of vertices whose lists already admit no colouring.
pub fn choosable(g: &Graph, r: usize) -> Result<bool> {
    let (core, _) = super::core_subgraph(g, r);
    if core.n() == 0 {
        return Ok(true);
    }
    if r == 0 {
        return Ok(false);
    }
    if core.n() > CHOOSABLE_MAX_N || r > CHOOSABLE_MAX_R {
        return Err(Error::CapExceeded(format!(
            "choosability is exhaustive only for r <= {CHOOSABLE_MAX_R} and r-cores with at most \
             {CHOOSABLE_MAX_N} vertices (got r = {r}, core size {})",
            core.n()
        )));
    }
    let order = bfs_order(&core);
    let mut lists: Vec<Vec<usize>> = Vec::with_capacity(core.n());
    Ok(all_assignments_colorable(&core, &order, r, 0, &mut lists))
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    for comp in g.components() {
        let dist = g.distances_from(comp[0]);
        let mut c = comp.clone();
        c.sort_by_key(|&v| (dist[v], v));
        order.extend(c);
    }
    order
}

fn prefix_colorable(g: &Graph, order: &[usize], lists: &[Vec<usize>]) -> bool {
    let prefix: crate::graph::VertexSet = order[..lists.len()].iter().copied().collect();
    let (sub, map) = g.induced_subgraph(&prefix).expect("prefix in range");
    let mut allowed = vec![Vec::new(); sub.n()];
    for (i, &v) in map.iter().enumerate() {
        let pos = order.iter().position(|&o| o == v).unwrap();
        allowed[i] = lists[pos].clone();
    }
    let colors = lists.iter().flatten().max().map_or(0, |&c| c + 1);
    matches!(
        solve_indexed(&sub, colors, allowed, false, Budget::unlimited()),
        Search::Found(_)
    )
}

fn all_assignments_colorable(
    g: &Graph,
    order: &[usize],
    r: usize,
    used: usize,
    lists: &mut Vec<Vec<usize>>,
) -> bool {
    if !lists.is_empty() && !prefix_colorable(g, order, lists) {
        return false;
    }
    if lists.len() == order.len() {
        return true;
    }
    let old: Vec<usize> = (0..used).collect();
    for fresh in 0..=r {
        let keep = r - fresh;
        let complete = for_each_combination(&old, keep, |chosen| {
            let mut list = chosen.to_vec();
            list.extend(used..used + fresh);
            lists.push(list);
            let ok = all_assignments_colorable(g, order, r, used + fresh, lists);
            lists.pop();
            ok
        });
        if !complete {
            return false;
        }
    }
    true
}
