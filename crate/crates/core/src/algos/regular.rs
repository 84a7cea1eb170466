use crate::graph::Graph;

use super::{core_subgraph, for_each_combination, Budget, Decision, Exhausted, Meter};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum EdgeState {
    Open,
    In,
    Out,
}

struct Walk<'a> {
    g: &'a Graph,
    r: usize,
    state: Vec<EdgeState>,
    deg_in: Vec<usize>,
    /// Incident edge indices per vertex.
    inc: Vec<Vec<usize>>,
}

impl Walk<'_> {
    fn other(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.g.edges()[e];
        if a == v {
            b
        } else {
            a
        }
    }

    fn open_edges(&self, v: usize) -> Vec<usize> {
        self.inc[v]
            .iter()
            .copied()
            .filter(|&e| self.state[e] == EdgeState::Open)
            .collect()
    }

    /// A touched vertex that still needs edges, lowest id first.
    fn unsaturated(&self) -> Option<usize> {
        (0..self.g.n()).find(|&v| self.deg_in[v] > 0 && self.deg_in[v] < self.r)
    }

    fn feasible(&self, v: usize) -> bool {
        let open = self.inc[v]
            .iter()
            .filter(|&&e| self.state[e] == EdgeState::Open && self.deg_in[self.other(e, v)] < self.r)
            .count();
        self.deg_in[v] == 0 || self.deg_in[v] + open >= self.r
    }

    /// Saturates `v`: picks the missing edges among its open ones and closes
    /// the rest.
    fn saturate(&mut self, v: usize, meter: &mut Meter) -> Result<bool, Exhausted> {
        meter.tick()?;
        let open: Vec<usize> = self
            .open_edges(v)
            .into_iter()
            .filter(|&e| self.deg_in[self.other(e, v)] < self.r)
            .collect();
        let need = self.r - self.deg_in[v];
        if open.len() < need {
            return Ok(false);
        }
        let all_open = self.open_edges(v);
        let mut result = Ok(false);
        for_each_combination(&open, need, |chosen| {
            for &e in &all_open {
                self.state[e] = EdgeState::Out;
            }
            for &e in chosen {
                self.state[e] = EdgeState::In;
                let (a, b) = self.g.edges()[e];
                self.deg_in[a] += 1;
                self.deg_in[b] += 1;
            }
            let neighbours: Vec<usize> = all_open.iter().map(|&e| self.other(e, v)).collect();
            let outcome = if neighbours.iter().all(|&w| self.feasible(w)) {
                self.step(meter)
            } else {
                Ok(false)
            };
            for &e in chosen {
                let (a, b) = self.g.edges()[e];
                self.deg_in[a] -= 1;
                self.deg_in[b] -= 1;
            }
            for &e in &all_open {
                self.state[e] = EdgeState::Open;
            }
            match outcome {
                Ok(false) => true,
                other => {
                    result = other;
                    false
                }
            }
        });
        result
    }

    fn step(&mut self, meter: &mut Meter) -> Result<bool, Exhausted> {
        match self.unsaturated() {
            None => Ok(true),
            Some(v) => self.saturate(v, meter),
        }
    }
}

/// Whether some nonempty subgraph is `r`-regular. The search runs on the
/// `r`-core: it fixes the lowest vertex `v0` of the subgraph, forbids
/// everything below it, and repeatedly saturates the lowest touched vertex
/// whose degree is still short of `r`.
pub fn has_r_regular_subgraph(g: &Graph, r: usize, budget: Budget) -> Decision {
    if r == 0 {
        return Decision::from_bool(g.n() > 0);
    }
    let (core, _) = core_subgraph(g, r);
    let mut inc = vec![Vec::new(); core.n()];
    for (i, &(u, v)) in core.edges().iter().enumerate() {
        inc[u].push(i);
        inc[v].push(i);
    }
    let mut search = Walk {
        g: &core,
        r,
        state: vec![EdgeState::Open; core.m()],
        deg_in: vec![0; core.n()],
        inc,
    };
    let mut meter = budget.meter();
    for v0 in 0..core.n() {
        match search.saturate(v0, &mut meter) {
            Err(Exhausted) => return Decision::Undecided,
            Ok(true) => return Decision::Yes,
            Ok(false) => {}
        }
        for &e in &search.inc[v0] {
            search.state[e] = EdgeState::Out;
        }
    }
    Decision::No
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn brute(g: &Graph, r: usize) -> bool {
        (1u32..1 << g.m()).any(|mask| {
            let mut deg = vec![0; g.n()];
            for (i, &(u, v)) in g.edges().iter().enumerate() {
                if mask >> i & 1 == 1 {
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
            deg.iter().all(|&d| d == 0 || d == r)
        })
    }

    #[test]
    fn examples() {
        let b = Budget::DEFAULT;
        assert_eq!(has_r_regular_subgraph(&complete(4), 3, b), Decision::Yes);
        assert_eq!(has_r_regular_subgraph(&complete(4), 2, b), Decision::Yes);
        assert_eq!(has_r_regular_subgraph(&star(5), 2, b), Decision::No);
        assert_eq!(has_r_regular_subgraph(&petersen(), 3, b), Decision::Yes);
        assert_eq!(has_r_regular_subgraph(&complete(5), 4, b), Decision::Yes);
        assert_eq!(has_r_regular_subgraph(&complete(5), 5, b), Decision::No);
        // K_{3,3} plus a pendant path still has its 3-regular part
        let g = Graph::from_edges(
            8,
            complete_bipartite(3, 3).edges().iter().copied().chain([(5, 6), (6, 7)]),
        )
        .unwrap();
        assert_eq!(has_r_regular_subgraph(&g, 3, b), Decision::Yes);
    }

    #[test]
    fn matches_brute_force() {
        let mut seed = 11u64;
        for _ in 0..80 {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let n = 4 + (seed >> 61) as usize;
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .enumerate()
                .filter(|(i, _)| (seed >> (i % 40)) & 3 != 0)
                .map(|(_, e)| e)
                .take(16)
                .collect();
            let g = Graph::from_edges(n, edges).unwrap();
            for r in 1..=4 {
                assert_eq!(
                    has_r_regular_subgraph(&g, r, Budget::DEFAULT).known(),
                    Some(brute(&g, r)),
                    "{g:?} r={r}"
                );
            }
        }
    }
}
