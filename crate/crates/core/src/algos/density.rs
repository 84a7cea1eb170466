use std::collections::VecDeque;

use num_rational::Ratio;

use crate::graph::Graph;

/// Dinic max-flow on a small dense-id network.
struct FlowNet {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
}

impl FlowNet {
    fn new(n: usize) -> Self {
        FlowNet {
            head: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add(&mut self, u: usize, v: usize, c_uv: i64, c_vu: i64) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c_uv);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(c_vu);
    }

    fn levels(&self, s: usize) -> Vec<Option<usize>> {
        let mut level = vec![None; self.head.len()];
        level[s] = Some(0);
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && level[v].is_none() {
                    level[v] = Some(level[u].unwrap() + 1);
                    q.push_back(v);
                }
            }
        }
        level
    }

    fn push(&mut self, u: usize, t: usize, f: i64, level: &[Option<usize>], it: &mut [usize]) -> i64 {
        if u == t {
            return f;
        }
        while it[u] < self.head[u].len() {
            let e = self.head[u][it[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && level[v] == level[u].map(|l| l + 1) {
                let d = self.push(v, t, f.min(self.cap[e]), level, it);
                if d > 0 {
                    self.cap[e] -= d;
                    self.cap[e ^ 1] += d;
                    return d;
                }
            }
            it[u] += 1;
        }
        0
    }

    /// Runs max-flow and returns the source side of a minimum cut.
    fn min_cut(&mut self, s: usize, t: usize) -> Vec<bool> {
        loop {
            let level = self.levels(s);
            if level[t].is_none() {
                return level.iter().map(Option::is_some).collect();
            }
            let mut it = vec![0; self.head.len()];
            while self.push(s, t, i64::MAX, &level, &mut it) > 0 {}
        }
    }
}

/// A vertex set `A` maximising `q·|E(A)| - p·|A|`, via Goldberg's network.
/// Empty when the maximum is zero.
fn densest_above(g: &Graph, p: i64, q: i64) -> Vec<usize> {
    let n = g.n();
    let (s, t) = (n, n + 1);
    let big = q * g.m() as i64;
    let mut net = FlowNet::new(n + 2);
    for v in 0..n {
        net.add(s, v, big, 0);
        net.add(v, t, big + 2 * p - q * g.degree(v) as i64, 0);
    }
    for &(u, v) in g.edges() {
        net.add(u, v, q, q);
    }
    let side = net.min_cut(s, t);
    (0..n).filter(|&v| side[v]).collect()
}

fn induced_edges(g: &Graph, set: &[usize]) -> usize {
    let mut mark = vec![false; g.n()];
    for &v in set {
        mark[v] = true;
    }
    g.edges().iter().filter(|&&(u, v)| mark[u] && mark[v]).count()
}

/// Maximum over nonempty subgraphs of `2|E(H)|/|V(H)|`, exactly.
///
/// Dinkelbach iteration on the density `λ = |E|/|V|`: starting from the
/// whole graph, a min cut either finds a strictly denser set or proves `λ`
/// optimal. Zero for graphs without edges.
pub fn max_average_degree(g: &Graph) -> Ratio<i64> {
    if g.m() == 0 {
        return Ratio::from_integer(0);
    }
    let mut lambda = Ratio::new(g.m() as i64, g.n() as i64);
    loop {
        let better = densest_above(g, *lambda.numer(), *lambda.denom());
        if better.is_empty() {
            return lambda * 2;
        }
        let next = Ratio::new(induced_edges(g, &better) as i64, better.len() as i64);
        if next <= lambda {
            return lambda * 2;
        }
        lambda = next;
    }
}

/// Subset enumeration; only for small graphs.
pub fn max_average_degree_brute_force(g: &Graph) -> Ratio<i64> {
    assert!(g.n() <= 20, "brute force is for graphs with at most 20 vertices");
    let mut best = Ratio::from_integer(0);
    for mask in 1u32..1 << g.n() {
        let set: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let d = Ratio::new(2 * induced_edges(g, &set) as i64, set.len() as i64);
        best = best.max(d);
    }
    best
}

/// Number of `r`-vertex cliques. Each clique is counted once, from its
/// lowest vertex, by extending through higher neighbours only.
pub fn count_cliques(g: &Graph, r: usize) -> u64 {
    fn extend(g: &Graph, cand: &[usize], left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for (i, &v) in cand.iter().enumerate() {
            if cand.len() - i < left {
                break;
            }
            let next: Vec<usize> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            total += extend(g, &next, left - 1);
        }
        total
    }
    match r {
        0 => 1,
        1 => g.n() as u64,
        2 => g.m() as u64,
        _ => g
            .vertices()
            .map(|v| {
                let up: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w > v).collect();
                extend(g, &up, r - 1)
            })
            .sum(),
    }
}

/// `binom(x, k)` for real `x`: `x(x-1)...(x-k+1)/k!` when `x >= k-1`, and 0
/// below that (where the product would change sign).
pub fn generalized_binomial(x: Ratio<i64>, k: usize) -> Ratio<i128> {
    let x = Ratio::new(*x.numer() as i128, *x.denom() as i128);
    if k == 0 {
        return Ratio::from_integer(1);
    }
    if x < Ratio::from_integer(k as i128 - 1) {
        return Ratio::from_integer(0);
    }
    let mut acc = Ratio::from_integer(1);
    for i in 0..k as i128 {
        acc = acc * (x - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use proptest::prelude::*;

    #[test]
    fn mad_examples() {
        assert_eq!(max_average_degree(&complete(4)), Ratio::from_integer(3));
        assert_eq!(max_average_degree(&path(4)), Ratio::new(3, 2));
        let k4_pendant = Graph::from_edges(
            5,
            complete(4).edges().iter().copied().chain([(3, 4)]),
        )
        .unwrap();
        assert_eq!(max_average_degree(&k4_pendant), Ratio::from_integer(3));
        assert_eq!(max_average_degree_brute_force(&k4_pendant), Ratio::from_integer(3));
        assert_eq!(max_average_degree(&Graph::empty(4)), Ratio::from_integer(0));
        assert_eq!(max_average_degree(&petersen()), Ratio::from_integer(3));
        // K5 next to a long path: the dense part wins
        let mut edges: Vec<_> = complete(5).edges().to_vec();
        edges.extend((5..20).map(|i| (i - 1, i)));
        let g = Graph::from_edges(20, edges).unwrap();
        assert_eq!(max_average_degree(&g), Ratio::from_integer(4));
    }

    #[test]
    fn clique_examples() {
        assert_eq!(count_cliques(&complete(4), 3), 4);
        assert_eq!(count_cliques(&cycle(5), 3), 0);
        assert_eq!(count_cliques(&complete_bipartite(3, 3), 2), 9);
        assert_eq!(count_cliques(&complete(6), 4), 15);
        assert_eq!(count_cliques(&petersen(), 1), 10);
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(generalized_binomial(Ratio::from_integer(5), 2), Ratio::from_integer(10));
        assert_eq!(generalized_binomial(Ratio::new(3, 2), 1), Ratio::new(3, 2));
        assert_eq!(generalized_binomial(Ratio::new(5, 2), 2), Ratio::new(15, 8));
        assert_eq!(generalized_binomial(Ratio::new(3, 2), 3), Ratio::from_integer(0));
        assert_eq!(generalized_binomial(Ratio::from_integer(2), 3), Ratio::from_integer(0));
        assert_eq!(generalized_binomial(Ratio::from_integer(0), 0), Ratio::from_integer(1));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=10, any::<u64>(), 0u32..4).prop_map(|(n, bits, sparsity)| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let chosen = pairs
                .enumerate()
                .filter(|(i, _)| (bits.rotate_left(*i as u32 * 7) & ((1 << sparsity) - 1 | 1)) == 1);
            Graph::from_edges(n, chosen.map(|(_, e)| e)).unwrap()
        })
    }

    proptest! {
        #[test]
        fn mad_matches_brute_force(g in arb_graph()) {
            prop_assert_eq!(max_average_degree(&g), max_average_degree_brute_force(&g));
        }

        #[test]
        fn clique_bound_holds(g in arb_graph(), r in 2usize..=4) {
            let bound = generalized_binomial(max_average_degree(&g), r - 1) * g.n() as i128;
            prop_assert!(Ratio::from_integer(count_cliques(&g, r) as i128) <= bound);
        }
    }
}
