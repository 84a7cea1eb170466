//! Exact minor search in `F ∧_t Z`, exploiting that the `t` copies of
//! `F - Z` are interchangeable.
//!
//! A model is described by a labelling `λ` of the shared vertices `Z` (label
//! 0 = unused, `j + 1` = branch set of `H`-vertex `j`) and one labelling per
//! copy. Given `λ`, a copy's labelling contributes the `H`-edges it realises,
//! the merges it causes among equally labelled `Z`-vertices, and any branch
//! set it holds entirely (such a set lives in one copy). Only the multiset of
//! contributions matters, so a breadth-first search over the accumulated
//! state decides containment for every `t` at once.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::algos::{Budget, Exhausted, Meter, Search};
use crate::error::{Error, Result};
use crate::graph::{wedge, Graph, VertexSet};

use super::MinorModel;

const MAX_H: usize = 12;
const MAX_Z: usize = 16;
const MAX_PATTERNS: u64 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Effect {
    edges: u64,
    partition: Vec<u8>,
    heartless: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct State {
    edges: u64,
    partition: Vec<u8>,
    heartless: u32,
}

fn canonical(parent: &mut [u8]) -> Vec<u8> {
    fn find(p: &mut [u8], x: usize) -> usize {
        let mut r = x;
        while p[r] as usize != r {
            r = p[r] as usize;
        }
        p[x] = r as u8;
        r
    }
    let roots: Vec<usize> = (0..parent.len()).map(|i| find(parent, i)).collect();
    let mut min_of = vec![u8::MAX; parent.len()];
    for (i, &r) in roots.iter().enumerate() {
        min_of[r] = min_of[r].min(i as u8);
    }
    roots.iter().map(|&r| min_of[r]).collect()
}

fn union(p: &mut [u8], a: usize, b: usize) {
    fn find(p: &[u8], mut x: usize) -> usize {
        while p[x] as usize != x {
            x = p[x] as usize;
        }
        x
    }
    let (ra, rb) = (find(p, a), find(p, b));
    if ra != rb {
        p[ra.max(rb)] = ra.min(rb) as u8;
    }
}

fn join_partitions(a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut p: Vec<u8> = a.to_vec();
    for (i, &bi) in b.iter().enumerate() {
        union(&mut p, i, bi as usize);
    }
    canonical(&mut p)
}

/// Automorphisms of `h` as vertex permutations (identity only when `h` is
/// too large to enumerate).
fn automorphisms(h: &Graph) -> Vec<Vec<usize>> {
    let n = h.n();
    if n > 8 {
        return vec![(0..n).collect()];
    }
    let mut out = Vec::new();
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(h: &Graph, perm: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let i = perm.len();
        if i == h.n() {
            out.push(perm.clone());
            return;
        }
        for v in 0..h.n() {
            if used[v] || h.degree(v) != h.degree(i) {
                continue;
            }
            if (0..i).any(|j| h.has_edge(i, j) != h.has_edge(v, perm[j])) {
                continue;
            }
            used[v] = true;
            perm.push(v);
            rec(h, perm, used, out);
            perm.pop();
            used[v] = false;
        }
    }
    rec(h, &mut perm, &mut used, &mut out);
    out
}

struct Setup<'a> {
    base: &'a Graph,
    h: &'a Graph,
    zs: Vec<usize>,
    ps: Vec<usize>,
    /// Position of each base vertex inside `zs` or `ps`.
    z_pos: Vec<Option<usize>>,
    p_pos: Vec<Option<usize>>,
    edge_bit: Vec<Vec<Option<u32>>>,
    all_edges: u64,
    all_labels: u32,
}

impl Setup<'_> {
    fn label_edge_bit(&self, a: u8, b: u8) -> u64 {
        if a == 0 || b == 0 || a == b {
            return 0;
        }
        match self.edge_bit[a as usize - 1][b as usize - 1] {
            Some(bit) => 1 << bit,
            None => 0,
        }
    }

    fn label_of(&self, v: usize, lambda: &[u8], mu: &[u8]) -> u8 {
        match (self.z_pos[v], self.p_pos[v]) {
            (Some(i), _) => lambda[i],
            (_, Some(i)) => mu[i],
            _ => unreachable!(),
        }
    }

    /// Contribution of one copy labelled by `mu`, or `None` if some branch
    /// set piece would be stranded.
    fn effect(&self, lambda: &[u8], heart_labels: u32, mu: &[u8]) -> Option<Effect> {
        let mut edges = 0u64;
        for &(u, v) in self.base.edges() {
            if self.z_pos[u].is_some() && self.z_pos[v].is_some() {
                continue;
            }
            edges |= self.label_edge_bit(self.label_of(u, lambda, mu), self.label_of(v, lambda, mu));
        }
        let mut parent: Vec<u8> = (0..self.zs.len() as u8).collect();
        let mut heartless = 0u32;
        let mut seen = vec![false; self.ps.len()];
        for start in 0..self.ps.len() {
            let label = mu[start];
            if label == 0 || seen[start] {
                continue;
            }
            // one piece: component of same-labelled copy vertices
            let mut piece = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < piece.len() {
                let x = self.ps[piece[k]];
                k += 1;
                for &y in self.base.neighbors(x) {
                    if let Some(j) = self.p_pos[y] {
                        if !seen[j] && mu[j] == label {
                            seen[j] = true;
                            piece.push(j);
                        }
                    }
                }
            }
            let bit = 1u32 << (label - 1);
            if heart_labels & bit != 0 {
                let mut anchors = piece.iter().flat_map(|&j| {
                    self.base
                        .neighbors(self.ps[j])
                        .iter()
                        .filter_map(|&y| self.z_pos[y])
                        .filter(|&zi| lambda[zi] == label)
                });
                let first = anchors.next()?;
                for other in anchors {
                    union(&mut parent, first, other);
                }
            } else {
                if heartless & bit != 0 {
                    return None;
                }
                heartless |= bit;
            }
        }
        Some(Effect {
            edges,
            partition: canonical(&mut parent),
            heartless,
        })
    }

    fn goal(&self, s: &State, lambda: &[u8], heart_labels: u32) -> bool {
        if s.edges != self.all_edges || (s.heartless | heart_labels) != self.all_labels {
            return false;
        }
        let mut class_of_label: HashMap<u8, u8> = HashMap::new();
        lambda.iter().enumerate().filter(|(_, &l)| l != 0).all(|(i, &l)| {
            let c = s.partition[i];
            *class_of_label.entry(l).or_insert(c) == c
        })
    }
}

/// Decides whether `h` is a minor of `wedge(base, z, t)`.
///
/// The model, when found, is expressed in the vertex ids of
/// `wedge(base, z, t)`.
pub fn wedge_contains_minor(
    base: &Graph,
    z: &VertexSet,
    t: usize,
    h: &Graph,
    budget: Budget,
) -> Result<Search<MinorModel>> {
    z.check_within(base.n())?;
    if t == 0 {
        return Err(Error::InvalidParameter("wedge multiplicity must be >= 1".into()));
    }
    let hv = h.n();
    let zs: Vec<usize> = z.iter().collect();
    let ps: Vec<usize> = base.vertices().filter(|&v| !z.contains(v)).collect();
    if hv > MAX_H || h.m() > 64 || zs.len() > MAX_Z {
        return Err(Error::CapExceeded(format!(
            "wedge minor search supports |V(H)| <= {MAX_H}, |E(H)| <= 64, |Z| <= {MAX_Z}"
        )));
    }
    let patterns = (hv as u64 + 1).checked_pow(ps.len() as u32).unwrap_or(u64::MAX);
    if patterns > MAX_PATTERNS {
        return Err(Error::CapExceeded(format!(
            "{patterns} copy labellings exceed the cap of {MAX_PATTERNS}"
        )));
    }
    let (host, map) = wedge(base, z, t)?;
    if hv == 0 {
        return Ok(Search::Found(MinorModel { branch_sets: Vec::new() }));
    }
    if hv > host.n() || h.m() > host.m() {
        return Ok(Search::Absent);
    }

    let mut z_pos = vec![None; base.n()];
    let mut p_pos = vec![None; base.n()];
    for (i, &v) in zs.iter().enumerate() {
        z_pos[v] = Some(i);
    }
    for (i, &v) in ps.iter().enumerate() {
        p_pos[v] = Some(i);
    }
    let mut edge_bit = vec![vec![None; hv]; hv];
    for (i, &(a, b)) in h.edges().iter().enumerate() {
        edge_bit[a][b] = Some(i as u32);
        edge_bit[b][a] = Some(i as u32);
    }
    let setup = Setup {
        base,
        h,
        zs,
        ps,
        z_pos,
        p_pos,
        edge_bit,
        all_edges: if h.m() == 64 { u64::MAX } else { (1u64 << h.m()) - 1 },
        all_labels: (1u32 << hv) - 1,
    };
    let autos = automorphisms(h);
    let mut meter = budget.meter();
    let outcome = (|| -> std::result::Result<Option<(Vec<u8>, Vec<Vec<u8>>)>, Exhausted> {
        let zc = setup.zs.len();
        let mut lambda = vec![0u8; zc];
        loop {
            meter.tick()?;
            if is_canonical(&lambda, &autos) {
                if let Some(copies) = search_lambda(&setup, &lambda, t, &mut meter)? {
                    return Ok(Some((lambda, copies)));
                }
            }
            if !next_word(&mut lambda, hv as u8) {
                return Ok(None);
            }
        }
    })();
    let (lambda, copies) = match outcome {
        Err(Exhausted) => return Ok(Search::Undecided),
        Ok(None) => return Ok(Search::Absent),
        Ok(Some(found)) => found,
    };
    let mut branch_sets = vec![VertexSet::new(); hv];
    for (i, &l) in lambda.iter().enumerate() {
        if l != 0 {
            branch_sets[l as usize - 1].insert(setup.zs[i]);
        }
    }
    for (c, mu) in copies.iter().enumerate() {
        for (i, &l) in mu.iter().enumerate() {
            if l != 0 {
                branch_sets[l as usize - 1].insert(map.map(c, setup.ps[i]));
            }
        }
    }
    let model = MinorModel { branch_sets };
    debug_assert_eq!(model.validate(&host, h), Ok(()));
    Ok(Search::Found(model))
}

/// Advances `word` through `{0..=max}^len` in lexicographic order.
fn next_word(word: &mut [u8], max: u8) -> bool {
    for x in word.iter_mut().rev() {
        if *x < max {
            *x += 1;
            return true;
        }
        *x = 0;
    }
    false
}

fn is_canonical(lambda: &[u8], autos: &[Vec<usize>]) -> bool {
    autos.iter().all(|sigma| {
        let image: Vec<u8> = lambda
            .iter()
            .map(|&l| if l == 0 { 0 } else { sigma[l as usize - 1] as u8 + 1 })
            .collect();
        image.as_slice() >= lambda
    })
}

/// Breadth-first search over copy contributions for a fixed `λ`. Returns
/// the labelling of each used copy.
fn search_lambda(
    setup: &Setup<'_>,
    lambda: &[u8],
    t: usize,
    meter: &mut Meter,
) -> std::result::Result<Option<Vec<Vec<u8>>>, Exhausted> {
    let zc = setup.zs.len();
    let hv = setup.h.n();
    let heart_labels = lambda
        .iter()
        .filter(|&&l| l != 0)
        .fold(0u32, |acc, &l| acc | 1 << (l - 1));

    let mut parent: Vec<u8> = (0..zc as u8).collect();
    let mut edges = 0u64;
    for &(u, v) in setup.base.edges() {
        if let (Some(a), Some(b)) = (setup.z_pos[u], setup.z_pos[v]) {
            edges |= setup.label_edge_bit(lambda[a], lambda[b]);
            if lambda[a] != 0 && lambda[a] == lambda[b] {
                union(&mut parent, a, b);
            }
        }
    }
    let start = State {
        edges,
        partition: canonical(&mut parent),
        heartless: 0,
    };
    if setup.goal(&start, lambda, heart_labels) {
        return Ok(Some(Vec::new()));
    }

    let identity: Vec<u8> = (0..zc as u8).collect();
    let mut effects: Vec<(Effect, Vec<u8>)> = Vec::new();
    let mut seen_effects: HashSet<Effect> = HashSet::new();
    let mut mu = vec![0u8; setup.ps.len()];
    while next_word(&mut mu, hv as u8) {
        meter.tick()?;
        if let Some(e) = setup.effect(lambda, heart_labels, &mu) {
            let trivial = e.edges == 0 && e.heartless == 0 && e.partition == identity;
            if !trivial && seen_effects.insert(e.clone()) {
                effects.push((e, mu.clone()));
            }
        }
    }
    prune_dominated(&mut effects);

    let mut parent_of: HashMap<State, Option<(State, usize)>> = HashMap::new();
    parent_of.insert(start.clone(), None);
    let mut frontier = VecDeque::from([start]);
    for _ in 0..t {
        let mut next = VecDeque::new();
        while let Some(s) = frontier.pop_front() {
            for (k, (e, _)) in effects.iter().enumerate() {
                meter.tick()?;
                if s.heartless & e.heartless != 0 {
                    continue;
                }
                let ns = State {
                    edges: s.edges | e.edges,
                    partition: join_partitions(&s.partition, &e.partition),
                    heartless: s.heartless | e.heartless,
                };
                if parent_of.contains_key(&ns) {
                    continue;
                }
                parent_of.insert(ns.clone(), Some((s.clone(), k)));
                if setup.goal(&ns, lambda, heart_labels) {
                    let mut copies = Vec::new();
                    let mut cur = ns;
                    while let Some(Some((prev, k))) = parent_of.get(&cur).cloned() {
                        copies.push(effects[k].1.clone());
                        cur = prev;
                    }
                    copies.reverse();
                    return Ok(Some(copies));
                }
                next.push_back(ns);
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(None)
}

/// Drops contributions that another one beats outright: same heartless
/// sets and merges, and a superset of realised edges.
fn prune_dominated(effects: &mut Vec<(Effect, Vec<u8>)>) {
    let mut keep = vec![true; effects.len()];
    for i in 0..effects.len() {
        for j in 0..effects.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (a, b) = (&effects[i].0, &effects[j].0);
            if a.heartless == b.heartless
                && a.partition == b.partition
                && a.edges & b.edges == a.edges
                && a.edges != b.edges
            {
                keep[i] = false;
                break;
            }
        }
    }
    let mut k = 0;
    effects.retain(|_| {
        k += 1;
        keep[k - 1]
    });
}
