use std::collections::BTreeSet;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algos::{binomial, for_each_combination};
use crate::error::{invalid, Error, Result};
use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::percolation::{rng, wilson};

/// Largest edge count for exhaustive verification.
pub const EXHAUSTIVE_MAX_EDGES: usize = 20;
/// Largest collection for the exact inclusion-exclusion probability.
pub const EXACT_MAX_MEMBERS: usize = 20;

/// A family of `q`-edge subsets of `E(G)`. `c_bound`, when present, is the
/// claimed constant in `|members| <= c_bound |V(G)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureCollection {
    pub q: usize,
    pub members: Vec<EdgeSet>,
    pub c_bound: Option<Ratio<i64>>,
}

impl SignatureCollection {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members have exactly `q` edges of `g` and the size claim holds.
    pub fn is_well_formed(&self, g: &Graph) -> bool {
        let sized = self.members.iter().all(|m| m.len() == self.q && m.is_within(g));
        let bounded = self
            .c_bound
            .is_none_or(|c| Ratio::from_integer(self.members.len() as i64) <= c * g.n() as i64);
        sized && bounded
    }

    pub fn to_json(&self) -> Value {
        let members: Vec<Vec<[usize; 2]>> = self
            .members
            .iter()
            .map(|m| m.iter().map(|(u, v)| [u, v]).collect())
            .collect();
        let c = self.c_bound.map(|c| format!("{}/{}", c.numer(), c.denom()));
        json!({ "q": self.q, "members": members, "c_bound": c })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("signature collection: {what}"));
        let q = v["q"].as_u64().ok_or_else(|| bad("missing q"))? as usize;
        let mut members = Vec::new();
        for m in v["members"].as_array().ok_or_else(|| bad("missing members"))? {
            let mut set = EdgeSet::new();
            for e in m.as_array().ok_or_else(|| bad("member is not a list"))? {
                let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("edge is not a pair"))?;
                let u = pair[0].as_u64().ok_or_else(|| bad("vertex is not an integer"))?;
                let w = pair[1].as_u64().ok_or_else(|| bad("vertex is not an integer"))?;
                set.insert(u as usize, w as usize);
            }
            members.push(set);
        }
        let c_bound = match &v["c_bound"] {
            Value::Null => None,
            Value::String(s) => Some(s.parse::<Ratio<i64>>().map_err(|_| bad("c_bound is not p/q"))?),
            _ => return Err(bad("c_bound is not a string")),
        };
        Ok(SignatureCollection { q, members, c_bound })
    }
}

/// What a [`Picker`] promises for every graph in the peeling sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PickerBounds {
    /// Largest allowed `|Z|`.
    pub zeta: usize,
    /// Largest allowed degree of a `Z`-vertex.
    pub a: usize,
    /// Every subgraph of minimum degree at least `r` through the pivot meets
    /// `Z` in at least `t` vertices.
    pub t: usize,
}

/// One step of the peeling: the set `Z` and the vertex `pivot ∈ Z` that is
/// deleted afterwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pick {
    pub z: VertexSet,
    pub pivot: usize,
}

/// Chooses `(Z, z*)` in the current graph `g` (alive vertices only; ids
/// are those of the host graph).
pub trait Picker {
    fn bounds(&self) -> PickerBounds;
    fn pick(&self, g: &Graph, alive: &[bool]) -> Pick;
}

/// `Z = {z*}` with `z*` the lowest-id vertex of minimum current degree.
#[derive(Clone, Copy, Debug)]
pub struct WeakPicker {
    pub degree_bound: usize,
}

impl Picker for WeakPicker {
    fn bounds(&self) -> PickerBounds {
        PickerBounds {
            zeta: 1,
            a: self.degree_bound,
            t: 1,
        }
    }

    fn pick(&self, g: &Graph, alive: &[bool]) -> Pick {
        let pivot = min_degree_vertex(g, alive).expect("pick on empty graph");
        Pick {
            z: [pivot].into_iter().collect(),
            pivot,
        }
    }
}

/// A picker from fixed bounds and a closure.
pub struct FnPicker<F> {
    pub bounds: PickerBounds,
    pub f: F,
}

impl<F: Fn(&Graph, &[bool]) -> Pick> Picker for FnPicker<F> {
    fn bounds(&self) -> PickerBounds {
        self.bounds
    }

    fn pick(&self, g: &Graph, alive: &[bool]) -> Pick {
        (self.f)(g, alive)
    }
}

fn live_degree(g: &Graph, alive: &[bool], v: usize) -> usize {
    g.neighbors(v).iter().filter(|&&u| alive[u]).count()
}

/// Lowest-id vertex of minimum degree among the alive ones.
pub fn min_degree_vertex(g: &Graph, alive: &[bool]) -> Option<usize> {
    (0..g.n())
        .filter(|&v| alive[v])
        .min_by_key(|&v| (live_degree(g, alive, v), v))
}

/// The collection from peeling minimum-degree vertices: every `r`-subset
/// of the edges at the peeled vertex, `q = r`.
pub fn build_weak_collection(g: &Graph, r: usize, degree_bound: usize) -> Result<SignatureCollection> {
    build_sufficient_collection(g, r, &WeakPicker { degree_bound })
}

/// Peels `g` one pivot at a time. At each step the members are the unions,
/// over `t`-subsets `T ⊆ Z`, of one `r`-edge star at each vertex of `T`, cut
/// down to their lexicographically smallest `q = rt - C(t,2)` edges.
pub fn build_sufficient_collection<P: Picker + ?Sized>(g: &Graph, r: usize, picker: &P) -> Result<SignatureCollection> {
    let PickerBounds { zeta, a, t } = picker.bounds();
    if r == 0 || t == 0 {
        return Err(invalid("collections need r >= 1 and t >= 1"));
    }
    let q = r * t - t * (t - 1) / 2;
    let n = g.n();
    let mut alive = vec![true; n];
    let mut seen = BTreeSet::new();
    let mut members = Vec::new();
    for _ in 0..n {
        let Pick { z, pivot } = picker.pick(g, &alive);
        if z.len() > zeta {
            return Err(Error::PickerContract(format!("|Z| = {} exceeds {zeta}", z.len())));
        }
        if !z.contains(pivot) {
            return Err(Error::PickerContract(format!("pivot {pivot} is not in Z")));
        }
        for v in z.iter() {
            if v >= n || !alive[v] {
                return Err(Error::PickerContract(format!("vertex {v} of Z is not in the current graph")));
            }
            let deg = live_degree(g, &alive, v);
            if deg > a {
                return Err(Error::PickerContract(format!("vertex {v} has degree {deg} > {a}")));
            }
        }
        let zs: Vec<usize> = z.iter().collect();
        for_each_combination(&zs, t, |tset| {
            let stars: Vec<Vec<Vec<(usize, usize)>>> = tset
                .iter()
                .map(|&v| {
                    let inc: Vec<(usize, usize)> = g
                        .neighbors(v)
                        .iter()
                        .filter(|&&u| alive[u])
                        .map(|&u| (v.min(u), v.max(u)))
                        .collect();
                    let mut out = Vec::new();
                    for_each_combination(&inc, r, |s| {
                        out.push(s.to_vec());
                        true
                    });
                    out
                })
                .collect();
            for_each_choice(&stars, &mut |choice| {
                let union: BTreeSet<(usize, usize)> = choice.iter().flat_map(|s| s.iter().copied()).collect();
                let member: EdgeSet = union.into_iter().take(q).collect();
                if member.len() == q && seen.insert(member.clone()) {
                    members.push(member);
                }
            });
            true
        });
        alive[pivot] = false;
        if !alive.iter().any(|&b| b) {
            break;
        }
    }
    let per_vertex = binomial(zeta as u64, t as u64).saturating_mul(binomial(a as u64, r as u64).saturating_pow(t as u32));
    let c_bound = i64::try_from(per_vertex).ok().map(Ratio::from_integer);
    Ok(SignatureCollection { q, members, c_bound })
}

/// Calls `f` on every way of choosing one entry from each list.
fn for_each_choice<T>(lists: &[Vec<T>], f: &mut impl FnMut(&[&T])) {
    fn go<'a, T>(lists: &'a [Vec<T>], acc: &mut Vec<&'a T>, f: &mut impl FnMut(&[&T])) {
        match lists.split_first() {
            None => f(acc),
            Some((head, rest)) => {
                for x in head {
                    acc.push(x);
                    go(rest, acc, f);
                    acc.pop();
                }
            }
        }
    }
    go(lists, &mut Vec::new(), f);
}

/// Bit masks over edge ids for the members, or `None` when one is not a
/// subset of `E(G)`.
fn member_masks(g: &Graph, c: &SignatureCollection) -> Option<Vec<u64>> {
    c.members
        .iter()
        .map(|m| {
            m.iter()
                .map(|(u, v)| g.edge_index(u, v).map(|i| 1u64 << i))
                .try_fold(0u64, |acc, b| Some(acc | b?))
        })
        .collect()
}

/// An edge set of minimum degree at least `r` (on its endpoints) that
/// contains no member, searched over all edge subsets. Errors beyond
/// [`EXHAUSTIVE_MAX_EDGES`] edges.
pub fn find_uncovered(g: &Graph, c: &SignatureCollection, r: usize) -> Result<Option<EdgeSet>> {
    let m = g.m();
    if m > EXHAUSTIVE_MAX_EDGES {
        return Err(Error::CapExceeded(format!(
            "exhaustive verification needs at most {EXHAUSTIVE_MAX_EDGES} edges, got {m}"
        )));
    }
    let Some(masks) = member_masks(g, c) else {
        return Err(invalid("collection member is not a subset of E(G)"));
    };
    let incident: Vec<u64> = (0..g.n())
        .map(|v| {
            g.edges()
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| a == v || b == v)
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let min_deg_ok = |s: u64| {
        incident.iter().all(|&inc| {
            let d = (s & inc).count_ones() as usize;
            d == 0 || d >= r
        })
    };
    let hit = (1u64..1 << m)
        .into_par_iter()
        .find_first(|&s| min_deg_ok(s) && !masks.iter().any(|&mm| s & mm == mm));
    Ok(hit.map(|s| {
        g.edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| s >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect()
    }))
}

/// Every subgraph of minimum degree at least `r` contains a member.
/// Exhaustive; see [`find_uncovered`].
pub fn verify_collection(g: &Graph, c: &SignatureCollection, r: usize) -> Result<bool> {
    Ok(find_uncovered(g, c, r)?.is_none())
}

/// Result of sampled verification on graphs too large to enumerate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeReport {
    pub samples: u64,
    /// Samples whose `r`-core was nonempty.
    pub probed: u64,
    pub uncovered: Option<Vec<(usize, usize)>>,
    pub exhaustive: bool,
}

/// Probes covering on the `r`-cores of random spanning subgraphs, with edge
/// probabilities spread over `(0, 1]`. Not exhaustive.
pub fn probe_collection(g: &Graph, c: &SignatureCollection, r: usize, samples: u64, seed: u64) -> ProbeReport {
    let mut probed = 0;
    for i in 0..samples {
        let p = (i % 10 + 1) as f64 / 10.0;
        let sub = g.spanning_subgraph(|e| rng::uniform(seed.wrapping_add(i), 1, e as u64) < p);
        let core = crate::algos::core(&sub, r);
        if core.is_empty() {
            continue;
        }
        probed += 1;
        let edges: EdgeSet = sub
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| core.contains(u) && core.contains(v))
            .collect();
        if !c.members.iter().any(|m| m.is_subset(&edges)) {
            return ProbeReport {
                samples: i + 1,
                probed,
                uncovered: Some(edges.iter().collect()),
                exhaustive: false,
            };
        }
    }
    ProbeReport {
        samples,
        probed,
        uncovered: None,
        exhaustive: false,
    }
}

/// Monte Carlo check of `Pr(some member survives) <= |C| p^q`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnionBoundReport {
    pub p: f64,
    pub trials: u64,
    pub hits: u64,
    pub p_hat: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub union_bound: f64,
    /// Inclusion-exclusion value, for at most [`EXACT_MAX_MEMBERS`] members.
    pub exact: Option<f64>,
    /// `p_hat <= union_bound + 3σ`.
    pub holds: bool,
}

/// Estimates the probability that `G(p)` keeps every edge of some member.
/// Trial `i` keeps edge `e` iff `uniform(seed + i, 0, e) < p`, the same
/// coupling as the percolation estimates.
pub fn union_bound_check(g: &Graph, c: &SignatureCollection, p: f64, trials: u64, seed: u64) -> Result<UnionBoundReport> {
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid("p must lie in [0, 1]"));
    }
    if trials == 0 {
        return Err(invalid("trials must be positive"));
    }
    let ids: Vec<Vec<usize>> = c
        .members
        .iter()
        .map(|m| m.iter().map(|(u, v)| g.edge_index(u, v)).collect::<Option<Vec<_>>>())
        .collect::<Option<_>>()
        .ok_or_else(|| invalid("collection member is not a subset of E(G)"))?;
    let hits: u64 = (0..trials)
        .into_par_iter()
        .map(|i| {
            let s = seed.wrapping_add(i);
            let hit = ids.iter().any(|m| m.iter().all(|&e| rng::uniform(s, 0, e as u64) < p));
            hit as u64
        })
        .sum();
    let (p_hat, ci_low, ci_high) = wilson(hits, trials);
    let union_bound = c.members.len() as f64 * p.powi(c.q as i32);
    let sigma = (p_hat * (1.0 - p_hat) / trials as f64).sqrt();
    Ok(UnionBoundReport {
        p,
        trials,
        hits,
        p_hat,
        ci_low,
        ci_high,
        union_bound,
        exact: exact_probability(&ids, p),
        holds: p_hat <= union_bound + 3.0 * sigma,
    })
}

/// `Pr(some member survives)` by inclusion-exclusion over the members.
fn exact_probability(ids: &[Vec<usize>], p: f64) -> Option<f64> {
    if ids.len() > EXACT_MAX_MEMBERS {
        return None;
    }
    let width = ids.iter().flatten().max().map_or(0, |&e| e / 64 + 1);
    let sets: Vec<Vec<u64>> = ids
        .iter()
        .map(|m| {
            let mut b = vec![0u64; width];
            for &e in m {
                b[e / 64] |= 1 << (e % 64);
            }
            b
        })
        .collect();
    let k = sets.len();
    let total: f64 = (1u64..1 << k)
        .into_par_iter()
        .map(|mask| {
            let mut union = vec![0u64; width];
            for (i, s) in sets.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    for (w, x) in union.iter_mut().zip(s) {
                        *w |= x;
                    }
                }
            }
            let size: u32 = union.iter().map(|w| w.count_ones()).sum();
            let sign = if mask.count_ones() % 2 == 1 { 1.0 } else { -1.0 };
            sign * p.powi(size as i32)
        })
        .sum();
    Some(total)
}
