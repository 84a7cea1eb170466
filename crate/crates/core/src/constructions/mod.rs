//! Extremal families and certificate gadgets: `I_{r-w} ∨ tK_{w+1}`,
//! `K_{r,s}`, `L` and `L_t`, pedal graphs, and the explicit list
//! assignments that witness non-choosability.

mod family;
mod lists;
mod pedal;

pub use family::FamilySpec;
pub use lists::{gen_bad_lists_join, gen_bad_lists_lt, lt_restricted_certificate};
pub use pedal::{enumerate_pedals, gen_pedal, PedalGraph};
pub(crate) use pedal::subgraph_closed_class;

use crate::error::{invalid, Result};
use crate::graph::{disjoint_union, join, wedge, Graph, VertexSet, WedgeMap};
use crate::graph::named::complete;

/// `I_{r-w} ∨ tK_{w+1}`. The independent part is `0..r-w`; clique copy `i`
/// occupies `r-w + i(w+1) .. r-w + (i+1)(w+1)`.
pub fn gen_join_cliques(r: usize, w: usize, t: usize) -> Result<Graph> {
    if r < 2 || w > r || t == 0 {
        return Err(invalid(format!(
            "join of cliques needs r >= 2, 0 <= w <= r, t >= 1 (got r={r}, w={w}, t={t})"
        )));
    }
    let cliques = disjoint_union(&vec![complete(w + 1); t]).0;
    Ok(join(&Graph::empty(r - w), &cliques))
}

/// The graph `L`: `I_{r-1} ∨ K_3` minus the matching `{x_k y_k : k < 3}`.
/// `Y = 0..r-1`, the triangle is `x_k = r-1+k`. Returns `L` and `Y`.
pub fn gen_l(r: usize) -> Result<(Graph, VertexSet)> {
    if r < 4 {
        return Err(invalid(format!("L needs r >= 4 (got r={r})")));
    }
    let full = join(&Graph::empty(r - 1), &complete(3));
    let x = |k: usize| r - 1 + k;
    let edges = full
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !(0..3).any(|k| (u, v) == (k, x(k))));
    let l = Graph::from_edges(r + 2, edges)?;
    Ok((l, (0..r - 1).collect()))
}

/// `L_t = L ∧_t Y`: `(r-1) + 3t` vertices and `3(r-1)t` edges. Triangle
/// vertices have degree `r`; `y_0, y_1, y_2` have degree `2t` and the other
/// `Y`-vertices `3t`.
pub fn gen_lt(r: usize, t: usize) -> Result<(Graph, WedgeMap)> {
    let (l, y) = gen_l(r)?;
    wedge(&l, &y, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algos::core;

    #[test]
    fn join_clique_examples() {
        let g = gen_join_cliques(3, 1, 2).unwrap();
        assert_eq!((g.n(), g.m()), (6, 10));
        // each K_2 copy is incident with 2·3 - 1 edges
        for copy in [[2, 3], [4, 5]] {
            let touching = g
                .edges()
                .iter()
                .filter(|&&(u, v)| copy.contains(&u) || copy.contains(&v))
                .count();
            assert_eq!(touching, 5);
        }
        assert_eq!(gen_join_cliques(2, 0, 5).unwrap(), crate::graph::named::complete_bipartite(2, 5));
        assert_eq!(gen_join_cliques(2, 2, 1).unwrap(), complete(3));
        assert!(gen_join_cliques(1, 0, 1).is_err());
        assert!(gen_join_cliques(3, 4, 1).is_err());
        assert!(gen_join_cliques(3, 1, 0).is_err());
    }

    #[test]
    fn join_cliques_have_nonempty_core() {
        for r in 2..=5 {
            for w in 0..=r {
                for t in 1..=4 {
                    let g = gen_join_cliques(r, w, t).unwrap();
                    let part = r - w;
                    assert_eq!(g.n(), part + t * (w + 1));
                    if w >= 1 {
                        assert!((part..g.n()).all(|v| g.degree(v) == r));
                    }
                    // the heart survives peeling iff its degree t(w+1) reaches r
                    let survives = w == r || t * (w + 1) >= r;
                    assert_eq!(!core(&g, r).is_empty(), survives, "r={r} w={w} t={t}");
                }
            }
        }
    }

    #[test]
    fn lt_counts_and_degrees() {
        for r in 4..=6 {
            for t in 1..=5 {
                let (g, map) = gen_lt(r, t).unwrap();
                assert_eq!(g.n(), (r - 1) + 3 * t);
                assert_eq!(g.m(), 3 * (r - 1) * t);
                for c in 0..t {
                    assert!(map.copy_block(c).iter().all(|&v| g.degree(v) == r));
                }
                for y in 0..r - 1 {
                    let expected = if y < 3 { 2 * t } else { 3 * t };
                    assert_eq!(g.degree(y), expected);
                }
            }
        }
        assert_eq!(gen_lt(4, 1).unwrap().0.m(), 9);
        assert_eq!(gen_lt(4, 2).unwrap().0.n(), 9);
        assert_eq!(gen_lt(5, 1).unwrap().0.m(), 12);
        assert!(gen_lt(3, 1).is_err());
    }
}
