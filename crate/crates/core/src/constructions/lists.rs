use crate::algos::ListAssignment;
use crate::error::{invalid, Result};
use crate::graph::{Graph, WedgeMap};

use super::{gen_join_cliques, gen_lt};

/// Heart list `i` (0-based) is `{r(i+1) + j : 0 <= j < r}`.
fn heart_list(r: usize, i: usize) -> Vec<i64> {
    let base = (r * (i + 1)) as i64;
    (0..r as i64).map(|j| base + j).collect()
}

/// All selections of one colour per heart list, lexicographically.
fn selections(r: usize, k: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for i in 0..k {
        out = out
            .into_iter()
            .flat_map(|s| {
                heart_list(r, i).into_iter().map(move |c| {
                    let mut s = s.clone();
                    s.push(c);
                    s
                })
            })
            .collect();
    }
    out
}

/// `I_{r-w} ∨ r^{r-w} K_{w+1}` with lists showing it is not `r`-choosable.
/// Heart vertex `i` gets a private block of `r` colours; clique copy `c`
/// gets `{-1..-w}` plus the `c`-th selection of one colour per heart list,
/// so whichever colouring the heart takes, some copy sees only `w` usable
/// colours on `w + 1` vertices.
pub fn gen_bad_lists_join(r: usize, w: usize) -> Result<(Graph, ListAssignment)> {
    if w > r {
        return Err(invalid(format!("need w <= r (got r={r}, w={w})")));
    }
    let k = r - w;
    let sels = selections(r, k);
    let g = gen_join_cliques(r, w, sels.len())?;
    let pad: Vec<i64> = (1..=w as i64).map(|c| -c).collect();
    let mut lists: Vec<Vec<i64>> = (0..k).map(|i| heart_list(r, i)).collect();
    for s in &sels {
        for _ in 0..=w {
            lists.push(pad.iter().chain(s).copied().collect());
        }
    }
    Ok((g, ListAssignment::new(lists)))
}

/// Lists on `L_t` with `t = r^{r-1}`: copy `i` carries selection `S_i`, and
/// its triangle vertex `x_k` gets `{-1, -2} ∪ (S_i - L(y_k))`, where `y_k` is
/// the one heart vertex it misses.
pub fn gen_bad_lists_lt(r: usize) -> Result<(Graph, ListAssignment)> {
    let (g, _, lists, _) = lt_lists(r)?;
    Ok((g, lists))
}

fn lt_lists(r: usize) -> Result<(Graph, WedgeMap, ListAssignment, Vec<Vec<i64>>)> {
    if r < 4 {
        return Err(invalid(format!("L_t needs r >= 4 (got r={r})")));
    }
    let sels = selections(r, r - 1);
    let (g, map) = gen_lt(r, sels.len())?;
    let mut lists = vec![Vec::new(); g.n()];
    for (i, list) in lists.iter_mut().enumerate().take(r - 1) {
        *list = heart_list(r, i);
    }
    for (c, s) in sels.iter().enumerate() {
        for k in 0..3 {
            let missed = heart_list(r, k);
            let list = [-1, -2]
                .into_iter()
                .chain(s.iter().copied().filter(|x| !missed.contains(x)))
                .collect();
            lists[map.map(c, r - 1 + k)] = list;
        }
    }
    Ok((g, map, ListAssignment::new(lists), sels))
}

/// The piece of [`gen_bad_lists_lt`] that does the work for copy `copy`: the
/// heart plus that copy's triangle, with the heart lists cut down to the
/// copy's selection. Vertices `0..r-1` are the heart, then `x_0, x_1, x_2`.
pub fn lt_restricted_certificate(r: usize, copy: usize) -> Result<(Graph, ListAssignment)> {
    let (g, map, lists, sels) = lt_lists(r)?;
    let sel = sels
        .get(copy)
        .ok_or_else(|| invalid(format!("copy {copy} out of range")))?;
    let block = (0..r - 1).chain((0..3).map(|k| map.map(copy, r - 1 + k))).collect();
    let (sub, order) = g.induced_subgraph(&block)?;
    let restricted = order.iter().map(|&v| {
        if v < r - 1 {
            vec![sel[v]]
        } else {
            lists.list(v).iter().copied().collect()
        }
    });
    Ok((sub, ListAssignment::new(restricted)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algos::{list_color_feasible, Budget, Decision};

    #[test]
    fn join_lists_small() {
        let (g, l) = gen_bad_lists_join(2, 1).unwrap();
        assert_eq!((g.n(), g.m()), (5, 6));
        assert_eq!(l.list(0).iter().copied().collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(l.list(1).iter().copied().collect::<Vec<_>>(), vec![-1, 2]);
        assert_eq!(l.list(3).iter().copied().collect::<Vec<_>>(), vec![-1, 3]);
        for (r, w) in [(2, 0), (2, 1), (2, 2), (3, 0), (3, 1), (3, 2), (3, 3)] {
            let (g, l) = gen_bad_lists_join(r, w).unwrap();
            assert_eq!(l.len(), g.n());
            assert_eq!((l.min_size(), l.max_size()), (Some(r), Some(r)));
            let res = list_color_feasible(&g, &l, Budget::DEFAULT).unwrap();
            assert_eq!(res.decision(), Decision::No, "r={r} w={w}");
        }
    }

    #[test]
    fn lt_lists_shape() {
        let (g, l) = gen_bad_lists_lt(4).unwrap();
        assert_eq!(g.n(), 195);
        assert_eq!((l.min_size(), l.max_size()), (Some(4), Some(4)));
        // a copy vertex keeps exactly the colours of the heart vertices it sees
        let (_, map) = gen_lt(4, 64).unwrap();
        for c in [0, 17, 63] {
            for k in 0..3 {
                let x = map.map(c, 3 + k);
                let list = l.list(x);
                assert!(list.contains(&-1) && list.contains(&-2));
                for y in 0..3 {
                    let shared = list.intersection(l.list(y)).count();
                    assert_eq!(shared, usize::from(y != k), "copy {c}, x_{k}, y_{y}");
                    assert_eq!(g.has_edge(x, y), y != k);
                }
            }
        }
    }

    #[test]
    fn restricted_certificates_are_infeasible() {
        for copy in [0, 1, 5, 63] {
            let (g, l) = lt_restricted_certificate(4, copy).unwrap();
            assert_eq!(g.n(), 6);
            let res = list_color_feasible(&g, &l, Budget::DEFAULT).unwrap();
            assert_eq!(res.decision(), Decision::No);
        }
        assert!(lt_restricted_certificate(4, 64).is_err());
    }
}
