//! Exhaustive ground truth for small inputs: edge-minimal subgraphs of
//! large minimum degree, and exact extremal numbers for minor-free graphs.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::algos::{degeneracy, Budget, Search};
use crate::constructions::subgraph_closed_class;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};
use crate::minor::contains_minor;

/// Largest edge count for [`enumerate_min_degree_subgraphs`].
pub const MAX_SUBGRAPH_EDGES: usize = 20;
/// Largest `n` for [`extremal_table`].
pub const MAX_TABLE_N: usize = 7;

/// All inclusion-minimal nonempty edge sets whose spanned subgraph has
/// minimum degree at least `r`, in increasing order of their edge-index
/// bit masks.
///
/// Every qualifying subset is marked, then a subset-sum pass marks the sets
/// that contain a qualifying subset; a qualifying set is minimal when no
/// set one edge smaller is marked.
pub fn enumerate_min_degree_subgraphs(g: &Graph, r: usize) -> Result<Vec<EdgeSet>> {
    let m = g.m();
    if m > MAX_SUBGRAPH_EDGES {
        return Err(Error::CapExceeded(format!(
            "subgraph enumeration needs at most {MAX_SUBGRAPH_EDGES} edges, got {m}"
        )));
    }
    let incident: Vec<u32> = (0..g.n())
        .map(|v| {
            g.edges()
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| a == v || b == v)
                .fold(0u32, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let full = 1usize << m;
    let good: Vec<bool> = (0..full)
        .into_par_iter()
        .map(|s| {
            s != 0
                && incident.iter().all(|&inc| {
                    let d = (s as u32 & inc).count_ones() as usize;
                    d == 0 || d >= r
                })
        })
        .collect();
    let mut below = good.clone();
    for bit in 0..m {
        for s in 0..full {
            if s >> bit & 1 == 1 && below[s ^ 1 << bit] {
                below[s] = true;
            }
        }
    }
    let edges = g.edges();
    Ok((0..full)
        .filter(|&s| good[s] && (0..m).all(|b| s >> b & 1 == 0 || !below[s ^ 1 << b]))
        .map(|s| (0..m).filter(|b| s >> b & 1 == 1).map(|b| edges[b]).collect())
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalRow {
    pub n: usize,
    /// Most edges in an `H`-minor-free graph on `n` vertices.
    pub f: usize,
    /// Largest degeneracy of an `H`-minor-free graph on `n` vertices.
    pub d: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalTable {
    pub h_name: String,
    #[serde(skip)]
    pub h: Graph,
    pub rows: Vec<ExtremalRow>,
}

/// Exact `f_H(n)` and `d_H(n)` for `1 <= n <= n_max`, by enumerating the
/// `H`-minor-free graphs on `n` vertices up to isomorphism (edge by edge,
/// never extending a graph that already has the minor).
pub fn extremal_table(h: &Graph, n_max: usize) -> Result<ExtremalTable> {
    if n_max > MAX_TABLE_N {
        return Err(Error::CapExceeded(format!("extremal tables go up to n = {MAX_TABLE_N}, got {n_max}")));
    }
    let rows = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let free = |g: &Graph| match contains_minor(g, h, Budget::DEFAULT) {
                Search::Found(_) => Some(false),
                Search::Absent => Some(true),
                Search::Undecided => None,
            };
            let undecided = std::sync::atomic::AtomicBool::new(false);
            let class = subgraph_closed_class(n, |g| {
                free(g).unwrap_or_else(|| {
                    undecided.store(true, std::sync::atomic::Ordering::Relaxed);
                    false
                })
            });
            if undecided.into_inner() {
                return Err(Error::CapExceeded(format!("minor test undecided at n = {n}")));
            }
            let f = class.iter().map(Graph::m).max().unwrap_or(0);
            let d = class.iter().map(|g| degeneracy(g).degeneracy).max().unwrap_or(0);
            Ok(ExtremalRow { n, f, d })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExtremalTable {
        h_name: "H".to_string(),
        h: h.clone(),
        rows,
    })
}

impl ExtremalTable {
    pub fn named(mut self, name: &str) -> Self {
        self.h_name = name.to_string();
        self
    }
}

/// Finite checks of `f_H(n) <= d_H(n) n` and
/// `d_H(n) <= 2 max_{m <= n} f_H(m)/m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppendixReport {
    pub rows_checked: usize,
    pub violations: Vec<String>,
}

impl AppendixReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_appendix_bounds(table: &ExtremalTable) -> AppendixReport {
    let mut violations = Vec::new();
    for (i, row) in table.rows.iter().enumerate() {
        if row.f > row.d * row.n {
            violations.push(format!("n = {}: f = {} exceeds d n = {}", row.n, row.f, row.d * row.n));
        }
        // d <= 2 f(m)/m for the best tabulated m <= n
        let ok = table.rows[..=i].iter().any(|m| row.d * m.n <= 2 * m.f);
        if row.d > 0 && !ok {
            violations.push(format!("n = {}: d = {} exceeds 2 f(m)/m for every m <= n", row.n, row.d));
        }
        if i > 0 {
            let prev = table.rows[i - 1];
            if row.f < prev.f || row.d < prev.d {
                violations.push(format!("n = {}: table is not monotone", row.n));
            }
        }
    }
    AppendixReport {
        rows_checked: table.rows.len(),
        violations,
    }
}

/// Writes `H-name,n,f,d` rows for each table.
pub fn write_tables_csv<W: Write>(tables: &[ExtremalTable], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Parse(format!("csv: {e}"));
    w.write_record(["H-name", "n", "f", "d"]).map_err(io)?;
    for t in tables {
        for r in &t.rows {
            w.write_record([t.h_name.clone(), r.n.to_string(), r.f.to_string(), r.d.to_string()])
                .map_err(io)?;
        }
    }
    w.flush().map_err(|e| Error::Parse(format!("csv: {e}")))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algos::is_in_dr;
    use crate::graph::named::*;
    use proptest::prelude::*;

    /// Minimality by brute force over all proper subsets.
    fn slow_minimal(g: &Graph, r: usize) -> Vec<EdgeSet> {
        let m = g.m();
        let ok = |s: usize| {
            s != 0
                && (0..g.n()).all(|v| {
                    let d = g.edges().iter().enumerate().filter(|(i, &(a, b))| s >> i & 1 == 1 && (a == v || b == v)).count();
                    d == 0 || d >= r
                })
        };
        (0..1usize << m)
            .filter(|&s| ok(s) && !(1..s).any(|t| t & s == t && ok(t)))
            .map(|s| (0..m).filter(|b| s >> b & 1 == 1).map(|b| g.edges()[b]).collect())
            .collect()
    }

    #[test]
    fn k4_min_degree_two() {
        let found = enumerate_min_degree_subgraphs(&complete(4), 2).unwrap();
        assert_eq!(found.len(), 7);
        assert_eq!(found.iter().filter(|s| s.len() == 3).count(), 4);
        assert_eq!(found.iter().filter(|s| s.len() == 4).count(), 3);
        assert!(enumerate_min_degree_subgraphs(&path(6), 2).unwrap().is_empty());
        assert_eq!(enumerate_min_degree_subgraphs(&cycle(5), 2).unwrap().len(), 1);
        assert!(enumerate_min_degree_subgraphs(&complete(7), 2).is_err());
    }

    #[test]
    fn two_triangles_are_two_minimal_sets() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap();
        let found = enumerate_min_degree_subgraphs(&g, 2).unwrap();
        assert_eq!(found, slow_minimal(&g, 2));
        assert_eq!(found.len(), 2);
    }

    #[test]
    fn agrees_with_slow_minimality() {
        for g in [petersen().spanning_subgraph(|e| e < 12), bowtie(), complete_bipartite(2, 3), complete(5)] {
            for r in 1..4 {
                assert_eq!(enumerate_min_degree_subgraphs(&g, r).unwrap(), slow_minimal(&g, r), "{g:?} r={r}");
            }
        }
    }

    proptest! {
        #[test]
        fn degenerate_iff_no_dense_subgraph(bits in proptest::collection::vec(any::<bool>(), 15), r in 1usize..4) {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..6 {
                for v in u + 1..6 {
                    if bits[i] { edges.push((u, v)); }
                    i += 1;
                }
            }
            let g = Graph::from_edges(6, edges).unwrap();
            let dense = enumerate_min_degree_subgraphs(&g, r).unwrap();
            prop_assert_eq!(is_in_dr(&g, r), dense.is_empty());
        }
    }

    /// `f` and `d` over all labeled graphs on `n` vertices.
    fn labeled_extremal(h: &Graph, n: usize) -> (usize, usize) {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let mut best = (0, 0);
        for s in 0..1usize << pairs.len() {
            let g = Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| s >> i & 1 == 1).map(|(_, &e)| e).collect::<Vec<_>>()).unwrap();
            if contains_minor(&g, h, Budget::DEFAULT).found().is_none() {
                best.0 = best.0.max(g.m());
                best.1 = best.1.max(degeneracy(&g).degeneracy);
            }
        }
        best
    }

    #[test]
    fn small_tables() {
        let k3 = extremal_table(&complete(3), 6).unwrap();
        for row in &k3.rows {
            assert_eq!((row.f, row.d), (row.n - 1, usize::from(row.n > 1)));
        }
        let k4 = extremal_table(&complete(4), 7).unwrap();
        assert_eq!((k4.rows[4].f, k4.rows[4].d), (7, 2));
        assert_eq!(k4.rows[6].f, 11);
        for (h, n) in [(complete(4), 5), (cycle(4), 5), (star(3), 5), (complete(3), 5)] {
            let t = extremal_table(&h, n).unwrap();
            let row = t.rows[n - 1];
            assert_eq!((row.f, row.d), labeled_extremal(&h, n), "{h:?}");
        }
        assert!(extremal_table(&complete(3), 8).is_err());
    }

    #[test]
    fn appendix_bounds_hold() {
        for h in [complete(3), complete(4), cycle(4), star(3)] {
            let t = extremal_table(&h, 7).unwrap();
            let rep = check_appendix_bounds(&t);
            assert!(rep.passed(), "{:?}", rep.violations);
            assert_eq!(rep.rows_checked, 7);
        }
        let empty = ExtremalTable {
            h_name: "none".into(),
            h: complete(3),
            rows: vec![],
        };
        assert!(check_appendix_bounds(&empty).passed());
        let bad = ExtremalTable {
            rows: vec![ExtremalRow { n: 3, f: 5, d: 1 }],
            ..empty
        };
        assert!(!check_appendix_bounds(&bad).passed());
    }

    #[test]
    fn csv_rows() {
        let t = extremal_table(&complete(3), 3).unwrap().named("K3");
        let mut buf = Vec::new();
        write_tables_csv(&[t], &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "H-name,n,f,d\nK3,1,0,0\nK3,2,1,1\nK3,3,2,1\n");
    }
}
