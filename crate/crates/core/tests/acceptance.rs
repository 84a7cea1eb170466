//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criterion 3 contains the check "K_{2,3} is not 2-choosable". `K_{2,3}` is
//! a theta graph with all three paths of length 2, and those are
//! 2-choosable, so the exhaustive checker answers "choosable" and the
//! criterion reports FAIL. It is listed in `EXPECTED_FAIL`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_rational::Ratio;

use minorperc::algos::{
    choosable, count_cliques, generalized_binomial, is_in_dr, list_color_feasible, max_average_degree, Budget,
    Search,
};
use minorperc::classify::{classify_chi, classify_dr, classify_rr, Case, Tightness};
use minorperc::constructions::{gen_bad_lists_join, gen_join_cliques, FamilySpec};
use minorperc::graph::named::{complete, complete_bipartite, cycle};
use minorperc::oracle::{check_appendix_bounds, enumerate_min_degree_subgraphs, extremal_table};
use minorperc::percolation::{empirical_threshold, estimate, slope_fit, threshold_for_graph, PercProperty};
use minorperc::signatures::{
    build_weak_collection, island_partition, island_violations, union_bound_check, verify_collection,
};
use minorperc::Graph;

const EXPECTED_FAIL: &[u32] = &[3];

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Result<String, String> {
    let expect_case = |r: usize, h: &Graph, name: &str, case: u8, q: u64| -> Result<(), String> {
        let t = Instant::now();
        let c = classify_dr(r, h).map_err(|e| format!("{name}: {e}"))?;
        ensure(c.case == Case::Statement(case) && c.q == Some(q), || {
            format!("(r={r}, {name}) gave case {} q {:?}, want ({case}, {q})", c.case, c.q)
        })?;
        ensure(t.elapsed().as_secs() < 600, || format!("(r={r}, {name}) too slow"))
    };
    let expect_one = |r: usize, h: &Graph, name: &str| -> Result<(), String> {
        let c = classify_dr(r, h).map_err(|e| format!("{name}: {e}"))?;
        ensure(c.tightness == Tightness::ThetaOne, || {
            format!("(r={r}, {name}) gave {:?}, want ThetaOne", c.tightness)
        })
    };
    expect_case(3, &complete_bipartite(3, 3), "K3,3", 3, 5)?;
    expect_case(4, &complete(5), "K5", 4, 9)?;
    for r in [2, 3] {
        expect_case(r, &complete(r + 2), &format!("K{}", r + 2), 1, r as u64)?;
    }
    expect_one(2, &complete(3), "K3")?;
    expect_one(3, &complete(4), "K4")?;
    for r in 2..=4 {
        for s in 1..=r {
            expect_one(r, &complete_bipartite(1, s), &format!("K1,{s}"))?;
        }
    }
    let chi = classify_chi(2, &cycle(4)).map_err(|e| e.to_string())?;
    ensure(chi.q == Some(3), || format!("chi (2, C4) gave q {:?}", chi.q))?;
    let rr = classify_rr(2, &complete_bipartite(1, 2)).map_err(|e| e.to_string())?;
    ensure(rr.tightness == Tightness::ThetaOne, || format!("Rr (2, K1,2) gave {:?}", rr.tightness))?;
    Ok("all table entries reproduced".into())
}

fn criterion_2() -> Result<String, String> {
    let corpus = common::full_corpus();
    let mut checks = 0;
    for (name, g) in &corpus {
        for r in 2..=4 {
            let subs = enumerate_min_degree_subgraphs(g, r).map_err(|e| format!("{name}: {e}"))?;
            ensure(is_in_dr(g, r) == subs.is_empty(), || {
                format!("{name} r={r}: is_in_dr disagrees with the oracle")
            })?;
            let c = build_weak_collection(g, r, g.max_degree()).map_err(|e| format!("{name} r={r}: {e}"))?;
            let ok = verify_collection(g, &c, r).map_err(|e| format!("{name} r={r}: {e}"))?;
            ensure(ok, || format!("{name} r={r}: weak collection misses a subgraph"))?;
            checks += 1;
        }
    }
    Ok(format!("{} graphs, {checks} (graph, r) pairs agree", corpus.len()))
}

fn criterion_3() -> Result<String, String> {
    for (r, w) in [(2, 0), (2, 1), (3, 1)] {
        let (g, lists) = gen_bad_lists_join(r, w).map_err(|e| e.to_string())?;
        let res = list_color_feasible(&g, &lists, Budget::unlimited()).map_err(|e| e.to_string())?;
        ensure(res == Search::Absent, || format!("bad lists ({r},{w}) admit a colouring"))?;
    }
    ensure(choosable(&cycle(4), 2).map_err(|e| e.to_string())?, || "C4 reported not 2-choosable".into())?;
    let k23 = choosable(&complete_bipartite(2, 3), 2).map_err(|e| e.to_string())?;
    ensure(!k23, || {
        "bad lists infeasible and C4 2-choosable, but exhaustive search finds K2,3 2-choosable".into()
    })?;
    Ok("certificates infeasible, C4 choosable, K2,3 not".into())
}

fn criterion_4() -> Result<String, String> {
    let k4 = complete(4);
    let prop = PercProperty::Degenerate(3);
    let mut summary = Vec::new();
    for p in [0.3, 0.5, 0.8909] {
        let exact = 1.0 - f64::powi(p, 6);
        let mut inside = 0;
        for j in 0..100u64 {
            let e = estimate(&k4, p, prop, 10_000, 1_000_000 * (j + 1), Budget::default())
                .map_err(|e| e.to_string())?;
            if e.ci_low <= exact && exact <= e.ci_high {
                inside += 1;
            }
        }
        ensure(inside >= 94, || format!("p={p}: closed form inside the CI in {inside}/100 runs"))?;
        summary.push(format!("p={p}: {inside}/100"));
    }
    let th = threshold_for_graph(&k4, prop, 10_000, 7, 0.002, Budget::default()).map_err(|e| e.to_string())?;
    let target = 0.5f64.powf(1.0 / 6.0);
    ensure((th.p_hat - target).abs() <= 0.01, || {
        format!("threshold {} vs {target}", th.p_hat)
    })?;
    summary.push(format!("threshold {:.4} (exact {target:.4})", th.p_hat));
    Ok(summary.join(", "))
}

fn fitted_slope(family: &str, r: usize) -> Result<f64, String> {
    let fam: FamilySpec = family.parse().map_err(|e: minorperc::Error| e.to_string())?;
    let mut rows = Vec::new();
    for n in [200, 400, 800, 1600] {
        let th = empirical_threshold(&fam, n, PercProperty::Degenerate(r), 2000, 0x5eed, 0.0005, Budget::default())
            .map_err(|e| format!("{family} n={n}: {e}"))?;
        rows.push((n as f64, th.p_hat));
    }
    Ok(slope_fit(&rows).map_err(|e| e.to_string())?.slope)
}

fn criterion_5() -> Result<String, String> {
    let a = fitted_slope("joincliques:r=3,w=1", 3)?;
    ensure((-0.25..=-0.15).contains(&a), || format!("join-cliques slope {a:.4} outside [-0.25, -0.15]"))?;
    let b = fitted_slope("kbip:r=2", 2)?;
    ensure((-0.55..=-0.45).contains(&b), || format!("K2,s slope {b:.4} outside [-0.55, -0.45]"))?;
    Ok(format!("slopes {a:.4} and {b:.4}"))
}

fn criterion_6() -> Result<String, String> {
    let k4 = complete(4);
    let c = build_weak_collection(&k4, 2, k4.max_degree()).map_err(|e| e.to_string())?;
    let mut summary = Vec::new();
    for p in [0.1, 0.3, 0.5] {
        let rep = union_bound_check(&k4, &c, p, 100_000, 11).map_err(|e| e.to_string())?;
        ensure(rep.holds, || format!("p={p}: {} above bound {}", rep.p_hat, rep.union_bound))?;
        let exact = rep.exact.ok_or("no inclusion-exclusion value")?;
        ensure(rep.ci_low <= exact && exact <= rep.ci_high, || {
            format!("p={p}: exact {exact} outside [{}, {}]", rep.ci_low, rep.ci_high)
        })?;
        summary.push(format!("p={p}: {:.4} vs {exact:.4}", rep.p_hat));
    }
    Ok(format!("{} members; {}", c.len(), summary.join(", ")))
}

fn island_corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    for i in 0..30u64 {
        out.push(common::random_forest(8 + (i as usize % 17), 0xf0 + i));
    }
    for (r, w) in [(2, 0), (2, 1), (3, 1), (3, 2)] {
        for t in 1..=5 {
            out.push(gen_join_cliques(r, w, t).unwrap());
        }
    }
    out
}

fn criterion_7() -> Result<String, String> {
    let graphs = island_corpus();
    ensure(graphs.len() == 50, || format!("corpus has {} graphs", graphs.len()))?;
    let mut successes = 0;
    let mut runs = 0;
    for (i, g) in graphs.iter().enumerate() {
        for r in [2usize, 3] {
            for l in [0usize, 1] {
                for beta in [Ratio::new(1, 10), Ratio::from_integer(0)] {
                    let out = island_partition(g, r, l, 6, beta).map_err(|e| format!("graph {i}: {e}"))?;
                    runs += 1;
                    let cap = (r + 1).pow(l as u32) + 1;
                    ensure(out.trace().len() <= cap, || {
                        format!("graph {i} r={r} l={l}: {} rounds > {cap}", out.trace().len())
                    })?;
                    if let Some(res) = out.found() {
                        successes += 1;
                        let v = island_violations(g, r, beta, res);
                        ensure(v.is_empty(), || format!("graph {i} r={r} l={l}: {}", v.join("; ")))?;
                    }
                }
            }
        }
    }
    ensure(successes > 0, || "no run succeeded".into())?;
    Ok(format!("{runs} runs, {successes} successes, all valid"))
}

fn criterion_8() -> Result<String, String> {
    for (name, h) in [("K3", complete(3)), ("K4", complete(4))] {
        let table = extremal_table(&h, 6).map_err(|e| e.to_string())?.named(name);
        let rep = check_appendix_bounds(&table);
        ensure(rep.passed(), || format!("{name}: {}", rep.violations.join("; ")))?;
        if name == "K3" {
            for row in &table.rows {
                ensure(row.f == row.n - 1, || format!("f_K3({}) = {}", row.n, row.f))?;
            }
        }
    }
    Ok("K3 and K4 tables within bounds, f_K3(n) = n - 1".into())
}

fn criterion_9() -> Result<String, String> {
    let corpus = common::full_corpus();
    for (name, g) in &corpus {
        let mad = max_average_degree(g);
        for r in 2..=4 {
            let count = Ratio::from_integer(count_cliques(g, r) as i128);
            let bound = generalized_binomial(mad, r - 1) * Ratio::from_integer(g.n() as i128);
            ensure(count <= bound, || format!("{name} r={r}: {count} cliques > {bound}"))?;
        }
    }
    Ok(format!("{} graphs within the bound", corpus.len()))
}

fn main() {
    let criteria: [Check; 9] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
    ];
    let mut unexpected = Vec::new();
    for (i, check) in criteria.iter().enumerate() {
        let id = i as u32 + 1;
        let start = Instant::now();
        let outcome = match catch_unwind(AssertUnwindSafe(check)) {
            Ok(r) => r,
            Err(_) => Err("panicked".into()),
        };
        let secs = start.elapsed().as_secs_f64();
        let passed = outcome.is_ok();
        let detail = outcome.unwrap_or_else(|e| e);
        println!(
            "criterion {id}: {} ({secs:.1}s) {detail}",
            if passed { "PASS" } else { "FAIL" }
        );
        if passed == EXPECTED_FAIL.contains(&id) {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("criteria with unexpected outcome: {unexpected:?}");
        std::process::exit(1);
    }
}
