//! Seeded edge percolation: random subgraphs `G(p)`, Monte Carlo property
//! probabilities with Wilson intervals, threshold bisection and log-log
//! slope fits.
//!
//! Edge `e` of trial `i` survives iff `uniform(seed + i, 0, e) < p`. The
//! draw does not depend on `p`, so for a fixed seed `G(p)` grows with `p`
//! and estimates of a monotone property are monotone in `p` exactly.

pub mod rng;
mod threshold;

pub use threshold::{empirical_threshold, slope_fit, threshold_for_graph, SlopeFit, ThresholdEstimate};

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use statrs::distribution::{Binomial, DiscreteCDF};

use crate::algos::{chromatic_feasible, choosable, has_r_regular_subgraph, is_in_dr, Budget, Decision};
use crate::constructions::FamilySpec;
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, WedgeMap};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Two-sided 95% normal quantile.
pub const Z95: f64 = 1.959963984540054;

/// A monotone decreasing graph property decided on each sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PercProperty {
    /// `(r-1)`-degenerate.
    Degenerate(usize),
    /// `r`-colourable.
    Colorable(usize),
    /// `r`-choosable (exhaustive, small cores only).
    Choosable(usize),
    /// No `r`-regular subgraph.
    NoRegular(usize),
}

impl PercProperty {
    /// Whether `g` has the property. Every property here contains the
    /// `(r-1)`-degenerate graphs, so the linear-time core check settles most
    /// samples before any search starts.
    pub fn decide(&self, g: &Graph, budget: Budget) -> Decision {
        let r = self.r();
        if is_in_dr(g, r) {
            return Decision::Yes;
        }
        match *self {
            PercProperty::Degenerate(_) => Decision::No,
            PercProperty::Colorable(r) => chromatic_feasible(g, r, budget),
            PercProperty::Choosable(r) => match choosable(g, r) {
                Ok(b) => Decision::from_bool(b),
                Err(_) => Decision::Undecided,
            },
            PercProperty::NoRegular(r) => has_r_regular_subgraph(g, r, budget).negate(),
        }
    }

    pub fn r(&self) -> usize {
        match *self {
            PercProperty::Degenerate(r)
            | PercProperty::Colorable(r)
            | PercProperty::Choosable(r)
            | PercProperty::NoRegular(r) => r,
        }
    }
}

impl fmt::Display for PercProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            PercProperty::Degenerate(_) => "degenerate",
            PercProperty::Colorable(_) => "colorable",
            PercProperty::Choosable(_) => "choosable",
            PercProperty::NoRegular(_) => "regular",
        };
        write!(f, "{name}:r={}", self.r())
    }
}

/// `name:r=R` (or `name:R`) with name one of `degenerate`, `colorable`,
/// `choosable`, `regular`.
impl FromStr for PercProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("property '{s}': expected name:r=R"));
        let (name, arg) = s.split_once(':').ok_or_else(bad)?;
        let arg = arg.trim();
        let r: usize = arg.strip_prefix("r=").unwrap_or(arg).trim().parse().map_err(|_| bad())?;
        if r == 0 {
            return Err(Error::Parse(format!("property '{s}': r must be >= 1")));
        }
        match name.trim().to_ascii_lowercase().as_str() {
            "degenerate" => Ok(PercProperty::Degenerate(r)),
            "colorable" | "colourable" => Ok(PercProperty::Colorable(r)),
            "choosable" => Ok(PercProperty::Choosable(r)),
            "regular" => Ok(PercProperty::NoRegular(r)),
            _ => Err(bad()),
        }
    }
}

/// Monte Carlo estimate of `Pr(G(p) ∈ P)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PercolationEstimate {
    pub p: f64,
    pub trials: u64,
    pub successes: u64,
    pub undecided: u64,
    pub p_hat: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub seed: u64,
}

impl PercolationEstimate {
    fn from_counts(p: f64, trials: u64, successes: u64, undecided: u64, seed: u64) -> Self {
        let (p_hat, ci_low, ci_high) = wilson(successes, trials - undecided);
        PercolationEstimate {
            p,
            trials,
            successes,
            undecided,
            p_hat,
            ci_low,
            ci_high,
            seed,
        }
    }

    pub fn failures(&self) -> u64 {
        self.trials - self.successes - self.undecided
    }

    pub fn undecided_fraction(&self) -> f64 {
        self.undecided as f64 / self.trials.max(1) as f64
    }

    /// Binomial standard error of `p_hat`.
    pub fn std_err(&self) -> f64 {
        let n = (self.trials - self.undecided).max(1) as f64;
        (self.p_hat * (1.0 - self.p_hat) / n).sqrt()
    }
}

/// Point estimate and Wilson 95% interval for `k` successes in `n` trials.
/// With no trials the estimate is `0.5` and the interval `[0, 1]`.
pub fn wilson(k: u64, n: u64) -> (f64, f64, f64) {
    if n == 0 {
        return (0.5, 0.0, 1.0);
    }
    let n = n as f64;
    let ph = k as f64 / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let centre = (ph + z2 / (2.0 * n)) / denom;
    let half = Z95 * (ph * (1.0 - ph) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    (ph, (centre - half).clamp(0.0, ph), (centre + half).clamp(ph, 1.0))
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!("probability {p} outside [0, 1]")));
    }
    Ok(())
}

/// Indices of the edges that survive in `G(p)` for this seed.
pub fn surviving_edges(g: &Graph, p: f64, seed: u64) -> Vec<bool> {
    (0..g.m()).map(|e| rng::uniform(seed, 0, e as u64) < p).collect()
}

/// `G(p)`: each edge kept independently with probability `p`.
pub fn sample_subgraph(g: &Graph, p: f64, seed: u64) -> Result<Graph> {
    check_p(p)?;
    Ok(g.spanning_subgraph(|e| rng::uniform(seed, 0, e as u64) < p))
}

/// `trials` samples with seeds `seed, seed+1, ...`, counted in parallel.
pub fn estimate(
    g: &Graph,
    p: f64,
    property: PercProperty,
    trials: u64,
    seed: u64,
    budget: Budget,
) -> Result<PercolationEstimate> {
    check_p(p)?;
    if trials == 0 {
        return Err(invalid("trials must be >= 1"));
    }
    let (yes, undecided) = (0..trials)
        .into_par_iter()
        .map(|i| {
            let sample = g.spanning_subgraph(|e| rng::uniform(seed.wrapping_add(i), 0, e as u64) < p);
            match property.decide(&sample, budget) {
                Decision::Yes => (1, 0),
                Decision::No => (0, 0),
                Decision::Undecided => (0, 1),
            }
        })
        .reduce(|| (0u64, 0u64), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(PercolationEstimate::from_counts(p, trials, yes, undecided, seed))
}

/// Estimate of `Pr(at least k copies of F - Z keep all their edges)` in
/// `G(p)` for `G = F ∧_t Z` built by [`crate::graph::wedge`]. A copy counts
/// when every edge of `F` in that copy survives, so `k` such copies give
/// `F ∧_k Z ⊆ G(p)`.
pub fn containment_probability(
    g: &Graph,
    map: &WedgeMap,
    k: usize,
    p: f64,
    trials: u64,
    seed: u64,
) -> Result<PercolationEstimate> {
    check_p(p)?;
    if trials == 0 {
        return Err(invalid("trials must be >= 1"));
    }
    let copies: Vec<Vec<usize>> = (0..map.k)
        .map(|c| {
            map.copy_edges(c)
                .into_iter()
                .map(|(u, v)| g.edge_index(u, v).ok_or(Error::NotAnEdge { u, v }))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let yes: u64 = (0..trials)
        .into_par_iter()
        .map(|i| {
            let s = seed.wrapping_add(i);
            let full = copies
                .iter()
                .filter(|es| es.iter().all(|&e| rng::uniform(s, 0, e as u64) < p))
                .count();
            u64::from(full >= k)
        })
        .sum();
    Ok(PercolationEstimate::from_counts(p, trials, yes, 0, seed))
}

/// `Pr(Bin(copies, p^q) >= k)`: the exact containment probability when the
/// copies share no edges.
pub fn containment_exact(copies: u64, q: u32, p: f64, k: u64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    if k > copies {
        return 0.0;
    }
    let b = Binomial::new(p.powi(q as i32), copies).expect("valid binomial parameters");
    1.0 - b.cdf(k - 1)
}

/// One line of a sweep over `(n, p)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub family: String,
    pub n: usize,
    #[serde(flatten)]
    pub estimate: PercolationEstimate,
}

/// Estimates on `G_n` of `family` for every `n` and `p`. The same seed is
/// used at every grid point.
pub fn sweep(
    family: &FamilySpec,
    ns: &[usize],
    ps: &[f64],
    property: PercProperty,
    trials: u64,
    seed: u64,
    budget: Budget,
) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for &n in ns {
        let g = family.graph_for_n(n)?;
        for &p in ps {
            rows.push(SweepRow {
                family: family.to_string(),
                n: g.n(),
                estimate: estimate(&g, p, property, trials, seed, budget)?,
            });
        }
    }
    Ok(rows)
}

/// Header `family,n,p,trials,successes,undecided,phat,ci_lo,ci_hi,seed`.
pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Parse(format!("csv: {e}"));
    w.write_record(["family", "n", "p", "trials", "successes", "undecided", "phat", "ci_lo", "ci_hi", "seed"])
        .map_err(io)?;
    for r in rows {
        let e = &r.estimate;
        w.write_record([
            r.family.clone(),
            r.n.to_string(),
            e.p.to_string(),
            e.trials.to_string(),
            e.successes.to_string(),
            e.undecided.to_string(),
            e.p_hat.to_string(),
            e.ci_low.to_string(),
            e.ci_high.to_string(),
            e.seed.to_string(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Parse(format!("csv: {e}")))?;
    Ok(())
}
