use serde::Serialize;

use crate::algos::Budget;
use crate::constructions::FamilySpec;
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

use super::{estimate, PercProperty, PercolationEstimate};

/// Largest undecided fraction tolerated at any bisection step.
const MAX_UNDECIDED: f64 = 0.01;

/// Bisection result: `p_hat` is the midpoint of the final bracket
/// `[lo, hi]`, where the estimated probability is at least 1/2 at `lo` and
/// below it at `hi`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThresholdEstimate {
    pub p_hat: f64,
    pub lo: f64,
    pub hi: f64,
    /// The crossing lies at `p = 0` or `p = 1`.
    pub boundary: bool,
    pub steps: Vec<PercolationEstimate>,
}

/// Locates where `Pr(G(p) ∈ P)` crosses 1/2 by bisection to width `tol`.
/// All steps share the seed, so the estimate is monotone in `p` for a
/// monotone property; a rise larger than three standard errors is reported
/// as [`Error::NonMonotone`].
pub fn threshold_for_graph(
    g: &Graph,
    property: PercProperty,
    trials: u64,
    seed: u64,
    tol: f64,
    budget: Budget,
) -> Result<ThresholdEstimate> {
    if !(tol > 0.0) {
        return Err(invalid("tolerance must be positive"));
    }
    let mut steps = Vec::new();
    let mut eval = |p: f64| -> Result<f64> {
        let e = estimate(g, p, property, trials, seed, budget)?;
        if e.undecided_fraction() >= MAX_UNDECIDED {
            return Err(Error::Undecided(format!(
                "{} of {} trials undecided at p = {p}",
                e.undecided, e.trials
            )));
        }
        let ph = e.p_hat;
        steps.push(e);
        Ok(ph)
    };
    let done = |lo: f64, hi: f64, boundary, steps| {
        let mut out = ThresholdEstimate {
            p_hat: (lo + hi) / 2.0,
            lo,
            hi,
            boundary,
            steps,
        };
        if boundary {
            out.p_hat = lo;
        }
        out
    };
    if eval(1.0)? >= 0.5 {
        return Ok(done(1.0, 1.0, true, steps));
    }
    if eval(0.0)? < 0.5 {
        return Ok(done(0.0, 0.0, true, steps));
    }
    let (mut lo, mut hi) = (0.0, 1.0);
    while hi - lo > tol {
        let mid = (lo + hi) / 2.0;
        if eval(mid)? >= 0.5 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    check_monotone(&steps)?;
    Ok(done(lo, hi, false, steps))
}

fn check_monotone(steps: &[PercolationEstimate]) -> Result<()> {
    let mut sorted: Vec<&PercolationEstimate> = steps.iter().collect();
    sorted.sort_by(|a, b| a.p.total_cmp(&b.p));
    for w in sorted.windows(2) {
        let (a, b) = (w[0], w[1]);
        let se = (a.std_err().powi(2) + b.std_err().powi(2)).sqrt();
        if b.p_hat > a.p_hat + 3.0 * se.max(1e-12) {
            return Err(Error::NonMonotone(format!(
                "estimate rises from {} at p = {} to {} at p = {}",
                a.p_hat, a.p, b.p_hat, b.p
            )));
        }
    }
    Ok(())
}

/// [`threshold_for_graph`] on `G_n` of a family.
pub fn empirical_threshold(
    family: &FamilySpec,
    n: usize,
    property: PercProperty,
    trials: u64,
    seed: u64,
    tol: f64,
    budget: Budget,
) -> Result<ThresholdEstimate> {
    threshold_for_graph(&family.graph_for_n(n)?, property, trials, seed, tol, budget)
}

/// Least-squares line through `(log n, log p)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SlopeFit {
    pub slope: f64,
    pub intercept: f64,
    pub stderr: f64,
}

/// Fits `log p̂ = a + b log n` over at least three rows `(n, p̂)`.
pub fn slope_fit(rows: &[(f64, f64)]) -> Result<SlopeFit> {
    if rows.len() < 3 {
        return Err(invalid("slope fit needs at least three rows"));
    }
    if rows.iter().any(|&(n, p)| !(n > 0.0 && p > 0.0)) {
        return Err(invalid("slope fit needs positive n and p"));
    }
    let xs: Vec<f64> = rows.iter().map(|r| r.0.ln()).collect();
    let ys: Vec<f64> = rows.iter().map(|r| r.1.ln()).collect();
    let k = rows.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx <= f64::EPSILON {
        return Err(invalid("slope fit needs distinct n"));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ssr: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - intercept - slope * x).powi(2))
        .sum();
    let stderr = (ssr / (k - 2.0) / sxx).sqrt();
    Ok(SlopeFit { slope, intercept, stderr })
}
