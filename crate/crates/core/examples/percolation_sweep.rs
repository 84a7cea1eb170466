//! Estimates Pr(G_n(p) is 2-degenerate) on join-clique graphs, then fits the
//! threshold exponent. The fitted slope should sit near -1/5.

use minorperc::algos::Budget;
use minorperc::constructions::FamilySpec;
use minorperc::percolation::{empirical_threshold, slope_fit, sweep, write_csv, PercProperty, DEFAULT_SEED};

fn main() -> minorperc::Result<()> {
    let family: FamilySpec = "joincliques:r=3,w=1".parse()?;
    let prop = PercProperty::Degenerate(3);
    let rows = sweep(&family, &[100, 400], &[0.3, 0.5, 0.7], prop, 500, DEFAULT_SEED, Budget::DEFAULT)?;
    write_csv(&rows, std::io::stdout())?;

    let mut points = Vec::new();
    for n in [200, 400, 800, 1600] {
        let t = empirical_threshold(&family, n, prop, 1000, DEFAULT_SEED, 0.002, Budget::DEFAULT)?;
        println!("n = {n:>5}: p_hat = {:.4} in [{:.4}, {:.4}]", t.p_hat, t.lo, t.hi);
        points.push((n as f64, t.p_hat));
    }
    let fit = slope_fit(&points)?;
    println!("slope {:.3} (stderr {:.3})", fit.slope, fit.stderr);
    Ok(())
}
