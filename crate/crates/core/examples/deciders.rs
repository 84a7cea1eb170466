//! The property deciders on a few standard graphs.

use minorperc::algos::*;
use minorperc::graph::named::*;

fn main() -> minorperc::Result<()> {
    for (name, g) in [("K4", complete(4)), ("K2,4", complete_bipartite(2, 4)), ("bowtie", bowtie()), ("C5", cycle(5)), ("petersen", petersen())] {
        let d = degeneracy(&g).degeneracy;
        let chi = (1..=g.n()).find(|&k| chromatic_feasible(&g, k, Budget::DEFAULT) == Decision::Yes);
        // exhaustive, so large cores are out of reach
        let ch2 = choosable(&g, 2).map_or("too large".to_string(), |b| b.to_string());
        let reg3 = has_r_regular_subgraph(&g, 3, Budget::DEFAULT);
        println!(
            "{name:<9} degeneracy {d}  chi {}  2-choosable {ch2}  3-regular subgraph {reg3:?}  mad {}",
            chi.unwrap_or(0),
            max_average_degree(&g)
        );
    }
    Ok(())
}
