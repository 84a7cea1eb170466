//! Vertex covers, minor models and the structured wedge search.

use minorperc::algos::{Budget, Search};
use minorperc::graph::named::*;
use minorperc::graph::wedge;
use minorperc::minor::{contains_minor, tau, wedge_contains_minor};
use minorperc::VertexSet;

fn main() -> minorperc::Result<()> {
    for (name, h) in [("K5", complete(5)), ("K3,3", complete_bipartite(3, 3)), ("petersen", petersen())] {
        let c = tau(&h);
        println!("tau({name}) = {} with cover {:?}", c.size, c.cover);
    }

    let g = petersen();
    for (name, h) in [("K5", complete(5)), ("K3,3", complete_bipartite(3, 3)), ("K6", complete(6))] {
        match contains_minor(&g, &h, Budget::DEFAULT) {
            Search::Found(m) => {
                m.validate(&g, &h).expect("model checks out");
                println!("petersen has a {name} minor: {:?}", m.branch_sets);
            }
            Search::Absent => println!("petersen has no {name} minor"),
            Search::Undecided => println!("{name}: budget ran out"),
        }
    }

    // K4 minus an edge, glued 6 times along the two degree-3 vertices
    let base = complete(4).spanning_subgraph(|e| e != 5);
    let z: VertexSet = [0, 1].into_iter().collect();
    let (w, _) = wedge(&base, &z, 6)?;
    for (name, h) in [("K4", complete(4)), ("K5", complete(5)), ("K2,5", complete_bipartite(2, 5))] {
        let found = wedge_contains_minor(&base, &z, 6, &h, Budget::DEFAULT)?;
        println!("wedge on {} vertices contains {name}: {}", w.n(), found.found().is_some());
    }
    Ok(())
}
