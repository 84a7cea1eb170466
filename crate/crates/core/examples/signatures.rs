//! Spans, the island partition and signature collections on small graphs.

use num_rational::Ratio;

use minorperc::graph::named::*;
use minorperc::graph::{disjoint_union, join};
use minorperc::signatures::*;
use minorperc::{Graph, VertexSet};

fn main() -> minorperc::Result<()> {
    let g = petersen();
    let y: VertexSet = [5, 6, 7].into_iter().collect();
    if let Some(s) = minimal_span(&g, &y, 0, 2, 3)? {
        println!("minimal (0, Y, 2, 3)-span: {:?} via {:?}", s.vertices, s.paths);
    }

    let parts: Vec<Graph> = (0..5).map(|_| complete(2)).collect();
    let apexed = join(&Graph::empty(1), &disjoint_union(&parts).0);
    let beta = Ratio::new(1, 2);
    match island_partition(&apexed, 2, 0, 2, beta)? {
        IslandOutcome::Found { result, trace } => {
            println!("islands after {} rounds: X = {:?}, Z = {:?}", trace.len(), result.x, result.z);
            println!("violations: {:?}", island_violations(&apexed, 2, beta, &result));
        }
        IslandOutcome::Failed { trace } => println!("no islands, trace {trace:?}"),
    }

    let k4 = complete(4);
    let c = build_weak_collection(&k4, 2, 3)?;
    println!("weak collection for K4: {}", c.to_json());
    println!("covers every subgraph of min degree 2: {}", verify_collection(&k4, &c, 2)?);
    let rep = union_bound_check(&k4, &c, 0.3, 20_000, 1)?;
    println!(
        "Pr(some member survives at p=0.3) ~ {:.4}, exact {:.4}, union bound {:.4}",
        rep.p_hat,
        rep.exact.unwrap_or(f64::NAN),
        rep.union_bound
    );
    Ok(())
}
