//! The extremal families and list assignments.

use minorperc::algos::{is_in_dr, list_color_feasible, Budget};
use minorperc::constructions::{
    enumerate_pedals, gen_bad_lists_join, gen_join_cliques, gen_l, gen_lt, lt_restricted_certificate, FamilySpec,
};

fn main() -> minorperc::Result<()> {
    let g = gen_join_cliques(3, 1, 4)?;
    println!("I_2 join 4K_2: {} vertices, {} edges, 3-degenerate: {}", g.n(), g.m(), is_in_dr(&g, 4));

    let (l, y) = gen_l(5)?;
    println!("L for r=5: {} vertices, {} edges, Y = {:?}", l.n(), l.m(), y);
    let (lt, map) = gen_lt(5, 3)?;
    println!("L_3 for r=5: {} vertices, copy 2 is {:?}", lt.n(), map.copy_block(2));

    for s in 6..=8 {
        let pedals = enumerate_pedals(1, 3, s);
        println!("pedals of type {s} over I_1 at r=3: {}", pedals.len());
    }

    let (g, lists) = gen_bad_lists_join(3, 1)?;
    let res = list_color_feasible(&g, &lists, Budget::DEFAULT)?;
    println!("bad lists on {} vertices colourable: {}", g.n(), res.found().is_some());
    let (g, lists) = lt_restricted_certificate(4, 0)?;
    let res = list_color_feasible(&g, &lists, Budget::DEFAULT)?;
    println!("restricted L_t certificate on {} vertices colourable: {}", g.n(), res.found().is_some());

    for spec in ["kbip:r=3", "joincliques:r=4,w=2", "lt:r=4", "wedge:base=K4,z=0+1"] {
        let f: FamilySpec = spec.parse()?;
        let g = f.graph_for_n(40)?;
        println!("{f} at n=40: {} edges", g.m());
    }
    Ok(())
}
