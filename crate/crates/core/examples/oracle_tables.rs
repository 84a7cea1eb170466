//! Exact extremal numbers for small minor-free graphs.

use minorperc::graph::named::by_name;
use minorperc::oracle::{check_appendix_bounds, enumerate_min_degree_subgraphs, extremal_table, write_tables_csv};

fn main() -> minorperc::Result<()> {
    let mut tables = Vec::new();
    for name in ["K3", "K4", "C4", "K1,3"] {
        let t = extremal_table(&by_name(name)?, 7)?.named(name);
        let rep = check_appendix_bounds(&t);
        eprintln!("{name}: bounds hold on {} rows: {}", rep.rows_checked, rep.passed());
        tables.push(t);
    }
    write_tables_csv(&tables, std::io::stdout())?;

    let dense = enumerate_min_degree_subgraphs(&by_name("K4")?, 2)?;
    eprintln!("edge-minimal subgraphs of K4 with min degree 2: {}", dense.len());
    Ok(())
}
