//! Prints the threshold verdict for a handful of excluded minors under each
//! property.

use minorperc::classify::{classify, ClassifyOptions, Property};
use minorperc::graph::named::by_name;

fn main() -> minorperc::Result<()> {
    let opts = ClassifyOptions::default();
    let props = [Property::Degenerate, Property::Choosable, Property::Colorable, Property::Regular];
    println!("{:<10} {:>2} {:<11} {:<13} {:>5} {:<15}", "H", "r", "property", "case", "q", "tightness");
    for (name, r) in [("K3", 2), ("K4", 3), ("K3,3", 3), ("K5", 4), ("K2,4", 2), ("petersen", 3)] {
        let h = by_name(name)?;
        for p in props {
            let c = classify(p, r, &h, &opts)?;
            let q = match (c.q, c.bounds) {
                (Some(q), _) => q.to_string(),
                (None, Some((lo, hi))) => format!("{lo}..{hi}"),
                _ => "-".into(),
            };
            let case = serde_json::to_value(c.case).unwrap();
            println!(
                "{:<10} {:>2} {:<11} {:<13} {:>5} {:?}",
                name,
                r,
                p.to_string(),
                case.as_str().unwrap_or("?"),
                q,
                c.tightness
            );
        }
    }
    Ok(())
}
