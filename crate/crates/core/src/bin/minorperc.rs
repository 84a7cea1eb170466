use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use minorperc::algos::{self, Budget};
use minorperc::classify::{self, ClassifyOptions, Property};
use minorperc::constructions::FamilySpec;
use minorperc::graph::{named, parse_graph};
use minorperc::minor::{self, Depth};
use minorperc::percolation::{self, PercProperty, DEFAULT_SEED};
use minorperc::signatures::{self, SignatureCollection};
use minorperc::{oracle, Error, Graph};

#[derive(Parser)]
#[command(name = "minorperc", version, about = "Threshold exponents and percolation experiments for minor-free graphs")]
struct Cli {
    /// Search-node cap for minor, colouring and regular-subgraph searches.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT.0)]
    budget: u64,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Builder {
    Weak,
    None,
}

/// Graphs are given as a built-in name (K5, K3,3, C4, P6, petersen, star4,
/// ...), inline JSON, a path to an edge-list or JSON file, or `-` for stdin.
#[derive(Subcommand)]
enum Cmd {
    /// Threshold exponent, case and tightness for (r, H, property).
    Classify {
        #[arg(long)]
        r: usize,
        #[arg(long = "H")]
        h: String,
        #[arg(long, default_value = "degenerate")]
        property: String,
        /// Wedge multiplicity for the lower-bound minor tests.
        #[arg(long)]
        t_max: Option<usize>,
    },
    /// Vertex cover number with a minimum cover.
    Tau {
        #[arg(long = "H")]
        h: String,
    },
    /// Whether H is a (shallow) minor of G.
    Minor {
        #[arg(long = "G")]
        g: String,
        #[arg(long = "H")]
        h: String,
        /// Branch-set radius bound, or `inf`.
        #[arg(long, default_value = "inf")]
        depth: String,
    },
    /// A member of a graph family.
    Generate {
        /// `kbip:r=R[,s=S]`, `joincliques:r=R,w=W[,t=T]`, `lt:r=R[,t=T]`,
        /// `wedge:base=NAME,z=A+B[,t=T]` or `graph:NAME`.
        #[arg(long)]
        family: String,
        /// Largest member on at most this many vertices, padded.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: GraphFormat,
    },
    /// The r-core (maximal subgraph of minimum degree at least r).
    Core {
        #[arg(long = "G")]
        g: String,
        #[arg(long)]
        r: usize,
    },
    /// Whether G is r-colourable.
    Color {
        #[arg(long = "G")]
        g: String,
        #[arg(long)]
        r: usize,
    },
    /// Whether G is r-choosable.
    Choosable {
        #[arg(long = "G")]
        g: String,
        #[arg(long)]
        r: usize,
    },
    /// Whether G has a nonempty r-regular subgraph.
    Regular {
        #[arg(long = "G")]
        g: String,
        #[arg(long)]
        r: usize,
    },
    /// Monte Carlo sweep of Pr(G_n(p) has the property).
    Percolate {
        #[arg(long)]
        family: String,
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        /// Comma-separated edge probabilities.
        #[arg(long, value_delimiter = ',')]
        p: Vec<f64>,
        /// `degenerate:r=R`, `colorable:r=R`, `choosable:r=R` or
        /// `regular:r=R`; defaults to degeneracy at the family's r.
        #[arg(long)]
        property: Option<String>,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, env = "MINORPERC_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Also locate the crossing of 1/2 at each n and fit log p against log n.
        #[arg(long)]
        fit: bool,
        /// Bisection width for --fit.
        #[arg(long, default_value_t = 0.002)]
        tol: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Build and optionally verify a signature collection.
    Signature {
        #[arg(long = "G")]
        g: String,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value = "weak")]
        builder: Builder,
        /// Peeling degree bound for the weak builder; defaults to the maximum degree.
        #[arg(long)]
        degree_bound: Option<usize>,
        /// Collection JSON to verify with `--builder none`; empty if absent.
        #[arg(long)]
        collection: Option<PathBuf>,
        /// Check covering exhaustively.
        #[arg(long)]
        verify: bool,
    },
    /// Exact f_H(n) and d_H(n) for small n.
    OracleTable {
        /// Excluded minor; repeat for several.
        #[arg(long = "H", required = true)]
        h: Vec<String>,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Also check the finite degeneracy/edge bounds.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
}

fn read_graph(src: &str) -> anyhow::Result<Graph> {
    let src = src.trim();
    if src == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(parse_graph(&text)?);
    }
    if src.starts_with('{') {
        return Ok(parse_graph(src)?);
    }
    let path = std::path::Path::new(src);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {src}"))?;
        return Ok(parse_graph(&text)?);
    }
    Ok(named::by_name(src)?)
}

fn family_r(f: &FamilySpec) -> usize {
    match f {
        FamilySpec::CompleteBipartite { r, .. } | FamilySpec::JoinCliques { r, .. } | FamilySpec::Lt { r, .. } => *r,
        FamilySpec::WedgeOfF { .. } | FamilySpec::Custom { .. } => 2,
    }
}

fn json_line(v: serde_json::Value) -> String {
    format!("{v}\n")
}

fn run(cli: Cli) -> anyhow::Result<(String, bool)> {
    let budget = Budget(cli.budget);
    if budget.0 == 0 {
        bail!(Error::InvalidParameter("budget must be positive".into()));
    }
    let out = match cli.cmd {
        Cmd::Classify { r, h, property, t_max } => {
            let h = read_graph(&h)?;
            let property: Property = property.parse()?;
            let opts = ClassifyOptions { t_max, budget };
            json_line(serde_json::to_value(classify::classify(property, r, &h, &opts)?)?)
        }
        Cmd::Tau { h } => {
            let c = minor::tau(&read_graph(&h)?);
            json_line(json!({ "tau": c.size, "cover": c.cover }))
        }
        Cmd::Minor { g, h, depth } => {
            let (g, h) = (read_graph(&g)?, read_graph(&h)?);
            let depth: Depth = depth.parse()?;
            let v = match minor::contains_shallow_minor(&g, &h, depth, budget) {
                algos::Search::Found(m) => json!({ "contains": "yes", "branch_sets": m.branch_sets }),
                algos::Search::Absent => json!({ "contains": "no" }),
                algos::Search::Undecided => json!({ "contains": "undecided" }),
            };
            json_line(v)
        }
        Cmd::Generate { family, n, format } => {
            let f: FamilySpec = family.parse()?;
            let g = match n {
                Some(n) => f.graph_for_n(n)?,
                None => f.build()?,
            };
            match format {
                GraphFormat::Edgelist => g.to_edge_list(),
                GraphFormat::Json => format!("{}\n", g.to_json()),
            }
        }
        Cmd::Core { g, r } => {
            let g = read_graph(&g)?;
            let core = algos::core(&g, r);
            json_line(json!({ "r": r, "core": core, "empty": core.is_empty() }))
        }
        Cmd::Color { g, r } => {
            let d = algos::chromatic_feasible(&read_graph(&g)?, r, budget);
            json_line(json!({ "r": r, "colorable": d }))
        }
        Cmd::Choosable { g, r } => {
            let b = algos::choosable(&read_graph(&g)?, r)?;
            json_line(json!({ "r": r, "choosable": b }))
        }
        Cmd::Regular { g, r } => {
            let d = algos::has_r_regular_subgraph(&read_graph(&g)?, r, budget);
            json_line(json!({ "r": r, "has_regular_subgraph": d }))
        }
        Cmd::Percolate {
            family,
            n,
            p,
            property,
            trials,
            seed,
            fit,
            tol,
            format,
        } => return percolate(&family, &n, &p, property, trials, seed, fit, tol, format, budget),
        Cmd::Signature {
            g,
            r,
            builder,
            degree_bound,
            collection,
            verify,
        } => {
            let g = read_graph(&g)?;
            let c = match builder {
                Builder::Weak => signatures::build_weak_collection(&g, r, degree_bound.unwrap_or(g.max_degree()))?,
                Builder::None => match collection {
                    Some(path) => {
                        let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                        let v: serde_json::Value =
                            serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
                        SignatureCollection::from_json(&v)?
                    }
                    None => SignatureCollection {
                        q: r,
                        members: Vec::new(),
                        c_bound: None,
                    },
                },
            };
            let mut v = c.to_json();
            if verify {
                v["verified"] = json!(signatures::verify_collection(&g, &c, r)?);
            }
            json_line(v)
        }
        Cmd::OracleTable { h, n_max, check, format } => {
            let mut tables = Vec::new();
            for name in &h {
                tables.push(oracle::extremal_table(&read_graph(name)?, n_max)?.named(name));
            }
            let mut failed = false;
            if check {
                for t in &tables {
                    let rep = oracle::check_appendix_bounds(t);
                    for v in &rep.violations {
                        eprintln!("{}: {v}", t.h_name);
                    }
                    failed |= !rep.passed();
                }
            }
            let text = match format {
                Format::Csv => {
                    let mut buf = Vec::new();
                    oracle::write_tables_csv(&tables, &mut buf)?;
                    String::from_utf8(buf)?
                }
                Format::Json => json_line(serde_json::to_value(&tables)?),
            };
            return Ok((text, failed));
        }
    };
    Ok((out, false))
}

#[allow(clippy::too_many_arguments)]
fn percolate(
    family: &str,
    ns: &[usize],
    ps: &[f64],
    property: Option<String>,
    trials: u64,
    seed: u64,
    fit: bool,
    tol: f64,
    format: Format,
    budget: Budget,
) -> anyhow::Result<(String, bool)> {
    let f: FamilySpec = family.parse()?;
    let prop = match property {
        Some(s) => s.parse()?,
        None => PercProperty::Degenerate(family_r(&f)),
    };
    if ps.is_empty() && !fit {
        bail!(Error::InvalidParameter("give --p values, --fit, or both".into()));
    }
    let rows = percolation::sweep(&f, ns, ps, prop, trials, seed, budget)?;
    let flagged: Vec<String> = rows
        .iter()
        .filter(|r| r.estimate.undecided_fraction() >= 0.01)
        .map(|r| format!("n={} p={}", r.n, r.estimate.p))
        .collect();
    let mut thresholds = Vec::new();
    if fit && flagged.is_empty() {
        for &n in ns {
            let t = percolation::empirical_threshold(&f, n, prop, trials, seed, tol, budget)?;
            thresholds.push((n, t.p_hat));
        }
    }
    let slope = if thresholds.len() >= 3 {
        let pts: Vec<(f64, f64)> = thresholds.iter().map(|&(n, p)| (n as f64, p)).collect();
        Some(percolation::slope_fit(&pts)?)
    } else {
        None
    };
    let text = match format {
        Format::Csv => {
            let mut buf = Vec::new();
            if !rows.is_empty() {
                percolation::write_csv(&rows, &mut buf)?;
            }
            let mut text = String::from_utf8(buf)?;
            for (n, p) in &thresholds {
                text.push_str(&format!("# threshold n={n} p_hat={p} seed={seed}\n"));
            }
            if let Some(s) = slope {
                text.push_str(&format!("# fit slope={} intercept={} stderr={}\n", s.slope, s.intercept, s.stderr));
            }
            for fl in &flagged {
                text.push_str(&format!("# undecided fraction at or above 1% at {fl}\n"));
            }
            text
        }
        Format::Json => {
            let th: Vec<_> = thresholds.iter().map(|&(n, p)| json!({ "n": n, "p_hat": p })).collect();
            json_line(json!({
                "seed": seed,
                "rows": rows,
                "thresholds": th,
                "fit": slope,
                "flagged": flagged,
            }))
        }
    };
    if !flagged.is_empty() {
        eprintln!("too many undecided trials: {}", flagged.join(", "));
    }
    Ok((text, !flagged.is_empty()))
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::Parse(_) | Error::InvalidParameter(_)) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_path = cli.out.clone();
    match run(cli) {
        Ok((text, failed)) => {
            let written = match &out_path {
                Some(p) => fs::write(p, text.as_bytes()),
                None => io::stdout().write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
