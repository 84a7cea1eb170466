use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::graph::named::{by_name, complete_bipartite};
use crate::graph::{wedge, Graph, VertexSet};

use super::{gen_join_cliques, gen_lt};

/// A parametric graph family. The size parameter (`s` or `t`) may be left
/// open, in which case [`FamilySpec::graph_for_n`] picks the largest member
/// fitting `n` vertices and pads it with isolated vertices.
///
/// String form, `kind:key=value,...`:
///
/// * `kbip:r=R[,s=S]` for `K_{R,S}`
/// * `joincliques:r=R,w=W[,t=T]` for `I_{R-W} ∨ T·K_{W+1}`
/// * `lt:r=R[,t=T]` for `L_T`
/// * `wedge:base=NAME,z=A+B+...[,t=T]` for `NAME ∧_T {A, B, ...}`
/// * `graph:NAME` for a fixed named graph
///
/// Names are those of [`by_name`]; a name may itself contain a comma
/// (`K3,3`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    CompleteBipartite { r: usize, s: Option<usize> },
    JoinCliques { r: usize, w: usize, t: Option<usize> },
    Lt { r: usize, t: Option<usize> },
    WedgeOfF { base: String, z: VertexSet, t: Option<usize> },
    Custom { name: String },
}

impl FamilySpec {
    /// The member with the explicit size parameter.
    pub fn build(&self) -> Result<Graph> {
        let missing = |p: &str| invalid(format!("family {self} has no '{p}' parameter"));
        match self {
            FamilySpec::CompleteBipartite { r, s } => {
                Ok(complete_bipartite(*r, s.ok_or_else(|| missing("s"))?))
            }
            FamilySpec::JoinCliques { r, w, t } => gen_join_cliques(*r, *w, t.ok_or_else(|| missing("t"))?),
            FamilySpec::Lt { r, t } => Ok(gen_lt(*r, t.ok_or_else(|| missing("t"))?)?.0),
            FamilySpec::WedgeOfF { base, z, t } => {
                Ok(wedge(&by_name(base)?, z, t.ok_or_else(|| missing("t"))?)?.0)
            }
            FamilySpec::Custom { name } => by_name(name),
        }
    }

    /// `G_n`: the largest member on at most `n` vertices, padded to exactly
    /// `n`. An explicit size parameter is ignored.
    pub fn graph_for_n(&self, n: usize) -> Result<Graph> {
        let too_small = || invalid(format!("family {self} has no member on {n} vertices"));
        let g = match self {
            FamilySpec::CompleteBipartite { r, .. } => {
                if n <= *r {
                    return Err(too_small());
                }
                complete_bipartite(*r, n - r)
            }
            FamilySpec::JoinCliques { r, w, .. } => {
                let t = n.checked_sub(r.saturating_sub(*w)).map_or(0, |x| x / (w + 1));
                if t == 0 || w > r {
                    return Err(too_small());
                }
                gen_join_cliques(*r, *w, t)?
            }
            FamilySpec::Lt { r, .. } => {
                let t = n.checked_sub(r.saturating_sub(1)).map_or(0, |x| x / 3);
                if t == 0 {
                    return Err(too_small());
                }
                gen_lt(*r, t)?.0
            }
            FamilySpec::WedgeOfF { base, z, .. } => {
                let b = by_name(base)?;
                let per_copy = b.n().saturating_sub(z.len());
                if per_copy == 0 {
                    return Err(invalid("wedge base must have a vertex outside Z"));
                }
                let t = n.checked_sub(z.len()).map_or(0, |x| x / per_copy);
                if t == 0 {
                    return Err(too_small());
                }
                wedge(&b, z, t)?.0
            }
            FamilySpec::Custom { name } => by_name(name)?,
        };
        g.pad_to(n).map_err(|_| too_small())
    }

    fn validate(self) -> Result<Self> {
        match &self {
            FamilySpec::CompleteBipartite { r, .. } if *r == 0 => Err(invalid("kbip needs r >= 1")),
            FamilySpec::JoinCliques { r, w, t } if *r < 2 || w > r || *t == Some(0) => Err(invalid(
                "joincliques needs r >= 2, 0 <= w <= r and t >= 1",
            )),
            FamilySpec::Lt { r, t } if *r < 4 || *t == Some(0) => Err(invalid("lt needs r >= 4 and t >= 1")),
            FamilySpec::WedgeOfF { base, z, t } => {
                let b = by_name(base)?;
                z.check_within(b.n())?;
                if *t == Some(0) {
                    return Err(invalid("wedge needs t >= 1"));
                }
                Ok(self)
            }
            FamilySpec::Custom { name } => by_name(name).map(|_| self),
            _ => Ok(self),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |key: &str, v: &Option<usize>| v.map(|x| format!(",{key}={x}")).unwrap_or_default();
        match self {
            FamilySpec::CompleteBipartite { r, s } => write!(f, "kbip:r={r}{}", opt("s", s)),
            FamilySpec::JoinCliques { r, w, t } => write!(f, "joincliques:r={r},w={w}{}", opt("t", t)),
            FamilySpec::Lt { r, t } => write!(f, "lt:r={r}{}", opt("t", t)),
            FamilySpec::WedgeOfF { base, z, t } => {
                let z: Vec<String> = z.iter().map(|v| v.to_string()).collect();
                write!(f, "wedge:base={base},z={}{}", z.join("+"), opt("t", t))
            }
            FamilySpec::Custom { name } => write!(f, "graph:{name}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse(format!("family '{s}': {msg}"));
        let (kind, rest) = s.trim().split_once(':').ok_or_else(|| bad("expected 'kind:params'".into()))?;
        let kind = kind.trim().to_ascii_lowercase();
        if kind == "graph" {
            return FamilySpec::Custom { name: rest.trim().to_string() }.validate();
        }
        // a piece without '=' continues the previous value (names like K3,3)
        let mut pairs: Vec<(String, String)> = Vec::new();
        for piece in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match piece.split_once('=') {
                Some((k, v)) => {
                    let k = k.trim().to_ascii_lowercase();
                    if pairs.iter().any(|(q, _)| *q == k) {
                        return Err(bad(format!("parameter '{k}' given twice")));
                    }
                    pairs.push((k, v.trim().to_string()));
                }
                None => match pairs.last_mut() {
                    Some((_, v)) => {
                        v.push(',');
                        v.push_str(piece);
                    }
                    None => return Err(bad(format!("expected key=value, got '{piece}'"))),
                },
            }
        }
        let allowed: &[&str] = match kind.as_str() {
            "kbip" => &["r", "s"],
            "joincliques" => &["r", "w", "t"],
            "lt" => &["r", "t"],
            "wedge" => &["base", "z", "t"],
            _ => return Err(bad(format!("unknown family kind '{kind}'"))),
        };
        if let Some((k, _)) = pairs.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            return Err(bad(format!("unknown parameter '{k}' for {kind}")));
        }
        let raw = |k: &str| pairs.iter().find(|(q, _)| q == k).map(|(_, v)| v.as_str());
        let num = |k: &str| -> Result<Option<usize>> {
            raw(k)
                .map(|v| v.parse::<usize>().map_err(|_| bad(format!("'{k}' must be a non-negative integer"))))
                .transpose()
        };
        let need = |k: &str| -> Result<usize> { num(k)?.ok_or_else(|| bad(format!("missing '{k}'"))) };
        let spec = match kind.as_str() {
            "kbip" => FamilySpec::CompleteBipartite { r: need("r")?, s: num("s")? },
            "joincliques" => FamilySpec::JoinCliques {
                r: need("r")?,
                w: need("w")?,
                t: num("t")?,
            },
            "lt" => FamilySpec::Lt { r: need("r")?, t: num("t")? },
            _ => {
                let base = raw("base").ok_or_else(|| bad("missing 'base'".into()))?.to_string();
                let z = raw("z")
                    .unwrap_or("")
                    .split('+')
                    .map(str::trim)
                    .filter(|p| !p.is_empty())
                    .map(|p| p.parse::<usize>().map_err(|_| bad(format!("bad vertex '{p}' in z"))))
                    .collect::<Result<VertexSet>>()?;
                FamilySpec::WedgeOfF { base, z, t: num("t")? }
            }
        };
        spec.validate()
    }
}
