//! Threshold exponents for `(r-1)`-degeneracy, `r`-choosability,
//! `r`-colourability and having no `r`-regular subgraph on `H`-minor-free
//! graphs.

mod sr;

pub use sr::{default_t_max, s_r, SrValue};

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::algos::{binomial, Budget};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::minor::{in_hr, subgraph_of_cover_shape, tau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    /// `(r-1)`-degenerate.
    Degenerate,
    /// `r`-choosable.
    Choosable,
    /// `r`-colourable.
    Colorable,
    /// No `r`-regular subgraph.
    Regular,
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "degenerate" | "dr" => Ok(Property::Degenerate),
            "choosable" | "list" => Ok(Property::Choosable),
            "colorable" | "colourable" | "chi" => Ok(Property::Colorable),
            "regular" | "rr" => Ok(Property::Regular),
            _ => Err(Error::Parse(format!("unknown property '{s}'"))),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Degenerate => "degenerate",
            Property::Choosable => "choosable",
            Property::Colorable => "colorable",
            Property::Regular => "regular",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Tightness {
    ThetaExponent,
    LowerBoundOnly,
    ThetaOne,
    BoundsPair,
    Unknown,
}

/// Which statement produced the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    /// Numbered statement of the relevant theorem.
    Statement(u8),
    /// `H = K_{r+1}` with `r <= 3`.
    SmallClique,
    /// `H` is a star forest of the allowed shape.
    Stars,
    /// Only the `s_r` lower bound applies.
    LowerBound,
    /// Taken over from the degeneracy verdict.
    Inherited,
    /// `K_{3,3}` and 3-colourability.
    PlanarK33,
}

impl Case {
    pub fn number(self) -> Option<u8> {
        match self {
            Case::Statement(k) => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::Statement(k) => write!(f, "{k}"),
            Case::SmallClique => f.write_str("small-clique"),
            Case::Stars => f.write_str("stars"),
            Case::LowerBound => f.write_str("lower-bound"),
            Case::Inherited => f.write_str("inherited"),
            Case::PlanarK33 => f.write_str("planar-k33"),
        }
    }
}

impl Serialize for Case {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A threshold verdict `Θ(n^{-1/q})`, `Ω(n^{-1/q})`, `Θ(1)`, or a pair of
/// exponents bracketing the threshold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdClassification {
    pub property: Property,
    pub r: usize,
    pub case: Case,
    pub q: Option<u64>,
    /// `(lower, upper)` exponents for [`Tightness::BoundsPair`].
    pub bounds: Option<(u64, u64)>,
    pub tightness: Tightness,
    pub tau: usize,
    /// `r - τ(H) + 1` when `τ(H) <= r`.
    pub w: Option<usize>,
    pub s_r: Option<usize>,
    pub t_max: Option<usize>,
    /// The two operands of the lower-bound maximum.
    pub lower_terms: Option<(u64, u64)>,
}

impl ThresholdClassification {
    fn new(property: Property, r: usize, tau: usize, case: Case, tightness: Tightness, q: Option<u64>) -> Self {
        ThresholdClassification {
            property,
            r,
            case,
            q,
            bounds: None,
            tightness,
            tau,
            w: (tau <= r).then(|| r - tau + 1),
            s_r: None,
            t_max: None,
            lower_terms: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("classification serialises")
    }
}

/// Knobs for the `s_r` computation.
#[derive(Clone, Copy, Debug, Default)]
pub struct ClassifyOptions {
    /// Wedge multiplicity for the minor tests; defaults to `|V(H)| + |E(H)|`.
    pub t_max: Option<usize>,
    pub budget: Budget,
}

fn check_r(r: usize) -> Result<()> {
    if r < 2 {
        return Err(invalid(format!("classification needs r >= 2 (got r={r})")));
    }
    Ok(())
}

/// `(r+2-τ)r - C(r+2-τ, 2)` for `1 <= τ <= r`.
fn cover_exponent(r: usize, tau: usize) -> u64 {
    let b = (r + 2 - tau) as u64;
    b * r as u64 - binomial(b, 2) as u64
}

fn is_small_clique(h: &Graph, r: usize) -> bool {
    r <= 3 && h.n() == r + 1 && h.is_complete()
}

/// Every component is an isolated vertex or a star with at most `r`
/// leaves, and at most one component has more than `big` vertices.
fn is_star_forest(h: &Graph, r: usize, big: usize) -> bool {
    let comps = h.components();
    let is_star = |c: &Vec<usize>| {
        let k = c.len();
        let m: usize = c.iter().map(|&v| h.degree(v)).sum::<usize>() / 2;
        k == 1 || (m == k - 1 && c.iter().any(|&v| h.degree(v) == k - 1) && k - 1 <= r)
    };
    comps.iter().all(is_star) && comps.iter().filter(|c| c.len() > big).count() <= 1
}

/// `H = K_{1,s}` for some `1 <= s <= r`.
fn is_single_star(h: &Graph, r: usize) -> bool {
    h.n() >= 2 && h.is_connected() && h.m() == h.n() - 1 && h.max_degree() == h.n() - 1 && h.n() - 1 <= r
}

fn is_k33(h: &Graph) -> bool {
    h.n() == 6
        && h.m() == 9
        && h.vertices().all(|v| h.degree(v) == 3)
        && h.edges()
            .iter()
            .all(|&(u, v)| !h.neighbors(u).iter().any(|&w| h.has_edge(v, w)))
}

fn min_degree_at_least(h: &Graph, r: usize) -> bool {
    h.min_degree().is_some_and(|d| d >= r)
}

fn has_shape(h: &Graph, a: usize, b: usize) -> bool {
    subgraph_of_cover_shape(h, a, b)
        .expect("b >= 1 by construction")
        .is_some()
}

/// Degeneracy (and choosability): the four statements, the `Θ(1)` cases,
/// and the `s_r` lower bound for what remains.
pub fn classify_dr(r: usize, h: &Graph) -> Result<ThresholdClassification> {
    classify_dr_with(r, h, &ClassifyOptions::default())
}

pub fn classify_dr_with(r: usize, h: &Graph, opts: &ClassifyOptions) -> Result<ThresholdClassification> {
    check_r(r)?;
    let t = tau(h).size;
    let p = Property::Degenerate;
    let verdict = |case, tightness, q| Ok(ThresholdClassification::new(p, r, t, case, tightness, q));
    if is_small_clique(h, r) {
        return verdict(Case::SmallClique, Tightness::ThetaOne, None);
    }
    if is_star_forest(h, r, 1) {
        return verdict(Case::Stars, Tightness::ThetaOne, None);
    }
    if t >= r + 1 {
        return verdict(Case::Statement(1), Tightness::ThetaExponent, Some(r as u64));
    }
    // here 1 <= τ <= r
    if min_degree_at_least(h, r) {
        if !has_shape(h, r - 1, 2) {
            return verdict(Case::Statement(3), Tightness::ThetaExponent, Some(2 * r as u64 - 1));
        }
        return verdict(Case::Statement(4), Tightness::ThetaExponent, Some(3 * r as u64 - 3));
    }
    if !has_shape(h, t - 1, r + 2 - t) {
        return verdict(Case::Statement(2), Tightness::ThetaExponent, Some(cover_exponent(r, t)));
    }
    classify_lower_with(r, h, opts)
}

/// The `s_r` lower bound `q = max{min{s_r(H)+1, C(r+1,2)}, (r-τ+2)r -
/// C(r-τ+2, 2)}`, for `H ∈ H_r` with `2 <= τ(H) <= r`.
pub fn classify_lower(r: usize, h: &Graph) -> Result<ThresholdClassification> {
    classify_lower_with(r, h, &ClassifyOptions::default())
}

pub fn classify_lower_with(r: usize, h: &Graph, opts: &ClassifyOptions) -> Result<ThresholdClassification> {
    check_r(r)?;
    let t = tau(h).size;
    if !in_hr(h, r)? || t < 2 {
        return Err(Error::Precondition(format!(
            "the lower bound needs H in H_r with 2 <= tau(H) <= r (r={r}, tau={t})"
        )));
    }
    let t_max = opts.t_max.unwrap_or_else(|| default_t_max(h));
    let sr = s_r(h, r, t_max, opts.budget)?;
    let cap = binomial(r as u64 + 1, 2) as u64;
    let first = (sr.value as u64 + 1).min(cap);
    let second = cover_exponent(r, t);
    let mut c = if sr.decided {
        ThresholdClassification::new(
            Property::Degenerate,
            r,
            t,
            Case::LowerBound,
            Tightness::LowerBoundOnly,
            Some(first.max(second)),
        )
    } else {
        ThresholdClassification::new(Property::Degenerate, r, t, Case::LowerBound, Tightness::Unknown, None)
    };
    c.s_r = Some(sr.value);
    c.t_max = Some(t_max);
    c.lower_terms = Some((first, second));
    Ok(c)
}

/// Same verdict as [`classify_dr`]: both properties share their exponents.
pub fn classify_choosable(r: usize, h: &Graph) -> Result<ThresholdClassification> {
    classify_choosable_with(r, h, &ClassifyOptions::default())
}

pub fn classify_choosable_with(r: usize, h: &Graph, opts: &ClassifyOptions) -> Result<ThresholdClassification> {
    let mut c = classify_dr_with(r, h, opts)?;
    c.property = Property::Choosable;
    Ok(c)
}

/// Degeneracy is the lowest of the thresholds, so its exponent bounds any
/// other property from below, and `Θ(1)` carries over unchanged.
fn inherit(p: Property, base: ThresholdClassification) -> ThresholdClassification {
    let tightness = match base.tightness {
        Tightness::ThetaExponent | Tightness::LowerBoundOnly => Tightness::LowerBoundOnly,
        other => other,
    };
    ThresholdClassification {
        property: p,
        case: Case::Inherited,
        tightness,
        ..base
    }
}

/// No `r`-regular subgraph.
pub fn classify_rr(r: usize, h: &Graph) -> Result<ThresholdClassification> {
    classify_rr_with(r, h, &ClassifyOptions::default())
}

pub fn classify_rr_with(r: usize, h: &Graph, opts: &ClassifyOptions) -> Result<ThresholdClassification> {
    check_r(r)?;
    let t = tau(h).size;
    let p = Property::Regular;
    let verdict = |case, tightness, q| Ok(ThresholdClassification::new(p, r, t, case, tightness, q));
    if t >= r + 1 {
        return verdict(Case::Statement(1), Tightness::ThetaExponent, Some(r as u64));
    }
    if is_small_clique(h, r) {
        return verdict(Case::SmallClique, Tightness::ThetaOne, None);
    }
    if is_single_star(h, r) {
        return verdict(Case::Stars, Tightness::ThetaOne, None);
    }
    if t >= 1 {
        if r % 2 == 0 && min_degree_at_least(h, r) && !has_shape(h, r - 1, 2) {
            return verdict(Case::Statement(3), Tightness::ThetaExponent, Some(2 * r as u64 - 1));
        }
        if r % (r + 2 - t) == 0 && !has_shape(h, t - 1, r + 2 - t) {
            return verdict(Case::Statement(2), Tightness::ThetaExponent, Some(cover_exponent(r, t)));
        }
    }
    Ok(inherit(p, classify_dr_with(r, h, opts)?))
}

/// `r`-colourability.
pub fn classify_chi(r: usize, h: &Graph) -> Result<ThresholdClassification> {
    classify_chi_with(r, h, &ClassifyOptions::default())
}

pub fn classify_chi_with(r: usize, h: &Graph, opts: &ClassifyOptions) -> Result<ThresholdClassification> {
    check_r(r)?;
    let t = tau(h).size;
    let p = Property::Colorable;
    let verdict = |case, tightness, q| Ok(ThresholdClassification::new(p, r, t, case, tightness, q));
    if r == 3 && is_k33(h) {
        let mut c = ThresholdClassification::new(p, r, t, Case::PlanarK33, Tightness::BoundsPair, None);
        c.bounds = Some((5, 6));
        return Ok(c);
    }
    if is_small_clique(h, r) {
        return verdict(Case::SmallClique, Tightness::ThetaOne, None);
    }
    if is_star_forest(h, r, 2) {
        return verdict(Case::Stars, Tightness::ThetaOne, None);
    }
    if (1..=2).contains(&t) && !has_shape(h, 1, r) {
        let q = (r * (r + 1) / 2) as u64;
        return verdict(Case::Statement(1), Tightness::ThetaExponent, Some(q));
    }
    Ok(inherit(p, classify_dr_with(r, h, opts)?))
}

/// Dispatch on the property.
pub fn classify(p: Property, r: usize, h: &Graph, opts: &ClassifyOptions) -> Result<ThresholdClassification> {
    match p {
        Property::Degenerate => classify_dr_with(r, h, opts),
        Property::Choosable => classify_choosable_with(r, h, opts),
        Property::Colorable => classify_chi_with(r, h, opts),
        Property::Regular => classify_rr_with(r, h, opts),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::gen_join_cliques;
    use crate::graph::named::*;
    use crate::graph::{disjoint_union, join};
    use proptest::prelude::*;

    fn cq(c: &ThresholdClassification) -> (Option<u8>, Option<u64>, Tightness) {
        (c.case.number(), c.q, c.tightness)
    }

    #[test]
    fn degeneracy_table() {
        use Tightness::*;
        assert_eq!(cq(&classify_dr(3, &complete_bipartite(3, 3)).unwrap()), (Some(3), Some(5), ThetaExponent));
        assert_eq!(cq(&classify_dr(4, &complete(5)).unwrap()), (Some(4), Some(9), ThetaExponent));
        assert_eq!(cq(&classify_dr(2, &complete(5)).unwrap()), (Some(1), Some(2), ThetaExponent));
        for r in 2..=3 {
            assert_eq!(cq(&classify_dr(r, &complete(r + 2)).unwrap()), (Some(1), Some(r as u64), ThetaExponent));
            assert_eq!(classify_dr(r, &complete(r + 1)).unwrap().tightness, ThetaOne);
            for s in 1..=r {
                assert_eq!(classify_dr(r, &star(s)).unwrap().tightness, ThetaOne);
            }
        }
        assert_eq!(classify_dr(2, &Graph::empty(3)).unwrap().tightness, ThetaOne);
        // C_5 at r = 2: τ = 3 = r + 1
        assert_eq!(cq(&classify_dr(2, &cycle(5)).unwrap()), (Some(1), Some(2), ThetaExponent));
        // K_{3,3} at r = 4: τ = 3, δ = 3, no (2, 3) shape
        assert_eq!(cq(&classify_dr(4, &complete_bipartite(3, 3)).unwrap()), (Some(2), Some(9), ThetaExponent));
        assert!(classify_dr(1, &complete(3)).is_err());
    }

    #[test]
    fn star_forests() {
        let two_stars = disjoint_union(&[star(2), star(2)]).0;
        assert_ne!(classify_dr(3, &two_stars).unwrap().tightness, Tightness::ThetaOne);
        let star_plus = disjoint_union(&[star(3), Graph::empty(2)]).0;
        assert_eq!(classify_dr(3, &star_plus).unwrap().tightness, Tightness::ThetaOne);
        assert_ne!(classify_dr(2, &star(3)).unwrap().tightness, Tightness::ThetaOne);
        // colourability allows extra K_2 components
        let k2s = disjoint_union(&[star(3), complete(2), complete(2)]).0;
        assert_eq!(classify_chi(3, &k2s).unwrap().tightness, Tightness::ThetaOne);
    }

    #[test]
    fn lower_bound_cases() {
        // the bowtie is in H_3 with τ = 3 and δ = 2
        let c = classify_dr(3, &bowtie()).unwrap();
        assert_eq!(c.case, Case::LowerBound);
        assert_eq!(c.tightness, Tightness::LowerBoundOnly);
        let (first, second) = c.lower_terms.unwrap();
        assert_eq!(second, 5);
        assert_eq!(c.q, Some(first.max(second)));
        assert!(classify_lower(3, &complete_bipartite(3, 3)).is_err());
        assert!(classify_lower(3, &star(2)).is_err());
        // floor term at τ = r is 2r - 1
        for r in 2..=5 {
            assert_eq!(cover_exponent(r, r), 2 * r as u64 - 1);
        }
    }

    #[test]
    fn regular_and_colourable() {
        assert_eq!(classify_rr(2, &complete(5)).unwrap().q, Some(2));
        assert_eq!(classify_rr(2, &star(2)).unwrap().tightness, Tightness::ThetaOne);
        let c = classify_rr(4, &complete_bipartite(3, 3)).unwrap();
        assert_ne!(c.case, Case::Statement(3));
        assert_eq!(c.case, Case::Inherited);
        let c = classify_chi(3, &complete_bipartite(3, 3)).unwrap();
        assert_eq!((c.tightness, c.bounds, c.q), (Tightness::BoundsPair, Some((5, 6)), None));
        assert_eq!(cq(&classify_chi(2, &cycle(4)).unwrap()), (Some(1), Some(3), Tightness::ThetaExponent));
        assert_eq!(classify_chi(3, &complete(4)).unwrap().tightness, Tightness::ThetaOne);
    }

    #[test]
    fn join_clique_shapes() {
        // I_2 ∨ 3K_2 has τ = 5 > r
        let h = gen_join_cliques(3, 1, 3).unwrap();
        assert_eq!(classify_dr(3, &h).unwrap().case, Case::Statement(1));
        // K_4 minus an edge at r = 3: τ = 2, δ = 2, inside K_1 ∨ tK_3
        let diamond = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(classify_dr(3, &diamond).unwrap().case, Case::LowerBound);
        // K_1 ∨ K_{1,3} at r = 2: τ = 2, δ = 2, not inside K_1 ∨ tK_2, so
        // statements 2 and 3 both give 2r - 1
        let h = join(&Graph::empty(1), &star(3));
        assert_eq!(cq(&classify_dr(2, &h).unwrap()), (Some(3), Some(3), Tightness::ThetaExponent));
        // K_1 ∨ P_5 at r = 3 sits in K_2 ∨ tK_2 (apex and the middle vertex)
        let h = join(&Graph::empty(1), &path(5));
        assert_eq!(classify_dr(3, &h).unwrap().case, Case::LowerBound);
    }

    #[test]
    fn json_report_fields() {
        let j: serde_json::Value = serde_json::from_str(&classify_dr(3, &complete_bipartite(3, 3)).unwrap().to_json()).unwrap();
        for key in ["property", "case", "q", "tightness", "tau", "s_r", "t_max"] {
            assert!(j.get(key).is_some(), "{key}");
        }
        assert_eq!(j["case"], "3");
        assert_eq!(j["q"], 5);
        assert_eq!(j["property"], "degenerate");
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=7, proptest::collection::vec(any::<bool>(), 21)).prop_map(|(n, bits)| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn statements_two_and_three_agree(h in arb_graph(), r in 2usize..5) {
            let t = tau(&h).size;
            if t <= r && min_degree_at_least(&h, r) {
                prop_assert_eq!(t, r);
            }
        }

        #[test]
        fn q_present_iff_exponent_verdict(h in arb_graph(), r in 2usize..4) {
            let opts = ClassifyOptions { t_max: Some(4), budget: Budget(200_000) };
            for p in [Property::Degenerate, Property::Colorable, Property::Regular] {
                let c = classify(p, r, &h, &opts).unwrap();
                let exp = matches!(c.tightness, Tightness::ThetaExponent | Tightness::LowerBoundOnly);
                prop_assert_eq!(c.q.is_some(), exp);
            }
        }

        #[test]
        fn degeneracy_threshold_is_lowest(h in arb_graph(), r in 2usize..4) {
            let opts = ClassifyOptions { t_max: Some(4), budget: Budget(200_000) };
            let d = classify_dr_with(r, &h, &opts).unwrap();
            for other in [classify_rr_with(r, &h, &opts).unwrap(), classify_chi_with(r, &h, &opts).unwrap()] {
                if d.tightness == Tightness::ThetaExponent && other.tightness == Tightness::ThetaExponent {
                    prop_assert!(d.q.unwrap() <= other.q.unwrap());
                }
            }
        }
    }
}
