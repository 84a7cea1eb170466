use rayon::prelude::*;

use crate::algos::{binomial, Budget, Search};
use crate::constructions::{enumerate_pedals, PedalGraph};
use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::minor::{tau, wedge_contains_minor};

/// Outcome of the `s_r(H)` computation at a fixed wedge multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrValue {
    /// Largest `s` such that every pedal of type at most `s` passed.
    pub value: usize,
    /// False when some minor test ran out of budget; `value` is then only
    /// the level reached before the undecided test.
    pub decided: bool,
    pub t_max: usize,
    /// The first pedal (canonical order) whose wedge misses `H`.
    pub witness: Option<PedalGraph>,
}

/// Default wedge multiplicity: `|V(H)| + |E(H)|`.
pub fn default_t_max(h: &Graph) -> usize {
    (h.n() + h.m()).max(1)
}

/// `s_r(H)`: the largest `s <= C(r+1, 2)` such that for every pedal `F` of
/// type at most `s` over the heart `I_{τ(H)-1}`, `H` is a minor of
/// `F ∧_{t_max} heart`.
pub fn s_r(h: &Graph, r: usize, t_max: usize, budget: Budget) -> Result<SrValue> {
    if r < 2 {
        return Err(invalid("s_r needs r >= 2"));
    }
    if t_max == 0 {
        return Err(invalid("t_max must be >= 1"));
    }
    let t = tau(h).size;
    if t == 0 {
        return Err(invalid("s_r needs tau(H) >= 1"));
    }
    let cap = binomial(r as u64 + 1, 2) as usize;
    for s in r..=cap {
        let pedals = enumerate_pedals(t - 1, r, s);
        let results: Vec<Result<Search<()>>> = pedals
            .par_iter()
            .map(|p| Ok(wedge_contains_minor(&p.graph, &p.heart, t_max, h, budget)?.map(|_| ())))
            .collect();
        let mut undecided = false;
        for (p, res) in pedals.iter().zip(results) {
            match res? {
                Search::Absent => {
                    return Ok(SrValue {
                        value: s - 1,
                        decided: true,
                        t_max,
                        witness: Some(p.clone()),
                    })
                }
                Search::Undecided => undecided = true,
                Search::Found(()) => {}
            }
        }
        if undecided {
            return Ok(SrValue {
                value: s - 1,
                decided: false,
                t_max,
                witness: None,
            });
        }
    }
    Ok(SrValue {
        value: cap,
        decided: true,
        t_max,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn triangle_at_r2() {
        let v = s_r(&complete(3), 2, default_t_max(&complete(3)), Budget::DEFAULT).unwrap();
        assert_eq!((v.value, v.decided), (3, true));
        assert!(v.witness.is_none());
    }

    #[test]
    fn k5_at_r4() {
        let h = complete(5);
        let v = s_r(&h, 4, default_t_max(&h), Budget::DEFAULT).unwrap();
        assert_eq!((v.value, v.decided), (8, true));
        // the failing type-9 pedal has a triangle for F_0
        let w = v.witness.unwrap();
        assert_eq!((w.type_s, w.f0_vertices.len()), (9, 3));
    }

    #[test]
    fn never_below_r_minus_one() {
        for (h, r) in [(bowtie(), 3), (path(4), 2), (complete_bipartite(2, 3), 3), (cycle(4), 2)] {
            let v = s_r(&h, r, default_t_max(&h), Budget::DEFAULT).unwrap();
            assert!(v.value + 1 >= r, "{h:?} r={r}");
        }
        assert!(s_r(&Graph::empty(3), 2, 3, Budget::DEFAULT).is_err());
        assert!(s_r(&complete(3), 1, 3, Budget::DEFAULT).is_err());
    }
}
