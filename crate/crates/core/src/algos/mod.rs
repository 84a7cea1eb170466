//! Property deciders: degeneracy and cores, exact (list) colouring,
//! regular subgraphs, maximum average degree and clique counts.
//!
//! Exponential searches take a [`Budget`] of search nodes. Running out is
//! reported as [`Decision::Undecided`] and never folded into yes/no.

mod coloring;
mod degeneracy;
mod density;
mod regular;

pub use coloring::{
    chromatic_feasible, choosable, list_color_feasible, ListAssignment, CHOOSABLE_MAX_N,
    CHOOSABLE_MAX_R,
};
pub use degeneracy::{
    core, core_subgraph, degeneracy, greedy_color_from_degeneracy, is_in_dr, DegeneracyResult,
};
pub use density::{
    count_cliques, generalized_binomial, max_average_degree, max_average_degree_brute_force,
};
pub use regular::has_r_regular_subgraph;

use serde::Serialize;

/// Outcome of a budgeted yes/no search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
    Undecided,
}

impl Decision {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }

    /// `Some(answer)` when the search finished.
    pub fn known(self) -> Option<bool> {
        match self {
            Decision::Yes => Some(true),
            Decision::No => Some(false),
            Decision::Undecided => None,
        }
    }

    pub fn negate(self) -> Self {
        match self {
            Decision::Yes => Decision::No,
            Decision::No => Decision::Yes,
            Decision::Undecided => Decision::Undecided,
        }
    }
}

/// Outcome of a budgeted search that returns a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    Absent,
    Undecided,
}

impl<T> Search<T> {
    pub fn decision(&self) -> Decision {
        match self {
            Search::Found(_) => Decision::Yes,
            Search::Absent => Decision::No,
            Search::Undecided => Decision::Undecided,
        }
    }

    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::Absent => Search::Absent,
            Search::Undecided => Search::Undecided,
        }
    }
}

/// Maximum number of search nodes a single call may expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(20_000_000);

    pub fn unlimited() -> Self {
        Budget(u64::MAX)
    }

    pub(crate) fn meter(self) -> Meter {
        Meter { left: self.0 }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Marker for an exhausted budget, propagated with `?` inside searches.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Exhausted;

#[derive(Debug)]
pub(crate) struct Meter {
    left: u64,
}

impl Meter {
    pub(crate) fn tick(&mut self) -> Result<(), Exhausted> {
        if self.left == 0 {
            return Err(Exhausted);
        }
        self.left -= 1;
        Ok(())
    }
}

/// Calls `f` on every `k`-subset of `items` in lexicographic order of
/// positions. `f` returns `false` to stop early; the return value reports
/// whether the enumeration ran to completion.
pub(crate) fn for_each_combination<T: Copy>(
    items: &[T],
    k: usize,
    mut f: impl FnMut(&[T]) -> bool,
) -> bool {
    if k > items.len() {
        return true;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf: Vec<T> = Vec::with_capacity(k);
    loop {
        buf.clear();
        buf.extend(idx.iter().map(|&i| items[i]));
        if !f(&buf) {
            return false;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < i + items.len() - k) else {
            return true;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `binom(n, k)` in `u128`, saturating.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
    }
    acc
}
