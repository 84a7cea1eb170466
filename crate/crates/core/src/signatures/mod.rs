//! Spans, the island partition and constructive signature collections:
//! families of `q`-edge sets such that every subgraph of minimum degree at
//! least `r` contains one of them.

mod collection;
mod island;
mod span;

pub use collection::{
    build_sufficient_collection, build_weak_collection, find_uncovered, min_degree_vertex,
    probe_collection, union_bound_check, verify_collection, FnPicker, Pick, Picker, PickerBounds,
    ProbeReport, SignatureCollection, UnionBoundReport, WeakPicker, EXACT_MAX_MEMBERS,
    EXHAUSTIVE_MAX_EDGES,
};
pub use island::{island_degree_formula, island_partition, island_violations, IslandOutcome, IslandResult, IslandRound};
pub use span::{is_r_adherent, minimal_span, SpanResult};
