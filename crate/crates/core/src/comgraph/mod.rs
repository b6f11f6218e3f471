//! Commuting graphs restricted to conjugacy classes and class slices.

mod analysis;
mod bits;
mod cache;
mod component;
mod graph;
mod reps;
mod slice;
pub mod solve;
mod structure;
pub mod validate;

pub use analysis::{
    analyze, clique_cover_number, clique_number, independence_number, ComponentAnalysis,
    CoverFamily, CoverResult, IndependenceResult, Status, DEFAULT_BUDGET, DEFAULT_CLIQUE_LIMIT,
};
pub use bits::Bits;
pub use cache::{export_component, import_component, CacheHeader, CACHE_SCHEMA_VERSION};
pub use component::{component_of, in_class, neighbors_in_class};
pub use graph::{CommutingGraph, VertexSet};
pub use reps::{
    family_reps_2sat, full_reps_search, FamilyCheck, FirstChoiceRun,
    forced_first, noncommuting_reps_search, obstruction_groups, replay, reps_candidates, DeadEnd,
    RepsOptions, RepsOutcome, RepsSearch, RepsTrace, FORCED_FIRST, OBSTRUCTION_GROUPS,
};
pub use slice::{
    max_commuting_subset_in_slice, strict_slice, structural_cover_family, SliceKind, SliceSpec,
};
pub use structure::{verify_2k2kl_structure, StructureOptions, StructureReport};
