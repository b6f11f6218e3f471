//! Conjugacy classes, centralizers and abelian-centralizer classification
//! for symmetric and alternating groups.

mod centralizer;
mod classes;
mod classify;
mod overgroups;
mod subgroup;

pub use centralizer::{centralizer_gens, centralizer_order};
pub use classes::{
    class_label_of, class_representative, class_size, classes, splits_in_alt, ClassLabel, Family,
    GroupSpec, SplitTag,
};
pub use classify::{
    classify_classes, lies_in_abelian_centralizer, witness_candidates, AbelianVerdict,
    ClassRecord, Classification, Membership,
};
pub use overgroups::maximal_abelian_overgroups;
pub use subgroup::{close, intersect_with_alt, is_abelian, SubgroupGens};

/// Default closure cap, in elements.
pub const DEFAULT_CAP: usize = 1_000_000;
