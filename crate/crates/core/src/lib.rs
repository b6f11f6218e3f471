//! Exact computations on commuting graphs of symmetric and alternating
//! groups: abelian-centralizer classification of conjugacy classes,
//! connected components of class-restricted commuting graphs, and certified
//! independence and clique-cover numbers.

pub mod comgraph;
pub mod error;
pub mod groups;
pub mod perm;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{CycleType, Parity, Permutation};
