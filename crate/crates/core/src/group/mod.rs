//! The group `O(2) × S_n × Ŝ¹` and the catalog of choreography symmetry groups.

use alloc::string::String;

mod build;
mod coercivity;
mod element;
mod kernels;
mod lattice;
mod rcc;
mod spec;

pub use build::{build_group, SymmetryGroup, CLOSURE_LIMIT};
pub use coercivity::{coercivity_check, fixed_dimension};
pub use element::GroupElement;
pub use kernels::{core_generator, kernels_and_core, Kernels, Subgroup};
pub use lattice::subconjugate;
pub use rcc::{rcc_check, RccVerdict};
pub use spec::{Family, GroupSpec};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("elements act on different particle counts ({left} vs {right})")]
    MismatchedN { left: usize, right: usize },
    #[error("invalid group: {0}")]
    InvalidSpec(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("D(n,inf/l) is a continuous group; no element enumeration")]
    InfiniteGroup,
    #[error("closure exceeded {limit} elements")]
    ClosureOverflow { limit: usize },
}
