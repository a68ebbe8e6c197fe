//! Symmetry groups of planar n-body choreographies and action minimization
//! over symmetric Fourier loops, with the braid and winding invariants that
//! separate loop-space components.
//!
//! The crate is `no_std` (with `alloc`); enable the `std` feature to get
//! `std::error::Error` integration through `core::error::Error`.
//!
//! Modules:
//!
//! * [`group`]: exact elements of `O(2) x S_n x O(2)_time`, the catalog of
//!   choreography symmetry groups, kernels, lattice, rotating circle and
//!   coercivity checks.
//! * [`fourier`]: truncated Fourier loops, symmetry masks, projection,
//!   trajectory sampling and symmetry residuals.
//! * [`action`]: the n-body action, its gradient, projected steepest descent
//!   and physical diagnostics.
//! * [`topology`]: winding profiles, braid words and exponent sums.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod action;
pub mod fourier;
pub mod group;
pub mod linalg;
pub mod perm;
pub mod topology;
pub mod turn;

pub use action::{
    action, diagnostics, gradient, minimize, ActionError, Diagnostics, Metric, MinimizeOptions,
    MinimizeResult, PotentialSpec,
};
pub use fourier::{
    constraint_mask, invariant_dimension, project, sample_trajectory, symmetry_residual,
    ConstraintMask, FourierError, FourierLoop, Harmonic, Relation, Trajectory,
};
pub use group::{
    build_group, coercivity_check, kernels_and_core, rcc_check, subconjugate, Family,
    GroupElement, GroupError, GroupSpec, Kernels, RccVerdict, SymmetryGroup,
};
pub use perm::Perm;
pub use topology::{
    adjacency_necessary, braid_stats, extract_braid, extract_braid_generic, total_pair_winding,
    winding_about_origin, winding_profile, BraidStats, BraidWord, Letter, TopologyError, WindingProfile,
};
pub use turn::Turn;

/// Complex numbers used for plane positions and Fourier coefficients.
pub type Complex = num_complex::Complex64;
