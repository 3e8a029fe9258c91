//! Subgroup lattices of the groups `T_{4n} x C_m` (dicyclic by cyclic),
//! closed-form subgroup counts, and the machinery that checks one against
//! the other.
//!
//! The brute-force lattice in [`lattice`] is the reference. The families
//! in [`families`] and the formulas in [`formulas`] are checked against it
//! wherever the group is small enough, and [`errata`] records printed
//! claims that the computations contradict.

pub mod bitset;
pub mod cyclic;
pub mod errata;
pub mod error;
pub mod exec;
pub mod families;
pub mod formulas;
pub mod gap;
pub mod group;
pub mod lattice;
pub mod numtheory;
pub mod sweep;

pub use error::{Error, Hypothesis, Result};
pub use exec::Execution;
pub use group::{GroupElement, GroupSpec};
pub use lattice::{OracleConfig, Subgroup, SubgroupLattice};
