//! Probabilistic generation of finite simple and almost simple permutation
//! groups.
//!
//! The crate computes, from permutation generators and explicit lists of
//! maximal subgroups, the exact quantities used to bound the (uniform) spread
//! of a group: permutation characters, the estimates `sigma(g, s)`, exact
//! nongeneration proportions `P(g, s)`, fixed-point-ratio bounds, and
//! randomized certificates that a class of elements has uniform spread `k`.
//!
//! Module map:
//! - [`perm`], [`chain`], [`group`], [`orbit`], [`coset`]: permutations,
//!   Schreier-Sims chains, orbits, stabilizers and coset actions.
//! - [`classes`]: conjugacy classes, centralizers, power maps.
//! - [`subgroups`]: Sylow subgroups, normalizers, double cosets.
//! - [`probgen`]: characters, sigma, nongeneration, spread certificates.
//! - [`catalog`]: the bundled group catalog and its text format.

pub mod catalog;
pub mod chain;
pub mod classes;
pub mod coset;
pub mod error;
pub mod group;
pub mod orbit;
pub mod perm;
pub mod probgen;
pub mod random;
pub mod subgroups;

pub use classes::{ClassLabel, ClassList, ConjugacyClass};
pub use coset::{ActionImage, CosetSpace, Limits};
pub use error::{Error, Result};
pub use group::PermGroup;
pub use perm::Permutation;
