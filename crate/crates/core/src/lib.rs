//! Complexity and volume computations for graph-of-groups splittings.
//!
//! The crate is organised bottom-up:
//!
//! - [`presentation`]: words, finite presentations and evaluation of words in
//!   finite permutation groups.
//! - [`permgroup`]: explicit permutation groups, subgroups, coset spaces and
//!   kernels of restricted maps.
//! - [`gog`]: the marked graph-of-groups data model, degeneracy, complexity,
//!   weighted complexity and reduction by edge collapse.
//! - [`enumeration`]: homomorphism enumeration, the catalog of normal
//!   subgroups of bounded index and its descending chain.
//! - [`covering`]: the induced splitting of a finite-index normal subgroup.
//! - [`volumes`]: closed-form volumes, the volume estimator and the
//!   inequality checks.
//! - [`interface`]: the input document format, built-in examples, reports and
//!   the command runner behind the `ggvol` binary.

pub mod covering;
pub mod enumeration;
mod error;
pub mod gog;
pub mod interface;
pub mod permgroup;
pub mod presentation;
pub mod rational;
pub mod volumes;

pub use error::{Error, Result};
pub use rational::Rational;

/// Resource limits shared by every computation that enumerates elements or
/// candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of elements produced by any permutation group closure.
    pub closure: usize,
    /// Maximum number of image tuples tried by brute-force homomorphism
    /// enumeration.
    pub candidates: u64,
    /// Maximum order of the image of a diagonal (product) quotient map.
    pub product: usize,
    /// Maximum number of nodes visited by the coset-table search.
    pub search_nodes: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            closure: 1_000_000,
            candidates: 20_000_000,
            product: 200_000,
            search_nodes: 50_000_000,
        }
    }
}
