//! Finite quotients of a presented group: homomorphism enumeration, the
//! catalog of normal subgroups of bounded index and its descending chain.

mod catalog;
mod lowindex;
mod quotient;

pub use catalog::{
    cyclic_quotients, descending_chain, descending_chain_partial, normal_subgroups,
    normal_subgroups_by_enumeration, CatalogKind, ChainStep, SubgroupCatalog,
};
pub use lowindex::normal_coset_actions;
pub use quotient::{
    enumerate_homs, factors_through, is_torsion_free_kernel, kernels_equal, marking_images, FiniteQuotient,
};
