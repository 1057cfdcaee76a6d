//! Marked graphs of groups: data model, validation, degeneracy, complexity,
//! weighted complexity and reduction.

mod collapse;
mod descriptor;
mod graph;
mod phi;
pub(crate) mod skeleton;

pub use collapse::{collapse_edge, reduce};
pub use descriptor::{
    commutator, commutators, inclusion_index, surface_relator, EdgeKind, EdgeStabilizer, FiniteSpec,
    InclusionIndex, KindTag, RankInfo, StabilizerDescriptor, VertexKind,
};
pub(crate) use descriptor::finite_inclusion_images;
pub use graph::{Edge, End, GraphOfGroups, Vertex};
pub use phi::{PhiRule, PhiTable};
pub use skeleton::{CollapseStep, Skeleton, SkeletonEdge, SkeletonVertex};

#[cfg(test)]
mod tests;
