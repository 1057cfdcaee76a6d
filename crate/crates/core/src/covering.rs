//! The splitting induced on the kernel of a finite quotient.
//!
//! For `H = ker(q)` normal in `G`, the vertices of the quotient graph lying
//! over a base vertex `u` are the cosets of `q(G_u)` in `Q`, and the edges over
//! a base edge `e` are the cosets of `q(G_e)`. The edge coset `x q(G_e)`
//! starts at `x q(G_u)` and ends at `x q(t_e) q(G_w)`, where `t_e` is the stable
//! letter of `e`.

use num_traits::{One, Zero};

use crate::enumeration::{is_torsion_free_kernel, marking_images, FiniteQuotient};
use crate::gog::{
    finite_inclusion_images, EdgeKind, EdgeStabilizer, End, GraphOfGroups, InclusionIndex, PhiTable,
    Skeleton, SkeletonEdge, SkeletonVertex, StabilizerDescriptor, VertexKind,
};
use crate::permgroup::{coset_space, restricted_kernel, subgroup_generated, Perm, SubgroupRef};
use crate::presentation::{evaluate_in, format_word, Word};
use crate::{rational, Error, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedVertex {
    pub id: String,
    pub base: String,
    /// Minimal element of the coset in `Q`.
    pub representative: Perm,
    /// `|q(G_u)|`, the index of the stabilizer in the base vertex group.
    pub stabilizer_index: u64,
    pub descriptor: StabilizerDescriptor,
    pub phi_override: Option<Rational>,
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedEdge {
    pub id: String,
    pub base: String,
    pub representative: Perm,
    /// `|q(G_e)|`.
    pub stabilizer_index: u64,
    pub source: usize,
    pub target: usize,
    pub stabilizer: EdgeStabilizer,
    pub source_index: InclusionIndex,
    pub target_index: InclusionIndex,
}

/// Per base vertex data shared by all of its lifts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseVertexInfo {
    pub id: String,
    pub image_order: u64,
    pub lifts: usize,
    /// Degenerate in the base splitting.
    pub g_degenerate: bool,
    /// Its lifts are degenerate in the induced splitting.
    pub h_degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseEdgeInfo {
    pub id: String,
    pub source: usize,
    pub target: usize,
    pub image_order: u64,
    pub lifts: usize,
    pub g_index: (InclusionIndex, InclusionIndex),
    pub h_index: (InclusionIndex, InclusionIndex),
}

#[derive(Debug, Clone)]
pub struct InducedSplitting {
    pub quotient_id: String,
    /// `[G : H] = |Q|`.
    pub index: u64,
    pub vertices: Vec<InducedVertex>,
    pub edges: Vec<InducedEdge>,
    pub base_vertices: Vec<BaseVertexInfo>,
    pub base_edges: Vec<BaseEdgeInfo>,
    pub base_reduced: bool,
    /// Kernel is torsion-free, when that is decidable for the base kinds.
    pub torsion_free: Option<bool>,
    /// Every base edge group is finite (or trivial).
    pub finite_edges: bool,
    pub acylindricity_k: Option<u32>,
    pub edge_rank_bound_n: u32,
    /// Generator count of the ambient presentation.
    pub ambient_generators: usize,
}

fn invalid_relator(what: &str, names: &[String], r: &Word, qid: &str) -> Error {
    Error::InvalidMarking(format!(
        "relator `{}` of {what} does not hold in quotient `{qid}`",
        format_word(r, names)
    ))
}

/// `idx_G * |q(G_e)| / |q(G_v)|`, the index of `G_e ∩ H` in `G_v ∩ H`.
fn lift_index(g_index: InclusionIndex, edge_image: u64, vertex_image: u64) -> Result<InclusionIndex> {
    match g_index {
        InclusionIndex::Infinite => Ok(InclusionIndex::Infinite),
        InclusionIndex::Finite(i) => {
            let num = i * edge_image;
            if !num.is_multiple_of(vertex_image) {
                return Err(Error::InvalidMarking(format!(
                    "stabilizer indices {i}, {edge_image}, {vertex_image} are inconsistent"
                )));
            }
            Ok(InclusionIndex::Finite(num / vertex_image))
        }
    }
}

fn padded(base: &str, k: usize, count: usize) -> String {
    let width = count.saturating_sub(1).to_string().len();
    format!("{base}.{k:0width$}")
}

/// Builds the induced splitting of `ker(q)`, verifying inside `Q` that the
/// markings are consistent with the abstract vertex and edge groups.
pub fn induce(y: &GraphOfGroups, q: &FiniteQuotient) -> Result<InducedSplitting> {
    if q.map().source() != y.ambient() {
        return Err(Error::Precondition(format!(
            "quotient `{}` is defined on a different presentation",
            q.id()
        )));
    }
    let qg = q.image();
    let degree = q.map().degree();
    let qid = q.id();
    let base = y.skeleton()?;
    let base_flags = base.degenerate_flags();

    // vertex images and stabilizer data
    let mut vimages: Vec<Vec<Perm>> = Vec::new();
    let mut vsubs: Vec<SubgroupRef<'_>> = Vec::new();
    let mut vdesc: Vec<StabilizerDescriptor> = Vec::new();
    for v in y.vertices() {
        let images = marking_images(q, &v.marking)?;
        for r in v.kind.abstract_relators() {
            if !evaluate_in(&images, degree, &r)?.is_identity() {
                return Err(invalid_relator(&format!("vertex `{}`", v.id), &v.generators, &r, qid));
            }
        }
        let sub = subgroup_generated(qg, &images)?;
        let image_order = sub.order() as u64;
        let desc = match &v.kind {
            VertexKind::Finite(f) => {
                let rk = restricted_kernel(&f.group, &images, degree).map_err(|_| {
                    Error::InvalidMarking(format!(
                        "marking of vertex `{}` is not a homomorphism into quotient `{qid}`",
                        v.id
                    ))
                })?;
                debug_assert_eq!(rk.image_order as u64, image_order);
                let k = rk.kernel.to_group();
                StabilizerDescriptor::Finite { order: k.order() as u64, rank: k.min_generators() as u64 }
            }
            other => other.descriptor().lift_infinite(image_order),
        };
        vimages.push(images);
        vsubs.push(sub);
        vdesc.push(desc);
    }

    // edges
    let mut esubs: Vec<SubgroupRef<'_>> = Vec::new();
    let mut estab: Vec<EdgeStabilizer> = Vec::new();
    let mut stable: Vec<Perm> = Vec::new();
    let mut base_edges = Vec::new();
    for (k, e) in y.edges().iter().enumerate() {
        let here = format!("edge `{}`", e.id);
        let (s, t) = y.endpoints(e);
        let images = marking_images(q, &e.marking)?;
        for r in e.kind.abstract_relators() {
            if !evaluate_in(&images, degree, &r)?.is_identity() {
                return Err(invalid_relator(&here, &e.generators, &r, qid));
            }
        }
        let tq = q.evaluate(&e.stable_letter)?;
        let tinv = tq.inverse();
        for (j, img) in images.iter().enumerate() {
            let at_source = evaluate_in(&vimages[s], degree, &e.inclusion_source[j])?;
            if *img != at_source {
                return Err(Error::InvalidMarking(format!(
                    "{here}: marking of generator `{}` disagrees with its inclusion at the source in quotient `{qid}`",
                    e.generators[j]
                )));
            }
            let at_target = evaluate_in(&vimages[t], degree, &e.inclusion_target[j])?;
            if tinv.then(img).then(&tq) != at_target {
                return Err(Error::InvalidMarking(format!(
                    "{here}: conjugated marking of generator `{}` disagrees with its inclusion at the target in quotient `{qid}`",
                    e.generators[j]
                )));
            }
        }
        let sub = subgroup_generated(qg, &images)?;
        let image_order = sub.order() as u64;
        let stab = match &e.kind {
            EdgeKind::Finite(f) => {
                let rk = restricted_kernel(&f.group, &images, degree)?;
                let kg = rk.kernel.to_group();
                if kg.order() == 1 {
                    EdgeStabilizer::Trivial
                } else {
                    EdgeStabilizer::Finite {
                        order: kg.order() as u64,
                        rank: kg.min_generators() as u64,
                        abelian: kg
                            .generators()
                            .iter()
                            .all(|a| kg.generators().iter().all(|b| a.then(b) == b.then(a))),
                    }
                }
            }
            other => other.stabilizer(),
        };
        let g_index = (base.edges[k].source_index, base.edges[k].target_index);
        let h_index = (
            lift_index(g_index.0, image_order, vsubs[s].order() as u64)?,
            lift_index(g_index.1, image_order, vsubs[t].order() as u64)?,
        );
        // kernel containment cross-check at finite ends
        for (end, vpos, hidx) in [(End::Source, s, h_index.0), (End::Target, t, h_index.1)] {
            let v = &y.vertices()[vpos];
            if let VertexKind::Finite(f) = &v.kind {
                let words = match end {
                    End::Source => &e.inclusion_source,
                    End::Target => &e.inclusion_target,
                };
                let incl = subgroup_generated(&f.group, &finite_inclusion_images(f, words)?)?;
                let rk = restricted_kernel(&f.group, &vimages[vpos], degree)?;
                if rk.kernel.is_subset_of(&incl) != hidx.is_one() {
                    return Err(Error::Structural(format!(
                        "{here}: kernel containment and index computation disagree at `{}`",
                        v.id
                    )));
                }
            }
        }
        base_edges.push(BaseEdgeInfo {
            id: e.id.clone(),
            source: s,
            target: t,
            image_order,
            lifts: 0,
            g_index,
            h_index,
        });
        esubs.push(sub);
        estab.push(stab);
        stable.push(tq);
    }

    // cosets
    let mut vertices = Vec::new();
    let mut offsets = Vec::new();
    let mut vspaces = Vec::new();
    let mut base_vertices = Vec::new();
    for (i, v) in y.vertices().iter().enumerate() {
        let cs = coset_space(qg, &vsubs[i]);
        offsets.push(vertices.len());
        let phi_override = v.phi.as_ref().map(|p| p * Rational::from_integer((vsubs[i].order() as i64).into()));
        for (k, c) in cs.cosets.iter().enumerate() {
            vertices.push(InducedVertex {
                id: padded(&v.id, k, cs.len()),
                base: v.id.clone(),
                representative: qg.element(c.representative).clone(),
                stabilizer_index: vsubs[i].order() as u64,
                descriptor: vdesc[i].clone(),
                phi_override: phi_override.clone(),
                degenerate: false,
            });
        }
        base_vertices.push(BaseVertexInfo {
            id: v.id.clone(),
            image_order: vsubs[i].order() as u64,
            lifts: cs.len(),
            g_degenerate: base_flags[i],
            h_degenerate: false,
        });
        vspaces.push(cs);
    }
    let mut edges = Vec::new();
    for (k, e) in y.edges().iter().enumerate() {
        let info = &mut base_edges[k];
        let cs = coset_space(qg, &esubs[k]);
        info.lifts = cs.len();
        for (j, c) in cs.cosets.iter().enumerate() {
            let x = qg.element(c.representative);
            let xt = qg.index_of(&x.then(&stable[k])).expect("stable letter image lies in Q");
            edges.push(InducedEdge {
                id: padded(&e.id, j, cs.len()),
                base: e.id.clone(),
                representative: x.clone(),
                stabilizer_index: info.image_order,
                source: offsets[info.source] + vspaces[info.source].coset_of[c.representative],
                target: offsets[info.target] + vspaces[info.target].coset_of[xt],
                stabilizer: estab[k].clone(),
                source_index: info.h_index.0,
                target_index: info.h_index.1,
            });
        }
    }
    let mut s = InducedSplitting {
        quotient_id: qid.to_string(),
        index: qg.order() as u64,
        vertices,
        edges,
        base_vertices,
        base_edges,
        base_reduced: base.is_reduced(),
        torsion_free: is_torsion_free_kernel(y, q).ok(),
        finite_edges: y.edges().iter().all(|e| matches!(e.kind, EdgeKind::Trivial | EdgeKind::Finite(_))),
        acylindricity_k: y.acylindricity_k(),
        edge_rank_bound_n: y.edge_rank_bound_n(),
        ambient_generators: y.ambient().generators().len(),
    };
    let flags = s.skeleton().degenerate_flags();
    for (v, f) in s.vertices.iter_mut().zip(&flags) {
        v.degenerate = *f;
    }
    for (i, b) in s.base_vertices.iter_mut().enumerate() {
        b.h_degenerate = flags[offsets[i]];
    }
    if !s.skeleton().is_connected() {
        return Err(Error::Structural(format!("induced splitting for `{qid}` is disconnected")));
    }
    Ok(s)
}

impl InducedSplitting {
    pub fn skeleton(&self) -> Skeleton {
        Skeleton {
            vertices: self
                .vertices
                .iter()
                .map(|v| SkeletonVertex {
                    id: v.id.clone(),
                    descriptor: v.descriptor.clone(),
                    phi_override: v.phi_override.clone(),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| SkeletonEdge {
                    id: e.id.clone(),
                    source: e.source,
                    target: e.target,
                    stabilizer: e.stabilizer.clone(),
                    source_index: e.source_index,
                    target_index: e.target_index,
                })
                .collect(),
        }
    }

    pub fn graph_rank(&self) -> u64 {
        (self.edges.len() + 1 - self.vertices.len()) as u64
    }

    pub fn complexity(&self) -> Result<u64> {
        self.skeleton().complexity()
    }

    pub fn weighted_complexity(&self, phi: &PhiTable) -> Result<Rational> {
        self.skeleton().weighted_complexity(phi)
    }

    pub fn vertex_phis(&self, phi: &PhiTable) -> Result<Vec<Rational>> {
        self.vertices
            .iter()
            .map(|v| phi.vertex_phi(&v.descriptor, v.phi_override.as_ref()))
            .collect()
    }
}

/// Degeneracy is the same for all lifts of a base vertex.
pub fn degeneracy_count_check(s: &InducedSplitting) -> bool {
    s.base_vertices.iter().all(|b| {
        let mut flags = s.vertices.iter().filter(|v| v.base == b.id).map(|v| v.degenerate);
        let first = flags.next();
        flags.all(|f| Some(f) == first)
    })
}

/// Lift counts: `|Q| / |q(G_u)|` over each base vertex and `|Q| / |q(G_e)|`
/// over each base edge.
pub fn coset_counts_check(s: &InducedSplitting) -> bool {
    let vertex_ok = s.base_vertices.iter().all(|b| {
        let count = s.vertices.iter().filter(|v| v.base == b.id).count();
        count as u64 * b.image_order == s.index && count == b.lifts
    });
    let edge_ok = s.base_edges.iter().all(|b| {
        let count = s.edges.iter().filter(|e| e.base == b.id).count();
        count as u64 * b.image_order == s.index && count == b.lifts
    });
    vertex_ok && edge_ok
}

/// `r + |V_ndeg| - 1 = Σ_e [G:H]/|G_e| - Σ_{finite v} [G:H]/|G_v|` over
/// `X/H` for torsion-free kernels of splittings with finite edge groups. The
/// count is taken without the elliptic convention.
pub fn euler_consistency_check(y: &GraphOfGroups, s: &InducedSplitting) -> Result<bool> {
    if !s.finite_edges {
        return Err(Error::Inapplicable("some edge group is infinite".into()));
    }
    if y.edges().is_empty() {
        return Err(Error::Inapplicable("the splitting has no edges".into()));
    }
    match s.torsion_free {
        Some(true) => {}
        Some(false) => return Err(Error::Inapplicable("the kernel has torsion".into())),
        None => return Err(Error::Inapplicable("torsion of the kernel is undecided".into())),
    }
    let index = Rational::from_integer((s.index as i64).into());
    let mut rhs = Rational::zero();
    for e in y.edges() {
        let order = match &e.kind {
            EdgeKind::Finite(f) => f.order(),
            _ => 1,
        };
        rhs += &index / Rational::from_integer((order as i64).into());
    }
    for v in y.vertices() {
        if let VertexKind::Finite(f) = &v.kind {
            rhs -= &index / Rational::from_integer((f.order() as i64).into());
        }
    }
    let k = s.skeleton();
    let lhs = rational::int((k.graph_rank()? + k.nondegenerate_count()) as i64) - Rational::one();
    Ok(lhs == rhs)
}

/// One term of the edge sum, with the vertices assigned to the edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeTerm {
    pub edge: String,
    pub value: Rational,
    pub assigned: Vec<String>,
    /// A zero value is allowed only for a loop at a vertex degenerate in the
    /// base, or when both containments have index two.
    pub zero_allowed: bool,
}

impl EdgeTerm {
    pub fn ok(&self) -> bool {
        !rational::is_negative(&self.value) && (!self.value.is_zero() || self.zero_allowed)
    }
}

/// The terms `A_e = 1/|q(G_e)| - Σ_{v ∈ ψ⁻¹(e)} 1/|q(G_v)|`, where `ψ` sends each
/// vertex whose lifts are degenerate to its first witnessing edge by id.
pub fn edge_terms_check(s: &InducedSplitting) -> Result<Vec<EdgeTerm>> {
    if !s.base_reduced {
        return Err(Error::Precondition("the base splitting is not reduced".into()));
    }
    let mut assigned: Vec<Vec<usize>> = vec![Vec::new(); s.base_edges.len()];
    for (v, b) in s.base_vertices.iter().enumerate() {
        if !b.h_degenerate {
            continue;
        }
        let witness = s
            .base_edges
            .iter()
            .enumerate()
            .filter(|(_, e)| (e.source == v && e.h_index.0.is_one()) || (e.target == v && e.h_index.1.is_one()))
            .min_by(|a, b| a.1.id.cmp(&b.1.id))
            .map(|(i, _)| i)
            .ok_or_else(|| Error::Structural(format!("degenerate vertex `{}` has no witness", b.id)))?;
        assigned[witness].push(v);
    }
    Ok(s.base_edges
        .iter()
        .zip(assigned)
        .map(|(e, vs)| {
            let mut value = rational::frac(1, e.image_order as i64);
            for &v in &vs {
                value -= rational::frac(1, s.base_vertices[v].image_order as i64);
            }
            let is_loop = e.source == e.target;
            let zero_allowed = (is_loop && s.base_vertices[e.source].g_degenerate)
                || (e.g_index.0 == InclusionIndex::Finite(2) && e.g_index.1 == InclusionIndex::Finite(2));
            EdgeTerm {
                edge: e.id.clone(),
                value,
                assigned: vs.iter().map(|&v| s.base_vertices[v].id.clone()).collect(),
                zero_allowed,
            }
        })
        .collect())
}
