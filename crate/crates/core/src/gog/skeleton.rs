//! The counting data of a graph of groups: the graph, what is known about
//! each vertex and edge group, and the index of every edge group in its
//! endpoint groups.
//!
//! Complexity, weighted complexity, degeneracy and reduction by edge
//! collapse only depend on this data, so they are implemented here once for
//! both input splittings and induced splittings.

use num_traits::Zero;

use super::descriptor::{EdgeStabilizer, InclusionIndex, StabilizerDescriptor};
use super::phi::PhiTable;
use crate::{rational, Error, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonVertex {
    pub id: String,
    pub descriptor: StabilizerDescriptor,
    pub phi_override: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonEdge {
    pub id: String,
    pub source: usize,
    pub target: usize,
    pub stabilizer: EdgeStabilizer,
    pub source_index: InclusionIndex,
    pub target_index: InclusionIndex,
}

impl SkeletonEdge {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }

    /// Whether the edge group equals the group at either end.
    pub fn is_collapsible(&self) -> bool {
        !self.is_loop() && (self.source_index.is_one() || self.target_index.is_one())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Skeleton {
    pub vertices: Vec<SkeletonVertex>,
    pub edges: Vec<SkeletonEdge>,
}

/// One step of a reduction.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CollapseStep {
    pub edge: String,
    /// The vertex whose group was absorbed.
    pub removed: String,
    /// The vertex that carries the merged group.
    pub kept: String,
    pub complexity_before: u64,
    pub complexity_after: u64,
}

impl Skeleton {
    pub fn vertex_position(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn edge_position(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return false;
        }
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.source].push(e.target);
            adj[e.target].push(e.source);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// `|E| - |V| + 1`, the rank of the fundamental group of the graph.
    pub fn graph_rank(&self) -> Result<u64> {
        if !self.is_connected() {
            return Err(Error::Structural("graph is empty or disconnected".into()));
        }
        Ok((self.edges.len() + 1 - self.vertices.len()) as u64)
    }

    /// A vertex is degenerate when some incident edge group equals it.
    pub fn is_degenerate(&self, v: usize) -> bool {
        self.edges.iter().any(|e| {
            (e.source == v && e.source_index.is_one()) || (e.target == v && e.target_index.is_one())
        })
    }

    pub fn degenerate_flags(&self) -> Vec<bool> {
        let mut flags = vec![false; self.vertices.len()];
        for e in &self.edges {
            if e.source_index.is_one() {
                flags[e.source] = true;
            }
            if e.target_index.is_one() {
                flags[e.target] = true;
            }
        }
        flags
    }

    pub fn nondegenerate_count(&self) -> u64 {
        self.degenerate_flags().iter().filter(|d| !**d).count() as u64
    }

    /// Whether the fundamental group fixes a vertex of the tree: the graph
    /// is a tree and some root makes every edge equal to the group at its
    /// end away from the root.
    pub fn is_elliptic(&self) -> Result<bool> {
        if self.graph_rank()? > 0 {
            return Ok(false);
        }
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.source].push((e.target, e.target_index.is_one(), e.source_index.is_one()));
            adj[e.target].push((e.source, e.source_index.is_one(), e.target_index.is_one()));
        }
        // bad[v]: edges whose far end from root v is a proper inclusion.
        let mut order = vec![0];
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut i = 0;
        let mut root_bad = 0u64;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &(w, far_one, _) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    root_bad += u64::from(!far_one);
                    order.push(w);
                }
            }
        }
        let mut bad = vec![0u64; n];
        bad[0] = root_bad;
        for &v in &order[1..] {
            let p = parent[v];
            let &(_, far_one, near_one) = adj[p].iter().find(|(w, _, _)| *w == v).expect("tree edge");
            bad[v] = bad[p] - u64::from(!far_one) + u64::from(!near_one);
        }
        Ok(bad.contains(&0))
    }

    /// Rank of the graph plus the number of non-degenerate vertices, or 1
    /// when the action is elliptic.
    pub fn complexity(&self) -> Result<u64> {
        if self.is_elliptic()? {
            return Ok(1);
        }
        Ok(self.graph_rank()? + self.nondegenerate_count())
    }

    pub fn vertex_phi(&self, v: usize, phi: &PhiTable) -> Result<Rational> {
        let vx = &self.vertices[v];
        phi.vertex_phi(&vx.descriptor, vx.phi_override.as_ref())
    }

    /// Rank of the graph plus `1 + φ(G_v)` over non-degenerate vertices. The
    /// elliptic case is 1 as for the plain complexity.
    pub fn weighted_complexity(&self, phi: &PhiTable) -> Result<Rational> {
        let rank = self.graph_rank()?;
        if self.is_elliptic()? {
            return Ok(rational::one());
        }
        let mut total = rational::int(rank as i64);
        for (v, degenerate) in self.degenerate_flags().into_iter().enumerate() {
            if !degenerate {
                let p = self.vertex_phi(v, phi)?;
                if rational::is_negative(&p) {
                    return Err(Error::Configuration(format!(
                        "phi of vertex `{}` is negative",
                        self.vertices[v].id
                    )));
                }
                total += rational::one() + p;
            }
        }
        Ok(total)
    }

    /// No non-loop edge group equals an endpoint group.
    pub fn is_reduced(&self) -> bool {
        !self.edges.iter().any(SkeletonEdge::is_collapsible)
    }

    /// Collapses a non-loop edge whose group equals one of its endpoint
    /// groups. The other endpoint survives with its group; when both ends
    /// qualify the target survives.
    pub fn collapse_edge(&self, id: &str) -> Result<Skeleton> {
        let pos = self
            .edge_position(id)
            .ok_or_else(|| Error::Structural(format!("no edge `{id}`")))?;
        let e = &self.edges[pos];
        if e.is_loop() {
            return Err(Error::Precondition(format!("edge `{id}` is a loop")));
        }
        let (removed, kept, kept_index) = if e.source_index.is_one() {
            (e.source, e.target, e.target_index)
        } else if e.target_index.is_one() {
            (e.target, e.source, e.source_index)
        } else {
            return Err(Error::Precondition(format!(
                "edge `{id}` is a proper subgroup at both of its ends"
            )));
        };
        let renumber = |v: usize| {
            let v = if v == removed { kept } else { v };
            if v > removed { v - 1 } else { v }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != pos)
            .map(|(_, f)| {
                let mut g = f.clone();
                if f.source == removed {
                    g.source_index = kept_index.compose(f.source_index);
                }
                if f.target == removed {
                    g.target_index = kept_index.compose(f.target_index);
                }
                g.source = renumber(f.source);
                g.target = renumber(f.target);
                g
            })
            .collect();
        let vertices = self
            .vertices
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != removed)
            .map(|(_, v)| v.clone())
            .collect();
        Ok(Skeleton { vertices, edges })
    }

    /// Collapses eligible edges, always taking the smallest edge id, until
    /// the skeleton is reduced.
    pub fn reduce(&self) -> Result<(Skeleton, Vec<CollapseStep>)> {
        let mut current = self.clone();
        let mut trace = Vec::new();
        loop {
            let Some(e) = current
                .edges
                .iter()
                .filter(|e| e.is_collapsible())
                .min_by(|a, b| a.id.cmp(&b.id))
            else {
                return Ok((current, trace));
            };
            let id = e.id.clone();
            let (removed, kept) = if e.source_index.is_one() {
                (e.source, e.target)
            } else {
                (e.target, e.source)
            };
            let removed = current.vertices[removed].id.clone();
            let kept = current.vertices[kept].id.clone();
            let before = current.complexity()?;
            let next = current.collapse_edge(&id)?;
            let after = next.complexity()?;
            if after < before || after > before + 1 {
                return Err(Error::Structural(format!(
                    "collapsing `{id}` changed complexity from {before} to {after}"
                )));
            }
            trace.push(CollapseStep {
                edge: id,
                removed,
                kept,
                complexity_before: before,
                complexity_after: after,
            });
            current = next;
        }
    }

    /// Sum of φ over all vertices; used by weighted bounds.
    pub fn total_phi(&self, phi: &PhiTable) -> Result<Rational> {
        let mut s = Rational::zero();
        for v in 0..self.vertices.len() {
            s += self.vertex_phi(v, phi)?;
        }
        Ok(s)
    }
}
