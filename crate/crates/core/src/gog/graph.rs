use std::collections::{HashMap, HashSet};

use super::descriptor::{inclusion_index, EdgeKind, InclusionIndex, VertexKind};
use super::phi::PhiTable;
use super::skeleton::{Skeleton, SkeletonEdge, SkeletonVertex};
use crate::presentation::{free_reduce, valid_identifier, Presentation, Word};
use crate::{rational, Error, Rational, Result};

/// A vertex of the quotient graph. `generators` name the abstract generators
/// of the vertex group; `marking[i]` is a word in the ambient group for
/// generator `i`, giving the copy of the vertex group at its tree position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub kind: VertexKind,
    pub generators: Vec<String>,
    pub marking: Vec<Word>,
    pub phi: Option<Rational>,
}

/// An edge of the quotient graph. The edge group sits inside the source
/// vertex group at its tree position (`marking`), and its conjugate by the
/// stable letter sits inside the target vertex group. Tree edges have the
/// identity as stable letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub source: String,
    pub target: String,
    pub kind: EdgeKind,
    pub generators: Vec<String>,
    pub marking: Vec<Word>,
    pub stable_letter: Word,
    /// Edge generators as words in the source vertex generators.
    pub inclusion_source: Vec<Word>,
    /// Edge generators as words in the target vertex generators.
    pub inclusion_target: Vec<Word>,
}

impl Edge {
    pub fn is_tree_edge(&self) -> bool {
        free_reduce(&self.stable_letter).is_empty()
    }

    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

/// Which end of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum End {
    Source,
    Target,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphOfGroups {
    ambient: Presentation,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    acylindricity_k: Option<u32>,
    edge_rank_bound_n: u32,
    positions: HashMap<String, usize>,
}

impl GraphOfGroups {
    /// Validates and assembles a splitting. The first violated constraint is
    /// reported.
    pub fn new(
        ambient: Presentation,
        vertices: Vec<Vertex>,
        edges: Vec<Edge>,
        acylindricity_k: Option<u32>,
        edge_rank_bound_n: u32,
    ) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Structural("a graph of groups needs at least one vertex".into()));
        }
        if edge_rank_bound_n == 0 {
            return Err(Error::Structural("edge rank bound must be positive".into()));
        }
        let ngens = ambient.generators().len();
        let check_ambient = |what: &str, words: &[Word]| -> Result<()> {
            for w in words {
                if w.max_generator().is_some_and(|m| m >= ngens) {
                    return Err(Error::Structural(format!(
                        "{what} references a generator outside the ambient group"
                    )));
                }
            }
            Ok(())
        };
        let mut positions = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            let here = format!("vertex `{}`", v.id);
            if !valid_identifier(&v.id) {
                return Err(Error::Structural(format!("invalid vertex id `{}`", v.id)));
            }
            if positions.insert(v.id.clone(), i).is_some() {
                return Err(Error::Structural(format!("duplicate vertex id `{}`", v.id)));
            }
            validate_vertex_kind(&v.kind).map_err(|e| prefix(&here, e))?;
            check_names(&here, &v.generators, v.kind.generator_count())?;
            if v.marking.len() != v.generators.len() {
                return Err(Error::Structural(format!(
                    "{here}: {} marking words for {} generators",
                    v.marking.len(),
                    v.generators.len()
                )));
            }
            check_ambient(&here, &v.marking)?;
            if let Some(p) = &v.phi {
                if rational::is_negative(p) {
                    return Err(Error::Structural(format!("{here}: phi must be nonnegative")));
                }
            }
        }
        let mut edge_ids = HashSet::new();
        for e in &edges {
            let here = format!("edge `{}`", e.id);
            if !valid_identifier(&e.id) {
                return Err(Error::Structural(format!("invalid edge id `{}`", e.id)));
            }
            if !edge_ids.insert(e.id.clone()) {
                return Err(Error::Structural(format!("duplicate edge id `{}`", e.id)));
            }
            let s = positions
                .get(&e.source)
                .ok_or_else(|| Error::Structural(format!("{here}: unknown source vertex `{}`", e.source)))?;
            let t = positions
                .get(&e.target)
                .ok_or_else(|| Error::Structural(format!("{here}: unknown target vertex `{}`", e.target)))?;
            if let EdgeKind::Finite(f) = &e.kind {
                if f.group.degree() == 0 && f.order() != 1 {
                    return Err(Error::Structural(format!("{here}: empty finite edge group")));
                }
            }
            if let Some(m) = e.kind.abelian_rank() {
                if m == 0 {
                    return Err(Error::Structural(format!("{here}: abelian rank must be positive")));
                }
                if m > edge_rank_bound_n {
                    return Err(Error::Structural(format!(
                        "{here}: abelian rank {m} exceeds the edge rank bound {edge_rank_bound_n}"
                    )));
                }
            }
            check_names(&here, &e.generators, e.kind.generator_count())?;
            for (what, words) in [
                ("marking", &e.marking),
                ("inclusion_source", &e.inclusion_source),
                ("inclusion_target", &e.inclusion_target),
            ] {
                if words.len() != e.generators.len() {
                    return Err(Error::Structural(format!(
                        "{here}: {} {what} words for {} generators",
                        words.len(),
                        e.generators.len()
                    )));
                }
            }
            check_ambient(&here, &e.marking)?;
            check_ambient(&here, std::slice::from_ref(&e.stable_letter))?;
            for (words, v) in [(&e.inclusion_source, &vertices[*s]), (&e.inclusion_target, &vertices[*t])] {
                for w in words {
                    if w.max_generator().is_some_and(|m| m >= v.generators.len()) {
                        return Err(Error::Structural(format!(
                            "{here}: inclusion word references a generator outside vertex `{}`",
                            v.id
                        )));
                    }
                }
            }
        }
        let g = GraphOfGroups { ambient, vertices, edges, acylindricity_k, edge_rank_bound_n, positions };
        g.check_connected_and_tree()?;
        Ok(g)
    }

    fn check_connected_and_tree(&self) -> Result<()> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in self.edges.iter().filter(|e| e.is_tree_edge()) {
            let (a, b) = (find(&mut parent, self.positions[&e.source]), find(&mut parent, self.positions[&e.target]));
            if a == b {
                return Err(Error::Structural(format!(
                    "edge `{}` has the identity as stable letter but closes a cycle of tree edges",
                    e.id
                )));
            }
            parent[a] = b;
        }
        let tree_components = (0..n).filter(|&x| find(&mut parent, x) == x).count();
        for e in &self.edges {
            let (a, b) = (find(&mut parent, self.positions[&e.source]), find(&mut parent, self.positions[&e.target]));
            parent[a] = b;
        }
        let components = (0..n).filter(|&x| find(&mut parent, x) == x).count();
        if components != 1 {
            return Err(Error::Structural("the underlying graph is disconnected".into()));
        }
        if tree_components != 1 {
            return Err(Error::Structural(
                "edges with identity stable letter do not span the graph; a spanning tree is required".into(),
            ));
        }
        Ok(())
    }

    pub fn ambient(&self) -> &Presentation {
        &self.ambient
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn acylindricity_k(&self) -> Option<u32> {
        self.acylindricity_k
    }

    pub fn edge_rank_bound_n(&self) -> u32 {
        self.edge_rank_bound_n
    }

    pub fn vertex_position(&self, id: &str) -> Option<usize> {
        self.positions.get(id).copied()
    }

    pub fn vertex(&self, id: &str) -> Option<&Vertex> {
        self.vertex_position(id).map(|i| &self.vertices[i])
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn endpoints(&self, e: &Edge) -> (usize, usize) {
        (self.positions[&e.source], self.positions[&e.target])
    }

    /// Index of the edge group in the vertex group at one end.
    pub fn inclusion_index(&self, e: &Edge, end: End) -> Result<InclusionIndex> {
        let (v, words) = match end {
            End::Source => (self.vertex(&e.source).expect("validated"), &e.inclusion_source),
            End::Target => (self.vertex(&e.target).expect("validated"), &e.inclusion_target),
        };
        inclusion_index(&v.kind, &e.kind, words)
            .map_err(|err| prefix(&format!("edge `{}` at vertex `{}`", e.id, v.id), err))
    }

    pub fn skeleton(&self) -> Result<Skeleton> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| SkeletonVertex {
                id: v.id.clone(),
                descriptor: v.kind.descriptor(),
                phi_override: v.phi.clone(),
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let (source, target) = self.endpoints(e);
                Ok(SkeletonEdge {
                    id: e.id.clone(),
                    source,
                    target,
                    stabilizer: e.kind.stabilizer(),
                    source_index: self.inclusion_index(e, End::Source)?,
                    target_index: self.inclusion_index(e, End::Target)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Skeleton { vertices, edges })
    }

    pub fn graph_rank(&self) -> u64 {
        (self.edges.len() + 1 - self.vertices.len()) as u64
    }

    pub fn is_degenerate(&self, vertex_id: &str) -> Result<bool> {
        let v = self
            .vertex_position(vertex_id)
            .ok_or_else(|| Error::Structural(format!("no vertex `{vertex_id}`")))?;
        for e in &self.edges {
            let (s, t) = self.endpoints(e);
            if s == v && self.inclusion_index(e, End::Source)?.is_one() {
                return Ok(true);
            }
            if t == v && self.inclusion_index(e, End::Target)?.is_one() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn complexity(&self) -> Result<u64> {
        self.skeleton()?.complexity()
    }

    pub fn weighted_complexity(&self, phi: &PhiTable) -> Result<Rational> {
        self.skeleton()?.weighted_complexity(phi)
    }

    pub fn is_reduced(&self) -> Result<bool> {
        Ok(self.skeleton()?.is_reduced())
    }

    /// Replaces vertex and edge lists, revalidating.
    pub fn with_parts(&self, vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self> {
        GraphOfGroups::new(self.ambient.clone(), vertices, edges, self.acylindricity_k, self.edge_rank_bound_n)
    }

    pub fn with_meta(&self, acylindricity_k: Option<u32>, edge_rank_bound_n: u32) -> Result<Self> {
        GraphOfGroups::new(
            self.ambient.clone(),
            self.vertices.clone(),
            self.edges.clone(),
            acylindricity_k,
            edge_rank_bound_n,
        )
    }
}

fn validate_vertex_kind(kind: &VertexKind) -> Result<()> {
    match kind {
        VertexKind::FreeRank(0) | VertexKind::FreeAbelianRank(0) => {
            Err(Error::Structural("rank must be positive".into()))
        }
        VertexKind::SurfaceGenus(g) if *g < 2 => Err(Error::Structural("surface genus must be at least 2".into())),
        VertexKind::Opaque { rank_upper: 0, .. } => Err(Error::Structural("opaque rank bound must be positive".into())),
        VertexKind::Opaque { phi, .. } if rational::is_negative(phi) => {
            Err(Error::Structural("opaque phi must be nonnegative".into()))
        }
        _ => Ok(()),
    }
}

fn check_names(here: &str, names: &[String], expected: usize) -> Result<()> {
    if names.len() != expected {
        return Err(Error::Structural(format!(
            "{here}: expected {expected} generator names, got {}",
            names.len()
        )));
    }
    let mut seen = HashSet::new();
    for n in names {
        if !valid_identifier(n) || !seen.insert(n) {
            return Err(Error::Structural(format!("{here}: invalid or repeated generator name `{n}`")));
        }
    }
    Ok(())
}

fn prefix(here: &str, e: Error) -> Error {
    match e {
        Error::Structural(m) => Error::Structural(format!("{here}: {m}")),
        Error::InvalidMarking(m) => Error::InvalidMarking(format!("{here}: {m}")),
        Error::Unsupported(m) => Error::Unsupported(format!("{here}: {m}")),
        other => other,
    }
}
