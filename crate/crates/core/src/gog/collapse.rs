//! Edge collapse on full graph-of-groups data, rewriting inclusion words.

use std::collections::{HashMap, VecDeque};

use super::descriptor::{finite_inclusion_images, unimodular_inverse, EdgeKind, VertexKind};
use super::graph::{End, GraphOfGroups};
use super::skeleton::CollapseStep;
use crate::permgroup::Perm;
use crate::presentation::Word;
use crate::{Error, Result};

/// Writes every generator of `vertex` as a word in the edge generators,
/// given that the edge group (included by `words`) is the whole vertex group.
fn vertex_generators_in_edge(vertex: &VertexKind, edge: &EdgeKind, words: &[Word]) -> Result<Vec<Word>> {
    match (vertex, edge) {
        (VertexKind::Finite(v), _) => {
            let images = finite_inclusion_images(v, words)?;
            let id = Perm::identity(v.group.degree());
            let mut found: HashMap<Perm, Word> = HashMap::from([(id.clone(), Word::identity())]);
            let mut queue = VecDeque::from([id]);
            while let Some(p) = queue.pop_front() {
                for (j, img) in images.iter().enumerate() {
                    let q = p.then(img);
                    if !found.contains_key(&q) {
                        let w = found[&p].concat(&Word::generator(j));
                        found.insert(q.clone(), w);
                        queue.push_back(q);
                    }
                }
            }
            v.group
                .generators()
                .iter()
                .map(|g| {
                    found.get(g).cloned().ok_or_else(|| {
                        Error::Precondition("edge group is not the whole vertex group".into())
                    })
                })
                .collect()
        }
        (VertexKind::CyclicZ | VertexKind::FreeRank(1) | VertexKind::FreeAbelianRank(1), _) => {
            let e = words[0].exponent_sums(1)[0];
            if e.abs() != 1 {
                return Err(Error::Precondition("edge group is not the whole vertex group".into()));
            }
            Ok(vec![Word::power_of(0, e)])
        }
        (VertexKind::FreeAbelianRank(r), EdgeKind::FreeAbelianRank(m)) if r == m => {
            let rows: Vec<Vec<i64>> = words.iter().map(|w| w.exponent_sums(*r as usize)).collect();
            let inv = unimodular_inverse(&rows)
                .ok_or_else(|| Error::Precondition("edge group is not the whole vertex group".into()))?;
            Ok(inv
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .fold(Word::identity(), |acc, (j, &c)| acc.concat(&Word::power_of(j, c)))
                })
                .collect())
        }
        _ => Err(Error::Precondition("edge group is not the whole vertex group".into())),
    }
}

/// Collapses a tree edge whose group equals an endpoint group. The other
/// endpoint keeps its group and marking; inclusion words of edges that were
/// attached to the absorbed vertex are rewritten in the kept generators.
///
/// Collapsing a non-tree edge would require re-marking the absorbed side by
/// the stable letter and is reported as unsupported.
pub fn collapse_edge(y: &GraphOfGroups, id: &str) -> Result<GraphOfGroups> {
    let e = y.edge(id).ok_or_else(|| Error::Structural(format!("no edge `{id}`")))?;
    if e.is_loop() {
        return Err(Error::Precondition(format!("edge `{id}` is a loop")));
    }
    let (removed, kept, removed_words, kept_words) = if y.inclusion_index(e, End::Source)?.is_one() {
        (&e.source, &e.target, &e.inclusion_source, &e.inclusion_target)
    } else if y.inclusion_index(e, End::Target)?.is_one() {
        (&e.target, &e.source, &e.inclusion_target, &e.inclusion_source)
    } else {
        return Err(Error::Precondition(format!(
            "edge `{id}` is a proper subgroup at both of its ends"
        )));
    };
    if !e.is_tree_edge() {
        return Err(Error::Unsupported(format!(
            "collapsing edge `{id}` with a nontrivial stable letter is not supported"
        )));
    }
    let rv = y.vertex(removed).expect("validated");
    let in_edge = vertex_generators_in_edge(&rv.kind, &e.kind, removed_words)?;
    let rewrite = in_edge
        .iter()
        .map(|w| w.substitute(kept_words))
        .collect::<Result<Vec<_>>>()?;
    let rewrite_all = |ws: &[Word]| ws.iter().map(|w| w.substitute(&rewrite)).collect::<Result<Vec<_>>>();
    let mut edges = Vec::new();
    for f in y.edges().iter().filter(|f| f.id != id) {
        let mut g = f.clone();
        if &f.source == removed {
            g.source = kept.clone();
            g.inclusion_source = rewrite_all(&f.inclusion_source)?;
        }
        if &f.target == removed {
            g.target = kept.clone();
            g.inclusion_target = rewrite_all(&f.inclusion_target)?;
        }
        edges.push(g);
    }
    let vertices = y.vertices().iter().filter(|v| &v.id != removed).cloned().collect();
    y.with_parts(vertices, edges)
}

/// Collapses eligible edges in order of edge id until none remain.
pub fn reduce(y: &GraphOfGroups) -> Result<(GraphOfGroups, Vec<CollapseStep>)> {
    let mut current = y.clone();
    let mut trace = Vec::new();
    loop {
        let skel = current.skeleton()?;
        let Some(e) = skel.edges.iter().filter(|e| e.is_collapsible()).min_by(|a, b| a.id.cmp(&b.id)) else {
            return Ok((current, trace));
        };
        let (removed, kept) = if e.source_index.is_one() { (e.source, e.target) } else { (e.target, e.source) };
        let step_id = e.id.clone();
        let before = skel.complexity()?;
        let next = collapse_edge(&current, &step_id)?;
        let after = next.complexity()?;
        trace.push(CollapseStep {
            edge: step_id,
            removed: skel.vertices[removed].id.clone(),
            kept: skel.vertices[kept].id.clone(),
            complexity_before: before,
            complexity_after: after,
        });
        current = next;
    }
}
