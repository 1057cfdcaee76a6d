//! The declarative TOML input format and its canonical serialization.
//!
//! ```toml
//! [group]
//! generators = ["a", "b"]
//! relators = ["a^2", "b^3"]
//!
//! [[vertices]]
//! id = "v1"
//! kind = "finite"
//! generators = ["g"]
//! marking = ["a"]
//! degree = 2
//! perms = ["(0 1)"]
//! relators = ["g^2"]
//!
//! [[edges]]
//! id = "e1"
//! source = "v1"
//! target = "v2"
//! kind = "trivial"
//!
//! [meta]
//! acylindricity_k = 0
//! edge_rank_bound_n = 1
//! ```
//!
//! Vertex kinds are `finite`, `free` (`rank`), `free_abelian` (`rank`),
//! `cyclic_z`, `surface` (`genus`) and `opaque` (`opaque_phi`, `one_ended`); the
//! generator count of an opaque vertex bounds its rank. Any vertex may carry
//! `phi`, which overrides the table value. Edge
//! kinds are `trivial`, `finite`, `cyclic_z` and `free_abelian` (`rank`).
//! Words are whitespace-separated tokens `x`, `x^-1`, `x^3`; the empty string
//! is the identity. Rationals are strings such as `"1/3"`.

use serde::{Deserialize, Serialize};

use crate::gog::{Edge, EdgeKind, FiniteSpec, GraphOfGroups, Vertex, VertexKind};
use crate::permgroup::{close, Perm};
use crate::presentation::{format_word, parse_word, Presentation, Word};
use crate::{rational, Caps, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DocGroup {
    generators: Vec<String>,
    #[serde(default)]
    relators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DocVertex {
    id: String,
    kind: String,
    #[serde(default)]
    generators: Vec<String>,
    #[serde(default)]
    marking: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rank: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    genus: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    perms: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    relators: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    one_ended: Option<bool>,
    /// Declared φ of an opaque group.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    opaque_phi: Option<String>,
    /// Override of the table value.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    phi: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DocEdge {
    id: String,
    source: String,
    target: String,
    kind: String,
    #[serde(default)]
    generators: Vec<String>,
    #[serde(default)]
    marking: Vec<String>,
    #[serde(default)]
    stable_letter: String,
    #[serde(default)]
    inclusion_source: Vec<String>,
    #[serde(default)]
    inclusion_target: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rank: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    perms: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    relators: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DocMeta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    acylindricity_k: Option<u32>,
    edge_rank_bound_n: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    group: DocGroup,
    vertices: Vec<DocVertex>,
    #[serde(default)]
    edges: Vec<DocEdge>,
    meta: DocMeta,
}

fn line_col(text: &str, offset: usize) -> String {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rfind('\n').map_or(before.len(), |p| before.len() - p - 1) + 1;
    format!("line {line}, column {col}")
}

fn words(loc: &str, texts: &[String], names: &[String]) -> Result<Vec<Word>> {
    texts
        .iter()
        .enumerate()
        .map(|(i, t)| parse_word(t, names).map_err(|e| relocate(e, &format!("{loc}[{i}]"))))
        .collect()
}

fn relocate(e: Error, loc: &str) -> Error {
    match e {
        Error::Parse { location, message } => Error::Parse { location: format!("{loc}: {location}"), message },
        Error::Structural(m) => Error::Parse { location: loc.to_string(), message: m },
        other => other,
    }
}

fn missing(loc: &str, field: &str) -> Error {
    Error::parse(loc.to_string(), format!("missing field `{field}`"))
}

fn finite_spec(
    loc: &str,
    degree: Option<usize>,
    perms: &Option<Vec<String>>,
    relators: &Option<Vec<String>>,
    names: &[String],
    caps: &Caps,
) -> Result<FiniteSpec> {
    let degree = degree.ok_or_else(|| missing(loc, "degree"))?;
    if degree == 0 {
        return Err(Error::parse(format!("{loc}.degree"), "degree must be positive"));
    }
    let perms = perms.as_ref().ok_or_else(|| missing(loc, "perms"))?;
    let gens = perms
        .iter()
        .enumerate()
        .map(|(i, p)| Perm::parse(degree, p).map_err(|e| relocate(e, &format!("{loc}.perms[{i}]"))))
        .collect::<Result<Vec<_>>>()?;
    let rel = words(&format!("{loc}.relators"), relators.as_deref().unwrap_or(&[]), names)?;
    let group = close(degree, gens, caps)?;
    FiniteSpec::new(group, rel, names).map_err(|e| relocate(e, loc))
}

fn no_extra(loc: &str, present: &[(&str, bool)]) -> Result<()> {
    match present.iter().find(|(_, p)| *p) {
        Some((name, _)) => Err(Error::parse(loc.to_string(), format!("field `{name}` does not apply to this kind"))),
        None => Ok(()),
    }
}

fn vertex_kind(loc: &str, v: &DocVertex, caps: &Caps) -> Result<VertexKind> {
    let finite_fields = [
        ("degree", v.degree.is_some()),
        ("perms", v.perms.is_some()),
        ("relators", v.relators.is_some()),
    ];
    let kind = match v.kind.as_str() {
        "finite" => {
            no_extra(loc, &[("rank", v.rank.is_some()), ("genus", v.genus.is_some())])?;
            VertexKind::Finite(finite_spec(loc, v.degree, &v.perms, &v.relators, &v.generators, caps)?)
        }
        "free" => VertexKind::FreeRank(v.rank.ok_or_else(|| missing(loc, "rank"))?),
        "free_abelian" => VertexKind::FreeAbelianRank(v.rank.ok_or_else(|| missing(loc, "rank"))?),
        "cyclic_z" => VertexKind::CyclicZ,
        "surface" => VertexKind::SurfaceGenus(v.genus.ok_or_else(|| missing(loc, "genus"))?),
        "opaque" => {
            let text = v.opaque_phi.as_ref().ok_or_else(|| missing(loc, "opaque_phi"))?;
            let phi = rational::parse(text)
                .ok_or_else(|| Error::parse(format!("{loc}.opaque_phi"), format!("bad rational `{text}`")))?;
            VertexKind::Opaque { rank_upper: v.generators.len() as u32, phi, one_ended: v.one_ended.unwrap_or(false) }
        }
        other => return Err(Error::parse(format!("{loc}.kind"), format!("unknown vertex kind `{other}`"))),
    };
    if !matches!(kind, VertexKind::Finite(_)) {
        no_extra(loc, &finite_fields)?;
    }
    if !matches!(kind, VertexKind::FreeRank(_) | VertexKind::FreeAbelianRank(_)) {
        no_extra(loc, &[("rank", v.rank.is_some())])?;
    }
    if !matches!(kind, VertexKind::SurfaceGenus(_)) {
        no_extra(loc, &[("genus", v.genus.is_some())])?;
    }
    if !matches!(kind, VertexKind::Opaque { .. }) {
        no_extra(loc, &[("opaque_phi", v.opaque_phi.is_some()), ("one_ended", v.one_ended.is_some())])?;
    }
    Ok(kind)
}

fn edge_kind(loc: &str, e: &DocEdge, caps: &Caps) -> Result<EdgeKind> {
    let kind = match e.kind.as_str() {
        "trivial" => EdgeKind::Trivial,
        "finite" => EdgeKind::Finite(finite_spec(loc, e.degree, &e.perms, &e.relators, &e.generators, caps)?),
        "cyclic_z" => EdgeKind::CyclicZ,
        "free_abelian" => EdgeKind::FreeAbelianRank(e.rank.ok_or_else(|| missing(loc, "rank"))?),
        other => return Err(Error::parse(format!("{loc}.kind"), format!("unknown edge kind `{other}`"))),
    };
    if !matches!(kind, EdgeKind::Finite(_)) {
        no_extra(
            loc,
            &[("degree", e.degree.is_some()), ("perms", e.perms.is_some()), ("relators", e.relators.is_some())],
        )?;
    }
    if !matches!(kind, EdgeKind::FreeAbelianRank(_)) {
        no_extra(loc, &[("rank", e.rank.is_some())])?;
    }
    Ok(kind)
}

/// Parses and validates a document.
pub fn parse_document(text: &str, caps: &Caps) -> Result<GraphOfGroups> {
    let doc: Document = toml::from_str(text).map_err(|e| Error::Parse {
        location: e.span().map_or_else(|| "document".to_string(), |s| line_col(text, s.start)),
        message: e.message().to_string(),
    })?;
    let gens = doc.group.generators.clone();
    let relators = words("group.relators", &doc.group.relators, &gens)?;
    let ambient = Presentation::new(gens.clone(), relators).map_err(|e| relocate(e, "group"))?;
    let mut vertices = Vec::new();
    for (i, v) in doc.vertices.iter().enumerate() {
        let loc = format!("vertices[{i}]");
        let phi = match &v.phi {
            Some(t) => Some(
                rational::parse(t).ok_or_else(|| Error::parse(format!("{loc}.phi"), format!("bad rational `{t}`")))?,
            ),
            None => None,
        };
        vertices.push(Vertex {
            id: v.id.clone(),
            kind: vertex_kind(&loc, v, caps)?,
            generators: v.generators.clone(),
            marking: words(&format!("{loc}.marking"), &v.marking, &gens)?,
            phi,
        });
    }
    let mut edges = Vec::new();
    for (i, e) in doc.edges.iter().enumerate() {
        let loc = format!("edges[{i}]");
        let names_of = |id: &str| {
            doc.vertices.iter().find(|v| v.id == id).map(|v| v.generators.clone()).ok_or_else(|| {
                Error::Structural(format!("edge `{}` has unknown endpoint `{id}`", e.id))
            })
        };
        let source_names = names_of(&e.source)?;
        let target_names = names_of(&e.target)?;
        edges.push(Edge {
            id: e.id.clone(),
            source: e.source.clone(),
            target: e.target.clone(),
            kind: edge_kind(&loc, e, caps)?,
            generators: e.generators.clone(),
            marking: words(&format!("{loc}.marking"), &e.marking, &gens)?,
            stable_letter: parse_word(&e.stable_letter, &gens)
                .map_err(|err| relocate(err, &format!("{loc}.stable_letter")))?,
            inclusion_source: words(&format!("{loc}.inclusion_source"), &e.inclusion_source, &source_names)?,
            inclusion_target: words(&format!("{loc}.inclusion_target"), &e.inclusion_target, &target_names)?,
        });
    }
    GraphOfGroups::new(ambient, vertices, edges, doc.meta.acylindricity_k, doc.meta.edge_rank_bound_n)
}

fn fmt_words(ws: &[Word], names: &[String]) -> Vec<String> {
    ws.iter().map(|w| format_word(w, names)).collect()
}

fn finite_fields(f: &FiniteSpec, names: &[String]) -> (Option<usize>, Option<Vec<String>>, Option<Vec<String>>) {
    (
        Some(f.group.degree()),
        Some(f.group.generators().iter().map(|p| p.to_string()).collect()),
        Some(fmt_words(&f.relators, names)),
    )
}

/// Canonical text of a splitting; parsing it gives back an equal value.
pub fn serialize_document(y: &GraphOfGroups) -> Result<String> {
    let gens = y.ambient().generators().to_vec();
    let vertices = y
        .vertices()
        .iter()
        .map(|v| {
            let mut d = DocVertex {
                id: v.id.clone(),
                kind: v.kind.tag().name().to_string(),
                generators: v.generators.clone(),
                marking: fmt_words(&v.marking, &gens),
                rank: None,
                genus: None,
                degree: None,
                perms: None,
                relators: None,
                one_ended: None,
                opaque_phi: None,
                phi: v.phi.as_ref().map(rational::to_text),
            };
            match &v.kind {
                VertexKind::Finite(f) => (d.degree, d.perms, d.relators) = finite_fields(f, &v.generators),
                VertexKind::FreeRank(r) | VertexKind::FreeAbelianRank(r) => d.rank = Some(*r),
                VertexKind::SurfaceGenus(g) => d.genus = Some(*g),
                VertexKind::CyclicZ => {}
                VertexKind::Opaque { phi, one_ended, .. } => {
                    d.opaque_phi = Some(rational::to_text(phi));
                    d.one_ended = Some(*one_ended);
                }
            }
            d
        })
        .collect();
    let edges = y
        .edges()
        .iter()
        .map(|e| {
            let (s, t) = y.endpoints(e);
            let sn = &y.vertices()[s].generators;
            let tn = &y.vertices()[t].generators;
            let mut d = DocEdge {
                id: e.id.clone(),
                source: e.source.clone(),
                target: e.target.clone(),
                kind: match &e.kind {
                    EdgeKind::Trivial => "trivial",
                    EdgeKind::Finite(_) => "finite",
                    EdgeKind::CyclicZ => "cyclic_z",
                    EdgeKind::FreeAbelianRank(_) => "free_abelian",
                }
                .to_string(),
                generators: e.generators.clone(),
                marking: fmt_words(&e.marking, &gens),
                stable_letter: format_word(&e.stable_letter, &gens),
                inclusion_source: fmt_words(&e.inclusion_source, sn),
                inclusion_target: fmt_words(&e.inclusion_target, tn),
                rank: None,
                degree: None,
                perms: None,
                relators: None,
            };
            match &e.kind {
                EdgeKind::Finite(f) => (d.degree, d.perms, d.relators) = finite_fields(f, &e.generators),
                EdgeKind::FreeAbelianRank(r) => d.rank = Some(*r),
                _ => {}
            }
            d
        })
        .collect();
    let doc = Document {
        group: DocGroup { generators: gens.clone(), relators: fmt_words(y.ambient().relators(), &gens) },
        vertices,
        edges,
        meta: DocMeta { acylindricity_k: y.acylindricity_k(), edge_rank_bound_n: y.edge_rank_bound_n() },
    };
    toml::to_string(&doc).map_err(|e| Error::Io(e.to_string()))
}
