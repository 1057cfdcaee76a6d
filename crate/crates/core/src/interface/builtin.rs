//! Constructors for the standard example splittings.

use crate::gog::{surface_relator, commutator, Edge, EdgeKind, FiniteSpec, GraphOfGroups, Vertex, VertexKind};
use crate::presentation::{Presentation, Word};
use crate::{Error, Result};

const LETTERS: &str = "abcdefghijklmnopqrstuvwxyz";

fn letter_names(n: usize) -> Result<Vec<String>> {
    if n > LETTERS.len() {
        return Err(Error::Configuration(format!("at most {} factors are supported", LETTERS.len())));
    }
    Ok(LETTERS.chars().take(n).map(String::from).collect())
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn trivial_edge(id: String, source: String, target: String) -> Edge {
    Edge {
        id,
        source,
        target,
        kind: EdgeKind::Trivial,
        generators: vec![],
        marking: vec![],
        stable_letter: Word::identity(),
        inclusion_source: vec![],
        inclusion_target: vec![],
    }
}

/// `Z/n1 * Z/n2 * ...`: one finite cyclic vertex per factor, joined along a
/// path of trivial edges.
pub fn free_product_finite_cyclics(orders: &[u32]) -> Result<GraphOfGroups> {
    if orders.is_empty() || orders.iter().any(|&n| n < 2) {
        return Err(Error::Configuration("orders must be given and each at least 2".into()));
    }
    let gens = letter_names(orders.len())?;
    let relators = orders.iter().enumerate().map(|(i, &n)| Word::power_of(i, n as i64)).collect();
    let ambient = Presentation::new(gens, relators)?;
    let vertices = orders
        .iter()
        .enumerate()
        .map(|(i, &n)| Vertex {
            id: format!("v{}", i + 1),
            kind: VertexKind::Finite(FiniteSpec::cyclic(n as usize)),
            generators: vec!["g".into()],
            marking: vec![Word::generator(i)],
            phi: None,
        })
        .collect();
    let edges = (1..orders.len())
        .map(|i| trivial_edge(format!("e{i}"), format!("v{i}"), format!("v{}", i + 1)))
        .collect();
    GraphOfGroups::new(ambient, vertices, edges, Some(0), 1)
}

/// The free group of rank `n` as a star: a trivial centre joined by trivial
/// edges to `n` infinite cyclic vertices. The centre is degenerate, so the
/// splitting is not reduced; reducing it leaves one cyclic vertex and `n - 1`
/// trivial edges to it from the others.
pub fn wedge(n: u32) -> Result<GraphOfGroups> {
    if n == 0 {
        return Err(Error::Configuration("wedge needs n >= 1".into()));
    }
    let gens = letter_names(n as usize)?;
    let ambient = Presentation::new(gens, vec![])?;
    let mut vertices = vec![Vertex {
        id: "v0".into(),
        kind: VertexKind::Finite(FiniteSpec::cyclic(1)),
        generators: vec![],
        marking: vec![],
        phi: None,
    }];
    vertices.extend((0..n as usize).map(|i| Vertex {
        id: format!("v{}", i + 1),
        kind: VertexKind::CyclicZ,
        generators: vec!["t".into()],
        marking: vec![Word::generator(i)],
        phi: None,
    }));
    let edges = (1..=n).map(|i| trivial_edge(format!("e{i}"), "v0".into(), format!("v{i}"))).collect();
    GraphOfGroups::new(ambient, vertices, edges, Some(0), 1)
}

/// The closed genus-`g` surface group split along a separating curve into a
/// one-holed torus (free of rank 2) and a one-holed surface of genus
/// `g - 1` (free of rank `2g - 2`), amalgamated over the boundary curve.
pub fn surface_amalgam(g: u32) -> Result<GraphOfGroups> {
    if g < 2 {
        return Err(Error::Configuration("surface_amalgam needs genus g >= 2".into()));
    }
    let g = g as usize;
    let gens: Vec<String> = (1..=g).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect();
    let ambient = Presentation::new(gens, vec![surface_relator(g)])?;
    let boundary = commutator(&Word::generator(0), &Word::generator(1));
    let rest = 2 * (g - 1);
    let torus = Vertex {
        id: "v1".into(),
        kind: VertexKind::FreeRank(2),
        generators: vec!["x".into(), "y".into()],
        marking: vec![Word::generator(0), Word::generator(1)],
        phi: None,
    };
    let other = Vertex {
        id: "v2".into(),
        kind: VertexKind::FreeRank(rest as u32),
        generators: names("c", rest),
        marking: (2..2 * g).map(Word::generator).collect(),
        phi: None,
    };
    let edge = Edge {
        id: "e1".into(),
        source: "v1".into(),
        target: "v2".into(),
        kind: EdgeKind::CyclicZ,
        generators: vec!["z".into()],
        marking: vec![boundary],
        stable_letter: Word::identity(),
        inclusion_source: vec![commutator(&Word::generator(0), &Word::generator(1))],
        inclusion_target: vec![surface_relator(g - 1).inverse()],
    };
    GraphOfGroups::new(ambient, vec![torus, other], vec![edge], Some(2), 1)
}

/// Looks up a builtin by name with integer parameters.
pub fn builtin(name: &str, params: &[u32]) -> Result<GraphOfGroups> {
    match name {
        "free_product_finite_cyclics" => free_product_finite_cyclics(params),
        "wedge" => match params {
            [n] => wedge(*n),
            _ => Err(Error::Configuration("wedge takes one parameter n".into())),
        },
        "surface_amalgam" => match params {
            [g] => surface_amalgam(*g),
            _ => Err(Error::Configuration("surface_amalgam takes one parameter g".into())),
        },
        other => Err(Error::Configuration(format!(
            "unknown builtin `{other}` (expected free_product_finite_cyclics, wedge or surface_amalgam)"
        ))),
    }
}
