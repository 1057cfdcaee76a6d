use super::*;
use crate::interface::builtin::{free_product_finite_cyclics, surface_amalgam, wedge};
use crate::presentation::{Presentation, Word};
use crate::{rational, Error};

fn trivial_vertex(id: &str) -> Vertex {
    Vertex {
        id: id.into(),
        kind: VertexKind::Finite(FiniteSpec::cyclic(1)),
        generators: vec![],
        marking: vec![],
        phi: None,
    }
}

fn cyclic_vertex(id: &str, n: usize, marking: usize) -> Vertex {
    Vertex {
        id: id.into(),
        kind: VertexKind::Finite(FiniteSpec::cyclic(n)),
        generators: vec!["g".into()],
        marking: vec![Word::generator(marking)],
        phi: None,
    }
}

fn trivial_edge(id: &str, s: &str, t: &str, stable: Word) -> Edge {
    Edge {
        id: id.into(),
        source: s.into(),
        target: t.into(),
        kind: EdgeKind::Trivial,
        generators: vec![],
        marking: vec![],
        stable_letter: stable,
        inclusion_source: vec![],
        inclusion_target: vec![],
    }
}

#[test]
fn modular_group_counts() {
    let y = free_product_finite_cyclics(&[2, 3]).unwrap();
    assert_eq!(y.graph_rank(), 0);
    assert!(!y.is_degenerate("v1").unwrap());
    assert!(!y.is_degenerate("v2").unwrap());
    assert_eq!(y.complexity().unwrap(), 2);
    assert!(y.is_reduced().unwrap());
}

#[test]
fn surface_amalgam_counts() {
    let y = surface_amalgam(2).unwrap();
    assert_eq!(y.graph_rank(), 0);
    assert!(!y.is_degenerate("v1").unwrap());
    assert_eq!(y.complexity().unwrap(), 2);
    assert_eq!(y.weighted_complexity(&PhiTable::vfin()).unwrap(), rational::int(4));
    assert_eq!(y.weighted_complexity(&PhiTable::zero()).unwrap(), rational::int(2));
    let y3 = surface_amalgam(3).unwrap();
    assert_eq!(y3.vertices()[1].kind, VertexKind::FreeRank(4));
    // (1 + 1) + (1 + 3)
    assert_eq!(y3.weighted_complexity(&PhiTable::vfin()).unwrap(), rational::int(6));
}

#[test]
fn elliptic_single_vertex() {
    let y = free_product_finite_cyclics(&[6]).unwrap();
    assert_eq!(y.complexity().unwrap(), 1);
    assert_eq!(y.weighted_complexity(&PhiTable::vfin()).unwrap(), rational::one());
}

#[test]
fn degeneracy_rules() {
    let amb = Presentation::parse(&["a"], &["a^6"]).unwrap();
    let v = cyclic_vertex("v", 6, 0);
    let mut w = trivial_vertex("w");
    w.id = "w".into();
    let y = GraphOfGroups::new(amb, vec![v, w], vec![trivial_edge("e", "v", "w", Word::identity())], None, 1)
        .unwrap();
    assert!(!y.is_degenerate("v").unwrap());
    assert!(y.is_degenerate("w").unwrap());

    let f2 = surface_amalgam(2).unwrap();
    assert!(!f2.is_degenerate("v2").unwrap());
    assert!(f2.is_degenerate("nope").is_err());
}

#[test]
fn validation_errors() {
    let amb = Presentation::parse(&["a", "b"], &["a^2", "b^3"]).unwrap();
    let vs = vec![cyclic_vertex("v1", 2, 0), cyclic_vertex("v2", 3, 1)];
    // disconnected
    let err = GraphOfGroups::new(amb.clone(), vs.clone(), vec![], None, 1).unwrap_err();
    assert!(matches!(err, Error::Structural(m) if m.contains("disconnected")));
    // dangling endpoint
    let err = GraphOfGroups::new(
        amb.clone(),
        vs.clone(),
        vec![trivial_edge("e1", "v1", "v9", Word::identity())],
        None,
        1,
    )
    .unwrap_err();
    assert!(matches!(err, Error::Structural(m) if m.contains("e1") && m.contains("v9")));
    // the only edge has a stable letter: no spanning tree
    let err = GraphOfGroups::new(
        amb.clone(),
        vs.clone(),
        vec![trivial_edge("e1", "v1", "v2", Word::generator(0))],
        None,
        1,
    )
    .unwrap_err();
    assert!(matches!(err, Error::Structural(m) if m.contains("spanning tree")));
    // a loop with identity stable letter
    let err = GraphOfGroups::new(
        amb.clone(),
        vs.clone(),
        vec![
            trivial_edge("e1", "v1", "v2", Word::identity()),
            trivial_edge("e2", "v1", "v1", Word::identity()),
        ],
        None,
        1,
    )
    .unwrap_err();
    assert!(matches!(err, Error::Structural(_)));
    // marking referencing an unknown ambient generator
    let mut bad = vs.clone();
    bad[0].marking = vec![Word::generator(5)];
    assert!(GraphOfGroups::new(amb, bad, vec![trivial_edge("e1", "v1", "v2", Word::identity())], None, 1).is_err());
}

#[test]
fn full_collapse_matches_skeleton() {
    // trivial source, order 2 target
    let amb = Presentation::parse(&["a"], &["a^2"]).unwrap();
    let y = GraphOfGroups::new(
        amb,
        vec![trivial_vertex("u"), cyclic_vertex("w", 2, 0)],
        vec![trivial_edge("e", "u", "w", Word::identity())],
        None,
        1,
    )
    .unwrap();
    let c = collapse_edge(&y, "e").unwrap();
    assert_eq!(c.vertices().len(), 1);
    assert_eq!(c.vertices()[0].id, "w");
    assert_eq!(c.vertices()[0].kind, VertexKind::Finite(FiniteSpec::cyclic(2)));
    assert_eq!(c.skeleton().unwrap(), y.skeleton().unwrap().collapse_edge("e").unwrap());

    let w = wedge(3).unwrap();
    assert!(!w.is_reduced().unwrap());
    let (r, trace) = reduce(&w).unwrap();
    let (rs, strace) = w.skeleton().unwrap().reduce().unwrap();
    assert_eq!(r.skeleton().unwrap(), rs);
    assert_eq!(trace, strace);
    assert_eq!(r.vertices().len(), 3);
    assert_eq!(r.edges().len(), 2);
    assert!(r.is_reduced().unwrap());
    assert_eq!(r.complexity().unwrap(), 3);
    assert!(matches!(collapse_edge(&surface_amalgam(2).unwrap(), "e1"), Err(Error::Precondition(_))));
}

#[test]
fn collapse_rewrites_inclusions_through_finite_groups() {
    // Z/6 --(Z/2 via g^3)-- Z/2 --(Z/2 via identity)-- Z/2' : collapse the second edge.
    let amb = Presentation::parse(&["a", "b"], &["a^6", "b^2", "a^3 b^-1"]).unwrap();
    let z2 = FiniteSpec::cyclic(2);
    let v6 = cyclic_vertex("u", 6, 0);
    let m = cyclic_vertex("m", 2, 1);
    let z = cyclic_vertex("z", 2, 1);
    let e1 = Edge {
        id: "e1".into(),
        source: "u".into(),
        target: "m".into(),
        kind: EdgeKind::Finite(z2.clone()),
        generators: vec!["h".into()],
        marking: vec![Word::power_of(0, 3)],
        stable_letter: Word::identity(),
        inclusion_source: vec![Word::power_of(0, 3)],
        inclusion_target: vec![Word::generator(0)],
    };
    let e2 = Edge {
        id: "e2".into(),
        source: "m".into(),
        target: "z".into(),
        kind: EdgeKind::Finite(z2),
        generators: vec!["h".into()],
        marking: vec![Word::generator(1)],
        stable_letter: Word::identity(),
        inclusion_source: vec![Word::generator(0)],
        inclusion_target: vec![Word::generator(0)],
    };
    let y = GraphOfGroups::new(amb, vec![v6, m, z], vec![e1, e2], None, 1).unwrap();
    let (r, trace) = reduce(&y).unwrap();
    assert_eq!(trace.len(), 2);
    assert_eq!(r.vertices().len(), 1);
    assert_eq!(r.vertices()[0].id, "u");
    assert_eq!(r.skeleton().unwrap(), y.skeleton().unwrap().reduce().unwrap().0);
}

#[test]
fn unsupported_pairs_raise() {
    let amb = Presentation::parse(&["a", "b"], &[]).unwrap();
    let v = Vertex {
        id: "v".into(),
        kind: VertexKind::FreeRank(2),
        generators: vec!["x".into(), "y".into()],
        marking: vec![Word::generator(0), Word::generator(1)],
        phi: None,
    };
    let w = Vertex { id: "w".into(), ..v.clone() };
    let e = Edge {
        id: "e".into(),
        source: "v".into(),
        target: "w".into(),
        kind: EdgeKind::FreeAbelianRank(2),
        generators: vec!["p".into(), "q".into()],
        marking: vec![Word::generator(0), Word::generator(1)],
        stable_letter: Word::identity(),
        inclusion_source: vec![Word::generator(0), Word::generator(1)],
        inclusion_target: vec![Word::generator(0), Word::generator(1)],
    };
    let y = GraphOfGroups::new(amb, vec![v, w], vec![e], None, 2).unwrap();
    assert!(matches!(y.is_degenerate("v"), Err(Error::Unsupported(_))));
    assert!(matches!(y.complexity(), Err(Error::Unsupported(_))));
    assert!(matches!(y.with_meta(None, 1), Err(Error::Structural(_))));
}
