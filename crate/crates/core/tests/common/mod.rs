//! Shared helpers for the integration tests: fixture loading and seeded
//! random splittings written as input documents.

#![allow(dead_code)]

use std::path::PathBuf;

use ggvol_core::enumeration::{cyclic_quotients, normal_subgroups, SubgroupCatalog};
use ggvol_core::gog::GraphOfGroups;
use ggvol_core::interface::builtin::surface_amalgam;
use ggvol_core::interface::document::parse_document;
use ggvol_core::Caps;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// Every shipped fixture as `(file stem, splitting)`, sorted by name.
pub fn fixtures() -> Vec<(String, GraphOfGroups)> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(fixture_dir())
        .expect("fixture directory")
        .map(|e| e.expect("entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "toml"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).expect("readable fixture");
            let y = parse_document(&text, &Caps::default())
                .unwrap_or_else(|e| panic!("{}: {e}", p.display()));
            (p.file_stem().unwrap().to_string_lossy().into_owned(), y)
        })
        .collect()
}

/// The catalog used for a fixture in corpus-wide checks.
pub fn fixture_catalog(name: &str, y: &GraphOfGroups, caps: &Caps) -> SubgroupCatalog {
    let catalog = if name.starts_with("surface") {
        cyclic_quotients(y.ambient(), 8, None, caps)
    } else if name == "free2" {
        normal_subgroups(y.ambient(), 6, caps)
    } else {
        normal_subgroups(y.ambient(), 8, caps)
    };
    catalog.unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn cycle(n: usize) -> String {
    let points: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    format!("({})", points.join(" "))
}

fn quoted(items: &[String]) -> String {
    let inner: Vec<String> = items.iter().map(|s| format!("\"{s}\"")).collect();
    format!("[{}]", inner.join(", "))
}

fn finite_cyclic_vertex(id: &str, order: usize, marking: &str) -> String {
    format!(
        "[[vertices]]\nid = \"{id}\"\nkind = \"finite\"\ngenerators = [\"g\"]\nmarking = [\"{marking}\"]\n\
         degree = {order}\nperms = [\"{}\"]\nrelators = [\"g^{order}\"]\n\n",
        cycle(order)
    )
}

fn trivial_edge(id: &str, source: &str, target: &str) -> String {
    format!("[[edges]]\nid = \"{id}\"\nsource = \"{source}\"\ntarget = \"{target}\"\nkind = \"trivial\"\n\n")
}

fn finite_cyclic_edge(
    id: &str,
    source: &str,
    target: &str,
    order: usize,
    marking: &str,
    stable: &str,
    inclusions: (&str, &str),
) -> String {
    format!(
        "[[edges]]\nid = \"{id}\"\nsource = \"{source}\"\ntarget = \"{target}\"\nkind = \"finite\"\n\
         generators = [\"z\"]\nmarking = [\"{marking}\"]\nstable_letter = \"{stable}\"\n\
         inclusion_source = [\"{}\"]\ninclusion_target = [\"{}\"]\ndegree = {order}\nperms = [\"{}\"]\n\
         relators = [\"z^{order}\"]\n\n",
        inclusions.0,
        inclusions.1,
        cycle(order)
    )
}

fn header(generators: &[String], relators: &[String]) -> String {
    format!("[group]\ngenerators = {}\nrelators = {}\n\n", quoted(generators), quoted(relators))
}

fn meta(k: Option<u32>) -> String {
    match k {
        Some(k) => format!("[meta]\nacylindricity_k = {k}\nedge_rank_bound_n = 1\n"),
        None => "[meta]\nedge_rank_bound_n = 1\n".into(),
    }
}

/// A free product of finite cyclic groups, infinite cyclic groups and at
/// most one copy of `Z^2`, joined by trivial edges along a random tree.
pub fn random_free_product(rng: &mut ChaCha8Rng) -> String {
    let factors = rng.gen_range(2..=4);
    let mut generators = Vec::new();
    let mut relators = Vec::new();
    let mut body = String::new();
    let mut used_abelian = false;
    for i in 0..factors {
        let id = format!("v{}", i + 1);
        let a = format!("a{}", i + 1);
        match rng.gen_range(0..4) {
            0 | 1 => {
                let n = rng.gen_range(2..=5);
                relators.push(format!("{a}^{n}"));
                body.push_str(&finite_cyclic_vertex(&id, n, &a));
                generators.push(a);
            }
            2 if !used_abelian && factors <= 3 => {
                used_abelian = true;
                let b = format!("b{}", i + 1);
                relators.push(format!("{a} {b} {a}^-1 {b}^-1"));
                body.push_str(&format!(
                    "[[vertices]]\nid = \"{id}\"\nkind = \"free_abelian\"\ngenerators = [\"x\", \"y\"]\n\
                     marking = [\"{a}\", \"{b}\"]\nrank = 2\n\n"
                ));
                generators.push(a);
                generators.push(b);
            }
            _ => {
                body.push_str(&format!(
                    "[[vertices]]\nid = \"{id}\"\nkind = \"cyclic_z\"\ngenerators = [\"t\"]\nmarking = [\"{a}\"]\n\n"
                ));
                generators.push(a);
            }
        }
    }
    for i in 1..factors {
        let j = rng.gen_range(0..i);
        let (s, t) = if rng.gen_bool(0.5) { (i, j) } else { (j, i) };
        body.push_str(&trivial_edge(&format!("e{i}"), &format!("v{}", s + 1), &format!("v{}", t + 1)));
    }
    format!("{}{body}{}", header(&generators, &relators), meta(Some(1)))
}

/// `Z/(mc) *_{Z/c} Z/(nc)`.
pub fn random_finite_amalgam(rng: &mut ChaCha8Rng) -> String {
    let c = rng.gen_range(2..=3);
    let m = rng.gen_range(1..=3);
    let n = rng.gen_range(1..=3);
    let generators = vec!["a".to_string(), "b".to_string()];
    let relators = vec![format!("a^{}", m * c), format!("b^{}", n * c), format!("a^{m} b^-{n}")];
    let mut body = finite_cyclic_vertex("v1", m * c, "a");
    body.push_str(&finite_cyclic_vertex("v2", n * c, "b"));
    body.push_str(&finite_cyclic_edge(
        "e1",
        "v1",
        "v2",
        c,
        &format!("a^{m}"),
        "",
        (&format!("g^{m}"), &format!("g^{n}")),
    ));
    format!("{}{body}{}", header(&generators, &relators), meta(None))
}

/// An HNN extension of `Z/(mc)` whose stable letter conjugates the subgroup
/// of order `c` to itself by the identity or by inversion.
pub fn random_finite_hnn(rng: &mut ChaCha8Rng) -> String {
    let c = rng.gen_range(2..=3);
    let m = rng.gen_range(1..=2);
    let u = if rng.gen_bool(0.5) { 1 } else { c - 1 };
    let generators = vec!["a".to_string(), "t".to_string()];
    let relators = vec![format!("a^{}", m * c), format!("t^-1 a^{m} t a^-{}", m * u)];
    let mut body = finite_cyclic_vertex("v1", m * c, "a");
    body.push_str(&finite_cyclic_edge(
        "e1",
        "v1",
        "v1",
        c,
        &format!("a^{m}"),
        "t",
        (&format!("g^{m}"), &format!("g^{}", m * u)),
    ));
    format!("{}{body}{}", header(&generators, &relators), meta(None))
}

/// A random splitting together with a catalog of quotients to pair it with.
pub struct Instance {
    pub family: &'static str,
    pub splitting: GraphOfGroups,
    pub catalog: SubgroupCatalog,
}

/// Draws one splitting and one quotient of it from the random families.
pub fn random_instance(rng: &mut ChaCha8Rng, caps: &Caps) -> Instance {
    let family = rng.gen_range(0..4);
    let (family, y) = match family {
        0 => ("free_product", parse_document(&random_free_product(rng), caps)),
        1 => ("finite_amalgam", parse_document(&random_finite_amalgam(rng), caps)),
        2 => ("finite_hnn", parse_document(&random_finite_hnn(rng), caps)),
        _ => ("surface", surface_amalgam(rng.gen_range(2..=3))),
    };
    let y = y.unwrap_or_else(|e| panic!("{family}: {e}"));
    let p = y.ambient();
    let full = if family == "surface" {
        let g = Some(rng.gen_range(0..p.generators().len()));
        cyclic_quotients(p, rng.gen_range(2..=6), g, caps)
    } else {
        let bound = if p.generators().len() <= 2 { 8 } else { 4 };
        normal_subgroups(p, rng.gen_range(2..=bound), caps)
    }
    .unwrap_or_else(|e| panic!("{family}: {e}"));
    let q = full.entries().choose(rng).expect("catalog contains the trivial quotient").clone();
    let catalog = SubgroupCatalog::from_quotients(p, q.index(), full.kind(), vec![q]);
    Instance { family, splitting: y, catalog }
}
