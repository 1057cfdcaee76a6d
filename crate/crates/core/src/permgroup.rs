//! Explicit permutation groups.
//!
//! Groups are stored by full element enumeration, sorted lexicographically on
//! the point mapping. That order is the canonical order used for coset
//! representatives and for every reproducible listing in the crate.
//!
//! Products are written left to right: `x.then(y)` applies `x` first.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::{Caps, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Box<[u16]>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u16).collect())
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        if d > u16::MAX as usize {
            return Err(Error::Structural(format!("degree {d} is too large")));
        }
        let mut seen = vec![false; d];
        for &i in &images {
            if i >= d || seen[i] {
                return Err(Error::Structural(format!("{images:?} is not a bijection on 0..{d}")));
            }
            seen[i] = true;
        }
        Ok(Perm(images.into_iter().map(|i| i as u16).collect()))
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut map: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for c in cycles {
            for (k, &p) in c.iter().enumerate() {
                if p >= degree {
                    return Err(Error::Structural(format!("point {p} outside 0..{degree}")));
                }
                if used[p] {
                    return Err(Error::Structural(format!("point {p} repeated in cycles")));
                }
                used[p] = true;
                map[p] = c[(k + 1) % c.len()];
            }
        }
        Perm::from_images(map)
    }

    /// Parses cycle notation such as `(0 1 2)(3 4)`; `()` is the identity.
    pub fn parse(degree: usize, text: &str) -> Result<Self> {
        let err = |m: &str| Error::parse(format!("permutation `{text}`"), m.to_string());
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| err("expected `(`"))?;
            let close = body.find(')').ok_or_else(|| err("unclosed cycle"))?;
            let points = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| err("bad point")))
                .collect::<Result<Vec<_>>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = body[close + 1..].trim_start();
        }
        Perm::from_cycles(degree, &cycles).map_err(|e| match e {
            Error::Structural(m) => err(&m),
            other => other,
        })
    }

    /// Images of the disjoint points of `parts`, placed side by side.
    pub fn disjoint_sum(parts: &[&Perm]) -> Perm {
        let mut map = Vec::new();
        let mut offset = 0u16;
        for p in parts {
            map.extend(p.0.iter().map(|&i| i + offset));
            offset += p.0.len() as u16;
        }
        Perm(map.into())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.0[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Perm(inv.into())
    }

    pub fn pow(&self, exp: i64) -> Perm {
        let base = if exp >= 0 { self.clone() } else { self.inverse() };
        let mut acc = Perm::identity(self.degree());
        for _ in 0..exp.unsigned_abs() {
            acc = acc.then(&base);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                c.push(p);
                p = self.apply(p);
            }
            out.push(c);
        }
        out
    }

    pub fn order(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 { a } else { gcd(b, a % b) }
        }
        self.cycles().iter().fold(1, |acc, c| acc / gcd(acc, c.len()) * c.len())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

/// A permutation group with all of its elements listed in canonical order.
#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    lookup: HashMap<Perm, usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("generators", &gens)
            .field("order", &self.order())
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.generators == other.generators
    }
}

impl Eq for FiniteGroup {}

/// Closes `generators` under multiplication, failing once more than
/// `caps.closure` elements appear.
pub fn close(degree: usize, generators: Vec<Perm>, caps: &Caps) -> Result<FiniteGroup> {
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::Structural(format!("generator {g} does not have degree {degree}")));
    }
    let id = Perm::identity(degree);
    let mut elements = vec![id.clone()];
    let mut lookup: HashMap<Perm, usize> = HashMap::from([(id, 0)]);
    let mut i = 0;
    while i < elements.len() {
        for g in &generators {
            let y = elements[i].then(g);
            if !lookup.contains_key(&y) {
                if elements.len() >= caps.closure {
                    return Err(Error::Resource { cap: "closure", value: caps.closure as u64 });
                }
                lookup.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
        i += 1;
    }
    elements.sort();
    for (k, e) in elements.iter().enumerate() {
        *lookup.get_mut(e).expect("element present") = k;
    }
    Ok(FiniteGroup { degree, generators, elements, lookup })
}

impl FiniteGroup {
    /// The trivial group on `degree` points with no generators.
    pub fn trivial(degree: usize) -> Self {
        close(degree, Vec::new(), &Caps::default()).expect("trivial group")
    }

    /// The cyclic group of order `n` generated by an `n`-cycle.
    pub fn cyclic(n: usize) -> Self {
        let gen = Perm::from_images((0..n).map(|i| (i + 1) % n).collect()).expect("cycle");
        close(n, vec![gen], &Caps::default()).expect("cyclic group")
    }

    pub fn symmetric(degree: usize, caps: &Caps) -> Result<Self> {
        if degree < 2 {
            return close(degree, Vec::new(), caps);
        }
        let swap = Perm::from_cycles(degree, &[vec![0, 1]])?;
        let cycle = Perm::from_images((0..degree).map(|i| (i + 1) % degree).collect())?;
        close(degree, vec![swap, cycle], caps)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.lookup.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.lookup.contains_key(p)
    }

    /// The identity is the lexicographically smallest mapping.
    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.lookup[&self.elements[i].then(&self.elements[j])]
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        self.lookup[&self.elements[i].inverse()]
    }

    /// Minimal number of generators, found by exhaustive search over
    /// generating subsets of size at most four. Beyond that size the size of a
    /// greedy generating set is returned, which is an upper bound.
    pub fn min_generators(&self) -> usize {
        let n = self.order();
        if n == 1 {
            return 0;
        }
        if self.elements.iter().any(|e| e.order() == n) {
            return 1;
        }
        let upper = greedy_generators(self, &(0..n).collect::<Vec<_>>()).len();
        let ids: Vec<usize> = (1..n).collect();
        for size in 2..upper.min(5) {
            if exists_generating_subset(self, &ids, size) {
                return size;
            }
        }
        upper
    }
}

fn exists_generating_subset(g: &FiniteGroup, ids: &[usize], size: usize) -> bool {
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let picks: Vec<usize> = idx.iter().map(|&i| ids[i]).collect();
        if closure_indices(g, &picks).len() == g.order() {
            return true;
        }
        let Some(k) = (0..size).rev().find(|&k| idx[k] < ids.len() - size + k) else {
            return false;
        };
        idx[k] += 1;
        for j in k + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Indices of the subgroup of `g` generated by the elements at `gens`.
fn closure_indices(g: &FiniteGroup, gens: &[usize]) -> Vec<usize> {
    let mut mask = vec![false; g.order()];
    let id = g.identity_index();
    mask[id] = true;
    let mut queue = VecDeque::from([id]);
    let mut out = vec![id];
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = g.mul(x, s);
            if !mask[y] {
                mask[y] = true;
                out.push(y);
                queue.push_back(y);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Greedy generating set of the subgroup with the given member indices.
fn greedy_generators(g: &FiniteGroup, members: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut have = vec![false; g.order()];
    have[g.identity_index()] = true;
    for &m in members {
        if !have[m] {
            gens.push(m);
            for x in closure_indices(g, &gens) {
                have[x] = true;
            }
        }
    }
    gens
}

/// A subgroup of a [`FiniteGroup`], stored as a sorted set of element
/// indices of the parent.
#[derive(Debug, Clone)]
pub struct SubgroupRef<'g> {
    parent: &'g FiniteGroup,
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl<'g> SubgroupRef<'g> {
    fn from_members(parent: &'g FiniteGroup, members: Vec<usize>) -> Self {
        let mut mask = vec![false; parent.order()];
        for &m in &members {
            mask[m] = true;
        }
        assert_eq!(parent.order() % members.len(), 0, "subgroup order must divide group order");
        SubgroupRef { parent, members, mask }
    }

    pub fn whole(parent: &'g FiniteGroup) -> Self {
        Self::from_members(parent, (0..parent.order()).collect())
    }

    pub fn parent(&self) -> &'g FiniteGroup {
        self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.mask[i]
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.parent.index_of(p).is_some_and(|i| self.mask[i])
    }

    pub fn is_subset_of(&self, other: &SubgroupRef<'_>) -> bool {
        self.members.iter().all(|&m| other.mask.get(m).copied().unwrap_or(false))
    }

    /// The subgroup as a standalone permutation group.
    pub fn to_group(&self) -> FiniteGroup {
        let gens = greedy_generators(self.parent, &self.members)
            .into_iter()
            .map(|i| self.parent.element(i).clone())
            .collect();
        close(self.parent.degree(), gens, &Caps { closure: usize::MAX, ..Caps::default() })
            .expect("subgroup closure stays inside the parent")
    }
}

/// Smallest subgroup of `g` containing `elems`.
pub fn subgroup_generated<'g>(g: &'g FiniteGroup, elems: &[Perm]) -> Result<SubgroupRef<'g>> {
    let ids = elems
        .iter()
        .map(|e| {
            g.index_of(e)
                .ok_or_else(|| Error::Structural(format!("element {e} is not in the group")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SubgroupRef::from_members(g, closure_indices(g, &ids)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coset {
    /// Minimal element of the coset in canonical order.
    pub representative: usize,
    pub members: Vec<usize>,
}

/// Left cosets `xS` of a subgroup, in order of their representatives.
#[derive(Debug, Clone)]
pub struct CosetSpace {
    pub cosets: Vec<Coset>,
    /// `coset_of[x]` is the position in `cosets` of the coset containing `x`.
    pub coset_of: Vec<usize>,
}

impl CosetSpace {
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }
}

pub fn coset_space(g: &FiniteGroup, s: &SubgroupRef<'_>) -> CosetSpace {
    const UNSET: usize = usize::MAX;
    let mut coset_of = vec![UNSET; g.order()];
    let mut cosets = Vec::with_capacity(g.order() / s.order());
    for x in 0..g.order() {
        if coset_of[x] != UNSET {
            continue;
        }
        let k = cosets.len();
        let mut members: Vec<usize> = s.members().iter().map(|&m| g.mul(x, m)).collect();
        members.sort_unstable();
        for &m in &members {
            coset_of[m] = k;
        }
        cosets.push(Coset { representative: x, members });
    }
    CosetSpace { cosets, coset_of }
}

/// Kernel and image size of a map from a finite group `v` into a
/// permutation group, given by the images of `v`'s generators.
#[derive(Debug, Clone)]
pub struct RestrictedKernel<'v> {
    pub kernel: SubgroupRef<'v>,
    pub image_order: usize,
    /// Image of every element of `v`, indexed like `v.elements()`.
    pub images: Vec<Perm>,
}

/// Computes `{x in v : f(x) = 1}` for the map sending `v.generators()[i]` to
/// `images[i]`, checking along the way that the assignment really extends
/// to a homomorphism.
pub fn restricted_kernel<'v>(
    v: &'v FiniteGroup,
    images: &[Perm],
    target_degree: usize,
) -> Result<RestrictedKernel<'v>> {
    if images.len() != v.generators().len() {
        return Err(Error::Structural(format!(
            "{} generator images supplied for a group with {} generators",
            images.len(),
            v.generators().len()
        )));
    }
    let gen_ids: Vec<usize> = v.generators().iter().map(|g| v.index_of(g).expect("generator")).collect();
    let mut img: Vec<Option<Perm>> = vec![None; v.order()];
    let id = v.identity_index();
    img[id] = Some(Perm::identity(target_degree));
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        let fx = img[x].clone().expect("visited");
        for (k, &s) in gen_ids.iter().enumerate() {
            let y = v.mul(x, s);
            let fy = fx.then(&images[k]);
            match &img[y] {
                Some(existing) if *existing != fy => {
                    return Err(Error::InvalidMarking(
                        "generator images do not extend to a homomorphism of the finite group".into(),
                    ))
                }
                Some(_) => {}
                None => {
                    img[y] = Some(fy);
                    queue.push_back(y);
                }
            }
        }
    }
    let images: Vec<Perm> = img.into_iter().map(|p| p.expect("group generated by its generators")).collect();
    let kernel_members: Vec<usize> = (0..v.order()).filter(|&i| images[i].is_identity()).collect();
    let mut distinct: Vec<&Perm> = images.iter().collect();
    distinct.sort();
    distinct.dedup();
    let image_order = distinct.len();
    let kernel = SubgroupRef::from_members(v, kernel_members);
    assert_eq!(kernel.order() * image_order, v.order());
    Ok(RestrictedKernel { kernel, image_order, images })
}

/// Result of walking two generator tuples in lockstep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pairing {
    /// `gens1[i] -> gens2[i]` extends to a well-defined map on the first group.
    pub functional: bool,
    /// The extension is also injective.
    pub injective: bool,
}

/// Decides whether the assignment `gens1[i] -> gens2[i]` extends to a
/// homomorphism of the generated groups (and whether it is injective), by
/// simultaneous closure with consistency checking.
pub fn pairing(gens1: &[Perm], gens2: &[Perm], caps: &Caps) -> Result<Pairing> {
    assert_eq!(gens1.len(), gens2.len());
    let d1 = gens1.first().map(Perm::degree).unwrap_or(0);
    let d2 = gens2.first().map(Perm::degree).unwrap_or(0);
    let mut forward: HashMap<Perm, Perm> = HashMap::new();
    let mut backward: HashMap<Perm, Perm> = HashMap::new();
    let (i1, i2) = (Perm::identity(d1), Perm::identity(d2));
    forward.insert(i1.clone(), i2.clone());
    backward.insert(i2.clone(), i1.clone());
    let mut queue = VecDeque::from([(i1, i2)]);
    let mut injective = true;
    while let Some((x1, x2)) = queue.pop_front() {
        for (g1, g2) in gens1.iter().zip(gens2) {
            let y1 = x1.then(g1);
            let y2 = x2.then(g2);
            match forward.get(&y1) {
                Some(prev) => {
                    if *prev != y2 {
                        return Ok(Pairing { functional: false, injective: false });
                    }
                }
                None => {
                    if forward.len() >= caps.closure {
                        return Err(Error::Resource { cap: "closure", value: caps.closure as u64 });
                    }
                    if let Some(back) = backward.get(&y2) {
                        if *back != y1 {
                            injective = false;
                        }
                    } else {
                        backward.insert(y2.clone(), y1.clone());
                    }
                    forward.insert(y1.clone(), y2.clone());
                    queue.push_back((y1, y2));
                }
            }
        }
    }
    Ok(Pairing { functional: true, injective })
}

/// Right multiplication by each generator, as a table over element
/// positions. Lets one group be paired against many others without
/// multiplying its permutations again.
#[derive(Debug, Clone)]
pub struct CayleyGraph {
    gens: usize,
    identity: usize,
    next: Vec<u32>,
}

impl CayleyGraph {
    pub fn new(g: &FiniteGroup) -> Self {
        let gens = g.generators().len();
        let mut next = Vec::with_capacity(g.order() * gens);
        for x in g.elements() {
            for s in g.generators() {
                let y = g.index_of(&x.then(s)).expect("closed under generators");
                next.push(y as u32);
            }
        }
        CayleyGraph { gens, identity: g.identity_index(), next }
    }

    pub fn order(&self) -> usize {
        self.next.len().checked_div(self.gens).unwrap_or(1)
    }

    /// Whether generator `i` of this group going to generator `i` of `other`
    /// extends to a homomorphism.
    pub fn maps_to(&self, other: &CayleyGraph) -> bool {
        assert_eq!(self.gens, other.gens);
        if self.gens == 0 {
            return true;
        }
        let mut image = vec![u32::MAX; self.order()];
        image[self.identity] = other.identity as u32;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            let fx = image[x] as usize;
            for g in 0..self.gens {
                let y = self.next[x * self.gens + g] as usize;
                let fy = other.next[fx * self.gens + g];
                if image[y] == u32::MAX {
                    image[y] = fy;
                    queue.push_back(y);
                } else if image[y] != fy {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(d: usize, s: &str) -> Perm {
        Perm::parse(d, s).unwrap()
    }

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn cycle_notation_roundtrip() {
        let x = p(5, "(0 1 2)(3 4)");
        assert_eq!(x.to_string(), "(0 1 2)(3 4)");
        assert_eq!(p(3, "()").to_string(), "()");
        assert_eq!(p(4, "(2 0)").to_string(), "(0 2)");
        assert!(Perm::parse(3, "(0 1").is_err());
        assert!(Perm::parse(3, "(0 5)").is_err());
        assert!(Perm::parse(3, "(0 1)(1 2)").is_err());
        assert_eq!(x.order(), 6);
        assert_eq!(x.then(&x.inverse()), Perm::identity(5));
    }

    #[test]
    fn close_examples() {
        assert_eq!(close(2, vec![p(2, "(0 1)")], &caps()).unwrap().order(), 2);
        assert_eq!(close(3, vec![], &caps()).unwrap().order(), 1);
        let s3 = close(3, vec![p(3, "(0 1)"), p(3, "(0 1 2)")], &caps()).unwrap();
        // brute force: all 6 permutations of three points
        assert_eq!(s3.order(), 6);
        let mut all = Vec::new();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    if a != b && b != c && a != c {
                        all.push(Perm::from_images(vec![a, b, c]).unwrap());
                    }
                }
            }
        }
        all.sort();
        assert_eq!(s3.elements(), &all[..]);
        let tiny = Caps { closure: 3, ..caps() };
        assert!(matches!(
            close(3, vec![p(3, "(0 1)"), p(3, "(0 1 2)")], &tiny),
            Err(Error::Resource { cap: "closure", .. })
        ));
    }

    #[test]
    fn subgroup_examples() {
        let s3 = FiniteGroup::symmetric(3, &caps()).unwrap();
        assert_eq!(subgroup_generated(&s3, &[]).unwrap().order(), 1);
        assert_eq!(subgroup_generated(&s3, &[p(3, "(0 1 2)")]).unwrap().order(), 3);
        let all = subgroup_generated(&s3, &[p(3, "(0 1)"), p(3, "(1 2)")]).unwrap();
        assert_eq!(all.order(), 6);
        assert!(subgroup_generated(&s3, &[p(4, "(0 1)")]).is_err());
    }

    #[test]
    fn coset_examples() {
        let z6 = FiniteGroup::cyclic(6);
        let gen = z6.generators()[0].clone();
        let s = subgroup_generated(&z6, &[gen.pow(3)]).unwrap();
        assert_eq!(coset_space(&z6, &s).len(), 3);
        assert_eq!(coset_space(&z6, &SubgroupRef::whole(&z6)).len(), 1);

        let s3 = FiniteGroup::symmetric(3, &caps()).unwrap();
        let h = subgroup_generated(&s3, &[p(3, "(0 1)")]).unwrap();
        let cs = coset_space(&s3, &h);
        assert_eq!(cs.len(), 3);
        let mut union: Vec<usize> = cs.cosets.iter().flat_map(|c| c.members.clone()).collect();
        union.sort();
        assert_eq!(union, (0..6).collect::<Vec<_>>());
        for c in &cs.cosets {
            assert_eq!(c.members.len(), 2);
            assert_eq!(c.representative, *c.members.iter().min().unwrap());
        }
    }

    #[test]
    fn restricted_kernel_examples() {
        let z6 = FiniteGroup::cyclic(6);
        // injective: onto a 6-cycle
        let k = restricted_kernel(&z6, &[p(6, "(0 1 2 3 4 5)")], 6).unwrap();
        assert_eq!(k.kernel.order(), 1);
        // trivial map
        let k = restricted_kernel(&z6, &[Perm::identity(2)], 2).unwrap();
        assert_eq!(k.kernel.order(), 6);
        // reduction onto Z/2: kernel = {0, 2, 4}
        let k = restricted_kernel(&z6, &[p(2, "(0 1)")], 2).unwrap();
        assert_eq!(k.kernel.order(), 3);
        assert_eq!(k.image_order, 2);
        let evens: Vec<Perm> = (0..3).map(|i| z6.generators()[0].pow(2 * i)).collect();
        for e in evens {
            assert!(k.kernel.contains(&e));
        }
        // not a homomorphism: a 6-cycle cannot go to a 4-cycle
        assert!(matches!(
            restricted_kernel(&z6, &[p(4, "(0 1 2 3)")], 4),
            Err(Error::InvalidMarking(_))
        ));
    }

    #[test]
    fn min_generators_examples() {
        assert_eq!(FiniteGroup::trivial(1).min_generators(), 0);
        assert_eq!(FiniteGroup::cyclic(6).min_generators(), 1);
        assert_eq!(FiniteGroup::symmetric(3, &caps()).unwrap().min_generators(), 2);
        let klein = close(4, vec![p(4, "(0 1)"), p(4, "(2 3)")], &caps()).unwrap();
        assert_eq!(klein.min_generators(), 2);
        let z2cubed = close(6, vec![p(6, "(0 1)"), p(6, "(2 3)"), p(6, "(4 5)")], &caps()).unwrap();
        assert_eq!(z2cubed.min_generators(), 3);
    }

    #[test]
    fn pairing_examples() {
        let a = [p(2, "(0 1)")];
        let b = [p(3, "(0 1 2)")];
        assert!(!pairing(&a, &b, &caps()).unwrap().functional);
        let c = [p(4, "(0 1)(2 3)")];
        assert_eq!(pairing(&a, &c, &caps()).unwrap(), Pairing { functional: true, injective: true });
        let z4 = [p(4, "(0 1 2 3)")];
        assert_eq!(pairing(&z4, &a, &caps()).unwrap(), Pairing { functional: true, injective: false });
    }

    fn perm5() -> impl Strategy<Value = Perm> {
        Just((0..5usize).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Perm::from_images(v).unwrap())
    }

    fn perm4() -> impl Strategy<Value = Perm> {
        Just((0..4usize).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Perm::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn cayley_pairing_matches_walk(pairs in prop::collection::vec((perm5(), perm4()), 1..3)) {
            let (a, b): (Vec<Perm>, Vec<Perm>) = pairs.into_iter().unzip();
            let ga = CayleyGraph::new(&close(5, a.clone(), &caps()).unwrap());
            let gb = CayleyGraph::new(&close(4, b.clone(), &caps()).unwrap());
            prop_assert_eq!(ga.maps_to(&gb), pairing(&a, &b, &caps()).unwrap().functional);
        }

        #[test]
        fn closure_independent_of_generator_order(gens in prop::collection::vec(perm5(), 0..3)) {
            let g1 = close(5, gens.clone(), &caps()).unwrap();
            let mut rev = gens.clone();
            rev.reverse();
            let g2 = close(5, rev, &caps()).unwrap();
            prop_assert_eq!(g1.elements(), g2.elements());
            for i in 0..g1.order() {
                prop_assert_eq!(g1.mul(i, g1.inverse_index(i)), g1.identity_index());
            }
        }

        #[test]
        fn lagrange_for_cosets(gens in prop::collection::vec(perm5(), 1..3), sub in perm5()) {
            let g = close(5, gens, &caps()).unwrap();
            if let Ok(s) = subgroup_generated(&g, &[sub]) {
                let cs = coset_space(&g, &s);
                prop_assert_eq!(s.order() * cs.len(), g.order());
            }
        }

        #[test]
        fn kernel_index_identity(gens in prop::collection::vec(perm5(), 1..3), k in 1usize..7) {
            // map every generator of g to the same power of a k-cycle when valid
            let g = close(5, gens, &caps()).unwrap();
            let cyc = FiniteGroup::cyclic(k);
            let c = cyc.generators()[0].clone();
            let images: Vec<Perm> = g.generators().iter().map(|_| c.clone()).collect();
            if let Ok(rk) = restricted_kernel(&g, &images, k) {
                prop_assert_eq!(rk.kernel.order() * rk.image_order, g.order());
            }
        }
    }
}
