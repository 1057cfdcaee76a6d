use crate::permgroup::{close, CayleyGraph, FiniteGroup, Perm};
use crate::presentation::{GroupMap, Presentation};
use crate::{Caps, Error, Result};

use super::lowindex::normal_coset_actions;
use super::quotient::{enumerate_homs, kernels_equal, FiniteQuotient};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogKind {
    /// Every normal subgroup of index at most the bound.
    Normal,
    /// Kernels of maps onto cyclic groups of order at most the bound.
    Cyclic,
}

/// Finite quotients with pairwise distinct kernels, sorted by index and then
/// by generator images. Ids are `q<index>.<position within index>`.
#[derive(Debug, Clone)]
pub struct SubgroupCatalog {
    presentation: Presentation,
    max_index: u64,
    kind: CatalogKind,
    entries: Vec<FiniteQuotient>,
}

impl SubgroupCatalog {
    fn assemble(
        presentation: &Presentation,
        max_index: u64,
        kind: CatalogKind,
        mut quotients: Vec<FiniteQuotient>,
    ) -> Self {
        quotients.sort_by(|a, b| (a.index(), a.images()).cmp(&(b.index(), b.images())));
        let mut entries = Vec::with_capacity(quotients.len());
        let mut k = 0;
        for (i, q) in quotients.into_iter().enumerate() {
            k = if i > 0 && entries.last().is_some_and(|p: &FiniteQuotient| p.index() == q.index()) {
                k + 1
            } else {
                1
            };
            let id = format!("q{}.{k}", q.index());
            entries.push(q.with_id(id));
        }
        SubgroupCatalog { presentation: presentation.clone(), max_index, kind, entries }
    }

    /// A catalog made of the given quotients, renamed and sorted. Kernels
    /// are assumed distinct.
    pub fn from_quotients(
        presentation: &Presentation,
        max_index: u64,
        kind: CatalogKind,
        quotients: Vec<FiniteQuotient>,
    ) -> Self {
        Self::assemble(presentation, max_index, kind, quotients)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn max_index(&self) -> u64 {
        self.max_index
    }

    pub fn kind(&self) -> CatalogKind {
        self.kind
    }

    pub fn entries(&self) -> &[FiniteQuotient] {
        &self.entries
    }

    pub fn get(&self, id: &str) -> Option<&FiniteQuotient> {
        self.entries.iter().find(|q| q.id() == id)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Every normal subgroup of index at most `max_index`, each given by its
/// regular coset action.
pub fn normal_subgroups(p: &Presentation, max_index: u64, caps: &Caps) -> Result<SubgroupCatalog> {
    let actions = normal_coset_actions(p, max_index as usize, caps)?;
    let quotients = actions
        .into_iter()
        .map(|images| {
            let degree = images.first().map_or(1, Perm::degree);
            FiniteQuotient::new("", GroupMap::new(p.clone(), degree, images)?, caps)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SubgroupCatalog::assemble(p, max_index, CatalogKind::Normal, quotients))
}

/// The same catalog computed by brute force: all maps into symmetric groups
/// of degree at most `max_index` with image of order at most `max_index`,
/// deduplicated by kernel. Only practical for very small bounds.
pub fn normal_subgroups_by_enumeration(p: &Presentation, max_index: u64, caps: &Caps) -> Result<SubgroupCatalog> {
    if max_index == 0 {
        return Err(Error::Precondition("max index must be at least 1".into()));
    }
    let mut found: Vec<FiniteQuotient> = Vec::new();
    for d in 1..=max_index as usize {
        let sd = FiniteGroup::symmetric(d, caps)?;
        for map in enumerate_homs(p, &sd, caps)? {
            let q = FiniteQuotient::new("", map, caps)?;
            if q.index() > max_index {
                continue;
            }
            let mut new = true;
            for f in &found {
                if kernels_equal(f, &q, caps)? {
                    new = false;
                    break;
                }
            }
            if new {
                found.push(q);
            }
        }
    }
    Ok(SubgroupCatalog::assemble(p, max_index, CatalogKind::Normal, found))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Kernels of maps onto `Z/k`, `k <= max_k`. With `generator = Some(i)` only
/// the map sending generator `i` to 1 and every other generator to 0 is
/// used for each `k`; otherwise all surjections, one per kernel.
pub fn cyclic_quotients(
    p: &Presentation,
    max_k: u64,
    generator: Option<usize>,
    caps: &Caps,
) -> Result<SubgroupCatalog> {
    if max_k == 0 {
        return Err(Error::Precondition("max index must be at least 1".into()));
    }
    let n = p.generators().len();
    if let Some(g) = generator {
        if g >= n {
            return Err(Error::Configuration(format!("generator index {g} out of range")));
        }
    }
    let mut quotients = Vec::new();
    for k in 1..=max_k {
        let cycle = FiniteGroup::cyclic(k as usize).generators().first().cloned();
        let cycle = cycle.unwrap_or_else(|| Perm::identity(1));
        let d = cycle.degree();
        let tuples: Vec<Vec<u64>> = match generator {
            Some(g) => vec![(0..n).map(|i| u64::from(i == g)).collect()],
            None => {
                let units: Vec<u64> = (1..k.max(2)).filter(|&u| gcd(u, k) == 1).collect();
                let total = k.checked_pow(n as u32).filter(|&t| t <= caps.candidates);
                let total = total.ok_or(Error::Resource { cap: "candidates", value: caps.candidates })?;
                (0..total)
                    .map(|mut i| {
                        let mut t = vec![0u64; n];
                        for slot in t.iter_mut().rev() {
                            *slot = i % k;
                            i /= k;
                        }
                        t
                    })
                    .filter(|t| t.iter().fold(k, |g, &x| gcd(g, x)) == 1)
                    .filter(|t| {
                        units.iter().all(|&u| {
                            let scaled: Vec<u64> = t.iter().map(|&x| x * u % k).collect();
                            *t <= scaled
                        })
                    })
                    .collect()
            }
        };
        for t in tuples {
            let images: Vec<Perm> = t.iter().map(|&e| cycle.pow(e as i64)).collect();
            match GroupMap::new(p.clone(), d, images) {
                Ok(map) => {
                    let q = FiniteQuotient::new("", map, caps)?;
                    if q.index() == k {
                        quotients.push(q);
                    }
                }
                Err(Error::Structural(_)) if generator.is_none() => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(SubgroupCatalog::assemble(p, max_k, CatalogKind::Cyclic, quotients))
}

/// One term of the descending chain: the intersection of all catalog
/// kernels of index at most `n`.
#[derive(Debug, Clone)]
pub struct ChainStep {
    pub n: u64,
    pub quotient: FiniteQuotient,
    /// Catalog entries whose product realises the intersection.
    pub factors: Vec<String>,
}

/// The descending chain, stopping early if a product image would exceed
/// `caps.product`. The error that stopped it is returned alongside.
pub fn descending_chain_partial(c: &SubgroupCatalog, caps: &Caps) -> (Vec<ChainStep>, Option<Error>) {
    let mut steps = Vec::new();
    let mut product = FiniteQuotient::trivial(c.presentation());
    let mut graph = CayleyGraph::new(product.image());
    let mut factors: Vec<String> = Vec::new();
    let mut next = 0;
    let product_caps = Caps { closure: caps.product.min(caps.closure), ..*caps };
    for n in 1..=c.max_index() {
        while next < c.len() && c.entries()[next].index() <= n {
            let e = &c.entries()[next];
            next += 1;
            if product.index().is_multiple_of(e.index()) && graph.maps_to(&CayleyGraph::new(e.image())) {
                continue;
            }
            let merged = if factors.is_empty() {
                Ok(e.clone())
            } else {
                let images: Vec<Perm> = product
                    .images()
                    .iter()
                    .zip(e.images())
                    .map(|(a, b)| Perm::disjoint_sum(&[a, b]))
                    .collect();
                let degree = product.map().degree() + e.map().degree();
                GroupMap::new(c.presentation().clone(), degree, images)
                    .and_then(|m| match close(degree, m.images().to_vec(), &product_caps) {
                        Ok(image) => Ok(FiniteQuotient::from_closed("", m, image)),
                        Err(Error::Resource { .. }) => {
                            Err(Error::Resource { cap: "product", value: caps.product as u64 })
                        }
                        Err(other) => Err(other),
                    })
            };
            match merged {
                Ok(m) => {
                    graph = CayleyGraph::new(m.image());
                    product = m;
                    factors.push(e.id().to_string());
                }
                Err(err) => return (steps, Some(err)),
            }
        }
        steps.push(ChainStep {
            n,
            quotient: product.clone().with_id(format!("chain{n}")),
            factors: factors.clone(),
        });
    }
    (steps, None)
}

/// The full descending chain, or a resource error if a product exceeds
/// `caps.product`.
pub fn descending_chain(c: &SubgroupCatalog, caps: &Caps) -> Result<Vec<ChainStep>> {
    match descending_chain_partial(c, caps) {
        (steps, None) => Ok(steps),
        (_, Some(e)) => Err(e),
    }
}
