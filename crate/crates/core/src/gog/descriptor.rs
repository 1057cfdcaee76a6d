//! Vertex and edge group kinds, and the index of an edge group inside an
//! endpoint vertex group.

use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::permgroup::{restricted_kernel, FiniteGroup, Perm};
use crate::presentation::{evaluate_in, verify_hom, Presentation, Word};
use crate::{rational, Error, Rational, Result};

/// A finite group given both concretely (as permutations) and abstractly
/// (as a presentation on the same generators, in the same order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpec {
    pub group: FiniteGroup,
    pub relators: Vec<Word>,
}

impl FiniteSpec {
    /// Checks that the relators hold for the permutation generators.
    pub fn new(group: FiniteGroup, relators: Vec<Word>, names: &[String]) -> Result<Self> {
        if group.generators().len() != names.len() {
            return Err(Error::Structural(format!(
                "{} permutation generators for {} generator names",
                group.generators().len(),
                names.len()
            )));
        }
        let p = Presentation::new(names.to_vec(), relators.clone())?;
        if !group.generators().is_empty() && !verify_hom(&p, group.generators())? {
            return Err(Error::Structural(
                "a relator does not hold for the permutation generators".into(),
            ));
        }
        Ok(FiniteSpec { group, relators })
    }

    /// `Z/n` on one generator with relator `g^n`; `n = 1` gives the trivial
    /// group with no generators.
    pub fn cyclic(n: usize) -> Self {
        if n == 1 {
            return FiniteSpec { group: FiniteGroup::trivial(1), relators: Vec::new() };
        }
        FiniteSpec { group: FiniteGroup::cyclic(n), relators: vec![Word::power_of(0, n as i64)] }
    }

    pub fn order(&self) -> u64 {
        self.group.order() as u64
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.group.generators();
        g.iter().all(|a| g.iter().all(|b| a.then(b) == b.then(a)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexKind {
    Finite(FiniteSpec),
    FreeRank(u32),
    FreeAbelianRank(u32),
    CyclicZ,
    SurfaceGenus(u32),
    /// A group known only through a generator count, a declared φ value and
    /// whether it is one-ended.
    Opaque { rank_upper: u32, phi: Rational, one_ended: bool },
}

impl VertexKind {
    pub fn tag(&self) -> KindTag {
        match self {
            VertexKind::Finite(_) => KindTag::Finite,
            VertexKind::FreeRank(_) => KindTag::FreeRank,
            VertexKind::FreeAbelianRank(_) => KindTag::FreeAbelianRank,
            VertexKind::CyclicZ => KindTag::CyclicZ,
            VertexKind::SurfaceGenus(_) => KindTag::SurfaceGenus,
            VertexKind::Opaque { .. } => KindTag::Opaque,
        }
    }

    /// Number of abstract generators the kind expects.
    pub fn generator_count(&self) -> usize {
        match self {
            VertexKind::Finite(f) => f.group.generators().len(),
            VertexKind::FreeRank(r) | VertexKind::FreeAbelianRank(r) => *r as usize,
            VertexKind::CyclicZ => 1,
            VertexKind::SurfaceGenus(g) => 2 * *g as usize,
            VertexKind::Opaque { rank_upper, .. } => *rank_upper as usize,
        }
    }

    /// Relators every marking must satisfy, on the standard generators.
    pub fn abstract_relators(&self) -> Vec<Word> {
        match self {
            VertexKind::Finite(f) => f.relators.clone(),
            VertexKind::FreeAbelianRank(r) => commutators(*r as usize),
            VertexKind::SurfaceGenus(g) => vec![surface_relator(*g as usize)],
            _ => Vec::new(),
        }
    }

    pub fn descriptor(&self) -> StabilizerDescriptor {
        match self {
            VertexKind::Finite(f) => StabilizerDescriptor::Finite {
                order: f.order(),
                rank: f.group.min_generators() as u64,
            },
            VertexKind::FreeRank(r) => StabilizerDescriptor::FreeRank(*r as u64),
            VertexKind::FreeAbelianRank(r) => StabilizerDescriptor::FreeAbelianRank(*r),
            VertexKind::CyclicZ => StabilizerDescriptor::CyclicZ,
            VertexKind::SurfaceGenus(g) => StabilizerDescriptor::SurfaceGenus(*g as u64),
            VertexKind::Opaque { rank_upper, phi, one_ended } => StabilizerDescriptor::Opaque {
                rank_upper: *rank_upper as u64,
                phi: phi.clone(),
                one_ended: *one_ended,
            },
        }
    }
}

/// `[x_i, x_j]` for all `i < j`.
pub fn commutators(r: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            out.push(commutator(&Word::generator(i), &Word::generator(j)));
        }
    }
    out
}

/// `a b a^-1 b^-1`.
pub fn commutator(a: &Word, b: &Word) -> Word {
    a.concat(b).concat(&a.inverse()).concat(&b.inverse())
}

/// `[x_0, x_1] [x_2, x_3] ... [x_{2g-2}, x_{2g-1}]`.
pub fn surface_relator(g: usize) -> Word {
    (0..g).fold(Word::identity(), |acc, i| {
        acc.concat(&commutator(&Word::generator(2 * i), &Word::generator(2 * i + 1)))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeKind {
    Trivial,
    Finite(FiniteSpec),
    CyclicZ,
    FreeAbelianRank(u32),
}

impl EdgeKind {
    pub fn generator_count(&self) -> usize {
        match self {
            EdgeKind::Trivial => 0,
            EdgeKind::Finite(f) => f.group.generators().len(),
            EdgeKind::CyclicZ => 1,
            EdgeKind::FreeAbelianRank(m) => *m as usize,
        }
    }

    pub fn abstract_relators(&self) -> Vec<Word> {
        match self {
            EdgeKind::Finite(f) => f.relators.clone(),
            EdgeKind::FreeAbelianRank(m) => commutators(*m as usize),
            _ => Vec::new(),
        }
    }

    /// Rank of an infinite abelian edge group, `None` for finite kinds.
    pub fn abelian_rank(&self) -> Option<u32> {
        match self {
            EdgeKind::CyclicZ => Some(1),
            EdgeKind::FreeAbelianRank(m) => Some(*m),
            _ => None,
        }
    }

    pub fn stabilizer(&self) -> EdgeStabilizer {
        match self {
            EdgeKind::Trivial => EdgeStabilizer::Trivial,
            EdgeKind::Finite(f) if f.order() == 1 => EdgeStabilizer::Trivial,
            EdgeKind::Finite(f) => EdgeStabilizer::Finite {
                order: f.order(),
                rank: f.group.min_generators() as u64,
                abelian: f.is_abelian(),
            },
            EdgeKind::CyclicZ => EdgeStabilizer::CyclicZ,
            EdgeKind::FreeAbelianRank(m) => EdgeStabilizer::FreeAbelianRank(*m),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KindTag {
    Finite,
    FreeRank,
    FreeAbelianRank,
    CyclicZ,
    SurfaceGenus,
    Opaque,
}

impl KindTag {
    pub const ALL: [KindTag; 6] = [
        KindTag::Finite,
        KindTag::FreeRank,
        KindTag::FreeAbelianRank,
        KindTag::CyclicZ,
        KindTag::SurfaceGenus,
        KindTag::Opaque,
    ];

    pub fn name(self) -> &'static str {
        match self {
            KindTag::Finite => "finite",
            KindTag::FreeRank => "free",
            KindTag::FreeAbelianRank => "free_abelian",
            KindTag::CyclicZ => "cyclic_z",
            KindTag::SurfaceGenus => "surface",
            KindTag::Opaque => "opaque",
        }
    }

    pub fn from_name(name: &str) -> Option<KindTag> {
        KindTag::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for KindTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What is known about a vertex group (or a vertex stabilizer of a finite
/// index subgroup) for counting purposes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabilizerDescriptor {
    /// `rank` is the minimal number of generators.
    Finite { order: u64, rank: u64 },
    FreeRank(u64),
    FreeAbelianRank(u32),
    CyclicZ,
    SurfaceGenus(u64),
    Opaque { rank_upper: u64, phi: Rational, one_ended: bool },
}

/// A generator count that is either exact or only an upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankInfo {
    Exact(u64),
    Upper(u64),
}

impl RankInfo {
    pub fn value(self) -> u64 {
        match self {
            RankInfo::Exact(r) | RankInfo::Upper(r) => r,
        }
    }

    pub fn exact(self) -> Option<u64> {
        match self {
            RankInfo::Exact(r) => Some(r),
            RankInfo::Upper(_) => None,
        }
    }
}

impl StabilizerDescriptor {
    pub fn tag(&self) -> KindTag {
        match self {
            StabilizerDescriptor::Finite { .. } => KindTag::Finite,
            StabilizerDescriptor::FreeRank(_) => KindTag::FreeRank,
            StabilizerDescriptor::FreeAbelianRank(_) => KindTag::FreeAbelianRank,
            StabilizerDescriptor::CyclicZ => KindTag::CyclicZ,
            StabilizerDescriptor::SurfaceGenus(_) => KindTag::SurfaceGenus,
            StabilizerDescriptor::Opaque { .. } => KindTag::Opaque,
        }
    }

    pub fn rank(&self) -> RankInfo {
        match self {
            StabilizerDescriptor::Finite { rank, .. } => RankInfo::Exact(*rank),
            StabilizerDescriptor::FreeRank(r) => RankInfo::Exact(*r),
            StabilizerDescriptor::FreeAbelianRank(r) => RankInfo::Exact(*r as u64),
            StabilizerDescriptor::CyclicZ => RankInfo::Exact(1),
            StabilizerDescriptor::SurfaceGenus(g) => RankInfo::Exact(2 * g),
            StabilizerDescriptor::Opaque { rank_upper, .. } => RankInfo::Upper(*rank_upper),
        }
    }

    pub fn order(&self) -> Option<u64> {
        match self {
            StabilizerDescriptor::Finite { order, .. } => Some(*order),
            _ => None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == Some(1)
    }

    /// Infinite cyclic in any of its guises.
    pub fn is_z_like(&self) -> bool {
        matches!(
            self,
            StabilizerDescriptor::CyclicZ
                | StabilizerDescriptor::FreeRank(1)
                | StabilizerDescriptor::FreeAbelianRank(1)
        )
    }

    pub fn is_one_ended(&self) -> bool {
        match self {
            StabilizerDescriptor::FreeAbelianRank(r) => *r >= 2,
            StabilizerDescriptor::SurfaceGenus(_) => true,
            StabilizerDescriptor::Opaque { one_ended, .. } => *one_ended,
            _ => false,
        }
    }

    /// Descriptor of a subgroup of index `index`. Finite kinds need the
    /// subgroup's own order and rank and are handled by the caller.
    pub fn lift_infinite(&self, index: u64) -> StabilizerDescriptor {
        match self {
            StabilizerDescriptor::FreeRank(0) | StabilizerDescriptor::SurfaceGenus(0) => self.clone(),
            StabilizerDescriptor::FreeRank(r) => StabilizerDescriptor::FreeRank(1 + index * (r - 1)),
            StabilizerDescriptor::SurfaceGenus(g) => {
                StabilizerDescriptor::SurfaceGenus(1 + index * (g - 1))
            }
            StabilizerDescriptor::Opaque { rank_upper, phi, one_ended } => StabilizerDescriptor::Opaque {
                rank_upper: index * (rank_upper.max(&1) - 1) + 1,
                phi: phi * Rational::from_integer(index.into()),
                one_ended: *one_ended,
            },
            other => other.clone(),
        }
    }
}

impl fmt::Display for StabilizerDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabilizerDescriptor::Finite { order, .. } => write!(f, "finite({order})"),
            StabilizerDescriptor::FreeRank(r) => write!(f, "free({r})"),
            StabilizerDescriptor::FreeAbelianRank(r) => write!(f, "free_abelian({r})"),
            StabilizerDescriptor::CyclicZ => write!(f, "cyclic_z"),
            StabilizerDescriptor::SurfaceGenus(g) => write!(f, "surface({g})"),
            StabilizerDescriptor::Opaque { rank_upper, phi, .. } => {
                write!(f, "opaque({rank_upper}, {})", rational::to_text(phi))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeStabilizer {
    Trivial,
    Finite { order: u64, rank: u64, abelian: bool },
    CyclicZ,
    FreeAbelianRank(u32),
}

impl EdgeStabilizer {
    pub fn order(&self) -> Option<u64> {
        match self {
            EdgeStabilizer::Trivial => Some(1),
            EdgeStabilizer::Finite { order, .. } => Some(*order),
            _ => None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == Some(1)
    }

    pub fn rank(&self) -> u64 {
        match self {
            EdgeStabilizer::Trivial => 0,
            EdgeStabilizer::Finite { rank, .. } => *rank,
            EdgeStabilizer::CyclicZ => 1,
            EdgeStabilizer::FreeAbelianRank(m) => *m as u64,
        }
    }

    pub fn is_abelian(&self) -> bool {
        match self {
            EdgeStabilizer::Finite { abelian, .. } => *abelian,
            _ => true,
        }
    }

    pub fn is_infinite_abelian(&self) -> bool {
        matches!(self, EdgeStabilizer::CyclicZ | EdgeStabilizer::FreeAbelianRank(_))
    }
}

impl fmt::Display for EdgeStabilizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeStabilizer::Trivial => write!(f, "trivial"),
            EdgeStabilizer::Finite { order, .. } => write!(f, "finite({order})"),
            EdgeStabilizer::CyclicZ => write!(f, "cyclic_z"),
            EdgeStabilizer::FreeAbelianRank(m) => write!(f, "free_abelian({m})"),
        }
    }
}

/// Index of an edge group in an endpoint vertex group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InclusionIndex {
    Finite(u64),
    Infinite,
}

impl InclusionIndex {
    pub fn is_one(self) -> bool {
        self == InclusionIndex::Finite(1)
    }

    /// Index of a chain of inclusions.
    pub fn compose(self, other: InclusionIndex) -> InclusionIndex {
        match (self, other) {
            (InclusionIndex::Finite(a), InclusionIndex::Finite(b)) => InclusionIndex::Finite(a * b),
            _ => InclusionIndex::Infinite,
        }
    }
}

impl fmt::Display for InclusionIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InclusionIndex::Finite(n) => write!(f, "{n}"),
            InclusionIndex::Infinite => write!(f, "inf"),
        }
    }
}

/// Images in the vertex group of the edge generators, for finite vertices.
pub(crate) fn finite_inclusion_images(v: &FiniteSpec, words: &[Word]) -> Result<Vec<Perm>> {
    let d = v.group.degree();
    words.iter().map(|w| evaluate_in(v.group.generators(), d, w)).collect()
}

/// Exponent-sum matrix (one row per edge generator).
fn exponent_matrix(words: &[Word], n: usize) -> Vec<Vec<i64>> {
    words.iter().map(|w| w.exponent_sums(n)).collect()
}

/// Rank of an integer matrix and, when square, its determinant.
#[allow(clippy::needless_range_loop)]
pub(crate) fn rank_and_det(rows: &[Vec<i64>]) -> (usize, Option<Rational>) {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| rational::int(x)).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut det = rational::one();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            det = rational::zero();
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            det = -det;
        }
        let pivot = m[rank][col].clone();
        det *= &pivot;
        for r in rank + 1..nrows {
            let factor = &m[r][col] / &pivot;
            for c in col..ncols {
                let delta = &factor * &m[rank][c];
                m[r][c] -= delta;
            }
        }
        rank += 1;
    }
    let det = (nrows == ncols).then(|| if rank == nrows { det } else { rational::zero() });
    (rank, det)
}

/// Inverse of a square integer matrix, if it is unimodular.
#[allow(clippy::needless_range_loop)]
pub(crate) fn unimodular_inverse(rows: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let n = rows.len();
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<Rational> = r.iter().map(|&x| rational::int(x)).collect();
            row.extend((0..n).map(|j| if i == j { rational::one() } else { rational::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(p, col);
        let pivot = m[col][col].clone();
        for c in 0..2 * n {
            m[col][c] = &m[col][c] / &pivot;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..2 * n {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    m.into_iter()
        .map(|row| {
            row[n..]
                .iter()
                .map(|x| x.is_integer().then(|| x.to_integer().to_i64()).flatten())
                .collect::<Option<Vec<_>>>()
        })
        .collect()
}

/// Index of the edge group (given by `words` in the vertex generators) in the
/// vertex group, decided by kind-specific rules.
pub fn inclusion_index(vertex: &VertexKind, edge: &EdgeKind, words: &[Word]) -> Result<InclusionIndex> {
    use InclusionIndex::{Finite as Fin, Infinite};
    let vgens = vertex.generator_count();
    match (vertex, edge) {
        (VertexKind::Finite(v), EdgeKind::Trivial) => Ok(Fin(v.order())),
        (VertexKind::Finite(v), EdgeKind::Finite(e)) => {
            let images = finite_inclusion_images(v, words)?;
            let rk = restricted_kernel(&e.group, &images, v.group.degree()).map_err(|_| {
                Error::InvalidMarking("edge inclusion is not a homomorphism of the edge group".into())
            })?;
            if rk.kernel.order() != 1 {
                return Err(Error::InvalidMarking("edge inclusion is not injective".into()));
            }
            Ok(Fin(v.order() / rk.image_order as u64))
        }
        (VertexKind::Finite(_), _) => Err(Error::Unsupported(
            "an infinite edge group cannot include into a finite vertex group".into(),
        )),
        (_, EdgeKind::Trivial) => Ok(Infinite),
        (_, EdgeKind::Finite(e)) if e.order() == 1 => Ok(Infinite),
        (VertexKind::Opaque { .. }, EdgeKind::Finite(_)) => Ok(Infinite),
        (_, EdgeKind::Finite(_)) => Err(Error::Unsupported(
            "a nontrivial finite edge group cannot include into a torsion-free vertex group".into(),
        )),
        (VertexKind::Opaque { .. }, _) => Err(Error::Unsupported(
            "inclusion index of an abelian edge group into an opaque vertex group is unknown".into(),
        )),
        (VertexKind::CyclicZ | VertexKind::FreeRank(1) | VertexKind::FreeAbelianRank(1), _) => {
            if edge.abelian_rank() != Some(1) {
                return Err(Error::Unsupported(
                    "a free abelian group of rank at least two cannot include into Z".into(),
                ));
            }
            let e = words[0].exponent_sums(1)[0];
            if e == 0 {
                return Err(Error::InvalidMarking("edge inclusion into Z is not injective".into()));
            }
            Ok(Fin(e.unsigned_abs()))
        }
        (VertexKind::FreeAbelianRank(r), _) => {
            let m = edge.abelian_rank().expect("abelian edge") as usize;
            let rows = exponent_matrix(words, vgens);
            let (rank, det) = rank_and_det(&rows);
            if rank < m {
                return Err(Error::InvalidMarking(
                    "edge inclusion into a free abelian group is not injective".into(),
                ));
            }
            if m < *r as usize {
                return Ok(Infinite);
            }
            let det = det.expect("square").abs();
            Ok(Fin(det.to_integer().to_u64().expect("determinant fits")))
        }
        (VertexKind::FreeRank(_) | VertexKind::SurfaceGenus(_), _) => {
            if edge.abelian_rank() == Some(1) {
                Ok(Infinite)
            } else {
                Err(Error::Unsupported(
                    "a free abelian group of rank at least two does not embed in a free or surface group"
                        .into(),
                ))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::FiniteGroup;

    fn names(n: &[&str]) -> Vec<String> {
        n.iter().map(|s| s.to_string()).collect()
    }

    fn cyclic_spec(n: usize) -> FiniteSpec {
        FiniteSpec::new(FiniteGroup::cyclic(n), vec![Word::power_of(0, n as i64)], &names(&["g"])).unwrap()
    }

    #[test]
    fn finite_indices() {
        let v6 = VertexKind::Finite(cyclic_spec(6));
        assert_eq!(inclusion_index(&v6, &EdgeKind::Trivial, &[]).unwrap(), InclusionIndex::Finite(6));
        let e2 = EdgeKind::Finite(cyclic_spec(2));
        assert_eq!(
            inclusion_index(&v6, &e2, &[Word::power_of(0, 3)]).unwrap(),
            InclusionIndex::Finite(3)
        );
        // g^2 has order 3, so Z/2 -> Z/6 via g^2 is not a homomorphism
        assert!(matches!(
            inclusion_index(&v6, &e2, &[Word::power_of(0, 2)]),
            Err(Error::InvalidMarking(_))
        ));
        let v2 = VertexKind::Finite(cyclic_spec(2));
        assert!(inclusion_index(&v2, &e2, &[Word::generator(0)]).unwrap().is_one());
        assert!(matches!(
            inclusion_index(&v2, &EdgeKind::CyclicZ, &[Word::generator(0)]),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn infinite_indices() {
        let z = VertexKind::CyclicZ;
        assert!(inclusion_index(&z, &EdgeKind::CyclicZ, &[Word::generator(0)]).unwrap().is_one());
        assert_eq!(
            inclusion_index(&z, &EdgeKind::CyclicZ, &[Word::power_of(0, -3)]).unwrap(),
            InclusionIndex::Finite(3)
        );
        assert_eq!(inclusion_index(&z, &EdgeKind::Trivial, &[]).unwrap(), InclusionIndex::Infinite);
        let f2 = VertexKind::FreeRank(2);
        let comm = commutator(&Word::generator(0), &Word::generator(1));
        assert_eq!(
            inclusion_index(&f2, &EdgeKind::CyclicZ, &[comm]).unwrap(),
            InclusionIndex::Infinite
        );
        let z2 = VertexKind::FreeAbelianRank(2);
        let words = [Word::from_letters(vec![1, 1, 2]).unwrap(), Word::generator(1)];
        assert_eq!(
            inclusion_index(&z2, &EdgeKind::FreeAbelianRank(2), &words).unwrap(),
            InclusionIndex::Finite(2)
        );
        assert_eq!(
            inclusion_index(&z2, &EdgeKind::CyclicZ, &[Word::generator(0)]).unwrap(),
            InclusionIndex::Infinite
        );
        assert!(matches!(
            inclusion_index(&f2, &EdgeKind::FreeAbelianRank(2), &words),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn linear_algebra() {
        assert_eq!(rank_and_det(&[vec![2, 1], vec![0, 1]]), (2, Some(rational::int(2))));
        assert_eq!(rank_and_det(&[vec![1, 2], vec![2, 4]]).0, 1);
        assert_eq!(unimodular_inverse(&[vec![1, 1], vec![0, 1]]), Some(vec![vec![1, -1], vec![0, 1]]));
        assert_eq!(unimodular_inverse(&[vec![2, 0], vec![0, 1]]), None);
    }
}
