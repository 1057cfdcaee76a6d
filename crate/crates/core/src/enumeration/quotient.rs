use rayon::prelude::*;

use crate::gog::{GraphOfGroups, VertexKind};
use crate::permgroup::{close, pairing, restricted_kernel, FiniteGroup, Perm};
use crate::presentation::{GroupMap, Presentation, Word};
use crate::{Caps, Error, Result};

/// A map from the ambient group onto a finite permutation group. Its kernel
/// is a normal subgroup of index `image.order()`.
#[derive(Debug, Clone)]
pub struct FiniteQuotient {
    id: String,
    map: GroupMap,
    image: FiniteGroup,
}

impl PartialEq for FiniteQuotient {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id && self.map == other.map
    }
}

impl FiniteQuotient {
    pub fn new(id: impl Into<String>, map: GroupMap, caps: &Caps) -> Result<Self> {
        let image = close(map.degree(), map.images().to_vec(), caps)?;
        Ok(FiniteQuotient { id: id.into(), map, image })
    }

    /// A quotient whose image has already been closed from `map`'s images.
    pub(crate) fn from_closed(id: impl Into<String>, map: GroupMap, image: FiniteGroup) -> Self {
        FiniteQuotient { id: id.into(), map, image }
    }

    /// The quotient onto the trivial group.
    pub fn trivial(p: &Presentation) -> Self {
        let images = vec![Perm::identity(1); p.generators().len()];
        let map = GroupMap::new(p.clone(), 1, images).expect("trivial map");
        FiniteQuotient::new("q1.1", map, &Caps::default()).expect("trivial image")
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    pub fn map(&self) -> &GroupMap {
        &self.map
    }

    pub fn image(&self) -> &FiniteGroup {
        &self.image
    }

    pub fn images(&self) -> &[Perm] {
        self.map.images()
    }

    /// Index of the kernel, which is the order of the image.
    pub fn index(&self) -> u64 {
        self.image.order() as u64
    }

    pub fn evaluate(&self, w: &Word) -> Result<Perm> {
        self.map.evaluate(w)
    }
}

/// All homomorphisms from `p` into `q`, as generator image tuples in
/// lexicographic order of element positions.
pub fn enumerate_homs(p: &Presentation, q: &FiniteGroup, caps: &Caps) -> Result<Vec<GroupMap>> {
    let n = p.generators().len() as u32;
    let order = q.order() as u64;
    let count = order
        .checked_pow(n)
        .filter(|&c| c <= caps.candidates)
        .ok_or(Error::Resource { cap: "candidates", value: caps.candidates })?;
    let decode = |mut i: u64| -> Vec<Perm> {
        let mut t = vec![Perm::identity(q.degree()); n as usize];
        for slot in t.iter_mut().rev() {
            *slot = q.element((i % order) as usize).clone();
            i /= order;
        }
        t
    };
    let mut good: Vec<u64> = (0..count)
        .into_par_iter()
        .filter(|&i| {
            let images = decode(i);
            p.failing_relator(&images, q.degree()).map(|r| r.is_none()).unwrap_or(false)
        })
        .collect();
    good.sort_unstable();
    good.into_iter()
        .map(|i| GroupMap::new(p.clone(), q.degree(), decode(i)))
        .collect()
}

/// Whether two quotients of the same group have the same kernel.
pub fn kernels_equal(q1: &FiniteQuotient, q2: &FiniteQuotient, caps: &Caps) -> Result<bool> {
    if q1.index() != q2.index() {
        return Ok(false);
    }
    let p = pairing(q1.images(), q2.images(), caps)?;
    Ok(p.functional && p.injective)
}

/// Whether `q` factors through `through`, that is, whether the kernel of
/// `through` is contained in the kernel of `q`.
pub fn factors_through(q: &FiniteQuotient, through: &FiniteQuotient, caps: &Caps) -> Result<bool> {
    if !through.index().is_multiple_of(q.index()) {
        return Ok(false);
    }
    Ok(pairing(through.images(), q.images(), caps)?.functional)
}

/// Images in the quotient of a vertex's marking words.
pub fn marking_images(q: &FiniteQuotient, words: &[Word]) -> Result<Vec<Perm>> {
    words.iter().map(|w| q.evaluate(w)).collect()
}

/// Whether the kernel of `q` is torsion-free, which for the supported kinds
/// means `q` is injective on every finite vertex group.
pub fn is_torsion_free_kernel(y: &GraphOfGroups, q: &FiniteQuotient) -> Result<bool> {
    if let Some(v) = y.vertices().iter().find(|v| matches!(v.kind, VertexKind::Opaque { .. })) {
        return Err(Error::Unsupported(format!(
            "torsion of the opaque vertex group `{}` is unknown",
            v.id
        )));
    }
    for v in y.vertices() {
        if let VertexKind::Finite(f) = &v.kind {
            let images = marking_images(q, &v.marking)?;
            let rk = restricted_kernel(&f.group, &images, q.map().degree()).map_err(|_| {
                Error::InvalidMarking(format!(
                    "marking of vertex `{}` does not give a homomorphism into quotient `{}`",
                    v.id,
                    q.id()
                ))
            })?;
            if rk.kernel.order() > 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interface::builtin::{free_product_finite_cyclics, wedge};

    fn caps() -> Caps {
        Caps::default()
    }

    fn quotient(p: &Presentation, degree: usize, images: &[&str]) -> FiniteQuotient {
        let images = images.iter().map(|s| Perm::parse(degree, s).unwrap()).collect();
        FiniteQuotient::new("q", GroupMap::new(p.clone(), degree, images).unwrap(), &caps()).unwrap()
    }

    #[test]
    fn hom_counts() {
        let f2 = Presentation::parse(&["a", "b"], &[]).unwrap();
        assert_eq!(enumerate_homs(&f2, &FiniteGroup::cyclic(2), &caps()).unwrap().len(), 4);
        let z2 = Presentation::parse(&["a"], &["a^2"]).unwrap();
        assert_eq!(enumerate_homs(&z2, &FiniteGroup::cyclic(3), &caps()).unwrap().len(), 1);
        let modular = Presentation::parse(&["a", "b"], &["a^2", "b^3"]).unwrap();
        let s3 = FiniteGroup::symmetric(3, &caps()).unwrap();
        let homs = enumerate_homs(&modular, &s3, &caps()).unwrap();
        // oracle: count elements of order dividing 2 and 3 directly
        let div = |k: usize| s3.elements().iter().filter(|e| k.is_multiple_of(e.order())).count();
        assert_eq!(homs.len(), div(2) * div(3));
        assert_eq!(homs.len(), 12);
        let tiny = Caps { candidates: 10, ..caps() };
        assert!(matches!(
            enumerate_homs(&modular, &s3, &tiny),
            Err(Error::Resource { cap: "candidates", value: 10 })
        ));
    }

    #[test]
    fn kernel_equality() {
        let f2 = Presentation::parse(&["a", "b"], &[]).unwrap();
        let q1 = quotient(&f2, 2, &["(0 1)", "()"]);
        let q2 = quotient(&f2, 2, &["()", "(0 1)"]);
        let q3 = quotient(&f2, 3, &["(0 1 2)", "()"]);
        assert!(kernels_equal(&q1, &q1, &caps()).unwrap());
        assert!(!kernels_equal(&q1, &q3, &caps()).unwrap());
        // `a` lies in the kernel of q2 but not of q1
        let a = Word::generator(0);
        assert!(!q1.evaluate(&a).unwrap().is_identity());
        assert!(q2.evaluate(&a).unwrap().is_identity());
        assert!(!kernels_equal(&q1, &q2, &caps()).unwrap());
        // the same kernel written on a different number of points
        let q1b = quotient(&f2, 4, &["(0 1)(2 3)", "()"]);
        assert!(kernels_equal(&q1, &q1b, &caps()).unwrap());
        let q6 = quotient(&f2, 6, &["(0 1 2 3 4 5)", "()"]);
        assert!(factors_through(&q1, &q6, &caps()).unwrap());
        assert!(!factors_through(&q6, &q1, &caps()).unwrap());
    }

    #[test]
    fn torsion_free_examples() {
        let y = free_product_finite_cyclics(&[2, 3]).unwrap();
        let p = y.ambient();
        assert!(!is_torsion_free_kernel(&y, &FiniteQuotient::trivial(p)).unwrap());
        let z6 = quotient(p, 6, &["(0 3)(1 4)(2 5)", "(0 2 4)(1 3 5)"]);
        assert!(is_torsion_free_kernel(&y, &z6).unwrap());
        let w = wedge(2).unwrap();
        assert!(is_torsion_free_kernel(&w, &FiniteQuotient::trivial(w.ambient())).unwrap());
    }
}
