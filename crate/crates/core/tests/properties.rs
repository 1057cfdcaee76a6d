//! Properties of induced splittings and volume estimates quantified over the
//! seeded random families.

mod common;

use ggvol_core::covering::{coset_counts_check, induce};
use ggvol_core::enumeration::{is_torsion_free_kernel, FiniteQuotient};
use ggvol_core::gog::PhiTable;
use ggvol_core::rational::frac;
use ggvol_core::volumes::{estimate_volume, VolumeMode};
use ggvol_core::Caps;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn instance(seed: u64) -> common::Instance {
    common::random_instance(&mut ChaCha8Rng::seed_from_u64(seed), &Caps::default())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coset_counts_hold(seed in any::<u64>()) {
        let inst = instance(seed);
        let s = induce(&inst.splitting, &inst.catalog.entries()[0]).unwrap();
        prop_assert!(coset_counts_check(&s));
        let lifts: usize = s.base_vertices.iter().map(|b| b.lifts).sum::<usize>()
            + s.base_edges.iter().map(|b| b.lifts).sum::<usize>();
        prop_assert_eq!(s.vertices.len() + s.edges.len(), lifts);
    }

    #[test]
    fn trivial_quotient_keeps_complexity(seed in any::<u64>()) {
        let inst = instance(seed);
        let y = &inst.splitting;
        let s = induce(y, &FiniteQuotient::trivial(y.ambient())).unwrap();
        prop_assert_eq!(s.complexity().unwrap(), y.complexity().unwrap());
        prop_assert_eq!(s.vertices.len(), y.vertices().len());
    }

    #[test]
    fn phi_is_multiplicative(seed in any::<u64>()) {
        let inst = instance(seed);
        let phi = PhiTable::vfin();
        let base = inst.splitting.skeleton().unwrap();
        let s = induce(&inst.splitting, &inst.catalog.entries()[0]).unwrap();
        let values = s.vertex_phis(&phi).unwrap();
        for (v, value) in s.vertices.iter().zip(values) {
            let b = base.vertex_position(&v.base).unwrap();
            let want = base.vertex_phi(b, &phi).unwrap() * frac(v.stabilizer_index as i64, 1);
            prop_assert_eq!(value, want, "{}", v.id);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn torsion_free_residuals_of_finite_free_products(orders in prop::collection::vec(2u32..=4, 2..=3), bound in 2u64..=6) {
        let y = ggvol_core::interface::builtin::free_product_finite_cyclics(&orders).unwrap();
        let caps = Caps::default();
        let catalog = ggvol_core::enumeration::normal_subgroups(y.ambient(), bound, &caps).unwrap();
        let est = estimate_volume(&y, &catalog, VolumeMode::Plain, &PhiTable::vfin(), &caps).unwrap();
        for row in &est.rows {
            let q = catalog.get(&row.quotient_id).unwrap();
            if is_torsion_free_kernel(&y, q).unwrap() {
                prop_assert_eq!(&row.residual.as_ref().unwrap().0, &frac(1, row.index as i64));
            }
        }
    }
}
