use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use proptest::prelude::*;
use quiver_tensor::complex::{BoundedComplex, ChainMap};
use quiver_tensor::random::Generator;
use quiver_tensor::rep::Representation;
use quiver_tensor::spectrum::{ideal_of, IdealDescriptor};
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn support_is_multiplicative(seed in any::<u64>()) {
        let mut g = Generator::new(seed);
        let alg = g.ordered_algebra(5, 8);
        let v = g.complex(&alg, 3);
        let w = g.complex(&alg, 3);
        let (sv, sw) = (v.support(), w.support());
        prop_assert_eq!(v.tensor(&w).unwrap().support(), sv.intersection(&sw).copied().collect::<BTreeSet<_>>());
        prop_assert_eq!(v.direct_sum(&w).unwrap().support(), sv.union(&sw).copied().collect::<BTreeSet<_>>());
    }

    #[test]
    fn shifts_keep_support(seed in any::<u64>(), j in -3i32..=3) {
        let mut g = Generator::new(seed);
        let alg = g.ordered_algebra(5, 8);
        let v = g.complex(&alg, 4);
        let shifted = v.shift(j);
        prop_assert_eq!(shifted.support(), v.support());
        for n in 0..alg.quiver().vertex_count() {
            prop_assert_eq!(shifted.cohomology_at(n), v.cohomology_at(n).shift(j));
        }
    }

    #[test]
    fn full_support_generates_the_unit_ideal(seed in any::<u64>()) {
        let mut g = Generator::new(seed);
        let alg = g.ordered_algebra(5, 8);
        let q = alg.quiver_arc();
        let v = g.complex(&alg, 4);
        let ideal = ideal_of(&q, std::slice::from_ref(&v));
        prop_assert_eq!(ideal.is_unit(), v.support().len() == q.vertex_count());
        let unit = BoundedComplex::concentrated(Representation::unit(Arc::clone(&q), alg.field()), 0);
        prop_assert!(ideal_of(&q, &[unit]).is_unit());
    }

    #[test]
    fn support_is_the_set_of_primes_missing_v(seed in any::<u64>()) {
        let mut g = Generator::new(seed);
        let alg = g.ordered_algebra(5, 8);
        let n = alg.quiver().vertex_count();
        let v = g.complex(&alg, 4);
        let missing: BTreeSet<usize> = (0..n).filter(|&m| !IdealDescriptor::prime_at(n, m).contains(&v)).collect();
        prop_assert_eq!(missing, v.support());
    }

    #[test]
    fn cone_euler_characteristic(seed in any::<u64>()) {
        let mut g = Generator::new(seed);
        let alg = g.ordered_algebra(5, 8);
        let x = g.module(&alg, 4);
        let y = g.module(&alg, 4);
        let f = g.morphism(&x, &y).unwrap();
        let deg = g.rng().gen_range(-2..=2);
        let v = BoundedComplex::concentrated(x, deg);
        let w = BoundedComplex::concentrated(y, deg);
        let map = ChainMap::new(BTreeMap::from([(deg, f)]));
        map.check(&v, &w).unwrap();
        let cone = BoundedComplex::cone(&map, &v, &w).unwrap();
        for n in 0..alg.quiver().vertex_count() {
            let chi = |c: &BoundedComplex| c.eval_f(n).euler_characteristic();
            prop_assert_eq!(chi(&cone), chi(&w) - chi(&v));
        }
    }

    #[test]
    fn tensor_is_unital_and_commutative_up_to_cohomology(seed in any::<u64>()) {
        let mut g = Generator::new(seed);
        let alg = g.ordered_algebra(4, 6);
        let v = g.complex(&alg, 3);
        let w = g.complex(&alg, 3);
        let unit = BoundedComplex::concentrated(Representation::unit(alg.quiver_arc(), alg.field()), 0);
        let vw = v.tensor(&w).unwrap();
        let wv = w.tensor(&v).unwrap();
        let uv = unit.tensor(&v).unwrap();
        for n in 0..alg.quiver().vertex_count() {
            prop_assert_eq!(vw.cohomology_at(n), wv.cohomology_at(n));
            prop_assert_eq!(vw.cohomology_at(n), v.cohomology_at(n).tensor(&w.cohomology_at(n)));
            prop_assert_eq!(uv.cohomology_at(n), v.cohomology_at(n));
        }
    }
}
