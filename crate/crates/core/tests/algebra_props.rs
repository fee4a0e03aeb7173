use std::sync::Arc;

use proptest::prelude::*;
use quiver_tensor::random::Generator;
use quiver_tensor::rep::{hom_space, RepMorphism, Representation};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn idempotents_are_orthogonal_and_sum_to_one(seed in any::<u64>()) {
        let alg = Generator::new(seed).ordered_algebra(6, 10);
        let n = alg.quiver().vertex_count();
        let mut sum = alg.zero();
        for a in 0..n {
            for b in 0..n {
                let prod = alg.mul(&alg.idempotent(a), &alg.idempotent(b));
                let expected = if a == b { alg.idempotent(a) } else { alg.zero() };
                prop_assert_eq!(prod, expected);
            }
            sum = sum.iter().zip(alg.idempotent(a)).map(|(x, y)| x + &y).collect();
        }
        prop_assert_eq!(sum, alg.one());
    }

    #[test]
    fn blocks_follow_the_order(seed in any::<u64>()) {
        let alg = Generator::new(seed).ordered_algebra(6, 10);
        let q = alg.quiver();
        let order = q.admissible_order().unwrap();
        let pos = |v: usize| order.iter().position(|&w| w == v).unwrap();
        let n = q.vertex_count();
        let mut total = 0;
        for a in 0..n {
            for b in 0..n {
                total += alg.block_dim(a, b);
                if pos(a) > pos(b) {
                    prop_assert_eq!(alg.block_dim(a, b), 0);
                }
            }
        }
        prop_assert_eq!(total, alg.dim());
    }

    #[test]
    fn semisimple_quotient_is_diagonal(seed in any::<u64>()) {
        let alg = Generator::new(seed).ordered_algebra(6, 10);
        let table = alg.semisimple_quotient_table();
        for (a, row) in table.iter().enumerate() {
            for (b, v) in row.iter().enumerate() {
                for (c, x) in v.iter().enumerate() {
                    prop_assert_eq!(x.is_one(), a == b && b == c);
                    prop_assert!(x.is_zero() || x.is_one());
                }
            }
        }
    }

    #[test]
    fn module_maps_match_path_classes(seed in any::<u64>()) {
        let alg = Generator::new(seed).ordered_algebra(5, 8);
        let n = alg.quiver().vertex_count();
        for a in 0..n {
            for b in 0..n {
                prop_assert_eq!(alg.module_hom_space(a, b).len(), alg.block_dim(a, b));
            }
        }
    }

    #[test]
    fn commutativity_relations_are_tensor(seed in any::<u64>()) {
        let alg = Generator::new(seed).ordered_algebra(6, 10);
        prop_assert!(alg.tensor_check().is_tensor);
    }

    #[test]
    fn tensor_closes_the_relations(seed in any::<u64>()) {
        let mut g = Generator::new(seed);
        let alg = g.ordered_algebra(5, 8);
        let v = g.module(&alg, 5);
        let w = g.module(&alg, 5);
        prop_assert!(v.tensor(&w).unwrap().satisfies(alg.relations()));
    }

    #[test]
    fn tensor_of_morphisms_is_functorial(seed in any::<u64>()) {
        let mut g = Generator::new(seed);
        let alg = g.ordered_algebra(4, 6);
        let mods: Vec<Representation> = (0..6).map(|_| g.module(&alg, 3)).collect();
        let (v0, v1, v2, w0, w1, w2) = (&mods[0], &mods[1], &mods[2], &mods[3], &mods[4], &mods[5]);
        let f1 = g.morphism(v0, v1).unwrap();
        let f2 = g.morphism(v1, v2).unwrap();
        let g1 = g.morphism(w0, w1).unwrap();
        let g2 = g.morphism(w1, w2).unwrap();
        let lhs = f2.tensor(&g2).after(&f1.tensor(&g1));
        let rhs = f2.after(&f1).tensor(&g2.after(&g1));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(f1.tensor(&g1).is_morphism(&v0.tensor(w0).unwrap(), &v1.tensor(w1).unwrap()));
    }

    #[test]
    fn restriction_respects_tensor(seed in any::<u64>(), mask in 1u32..64) {
        let mut g = Generator::new(seed);
        let alg = g.ordered_algebra(6, 10);
        let q = alg.quiver_arc();
        let verts: Vec<usize> = (0..q.vertex_count()).filter(|v| mask & (1 << v) != 0).collect();
        prop_assume!(!verts.is_empty());
        let sub = q.full_subquiver(&verts).unwrap();
        let v = g.module(&alg, 4);
        let w = g.module(&alg, 4);
        let restricted = v.tensor(&w).unwrap().restrict(&sub);
        prop_assert_eq!(restricted, v.restrict(&sub).tensor(&w.restrict(&sub)).unwrap());

        let local = Arc::new(sub.quiver.clone());
        let (a, b) = (v.restrict(&sub), w.restrict(&sub));
        let extended = a.tensor(&b).unwrap().extend_by_zero(&sub, Arc::clone(&q)).unwrap();
        let separately = a.extend_by_zero(&sub, Arc::clone(&q)).unwrap().tensor(&b.extend_by_zero(&sub, Arc::clone(&q)).unwrap()).unwrap();
        prop_assert_eq!(extended, separately);
        let unit = Representation::unit(Arc::clone(&local), alg.field()).extend_by_zero(&sub, Arc::clone(&q)).unwrap();
        prop_assert_eq!(unit == Representation::unit(q.clone(), alg.field()), verts.len() == q.vertex_count());
    }

    #[test]
    fn identity_is_neutral(seed in any::<u64>()) {
        let mut g = Generator::new(seed);
        let alg = g.ordered_algebra(5, 8);
        let v = g.module(&alg, 5);
        let w = g.module(&alg, 5);
        for f in hom_space(&v, &w).unwrap() {
            prop_assert_eq!(&f.after(&RepMorphism::identity(&v)), &f);
            prop_assert_eq!(&RepMorphism::identity(&w).after(&f), &f);
        }
    }
}
