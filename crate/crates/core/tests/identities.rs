mod common;

use common::{config, nonzero_rational, rescaled_point_config, small_rational, vec2};
use dets2_core::det_s2::equal_on;
use dets2_core::realizability::PointQuad;
use dets2_core::scalar::int;
use dets2_core::universality::canonical_coefficients;
use dets2_core::*;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

fn to_f64(c: &Configuration<Rational>) -> Configuration<f64> {
    c.map(|x| x.to_f64().unwrap())
}

fn with_equal_triple(c: Configuration<Rational>, t: Triple, v: Vec2<Rational>) -> Configuration<Rational> {
    t.edges().into_iter().fold(c, |acc, p| acc.with(p, v.clone()))
}

fn linear_map() -> impl Strategy<Value = LinearMap2<Rational>> {
    (small_rational(), small_rational(), small_rational(), small_rational())
        .prop_map(|(a, b, c, d)| LinearMap2::new(a, b, c, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn three_formulas_agree(c in config()) {
        let direct = det_s2_direct(&c);
        prop_assert_eq!(&direct, &det_s2_inner_product(&c));
        prop_assert_eq!(&direct, &det_s2_via_matrix(&c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn multilinear_in_every_slot(
        c in config(),
        slot in 0usize..6,
        a in small_rational(),
        b in small_rational(),
        u in vec2(),
        w in vec2(),
    ) {
        let p = Pair::ALL[slot];
        let mixed = c.with(p, u.scale(&a).add(&w.scale(&b)));
        let lhs = det_s2_direct(&mixed);
        let rhs = a * det_s2_direct(&c.with(p, u)) + b * det_s2_direct(&c.with(p, w));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn homogeneous_of_degree_one_per_slot(c in config(), slot in 0usize..6, mu in small_rational()) {
        let p = Pair::ALL[slot];
        let scaled = c.with(p, c.at(p).scale(&mu));
        prop_assert_eq!(det_s2_direct(&scaled), mu * det_s2_direct(&c));
    }

    #[test]
    fn equal_triple_forces_zero(c in config(), t in 0usize..4, v in vec2()) {
        let t = Triple::ALL[t];
        let c = with_equal_triple(c, t, v);
        prop_assert!(equal_on(&c, t));
        prop_assert!(has_equal_triple(&c));
        prop_assert!(det_s2_direct(&c).is_zero());
        prop_assert!(canonical_coefficients().evaluate(&c).is_zero());
    }

    #[test]
    fn float_backend_tracks_exact(
        c in proptest::array::uniform6((-10i64..=10, -10i64..=10, 1i64..=10, 1i64..=10))
    ) {
        let c = Configuration::new(c.map(|(a, b, p, q)| Vec2::new(scalar::ratio(a * p, q * 10), scalar::ratio(b * q, p * 10))));
        let exact = det_s2_direct(&c).to_f64().unwrap();
        let fc = to_f64(&c);
        prop_assert!((det_s2_direct(&fc) - exact).abs() <= 1e-9);
        prop_assert!((det_s2_inner_product(&fc) - exact).abs() <= 1e-9);
        prop_assert!((det_s2_via_matrix(&fc) - exact).abs() <= 1e-9);
    }

    #[test]
    fn sign_law_for_every_permutation(c in config()) {
        let base = det_s2(&c);
        for p in Permutation::all() {
            prop_assert_eq!(det_s2(&act_permutation(&p, &c)), permutation_sign::<Rational>(&p) * base.clone());
        }
    }

    #[test]
    fn left_action_law(c in config(), s in 0usize..24, t in 0usize..24) {
        let all = Permutation::all();
        let (s, t) = (all[s], all[t]);
        prop_assert_eq!(act_permutation(&s, &act_permutation(&t, &c)), act_permutation(&(s * t), &c));
    }

    #[test]
    fn cube_of_determinant_law(c in config(), t in linear_map()) {
        let d = t.det();
        prop_assert_eq!(det_s2(&act_linear_map(&t, &c)), d.clone() * d.clone() * d * det_s2(&c));
    }

    #[test]
    fn special_linear_invariance(c in config(), k in small_rational(), swap in any::<bool>()) {
        let t = if swap {
            LinearMap2::new(int(1), int(0), k, int(1))
        } else {
            LinearMap2::new(int(1), k, int(0), int(1))
        };
        prop_assert_eq!(t.det(), int(1));
        prop_assert_eq!(det_s2(&act_linear_map(&t, &c)), det_s2(&c));
    }

    #[test]
    fn perpendicular_family_vanishes(
        v in proptest::array::uniform3(vec2().prop_filter("nonzero", |v| !v.is_zero())),
        k in proptest::array::uniform3(nonzero_rational()),
    ) {
        let [v1, v2, v3] = v;
        let c = Configuration::new([
            v1.clone(), v2.clone(), v3.clone(),
            v3.perp().scale(&k[0]), v2.perp().scale(&k[1]), v1.perp().scale(&k[2]),
        ]);
        prop_assert!(det_s2_inner_product(&c).is_zero());
        prop_assert!(det_s2_direct(&c).is_zero());
    }

    #[test]
    fn point_configs_vanish(q in common::quad()) {
        prop_assert!(det_s2(&config_from_points(&q)).is_zero());
    }

    #[test]
    fn coefficient_pairing_matches_direct(c in config()) {
        prop_assert_eq!(canonical_coefficients().evaluate(&c), det_s2_direct(&c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dichotomy_on_unstructured_configs(c in config()) {
        let r = classify(&c);
        prop_assert_eq!(det_s2(&c).is_zero(), r.rank <= 5);
        prop_assert_eq!(r.realizable, !r.lambda_basis.is_empty());
    }

    #[test]
    fn rescaled_point_configs_are_realizable(c in rescaled_point_config()) {
        prop_assert!(det_s2(&c).is_zero());
        let r = classify(&c);
        prop_assert!(r.rank <= 5);
        prop_assert!(r.realizable);
        prop_assert_eq!(r.quadrilaterals.len(), r.lambda_basis.len());
        for (l, q) in r.lambda_basis.iter().zip(&r.quadrilaterals) {
            for p in Pair::ALL {
                let (i, j) = p.indices();
                prop_assert_eq!(q.point(j).sub(q.point(i)), c.at(p).scale(l.get(p)));
            }
        }
    }

    #[test]
    fn system_rank_matches_lemma_rows(c in config()) {
        let m = build_system_matrix(&c);
        let top = m.select_rows(&[0, 1, 2, 3, 4, 5]);
        prop_assert_eq!(rank_and_nullspace(&m).rank, rank_and_nullspace(&top).rank);
        prop_assert_eq!(det_bareiss(&top).unwrap(), det_s2_direct(&c));
        for parity in 0..2 {
            for col in 0..6 {
                let s = m.get(parity, col).clone() - m.get(2 + parity, col).clone()
                    + m.get(4 + parity, col).clone() - m.get(6 + parity, col).clone();
                prop_assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn point_lambda_reconstructs_translated_points(q in common::quad()) {
        let c = config_from_points(&q);
        let q1 = q.point(1).clone();
        let ones = LambdaVector([(); 6].map(|_| int(1)));
        let rebuilt = reconstruct_quadrilateral(&c, &ones).unwrap();
        let expected = PointQuad::new(q.points.clone().map(|p| p.sub(&q1)));
        prop_assert_eq!(rebuilt, expected);
    }
}
