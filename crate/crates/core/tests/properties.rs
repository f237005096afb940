//! Randomised invariants across the library.

use approx::assert_relative_eq;
use charlier::asym::{
    classify, discriminant, f1, f10, f2, f3_complex, f4_complex, turning_points, ClassifierConfig, ScaledCoordinate,
};
use charlier::oracle::{charlier_recurrence, charlier_sum, Params};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sum_and_recurrence_agree(n in 0u32..40, a in 0.1f64..50.0, x in -5.0f64..80.0) {
        let params = Params::new(n, a).unwrap();
        let s = charlier_sum(params, x, 60).unwrap();
        let r = charlier_recurrence(params, x, 60).unwrap();
        let diff = (&s - &r).abs().to_f64();
        prop_assert!(diff <= 1e-25 * s.abs().to_f64().max(1e-20), "diff {diff:e}");
    }

    #[test]
    fn low_degree_forms_are_exact(n in 0u32..2, a in 0.05f64..100.0, x in -50.0f64..150.0) {
        let params = Params::new(n, a).unwrap();
        let oracle = charlier_sum(params, x, 60).unwrap().to_scaled();
        prop_assume!(!oracle.is_zero());
        prop_assert!(f1(params, x).rel_err(&oracle) <= 1e-14);
        let eta = ScaledCoordinate::eta_of_x(params, x);
        prop_assert!(f2(params, eta).rel_err(&oracle) <= 1e-14);
    }

    #[test]
    fn discriminant_vanishes_at_turning_points(n in 1u32..500, a in 0.05f64..500.0) {
        let params = Params::new(n, a).unwrap();
        let tp = turning_points(params);
        let scale = (tp.x_plus * tp.x_plus).max(1.0);
        for x in [tp.x_minus, tp.x_plus] {
            prop_assert!(discriminant(params, x).delta.norm_sqr() <= 1e-12 * scale);
        }
        let mid = 0.5 * (tp.x_minus + tp.x_plus);
        prop_assert!(!discriminant(params, mid).is_real());
    }

    #[test]
    fn inside_the_turning_points_f3_and_f4_are_conjugate(n in 5u32..120, a in 0.5f64..20.0, t in 0.05f64..0.95) {
        let params = Params::new(n, a).unwrap();
        let tp = turning_points(params);
        let x = tp.x_minus + t * tp.width();
        let g3 = f3_complex(params, x).unwrap();
        let g4 = f4_complex(params, x).unwrap();
        prop_assert!(g3.rel_diff(&g4.conj()) <= 1e-9);
        prop_assert!(f10(params, x).is_ok());
    }

    #[test]
    fn classifier_is_total(n in 0u32..300, a in 0.01f64..300.0, x in -20.0f64..700.0) {
        let params = Params::new(n, a).unwrap();
        let c = classify(params, x, &ClassifierConfig::default());
        prop_assert!(c.applicable.contains(&c.recommended));
    }

    #[test]
    fn theta_round_trip(n in 1u32..300, a in 0.1f64..50.0, theta in -1.5f64..1.5) {
        let params = Params::new(n, a).unwrap();
        let x = ScaledCoordinate::x_of_theta(params, theta);
        assert_relative_eq!(ScaledCoordinate::theta_of_x(params, x), theta, epsilon = 1e-9);
    }
}
