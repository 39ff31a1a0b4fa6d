//! Randomized property tests over the public surface: scale invariance of
//! the slope, binomial conventions, and count integrality.

use proptest::prelude::*;

use syzygy_core::enumerative::a_count;
use syzygy_core::pipeline::{slope, DivisorClassMg};
use syzygy_core::rat::{binom, Rat};

proptest! {
    #[test]
    fn slope_scale_invariant(
        lambda in 1i64..500,
        deltas in prop::collection::vec(1i64..500, 1..8),
        num in 1i64..60,
        den in 1i64..60,
    ) {
        let class = DivisorClassMg {
            g: 10,
            lambda: Rat::from_int(lambda),
            delta: deltas.iter().map(|&d| Rat::from_int(d)).collect(),
        };
        let t = Rat::frac(num, den);
        let scaled = class.scale(&t);
        prop_assert_eq!(slope(&class).unwrap(), slope(&scaled).unwrap());
    }

    #[test]
    fn binom_symmetry_and_vanishing(n in 0i64..60, k in -5i64..70) {
        if k < 0 || k > n {
            prop_assert_eq!(binom(n, k), Rat::zero());
        } else {
            prop_assert_eq!(binom(n, k), binom(n, n - k));
        }
    }

    #[test]
    fn a_count_hook_integrality(j in 0i64..24, frac in 0u32..=100) {
        // alpha sampled as a fraction of the valid range
        let alpha = (j / 2) * frac as i64 / 100;
        let a = a_count(j, alpha).unwrap();
        prop_assert!(a.is_integer());
        prop_assert!(a.is_positive());
    }
}
