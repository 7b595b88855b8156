//! Property tests for the algebra substrate: ring axioms hold exactly on
//! random small operands, series reciprocals round-trip, and the weighted
//! integral interacts with the derivative as the fundamental theorem says.

use hbp_core::combinatorics::{binomial, multinomial};
use hbp_core::{rat, Polynomial, Rational, Ring, TruncatedSeries};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn small_polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(small_rational(), 0..5).prop_map(Polynomial::new)
}

const ORDER: usize = 6;

fn small_series() -> impl Strategy<Value = TruncatedSeries<Rational>> {
    prop::collection::vec(small_rational(), ORDER + 1)
        .prop_map(|c| TruncatedSeries::from_coeffs(ORDER, c))
}

proptest! {
    #[test]
    fn rational_ring_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
    }

    #[test]
    fn polynomial_ring_axioms(a in small_polynomial(), b in small_polynomial(), c in small_polynomial()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Polynomial::zero(), a.clone());
        prop_assert_eq!(&a * &Polynomial::one(), a);
    }

    #[test]
    fn series_ring_axioms(a in small_series(), b in small_series(), c in small_series()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &TruncatedSeries::zero(ORDER), a.clone());
        prop_assert_eq!(&a * &TruncatedSeries::one(ORDER), a);
    }

    #[test]
    fn series_reciprocal_round_trips(s in small_series()) {
        prop_assume!(!s.coeff(0).is_zero());
        let r = s.reciprocal().unwrap();
        prop_assert_eq!(&s * &r, TruncatedSeries::one(ORDER));
    }

    #[test]
    fn derivative_then_unit_weight_integral_is_boundary_difference(p in small_polynomial()) {
        let lhs = p.derivative().integrate01_weighted(1);
        let rhs = p.eval(&rat(1, 1)) - p.eval(&rat(0, 1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multinomial_single_part_is_binomial(n in -5i64..=30, k in -5i64..=35) {
        prop_assert_eq!(multinomial(n, &[k]), binomial(n, k));
    }

    #[test]
    fn multinomial_negative_part_vanishes(
        n in 0i64..=20,
        a in 0i64..=8,
        bad in -8i64..=-1,
    ) {
        prop_assert_eq!(multinomial(n, &[a, bad]), rat(0, 1));
        prop_assert_eq!(multinomial(n, &[bad]), rat(0, 1));
    }
}
