//! Exact arithmetic over `F_p`: scalars, `F_p[t, x]`, and polynomials in an
//! extra variable `K` over `F_p[t, x]`.
//!
//! Degrees are algebraic: both `t` and `x` have degree one.

mod bipoly;
mod scalar;
mod text;
mod tripoly;

pub use bipoly::{BiPoly, Monomial};
pub use scalar::{is_prime, odd_primes_up_to, Binomials, FpScalar, PrimeModulus};
pub use tripoly::TriPoly;

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn modulus() -> impl Strategy<Value = PrimeModulus> {
        prop::sample::select(vec![3u64, 5, 7, 13]).prop_map(|p| PrimeModulus::new(p).unwrap())
    }

    fn terms() -> impl Strategy<Value = Vec<(u32, u32, i64)>> {
        prop::collection::vec((0u32..8, 0u32..8, -20i64..20), 0..10)
    }

    fn three_polys() -> impl Strategy<Value = (BiPoly, BiPoly, BiPoly)> {
        (modulus(), terms(), terms(), terms()).prop_map(|(m, a, b, c)| {
            (
                BiPoly::from_terms(m, a),
                BiPoly::from_terms(m, b),
                BiPoly::from_terms(m, c),
            )
        })
    }

    /// A divisor monic in `x`: `x^d` plus lower x-powers with arbitrary t-coefficients.
    fn monic_divisor() -> impl Strategy<Value = (PrimeModulus, BiPoly, BiPoly)> {
        (modulus(), 0u32..5, terms(), terms()).prop_map(|(m, d, lower, dividend)| {
            let mut g = BiPoly::monomial(m, 0, d, 1);
            let lower = lower
                .into_iter()
                .filter(|&(_, x, _)| x < d)
                .collect::<Vec<_>>();
            g = &g + &BiPoly::from_terms(m, lower);
            (m, g, BiPoly::from_terms(m, dividend))
        })
    }

    fn no_stored_zeros(a: &BiPoly) -> bool {
        a.terms().all(|(_, c)| !c.is_zero())
    }

    proptest! {
        #[test]
        fn ring_axioms((a, b, c) in three_polys()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!(&a + &(-&a), BiPoly::zero(a.modulus()));
        }

        #[test]
        fn products_have_additive_degree((a, b, _c) in three_polys()) {
            let prod = &a * &b;
            if !a.is_zero() && !b.is_zero() {
                prop_assert_eq!(prod.degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
            }
        }

        #[test]
        fn canonical_form_never_stores_zero((a, b, c) in three_polys()) {
            for r in [&a + &b, &a - &b, &a * &c, a.pow(3), a.homogeneous_component(4)] {
                prop_assert!(no_stored_zeros(&r));
            }
        }

        #[test]
        fn pow_matches_repeated_product((a, _, _) in three_polys(), e in 0u64..=8) {
            let mut expected = BiPoly::one(a.modulus());
            for _ in 0..e {
                expected = &expected * &a;
            }
            prop_assert_eq!(a.pow(e), expected);
        }

        #[test]
        fn divmod_round_trip((_m, g, a) in monic_divisor()) {
            let (q, r) = a.divmod_x(&g).unwrap();
            prop_assert_eq!(&(&q * &g) + &r, a);
            let dg = g.deg_x().unwrap();
            prop_assert!(r.deg_x().is_none_or(|dr| dr < dg));
            prop_assert!(no_stored_zeros(&q) && no_stored_zeros(&r));
        }

        #[test]
        fn multiples_are_divisible((_m, g, a) in monic_divisor()) {
            let prod = &a * &g;
            prop_assert_eq!(prod.exact_div_x(&g).unwrap(), Some(a));
        }
    }
}
