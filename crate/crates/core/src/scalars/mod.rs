//! Scalars: exact rational functions in `q`, the `q`-integers, and
//! specialization points with their admissibility test.

mod poly;
mod qpoint;
mod ratfunc;

pub use poly::Poly;
pub use qpoint::{is_admissible, Admissibility, QPoint, QValue, ROOT_TOL};
pub use ratfunc::{QInteger, RationalFunction};

#[cfg(test)]
mod field_axioms {
    use super::*;
    use proptest::prelude::*;

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| Poly::from_i64_coeffs(&c))
    }

    fn rf() -> impl Strategy<Value = RationalFunction> {
        (small_poly(), small_poly()).prop_filter_map("zero denominator", |(n, d)| {
            RationalFunction::new(n, d).ok()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn associativity_and_distributivity(a in rf(), b in rf(), c in rf()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn inverses(a in rf()) {
            let z = &a - &a;
            prop_assert!(z.is_zero());
            prop_assert!(z.numerator().is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn canonical_form(a in rf()) {
            let den = a.denominator();
            prop_assert!(den.leading().map(num_traits::One::is_one).unwrap_or(false));
            prop_assert!(Poly::gcd(a.numerator(), den).is_one() || a.is_zero());
        }
    }
}
