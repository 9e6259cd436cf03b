//! Randomized algebra checks for the Laurent-polynomial core.
//!
//! Everything downstream (the counting formulas, the identity suite, the
//! oracle comparisons) leans on this ring being an actual ring, on
//! evaluation being a homomorphism, and on exact division inverting
//! multiplication. Small coefficients and exponents are plenty: the
//! arithmetic is the same at every size, only slower.

use anzahl::exactnum::{rat, LaurentPoly, Rat};
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-6i64..=6), (-9i64..=9), (1i64..=9)), 0..=5)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, n, d)| (e, rat(n, d)))))
}

fn nonzero_point() -> impl Strategy<Value = Rat> {
    ((1i64..=9), (1i64..=9), any::<bool>())
        .prop_map(|(n, d, neg)| if neg { rat(-n, d) } else { rat(n, d) })
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(
        a in small_poly(), b in small_poly(), c in small_poly()
    ) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &LaurentPoly::zero(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn multiplication_is_commutative_and_associative(
        a in small_poly(), b in small_poly(), c in small_poly()
    ) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert!((&a * &LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn multiplication_distributes_over_addition(
        a in small_poly(), b in small_poly(), c in small_poly()
    ) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(
        a in small_poly(), b in small_poly(), q0 in nonzero_point()
    ) {
        let (ea, eb) = (a.eval_at(&q0).unwrap(), b.eval_at(&q0).unwrap());
        prop_assert_eq!((&a + &b).eval_at(&q0).unwrap(), &ea + &eb);
        prop_assert_eq!((&a * &b).eval_at(&q0).unwrap(), &ea * &eb);
    }

    #[test]
    fn exact_division_inverts_multiplication(
        a in small_poly(), b in small_poly()
    ) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn shifting_is_multiplication_by_a_power_of_q(
        a in small_poly(), s in -4i64..=4
    ) {
        prop_assert_eq!(a.mul_q_pow(s), &a * &LaurentPoly::q_pow(s));
    }

    #[test]
    fn substituting_a_power_commutes_with_evaluation(
        a in small_poly(), m in 1i64..=3, q in 2i64..=5
    ) {
        // a(q^m) computed symbolically, then at q, versus directly at q^m.
        let direct = a.eval_at_int(q.pow(m as u32)).unwrap();
        prop_assert_eq!(a.compose_q_pow(m).eval_at_int(q).unwrap(), direct);
    }

    #[test]
    fn small_powers_match_repeated_multiplication(
        a in small_poly(), n in 0u32..=4
    ) {
        let mut by_hand = LaurentPoly::one();
        for _ in 0..n {
            by_hand = &by_hand * &a;
        }
        prop_assert_eq!(a.pow(n), by_hand);
    }
}
