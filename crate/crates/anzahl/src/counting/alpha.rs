//! Counts of `i`-singular `j`-subspaces of a given type: the function `α`.
//!
//! `alpha(i, j, δ, n, ε)` is the number of `i`-singular `j`-dimensional
//! subspaces of type `δ` in a non-degenerate quadratic space of dimension `n`
//! and type `ε` over `F_q`, as a polynomial in `q` (coefficients may be
//! half-integers; values at odd `q` are integers).
//!
//! `alpha_perp` refines the parabolic case `n(j−i)` odd by the type `λ` of
//! the polar space `π^⊥`, and `alpha_hyperplane` gives the simplified
//! hyperplane specialisations (kept separate so they can be cross-checked
//! against the general product).

use super::{half, is_even, FormType};
use crate::exactnum::LaurentPoly;
use crate::qseries::{gauss_binomial, psi_minus, psi_plus};

/// Number of `i`-singular `j`-subspaces of type `delta` in `(n, eps)`.
///
/// Total over perp types where those are defined. Returns zero whenever the
/// count is empty: parameter ranges violated, parities off (`j−i ≡ δ` or
/// `n ≡ ε` mod 2), or a totally singular space with `delta ≠ +1`.
pub fn alpha(i: i64, j: i64, delta: FormType, n: i64, eps: FormType) -> LaurentPoly {
    let d = delta.sign();
    let e = eps.sign();
    if i < 0 || j < i || i + j > n {
        return LaurentPoly::zero();
    }
    if is_even(j - i - d) || is_even(n - e) {
        return LaurentPoly::zero();
    }
    if i == j && delta != FormType::Hyperbolic {
        return LaurentPoly::zero();
    }

    let d2 = d * d;
    let e2 = e * e;
    let exp = half((n - j - i) * ((j - i) + (1 - d2) * (1 - e2)) - (1 - d2) * e2);
    let a1 = half(n - i - j + (d2 - 1) * (e2 - 1) + 1 - e * d);
    let b1 = half(n - 1 - e);
    let a3 = half(n - i - j + (d2 - 1) * (e2 - 1) + 1 + e * d);
    let b3 = half(n - 1 + e);

    let num = psi_plus(a1, b1).expect("plus-product range") * psi_minus(a3, b3).expect("minus-product range");
    let den = psi_plus(1 - d2, half(j - i - d - 1)).expect("plus-product range")
        * psi_minus(1, half(j - i + d - 1)).expect("minus-product range")
        * psi_minus(1, i).expect("minus-product range");
    num.div_exact(&den).expect("subspace count divides exactly").mul_q_pow(exp)
}

/// Number of `i`-singular `j`-subspaces whose polar space has type `lambda`.
///
/// Defined for `n(j−i)` odd (so `n` odd, ambient parabolic, `δ = 0`).
/// Polarity is a type-preserving bijection onto `i`-singular `(n−j)`-spaces
/// of type `lambda`, which reduces this to [`alpha`].
pub fn alpha_perp(i: i64, j: i64, lambda: FormType, n: i64) -> LaurentPoly {
    if is_even(n * (j - i)) || lambda == FormType::Parabolic {
        return LaurentPoly::zero();
    }
    if i < 0 || j < i || i + j > n {
        return LaurentPoly::zero();
    }
    alpha(i, n - j, lambda, n, FormType::Parabolic)
}

/// Hyperplane counts `j = n − 1` in simplified form, split by radical
/// dimension `i ∈ {0, 1}`.
///
/// Off the applicable parities this returns zero; on them it agrees with
/// `alpha(i, n−1, delta, n, eps)`.
pub fn alpha_hyperplane(i: i64, delta: FormType, n: i64, eps: FormType) -> LaurentPoly {
    let d = delta.sign();
    let e = eps.sign();
    if n < 2 || is_even(n - e) {
        return LaurentPoly::zero();
    }
    match i {
        0 => match (delta, eps) {
            // n odd: non-singular hyperplanes are even-dimensional, δ = ±1.
            (FormType::Hyperbolic | FormType::Elliptic, FormType::Parabolic) => {
                let m = half(n - 1);
                // (1/2) q^m (q^m + δ)
                (LaurentPoly::q_pow(m) + LaurentPoly::from_int(d)).mul_q_pow(m).scale(&crate::exactnum::rat(1, 2))
            }
            // n even: parabolic hyperplanes.
            (FormType::Parabolic, FormType::Hyperbolic | FormType::Elliptic) => {
                let m = half(n);
                (LaurentPoly::q_pow(m) - LaurentPoly::from_int(e)).mul_q_pow(m - 1)
            }
            _ => LaurentPoly::zero(),
        },
        1 => {
            // Singular hyperplanes: same type as the ambient space, and only
            // those exist. (n − ε odd and δ = ε give the subspace parity.)
            if delta != eps {
                return LaurentPoly::zero();
            }
            // (q^{n−1} − 1)/(q − 1), plus a correction term for even n.
            let mut count = gauss_binomial(n - 1, 1);
            if e != 0 {
                count = count + LaurentPoly::q_pow(half(n) - 1).scale(&crate::exactnum::rat(e, 1));
            }
            count
        }
        _ => LaurentPoly::zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::gauss_binomial;
    use FormType::*;

    #[test]
    fn small_space_counts() {
        assert_eq!(alpha(1, 1, Hyperbolic, 3, Parabolic).to_string(), "q + 1");
        assert_eq!(alpha(0, 2, Hyperbolic, 3, Parabolic).to_string(), "1/2*q^2 + 1/2*q");
        assert_eq!(alpha(0, 2, Elliptic, 3, Parabolic).to_string(), "1/2*q^2 - 1/2*q");
        assert_eq!(alpha(1, 2, Parabolic, 3, Parabolic).to_string(), "q + 1");
        assert_eq!(
            alpha(0, 2, Hyperbolic, 4, Hyperbolic).to_string(),
            "1/2*q^4 + q^3 + 1/2*q^2"
        );
    }

    #[test]
    fn degenerate_profiles_count_zero() {
        assert!(alpha(0, 2, Parabolic, 4, Hyperbolic).is_zero()); // parity of j−i−δ
        assert!(alpha(0, 2, Hyperbolic, 5, Hyperbolic).is_zero()); // parity of n−ε
        assert!(alpha(2, 2, Elliptic, 5, Parabolic).is_zero()); // totally singular, δ ≠ +1
        assert!(alpha(2, 3, Parabolic, 4, Hyperbolic).is_zero()); // i + j > n
        assert!(alpha(-1, 2, Parabolic, 4, Hyperbolic).is_zero());
        assert!(alpha(1, 0, Parabolic, 4, Hyperbolic).is_zero()); // j < i
    }

    #[test]
    fn zero_space_counts_once() {
        for (n, eps) in [(3, Parabolic), (4, Hyperbolic), (6, Elliptic)] {
            assert!(alpha(0, 0, Hyperbolic, n, eps).is_one());
            assert!(alpha(0, 0, Elliptic, n, eps).is_zero());
        }
    }

    /// Summing α over all radical dimensions and types must give the number
    /// of all j-subspaces, the Gaussian binomial.
    #[test]
    fn type_sum_recovers_grassmannian() {
        for (n, eps) in [(3, Parabolic), (4, Hyperbolic), (4, Elliptic), (5, Parabolic), (6, Hyperbolic), (6, Elliptic)] {
            for j in 0..=n {
                let mut total = LaurentPoly::zero();
                for i in 0..=j {
                    for delta in [Elliptic, Parabolic, Hyperbolic] {
                        total = total + alpha(i, j, delta, n, eps);
                    }
                }
                assert_eq!(total, gauss_binomial(n, j), "n={n} eps={eps:?} j={j}");
            }
        }
    }

    /// The two perp-type classes partition the parabolic class.
    #[test]
    fn perp_types_partition_parabolic_class() {
        for n in [3i64, 5, 7] {
            for j in 0..=n {
                for i in 0..=j {
                    if (n * (j - i)) % 2 == 0 {
                        continue;
                    }
                    let total = alpha(i, j, Parabolic, n, Parabolic);
                    let split = alpha_perp(i, j, Hyperbolic, n) + alpha_perp(i, j, Elliptic, n);
                    assert_eq!(split, total, "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn perp_split_small_values() {
        // Non-singular lines in dimension 5 by perp type: 1/2 q^2 (q^2 ± 1).
        assert_eq!(alpha_perp(0, 1, Hyperbolic, 5).to_string(), "1/2*q^4 + 1/2*q^2");
        assert_eq!(alpha_perp(0, 1, Elliptic, 5).to_string(), "1/2*q^4 - 1/2*q^2");
        // Perp types only exist for odd n(j−i).
        assert!(alpha_perp(0, 2, Hyperbolic, 5).is_zero());
        // Full-span parabolic spaces only have hyperbolic polar spaces.
        assert!(alpha_perp(1, 2, Elliptic, 3).is_zero());
        assert!(!alpha_perp(1, 2, Hyperbolic, 3).is_zero());
    }

    /// The hyperplane specialisations agree with the general product formula.
    #[test]
    fn hyperplane_forms_match_general_formula() {
        for n in 2i64..=9 {
            for eps in [Elliptic, Parabolic, Hyperbolic] {
                for delta in [Elliptic, Parabolic, Hyperbolic] {
                    for i in [0, 1] {
                        let special = alpha_hyperplane(i, delta, n, eps);
                        let general = alpha(i, n - 1, delta, n, eps);
                        assert_eq!(special, general, "i={i} delta={delta:?} n={n} eps={eps:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn hyperplane_closed_forms() {
        // Dimension 5: 1/2 q^2 (q^2 ± 1) non-singular hyperplanes by type.
        assert_eq!(alpha_hyperplane(0, Hyperbolic, 5, Parabolic).to_string(), "1/2*q^4 + 1/2*q^2");
        assert_eq!(alpha_hyperplane(0, Elliptic, 5, Parabolic).to_string(), "1/2*q^4 - 1/2*q^2");
        // Dimension 4, hyperbolic: q(q^2 − 1) parabolic hyperplanes.
        assert_eq!(alpha_hyperplane(0, Parabolic, 4, Hyperbolic).to_string(), "q^3 - q");
        assert_eq!(alpha_hyperplane(0, Parabolic, 4, Elliptic).to_string(), "q^3 + q");
        // Singular hyperplanes: (q^{n−1} − 1)/(q − 1) + ε q^{n/2 − 1}.
        assert_eq!(alpha_hyperplane(1, Hyperbolic, 4, Hyperbolic).to_string(), "q^2 + 2*q + 1");
        assert_eq!(alpha_hyperplane(1, Elliptic, 4, Elliptic).to_string(), "q^2 + 1");
        assert_eq!(alpha_hyperplane(1, Parabolic, 5, Parabolic).to_string(), "q^3 + q^2 + q + 1");
        // Type mismatch: no singular hyperplanes of the wrong type.
        assert!(alpha_hyperplane(1, Hyperbolic, 4, Elliptic).is_zero());
    }
}
