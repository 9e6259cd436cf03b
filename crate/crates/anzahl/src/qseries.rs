//! The product families `ψ⁺`, `ψ⁻`, `χ` and Gaussian binomial coefficients.
//!
//! These are the building blocks of every closed-form count in
//! [`crate::counting`]:
//!
//! * `ψ⁺_{a,b}(q) = ∏_{k=a}^{b} (q^k + 1)`
//! * `ψ⁻_{a,b}(q) = ∏_{k=a}^{b} (q^k − 1)`
//! * `χ_{a,b}(q)  = ∏_{k=a}^{b} (q^{2k−1} − 1)`
//!
//! with the empty product `b = a − 1` equal to 1. The Gaussian binomial
//! `[b a]_q = ψ⁻_{b−a+1,b} / ψ⁻_{1,a}` counts `a`-dimensional subspaces of an
//! `b`-dimensional space over `F_q`; see [`gauss_binomial`] for the boundary
//! conventions that make it total.

use crate::exactnum::{ExactError, LaurentPoly};

/// Errors for the `ψ`/`χ` product families.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QSeriesError {
    /// The index range is neither a real range `b ≥ a` nor the empty range
    /// `b = a − 1`, or `a < 0`.
    #[error("invalid product range: a = {a}, b = {b} (need a >= 0 and b >= a - 1)")]
    InvalidRange { a: i64, b: i64 },
}

fn check_range(a: i64, b: i64) -> Result<(), QSeriesError> {
    if a < 0 || b < a - 1 {
        return Err(QSeriesError::InvalidRange { a, b });
    }
    Ok(())
}

/// `ψ⁺_{a,b}(q) = ∏_{k=a}^{b} (q^k + 1)`; 1 when `b = a − 1`.
pub fn psi_plus(a: i64, b: i64) -> Result<LaurentPoly, QSeriesError> {
    check_range(a, b)?;
    let mut acc = LaurentPoly::one();
    for k in a..=b {
        acc = &acc * &(&LaurentPoly::q_pow(k) + &LaurentPoly::one());
    }
    Ok(acc)
}

/// `ψ⁻_{a,b}(q) = ∏_{k=a}^{b} (q^k − 1)`; 1 when `b = a − 1`.
pub fn psi_minus(a: i64, b: i64) -> Result<LaurentPoly, QSeriesError> {
    check_range(a, b)?;
    let mut acc = LaurentPoly::one();
    for k in a..=b {
        acc = &acc * &(&LaurentPoly::q_pow(k) - &LaurentPoly::one());
    }
    Ok(acc)
}

/// `χ_{a,b}(q) = ∏_{k=a}^{b} (q^{2k−1} − 1)`; 1 when `b = a − 1`.
pub fn chi(a: i64, b: i64) -> Result<LaurentPoly, QSeriesError> {
    check_range(a, b)?;
    let mut acc = LaurentPoly::one();
    for k in a..=b {
        acc = &acc * &(&LaurentPoly::q_pow(2 * k - 1) - &LaurentPoly::one());
    }
    Ok(acc)
}

/// The Gaussian binomial `[b a]_q`, total in both arguments:
///
/// * `a < 0` → 0;
/// * `b = −1, a = 0` → 1 (empty space, empty subspace);
/// * `0 ≤ b < a` or `b < −1` → 0;
/// * otherwise the polynomial `ψ⁻_{b−a+1,b} / ψ⁻_{1,a}`.
///
/// The `[−1 0] = 1` / `[−1 −1] = 0` conventions are load-bearing: several
/// closed-form counts index a binomial by `(j−i)/2 − 1` which reaches −1 at
/// `i = j`.
pub fn gauss_binomial(b: i64, a: i64) -> LaurentPoly {
    if a < 0 {
        return LaurentPoly::zero();
    }
    if b == -1 && a == 0 {
        return LaurentPoly::one();
    }
    if b < a {
        return LaurentPoly::zero();
    }
    let num = psi_minus(b - a + 1, b).expect("valid range by construction");
    let den = psi_minus(1, a).expect("valid range by construction");
    match num.div_exact(&den) {
        Ok(t) => t,
        Err(ExactError::NotDivisible) | Err(ExactError::DivisionByZero) => {
            unreachable!("Gaussian binomial is always a polynomial")
        }
        Err(e) => unreachable!("unexpected division error: {e}"),
    }
}

/// `[b a]` at base `q²` (exponents doubled), as used by the complementary
/// counting formulas.
pub fn gauss_binomial_q2(b: i64, a: i64) -> LaurentPoly {
    gauss_binomial(b, a).compose_q_pow(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn psi_products_basics() {
        assert_eq!(psi_plus(1, 1).unwrap().to_string(), "q + 1");
        assert_eq!(psi_plus(1, 0).unwrap(), LaurentPoly::one());
        assert_eq!(psi_minus(1, 2).unwrap().to_string(), "q^3 - q^2 - q + 1");
        assert_eq!(psi_plus(0, 0).unwrap().to_string(), "2");
        assert_eq!(chi(1, 2).unwrap().to_string(), "q^4 - q^3 - q + 1");
        assert_eq!(chi(1, 0).unwrap(), LaurentPoly::one());
        // psi_minus(0, b) carries a (q^0 - 1) = 0 factor.
        assert!(psi_minus(0, 2).unwrap().is_zero());
    }

    #[test]
    fn psi_invalid_ranges() {
        assert_eq!(
            psi_plus(-1, 2),
            Err(QSeriesError::InvalidRange { a: -1, b: 2 })
        );
        assert_eq!(
            psi_minus(3, 1),
            Err(QSeriesError::InvalidRange { a: 3, b: 1 })
        );
        assert_eq!(chi(2, 0), Err(QSeriesError::InvalidRange { a: 2, b: 0 }));
    }

    #[test]
    fn gauss_binomial_conventions() {
        assert_eq!(gauss_binomial(-1, 0), LaurentPoly::one());
        assert_eq!(gauss_binomial(-1, -1), LaurentPoly::zero());
        assert_eq!(gauss_binomial(-1, 1), LaurentPoly::zero());
        assert_eq!(gauss_binomial(3, -1), LaurentPoly::zero());
        assert_eq!(gauss_binomial(2, 3), LaurentPoly::zero());
        assert_eq!(gauss_binomial(-4, 0), LaurentPoly::zero());
        assert_eq!(gauss_binomial(5, 0), LaurentPoly::one());
        assert_eq!(gauss_binomial(5, 5), LaurentPoly::one());
    }

    #[test]
    fn gauss_binomial_small_values() {
        assert_eq!(gauss_binomial(2, 1).to_string(), "q + 1");
        assert_eq!(gauss_binomial(4, 2).to_string(), "q^4 + q^3 + 2*q^2 + q + 1");
        // Subspace counts of F_3^6: 3-dimensional subspaces.
        assert_eq!(gauss_binomial(6, 3).eval_at_int(3).unwrap(), rat(33880, 1));
        assert_eq!(gauss_binomial(6, 3).eval_at_int(1).unwrap(), rat(20, 1));
    }

    #[test]
    fn gauss_binomial_symmetry() {
        for b in 0..=9 {
            for a in 0..=b {
                assert_eq!(gauss_binomial(b, a), gauss_binomial(b, b - a), "b={b} a={a}");
            }
        }
    }

    #[test]
    fn gauss_binomial_q2_doubles_exponents() {
        assert_eq!(gauss_binomial_q2(2, 1).to_string(), "q^2 + 1");
        assert_eq!(gauss_binomial_q2(-1, 0), LaurentPoly::one());
    }

    #[test]
    fn pascal_rules_with_boundary() {
        // [b a] = q^a [b-1 a] + [b-1 a-1]  and  [b a] = [b-1 a] + q^(b-a) [b-1 a-1],
        // down to b = a = 0 where [-1 0] = 1 and [-1 -1] = 0 close the rules.
        for b in 0..=12i64 {
            for a in 0..=b {
                let lhs = gauss_binomial(b, a);
                let r1 = &LaurentPoly::q_pow(a) * &gauss_binomial(b - 1, a);
                let r1 = &r1 + &gauss_binomial(b - 1, a - 1);
                assert_eq!(lhs, r1, "first Pascal rule at b={b} a={a}");
                let r2 = &gauss_binomial(b - 1, a)
                    + &(&LaurentPoly::q_pow(b - a) * &gauss_binomial(b - 1, a - 1));
                assert_eq!(lhs, r2, "second Pascal rule at b={b} a={a}");
            }
        }
    }
}
