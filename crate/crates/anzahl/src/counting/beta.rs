//! Counts of non-singular extensions: the function `β`.
//!
//! `beta(i, j, δ, λ?, n, ε, k, ζ)` is the number of non-singular `k`-spaces
//! `σ` of type `ζ` with `π ⊆ σ`, for one fixed `i`-singular `j`-space `π` of
//! type `δ` (and perp type `λ` where defined). The count depends on `π` only
//! through its profile.
//!
//! `beta_nu` refines the case `j − i` odd, `k` odd by the type `ν` of the
//! polar space of `π` taken inside `σ`.
//!
//! Every branch reduces to quotients of `α` counts via transitivity
//! double counting: `α(σ-profile) · β = α(π-profile) · α(π-in-σ-profile)`,
//! carried out with exact polynomial division.

use super::{alpha, alpha_perp, half, is_even, is_odd, FormType};
use crate::exactnum::{rat, LaurentPoly};
use crate::qseries::{psi_minus, psi_plus};

/// Number of non-singular `(k, ζ)`-spaces containing a fixed
/// `(i, j, δ[, λ])`-space in ambient `(n, ε)`.
///
/// `lambda` is required exactly when `n(j−i)` is odd. Out-of-range or
/// parity-impossible profiles give zero.
#[allow(clippy::too_many_arguments)]
pub fn beta(
    i: i64,
    j: i64,
    delta: FormType,
    lambda: Option<FormType>,
    n: i64,
    eps: FormType,
    k: i64,
    zeta: FormType,
) -> LaurentPoly {
    let z = zeta.sign();
    if i < 0 || j < i || i + j > k || k > n {
        return LaurentPoly::zero();
    }
    if is_even(k - z) {
        return LaurentPoly::zero();
    }

    if is_odd(n * (j - i)) {
        // Ambient-odd parabolic π: count within one perp-type orbit.
        let lam = lambda.expect("perp type required: n(j-i) odd");
        let orbit = alpha_perp(i, j, lam, n);
        if orbit.is_zero() {
            return LaurentPoly::zero();
        }
        if is_even(k) {
            // k(j−i) even: within σ the perp type of π is not defined, and
            // each (σ, π)-incidence splits evenly over the two λ classes.
            let num = (alpha(0, k, zeta, n, FormType::Parabolic) * alpha(i, j, FormType::Parabolic, k, zeta))
                .scale(&rat(1, 2));
            num.div_exact(&orbit).expect("orbit count divides incidence count")
        } else {
            // k odd: split by the perp type of π inside σ.
            FormType::EVEN
                .into_iter()
                .map(|nu| beta_nu(i, j, lambda, n, eps, k, nu))
                .fold(LaurentPoly::zero(), |acc, t| acc + t)
        }
    } else {
        if alpha(i, j, delta, n, eps).is_zero() {
            return LaurentPoly::zero();
        }
        let d = delta.sign();
        let e = eps.sign();
        let d2 = d * d;
        let e2 = e * e;
        let z2 = z * z;
        let exp = half(
            (n - k) * (k - j + i)
                + n * (d2 - z2) * (1 - e2)
                + (i + j) * (1 - d2) * (z2 - e2)
                + k * (1 - z2) * (e2 - d2)
                - e2 * d2
                + z2 * (d2 + e2 - 1),
        );
        let a1 = half(n - k + (z2 - 1) * (e2 - 1) + 1 - e * z);
        let b1 = half(n - i - j + (d2 - 1) * (e2 - 1) - 1 - e * d);
        let a2 = 1 - z2;
        let b2 = half(k - i - j + (d2 - 1) * (z2 - 1) - 1 - z * d);
        let a3 = half(n - k + (z2 - 1) * (e2 - 1) + 1 + e * z);
        let b3 = half(n - i - j + (d2 - 1) * (e2 - 1) - 1 + e * d);
        let a4 = 1;
        let b4 = half(k - i - j + (d2 - 1) * (z2 - 1) - 1 + z * d);

        // A product range collapsing below its empty form signals a
        // factorial-style pole: the configuration does not exist (e.g. no
        // singular lines inside an elliptic extension). Count zero then.
        let (Ok(p1), Ok(p3), Ok(p2), Ok(p4)) =
            (psi_plus(a1, b1), psi_minus(a3, b3), psi_plus(a2, b2), psi_minus(a4, b4))
        else {
            return LaurentPoly::zero();
        };
        (p1 * p3).div_exact(&(p2 * p4)).expect("extension count divides exactly").mul_q_pow(exp)
    }
}

/// Refined extension count: `σ ⊇ π` of dimension `k` (odd) where the polar
/// space of `π` inside `σ` has type `ν`. Needs `j − i` odd; `ζ = 0` is
/// implied. Summing over `ν` recovers [`beta`].
pub fn beta_nu(
    i: i64,
    j: i64,
    lambda: Option<FormType>,
    n: i64,
    eps: FormType,
    k: i64,
    nu: FormType,
) -> LaurentPoly {
    if is_even(j - i) || is_even(k) || nu == FormType::Parabolic {
        return LaurentPoly::zero();
    }
    if i < 0 || j < i || i + j > k || k > n {
        return LaurentPoly::zero();
    }

    if is_even(n) {
        // Perp types are undefined in the ambient space; double counting
        // incidences (σ, π) with π of fixed ν-class inside σ gives the count
        // as an exact quotient of α values.
        let pool = alpha(i, j, FormType::Parabolic, n, eps);
        if pool.is_zero() {
            return LaurentPoly::zero();
        }
        let num = alpha(0, k, FormType::Parabolic, n, eps) * alpha_perp(i, j, nu, k);
        num.div_exact(&pool).expect("class size divides incidence count")
    } else {
        // n odd: both λ (ambient) and ν (inside σ) are defined, and the polar
        // space of π splits as (polar inside σ) ⊥ (polar of σ), so types
        // multiply: the σ-orbit entering a (λ, ν) incidence has type λν.
        let lam = lambda.expect("perp type required: n(j-i) odd");
        let orbit = alpha_perp(i, j, lam, n);
        if orbit.is_zero() {
            return LaurentPoly::zero();
        }
        let num = alpha_perp(0, k, lam.times(nu), n) * alpha_perp(i, j, nu, k);
        num.div_exact(&orbit).expect("orbit count divides incidence count")
    }
}
