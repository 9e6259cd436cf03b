//! Proportions of compatible pairs: the function `ρ`.
//!
//! Among all pairs `(π, σ)` of non-singular subspaces of dimensions `j` and
//! `k` and types `δ` and `ζ`, `ρ` is the proportion whose span is a
//! non-singular `(j + k)`-space of type `η` with `π ∩ σ = 0`. Orbit
//! transitivity turns this into `γ / α`; when `nj` is odd the π-orbit splits
//! by perp type and the numerator averages over the split.
//!
//! Values are kept as exact polynomial ratios — callers compare or evaluate
//! without ever rounding.

use super::gamma::gamma_value;
use super::{alpha, alpha_perp, is_odd, FormType};
use crate::exactnum::{LaurentPoly, Rat};
use num_traits::Zero;

/// An exact ratio of Laurent polynomials. Not reduced; the denominator is
/// nonzero for every valid profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoRatio {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl RhoRatio {
    /// Exact rational value at an integer `q > 0`.
    pub fn value_at(&self, q: i64) -> Rat {
        let den = self.den.eval_at_int(q).expect("positive evaluation point");
        assert!(!den.is_zero(), "rho denominator vanished at q={q}");
        self.num.eval_at_int(q).expect("positive evaluation point") / den
    }

    /// Cross-multiplied equality of the exact ratios.
    pub fn ratio_eq(&self, other: &RhoRatio) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl std::fmt::Display for RhoRatio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Proportion of pairs `(π, σ)` of profiles `(j, δ)`, `(k, ζ)` in `(n, ε)`
/// whose span is non-singular of type `η` (with `π ∩ σ = 0`).
pub fn rho(j: i64, delta: FormType, k: i64, zeta: FormType, n: i64, eps: FormType, eta: FormType) -> RhoRatio {
    if is_odd(n * j) {
        if delta != FormType::Parabolic {
            // Odd-dimensional π in odd ambient dimension is parabolic.
            return RhoRatio { num: LaurentPoly::zero(), den: LaurentPoly::one() };
        }
        // The π-orbit splits by perp type; weight each γ by its orbit size.
        let mut num = LaurentPoly::zero();
        for lam in FormType::EVEN {
            let orbit = alpha_perp(0, j, lam, n);
            if orbit.is_zero() {
                continue;
            }
            num = num + orbit * gamma_value(0, j, FormType::Parabolic, Some(lam), n, eps, k, zeta, eta);
        }
        let den = alpha(0, j, FormType::Parabolic, n, eps) * alpha(0, k, zeta, n, eps);
        RhoRatio { num, den }
    } else {
        RhoRatio {
            num: gamma_value(0, j, delta, None, n, eps, k, zeta, eta),
            den: alpha(0, k, zeta, n, eps),
        }
    }
}

/// ρ restricted to π of a fixed perp type `λ` (`nj` odd, ambient parabolic):
/// the proportion among pairs whose first member lies in the `λ`-orbit.
pub fn rho_perp_restricted(j: i64, lambda: FormType, k: i64, zeta: FormType, n: i64, eta: FormType) -> RhoRatio {
    RhoRatio {
        num: gamma_value(0, j, FormType::Parabolic, Some(lambda), n, FormType::Parabolic, k, zeta, eta),
        den: alpha(0, k, zeta, n, FormType::Parabolic),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use FormType::*;

    #[test]
    fn zero_complement_matches_type_indicator() {
        // k = 0: the pair is compatible exactly when η and δ agree.
        let same = rho(2, Hyperbolic, 0, Hyperbolic, 4, Hyperbolic, Hyperbolic);
        assert!(same.num.is_one() && same.den.is_one());
        let diff = rho(2, Hyperbolic, 0, Hyperbolic, 4, Hyperbolic, Elliptic);
        assert!(diff.num.is_zero());
        // Odd nj: the λ-weighted average still collapses to 1.
        let odd = rho(3, Parabolic, 0, Hyperbolic, 5, Parabolic, Parabolic);
        assert!(odd.ratio_eq(&RhoRatio { num: LaurentPoly::one(), den: LaurentPoly::one() }));
    }

    #[test]
    fn perp_restricted_value_at_three() {
        // Non-singular 3-spaces of hyperbolic perp type vs planes in
        // dimension 5: 74/120 of the pairs span a non-singular 5-space.
        let r = rho_perp_restricted(3, Hyperbolic, 2, Hyperbolic, 5, Parabolic);
        assert_eq!(r.value_at(3), rat(74, 120));
    }

    #[test]
    fn symmetry_in_the_two_factors() {
        // ρ is symmetric under swapping (j, δ) and (k, ζ).
        for (j, dj, k, dk, n, e, h) in [
            (2i64, Hyperbolic, 2i64, Hyperbolic, 6i64, Hyperbolic, Hyperbolic),
            (2, Elliptic, 2, Hyperbolic, 6, Elliptic, Elliptic),
            (1, Parabolic, 3, Parabolic, 6, Hyperbolic, Hyperbolic),
            (2, Hyperbolic, 1, Parabolic, 5, Parabolic, Parabolic),
            (2, Elliptic, 3, Parabolic, 7, Parabolic, Parabolic),
            (1, Parabolic, 2, Hyperbolic, 7, Parabolic, Parabolic),
        ] {
            let a = rho(j, dj, k, dk, n, e, h);
            let b = rho(k, dk, j, dj, n, e, h);
            assert!(a.ratio_eq(&b), "asymmetric at (j,k)=({j},{k}) n={n}");
        }
    }
}
