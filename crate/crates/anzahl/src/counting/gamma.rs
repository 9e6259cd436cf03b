//! Counts of complements: the function `γ`.
//!
//! `γ` counts, for one fixed `i`-singular `j`-space `π`, the non-singular
//! `k`-spaces `σ` of type `ζ` with `σ ∩ π = 0` and non-singular span
//! `τ = ⟨π, σ⟩` of type `η`. The *complementary* case `k = n − j` (so
//! `τ = V`, `η = ε`) has direct alternating-sum evaluations, organised by the
//! parities of `(n, j, i)`; the general case factors through the span:
//! first pick `τ` around `π` (a `β` count), then a complement of `π` inside
//! `τ` (a complementary `γ` in ambient `τ`).
//!
//! All evaluators share one summation shape: sums of
//! `χ_{1,c−m} · [t, m±1]_{q²} · q^{e(m)}` over `m`, implemented by
//! [`chi_sum`].

use super::profile::{Family, ProfileParams, ValidityVerdict};
use super::{beta, beta_nu, half, is_even, is_odd, quarter, validate_for, FormType};
use crate::exactnum::{rat, LaurentPoly};
use crate::qseries::{chi, gauss_binomial_q2};

/// `Σ_{m=0}^{m_max} χ_{1, chi_hi − m} · [top, m − m_off]_{q²} · q^{exp(m)}`.
///
/// Negative `m_max` gives the empty sum; the binomial's conventions
/// (`[−1, 0] = 1`, zero below the diagonal) are load-bearing at the
/// boundaries.
fn chi_sum(m_max: i64, chi_hi: i64, top: i64, m_off: i64, exp: impl Fn(i64) -> i64) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    let mut m = 0;
    while m <= m_max {
        let binom = gauss_binomial_q2(top, m - m_off);
        if !binom.is_zero() {
            let c = chi(1, chi_hi - m).expect("chi range");
            acc = acc + (c * binom).mul_q_pow(exp(m));
        }
        m += 1;
    }
    acc
}

/// Complementary γ with `n, j, i` all odd: `δ, ζ ∈ {±1}`.
fn comp_both_odd_i_odd(i: i64, j: i64, d: i64, n: i64, z: i64) -> LaurentPoly {
    let p3 = j * n - quarter(5 * j * j + 2 * j + 1);
    let head = chi_sum((j - i) / 2, (j + 1) / 2, (j - i) / 2, 0, |m| m * (j + i - n + m));
    let tail = chi_sum((j - i) / 2 - 1, (j - 1) / 2, (j - i) / 2 - 1, 0, |m| m * (j + i - n + m));
    let coeff = (LaurentPoly::q_pow(half(3 * j - n)) - LaurentPoly::q_pow(half(2 * j + i - n)).scale(&rat(d, 1)))
        .scale(&rat(z, 1));
    (head + coeff * tail).mul_q_pow(p3).scale(&rat(1, 2))
}

/// Complementary γ with `n, j` odd, `i` even: perp-typed `λ`, `ζ ∈ {±1}`.
fn comp_both_odd_i_even(i: i64, j: i64, lam: i64, n: i64, z: i64) -> LaurentPoly {
    let p3 = j * n - quarter(5 * j * j + 2 * j + 1);
    let top = (j - i - 1) / 2;
    let head = chi_sum(top, (j + 1) / 2, top, 0, |m| m * (j + i - n + m + 1));
    let mid = chi_sum(top, (j - 1) / 2, top, 0, |m| m * (j + i - n + m - 1));
    let tail = chi_sum(top, (j - 1) / 2, top, 0, |m| m * (j + i - n + m + 1));
    let sum = head
        + mid.mul_q_pow(half(3 * j - n)).scale(&rat(z, 1))
        + tail.mul_q_pow(half(j + i - n)).scale(&rat(lam, 1));
    sum.mul_q_pow(p3).scale(&rat(1, 2))
}

/// Complementary γ with `n, j, i` all even: `δ, ε, ζ ∈ {±1}`.
fn comp_both_even_i_even(i: i64, j: i64, d: i64, n: i64, e: i64, z: i64) -> LaurentPoly {
    let p11 = j * n - quarter(5 * j * j);
    let top = (j - i) / 2;
    let s0 = chi_sum(top, j / 2, top, 0, |m| m * (j + i - n + m - 1));
    let s1 = chi_sum(top - 1, j / 2, top - 1, 0, |m| m * (j + i - n + m + 1));
    let s2 = chi_sum(top, j / 2, top - 1, 0, |m| m * (j + i - n + m + 1));
    let s3 = chi_sum(top - 1, j / 2, top - 1, 0, |m| m * (j + i - n + m + 1));
    let s4 = chi_sum(top, j / 2, top - 1, 1, |m| m * (j + i - n + m - 1));
    let sum = s0
        + s1.mul_q_pow(half(j - n)).scale(&rat(z, 1))
        + s2.mul_q_pow(-j / 2).scale(&rat(e * z, 1))
        - s3.mul_q_pow(half(i - n)).scale(&rat(d * z, 1))
        + s4.mul_q_pow(-i / 2).scale(&rat(d * e * z, 1));
    sum.mul_q_pow(p11).scale(&rat(1, 2))
}

/// Complementary γ with `n, j` even, `i` odd: `δ = 0`, `ε, ζ ∈ {±1}`.
fn comp_both_even_i_odd(i: i64, j: i64, n: i64, e: i64, z: i64) -> LaurentPoly {
    let p11 = j * n - quarter(5 * j * j);
    let top = (j - i - 1) / 2;
    let s = chi_sum(top, j / 2, top, 0, |m| m * (j + i - n + m));
    let unit = LaurentPoly::one()
        + LaurentPoly::q_pow(half(j - n)).scale(&rat(z, 1))
        + LaurentPoly::q_pow(-j / 2).scale(&rat(e * z, 1));
    (s * unit).mul_q_pow(p11).scale(&rat(1, 2))
}

/// Complementary γ for `n` odd, `j` even (`k = n − j` odd, `ζ = 0`),
/// optionally refined by the perp type `μ` of `σ`.
///
/// For `i` even the subspace carries `δ = ±1` (`lambda` must be `None`);
/// for `i` odd it carries `λ` (`delta` must be `0`). With `mu = None` the
/// count is the total over both perp classes of `σ`.
pub fn gamma_n_odd_j_even(
    i: i64,
    j: i64,
    delta: FormType,
    lambda: Option<FormType>,
    n: i64,
    mu: Option<FormType>,
) -> LaurentPoly {
    assert!(is_odd(n) && is_even(j), "evaluator expects n odd, j even");
    if i < 0 || j < i || i + j > n {
        return LaurentPoly::zero();
    }
    if i == j && delta != FormType::Hyperbolic {
        return LaurentPoly::zero();
    }
    if lambda == Some(FormType::Elliptic) && n == i + j {
        return LaurentPoly::zero();
    }
    if mu == Some(FormType::Parabolic) {
        return LaurentPoly::zero();
    }
    let p0 = quarter(6 * j * n - n * n - 5 * j * j - 2 * n + 2 * j - 1);

    if is_even(i) {
        let d = delta.sign();
        if d == 0 {
            return LaurentPoly::zero(); // parity: j − i even wants δ = ±1
        }
        assert!(lambda.is_none(), "perp type not defined: n(j-i) even");
        let top = (n - j - i - 1) / 2;
        let s1 = chi_sum(top, (n - j + 1) / 2, top, 0, |m| m * (m - j + i + 1));
        let s3 = chi_sum(top, (n - j - 1) / 2, top, 0, |m| m * (m - j + i + 1));
        let base = s1 + s3.mul_q_pow(half(i - j)).scale(&rat(d, 1));
        match mu {
            None => base.mul_q_pow(p0),
            Some(m) => {
                let s2 = chi_sum(top, (n - j - 1) / 2, top, 0, |m| m * (m - j + i - 1));
                (base + s2.mul_q_pow(n - 3 * j / 2).scale(&rat(m.sign(), 1)))
                    .mul_q_pow(p0)
                    .scale(&rat(1, 2))
            }
        }
    } else {
        let lam = lambda.expect("perp type required: n(j-i) odd").sign();
        if delta != FormType::Parabolic {
            return LaurentPoly::zero();
        }
        let top = (n - j - i) / 2;
        let t1 = chi_sum(top, (n - j + 1) / 2, top, 0, |m| m * (m - j + i));
        match mu {
            None => t1.mul_q_pow(p0),
            Some(m) => {
                let t2 = chi_sum(top - 1, (n - j - 1) / 2, top - 1, 0, |m| m * (m - j + i));
                let coeff = (LaurentPoly::q_pow(half(2 * n - 3 * j))
                    - LaurentPoly::q_pow(half(n + i - 2 * j)).scale(&rat(lam, 1)))
                .scale(&rat(m.sign(), 1));
                (t1 + coeff * t2).mul_q_pow(p0).scale(&rat(1, 2))
            }
        }
    }
}

/// Complementary γ for `n` even, `j` odd (`k = n − j` odd, `ζ = 0`,
/// span type `η = ε`).
pub fn gamma_n_even_j_odd(i: i64, j: i64, delta: FormType, n: i64, eps: FormType) -> LaurentPoly {
    assert!(is_even(n) && is_odd(j), "evaluator expects n even, j odd");
    let e = eps.sign();
    if e == 0 || i < 0 || j < i || i + j > n {
        return LaurentPoly::zero();
    }
    if i == j && delta != FormType::Hyperbolic {
        return LaurentPoly::zero();
    }
    let p0 = quarter(6 * j * n - n * n - 5 * j * j - 2 * n + 2 * j - 1);

    if is_odd(i) {
        let d = delta.sign();
        if d == 0 {
            return LaurentPoly::zero();
        }
        let top = (n - j - i) / 2;
        let u1 = chi_sum(top, (n - j + 1) / 2, top - 1, 0, |m| m * (m - j + i + 1));
        let u2 = chi_sum(top - 1, (n - j - 1) / 2, top - 1, 0, |m| m * (m - j + i + 1));
        let coeff = LaurentPoly::q_pow(half(i - j)).scale(&rat(d, 1))
            - LaurentPoly::q_pow(n / 2 - j).scale(&rat(e, 1))
            + LaurentPoly::q_pow(half(n - 3 * j + i)).scale(&rat(d * e, 1));
        (u1 + coeff * u2).mul_q_pow(p0)
    } else {
        if delta != FormType::Parabolic {
            return LaurentPoly::zero();
        }
        let top = (n - j - i - 1) / 2;
        let v1 = chi_sum(top, (n - j + 1) / 2, top, 0, |m| m * (m - j + i));
        let v2 = chi_sum(top, (n - j - 1) / 2, top, 0, |m| m * (m - j + i));
        (v1 - v2.mul_q_pow(n / 2 - j).scale(&rat(e, 1))).mul_q_pow(p0)
    }
}

/// Complementary γ (`k = n − j`, `τ = V`, `η = ε`), dispatching on the
/// parities of `(n, j, i)`. `mu` refines by the perp type of `σ` where that
/// is defined (`n` odd, `j` even).
pub fn gamma_complementary(
    i: i64,
    j: i64,
    delta: FormType,
    lambda: Option<FormType>,
    n: i64,
    eps: FormType,
    zeta: FormType,
    mu: Option<FormType>,
) -> LaurentPoly {
    let k = n - j;
    if i < 0 || j < i || i + j > n {
        return LaurentPoly::zero();
    }
    if i == j && delta != FormType::Hyperbolic {
        return LaurentPoly::zero();
    }
    if lambda == Some(FormType::Elliptic) && n == i + j {
        return LaurentPoly::zero();
    }
    if is_even(n - eps.sign()) || is_even(j - i - delta.sign()) || is_even(k - zeta.sign()) {
        return LaurentPoly::zero();
    }
    match (is_odd(n), is_odd(j)) {
        (true, true) => {
            assert!(mu.is_none(), "mu not defined: nk even");
            let z = zeta.sign();
            if is_odd(i) {
                comp_both_odd_i_odd(i, j, delta.sign(), n, z)
            } else {
                let lam = lambda.expect("perp type required: n(j-i) odd");
                comp_both_odd_i_even(i, j, lam.sign(), n, z)
            }
        }
        (false, false) => {
            assert!(mu.is_none(), "mu not defined: nk even");
            assert!(lambda.is_none(), "perp type not defined: n(j-i) even");
            let (e, z) = (eps.sign(), zeta.sign());
            if is_even(i) {
                comp_both_even_i_even(i, j, delta.sign(), n, e, z)
            } else {
                comp_both_even_i_odd(i, j, n, e, z)
            }
        }
        (true, false) => gamma_n_odd_j_even(i, j, delta, lambda, n, mu),
        (false, true) => {
            assert!(mu.is_none(), "mu not defined: nk even");
            gamma_n_even_j_odd(i, j, delta, n, eps)
        }
    }
}

/// General γ: complements of `π` inside a non-singular span of dimension
/// `k + j ≤ n` and type `η`. Factors through the span `τ`: `β` counts the
/// choices of `τ`, a complementary γ the complements within `τ`. When both
/// `k + j` and `j − i` are odd, the factorisation splits over the perp type
/// `ν` of `π` inside `τ`.
#[allow(clippy::too_many_arguments)]
pub fn gamma_general(
    i: i64,
    j: i64,
    delta: FormType,
    lambda: Option<FormType>,
    n: i64,
    eps: FormType,
    k: i64,
    zeta: FormType,
    eta: FormType,
) -> LaurentPoly {
    if i < 0 || j < i || i + j > n || k < 0 || k + j > n {
        return LaurentPoly::zero();
    }
    if i == j && delta != FormType::Hyperbolic {
        return LaurentPoly::zero();
    }
    if is_even(n - eps.sign()) || is_even(j - i - delta.sign()) || is_even(k - zeta.sign()) {
        return LaurentPoly::zero();
    }
    if is_even(k + j - eta.sign()) {
        return LaurentPoly::zero();
    }
    if k == 0 {
        // σ = 0: the span is π itself, counted once if π is non-singular of
        // the requested type.
        return if i == 0 && delta == eta && zeta == FormType::Hyperbolic {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        };
    }
    let span = k + j;
    if is_even(span) || is_even(j - i) {
        let towers = beta(i, j, delta, lambda, n, eps, span, eta);
        if towers.is_zero() {
            return LaurentPoly::zero();
        }
        towers * gamma_complementary(i, j, delta, None, span, eta, zeta, None)
    } else {
        let mut acc = LaurentPoly::zero();
        for nu in FormType::EVEN {
            let towers = beta_nu(i, j, lambda, n, eps, span, nu);
            if towers.is_zero() {
                continue;
            }
            acc = acc
                + towers
                    * gamma_complementary(i, j, FormType::Parabolic, Some(nu), span, FormType::Parabolic, zeta, None);
        }
        acc
    }
}

/// Internal entry used by the façade and by ρ: picks the complementary
/// evaluator when `k = n − j` (where `η` must equal `ε`) and the general
/// factorisation otherwise.
#[allow(clippy::too_many_arguments)]
pub(crate) fn gamma_value(
    i: i64,
    j: i64,
    delta: FormType,
    lambda: Option<FormType>,
    n: i64,
    eps: FormType,
    k: i64,
    zeta: FormType,
    eta: FormType,
) -> LaurentPoly {
    if k == n - j {
        if eta != eps {
            return LaurentPoly::zero(); // the span is all of V
        }
        gamma_complementary(i, j, delta, lambda, n, eps, zeta, None)
    } else {
        gamma_general(i, j, delta, lambda, n, eps, k, zeta, eta)
    }
}

/// Validated γ over a full profile, including the `μ`-refined complementary
/// case.
pub fn gamma(p: &ProfileParams) -> Result<LaurentPoly, super::InvalidReason> {
    match validate_for(Family::Gamma, p) {
        ValidityVerdict::Invalid(reason) => Err(reason),
        ValidityVerdict::Valid => {
            // No base point, no complements: same convention as β for
            // profiles whose (i, j, δ[, λ]) class is empty in this space.
            let base = match p.lambda {
                Some(l) => super::alpha_perp(p.i, p.j, l, p.n),
                None => super::alpha(p.i, p.j, p.delta, p.n, p.eps),
            };
            if base.is_zero() {
                return Ok(LaurentPoly::zero());
            }
            let (k, zeta) = (p.k.unwrap(), p.zeta.unwrap());
            let eta = p.eta.unwrap();
            Ok(if p.mu.is_some() {
                // validate_for guarantees k = n − j here.
                if eta != p.eps {
                    LaurentPoly::zero()
                } else {
                    gamma_complementary(p.i, p.j, p.delta, p.lambda, p.n, p.eps, zeta, p.mu)
                }
            } else {
                gamma_value(p.i, p.j, p.delta, p.lambda, p.n, p.eps, k, zeta, eta)
            })
        }
    }
}
