//! Profile parameters and validation.
//!
//! A [`ProfileParams`] bundles every dimension/type parameter a counting
//! function can take; fields that a particular family does not use stay
//! `None`. [`validate`] checks the family-independent invariants and reports
//! the first violation in a fixed order, so error messages are deterministic.

use super::{is_even, is_odd, Family::*, FormType};
use serde::Serialize;

/// Which counting family a profile is for.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Alpha,
    Beta,
    Gamma,
    Rho,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Alpha => write!(f, "alpha"),
            Beta => write!(f, "beta"),
            Gamma => write!(f, "gamma"),
            Rho => write!(f, "rho"),
        }
    }
}

/// Full parameter set for a counting profile.
///
/// * ambient space: dimension `n`, type `eps`;
/// * subspace `π`: radical dimension `i`, dimension `j`, type `delta`,
///   perp type `lambda` (defined only when `n(j−i)` is odd);
/// * target space `σ` (β/γ/ρ): dimension `k`, type `zeta`, perp type `mu`
///   (γ only, defined when `nk` is odd and the pair is complementary);
/// * `nu`: type of `π^⊥ ∩ σ` for refined β counts (`j−i` and `k` odd);
/// * `eta`: type of the span `⟨π, σ⟩` (γ/ρ only).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ProfileParams {
    pub n: i64,
    pub eps: FormType,
    pub i: i64,
    pub j: i64,
    pub delta: FormType,
    pub lambda: Option<FormType>,
    pub k: Option<i64>,
    pub zeta: Option<FormType>,
    pub nu: Option<FormType>,
    pub mu: Option<FormType>,
    pub eta: Option<FormType>,
}

impl ProfileParams {
    /// An α profile: subspace data only.
    pub fn alpha(i: i64, j: i64, delta: FormType, lambda: Option<FormType>, n: i64, eps: FormType) -> Self {
        ProfileParams {
            n,
            eps,
            i,
            j,
            delta,
            lambda,
            k: None,
            zeta: None,
            nu: None,
            mu: None,
            eta: None,
        }
    }

    /// A β profile: adds the enclosing space `(k, ζ)`.
    pub fn beta(
        i: i64,
        j: i64,
        delta: FormType,
        lambda: Option<FormType>,
        n: i64,
        eps: FormType,
        k: i64,
        zeta: FormType,
        nu: Option<FormType>,
    ) -> Self {
        ProfileParams {
            k: Some(k),
            zeta: Some(zeta),
            nu,
            ..Self::alpha(i, j, delta, lambda, n, eps)
        }
    }

    /// A γ profile: adds the complementary space `(k, ζ[, μ])` and span type `η`.
    #[allow(clippy::too_many_arguments)]
    pub fn gamma(
        i: i64,
        j: i64,
        delta: FormType,
        lambda: Option<FormType>,
        n: i64,
        eps: FormType,
        k: i64,
        zeta: FormType,
        mu: Option<FormType>,
        eta: FormType,
    ) -> Self {
        ProfileParams {
            k: Some(k),
            zeta: Some(zeta),
            mu,
            eta: Some(eta),
            ..Self::alpha(i, j, delta, lambda, n, eps)
        }
    }

    /// A ρ profile: non-singular `π` (`i = 0`), so only `(j, δ)`, `(k, ζ)`, `η`.
    pub fn rho(j: i64, delta: FormType, k: i64, zeta: FormType, n: i64, eps: FormType, eta: FormType) -> Self {
        ProfileParams {
            k: Some(k),
            zeta: Some(zeta),
            eta: Some(eta),
            ..Self::alpha(0, j, delta, None, n, eps)
        }
    }

    /// Compact human-readable rendering, e.g. `(1,3,+1),(6,+1),k=3(0),eta=+1`.
    pub fn label(&self) -> String {
        let mut s = format!("({},{},{}", self.i, self.j, self.delta);
        if let Some(l) = self.lambda {
            s.push_str(&format!(",{l}"));
        }
        s.push_str(&format!("),({},{})", self.n, self.eps));
        if let Some(k) = self.k {
            s.push_str(&format!(",k={k}"));
            if let Some(z) = self.zeta {
                s.push_str(&format!("({z})"));
            }
            if let Some(nu) = self.nu {
                s.push_str(&format!(",nu={nu}"));
            }
            if let Some(m) = self.mu {
                s.push_str(&format!(",mu={m}"));
            }
            if let Some(e) = self.eta {
                s.push_str(&format!(",eta={e}"));
            }
        }
        s
    }
}

/// Outcome of profile validation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ValidityVerdict {
    Valid,
    Invalid(InvalidReason),
}

impl ValidityVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, ValidityVerdict::Valid)
    }
}

/// Machine-readable reason a profile was rejected.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum InvalidReason {
    /// Ambient dimension must be positive.
    BadAmbient { n: i64 },
    /// Need `0 ≤ i ≤ j`.
    IndexOrder { i: i64, j: i64 },
    /// Need `i + j ≤ n`: the radical pairs with a disjoint singular complement.
    DimensionOverflow { i: i64, j: i64, n: i64 },
    /// `n − ε` must be odd.
    AmbientParity { n: i64, eps: FormType },
    /// `j − i − δ` must be odd.
    SubspaceParity { i: i64, j: i64, delta: FormType },
    /// Totally singular spaces (`i = j`) are hyperbolic by convention.
    TotallySingularType { delta: FormType },
    /// Perp type given but `n(j−i)` is even.
    PerpTypeUndefined { n: i64, i: i64, j: i64 },
    /// Perp types take values `±1` only.
    PerpTypeParabolic,
    /// When `n = i + j` the polar space is hyperbolic; `λ = −1` is empty.
    PerpTypeForbidden,
    /// Perp type required (`n(j−i)` odd) but absent.
    PerpTypeMissing { n: i64, i: i64, j: i64 },
    /// `k` outside the family's admissible range.
    TargetRange { k: i64, lo: i64, hi: i64 },
    /// `k − ζ` must be odd.
    TargetParity { k: i64, zeta: FormType },
    /// The 0-dimensional space is hyperbolic.
    TargetZeroType { zeta: FormType },
    /// `ν` given but `j − i` or `k` is even.
    NuUndefined { i: i64, j: i64, k: i64 },
    /// `μ` given but `nk` is even.
    MuUndefined { n: i64, k: i64 },
    /// `μ` given for a non-complementary pair (`k ≠ n − j`), which the
    /// closed forms do not cover.
    MuNotComplementary { n: i64, j: i64, k: i64 },
    /// `k + j − η` must be odd.
    SpanParity { k: i64, j: i64, eta: FormType },
    /// A field the family needs is absent.
    MissingField { name: &'static str },
    /// A field the family does not accept is present.
    UnusedField { name: &'static str },
}

impl std::fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use InvalidReason::*;
        match self {
            BadAmbient { n } => write!(f, "ambient dimension must be positive: n={n}"),
            IndexOrder { i, j } => write!(f, "need 0 <= i <= j: i={i}, j={j}"),
            DimensionOverflow { i, j, n } => write!(f, "need i + j <= n: i={i}, j={j}, n={n}"),
            AmbientParity { n, eps } => write!(f, "n - eps must be odd: n={n}, eps={eps}"),
            SubspaceParity { i, j, delta } => {
                write!(f, "j - i - delta must be odd: i={i}, j={j}, delta={delta}")
            }
            TotallySingularType { delta } => {
                write!(f, "totally singular spaces are hyperbolic: i = j needs delta=+1, got {delta}")
            }
            PerpTypeUndefined { .. } => write!(f, "perp type not defined: n(j-i) even"),
            PerpTypeParabolic => write!(f, "perp types are +1 or -1"),
            PerpTypeForbidden => write!(f, "lambda=-1 is empty when n = i + j"),
            PerpTypeMissing { .. } => write!(f, "perp type required: n(j-i) odd"),
            TargetRange { k, lo, hi } => write!(f, "k out of range: k={k}, admissible {lo}..={hi}"),
            TargetParity { k, zeta } => write!(f, "k - zeta must be odd: k={k}, zeta={zeta}"),
            TargetZeroType { zeta } => {
                write!(f, "the 0-dimensional space is hyperbolic: k=0 needs zeta=+1, got {zeta}")
            }
            NuUndefined { i, j, k } => {
                write!(f, "nu not defined: needs j-i and k odd, got i={i}, j={j}, k={k}")
            }
            MuUndefined { n, k } => write!(f, "mu not defined: nk even, n={n}, k={k}"),
            MuNotComplementary { n, j, k } => {
                write!(f, "mu supported only for complementary k = n - j: n={n}, j={j}, k={k}")
            }
            SpanParity { k, j, eta } => write!(f, "k + j - eta must be odd: k={k}, j={j}, eta={eta}"),
            MissingField { name } => write!(f, "missing parameter: {name}"),
            UnusedField { name } => write!(f, "parameter not accepted here: {name}"),
        }
    }
}

/// Family-independent validation: ranges, parities, and presence rules for
/// the optional type refinements. `k`-range constraints differ per family and
/// live in [`validate_for`].
pub fn validate(p: &ProfileParams) -> ValidityVerdict {
    use InvalidReason::*;
    let fail = |r: InvalidReason| ValidityVerdict::Invalid(r);

    if p.n < 1 {
        return fail(BadAmbient { n: p.n });
    }
    if p.i < 0 || p.j < p.i {
        return fail(IndexOrder { i: p.i, j: p.j });
    }
    if p.i + p.j > p.n {
        return fail(DimensionOverflow { i: p.i, j: p.j, n: p.n });
    }
    if is_even(p.n - p.eps.sign()) {
        return fail(AmbientParity { n: p.n, eps: p.eps });
    }
    if is_even(p.j - p.i - p.delta.sign()) {
        return fail(SubspaceParity { i: p.i, j: p.j, delta: p.delta });
    }
    if p.i == p.j && p.delta != FormType::Hyperbolic {
        return fail(TotallySingularType { delta: p.delta });
    }
    if let Some(l) = p.lambda {
        if is_even(p.n * (p.j - p.i)) {
            return fail(PerpTypeUndefined { n: p.n, i: p.i, j: p.j });
        }
        if l == FormType::Parabolic {
            return fail(PerpTypeParabolic);
        }
        if l == FormType::Elliptic && p.n == p.i + p.j {
            return fail(PerpTypeForbidden);
        }
    }
    if let Some(k) = p.k {
        if k < 0 || k > p.n {
            return fail(TargetRange { k, lo: 0, hi: p.n });
        }
        match p.zeta {
            None => return fail(MissingField { name: "zeta" }),
            Some(z) => {
                if is_even(k - z.sign()) {
                    return fail(TargetParity { k, zeta: z });
                }
                if k == 0 && z != FormType::Hyperbolic {
                    return fail(TargetZeroType { zeta: z });
                }
            }
        }
        if p.nu.is_some() && (is_even(p.j - p.i) || is_even(k)) {
            return fail(NuUndefined { i: p.i, j: p.j, k });
        }
        if let Some(m) = p.mu {
            if m == FormType::Parabolic {
                return fail(PerpTypeParabolic);
            }
            if is_even(p.n * k) {
                return fail(MuUndefined { n: p.n, k });
            }
            if k != p.n - p.j {
                return fail(MuNotComplementary { n: p.n, j: p.j, k });
            }
        }
        if let Some(e) = p.eta {
            if is_even(k + p.j - e.sign()) {
                return fail(SpanParity { k, j: p.j, eta: e });
            }
        }
    } else if p.zeta.is_some() || p.nu.is_some() || p.mu.is_some() || p.eta.is_some() {
        return fail(MissingField { name: "k" });
    }
    ValidityVerdict::Valid
}

/// Validation specialised to a counting family: adds required-field and
/// `k`-range checks on top of [`validate`].
pub fn validate_for(family: Family, p: &ProfileParams) -> ValidityVerdict {
    use InvalidReason::*;
    let base = validate(p);
    if !base.is_valid() {
        return base;
    }
    let fail = |r: InvalidReason| ValidityVerdict::Invalid(r);
    let perp_defined = is_odd(p.n * (p.j - p.i));

    match family {
        Alpha => {
            // Totals (λ absent) and refined counts (λ present) both make
            // sense; nothing further to check.
            ValidityVerdict::Valid
        }
        Beta | Gamma | Rho => {
            let Some(k) = p.k else {
                return fail(MissingField { name: "k" });
            };
            // β/γ with an ambient-odd parabolic subspace count within a fixed
            // perp-type orbit, so λ is mandatory there; ρ averages over π and
            // handles the λ split internally.
            if family != Rho {
                if perp_defined && p.lambda.is_none() {
                    return fail(PerpTypeMissing { n: p.n, i: p.i, j: p.j });
                }
            } else {
                if p.i != 0 {
                    return fail(UnusedField { name: "i (rho fixes i = 0)" });
                }
                if p.lambda.is_some() {
                    return fail(UnusedField { name: "lambda (rho sums the perp types)" });
                }
            }
            match family {
                Beta => {
                    if k < p.i + p.j || k > p.n {
                        return fail(TargetRange { k, lo: p.i + p.j, hi: p.n });
                    }
                }
                Gamma | Rho => {
                    if k > p.n - p.j {
                        return fail(TargetRange { k, lo: 0, hi: p.n - p.j });
                    }
                    if p.eta.is_none() {
                        return fail(MissingField { name: "eta" });
                    }
                }
                _ => unreachable!(),
            }
            ValidityVerdict::Valid
        }
    }
}
