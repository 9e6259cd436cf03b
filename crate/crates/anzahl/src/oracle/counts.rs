//! Brute-force counts by exhaustive enumeration.
//!
//! Each scan makes a single pass over the relevant subspaces and buckets
//! them by the profile data observed on the way, so one pass answers every
//! profile at once. Filtering wrappers pick out individual counts; an
//! `Option` filter left as `None` sums over that refinement.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::counting::FormType;
use crate::exactnum::Rat;

use super::field::PrimeFieldCtx;
use super::forms::{classify, GramForm};
use super::subspaces::{enumerate_subspaces, Subspace};

/// Bucket keys: `(i, δ, λ)` for subspaces, `(ζ, ν)` for overspaces of a
/// fixed subspace, `(ζ, μ, η)` for complements.
pub type AlphaKey = (i64, FormType, Option<FormType>);
pub type BetaKey = (FormType, Option<FormType>);
pub type GammaKey = (FormType, Option<FormType>, FormType);

/// Classify every `j`-dimensional subspace.
pub fn scan_alpha(ctx: &PrimeFieldCtx, form: &GramForm, j: i64) -> BTreeMap<AlphaKey, u64> {
    let mut buckets = BTreeMap::new();
    for sub in enumerate_subspaces(ctx, form.n, j as usize) {
        let c = classify(ctx, form, &sub);
        *buckets.entry((c.i, c.delta, c.lambda)).or_insert(0) += 1;
    }
    buckets
}

/// Classify every non-singular `k`-dimensional subspace containing `pi`.
/// `ν` is the perpendicular type of `pi` inside the overspace, read off by
/// rewriting `pi` in the overspace's own coordinates.
pub fn scan_beta(
    ctx: &PrimeFieldCtx,
    form: &GramForm,
    pi: &Subspace,
    k: i64,
) -> BTreeMap<BetaKey, u64> {
    let mut buckets = BTreeMap::new();
    for sigma in enumerate_subspaces(ctx, form.n, k as usize) {
        if !sigma.contains_space(ctx, pi) {
            continue;
        }
        let outer = classify(ctx, form, &sigma);
        if outer.i != 0 {
            continue;
        }
        // RREF pivots make coordinates in sigma's basis a plain lookup.
        let pivots: Vec<usize> = sigma
            .basis
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).expect("no zero rows in a basis"))
            .collect();
        let coords: Vec<Vec<u32>> =
            pi.basis.iter().map(|v| pivots.iter().map(|&c| v[c]).collect()).collect();
        let sigma_form = form.restricted(ctx, &sigma.basis);
        let inner = classify(ctx, &sigma_form, &Subspace::from_rows(ctx, &coords));
        *buckets.entry((outer.delta, inner.lambda)).or_insert(0) += 1;
    }
    buckets
}

/// Classify every non-singular `k`-dimensional subspace meeting `pi`
/// trivially and spanning a non-singular overspace with it. `μ` is the
/// perpendicular type of the complement itself, `η` the type of the span.
pub fn scan_gamma(
    ctx: &PrimeFieldCtx,
    form: &GramForm,
    pi: &Subspace,
    k: i64,
) -> BTreeMap<GammaKey, u64> {
    let j = pi.dim();
    let mut buckets = BTreeMap::new();
    for sigma in enumerate_subspaces(ctx, form.n, k as usize) {
        let cs = classify(ctx, form, &sigma);
        if cs.i != 0 {
            continue;
        }
        let span = join(ctx, pi, &sigma);
        if span.dim() != j + k as usize {
            continue;
        }
        let ct = classify(ctx, form, &span);
        if ct.i != 0 {
            continue;
        }
        *buckets.entry((cs.delta, cs.lambda, ct.delta)).or_insert(0) += 1;
    }
    buckets
}

/// Span of two subspaces: the row space of their stacked bases.
pub fn join(ctx: &PrimeFieldCtx, a: &Subspace, b: &Subspace) -> Subspace {
    let mut rows = a.basis.clone();
    rows.extend(b.basis.iter().cloned());
    Subspace::from_rows(ctx, &rows)
}

pub fn oracle_alpha(
    ctx: &PrimeFieldCtx,
    form: &GramForm,
    i: i64,
    j: i64,
    delta: FormType,
    lambda: Option<FormType>,
) -> u64 {
    scan_alpha(ctx, form, j)
        .into_iter()
        .filter(|&((bi, bd, bl), _)| bi == i && bd == delta && (lambda.is_none() || bl == lambda))
        .map(|(_, c)| c)
        .sum()
}

pub fn oracle_beta(
    ctx: &PrimeFieldCtx,
    form: &GramForm,
    pi: &Subspace,
    k: i64,
    zeta: FormType,
    nu: Option<FormType>,
) -> u64 {
    scan_beta(ctx, form, pi, k)
        .into_iter()
        .filter(|&((bz, bn), _)| bz == zeta && (nu.is_none() || bn == nu))
        .map(|(_, c)| c)
        .sum()
}

pub fn oracle_gamma(
    ctx: &PrimeFieldCtx,
    form: &GramForm,
    pi: &Subspace,
    k: i64,
    zeta: FormType,
    mu: Option<FormType>,
    eta: FormType,
) -> u64 {
    scan_gamma(ctx, form, pi, k)
        .into_iter()
        .filter(|&((bz, bm, bh), _)| bz == zeta && bh == eta && (mu.is_none() || bm == mu))
        .map(|(_, c)| c)
        .sum()
}

/// First few subspaces of a given class, in enumeration order. `lambda`
/// `None` accepts any perpendicular type.
pub fn find_representatives(
    ctx: &PrimeFieldCtx,
    form: &GramForm,
    i: i64,
    j: i64,
    delta: FormType,
    lambda: Option<FormType>,
    max: usize,
) -> Vec<Subspace> {
    let mut reps = Vec::new();
    for sub in enumerate_subspaces(ctx, form.n, j as usize) {
        let c = classify(ctx, form, &sub);
        if c.i == i && c.delta == delta && (lambda.is_none() || c.lambda == lambda) {
            reps.push(sub);
            if reps.len() == max {
                break;
            }
        }
    }
    reps
}

/// Probability that an independently chosen pair — a non-singular
/// `(j, δ)` subspace and a non-singular `(k, ζ)` one — meets trivially and
/// spans a non-singular subspace of type `η`. Exact rational.
#[allow(clippy::too_many_arguments)]
pub fn oracle_rho(
    ctx: &PrimeFieldCtx,
    form: &GramForm,
    j: i64,
    delta: FormType,
    k: i64,
    zeta: FormType,
    eta: FormType,
) -> Rat {
    let of_class = |dim: i64, t: FormType| -> Vec<Subspace> {
        enumerate_subspaces(ctx, form.n, dim as usize)
            .filter(|s| {
                let c = classify(ctx, form, s);
                c.i == 0 && c.delta == t
            })
            .collect()
    };
    let pis = of_class(j, delta);
    let sigmas = of_class(k, zeta);
    assert!(!pis.is_empty() && !sigmas.is_empty(), "no subspaces of the requested classes");
    let mut hits = 0u64;
    for pi in &pis {
        for sigma in &sigmas {
            let span = join(ctx, pi, sigma);
            if span.dim() != (j + k) as usize {
                continue;
            }
            let c = classify(ctx, form, &span);
            if c.i == 0 && c.delta == eta {
                hits += 1;
            }
        }
    }
    Rat::new(BigInt::from(hits), BigInt::from(pis.len() as u64 * sigmas.len() as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::forms::standard_form;

    #[test]
    fn line_census_in_a_parabolic_three_space() {
        let f = PrimeFieldCtx::new(3).unwrap();
        let v = standard_form(&f, 3, FormType::Parabolic);
        let buckets = scan_alpha(&f, &v, 1);
        let expected: BTreeMap<AlphaKey, u64> = [
            ((0, FormType::Parabolic, Some(FormType::Elliptic)), 3),
            ((0, FormType::Parabolic, Some(FormType::Hyperbolic)), 6),
            ((1, FormType::Hyperbolic, None), 4),
        ]
        .into();
        assert_eq!(buckets, expected);
        assert_eq!(oracle_alpha(&f, &v, 0, 1, FormType::Parabolic, None), 9);
    }

    #[test]
    fn hyperplanes_through_a_split_plane() {
        let f = PrimeFieldCtx::new(3).unwrap();
        let v = standard_form(&f, 4, FormType::Hyperbolic);
        let pi = find_representatives(&f, &v, 0, 2, FormType::Hyperbolic, None, 1)
            .pop()
            .expect("split planes exist");
        // Four hyperplanes contain the plane; two are non-singular.
        assert_eq!(oracle_beta(&f, &v, &pi, 3, FormType::Parabolic, None), 2);
    }

    #[test]
    fn representatives_match_their_requested_class() {
        let f = PrimeFieldCtx::new(3).unwrap();
        let v = standard_form(&f, 5, FormType::Parabolic);
        let reps =
            find_representatives(&f, &v, 1, 2, FormType::Parabolic, Some(FormType::Elliptic), 3);
        assert_eq!(reps.len(), 3);
        for r in &reps {
            let c = classify(&f, &v, r);
            assert_eq!((c.i, c.delta, c.lambda), (1, FormType::Parabolic, Some(FormType::Elliptic)));
        }
    }

    #[test]
    fn scans_are_class_functions() {
        // Different representatives of one class see identical buckets.
        let f = PrimeFieldCtx::new(3).unwrap();
        let v = standard_form(&f, 4, FormType::Elliptic);
        let reps = find_representatives(&f, &v, 1, 2, FormType::Parabolic, None, 3);
        assert_eq!(reps.len(), 3);
        let beta: Vec<_> = reps.iter().map(|r| scan_beta(&f, &v, r, 3)).collect();
        assert!(beta.windows(2).all(|w| w[0] == w[1]));
        let gamma: Vec<_> = reps.iter().map(|r| scan_gamma(&f, &v, r, 2)).collect();
        assert!(gamma.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn zero_dimensional_complement_is_the_type_indicator() {
        let f = PrimeFieldCtx::new(3).unwrap();
        let v = standard_form(&f, 4, FormType::Hyperbolic);
        let one = Rat::new(BigInt::from(1), BigInt::from(1));
        let rho =
            oracle_rho(&f, &v, 2, FormType::Hyperbolic, 0, FormType::Hyperbolic, FormType::Hyperbolic);
        assert_eq!(rho, one);
        let rho =
            oracle_rho(&f, &v, 2, FormType::Elliptic, 0, FormType::Hyperbolic, FormType::Hyperbolic);
        assert_eq!(rho, Rat::new(BigInt::from(0), BigInt::from(1)));
    }
}
