//! Quadratic forms over `F_p` as Gram matrices, and classification of
//! subspaces relative to one.
//!
//! A form is stored as the symmetric Gram matrix `G` of its polar bilinear
//! form, so `Q(v) = v G vᵀ` and `B(u, v) = u G vᵀ` (characteristic is odd, so
//! the two determine each other). Types are read off the discriminant:
//! an even-dimensional non-degenerate form on `2m` coordinates is hyperbolic
//! exactly when `(-1)^m det G` is a square.

use crate::counting::{is_odd, FormType};

use super::field::{det, kernel, mat_mul, rref, transpose, Mat, PrimeFieldCtx};
use super::subspaces::Subspace;

#[derive(Debug, Clone)]
pub struct GramForm {
    pub n: usize,
    pub gram: Mat,
}

impl GramForm {
    pub fn new(n: usize, gram: Mat) -> GramForm {
        assert_eq!(gram.len(), n);
        assert!(gram.iter().all(|r| r.len() == n));
        for r in 0..n {
            for c in 0..r {
                assert_eq!(gram[r][c], gram[c][r], "gram matrix must be symmetric");
            }
        }
        GramForm { n, gram }
    }

    /// `Q(v)`.
    pub fn eval(&self, ctx: &PrimeFieldCtx, v: &[u32]) -> u32 {
        self.bilinear(ctx, v, v)
    }

    /// `B(u, v)`.
    pub fn bilinear(&self, ctx: &PrimeFieldCtx, u: &[u32], v: &[u32]) -> u32 {
        let mut acc = 0;
        for (r, &ur) in u.iter().enumerate() {
            if ur == 0 {
                continue;
            }
            let mut row = 0;
            for (c, &vc) in v.iter().enumerate() {
                row = ctx.add(row, ctx.mul(self.gram[r][c], vc));
            }
            acc = ctx.add(acc, ctx.mul(ur, row));
        }
        acc
    }

    /// Gram matrix of the restriction to the span of `rows`, in the basis
    /// given by the rows themselves.
    pub fn restricted(&self, ctx: &PrimeFieldCtx, rows: &Mat) -> GramForm {
        let bg = mat_mul(ctx, rows, &self.gram);
        let gram = mat_mul(ctx, &bg, &transpose(rows));
        GramForm { n: rows.len(), gram }
    }
}

/// The reference non-degenerate form of each type: hyperbolic planes
/// `Q = xy`, padded with `z²` (parabolic) or `z² - s·w²` for a fixed
/// non-square `s` (elliptic).
pub fn standard_form(ctx: &PrimeFieldCtx, n: usize, eps: FormType) -> GramForm {
    assert!(is_odd(n as i64 - eps.sign()), "dimension and type disagree");
    let mut gram = vec![vec![0u32; n]; n];
    let h = ctx.half();
    let planes = match eps {
        FormType::Hyperbolic => n / 2,
        FormType::Parabolic => (n - 1) / 2,
        FormType::Elliptic => (n - 2) / 2,
    };
    for b in 0..planes {
        gram[2 * b][2 * b + 1] = h;
        gram[2 * b + 1][2 * b] = h;
    }
    match eps {
        FormType::Hyperbolic => {}
        FormType::Parabolic => gram[n - 1][n - 1] = 1,
        FormType::Elliptic => {
            gram[n - 2][n - 2] = 1;
            gram[n - 1][n - 1] = ctx.neg(ctx.nonsquare);
        }
    }
    GramForm { n, gram }
}

/// Orthogonal complement of `sub` with respect to `ambient`.
pub fn perp(ctx: &PrimeFieldCtx, ambient: &GramForm, sub: &Subspace) -> Subspace {
    let bg = mat_mul(ctx, &sub.basis, &ambient.gram);
    Subspace::from_rows(ctx, &kernel(ctx, &bg, ambient.n))
}

/// What a subspace looks like to the form: radical dimension, type of the
/// non-degenerate quotient, and — when `n(j - i)` is odd — the type of its
/// orthogonal complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub i: i64,
    pub delta: FormType,
    pub lambda: Option<FormType>,
}

pub fn classify(ctx: &PrimeFieldCtx, ambient: &GramForm, sub: &Subspace) -> Classification {
    let restricted = ambient.restricted(ctx, &sub.basis);
    let (rad, delta) = quotient_type(ctx, &restricted);
    let gap = sub.dim() - rad;
    let lambda = if ambient.n % 2 == 1 && gap % 2 == 1 {
        let complement = perp(ctx, ambient, sub);
        let (rad_p, lam) = quotient_type(ctx, &ambient.restricted(ctx, &complement.basis));
        debug_assert_eq!(rad_p, rad, "complement radical is the shared radical");
        Some(lam)
    } else {
        None
    };
    Classification { i: rad as i64, delta, lambda }
}

/// Radical dimension and type of the non-degenerate quotient of a possibly
/// degenerate form. Zero-dimensional quotients count as hyperbolic.
fn quotient_type(ctx: &PrimeFieldCtx, g: &GramForm) -> (usize, FormType) {
    let mut radical = kernel(ctx, &g.gram, g.n);
    let pivots = rref(ctx, &mut radical);
    let i = pivots.len();
    let d = g.n - i;
    if d == 0 {
        return (i, FormType::Hyperbolic);
    }
    if d % 2 == 1 {
        return (i, FormType::Parabolic);
    }
    // The coordinate vectors off the radical's pivot columns complement the
    // radical, so the quotient form is just a principal submatrix.
    let keep: Vec<usize> = (0..g.n).filter(|c| !pivots.contains(c)).collect();
    let sub: Mat = keep.iter().map(|&r| keep.iter().map(|&c| g.gram[r][c]).collect()).collect();
    let mut disc = det(ctx, &sub);
    debug_assert!(disc != 0, "quotient form is non-degenerate");
    if (d / 2) % 2 == 1 {
        disc = ctx.neg(disc);
    }
    let t = if ctx.is_square(disc) { FormType::Hyperbolic } else { FormType::Elliptic };
    (i, t)
}
