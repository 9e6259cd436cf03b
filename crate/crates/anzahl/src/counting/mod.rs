//! Closed-form counting functions for subspaces relative to a non-degenerate
//! quadratic form on `F_q^n`, `q` odd.
//!
//! Conventions used throughout (dimension/type bookkeeping):
//!
//! * A subspace `π` is *`i`-singular* when the radical of the restricted form
//!   has dimension `i`; `π` is non-singular when `i = 0`.
//! * Types are `+1` (hyperbolic), `−1` (elliptic) for even-dimensional
//!   non-degenerate parts and `0` (parabolic) for odd-dimensional ones. The
//!   0-dimensional space is hyperbolic; totally singular spaces get type `+1`.
//! * For `n(j−i)` odd a type-0 subspace additionally carries a *perp type*
//!   `λ ∈ {±1}`: the type of its polar space `π^⊥`. When `n = i + j` only
//!   `λ = +1` occurs.
//!
//! The counting functions are *total*: out-of-range or parity-impossible
//! profiles yield the zero polynomial (there is nothing to count), matching
//! the vanishing statements of the closed forms. [`validate`] reports *why* a
//! profile is rejected, for interface-level error reporting.

mod alpha;
mod beta;
mod gamma;
mod profile;
mod rho;

pub use alpha::{alpha, alpha_hyperplane, alpha_perp};
pub use beta::{beta, beta_nu};
pub use gamma::{
    gamma, gamma_complementary, gamma_general, gamma_n_even_j_odd, gamma_n_odd_j_even,
};
pub use profile::{validate, validate_for, Family, InvalidReason, ProfileParams, ValidityVerdict};
pub use rho::{rho, rho_perp_restricted, RhoRatio};

use serde::{Serialize, Serializer};

/// Type of a quadratic space: elliptic (−1), parabolic (0), hyperbolic (+1).
///
/// Perp types are restricted to the even-dimensional values `±1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum FormType {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl FormType {
    /// Signed value −1 / 0 / +1, as it enters the closed formulas.
    pub fn sign(self) -> i64 {
        match self {
            FormType::Elliptic => -1,
            FormType::Parabolic => 0,
            FormType::Hyperbolic => 1,
        }
    }

    /// Inverse of [`FormType::sign`].
    pub fn from_sign(s: i64) -> Option<Self> {
        match s {
            -1 => Some(FormType::Elliptic),
            0 => Some(FormType::Parabolic),
            1 => Some(FormType::Hyperbolic),
            _ => None,
        }
    }

    /// Type product (types multiply under orthogonal sums of
    /// even-dimensional spaces); zero absorbs.
    pub fn times(self, other: FormType) -> FormType {
        FormType::from_sign(self.sign() * other.sign()).expect("product of signs is a sign")
    }

    /// The two even-dimensional types, in report order.
    pub const EVEN: [FormType; 2] = [FormType::Hyperbolic, FormType::Elliptic];
}

impl Serialize for FormType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_i64(self.sign())
    }
}

impl std::fmt::Display for FormType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FormType::Elliptic => write!(f, "-1"),
            FormType::Parabolic => write!(f, "0"),
            FormType::Hyperbolic => write!(f, "+1"),
        }
    }
}

pub(crate) fn is_odd(x: i64) -> bool {
    x.rem_euclid(2) == 1
}

pub(crate) fn is_even(x: i64) -> bool {
    x.rem_euclid(2) == 0
}

/// Halve an exponent that the parity preconditions guarantee to be even.
/// A failure here is a bug in a formula transcription, not an input error.
pub(crate) fn half(x: i64) -> i64 {
    assert!(x % 2 == 0, "half-integer exponent {x}/2 escaped parity checks");
    x / 2
}

/// Same for exponents guaranteed to be multiples of four.
pub(crate) fn quarter(x: i64) -> i64 {
    assert!(x % 4 == 0, "non-integral exponent {x}/4 escaped parity checks");
    x / 4
}
