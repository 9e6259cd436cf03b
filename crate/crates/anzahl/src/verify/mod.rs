//! Verification harness tying the closed-form counts to ground truth.
//!
//! Two instruments:
//!
//! * [`identity_suite`] checks the lemma-shaped *polynomial identities* the
//!   formulas satisfy — the four dimension-reduction recursions, the
//!   double-counting relations, hyperplane specialisations, endpoint
//!   factorisations and the Pascal relations — as exact equalities of
//!   Laurent polynomials in `q`, which certifies all odd `q` at once.
//! * [`run_sweep`] compares formula values at small odd primes against
//!   brute-force enumeration from [`crate::oracle`], profile by profile.
//!
//! Failures are data, not panics: every comparison yields a report record
//! with both sides rendered, suitable for machine-readable output.

mod identities;
mod sweep;

pub use identities::{
    check_pascal, check_recursion_identity, check_structural_identity, identity_reports,
    identity_suite, IdentityId, IdentityReport, InvalidParams, RecursionInstance,
};
pub use sweep::{
    formula_poly, run_sweep, sweep_formula_vs_oracle, valid_profiles, SweepConfig, SweepReport,
};

use serde::Serialize;

/// Outcome of one comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CheckStatus {
    Match,
    Mismatch,
    Skipped { reason: String },
}

impl CheckStatus {
    pub fn is_match(&self) -> bool {
        matches!(self, CheckStatus::Match)
    }

    fn of(equal: bool) -> Self {
        if equal {
            CheckStatus::Match
        } else {
            CheckStatus::Mismatch
        }
    }
}
