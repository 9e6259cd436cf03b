//! Brute-force enumeration oracle over small prime fields.
//!
//! Everything the closed forms claim to count is counted here literally:
//! subspaces are enumerated in reduced row echelon form, restricted Gram
//! matrices are classified by radical and discriminant, and the counting
//! functions are realised as scans that bucket every enumerated
//! configuration by its observed profile. No formula from [`crate::counting`]
//! is consulted anywhere in this module.

mod counts;
mod field;
mod forms;
mod subspaces;

pub use counts::{
    find_representatives, join, oracle_alpha, oracle_beta, oracle_gamma, oracle_rho, scan_alpha,
    scan_beta, scan_gamma,
};
pub use field::{kernel, rank, rref, Mat, PrimeFieldCtx};
pub use forms::{classify, perp, standard_form, Classification, GramForm};
pub use subspaces::{enumerate_subspaces, Subspace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("modulus must be an odd prime: {0}")]
    NotOddPrime(u32),
}
