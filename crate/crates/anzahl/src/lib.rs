//! Exact counts of singular subspaces relative to a non-degenerate quadratic
//! form over `F_q`, `q` odd.
//!
//! The crate has four layers:
//!
//! * [`exactnum`] — sparse Laurent polynomials in `q` with exact rational
//!   coefficients, plus exact division and evaluation.
//! * [`qseries`] — the product building blocks `ψ±`, `χ` and Gaussian
//!   binomial coefficients with their boundary conventions.
//! * [`counting`] — the closed-form counting functions `α`, `β`, `γ`, `ρ`
//!   over profiles `(i, j, δ [, λ])` in ambient `(n, ε)` with targets
//!   `(k, ζ [, μ])` and span type `η`.
//! * [`oracle`] / [`verify`] — a brute-force enumeration oracle over small
//!   prime fields and the machinery that sweeps formulas against it and
//!   checks polynomial identities between the closed forms.

pub mod counting;
pub mod exactnum;
pub mod oracle;
pub mod qseries;
pub mod verify;
