//! Exact arithmetic in the coefficient lambda-ring `Z[x^{+-1}]` with
//! `x = -L^{1/2}`, its fraction field, and the attached calculus:
//!
//! - [`HalfTwistPoly`]: integer Laurent polynomials in the half-twist variable
//! - [`RatFunc`]: canonical reduced fractions, the coefficient field of all
//!   generating series
//! - Adams operations [`RatFunc::psi`] and sigma operations [`sigma`] defined
//!   by the Newton recursion
//! - q-combinatorics: [`q_bracket`], [`gauss_binomial`], [`gl_class`]
//! - the special-lambda witnesses [`adams_special_check`] and [`compute_pmn`]
//! - named identity checks in [`identities`]

pub mod adams;
pub mod identities;
pub mod poly;
pub mod ratfunc;
pub mod symfunc;

pub use adams::{adams_special_check, sigma, sigma_poly, sigma_up_to};
pub use identities::verify_identity;
pub use poly::{exact_div, gauss_binomial, gl_class, q_bracket, q_bracket_base, HalfTwistPoly};
pub use ratfunc::{half_twist_difference, t_class, RatFunc};
pub use symfunc::{compute_pmn, verify_pmn_by_expansion, SymExpr};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LambdaError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("value is not a polynomial")]
    NotPolynomial,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),
    #[error("sigma of a polynomial produced a non-polynomial (implementation bug)")]
    InternalIntegralityViolation,
}
