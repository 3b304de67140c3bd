//! Exact computation of refined Donaldson-Thomas invariants of quivers.
//!
//! The engine works over the lambda-ring `Z[x^{+-1}]` with `x = -L^{1/2}`
//! (so `x^2` is the Lefschetz class `L`) and its fraction field:
//!
//! - [`lambda`]: the coefficient ring, Adams/sigma operations, q-brackets,
//!   Gaussian binomials and identity verifiers;
//! - [`series`]: truncated `N^I`-graded series with convolution, twisted
//!   star products, and the plethystic exponential/logarithm pair;
//! - [`quiver`]: quiver combinatorics and generating series — the stacky
//!   series, framed (non-commutative Hilbert scheme) series, and the
//!   Harder-Narasimhan semistable factorization;
//! - [`dt`]: extraction of DT invariants, the framed/stacky cross-check,
//!   the Joyce-Song transform, Euler specializations, and dimension
//!   reduction for quivers with potential;
//! - [`fqcount`]: a brute-force finite-field counting oracle with exact
//!   polynomial interpolation, used to verify the symbolic pipeline;
//! - [`job`]: batch job execution backing the `quiver-dt` binary.
//!
//! Every value is exact; there is no floating point anywhere. All public
//! types are immutable and freely shareable across threads.

pub mod dt;
pub mod fqcount;
pub mod job;
pub mod lambda;
pub mod quiver;
pub mod series;

pub use dt::{dimred_dt, dt_all, dt_slope, euler_dt, gcd_ambiguity, joyce_song, ptdt_check, DtResult};
pub use fqcount::{count_reps, count_semistable, interpolate, to_motive, CountPolynomial, RelationSpec};
pub use lambda::{
    adams_special_check, compute_pmn, gauss_binomial, gl_class, q_bracket, sigma, sigma_poly,
    verify_identity, HalfTwistPoly, RatFunc,
};
pub use quiver::{FramingVector, Quiver, Stability};
pub use series::{DimVector, GradedSeries, TwistForm};
