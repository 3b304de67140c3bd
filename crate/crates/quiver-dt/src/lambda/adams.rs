//! Sigma operations from Adams operations.
//!
//! The coefficient ring carries the unique lambda-structure for which every
//! monomial `x^e` is a line element. On the fraction field we *define*
//! `sigma^n` through the Newton recursion
//!
//! ```text
//! n * sigma^n(a) = sum_{k=1..n} psi^k(a) * sigma^{n-k}(a)
//! ```
//!
//! which is the coefficient-wise form of `sigma_t(a) = exp(int psi_t(a) dt/t)`.
//! Division by `n` is harmless in characteristic zero, and on polynomial
//! inputs the result is provably again a polynomial; that integrality is
//! asserted rather than assumed.

use super::poly::HalfTwistPoly;
use super::ratfunc::RatFunc;
use super::LambdaError;

/// All of `sigma^0(a), ..., sigma^n(a)` by the Newton recursion.
pub fn sigma_up_to(a: &RatFunc, n: u32) -> Vec<RatFunc> {
    let mut sig = Vec::with_capacity(n as usize + 1);
    sig.push(RatFunc::one());
    if n == 0 {
        return sig;
    }
    let psis: Vec<RatFunc> = (1..=n).map(|k| a.psi(k)).collect();
    for m in 1..=n as usize {
        let mut acc = RatFunc::zero();
        for k in 1..=m {
            acc = &acc + &(&psis[k - 1] * &sig[m - k]);
        }
        sig.push(acc.div_int(m as u64));
    }
    sig
}

/// `sigma^n(a)` on the fraction field.
pub fn sigma(a: &RatFunc, n: u32) -> RatFunc {
    sigma_up_to(a, n).pop().expect("nonempty")
}

/// `sigma^n` of a polynomial, with the integrality of the Newton recursion
/// asserted. `InternalIntegralityViolation` signals an implementation bug
/// and must never fire.
pub fn sigma_poly(a: &HalfTwistPoly, n: u32) -> Result<HalfTwistPoly, LambdaError> {
    let s = sigma(&RatFunc::from_poly(a.clone()), n);
    s.as_poly()
        .cloned()
        .ok_or(LambdaError::InternalIntegralityViolation)
}

/// The special-lambda identity `psi^m(psi^n(a) * b) = psi^{mn}(a) * psi^m(b)`.
///
/// It holds for every pair in this coefficient ring (the monoid ring of a
/// free abelian group is special); returning the comparison keeps the law
/// testable on random inputs.
pub fn adams_special_check(a: &RatFunc, b: &RatFunc, m: u32, n: u32) -> bool {
    assert!(m >= 1 && n >= 1);
    let lhs = (&a.psi(n) * b).psi(m);
    let rhs = &a.psi(m * n) * &b.psi(m);
    lhs == rhs
}

/// Truncated sigma series `sigma_t(a) mod t^{order+1}` as a coefficient list.
pub fn sigma_series(a: &RatFunc, order: u32) -> Vec<RatFunc> {
    sigma_up_to(a, order)
}

/// Convolution of two truncated `t`-series.
pub(crate) fn convolve(a: &[RatFunc], b: &[RatFunc], order: usize) -> Vec<RatFunc> {
    let mut out = vec![RatFunc::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        for (j, bj) in b.iter().enumerate() {
            if i + j > order {
                break;
            }
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}
