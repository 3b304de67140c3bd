//! Named identity verifiers for the coefficient lambda-ring.
//!
//! These are exact checks, dispatched by name so the self-check command can
//! drive them from the command line:
//!
//! - `bracket_split`: `[n]_L = L^r [p]_{L^m} [m]_L + [r]_L` for `n = pm + r`.
//! - `sigma_localization`: `(L^{mn} - 1) sigma^n(T_m) = sum_{j<n} sigma^j(T_m)`
//!   with `T_m = (L^m - 1)^{-1}`, the telescoping law that makes localization
//!   by `L^m - 1` a lambda-ring.
//! - `sigma_group_hom`: `sigma_t(a+b) = sigma_t(a) sigma_t(b)` to a given
//!   order on deterministic pseudo-random fractions.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use num::BigInt;

use super::adams::{convolve, sigma_series, sigma_up_to};
use super::poly::{q_bracket, q_bracket_base, HalfTwistPoly};
use super::ratfunc::{t_class, RatFunc};
use super::LambdaError;

const MAX_BRACKET: u64 = 200;
const MAX_LOCALIZATION: u64 = 3;
const MAX_SERIES_ORDER: u64 = 8;

/// Verify a named identity. Parameter meaning depends on the identity:
/// `bracket_split` takes `[n, m]`, `sigma_localization` takes `[m, n]`,
/// `sigma_group_hom` takes `[order]`.
pub fn verify_identity(name: &str, params: &[u64]) -> Result<bool, LambdaError> {
    match name {
        "bracket_split" => {
            let [n, m] = two(params)?;
            if m < 1 || n < m || n > MAX_BRACKET {
                return Err(LambdaError::Domain(format!(
                    "bracket_split requires 1 <= m <= n <= {MAX_BRACKET}"
                )));
            }
            Ok(bracket_split(n as u32, m as u32))
        }
        "sigma_localization" => {
            let [m, n] = two(params)?;
            if m < 1 || n < 1 || m > MAX_LOCALIZATION || n > MAX_LOCALIZATION {
                return Err(LambdaError::Domain(format!(
                    "sigma_localization requires 1 <= m, n <= {MAX_LOCALIZATION}"
                )));
            }
            Ok(sigma_localization(m as u32, n as u32))
        }
        "sigma_group_hom" => {
            let order = *params.first().ok_or_else(|| {
                LambdaError::Domain("sigma_group_hom expects [order]".into())
            })?;
            if order > MAX_SERIES_ORDER {
                return Err(LambdaError::Domain(format!(
                    "sigma_group_hom order bounded by {MAX_SERIES_ORDER}"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            Ok((0..20).all(|_| {
                let a = random_ratfunc(&mut rng);
                let b = random_ratfunc(&mut rng);
                sigma_group_hom(&a, &b, order as u32)
            }))
        }
        other => Err(LambdaError::UnknownIdentity(other.to_string())),
    }
}

fn two(params: &[u64]) -> Result<[u64; 2], LambdaError> {
    if params.len() < 2 {
        return Err(LambdaError::Domain("identity expects two parameters".into()));
    }
    Ok([params[0], params[1]])
}

/// `[n]_L = L^r [p]_{L^m} [m]_L + [r]_L` where `n = pm + r`, `0 <= r < m`.
pub fn bracket_split(n: u32, m: u32) -> bool {
    let p = n / m;
    let r = n % m;
    let lhs = q_bracket(n);
    let rhs = &(&HalfTwistPoly::l_power(r as i64) * &(&q_bracket_base(p, m) * &q_bracket(m)))
        + &q_bracket(r);
    lhs == rhs
}

/// `(L^{mn} - 1) sigma^n(T_m) = sum_{j=0}^{n-1} sigma^j(T_m)` with
/// `T_m = (L^m - 1)^{-1}` and `sigma` from the Newton recursion.
pub fn sigma_localization(m: u32, n: u32) -> bool {
    let t = t_class(m);
    let sig = sigma_up_to(&t, n);
    let factor = RatFunc::from_poly(
        &HalfTwistPoly::l_power((m * n) as i64) - &HalfTwistPoly::one(),
    );
    let lhs = &factor * &sig[n as usize];
    let mut rhs = RatFunc::zero();
    for s in sig.iter().take(n as usize) {
        rhs = &rhs + s;
    }
    lhs == rhs
}

/// `sigma_t(a + b) = sigma_t(a) sigma_t(b)` compared exactly to the given order.
pub fn sigma_group_hom(a: &RatFunc, b: &RatFunc, order: u32) -> bool {
    let sab = sigma_series(&(a + b), order);
    let prod = convolve(
        &sigma_series(a, order),
        &sigma_series(b, order),
        order as usize,
    );
    sab == prod
}

/// Deterministic small random fraction: Laurent numerator over one of the
/// standard nonvanishing denominators.
pub fn random_ratfunc(rng: &mut ChaCha8Rng) -> RatFunc {
    let nterms = rng.gen_range(1..=3);
    let mut num = HalfTwistPoly::zero();
    for _ in 0..nterms {
        let e = rng.gen_range(-3..=3);
        let c = rng.gen_range(-4..=4i64);
        num = &num + &HalfTwistPoly::monomial(e, BigInt::from(c));
    }
    if num.is_zero() {
        num = HalfTwistPoly::one();
    }
    let den = match rng.gen_range(0..4) {
        0 => HalfTwistPoly::one(),
        1 => &HalfTwistPoly::l_power(1) - &HalfTwistPoly::one(),
        2 => &HalfTwistPoly::l_power(2) - &HalfTwistPoly::one(),
        _ => &HalfTwistPoly::l_power(1) + &HalfTwistPoly::one(),
    };
    RatFunc::new(num, den).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_split_named_case() {
        assert!(verify_identity("bracket_split", &[7, 2]).unwrap());
        for n in 1..=60u64 {
            for m in 1..=n {
                assert!(verify_identity("bracket_split", &[n, m]).unwrap(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn sigma_localization_cases() {
        // m = n = 1 is (L-1) T_1 = 1
        assert!(verify_identity("sigma_localization", &[1, 1]).unwrap());
        assert!(verify_identity("sigma_localization", &[2, 2]).unwrap());
        for m in 1..=3u64 {
            for n in 1..=3u64 {
                assert!(verify_identity("sigma_localization", &[m, n]).unwrap());
            }
        }
    }

    #[test]
    fn group_hom_runs() {
        assert!(verify_identity("sigma_group_hom", &[6]).unwrap());
    }

    #[test]
    fn unknown_identity() {
        assert!(matches!(
            verify_identity("no_such_identity", &[]),
            Err(LambdaError::UnknownIdentity(_))
        ));
    }
}
