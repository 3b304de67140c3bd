//! Integer Laurent polynomials in the half-twist variable.
//!
//! The internal variable is `x = -L^{1/2}`, so that `x` is a line element
//! (`sigma^n(x) = x^n` and `psi^k(x) = x^k` hold without signs) and
//! `x^2 = L` is the Lefschetz class. A monomial `c*x^n` denotes
//! `c*(-1)^n*(L^{1/2})^n` in the usual half-twist notation; all display
//! routines perform that conversion.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use super::LambdaError;

/// Laurent polynomial in `x = -L^{1/2}` with integer coefficients.
///
/// Invariants: no zero coefficients are stored and exponents are unique
/// (enforced by the `BTreeMap` representation).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct HalfTwistPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl HalfTwistPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// The monomial `c * x^e`; dropping it entirely when `c = 0`.
    pub fn monomial(exp: i64, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// The pure power `x^e`.
    pub fn x_power(exp: i64) -> Self {
        Self::monomial(exp, BigInt::one())
    }

    /// The Lefschetz power `L^k = x^{2k}`.
    pub fn l_power(k: i64) -> Self {
        Self::x_power(2 * k)
    }

    /// The half-twist power `(L^{1/2})^k = (-x)^k`.
    pub fn l_half_power(k: i64) -> Self {
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::monomial(k, BigInt::from(sign))
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(0, BigInt::from(c))
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// True when the value is a single monomial `c*x^e`.
    pub fn as_monomial(&self) -> Option<(i64, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Smallest exponent present; `None` for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Leading coefficient (at the largest exponent).
    pub fn leading_coeff(&self) -> BigInt {
        self.max_exp().map(|e| self.coeff(e)).unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exp: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiply by the monomial `c * x^e`.
    pub fn mul_monomial(&self, exp: i64, coeff: &BigInt) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + exp, c * coeff))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitute `x -> x^k`; this realizes the Adams operation `psi^k`
    /// on the coefficient ring.
    pub fn substitute_x_power(&self, k: u32) -> Self {
        assert!(k >= 1, "substitution power must be positive");
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e * k as i64, c.clone()))
                .collect(),
        }
    }

    /// Content: positive gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division by an integer. Panics if any coefficient is not divisible.
    pub fn div_int_exact(&self, c: &BigInt) -> Self {
        assert!(!c.is_zero());
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| {
                    let (q, r) = v.div_rem(c);
                    assert!(r.is_zero(), "non-exact integer division of polynomial");
                    (*e, q)
                })
                .collect(),
        }
    }

    /// Evaluation at `x = 1`, i.e. the specialization `L^{1/2} -> -1`
    /// computing compactly supported Euler characteristics.
    pub fn euler_specialize(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Evaluate at `x^2 = q` for a rational `q`. Fails with `NotPolynomial`
    /// when an odd power of `x` is present (the value then genuinely involves
    /// a square root of `q`).
    pub fn eval_q(&self, q: &BigRational) -> Result<BigRational, LambdaError> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            if e.rem_euclid(2) != 0 {
                return Err(LambdaError::NotPolynomial);
            }
            let k = e / 2;
            let p = if k >= 0 {
                num::pow::pow(q.clone(), k as usize)
            } else {
                num::pow::pow(q.clone(), (-k) as usize)
                    .recip()
            };
            acc += BigRational::from_integer(c.clone()) * p;
        }
        Ok(acc)
    }

    /// Serialization as sorted `[exponent, coefficient]` pairs (exponent in `x`).
    pub fn to_pairs(&self) -> Vec<(i64, BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c.clone())).collect()
    }

    pub fn from_pairs(pairs: &[(i64, BigInt)]) -> Self {
        Self::from_terms(pairs.iter().cloned())
    }

    /// Pairs `[half-exponent, coefficient]` in units of `L^{1/2}`:
    /// the monomial `c*x^n` contributes coefficient `c*(-1)^n` at `(L^{1/2})^n`.
    pub fn to_lhalf_pairs(&self) -> Vec<(i64, BigInt)> {
        self.terms
            .iter()
            .map(|(e, c)| {
                let c = if e.rem_euclid(2) == 0 { c.clone() } else { -c };
                (*e, c)
            })
            .collect()
    }

    pub fn from_lhalf_pairs(pairs: &[(i64, BigInt)]) -> Self {
        Self::from_terms(pairs.iter().map(|(e, c)| {
            let c = if e.rem_euclid(2) == 0 { c.clone() } else { -c.clone() };
            (*e, c)
        }))
    }

    /// True when only even powers of `x` (integer powers of `L`) occur.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|e| e.rem_euclid(2) == 0)
    }

    /// Render with `x` as the variable.
    pub fn to_string_x(&self) -> String {
        self.render(|e| match e {
            0 => None,
            1 => Some("x".to_string()),
            e => Some(format!("x^{e}")),
        }, false)
    }

    /// Render in powers of `q = L`; requires all exponents even.
    pub fn to_string_q(&self) -> Option<String> {
        if !self.is_even() {
            return None;
        }
        Some(self.render(
            |e| match e / 2 {
                0 => None,
                1 => Some("q".to_string()),
                k => Some(format!("q^{k}")),
            },
            false,
        ))
    }

    fn render(&self, var: impl Fn(i64) -> Option<String>, lhalf_signs: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        // highest power first, as one writes polynomials by hand
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let c = if lhalf_signs && e.rem_euclid(2) != 0 { -c } else { c.clone() };
            let mag = c.abs();
            if i == 0 {
                if c.sign() == Sign::Minus {
                    out.push('-');
                }
            } else if c.sign() == Sign::Minus {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            match var(*e) {
                None => out.push_str(&mag.to_string()),
                Some(v) => {
                    if !mag.is_one() {
                        out.push_str(&mag.to_string());
                        out.push('*');
                    }
                    out.push_str(&v);
                }
            }
        }
        out
    }
}

/// Display in half-twist notation: `c*x^n` prints as `c*(-1)^n * L^{n/2}`.
impl fmt::Display for HalfTwistPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.render(
            |e| {
                if e == 0 {
                    None
                } else if e.rem_euclid(2) == 0 {
                    let k = e / 2;
                    Some(if k == 1 { "L".to_string() } else { format!("L^{k}") })
                } else {
                    Some(format!("L^({e}/2)"))
                }
            },
            true,
        );
        f.write_str(&s)
    }
}

impl fmt::Debug for HalfTwistPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HalfTwistPoly({})", self.to_string_x())
    }
}

impl Add for &HalfTwistPoly {
    type Output = HalfTwistPoly;
    fn add(self, rhs: &HalfTwistPoly) -> HalfTwistPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &HalfTwistPoly {
    type Output = HalfTwistPoly;
    fn sub(self, rhs: &HalfTwistPoly) -> HalfTwistPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &(-c));
        }
        out
    }
}

impl Mul for &HalfTwistPoly {
    type Output = HalfTwistPoly;
    fn mul(self, rhs: &HalfTwistPoly) -> HalfTwistPoly {
        let mut out = HalfTwistPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &HalfTwistPoly {
    type Output = HalfTwistPoly;
    fn neg(self) -> HalfTwistPoly {
        HalfTwistPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for HalfTwistPoly {
            type Output = HalfTwistPoly;
            fn $method(self, rhs: HalfTwistPoly) -> HalfTwistPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

// ---------------------------------------------------------------------------
// dense polynomial helpers for gcd / exact division
// ---------------------------------------------------------------------------

/// Dense coefficient vector (ascending exponents, nonzero leading coefficient)
/// for a genuine polynomial part. Used internally by fraction normalization.
pub(crate) fn to_dense(p: &HalfTwistPoly) -> Vec<BigInt> {
    assert!(!p.is_zero());
    let lo = p.min_exp().unwrap();
    assert!(lo >= 0, "to_dense requires a polynomial (no negative exponents)");
    let hi = p.max_exp().unwrap();
    let mut v = vec![BigInt::zero(); (hi + 1) as usize];
    for (e, c) in &p.terms {
        v[*e as usize] = c.clone();
    }
    v
}

pub(crate) fn from_dense(v: &[BigInt]) -> HalfTwistPoly {
    HalfTwistPoly::from_terms(
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as i64, c.clone())),
    )
}

fn dense_trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn dense_content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn dense_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let c = dense_content(&v);
    if !c.is_zero() && !c.is_one() {
        for x in &mut v {
            *x = &*x / &c;
        }
    }
    v
}

/// Pseudo-remainder of `a` by `b` (for the primitive Euclidean algorithm).
fn dense_prem(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    while a.len() >= b.len() && !a.is_empty() {
        let da = a.len() - 1;
        let la = a.last().unwrap().clone();
        for x in a.iter_mut() {
            *x = &*x * &lb;
        }
        let shift = da - db;
        for (i, bc) in b.iter().enumerate() {
            a[shift + i] -= &la * bc;
        }
        dense_trim(&mut a);
    }
    a
}

/// Primitive gcd of two polynomials (positive leading coefficient).
/// Contents are handled separately by the caller.
pub(crate) fn dense_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = dense_primitive(a.to_vec());
    let mut b = dense_primitive(b.to_vec());
    if a.is_empty() {
        return normalize_sign(b);
    }
    if b.is_empty() {
        return normalize_sign(a);
    }
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = dense_prem(a, &b);
        a = b;
        b = dense_primitive(r);
    }
    normalize_sign(a)
}

fn normalize_sign(mut v: Vec<BigInt>) -> Vec<BigInt> {
    if v.last().is_some_and(|c| c.is_negative()) {
        for x in &mut v {
            *x = -&*x;
        }
    }
    v
}

/// Exact polynomial division; `None` when the division leaves a remainder.
pub(crate) fn dense_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert!(!b.is_empty());
    let mut rem = a.to_vec();
    dense_trim(&mut rem);
    if rem.is_empty() {
        return Some(vec![]);
    }
    if rem.len() < b.len() {
        return None;
    }
    let mut quot = vec![BigInt::zero(); rem.len() - b.len() + 1];
    let lb = b.last().unwrap();
    while rem.len() >= b.len() && !rem.is_empty() {
        let la = rem.last().unwrap();
        let (q, r) = la.div_rem(lb);
        if r.is_zero() {
            let shift = rem.len() - b.len();
            quot[shift] = q.clone();
            for (i, bc) in b.iter().enumerate() {
                rem[shift + i] -= &q * bc;
            }
            dense_trim(&mut rem);
        } else {
            return None;
        }
    }
    if rem.is_empty() {
        Some(quot)
    } else {
        None
    }
}

/// Exact division of Laurent polynomials, used where the result is known to be
/// a polynomial (Gaussian binomials, framed motive extraction).
pub fn exact_div(a: &HalfTwistPoly, b: &HalfTwistPoly) -> Option<HalfTwistPoly> {
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(HalfTwistPoly::zero());
    }
    let sa = a.min_exp().unwrap();
    let sb = b.min_exp().unwrap();
    let pa = a.mul_monomial(-sa, &BigInt::one());
    let pb = b.mul_monomial(-sb, &BigInt::one());
    let q = dense_div_exact(&to_dense(&pa), &to_dense(&pb))?;
    Some(from_dense(&q).mul_monomial(sa - sb, &BigInt::one()))
}

// ---------------------------------------------------------------------------
// q-combinatorial gadgets
// ---------------------------------------------------------------------------

/// The bracket `[n]_L = 1 + L + ... + L^{n-1}`, the class of `P^{n-1}`.
/// `q_bracket(0) = 0`.
pub fn q_bracket(n: u32) -> HalfTwistPoly {
    HalfTwistPoly::from_terms((0..n as i64).map(|j| (2 * j, BigInt::one())))
}

/// Bracket in the base `L^m`: `1 + L^m + ... + L^{m(n-1)}`.
pub fn q_bracket_base(n: u32, m: u32) -> HalfTwistPoly {
    HalfTwistPoly::from_terms((0..n as i64).map(|j| (2 * m as i64 * j, BigInt::one())))
}

/// Gaussian binomial `[f choose d]_L`, the class of the Grassmannian `Gr(d, f)`.
///
/// Computed by exact polynomial division of bracket factorials; the result has
/// non-negative integer coefficients.
pub fn gauss_binomial(f: u32, d: u32) -> Result<HalfTwistPoly, LambdaError> {
    if d > f {
        return Err(LambdaError::Domain(format!(
            "gauss_binomial requires d <= f, got d={d}, f={f}"
        )));
    }
    // [f-d+1][f-d+2]...[f] / ([1][2]...[d]), dividing as we go so every
    // intermediate stays a polynomial.
    let mut acc = HalfTwistPoly::one();
    for j in 1..=d {
        acc = &acc * &q_bracket(f - d + j);
        acc = exact_div(&acc, &q_bracket(j))
            .expect("bracket factorial division is exact");
    }
    Ok(acc)
}

/// Class of the general linear group: `[GL(n)] = prod_{k=0}^{n-1} (L^n - L^k)`.
pub fn gl_class(n: u32) -> HalfTwistPoly {
    let mut acc = HalfTwistPoly::one();
    for k in 0..n as i64 {
        let factor = &HalfTwistPoly::l_power(n as i64) - &HalfTwistPoly::l_power(k);
        acc = &acc * &factor;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l() -> HalfTwistPoly {
        HalfTwistPoly::l_power(1)
    }

    #[test]
    fn conversion_contract() {
        // x^2 = L, and L^{1/2} = -x
        assert_eq!(HalfTwistPoly::l_half_power(2), l());
        assert_eq!(HalfTwistPoly::l_half_power(1), HalfTwistPoly::monomial(1, BigInt::from(-1)));
        assert_eq!(HalfTwistPoly::l_half_power(3).to_lhalf_pairs(), vec![(3, BigInt::one())]);
    }

    #[test]
    fn q_bracket_small() {
        assert!(q_bracket(0).is_zero());
        assert_eq!(q_bracket(1), HalfTwistPoly::one());
        assert_eq!(q_bracket(2), &HalfTwistPoly::one() + &l());
    }

    #[test]
    fn q_bracket_split_identity() {
        // [7]_L = L * [3]_{L^2} * [2]_L + [1]_L
        let lhs = q_bracket(7);
        let rhs = &(&(&l() * &q_bracket_base(3, 2)) * &q_bracket(2)) + &q_bracket(1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn gauss_binomial_values() {
        assert_eq!(gauss_binomial(2, 1).unwrap(), q_bracket(2));
        // [4 choose 2] = 1 + L + 2L^2 + L^3 + L^4, expanded from [4][3]/([2][1])
        let expected = HalfTwistPoly::from_terms(vec![
            (0, BigInt::one()),
            (2, BigInt::one()),
            (4, BigInt::from(2)),
            (6, BigInt::one()),
            (8, BigInt::one()),
        ]);
        assert_eq!(gauss_binomial(4, 2).unwrap(), expected);
        assert_eq!(gauss_binomial(5, 0).unwrap(), HalfTwistPoly::one());
        assert!(gauss_binomial(2, 3).is_err());
    }

    #[test]
    fn gauss_binomial_symmetry_and_positivity() {
        for f in 0..=6u32 {
            for d in 0..=f {
                let a = gauss_binomial(f, d).unwrap();
                let b = gauss_binomial(f, f - d).unwrap();
                assert_eq!(a, b);
                assert!(a.iter().all(|(_, c)| c.is_positive()));
            }
        }
    }

    #[test]
    fn gauss_binomial_counts_subspaces() {
        // independent oracle: count subspaces of F_q^f of dimension d via the
        // Schubert cell decomposition; the cell with 0-indexed pivot columns
        // p_1 < ... < p_d contributes q^{sum_i (p_i - (i-1))} points
        fn count_subspaces(f: u32, d: u32, q: u64) -> u64 {
            let mut total = 0u64;
            let cols: Vec<u32> = (0..f).collect();
            fn combos(cols: &[u32], d: usize) -> Vec<Vec<u32>> {
                if d == 0 {
                    return vec![vec![]];
                }
                let mut out = vec![];
                for (i, &c) in cols.iter().enumerate() {
                    for mut rest in combos(&cols[i + 1..], d - 1) {
                        let mut v = vec![c];
                        v.append(&mut rest);
                        out.push(v);
                    }
                }
                out
            }
            for pivots in combos(&cols, d as usize) {
                let mut free = 0u32;
                for (i, &p) in pivots.iter().enumerate() {
                    free += p - i as u32;
                }
                total += q.pow(free);
            }
            total
        }
        for q in [2u64, 3, 5] {
            for f in 0..=4u32 {
                for d in 0..=f {
                    let poly = gauss_binomial(f, d).unwrap();
                    let val = poly
                        .eval_q(&BigRational::from_integer(BigInt::from(q)))
                        .unwrap();
                    assert_eq!(
                        val,
                        BigRational::from_integer(BigInt::from(count_subspaces(f, d, q))),
                        "gauss({f},{d}) at q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn gl_class_values() {
        assert_eq!(gl_class(0), HalfTwistPoly::one());
        assert_eq!(gl_class(1), &l() - &HalfTwistPoly::one());
        let l2 = HalfTwistPoly::l_power(2);
        let expected = &(&l2 - &HalfTwistPoly::one()) * &(&l2 - &l());
        assert_eq!(gl_class(2), expected);
        // degree in L is n^2
        assert_eq!(gl_class(3).max_exp(), Some(18));
    }

    #[test]
    fn gl_class_euler_vanishes() {
        for n in 1..=4u32 {
            assert!(gl_class(n).euler_specialize().is_zero());
        }
    }

    #[test]
    fn euler_specialization() {
        // chi_c(L^{1/2}) = -1
        assert_eq!(HalfTwistPoly::l_half_power(1).euler_specialize(), BigInt::from(-1));
        assert_eq!(l().euler_specialize(), BigInt::one());
        for n in 0..8u32 {
            assert_eq!(q_bracket(n).euler_specialize(), BigInt::from(n));
        }
    }

    #[test]
    fn exact_division() {
        let a = &q_bracket(4) * &q_bracket(3);
        let q = exact_div(&a, &q_bracket(3)).unwrap();
        assert_eq!(q, q_bracket(4));
        assert!(exact_div(&q_bracket(3), &q_bracket(2)).is_none());
    }

    #[test]
    fn display_half_twist() {
        assert_eq!(l().to_string(), "L");
        assert_eq!(HalfTwistPoly::l_half_power(1).to_string(), "L^(1/2)");
        assert_eq!(HalfTwistPoly::l_half_power(3).to_string(), "L^(3/2)");
        let p = &l() - &HalfTwistPoly::one();
        assert_eq!(p.to_string(), "L - 1");
        assert_eq!(p.to_string_q().unwrap(), "q - 1");
        assert_eq!(HalfTwistPoly::l_half_power(1).to_string_q(), None);
    }
}
