//! Reduced fractions of half-twist polynomials.
//!
//! `RatFunc` is the fraction field of `Z[x^{+-1}]` in canonical form, so
//! equality of values is equality of representations. This is where the
//! coefficients of stacky generating series live (denominators such as
//! `[GL(d)]` and `L^m - 1`).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use super::poly::{dense_div_exact, dense_gcd, from_dense, to_dense, HalfTwistPoly};
use super::LambdaError;

/// A reduced fraction `num/den` of Laurent polynomials in `x = -L^{1/2}`.
///
/// Normal form: the denominator is a genuine polynomial with a non-zero
/// constant term and positive leading coefficient, `gcd(num, den) = 1` up to
/// monomials, and the integer contents of numerator and denominator are
/// coprime. Powers of `x` are pushed into the numerator (where they are
/// units of the Laurent ring). Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: HalfTwistPoly,
    den: HalfTwistPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self { num: HalfTwistPoly::zero(), den: HalfTwistPoly::one() }
    }

    pub fn one() -> Self {
        Self { num: HalfTwistPoly::one(), den: HalfTwistPoly::one() }
    }

    pub fn from_poly(p: HalfTwistPoly) -> Self {
        Self { num: p, den: HalfTwistPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(HalfTwistPoly::from_int(c))
    }

    /// `num/den`, normalized. Fails on a zero denominator.
    pub fn new(num: HalfTwistPoly, den: HalfTwistPoly) -> Result<Self, LambdaError> {
        if den.is_zero() {
            return Err(LambdaError::Domain("zero denominator".into()));
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: HalfTwistPoly, den: HalfTwistPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        // split off monomial units x^v
        let vn = num.min_exp().unwrap();
        let vd = den.min_exp().unwrap();
        let n0 = num.mul_monomial(-vn, &BigInt::one());
        let d0 = den.mul_monomial(-vd, &BigInt::one());
        let (mut n1, mut d1) = (to_dense(&n0), to_dense(&d0));
        // polynomial gcd
        let g = dense_gcd(&n1, &d1);
        if g.len() > 1 || !g[0].is_one() {
            n1 = dense_div_exact(&n1, &g).expect("gcd divides numerator");
            d1 = dense_div_exact(&d1, &g).expect("gcd divides denominator");
        }
        // integer content
        let mut cn = BigInt::zero();
        for c in &n1 {
            cn = cn.gcd(c);
        }
        let mut cd = BigInt::zero();
        for c in &d1 {
            cd = cd.gcd(c);
        }
        let c = cn.gcd(&cd);
        if !c.is_one() {
            for x in &mut n1 {
                *x = &*x / &c;
            }
            for x in &mut d1 {
                *x = &*x / &c;
            }
        }
        // positive leading coefficient downstairs
        if d1.last().unwrap().is_negative() {
            for x in &mut n1 {
                *x = -&*x;
            }
            for x in &mut d1 {
                *x = -&*x;
            }
        }
        Self {
            num: from_dense(&n1).mul_monomial(vn - vd, &BigInt::one()),
            den: from_dense(&d1),
        }
    }

    pub fn numerator(&self) -> &HalfTwistPoly {
        &self.num
    }

    pub fn denominator(&self) -> &HalfTwistPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The underlying polynomial when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&HalfTwistPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inverse(&self) -> Result<Self, LambdaError> {
        if self.is_zero() {
            return Err(LambdaError::Domain("inverse of zero".into()));
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    /// Scale by an exact rational number.
    pub fn scale(&self, s: &BigRational) -> Self {
        let num = self.num.mul_monomial(0, s.numer());
        let den = self.den.mul_monomial(0, s.denom());
        Self::normalized(num, den)
    }

    /// Divide by a positive integer (exact in the fraction field).
    pub fn div_int(&self, n: u64) -> Self {
        self.scale(&BigRational::new(BigInt::one(), BigInt::from(n)))
    }

    pub fn mul_poly(&self, p: &HalfTwistPoly) -> Self {
        Self::normalized(&self.num * p, self.den.clone())
    }

    /// The Adams operation `psi^k`: substitute `x -> x^k`.
    ///
    /// `psi^1` is the identity and `psi^k . psi^l = psi^{kl}`; each `psi^k`
    /// is a ring endomorphism of the fraction field.
    pub fn psi(&self, k: u32) -> Self {
        assert!(k >= 1, "Adams operations are indexed by positive integers");
        if k == 1 {
            return self.clone();
        }
        Self::normalized(self.num.substitute_x_power(k), self.den.substitute_x_power(k))
    }

    /// Evaluate at `x^2 = q`. Fails when an odd power of `x` survives or the
    /// denominator vanishes at `q`.
    pub fn eval_q(&self, q: &BigRational) -> Result<BigRational, LambdaError> {
        let n = self.num.eval_q(q)?;
        let d = self.den.eval_q(q)?;
        if d.is_zero() {
            return Err(LambdaError::Domain(format!("pole at q = {q}")));
        }
        Ok(n / d)
    }

    /// Evaluate at `x = 1` (Euler specialization `L^{1/2} -> -1`); fails when
    /// the denominator vanishes there.
    pub fn euler_eval(&self) -> Result<BigRational, LambdaError> {
        let d = self.den.euler_specialize();
        if d.is_zero() {
            return Err(LambdaError::NotPolynomial);
        }
        Ok(BigRational::new(self.num.euler_specialize(), d))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({} / {})", self.num.to_string_x(), self.den.to_string_x())
    }
}

impl From<HalfTwistPoly> for RatFunc {
    fn from(p: HalfTwistPoly) -> Self {
        Self::from_poly(p)
    }
}

/// gcd of two Laurent polynomials up to monomial units (always a genuine
/// polynomial with nonzero constant term, positive leading coefficient).
fn laurent_gcd(a: &HalfTwistPoly, b: &HalfTwistPoly) -> Option<HalfTwistPoly> {
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let pa = a.mul_monomial(-a.min_exp().unwrap(), &BigInt::one());
    let pb = b.mul_monomial(-b.min_exp().unwrap(), &BigInt::one());
    let g = dense_gcd(&to_dense(&pa), &to_dense(&pb));
    if g.len() == 1 && g[0].is_one() {
        None
    } else {
        Some(from_dense(&g))
    }
}

fn reduce_pair(num: &HalfTwistPoly, den: &HalfTwistPoly) -> (HalfTwistPoly, HalfTwistPoly) {
    match laurent_gcd(num, den) {
        Some(g) => (
            exact_div_laurent(num, &g),
            exact_div_laurent(den, &g),
        ),
        None => (num.clone(), den.clone()),
    }
}

fn exact_div_laurent(a: &HalfTwistPoly, g: &HalfTwistPoly) -> HalfTwistPoly {
    super::poly::exact_div(a, g).expect("gcd divides")
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        // common-denominator trick keeps intermediates small
        match laurent_gcd(&self.den, &rhs.den) {
            Some(g) => {
                let ra = exact_div_laurent(&self.den, &g);
                let rb = exact_div_laurent(&rhs.den, &g);
                let num = &(&self.num * &rb) + &(&rhs.num * &ra);
                RatFunc::normalized(num, &self.den * &rb)
            }
            None => {
                let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
                RatFunc::normalized(num, &self.den * &rhs.den)
            }
        }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        // cross-reduce before multiplying so the final gcd is trivial
        let (na, db) = reduce_pair(&self.num, &rhs.den);
        let (nb, da) = reduce_pair(&rhs.num, &self.den);
        RatFunc::normalized(&na * &nb, &da * &db)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero RatFunc");
        let (na, nb) = reduce_pair(&self.num, &rhs.num);
        let (db, da) = reduce_pair(&rhs.den, &self.den);
        RatFunc::normalized(&na * &db, &da * &nb)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

/// `L^{1/2} - L^{-1/2} = (1 - x^2)/x`, the scalar that turns plethystic
/// logarithms of stacky series into Donaldson-Thomas values.
pub fn half_twist_difference() -> RatFunc {
    RatFunc::new(
        &HalfTwistPoly::one() - &HalfTwistPoly::l_power(1),
        HalfTwistPoly::x_power(1),
    )
    .expect("nonzero denominator")
}

/// `T_m = (L^m - 1)^{-1}`, the localized class used in the bracket identities.
pub fn t_class(m: u32) -> RatFunc {
    RatFunc::new(
        HalfTwistPoly::one(),
        &HalfTwistPoly::l_power(m as i64) - &HalfTwistPoly::one(),
    )
    .expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::poly::{gl_class, q_bracket};

    fn l() -> HalfTwistPoly {
        HalfTwistPoly::l_power(1)
    }

    #[test]
    fn normal_form_is_canonical() {
        // (L-1)(L+1)/(L-1) reduces to L+1
        let lm1 = &l() - &HalfTwistPoly::one();
        let lp1 = &l() + &HalfTwistPoly::one();
        let a = RatFunc::new(&lm1 * &lp1, lm1.clone()).unwrap();
        assert_eq!(a, RatFunc::from_poly(lp1));
        // 2/(2L-2) reduces to 1/(L-1)
        let b = RatFunc::new(
            HalfTwistPoly::from_int(2),
            HalfTwistPoly::from_terms(vec![(2, BigInt::from(2)), (0, BigInt::from(-2))]),
        )
        .unwrap();
        assert_eq!(b, t_class(1));
        // denominator sign pinned positive
        let c = RatFunc::new(HalfTwistPoly::one(), &HalfTwistPoly::one() - &l()).unwrap();
        assert!(c.denominator().leading_coeff().is_positive());
        assert_eq!(&c + &t_class(1), RatFunc::zero());
    }

    #[test]
    fn field_arithmetic() {
        let a = t_class(1);
        let b = t_class(2);
        let prod = &a * &b;
        let back = &prod / &b;
        assert_eq!(back, a);
        assert_eq!(&a - &a, RatFunc::zero());
        assert_eq!(a.inverse().unwrap().inverse().unwrap(), a);
        assert!(RatFunc::zero().inverse().is_err());
    }

    #[test]
    fn psi_is_substitution() {
        // psi^2 on L^{1/2} = -x gives -L = -x^2 (sign law)
        let lhalf = RatFunc::from_poly(HalfTwistPoly::l_half_power(1));
        let expect = RatFunc::from_poly(&HalfTwistPoly::zero() - &l());
        assert_eq!(lhalf.psi(2), expect);
        // psi^2((L-1)^{-1}) = (L^2-1)^{-1}
        assert_eq!(t_class(1).psi(2), t_class(2));
        // psi^k . psi^l = psi^{kl}, psi^1 = id
        let a = RatFunc::new(q_bracket(3), gl_class(2)).unwrap();
        assert_eq!(a.psi(1), a);
        assert_eq!(a.psi(2).psi(3), a.psi(6));
    }

    #[test]
    fn psi_sign_law() {
        // psi^k(L^{1/2}) = (-1)^{k+1} L^{k/2}
        let lhalf = RatFunc::from_poly(HalfTwistPoly::l_half_power(1));
        for k in 1..=8u32 {
            let expect = RatFunc::from_poly(
                HalfTwistPoly::l_half_power(k as i64)
                    .mul_monomial(0, &BigInt::from(if k % 2 == 1 { 1 } else { -1 })),
            );
            assert_eq!(lhalf.psi(k), expect, "k = {k}");
        }
    }

    #[test]
    fn euler_eval_and_poles() {
        let u = half_twist_difference();
        // (1-x^2)/x at x=1 is 0
        assert_eq!(u.euler_eval().unwrap(), BigRational::zero());
        assert!(t_class(1).euler_eval().is_err());
    }
}
