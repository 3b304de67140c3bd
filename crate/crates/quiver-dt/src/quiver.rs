//! Quiver combinatorics and the attached generating series.
//!
//! - [`Quiver`]: vertex list plus arrow-count matrix, with the Euler pairing
//!   `chi(d,e) = sum_i d_i e_i - sum_{i,j} a_{ij} d_i e_j` and its
//!   antisymmetrization driving the star-product twist.
//! - [`Quiver::stack_series`]: the normalized class of the moduli stack,
//!   graded coefficient `(-x)^{chi(d,d)} L^{dim R_d} / prod_i [GL(d_i)]`.
//! - [`Quiver::framed_series`] / [`Quiver::hilbert_motive`]: the framed
//!   (non-commutative Hilbert scheme) series and the extracted motives of the
//!   framed moduli spaces.
//! - [`Quiver::hn_semistable_series`]: semistable stack classes per slope,
//!   obtained by the triangular Harder-Narasimhan recursion; the decreasing
//!   slope star product reassembles the full stack series.

use std::collections::BTreeMap;

use num::rational::Ratio;
use num::BigInt;
use thiserror::Error;

use crate::lambda::{gl_class, HalfTwistPoly, RatFunc};
use crate::series::{dims_up_to, DimVector, GradedSeries, TwistForm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("operation requires a symmetric quiver")]
    NotSymmetric,
    #[error("slope of the zero dimension vector is undefined")]
    ZeroDimVector,
    #[error("framed motive extraction produced a non-polynomial (convention bug): {0}")]
    IntegralityFailure(String),
}

/// Exact slope value `theta.d / |d|`.
pub type Slope = Ratio<i64>;

/// A finite quiver: ordered vertex labels and the arrow-count matrix
/// `a[i][j]` = number of arrows from vertex `i` to vertex `j`. Loops allowed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quiver {
    vertices: Vec<String>,
    arrow_counts: Vec<Vec<u32>>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrow_counts: Vec<Vec<u32>>) -> Result<Self, QuiverError> {
        let n = vertices.len();
        if arrow_counts.len() != n || arrow_counts.iter().any(|row| row.len() != n) {
            return Err(QuiverError::ArityMismatch {
                expected: n,
                got: arrow_counts.len(),
            });
        }
        Ok(Self { vertices, arrow_counts })
    }

    /// One vertex, `loops` loops. `point(0)` is the point quiver and
    /// `point(1)` the one-loop (Jordan) quiver.
    pub fn loop_quiver(loops: u32) -> Self {
        Self { vertices: vec!["v".into()], arrow_counts: vec![vec![loops]] }
    }

    /// Two vertices with a single arrow `a -> b` (the Kronecker-type quiver
    /// whose wall-crossing is the standard worked example).
    pub fn one_arrow() -> Self {
        Self {
            vertices: vec!["a".into(), "b".into()],
            arrow_counts: vec![vec![0, 1], vec![0, 0]],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrow_counts(&self) -> &[Vec<u32>] {
        &self.arrow_counts
    }

    /// Arrows as a flat list `(label, source, target)`, enumerated row-major
    /// with multiplicities; labels are `a0, a1, ...` in that order. Relation
    /// strings refer to these labels.
    pub fn arrow_list(&self) -> Vec<(String, usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.arrow_counts.iter().enumerate() {
            for (j, &count) in row.iter().enumerate() {
                for _ in 0..count {
                    out.push((format!("a{}", out.len()), i, j));
                }
            }
        }
        out
    }

    fn check_dim(&self, d: &DimVector) -> Result<(), QuiverError> {
        if d.arity() != self.vertex_count() {
            return Err(QuiverError::ArityMismatch {
                expected: self.vertex_count(),
                got: d.arity(),
            });
        }
        Ok(())
    }

    /// Euler pairing `chi(d,e) = sum_i d_i e_i - sum_{i,j} a_{ij} d_i e_j`.
    pub fn euler_form(&self, d: &DimVector, e: &DimVector) -> Result<i64, QuiverError> {
        self.check_dim(d)?;
        self.check_dim(e)?;
        let mut acc = 0i64;
        for i in 0..self.vertex_count() {
            acc += d.0[i] as i64 * e.0[i] as i64;
            for j in 0..self.vertex_count() {
                acc -= self.arrow_counts[i][j] as i64 * d.0[i] as i64 * e.0[j] as i64;
            }
        }
        Ok(acc)
    }

    /// Antisymmetrized Euler form `<d,e> = chi(d,e) - chi(e,d)`.
    pub fn antisym_form(&self, d: &DimVector, e: &DimVector) -> Result<i64, QuiverError> {
        Ok(self.euler_form(d, e)? - self.euler_form(e, d)?)
    }

    /// The antisymmetrized form as a matrix, for use as a star-product twist.
    pub fn twist_form(&self) -> TwistForm {
        let n = self.vertex_count();
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.arrow_counts[j][i] as i64 - self.arrow_counts[i][j] as i64;
            }
        }
        TwistForm::new(m)
    }

    /// True iff the Euler pairing is symmetric, i.e. `a[i][j] = a[j][i]`.
    pub fn is_symmetric(&self) -> bool {
        let n = self.vertex_count();
        (0..n).all(|i| (i + 1..n).all(|j| self.arrow_counts[i][j] == self.arrow_counts[j][i]))
    }

    /// Dimension of the representation space `R_d = prod Hom(k^{d_i}, k^{d_j})`.
    pub fn rep_space_dim(&self, d: &DimVector) -> u64 {
        let mut acc = 0u64;
        for i in 0..self.vertex_count() {
            for j in 0..self.vertex_count() {
                acc += self.arrow_counts[i][j] as u64 * d.0[i] as u64 * d.0[j] as u64;
            }
        }
        acc
    }

    /// The normalized stack series: coefficient at `d` is
    /// `(-x)^{chi(d,d)} * L^{dim R_d} / prod_i [GL(d_i)]`, the class of the
    /// moduli stack of representations twisted by `L^{-dim/2}`.
    pub fn stack_series(&self, truncation: u32) -> GradedSeries {
        let n = self.vertex_count();
        let mut s = GradedSeries::new(n, truncation);
        for d in dims_up_to(n, truncation) {
            s.set_coeff(d.clone(), self.stack_coeff(&d));
        }
        s
    }

    fn stack_coeff(&self, d: &DimVector) -> RatFunc {
        let chi = self.euler_form(d, d).expect("arity checked");
        let dim_r = self.rep_space_dim(d);
        let mut num = HalfTwistPoly::l_power(dim_r as i64);
        // (-x)^chi
        num = num.mul_monomial(chi, &BigInt::from(if chi.rem_euclid(2) == 0 { 1 } else { -1 }));
        let mut den = HalfTwistPoly::one();
        for &di in &d.0 {
            den = &den * &gl_class(di);
        }
        RatFunc::new(num, den).expect("GL classes are nonzero")
    }

    /// Framed series `Z_f`: the generating series of normalized framed moduli
    /// classes, computed as `(sum_d L^{f.d} A_d t^d) * A^{-1}` with `A` the
    /// stack series. Restricted to symmetric quivers, where the plain
    /// convolution ratio is the correct one.
    pub fn framed_series(
        &self,
        f: &FramingVector,
        truncation: u32,
    ) -> Result<GradedSeries, QuiverError> {
        if !self.is_symmetric() {
            return Err(QuiverError::NotSymmetric);
        }
        if f.0.len() != self.vertex_count() {
            return Err(QuiverError::ArityMismatch {
                expected: self.vertex_count(),
                got: f.0.len(),
            });
        }
        let a = self.stack_series(truncation);
        let mut shifted = GradedSeries::new(self.vertex_count(), truncation);
        for (d, c) in a.iter() {
            let fd = f.dot(d);
            shifted.set_coeff(d.clone(), c.mul_poly(&HalfTwistPoly::l_power(fd as i64)));
        }
        let inv = a.star_inverse(None).expect("constant term 1");
        Ok(shifted.mul(&inv).expect("same arity"))
    }

    /// Virtual class of the framed moduli space `M_{f,d}` (the
    /// non-commutative Hilbert scheme): `Z_{f,d} * (-x)^{-chi(d,d)}`, with
    /// integrality of the result asserted.
    pub fn hilbert_motive(
        &self,
        f: &FramingVector,
        d: &DimVector,
    ) -> Result<HalfTwistPoly, QuiverError> {
        self.check_dim(d)?;
        let z = self.framed_series(f, d.total())?;
        let chi = self.euler_form(d, d)?;
        let unnorm = z.coeff(d).mul_poly(&HalfTwistPoly::x_power(-chi).mul_monomial(
            0,
            &BigInt::from(if chi.rem_euclid(2) == 0 { 1 } else { -1 }),
        ));
        match unnorm.as_poly() {
            Some(p) if p.is_even() => Ok(p.clone()),
            _ => Err(QuiverError::IntegralityFailure(format!(
                "framed motive at {d} is {unnorm}"
            ))),
        }
    }

    /// Semistable stack classes per slope by the Harder-Narasimhan recursion.
    ///
    /// Each returned series is supported on the gradings of one slope; the
    /// star product of `unit + S_mu` over decreasing `mu` (twisted by the
    /// antisymmetrized Euler form) reassembles [`Self::stack_series`].
    pub fn hn_semistable_series(
        &self,
        stability: &Stability,
        truncation: u32,
    ) -> Result<BTreeMap<Slope, GradedSeries>, QuiverError> {
        if stability.theta.len() != self.vertex_count() {
            return Err(QuiverError::ArityMismatch {
                expected: self.vertex_count(),
                got: stability.theta.len(),
            });
        }
        let n = self.vertex_count();
        let a = self.stack_series(truncation);
        let mut semistable: BTreeMap<DimVector, RatFunc> = BTreeMap::new();
        // increasing total degree keeps the recursion triangular: every
        // proper HN part has strictly smaller total degree
        for d in dims_up_to(n, truncation) {
            if d.is_zero() {
                continue;
            }
            let mut acc = RatFunc::zero();
            let parts = self.hn_tuples(stability, &d);
            for tuple in &parts {
                if tuple.len() < 2 {
                    continue;
                }
                let mut term = RatFunc::one();
                let mut twist = 0i64;
                for i in 0..tuple.len() {
                    term = &term * &semistable[&tuple[i]];
                    for j in i + 1..tuple.len() {
                        twist += self.antisym_form(&tuple[i], &tuple[j])?;
                    }
                }
                let sign = if twist.rem_euclid(2) == 0 { 1 } else { -1 };
                term = term.mul_poly(&HalfTwistPoly::monomial(twist, BigInt::from(sign)));
                acc = &acc + &term;
            }
            semistable.insert(d.clone(), &a.coeff(&d) - &acc);
        }
        // group by slope
        let mut by_slope: BTreeMap<Slope, GradedSeries> = BTreeMap::new();
        for (d, c) in semistable {
            if c.is_zero() {
                continue;
            }
            let mu = stability.slope(&d)?;
            by_slope
                .entry(mu)
                .or_insert_with(|| GradedSeries::new(n, truncation))
                .set_coeff(d, c);
        }
        Ok(by_slope)
    }

    /// Ordered tuples of non-zero dimension vectors with strictly decreasing
    /// slopes summing to `d` (the possible HN types of `d`).
    fn hn_tuples(&self, stability: &Stability, d: &DimVector) -> Vec<Vec<DimVector>> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        let mut stack: Vec<DimVector> = Vec::new();
        fn rec(
            n: usize,
            stability: &Stability,
            remaining: &DimVector,
            last_slope: Option<Slope>,
            stack: &mut Vec<DimVector>,
            out: &mut Vec<Vec<DimVector>>,
        ) {
            if remaining.is_zero() {
                out.push(stack.clone());
                return;
            }
            for part in dims_up_to(n, remaining.total()) {
                if part.is_zero() || !part.le(remaining) {
                    continue;
                }
                let mu = stability.slope(&part).expect("nonzero part");
                if let Some(prev) = last_slope {
                    if mu >= prev {
                        continue;
                    }
                }
                let rest = remaining.checked_sub(&part).expect("componentwise le");
                stack.push(part);
                rec(n, stability, &rest, Some(mu), stack, out);
                stack.pop();
            }
        }
        rec(n, stability, d, None, &mut stack, &mut out);
        out
    }
}

/// Reassemble the decreasing-slope star product of semistable factors
/// (`unit + S_mu` for each slope, highest slope leftmost).
pub fn wall_crossing_product(
    factors: &BTreeMap<Slope, GradedSeries>,
    twist: &TwistForm,
    arity: usize,
    truncation: u32,
) -> GradedSeries {
    let mut product = GradedSeries::unit(arity, truncation);
    for (_, s) in factors.iter().rev() {
        let factor = GradedSeries::unit(arity, truncation)
            .add(s)
            .expect("same arity");
        product = product.star_mul(&factor, Some(twist)).expect("same arity");
    }
    product
}

/// King stability data: an integer weight per vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Stability {
    pub theta: Vec<i64>,
}

impl Stability {
    pub fn new(theta: Vec<i64>) -> Self {
        Self { theta }
    }

    pub fn trivial(arity: usize) -> Self {
        Self { theta: vec![0; arity] }
    }

    /// Slope `theta.d / |d|`; undefined on the zero vector.
    pub fn slope(&self, d: &DimVector) -> Result<Slope, QuiverError> {
        if d.is_zero() {
            return Err(QuiverError::ZeroDimVector);
        }
        let num: i64 = self
            .theta
            .iter()
            .zip(&d.0)
            .map(|(&t, &v)| t * v as i64)
            .sum();
        Ok(Ratio::new(num, d.total() as i64))
    }
}

/// Framing vector: one natural number per vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FramingVector(pub Vec<u32>);

impl FramingVector {
    pub fn dot(&self, d: &DimVector) -> u64 {
        self.0
            .iter()
            .zip(&d.0)
            .map(|(&f, &v)| f as u64 * v as u64)
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&f| f == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::{gauss_binomial, t_class};

    fn dv(v: &[u32]) -> DimVector {
        DimVector(v.to_vec())
    }

    #[test]
    fn euler_form_examples() {
        let point = Quiver::loop_quiver(0);
        assert_eq!(point.euler_form(&dv(&[2]), &dv(&[3])).unwrap(), 6);
        let jordan = Quiver::loop_quiver(1);
        for a in 0..4u32 {
            for b in 0..4u32 {
                assert_eq!(jordan.euler_form(&dv(&[a]), &dv(&[b])).unwrap(), 0);
            }
        }
        let k1 = Quiver::one_arrow();
        assert_eq!(k1.euler_form(&dv(&[1, 0]), &dv(&[0, 1])).unwrap(), -1);
        assert_eq!(k1.euler_form(&dv(&[0, 1]), &dv(&[1, 0])).unwrap(), 0);
        assert_eq!(k1.antisym_form(&dv(&[1, 0]), &dv(&[0, 1])).unwrap(), -1);
        assert_eq!(k1.antisym_form(&dv(&[1, 1]), &dv(&[1, 1])).unwrap(), 0);
    }

    #[test]
    fn symmetry_detection() {
        assert!(Quiver::loop_quiver(3).is_symmetric());
        assert!(!Quiver::one_arrow().is_symmetric());
        let two_way = Quiver::new(
            vec!["a".into(), "b".into()],
            vec![vec![0, 1], vec![1, 0]],
        )
        .unwrap();
        assert!(two_way.is_symmetric());
        // antisym form vanishes identically iff symmetric
        let tw = two_way.twist_form();
        assert_eq!(tw.eval(&dv(&[1, 2]), &dv(&[2, 1])), 0);
    }

    #[test]
    fn stack_series_coefficients() {
        // point quiver: A_d = (-x)^{d^2} / [GL(d)]
        let point = Quiver::loop_quiver(0);
        let a = point.stack_series(3);
        for d in 0..=3u32 {
            let sign = if (d * d) % 2 == 0 { 1 } else { -1 };
            let expect = RatFunc::new(
                HalfTwistPoly::monomial((d * d) as i64, BigInt::from(sign)),
                gl_class(d),
            )
            .unwrap();
            assert_eq!(a.coeff(&dv(&[d])), expect);
        }
        // Jordan: A_1 = L/(L-1)
        let jordan = Quiver::loop_quiver(1);
        let a1 = jordan.stack_series(1).coeff(&dv(&[1]));
        assert_eq!(a1, RatFunc::new(HalfTwistPoly::l_power(1), gl_class(1)).unwrap());
        // m-loop: A_1 = L^{(m+1)/2}/(L-1), i.e. (-x)^{1-m} L^m / (L-1)
        for m in 2..=3u32 {
            let q = Quiver::loop_quiver(m);
            let a1 = q.stack_series(1).coeff(&dv(&[1]));
            let sign = if (1 - m as i64).rem_euclid(2) == 0 { 1 } else { -1 };
            let num = HalfTwistPoly::monomial(2 * m as i64 + 1 - m as i64, BigInt::from(sign));
            assert_eq!(a1, RatFunc::new(num, gl_class(1)).unwrap());
        }
        // denominators divide prod [GL(d_i)]
        let k1 = Quiver::one_arrow();
        for (d, c) in k1.stack_series(3).iter() {
            let mut g = HalfTwistPoly::one();
            for &di in &d.0 {
                g = &g * &gl_class(di);
            }
            let prod = c.mul_poly(&g);
            assert!(prod.is_polynomial(), "denominator of A_{d} divides GL product");
        }
    }

    #[test]
    fn framed_series_point_quiver() {
        // Z_{f,d} = L^{d^2/2} [f choose d]_L
        let point = Quiver::loop_quiver(0);
        for f in 1..=3u32 {
            let z = point
                .framed_series(&FramingVector(vec![f]), 6)
                .unwrap();
            for d in 0..=6u32 {
                let expect = if d <= f {
                    let sign = if (d * d) % 2 == 0 { 1 } else { -1 };
                    RatFunc::from_poly(
                        gauss_binomial(f, d)
                            .unwrap()
                            .mul_monomial((d * d) as i64, &BigInt::from(sign)),
                    )
                } else {
                    RatFunc::zero()
                };
                assert_eq!(z.coeff(&dv(&[d])), expect, "f={f} d={d}");
            }
        }
    }

    #[test]
    fn framed_series_jordan() {
        let jordan = Quiver::loop_quiver(1);
        let z = jordan.framed_series(&FramingVector(vec![1]), 5).unwrap();
        assert_eq!(z.coeff(&dv(&[0])), RatFunc::one());
        assert_eq!(z.coeff(&dv(&[1])), RatFunc::from_poly(HalfTwistPoly::l_power(1)));
        for d in 0..=5u32 {
            assert_eq!(
                jordan.hilbert_motive(&FramingVector(vec![1]), &dv(&[d])).unwrap(),
                HalfTwistPoly::l_power(d as i64),
                "Hilb^{d} of the affine line"
            );
        }
    }

    #[test]
    fn framed_rejects_nonsymmetric() {
        let k1 = Quiver::one_arrow();
        assert!(matches!(
            k1.framed_series(&FramingVector(vec![1, 0]), 3),
            Err(QuiverError::NotSymmetric)
        ));
    }

    #[test]
    fn slopes() {
        let th = Stability::new(vec![1, -1]);
        assert_eq!(th.slope(&dv(&[1, 1])).unwrap(), Ratio::new(0, 1));
        assert_eq!(th.slope(&dv(&[1, 0])).unwrap(), Ratio::new(1, 1));
        assert!(th.slope(&dv(&[0, 0])).is_err());
        let trivial = Stability::trivial(2);
        assert_eq!(trivial.slope(&dv(&[2, 3])).unwrap(), Ratio::new(0, 1));
    }

    #[test]
    fn hn_trivial_stability_single_slope() {
        let jordan = Quiver::loop_quiver(1);
        let hn = jordan
            .hn_semistable_series(&Stability::trivial(1), 4)
            .unwrap();
        assert_eq!(hn.len(), 1);
        let s = &hn[&Ratio::new(0, 1)];
        let a = jordan.stack_series(4);
        for d in 1..=4u32 {
            assert_eq!(s.coeff(&dv(&[d])), a.coeff(&dv(&[d])));
        }
    }

    #[test]
    fn hn_one_arrow_worked_example() {
        let k1 = Quiver::one_arrow();
        let th = Stability::new(vec![1, -1]);
        let hn = k1.hn_semistable_series(&th, 4).unwrap();
        // S at (1,1) = L^{1/2}/(L-1): semistable stack class 1/(L-1) times
        // the normalization (-x)^{chi} = L^{1/2}
        let s0 = &hn[&Ratio::new(0, 1)];
        let expect = RatFunc::new(
            HalfTwistPoly::monomial(1, BigInt::from(-1)),
            gl_class(1),
        )
        .unwrap();
        assert_eq!(s0.coeff(&dv(&[1, 1])), expect);
        // explicit twisted-product identity at (1,1):
        // A_{(1,1)} = S_{(1,1)} + (-x)^{-1} S_{(1,0)} S_{(0,1)}
        let s_plus = &hn[&Ratio::new(1, 1)];
        let s_minus = &hn[&Ratio::new(-1, 1)];
        let lhs = k1.stack_series(2).coeff(&dv(&[1, 1]));
        let cross = (&s_plus.coeff(&dv(&[1, 0])) * &s_minus.coeff(&dv(&[0, 1])))
            .mul_poly(&HalfTwistPoly::monomial(-1, BigInt::from(-1)));
        let rhs = &s0.coeff(&dv(&[1, 1])) + &cross;
        assert_eq!(lhs, rhs);
        // semistables of slope 0 at (2,2) are the invertible maps:
        // class L^{1/2 * chi} * [GL(2)]/([GL(2)] x [GL(2)]), frozen form below
        let l = HalfTwistPoly::l_power(1);
        let den = &(&gl_class(1) * &gl_class(1)) * &(&l + &HalfTwistPoly::one());
        let expect22 = RatFunc::new(HalfTwistPoly::l_power(1), den).unwrap();
        assert_eq!(s0.coeff(&dv(&[2, 2])), expect22);
    }

    #[test]
    fn wall_crossing_reassembly() {
        for (quiver, theta) in [
            (Quiver::one_arrow(), vec![1i64, -1]),
            (Quiver::one_arrow(), vec![-2, 5]),
            (
                Quiver::new(
                    vec!["a".into(), "b".into()],
                    vec![vec![1, 2], vec![0, 0]],
                )
                .unwrap(),
                vec![3, -1],
            ),
        ] {
            let th = Stability::new(theta);
            let n = 4;
            let hn = quiver.hn_semistable_series(&th, n).unwrap();
            let product =
                wall_crossing_product(&hn, &quiver.twist_form(), quiver.vertex_count(), n);
            assert_eq!(product, quiver.stack_series(n));
        }
    }

    #[test]
    fn jordan_stack_series_inverse_round_trip() {
        let a = Quiver::loop_quiver(1).stack_series(6);
        let inv = a.star_inverse(None).unwrap();
        assert!(inv.star_mul(&a, None).unwrap().is_unit_series());
        assert!(a.mul(&inv).unwrap().is_unit_series());
    }

    #[test]
    fn jordan_framed_motives_match_cyclic_pair_counts() {
        // independent oracle: M_{1,d} for the one-loop quiver parametrizes
        // pairs (A, v) with v a cyclic vector, modulo GL_d; count them
        // directly over F_q and divide by |GL_d(F_q)|
        fn cyclic_pair_count(d: usize, q: u64) -> u64 {
            let mut pairs = 0u64;
            let mut entries = vec![0u64; d * d + d];
            loop {
                let (a, v) = entries.split_at(d * d);
                // Krylov span of v under A
                let mut basis: Vec<Vec<u64>> = Vec::new();
                let mut w = v.to_vec();
                for _ in 0..d {
                    let mut reduced = w.clone();
                    for b in &basis {
                        let pivot = b.iter().position(|&x| x != 0).unwrap();
                        let c = reduced[pivot];
                        if c != 0 {
                            let inv = mod_inv(b[pivot], q);
                            let f = c * inv % q;
                            for (r, s) in reduced.iter_mut().zip(b) {
                                *r = (*r + (q - f) * s) % q;
                            }
                        }
                    }
                    if reduced.iter().any(|&x| x != 0) {
                        basis.push(reduced);
                    }
                    // w = A w
                    let mut next = vec![0u64; d];
                    for i in 0..d {
                        for j in 0..d {
                            next[i] = (next[i] + a[i * d + j] * w[j]) % q;
                        }
                    }
                    w = next;
                }
                if basis.len() == d {
                    pairs += 1;
                }
                // odometer
                let mut pos = 0;
                loop {
                    if pos == entries.len() {
                        return pairs;
                    }
                    entries[pos] += 1;
                    if entries[pos] < q {
                        break;
                    }
                    entries[pos] = 0;
                    pos += 1;
                }
            }
        }
        fn mod_inv(a: u64, q: u64) -> u64 {
            let mut r = 1u64;
            let mut b = a % q;
            let mut e = q - 2;
            while e > 0 {
                if e & 1 == 1 {
                    r = r * b % q;
                }
                b = b * b % q;
                e >>= 1;
            }
            r
        }
        let jordan = Quiver::loop_quiver(1);
        use num::BigRational;
        for d in 1..=2u32 {
            for q in [2u64, 3, 5] {
                let pairs = cyclic_pair_count(d as usize, q);
                let gl = gl_class(d)
                    .eval_q(&BigRational::from_integer(BigInt::from(q)))
                    .unwrap();
                let motive = jordan
                    .hilbert_motive(&FramingVector(vec![1]), &dv(&[d]))
                    .unwrap()
                    .eval_q(&BigRational::from_integer(BigInt::from(q)))
                    .unwrap();
                assert_eq!(
                    BigRational::from_integer(BigInt::from(pairs)) / gl,
                    motive,
                    "d={d} q={q}"
                );
            }
        }
    }

    #[test]
    fn jordan_stack_series_is_sym_of_regular_part() {
        // Sym(L t/(L-1)) equals the Jordan stack series up to N = 6
        let jordan = Quiver::loop_quiver(1);
        let mut a = GradedSeries::new(1, 6);
        a.set_coeff(
            dv(&[1]),
            &RatFunc::from_poly(HalfTwistPoly::l_power(1)) * &t_class(1),
        );
        assert_eq!(a.sym().unwrap(), jordan.stack_series(6));
    }
}
