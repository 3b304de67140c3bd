//! The universal polynomials expressing `sigma^m(b * sigma^n(a))` in terms of
//! `sigma^i(b)` and `sigma^j(a)`.
//!
//! With `y_1..y_m` and `x_1..x_{mn}` formal variables, the complete
//! homogeneous polynomial `h_m` evaluated on the multiset of all products
//! `y_j * (degree-n monomial in the x_i)` is symmetric in the `y`s and in the
//! `x`s separately, hence equals a polynomial `P^{m,n}` in the generators
//! `h_1(y)..h_m(y), h_1(x)..h_{mn}(x)`. That expression is what a special
//! lambda-ring satisfies, and it is recovered here by exact elimination
//! against the `h`-basis and verified by expansion.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use super::LambdaError;

/// Exponent vector over the concatenated variables `y_1..y_m, x_1..x_{mn}`.
type Expo = Vec<u8>;

/// Concrete polynomial with integer coefficients in the working variables.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub(crate) struct MultiPoly {
    terms: BTreeMap<Expo, BigInt>,
}

impl MultiPoly {
    fn one(nvars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0u8; nvars], BigInt::one());
        Self { terms }
    }

    fn add_term(&mut self, e: Expo, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Expo = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

/// Complete homogeneous polynomial `h_k` over a list of "variables", each of
/// which is an arbitrary monomial in the working variables.
fn h_over(monomials: &[Expo], k: u32, nvars: usize) -> MultiPoly {
    // multisets of size k over the monomial list, enumerated by
    // non-decreasing index sequences
    let mut out = MultiPoly::default();
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        monomials: &[Expo],
        k: u32,
        start: usize,
        stack: &mut Vec<usize>,
        out: &mut MultiPoly,
        nvars: usize,
    ) {
        if stack.len() == k as usize {
            let mut e = vec![0u8; nvars];
            for &i in stack.iter() {
                for (j, v) in monomials[i].iter().enumerate() {
                    e[j] += v;
                }
            }
            out.add_term(e, BigInt::one());
            return;
        }
        for i in start..monomials.len() {
            stack.push(i);
            rec(monomials, k, i, stack, out, nvars);
            stack.pop();
        }
    }
    rec(monomials, k, 0, &mut stack, &mut out, nvars);
    out
}

/// All exponent vectors of total degree `deg` over `n` variables.
fn monomials_of_degree(n: usize, deg: u32) -> Vec<Expo> {
    let mut out = Vec::new();
    let mut cur = vec![0u8; n];
    fn rec(cur: &mut Expo, pos: usize, rem: u32, out: &mut Vec<Expo>) {
        if pos == cur.len() - 1 {
            cur[pos] = rem as u8;
            out.push(cur.clone());
            return;
        }
        for v in 0..=rem {
            cur[pos] = v as u8;
            rec(cur, pos + 1, rem - v, out);
        }
    }
    if n == 0 {
        return out;
    }
    rec(&mut cur, 0, deg, &mut out);
    out
}

fn partitions(total: u32, max_part: u32) -> Vec<Vec<u32>> {
    if total == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max_part.min(total)).rev() {
        for mut rest in partitions(total - first, first) {
            let mut p = vec![first];
            p.append(&mut rest);
            out.push(p);
        }
    }
    out
}

/// A polynomial in the formal generators `h_i(y)` and `h_j(x)`, stored as a
/// sum of terms `c * h_lambda(y) * h_mu(x)` over partitions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymExpr {
    m: u32,
    n: u32,
    terms: Vec<(BigInt, Vec<u32>, Vec<u32>)>,
}

impl SymExpr {
    pub fn degrees(&self) -> (u32, u32) {
        (self.m, self.n)
    }

    pub fn terms(&self) -> &[(BigInt, Vec<u32>, Vec<u32>)] {
        &self.terms
    }

    /// Expand in concrete variables `y_1..y_m, x_1..x_{mn}`.
    pub(crate) fn expand(&self) -> MultiPoly {
        let m = self.m as usize;
        let mn = (self.m * self.n) as usize;
        let nvars = m + mn;
        let yvars: Vec<Expo> = (0..m)
            .map(|j| {
                let mut e = vec![0u8; nvars];
                e[j] = 1;
                e
            })
            .collect();
        let xvars: Vec<Expo> = (0..mn)
            .map(|i| {
                let mut e = vec![0u8; nvars];
                e[m + i] = 1;
                e
            })
            .collect();
        let mut out = MultiPoly::default();
        for (c, lam, mu) in &self.terms {
            let mut prod = MultiPoly::one(nvars);
            for &k in lam {
                prod = prod.mul(&h_over(&yvars, k, nvars));
            }
            for &k in mu {
                prod = prod.mul(&h_over(&xvars, k, nvars));
            }
            for (e, v) in prod.terms {
                out.add_term(e, v * c);
            }
        }
        out
    }
}

impl fmt::Display for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, lam, mu)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (lam.is_empty() && mu.is_empty()) {
                factors.push(mag.to_string());
            }
            for k in lam {
                factors.push(format!("h{k}(y)"));
            }
            for k in mu {
                factors.push(format!("h{k}(x)"));
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

/// Compute `P^{m,n}` by expanding the target in concrete variables and
/// eliminating against the products `h_lambda(y) h_mu(x)`.
///
/// Bounded to `m*n <= 4`; beyond that the expansion sizes grow steeply and
/// the pipeline never needs them.
pub fn compute_pmn(m: u32, n: u32) -> Result<SymExpr, LambdaError> {
    if m == 0 || n == 0 {
        return Err(LambdaError::Domain("compute_pmn requires m, n >= 1".into()));
    }
    if m * n > 4 {
        return Err(LambdaError::BudgetExceeded(format!(
            "compute_pmn supports m*n <= 4, got {m}*{n}"
        )));
    }
    let mu32 = m as usize;
    let mn = (m * n) as usize;
    let nvars = mu32 + mn;

    // target: h_m over the products y_j * (degree-n x-monomial)
    let xmonos = monomials_of_degree(mn, n);
    let mut products: Vec<Expo> = Vec::new();
    for j in 0..mu32 {
        for xm in &xmonos {
            let mut e = vec![0u8; nvars];
            e[j] = 1;
            for (i, v) in xm.iter().enumerate() {
                e[mu32 + i] = *v;
            }
            products.push(e);
        }
    }
    let target = h_over(&products, m, nvars);

    // candidate basis: h_lambda(y) h_mu(x), lambda |- m, mu |- mn
    let lambdas = partitions(m, m);
    let mus = partitions(m * n, m * n);
    let mut candidates: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
    let mut expansions: Vec<MultiPoly> = Vec::new();
    for lam in &lambdas {
        for mu in &mus {
            let probe = SymExpr {
                m,
                n,
                terms: vec![(BigInt::one(), lam.clone(), mu.clone())],
            };
            candidates.push((lam.clone(), mu.clone()));
            expansions.push(probe.expand());
        }
    }

    // exact linear solve for the coefficients
    let mut monos: BTreeMap<Expo, usize> = BTreeMap::new();
    for e in target.terms.keys() {
        let idx = monos.len();
        monos.entry(e.clone()).or_insert(idx);
    }
    for exp in &expansions {
        for e in exp.terms.keys() {
            let idx = monos.len();
            monos.entry(e.clone()).or_insert(idx);
        }
    }
    let rows = monos.len();
    let cols = candidates.len();
    let mut mat = vec![vec![BigRational::zero(); cols + 1]; rows];
    for (ci, exp) in expansions.iter().enumerate() {
        for (e, c) in &exp.terms {
            mat[monos[e]][ci] = BigRational::from_integer(c.clone());
        }
    }
    for (e, c) in &target.terms {
        mat[monos[e]][cols] = BigRational::from_integer(c.clone());
    }

    // Gaussian elimination
    let mut pivot_row_of_col = vec![usize::MAX; cols];
    let mut r = 0usize;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].clone().recip();
        for v in mat[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = mat[r].clone();
        for (i, row) in mat.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    let sub = &f * p;
                    *x = &*x - &sub;
                }
            }
        }
        pivot_row_of_col[c] = r;
        r += 1;
        if r == rows {
            break;
        }
    }
    // consistency: all rows below the pivots must have zero rhs
    if mat.iter().take(rows).skip(r).any(|row| !row[cols].is_zero()) {
        return Err(LambdaError::Domain(
            "symmetric elimination produced an inconsistent system".into(),
        ));
    }
    let mut terms = Vec::new();
    for (c, cand) in candidates.iter().enumerate() {
        if pivot_row_of_col[c] == usize::MAX {
            continue;
        }
        let v = &mat[pivot_row_of_col[c]][cols];
        if v.is_zero() {
            continue;
        }
        assert!(v.is_integer(), "P^{{m,n}} has integer coefficients");
        terms.push((v.to_integer(), cand.0.clone(), cand.1.clone()));
    }
    Ok(SymExpr { m, n, terms })
}

/// Recompute the defining multiset expansion of `P^{m,n}` from scratch and
/// compare against [`compute_pmn`]; the self-check suite drives this.
pub fn verify_pmn_by_expansion(m: u32, n: u32) -> Result<bool, LambdaError> {
    let p = compute_pmn(m, n)?;
    let mu32 = m as usize;
    let mn = (m * n) as usize;
    let nvars = mu32 + mn;
    let xmonos = monomials_of_degree(mn, n);
    let mut products: Vec<Expo> = Vec::new();
    for j in 0..mu32 {
        for xm in &xmonos {
            let mut e = vec![0u8; nvars];
            e[j] = 1;
            for (i, v) in xm.iter().enumerate() {
                e[mu32 + i] = *v;
            }
            products.push(e);
        }
    }
    let target = h_over(&products, m, nvars);
    Ok(p.expand() == target)
}
