//! Exact characteristic polynomials of the four graph matrices over big
//! integers, and cospectrality decisions based on them.
//!
//! Cospectrality is decided by exact polynomial equality, never by float
//! comparison.

use super::MatrixKind;
use crate::graph::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Polynomial with big-integer coefficients in ascending degree order,
/// optionally divided by a big-integer denominator (used for the
/// normalized Laplacian, whose characteristic polynomial is rational).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntPolynomial {
    pub coeffs: Vec<BigInt>,
    pub denom: BigInt,
}

impl IntPolynomial {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        IntPolynomial { coeffs, denom: BigInt::one() }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Exact equality as rational polynomials (cross-multiplied).
    pub fn equals_rational(&self, other: &Self) -> bool {
        if self.coeffs.len() != other.coeffs.len() {
            return false;
        }
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .all(|(a, b)| a * &other.denom == b * &self.denom)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc / BigRational::from_integer(self.denom.clone())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        let mut acc = 0.0f64;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc / self.denom.to_f64().unwrap_or(f64::NAN)
    }

    /// Multiplicity of the root 0 (index of the lowest nonzero
    /// coefficient).
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(self.coeffs.len())
    }

    /// Sign variations in the nonzero coefficients. For a polynomial with
    /// all-real roots this equals the number of positive roots counted
    /// with multiplicity.
    pub fn sign_variations(&self) -> usize {
        let mut last = 0i8;
        let mut vars = 0usize;
        for c in &self.coeffs {
            let s = if c.is_zero() {
                0
            } else if c.is_positive() {
                1
            } else {
                -1
            };
            if s != 0 {
                if last != 0 && s != last {
                    vars += 1;
                }
                last = s;
            }
        }
        vars
    }

    /// Substitute x -> -x.
    pub fn reflected(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        IntPolynomial { coeffs, denom: self.denom.clone() }
    }

    /// Multiplicity of an integer root, decided exactly by repeated
    /// synthetic division.
    pub fn root_multiplicity(&self, root: i64) -> usize {
        let r = BigInt::from(root);
        let mut coeffs = self.coeffs.clone();
        let mut mult = 0usize;
        loop {
            if coeffs.iter().all(|c| c.is_zero()) {
                return mult;
            }
            // synthetic division by (x - r); remainder must vanish
            let mut quotient = vec![BigInt::zero(); coeffs.len().saturating_sub(1)];
            let mut carry = BigInt::zero();
            for k in (0..coeffs.len()).rev() {
                let value = &coeffs[k] + &carry * &r;
                if k == 0 {
                    if !value.is_zero() {
                        return mult;
                    }
                } else {
                    quotient[k - 1] = value.clone();
                    carry = value;
                }
            }
            coeffs = quotient;
            mult += 1;
            if coeffs.is_empty() {
                return mult;
            }
        }
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "x")?,
                1 => write!(f, "{a}x")?,
                _ if a.is_one() => write!(f, "x^{k}")?,
                _ => write!(f, "{a}x^{k}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        if !self.denom.is_one() {
            write!(f, " / {}", self.denom)?;
        }
        Ok(())
    }
}

fn int_matrix(g: &Graph, kind: MatrixKind) -> Vec<Vec<BigInt>> {
    let n = g.n();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let a = i64::from(g.has_edge(i, j));
            m[i][j] = BigInt::from(match kind {
                MatrixKind::A => a,
                MatrixKind::L => {
                    if i == j {
                        g.degree(i) as i64
                    } else {
                        -a
                    }
                }
                MatrixKind::Q => {
                    if i == j {
                        g.degree(i) as i64
                    } else {
                        a
                    }
                }
                MatrixKind::NormL => unreachable!("normalized Laplacian is rational"),
            });
        }
    }
    m
}

/// Characteristic polynomial det(xI − M) of an integer matrix by the
/// Faddeev–LeVerrier recurrence; every division is exact.
fn char_poly_int(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = m.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // N starts as the identity
    let mut nmat: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    for k in 1..=n {
        // AN = M · N
        let mut an = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for l in 0..n {
                if m[i][l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    let add = &m[i][l] * &nmat[l][j];
                    an[i][j] += add;
                }
            }
        }
        let trace: BigInt = (0..n).map(|i| an[i][i].clone()).sum();
        let k_big = BigInt::from(k as i64);
        let (c, rem) = num_integer::Integer::div_rem(&(-trace), &k_big);
        assert!(rem.is_zero(), "Faddeev-LeVerrier divisions are exact");
        coeffs[n - k] = c.clone();
        for (i, row) in an.iter_mut().enumerate() {
            row[i] += &c;
        }
        nmat = an;
    }
    coeffs
}

/// Exact integer determinant by fraction-free Bareiss elimination.
pub fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, rem) = num_integer::Integer::div_rem(&num, &prev);
                debug_assert!(rem.is_zero());
                m[i][j] = q;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Exact characteristic polynomial of the chosen graph matrix.
///
/// A, L, Q go through Faddeev–LeVerrier over big integers. The
/// normalized Laplacian splits off one factor x per isolated vertex and
/// pairs det((x−1)D + A) with the denominator det(D) on the rest,
/// computed by evaluation at n+1 integer points and exact interpolation.
pub fn char_poly_exact(g: &Graph, kind: MatrixKind) -> IntPolynomial {
    match kind {
        MatrixKind::A | MatrixKind::L | MatrixKind::Q => {
            IntPolynomial::from_coeffs(char_poly_int(&int_matrix(g, kind)))
        }
        MatrixKind::NormL => char_poly_norml(g),
    }
}

fn char_poly_norml(g: &Graph) -> IntPolynomial {
    let keep: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    let isolated = g.n() - keep.len();
    let h = g.induced(&keep);
    let n = h.n();
    let degs: Vec<BigInt> = (0..n).map(|v| BigInt::from(h.degree(v) as i64)).collect();
    let det_d: BigInt = degs.iter().product();
    // p(x) = det((x-1)·D + A) is an integer polynomial of degree n with
    // leading coefficient det(D); sample at x = 0..n and interpolate.
    let mut samples: Vec<(BigRational, BigRational)> = Vec::with_capacity(n + 1);
    for x in 0..=n as i64 {
        let mut m = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    m[i][j] = (BigInt::from(x) - 1) * &degs[i];
                } else if h.has_edge(i, j) {
                    m[i][j] = BigInt::one();
                }
            }
        }
        samples.push((
            BigRational::from_integer(BigInt::from(x)),
            BigRational::from_integer(det_bareiss(m)),
        ));
    }
    let poly = lagrange_interpolate(&samples);
    let mut coeffs = vec![BigInt::zero(); isolated];
    for q in poly {
        assert!(q.is_integer(), "interpolated coefficients are integers");
        coeffs.push(q.to_integer());
    }
    // degree check: leading coefficient equals det(D)
    debug_assert_eq!(coeffs.last(), Some(&det_d));
    IntPolynomial { coeffs, denom: det_d }
}

fn lagrange_interpolate(samples: &[(BigRational, BigRational)]) -> Vec<BigRational> {
    let n = samples.len();
    let mut acc = vec![BigRational::zero(); n];
    for (i, (xi, yi)) in samples.iter().enumerate() {
        // numerator polynomial ∏_{j≠i} (x − x_j)
        let mut num = vec![BigRational::zero(); n];
        num[0] = BigRational::one();
        let mut deg = 0usize;
        let mut denom = BigRational::one();
        for (j, (xj, _)) in samples.iter().enumerate() {
            if i == j {
                continue;
            }
            denom *= xi - xj;
            // multiply num by (x − xj)
            for k in (0..=deg).rev() {
                let v = num[k].clone();
                num[k + 1] += &v;
                num[k] = -v * xj;
            }
            deg += 1;
        }
        let w = yi / denom;
        for k in 0..n {
            acc[k] += &num[k] * &w;
        }
    }
    acc
}

/// Per-kind cospectrality decisions, exact.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CospectralReport {
    pub kinds: Vec<(MatrixKind, bool)>,
}

impl CospectralReport {
    pub fn all(&self) -> bool {
        self.kinds.iter().all(|&(_, v)| v)
    }

    pub fn get(&self, kind: MatrixKind) -> Option<bool> {
        self.kinds.iter().find(|&&(k, _)| k == kind).map(|&(_, v)| v)
    }
}

pub fn cospectral(g: &Graph, h: &Graph, kinds: &[MatrixKind]) -> CospectralReport {
    let mut out = Vec::with_capacity(kinds.len());
    for &kind in kinds {
        let same = g.n() == h.n()
            && char_poly_exact(g, kind).equals_rational(&char_poly_exact(h, kind));
        out.push((kind, same));
    }
    // for equal-degree regular graphs, one kind decides all four
    if let (Some(dg), Some(dh)) = (g.is_regular(), h.is_regular()) {
        if dg == dh && out.len() > 1 {
            let first = out[0].1;
            debug_assert!(
                out.iter().all(|&(_, v)| v == first),
                "regular graphs of equal degree are cospectral for every matrix or none"
            );
        }
    }
    CospectralReport { kinds: out }
}
