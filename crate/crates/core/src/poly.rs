//! Sparse multivariate polynomials with complex coefficients.
//!
//! Terms are keyed by [`MultiIndex`]. Rounding noise (modulus at most
//! [`ROUNDING`]) is dropped after every operation; queries about the shape
//! of a polynomial (degree, zero test, single term) ignore coefficients of
//! modulus at most [`TAU`].

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::{ROUNDING, TAU};

/// Exponent vector of a monomial `z^α`.
///
/// The derived ordering is plain lexicographic on the exponent tuple, so the
/// largest index is the one with the highest power of `z₁`. Iterating a sorted
/// collection in reverse therefore visits monomials in descending
/// lexicographic order (`z₁⁵` first, `z₂⁵` last).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn zero(nvars: usize) -> Self {
        MultiIndex(vec![0; nvars])
    }

    /// The exponent of the single variable `z_j`.
    pub fn unit(nvars: usize, j: usize) -> Self {
        let mut e = vec![0; nvars];
        e[j] = 1;
        MultiIndex(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `α + β`, the exponent of `z^α z^β`.
    pub fn plus(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.0.len(), other.0.len());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `α − β` when every entry stays non-negative.
    pub fn checked_minus(&self, other: &MultiIndex) -> Option<MultiIndex> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    /// Evaluates `z^α`.
    pub fn eval(&self, z: &[Complex64]) -> Complex64 {
        self.0
            .iter()
            .zip(z)
            .fold(Complex64::new(1.0, 0.0), |acc, (&e, &zi)| acc * zi.powu(e))
    }

    /// All monomials of total degree `d` in `nvars` variables, in descending
    /// lexicographic order. There are `binomial(d + nvars − 1, nvars − 1)` of them.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<MultiIndex> {
        fn fill(prefix: &mut Vec<u32>, remaining: u32, slots: usize, out: &mut Vec<MultiIndex>) {
            if slots == 1 {
                prefix.push(remaining);
                out.push(MultiIndex(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in (0..=remaining).rev() {
                prefix.push(e);
                fill(prefix, remaining - e, slots - 1, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if d == 0 {
                out.push(MultiIndex(Vec::new()));
            }
            return out;
        }
        fill(&mut Vec::with_capacity(nvars), d, nvars, &mut out);
        out
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "1");
        }
        let mut first = true;
        for (j, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "z{}", j + 1)?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

#[derive(Clone, PartialEq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<MultiIndex, Complex64>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Complex64) -> Self {
        Self::monomial(MultiIndex::zero(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Complex64::new(1.0, 0.0))
    }

    /// The coordinate function `z_j`.
    pub fn var(nvars: usize, j: usize) -> Self {
        Self::monomial(MultiIndex::unit(nvars, j), Complex64::new(1.0, 0.0))
    }

    pub fn monomial(index: MultiIndex, c: Complex64) -> Self {
        let nvars = index.nvars();
        let mut p = Polynomial::zero(nvars);
        p.add_term(index, c);
        p.prune();
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, Complex64)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (index, c) in terms {
            if index.nvars() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: index.nvars() });
            }
            p.add_term(index, c);
        }
        p.prune();
        Ok(p)
    }

    /// Linear form `Σ c_j z_j`.
    pub fn linear(coeffs: &[Complex64]) -> Self {
        let n = coeffs.len();
        let mut p = Polynomial::zero(n);
        for (j, &c) in coeffs.iter().enumerate() {
            p.add_term(MultiIndex::unit(n, j), c);
        }
        p.prune();
        p
    }

    fn add_term(&mut self, index: MultiIndex, c: Complex64) {
        *self.terms.entry(index).or_insert(Complex64::new(0.0, 0.0)) += c;
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| c.norm() > ROUNDING);
    }

    /// Terms with modulus above [`TAU`].
    fn significant(&self) -> impl Iterator<Item = (&MultiIndex, &Complex64)> + '_ {
        self.terms.iter().filter(|(_, c)| c.norm() > TAU)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.significant().next().is_none()
    }

    /// Number of terms above [`TAU`].
    pub fn len(&self) -> usize {
        self.significant().count()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.significant().map(|(k, _)| k.degree()).max()
    }

    /// Lowest total degree among the stored terms.
    pub fn order(&self) -> Option<u32> {
        self.significant().map(|(k, _)| k.degree()).min()
    }

    pub fn coeff(&self, index: &MultiIndex) -> Complex64 {
        self.terms.get(index).copied().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Complex64 {
        self.coeff(&MultiIndex::zero(self.nvars))
    }

    /// Terms in descending lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Complex64)> + '_ {
        self.terms.iter().rev().filter(|(_, c)| c.norm() > TAU)
    }

    /// Every stored term, including those below [`TAU`], in descending order.
    pub fn stored_terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Complex64)> + '_ {
        self.terms.iter().rev()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Single stored term, if the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(&MultiIndex, Complex64)> {
        let mut it = self.significant();
        match (it.next(), it.next()) {
            (Some((k, v)), None) => Some((k, *v)),
            _ => None,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.order()
    }

    /// `a op b` with an explicit dimension check.
    pub fn arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        if a.nvars != b.nvars {
            return Err(Error::DimensionMismatch { expected: a.nvars, found: b.nvars });
        }
        Ok(match op {
            ArithOp::Add => a.combine(b, 1.0),
            ArithOp::Sub => a.combine(b, -1.0),
            ArithOp::Mul => a.product(b),
        })
    }

    fn combine(&self, other: &Polynomial, sign: f64) -> Polynomial {
        let mut out = self.clone();
        for (k, &c) in &other.terms {
            out.add_term(k.clone(), c * sign);
        }
        out.prune();
        out
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (ka, &ca) in &self.terms {
            for (kb, &cb) in &other.terms {
                out.add_term(ka.plus(kb), ca * cb);
            }
        }
        out.prune();
        out
    }

    pub fn scale(&self, c: Complex64) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (k, &v) in &self.terms {
            out.terms.insert(k.clone(), v * c);
        }
        out.prune();
        out
    }

    pub fn scale_real(&self, c: f64) -> Polynomial {
        self.scale(Complex64::new(c, 0.0))
    }

    /// Replaces every coefficient with its complex conjugate.
    pub fn conj_coeffs(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.conj())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.product(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.product(&base);
            }
        }
        acc
    }

    pub fn eval(&self, z: &[Complex64]) -> Complex64 {
        debug_assert_eq!(z.len(), self.nvars);
        self.terms
            .iter()
            .map(|(k, &c)| c * k.eval(z))
            .fold(Complex64::new(0.0, 0.0), |a, b| a + b)
    }

    /// Partial derivative with respect to `z_j`.
    pub fn derivative(&self, j: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (k, &c) in &self.terms {
            let e = k.exponents()[j];
            if e == 0 {
                continue;
            }
            let mut exps = k.exponents().to_vec();
            exps[j] -= 1;
            out.add_term(MultiIndex(exps), c * e as f64);
        }
        out.prune();
        out
    }

    /// Substitutes `z_j ↦ values[j]`; all values must share one variable count.
    pub fn substitute(&self, values: &[Polynomial]) -> Result<Polynomial> {
        if values.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: values.len() });
        }
        let target_vars = match values.first() {
            Some(v) => v.nvars,
            None => return Ok(self.clone()),
        };
        if let Some(bad) = values.iter().find(|v| v.nvars != target_vars) {
            return Err(Error::DimensionMismatch { expected: target_vars, found: bad.nvars });
        }
        let mut out = Polynomial::zero(target_vars);
        for (k, &c) in &self.terms {
            let mut term = Polynomial::constant(target_vars, c);
            for (j, &e) in k.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.product(&values[j].pow(e));
                }
            }
            out = out.combine(&term, 1.0);
        }
        Ok(out)
    }

    /// Re-expresses the polynomial in `offset + nvars ≤ total` variables by
    /// placing the current variables at positions `offset..offset + nvars`.
    pub fn embed(&self, total: usize, offset: usize) -> Polynomial {
        assert!(offset + self.nvars <= total);
        let mut out = Polynomial::zero(total);
        for (k, &c) in &self.terms {
            let mut exps = vec![0; total];
            exps[offset..offset + self.nvars].copy_from_slice(k.exponents());
            out.terms.insert(MultiIndex(exps), c);
        }
        out
    }

    /// Largest coefficient difference `max |a_α − b_α|`.
    pub fn max_abs_diff(&self, other: &Polynomial) -> f64 {
        let mut m: f64 = 0.0;
        for (k, &c) in &self.terms {
            m = m.max((c - other.coeff(k)).norm());
        }
        for (k, &c) in &other.terms {
            if !self.terms.contains_key(k) {
                m = m.max(c.norm());
            }
        }
        m
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.im == 0.0 {
                write!(f, "{}", c.re)?;
            } else {
                write!(f, "({}{:+}i)", c.re, c.im)?;
            }
            if !k.is_zero() {
                write!(f, "*{}", k)?;
            }
        }
        Ok(())
    }
}

// Operator forms panic on a variable-count mismatch; use `Polynomial::arith`
// for the checked version.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::arith(self, rhs, ArithOp::Add).expect("polynomial variable counts differ")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::arith(self, rhs, ArithOp::Sub).expect("polynomial variable counts differ")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::arith(self, rhs, ArithOp::Mul).expect("polynomial variable counts differ")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale_real(-1.0)
    }
}
