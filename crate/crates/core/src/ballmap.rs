//! Rational maps `p/q : C^n → C^N` with a scalar denominator normalized by
//! `q(0) = 1`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hermitian::HermitianForm;
use crate::linalg::CMatrix;
use crate::poly::{MultiIndex, Polynomial};
use crate::TAU;

#[derive(Clone, PartialEq)]
pub struct RationalBallMap {
    domain_dim: usize,
    numerator: Vec<Polynomial>,
    denominator: Polynomial,
}

impl RationalBallMap {
    /// Builds `p/q`, checking variable counts and `q(0) = 1` within [`TAU`].
    pub fn new(numerator: Vec<Polynomial>, denominator: Polynomial) -> Result<Self> {
        let n = denominator.nvars();
        if n == 0 {
            return Err(Error::InvalidArgument("domain dimension must be positive".into()));
        }
        if let Some(bad) = numerator.iter().find(|p| p.nvars() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.nvars() });
        }
        let q0 = denominator.constant_term();
        if (q0 - Complex64::new(1.0, 0.0)).norm() > TAU {
            return Err(Error::DenominatorNotNormalized { constant: q0 });
        }
        Ok(RationalBallMap { domain_dim: n, numerator, denominator })
    }

    /// Divides numerator and denominator by `q(0)` before building the map.
    pub fn normalized(numerator: Vec<Polynomial>, denominator: Polynomial) -> Result<Self> {
        let q0 = denominator.constant_term();
        if q0.norm() <= TAU {
            return Err(Error::DenominatorNotNormalized { constant: q0 });
        }
        let s = q0.inv();
        let numerator = numerator.iter().map(|p| p.scale(s)).collect();
        let mut denominator = denominator.scale(s);
        // Pin the constant term to exactly 1.
        let fix = Complex64::new(1.0, 0.0) - denominator.constant_term();
        denominator = &denominator + &Polynomial::constant(denominator.nvars(), fix);
        Self::new(numerator, denominator)
    }

    pub fn polynomial(domain_dim: usize, numerator: Vec<Polynomial>) -> Result<Self> {
        Self::new(numerator, Polynomial::one(domain_dim))
    }

    pub fn identity(n: usize) -> Self {
        let comps = (0..n).map(|j| Polynomial::var(n, j)).collect();
        RationalBallMap { domain_dim: n, numerator: comps, denominator: Polynomial::one(n) }
    }

    /// Monomial map from `(exponents, coefficient)` pairs, one per component.
    pub fn monomial(domain_dim: usize, comps: &[(&[u32], f64)]) -> Result<Self> {
        let numerator = comps
            .iter()
            .map(|(e, c)| {
                if e.len() != domain_dim {
                    return Err(Error::DimensionMismatch { expected: domain_dim, found: e.len() });
                }
                Ok(Polynomial::monomial(MultiIndex::new(e.to_vec()), Complex64::new(*c, 0.0)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::polynomial(domain_dim, numerator)
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }

    pub fn target_dim(&self) -> usize {
        self.numerator.len()
    }

    pub fn numerator(&self) -> &[Polynomial] {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.degree() == Some(0)
    }

    /// Every component is a single term or zero.
    pub fn is_monomial(&self) -> bool {
        self.is_polynomial() && self.numerator.iter().all(|p| p.len() <= 1)
    }

    /// Degree of the numerator counting only terms above [`TAU`]; the zero
    /// numerator has degree 0.
    pub fn degree(&self) -> u32 {
        self.numerator.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
    }

    /// `f(z)`, or `None` when `|q(z)| ≤ TAU`.
    pub fn eval(&self, z: &[Complex64]) -> Option<Vec<Complex64>> {
        let q = self.denominator.eval(z);
        if q.norm() <= TAU {
            return None;
        }
        Some(self.numerator.iter().map(|p| p.eval(z) / q).collect())
    }

    /// `f ⊕ 0` into `C^target`.
    pub fn padded(&self, target: usize) -> RationalBallMap {
        assert!(target >= self.target_dim(), "cannot pad to a smaller target");
        let mut numerator = self.numerator.clone();
        numerator.resize(target, Polynomial::zero(self.domain_dim));
        RationalBallMap { numerator, ..self.clone() }
    }

    /// Numerator scaled by `c`; the denominator is unchanged.
    pub fn scaled(&self, c: f64) -> RationalBallMap {
        let numerator = self.numerator.iter().map(|p| p.scale_real(c)).collect();
        RationalBallMap { numerator, ..self.clone() }
    }

    /// Applies a (possibly rectangular) matrix to the target: `z ↦ M f(z)`.
    pub fn apply_linear(&self, m: &CMatrix) -> Result<RationalBallMap> {
        if m.ncols() != self.target_dim() {
            return Err(Error::DimensionMismatch { expected: self.target_dim(), found: m.ncols() });
        }
        let numerator = (0..m.nrows())
            .map(|i| {
                let mut acc = Polynomial::zero(self.domain_dim);
                for (k, p) in self.numerator.iter().enumerate() {
                    let c = m[(i, k)];
                    if c.norm() > 0.0 {
                        acc = &acc + &p.scale(c);
                    }
                }
                acc
            })
            .collect();
        Ok(RationalBallMap { numerator, ..self.clone() })
    }

    /// `f ⊕ g` over the common denominator `q_f q_g`.
    pub fn direct_sum(&self, other: &RationalBallMap) -> Result<RationalBallMap> {
        self.check_domain(other)?;
        if self.denominator == other.denominator {
            let mut numerator = self.numerator.clone();
            numerator.extend(other.numerator.iter().cloned());
            return Ok(RationalBallMap { numerator, ..self.clone() });
        }
        let mut numerator: Vec<Polynomial> =
            self.numerator.iter().map(|p| p * &other.denominator).collect();
        numerator.extend(other.numerator.iter().map(|p| p * &self.denominator));
        Self::new(numerator, &self.denominator * &other.denominator)
    }

    /// Numerators of `f` and `g` rewritten over the common denominator
    /// `q_f q_g`: returns `(q_g p_f, q_f p_g)`.
    pub fn cross_numerators(&self, other: &RationalBallMap) -> Result<(Vec<Polynomial>, Vec<Polynomial>)> {
        self.check_domain(other)?;
        if self.denominator == other.denominator {
            return Ok((self.numerator.clone(), other.numerator.clone()));
        }
        let a = self.numerator.iter().map(|p| p * &other.denominator).collect();
        let b = other.numerator.iter().map(|p| p * &self.denominator).collect();
        Ok((a, b))
    }

    pub fn check_domain(&self, other: &RationalBallMap) -> Result<()> {
        if self.domain_dim != other.domain_dim {
            return Err(Error::DomainMismatch { left: self.domain_dim, right: other.domain_dim });
        }
        Ok(())
    }

    /// `outer ∘ self`, computed by homogenizing `outer` to its degree `D`:
    /// numerator and denominator become `Σ c_γ p^γ q^{D−|γ|}`.
    pub fn then(&self, outer: &RationalBallMap) -> Result<RationalBallMap> {
        if outer.domain_dim != self.target_dim() {
            return Err(Error::DimensionMismatch { expected: outer.domain_dim, found: self.target_dim() });
        }
        let big_d = outer
            .numerator
            .iter()
            .chain(core::iter::once(&outer.denominator))
            .filter_map(Polynomial::degree)
            .max()
            .unwrap_or(0);
        let q_powers: Vec<Polynomial> = {
            let mut v = vec![Polynomial::one(self.domain_dim)];
            for _ in 0..big_d {
                let next = &v[v.len() - 1] * &self.denominator;
                v.push(next);
            }
            v
        };
        let homogenized = |poly: &Polynomial| -> Polynomial {
            let mut acc = Polynomial::zero(self.domain_dim);
            for (gamma, &c) in poly.stored_terms() {
                let mut term = q_powers[(big_d - gamma.degree()) as usize].scale(c);
                for (k, &e) in gamma.exponents().iter().enumerate() {
                    if e > 0 {
                        term = &term * &self.numerator[k].pow(e);
                    }
                }
                acc = &acc + &term;
            }
            acc
        };
        let numerator = outer.numerator.iter().map(homogenized).collect();
        let denominator = homogenized(&outer.denominator);
        Self::normalized(numerator, denominator)
    }

    /// Whether `p/q` is constant: `p_k − p_k(0)·q ≡ 0` for every component.
    pub fn is_constant(&self, tol: f64) -> bool {
        self.numerator.iter().all(|p| {
            let c = p.constant_term();
            (p - &self.denominator.scale(c)).max_abs_coeff() <= tol
        })
    }

    /// `‖p‖²` as a Hermitian form.
    pub fn squared_norm_form(&self) -> HermitianForm {
        HermitianForm::squared_norm(self.domain_dim, &self.numerator)
    }

    /// `R = ‖p‖² − |q|²`, which vanishes on the sphere iff the map is proper
    /// or constant of modulus one.
    pub fn properness_form(&self) -> HermitianForm {
        self.squared_norm_form()
            .sub(&HermitianForm::squared_norm(self.domain_dim, core::slice::from_ref(&self.denominator)))
    }

    /// Monomials appearing in any component, descending order.
    pub fn numerator_support(&self) -> Vec<MultiIndex> {
        let mut all: Vec<MultiIndex> =
            self.numerator.iter().flat_map(|p| p.terms().map(|(k, _)| k.clone())).collect();
        all.sort();
        all.dedup();
        all.reverse();
        all
    }

    /// Matrix of numerator coefficients: row `k` holds component `k` over
    /// the given monomial columns.
    pub fn coefficient_matrix(&self, columns: &[MultiIndex]) -> CMatrix {
        CMatrix::from_fn(self.target_dim(), columns.len(), |k, j| self.numerator[k].coeff(&columns[j]))
    }

    /// Largest coefficient difference against another map of the same shape,
    /// over numerator and denominator.
    pub fn max_coeff_diff(&self, other: &RationalBallMap) -> f64 {
        let n = self.target_dim().max(other.target_dim());
        let zero = Polynomial::zero(self.domain_dim);
        let mut m = self.denominator.max_abs_diff(&other.denominator);
        for k in 0..n {
            let a = self.numerator.get(k).unwrap_or(&zero);
            let b = other.numerator.get(k).unwrap_or(&zero);
            m = m.max(a.max_abs_diff(b));
        }
        m
    }

    /// Largest coefficient modulus over numerator and denominator.
    pub fn max_abs_coeff(&self) -> f64 {
        self.numerator
            .iter()
            .map(Polynomial::max_abs_coeff)
            .fold(self.denominator.max_abs_coeff(), f64::max)
    }
}

impl fmt::Debug for RationalBallMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RationalBallMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.numerator.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")?;
        if !self.is_polynomial() {
            write!(f, " / ({})", self.denominator)?;
        }
        Ok(())
    }
}
