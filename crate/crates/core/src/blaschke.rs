//! Finite Blaschke products and the winding-number degree.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::ballmap::RationalBallMap;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Quadrature nodes on the unit circle.
pub const WINDING_NODES: usize = 1 << 12;
/// Largest distance from an integer accepted for the winding integral.
pub const WINDING_SLACK: f64 = 1e-3;

/// `e^{iθ} Π (z − a_j) / (1 − ā_j z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlaschkeProduct {
    theta: f64,
    zeros: Vec<Complex64>,
}

impl BlaschkeProduct {
    pub fn new(theta: f64, zeros: Vec<Complex64>) -> Result<Self> {
        if let Some(a) = zeros.iter().find(|a| a.norm() >= 1.0) {
            return Err(Error::PointOutsideBall { norm: a.norm() });
        }
        Ok(BlaschkeProduct { theta, zeros })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn to_map(&self) -> RationalBallMap {
        let z = Polynomial::var(1, 0);
        let mut p = Polynomial::constant(1, Complex64::from_polar(1.0, self.theta));
        let mut q = Polynomial::one(1);
        for &a in &self.zeros {
            p = &p * &(&z - &Polynomial::constant(1, a));
            q = &q * &(&Polynomial::one(1) - &z.scale(a.conj()));
        }
        RationalBallMap::new(alloc::vec![p], q).expect("q(0) = 1")
    }
}

/// Result of the winding integral `(1/2πi) ∮ f'/f dz` over `|z| = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WindingDegree {
    pub degree: i64,
    pub value: Complex64,
    /// `|value − degree|`.
    pub residual: f64,
}

/// Winding number of a map `B₁ → B₁` around the circle, by the trapezoid
/// rule on [`WINDING_NODES`] points applied to `(p'/p − q'/q)·z`.
pub fn winding_degree(f: &RationalBallMap) -> Result<WindingDegree> {
    if f.domain_dim() != 1 || f.target_dim() != 1 {
        return Err(Error::NotOneDimensional);
    }
    let p = &f.numerator()[0];
    let q = f.denominator();
    let (dp, dq) = (p.derivative(0), q.derivative(0));
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..WINDING_NODES {
        let z = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / WINDING_NODES as f64);
        let pz = p.eval(&[z]);
        let qz = q.eval(&[z]);
        if pz.norm() <= crate::TAU || qz.norm() <= crate::TAU {
            return Err(Error::EvaluationAtPole);
        }
        sum += (dp.eval(&[z]) / pz - dq.eval(&[z]) / qz) * z;
    }
    let value = sum / WINDING_NODES as f64;
    let degree = Float::round(value.re);
    let residual = (value - degree).norm();
    if residual > WINDING_SLACK {
        return Err(Error::NonIntegralWinding { value });
    }
    Ok(WindingDegree { degree: degree as i64, value, residual })
}
