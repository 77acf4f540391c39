//! Automorphisms of the unit ball, `z ↦ U (L_a z − a) / (1 − ⟨z, a⟩)`.
//!
//! Here `L_a z = ⟨z,a⟩ a / (s+1) + s z` with `s² = 1 − ‖a‖²`. With `a = 0`
//! and `U = I` this is the identity, and in general `φ(a) = 0`.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use crate::ballmap::RationalBallMap;
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, CVector, UnitaryPath};
use crate::poly::Polynomial;
use crate::sample::norm;
use crate::TAU;

#[derive(Clone, Debug, PartialEq)]
pub struct BallAutomorphism {
    a: Vec<Complex64>,
    u: CMatrix,
}

impl BallAutomorphism {
    pub fn new(a: Vec<Complex64>, u: CMatrix) -> Result<Self> {
        if u.nrows() != a.len() {
            return Err(Error::DimensionMismatch { expected: a.len(), found: u.nrows() });
        }
        let r = norm(&a);
        if r >= 1.0 {
            return Err(Error::PointOutsideBall { norm: r });
        }
        linalg::ensure_unitary(&u, 1e3 * TAU)?;
        Ok(BallAutomorphism { a, u })
    }

    pub fn identity(n: usize) -> Self {
        BallAutomorphism { a: alloc::vec![Complex64::new(0.0, 0.0); n], u: CMatrix::identity(n, n) }
    }

    /// Pure Möbius factor moving `a` to the origin.
    pub fn moving(a: Vec<Complex64>) -> Result<Self> {
        let n = a.len();
        Self::new(a, CMatrix::identity(n, n))
    }

    pub fn unitary(u: CMatrix) -> Result<Self> {
        let n = u.nrows();
        Self::new(alloc::vec![Complex64::new(0.0, 0.0); n], u)
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn point(&self) -> &[Complex64] {
        &self.a
    }

    pub fn unitary_part(&self) -> &CMatrix {
        &self.u
    }

    pub fn is_identity(&self) -> bool {
        norm(&self.a) == 0.0 && linalg::max_abs(&(&self.u - CMatrix::identity(self.dim(), self.dim()))) == 0.0
    }

    /// The automorphism as a degree-one rational map.
    pub fn to_map(&self) -> RationalBallMap {
        let n = self.dim();
        let r2: f64 = self.a.iter().map(|x| x.norm_sqr()).sum();
        let s = Float::sqrt(1.0 - r2);
        let moebius: Vec<Polynomial> = (0..n)
            .map(|k| {
                let coeffs: Vec<Complex64> = (0..n)
                    .map(|j| {
                        let mut c = self.a[j].conj() * self.a[k] / (s + 1.0);
                        if j == k {
                            c += s;
                        }
                        c
                    })
                    .collect();
                &Polynomial::linear(&coeffs) - &Polynomial::constant(n, self.a[k])
            })
            .collect();
        let conj_a: Vec<Complex64> = self.a.iter().map(|x| -x.conj()).collect();
        let q = &Polynomial::one(n) + &Polynomial::linear(&conj_a);
        let base = RationalBallMap::new(moebius, q).expect("q(0) = 1 by construction");
        base.apply_linear(&self.u).expect("square unitary")
    }

    /// `φ⁻¹`, with point `−U a` and unitary `U†`.
    pub fn inverse(&self) -> BallAutomorphism {
        let a = CVector::from_column_slice(&self.a);
        let moved = -(&self.u * a);
        BallAutomorphism { a: moved.iter().copied().collect(), u: self.u.adjoint() }
    }

    /// Path `t ↦ φ_t` with `φ_0 = φ` and `φ_1 = id`: the point is scaled by
    /// `1 − t` and the unitary follows a geodesic to the identity.
    pub fn contraction(&self) -> AutomorphismContraction {
        AutomorphismContraction { start: self.clone(), path: UnitaryPath::new(&self.u.adjoint()) }
    }

    /// Recovers the automorphism from an equidimensional map of degree one.
    pub fn from_map(map: &RationalBallMap) -> Result<Self> {
        let n = map.domain_dim();
        if map.target_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: map.target_dim() });
        }
        if map.degree() > 1 || map.denominator().degree().unwrap_or(0) > 1 {
            return Err(Error::InvalidArgument("only degree-one maps are automorphisms".into()));
        }
        let q = map.denominator();
        let a: Vec<Complex64> = (0..n)
            .map(|j| -q.coeff(&crate::poly::MultiIndex::unit(n, j)).conj())
            .collect();
        let r = norm(&a);
        if r >= 1.0 {
            return Err(Error::PointOutsideBall { norm: r });
        }
        // U w = φ(φ_{−a}(w)), read off column by column.
        let back = BallAutomorphism { a: a.iter().map(|x| -x).collect(), u: CMatrix::identity(n, n) }.to_map();
        let mut u = CMatrix::zeros(n, n);
        for j in 0..n {
            let mut w = alloc::vec![Complex64::new(0.0, 0.0); n];
            w[j] = Complex64::new(0.5, 0.0);
            let z = back.eval(&w).ok_or(Error::EvaluationAtPole)?;
            let col = map.eval(&z).ok_or(Error::EvaluationAtPole)?;
            for i in 0..n {
                u[(i, j)] = col[i] * 2.0;
            }
        }
        let phi = BallAutomorphism::new(a, u)?;
        let rebuilt = phi.to_map();
        let (x, y) = rebuilt.cross_numerators(map)?;
        let defect = x.iter().zip(&y).map(|(p, q)| p.max_abs_diff(q)).fold(0.0, f64::max);
        if defect > 1e3 * TAU {
            return Err(Error::InvalidArgument("map is not a ball automorphism".into()));
        }
        Ok(phi)
    }
}

/// Degenerate limit of automorphisms as `‖a‖ → 1`: the constant map `−U a`.
pub fn boundary_constant(a: &[Complex64], u: &CMatrix) -> Result<RationalBallMap> {
    let n = a.len();
    let r = norm(a);
    if (r - 1.0).abs() > 1e3 * TAU {
        return Err(Error::PointNotOnSphere { norm: r });
    }
    linalg::ensure_unitary(u, 1e3 * TAU)?;
    let v = -(u * CVector::from_column_slice(a));
    let numerator = v.iter().map(|&c| Polynomial::constant(n, c)).collect();
    RationalBallMap::polynomial(n, numerator)
}

#[derive(Clone, Debug)]
pub struct AutomorphismContraction {
    start: BallAutomorphism,
    path: UnitaryPath,
}

impl AutomorphismContraction {
    pub fn at(&self, t: f64) -> BallAutomorphism {
        let t = t.clamp(0.0, 1.0);
        let a = self.start.a.iter().map(|x| x * (1.0 - t)).collect();
        let u = if t == 0.0 { self.start.u.clone() } else { &self.start.u * self.path.at(t) };
        BallAutomorphism { a, u }
    }

    pub fn start(&self) -> &BallAutomorphism {
        &self.start
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::properness::certify_proper;
    use crate::sample::Sampler;
    use crate::Settings;
    use alloc::vec;

    fn random_point(s: &mut Sampler, n: usize) -> Vec<Complex64> {
        s.ball_point_within(n, 0.8)
    }

    #[test]
    fn trivial_automorphism_is_identity() {
        assert_eq!(BallAutomorphism::identity(3).to_map(), RationalBallMap::identity(3));
    }

    #[test]
    fn point_is_sent_to_origin() {
        let mut s = Sampler::new(2);
        for _ in 0..5 {
            let phi = BallAutomorphism::new(random_point(&mut s, 3), s.unitary(3)).unwrap();
            let img = phi.to_map().eval(phi.point()).unwrap();
            assert!(norm(&img) < 1e-12);
        }
    }

    #[test]
    fn automorphisms_are_proper_of_degree_one() {
        let mut s = Sampler::new(3);
        let phi = BallAutomorphism::new(random_point(&mut s, 2), s.unitary(2)).unwrap();
        let m = phi.to_map();
        assert_eq!(m.degree(), 1);
        assert!(certify_proper(&m, &Settings::default()).unwrap().is_proper());
    }

    #[test]
    fn inverse_composes_to_identity() {
        let mut s = Sampler::new(4);
        for n in 1..4 {
            let phi = BallAutomorphism::new(random_point(&mut s, n), s.unitary(n)).unwrap();
            let both = phi.inverse().to_map().then(&phi.to_map()).unwrap();
            // p/q = z  ⇔  p_k − z_k q ≡ 0.
            for (k, p) in both.numerator().iter().enumerate() {
                let zq = &Polynomial::var(n, k) * both.denominator();
                assert!(p.max_abs_diff(&zq) < 1e3 * TAU);
            }
        }
    }

    #[test]
    fn outside_point_is_rejected() {
        let a = vec![Complex64::new(0.8, 0.0), Complex64::new(0.0, 0.6)];
        assert!(matches!(
            BallAutomorphism::moving(a.clone()),
            Err(Error::PointOutsideBall { .. })
        ));
        let c = boundary_constant(&a, &CMatrix::identity(2, 2)).unwrap();
        assert!(c.is_constant(TAU));
        assert_eq!(c.degree(), 0);
    }

    #[test]
    fn recovered_from_map() {
        let mut s = Sampler::new(9);
        let phi = BallAutomorphism::new(random_point(&mut s, 2), s.unitary(2)).unwrap();
        let back = BallAutomorphism::from_map(&phi.to_map()).unwrap();
        assert!(norm(&back.a.iter().zip(&phi.a).map(|(x, y)| x - y).collect::<Vec<_>>()) < 1e-10);
        assert!(linalg::max_abs(&(&back.u - &phi.u)) < 1e-10);
        let quad = RationalBallMap::monomial(2, &[(&[2, 0], 1.0), (&[0, 1], 1.0)]).unwrap();
        assert!(BallAutomorphism::from_map(&quad).is_err());
    }

    #[test]
    fn contraction_endpoints() {
        let mut s = Sampler::new(5);
        let phi = BallAutomorphism::new(random_point(&mut s, 2), s.unitary(2)).unwrap();
        let c = phi.contraction();
        assert_eq!(c.at(0.0), phi);
        let end = c.at(1.0).to_map();
        assert!(end.max_coeff_diff(&RationalBallMap::identity(2)) < 1e-12);
    }
}
