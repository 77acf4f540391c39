//! Seeded random points on spheres, in balls, and random unitaries.

use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// Deterministic source of sample points; identical seeds give identical
/// sequences.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn uniform(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    pub fn uniform_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Standard complex Gaussian, `E|g|² = 1`.
    pub fn gaussian(&mut self) -> Complex64 {
        let re: f64 = self.rng.sample(StandardNormal);
        let im: f64 = self.rng.sample(StandardNormal);
        Complex64::new(re, im) * Float::sqrt(0.5)
    }

    pub fn gaussian_vec(&mut self, n: usize) -> Vec<Complex64> {
        (0..n).map(|_| self.gaussian()).collect()
    }

    /// Uniform point on the unit sphere of `C^n`.
    pub fn sphere_point(&mut self, n: usize) -> Vec<Complex64> {
        loop {
            let v = self.gaussian_vec(n);
            let norm = norm(&v);
            if norm > 1e-12 {
                return v.into_iter().map(|x| x / norm).collect();
            }
        }
    }

    /// Uniform point in the closed unit ball of `C^n`.
    pub fn ball_point(&mut self, n: usize) -> Vec<Complex64> {
        let r = Float::powf(self.uniform(), 1.0 / (2 * n) as f64);
        self.sphere_point(n).into_iter().map(|x| x * r).collect()
    }

    /// Point of the open ball with norm at most `radius`.
    pub fn ball_point_within(&mut self, n: usize, radius: f64) -> Vec<Complex64> {
        self.ball_point(n).into_iter().map(|x| x * radius).collect()
    }

    /// Haar-distributed unitary via QR of a complex Gaussian matrix with the
    /// phases of `R`'s diagonal moved into `Q`.
    pub fn unitary(&mut self, n: usize) -> DMatrix<Complex64> {
        let g = DMatrix::from_fn(n, n, |_, _| self.gaussian());
        let qr = g.qr();
        let (mut q, r) = qr.unpack();
        for j in 0..n {
            let d = r[(j, j)];
            let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
            for i in 0..n {
                q[(i, j)] *= phase;
            }
        }
        q
    }
}

pub fn norm(v: &[Complex64]) -> f64 {
    Float::sqrt(v.iter().map(|x| x.norm_sqr()).sum::<f64>())
}

/// `⟨u, v⟩ = Σ u_j v̄_j`.
pub fn inner(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    u.iter().zip(v).map(|(a, b)| a * b.conj()).sum()
}
