//! Certification that `p/q` maps the unit sphere into the unit sphere.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::ballmap::RationalBallMap;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::sample::{norm, Sampler};
use crate::Settings;

/// Number of closed-ball sample points used to check that `q` has no zero.
pub const DENOMINATOR_SAMPLES: usize = 10_000;
/// Smallest `|q|` accepted at a sample point.
pub const DENOMINATOR_FLOOR: f64 = 1e-6;
/// Sphere points inspected when looking for a non-properness witness.
pub const WITNESS_SAMPLES: usize = 200;
const NEWTON_STARTS: usize = 8;
const NEWTON_STEPS: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Proper,
    NotProper,
    /// `‖p‖² = |q|²` on the sphere but `p/q` is constant.
    ConstantOnSphere,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropernessCertificate {
    pub verdict: Verdict,
    /// Largest coefficient of `‖p‖² − |q|²` reduced modulo the sphere.
    pub residual_norm: f64,
    /// Sampled sphere point maximising `|‖f‖² − 1|`, reported for
    /// [`Verdict::NotProper`].
    pub witness: Option<Vec<Complex64>>,
}

impl PropernessCertificate {
    pub fn is_proper(&self) -> bool {
        self.verdict == Verdict::Proper
    }
}

/// Samples the closed ball (interior and sphere) and fails if `|q|` drops
/// below [`DENOMINATOR_FLOOR`]. The best few samples are then polished by
/// projected Newton steps toward a zero of `q`, so zeros between sample
/// points are still caught. Constant denominators skip the check.
pub fn check_denominator(map: &RationalBallMap, settings: &Settings) -> Result<()> {
    let q = map.denominator();
    if q.degree().unwrap_or(0) == 0 {
        return Ok(());
    }
    let n = map.domain_dim();
    let mut sampler = Sampler::new(settings.seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut best: Vec<(f64, Vec<Complex64>)> = Vec::new();
    for i in 0..DENOMINATOR_SAMPLES {
        let z = if i % 4 == 0 { sampler.sphere_point(n) } else { sampler.ball_point(n) };
        let m = q.eval(&z).norm();
        if best.len() < NEWTON_STARTS || m < best[best.len() - 1].0 {
            best.push((m, z));
            best.sort_by(|a, b| a.0.total_cmp(&b.0));
            best.truncate(NEWTON_STARTS);
        }
    }
    let gradient: Vec<Polynomial> = (0..n).map(|j| q.derivative(j)).collect();
    let mut smallest = f64::INFINITY;
    for (m, mut z) in best {
        smallest = smallest.min(m);
        for _ in 0..NEWTON_STEPS {
            let value = q.eval(&z);
            let grad: Vec<Complex64> = gradient.iter().map(|g| g.eval(&z)).collect();
            let g2: f64 = grad.iter().map(|g| g.norm_sqr()).sum();
            if g2 == 0.0 {
                break;
            }
            for (zj, gj) in z.iter_mut().zip(&grad) {
                *zj -= value * gj.conj() / g2;
            }
            let r = norm(&z);
            if r > 1.0 {
                z.iter_mut().for_each(|zj| *zj /= r);
            }
            smallest = smallest.min(q.eval(&z).norm());
        }
    }
    if smallest < DENOMINATOR_FLOOR {
        return Err(Error::DenominatorVanishes { modulus: smallest });
    }
    Ok(())
}

/// Exact (up to rounding) properness test through the reduced Hermitian form.
pub fn certify_proper(map: &RationalBallMap, settings: &Settings) -> Result<PropernessCertificate> {
    check_denominator(map, settings)?;
    let residual_norm = map.properness_form().reduce_mod_sphere().max_abs();
    if residual_norm <= settings.tol {
        let verdict =
            if map.is_constant(settings.tol) { Verdict::ConstantOnSphere } else { Verdict::Proper };
        return Ok(PropernessCertificate { verdict, residual_norm, witness: None });
    }
    Ok(PropernessCertificate {
        verdict: Verdict::NotProper,
        residual_norm,
        witness: worst_sphere_point(map, settings.seed, WITNESS_SAMPLES).map(|(z, _)| z),
    })
}

/// Largest sampled `|‖f(z)‖² − 1|` over random sphere points.
pub fn worst_sphere_point(
    map: &RationalBallMap,
    seed: u64,
    samples: usize,
) -> Option<(Vec<Complex64>, f64)> {
    let mut sampler = Sampler::new(seed);
    let mut best: Option<(Vec<Complex64>, f64)> = None;
    for _ in 0..samples {
        let z = sampler.sphere_point(map.domain_dim());
        let Some(w) = map.eval(&z) else { continue };
        let r = norm(&w);
        let dev = (r * r - 1.0).abs();
        if best.as_ref().is_none_or(|(_, b)| dev > *b) {
            best = Some((z, dev));
        }
    }
    best
}
