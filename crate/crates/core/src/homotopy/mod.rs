//! Homotopy families `t ↦ H_t`, their verification, and the standard
//! generators.

mod collapse;
mod generators;
mod monomial;

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::ballmap::RationalBallMap;
use crate::error::{Error, Result};
use crate::invariants::{embedding_dimension, norm_equivalent, NormEquivalence};
use crate::linalg::UnitaryPath;
use crate::properness::{certify_proper, Verdict};
use crate::Settings;

pub use collapse::{collapse_to_linear, whitney_to_linear};
pub use generators::{
    automorphism_contraction, blaschke_homotopy, contraction_from_map, ex2_1_family,
    ex2_1_map, faran_families, faran_fg, faran_gh, faran_hphi, juxtaposition_family,
};
pub use monomial::{homotopy_to_monomial, monomial_endpoint};

/// Default number of grid points for [`verify_family`].
pub const DEFAULT_GRID: usize = 101;

/// Junctions closer than this (coefficientwise) are joined without a bridge.
const JUNCTION_SLACK: f64 = 1e-6;

type Evaluator = Arc<dyn Fn(f64) -> Result<RationalBallMap> + Send + Sync>;

/// Which homotopy notion the family realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyKind {
    /// Every `H_t` is a rational map.
    pub rational: bool,
    /// Every `H_t` maps into the same ball `B_M`.
    pub fixed_target: bool,
}

impl Default for FamilyKind {
    fn default() -> Self {
        FamilyKind { rational: true, fixed_target: true }
    }
}

/// A continuous family of proper maps `B_n → B_M` given by an evaluator,
/// together with the maps it is meant to connect.
#[derive(Clone)]
pub struct HomotopyFamily {
    name: String,
    domain_dim: usize,
    target_dim: usize,
    kind: FamilyKind,
    left: RationalBallMap,
    right: RationalBallMap,
    eval: Evaluator,
}

impl HomotopyFamily {
    pub fn new<F>(
        name: impl Into<String>,
        target_dim: usize,
        left: RationalBallMap,
        right: RationalBallMap,
        eval: F,
    ) -> Result<Self>
    where
        F: Fn(f64) -> Result<RationalBallMap> + Send + Sync + 'static,
    {
        left.check_domain(&right)?;
        if left.target_dim().max(right.target_dim()) > target_dim {
            return Err(Error::DimensionMismatch {
                expected: target_dim,
                found: left.target_dim().max(right.target_dim()),
            });
        }
        Ok(HomotopyFamily {
            name: name.into(),
            domain_dim: left.domain_dim(),
            target_dim,
            kind: FamilyKind::default(),
            left,
            right,
            eval: Arc::new(eval),
        })
    }

    /// The family that is `f` for every `t`.
    pub fn constant(name: impl Into<String>, f: RationalBallMap) -> Self {
        let g = f.clone();
        HomotopyFamily::new(name, f.target_dim(), f.clone(), f, move |_| Ok(g.clone()))
            .expect("consistent dimensions")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn left(&self) -> &RationalBallMap {
        &self.left
    }

    pub fn right(&self) -> &RationalBallMap {
        &self.right
    }

    /// `H_t ⊕ 0` in `C^M`.
    pub fn at(&self, t: f64) -> Result<RationalBallMap> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::InvalidArgument(alloc::format!("parameter {t} outside [0, 1]")));
        }
        let map = (self.eval)(t)?;
        if map.domain_dim() != self.domain_dim {
            return Err(Error::DomainMismatch { left: self.domain_dim, right: map.domain_dim() });
        }
        if map.target_dim() > self.target_dim {
            return Err(Error::DimensionMismatch { expected: self.target_dim, found: map.target_dim() });
        }
        Ok(map.padded(self.target_dim))
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Runs the segments one after another, each on an equal share of
    /// `[0, 1]`. Junctions that differ are spliced with a unitary path when
    /// the two maps are norm-equivalent.
    pub fn concat(name: impl Into<String>, segments: Vec<HomotopyFamily>, settings: &Settings) -> Result<Self> {
        let first = segments.first().ok_or_else(|| Error::InvalidArgument("no segments".into()))?;
        let target = segments.iter().map(|s| s.target_dim).max().unwrap_or(0);
        let left = first.left.clone();
        let right = segments[segments.len() - 1].right.clone();
        let mut pieces: Vec<HomotopyFamily> = Vec::new();
        for seg in segments {
            if seg.domain_dim != left.domain_dim() {
                return Err(Error::DomainMismatch { left: left.domain_dim(), right: seg.domain_dim });
            }
            if let Some(prev) = pieces.last() {
                let a = prev.at(1.0)?.padded(target);
                let b = seg.at(0.0)?.padded(target);
                if a.max_coeff_diff(&b) > JUNCTION_SLACK {
                    pieces.push(unitary_bridge(&a, &b, settings)?);
                }
            }
            pieces.push(seg);
        }
        let count = pieces.len();
        let eval = move |t: f64| {
            let x = t * count as f64;
            let i = (x as usize).min(count - 1);
            pieces[i].at((x - i as f64).clamp(0.0, 1.0))
        };
        HomotopyFamily::new(name, target, left, right, eval)
    }
}

impl fmt::Debug for HomotopyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HomotopyFamily")
            .field("name", &self.name)
            .field("domain_dim", &self.domain_dim)
            .field("target_dim", &self.target_dim)
            .field("kind", &self.kind)
            .finish()
    }
}

/// `s ↦ V(s) a` with `V(0) = I` and `V(1) a = b`, for norm-equivalent maps of
/// equal target dimension.
pub fn unitary_bridge(a: &RationalBallMap, b: &RationalBallMap, settings: &Settings) -> Result<HomotopyFamily> {
    let unitary = match norm_equivalent(a, b, settings)? {
        NormEquivalence::Equivalent { unitary, .. } => unitary,
        NormEquivalence::Inequivalent { .. } => return Err(Error::EndpointMismatch { end: "junction" }),
    };
    let path = UnitaryPath::new(&unitary);
    let start = a.clone();
    HomotopyFamily::new("bridge", a.target_dim(), a.clone(), b.clone(), move |s| {
        start.apply_linear(&path.at(s))
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilySample {
    pub t: f64,
    pub verdict: Verdict,
    pub residual: f64,
    pub degree: u32,
    pub embedding_dimension: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilyReport {
    pub name: String,
    pub target_dim: usize,
    pub samples: Vec<FamilySample>,
    /// Largest coefficient change between adjacent grid points.
    pub max_increment: f64,
    /// Witness residuals of the endpoint norm equivalences.
    pub left_residual: f64,
    pub right_residual: f64,
}

impl FamilyReport {
    pub fn degrees(&self) -> Vec<u32> {
        self.samples.iter().map(|s| s.degree).collect()
    }

    pub fn embedding_dimensions(&self) -> Vec<usize> {
        self.samples.iter().map(|s| s.embedding_dimension).collect()
    }

    pub fn max_residual(&self) -> f64 {
        self.samples.iter().map(|s| s.residual).fold(0.0, f64::max)
    }
}

/// Grid `0, 1/(k−1), …, 1`.
pub fn grid(k: usize) -> Result<Vec<f64>> {
    if k < 2 {
        return Err(Error::InvalidGrid(k));
    }
    Ok((0..k).map(|i| i as f64 / (k - 1) as f64).collect())
}

/// Certifies every grid sample, checks `H_0 ~ left ⊕ 0` and
/// `H_1 ~ right ⊕ 0`, and records the degree and embedding-dimension
/// profiles along with the largest coefficient increment.
pub fn verify_family(family: &HomotopyFamily, grid_size: usize, settings: &Settings) -> Result<FamilyReport> {
    let ts = grid(grid_size)?;
    let mut samples = Vec::with_capacity(ts.len());
    let mut max_increment = 0.0f64;
    let mut previous: Option<RationalBallMap> = None;
    for &t in &ts {
        let map = family.at(t)?;
        let cert = certify_proper(&map, settings)?;
        if cert.verdict != Verdict::Proper {
            return Err(Error::PropernessFailure { t, verdict: cert.verdict, residual: cert.residual_norm });
        }
        if let Some(prev) = &previous {
            max_increment = max_increment.max(prev.max_coeff_diff(&map));
        }
        samples.push(FamilySample {
            t,
            verdict: cert.verdict,
            residual: cert.residual_norm,
            degree: map.degree(),
            embedding_dimension: embedding_dimension(&map),
        });
        previous = Some(map);
    }
    let left_residual = endpoint_residual(&family.at(0.0)?, family.left(), settings, "left")?;
    let right_residual = endpoint_residual(&family.at(1.0)?, family.right(), settings, "right")?;
    Ok(FamilyReport {
        name: family.name.clone(),
        target_dim: family.target_dim,
        samples,
        max_increment,
        left_residual,
        right_residual,
    })
}

fn endpoint_residual(
    sample: &RationalBallMap,
    declared: &RationalBallMap,
    settings: &Settings,
    end: &'static str,
) -> Result<f64> {
    match norm_equivalent(sample, declared, settings)? {
        NormEquivalence::Equivalent { residual, .. } if residual <= 1e3 * settings.tol.max(crate::TAU) => {
            Ok(residual)
        }
        _ => Err(Error::EndpointMismatch { end }),
    }
}
