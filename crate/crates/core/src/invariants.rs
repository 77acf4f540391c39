//! Degree, embedding dimension and norm equivalence.

use crate::ballmap::RationalBallMap;
use crate::error::Result;
use crate::hermitian::{EntryDifference, HermitianForm};
use crate::linalg::{self, CMatrix};
use crate::Settings;

/// Numerator degree, counting only coefficients above the pruning threshold.
pub fn degree(map: &RationalBallMap) -> u32 {
    map.degree()
}

/// Number of linearly independent numerator components (numerical rank of
/// the component-by-monomial coefficient matrix).
pub fn embedding_dimension(map: &RationalBallMap) -> usize {
    let support = map.numerator_support();
    linalg::numerical_rank(&map.coefficient_matrix(&support))
}

#[derive(Clone, Debug)]
pub enum NormEquivalence {
    /// `U f = g` after padding both to a common target.
    Equivalent { unitary: CMatrix, residual: f64 },
    /// The squared-norm forms differ; the largest differing entry is reported.
    Inequivalent { difference: EntryDifference },
}

impl NormEquivalence {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, NormEquivalence::Equivalent { .. })
    }
}

/// Decides `‖f‖² = ‖g‖²` by comparing the squared-norm forms of the
/// numerators rewritten over the common denominator `q_f q_g`. On equality,
/// a unitary witness `U` with `U f ≈ g` is fitted to the stacked coefficient
/// vectors by unitary least squares (Procrustes).
pub fn norm_equivalent(
    f: &RationalBallMap,
    g: &RationalBallMap,
    settings: &Settings,
) -> Result<NormEquivalence> {
    let target = f.target_dim().max(g.target_dim());
    let f = f.padded(target);
    let g = g.padded(target);
    let (pf, pg) = f.cross_numerators(&g)?;
    let n = f.domain_dim();
    let form_f = HermitianForm::squared_norm(n, &pf);
    let form_g = HermitianForm::squared_norm(n, &pg);
    if let Some(difference) = form_f.max_difference(&form_g) {
        if difference.magnitude() > settings.tol {
            return Ok(NormEquivalence::Inequivalent { difference });
        }
    }
    let f_cross = RationalBallMap::polynomial(n, pf)?;
    let g_cross = RationalBallMap::polynomial(n, pg)?;
    let mut support = f_cross.numerator_support();
    support.extend(g_cross.numerator_support());
    support.sort();
    support.dedup();
    let cf = f_cross.coefficient_matrix(&support);
    let cg = g_cross.coefficient_matrix(&support);
    let unitary = if support.is_empty() {
        CMatrix::identity(target, target)
    } else {
        linalg::procrustes(&cf, &cg)
    };
    let residual = linalg::max_abs(&(&unitary * &cf - &cg));
    Ok(NormEquivalence::Equivalent { unitary, residual })
}
