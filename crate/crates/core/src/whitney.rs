//! Whitney sequences `F_{k+1} = j_k ∘ ((π_k F_k ⊗ φ_k) ⊕ (1 − π_k) F_k)`.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::automorphism::BallAutomorphism;
use crate::ballmap::RationalBallMap;
use crate::construct::tensor_in_frame;
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, CVector};
use crate::properness::{certify_proper, Verdict};
use crate::sample::Sampler;
use crate::{Settings, TAU};

/// One step of a Whitney sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct WhitneyStep {
    /// Orthonormal basis of `A_k`.
    pub subspace: Vec<CVector>,
    pub automorphism: BallAutomorphism,
    /// Matrix with orthonormal columns; `None` is the identity.
    pub injection: Option<CMatrix>,
}

impl WhitneyStep {
    pub fn new(subspace: Vec<CVector>, automorphism: BallAutomorphism) -> Self {
        WhitneyStep { subspace, automorphism, injection: None }
    }

    pub fn with_injection(mut self, injection: CMatrix) -> Self {
        self.injection = Some(injection);
        self
    }

    /// Unitary frame whose leading columns are the subspace basis.
    pub fn frame(&self, dim: usize) -> Result<CMatrix> {
        if self.subspace.is_empty() {
            return Err(Error::EmptySubspace);
        }
        if let Some(v) = self.subspace.iter().find(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
        }
        linalg::ensure_orthonormal(&self.subspace, 1e3 * TAU)?;
        let positions: Vec<usize> = (0..self.subspace.len()).collect();
        Ok(linalg::unitary_with_columns(&self.subspace, &positions, dim))
    }

    /// Applies the step to `f` without certifying the result.
    pub fn apply(&self, f: &RationalBallMap) -> Result<RationalBallMap> {
        let frame = self.frame(f.target_dim())?;
        let tensor = tensor_in_frame(f, &frame, self.subspace.len(), &self.automorphism)?;
        match &self.injection {
            None => Ok(tensor),
            Some(j) => {
                check_injection(j, tensor.target_dim())?;
                tensor.apply_linear(j)
            }
        }
    }
}

/// `j` must be `M × K` with `M ≥ K` and `j†j = I`.
pub fn check_injection(j: &CMatrix, source_dim: usize) -> Result<()> {
    if j.ncols() != source_dim {
        return Err(Error::DimensionMismatch { expected: source_dim, found: j.ncols() });
    }
    if j.nrows() < j.ncols() {
        return Err(Error::InvalidArgument("injection must not reduce the dimension".into()));
    }
    let deviation = linalg::max_abs(&(j.adjoint() * j - CMatrix::identity(source_dim, source_dim)));
    if deviation > 1e3 * TAU {
        return Err(Error::NotOrthonormal { deviation });
    }
    Ok(())
}

/// A term `F_k` together with the data that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct WhitneyTerm {
    start: BallAutomorphism,
    history: Vec<WhitneyStep>,
    map: RationalBallMap,
}

impl WhitneyTerm {
    /// `F_0 = φ_0`.
    pub fn new(start: BallAutomorphism) -> Self {
        let map = start.to_map();
        WhitneyTerm { start, history: Vec::new(), map }
    }

    /// `F_{k+1}`, certified proper.
    pub fn extend(&self, step: WhitneyStep, settings: &Settings) -> Result<WhitneyTerm> {
        let map = step.apply(&self.map)?;
        let cert = certify_proper(&map, settings)?;
        if cert.verdict != Verdict::Proper {
            return Err(Error::NotProper { verdict: cert.verdict, residual: cert.residual_norm });
        }
        let mut history = self.history.clone();
        history.push(step);
        Ok(WhitneyTerm { start: self.start.clone(), history, map })
    }

    /// Replays a full sequence, certifying every term.
    pub fn build(start: BallAutomorphism, steps: Vec<WhitneyStep>, settings: &Settings) -> Result<WhitneyTerm> {
        steps.into_iter().try_fold(WhitneyTerm::new(start), |term, step| term.extend(step, settings))
    }

    pub fn start(&self) -> &BallAutomorphism {
        &self.start
    }

    pub fn history(&self) -> &[WhitneyStep] {
        &self.history
    }

    /// Number of steps `k`.
    pub fn len(&self) -> usize {
        self.history.len()
    }

    pub fn is_empty(&self) -> bool {
        self.history.is_empty()
    }

    pub fn map(&self) -> &RationalBallMap {
        &self.map
    }

    pub fn domain_dim(&self) -> usize {
        self.start.dim()
    }

    /// Target dimensions `N_0, …, N_k`.
    pub fn target_dims(&self) -> Vec<usize> {
        let mut dims = alloc::vec![self.domain_dim()];
        let n = self.domain_dim();
        for step in &self.history {
            let k = dims[dims.len() - 1] + step.subspace.len() * (n - 1);
            dims.push(step.injection.as_ref().map_or(k, |j| j.nrows()));
        }
        dims
    }
}

/// Random Whitney term of length `len` over `B_n`: subspaces of dimension 1
/// or 2 spanned by columns of Haar unitaries, automorphisms with `‖a‖ ≤ 0.5`,
/// and occasionally an injection into one extra dimension.
pub fn random_term(seed: u64, n: usize, len: usize, settings: &Settings) -> Result<WhitneyTerm> {
    let mut s = Sampler::new(seed);
    let random_automorphism = |s: &mut Sampler| {
        let a = s.ball_point_within(n, 0.5);
        BallAutomorphism::new(a, s.unitary(n))
    };
    let start = random_automorphism(&mut s)?;
    let mut term = WhitneyTerm::new(start);
    for _ in 0..len {
        let big_n = term.map.target_dim();
        let rank = if big_n > 1 && s.uniform() < 0.5 { 2 } else { 1 };
        let u = s.unitary(big_n);
        let subspace = (0..rank).map(|i| u.column(i).into_owned()).collect();
        let mut step = WhitneyStep::new(subspace, random_automorphism(&mut s)?);
        if s.uniform() < 0.3 {
            let k = big_n + rank * (n - 1);
            let v = s.unitary(k + 1);
            step = step.with_injection(v.columns(0, k).into_owned());
        }
        term = term.extend(step, settings)?;
    }
    Ok(term)
}

/// Standard basis vector `e_k` of `C^dim`.
pub fn basis_vector(dim: usize, k: usize) -> CVector {
    let mut v = CVector::zeros(dim);
    v[k] = Complex64::new(1.0, 0.0);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn first_step_from_identity_gives_h() {
        let term = WhitneyTerm::new(BallAutomorphism::identity(2));
        let step = WhitneyStep::new(vec![basis_vector(2, 1)], BallAutomorphism::identity(2));
        let h = term.extend(step, &Settings::default()).unwrap();
        assert_eq!(h.map().degree(), 2);
        assert_eq!(h.map().target_dim(), 3);
        assert_eq!(h.target_dims(), vec![2, 3]);
    }

    #[test]
    fn degree_grows_on_top_degree_subspace() {
        let settings = Settings::default();
        let mut term = WhitneyTerm::new(BallAutomorphism::identity(2));
        for k in 0..3 {
            // The first component always carries the top degree.
            let n = term.map().target_dim();
            let step = WhitneyStep::new(vec![basis_vector(n, 0)], BallAutomorphism::identity(2));
            term = term.extend(step, &settings).unwrap();
            assert_eq!(term.map().degree() as usize, k + 2);
        }
    }

    #[test]
    fn degree_stays_on_low_degree_subspace() {
        let settings = Settings::default();
        let h = RationalBallMap::monomial(2, &[(&[1, 1], 1.0), (&[0, 2], 1.0), (&[1, 0], 1.0)]).unwrap();
        let step = WhitneyStep::new(vec![basis_vector(3, 2)], BallAutomorphism::identity(2));
        let g = step.apply(&h).unwrap();
        assert_eq!(g.degree(), 2);
        assert!(certify_proper(&g, &settings).unwrap().is_proper());
    }

    #[test]
    fn random_terms_respect_degree_bound() {
        let settings = Settings::default();
        for seed in 0..4 {
            let term = random_term(seed, 2, 3, &settings).unwrap();
            assert!(term.map().degree() as usize <= term.len() + 1);
            assert_eq!(*term.target_dims().last().unwrap(), term.map().target_dim());
        }
    }

    #[test]
    fn non_isometric_injection_is_rejected() {
        let step = WhitneyStep::new(vec![basis_vector(2, 0)], BallAutomorphism::identity(2))
            .with_injection(CMatrix::identity(3, 3) * Complex64::new(2.0, 0.0));
        assert!(step.apply(&RationalBallMap::identity(2)).is_err());
    }
}
