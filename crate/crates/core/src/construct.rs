//! Tensor operation on a subspace and juxtaposition.

use alloc::vec::Vec;

use num_traits::Float;

use crate::automorphism::BallAutomorphism;
use crate::ballmap::RationalBallMap;
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, CVector};
use crate::TAU;

/// `(π_A f ⊗ φ) ⊕ (1 − π_A) f`.
///
/// With `a_1, …, a_r` the supplied orthonormal basis of `A`, the output lists
/// `⟨f, a_i⟩ φ_j` for `i = 1..r`, `j = 1..n` first, then the coordinates of
/// `(1 − π_A) f` in the complement basis of [`linalg::orthonormal_complement`].
/// The target dimension is `N + r(n − 1)`.
pub fn tensor_on_subspace(
    f: &RationalBallMap,
    basis: &[CVector],
    phi: &BallAutomorphism,
) -> Result<RationalBallMap> {
    if basis.is_empty() {
        return Err(Error::EmptySubspace);
    }
    let big_n = f.target_dim();
    if let Some(v) = basis.iter().find(|v| v.len() != big_n) {
        return Err(Error::DimensionMismatch { expected: big_n, found: v.len() });
    }
    linalg::ensure_orthonormal(basis, 1e3 * TAU)?;
    let positions: Vec<usize> = (0..basis.len()).collect();
    let frame = linalg::unitary_with_columns(basis, &positions, big_n);
    tensor_in_frame(f, &frame, basis.len(), phi)
}

/// Tensor operation with an explicit unitary frame: the first `rank` columns
/// span `A`, the remaining columns are the complement basis.
pub fn tensor_in_frame(
    f: &RationalBallMap,
    frame: &CMatrix,
    rank: usize,
    phi: &BallAutomorphism,
) -> Result<RationalBallMap> {
    let big_n = f.target_dim();
    let n = f.domain_dim();
    if frame.nrows() != big_n || frame.ncols() != big_n {
        return Err(Error::DimensionMismatch { expected: big_n, found: frame.nrows() });
    }
    if rank == 0 {
        return Err(Error::EmptySubspace);
    }
    if phi.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: phi.dim() });
    }
    // Coordinates of f in the frame: row i is ⟨f, frame_i⟩.
    let coords = f.apply_linear(&frame.adjoint())?;
    let psi = phi.to_map();
    let big_q = psi.denominator();
    let mut numerator = Vec::with_capacity(big_n + rank * (n - 1));
    for g in &coords.numerator()[..rank] {
        for pj in psi.numerator() {
            numerator.push(g * pj);
        }
    }
    for g in &coords.numerator()[rank..] {
        numerator.push(g * big_q);
    }
    RationalBallMap::new(numerator, f.denominator() * big_q)
}

/// `√(1−t²) f ⊕ t g`, over the denominator `q_f q_g`.
pub fn juxtapose(f: &RationalBallMap, g: &RationalBallMap, t: f64) -> Result<RationalBallMap> {
    f.check_domain(g)?;
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::InvalidArgument(alloc::format!("juxtaposition parameter {t} outside [0, 1]")));
    }
    f.scaled(Float::sqrt(1.0 - t * t)).direct_sum(&g.scaled(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::HermitianForm;
    use crate::invariants::norm_equivalent;
    use crate::properness::certify_proper;
    use crate::sample::Sampler;
    use crate::Settings;
    use alloc::vec;
    use num_complex::Complex64;

    fn e(dim: usize, k: usize) -> CVector {
        let mut v = CVector::zeros(dim);
        v[k] = Complex64::new(1.0, 0.0);
        v
    }

    #[test]
    fn tensor_of_identity_on_second_axis() {
        let h = tensor_on_subspace(&RationalBallMap::identity(2), &[e(2, 1)], &BallAutomorphism::identity(2))
            .unwrap();
        // Block first: (w·z, w·w), then the complement component z.
        let expected = RationalBallMap::monomial(2, &[(&[1, 1], 1.0), (&[0, 2], 1.0), (&[1, 0], 1.0)]).unwrap();
        assert_eq!(h, expected);
    }

    #[test]
    fn tensor_of_identity_gives_whitney_map() {
        let w = tensor_on_subspace(&RationalBallMap::identity(3), &[e(3, 2)], &BallAutomorphism::identity(3))
            .unwrap();
        assert_eq!(w.target_dim(), 5);
        let expected = RationalBallMap::monomial(
            3,
            &[(&[1, 0, 1], 1.0), (&[0, 1, 1], 1.0), (&[0, 0, 2], 1.0), (&[1, 0, 0], 1.0), (&[0, 1, 0], 1.0)],
        )
        .unwrap();
        assert_eq!(w, expected);
    }

    #[test]
    fn repeated_tensor_in_one_variable_is_power() {
        let mut f = RationalBallMap::identity(1);
        for _ in 0..4 {
            f = tensor_on_subspace(&f, &[e(1, 0)], &BallAutomorphism::identity(1)).unwrap();
        }
        assert_eq!(f, RationalBallMap::monomial(1, &[(&[5], 1.0)]).unwrap());
    }

    #[test]
    fn tensor_with_automorphism_stays_proper() {
        let mut s = Sampler::new(11);
        let phi = BallAutomorphism::new(s.ball_point_within(2, 0.7), s.unitary(2)).unwrap();
        let u = s.unitary(3);
        let a = vec![u.column(0).into_owned(), u.column(1).into_owned()];
        let h = RationalBallMap::monomial(2, &[(&[1, 0], 1.0), (&[1, 1], 1.0), (&[0, 2], 1.0)]).unwrap();
        let t = tensor_on_subspace(&h, &a, &phi).unwrap();
        assert_eq!(t.target_dim(), 3 + 2);
        assert!(certify_proper(&t, &Settings::default()).unwrap().is_proper());
    }

    #[test]
    fn tensor_rejects_bad_subspaces() {
        let f = RationalBallMap::identity(2);
        let id = BallAutomorphism::identity(2);
        assert!(matches!(tensor_on_subspace(&f, &[], &id), Err(Error::EmptySubspace)));
        let v = e(2, 0) * Complex64::new(2.0, 0.0);
        assert!(matches!(tensor_on_subspace(&f, &[v], &id), Err(Error::NotOrthonormal { .. })));
    }

    #[test]
    fn juxtaposition_endpoints_and_midpoint() {
        let f = RationalBallMap::identity(2);
        let g = RationalBallMap::monomial(2, &[(&[2, 0], 1.0), (&[1, 1], 2f64.sqrt()), (&[0, 2], 1.0)]).unwrap();
        let settings = Settings::default();
        assert!(norm_equivalent(&juxtapose(&f, &g, 0.0).unwrap(), &f, &settings).unwrap().is_equivalent());
        assert!(norm_equivalent(&juxtapose(&f, &g, 1.0).unwrap(), &g, &settings).unwrap().is_equivalent());
        let mid = juxtapose(&f, &f, 0.5).unwrap();
        let diff = mid.squared_norm_form().sub(&HermitianForm::squared_norm(2, f.numerator()));
        assert!(diff.max_abs() < 1e-15);
        assert!(juxtapose(&f, &g, 1.5).is_err());
    }
}
