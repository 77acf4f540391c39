//! Dense complex linear algebra helpers: numerical rank, null spaces,
//! unitary Procrustes fits, orthonormal completion and unitary paths.

use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};

/// Relative singular-value threshold shared by rank and null-space code.
pub const RANK_RTOL: f64 = 1e-10;

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

fn singular_values(m: &CMatrix) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    m.clone().svd(false, false).singular_values.iter().copied().collect()
}

/// Number of singular values above `σ_max · RANK_RTOL`.
pub fn numerical_rank(m: &CMatrix) -> usize {
    let s = singular_values(m);
    let smax = s.iter().copied().fold(0.0, f64::max);
    if smax == 0.0 {
        return 0;
    }
    s.iter().filter(|&&x| x > smax * RANK_RTOL).count()
}

/// Orthonormal basis of `{v : m v = 0}` under the same threshold as
/// [`numerical_rank`].
pub fn nullspace(m: &CMatrix) -> Vec<CVector> {
    let ncols = m.ncols();
    if ncols == 0 {
        return Vec::new();
    }
    // Pad with zero rows so the SVD returns a full set of right singular vectors.
    let rows = m.nrows().max(ncols);
    let mut padded = CMatrix::zeros(rows, ncols);
    padded.view_mut((0, 0), (m.nrows(), ncols)).copy_from(m);
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("requested right singular vectors");
    let smax = svd.singular_values.iter().copied().fold(0.0, f64::max);
    let threshold = smax * RANK_RTOL;
    svd.singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| smax == 0.0 || s <= threshold)
        .map(|(i, _)| v_t.row(i).adjoint())
        .collect()
}

/// `max |m†m − I|` entrywise.
pub fn unitary_defect(m: &CMatrix) -> f64 {
    let g = m.adjoint() * m;
    let id = CMatrix::identity(g.nrows(), g.ncols());
    (g - id).iter().map(|c| c.norm()).fold(0.0, f64::max)
}

pub fn ensure_unitary(m: &CMatrix, tol: f64) -> Result<()> {
    if !m.is_square() {
        return Err(Error::NotUnitary { deviation: f64::INFINITY });
    }
    let deviation = unitary_defect(m);
    if deviation > tol {
        return Err(Error::NotUnitary { deviation });
    }
    Ok(())
}

/// Checks that the vectors are orthonormal within `tol`.
pub fn ensure_orthonormal(basis: &[CVector], tol: f64) -> Result<()> {
    let mut deviation: f64 = 0.0;
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            deviation = deviation.max((v.dotc(u) - Complex64::new(target, 0.0)).norm());
        }
    }
    if deviation > tol {
        return Err(Error::NotOrthonormal { deviation });
    }
    Ok(())
}

/// Orthonormal basis of the orthogonal complement of `basis` in `C^dim`,
/// obtained by Gram–Schmidt against `e_1, …, e_dim` in order.
pub fn orthonormal_complement(basis: &[CVector], dim: usize) -> Vec<CVector> {
    let mut all: Vec<CVector> = basis.to_vec();
    let mut out = Vec::new();
    for k in 0..dim {
        if all.len() == dim {
            break;
        }
        let mut v = CVector::zeros(dim);
        v[k] = Complex64::new(1.0, 0.0);
        // Two passes of modified Gram–Schmidt.
        for _ in 0..2 {
            for u in &all {
                let proj = u.dotc(&v);
                v -= u * proj;
            }
        }
        let norm = v.norm();
        if norm > 1e-8 {
            v /= Complex64::new(norm, 0.0);
            all.push(v.clone());
            out.push(v);
        }
    }
    out
}

/// Unitary whose columns at `positions` are `basis` and whose remaining
/// columns (in increasing position order) are the complement basis.
pub fn unitary_with_columns(basis: &[CVector], positions: &[usize], dim: usize) -> CMatrix {
    assert_eq!(basis.len(), positions.len());
    let complement = orthonormal_complement(basis, dim);
    let mut m = CMatrix::zeros(dim, dim);
    let mut rest = complement.iter();
    for col in 0..dim {
        let v = match positions.iter().position(|&p| p == col) {
            Some(i) => &basis[i],
            None => rest.next().expect("complement has the missing dimensions"),
        };
        m.set_column(col, v);
    }
    m
}

/// Unitary `U` minimising `‖U·source − target‖_F` (orthogonal Procrustes).
pub fn procrustes(source: &CMatrix, target: &CMatrix) -> CMatrix {
    let m = target * source.adjoint();
    let svd = m.svd(true, true);
    let u = svd.u.expect("requested left singular vectors");
    let v_t = svd.v_t.expect("requested right singular vectors");
    u * v_t
}

/// Continuous path `s ↦ U(s)` in the unitary group with `U(0) = I` and
/// `U(1) = target`, built from the spectral decomposition `target = Q D Q†`
/// as `U(s) = Q D^s Q†` with principal arguments.
#[derive(Clone, Debug)]
pub struct UnitaryPath {
    basis: CMatrix,
    angles: Vec<f64>,
}

impl UnitaryPath {
    pub fn new(target: &CMatrix) -> Self {
        let n = target.nrows();
        let (q, t) = target.clone().schur().unpack();
        let angles = (0..n).map(|i| t[(i, i)].arg()).collect();
        UnitaryPath { basis: q, angles }
    }

    pub fn identity(n: usize) -> Self {
        UnitaryPath { basis: CMatrix::identity(n, n), angles: alloc::vec![0.0; n] }
    }

    pub fn dim(&self) -> usize {
        self.angles.len()
    }

    pub fn at(&self, s: f64) -> CMatrix {
        let d = CMatrix::from_diagonal(&CVector::from_iterator(
            self.angles.len(),
            self.angles.iter().map(|&a| Complex64::from_polar(1.0, a * s)),
        ));
        &self.basis * d * self.basis.adjoint()
    }
}

pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

pub fn vec_norm(v: &CVector) -> f64 {
    Float::sqrt(v.iter().map(|c| c.norm_sqr()).sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::Sampler;

    #[test]
    fn rank_of_rank_one_matrix() {
        let m = CMatrix::from_fn(3, 4, |i, j| Complex64::new((i + 1) as f64 * (j + 1) as f64, 0.0));
        assert_eq!(numerical_rank(&m), 1);
        assert_eq!(nullspace(&m).len(), 3);
        assert_eq!(numerical_rank(&CMatrix::zeros(2, 2)), 0);
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let mut s = Sampler::new(3);
        let a = CMatrix::from_fn(2, 5, |_, _| s.gaussian());
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 3);
        for v in ns {
            assert!((&a * v).iter().all(|x| x.norm() < 1e-12));
        }
    }

    #[test]
    fn procrustes_recovers_unitary() {
        let mut s = Sampler::new(11);
        let u = s.unitary(4);
        let src = CMatrix::from_fn(4, 6, |_, _| s.gaussian());
        let tgt = &u * &src;
        let fit = procrustes(&src, &tgt);
        assert!(max_abs(&(fit - u)) < 1e-10);
    }

    #[test]
    fn unitary_path_endpoints() {
        let mut s = Sampler::new(5);
        let u = s.unitary(3);
        let path = UnitaryPath::new(&u);
        assert!(max_abs(&(path.at(0.0) - CMatrix::identity(3, 3))) < 1e-12);
        assert!(max_abs(&(path.at(1.0) - &u)) < 1e-12);
        assert!(unitary_defect(&path.at(0.37)) < 1e-12);
    }

    #[test]
    fn unitary_path_through_permutation() {
        let mut p = CMatrix::zeros(3, 3);
        p[(1, 0)] = Complex64::new(1.0, 0.0);
        p[(2, 1)] = Complex64::new(1.0, 0.0);
        p[(0, 2)] = Complex64::new(1.0, 0.0);
        let path = UnitaryPath::new(&p);
        assert!(max_abs(&(path.at(1.0) - &p)) < 1e-12);
    }

    #[test]
    fn complement_completes_basis() {
        let v = CVector::from_vec(alloc::vec![
            Complex64::new(0.6, 0.0),
            Complex64::new(0.0, 0.8),
            Complex64::new(0.0, 0.0)
        ]);
        let c = orthonormal_complement(core::slice::from_ref(&v), 3);
        assert_eq!(c.len(), 2);
        let mut all = alloc::vec![v];
        all.extend(c);
        ensure_orthonormal(&all, 1e-12).unwrap();
    }
}
