//! The homogenization matrix `C(w̄)` and fibers of the X-variety.
//!
//! Each numerator component `p_k` of degree at most `d` is homogenized as
//! `p_k(z) ⟨z, w⟩^{d − |β|}` termwise. Reading off the coefficient of each
//! degree-`d` monomial `z^α` gives entry `(α, k)`, a polynomial in `w̄`.
//! Polynomials stored here use the variables to stand for `w̄`.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::ballmap::RationalBallMap;
use crate::bounds::binomial;
use crate::error::{Error, Result};
use crate::homotopy::{grid, HomotopyFamily};
use crate::linalg::{self, CMatrix, CVector};
use crate::poly::{MultiIndex, Polynomial};
use crate::sample::{norm, Sampler};

#[derive(Clone, Debug, PartialEq)]
pub struct XMatrix {
    n: usize,
    d: u32,
    rows: Vec<MultiIndex>,
    /// `entries[row][col]`.
    entries: Vec<Vec<Polynomial>>,
    /// The map had a nontrivial denominator; only the numerator was used.
    numerator_only: bool,
}

fn multinomial(gamma: &MultiIndex) -> f64 {
    let mut remaining = gamma.degree() as u64;
    let mut acc = 1.0;
    for &g in gamma.exponents() {
        acc *= binomial(remaining, g as u64) as f64;
        remaining -= g as u64;
    }
    acc
}

impl XMatrix {
    /// Homogenizes to the numerator degree of `map`.
    pub fn build(map: &RationalBallMap) -> XMatrix {
        Self::build_with_degree(map, map.degree()).expect("degree is the numerator degree")
    }

    /// Homogenizes to degree `d`, which must be at least the numerator
    /// degree.
    pub fn build_with_degree(map: &RationalBallMap, d: u32) -> Result<XMatrix> {
        if map.degree() > d {
            return Err(Error::InvalidArgument(alloc::format!(
                "map has degree {} above the homogenization degree {d}",
                map.degree()
            )));
        }
        let n = map.domain_dim();
        let rows = MultiIndex::all_of_degree(n, d);
        let big_n = map.target_dim();
        let mut entries = alloc::vec![alloc::vec![Polynomial::zero(n); big_n]; rows.len()];
        let powers: Vec<Vec<MultiIndex>> = (0..=d).map(|e| MultiIndex::all_of_degree(n, e)).collect();
        for (k, p) in map.numerator().iter().enumerate() {
            for (beta, &c) in p.terms() {
                let e = d - beta.degree();
                for gamma in &powers[e as usize] {
                    let alpha = beta.plus(gamma);
                    let row = rows.iter().position(|r| *r == alpha).expect("row of degree d");
                    let term = Polynomial::monomial(gamma.clone(), c * multinomial(gamma));
                    entries[row][k] = &entries[row][k] + &term;
                }
            }
        }
        Ok(XMatrix { n, d, rows, entries, numerator_only: !map.is_polynomial() })
    }

    pub fn domain_dim(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    /// Row monomials `z^α`, `|α| = d`, in descending lexicographic order.
    pub fn rows(&self) -> &[MultiIndex] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row][col]
    }

    /// True when the source map had a denominator other than 1; the matrix
    /// is then built from the numerator alone and is not validated.
    pub fn numerator_only(&self) -> bool {
        self.numerator_only
    }

    /// `C(w̄)` with the entries evaluated at the given `w̄`.
    pub fn at_conj(&self, w_bar: &[Complex64]) -> CMatrix {
        CMatrix::from_fn(self.nrows(), self.ncols(), |i, k| self.entries[i][k].eval(w_bar))
    }

    /// `C̄(w)`, the entrywise conjugate of `C(w̄)`.
    pub fn conj_at(&self, w: &[Complex64]) -> CMatrix {
        let w_bar: Vec<Complex64> = w.iter().map(|x| x.conj()).collect();
        self.at_conj(&w_bar).map(|c| c.conj())
    }

    /// `Σ_α C(w̄)_{α,k} z^α`, which equals `p_k(z)` whenever `⟨z, w⟩ = 1`.
    pub fn contract(&self, k: usize, z: &[Complex64], w: &[Complex64]) -> Complex64 {
        let w_bar: Vec<Complex64> = w.iter().map(|x| x.conj()).collect();
        self.rows.iter().zip(&self.entries).map(|(alpha, row)| row[k].eval(&w_bar) * alpha.eval(z)).sum()
    }

    /// Recovers `p_k` from column `k`: the coefficient of `z^{β + e·e₁} w̄₁^e`
    /// in the homogenized component is the coefficient of `z^β` in `p_k`.
    pub fn dehomogenize(&self, k: usize) -> Polynomial {
        let mut terms = Vec::new();
        for (alpha, row) in self.rows.iter().zip(&self.entries) {
            for (gamma, &c) in row[k].terms() {
                let e = gamma.degree();
                if gamma.exponents()[0] != e {
                    continue;
                }
                if let Some(beta) = alpha.checked_minus(gamma) {
                    terms.push((beta, c));
                }
            }
        }
        Polynomial::from_terms(self.n, terms).expect("exponents have the domain length")
    }

    /// Largest coefficient difference between two matrices of equal shape.
    pub fn max_entry_diff(&self, other: &XMatrix) -> f64 {
        let mut m = 0.0f64;
        for (ra, rb) in self.entries.iter().zip(&other.entries) {
            for (a, b) in ra.iter().zip(rb) {
                m = m.max(a.max_abs_diff(b));
            }
        }
        m
    }
}

/// The fiber `f(w) + null(C̄(w))` of the X-variety over `w`.
#[derive(Clone, Debug, PartialEq)]
pub struct FiberReport {
    pub w: Vec<Complex64>,
    pub base: Vec<Complex64>,
    pub nullspace: Vec<CVector>,
    pub dimension: usize,
    /// `w = 0`, where the fiber is declared to be `{f(0)}`.
    pub at_origin: bool,
}

impl FiberReport {
    /// `max |⟨f(z), ζ⟩ − 1|` over the fiber points `ζ = f(w)` and
    /// `ζ = f(w) + v` for each null vector `v`, at a point `z` with
    /// `⟨z, w⟩ = 1`.
    pub fn polarization_defect(&self, map: &RationalBallMap, z: &[Complex64]) -> Option<f64> {
        let fz = map.eval(z)?;
        let check = |zeta: &[Complex64]| (crate::sample::inner(&fz, zeta) - 1.0).norm();
        let mut worst = check(&self.base);
        for v in &self.nullspace {
            let zeta: Vec<Complex64> = self.base.iter().zip(v.iter()).map(|(a, b)| a + b).collect();
            worst = worst.max(check(&zeta));
        }
        Some(worst)
    }
}

pub fn fiber_at(map: &RationalBallMap, x: &XMatrix, w: &[Complex64]) -> Result<FiberReport> {
    if w.len() != map.domain_dim() {
        return Err(Error::DimensionMismatch { expected: map.domain_dim(), found: w.len() });
    }
    let base = map.eval(w).ok_or(Error::EvaluationAtPole)?;
    if norm(w) == 0.0 {
        return Ok(FiberReport { w: w.to_vec(), base, nullspace: Vec::new(), dimension: 0, at_origin: true });
    }
    let nullspace = linalg::nullspace(&x.conj_at(w));
    let dimension = nullspace.len();
    Ok(FiberReport { w: w.to_vec(), base, nullspace, dimension, at_origin: false })
}

#[derive(Clone, Debug, PartialEq)]
pub enum GraphTest {
    /// Every sampled fiber was the single point `f(w)`.
    GraphEqualsX { checked: usize },
    ExceptionalFibersFound(Vec<FiberReport>),
}

impl GraphTest {
    pub fn graph_equals_x(&self) -> bool {
        matches!(self, GraphTest::GraphEqualsX { .. })
    }
}

/// Points used by [`graph_test`]: `samples` random points of the ball
/// followed by one point on each coordinate hyperplane `w_j = 0`.
pub fn graph_test_points(n: usize, samples: usize, seed: u64) -> Vec<Vec<Complex64>> {
    let mut s = Sampler::new(seed);
    let mut points: Vec<Vec<Complex64>> = (0..samples)
        .map(|_| loop {
            let w = s.ball_point_within(n, 0.9);
            if norm(&w) > 1e-3 {
                break w;
            }
        })
        .collect();
    if n > 1 {
        for j in 0..n {
            let mut w = s.ball_point_within(n, 0.9);
            w[j] = Complex64::new(0.0, 0.0);
            points.push(w);
        }
    }
    points
}

/// Looks for positive-dimensional fibers at random and structured points.
pub fn graph_test(map: &RationalBallMap, x: &XMatrix, samples: usize, seed: u64) -> Result<GraphTest> {
    let points = graph_test_points(map.domain_dim(), samples, seed);
    let mut exceptional = Vec::new();
    let mut checked = 0;
    for w in &points {
        let fiber = match fiber_at(map, x, w) {
            Ok(f) => f,
            Err(Error::EvaluationAtPole) => continue,
            Err(e) => return Err(e),
        };
        checked += 1;
        if fiber.dimension > 0 {
            exceptional.push(fiber);
        }
    }
    Ok(if exceptional.is_empty() {
        GraphTest::GraphEqualsX { checked }
    } else {
        GraphTest::ExceptionalFibersFound(exceptional)
    })
}

/// Matrices along a family, all homogenized to the largest degree found on
/// the grid so that the shape stays `K(n, d) × M`.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyXReport {
    pub degree: u32,
    pub ts: Vec<f64>,
    pub matrices: Vec<XMatrix>,
    /// Generic point at which the ranks are measured.
    pub w: Vec<Complex64>,
    pub ranks: Vec<usize>,
    /// Grid values where the rank is below its maximum over the grid.
    pub rank_drops: Vec<f64>,
    /// Largest entry change between adjacent grid points.
    pub max_increment: f64,
}

pub fn xmatrix_along_family(family: &HomotopyFamily, grid_size: usize, seed: u64) -> Result<FamilyXReport> {
    let ts = grid(grid_size)?;
    let maps = ts.iter().map(|&t| family.at(t)).collect::<Result<Vec<_>>>()?;
    let degree = maps.iter().map(RationalBallMap::degree).max().unwrap_or(0);
    let matrices = maps.iter().map(|m| XMatrix::build_with_degree(m, degree)).collect::<Result<Vec<_>>>()?;
    let w = Sampler::new(seed).ball_point_within(family.domain_dim(), 0.9);
    let ranks: Vec<usize> = matrices.iter().map(|x| linalg::numerical_rank(&x.conj_at(&w))).collect();
    let top = ranks.iter().copied().max().unwrap_or(0);
    let rank_drops = ts.iter().zip(&ranks).filter(|(_, &r)| r < top).map(|(&t, _)| t).collect();
    let max_increment = matrices.windows(2).map(|p| p[0].max_entry_diff(&p[1])).fold(0.0, f64::max);
    Ok(FamilyXReport { degree, ts, matrices, w, ranks, rank_drops, max_increment })
}

/// Determinant of a square matrix; `None` otherwise.
pub fn determinant(m: &CMatrix) -> Option<Complex64> {
    m.is_square().then(|| m.clone().determinant())
}
