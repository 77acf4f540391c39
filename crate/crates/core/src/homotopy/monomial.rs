use alloc::vec::Vec;

use super::HomotopyFamily;
use crate::automorphism::{AutomorphismContraction, BallAutomorphism};
use crate::ballmap::RationalBallMap;
use crate::construct::tensor_in_frame;
use crate::error::Result;
use crate::linalg::{self, CMatrix, UnitaryPath};
use crate::whitney::WhitneyTerm;

/// Path `t ↦ W(t)` of unitaries from `W` to the identity.
#[derive(Clone, Debug)]
struct ToIdentity {
    start: CMatrix,
    path: UnitaryPath,
}

impl ToIdentity {
    fn new(start: CMatrix) -> Self {
        let path = UnitaryPath::new(&start.adjoint());
        ToIdentity { start, path }
    }

    fn at(&self, t: f64) -> CMatrix {
        if t == 0.0 {
            return self.start.clone();
        }
        &self.start * self.path.at(t)
    }
}

#[derive(Clone, Debug)]
struct MovingStep {
    rank: usize,
    /// Rotates the subspace frame onto coordinate axes.
    frame: ToIdentity,
    /// Column permutation putting the chosen axes first.
    order: CMatrix,
    automorphism: AutomorphismContraction,
    /// Isometry path to identity padding, with its source dimension.
    injection: Option<(ToIdentity, usize)>,
}

impl MovingStep {
    fn apply(&self, f: &RationalBallMap, t: f64) -> Result<RationalBallMap> {
        let frame = self.frame.at(t) * &self.order;
        let g = tensor_in_frame(f, &frame, self.rank, &self.automorphism.at(t))?;
        match &self.injection {
            None => Ok(g),
            Some((path, k)) => g.apply_linear(&path.at(t).columns(0, *k).into_owned()),
        }
    }
}

/// Coordinate axes for the subspace at the monomial stage: the top-degree
/// component of `g` carrying most of the subspace's weight, then the axes
/// with largest weight. Returns positions in the order the basis vectors are
/// placed.
fn choose_axes(g: &RationalBallMap, basis: &[linalg::CVector]) -> Vec<usize> {
    let dim = g.target_dim();
    let weight = |b: usize| basis.iter().map(|a| a[b].norm_sqr()).sum::<f64>();
    let by_weight = |xs: &mut Vec<usize>| {
        xs.sort_by(|&x, &y| weight(y).total_cmp(&weight(x)).then(x.cmp(&y)));
    };
    let top = g.degree();
    let mut top_axes: Vec<usize> =
        (0..dim).filter(|&b| g.numerator()[b].degree() == Some(top)).collect();
    by_weight(&mut top_axes);
    let first = top_axes[0];
    let mut rest: Vec<usize> = (0..dim).filter(|&b| b != first).collect();
    by_weight(&mut rest);
    let mut axes = alloc::vec![first];
    axes.extend(rest.into_iter().take(basis.len() - 1));
    // Basis vectors claim the remaining axes greedily by overlap.
    let mut free = axes.clone();
    let mut positions = Vec::with_capacity(basis.len());
    for a in basis {
        let (i, _) = free
            .iter()
            .enumerate()
            .max_by(|(_, &x), (_, &y)| a[x].norm().total_cmp(&a[y].norm()).then(y.cmp(&x)))
            .expect("as many axes as basis vectors");
        positions.push(free.remove(i));
    }
    positions
}

fn permutation(dim: usize, positions: &[usize]) -> CMatrix {
    let mut order: Vec<usize> = positions.to_vec();
    order.extend((0..dim).filter(|b| !positions.contains(b)));
    let mut m = CMatrix::zeros(dim, dim);
    for (col, &row) in order.iter().enumerate() {
        m[(row, col)] = num_complex::Complex64::new(1.0, 0.0);
    }
    m
}

fn moving_steps(term: &WhitneyTerm) -> Result<(Vec<MovingStep>, RationalBallMap)> {
    let n = term.domain_dim();
    let mut g = RationalBallMap::identity(n);
    let mut steps = Vec::with_capacity(term.len());
    for step in term.history() {
        let dim = g.target_dim();
        let positions = choose_axes(&g, &step.subspace);
        let w = linalg::unitary_with_columns(&step.subspace, &positions, dim);
        let order = permutation(dim, &positions);
        let injection = step
            .injection
            .as_ref()
            .map(|j| {
                let cols: Vec<_> = (0..j.ncols()).map(|c| j.column(c).into_owned()).collect();
                let positions: Vec<usize> = (0..j.ncols()).collect();
                (ToIdentity::new(linalg::unitary_with_columns(&cols, &positions, j.nrows())), j.ncols())
            });
        let moving = MovingStep {
            rank: step.subspace.len(),
            frame: ToIdentity::new(w),
            order,
            automorphism: step.automorphism.contraction(),
            injection,
        };
        g = tensor_in_frame(&g, &moving.order, moving.rank, &BallAutomorphism::identity(n))?;
        if let Some(j) = &step.injection {
            g = g.padded(j.nrows());
        }
        steps.push(moving);
    }
    Ok((steps, g))
}

/// Monomial map of degree `k + 1` reached by [`homotopy_to_monomial`].
pub fn monomial_endpoint(term: &WhitneyTerm) -> Result<RationalBallMap> {
    moving_steps(term).map(|(_, g)| g)
}

/// Homotopy from a Whitney term `F_k` to a monomial map of degree `k + 1`
/// in the same target dimension.
///
/// All construction data move at once: `φ_0` and every `φ_k` contract to
/// the identity, every injection rotates to identity padding, and each
/// subspace `A_k` rotates onto coordinate axes that include a top-degree
/// component of the monomial stage `G_k`, so the tensor step raises the
/// degree.
pub fn homotopy_to_monomial(term: &WhitneyTerm) -> Result<HomotopyFamily> {
    let (steps, end) = moving_steps(term)?;
    let start = term.start().contraction();
    HomotopyFamily::new("whitney.monomial", term.map().target_dim(), term.map().clone(), end, move |t| {
        steps.iter().try_fold(start.at(t).to_map(), |f, step| step.apply(&f, t))
    })
}

#[cfg(test)]
mod tests {
    use super::super::verify_family;
    use super::*;
    use crate::whitney::{basis_vector, random_term, WhitneyStep};
    use crate::Settings;

    #[test]
    fn automorphism_goes_to_identity() {
        let mut s = crate::sample::Sampler::new(4);
        let phi = BallAutomorphism::new(s.ball_point_within(2, 0.5), s.unitary(2)).unwrap();
        let fam = homotopy_to_monomial(&WhitneyTerm::new(phi)).unwrap();
        assert_eq!(fam.right(), &RationalBallMap::identity(2));
    }

    #[test]
    fn monomial_term_gives_constant_family() {
        let term = WhitneyTerm::new(BallAutomorphism::identity(2))
            .extend(
                WhitneyStep::new(alloc::vec![basis_vector(2, 1)], BallAutomorphism::identity(2)),
                &Settings::default(),
            )
            .unwrap();
        let fam = homotopy_to_monomial(&term).unwrap();
        let report = verify_family(&fam, 11, &Settings::default()).unwrap();
        assert!(report.max_increment < 1e-12);
        assert_eq!(fam.right(), term.map());
    }

    #[test]
    fn random_term_reaches_monomial_of_full_degree() {
        let settings = Settings::default();
        let term = random_term(17, 2, 3, &settings).unwrap();
        let fam = homotopy_to_monomial(&term).unwrap();
        let end = fam.at(1.0).unwrap();
        assert!(end.is_monomial());
        assert_eq!(end.degree(), 4);
        verify_family(&fam, 11, &settings).unwrap();
    }
}
