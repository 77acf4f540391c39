use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use super::HomotopyFamily;
use crate::automorphism::BallAutomorphism;
use crate::ballmap::RationalBallMap;
use crate::blaschke::BlaschkeProduct;
use crate::construct::juxtapose;
use crate::corpus;
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::poly::Polynomial;

/// `t ↦ √(1−t²) f ⊕ t g` in target dimension `N + K`.
pub fn juxtaposition_family(f: &RationalBallMap, g: &RationalBallMap) -> Result<HomotopyFamily> {
    f.check_domain(g)?;
    let (a, b) = (f.clone(), g.clone());
    HomotopyFamily::new(
        "juxtaposition",
        f.target_dim() + g.target_dim(),
        f.clone(),
        g.clone(),
        move |t| juxtapose(&a, &b, t),
    )
}

/// Replaces `θ` by `(1−t)θ` and each zero `a_j` by `(1−t)a_j`, ending at
/// `z^m`.
pub fn blaschke_homotopy(b: &BlaschkeProduct) -> Result<HomotopyFamily> {
    if b.degree() == 0 {
        return Err(Error::InvalidArgument("a Blaschke product without factors is constant".into()));
    }
    let m = b.degree() as u32;
    let end = RationalBallMap::monomial(1, &[(&[m], 1.0)])?;
    let b2 = b.clone();
    HomotopyFamily::new("blaschke", 1, b.to_map(), end, move |t| {
        let s = 1.0 - t;
        let zeros = b2.zeros().iter().map(|a| a * s).collect();
        Ok(BlaschkeProduct::new(b2.theta() * s, zeros)?.to_map())
    })
}

/// `φ_t` with `φ_0 = φ` and `φ_1 = id`.
pub fn automorphism_contraction(phi: &BallAutomorphism) -> Result<HomotopyFamily> {
    let n = phi.dim();
    let path = phi.contraction();
    HomotopyFamily::new("automorphism", n, phi.to_map(), RationalBallMap::identity(n), move |t| {
        Ok(path.at(t).to_map())
    })
}

/// Contraction of an equidimensional proper map, accepted when it has
/// degree one (and is therefore an automorphism).
pub fn contraction_from_map(f: &RationalBallMap) -> Result<HomotopyFamily> {
    automorphism_contraction(&BallAutomorphism::from_map(f)?)
}

/// `W ∘ U_θ ∘ h` with `c = cos θ = t` and `s = sin θ = √(1−t²)`.
pub fn ex2_1_map(t: f64) -> Result<RationalBallMap> {
    let c = t;
    let s = Float::sqrt((1.0 - t * t).max(0.0));
    let r = |x: f64| Complex64::new(x, 0.0);
    let u = CMatrix::from_row_slice(3, 3, &[r(c), r(0.0), r(-s), r(0.0), r(1.0), r(0.0), r(s), r(0.0), r(c)]);
    corpus::ex2_1_h().apply_linear(&u)?.then(&corpus::whitney_w())
}

/// The ex2.1 family in target dimension 5. `H_0 = g` (degree 3) and
/// `H_1 = f` (degree 4).
pub fn ex2_1_family() -> HomotopyFamily {
    HomotopyFamily::new("ex2.1.family", 5, corpus::ex2_1_g(), corpus::ex2_1_f(), ex2_1_map)
        .expect("consistent dimensions")
}

fn monomial_family(
    name: &'static str,
    target: usize,
    left: RationalBallMap,
    right: RationalBallMap,
    comps: fn(f64) -> Vec<(&'static [u32], f64)>,
) -> HomotopyFamily {
    HomotopyFamily::new(name, target, left, right, move |t| {
        let terms = comps(t);
        let numerator = terms
            .iter()
            .map(|(e, c)| Polynomial::monomial(crate::MultiIndex::new(e.to_vec()), Complex64::new(*c, 0.0)))
            .collect();
        RationalBallMap::polynomial(2, numerator)
    })
    .expect("consistent dimensions")
}

fn root(x: f64) -> f64 {
    Float::sqrt(x.max(0.0))
}

/// `(√(1−t²) z, t z², t zw, w)`, from `f` to `g`.
pub fn faran_fg() -> HomotopyFamily {
    monomial_family("faran.fg.family", 4, corpus::faran_f(), corpus::faran_g(), |t| {
        alloc::vec![(&[1, 0][..], root(1.0 - t * t)), (&[2, 0], t), (&[1, 1], t), (&[0, 1], 1.0)]
    })
}

/// `(z², √(2−t²) zw, t w, √(1−t²) w²)`, from `h` to `g`.
pub fn faran_gh() -> HomotopyFamily {
    monomial_family("faran.gh.family", 4, corpus::faran_h(), corpus::faran_g(), |t| {
        alloc::vec![(&[2, 0][..], 1.0), (&[1, 1], root(2.0 - t * t)), (&[0, 1], t), (&[0, 2], root(1.0 - t * t))]
    })
}

/// `(t z², t w², √(1−t²) z³, √(1−t²) w³, √(3−t²) zw)`, from `φ` to `h`.
pub fn faran_hphi() -> HomotopyFamily {
    monomial_family("faran.hphi.family", 5, corpus::faran_phi(), corpus::faran_h(), |t| {
        let s = root(1.0 - t * t);
        alloc::vec![(&[2, 0][..], t), (&[0, 2], t), (&[3, 0], s), (&[0, 3], s), (&[1, 1], root(3.0 - t * t))]
    })
}

/// The three homotopies between the Faran representatives: f↔g and g↔h in
/// dimension 4, h↔φ in dimension 5.
pub fn faran_families() -> Vec<HomotopyFamily> {
    alloc::vec![faran_fg(), faran_gh(), faran_hphi()]
}

#[cfg(test)]
mod tests {
    use super::super::verify_family;
    use super::*;
    use crate::blaschke::winding_degree;
    use crate::Settings;

    #[test]
    fn ex2_1_endpoints_are_exact() {
        assert!(ex2_1_map(0.0).unwrap().max_coeff_diff(&corpus::ex2_1_g()) < 1e-15);
        assert!(ex2_1_map(1.0).unwrap().max_coeff_diff(&corpus::ex2_1_f()) < 1e-15);
    }

    #[test]
    fn faran_families_verify() {
        let settings = Settings::default();
        for fam in faran_families() {
            let report = verify_family(&fam, 21, &settings).unwrap();
            assert!(report.max_residual() < 1e-9, "{}", fam.name());
        }
        assert_eq!(faran_gh().at(1.0).unwrap().numerator()[2], Polynomial::var(2, 1));
    }

    #[test]
    fn blaschke_degree_is_constant() {
        let b = BlaschkeProduct::new(
            1.0,
            alloc::vec![Complex64::new(0.3, 0.0), Complex64::new(0.0, -0.5), Complex64::new(0.1, 0.2)],
        )
        .unwrap();
        let fam = blaschke_homotopy(&b).unwrap();
        for i in 0..=10 {
            assert_eq!(winding_degree(&fam.at(i as f64 / 10.0).unwrap()).unwrap().degree, 3);
        }
        assert_eq!(fam.at(1.0).unwrap(), RationalBallMap::monomial(1, &[(&[3], 1.0)]).unwrap());
        assert!(blaschke_homotopy(&BlaschkeProduct::new(1.0, Vec::new()).unwrap()).is_err());
    }

    #[test]
    fn automorphism_contraction_verifies() {
        let mut s = crate::sample::Sampler::new(8);
        let phi = BallAutomorphism::new(s.ball_point_within(2, 0.6), s.unitary(2)).unwrap();
        let fam = automorphism_contraction(&phi).unwrap();
        let report = verify_family(&fam, 11, &Settings::default()).unwrap();
        assert!(report.degrees().iter().all(|&d| d == 1));
        let from_map = contraction_from_map(&phi.to_map()).unwrap();
        assert!(from_map.at(1.0).unwrap().max_coeff_diff(&RationalBallMap::identity(2)) < 1e-12);
    }
}
