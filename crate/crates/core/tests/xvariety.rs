use holomap_core::bounds::binomial;
use holomap_core::sample::{inner, norm, Sampler};
use holomap_core::xvariety::{determinant, fiber_at, graph_test, GraphTest};
use holomap_core::{corpus, Complex64, XMatrix};

/// Point `z` with `⟨z, w⟩ = 1`: `w/‖w‖²` plus a small orthogonal shift.
fn polar_point(s: &mut Sampler, w: &[Complex64], shift: f64) -> Vec<Complex64> {
    let r2 = norm(w).powi(2);
    let g = s.gaussian_vec(w.len());
    let proj = inner(&g, w) / r2;
    let perp: Vec<Complex64> = g.iter().zip(w).map(|(a, b)| a - proj * b).collect();
    let pn = norm(&perp).max(1e-12);
    w.iter().zip(&perp).map(|(a, p)| a / r2 + p * (shift / pn)).collect()
}

#[test]
fn reconstruction_identity_on_corpus() {
    let mut s = Sampler::new(41);
    for (id, m) in corpus::maps() {
        let x = XMatrix::build(&m);
        let n = m.domain_dim();
        let d = m.degree() as u64;
        assert_eq!(x.nrows() as u64, binomial(d + n as u64 - 1, n as u64 - 1), "{id}");
        assert_eq!(x.ncols(), m.target_dim());
        for _ in 0..10 {
            let w = s.ball_point_within(n, 0.95);
            if norm(&w) < 0.2 {
                continue;
            }
            let z = polar_point(&mut s, &w, 0.3);
            let pz = m.eval(&z).unwrap();
            for k in 0..m.target_dim() {
                assert!((x.contract(k, &z, &w) - pz[k]).norm() <= 1e-6, "{id} k={k}");
            }
        }
    }
}

#[test]
fn polarization_membership() {
    let mut s = Sampler::new(43);
    for (id, m) in corpus::maps() {
        let n = m.domain_dim();
        for _ in 0..10 {
            let dir = s.sphere_point(n);
            let w: Vec<Complex64> = dir.iter().map(|c| c * s.uniform_range(1.05, 1.4)).collect();
            let z = polar_point(&mut s, &w, 0.2);
            assert!(norm(&z) < 1.0 && norm(&w) > 1.0);
            let v = inner(&m.eval(&z).unwrap(), &m.eval(&w).unwrap());
            assert!((v - 1.0).norm() <= 1e-6, "{id}: {v}");
        }
    }
}

#[test]
fn fiber_dimension_is_unitarily_invariant() {
    let mut s = Sampler::new(44);
    let f = corpus::family("ex2.1.family").unwrap().at(0.6).unwrap();
    let uf = f.apply_linear(&s.unitary(5)).unwrap();
    let (xf, xu) = (XMatrix::build(&f), XMatrix::build(&uf));
    for w in [vec![Complex64::new(0.0, 0.0), Complex64::new(0.4, 0.3)], s.ball_point_within(2, 0.9)] {
        assert_eq!(fiber_at(&f, &xf, &w).unwrap().dimension, fiber_at(&uf, &xu, &w).unwrap().dimension);
    }
}

#[test]
fn group_invariant_map_has_point_fibers() {
    let m = corpus::ex4_1_map();
    let x = XMatrix::build(&m);
    let mut s = Sampler::new(45);
    for _ in 0..10 {
        let w = s.ball_point_within(2, 0.9);
        let fiber = fiber_at(&m, &x, &w).unwrap();
        assert_eq!(fiber.dimension, 0);
    }
}

#[test]
fn determinant_law_along_family() {
    let fam = corpus::family("ex4.2.family").unwrap();
    let mut s = Sampler::new(46);
    for _ in 0..20 {
        let c = s.uniform_range(0.1, 1.0);
        let m = fam.at(c).unwrap();
        let x = XMatrix::build_with_degree(&m, 4).unwrap();
        let w = s.ball_point_within(2, 0.9);
        let det = determinant(&x.conj_at(&w)).unwrap();
        let expect = w[0].powi(6) * c * c;
        assert!(((det - expect) / expect).norm() <= 1e-6, "det {det} vs {expect}");
    }
}

#[test]
fn exceptional_fiber_on_hyperplane() {
    let m = corpus::family("ex2.1.family").unwrap().at(0.5).unwrap();
    let x = XMatrix::build(&m);
    match graph_test(&m, &x, 50, 3).unwrap() {
        GraphTest::ExceptionalFibersFound(fibers) => {
            assert!(fibers.iter().all(|f| f.w[0].norm() < 1e-12));
        }
        other => panic!("{other:?}"),
    }
}
