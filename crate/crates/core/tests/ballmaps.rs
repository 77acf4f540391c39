use holomap_core::bounds::{coefficient_bound, degree_bound};
use holomap_core::invariants::{embedding_dimension, norm_equivalent, NormEquivalence};
use holomap_core::properness::worst_sphere_point;
use holomap_core::sample::Sampler;
use holomap_core::{
    certify_proper, corpus, homotopy, BallAutomorphism, Complex64, RationalBallMap, Settings, Verdict,
};

#[test]
fn certifier_agrees_with_sampling_oracle() {
    let settings = Settings::default();
    for (id, m) in corpus::maps() {
        let cert = certify_proper(&m, &settings).unwrap();
        let (_, dev) = worst_sphere_point(&m, 7, 500).unwrap();
        assert_eq!(cert.verdict == Verdict::Proper, dev <= 1e-6, "{id}: {dev}");
        assert!(cert.residual_norm <= 1e-9, "{id}");
    }
    let shrunk = corpus::faran_phi().scaled(0.9);
    let (_, dev) = worst_sphere_point(&shrunk, 7, 500).unwrap();
    assert!(dev > 1e-6);
    assert_eq!(certify_proper(&shrunk, &settings).unwrap().verdict, Verdict::NotProper);
}

#[test]
fn degrees_and_embedding_dimensions() {
    assert_eq!(corpus::ex2_1_f().degree(), 4);
    assert_eq!(corpus::ex2_1_g().degree(), 3);
    assert_eq!(RationalBallMap::identity(3).degree(), 1);
    assert_eq!(embedding_dimension(&corpus::ex2_1_f()), 5);
    assert_eq!(embedding_dimension(&corpus::ex2_1_g()), 5);
    assert_eq!(embedding_dimension(&RationalBallMap::identity(1).padded(2)), 1);
    assert_eq!(embedding_dimension(&RationalBallMap::identity(3)), 3);
}

#[test]
fn composition_stays_proper() {
    let settings = Settings::default();
    for i in 0..11 {
        let t = i as f64 / 10.0;
        let m = homotopy::ex2_1_map(t).unwrap();
        assert!(certify_proper(&m, &settings).unwrap().is_proper(), "t = {t}");
    }
}

#[test]
fn embedding_dimension_is_unitarily_invariant() {
    let mut s = Sampler::new(21);
    for (id, m) in corpus::maps() {
        let u = s.unitary(m.target_dim());
        let um = m.apply_linear(&u).unwrap();
        assert_eq!(embedding_dimension(&m), embedding_dimension(&um), "{id}");
    }
}

#[test]
fn norm_equivalence_is_an_equivalence_relation() {
    let settings = Settings::default();
    let maps = corpus::maps();
    let eq = |a: &RationalBallMap, b: &RationalBallMap| {
        a.domain_dim() == b.domain_dim() && norm_equivalent(a, b, &settings).unwrap().is_equivalent()
    };
    for (_, a) in &maps {
        assert!(eq(a, a));
        for (_, b) in &maps {
            assert_eq!(eq(a, b), eq(b, a));
            for (_, c) in &maps {
                if eq(a, b) && eq(b, c) {
                    assert!(eq(a, c));
                }
            }
        }
    }
    // f ~ f ⊕ 0 and f ~ U f.
    let f = corpus::ex2_1_f();
    assert!(eq(&f, &f.padded(7)));
    let u = Sampler::new(5).unitary(5);
    match norm_equivalent(&f, &f.apply_linear(&u).unwrap(), &settings).unwrap() {
        NormEquivalence::Equivalent { residual, .. } => assert!(residual <= 1e-6),
        other => panic!("{other:?}"),
    }
}

#[test]
fn moving_the_origin_breaks_norm_equivalence() {
    let phi = BallAutomorphism::moving(vec![Complex64::new(0.3, 0.0), Complex64::new(0.0, -0.2)]).unwrap();
    let r = norm_equivalent(&RationalBallMap::identity(2), &phi.to_map(), &Settings::default()).unwrap();
    assert!(!r.is_equivalent());
}

#[test]
fn corpus_respects_degree_bound() {
    for (id, m) in corpus::maps() {
        let n = m.domain_dim() as u64;
        if n < 2 {
            continue;
        }
        let bound = degree_bound(n, embedding_dimension(&m) as u64).unwrap();
        assert!(num_rational::Ratio::from_integer(m.degree() as u64) <= bound, "{id}");
    }
}

#[test]
fn corpus_coefficients_within_bound() {
    for (id, m) in corpus::maps() {
        let b = coefficient_bound(m.domain_dim() as u32, m.degree()).unwrap();
        assert!(m.max_abs_coeff() <= b.coefficient, "{id}");
    }
    let b = coefficient_bound(1, 1).unwrap();
    assert_eq!((b.one_variable, b.sup_on_ball), (1.0, 2.0));
    assert_eq!(coefficient_bound(1, 4).unwrap().one_variable, 6.0);
}
