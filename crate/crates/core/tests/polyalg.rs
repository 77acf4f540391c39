use holomap_core::hermitian::HermitianForm;
use holomap_core::sample::Sampler;
use holomap_core::{corpus, Complex64, MultiIndex, Polynomial, RationalBallMap, TAU};
use proptest::prelude::*;

fn poly_strategy(nvars: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (prop::collection::vec(0u32..4, nvars), -2.0f64..2.0, -2.0f64..2.0),
        0..7,
    )
    .prop_map(move |terms| {
        Polynomial::from_terms(
            nvars,
            terms.into_iter().map(|(e, re, im)| (MultiIndex::new(e), Complex64::new(re, im))),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn add_then_subtract_is_identity(a in poly_strategy(2), b in poly_strategy(2)) {
        let back = &(&a + &b) - &b;
        prop_assert!(back.max_abs_diff(&a) <= TAU);
    }

    #[test]
    fn product_degree_adds(a in poly_strategy(2), b in poly_strategy(2)) {
        let p = &a * &b;
        match (a.degree(), b.degree()) {
            (Some(da), Some(db)) => prop_assert!(p.degree().unwrap_or(0) <= da + db),
            _ => prop_assert!(p.is_zero()),
        }
    }

    #[test]
    fn squared_norm_form_is_positive_semidefinite(
        comps in prop::collection::vec(poly_strategy(2), 1..4)
    ) {
        let form = HermitianForm::squared_norm(2, &comps);
        prop_assert!(form.hermitian_defect() <= TAU);
        let (_, m) = form.to_matrix();
        if m.nrows() > 0 {
            let eig = m.symmetric_eigen();
            for &l in eig.eigenvalues.iter() {
                prop_assert!(l >= -1e3 * TAU, "eigenvalue {}", l);
            }
        }
    }
}

#[test]
fn square_of_two_term_denominator() {
    // (1 - z/2)^2 = 1 - z + z^2/4 by hand.
    let q = &Polynomial::one(1) - &Polynomial::var(1, 0).scale_real(0.5);
    let sq = &q * &q;
    assert_eq!(sq.degree(), Some(2));
    assert!((sq.coeff(&MultiIndex::new(vec![1])) - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
    assert!((sq.coeff(&MultiIndex::new(vec![2])) - Complex64::new(0.25, 0.0)).norm() < 1e-15);
}

#[test]
fn difference_of_squares() {
    let (z1, z2) = (Polynomial::var(2, 0), Polynomial::var(2, 1));
    let lhs = &(&z1 + &z2) * &(&z1 - &z2);
    let rhs = &(&z1 * &z1) - &(&z2 * &z2);
    assert!(lhs.max_abs_diff(&rhs) < 1e-15);
}

#[test]
fn squared_norm_of_h_is_diagonal_ones() {
    let h = corpus::ex2_1_h();
    let form = h.squared_norm_form();
    for alpha in [[1, 0], [1, 1], [0, 2]] {
        let a = MultiIndex::new(alpha.to_vec());
        assert!((form.entry(&a, &a) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }
    assert_eq!(form.len(), 3);
}

/// Zero remainder must mean tiny values on the sphere; a nonzero remainder
/// must show up at some sampled point.
fn sampling_oracle(form: &HermitianForm, seed: u64) {
    let reduced = form.reduce_mod_sphere();
    let mut s = Sampler::new(seed);
    let worst = (0..200)
        .map(|_| form.evaluate(&s.sphere_point(form.nvars())).norm())
        .fold(0.0, f64::max);
    if reduced.is_zero() {
        assert!(worst <= 1e3 * TAU, "zero remainder but |F| = {worst}");
    } else {
        assert!(worst > TAU, "nonzero remainder but sampled |F| <= {worst}");
    }
}

#[test]
fn reduction_agrees_with_sphere_sampling() {
    for (i, (_, m)) in corpus::maps().into_iter().enumerate() {
        sampling_oracle(&m.properness_form(), i as u64);
        sampling_oracle(&m.scaled(0.5).properness_form(), i as u64);
    }
    let mut s = Sampler::new(99);
    for seed in 0..20 {
        let comps: Vec<Polynomial> = (0..3)
            .map(|_| {
                Polynomial::from_terms(
                    2,
                    (0..3).map(|_| {
                        let e = vec![(s.uniform() * 3.0) as u32, (s.uniform() * 3.0) as u32];
                        (MultiIndex::new(e), s.gaussian())
                    }),
                )
                .unwrap()
            })
            .collect();
        let m = RationalBallMap::polynomial(2, comps).unwrap();
        sampling_oracle(&m.properness_form(), seed);
    }
}
