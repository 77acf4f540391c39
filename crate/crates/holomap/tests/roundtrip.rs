use holomap::MapDocument;
use holomap_core::{corpus, Complex64, MultiIndex, Polynomial, RationalBallMap};
use proptest::prelude::*;

fn coefficient() -> impl Strategy<Value = f64> {
    prop_oneof![any::<f64>().prop_filter("finite", |x| x.is_finite() && x.abs() < 1e6), -1.0..1.0f64]
}

fn polynomial(n: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..4, n), coefficient(), coefficient()), 0..6).prop_map(
        move |terms| {
            Polynomial::from_terms(n, terms.into_iter().map(|(e, re, im)| (MultiIndex::new(e), Complex64::new(re, im))))
                .unwrap()
        },
    )
}

fn map() -> impl Strategy<Value = RationalBallMap> {
    (1usize..4).prop_flat_map(|n| {
        (prop::collection::vec(polynomial(n), 1..4), polynomial(n), Just(n)).prop_map(|(num, q, n)| {
            let q = &(&q - &Polynomial::constant(n, q.constant_term())) + &Polynomial::one(n);
            RationalBallMap::new(num, q).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn documents_round_trip_bit_exactly(m in map()) {
        let doc = MapDocument::from_map(&m);
        let text = doc.to_json();
        let back = MapDocument::from_json(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.to_json(), text);
        let m2 = back.to_map().unwrap();
        for (a, b) in m.numerator().iter().chain([m.denominator()]).zip(m2.numerator().iter().chain([m2.denominator()])) {
            let ta: Vec<_> = a.stored_terms().map(|(k, c)| (k.clone(), c.re.to_bits(), c.im.to_bits())).collect();
            let tb: Vec<_> = b.stored_terms().map(|(k, c)| (k.clone(), c.re.to_bits(), c.im.to_bits())).collect();
            prop_assert_eq!(ta, tb);
        }
    }
}

#[test]
fn corpus_documents_round_trip() {
    for (id, m) in corpus::maps() {
        let text = MapDocument::from_map(&m).to_json();
        let back = MapDocument::from_json(&text).unwrap().to_map().unwrap();
        assert_eq!(back, m, "{id}");
    }
}
