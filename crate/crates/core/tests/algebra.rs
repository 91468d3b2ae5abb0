mod common;

use common::*;
use fthresh::parse::parse_polynomial;
use fthresh::{parse_ideal_spec, ExponentVector, MonomialIdeal, PolynomialFp};
use proptest::prelude::*;

const P: [u64; 3] = [2, 3, 7];

fn poly(p: u64, d: usize) -> impl Strategy<Value = PolynomialFp> {
    prop::collection::vec((prop::collection::vec(0u32..4, d), 0..p), 0..6).prop_map(move |terms| {
        PolynomialFp::from_terms(p, d, terms.into_iter().map(|(e, c)| (ExponentVector::new(e), c)))
    })
}

fn triple() -> impl Strategy<Value = (PolynomialFp, PolynomialFp, PolynomialFp)> {
    (prop::sample::select(P.to_vec()), 1usize..=3).prop_flat_map(|(p, d)| (poly(p, d), poly(p, d), poly(p, d)))
}

proptest! {
    #[test]
    fn ring_axioms((f, g, h) in triple()) {
        let add = |a: &PolynomialFp, b: &PolynomialFp| a.try_add(b).unwrap();
        let mul = |a: &PolynomialFp, b: &PolynomialFp| a.try_mul(b).unwrap();
        prop_assert_eq!(add(&f, &g), add(&g, &f));
        prop_assert_eq!(mul(&f, &g), mul(&g, &f));
        prop_assert_eq!(add(&add(&f, &g), &h), add(&f, &add(&g, &h)));
        prop_assert_eq!(mul(&mul(&f, &g), &h), mul(&f, &mul(&g, &h)));
        prop_assert_eq!(mul(&f, &add(&g, &h)), add(&mul(&f, &g), &mul(&f, &h)));
        prop_assert!(add(&f, &f.neg()).is_zero());
        prop_assert_eq!(f.try_sub(&g).unwrap(), add(&f, &g.neg()));
        prop_assert_eq!(mul(&f, &PolynomialFp::one(f.characteristic(), f.dim())), f.clone());
    }

    #[test]
    fn frobenius_is_pth_power((f, _, _) in triple(), e in 1u32..=2) {
        let q = f.characteristic().pow(e);
        prop_assert_eq!(f.frobenius(q as u32), f.pow(q));
    }

    #[test]
    fn render_parse_round_trip((f, _, _) in triple()) {
        let vs = vars(f.dim());
        let text = f.render(&vs);
        prop_assert_eq!(parse_polynomial(&text, f.characteristic(), &vs).unwrap(), f);
    }

    #[test]
    fn power_laws(i in monomial_ideal(3, 4, 3), a in 1u32..=3, b in 1u32..=3) {
        let pa = i.power(a).unwrap();
        let pb = i.power(b).unwrap();
        prop_assert_eq!(pa.product(&pb).unwrap(), i.power(a + b).unwrap());
        prop_assert_eq!(pa.power(b).unwrap(), i.power(a * b).unwrap());
        prop_assert!(pa.contains_ideal(&i.power(a + 1).unwrap()).unwrap());
    }

    #[test]
    fn bracket_power_laws(i in monomial_ideal(3, 4, 3), e in 1u32..=2) {
        let q = 2u32.pow(e);
        let b = i.frobenius_power(q, Some(2)).unwrap();
        prop_assert!(i.power(q).unwrap().contains_ideal(&b).unwrap());
        prop_assert_eq!(b.frobenius_power(2, Some(2)).unwrap(), i.frobenius_power(2 * q, Some(2)).unwrap());
        for g in i.generators() {
            prop_assert!(b.contains_monomial(&g.scale(q)).unwrap());
        }
    }

    #[test]
    fn monomial_spec_round_trip(i in monomial_ideal(3, 5, 4)) {
        let spec = fthresh::parse::IdealSpec::from_monomial(5, &vars(3), &i);
        let text = serde_json::to_string(&spec).unwrap();
        prop_assert_eq!(parse_ideal_spec(&text).unwrap().to_monomial().unwrap(), i);
    }
}

#[test]
fn frobenius_power_requires_prime_power() {
    let m = MonomialIdeal::maximal(2);
    assert!(m.frobenius_power(6, Some(2)).is_err());
    assert!(m.frobenius_power(9, Some(3)).is_ok());
}
