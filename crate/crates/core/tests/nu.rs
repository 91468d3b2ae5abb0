mod common;

use common::*;
use fthresh::corpus::Corpus;
use fthresh::parse::IdealSpec;
use fthresh::thresholds::nu_monomial;
use fthresh::{
    integral_closure, monomial_threshold_exact, nu, threshold, ExponentVector, Ideal, MonomialIdeal, Nu,
    PolynomialFp, Rational,
};
use proptest::prelude::*;

/// Largest `n` with `a^n ⊄ J^[q]`, by expanding powers of `a`.
fn brute_nu(a: &MonomialIdeal, j: &MonomialIdeal, q: u32) -> u64 {
    let jq = j.frobenius_power(q, None).unwrap();
    let mut n = 1;
    while !jq.contains_ideal(&a.power(n).unwrap()).unwrap() {
        n += 1;
        assert!(n < 400, "no containment");
    }
    (n - 1) as u64
}

#[test]
fn monomial_nu_matches_brute_force() {
    let mut c = Corpus::new(31);
    let mut cases = 0;
    while cases < 150 {
        let d = 1 + cases % 3;
        let j = c.m_primary(d, 1, 3);
        let a = c.ideal(d, 3, 3);
        for (p, e) in [(2u64, 1u32), (2, 2), (3, 1)] {
            let q = p.pow(e);
            assert_eq!(
                nu_monomial(&a, &j, q).unwrap(),
                Nu::Finite(brute_nu(&a, &j, q as u32)),
                "{a:?} {j:?} q={q}"
            );
            assert_eq!(nu(&ideal(p, &a), &ideal(p, &j), e).unwrap(), nu_monomial(&a, &j, q).unwrap());
        }
        cases += 1;
    }
}

/// The same monomial ideal presented with a binomial generator, which
/// forces the Gröbner route.
fn disguised(p: u64, m: &MonomialIdeal) -> Ideal {
    let mut i = ideal(p, m);
    if i.generators.len() >= 2 {
        i.generators[0] = i.generators[0].try_add(&i.generators[1]).unwrap();
    }
    i
}

#[test]
fn general_route_matches_monomial_route() {
    let mut c = Corpus::new(32);
    let mut checked = 0;
    for k in 0..60 {
        let d = 1 + k % 2 + usize::from(k % 5 == 0);
        let j = c.m_primary(d, 1, 3);
        let a = c.ideal(d, 3, 3);
        for (p, e) in [(2u64, 1u32), (2, 2), (3, 1)] {
            let (da, dj) = (disguised(p, &a), disguised(p, &j));
            if da.is_monomial() && dj.is_monomial() {
                continue;
            }
            assert_eq!(nu(&da, &dj, e).unwrap(), nu_monomial(&a, &j, p.pow(e)).unwrap(), "{a:?} {j:?} p={p}");
            checked += 1;
        }
    }
    assert!(checked >= 100);
}

/// For principal `(f)` and monomial `J`, `f^n ∈ J^[q]` iff every term is.
fn principal_nu(f: &PolynomialFp, j: &MonomialIdeal, q: u32) -> u64 {
    let jq = j.frobenius_power(q, None).unwrap();
    let mut n = 1;
    loop {
        let g = f.pow(n);
        if g.support().all(|e| jq.contains_monomial(e).unwrap()) {
            return n - 1;
        }
        n += 1;
    }
}

#[test]
fn principal_nu_matches_expansion() {
    let mut c = Corpus::new(33);
    for k in 0..40 {
        let p = [2u64, 3, 5][k % 3];
        let d = 2;
        let terms: Vec<(ExponentVector, u64)> = (0..3)
            .map(|_| {
                let e = c.exponent(d, 2);
                (e, 1 + (k as u64) % (p - 1).max(1))
            })
            .filter(|(e, _)| !e.is_zero())
            .collect();
        let f = PolynomialFp::from_terms(p, d, terms);
        if f.is_zero() {
            continue;
        }
        let j = c.m_primary(d, 0, 3);
        let vs = vars(d);
        let fi = IdealSpec { p, vars: vs.clone(), generators: vec![f.render(&vs)] }.validate().unwrap();
        for e in 1..=2u32 {
            let q = p.pow(e);
            if q > 25 {
                continue;
            }
            assert_eq!(nu(&fi, &ideal(p, &j), e).unwrap(), Nu::Finite(principal_nu(&f, &j, q as u32)), "{f:?} {j:?} q={q}");
        }
    }
}

#[test]
fn sequence_brackets_exact_value() {
    let mut c = Corpus::new(34);
    for k in 0..120 {
        let d = 1 + k % 3;
        let j = c.m_primary(d, 2, 3);
        let a = c.ideal(d, 3, 3);
        let exact = monomial_threshold_exact(&a, &j).unwrap();
        for p in [2u64, 3] {
            let est = threshold(&ideal(p, &a), &ideal(p, &j), 3).unwrap();
            assert_eq!(est.exact.as_ref(), Some(&exact));
            let mut prev = Rational::zero();
            for s in &est.sequence {
                assert!(s.ratio >= prev && s.ratio < exact, "{a:?} {j:?}");
                prev = s.ratio.clone();
            }
            let q3 = Rational::from(p.pow(3));
            let gap = &exact - &est.sequence[2].ratio;
            assert!(gap * q3 <= Rational::from(d as u64), "{a:?} {j:?} p={p}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn nu_of_next_power_dominates(a in monomial_ideal(2, 3, 3), j in m_primary(2, 1, 3), p in prop::sample::select(vec![2u64, 3])) {
        let n1 = nu_monomial(&a, &j, p).unwrap().finite().unwrap();
        let n2 = nu_monomial(&a, &j, p * p).unwrap().finite().unwrap();
        prop_assert!(n2 >= p * n1);
    }

    #[test]
    fn nu_monotone(a in monomial_ideal(2, 3, 3), b in monomial_ideal(2, 2, 3), j in m_primary(2, 1, 3), jx in monomial_ideal(2, 2, 3)) {
        let q = 4;
        let ab = a.sum(&b).unwrap();
        let na = nu_monomial(&a, &j, q).unwrap();
        prop_assert!(na <= nu_monomial(&ab, &j, q).unwrap());
        let jb = j.sum(&jx).unwrap();
        prop_assume!(!jb.is_unit());
        prop_assert!(nu_monomial(&a, &jb, q).unwrap() <= na);
    }

    #[test]
    fn threshold_closure_invariant(a in monomial_ideal(3, 3, 3), j in m_primary(3, 1, 3)) {
        let c = monomial_threshold_exact(&a, &j).unwrap();
        prop_assert_eq!(monomial_threshold_exact(&integral_closure(&a).unwrap(), &j).unwrap(), c);
    }

    #[test]
    fn threshold_power_rule(a in monomial_ideal(2, 3, 3), j in m_primary(2, 1, 3), n in 1u32..=3) {
        let c = monomial_threshold_exact(&a, &j).unwrap();
        prop_assert_eq!(monomial_threshold_exact(&a.power(n).unwrap(), &j).unwrap(), &c / &Rational::from(n));
    }
}

#[test]
fn named_values() {
    let x2y3 = MonomialIdeal::from_exponents([[2u32, 0], [0, 3]]).unwrap();
    let m = MonomialIdeal::maximal(2);
    let seq: Vec<Nu> = (1..=3).map(|e| nu(&ideal(7, &x2y3), &ideal(7, &m), e).unwrap()).collect();
    assert_eq!(seq, [Nu::Finite(5), Nu::Finite(40), Nu::Finite(285)]);
    for (e, n) in [(1, 5u64), (2, 40), (3, 285)] {
        assert_eq!(brute_nu(&x2y3, &m, 7u32.pow(e)), n);
    }
    let xy = MonomialIdeal::from_exponents([[1u32, 1]]).unwrap();
    let sq = MonomialIdeal::from_exponents([[2u32, 0], [0, 2]]).unwrap();
    for (p, e) in [(2u64, 1u32), (2, 3), (3, 2), (5, 1)] {
        let q = p.pow(e);
        assert_eq!(nu(&ideal(p, &xy), &ideal(p, &sq), e).unwrap(), Nu::Finite(2 * q - 1));
    }
}

#[test]
fn radical_and_guards() {
    let x = MonomialIdeal::from_exponents([[1u32, 0]]).unwrap();
    let y = MonomialIdeal::from_exponents([[0u32, 1]]).unwrap();
    assert_eq!(nu(&ideal(2, &x), &ideal(2, &y), 1).unwrap(), Nu::Infinite);
    assert!(nu(&ideal(7, &x), &ideal(7, &y), 99).is_err());
    assert!(monomial_threshold_exact(&x, &y).is_err());
}
