#![allow(dead_code)]

use fthresh::parse::IdealSpec;
use fthresh::{ExponentVector, Ideal, MonomialIdeal, Rational};
use proptest::prelude::*;

pub fn vars(d: usize) -> Vec<String> {
    ["x", "y", "z", "w"][..d].iter().map(|s| s.to_string()).collect()
}

pub fn ideal(p: u64, m: &MonomialIdeal) -> Ideal {
    IdealSpec::from_monomial(p, &vars(m.dim()), m).validate().unwrap()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn ev(e: &[u32]) -> ExponentVector {
    ExponentVector::new(e.to_vec())
}

/// Every lattice point of `[0, bound]^d`.
pub fn grid(d: usize, bound: u32) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut u = vec![0u32; d];
    loop {
        out.push(ev(&u));
        let mut k = 0;
        while k < d && u[k] == bound {
            u[k] = 0;
            k += 1;
        }
        if k == d {
            return out;
        }
        u[k] += 1;
    }
}

pub fn monomial_ideal(d: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, d), 1..=max_gens)
        .prop_filter("proper", |rows| rows.iter().any(|r| r.iter().any(|&x| x > 0)))
        .prop_map(|rows| {
            let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| r.iter().any(|&x| x > 0)).collect();
            MonomialIdeal::from_exponents(rows).unwrap()
        })
}

pub fn m_primary(d: usize, extra: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    (prop::collection::vec(1..=max_exp, d), prop::collection::vec(prop::collection::vec(0..=max_exp, d), 0..=extra))
        .prop_map(move |(pure, mixed)| {
            let mut rows: Vec<Vec<u32>> = (0..d)
                .map(|i| {
                    let mut r = vec![0; d];
                    r[i] = pure[i];
                    r
                })
                .collect();
            rows.extend(mixed.into_iter().filter(|r| r.iter().any(|&x| x > 0)));
            MonomialIdeal::from_exponents(rows).unwrap()
        })
}

pub fn rational(max_num: i64, max_den: i64) -> impl Strategy<Value = Rational> {
    (0..=max_num, 1..=max_den).prop_map(|(n, d)| Rational::new(n, d))
}
