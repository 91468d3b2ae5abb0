mod common;

use common::*;
use fthresh::{fractional_power, integral_closure, rees_valuations, MonomialIdeal, Rational};
use num_integer::Integer;
use proptest::prelude::*;

fn ideal_any_dim() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4).prop_flat_map(|d| monomial_ideal(d, 4, if d == 4 { 2 } else { 3 }))
}

fn certified_epsilon(i: &MonomialIdeal, t: &Rational) -> Rational {
    let l = rees_valuations(i)
        .unwrap()
        .iter()
        .map(|f| f.value().numer().clone())
        .fold(num_bigint::BigInt::from(1), |acc, c| acc.lcm(&c));
    Rational::from(t.denom() * l * 2).recip()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn power_scales_exponent(i in ideal_any_dim(), n in 1u32..=4, t in rational(4, 4)) {
        prop_assume!(i.dim() < 4 || n <= 2);
        let lhs = fractional_power(&i.power(n).unwrap(), &t, false).unwrap();
        let rhs = fractional_power(&i, &(&t * &Rational::from(n)), false).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn products_land_in_sum(i in ideal_any_dim(), s in rational(3, 3), t in rational(3, 3)) {
        let prod = fractional_power(&i, &s, false).unwrap().product(&fractional_power(&i, &t, false).unwrap()).unwrap();
        prop_assert!(fractional_power(&i, &(&s + &t), false).unwrap().contains_ideal(&prod).unwrap());
    }

    #[test]
    fn strict_power_is_slightly_larger_exponent(i in ideal_any_dim(), t in rational(4, 6)) {
        let eps = certified_epsilon(&i, &t);
        prop_assert_eq!(fractional_power(&i, &t, true).unwrap(), fractional_power(&i, &(&t + &eps), false).unwrap());
    }

    #[test]
    fn closure_idempotent_and_extensive(i in ideal_any_dim()) {
        let c = integral_closure(&i).unwrap();
        prop_assert!(c.contains_ideal(&i).unwrap());
        prop_assert_eq!(integral_closure(&c).unwrap(), c.clone());
        prop_assert_eq!(fractional_power(&i, &Rational::one(), false).unwrap(), c);
    }

    #[test]
    fn antitone_in_exponent(i in ideal_any_dim(), s in rational(3, 4), t in rational(3, 4)) {
        let (lo, hi) = if s <= t { (s, t) } else { (t, s) };
        let big = fractional_power(&i, &lo, false).unwrap();
        let strict = fractional_power(&i, &lo, true).unwrap();
        prop_assert!(big.contains_ideal(&strict).unwrap());
        prop_assert!(big.contains_ideal(&fractional_power(&i, &hi, false).unwrap()).unwrap());
    }
}

#[test]
fn zero_exponent_is_unit() {
    let i = MonomialIdeal::from_exponents([[2u32, 0], [0, 3]]).unwrap();
    assert!(fractional_power(&i, &Rational::zero(), false).unwrap().is_unit());
    assert!(!fractional_power(&i, &Rational::zero(), true).unwrap().is_unit());
    assert!(fractional_power(&i, &q(-1, 2), false).is_err());
}
