//! Sparse multivariate polynomials over a prime field `F_p`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::ExponentVector;

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A polynomial in `F_p[x_1, …, x_d]`.
///
/// Terms are kept in a map ordered by grevlex, with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolynomialFp {
    p: u64,
    dim: usize,
    terms: BTreeMap<ExponentVector, u64>,
}

impl PolynomialFp {
    pub fn zero(p: u64, dim: usize) -> Self {
        PolynomialFp { p, dim, terms: BTreeMap::new() }
    }

    pub fn one(p: u64, dim: usize) -> Self {
        Self::monomial(p, ExponentVector::zero(dim), 1)
    }

    pub fn constant(p: u64, dim: usize, c: u64) -> Self {
        Self::monomial(p, ExponentVector::zero(dim), c)
    }

    pub fn variable(p: u64, dim: usize, i: usize) -> Self {
        Self::monomial(p, ExponentVector::unit(dim, i), 1)
    }

    pub fn monomial(p: u64, exp: ExponentVector, coeff: u64) -> Self {
        let dim = exp.dim();
        let mut terms = BTreeMap::new();
        if coeff % p != 0 {
            terms.insert(exp, coeff % p);
        }
        PolynomialFp { p, dim, terms }
    }

    /// Build from `(exponent, coefficient)` pairs; coefficients are summed
    /// and reduced mod `p`.
    pub fn from_terms(
        p: u64,
        dim: usize,
        terms: impl IntoIterator<Item = (ExponentVector, u64)>,
    ) -> Self {
        let mut f = PolynomialFp::zero(p, dim);
        for (e, c) in terms {
            debug_assert_eq!(e.dim(), dim);
            f.add_term(e, c % p);
        }
        f
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, u64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn coefficient(&self, e: &ExponentVector) -> u64 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    /// Leading exponent and coefficient under grevlex.
    pub fn leading_term(&self) -> Option<(&ExponentVector, u64)> {
        self.terms.iter().next_back().map(|(e, &c)| (e, c))
    }

    pub fn leading_exponent(&self) -> Option<&ExponentVector> {
        self.terms.keys().next_back()
    }

    /// A single-term polynomial; such generators span monomial ideals.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub(crate) fn add_term(&mut self, e: ExponentVector, c: u64) {
        if c == 0 {
            return;
        }
        let p = self.p;
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = (*o.get() + c) % p;
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += coeff · x^shift · g`, in place.
    pub(crate) fn add_scaled_shift(&mut self, g: &Self, shift: &ExponentVector, coeff: u64) {
        let coeff = coeff % self.p;
        if coeff == 0 {
            return;
        }
        for (e, &c) in &g.terms {
            self.add_term(e + shift, mul_mod(c, coeff, self.p));
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(ExponentVector, u64)> {
        self.terms.pop_last()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::CharacteristicMismatch(self.p, other.p));
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let p = self.p;
        PolynomialFp {
            p,
            dim: self.dim,
            terms: self.terms.iter().map(|(e, &c)| (e.clone(), p - c)).collect(),
        }
    }

    pub fn scale(&self, k: u64) -> Self {
        let k = k % self.p;
        if k == 0 {
            return PolynomialFp::zero(self.p, self.dim);
        }
        PolynomialFp {
            p: self.p,
            dim: self.dim,
            terms: self.terms.iter().map(|(e, &c)| (e.clone(), mul_mod(c, k, self.p))).collect(),
        }
    }

    /// Multiply by the monomial `coeff · x^shift`.
    pub fn mul_term(&self, shift: &ExponentVector, coeff: u64) -> Self {
        let coeff = coeff % self.p;
        if coeff == 0 {
            return PolynomialFp::zero(self.p, self.dim);
        }
        PolynomialFp {
            p: self.p,
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| (e + shift, mul_mod(c, coeff, self.p)))
                .collect(),
        }
    }

    /// Scale so the leading coefficient is 1. The zero polynomial is
    /// returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) if c != 1 => self.scale(inv_mod(c, self.p)),
            _ => self.clone(),
        }
    }

    /// Product with coefficients reduced mod `p`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = PolynomialFp::zero(self.p, self.dim);
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                out.add_term(e1 + e2, mul_mod(c1, c2, self.p));
            }
        }
        out
    }

    /// `self^n` by square-and-multiply; `f^0 = 1`.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = PolynomialFp::one(self.p, self.dim);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// `f^q` for `q` a power of `p`, computed termwise: in characteristic
    /// `p` the Frobenius is additive and fixes `F_p`.
    pub fn frobenius(&self, q: u32) -> Self {
        PolynomialFp {
            p: self.p,
            dim: self.dim,
            terms: self.terms.iter().map(|(e, &c)| (e.scale(q), c)).collect(),
        }
    }

    /// Render with variable names in decreasing grevlex order, e.g.
    /// `x^2 + 2*x*y + y^2`.
    pub fn render(&self, vars: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, &c)| {
                if e.is_zero() {
                    c.to_string()
                } else if c == 1 {
                    e.render(vars)
                } else {
                    format!("{c}*{}", e.render(vars))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for PolynomialFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = (1..=self.dim).map(|i| format!("x{i}")).collect();
        write!(f, "{} (mod {})", self.render(&vars), self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy_sum(p: u64) -> PolynomialFp {
        PolynomialFp::variable(p, 2, 0).try_add(&PolynomialFp::variable(p, 2, 1)).unwrap()
    }

    #[test]
    fn square_in_char_two_is_frobenius() {
        let f = xy_sum(2);
        let sq = f.try_mul(&f).unwrap();
        let expected = PolynomialFp::from_terms(2, 2, [([2, 0].into(), 1), ([0, 2].into(), 1)]);
        assert_eq!(sq, expected);
        assert_eq!(f.pow(2), expected);
    }

    #[test]
    fn square_in_char_three_is_binomial() {
        let f = xy_sum(3);
        let sq = f.try_mul(&f).unwrap();
        let expected = PolynomialFp::from_terms(
            3,
            2,
            [([2, 0].into(), 1), ([1, 1].into(), 2), ([0, 2].into(), 1)],
        );
        assert_eq!(sq, expected);
    }

    #[test]
    fn cube_in_char_two() {
        // (x+y)^3 = x^3 + 3x^2y + 3xy^2 + y^3 ≡ x^3 + x^2y + xy^2 + y^3 mod 2
        let expected = PolynomialFp::from_terms(
            2,
            2,
            [([3, 0].into(), 1), ([2, 1].into(), 1), ([1, 2].into(), 1), ([0, 3].into(), 1)],
        );
        assert_eq!(xy_sum(2).pow(3), expected);
    }

    #[test]
    fn identities() {
        let f = xy_sum(5);
        assert_eq!(f.try_mul(&PolynomialFp::one(5, 2)).unwrap(), f);
        assert_eq!(f.pow(0), PolynomialFp::one(5, 2));
    }

    #[test]
    fn mismatch_errors() {
        let f = xy_sum(5);
        let g = xy_sum(7);
        assert_eq!(f.try_mul(&g), Err(Error::CharacteristicMismatch(5, 7)));
        let h = PolynomialFp::variable(5, 3, 0);
        assert_eq!(f.try_mul(&h), Err(Error::DimensionMismatch(2, 3)));
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(!is_prime(4));
        assert!(is_prime(2_147_483_647));
    }

    #[test]
    fn monic_and_inverse() {
        let f = PolynomialFp::from_terms(7, 1, [([2].into(), 3), ([0].into(), 1)]);
        let m = f.monic();
        assert_eq!(m.leading_term().unwrap().1, 1);
        assert_eq!(m.coefficient(&[0].into()), inv_mod(3, 7));
    }
}
