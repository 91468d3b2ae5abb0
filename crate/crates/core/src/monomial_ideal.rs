//! Monomial ideals as staircases of minimal generators.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::monomial::ExponentVector;

/// A nonzero monomial ideal, stored as the antichain of its minimal
/// generators in increasing grevlex order. Every constructor minimalizes,
/// so `==` is ideal equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<ExponentVector>,
}

/// Reduce a set of exponents to its componentwise-minimal elements,
/// sorted by grevlex.
fn minimal_elements(mut exps: Vec<ExponentVector>) -> Vec<ExponentVector> {
    if exps.len() <= 1 {
        return exps;
    }
    let dim = exps[0].dim();
    // lexicographic order is a linear extension of divisibility, so a
    // divisor always precedes its multiples
    exps.sort_unstable_by(|a, b| a.entries().cmp(b.entries()));
    exps.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    if dim == 2 {
        // staircase sweep: x ascending, keep strictly decreasing y
        let mut best_y = u32::MAX;
        for e in exps {
            if e[1] < best_y {
                best_y = e[1];
                kept.push(e);
            }
        }
    } else {
        for e in exps {
            if !kept.iter().any(|k| k.divides(&e)) {
                kept.push(e);
            }
        }
    }
    kept.sort_unstable();
    kept
}

impl MonomialIdeal {
    /// The ideal generated by `exps`, minimalized.
    pub fn minimalize(exps: Vec<ExponentVector>) -> Result<Self> {
        let dim = match exps.first() {
            Some(e) => e.dim(),
            None => return Err(Error::EmptyIdeal),
        };
        if let Some(bad) = exps.iter().find(|e| e.dim() != dim) {
            return Err(Error::DimensionMismatch(dim, bad.dim()));
        }
        Ok(MonomialIdeal { dim, gens: minimal_elements(exps) })
    }

    /// Convenience constructor from raw exponent rows.
    pub fn from_exponents<I, V>(rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: Into<ExponentVector>,
    {
        Self::minimalize(rows.into_iter().map(Into::into).collect())
    }

    pub fn unit(dim: usize) -> Self {
        MonomialIdeal { dim, gens: vec![ExponentVector::zero(dim)] }
    }

    /// The maximal ideal `(x_1, …, x_d)`.
    pub fn maximal(dim: usize) -> Self {
        MonomialIdeal { dim, gens: minimal_elements((0..dim).map(|i| ExponentVector::unit(dim, i)).collect()) }
    }

    /// `(x_1^{a_1}, …, x_n^{a_n})` inside a ring of dimension `dim`.
    pub fn parameter(exponents: &[u32], dim: usize) -> Result<Self> {
        if exponents.is_empty() || exponents.len() > dim {
            return Err(Error::Precondition(format!(
                "need 1 ≤ n ≤ d parameters, got n = {} in d = {dim}",
                exponents.len()
            )));
        }
        if exponents.contains(&0) {
            return Err(Error::Precondition("parameter exponents must be positive".into()));
        }
        Self::minimalize(
            exponents.iter().enumerate().map(|(i, &a)| ExponentVector::unit(dim, i).scale(a)).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_zero())
    }

    fn check_dim(&self, d: usize) -> Result<()> {
        if self.dim != d {
            return Err(Error::DimensionMismatch(self.dim, d));
        }
        Ok(())
    }

    /// Membership of `x^u`: some generator divides it.
    pub fn contains_monomial(&self, u: &ExponentVector) -> Result<bool> {
        self.check_dim(u.dim())?;
        Ok(self.contains_unchecked(u))
    }

    pub(crate) fn contains_unchecked(&self, u: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_dim(other.dim)?;
        Ok(other.gens.iter().all(|g| self.contains_unchecked(g)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.dim)?;
        let all = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal { dim: self.dim, gens: minimal_elements(all) })
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.dim)?;
        Ok(self.product_unchecked(other))
    }

    fn product_unchecked(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut seen = HashSet::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                seen.insert(a + b);
            }
        }
        MonomialIdeal { dim: self.dim, gens: minimal_elements(seen.into_iter().collect()) }
    }

    /// `I^n` for `n ≥ 1` by repeated squaring, minimalizing after every
    /// product.
    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        if n == 0 {
            return Err(Error::Precondition("ideal_power needs n ≥ 1".into()));
        }
        let mut acc: Option<MonomialIdeal> = None;
        let mut base = self.clone();
        let mut n = n;
        loop {
            if n & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.product_unchecked(&base),
                });
            }
            n >>= 1;
            if n == 0 {
                break;
            }
            base = base.product_unchecked(&base);
        }
        Ok(acc.expect("n ≥ 1"))
    }

    /// Bracket power `I^[q]`: every generator raised to the `q`-th power.
    /// When a characteristic is bound, `q` must be a power of it.
    pub fn frobenius_power(&self, q: u32, characteristic: Option<u64>) -> Result<MonomialIdeal> {
        if let Some(p) = characteristic {
            if !is_power_of(q as u64, p) {
                return Err(Error::NotPrimePower(q as u64, p));
            }
        } else if q == 0 {
            return Err(Error::NotPrimePower(0, 0));
        }
        let mut gens: Vec<ExponentVector> = self.gens.iter().map(|g| g.scale(q)).collect();
        gens.sort_unstable();
        Ok(MonomialIdeal { dim: self.dim, gens })
    }

    /// Some pure power of every variable lies in the ideal, and the ideal
    /// is proper.
    pub fn is_m_primary(&self) -> bool {
        !self.is_unit()
            && (0..self.dim).all(|i| self.gens.iter().any(|g| g.support().all(|j| j == i)))
    }

    /// Exponent of the smallest pure power of `x_i` in the ideal.
    pub fn pure_power(&self, i: usize) -> Option<u32> {
        self.gens.iter().filter(|g| g.support().all(|j| j == i)).map(|g| g[i]).min()
    }

    /// `other ⊆ √self`: each generator of `other` is divisible by the
    /// support of some generator of `self`.
    pub fn radical_contains(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_dim(other.dim)?;
        Ok(other.gens.iter().all(|g| {
            self.gens.iter().any(|b| b.support().all(|i| g[i] > 0))
        }))
    }

    /// Largest entry over all generators in coordinate `i`.
    pub fn max_exponent(&self, i: usize) -> u32 {
        self.gens.iter().map(|g| g[i]).max().unwrap_or(0)
    }

    pub fn render(&self, vars: &[String]) -> Vec<String> {
        self.gens.iter().map(|g| g.render(vars)).collect()
    }
}

pub(crate) fn is_power_of(q: u64, p: u64) -> bool {
    if q == 0 || p < 2 {
        return false;
    }
    let mut r = q;
    while r % p == 0 {
        r /= p;
    }
    r == 1
}
