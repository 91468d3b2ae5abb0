//! Exponent vectors with the graded reverse lexicographic order.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Index};

use serde::{Deserialize, Serialize};

/// Exponents of a monomial `x_1^{u_1} ⋯ x_d^{u_d}`.
///
/// `Ord` is grevlex: higher total degree first, ties broken by the
/// *last* differing exponent, where the smaller exponent wins. The
/// componentwise (divisibility) order is available through
/// [`ExponentVector::divides`].
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(dim: usize) -> Self {
        ExponentVector(vec![0; dim])
    }

    /// The `i`-th unit vector.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `self ≤ other` componentwise, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other − self`, when `self` divides `other`.
    pub fn quotient(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        Some(ExponentVector(
            self.0.iter().zip(&other.0).map(|(a, b)| b - a).collect(),
        ))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn scale(&self, k: u32) -> Self {
        ExponentVector(self.0.iter().map(|&e| e * k).collect())
    }

    /// Indices of the nonzero entries.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Coprime leading terms: `gcd(x^self, x^other) = 1`.
    pub fn coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Render with the given variable names, e.g. `x^2*y`. The zero vector
    /// renders as `1`.
    pub fn render(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(vars)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Index<usize> for ExponentVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl<'a> Add<&'a ExponentVector> for &'a ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: &'a ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev<const N: usize>(v: [u32; N]) -> ExponentVector {
        v.into()
    }

    #[test]
    fn grevlex_order() {
        // degree first
        assert!(ev([0, 0, 2]) > ev([1, 0, 0]));
        // x > y > z among degree one
        assert!(ev([1, 0, 0]) > ev([0, 1, 0]));
        assert!(ev([0, 1, 0]) > ev([0, 0, 1]));
        // x*z vs y^2: grevlex puts y^2 above x*z
        assert!(ev([0, 2, 0]) > ev([1, 0, 1]));
        assert!(ev([2, 0, 0]) > ev([1, 1, 0]));
    }

    #[test]
    fn divisibility() {
        assert!(ev([1, 2]).divides(&ev([1, 3])));
        assert!(!ev([2, 0]).divides(&ev([1, 5])));
        assert_eq!(ev([1, 2]).quotient(&ev([3, 2])), Some(ev([2, 0])));
        assert_eq!(ev([1, 2]).lcm(&ev([3, 0])), ev([3, 2]));
    }

    #[test]
    fn render_names() {
        let vars = vec!["x".to_string(), "y".to_string()];
        assert_eq!(ev([2, 1]).render(&vars), "x^2*y");
        assert_eq!(ev([0, 0]).render(&vars), "1");
    }
}
