//! Covolume of an m-primary Newton polyhedron and the multiplicity.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::dd::{determinant, triangulate};
use super::newton_polyhedron;
use crate::error::{Error, Result};
use crate::monomial_ideal::MonomialIdeal;
use crate::rational::Rational;

pub const MAX_VOLUME_DIM: usize = 4;

/// `d! · vol([0,∞)^d ∖ NP(I))`: the complement is the union of the
/// pyramids from the origin over the facets, each of which is compact.
fn normalized_volume(ideal: &MonomialIdeal) -> Result<BigInt> {
    let d = ideal.dim();
    if d > MAX_VOLUME_DIM {
        return Err(Error::DimensionTooLarge { got: d, max: MAX_VOLUME_DIM });
    }
    if !ideal.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    let np = newton_polyhedron(ideal)?;
    let mut total = BigInt::zero();
    for f in np.facets() {
        let points: Vec<Vec<i64>> = np
            .generators()
            .iter()
            .filter(|g| f.eval(g.entries()) == f.value_int())
            .map(|g| g.entries().iter().map(|&x| i64::from(x)).collect())
            .collect();
        for simplex in triangulate(&points) {
            let m: Vec<Vec<i64>> = simplex.iter().map(|&i| points[i].clone()).collect();
            total += determinant(&m).abs();
        }
    }
    Ok(total)
}

/// Exact volume of the bounded region `[0,∞)^d ∖ NP(I)`.
pub fn complement_volume(ideal: &MonomialIdeal) -> Result<Rational> {
    let factorial: u64 = (1..=ideal.dim() as u64).product();
    Ok(Rational::from(normalized_volume(ideal)?) / Rational::from(factorial))
}

/// Hilbert–Samuel multiplicity `e(I) = d! · complement_volume(I)`.
pub fn multiplicity(ideal: &MonomialIdeal) -> Result<Rational> {
    Ok(Rational::from(normalized_volume(ideal)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(rows.iter().map(|r| r.to_vec())).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(multiplicity(&ideal(&[&[2, 0], &[0, 3]])).unwrap(), Rational::from(6));
        assert_eq!(complement_volume(&ideal(&[&[2, 0], &[0, 3]])).unwrap(), Rational::from(3));
        assert_eq!(multiplicity(&MonomialIdeal::maximal(2)).unwrap(), Rational::from(1));
        for a in 1..5 {
            for b in 1..5 {
                assert_eq!(multiplicity(&ideal(&[&[a, 0], &[0, b]])).unwrap(), Rational::from(a * b));
            }
        }
        assert_eq!(multiplicity(&MonomialIdeal::maximal(2).power(2).unwrap()).unwrap(), Rational::from(4));
        assert_eq!(multiplicity(&MonomialIdeal::maximal(3).power(3).unwrap()).unwrap(), Rational::from(27));
        assert_eq!(multiplicity(&ideal(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]])).unwrap(), Rational::from(30));
        assert_eq!(multiplicity(&ideal(&[&[7]])).unwrap(), Rational::from(7));
        assert_eq!(multiplicity(&ideal(&[&[1, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 3]])).unwrap(), Rational::from(6));
    }

    #[test]
    fn two_facet_staircase() {
        // (x^4, xy, y^4): complement area = 2 + 2 = 4, e = 8
        assert_eq!(multiplicity(&ideal(&[&[4, 0], &[1, 1], &[0, 4]])).unwrap(), Rational::from(8));
    }

    #[test]
    fn preconditions() {
        assert_eq!(multiplicity(&ideal(&[&[2, 0], &[1, 1]])), Err(Error::NotMPrimary));
        assert!(matches!(
            multiplicity(&MonomialIdeal::maximal(5)),
            Err(Error::DimensionTooLarge { .. })
        ));
    }
}
