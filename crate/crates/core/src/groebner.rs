//! Buchberger's algorithm over `F_p` with grevlex, used for ideal
//! membership when the ideals are not monomial.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::monomial::ExponentVector;
use crate::poly::PolynomialFp;

/// Default cap on the number of polynomials in an intermediate basis.
pub const DEFAULT_MAX_BASIS: usize = 5000;

/// A reduced Gröbner basis under grevlex: monic, autoreduced, sorted by
/// leading exponent. The zero ideal has no generators and is flagged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    p: u64,
    dim: usize,
    gens: Vec<PolynomialFp>,
}

impl GroebnerBasis {
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[PolynomialFp] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].leading_exponent().is_some_and(|e| e.is_zero())
    }

    /// Remainder of `f` under full multivariate division by the basis;
    /// zero iff `f` lies in the ideal.
    pub fn normal_form(&self, f: &PolynomialFp) -> Result<PolynomialFp> {
        if f.characteristic() != self.p {
            return Err(Error::CharacteristicMismatch(f.characteristic(), self.p));
        }
        if f.dim() != self.dim {
            return Err(Error::DimensionMismatch(f.dim(), self.dim));
        }
        Ok(reduce(f.clone(), &self.gens))
    }

    pub fn contains(&self, f: &PolynomialFp) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

/// Full reduction of `f` by `basis`, whose elements must be monic.
fn reduce(mut f: PolynomialFp, basis: &[PolynomialFp]) -> PolynomialFp {
    let p = f.characteristic();
    let mut rem = PolynomialFp::zero(p, f.dim());
    while let Some((lead, c)) = f.pop_leading() {
        let divisor = basis.iter().find(|g| g.leading_exponent().is_some_and(|lg| lg.divides(&lead)));
        match divisor {
            Some(g) => {
                let (lg, _) = g.leading_term().expect("nonzero");
                let shift = lg.quotient(&lead).expect("divides");
                // the leading terms cancel; subtract the rest of c·x^shift·g
                let mut tail = g.clone();
                tail.pop_leading();
                f.add_scaled_shift(&tail, &shift, p - c);
            }
            None => rem.add_term(lead, c),
        }
    }
    rem
}

fn s_polynomial(f: &PolynomialFp, g: &PolynomialFp) -> PolynomialFp {
    let lf = f.leading_exponent().expect("nonzero");
    let lg = g.leading_exponent().expect("nonzero");
    let l = lf.lcm(lg);
    let mut s = f.mul_term(&lf.quotient(&l).expect("lcm"), 1);
    s.add_scaled_shift(g, &lg.quotient(&l).expect("lcm"), f.characteristic() - 1);
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PairKey(usize, usize);

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[PolynomialFp]) -> Result<GroebnerBasis> {
    buchberger_with_limit(gens, DEFAULT_MAX_BASIS)
}

/// As [`buchberger`], aborting once the working basis holds more than
/// `max_basis` polynomials.
pub fn buchberger_with_limit(gens: &[PolynomialFp], max_basis: usize) -> Result<GroebnerBasis> {
    let first = gens.first().ok_or(Error::EmptyGenerators)?;
    let (p, dim) = (first.characteristic(), first.dim());
    for g in gens {
        if g.characteristic() != p {
            return Err(Error::CharacteristicMismatch(p, g.characteristic()));
        }
        if g.dim() != dim {
            return Err(Error::DimensionMismatch(dim, g.dim()));
        }
    }

    let mut basis: Vec<PolynomialFp> = Vec::new();
    // queue ordered by (lcm degree, lcm, i, j): normal selection strategy
    let mut queue: BTreeSet<(u64, ExponentVector, PairKey)> = BTreeSet::new();
    let mut pending: HashSet<PairKey> = HashSet::new();

    let add = |f: PolynomialFp,
                   basis: &mut Vec<PolynomialFp>,
                   queue: &mut BTreeSet<(u64, ExponentVector, PairKey)>,
                   pending: &mut HashSet<PairKey>|
     -> Result<bool> {
        let f = f.monic();
        let unit = f.leading_exponent().is_some_and(|e| e.is_zero());
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let l = g.leading_exponent().unwrap().lcm(f.leading_exponent().unwrap());
            let key = PairKey(i, k);
            queue.insert((l.degree(), l, key));
            pending.insert(key);
        }
        basis.push(f);
        if basis.len() > max_basis {
            return Err(Error::Guard(format!("Gröbner basis exceeded {max_basis} polynomials")));
        }
        Ok(unit)
    };

    let mut unit = false;
    for g in gens {
        let r = reduce(g.clone(), &basis);
        if !r.is_zero() && add(r, &mut basis, &mut queue, &mut pending)? {
            unit = true;
            break;
        }
    }

    while !unit {
        let Some((_, lcm, key)) = queue.pop_first() else { break };
        pending.remove(&key);
        let PairKey(i, j) = key;
        let (li, lj) = (
            basis[i].leading_exponent().unwrap(),
            basis[j].leading_exponent().unwrap(),
        );
        if li.coprime(lj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_exponent().unwrap().divides(&lcm)
                && !pending.contains(&PairKey(i.min(k), i.max(k)))
                && !pending.contains(&PairKey(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = reduce(s_polynomial(&basis[i], &basis[j]), &basis);
        if !s.is_zero() && add(s, &mut basis, &mut queue, &mut pending)? {
            unit = true;
        }
    }

    if unit {
        return Ok(GroebnerBasis { p, dim, gens: vec![PolynomialFp::one(p, dim)] });
    }
    Ok(GroebnerBasis { p, dim, gens: autoreduce(basis) })
}

/// Drop elements whose leading term is divisible by another's, then fully
/// reduce each survivor by the rest.
fn autoreduce(mut basis: Vec<PolynomialFp>) -> Vec<PolynomialFp> {
    basis.sort_by(|a, b| a.leading_exponent().cmp(&b.leading_exponent()));
    let mut minimal: Vec<PolynomialFp> = Vec::new();
    for f in basis {
        let lf = f.leading_exponent().unwrap();
        if !minimal.iter().any(|g| g.leading_exponent().unwrap().divides(lf)) {
            minimal.push(f);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<PolynomialFp> =
            minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let f = &minimal[i];
        let (lead, c) = f.leading_term().unwrap();
        let mut tail = f.clone();
        tail.pop_leading();
        let mut r = reduce(tail, &others);
        r.add_term(lead.clone(), c);
        out.push(r.monic());
    }
    out.sort_by(|a, b| a.leading_exponent().cmp(&b.leading_exponent()));
    out
}

/// `ideal(b) ⊆ ideal(a)`.
pub fn ideal_contains(a: &[PolynomialFp], b: &[PolynomialFp]) -> Result<bool> {
    let g = buchberger(a)?;
    for f in b {
        if !g.contains(f)? {
            return Ok(false);
        }
    }
    Ok(true)
}
