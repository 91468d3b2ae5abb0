//! F-thresholds: `ν` sequences, exact monomial thresholds, and checkers
//! for the identities relating them to integral closure and multiplicity.

mod checks;
mod lp;
mod nu;

use rayon::prelude::*;
use serde::ser::SerializeTuple;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::parse::Ideal;
use crate::rational::Rational;

pub use checks::{
    check_briancon_skoda, check_finiteness_bound, check_multiplicity_bound, check_parameter_lemma,
    check_theorem_c, BrianconSkodaDetails, FinitenessDetails, MultiplicityDetails, ParameterDetails,
    Report, TheoremCDetails, Verdict, MAX_CONTAINMENT_POWER,
};
pub use lp::{monomial_threshold_exact, MAX_CHOICES};
pub use nu::{frobenius_exponent, nu, nu_monomial, Nu, MAX_Q, MAX_SEARCH_NODES, MAX_SPAN, RADICAL_POWER_BOUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    #[serde(rename = "lp-exact")]
    LpExact,
    #[serde(rename = "bracket")]
    Bracket,
}

/// One row `(e, ν_e, ν_e/p^e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceEntry {
    pub e: u32,
    pub nu: u64,
    pub ratio: Rational,
}

impl Serialize for SequenceEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(3)?;
        t.serialize_element(&self.e)?;
        t.serialize_element(&self.nu)?;
        t.serialize_element(&self.ratio)?;
        t.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdEstimate {
    pub exact: Option<Rational>,
    pub lower: Rational,
    pub upper: Option<Rational>,
    pub sequence: Vec<SequenceEntry>,
    pub method: Method,
}

/// The `ν_e/p^e` rows for `e = 1..=e_max`.
pub fn nu_sequence(a: &Ideal, j: &Ideal, e_max: u32) -> Result<Vec<SequenceEntry>> {
    (1..=e_max)
        .into_par_iter()
        .map(|e| {
            let q = frobenius_exponent(a.p, e)?;
            match nu(a, j, e)? {
                Nu::Finite(n) => Ok(SequenceEntry { e, nu: n, ratio: Rational::new(n, q) }),
                Nu::Infinite => Err(Error::NotInRadical),
            }
        })
        .collect()
}

/// `c^J(𝔞)`: exact for monomial pairs, otherwise a lower bracket from the
/// `ν` sequence.
pub fn threshold(a: &Ideal, j: &Ideal, e_max: u32) -> Result<ThresholdEstimate> {
    if e_max == 0 {
        return Err(Error::Precondition("e_max must be at least 1".into()));
    }
    a.check_same_ring(j)?;
    let sequence = nu_sequence(a, j, e_max)?;
    let lower = sequence.iter().map(|s| s.ratio.clone()).max().expect("e_max ≥ 1");
    let exact = if a.is_monomial() && j.is_monomial() {
        match (a.to_monomial(), j.to_monomial()) {
            (Ok(am), Ok(jm)) => Some(monomial_threshold_exact(&am, &jm)?),
            _ => None,
        }
    } else {
        None
    };
    Ok(match exact {
        Some(c) => ThresholdEstimate {
            exact: Some(c.clone()),
            lower,
            upper: Some(c),
            sequence,
            method: Method::LpExact,
        },
        None => ThresholdEstimate { exact: None, lower, upper: None, sequence, method: Method::Bracket },
    })
}
