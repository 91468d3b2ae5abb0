//! Verifiers. Each returns a report whose verdict is `fail` exactly when a
//! counterexample was found; precondition violations are errors.

use serde::Serialize;

use super::lp::monomial_threshold_exact;
use super::nu::nu_monomial;
use super::SequenceEntry;
use crate::error::{Error, Result};
use crate::monomial_ideal::MonomialIdeal;
use crate::newton::{integral_closure, multiplicity};
use crate::rational::Rational;

/// Largest `l` searched for `𝔞^l ⊆ J`.
pub const MAX_CONTAINMENT_POWER: u32 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report<T> {
    pub verdict: Verdict,
    pub details: T,
}

impl<T> Report<T> {
    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeSequence {
    pub p: u64,
    pub sequence: Vec<SequenceEntry>,
    pub ascending: bool,
    pub bounded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParameterDetails {
    pub exponents: Vec<u32>,
    pub dim: usize,
    pub n: usize,
    pub threshold: Rational,
    pub sequences: Vec<PrimeSequence>,
}

fn monomial_sequence(a: &MonomialIdeal, j: &MonomialIdeal, p: u64, e_max: u32) -> Result<Vec<SequenceEntry>> {
    let mut out = Vec::new();
    let mut q = 1u64;
    for e in 1..=e_max {
        q *= p;
        let n = nu_monomial(a, j, q)?.finite().ok_or(Error::NotInRadical)?;
        out.push(SequenceEntry { e, nu: n, ratio: Rational::new(n, q) });
    }
    Ok(out)
}

fn ascending(seq: &[SequenceEntry]) -> bool {
    seq.windows(2).all(|w| w[0].ratio <= w[1].ratio)
}

/// For `J = (x_1^{a_1}, …, x_n^{a_n})`: `c^J(J) = n`, and the `ν`
/// sequence at each prime ascends and stays below `n`.
pub fn check_parameter_lemma(
    exponents: &[u32],
    dim: usize,
    primes: &[u64],
    e_max: u32,
) -> Result<Report<ParameterDetails>> {
    let j = MonomialIdeal::parameter(exponents, dim)?;
    let n = exponents.len();
    let threshold = monomial_threshold_exact(&j, &j)?;
    let target = Rational::from(n);
    let mut sequences = Vec::new();
    for &p in primes {
        let sequence = monomial_sequence(&j, &j, p, e_max)?;
        let bounded = sequence.iter().all(|s| s.ratio <= target);
        sequences.push(PrimeSequence { p, ascending: ascending(&sequence), bounded, sequence });
    }
    let ok = threshold == target && sequences.iter().all(|s| s.ascending && s.bounded);
    Ok(Report {
        verdict: Verdict::from_bool(ok),
        details: ParameterDetails { exponents: exponents.to_vec(), dim, n, threshold, sequences },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCDetails {
    pub n: usize,
    pub threshold: Rational,
    pub threshold_equals_n: bool,
    pub closures_equal: bool,
}

/// For a parameter ideal `J ⊆ I`: `c^J(I) = n` iff `Ī = J̄`.
pub fn check_theorem_c(i: &MonomialIdeal, exponents: &[u32]) -> Result<Report<TheoremCDetails>> {
    let j = MonomialIdeal::parameter(exponents, i.dim())?;
    if !i.contains_ideal(&j)? {
        return Err(Error::Precondition("the parameter ideal is not contained in I".into()));
    }
    let n = exponents.len();
    let threshold = monomial_threshold_exact(i, &j)?;
    let threshold_equals_n = threshold == Rational::from(n);
    let closures_equal = integral_closure(i)? == integral_closure(&j)?;
    Ok(Report {
        verdict: Verdict::from_bool(threshold_equals_n == closures_equal),
        details: TheoremCDetails { n, threshold, threshold_equals_n, closures_equal },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrianconSkodaInstance {
    pub n: u32,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrianconSkodaDetails {
    pub l: usize,
    pub instances: Vec<BrianconSkodaInstance>,
}

/// `closure(J^{n+l-1}) ⊆ J^n` for `n = 1..=n_max`, `l` the number of
/// minimal generators.
pub fn check_briancon_skoda(j: &MonomialIdeal, n_max: u32) -> Result<Report<BrianconSkodaDetails>> {
    let l = j.num_generators();
    let mut instances = Vec::new();
    for n in 1..=n_max {
        let big = j.power(n + l as u32 - 1)?;
        let holds = j.power(n)?.contains_ideal(&integral_closure(&big)?)?;
        instances.push(BrianconSkodaInstance { n, holds });
    }
    Ok(Report {
        verdict: Verdict::from_bool(instances.iter().all(|i| i.holds)),
        details: BrianconSkodaDetails { l, instances },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FinitenessDetails {
    pub l: u32,
    pub n: usize,
    pub bound: u64,
    pub threshold: Rational,
}

/// With `l` least such that `𝔞^l ⊆ J` and `n` generators of `J`:
/// `c^J(𝔞) ≤ n·l`.
pub fn check_finiteness_bound(a: &MonomialIdeal, j: &MonomialIdeal) -> Result<Report<FinitenessDetails>> {
    let mut power = a.clone();
    let mut l = 1;
    while !j.contains_ideal(&power)? {
        if l == MAX_CONTAINMENT_POWER {
            return Err(Error::Precondition(format!("no l ≤ {MAX_CONTAINMENT_POWER} with a^l ⊆ J")));
        }
        power = power.product(a)?;
        l += 1;
    }
    let n = j.num_generators();
    let bound = n as u64 * u64::from(l);
    let threshold = monomial_threshold_exact(a, j)?;
    Ok(Report {
        verdict: Verdict::from_bool(threshold <= Rational::from(bound)),
        details: FinitenessDetails { l, n, bound, threshold },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityDetails {
    pub e_a: Rational,
    pub e_j: Rational,
    pub threshold: Rational,
    pub bound: Rational,
    pub holds: bool,
    pub equality: bool,
}

/// `e(𝔞) ≥ (d/c^J(𝔞))^d · e(J)` for a full parameter ideal `J`.
pub fn check_multiplicity_bound(a: &MonomialIdeal, j: &MonomialIdeal) -> Result<Report<MultiplicityDetails>> {
    let d = j.dim();
    let parameter = j.num_generators() == d && j.generators().iter().all(|g| g.support().count() == 1);
    if !parameter {
        return Err(Error::Precondition("J must be generated by pure powers of all variables".into()));
    }
    if !a.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    let e_a = multiplicity(a)?;
    let e_j = multiplicity(j)?;
    let threshold = monomial_threshold_exact(a, j)?;
    let bound = (Rational::from(d) / &threshold).pow(d as u32) * &e_j;
    let holds = e_a >= bound;
    let equality = e_a == bound;
    Ok(Report {
        verdict: Verdict::from_bool(holds),
        details: MultiplicityDetails { e_a, e_j, threshold, bound, holds, equality },
    })
}
