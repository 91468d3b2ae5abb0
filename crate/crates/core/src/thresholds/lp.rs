//! Exact F-thresholds of monomial pairs as a max over small LPs.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::monomial_ideal::MonomialIdeal;
use crate::newton::simplex::{simplex_solve, Constraint, LinearProgram, LpOutcome, Relation, Sense};
use crate::rational::Rational;

/// Cap on the number of choice functions enumerated.
pub const MAX_CHOICES: u64 = 1_000_000;

/// `c^J(𝔞)` for monomial ideals.
///
/// `𝔞^n ⊄ J^[q]` iff some `n`-fold sum `w` of generators of `𝔞` escapes
/// every `q·b`, i.e. picks a coordinate `φ(b)` with `w_{φ(b)} < q·b_{φ(b)}`.
/// Rescaling by `n` and letting `q → ∞` gives
/// `c = max_φ 1/s*_φ` where `s*_φ = min{s : w ∈ conv(𝔞), w_{φ(b)} ≤ s·b_{φ(b)}}`.
pub fn monomial_threshold_exact(a: &MonomialIdeal, j: &MonomialIdeal) -> Result<Rational> {
    if a.dim() != j.dim() {
        return Err(Error::DimensionMismatch(a.dim(), j.dim()));
    }
    if j.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !j.radical_contains(a)? {
        return Err(Error::NotInRadical);
    }
    let d = j.dim();
    let supports: Vec<Vec<usize>> = j.generators().iter().map(|b| b.support().collect()).collect();
    let count = supports.iter().try_fold(1u64, |acc, s| acc.checked_mul(s.len() as u64));
    if !matches!(count, Some(n) if n <= MAX_CHOICES) {
        return Err(Error::Guard(format!("more than {MAX_CHOICES} choice functions")));
    }

    // a choice function only matters through the caps it induces:
    // cap_i = min{b_i : φ(b) = i}, with 0 standing for "unconstrained"
    let mut caps: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut choice = vec![0usize; supports.len()];
    loop {
        let mut cap = vec![0u32; d];
        for (k, b) in j.generators().iter().enumerate() {
            let i = supports[k][choice[k]];
            cap[i] = if cap[i] == 0 { b[i] } else { cap[i].min(b[i]) };
        }
        caps.insert(cap);
        let mut k = 0;
        loop {
            if k == choice.len() {
                break;
            }
            choice[k] += 1;
            if choice[k] < supports[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
        if k == choice.len() {
            break;
        }
    }
    // larger caps give smaller s*; keep only the maximal cap vectors
    let looser = |x: &[u32], y: &[u32]| x.iter().zip(y).all(|(&a, &b)| a == 0 || (b != 0 && b <= a));
    let caps: Vec<Vec<u32>> = caps.iter().cloned().collect();
    let maximal: Vec<&Vec<u32>> =
        caps.iter().filter(|c| !caps.iter().any(|o| o != *c && looser(o, c))).collect();

    let values: Vec<Rational> = maximal
        .par_iter()
        .map(|cap| min_scale(a, cap).map(|s| s.recip()))
        .collect::<Result<_>>()?;
    Ok(values.into_iter().max().expect("at least one choice function"))
}

/// `min s` subject to `w ∈ conv(gens 𝔞)` and `w_i ≤ s·cap_i` where `cap_i > 0`.
fn min_scale(a: &MonomialIdeal, cap: &[u32]) -> Result<Rational> {
    let gens = a.generators();
    let k = gens.len();
    let mut constraints = vec![Constraint::new(
        (0..=k).map(|j| if j < k { Rational::one() } else { Rational::zero() }).collect(),
        Relation::Eq,
        Rational::one(),
    )];
    for (i, &c) in cap.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mut row: Vec<Rational> = gens.iter().map(|g| Rational::from(g[i])).collect();
        row.push(-Rational::from(c));
        constraints.push(Constraint::new(row, Relation::Le, Rational::zero()));
    }
    let mut objective = vec![Rational::zero(); k + 1];
    objective[k] = Rational::one();
    let lp = LinearProgram { sense: Sense::Minimize, objective, constraints };
    match simplex_solve(&lp)? {
        LpOutcome::Optimal(o) if o.value.is_positive() => Ok(o.value),
        LpOutcome::Optimal(_) => Err(Error::NotInRadical),
        other => unreachable!("bounded feasible program, got {other:?}"),
    }
}
