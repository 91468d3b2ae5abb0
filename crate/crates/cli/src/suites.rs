//! Built-in verification corpora run by `fthresh verify` when no input
//! files are given.

use serde_json::{json, Value};

use fthresh::corpus::{Corpus, DEFAULT_SEED};
use fthresh::thresholds::{
    check_briancon_skoda, check_finiteness_bound, check_multiplicity_bound, check_parameter_lemma,
    check_theorem_c, Report, Verdict,
};
use fthresh::{crosscheck_thresholds_equal_jumps, Error, MonomialIdeal, Rational, Result};

pub const PARAMETER_PRIMES: [u64; 3] = [2, 3, 5];

pub struct Summary {
    pub verdict: Verdict,
    pub value: Value,
}

#[derive(Default)]
struct Tally {
    cases: usize,
    skipped: usize,
    failures: Vec<Value>,
}

impl Tally {
    fn record<T: serde::Serialize>(&mut self, input: Value, report: &Report<T>) {
        self.cases += 1;
        if !report.passed() {
            self.failures.push(json!({ "input": input, "details": report.details }));
        }
    }

    fn finish(self) -> Summary {
        let verdict = Verdict::from_bool(self.failures.is_empty());
        let mut details = json!({ "cases": self.cases });
        if self.skipped > 0 {
            details["skipped"] = json!(self.skipped);
        }
        details["failures"] = Value::Array(self.failures);
        Summary { verdict, value: json!({ "verdict": verdict, "details": details }) }
    }
}

fn gens(i: &MonomialIdeal) -> Value {
    json!(i.generators())
}

/// Every `(x_1^{a_1}, …, x_n^{a_n})` with `n ≤ d ≤ 3` and `a_i ≤ 4`.
pub fn parameter_exponent_tuples() -> Vec<(Vec<u32>, usize)> {
    let mut out = Vec::new();
    for d in 1..=3usize {
        for n in 1..=d {
            let mut a = vec![1u32; n];
            loop {
                out.push((a.clone(), d));
                let mut k = 0;
                while k < n && a[k] == 4 {
                    a[k] = 1;
                    k += 1;
                }
                if k == n {
                    break;
                }
                a[k] += 1;
            }
        }
    }
    out
}

pub fn parameter_lemma(e_max: u32) -> Result<Summary> {
    let mut t = Tally::default();
    for (exps, d) in parameter_exponent_tuples() {
        let r = check_parameter_lemma(&exps, d, &PARAMETER_PRIMES, e_max)?;
        t.record(json!({ "exponents": exps, "dim": d }), &r);
    }
    Ok(t.finish())
}

/// Pairs `J ⊆ I` for the closure criterion: the two named witnesses plus
/// seeded random pairs.
pub fn theorem_c_corpus(count: usize) -> Vec<(MonomialIdeal, Vec<u32>)> {
    let mut out = vec![
        (MonomialIdeal::from_exponents([[2u32, 0], [0, 3], [1, 2]]).expect("valid"), vec![2, 3]),
        (MonomialIdeal::from_exponents([[1u32, 0], [0, 3]]).expect("valid"), vec![2, 3]),
    ];
    let mut c = Corpus::new(DEFAULT_SEED);
    while out.len() < count {
        let d = 2 + out.len() % 2;
        out.push(c.theorem_c_pair(d, if d == 2 { 4 } else { 3 }));
    }
    out
}

pub fn theorem_c(count: usize) -> Result<Summary> {
    let mut t = Tally::default();
    for (i, exps) in theorem_c_corpus(count) {
        let r = check_theorem_c(&i, &exps)?;
        t.record(json!({ "i": gens(&i), "exponents": exps }), &r);
    }
    Ok(t.finish())
}

pub fn briancon_skoda_corpus(count: usize) -> Vec<MonomialIdeal> {
    let mut c = Corpus::new(DEFAULT_SEED ^ 1);
    (0..count).map(|k| c.ideal(1 + k % 3, 4, 3)).collect()
}

pub fn briancon_skoda(count: usize, n_max: u32) -> Result<Summary> {
    let mut t = Tally::default();
    for j in briancon_skoda_corpus(count) {
        let r = check_briancon_skoda(&j, n_max)?;
        t.record(json!({ "j": gens(&j) }), &r);
    }
    Ok(t.finish())
}

pub fn finiteness_corpus(count: usize) -> Vec<(MonomialIdeal, MonomialIdeal)> {
    let mut c = Corpus::new(DEFAULT_SEED ^ 2);
    (0..count)
        .map(|k| {
            let d = 1 + k % 3;
            let j = if k % 2 == 0 { c.m_primary(d, 2, 3) } else { c.ideal(d, 3, 3) };
            (c.ideal(d, 3, 3), j)
        })
        .collect()
}

pub fn finiteness(count: usize) -> Result<Summary> {
    let mut t = Tally::default();
    for (a, j) in finiteness_corpus(count) {
        if !j.radical_contains(&a)? {
            t.skipped += 1;
            continue;
        }
        match check_finiteness_bound(&a, &j) {
            Ok(r) => t.record(json!({ "a": gens(&a), "j": gens(&j) }), &r),
            Err(Error::Precondition(_)) => t.skipped += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(t.finish())
}

pub fn multiplicity_corpus(count: usize) -> Vec<(MonomialIdeal, MonomialIdeal)> {
    let m = MonomialIdeal::maximal(2);
    let mut out = vec![
        (m.power(2).expect("valid"), m.clone()),
        (MonomialIdeal::from_exponents([[2u32, 0], [0, 3]]).expect("valid"), m.clone()),
        (m.clone(), m),
    ];
    let mut c = Corpus::new(DEFAULT_SEED ^ 3);
    while out.len() < count {
        let a = c.m_primary(2, 3, 5);
        let exps = c.parameter_exponents(2, 3);
        out.push((a, MonomialIdeal::parameter(&exps, 2).expect("valid")));
    }
    out
}

pub fn multiplicity_bound(count: usize) -> Result<Summary> {
    let mut t = Tally::default();
    for (a, j) in multiplicity_corpus(count) {
        let r = check_multiplicity_bound(&a, &j)?;
        t.record(json!({ "a": gens(&a), "j": gens(&j) }), &r);
    }
    Ok(t.finish())
}

/// The four ideals of the correspondence check, in two variables.
pub fn jump_ideals() -> Vec<MonomialIdeal> {
    let m = MonomialIdeal::maximal(2);
    vec![
        m.clone(),
        MonomialIdeal::from_exponents([[2u32, 0], [0, 3]]).expect("valid"),
        m.power(2).expect("valid"),
        MonomialIdeal::from_exponents([[2u32, 0], [1, 1], [0, 2]]).expect("valid"),
    ]
}

pub fn jump_samples(count: usize) -> Vec<MonomialIdeal> {
    let mut c = Corpus::new(DEFAULT_SEED ^ 4);
    (0..count).map(|_| c.m_primary(2, 2, 4)).collect()
}

pub fn thresholds_jumps(bound: &Rational, samples: usize) -> Result<Summary> {
    let mut t = Tally::default();
    let js = jump_samples(samples);
    for a in jump_ideals() {
        let r = crosscheck_thresholds_equal_jumps(&a, bound, &js)?;
        t.record(json!({ "a": gens(&a), "bound": bound }), &r);
    }
    Ok(t.finish())
}
