//! Monomial test ideals `τ(𝔞^t)` and their jumping numbers.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::ExponentVector;
use crate::monomial_ideal::MonomialIdeal;
use crate::newton::{minimal_members_in_box, newton_polyhedron, NewtonPolyhedron};
use crate::rational::Rational;
use crate::thresholds::{monomial_threshold_exact, Report, Verdict};

/// `τ(𝔞^t) = (x^u : ⟨v, u+1⟩ > t·c for every facet)`.
pub fn test_ideal(a: &MonomialIdeal, t: &Rational) -> Result<MonomialIdeal> {
    test_ideal_of(&newton_polyhedron(a)?, t)
}

pub(crate) fn test_ideal_of(np: &NewtonPolyhedron, t: &Rational) -> Result<MonomialIdeal> {
    if t.is_negative() {
        return Err(Error::Negative(format!("test ideal exponent {t}")));
    }
    let d = np.dim();
    if t.is_zero() {
        return Ok(MonomialIdeal::unit(d));
    }
    let (num, den) = scaled(t)?;
    // a minimal generator u with u_i > 0 has v_i·u_i ≤ ⟨v, u+1-e_i⟩ ≤ t·c
    // for some facet with v_i > 0
    let bounds: Vec<u32> = (0..d)
        .map(|i| {
            let b = np
                .facets()
                .iter()
                .filter(|f| f.normal()[i] > 0)
                .map(|f| (num * i128::from(f.value_int())).div_euclid(den * i128::from(f.normal()[i])))
                .max()
                .unwrap_or(0);
            u32::try_from(b).map_err(|_| Error::Guard(format!("scan bound {b} too large")))
        })
        .collect::<Result<_>>()?;
    let member = |u: &[u32]| {
        np.facets().iter().all(|f| {
            let lhs: i64 = f.normal().iter().zip(u).map(|(v, x)| v * (i64::from(*x) + 1)).sum();
            i128::from(lhs) * den > num * i128::from(f.value_int())
        })
    };
    MonomialIdeal::minimalize(minimal_members_in_box(&bounds, member)?)
}

fn scaled(t: &Rational) -> Result<(i128, i128)> {
    t.to_i128_pair().ok_or_else(|| Error::Guard(format!("rational {t} too large for a lattice scan")))
}

/// Candidate jump locations `⟨v, u+1⟩/c ≤ bound`, per facet.
pub fn jump_candidates(np: &NewtonPolyhedron, bound: &Rational) -> Result<Vec<Rational>> {
    let (num, den) = scaled(bound)?;
    let mut out = BTreeSet::new();
    for f in np.facets() {
        let support: Vec<usize> = (0..np.dim()).filter(|&i| f.normal()[i] > 0).collect();
        let limit = num * i128::from(f.value_int());
        let caps: Vec<i128> =
            support.iter().map(|&i| limit.div_euclid(den * i128::from(f.normal()[i]))).collect();
        let mut u = vec![0i128; support.len()];
        'outer: loop {
            let s: i128 = support.iter().zip(&u).map(|(&i, x)| i128::from(f.normal()[i]) * (x + 1)).sum();
            if s * den <= limit {
                out.insert(Rational::new(s, i128::from(f.value_int())));
            }
            for k in 0..u.len() {
                if u[k] < caps[k] {
                    u[k] += 1;
                    continue 'outer;
                }
                u[k] = 0;
            }
            break;
        }
    }
    Ok(out.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpingSpectrum {
    pub ideal: MonomialIdeal,
    pub bound: Rational,
    pub jumps: Vec<Rational>,
    pub ideals: Vec<(Rational, MonomialIdeal)>,
}

impl Serialize for JumpingSpectrum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        struct Ideals<'a>(&'a [(Rational, MonomialIdeal)]);
        impl Serialize for Ideals<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (t, i) in self.0 {
                    m.serialize_entry(&t.to_string(), i.generators())?;
                }
                m.end()
            }
        }
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("jumps", &self.jumps)?;
        m.serialize_entry("ideals", &Ideals(&self.ideals))?;
        m.end()
    }
}

/// All `t ≤ bound` where `τ(𝔞^t)` differs from `τ(𝔞^{t-ε})`.
pub fn jumping_numbers(a: &MonomialIdeal, bound: &Rational) -> Result<JumpingSpectrum> {
    if !bound.is_positive() {
        return Err(Error::Precondition("jumping bound must be positive".into()));
    }
    let np = newton_polyhedron(a)?;
    let candidates = jump_candidates(&np, bound)?;
    let mut points = vec![Rational::zero()];
    points.extend(candidates.iter().cloned());
    let delta = points
        .windows(2)
        .map(|w| &w[1] - &w[0])
        .filter(|g| g.is_positive())
        .min()
        .map(|g| g / Rational::from(2));
    let mut jumps = Vec::new();
    let mut ideals = Vec::new();
    if let Some(delta) = delta {
        for t in candidates {
            let at = test_ideal_of(&np, &t)?;
            let before = test_ideal_of(&np, &(&t - &delta))?;
            if at != before {
                jumps.push(t.clone());
                ideals.push((t, at));
            }
        }
    }
    Ok(JumpingSpectrum { ideal: a.clone(), bound: bound.clone(), jumps, ideals })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JumpCheck {
    pub jump: Rational,
    pub threshold: Rational,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContainmentCheck {
    pub j: Vec<ExponentVector>,
    pub threshold: Rational,
    pub contained: bool,
    /// Whether the threshold is a jumping number; `None` above the bound.
    pub is_jump: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckDetails {
    pub jumps: Vec<JumpCheck>,
    pub containments: Vec<ContainmentCheck>,
}

/// Thresholds and jumping numbers coincide: every jump `α` satisfies
/// `c^{τ(𝔞^α)}(𝔞) = α`, and for each sample `J`, `τ(𝔞^{c^J(𝔞)}) ⊆ J`
/// with `c^J(𝔞)` itself a jump.
pub fn crosscheck_thresholds_equal_jumps(
    a: &MonomialIdeal,
    bound: &Rational,
    samples: &[MonomialIdeal],
) -> Result<Report<CrosscheckDetails>> {
    if !a.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    let spectrum = jumping_numbers(a, bound)?;
    let mut jumps = Vec::new();
    for (alpha, tau) in &spectrum.ideals {
        let threshold = monomial_threshold_exact(a, tau)?;
        jumps.push(JumpCheck { jump: alpha.clone(), equal: &threshold == alpha, threshold });
    }
    let mut containments = Vec::new();
    for j in samples {
        let threshold = monomial_threshold_exact(a, j)?;
        let contained = j.contains_ideal(&test_ideal(a, &threshold)?)?;
        let is_jump = (threshold <= *bound).then(|| spectrum.jumps.contains(&threshold));
        containments.push(ContainmentCheck { j: j.generators().to_vec(), threshold, contained, is_jump });
    }
    let ok = jumps.iter().all(|c| c.equal)
        && containments.iter().all(|c| c.contained && c.is_jump != Some(false));
    Ok(Report { verdict: Verdict::from_bool(ok), details: CrosscheckDetails { jumps, containments } })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(rows.iter().map(|r| r.to_vec())).unwrap()
    }

    #[test]
    fn test_ideal_examples() {
        let m = MonomialIdeal::maximal(2);
        assert_eq!(test_ideal(&m, &Rational::from(2)).unwrap(), m);
        assert_eq!(test_ideal(&m, &Rational::new(3, 2)).unwrap(), MonomialIdeal::unit(2));
        assert_eq!(test_ideal(&m, &Rational::from(3)).unwrap(), m.power(2).unwrap());
        let a = ideal(&[&[2, 0], &[0, 3]]);
        let tau = test_ideal(&a, &Rational::new(5, 6)).unwrap();
        assert!(!tau.is_unit());
        assert_eq!(tau, m);
        assert_eq!(test_ideal(&a, &Rational::zero()).unwrap(), MonomialIdeal::unit(2));
        assert!(test_ideal(&a, &Rational::new(-1, 3)).is_err());
    }

    #[test]
    fn jump_examples() {
        let m = MonomialIdeal::maximal(2);
        let s = jumping_numbers(&m, &Rational::from(4)).unwrap();
        assert_eq!(s.jumps, vec![Rational::from(2), Rational::from(3), Rational::from(4)]);
        let s = jumping_numbers(&ideal(&[&[1]]), &Rational::from(3)).unwrap();
        assert_eq!(s.jumps, vec![Rational::from(1), Rational::from(2), Rational::from(3)]);
        let s = jumping_numbers(&ideal(&[&[2, 0], &[0, 3]]), &Rational::one()).unwrap();
        assert_eq!(s.jumps, vec![Rational::new(5, 6)]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"jumps":["5/6"],"ideals":{"5/6":[[0,1],[1,0]]}}"#);
    }

    #[test]
    fn crosscheck_examples() {
        let m = MonomialIdeal::maximal(2);
        let r = crosscheck_thresholds_equal_jumps(&m, &Rational::from(3), &[m.clone(), m.power(2).unwrap()]).unwrap();
        assert!(r.passed(), "{r:?}");
        let a = ideal(&[&[2, 0], &[0, 3]]);
        let r = crosscheck_thresholds_equal_jumps(&a, &Rational::one(), &[]).unwrap();
        assert!(r.passed());
        assert_eq!(r.details.jumps[0].threshold, Rational::new(5, 6));
    }
}
