//! Newton polyhedra of monomial ideals: facets, the order function,
//! integral closure and fractional powers, Rees valuations, volumes.

mod dd;
pub mod simplex;
mod volume;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::ExponentVector;
use crate::monomial_ideal::MonomialIdeal;
use crate::rational::{Extended, Rational};
use simplex::{simplex_solve, Constraint, LinearProgram, LpOutcome, Relation, Sense};

pub use volume::{complement_volume, multiplicity, MAX_VOLUME_DIM};

/// Largest ambient dimension for facet enumeration.
pub const MAX_NEWTON_DIM: usize = 6;

/// Cap on the number of lattice points visited by a single scan.
pub const MAX_SCAN_POINTS: u64 = 50_000_000;

/// A facet inequality `⟨normal, w⟩ ≥ value`, with a primitive nonnegative
/// normal and positive integer value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    normal: Vec<i64>,
    value: i64,
}

impl Facet {
    pub fn normal(&self) -> &[i64] {
        &self.normal
    }

    pub fn value(&self) -> Rational {
        Rational::from(self.value)
    }

    pub(crate) fn value_int(&self) -> i64 {
        self.value
    }

    pub(crate) fn eval(&self, u: &[u32]) -> i64 {
        self.normal.iter().zip(u).map(|(v, x)| v * i64::from(*x)).sum()
    }
}

impl Serialize for Facet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Facet", 2)?;
        st.serialize_field("normal", &self.normal)?;
        st.serialize_field("value", &self.value.to_string())?;
        st.end()
    }
}

/// `NP(I) = conv(gens) + R^d_{≥0}`, described by its non-coordinate
/// facets. The unit ideal has no facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    dim: usize,
    facets: Vec<Facet>,
    generators: Vec<ExponentVector>,
}

/// Compute the facets of `NP(I)`.
pub fn newton_polyhedron(ideal: &MonomialIdeal) -> Result<NewtonPolyhedron> {
    let d = ideal.dim();
    if d > MAX_NEWTON_DIM {
        return Err(Error::DimensionTooLarge { got: d, max: MAX_NEWTON_DIM });
    }
    let generators = ideal.generators().to_vec();
    if ideal.is_unit() {
        return Ok(NewtonPolyhedron { dim: d, facets: Vec::new(), generators });
    }
    // facets are the rays y = (-c, v) of the dual cone with c > 0
    let mut rows: Vec<Vec<BigInt>> = generators
        .iter()
        .map(|g| std::iter::once(BigInt::from(1)).chain(g.entries().iter().map(|&x| BigInt::from(x))).collect())
        .collect();
    for i in 0..d {
        let mut r = vec![BigInt::zero(); d + 1];
        r[i + 1] = BigInt::from(1);
        rows.push(r);
    }
    let mut facets: Vec<Facet> = dd::extreme_rays(&rows)
        .into_iter()
        .filter(|y| y[0].is_negative())
        .map(|y| Facet {
            normal: y[1..].iter().map(|x| x.to_i64().expect("facet normal fits in i64")).collect(),
            value: (-&y[0]).to_i64().expect("facet value fits in i64"),
        })
        .collect();
    facets.sort();
    Ok(NewtonPolyhedron { dim: d, facets, generators })
}

impl NewtonPolyhedron {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    fn check_dim(&self, u: &ExponentVector) -> Result<()> {
        if u.dim() != self.dim {
            return Err(Error::DimensionMismatch(self.dim, u.dim()));
        }
        Ok(())
    }

    /// `σ(u) = min ⟨v,u⟩/c` over facets; infinite for the unit ideal.
    pub fn order_value(&self, u: &ExponentVector) -> Result<Extended> {
        self.check_dim(u)?;
        Ok(self.order_unchecked(u.entries()))
    }

    pub(crate) fn order_unchecked(&self, u: &[u32]) -> Extended {
        self.facets
            .iter()
            .map(|f| Rational::new(f.eval(u), f.value))
            .min()
            .map_or(Extended::Infinite, Extended::Finite)
    }

    /// `σ(u) ≥ t` (or `> t` when strict), by integer cross-multiplication.
    pub(crate) fn order_at_least(&self, u: &[u32], t: &ScaledRational, strict: bool) -> bool {
        self.facets.iter().all(|f| {
            let lhs = i128::from(f.eval(u)) * t.den;
            let rhs = t.num * i128::from(f.value);
            if strict {
                lhs > rhs
            } else {
                lhs >= rhs
            }
        })
    }

    /// Check the invariants of a facet description: every generator
    /// satisfies every facet, each facet is a genuine face of codimension
    /// one, and no facet is implied by the others.
    pub fn certify(&self) -> Result<()> {
        let d = self.dim;
        for f in &self.facets {
            if f.value <= 0 || f.normal.iter().any(|&v| v < 0) || f.normal.iter().all(|&v| v == 0) {
                return Err(Error::Precondition(format!("malformed facet {f:?}")));
            }
            if self.generators.iter().any(|g| f.eval(g.entries()) < f.value) {
                return Err(Error::Precondition(format!("generator violates facet {f:?}")));
            }
            // tight generators and recession directions span a hyperplane
            let tight: Vec<&ExponentVector> =
                self.generators.iter().filter(|g| f.eval(g.entries()) == f.value).collect();
            let Some(base) = tight.first() else {
                return Err(Error::Precondition(format!("facet {f:?} touches no generator")));
            };
            let mut span: Vec<Vec<BigInt>> = tight[1..]
                .iter()
                .map(|g| (0..d).map(|i| BigInt::from(i64::from(g[i]) - i64::from(base[i]))).collect())
                .collect();
            for i in 0..d {
                if f.normal[i] == 0 {
                    let mut e = vec![BigInt::zero(); d];
                    e[i] = BigInt::from(1);
                    span.push(e);
                }
            }
            if dd::independent_rows(&span).len() + 1 != d {
                return Err(Error::Precondition(format!("facet {f:?} is not a codimension-one face")));
            }
        }
        for (k, f) in self.facets.iter().enumerate() {
            // minimize ⟨v,w⟩ over the region cut out by the other facets
            let constraints = self
                .facets
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, g)| {
                    Constraint::new(
                        g.normal.iter().map(|&x| Rational::from(x)).collect(),
                        Relation::Ge,
                        Rational::from(g.value),
                    )
                })
                .collect();
            let lp = LinearProgram {
                sense: Sense::Minimize,
                objective: f.normal.iter().map(|&x| Rational::from(x)).collect(),
                constraints,
            };
            let redundant = match simplex_solve(&lp)? {
                LpOutcome::Optimal(o) => o.value >= Rational::from(f.value),
                _ => false,
            };
            if redundant {
                return Err(Error::Precondition(format!("facet {f:?} is redundant")));
            }
        }
        Ok(())
    }
}

/// `t = num/den` with `den > 0`, in machine integers for scan loops.
#[derive(Clone, Copy, Debug)]
pub(crate) struct ScaledRational {
    pub num: i128,
    pub den: i128,
}

impl ScaledRational {
    pub fn new(t: &Rational) -> Result<Self> {
        let (num, den) = t
            .to_i128_pair()
            .ok_or_else(|| Error::Guard(format!("rational {t} too large for a lattice scan")))?;
        Ok(ScaledRational { num, den })
    }
}

/// `σ(u)` through the direct LP `max Σμ_j` subject to `Σ μ_j g_j ≤ u`,
/// `μ ≥ 0`. Independent of the facet description; used as a cross-check.
pub fn order_value_lp(ideal: &MonomialIdeal, u: &ExponentVector) -> Result<Extended> {
    if u.dim() != ideal.dim() {
        return Err(Error::DimensionMismatch(ideal.dim(), u.dim()));
    }
    if ideal.is_unit() {
        return Ok(Extended::Infinite);
    }
    let gens = ideal.generators();
    let constraints = (0..ideal.dim())
        .map(|i| {
            Constraint::new(gens.iter().map(|g| Rational::from(g[i])).collect(), Relation::Le, Rational::from(u[i]))
        })
        .collect();
    let lp = LinearProgram { sense: Sense::Maximize, objective: vec![Rational::one(); gens.len()], constraints };
    match simplex_solve(&lp)? {
        LpOutcome::Optimal(o) => Ok(Extended::Finite(o.value)),
        LpOutcome::Unbounded(_) => Ok(Extended::Infinite),
        LpOutcome::Infeasible(_) => unreachable!("μ = 0 is feasible"),
    }
}

/// Odometer over the box `[0, bound_0] × … × [0, bound_{d-1}]`, split on
/// the first coordinate for parallelism. Returns the selected points in
/// lexicographic order.
pub(crate) fn scan_box<F>(bounds: &[u32], keep: F) -> Result<Vec<ExponentVector>>
where
    F: Fn(&[u32]) -> bool + Sync,
{
    let d = bounds.len();
    let total = bounds.iter().try_fold(1u64, |acc, &b| acc.checked_mul(u64::from(b) + 1));
    match total {
        Some(n) if n <= MAX_SCAN_POINTS => {}
        _ => return Err(Error::Guard(format!("lattice scan box {bounds:?} is too large"))),
    }
    if d == 0 {
        return Ok(if keep(&[]) { vec![ExponentVector::new(Vec::new())] } else { Vec::new() });
    }
    let chunks: Vec<Vec<ExponentVector>> = (0..=bounds[0])
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut u = vec![0u32; d];
            u[0] = first;
            loop {
                if keep(&u) {
                    out.push(ExponentVector::new(u.clone()));
                }
                let mut i = d - 1;
                loop {
                    if i == 0 {
                        return out;
                    }
                    if u[i] < bounds[i] {
                        u[i] += 1;
                        break;
                    }
                    u[i] = 0;
                    i -= 1;
                }
            }
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// Minimal elements of an up-closed lattice set given by `member`, inside
/// a box that contains all of them.
pub(crate) fn minimal_members_in_box<F>(bounds: &[u32], member: F) -> Result<Vec<ExponentVector>>
where
    F: Fn(&[u32]) -> bool + Sync,
{
    scan_box(bounds, |u| {
        if !member(u) {
            return false;
        }
        let mut w = u.to_vec();
        for i in 0..w.len() {
            if w[i] > 0 {
                w[i] -= 1;
                let below = member(&w);
                w[i] += 1;
                if below {
                    return false;
                }
            }
        }
        true
    })
}

impl NewtonPolyhedron {
    /// Box containing every minimal generator of `{σ ≥ t}` and `{σ > t}`:
    /// a minimal generator with `u_i > 0` fails some facet after lowering
    /// `u_i`, which needs `v_i > 0` and bounds `u_i` by `⌊tc/v_i⌋ + 1`.
    fn scan_bounds(&self, t: &ScaledRational) -> Result<Vec<u32>> {
        (0..self.dim)
            .map(|i| {
                let b = self
                    .facets
                    .iter()
                    .filter(|f| f.normal[i] > 0)
                    .map(|f| (t.num * i128::from(f.value)).div_euclid(t.den * i128::from(f.normal[i])) + 1)
                    .max()
                    .unwrap_or(0);
                u32::try_from(b).map_err(|_| Error::Guard(format!("scan bound {b} too large")))
            })
            .collect()
    }

    /// The monomial ideal `{u : σ(u) ≥ t}` (or `> t`).
    pub fn fractional_power(&self, t: &Rational, strict: bool) -> Result<MonomialIdeal> {
        if t.is_negative() {
            return Err(Error::Negative(format!("fractional power exponent {t}")));
        }
        let st = ScaledRational::new(t)?;
        let bounds = self.scan_bounds(&st)?;
        let gens = minimal_members_in_box(&bounds, |u| self.order_at_least(u, &st, strict))?;
        MonomialIdeal::minimalize(gens)
    }
}

/// `I_t = {u : σ(u) ≥ t}` or `I_{>t} = {u : σ(u) > t}`.
pub fn fractional_power(ideal: &MonomialIdeal, t: &Rational, strict: bool) -> Result<MonomialIdeal> {
    newton_polyhedron(ideal)?.fractional_power(t, strict)
}

/// The integral closure `I_1`.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    fractional_power(ideal, &Rational::one(), false)
}

/// `σ_I(u)`.
pub fn order_value(np: &NewtonPolyhedron, u: &ExponentVector) -> Result<Extended> {
    np.order_value(u)
}

/// Facet normals with their values on `I`; these are the monomial Rees
/// valuations.
pub fn rees_valuations(ideal: &MonomialIdeal) -> Result<Vec<Facet>> {
    Ok(newton_polyhedron(ideal)?.facets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(rows.iter().map(|r| r.to_vec())).unwrap()
    }

    fn facets(rows: &[&[u32]]) -> Vec<(Vec<i64>, i64)> {
        newton_polyhedron(&ideal(rows)).unwrap().facets.into_iter().map(|f| (f.normal, f.value)).collect()
    }

    #[test]
    fn facet_examples() {
        assert_eq!(facets(&[&[2, 0], &[0, 3]]), vec![(vec![3, 2], 6)]);
        assert_eq!(facets(&[&[1, 0], &[0, 1]]), vec![(vec![1, 1], 1)]);
        assert_eq!(facets(&[&[1, 0]]), vec![(vec![1, 0], 1)]);
        assert_eq!(facets(&[&[2, 0], &[1, 1], &[0, 2]]), vec![(vec![1, 1], 2)]);
        // (x^4, x y, y^4): two facets through xy
        assert_eq!(facets(&[&[4, 0], &[1, 1], &[0, 4]]), vec![(vec![1, 3], 4), (vec![3, 1], 4)]);
        assert_eq!(facets(&[&[3]]), vec![(vec![1], 3)]);
        assert!(facets(&[&[0, 0]]).is_empty());
    }

    #[test]
    fn non_primary_facets() {
        // (x^2 y, x y^3): facets x ≥ 1, y ≥ 1 and the segment
        let f = facets(&[&[2, 1], &[1, 3]]);
        assert_eq!(f, vec![(vec![0, 1], 1), (vec![1, 0], 1), (vec![2, 1], 5)]);
        let np = newton_polyhedron(&ideal(&[&[2, 1], &[1, 3]])).unwrap();
        np.certify().unwrap();
    }

    #[test]
    fn three_dimensional_facets() {
        let np = newton_polyhedron(&ideal(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        assert_eq!(np.facets.len(), 1);
        assert_eq!(np.facets[0].normal, vec![1, 1, 1]);
        let np = newton_polyhedron(&ideal(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4], &[1, 1, 1]])).unwrap();
        np.certify().unwrap();
        for g in np.generators() {
            assert!(np.order_value(g).unwrap() >= Rational::one());
        }
    }

    #[test]
    fn order_values() {
        let np = newton_polyhedron(&ideal(&[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(np.order_value(&[1, 2].into()).unwrap(), Extended::Finite(Rational::new(7, 6)));
        assert_eq!(np.order_value(&[2, 0].into()).unwrap(), Extended::Finite(Rational::one()));
        let m = newton_polyhedron(&MonomialIdeal::maximal(2)).unwrap();
        assert_eq!(m.order_value(&[3, 0].into()).unwrap(), Extended::Finite(Rational::from(3)));
        let unit = newton_polyhedron(&MonomialIdeal::unit(2)).unwrap();
        assert_eq!(unit.order_value(&[0, 0].into()).unwrap(), Extended::Infinite);
        assert!(np.order_value(&[1, 1, 1].into()).is_err());
    }

    #[test]
    fn lp_order_agrees_on_examples() {
        let i = ideal(&[&[2, 0], &[0, 3]]);
        assert_eq!(order_value_lp(&i, &[1, 2].into()).unwrap(), Extended::Finite(Rational::new(7, 6)));
        assert_eq!(order_value_lp(&i, &[0, 0].into()).unwrap(), Extended::Finite(Rational::zero()));
    }

    #[test]
    fn closures() {
        assert_eq!(integral_closure(&ideal(&[&[2, 0], &[0, 2]])).unwrap(), ideal(&[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(integral_closure(&ideal(&[&[2, 0], &[0, 3]])).unwrap(), ideal(&[&[2, 0], &[1, 2], &[0, 3]]));
        let m = MonomialIdeal::maximal(2);
        assert_eq!(integral_closure(&m).unwrap(), m);
        assert_eq!(integral_closure(&MonomialIdeal::unit(3)).unwrap(), MonomialIdeal::unit(3));
        let i = ideal(&[&[3, 0], &[0, 3]]);
        let c = integral_closure(&i).unwrap();
        assert_eq!(c, ideal(&[&[3, 0], &[2, 1], &[1, 2], &[0, 3]]));
        assert_eq!(integral_closure(&c).unwrap(), c);
    }

    #[test]
    fn fractional_power_examples() {
        let m = MonomialIdeal::maximal(2);
        let m2 = ideal(&[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(fractional_power(&m, &Rational::new(3, 2), false).unwrap(), m2);
        assert_eq!(fractional_power(&m, &Rational::one(), true).unwrap(), m2);
        let i = ideal(&[&[2, 0], &[0, 3]]);
        let strict = fractional_power(&i, &Rational::one(), true).unwrap();
        assert!(!strict.contains_monomial(&[2, 0].into()).unwrap());
        assert!(!strict.contains_monomial(&[0, 3].into()).unwrap());
        assert!(strict.contains_monomial(&[1, 2].into()).unwrap());
        assert_eq!(fractional_power(&i, &Rational::zero(), false).unwrap(), MonomialIdeal::unit(2));
        assert!(matches!(fractional_power(&i, &Rational::new(-1, 2), false), Err(Error::Negative(_))));
    }

    #[test]
    fn rees_examples() {
        let r = rees_valuations(&ideal(&[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"[{"normal":[3,2],"value":"6"}]"#);
    }

    #[test]
    fn dimension_guard() {
        let i = MonomialIdeal::maximal(7);
        assert!(matches!(newton_polyhedron(&i), Err(Error::DimensionTooLarge { .. })));
    }
}
