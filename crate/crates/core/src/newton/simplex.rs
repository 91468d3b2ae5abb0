//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! All variables are nonnegative. Each outcome carries a certificate that
//! can be checked independently of the solver: primal and dual solutions
//! at an optimum, a Farkas vector for infeasibility, a recession ray for
//! unboundedness.

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Size guard on `variables + constraints`.
pub const MAX_LP_SIZE: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        Constraint { coeffs, relation, rhs }
    }

    fn lhs(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum()
    }
}

/// `optimize objective·x` subject to the constraints and `x ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    pub sense: Sense,
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Optimum {
    pub value: Rational,
    pub primal: Vec<Rational>,
    /// One multiplier per constraint with `value = Σ dual_i · rhs_i`.
    pub dual: Vec<Rational>,
}

/// Multipliers `y` with `y_i ≤ 0` on `≤` rows, `y_i ≥ 0` on `≥` rows,
/// `Σ y_i a_i ≤ 0` componentwise and `Σ y_i b_i > 0`; no `x ≥ 0` can
/// satisfy the system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FarkasCertificate {
    pub multipliers: Vec<Rational>,
}

/// A feasible point and a direction of unbounded improvement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnboundedRay {
    pub point: Vec<Rational>,
    pub direction: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(Optimum),
    Infeasible(FarkasCertificate),
    Unbounded(UnboundedRay),
}

impl LpOutcome {
    pub fn optimum(&self) -> Option<&Optimum> {
        match self {
            LpOutcome::Optimal(o) => Some(o),
            _ => None,
        }
    }
}

impl LinearProgram {
    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn is_feasible_point(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars()
            && x.iter().all(|v| !v.is_negative())
            && self.constraints.iter().all(|c| {
                let lhs = c.lhs(x);
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                }
            })
    }

    pub fn objective_at(&self, x: &[Rational]) -> Rational {
        self.objective.iter().zip(x).map(|(a, b)| a * b).sum()
    }
}

impl FarkasCertificate {
    pub fn verify(&self, lp: &LinearProgram) -> bool {
        if self.multipliers.len() != lp.constraints.len() {
            return false;
        }
        let signs_ok = self.multipliers.iter().zip(&lp.constraints).all(|(y, c)| match c.relation {
            Relation::Le => !y.is_positive(),
            Relation::Ge => !y.is_negative(),
            Relation::Eq => true,
        });
        let combo_ok = (0..lp.num_vars()).all(|j| {
            let s: Rational =
                self.multipliers.iter().zip(&lp.constraints).map(|(y, c)| y * &c.coeffs[j]).sum();
            !s.is_positive()
        });
        let rhs: Rational =
            self.multipliers.iter().zip(&lp.constraints).map(|(y, c)| y * &c.rhs).sum();
        signs_ok && combo_ok && rhs.is_positive()
    }
}

impl UnboundedRay {
    pub fn verify(&self, lp: &LinearProgram) -> bool {
        if !lp.is_feasible_point(&self.point) || self.direction.iter().any(|d| d.is_negative()) {
            return false;
        }
        let recession = lp.constraints.iter().all(|c| {
            let s = c.lhs(&self.direction);
            match c.relation {
                Relation::Le => !s.is_positive(),
                Relation::Ge => !s.is_negative(),
                Relation::Eq => s.is_zero(),
            }
        });
        let gain = lp.objective_at(&self.direction);
        let improving = match lp.sense {
            Sense::Maximize => gain.is_positive(),
            Sense::Minimize => gain.is_negative(),
        };
        recession && improving
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    /// reduced costs; last entry is minus the current objective
    cost: Vec<Rational>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = &*v - &(&f * pv);
                }
            }
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for (v, pv) in self.cost.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = &*v - &(&f * pv);
                }
            }
        }
        self.basis[r] = c;
    }

    /// Minimize the current cost row over columns `allowed`. Returns the
    /// entering column that proved unboundedness, if any.
    fn run(&mut self, allowed: &dyn Fn(usize) -> bool) -> Option<usize> {
        loop {
            let entering = (0..self.width).find(|&j| allowed(j) && self.cost[j].is_negative());
            let c = entering?;
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return Some(c),
            }
        }
    }
}

/// Solve the program exactly.
pub fn simplex_solve(lp: &LinearProgram) -> Result<LpOutcome> {
    let n = lp.num_vars();
    let m = lp.constraints.len();
    if n + m > MAX_LP_SIZE {
        return Err(Error::Guard(format!("linear program with {n} variables and {m} constraints")));
    }
    if let Some(c) = lp.constraints.iter().find(|c| c.coeffs.len() != n) {
        return Err(Error::DimensionMismatch(n, c.coeffs.len()));
    }

    // normalize to nonnegative right-hand sides
    let mut sign = Vec::with_capacity(m);
    let mut rel = Vec::with_capacity(m);
    for c in &lp.constraints {
        if c.rhs.is_negative() {
            sign.push(-1i32);
            rel.push(match c.relation {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            });
        } else {
            sign.push(1);
            rel.push(c.relation);
        }
    }

    // columns: structural | one slack/surplus per inequality | artificials
    let mut aux_col = vec![None; m];
    let mut width = n;
    for i in 0..m {
        if rel[i] != Relation::Eq {
            aux_col[i] = Some(width);
            width += 1;
        }
    }
    let mut art_col = vec![None; m];
    let first_art = width;
    for i in 0..m {
        if rel[i] != Relation::Le {
            art_col[i] = Some(width);
            width += 1;
        }
    }

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for (i, c) in lp.constraints.iter().enumerate() {
        let s = Rational::from(sign[i]);
        let mut row = vec![Rational::zero(); width + 1];
        for j in 0..n {
            row[j] = &c.coeffs[j] * &s;
        }
        row[width] = &c.rhs * &s;
        if let Some(a) = aux_col[i] {
            row[a] = if rel[i] == Relation::Le { Rational::one() } else { -Rational::one() };
        }
        match art_col[i] {
            Some(a) => {
                row[a] = Rational::one();
                basis.push(a);
            }
            None => basis.push(aux_col[i].unwrap()),
        }
        rows.push(row);
    }
    // the column whose reduced cost exposes the dual value of row i
    let identity_col: Vec<usize> = (0..m).map(|i| art_col[i].or(aux_col[i]).unwrap()).collect();

    // phase one: minimize the sum of artificials
    let mut cost = vec![Rational::zero(); width + 1];
    for j in first_art..width {
        cost[j] = Rational::one();
    }
    for i in 0..m {
        if art_col[i].is_some() {
            for j in 0..=width {
                cost[j] = &cost[j] - &rows[i][j];
            }
        }
    }
    let mut t = Tableau { rows, cost, basis, width };
    t.run(&|_| true);
    let infeasibility = -t.cost[width].clone();
    if infeasibility.is_positive() {
        let multipliers = (0..m)
            .map(|i| {
                let col = identity_col[i];
                let c = if col >= first_art { Rational::one() } else { Rational::zero() };
                (c - &t.cost[col]) * Rational::from(sign[i])
            })
            .collect();
        return Ok(LpOutcome::Infeasible(FarkasCertificate { multipliers }));
    }

    // drive artificials out of the basis where possible
    for i in 0..m {
        if t.basis[i] >= first_art {
            if let Some(j) = (0..first_art).find(|&j| !t.rows[i][j].is_zero()) {
                t.pivot(i, j);
            }
        }
    }

    // phase two on the minimization form
    let min_cost: Vec<Rational> = lp
        .objective
        .iter()
        .map(|c| if lp.sense == Sense::Maximize { -c.clone() } else { c.clone() })
        .collect();
    let mut cost = vec![Rational::zero(); width + 1];
    cost[..n].clone_from_slice(&min_cost);
    for i in 0..m {
        let b = t.basis[i];
        if b < n && !min_cost[b].is_zero() {
            let cb = min_cost[b].clone();
            for j in 0..=width {
                cost[j] = &cost[j] - &(&cb * &t.rows[i][j]);
            }
        }
    }
    t.cost = cost;
    let unbounded = t.run(&|j| j < first_art);

    let mut primal = vec![Rational::zero(); n];
    for i in 0..m {
        if t.basis[i] < n {
            primal[t.basis[i]] = t.rhs(i).clone();
        }
    }

    if let Some(c) = unbounded {
        let mut direction = vec![Rational::zero(); n];
        if c < n {
            direction[c] = Rational::one();
        }
        for i in 0..m {
            if t.basis[i] < n {
                direction[t.basis[i]] = -t.rows[i][c].clone();
            }
        }
        return Ok(LpOutcome::Unbounded(UnboundedRay { point: primal, direction }));
    }

    let min_value = -t.cost[width].clone();
    let (value, flip) = match lp.sense {
        Sense::Minimize => (min_value, Rational::one()),
        Sense::Maximize => (-min_value, -Rational::one()),
    };
    let dual = (0..m)
        .map(|i| -t.cost[identity_col[i]].clone() * Rational::from(sign[i]) * &flip)
        .collect();
    Ok(LpOutcome::Optimal(Optimum { value, primal, dual }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn check_optimum(lp: &LinearProgram, o: &Optimum) {
        assert!(lp.is_feasible_point(&o.primal));
        assert_eq!(lp.objective_at(&o.primal), o.value);
        let dual_value: Rational = o.dual.iter().zip(&lp.constraints).map(|(y, c)| y * &c.rhs).sum();
        assert_eq!(dual_value, o.value);
    }

    #[test]
    fn max_with_upper_bound() {
        let lp = LinearProgram {
            sense: Sense::Maximize,
            objective: vec![r(1)],
            constraints: vec![Constraint::new(vec![r(1)], Relation::Le, r(1))],
        };
        let out = simplex_solve(&lp).unwrap();
        let o = out.optimum().unwrap();
        assert_eq!(o.value, r(1));
        check_optimum(&lp, o);
    }

    #[test]
    fn equalize_on_segment() {
        // min s with u = λ(2,0) + μ(0,3), λ + μ = 1, u1 ≤ s, u2 ≤ s
        // variables (λ, μ, s)
        let lp = LinearProgram {
            sense: Sense::Minimize,
            objective: vec![r(0), r(0), r(1)],
            constraints: vec![
                Constraint::new(vec![r(1), r(1), r(0)], Relation::Eq, r(1)),
                Constraint::new(vec![r(2), r(0), r(-1)], Relation::Le, r(0)),
                Constraint::new(vec![r(0), r(3), r(-1)], Relation::Le, r(0)),
            ],
        };
        let out = simplex_solve(&lp).unwrap();
        let o = out.optimum().unwrap();
        assert_eq!(o.value, q(6, 5));
        assert_eq!(o.primal, vec![q(3, 5), q(2, 5), q(6, 5)]);
        check_optimum(&lp, o);
    }

    #[test]
    fn infeasible_with_certificate() {
        let lp = LinearProgram {
            sense: Sense::Maximize,
            objective: vec![r(1)],
            constraints: vec![
                Constraint::new(vec![r(1)], Relation::Le, r(0)),
                Constraint::new(vec![r(1)], Relation::Ge, r(1)),
            ],
        };
        match simplex_solve(&lp).unwrap() {
            LpOutcome::Infeasible(cert) => assert!(cert.verify(&lp)),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn unbounded_with_ray() {
        let lp = LinearProgram {
            sense: Sense::Maximize,
            objective: vec![r(1), r(1)],
            constraints: vec![Constraint::new(vec![r(1), r(-1)], Relation::Le, r(2))],
        };
        match simplex_solve(&lp).unwrap() {
            LpOutcome::Unbounded(ray) => assert!(ray.verify(&lp)),
            other => panic!("expected unbounded, got {other:?}"),
        }
    }

    #[test]
    fn negative_rhs_and_degenerate() {
        // min x + y s.t. -x - y ≤ -2, x - y = 0, x ≤ 5
        let lp = LinearProgram {
            sense: Sense::Minimize,
            objective: vec![r(1), r(1)],
            constraints: vec![
                Constraint::new(vec![r(-1), r(-1)], Relation::Le, r(-2)),
                Constraint::new(vec![r(1), r(-1)], Relation::Eq, r(0)),
                Constraint::new(vec![r(1), r(0)], Relation::Le, r(5)),
                Constraint::new(vec![r(2), r(-2)], Relation::Eq, r(0)),
            ],
        };
        let out = simplex_solve(&lp).unwrap();
        let o = out.optimum().unwrap();
        assert_eq!(o.value, r(2));
        check_optimum(&lp, o);
    }

    #[test]
    fn size_guard() {
        let n = MAX_LP_SIZE + 1;
        let lp = LinearProgram { sense: Sense::Maximize, objective: vec![r(0); n], constraints: vec![] };
        assert!(matches!(simplex_solve(&lp), Err(Error::Guard(_))));
    }
}
