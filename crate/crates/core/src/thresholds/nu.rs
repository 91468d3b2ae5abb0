//! `ν_𝔞^J(q) = max{n : 𝔞^n ⊄ J^[q]}`.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::monomial::ExponentVector;
use crate::monomial_ideal::MonomialIdeal;
use crate::parse::Ideal;
use crate::poly::{inv_mod, PolynomialFp};

/// Largest Frobenius exponent `q = p^e` accepted.
pub const MAX_Q: u64 = 1 << 20;

/// Node budget for the monomial search.
pub const MAX_SEARCH_NODES: u64 = 500_000_000;

/// Largest power tried when certifying `𝔞 ⊆ √J` on the general path.
pub const RADICAL_POWER_BOUND: u64 = 64;

/// Cap on the dimension of the spans tracked on the general path.
pub const MAX_SPAN: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Nu {
    Finite(u64),
    /// `𝔞 ⊄ √J`: every power of `𝔞` escapes `J^[q]`.
    Infinite,
}

impl Nu {
    pub fn finite(self) -> Option<u64> {
        match self {
            Nu::Finite(n) => Some(n),
            Nu::Infinite => None,
        }
    }
}

impl std::fmt::Display for Nu {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Nu::Finite(n) => write!(f, "{n}"),
            Nu::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Nu {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Nu::Finite(n) => s.serialize_u64(*n),
            Nu::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// `p^e`, guarded by [`MAX_Q`].
pub fn frobenius_exponent(p: u64, e: u32) -> Result<u64> {
    let mut q: u64 = 1;
    for _ in 0..e {
        q = q.checked_mul(p).filter(|&q| q <= MAX_Q).ok_or_else(|| {
            Error::Guard(format!("q = {p}^{e} exceeds the supported bound {MAX_Q}"))
        })?;
    }
    Ok(q)
}

/// `ν` for ideals given by generators; monomial inputs take the
/// combinatorial path, anything else goes through Gröbner normal forms.
pub fn nu(a: &Ideal, j: &Ideal, e: u32) -> Result<Nu> {
    a.check_same_ring(j)?;
    let q = frobenius_exponent(a.p, e)?;
    let a_zero = a.generators.iter().all(|g| g.is_zero());
    let j_zero = j.generators.iter().all(|g| g.is_zero());
    if j.is_monomial() && !j_zero {
        let jm = j.to_monomial()?;
        if jm.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if a_zero {
            return Ok(Nu::Finite(0));
        }
        if a.is_monomial() {
            return nu_monomial(&a.to_monomial()?, &jm, q);
        }
    }
    if a_zero {
        return Ok(Nu::Finite(0));
    }
    if j_zero {
        return Ok(Nu::Infinite);
    }
    nu_general(a, j, q)
}

/// `ν` for monomial ideals at a given `q`.
pub fn nu_monomial(a: &MonomialIdeal, j: &MonomialIdeal, q: u64) -> Result<Nu> {
    if a.dim() != j.dim() {
        return Err(Error::DimensionMismatch(a.dim(), j.dim()));
    }
    if q == 0 || q > MAX_Q {
        return Err(Error::Guard(format!("q = {q} outside 1..={MAX_Q}")));
    }
    if j.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !j.radical_contains(a)? {
        return Ok(Nu::Infinite);
    }
    let search = MonomialSearch::new(a, j, q);
    search.run().map(Nu::Finite)
}

/// Maximize `Σ m_k` over multiplicity vectors with `Σ m_k g_k ∉ J^[q]`.
/// Membership is monotone in `m`, so each coordinate ranges over an
/// initial segment and the last one is solved in closed form.
struct MonomialSearch {
    gens: Vec<Vec<u64>>,
    bracket: Vec<Vec<u64>>,
    nodes: AtomicU64,
}

impl MonomialSearch {
    fn new(a: &MonomialIdeal, j: &MonomialIdeal, q: u64) -> Self {
        let mut gens: Vec<Vec<u64>> =
            a.generators().iter().map(|g| g.entries().iter().map(|&x| u64::from(x)).collect()).collect();
        // large generators first; the cheapest one is solved in closed form
        gens.sort_by(|x, y| y.iter().sum::<u64>().cmp(&x.iter().sum::<u64>()).then(y.cmp(x)));
        let bracket =
            j.generators().iter().map(|b| b.entries().iter().map(|&x| q * u64::from(x)).collect()).collect();
        MonomialSearch { gens, bracket, nodes: AtomicU64::new(0) }
    }

    /// Largest `m` with `s + m·g ∉ J^[q]`; `None` when `s` is already in.
    fn max_extra(&self, s: &[u64], g: &[u64]) -> Option<u64> {
        let mut best = u64::MAX;
        for b in &self.bracket {
            let mut room: Option<u64> = None;
            for i in 0..s.len() {
                if s[i] < b[i] {
                    let r = (b[i] - 1 - s[i]).checked_div(g[i]).unwrap_or(u64::MAX);
                    room = Some(room.map_or(r, |x: u64| x.max(r)));
                }
            }
            best = best.min(room?);
        }
        Some(best)
    }

    fn dfs(&self, k: usize, s: &mut Vec<u64>, count: u64) -> Result<u64> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) > MAX_SEARCH_NODES {
            return Err(Error::Guard(format!("ν search exceeded {MAX_SEARCH_NODES} nodes")));
        }
        let g = &self.gens[k];
        let Some(top) = self.max_extra(s, g) else { return Ok(0) };
        debug_assert!(top < u64::MAX, "radical precondition violated");
        if k + 1 == self.gens.len() {
            return Ok(count + top);
        }
        let mut best = count;
        for m in 0..=top {
            best = best.max(self.dfs(k + 1, s, count + m)?);
            for (x, y) in s.iter_mut().zip(g) {
                *x += y;
            }
        }
        for (x, y) in s.iter_mut().zip(g) {
            *x -= y * (top + 1);
        }
        Ok(best)
    }

    fn run(&self) -> Result<u64> {
        let d = self.gens[0].len();
        let zero = vec![0u64; d];
        let first = &self.gens[0];
        let top = self.max_extra(&zero, first).expect("J is proper");
        if self.gens.len() == 1 {
            return Ok(top);
        }
        (0..=top)
            .into_par_iter()
            .map(|m| {
                let mut s: Vec<u64> = first.iter().map(|x| x * m).collect();
                self.dfs(1, &mut s, m)
            })
            .try_reduce(|| 0, |x, y| Ok(x.max(y)))
    }
}

/// Row-echelon span of polynomials over `F_p`, keyed by leading exponent;
/// every stored vector is monic.
struct Span {
    p: u64,
    rows: BTreeMap<ExponentVector, PolynomialFp>,
}

impl Span {
    fn new(p: u64) -> Self {
        Span { p, rows: BTreeMap::new() }
    }

    /// Insert `v`, returning whether the span grew.
    fn insert(&mut self, mut v: PolynomialFp) -> bool {
        loop {
            let Some((lead, c)) = v.leading_term().map(|(e, c)| (e.clone(), c)) else { return false };
            match self.rows.get(&lead) {
                Some(row) => {
                    v = v.try_sub(&row.scale(c)).expect("same ring");
                }
                None => {
                    let inv = inv_mod(c, self.p);
                    v = v.scale(inv);
                    self.rows.insert(lead, v);
                    return true;
                }
            }
        }
    }

    fn len(&self) -> usize {
        self.rows.len()
    }
}

/// Smallest `k ≤ bound` with `f^k ∈ J`.
fn nilpotency(f: &PolynomialFp, gb: &GroebnerBasis, bound: u64) -> Result<Option<u64>> {
    let mut power = PolynomialFp::one(f.characteristic(), f.dim());
    for k in 1..=bound {
        power = gb.normal_form(&power.try_mul(f)?)?;
        if power.is_zero() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// General path: track `V_n = span nf(𝔞^n)` modulo a Gröbner basis of
/// `J^[q]`, since `nf(h·f) = nf(nf(h)·f)`. `ν` is the last `n` with
/// `V_n ≠ 0`.
fn nu_general(a: &Ideal, j: &Ideal, q: u64) -> Result<Nu> {
    let p = a.p;
    let gens_j: Vec<PolynomialFp> = j.generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    let gens_a: Vec<PolynomialFp> = a.generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    let gb_j = buchberger(&gens_j)?;
    if gb_j.is_unit_ideal() {
        return Err(Error::UnitIdeal);
    }
    let mut l = 1u64;
    for f in &gens_a {
        match nilpotency(f, &gb_j, RADICAL_POWER_BOUND)? {
            Some(k) => l += k - 1,
            None => return Ok(Nu::Infinite),
        }
    }
    // 𝔞^l ⊆ J and J^{n_J(q-1)+1} ⊆ J^[q]
    let n_j = gens_j.len() as u64;
    let cap = l * (n_j * (q - 1) + 1);

    let q32 = u32::try_from(q).map_err(|_| Error::Guard(format!("q = {q} too large")))?;
    let bracket: Vec<PolynomialFp> = gens_j.iter().map(|g| g.frobenius(q32)).collect();
    let gb = buchberger(&bracket)?;
    let mut current = Span::new(p);
    current.insert(gb.normal_form(&PolynomialFp::one(p, a.dim()))?);
    let mut n = 0u64;
    loop {
        let mut next = Span::new(p);
        for v in current.rows.values() {
            for f in &gens_a {
                next.insert(gb.normal_form(&v.try_mul(f)?)?);
                if next.len() > MAX_SPAN {
                    return Err(Error::Guard(format!("span of 𝔞^{} exceeded {MAX_SPAN}", n + 1)));
                }
            }
        }
        if next.len() == 0 {
            return Ok(Nu::Finite(n));
        }
        n += 1;
        if n >= cap {
            return Err(Error::Guard(format!("ν exceeded its certified bound {cap}")));
        }
        current = next;
    }
}
