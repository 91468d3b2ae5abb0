//! Seeded generators of monomial ideals for the verification suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::monomial::ExponentVector;
use crate::monomial_ideal::MonomialIdeal;
use crate::newton::integral_closure;

pub const DEFAULT_SEED: u64 = 0x5eed_f00d;

pub struct Corpus {
    rng: ChaCha8Rng,
}

impl Corpus {
    pub fn new(seed: u64) -> Self {
        Corpus { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn exponent(&mut self, dim: usize, max_exp: u32) -> ExponentVector {
        ExponentVector::new((0..dim).map(|_| self.rng.gen_range(0..=max_exp)).collect())
    }

    fn nonzero_exponent(&mut self, dim: usize, max_exp: u32) -> ExponentVector {
        loop {
            let e = self.exponent(dim, max_exp);
            if !e.is_zero() {
                return e;
            }
        }
    }

    /// A proper monomial ideal with between 1 and `max_gens` generators.
    pub fn ideal(&mut self, dim: usize, max_gens: usize, max_exp: u32) -> MonomialIdeal {
        let k = self.rng.gen_range(1..=max_gens);
        let gens = (0..k).map(|_| self.nonzero_exponent(dim, max_exp)).collect();
        MonomialIdeal::minimalize(gens).expect("nonempty")
    }

    /// Pure powers of every variable plus up to `extra` mixed monomials.
    pub fn m_primary(&mut self, dim: usize, extra: usize, max_exp: u32) -> MonomialIdeal {
        let mut gens: Vec<ExponentVector> =
            (0..dim).map(|i| ExponentVector::unit(dim, i).scale(self.rng.gen_range(1..=max_exp))).collect();
        let k = self.rng.gen_range(0..=extra);
        gens.extend((0..k).map(|_| self.nonzero_exponent(dim, max_exp)));
        MonomialIdeal::minimalize(gens).expect("nonempty")
    }

    pub fn parameter_exponents(&mut self, n: usize, max_exp: u32) -> Vec<u32> {
        (0..n).map(|_| self.rng.gen_range(1..=max_exp)).collect()
    }

    /// `I ⊇ J = (x_i^{a_i})`: `J` plus monomials drawn either from `J̄`
    /// (keeping the closures equal) or from outside it.
    pub fn theorem_c_pair(&mut self, dim: usize, max_exp: u32) -> (MonomialIdeal, Vec<u32>) {
        let exps = self.parameter_exponents(dim, max_exp);
        let j = MonomialIdeal::parameter(&exps, dim).expect("valid parameters");
        let closure = integral_closure(&j).expect("closure");
        let mut gens = j.generators().to_vec();
        let inside = self.rng.gen_bool(0.5);
        let k = self.rng.gen_range(1..=2);
        for _ in 0..k {
            if inside {
                gens.push(closure.generators().choose(&mut self.rng).expect("nonempty").clone());
            } else if let Some(e) = (0..64)
                .map(|_| self.nonzero_exponent(dim, max_exp))
                .find(|e| !closure.contains_monomial(e).expect("same dimension"))
            {
                gens.push(e);
            }
        }
        (MonomialIdeal::minimalize(gens).expect("nonempty"), exps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a: Vec<MonomialIdeal> = (0..5).map(|_| Corpus::new(7).ideal(3, 4, 3)).collect();
        assert!(a.windows(2).all(|w| w[0] == w[1]));
        let mut c = Corpus::new(1);
        for _ in 0..20 {
            assert!(c.m_primary(3, 2, 4).is_m_primary());
            let (i, exps) = c.theorem_c_pair(2, 4);
            let j = MonomialIdeal::parameter(&exps, 2).unwrap();
            assert!(i.contains_ideal(&j).unwrap());
        }
    }
}
