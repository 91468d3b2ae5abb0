//! Exact computation of F-thresholds, Newton polyhedra, integral closures,
//! fractional powers, Rees valuations, monomial test ideals and jumping
//! numbers for ideals of `F_p[x_1, …, x_d]`.

pub mod corpus;
pub mod error;
pub mod groebner;
pub mod monomial;
pub mod monomial_ideal;
pub mod newton;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod testideal;
pub mod thresholds;

pub use error::{Error, Result};
pub use monomial::ExponentVector;
pub use monomial_ideal::MonomialIdeal;
pub use newton::{
    complement_volume, fractional_power, integral_closure, multiplicity, newton_polyhedron, order_value,
    order_value_lp, rees_valuations, Facet, NewtonPolyhedron,
};
pub use parse::{parse_ideal_spec, Ideal, IdealSpec};
pub use poly::PolynomialFp;
pub use rational::{Extended, Rational};
pub use testideal::{crosscheck_thresholds_equal_jumps, jumping_numbers, test_ideal, JumpingSpectrum};
pub use thresholds::{monomial_threshold_exact, nu, threshold, Nu, ThresholdEstimate};
