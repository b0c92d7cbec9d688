//! Exact polynomial and jet arithmetic over the rationals.

mod monomial;
mod parse;
mod poly;
mod real;
mod span;

pub use monomial::{count_of_degree, var_names, Monomial, MonomialOrder};
pub use parse::{parse_poly, parse_poly_list, parse_rat};
pub use poly::{int, partial, poly_compose, poly_mul, rat, rat_to_f64, Jet, Poly};
pub use real::RealJet;
pub use span::{quotient_complement, span_of, span_of_with, GradedSpan, LinearSpan};

/// Exact rational with arbitrary-precision numerator and denominator.
pub type Rat = num::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JetError {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("substituted component has a nonzero constant term under finite truncation")]
    NonzeroConstant,
    #[error("degree range mismatch: need [{}, {}], have [{}, {}]", need.0, need.1, have.0, have.1)]
    RangeMismatch { need: (u32, u32), have: (u32, u32) },
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
