//! Exact coefficient field: rational functions of `q` over the rationals.

mod poly;
mod ratfun;

pub use poly::QPoly;
pub use ratfun::{ratfun_arith, ArithOp, RatFun};

use num_rational::BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    Pole,
    #[error("exponent too large")]
    ExponentTooLarge,
}

/// The q-bracket `{n}_q`.
pub fn qbracket(n: u32) -> RatFun {
    RatFun::qbracket(n)
}

/// Exact evaluation of `x` at the rational point `q0`.
pub fn ratfun_eval(x: &RatFun, q0: &BigRational) -> Result<BigRational, CoeffError> {
    x.eval(q0)
}
