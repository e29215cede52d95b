use crate::algebra::Element;
use crate::coeff::RatFun;

use super::decompose::is_lie_polynomial;
use super::ket::{apply_symbolic, KetImage};
use super::LieError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PowerSide {
    /// `Z = A^l`
    A,
    /// `Z = B^l`
    B,
}

/// A Lie polynomial `Y` with `(c Z - Y) Phi_n = 0`, where `Z` is `A^l` or
/// `B^l`:
///
/// * `Z = B^l`: `Y = c q^(-kn) B^l C^k`, since `C^k Phi_n = q^(kn) Phi_n`;
/// * `Z = A^l`: `Y = c q^(k(l-n)) C^k A^l`, using `A^l C^k = q^(kl) C^k A^l`.
pub fn lie_surrogate(c: &RatFun, side: PowerSide, l: u32, n: u32, k: u32) -> Result<Element, LieError> {
    if l < 2 {
        return Err(LieError::InvalidParameter("l must be at least 2"));
    }
    if k < 1 {
        return Err(LieError::InvalidParameter("k must be at least 1"));
    }
    let (k, l, n) = (k as i64, l as i64, n as i64);
    let y = match side {
        PowerSide::B => Element::monomial(l as u32, k as u32, 0).scale(&(c * &RatFun::q_pow(-k * n))),
        PowerSide::A => Element::monomial(0, k as u32, l as u32).scale(&(c * &RatFun::q_pow(k * (l - n)))),
    };
    debug_assert!(is_lie_polynomial(&y));
    Ok(y)
}

/// `(c Z - Y) Phi_n`; zero by construction.
pub fn surrogate_residual(c: &RatFun, side: PowerSide, l: u32, n: u32, k: u32) -> Result<KetImage, LieError> {
    let y = lie_surrogate(c, side, l, n, k)?;
    let z = match side {
        PowerSide::A => Element::monomial(0, 0, l),
        PowerSide::B => Element::monomial(l, 0, 0),
    };
    Ok(apply_symbolic(&(&z.scale(c) - &y), n as u64))
}
