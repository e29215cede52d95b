use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Sub};

use crate::algebra::Element;
use crate::coeff::RatFun;

/// A Laurent polynomial in `D`, the Calkin image of `B`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, RatFun>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c * D^exp`.
    pub fn monomial(c: RatFun, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(c, exp);
        p
    }

    pub fn add_term(&mut self, c: RatFun, exp: i64) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&exp) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(exp, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> RatFun {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &RatFun)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(c.clone(), e);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(-c, e);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*D^{e}")?;
        }
        Ok(())
    }
}

/// The image of `x` modulo compact operators: words with `C` vanish,
/// `B^l -> D^l` and `A^l -> (1 - q)^-l D^-l`.
pub fn calkin_image(x: &Element) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (w, c) in x.terms() {
        if w.k() >= 1 {
            continue;
        }
        if w.a() > 0 {
            let scale = RatFun::one_minus_q().pow(-(w.a() as i64)).expect("1 - q is invertible");
            out.add_term(c * &scale, -(w.a() as i64));
        } else {
            out.add_term(c.clone(), w.b() as i64);
        }
    }
    out
}
