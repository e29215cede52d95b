use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::QPoly;
use super::CoeffError;

/// A rational function of `q` with rational coefficients in canonical form:
/// numerator and denominator are coprime and the denominator is monic, so two
/// values are equal exactly when their fields are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: QPoly,
    den: QPoly,
}

/// The field operations exposed by [`ratfun_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

/// Applies `op` to `x` and `y` (`y` is ignored for [`ArithOp::Neg`]).
pub fn ratfun_arith(op: ArithOp, x: &RatFun, y: &RatFun) -> Result<RatFun, CoeffError> {
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => x.checked_div(y)?,
        ArithOp::Neg => -x,
    })
}

impl RatFun {
    /// Builds `num / den` and brings it into canonical form.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).unwrap().0, den.div_rem(&g).unwrap().0)
            }
        };
        let lead = den.leading().expect("nonzero denominator").recip();
        RatFun {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn zero() -> Self {
        RatFun {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn q() -> Self {
        Self::from_poly(QPoly::q())
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFun {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(QPoly::from_int(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_poly(QPoly::constant(r))
    }

    /// `n / d` for small integers; panics if `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// `1 - q`, the ubiquitous denominator.
    pub fn one_minus_q() -> Self {
        Self::from_poly(QPoly::from_ints(&[1, -1]))
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a polynomial in `q`.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The constant value, if the function does not depend on `q`.
    pub fn as_constant(&self) -> Option<BigRational> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    pub fn checked_div(&self, rhs: &RatFun) -> Result<RatFun, CoeffError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn recip(&self) -> Result<RatFun, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    /// Integer power; negative exponents invert (and fail on zero).
    pub fn pow(&self, exp: i64) -> Result<RatFun, CoeffError> {
        let base = if exp < 0 { self.recip()? } else { self.clone() };
        let e = u32::try_from(exp.unsigned_abs()).map_err(|_| CoeffError::ExponentTooLarge)?;
        // Powers of a canonical fraction stay coprime with a monic denominator.
        Ok(RatFun {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// `q^exp` for any integer exponent.
    pub fn q_pow(exp: i64) -> RatFun {
        Self::q().pow(exp).expect("q is invertible")
    }

    /// The q-bracket `{n}_q = 1 + q + ... + q^(n-1) = (1 - q^n)/(1 - q)`.
    pub fn qbracket(n: u32) -> RatFun {
        Self::from_poly(QPoly::from_ints(&alloc::vec![1; n as usize]))
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, at: &BigRational) -> Result<BigRational, CoeffError> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(CoeffError::Pole);
        }
        Ok(self.num.eval(at) / d)
    }

    /// Scales numerator and denominator to coprime integer coefficient lists
    /// with a positive leading denominator coefficient. This is a second
    /// canonical encoding used for serialization.
    pub fn integer_parts(&self) -> (alloc::vec::Vec<BigInt>, alloc::vec::Vec<BigInt>) {
        use num_integer::Integer;
        let (ln, gn) = self.num.integer_content();
        let (ld, gd) = self.den.integer_content();
        let lcm = ln.lcm(&ld);
        let scale = BigRational::from_integer(lcm.clone());
        let scaled_gcd = if self.num.is_zero() {
            // 0/1
            return (alloc::vec::Vec::new(), alloc::vec![BigInt::one()]);
        } else {
            (gn * (&lcm / &ln)).gcd(&(gd * (&lcm / &ld)))
        };
        let factor = scale / BigRational::from_integer(scaled_gcd);
        let to_ints = |p: &QPoly| {
            p.coeffs()
                .iter()
                .map(|c| (c * &factor).to_integer())
                .collect::<alloc::vec::Vec<_>>()
        };
        (to_ints(&self.num), to_ints(&self.den))
    }

    /// Inverse of [`RatFun::integer_parts`]; accepts any nonzero denominator.
    pub fn from_integer_parts(num: &[BigInt], den: &[BigInt]) -> Result<RatFun, CoeffError> {
        let lift = |v: &[BigInt]| QPoly::from_coeffs(v.iter().cloned().map(BigRational::from_integer).collect());
        RatFun::new(lift(num), lift(den))
    }
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

/// `p` for polynomials, `(p)/(r)` otherwise.
impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFun::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RatFun::canonical(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from_poly(&self.num * &rhs.num);
        }
        RatFun::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`RatFun::checked_div`] for a fallible
/// version.
impl Div for &RatFun {
    type Output = RatFun;
    fn div(self, rhs: &RatFun) -> RatFun {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &RatFun) -> RatFun {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&RatFun> for RatFun {
    fn add_assign(&mut self, rhs: &RatFun) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RatFun> for RatFun {
    fn sub_assign(&mut self, rhs: &RatFun) {
        *self = &*self - rhs;
    }
}

impl Zero for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
}

impl One for RatFun {
    fn one() -> Self {
        RatFun::one()
    }
}

impl From<i64> for RatFun {
    fn from(n: i64) -> Self {
        RatFun::from_int(n)
    }
}

impl From<QPoly> for RatFun {
    fn from(p: QPoly) -> Self {
        RatFun::from_poly(p)
    }
}
