//! Exact elements of the base field ℚ(u), `u = q^{1/2}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::upoly::{Rational, UPoly};

/// An element of ℚ(u) in canonical form.
///
/// The numerator and denominator are coprime and the denominator is monic,
/// so two scalars are equal exactly when their fields are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BaseScalar {
    num: UPoly,
    den: UPoly,
}

impl BaseScalar {
    pub fn zero() -> Self {
        Self {
            num: UPoly::zero(),
            den: UPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self {
            num: UPoly::one(),
            den: UPoly::one(),
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self {
            num: UPoly::constant(c),
            den: UPoly::one(),
        }
    }

    pub fn from_poly(p: UPoly) -> Self {
        Self {
            num: p,
            den: UPoly::one(),
        }
    }

    /// `u^e` for any integer `e`.
    pub fn u_pow(e: i64) -> Self {
        let mag = u32::try_from(e.unsigned_abs()).expect("exponent out of range");
        if e >= 0 {
            Self {
                num: UPoly::monomial(mag, Rational::one()),
                den: UPoly::one(),
            }
        } else {
            Self {
                num: UPoly::one(),
                den: UPoly::monomial(mag, Rational::one()),
            }
        }
    }

    /// `q^e = u^{2e}`.
    pub fn q_pow(e: i64) -> Self {
        Self::u_pow(2 * e)
    }

    /// Normalizes `num / den`.
    pub fn from_parts(num: UPoly, den: UPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: UPoly, den: UPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = UPoly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.recip();
            Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numerator(&self) -> &UPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Value at `u = x`, or `None` when the denominator vanishes there.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let den = self.den.eval(x);
        if den.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / den)
        }
    }

    /// When the denominator is a power of `u`, returns it as `u^k`.
    pub fn laurent_shift(&self) -> Option<u32> {
        self.den.as_monomial().map(|(e, _)| e)
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalize(
            self.num.mul(&rhs.den),
            self.den.mul(&rhs.num),
        ))
    }

    pub fn pow(&self, e: i64) -> Result<Self, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &sq;
            }
            exp >>= 1;
            if exp > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Self::normalize(self.num.add(&rhs.num), self.den.clone());
        }
        Self::normalize(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self {
                num: self.num.mul(&rhs.num),
                den: UPoly::one(),
            };
        }
        Self::normalize(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    /// Terms `(exponent of u, coefficient)` of the scalar as a Laurent
    /// polynomial, when the denominator is a power of `u`.
    pub fn laurent_terms(&self) -> Option<Vec<(i64, Rational)>> {
        let shift = self.laurent_shift()? as i64;
        Some(
            self.num
                .terms()
                .map(|(e, c)| (e as i64 - shift, c.clone()))
                .collect(),
        )
    }
}

impl Default for BaseScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl Zero for BaseScalar {
    fn zero() -> Self {
        BaseScalar::zero()
    }
    fn is_zero(&self) -> bool {
        BaseScalar::is_zero(self)
    }
}

impl One for BaseScalar {
    fn one() -> Self {
        BaseScalar::one()
    }
}

impl Add<&BaseScalar> for &BaseScalar {
    type Output = BaseScalar;
    fn add(self, rhs: &BaseScalar) -> BaseScalar {
        self.add_ref(rhs)
    }
}

impl Add for BaseScalar {
    type Output = BaseScalar;
    fn add(self, rhs: BaseScalar) -> BaseScalar {
        self.add_ref(&rhs)
    }
}

impl Sub<&BaseScalar> for &BaseScalar {
    type Output = BaseScalar;
    fn sub(self, rhs: &BaseScalar) -> BaseScalar {
        self.add_ref(&-rhs)
    }
}

impl Sub for BaseScalar {
    type Output = BaseScalar;
    fn sub(self, rhs: BaseScalar) -> BaseScalar {
        &self - &rhs
    }
}

impl Mul<&BaseScalar> for &BaseScalar {
    type Output = BaseScalar;
    fn mul(self, rhs: &BaseScalar) -> BaseScalar {
        self.mul_ref(rhs)
    }
}

impl Mul for BaseScalar {
    type Output = BaseScalar;
    fn mul(self, rhs: BaseScalar) -> BaseScalar {
        self.mul_ref(&rhs)
    }
}

impl Neg for &BaseScalar {
    type Output = BaseScalar;
    fn neg(self) -> BaseScalar {
        BaseScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for BaseScalar {
    type Output = BaseScalar;
    fn neg(self) -> BaseScalar {
        -&self
    }
}

impl std::iter::Sum for BaseScalar {
    fn sum<I: Iterator<Item = BaseScalar>>(iter: I) -> Self {
        iter.fold(BaseScalar::zero(), |acc, x| &acc + &x)
    }
}

impl std::iter::Product for BaseScalar {
    fn product<I: Iterator<Item = BaseScalar>>(iter: I) -> Self {
        iter.fold(BaseScalar::one(), |acc, x| &acc * &x)
    }
}

impl fmt::Display for BaseScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::scalar_text(self))
    }
}

impl fmt::Debug for BaseScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BaseScalar({self})")
    }
}
