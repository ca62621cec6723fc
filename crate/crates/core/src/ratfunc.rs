//! Rational functions in `X` over ℚ(u) and their power series expansions.

use std::fmt;

use crate::error::AlgebraError;
use crate::scalar::BaseScalar;
use crate::series::TruncatedSeries;
use crate::xpoly::XPoly;

/// Reduced fraction `num / den` in canonical form.
///
/// The denominator has constant term 1 whenever its constant term is
/// nonzero, and is monic otherwise.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: XPoly,
    den: XPoly,
}

impl RationalFunction {
    pub fn new(num: XPoly, den: XPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: XPoly, den: XPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = XPoly::gcd(&num, &den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let c0 = den.coeff(0);
        let pivot = if c0.is_zero() {
            den.leading_coeff().unwrap().clone()
        } else {
            c0
        };
        if pivot.is_one() {
            return Self { num, den };
        }
        let inv = pivot.inv().expect("nonzero pivot");
        Self {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn zero() -> Self {
        Self {
            num: XPoly::zero(),
            den: XPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(XPoly::one())
    }

    pub fn from_poly(p: XPoly) -> Self {
        Self {
            num: p,
            den: XPoly::one(),
        }
    }

    pub fn constant(c: BaseScalar) -> Self {
        Self::from_poly(XPoly::constant(c))
    }

    /// `1 / (1 - c·X^d)`
    pub fn geometric(c: BaseScalar, d: usize) -> Self {
        Self::normalize(XPoly::one(), XPoly::one_minus(c, d))
    }

    pub fn numerator(&self) -> &XPoly {
        &self.num
    }

    pub fn denominator(&self) -> &XPoly {
        &self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == XPoly::one() && self.den == XPoly::one()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::normalize(self.num.add(&other.num), self.den.clone());
        }
        Self::normalize(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::normalize(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn scale(&self, c: &BaseScalar) -> Self {
        Self::normalize(self.num.scale(c), self.den.clone())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        if other.num.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalize(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    /// Substitutes `X ↦ X^d`.
    pub fn inflate(&self, d: usize) -> Self {
        Self::normalize(self.num.inflate(d), self.den.inflate(d))
    }

    /// Substitutes `X ↦ c·X`; this is how a shift `s ↦ s + t` acts with
    /// `c = q^{-t}`.
    pub fn rescale_variable(&self, c: &BaseScalar) -> Self {
        Self::normalize(self.num.rescale_variable(c), self.den.rescale_variable(c))
    }

    /// Equality by cross multiplication, independent of canonical form.
    pub fn cross_eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// Power series expansion up to and including `X^order`.
    pub fn expand(&self, order: usize) -> Result<TruncatedSeries, AlgebraError> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(AlgebraError::NotExpandable);
        }
        let d0_inv = d0.inv()?;
        let den = self.den.coeffs();
        let mut out: Vec<BaseScalar> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.num.coeff(n);
            for (j, dj) in den.iter().enumerate().skip(1).take(n) {
                if !dj.is_zero() {
                    acc = &acc - &(dj * &out[n - j]);
                }
            }
            out.push(if d0_inv.is_one() { acc } else { &acc * &d0_inv });
        }
        Ok(TruncatedSeries::new(out))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::ratfunc_text(self))
    }
}
