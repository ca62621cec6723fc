//! Dense polynomials in `X = q^{-s}` with coefficients in ℚ(u).

use num_traits::Zero;

use crate::scalar::BaseScalar;
use crate::upoly::Rational;

/// Coefficients in ascending powers of `X`, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct XPoly {
    coeffs: Vec<BaseScalar>,
}

impl XPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BaseScalar::one())
    }

    pub fn constant(c: BaseScalar) -> Self {
        Self::new(vec![c])
    }

    /// `c · X^k`
    pub fn monomial(k: usize, c: BaseScalar) -> Self {
        let mut coeffs = vec![BaseScalar::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `1 - c · X^k`
    pub fn one_minus(c: BaseScalar, k: usize) -> Self {
        Self::one().sub(&Self::monomial(k, c))
    }

    pub fn new(mut coeffs: Vec<BaseScalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BaseScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BaseScalar {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BaseScalar> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BaseScalar) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BaseScalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Self::new(out)
    }

    /// Substitutes `X ↦ X^d`.
    pub fn inflate(&self, d: usize) -> Self {
        assert!(d >= 1);
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BaseScalar::zero(); (self.coeffs.len() - 1) * d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * d] = c.clone();
        }
        Self::new(out)
    }

    /// Substitutes `X ↦ c·X`.
    pub fn rescale_variable(&self, c: &BaseScalar) -> Self {
        let mut power = BaseScalar::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &power);
            power = &power * c;
        }
        Self::new(out)
    }

    /// Euclidean division over the base field. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.leading_coeff().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BaseScalar::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let factor = top * &lc_inv;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&factor * dc);
            }
            quot[i] = factor;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn make_monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv().unwrap()),
            _ => self.clone(),
        }
    }

    /// Monic gcd over ℚ(u).
    ///
    /// Euclid over ℚ(u) swells coefficients quickly, so coprimality is first
    /// tested at a rational point `u = u0` where both leading coefficients
    /// survive: the specialized gcd has degree at least that of the true one,
    /// and a constant specialized gcd settles the question exactly.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() || b.is_zero() {
            return if a.is_zero() { b.make_monic() } else { a.make_monic() };
        }
        if coprime_at_some_point(a, b) {
            return Self::one();
        }
        let mut a = a.make_monic();
        let mut b = b.make_monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.make_monic();
        }
        a
    }

    /// Lowest power of `X` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

/// Candidate specialization points for [`XPoly::gcd`].
const PROBES: [(i64, i64); 4] = [(1009, 1), (7919, 13), (-104_729, 17), (65_537, 3)];

fn specialize(p: &XPoly, u0: &Rational) -> Option<Vec<Rational>> {
    let coeffs = p.coeffs.iter().map(|c| c.eval(u0)).collect::<Option<Vec<_>>>()?;
    (!coeffs.last()?.is_zero()).then_some(coeffs)
}

/// Degree of the gcd of two dense polynomials over ℚ.
fn rational_gcd_degree(mut a: Vec<Rational>, mut b: Vec<Rational>) -> usize {
    let trim = |v: &mut Vec<Rational>| {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let lead = b.last().unwrap().clone();
        while a.len() >= b.len() {
            let f = a.last().unwrap() / &lead;
            let off = a.len() - b.len();
            for (j, c) in b.iter().enumerate() {
                a[off + j] -= &f * c;
            }
            a.pop();
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

fn coprime_at_some_point(a: &XPoly, b: &XPoly) -> bool {
    PROBES.iter().any(|&(n, d)| {
        let u0 = Rational::new(n.into(), d.into());
        match (specialize(a, &u0), specialize(b, &u0)) {
            (Some(x), Some(y)) => rational_gcd_degree(x, y) == 0,
            _ => false,
        }
    })
}
