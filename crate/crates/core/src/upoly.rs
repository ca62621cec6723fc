//! Sparse univariate polynomials over ℚ in the variable `u`, where `u`
//! stands for the square root of the residue field cardinality.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// A polynomial in `u` with rational coefficients.
///
/// Only nonzero coefficients are stored, so the zero polynomial is the empty
/// map and structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: BTreeMap<u32, Rational>,
}

impl UPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: u32, c: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (u32, Rational)>>(terms: I) -> Self {
        let mut coeffs: BTreeMap<u32, Rational> = BTreeMap::new();
        for (e, c) in terms {
            *coeffs.entry(e).or_insert_with(Rational::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Smallest exponent carrying a nonzero coefficient.
    pub fn low_degree(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.values().next_back()
    }

    pub fn coeff(&self, exp: u32) -> Rational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Value at a rational point, by Horner's rule over the sparse terms.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut prev = match self.degree() {
            Some(d) => d,
            None => return acc,
        };
        for (e, c) in self.coeffs.iter().rev() {
            for _ in *e..prev {
                acc *= x;
            }
            acc += c;
            prev = *e;
        }
        for _ in 0..prev {
            acc *= x;
        }
        acc
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &Rational)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Returns `(exp, coeff)` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(u32, &Rational)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &other.coeffs {
            let entry = coeffs.entry(*e).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(e);
            }
        }
        Self { coeffs }
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs: BTreeMap<u32, Rational> = BTreeMap::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                *coeffs.entry(e1 + e2).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { coeffs }
    }

    /// Multiplies by `u^k`.
    pub fn shift_up(&self, k: u32) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Divides by `u^k`; every exponent must be at least `k`.
    pub fn shift_down(&self, k: u32) -> Self {
        debug_assert!(self.low_degree().is_none_or(|lo| lo >= k));
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e - k, c.clone())).collect(),
        }
    }

    pub fn make_monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("polynomial division by zero");
        if let Some((e, c)) = divisor.as_monomial() {
            let inv = c.recip();
            let mut q = BTreeMap::new();
            let mut r = BTreeMap::new();
            for (ea, ca) in &self.coeffs {
                if *ea >= e {
                    q.insert(ea - e, ca * &inv);
                } else {
                    r.insert(*ea, ca.clone());
                }
            }
            return (Self { coeffs: q }, Self { coeffs: r });
        }
        let lc_inv = divisor.leading_coeff().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot: BTreeMap<u32, Rational> = BTreeMap::new();
        while let Some((&re, rc)) = rem.iter().next_back() {
            if re < dd {
                break;
            }
            let factor = rc * &lc_inv;
            let shift = re - dd;
            for (de, dc) in &divisor.coeffs {
                let entry = rem.entry(de + shift).or_insert_with(Rational::zero);
                *entry -= &factor * dc;
                if entry.is_zero() {
                    rem.remove(&(de + shift));
                }
            }
            quot.insert(shift, factor);
        }
        (Self { coeffs: quot }, Self { coeffs: rem })
    }

    /// Division that is known to be exact.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    ///
    /// Powers of `u` are split off first, then the primitive-part remainder
    /// sequence runs over ℤ[u].
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.make_monic();
        }
        if b.is_zero() {
            return a.make_monic();
        }
        let la = a.low_degree().unwrap();
        let lb = b.low_degree().unwrap();
        let common = la.min(lb);
        let a = a.shift_down(la);
        let b = b.shift_down(lb);
        if a.degree() == Some(0) || b.degree() == Some(0) {
            return Self::monomial(common, Rational::one());
        }
        let g = primitive_gcd(&to_integer_dense(&a), &to_integer_dense(&b));
        from_integer_dense(&g).make_monic().shift_up(common)
    }
}

/// Clears denominators and returns the primitive integer coefficient vector
/// (ascending powers).
fn to_integer_dense(p: &UPoly) -> Vec<BigInt> {
    let deg = p.degree().unwrap_or(0) as usize;
    let lcm = p
        .coeffs
        .values()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut dense = vec![BigInt::zero(); deg + 1];
    for (e, c) in &p.coeffs {
        dense[*e as usize] = c.numer() * (&lcm / c.denom());
    }
    primitive_part(dense)
}

fn from_integer_dense(v: &[BigInt]) -> UPoly {
    UPoly::from_terms(
        v.iter()
            .enumerate()
            .map(|(i, c)| (i as u32, Rational::from_integer(c.clone()))),
    )
}

fn trim(v: &mut Vec<BigInt>) {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn primitive_part(mut v: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut v);
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        return v;
    }
    for c in v.iter_mut() {
        *c = &*c / &content;
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        for c in v.iter_mut() {
            *c = -&*c;
        }
    }
    v
}

fn is_zero_dense(v: &[BigInt]) -> bool {
    v.iter().all(|c| c.is_zero())
}

/// Pseudo-remainder of `a` by `b` over ℤ.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    trim(&mut r);
    while !is_zero_dense(&r) && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

fn primitive_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = if a.len() >= b.len() {
        (a.to_vec(), b.to_vec())
    } else {
        (b.to_vec(), a.to_vec())
    };
    while !is_zero_dense(&b) {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive_part(r);
    }
    primitive_part(a)
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(e, c)| format!("({c})u^{e}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
