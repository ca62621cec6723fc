//! Power series in `X` truncated at an explicit order.

use crate::scalar::BaseScalar;

/// Coefficients of `X^0 ..= X^order`.
///
/// Binary operations work at the smaller of the two orders; nothing widens
/// the order implicitly.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<BaseScalar>,
}

/// Outcome of comparing two series up to their common order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SeriesComparison {
    pub compared_order: usize,
    pub first_mismatch: Option<usize>,
}

impl SeriesComparison {
    pub fn is_equal(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

impl TruncatedSeries {
    /// Panics on an empty coefficient list; a series always has order >= 0.
    pub fn new(coeffs: Vec<BaseScalar>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least X^0");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![BaseScalar::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BaseScalar::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BaseScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BaseScalar {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new((0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new((0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect())
    }

    pub fn scale(&self, c: &BaseScalar) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let out = (0..=n)
            .map(|k| {
                (0..=k)
                    .filter(|&i| !self.coeffs[i].is_zero() && !other.coeffs[k - i].is_zero())
                    .map(|i| &self.coeffs[i] * &other.coeffs[k - i])
                    .sum()
            })
            .collect();
        Self::new(out)
    }

    /// Compares up to the common order and reports the first index where the
    /// coefficients differ.
    pub fn compare(&self, other: &Self) -> SeriesComparison {
        let n = self.order().min(other.order());
        SeriesComparison {
            compared_order: n,
            first_mismatch: (0..=n).find(|&i| self.coeffs[i] != other.coeffs[i]),
        }
    }
}

/// Equality up to the common order, with the smallest mismatching index.
pub fn series_eq(a: &TruncatedSeries, b: &TruncatedSeries) -> (bool, Option<usize>) {
    let c = a.compare(b);
    (c.is_equal(), c.first_mismatch)
}
