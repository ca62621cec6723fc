//! JSON encodings.
//!
//! A scalar is `{"num": [[exp, "p/q"], ...], "den": [[exp, "p/q"], ...]}`
//! with exponents counting powers of `u = q^{1/2}`. A rational function is
//! `{"var": "X", "num": [scalar, ...], "den": [scalar, ...]}` in ascending
//! powers of `X`.

use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ratfunc::RationalFunction;
use crate::scalar::BaseScalar;
use crate::series::TruncatedSeries;
use crate::upoly::{Rational, UPoly};
use crate::xpoly::XPoly;

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    num: Vec<(u32, String)>,
    den: Vec<(u32, String)>,
}

fn poly_repr(p: &UPoly) -> Vec<(u32, String)> {
    p.terms().map(|(e, c)| (e, c.to_string())).collect()
}

fn poly_from_repr<E: serde::de::Error>(terms: &[(u32, String)]) -> Result<UPoly, E> {
    let parsed = terms
        .iter()
        .map(|(e, c)| {
            Rational::from_str(c)
                .map(|r| (*e, r))
                .map_err(|_| E::custom(format!("bad rational {c:?}")))
        })
        .collect::<Result<Vec<_>, E>>()?;
    Ok(UPoly::from_terms(parsed))
}

impl Serialize for BaseScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ScalarRepr {
            num: poly_repr(self.numerator()),
            den: poly_repr(self.denominator()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BaseScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(d)?;
        let num = poly_from_repr::<D::Error>(&repr.num)?;
        let den = poly_from_repr::<D::Error>(&repr.den)?;
        BaseScalar::from_parts(num, den).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct RatFuncRepr {
    var: String,
    num: Vec<BaseScalar>,
    den: Vec<BaseScalar>,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatFuncRepr {
            var: "X".into(),
            num: self.numerator().coeffs().to_vec(),
            den: self.denominator().coeffs().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = RatFuncRepr::deserialize(d)?;
        if repr.var != "X" {
            return Err(D::Error::custom(format!("unknown variable {:?}", repr.var)));
        }
        RationalFunction::new(XPoly::new(repr.num), XPoly::new(repr.den)).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    var: String,
    order: usize,
    coeffs: Vec<BaseScalar>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SeriesRepr {
            var: "X".into(),
            order: self.order(),
            coeffs: self.coeffs().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(d)?;
        if repr.coeffs.len() != repr.order + 1 {
            return Err(D::Error::custom("series order does not match coefficient count"));
        }
        Ok(TruncatedSeries::new(repr.coeffs))
    }
}
