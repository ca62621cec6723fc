//! Text and LaTeX rendering. Powers of `u` are shown as powers of `q`:
//! `u^{2k}` is `q^k` and `u^{2k+1}` is `q^{(2k+1)/2}`.

use num_traits::{One, Signed};

use crate::ratfunc::RationalFunction;
use crate::scalar::BaseScalar;
use crate::series::TruncatedSeries;
use crate::upoly::{Rational, UPoly};
use crate::xpoly::XPoly;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Style {
    Text,
    Latex,
}

fn q_power(u_exp: i64, style: Style) -> String {
    if u_exp == 0 {
        return String::new();
    }
    let exp = if u_exp % 2 == 0 {
        (u_exp / 2).to_string()
    } else {
        format!("{}/2", u_exp)
    };
    match style {
        Style::Text if exp == "1" => "q".into(),
        Style::Text if u_exp % 2 == 0 && u_exp > 0 => format!("q^{exp}"),
        Style::Text => format!("q^({exp})"),
        Style::Latex if exp == "1" => "q".into(),
        Style::Latex => format!("q^{{{exp}}}"),
    }
}

fn rational(c: &Rational, style: Style) -> String {
    match style {
        Style::Text => c.to_string(),
        Style::Latex if c.is_integer() => c.to_string(),
        Style::Latex => {
            let sign = if c.is_negative() { "-" } else { "" };
            format!("{sign}\\frac{{{}}}{{{}}}", c.numer().abs(), c.denom())
        }
    }
}

/// Joins signed terms, turning `a + -b` into `a - b`.
fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, t) in terms.into_iter().enumerate() {
        if i == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    out
}

fn laurent(terms: &[(i64, Rational)], style: Style) -> String {
    let mul = if style == Style::Text { "*" } else { " " };
    let parts = terms
        .iter()
        .rev()
        .map(|(e, c)| {
            let m = q_power(*e, style);
            if m.is_empty() {
                rational(c, style)
            } else if c.is_one() {
                m
            } else if (-c).is_one() {
                format!("-{m}")
            } else {
                format!("{}{mul}{m}", rational(c, style))
            }
        })
        .collect();
    join_terms(parts)
}

fn upoly_terms(p: &UPoly) -> Vec<(i64, Rational)> {
    p.terms().map(|(e, c)| (e as i64, c.clone())).collect()
}

fn scalar(s: &BaseScalar, style: Style) -> String {
    if let Some(terms) = s.laurent_terms() {
        return laurent(&terms, style);
    }
    let num = laurent(&upoly_terms(s.numerator()), style);
    let den = laurent(&upoly_terms(s.denominator()), style);
    match style {
        Style::Text => format!("({num})/({den})"),
        Style::Latex => format!("\\frac{{{num}}}{{{den}}}"),
    }
}

/// More than one Laurent term, or not a Laurent polynomial at all.
fn is_compound(s: &BaseScalar) -> bool {
    s.laurent_terms().is_none_or(|t| t.len() > 1)
}

fn xpoly(p: &XPoly, var: &str, style: Style) -> String {
    let mul = if style == Style::Text { "*" } else { " " };
    let parts = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let c_str = scalar(c, style);
            let mono = match (i, style) {
                (0, _) => String::new(),
                (1, _) => var.to_string(),
                (_, Style::Text) => format!("{var}^{i}"),
                (_, Style::Latex) => format!("{var}^{{{i}}}"),
            };
            if mono.is_empty() {
                c_str
            } else if c.is_one() {
                mono
            } else if (-c).is_one() {
                format!("-{mono}")
            } else if is_compound(c) {
                format!("({c_str}){mul}{mono}")
            } else {
                format!("{c_str}{mul}{mono}")
            }
        })
        .collect();
    join_terms(parts)
}

pub fn scalar_text(s: &BaseScalar) -> String {
    scalar(s, Style::Text)
}

pub fn scalar_latex(s: &BaseScalar) -> String {
    scalar(s, Style::Latex)
}

pub fn ratfunc_text(r: &RationalFunction) -> String {
    let num = xpoly(r.numerator(), "X", Style::Text);
    if r.denominator() == &XPoly::one() {
        return num;
    }
    let den = xpoly(r.denominator(), "X", Style::Text);
    let num = if r.numerator().coeffs().len() > 1 {
        format!("({num})")
    } else {
        num
    };
    format!("{num} / ({den})")
}

pub fn ratfunc_latex(r: &RationalFunction) -> String {
    let num = xpoly(r.numerator(), "X", Style::Latex);
    if r.denominator() == &XPoly::one() {
        return num;
    }
    let den = xpoly(r.denominator(), "X", Style::Latex);
    format!("\\frac{{{num}}}{{{den}}}")
}

pub fn series_text(s: &TruncatedSeries) -> String {
    let body = xpoly(&XPoly::new(s.coeffs().to_vec()), "X", Style::Text);
    format!("{body} + O(X^{})", s.order() + 1)
}

pub fn series_latex(s: &TruncatedSeries) -> String {
    let body = xpoly(&XPoly::new(s.coeffs().to_vec()), "X", Style::Latex);
    format!("{body} + O(X^{{{}}})", s.order() + 1)
}
