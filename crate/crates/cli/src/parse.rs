//! Text grammar for segments and representation descriptors.
//!
//! ```text
//! input      := factor ( "x" factor )*
//! factor     := kind "(" int ")" "@" datum
//!             | "[" half "," half "]" "@" datum
//! kind       := "St" | "Sp" | "Sigma"
//! datum      := label [ "^" ] [ "(" param ( "," param )* ")" ]
//! param      := "r=" int | "d=" int | "twist=" half | "dual"
//! half       := [ "-" ] digits [ "/" digits ]
//! ```
//!
//! Whitespace between tokens is ignored. `r` and `d` default to 1.
//! A lone segment parses to [`Parsed::Segment`]; a lone `St`/`Sp`/`Sigma`
//! factor to that descriptor; two or more factors to a product, where `St_k`
//! contributes its centered segment.

use std::fmt;

use rankin_core::segment::{CuspidalDatum, RepDescriptor, RepKind, Segment};
use rankin_core::{HalfInt, SegmentError};
use serde::Serialize;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "type", content = "value", rename_all = "kebab-case")]
pub enum Parsed {
    Descriptor(RepDescriptor),
    Segment(Segment),
}

impl fmt::Display for Parsed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parsed::Descriptor(d) => d.fmt(f),
            Parsed::Segment(s) => s.fmt(f),
        }
    }
}

/// A syntax error: the byte offset where parsing stopped and the tokens that
/// would have been accepted there.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at position {}: expected {}, found {}",
            self.position,
            self.expected.join(" or "),
            self.found
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum DescriptorError {
    #[error("{0}")]
    Syntax(#[from] ParseError),
    #[error("semantic error: {0}")]
    Semantic(#[from] SegmentError),
    #[error("semantic error: parameter `{0}` given twice")]
    DuplicateParameter(String),
    #[error("semantic error: {0} cannot appear inside a product")]
    NotAProductFactor(String),
}

enum Factor {
    Single(RepKind, u32, CuspidalDatum),
    Seg(Segment),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let found = match self.rest().chars().next() {
            None => "end of input".to_string(),
            Some(c) => format!("{c:?}"),
        };
        ParseError {
            position: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found,
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&[&format!("{token:?}")]))
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        let len = self.rest().find(|c: char| !pred(c)).unwrap_or(self.rest().len());
        self.pos += len;
        &self.src[start..start + len]
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        self.take_while(|c| c.is_ascii_alphanumeric() || c == '_')
    }

    fn unsigned(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        digits.parse().map_err(|_| {
            self.pos = start;
            self.error(&["a non-negative integer"])
        })
    }

    fn half(&mut self) -> Result<HalfInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let fail = |p: &mut Self| {
            p.pos = start;
            p.error(&["an integer or n/2"])
        };
        let neg = self.eat("-");
        self.skip_ws();
        let num = self.take_while(|c| c.is_ascii_digit());
        if num.is_empty() {
            return Err(fail(self));
        }
        let mut text = format!("{}{num}", if neg { "-" } else { "" });
        if self.eat("/") {
            self.skip_ws();
            let den = self.take_while(|c| c.is_ascii_digit());
            text.push('/');
            text.push_str(den);
        }
        text.parse().map_err(|_| fail(self))
    }

    fn datum(&mut self) -> Result<CuspidalDatum, DescriptorError> {
        self.skip_ws();
        let at = self.pos;
        let label = self.word();
        if label.is_empty() {
            self.pos = at;
            return Err(self.error(&["a label"]).into());
        }
        let mut dual = self.eat("^");
        let (mut r, mut d, mut twist) = (None, None, None);
        if self.eat("(") {
            loop {
                let at = self.pos;
                match self.word() {
                    "r" => {
                        self.expect("=")?;
                        set_once(&mut r, self.unsigned()?, "r")?;
                    }
                    "d" => {
                        self.expect("=")?;
                        set_once(&mut d, self.unsigned()?, "d")?;
                    }
                    "twist" => {
                        self.expect("=")?;
                        set_once(&mut twist, self.half()?, "twist")?;
                    }
                    "dual" => {
                        if dual {
                            return Err(DescriptorError::DuplicateParameter("dual".into()));
                        }
                        dual = true;
                    }
                    _ => {
                        self.pos = at;
                        self.skip_ws();
                        return Err(self.error(&["\"r=\"", "\"d=\"", "\"twist=\"", "\"dual\""]).into());
                    }
                }
                if self.eat(")") {
                    break;
                }
                if !self.eat(",") {
                    return Err(self.error(&["\",\"", "\")\""]).into());
                }
            }
        }
        Ok(CuspidalDatum::new(label, r.unwrap_or(1), d.unwrap_or(1))?
            .with_dual_flag(dual)
            .with_twist(twist.unwrap_or(HalfInt::ZERO)))
    }

    fn factor(&mut self) -> Result<Factor, DescriptorError> {
        self.skip_ws();
        if self.eat("[") {
            let a = self.half()?;
            self.expect(",")?;
            let b = self.half()?;
            self.expect("]")?;
            self.expect("@")?;
            let datum = self.datum()?;
            return Ok(Factor::Seg(Segment::new(datum, a, b)?));
        }
        let at = self.pos;
        let kind = match self.word() {
            "St" => RepKind::Steinberg,
            "Sp" => RepKind::Speh,
            "Sigma" => RepKind::StandardSigma,
            _ => {
                self.pos = at;
                return Err(self.error(&["\"St\"", "\"Sp\"", "\"Sigma\"", "\"[\""]).into());
            }
        };
        self.expect("(")?;
        let k = self.unsigned()?;
        self.expect(")")?;
        self.expect("@")?;
        let datum = self.datum()?;
        Ok(Factor::Single(kind, k, datum))
    }

    fn input(&mut self) -> Result<Parsed, DescriptorError> {
        let mut factors = vec![self.factor()?];
        loop {
            self.skip_ws();
            if self.rest().is_empty() {
                break;
            }
            if !self.eat("x") {
                return Err(self.error(&["\"x\"", "end of input"]).into());
            }
            factors.push(self.factor()?);
        }
        if factors.len() == 1 {
            return Ok(match factors.pop().unwrap() {
                Factor::Seg(s) => Parsed::Segment(s),
                Factor::Single(kind, k, datum) => Parsed::Descriptor(RepDescriptor::of_kind(kind, k, datum)?),
            });
        }
        let segments = factors
            .into_iter()
            .map(|f| match f {
                Factor::Seg(s) => Ok(s),
                Factor::Single(RepKind::Steinberg, k, datum) => Ok(Segment::centered(datum, k)?),
                Factor::Single(kind, k, _) => Err(DescriptorError::NotAProductFactor(format!("{kind}({k})"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Parsed::Descriptor(RepDescriptor::product(segments)?))
    }
}

fn set_once<T>(slot: &mut Option<T>, value: T, name: &str) -> Result<(), DescriptorError> {
    if slot.is_some() {
        return Err(DescriptorError::DuplicateParameter(name.into()));
    }
    *slot = Some(value);
    Ok(())
}

pub fn parse_descriptor(text: &str) -> Result<Parsed, DescriptorError> {
    Parser::new(text).input()
}

/// Parses and requires a descriptor (not a bare segment).
pub fn parse_rep(text: &str) -> Result<RepDescriptor, DescriptorError> {
    match parse_descriptor(text)? {
        Parsed::Descriptor(d) => Ok(d),
        Parsed::Segment(s) => Ok(RepDescriptor::product(vec![s])?),
    }
}

/// Parses and requires a single segment.
pub fn parse_segment(text: &str) -> Result<Segment, DescriptorError> {
    match parse_descriptor(text)? {
        Parsed::Segment(s) => Ok(s),
        Parsed::Descriptor(_) => Err(ParseError {
            position: 0,
            expected: vec!["a segment \"[a,b]@label\"".into()],
            found: "a descriptor".into(),
        }
        .into()),
    }
}
