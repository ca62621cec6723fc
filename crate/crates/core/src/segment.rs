//! Cuspidal segments, products of discrete series, and the bookkeeping
//! around them: linked/preceding segments, standard-module ordering,
//! genericity, the Zelevinsky involution on discrete series, and the
//! highest derivatives of `St_k` and `Σ_k`.

use std::fmt;

use serde::Serialize;

use crate::error::SegmentError;
use crate::halfint::HalfInt;

/// A supercuspidal `ν^c ρ` of `G_r` (or of its contragredient).
///
/// `torsion` is the number `d` of unramified characters fixing `ρ`; it always
/// divides `r`. Twists are kept exactly, never reduced modulo the stabilizer.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct CuspidalDatum {
    label: String,
    degree: u32,
    torsion: u32,
    dual: bool,
    twist: HalfInt,
}

impl CuspidalDatum {
    pub fn new(label: impl Into<String>, degree: u32, torsion: u32) -> Result<Self, SegmentError> {
        if degree == 0 || torsion == 0 {
            return Err(SegmentError::NonPositive);
        }
        if !degree.is_multiple_of(torsion) {
            return Err(SegmentError::TorsionDoesNotDivide {
                r: degree,
                d: torsion,
            });
        }
        Ok(Self {
            label: label.into(),
            degree,
            torsion,
            dual: false,
            twist: HalfInt::ZERO,
        })
    }

    /// The trivial character of `G_1`.
    pub fn trivial() -> Self {
        Self::new("1", 1, 1).unwrap()
    }

    pub fn with_twist(mut self, twist: HalfInt) -> Self {
        self.twist = twist;
        self
    }

    pub fn with_dual_flag(mut self, dual: bool) -> Self {
        self.dual = dual;
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn torsion(&self) -> u32 {
        self.torsion
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    pub fn twist(&self) -> HalfInt {
        self.twist
    }

    /// `ν^c ρ ↦ ν^{c + t} ρ`
    pub fn twisted(&self, t: HalfInt) -> Self {
        let mut out = self.clone();
        out.twist = out.twist + t;
        out
    }

    /// `(ν^c ρ)^∨ = ν^{-c} ρ^∨`
    pub fn contragredient(&self) -> Self {
        Self {
            dual: !self.dual,
            twist: -self.twist,
            ..self.clone()
        }
    }

    /// Same cuspidal up to an unramified twist, as far as the descriptor can
    /// tell.
    pub fn same_inertial_class(&self, other: &Self) -> bool {
        self.label == other.label
            && self.degree == other.degree
            && self.torsion == other.torsion
            && self.dual == other.dual
    }

    /// If `other ≅ ν^{s0} self^∨`, returns `s0`.
    pub fn dual_twist_offset(&self, other: &Self) -> Option<HalfInt> {
        let dual = self.contragredient();
        dual.same_inertial_class(other)
            .then(|| other.twist - dual.twist)
    }
}

impl fmt::Display for CuspidalDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        if self.dual {
            write!(f, "^")?;
        }
        write!(f, "(r={},d={}", self.degree, self.torsion)?;
        if self.twist != HalfInt::ZERO {
            write!(f, ",twist={}", self.twist)?;
        }
        write!(f, ")")
    }
}

/// The segment `[ν^a ρ, ν^b ρ]`; `a` and `b` are relative to the twist
/// carried by `datum`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Segment {
    datum: CuspidalDatum,
    a: HalfInt,
    b: HalfInt,
}

impl Segment {
    pub fn new(datum: CuspidalDatum, a: HalfInt, b: HalfInt) -> Result<Self, SegmentError> {
        let gap = b - a;
        if !gap.is_integer() || gap < HalfInt::ZERO {
            return Err(SegmentError::BadSegment {
                a: a.to_string(),
                b: b.to_string(),
            });
        }
        Ok(Self { datum, a, b })
    }

    /// `[ν^{(1-k)/2} ρ, …, ν^{(k-1)/2} ρ]`
    pub fn centered(datum: CuspidalDatum, k: u32) -> Result<Self, SegmentError> {
        if k == 0 {
            return Err(SegmentError::EmptyLength);
        }
        let k = k as i64;
        Self::new(datum, HalfInt::from_doubled(1 - k), HalfInt::from_doubled(k - 1))
    }

    /// The one-element segment `{ν^c ρ}`.
    pub fn singleton(datum: CuspidalDatum, c: HalfInt) -> Self {
        Self { datum, a: c, b: c }
    }

    pub fn datum(&self) -> &CuspidalDatum {
        &self.datum
    }

    pub fn a(&self) -> HalfInt {
        self.a
    }

    pub fn b(&self) -> HalfInt {
        self.b
    }

    pub fn length(&self) -> u32 {
        ((self.b - self.a).to_integer().unwrap() + 1) as u32
    }

    /// Absolute exponent of the first cuspidal, twist included.
    pub fn start(&self) -> HalfInt {
        self.a + self.datum.twist
    }

    pub fn end(&self) -> HalfInt {
        self.b + self.datum.twist
    }

    /// `e(Δ) = (a + b)/2 + twist`, the real part of the central exponent.
    pub fn e_value(&self) -> HalfInt {
        // a + b is an integer plus 2a, so halving keeps us in ½ℤ
        HalfInt::from_doubled((self.a.doubled() + self.b.doubled()) / 2) + self.datum.twist
    }

    /// Same cuspidal line: inertially equal data with integral twist gap.
    fn on_same_line(&self, other: &Self) -> bool {
        self.datum.same_inertial_class(&other.datum) && (self.start() - other.start()).is_integer()
    }

    pub fn contains(&self, other: &Self) -> bool {
        self.on_same_line(other) && self.start() <= other.start() && other.end() <= self.end()
    }

    pub fn size(&self) -> u32 {
        self.length() * self.datum.degree
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]@{}", self.a, self.b, self.datum)
    }
}

/// Two segments are linked when neither contains the other and their union
/// is again a segment.
pub fn linked(x: &Segment, y: &Segment) -> bool {
    if !x.on_same_line(y) || x.contains(y) || y.contains(x) {
        return false;
    }
    let one = HalfInt::from_int(1);
    y.start() <= x.end() + one && x.start() <= y.end() + one
}

/// `x` precedes `y`: linked, with `x` starting first.
pub fn precedes(x: &Segment, y: &Segment) -> bool {
    linked(x, y) && x.start() < y.start()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum RepKind {
    Steinberg,
    Speh,
    StandardSigma,
    Product,
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepKind::Steinberg => "St",
            RepKind::Speh => "Sp",
            RepKind::StandardSigma => "Sigma",
            RepKind::Product => "Product",
        })
    }
}

/// `St_k(ρ)`, `Sp_k(ρ)`, `Σ_k(ρ)`, or a product of discrete series given by
/// their segments.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct RepDescriptor {
    kind: RepKind,
    segments: Vec<Segment>,
}

impl RepDescriptor {
    fn single(kind: RepKind, k: u32, datum: CuspidalDatum) -> Result<Self, SegmentError> {
        Ok(Self {
            kind,
            segments: vec![Segment::centered(datum, k)?],
        })
    }

    pub fn steinberg(k: u32, datum: CuspidalDatum) -> Result<Self, SegmentError> {
        Self::single(RepKind::Steinberg, k, datum)
    }

    pub fn speh(k: u32, datum: CuspidalDatum) -> Result<Self, SegmentError> {
        Self::single(RepKind::Speh, k, datum)
    }

    pub fn sigma(k: u32, datum: CuspidalDatum) -> Result<Self, SegmentError> {
        Self::single(RepKind::StandardSigma, k, datum)
    }

    pub fn of_kind(kind: RepKind, k: u32, datum: CuspidalDatum) -> Result<Self, SegmentError> {
        match kind {
            RepKind::Product => Err(SegmentError::UnsupportedKind("products".into())),
            _ => Self::single(kind, k, datum),
        }
    }

    pub fn product(segments: Vec<Segment>) -> Result<Self, SegmentError> {
        if segments.is_empty() {
            return Err(SegmentError::EmptyLength);
        }
        Ok(Self {
            kind: RepKind::Product,
            segments,
        })
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// The segment length `k` for `St_k`, `Sp_k`, `Σ_k`.
    pub fn length(&self) -> Option<u32> {
        (self.kind != RepKind::Product).then(|| self.segments[0].length())
    }

    /// The cuspidal datum of `St_k`, `Sp_k`, `Σ_k`.
    pub fn datum(&self) -> Option<&CuspidalDatum> {
        (self.kind != RepKind::Product).then(|| self.segments[0].datum())
    }

    /// `n` such that the representation lives on `G_n`.
    pub fn group_size(&self) -> u32 {
        self.segments.iter().map(Segment::size).sum()
    }

    /// The list of discrete series whose product defines the representation
    /// (or its standard module, for `Sp_k`).
    ///
    /// `Σ_k(ρ) = ν^{(k-1)/2}ρ × ν^{(k-3)/2}ρ × ⋯ × ν^{(1-k)/2}ρ`, and `Sp_k(ρ)`
    /// is the unique irreducible quotient of the same product.
    pub fn defining_product(&self) -> Vec<Segment> {
        match self.kind {
            RepKind::Steinberg | RepKind::Product => self.segments.clone(),
            RepKind::StandardSigma | RepKind::Speh => {
                let seg = &self.segments[0];
                let k = seg.length() as i64;
                (0..k)
                    .map(|i| Segment::singleton(seg.datum.clone(), HalfInt::from_doubled(k - 1 - 2 * i)))
                    .collect()
            }
        }
    }

    /// Whether the defining product is a standard module: `e`-values
    /// nonincreasing from left to right.
    pub fn is_standard(&self) -> bool {
        self.defining_product()
            .windows(2)
            .all(|w| w[0].e_value() >= w[1].e_value())
    }

    /// Whether the defining product has pairwise unlinked segments, which is
    /// when it is irreducible and generic.
    pub fn is_generic_product(&self) -> bool {
        let segs = self.defining_product();
        segs.iter()
            .enumerate()
            .all(|(i, x)| segs[i + 1..].iter().all(|y| !linked(x, y)))
    }
}

impl fmt::Display for RepDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RepKind::Product => {
                let parts: Vec<String> = self.segments.iter().map(|s| s.to_string()).collect();
                f.write_str(&parts.join(" x "))
            }
            kind => {
                let seg = &self.segments[0];
                write!(f, "{}({})@{}", kind, seg.length(), seg.datum)
            }
        }
    }
}

/// Zelevinsky involution on discrete series: `St_k(ρ) ↔ Sp_k(ρ)`.
pub fn zelevinsky_dual_discrete(pi: &RepDescriptor) -> Result<RepDescriptor, SegmentError> {
    let kind = match pi.kind {
        RepKind::Steinberg => RepKind::Speh,
        RepKind::Speh => RepKind::Steinberg,
        other => return Err(SegmentError::UnsupportedKind(other.to_string())),
    };
    Ok(RepDescriptor {
        kind,
        segments: pi.segments.clone(),
    })
}

/// The `(k-1)r`-th derivative of `Σ_k(σ)` or `St_k(σ)` as a multiset of
/// twisted cuspidals:
///
/// * `Σ_k(σ)` gives `ν^{(1-k)/2}σ ⊕ ν^{(3-k)/2}σ ⊕ ⋯ ⊕ ν^{(k-1)/2}σ`,
/// * `St_k(σ)` gives `ν^{(k-1)/2}σ` alone.
///
/// Any other level is rejected.
pub fn derivative_multiset(
    pi: &RepDescriptor,
    level: u32,
) -> Result<Vec<CuspidalDatum>, SegmentError> {
    let (k, datum) = match (pi.kind, pi.length(), pi.datum()) {
        (RepKind::StandardSigma | RepKind::Steinberg, Some(k), Some(d)) => (k, d),
        (kind, _, _) => return Err(SegmentError::UnsupportedKind(kind.to_string())),
    };
    let expected = (k - 1) * datum.degree();
    if level != expected {
        return Err(SegmentError::UnsupportedLevel {
            got: level,
            expected,
        });
    }
    let k = k as i64;
    Ok(match pi.kind {
        RepKind::StandardSigma => (0..k)
            .map(|i| datum.twisted(HalfInt::from_doubled(1 - k + 2 * i)))
            .collect(),
        _ => vec![datum.twisted(HalfInt::from_doubled(k - 1))],
    })
}

/// The derivative at its only supported level `(k-1)r`.
pub fn highest_derivative(pi: &RepDescriptor) -> Result<Vec<CuspidalDatum>, SegmentError> {
    let level = match (pi.length(), pi.datum()) {
        (Some(k), Some(d)) => (k - 1) * d.degree(),
        _ => return Err(SegmentError::UnsupportedKind(pi.kind.to_string())),
    };
    derivative_multiset(pi, level)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rho() -> CuspidalDatum {
        CuspidalDatum::new("rho", 1, 1).unwrap()
    }

    fn seg(a: i64, b: i64) -> Segment {
        Segment::new(rho(), HalfInt::from_int(a), HalfInt::from_int(b)).unwrap()
    }

    #[test]
    fn torsion_must_divide_degree() {
        assert_eq!(
            CuspidalDatum::new("rho", 2, 3),
            Err(SegmentError::TorsionDoesNotDivide { r: 2, d: 3 })
        );
        assert!(CuspidalDatum::new("rho", 6, 3).is_ok());
    }

    #[test]
    fn bad_segments_rejected() {
        assert!(Segment::new(rho(), HalfInt::from_int(2), HalfInt::from_int(1)).is_err());
        assert!(Segment::new(rho(), HalfInt::ZERO, HalfInt::from_doubled(1)).is_err());
    }

    #[test]
    fn linked_examples() {
        assert!(linked(&seg(0, 1), &seg(1, 2)));
        assert!(!linked(&seg(0, 1), &seg(0, 1)));
        assert!(!linked(&seg(0, 3), &seg(1, 2)));
        // adjacent segments are linked, a gap is not
        assert!(linked(&seg(0, 0), &seg(1, 1)));
        assert!(!linked(&seg(0, 0), &seg(2, 2)));
    }

    #[test]
    fn different_lines_never_link() {
        let other = CuspidalDatum::new("sigma", 1, 1).unwrap();
        let s = Segment::new(other, HalfInt::from_int(1), HalfInt::from_int(2)).unwrap();
        assert!(!linked(&seg(0, 1), &s));
        let dual = Segment::new(rho().contragredient(), HalfInt::from_int(1), HalfInt::from_int(2)).unwrap();
        assert!(!linked(&seg(0, 1), &dual));
        let half = Segment::new(rho(), HalfInt::from_doubled(1), HalfInt::from_doubled(3)).unwrap();
        assert!(!linked(&seg(0, 1), &half));
    }

    #[test]
    fn twist_shifts_segments() {
        let shifted = Segment::new(rho().with_twist(HalfInt::from_int(1)), HalfInt::ZERO, HalfInt::from_int(1)).unwrap();
        // absolute [1, 2]
        assert!(precedes(&seg(0, 1), &shifted));
    }

    #[test]
    fn precedes_examples() {
        assert!(precedes(&seg(0, 1), &seg(1, 2)));
        assert!(!precedes(&seg(1, 2), &seg(0, 1)));
        assert!(!precedes(&seg(0, 0), &seg(2, 2)));
    }

    #[test]
    fn sigma_is_standard_and_reversal_is_not() {
        for k in 1..6 {
            let sigma = RepDescriptor::sigma(k, rho()).unwrap();
            assert!(sigma.is_standard());
            let mut rev = sigma.defining_product();
            rev.reverse();
            let rev = RepDescriptor::product(rev).unwrap();
            assert_eq!(rev.is_standard(), k == 1);
        }
        assert!(RepDescriptor::product(vec![seg(0, 2)]).unwrap().is_standard());
    }

    #[test]
    fn genericity() {
        assert!(RepDescriptor::steinberg(4, rho()).unwrap().is_generic_product());
        assert!(!RepDescriptor::product(vec![seg(0, 1), seg(1, 2)]).unwrap().is_generic_product());
        assert!(RepDescriptor::product(vec![seg(0, 0), seg(2, 2)]).unwrap().is_generic_product());
        assert!(!RepDescriptor::sigma(2, rho()).unwrap().is_generic_product());
        assert!(RepDescriptor::sigma(1, rho()).unwrap().is_generic_product());
    }

    #[test]
    fn group_size_counts_degrees() {
        let r2 = CuspidalDatum::new("rho", 2, 2).unwrap();
        assert_eq!(RepDescriptor::steinberg(3, r2.clone()).unwrap().group_size(), 6);
        let p = RepDescriptor::product(vec![seg(0, 1), Segment::centered(r2, 2).unwrap()]).unwrap();
        assert_eq!(p.group_size(), 6);
    }

    #[test]
    fn zelevinsky_dual() {
        let st = RepDescriptor::steinberg(3, rho()).unwrap();
        let sp = zelevinsky_dual_discrete(&st).unwrap();
        assert_eq!(sp, RepDescriptor::speh(3, rho()).unwrap());
        assert_eq!(zelevinsky_dual_discrete(&sp).unwrap(), st);
        assert!(zelevinsky_dual_discrete(&RepDescriptor::sigma(2, rho()).unwrap()).is_err());
        // for k = 1 both are rho itself
        let st1 = RepDescriptor::steinberg(1, rho()).unwrap();
        let sp1 = zelevinsky_dual_discrete(&st1).unwrap();
        assert_eq!(sp1.defining_product(), st1.defining_product());
    }

    #[test]
    fn derivatives() {
        let rv = rho().contragredient();
        let s2 = RepDescriptor::sigma(2, rv.clone()).unwrap();
        assert_eq!(
            derivative_multiset(&s2, 1).unwrap(),
            vec![rv.twisted(HalfInt::from_doubled(-1)), rv.twisted(HalfInt::from_doubled(1))]
        );
        let st2 = RepDescriptor::steinberg(2, rv.clone()).unwrap();
        assert_eq!(derivative_multiset(&st2, 1).unwrap(), vec![rv.twisted(HalfInt::from_doubled(1))]);
        let s1 = RepDescriptor::sigma(1, rv.clone()).unwrap();
        assert_eq!(derivative_multiset(&s1, 0).unwrap(), vec![rv.clone()]);
        assert_eq!(
            derivative_multiset(&s2, 0),
            Err(SegmentError::UnsupportedLevel { got: 0, expected: 1 })
        );
        assert!(derivative_multiset(&RepDescriptor::speh(2, rv).unwrap(), 1).is_err());
    }

    #[test]
    fn derivative_level_scales_with_degree() {
        let r3 = CuspidalDatum::new("rho", 3, 1).unwrap();
        let s = RepDescriptor::sigma(3, r3).unwrap();
        assert_eq!(derivative_multiset(&s, 6).unwrap().len(), 3);
        assert!(derivative_multiset(&s, 2).is_err());
    }

    #[test]
    fn display_forms() {
        let r = CuspidalDatum::new("rho", 2, 2).unwrap().contragredient();
        assert_eq!(RepDescriptor::steinberg(3, r.clone()).unwrap().to_string(), "St(3)@rho^(r=2,d=2)");
        let t = r.twisted(HalfInt::from_doubled(1));
        assert_eq!(t.to_string(), "rho^(r=2,d=2,twist=1/2)");
        let p = RepDescriptor::product(vec![seg(0, 1), seg(3, 3)]).unwrap();
        assert_eq!(p.to_string(), "[0,1]@rho(r=1,d=1) x [3,3]@rho(r=1,d=1)");
    }
}
