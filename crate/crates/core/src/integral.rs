//! Unramified Rankin–Selberg integrals as truncated sums over the torus.
//!
//! For a right `K`-invariant integrand and Haar measures giving `K_n` volume
//! one, `∫_{N_m\G_m} F(g) dg = Σ_λ δ_{B_m}^{-1}(ϖ^λ) F(ϖ^λ)`. Both integral
//! families therefore become power series in `X = q^{-s}` whose `X^t`
//! coefficient is a finite sum over dominant `λ` with `|λ| = t`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::IntegralError;
use crate::halfint::HalfInt;
use crate::lfactor::{l_steinberg_pair, partial_fractions, recombine, LFactorSpec};
use crate::ratfunc::RationalFunction;
use crate::scalar::BaseScalar;
use crate::segment::RepKind;
use crate::series::{SeriesComparison, TruncatedSeries};
use crate::whittaker::{modulus_u_exponent, Cocharacter, SatakeParams, TorusEvaluator, TorusFunction};

/// Truncation order used when none is given.
pub const DEFAULT_DEPTH: usize = 20;

/// The Schwartz function in the `n = m` integral.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum SchwartzShape {
    /// `1_{𝔬^n}`
    FullLattice,
    /// `scale · 1_{(𝔭^f)^{n-1} × (1 + 𝔭^f)}`, where `scale` stands for
    /// `μ(1 + 𝔭^f)^{-1}`. Only the reduced `G_{n-1}` integral is modelled,
    /// in which both `f` and `scale` have cancelled.
    Conductor { f: u32, scale: BaseScalar },
}

impl SchwartzShape {
    pub fn conductor(f: u32) -> Result<Self, IntegralError> {
        if f == 0 {
            return Err(IntegralError::BadConductor);
        }
        Ok(Self::Conductor {
            f,
            scale: BaseScalar::one(),
        })
    }
}

/// One zeta integral: `I_{n,m}(s, W, W')` when `n > m`, or
/// `I_n(s, W, W', φ)` when `n = m`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IntegralSpec {
    n: usize,
    m: usize,
    w: TorusFunction,
    w_prime: TorusFunction,
    phi: Option<SchwartzShape>,
    depth: usize,
}

impl IntegralSpec {
    pub fn new(
        w: TorusFunction,
        w_prime: TorusFunction,
        phi: Option<SchwartzShape>,
        depth: usize,
    ) -> Result<Self, IntegralError> {
        let (n, m) = (w.size(), w_prime.size());
        if m == 0 || n < m {
            return Err(IntegralError::BadSizes { n, m });
        }
        if (n == m) != phi.is_some() {
            return Err(IntegralError::SchwartzMismatch);
        }
        if let Some(SchwartzShape::Conductor { f: 0, .. }) = phi {
            return Err(IntegralError::BadConductor);
        }
        Ok(Self {
            n,
            m,
            w,
            w_prime,
            phi,
            depth,
        })
    }

    /// `I_{n,m}(s, W, W')` with `n > m`.
    pub fn hecke(w: TorusFunction, w_prime: TorusFunction, depth: usize) -> Result<Self, IntegralError> {
        if w.size() <= w_prime.size() {
            return Err(IntegralError::BadSizes {
                n: w.size(),
                m: w_prime.size(),
            });
        }
        Self::new(w, w_prime, None, depth)
    }

    /// `I_n(s, W, W', φ)`.
    pub fn equal(
        w: TorusFunction,
        w_prime: TorusFunction,
        phi: SchwartzShape,
        depth: usize,
    ) -> Result<Self, IntegralError> {
        if w.size() != w_prime.size() {
            return Err(IntegralError::SizeMismatch {
                expected: w.size(),
                got: w_prime.size(),
            });
        }
        Self::new(w, w_prime, Some(phi), depth)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn w(&self) -> &TorusFunction {
        &self.w
    }

    pub fn w_prime(&self) -> &TorusFunction {
        &self.w_prime
    }

    pub fn phi(&self) -> Option<&SchwartzShape> {
        self.phi.as_ref()
    }

    pub fn with_depth(&self, depth: usize) -> Self {
        Self {
            depth,
            ..self.clone()
        }
    }
}

/// Perturbations of the measure weights, used as negative controls.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Mutation {
    /// Omit the Iwasawa factor `δ_B^{-1}`.
    DropModulus,
    /// Omit the power of `q` coming from `ν(g)^{-(n-m)/2}` (or `ν(g)^{-1}`
    /// in the reduced equal-size integral).
    DropDeterminantShift,
    /// Evaluate the essential vector without its `1_{𝔬^×}` cut-offs.
    DropEssentialSupport,
}

impl Mutation {
    pub const ALL: [Mutation; 3] = [
        Mutation::DropModulus,
        Mutation::DropDeterminantShift,
        Mutation::DropEssentialSupport,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::DropModulus => "drop-modulus",
            Mutation::DropDeterminantShift => "drop-determinant-shift",
            Mutation::DropEssentialSupport => "drop-essential-support",
        }
    }
}

/// All `λ_1 ≥ … ≥ λ_len ≥ 0` with `Σ λ_i = total`, in decreasing
/// lexicographic order.
pub fn dominant_cocharacters(len: usize, total: usize) -> Vec<Vec<i64>> {
    fn rec(len: usize, total: usize, cap: usize, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if len == 0 {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        // remaining parts are at most `first`, so `first * len >= total`
        let lo = total.div_ceil(len);
        for first in (lo..=cap.min(total)).rev() {
            prefix.push(first as i64);
            rec(len - 1, total - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(len, total, total, &mut Vec::with_capacity(len), &mut out);
    out
}

struct Weights {
    mutation: Option<Mutation>,
}

impl Weights {
    fn modulus_inverse(&self, lambda: &[i64]) -> BaseScalar {
        if self.mutation == Some(Mutation::DropModulus) {
            BaseScalar::one()
        } else {
            BaseScalar::u_pow(-modulus_u_exponent(lambda))
        }
    }

    /// `q^{t·shift/2}`, i.e. `u^{t·shift}`.
    fn det_shift(&self, total: i64, shift: i64) -> BaseScalar {
        if self.mutation == Some(Mutation::DropDeterminantShift) {
            BaseScalar::one()
        } else {
            BaseScalar::u_pow(total * shift)
        }
    }

    fn value(&self, func: &TorusFunction, eval: &TorusEvaluator<'_>, lambda: &Cocharacter) -> Result<BaseScalar, IntegralError> {
        match (self.mutation, func) {
            (Some(Mutation::DropEssentialSupport), TorusFunction::EssentialSteinberg { l }) if *l >= 2 => {
                let n = lambda.len();
                if !lambda.is_dominant() {
                    return Ok(BaseScalar::zero());
                }
                let v = lambda.0[0] - lambda.0[n - 1];
                Ok(BaseScalar::q_pow(-v * (*l as i64 - 1)))
            }
            _ => Ok(eval.value(lambda)?),
        }
    }
}

fn sum_by_degree<F>(depth: usize, coefficient: F) -> Result<TruncatedSeries, IntegralError>
where
    F: Fn(usize) -> Result<BaseScalar, IntegralError> + Sync + Send,
{
    let coeffs = (0..=depth)
        .into_par_iter()
        .map(coefficient)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TruncatedSeries::new(coeffs))
}

/// `I_{n,m}(s, W, W')` for `n > m` as
/// `Σ_λ W(diag(ϖ^λ, I_{n-m})) W'(ϖ^λ) δ_{B_m}^{-1}(ϖ^λ) q^{|λ|(n-m)/2} X^{|λ|}`
/// over dominant `λ ∈ ℤ^m` with `λ_m ≥ 0`.
pub fn hecke_series(spec: &IntegralSpec) -> Result<TruncatedSeries, IntegralError> {
    hecke_series_with(spec, None)
}

pub fn hecke_series_with(spec: &IntegralSpec, mutation: Option<Mutation>) -> Result<TruncatedSeries, IntegralError> {
    if spec.n <= spec.m {
        return Err(IntegralError::WrongFamily("n > m"));
    }
    let weights = Weights { mutation };
    let w_eval = spec.w.evaluator(spec.depth);
    let wp_eval = spec.w_prime.evaluator(spec.depth);
    let shift = (spec.n - spec.m) as i64;
    sum_by_degree(spec.depth, |t| {
        let mut acc = BaseScalar::zero();
        for lambda in dominant_cocharacters(spec.m, t) {
            let small = Cocharacter(lambda);
            let big = small.padded(spec.n);
            let a = weights.value(&spec.w, &w_eval, &big)?;
            if a.is_zero() {
                continue;
            }
            let b = weights.value(&spec.w_prime, &wp_eval, &small)?;
            if b.is_zero() {
                continue;
            }
            acc = &acc + &(&(&a * &b) * &weights.modulus_inverse(&small.0));
        }
        Ok(&acc * &weights.det_shift(t as i64, shift))
    })
}

/// `I_n(s, W, W', φ)`.
///
/// * `φ = 1_{𝔬^n}`: `Σ_λ W(ϖ^λ) W'(ϖ^λ) δ_{B_n}^{-1}(ϖ^λ) X^{|λ|}` over
///   dominant `λ` with `λ_n ≥ 0`.
/// * conductor shape: the reduced integral
///   `∫_{N_{n-1}\G_{n-1}} W(diag(g,1)) W'(diag(g,1)) ν(g)^{s-1} dg`, that is
///   `Σ_μ W(ϖ^μ,1) W'(ϖ^μ,1) δ_{B_{n-1}}^{-1}(ϖ^μ) q^{|μ|} X^{|μ|}`.
pub fn equal_size_series(spec: &IntegralSpec) -> Result<TruncatedSeries, IntegralError> {
    equal_size_series_with(spec, None)
}

pub fn equal_size_series_with(spec: &IntegralSpec, mutation: Option<Mutation>) -> Result<TruncatedSeries, IntegralError> {
    let phi = spec.phi.as_ref().ok_or(IntegralError::WrongFamily("n = m with a Schwartz function"))?;
    let weights = Weights { mutation };
    let w_eval = spec.w.evaluator(spec.depth);
    let wp_eval = spec.w_prime.evaluator(spec.depth);
    let n = spec.n;
    let (len, shift) = match phi {
        SchwartzShape::FullLattice => (n, 0),
        SchwartzShape::Conductor { .. } => (n - 1, 2),
    };
    sum_by_degree(spec.depth, |t| {
        let mut acc = BaseScalar::zero();
        for mu in dominant_cocharacters(len, t) {
            let small = Cocharacter(mu);
            let point = small.padded(n);
            let a = weights.value(&spec.w, &w_eval, &point)?;
            if a.is_zero() {
                continue;
            }
            let b = weights.value(&spec.w_prime, &wp_eval, &point)?;
            if b.is_zero() {
                continue;
            }
            acc = &acc + &(&(&a * &b) * &weights.modulus_inverse(&small.0));
        }
        Ok(&acc * &weights.det_shift(t as i64, shift))
    })
}

/// The same torus sum enumerated over the whole box `λ ∈ [0, depth]^len`
/// with no dominance pruning, relying on the integrand vanishing off its
/// support. Exponential in the rank; meant as a cross-check at small depth.
pub fn brute_force_series(spec: &IntegralSpec) -> Result<TruncatedSeries, IntegralError> {
    let n = spec.n;
    let (len, shift) = match &spec.phi {
        None => (spec.m, (spec.n - spec.m) as i64),
        Some(SchwartzShape::FullLattice) => (n, 0),
        Some(SchwartzShape::Conductor { .. }) => (n - 1, 2),
    };
    let mut coeffs = vec![BaseScalar::zero(); spec.depth + 1];
    let mut point = vec![0i64; len];
    loop {
        let t: i64 = point.iter().sum();
        if t as usize <= spec.depth {
            let small = Cocharacter(point.clone());
            let w = spec.w.value(&small.padded(n))?;
            let w_prime = spec.w_prime.value(&small.padded(spec.w_prime.size()))?;
            let weight = BaseScalar::u_pow(t * shift - modulus_u_exponent(&point));
            let slot = &mut coeffs[t as usize];
            *slot = &*slot + &(&(&w * &w_prime) * &weight);
        }
        // odometer over [0, depth]^len
        let Some(i) = point.iter().position(|&x| (x as usize) < spec.depth) else {
            break;
        };
        point[i] += 1;
        point[..i].iter_mut().for_each(|x| *x = 0);
    }
    Ok(TruncatedSeries::new(coeffs))
}

/// Dispatches on the integral family.
pub fn evaluate(spec: &IntegralSpec) -> Result<TruncatedSeries, IntegralError> {
    evaluate_with(spec, None)
}

pub fn evaluate_with(spec: &IntegralSpec, mutation: Option<Mutation>) -> Result<TruncatedSeries, IntegralError> {
    if spec.n > spec.m {
        hecke_series_with(spec, mutation)
    } else {
        equal_size_series_with(spec, mutation)
    }
}

/// Result of comparing a torus sum with a closed form.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Verdict {
    pub passed: bool,
    pub depth: usize,
    pub first_mismatch: Option<usize>,
}

impl From<SeriesComparison> for Verdict {
    fn from(c: SeriesComparison) -> Self {
        Self {
            passed: c.is_equal(),
            depth: c.compared_order,
            first_mismatch: c.first_mismatch,
        }
    }
}

/// An evaluated identity: the torus sum, the expanded closed form, and the
/// verdict.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub series: TruncatedSeries,
    pub closed_form: RationalFunction,
    pub verdict: Verdict,
}

/// Expands `closed` to the spec's depth and compares with the integral.
pub fn verify_identity(spec: &IntegralSpec, closed: &RationalFunction) -> Result<IdentityCheck, IntegralError> {
    verify_identity_with(spec, closed, None)
}

pub fn verify_identity_with(
    spec: &IntegralSpec,
    closed: &RationalFunction,
    mutation: Option<Mutation>,
) -> Result<IdentityCheck, IntegralError> {
    let series = evaluate_with(spec, mutation)?;
    let expected = closed.expand(spec.depth)?;
    Ok(IdentityCheck {
        verdict: series.compare(&expected).into(),
        series,
        closed_form: closed.clone(),
    })
}

/// `I_{l,k}(s, W_l^ess, W_k^0)` with `W_k^0` spherical in `Σ_k(1)`.
pub fn steinberg_distinct_spec(l: u32, k: u32, depth: usize) -> Result<IntegralSpec, IntegralError> {
    IntegralSpec::hecke(
        TorusFunction::EssentialSteinberg { l },
        TorusFunction::sigma(k as usize),
        depth,
    )
}

/// `I_l(s, W_l^ess, W_l^0, φ)` with the conductor-shaped `φ`.
///
/// For `l = 1` the reduced integral over `G_0` is the constant 1 and says
/// nothing; `St_1(1)` is the trivial character and the Tate integral with
/// `1_𝔬` is returned instead.
pub fn steinberg_equal_spec(l: u32, depth: usize) -> Result<IntegralSpec, IntegralError> {
    if l == 1 {
        return Ok(tate_spec(depth));
    }
    IntegralSpec::equal(
        TorusFunction::EssentialSteinberg { l },
        TorusFunction::sigma(l as usize),
        SchwartzShape::conductor(1)?,
        depth,
    )
}

/// `I_1(s, 1, 1, 1_𝔬)`.
pub fn tate_spec(depth: usize) -> IntegralSpec {
    IntegralSpec::equal(
        TorusFunction::EssentialSteinberg { l: 1 },
        TorusFunction::sigma(1),
        SchwartzShape::FullLattice,
        depth,
    )
    .expect("valid sizes")
}

/// `L(s, St_l, St_k)` for the trivial cuspidal.
pub fn steinberg_closed_form(l: u32, k: u32) -> Result<RationalFunction, IntegralError> {
    Ok(l_steinberg_pair(&LFactorSpec::family(l, k, 1, HalfInt::ZERO, RepKind::Steinberg)?)?)
}

/// `∏_{i,j} (1 - α_i β_j X)^{-1}`
pub fn cauchy_closed_form(alpha: &SatakeParams, beta: &SatakeParams) -> RationalFunction {
    let mut out = RationalFunction::one();
    for a in alpha.alphas() {
        for b in beta.alphas() {
            out = out.mul(&RationalFunction::geometric(a * b, 1));
        }
    }
    out
}

/// Spherical × spherical on `G_n` with `1_{𝔬^n}`: `Σ_n(1)` against its
/// twist by `ν^{1/2}`.
pub fn spherical_cauchy_spec(n: usize, depth: usize) -> Result<(IntegralSpec, RationalFunction), IntegralError> {
    let alpha = SatakeParams::sigma(n);
    let beta = SatakeParams::sigma(n).twisted(HalfInt::from_doubled(1));
    let closed = cauchy_closed_form(&alpha, &beta);
    let spec = IntegralSpec::equal(
        TorusFunction::Spherical(alpha),
        TorusFunction::Spherical(beta),
        SchwartzShape::FullLattice,
        depth,
    )?;
    Ok((spec, closed))
}

/// Everything checked for one instance of the partial fraction identity
/// `L(s, St_l(ρ), St_k(ρ')) = Σ_i λ_i L(s, ν^{(l-1)/2}ρ, ν^{(1-k+2i)/2}ρ')`.
#[derive(Clone, Debug, Serialize)]
pub struct KeyCheck {
    pub l: u32,
    pub k: u32,
    pub d: u32,
    pub s0: HalfInt,
    /// `recombine(partial_fractions)` equals the closed form.
    pub recombination: bool,
    /// `Σ λ_i = 1`.
    pub coefficient_sum_is_one: bool,
    /// `Σ λ_i · (closed-form summand)` equals the closed form.
    pub summand_sum: bool,
    /// For `r = 1`: each summand as a `G_1 × G_1` torus integral.
    pub summand_integrals: Vec<Verdict>,
    /// For `r = 1`, `s0 = 0`: `Σ λ_i · (summand integral)` against the
    /// Steinberg integral itself.
    pub steinberg_integral: Option<Verdict>,
}

impl KeyCheck {
    pub fn passed(&self) -> bool {
        self.recombination
            && self.coefficient_sum_is_one
            && self.summand_sum
            && self.summand_integrals.iter().all(|v| v.passed)
            && self.steinberg_integral.as_ref().is_none_or(|v| v.passed)
    }
}

/// Checks the partial fraction identity for `ρ` of degree `d` with `d`
/// self-twists, against `ν^{s0} ρ^∨`.
pub fn eq_key_check(l: u32, k: u32, d: u32, s0: HalfInt, depth: usize) -> Result<KeyCheck, IntegralError> {
    let spec = LFactorSpec::family(l, k, d, s0, RepKind::Steinberg)?;
    let target = l_steinberg_pair(&spec)?;
    let pf = partial_fractions(&spec)?;
    let recombination = recombine(&pf) == target;
    let coefficient_sum_is_one = pf.coefficient_sum().is_one();
    let summands = spec.summands();
    let summand_sum = pf
        .terms
        .iter()
        .zip(&summands)
        .fold(RationalFunction::zero(), |acc, (t, s)| acc.add(&s.scale(&t.coeff)))
        == target;

    let mut summand_integrals = Vec::new();
    let mut steinberg_integral = None;
    if d == 1 {
        let ki = k as i64;
        let left = TorusFunction::UnramifiedCharacter(HalfInt::from_doubled(l as i64 - 1));
        let mut weighted = TruncatedSeries::zero(depth);
        for (i, (term, closed)) in pf.terms.iter().zip(&summands).enumerate() {
            let twist = HalfInt::from_doubled(1 - ki + 2 * i as i64) + s0;
            let right = TorusFunction::Spherical(SatakeParams::character(twist));
            let ispec = IntegralSpec::equal(left.clone(), right, SchwartzShape::FullLattice, depth)?;
            let check = verify_identity(&ispec, closed)?;
            weighted = weighted.add(&check.series.scale(&term.coeff));
            summand_integrals.push(check.verdict);
        }
        if s0 == HalfInt::ZERO {
            let ispec = if l > k {
                steinberg_distinct_spec(l, k, depth)?
            } else {
                steinberg_equal_spec(l, depth)?
            };
            steinberg_integral = Some(evaluate(&ispec)?.compare(&weighted).into());
        }
    }
    Ok(KeyCheck {
        l,
        k,
        d,
        s0,
        recombination,
        coefficient_sum_is_one,
        summand_sum,
        summand_integrals,
        steinberg_integral,
    })
}
