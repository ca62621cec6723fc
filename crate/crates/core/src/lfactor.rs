//! Closed-form Rankin–Selberg L-factors for `St_l(ρ)` against `St_k`,
//! `Σ_k` or `Sp_k` of `ρ'`, and their partial fraction decomposition in
//! `Y = X^d`.

use serde::Serialize;

use crate::error::LFactorError;
use crate::halfint::HalfInt;
use crate::ratfunc::RationalFunction;
use crate::scalar::BaseScalar;
use crate::segment::{derivative_multiset, CuspidalDatum, RepDescriptor, RepKind};

/// `L(s, ρ, ρ')` for cuspidals, evaluated at `s + shift`.
///
/// This is `1` unless `ρ' ≅ ν^{s0} ρ^∨`. In that case the `d` unramified
/// self-twists of `ρ` give `∏_χ (1 - χ(ϖ)X) = 1 - X^d`, so
/// `L(s + c, ρ, ρ^∨) = 1 / (1 - q^{-cd} X^d)` with `c = shift + s0`.
pub fn l_cuspidal_pair(rho: &CuspidalDatum, rho_prime: &CuspidalDatum, shift: HalfInt) -> RationalFunction {
    match rho.dual_twist_offset(rho_prime) {
        None => RationalFunction::one(),
        Some(offset) => {
            let c = shift + offset;
            let d = rho.torsion() as i64;
            RationalFunction::geometric(BaseScalar::u_pow(-c.doubled() * d), d as usize)
        }
    }
}

/// A pair `(St_l(ρ), R_k(ρ'))` with `R ∈ {St, Σ, Sp}` and `l ≥ k ≥ 1`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LFactorSpec {
    l: u32,
    k: u32,
    right_kind: RepKind,
    rho: CuspidalDatum,
    rho_prime: CuspidalDatum,
}

impl LFactorSpec {
    pub fn new(left: &RepDescriptor, right: &RepDescriptor) -> Result<Self, LFactorError> {
        if left.kind() != RepKind::Steinberg {
            return Err(LFactorError::LeftNotSteinberg);
        }
        if !matches!(
            right.kind(),
            RepKind::Steinberg | RepKind::StandardSigma | RepKind::Speh
        ) {
            return Err(LFactorError::BadRightKind);
        }
        let l = left.length().unwrap();
        let k = right.length().unwrap();
        if !(l >= k && k >= 1) {
            return Err(LFactorError::BadSizes { l, k });
        }
        let rho = left.datum().unwrap().clone();
        let rho_prime = right.datum().unwrap().clone();
        if rho.dual_twist_offset(&rho_prime).is_some() && rho.degree() != rho_prime.degree() {
            return Err(LFactorError::DegreeMismatch(rho.degree(), rho_prime.degree()));
        }
        Ok(Self {
            l,
            k,
            right_kind: right.kind(),
            rho,
            rho_prime,
        })
    }

    /// `ρ` of degree `r = d` with `d` self-twists, against `ν^{s0} ρ^∨`.
    pub fn family(l: u32, k: u32, d: u32, s0: HalfInt, right_kind: RepKind) -> Result<Self, LFactorError> {
        let rho = CuspidalDatum::new("rho", d, d)?;
        let rho_prime = rho.contragredient().twisted(s0);
        Self::new(
            &RepDescriptor::steinberg(l, rho)?,
            &RepDescriptor::of_kind(right_kind, k, rho_prime)?,
        )
    }

    /// Same sizes, with `ρ'` not an unramified twist of `ρ^∨`.
    pub fn family_distinct(l: u32, k: u32, d: u32, right_kind: RepKind) -> Result<Self, LFactorError> {
        let rho = CuspidalDatum::new("rho", d, d)?;
        let other = CuspidalDatum::new("sigma", d, d)?.contragredient();
        Self::new(
            &RepDescriptor::steinberg(l, rho)?,
            &RepDescriptor::of_kind(right_kind, k, other)?,
        )
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn right_kind(&self) -> RepKind {
        self.right_kind
    }

    pub fn rho(&self) -> &CuspidalDatum {
        &self.rho
    }

    pub fn rho_prime(&self) -> &CuspidalDatum {
        &self.rho_prime
    }

    pub fn torsion(&self) -> u32 {
        self.rho.torsion()
    }

    /// `s0` with `ρ' ≅ ν^{s0} ρ^∨`, if it exists.
    pub fn s0(&self) -> Option<HalfInt> {
        self.rho.dual_twist_offset(&self.rho_prime)
    }

    pub fn with_right_kind(&self, kind: RepKind) -> Self {
        Self {
            right_kind: kind,
            ..self.clone()
        }
    }

    /// `ν^{(l-1)/2} ρ`, the cuspidal end of the Steinberg segment.
    fn left_top(&self) -> CuspidalDatum {
        self.rho.twisted(HalfInt::from_doubled(self.l as i64 - 1))
    }

    /// Poles `c_i` of the factors `1 / (1 - c_i Y)`, `i = 0..k-1`:
    /// `c_i = q^{(k-l-2i)d/2 - s0·d}`.
    pub fn poles(&self) -> Option<Vec<BaseScalar>> {
        let s0 = self.s0()?;
        let (l, k, d) = (self.l as i64, self.k as i64, self.torsion() as i64);
        Some(
            (0..k)
                .map(|i| BaseScalar::u_pow((k - l - 2 * i) * d - s0.doubled() * d))
                .collect(),
        )
    }

    /// The summands `L(s, ν^{(l-1)/2}ρ, ν^{(1-k+2i)/2}ρ')`, `i = 0..k-1`.
    pub fn summands(&self) -> Vec<RationalFunction> {
        let top = self.left_top();
        let k = self.k as i64;
        (0..k)
            .map(|i| {
                l_cuspidal_pair(&top, &self.rho_prime.twisted(HalfInt::from_doubled(1 - k + 2 * i)), HalfInt::ZERO)
            })
            .collect()
    }
}

/// `L(s, St_l(ρ), R_k(ρ'))` for `R ∈ {St, Σ, Sp}`.
///
/// Each right-hand kind is computed by its own route:
/// * `St_k`: `∏_{i=1}^{k} L(s, ν^{(l-1)/2}ρ, ν^{(k+1-2i)/2}ρ')`;
/// * `Σ_k`: product over the highest derivative `Σ_k(ρ')^{((k-1)r)}`;
/// * `Sp_k`: through its standard module `Σ_k(ρ')`.
pub fn l_steinberg_pair(spec: &LFactorSpec) -> Result<RationalFunction, LFactorError> {
    let top = spec.left_top();
    let k = spec.k as i64;
    let factors: Vec<RationalFunction> = match spec.right_kind {
        RepKind::Steinberg => (1..=k)
            .map(|i| {
                l_cuspidal_pair(&top, &spec.rho_prime.twisted(HalfInt::from_doubled(k + 1 - 2 * i)), HalfInt::ZERO)
            })
            .collect(),
        RepKind::StandardSigma | RepKind::Speh => {
            let sigma = RepDescriptor::sigma(spec.k, spec.rho_prime.clone())?;
            let level = (spec.k - 1) * spec.rho_prime.degree();
            derivative_multiset(&sigma, level)?
                .iter()
                .map(|sigma_i| l_cuspidal_pair(&top, sigma_i, HalfInt::ZERO))
                .collect()
        }
        RepKind::Product => return Err(LFactorError::BadRightKind),
    };
    Ok(factors
        .iter()
        .fold(RationalFunction::one(), |acc, f| acc.mul(f)))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PartialFractionTerm {
    pub pole: BaseScalar,
    pub coeff: BaseScalar,
}

/// `Σ_i λ_i / (1 - c_i Y)` with `Y = X^d`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PartialFraction {
    pub d: u32,
    pub terms: Vec<PartialFractionTerm>,
}

impl PartialFraction {
    pub fn coefficient_sum(&self) -> BaseScalar {
        self.terms.iter().map(|t| t.coeff.clone()).sum()
    }
}

/// Residues at simple poles: `λ_i = ∏_{j≠i} 1 / (1 - c_j / c_i)`.
pub fn partial_fractions(spec: &LFactorSpec) -> Result<PartialFraction, LFactorError> {
    let poles = spec.poles().ok_or(LFactorError::NoPoles)?;
    for (i, a) in poles.iter().enumerate() {
        if poles[i + 1..].contains(a) {
            return Err(LFactorError::RepeatedPole);
        }
    }
    let one = BaseScalar::one();
    let terms = poles
        .iter()
        .enumerate()
        .map(|(i, ci)| {
            let mut denom = BaseScalar::one();
            for (j, cj) in poles.iter().enumerate() {
                if j != i {
                    denom = &denom * &(&one - &cj.checked_div(ci)?);
                }
            }
            Ok(PartialFractionTerm {
                pole: ci.clone(),
                coeff: denom.inv()?,
            })
        })
        .collect::<Result<Vec<_>, LFactorError>>()?;
    Ok(PartialFraction {
        d: spec.torsion(),
        terms,
    })
}

/// Sums the decomposition back over a common denominator, in `X`.
pub fn recombine(pf: &PartialFraction) -> RationalFunction {
    pf.terms.iter().fold(RationalFunction::zero(), |acc, t| {
        acc.add(&RationalFunction::geometric(t.pole.clone(), pf.d as usize).scale(&t.coeff))
    })
}
