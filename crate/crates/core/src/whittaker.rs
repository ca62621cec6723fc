//! Whittaker functions on the diagonal torus.
//!
//! Spherical vectors of unramified standard modules are evaluated with the
//! Shintani formula `W⁰(ϖ^λ) = δ_B^{1/2}(ϖ^λ) s_λ(α)` on dominant `λ` (and
//! zero elsewhere). The essential vector of `St_l(1)` uses its explicit
//! torus formula. Throughout, `ψ` has conductor `𝔬`.

use serde::Serialize;

use crate::error::WhittakerError;
use crate::halfint::HalfInt;
use crate::scalar::BaseScalar;

/// Exponents `λ` of the torus element `diag(ϖ^{λ_1}, …, ϖ^{λ_n})`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Cocharacter(pub Vec<i64>);

impl Cocharacter {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// `Σ λ_i`, i.e. `-val(det)`.
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `(λ, 0, …, 0)` of length `n`.
    pub fn padded(&self, n: usize) -> Self {
        let mut v = self.0.clone();
        v.resize(n, 0);
        Self(v)
    }
}

/// Exponent of `u` in `δ_{B_n}(ϖ^λ) = ∏_{i<j} |ϖ^{λ_i - λ_j}| = q^{-Σ(n+1-2i)λ_i}`
/// for the upper triangular Borel.
pub fn modulus_u_exponent(lambda: &[i64]) -> i64 {
    let n = lambda.len() as i64;
    -2 * lambda
        .iter()
        .enumerate()
        .map(|(i, &x)| (n - 1 - 2 * i as i64) * x)
        .sum::<i64>()
}

/// Values at `ϖ` of the unramified characters inducing a standard module.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct SatakeParams(Vec<BaseScalar>);

impl SatakeParams {
    pub fn new(alphas: Vec<BaseScalar>) -> Result<Self, WhittakerError> {
        if alphas.is_empty() || alphas.iter().any(BaseScalar::is_zero) {
            return Err(WhittakerError::BadParameters);
        }
        Ok(Self(alphas))
    }

    /// `q^{(k+1-2i)/2}`, `i = 1..k`: the parameters of `Σ_k(1)`.
    pub fn sigma(k: usize) -> Self {
        assert!(k >= 1);
        let k = k as i64;
        Self((1..=k).map(|i| BaseScalar::u_pow(k + 1 - 2 * i)).collect())
    }

    /// Parameter of the character `ν^c` of `G_1`: `ν^c(ϖ) = q^{-c}`.
    pub fn character(c: HalfInt) -> Self {
        Self(vec![BaseScalar::u_pow(-c.doubled())])
    }

    /// Parameters of the twist by `ν^c`.
    pub fn twisted(&self, c: HalfInt) -> Self {
        let t = BaseScalar::u_pow(-c.doubled());
        Self(self.0.iter().map(|a| a * &t).collect())
    }

    pub fn alphas(&self) -> &[BaseScalar] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Complete homogeneous symmetric polynomials of a fixed parameter list,
/// tabulated up to some degree, and Schur polynomials built from them by
/// the Jacobi–Trudi determinant.
#[derive(Clone, Debug)]
pub struct SchurTable {
    alphas: Vec<BaseScalar>,
    h: Vec<BaseScalar>,
    product: BaseScalar,
}

impl SchurTable {
    pub fn new(params: &SatakeParams, max_degree: usize) -> Self {
        let alphas = params.0.clone();
        Self {
            h: complete_homogeneous(&alphas, max_degree),
            product: alphas.iter().cloned().product(),
            alphas,
        }
    }

    fn h(&self, m: i64) -> BaseScalar {
        if m < 0 {
            BaseScalar::zero()
        } else if let Some(v) = self.h.get(m as usize) {
            v.clone()
        } else {
            complete_homogeneous(&self.alphas, m as usize).pop().unwrap()
        }
    }

    /// `s_λ(α)` for dominant `λ`, possibly with negative entries.
    pub fn schur(&self, lambda: &Cocharacter) -> Result<BaseScalar, WhittakerError> {
        check_schur_input(&self.alphas, lambda)?;
        let shift = *lambda.0.last().unwrap();
        let parts: Vec<i64> = lambda.0.iter().map(|x| x - shift).filter(|&x| x > 0).collect();
        let size = parts.len();
        let matrix: Vec<Vec<BaseScalar>> = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| self.h(parts[i] - i as i64 + j as i64))
                    .collect()
            })
            .collect();
        let s = determinant(matrix);
        Ok(&s * &self.product.pow(shift)?)
    }
}

fn check_schur_input(alphas: &[BaseScalar], lambda: &Cocharacter) -> Result<(), WhittakerError> {
    if lambda.len() != alphas.len() {
        return Err(WhittakerError::LengthMismatch {
            got: lambda.len(),
            expected: alphas.len(),
        });
    }
    if !lambda.is_dominant() {
        return Err(WhittakerError::NotDominant(lambda.0.clone()));
    }
    Ok(())
}

/// `[h_0, …, h_max](α)` via `h_m(α_1..α_j) = h_m(α_1..α_{j-1}) + α_j h_{m-1}(α_1..α_j)`.
fn complete_homogeneous(alphas: &[BaseScalar], max_degree: usize) -> Vec<BaseScalar> {
    let mut h = vec![BaseScalar::zero(); max_degree + 1];
    h[0] = BaseScalar::one();
    for a in alphas {
        for m in 1..=max_degree {
            let add = a * &h[m - 1];
            h[m] = &h[m] + &add;
        }
    }
    h
}

/// Determinant over ℚ(u). Small matrices use cofactor expansion, which never
/// divides; larger ones fall back to Gaussian elimination.
pub fn determinant(m: Vec<Vec<BaseScalar>>) -> BaseScalar {
    match m.len() {
        0 => BaseScalar::one(),
        n if n <= 6 => laplace(&m, &(0..n).collect::<Vec<_>>(), 0),
        _ => gaussian(m),
    }
}

fn laplace(m: &[Vec<BaseScalar>], cols: &[usize], row: usize) -> BaseScalar {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = BaseScalar::zero();
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = laplace(m, &rest, row + 1);
        let term = entry * &minor;
        acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn gaussian(mut m: Vec<Vec<BaseScalar>>) -> BaseScalar {
    let n = m.len();
    let mut det = BaseScalar::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BaseScalar::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det = &det * &p;
        let p_inv = p.inv().unwrap();
        let (upper, lower) = m.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        for row in lower.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] * &p_inv;
            for (entry, above) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *entry = &*entry - &(&f * above);
            }
        }
    }
    det
}

/// `s_λ(α)` by Jacobi–Trudi.
pub fn schur(params: &SatakeParams, lambda: &Cocharacter) -> Result<BaseScalar, WhittakerError> {
    check_schur_input(params.alphas(), lambda)?;
    let shift = *lambda.0.last().unwrap();
    let top = (lambda.0[0] - shift).max(0) as usize;
    SchurTable::new(params, top).schur(lambda)
}

/// `s_λ(α)` as the ratio of alternants `det(α_i^{λ_j+n-j}) / ∏_{i<j}(α_i - α_j)`.
pub fn schur_bialternant(params: &SatakeParams, lambda: &Cocharacter) -> Result<BaseScalar, WhittakerError> {
    let alphas = params.alphas();
    check_schur_input(alphas, lambda)?;
    let n = alphas.len();
    let mut vandermonde = BaseScalar::one();
    for i in 0..n {
        for j in i + 1..n {
            vandermonde = &vandermonde * &(&alphas[i] - &alphas[j]);
        }
    }
    if vandermonde.is_zero() {
        return Err(WhittakerError::DegenerateAlternant);
    }
    let matrix = alphas
        .iter()
        .map(|a| {
            (0..n)
                .map(|j| a.pow(lambda.0[j] + (n - 1 - j) as i64))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(determinant(matrix).checked_div(&vandermonde)?)
}

/// `δ_B^{1/2}(ϖ^λ) s_λ(α)` on dominant `λ`, zero otherwise.
pub fn spherical_value(params: &SatakeParams, lambda: &Cocharacter) -> Result<BaseScalar, WhittakerError> {
    spherical_from_table(&SchurTable::new(params, 0), lambda)
}

fn spherical_from_table(table: &SchurTable, lambda: &Cocharacter) -> Result<BaseScalar, WhittakerError> {
    if lambda.len() != table.alphas.len() {
        return Err(WhittakerError::LengthMismatch {
            got: lambda.len(),
            expected: table.alphas.len(),
        });
    }
    if !lambda.is_dominant() {
        return Ok(BaseScalar::zero());
    }
    let half_modulus = BaseScalar::u_pow(modulus_u_exponent(&lambda.0) / 2);
    Ok(&half_modulus * &table.schur(lambda)?)
}

/// Essential vector of `St_l(1)` at `diag(ϖ^λ, 1)`, `λ` of length `l - 1`:
/// `ν(a_1)^{l-1} 1_𝔬(a_1) ∏_{i≥2} 1_{𝔬^×}(a_i)`, i.e. `q^{-λ_1(l-1)}` when
/// `λ = (λ_1, 0, …, 0)` with `λ_1 ≥ 0` and zero otherwise.
pub fn essential_value(l: u32, lambda: &Cocharacter) -> Result<BaseScalar, WhittakerError> {
    if l < 2 {
        return Err(WhittakerError::EssentialTooSmall(l));
    }
    if lambda.len() != (l - 1) as usize {
        return Err(WhittakerError::LengthMismatch {
            got: lambda.len(),
            expected: (l - 1) as usize,
        });
    }
    let v = lambda.0[0];
    if v < 0 || lambda.0[1..].iter().any(|&x| x != 0) {
        return Ok(BaseScalar::zero());
    }
    Ok(BaseScalar::q_pow(-v * (l as i64 - 1)))
}

/// A Whittaker function known through its torus values.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum TorusFunction {
    /// Normalized spherical vector with the given Satake parameters.
    Spherical(SatakeParams),
    /// Essential vector of `St_l(1)`; for `l = 1` this is the constant 1.
    EssentialSteinberg { l: u32 },
    /// The character `ν^c` of `G_1`.
    UnramifiedCharacter(HalfInt),
}

impl TorusFunction {
    /// Spherical vector of `Σ_k(1)`.
    pub fn sigma(k: usize) -> Self {
        Self::Spherical(SatakeParams::sigma(k))
    }

    /// Size `n` of the group `G_n` the function lives on.
    pub fn size(&self) -> usize {
        match self {
            Self::Spherical(p) => p.len(),
            Self::EssentialSteinberg { l } => *l as usize,
            Self::UnramifiedCharacter(_) => 1,
        }
    }

    /// Precomputes what repeated evaluation needs, for cocharacters whose
    /// entries stay below `max_degree`.
    pub fn evaluator(&self, max_degree: usize) -> TorusEvaluator<'_> {
        let table = match self {
            Self::Spherical(p) => Some(SchurTable::new(p, max_degree)),
            _ => None,
        };
        TorusEvaluator { func: self, table }
    }

    pub fn value(&self, lambda: &Cocharacter) -> Result<BaseScalar, WhittakerError> {
        self.evaluator(0).value(lambda)
    }
}

/// Immutable evaluation cache for a [`TorusFunction`]; safe to share
/// between threads.
#[derive(Clone, Debug)]
pub struct TorusEvaluator<'a> {
    func: &'a TorusFunction,
    table: Option<SchurTable>,
}

impl TorusEvaluator<'_> {
    pub fn value(&self, lambda: &Cocharacter) -> Result<BaseScalar, WhittakerError> {
        let n = self.func.size();
        if lambda.len() != n {
            return Err(WhittakerError::LengthMismatch {
                got: lambda.len(),
                expected: n,
            });
        }
        match self.func {
            TorusFunction::Spherical(_) => spherical_from_table(self.table.as_ref().unwrap(), lambda),
            TorusFunction::EssentialSteinberg { l: 1 } => Ok(BaseScalar::one()),
            TorusFunction::EssentialSteinberg { l } => {
                // trivial central character: translate so the last entry is 0
                let last = lambda.0[n - 1];
                let head: Vec<i64> = lambda.0[..n - 1].iter().map(|x| x - last).collect();
                essential_value(*l, &Cocharacter(head))
            }
            TorusFunction::UnramifiedCharacter(c) => Ok(BaseScalar::u_pow(-c.doubled() * lambda.0[0])),
        }
    }
}
