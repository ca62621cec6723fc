//! Worked examples for each operation, checked against hand-computed values.

use rankin_core::integral::{
    equal_size_series, hecke_series, steinberg_closed_form, steinberg_distinct_spec, steinberg_equal_spec,
    tate_spec, verify_identity, IntegralSpec, SchwartzShape,
};
use rankin_core::lfactor::{l_cuspidal_pair, l_steinberg_pair, partial_fractions, recombine, LFactorSpec};
use rankin_core::segment::{
    derivative_multiset, linked, precedes, zelevinsky_dual_discrete, CuspidalDatum, RepDescriptor, RepKind, Segment,
};
use rankin_core::whittaker::{essential_value, schur, spherical_value, Cocharacter, SatakeParams, TorusFunction};
use rankin_core::{series_eq, BaseScalar, HalfInt, RationalFunction, TruncatedSeries, XPoly};

fn q(e: i64) -> BaseScalar {
    BaseScalar::q_pow(e)
}

fn int(n: i64) -> BaseScalar {
    BaseScalar::from_i64(n)
}

fn one_minus(c: BaseScalar) -> XPoly {
    XPoly::one_minus(c, 1)
}

fn geometric(c: BaseScalar) -> RationalFunction {
    RationalFunction::geometric(c, 1)
}

fn series(coeffs: Vec<BaseScalar>) -> TruncatedSeries {
    TruncatedSeries::new(coeffs)
}

// ---- base field

#[test]
fn scalar_examples() {
    assert_eq!(&BaseScalar::u_pow(1) * &BaseScalar::u_pow(1), q(1));
    let a = (&int(1) - &q(-1)).inv().unwrap();
    let b = (&int(1) - &q(1)).inv().unwrap();
    assert!((&a + &b).is_one());
    assert!(q(1).checked_div(&q(1)).unwrap().is_one());
}

#[test]
fn rational_function_normalization() {
    let x = |c: Vec<BaseScalar>| XPoly::new(c);
    let r = RationalFunction::new(x(vec![int(1), int(0), int(-1)]), one_minus(int(1))).unwrap();
    assert_eq!(r, RationalFunction::from_poly(x(vec![int(1), int(1)])));

    let r = RationalFunction::new(XPoly::constant(int(2)), one_minus(q(-1)).scale(&int(2))).unwrap();
    assert_eq!(r, geometric(q(-1)));
    assert!(r.denominator().coeff(0).is_one());

    let r = RationalFunction::new(XPoly::monomial(1, int(1)), XPoly::monomial(1, int(1)).mul(&one_minus(int(1))))
        .unwrap();
    assert_eq!(r, geometric(int(1)));
}

#[test]
fn expansion_examples() {
    assert_eq!(geometric(int(1)).expand(3).unwrap(), series(vec![int(1); 4]));
    let r = geometric(int(1)).mul(&geometric(q(-1)));
    let expected = series(vec![int(1), &int(1) + &q(-1), &(&int(1) + &q(-1)) + &q(-2)]);
    assert_eq!(r.expand(2).unwrap(), expected);
    let r = RationalFunction::from_poly(XPoly::new(vec![int(1), int(1)]));
    assert_eq!(r.expand(0).unwrap(), series(vec![int(1)]));
}

#[test]
fn series_comparison_examples() {
    let ones = series(vec![int(1); 6]);
    assert_eq!(series_eq(&geometric(int(1)).expand(5).unwrap(), &ones), (true, None));
    let (eq, at) = series_eq(&geometric(int(1)).expand(5).unwrap(), &geometric(q(1)).expand(5).unwrap());
    assert!(!eq);
    assert_eq!(at, Some(1));
    let r = geometric(q(-1)).mul(&geometric(BaseScalar::u_pow(3)));
    let by_product = geometric(q(-1)).expand(7).unwrap().mul(&geometric(BaseScalar::u_pow(3)).expand(7).unwrap());
    assert_eq!(series_eq(&r.expand(7).unwrap(), &by_product), (true, None));
}

// ---- segments

fn rho() -> CuspidalDatum {
    CuspidalDatum::new("rho", 1, 1).unwrap()
}

fn seg(a: i64, b: i64) -> Segment {
    Segment::new(rho(), HalfInt::from_int(a), HalfInt::from_int(b)).unwrap()
}

#[test]
fn linked_and_precedes_examples() {
    assert!(linked(&seg(0, 1), &seg(1, 2)));
    assert!(!linked(&seg(0, 1), &seg(0, 1)));
    assert!(!linked(&seg(0, 3), &seg(1, 2)));
    assert!(precedes(&seg(0, 1), &seg(1, 2)));
    assert!(!precedes(&seg(1, 2), &seg(0, 1)));
    assert!(!precedes(&seg(0, 0), &seg(2, 2)));
}

#[test]
fn standard_and_generic_examples() {
    for k in 1..=5 {
        let sigma = RepDescriptor::sigma(k, rho()).unwrap();
        assert!(sigma.is_standard());
        let mut reversed = sigma.defining_product();
        reversed.reverse();
        assert_eq!(RepDescriptor::product(reversed).unwrap().is_standard(), k == 1);
    }
    assert!(RepDescriptor::product(vec![seg(0, 4)]).unwrap().is_standard());
    assert!(RepDescriptor::steinberg(4, rho()).unwrap().is_generic_product());
    assert!(!RepDescriptor::product(vec![seg(0, 1), seg(1, 2)]).unwrap().is_generic_product());
    assert!(RepDescriptor::product(vec![seg(0, 0), seg(2, 2)]).unwrap().is_generic_product());
}

#[test]
fn zelevinsky_dual_examples() {
    let st3 = RepDescriptor::steinberg(3, rho()).unwrap();
    let sp3 = RepDescriptor::speh(3, rho()).unwrap();
    assert_eq!(zelevinsky_dual_discrete(&st3).unwrap(), sp3);
    assert_eq!(zelevinsky_dual_discrete(&sp3).unwrap(), st3);
    let st1 = RepDescriptor::steinberg(1, rho()).unwrap();
    let sp1 = zelevinsky_dual_discrete(&st1).unwrap();
    assert_eq!(sp1.defining_product(), st1.defining_product());
}

#[test]
fn derivative_examples() {
    let dual = rho().contragredient();
    let sigma2 = derivative_multiset(&RepDescriptor::sigma(2, dual.clone()).unwrap(), 1).unwrap();
    assert_eq!(sigma2, vec![dual.twisted(HalfInt::from_doubled(-1)), dual.twisted(HalfInt::from_doubled(1))]);
    let st2 = derivative_multiset(&RepDescriptor::steinberg(2, dual.clone()).unwrap(), 1).unwrap();
    assert_eq!(st2, vec![dual.twisted(HalfInt::from_doubled(1))]);
    let sigma1 = derivative_multiset(&RepDescriptor::sigma(1, dual.clone()).unwrap(), 0).unwrap();
    assert_eq!(sigma1, vec![dual]);
}

// ---- L-factors

#[test]
fn cuspidal_pair_examples() {
    let triv = CuspidalDatum::trivial();
    assert_eq!(l_cuspidal_pair(&triv, &triv.contragredient(), HalfInt::ZERO), geometric(int(1)));
    let other = CuspidalDatum::new("sigma", 1, 1).unwrap();
    assert!(l_cuspidal_pair(&triv, &other, HalfInt::ZERO).is_one());
    let r2 = CuspidalDatum::new("rho", 2, 2).unwrap();
    assert_eq!(
        l_cuspidal_pair(&r2, &r2.contragredient(), HalfInt::ZERO),
        RationalFunction::geometric(int(1), 2)
    );
}

#[test]
fn steinberg_pair_examples() {
    let trivial = |l, k| LFactorSpec::family(l, k, 1, HalfInt::ZERO, RepKind::Steinberg).unwrap();
    assert_eq!(l_steinberg_pair(&trivial(2, 2)).unwrap(), geometric(int(1)).mul(&geometric(q(-1))));
    assert_eq!(l_steinberg_pair(&trivial(3, 1)).unwrap(), geometric(q(-1)));
    let distinct = LFactorSpec::family_distinct(4, 2, 1, RepKind::Steinberg).unwrap();
    assert!(l_steinberg_pair(&distinct).unwrap().is_one());
}

#[test]
fn partial_fraction_examples() {
    let spec = LFactorSpec::family(2, 2, 1, HalfInt::ZERO, RepKind::Steinberg).unwrap();
    let pf = partial_fractions(&spec).unwrap();
    let poles: Vec<_> = pf.terms.iter().map(|t| t.pole.clone()).collect();
    assert_eq!(poles, vec![int(1), q(-1)]);
    let q_minus_1 = &q(1) - &int(1);
    assert_eq!(pf.terms[0].coeff, q(1).checked_div(&q_minus_1).unwrap());
    assert_eq!(pf.terms[1].coeff, int(-1).checked_div(&q_minus_1).unwrap());
    assert_eq!(recombine(&pf), l_steinberg_pair(&spec).unwrap());

    let single = partial_fractions(&LFactorSpec::family(3, 1, 2, HalfInt::ZERO, RepKind::Steinberg).unwrap()).unwrap();
    assert_eq!(single.terms.len(), 1);
    assert!(single.terms[0].coeff.is_one());

    for (l, k, d) in [(2, 2, 1), (4, 2, 3), (5, 3, 2), (6, 3, 3)] {
        let spec = LFactorSpec::family(l, k, d, HalfInt::from_doubled(1), RepKind::Steinberg).unwrap();
        let pf = partial_fractions(&spec).unwrap();
        assert!(pf.coefficient_sum().is_one());
        assert_eq!(recombine(&pf), l_steinberg_pair(&spec).unwrap());
    }
}

#[test]
fn recombination_examples() {
    use rankin_core::lfactor::{PartialFraction, PartialFractionTerm};
    let single = PartialFraction {
        d: 1,
        terms: vec![PartialFractionTerm {
            pole: int(1),
            coeff: int(1),
        }],
    };
    assert_eq!(recombine(&single), geometric(int(1)));
    let two = PartialFraction {
        d: 1,
        terms: vec![
            PartialFractionTerm {
                pole: q(2),
                coeff: int(3),
            },
            PartialFractionTerm {
                pole: q(-1),
                coeff: int(-2),
            },
        ],
    };
    assert!(recombine(&two).expand(0).unwrap().coeff(0).is_one());
}

// ---- Whittaker values

#[test]
fn schur_examples() {
    let sigma2 = SatakeParams::sigma(2);
    assert!(schur(&sigma2, &Cocharacter(vec![0, 0])).unwrap().is_one());
    let (a, b) = (int(3), q(5));
    let ab = SatakeParams::new(vec![a.clone(), b.clone()]).unwrap();
    assert_eq!(schur(&ab, &Cocharacter(vec![1, 0])).unwrap(), &a + &b);
    let expected = &(&q(1) + &int(1)) + &q(-1);
    assert_eq!(schur(&sigma2, &Cocharacter(vec![2, 0])).unwrap(), expected);
}

#[test]
fn spherical_examples() {
    let sigma2 = SatakeParams::sigma(2);
    assert_eq!(spherical_value(&sigma2, &Cocharacter(vec![1, 0])).unwrap(), &int(1) + &q(-1));
    assert!(spherical_value(&sigma2, &Cocharacter(vec![0, 1])).unwrap().is_zero());
    assert!(spherical_value(&SatakeParams::sigma(4), &Cocharacter(vec![0; 4])).unwrap().is_one());
}

#[test]
fn essential_examples() {
    assert_eq!(essential_value(2, &Cocharacter(vec![3])).unwrap(), q(-3));
    assert!(essential_value(4, &Cocharacter(vec![1, 1, 0])).unwrap().is_zero());
    for l in 2..6 {
        assert!(essential_value(l, &Cocharacter(vec![0; (l - 1) as usize])).unwrap().is_one());
    }
}

// ---- integrals

#[test]
fn hecke_series_examples() {
    let depth = 12;
    let s = hecke_series(&steinberg_distinct_spec(2, 1, depth).unwrap()).unwrap();
    assert_eq!(s, geometric(BaseScalar::u_pow(-1)).expand(depth).unwrap());

    let spec = IntegralSpec::hecke(
        TorusFunction::sigma(3),
        TorusFunction::UnramifiedCharacter(HalfInt::from_int(1)),
        depth,
    )
    .unwrap();
    let closed = geometric(int(1)).mul(&geometric(q(-1))).mul(&geometric(q(-2)));
    assert_eq!(hecke_series(&spec).unwrap(), closed.expand(depth).unwrap());

    let s = hecke_series(&steinberg_distinct_spec(4, 2, 0).unwrap()).unwrap();
    assert!(s.coeff(0).is_one());
    assert_eq!(s.order(), 0);
}

#[test]
fn equal_size_examples() {
    let depth = 12;
    let s = equal_size_series(&steinberg_equal_spec(2, depth).unwrap()).unwrap();
    assert_eq!(s, geometric(int(1)).mul(&geometric(q(-1))).expand(depth).unwrap());

    let alpha = SatakeParams::sigma(2);
    let spec = IntegralSpec::equal(
        TorusFunction::Spherical(alpha.clone()),
        TorusFunction::Spherical(alpha.clone()),
        SchwartzShape::FullLattice,
        depth,
    )
    .unwrap();
    let mut closed = RationalFunction::one();
    for a in alpha.alphas() {
        for b in alpha.alphas() {
            closed = closed.mul(&geometric(a * b));
        }
    }
    assert_eq!(equal_size_series(&spec).unwrap(), closed.expand(depth).unwrap());

    assert_eq!(equal_size_series(&tate_spec(depth)).unwrap(), geometric(int(1)).expand(depth).unwrap());
}

#[test]
fn identity_examples() {
    let c = verify_identity(&steinberg_distinct_spec(3, 2, 24).unwrap(), &steinberg_closed_form(3, 2).unwrap()).unwrap();
    assert!(c.verdict.passed);
    let c = verify_identity(&steinberg_equal_spec(3, 24).unwrap(), &steinberg_closed_form(3, 3).unwrap()).unwrap();
    assert!(c.verdict.passed);
    let c = verify_identity(&tate_spec(10), &geometric(q(1))).unwrap();
    assert!(!c.verdict.passed);
    assert_eq!(c.verdict.first_mismatch, Some(1));
}

#[test]
fn key_identity_examples() {
    let spec = LFactorSpec::family(2, 2, 1, HalfInt::ZERO, RepKind::Steinberg).unwrap();
    let pf = partial_fractions(&spec).unwrap();
    let sum = geometric(int(1))
        .scale(&pf.terms[0].coeff)
        .add(&geometric(q(-1)).scale(&pf.terms[1].coeff));
    assert_eq!(sum, geometric(int(1)).mul(&geometric(q(-1))));

    let spec = LFactorSpec::family(4, 2, 3, HalfInt::ZERO, RepKind::Steinberg).unwrap();
    let target = l_steinberg_pair(&spec).unwrap();
    assert_eq!(target.denominator().degree(), Some(6));
    assert!(target.denominator().coeffs().iter().enumerate().all(|(i, c)| i % 3 == 0 || c.is_zero()));
    assert_eq!(recombine(&partial_fractions(&spec).unwrap()), target);

    let spec = LFactorSpec::family(3, 1, 1, HalfInt::ZERO, RepKind::Steinberg).unwrap();
    assert_eq!(spec.summands(), vec![l_steinberg_pair(&spec).unwrap()]);
}
