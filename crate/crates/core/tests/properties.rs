use num_traits::One;
use proptest::prelude::*;

use rankin_core::integral::{
    dominant_cocharacters, evaluate, spherical_cauchy_spec, steinberg_distinct_spec, steinberg_equal_spec,
    IntegralSpec, SchwartzShape,
};
use rankin_core::lfactor::{partial_fractions, LFactorSpec};
use rankin_core::segment::{
    derivative_multiset, linked, precedes, zelevinsky_dual_discrete, CuspidalDatum, RepDescriptor, RepKind, Segment,
};
use rankin_core::whittaker::{
    essential_value, modulus_u_exponent, schur, schur_bialternant, Cocharacter, SatakeParams, SchurTable,
    TorusFunction,
};
use rankin_core::{BaseScalar, HalfInt, Rational, RationalFunction, TruncatedSeries, UPoly, XPoly};

// ---------------------------------------------------------------- scalars

fn monomial() -> impl Strategy<Value = BaseScalar> {
    (-5i64..=5, -4i64..=4).prop_map(|(c, e)| &BaseScalar::from_i64(c) * &BaseScalar::u_pow(e))
}

fn laurent() -> impl Strategy<Value = BaseScalar> {
    prop::collection::vec(monomial(), 1..4).prop_map(|v| v.into_iter().sum())
}

fn scalar() -> impl Strategy<Value = BaseScalar> {
    (laurent(), laurent()).prop_map(|(n, d)| if d.is_zero() { n } else { n.checked_div(&d).unwrap() })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &BaseScalar::zero(), a.clone());
        prop_assert_eq!(&a * &BaseScalar::one(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!(b.checked_div(&a).unwrap(), &b * &a.inv().unwrap());
        }
    }

    #[test]
    fn canonical_form_is_idempotent(a in scalar(), k in 0u32..4) {
        let again = BaseScalar::from_parts(a.numerator().clone(), a.denominator().clone()).unwrap();
        prop_assert_eq!(&again, &a);
        // rescaling numerator and denominator by a common factor changes nothing
        let int = |n: i64| Rational::from_integer(n.into());
        let f = UPoly::from_terms([(k, int(3)), (0, int(1))]);
        let scaled = BaseScalar::from_parts(a.numerator().mul(&f), a.denominator().mul(&f)).unwrap();
        prop_assert_eq!(&scaled, &a);
        prop_assert!(a.denominator().leading_coeff().is_some_and(|c| c.is_one()));
    }
}

// ---------------------------------------------------------- rational functions

fn xpoly(max_len: usize) -> impl Strategy<Value = XPoly> {
    prop::collection::vec(laurent(), 1..=max_len).prop_map(XPoly::new)
}

/// Denominators with constant term 1, so expansions exist.
fn expandable() -> impl Strategy<Value = RationalFunction> {
    (xpoly(3), prop::collection::vec(laurent(), 0..3)).prop_map(|(num, tail)| {
        let mut den = vec![BaseScalar::one()];
        den.extend(tail);
        RationalFunction::new(num, XPoly::new(den)).unwrap()
    })
}

fn as_series(p: &XPoly, order: usize) -> TruncatedSeries {
    TruncatedSeries::new((0..=order).map(|i| p.coeff(i)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn expansion_is_a_ring_homomorphism(a in expandable(), b in expandable(), order in 0usize..8) {
        let (ea, eb) = (a.expand(order).unwrap(), b.expand(order).unwrap());
        prop_assert_eq!(a.add(&b).expand(order).unwrap(), ea.add(&eb));
        prop_assert_eq!(a.mul(&b).expand(order).unwrap(), ea.mul(&eb));
        prop_assert_eq!(a.sub(&b).expand(order).unwrap(), ea.sub(&eb));
    }

    #[test]
    fn expansion_satisfies_the_recurrence(a in expandable(), order in 0usize..10) {
        let e = a.expand(order).unwrap();
        let lhs = as_series(a.denominator(), order).mul(&e);
        prop_assert_eq!(lhs, as_series(a.numerator(), order));
    }

    #[test]
    fn truncation_is_monotone(a in expandable(), order in 0usize..8, extra in 1usize..5) {
        let short = a.expand(order).unwrap();
        let long = a.expand(order + extra).unwrap();
        prop_assert_eq!(long.truncate(order), short);
    }
}

// ---------------------------------------------------------------- segments

fn datum() -> impl Strategy<Value = CuspidalDatum> {
    (prop::sample::select(vec!["rho", "sigma"]), any::<bool>(), -3i64..=3).prop_map(|(label, dual, t)| {
        CuspidalDatum::new(label, 2, 1)
            .unwrap()
            .with_dual_flag(dual)
            .with_twist(HalfInt::from_doubled(t))
    })
}

fn segment() -> impl Strategy<Value = Segment> {
    (datum(), -6i64..=6, 0i64..5).prop_map(|(d, a2, len)| {
        Segment::new(d, HalfInt::from_doubled(a2), HalfInt::from_doubled(a2 + 2 * len)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn segment_relations(x in segment(), y in segment()) {
        prop_assert_eq!(linked(&x, &y), linked(&y, &x));
        prop_assert!(!linked(&x, &x));
        if x.contains(&y) || y.contains(&x) {
            prop_assert!(!linked(&x, &y));
        }
        if precedes(&x, &y) {
            prop_assert!(linked(&x, &y));
            prop_assert!(!precedes(&y, &x));
        }
        if linked(&x, &y) {
            prop_assert!(precedes(&x, &y) ^ precedes(&y, &x));
        }
    }

    #[test]
    fn unlinked_products_are_generic_in_any_order(
        segs in prop::collection::vec(segment(), 1..5),
        rot in 0usize..5,
    ) {
        let pairwise_unlinked = segs.iter().enumerate().all(|(i, x)| segs[i + 1..].iter().all(|y| !linked(x, y)));
        prop_assume!(pairwise_unlinked);
        let mut permuted = segs.clone();
        permuted.rotate_left(rot % segs.len());
        permuted.reverse();
        prop_assert!(RepDescriptor::product(segs).unwrap().is_generic_product());
        prop_assert!(RepDescriptor::product(permuted).unwrap().is_generic_product());
    }
}

#[test]
fn zelevinsky_dual_is_an_involution() {
    let rho = CuspidalDatum::new("rho", 3, 3).unwrap().with_twist(HalfInt::from_doubled(1));
    for k in 1..=12 {
        for kind in [RepKind::Steinberg, RepKind::Speh] {
            let pi = RepDescriptor::of_kind(kind, k, rho.clone()).unwrap();
            let dual = zelevinsky_dual_discrete(&pi).unwrap();
            assert_ne!(dual.kind(), kind);
            assert_eq!(zelevinsky_dual_discrete(&dual).unwrap(), pi);
        }
    }
}

#[test]
fn steinberg_derivative_sits_inside_sigma_derivative() {
    let rho = CuspidalDatum::new("rho", 2, 1).unwrap().contragredient();
    for k in 1..=12u32 {
        let level = (k - 1) * 2;
        let sigma = derivative_multiset(&RepDescriptor::sigma(k, rho.clone()).unwrap(), level).unwrap();
        let st = derivative_multiset(&RepDescriptor::steinberg(k, rho.clone()).unwrap(), level).unwrap();
        assert_eq!(sigma.len(), k as usize);
        assert_eq!(st.len(), 1);
        assert!(sigma.contains(&st[0]));
        assert!(RepDescriptor::sigma(k, rho.clone()).unwrap().is_standard());
        assert!(derivative_multiset(&RepDescriptor::sigma(k, rho.clone()).unwrap(), level + 1).is_err());
    }
}

// ---------------------------------------------------------------- Schur

fn partitions_up_to(n: usize, max_size: usize) -> Vec<Cocharacter> {
    (0..=max_size)
        .flat_map(|t| dominant_cocharacters(n, t))
        .map(Cocharacter)
        .collect()
}

fn param_sets(n: usize) -> Vec<SatakeParams> {
    let mut out = vec![SatakeParams::sigma(n), SatakeParams::sigma(n).twisted(HalfInt::from_doubled(3))];
    // distinct integers and a rational
    let mut alphas: Vec<BaseScalar> = (0..n as i64).map(|i| BaseScalar::from_i64(2 * i - 3)).collect();
    alphas[0] = BaseScalar::from_i64(5).checked_div(&BaseScalar::from_i64(7)).unwrap();
    out.push(SatakeParams::new(alphas).unwrap());
    out
}

#[test]
fn jacobi_trudi_matches_bialternant() {
    for n in 1..=4 {
        for params in param_sets(n) {
            for lambda in partitions_up_to(n, 8) {
                assert_eq!(
                    schur(&params, &lambda).unwrap(),
                    schur_bialternant(&params, &lambda).unwrap(),
                    "n={n} lambda={:?}",
                    lambda.0
                );
            }
        }
    }
}

#[test]
fn pieri_rule() {
    for n in 1..=4 {
        let params = SatakeParams::sigma(n);
        let e1: BaseScalar = params.alphas().iter().cloned().sum();
        for lambda in partitions_up_to(n, 6) {
            let lhs = &schur(&params, &lambda).unwrap() * &e1;
            let mut rhs = BaseScalar::zero();
            for i in 0..n {
                let mut mu = lambda.clone();
                mu.0[i] += 1;
                if mu.is_dominant() {
                    rhs = &rhs + &schur(&params, &mu).unwrap();
                }
            }
            assert_eq!(lhs, rhs, "n={n} lambda={:?}", lambda.0);
        }
    }
}

#[test]
fn determinant_translation() {
    for n in 1..=4 {
        let table = SchurTable::new(&SatakeParams::sigma(n), 12);
        let det: BaseScalar = SatakeParams::sigma(n).alphas().iter().cloned().product();
        for lambda in partitions_up_to(n, 5) {
            for c in [-2i64, 1, 3] {
                let shifted = Cocharacter(lambda.0.iter().map(|x| x + c).collect());
                let expected = &det.pow(c).unwrap() * &table.schur(&lambda).unwrap();
                assert_eq!(table.schur(&shifted).unwrap(), expected);
            }
        }
    }
}

#[test]
fn essential_value_is_multiplicative_on_its_support() {
    for l in 2..=6u32 {
        let at = |v: i64| {
            let mut lam = vec![0; (l - 1) as usize];
            lam[0] = v;
            essential_value(l, &Cocharacter(lam)).unwrap()
        };
        assert!(at(0).is_one());
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(at(a + b), &at(a) * &at(b));
            }
        }
    }
}

// ------------------------------------------------- brute-force integrals

/// Every `λ ∈ [0, bound]^len`, with no dominance filtering.
fn box_points(len: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=bound).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

fn pad(lambda: &[i64], n: usize) -> Cocharacter {
    let mut v = lambda.to_vec();
    v.resize(n, 0);
    Cocharacter(v)
}

/// The torus sum of `spec`, enumerated over the whole box and weighted from
/// the definitions.
fn brute_force(spec: &IntegralSpec) -> TruncatedSeries {
    let (n, m, depth) = (spec.n(), spec.m(), spec.depth());
    let (len, u_per_degree) = match spec.phi() {
        None => (m, (n - m) as i64),
        Some(SchwartzShape::FullLattice) => (n, 0),
        Some(SchwartzShape::Conductor { .. }) => (n - 1, 2),
    };
    let mut coeffs = vec![BaseScalar::zero(); depth + 1];
    for lambda in box_points(len, depth as i64) {
        let t: i64 = lambda.iter().sum();
        if t as usize > depth {
            continue;
        }
        let w = spec.w().value(&pad(&lambda, n)).unwrap();
        let w_prime = spec.w_prime().value(&pad(&lambda, spec.w_prime().size())).unwrap();
        let weight = BaseScalar::u_pow(-modulus_u_exponent(&lambda) + t * u_per_degree);
        coeffs[t as usize] = &coeffs[t as usize] + &(&(&w * &w_prime) * &weight);
    }
    TruncatedSeries::new(coeffs)
}

#[test]
fn box_enumeration_agrees_with_dominant_enumeration() {
    let mut specs = vec![
        steinberg_distinct_spec(2, 1, 6).unwrap(),
        steinberg_distinct_spec(3, 2, 6).unwrap(),
        steinberg_distinct_spec(4, 2, 5).unwrap(),
        steinberg_distinct_spec(4, 3, 4).unwrap(),
        steinberg_equal_spec(2, 6).unwrap(),
        steinberg_equal_spec(3, 6).unwrap(),
        steinberg_equal_spec(4, 4).unwrap(),
        spherical_cauchy_spec(2, 6).unwrap().0,
        spherical_cauchy_spec(3, 4).unwrap().0,
        IntegralSpec::hecke(TorusFunction::sigma(3), TorusFunction::sigma(2), 5).unwrap(),
    ];
    specs.push(
        IntegralSpec::equal(
            TorusFunction::EssentialSteinberg { l: 2 },
            TorusFunction::sigma(2),
            SchwartzShape::FullLattice,
            6,
        )
        .unwrap(),
    );
    for spec in specs {
        assert_eq!(evaluate(&spec).unwrap(), brute_force(&spec), "{spec:?}");
    }
}

#[test]
fn integrals_are_monotone_in_depth() {
    for (short, long) in [
        (steinberg_distinct_spec(3, 2, 6).unwrap(), steinberg_distinct_spec(3, 2, 10).unwrap()),
        (steinberg_equal_spec(3, 5).unwrap(), steinberg_equal_spec(3, 9).unwrap()),
    ] {
        let s = evaluate(&short).unwrap();
        assert_eq!(evaluate(&long).unwrap().truncate(s.order()), s);
    }
}

#[test]
fn worker_count_does_not_change_results() {
    let spec = steinberg_distinct_spec(4, 3, 10).unwrap();
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| evaluate(&spec).unwrap());
    assert_eq!(single, evaluate(&spec).unwrap());
}

// ---------------------------------------------------------------- L-factors

#[test]
fn twisting_scales_poles_and_keeps_coefficients() {
    for (l, k, d) in [(3, 2, 1), (4, 3, 2), (5, 3, 3), (2, 2, 1)] {
        let base = LFactorSpec::family(l, k, d, HalfInt::ZERO, RepKind::Steinberg).unwrap();
        let base_pf = partial_fractions(&base).unwrap();
        for t in [-3i64, -1, 1, 2, 5] {
            let t = HalfInt::from_doubled(t);
            let twisted = LFactorSpec::family(l, k, d, t, RepKind::Steinberg).unwrap();
            let pf = partial_fractions(&twisted).unwrap();
            // rho' = nu^{t} rho^vee shifts s by t, so each pole picks up q^{-t d}
            let factor = BaseScalar::u_pow(-t.doubled() * d as i64);
            for (a, b) in base_pf.terms.iter().zip(&pf.terms) {
                assert_eq!(&a.pole * &factor, b.pole);
                assert_eq!(a.coeff, b.coeff);
            }
        }
    }
}

#[test]
fn l_factor_degree_is_k_times_d() {
    for l in 1..=6 {
        for k in 1..=l {
            for d in 1..=3 {
                let spec = LFactorSpec::family(l, k, d, HalfInt::from_doubled(1), RepKind::Steinberg).unwrap();
                let f = rankin_core::lfactor::l_steinberg_pair(&spec).unwrap();
                assert!(f.numerator().degree() == Some(0));
                assert_eq!(f.denominator().degree(), Some((k * d) as usize));
            }
        }
    }
}
