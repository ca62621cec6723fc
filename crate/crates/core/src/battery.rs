//! The identity battery behind `verify`: every check is exact and produces
//! one named report entry.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::halfint::HalfInt;
use crate::integral::{
    brute_force_series, dominant_cocharacters, eq_key_check, evaluate, spherical_cauchy_spec, steinberg_closed_form,
    steinberg_distinct_spec, steinberg_equal_spec, tate_spec, verify_identity, verify_identity_with, IntegralSpec,
    Mutation,
};
use crate::lfactor::{l_steinberg_pair, LFactorSpec};
use crate::ratfunc::RationalFunction;
use crate::scalar::BaseScalar;
use crate::segment::{
    highest_derivative, linked, precedes, zelevinsky_dual_discrete, CuspidalDatum, RepDescriptor, RepKind, Segment,
};
use crate::whittaker::{schur, schur_bialternant, Cocharacter, SatakeParams};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Tate,
    SteinbergDistinct,
    SteinbergEqual,
    Cauchy,
    Key,
    ThreeWay,
    Mutation,
    Properties,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Tate,
        Suite::SteinbergDistinct,
        Suite::SteinbergEqual,
        Suite::Cauchy,
        Suite::Key,
        Suite::ThreeWay,
        Suite::Mutation,
        Suite::Properties,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tate => "tate",
            Suite::SteinbergDistinct => "steinberg-distinct",
            Suite::SteinbergEqual => "steinberg-equal",
            Suite::Cauchy => "cauchy",
            Suite::Key => "key",
            Suite::ThreeWay => "three-way",
            Suite::Mutation => "mutation",
            Suite::Properties => "properties",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|x| x.name() == s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BatteryConfig {
    pub max_l: u32,
    pub depth: usize,
    pub seed: u64,
}

impl Default for BatteryConfig {
    fn default() -> Self {
        Self {
            max_l: 5,
            depth: crate::integral::DEFAULT_DEPTH,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub name: String,
    pub suite: Suite,
    pub description: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub config: BatteryConfig,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.passed)
    }
}

type Job = Box<dyn Fn() -> Entry + Send + Sync>;

fn entry(suite: Suite, name: String, description: String, result: Result<(bool, String), String>) -> Entry {
    let (passed, detail) = match result {
        Ok(v) => v,
        Err(e) => (false, format!("error: {e}")),
    };
    Entry {
        name: format!("{}/{}", suite.name(), name),
        suite,
        description,
        passed,
        detail,
    }
}

fn identity_job(suite: Suite, name: String, description: String, spec: IntegralSpec, closed: RationalFunction) -> Job {
    Box::new(move || {
        let result = verify_identity(&spec, &closed)
            .map(|c| {
                let detail = match c.verdict.first_mismatch {
                    None => format!("equal to depth {}", c.verdict.depth),
                    Some(i) => format!("first mismatch at X^{i}"),
                };
                (c.verdict.passed, detail)
            })
            .map_err(|e| e.to_string());
        entry(suite, name.clone(), description.clone(), result)
    })
}

type Prepared = Result<(IntegralSpec, RationalFunction), String>;

fn prepare(
    spec: Result<IntegralSpec, crate::error::IntegralError>,
    closed: Result<RationalFunction, crate::error::IntegralError>,
) -> Prepared {
    Ok((spec.map_err(|e| e.to_string())?, closed.map_err(|e| e.to_string())?))
}

/// Name, description, and a check taking the seed.
type PropertyCheck = (&'static str, &'static str, fn(u64) -> (bool, String));

fn key_grid(max_l: u32) -> Vec<(u32, u32, u32, HalfInt)> {
    let mut out = Vec::new();
    for l in 1..=max_l {
        for k in 1..=l.min(3) {
            for d in 1..=3 {
                for s0 in [HalfInt::ZERO, HalfInt::from_doubled(1)] {
                    out.push((l, k, d, s0));
                }
            }
        }
    }
    out
}

fn jobs(suite: Suite, cfg: &BatteryConfig) -> Vec<Job> {
    let depth = cfg.depth;
    let mut jobs: Vec<Job> = Vec::new();
    match suite {
        Suite::Tate => jobs.push(identity_job(
            suite,
            "n=1".into(),
            "GL1 zeta integral of 1_o equals 1/(1-X)".into(),
            tate_spec(depth),
            RationalFunction::geometric(BaseScalar::one(), 1),
        )),
        Suite::SteinbergDistinct => {
            for l in 2..=cfg.max_l {
                for k in 1..l {
                    let (spec, closed) = match (steinberg_distinct_spec(l, k, depth), steinberg_closed_form(l, k)) {
                        (Ok(s), Ok(c)) => (s, c),
                        _ => continue,
                    };
                    jobs.push(identity_job(
                        suite,
                        format!("l={l},k={k}"),
                        format!("I_{{{l},{k}}}(W_ess, W_0 of Sigma_{k}) = L(s, St_{l}, St_{k})"),
                        spec,
                        closed,
                    ));
                }
            }
        }
        Suite::SteinbergEqual => {
            for l in 2..=cfg.max_l {
                if let (Ok(spec), Ok(closed)) = (steinberg_equal_spec(l, depth), steinberg_closed_form(l, l)) {
                    jobs.push(identity_job(
                        suite,
                        format!("l={l}"),
                        format!("I_{l}(W_ess, W_0 of Sigma_{l}, conductor phi) = L(s, St_{l}, St_{l})"),
                        spec,
                        closed,
                    ));
                }
            }
        }
        Suite::Cauchy => {
            for n in [2usize, 3] {
                if let Ok((spec, closed)) = spherical_cauchy_spec(n, depth.min(16)) {
                    jobs.push(identity_job(
                        suite,
                        format!("n={n}"),
                        format!("spherical x spherical on GL{n} equals prod (1 - a_i b_j X)^-1"),
                        spec,
                        closed,
                    ));
                }
            }
        }
        Suite::Key => {
            for (l, k, d, s0) in key_grid(cfg.max_l) {
                jobs.push(Box::new(move || {
                    let result = eq_key_check(l, k, d, s0, depth)
                        .map(|c| (c.passed(), serde_json::to_string(&c).unwrap_or_default()))
                        .map_err(|e| e.to_string());
                    entry(
                        suite,
                        format!("l={l},k={k},d={d},s0={s0}"),
                        "partial fractions recombine, sum to 1, and match torus integrals".into(),
                        result,
                    )
                }));
            }
        }
        Suite::ThreeWay => {
            for (l, k, d, s0) in key_grid(cfg.max_l) {
                jobs.push(Box::new(move || {
                    let result = (|| {
                        let base = LFactorSpec::family(l, k, d, s0, RepKind::Steinberg)?;
                        let a = l_steinberg_pair(&base)?;
                        let b = l_steinberg_pair(&base.with_right_kind(RepKind::StandardSigma))?;
                        let c = l_steinberg_pair(&base.with_right_kind(RepKind::Speh))?;
                        Ok::<_, crate::error::LFactorError>((a == b && b == c, a.to_string()))
                    })()
                    .map_err(|e| e.to_string());
                    entry(
                        suite,
                        format!("l={l},k={k},d={d},s0={s0}"),
                        "L(St_l, St_k) = L(St_l, Sigma_k) = L(St_l, Sp_k)".into(),
                        result,
                    )
                }));
            }
        }
        Suite::Mutation => {
            let depth = depth.min(12);
            for mutation in Mutation::ALL {
                let cases: [(&str, Prepared); 2] = [
                    ("l=3,k=2", prepare(steinberg_distinct_spec(3, 2, depth), steinberg_closed_form(3, 2))),
                    ("l=3", prepare(steinberg_equal_spec(3, depth), steinberg_closed_form(3, 3))),
                ];
                for (label, prepared) in cases {
                    jobs.push(Box::new(move || {
                        let result = prepared.clone().and_then(|(s, closed)| {
                            let c = verify_identity_with(&s, &closed, Some(mutation)).map_err(|e| e.to_string())?;
                            Ok((
                                !c.verdict.passed,
                                match c.verdict.first_mismatch {
                                    Some(i) => format!("fails as expected at X^{i}"),
                                    None => "mutation went undetected".into(),
                                },
                            ))
                        });
                        entry(
                            suite,
                            format!("{}/{label}", mutation.name()),
                            "perturbed measure weight must break the identity".into(),
                            result,
                        )
                    }));
                }
            }
        }
        Suite::Properties => {
            let seed = cfg.seed;
            let props: [PropertyCheck; 6] = [
                ("field-laws", "random scalars satisfy the field axioms", |seed| field_laws(seed, 1000)),
                (
                    "segment-relations",
                    "linked is symmetric and irreflexive; precedes is antisymmetric",
                    |seed| segment_relations(seed, 1000),
                ),
                ("zelevinsky-involution", "St_k <-> Sp_k is an involution for k <= 12", |_| zelevinsky_involution(12)),
                (
                    "derivative-containment",
                    "the St_k derivative lies in the Sigma_k derivative, k <= 12",
                    |_| derivative_containment(12),
                ),
                ("schur-agreement", "Jacobi-Trudi equals the bialternant, |lambda| <= 8, n <= 4", |_| schur_agreement(4, 8)),
                (
                    "support-enumeration",
                    "dominant enumeration equals the unpruned box sum, D <= 6",
                    |_| support_enumeration(6),
                ),
            ];
            for (name, description, check) in props {
                jobs.push(Box::new(move || entry(suite, name.into(), description.into(), Ok(check(seed)))));
            }
        }
    }
    jobs
}

fn random_scalar(rng: &mut ChaCha8Rng) -> BaseScalar {
    let mut term = || {
        let c = BaseScalar::from_i64(rng.gen_range(-4..=4));
        &c * &BaseScalar::u_pow(rng.gen_range(-3..=3))
    };
    let num = term() + term();
    let den = term() + term();
    if den.is_zero() {
        num
    } else {
        num.checked_div(&den).unwrap()
    }
}

fn field_laws(seed: u64, cases: usize) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..cases {
        let (a, b, c) = (random_scalar(&mut rng), random_scalar(&mut rng), random_scalar(&mut rng));
        let assoc = &(&a * &b) * &c == &a * &(&b * &c) && &(&a + &b) + &c == &a + &(&b + &c);
        let distrib = &a * &(&b + &c) == &(&a * &b) + &(&a * &c);
        let inverse = a.is_zero() || (&a * &a.inv().unwrap()).is_one();
        if !(assoc && distrib && inverse) {
            return (false, format!("case {i} failed: a={a}, b={b}, c={c}"));
        }
    }
    (true, format!("{cases} cases"))
}

fn segment_relations(seed: u64, cases: usize) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let random_segment = |rng: &mut ChaCha8Rng| {
        let label = if rng.gen_bool(0.8) { "rho" } else { "sigma" };
        let datum = CuspidalDatum::new(label, 2, 1)
            .unwrap()
            .with_dual_flag(rng.gen_bool(0.1))
            .with_twist(HalfInt::from_doubled(rng.gen_range(-2..=2)));
        let a = HalfInt::from_int(rng.gen_range(-4..=4));
        let len = rng.gen_range(0..4);
        Segment::new(datum, a, a + HalfInt::from_int(len)).unwrap()
    };
    for i in 0..cases {
        let x = random_segment(&mut rng);
        let y = random_segment(&mut rng);
        let ok = linked(&x, &y) == linked(&y, &x)
            && !linked(&x, &x)
            && !(precedes(&x, &y) && precedes(&y, &x))
            && (!precedes(&x, &y) || linked(&x, &y))
            && (!(x.contains(&y) || y.contains(&x)) || !linked(&x, &y));
        if !ok {
            return (false, format!("case {i} failed: {x} vs {y}"));
        }
    }
    (true, format!("{cases} pairs"))
}

fn zelevinsky_involution(max_k: u32) -> (bool, String) {
    let rho = CuspidalDatum::new("rho", 2, 2).unwrap();
    for k in 1..=max_k {
        for kind in [RepKind::Steinberg, RepKind::Speh] {
            let pi = RepDescriptor::of_kind(kind, k, rho.clone()).unwrap();
            let back = zelevinsky_dual_discrete(&pi).and_then(|d| zelevinsky_dual_discrete(&d));
            if back.as_ref() != Ok(&pi) {
                return (false, format!("{pi} does not return to itself"));
            }
        }
    }
    (true, format!("k = 1..{max_k}"))
}

fn derivative_containment(max_k: u32) -> (bool, String) {
    let rho = CuspidalDatum::new("rho", 2, 1).unwrap().contragredient();
    for k in 1..=max_k {
        let sigma = highest_derivative(&RepDescriptor::sigma(k, rho.clone()).unwrap());
        let st = highest_derivative(&RepDescriptor::steinberg(k, rho.clone()).unwrap());
        let ok = match (&sigma, &st) {
            (Ok(a), Ok(b)) => a.len() == k as usize && b.len() == 1 && a.contains(&b[0]),
            _ => false,
        };
        if !ok {
            return (false, format!("k = {k}: {sigma:?} vs {st:?}"));
        }
    }
    (true, format!("k = 1..{max_k}"))
}

fn schur_agreement(max_n: usize, max_size: usize) -> (bool, String) {
    let mut count = 0;
    for n in 1..=max_n {
        let mut generic: Vec<BaseScalar> = (0..n as i64).map(|i| BaseScalar::from_i64(3 * i - 4)).collect();
        generic[0] = BaseScalar::u_pow(3);
        let param_sets = [
            SatakeParams::sigma(n),
            SatakeParams::sigma(n).twisted(HalfInt::from_doubled(1)),
            SatakeParams::new(generic).unwrap(),
        ];
        for params in &param_sets {
            for t in 0..=max_size {
                for lambda in dominant_cocharacters(n, t) {
                    let lambda = Cocharacter(lambda);
                    let (a, b) = (schur(params, &lambda), schur_bialternant(params, &lambda));
                    if a.is_err() || a != b {
                        return (false, format!("n = {n}, lambda = {:?}", lambda.0));
                    }
                    count += 1;
                }
            }
        }
    }
    (true, format!("{count} partitions"))
}

fn support_enumeration(depth: usize) -> (bool, String) {
    let specs = [
        ("distinct l=3,k=2", steinberg_distinct_spec(3, 2, depth)),
        ("distinct l=4,k=3", steinberg_distinct_spec(4, 3, depth.min(4))),
        ("equal l=3", steinberg_equal_spec(3, depth)),
        ("tate", Ok(tate_spec(depth))),
        ("cauchy n=2", spherical_cauchy_spec(2, depth).map(|(s, _)| s)),
    ];
    for (name, spec) in specs {
        let result = spec.and_then(|s| Ok((evaluate(&s)?, brute_force_series(&s)?)));
        match result {
            Ok((a, b)) => {
                if let Some(i) = a.compare(&b).first_mismatch {
                    return (false, format!("{name}: first mismatch at X^{i}"));
                }
            }
            Err(e) => return (false, format!("{name}: {e}")),
        }
    }
    (true, format!("5 integrals to depth {depth}"))
}

/// Runs the selected suites. Entries are sorted by name, whatever order the
/// workers finish in.
pub fn run(suites: &[Suite], cfg: &BatteryConfig) -> Report {
    let all: Vec<Job> = suites.iter().flat_map(|s| jobs(*s, cfg)).collect();
    let mut entries: Vec<Entry> = all.par_iter().map(|job| job()).collect();
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    Report {
        config: cfg.clone(),
        entries,
    }
}
