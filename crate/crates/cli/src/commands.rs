use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rankin_core::battery::{self, BatteryConfig, Suite};
use rankin_core::integral::{
    spherical_cauchy_spec, steinberg_closed_form, steinberg_distinct_spec, steinberg_equal_spec, tate_spec,
    verify_identity_with, IdentityCheck, Mutation, DEFAULT_DEPTH,
};
use rankin_core::lfactor::{l_steinberg_pair, partial_fractions, recombine, LFactorSpec};
use rankin_core::render;
use rankin_core::segment::{
    highest_derivative, linked, precedes, zelevinsky_dual_discrete, RepDescriptor, RepKind, Segment,
};
use rankin_core::whittaker::{essential_value, spherical_value, Cocharacter, SatakeParams};
use rankin_core::{BaseScalar, HalfInt, LFactorError, RationalFunction};

use crate::parse::{parse_descriptor, parse_rep, parse_segment, Parsed};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "rankin", version, about = "Exact local Rankin-Selberg L-factors and zeta integrals")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Closed form of L(s, St_l(rho), R_k(rho')).
    Lfactor(PairArgs),
    /// Partial fractions of L(s, St_l(rho), St_k(rho')) in X^d.
    Pfd(PairArgs),
    /// Whittaker function values on torus elements.
    Whittaker {
        #[command(subcommand)]
        which: WhittakerCommand,
    },
    /// Evaluate a zeta integral as a truncated torus sum and compare with
    /// its closed form.
    RsIntegral(IntegralArgs),
    /// Inspect segments and descriptors.
    Segments {
        #[command(subcommand)]
        which: SegmentsCommand,
    },
    /// Run the identity battery.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum RightKind {
    St,
    Sigma,
    Sp,
}

impl From<RightKind> for RepKind {
    fn from(k: RightKind) -> Self {
        match k {
            RightKind::St => RepKind::Steinberg,
            RightKind::Sigma => RepKind::StandardSigma,
            RightKind::Sp => RepKind::Speh,
        }
    }
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long, required_unless_present = "left_rep")]
    pub l: Option<u32>,
    #[arg(long, required_unless_present = "left_rep")]
    pub k: Option<u32>,
    /// Degree of rho, which is also its number of unramified self-twists.
    #[arg(long, default_value_t = 1)]
    pub d: u32,
    /// Twist with rho' = nu^{s0} rho^vee, as an integer or n/2.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub s0: HalfInt,
    /// Take rho' outside the inertial class of rho^vee.
    #[arg(long)]
    pub distinct_inertial: bool,
    #[arg(long, value_enum, default_value_t = RightKind::St)]
    pub right: RightKind,
    /// Left representation as a descriptor, e.g. "St(3)@rho(r=2,d=2)".
    #[arg(long, requires = "right_rep", conflicts_with_all = ["l", "k"])]
    pub left_rep: Option<String>,
    /// Right representation as a descriptor, e.g. "Sigma(2)@rho^(r=2,d=2)".
    #[arg(long, requires = "left_rep")]
    pub right_rep: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum WhittakerCommand {
    /// Normalized spherical vector of Sigma_K(1), optionally twisted.
    Spherical {
        #[arg(long)]
        sigma: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<i64>,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        twist: HalfInt,
    },
    /// Essential vector of St_l(1) at diag(varpi^lambda, 1).
    Essential {
        #[arg(long)]
        l: u32,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<i64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Case {
    SteinbergDistinct,
    SteinbergEqual,
    SphericalCauchy,
    Tate,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum MutationArg {
    DropModulus,
    DropDeterminantShift,
    DropEssentialSupport,
}

impl From<MutationArg> for Mutation {
    fn from(m: MutationArg) -> Self {
        match m {
            MutationArg::DropModulus => Mutation::DropModulus,
            MutationArg::DropDeterminantShift => Mutation::DropDeterminantShift,
            MutationArg::DropEssentialSupport => Mutation::DropEssentialSupport,
        }
    }
}

#[derive(Args, Debug)]
pub struct IntegralArgs {
    #[arg(long, value_enum)]
    pub case: Case,
    #[arg(long)]
    pub l: Option<u32>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, env = "RS_DEPTH", default_value_t = DEFAULT_DEPTH)]
    pub depth: usize,
    /// Perturb one measure weight (negative control).
    #[arg(long, value_enum)]
    pub mutation: Option<MutationArg>,
}

#[derive(Subcommand, Debug)]
pub enum SegmentsCommand {
    /// Parse a segment or descriptor and print its invariants.
    Describe { text: String },
    /// Compare two segments.
    Relate { first: String, second: String },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// `all` or a comma-separated list of suite names.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 5)]
    pub max_l: u32,
    #[arg(long, env = "RS_DEPTH", default_value_t = DEFAULT_DEPTH)]
    pub depth: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// What a command produced: the text to print and the process exit code.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self { output, code: EXIT_PASS }
    }

    fn verdict(output: String, passed: bool) -> Self {
        Self {
            output,
            code: if passed { EXIT_PASS } else { EXIT_FAIL },
        }
    }
}

/// An input the command could not work with; reported with exit code 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

fn usage(e: impl std::fmt::Display) -> UsageError {
    UsageError(e.to_string())
}

pub fn run(cli: &Cli) -> Result<Outcome, UsageError> {
    let f = cli.format;
    match &cli.command {
        Command::Lfactor(a) => lfactor(a, f),
        Command::Pfd(a) => pfd(a, f),
        Command::Whittaker { which } => whittaker(which, f),
        Command::RsIntegral(a) => rs_integral(a, f),
        Command::Segments { which } => segments(which, f),
        Command::Verify(a) => verify(a, f),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

fn scalar_out(s: &BaseScalar, f: Format) -> String {
    match f {
        Format::Latex => render::scalar_latex(s),
        _ => render::scalar_text(s),
    }
}

fn ratfunc_out(r: &RationalFunction, f: Format) -> String {
    match f {
        Format::Latex => render::ratfunc_latex(r),
        _ => render::ratfunc_text(r),
    }
}

fn pair_spec(a: &PairArgs) -> Result<LFactorSpec, UsageError> {
    if let (Some(left), Some(right)) = (&a.left_rep, &a.right_rep) {
        let left = parse_rep(left).map_err(usage)?;
        let right = parse_rep(right).map_err(usage)?;
        return LFactorSpec::new(&left, &right).map_err(usage);
    }
    let (l, k) = (a.l.expect("clap enforces --l"), a.k.expect("clap enforces --k"));
    let spec = if a.distinct_inertial {
        LFactorSpec::family_distinct(l, k, a.d, a.right.into())
    } else {
        LFactorSpec::family(l, k, a.d, a.s0, a.right.into())
    };
    spec.map_err(usage)
}

fn pair_label(spec: &LFactorSpec) -> String {
    format!(
        "L(s, St({})@{}, {}({})@{})",
        spec.l(),
        spec.rho(),
        spec.right_kind(),
        spec.k(),
        spec.rho_prime()
    )
}

fn lfactor(a: &PairArgs, f: Format) -> Result<Outcome, UsageError> {
    let spec = pair_spec(a)?;
    let l = l_steinberg_pair(&spec).map_err(usage)?;
    let out = match f {
        Format::Json => pretty(&json!({
            "l": spec.l(),
            "k": spec.k(),
            "d": spec.torsion(),
            "s0": spec.s0(),
            "left": format!("St({})@{}", spec.l(), spec.rho()),
            "right": format!("{}({})@{}", spec.right_kind(), spec.k(), spec.rho_prime()),
            "l_factor": l,
            "text": render::ratfunc_text(&l),
        })),
        _ => format!("{} = {}", pair_label(&spec), ratfunc_out(&l, f)),
    };
    Ok(Outcome::ok(out))
}

fn pfd(a: &PairArgs, f: Format) -> Result<Outcome, UsageError> {
    let spec = pair_spec(a)?.with_right_kind(RepKind::Steinberg);
    let target = l_steinberg_pair(&spec).map_err(usage)?;
    let pf = match partial_fractions(&spec) {
        Ok(pf) => pf,
        Err(LFactorError::NoPoles) => {
            let out = match f {
                Format::Json => pretty(&json!({
                    "l_factor": target,
                    "d": spec.torsion(),
                    "terms": [],
                    "coefficient_sum": null,
                    "recombination": true,
                })),
                _ => format!("{} = 1 has no poles; nothing to decompose", pair_label(&spec)),
            };
            return Ok(Outcome::ok(out));
        }
        Err(e) => return Err(usage(e)),
    };
    let recombined = recombine(&pf) == target;
    let sum = pf.coefficient_sum();
    let out = match f {
        Format::Json => pretty(&json!({
            "l_factor": target,
            "d": pf.d,
            "terms": pf.terms.iter().enumerate().map(|(i, t)| json!({
                "i": i,
                "pole": t.pole,
                "lambda": t.coeff,
                "pole_text": render::scalar_text(&t.pole),
                "lambda_text": render::scalar_text(&t.coeff),
            })).collect::<Vec<_>>(),
            "coefficient_sum": sum,
            "recombination": recombined,
        })),
        _ => {
            let y = if pf.d == 1 { "X".to_string() } else { format!("X^{}", pf.d) };
            let mut lines = vec![
                format!("{} = {}", pair_label(&spec), ratfunc_out(&target, f)),
                format!("sum over i of lambda_i / (1 - c_i {y})"),
                "i\tc_i\tlambda_i".to_string(),
            ];
            for (i, t) in pf.terms.iter().enumerate() {
                lines.push(format!("{i}\t{}\t{}", scalar_out(&t.pole, f), scalar_out(&t.coeff, f)));
            }
            lines.push(format!("sum of lambda_i = {}", scalar_out(&sum, f)));
            lines.push(format!("recombination: {}", if recombined { "PASS" } else { "FAIL" }));
            lines.join("\n")
        }
    };
    Ok(Outcome::verdict(out, recombined && sum.is_one()))
}

fn whittaker(which: &WhittakerCommand, f: Format) -> Result<Outcome, UsageError> {
    let (label, lambda, value) = match which {
        WhittakerCommand::Spherical { sigma, lambda, twist } => {
            let params = SatakeParams::sigma(*sigma).twisted(*twist);
            let lam = Cocharacter(lambda.clone());
            let v = spherical_value(&params, &lam).map_err(usage)?;
            (format!("W0[Sigma_{sigma}, twist {twist}]"), lambda, v)
        }
        WhittakerCommand::Essential { l, lambda } => {
            let lam = Cocharacter(lambda.clone());
            let v = essential_value(*l, &lam).map_err(usage)?;
            (format!("Wess[St_{l}]"), lambda, v)
        }
    };
    let lam_text = lambda.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
    let out = match f {
        Format::Json => pretty(&json!({
            "function": label,
            "lambda": lambda,
            "value": value,
            "text": render::scalar_text(&value),
        })),
        _ => format!("{label}({lam_text}) = {}", scalar_out(&value, f)),
    };
    Ok(Outcome::ok(out))
}

fn rs_integral(a: &IntegralArgs, f: Format) -> Result<Outcome, UsageError> {
    let case = a.case.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let need = |v: Option<u32>, flag: &str| v.ok_or_else(|| UsageError(format!("--case {case} needs --{flag}")));
    let (spec, closed) = match a.case {
        Case::SteinbergDistinct => {
            let (l, k) = (need(a.l, "l")?, need(a.k, "k")?);
            if k >= l {
                return Err(UsageError("steinberg-distinct needs k < l".into()));
            }
            (
                steinberg_distinct_spec(l, k, a.depth).map_err(usage)?,
                steinberg_closed_form(l, k).map_err(usage)?,
            )
        }
        Case::SteinbergEqual => {
            let l = need(a.l, "l")?;
            if l == 0 {
                return Err(UsageError("steinberg-equal needs l >= 1".into()));
            }
            (
                steinberg_equal_spec(l, a.depth).map_err(usage)?,
                steinberg_closed_form(l, l).map_err(usage)?,
            )
        }
        Case::SphericalCauchy => {
            let n = a.n.ok_or_else(|| UsageError("--case spherical-cauchy needs --n".into()))?;
            if n == 0 {
                return Err(UsageError("--n must be positive".into()));
            }
            spherical_cauchy_spec(n, a.depth).map_err(usage)?
        }
        Case::Tate => (tate_spec(a.depth), RationalFunction::geometric(BaseScalar::one(), 1)),
    };
    let check = verify_identity_with(&spec, &closed, a.mutation.map(Into::into)).map_err(usage)?;
    let passed = check.verdict.passed;
    Ok(Outcome::verdict(integral_output(a, &check, f), passed))
}

fn integral_output(a: &IntegralArgs, check: &IdentityCheck, f: Format) -> String {
    let verdict = if check.verdict.passed { "pass" } else { "fail" };
    match f {
        Format::Json => pretty(&json!({
            "case": a.case.to_possible_value().map(|v| v.get_name().to_string()),
            "depth": check.verdict.depth,
            "mutation": a.mutation.and_then(|m| m.to_possible_value()).map(|v| v.get_name().to_string()),
            "series": check.series,
            "closed_form": check.closed_form,
            "verdict": verdict,
            "first_mismatch": check.verdict.first_mismatch,
        })),
        Format::Text => {
            let mismatch = match check.verdict.first_mismatch {
                Some(i) => format!(" (first mismatch at X^{i})"),
                None => String::new(),
            };
            format!(
                "series:      {}\nclosed form: {}\nverdict:     {}{mismatch}",
                render::series_text(&check.series),
                render::ratfunc_text(&check.closed_form),
                verdict.to_uppercase()
            )
        }
        Format::Latex => format!(
            "{} \\quad\\text{{vs}}\\quad {}",
            render::series_latex(&check.series),
            render::ratfunc_latex(&check.closed_form)
        ),
    }
}

fn describe_segment(s: &Segment) -> Value {
    json!({
        "segment": s.to_string(),
        "length": s.length(),
        "size": s.size(),
        "start": s.start(),
        "end": s.end(),
        "e_value": s.e_value(),
    })
}

fn describe_descriptor(d: &RepDescriptor) -> Value {
    let derivative = highest_derivative(d)
        .ok()
        .map(|v| v.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    json!({
        "descriptor": d.to_string(),
        "kind": d.kind().to_string(),
        "group_size": d.group_size(),
        "segments": d.defining_product().iter().map(describe_segment).collect::<Vec<_>>(),
        "is_standard": d.is_standard(),
        "is_generic_product": d.is_generic_product(),
        "zelevinsky_dual": zelevinsky_dual_discrete(d).ok().map(|z| z.to_string()),
        "highest_derivative": derivative,
    })
}

fn segments(which: &SegmentsCommand, f: Format) -> Result<Outcome, UsageError> {
    let value = match which {
        SegmentsCommand::Describe { text } => match parse_descriptor(text).map_err(usage)? {
            Parsed::Segment(s) => describe_segment(&s),
            Parsed::Descriptor(d) => describe_descriptor(&d),
        },
        SegmentsCommand::Relate { first, second } => {
            let x = parse_segment(first).map_err(usage)?;
            let y = parse_segment(second).map_err(usage)?;
            json!({
                "first": x.to_string(),
                "second": y.to_string(),
                "linked": linked(&x, &y),
                "first_precedes_second": precedes(&x, &y),
                "second_precedes_first": precedes(&y, &x),
                "first_contains_second": x.contains(&y),
                "second_contains_first": y.contains(&x),
            })
        }
    };
    let out = match f {
        Format::Json => pretty(&value),
        _ => flatten(&value, ""),
    };
    Ok(Outcome::ok(out))
}

/// `key: value` lines; arrays become indented lists, with the fields of an
/// object item grouped under one bullet.
fn flatten(v: &Value, indent: &str) -> String {
    let scalar = |v: &Value| match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    };
    let mut lines = Vec::new();
    if let Value::Object(map) = v {
        for (k, v) in map {
            match v {
                Value::Array(items) => {
                    lines.push(format!("{indent}{k}:"));
                    for item in items {
                        if let Value::Object(_) = item {
                            let body = flatten(item, &format!("{indent}    "));
                            lines.push(format!("{indent}  - {}", body.trim_start()));
                        } else {
                            lines.push(format!("{indent}  - {}", scalar(item)));
                        }
                    }
                }
                Value::Object(_) => {
                    lines.push(format!("{indent}{k}:"));
                    lines.push(flatten(v, &format!("{indent}  ")));
                }
                _ => lines.push(format!("{indent}{k}: {}", scalar(v))),
            }
        }
    }
    lines.join("\n")
}

fn verify(a: &VerifyArgs, f: Format) -> Result<Outcome, UsageError> {
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        a.suite
            .split(',')
            .map(|s| {
                Suite::from_name(s.trim()).ok_or_else(|| {
                    let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                    UsageError(format!("unknown suite {s:?}; expected all or one of {}", names.join(", ")))
                })
            })
            .collect::<Result<_, _>>()?
    };
    let cfg = BatteryConfig {
        max_l: a.max_l,
        depth: a.depth,
        seed: a.seed,
    };
    let report = battery::run(&suites, &cfg);
    let out = match f {
        Format::Json => pretty(&json!({
            "passed": report.passed(),
            "config": report.config,
            "entries": report.entries,
        })),
        _ => {
            let mut lines: Vec<String> = report
                .entries
                .iter()
                .map(|e| {
                    let tag = if e.passed { "PASS" } else { "FAIL" };
                    format!("{tag} {}  {}", e.name, e.description)
                })
                .collect();
            let failed = report.failures().count();
            for e in report.failures() {
                lines.push(format!("  {}: {}", e.name, e.detail));
            }
            lines.push(format!("{} identities, {failed} failed", report.entries.len()));
            lines.join("\n")
        }
    };
    Ok(Outcome::verdict(out, report.passed()))
}
