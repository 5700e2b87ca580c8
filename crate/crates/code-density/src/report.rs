//! Machine-readable records, sweeps, and configuration for the command-line
//! front end.
//!
//! Every command emits an [`OutputRecord`]. Rationals are serialized
//! losslessly as numerator/denominator strings next to a deterministic
//! 12-significant-digit decimal rendering, so records are a pure function of
//! the inputs: no floats, no locale, no machine dependence.

use std::fmt::Write as _;
use std::path::Path;

use num::{BigInt, BigRational, BigUint, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bounds::{
    density_bounds_hamming, density_bounds_injection, gamma_hamming, gamma_injection,
    DensityInterval, HammingParams, QPower, SubspaceParams,
};
use crate::combinat::Count;
use crate::error::{Error, Result};
use crate::estimator::{
    self, exact_density_hamming, exact_density_injection, mc_density_hamming,
    mc_density_injection, EstimateResult, VerificationReport,
};
use crate::limits::WorkLimit;

pub const SIGNIFICANT_DIGITS: u32 = 12;

/// Deterministic decimal rendering of an exact rational with at least
/// [`SIGNIFICANT_DIGITS`] significant digits, using integer arithmetic only.
pub fn decimal_string(value: &BigRational) -> String {
    let sig = SIGNIFICANT_DIGITS;
    if value.is_zero() {
        return format!("0.{}", "0".repeat(sig as usize));
    }
    let negative = value.is_negative();
    let a = value.numer().abs().to_biguint().expect("abs");
    let b = value.denom().abs().to_biguint().expect("abs");

    // Decimal exponent E with a/b in [10^E, 10^{E+1}).
    let ten = BigUint::from(10u32);
    let da = a.to_string().len() as i64;
    let db = b.to_string().len() as i64;
    let mut e = da - db;
    let holds = if e >= 0 {
        a >= &b * ten.pow(e as u32)
    } else {
        &a * ten.pow((-e) as u32) >= b
    };
    if !holds {
        e -= 1;
    }

    // Round a/b to `sig` significant digits: scaled = round(a/b * 10^(sig-1-E)).
    let shift = sig as i64 - 1 - e;
    let (num, den) = if shift >= 0 {
        (&a * ten.pow(shift as u32), b.clone())
    } else {
        (a.clone(), &b * ten.pow((-shift) as u32))
    };
    let mut scaled = (&num * 2u32 + &den) / (&den * 2u32); // half-up
    if scaled == ten.pow(sig) {
        scaled = ten.pow(sig - 1);
        e += 1;
    }
    let digits = scaled.to_string();
    debug_assert_eq!(digits.len(), sig as usize);

    let body = if (-5..15).contains(&e) {
        if e >= 0 {
            let int_len = (e + 1) as usize;
            if int_len >= sig as usize {
                format!("{}{}", digits, "0".repeat(int_len - sig as usize))
            } else {
                format!("{}.{}", &digits[..int_len], &digits[int_len..])
            }
        } else {
            format!("0.{}{}", "0".repeat((-e - 1) as usize), digits)
        }
    } else {
        format!("{}.{}e{}", &digits[..1], &digits[1..], e)
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Lossless rational: numerator and denominator as decimal strings, plus
/// the deterministic decimal rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalField {
    pub num: String,
    pub den: String,
    pub approx: String,
}

impl RationalField {
    pub fn from_rational(value: &BigRational) -> Self {
        RationalField {
            num: value.numer().to_string(),
            den: value.denom().to_string(),
            approx: decimal_string(value),
        }
    }

    pub fn to_rational(&self) -> Result<BigRational> {
        let num: BigInt = self
            .num
            .parse()
            .map_err(|_| Error::invalid("num", self.num.clone()))?;
        let den: BigInt = self
            .den
            .parse()
            .map_err(|_| Error::invalid("den", self.den.clone()))?;
        if den.is_zero() {
            return Err(Error::invalid("den", "zero denominator"));
        }
        Ok(BigRational::new(num, den))
    }
}

/// The threshold cardinality `gamma = base^(exp_num/exp_den)`, exactly plus
/// a decimal rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaField {
    pub base: u64,
    pub exp_num: u32,
    pub exp_den: u32,
    pub approx: String,
}

impl GammaField {
    fn from_qpower(p: &QPower) -> Self {
        GammaField {
            base: p.base,
            exp_num: p.exp_num,
            exp_den: p.exp_den,
            approx: qpower_decimal(p),
        }
    }
}

/// Decimal rendering of `base^(exp_num/exp_den)` via an integer root with
/// guard digits; deterministic across platforms.
fn qpower_decimal(p: &QPower) -> String {
    let guard: u32 = SIGNIFICANT_DIGITS + 4;
    let ten = BigUint::from(10u32);
    let x = BigUint::from(p.base).pow(p.exp_num) * ten.pow(guard * p.exp_den);
    let y = x.nth_root(p.exp_den); // floor(base^(num/den) * 10^guard)
    let approx = BigRational::new(BigInt::from(y), BigInt::from(ten.pow(guard)));
    decimal_string(&approx)
}

/// Which distance is in play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Hamming,
    Injection,
}

impl std::str::FromStr for Metric {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hamming" => Ok(Metric::Hamming),
            "injection" => Ok(Metric::Injection),
            other => Err(Error::invalid(
                "metric",
                format!("expected hamming or injection, got {other}"),
            )),
        }
    }
}

impl std::fmt::Display for Metric {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Metric::Hamming => write!(f, "hamming"),
            Metric::Injection => write!(f, "injection"),
        }
    }
}

/// Asymptotic regime of a cardinality rule relative to the threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    BelowThreshold,
    AboveThreshold,
    Undetermined,
}

/// Monte Carlo fields of a record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EstimateFields {
    pub point: RationalField,
    pub ci_low: RationalField,
    pub ci_high: RationalField,
    pub trials: u64,
    pub successes: u64,
    pub seed: u64,
    pub confidence: RationalField,
}

impl EstimateFields {
    fn from_result(r: &EstimateResult) -> Self {
        EstimateFields {
            point: RationalField::from_rational(&r.point_estimate),
            ci_low: RationalField::from_rational(&r.ci_low),
            ci_high: RationalField::from_rational(&r.ci_high),
            trials: r.trials,
            successes: r.successes,
            seed: r.base_seed,
            confidence: RationalField::from_rational(&r.confidence_level),
        }
    }
}

/// One row of output: the input parameters, the exact bounds, the threshold
/// value, and the optional oracle fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub metric: Metric,
    pub q: u64,
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u32>,
    pub d: u32,
    pub size: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gamma: Option<GammaField>,
    pub regime: Regime,
    pub lower_raw: RationalField,
    pub upper_raw: RationalField,
    pub lower: RationalField,
    pub upper: RationalField,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact_density: Option<RationalField>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sandwich_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub estimate: Option<EstimateFields>,
}

impl OutputRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::invalid("record", e.to_string()))
    }
}

/// Validated inputs of one bound computation, either metric.
#[derive(Debug, Clone)]
pub enum ParamSet {
    Hamming(HammingParams),
    Injection(SubspaceParams),
}

impl ParamSet {
    pub fn new(
        metric: Metric,
        q: u64,
        n: u32,
        k: Option<u32>,
        d: u32,
        size: Count,
    ) -> Result<Self> {
        match metric {
            Metric::Hamming => Ok(ParamSet::Hamming(HammingParams::new(q, n, d, size)?)),
            Metric::Injection => {
                let k = k.ok_or_else(|| {
                    Error::invalid("k", "the injection metric needs a dimension k")
                })?;
                Ok(ParamSet::Injection(SubspaceParams::new(q, n, k, d, size)?))
            }
        }
    }

    fn bounds(&self) -> Result<DensityInterval> {
        match self {
            ParamSet::Hamming(p) => density_bounds_hamming(p),
            ParamSet::Injection(p) => density_bounds_injection(p),
        }
    }

    fn gamma(&self) -> Option<QPower> {
        match self {
            ParamSet::Hamming(p) => gamma_hamming(p.q, p.n, p.d).ok(),
            ParamSet::Injection(p) => gamma_injection(p.q, p.n, p.k(), p.d).ok(),
        }
    }

    fn base_record(&self, command: &str, regime: Regime) -> Result<OutputRecord> {
        let interval = self.bounds()?;
        let (metric, q, n, k, d, size) = match self {
            ParamSet::Hamming(p) => (Metric::Hamming, p.q, p.n, None, p.d, p.size.clone()),
            ParamSet::Injection(p) => (
                Metric::Injection,
                p.q,
                p.n,
                Some(p.original_k),
                p.d,
                p.size.clone(),
            ),
        };
        Ok(OutputRecord {
            command: command.to_string(),
            metric,
            q,
            n,
            k,
            d,
            size: size.to_string(),
            gamma: self.gamma().map(|g| GammaField::from_qpower(&g)),
            regime,
            lower_raw: RationalField::from_rational(&interval.lower_raw),
            upper_raw: RationalField::from_rational(&interval.upper_raw),
            lower: RationalField::from_rational(&interval.lower),
            upper: RationalField::from_rational(&interval.upper),
            exact_density: None,
            sandwich_ok: None,
            estimate: None,
        })
    }
}

/// `bounds`: the exact interval for one parameter set. A single cardinality
/// does not determine the asymptotic regime, so the tag is undetermined.
pub fn run_bounds(params: &ParamSet) -> Result<OutputRecord> {
    params.base_record("bounds", Regime::Undetermined)
}

/// `exact`: bounds plus the exhaustive-enumeration density and a sandwich
/// flag. With `dump`, every qualifying code is written to the given path in
/// the canonical text format, blank-line separated.
pub fn run_exact(
    params: &ParamSet,
    limit: &WorkLimit,
    dump: Option<&Path>,
) -> Result<OutputRecord> {
    let mut record = params.base_record("exact", Regime::Undetermined)?;
    let exact = match (params, dump) {
        (ParamSet::Hamming(p), None) => exact_density_hamming(p, limit)?,
        (ParamSet::Injection(p), None) => exact_density_injection(p, limit)?,
        (ParamSet::Hamming(p), Some(path)) => {
            let mut blocks = String::new();
            let count = estimator::visit_codes_hamming(p, limit, |code| {
                let _ = writeln!(blocks, "{code}\n");
            })?;
            std::fs::write(path, blocks).map_err(|e| Error::Io(e.to_string()))?;
            let total = crate::combinat::binom(p.space_size(), BigInt::from(p.size.clone()));
            BigRational::new(count.into(), total.into())
        }
        (ParamSet::Injection(p), Some(path)) => {
            let mut blocks = String::new();
            let count = estimator::visit_codes_injection(p, limit, |code| {
                let _ = writeln!(blocks, "{code}\n");
            })?;
            std::fs::write(path, blocks).map_err(|e| Error::Io(e.to_string()))?;
            let total = crate::combinat::binom(p.space_size(), BigInt::from(p.size.clone()));
            BigRational::new(count.into(), total.into())
        }
    };
    let lower = record.lower.to_rational()?;
    let upper = record.upper.to_rational()?;
    record.sandwich_ok = Some(lower <= exact && exact <= upper);
    record.exact_density = Some(RationalField::from_rational(&exact));
    Ok(record)
}

/// `estimate`: bounds plus a seeded Monte Carlo estimate with an exact
/// binomial confidence interval.
pub fn run_estimate(
    params: &ParamSet,
    trials: u64,
    seed: u64,
    workers: usize,
    confidence: &BigRational,
) -> Result<OutputRecord> {
    let mut record = params.base_record("estimate", Regime::Undetermined)?;
    let estimate = match params {
        ParamSet::Hamming(p) => mc_density_hamming(p, trials, seed, workers, confidence)?,
        ParamSet::Injection(p) => mc_density_injection(p, trials, seed, workers, confidence)?,
    };
    record.estimate = Some(EstimateFields::from_result(&estimate));
    Ok(record)
}

/// How the cardinality S_q is chosen for each q of a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SizeRule {
    /// The same S for every q.
    Constant(Count),
    /// `S_q = ceil(gamma_q^(num/den))`.
    GammaPower { num: u32, den: u32 },
    /// One explicit S per q, matched by position.
    Explicit(Vec<Count>),
}

impl SizeRule {
    /// The regime the rule pins down: a gamma exponent below 1 forces
    /// density, above 1 forces sparseness; everything else is undetermined
    /// (a constant S is below threshold since gamma grows with q).
    pub fn regime(&self) -> Regime {
        match self {
            SizeRule::Constant(_) => Regime::BelowThreshold,
            SizeRule::GammaPower { num, den } => match num.cmp(den) {
                std::cmp::Ordering::Less => Regime::BelowThreshold,
                std::cmp::Ordering::Greater => Regime::AboveThreshold,
                std::cmp::Ordering::Equal => Regime::Undetermined,
            },
            SizeRule::Explicit(_) => Regime::Undetermined,
        }
    }
}

/// A parameter sweep over alphabet sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSpec {
    pub metric: Metric,
    pub n: u32,
    pub d: u32,
    pub k: Option<u32>,
    pub q_list: Vec<u64>,
    pub size_rule: SizeRule,
}

/// First alphabet sizes at which the bounds cross the reporting thresholds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrendSummary {
    /// First q with lower bound > 99/100.
    pub first_q_lower_above: Option<u64>,
    /// First q with upper bound < 1/100.
    pub first_q_upper_below: Option<u64>,
}

impl TrendSummary {
    pub fn lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        match self.first_q_lower_above {
            Some(q) => out.push(format!("trend: lower bound exceeds 0.99 from q = {q}")),
            None => out.push("trend: lower bound never exceeds 0.99 in this range".to_string()),
        }
        match self.first_q_upper_below {
            Some(q) => out.push(format!("trend: upper bound drops below 0.01 from q = {q}")),
            None => out.push("trend: upper bound never drops below 0.01 in this range".to_string()),
        }
        out
    }
}

/// `sweep`: one record per alphabet size, plus the trend summary.
pub fn run_sweep(spec: &SweepSpec) -> Result<(Vec<OutputRecord>, TrendSummary)> {
    if spec.q_list.is_empty() {
        return Err(Error::invalid("q-list", "must name at least one alphabet size"));
    }
    if let SizeRule::Explicit(sizes) = &spec.size_rule {
        if sizes.len() != spec.q_list.len() {
            return Err(Error::invalid(
                "S-list",
                format!(
                    "got {} cardinalities for {} alphabet sizes",
                    sizes.len(),
                    spec.q_list.len()
                ),
            ));
        }
    }
    let regime = spec.size_rule.regime();
    let mut records = Vec::with_capacity(spec.q_list.len());
    let mut summary = TrendSummary {
        first_q_lower_above: None,
        first_q_upper_below: None,
    };
    let low_threshold = BigRational::new(BigInt::from(99), BigInt::from(100));
    let high_threshold = BigRational::new(BigInt::from(1), BigInt::from(100));

    for (i, &q) in spec.q_list.iter().enumerate() {
        let size = match &spec.size_rule {
            SizeRule::Constant(c) => c.clone(),
            SizeRule::Explicit(sizes) => sizes[i].clone(),
            SizeRule::GammaPower { num, den } => {
                let gamma = match spec.metric {
                    Metric::Hamming => gamma_hamming(q, spec.n, spec.d)?,
                    Metric::Injection => {
                        let k = spec.k.ok_or_else(|| {
                            Error::invalid("k", "the injection metric needs a dimension k")
                        })?;
                        gamma_injection(q, spec.n, k, spec.d)?
                    }
                };
                gamma.ceil_pow(*num, *den)
            }
        };
        let params = ParamSet::new(spec.metric, q, spec.n, spec.k, spec.d, size)?;
        let record = params.base_record("sweep", regime)?;
        if summary.first_q_lower_above.is_none()
            && record.lower.to_rational()? > low_threshold
        {
            summary.first_q_lower_above = Some(q);
        }
        if summary.first_q_upper_below.is_none()
            && record.upper.to_rational()? < high_threshold
        {
            summary.first_q_upper_below = Some(q);
        }
        records.push(record);
    }
    Ok((records, summary))
}

/// Fixed CSV column order; see the README for the schema.
pub const CSV_HEADER: &str = "metric,q,n,k,d,S,gamma,regime,\
lower_num,lower_den,lower,upper_num,upper_den,upper,\
lower_raw_num,lower_raw_den,upper_raw_num,upper_raw_den";

fn regime_str(r: Regime) -> &'static str {
    match r {
        Regime::BelowThreshold => "below-threshold",
        Regime::AboveThreshold => "above-threshold",
        Regime::Undetermined => "undetermined",
    }
}

/// Render records as CSV with the mandatory header row.
pub fn render_csv(records: &[OutputRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        let k = r.k.map(|k| k.to_string()).unwrap_or_default();
        let gamma = r.gamma.as_ref().map(|g| g.approx.clone()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.metric,
            r.q,
            r.n,
            k,
            r.d,
            r.size,
            gamma,
            regime_str(r.regime),
            r.lower.num,
            r.lower.den,
            r.lower.approx,
            r.upper.num,
            r.upper.den,
            r.upper.approx,
            r.lower_raw.num,
            r.lower_raw.den,
            r.upper_raw.num,
            r.upper_raw.den,
        );
    }
    out
}

/// Render records as JSON lines.
pub fn render_jsonl(records: &[OutputRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&r.to_json());
        out.push('\n');
    }
    out
}

/// Which verification suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifySuite {
    ClaimA,
    WFormula,
    BallSizes,
    InjectionClaims,
    All,
}

impl std::str::FromStr for VerifySuite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "claim-a" => Ok(VerifySuite::ClaimA),
            "w-formula" => Ok(VerifySuite::WFormula),
            "ball-sizes" => Ok(VerifySuite::BallSizes),
            "injection-claims" => Ok(VerifySuite::InjectionClaims),
            "all" => Ok(VerifySuite::All),
            other => Err(Error::invalid(
                "suite",
                format!(
                    "expected claim-a, w-formula, ball-sizes, injection-claims, or all; got {other}"
                ),
            )),
        }
    }
}

/// Run a verification suite over its built-in grid and collect the reports.
pub fn run_verify(suite: VerifySuite, limit: &WorkLimit) -> Result<Vec<VerificationReport>> {
    let mut reports = Vec::new();
    let run_claim_a = matches!(suite, VerifySuite::ClaimA | VerifySuite::All);
    let run_w = matches!(suite, VerifySuite::WFormula | VerifySuite::All);
    let run_balls = matches!(suite, VerifySuite::BallSizes | VerifySuite::All);
    let run_injection = matches!(suite, VerifySuite::InjectionClaims | VerifySuite::All);

    if run_claim_a {
        for q in [2u64, 3] {
            for n in 2u32..=4 {
                for d in 2u32..=3.min(n) {
                    reports.extend(estimator::verify_claim_a(q, n, d, limit)?);
                }
            }
        }
    }
    if run_w {
        for (q, n) in [(2u64, 2u32), (2, 3), (2, 4), (3, 2), (3, 3)] {
            for d in 2u32..=3.min(n) {
                for s in 2u32..=4 {
                    reports.extend(estimator::verify_w_formula(q, n, d, s, limit)?);
                }
            }
        }
    }
    if run_balls {
        for q in [2u64, 3, 4] {
            for n in 2u32..=5 {
                for r in 1..=n.min(3) {
                    reports.extend(estimator::verify_hamming_ball_centers(q, n, r, limit)?);
                }
            }
        }
        for (q, n, k) in [
            (2u64, 4u32, 2u32),
            (2, 4, 1),
            (2, 5, 2),
            (2, 6, 2),
            (2, 6, 3),
        ] {
            for r in 1..=k {
                reports.extend(estimator::verify_injection_ball_centers(q, n, k, r, limit)?);
            }
        }
    }
    if run_injection {
        for (q, n, k, d) in [(2u64, 4u32, 2u32, 2u32), (3, 4, 2, 2), (2, 5, 2, 2)] {
            reports.extend(estimator::verify_injection_claims(q, n, k, d, limit)?);
        }
    }
    Ok(reports)
}

/// Runtime configuration: work limits and the default confidence level.
/// Sourced from an optional key=value file; flags override it.
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub limit: WorkLimit,
    pub confidence: BigRational,
    pub workers: Option<usize>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            limit: WorkLimit::default(),
            confidence: BigRational::new(BigInt::from(99), BigInt::from(100)),
            workers: None,
        }
    }
}

/// Parse "a/b", a decimal like "0.99", or an integer, exactly.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    if let Some((a, b)) = text.split_once('/') {
        let num: BigInt = a
            .trim()
            .parse()
            .map_err(|_| Error::invalid("rational", text.to_string()))?;
        let den: BigInt = b
            .trim()
            .parse()
            .map_err(|_| Error::invalid("rational", text.to_string()))?;
        if den.is_zero() {
            return Err(Error::invalid("rational", "zero denominator"));
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((int, frac)) = text.split_once('.') {
        let digits = format!("{int}{frac}");
        let num: BigInt = digits
            .parse()
            .map_err(|_| Error::invalid("rational", text.to_string()))?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        return Ok(BigRational::new(num, den));
    }
    let num: BigInt = text
        .parse()
        .map_err(|_| Error::invalid("rational", text.to_string()))?;
    Ok(BigRational::from_integer(num))
}

impl Config {
    /// Load a key=value file on top of the defaults. Keys: `work_limit`
    /// (sets both budgets), `work_limit_objects`, `work_limit_pairs`,
    /// `confidence_level`, `workers`. Lines starting with `#` are comments.
    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(e.to_string()))?;
        let mut config = Config::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::invalid(
                    "config",
                    format!("line {}: expected key=value, got {raw:?}", lineno + 1),
                ));
            };
            let key = key.trim();
            let value = value.trim();
            let parse_u64 = |what: &'static str| -> Result<u64> {
                value
                    .parse::<u64>()
                    .map_err(|_| Error::invalid(what, value.to_string()))
            };
            match key {
                "work_limit" => {
                    let v = parse_u64("work_limit")?;
                    config.limit = WorkLimit::unified(v);
                }
                "work_limit_objects" => config.limit.max_objects = parse_u64("work_limit_objects")?,
                "work_limit_pairs" => config.limit.max_pair_evals = parse_u64("work_limit_pairs")?,
                "confidence_level" => {
                    let level = parse_rational(value)?;
                    if level <= BigRational::zero() || level >= BigRational::one() {
                        return Err(Error::invalid(
                            "confidence_level",
                            "must be strictly between 0 and 1",
                        ));
                    }
                    config.confidence = level;
                }
                "workers" => {
                    config.workers = Some(
                        value
                            .parse::<usize>()
                            .map_err(|_| Error::invalid("workers", value.to_string()))?,
                    )
                }
                other => {
                    return Err(Error::invalid(
                        "config",
                        format!("unknown key {other:?} on line {}", lineno + 1),
                    ))
                }
            }
        }
        Ok(config)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat;

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(1, 3)), "0.333333333333");
        assert_eq!(decimal_string(&rat(8, 35)), "0.228571428571");
        assert_eq!(decimal_string(&rat(-2, 7)), "-0.285714285714");
        assert_eq!(decimal_string(&rat(1, 1)), "1.00000000000");
        assert_eq!(decimal_string(&rat(0, 5)), "0.000000000000");
        assert_eq!(decimal_string(&rat(2, 3)), "0.666666666667");
        assert_eq!(decimal_string(&rat(1000, 1)), "1000.00000000");
        assert_eq!(decimal_string(&rat(1, 1000)), "0.00100000000000");
        // Rounding rolls over cleanly at the significance boundary.
        assert_eq!(decimal_string(&rat(9_999_999_999_999, 10)), "1000000000000");
    }

    #[test]
    fn decimal_rendering_scientific_for_extremes() {
        let tiny = BigRational::new(BigInt::from(1), BigInt::from(10u64).pow(9));
        assert_eq!(decimal_string(&tiny), "1.00000000000e-9");
        let huge = BigRational::from_integer(BigInt::from(10u64).pow(17));
        assert_eq!(decimal_string(&huge), "1.00000000000e17");
    }

    #[test]
    fn gamma_field_rendering() {
        let g = gamma_hamming(2, 4, 2).unwrap();
        let field = GammaField::from_qpower(&g);
        // 2^(3/2) = 2.82842712474619...
        assert_eq!(field.approx, "2.82842712475");
        let g = gamma_hamming(4, 5, 3).unwrap();
        assert_eq!(GammaField::from_qpower(&g).approx, "8.00000000000");
    }

    #[test]
    fn record_json_round_trips_byte_identically() {
        let params = ParamSet::new(
            Metric::Hamming,
            2,
            3,
            None,
            2,
            BigUint::from(3u32),
        )
        .unwrap();
        let record = run_bounds(&params).unwrap();
        let json = record.to_json();
        let parsed = OutputRecord::from_json(&json).unwrap();
        assert_eq!(parsed.to_json(), json);
        assert_eq!(parsed, record);
    }

    #[test]
    fn bounds_record_worked_example() {
        let params = ParamSet::new(Metric::Hamming, 2, 3, None, 2, BigUint::from(3u32)).unwrap();
        let record = run_bounds(&params).unwrap();
        assert_eq!(record.upper.num, "8");
        assert_eq!(record.upper.den, "35");
        assert_eq!(record.lower.num, "0");
        assert_eq!(record.lower_raw.num, "-2");
        assert_eq!(record.lower_raw.den, "7");
        assert_eq!(record.regime, Regime::Undetermined);

        let params =
            ParamSet::new(Metric::Injection, 2, 4, Some(2), 2, BigUint::from(2u32)).unwrap();
        let record = run_bounds(&params).unwrap();
        assert_eq!(record.lower.num, "8");
        assert_eq!(record.lower.den, "17");
        assert_eq!(record.upper.num, "8");
    }

    #[test]
    fn exact_record_carries_sandwich_flag() {
        let limit = WorkLimit::default();
        let params = ParamSet::new(Metric::Hamming, 2, 3, None, 2, BigUint::from(3u32)).unwrap();
        let record = run_exact(&params, &limit, None).unwrap();
        let exact = record.exact_density.as_ref().unwrap();
        assert_eq!(exact.num, "1");
        assert_eq!(exact.den, "7");
        assert_eq!(record.sandwich_ok, Some(true));
    }

    #[test]
    fn sweep_produces_monotone_trend_tail() {
        let spec = SweepSpec {
            metric: Metric::Hamming,
            n: 4,
            d: 3,
            k: None,
            q_list: vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16],
            size_rule: SizeRule::GammaPower { num: 1, den: 2 },
        };
        let (records, _) = run_sweep(&spec).unwrap();
        assert_eq!(records.len(), 10);
        assert!(records.iter().all(|r| r.regime == Regime::BelowThreshold));
        // ceil(sqrt(q)) cardinalities.
        let sizes: Vec<&str> = records.iter().map(|r| r.size.as_str()).collect();
        assert_eq!(sizes, vec!["2", "2", "2", "3", "3", "3", "3", "4", "4", "4"]);
    }

    #[test]
    fn sweep_explicit_list_mismatch_rejected() {
        let spec = SweepSpec {
            metric: Metric::Hamming,
            n: 4,
            d: 3,
            k: None,
            q_list: vec![2, 3],
            size_rule: SizeRule::Explicit(vec![BigUint::from(2u32)]),
        };
        assert!(run_sweep(&spec).is_err());
    }

    #[test]
    fn csv_has_header_and_fixed_columns() {
        let params = ParamSet::new(Metric::Hamming, 2, 2, None, 2, BigUint::from(2u32)).unwrap();
        let record = run_bounds(&params).unwrap();
        let csv = render_csv(&[record]);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER);
        let row = lines.next().unwrap();
        assert!(row.starts_with("hamming,2,2,,2,2,"));
        assert_eq!(row.split(',').count(), CSV_HEADER.split(',').count());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("99/100").unwrap(), rat(99, 100));
        assert_eq!(parse_rational("0.99").unwrap(), rat(99, 100));
        assert_eq!(parse_rational("1").unwrap(), rat(1, 1));
        assert_eq!(parse_rational("0.125").unwrap(), rat(1, 8));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn config_parsing_and_precedence() {
        let dir = std::env::temp_dir().join("code-density-config-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("config.txt");
        std::fs::write(
            &path,
            "# comment\nwork_limit = 5000\nconfidence_level = 95/100\nworkers = 2\n",
        )
        .unwrap();
        let config = Config::load(&path).unwrap();
        assert_eq!(config.limit.max_objects, 5000);
        assert_eq!(config.limit.max_pair_evals, 5000);
        assert_eq!(config.confidence, rat(95, 100));
        assert_eq!(config.workers, Some(2));

        std::fs::write(&path, "bogus_key = 1\n").unwrap();
        assert!(Config::load(&path).is_err());
    }

    #[test]
    fn verify_suites_pass_on_builtin_grids() {
        let limit = WorkLimit::default();
        let reports = run_verify(VerifySuite::ClaimA, &limit).unwrap();
        assert!(!reports.is_empty());
        assert!(estimator::all_match(&reports));

        let reports = run_verify(VerifySuite::BallSizes, &limit).unwrap();
        assert!(estimator::all_match(&reports));
    }
}
