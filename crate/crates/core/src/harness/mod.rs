//! Verification suites, tabulation and the on-disk cache.
//!
//! Every suite enumerates its cases up front, in ascending height, runs
//! them in parallel and collects the results in enumeration order, so a
//! report is deterministic apart from `duration_ms`.

pub mod cache;
pub mod export;

use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::affine_weyl::{oracle, AffineWeylGroup, ExtAffineElement};
use crate::error::{Error, Result};
use crate::hecke::{IwahoriHecke, PrimeField};
use crate::root_datum::{Cocharacter, RootDatum};
use crate::satake::Satake;

/// Largest `|k|` for the Omega-class of enumerated cocharacters.
pub const OMEGA_CLASS_BOUND: i64 = 2;
/// Height bound on `mu + nu` for the monoidal suite.
pub const MONOIDAL_HEIGHT: i64 = 8;
/// Length bound for the Coxeter suite.
pub const COXETER_LENGTH: i64 = 6;
/// Height bound for the admissible-set oracle in the Coxeter suite.
pub const ADM_ORACLE_HEIGHT: i64 = 8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub case: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl CaseResult {
    fn pass(case: String) -> Self {
        CaseResult { case, passed: true, counterexample: None }
    }

    fn fail(case: String, payload: Value) -> Self {
        CaseResult { case, passed: false, counterexample: Some(payload) }
    }

    fn check(case: String, ok: bool, payload: impl FnOnce() -> Value) -> Self {
        if ok {
            Self::pass(case)
        } else {
            Self::fail(case, payload())
        }
    }

    fn from_result(case: String, r: Result<CaseResult>) -> Self {
        r.unwrap_or_else(|e| Self::fail(case, json!({ "error": e.to_string() })))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    pub bound: i64,
    pub omega_class_bound: i64,
    pub primes: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub group: String,
    pub parameters: Parameters,
    pub passed: bool,
    pub cases_total: usize,
    pub cases_failed: usize,
    pub cases: Vec<CaseResult>,
    pub duration_ms: u64,
}

impl VerificationReport {
    fn build(suite: Suite, group: &AffineWeylGroup, parameters: Parameters, cases: Vec<CaseResult>, start: Instant) -> Self {
        let cases_failed = cases.iter().filter(|c| !c.passed).count();
        VerificationReport {
            suite: suite.name().to_string(),
            group: group.name().to_string(),
            parameters,
            passed: cases_failed == 0,
            cases_total: cases.len(),
            cases_failed,
            cases,
            duration_ms: start.elapsed().as_millis() as u64,
        }
    }

    /// The report with the timing field zeroed.
    pub fn without_timing(&self) -> Self {
        VerificationReport { duration_ms: 0, ..self.clone() }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.passed)
    }

    pub fn summary(&self) -> String {
        format!(
            "{} {}: {} ({}/{} cases passed, {} ms)",
            self.suite,
            self.group,
            if self.passed { "PASS" } else { "FAIL" },
            self.cases_total - self.cases_failed,
            self.cases_total,
            self.duration_ms
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Central,
    Bernstein,
    Monoidal,
    Coxeter,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Central, Suite::Bernstein, Suite::Monoidal, Suite::Coxeter];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Central => "central",
            Suite::Bernstein => "bernstein",
            Suite::Monoidal => "monoidal",
            Suite::Coxeter => "coxeter",
        }
    }

    pub fn default_bound(self, datum: &RootDatum) -> i64 {
        match self {
            Suite::Central | Suite::Bernstein => default_height(datum),
            Suite::Monoidal => MONOIDAL_HEIGHT,
            Suite::Coxeter => COXETER_LENGTH,
        }
    }

    pub fn run(self, group: &AffineWeylGroup, config: &SuiteConfig) -> Result<VerificationReport> {
        match self {
            Suite::Central => verify_central_formula(group, config),
            Suite::Bernstein => verify_bernstein(group, config),
            Suite::Monoidal => verify_monoidal(group, config),
            Suite::Coxeter => verify_coxeter(group, config),
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

/// `bound` overrides the suite's default height (or length) bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub bound: Option<i64>,
    pub primes: Vec<u64>,
    pub allow_p2: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { bound: None, primes: vec![3, 5], allow_p2: false }
    }
}

impl SuiteConfig {
    pub fn with_bound(bound: i64) -> Self {
        SuiteConfig { bound: Some(bound), ..Self::default() }
    }

    fn fields(&self) -> Result<Vec<PrimeField>> {
        self.primes
            .iter()
            .map(|&p| if self.allow_p2 { PrimeField::allowing_p2(p, 0) } else { PrimeField::new(p) })
            .collect()
    }

    fn parameters(&self, suite: Suite, datum: &RootDatum) -> Parameters {
        Parameters {
            bound: self.bound.unwrap_or_else(|| suite.default_bound(datum)),
            omega_class_bound: OMEGA_CLASS_BOUND,
            primes: if suite == Suite::Coxeter { Vec::new() } else { self.primes.clone() },
        }
    }
}

/// 10 for semisimple rank 1, otherwise 6.
pub fn default_height(datum: &RootDatum) -> i64 {
    if datum.semisimple_rank() == 1 {
        10
    } else {
        6
    }
}

/// Dominant cocharacters of height at most `height` and Omega-class at most
/// `OMEGA_CLASS_BOUND` in absolute value, by ascending height.
pub fn dominant_window(datum: &RootDatum, height: i64) -> Vec<Cocharacter> {
    datum.dominant_window(height, OMEGA_CLASS_BOUND)
}

fn run_cells<T: Sync>(cells: &[T], f: impl Fn(&T) -> CaseResult + Sync + Send) -> Vec<CaseResult> {
    cells.par_iter().map(f).collect()
}

fn case_label(mu: &Cocharacter, p: &PrimeField) -> String {
    format!("mu={mu} p={}", p.p())
}

/// For each `mu` and `p`: `z_mu` is central and `z_mu * 1_K` equals
/// `sum_{lambda <= mu} 1_lambda`.
pub fn verify_central_formula(group: &AffineWeylGroup, config: &SuiteConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let params = config.parameters(Suite::Central, group.datum());
    let fields = config.fields()?;
    let cells: Vec<(Cocharacter, PrimeField)> = dominant_window(group.datum(), params.bound)
        .into_iter()
        .flat_map(|mu| fields.iter().map(move |f| (mu.clone(), *f)))
        .collect();
    let cases = run_cells(&cells, |(mu, f)| {
        let label = case_label(mu, f);
        CaseResult::from_result(label.clone(), (|| {
            let s = Satake::new(group, *f);
            let h = s.hecke();
            let z = h.z_mu(mu)?;
            let central = h.is_central(&z)?;
            let lhs = h.mul(&z, &h.one_k())?;
            let rhs = s.to_iwahori(&s.partial_sum(mu)?)?;
            Ok(CaseResult::check(label, central && lhs == rhs, || {
                json!({
                    "mu": mu, "p": f.p(), "q_image": f.q_image(), "central": central,
                    "lhs": h.format(&lhs), "rhs": h.format(&rhs),
                })
            }))
        })())
    });
    Ok(VerificationReport::build(Suite::Central, group, params, cases, start))
}

/// For each `mu` and `p`: `C^-1(S^-1(mu))` equals `z_mu` and is central.
pub fn verify_bernstein(group: &AffineWeylGroup, config: &SuiteConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let params = config.parameters(Suite::Bernstein, group.datum());
    let fields = config.fields()?;
    let cells: Vec<(Cocharacter, PrimeField)> = dominant_window(group.datum(), params.bound)
        .into_iter()
        .flat_map(|mu| fields.iter().map(move |f| (mu.clone(), *f)))
        .collect();
    let cases = run_cells(&cells, |(mu, f)| {
        let label = case_label(mu, f);
        CaseResult::from_result(label.clone(), (|| {
            let s = Satake::new(group, *f);
            let h = s.hecke();
            let b = s.bernstein_map(&s.basis(mu.clone())?)?;
            let z = h.z_mu(mu)?;
            let central = h.is_central(&b)?;
            Ok(CaseResult::check(label, central && b == z, || {
                json!({
                    "mu": mu, "p": f.p(), "q_image": f.q_image(), "central": central,
                    "bernstein": h.format(&b), "z_mu": h.format(&z),
                })
            }))
        })())
    });
    Ok(VerificationReport::build(Suite::Bernstein, group, params, cases, start))
}

/// For each unordered pair `mu, nu` with `mu + nu` in the window:
/// `z_mu * z_nu = z_{mu+nu}`.
pub fn verify_monoidal(group: &AffineWeylGroup, config: &SuiteConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let params = config.parameters(Suite::Monoidal, group.datum());
    let fields = config.fields()?;
    let d = group.datum();
    let window = dominant_window(d, params.bound);
    let mut pairs = Vec::new();
    for (i, mu) in window.iter().enumerate() {
        for nu in &window[i..] {
            let sum = mu + nu;
            if d.height(&sum) <= params.bound && d.omega_class(&sum).abs() <= OMEGA_CLASS_BOUND {
                pairs.push((mu.clone(), nu.clone(), sum));
            }
        }
    }
    pairs.sort_by(|a, b| d.height(&a.2).cmp(&d.height(&b.2)).then_with(|| (&a.0, &a.1).cmp(&(&b.0, &b.1))));
    let cells: Vec<_> = pairs
        .into_iter()
        .flat_map(|(mu, nu, sum)| fields.iter().map(move |f| (mu.clone(), nu.clone(), sum.clone(), *f)))
        .collect();
    let cases = run_cells(&cells, |(mu, nu, sum, f)| {
        let label = format!("mu={mu} nu={nu} p={}", f.p());
        CaseResult::from_result(label.clone(), (|| {
            let h = IwahoriHecke::new(group, *f);
            let lhs = h.mul(&h.z_mu(mu)?, &h.z_mu(nu)?)?;
            let rhs = h.z_mu(sum)?;
            Ok(CaseResult::check(label, lhs == rhs, || {
                json!({
                    "mu": mu, "nu": nu, "p": f.p(), "q_image": f.q_image(),
                    "lhs": h.format(&lhs), "rhs": h.format(&rhs),
                })
            }))
        })())
    });
    Ok(VerificationReport::build(Suite::Monoidal, group, params, cases, start))
}

/// Dominant cocharacters with every coordinate in `[-3, 3]`.
pub fn small_dominant(datum: &RootDatum) -> Vec<Cocharacter> {
    let mut out = Vec::new();
    let mut coords = vec![-3i64; datum.rank];
    loop {
        let mu = Cocharacter::new(coords.iter().copied());
        if datum.is_dominant(&mu).unwrap_or(false) {
            out.push(mu);
        }
        let mut k = 0;
        loop {
            if k == datum.rank {
                out.sort_by(|a, b| datum.height(a).cmp(&datum.height(b)).then_with(|| a.cmp(b)));
                return out;
            }
            coords[k] += 1;
            if coords[k] > 3 {
                coords[k] = -3;
                k += 1;
            } else {
                break;
            }
        }
    }
}

fn el(group: &AffineWeylGroup, x: &ExtAffineElement) -> Value {
    Value::String(group.format_element(x))
}

/// Length identities, Bruhat and admissible-set oracles, the Cartan
/// partition and reduced-word round trips, up to the length bound.
pub fn verify_coxeter(group: &AffineWeylGroup, config: &SuiteConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let params = config.parameters(Suite::Coxeter, group.datum());
    let max_len = params.bound.max(0) as usize;
    let d = group.datum();
    let mut cases = Vec::new();

    let small = small_dominant(d);
    cases.extend(run_cells(&small, |mu| {
        let label = format!("length-additivity mu={mu}");
        let lt = group.length(&group.translation(mu.clone()));
        if lt as i64 != d.height(mu) {
            return CaseResult::fail(label, json!({ "mu": mu, "length": lt, "height": d.height(mu) }));
        }
        for lambda in &small {
            let a = group.length(&group.translation_longest(lambda.clone()));
            let b = group.length(&group.translation_longest(mu + lambda));
            if lt + a != b {
                return CaseResult::fail(label, json!({ "mu": mu, "lambda": lambda, "lhs": lt + a, "rhs": b }));
            }
        }
        CaseResult::pass(label)
    }));

    let ball = oracle::cayley_ball(group, max_len);
    let mut bad = None;
    for (x, &dist) in &ball {
        let (l, h) = (group.length(x), oracle::hyperplane_length(group, x));
        if l != dist || h != dist {
            bad = Some(json!({ "element": el(group, x), "length": l, "word_length": dist, "hyperplanes": h }));
            break;
        }
    }
    cases.push(match bad {
        None => CaseResult::pass(format!("length-oracles len<={max_len}")),
        Some(v) => CaseResult::fail(format!("length-oracles len<={max_len}"), v),
    });

    let omega_range = if group.omega_generator().is_some() { 1 } else { 0 };
    let elems = group.elements_up_to(max_len, omega_range);
    cases.extend(run_cells(&elems, |y| {
        let label = format!("bruhat-oracle y={}", group.format_element(y));
        let below = oracle::subword_products(group, y);
        for x in &elems {
            if group.bruhat_leq(x, y) != below.contains(x) {
                return CaseResult::fail(label, json!({ "x": el(group, x), "y": el(group, y) }));
            }
        }
        CaseResult::pass(label)
    }));

    let adm_window: Vec<_> = dominant_window(d, ADM_ORACLE_HEIGHT)
        .into_iter()
        .filter(|mu| d.omega_class(mu).abs() <= 1)
        .collect();
    cases.extend(run_cells(&adm_window, |mu| {
        let label = format!("adm-oracle mu={mu}");
        CaseResult::from_result(label.clone(), (|| {
            let fast = group.admissible_set(mu)?;
            let brute: Vec<_> = oracle::admissible_set_subword(group, mu).into_iter().collect();
            Ok(CaseResult::check(label, fast == brute, || {
                json!({ "mu": mu, "lifting": fast.len(), "subword": brute.len() })
            }))
        })())
    }));

    cases.push(cartan_partition(group, &elems, max_len));

    let mut bad = None;
    for x in &elems {
        let w = group.reduced_word(x);
        let text = group.format_element(x);
        let ok = group.from_word(&w.omega, &w.letters) == *x
            && w.letters.len() == group.length(x)
            && group.parse_element(&text).ok().as_ref() == Some(x);
        if !ok {
            bad = Some(json!({ "element": text, "letters": w.letters }));
            break;
        }
    }
    let label = format!("reduced-words len<={max_len}");
    cases.push(match bad {
        None => CaseResult::pass(label),
        Some(v) => CaseResult::fail(label, v),
    });

    Ok(VerificationReport::build(Suite::Coxeter, group, params, cases, start))
}

/// Every element lies in exactly one double coset `W t_lambda W` among the
/// cosets of all dominant `lambda` met by the elements.
fn cartan_partition(group: &AffineWeylGroup, elems: &[ExtAffineElement], max_len: usize) -> CaseResult {
    let label = format!("cartan-partition len<={max_len}");
    let lambdas: std::collections::BTreeSet<Cocharacter> =
        elems.iter().map(|x| group.spherical_class(x)).collect();
    let mut count: BTreeMap<&ExtAffineElement, usize> = elems.iter().map(|x| (x, 0)).collect();
    for l in &lambdas {
        for w in group.double_coset(l) {
            if let Some(c) = count.get_mut(&w) {
                *c += 1;
            }
        }
    }
    match count.into_iter().find(|(_, c)| *c != 1) {
        None => CaseResult::pass(label),
        Some((x, c)) => CaseResult::fail(label, json!({ "element": el(group, x), "cosets": c })),
    }
}

/// Runs the suites in order.
pub fn verify_all(group: &AffineWeylGroup, config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    Suite::ALL.iter().map(|s| s.run(group, config)).collect()
}
