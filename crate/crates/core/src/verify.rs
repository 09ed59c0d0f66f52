//! The verification suite: configuration, per-case checks and the JSON report.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariant_engine::{
    bidegree_check, generic_orbit_codim, h_type_check, infinitesimal_residual, invariance_residual, jacobian_pass_rate,
    pfaffian_det_residual, pfaffian_equivariance_residual, restriction_check, HTypeReport,
};
use crate::pair_catalog::quotient::get_quotient_for;
use crate::pair_catalog::{get_case, CaseDescriptor, CaseId, CaseKind};
use crate::par::{map_slice, ExecMode};
use crate::radon_spectrum::{
    e_n_set, line_d, radon_commutation_residual, theta_injectivity, theta_map, GaussianPoly, Line8Variant, QuadSpec,
};
use crate::symm_calculus::pipeline::{exact_pipeline_with_ops, EXACT_DIM_LIMIT};
use crate::tolerances;

pub const SCHEMA: &str = "nilpair-report/1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Group,
    Infinitesimal,
    Jacobian,
    Bidegree,
    Restriction,
    HType,
    Orbit,
    Exact,
    Radon,
    Pfaffian,
    Theta,
    Combinatorics,
}

impl Check {
    pub const ALL: [Check; 12] = [
        Check::Group,
        Check::Infinitesimal,
        Check::Jacobian,
        Check::Bidegree,
        Check::Restriction,
        Check::HType,
        Check::Orbit,
        Check::Exact,
        Check::Radon,
        Check::Pfaffian,
        Check::Theta,
        Check::Combinatorics,
    ];

    pub fn is_exact(self) -> bool {
        self == Check::Exact
    }

    pub fn name(self) -> &'static str {
        match self {
            Check::Group => "group",
            Check::Infinitesimal => "infinitesimal",
            Check::Jacobian => "jacobian",
            Check::Bidegree => "bidegree",
            Check::Restriction => "restriction",
            Check::HType => "h-type",
            Check::Orbit => "orbit",
            Check::Exact => "exact",
            Check::Radon => "radon",
            Check::Pfaffian => "pfaffian",
            Check::Theta => "theta",
            Check::Combinatorics => "combinatorics",
        }
    }
}

impl std::str::FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        Check::ALL
            .into_iter()
            .find(|c| c.name() == t || (t == "htype" && *c == Check::HType))
            .ok_or_else(|| Error::Config(format!("unknown check `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    pub group: f64,
    pub infinitesimal: f64,
    pub jacobian_pass_rate: f64,
    pub bidegree: f64,
    pub restriction: f64,
    pub h_type: f64,
    pub radon: f64,
    pub pfaffian: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            group: tolerances::GROUP_INVARIANCE,
            infinitesimal: tolerances::INFINITESIMAL_INVARIANCE,
            jacobian_pass_rate: tolerances::JACOBIAN_PASS_RATE,
            bidegree: tolerances::BIDEGREE,
            restriction: tolerances::RESTRICTION,
            h_type: tolerances::H_TYPE,
            radon: tolerances::QUADRATURE,
            pfaffian: tolerances::PFAFFIAN,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Case selectors: ids such as `A2`, `A1-SO[n=4]`, `T1-L3`, or the groups
    /// `all`, `appendix`, `table1`. Empty means `all`.
    pub cases: Vec<String>,
    /// Parameter applied to every selected case that takes one.
    pub n: Option<usize>,
    pub samples: usize,
    pub seed: u64,
    /// Enabled checks; empty means all.
    pub checks: Vec<Check>,
    pub tolerances: Tolerances,
    pub quad: QuadSpec,
    pub line8_variant: Line8Variant,
    /// Random regular tuples per line for the Θ certificate.
    pub theta_samples: usize,
    /// Largest n for the E_n cardinality check.
    pub e_n_max: u32,
    /// None lets the thread pool decide; 1 runs sequentially.
    pub jobs: Option<usize>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            cases: Vec::new(),
            n: None,
            samples: 100,
            seed: DEFAULT_SEED,
            checks: Vec::new(),
            tolerances: Tolerances::default(),
            quad: QuadSpec::default(),
            line8_variant: Line8Variant::default(),
            theta_samples: 10_000,
            e_n_max: 40,
            jobs: None,
        }
    }
}

impl Config {
    pub fn from_json(s: &str) -> Result<Self> {
        let c: Config = serde_json::from_str(s).map_err(|e| Error::Config(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        self.quad.validate()?;
        let t = &self.tolerances;
        for (name, x) in [
            ("group", t.group),
            ("infinitesimal", t.infinitesimal),
            ("bidegree", t.bidegree),
            ("restriction", t.restriction),
            ("h_type", t.h_type),
            ("radon", t.radon),
            ("pfaffian", t.pfaffian),
        ] {
            if !(x >= 0.0 && x.is_finite()) {
                return Err(Error::Config(format!("tolerance `{name}` must be a finite non-negative number")));
            }
        }
        if !(0.0..=1.0).contains(&t.jacobian_pass_rate) {
            return Err(Error::Config("jacobian_pass_rate must lie in [0, 1]".into()));
        }
        if self.samples == 0 {
            return Err(Error::Config("samples must be positive".into()));
        }
        if self.jobs == Some(0) {
            return Err(Error::Config("jobs must be positive".into()));
        }
        Ok(())
    }

    pub fn enabled(&self) -> BTreeSet<Check> {
        if self.checks.is_empty() {
            Check::ALL.into_iter().collect()
        } else {
            self.checks.iter().copied().collect()
        }
    }

    /// The selected cases, deduplicated and ordered by id.
    pub fn selected_cases(&self) -> Result<Vec<CaseId>> {
        let selectors: Vec<&str> =
            if self.cases.is_empty() { vec!["all"] } else { self.cases.iter().map(String::as_str).collect() };
        let mut out = BTreeSet::new();
        for sel in selectors {
            let lower = sel.trim().to_ascii_lowercase();
            let group: Option<Vec<CaseId>> = match lower.as_str() {
                "all" | "default" => Some(CaseId::default_suite()),
                "appendix" => Some(CaseId::default_suite().into_iter().filter(|c| c.kind.line().is_none()).collect()),
                "table1" => Some(CaseId::default_suite().into_iter().filter(|c| c.kind.line().is_some()).collect()),
                _ => None,
            };
            match group {
                Some(ids) => match self.n {
                    Some(n) => {
                        let kinds: BTreeSet<CaseKind> = ids.iter().map(|c| c.kind).collect();
                        for k in kinds {
                            let id = if k.min_n().is_some() { CaseId::new(k, Some(n)).ok() } else { CaseId::new(k, None).ok() };
                            out.extend(id);
                        }
                    }
                    None => out.extend(ids),
                },
                None => {
                    let id: CaseId = sel.parse()?;
                    let explicit = sel.contains('[');
                    out.insert(if explicit { id } else { self.with_n(id.kind, id.n)? });
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    fn with_n(&self, kind: CaseKind, fallback: Option<usize>) -> Result<CaseId> {
        match (kind.min_n(), self.n) {
            (Some(_), Some(n)) => CaseId::new(kind, Some(n)),
            _ => CaseId::new(kind, fallback),
        }
    }

    fn exec_mode(&self) -> ExecMode {
        ExecMode::from_jobs(self.jobs)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Residuals {
    pub group: Option<f64>,
    pub infinitesimal: Option<f64>,
    pub restriction: Option<f64>,
    pub radon: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExactVerdicts {
    pub structure: bool,
    pub sublaplacian: bool,
    pub central_laplacian: bool,
    pub adjoint: bool,
    pub homogeneity: Vec<Option<i64>>,
    pub homogeneity_ok: bool,
    pub radon_d: bool,
    pub restriction: bool,
    /// (j, central order of M^j − p(i⁻¹∇)^j); null order means a zero defect.
    pub z_order: Vec<(u32, Option<u32>)>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrbitRecord {
    pub orbit_dim: usize,
    pub expected: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseRecord {
    pub case: String,
    pub n: Option<usize>,
    pub dim_v: usize,
    pub dim_z: usize,
    pub residuals: Residuals,
    pub jacobian_pass_rate: Option<f64>,
    pub bidegrees: Vec<(u32, u32)>,
    pub homogeneity: Vec<u32>,
    pub bidegree_residual: Option<f64>,
    pub h_type: Option<HTypeReport>,
    pub orbit: Option<OrbitRecord>,
    pub exact: Option<ExactVerdicts>,
    /// Checks that do not apply to this case, or were skipped with a reason.
    pub skipped: Vec<String>,
    pub failures: Vec<String>,
    pub pass: bool,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GlobalRecord {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: String,
    pub tool_version: String,
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<Check>,
    pub cases: Vec<CaseRecord>,
    pub global: Vec<GlobalRecord>,
    pub failures: Vec<String>,
    pub pass: bool,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report with every elapsed-time field zeroed.
    pub fn without_timing(&self) -> VerificationReport {
        let mut r = self.clone();
        r.elapsed_ms = 0;
        r.cases.iter_mut().for_each(|c| c.elapsed_ms = 0);
        r
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        for c in &self.cases {
            let r = &c.residuals;
            let f = |x: Option<f64>| x.map_or("-".to_string(), |v| format!("{v:.1e}"));
            s.push_str(&format!(
                "{:<5} {:<18} group {:>8} inf {:>8} jac {:>5} restr {:>8} radon {:>8} exact {:<5} {} ms\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.case,
                f(r.group),
                f(r.infinitesimal),
                c.jacobian_pass_rate.map_or("-".into(), |p| format!("{p:.2}")),
                f(r.restriction),
                f(r.radon),
                c.exact.as_ref().map_or("-".into(), |e| e.passed.to_string()),
                c.elapsed_ms
            ));
        }
        for g in &self.global {
            s.push_str(&format!(
                "{:<5} {:<38} {:.2e} (tolerance {:.1e})\n",
                if g.pass { "PASS" } else { "FAIL" },
                g.name,
                g.value,
                g.tolerance
            ));
        }
        for f in &self.failures {
            s.push_str(&format!("  failure: {f}\n"));
        }
        s.push_str(&format!(
            "{} cases, {} global checks: {}\n",
            self.cases.len(),
            self.global.len(),
            if self.pass { "PASS" } else { "FAIL" }
        ));
        s
    }
}

struct Gate<'a> {
    case: &'a str,
    failures: Vec<String>,
}

impl Gate<'_> {
    fn at_most(&mut self, what: &str, value: f64, tol: f64) {
        if !(value <= tol) {
            self.failures.push(format!("{}: {what} {value:.3e} exceeds {tol:.1e}", self.case));
        }
    }

    fn at_least(&mut self, what: &str, value: f64, tol: f64) {
        if !(value >= tol) {
            self.failures.push(format!("{}: {what} {value:.3} below {tol}", self.case));
        }
    }

    fn holds(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(format!("{}: {what}", self.case));
        }
    }
}

fn exact_eligible(case: &CaseDescriptor) -> bool {
    case.kind().line().is_some() && case.dim_v + case.dim_z <= EXACT_DIM_LIMIT
}

fn run_case(id: CaseId, cfg: &Config, enabled: &BTreeSet<Check>, mode: ExecMode) -> Result<CaseRecord> {
    let start = Instant::now();
    let case = get_case(id)?;
    let name = id.to_string();
    let mut gate = Gate { case: &name, failures: Vec::new() };
    let tol = &cfg.tolerances;
    let is_line = case.kind().line().is_some();
    let mut residuals = Residuals::default();
    let mut skipped = Vec::new();
    let on = |c: Check| enabled.contains(&c);

    if on(Check::Group) {
        let r = invariance_residual(&case, cfg.samples, cfg.seed, mode);
        gate.at_most("group residual", r, tol.group);
        residuals.group = Some(r);
    }
    if on(Check::Infinitesimal) {
        let r = infinitesimal_residual(&case, cfg.samples, cfg.seed, mode);
        gate.at_most("infinitesimal residual", r, tol.infinitesimal);
        residuals.infinitesimal = Some(r);
    }
    let jacobian = on(Check::Jacobian).then(|| {
        let p = jacobian_pass_rate(&case, cfg.samples, cfg.seed, mode);
        gate.at_least("jacobian pass rate", p, tol.jacobian_pass_rate);
        p
    });
    let bidegree_residual = on(Check::Bidegree).then(|| {
        let b = bidegree_check(&case, cfg.samples, cfg.seed);
        gate.at_most("bidegree residual", b.max_residual, tol.bidegree);
        b.max_residual
    });
    if on(Check::Restriction) && is_line {
        let r = restriction_check(&case, cfg.samples, cfg.seed)?;
        gate.at_most("restriction residual", r, tol.restriction);
        residuals.restriction = Some(r);
    }
    let h_type = if on(Check::HType) && is_line {
        let h = h_type_check(&case, cfg.samples, cfg.seed)?;
        if h.block == 3 {
            gate.holds("H-type violation or radical mismatch", h.verdict);
        } else {
            gate.at_most("H-type defect", h.max_defect, tol.h_type);
        }
        Some(h)
    } else {
        None
    };
    let orbit = (on(Check::Orbit) && is_line).then(|| {
        let o = OrbitRecord { orbit_dim: generic_orbit_codim(&case, cfg.seed), expected: case.dim_z - 1 };
        gate.holds(&format!("generic orbit dimension {} ≠ {}", o.orbit_dim, o.expected), o.orbit_dim == o.expected);
        o
    });

    let wants_exact = on(Check::Exact) || on(Check::Radon);
    let mut exact = None;
    if wants_exact && is_line {
        if exact_eligible(&case) {
            let (r, ops) = exact_pipeline_with_ops(&case, 2)?;
            if on(Check::Exact) {
                let homogeneity_ok = r.homogeneity.iter().zip(&r.expected_homogeneity).all(|(a, b)| *a == Some(*b));
                let v = ExactVerdicts {
                    structure: r.structure,
                    sublaplacian: r.sublaplacian,
                    central_laplacian: r.central_laplacian,
                    adjoint: r.adjoint.iter().all(|&b| b),
                    homogeneity: r.homogeneity.clone(),
                    homogeneity_ok,
                    radon_d: r.radon.iter().all(|&b| b),
                    restriction: r.restriction.iter().all(|&b| b),
                    z_order: r.z_order.clone(),
                    passed: r.passed(),
                };
                gate.holds("structure identity", v.structure);
                gate.holds("sublaplacian identity", v.sublaplacian);
                gate.holds("central Laplacian identity", v.central_laplacian);
                gate.holds("formal self-adjointness", v.adjoint);
                gate.holds("homogeneity degrees", v.homogeneity_ok);
                gate.holds("exact Radon reduction", v.radon_d);
                gate.holds("exact restriction to the quotient", v.restriction);
                for &(j, b) in &v.z_order {
                    gate.holds(&format!("central order for j = {j}"), b.map_or(true, |b| b > j));
                }
                exact = Some(v);
            }
            if on(Check::Radon) {
                let q = get_quotient_for(id)?;
                let f = GaussianPoly::standard(case.dim_v, case.dim_z);
                let mut worst: f64 = 0.0;
                for d in &ops {
                    worst = worst.max(radon_commutation_residual(d, &q.zeta0, &f, &cfg.quad, mode)?.sup_abs);
                }
                gate.at_most("Radon commutation residual", worst, tol.radon);
                residuals.radon = Some(worst);
            }
        } else {
            skipped.push(format!("exact: dim 𝔫 = {} exceeds {EXACT_DIM_LIMIT}", case.dim_v + case.dim_z));
        }
    }

    let failures = gate.failures;
    Ok(CaseRecord {
        case: name,
        n: id.n,
        dim_v: case.dim_v,
        dim_z: case.dim_z,
        residuals,
        jacobian_pass_rate: jacobian,
        bidegrees: case.bidegrees.clone(),
        homogeneity: case.bidegrees.iter().map(|&(a, b)| a + 2 * b).collect(),
        bidegree_residual,
        h_type,
        orbit,
        exact,
        skipped,
        pass: failures.is_empty(),
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn global_checks(cfg: &Config, enabled: &BTreeSet<Check>) -> Result<Vec<GlobalRecord>> {
    let mut out = Vec::new();
    let mut push = |name: &str, value: f64, tolerance: f64| {
        out.push(GlobalRecord { name: name.into(), value, tolerance, pass: value <= tolerance });
    };
    if enabled.contains(&Check::Pfaffian) {
        push("pfaffian: Pf^2 = det", pfaffian_det_residual(10, 20, cfg.seed), cfg.tolerances.pfaffian);
        let eq = (2..=10).step_by(2).map(|n| pfaffian_equivariance_residual(n, 50, cfg.seed)).fold(0.0, f64::max);
        push("pfaffian: Pf(gMg^T) = det g Pf M", eq, cfg.tolerances.pfaffian);
    }
    if enabled.contains(&Check::Combinatorics) {
        let mut bad = 0usize;
        for n in 0..=cfg.e_n_max {
            for line in 4..=12u8 {
                let set = e_n_set(n, line)?;
                let m = n / 2;
                let mut pairs: Vec<(u32, u32)> = set.iter().map(|e| (e.total_j(), e.k)).collect();
                pairs.dedup();
                if pairs.len() != (n / 2 + 2) as usize || !pairs.contains(&(0, m + 1)) {
                    bad += 1;
                }
            }
        }
        push("E_n: cardinality and shared pair", bad as f64, 0.0);
    }
    if enabled.contains(&Check::Theta) {
        let eta = theta_map(4, &[1.0, 0.5, 4.0], cfg.line8_variant)?;
        let gap = eta.iter().zip([1.0, 0.25, 2.0]).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        push("theta: worked example", gap, 1e-15);
        let mut collisions = 0usize;
        let mut round_trip: f64 = 0.0;
        for line in 1..=12u8 {
            let _ = line_d(line)?;
            let r = theta_injectivity(line, cfg.theta_samples, cfg.seed, cfg.line8_variant)?;
            collisions += r.collisions;
            round_trip = round_trip.max(r.round_trip.unwrap_or(f64::INFINITY));
        }
        push("theta: injectivity collisions", collisions as f64, 0.0);
        push("theta: inverse round trip", round_trip, 1e-12);
    }
    Ok(out)
}

/// Runs every enabled check on the selected cases.
pub fn run_suite(cfg: &Config) -> Result<VerificationReport> {
    cfg.validate()?;
    let start = Instant::now();
    let ids = cfg.selected_cases()?;
    let enabled = cfg.enabled();
    let mode = cfg.exec_mode();
    let run = || -> Result<(Vec<CaseRecord>, Vec<GlobalRecord>)> {
        let inner = if mode.is_parallel() { ExecMode::Auto } else { ExecMode::Sequential };
        let records: Result<Vec<CaseRecord>> =
            map_slice(inner, &ids, |&id| run_case(id, cfg, &enabled, inner)).into_iter().collect();
        Ok((records?, global_checks(cfg, &enabled)?))
    };
    let (cases, global) = with_pool(mode, run)?;
    let mut failures: Vec<String> = cases.iter().flat_map(|c| c.failures.iter().cloned()).collect();
    failures.extend(
        global.iter().filter(|g| !g.pass).map(|g| format!("{}: {:.3e} exceeds {:.1e}", g.name, g.value, g.tolerance)),
    );
    Ok(VerificationReport {
        schema: SCHEMA.into(),
        tool_version: TOOL_VERSION.into(),
        seed: cfg.seed,
        samples: cfg.samples,
        checks: enabled.into_iter().collect(),
        pass: failures.is_empty(),
        cases,
        global,
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(feature = "parallel")]
fn with_pool<T: Send>(mode: ExecMode, f: impl FnOnce() -> T + Send) -> T {
    if let ExecMode::Parallel { jobs } = mode {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            return pool.install(f);
        }
    }
    f()
}

#[cfg(not(feature = "parallel"))]
fn with_pool<T: Send>(_mode: ExecMode, f: impl FnOnce() -> T + Send) -> T {
    f()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(cases: &[&str], checks: &[Check]) -> Config {
        Config {
            cases: cases.iter().map(|s| s.to_string()).collect(),
            checks: checks.to_vec(),
            samples: 20,
            theta_samples: 200,
            ..Config::default()
        }
    }

    #[test]
    fn selectors() {
        let c = cfg(&["Table1-line3"], &[]);
        assert_eq!(c.selected_cases().unwrap(), vec![CaseId::line(3)]);
        let c = Config { n: Some(3), ..cfg(&["A1-SO", "T1-L3"], &[]) };
        let ids = c.selected_cases().unwrap();
        assert_eq!(ids.len(), 2);
        assert_eq!(ids[0].n, Some(3));
        assert!(cfg(&["A99"], &[]).selected_cases().is_err());
        assert_eq!(cfg(&["table1"], &[]).selected_cases().unwrap().len(), 16);
        let all3 = Config { n: Some(3), ..cfg(&["all"], &[]) }.selected_cases().unwrap();
        assert!(all3.contains(&CaseId::line(3)) && all3.iter().all(|c| c.n.map_or(true, |n| n == 3)));
    }

    #[test]
    fn single_line_report() {
        let r = run_suite(&cfg(&["Table1-line3"], &[Check::Group, Check::Exact, Check::Radon])).unwrap();
        assert_eq!(r.cases.len(), 1);
        assert!(r.pass, "{}", r.summary());
        assert!(r.cases[0].exact.as_ref().unwrap().passed);
    }

    #[test]
    fn zero_tolerance_lists_every_nonzero_residual() {
        let mut c = cfg(&["T1-L4"], &[Check::Group, Check::Infinitesimal]);
        c.tolerances.group = 0.0;
        c.tolerances.infinitesimal = 0.0;
        let r = run_suite(&c).unwrap();
        let res = &r.cases[0].residuals;
        let nonzero = [res.group, res.infinitesimal].iter().filter(|x| x.unwrap() > 0.0).count();
        assert!(nonzero > 0);
        assert_eq!(r.failures.len(), nonzero);
        assert!(!r.pass);
    }

    #[test]
    fn modes_give_identical_reports() {
        let mut c = cfg(&["A2", "T1-L10", "A1-O[n=4]"], &[]);
        c.jobs = Some(1);
        let a = run_suite(&c).unwrap().without_timing().to_json();
        c.jobs = Some(3);
        let b = run_suite(&c).unwrap().without_timing().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn invalid_config_is_rejected() {
        assert!(Config::from_json(r#"{"samples": 0}"#).is_err());
        assert!(Config::from_json(r#"{"bogus": 1}"#).is_err());
        let c = Config::from_json(r#"{"quad": {"order": 20}, "checks": ["group", "h-type"]}"#).unwrap();
        assert_eq!(c.quad.order, 20);
        assert_eq!(c.checks, vec![Check::Group, Check::HType]);
    }
}
