//! Acceptance criteria 1–11. Prints one line per criterion and exits non-zero
//! if any of them fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use nilpair_core::invariant_engine::{
    generic_orbit_codim, h_type_check, infinitesimal_residual, invariance_residual, jacobian_pass_rate,
    pfaffian_det_residual, pfaffian_equivariance_residual,
};
use nilpair_core::pair_catalog::{get_case, get_quotient, CaseDescriptor, CaseId, CaseKind};
use nilpair_core::par::ExecMode;
use nilpair_core::radon_spectrum::{e_n_set, radon_commutation_residual, theta_injectivity, theta_map, GaussianPoly, Line8Variant, QuadSpec};
use nilpair_core::symm_calculus::pipeline::{exact_pipeline_with_ops, ExactReport, EXACT_DIM_LIMIT};
use nilpair_core::symm_calculus::DiffOp;
use nilpair_core::verify::{run_suite, Config, DEFAULT_SEED};

const SAMPLES: usize = 100;
const SEED: u64 = DEFAULT_SEED;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn cases(ids: &[CaseId]) -> Vec<CaseDescriptor> {
    ids.iter().map(|&id| get_case(id).expect("catalog case")).collect()
}

fn table_lines() -> Vec<CaseDescriptor> {
    cases(&CaseId::default_suite().into_iter().filter(|c| c.kind.line().is_some()).collect::<Vec<_>>())
}

/// The smallest legal n and n + 1 for parametrized kinds, every variant, and
/// every table line.
fn covers_required_parameters(ids: &[CaseId]) -> Result<(), String> {
    let have: BTreeSet<CaseId> = ids.iter().copied().collect();
    let kinds = CaseKind::APPENDIX.into_iter().chain((1..=12).map(CaseKind::Line));
    for k in kinds {
        let wanted: Vec<Option<usize>> = match k.min_n() {
            Some(m) => vec![Some(m), Some(m + 1)],
            None => vec![None],
        };
        for n in wanted {
            let id = CaseId::new(k, n).map_err(|e| e.to_string())?;
            if !have.contains(&id) {
                return Err(format!("{id} missing"));
            }
        }
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let ids = CaseId::default_suite();
    if let Err(e) = covers_required_parameters(&ids) {
        return outcome(false, e);
    }
    let start = Instant::now();
    let mut worst_group: f64 = 0.0;
    let mut worst_inf: f64 = 0.0;
    let mut bad = Vec::new();
    for c in cases(&ids) {
        let g = invariance_residual(&c, SAMPLES, SEED, ExecMode::Auto);
        let i = infinitesimal_residual(&c, SAMPLES, SEED, ExecMode::Auto);
        if !(g <= 1e-8 && i <= 1e-6) {
            bad.push(format!("{} ({g:.1e}, {i:.1e})", c.id));
        }
        worst_group = worst_group.max(g);
        worst_inf = worst_inf.max(i);
    }
    let t = start.elapsed();
    outcome(
        bad.is_empty() && t <= Duration::from_secs(60),
        format!("{} cases, group {worst_group:.1e}, infinitesimal {worst_inf:.1e}, {:.1} s {bad:?}", ids.len(), t.as_secs_f64()),
    )
}

fn criterion_2() -> Outcome {
    let mut worst: f64 = 1.0;
    let mut bad = Vec::new();
    for c in cases(&CaseId::default_suite()) {
        let p = jacobian_pass_rate(&c, SAMPLES, SEED, ExecMode::Auto);
        if p < 0.95 {
            bad.push(c.id.to_string());
        }
        worst = worst.min(p);
    }
    outcome(bad.is_empty(), format!("lowest full-rank fraction {worst:.2} {bad:?}"))
}

fn criterion_3() -> Outcome {
    let radicals = [(10u8, 1usize), (11, 2), (12, 1)];
    let mut defect: f64 = 0.0;
    let mut bad = Vec::new();
    for c in table_lines() {
        let line = c.kind().line().unwrap();
        let h = h_type_check(&c, SAMPLES, SEED).expect("h-type check");
        match radicals.iter().find(|(l, _)| *l == line) {
            Some(&(_, r)) => {
                if h.radical != Some(r) {
                    bad.push(format!("{}: radical {:?}, expected {r}", c.id, h.radical));
                }
            }
            None => {
                defect = defect.max(h.max_defect);
                if h.max_defect > 1e-10 {
                    bad.push(format!("{}: defect {:.1e}", c.id, h.max_defect));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("blocks 1-2 defect {defect:.1e}, radicals (1, 2, 1) {bad:?}"))
}

fn criterion_4() -> Outcome {
    let mut bad = Vec::new();
    let lines = table_lines();
    for c in &lines {
        for k in 0..5 {
            let dim = generic_orbit_codim(c, SEED + k);
            if dim != c.dim_z - 1 {
                bad.push(format!("{}: {dim}", c.id));
            }
        }
    }
    outcome(bad.is_empty(), format!("{} cases, 5 generic points each {bad:?}", lines.len()))
}

struct Exact {
    case: CaseDescriptor,
    report: ExactReport,
    ops: Vec<DiffOp>,
}

fn exact_runs() -> Vec<Exact> {
    table_lines()
        .into_iter()
        .filter(|c| c.dim_v + c.dim_z <= EXACT_DIM_LIMIT)
        .map(|case| {
            let (report, ops) = exact_pipeline_with_ops(&case, 2).expect("exact pipeline");
            Exact { case, report, ops }
        })
        .collect()
}

fn criterion_5(runs: &[Exact]) -> Outcome {
    let bad: Vec<String> = runs.iter().filter(|r| !r.report.structure).map(|r| r.case.id.to_string()).collect();
    let lines: BTreeSet<u8> = runs.iter().filter_map(|r| r.case.kind().line()).collect();
    outcome(bad.is_empty() && lines.len() == 12, format!("{} exact cases over {} lines {bad:?}", runs.len(), lines.len()))
}

/// Operator degree for a generator of bidegree (a, b) in a given block.
fn expected_degree(block: Option<u8>, (a, b): (u32, u32)) -> i64 {
    match (a, b) {
        (2, 0) => 2,
        (0, 2) => 4,
        (_, 1) if block == Some(3) => 3,
        (_, 1) => 4,
        _ => (a + 2 * b) as i64,
    }
}

fn criterion_6(runs: &[Exact]) -> Outcome {
    let mut bad = Vec::new();
    let mut adjoint_checks = 0;
    for r in runs {
        let rep = &r.report;
        if !rep.sublaplacian {
            bad.push(format!("{}: sublaplacian", r.case.id));
        }
        if rep.adjoint.iter().any(|&b| !b) {
            bad.push(format!("{}: adjoint", r.case.id));
        }
        adjoint_checks += rep.adjoint.len();
        for (j, (&bd, got)) in r.case.bidegrees.iter().zip(&rep.homogeneity).enumerate() {
            let want = expected_degree(r.case.block, bd);
            if *got != Some(want) {
                bad.push(format!("{}: generator {j} degree {got:?}, expected {want}", r.case.id));
            }
        }
    }
    outcome(bad.is_empty(), format!("{adjoint_checks} self-adjointness identities {bad:?}"))
}

fn criterion_7(runs: &[Exact]) -> Outcome {
    let quad = QuadSpec::default();
    let mut bad = Vec::new();
    let mut worst: f64 = 0.0;
    let mut tested = 0;
    for r in runs {
        if r.report.radon.iter().any(|&b| !b) {
            bad.push(format!("{}: exact reduction", r.case.id));
        }
        let line = r.case.kind().line().unwrap();
        let q = get_quotient(line).expect("quotient");
        let f = GaussianPoly::standard(r.case.dim_v, r.case.dim_z);
        for (j, &(a, b)) in r.case.bidegrees.iter().enumerate() {
            let named = (a, b) == (2, 0) || (a, b) == (0, 2) || (a > 0 && b == 1);
            if !named {
                continue;
            }
            let res = radon_commutation_residual(&r.ops[j], &q.zeta0, &f, &quad, ExecMode::Auto).expect("quadrature");
            tested += 1;
            worst = worst.max(res.sup_abs);
            if res.sup_abs > 1e-6 {
                bad.push(format!("{} generator {j}: {:.1e}", r.case.id, res.sup_abs));
            }
        }
    }
    outcome(bad.is_empty(), format!("{} exact cases, {tested} quadrature identities, max {worst:.1e} {bad:?}", runs.len()))
}

fn criterion_8(runs: &[Exact]) -> Outcome {
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for r in runs.iter().filter(|r| matches!(r.case.kind().line(), Some(4) | Some(10))) {
        if r.report.z_order.len() != 2 {
            bad.push(format!("{}: no mixed generator", r.case.id));
        }
        for &(j, b) in &r.report.z_order {
            seen.push(format!("{} j={j}: {}", r.case.id, b.map_or("zero".into(), |b| b.to_string())));
            if !b.map_or(true, |b| b > j) {
                bad.push(format!("{} j={j}", r.case.id));
            }
        }
    }
    outcome(bad.is_empty() && seen.len() == 4, format!("{} {bad:?}", seen.join(", ")))
}

fn criterion_9() -> Outcome {
    let det = pfaffian_det_residual(10, 20, SEED);
    let eq = (2..=10).step_by(2).map(|n| pfaffian_equivariance_residual(n, 50, SEED)).fold(0.0, f64::max);
    let bordered: Vec<CaseId> = CaseId::default_suite()
        .into_iter()
        .filter(|c| matches!(c.kind, CaseKind::A1So | CaseKind::A1O | CaseKind::A45U | CaseKind::A45Su))
        .collect();
    let mut worst: f64 = 0.0;
    for c in cases(&bordered) {
        worst = worst.max(invariance_residual(&c, SAMPLES, SEED, ExecMode::Auto));
    }
    outcome(
        det <= 1e-8 && eq <= 1e-8 && worst <= 1e-8,
        format!("Pf^2 = det {det:.1e}, equivariance {eq:.1e}, bordered cases ({}) {worst:.1e}", bordered.len()),
    )
}

fn criterion_10() -> Outcome {
    let mut bad = Vec::new();
    for n in 0..=40u32 {
        let m = n / 2;
        for line in 4..=12u8 {
            let set = e_n_set(n, line).expect("valid line");
            let pairs: BTreeSet<(u32, u32)> = set.iter().map(|e| (e.total_j(), e.k)).collect();
            let distinct = pairs.len() == set.len() || line == 11;
            if pairs.len() != (m + 2) as usize || !pairs.contains(&(0, m + 1)) || !distinct {
                bad.push(format!("n={n} line {line}"));
            }
        }
    }
    let eta = theta_map(4, &[1.0, 0.5, 4.0], Line8Variant::default()).expect("theta");
    let example = eta == vec![1.0, 0.25, 2.0];
    let mut collisions = 0;
    for line in 1..=12u8 {
        let r = theta_injectivity(line, 10_000, SEED, Line8Variant::default()).expect("injectivity");
        collisions += r.collisions;
        if !r.injective() {
            bad.push(format!("theta line {line}"));
        }
    }
    outcome(
        bad.is_empty() && example,
        format!("E_n for n <= 40, worked example {eta:?}, {collisions} collisions over 12 x 10^4 tuples {bad:?}"),
    )
}

fn criterion_11() -> Outcome {
    let cfg = Config::default();
    let mut times = Vec::new();
    let mut reports = Vec::new();
    for _ in 0..2 {
        let start = Instant::now();
        let r = run_suite(&cfg).expect("default suite");
        times.push(start.elapsed());
        reports.push(r);
    }
    let same = reports[0].without_timing().to_json() == reports[1].without_timing().to_json();
    let pass = reports.iter().all(|r| r.pass) && same && times.iter().all(|t| *t <= Duration::from_secs(120));
    outcome(
        pass,
        format!(
            "{} cases, verdicts {:?}, runs {:.1} s and {:.1} s, identical reports: {same}",
            reports[0].cases.len(),
            reports.iter().map(|r| r.pass).collect::<Vec<_>>(),
            times[0].as_secs_f64(),
            times[1].as_secs_f64()
        ),
    )
}

fn main() {
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let wanted = |k: usize| only.is_empty() || only.contains(&k);
    let needs_exact = (5..=8).any(wanted);
    let exact = if needs_exact { exact_runs() } else { Vec::new() };
    let criteria: Vec<(usize, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, Box::new(criterion_1)),
        (2, Box::new(criterion_2)),
        (3, Box::new(criterion_3)),
        (4, Box::new(criterion_4)),
        (5, Box::new(|| criterion_5(&exact))),
        (6, Box::new(|| criterion_6(&exact))),
        (7, Box::new(|| criterion_7(&exact))),
        (8, Box::new(|| criterion_8(&exact))),
        (9, Box::new(criterion_9)),
        (10, Box::new(criterion_10)),
        (11, Box::new(criterion_11)),
    ];
    let mut failed = 0;
    for (k, run) in criteria.iter().filter(|(k, _)| wanted(*k)) {
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!("criterion {k:>2}: {} {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
