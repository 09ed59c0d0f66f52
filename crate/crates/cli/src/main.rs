use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use nilpair_core::error::Error;
use nilpair_core::pair_catalog::{catalog, get_case, get_quotient, CaseId};
use nilpair_core::radon_spectrum::{GaussianPoly, QuadSpec, RadonTransform};
use nilpair_core::verify::{run_suite, Config};

const SEED_ENV: &str = "NILPAIR_SEED";

#[derive(Parser)]
#[command(name = "nilpair", version, about = "Nilpotent Gelfand pair verification suite")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite.
    Verify(VerifyArgs),
    /// Print the case catalog.
    Catalog {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Radon transform of the standard Gaussian against its closed form.
    RadonDemo(DemoArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    /// Case id or group (all, appendix, table1); repeatable or comma separated.
    #[arg(long = "case", value_delimiter = ',')]
    cases: Vec<String>,
    /// Parameter for every selected case that takes one.
    #[arg(long)]
    n: Option<usize>,
    /// Random samples per check (default 100).
    #[arg(long)]
    samples: Option<usize>,
    /// Group invariance tolerance (default 1e-8).
    #[arg(long)]
    tol_group: Option<f64>,
    /// Infinitesimal invariance tolerance (default 1e-6).
    #[arg(long)]
    tol_inf: Option<f64>,
    /// Overridden by NILPAIR_SEED when set.
    #[arg(long)]
    seed: Option<u64>,
    /// group, infinitesimal, jacobian, bidegree, restriction, h-type, orbit,
    /// exact, radon, pfaffian, theta, combinatorics.
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Only the exact symbolic identities.
    #[arg(long, conflicts_with = "numeric")]
    exact: bool,
    /// Everything except the exact identities.
    #[arg(long)]
    numeric: bool,
    /// Worker threads; 1 runs sequentially.
    #[arg(long)]
    jobs: Option<usize>,
    /// JSON config; flags given on the command line take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Suppress the summary.
    #[arg(long, short)]
    quiet: bool,
}

#[derive(Args)]
struct DemoArgs {
    /// Table 1 line supplying dim v, dim z and the direction ζ0.
    #[arg(long, default_value_t = 10)]
    line: u8,
    #[arg(long, default_value_t = 40)]
    order: usize,
}

enum Failure {
    Check,
    Config(anyhow::Error),
    Runtime(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Config(_) | Error::UnknownCase(_) | Error::InvalidParameter { .. } => Failure::Config(e.into()),
            _ => Failure::Runtime(e.into()),
        }
    }
}

fn build_config(a: &VerifyArgs) -> Result<Config, Failure> {
    let mut cfg = match &a.config {
        Some(p) => {
            let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display())).map_err(Failure::Config)?;
            Config::from_json(&text)?
        }
        None => Config::default(),
    };
    if !a.cases.is_empty() {
        cfg.cases = a.cases.clone();
    }
    if a.n.is_some() {
        cfg.n = a.n;
    }
    if let Some(s) = a.samples {
        cfg.samples = s;
    }
    if let Some(t) = a.tol_group {
        cfg.tolerances.group = t;
    }
    if let Some(t) = a.tol_inf {
        cfg.tolerances.infinitesimal = t;
    }
    if let Some(s) = a.seed {
        cfg.seed = s;
    }
    if let Ok(s) = std::env::var(SEED_ENV) {
        cfg.seed = s.trim().parse().map_err(|_| Failure::Config(anyhow!("{SEED_ENV}=`{s}` is not an unsigned integer")))?;
    }
    if !a.checks.is_empty() {
        cfg.checks = a.checks.iter().map(|c| c.parse()).collect::<Result<_, Error>>()?;
    }
    if a.exact || a.numeric {
        let base = cfg.enabled();
        cfg.checks = base.into_iter().filter(|c| c.is_exact() == a.exact).collect();
        if cfg.checks.is_empty() {
            return Err(Failure::Config(anyhow!("no checks left to run")));
        }
    }
    if a.jobs.is_some() {
        cfg.jobs = a.jobs;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn verify(a: &VerifyArgs) -> Result<(), Failure> {
    let cfg = build_config(a)?;
    let report = run_suite(&cfg)?;
    if let Some(p) = &a.report {
        let mut json = report.to_json();
        json.push('\n');
        std::fs::write(p, json).with_context(|| format!("writing {}", p.display())).map_err(Failure::Runtime)?;
    }
    if !a.quiet {
        print!("{}", report.summary());
    }
    if report.pass {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn print_catalog(format: Format) -> Result<(), Failure> {
    let c = catalog()?;
    match format {
        Format::Text => print!("{}", c.to_text()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&c).map_err(|e| Failure::Runtime(e.into()))?),
    }
    Ok(())
}

fn radon_demo(a: &DemoArgs) -> Result<(), Failure> {
    if !(1..=12).contains(&a.line) {
        return Err(Error::UnknownCase(format!("line {}", a.line)).into());
    }
    let case = get_case(CaseId::line(a.line))?;
    let q = get_quotient(a.line)?;
    let (dv, dz) = (case.dim_v, case.dim_z);
    let f = GaussianPoly::standard(dv, dz);
    let quad = QuadSpec { order: a.order, ..QuadSpec::default() };
    quad.validate()?;
    let pointwise = RadonTransform::new(&f, &q.zeta0, &quad)?;
    let moments = f.radon(&q.zeta0, &quad)?;
    let norm: f64 = q.zeta0.iter().map(|x| x * x).sum::<f64>().sqrt();
    let scale = std::f64::consts::PI.powf((dz as f64 - 1.0) / 2.0) / norm;
    println!("line {}: F = exp(-|v|^2 - |z|^2) on R^{dv} x R^{dz}, zeta0 = {:?}", a.line, q.zeta0);
    println!("closed form: RF(v, t) = {scale:.12} exp(-|v|^2 - t^2/|zeta0|^2)");
    println!("{:>6} {:>6} {:>20} {:>10} {:>10}", "|v|", "t", "closed form", "pointwise", "moments");
    let mut worst = 0.0f64;
    for (r, t) in [(0.0, 0.0), (0.3, 0.5), (1.0, -1.2), (0.7, 2.0), (1.5, 0.25)] {
        let mut v = vec![0.0; dv];
        v[0] = r;
        let expect = scale * (-(r * r) - t * t / (norm * norm)).exp();
        let p = (pointwise.eval(&v, t).re - expect).abs();
        let mut vt = v.clone();
        vt.push(t);
        let m = (moments.eval_at(&vt).re - expect).abs();
        worst = worst.max(p).max(m);
        println!("{r:>6.2} {t:>6.2} {expect:>20.12e} {p:>10.1e} {m:>10.1e}");
    }
    let tol = nilpair_core::tolerances::QUADRATURE;
    println!("max error {worst:.2e} (tolerance {tol:.0e}): {}", if worst <= tol { "PASS" } else { "FAIL" });
    if worst <= tol {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.command {
        Command::Verify(a) => verify(a),
        Command::Catalog { format } => print_catalog(*format),
        Command::RadonDemo(a) => radon_demo(a),
    };
    match out {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Config(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
