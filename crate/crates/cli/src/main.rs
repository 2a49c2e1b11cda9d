use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rectsym_bench::{check, default_instances, median_time, naive, reduced};
use rectsym_core::coefficients::{CoefficientQuery, CoefficientValue, Engine, Family, Method};
use rectsym_core::partitions::Partition;
use rectsym_core::symmetries::{
    execute_reduction, reduce_kronecker, reduce_plethysm, verify_rule, ReductionReport, ReductionStep, RuleId,
    RuleReport, SweepBounds,
};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_MALFORMED: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

/// Littlewood–Richardson, Kronecker, plethysm and Kostka–Foulkes
/// coefficients, their rectangle symmetries, and weight reduction.
#[derive(Parser)]
#[command(name = "rectsym", version)]
struct Cli {
    /// Worker threads for sweeps (defaults to the number of CPUs).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one coefficient.
    Compute(ComputeArgs),
    /// Check one identity (or `all`) exhaustively within bounds.
    Verify(VerifyArgs),
    /// Plan a weight reduction.
    Reduce(ReduceArgs),
    /// Time naive versus reduced computation on the built-in instances.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Lr,
    Kronecker,
    Plethysm,
    KostkaFoulkes,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Lr => Family::Lr,
            FamilyArg::Kronecker => Family::Kronecker,
            FamilyArg::Plethysm => Family::Plethysm,
            FamilyArg::KostkaFoulkes => Family::KostkaFoulkes,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceFamily {
    Kronecker,
    Plethysm,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum MethodArg {
    #[default]
    Main,
    Oracle,
}

#[derive(Args)]
struct Indices {
    /// Comma-separated parts; `0` is the empty partition.
    #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
    lambda: Partition,
    #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
    mu: Partition,
    /// Not used by kostka-foulkes.
    #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
    nu: Option<Partition>,
}

#[derive(Args)]
struct ComputeArgs {
    family: FamilyArg,
    #[command(flatten)]
    indices: Indices,
    #[arg(long, value_enum, default_value_t = MethodArg::Main)]
    method: MethodArg,
    /// Run both the main route and the oracle and require agreement.
    #[arg(long)]
    check: bool,
    /// Number of variables for kostka-foulkes (defaults to the longer index).
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// A rule id such as `kron-box`, or `all`.
    rule: String,
    #[arg(long, default_value_t = 6)]
    max_weight: usize,
    /// Upper bounds `l,m,n` for box parameters.
    #[arg(long = "box", visible_alias = "boxes", value_parser = parse_box, default_value = "3,3,3")]
    max_box: (u32, u32, u32),
    /// Translations range over `-k..=k`.
    #[arg(long, default_value_t = 2)]
    k: i64,
}

#[derive(Args)]
struct ReduceArgs {
    family: ReduceFamily,
    #[command(flatten)]
    indices: Indices,
    /// Compute both coefficients and require equality.
    #[arg(long)]
    execute: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Timed repetitions per path.
    #[arg(long, default_value_t = 5)]
    reps: usize,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_box(s: &str) -> Result<(u32, u32, u32), String> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [l, m, n] => Ok((l, m, n)),
        _ => Err(format!("expected three comma-separated bounds, got {s:?}")),
    }
}

/// Failure carrying the exit code it should produce.
#[derive(Debug)]
struct Exit(u8, String);

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.1)
    }
}

impl std::error::Error for Exit {}

fn fail(code: u8, msg: impl Into<String>) -> anyhow::Error {
    Exit(code, msg.into()).into()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j.max(1));
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_MALFORMED);
        }
    };
    let outcome = pool.install(|| run(&cli));
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = e.downcast_ref::<Exit>().map_or(EXIT_MALFORMED, |x| x.0);
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    match &cli.command {
        Command::Compute(a) => compute(a, cli.json),
        Command::Verify(a) => verify(a, cli.json),
        Command::Reduce(a) => reduce(a, cli.json),
        Command::Bench(a) => bench(a, cli.json),
    }
}

fn indices_for(family: Family, ix: &Indices) -> anyhow::Result<Vec<Partition>> {
    let mut out = vec![ix.lambda.clone(), ix.mu.clone()];
    match (family, &ix.nu) {
        (Family::KostkaFoulkes, None) => {}
        (Family::KostkaFoulkes, Some(_)) => bail!("kostka-foulkes takes only --lambda and --mu"),
        (_, Some(nu)) => out.push(nu.clone()),
        (_, None) => bail!("{family} needs --nu"),
    }
    Ok(out)
}

#[derive(Serialize)]
struct ComputeOutput {
    family: Family,
    indices: Vec<Partition>,
    method: &'static str,
    value: String,
}

fn compute(a: &ComputeArgs, json: bool) -> anyhow::Result<()> {
    let family = Family::from(a.family);
    let indices = indices_for(family, &a.indices)?;
    let mut engine = Engine::new();
    let run = |engine: &mut Engine, method: Method| -> anyhow::Result<CoefficientValue> {
        if family == Family::KostkaFoulkes && method == Method::Main {
            if let Some(n) = a.n {
                return Ok(CoefficientValue::Polynomial(engine.kostka_foulkes_at(&indices[0], &indices[1], n)?));
            }
        }
        let q = CoefficientQuery::new(family, indices.clone(), method)?;
        Ok(engine.compute(&q)?)
    };
    let method = match a.method {
        MethodArg::Main => Method::Main,
        MethodArg::Oracle => Method::Oracle,
    };
    let value = run(&mut engine, method)?;
    if a.check {
        let other = if method == Method::Main { Method::Oracle } else { Method::Main };
        let second = run(&mut engine, other)?;
        if second != value {
            return Err(fail(
                EXIT_MISMATCH,
                format!("main route and oracle disagree: {value} versus {second}"),
            ));
        }
    }
    if json {
        let out = ComputeOutput {
            family,
            indices,
            method: if a.check {
                "checked"
            } else if method == Method::Main {
                "main"
            } else {
                "oracle"
            },
            value: value.to_string(),
        };
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        println!("{value}");
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyOutput {
    bounds: SweepBounds,
    passed: bool,
    rules: Vec<RuleReport>,
}

fn verify(a: &VerifyArgs, json: bool) -> anyhow::Result<()> {
    let rules: Vec<RuleId> = if a.rule == "all" {
        RuleId::ALL.to_vec()
    } else {
        vec![a.rule.parse::<RuleId>().map_err(|_| {
            let ids: Vec<_> = RuleId::ALL.iter().map(|r| r.name()).collect();
            fail(EXIT_MALFORMED, format!("unknown rule {:?}; expected `all` or one of {}", a.rule, ids.join(", ")))
        })?]
    };
    if a.k < 0 {
        return Err(fail(EXIT_MALFORMED, "--k must be non-negative"));
    }
    let bounds = SweepBounds {
        max_weight: a.max_weight,
        max_box: a.max_box,
        max_shift: a.k,
    };
    let mut reports = Vec::new();
    for rule in rules {
        let start = Instant::now();
        let report = verify_rule(rule, &bounds).with_context(|| format!("sweeping {rule}"))?;
        if !json {
            println!(
                "{:<22} checked {:>7} (transformed {:>7}, vanishing {:>7}), outside hypotheses {:>7}, counterexamples {}  [{:.2?}]",
                rule.name(),
                report.checked,
                report.transformed,
                report.vanishing,
                report.outside_hypotheses,
                report.counterexamples.len(),
                start.elapsed()
            );
            for c in &report.counterexamples {
                let image = match &c.image {
                    Some(img) => tuple(img),
                    None => "vanishes".to_string(),
                };
                println!("  counterexample {}: {} -> {}: {} != {}", c.rule, tuple(&c.indices), image, c.value, c.image_value);
            }
        }
        reports.push(report);
    }
    let passed = reports.iter().all(RuleReport::passed);
    if json {
        let out = VerifyOutput {
            bounds,
            passed,
            rules: reports,
        };
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else if passed {
        println!("no counterexamples");
    }
    if passed {
        Ok(())
    } else {
        Err(fail(EXIT_COUNTEREXAMPLE, "counterexamples found"))
    }
}

fn tuple(ix: &[Partition]) -> String {
    ix.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct ReduceOutput<'a> {
    #[serde(flatten)]
    report: &'a ReductionReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    values: Option<[String; 2]>,
}

fn describe_step(step: &ReductionStep) -> String {
    const NAMES: [&str; 3] = ["lambda", "mu", "nu"];
    match step {
        ReductionStep::Conjugate { arguments } => {
            let names: Vec<_> = arguments.iter().map(|&i| NAMES[i]).collect();
            format!("conjugate {}", names.join(","))
        }
        ReductionStep::Complement { rule } => format!("complement {rule}"),
    }
}

fn reduce(a: &ReduceArgs, json: bool) -> anyhow::Result<()> {
    let Some(nu) = &a.indices.nu else {
        return Err(fail(EXIT_MALFORMED, "reduce needs --nu"));
    };
    let (lam, mu) = (&a.indices.lambda, &a.indices.mu);
    let report = match a.family {
        ReduceFamily::Kronecker => reduce_kronecker(lam, mu, nu)?,
        ReduceFamily::Plethysm => reduce_plethysm(lam, mu, nu)?,
    };
    let values = if a.execute {
        let (before, after) = execute_reduction(&mut Engine::new(), &report)?;
        if before != after {
            return Err(fail(
                EXIT_MISMATCH,
                format!("reduction changed the coefficient: {before} versus {after}"),
            ));
        }
        Some([before.to_string(), after.to_string()])
    } else {
        None
    };
    if json {
        let out = ReduceOutput {
            report: &report,
            values,
        };
        println!("{}", serde_json::to_string_pretty(&out)?);
        return Ok(());
    }
    println!("original: {}  (weight {})", tuple(&report.original), report.weight_before);
    println!("candidates:");
    for c in &report.candidates {
        let conj = if c.conjugated.is_empty() {
            "none".to_string()
        } else {
            describe_step(&ReductionStep::Conjugate {
                arguments: c.conjugated.clone(),
            })
        };
        let w = c.weight.map_or("vanishes".to_string(), |w| format!("weight {w}"));
        println!("  {conj:<24} {:<36} {w}", c.rule.to_string());
    }
    if report.is_identity() {
        println!("no profitable reduction");
    } else {
        let steps: Vec<_> = report.chain.iter().map(describe_step).collect();
        println!("chain: {}", steps.join("; "));
        match &report.reduced {
            Some(ix) => println!("reduced: {}", tuple(ix)),
            None => println!("reduced: coefficient vanishes"),
        }
    }
    println!("weight {} -> {}", report.weight_before, report.weight_after);
    if let Some([before, after]) = values {
        println!("value {before} = {after}");
    }
    Ok(())
}

#[derive(Serialize)]
struct BenchRow {
    instance: String,
    weight_before: usize,
    weight_after: usize,
    value: String,
    naive_ms: f64,
    reduced_ms: f64,
}

fn bench(a: &BenchArgs, json: bool) -> anyhow::Result<()> {
    let mut rows = Vec::new();
    for inst in default_instances() {
        let (before, after) = check(&inst)?;
        if before != after {
            return Err(fail(
                EXIT_MISMATCH,
                format!("{}: reduction changed the coefficient: {before} versus {after}", inst.name),
            ));
        }
        let report = inst.plan()?;
        let t_naive = median_time(a.reps, || naive(&inst));
        let t_reduced = median_time(a.reps, || reduced(&inst));
        rows.push(BenchRow {
            instance: inst.name.clone(),
            weight_before: report.weight_before,
            weight_after: report.weight_after,
            value: before.to_string(),
            naive_ms: t_naive.as_secs_f64() * 1e3,
            reduced_ms: t_reduced.as_secs_f64() * 1e3,
        });
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&rows)?);
        return Ok(());
    }
    println!(
        "{:<28} {:>6} {:>8} {:>6} {:>12} {:>12}",
        "instance", "weight", "reduced", "value", "naive ms", "reduced ms"
    );
    for r in rows {
        println!(
            "{:<28} {:>6} {:>8} {:>6} {:>12.3} {:>12.3}",
            r.instance, r.weight_before, r.weight_after, r.value, r.naive_ms, r.reduced_ms
        );
    }
    Ok(())
}
