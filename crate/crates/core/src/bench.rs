//! Benchmark runner: times Gröbner basis computations for each problem and
//! engine, and checks that all engines agree on the reduced basis.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::corpus::ProblemSpec;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::groebner::{reduced_groebner_basis, GroebnerConfig, Mode};
use crate::ordering::{MonomialOrder, OrderingSpec};
use crate::parse::format_polynomial;
use crate::poly::Polynomial;
use crate::reduction::Strategy;

pub const CSV_HEADER: &str = "problem,engine,ordering,mean_ns,median_ns,basis_size,steps";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub runs: usize,
    pub warmup: usize,
    pub order: MonomialOrder,
    pub mode: Mode,
    pub engines: Vec<Engine>,
    pub strategy: Strategy,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            runs: 1000,
            warmup: 3,
            order: MonomialOrder::GrLex,
            mode: Mode::Improved,
            engines: Engine::all().to_vec(),
            strategy: Strategy::FirstDivisor,
        }
    }
}

impl BenchConfig {
    /// Applies the `BENCH_RUNS` environment override.
    pub fn with_env_overrides(mut self) -> Result<Self> {
        if let Ok(v) = std::env::var("BENCH_RUNS") {
            self.runs = v
                .trim()
                .parse()
                .map_err(|_| Error::Bench(format!("invalid BENCH_RUNS `{v}`")))?;
        }
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        if self.runs == 0 {
            return Err(Error::Bench("runs must be at least 1".into()));
        }
        if self.engines.is_empty() {
            return Err(Error::Bench("no engines selected".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRecord {
    pub problem: u32,
    pub engine: Engine,
    pub ordering: MonomialOrder,
    pub mean_ns: u128,
    pub median_ns: u128,
    pub basis_size: usize,
    /// Reduction steps of one run, as counted by the engine.
    pub steps: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchFailure {
    pub problem: u32,
    pub engine: Engine,
    pub message: String,
}

#[derive(Clone, Debug, Default)]
pub struct BenchReport {
    pub records: Vec<BenchRecord>,
    pub failures: Vec<BenchFailure>,
}

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.records {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.problem,
                r.engine.label(),
                r.ordering,
                r.mean_ns,
                r.median_ns,
                r.basis_size,
                r.steps
            );
        }
        out
    }

    /// Aligned table with one row per problem and mean times in
    /// microseconds per engine, plus the fastest engine.
    pub fn to_table(&self) -> String {
        let mut engines: Vec<&'static str> = Vec::new();
        for r in &self.records {
            if !engines.contains(&r.engine.label()) {
                engines.push(r.engine.label());
            }
        }
        let mut problems: Vec<u32> = self.records.iter().map(|r| r.problem).collect();
        problems.dedup();

        let mut out = format!("{:>7} {:>5}", "problem", "size");
        for e in &engines {
            let _ = write!(out, " {:>12}", format!("{e} (us)"));
        }
        out.push_str("  fastest\n");
        for p in problems {
            let rows: Vec<&BenchRecord> = self.records.iter().filter(|r| r.problem == p).collect();
            let _ = write!(out, "{:>7} {:>5}", p, rows[0].basis_size);
            for e in &engines {
                match rows.iter().find(|r| r.engine.label() == *e) {
                    Some(r) => {
                        let _ = write!(out, " {:>12.1}", r.mean_ns as f64 / 1000.0);
                    }
                    None => {
                        let _ = write!(out, " {:>12}", "-");
                    }
                }
            }
            let fastest = rows
                .iter()
                .min_by_key(|r| r.mean_ns)
                .map_or("-", |r| r.engine.label());
            let _ = writeln!(out, "  {fastest}");
        }
        for f in &self.failures {
            let _ = writeln!(
                out,
                "problem {} {}: {}",
                f.problem,
                f.engine.label(),
                f.message
            );
        }
        out
    }
}

fn median(sorted: &[Duration]) -> Duration {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2
    }
}

/// Runs every engine on every problem. Engine errors are recorded as
/// failures; disagreement between engines on a reduced basis aborts with
/// an error naming the problem and both bases.
pub fn run_bench(config: &BenchConfig, problems: &[ProblemSpec]) -> Result<BenchReport> {
    config.validate()?;
    let mut report = BenchReport::default();
    for problem in problems {
        let generators = problem.polynomials()?;
        let ord = OrderingSpec::new(config.order, problem.ring.clone());
        let mut reference: Option<(Engine, Vec<Polynomial>)> = None;

        for &engine in &config.engines {
            let gb_config = GroebnerConfig {
                mode: config.mode,
                engine,
                strategy: config.strategy,
                track_cofactors: false,
            };
            let run = || reduced_groebner_basis(&generators, &ord, &gb_config);
            let outcome = (|| {
                for _ in 0..config.warmup {
                    run()?;
                }
                let mut times = Vec::with_capacity(config.runs);
                let mut last = None;
                for _ in 0..config.runs {
                    let start = Instant::now();
                    let r = run()?;
                    times.push(start.elapsed());
                    last = Some(r);
                }
                Ok::<_, Error>((times, last.expect("runs >= 1")))
            })();
            let (mut times, result) = match outcome {
                Ok(v) => v,
                Err(e) => {
                    report.failures.push(BenchFailure {
                        problem: problem.id,
                        engine,
                        message: e.to_string(),
                    });
                    continue;
                }
            };
            times.sort();
            let total: Duration = times.iter().sum();
            let basis = result.basis.generators().to_vec();

            match &reference {
                None => reference = Some((engine, basis.clone())),
                Some((ref_engine, ref_basis)) if *ref_basis != basis => {
                    let show = |b: &[Polynomial]| {
                        b.iter()
                            .map(|p| format_polynomial(p, &problem.ring, config.order))
                            .collect::<Vec<_>>()
                            .join(", ")
                    };
                    return Err(Error::Bench(format!(
                        "problem {}: {} and {} computed different reduced bases\n  {}: {}\n  {}: {}",
                        problem.id,
                        ref_engine.label(),
                        engine.label(),
                        ref_engine.label(),
                        show(ref_basis),
                        engine.label(),
                        show(&basis)
                    )));
                }
                Some(_) => {}
            }

            report.records.push(BenchRecord {
                problem: problem.id,
                engine,
                ordering: config.order,
                mean_ns: total.as_nanos() / times.len() as u128,
                median_ns: median(&times).as_nanos(),
                basis_size: basis.len(),
                steps: result.stats.reduction_steps,
            });
        }
    }
    Ok(report)
}
