use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use redmachine::bench::{run_bench, BenchConfig};
use redmachine::corpus::{corpus, problem};
use redmachine::machine::{run_cached_machine, run_machine};
use redmachine::prelude::*;

const GRAMMAR: &str = "\
Polynomial grammar:
  poly     := term (('+' | '-') term)*
  term     := [rational] ['*'] factor ('*' factor)* | rational
  factor   := var ['^' nat]
  rational := int ['/' posint]
Whitespace is ignored; `2x` and `2*x` are equivalent.

Basis file format: a `vars: x,y,z` line, then one generator per line.
`#` starts a comment.";

#[derive(Parser)]
#[command(
    name = "redmachine",
    version,
    about = "Polynomial reduction and Gröbner bases over Q"
)]
#[command(after_help = GRAMMAR)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a polynomial to normal form modulo a basis.
    Reduce {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "grlex")]
        order: MonomialOrder,
        #[arg(long, default_value = "first")]
        strategy: Strategy,
        /// classic, machine, cached, parallel or parallel:N
        #[arg(long, default_value = "classic")]
        engine: Engine,
        /// Print the reduction threads (machine) or graph (cached) to stderr.
        #[arg(long)]
        trace: bool,
        poly: String,
    },
    /// Compute the reduced Gröbner basis.
    Gb {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "improved")]
        mode: Mode,
        #[arg(long, default_value = "classic")]
        engine: Engine,
        #[arg(long, default_value = "grlex")]
        order: MonomialOrder,
        /// Print pair statistics to stderr.
        #[arg(long)]
        stats: bool,
    },
    /// Decide ideal membership.
    Member {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "classic")]
        engine: Engine,
        #[arg(long, default_value = "grlex")]
        order: MonomialOrder,
        poly: String,
    },
    /// Decide whether two polynomials are congruent modulo the ideal.
    Congruent {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "classic")]
        engine: Engine,
        #[arg(long, default_value = "grlex")]
        order: MonomialOrder,
        g: String,
        h: String,
    },
    /// Time every engine on the problem corpus.
    Bench {
        /// Timed runs per cell; BENCH_RUNS takes precedence.
        #[arg(long, default_value_t = 1000)]
        runs: usize,
        #[arg(long, default_value_t = 3)]
        warmup: usize,
        /// CSV output path; the CSV goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "grlex")]
        order: MonomialOrder,
        #[arg(long, default_value = "improved")]
        mode: Mode,
        /// Comma-separated engines, e.g. `classic,cached`.
        #[arg(long, value_delimiter = ',')]
        engines: Vec<Engine>,
        /// Restrict to these problem ids.
        #[arg(long, value_delimiter = ',')]
        problems: Vec<u32>,
    },
    /// Inspect the embedded problem corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// One line per problem: id, variables, source and generators.
    List,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Basis file.
    #[arg(long)]
    basis: Option<PathBuf>,
    /// Corpus problem id.
    #[arg(long)]
    problem: Option<u32>,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl Source {
    fn load(&self) -> Result<(Ring, Vec<Polynomial>), Failure> {
        if let Some(path) = &self.basis {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
            return parse_basis_file(&text)
                .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())));
        }
        let id = self.problem.expect("clap enforces one source");
        let spec =
            problem(id).ok_or_else(|| Failure::Usage(format!("no problem {id} in the corpus")))?;
        let gens = spec.polynomials()?;
        Ok((spec.ring, gens))
    }
}

fn parse_arg(text: &str, ring: &Ring) -> Result<Polynomial, Failure> {
    parse_polynomial(text, ring).map_err(|e| Failure::Usage(format!("`{text}`: {e}")))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Reduce {
            source,
            order,
            strategy,
            engine,
            trace,
            poly,
        } => {
            let (ring, gens) = source.load()?;
            let g = parse_arg(&poly, &ring)?;
            let basis = Basis::new(gens, OrderingSpec::new(order, ring.clone()))?;
            let nf = match engine {
                Engine::Machine if trace => {
                    let t = run_machine(&g, &basis, &strategy)?;
                    eprint!("{}", t.to_text(&ring));
                    t.result
                }
                Engine::Cached if trace => {
                    let run = run_cached_machine(&g, &basis, &strategy)?;
                    eprint!("{}", run.graph.to_text(&ring));
                    run.result
                }
                _ => {
                    let r = engine.reduce(&g, &basis, &strategy)?;
                    if trace {
                        eprintln!("steps: {}", r.steps);
                    }
                    r.normal_form
                }
            };
            println!("{}", format_polynomial(&nf, &ring, order));
        }
        Command::Gb {
            source,
            mode,
            engine,
            order,
            stats,
        } => {
            let (ring, gens) = source.load()?;
            let ord = OrderingSpec::new(order, ring.clone());
            let result = reduced_groebner_basis(&gens, &ord, &GroebnerConfig::new(mode, engine))?;
            for p in result.basis.generators() {
                println!("{}", format_polynomial(p, &ring, order));
            }
            if stats {
                let s = &result.stats;
                eprintln!(
                    "pairs reduced {}, skipped {} (product {}, chain {}), zero reductions {}, steps {}",
                    s.pairs_reduced,
                    s.pairs_skipped(),
                    s.skipped_product,
                    s.skipped_chain,
                    s.zero_reductions,
                    s.reduction_steps
                );
            }
        }
        Command::Member {
            source,
            engine,
            order,
            poly,
        } => {
            let (ring, gens) = source.load()?;
            let g = parse_arg(&poly, &ring)?;
            let ord = OrderingSpec::new(order, ring);
            println!("{}", ideal_member(&g, &gens, &ord, engine)?);
        }
        Command::Congruent {
            source,
            engine,
            order,
            g,
            h,
        } => {
            let (ring, gens) = source.load()?;
            let g = parse_arg(&g, &ring)?;
            let h = parse_arg(&h, &ring)?;
            let ord = OrderingSpec::new(order, ring);
            println!("{}", congruent(&g, &h, &gens, &ord, engine)?);
        }
        Command::Bench {
            runs,
            warmup,
            out,
            order,
            mode,
            engines,
            problems,
        } => {
            let mut config = BenchConfig {
                runs,
                warmup,
                order,
                mode,
                ..BenchConfig::default()
            };
            if !engines.is_empty() {
                config.engines = engines;
            }
            let config = config.with_env_overrides()?;
            let mut selected = corpus();
            if !problems.is_empty() {
                if let Some(id) = problems
                    .iter()
                    .find(|id| !selected.iter().any(|p| p.id == **id))
                {
                    return Err(Failure::Usage(format!("no problem {id} in the corpus")));
                }
                selected.retain(|p| problems.contains(&p.id));
            }
            let report = run_bench(&config, &selected)?;
            match out {
                Some(path) => {
                    std::fs::write(&path, report.to_csv())
                        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
                    print!("{}", report.to_table());
                }
                None => {
                    print!("{}", report.to_csv());
                    eprint!("{}", report.to_table());
                }
            }
            if !report.failures.is_empty() {
                return Err(Failure::Domain(format!(
                    "{} engine failure(s)",
                    report.failures.len()
                )));
            }
        }
        Command::Corpus {
            action: CorpusAction::List,
        } => {
            for p in corpus() {
                println!(
                    "{:>2}  {:<10} [{}]  {}",
                    p.id,
                    p.source.as_deref().unwrap_or("-"),
                    p.ring.variables().join(","),
                    p.generators.join(", ")
                );
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\n{GRAMMAR}");
            ExitCode::from(2)
        }
    }
}
