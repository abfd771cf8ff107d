use std::fmt;
use std::str::FromStr;

use crate::error::Result;
use crate::machine::{run_cached_machine, run_machine, run_parallel_machine};
use crate::poly::Polynomial;
use crate::reduction::{classic_reduce, Basis, Reduced, SelectionStrategy};

/// A normal-form algorithm. All engines compute the same normal form for the
/// same strategy; they differ in cost and in what `steps` counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    /// Greatest-monomial-first reduction. `steps`: reduction steps.
    Classic,
    /// Plain reduction machine. `steps`: substitutions.
    Machine,
    /// Reduction machine with caching. `steps`: expanded power products.
    Cached,
    /// Parallel machine with the given worker count. `steps`: expanded
    /// power products.
    Parallel(usize),
}

impl Engine {
    pub fn reduce(
        self,
        g: &Polynomial,
        basis: &Basis,
        strategy: &dyn SelectionStrategy,
    ) -> Result<Reduced> {
        match self {
            Self::Classic => classic_reduce(g, basis, strategy),
            Self::Machine => run_machine(g, basis, strategy).map(|t| Reduced {
                normal_form: t.result,
                steps: t.substitution_count,
            }),
            Self::Cached => run_cached_machine(g, basis, strategy).map(|r| Reduced {
                steps: r.graph.expansions(),
                normal_form: r.result,
            }),
            Self::Parallel(workers) => run_parallel_machine(g, basis, strategy, workers),
        }
    }

    /// Short label used in benchmark output.
    pub fn label(self) -> &'static str {
        match self {
            Self::Classic => "C",
            Self::Machine => "RM",
            Self::Cached => "RMc",
            Self::Parallel(_) => "RMp",
        }
    }

    /// Parallel engine sized to the machine.
    pub fn parallel_default() -> Self {
        Self::Parallel(
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1),
        )
    }

    /// Classic, machine, cached and parallel, in that order.
    pub fn all() -> [Engine; 4] {
        [
            Self::Classic,
            Self::Machine,
            Self::Cached,
            Self::parallel_default(),
        ]
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Classic => f.write_str("classic"),
            Self::Machine => f.write_str("machine"),
            Self::Cached => f.write_str("cached"),
            Self::Parallel(n) => write!(f, "parallel({n})"),
        }
    }
}

impl FromStr for Engine {
    type Err = String;

    /// Accepts `classic`, `machine`, `cached`, `parallel` and `parallel:N`,
    /// as well as the labels `C`, `RM`, `RMc`, `RMp`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        if let Some(n) = lower.strip_prefix("parallel:") {
            return n
                .parse::<usize>()
                .ok()
                .filter(|&n| n >= 1)
                .map(Self::Parallel)
                .ok_or_else(|| format!("invalid worker count in `{s}`"));
        }
        match lower.as_str() {
            "classic" | "c" => Ok(Self::Classic),
            "machine" | "rm" => Ok(Self::Machine),
            "cached" | "rmc" => Ok(Self::Cached),
            "parallel" | "rmp" => Ok(Self::parallel_default()),
            _ => Err(format!(
                "unknown engine `{s}` (expected classic, machine, cached or parallel)"
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!("classic".parse(), Ok(Engine::Classic));
        assert_eq!("RMc".parse(), Ok(Engine::Cached));
        assert_eq!("parallel:3".parse(), Ok(Engine::Parallel(3)));
        assert!("parallel:0".parse::<Engine>().is_err());
        assert!("f4".parse::<Engine>().is_err());
        assert!(matches!("parallel".parse(), Ok(Engine::Parallel(n)) if n >= 1));
    }
}
