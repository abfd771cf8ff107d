//! The embedded collection of twenty benchmark ideals.

use crate::error::{Error, Result};
use crate::parse::{parse_polynomial, parse_vars_line};
use crate::poly::{Polynomial, Ring};

const CORPUS: &str = include_str!("../data/corpus.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemSpec {
    pub id: u32,
    pub ring: Ring,
    /// Generators as written in the data file.
    pub generators: Vec<String>,
    /// Literature tag such as `[10]` or `cyclic-3`, if any.
    pub source: Option<String>,
}

impl ProblemSpec {
    pub fn polynomials(&self) -> Result<Vec<Polynomial>> {
        self.generators
            .iter()
            .map(|g| parse_polynomial(g, &self.ring))
            .collect()
    }
}

/// Parses the multi-problem format: `== <id> <source>` headers, each
/// followed by a `vars:` line and one generator per line.
pub fn parse_corpus(text: &str) -> Result<Vec<ProblemSpec>> {
    let mut problems: Vec<ProblemSpec> = Vec::new();
    let mut header: Option<(u32, Option<String>)> = None;
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fail = |message: String| Error::Line {
            line: k + 1,
            message,
        };
        if let Some(rest) = line.strip_prefix("==") {
            let mut parts = rest.split_whitespace();
            let id: u32 = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| fail("expected problem id".into()))?;
            if problems.iter().any(|p| p.id == id) {
                return Err(fail(format!("duplicate problem id {id}")));
            }
            let source = parts.next().filter(|s| *s != "-").map(str::to_string);
            header = Some((id, source));
        } else if let Some(ring) = parse_vars_line(line) {
            let (id, source) = header
                .take()
                .ok_or_else(|| fail("`vars:` without a `==` header".into()))?;
            problems.push(ProblemSpec {
                id,
                ring: ring.map_err(|e| fail(e.to_string()))?,
                generators: Vec::new(),
                source,
            });
        } else {
            let problem = problems
                .last_mut()
                .filter(|_| header.is_none())
                .ok_or_else(|| fail("generator outside a problem".into()))?;
            parse_polynomial(line, &problem.ring).map_err(|e| fail(format!("{e} in `{line}`")))?;
            problem.generators.push(line.to_string());
        }
    }
    Ok(problems)
}

/// The twenty problems, in order.
pub fn corpus() -> Vec<ProblemSpec> {
    parse_corpus(CORPUS).expect("embedded corpus is well formed")
}

pub fn problem(id: u32) -> Option<ProblemSpec> {
    corpus().into_iter().find(|p| p.id == id)
}
