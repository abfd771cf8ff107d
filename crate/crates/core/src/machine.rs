//! Reduction machines.
//!
//! A reduction machine reduces every monomial of the input independently: a
//! monomial is replaced by its substitution (the monomials of
//! `-(m / LM(f)) * R(f)` for the strategy's reducer `f`), recursively, until
//! only irreducible monomials remain. The normal form is the sum of all these
//! leaves. Since the reducer depends only on the power product, the leaves do
//! not depend on the order in which monomials are processed.
//!
//! Three variants are provided:
//!
//! * [`run_machine`]: a FIFO worklist building one explicit tree per input
//!   monomial, with step and depth metrics.
//! * [`run_cached_machine`]: each power product is expanded at most once;
//!   coefficients flow through a [`ReductionGraph`] and are collected at the
//!   irreducible vertices.
//! * [`run_parallel_machine`]: the per-monomial threads are shared out to a
//!   pool of workers that memoize the normal form of each power product in a
//!   concurrent map.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::sync::Arc;

use dashmap::DashMap;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::parse::{format_monomial, format_pp};
use crate::poly::{Coefficient, Monomial, Polynomial, PowerProduct, Ring};
use crate::reduction::{select_reducer, Basis, Reduced, SelectionStrategy};

/// Monomials replacing `m` in one reduction step: `-(m / LM(f)) * R(f)`,
/// sorted in descending order.
pub fn substitution(
    m: &Monomial,
    basis: &Basis,
    strategy: &dyn SelectionStrategy,
) -> Result<Vec<Monomial>> {
    let i = select_reducer(strategy, &m.pp, basis)?.ok_or(Error::Irreducible)?;
    Ok(substitute_with(m, basis, i))
}

fn substitute_with(m: &Monomial, basis: &Basis, i: usize) -> Vec<Monomial> {
    let head = basis.head(i);
    let shift = m.pp.div(&head.lpp).expect("checked divisor");
    let factor = -(&m.coefficient / &head.lc);
    let mut out: Vec<Monomial> = head
        .rest
        .terms()
        .map(|(u, d)| Monomial::new(&factor * d, u.mul(&shift)))
        .collect();
    let kind = basis.ord().kind;
    out.sort_by(|a, b| kind.cmp(&b.pp, &a.pp));
    out
}

/// A node in a reduction thread. Internal nodes carry the reducer used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreadNode {
    pub monomial: Monomial,
    pub reducer: Option<usize>,
    pub children: Vec<usize>,
    /// Number of substitutions between the root and this node.
    pub depth: usize,
}

/// The substitution tree grown from one input monomial. Node 0 is the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionThread {
    pub nodes: Vec<ThreadNode>,
}

impl ReductionThread {
    pub fn root(&self) -> &Monomial {
        &self.nodes[0].monomial
    }

    /// Internal (expanded) nodes.
    pub fn substitution_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.reducer.is_some()).count()
    }

    /// Longest root-to-leaf chain of substitutions.
    pub fn height(&self) -> usize {
        self.nodes.iter().map(|n| n.depth).max().unwrap_or(0)
    }

    pub fn leaves(&self) -> impl Iterator<Item = &Monomial> {
        self.nodes
            .iter()
            .filter(|n| n.reducer.is_none())
            .map(|n| &n.monomial)
    }

    pub fn contains_pp(&self, t: &PowerProduct) -> bool {
        self.nodes.iter().any(|n| &n.monomial.pp == t)
    }
}

/// A completed run of the plain machine.
#[derive(Clone, Debug)]
pub struct MachineTrace {
    pub threads: Vec<ReductionThread>,
    /// Total internal nodes over all threads; the depth when threads run
    /// one after another.
    pub substitution_count: usize,
    /// Maximum thread height; the depth when threads run simultaneously.
    pub parallel_depth: usize,
    pub result: Polynomial,
}

impl MachineTrace {
    /// Number of threads whose tree contains `t`.
    pub fn threads_containing(&self, t: &PowerProduct) -> usize {
        self.threads.iter().filter(|th| th.contains_pp(t)).count()
    }

    /// Indented rendering of every thread tree.
    pub fn to_text(&self, ring: &Ring) -> String {
        let mut out = String::new();
        for (k, th) in self.threads.iter().enumerate() {
            let _ = writeln!(out, "thread {k}:");
            let mut stack = vec![0usize];
            while let Some(i) = stack.pop() {
                let n = &th.nodes[i];
                let tag = match n.reducer {
                    Some(r) => format!("  [f{}]", r + 1),
                    None => String::new(),
                };
                let _ = writeln!(
                    out,
                    "{}{}{}",
                    "  ".repeat(n.depth + 1),
                    format_monomial(&n.monomial, ring),
                    tag
                );
                stack.extend(n.children.iter().rev());
            }
        }
        out
    }
}

/// Plain reduction machine over a FIFO worklist.
pub fn run_machine(
    g: &Polynomial,
    basis: &Basis,
    strategy: &dyn SelectionStrategy,
) -> Result<MachineTrace> {
    check_arity(g, basis)?;
    let mut threads: Vec<ReductionThread> = basis
        .ord()
        .sorted_terms(g)
        .into_iter()
        .map(|m| ReductionThread {
            nodes: vec![ThreadNode {
                monomial: m,
                reducer: None,
                children: Vec::new(),
                depth: 0,
            }],
        })
        .collect();
    let mut queue: VecDeque<(usize, usize)> = (0..threads.len()).map(|k| (k, 0)).collect();
    let mut result = Polynomial::zero(g.nvars());
    let mut substitution_count = 0;

    while let Some((k, i)) = queue.pop_front() {
        let node = &threads[k].nodes[i];
        match select_reducer(strategy, &node.monomial.pp, basis)? {
            None => result.add_term(node.monomial.pp.clone(), node.monomial.coefficient.clone()),
            Some(r) => {
                let depth = node.depth + 1;
                let subs = substitute_with(&node.monomial, basis, r);
                substitution_count += 1;
                let thread = &mut threads[k];
                thread.nodes[i].reducer = Some(r);
                for s in subs {
                    let j = thread.nodes.len();
                    thread.nodes.push(ThreadNode {
                        monomial: s,
                        reducer: None,
                        children: Vec::new(),
                        depth,
                    });
                    thread.nodes[i].children.push(j);
                    queue.push_back((k, j));
                }
            }
        }
    }

    let parallel_depth = threads
        .iter()
        .map(ReductionThread::height)
        .max()
        .unwrap_or(0);
    Ok(MachineTrace {
        threads,
        substitution_count,
        parallel_depth,
        result,
    })
}

fn check_arity(g: &Polynomial, basis: &Basis) -> Result<()> {
    if g.nvars() == basis.nvars() {
        Ok(())
    } else {
        Err(Error::ArityMismatch {
            expected: basis.nvars(),
            found: g.nvars(),
        })
    }
}

/// A coefficient contribution to a vertex. With a parent, the contribution
/// is `coefficient * total(parent)`; without one, it is `coefficient` itself
/// (a monomial of the input).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiple {
    pub coefficient: Coefficient,
    pub parent: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub pp: PowerProduct,
    pub reducible: bool,
    pub multiples: Vec<Multiple>,
}

/// Power-product graph built by the cached machine. There is at most one
/// vertex per power product; an edge `a -> b` means that the substitution
/// of `a` contributes to `b`.
#[derive(Clone, Debug, Default)]
pub struct ReductionGraph {
    vertices: Vec<Vertex>,
    index: HashMap<PowerProduct, usize>,
    edges: Vec<(usize, usize)>,
}

impl ReductionGraph {
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_id(&self, t: &PowerProduct) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn vertex(&self, t: &PowerProduct) -> Option<&Vertex> {
        self.vertex_id(t).map(|i| &self.vertices[i])
    }

    /// Number of expanded (reducible) vertices.
    pub fn expansions(&self) -> usize {
        self.vertices.iter().filter(|v| v.reducible).count()
    }

    fn create_vertex(&mut self, pp: PowerProduct, multiple: Multiple) -> usize {
        let id = self.vertices.len();
        self.index.insert(pp.clone(), id);
        self.vertices.push(Vertex {
            pp,
            reducible: false,
            multiples: vec![multiple],
        });
        id
    }

    fn add_multiple(&mut self, id: usize, multiple: Multiple) {
        self.vertices[id].multiples.push(multiple);
    }

    fn expand(&mut self, source: usize, substitution: Vec<Monomial>) {
        self.vertices[source].reducible = true;
        for m in substitution {
            let multiple = Multiple {
                coefficient: m.coefficient,
                parent: Some(source),
            };
            let destination = match self.vertex_id(&m.pp) {
                Some(d) => {
                    self.add_multiple(d, multiple);
                    d
                }
                None => self.create_vertex(m.pp, multiple),
            };
            self.edges.push((source, destination));
        }
    }

    /// Total coefficient reaching vertex `v`.
    pub fn collect_coefficients(&self, v: usize) -> Result<Coefficient> {
        let mut memo = vec![Visit::New; self.vertices.len()];
        self.collect_memo(v, &mut memo)
    }

    fn collect_memo(&self, v: usize, memo: &mut [Visit]) -> Result<Coefficient> {
        match &memo[v] {
            Visit::Done(c) => return Ok(c.clone()),
            Visit::Active => return Err(Error::CycleDetected),
            Visit::New => {}
        }
        memo[v] = Visit::Active;
        let mut s = Coefficient::zero();
        for m in &self.vertices[v].multiples {
            match m.parent {
                None => s += &m.coefficient,
                Some(p) => s += &m.coefficient * self.collect_memo(p, memo)?,
            }
        }
        memo[v] = Visit::Done(s.clone());
        Ok(s)
    }

    /// Sum of the collected totals of all irreducible vertices, dropping
    /// zero totals.
    pub fn collect_remainder(&self, nvars: usize) -> Result<Polynomial> {
        let mut memo = vec![Visit::New; self.vertices.len()];
        let mut h = Polynomial::zero(nvars);
        for (i, v) in self.vertices.iter().enumerate() {
            if v.reducible {
                continue;
            }
            let c = self.collect_memo(i, &mut memo)?;
            if !c.is_zero() {
                h.add_term(v.pp.clone(), c);
            }
        }
        Ok(h)
    }

    /// Text export: one line `pp | multiples` per vertex, then one line
    /// `pp -> pp` per edge. A parented multiple is written `c<-parent`.
    pub fn to_text(&self, ring: &Ring) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            let multiples: Vec<String> = v
                .multiples
                .iter()
                .map(|m| match m.parent {
                    None => m.coefficient.to_string(),
                    Some(p) => format!(
                        "{}<-{}",
                        m.coefficient,
                        format_pp(&self.vertices[p].pp, ring)
                    ),
                })
                .collect();
            let mark = if v.reducible { " *" } else { "" };
            let _ = writeln!(
                out,
                "{}{} | {}",
                format_pp(&v.pp, ring),
                mark,
                multiples.join(", ")
            );
        }
        for (a, b) in &self.edges {
            let _ = writeln!(
                out,
                "{} -> {}",
                format_pp(&self.vertices[*a].pp, ring),
                format_pp(&self.vertices[*b].pp, ring)
            );
        }
        out
    }
}

#[derive(Clone, Debug)]
enum Visit {
    New,
    Active,
    Done(Coefficient),
}

/// Entry of the cached machine's worklist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorkItem {
    pub monomial: Monomial,
    pub used: bool,
    /// Monomial of the original input.
    pub og: bool,
}

/// The cached machine's monomial sequence; a power product is entered at
/// most once.
#[derive(Clone, Debug, Default)]
pub struct MonomialWorklist {
    items: Vec<WorkItem>,
    seen: HashSet<PowerProduct>,
    cursor: usize,
}

impl MonomialWorklist {
    fn push(&mut self, monomial: Monomial, og: bool) -> bool {
        if !self.seen.insert(monomial.pp.clone()) {
            return false;
        }
        self.items.push(WorkItem {
            monomial,
            used: false,
            og,
        });
        true
    }

    fn next_unused(&mut self) -> Option<usize> {
        (self.cursor < self.items.len()).then(|| {
            self.cursor += 1;
            self.cursor - 1
        })
    }

    pub fn items(&self) -> &[WorkItem] {
        &self.items
    }
}

/// Output of [`run_cached_machine`].
#[derive(Clone, Debug)]
pub struct CachedRun {
    pub result: Polynomial,
    pub graph: ReductionGraph,
    pub worklist: MonomialWorklist,
}

/// Reduction machine with caching: every power product is expanded at most
/// once, with coefficients carried on the graph and summed at the end.
pub fn run_cached_machine(
    g: &Polynomial,
    basis: &Basis,
    strategy: &dyn SelectionStrategy,
) -> Result<CachedRun> {
    check_arity(g, basis)?;
    let mut worklist = MonomialWorklist::default();
    for m in basis.ord().sorted_terms(g) {
        worklist.push(m, true);
    }
    let mut graph = ReductionGraph::default();

    while let Some(k) = worklist.next_unused() {
        let WorkItem { monomial, og, .. } = worklist.items[k].clone();
        if og {
            let multiple = Multiple {
                coefficient: monomial.coefficient.clone(),
                parent: None,
            };
            match graph.vertex_id(&monomial.pp) {
                Some(v) => graph.add_multiple(v, multiple),
                None => {
                    graph.create_vertex(monomial.pp.clone(), multiple);
                }
            }
        }
        if let Some(r) = select_reducer(strategy, &monomial.pp, basis)? {
            // substitute the bare power product; coefficients live on the graph
            let unit = Monomial::new(Coefficient::one(), monomial.pp.clone());
            let subs = substitute_with(&unit, basis, r);
            let source = graph.vertex_id(&monomial.pp).expect("vertex exists");
            for s in &subs {
                worklist.push(s.clone(), false);
            }
            graph.expand(source, subs);
        }
        worklist.items[k].used = true;
    }

    let result = graph.collect_remainder(g.nvars())?;
    Ok(CachedRun {
        result,
        graph,
        worklist,
    })
}

/// Runs the reduction threads of `g` on `worker_count` workers sharing a
/// memo of per-power-product normal forms. The returned step count is the
/// number of distinct reducible power products expanded.
pub fn run_parallel_machine(
    g: &Polynomial,
    basis: &Basis,
    strategy: &dyn SelectionStrategy,
    worker_count: usize,
) -> Result<Reduced> {
    check_arity(g, basis)?;
    let monomials: Vec<Monomial> = g.monomials().collect();
    let shared = SharedCache {
        basis,
        strategy,
        forms: DashMap::new(),
        expansions: AtomicUsize::new(0),
    };
    let workers = worker_count.max(1).min(monomials.len().max(1));

    let partials: Vec<Result<Polynomial>> = if workers == 1 {
        vec![shared.run_slice(&monomials, &AtomicUsize::new(0))]
    } else {
        let next = AtomicUsize::new(0);
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|_| scope.spawn(|| shared.run_slice(&monomials, &next)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        })
    };

    let mut normal_form = Polynomial::zero(g.nvars());
    for part in partials {
        for (t, c) in part?.terms() {
            normal_form.add_term(t.clone(), c.clone());
        }
    }
    Ok(Reduced {
        normal_form,
        steps: shared.expansions.load(AtomicOrdering::Relaxed),
    })
}

struct SharedCache<'a> {
    basis: &'a Basis,
    strategy: &'a dyn SelectionStrategy,
    forms: DashMap<PowerProduct, Arc<Polynomial>>,
    expansions: AtomicUsize,
}

impl SharedCache<'_> {
    fn run_slice(&self, monomials: &[Monomial], next: &AtomicUsize) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.basis.nvars());
        loop {
            let k = next.fetch_add(1, AtomicOrdering::Relaxed);
            let Some(m) = monomials.get(k) else {
                return Ok(acc);
            };
            let form = self.normal_form_of(&m.pp)?;
            for (t, c) in form.terms() {
                acc.add_term(t.clone(), c * &m.coefficient);
            }
        }
    }

    // Normal form of the bare power product `t`.
    fn normal_form_of(&self, t: &PowerProduct) -> Result<Arc<Polynomial>> {
        if let Some(hit) = self.forms.get(t) {
            return Ok(Arc::clone(hit.value()));
        }
        let reducer = select_reducer(self.strategy, t, self.basis)?;
        let form = match reducer {
            None => {
                Polynomial::from_monomial(t.nvars(), Monomial::new(Coefficient::one(), t.clone()))
            }
            Some(r) => {
                let unit = Monomial::new(Coefficient::one(), t.clone());
                let mut acc = Polynomial::zero(t.nvars());
                for s in substitute_with(&unit, self.basis, r) {
                    let sub = self.normal_form_of(&s.pp)?;
                    for (u, c) in sub.terms() {
                        acc.add_term(u.clone(), c * &s.coefficient);
                    }
                }
                acc
            }
        };
        let entry = self.forms.entry(t.clone());
        Ok(match entry {
            dashmap::mapref::entry::Entry::Occupied(o) => Arc::clone(o.get()),
            dashmap::mapref::entry::Entry::Vacant(v) => {
                if reducer.is_some() {
                    self.expansions.fetch_add(1, AtomicOrdering::Relaxed);
                }
                Arc::clone(v.insert(Arc::new(form)).value())
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::{MonomialOrder, OrderingSpec};
    use crate::poly::int;
    use crate::reduction::{classic_reduce, Strategy};

    fn pp(e: &[u32]) -> PowerProduct {
        PowerProduct::new(e.to_vec())
    }

    fn p(terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_int_terms(2, terms).unwrap()
    }

    fn ring() -> Ring {
        Ring::new(["x", "y"]).unwrap()
    }

    fn basis() -> Basis {
        Basis::new(
            vec![
                p(&[(1, &[2, 0]), (1, &[1, 0]), (-1, &[0, 1])]),
                p(&[(1, &[1, 0]), (-2, &[0, 0])]),
            ],
            OrderingSpec::new(MonomialOrder::GrLex, ring()),
        )
        .unwrap()
    }

    fn g21() -> Polynomial {
        p(&[(4, &[3, 0]), (2, &[2, 1]), (7, &[1, 1]), (2, &[0, 1])])
    }

    fn r21() -> Polynomial {
        p(&[(2, &[0, 2]), (16, &[0, 1]), (8, &[0, 0])])
    }

    #[test]
    fn substitution_examples() {
        let b = basis();
        let s = substitution(&Monomial::new(int(4), pp(&[3, 0])), &b, &Strategy::MaxLpp).unwrap();
        assert_eq!(
            s,
            vec![
                Monomial::new(int(-4), pp(&[2, 0])),
                Monomial::new(int(4), pp(&[1, 1])),
            ]
        );
        let s = substitution(&Monomial::new(int(7), pp(&[1, 1])), &b, &Strategy::MaxLpp).unwrap();
        assert_eq!(s, vec![Monomial::new(int(14), pp(&[0, 1]))]);

        let mono = Basis::new(
            vec![p(&[(1, &[1, 0])])],
            OrderingSpec::new(MonomialOrder::GrLex, ring()),
        )
        .unwrap();
        let s = substitution(
            &Monomial::new(int(3), pp(&[2, 1])),
            &mono,
            &Strategy::MaxLpp,
        )
        .unwrap();
        assert!(s.is_empty());

        assert_eq!(
            substitution(&Monomial::new(int(1), pp(&[0, 3])), &b, &Strategy::MaxLpp),
            Err(Error::Irreducible)
        );
    }

    #[test]
    fn plain_machine_metrics() {
        let t = run_machine(&g21(), &basis(), &Strategy::MaxLpp).unwrap();
        assert_eq!(t.result, r21());
        assert_eq!(t.substitution_count, 7);
        assert_eq!(t.parallel_depth, 3);
        assert_eq!(t.threads_containing(&pp(&[1, 1])), 3);
        for th in &t.threads {
            for n in &th.nodes {
                assert_eq!(n.reducer.is_some(), basis().is_reducible(&n.monomial.pp));
            }
        }
    }

    #[test]
    fn plain_machine_irreducible() {
        let g = p(&[(5, &[0, 3]), (1, &[0, 0])]);
        let t = run_machine(&g, &basis(), &Strategy::MaxLpp).unwrap();
        assert_eq!(t.result, g);
        assert_eq!((t.substitution_count, t.parallel_depth), (0, 0));
    }

    #[test]
    fn cached_machine_example() {
        let run = run_cached_machine(&g21(), &basis(), &Strategy::MaxLpp).unwrap();
        assert_eq!(run.result, r21());
        assert_eq!(run.graph.expansions(), 5);
        let expanded: HashSet<_> = run
            .graph
            .vertices()
            .iter()
            .filter(|v| v.reducible)
            .map(|v| v.pp.clone())
            .collect();
        let expected: HashSet<_> = [[3, 0], [2, 1], [2, 0], [1, 1], [1, 0]]
            .iter()
            .map(|e| pp(e))
            .collect();
        assert_eq!(expanded, expected);

        let y = run.graph.vertex_id(&pp(&[0, 1])).unwrap();
        assert_eq!(run.graph.collect_coefficients(y), Ok(int(16)));
        let one = run.graph.vertex_id(&pp(&[0, 0])).unwrap();
        assert_eq!(run.graph.collect_coefficients(one), Ok(int(8)));

        // every edge strictly decreases the power product
        let kind = MonomialOrder::GrLex;
        for (a, b) in run.graph.edges() {
            let (va, vb) = (&run.graph.vertices()[*a], &run.graph.vertices()[*b]);
            assert_eq!(kind.cmp(&va.pp, &vb.pp), std::cmp::Ordering::Greater);
        }
        // og entries come first and each pp is listed once
        let items = run.worklist.items();
        assert!(items.iter().take(4).all(|i| i.og && i.used));
        let distinct: HashSet<_> = items.iter().map(|i| &i.monomial.pp).collect();
        assert_eq!(distinct.len(), items.len());
    }

    #[test]
    fn cached_machine_drops_cancelled_totals() {
        let b = Basis::new(
            vec![p(&[(1, &[1, 0]), (1, &[0, 1])])],
            OrderingSpec::new(MonomialOrder::GrLex, ring()),
        )
        .unwrap();
        let g = p(&[(1, &[1, 0]), (1, &[0, 1])]);
        let run = run_cached_machine(&g, &b, &Strategy::FirstDivisor).unwrap();
        assert!(run.result.is_zero());
        let y = run.graph.vertex(&pp(&[0, 1])).unwrap();
        assert_eq!(y.multiples.len(), 2);
    }

    #[test]
    fn cached_machine_irreducible() {
        let g = p(&[(5, &[0, 3]), (1, &[0, 0])]);
        let run = run_cached_machine(&g, &basis(), &Strategy::MaxLpp).unwrap();
        assert_eq!(run.result, g);
        assert!(run.graph.edges().is_empty());
        assert_eq!(run.graph.vertices().len(), 2);
    }

    #[test]
    fn single_og_multiple_collects_itself() {
        let g = p(&[(-3, &[0, 2])]);
        let run = run_cached_machine(&g, &basis(), &Strategy::MaxLpp).unwrap();
        assert_eq!(run.graph.collect_coefficients(0), Ok(int(-3)));
    }

    #[test]
    fn graph_text_export() {
        let run = run_cached_machine(&g21(), &basis(), &Strategy::MaxLpp).unwrap();
        let text = run.graph.to_text(&ring());
        assert!(text.lines().any(|l| l == "x^3 * | 4"));
        assert!(text.lines().any(|l| l == "x^3 -> x^2"));
        assert_eq!(
            text.lines().filter(|l| l.contains("->")).count(),
            run.graph.edges().len()
        );
    }

    #[test]
    fn parallel_matches_sequential() {
        let b = basis();
        for workers in [1, 2, 4, 8] {
            let r = run_parallel_machine(&g21(), &b, &Strategy::MaxLpp, workers).unwrap();
            assert_eq!(r.normal_form, r21());
            assert_eq!(r.steps, 5);
        }
        let classic = classic_reduce(&g21(), &b, &Strategy::MaxLpp).unwrap();
        assert_eq!(classic.normal_form, r21());
        assert_eq!(classic.steps, 5);
    }

    #[test]
    fn arity_is_checked() {
        let g = Polynomial::one(3);
        assert!(matches!(
            run_machine(&g, &basis(), &Strategy::MaxLpp),
            Err(Error::ArityMismatch { .. })
        ));
        assert!(run_cached_machine(&g, &basis(), &Strategy::MaxLpp).is_err());
        assert!(run_parallel_machine(&g, &basis(), &Strategy::MaxLpp, 2).is_err());
    }
}
