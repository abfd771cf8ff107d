//! Polynomial reduction: single steps at arbitrary monomials, the classic
//! greatest-monomial normal form, and an exhaustive explorer over every
//! order in which monomials can be chosen.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ordering::{Decomposition, MonomialOrder, OrderedPp, OrderingSpec};
use crate::poly::{Coefficient, Polynomial, PowerProduct};

/// An ordered list of nonzero polynomials under an admissible ordering, with
/// the leading-term decomposition of every generator precomputed.
#[derive(Clone, Debug)]
pub struct Basis {
    generators: Vec<Polynomial>,
    heads: Vec<Decomposition>,
    ord: OrderingSpec,
}

impl Basis {
    pub fn new(generators: Vec<Polynomial>, ord: OrderingSpec) -> Result<Self> {
        ord.require_admissible()?;
        let heads = generators
            .iter()
            .map(|f| ord.decompose(f))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            generators,
            heads,
            ord,
        })
    }

    /// Appends a generator.
    pub fn push(&mut self, f: Polynomial) -> Result<()> {
        self.check_arity(&f)?;
        self.heads.push(self.ord.decompose(&f)?);
        self.generators.push(f);
        Ok(())
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn into_generators(self) -> Vec<Polynomial> {
        self.generators
    }

    pub fn ord(&self) -> &OrderingSpec {
        &self.ord
    }

    pub fn nvars(&self) -> usize {
        self.ord.nvars()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn head(&self, i: usize) -> &Decomposition {
        &self.heads[i]
    }

    pub fn lpp(&self, i: usize) -> &PowerProduct {
        &self.heads[i].lpp
    }

    /// Indices of generators whose leading power product divides `t`.
    pub fn divisors<'a>(&'a self, t: &'a PowerProduct) -> impl Iterator<Item = usize> + 'a {
        self.heads
            .iter()
            .enumerate()
            .filter(move |(_, h)| h.lpp.divides(t))
            .map(|(i, _)| i)
    }

    pub fn is_reducible(&self, t: &PowerProduct) -> bool {
        self.divisors(t).next().is_some()
    }

    fn check_arity(&self, p: &Polynomial) -> Result<()> {
        if p.nvars() == self.nvars() {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: self.nvars(),
                found: p.nvars(),
            })
        }
    }
}

/// Chooses which generator reduces a given power product.
///
/// Implementations must depend only on `t` and the basis, and must return
/// some divisor whenever one exists. Engines verify both the divisibility of
/// the returned generator and totality.
pub trait SelectionStrategy: Sync {
    fn select(&self, t: &PowerProduct, basis: &Basis) -> Option<usize>;
}

/// The built-in strategies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    /// First generator in list order whose leading power product divides.
    #[default]
    FirstDivisor,
    /// Divisor with the greatest leading power product, ties by list order.
    MaxLpp,
    /// Last generator in list order whose leading power product divides.
    LastDivisor,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Self::FirstDivisor => "first",
            Self::MaxLpp => "maxlpp",
            Self::LastDivisor => "last",
        }
    }
}

impl SelectionStrategy for Strategy {
    fn select(&self, t: &PowerProduct, basis: &Basis) -> Option<usize> {
        let mut divisors = basis.divisors(t);
        match self {
            Self::FirstDivisor => divisors.next(),
            Self::LastDivisor => divisors.last(),
            Self::MaxLpp => {
                let kind = basis.ord().kind;
                divisors.fold(None, |best: Option<usize>, i| match best {
                    Some(b) if kind.cmp(basis.lpp(i), basis.lpp(b)) != Ordering::Greater => Some(b),
                    _ => Some(i),
                })
            }
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "first" => Ok(Self::FirstDivisor),
            "maxlpp" => Ok(Self::MaxLpp),
            "last" => Ok(Self::LastDivisor),
            other => Err(format!(
                "unknown strategy `{other}` (expected first, maxlpp or last)"
            )),
        }
    }
}

/// The named built-in strategies.
pub fn default_strategies() -> Vec<(&'static str, Strategy)> {
    [
        Strategy::FirstDivisor,
        Strategy::MaxLpp,
        Strategy::LastDivisor,
    ]
    .into_iter()
    .map(|s| (s.name(), s))
    .collect()
}

/// Asks the strategy for a reducer of `t` and checks its answer.
pub fn select_reducer(
    strategy: &dyn SelectionStrategy,
    t: &PowerProduct,
    basis: &Basis,
) -> Result<Option<usize>> {
    match strategy.select(t, basis) {
        Some(i) if i < basis.len() && basis.lpp(i).divides(t) => Ok(Some(i)),
        Some(i) => Err(Error::InvalidReducer(i)),
        None => match basis.divisors(t).next() {
            None => Ok(None),
            Some(i) => Err(Error::InvalidReducer(i)),
        },
    }
}

/// One step `g ->_{f,t} h`: `h = g - (M(g,t) / LM(f)) * f`.
pub fn reduce_step(
    g: &Polynomial,
    f: &Polynomial,
    t: &PowerProduct,
    ord: &OrderingSpec,
) -> Result<Polynomial> {
    let head = ord.decompose(f)?;
    if g.nvars() != f.nvars() {
        return Err(Error::ArityMismatch {
            expected: f.nvars(),
            found: g.nvars(),
        });
    }
    let c = g.coefficient(t);
    if c.is_zero() {
        return Err(Error::NotInSupport);
    }
    let shift = t.try_div(&head.lpp)?;
    Ok(step_with_head(g, t, &c, &shift, &head))
}

fn step_with_head(
    g: &Polynomial,
    t: &PowerProduct,
    c: &Coefficient,
    shift: &PowerProduct,
    head: &Decomposition,
) -> Polynomial {
    let factor = c / &head.lc;
    let mut h = g.clone();
    h.remove_term(t);
    h.add_scaled_shifted(&-factor, shift, &head.rest);
    h
}

/// `true` iff no power product of `g` is divisible by a leading power product
/// of the basis.
pub fn is_normal_form(g: &Polynomial, basis: &Basis) -> bool {
    g.support().all(|t| !basis.is_reducible(t))
}

/// A normal form together with the number of reduction steps taken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduced {
    pub normal_form: Polynomial,
    pub steps: usize,
}

/// One executed step of a reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStepRecord {
    pub pp: PowerProduct,
    pub reducer: usize,
    pub result: Polynomial,
}

/// The steps of one branch, each starting from the previous result.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonomialReductionSequence {
    pub steps: Vec<ReductionStepRecord>,
}

// Working polynomial kept sorted under the basis ordering. Pops the greatest
// term, so reducing the greatest reducible monomial is a linear sweep.
struct Sweep {
    kind: MonomialOrder,
    pending: BTreeMap<OrderedPp, Coefficient>,
    remainder: Polynomial,
}

impl Sweep {
    fn new(g: &Polynomial, basis: &Basis) -> Self {
        let kind = basis.ord().kind;
        Self {
            kind,
            pending: g
                .terms()
                .map(|(t, c)| (OrderedPp::new(kind, t.clone()), c.clone()))
                .collect(),
            remainder: Polynomial::zero(g.nvars()),
        }
    }

    fn pop(&mut self) -> Option<(PowerProduct, Coefficient)> {
        self.pending.pop_last().map(|(k, c)| (k.pp, c))
    }

    fn subtract(&mut self, factor: &Coefficient, shift: &PowerProduct, rest: &Polynomial) {
        for (u, d) in rest.terms() {
            let key = OrderedPp::new(self.kind, u.mul(shift));
            let delta = -(factor * d);
            match self.pending.entry(key) {
                Entry::Vacant(v) => {
                    v.insert(delta);
                }
                Entry::Occupied(mut o) => {
                    *o.get_mut() += delta;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
    }
}

fn classic_impl(
    g: &Polynomial,
    basis: &Basis,
    strategy: &dyn SelectionStrategy,
    mut on_step: impl FnMut(usize, &Coefficient, &PowerProduct),
    mut trace: Option<&mut MonomialReductionSequence>,
) -> Result<Reduced> {
    basis.check_arity(g)?;
    let mut sweep = Sweep::new(g, basis);
    let mut steps = 0;
    while let Some((t, c)) = sweep.pop() {
        match select_reducer(strategy, &t, basis)? {
            None => sweep.remainder.add_term(t, c),
            Some(i) => {
                let head = basis.head(i);
                let shift = t.div(&head.lpp).expect("checked divisor");
                let factor = &c / &head.lc;
                sweep.subtract(&factor, &shift, &head.rest);
                on_step(i, &factor, &shift);
                steps += 1;
                if let Some(seq) = trace.as_deref_mut() {
                    let mut snapshot = sweep.remainder.clone();
                    for (k, v) in &sweep.pending {
                        snapshot.add_term(k.pp.clone(), v.clone());
                    }
                    seq.steps.push(ReductionStepRecord {
                        pp: t,
                        reducer: i,
                        result: snapshot,
                    });
                }
            }
        }
    }
    Ok(Reduced {
        normal_form: sweep.remainder,
        steps,
    })
}

/// Classic reduction: repeatedly reduce the greatest reducible monomial,
/// using the strategy's reducer, until a normal form is reached.
pub fn classic_reduce(
    g: &Polynomial,
    basis: &Basis,
    strategy: &dyn SelectionStrategy,
) -> Result<Reduced> {
    classic_impl(g, basis, strategy, |_, _, _| {}, None)
}

/// [`classic_reduce`] that also records every intermediate polynomial.
pub fn classic_reduce_traced(
    g: &Polynomial,
    basis: &Basis,
    strategy: &dyn SelectionStrategy,
) -> Result<(Reduced, MonomialReductionSequence)> {
    let mut seq = MonomialReductionSequence::default();
    let r = classic_impl(g, basis, strategy, |_, _, _| {}, Some(&mut seq))?;
    Ok((r, seq))
}

/// Classic reduction returning `h` and cofactors `q` with
/// `g = sum(q[i] * f[i]) + h`.
pub fn reduce_with_cofactors(
    g: &Polynomial,
    basis: &Basis,
    strategy: &dyn SelectionStrategy,
) -> Result<(Polynomial, Vec<Polynomial>)> {
    let mut q = vec![Polynomial::zero(basis.nvars()); basis.len()];
    let r = classic_impl(
        g,
        basis,
        strategy,
        |i, factor, shift| q[i].add_term(shift.clone(), factor.clone()),
        None,
    )?;
    Ok((r.normal_form, q))
}

/// Outcome of exhaustively exploring a reduction process.
#[derive(Clone, Debug, Default)]
pub struct BranchSummary {
    /// Each reachable normal form with the multiset of branch lengths that
    /// end in it, as `length -> number of branches`.
    pub outcomes: BTreeMap<Polynomial, BTreeMap<usize, BigUint>>,
    /// Distinct intermediate polynomials visited.
    pub nodes: usize,
}

impl BranchSummary {
    pub fn normal_forms(&self) -> impl Iterator<Item = &Polynomial> {
        self.outcomes.keys()
    }

    /// The normal form, if every branch agrees on one.
    pub fn unique_normal_form(&self) -> Option<&Polynomial> {
        match self.outcomes.len() {
            1 => self.outcomes.keys().next(),
            _ => None,
        }
    }

    pub fn min_length(&self) -> Option<usize> {
        self.outcomes
            .values()
            .filter_map(|lens| lens.keys().next().copied())
            .min()
    }

    pub fn max_length(&self) -> Option<usize> {
        self.outcomes
            .values()
            .filter_map(|lens| lens.keys().next_back().copied())
            .max()
    }

    /// Number of branches of the given length, over all normal forms.
    pub fn branches_of_length(&self, len: usize) -> BigUint {
        self.outcomes
            .values()
            .filter_map(|lens| lens.get(&len))
            .sum()
    }

    pub fn branch_count(&self) -> BigUint {
        self.outcomes.values().flat_map(|lens| lens.values()).sum()
    }
}

/// Default node budget for [`enumerate_branches`].
pub const DEFAULT_NODE_BUDGET: usize = 100_000;

type Outcomes = BTreeMap<Polynomial, BTreeMap<usize, BigUint>>;

struct Explorer<'a> {
    basis: &'a Basis,
    strategy: &'a dyn SelectionStrategy,
    budget: usize,
    memo: HashMap<Polynomial, Rc<Outcomes>>,
}

impl Explorer<'_> {
    fn explore(&mut self, p: &Polynomial) -> Result<Rc<Outcomes>> {
        if let Some(hit) = self.memo.get(p) {
            return Ok(Rc::clone(hit));
        }
        if self.memo.len() >= self.budget {
            return Err(Error::BudgetExhausted(self.budget));
        }
        let mut out = Outcomes::new();
        let mut reducible = false;
        // children in descending monomial order
        for m in self.basis.ord().sorted_terms(p) {
            let Some(i) = select_reducer(self.strategy, &m.pp, self.basis)? else {
                continue;
            };
            reducible = true;
            let head = self.basis.head(i);
            let shift = m.pp.div(&head.lpp).expect("checked divisor");
            let child = step_with_head(p, &m.pp, &m.coefficient, &shift, head);
            let sub = self.explore(&child)?;
            for (nf, lens) in sub.iter() {
                let slot = out.entry(nf.clone()).or_default();
                for (len, count) in lens {
                    *slot.entry(len + 1).or_insert_with(BigUint::zero) += count;
                }
            }
        }
        if !reducible {
            out.insert(p.clone(), BTreeMap::from([(0, BigUint::one())]));
        }
        let out = Rc::new(out);
        self.memo.insert(p.clone(), Rc::clone(&out));
        Ok(out)
    }
}

/// Explores every reduction branch of `g`: at each node, every reducible
/// monomial is tried, each with the reducer fixed by `strategy`.
///
/// Identical intermediate polynomials are explored once and their subtrees
/// shared, so `node_budget` bounds the number of distinct polynomials.
pub fn enumerate_branches(
    g: &Polynomial,
    basis: &Basis,
    strategy: &dyn SelectionStrategy,
    node_budget: usize,
) -> Result<BranchSummary> {
    basis.check_arity(g)?;
    let mut explorer = Explorer {
        basis,
        strategy,
        budget: node_budget,
        memo: HashMap::new(),
    };
    let root = explorer.explore(g)?;
    Ok(BranchSummary {
        outcomes: (*root).clone(),
        nodes: explorer.memo.len(),
    })
}
