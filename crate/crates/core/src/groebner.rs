//! Buchberger's algorithm and the ideal-theoretic operations built on it.
//!
//! Every reduction goes through a pluggable [`Engine`], so the same
//! completion procedure runs on classic reduction or on any reduction
//! machine.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::ordering::{OrderedPp, OrderingSpec};
use crate::poly::{Coefficient, Monomial, Polynomial, PowerProduct};
use crate::reduction::{reduce_with_cofactors, Basis, Strategy};

/// Which variant of Buchberger's algorithm to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// Every critical pair is reduced; the output is not inter-reduced.
    Classic,
    /// Product and chain criteria skip useless pairs, and the output is the
    /// reduced basis.
    #[default]
    Improved,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Classic => "classic",
            Self::Improved => "improved",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "classic" => Ok(Self::Classic),
            "improved" => Ok(Self::Improved),
            other => Err(format!(
                "unknown mode `{other}` (expected classic or improved)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerConfig {
    pub mode: Mode,
    pub engine: Engine,
    pub strategy: Strategy,
    /// Record, for every basis element, cofactors expressing it in terms of
    /// the input generators.
    pub track_cofactors: bool,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        Self {
            mode: Mode::Improved,
            engine: Engine::Classic,
            strategy: Strategy::FirstDivisor,
            track_cofactors: false,
        }
    }
}

impl GroebnerConfig {
    pub fn new(mode: Mode, engine: Engine) -> Self {
        Self {
            mode,
            engine,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroebnerStats {
    /// S-polynomials actually reduced.
    pub pairs_reduced: usize,
    pub skipped_product: usize,
    pub skipped_chain: usize,
    pub zero_reductions: usize,
    /// Sum of the engine's step counts over all reductions.
    pub reduction_steps: usize,
}

impl GroebnerStats {
    pub fn pairs_skipped(&self) -> usize {
        self.skipped_product + self.skipped_chain
    }
}

#[derive(Clone, Debug)]
pub struct GroebnerResult {
    pub basis: Basis,
    /// Set when every element is monic and in normal form modulo the others.
    pub reduced: bool,
    pub engine: Engine,
    pub mode: Mode,
    pub stats: GroebnerStats,
    /// `cofactors[k][i]` is the coefficient of input generator `i` in basis
    /// element `k`, when tracking is enabled.
    pub cofactors: Option<Vec<Vec<Polynomial>>>,
}

/// `(lcm / LM(f)) * f - (lcm / LM(g)) * g` for `lcm = lcm(LPP(f), LPP(g))`.
pub fn spol(f: &Polynomial, g: &Polynomial, ord: &OrderingSpec) -> Result<Polynomial> {
    let (a, b) = spol_multipliers(f, g, ord)?;
    Ok(&f.mul_monomial(&a) - &g.mul_monomial(&b))
}

fn spol_multipliers(
    f: &Polynomial,
    g: &Polynomial,
    ord: &OrderingSpec,
) -> Result<(Monomial, Monomial)> {
    let df = ord.decompose(f)?;
    let dg = ord.decompose(g)?;
    let lcm = df.lpp.try_lcm(&dg.lpp)?;
    let a = Monomial::new(df.lc.recip(), lcm.div(&df.lpp).expect("lcm"));
    let b = Monomial::new(dg.lc.recip(), lcm.div(&dg.lpp).expect("lcm"));
    Ok((a, b))
}

/// A pending pair of basis indices `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub i: usize,
    pub j: usize,
    pub lcm: OrderedPp,
    pub degree: u64,
}

impl CriticalPair {
    fn new(i: usize, j: usize, basis: &Basis) -> Self {
        let lcm = basis.lpp(i).lcm(basis.lpp(j));
        Self {
            i,
            j,
            degree: lcm.degree(),
            lcm: OrderedPp::new(basis.ord().kind, lcm),
        }
    }
}

// Minimal lcm degree first, then smaller lcm, then indices.
impl Ord for CriticalPair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.lcm.cmp(&other.lcm))
            .then_with(|| (self.i, self.j).cmp(&(other.i, other.j)))
    }
}

impl PartialOrd for CriticalPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Default)]
struct PairQueue {
    queue: BTreeSet<CriticalPair>,
    pending: HashSet<(usize, usize)>,
}

impl PairQueue {
    fn push(&mut self, pair: CriticalPair) {
        self.pending.insert((pair.i, pair.j));
        self.queue.insert(pair);
    }

    fn pop(&mut self) -> Option<CriticalPair> {
        let p = self.queue.pop_first()?;
        self.pending.remove(&(p.i, p.j));
        Some(p)
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        self.pending.contains(&(a.min(b), a.max(b)))
    }
}

fn validate(generators: &[Polynomial], ord: &OrderingSpec) -> Result<()> {
    ord.require_admissible()?;
    if generators.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    for f in generators {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.nvars() != ord.nvars() {
            return Err(Error::ArityMismatch {
                expected: ord.nvars(),
                found: f.nvars(),
            });
        }
    }
    Ok(())
}

fn unit_vector(n: usize, i: usize, c: Coefficient, nvars: usize) -> Vec<Polynomial> {
    (0..n)
        .map(|k| {
            if k == i {
                Polynomial::constant(nvars, c.clone())
            } else {
                Polynomial::zero(nvars)
            }
        })
        .collect()
}

fn combine(acc: &mut [Polynomial], factor: &Polynomial, cof: &[Polynomial]) {
    for (a, c) in acc.iter_mut().zip(cof) {
        *a = &*a + &(factor * c);
    }
}

/// Buchberger's algorithm.
///
/// Input generators are made monic; every new basis element is made monic
/// before insertion. Pairs are processed by minimal lcm degree, then by the
/// ordering on the lcm. In [`Mode::Improved`] the product criterion (coprime
/// leading power products) and the chain criterion are applied and the
/// result is inter-reduced.
pub fn buchberger(
    generators: &[Polynomial],
    ord: &OrderingSpec,
    config: &GroebnerConfig,
) -> Result<GroebnerResult> {
    validate(generators, ord)?;
    let n_in = generators.len();
    let nvars = ord.nvars();
    let mut basis = Basis::new(Vec::new(), ord.clone())?;
    let mut cofactors: Option<Vec<Vec<Polynomial>>> = config.track_cofactors.then(Vec::new);
    for (i, f) in generators.iter().enumerate() {
        let lc = ord.lm(f).expect("nonzero").coefficient;
        basis.push(ord.monic(f))?;
        if let Some(cof) = cofactors.as_mut() {
            cof.push(unit_vector(n_in, i, lc.recip(), nvars));
        }
    }

    let mut queue = PairQueue::default();
    for j in 0..basis.len() {
        for i in 0..j {
            queue.push(CriticalPair::new(i, j, &basis));
        }
    }

    let mut stats = GroebnerStats::default();
    while let Some(pair) = queue.pop() {
        let (i, j) = (pair.i, pair.j);
        if config.mode == Mode::Improved {
            if basis.lpp(i).is_coprime(basis.lpp(j)) {
                stats.skipped_product += 1;
                continue;
            }
            if chain_criterion(&pair, &basis, &queue) {
                stats.skipped_chain += 1;
                continue;
            }
        }
        let (fi, fj) = (&basis.generators()[i], &basis.generators()[j]);
        let (a, b) = spol_multipliers(fi, fj, ord)?;
        let s = &fi.mul_monomial(&a) - &fj.mul_monomial(&b);
        let reduced = config.engine.reduce(&s, &basis, &config.strategy)?;
        stats.pairs_reduced += 1;
        stats.reduction_steps += reduced.steps;
        let h = reduced.normal_form;

        if h.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }

        let lc = ord.lm(&h).expect("nonzero").coefficient;
        if let Some(cof) = cofactors.as_mut() {
            let (h_classic, q) = reduce_with_cofactors(&s, &basis, &config.strategy)?;
            debug_assert_eq!(h_classic, h);
            let mut c = vec![Polynomial::zero(nvars); n_in];
            combine(&mut c, &Polynomial::from_monomial(nvars, a), &cof[i]);
            combine(&mut c, &-&Polynomial::from_monomial(nvars, b), &cof[j]);
            for (l, ql) in q.iter().enumerate() {
                if !ql.is_zero() {
                    combine(&mut c, &-ql, &cof[l]);
                }
            }
            let inv = lc.recip();
            cof.push(c.iter().map(|p| p.scale(&inv)).collect());
        }
        basis.push(h.scale(&lc.recip()))?;
        let new = basis.len() - 1;
        for k in 0..new {
            queue.push(CriticalPair::new(k, new, &basis));
        }
    }

    let mut result = GroebnerResult {
        basis,
        reduced: false,
        engine: config.engine,
        mode: config.mode,
        stats,
        cofactors,
    };
    if config.mode == Mode::Improved {
        let (basis, cofactors, steps) = inter_reduce_tracked(
            result.basis.into_generators(),
            result.cofactors,
            ord,
            config,
        )?;
        result.basis = basis;
        result.cofactors = cofactors;
        result.stats.reduction_steps += steps;
        result.reduced = true;
    }
    Ok(result)
}

// Skip (i, j) if some other k has LPP(k) | lcm and neither (i, k) nor (j, k)
// is still waiting in the queue.
fn chain_criterion(pair: &CriticalPair, basis: &Basis, queue: &PairQueue) -> bool {
    (0..basis.len()).any(|k| {
        k != pair.i
            && k != pair.j
            && basis.lpp(k).divides(&pair.lcm.pp)
            && !queue.is_pending(pair.i, k)
            && !queue.is_pending(pair.j, k)
    })
}

/// Mutually reduces `generators` until every element is in normal form
/// modulo the others, then makes each monic. The result generates the same
/// ideal and is sorted by ascending leading power product; for a Gröbner
/// basis input it is the reduced Gröbner basis.
pub fn inter_reduce(
    generators: &[Polynomial],
    ord: &OrderingSpec,
    engine: Engine,
) -> Result<Basis> {
    let config = GroebnerConfig {
        engine,
        ..GroebnerConfig::default()
    };
    inter_reduce_tracked(generators.to_vec(), None, ord, &config).map(|(b, _, _)| b)
}

type Tracked = (Basis, Option<Vec<Vec<Polynomial>>>, usize);

fn inter_reduce_tracked(
    generators: Vec<Polynomial>,
    cofactors: Option<Vec<Vec<Polynomial>>>,
    ord: &OrderingSpec,
    config: &GroebnerConfig,
) -> Result<Tracked> {
    ord.require_admissible()?;
    let mut polys: Vec<(Polynomial, Option<Vec<Polynomial>>)> = match cofactors {
        Some(c) => generators
            .into_iter()
            .zip(c.into_iter().map(Some))
            .collect(),
        None => generators.into_iter().map(|g| (g, None)).collect(),
    };
    polys.retain(|(p, _)| !p.is_zero());
    let mut steps = 0;

    loop {
        let mut changed = false;
        let mut i = 0;
        while i < polys.len() && polys.len() > 1 {
            let others: Vec<Polynomial> = polys
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, (p, _))| p.clone())
                .collect();
            let others = Basis::new(others, ord.clone())?;
            let r = config
                .engine
                .reduce(&polys[i].0, &others, &config.strategy)?;
            steps += r.steps;
            if r.normal_form == polys[i].0 {
                i += 1;
                continue;
            }
            changed = true;
            if polys[i].1.is_some() {
                let (h, q) = reduce_with_cofactors(&polys[i].0, &others, &config.strategy)?;
                debug_assert_eq!(h, r.normal_form);
                let other_cofs: Vec<Vec<Polynomial>> = polys
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != i)
                    .map(|(_, (_, c))| c.clone().expect("tracked"))
                    .collect();
                let cof = polys[i].1.as_mut().expect("tracked");
                for (ql, cl) in q.iter().zip(&other_cofs) {
                    if !ql.is_zero() {
                        combine(cof, &-ql, cl);
                    }
                }
            }
            if r.normal_form.is_zero() {
                polys.remove(i);
            } else {
                polys[i].0 = r.normal_form;
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }

    let kind = ord.kind;
    let mut monic: Vec<(PowerProduct, Polynomial, Option<Vec<Polynomial>>)> = polys
        .into_iter()
        .map(|(p, c)| {
            let lm = ord.lm(&p).expect("nonzero");
            let inv = lm.coefficient.recip();
            let c = c.map(|c| c.iter().map(|q| q.scale(&inv)).collect());
            (lm.pp, p.scale(&inv), c)
        })
        .collect();
    monic.sort_by(|a, b| kind.cmp(&a.0, &b.0));
    let tracked = monic.iter().all(|(_, _, c)| c.is_some()) && !monic.is_empty();
    let cofactors = tracked.then(|| {
        monic
            .iter()
            .map(|(_, _, c)| c.clone().expect("tracked"))
            .collect()
    });
    let basis = Basis::new(monic.into_iter().map(|(_, p, _)| p).collect(), ord.clone())?;
    Ok((basis, cofactors, steps))
}

/// Reduced Gröbner basis of the ideal generated by `generators`.
pub fn reduced_groebner_basis(
    generators: &[Polynomial],
    ord: &OrderingSpec,
    config: &GroebnerConfig,
) -> Result<GroebnerResult> {
    let mut result = buchberger(generators, ord, config)?;
    if !result.reduced {
        let (basis, cofactors, steps) = inter_reduce_tracked(
            result.basis.into_generators(),
            result.cofactors,
            ord,
            config,
        )?;
        result.basis = basis;
        result.cofactors = cofactors;
        result.stats.reduction_steps += steps;
        result.reduced = true;
    }
    Ok(result)
}

/// `true` iff every S-polynomial of the basis reduces to zero.
pub fn is_groebner(basis: &Basis, engine: Engine, strategy: Strategy) -> Result<bool> {
    let gens = basis.generators();
    for j in 0..gens.len() {
        for i in 0..j {
            let s = spol(&gens[i], &gens[j], basis.ord())?;
            if !engine.reduce(&s, basis, &strategy)?.normal_form.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Decides `g ∈ <generators>`.
pub fn ideal_member(
    g: &Polynomial,
    generators: &[Polynomial],
    ord: &OrderingSpec,
    engine: Engine,
) -> Result<bool> {
    if g.nvars() != ord.nvars() {
        return Err(Error::ArityMismatch {
            expected: ord.nvars(),
            found: g.nvars(),
        });
    }
    let config = GroebnerConfig::new(Mode::Improved, engine);
    let gb = buchberger(generators, ord, &config)?;
    Ok(engine
        .reduce(g, &gb.basis, &config.strategy)?
        .normal_form
        .is_zero())
}

/// Decides `g ≡ h` modulo the ideal.
pub fn congruent(
    g: &Polynomial,
    h: &Polynomial,
    generators: &[Polynomial],
    ord: &OrderingSpec,
    engine: Engine,
) -> Result<bool> {
    ideal_member(&g.try_sub(h)?, generators, ord, engine)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::MonomialOrder;
    use crate::parse::parse_polynomial;
    use crate::poly::Ring;
    use crate::reduction::{classic_reduce, is_normal_form};

    fn setup(vars: &[&str], polys: &[&str]) -> (OrderingSpec, Vec<Polynomial>) {
        let ring = Ring::new(vars.iter().copied()).unwrap();
        let ps = polys
            .iter()
            .map(|s| parse_polynomial(s, &ring).unwrap())
            .collect();
        (OrderingSpec::new(MonomialOrder::GrLex, ring), ps)
    }

    fn parse(ord: &OrderingSpec, s: &str) -> Polynomial {
        parse_polynomial(s, &ord.ring).unwrap()
    }

    #[test]
    fn spol_examples() {
        let (o, f) = setup(&["x", "y"], &["x^2 + x - y", "x - 2", "x", "y"]);
        // oracle: lcm = x^2, so spol = f1 - x*f2
        let oracle = &f[0]
            - &f[1].mul_monomial(&Monomial::new(
                Coefficient::from_integer(1.into()),
                PowerProduct::new(vec![1, 0]),
            ));
        assert_eq!(spol(&f[0], &f[1], &o).unwrap(), oracle);
        assert_eq!(oracle, parse(&o, "3*x - y"));
        assert!(spol(&f[0], &f[0], &o).unwrap().is_zero());
        assert!(spol(&f[2], &f[3], &o).unwrap().is_zero());
        assert_eq!(
            spol(&f[0], &Polynomial::zero(2), &o),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn spol_non_monic_cancels_lcm() {
        let (o, f) = setup(&["x", "y"], &["3*x^2*y + y", "2*x*y^2 - x"]);
        let s = spol(&f[0], &f[1], &o).unwrap();
        assert!(!s.contains(&PowerProduct::new(vec![2, 2])));
    }

    #[test]
    fn coprime_generators_are_groebner() {
        let (o, f) = setup(&["x", "y"], &["x", "y"]);
        let r = buchberger(&f, &o, &GroebnerConfig::new(Mode::Classic, Engine::Classic)).unwrap();
        assert_eq!(r.basis.generators(), &f[..]);
        assert_eq!(r.stats.zero_reductions, 1);
        // improved output is sorted by ascending leading power product
        let r = buchberger(
            &f,
            &o,
            &GroebnerConfig::new(Mode::Improved, Engine::Classic),
        )
        .unwrap();
        assert_eq!(r.basis.generators(), &[f[1].clone(), f[0].clone()]);
        assert_eq!(r.stats.skipped_product, 1);
        let b = Basis::new(f, o).unwrap();
        assert!(is_groebner(&b, Engine::Classic, Strategy::FirstDivisor).unwrap());
    }

    #[test]
    fn inter_reduce_examples() {
        let (o, f) = setup(&["x", "y"], &["x", "2*x"]);
        let b = inter_reduce(&f, &o, Engine::Classic).unwrap();
        assert_eq!(b.generators(), &[parse(&o, "x")]);

        let (o, f) = setup(&["x", "y"], &["x - 2", "x^2 + x - y"]);
        let b = inter_reduce(&f, &o, Engine::Machine).unwrap();
        let mut got = b.generators().to_vec();
        got.sort();
        let mut want = vec![parse(&o, "x - 2"), parse(&o, "y - 6")];
        want.sort();
        assert_eq!(got, want);

        let again = inter_reduce(b.generators(), &o, Engine::Cached).unwrap();
        assert_eq!(again.generators(), b.generators());
    }

    #[test]
    fn is_groebner_examples() {
        let (o, f) = setup(&["x", "y"], &["x^2 + x - y", "x - 2"]);
        let b = Basis::new(f.clone(), o.clone()).unwrap();
        assert!(!is_groebner(&b, Engine::Classic, Strategy::FirstDivisor).unwrap());
        let single = Basis::new(vec![f[0].clone()], o).unwrap();
        assert!(is_groebner(&single, Engine::Classic, Strategy::FirstDivisor).unwrap());
    }

    #[test]
    fn membership_and_congruence() {
        let (o, f) = setup(&["x", "y"], &["x^2 + x - y", "x - 2"]);
        assert!(ideal_member(&f[0], &f, &o, Engine::Classic).unwrap());

        let (o, xy) = setup(&["x", "y"], &["x", "y"]);
        assert!(!ideal_member(&Polynomial::one(2), &xy, &o, Engine::Machine).unwrap());

        let (o, f2) = setup(&["x", "y"], &["x - 2"]);
        let g = parse(&o, "x^2*y - 4*y");
        assert!(ideal_member(&g, &f2, &o, Engine::Cached).unwrap());

        let x = parse(&o, "x");
        assert!(congruent(&x, &x, &f2, &o, Engine::Classic).unwrap());
        assert!(congruent(&x, &parse(&o, "2"), &f2, &o, Engine::Classic).unwrap());
        assert!(!congruent(&x, &parse(&o, "y"), &f2, &o, Engine::Parallel(2)).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        let (o, f) = setup(&["x", "y"], &["x - 2"]);
        let cfg = GroebnerConfig::default();
        assert!(buchberger(&[], &o, &cfg).is_err());
        assert!(buchberger(&[f[0].clone(), Polynomial::zero(2)], &o, &cfg).is_err());
        let revlex = OrderingSpec::new(MonomialOrder::RevLex, o.ring.clone());
        assert!(matches!(
            buchberger(&f, &revlex, &cfg),
            Err(Error::NonAdmissibleOrdering(_))
        ));
    }

    #[test]
    fn problem_three_with_cofactors() {
        let (o, f) = setup(&["x", "y"], &["x^2*y - 1", "x*y^2 - x"]);
        for mode in [Mode::Classic, Mode::Improved] {
            let cfg = GroebnerConfig {
                track_cofactors: true,
                ..GroebnerConfig::new(mode, Engine::Cached)
            };
            let r = reduced_groebner_basis(&f, &o, &cfg).unwrap();
            assert!(r.reduced);
            assert!(is_groebner(&r.basis, Engine::Classic, Strategy::FirstDivisor).unwrap());
            for g in &f {
                let nf = classic_reduce(g, &r.basis, &Strategy::MaxLpp).unwrap();
                assert!(nf.normal_form.is_zero());
            }
            let cof = r.cofactors.as_ref().unwrap();
            for (k, b) in r.basis.generators().iter().enumerate() {
                let mut acc = Polynomial::zero(2);
                for (c, g) in cof[k].iter().zip(&f) {
                    acc = &acc + &(c * g);
                }
                assert_eq!(&acc, b);
                let others: Vec<_> = r
                    .basis
                    .generators()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != k)
                    .map(|(_, p)| p.clone())
                    .collect();
                if !others.is_empty() {
                    assert!(is_normal_form(b, &Basis::new(others, o.clone()).unwrap()));
                }
                assert!(o.lm(b).unwrap().coefficient == Coefficient::from_integer(1.into()));
            }
        }
    }

    #[test]
    fn improved_skips_pairs() {
        let (o, f) = setup(
            &["x", "y", "z"],
            &["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"],
        );
        let classic =
            reduced_groebner_basis(&f, &o, &GroebnerConfig::new(Mode::Classic, Engine::Classic))
                .unwrap();
        let improved = buchberger(
            &f,
            &o,
            &GroebnerConfig::new(Mode::Improved, Engine::Classic),
        )
        .unwrap();
        assert_eq!(classic.basis.generators(), improved.basis.generators());
        assert!(improved.stats.pairs_skipped() > 0);
        assert!(improved.stats.pairs_reduced < classic.stats.pairs_reduced);
    }
}
