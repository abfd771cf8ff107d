//! Monomial orderings and the leading-term decomposition of polynomials.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::{Coefficient, Monomial, Polynomial, PowerProduct, Ring};

/// The four supported orderings. Variables are ranked in declaration order,
/// so with ring `(x, y, z)` we have `x > y > z` under every kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Lexicographic: the first differing exponent decides.
    Lex,
    /// Pure reverse lexicographic: the last differing exponent decides and
    /// the smaller exponent wins. Not admissible (`z < 1`), so only usable
    /// as a comparator.
    RevLex,
    /// Total degree, ties broken by [`MonomialOrder::Lex`].
    GrLex,
    /// Total degree, ties broken by the smaller exponent in the last
    /// differing variable.
    GrevLex,
}

impl MonomialOrder {
    pub const ALL: [MonomialOrder; 4] = [Self::Lex, Self::RevLex, Self::GrLex, Self::GrevLex];
    pub const ADMISSIBLE: [MonomialOrder; 3] = [Self::Lex, Self::GrLex, Self::GrevLex];

    pub fn name(self) -> &'static str {
        match self {
            Self::Lex => "lex",
            Self::RevLex => "revlex",
            Self::GrLex => "grlex",
            Self::GrevLex => "grevlex",
        }
    }

    pub fn is_admissible(self) -> bool {
        !matches!(self, Self::RevLex)
    }

    /// Compares two power products of equal arity. Panics on mismatch.
    pub fn cmp(self, t: &PowerProduct, u: &PowerProduct) -> Ordering {
        let (a, b) = (t.exponents(), u.exponents());
        assert_eq!(a.len(), b.len(), "power product arity");
        match self {
            Self::Lex => a.cmp(b),
            Self::RevLex => rev_last_diff(a, b),
            Self::GrLex => t.degree().cmp(&u.degree()).then_with(|| a.cmp(b)),
            Self::GrevLex => t
                .degree()
                .cmp(&u.degree())
                .then_with(|| rev_last_diff(a, b)),
        }
    }
}

// Smaller exponent in the last differing position is the larger element.
fn rev_last_diff(a: &[u32], b: &[u32]) -> Ordering {
    a.iter()
        .zip(b)
        .rev()
        .find(|(x, y)| x != y)
        .map_or(Ordering::Equal, |(x, y)| y.cmp(x))
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "lex" => Ok(Self::Lex),
            "revlex" => Ok(Self::RevLex),
            "grlex" => Ok(Self::GrLex),
            "grevlex" => Ok(Self::GrevLex),
            other => Err(format!(
                "unknown ordering `{other}` (expected lex, revlex, grlex or grevlex)"
            )),
        }
    }
}

/// An ordering kind bound to a ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderingSpec {
    pub kind: MonomialOrder,
    pub ring: Ring,
}

/// `p = lm + rest`, with `lm = lc * lpp` and every power product of `rest`
/// strictly below `lpp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub lpp: PowerProduct,
    pub lc: Coefficient,
    pub lm: Monomial,
    pub rest: Polynomial,
}

impl OrderingSpec {
    pub fn new(kind: MonomialOrder, ring: Ring) -> Self {
        Self { kind, ring }
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn is_admissible(&self) -> bool {
        self.kind.is_admissible()
    }

    pub fn require_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::NonAdmissibleOrdering(self.kind.name()))
        }
    }

    fn check(&self, t: &PowerProduct) -> Result<()> {
        if t.nvars() == self.nvars() {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: self.nvars(),
                found: t.nvars(),
            })
        }
    }

    pub fn compare(&self, t: &PowerProduct, u: &PowerProduct) -> Result<Ordering> {
        self.check(t)?;
        self.check(u)?;
        Ok(self.kind.cmp(t, u))
    }

    /// Greatest power product in the support of `p`.
    pub fn lpp<'a>(&self, p: &'a Polynomial) -> Option<&'a PowerProduct> {
        p.support().max_by(|a, b| self.kind.cmp(a, b))
    }

    pub fn lm(&self, p: &Polynomial) -> Option<Monomial> {
        self.lpp(p).and_then(|t| p.monomial_at(t))
    }

    pub fn decompose(&self, p: &Polynomial) -> Result<Decomposition> {
        self.require_admissible()?;
        if p.nvars() != self.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.nvars(),
                found: p.nvars(),
            });
        }
        let lm = self.lm(p).ok_or(Error::ZeroPolynomial)?;
        let mut rest = p.clone();
        rest.remove_term(&lm.pp);
        Ok(Decomposition {
            lpp: lm.pp.clone(),
            lc: lm.coefficient.clone(),
            lm,
            rest,
        })
    }

    /// Terms of `p` in strictly descending order.
    pub fn sorted_terms(&self, p: &Polynomial) -> Vec<Monomial> {
        let mut terms: Vec<Monomial> = p.monomials().collect();
        terms.sort_by(|a, b| self.kind.cmp(&b.pp, &a.pp));
        terms
    }

    /// Scales `p` so that its leading coefficient is one.
    pub fn monic(&self, p: &Polynomial) -> Polynomial {
        match self.lm(p) {
            Some(lm) => p.scale(&lm.coefficient.recip()),
            None => p.clone(),
        }
    }
}

/// A power product paired with the ordering it sorts under, for use as an
/// ordered-map key.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedPp {
    pub order: MonomialOrder,
    pub pp: PowerProduct,
}

impl OrderedPp {
    pub fn new(order: MonomialOrder, pp: PowerProduct) -> Self {
        Self { order, pp }
    }
}

impl Ord for OrderedPp {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&self.pp, &other.pp)
    }
}

impl PartialOrd for OrderedPp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
