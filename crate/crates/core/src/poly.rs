//! Exact multivariate polynomials over the rationals.
//!
//! A [`Polynomial`] is a sparse map from [`PowerProduct`] to a nonzero
//! [`Coefficient`]. Zero coefficients are never stored, so structural
//! equality is mathematical equality. The map is kept in the natural
//! exponent-vector order, which is *not* a monomial ordering in general;
//! ordered views live in [`crate::ordering`].
//!
//! Binary operations come in two flavours: `try_*` methods that report
//! arity mismatches and exponent overflow as [`Error`]s, and the plain
//! methods / operator impls which panic on the same conditions. Algorithms
//! validate arity once at their entry points and then use the plain forms.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient, always stored in lowest terms with a positive
/// denominator.
pub type Coefficient = BigRational;

/// Builds the coefficient `n`.
pub fn int(n: i64) -> Coefficient {
    BigRational::from_integer(BigInt::from(n))
}

/// Builds the coefficient `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Coefficient {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// An ordered list of distinct variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    variables: Arc<[String]>,
}

impl Ring {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let variables: Vec<String> = names.into_iter().map(Into::into).collect();
        if variables.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        for (i, v) in variables.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if variables[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Self {
            variables: variables.into(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// The power product consisting of the single variable at `index`.
    pub fn var(&self, index: usize) -> PowerProduct {
        let mut e = vec![0; self.nvars()];
        e[index] = 1;
        PowerProduct(e)
    }
}

fn check_arity(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::ArityMismatch { expected, found })
    }
}

/// A product of variables, stored as one exponent per ring variable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PowerProduct(Vec<u32>);

impl PowerProduct {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    /// The unit power product `1`.
    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// `true` iff `self` divides `other`.
    pub fn try_divides(&self, other: &Self) -> Result<bool> {
        check_arity(self.nvars(), other.nvars())?;
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a <= b))
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.try_divides(other).expect("power product arity")
    }

    /// `self / divisor`, defined only when `divisor | self`.
    pub fn try_div(&self, divisor: &Self) -> Result<Self> {
        check_arity(self.nvars(), divisor.nvars())?;
        self.0
            .iter()
            .zip(&divisor.0)
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::NotDivisible))
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub fn div(&self, divisor: &Self) -> Option<Self> {
        match self.try_div(divisor) {
            Ok(q) => Some(q),
            Err(Error::NotDivisible) => None,
            Err(e) => panic!("{e}"),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        check_arity(self.nvars(), other.nvars())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_lcm(&self, other: &Self) -> Result<Self> {
        check_arity(self.nvars(), other.nvars())?;
        Ok(Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        ))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        self.try_lcm(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// `true` iff no variable occurs in both.
    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl fmt::Debug for PowerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `coefficient * pp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coefficient: Coefficient,
    pub pp: PowerProduct,
}

impl Monomial {
    pub fn new(coefficient: Coefficient, pp: PowerProduct) -> Self {
        Self { coefficient, pp }
    }
}

/// A polynomial in canonical sparse form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<PowerProduct, Coefficient>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coefficient::one())
    }

    pub fn constant(nvars: usize, c: Coefficient) -> Self {
        Self::from_monomial(nvars, Monomial::new(c, PowerProduct::one(nvars)))
    }

    /// Single-term polynomial; a zero coefficient yields the zero polynomial.
    pub fn from_monomial(nvars: usize, m: Monomial) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(m.pp, m.coefficient);
        p
    }

    /// Sums the given terms. Repeated power products are combined.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (PowerProduct, Coefficient)>,
    {
        let mut p = Self::zero(nvars);
        for (pp, c) in terms {
            check_arity(nvars, pp.nvars())?;
            p.add_term(pp, c);
        }
        Ok(p)
    }

    /// Convenience constructor from `(coefficient, exponents)` pairs.
    pub fn from_int_terms(nvars: usize, terms: &[(i64, &[u32])]) -> Result<Self> {
        Self::from_terms(
            nvars,
            terms
                .iter()
                .map(|(c, e)| (PowerProduct::new(e.to_vec()), int(*c))),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `C(p, t)`: zero when `t` is outside the support.
    pub fn coefficient(&self, t: &PowerProduct) -> Coefficient {
        self.terms.get(t).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn contains(&self, t: &PowerProduct) -> bool {
        self.terms.contains_key(t)
    }

    /// `M(p, t)`, if `t` is in the support.
    pub fn monomial_at(&self, t: &PowerProduct) -> Option<Monomial> {
        self.terms
            .get(t)
            .map(|c| Monomial::new(c.clone(), t.clone()))
    }

    pub fn support(&self) -> impl Iterator<Item = &PowerProduct> {
        self.terms.keys()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, PowerProduct, Coefficient> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms
            .iter()
            .map(|(t, c)| Monomial::new(c.clone(), t.clone()))
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(PowerProduct::degree).max()
    }

    /// Adds `c * pp` in place, removing the entry if it cancels.
    pub fn add_term(&mut self, pp: PowerProduct, c: Coefficient) {
        debug_assert_eq!(pp.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(pp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Removes the term at `t`, returning its coefficient.
    pub fn remove_term(&mut self, t: &PowerProduct) -> Option<Coefficient> {
        self.terms.remove(t)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_arity(self.nvars, other.nvars)?;
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        check_arity(self.nvars, other.nvars)?;
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, d)| (t.clone(), d * c)).collect(),
        }
    }

    pub fn try_mul_monomial(&self, m: &Monomial) -> Result<Self> {
        check_arity(self.nvars, m.pp.nvars())?;
        if m.coefficient.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        // Multiplication by a monomial is injective on power products, so no
        // two terms collide and no coefficient becomes zero.
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| Ok((t.try_mul(&m.pp)?, c * &m.coefficient)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Self {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        self.try_mul_monomial(m).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        check_arity(self.nvars, other.nvars)?;
        let mut out = Self::zero(self.nvars);
        for (t, c) in &other.terms {
            for (u, d) in &self.terms {
                out.add_term(u.try_mul(t)?, c * d);
            }
        }
        Ok(out)
    }

    /// `self += c * t * other`.
    pub fn add_scaled_shifted(&mut self, c: &Coefficient, t: &PowerProduct, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (u, d) in &other.terms {
            self.add_term(u.mul(t), c * d);
        }
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pp(e: &[u32]) -> PowerProduct {
        PowerProduct::new(e.to_vec())
    }

    pub(crate) fn arb_pp(nvars: usize, max_exp: u32) -> impl Strategy<Value = PowerProduct> {
        proptest::collection::vec(0..=max_exp, nvars).prop_map(PowerProduct::new)
    }

    pub(crate) fn arb_poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((arb_pp(nvars, 3), -5i64..=5, 1i64..=3), 0..6).prop_map(
            move |ts| {
                Polynomial::from_terms(nvars, ts.into_iter().map(|(t, n, d)| (t, ratio(n, d))))
                    .unwrap()
            },
        )
    }

    fn canonical(p: &Polynomial) -> bool {
        p.terms().all(|(_, c)| !c.is_zero())
    }

    #[test]
    fn divisibility() {
        // x^2 | x^3, x^2 does not divide xy, 1 divides everything
        assert!(pp(&[2, 0]).divides(&pp(&[3, 0])));
        assert!(!pp(&[2, 0]).divides(&pp(&[1, 1])));
        assert!(PowerProduct::one(2).divides(&pp(&[4, 7])));
        assert_eq!(
            pp(&[1]).try_divides(&pp(&[1, 0])),
            Err(Error::ArityMismatch {
                expected: 1,
                found: 2
            })
        );
    }

    #[test]
    fn division() {
        assert_eq!(pp(&[3, 0]).div(&pp(&[2, 0])), Some(pp(&[1, 0])));
        assert_eq!(pp(&[2, 5]).div(&pp(&[2, 5])), Some(PowerProduct::one(2)));
        assert_eq!(pp(&[2, 1]).div(&pp(&[1, 0])), Some(pp(&[1, 1])));
        assert_eq!(pp(&[1, 1]).try_div(&pp(&[2, 0])), Err(Error::NotDivisible));
    }

    #[test]
    fn mul_and_lcm() {
        assert_eq!(pp(&[2, 0]).lcm(&pp(&[1, 0])), pp(&[2, 0]));
        assert_eq!(pp(&[2, 1]).lcm(&pp(&[1, 2])), pp(&[2, 2]));
        assert_eq!(pp(&[1, 0]).mul(&pp(&[1, 1])), pp(&[2, 1]));
        assert_eq!(
            pp(&[u32::MAX]).try_mul(&pp(&[1])),
            Err(Error::ExponentOverflow)
        );
    }

    #[test]
    fn lcm_is_least_common_multiple() {
        // brute force: smallest common multiple among all candidates in a box
        let a = pp(&[2, 0, 1]);
        let b = pp(&[1, 3, 0]);
        let l = a.lcm(&b);
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..3 {
                    let c = pp(&[i, j, k]);
                    if a.divides(&c) && b.divides(&c) {
                        assert!(l.divides(&c));
                    }
                }
            }
        }
        assert!(a.divides(&l) && b.divides(&l));
    }

    #[test]
    fn arithmetic_examples() {
        let x_plus_y = Polynomial::from_int_terms(2, &[(1, &[1, 0]), (1, &[0, 1])]).unwrap();
        let x_minus_y = Polynomial::from_int_terms(2, &[(1, &[1, 0]), (-1, &[0, 1])]).unwrap();
        assert_eq!(
            &x_plus_y + &x_minus_y,
            Polynomial::from_int_terms(2, &[(2, &[1, 0])]).unwrap()
        );
        assert!(x_plus_y.scale(&int(0)).is_zero());

        // g - x*f1 with g = x^3 + x^2y + 2y, f1 = x^2 + x - y
        let g = Polynomial::from_int_terms(2, &[(1, &[3, 0]), (1, &[2, 1]), (2, &[0, 1])]).unwrap();
        let f1 =
            Polynomial::from_int_terms(2, &[(1, &[2, 0]), (1, &[1, 0]), (-1, &[0, 1])]).unwrap();
        let h = &g - &f1.mul_monomial(&Monomial::new(int(1), pp(&[1, 0])));
        let expected = Polynomial::from_int_terms(
            2,
            &[(1, &[2, 1]), (-1, &[2, 0]), (1, &[1, 1]), (2, &[0, 1])],
        )
        .unwrap();
        assert_eq!(h, expected);
    }

    #[test]
    fn arity_errors() {
        let a = Polynomial::one(2);
        let b = Polynomial::one(3);
        assert!(matches!(a.try_add(&b), Err(Error::ArityMismatch { .. })));
        assert!(matches!(
            Polynomial::from_terms(2, [(pp(&[1]), int(1))]),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn ring_validation() {
        assert!(Ring::new(["x", "y"]).is_ok());
        assert!(Ring::new(["x", "x"]).is_err());
        assert!(Ring::new(Vec::<String>::new()).is_err());
    }

    proptest! {
        #[test]
        fn ops_stay_canonical(p in arb_poly(3), q in arb_poly(3), t in arb_pp(3, 2), n in -3i64..=3) {
            let m = Monomial::new(int(n), t);
            for r in [&p + &q, &p - &q, p.scale(&int(n)), p.mul_monomial(&m), &p * &q] {
                prop_assert!(canonical(&r));
            }
        }

        #[test]
        fn ring_laws(p in arb_poly(3), q in arb_poly(3), r in arb_poly(3), t in arb_pp(3, 2), n in -3i64..=3) {
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            let m = Monomial::new(int(n), t);
            prop_assert_eq!((&p + &q).mul_monomial(&m), &p.mul_monomial(&m) + &q.mul_monomial(&m));
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn divides_iff_quotient(t in arb_pp(3, 3), u in arb_pp(3, 3)) {
            match u.div(&t) {
                Some(q) => {
                    prop_assert!(t.divides(&u));
                    prop_assert_eq!(q.mul(&t), u);
                }
                None => prop_assert!(!t.divides(&u)),
            }
        }
    }
}
