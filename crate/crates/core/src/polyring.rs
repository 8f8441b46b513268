//! Monomials, terms, polynomials and ideals over an exact coefficient field.
//!
//! Polynomials do not remember which monomial order sorted them. Every
//! operation that depends on term order takes the order explicitly, and
//! the entry points of the Gröbner machinery re-canonicalize their inputs.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::Field;
use crate::orders::MonomialOrder;

/// Upper bound on the number of variables of a ring.
pub const DEFAULT_MAX_VARS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("ring dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("ring with {0} variables exceeds the cap of {DEFAULT_MAX_VARS}")]
    TooManyVariables(usize),
    #[error("term has zero coefficient")]
    ZeroCoefficient,
}

/// Exponent vector `x1^a1 * ... * xn^an`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The variable `x_{index+1}`.
    pub fn var(n: usize, index: usize) -> Self {
        let mut e = vec![0; n];
        e[index] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Restriction to a larger ring, placing the exponents at `offset`.
    pub fn embed(&self, n: usize, offset: usize) -> Monomial {
        let mut e = vec![0; n];
        e[offset..offset + self.0.len()].copy_from_slice(&self.0);
        Monomial(e)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Renders as `x1^2*x3`, or `1` for the unit monomial.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term<C> {
    pub coeff: C,
    pub mono: Monomial,
}

impl<C: Field> Term<C> {
    pub fn new(coeff: C, mono: Monomial) -> Result<Self, RingError> {
        if coeff.is_zero() {
            return Err(RingError::ZeroCoefficient);
        }
        Ok(Term { coeff, mono })
    }

    pub fn monomial(mono: Monomial) -> Self {
        Term { coeff: C::one(), mono }
    }
}

/// A polynomial as a strictly descending list of terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<C> {
    nvars: usize,
    terms: Vec<Term<C>>,
}

impl<C: Field> Polynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: Vec::new() }
    }

    /// Builds the canonical form of `sum(terms)` under `order`: like terms
    /// merged, zeros dropped, sorted descending.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (C, Monomial)>,
        order: &MonomialOrder,
    ) -> Result<Self, RingError> {
        let mut raw: Vec<(C, Monomial)> = Vec::new();
        for (c, m) in terms {
            if m.nvars() != nvars {
                return Err(RingError::DimensionMismatch { left: nvars, right: m.nvars() });
            }
            raw.push((c, m));
        }
        raw.sort_by(|a, b| order.cmp(&b.1, &a.1));
        let mut out: Vec<Term<C>> = Vec::with_capacity(raw.len());
        for (c, m) in raw {
            match out.last_mut() {
                Some(last) if last.mono == m => {
                    last.coeff = last.coeff.clone() + c;
                }
                _ => {
                    if let Some(last) = out.last() {
                        if last.coeff.is_zero() {
                            out.pop();
                        }
                    }
                    out.push(Term { coeff: c, mono: m });
                }
            }
        }
        if out.last().is_some_and(|t| t.coeff.is_zero()) {
            out.pop();
        }
        Ok(Polynomial { nvars, terms: out })
    }

    /// `lead - trail`, the binomial shape of every generator in this crate.
    pub fn binomial(lead: Monomial, trail: Monomial, order: &MonomialOrder) -> Self {
        let n = lead.nvars();
        Polynomial::from_terms(n, [(C::one(), lead), (-C::one(), trail)], order)
            .expect("monomials share a ring")
    }

    pub fn from_monomial(mono: Monomial) -> Self {
        Polynomial { nvars: mono.nvars(), terms: vec![Term::monomial(mono)] }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[Term<C>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term<C>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Re-sorts the terms under another order.
    pub fn sorted(&self, order: &MonomialOrder) -> Self {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial { nvars: self.nvars, terms }
    }

    pub fn is_sorted_under(&self, order: &MonomialOrder) -> bool {
        self.terms
            .windows(2)
            .all(|w| order.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|t| t.mono.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn add(&self, other: &Self, order: &MonomialOrder) -> Result<Self, RingError> {
        self.check_ring(other)?;
        Ok(self.merge(other, None, order))
    }

    pub fn sub(&self, other: &Self, order: &MonomialOrder) -> Result<Self, RingError> {
        self.check_ring(other)?;
        Ok(self.merge(other, Some(-C::one()), order))
    }

    pub fn neg(&self) -> Self {
        self.scale(&-C::one())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: t.coeff.clone() * c.clone(), mono: t.mono.clone() })
                .collect(),
        }
    }

    /// Multiplies by a single term. Order-free: monomial orders are
    /// multiplicative, so sortedness is preserved.
    pub fn mul_term(&self, t: &Term<C>) -> Result<Self, RingError> {
        if t.mono.nvars() != self.nvars {
            return Err(RingError::DimensionMismatch { left: self.nvars, right: t.mono.nvars() });
        }
        if t.coeff.is_zero() {
            return Err(RingError::ZeroCoefficient);
        }
        Ok(Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|s| Term { coeff: s.coeff.clone() * t.coeff.clone(), mono: s.mono.mul(&t.mono) })
                .collect(),
        })
    }

    pub fn mul(&self, other: &Self, order: &MonomialOrder) -> Result<Self, RingError> {
        self.check_ring(other)?;
        let mut acc = Polynomial::zero(self.nvars);
        for t in &other.terms {
            acc = acc.merge(&self.mul_term(t)?, None, order);
        }
        Ok(acc)
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    /// `self + factor * other`, both sorted under `order`.
    pub(crate) fn merge(&self, other: &Self, factor: Option<C>, order: &MonomialOrder) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let scaled = |t: &Term<C>| match &factor {
            Some(f) => t.coeff.clone() * f.clone(),
            None => t.coeff.clone(),
        };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match order.cmp(&a.mono, &b.mono) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { coeff: scaled(b), mono: b.mono.clone() });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a.coeff.clone() + scaled(b);
                    if !c.is_zero() {
                        out.push(Term { coeff: c, mono: a.mono.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|b| Term { coeff: scaled(b), mono: b.mono.clone() }));
        Polynomial { nvars: self.nvars, terms: out }
    }

    /// Terms assumed strictly descending under the active order.
    pub(crate) fn from_sorted_terms(nvars: usize, terms: Vec<Term<C>>) -> Self {
        Polynomial { nvars, terms }
    }

    /// Everything but the leading term.
    pub(crate) fn from_sorted_tail(p: &Polynomial<C>) -> Self {
        Polynomial { nvars: p.nvars, terms: p.terms[1..].to_vec() }
    }

    fn check_ring(&self, other: &Self) -> Result<(), RingError> {
        if self.nvars != other.nvars {
            return Err(RingError::DimensionMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }
}

/// Leading term first, e.g. `x2*x3 - x1^2`.
impl<C: Field> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = if neg { -t.coeff.clone() } else { t.coeff.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if t.mono.is_one() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", t.mono)?;
            } else {
                write!(f, "{}*{}", abs, t.mono)?;
            }
        }
        Ok(())
    }
}

/// Generators of an ideal in `K[x1..xn]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ideal<C> {
    nvars: usize,
    generators: Vec<Polynomial<C>>,
}

impl<C: Field> Ideal<C> {
    /// Zero generators are dropped.
    pub fn new(nvars: usize, generators: Vec<Polynomial<C>>) -> Result<Self, RingError> {
        if nvars > DEFAULT_MAX_VARS {
            return Err(RingError::TooManyVariables(nvars));
        }
        for g in &generators {
            if g.nvars() != nvars {
                return Err(RingError::DimensionMismatch { left: nvars, right: g.nvars() });
            }
        }
        Ok(Ideal { nvars, generators: generators.into_iter().filter(|g| !g.is_zero()).collect() })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::orders::MonomialOrder;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn p(terms: &[(i64, &[u32])]) -> Polynomial<Rational> {
        let lex = MonomialOrder::lex(terms[0].1.len());
        Polynomial::from_terms(terms[0].1.len(), terms.iter().map(|(c, e)| (Rational::from_i64(*c), m(e))), &lex)
            .unwrap()
    }

    #[test]
    fn add_cancels() {
        let lex = MonomialOrder::lex(3);
        let a = p(&[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]);
        let b = p(&[(1, &[0, 1, 1]), (-1, &[0, 0, 2])]);
        assert_eq!(a.add(&b, &lex).unwrap(), p(&[(1, &[2, 0, 0]), (-1, &[0, 0, 2])]));
        assert_eq!(a.add(&Polynomial::zero(3), &lex).unwrap(), a);
        let c = p(&[(1, &[1, 1, 0]), (-1, &[0, 0, 2])]);
        assert!(c.add(&c.neg(), &lex).unwrap().is_zero());
        assert!(a.add(&Polynomial::zero(2), &lex).is_err());
    }

    #[test]
    fn multiply_by_term() {
        let lex = MonomialOrder::lex(3);
        let f = p(&[(1, &[0, 2, 0]), (-1, &[1, 0, 1])]);
        let g = f.mul_term(&Term::monomial(m(&[1, 0, 0]))).unwrap();
        assert_eq!(g, p(&[(1, &[1, 2, 0]), (-1, &[2, 0, 1])]));
        assert!(g.is_sorted_under(&lex));
        assert_eq!(f.mul_term(&Term::monomial(Monomial::one(3))).unwrap(), f);
        assert!(Polynomial::<Rational>::zero(3).mul_term(&Term::monomial(m(&[1, 0, 0]))).unwrap().is_zero());
    }

    #[test]
    fn homogeneity() {
        assert!(p(&[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]).is_homogeneous());
        assert!(p(&[(1, &[0, 3, 0]), (-1, &[0, 0, 3])]).is_homogeneous());
        assert!(!p(&[(1, &[1, 0]), (1, &[0, 2])]).is_homogeneous());
    }

    #[test]
    fn display() {
        let f = p(&[(-1, &[0, 1, 1]), (1, &[2, 0, 0])]);
        assert_eq!(f.to_string(), "x1^2 - x2*x3");
        let g = p(&[(3, &[0, 0, 0]), (-2, &[0, 1, 0])]);
        assert_eq!(g.to_string(), "-2*x2 + 3");
        assert_eq!(Monomial::one(2).to_string(), "1");
    }

    #[test]
    fn monomial_arithmetic() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 3, 1]);
        assert_eq!(a.lcm(&b), m(&[2, 3, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 1, 0]));
        assert_eq!(a.div(&m(&[1, 1, 0])), Some(m(&[1, 0, 0])));
        assert_eq!(a.div(&b), None);
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 2, 1])));
    }
}
