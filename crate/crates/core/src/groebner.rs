//! Division, S-polynomials, Buchberger completion and initial ideals.

use std::cmp::{Ordering, Reverse};
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::Field;
use crate::orders::MonomialOrder;
use crate::polyring::{Ideal, Monomial, Polynomial, RingError, Term};

/// Default cap on S-pair reductions per Buchberger run.
pub const DEFAULT_PAIR_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("pair-reduction budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("order is over {order} variables but the ideal has {ring}")]
    OrderMismatch { order: usize, ring: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerConfig {
    pub max_pair_reductions: u64,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { max_pair_reductions: DEFAULT_PAIR_BUDGET }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<C> {
    order: MonomialOrder,
    elements: Vec<Polynomial<C>>,
    reduced: bool,
}

impl<C: Field> GroebnerBasis<C> {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Monic, sorted by ascending leading monomial.
    pub fn elements(&self) -> &[Polynomial<C>] {
        &self.elements
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Whether `polys`, made monic and sorted, is exactly this basis.
    pub fn matches(&self, polys: &[Polynomial<C>]) -> bool {
        canonical_set(polys, &self.order) == self.elements
    }
}

/// Monic, sorted under `order`, ordered by ascending leading monomial.
pub fn canonical_set<C: Field>(polys: &[Polynomial<C>], order: &MonomialOrder) -> Vec<Polynomial<C>> {
    let mut v: Vec<Polynomial<C>> =
        polys.iter().filter(|p| !p.is_zero()).map(|p| p.sorted(order).monic()).collect();
    v.sort_by(|a, b| cmp_leading(a, b, order));
    v.dedup();
    v
}

fn cmp_leading<C: Field>(a: &Polynomial<C>, b: &Polynomial<C>, order: &MonomialOrder) -> Ordering {
    for (s, t) in a.terms().iter().zip(b.terms()) {
        match order.cmp(&s.mono, &t.mono) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// A minimal monomial ideal: no generator divides another.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `gens`. Generators are kept sorted by degree, then by
    /// descending exponent vector.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        debug_assert!(all.iter().all(|m| m.nvars() == nvars));
        all.sort_by_key(|m| (m.degree(), Reverse(m.clone())));
        all.dedup();
        let mut generators: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            if !generators.iter().any(|g| g.divides(&m)) {
                generators.push(m);
            }
        }
        MonomialIdeal { nvars, generators }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, generators: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// The colon ideal `(self : m)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(
            self.nvars,
            self.generators.iter().map(|g| g.div(&g.gcd(m)).expect("gcd divides")),
        )
    }

    pub fn with_generator(&self, m: Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.generators.iter().cloned().chain([m]))
    }

    /// The lcm of all generators; `1` for the zero ideal.
    pub fn lcm_all(&self) -> Monomial {
        self.generators.iter().fold(Monomial::one(self.nvars), |acc, g| acc.lcm(g))
    }

    /// Variables that occur in some generator.
    pub fn support(&self) -> BTreeSet<usize> {
        self.generators.iter().flat_map(|g| g.support().collect::<Vec<_>>()).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// Remainder of `p` on division by `divisors`. Divisors are tried in the
/// given order; every term of the result is reduced.
pub fn normal_form<C: Field>(
    p: &Polynomial<C>,
    divisors: &[Polynomial<C>],
    order: &MonomialOrder,
) -> Polynomial<C> {
    let divisors: Vec<Polynomial<C>> =
        divisors.iter().filter(|g| !g.is_zero()).map(|g| g.sorted(order)).collect();
    reduce(&p.sorted(order), &divisors, order)
}

/// Full reduction, with all inputs already sorted under `order`.
fn reduce<C: Field>(p: &Polynomial<C>, divisors: &[Polynomial<C>], order: &MonomialOrder) -> Polynomial<C> {
    let n = p.nvars();
    let mut rest = p.clone();
    let mut remainder: Vec<Term<C>> = Vec::new();
    while let Some(lt) = rest.leading_term().cloned() {
        let hit = divisors.iter().find_map(|g| {
            let glt = g.leading_term().expect("nonzero divisor");
            lt.mono.div(&glt.mono).map(|q| (g, glt, q))
        });
        match hit {
            Some((g, glt, q)) => {
                let factor = Term { coeff: lt.coeff.div(&glt.coeff), mono: q };
                let shifted = g.mul_term(&factor).expect("same ring");
                rest = rest.merge(&shifted, Some(-C::one()), order);
            }
            None => {
                remainder.push(lt);
                rest = Polynomial::from_sorted_tail(&rest);
            }
        }
    }
    Polynomial::from_sorted_terms(n, remainder)
}

/// `lcm/LT(f) * f - lcm/LT(g) * g`.
pub fn s_polynomial<C: Field>(f: &Polynomial<C>, g: &Polynomial<C>, order: &MonomialOrder) -> Polynomial<C> {
    spoly(&f.sorted(order), &g.sorted(order), order)
}

fn spoly<C: Field>(f: &Polynomial<C>, g: &Polynomial<C>, order: &MonomialOrder) -> Polynomial<C> {
    let (ft, gt) = (f.leading_term().expect("nonzero"), g.leading_term().expect("nonzero"));
    let l = ft.mono.lcm(&gt.mono);
    let a = f
        .mul_term(&Term { coeff: ft.coeff.inv(), mono: l.div(&ft.mono).expect("lcm") })
        .expect("same ring");
    let b = g
        .mul_term(&Term { coeff: gt.coeff.inv(), mono: l.div(&gt.mono).expect("lcm") })
        .expect("same ring");
    a.merge(&b, Some(-C::one()), order)
}

/// Reduced Gröbner basis of `ideal` under `order`.
///
/// Pairs are taken by the normal strategy (smallest lcm first, ties by
/// index). The product criterion and Buchberger's chain criterion discard
/// pairs before reduction.
pub fn buchberger<C: Field>(
    ideal: &Ideal<C>,
    order: &MonomialOrder,
    config: &GroebnerConfig,
) -> Result<GroebnerBasis<C>, GroebnerError> {
    if order.nvars() != ideal.nvars() {
        return Err(GroebnerError::OrderMismatch { order: order.nvars(), ring: ideal.nvars() });
    }
    let mut basis: Vec<Polynomial<C>> = Vec::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for g in ideal.generators() {
        let g = g.sorted(order).monic();
        if g.is_zero() {
            continue;
        }
        let k = basis.len();
        basis.push(g);
        pending.extend((0..k).map(|i| (i, k)));
    }

    let mut reductions = 0u64;
    while let Some(&(i, j)) = pending.iter().min_by(|a, b| {
        let la = pair_lcm(&basis, **a);
        let lb = pair_lcm(&basis, **b);
        order.cmp(&la, &lb).then_with(|| a.cmp(b))
    }) {
        pending.remove(&(i, j));
        let (li, lj) = (lm(&basis[i]), lm(&basis[j]));
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis[k]).divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        reductions += 1;
        if reductions > config.max_pair_reductions {
            return Err(GroebnerError::BudgetExceeded { budget: config.max_pair_reductions });
        }
        let h = reduce(&spoly(&basis[i], &basis[j], order), &basis, order);
        if !h.is_zero() {
            let k = basis.len();
            basis.push(h.monic());
            pending.extend((0..k).map(|i| (i, k)));
        }
    }

    Ok(GroebnerBasis { order: order.clone(), elements: interreduce(basis, order), reduced: true })
}

fn lm<C: Field>(p: &Polynomial<C>) -> &Monomial {
    p.leading_monomial().expect("basis elements are nonzero")
}

fn pair_lcm<C: Field>(basis: &[Polynomial<C>], (i, j): (usize, usize)) -> Monomial {
    lm(&basis[i]).lcm(lm(&basis[j]))
}

/// Turns a Gröbner basis into the reduced one.
fn interreduce<C: Field>(basis: Vec<Polynomial<C>>, order: &MonomialOrder) -> Vec<Polynomial<C>> {
    let mut minimal: Vec<Polynomial<C>> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let m = lm(g);
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            let hm = lm(h);
            l != k && hm.divides(m) && (hm != m || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<Polynomial<C>> = (0..minimal.len())
        .map(|k| {
            let g = &minimal[k];
            let others: Vec<Polynomial<C>> =
                minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, h)| h.clone()).collect();
            let lead = Polynomial::from_sorted_terms(g.nvars(), vec![g.leading_term().unwrap().clone()]);
            let tail = reduce(&Polynomial::from_sorted_tail(g), &others, order);
            lead.merge(&tail, None, order).monic()
        })
        .collect();
    out.sort_by(|a, b| cmp_leading(a, b, order));
    out
}

/// Why a claimed Gröbner basis was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness<C> {
    /// A claimed element that is not in the ideal.
    NotInIdeal { element: Polynomial<C>, remainder: Polynomial<C> },
    /// A generator of the ideal with nonzero remainder over the claimed set.
    GeneratorNotReduced { generator: Polynomial<C>, remainder: Polynomial<C> },
    /// An S-pair of claimed elements with nonzero remainder.
    SPairNonzero { left: Polynomial<C>, right: Polynomial<C>, remainder: Polynomial<C> },
}

impl<C: Field> fmt::Display for Witness<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::NotInIdeal { element, remainder } => {
                write!(f, "{element} is not in the ideal (remainder {remainder})")
            }
            Witness::GeneratorNotReduced { generator, remainder } => {
                write!(f, "generator {generator} has remainder {remainder}")
            }
            Witness::SPairNonzero { left, right, remainder } => {
                write!(f, "S({left}, {right}) has remainder {remainder}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GbCheck<C> {
    Confirmed,
    Refuted(Witness<C>),
}

impl<C> GbCheck<C> {
    pub fn is_confirmed(&self) -> bool {
        matches!(self, GbCheck::Confirmed)
    }

    pub fn witness(&self) -> Option<&Witness<C>> {
        match self {
            GbCheck::Confirmed => None,
            GbCheck::Refuted(w) => Some(w),
        }
    }
}

/// Machine check that `claimed` is a Gröbner basis of `ideal` under `order`.
///
/// Checks, in this order: every claimed element lies in the ideal (via a
/// freshly computed basis), every generator reduces to zero over `claimed`,
/// and every S-pair of `claimed` reduces to zero over `claimed`.
pub fn verify_gb<C: Field>(
    claimed: &[Polynomial<C>],
    ideal: &Ideal<C>,
    order: &MonomialOrder,
    config: &GroebnerConfig,
) -> Result<GbCheck<C>, GroebnerError> {
    let reference = buchberger(ideal, order, config)?;
    let claimed: Vec<Polynomial<C>> =
        claimed.iter().filter(|p| !p.is_zero()).map(|p| p.sorted(order)).collect();
    for c in &claimed {
        if c.nvars() != ideal.nvars() {
            return Err(RingError::DimensionMismatch { left: ideal.nvars(), right: c.nvars() }.into());
        }
        let r = reduce(c, reference.elements(), order);
        if !r.is_zero() {
            return Ok(GbCheck::Refuted(Witness::NotInIdeal { element: c.clone(), remainder: r }));
        }
    }
    for g in ideal.generators() {
        let r = reduce(&g.sorted(order), &claimed, order);
        if !r.is_zero() {
            return Ok(GbCheck::Refuted(Witness::GeneratorNotReduced { generator: g.sorted(order), remainder: r }));
        }
    }
    for i in 0..claimed.len() {
        for j in i + 1..claimed.len() {
            let r = reduce(&spoly(&claimed[i], &claimed[j], order), &claimed, order);
            if !r.is_zero() {
                return Ok(GbCheck::Refuted(Witness::SPairNonzero {
                    left: claimed[i].clone(),
                    right: claimed[j].clone(),
                    remainder: r,
                }));
            }
        }
    }
    Ok(GbCheck::Confirmed)
}

/// Minimal generators of the leading monomials of `basis`.
pub fn initial_ideal<C: Field>(basis: &GroebnerBasis<C>) -> MonomialIdeal {
    MonomialIdeal::new(basis.nvars(), basis.elements().iter().map(|g| lm(g).clone()))
}

pub fn ideal_member<C: Field>(p: &Polynomial<C>, basis: &GroebnerBasis<C>) -> bool {
    reduce(&p.sorted(basis.order()), basis.elements(), basis.order()).is_zero()
}
