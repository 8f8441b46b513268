//! Monomial orders as comparator values.
//!
//! A [`MonomialOrderSpec`] is an unchecked description; [`validate_order`]
//! turns it into a [`MonomialOrder`], which is guaranteed to be a
//! multiplicative well-order on the monomials of a fixed ring.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyring::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("length mismatch: order is over {expected} variables, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("1 is not minimal: weight vector has a non-positive entry {value} at x{}", .index + 1)]
    NonPositiveWeight { index: usize, value: i64 },
    #[error("lex order is not a permutation of x1..x{0}")]
    NotAPermutation(usize),
    #[error("block index r = {r} out of range 0..={d}")]
    BlockOutOfRange { d: usize, r: usize },
    #[error("the number of blocks must be positive")]
    NoBlocks,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Dot product of the exponent vector with `w`.
pub fn weight_of(m: &Monomial, w: &WeightVector) -> Result<i64, OrderError> {
    if m.nvars() != w.len() {
        return Err(OrderError::LengthMismatch { expected: w.len(), actual: m.nvars() });
    }
    Ok(dot(m, w))
}

fn dot(m: &Monomial, w: &WeightVector) -> i64 {
    m.exponents().iter().zip(&w.0).map(|(&a, &b)| a as i64 * b).sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrderSpec {
    /// Lexicographic order; the first listed variable is the largest.
    Lex(Vec<usize>),
    /// Compare weights first, break ties with `tie`.
    WeightThenTie { weight: WeightVector, tie: Box<MonomialOrderSpec> },
}

impl MonomialOrderSpec {
    pub fn lex(n: usize) -> Self {
        MonomialOrderSpec::Lex((0..n).collect())
    }

    pub fn weight_then(weight: Vec<i64>, tie: MonomialOrderSpec) -> Self {
        MonomialOrderSpec::WeightThenTie { weight: WeightVector(weight), tie: Box::new(tie) }
    }

    fn cmp_unchecked(&self, u: &Monomial, v: &Monomial) -> Ordering {
        match self {
            MonomialOrderSpec::Lex(perm) => {
                for &i in perm {
                    match u.exponents()[i].cmp(&v.exponents()[i]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            MonomialOrderSpec::WeightThenTie { weight, tie } => {
                dot(u, weight).cmp(&dot(v, weight)).then_with(|| tie.cmp_unchecked(u, v))
            }
        }
    }
}

/// `lex` for the identity permutation, `lex:x3>x1>x2` otherwise, and
/// `weight:1,2,2;tie=<spec>` for weight orders.
impl fmt::Display for MonomialOrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrderSpec::Lex(perm) => {
                if perm.iter().enumerate().all(|(k, &i)| k == i) {
                    f.write_str("lex")
                } else {
                    f.write_str("lex:")?;
                    for (k, i) in perm.iter().enumerate() {
                        if k > 0 {
                            f.write_str(">")?;
                        }
                        write!(f, "x{}", i + 1)?;
                    }
                    Ok(())
                }
            }
            MonomialOrderSpec::WeightThenTie { weight, tie } => {
                f.write_str("weight:")?;
                for (k, w) in weight.0.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{w}")?;
                }
                write!(f, ";tie={tie}")
            }
        }
    }
}

/// A validated order on the monomials of `K[x1..xn]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    nvars: usize,
    spec: MonomialOrderSpec,
}

impl MonomialOrder {
    pub fn lex(n: usize) -> Self {
        MonomialOrder { nvars: n, spec: MonomialOrderSpec::lex(n) }
    }

    /// Weight order refined by lex with `x1` largest.
    pub fn weight_then_lex(weight: Vec<i64>) -> Result<Self, OrderError> {
        let n = weight.len();
        validate_order(&MonomialOrderSpec::weight_then(weight, MonomialOrderSpec::lex(n)), n)
    }

    /// Total degree refined by lex.
    pub fn deglex(n: usize) -> Self {
        MonomialOrder::weight_then_lex(vec![1; n]).expect("unit weights are positive")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn spec(&self) -> &MonomialOrderSpec {
        &self.spec
    }

    pub fn cmp(&self, u: &Monomial, v: &Monomial) -> Ordering {
        debug_assert_eq!(u.nvars(), self.nvars);
        debug_assert_eq!(v.nvars(), self.nvars);
        self.spec.cmp_unchecked(u, v)
    }

    pub fn max<'a>(&self, u: &'a Monomial, v: &'a Monomial) -> &'a Monomial {
        if self.cmp(u, v) == Ordering::Less {
            v
        } else {
            u
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.spec.fmt(f)
    }
}

/// Checks the monomial-order axioms for `spec` over `n` variables.
///
/// Lex always passes (given a permutation). A weight order is accepted only
/// when every weight is at least 1, which makes `1` the unique minimum no
/// matter what the tie-break does.
pub fn validate_order(spec: &MonomialOrderSpec, n: usize) -> Result<MonomialOrder, OrderError> {
    match spec {
        MonomialOrderSpec::Lex(perm) => {
            let mut seen = vec![false; n];
            if perm.len() != n {
                return Err(OrderError::NotAPermutation(n));
            }
            for &i in perm {
                if i >= n || seen[i] {
                    return Err(OrderError::NotAPermutation(n));
                }
                seen[i] = true;
            }
        }
        MonomialOrderSpec::WeightThenTie { weight, tie } => {
            if weight.len() != n {
                return Err(OrderError::LengthMismatch { expected: n, actual: weight.len() });
            }
            if let Some((index, &value)) = weight.0.iter().enumerate().find(|(_, &w)| w < 1) {
                return Err(OrderError::NonPositiveWeight { index, value });
            }
            validate_order(tie, n)?;
        }
    }
    Ok(MonomialOrder { nvars: n, spec: spec.clone() })
}

/// Compares under an unchecked spec, validating it first.
pub fn compare(u: &Monomial, v: &Monomial, spec: &MonomialOrderSpec) -> Result<Ordering, OrderError> {
    let order = validate_order(spec, u.nvars())?;
    if v.nvars() != u.nvars() {
        return Err(OrderError::LengthMismatch { expected: u.nvars(), actual: v.nvars() });
    }
    Ok(order.cmp(u, v))
}

/// Weights `(1,2,2)` on the first `r` variable triples and `(1,1,1)` on
/// the remaining `d - r`, over `3d` variables.
pub fn family_weights(d: usize, r: usize) -> Result<Vec<i64>, OrderError> {
    if d == 0 {
        return Err(OrderError::NoBlocks);
    }
    if r > d {
        return Err(OrderError::BlockOutOfRange { d, r });
    }
    let mut w = Vec::with_capacity(3 * d);
    for i in 0..d {
        if i < r {
            w.extend([1, 2, 2]);
        } else {
            w.extend([1, 1, 1]);
        }
    }
    Ok(w)
}

/// The order `<_r` on `K[x1..x3d]`: [`family_weights`] refined by lex
/// with `x1 > x2 > ... > x3d`.
pub fn family_order(d: usize, r: usize) -> Result<MonomialOrder, OrderError> {
    MonomialOrder::weight_then_lex(family_weights(d, r)?)
}
