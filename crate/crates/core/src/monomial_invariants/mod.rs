//! Homological and enumerative invariants of `S/J` for monomial ideals `J`.
//!
//! Betti numbers come from reduced homology of upper Koszul complexes over
//! the lcm lattice. Ideals are first split into variable-disjoint
//! components whose tables are recombined by Künneth convolution, which
//! keeps block-structured ideals cheap. Depth, projective dimension and
//! regularity are read off the table; dimension comes from vertex covers
//! and is cross-checked against the Hilbert numerator.

mod betti;
mod complex;
mod hilbert;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::Field;
use crate::groebner::MonomialIdeal;
use crate::polyring::Monomial;

pub use betti::{betti_table, kunneth_convolution, BettiEntry, BettiTable, LcmLattice};
pub use complex::{reduced_homology_dims, upper_koszul_complex, SimplicialComplex};
pub use hilbert::{hilbert_numerator, IntPoly};

/// Default cap on lcm-lattice size.
pub const DEFAULT_LATTICE_BUDGET: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("lcm lattice exceeds the budget of {budget} elements")]
    LatticeBudget { budget: usize },
    #[error("ideals share variable x{}", .variable + 1)]
    OverlappingSupports { variable: usize },
    #[error("ring dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("quotient is not Cohen-Macaulay (depth {depth}, dim {dim})")]
    NotCohenMacaulay { depth: usize, dim: usize },
    #[error("(1 - t)^{power} does not divide the Hilbert numerator {numerator}")]
    NotDivisible { power: usize, numerator: IntPoly },
    #[error("Hilbert numerator {found} differs from the certified {certified}")]
    HilbertMismatch { found: IntPoly, certified: IntPoly },
    #[error("internal invariant violated: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvariantConfig {
    pub max_lattice: usize,
}

impl Default for InvariantConfig {
    fn default() -> Self {
        InvariantConfig { max_lattice: DEFAULT_LATTICE_BUDGET }
    }
}

/// Divisibility-minimal generating set.
pub fn minimalize(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
    MonomialIdeal::new(nvars, gens)
}

/// `dim S/J = n - (smallest set of variables meeting every generator)`.
pub fn krull_dimension(ideal: &MonomialIdeal) -> usize {
    let supports: Vec<u64> = ideal
        .generators()
        .iter()
        .map(|g| g.support().fold(0u64, |m, v| m | (1 << v)))
        .collect();
    let mut best = ideal.nvars();
    min_cover(&supports, 0, 0, &mut best);
    ideal.nvars() - best
}

fn min_cover(supports: &[u64], chosen: u64, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    match supports.iter().find(|&&s| s & chosen == 0) {
        None => *best = size,
        Some(&s) => {
            let mut rest = s;
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                min_cover(supports, chosen | (1 << v), size + 1, best);
            }
        }
    }
}

/// Splits `J` into ideals whose generator supports are pairwise disjoint,
/// each living in the ambient ring. The zero ideal has no components.
pub fn components(ideal: &MonomialIdeal) -> Vec<MonomialIdeal> {
    let gens = ideal.generators();
    let mut parent: Vec<usize> = (0..gens.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if !gens[i].is_coprime(&gens[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let roots: BTreeSet<usize> = (0..gens.len()).map(|i| find(&mut parent, i)).collect();
    roots
        .into_iter()
        .map(|r| {
            MonomialIdeal::new(
                ideal.nvars(),
                (0..gens.len()).filter(|&i| find(&mut parent, i) == r).map(|i| gens[i].clone()),
            )
        })
        .collect()
}

/// Betti table assembled from the tables of the connected components.
pub fn betti_table_split<C: Field>(
    ideal: &MonomialIdeal,
    config: &InvariantConfig,
) -> Result<BettiTable, InvariantError> {
    let mut acc = BettiTable::trivial(ideal.nvars());
    for c in components(ideal) {
        acc = kunneth_convolution(&acc, &betti_table::<C>(&c, config)?)?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub dim: usize,
    pub depth: usize,
    pub pd: usize,
    pub reg: i64,
    pub hilbert_numerator: IntPoly,
    pub cohen_macaulay: bool,
}

impl InvariantReport {
    /// Derives the report from a Betti table and checks it against the
    /// independently computed Hilbert numerator and dimension.
    pub fn from_table(ideal: &MonomialIdeal, table: &BettiTable) -> Result<Self, InvariantError> {
        let n = ideal.nvars();
        let pd = table.projective_dimension();
        if pd > n {
            return Err(InvariantError::Inconsistent(format!("pd {pd} exceeds {n} variables")));
        }
        let depth = n - pd;
        let dim = krull_dimension(ideal);
        let numerator = hilbert_numerator(ideal);
        if table.hilbert_numerator() != numerator {
            return Err(InvariantError::Inconsistent(format!(
                "alternating Betti sum {} differs from Hilbert numerator {}",
                table.hilbert_numerator(),
                numerator
            )));
        }
        let root = numerator.root_multiplicity_at_one().unwrap_or(0);
        if n - root != dim {
            return Err(InvariantError::Inconsistent(format!(
                "vertex-cover dimension {dim} disagrees with Hilbert dimension {}",
                n - root
            )));
        }
        if depth > dim {
            return Err(InvariantError::Inconsistent(format!("depth {depth} exceeds dimension {dim}")));
        }
        Ok(InvariantReport {
            n,
            dim,
            depth,
            pd,
            reg: table.regularity(),
            hilbert_numerator: numerator,
            cohen_macaulay: depth == dim,
        })
    }
}

/// Invariants of `S/J`, using component splitting.
pub fn invariant_report<C: Field>(
    ideal: &MonomialIdeal,
    config: &InvariantConfig,
) -> Result<InvariantReport, InvariantError> {
    InvariantReport::from_table(ideal, &betti_table_split::<C>(ideal, config)?)
}

/// Invariants of `S/J` from a single lattice over the whole ideal.
pub fn invariant_report_direct<C: Field>(
    ideal: &MonomialIdeal,
    config: &InvariantConfig,
) -> Result<InvariantReport, InvariantError> {
    InvariantReport::from_table(ideal, &betti_table::<C>(ideal, config)?)
}

/// Hilbert data of a Cohen-Macaulay quotient, as witnessed by a report
/// with `depth == dim`.
///
/// Since `S/I` and `S/in(I)` share a Hilbert series and depth can only drop
/// under degeneration, a Cohen-Macaulay initial ideal certifies that `S/I`
/// is Cohen-Macaulay of the same dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmCertificate {
    n: usize,
    dim: usize,
    numerator: IntPoly,
}

impl CmCertificate {
    pub fn from_report(report: &InvariantReport) -> Result<Self, InvariantError> {
        if !report.cohen_macaulay {
            return Err(InvariantError::NotCohenMacaulay { depth: report.depth, dim: report.dim });
        }
        Ok(CmCertificate { n: report.n, dim: report.dim, numerator: report.hilbert_numerator.clone() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HRegularity {
    pub h_polynomial: IntPoly,
    pub reg: usize,
}

/// `K(t) / (1 - t)^codim`, failing if the division is not exact.
pub fn h_polynomial(numerator: &IntPoly, codim: usize) -> Result<IntPoly, InvariantError> {
    let mut h = numerator.clone();
    for _ in 0..codim {
        h = h
            .div_one_minus_t()
            .ok_or_else(|| InvariantError::NotDivisible { power: codim, numerator: numerator.clone() })?;
    }
    Ok(h)
}

/// Regularity of a Cohen-Macaulay quotient as the degree of its
/// h-polynomial. `ideal` may be any initial ideal of the certified
/// quotient; its Hilbert numerator must match the certificate.
pub fn reg_via_h_polynomial(ideal: &MonomialIdeal, certificate: &CmCertificate) -> Result<HRegularity, InvariantError> {
    if ideal.nvars() != certificate.n {
        return Err(InvariantError::DimensionMismatch { left: ideal.nvars(), right: certificate.n });
    }
    let numerator = hilbert_numerator(ideal);
    if numerator != certificate.numerator {
        return Err(InvariantError::HilbertMismatch { found: numerator, certified: certificate.numerator.clone() });
    }
    let h = h_polynomial(&numerator, certificate.n - certificate.dim)?;
    if h.eval_at_one() == 0 {
        return Err(InvariantError::Inconsistent(format!("h-polynomial {h} vanishes at 1")));
    }
    let reg = h.degree().unwrap_or(0);
    Ok(HRegularity { h_polynomial: h, reg })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn trailing_block() -> MonomialIdeal {
        MonomialIdeal::new(3, [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[1, 0, 1]), m(&[0, 3, 0])])
    }

    fn leading_block() -> MonomialIdeal {
        MonomialIdeal::new(3, [m(&[0, 1, 1]), m(&[0, 0, 2]), m(&[0, 2, 0])])
    }

    #[test]
    fn minimalize_examples() {
        let j = minimalize(2, [m(&[2, 0]), m(&[2, 1]), m(&[0, 3])]);
        assert_eq!(j.generators(), &[m(&[2, 0]), m(&[0, 3])]);
        assert_eq!(minimalize(2, j.generators().to_vec()), j);
        assert!(minimalize(3, []).is_zero());
    }

    #[test]
    fn krull_dimension_examples() {
        assert_eq!(krull_dimension(&trailing_block()), 1);
        assert_eq!(krull_dimension(&MonomialIdeal::zero(3)), 3);
        let maximal = MonomialIdeal::new(3, (0..3).map(|i| Monomial::var(3, i)));
        assert_eq!(krull_dimension(&maximal), 0);
    }

    #[test]
    fn block_reports() {
        let cfg = InvariantConfig::default();
        let r = invariant_report::<Rational>(&leading_block(), &cfg).unwrap();
        assert_eq!((r.dim, r.depth, r.reg, r.cohen_macaulay), (1, 1, 1, true));
        let r = invariant_report::<Rational>(&trailing_block(), &cfg).unwrap();
        assert_eq!((r.dim, r.depth, r.pd, r.reg, r.cohen_macaulay), (1, 0, 3, 2, false));
        let r = invariant_report::<Rational>(&MonomialIdeal::zero(3), &cfg).unwrap();
        assert_eq!((r.dim, r.depth, r.reg, r.cohen_macaulay), (3, 3, 0, true));
    }

    #[test]
    fn kunneth_adds_invariants() {
        let cfg = InvariantConfig::default();
        let a = MonomialIdeal::new(6, [m(&[0, 1, 1, 0, 0, 0]), m(&[0, 0, 2, 0, 0, 0]), m(&[0, 2, 0, 0, 0, 0])]);
        let b = MonomialIdeal::new(
            6,
            [m(&[0, 0, 0, 2, 0, 0]), m(&[0, 0, 0, 1, 1, 0]), m(&[0, 0, 0, 1, 0, 1]), m(&[0, 0, 0, 0, 3, 0])],
        );
        let ta = betti_table::<Rational>(&a, &cfg).unwrap();
        let tb = betti_table::<Rational>(&b, &cfg).unwrap();
        let conv = kunneth_convolution(&ta, &tb).unwrap();
        let union = MonomialIdeal::new(6, a.generators().iter().chain(b.generators()).cloned());
        assert_eq!(conv, betti_table::<Rational>(&union, &cfg).unwrap());
        let r = InvariantReport::from_table(&union, &conv).unwrap();
        assert_eq!((r.dim, r.depth, r.reg), (2, 1, 3));
    }

    #[test]
    fn fresh_variables_add_depth() {
        let cfg = InvariantConfig::default();
        let j = leading_block();
        let wide = MonomialIdeal::new(5, j.generators().iter().map(|g| g.embed(5, 0)));
        let r = invariant_report::<Rational>(&j, &cfg).unwrap();
        let w = invariant_report::<Rational>(&wide, &cfg).unwrap();
        assert_eq!(w.depth, r.depth + 2);
        assert_eq!(w.reg, r.reg);
    }

    #[test]
    fn h_polynomial_route() {
        let cfg = InvariantConfig::default();
        let cm = invariant_report::<Rational>(&leading_block(), &cfg).unwrap();
        let cert = CmCertificate::from_report(&cm).unwrap();
        let hr = reg_via_h_polynomial(&trailing_block(), &cert).unwrap();
        assert_eq!(hr.h_polynomial, IntPoly::new(vec![1, 2]));
        assert_eq!(hr.reg, 1);
        let not_cm = invariant_report::<Rational>(&trailing_block(), &cfg).unwrap();
        assert!(CmCertificate::from_report(&not_cm).is_err());
        let zero = invariant_report::<Rational>(&MonomialIdeal::zero(3), &cfg).unwrap();
        let hz = reg_via_h_polynomial(&MonomialIdeal::zero(3), &CmCertificate::from_report(&zero).unwrap()).unwrap();
        assert_eq!((hz.h_polynomial, hz.reg), (IntPoly::one(), 0));
        assert!(matches!(
            reg_via_h_polynomial(&MonomialIdeal::zero(3), &cert),
            Err(InvariantError::HilbertMismatch { .. })
        ));
    }

    #[test]
    fn components_split_by_shared_variables() {
        let j = MonomialIdeal::new(4, [m(&[1, 1, 0, 0]), m(&[0, 1, 0, 0]), m(&[0, 0, 1, 1]), m(&[0, 0, 2, 0])]);
        let c = components(&j);
        assert_eq!(c.len(), 2);
        assert!(components(&MonomialIdeal::zero(2)).is_empty());
    }
}
