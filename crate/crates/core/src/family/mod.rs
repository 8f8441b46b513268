//! The block family `I = (I_1, ..., I_d)` in `3d` variables, its claimed
//! Gröbner bases and initial ideals, and the end-to-end verifier.
//!
//! Block `i` (1-based) lives on `x_{3i-2}, x_{3i-1}, x_{3i}` and is
//! generated by the three binomials
//! `x_{3i-2}^2 - x_{3i-1}x_{3i}`, `x_{3i-2}x_{3i-1} - x_{3i}^2` and
//! `x_{3i-2}x_{3i} - x_{3i-1}^2`.

mod explore;
mod lattice;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::Field;
use crate::groebner::{
    buchberger, initial_ideal, verify_gb, GbCheck, GroebnerConfig, GroebnerError, MonomialIdeal,
};
use crate::monomial_invariants::{
    betti_table, betti_table_split, invariant_report, reg_via_h_polynomial, CmCertificate, IntPoly,
    InvariantConfig, InvariantError, InvariantReport,
};
use crate::orders::{family_order, MonomialOrder, OrderError};
use crate::polyring::{Ideal, Monomial, Polynomial};

pub use explore::{
    explore_orders, semicontinuity_violations, ExplorationRecord, ExplorationSummary, ExploreConfig, SkippedSample,
};
pub use lattice::{hibi_ideal, incomparable_pairs, DistributiveLattice, LatticeError, DEFAULT_MAX_LATTICE_ELEMENTS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("the number of blocks d must be at least 1")]
    NoBlocks,
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

impl FamilyError {
    /// Whether the failure is a resource budget rather than a wrong result.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            FamilyError::Groebner(GroebnerError::BudgetExceeded { .. })
                | FamilyError::Invariant(InvariantError::LatticeBudget { .. })
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInstance<C> {
    pub d: usize,
    pub ideal: Ideal<C>,
    /// The three generators of each block, in block order.
    pub blocks: Vec<[Polynomial<C>; 3]>,
}

/// Exponent vector over `3d` variables from `(variable index, exponent)`
/// pairs, with 1-based indices.
fn mono(n: usize, powers: &[(usize, u32)]) -> Monomial {
    let mut e = vec![0; n];
    for &(v, p) in powers {
        e[v - 1] += p;
    }
    Monomial::new(e)
}

/// Variable indices `(3i-2, 3i-1, 3i)` of block `i`.
fn block_vars(i: usize) -> (usize, usize, usize) {
    (3 * i - 2, 3 * i - 1, 3 * i)
}

pub fn build_family<C: Field>(d: usize) -> Result<FamilyInstance<C>, FamilyError> {
    if d == 0 {
        return Err(FamilyError::NoBlocks);
    }
    let n = 3 * d;
    let lex = MonomialOrder::lex(n);
    let blocks: Vec<[Polynomial<C>; 3]> = (1..=d)
        .map(|i| {
            let (a, b, c) = block_vars(i);
            [
                Polynomial::binomial(mono(n, &[(a, 2)]), mono(n, &[(b, 1), (c, 1)]), &lex),
                Polynomial::binomial(mono(n, &[(a, 1), (b, 1)]), mono(n, &[(c, 2)]), &lex),
                Polynomial::binomial(mono(n, &[(a, 1), (c, 1)]), mono(n, &[(b, 2)]), &lex),
            ]
        })
        .collect();
    let ideal = Ideal::new(n, blocks.iter().flatten().cloned().collect()).expect("3d variables");
    Ok(FamilyInstance { d, ideal, blocks })
}

/// Which third binomial to use in the trailing blocks of the claimed basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasisVariant {
    /// `x_{3i-2}x_{3i} - x_{3i-1}^2`, matching the trailing initial block.
    Corrected,
    /// `x_{3i-1}x_{3i} - x_{3i}^2`, the uncorrected variant.
    Literal,
}

/// The explicit Gröbner basis of the family under `<_r`: three binomials
/// for each of the first `r` blocks, four for each remaining block.
pub fn claimed_basis<C: Field>(d: usize, r: usize, variant: BasisVariant) -> Result<Vec<Polynomial<C>>, FamilyError> {
    let order = family_order(d, r)?;
    let n = 3 * d;
    let bin = |lead: &[(usize, u32)], trail: &[(usize, u32)]| Polynomial::binomial(mono(n, lead), mono(n, trail), &order);
    let mut out = Vec::with_capacity(3 * r + 4 * (d - r));
    for i in 1..=d {
        let (a, b, c) = block_vars(i);
        if i <= r {
            out.push(bin(&[(b, 1), (c, 1)], &[(a, 2)]));
            out.push(bin(&[(b, 2)], &[(a, 1), (c, 1)]));
            out.push(bin(&[(c, 2)], &[(a, 1), (b, 1)]));
        } else {
            out.push(bin(&[(a, 2)], &[(b, 1), (c, 1)]));
            out.push(bin(&[(a, 1), (b, 1)], &[(c, 2)]));
            out.push(match variant {
                BasisVariant::Corrected => bin(&[(a, 1), (c, 1)], &[(b, 2)]),
                BasisVariant::Literal => bin(&[(b, 1), (c, 1)], &[(c, 2)]),
            });
            out.push(bin(&[(b, 3)], &[(c, 3)]));
        }
    }
    Ok(out)
}

/// `in_{<_r}(I)`: `(x_{3i-1}x_{3i}, x_{3i}^2, x_{3i-1}^2)` on the first `r`
/// blocks and `(x_{3i-2}^2, x_{3i-2}x_{3i-1}, x_{3i-2}x_{3i}, x_{3i-1}^3)` on
/// the rest.
pub fn expected_initial(d: usize, r: usize) -> Result<MonomialIdeal, FamilyError> {
    if d == 0 {
        return Err(FamilyError::NoBlocks);
    }
    if r > d {
        return Err(OrderError::BlockOutOfRange { d, r }.into());
    }
    let n = 3 * d;
    let mut gens = Vec::new();
    for i in 1..=d {
        let (a, b, c) = block_vars(i);
        if i <= r {
            gens.extend([mono(n, &[(b, 1), (c, 1)]), mono(n, &[(c, 2)]), mono(n, &[(b, 2)])]);
        } else {
            gens.extend([
                mono(n, &[(a, 2)]),
                mono(n, &[(a, 1), (b, 1)]),
                mono(n, &[(a, 1), (c, 1)]),
                mono(n, &[(b, 3)]),
            ]);
        }
    }
    Ok(MonomialIdeal::new(n, gens))
}

/// `(1 + 2t)^d`.
pub fn expected_h_polynomial(d: usize) -> IntPoly {
    (0..d).fold(IntPoly::one(), |acc, _| &acc * &IntPoly::new(vec![1, 2]))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    /// Also check the uncorrected variant of the claimed basis.
    pub literal: bool,
    /// Also compute invariants without component splitting and compare.
    pub direct: bool,
    pub groebner: GroebnerConfig,
    pub invariants: InvariantConfig,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiteralCheck {
    pub confirmed: bool,
    pub witness: Option<String>,
}

/// Expected versus computed invariants for one `(d, r)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub d: usize,
    pub r: usize,
    pub order: String,
    pub gb_size: usize,
    pub gb: Vec<String>,
    /// The computed basis passes `verify_gb` against the family ideal.
    pub gb_confirmed: bool,
    /// The computed reduced basis equals the claimed basis as a set.
    pub gb_matches_claimed: bool,
    pub claimed_set_confirmed: bool,
    pub claimed_witness: Option<String>,
    pub literal_check: Option<LiteralCheck>,
    pub initial_ideal: Vec<String>,
    pub initial_matches_expected: bool,
    pub dim: usize,
    pub depth: usize,
    pub pd: usize,
    pub reg: i64,
    pub hilbert_numerator: IntPoly,
    pub expected_dim: usize,
    pub expected_depth: usize,
    pub expected_reg: i64,
    pub h_polynomial: Option<IntPoly>,
    pub expected_h_polynomial: IntPoly,
    pub reg_original: Option<usize>,
    pub expected_reg_original: usize,
    /// Result of the unsplit Betti computation, when requested.
    pub direct_agrees: Option<bool>,
    pub pass: bool,
}

impl VerificationReport {
    fn evaluate(&mut self) {
        self.pass = self.gb_confirmed
            && self.gb_matches_claimed
            && self.claimed_set_confirmed
            && self.initial_matches_expected
            && self.dim == self.expected_dim
            && self.depth == self.expected_depth
            && self.reg == self.expected_reg
            && self.h_polynomial.as_ref() == Some(&self.expected_h_polynomial)
            && self.reg_original == Some(self.expected_reg_original)
            && self.direct_agrees != Some(false);
    }
}

/// A `(d, r)` job that could not finish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunFailure {
    pub r: usize,
    pub error: FamilyError,
}

struct RunData {
    report: VerificationReport,
    initial: MonomialIdeal,
    invariants: InvariantReport,
}

fn witness_string<C: Field>(check: &GbCheck<C>) -> Option<String> {
    check.witness().map(|w| w.to_string())
}

fn run_one<C: Field>(family: &FamilyInstance<C>, r: usize, opts: &VerifyOptions) -> Result<RunData, FamilyError> {
    let d = family.d;
    let order = family_order(d, r)?;
    let gb = buchberger(&family.ideal, &order, &opts.groebner)?;
    let gb_check = verify_gb(gb.elements(), &family.ideal, &order, &opts.groebner)?;
    let claimed = claimed_basis::<C>(d, r, BasisVariant::Corrected)?;
    let claimed_check = verify_gb(&claimed, &family.ideal, &order, &opts.groebner)?;
    let literal_check = if opts.literal {
        let literal = claimed_basis::<C>(d, r, BasisVariant::Literal)?;
        let check = verify_gb(&literal, &family.ideal, &order, &opts.groebner)?;
        Some(LiteralCheck { confirmed: check.is_confirmed(), witness: witness_string(&check) })
    } else {
        None
    };
    let initial = initial_ideal(&gb);
    let expected = expected_initial(d, r)?;
    let invariants = invariant_report::<C>(&initial, &opts.invariants)?;
    let direct_agrees = if opts.direct {
        let split = betti_table_split::<C>(&initial, &opts.invariants)?;
        Some(betti_table::<C>(&initial, &opts.invariants)? == split)
    } else {
        None
    };
    let report = VerificationReport {
        d,
        r,
        order: order.to_string(),
        gb_size: gb.len(),
        gb: gb.elements().iter().map(|g| g.to_string()).collect(),
        gb_confirmed: gb_check.is_confirmed(),
        gb_matches_claimed: gb.matches(&claimed),
        claimed_set_confirmed: claimed_check.is_confirmed(),
        claimed_witness: witness_string(&claimed_check),
        literal_check,
        initial_ideal: initial.generators().iter().map(|g| g.to_string()).collect(),
        initial_matches_expected: initial == expected,
        dim: invariants.dim,
        depth: invariants.depth,
        pd: invariants.pd,
        reg: invariants.reg,
        hilbert_numerator: invariants.hilbert_numerator.clone(),
        expected_dim: d,
        expected_depth: r,
        expected_reg: (2 * d - r) as i64,
        h_polynomial: None,
        expected_h_polynomial: expected_h_polynomial(d),
        reg_original: None,
        expected_reg_original: d,
        direct_agrees,
        pass: false,
    };
    Ok(RunData { report, initial, invariants })
}

/// Runs every order `<_0, ..., <_d` on the family, in parallel.
///
/// The regularity of `S/I` itself is certified through the `r = d` run:
/// its initial ideal is Cohen-Macaulay, so `S/I` is too, and the degree of
/// the shared h-polynomial is `reg(S/I)`. Failed runs are reported in
/// place and do not discard the others.
pub fn verify_theorem<C: Field>(
    d: usize,
    opts: &VerifyOptions,
) -> Result<Vec<Result<VerificationReport, RunFailure>>, FamilyError> {
    let family = build_family::<C>(d)?;
    let runs: Vec<Result<RunData, RunFailure>> = (0..=d)
        .into_par_iter()
        .map(|r| run_one(&family, r, opts).map_err(|error| RunFailure { r, error }))
        .collect();
    let certificate = match &runs[d] {
        Ok(top) => CmCertificate::from_report(&top.invariants).ok(),
        Err(_) => None,
    };
    Ok(runs
        .into_iter()
        .map(|run| {
            run.and_then(|mut data| {
                if let Some(cert) = &certificate {
                    let hr = reg_via_h_polynomial(&data.initial, cert)
                        .map_err(|e| RunFailure { r: data.report.r, error: e.into() })?;
                    data.report.h_polynomial = Some(hr.h_polynomial);
                    data.report.reg_original = Some(hr.reg);
                }
                data.report.evaluate();
                Ok(data.report)
            })
        })
        .collect())
}
