//! Random search over weight orders, recording the invariants of each
//! distinct initial ideal reached.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::groebner::{buchberger, initial_ideal, GroebnerConfig, MonomialIdeal};
use crate::monomial_invariants::{invariant_report, InvariantConfig};
use crate::orders::MonomialOrder;
use crate::polyring::Ideal;

use super::FamilyError;

#[derive(Debug, Clone, Copy)]
pub struct ExploreConfig {
    pub samples: usize,
    /// Weights are drawn uniformly from `1..=weight_bound`.
    pub weight_bound: i64,
    pub seed: u64,
    pub groebner: GroebnerConfig,
    pub invariants: InvariantConfig,
}

impl Default for ExploreConfig {
    fn default() -> Self {
        ExploreConfig {
            samples: 200,
            weight_bound: 5,
            seed: 0,
            groebner: GroebnerConfig::default(),
            invariants: InvariantConfig::default(),
        }
    }
}

/// First sample reaching a given initial ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplorationRecord {
    pub sample: usize,
    pub weights: Vec<i64>,
    pub order: String,
    pub initial_ideal: Vec<String>,
    pub squarefree: bool,
    pub dim: usize,
    pub depth: usize,
    pub reg: i64,
    /// How many samples reached this initial ideal.
    pub hits: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedSample {
    pub sample: usize,
    pub weights: Vec<i64>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplorationSummary {
    pub samples: usize,
    pub seed: u64,
    pub weight_bound: i64,
    pub records: Vec<ExplorationRecord>,
    pub skipped: Vec<SkippedSample>,
}

impl ExplorationSummary {
    pub fn min_depth(&self) -> Option<usize> {
        self.records.iter().map(|r| r.depth).min()
    }

    pub fn max_reg(&self) -> Option<i64> {
        self.records.iter().map(|r| r.reg).max()
    }
}

/// Samples weight vectors `w` with entries in `1..=weight_bound`, computes
/// `in_w(I)` under `w` refined by lex, and keeps one record per distinct
/// initial ideal in sample order. Samples that exceed a budget are listed
/// in `skipped`; other errors abort the run.
pub fn explore_orders<C: Field>(ideal: &Ideal<C>, config: &ExploreConfig) -> Result<ExplorationSummary, FamilyError> {
    let n = ideal.nvars();
    let bound = config.weight_bound.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let draws: Vec<Vec<i64>> = (0..config.samples)
        .map(|_| (0..n).map(|_| rng.random_range(1..=bound)).collect())
        .collect();

    type Outcome = Result<(MonomialIdeal, String, usize, usize, i64), FamilyError>;
    let outcomes: Vec<Outcome> = draws
        .par_iter()
        .map(|w| {
            let order = MonomialOrder::weight_then_lex(w.clone())?;
            let gb = buchberger(ideal, &order, &config.groebner)?;
            let init = initial_ideal(&gb);
            let rep = invariant_report::<C>(&init, &config.invariants)?;
            Ok((init, order.to_string(), rep.dim, rep.depth, rep.reg))
        })
        .collect();

    let mut seen: BTreeMap<Vec<Vec<u32>>, usize> = BTreeMap::new();
    let mut records: Vec<ExplorationRecord> = Vec::new();
    let mut skipped = Vec::new();
    for (sample, (w, outcome)) in draws.into_iter().zip(outcomes).enumerate() {
        match outcome {
            Ok((init, order, dim, depth, reg)) => {
                let key: Vec<Vec<u32>> = init.generators().iter().map(|g| g.exponents().to_vec()).collect();
                if let Some(&k) = seen.get(&key) {
                    records[k].hits += 1;
                    continue;
                }
                seen.insert(key, records.len());
                records.push(ExplorationRecord {
                    sample,
                    weights: w,
                    order,
                    squarefree: init.generators().iter().all(|g| g.is_squarefree()),
                    initial_ideal: init.generators().iter().map(|g| g.to_string()).collect(),
                    dim,
                    depth,
                    reg,
                    hits: 1,
                });
            }
            Err(e) if e.is_budget() => skipped.push(SkippedSample { sample, weights: w, reason: e.to_string() }),
            Err(e) => return Err(e),
        }
    }
    Ok(ExplorationSummary {
        samples: config.samples,
        seed: config.seed,
        weight_bound: bound,
        records,
        skipped,
    })
}

/// Records with `depth > max_depth` or `reg < min_reg`: a Gröbner
/// degeneration can only lower depth and raise regularity.
pub fn semicontinuity_violations(
    summary: &ExplorationSummary,
    max_depth: usize,
    min_reg: i64,
) -> Vec<&ExplorationRecord> {
    summary.records.iter().filter(|r| r.depth > max_depth || r.reg < min_reg).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, hibi_ideal, DistributiveLattice};
    use crate::field::Rational;

    #[test]
    fn one_block_reaches_both_depths() {
        let family = build_family::<Rational>(1).unwrap();
        let cfg = ExploreConfig { samples: 60, seed: 7, ..Default::default() };
        let s = explore_orders(&family.ideal, &cfg).unwrap();
        let depths: std::collections::BTreeSet<usize> = s.records.iter().map(|r| r.depth).collect();
        assert!(depths.is_subset(&[0, 1].into()));
        assert!(semicontinuity_violations(&s, 1, 1).is_empty());
        assert_eq!(s.records.iter().map(|r| r.hits).sum::<usize>() + s.skipped.len(), 60);
        assert_eq!(s, explore_orders(&family.ideal, &cfg).unwrap());
    }

    #[test]
    fn zero_ideal_gives_one_record() {
        let z = Ideal::<Rational>::new(3, vec![]).unwrap();
        let s = explore_orders(&z, &ExploreConfig { samples: 10, ..Default::default() }).unwrap();
        assert_eq!(s.records.len(), 1);
        assert_eq!((s.records[0].depth, s.records[0].reg), (3, 0));
    }

    #[test]
    fn square_lattice_initial_ideals_are_squarefree() {
        let i = hibi_ideal::<Rational>(&DistributiveLattice::boolean(2).unwrap());
        let s = explore_orders(&i, &ExploreConfig { samples: 30, seed: 3, ..Default::default() }).unwrap();
        assert!(s.records.iter().any(|r| r.squarefree));
        assert!(s.records.iter().all(|r| r.squarefree));
    }
}
