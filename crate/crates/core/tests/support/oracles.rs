//! Brute-force reference computations for test suites.
//!
//! Nothing here shares code with the production paths it is used to
//! check: the Betti oracle works on the Taylor complex with its own
//! elimination, and Hilbert functions are counted monomial by monomial.

#![allow(dead_code)]

use std::collections::BTreeMap;

use gbdepth::{BettiTable, Field, Monomial, MonomialIdeal, Rational};

/// Rank by textbook Gaussian elimination over the rationals.
pub fn gaussian_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Rational>> =
        rows.iter().map(|r| r.iter().map(|&v| Rational::from_i64(v)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].div(&pivot);
                for c in col..cols {
                    let v = m[rank][c].clone() * f.clone();
                    m[r][c] = m[r][c].clone() - v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Betti table of `S/J` from the Taylor resolution tensored with the
/// residue field: in multidegree `a` it is the complex on subsets `F` of
/// generators with `lcm(F) = a`, keeping only faces with the same lcm.
pub fn taylor_betti_table(ideal: &MonomialIdeal) -> BettiTable {
    let gens = ideal.generators();
    let m = gens.len();
    assert!(m <= 16, "Taylor oracle is exponential in the number of generators");
    let n = ideal.nvars();
    let lcm_of = |mask: u32| {
        (0..m).filter(|j| mask >> j & 1 == 1).fold(Monomial::one(n), |acc, j| acc.lcm(&gens[j]))
    };
    let mut by_degree: BTreeMap<Monomial, Vec<u32>> = BTreeMap::new();
    for mask in 0..(1u32 << m) {
        by_degree.entry(lcm_of(mask)).or_default().push(mask);
    }
    let mut entries = Vec::new();
    for (a, masks) in by_degree {
        let mut by_size: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for &f in &masks {
            by_size.entry(f.count_ones() as usize).or_default().push(f);
        }
        let rank_into = |i: usize| -> usize {
            // differential C_i -> C_{i-1}
            let (Some(upper), Some(lower)) = (by_size.get(&i), i.checked_sub(1).and_then(|k| by_size.get(&k))) else {
                return 0;
            };
            let rows: Vec<Vec<i64>> = upper
                .iter()
                .map(|&f| {
                    let mut sign = 1;
                    let mut row = vec![0; lower.len()];
                    for j in 0..m {
                        if f >> j & 1 == 1 {
                            let g = f & !(1 << j);
                            if let Some(pos) = lower.iter().position(|&x| x == g) {
                                row[pos] = sign;
                            }
                            sign = -sign;
                        }
                    }
                    row
                })
                .collect();
            gaussian_rank(&rows)
        };
        for (&i, faces) in &by_size {
            let b = faces.len() - rank_into(i) - rank_into(i + 1);
            if b > 0 {
                entries.push(((i, a.clone()), b as u64));
            }
        }
    }
    BettiTable::from_entries(n, entries)
}

/// Hilbert function values `dim (S/J)_k` for `k < len`, by enumeration.
pub fn hilbert_function(ideal: &MonomialIdeal, len: usize) -> Vec<i64> {
    fn walk(pos: usize, left: u32, exps: &mut Vec<u32>, j: &MonomialIdeal, out: &mut i64) {
        if pos + 1 == exps.len() {
            exps[pos] = left;
            if !j.contains(&Monomial::new(exps.clone())) {
                *out += 1;
            }
            exps[pos] = 0;
            return;
        }
        for e in 0..=left {
            exps[pos] = e;
            walk(pos + 1, left - e, exps, j, out);
        }
        exps[pos] = 0;
    }
    let n = ideal.nvars();
    (0..len)
        .map(|k| {
            if n == 0 {
                return i64::from(k == 0);
            }
            let mut c = 0;
            walk(0, k as u32, &mut vec![0; n], ideal, &mut c);
            c
        })
        .collect()
}

/// `dim S/J` by exhaustive search over variable subsets.
pub fn krull_dimension_brute(ideal: &MonomialIdeal) -> usize {
    let n = ideal.nvars();
    assert!(n <= 20);
    let best = (0u32..(1 << n))
        .filter(|&s| ideal.generators().iter().all(|g| g.support().any(|v| s >> v & 1 == 1)))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0);
    n - best
}
