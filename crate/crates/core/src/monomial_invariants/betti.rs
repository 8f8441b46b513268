//! Multigraded Betti numbers of monomial quotients.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::groebner::MonomialIdeal;
use crate::polyring::Monomial;

use super::complex::{reduced_homology_dims, upper_koszul_complex};
use super::hilbert::IntPoly;
use super::{InvariantConfig, InvariantError};

/// All lcms of subsets of the minimal generators, `1` included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcmLattice {
    elements: Vec<Monomial>,
}

impl LcmLattice {
    pub fn new(ideal: &MonomialIdeal, max_elements: usize) -> Result<Self, InvariantError> {
        let mut set: BTreeSet<Monomial> = BTreeSet::new();
        set.insert(Monomial::one(ideal.nvars()));
        for g in ideal.generators() {
            let fresh: Vec<Monomial> = set.iter().map(|l| l.lcm(g)).filter(|l| !set.contains(l)).collect();
            set.extend(fresh);
            if set.len() > max_elements {
                return Err(InvariantError::LatticeBudget { budget: max_elements });
            }
        }
        let mut elements: Vec<Monomial> = set.into_iter().collect();
        elements.sort_by_key(|m| (m.degree(), std::cmp::Reverse(m.clone())));
        Ok(LcmLattice { elements })
    }

    /// Sorted by degree; the first element is `1`, the last is the top.
    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn bottom(&self) -> &Monomial {
        &self.elements[0]
    }

    pub fn top(&self) -> &Monomial {
        self.elements.last().expect("lattice contains 1")
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.elements.binary_search_by_key(&(m.degree(), std::cmp::Reverse(m.clone())), |e| {
            (e.degree(), std::cmp::Reverse(e.clone()))
        })
        .is_ok()
    }
}

/// Betti numbers `β_{i,a}(S/J)`, keyed by homological index and multidegree.
/// Serialize through [`BettiTable::to_triples`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    nvars: usize,
    entries: BTreeMap<(usize, Monomial), u64>,
}

/// One `(i, multidegree, multiplicity)` triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub multidegree: Vec<u32>,
    pub multiplicity: u64,
}

impl BettiTable {
    /// The table of `S/0 = S`.
    pub fn trivial(nvars: usize) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert((0, Monomial::one(nvars)), 1);
        BettiTable { nvars, entries }
    }

    pub fn from_entries(nvars: usize, entries: impl IntoIterator<Item = ((usize, Monomial), u64)>) -> Self {
        BettiTable { nvars, entries: entries.into_iter().filter(|(_, v)| *v > 0).collect() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn entries(&self) -> &BTreeMap<(usize, Monomial), u64> {
        &self.entries
    }

    pub fn get(&self, i: usize, a: &Monomial) -> u64 {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    /// Total Betti number `β_i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, v)| v).sum()
    }

    /// Graded Betti number `β_{i,j}` with `j` the total degree.
    pub fn graded(&self, i: usize, j: u32) -> u64 {
        self.entries
            .iter()
            .filter(|((k, a), _)| *k == i && a.degree() == j)
            .map(|(_, v)| v)
            .sum()
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// `max(|a| - i)` over all entries.
    pub fn regularity(&self) -> i64 {
        self.entries.keys().map(|(i, a)| a.degree() as i64 - *i as i64).max().unwrap_or(0)
    }

    /// `sum (-1)^i β_{i,a} t^{|a|}`.
    pub fn hilbert_numerator(&self) -> IntPoly {
        let mut coeffs: Vec<i64> = Vec::new();
        for ((i, a), &b) in &self.entries {
            let d = a.degree() as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            let sign = if i % 2 == 0 { 1 } else { -1 };
            coeffs[d] += sign * b as i64;
        }
        IntPoly::new(coeffs)
    }

    pub fn to_triples(&self) -> Vec<BettiEntry> {
        self.entries
            .iter()
            .map(|((i, a), &v)| BettiEntry { i: *i, multidegree: a.exponents().to_vec(), multiplicity: v })
            .collect()
    }

    /// Variables occurring in some multidegree.
    fn support(&self) -> BTreeSet<usize> {
        self.entries.keys().flat_map(|(_, a)| a.support().collect::<Vec<_>>()).collect()
    }

    /// Conventional grid: columns are homological degrees `i`, rows are
    /// twists `j = |a| - i`, `.` for zero.
    pub fn render(&self) -> String {
        let pd = self.projective_dimension();
        let reg = self.regularity().max(0) as u32;
        let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
        let mut rows: Vec<(String, Vec<String>)> = Vec::new();
        rows.push(("total:".into(), (0..=pd).map(|i| cell(self.total(i))).collect()));
        for j in 0..=reg {
            rows.push((format!("{j}:"), (0..=pd).map(|i| cell(self.graded(i, i as u32 + j))).collect()));
        }
        let label_w = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let col_w: Vec<usize> = (0..=pd)
            .map(|i| rows.iter().map(|(_, c)| c[i].len()).max().unwrap_or(1).max(i.to_string().len()))
            .collect();
        let mut out = String::new();
        let _ = write!(out, "{:>label_w$}", "");
        for (i, w) in col_w.iter().enumerate() {
            let _ = write!(out, " {:>w$}", i);
        }
        out.push('\n');
        for (label, cells) in rows {
            let _ = write!(out, "{label:>label_w$}");
            for (c, w) in cells.iter().zip(&col_w) {
                let _ = write!(out, " {c:>w$}");
            }
            out.push('\n');
        }
        out
    }
}

/// Betti table computed directly from upper Koszul complexes at every
/// degree of the lcm lattice: `β_{i,a}(S/J) = dim H̃_{i-2}(K^a(J))`.
pub fn betti_table<C: Field>(ideal: &MonomialIdeal, config: &InvariantConfig) -> Result<BettiTable, InvariantError> {
    let lattice = LcmLattice::new(ideal, config.max_lattice)?;
    let n = ideal.nvars();
    let per_degree: Vec<Vec<((usize, Monomial), u64)>> = lattice.elements()[1..]
        .par_iter()
        .map(|a| {
            let dims = reduced_homology_dims::<C>(&upper_koszul_complex(ideal, a));
            dims.iter()
                .enumerate()
                .filter(|(_, &d)| d > 0)
                .map(|(s, &d)| ((s + 1, a.clone()), d as u64))
                .collect()
        })
        .collect();
    let mut table = BettiTable::trivial(n);
    table.entries.extend(per_degree.into_iter().flatten());
    Ok(table)
}

/// Betti table of `J1 + J2` for ideals in disjoint sets of variables.
pub fn kunneth_convolution(left: &BettiTable, right: &BettiTable) -> Result<BettiTable, InvariantError> {
    if left.nvars != right.nvars {
        return Err(InvariantError::DimensionMismatch { left: left.nvars, right: right.nvars });
    }
    let (ls, rs) = (left.support(), right.support());
    if let Some(&v) = ls.intersection(&rs).next() {
        return Err(InvariantError::OverlappingSupports { variable: v });
    }
    let mut entries: BTreeMap<(usize, Monomial), u64> = BTreeMap::new();
    for ((i, a), &x) in &left.entries {
        for ((j, b), &y) in &right.entries {
            *entries.entry((i + j, a.mul(b))).or_default() += x * y;
        }
    }
    Ok(BettiTable { nvars: left.nvars, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn cfg() -> InvariantConfig {
        InvariantConfig::default()
    }

    #[test]
    fn lattice_of_three_quadrics() {
        let j = MonomialIdeal::new(2, [m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
        let l = LcmLattice::new(&j, 100).unwrap();
        assert_eq!(l.len(), 7);
        assert_eq!(l.bottom(), &m(&[0, 0]));
        assert_eq!(l.top(), &m(&[2, 2]));
        assert!(l.contains(&m(&[2, 1])));
        assert!(!l.contains(&m(&[1, 0])));
        assert_eq!(LcmLattice::new(&j, 3), Err(InvariantError::LatticeBudget { budget: 3 }));
    }

    #[test]
    fn three_quadrics_in_two_variables() {
        let j = MonomialIdeal::new(2, [m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
        let t = betti_table::<Rational>(&j, &cfg()).unwrap();
        assert_eq!(t.total(0), 1);
        assert_eq!(t.total(1), 3);
        assert_eq!(t.total(2), 2);
        assert_eq!(t.get(2, &m(&[2, 1])), 1);
        assert_eq!(t.get(2, &m(&[1, 2])), 1);
        assert_eq!(t.get(2, &m(&[2, 2])), 0);
        assert_eq!(t.projective_dimension(), 2);
        assert_eq!(t.regularity(), 1);
    }

    #[test]
    fn trivial_cases() {
        let t = betti_table::<Rational>(&MonomialIdeal::zero(3), &cfg()).unwrap();
        assert_eq!(t, BettiTable::trivial(3));
        let t = betti_table::<Rational>(&MonomialIdeal::new(1, [m(&[1])]), &cfg()).unwrap();
        assert_eq!(t.get(1, &m(&[1])), 1);
        assert_eq!(t.entries().len(), 2);
    }

    #[test]
    fn koszul_on_two_variables() {
        let a = betti_table::<Rational>(&MonomialIdeal::new(2, [m(&[1, 0])]), &cfg()).unwrap();
        let b = betti_table::<Rational>(&MonomialIdeal::new(2, [m(&[0, 1])]), &cfg()).unwrap();
        let t = kunneth_convolution(&a, &b).unwrap();
        assert_eq!((t.total(0), t.total(1), t.total(2)), (1, 2, 1));
        assert_eq!(t.get(2, &m(&[1, 1])), 1);
        assert!(kunneth_convolution(&a, &a).is_err());
    }

    #[test]
    fn render_grid() {
        let j = MonomialIdeal::new(2, [m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
        let t = betti_table::<Rational>(&j, &cfg()).unwrap();
        assert_eq!(t.render(), "       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    1: . 3 2\n");
    }
}
