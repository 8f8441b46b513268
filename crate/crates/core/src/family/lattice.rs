//! Finite distributive lattices and their join-meet ideals.

use thiserror::Error;

use crate::field::Field;
use crate::orders::MonomialOrder;
use crate::polyring::{Ideal, Monomial, Polynomial};

pub const DEFAULT_MAX_LATTICE_ELEMENTS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("lattice has {size} elements, above the limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("cover relation mentions unknown element {0}")]
    UnknownElement(usize),
    #[error("cover relations contain a cycle through {0}")]
    Cycle(String),
    #[error("{a} and {b} have no {which}")]
    NotALattice { a: String, b: String, which: &'static str },
    #[error("distributivity fails at ({a}, {b}, {c})")]
    NotDistributive { a: String, b: String, c: String },
    #[error("lattice is empty")]
    Empty,
}

/// A finite distributive lattice given by its cover relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributiveLattice {
    names: Vec<String>,
    covers: Vec<(usize, usize)>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

impl DistributiveLattice {
    /// `covers` lists pairs `(a, b)` with `a` covered by `b`.
    pub fn from_covers(
        names: Vec<String>,
        covers: Vec<(usize, usize)>,
        limit: usize,
    ) -> Result<Self, LatticeError> {
        let size = names.len();
        if size == 0 {
            return Err(LatticeError::Empty);
        }
        if size > limit {
            return Err(LatticeError::TooLarge { size, limit });
        }
        let mut leq = vec![vec![false; size]; size];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in &covers {
            if a >= size || b >= size {
                return Err(LatticeError::UnknownElement(a.max(b)));
            }
            leq[a][b] = true;
        }
        for k in 0..size {
            for i in 0..size {
                if leq[i][k] {
                    for j in 0..size {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..size {
            for j in 0..size {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(LatticeError::Cycle(names[i].clone()));
                }
            }
        }
        let bound = |a: usize, b: usize, lower: bool| -> Option<usize> {
            let below = |x: usize, y: usize| if lower { leq[x][y] } else { leq[y][x] };
            let candidates: Vec<usize> = (0..size).filter(|&x| below(x, a) && below(x, b)).collect();
            candidates.iter().copied().find(|&x| candidates.iter().all(|&y| below(y, x)))
        };
        let mut meet = vec![vec![0; size]; size];
        let mut join = vec![vec![0; size]; size];
        for a in 0..size {
            for b in 0..size {
                meet[a][b] = bound(a, b, true).ok_or_else(|| LatticeError::NotALattice {
                    a: names[a].clone(),
                    b: names[b].clone(),
                    which: "meet",
                })?;
                join[a][b] = bound(a, b, false).ok_or_else(|| LatticeError::NotALattice {
                    a: names[a].clone(),
                    b: names[b].clone(),
                    which: "join",
                })?;
            }
        }
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]] {
                        return Err(LatticeError::NotDistributive {
                            a: names[a].clone(),
                            b: names[b].clone(),
                            c: names[c].clone(),
                        });
                    }
                }
            }
        }
        Ok(DistributiveLattice { names, covers, leq, meet, join })
    }

    /// The chain `0 < 1 < ... < k-1`.
    pub fn chain(k: usize) -> Result<Self, LatticeError> {
        Self::from_covers(
            (0..k).map(|i| i.to_string()).collect(),
            (1..k).map(|i| (i - 1, i)).collect(),
            DEFAULT_MAX_LATTICE_ELEMENTS,
        )
    }

    /// Product of chains with `a` and `b` elements.
    pub fn grid(a: usize, b: usize) -> Result<Self, LatticeError> {
        let idx = |i: usize, j: usize| i * b + j;
        let mut covers = Vec::new();
        for i in 0..a {
            for j in 0..b {
                if i + 1 < a {
                    covers.push((idx(i, j), idx(i + 1, j)));
                }
                if j + 1 < b {
                    covers.push((idx(i, j), idx(i, j + 1)));
                }
            }
        }
        let names = (0..a).flat_map(|i| (0..b).map(move |j| format!("({i},{j})"))).collect();
        Self::from_covers(names, covers, DEFAULT_MAX_LATTICE_ELEMENTS)
    }

    /// Subsets of `{1..k}` under inclusion, indexed by bitmask.
    pub fn boolean(k: usize) -> Result<Self, LatticeError> {
        let size = 1usize << k;
        let names = (0..size)
            .map(|s| {
                let items: Vec<String> = (0..k).filter(|i| s >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        let covers = (0..size)
            .flat_map(|s| (0..k).filter(move |i| s >> i & 1 == 0).map(move |i| (s, s | 1 << i)))
            .collect();
        Self::from_covers(names, covers, DEFAULT_MAX_LATTICE_ELEMENTS)
    }

    /// Divisors of `n` under divisibility, in increasing order.
    pub fn divisors(n: u64) -> Result<Self, LatticeError> {
        let divs: Vec<u64> = (1..=n).filter(|k| n.is_multiple_of(*k)).collect();
        let mut covers = Vec::new();
        for (i, &a) in divs.iter().enumerate() {
            for (j, &b) in divs.iter().enumerate() {
                if b % a == 0 && b != a && divs.iter().all(|&c| c == a || c == b || !(c % a == 0 && b % c == 0)) {
                    covers.push((i, j));
                }
            }
        }
        Self::from_covers(divs.iter().map(u64::to_string).collect(), covers, DEFAULT_MAX_LATTICE_ELEMENTS)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }
}

/// Unordered pairs `(a, b)`, `a < b`, with neither `a ≤ b` nor `b ≤ a`.
pub fn incomparable_pairs(lattice: &DistributiveLattice) -> Vec<(usize, usize)> {
    let n = lattice.len();
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !lattice.leq(a, b) && !lattice.leq(b, a))
        .collect()
}

/// One variable per element (`x_{k+1}` for element `k`) and one binomial
/// `x_a x_b - x_{a∧b} x_{a∨b}` per incomparable pair.
pub fn hibi_ideal<C: Field>(lattice: &DistributiveLattice) -> Ideal<C> {
    let n = lattice.len();
    let lex = MonomialOrder::lex(n);
    let prod = |a: usize, b: usize| Monomial::var(n, a).mul(&Monomial::var(n, b));
    let gens = incomparable_pairs(lattice)
        .into_iter()
        .map(|(a, b)| {
            let lhs = prod(a, b);
            let rhs = prod(lattice.meet(a, b), lattice.join(a, b));
            let lead = lex.max(&lhs, &rhs).clone();
            let trail = if lead == lhs { rhs } else { lhs };
            Polynomial::binomial(lead, trail, &lex)
        })
        .collect();
    Ideal::new(n, gens).expect("lattice size is capped")
}
