//! Hilbert series numerators of monomial quotients.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::groebner::MonomialIdeal;

use super::components;

/// Integer polynomial in `t`, coefficients from the constant term up.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn one() -> Self {
        IntPoly(vec![1])
    }

    /// `c * t^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        IntPoly::new(v)
    }

    /// `(1 - t)^k`.
    pub fn one_minus_t_pow(k: usize) -> Self {
        (0..k).fold(IntPoly::one(), |acc, _| &acc * &IntPoly(vec![1, -1]))
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.0);
        IntPoly(v)
    }

    /// Exact quotient by `1 - t`, if it divides.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.eval_at_one() != 0 {
            return None;
        }
        // self = (1 - t) q  =>  q_k = sum_{j <= k} self_j
        let mut q = Vec::with_capacity(self.0.len());
        let mut acc = 0i64;
        for &c in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += c;
            q.push(acc);
        }
        Some(IntPoly::new(q))
    }

    /// Multiplicity of `t = 1` as a root; `None` for the zero polynomial.
    pub fn root_multiplicity_at_one(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut k = 0;
        let mut p = self.clone();
        while let Some(q) = p.div_one_minus_t() {
            p = q;
            k += 1;
        }
        Some(k)
    }

    /// The first `len` coefficients of `self / (1 - t)^n` as a power series.
    pub fn series_over_one_minus_t(&self, n: usize, len: usize) -> Vec<i64> {
        let mut s: Vec<i64> = (0..len).map(|k| self.coeff(k)).collect();
        for _ in 0..n {
            for k in 1..len {
                s[k] += s[k - 1];
            }
        }
        s
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.0.len().max(rhs.0.len());
        IntPoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.0.len().max(rhs.0.len());
        IntPoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::default();
        }
        let mut v = vec![0; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders as `1 - 3t^2 + 2t^3`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let a = c.abs();
            match (first, c < 0) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                _ if a != 1 => write!(f, "{a}t")?,
                _ => f.write_str("t")?,
            }
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `K(t)` with `HS(S/J) = K(t) / (1 - t)^n`.
///
/// Variable-disjoint components multiply; within a component the last
/// generator `m` is split off via `K(J' + (m)) = K(J') - t^deg(m) K(J' : m)`.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> IntPoly {
    components(ideal).iter().fold(IntPoly::one(), |acc, c| &acc * &pivot_numerator(c))
}

fn pivot_numerator(ideal: &MonomialIdeal) -> IntPoly {
    let gens = ideal.generators();
    if gens.is_empty() {
        return IntPoly::one();
    }
    if gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b))) {
        return gens
            .iter()
            .fold(IntPoly::one(), |acc, g| &acc * &(&IntPoly::one() - &IntPoly::monomial(1, g.degree() as usize)));
    }
    let (pivot, rest) = gens.split_last().expect("nonempty");
    let rest = MonomialIdeal::new(ideal.nvars(), rest.iter().cloned());
    let colon = rest.colon(pivot);
    &hilbert_numerator(&rest) - &hilbert_numerator(&colon).shift(pivot.degree() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Monomial;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    /// Number of monomials of each degree `< len` outside `J`.
    fn standard_monomial_counts(j: &MonomialIdeal, len: usize) -> Vec<i64> {
        let n = j.nvars();
        let mut counts = vec![0i64; len];
        let mut exps = vec![0u32; n];
        fn walk(pos: usize, left: u32, exps: &mut Vec<u32>, j: &MonomialIdeal, out: &mut i64) {
            if pos == exps.len() {
                if left == 0 && !j.contains(&Monomial::new(exps.clone())) {
                    *out += 1;
                }
                return;
            }
            for e in 0..=left {
                exps[pos] = e;
                walk(pos + 1, left - e, exps, j, out);
            }
            exps[pos] = 0;
        }
        for (d, c) in counts.iter_mut().enumerate() {
            walk(0, d as u32, &mut exps, j, c);
        }
        counts
    }

    #[test]
    fn trailing_block_numerator() {
        let j = MonomialIdeal::new(3, [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[1, 0, 1]), m(&[0, 3, 0])]);
        let k = hilbert_numerator(&j);
        assert_eq!(k, IntPoly::new(vec![1, 0, -3, 2]));
        assert_eq!(k.to_string(), "1 - 3t^2 + 2t^3");
        let counts = standard_monomial_counts(&j, 7);
        assert_eq!(counts, vec![1, 3, 3, 3, 3, 3, 3]);
        assert_eq!(k.series_over_one_minus_t(3, 7), counts);
    }

    #[test]
    fn base_cases() {
        assert_eq!(hilbert_numerator(&MonomialIdeal::zero(3)), IntPoly::one());
        let j = MonomialIdeal::new(1, [m(&[1])]);
        assert_eq!(hilbert_numerator(&j), IntPoly::new(vec![1, -1]));
    }

    #[test]
    fn enumeration_agrees_on_assorted_ideals() {
        let cases = [
            MonomialIdeal::new(3, [m(&[0, 1, 1]), m(&[0, 0, 2]), m(&[0, 2, 0])]),
            MonomialIdeal::new(3, [m(&[1, 1, 1])]),
            MonomialIdeal::new(4, [m(&[1, 1, 0, 0]), m(&[0, 1, 1, 0]), m(&[0, 0, 1, 1]), m(&[2, 0, 0, 1])]),
            MonomialIdeal::new(2, [m(&[3, 0]), m(&[2, 2]), m(&[0, 3])]),
        ];
        for j in cases {
            let k = hilbert_numerator(&j);
            assert_eq!(k.series_over_one_minus_t(j.nvars(), 9), standard_monomial_counts(&j, 9), "{j}");
        }
    }

    #[test]
    fn poly_ops() {
        let p = IntPoly::new(vec![1, 0, -3, 2]);
        let q = p.div_one_minus_t().unwrap();
        assert_eq!(q, IntPoly::new(vec![1, 1, -2]));
        assert_eq!(p.root_multiplicity_at_one(), Some(2));
        assert_eq!(IntPoly::one_minus_t_pow(2), IntPoly::new(vec![1, -2, 1]));
        assert_eq!(IntPoly::new(vec![0, 0]).degree(), None);
        assert!(IntPoly::new(vec![1, 1]).div_one_minus_t().is_none());
    }
}
