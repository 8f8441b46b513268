//! Finite simplicial complexes and their reduced homology.

use std::collections::BTreeSet;

use crate::field::Field;
use crate::groebner::MonomialIdeal;
use crate::polyring::Monomial;

/// Downward-closed family of faces on vertices `0..vertex_count`.
///
/// Faces are bitmasks over the local vertex indices. `labels[k]` is the
/// ring variable carried by local vertex `k`. The void complex has no faces
/// at all; the empty complex `{∅}` has exactly the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<usize>,
    /// `by_size[s]` holds the faces with `s` vertices, sorted.
    by_size: Vec<Vec<u64>>,
}

impl SimplicialComplex {
    pub fn void(vertex_count: usize) -> Self {
        SimplicialComplex { labels: (0..vertex_count).collect(), by_size: Vec::new() }
    }

    /// Downward closure of `generators`, each a list of vertex indices.
    pub fn from_faces(vertex_count: usize, generators: &[Vec<usize>]) -> Self {
        assert!(vertex_count <= 64, "at most 64 vertices");
        let mut all: BTreeSet<u64> = BTreeSet::new();
        for g in generators {
            let mask = g.iter().fold(0u64, |m, &v| {
                assert!(v < vertex_count, "vertex {v} out of range");
                m | (1 << v)
            });
            // every submask of the face
            let mut sub = mask;
            loop {
                all.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        SimplicialComplex::from_closed(
            (0..vertex_count).collect(),
            all.into_iter().collect::<Vec<_>>(),
        )
    }

    fn from_closed(labels: Vec<usize>, faces: Vec<u64>) -> Self {
        let mut by_size: Vec<Vec<u64>> = Vec::new();
        for f in faces {
            let s = f.count_ones() as usize;
            if by_size.len() <= s {
                by_size.resize(s + 1, Vec::new());
            }
            by_size[s].push(f);
        }
        for level in &mut by_size {
            level.sort_unstable();
        }
        SimplicialComplex { labels, by_size }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Ring variable of each local vertex.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn is_void(&self) -> bool {
        self.by_size.iter().all(Vec::is_empty)
    }

    pub fn face_count(&self) -> usize {
        self.by_size.iter().map(Vec::len).sum()
    }

    pub fn faces_of_size(&self, s: usize) -> &[u64] {
        self.by_size.get(s).map(Vec::as_slice).unwrap_or(&[])
    }

    /// All faces as sorted vertex lists, smallest first.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.by_size
            .iter()
            .flatten()
            .map(|&f| (0..self.labels.len()).filter(|&v| f >> v & 1 == 1).collect())
            .collect()
    }

    /// Checks closure under taking subsets.
    pub fn is_downward_closed(&self) -> bool {
        let set: BTreeSet<u64> = self.by_size.iter().flatten().copied().collect();
        set.iter().all(|&f| (0..64).filter(|&v| f >> v & 1 == 1).all(|v| set.contains(&(f & !(1 << v)))))
    }
}

/// The complex on `supp(a)` whose faces are the squarefree `σ` with
/// `x^a / x^σ ∈ J`.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, a: &Monomial) -> SimplicialComplex {
    let labels: Vec<usize> = a.support().collect();
    let k = labels.len();
    assert!(k <= 64, "at most 64 vertices");
    let quotient = |mask: u64| {
        let mut e = a.exponents().to_vec();
        for (bit, &v) in labels.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                e[v] -= 1;
            }
        }
        Monomial::new(e)
    };
    if !ideal.contains(a) {
        return SimplicialComplex { labels, by_size: Vec::new() };
    }
    // Grow faces one vertex at a time; a candidate needs every facet of it
    // present, which membership already implies (J is an ideal), so only
    // membership is tested.
    let mut faces: Vec<u64> = vec![0];
    let mut frontier: Vec<u64> = vec![0];
    while !frontier.is_empty() {
        let mut next: BTreeSet<u64> = BTreeSet::new();
        for &f in &frontier {
            let top = if f == 0 { 0 } else { 64 - f.leading_zeros() as usize };
            for bit in top..k {
                let g = f | (1 << bit);
                if ideal.contains(&quotient(g)) {
                    next.insert(g);
                }
            }
        }
        frontier = next.into_iter().collect();
        faces.extend(&frontier);
    }
    SimplicialComplex::from_closed(labels, faces)
}

/// Reduced homology dimensions over `C`.
///
/// Entry `s` is `dim H̃_{s-1}`, so entry 0 is the degree −1 group, which is
/// nonzero only for the empty complex `{∅}`. Trailing zeros are trimmed.
pub fn reduced_homology_dims<C: Field>(complex: &SimplicialComplex) -> Vec<usize> {
    let sizes = complex.by_size.len();
    // rank of the boundary leaving faces of size s
    let ranks: Vec<usize> = (0..=sizes)
        .map(|s| if s == 0 || s >= sizes { 0 } else { boundary_rank::<C>(complex, s) })
        .collect();
    let mut dims: Vec<usize> = (0..sizes)
        .map(|s| complex.by_size[s].len() - ranks[s] - ranks[s + 1])
        .collect();
    while dims.last() == Some(&0) {
        dims.pop();
    }
    dims
}

fn boundary_rank<C: Field>(complex: &SimplicialComplex, s: usize) -> usize {
    let upper = &complex.by_size[s];
    let lower = &complex.by_size[s - 1];
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<i64>> = upper
        .iter()
        .map(|&f| {
            let mut row = vec![0i64; lower.len()];
            let mut sign = 1i64;
            for v in 0..64 {
                if f >> v & 1 == 1 {
                    let face = f & !(1 << v);
                    let idx = lower.binary_search(&face).expect("complex is closed");
                    row[idx] = sign;
                    sign = -sign;
                }
            }
            row
        })
        .collect();
    C::integer_matrix_rank(&rows)
}
