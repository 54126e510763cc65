//! Square matrices over GF(2) with one packed word per row, and the
//! principal pivot transform.
//!
//! Over GF(2) the pivot of `M = [[A, B], [C, D]]` on the index set of `A` is
//! `[[A⁻¹, A⁻¹B], [CA⁻¹, D + CA⁻¹B]]`; all minus signs vanish.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// Exhaustive checks over all subsets are limited to this dimension.
pub const EXHAUSTIVE_LIMIT: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GF2Matrix {
    rows: Vec<u64>,
    /// Vertex id carried by each row/column position.
    index_labels: Vec<usize>,
}

impl GF2Matrix {
    pub fn zeros(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        GF2Matrix {
            rows: vec![0; n],
            index_labels: (0..n).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for (i, r) in m.rows.iter_mut().enumerate() {
            *r = 1 << i;
        }
        m
    }

    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        Error::check_capacity("matrix dimension", n, MAX_VERTICES)?;
        let full = VertexSet::full(n).0;
        if let Some(i) = rows.iter().position(|&r| r & !full != 0) {
            return Err(Error::Malformed(format!("row {i} has bits beyond column {n}")));
        }
        Ok(GF2Matrix {
            rows,
            index_labels: (0..n).collect(),
        })
    }

    /// `A(G)`, indexed by the vertex ids of `g`.
    pub fn adjacency(g: &Graph) -> Self {
        GF2Matrix {
            rows: g.rows().to_vec(),
            index_labels: g.ids().to_vec(),
        }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn index_labels(&self) -> &[usize] {
        &self.index_labels
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n()).all(|i| VertexSet(self.rows[i]).iter().all(|j| self.get(j, i)))
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.n()).all(|i| !self.get(i, i))
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(VertexSet::full(self.n())).first() {
            Some(v) => Err(Error::UnknownVertex(v)),
            None => Ok(()),
        }
    }

    /// `M[S]`, re-indexed densely.
    pub fn principal_submatrix(&self, s: VertexSet) -> Result<GF2Matrix> {
        self.check_set(s)?;
        let idx = s.to_vec();
        let rows = idx
            .iter()
            .map(|&i| {
                idx.iter()
                    .enumerate()
                    .fold(0u64, |acc, (c, &j)| acc | (self.rows[i] >> j & 1) << c)
            })
            .collect();
        Ok(GF2Matrix {
            rows,
            index_labels: idx.iter().map(|&i| self.index_labels[i]).collect(),
        })
    }

    /// Rank of `M[S]` by Gaussian elimination on a copy.
    pub fn rank_of(&self, s: VertexSet) -> usize {
        let mut rows: Vec<u64> = s.iter().map(|i| self.rows[i] & s.0).collect();
        let mut rank = 0;
        for col in s {
            let bit = 1u64 << col;
            let Some(p) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank];
            for r in rows.iter_mut().skip(rank + 1) {
                if *r & bit != 0 {
                    *r ^= pivot;
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn rank(&self) -> usize {
        self.rank_of(VertexSet::full(self.n()))
    }

    /// Whether `M[S]` has full rank; `M[∅]` counts as non-singular.
    pub fn is_nonsingular(&self, s: VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(self.rank_of(s) == s.len())
    }

    /// Inverse of `M[S]` by Gauss-Jordan, returned as rows indexed by the
    /// positions of `S` in `M` (bits also in `M`'s column space).
    fn invert_principal(&self, s: VertexSet) -> Option<Vec<u64>> {
        let idx = s.to_vec();
        let mut left: Vec<u64> = idx.iter().map(|&i| self.rows[i] & s.0).collect();
        let mut right: Vec<u64> = idx.iter().map(|&i| 1u64 << i).collect();
        for (k, &col) in idx.iter().enumerate() {
            let bit = 1u64 << col;
            let p = (k..left.len()).find(|&r| left[r] & bit != 0)?;
            left.swap(k, p);
            right.swap(k, p);
            let (pl, pr) = (left[k], right[k]);
            for r in 0..left.len() {
                if r != k && left[r] & bit != 0 {
                    left[r] ^= pl;
                    right[r] ^= pr;
                }
            }
        }
        // left is now the identity with row k carrying column idx[k]
        let mut inv = vec![0u64; self.n()];
        for (k, &col) in idx.iter().enumerate() {
            inv[col] = right[k];
        }
        Some(inv)
    }

    /// Inverse of the whole matrix.
    pub fn inverse(&self) -> Result<GF2Matrix> {
        let full = VertexSet::full(self.n());
        let inv = self
            .invert_principal(full)
            .ok_or_else(|| Error::Singular(full.to_vec()))?;
        Ok(GF2Matrix {
            rows: inv,
            index_labels: self.index_labels.clone(),
        })
    }

    pub fn multiply(&self, other: &GF2Matrix) -> Result<GF2Matrix> {
        if self.n() != other.n() {
            return Err(Error::Precondition("dimension mismatch".into()));
        }
        let rows = self
            .rows
            .iter()
            .map(|&r| VertexSet(r).iter().fold(0u64, |acc, l| acc ^ other.rows[l]))
            .collect();
        Ok(GF2Matrix {
            rows,
            index_labels: self.index_labels.clone(),
        })
    }

    /// `M * S`, the principal pivot transform on `S`.
    pub fn principal_pivot(&self, s: VertexSet) -> Result<GF2Matrix> {
        self.check_set(s)?;
        let ainv = self
            .invert_principal(s)
            .ok_or_else(|| Error::Singular(s.to_vec()))?;
        let smask = s.0;
        let rmask = VertexSet::full(self.n()).0 & !smask;
        let mut out = vec![0u64; self.n()];
        for i in 0..self.n() {
            if smask >> i & 1 == 1 {
                // [A⁻¹ | A⁻¹B]
                let a = ainv[i];
                let ab = VertexSet(a).iter().fold(0u64, |acc, l| acc ^ self.rows[l]) & rmask;
                out[i] = a | ab;
            } else {
                // [CA⁻¹ | D + CA⁻¹B]
                let c = self.rows[i] & smask;
                let ca = VertexSet(c).iter().fold(0u64, |acc, l| acc ^ ainv[l]);
                let cab = VertexSet(ca).iter().fold(0u64, |acc, l| acc ^ self.rows[l]) & rmask;
                out[i] = ca | ((self.rows[i] & rmask) ^ cab);
            }
        }
        Ok(GF2Matrix {
            rows: out,
            index_labels: self.index_labels.clone(),
        })
    }

    /// Interprets the matrix as an adjacency matrix. Requires symmetry and a zero diagonal.
    pub fn to_graph(&self) -> Result<Graph> {
        if !self.is_symmetric() || !self.has_zero_diagonal() {
            return Err(Error::Internal(
                "matrix is not symmetric with zero diagonal".into(),
            ));
        }
        Ok(Graph::from_rows(self.rows.clone())?.with_ids(self.index_labels.clone()))
    }
}

impl fmt::Display for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n() {
            let line: String = (0..self.n())
                .map(|j| if self.get(i, j) { '1' } else { '0' })
                .collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF2Matrix({}x{})\n{}", self.n(), self.n(), self)
    }
}

/// Checks that `(M*S)[T]` is non-singular exactly when `M[S Δ T]` is, for every `T`.
pub fn check_tucker(m: &GF2Matrix, s: VertexSet) -> Result<bool> {
    Error::check_capacity("matrix dimension for exhaustive check", m.n(), EXHAUSTIVE_LIMIT)?;
    let pivoted = m.principal_pivot(s)?;
    for t in 0..1u64 << m.n() {
        let t = VertexSet(t);
        if pivoted.is_nonsingular(t)? != m.is_nonsingular(s.symmetric_difference(t))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks `(M*S)*T = M*(S Δ T)`.
pub fn check_pivot_composition(m: &GF2Matrix, s: VertexSet, t: VertexSet) -> Result<bool> {
    let ms = m.principal_pivot(s)?;
    let lhs = ms.principal_pivot(t).map_err(|e| match e {
        Error::Singular(v) => Error::Precondition(format!("(M*S)[T] is singular for T = {v:?}")),
        other => other,
    })?;
    let rhs = m.principal_pivot(s.symmetric_difference(t))?;
    Ok(lhs == rhs)
}

/// The graph on `Y` whose adjacency matrix is `(A(G)*X)[Y]`.
pub fn pivot_minor_by_matrix(g: &Graph, x: VertexSet, y: VertexSet) -> Result<Graph> {
    g.check_set(y)?;
    let pivoted = GF2Matrix::adjacency(g).principal_pivot(x)?;
    let sub = pivoted.principal_submatrix(y)?;
    sub.to_graph()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn adjacency_examples() {
        let a = GF2Matrix::adjacency(&Graph::complete(2));
        assert_eq!(a.rows(), &[0b10, 0b01]);
        assert_eq!(GF2Matrix::adjacency(&Graph::empty(3)), GF2Matrix::zeros(3));
        assert_eq!(GF2Matrix::adjacency(&Graph::path(3)).to_string(), "010\n101\n010\n");
    }

    #[test]
    fn nonsingular_examples() {
        let k2 = GF2Matrix::adjacency(&Graph::complete(2));
        assert!(k2.is_nonsingular(set(&[0, 1])).unwrap());
        let p3 = GF2Matrix::adjacency(&Graph::path(3));
        assert!(!p3.is_nonsingular(set(&[0, 1, 2])).unwrap());
        let m2 = GF2Matrix::adjacency(&Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap());
        assert!(m2.is_nonsingular(set(&[0, 1, 2, 3])).unwrap());
        assert!(p3.is_nonsingular(VertexSet::EMPTY).unwrap());
        assert!(p3.is_nonsingular(set(&[5])).is_err());
    }

    #[test]
    fn pivot_examples() {
        let k2 = GF2Matrix::adjacency(&Graph::complete(2));
        assert_eq!(k2.principal_pivot(set(&[0, 1])).unwrap(), k2);
        let c5 = GF2Matrix::adjacency(&Graph::cycle(5));
        assert_eq!(c5.principal_pivot(VertexSet::EMPTY).unwrap(), c5);
        let p3 = GF2Matrix::adjacency(&Graph::path(3));
        assert_eq!(p3.principal_pivot(set(&[0, 2])), Err(Error::Singular(vec![0, 2])));
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let m = GF2Matrix::from_rows(vec![0b011, 0b110, 0b001]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.multiply(&inv).unwrap(), GF2Matrix::identity(3));
        assert_eq!(inv.multiply(&m).unwrap(), GF2Matrix::identity(3));
    }

    #[test]
    fn tucker_small_cases() {
        let c5 = GF2Matrix::adjacency(&Graph::cycle(5));
        assert!(check_tucker(&c5, VertexSet::EMPTY).unwrap());
        let m2 = GF2Matrix::adjacency(&Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap());
        assert!(check_tucker(&m2, set(&[0, 1])).unwrap());
    }

    #[test]
    fn composition_small_cases() {
        let m = GF2Matrix::adjacency(&Graph::cycle(6));
        let s = set(&[0, 1]);
        assert!(check_pivot_composition(&m, s, VertexSet::EMPTY).unwrap());
        assert!(check_pivot_composition(&m, s, s).unwrap());
    }

    #[test]
    fn pivot_minor_examples() {
        let p3 = Graph::path(3);
        let g = pivot_minor_by_matrix(&p3, VertexSet::EMPTY, set(&[0, 2])).unwrap();
        assert_eq!(g, p3.induced_subgraph(set(&[0, 2])).unwrap());
        let g = pivot_minor_by_matrix(&p3, set(&[0, 1]), set(&[1, 2])).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.ids(), &[1, 2]);
        let route = p3.pivot_edge(0, 1).unwrap().induced_subgraph(set(&[1, 2])).unwrap();
        assert_eq!(g, route);
    }
}
