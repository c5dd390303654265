//! Linear subspaces of projective space.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::ExactMatrix;

/// A `k`-plane in `P^n`, stored as `k + 1` spanning vectors in `F^{n+1}`.
///
/// Equality, ordering and hashing use the reduced echelon form of the span, so
/// two parameterizations of the same plane compare equal.
#[derive(Clone, Debug)]
pub struct LinearSubspace<F: Field> {
    field: F,
    ambient_dim: usize,
    param: Vec<Vec<F::Elem>>,
    canonical: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> LinearSubspace<F> {
    /// `spanning` are the columns of the parameterization matrix.
    pub fn new(field: &F, spanning: Vec<Vec<F::Elem>>) -> Result<Self> {
        let Some(first) = spanning.first() else {
            return Err(Error::InvalidParameters("a subspace needs at least one vector".into()));
        };
        let len = first.len();
        if len < 2 {
            return Err(Error::InvalidParameters("ambient space must be at least P^1".into()));
        }
        let m = ExactMatrix::from_rows(field, len, spanning.clone())?;
        let ech = m.rref();
        if ech.pivots.len() != spanning.len() {
            return Err(Error::RankDeficient { rank: ech.pivots.len(), expected: spanning.len() });
        }
        let canonical = (0..ech.pivots.len()).map(|r| ech.matrix.row(r).to_vec()).collect();
        Ok(Self { field: field.clone(), ambient_dim: len - 1, param: spanning, canonical, pivots: ech.pivots })
    }

    /// Span of the given integer vectors.
    pub fn from_int_vectors(field: &F, vectors: &[Vec<i64>]) -> Result<Self> {
        Self::new(field, vectors.iter().map(|v| v.iter().map(|&x| field.from_i64(x)).collect()).collect())
    }

    /// The coordinate subspace spanned by `e_i` for `i` in `coords`.
    pub fn coordinate(field: &F, ambient_dim: usize, coords: &[usize]) -> Result<Self> {
        let vecs = coords
            .iter()
            .map(|&i| {
                let mut v = vec![field.zero(); ambient_dim + 1];
                v[i] = field.one();
                v
            })
            .collect();
        Self::new(field, vecs)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    pub fn sub_dim(&self) -> usize {
        self.param.len() - 1
    }
    pub fn param(&self) -> &[Vec<F::Elem>] {
        &self.param
    }
    pub fn canonical_basis(&self) -> &[Vec<F::Elem>] {
        &self.canonical
    }

    /// Coordinate directions `e_j` completing the span to all of `F^{n+1}`
    /// (the non-pivot columns of the echelon form).
    pub fn complement_coordinates(&self) -> Vec<usize> {
        (0..=self.ambient_dim).filter(|j| !self.pivots.contains(j)).collect()
    }

    /// Point of the subspace with parameter values `params`.
    pub fn point(&self, params: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if params.len() != self.param.len() {
            return Err(Error::DimensionMismatch { expected: self.param.len(), got: params.len() });
        }
        let f = &self.field;
        Ok((0..=self.ambient_dim)
            .map(|i| {
                self.param
                    .iter()
                    .zip(params)
                    .fold(f.zero(), |acc, (col, t)| f.add(&acc, &f.mul(&col[i], t)))
            })
            .collect())
    }

    /// Dimension of the projective intersection (`-1` when empty).
    pub fn intersection_dim(&self, other: &Self) -> Result<i64> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: other.ambient_dim });
        }
        let rows: Vec<Vec<F::Elem>> = self.canonical.iter().chain(&other.canonical).cloned().collect();
        let sum_rank = ExactMatrix::from_rows(&self.field, self.ambient_dim + 1, rows)?.rank();
        Ok((self.param.len() + other.param.len()) as i64 - sum_rank as i64 - 1)
    }

    pub fn contains_point(&self, pt: &[F::Elem]) -> Result<bool> {
        let mut rows = self.canonical.clone();
        rows.push(pt.to_vec());
        Ok(ExactMatrix::from_rows(&self.field, self.ambient_dim + 1, rows)?.rank() == self.param.len())
    }

    /// Canonical rows rendered as text, for reports.
    pub fn describe(&self) -> SubspaceJson {
        SubspaceJson {
            ambient_dim: self.ambient_dim,
            sub_dim: self.sub_dim(),
            basis: self
                .canonical
                .iter()
                .map(|row| row.iter().map(|x| self.field.to_text(x)).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SubspaceJson {
    pub ambient_dim: usize,
    pub sub_dim: usize,
    pub basis: Vec<Vec<String>>,
}

impl<F: Field> PartialEq for LinearSubspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.canonical == other.canonical
    }
}

impl<F: Field> Eq for LinearSubspace<F> {}

impl<F: Field> Hash for LinearSubspace<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient_dim.hash(state);
        self.canonical.hash(state);
    }
}

impl<F: Field> Ord for LinearSubspace<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ambient_dim, &self.canonical).cmp(&(other.ambient_dim, &other.canonical))
    }
}

impl<F: Field> PartialOrd for LinearSubspace<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    #[test]
    fn equality_is_span_equality() {
        let q = Rationals;
        let a = LinearSubspace::from_int_vectors(&q, &[vec![1, 1, 0, 0, 0], vec![0, 0, 1, 1, 0]]).unwrap();
        let b = LinearSubspace::from_int_vectors(&q, &[vec![2, 2, 3, 3, 0], vec![1, 1, -1, -1, 0]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.sub_dim(), 1);
        assert_eq!(a.complement_coordinates(), vec![1, 3, 4]);
        let c = LinearSubspace::from_int_vectors(&q, &[vec![1, 0, 0, 0, 0], vec![0, 0, 1, 1, 0]]).unwrap();
        assert_ne!(a, c);
        assert_eq!(a.intersection_dim(&c).unwrap(), 0);
    }

    #[test]
    fn rejects_dependent_columns() {
        let q = Rationals;
        let r = LinearSubspace::from_int_vectors(&q, &[vec![1, 2, 3], vec![2, 4, 6]]);
        assert!(matches!(r, Err(Error::RankDeficient { rank: 1, expected: 2 })));
    }

    #[test]
    fn disjoint_planes() {
        let q = Rationals;
        let a = LinearSubspace::coordinate(&q, 5, &[0, 1, 2]).unwrap();
        let b = LinearSubspace::coordinate(&q, 5, &[3, 4, 5]).unwrap();
        assert_eq!(a.intersection_dim(&b).unwrap(), -1);
        assert_eq!(a.intersection_dim(&a).unwrap(), 2);
    }
}
