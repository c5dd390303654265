//! Dense exact matrices with Gauss-Jordan elimination.

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>, // row-major
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    pub matrix: ExactMatrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Self { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, got: r.len() });
            }
            data.extend(r);
        }
        Ok(Self { field: field.clone(), rows: n, cols, data })
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Keeps only the listed rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Self { field: self.field.clone(), rows: rows.len(), cols: self.cols, data }
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect())
    }

    /// Reduced row echelon form (pivots normalized to one).
    pub fn rref(&self) -> Echelon<F> {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !f.is_zero(m.get(r, c))) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = f.inv(m.get(lead, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(m.get(lead, j), &inv);
                m.set(lead, j, v);
            }
            let pivot_row: Vec<F::Elem> = m.row(lead)[c..].to_vec();
            for r in 0..m.rows {
                if r == lead {
                    continue;
                }
                let factor = m.get(r, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let base = r * m.cols;
                for (k, pv) in pivot_row.iter().enumerate() {
                    if f.is_zero(pv) {
                        continue;
                    }
                    let idx = base + c + k;
                    m.data[idx] = f.sub(&m.data[idx], &f.mul(&factor, pv));
                }
            }
            pivots.push(c);
            lead += 1;
        }
        Echelon { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        // eliminate along the shorter side
        if self.rows > self.cols {
            self.transpose().rank_by_rows()
        } else {
            self.rank_by_rows()
        }
    }

    /// Forward elimination only; cheaper than a full rref.
    fn rank_by_rows(&self) -> usize {
        let f = &self.field;
        let mut m = self.clone();
        let mut rank = 0;
        for c in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&r| !f.is_zero(m.get(r, c))) else {
                continue;
            };
            m.swap_rows(rank, p);
            let inv = f.inv(m.get(rank, c)).expect("pivot is nonzero");
            let pivot_row: Vec<F::Elem> = m.row(rank)[c..].iter().map(|x| f.mul(x, &inv)).collect();
            for r in rank + 1..m.rows {
                let factor = m.get(r, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let base = r * m.cols + c;
                for (k, pv) in pivot_row.iter().enumerate() {
                    if !f.is_zero(pv) {
                        m.data[base + k] = f.sub(&m.data[base + k], &f.mul(&factor, pv));
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Canonical kernel basis: one vector per free column `j`, with a one in
    /// position `j`, zeros at the other free columns, read off the rref.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let Echelon { matrix: r, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&j| !is_pivot[j])
            .map(|j| {
                let mut v = vec![f.zero(); self.cols];
                v[j] = f.one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = f.neg(r.get(row, j));
                }
                v
            })
            .collect()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    #[test]
    fn identity_and_zero() {
        let q = Rationals;
        let id = ExactMatrix::identity(&q, 3);
        assert_eq!(id.rank(), 3);
        assert!(id.kernel_basis().is_empty());
        let z = ExactMatrix::zeros(&q, 2, 5);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_basis().len(), 5);
    }

    #[test]
    fn one_by_two() {
        let q = Rationals;
        let m = ExactMatrix::from_rows(&q, 2, vec![vec![q.from_i64(3), q.from_i64(5)]]).unwrap();
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![q.from_ratio(&(-5).into(), &3.into()).unwrap(), q.one()]);
    }

    #[test]
    fn dimension_errors() {
        let q = Rationals;
        assert!(ExactMatrix::from_rows(&q, 2, vec![vec![q.one()]]).is_err());
        let m = ExactMatrix::identity(&q, 2);
        assert!(m.mul_vec(&[q.one()]).is_err());
    }

    proptest! {
        #[test]
        fn kernel_and_rank_invariants(
            rows in 1usize..7,
            cols in 1usize..9,
            seed in proptest::collection::vec(0u64..5, 64),
        ) {
            // small entries in F_7 produce plenty of rank drops
            let f = PrimeField::new(7).unwrap();
            let data: Vec<Vec<_>> = (0..rows)
                .map(|r| (0..cols).map(|c| f.elem(seed[(r * cols + c) % 64])).collect())
                .collect();
            let m = ExactMatrix::from_rows(&f, cols, data).unwrap();
            let rank = m.rank();
            prop_assert_eq!(rank, m.transpose().rank());
            prop_assert_eq!(rank, m.rref().pivots.len());
            let kernel = m.kernel_basis();
            prop_assert_eq!(rank + kernel.len(), cols);
            for v in &kernel {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| f.is_zero(x)));
            }
            // kernel vectors are independent
            if !kernel.is_empty() {
                let k = ExactMatrix::from_rows(&f, cols, kernel.clone()).unwrap();
                prop_assert_eq!(k.rank(), kernel.len());
            }
        }
    }
}
