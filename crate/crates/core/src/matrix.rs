//! Dense row-major matrices over a small field, with reduced row echelon
//! form, kernels and subspace membership.

use std::fmt;

use crate::field::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    field: &'static Field,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl DenseMatrix {
    pub fn zeros(field: &'static Field, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// All rows must share one length; `cols` is needed when `rows` is empty.
    pub fn from_rows(field: &'static Field, cols: usize, rows: &[Vec<u8>]) -> Self {
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            m.row_mut(i).copy_from_slice(r);
        }
        m
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u8) {
        self.data[i * self.cols + j] = x;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u8] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u8> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn select_columns(&self, cols: &[usize]) -> DenseMatrix {
        let mut m = Self::zeros(self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                m.set(i, k, self.get(i, j));
            }
        }
        m
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut m = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j));
            }
        }
        m
    }

    /// `M · x`.
    pub fn mul_vec(&self, x: &[u8]) -> Vec<u8> {
        assert_eq!(x.len(), self.cols);
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(0u8, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// `self · other`.
    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a != 0 {
                    let (src, dst) = (other.row(k).to_vec(), out.row_mut(i));
                    self.field.axpy(dst, a, &src);
                }
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row[dst] += a * row[src]`.
    fn add_row_multiple(&mut self, dst: usize, a: u8, src: usize) {
        if a == 0 || dst == src {
            return;
        }
        let c = self.cols;
        let (s, d) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst * c);
            (&lo[src * c..(src + 1) * c], &mut hi[..c])
        } else {
            let (lo, hi) = self.data.split_at_mut(src * c);
            (&hi[..c], &mut lo[dst * c..(dst + 1) * c])
        };
        self.field.axpy(d, a, s);
    }

    /// Brings the matrix to reduced row echelon form in place, pivoting only
    /// on the first `limit` columns (all columns when `None`). Returns the
    /// pivot columns; pivot row `i` holds pivot `pivots[i]`.
    pub fn rref_limited(&mut self, limit: Option<usize>) -> Vec<usize> {
        let f = self.field;
        let limit = limit.unwrap_or(self.cols).min(self.cols);
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..limit {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| self.get(i, col) != 0) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = f.inv(self.get(row, col)).expect("nonzero pivot");
            if inv != 1 {
                f.scale(self.row_mut(row), inv);
            }
            for i in 0..self.rows {
                let a = self.get(i, col);
                if i != row && a != 0 {
                    self.add_row_multiple(i, f.neg(a), row);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rref(&mut self) -> Vec<usize> {
        self.rref_limited(None)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A basis of `{x : M x = 0}`, one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<Vec<u8>> {
        let mut r = self.clone();
        let pivots = r.rref();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&j| !is_pivot[j])
            .map(|free| {
                let mut x = vec![0u8; self.cols];
                x[free] = 1;
                for (i, &p) in pivots.iter().enumerate() {
                    x[p] = f.neg(r.get(i, free));
                }
                x
            })
            .collect()
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:?} {}x{}", self.field, self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// A linear subspace kept as an RREF basis, for membership tests.
#[derive(Clone, Debug)]
pub struct Subspace {
    basis: DenseMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: &'static Field, dim: usize, generators: &[Vec<u8>]) -> Self {
        let mut m = DenseMatrix::from_rows(field, dim, generators);
        let pivots = m.rref();
        let basis = DenseMatrix::from_rows(field, dim, &m.to_rows()[..pivots.len()]);
        Subspace { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> Vec<Vec<u8>> {
        self.basis.to_rows()
    }

    /// Reduces `x` modulo the subspace; the result is zero iff `x` is a member.
    pub fn reduce(&self, x: &mut [u8]) {
        let f = self.basis.field();
        for (i, &p) in self.pivots.iter().enumerate() {
            let a = x[p];
            if a != 0 {
                f.axpy(x, f.neg(a), self.basis.row(i));
            }
        }
    }

    pub fn contains(&self, x: &[u8]) -> bool {
        let mut y = x.to_vec();
        self.reduce(&mut y);
        y.iter().all(|&a| a == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeededRng;

    fn random_matrix(rng: &mut SeededRng, q: usize, rows: usize, cols: usize) -> DenseMatrix {
        let f = Field::get(q).unwrap();
        let data: Vec<Vec<u8>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.below(q) as u8).collect())
            .collect();
        DenseMatrix::from_rows(f, cols, &data)
    }

    #[test]
    fn rank_nullity_on_random_matrices() {
        for seed in 0..100u64 {
            let mut rng = SeededRng::new(seed);
            let q = [2, 3, 4, 5, 7, 8, 9][seed as usize % 7];
            let n = 1 + rng.below(12);
            let r = 1 + rng.below(12);
            let m = random_matrix(&mut rng, q, r, n);
            let kernel = m.kernel_basis();
            assert_eq!(m.rank() + kernel.len(), n);
            for x in &kernel {
                assert!(m.mul_vec(x).iter().all(|&a| a == 0));
            }
            // kernel vectors are independent
            assert_eq!(DenseMatrix::from_rows(m.field(), n, &kernel).rank(), kernel.len());
        }
    }

    #[test]
    fn subspace_membership() {
        let f = Field::get(3).unwrap();
        let s = Subspace::span(f, 3, &[vec![1, 2, 0], vec![0, 1, 1]]);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[1, 0, 1]));
        assert!(!s.contains(&[1, 0, 2]));
        assert!(s.contains(&[2, 1, 0]));
        assert!(!s.contains(&[0, 0, 1]));
    }

    #[test]
    fn matrix_product_matches_mul_vec() {
        let mut rng = SeededRng::new(7);
        let a = random_matrix(&mut rng, 5, 3, 4);
        let b = random_matrix(&mut rng, 5, 4, 2);
        let ab = a.mul(&b);
        for j in 0..2 {
            assert_eq!(ab.column(j), a.mul_vec(&b.column(j)));
        }
    }
}
