//! Small dense linear algebra helpers.

use alloc::vec::Vec;

/// Default pivot tolerance used for rank decisions.
pub const RANK_TOL: f64 = 1e-9;

/// A dense row-major real matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: alloc::vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn trace(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Appends the rows of `other` below `self`.
    pub fn stack(&mut self, other: &Matrix) {
        assert_eq!(self.cols, other.cols);
        self.data.extend_from_slice(&other.data);
        self.rows += other.rows;
    }

    /// Numerical rank by Gaussian elimination with partial pivoting; a pivot
    /// counts when its magnitude exceeds `tol`.
    pub fn rank(&self, tol: f64) -> usize {
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let (pivot, best) = (rank..rows)
                .map(|r| (r, libm::fabs(a[r * cols + col])))
                .fold((rank, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if best <= tol {
                continue;
            }
            if pivot != rank {
                for c in 0..cols {
                    a.swap(pivot * cols + c, rank * cols + c);
                }
            }
            let p = a[rank * cols + col];
            for r in rank + 1..rows {
                let f = a[r * cols + col] / p;
                if f != 0.0 {
                    for c in col..cols {
                        a[r * cols + c] -= f * a[rank * cols + c];
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

impl core::ops::Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (r, c): (usize, usize)) -> &f64 {
        &self.data[r * self.cols + c]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut f64 {
        &mut self.data[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_simple_matrices() {
        assert_eq!(Matrix::identity(4).rank(RANK_TOL), 4);
        assert_eq!(Matrix::zeros(3, 5).rank(RANK_TOL), 0);
        let m = Matrix { rows: 3, cols: 3, data: alloc::vec![1., 2., 3., 2., 4., 6., 1., 0., 1.] };
        assert_eq!(m.rank(RANK_TOL), 2);
    }

    #[test]
    fn tolerance_discards_tiny_pivots() {
        let m = Matrix { rows: 2, cols: 2, data: alloc::vec![1.0, 0.0, 0.0, 1e-12] };
        assert_eq!(m.rank(RANK_TOL), 1);
        assert_eq!(m.rank(1e-15), 2);
    }
}
