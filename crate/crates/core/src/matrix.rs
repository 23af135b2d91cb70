//! Dense exact matrices over ℚ(i) with fraction-free rank computation.

use std::fmt;

use num_traits::Zero;

use crate::gaussian::GaussianRational;

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![GaussianRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.set(k, k, 1.into());
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|a| (0..a).all(|b| self.get(a, b) == self.get(b, a)))
    }

    /// Rank by Bareiss elimination with row pivoting.
    ///
    /// Columns without a pivot are skipped; the running divisor is always the
    /// last pivot used, so every division below is exact.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<GaussianRational>> =
            (0..self.rows).map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec()).collect();
        let mut prev = GaussianRational::from_int(1);
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let pivot = a[rank][col].clone();
            for r in rank + 1..self.rows {
                let factor = a[r][col].clone();
                for c in col + 1..self.cols {
                    let v = &(&(&pivot * &a[r][c]) - &(&factor * &a[rank][c])) / &prev;
                    a[r][c] = v;
                }
                a[r][col] = GaussianRational::zero();
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_zero() {
        assert_eq!(ExactMatrix::identity(3).rank(), 3);
        assert_eq!(ExactMatrix::zeros(5, 5).rank(), 0);
        assert_eq!(ExactMatrix::zeros(5, 5).kernel_dim(), 5);
    }

    #[test]
    fn dependent_rows() {
        let m = ExactMatrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let wide = ExactMatrix::from_i64(&[vec![0, 0, 1, 2], vec![0, 0, 2, 4]]);
        assert_eq!(wide.rank(), 1);
    }

    #[test]
    fn complex_rank() {
        // rows (1, i) and (i, -1) are proportional over ℚ(i)
        let i = GaussianRational::i();
        let m = ExactMatrix::from_rows(vec![vec![1.into(), i.clone()], vec![i.clone(), (-1).into()]]);
        assert_eq!(m.rank(), 1);
    }
}
