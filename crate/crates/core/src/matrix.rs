//! Dense matrices over an integral domain and their exact determinants.

use crate::dense::IntegralDomain;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: IntegralDomain> Matrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        let n = rows.len();
        Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero_elem(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn without_row(&self, drop: usize) -> Self {
        let rows = (0..self.rows)
            .filter(|&i| i != drop)
            .map(|i| self.row(i).to_vec())
            .collect();
        Self::from_rows(rows, self.cols)
    }

    pub fn without_col(&self, drop: usize) -> Self {
        let rows = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != drop)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        Self::from_rows(rows, self.cols - 1)
    }

    fn check_square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    /// Exact determinant: cofactor expansion up to 4x4, Bareiss beyond.
    pub fn det(&self) -> Result<R> {
        self.check_square()?;
        if self.rows <= 4 {
            self.det_cofactor()
        } else {
            self.det_bareiss()
        }
    }

    /// Fraction-free Bareiss elimination with row pivoting.
    pub fn det_bareiss(&self) -> Result<R> {
        self.check_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(R::one_elem());
        }
        let mut m: Vec<Vec<R>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = R::one_elem();
        for k in 0..n - 1 {
            if m[k][k].is_zero_elem() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero_elem()) else {
                    return Ok(R::zero_elem());
                };
                m.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                    m[i][j] = num.exact_div(&prev).expect("Bareiss quotients are exact");
                }
                m[i][k] = R::zero_elem();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if negate { d.neg() } else { d })
    }

    /// Laplace expansion along the first row.
    pub fn det_cofactor(&self) -> Result<R> {
        self.check_square()?;
        let idx: Vec<usize> = (0..self.cols).collect();
        Ok(self.cofactor_rec(0, &idx))
    }

    fn cofactor_rec(&self, row: usize, cols: &[usize]) -> R {
        if cols.is_empty() {
            return R::one_elem();
        }
        let mut acc = R::zero_elem();
        for (k, &c) in cols.iter().enumerate() {
            let a = self.get(row, c);
            if a.is_zero_elem() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&j| j != c).collect();
            let term = a.mul(&self.cofactor_rec(row + 1, &rest));
            acc = if k % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        acc
    }
}
