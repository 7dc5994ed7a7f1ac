//! Dense matrices over GF(p), with the column-stable Gauss-Jordan reduction
//! that code construction relies on (pivots are never permuted, so the
//! systematic symbol positions are preserved).

use std::ops::{Index, IndexMut};

use crate::gf::{PrimeModulus, Residue};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    modulus: PrimeModulus,
    data: Vec<Residue>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, p: PrimeModulus) -> Self {
        Self {
            rows,
            cols,
            modulus: p,
            data: vec![p.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, p: PrimeModulus) -> Self {
        let mut m = Self::zeros(n, n, p);
        for i in 0..n {
            m[(i, i)] = p.one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u64>], p: PrimeModulus) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&v| p.residue(v)));
        }
        Self {
            rows: r,
            cols: c,
            modulus: p,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn row(&self, i: usize) -> &[Residue] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows_u64(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|r| r.value()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows, self.modulus);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols, self.modulus);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self[(i, t)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] = out[(i, j)] + a * rhs[(t, j)];
                }
            }
        }
        out
    }

    /// Row vector times matrix: v (1 x rows) * self -> 1 x cols.
    pub fn left_mul(&self, v: &[Residue]) -> Vec<Residue> {
        assert_eq!(v.len(), self.rows, "shape mismatch");
        let mut out = vec![self.modulus.zero(); self.cols];
        for (i, &vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                out[j] = out[j] + vi * self[(i, j)];
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    pub fn submatrix(&self, row0: usize, rows: usize, col0: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(rows, cols, self.modulus);
        for i in 0..rows {
            for j in 0..cols {
                out[(i, j)] = self[(row0 + i, col0 + j)];
            }
        }
        out
    }

    /// Gauss-Jordan reduction without column permutation.
    ///
    /// Returns the fully reduced matrix (zero rows sunk to the bottom) and
    /// the pivot column indices in order.
    pub fn reduced_row_echelon(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(pr) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for j in 0..m.cols {
                m[(r, j)] = m[(r, j)] * inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)];
                    for j in 0..m.cols {
                        m[(i, j)] = m[(i, j)] - f * m[(r, j)];
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.reduced_row_echelon().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Residue;
    fn index(&self, (i, j): (usize, usize)) -> &Residue {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Residue {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}
