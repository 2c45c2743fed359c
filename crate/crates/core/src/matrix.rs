//! Dense matrices over the exact rationals.
//!
//! Row-major storage; `rref` produces the unique reduced row echelon form
//! (pivots 1, pivot columns cleared, zero rows last), which downstream code
//! relies on for canonical subspace bases.

use crate::rat::{rint, Rat};
use num::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rint(x)).collect())
                .collect(),
        )
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mat_mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let cell = &out[(i, j)] + &(a * b);
                        out[(i, j)] = cell;
                    }
                }
            }
        }
        out
    }

    pub fn mat_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &Rat) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form together with the rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let rank = rref_in_place(&mut m);
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Canonical basis of the right null space `{v : M v = 0}`, one kernel
    /// vector per row, itself in reduced row echelon form.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, rank) = self.rref();
        let mut pivot_of_col = vec![None; self.cols];
        let mut pivot_cols = Vec::with_capacity(rank);
        for i in 0..rank {
            let j = r.row(i).iter().position(|x| !x.is_zero()).unwrap();
            pivot_of_col[j] = Some(i);
            pivot_cols.push(j);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (&pc, i) in pivot_cols.iter().zip(0..rank) {
                v[pc] = -r[(i, free)].clone();
            }
            basis.push(v);
        }
        let mut k = Matrix::from_rows(basis);
        if k.rows == 0 {
            k.cols = self.cols;
        }
        rref_in_place(&mut k);
        k
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Gauss-Jordan elimination to the unique RREF; returns the rank.
pub fn rref_in_place(m: &mut Matrix) -> usize {
    let mut pivot_row = 0;
    for col in 0..m.cols {
        if pivot_row == m.rows {
            break;
        }
        let Some(src) = (pivot_row..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
            continue;
        };
        if src != pivot_row {
            for j in 0..m.cols {
                let tmp = m[(src, j)].clone();
                m[(src, j)] = m[(pivot_row, j)].clone();
                m[(pivot_row, j)] = tmp;
            }
        }
        let inv = {
            let p = &m[(pivot_row, col)];
            Rat::one() / p.clone()
        };
        for j in col..m.cols {
            let scaled = &m[(pivot_row, j)] * &inv;
            m[(pivot_row, j)] = scaled;
        }
        for i in 0..m.rows {
            if i == pivot_row || m[(i, col)].is_zero() {
                continue;
            }
            let factor = m[(i, col)].clone();
            for j in col..m.cols {
                let delta = &m[(pivot_row, j)] * &factor;
                let cell = &m[(i, j)] - &delta;
                m[(i, j)] = cell;
            }
        }
        pivot_row += 1;
    }
    pivot_row
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use num::bigint::BigInt;
    use num::{One, Signed, Zero};
    use rand::{Rng, SeedableRng};

    /// Independent rank oracle: fraction-free (Bareiss-style) elimination
    /// over the integers, sharing no code with `rref`.
    fn fraction_free_rank(rows: &mut Vec<Vec<BigInt>>) -> usize {
        let cols = rows.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            for i in rank + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let (a, b) = (rows[rank][col].clone(), rows[i][col].clone());
                for j in 0..cols {
                    let t = &rows[i][j] * &a - &rows[rank][j] * &b;
                    rows[i][j] = t;
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    #[test]
    fn rref_of_dependent_rows() {
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(r, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_identity_is_fixed_point() {
        let id = Matrix::identity(4);
        let (r, rank) = id.rref();
        assert_eq!(rank, 4);
        assert_eq!(r, id);
    }

    #[test]
    fn rref_clears_above_and_below_pivots() {
        let m = Matrix::from_i64(&[&[0, 2, 4], &[1, 1, 1], &[2, 2, 2]]);
        let (r, rank) = m.rref();
        assert_eq!(rank, 2);
        assert_eq!(r, Matrix::from_i64(&[&[1, 0, -1], &[0, 1, 2], &[0, 0, 0]]));
    }

    #[test]
    fn rref_handles_rational_pivots() {
        let m = Matrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 4), rat(1, 5)]]);
        let (_, rank) = m.rref();
        assert_eq!(rank, 2);
    }

    #[test]
    fn kernel_of_projection() {
        // x + y + z = 0 has a 2-dimensional kernel.
        let m = Matrix::from_i64(&[&[1, 1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.rows, 2);
        for i in 0..k.rows {
            assert!(m.mat_vec(k.row(i)).iter().all(Rat::is_zero));
        }
    }

    #[test]
    fn kernel_of_invertible_matrix_is_trivial() {
        let m = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        assert_eq!(m.kernel_basis().rows, 0);
    }

    #[test]
    fn kernel_satisfies_rank_nullity_and_multiplies_back_to_zero() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let rows = rng.gen_range(1..6);
            let cols = rng.gen_range(1..6);
            let m = Matrix::from_rows(
                (0..rows)
                    .map(|_| (0..cols).map(|_| rint(rng.gen_range(-3..=3))).collect())
                    .collect(),
            );
            let rank = m.rank();
            let k = m.kernel_basis();
            assert_eq!(rank + k.rows, cols);
            for i in 0..k.rows {
                assert!(m.mat_vec(k.row(i)).iter().all(Rat::is_zero));
            }
        }
    }

    #[test]
    fn rank_matches_fraction_free_oracle_on_random_integer_matrices() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..60 {
            let rows = rng.gen_range(1..7);
            let cols = rng.gen_range(1..7);
            let ints: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(-4..=4)).collect())
                .collect();
            let m = Matrix::from_rows(
                ints.iter()
                    .map(|r| r.iter().map(|&x| rint(x)).collect())
                    .collect(),
            );
            let mut big: Vec<Vec<BigInt>> = ints
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            assert_eq!(m.rank(), fraction_free_rank(&mut big));
        }
    }

    #[test]
    fn rref_output_is_canonical() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let m = Matrix::from_rows(
                (0..4)
                    .map(|_| (0..5).map(|_| rint(rng.gen_range(-2..=2))).collect())
                    .collect(),
            );
            let (r, rank) = m.rref();
            let mut last_pivot: Option<usize> = None;
            for i in 0..rank {
                let j = r.row(i).iter().position(|x| !x.is_zero()).unwrap();
                assert!(r[(i, j)].is_one());
                assert!(last_pivot.map_or(true, |p| p < j), "pivots not increasing");
                for i2 in 0..r.rows {
                    if i2 != i {
                        assert!(r[(i2, j)].is_zero(), "pivot column not cleared");
                    }
                }
                last_pivot = Some(j);
            }
            for i in rank..r.rows {
                assert!(r.row(i).iter().all(Rat::is_zero));
            }
            // Idempotent: the RREF of an RREF is itself.
            assert_eq!(r.rref().0, r);
        }
    }

    #[test]
    fn mat_mul_agrees_with_mat_vec() {
        let a = Matrix::from_i64(&[&[1, 2], &[3, 4], &[5, 6]]);
        let b = Matrix::from_i64(&[&[7, 8], &[9, 10]]);
        let ab = a.mat_mul(&b);
        for j in 0..b.cols {
            let col: Vec<Rat> = (0..b.rows).map(|i| b[(i, j)].clone()).collect();
            let av = a.mat_vec(&col);
            for i in 0..a.rows {
                assert_eq!(ab[(i, j)], av[i]);
            }
        }
    }

    #[test]
    fn rank_is_invariant_under_transpose() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank(), m.transpose().rank());
        assert!(!m
            .rref()
            .0
            .rows_vec()
            .iter()
            .flatten()
            .any(|x| x.denom().is_negative()));
    }
}
