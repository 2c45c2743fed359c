//! Subspaces of Q^n with a canonical representation.
//!
//! A `Subspace` stores its basis as the reduced row echelon form of any
//! spanning set, so two subspaces are equal as sets iff they are equal as
//! structs. Sums stack bases; intersections use the Zassenhaus block trick.

use crate::matrix::{rref_in_place, Matrix};
use crate::rat::Rat;
use num::Zero;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub ambient_dim: usize,
    /// Basis rows in reduced row echelon form; no zero rows.
    basis: Matrix,
}

impl Subspace {
    /// Span of the given vectors inside Q^ambient_dim.
    pub fn span(ambient_dim: usize, vectors: Vec<Vec<Rat>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient_dim, "vector length mismatch");
        }
        let mut m = Matrix::from_rows(vectors);
        if m.rows == 0 {
            m.cols = ambient_dim;
        }
        let rank = rref_in_place(&mut m);
        let basis = Matrix::from_rows(m.rows_vec().into_iter().take(rank).collect());
        let basis = if rank == 0 {
            Matrix::zero(0, ambient_dim)
        } else {
            basis
        };
        Subspace { ambient_dim, basis }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace::span(ambient_dim, Vec::new())
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis_rows(&self) -> Vec<Vec<Rat>> {
        self.basis.rows_vec()
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        let mut v = v.to_vec();
        for i in 0..self.basis.rows {
            let lead = self.basis.row(i).iter().position(|x| !x.is_zero()).unwrap();
            if !v[lead].is_zero() {
                let c = v[lead].clone();
                for (x, b) in v.iter_mut().zip(self.basis.row(i)) {
                    *x -= &c * b;
                }
            }
        }
        v.iter().all(Rat::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_rows().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Subspace::span(self.ambient_dim, rows)
    }

    /// Zassenhaus: row-reduce [A | A; B | 0]; rows with zero left half carry
    /// the intersection in their right half.
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let n = self.ambient_dim;
        let mut rows = Vec::new();
        for a in self.basis_rows() {
            let mut row = a.clone();
            row.extend(a);
            rows.push(row);
        }
        for b in other.basis_rows() {
            let mut row = b;
            row.extend(vec![Rat::zero(); n]);
            rows.push(row);
        }
        let mut m = Matrix::from_rows(rows);
        if m.rows == 0 {
            m.cols = 2 * n;
        }
        rref_in_place(&mut m);
        let mut inter = Vec::new();
        for i in 0..m.rows {
            let left_zero = m.row(i)[..n].iter().all(Rat::is_zero);
            let right = m.row(i)[n..].to_vec();
            if left_zero && right.iter().any(|x| !x.is_zero()) {
                inter.push(right);
            }
        }
        Subspace::span(n, inter)
    }
}

/// Incremental echelon form with sparse rows, used for large rank
/// computations where most coefficients are zero (operad ideals,
/// substitution-closed relation spaces). Rows are reduced against the
/// pivots seen so far; the rank is the number of surviving rows.
#[derive(Debug, Default)]
pub struct SparseEchelon {
    /// pivot column -> reduced row (normalized so the pivot entry is 1).
    rows: BTreeMap<usize, BTreeMap<usize, Rat>>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        SparseEchelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current rows; if a nonzero remainder survives,
    /// install it as a new pivot row and return true.
    pub fn insert(&mut self, v: &[(usize, Rat)]) -> bool {
        let mut row: BTreeMap<usize, Rat> = v
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (*i, c.clone()))
            .collect();
        loop {
            let Some((&lead, _)) = row.iter().next() else {
                return false;
            };
            let Some(pivot) = self.rows.get(&lead) else {
                break;
            };
            let c = row.get(&lead).unwrap().clone();
            for (j, p) in pivot {
                let entry = row.entry(*j).or_insert_with(Rat::zero);
                *entry -= &c * p;
                if entry.is_zero() {
                    row.remove(j);
                }
            }
        }
        // Install with the leading coefficient normalized to 1.
        let (&lead, c0) = row.iter().next().unwrap();
        let inv = Rat::from_integer(1.into()) / c0.clone();
        let normalized: BTreeMap<usize, Rat> = row.iter().map(|(j, c)| (*j, c * &inv)).collect();
        self.rows.insert(lead, normalized);
        true
    }

    /// The reduced rows accumulated so far (a basis of the span), sparse,
    /// ordered by pivot column.
    pub fn basis_rows(&self) -> Vec<Vec<(usize, Rat)>> {
        self.rows
            .values()
            .map(|row| row.iter().map(|(j, c)| (*j, c.clone())).collect())
            .collect()
    }

    /// Reduce `v` without inserting; returns true if it lies in the span.
    pub fn reduces_to_zero(&self, v: &[(usize, Rat)]) -> bool {
        let mut row: BTreeMap<usize, Rat> = v
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (*i, c.clone()))
            .collect();
        loop {
            let Some((&lead, _)) = row.iter().next() else {
                return true;
            };
            let Some(pivot) = self.rows.get(&lead) else {
                return false;
            };
            let c = row.get(&lead).unwrap().clone();
            for (j, p) in pivot {
                let entry = row.entry(*j).or_insert_with(Rat::zero);
                *entry -= &c * p;
                if entry.is_zero() {
                    row.remove(j);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rint(x)).collect()
    }

    #[test]
    fn span_canonicalizes_generating_sets() {
        let a = Subspace::span(3, vec![v(&[1, 1, 0]), v(&[0, 0, 1])]);
        let b = Subspace::span(3, vec![v(&[2, 2, 2]), v(&[0, 0, 5]), v(&[1, 1, 3])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn contains_and_membership() {
        let s = Subspace::span(3, vec![v(&[1, 0, 1]), v(&[0, 1, 1])]);
        assert!(s.contains(&v(&[1, 1, 2])));
        assert!(s.contains(&v(&[0, 0, 0])));
        assert!(!s.contains(&v(&[0, 0, 1])));
        assert!(s.contains(&[rat(1, 2), rat(1, 2), rat(1, 1)]));
    }

    #[test]
    fn zero_and_full_subspaces() {
        let z = Subspace::zero(4);
        let f = Subspace::full(4);
        assert_eq!(z.dim(), 0);
        assert_eq!(f.dim(), 4);
        assert!(f.contains_subspace(&z));
        assert_eq!(z.sum(&f), f);
        assert_eq!(z.intersection(&f), z);
    }

    #[test]
    fn intersection_of_planes_in_three_space() {
        // (x, y, 0) meet (0, y, z) = the y-axis.
        let a = Subspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let i = a.intersection(&b);
        assert_eq!(i, Subspace::span(3, vec![v(&[0, 1, 0])]));
    }

    #[test]
    fn sparse_echelon_matches_dense_rank() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let rows = rng.gen_range(1..8);
            let cols = rng.gen_range(1..8);
            let dense: Vec<Vec<Rat>> = (0..rows)
                .map(|_| (0..cols).map(|_| rint(rng.gen_range(-3..=3))).collect())
                .collect();
            let mut ech = SparseEchelon::new();
            for r in &dense {
                let sparse: Vec<(usize, Rat)> =
                    r.iter().cloned().enumerate().collect();
                ech.insert(&sparse);
            }
            let m = Matrix::from_rows(dense);
            assert_eq!(ech.rank(), m.rank());
        }
    }

    #[test]
    fn sparse_echelon_detects_membership() {
        let mut ech = SparseEchelon::new();
        ech.insert(&[(0, rint(1)), (2, rint(1))]);
        ech.insert(&[(1, rint(1))]);
        assert!(ech.reduces_to_zero(&[(0, rint(2)), (1, rint(3)), (2, rint(2))]));
        assert!(!ech.reduces_to_zero(&[(2, rint(1))]));
        assert!(ech.reduces_to_zero(&[]));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn grassmann_dimension_identity(
            avecs in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 0..4),
            bvecs in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 0..4),
        ) {
            let a = Subspace::span(4, avecs.iter().map(|r| v(r)).collect());
            let b = Subspace::span(4, bvecs.iter().map(|r| v(r)).collect());
            let s = a.sum(&b);
            let i = a.intersection(&b);
            prop_assert_eq!(a.dim() + b.dim(), s.dim() + i.dim());
            prop_assert!(s.contains_subspace(&a));
            prop_assert!(s.contains_subspace(&b));
            prop_assert!(a.contains_subspace(&i));
            prop_assert!(b.contains_subspace(&i));
        }
    }
}
