//! Multilinear maps A^arity -> A with exact rational coefficients.
//!
//! `coeffs[i1,...,ir][k]` is the coefficient of e_k in phi(e_{i1},...,e_{ir});
//! storage is a flat tensor of length dim^(arity+1).

use crate::algebra::Algebra;
use crate::rat::Rat;
use num::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilinearMap {
    pub arity: usize,
    pub dim: usize,
    coeffs: Vec<Rat>,
}

impl MultilinearMap {
    pub fn zero(arity: usize, dim: usize) -> Self {
        assert!(arity >= 1, "arity must be at least 1");
        let len = dim.pow(arity as u32 + 1);
        MultilinearMap {
            arity,
            dim,
            coeffs: vec![Rat::zero(); len],
        }
    }

    /// The multiplication of `a` as an arity-2 map.
    pub fn from_algebra(a: &Algebra) -> Self {
        let mut m = MultilinearMap::zero(2, a.dim);
        for i in 0..a.dim {
            for j in 0..a.dim {
                for k in 0..a.dim {
                    let c = a.table_entry(i, j, k);
                    if !c.is_zero() {
                        m.set_coeff(&[i, j], k, c.clone());
                    }
                }
            }
        }
        m
    }

    /// Interpret an arity-2 map as a multiplication table.
    pub fn to_algebra(&self, basis: Vec<String>) -> Algebra {
        assert_eq!(self.arity, 2, "only arity-2 maps define a multiplication");
        assert_eq!(basis.len(), self.dim);
        let mut a = Algebra::with_basis(basis);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let c = self.coeff(&[i, j], k);
                    if !c.is_zero() {
                        a.set_entry(i, j, k, c.clone());
                    }
                }
            }
        }
        a
    }

    #[inline]
    fn idx(&self, args: &[usize], k: usize) -> usize {
        debug_assert_eq!(args.len(), self.arity);
        let mut idx = 0;
        for &a in args {
            debug_assert!(a < self.dim);
            idx = idx * self.dim + a;
        }
        idx * self.dim + k
    }

    pub fn coeff(&self, args: &[usize], k: usize) -> &Rat {
        &self.coeffs[self.idx(args, k)]
    }

    pub fn set_coeff(&mut self, args: &[usize], k: usize, c: Rat) {
        let idx = self.idx(args, k);
        self.coeffs[idx] = c;
    }

    pub fn add_coeff(&mut self, args: &[usize], k: usize, c: &Rat) {
        let idx = self.idx(args, k);
        self.coeffs[idx] += c;
    }

    /// Value on a tuple of basis vectors, as a dense coordinate vector.
    pub fn eval_basis(&self, args: &[usize]) -> Vec<Rat> {
        let base = self.idx(args, 0);
        self.coeffs[base..base + self.dim].to_vec()
    }

    /// Multilinear evaluation on dense vectors.
    pub fn eval(&self, args: &[&[Rat]]) -> Vec<Rat> {
        assert_eq!(args.len(), self.arity, "wrong number of arguments");
        for v in args {
            assert_eq!(v.len(), self.dim, "argument length mismatch");
        }
        let mut out = vec![Rat::zero(); self.dim];
        let mut tuple = vec![0usize; self.arity];
        self.eval_rec(args, 0, &Rat::from_integer(1.into()), &mut tuple, &mut out);
        out
    }

    fn eval_rec(
        &self,
        args: &[&[Rat]],
        depth: usize,
        scale: &Rat,
        tuple: &mut Vec<usize>,
        out: &mut [Rat],
    ) {
        if depth == self.arity {
            let base = self.idx(tuple, 0);
            for (k, o) in out.iter_mut().enumerate() {
                let c = &self.coeffs[base + k];
                if !c.is_zero() {
                    *o += scale * c;
                }
            }
            return;
        }
        for (i, x) in args[depth].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            tuple[depth] = i;
            let s = scale * x;
            self.eval_rec(args, depth + 1, &s, tuple, out);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn add(&self, other: &MultilinearMap) -> MultilinearMap {
        assert_eq!((self.arity, self.dim), (other.arity, other.dim));
        MultilinearMap {
            arity: self.arity,
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &MultilinearMap) -> MultilinearMap {
        assert_eq!((self.arity, self.dim), (other.arity, other.dim));
        MultilinearMap {
            arity: self.arity,
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> MultilinearMap {
        MultilinearMap {
            arity: self.arity,
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// For arity 2: the map (x, y) -> phi(y, x).
    pub fn transpose2(&self) -> MultilinearMap {
        assert_eq!(self.arity, 2);
        let mut t = MultilinearMap::zero(2, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let c = self.coeff(&[i, j], k);
                    if !c.is_zero() {
                        t.set_coeff(&[j, i], k, c.clone());
                    }
                }
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.arity == 2 && *self == self.transpose2()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.arity == 2 && self.add(&self.transpose2()).is_zero()
    }

    /// Flattened coefficient view in tuple-major order, used to pose linear
    /// conditions on the space of maps.
    pub fn flat_coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn from_flat_coeffs(arity: usize, dim: usize, coeffs: Vec<Rat>) -> Self {
        assert_eq!(coeffs.len(), dim.pow(arity as u32 + 1));
        MultilinearMap { arity, dim, coeffs }
    }
}
