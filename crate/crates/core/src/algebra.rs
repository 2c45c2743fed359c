//! Structure-constant algebras: product evaluation, polynomial-identity
//! checking, power subspaces, and nilindex.

use crate::error::CoreError;
use crate::rat::Rat;
use crate::subspace::Subspace;
use num::Zero;
use std::fmt;
use std::str::FromStr;

/// A finite-dimensional algebra given by structure constants:
/// `e_i * e_j = sum_k table[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    pub dim: usize,
    pub basis: Vec<String>,
    /// Flat row-major table of length dim^3: entry (i, j, k) at
    /// ((i * dim) + j) * dim + k.
    table: Vec<Rat>,
}

impl Algebra {
    /// Zero multiplication on `dim` generators named e1..e`dim`.
    pub fn zero_algebra(dim: usize) -> Self {
        Algebra::with_basis((1..=dim).map(|i| format!("e{i}")).collect())
    }

    pub fn with_basis(basis: Vec<String>) -> Self {
        let dim = basis.len();
        Algebra {
            dim,
            basis,
            table: vec![Rat::zero(); dim * dim * dim],
        }
    }

    pub fn from_table(basis: Vec<String>, table: Vec<Vec<Vec<Rat>>>) -> Result<Self, CoreError> {
        let dim = basis.len();
        {
            let mut seen = std::collections::BTreeSet::new();
            for name in &basis {
                if !seen.insert(name) {
                    return Err(CoreError::MalformedInput(format!(
                        "duplicate basis name {name:?}"
                    )));
                }
            }
        }
        if table.len() != dim {
            return Err(CoreError::DimensionMismatch {
                expected: dim,
                got: table.len(),
            });
        }
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for row in table {
            if row.len() != dim {
                return Err(CoreError::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            for cell in row {
                if cell.len() != dim {
                    return Err(CoreError::DimensionMismatch {
                        expected: dim,
                        got: cell.len(),
                    });
                }
                flat.extend(cell);
            }
        }
        Ok(Algebra {
            dim,
            basis,
            table: flat,
        })
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        ((i * self.dim) + j) * self.dim + k
    }

    pub fn table_entry(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.table[self.idx(i, j, k)]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, k: usize, c: Rat) {
        let idx = self.idx(i, j, k);
        self.table[idx] = c;
    }

    pub fn add_entry(&mut self, i: usize, j: usize, k: usize, c: &Rat) {
        let idx = self.idx(i, j, k);
        self.table[idx] += c;
    }

    pub fn table_nested(&self) -> Vec<Vec<Vec<Rat>>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| {
                        (0..self.dim)
                            .map(|k| self.table[self.idx(i, j, k)].clone())
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    /// The product e_i * e_j as a sparse coefficient list.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<(usize, Rat)> {
        let base = self.idx(i, j, 0);
        self.table[base..base + self.dim]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect()
    }

    /// Bilinear extension of the structure-constant table.
    pub fn multiply(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.dim, "left factor length mismatch");
        assert_eq!(y.len(), self.dim, "right factor length mismatch");
        let mut out = vec![Rat::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                let base = self.idx(i, j, 0);
                for k in 0..self.dim {
                    let t = &self.table[base + k];
                    if !t.is_zero() {
                        out[k] += &c * t;
                    }
                }
            }
        }
        out
    }

    /// The anti-associator x(yz) + (xy)z.
    pub fn anti_associator(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> Vec<Rat> {
        let left = self.multiply(&self.multiply(x, y), z);
        let right = self.multiply(x, &self.multiply(y, z));
        vec_sum(&[left, right])
    }

    /// The associator (xy)z - x(yz).
    pub fn associator(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> Vec<Rat> {
        let left = self.multiply(&self.multiply(x, y), z);
        let right = self.multiply(x, &self.multiply(y, z));
        left.iter().zip(&right).map(|(a, b)| a - b).collect()
    }

    fn unit_vector(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        v[i] = num::One::one();
        v
    }

    /// Defect of a binary identity on the vector pair (x, y); zero iff the
    /// identity holds at (x, y).
    pub fn binary_defect(&self, kind: IdentityKind, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let xy = self.multiply(x, y);
        let yx = self.multiply(y, x);
        match kind {
            IdentityKind::Commutative => xy.iter().zip(&yx).map(|(a, b)| a - b).collect(),
            IdentityKind::AntiCommutative => vec_sum(&[xy, yx]),
            _ => panic!("{kind} is not a binary identity"),
        }
    }

    /// Defect of a ternary identity on (x, y, z); zero iff it holds there.
    pub fn ternary_defect(&self, kind: IdentityKind, x: &[Rat], y: &[Rat], z: &[Rat]) -> Vec<Rat> {
        let m = |a: &[Rat], b: &[Rat]| self.multiply(a, b);
        match kind {
            IdentityKind::AntiAssociative => self.anti_associator(x, y, z),
            IdentityKind::Associative => self.associator(x, y, z),
            // x(yz) + y(zx) + z(xy), the cyclic Jacobi sum; this is also the
            // Jacobi part of the Lie check.
            IdentityKind::JacobiJordan | IdentityKind::Lie => vec_sum(&[
                m(x, &m(y, z)),
                m(y, &m(z, x)),
                m(z, &m(x, y)),
            ]),
            // x(yz) + y(zx) + z(yx)
            IdentityKind::WeaklyAssociative => vec_sum(&[
                m(x, &m(y, z)),
                m(y, &m(z, x)),
                m(z, &m(y, x)),
            ]),
            IdentityKind::WeaklyAntiAssociative => vec_sum(&[
                self.anti_associator(x, y, z),
                self.anti_associator(y, x, z),
                self.anti_associator(y, z, x),
            ]),
            IdentityKind::JJAdmissible => vec_sum(&[
                self.anti_associator(x, y, z),
                self.anti_associator(x, z, y),
                self.anti_associator(y, x, z),
                self.anti_associator(y, z, x),
                self.anti_associator(z, x, y),
                self.anti_associator(z, y, x),
            ]),
            IdentityKind::Commutative | IdentityKind::AntiCommutative => {
                panic!("{kind} is a binary identity")
            }
        }
    }

    /// Check a multilinear identity on all basis tuples (which suffices by
    /// multilinearity). On failure the witness is the lexicographically
    /// first failing tuple of basis indices together with the defect.
    pub fn check_identity(&self, kind: IdentityKind) -> IdentityReport {
        if matches!(kind, IdentityKind::Lie) {
            // A Lie algebra is anticommutative and satisfies Jacobi; report
            // the first failure of either part.
            let anti = self.check_identity(IdentityKind::AntiCommutative);
            if !anti.holds {
                return IdentityReport { kind, ..anti };
            }
        }
        let units: Vec<Vec<Rat>> = (0..self.dim).map(|i| self.unit_vector(i)).collect();
        if kind.arity() == 2 {
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let defect = self.binary_defect(kind, &units[i], &units[j]);
                    if defect.iter().any(|c| !c.is_zero()) {
                        return IdentityReport {
                            kind,
                            holds: false,
                            witness: Some(Witness {
                                indices: vec![i, j],
                                defect,
                            }),
                        };
                    }
                }
            }
        } else {
            for i in 0..self.dim {
                for j in 0..self.dim {
                    for k in 0..self.dim {
                        let defect = self.ternary_defect(kind, &units[i], &units[j], &units[k]);
                        if defect.iter().any(|c| !c.is_zero()) {
                            return IdentityReport {
                                kind,
                                holds: false,
                                witness: Some(Witness {
                                    indices: vec![i, j, k],
                                    defect,
                                }),
                            };
                        }
                    }
                }
            }
        }
        IdentityReport {
            kind,
            holds: true,
            witness: None,
        }
    }

    /// Span of all products u*v with u in U, v in V.
    pub fn product_subspace(&self, u: &Subspace, v: &Subspace) -> Subspace {
        assert_eq!(u.ambient_dim, self.dim, "left subspace ambient mismatch");
        assert_eq!(v.ambient_dim, self.dim, "right subspace ambient mismatch");
        let mut products = Vec::new();
        for a in u.basis_rows() {
            for b in v.basis_rows() {
                products.push(self.multiply(&a, &b));
            }
        }
        Subspace::span(self.dim, products)
    }

    /// The descending chain A = A^1 ⊇ A^2 ⊇ ..., where A^k is spanned by
    /// all degree-k products in every parenthesization:
    /// A^k = sum over i+j=k of A^i A^j. The chain is returned up to (and
    /// including) the first zero term, or up to the point where it
    /// stabilizes at a nonzero subspace.
    pub fn power_subspaces(&self) -> Vec<Subspace> {
        let mut chain = vec![Subspace::full(self.dim)];
        if self.dim == 0 {
            return chain;
        }
        loop {
            let k = chain.len() + 1;
            let mut next = Subspace::zero(self.dim);
            for i in 1..k {
                let j = k - i;
                next = next.sum(&self.product_subspace(&chain[i - 1], &chain[j - 1]));
            }
            let stabilized = next == *chain.last().unwrap();
            let is_zero = next.is_zero();
            chain.push(next);
            if is_zero || stabilized {
                return chain;
            }
        }
    }

    /// Least k with A^k = 0, or `Infinite` when the power chain stabilizes
    /// at a nonzero subspace.
    pub fn nilindex(&self) -> Nilindex {
        let chain = self.power_subspaces();
        match chain.iter().position(Subspace::is_zero) {
            Some(p) => Nilindex::Finite(p + 1),
            None => Nilindex::Infinite,
        }
    }
}

/// Sum of equal-length vectors.
pub fn vec_sum(vs: &[Vec<Rat>]) -> Vec<Rat> {
    let n = vs.first().map_or(0, Vec::len);
    let mut out = vec![Rat::zero(); n];
    for v in vs {
        for (o, c) in out.iter_mut().zip(v) {
            *o += c;
        }
    }
    out
}

pub fn vec_is_zero(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    AntiAssociative,
    Associative,
    Commutative,
    AntiCommutative,
    JacobiJordan,
    WeaklyAssociative,
    WeaklyAntiAssociative,
    JJAdmissible,
    Lie,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 9] = [
        IdentityKind::AntiAssociative,
        IdentityKind::Associative,
        IdentityKind::Commutative,
        IdentityKind::AntiCommutative,
        IdentityKind::JacobiJordan,
        IdentityKind::WeaklyAssociative,
        IdentityKind::WeaklyAntiAssociative,
        IdentityKind::JJAdmissible,
        IdentityKind::Lie,
    ];

    pub fn arity(self) -> usize {
        match self {
            IdentityKind::Commutative | IdentityKind::AntiCommutative => 2,
            _ => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::AntiAssociative => "anti-associative",
            IdentityKind::Associative => "associative",
            IdentityKind::Commutative => "commutative",
            IdentityKind::AntiCommutative => "anti-commutative",
            IdentityKind::JacobiJordan => "jacobi-jordan",
            IdentityKind::WeaklyAssociative => "weakly-associative",
            IdentityKind::WeaklyAntiAssociative => "weakly-anti-associative",
            IdentityKind::JJAdmissible => "jj-admissible",
            IdentityKind::Lie => "lie",
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityKind {
    type Err = CoreError;
    fn from_str(s: &str) -> Result<Self, CoreError> {
        IdentityKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| CoreError::InvalidArgument(format!("unknown identity kind {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Basis indices of the first failing tuple, 0-based, lexicographic.
    pub indices: Vec<usize>,
    /// The nonzero defect vector of the identity at that tuple.
    pub defect: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub kind: IdentityKind,
    pub holds: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nilindex {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Nilindex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nilindex::Finite(k) => write!(f, "{k}"),
            Nilindex::Infinite => f.write_str("infinite"),
        }
    }
}
