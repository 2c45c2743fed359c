//! Multiplication operators and the spaces built from them: L_x, R_x,
//! the multiplication algebra and its Lie counterpart, derivation and
//! anti-derivation spaces, and inner anti-derivations.
//!
//! Endomorphisms are dim x dim matrices acting on coordinate columns;
//! f(e_j) is column j. They are vectorized row-major (entry (r, s) at
//! position r*dim + s) when treated as points of a subspace.

use crate::algebra::{Algebra, IdentityKind, Nilindex};
use crate::error::CoreError;
use crate::matrix::Matrix;
use crate::rat::Rat;
use crate::subspace::{SparseEchelon, Subspace};
use num::Zero;
use std::collections::BTreeMap;

pub type Endo = Matrix;

/// Matrix of y -> x y.
pub fn left_mult(a: &Algebra, x: &[Rat]) -> Endo {
    assert_eq!(x.len(), a.dim);
    let mut m = Matrix::zero(a.dim, a.dim);
    for j in 0..a.dim {
        let mut col = vec![Rat::zero(); a.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (k, c) in a.basis_product(i, j) {
                col[k] += xi * &c;
            }
        }
        for k in 0..a.dim {
            m[(k, j)] = std::mem::take(&mut col[k]);
        }
    }
    m
}

/// Matrix of y -> y x.
pub fn right_mult(a: &Algebra, x: &[Rat]) -> Endo {
    assert_eq!(x.len(), a.dim);
    let mut m = Matrix::zero(a.dim, a.dim);
    for j in 0..a.dim {
        let mut col = vec![Rat::zero(); a.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (k, c) in a.basis_product(j, i) {
                col[k] += xi * &c;
            }
        }
        for k in 0..a.dim {
            m[(k, j)] = std::mem::take(&mut col[k]);
        }
    }
    m
}

/// L_x + R_x, the inner anti-derivation attached to x.
pub fn ad_tilde(a: &Algebra, x: &[Rat]) -> Endo {
    left_mult(a, x).add(&right_mult(a, x))
}

pub fn commutator(f: &Endo, g: &Endo) -> Endo {
    f.mat_mul(g).sub(&g.mat_mul(f))
}

/// f • g = f∘g + g∘f.
pub fn symmetric_product(f: &Endo, g: &Endo) -> Endo {
    f.mat_mul(g).add(&g.mat_mul(f))
}

pub fn vectorize(m: &Endo) -> Vec<Rat> {
    let mut v = Vec::with_capacity(m.rows * m.cols);
    for i in 0..m.rows {
        v.extend_from_slice(m.row(i));
    }
    v
}

pub fn endo_from_vec(dim: usize, v: &[Rat]) -> Endo {
    assert_eq!(v.len(), dim * dim);
    let mut m = Matrix::zero(dim, dim);
    for r in 0..dim {
        for s in 0..dim {
            m[(r, s)] = v[r * dim + s].clone();
        }
    }
    m
}

/// Sparse rows of the (anti-)derivation system over the n^2 endomorphism
/// coordinates: one equation per basis pair and output component. `sign`
/// is -1 for derivations (f(xy) - xf(y) - f(x)y = 0) and +1 for
/// anti-derivations (f(xy) + xf(y) + f(x)y = 0).
fn derivation_system_echelon(a: &Algebra, sign: i64) -> SparseEchelon {
    let n = a.dim;
    let s = crate::rat::rint(sign);
    let mut ech = SparseEchelon::new();
    for i in 0..n {
        for j in 0..n {
            let prod_ij = a.basis_product(i, j);
            for k in 0..n {
                let mut row: BTreeMap<usize, Rat> = BTreeMap::new();
                // f(e_i e_j) component k depends on f[k][m].
                for (m, c) in &prod_ij {
                    *row.entry(k * n + m).or_insert_with(Rat::zero) += c;
                }
                // e_i f(e_j): sum_r f[r][j] T[i][r][k].
                for r in 0..n {
                    let t = a.table_entry(i, r, k);
                    if !t.is_zero() {
                        *row.entry(r * n + j).or_insert_with(Rat::zero) += &s * t;
                    }
                }
                // f(e_i) e_j: sum_r f[r][i] T[r][j][k].
                for r in 0..n {
                    let t = a.table_entry(r, j, k);
                    if !t.is_zero() {
                        *row.entry(r * n + i).or_insert_with(Rat::zero) += &s * t;
                    }
                }
                let v: Vec<(usize, Rat)> =
                    row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                if !v.is_empty() {
                    ech.insert(&v);
                }
            }
        }
    }
    ech
}

fn derivation_space_signed(a: &Algebra, sign: i64) -> Subspace {
    let n = a.dim;
    let ech = derivation_system_echelon(a, sign);
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for sparse in ech.basis_rows() {
        let mut dense = vec![Rat::zero(); n * n];
        for (j, c) in sparse {
            dense[j] = c;
        }
        rows.push(dense);
    }
    let mut m = Matrix::from_rows(rows);
    if m.rows == 0 {
        m.cols = n * n;
    }
    Subspace::span(n * n, m.kernel_basis().rows_vec())
}

/// Solutions of f(xy) = xf(y) + f(x)y, as vectorized endomorphisms.
pub fn derivation_space(a: &Algebra) -> Subspace {
    derivation_space_signed(a, -1)
}

/// Solutions of f(xy) + xf(y) + f(x)y = 0.
pub fn anti_derivation_space(a: &Algebra) -> Subspace {
    derivation_space_signed(a, 1)
}

/// Dimension of the (anti-)derivation space without materializing a kernel
/// basis; rank-only sparse elimination, usable at larger dimensions.
pub fn derivation_space_dim(a: &Algebra, anti: bool) -> usize {
    let n = a.dim;
    let ech = derivation_system_echelon(a, if anti { 1 } else { -1 });
    n * n - ech.rank()
}

/// Span of the inner anti-derivations ad(x) = L_x + R_x; defined for
/// anti-associative algebras (where each ad(x) is an anti-derivation).
pub fn inner_anti_derivations(a: &Algebra) -> Result<Subspace, CoreError> {
    let report = a.check_identity(IdentityKind::AntiAssociative);
    if !report.holds {
        return Err(CoreError::Precondition(
            "inner anti-derivations require an anti-associative algebra".into(),
        ));
    }
    let mut unit = vec![Rat::zero(); a.dim];
    let mut rows = Vec::new();
    for i in 0..a.dim {
        unit[i] = crate::rat::rint(1);
        rows.push(vectorize(&ad_tilde(a, &unit)));
        unit[i] = Rat::zero();
    }
    Ok(Subspace::span(a.dim * a.dim, rows))
}

#[derive(Debug, Clone)]
pub struct OperatorAlgebraReport {
    pub dim: usize,
    /// Associative nilindex for the multiplication algebra; lower-central
    /// nilindex for the Lie closure.
    pub nilindex: Nilindex,
    /// Dimension of the derived algebra [g, g]; Lie closure only.
    pub derived_dim: Option<usize>,
    /// Whether [[g, g], g] = 0; Lie closure only.
    pub two_step_nilpotent: Option<bool>,
    /// The closure itself, as vectorized endomorphisms.
    pub basis: Subspace,
}

fn generator_endos(a: &Algebra) -> Vec<Endo> {
    let mut unit = vec![Rat::zero(); a.dim];
    let mut gens = Vec::new();
    for i in 0..a.dim {
        unit[i] = crate::rat::rint(1);
        gens.push(left_mult(a, &unit));
        gens.push(right_mult(a, &unit));
        unit[i] = Rat::zero();
    }
    gens
}

/// Grow `span` and `mats` until closed under `step` applied to (member,
/// generator) pairs.
fn close_under(
    ambient: usize,
    mats: &mut Vec<Endo>,
    span: &mut Subspace,
    gens: &[Endo],
    step: impl Fn(&Endo, &Endo) -> Endo,
) {
    let mut frontier = mats.clone();
    let cap = ambient + 1;
    for _ in 0..cap {
        let mut next = Vec::new();
        for m in &frontier {
            for g in gens {
                let p = step(m, g);
                let v = vectorize(&p);
                if !span.contains(&v) {
                    *span = span.sum(&Subspace::span(ambient, vec![v]));
                    mats.push(p.clone());
                    next.push(p);
                }
            }
        }
        if next.is_empty() {
            return;
        }
        frontier = next;
    }
}

fn subspace_endos(dim: usize, s: &Subspace) -> Vec<Endo> {
    s.basis_rows()
        .into_iter()
        .map(|v| endo_from_vec(dim, &v))
        .collect()
}

/// Associative closure of {L_{e_i}, R_{e_i}} under composition, with its
/// dimension and nilindex (powers of the closure as an algebra).
pub fn multiplication_algebra(a: &Algebra) -> OperatorAlgebraReport {
    let n = a.dim;
    let ambient = n * n;
    let gens: Vec<Endo> = generator_endos(a)
        .into_iter()
        .filter(|m| !m.is_zero())
        .collect();
    let mut span = Subspace::span(ambient, gens.iter().map(vectorize).collect());
    let mut mats = subspace_endos(n, &span);
    close_under(ambient, &mut mats, &mut span, &gens, |m, g| m.mat_mul(g));
    // Powers: P_1 = closure, P_{k+1} = P_k P_1 (associativity collapses
    // the parenthesizations); nilindex = first zero power.
    let basis_mats = subspace_endos(n, &span);
    let mut power = span.clone();
    let mut power_mats = basis_mats.clone();
    let mut nilindex = Nilindex::Infinite;
    let mut k = 1;
    loop {
        if power.is_zero() {
            nilindex = Nilindex::Finite(k);
            break;
        }
        let mut rows = Vec::new();
        for m in &power_mats {
            for g in &basis_mats {
                rows.push(vectorize(&m.mat_mul(g)));
            }
        }
        let next = Subspace::span(ambient, rows);
        if next == power {
            break;
        }
        power_mats = subspace_endos(n, &next);
        power = next;
        k += 1;
    }
    OperatorAlgebraReport {
        dim: span.dim(),
        nilindex,
        derived_dim: None,
        two_step_nilpotent: None,
        basis: span,
    }
}

/// Lie closure of {L_{e_i}, R_{e_i}} under commutators, with derived
/// dimension, two-step nilpotency, and lower-central nilindex.
pub fn lie_multiplication_algebra(a: &Algebra) -> OperatorAlgebraReport {
    let n = a.dim;
    let ambient = n * n;
    let gens: Vec<Endo> = generator_endos(a)
        .into_iter()
        .filter(|m| !m.is_zero())
        .collect();
    let mut span = Subspace::span(ambient, gens.iter().map(vectorize).collect());
    let mut mats = subspace_endos(n, &span);
    // Close under brackets with the whole current set, not only the
    // generators, so nested commutators are reached.
    loop {
        let before = span.dim();
        let snapshot = mats.clone();
        for u in &snapshot {
            for v in &snapshot {
                let c = commutator(u, v);
                let vec = vectorize(&c);
                if !span.contains(&vec) {
                    span = span.sum(&Subspace::span(ambient, vec![vec]));
                    mats.push(c);
                }
            }
        }
        if span.dim() == before {
            break;
        }
    }
    let basis_mats = subspace_endos(n, &span);
    let bracket_span = |left: &[Endo], right: &[Endo]| {
        let rows = left
            .iter()
            .flat_map(|u| right.iter().map(|v| vectorize(&commutator(u, v))))
            .collect();
        Subspace::span(ambient, rows)
    };
    let derived = bracket_span(&basis_mats, &basis_mats);
    let derived_mats = subspace_endos(n, &derived);
    let second = bracket_span(&derived_mats, &basis_mats);
    // Lower-central series: C_1 = g, C_{k+1} = [C_k, g].
    let mut central = span.clone();
    let mut central_mats = basis_mats.clone();
    let mut nilindex = Nilindex::Infinite;
    let mut k = 1;
    loop {
        if central.is_zero() {
            nilindex = Nilindex::Finite(k);
            break;
        }
        let next = bracket_span(&central_mats, &basis_mats);
        if next == central {
            break;
        }
        central_mats = subspace_endos(n, &next);
        central = next;
        k += 1;
    }
    OperatorAlgebraReport {
        dim: span.dim(),
        nilindex,
        derived_dim: Some(derived.dim()),
        two_step_nilpotent: Some(second.is_zero()),
        basis: span,
    }
}
