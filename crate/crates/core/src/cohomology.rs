//! Cochain complexes attached to the anti-associative product: the standard
//! differentials in degrees 1 and 2, the four-component degree-3
//! differential of the minimal-model complex, and the symmetrized variants
//! for Jacobi-Jordan algebras.
//!
//! The degree-3 component formulas are transcribed exactly as printed,
//! including every parenthesization; whether they square against delta2 is
//! treated as a hypothesis to evaluate, not an identity to assume.

use crate::algebra::{Algebra, IdentityKind};
use crate::error::CoreError;
use crate::matrix::Matrix;
use crate::multilinear::MultilinearMap;
use crate::operators::Endo;
use crate::rat::Rat;
use crate::subspace::Subspace;
use num::Zero;

fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::from_integer(1.into());
    v
}

fn check_dims(a: &Algebra, map_dim: usize) -> Result<(), CoreError> {
    if a.dim != map_dim {
        return Err(CoreError::DimensionMismatch {
            expected: a.dim,
            got: map_dim,
        });
    }
    Ok(())
}

/// delta1(f)(x, y) = x f(y) - f(xy) + f(x) y.
pub fn delta1(a: &Algebra, f: &Endo) -> Result<MultilinearMap, CoreError> {
    if f.rows != f.cols {
        return Err(CoreError::InvalidArgument(
            "a 1-cochain is a square matrix".into(),
        ));
    }
    check_dims(a, f.rows)?;
    let n = a.dim;
    let mut out = MultilinearMap::zero(2, n);
    for i in 0..n {
        let x = unit(n, i);
        let fx: Vec<Rat> = (0..n).map(|r| f[(r, i)].clone()).collect();
        for j in 0..n {
            let y = unit(n, j);
            let fy: Vec<Rat> = (0..n).map(|r| f[(r, j)].clone()).collect();
            let fxy = f.mat_vec(&a.multiply(&x, &y));
            let value: Vec<Rat> = a
                .multiply(&x, &fy)
                .iter()
                .zip(&fxy)
                .zip(&a.multiply(&fx, &y))
                .map(|((t1, t2), t3)| t1 - t2 + t3)
                .collect();
            for (k, c) in value.into_iter().enumerate() {
                if !c.is_zero() {
                    out.set_coeff(&[i, j], k, c);
                }
            }
        }
    }
    Ok(out)
}

/// delta2(phi)(x, y, z) = x phi(y, z) + phi(xy, z) + phi(x, yz) + phi(x, y) z.
pub fn delta2(a: &Algebra, phi: &MultilinearMap) -> Result<MultilinearMap, CoreError> {
    if phi.arity != 2 {
        return Err(CoreError::InvalidArgument(
            "a 2-cochain is a bilinear map".into(),
        ));
    }
    check_dims(a, phi.dim)?;
    let n = a.dim;
    let mut out = MultilinearMap::zero(3, n);
    for i in 0..n {
        let x = unit(n, i);
        for j in 0..n {
            let y = unit(n, j);
            let xy = a.multiply(&x, &y);
            for k in 0..n {
                let z = unit(n, k);
                let yz = a.multiply(&y, &z);
                let t1 = a.multiply(&x, &phi.eval(&[&y, &z]));
                let t2 = phi.eval(&[&xy, &z]);
                let t3 = phi.eval(&[&x, &yz]);
                let t4 = a.multiply(&phi.eval(&[&x, &y]), &z);
                for m in 0..n {
                    let c = &t1[m] + &t2[m] + &t3[m] + &t4[m];
                    if !c.is_zero() {
                        out.set_coeff(&[i, j, k], m, c);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The four 5-linear components of the degree-3 differential, exactly as
/// printed. Quintic in the dimension, so guarded to dim <= 5.
pub fn delta3(a: &Algebra, g: &MultilinearMap) -> Result<[MultilinearMap; 4], CoreError> {
    if g.arity != 3 {
        return Err(CoreError::InvalidArgument(
            "a 3-cochain is a trilinear map".into(),
        ));
    }
    check_dims(a, g.dim)?;
    if a.dim > 5 {
        return Err(CoreError::GuardExceeded(format!(
            "degree-3 differential evaluates n^5 quintuples; dimension {} exceeds the limit 5",
            a.dim
        )));
    }
    let n = a.dim;
    let mut out = [
        MultilinearMap::zero(5, n),
        MultilinearMap::zero(5, n),
        MultilinearMap::zero(5, n),
        MultilinearMap::zero(5, n),
    ];
    let units: Vec<Vec<Rat>> = (0..n).map(|i| unit(n, i)).collect();
    let mut args = [0usize; 5];
    loop {
        let [i1, i2, i3, i4, i5] = args;
        let (x, y, z, t, u) = (
            &units[i1],
            &units[i2],
            &units[i3],
            &units[i4],
            &units[i5],
        );
        let xy = a.multiply(x, y);
        let yz = a.multiply(y, z);
        let zt = a.multiply(z, t);
        let tu = a.multiply(t, u);
        let xy_z = a.multiply(&xy, z);
        let z_tu = a.multiply(z, &tu);
        let y_zt = a.multiply(y, &zt);
        let zt_u = a.multiply(&zt, u);
        let yz_t = a.multiply(&yz, t);
        let x_yz = a.multiply(x, &yz);

        let g_yzt = g.eval(&[y, z, t]);
        let g_xyz = g.eval(&[x, y, z]);
        let g_ztu = g.eval(&[z, t, u]);

        // d1 = x g(y,z,tu) - g(x,y,z(tu)) + (xy) g(z,t,u) - g(xy,zt,u)
        //      + g(xy,z,t) u - g((xy)z,t,u) + g(x,y,z)(tu) - g(x,yz,tu)
        let d1 = sum8(
            &a.multiply(x, &g.eval(&[y, z, &tu])),
            &g.eval(&[x, y, &z_tu]),
            &a.multiply(&xy, &g_ztu),
            &g.eval(&[&xy, &zt, u]),
            &a.multiply(&g.eval(&[&xy, z, t]), u),
            &g.eval(&[&xy_z, t, u]),
            &a.multiply(&g_xyz, &tu),
            &g.eval(&[x, &yz, &tu]),
        );
        // d2 = g((xy)z,t,u) - g(xy,z,t) u + g(x,y,zt) u - g(x,y(zt),u)
        //      + x g(y,zt,u) - g(x,y,(zt)u) + (xy) g(z,t,u) - g(xy,z,tu)
        let d2 = sum8(
            &g.eval(&[&xy_z, t, u]),
            &a.multiply(&g.eval(&[&xy, z, t]), u),
            &a.multiply(&g.eval(&[x, y, &zt]), u),
            &g.eval(&[x, &y_zt, u]),
            &a.multiply(x, &g.eval(&[y, &zt, u])),
            &g.eval(&[x, y, &zt_u]),
            &a.multiply(&xy, &g_ztu),
            &g.eval(&[&xy, z, &tu]),
        );
        // d3 = g(x,yz,tu) - x g(yz,t,u) + g(x,(yz)t,u) - x(g(y,z,t)u)
        //      + g(x,y,zt) u - g(xy,z,t) u + (g(x,y,z)t) u - g(x(yz),t,u)
        let d3 = sum8(
            &g.eval(&[x, &yz, &tu]),
            &a.multiply(x, &g.eval(&[&yz, t, u])),
            &g.eval(&[x, &yz_t, u]),
            &a.multiply(x, &a.multiply(&g_yzt, u)),
            &a.multiply(&g.eval(&[x, y, &zt]), u),
            &a.multiply(&g.eval(&[&xy, z, t]), u),
            &a.multiply(&a.multiply(&g_xyz, t), u),
            &g.eval(&[&x_yz, t, u]),
        );
        // d4 = g(xy,zt,u) - g(x,y,(zt)u) + x g(y,zt,u) - g(x,y(zt),u)
        //      + (x g(y,z,t)) u - g(x,yz,t) u + (g(x,y,z)t) u - g(xy,z,t) u
        let d4 = sum8(
            &g.eval(&[&xy, &zt, u]),
            &g.eval(&[x, y, &zt_u]),
            &a.multiply(x, &g.eval(&[y, &zt, u])),
            &g.eval(&[x, &y_zt, u]),
            &a.multiply(&a.multiply(x, &g_yzt), u),
            &a.multiply(&g.eval(&[x, &yz, t]), u),
            &a.multiply(&a.multiply(&g_xyz, t), u),
            &a.multiply(&g.eval(&[&xy, z, t]), u),
        );
        for (component, value) in out.iter_mut().zip([d1, d2, d3, d4]) {
            for (k, c) in value.into_iter().enumerate() {
                if !c.is_zero() {
                    component.set_coeff(&args, k, c);
                }
            }
        }
        // next quintuple
        let mut pos = 5;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            args[pos] += 1;
            if args[pos] < n {
                break;
            }
            args[pos] = 0;
        }
    }
}

/// Alternating eight-term sum t1 - t2 + t3 - t4 + t5 - t6 + t7 - t8.
#[allow(clippy::too_many_arguments)]
fn sum8(
    t1: &[Rat],
    t2: &[Rat],
    t3: &[Rat],
    t4: &[Rat],
    t5: &[Rat],
    t6: &[Rat],
    t7: &[Rat],
    t8: &[Rat],
) -> Vec<Rat> {
    (0..t1.len())
        .map(|k| &t1[k] - &t2[k] + &t3[k] - &t4[k] + &t5[k] - &t6[k] + &t7[k] - &t8[k])
        .collect()
}

/// Matrix of delta1 : C^1 -> C^2 in the flat coordinate bases (columns
/// indexed like vectorized endomorphisms, rows like bilinear-map
/// coefficients).
pub fn delta1_matrix(a: &Algebra) -> Matrix {
    let n = a.dim;
    let mut m = Matrix::zero(n * n * n, n * n);
    for r in 0..n {
        for s in 0..n {
            let mut e = Matrix::zero(n, n);
            e[(r, s)] = Rat::from_integer(1.into());
            let image = delta1(a, &e).expect("sizes match");
            for (row, c) in image.flat_coeffs().iter().enumerate() {
                if !c.is_zero() {
                    m[(row, r * n + s)] = c.clone();
                }
            }
        }
    }
    m
}

/// Matrix of delta2 : C^2 -> C^3, flat coordinates on both sides.
pub fn delta2_matrix(a: &Algebra) -> Matrix {
    let n = a.dim;
    let c2 = n * n * n;
    let mut m = Matrix::zero(n * n * n * n, c2);
    for col in 0..c2 {
        let mut flat = vec![Rat::zero(); c2];
        flat[col] = Rat::from_integer(1.into());
        let phi = MultilinearMap::from_flat_coeffs(2, n, flat);
        let image = delta2(a, &phi).expect("sizes match");
        for (row, c) in image.flat_coeffs().iter().enumerate() {
            if !c.is_zero() {
                m[(row, col)] = c.clone();
            }
        }
    }
    m
}

/// Dimensions across the standard three-term complex C^1 -> C^2 -> C^3 -> 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardCohomology {
    pub h1: usize,
    pub h2: usize,
    /// dim C^3 / im delta2; the differential out of C^3 is zero.
    pub z3: usize,
    pub rank_delta1: usize,
    pub rank_delta2: usize,
}

/// Quotient dimensions of the standard complex. Requires im delta1 to lie
/// inside ker delta2, which holds exactly when the product is
/// anti-associative; otherwise the quotient is undefined and an error
/// explains why. Guarded to dim <= 5 (the delta2 matrix has n^4 rows).
pub fn standard_cohomology_dims(a: &Algebra) -> Result<StandardCohomology, CoreError> {
    if a.dim > 5 {
        return Err(CoreError::GuardExceeded(format!(
            "standard cohomology ranks use an n^4 by n^3 matrix; dimension {} exceeds the limit 5",
            a.dim
        )));
    }
    let n = a.dim;
    let d1 = delta1_matrix(a);
    let d2 = delta2_matrix(a);
    if !d2.mat_mul(&d1).is_zero() {
        return Err(CoreError::Precondition(
            "delta2 after delta1 is nonzero, so the image is not contained in the kernel; \
             the standard complex requires an anti-associative product"
                .into(),
        ));
    }
    let rank_delta1 = d1.rank();
    let rank_delta2 = d2.rank();
    let ker_delta1 = n * n - rank_delta1;
    let ker_delta2 = n * n * n - rank_delta2;
    Ok(StandardCohomology {
        h1: ker_delta1,
        h2: ker_delta2 - rank_delta1,
        z3: n * n * n * n - rank_delta2,
        rank_delta1,
        rank_delta2,
    })
}

/// Kernel of delta1 as a subspace of vectorized endomorphisms.
pub fn delta1_kernel(a: &Algebra) -> Subspace {
    let d1 = delta1_matrix(a);
    Subspace::span(a.dim * a.dim, d1.kernel_basis().rows_vec())
}

/// Whether a trilinear map is invariant under all six argument orders.
pub fn is_fully_symmetric3(map: &MultilinearMap) -> bool {
    if map.arity != 3 {
        return false;
    }
    let n = map.dim;
    const PERMS: [[usize; 3]; 5] = [
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let idx = [i, j, k];
                for perm in PERMS {
                    let permuted = [idx[perm[0]], idx[perm[1]], idx[perm[2]]];
                    for m in 0..n {
                        if map.coeff(&idx, m) != map.coeff(&permuted, m) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Symmetrized degree-2 differential for commutative products and symmetric
/// 2-cochains:
///   x1 phi(x2,x3) + phi(x1, x2 x3) + x2 phi(x3,x1) + phi(x2, x3 x1)
///   + x3 phi(x1,x2) + phi(x3, x1 x2),
/// fully symmetric in its three arguments.
pub fn jj_delta2(a: &Algebra, phi: &MultilinearMap) -> Result<MultilinearMap, CoreError> {
    if phi.arity != 2 {
        return Err(CoreError::InvalidArgument(
            "a 2-cochain is a bilinear map".into(),
        ));
    }
    check_dims(a, phi.dim)?;
    let comm = a.check_identity(IdentityKind::Commutative);
    if !comm.holds {
        return Err(CoreError::Precondition(
            "the symmetrized complex is defined over a commutative product".into(),
        ));
    }
    if !phi.is_symmetric() {
        return Err(CoreError::Precondition(
            "the symmetrized complex takes symmetric 2-cochains".into(),
        ));
    }
    let n = a.dim;
    let mut out = MultilinearMap::zero(3, n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x1, x2, x3) = (unit(n, i), unit(n, j), unit(n, k));
                let mut value = a.multiply(&x1, &phi.eval(&[&x2, &x3]));
                let terms = [
                    phi.eval(&[&x1, &a.multiply(&x2, &x3)]),
                    a.multiply(&x2, &phi.eval(&[&x3, &x1])),
                    phi.eval(&[&x2, &a.multiply(&x3, &x1)]),
                    a.multiply(&x3, &phi.eval(&[&x1, &x2])),
                    phi.eval(&[&x3, &a.multiply(&x1, &x2)]),
                ];
                for t in &terms {
                    for (v, c) in value.iter_mut().zip(t) {
                        *v += c;
                    }
                }
                for (m, c) in value.into_iter().enumerate() {
                    if !c.is_zero() {
                        out.set_coeff(&[i, j, k], m, c);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Symmetrized degree-3 differential: each component of `delta3` summed over
/// all 24 orders of the first four arguments. The symmetrization is applied
/// to all four components uniformly.
pub fn jj_delta3(a: &Algebra, psi: &MultilinearMap) -> Result<[MultilinearMap; 4], CoreError> {
    if !is_fully_symmetric3(psi) {
        return Err(CoreError::Precondition(
            "the symmetrized complex takes fully symmetric 3-cochains".into(),
        ));
    }
    let comm = a.check_identity(IdentityKind::Commutative);
    if !comm.holds {
        return Err(CoreError::Precondition(
            "the symmetrized complex is defined over a commutative product".into(),
        ));
    }
    let components = delta3(a, psi)?;
    let n = a.dim;
    let perms4 = permutations4();
    let mut out = [
        MultilinearMap::zero(5, n),
        MultilinearMap::zero(5, n),
        MultilinearMap::zero(5, n),
        MultilinearMap::zero(5, n),
    ];
    for (sym, raw) in out.iter_mut().zip(&components) {
        let mut args = [0usize; 5];
        loop {
            for k in 0..n {
                let mut acc = Rat::zero();
                for perm in &perms4 {
                    let permuted = [
                        args[perm[0]],
                        args[perm[1]],
                        args[perm[2]],
                        args[perm[3]],
                        args[4],
                    ];
                    acc += raw.coeff(&permuted, k);
                }
                if !acc.is_zero() {
                    sym.set_coeff(&args, k, acc);
                }
            }
            let mut pos = 5;
            let mut done = false;
            loop {
                if pos == 0 {
                    done = true;
                    break;
                }
                pos -= 1;
                args[pos] += 1;
                if args[pos] < n {
                    break;
                }
                args[pos] = 0;
            }
            if done {
                break;
            }
        }
    }
    Ok(out)
}

/// Evaluate delta3 after delta2 over a spanning set of 2-cochains and
/// report, per component, whether the composite vanished. The printed
/// component formulas are a hypothesis, not an assumed identity; callers
/// surface any `false` entries as findings.
pub fn delta3_after_delta2_vanishing(a: &Algebra) -> Result<[bool; 4], CoreError> {
    let n = a.dim;
    let c2 = n * n * n;
    let mut vanishing = [true; 4];
    for col in 0..c2 {
        let mut flat = vec![Rat::zero(); c2];
        flat[col] = Rat::from_integer(1.into());
        let phi = MultilinearMap::from_flat_coeffs(2, n, flat);
        let g = delta2(a, &phi)?;
        let components = delta3(a, &g)?;
        for (v, c) in vanishing.iter_mut().zip(&components) {
            *v &= c.is_zero();
        }
    }
    Ok(vanishing)
}

/// Basis of fully symmetric bilinear maps: for r <= s and each target k,
/// the map sending (e_r, e_s) and (e_s, e_r) to e_k.
fn symmetric_two_cochain_basis(n: usize) -> Vec<MultilinearMap> {
    let mut out = Vec::new();
    for r in 0..n {
        for s in r..n {
            for k in 0..n {
                let mut phi = MultilinearMap::zero(2, n);
                phi.set_coeff(&[r, s], k, Rat::from_integer(1.into()));
                if r != s {
                    phi.set_coeff(&[s, r], k, Rat::from_integer(1.into()));
                }
                out.push(phi);
            }
        }
    }
    out
}

/// Symmetric 2-cochains annihilated by the Jacobi-Jordan differential, as
/// a subspace in flat bilinear coordinates. Requires a commutative algebra
/// of dimension at most 5.
pub fn jj_symmetric_two_cocycles(a: &Algebra) -> Result<Subspace, CoreError> {
    if a.dim > 5 {
        return Err(CoreError::GuardExceeded(format!(
            "cohomology ranks are computed up to dimension 5, got {}",
            a.dim
        )));
    }
    let n = a.dim;
    let basis = symmetric_two_cochain_basis(n);
    let rows = n * n * n * n;
    let mut m = Matrix::zero(rows, basis.len());
    for (j, phi) in basis.iter().enumerate() {
        let image = jj_delta2(a, phi)?;
        for (i, c) in image.flat_coeffs().iter().enumerate() {
            if !c.is_zero() {
                m[(i, j)] = c.clone();
            }
        }
    }
    let coeff_rows = m.kernel_basis();
    let mut flat_rows = Vec::new();
    for row in coeff_rows.rows_vec() {
        let mut acc = MultilinearMap::zero(2, n);
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&basis[j].scale(c));
            }
        }
        flat_rows.push(acc.flat_coeffs().to_vec());
    }
    Ok(Subspace::span(n * n * n, flat_rows))
}

/// Evaluate the symmetrized degree-3 differential on the image of the
/// symmetrized degree-2 differential over a spanning set of symmetric
/// 2-cochains; per-component vanishing flags, same falsification contract
/// as the anti-associative check.
pub fn jj_delta3_after_delta2_vanishing(a: &Algebra) -> Result<[bool; 4], CoreError> {
    let mut vanishing = [true; 4];
    for phi in symmetric_two_cochain_basis(a.dim) {
        let psi = jj_delta2(a, &phi)?;
        let components = jj_delta3(a, &psi)?;
        for (v, c) in vanishing.iter_mut().zip(&components) {
            *v &= c.is_zero();
        }
    }
    Ok(vanishing)
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut perms = Vec::with_capacity(24);
    let mut items = [0usize, 1, 2, 3];
    heap_permute(&mut items, 4, &mut perms);
    perms
}

fn heap_permute(items: &mut [usize; 4], k: usize, out: &mut Vec<[usize; 4]>) {
    if k == 1 {
        out.push(*items);
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}
