//! Polarization of a multiplication into commutative and anticommutative
//! parts, anti-Poisson triples, one-dimensional Jacobi-Jordan extensions,
//! and order-k residuals of formal deformations.

use crate::algebra::{vec_is_zero, vec_sum, Algebra, IdentityKind, IdentityReport, Witness};
use crate::error::CoreError;
use crate::matrix::Matrix;
use crate::multilinear::MultilinearMap;
use crate::rat::{rint, Rat};
use num::Zero;

/// Split a multiplication into rho(x,y) = xy + yx and psi(x,y) = xy - yx.
pub fn polarize(a: &Algebra) -> (MultilinearMap, MultilinearMap) {
    let mu = MultilinearMap::from_algebra(a);
    let flipped = mu.transpose2();
    (mu.add(&flipped), mu.sub(&flipped))
}

/// The commutative polarization as an algebra on the same basis.
pub fn rho_algebra(a: &Algebra) -> Algebra {
    let (rho, _) = polarize(a);
    rho.to_algebra(a.basis.clone())
}

/// The anticommutative polarization as an algebra on the same basis.
pub fn psi_algebra(a: &Algebra) -> Algebra {
    let (_, psi) = polarize(a);
    psi.to_algebra(a.basis.clone())
}

/// Reconstruct the multiplication mu = (rho + psi) / 2 from a symmetric and
/// an antisymmetric part on a common basis.
pub fn depolarize(
    rho: &MultilinearMap,
    psi: &MultilinearMap,
    basis: Vec<String>,
) -> Result<Algebra, CoreError> {
    if rho.arity != 2 || psi.arity != 2 {
        return Err(CoreError::InvalidArgument(
            "depolarization needs two bilinear maps".into(),
        ));
    }
    if rho.dim != psi.dim || basis.len() != rho.dim {
        return Err(CoreError::DimensionMismatch {
            expected: rho.dim,
            got: psi.dim.max(basis.len()),
        });
    }
    if !rho.is_symmetric() {
        return Err(CoreError::InvalidArgument(
            "the commutative part must be symmetric".into(),
        ));
    }
    if !psi.is_antisymmetric() {
        return Err(CoreError::InvalidArgument(
            "the anticommutative part must be antisymmetric".into(),
        ));
    }
    let half = Rat::new(1.into(), 2.into());
    Ok(rho.add(psi).scale(&half).to_algebra(basis))
}

/// One named ternary identity evaluated over all basis triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedCheck {
    pub name: String,
    pub holds: bool,
    pub witness: Option<Witness>,
}

fn scan_triples<F>(dim: usize, name: &str, defect: F) -> NamedCheck
where
    F: Fn(usize, usize, usize) -> Vec<Rat>,
{
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let d = defect(i, j, k);
                if !vec_is_zero(&d) {
                    return NamedCheck {
                        name: name.to_string(),
                        holds: false,
                        witness: Some(Witness {
                            indices: vec![i, j, k],
                            defect: d,
                        }),
                    };
                }
            }
        }
    }
    NamedCheck {
        name: name.to_string(),
        holds: true,
        witness: None,
    }
}

fn unit(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[i] = rint(1);
    v
}

/// Evaluate the polarization equation and the three derived identities
/// relating the commutative part (rho) and the anticommutative part (psi)
/// of an anti-associative multiplication, on all basis triples.
///
/// The four reports, in order:
/// - `polarization-equation`:
///   -y.(z.x) + x.[y,z] + z.[x,y] + [x,y.z] - [z,x.y] + [x,[y,z]] - [z,[x,y]]
/// - `bracket-of-products-cyclic`: [x,y.z] + [y,z.x] + [z,x.y]
/// - `iterated-bracket-identity`:
///   [x,[y,z]] - 2[y,[z,x]] + [z,[x,y]] - x.(y.z) + z.(x.y)
/// - `dot-bracket-identity`: x.[y,z] + [y,z.x] + [x.y,z]
///
/// Each is evaluated exactly as printed. The second one fails on any
/// anti-associative algebra with nonzero cube: expanding it with
/// u(vw) = -(uv)w leaves -2 times the sum of all six left-associated
/// products, which is 12 x^3 at x = y = z.
pub fn check_polarization_identities(a: &Algebra) -> Result<Vec<NamedCheck>, CoreError> {
    let aa = a.check_identity(IdentityKind::AntiAssociative);
    if !aa.holds {
        return Err(CoreError::Precondition(
            "polarization identities need an anti-associative input".into(),
        ));
    }
    let (rho, psi) = polarize(a);
    let n = a.dim;
    let r = |u: &[Rat], v: &[Rat]| rho.eval(&[u, v]);
    let p = |u: &[Rat], v: &[Rat]| psi.eval(&[u, v]);
    let neg = |v: Vec<Rat>| v.into_iter().map(|c| -c).collect::<Vec<Rat>>();

    let eq_pol = scan_triples(n, "polarization-equation", |i, j, k| {
        let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
        vec_sum(&[
            neg(r(&y, &r(&z, &x))),
            r(&x, &p(&y, &z)),
            r(&z, &p(&x, &y)),
            p(&x, &r(&y, &z)),
            neg(p(&z, &r(&x, &y))),
            p(&x, &p(&y, &z)),
            neg(p(&z, &p(&x, &y))),
        ])
    });
    let bracket_cyclic = scan_triples(n, "bracket-of-products-cyclic", |i, j, k| {
        let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
        vec_sum(&[
            p(&x, &r(&y, &z)),
            p(&y, &r(&z, &x)),
            p(&z, &r(&x, &y)),
        ])
    });
    let iterated = scan_triples(n, "iterated-bracket-identity", |i, j, k| {
        let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
        let minus_twice: Vec<Rat> = p(&y, &p(&z, &x))
            .into_iter()
            .map(|c| c * rint(-2))
            .collect();
        vec_sum(&[
            p(&x, &p(&y, &z)),
            minus_twice,
            p(&z, &p(&x, &y)),
            neg(r(&x, &r(&y, &z))),
            r(&z, &r(&x, &y)),
        ])
    });
    let dot_bracket = scan_triples(n, "dot-bracket-identity", |i, j, k| {
        let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
        vec_sum(&[
            r(&x, &p(&y, &z)),
            p(&y, &r(&z, &x)),
            p(&r(&x, &y), &z),
        ])
    });
    Ok(vec![eq_pol, bracket_cyclic, iterated, dot_bracket])
}

/// A candidate anti-Poisson structure: an antisymmetric bracket psi and a
/// symmetric product rho on the same space.
#[derive(Debug, Clone)]
pub struct AntiPoissonTriple {
    pub space_dim: usize,
    pub psi: MultilinearMap,
    pub rho: MultilinearMap,
}

impl AntiPoissonTriple {
    pub fn new(psi: MultilinearMap, rho: MultilinearMap) -> Result<Self, CoreError> {
        if psi.arity != 2 || rho.arity != 2 {
            return Err(CoreError::InvalidArgument(
                "anti-Poisson structures are pairs of bilinear maps".into(),
            ));
        }
        if psi.dim != rho.dim {
            return Err(CoreError::DimensionMismatch {
                expected: psi.dim,
                got: rho.dim,
            });
        }
        if !psi.is_antisymmetric() {
            return Err(CoreError::InvalidArgument(
                "psi must be antisymmetric".into(),
            ));
        }
        if !rho.is_symmetric() {
            return Err(CoreError::InvalidArgument("rho must be symmetric".into()));
        }
        Ok(AntiPoissonTriple {
            space_dim: psi.dim,
            psi,
            rho,
        })
    }
}

/// Verdict of the anti-Poisson axioms: rho is Jacobi-Jordan and the
/// anti-Leibniz identity rho(psi(x,y),z) + psi(x,rho(y,z)) + psi(rho(x,z),y)
/// vanishes on all basis triples.
#[derive(Debug, Clone)]
pub struct AntiPoissonReport {
    pub holds: bool,
    pub rho_jacobi_jordan: IdentityReport,
    pub anti_leibniz: NamedCheck,
}

pub fn check_anti_poisson(t: &AntiPoissonTriple) -> AntiPoissonReport {
    let names = (1..=t.space_dim).map(|i| format!("e{i}")).collect();
    let rho_alg = t.rho.to_algebra(names);
    let rho_jacobi_jordan = rho_alg.check_identity(IdentityKind::JacobiJordan);
    let n = t.space_dim;
    let anti_leibniz = scan_triples(n, "anti-leibniz", |i, j, k| {
        let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
        vec_sum(&[
            t.rho.eval(&[&t.psi.eval(&[&x, &y]), &z]),
            t.psi.eval(&[&x, &t.rho.eval(&[&y, &z])]),
            t.psi.eval(&[&t.rho.eval(&[&x, &z]), &y]),
        ])
    });
    AntiPoissonReport {
        holds: rho_jacobi_jordan.holds && anti_leibniz.holds,
        rho_jacobi_jordan,
        anti_leibniz,
    }
}

/// Order-k residuals R_k(a,b,c) = sum over i+j=k of
/// phi_i(phi_j(a,b),c) + phi_i(a,phi_j(b,c)), with phi_0 the base
/// multiplication and phis = [phi_1, ..., phi_N] (missing orders are zero).
/// The deformation satisfies condition D_k exactly when R_k = 0.
pub fn deformation_residuals(
    mu0: &Algebra,
    phis: &[MultilinearMap],
    order: usize,
) -> Result<Vec<MultilinearMap>, CoreError> {
    let n = mu0.dim;
    for phi in phis {
        if phi.arity != 2 {
            return Err(CoreError::InvalidArgument(
                "deformation terms must be bilinear".into(),
            ));
        }
        if phi.dim != n {
            return Err(CoreError::DimensionMismatch {
                expected: n,
                got: phi.dim,
            });
        }
    }
    let phi0 = MultilinearMap::from_algebra(mu0);
    let phi = |m: usize| -> Option<&MultilinearMap> {
        if m == 0 {
            Some(&phi0)
        } else {
            phis.get(m - 1)
        }
    };
    let mut residuals = Vec::with_capacity(order);
    for k in 1..=order {
        let mut r = MultilinearMap::zero(3, n);
        for i in 0..=k {
            let (Some(f), Some(g)) = (phi(i), phi(k - i)) else {
                continue;
            };
            for a in 0..n {
                for b in 0..n {
                    let gab = g.eval_basis(&[a, b]);
                    for c in 0..n {
                        let left = f.eval(&[&gab, &unit(n, c)]);
                        let gbc = g.eval_basis(&[b, c]);
                        let right = f.eval(&[&unit(n, a), &gbc]);
                        for (m, v) in left.iter().zip(right.iter()).enumerate().map(|(m, p)| (m, p.0 + p.1)) {
                            r.add_coeff(&[a, b, c], m, &v);
                        }
                    }
                }
            }
        }
        residuals.push(r);
    }
    Ok(residuals)
}

/// The semiclassical data of a first-order deformation of an
/// anticommutative anti-associative algebra: psi is the base multiplication
/// itself, rho is the symmetrization of phi_1. Requires the order-one
/// condition D_1 to hold.
pub fn classical_limit(
    mu0: &Algebra,
    phi1: &MultilinearMap,
) -> Result<AntiPoissonTriple, CoreError> {
    if !mu0.check_identity(IdentityKind::AntiCommutative).holds {
        return Err(CoreError::Precondition(
            "the base multiplication must be anticommutative".into(),
        ));
    }
    if !mu0.check_identity(IdentityKind::AntiAssociative).holds {
        return Err(CoreError::Precondition(
            "the base multiplication must be anti-associative".into(),
        ));
    }
    let residuals = deformation_residuals(mu0, std::slice::from_ref(phi1), 1)?;
    if !residuals[0].is_zero() {
        return Err(CoreError::Precondition(
            "phi_1 does not satisfy the order-one deformation condition".into(),
        ));
    }
    let rho1 = phi1.add(&phi1.transpose2());
    AntiPoissonTriple::new(MultilinearMap::from_algebra(mu0), rho1)
}

/// Extend a commutative algebra by one generator X with x X = X x = f(x)
/// and X X = 0. When the base algebra is Jacobi-Jordan, the extension is
/// Jacobi-Jordan exactly when f is an anti-derivation with f o f = 0; the
/// caller re-checks the identity on the result.
pub fn jj_one_dimensional_extension(a: &Algebra, f: &Matrix) -> Result<Algebra, CoreError> {
    if !a.check_identity(IdentityKind::Commutative).holds {
        return Err(CoreError::Precondition(
            "one-dimensional extensions start from a commutative algebra".into(),
        ));
    }
    if f.rows != a.dim || f.cols != a.dim {
        return Err(CoreError::DimensionMismatch {
            expected: a.dim,
            got: f.rows.max(f.cols),
        });
    }
    let n = a.dim;
    let mut basis = a.basis.clone();
    basis.push("X".to_string());
    let mut ext = Algebra::with_basis(basis);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                ext.set_entry(i, j, k, a.table_entry(i, j, k).clone());
            }
        }
    }
    for i in 0..n {
        for k in 0..n {
            // column i of f is the image of the i-th basis vector
            ext.set_entry(i, n, k, f[(k, i)].clone());
            ext.set_entry(n, i, k, f[(k, i)].clone());
        }
    }
    Ok(ext)
}
