//! Free algebra builders: the free anti-associative algebra on k
//! generators, and its free commutative and free anticommutative
//! quotients, each with an explicit grading by product degree.

use crate::algebra::Algebra;
use crate::error::CoreError;
use crate::rat::{rint, Rat};
use crate::subspace::Subspace;
use num::Zero;

/// An algebra together with a direct-sum grading: products of degree-i and
/// degree-j elements land in degree i+j (or vanish past the last degree).
#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    pub algebra: Algebra,
    pub grading: Vec<Subspace>,
}

impl GradedAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn component_dims(&self) -> Vec<usize> {
        self.grading.iter().map(Subspace::dim).collect()
    }
}

fn coordinate_component(total: usize, range: std::ops::Range<usize>) -> Subspace {
    let rows = range
        .map(|i| {
            let mut v = vec![Rat::zero(); total];
            v[i] = rint(1);
            v
        })
        .collect();
    Subspace::span(total, rows)
}

/// Free anti-associative algebra on k generators. Basis: generators e_i,
/// quadratic elements f_{i,j} = e_i e_j, cubic elements
/// g_{i,j,l} = e_i (e_j e_l); all products of total degree 4 vanish and
/// (e_i e_j) e_l = -e_i (e_j e_l). Dimension k + k^2 + k^3.
pub fn free_anti_associative(k: usize) -> Result<GradedAlgebra, CoreError> {
    if k == 0 {
        return Err(CoreError::InvalidArgument(
            "need at least one generator".into(),
        ));
    }
    let dim = k + k * k + k * k * k;
    let mut names: Vec<String> = (1..=k).map(|i| format!("e{i}")).collect();
    for i in 1..=k {
        for j in 1..=k {
            names.push(format!("f{i}_{j}"));
        }
    }
    for i in 1..=k {
        for j in 1..=k {
            for l in 1..=k {
                names.push(format!("g{i}_{j}_{l}"));
            }
        }
    }
    let e = |i: usize| i - 1;
    let f = |i: usize, j: usize| k + (i - 1) * k + (j - 1);
    let g = |i: usize, j: usize, l: usize| k + k * k + ((i - 1) * k + (j - 1)) * k + (l - 1);
    let mut a = Algebra::with_basis(names);
    for i in 1..=k {
        for j in 1..=k {
            a.set_entry(e(i), e(j), f(i, j), rint(1));
            for l in 1..=k {
                a.set_entry(e(i), f(j, l), g(i, j, l), rint(1));
                a.set_entry(f(i, j), e(l), g(i, j, l), rint(-1));
            }
        }
    }
    let grading = vec![
        coordinate_component(dim, 0..k),
        coordinate_component(dim, k..k + k * k),
        coordinate_component(dim, k + k * k..dim),
    ];
    Ok(GradedAlgebra {
        algebra: a,
        grading,
    })
}

/// Free commutative anti-associative algebra on p generators. Basis:
/// generators e_i and squares/products f_{i,j} (i <= j); every product of
/// three generators vanishes. Dimension p + p(p+1)/2.
pub fn free_commutative_aa(p: usize) -> Result<GradedAlgebra, CoreError> {
    if p == 0 {
        return Err(CoreError::InvalidArgument(
            "need at least one generator".into(),
        ));
    }
    let quad = p * (p + 1) / 2;
    let dim = p + quad;
    let mut names: Vec<String> = (1..=p).map(|i| format!("e{i}")).collect();
    let mut pair_index = std::collections::BTreeMap::new();
    for i in 1..=p {
        for j in i..=p {
            pair_index.insert((i, j), p + pair_index.len());
            names.push(format!("f{i}_{j}"));
        }
    }
    let mut a = Algebra::with_basis(names);
    for i in 1..=p {
        for j in 1..=p {
            let key = (i.min(j), i.max(j));
            a.set_entry(i - 1, j - 1, pair_index[&key], rint(1));
        }
    }
    let grading = vec![
        coordinate_component(dim, 0..p),
        coordinate_component(dim, p..dim),
    ];
    Ok(GradedAlgebra {
        algebra: a,
        grading,
    })
}

/// Sign of the permutation sorting three distinct values, or None on a
/// repeat.
fn sort3_sign(a: usize, b: usize, c: usize) -> Option<i64> {
    if a == b || b == c || a == c {
        return None;
    }
    let mut sign = 1;
    let mut v = [a, b, c];
    if v[0] > v[1] {
        v.swap(0, 1);
        sign = -sign;
    }
    if v[1] > v[2] {
        v.swap(1, 2);
        sign = -sign;
    }
    if v[0] > v[1] {
        v.swap(0, 1);
        sign = -sign;
    }
    Some(sign)
}

/// Free anticommutative anti-associative algebra on p generators. Basis:
/// generators e_i, pairs f_{i,j} = e_i e_j (i < j), triples
/// g_{i,j,l} = e_i (e_j e_l) (i < j < l). The cubic signs follow from
/// x(yz) = z(xy), which anti-associativity plus anticommutativity force:
/// e_a (e_b e_c) is the sign of the permutation sorting (a,b,c) times the
/// sorted triple element. Dimension p + C(p,2) + C(p,3).
pub fn free_anticommutative_aa(p: usize) -> Result<GradedAlgebra, CoreError> {
    if p == 0 {
        return Err(CoreError::InvalidArgument(
            "need at least one generator".into(),
        ));
    }
    let mut names: Vec<String> = (1..=p).map(|i| format!("e{i}")).collect();
    let mut pair_index = std::collections::BTreeMap::new();
    for i in 1..=p {
        for j in i + 1..=p {
            pair_index.insert((i, j), p + pair_index.len());
            names.push(format!("f{i}_{j}"));
        }
    }
    let pairs = pair_index.len();
    let mut triple_index = std::collections::BTreeMap::new();
    for i in 1..=p {
        for j in i + 1..=p {
            for l in j + 1..=p {
                triple_index.insert((i, j, l), p + pairs + triple_index.len());
                names.push(format!("g{i}_{j}_{l}"));
            }
        }
    }
    let dim = names.len();
    let mut a = Algebra::with_basis(names);
    for i in 1..=p {
        for j in 1..=p {
            if i < j {
                a.set_entry(i - 1, j - 1, pair_index[&(i, j)], rint(1));
            } else if i > j {
                a.set_entry(i - 1, j - 1, pair_index[&(j, i)], rint(-1));
            }
        }
    }
    for (&(b, c), &fidx) in &pair_index {
        for g in 1..=p {
            if let Some(sign) = sort3_sign(g, b, c) {
                let mut key = [g, b, c];
                key.sort_unstable();
                let tidx = triple_index[&(key[0], key[1], key[2])];
                a.set_entry(g - 1, fidx, tidx, rint(sign));
                a.set_entry(fidx, g - 1, tidx, rint(-sign));
            }
        }
    }
    let grading = vec![
        coordinate_component(dim, 0..p),
        coordinate_component(dim, p..p + pairs),
        coordinate_component(dim, p + pairs..dim),
    ];
    Ok(GradedAlgebra {
        algebra: a,
        grading,
    })
}
