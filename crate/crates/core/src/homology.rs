//! Chain complex in low degrees for a finite-dimensional algebra: twisted
//! wedge words, the cyclic boundary maps b_q, and homology dimensions.
//!
//! Two sign conventions for the word relations are shipped. `Symmetric`
//! treats permutations as acting trivially, so a degree-q chain space has
//! the multisets of q+1 basis letters as its basis. This is the unique
//! reading consistent with the worked 6-element basis of the two-letter
//! space over a 3-dimensional algebra (which contains e2^e2).
//! `Alternating` applies the signed relation w_sigma = (-1)^k eps(sigma) w
//! literally; it annihilates every odd-length word (take sigma = id) and
//! every even-length word with a repeated letter, so it contradicts that
//! same worked basis. It is kept for falsification runs.

use crate::algebra::Algebra;
use crate::error::CoreError;
use crate::free::free_anti_associative;
use crate::matrix::Matrix;
use crate::rat::{rint, Rat};
use crate::subspace::Subspace;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignConvention {
    Symmetric,
    Alternating,
}

impl fmt::Display for SignConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignConvention::Symmetric => write!(f, "symmetric"),
            SignConvention::Alternating => write!(f, "alternating"),
        }
    }
}

impl FromStr for SignConvention {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "symmetric" => Ok(SignConvention::Symmetric),
            // "paper" kept as an accepted alias for the signed formula
            "alternating" | "paper" => Ok(SignConvention::Alternating),
            other => Err(CoreError::MalformedInput(format!(
                "unknown sign convention '{other}'"
            ))),
        }
    }
}

/// Canonical form of a wedge word under the convention: `None` when the
/// relations force the word to zero, otherwise the sign and the sorted word.
pub fn canonical_word(word: &[usize], conv: SignConvention) -> Option<(i64, Vec<usize>)> {
    let mut sorted = word.to_vec();
    // count inversions removed while sorting to get the permutation parity
    let mut swaps = 0usize;
    for i in 1..sorted.len() {
        let mut j = i;
        while j > 0 && sorted[j - 1] > sorted[j] {
            sorted.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
    }
    match conv {
        SignConvention::Symmetric => Some((1, sorted)),
        SignConvention::Alternating => {
            let k = word.len();
            if k % 2 == 1 {
                // w = (-1)^k eps(id) w = -w
                return None;
            }
            if sorted.windows(2).any(|p| p[0] == p[1]) {
                // swapping two equal letters gives w = -w
                return None;
            }
            Some((if swaps % 2 == 0 { 1 } else { -1 }, sorted))
        }
    }
}

/// Basis of a chain space C_q: canonical (q+1)-letter words over the
/// algebra's basis indices, quotiented by the convention's relations.
#[derive(Debug, Clone)]
pub struct ChainSpace {
    pub degree: usize,
    pub convention: SignConvention,
    pub algebra_dim: usize,
    pub words: Vec<Vec<usize>>,
    index: BTreeMap<Vec<usize>, usize>,
}

impl ChainSpace {
    pub fn dim(&self) -> usize {
        self.words.len()
    }

    /// Coordinates of a raw word in the canonical basis (sign and index).
    pub fn project(&self, word: &[usize]) -> Option<(i64, usize)> {
        let (sign, sorted) = canonical_word(word, self.convention)?;
        self.index.get(&sorted).map(|&i| (sign, i))
    }
}

fn chain_space_any(a: &Algebra, q: usize, conv: SignConvention) -> ChainSpace {
    let n = a.dim;
    let len = q + 1;
    let mut words = Vec::new();
    let mut word = vec![0usize; len];
    loop {
        if canonical_word(&word, conv).map(|(_, s)| s == word).unwrap_or(false) {
            words.push(word.clone());
        }
        // next word in lexicographic order
        let mut pos = len;
        loop {
            if pos == 0 {
                let index = words
                    .iter()
                    .enumerate()
                    .map(|(i, w)| (w.clone(), i))
                    .collect();
                return ChainSpace {
                    degree: q,
                    convention: conv,
                    algebra_dim: n,
                    words,
                    index,
                };
            }
            pos -= 1;
            word[pos] += 1;
            if word[pos] < n {
                break;
            }
            word[pos] = 0;
        }
    }
}

/// Chain space C_q for q <= 2, the degrees where the word relations are
/// unambiguous.
pub fn chain_space(a: &Algebra, q: usize, conv: SignConvention) -> Result<ChainSpace, CoreError> {
    if q > 2 {
        return Err(CoreError::InvalidArgument(format!(
            "chain spaces are only defined for degree <= 2, got {q}"
        )));
    }
    Ok(chain_space_any(a, q, conv))
}

/// Matrix of the boundary b_q : C_q -> C_{q-1} in canonical bases, using
/// the cyclic formula
///   b_q(a_1 ^ ... ^ a_{q+1}) =
///     sum_i (a_i a_{i+1}) ^ a_{i+2} ^ ... ^ a_{i-1}   (indices mod q+1),
/// which reproduces the displayed maps
///   b_1(a1^a2) = a1 a2 + a2 a1,
///   b_2(a1^a2^a3) = a1a2 ^ a3 + a2a3 ^ a1 + a3a1 ^ a2.
pub fn boundary(a: &Algebra, q: usize, conv: SignConvention) -> Result<Matrix, CoreError> {
    if q == 0 || q > 3 {
        return Err(CoreError::InvalidArgument(format!(
            "boundaries are defined for degree 1 to 3, got {q}"
        )));
    }
    let source = chain_space_any(a, q, conv);
    let target = chain_space_any(a, q - 1, conv);
    let mut m = Matrix::zero(target.dim(), source.dim());
    let len = q + 1;
    for (col, word) in source.words.iter().enumerate() {
        for i in 0..len {
            let x = word[i];
            let y = word[(i + 1) % len];
            // remaining letters in cyclic order after the pair
            let rest: Vec<usize> = (2..len).map(|d| word[(i + d) % len]).collect();
            for (k, c) in a.basis_product(x, y) {
                let mut image = Vec::with_capacity(len - 1);
                image.push(k);
                image.extend_from_slice(&rest);
                if let Some((sign, row)) = target.project(&image) {
                    let term = &c * rint(sign);
                    let entry = m[(row, col)].clone() + term;
                    m[(row, col)] = entry;
                }
            }
        }
    }
    Ok(m)
}

/// Homology summary at degree q: kernel and image bases, the containment
/// check im b_{q+1} <= ker b_q, and dim ker - dim im when it holds.
#[derive(Debug, Clone)]
pub struct HomologyReport {
    pub degree: usize,
    pub convention: SignConvention,
    pub chain_dim: usize,
    pub ker_dim: usize,
    pub im_dim: usize,
    pub containment_holds: bool,
    pub homology_dim: Option<usize>,
    pub ker_basis: Subspace,
    pub im_basis: Subspace,
    pub warnings: Vec<String>,
}

/// Compute homology at degree q in {0, 1}. At degree 0 the kernel is the
/// whole algebra (there is no b_0).
pub fn homology_report(
    a: &Algebra,
    q: usize,
    conv: SignConvention,
) -> Result<HomologyReport, CoreError> {
    if q > 1 {
        return Err(CoreError::InvalidArgument(format!(
            "homology is computed for degree 0 or 1, got {q}"
        )));
    }
    let chain = chain_space_any(a, q, conv);
    let dim_cq = chain.dim();
    let ker_basis = if q == 0 {
        Subspace::full(dim_cq)
    } else {
        let bq = boundary(a, q, conv)?;
        Subspace::span(dim_cq, bq.kernel_basis().rows_vec())
    };
    let b_next = boundary(a, q + 1, conv)?;
    let im_rows: Vec<Vec<Rat>> = b_next.transpose().rows_vec();
    let im_basis = Subspace::span(dim_cq, im_rows);
    let containment_holds = ker_basis.contains_subspace(&im_basis);
    let mut warnings = Vec::new();
    if !containment_holds {
        warnings.push(format!(
            "image of b_{} is not contained in kernel of b_{}: the {} sign \
             convention does not yield a complex here",
            q + 1,
            q,
            conv
        ));
    }
    let homology_dim = containment_holds.then(|| ker_basis.dim() - im_basis.dim());

    // Known reference claims for the free algebra on one generator: a
    // 4-dimensional kernel for b_1 (omitting e1^e3) and first homology 0.
    // The computed kernel contains e1^e3 since e1e3 = e3e1 = 0.
    let is_free_on_one_generator = q == 1
        && conv == SignConvention::Symmetric
        && a.dim == 3
        && {
            let reference = free_anti_associative(1).expect("k = 1").algebra;
            (0..3).all(|i| {
                (0..3).all(|j| a.basis_product(i, j) == reference.basis_product(i, j))
            })
        };
    if is_free_on_one_generator {
        if ker_basis.dim() != 4 {
            warnings.push(format!(
                "kernel of b_1 has dimension {} but the often-quoted span \
                 {{e1^e2, e2^e2, e2^e3, e3^e3}} has dimension 4; the word \
                 e1^e3 also lies in the kernel because e1e3 = e3e1 = 0",
                ker_basis.dim()
            ));
        }
        if homology_dim != Some(0) {
            warnings.push(format!(
                "first homology computes to {:?}, not the announced 0",
                homology_dim
            ));
        }
    }

    Ok(HomologyReport {
        degree: q,
        convention: conv,
        chain_dim: dim_cq,
        ker_dim: ker_basis.dim(),
        im_dim: im_basis.dim(),
        containment_holds,
        homology_dim,
        ker_basis,
        im_basis,
        warnings,
    })
}
