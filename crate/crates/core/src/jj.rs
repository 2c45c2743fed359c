//! Graded components of free Jacobi-Jordan algebras.
//!
//! Components are computed by linear algebra on commutative (non-associative)
//! monomials: the degree-d component has dimension
//! #monomials(d) - dim(relation ideal in degree d).
//!
//! The relation ideal in degree d is built recursively: substitution
//! instances J(m1,m2,m3) of the Jacobi identity with deg m1+m2+m3 = d, plus
//! monomial multiples m * r of lower-degree relations r. The multiples are
//! required: substitution instances alone overcount the quotient (for two
//! generators they leave 9 dimensions in degree 4 where the closed ideal
//! leaves 1).

use crate::error::CoreError;
use crate::rat::{rint, Rat};
use crate::subspace::SparseEchelon;
use std::collections::BTreeMap;
use std::fmt;

/// A commutative non-associative monomial; products store the smaller
/// factor first, making the representation canonical.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mono {
    Gen(usize),
    Prod(Box<Mono>, Box<Mono>),
}

impl Mono {
    pub fn product(a: Mono, b: Mono) -> Mono {
        if a <= b {
            Mono::Prod(Box::new(a), Box::new(b))
        } else {
            Mono::Prod(Box::new(b), Box::new(a))
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Mono::Gen(_) => 1,
            Mono::Prod(a, b) => a.degree() + b.degree(),
        }
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mono::Gen(i) => write!(f, "x{}", i + 1),
            Mono::Prod(a, b) => write!(f, "({a} {b})"),
        }
    }
}

/// All commutative monomials of the given degree on p generators, sorted.
pub fn commutative_monomials(p: usize, d: usize) -> Vec<Mono> {
    let mut by_degree: Vec<Vec<Mono>> = vec![Vec::new(); d + 1];
    if d >= 1 {
        by_degree[1] = (0..p).map(Mono::Gen).collect();
    }
    for deg in 2..=d {
        let mut out = std::collections::BTreeSet::new();
        for e in 1..=deg / 2 {
            let (lo, hi) = (e, deg - e);
            for (i, m1) in by_degree[lo].iter().enumerate() {
                let start_j = if lo == hi { i } else { 0 };
                for m2 in &by_degree[hi][start_j..] {
                    out.insert(Mono::product(m1.clone(), m2.clone()));
                }
            }
        }
        by_degree[deg] = out.into_iter().collect();
    }
    by_degree.swap_remove(d)
}

/// J(m1,m2,m3) = m1(m2 m3) + m2(m3 m1) + m3(m1 m2) as a monomial
/// combination (fully symmetric thanks to commutativity).
fn jacobi_instance(m1: &Mono, m2: &Mono, m3: &Mono) -> BTreeMap<Mono, Rat> {
    let mut acc: BTreeMap<Mono, Rat> = BTreeMap::new();
    for (a, b, c) in [(m1, m2, m3), (m2, m3, m1), (m3, m1, m2)] {
        let term = Mono::product(a.clone(), Mono::product(b.clone(), c.clone()));
        *acc.entry(term).or_insert_with(|| rint(0)) += rint(1);
    }
    acc.retain(|_, c| !num::Zero::is_zero(c));
    acc
}

/// Relation spans per degree, cached per generator count.
pub struct JjRelations {
    p: usize,
    monos: Vec<Vec<Mono>>,
    index: Vec<BTreeMap<Mono, usize>>,
    spans: Vec<SparseEchelon>,
}

impl JjRelations {
    pub fn new(p: usize) -> Self {
        JjRelations {
            p,
            monos: vec![Vec::new()],
            index: vec![BTreeMap::new()],
            spans: vec![SparseEchelon::new()],
        }
    }

    fn extend_to(&mut self, d: usize) {
        while self.monos.len() <= d {
            let deg = self.monos.len();
            let monos = commutative_monomials(self.p, deg);
            let index: BTreeMap<Mono, usize> = monos
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, m)| (m, i))
                .collect();
            let mut span = SparseEchelon::new();
            // Substitution instances of the identity in this degree.
            for e1 in 1..=deg.saturating_sub(2) {
                for e2 in e1..=deg {
                    let Some(e3) = deg.checked_sub(e1 + e2) else {
                        continue;
                    };
                    if e3 < e2 {
                        continue;
                    }
                    for (i1, m1) in self.monos[e1].iter().enumerate() {
                        let js = if e1 == e2 { i1 } else { 0 };
                        for (i2, m2) in self.monos[e2].iter().enumerate().skip(js) {
                            let ks = if e2 == e3 { i2 } else { 0 };
                            for m3 in self.monos[e3].iter().skip(ks) {
                                let inst = jacobi_instance(m1, m2, m3);
                                let row: Vec<(usize, Rat)> = inst
                                    .iter()
                                    .map(|(m, c)| (index[m], c.clone()))
                                    .collect();
                                span.insert(&row);
                            }
                        }
                    }
                }
            }
            // Monomial multiples of lower-degree relations.
            for e in 1..deg {
                let lower_monos = self.monos[deg - e].clone();
                for row in self.spans[deg - e].basis_rows() {
                    for m in &self.monos[e].clone() {
                        let mut lifted: BTreeMap<Mono, Rat> = BTreeMap::new();
                        for (idx, c) in &row {
                            let prod = Mono::product(m.clone(), lower_monos[*idx].clone());
                            *lifted.entry(prod).or_insert_with(|| rint(0)) += c;
                        }
                        let v: Vec<(usize, Rat)> = lifted
                            .iter()
                            .map(|(mono, c)| (index[mono], c.clone()))
                            .collect();
                        span.insert(&v);
                    }
                }
            }
            self.monos.push(monos);
            self.index.push(index);
            self.spans.push(span);
        }
    }

    pub fn monomial_count(&mut self, d: usize) -> usize {
        self.extend_to(d);
        self.monos[d].len()
    }

    pub fn relation_rank(&mut self, d: usize) -> usize {
        self.extend_to(d);
        self.spans[d].rank()
    }

    pub fn component_dim(&mut self, d: usize) -> usize {
        self.monomial_count(d) - self.relation_rank(d)
    }

    /// Whether the monomial is zero in the quotient (lies in the ideal).
    pub fn monomial_vanishes(&mut self, m: &Mono) -> bool {
        let d = m.degree();
        self.extend_to(d);
        let idx = self.index[d][m];
        self.spans[d].reduces_to_zero(&[(idx, rint(1))])
    }
}

const MAX_COMPONENT_DEGREE: usize = 6;

/// Dimension of the degree-d component of the free Jacobi-Jordan algebra
/// on p generators, where degree counts generator letters.
pub fn free_jj_component_dim(p: usize, d: usize) -> Result<usize, CoreError> {
    if p == 0 || d == 0 {
        return Err(CoreError::InvalidArgument(
            "need p >= 1 and d >= 1".into(),
        ));
    }
    if d > MAX_COMPONENT_DEGREE {
        return Err(CoreError::GuardExceeded(format!(
            "component degree {d} exceeds the enumeration guard {MAX_COMPONENT_DEGREE}"
        )));
    }
    let mut rel = JjRelations::new(p);
    if rel.monomial_count(d) > 20_000 {
        return Err(CoreError::GuardExceeded(format!(
            "degree-{d} monomial basis on {p} generators is too large to enumerate"
        )));
    }
    Ok(rel.component_dim(d))
}

/// Dimension of the span of fully nested four-letter words a(b(cd)) modulo
/// only the generator multiples of the cubic Jacobi relations. This is an
/// intermediate quotient (the full relation ideal in degree 4 is larger);
/// it is the stage at which exactly the nested words survive.
pub fn jj_nested_stage_dim(p: usize) -> usize {
    let gens: Vec<Mono> = (0..p).map(Mono::Gen).collect();
    let cubes = commutative_monomials(p, 3);
    let nested: Vec<Mono> = {
        let mut out = std::collections::BTreeSet::new();
        for g in &gens {
            for c in &cubes {
                out.insert(Mono::product(g.clone(), c.clone()));
            }
        }
        out.into_iter().collect()
    };
    let index: BTreeMap<&Mono, usize> = nested.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut span = SparseEchelon::new();
    for g in &gens {
        for i in 0..p {
            for j in i..p {
                for k in j..p {
                    let inst = jacobi_instance(&Mono::Gen(i), &Mono::Gen(j), &Mono::Gen(k));
                    let mut lifted: BTreeMap<Mono, Rat> = BTreeMap::new();
                    for (m, c) in inst {
                        *lifted
                            .entry(Mono::product(g.clone(), m))
                            .or_insert_with(|| rint(0)) += c;
                    }
                    let v: Vec<(usize, Rat)> = lifted
                        .iter()
                        .map(|(m, c)| (index[m], c.clone()))
                        .collect();
                    span.insert(&v);
                }
            }
        }
    }
    nested.len() - span.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts_match_the_pairing_recursion() {
        // Two generators: 2, 3, 6, 18, 54, 183.
        let want = [2, 3, 6, 18, 54, 183];
        for (d, w) in want.iter().enumerate() {
            assert_eq!(commutative_monomials(2, d + 1).len(), *w, "d = {}", d + 1);
        }
        assert_eq!(commutative_monomials(1, 4).len(), 2);
    }

    #[test]
    fn monomial_product_is_commutative_and_canonical() {
        let x = Mono::Gen(0);
        let y = Mono::Gen(1);
        assert_eq!(
            Mono::product(x.clone(), y.clone()),
            Mono::product(y.clone(), x.clone())
        );
        let xy = Mono::product(x.clone(), y.clone());
        assert_eq!(xy.to_string(), "(x1 x2)");
        assert_eq!(Mono::product(xy.clone(), x.clone()).to_string(), "(x1 (x1 x2))");
        assert_eq!(xy.degree(), 2);
    }

    #[test]
    fn one_generator_free_algebra_is_two_dimensional() {
        assert_eq!(free_jj_component_dim(1, 1).unwrap(), 1);
        assert_eq!(free_jj_component_dim(1, 2).unwrap(), 1);
        assert_eq!(free_jj_component_dim(1, 3).unwrap(), 0);
        assert_eq!(free_jj_component_dim(1, 4).unwrap(), 0);
    }

    #[test]
    fn two_generator_component_dimensions() {
        let want = [2, 3, 2, 1, 0, 0];
        for (d, w) in want.iter().enumerate() {
            assert_eq!(
                free_jj_component_dim(2, d + 1).unwrap(),
                *w,
                "degree {}",
                d + 1
            );
        }
    }

    #[test]
    fn components_vanish_from_degree_twice_p_plus_one() {
        for p in 1..=2 {
            for d in (2 * p + 1)..=(2 * p + 2).min(6) {
                assert_eq!(free_jj_component_dim(p, d).unwrap(), 0, "p={p} d={d}");
            }
        }
    }

    #[test]
    fn substitution_instances_alone_leave_too_much_in_degree_four() {
        // Without monomial multiples of lower relations, degree 4 on two
        // generators would keep 9 dimensions instead of 1.
        let monos = commutative_monomials(2, 4);
        let index: BTreeMap<&Mono, usize> =
            monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut span = SparseEchelon::new();
        let all: Vec<Mono> = commutative_monomials(2, 1)
            .into_iter()
            .chain(commutative_monomials(2, 2))
            .collect();
        for m1 in &all {
            for m2 in &all {
                for m3 in &all {
                    if m1.degree() + m2.degree() + m3.degree() == 4 {
                        let inst = jacobi_instance(m1, m2, m3);
                        let v: Vec<(usize, Rat)> = inst
                            .iter()
                            .map(|(m, c)| (index[m], c.clone()))
                            .collect();
                        span.insert(&v);
                    }
                }
            }
        }
        assert_eq!(monos.len() - span.rank(), 9);
        assert_eq!(free_jj_component_dim(2, 4).unwrap(), 1);
    }

    #[test]
    fn nested_word_stage_has_dimension_four_on_two_generators() {
        assert_eq!(jj_nested_stage_dim(2), 4);
        assert_eq!(jj_nested_stage_dim(1), 0);
    }

    #[test]
    fn derived_vanishing_of_nested_words_in_the_full_ideal() {
        // Y(Y(XY)) and Y(X(YY)) both vanish once the whole degree-4 ideal
        // is applied.
        let x = Mono::Gen(0);
        let y = Mono::Gen(1);
        let mut rel = JjRelations::new(2);
        let w1 = Mono::product(
            y.clone(),
            Mono::product(y.clone(), Mono::product(x.clone(), y.clone())),
        );
        let w2 = Mono::product(
            y.clone(),
            Mono::product(x.clone(), Mono::product(y.clone(), y.clone())),
        );
        assert!(rel.monomial_vanishes(&w1));
        assert!(rel.monomial_vanishes(&w2));
        // The doubled pair word survives: it spans the 1-dim component.
        let xy = Mono::product(x, y);
        let sq = Mono::product(xy.clone(), xy);
        assert!(!rel.monomial_vanishes(&sq));
    }

    #[test]
    fn guards_reject_out_of_range_requests() {
        assert!(free_jj_component_dim(0, 2).is_err());
        assert!(free_jj_component_dim(2, 0).is_err());
        assert!(free_jj_component_dim(2, 7).is_err());
    }
}
