//! Bundled catalog of small example algebras: the low-dimensional
//! anti-associative classification tables, the two-generator case study,
//! and commutative, anticommutative and Jacobi-Jordan examples.
//!
//! Families that come with scalar parameters are instantiated at
//! representative values (all ones and all zeros); the `parameters` field
//! flags these as arbitrary choices, not classification representatives.

use crate::algebra::Algebra;
use crate::free::free_anti_associative;
use crate::rat::rint;

/// A named example algebra with a human-readable description of where the
/// table comes from and which parameter values were chosen.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub provenance: &'static str,
    pub parameters: Option<&'static str>,
    pub algebra: Algebra,
}

fn build(names: &[&str], entries: &[(usize, usize, usize, i64)]) -> Algebra {
    let mut a = Algebra::with_basis(names.iter().map(|s| s.to_string()).collect());
    for &(i, j, k, c) in entries {
        a.set_entry(i, j, k, rint(c));
    }
    a
}

/// Every bundled fixture, in catalog order.
pub fn catalog() -> Vec<Fixture> {
    let e3 = ["e1", "e2", "e3"];
    let e4 = ["e1", "e2", "e3", "e4"];
    let e5 = ["e1", "e2", "e3", "e4", "e5"];
    let k2d3 = ["e1", "e2", "f1_1"];
    let k2d3b = ["e1", "e2", "f1_2"];
    let k2d4 = ["e1", "e2", "f1_1", "f1_2"];
    let k2d4c = ["e1", "e2", "f1_1", "f2_2"];
    let k2d5 = ["e1", "e2", "f1_1", "f1_2", "g1_1_2"];
    vec![
        Fixture {
            name: "dim2-aa",
            provenance: "unique nontrivial two-dimensional anti-associative algebra",
            parameters: None,
            algebra: build(&["e1", "e2"], &[(0, 0, 1, 1)]),
        },
        Fixture {
            name: "dim3-a",
            provenance: "three-dimensional anti-associative family (a): e1e2 = -e2e1 = e3",
            parameters: None,
            algebra: build(&e3, &[(0, 1, 2, 1), (1, 0, 2, -1)]),
        },
        Fixture {
            name: "dim3-b",
            provenance: "three-dimensional anti-associative family (b): e1e1 = e2, e1e2 = -e2e1 = e3; \
             isomorphic to the free anti-associative algebra on one generator",
            parameters: None,
            algebra: build(&e3, &[(0, 0, 1, 1), (0, 1, 2, 1), (1, 0, 2, -1)]),
        },
        Fixture {
            name: "dim3-c-ones",
            provenance: "three-dimensional anti-associative family (c): e1e1 = e3e3 = e2, \
             e1e3 = a e2, e3e1 = b e2",
            parameters: Some("a = b = 1"),
            algebra: build(
                &e3,
                &[(0, 0, 1, 1), (0, 2, 1, 1), (2, 0, 1, 1), (2, 2, 1, 1)],
            ),
        },
        Fixture {
            name: "dim3-c-zeros",
            provenance: "three-dimensional anti-associative family (c): e1e1 = e3e3 = e2, \
             e1e3 = a e2, e3e1 = b e2",
            parameters: Some("a = b = 0"),
            algebra: build(&e3, &[(0, 0, 1, 1), (2, 2, 1, 1)]),
        },
        Fixture {
            name: "dim3-d-ones",
            provenance: "three-dimensional anti-associative family (d): e1e1 = e2, \
             e1e3 = a e2, e3e1 = b e2",
            parameters: Some("a = b = 1"),
            algebra: build(&e3, &[(0, 0, 1, 1), (0, 2, 1, 1), (2, 0, 1, 1)]),
        },
        Fixture {
            name: "dim3-d-zeros",
            provenance: "three-dimensional anti-associative family (d): e1e1 = e2, \
             e1e3 = a e2, e3e1 = b e2",
            parameters: Some("a = b = 0"),
            algebra: build(&e3, &[(0, 0, 1, 1)]),
        },
        Fixture {
            name: "faa1",
            provenance: "free anti-associative algebra on one generator (dimension 3, nilindex 4)",
            parameters: None,
            algebra: free_anti_associative(1).expect("one generator").algebra,
        },
        Fixture {
            name: "k2-case1a-ones",
            provenance: "two generators with one-dimensional square spanned by f1_1: \
             e_i e_j = alpha_ij f1_1 with alpha_11 = 1",
            parameters: Some("alpha_12 = alpha_21 = alpha_22 = 1"),
            algebra: build(
                &k2d3,
                &[(0, 0, 2, 1), (0, 1, 2, 1), (1, 0, 2, 1), (1, 1, 2, 1)],
            ),
        },
        Fixture {
            name: "k2-case1a-zeros",
            provenance: "two generators with one-dimensional square spanned by f1_1: \
             e_i e_j = alpha_ij f1_1 with alpha_11 = 1",
            parameters: Some("alpha_12 = alpha_21 = alpha_22 = 0"),
            algebra: build(&k2d3, &[(0, 0, 2, 1)]),
        },
        Fixture {
            name: "k2-case1b",
            provenance: "two generators with one-dimensional square spanned by f1_2: \
             e1e2 = -e2e1 = f1_2, squares zero",
            parameters: None,
            algebra: build(&k2d3b, &[(0, 1, 2, 1), (1, 0, 2, -1)]),
        },
        Fixture {
            name: "k2-case2a-ones",
            provenance: "two generators, two-dimensional square, vanishing cube: \
             e1e1 = f1_1, e1e2 = f1_2, e2e1 = a f1_1 + b f1_2, e2e2 = c f1_1 + d f1_2",
            parameters: Some("a = b = c = d = 1"),
            algebra: build(
                &k2d4,
                &[
                    (0, 0, 2, 1),
                    (0, 1, 3, 1),
                    (1, 0, 2, 1),
                    (1, 0, 3, 1),
                    (1, 1, 2, 1),
                    (1, 1, 3, 1),
                ],
            ),
        },
        Fixture {
            name: "k2-case2a-zeros",
            provenance: "two generators, two-dimensional square, vanishing cube: \
             e1e1 = f1_1, e1e2 = f1_2, e2e1 = a f1_1 + b f1_2, e2e2 = c f1_1 + d f1_2",
            parameters: Some("a = b = c = d = 0"),
            algebra: build(&k2d4, &[(0, 0, 2, 1), (0, 1, 3, 1)]),
        },
        Fixture {
            name: "k2-case2b-ones",
            provenance: "five-dimensional table with nonzero cube, printed as a quotient of the \
             free algebra on two generators; the printed coefficients fail anti-associativity \
             at this instantiation, which the catalog records as-is",
            parameters: Some("a = b = c = d = 1"),
            algebra: build(
                &k2d5,
                &[
                    (0, 0, 2, 1),
                    (0, 1, 3, 1),
                    (1, 0, 2, 1),
                    (1, 0, 3, 1),
                    (1, 1, 2, 1),
                    (1, 1, 3, 1),
                    // e1 f1_2 = g, e2 f1_1 = b^2 g, e2 f1_2 = (a + bd) g
                    (0, 3, 4, 1),
                    (1, 2, 4, 1),
                    (1, 3, 4, 2),
                    // f1_2 e1 = -b g, f1_1 e2 = -g, f1_2 e2 = -d g
                    (3, 0, 4, -1),
                    (2, 1, 4, -1),
                    (3, 1, 4, -1),
                ],
            ),
        },
        Fixture {
            name: "k2-case2b-zeros",
            provenance: "five-dimensional table with nonzero cube, printed as a quotient of the \
             free algebra on two generators",
            parameters: Some("a = b = c = d = 0"),
            algebra: build(
                &k2d5,
                &[(0, 0, 2, 1), (0, 1, 3, 1), (0, 3, 4, 1), (2, 1, 4, -1)],
            ),
        },
        Fixture {
            name: "k2-case2c-ones",
            provenance: "two generators, two-dimensional square spanned by the two squares: \
             e1e1 = f1_1, e1e2 = a f1_1, e2e1 = c f1_1, e2e2 = f2_2",
            parameters: Some("a = c = 1"),
            algebra: build(
                &k2d4c,
                &[(0, 0, 2, 1), (0, 1, 2, 1), (1, 0, 2, 1), (1, 1, 3, 1)],
            ),
        },
        Fixture {
            name: "k2-case2c-zeros",
            provenance: "two generators, two-dimensional square spanned by the two squares: \
             e1e1 = f1_1, e1e2 = a f1_1, e2e1 = c f1_1, e2e2 = f2_2",
            parameters: Some("a = c = 0"),
            algebra: build(&k2d4c, &[(0, 0, 2, 1), (1, 1, 3, 1)]),
        },
        Fixture {
            name: "comm-dim2",
            provenance: "commutative anti-associative classification, dimension 2: e1e1 = e2",
            parameters: None,
            algebra: build(&["e1", "e2"], &[(0, 0, 1, 1)]),
        },
        Fixture {
            name: "comm-dim3",
            provenance: "commutative anti-associative classification, dimension 3: \
             e1e2 = e2e1 = e3",
            parameters: None,
            algebra: build(&e3, &[(0, 1, 2, 1), (1, 0, 2, 1)]),
        },
        Fixture {
            name: "comm-dim4-a",
            provenance: "commutative anti-associative classification, dimension 4, case (a): \
             e1e1 = e2, e1e3 = e3e1 = e4",
            parameters: None,
            algebra: build(&e4, &[(0, 0, 1, 1), (0, 2, 3, 1), (2, 0, 3, 1)]),
        },
        Fixture {
            name: "comm-dim4-b",
            provenance: "commutative anti-associative classification, dimension 4, case (b): \
             e1e1 = e2, e3e3 = e4",
            parameters: None,
            algebra: build(&e4, &[(0, 0, 1, 1), (2, 2, 3, 1)]),
        },
        Fixture {
            name: "comm-dim4-c",
            provenance: "commutative anti-associative classification, dimension 4, case (c): \
             e1e1 = e4, e2e3 = e3e2 = e4",
            parameters: None,
            algebra: build(&e4, &[(0, 0, 3, 1), (1, 2, 3, 1), (2, 1, 3, 1)]),
        },
        Fixture {
            name: "anticomm-dim3",
            provenance: "anticommutative anti-associative classification, dimension 3: \
             e1e2 = -e2e1 = e3 (Heisenberg)",
            parameters: None,
            algebra: build(&e3, &[(0, 1, 2, 1), (1, 0, 2, -1)]),
        },
        Fixture {
            name: "anticomm-dim4",
            provenance: "anticommutative anti-associative classification, dimension 4: \
             e1e2 = -e2e1 = e3, e4 central",
            parameters: None,
            algebra: build(&e4, &[(0, 1, 2, 1), (1, 0, 2, -1)]),
        },
        Fixture {
            name: "anticomm-dim5",
            provenance: "anticommutative anti-associative classification, dimension 5: \
             e1e2 = -e2e1 = e3, e1e4 = -e4e1 = e5",
            parameters: None,
            algebra: build(
                &e5,
                &[(0, 1, 2, 1), (1, 0, 2, -1), (0, 3, 4, 1), (3, 0, 4, -1)],
            ),
        },
        Fixture {
            name: "jj-dim2",
            provenance: "Jacobi-Jordan example, dimension 2: e1e1 = e2",
            parameters: None,
            algebra: build(&["e1", "e2"], &[(0, 0, 1, 1)]),
        },
        Fixture {
            name: "jj-dim3",
            provenance: "Jacobi-Jordan example, dimension 3: e1e1 = e2, e3e3 = e2",
            parameters: None,
            algebra: build(&e3, &[(0, 0, 1, 1), (2, 2, 1, 1)]),
        },
        Fixture {
            name: "jj-dim4-a",
            provenance: "Jacobi-Jordan example, dimension 4, case (a): \
             e1e1 = e2, e1e3 = e3e1 = e4",
            parameters: None,
            algebra: build(&e4, &[(0, 0, 1, 1), (0, 2, 3, 1), (2, 0, 3, 1)]),
        },
        Fixture {
            name: "jj-dim4-b",
            provenance: "Jacobi-Jordan example, dimension 4, case (b): \
             e1e1 = e2, e3e4 = e4e3 = e2",
            parameters: None,
            algebra: build(&e4, &[(0, 0, 1, 1), (2, 3, 1, 1), (3, 2, 1, 1)]),
        },
    ]
}

/// Look up a single fixture by its catalog name.
pub fn fixture(name: &str) -> Option<Fixture> {
    catalog().into_iter().find(|f| f.name == name)
}
