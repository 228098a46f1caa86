//! Squarefree divisor complexes of numerical semigroup elements.
//!
//! For a numerical semigroup `S = <n_1, ..., n_d>` and `m ∈ S`, the squarefree
//! divisor complex `Δ_m` is the simplicial complex on `{1, ..., d}` whose faces
//! are the sets `F` with `m - sum_{i ∈ F} n_i ∈ S`. This crate computes these
//! complexes, the Hilbert series numerator `sum χ(Δ_m) t^m` they produce, the
//! closed-form answers known for supersymmetric and three-generated
//! semigroups, and explicit semigroup elements realizing any fat forest.
//!
//! ```
//! use sdc_core::{delta, NumericalSemigroup};
//!
//! let s = NumericalSemigroup::numerical(&[3, 5, 7])?;
//! let complex = delta(&s, 10)?;
//! assert_eq!(complex.facet_lists(), vec![vec![2], vec![1, 3]]);
//! assert_eq!(complex.euler_characteristic(), -1);
//! # Ok::<(), sdc_core::Error>(())
//! ```
//!
//! The guide under `book/` walks through each part; its code listings are
//! compiled and run as doc tests of this crate.

pub mod arith;
pub mod complex;
pub mod constructions;
pub mod divisor;
pub mod error;
pub mod grammar;
pub mod hilbert;
pub mod semigroup;
pub mod special;

pub use arith::{binomial, gcd, is_prime, lcm, next_prime};
pub use complex::{face_sum, skeleton, Face, SimplicialComplex};
pub use constructions::{
    disjoint_union_realize, glue, inflate, realize_complex, realize_fat_forest, realize_simplex,
    realize_simplex_shifted, Inflation, PrimeRule, RealizationCertificate, RealizeOptions,
    SimplexRealization, TraceStep,
};
pub use divisor::{
    delta, euler_at, hollow_simplex_elements, nonzero_euler_scan, nonzero_euler_scan_parallel,
    scan_bound,
};
pub use error::{Error, Result};
pub use hilbert::{
    hilbert_numerator, hilbert_numerator_parallel, numerator_oracle, SparsePolynomial,
};
pub use semigroup::{minimal_generators, NumericalSemigroup};
pub use special::{
    disconnected_elements_3gen, frobenius_gen_family, is_supersymmetric, nonzero_set_3gen,
    supersymmetric_from, supersymmetric_skeleton_check, supersymmetric_vanishing_check,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/semigroups.md")]
    mod semigroups {}
    #[doc = include_str!("../../../book/src/complexes.md")]
    mod complexes {}
    #[doc = include_str!("../../../book/src/divisor-complexes.md")]
    mod divisor_complexes {}
    #[doc = include_str!("../../../book/src/hilbert.md")]
    mod hilbert {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/special-classes.md")]
    mod special_classes {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
