//! Exact computation, enumeration and cross-verification of mixed Eulerian
//! numbers.
//!
//! A mixed Eulerian number `A_c` is `n!` times the mixed volume of the
//! hypersimplices `Δ_{1,n}, …, Δ_{n,n}` taken with multiplicities
//! `c = (c_1, …, c_n)`; the type B numbers `B_c` use the polytopes `Γ_{k,n}`
//! (convex hulls of the `±0/1` vectors with `k` nonzero entries) instead.
//!
//! The crate computes these numbers three independent ways:
//!
//! * [`engine`] enumerates *C-permutations*, the permutations realizable as a
//!   chain of admissible deletions from a [`Division`];
//! * [`counting`] evaluates the composition-level deletion recursion with
//!   big-integer memoization;
//! * [`oracle`] builds the exact volume polynomial `f_n(λ)` of the weighted
//!   Minkowski sum by symbolic integration over cross sections, and reads the
//!   numbers off its coefficients.
//!
//! [`identities`] checks the known identities for these numbers against each
//! other and produces structured [`VerificationReport`]s.

pub mod counting;
pub mod engine;
mod error;
pub mod identities;
pub mod model;
pub mod oracle;

pub use error::{Error, Result};
pub use model::{all_compositions, Composition, Division, Element, Family};

pub use counting::{mixed_eulerian, mixed_eulerian_a, mixed_eulerian_b, MemoTable};
pub use engine::{enumerate, is_c_permutation, IndexFunction, Permutation};
pub use identities::{Status, VerificationReport};
pub use oracle::{extract_mixed_eulerian, volume_poly, MvPoly, Rational};
