//! Shared inputs for the benchmarks.

use mixed_eulerian::{Composition, Division};

/// `(1, …, 1)`, the composition with the most C-permutations (`n!`).
pub fn ones(n: usize) -> Composition {
    Composition::ones(n).expect("n ≥ 1")
}

/// `(0, …, 0, n, 0, …, 0)` with the mass in the middle block.
pub fn central(n: usize) -> Composition {
    Composition::concentrated(n, n.div_ceil(2)).expect("n ≥ 1")
}

pub fn canonical_division(c: &Composition) -> Division {
    Division::from_composition(c)
}
