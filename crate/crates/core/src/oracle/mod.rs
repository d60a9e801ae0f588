//! The volume route: exact volume polynomials of Minkowski sums of
//! hypersimplices (type A) and of the polytopes `Γ_{k,n}` (type B), and the
//! mixed Eulerian numbers read off their coefficients.

mod geometry;
mod poly;
mod volume;

pub use geometry::{cross_section_reduce, CrossSection, Permutohedron, SignedPermutohedron};
pub use poly::{format_rational, parse_rational, rational, LinearForm, MvPoly, Rational};
pub use volume::{
    extract_mixed_eulerian, volume_poly, volume_poly_a_by_last_coordinate, volume_poly_with_limit,
    SliceOrder, DEFAULT_ORACLE_MAX_N,
};
