//! Compositions, divisions of totally ordered sets, and the admissibility /
//! deletion calculus shared by every other module.

mod composition;
mod division;

pub use composition::{all_compositions, Composition};
pub use division::{Division, Element};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::Error;

/// Which admissibility rule (and which polytope family) is in force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    /// Hypersimplices `Δ_{k,n}`; only the extreme elements of the outer blocks
    /// are removable.
    A,
    /// Signed polytopes `Γ_{k,n}`; every element of the last block is
    /// removable.
    B,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => f.write_str("A"),
            Family::B => f.write_str("B"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            other => Err(Error::Parse(format!(
                "unknown family {other:?}, expected A or B"
            ))),
        }
    }
}
