//! Exhaustive checks of the identities satisfied by mixed Eulerian numbers.
//!
//! Each verifier sweeps every size up to `n` and records one
//! [`CheckResult`] per identity and size. The two sides of an identity are
//! computed along separate paths (recursion, brute-force permutation counts,
//! the volume polynomial, closed formulas), so agreement is evidence rather
//! than tautology.

mod cycle;
mod partial;
mod report;
mod star;
mod type_a;
mod type_b;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::counting::MemoTable;
use crate::model::Family;
use crate::oracle::{volume_poly_with_limit, MvPoly};
use crate::{Error, Result};

pub use report::{CheckResult, Status, VerificationReport};
pub use star::{c1_descent_count, c1_descents, star_descents, Frame, Letter, StarPermutation};

/// Largest `n` any suite accepts by default.
pub const VERIFY_MAX_N: usize = 7;

/// Checks that walk every permutation of every division (circular fibers,
/// index functions, the `⋆`-bijection, type B enumeration) stop at this size.
pub const EXHAUSTIVE_MAX_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    /// Enumeration, recursion and volume agree, in both types.
    Agreement,
    TypeA,
    Cycle,
    /// The product bound, with the index-function injection behind it.
    Inequality,
    Hybrid,
    Partial,
    Msuz,
    TypeB,
    Injection,
}

impl Suite {
    pub const NAMES: [&'static str; 10] = [
        "all",
        "agreement",
        "type-a",
        "cycle",
        "ineq",
        "hybrid",
        "partial",
        "msuz",
        "type-b",
        "injection",
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::All => "all",
            Suite::Agreement => "agreement",
            Suite::TypeA => "type-a",
            Suite::Cycle => "cycle",
            Suite::Inequality => "ineq",
            Suite::Hybrid => "hybrid",
            Suite::Partial => "partial",
            Suite::Msuz => "msuz",
            Suite::TypeB => "type-b",
            Suite::Injection => "injection",
        };
        f.write_str(name)
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "all" => Suite::All,
            "agreement" => Suite::Agreement,
            "type-a" | "4.1" => Suite::TypeA,
            "cycle" => Suite::Cycle,
            "ineq" | "inequality" => Suite::Inequality,
            "hybrid" => Suite::Hybrid,
            "partial" => Suite::Partial,
            "msuz" => Suite::Msuz,
            "type-b" | "5.2" => Suite::TypeB,
            "injection" => Suite::Injection,
            other => {
                return Err(Error::Parse(format!(
                    "unknown suite {other:?}; expected one of {}",
                    Suite::NAMES.join(", ")
                )))
            }
        })
    }
}

/// Values shared by the verifiers of one run.
pub(crate) struct Context {
    a: MemoTable,
    b: MemoTable,
    polys_a: Vec<OnceLock<MvPoly>>,
    polys_b: Vec<OnceLock<MvPoly>>,
}

impl Context {
    pub(crate) fn new(n: usize) -> Context {
        Context {
            a: MemoTable::new(Family::A),
            b: MemoTable::new(Family::B),
            polys_a: (0..=n).map(|_| OnceLock::new()).collect(),
            polys_b: (0..=n).map(|_| OnceLock::new()).collect(),
        }
    }

    pub(crate) fn table(&self, family: Family) -> &MemoTable {
        match family {
            Family::A => &self.a,
            Family::B => &self.b,
        }
    }

    pub(crate) fn poly(&self, n: usize, family: Family) -> &MvPoly {
        let cell = match family {
            Family::A => &self.polys_a[n],
            Family::B => &self.polys_b[n],
        };
        cell.get_or_init(|| {
            volume_poly_with_limit(n, family, n).expect("size checked by the suite")
        })
    }
}

pub fn run_suite(suite: Suite, n: usize) -> Result<VerificationReport> {
    run_suite_with_limit(suite, n, VERIFY_MAX_N)
}

/// Runs `suite` for every size up to `n`, refusing `n > max_n`.
pub fn run_suite_with_limit(suite: Suite, n: usize, max_n: usize) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::OutOfRange("verification needs n ≥ 1".into()));
    }
    if n > max_n {
        return Err(Error::LimitExceeded {
            what: format!("verification size n = {n}"),
            limit: max_n,
        });
    }
    let ctx = Context::new(n);
    let mut report = VerificationReport::new();
    let parts: &[Suite] = match suite {
        Suite::All => &[
            Suite::Agreement,
            Suite::TypeA,
            Suite::Cycle,
            Suite::Inequality,
            Suite::Hybrid,
            Suite::Partial,
            Suite::Msuz,
            Suite::TypeB,
        ],
        _ => std::slice::from_ref(&suite),
    };
    for part in parts {
        report.extend(match part {
            Suite::Agreement => {
                let mut r = type_a::agreement(&ctx, n, Family::A);
                r.extend(type_a::agreement(&ctx, n.min(EXHAUSTIVE_MAX_N), Family::B));
                r
            }
            Suite::TypeA => type_a::properties(&ctx, n),
            Suite::Cycle => cycle::verify(&ctx, n),
            Suite::Inequality => {
                let mut r = type_a::inequality(&ctx, n);
                r.extend(type_a::injection(n.min(EXHAUSTIVE_MAX_N)));
                r
            }
            Suite::Injection => type_a::injection(n.min(EXHAUSTIVE_MAX_N)),
            Suite::Hybrid => type_a::hybrid(&ctx, n),
            Suite::Partial => partial::verify(&ctx, n),
            Suite::Msuz => type_a::msuz(&ctx, n),
            Suite::TypeB => type_b::verify(&ctx, n),
            Suite::All => unreachable!("expanded above"),
        });
    }
    Ok(report)
}

/// Enumeration, recursion and the volume polynomial agree on every
/// composition of every size up to `n`.
pub fn verify_agreement(n: usize, family: Family) -> VerificationReport {
    type_a::agreement(&Context::new(n), n, family)
}

pub fn verify_type_a_properties(n: usize) -> VerificationReport {
    type_a::properties(&Context::new(n), n)
}

pub fn verify_cycle(n: usize) -> VerificationReport {
    cycle::verify(&Context::new(n), n)
}

pub fn verify_inequality(n: usize) -> VerificationReport {
    type_a::inequality(&Context::new(n), n)
}

pub fn verify_injection(n: usize) -> VerificationReport {
    type_a::injection(n)
}

pub fn verify_hybrid(n: usize) -> VerificationReport {
    type_a::hybrid(&Context::new(n), n)
}

pub fn verify_partial_eulerian(n: usize) -> VerificationReport {
    partial::verify(&Context::new(n), n)
}

pub fn verify_msuz(n: usize) -> VerificationReport {
    type_a::msuz(&Context::new(n), n)
}

pub fn verify_type_b_properties(n: usize) -> VerificationReport {
    type_b::verify(&Context::new(n), n)
}

/// Every split point `0 ≤ r ≤ n` at which `c` is superdiagonal
/// up to `r` and subdiagonal on the last `n - r` parts.
pub(crate) fn split_points(c: &[usize]) -> Vec<usize> {
    let n = c.len();
    (0..=n)
        .filter(|&r| {
            let prefix_ok = (1..=r).all(|i| c[..i].iter().sum::<usize>() >= i);
            let suffix_ok = (1..=n - r).all(|i| c[n - i..].iter().sum::<usize>() >= i);
            prefix_ok && suffix_ok
        })
        .collect()
}
