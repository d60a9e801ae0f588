use std::fmt;

use itertools::Itertools;

use crate::model::{Division, Element, Family};
use crate::{Error, Result};

/// Default cap on the number of permutations a single enumeration may
/// produce.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 10_000_000;

/// A sequence of distinct elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(pub Vec<Element>);

impl Permutation {
    pub fn as_slice(&self) -> &[Element] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<Element>> for Permutation {
    fn from(v: Vec<Element>) -> Self {
        Permutation(v)
    }
}

/// Single-digit labels are written without separators (`23154`); anything
/// else is comma-separated.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|s| (0..=9).contains(s)) {
            for s in &self.0 {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.0.iter().join(","))
        }
    }
}

/// All C-permutations of `division` in lexicographic order.
pub fn enumerate(division: &Division, family: Family) -> Result<Vec<Permutation>> {
    enumerate_with_limit(division, family, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_with_limit(
    division: &Division,
    family: Family,
    limit: usize,
) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(division.len());
    walk(division, family, limit, &mut prefix, &mut out)?;
    Ok(out)
}

fn walk(
    division: &Division,
    family: Family,
    limit: usize,
    prefix: &mut Vec<Element>,
    out: &mut Vec<Permutation>,
) -> Result<()> {
    if division.is_empty() {
        if out.len() == limit {
            return Err(Error::LimitExceeded {
                what: "number of enumerated permutations".into(),
                limit,
            });
        }
        out.push(Permutation(prefix.clone()));
        return Ok(());
    }
    for s in division.admissible(family) {
        let next = division.delete(family, s)?;
        prefix.push(s);
        walk(&next, family, limit, prefix, out)?;
        prefix.pop();
    }
    Ok(())
}

/// Counts C-permutations without materializing them.
pub fn count(division: &Division, family: Family) -> u64 {
    if division.is_empty() {
        return 1;
    }
    division
        .admissible(family)
        .into_iter()
        .map(|s| count(&division.delete(family, s).expect("admissible"), family))
        .sum()
}

/// Whether `w` can be produced by deleting its entries one at a time, each
/// admissible in the division left by the previous deletions.
pub fn is_c_permutation(division: &Division, family: Family, w: &[Element]) -> Result<bool> {
    check_is_permutation_of(division, w)?;
    let mut current = division.clone();
    for &s in w {
        match current.delete(family, s) {
            Ok(next) => current = next,
            Err(_) => return Ok(false),
        }
    }
    Ok(true)
}

pub(crate) fn check_is_permutation_of(division: &Division, w: &[Element]) -> Result<()> {
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    if sorted != division.ground_set() {
        return Err(Error::NotAPermutation(format!(
            "{} does not list the ground set of {division} exactly once",
            Permutation(w.to_vec())
        )));
    }
    Ok(())
}

/// Positions `i` with `seq[i] > seq[i + 1]`, counted.
pub fn descent_count<T: Ord>(seq: &[T]) -> usize {
    seq.windows(2).filter(|w| w[0] > w[1]).count()
}

/// Descents of the sequence `first, seq…`.
pub fn descent_count_with_prefix<T: Ord>(first: &T, seq: &[T]) -> usize {
    let lead = usize::from(seq.first().is_some_and(|s| first > s));
    lead + descent_count(seq)
}

/// Every permutation of `{1, …, n}` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Vec<Element>> {
    (1..=n as Element).permutations(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Composition;

    fn div(s: &str) -> Division {
        s.parse().unwrap()
    }

    fn perm(digits: &str) -> Vec<Element> {
        digits.bytes().map(|b| (b - b'0') as Element).collect()
    }

    #[test]
    fn running_example() {
        let d = div("1|-|2,3|4|5");
        let all = enumerate(&d, Family::A).unwrap();
        assert!(all.contains(&Permutation(perm("23154"))));
        assert!(!all.contains(&Permutation(perm("23145"))));
        assert!(is_c_permutation(&d, Family::A, &perm("23154")).unwrap());
        assert!(!is_c_permutation(&d, Family::A, &perm("23145")).unwrap());
        assert!(all.windows(2).all(|w| w[0] < w[1]), "output must be sorted");
        assert_eq!(all.len() as u64, count(&d, Family::A));
    }

    #[test]
    fn single_block_cases() {
        for n in 1..=6 {
            let first = Division::from_composition(&Composition::concentrated(n, 1).unwrap());
            let last = Division::from_composition(&Composition::concentrated(n, n).unwrap());
            let up: Vec<Element> = (1..=n as Element).collect();
            let down: Vec<Element> = up.iter().rev().copied().collect();
            assert_eq!(
                enumerate(&first, Family::A).unwrap(),
                vec![Permutation(up.clone())]
            );
            assert_eq!(
                enumerate(&last, Family::A).unwrap(),
                vec![Permutation(down)]
            );
            assert!(is_c_permutation(&first, Family::A, &up).unwrap());
        }
    }

    #[test]
    fn all_singletons_give_every_permutation() {
        for n in 1..=5 {
            let d = Division::from_composition(&Composition::ones(n).unwrap());
            let expected: Vec<Permutation> = all_permutations(n).map(Permutation).collect();
            assert_eq!(enumerate(&d, Family::A).unwrap(), expected);
            assert_eq!(enumerate(&d, Family::B).unwrap(), expected);
        }
    }

    #[test]
    fn type_b_small_cases() {
        assert_eq!(
            enumerate(&div("-|1,2"), Family::B).unwrap(),
            vec![Permutation(perm("12")), Permutation(perm("21"))]
        );
        assert_eq!(
            enumerate(&div("1,2|-"), Family::B).unwrap(),
            vec![Permutation(perm("12"))]
        );
        assert!(is_c_permutation(&div("-|1,2"), Family::B, &perm("12")).unwrap());
        assert!(!is_c_permutation(&div("-|1,2"), Family::A, &perm("12")).unwrap());
    }

    #[test]
    fn rejects_non_permutations() {
        let d = div("1|-|2,3|4|5");
        assert!(matches!(
            is_c_permutation(&d, Family::A, &perm("2315")),
            Err(Error::NotAPermutation(_))
        ));
        assert!(is_c_permutation(&d, Family::A, &perm("23155")).is_err());
    }

    #[test]
    fn limit_is_enforced() {
        let d = Division::from_composition(&Composition::ones(4).unwrap());
        assert!(enumerate_with_limit(&d, Family::A, 24).is_ok());
        assert!(matches!(
            enumerate_with_limit(&d, Family::A, 23),
            Err(Error::LimitExceeded { limit: 23, .. })
        ));
    }

    #[test]
    fn descents() {
        assert_eq!(descent_count(&[1, 3, 2]), 1);
        assert_eq!(descent_count(&[1, 2, 3, 4]), 0);
        assert_eq!(descent_count(&[4, 3, 2, 1]), 3);
        assert_eq!(descent_count::<i64>(&[]), 0);
        assert_eq!(descent_count_with_prefix(&5, &[1, 3, 2]), 2);
        assert_eq!(descent_count_with_prefix(&0, &[1, 3, 2]), 1);
    }

    #[test]
    fn display() {
        assert_eq!(Permutation(perm("23154")).to_string(), "23154");
        assert_eq!(Permutation(vec![10, 2]).to_string(), "10,2");
    }
}
