use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// A weak composition `(c_1, …, c_n)` of `n` into exactly `n` parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition {
                parts,
                reason: "a composition needs at least one part".into(),
            });
        }
        let total: usize = parts.iter().sum();
        if total != parts.len() {
            return Err(Error::InvalidComposition {
                reason: format!("parts sum to {total} but there are {} of them", parts.len()),
                parts,
            });
        }
        Ok(Composition(parts))
    }

    /// `(1, 1, …, 1)`.
    pub fn ones(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    /// `n` placed at position `k` (1-based), zeros elsewhere.
    pub fn concentrated(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::OutOfRange(format!("position {k} outside 1..={n}")));
        }
        let mut parts = vec![0; n];
        parts[k - 1] = n;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// The number of parts, which is also the total.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// `c_1 + … + c_i ≥ i` for every `i`.
    pub fn is_superdiagonal(&self) -> bool {
        prefix_dominates(self.0.iter())
    }

    /// `c_n + … + c_{n-i+1} ≥ i` for every `i`.
    pub fn is_subdiagonal(&self) -> bool {
        prefix_dominates(self.0.iter().rev())
    }

    /// `1^{c_1} 2^{c_2} ⋯ n^{c_n}`, the number of index functions of any
    /// division with this composition.
    pub fn index_product(&self) -> BigUint {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &c)| BigUint::from(i + 1).pow(c as u32))
            .product()
    }
}

fn prefix_dominates<'a>(parts: impl Iterator<Item = &'a usize>) -> bool {
    let mut sum = 0;
    for (i, &c) in parts.enumerate() {
        sum += c;
        if sum < i + 1 {
            return false;
        }
    }
    true
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Accepts `"1,0,2,1,1"` or, for at most nine parts, the compact `"10211"`.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parts = if s.contains(',') {
            s.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("bad composition part {p:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else if !s.is_empty() && s.len() <= 9 && s.bytes().all(|b| b.is_ascii_digit()) {
            s.bytes().map(|b| (b - b'0') as usize).collect()
        } else {
            return Err(Error::Parse(format!("cannot read {s:?} as a composition")));
        };
        Composition::new(parts)
    }
}

impl AsRef<[usize]> for Composition {
    fn as_ref(&self) -> &[usize] {
        &self.0
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// All `binom(2n-1, n-1)` compositions of `n` into `n` parts, in
/// lexicographic order.
pub fn all_compositions(n: usize) -> Vec<Composition> {
    fn fill(prefix: &mut Vec<usize>, remaining: usize, slots: usize, out: &mut Vec<Composition>) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(Composition(prefix.clone()));
            prefix.pop();
            return;
        }
        for v in 0..=remaining {
            prefix.push(v);
            fill(prefix, remaining - v, slots - 1, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    if n > 0 {
        fill(&mut Vec::with_capacity(n), n, n, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_sums_and_empty() {
        assert!(Composition::new(vec![]).is_err());
        assert!(Composition::new(vec![1, 1, 0]).is_err());
        assert!(Composition::new(vec![2]).is_err());
        assert!(Composition::new(vec![0, 2]).is_ok());
    }

    #[test]
    fn diagonality() {
        assert!(comp(&[2, 1, 0]).is_superdiagonal());
        assert!(!comp(&[0, 3, 0]).is_superdiagonal());
        assert!(!comp(&[0, 3, 0]).is_subdiagonal());
        let ones = Composition::ones(5).unwrap();
        assert!(ones.is_superdiagonal() && ones.is_subdiagonal());
        assert!(comp(&[0, 1, 2]).is_subdiagonal());
    }

    #[test]
    fn listing() {
        let two: Vec<_> = all_compositions(2)
            .into_iter()
            .map(Composition::into_parts)
            .collect();
        assert_eq!(two, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(all_compositions(3).len(), 10);
        assert_eq!(all_compositions(1), vec![comp(&[1])]);
        // binom(13, 6)
        assert_eq!(all_compositions(7).len(), 1716);
        assert!(all_compositions(0).is_empty());
    }

    #[test]
    fn parsing() {
        assert_eq!(
            "1,0,2,1,1".parse::<Composition>().unwrap(),
            comp(&[1, 0, 2, 1, 1])
        );
        assert_eq!(
            "10211".parse::<Composition>().unwrap(),
            comp(&[1, 0, 2, 1, 1])
        );
        assert!("12".parse::<Composition>().is_err());
        assert!("1,x".parse::<Composition>().is_err());
        assert!("".parse::<Composition>().is_err());
        assert_eq!(comp(&[0, 2]).to_string(), "0,2");
    }

    #[test]
    fn index_product() {
        assert_eq!(comp(&[1, 1]).index_product(), BigUint::from(2u32));
        assert_eq!(comp(&[2, 1, 0]).index_product(), BigUint::from(2u32));
        assert_eq!(comp(&[0, 3, 0]).index_product(), BigUint::from(8u32));
    }
}
