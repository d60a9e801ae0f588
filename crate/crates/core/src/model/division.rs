use std::fmt;
use std::str::FromStr;

use super::{Composition, Family};
use crate::{Error, Result};

/// A ground-set label; labels are ordered by their integer value.
pub type Element = i64;

/// An ordered sequence of blocks `(C_1, …, C_m)` partitioning a totally
/// ordered ground set, such that every element of `C_i` is smaller than every
/// element of `C_j` whenever `i < j`.
///
/// The number of blocks always equals the size of the ground set. The only
/// division with an empty ground set is the one left after deleting every
/// element; it cannot be constructed directly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Division {
    blocks: Vec<Vec<Element>>,
}

impl Division {
    pub fn new(blocks: Vec<Vec<Element>>) -> Result<Self> {
        let size: usize = blocks.iter().map(Vec::len).sum();
        if size == 0 {
            return Err(Error::InvalidDivision("the ground set is empty".into()));
        }
        if size != blocks.len() {
            return Err(Error::InvalidDivision(format!(
                "{} blocks over {size} elements; the counts must agree",
                blocks.len()
            )));
        }
        let mut previous: Option<Element> = None;
        for s in blocks.iter().flatten() {
            if let Some(p) = previous {
                if p >= *s {
                    return Err(Error::InvalidDivision(format!(
                        "elements must increase within and across blocks ({p} then {s})"
                    )));
                }
            }
            previous = Some(*s);
        }
        Ok(Division { blocks })
    }

    /// The canonical division of `{1, …, n}` into consecutive runs of sizes
    /// `c_1, …, c_n`.
    pub fn from_composition(c: &Composition) -> Division {
        let mut next = 1;
        let blocks = c
            .parts()
            .iter()
            .map(|&size| {
                let block: Vec<Element> = (next..next + size as Element).collect();
                next += size as Element;
                block
            })
            .collect();
        Division { blocks }
    }

    pub fn blocks(&self) -> &[Vec<Element>] {
        &self.blocks
    }

    /// Number of blocks, equal to the size of the ground set.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The ground set in increasing order.
    pub fn ground_set(&self) -> Vec<Element> {
        self.blocks.iter().flatten().copied().collect()
    }

    /// `|C| = (|C_1|, …, |C_n|)`.
    pub fn composition(&self) -> Option<Composition> {
        Composition::new(self.blocks.iter().map(Vec::len).collect()).ok()
    }

    /// Block index (0-based) and position within the block of `s`.
    pub fn locate(&self, s: Element) -> Option<(usize, usize)> {
        self.blocks
            .iter()
            .enumerate()
            .find_map(|(i, block)| block.binary_search(&s).ok().map(|j| (i, j)))
    }

    pub fn is_admissible(&self, family: Family, s: Element) -> bool {
        match self.locate(s) {
            Some((i, j)) => self.admissible_at(family, i, j),
            None => false,
        }
    }

    fn admissible_at(&self, family: Family, i: usize, j: usize) -> bool {
        let n = self.blocks.len();
        let last = n - 1;
        if i == 0 && j == 0 {
            return true;
        }
        match family {
            Family::A => (i == last && j + 1 == self.blocks[i].len()) || (i != 0 && i != last),
            Family::B => i != 0,
        }
    }

    /// The admissible elements in increasing order.
    pub fn admissible(&self, family: Family) -> Vec<Element> {
        let mut out = Vec::new();
        for (i, block) in self.blocks.iter().enumerate() {
            for (j, &s) in block.iter().enumerate() {
                if self.admissible_at(family, i, j) {
                    out.push(s);
                }
            }
        }
        out
    }

    /// The deletion `C^s` of an admissible element `s`: a division of the
    /// ground set without `s`, with one block fewer.
    pub fn delete(&self, family: Family, s: Element) -> Result<Division> {
        let (i, j) = self.locate(s).ok_or(Error::NotInGroundSet(s))?;
        if !self.admissible_at(family, i, j) {
            return Err(Error::NotAdmissible(s));
        }
        Ok(self.delete_at(i, j))
    }

    /// Deletion without the admissibility check. Given admissibility the
    /// rule is the same for both families: the part of `C_i` below `s` joins
    /// `C_{i-1}` and the part above joins `C_{i+1}`, except that the outer
    /// blocks fold into their only neighbour.
    pub(crate) fn delete_at(&self, i: usize, j: usize) -> Division {
        let n = self.blocks.len();
        if n == 1 {
            return Division { blocks: Vec::new() };
        }
        let block = &self.blocks[i];
        let (below, above) = (&block[..j], &block[j + 1..]);
        let mut blocks = Vec::with_capacity(n - 1);
        if i == 0 {
            let mut merged = above.to_vec();
            merged.extend_from_slice(&self.blocks[1]);
            blocks.push(merged);
            blocks.extend(self.blocks[2..].iter().cloned());
        } else if i == n - 1 {
            blocks.extend(self.blocks[..n - 2].iter().cloned());
            let mut merged = self.blocks[n - 2].clone();
            merged.extend_from_slice(below);
            merged.extend_from_slice(above);
            blocks.push(merged);
        } else {
            blocks.extend(self.blocks[..i - 1].iter().cloned());
            let mut left = self.blocks[i - 1].clone();
            left.extend_from_slice(below);
            let mut right = above.to_vec();
            right.extend_from_slice(&self.blocks[i + 1]);
            blocks.push(left);
            blocks.push(right);
            blocks.extend(self.blocks[i + 2..].iter().cloned());
        }
        Division { blocks }
    }

    pub(crate) fn from_blocks_unchecked(blocks: Vec<Vec<Element>>) -> Division {
        debug_assert!(blocks.is_empty() || Division::new(blocks.clone()).is_ok());
        Division { blocks }
    }
}

/// Blocks joined by `|`, elements by `,`, an empty block written `-`.
impl fmt::Display for Division {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            if block.is_empty() {
                f.write_str("-")?;
            }
            for (k, s) in block.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Division {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .trim()
            .split('|')
            .map(|block| {
                let block = block.trim();
                if block == "-" {
                    return Ok(Vec::new());
                }
                block
                    .split(',')
                    .map(|e| {
                        e.trim()
                            .parse::<Element>()
                            .map_err(|err| Error::Parse(format!("bad element {e:?}: {err}")))
                    })
                    .collect()
            })
            .collect::<Result<Vec<_>>>()?;
        Division::new(blocks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn div(s: &str) -> Division {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_division() {
        let c = Composition::new(vec![1, 0, 2, 1, 1]).unwrap();
        assert_eq!(Division::from_composition(&c), div("1|-|2,3|4|5"));
        let c = Composition::new(vec![3, 0, 0]).unwrap();
        assert_eq!(Division::from_composition(&c), div("1,2,3|-|-"));
        assert_eq!(
            Division::from_composition(&Composition::ones(3).unwrap()),
            div("1|2|3")
        );
    }

    #[test]
    fn validation() {
        assert!("1|3,2|-".parse::<Division>().is_err());
        assert!("2|1".parse::<Division>().is_err());
        assert!("1,2".parse::<Division>().is_err());
        assert!("-|-".parse::<Division>().is_err());
        assert!("1|x".parse::<Division>().is_err());
        assert_eq!(div("1|-|2,3|4|5").to_string(), "1|-|2,3|4|5");
    }

    #[test]
    fn type_a_admissibility() {
        assert_eq!(
            div("1|-|2,3|4|5").admissible(Family::A),
            vec![1, 2, 3, 4, 5]
        );
        assert_eq!(div("1,2,3,4|-|-|-").admissible(Family::A), vec![1]);
        assert_eq!(div("1,2|-|-|3,4").admissible(Family::A), vec![1, 4]);
    }

    #[test]
    fn type_a_deletion() {
        let c = div("1|-|2,3|4|5");
        assert_eq!(c.delete(Family::A, 2).unwrap(), div("1|-|3,4|5"));
        assert_eq!(div("1|-|4,5").delete(Family::A, 1).unwrap(), div("-|4,5"));
        assert_eq!(div("1|2|3").delete(Family::A, 2).unwrap(), div("1|3"));
        assert_eq!(
            div("-|4,5").delete(Family::A, 4),
            Err(Error::NotAdmissible(4))
        );
        assert_eq!(c.delete(Family::A, 9), Err(Error::NotInGroundSet(9)));
        assert!(div("4").delete(Family::A, 4).unwrap().is_empty());
    }

    #[test]
    fn type_b_admissibility_and_deletion() {
        assert_eq!(div("-|1,2").admissible(Family::B), vec![1, 2]);
        assert_eq!(div("1,2|-").admissible(Family::B), vec![1]);
        assert_eq!(div("1|2|3").admissible(Family::B), vec![1, 2, 3]);
        assert_eq!(div("-|1,2").delete(Family::B, 1).unwrap(), div("2"));
        assert_eq!(div("-|1,2").delete(Family::B, 2).unwrap(), div("1"));
        assert_eq!(
            div("1|-|2,3|4|5").delete(Family::B, 2).unwrap(),
            div("1|-|3,4|5")
        );
    }
}
