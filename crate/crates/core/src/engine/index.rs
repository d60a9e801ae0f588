use std::collections::BTreeMap;

use super::permutation::check_is_permutation_of;
use crate::model::{Division, Element, Family};
use crate::{Error, Result};

/// A map from the ground set to positive block indices sending `C_i` into
/// `{1, …, i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexFunction(BTreeMap<Element, usize>);

impl IndexFunction {
    pub fn get(&self, s: Element) -> Option<usize> {
        self.0.get(&s).copied()
    }

    pub fn as_map(&self) -> &BTreeMap<Element, usize> {
        &self.0
    }

    /// Whether every element of `C_i` is sent into `{1, …, i}` and the
    /// domain is exactly the ground set.
    pub fn is_valid_for(&self, division: &Division) -> bool {
        let ground = division.ground_set();
        if self.0.len() != ground.len() {
            return false;
        }
        division.blocks().iter().enumerate().all(|(i, block)| {
            block
                .iter()
                .all(|s| self.0.get(s).is_some_and(|&v| (1..=i + 1).contains(&v)))
        })
    }
}

impl FromIterator<(Element, usize)> for IndexFunction {
    fn from_iter<I: IntoIterator<Item = (Element, usize)>>(iter: I) -> Self {
        IndexFunction(iter.into_iter().collect())
    }
}

/// For each entry of the type A C-permutation `w`, the 1-based index of the
/// block holding it just before it is deleted.
pub fn index_function(division: &Division, w: &[Element]) -> Result<IndexFunction> {
    check_is_permutation_of(division, w)?;
    let mut current = division.clone();
    let mut map = BTreeMap::new();
    for &s in w {
        let (i, _) = current.locate(s).ok_or(Error::NotInGroundSet(s))?;
        current = current
            .delete(Family::A, s)
            .map_err(|_| Error::NotCPermutation)?;
        map.insert(s, i + 1);
    }
    Ok(IndexFunction(map))
}

/// Every index function of `division`, `∏ i^{|C_i|}` of them. Elements are
/// taken in increasing order and the values vary fastest on the largest
/// element.
pub fn enumerate_index_functions(division: &Division) -> Vec<IndexFunction> {
    let slots: Vec<(Element, usize)> = division
        .blocks()
        .iter()
        .enumerate()
        .flat_map(|(i, block)| block.iter().map(move |&s| (s, i + 1)))
        .collect();
    let mut out = Vec::new();
    let mut values = vec![1usize; slots.len()];
    loop {
        out.push(
            slots
                .iter()
                .zip(&values)
                .map(|(&(s, _), &v)| (s, v))
                .collect(),
        );
        let mut k = slots.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if values[k] < slots[k].1 {
                values[k] += 1;
                break;
            }
            values[k] = 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::enumerate;
    use crate::model::Composition;

    #[test]
    fn running_example_indices() {
        let d: Division = "1|-|2,3|4|5".parse().unwrap();
        let f = index_function(&d, &[2, 3, 1, 5, 4]).unwrap();
        let expected: IndexFunction = [(2, 3), (3, 3), (1, 1), (5, 2), (4, 1)]
            .into_iter()
            .collect();
        assert_eq!(f, expected);
        assert!(f.is_valid_for(&d));
        assert_eq!(
            index_function(&d, &[2, 3, 1, 4, 5]),
            Err(Error::NotCPermutation)
        );
    }

    #[test]
    fn increasing_runs_read_off_the_index() {
        // For the division concentrated in block k, an entry of the i-th
        // maximal increasing run has index k - i + 1.
        for n in 1..=5 {
            for k in 1..=n {
                let d = Division::from_composition(&Composition::concentrated(n, k).unwrap());
                for w in enumerate(&d, Family::A).unwrap() {
                    let f = index_function(&d, w.as_slice()).unwrap();
                    let mut run = 1;
                    for (pos, &s) in w.as_slice().iter().enumerate() {
                        if pos > 0 && w.as_slice()[pos - 1] > s {
                            run += 1;
                        }
                        assert_eq!(f.get(s), Some(k - run + 1), "w = {w}, k = {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn first_block_is_all_ones() {
        let d = Division::from_composition(&Composition::concentrated(4, 1).unwrap());
        let f = index_function(&d, &[1, 2, 3, 4]).unwrap();
        assert!(f.as_map().values().all(|&v| v == 1));
    }

    #[test]
    fn counts_of_index_functions() {
        for (parts, expected) in [(vec![1, 1], 2), (vec![2, 1, 0], 2), (vec![0, 3, 0], 8)] {
            let c = Composition::new(parts).unwrap();
            let d = Division::from_composition(&c);
            let all = enumerate_index_functions(&d);
            assert_eq!(all.len(), expected);
            assert!(all.iter().all(|f| f.is_valid_for(&d)));
            assert!(all.windows(2).all(|w| w[0] != w[1]));
        }
    }
}
