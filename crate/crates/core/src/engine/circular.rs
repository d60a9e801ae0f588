//! The cyclic deletion process on `n + 1` blocks arranged around a circle.
//!
//! Elements `1, …, n` sit clockwise around the circle, block `B_i` initially
//! holds `C_i` and a final block `B_{n+1}` starts empty. Deleting `s ∈ B_i`
//! removes `s` together with `B_i`; the elements of `B_i` counterclockwise of
//! `s` join the block to its left and those clockwise of `s` join the block
//! to its right. Any element may be deleted at any time. After all `n`
//! deletions exactly one block survives, and it is one that started empty.

use crate::model::{Composition, Division, Element};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularState {
    /// Indexed by original block id; contents listed clockwise.
    blocks: Vec<Vec<Element>>,
    /// Surviving block ids in clockwise order.
    alive: Vec<usize>,
}

impl CircularState {
    pub fn new(c: &Composition) -> CircularState {
        let mut blocks: Vec<Vec<Element>> = Division::from_composition(c).blocks().to_vec();
        blocks.push(Vec::new());
        let alive = (0..blocks.len()).collect();
        CircularState { blocks, alive }
    }

    /// Surviving blocks as `(1-based original index, contents)` in clockwise
    /// order, starting from the lowest surviving index.
    pub fn blocks(&self) -> Vec<(usize, &[Element])> {
        self.alive
            .iter()
            .map(|&b| (b + 1, self.blocks[b].as_slice()))
            .collect()
    }

    pub fn remaining(&self) -> usize {
        self.alive.iter().map(|&b| self.blocks[b].len()).sum()
    }

    pub fn delete(&mut self, s: Element) -> Result<()> {
        let (pos, j) = self
            .alive
            .iter()
            .enumerate()
            .find_map(|(pos, &b)| {
                self.blocks[b]
                    .iter()
                    .position(|&t| t == s)
                    .map(|j| (pos, j))
            })
            .ok_or(Error::NotInGroundSet(s))?;
        let count = self.alive.len();
        let id = self.alive[pos];
        let left = self.alive[(pos + count - 1) % count];
        let right = self.alive[(pos + 1) % count];
        let block = std::mem::take(&mut self.blocks[id]);
        self.blocks[left].extend_from_slice(&block[..j]);
        let mut moved = block[j + 1..].to_vec();
        moved.append(&mut self.blocks[right]);
        self.blocks[right] = moved;
        self.alive.remove(pos);
        Ok(())
    }

    /// The 1-based index of the last block, once everything is deleted.
    pub fn final_block(&self) -> Option<usize> {
        match self.alive.as_slice() {
            [only] if self.blocks[*only].is_empty() => Some(only + 1),
            _ => None,
        }
    }
}

/// The block `r(w) ∈ {1, …, n+1}` surviving the deletion of `w_1, …, w_n`
/// starting from the canonical division of `c` plus an empty `B_{n+1}`.
pub fn circular_final_block(c: &Composition, w: &[Element]) -> Result<usize> {
    let n = c.len();
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    if sorted != (1..=n as Element).collect::<Vec<_>>() {
        return Err(Error::NotAPermutation(format!(
            "{w:?} is not a permutation of 1..={n}"
        )));
    }
    let mut state = CircularState::new(c);
    for &s in w {
        state.delete(s)?;
    }
    Ok(state
        .final_block()
        .expect("n deletions leave one empty block"))
}

/// For a block `r` (1-based, up to `n + 1`) that starts empty, the division
/// `(C_{r+1}, …, C_{r-1})` read cyclically, relabelled `1, …, n` in the order
/// the elements are met going clockwise from `C_{r+1}`. Returns the division
/// together with the original label of each new label (`labels[k - 1]` is
/// the element now called `k`). The permutations ending in block `r` are
/// exactly the relabelled C-permutations of this division.
pub fn shifted_division(c: &Composition, r: usize) -> Option<(Division, Vec<Element>)> {
    let n = c.len();
    let mut sizes: Vec<usize> = c.parts().to_vec();
    sizes.push(0);
    if r == 0 || r > n + 1 || sizes[r - 1] != 0 {
        return None;
    }
    let original = Division::from_composition(c);
    let mut original_blocks = original.blocks().to_vec();
    original_blocks.push(Vec::new());

    let mut labels = Vec::with_capacity(n);
    let mut blocks = Vec::with_capacity(n);
    for step in 1..=n {
        let block = &original_blocks[(r - 1 + step) % (n + 1)];
        let start = labels.len() as Element + 1;
        labels.extend_from_slice(block);
        blocks.push((start..start + block.len() as Element).collect());
    }
    Some((Division::from_blocks_unchecked(blocks), labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::all_permutations;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn only_empty_block_survives_for_singletons() {
        for w in all_permutations(2) {
            assert_eq!(circular_final_block(&comp(&[1, 1]), &w).unwrap(), 3);
        }
    }

    #[test]
    fn two_in_first_block() {
        // Deleting 1 pushes 2 clockwise into B_2, which then disappears with 2.
        assert_eq!(circular_final_block(&comp(&[2, 0]), &[1, 2]).unwrap(), 3);
        // Deleting 2 pushes 1 counterclockwise, across the seam, into B_3.
        assert_eq!(circular_final_block(&comp(&[2, 0]), &[2, 1]).unwrap(), 2);
    }

    #[test]
    fn state_tracks_moves() {
        let mut state = CircularState::new(&comp(&[0, 2]));
        state.delete(1).unwrap();
        assert_eq!(state.blocks(), vec![(1, &[][..]), (3, &[2][..])]);
        assert_eq!(state.remaining(), 1);
        assert_eq!(state.final_block(), None);
        state.delete(2).unwrap();
        assert_eq!(state.final_block(), Some(1));
        assert!(state.delete(2).is_err());
    }

    #[test]
    fn shifted_division_layout() {
        // c = (2, 0, 1): blocks 1,2 | - | 3 | (empty B_4)
        let c = comp(&[2, 0, 1]);
        assert!(shifted_division(&c, 1).is_none());
        let (d, labels) = shifted_division(&c, 2).unwrap();
        assert_eq!(d.to_string(), "1|-|2,3");
        assert_eq!(labels, vec![3, 1, 2]);
        let (d, labels) = shifted_division(&c, 4).unwrap();
        assert_eq!(d.to_string(), "1,2|-|3");
        assert_eq!(labels, vec![1, 2, 3]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(circular_final_block(&comp(&[1, 1]), &[1, 1]).is_err());
        assert!(circular_final_block(&comp(&[1, 1]), &[1]).is_err());
    }
}
