//! `C_1`-descents, `⋆`-permutations, and the bijection between
//! `⋆`-permutations and the C-permutations of divisions shaped
//! `(n-m, 0^{k-3}, r, m-r, 0^{n-k})`.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::engine::{enumerate, is_c_permutation, Permutation};
use crate::model::{Composition, Division, Element, Family};
use crate::{Error, Result};

/// An element of the ground set, or the extra letter `λ` wedged between
/// `C_{k-1}` and `C_k`. The derived order places `λ` correctly: it is stored
/// as a neighbouring element with a nonzero offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    base: Element,
    offset: i8,
}

impl Letter {
    pub fn element(e: Element) -> Letter {
        Letter { base: e, offset: 0 }
    }

    pub fn as_element(&self) -> Option<Element> {
        (self.offset == 0).then_some(self.base)
    }

    pub fn is_lambda(&self) -> bool {
        self.offset != 0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_element() {
            Some(e) => write!(f, "{e}"),
            None => f.write_str("λ"),
        }
    }
}

/// A sequence of letters and `⋆` symbols (`None`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StarPermutation(pub Vec<Option<Letter>>);

impl StarPermutation {
    pub fn star_count(&self) -> usize {
        self.0.iter().filter(|e| e.is_none()).count()
    }

    pub fn descents(&self) -> Vec<usize> {
        star_descents(&self.0)
    }
}

impl fmt::Display for StarPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.0.iter().map(|e| match e {
            Some(l) => l.to_string(),
            None => "⋆".to_string(),
        });
        f.write_str(&parts.format(" ").to_string())
    }
}

/// 1-based indices `i` such that `marked(i)`, or such that the next unmarked
/// term after `i` exists and is smaller than term `i`.
fn descents_skipping<T: Ord>(seq: &[T], marked: impl Fn(&T) -> bool) -> Vec<usize> {
    let mut out = Vec::new();
    for (i, s) in seq.iter().enumerate() {
        if marked(s) {
            out.push(i + 1);
            continue;
        }
        if let Some(next) = seq[i + 1..].iter().find(|t| !marked(t)) {
            if next < s {
                out.push(i + 1);
            }
        }
    }
    out
}

/// 1-based `⋆`-descents: every `⋆`, and every entry greater than the next
/// non-`⋆` entry after it.
pub fn star_descents<T: Ord>(seq: &[Option<T>]) -> Vec<usize> {
    descents_skipping(seq, Option::is_none)
}

/// 1-based `C_1`-descents of `seq`: every term in `C_1`, and every term
/// greater than the next term outside `C_1`.
pub fn c1_descents<T: Ord>(seq: &[T], c1: &BTreeSet<T>) -> Vec<usize> {
    descents_skipping(seq, |t| c1.contains(t))
}

pub fn c1_descent_count<T: Ord>(seq: &[T], c1: &BTreeSet<T>) -> usize {
    c1_descents(seq, c1).len()
}

/// A division shaped `(n-m, 0^{k-3}, r, m-r, 0^{n-k})` together with the
/// letter `λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    division: Division,
    k: usize,
    c1: Vec<Element>,
    /// `C_{k-1} ∪ C_k`, ascending.
    middle: Vec<Element>,
    lambda: Letter,
}

impl Frame {
    /// The canonical frame on `{1, …, n}`.
    pub fn new(n: usize, m: usize, k: usize, r: usize) -> Result<Frame> {
        if !(3 <= k && k <= n && r <= m && m <= n) {
            return Err(Error::Precondition(format!(
                "need 3 ≤ k ≤ n and 0 ≤ r ≤ m ≤ n, got n={n} m={m} k={k} r={r}"
            )));
        }
        let mut parts = vec![0; n];
        parts[0] = n - m;
        parts[k - 2] += r;
        parts[k - 1] += m - r;
        let c = Composition::new(parts)?;
        Frame::from_division(Division::from_composition(&c), k)
    }

    pub fn from_division(division: Division, k: usize) -> Result<Frame> {
        let n = division.len();
        if !(3 <= k && k <= n) {
            return Err(Error::Precondition(format!(
                "need 3 ≤ k ≤ n = {n}, got k = {k}"
            )));
        }
        let blocks = division.blocks();
        if blocks
            .iter()
            .enumerate()
            .any(|(i, b)| !b.is_empty() && i != 0 && i != k - 2 && i != k - 1)
        {
            return Err(Error::Precondition(format!(
                "only blocks 1, {} and {k} may be nonempty",
                k - 1
            )));
        }
        let c1 = blocks[0].clone();
        let middle: Vec<Element> = blocks[k - 2]
            .iter()
            .chain(&blocks[k - 1])
            .copied()
            .collect();
        let lambda = match (
            blocks[k - 1].first(),
            blocks[..k - 1].iter().flatten().max(),
        ) {
            (Some(&first), _) => Letter {
                base: first,
                offset: -1,
            },
            (None, Some(&last)) => Letter {
                base: last,
                offset: 1,
            },
            (None, None) => Letter { base: 0, offset: 1 },
        };
        Ok(Frame {
            division,
            k,
            c1,
            middle,
            lambda,
        })
    }

    pub fn division(&self) -> &Division {
        &self.division
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lambda(&self) -> Letter {
        self.lambda
    }

    fn c1_letters(&self) -> BTreeSet<Letter> {
        self.c1.iter().map(|&e| Letter::element(e)).collect()
    }

    /// Conditions (a)–(c) on `λ, w_1, …, w_n`: the elements of `C_1` appear in
    /// increasing order, there are at least `k - 1` `C_1`-descents, and the
    /// terms after the `(k-1)`-th one increase.
    pub fn satisfies_characterization(&self, w: &[Element]) -> bool {
        let c1 = self.c1_letters();
        let seq: Vec<Letter> = std::iter::once(self.lambda)
            .chain(w.iter().map(|&e| Letter::element(e)))
            .collect();
        let in_c1: Vec<&Letter> = seq.iter().filter(|l| c1.contains(l)).collect();
        if in_c1.windows(2).any(|p| p[0] > p[1]) {
            return false;
        }
        let descents = c1_descents(&seq, &c1);
        match descents.get(self.k - 2) {
            Some(&i) => seq[i..].windows(2).all(|p| p[0] < p[1]),
            None => false,
        }
    }

    /// `s_1 = λ`, at most `n - m` stars, and exactly `k - 1` `⋆`-descents, on
    /// the letters `C_{k-1} ∪ {λ} ∪ C_k`.
    pub fn is_valid_star(&self, sp: &StarPermutation) -> bool {
        if sp.0.first() != Some(&Some(self.lambda)) || sp.star_count() > self.c1.len() {
            return false;
        }
        let mut letters: Vec<Letter> = sp.0.iter().flatten().copied().collect();
        letters.sort_unstable();
        let mut expected: Vec<Letter> = self.middle.iter().map(|&e| Letter::element(e)).collect();
        expected.push(self.lambda);
        expected.sort_unstable();
        letters == expected && sp.descents().len() == self.k - 1
    }

    pub fn star_to_c_permutation(&self, sp: &StarPermutation) -> Result<Permutation> {
        if !self.is_valid_star(sp) {
            return Err(Error::Precondition(format!(
                "{sp} is not a valid ⋆-permutation"
            )));
        }
        let i = sp.descents()[self.k - 2];
        let mut stars = self.c1.iter();
        let mut w: Vec<Element> = sp.0[1..i]
            .iter()
            .map(|e| match e {
                Some(l) => l.as_element().expect("λ only leads"),
                None => *stars.next().expect("star count is bounded by |C_1|"),
            })
            .collect();
        let used: BTreeSet<Element> = w.iter().copied().collect();
        w.extend(
            self.division
                .ground_set()
                .into_iter()
                .filter(|e| !used.contains(e)),
        );
        Ok(Permutation(w))
    }

    pub fn c_permutation_to_star(&self, w: &[Element]) -> Result<StarPermutation> {
        if !is_c_permutation(&self.division, Family::A, w)? {
            return Err(Error::NotCPermutation);
        }
        let c1: BTreeSet<Element> = self.c1.iter().copied().collect();
        let mut seq: Vec<Option<Letter>> = vec![Some(self.lambda)];
        seq.extend(
            w.iter()
                .map(|&e| (!c1.contains(&e)).then_some(Letter::element(e))),
        );
        let i = *star_descents(&seq)
            .get(self.k - 2)
            .ok_or_else(|| Error::Precondition("too few ⋆-descents".into()))?;
        let mut out = seq[..i].to_vec();
        out.extend(seq[i..].iter().filter(|e| e.is_some()).copied());
        Ok(StarPermutation(out))
    }

    /// Every valid `⋆`-permutation, in sorted order.
    pub fn valid_star_permutations(&self) -> Vec<StarPermutation> {
        let m = self.middle.len();
        let mut out = Vec::new();
        for stars in 0..=self.c1.len() {
            let len = m + stars;
            for order in self.middle.iter().copied().permutations(m) {
                for star_slots in (0..len).combinations(stars) {
                    let mut letters = order.iter();
                    let mut seq = vec![Some(self.lambda)];
                    let mut slots = star_slots.iter().peekable();
                    for pos in 0..len {
                        if slots.peek() == Some(&&pos) {
                            slots.next();
                            seq.push(None);
                        } else {
                            seq.push(Some(Letter::element(*letters.next().expect("m letters"))));
                        }
                    }
                    let sp = StarPermutation(seq);
                    if sp.descents().len() == self.k - 1 {
                        out.push(sp);
                    }
                }
            }
        }
        out.sort();
        out
    }

    pub fn c_permutations(&self) -> Result<Vec<Permutation>> {
        enumerate(&self.division, Family::A)
    }
}
