//! Exact values of `A_c` and `B_c` from the composition-level deletion
//! recursion, and the classical numbers the identities compare them with.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::engine::{all_permutations, descent_count};
use crate::model::{all_compositions, Composition, Family};
use crate::{Error, Result};

/// Largest `n` for which [`eulerian_r`] will enumerate `S_{n+1}`.
pub const BRUTE_FORCE_MAX_N: usize = 8;

/// The compositions `|C^s|` reached by one deletion from a division with
/// composition `c`, each with the number of admissible `s` leading to it.
///
/// Type A: one child `(c_1+c_2-1, c_3, …)` when `c_1 ≥ 1`; for each interior
/// block `i` and `0 ≤ r < c_i` the child
/// `(…, c_{i-1}+r, c_i-r-1+c_{i+1}, …)`; one child `(…, c_{n-1}+c_n-1)` when
/// `c_n ≥ 1`. Type B is identical except the last child is reached from each
/// of the `c_n` elements of the final block.
pub fn deletion_children(c: &[usize], family: Family) -> Vec<(Vec<usize>, usize)> {
    let n = c.len();
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    if c[0] >= 1 {
        let mut child = Vec::with_capacity(n - 1);
        child.push(c[0] + c[1] - 1);
        child.extend_from_slice(&c[2..]);
        out.push((child, 1));
    }
    for i in 1..n - 1 {
        for r in 0..c[i] {
            let mut child = Vec::with_capacity(n - 1);
            child.extend_from_slice(&c[..i - 1]);
            child.push(c[i - 1] + r);
            child.push(c[i] - r - 1 + c[i + 1]);
            child.extend_from_slice(&c[i + 2..]);
            out.push((child, 1));
        }
    }
    if c[n - 1] >= 1 {
        let mut child = c[..n - 2].to_vec();
        child.push(c[n - 2] + c[n - 1] - 1);
        let multiplicity = match family {
            Family::A => 1,
            Family::B => c[n - 1],
        };
        out.push((child, multiplicity));
    }
    out
}

/// Write-once cache of recursion values keyed by composition.
///
/// Safe to share between threads: concurrent callers may duplicate work but
/// always insert identical values.
#[derive(Debug)]
pub struct MemoTable {
    family: Family,
    values: RwLock<HashMap<Box<[u16]>, BigUint>>,
}

impl MemoTable {
    pub fn new(family: Family) -> MemoTable {
        MemoTable {
            family,
            values: RwLock::new(HashMap::new()),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn len(&self) -> usize {
        self.values.read().expect("memo lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn value(&self, c: &Composition) -> BigUint {
        self.compute(c.parts())
    }

    fn compute(&self, parts: &[usize]) -> BigUint {
        if parts.len() == 1 {
            return match self.family {
                Family::A => BigUint::one(),
                Family::B => BigUint::from(2u32),
            };
        }
        let key: Box<[u16]> = parts.iter().map(|&p| p as u16).collect();
        if let Some(v) = self.values.read().expect("memo lock").get(&key) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for (child, multiplicity) in deletion_children(parts, self.family) {
            total += self.compute(&child) * multiplicity;
        }
        if self.family == Family::B {
            total <<= 1;
        }
        self.values
            .write()
            .expect("memo lock")
            .entry(key)
            .or_insert(total)
            .clone()
    }

    /// `(c, value)` for every composition of `n`, in lexicographic order.
    pub fn table(&self, n: usize) -> Vec<(Composition, BigUint)> {
        all_compositions(n)
            .into_iter()
            .map(|c| {
                let v = self.value(&c);
                (c, v)
            })
            .collect()
    }
}

pub fn mixed_eulerian(c: &Composition, family: Family) -> BigUint {
    MemoTable::new(family).value(c)
}

pub fn mixed_eulerian_a(c: &Composition) -> BigUint {
    mixed_eulerian(c, Family::A)
}

pub fn mixed_eulerian_b(c: &Composition) -> BigUint {
    mixed_eulerian(c, Family::B)
}

/// `A(n, k)`: permutations of `n` letters with `k - 1` descents, zero when
/// `k` is outside `1..=n` (the empty permutation gives `A(0, 1) = 1`).
pub fn eulerian(n: usize, k: i64) -> BigUint {
    if k < 1 || k as u64 > n.max(1) as u64 {
        return BigUint::zero();
    }
    let k = k as usize;
    // row[j] = A(m, j) for j in 0..=n+1
    let mut row = vec![BigUint::zero(); n + 2];
    row[1] = BigUint::one();
    for m in 1..=n {
        let mut next = vec![BigUint::zero(); n + 2];
        for j in 1..=m {
            next[j] = &row[j] * j + &row[j - 1] * (m - j + 1);
        }
        row = next;
    }
    row[k].clone()
}

/// Number of permutations of `{1, …, n}` with exactly `d` descents, for each
/// `d`, by direct enumeration.
pub fn descent_distribution(n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n.max(1)];
    for w in all_permutations(n) {
        counts[descent_count(&w)] += 1;
    }
    counts
}

/// `A(n, k; r)`: permutations `w` of `n + 1` letters with `k - 1` descents
/// and `w_1 = r + 1`, counted by enumeration.
pub fn eulerian_r(n: usize, k: i64, r: usize) -> Result<BigUint> {
    if r > n {
        return Err(Error::OutOfRange(format!("r = {r} must lie in 0..={n}")));
    }
    let table = refined_eulerian_table(n)?;
    if k < 1 || k as usize > n + 1 {
        return Ok(BigUint::zero());
    }
    Ok(table[r][k as usize - 1].clone())
}

/// All `A(n, k; r)` from one pass over the permutations of `n + 1` letters:
/// entry `[r][k - 1]` for `0 ≤ r ≤ n` and `1 ≤ k ≤ n + 1`.
pub fn refined_eulerian_table(n: usize) -> Result<Vec<Vec<BigUint>>> {
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::LimitExceeded {
            what: format!("n = {n} for brute-force counting"),
            limit: BRUTE_FORCE_MAX_N,
        });
    }
    let mut counts = vec![vec![0u64; n + 1]; n + 1];
    for w in all_permutations(n + 1) {
        counts[w[0] as usize - 1][descent_count(&w)] += 1;
    }
    Ok(counts
        .into_iter()
        .map(|row| row.into_iter().map(BigUint::from).collect())
        .collect())
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn type_a_values() {
        for n in 1..=7 {
            assert_eq!(
                mixed_eulerian_a(&Composition::ones(n).unwrap()),
                factorial(n)
            );
        }
        assert_eq!(mixed_eulerian_a(&comp(&[2, 0, 1])), big(3));
        // one-descent permutations of 3 letters: 132, 213, 231, 312
        assert_eq!(mixed_eulerian_a(&comp(&[0, 3, 0])), big(4));
        assert_eq!(mixed_eulerian_a(&comp(&[2, 1, 0])), big(2));
        assert_eq!(mixed_eulerian_a(&comp(&[1])), big(1));
    }

    #[test]
    fn type_b_values() {
        assert_eq!(mixed_eulerian_b(&comp(&[1, 1])), big(8));
        assert_eq!(mixed_eulerian_b(&comp(&[2, 0])), big(4));
        assert_eq!(mixed_eulerian_b(&comp(&[0, 2])), big(8));
        assert_eq!(mixed_eulerian_b(&comp(&[1])), big(2));
    }

    #[test]
    fn children_of_small_compositions() {
        assert_eq!(
            deletion_children(&[1, 1], Family::A),
            vec![(vec![1], 1), (vec![1], 1)]
        );
        assert_eq!(deletion_children(&[0, 2], Family::B), vec![(vec![1], 2)]);
        assert_eq!(
            deletion_children(&[1, 0, 2, 1, 1], Family::A),
            vec![
                (vec![0, 2, 1, 1], 1),
                (vec![1, 0, 2, 1], 1),
                (vec![1, 1, 1, 1], 1),
                (vec![1, 0, 2, 1], 1),
                (vec![1, 0, 2, 1], 1),
            ]
        );
        assert!(deletion_children(&[1], Family::A).is_empty());
    }

    #[test]
    fn classical_numbers() {
        assert_eq!(eulerian(3, 2), big(4));
        assert_eq!(eulerian(2, 5), big(0));
        assert_eq!(eulerian(4, 0), big(0));
        assert_eq!(eulerian(0, 1), big(1));
        for n in 1..=6 {
            assert_eq!(eulerian(n, 1), big(1));
        }
        assert_eq!(catalan(0), big(1));
        assert_eq!(catalan(3), big(5));
        assert_eq!(catalan(4), big(14));
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(2, 3), big(0));
        assert_eq!(factorial(0), big(1));
    }

    #[test]
    fn eulerian_recurrence_matches_enumeration() {
        for n in 1..=8 {
            let counts = descent_distribution(n);
            for k in 1..=n {
                assert_eq!(eulerian(n, k as i64), big(counts[k - 1]), "A({n},{k})");
            }
        }
    }

    #[test]
    fn refined_eulerian() {
        // 213 and 231
        assert_eq!(eulerian_r(2, 2, 1).unwrap(), big(2));
        // 321 has two descents but starts with 3
        assert_eq!(eulerian_r(2, 3, 1).unwrap(), big(0));
        assert_eq!(eulerian_r(0, 1, 0).unwrap(), big(1));
        assert!(eulerian_r(2, 1, 3).is_err());
        assert!(matches!(
            eulerian_r(9, 1, 0),
            Err(Error::LimitExceeded { .. })
        ));
        for n in 0..=5 {
            for r in 0..=n {
                let total: BigUint = (1..=n as i64 + 1)
                    .map(|k| eulerian_r(n, k, r).unwrap())
                    .sum();
                assert_eq!(total, factorial(n));
            }
        }
    }

    #[test]
    fn cold_tables_agree() {
        let warm = MemoTable::new(Family::A);
        let first = warm.table(6);
        assert!(!warm.is_empty());
        assert_eq!(first, MemoTable::new(Family::A).table(6));
        assert_eq!(first, warm.table(6));
        assert_eq!(first.len(), 462);
    }

    fn composition_strategy() -> impl Strategy<Value = Composition> {
        (1usize..=7).prop_flat_map(|n| proptest::sample::select(all_compositions(n)))
    }

    proptest! {
        #[test]
        fn reversal_symmetry(c in composition_strategy()) {
            prop_assert_eq!(mixed_eulerian_a(&c), mixed_eulerian_a(&c.reversed()));
        }

        #[test]
        fn positivity_and_type_b_bounds(c in composition_strategy()) {
            let n = c.len();
            let a = mixed_eulerian_a(&c);
            let b = mixed_eulerian_b(&c);
            prop_assert!(a >= BigUint::one());
            let scale = BigUint::one() << n;
            prop_assert!((&b % &scale).is_zero());
            prop_assert!(&scale * &a <= b);
            prop_assert!(a <= c.index_product());
        }
    }
}
