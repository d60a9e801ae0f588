//! Permutohedra, signed permutohedra, and how they decompose as weighted
//! Minkowski sums of hypersimplices and of the `Γ_{k,n}`.

use itertools::Itertools;
use num_traits::{Signed, Zero};

use super::poly::Rational;
use crate::{Error, Result};

/// `P(y)`: the convex hull of all coordinate permutations of
/// `y_1 ≥ … ≥ y_{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutohedron {
    y: Vec<Rational>,
}

/// `SP(y)`: the convex hull of all signed coordinate permutations of
/// `y_1 ≥ … ≥ y_n ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutohedron {
    y: Vec<Rational>,
}

fn check_decreasing(y: &[Rational]) -> Result<()> {
    if y.is_empty() {
        return Err(Error::InvalidPermutohedron("y must be nonempty".into()));
    }
    if y.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidPermutohedron(
            "y must be weakly decreasing".into(),
        ));
    }
    Ok(())
}

fn check_weights(lambda: &[Rational]) -> Result<()> {
    if lambda.is_empty() {
        return Err(Error::InvalidPermutohedron(
            "need at least one weight".into(),
        ));
    }
    if lambda.iter().any(Signed::is_negative) {
        return Err(Error::InvalidPermutohedron(
            "weights must be nonnegative".into(),
        ));
    }
    Ok(())
}

/// `(λ_1+…+λ_n, λ_2+…+λ_n, …, λ_n)`.
fn suffix_sums(lambda: &[Rational]) -> Vec<Rational> {
    let mut y: Vec<Rational> = Vec::with_capacity(lambda.len());
    let mut acc = Rational::zero();
    for l in lambda.iter().rev() {
        acc += l;
        y.push(acc.clone());
    }
    y.reverse();
    y
}

/// Sorted prefix sums of `values` never exceed those of `bounds`, for the
/// first `checked` prefixes.
fn majorized(mut values: Vec<Rational>, bounds: &[Rational], checked: usize) -> bool {
    values.sort_unstable_by(|a, b| b.cmp(a));
    let mut lhs = Rational::zero();
    let mut rhs = Rational::zero();
    for (v, b) in values.iter().zip(bounds).take(checked) {
        lhs += v;
        rhs += b;
        if lhs > rhs {
            return false;
        }
    }
    true
}

fn distinct_permutations(y: &[Rational]) -> Vec<Vec<Rational>> {
    y.iter().cloned().permutations(y.len()).unique().collect()
}

impl Permutohedron {
    pub fn new(y: Vec<Rational>) -> Result<Self> {
        check_decreasing(&y)?;
        Ok(Permutohedron { y })
    }

    /// `λ_1 Δ_{1,n} + … + λ_n Δ_{n,n} = P(λ_1+…+λ_n, …, λ_n, 0)`.
    pub fn from_minkowski_weights(lambda: &[Rational]) -> Result<Self> {
        check_weights(lambda)?;
        let mut y = suffix_sums(lambda);
        y.push(Rational::zero());
        Ok(Permutohedron { y })
    }

    pub fn y(&self) -> &[Rational] {
        &self.y
    }

    /// Ambient dimension `n + 1`.
    pub fn dimension(&self) -> usize {
        self.y.len()
    }

    /// `λ_i = y_i - y_{i+1}`; `P(y)` is `Σ λ_i Δ_{i,n}` translated by
    /// [`translation`](Self::translation) in every coordinate.
    pub fn minkowski_weights(&self) -> Vec<Rational> {
        self.y.windows(2).map(|w| &w[0] - &w[1]).collect()
    }

    pub fn translation(&self) -> Rational {
        self.y.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Every `k`-subset sum of `x` is at most `y_1 + … + y_k`, and the
    /// coordinates of `x` sum to those of `y`.
    pub fn contains(&self, x: &[Rational]) -> Result<bool> {
        if x.len() != self.y.len() {
            return Err(Error::DimensionMismatch {
                expected: self.y.len(),
                found: x.len(),
            });
        }
        let total_x: Rational = x.iter().sum();
        let total_y: Rational = self.y.iter().sum();
        Ok(total_x == total_y && majorized(x.to_vec(), &self.y, self.y.len() - 1))
    }

    pub fn vertices(&self) -> Vec<Vec<Rational>> {
        distinct_permutations(&self.y)
    }
}

impl SignedPermutohedron {
    pub fn new(y: Vec<Rational>) -> Result<Self> {
        check_decreasing(&y)?;
        if y.last().is_some_and(Signed::is_negative) {
            return Err(Error::InvalidPermutohedron("y must be nonnegative".into()));
        }
        Ok(SignedPermutohedron { y })
    }

    /// `λ_1 Γ_{1,n} + … + λ_n Γ_{n,n} = SP(λ_1+…+λ_n, …, λ_n)`.
    pub fn from_minkowski_weights(lambda: &[Rational]) -> Result<Self> {
        check_weights(lambda)?;
        Ok(SignedPermutohedron {
            y: suffix_sums(lambda),
        })
    }

    pub fn y(&self) -> &[Rational] {
        &self.y
    }

    pub fn dimension(&self) -> usize {
        self.y.len()
    }

    /// `(y_1-y_2, …, y_{n-1}-y_n, y_n)`.
    pub fn minkowski_weights(&self) -> Vec<Rational> {
        let mut weights: Vec<Rational> = self.y.windows(2).map(|w| &w[0] - &w[1]).collect();
        weights.push(self.y.last().cloned().unwrap_or_else(Rational::zero));
        weights
    }

    /// Every `k`-subset sum of `|x|` is at most `y_1 + … + y_k`.
    pub fn contains(&self, x: &[Rational]) -> Result<bool> {
        if x.len() != self.y.len() {
            return Err(Error::DimensionMismatch {
                expected: self.y.len(),
                found: x.len(),
            });
        }
        let abs: Vec<Rational> = x.iter().map(Signed::abs).collect();
        Ok(majorized(abs, &self.y, self.y.len()))
    }

    pub fn vertices(&self) -> Vec<Vec<Rational>> {
        let mut out = Vec::new();
        for p in distinct_permutations(&self.y) {
            let n = p.len();
            for signs in 0u32..(1 << n) {
                let v: Vec<Rational> = p
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        if signs >> i & 1 == 1 {
                            -c.clone()
                        } else {
                            c.clone()
                        }
                    })
                    .collect();
                out.push(v);
            }
        }
        out.into_iter().unique().collect()
    }
}

/// The slice of `λ_1 Δ_{1,n} + … + λ_n Δ_{n,n}` at first coordinate `x`,
/// written as `{x} × (λ'_1 Δ_{1,n-1} + … + λ'_{n-1} Δ_{n-1,n-1} + τ·(1, …, 1))`.
/// The shift `τ` is zero except in the last case, where it equals `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossSection {
    /// The 1-based `i` with `λ_{i+1}+…+λ_n ≤ x ≤ λ_i+…+λ_n`; ties go to
    /// the smaller `i`.
    pub case: usize,
    /// `λ_i + … + λ_n - x`.
    pub t: Rational,
    pub weights: Vec<Rational>,
    pub translation: Rational,
}

impl CrossSection {
    /// The slice as a permutohedron one dimension down.
    pub fn slice(&self) -> Permutohedron {
        let mut y = suffix_sums(&self.weights);
        y.push(Rational::zero());
        for v in &mut y {
            *v += &self.translation;
        }
        Permutohedron { y }
    }
}

pub fn cross_section_reduce(lambda: &[Rational], x: &Rational) -> Result<CrossSection> {
    check_weights(lambda)?;
    let n = lambda.len();
    let suffix = suffix_sums(lambda);
    if x.is_negative() || *x > suffix[0] {
        return Err(Error::OutOfRange(format!(
            "x = {x} lies outside [0, {}]",
            suffix[0]
        )));
    }
    // smallest i with λ_{i+1} + … + λ_n ≤ x
    let i = (1..=n)
        .find(|&i| suffix.get(i).is_none_or(|s| s <= x))
        .expect("the empty suffix is zero");
    let t = &suffix[i - 1] - x;

    let weights = if n == 1 {
        Vec::new()
    } else if i == 1 {
        let mut w = vec![&t + &lambda[1]];
        w.extend_from_slice(&lambda[2..]);
        w
    } else if i < n {
        let k = i - 1;
        let mut w = lambda[..k - 1].to_vec();
        w.push(&lambda[k - 1] + &lambda[k] - &t);
        w.push(&t + &lambda[k + 1]);
        w.extend_from_slice(&lambda[k + 2..]);
        w
    } else {
        let mut w = lambda[..n - 2].to_vec();
        w.push(&lambda[n - 2] + &lambda[n - 1] - &t);
        w
    };
    let translation = if i == n { t.clone() } else { Rational::zero() };
    Ok(CrossSection {
        case: i,
        t,
        weights,
        translation,
    })
}
