use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::json;

use super::report::{first_failure, CheckResult, VerificationReport};
use super::star::Frame;
use super::{Context, EXHAUSTIVE_MAX_N};
use crate::counting::{binomial, eulerian, refined_eulerian_table};
use crate::engine::{all_permutations, Permutation};
use crate::model::{Element, Family};
use crate::Result;

/// Every `(m, k, r)` with `3 ≤ k ≤ n` and `0 ≤ r ≤ m ≤ n`.
fn shapes(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (3..=n).flat_map(move |k| (0..=n).flat_map(move |m| (0..=m).map(move |r| (m, k, r))))
}

/// `Σ_{i=0}^{n-m} binom(m+i, m) A(m, k-i; r)`, with the refined numbers
/// taken from `tables[m]`.
fn refined_side(
    n: usize,
    m: usize,
    k: usize,
    r: usize,
    tables: &BTreeMap<usize, Vec<Vec<BigUint>>>,
) -> BigUint {
    let table = &tables[&m];
    (0..=n - m)
        .filter(|&i| i < k)
        .map(|i| {
            let j = k - i;
            let value = table[r].get(j - 1).cloned().unwrap_or_else(BigUint::zero);
            binomial(m + i, m) * value
        })
        .sum()
}

fn unrefined_side(n: usize, m: usize, k: usize) -> BigUint {
    (0..=n - m)
        .map(|i| binomial(m + i, m) * eulerian(m, k as i64 - i as i64))
        .sum()
}

pub(crate) fn verify(ctx: &Context, n: usize) -> VerificationReport {
    let table = ctx.table(Family::A);
    let mut report = VerificationReport::new();
    for size in 3..=n {
        let params = json!({ "n": size });

        report.push(CheckResult::run(
            "partial-eulerian.refined",
            params.clone(),
            || {
                let tables: BTreeMap<usize, Vec<Vec<BigUint>>> = match (0..=size)
                    .map(|m| refined_eulerian_table(m).map(|t| (m, t)))
                    .collect::<Result<_>>()
                {
                    Ok(t) => t,
                    Err(e) => return Some(e.to_string()),
                };
                first_failure(shapes(size), |(m, k, r)| {
                    let frame = Frame::new(size, m, k, r).ok()?;
                    let c = frame.division().composition()?;
                    let value = table.value(&c);
                    let rhs = refined_side(size, m, k, r, &tables);
                    (value != rhs).then(|| format!("c={c} (m={m}, k={k}, r={r}): {value} vs {rhs}"))
                })
            },
        ));

        report.push(CheckResult::run(
            "partial-eulerian.unrefined",
            params.clone(),
            || {
                first_failure(shapes(size).filter(|&(_, _, r)| r == 0), |(m, k, _)| {
                    let c = Frame::new(size, m, k, 0).ok()?.division().composition()?;
                    let value = table.value(&c);
                    let rhs = unrefined_side(size, m, k);
                    (value != rhs).then(|| format!("c={c} (m={m}, k={k}): {value} vs {rhs}"))
                })
            },
        ));

        if size > EXHAUSTIVE_MAX_N {
            continue;
        }

        report.push(CheckResult::run(
            "partial-eulerian.characterization",
            params.clone(),
            || {
                first_failure(shapes(size), |(m, k, r)| {
                    let frame = Frame::new(size, m, k, r).ok()?;
                    let expected: Vec<Vec<Element>> = match frame.c_permutations() {
                        Ok(p) => p.into_iter().map(|w| w.0).collect(),
                        Err(e) => return Some(e.to_string()),
                    };
                    let filtered: Vec<Vec<Element>> = all_permutations(size)
                        .filter(|w| frame.satisfies_characterization(w))
                        .collect();
                    (filtered != expected).then(|| {
                        format!(
                            "m={m}, k={k}, r={r}: {} filtered vs {} C-permutations",
                            filtered.len(),
                            expected.len()
                        )
                    })
                })
            },
        ));

        report.push(CheckResult::run(
            "partial-eulerian.star-bijection",
            params,
            || first_failure(shapes(size), |(m, k, r)| star_failure(size, m, k, r, ctx)),
        ));
    }
    report
}

fn star_failure(n: usize, m: usize, k: usize, r: usize, ctx: &Context) -> Option<String> {
    let tag = format!("m={m}, k={k}, r={r}");
    let frame = match Frame::new(n, m, k, r) {
        Ok(f) => f,
        Err(e) => return Some(format!("{tag}: {e}")),
    };
    let stars = frame.valid_star_permutations();
    let c = frame.division().composition()?;
    if BigUint::from(stars.len()) != ctx.table(Family::A).value(&c) {
        return Some(format!("{tag}: {} ⋆-permutations for c={c}", stars.len()));
    }
    let mut image: Vec<Permutation> = Vec::with_capacity(stars.len());
    for sp in &stars {
        let w = match frame.star_to_c_permutation(sp) {
            Ok(w) => w,
            Err(e) => return Some(format!("{tag}, s={sp}: {e}")),
        };
        match frame.c_permutation_to_star(w.as_slice()) {
            Ok(back) if &back == sp => {}
            Ok(back) => return Some(format!("{tag}: {sp} → {w} → {back}")),
            Err(e) => return Some(format!("{tag}, w={w}: {e}")),
        }
        image.push(w);
    }
    image.sort();
    let perms = frame.c_permutations().ok()?;
    (image != perms).then(|| format!("{tag}: image is not the set of C-permutations"))
}
