use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::json;

use super::report::{first_failure, CheckResult, VerificationReport};
use super::{split_points, Context};
use crate::counting::{binomial, catalan, descent_distribution, eulerian, eulerian_r, factorial};
use crate::engine::{
    all_permutations, count, descent_count, descent_count_with_prefix, enumerate, index_function,
};
use crate::model::{all_compositions, Composition, Division, Element, Family};
use crate::oracle::{extract_mixed_eulerian, Rational};

fn comp(parts: Vec<usize>) -> Composition {
    Composition::new(parts).expect("parts sum to their count")
}

/// `(0^{k-1}, n, 0^{n-k})`.
fn concentrated(n: usize, k: usize) -> Composition {
    Composition::concentrated(n, k).expect("1 ≤ k ≤ n")
}

/// `(0^{k-2}, r, n-r, 0^{n-k})` for `2 ≤ k ≤ n`.
pub(crate) fn adjacent(n: usize, k: usize, r: usize) -> Composition {
    let mut parts = vec![0; n];
    parts[k - 2] = r;
    parts[k - 1] = n - r;
    comp(parts)
}

/// `(k, 0, …, 0, n-k)` for `n ≥ 2`.
pub(crate) fn ends(n: usize, k: usize) -> Composition {
    let mut parts = vec![0; n];
    parts[0] = k;
    parts[n - 1] += n - k;
    comp(parts)
}

pub(crate) fn agreement(ctx: &Context, n: usize, family: Family) -> VerificationReport {
    let name = match family {
        Family::A => "agreement.type-a",
        Family::B => "agreement.type-b",
    };
    let mut report = VerificationReport::new();
    for size in 1..=n {
        report.push(CheckResult::run(name, json!({ "n": size }), || {
            let comps = all_compositions(size);
            let counts: Vec<u64> = comps
                .par_iter()
                .map(|c| count(&Division::from_composition(c), family))
                .collect();
            let poly = ctx.poly(size, family);
            let scale = match family {
                Family::A => 0,
                Family::B => size,
            };
            first_failure(comps.iter().zip(counts), |(c, cnt)| {
                let enumerated = BigUint::from(cnt) << scale;
                let recursion = ctx.table(family).value(c);
                let volume = extract_mixed_eulerian(poly, c);
                match volume {
                    Ok(v) if v == recursion && enumerated == recursion => None,
                    Ok(v) => Some(format!(
                        "c={c}: enumeration {enumerated}, recursion {recursion}, volume {v}"
                    )),
                    Err(e) => Some(format!("c={c}: volume extraction failed: {e}")),
                }
            })
        }));
    }
    report
}

pub(crate) fn properties(ctx: &Context, n: usize) -> VerificationReport {
    let table = ctx.table(Family::A);
    let mut report = VerificationReport::new();
    for size in 1..=n {
        let params = json!({ "n": size });
        let comps = all_compositions(size);

        report.push(CheckResult::run(
            "type-a.positive-integers",
            params.clone(),
            || {
                let poly = ctx.poly(size, Family::A);
                first_failure(&comps, |c| match extract_mixed_eulerian(poly, c) {
                    Ok(v) if !v.is_zero() => None,
                    Ok(v) => Some(format!("c={c}: volume gives {v}")),
                    Err(e) => Some(format!("c={c}: {e}")),
                })
            },
        ));

        report.push(CheckResult::run("type-a.reversal", params.clone(), || {
            first_failure(&comps, |c| {
                let (x, y) = (table.value(c), table.value(&c.reversed()));
                (x != y).then(|| format!("c={c}: {x} vs reversed {y}"))
            })
        }));

        report.push(CheckResult::run(
            "type-a.eulerian-diagonal",
            params.clone(),
            || {
                let distribution = descent_distribution(size);
                first_failure(1..=size, |k| {
                    let c = concentrated(size, k);
                    let value = table.value(&c);
                    if value != BigUint::from(distribution[k - 1]) {
                        return Some(format!(
                            "c={c}: {value} vs A({size},{k}) = {}",
                            distribution[k - 1]
                        ));
                    }
                    let perms: Vec<Vec<Element>> =
                        enumerate(&Division::from_composition(&c), Family::A)
                            .ok()?
                            .into_iter()
                            .map(|p| p.0)
                            .collect();
                    let expected: Vec<Vec<Element>> = all_permutations(size)
                        .filter(|w| descent_count(w) == k - 1)
                        .collect();
                    (perms != expected).then(|| {
                        format!(
                            "c={c}: C-permutations differ from those with {} descents",
                            k - 1
                        )
                    })
                })
            },
        ));

        report.push(CheckResult::run(
            "type-a.weighted-sum",
            params.clone(),
            || {
                let expected =
                    num_traits::pow(Rational::from_integer((size as i64 + 1).into()), size - 1);
                let ones = vec![Rational::one(); size];
                let evaluated = ctx.poly(size, Family::A).evaluate(&ones).ok()?;
                if evaluated != expected {
                    return Some(format!(
                        "volume at all-ones is {evaluated}, expected {expected}"
                    ));
                }
                let weighted: Rational = comps
                    .iter()
                    .map(|c| {
                        let denominator: BigUint =
                            c.parts().iter().map(|&p| factorial(p)).product();
                        Rational::new(table.value(c).into(), denominator.into())
                    })
                    .sum();
                (weighted != expected)
                    .then(|| format!("Σ A_c / c! = {weighted}, expected {expected}"))
            },
        ));

        let total: BigUint = comps.iter().map(|c| table.value(c)).sum();
        let expected_total = factorial(size) * catalan(size);
        report.push(
            CheckResult::run("type-a.total-sum", params.clone(), || {
                (total != expected_total)
                    .then(|| format!("Σ A_c = {total}, expected {expected_total}"))
            })
            .with_note(format!("sum {total}")),
        );

        report.push(CheckResult::run(
            "type-a.refined-eulerian",
            params.clone(),
            || {
                first_failure(
                    (2..=size).flat_map(|k| (0..=size).map(move |r| (k, r))),
                    |(k, r)| {
                        let c = adjacent(size, k, r);
                        let value = table.value(&c);
                        let brute = match eulerian_r(size, k as i64, r) {
                            Ok(v) => v,
                            Err(e) => return Some(format!("c={c}: {e}")),
                        };
                        if value != brute {
                            return Some(format!("c={c}: {value} vs A({size},{k};{r}) = {brute}"));
                        }
                        // with λ just above r, the C-permutations are the w with
                        // k - 1 descents in λ w (labels doubled to make room for λ)
                        let lambda = 2 * r as Element + 1;
                        let perms: Vec<Vec<Element>> =
                            enumerate(&Division::from_composition(&c), Family::A)
                                .ok()?
                                .into_iter()
                                .map(|p| p.0)
                                .collect();
                        let expected: Vec<Vec<Element>> = all_permutations(size)
                            .filter(|w| {
                                let doubled: Vec<Element> = w.iter().map(|x| 2 * x).collect();
                                descent_count_with_prefix(&lambda, &doubled) == k - 1
                            })
                            .collect();
                        (perms != expected)
                            .then(|| format!("c={c}: C-permutations differ from prefixed descents"))
                    },
                )
            },
        ));

        report.push(CheckResult::run("type-a.all-ones", params.clone(), || {
            let c = Composition::ones(size).ok()?;
            let value = table.value(&c);
            (value != factorial(size)).then(|| format!("c={c}: {value}"))
        }));

        if size >= 2 {
            report.push(CheckResult::run("type-a.binomial", params.clone(), || {
                first_failure(0..=size, |k| {
                    let c = ends(size, k);
                    let value = table.value(&c);
                    let expected = binomial(size, k);
                    (value != expected).then(|| format!("c={c}: {value}, expected {expected}"))
                })
            }));
        }

        report.push(CheckResult::run(
            "type-a.superdiagonal-product",
            params,
            || {
                first_failure(comps.iter().filter(|c| c.is_superdiagonal()), |c| {
                    let value = table.value(c);
                    let product = c.index_product();
                    (value != product).then(|| format!("c={c}: {value}, product {product}"))
                })
            },
        ));
    }
    report
}

pub(crate) fn inequality(ctx: &Context, n: usize) -> VerificationReport {
    let table = ctx.table(Family::A);
    let mut report = VerificationReport::new();
    for size in 1..=n {
        report.push(CheckResult::run(
            "inequality.product-bound",
            json!({ "n": size }),
            || {
                first_failure(all_compositions(size), |c| {
                    let value = table.value(&c);
                    let product = c.index_product();
                    if value > product {
                        Some(format!("c={c}: {value} exceeds {product}"))
                    } else if (value == product) != c.is_superdiagonal() {
                        Some(format!(
                            "c={c}: equality is {} but superdiagonal is {}",
                            value == product,
                            c.is_superdiagonal()
                        ))
                    } else {
                        None
                    }
                })
            },
        ));
    }
    report
}

/// `w ↦ I_w` is injective into the index functions, and onto them exactly
/// for superdiagonal compositions.
pub(crate) fn injection(n: usize) -> VerificationReport {
    let mut report = VerificationReport::new();
    for size in 1..=n {
        report.push(CheckResult::run(
            "injection.index-functions",
            json!({ "n": size }),
            || {
                first_failure(all_compositions(size), |c| {
                    let division = Division::from_composition(&c);
                    let perms = match enumerate(&division, Family::A) {
                        Ok(p) => p,
                        Err(e) => return Some(format!("c={c}: {e}")),
                    };
                    let mut images = BTreeSet::new();
                    for w in &perms {
                        let f = match index_function(&division, w.as_slice()) {
                            Ok(f) => f,
                            Err(e) => return Some(format!("c={c}, w={w}: {e}")),
                        };
                        if !f.is_valid_for(&division) {
                            return Some(format!("c={c}, w={w}: index function out of range"));
                        }
                        images.insert(f.as_map().clone());
                    }
                    if images.len() != perms.len() {
                        return Some(format!(
                            "c={c}: {} permutations, {} index functions",
                            perms.len(),
                            images.len()
                        ));
                    }
                    let onto = BigUint::from(images.len()) == c.index_product();
                    (onto != c.is_superdiagonal()).then(|| {
                        format!(
                            "c={c}: surjective is {onto} but superdiagonal is {}",
                            c.is_superdiagonal()
                        )
                    })
                })
            },
        ));
    }
    report
}

/// `binom(n, c_1+…+c_r) · 1^{c_1}⋯r^{c_r} · 1^{c_n} 2^{c_{n-1}}⋯(n-r)^{c_{r+1}}`.
pub(crate) fn hybrid_formula(c: &[usize], r: usize) -> BigUint {
    let n = c.len();
    let head: usize = c[..r].iter().sum();
    let mut value = binomial(n, head);
    for (i, &p) in c[..r].iter().enumerate() {
        value *= num_traits::pow(BigUint::from(i + 1), p);
    }
    for (i, &p) in c[r..].iter().rev().enumerate() {
        value *= num_traits::pow(BigUint::from(i + 1), p);
    }
    value
}

pub(crate) fn hybrid(ctx: &Context, n: usize) -> VerificationReport {
    let table = ctx.table(Family::A);
    let mut report = VerificationReport::new();
    for size in 1..=n {
        let mut applicable = 0usize;
        let check = CheckResult::run("hybrid.type-a", json!({ "n": size }), || {
            first_failure(all_compositions(size), |c| {
                let points = split_points(c.parts());
                if !points.is_empty() {
                    applicable += 1;
                }
                first_failure(points, |r| {
                    let head: usize = c.parts()[..r].iter().sum();
                    if head != r {
                        return Some(format!("c={c}, r={r}: c_1+…+c_r = {head}"));
                    }
                    let value = table.value(&c);
                    let formula = hybrid_formula(c.parts(), r);
                    (value != formula)
                        .then(|| format!("c={c}, r={r}: {value} vs formula {formula}"))
                })
            })
        });
        report.push(check.with_note(format!("{applicable} compositions admit a split point")));
    }
    report
}

/// The closed form for `A_{n-m, 0^{k-2}, m, 0^{n-k}}`.
pub(crate) fn msuz_formula(n: usize, k: usize, m: usize) -> BigUint {
    if n - m >= k - 1 {
        return num_traits::pow(BigUint::from(k), m);
    }
    let mut total = BigUint::zero();
    for i in 0..=n - k {
        if m < i + 1 {
            continue;
        }
        let euler = eulerian(m - i - 1, m as i64 - n as i64 + k as i64 - 1);
        total += BigUint::from(n - k + 1 - i)
            * binomial(n - i, n - m)
            * num_traits::pow(BigUint::from(k), i)
            * euler;
    }
    total
}

pub(crate) fn msuz(ctx: &Context, n: usize) -> VerificationReport {
    let table = ctx.table(Family::A);
    let mut report = VerificationReport::new();
    for size in 2..=n {
        report.push(CheckResult::run(
            "msuz.closed-form",
            json!({ "n": size }),
            || {
                first_failure(
                    (2..=size).flat_map(|k| (1..=size).map(move |m| (k, m))),
                    |(k, m)| {
                        let mut parts = vec![0; size];
                        parts[0] = size - m;
                        parts[k - 1] += m;
                        let c = comp(parts);
                        let value = table.value(&c);
                        let formula = msuz_formula(size, k, m);
                        (value != formula)
                            .then(|| format!("c={c} (k={k}, m={m}): {value} vs formula {formula}"))
                    },
                )
            },
        ));
    }
    report
}
