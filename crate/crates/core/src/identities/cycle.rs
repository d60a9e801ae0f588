use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use serde_json::json;

use super::report::{first_failure, CheckResult, VerificationReport};
use super::{Context, EXHAUSTIVE_MAX_N};
use crate::counting::{catalan, factorial};
use crate::engine::{all_permutations, circular_final_block, enumerate, shifted_division};
use crate::model::{all_compositions, Composition, Element, Family};

/// The smallest composition whose `(c', 0)` is a cyclic shift of `(c, 0)`.
pub(crate) fn class_representative(c: &Composition) -> Composition {
    let mut extended = c.parts().to_vec();
    extended.push(0);
    let len = extended.len();
    (0..len)
        .filter(|&shift| extended[(shift + len - 1) % len] == 0)
        .map(|shift| {
            let parts: Vec<usize> = (0..len - 1).map(|i| extended[(shift + i) % len]).collect();
            Composition::new(parts).expect("a rotation keeps the sum")
        })
        .min()
        .expect("the trivial rotation ends in zero")
}

pub(crate) fn classes(n: usize) -> BTreeMap<Composition, Vec<Composition>> {
    let mut out: BTreeMap<Composition, Vec<Composition>> = BTreeMap::new();
    for c in all_compositions(n) {
        out.entry(class_representative(&c)).or_default().push(c);
    }
    out
}

pub(crate) fn verify(ctx: &Context, n: usize) -> VerificationReport {
    let table = ctx.table(Family::A);
    let mut report = VerificationReport::new();
    for size in 1..=n {
        let params = json!({ "n": size });
        let classes = classes(size);

        report.push(
            CheckResult::run("cycle.class-count", params.clone(), || {
                let expected = catalan(size);
                (BigUint::from(classes.len()) != expected)
                    .then(|| format!("{} classes, expected {expected}", classes.len()))
            })
            .with_note(format!("{} classes", classes.len())),
        );

        report.push(
            CheckResult::run("cycle.class-sums", params.clone(), || {
                let expected = factorial(size);
                first_failure(&classes, |(rep, members)| {
                    let sum: BigUint = members.iter().map(|c| table.value(c)).sum();
                    (sum != expected).then(|| format!("class of c={rep} sums to {sum}"))
                })
            })
            .with_note(format!("every class sums to {}", factorial(size))),
        );

        if size <= EXHAUSTIVE_MAX_N {
            report.push(CheckResult::run("cycle.fibers", params, || {
                first_failure(all_compositions(size), |c| fiber_failure(&c, table))
            }));
        }
    }
    report
}

/// Groups `S_n` by the block left after the circular deletion process and
/// compares each group with the C-permutations of the matching shifted
/// division.
fn fiber_failure(c: &Composition, table: &crate::counting::MemoTable) -> Option<String> {
    let n = c.len();
    let mut fibers: BTreeMap<usize, BTreeSet<Vec<Element>>> = BTreeMap::new();
    for w in all_permutations(n) {
        match circular_final_block(c, &w) {
            Ok(r) => {
                fibers.entry(r).or_default().insert(w);
            }
            Err(e) => return Some(format!("c={c}: {e}")),
        }
    }
    for r in 1..=n + 1 {
        let fiber = fibers.remove(&r).unwrap_or_default();
        let Some((division, labels)) = shifted_division(c, r) else {
            if !fiber.is_empty() {
                return Some(format!("c={c}: nonempty block {r} survives"));
            }
            continue;
        };
        let shifted = division.composition().expect("a full division");
        let expected_size = table.value(&shifted);
        if BigUint::from(fiber.len()) != expected_size {
            return Some(format!(
                "c={c}, r={r}: {} permutations, expected A_{shifted} = {expected_size}",
                fiber.len()
            ));
        }
        let perms = enumerate(&division, Family::A).ok()?;
        let relabelled: BTreeSet<Vec<Element>> = perms
            .iter()
            .map(|p| {
                p.as_slice()
                    .iter()
                    .map(|&x| labels[x as usize - 1])
                    .collect()
            })
            .collect();
        if relabelled != fiber {
            return Some(format!(
                "c={c}, r={r}: fiber differs from relabelled ({division})-permutations"
            ));
        }
    }
    None
}
