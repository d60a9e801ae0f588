//! Volume polynomials `f_n(λ) = Vol(λ_1 P_1 + … + λ_n P_n)` for
//! `P_k = Δ_{k,n}` (type A) and `P_k = Γ_{k,n}` (type B).
//!
//! Slicing the Minkowski sum by its first coordinate gives a weighted sum of
//! the same family one dimension down, with weights that are linear in the
//! slice parameter `t`. Integrating over `t` yields
//!
//! ```text
//! f_n(λ) = ∫_0^{λ_1} f_{n-1}(t+λ_2, λ_3, …, λ_n) dt
//!        + Σ_{i=2}^{n-1} ∫_0^{λ_i} f_{n-1}(λ_1, …, λ_{i-1}+λ_i-t, t+λ_{i+1}, …, λ_n) dt
//!        + ∫_0^{λ_n} f_{n-1}(λ_1, …, λ_{n-1}+λ_n-t) dt
//! ```
//!
//! with `f_1 = λ_1`. In type B every term is doubled (the slice at `-x`
//! matches the slice at `x`), the last integrand loses its `-t`, and
//! `f_1 = 2λ_1`.

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

use super::poly::{LinearForm, MvPoly, Rational};
use crate::counting::factorial;
use crate::model::{Composition, Family};
use crate::{Error, Result};

/// Default largest `n` for which the oracle builds `f_n`.
pub const DEFAULT_ORACLE_MAX_N: usize = 8;

/// Which coordinate the cross sections are taken along.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SliceOrder {
    First,
    /// Slices along the last coordinate. For type A this is the first-
    /// coordinate recursion applied to the reversed weights, an independent
    /// route to the same polynomial.
    Last,
}

pub fn volume_poly(n: usize, family: Family) -> Result<MvPoly> {
    volume_poly_with_limit(n, family, DEFAULT_ORACLE_MAX_N)
}

pub fn volume_poly_with_limit(n: usize, family: Family, max_n: usize) -> Result<MvPoly> {
    check_size(n, max_n)?;
    Ok(build(n, family, SliceOrder::First))
}

/// Type A volume polynomial computed by slicing along the last coordinate.
pub fn volume_poly_a_by_last_coordinate(n: usize, max_n: usize) -> Result<MvPoly> {
    check_size(n, max_n)?;
    Ok(build(n, Family::A, SliceOrder::Last))
}

fn check_size(n: usize, max_n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange(
            "the volume polynomial needs n ≥ 1".into(),
        ));
    }
    if n > max_n {
        return Err(Error::LimitExceeded {
            what: format!("oracle size n = {n}"),
            limit: max_n,
        });
    }
    Ok(())
}

fn build(n: usize, family: Family, order: SliceOrder) -> MvPoly {
    let base = match family {
        Family::A => Rational::one(),
        Family::B => Rational::from_integer(2.into()),
    };
    let mut f = MvPoly::variable(1, 0).scale(&base);
    for m in 2..=n {
        let mut next = MvPoly::zero(m);
        for i in 1..=m {
            let (forms, upper) = branch(m, i, family, order);
            // the slice parameter t is variable m
            next.add_assign(&f.substitute(&forms, m + 1).integrate(m, upper));
        }
        if family == Family::B {
            next = next.scale(&Rational::from_integer(2.into()));
        }
        f = next;
    }
    f
}

/// Arguments of `f_{m-1}` in branch `i` (1-based) as linear forms over
/// `λ_1, …, λ_m, t` (indices `0..m`, `t = m`), and the 0-based variable
/// bounding the `t` integral.
fn branch(m: usize, i: usize, family: Family, order: SliceOrder) -> (Vec<LinearForm>, usize) {
    let t = m;
    let lam = |v: usize| match order {
        SliceOrder::First => v,
        SliceOrder::Last => m - 1 - v,
    };
    let mut forms: Vec<LinearForm> = Vec::with_capacity(m - 1);
    let upper;
    if i == 1 {
        forms.push(LinearForm(vec![(t, 1), (lam(1), 1)]));
        forms.extend((2..m).map(|v| LinearForm::var(lam(v))));
        upper = lam(0);
    } else if i < m {
        let k = i - 1;
        forms.extend((0..k - 1).map(|v| LinearForm::var(lam(v))));
        forms.push(LinearForm(vec![(lam(k - 1), 1), (lam(k), 1), (t, -1)]));
        forms.push(LinearForm(vec![(t, 1), (lam(k + 1), 1)]));
        forms.extend((k + 2..m).map(|v| LinearForm::var(lam(v))));
        upper = lam(k);
    } else {
        forms.extend((0..m - 2).map(|v| LinearForm::var(lam(v))));
        let mut merged = vec![(lam(m - 2), 1), (lam(m - 1), 1)];
        if family == Family::A {
            merged.push((t, -1));
        }
        forms.push(LinearForm(merged));
        upper = lam(m - 1);
    }
    if order == SliceOrder::Last {
        forms.reverse();
    }
    (forms, upper)
}

/// `(∏ c_i!) · [λ^c] f`, which must be a nonnegative integer.
pub fn extract_mixed_eulerian(f: &MvPoly, c: &Composition) -> Result<BigUint> {
    let n = c.len();
    if f.nvars() != n {
        return Err(Error::DimensionMismatch {
            expected: f.nvars(),
            found: n,
        });
    }
    match f.homogeneous_degree() {
        Some(d) if d as usize == n => {}
        Some(d) => {
            return Err(Error::Extraction(format!(
                "polynomial has degree {d}, composition needs {n}"
            )))
        }
        None if f.is_zero() => {}
        None => return Err(Error::Extraction("polynomial is not homogeneous".into())),
    }
    let exps: Vec<u32> = c.parts().iter().map(|&p| p as u32).collect();
    let scale: BigUint = c.parts().iter().map(|&p| factorial(p)).product();
    let value = f.coefficient(&exps) * Rational::from_integer(scale.into());
    if !value.is_integer() || value.is_negative() {
        return Err(Error::Extraction(format!(
            "coefficient of {c} scales to {value}, not a nonnegative integer"
        )));
    }
    Ok(value
        .to_integer()
        .to_biguint()
        .unwrap_or_else(BigUint::zero))
}
