use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

pub type Rational = BigRational;

/// A sparse polynomial with exact rational coefficients, keyed by exponent
/// vectors. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MvPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

/// `Σ coefficient · x_var`, with small integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm(pub Vec<(usize, i64)>);

impl LinearForm {
    pub fn var(i: usize) -> LinearForm {
        LinearForm(vec![(i, 1)])
    }
}

impl MvPoly {
    pub fn zero(nvars: usize) -> MvPoly {
        MvPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> MvPoly {
        let mut p = MvPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn variable(nvars: usize, i: usize) -> MvPoly {
        assert!(i < nvars, "variable {i} out of range for {nvars} variables");
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = MvPoly::zero(nvars);
        p.add_term(exps, Rational::one());
        p
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> MvPoly {
        let mut p = MvPoly::zero(nvars);
        for (exps, c) in terms {
            p.add_term(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &MvPoly) {
        assert_eq!(self.nvars, other.nvars);
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn scale(&self, k: &Rational) -> MvPoly {
        if k.is_zero() {
            return MvPoly::zero(self.nvars);
        }
        MvPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &MvPoly) -> MvPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut acc: HashMap<Vec<u32>, Rational> = HashMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        MvPoly::from_terms(self.nvars, acc)
    }

    /// The common total degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    term *= num_traits::pow(x.clone(), k as usize);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Replaces variable `j` by `forms[j]`, a linear form over `target_nvars`
    /// variables, and expands.
    pub fn substitute(&self, forms: &[LinearForm], target_nvars: usize) -> MvPoly {
        assert_eq!(forms.len(), self.nvars, "one form per variable");
        let form_polys: Vec<MvPoly> = forms
            .iter()
            .map(|f| {
                MvPoly::from_terms(
                    target_nvars,
                    f.0.iter().map(|&(v, k)| {
                        let mut e = vec![0; target_nvars];
                        e[v] = 1;
                        (e, Rational::from_integer(BigInt::from(k)))
                    }),
                )
            })
            .collect();
        let mut powers: Vec<Vec<MvPoly>> = form_polys
            .iter()
            .map(|_| vec![MvPoly::constant(target_nvars, Rational::one())])
            .collect();

        let mut result = MvPoly::zero(target_nvars);
        for (e, c) in &self.terms {
            let mut term = MvPoly::constant(target_nvars, c.clone());
            for (j, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[j].len() <= k as usize {
                    let next = powers[j].last().unwrap().mul(&form_polys[j]);
                    powers[j].push(next);
                }
                term = term.mul(&powers[j][k as usize]);
            }
            result.add_assign(&term);
        }
        result
    }

    /// `∫_0^{x_upper} p dx_var`, with `x_var` then dropped from the variable
    /// list.
    pub fn integrate(&self, var: usize, upper: usize) -> MvPoly {
        assert!(var < self.nvars && upper < self.nvars && var != upper);
        let upper_after = if upper > var { upper - 1 } else { upper };
        let mut out = MvPoly::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            let a = e[var];
            let mut exps = e.clone();
            exps.remove(var);
            exps[upper_after] += a + 1;
            out.add_term(exps, c / Rational::from_integer(BigInt::from(a + 1)));
        }
        out
    }

    /// The same polynomial with variable order reversed.
    pub fn reverse_variables(&self) -> MvPoly {
        MvPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().rev().copied().collect(), c.clone()))
                .collect(),
        }
    }

    /// One line `e1,…,en : num/den` per term, exponent vectors in decreasing
    /// lexicographic order (leading term first).
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let exps: Vec<String> = e.iter().map(u32::to_string).collect();
            let _ = writeln!(out, "{} : {}/{}", exps.join(","), c.numer(), c.denom());
        }
        out
    }
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `num/den` with the denominator always written.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let x = MvPoly::variable(2, 0);
        let y = MvPoly::variable(2, 1);
        let mut s = x.clone();
        s.add_assign(&y);
        let sq = s.mul(&s);
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coefficient(&[1, 1]), rational(2, 1));
        assert_eq!(sq.homogeneous_degree(), Some(2));
        let mut cancel = x.clone();
        cancel.add_assign(&x.scale(&rational(-1, 1)));
        assert!(cancel.is_zero());
        assert_eq!(
            sq.evaluate(&[rational(1, 2), rational(1, 3)]).unwrap(),
            rational(25, 36)
        );
        assert!(sq.evaluate(&[rational(1, 1)]).is_err());
    }

    #[test]
    fn substitution_and_integration() {
        // p(u) = u^2 with u = t + y over (y, t); ∫_0^y (t + y)^2 dt = 7/3 y^3
        let p = MvPoly::variable(1, 0).mul(&MvPoly::variable(1, 0));
        let sub = p.substitute(&[LinearForm(vec![(1, 1), (0, 1)])], 2);
        assert_eq!(sub.len(), 3);
        let integral = sub.integrate(1, 0);
        assert_eq!(integral.nvars(), 1);
        assert_eq!(integral.len(), 1);
        assert_eq!(integral.coefficient(&[3]), rational(7, 3));
    }

    #[test]
    fn dump_format() {
        let p = MvPoly::from_terms(
            2,
            [
                (vec![2, 0], rational(1, 2)),
                (vec![1, 1], rational(2, 1)),
                (vec![0, 2], rational(1, 2)),
            ],
        );
        assert_eq!(p.dump(), "2,0 : 1/2\n1,1 : 2/1\n0,2 : 1/2\n");
        assert_eq!(format_rational(&rational(6, 3)), "2/1");
        assert_eq!(parse_rational("-3/6").unwrap(), rational(-1, 2));
        assert!(parse_rational("1/x").is_err());
    }
}
