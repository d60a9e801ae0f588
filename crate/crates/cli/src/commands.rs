use std::fmt::Write as _;
use std::io::{self, Write};

use mixed_eulerian::engine::enumerate_with_limit;
use mixed_eulerian::identities::{run_suite_with_limit, Suite, VERIFY_MAX_N};
use mixed_eulerian::oracle::{format_rational, parse_rational, volume_poly_with_limit};
use mixed_eulerian::{
    engine, extract_mixed_eulerian, Composition, Division, Element, Error, Family, MemoTable,
};
use num_bigint::BigUint;
use serde::Serialize;

use crate::{Format, Method};

pub const ENUMERATION_MAX_N: usize = 8;
pub const ORACLE_MAX_N: usize = 8;
pub const RECURSION_MAX_N: usize = 12;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Limit(String),
    Disagreement,
    VerificationFailed,
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::VerificationFailed => 1,
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Limit(_) => 3,
            CliError::Disagreement => 4,
        }
    }

    /// What to print on stderr, if anything.
    pub fn message(&self) -> Option<String> {
        match self {
            CliError::Input(m) | CliError::Limit(m) => Some(m.clone()),
            CliError::Io(e) => Some(e.to_string()),
            CliError::Disagreement | CliError::VerificationFailed => None,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::LimitExceeded { .. } => CliError::Limit(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> CliError {
        CliError::Io(e)
    }
}

pub struct Limits {
    global: Option<usize>,
}

impl Limits {
    pub fn new(global: Option<usize>) -> Limits {
        Limits { global }
    }

    fn cap(&self, default: usize) -> usize {
        self.global.unwrap_or(default)
    }

    fn check(&self, what: &str, n: usize, default: usize) -> Result<(), CliError> {
        let limit = self.cap(default);
        if n > limit {
            return Err(Error::LimitExceeded {
                what: format!("{what} size n = {n}"),
                limit,
            }
            .into());
        }
        Ok(())
    }
}

fn parse_composition(s: &str) -> Result<Composition, CliError> {
    Ok(s.parse()?)
}

fn by_enumeration(limits: &Limits, c: &Composition, family: Family) -> Result<BigUint, CliError> {
    let n = c.len();
    limits.check("enumeration", n, ENUMERATION_MAX_N)?;
    let found = BigUint::from(engine::count(&Division::from_composition(c), family));
    Ok(match family {
        Family::A => found,
        Family::B => found << n,
    })
}

fn by_oracle(limits: &Limits, c: &Composition, family: Family) -> Result<BigUint, CliError> {
    limits.check("oracle", c.len(), ORACLE_MAX_N)?;
    let f = volume_poly_with_limit(c.len(), family, limits.cap(ORACLE_MAX_N))?;
    Ok(extract_mixed_eulerian(&f, c)?)
}

fn by_recursion(limits: &Limits, c: &Composition, family: Family) -> Result<BigUint, CliError> {
    limits.check("recursion", c.len(), RECURSION_MAX_N)?;
    Ok(mixed_eulerian::mixed_eulerian(c, family))
}

pub fn compute(
    out: &mut dyn Write,
    limits: &Limits,
    family: Family,
    composition: &str,
    method: Method,
) -> Result<(), CliError> {
    let c = parse_composition(composition)?;
    let value = match method {
        Method::Recursion => by_recursion(limits, &c, family)?,
        Method::Enumeration => by_enumeration(limits, &c, family)?,
        Method::Oracle => by_oracle(limits, &c, family)?,
        Method::All => {
            let values = [
                by_recursion(limits, &c, family)?,
                by_enumeration(limits, &c, family)?,
                by_oracle(limits, &c, family)?,
            ];
            let agree = values.iter().all(|v| v == &values[0]);
            let listed = values
                .iter()
                .map(BigUint::to_string)
                .collect::<Vec<_>>()
                .join(",");
            writeln!(out, "{listed} {}", if agree { "agree" } else { "disagree" })?;
            return if agree {
                Ok(())
            } else {
                Err(CliError::Disagreement)
            };
        }
    };
    writeln!(out, "{value}")?;
    Ok(())
}

/// `division` with `marked` shown as `[s]`.
fn render_marked(division: &Division, marked: Element) -> String {
    let mut s = String::new();
    for (i, block) in division.blocks().iter().enumerate() {
        if i > 0 {
            s.push('|');
        }
        if block.is_empty() {
            s.push('-');
        }
        for (k, &x) in block.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            if x == marked {
                let _ = write!(s, "[{x}]");
            } else {
                let _ = write!(s, "{x}");
            }
        }
    }
    s
}

pub fn enumerate(
    out: &mut dyn Write,
    limits: &Limits,
    family: Family,
    division: Option<&str>,
    composition: Option<&str>,
    limit: usize,
    trace: bool,
) -> Result<(), CliError> {
    let division: Division = match (division, composition) {
        (Some(d), _) => d.parse()?,
        (None, Some(c)) => Division::from_composition(&parse_composition(c)?),
        (None, None) => return Err(CliError::Input("give --division or --c".into())),
    };
    limits.check("enumeration", division.len(), ENUMERATION_MAX_N)?;
    for w in enumerate_with_limit(&division, family, limit)? {
        writeln!(out, "{w}")?;
        if trace {
            let mut current = division.clone();
            for &s in w.as_slice() {
                writeln!(out, "  {}", render_marked(&current, s))?;
                current = current.delete(family, s)?;
            }
        }
    }
    Ok(())
}

pub fn verify(
    out: &mut dyn Write,
    limits: &Limits,
    n: usize,
    suite: Suite,
    timing: bool,
) -> Result<(), CliError> {
    limits.check("verification", n, VERIFY_MAX_N)?;
    let report = run_suite_with_limit(suite, n, limits.cap(VERIFY_MAX_N))?;
    let json = serde_json::to_string_pretty(&report.to_json(timing))
        .map_err(|e| CliError::Input(e.to_string()))?;
    writeln!(out, "{json}")?;
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::VerificationFailed)
    }
}

#[derive(Serialize)]
struct Row<'a> {
    c: &'a Composition,
    value: String,
}

pub fn table(
    out: &mut dyn Write,
    limits: &Limits,
    family: Family,
    n: usize,
    format: Format,
) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Input("n must be at least 1".into()));
    }
    limits.check("table", n, RECURSION_MAX_N)?;
    let rows = MemoTable::new(family).table(n);
    match format {
        Format::Json => {
            // one row per line
            writeln!(out, "[")?;
            for (i, (c, v)) in rows.iter().enumerate() {
                let row = serde_json::to_string(&Row {
                    c,
                    value: v.to_string(),
                })
                .map_err(|e| CliError::Input(e.to_string()))?;
                writeln!(out, "  {row}{}", if i + 1 < rows.len() { "," } else { "" })?;
            }
            writeln!(out, "]")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header: Vec<String> = (1..=n).map(|i| format!("c{i}")).collect();
            header.push("value".into());
            w.write_record(&header).map_err(csv_error)?;
            for (c, v) in &rows {
                let mut record: Vec<String> = c.parts().iter().map(usize::to_string).collect();
                record.push(v.to_string());
                w.write_record(&record).map_err(csv_error)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn csv_error(e: csv::Error) -> CliError {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => CliError::Io(e),
        other => CliError::Input(format!("{other:?}")),
    }
}

pub fn oracle(
    out: &mut dyn Write,
    limits: &Limits,
    family: Family,
    n: usize,
    eval: Option<&str>,
) -> Result<(), CliError> {
    limits.check("oracle", n, ORACLE_MAX_N)?;
    let f = volume_poly_with_limit(n, family, limits.cap(ORACLE_MAX_N))?;
    match eval {
        None => write!(out, "{}", f.dump())?,
        Some(point) => {
            let lambda = point
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>, _>>()?;
            writeln!(out, "{}", format_rational(&f.evaluate(&lambda)?))?;
        }
    }
    Ok(())
}
