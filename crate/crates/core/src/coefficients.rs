//! Exact coefficient tables for R, k, d, H and the system f, g, h.
//!
//! The tables live in `data/polynomials.txt` and are the single source used
//! both by the evaluators in [`crate::characterization`] and by the
//! polynomial identity checks in [`crate::symbolic`]. Format: a `[name]`
//! header per polynomial, then one `e_u e_v e_w e_r e_s : p/q` line per
//! term. `#` starts a comment.

use std::sync::OnceLock;

use crate::field::{parse_rational, Rational};
use crate::{Error, Result};

pub const SOURCE: &str = include_str!("../data/polynomials.txt");

/// Exponents of `(u, v, w, r, s)`.
pub type Exponents = [u32; 5];

#[derive(Clone, Debug, PartialEq)]
pub struct PolyTable {
    pub name: String,
    pub terms: Vec<(Exponents, Rational)>,
}

pub fn parse_tables(text: &str) -> Result<Vec<PolyTable>> {
    let mut tables: Vec<PolyTable> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            tables.push(PolyTable { name: name.trim().to_string(), terms: Vec::new() });
            continue;
        }
        let table = tables.last_mut().ok_or_else(|| err("term before any [section]"))?;
        let (exps, coeff) = line.split_once(':').ok_or_else(|| err("expected ':'"))?;
        let exps: Vec<u32> = exps
            .split_whitespace()
            .map(|e| e.parse().map_err(|_| err("bad exponent")))
            .collect::<Result<_>>()?;
        let exps: Exponents = exps.try_into().map_err(|_| err("expected five exponents"))?;
        table.terms.push((exps, parse_rational(coeff)?));
    }
    Ok(tables)
}

/// The embedded tables, parsed once.
pub fn tables() -> &'static [PolyTable] {
    static TABLES: OnceLock<Vec<PolyTable>> = OnceLock::new();
    TABLES.get_or_init(|| parse_tables(SOURCE).expect("embedded coefficient tables are well formed"))
}

/// Embedded table by name (`"R"`, `"k"`, `"d"`, `"H"`, `"f"`, `"g"`, `"h"`).
pub fn table(name: &str) -> &'static PolyTable {
    tables()
        .iter()
        .find(|t| t.name == name)
        .unwrap_or_else(|| panic!("no coefficient table named {name}"))
}
