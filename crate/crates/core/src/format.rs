//! The automaton document format.
//!
//! A JSON object with the fields `alphabet`, `states`, `initial`, `final` and
//! `transitions`. Every number is a string in rational form (`"-3/7"`), so
//! values cross the boundary exactly:
//!
//! ```json
//! {
//!   "alphabet": ["a"],
//!   "states": 1,
//!   "initial": ["1"],
//!   "final": ["1"],
//!   "transitions": {
//!     "a": [
//!       ["2"]
//!     ]
//!   }
//! }
//! ```
//!
//! [`print_automaton`] writes the canonical form: fixed field order, sorted
//! alphabet, normalized rationals, one matrix row per line.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Deserialize;

use crate::automaton::{Alphabet, Symbol, WeightedAutomaton};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::parse_rational;
use crate::Rational;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct AutomatonDocument {
    alphabet: Vec<String>,
    states: usize,
    initial: Vec<String>,
    #[serde(rename = "final")]
    final_weights: Vec<String>,
    transitions: BTreeMap<String, Vec<Vec<String>>>,
}

fn field_error(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

fn rational_at(text: &str, location: impl FnOnce() -> String) -> Result<Rational> {
    parse_rational(text).map_err(|_| field_error(location(), format!("malformed rational {text:?}")))
}

fn vector(field: &str, entries: &[String], n: usize) -> Result<Vec<Rational>> {
    if entries.len() != n {
        return Err(field_error(
            field,
            format!("expected {n} entries (states), found {}", entries.len()),
        ));
    }
    entries
        .iter()
        .enumerate()
        .map(|(i, s)| rational_at(s, || format!("{field}[{i}]")))
        .collect()
}

/// Parses and validates an automaton document.
pub fn parse_automaton(text: &str) -> Result<WeightedAutomaton<Rational>> {
    let doc: AutomatonDocument = serde_json::from_str(text).map_err(|e| {
        field_error(
            format!("line {}, column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    let n = doc.states;

    let mut symbols = Vec::with_capacity(doc.alphabet.len());
    for (i, tok) in doc.alphabet.iter().enumerate() {
        let s = Symbol::new(tok.as_str())
            .map_err(|e| field_error(format!("alphabet[{i}]"), e.to_string()))?;
        symbols.push(s);
    }
    let alphabet = Alphabet::new(symbols).map_err(|e| field_error("alphabet", e.to_string()))?;

    let initial = vector("initial", &doc.initial, n)?;
    let final_weights = vector("final", &doc.final_weights, n)?;

    for key in doc.transitions.keys() {
        if alphabet.index_of(key).is_none() {
            return Err(field_error(
                format!("transitions.{key}"),
                format!("unknown transition symbol `{key}`"),
            ));
        }
    }
    let mut transitions = Vec::with_capacity(alphabet.len());
    for a in alphabet.symbols() {
        let loc = format!("transitions.{a}");
        let grid = doc
            .transitions
            .get(a.as_str())
            .ok_or_else(|| field_error(&loc, format!("missing transition matrix for `{a}`")))?;
        if grid.len() != n {
            return Err(field_error(&loc, format!("expected {n} rows, found {}", grid.len())));
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in grid.iter().enumerate() {
            if row.len() != n {
                return Err(field_error(
                    format!("{loc}[{i}]"),
                    format!("expected {n} columns, found {}", row.len()),
                ));
            }
            for (j, s) in row.iter().enumerate() {
                data.push(rational_at(s, || format!("{loc}[{i}][{j}]"))?);
            }
        }
        transitions.push(Matrix::new(n, n, data)?);
    }
    WeightedAutomaton::from_parts(alphabet, transitions, initial, final_weights)
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn string_list<'a>(items: impl Iterator<Item = String> + 'a) -> String {
    let items: Vec<String> = items.map(|s| json_str(&s)).collect();
    format!("[{}]", items.join(", "))
}

/// Canonical text of an automaton document, ending with a newline.
pub fn print_automaton(a: &WeightedAutomaton<Rational>) -> String {
    let mut out = String::new();
    let n = a.states();
    out.push_str("{\n");
    let _ = writeln!(
        out,
        "  \"alphabet\": {},",
        string_list(a.alphabet().symbols().iter().map(|s| s.to_string()))
    );
    let _ = writeln!(out, "  \"states\": {n},");
    let _ = writeln!(out, "  \"initial\": {},", string_list(a.initial().iter().map(|x| x.to_string())));
    let _ = writeln!(out, "  \"final\": {},", string_list(a.final_weights().iter().map(|x| x.to_string())));
    if a.alphabet().is_empty() {
        out.push_str("  \"transitions\": {}\n}\n");
        return out;
    }
    out.push_str("  \"transitions\": {\n");
    let letters: Vec<_> = a.letters().collect();
    for (k, (sym, m)) in letters.iter().enumerate() {
        let _ = write!(out, "    {}: ", json_str(sym.as_str()));
        if n == 0 {
            out.push_str("[]");
        } else {
            out.push_str("[\n");
            for i in 0..n {
                let sep = if i + 1 < n { "," } else { "" };
                let _ = writeln!(
                    out,
                    "      {}{sep}",
                    string_list(m.row(i).iter().map(|x| x.to_string()))
                );
            }
            out.push_str("    ]");
        }
        out.push_str(if k + 1 < letters.len() { ",\n" } else { "\n" });
    }
    out.push_str("  }\n}\n");
    out
}
