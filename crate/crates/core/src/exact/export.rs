//! CSV and JSON export of coefficient tables.
//!
//! CSV: header `N,k,numerator,denominator`, one row per non-zero entry.
//! JSON: an array of `{"n", "k", "num", "den"}` objects with decimal-string integers.

use rug::{Integer, Rational};
use serde::{Deserialize, Serialize};

use super::tables::{CoeffTable, TableKind};
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
struct JsonEntry {
    n: u32,
    k: u32,
    num: String,
    den: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct CsvEntry {
    #[serde(rename = "N")]
    n: u32,
    k: u32,
    numerator: String,
    denominator: String,
}

pub fn to_csv(t: &CoeffTable) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for (n, k, v) in t.entries() {
        w.serialize(CsvEntry {
            n,
            k,
            numerator: v.numer().to_string(),
            denominator: v.denom().to_string(),
        })
        .expect("in-memory csv write");
    }
    if t.is_empty() {
        w.write_record(["N", "k", "numerator", "denominator"]).expect("in-memory csv write");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
}

pub fn to_json(t: &CoeffTable) -> String {
    let rows: Vec<JsonEntry> = t
        .entries()
        .map(|(n, k, v)| JsonEntry {
            n,
            k,
            num: v.numer().to_string(),
            den: v.denom().to_string(),
        })
        .collect();
    serde_json::to_string_pretty(&rows).expect("table json")
}

fn parse_int(s: &str) -> Result<Integer> {
    s.trim()
        .parse::<Integer>()
        .map_err(|e| Error::Io(format!("bad integer `{s}`: {e}")))
}

/// Parses the CSV produced by [`to_csv`] back into a table.
pub fn from_csv(kind: TableKind, text: &str) -> Result<CoeffTable> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let mut t = CoeffTable::new(kind, 0);
    for rec in r.deserialize::<CsvEntry>() {
        let e = rec.map_err(|e| Error::Io(e.to_string()))?;
        let den = parse_int(&e.denominator)?;
        if den == 0 {
            return Err(Error::Io("zero denominator".into()));
        }
        t.set(e.n, e.k, Rational::from((parse_int(&e.numerator)?, den)));
        t.max_row = t.max_row.max(e.n);
    }
    Ok(t)
}

/// Parses the JSON produced by [`to_json`] back into a table.
pub fn from_json(kind: TableKind, text: &str) -> Result<CoeffTable> {
    let rows: Vec<JsonEntry> = serde_json::from_str(text).map_err(|e| Error::Io(e.to_string()))?;
    let mut t = CoeffTable::new(kind, 0);
    for e in rows {
        t.set(e.n, e.k, Rational::from((parse_int(&e.num)?, parse_int(&e.den)?)));
        t.max_row = t.max_row.max(e.n);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::tables::{g_table, normalized_matrices};

    #[test]
    fn csv_round_trip() {
        let y = normalized_matrices(10).unwrap().y;
        let text = to_csv(&y);
        assert!(text.starts_with("N,k,numerator,denominator\n"));
        assert_eq!(from_csv(TableKind::Y, &text).unwrap(), y);
    }

    #[test]
    fn json_round_trip() {
        let g = g_table(6).unwrap();
        let text = to_json(&g);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!(v.as_array().unwrap()[0]["num"].is_string());
        assert_eq!(from_json(TableKind::G, &text).unwrap(), g);
    }
}
