//! File formats: JSON seed files, JSON/CSV value listings, and the
//! b-file format (`n value` per line, ascending contiguous indices).
//!
//! Rationals travel as strings `p/q` (bare `p` for integers) in every
//! format; decimals never appear.

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rational::{parse_rat, Rat};
use crate::sequence::CoefficientSequence;

/// A parsed seed file.
///
/// * x-side restricted: JSON array of rational strings, index 1 first
///   (`x_0 = 1` implied) — `SeedFile { m: None, values }`.
/// * x-side associated: object `{"m": m, "values": [...]}` with values
///   starting at index `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedFile {
    pub m: Option<usize>,
    pub values: Vec<Rat>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawSeedFile {
    Tail(Vec<String>),
    Object { m: usize, values: Vec<String> },
}

pub fn parse_seed_file(text: &str) -> Result<SeedFile, Error> {
    let raw: RawSeedFile =
        serde_json::from_str(text).map_err(|e| Error::SeedFile(e.to_string()))?;
    let (m, strings) = match raw {
        RawSeedFile::Tail(values) => (None, values),
        RawSeedFile::Object { m, values } => {
            if m == 0 {
                return Err(Error::SeedFile("associated seed requires m >= 1".into()));
            }
            (Some(m), values)
        }
    };
    let values = strings
        .iter()
        .map(|s| parse_rat(s))
        .collect::<Result<Vec<_>, _>>()?;
    if values.is_empty() {
        return Err(Error::SeedFile("seed file holds no values".into()));
    }
    Ok(SeedFile { m, values })
}

impl SeedFile {
    /// The seed as a sequence over `0..=max(n_max, last index)`.
    pub fn to_sequence(&self, n_max: usize) -> Result<CoefficientSequence, Error> {
        let mut seq = match self.m {
            None => CoefficientSequence::from_tail(self.values.clone()),
            Some(m) => CoefficientSequence::from_support(m, self.values.clone())?,
        };
        if seq.max_index() < n_max {
            let mut padded = seq.values().to_vec();
            padded.resize(n_max + 1, Rat::zero());
            seq = CoefficientSequence::new(padded)?;
        }
        Ok(seq)
    }
}

/// Renders values at indices 1.. as a seed-file JSON array (`x_0` implied).
pub fn render_seed_json(tail: &[Rat]) -> String {
    let strings: Vec<String> = tail.iter().map(|v| v.to_string()).collect();
    serde_json::to_string(&strings).expect("strings serialize")
}

/// A full sequence, index 0 first, as a JSON array of rational strings.
/// This is the z-side wire format: `transform --direction forward` emits
/// it and `--direction invert` consumes it, so `z_0` travels explicitly
/// and an invalid head is detectable.
pub fn render_sequence_json(seq: &CoefficientSequence) -> String {
    let strings: Vec<String> = seq.iter().map(|v| v.to_string()).collect();
    serde_json::to_string(&strings).expect("strings serialize")
}

pub fn parse_sequence_json(text: &str) -> Result<Vec<Rat>, Error> {
    let strings: Vec<String> =
        serde_json::from_str(text).map_err(|e| Error::SeedFile(e.to_string()))?;
    strings.iter().map(|s| parse_rat(s)).collect()
}

/// One output row of a compute command.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct IndexedValue {
    pub n: usize,
    pub value: String,
}

pub fn rows_from(values: &[(usize, Rat)]) -> Vec<IndexedValue> {
    values
        .iter()
        .map(|(n, v)| IndexedValue { n: *n, value: v.to_string() })
        .collect()
}

pub fn render_rows_json(rows: &[IndexedValue]) -> String {
    serde_json::to_string_pretty(rows).expect("rows serialize")
}

pub fn render_rows_csv(rows: &[IndexedValue]) -> String {
    let mut out = String::from("n,value\n");
    for row in rows {
        out.push_str(&format!("{},{}\n", row.n, row.value));
    }
    out
}

/// b-file rendering: `n value` lines, ascending contiguous `n`. Errors
/// unless every value is an integer; fractions belong in JSON.
pub fn render_bfile(values: &[(usize, Rat)]) -> Result<String, Error> {
    let mut out = String::new();
    for (n, v) in values {
        if !v.is_integer() {
            return Err(Error::NonIntegerOutput(format!(
                "b-file output requires integers, but index {n} holds {v}; use --format json"
            )));
        }
        out.push_str(&format!("{} {}\n", n, v));
    }
    Ok(out)
}

pub fn parse_bfile(text: &str) -> Result<Vec<(usize, Rat)>, Error> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (n_str, v_str) = line
            .split_once(' ')
            .ok_or_else(|| Error::SeedFile(format!("bad b-file line `{line}`")))?;
        let n: usize = n_str
            .parse()
            .map_err(|_| Error::SeedFile(format!("bad b-file index `{n_str}`")))?;
        out.push((n, parse_rat(v_str)?));
    }
    if let Some(first) = out.first() {
        let start = first.0;
        for (offset, (n, _)) in out.iter().enumerate() {
            if *n != start + offset {
                return Err(Error::SeedFile(format!(
                    "b-file indices must ascend contiguously; found {n} after {}",
                    start + offset - 1
                )));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn seed_file_forms() {
        let tail = parse_seed_file(r#"["1", "1"]"#).unwrap();
        assert_eq!(tail.m, None);
        assert_eq!(tail.values, vec![rat_int(1), rat_int(1)]);

        let assoc = parse_seed_file(r#"{"m": 2, "values": ["3", "-1/2"]}"#).unwrap();
        assert_eq!(assoc.m, Some(2));
        let seq = assoc.to_sequence(5).unwrap();
        assert_eq!(seq.get(2).unwrap(), &rat_int(3));
        assert_eq!(seq.get(3).unwrap(), &rat(-1, 2));
        assert!(seq.get(4).unwrap().is_zero());

        assert!(parse_seed_file("[]").is_err());
        assert!(parse_seed_file(r#"{"m": 0, "values": ["1"]}"#).is_err());
        assert!(parse_seed_file(r#"["1/0"]"#).is_err());
    }

    #[test]
    fn sequence_json_round_trip() {
        let seq = CoefficientSequence::from_tail(vec![rat(1, 2), rat_int(-3)]);
        let json = render_sequence_json(&seq);
        assert_eq!(json, r#"["1","1/2","-3"]"#);
        assert_eq!(parse_sequence_json(&json).unwrap(), seq.values().to_vec());
    }

    #[test]
    fn bfile_round_trip_and_integer_guard() {
        let vals = vec![(3usize, rat_int(5)), (4, rat_int(-8)), (5, rat_int(13))];
        let text = render_bfile(&vals).unwrap();
        assert_eq!(text, "3 5\n4 -8\n5 13\n");
        assert_eq!(parse_bfile(&text).unwrap(), vals);

        let bad = vec![(0usize, rat(1, 2))];
        assert!(render_bfile(&bad).is_err());
        assert!(parse_bfile("1 1\n3 2\n").is_err());
    }

    #[test]
    fn csv_rows() {
        let rows = rows_from(&[(0, rat_int(1)), (1, rat(-1, 2))]);
        assert_eq!(render_rows_csv(&rows), "n,value\n0,1\n1,-1/2\n");
    }
}
