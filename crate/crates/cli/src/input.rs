//! Parsing for range arguments and filtration files.

use std::fs;
use std::path::Path;

use normcone::hilbert::{Assumptions, FiltrationProfile};
use normcone::report::ExactInt;
use num_bigint::BigInt;
use serde::Deserialize;

/// Inclusive `lo..hi`, `lo..=hi`, `..hi`, `lo..` or a single value. Open ends
/// become `0` and `u64::MAX`.
pub fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let num = |t: &str, default: u64| -> Result<u64, String> {
        let t = t.trim();
        if t.is_empty() {
            Ok(default)
        } else {
            t.parse().map_err(|_| format!("`{t}` is not a non-negative integer"))
        }
    };
    match s.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            Ok((num(lo, 0)?, num(hi, u64::MAX)?))
        }
        None => {
            let v = num(s, 0)?;
            Ok((v, v))
        }
    }
}

#[derive(Deserialize)]
struct FlagsIn {
    #[serde(default, alias = "ambient")]
    ambient_gorenstein: bool,
    #[serde(default, alias = "cm")]
    assoc_graded_cm: bool,
    #[serde(default, alias = "depth")]
    depth_at_least_d_minus_1: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileIn {
    dim: Option<u32>,
    #[serde(rename = "H", alias = "lengths")]
    lengths: Vec<ExactInt>,
    flags: Option<FlagsIn>,
}

fn from_json(text: &str) -> Result<(Option<u32>, Vec<BigInt>, Assumptions), String> {
    let p: ProfileIn = serde_json::from_str(text).map_err(|e| format!("malformed JSON: {e}"))?;
    let flags = p.flags.map_or(Assumptions::default(), |f| Assumptions {
        ambient_gorenstein: f.ambient_gorenstein,
        assoc_graded_cm: f.assoc_graded_cm,
        depth_at_least_d_minus_1: f.depth_at_least_d_minus_1,
    });
    Ok((p.dim, p.lengths.into_iter().map(|x| x.0).collect(), flags))
}

fn from_csv(text: &str) -> Result<Vec<BigInt>, String> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut lengths = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| format!("malformed CSV: {e}"))?;
        if record.len() != 2 {
            return Err(format!("CSV row {} has {} fields, expected `n,H`", line + 1, record.len()));
        }
        let (n, h) = (&record[0], &record[1]);
        // optional header row
        if line == 0 && n.parse::<u64>().is_err() {
            continue;
        }
        let n: usize = n.parse().map_err(|_| format!("CSV row {}: `{n}` is not an index", line + 1))?;
        if n != lengths.len() {
            return Err(format!("CSV rows must list n = 0, 1, 2, ... in order; got n = {n} at position {}", lengths.len()));
        }
        let h: BigInt = h.parse().map_err(|_| format!("CSV row {}: `{h}` is not an integer", line + 1))?;
        lengths.push(h);
    }
    Ok(lengths)
}

/// Reads a JSON object or CSV table. Switches on the command line are OR-ed
/// into any flags in the file; `--dim` overrides the file's dimension.
pub fn read_profile(
    path: &Path,
    dim: Option<u32>,
    switches: Assumptions,
    max_n: Option<usize>,
) -> Result<FiltrationProfile, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let (file_dim, mut lengths, file_flags) = if text.trim_start().starts_with('{') {
        from_json(&text)?
    } else {
        (None, from_csv(&text)?, Assumptions::default())
    };
    let dim = dim
        .or(file_dim)
        .ok_or_else(|| "dimension missing: pass --dim or put `dim` in the JSON".to_string())?;
    if let Some(n) = max_n {
        if n + 1 > lengths.len() {
            return Err(format!("--max-n {n} exceeds the table, which stops at n = {}", lengths.len().saturating_sub(1)));
        }
        lengths.truncate(n + 1);
    }
    let flags = Assumptions {
        ambient_gorenstein: switches.ambient_gorenstein || file_flags.ambient_gorenstein,
        assoc_graded_cm: switches.assoc_graded_cm || file_flags.assoc_graded_cm,
        depth_at_least_d_minus_1: switches.depth_at_least_d_minus_1 || file_flags.depth_at_least_d_minus_1,
    };
    FiltrationProfile::new(dim, lengths, flags).map_err(|e| e.to_string())
}
