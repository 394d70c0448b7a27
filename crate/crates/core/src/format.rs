//! JSON file formats (all carry `"format": 1`).
//!
//! Invariant:
//! ```json
//! {"format": 1, "n": 3, "r": 3, "entries": [["1,2,3", "3,2,1", "5"]]}
//! ```
//! Coefficients:
//! ```json
//! {"format": 1, "side": "schur", "n": 3, "r": 3, "coefficients": {"3,2,1": "1"}}
//! ```
//! Multi-indices and permutations are 1-based comma separated strings.
//! Scalars are written as `"p/q"` or integer strings; integer JSON numbers
//! are accepted on input.

use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::basis::Side;
use crate::error::{invalid, Error, Result};
use crate::maps::MultiIndex;
use crate::perm::Permutation;
use crate::solver::{CoefficientVector, Invariant, Scalar};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct InvariantFile {
    format: u32,
    n: usize,
    r: usize,
    entries: Vec<(String, String, Value)>,
}

#[derive(Serialize, Deserialize)]
struct CoefficientFile {
    format: u32,
    side: Side,
    n: usize,
    r: usize,
    coefficients: Map<String, Value>,
}

fn json_err(e: serde_json::Error) -> Error {
    Error::InvalidInput(format!("malformed JSON: {e}"))
}

fn check_version(format: u32) -> Result<()> {
    if format != FORMAT_VERSION {
        return invalid(format!("unsupported format version {format}, expected {FORMAT_VERSION}"));
    }
    Ok(())
}

pub fn parse_scalar(value: &Value) -> Result<Scalar> {
    match value {
        Value::String(s) => Scalar::from_str(s.trim())
            .map_err(|e| Error::InvalidInput(format!("bad rational {s:?}: {e}"))),
        Value::Number(num) => match num.as_i64() {
            Some(v) => Ok(Scalar::from_integer(v.into())),
            None => invalid(format!("non-integer number {num}; write rationals as \"p/q\"")),
        },
        other => invalid(format!("expected a rational, found {other}")),
    }
}

pub fn invariant_to_json(x: &Invariant) -> Result<String> {
    let entries = x
        .entries()?
        .into_iter()
        .map(|(i, j, v)| (i.to_string(), j.to_string(), Value::String(v.to_string())))
        .collect();
    let file = InvariantFile {
        format: FORMAT_VERSION,
        n: x.n,
        r: x.r,
        entries,
    };
    serde_json::to_string_pretty(&file).map_err(json_err)
}

/// Parses an invariant. Repeated coordinates are summed.
pub fn invariant_from_json(text: &str) -> Result<Invariant> {
    let file: InvariantFile = serde_json::from_str(text).map_err(json_err)?;
    check_version(file.format)?;
    if file.n == 0 {
        return invalid("n must be at least 1");
    }
    let mut x = Invariant::zero(file.n, file.r);
    for (i, j, v) in &file.entries {
        let i = MultiIndex::parse(i, file.n)?;
        let j = MultiIndex::parse(j, file.n)?;
        let v = parse_scalar(v)?;
        let current = x.get(&i, &j)?;
        x.set(&i, &j, current + v)?;
    }
    Ok(x)
}

/// Serialises coefficients in basis order; zero coefficients are omitted
/// unless `include_zeros` is set.
pub fn coefficients_to_json(
    side: Side,
    n: usize,
    r: usize,
    c: &CoefficientVector,
    include_zeros: bool,
) -> Result<String> {
    let coefficients = c
        .iter()
        .filter(|(_, v)| include_zeros || !v.is_zero())
        .map(|(p, v)| (p.to_string(), Value::String(v.to_string())))
        .collect();
    let file = CoefficientFile {
        format: FORMAT_VERSION,
        side,
        n,
        r,
        coefficients,
    };
    serde_json::to_string_pretty(&file).map_err(json_err)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientsDoc {
    pub side: Side,
    pub n: usize,
    pub r: usize,
    pub terms: Vec<(Permutation, Scalar)>,
}

impl CoefficientsDoc {
    /// Expands the sparse terms over a full basis; fails if a term is not
    /// a basis element.
    pub fn over_basis(&self, basis: &[Permutation]) -> Result<CoefficientVector> {
        let mut c = CoefficientVector::zero(basis.to_vec());
        for (p, v) in &self.terms {
            let Some(k) = basis.iter().position(|q| q == p) else {
                return invalid(format!("{p} is not a basis element for {} n={} r={}", self.side, self.n, self.r));
            };
            c.values[k] += v;
        }
        Ok(c)
    }
}

pub fn coefficients_from_json(text: &str) -> Result<CoefficientsDoc> {
    let file: CoefficientFile = serde_json::from_str(text).map_err(json_err)?;
    check_version(file.format)?;
    let terms = file
        .coefficients
        .iter()
        .map(|(k, v)| Ok((k.parse::<Permutation>()?, parse_scalar(v)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CoefficientsDoc {
        side: file.side,
        n: file.n,
        r: file.r,
        terms,
    })
}

/// One permutation per line; blank lines and `#` comments are skipped.
pub fn parse_order(text: &str) -> Result<Vec<Permutation>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::parse)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::Caps;

    #[test]
    fn invariant_round_trip() {
        let caps = Caps::default();
        let w: Permutation = "2,3,1".parse().unwrap();
        let three = Scalar::new(3.into(), 2.into());
        let x = Invariant::from_combination(Side::Partition, 3, 2, [(&w, &three)], &caps).unwrap();
        let text = invariant_to_json(&x).unwrap();
        assert!(text.contains("\"3/2\""));
        assert_eq!(invariant_from_json(&text).unwrap(), x);
    }

    #[test]
    fn invariant_accepts_numbers_and_sums_repeats() {
        let text = r#"{"format":1,"n":2,"r":1,"entries":[["1","2",3],["1","2","1/2"],["2","2","0"]]}"#;
        let x = invariant_from_json(text).unwrap();
        assert_eq!(x.nnz(), 1);
        let i = MultiIndex::parse("1", 2).unwrap();
        let j = MultiIndex::parse("2", 2).unwrap();
        assert_eq!(x.get(&i, &j).unwrap(), Scalar::new(7.into(), 2.into()));
    }

    #[test]
    fn invariant_rejects_bad_input() {
        assert!(invariant_from_json(r#"{"format":2,"n":2,"r":1,"entries":[]}"#).is_err());
        assert!(invariant_from_json(r#"{"format":1,"n":2,"r":1,"entries":[["3","1","1"]]}"#).is_err());
        assert!(invariant_from_json(r#"{"format":1,"n":2,"r":1,"entries":[["1","1",0.5]]}"#).is_err());
        assert!(invariant_from_json(r#"{"format":1,"n":2,"r":2,"entries":[["1","1","1"]]}"#).is_err());
        assert!(invariant_from_json("not json").is_err());
    }

    #[test]
    fn coefficients_round_trip() {
        let basis: Vec<Permutation> = vec!["1,2".parse().unwrap(), "2,1".parse().unwrap()];
        let c = CoefficientVector::new(basis.clone(), vec![Scalar::zero(), Scalar::new((-1).into(), 3.into())]).unwrap();
        let text = coefficients_to_json(Side::Schur, 2, 2, &c, false).unwrap();
        assert!(!text.contains("\"1,2\""));
        let doc = coefficients_from_json(&text).unwrap();
        assert_eq!(doc.side, Side::Schur);
        assert_eq!(doc.over_basis(&basis).unwrap(), c);
        assert!(doc.over_basis(&basis[..1]).is_err());
    }

    #[test]
    fn order_file() {
        let order = parse_order("# table order\n1,2,3\n\n2,1,3\n").unwrap();
        assert_eq!(order.len(), 2);
        assert!(parse_order("1,1").is_err());
    }
}
