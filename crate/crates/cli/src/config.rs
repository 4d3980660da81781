//! Flat `key=value` stack files.
//!
//! ```text
//! # quarter-wave pair
//! phi1=0.4
//! phi2=0.6
//! eta=0.6
//! periods=250
//! ```

use std::collections::BTreeMap;

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StackConfig {
    pub phi1: f64,
    pub phi2: f64,
    pub eta: f64,
    pub periods: Option<u64>,
}

const KEYS: [&str; 4] = ["phi1", "phi2", "eta", "periods"];

pub fn parse_stack(text: &str) -> Result<StackConfig> {
    let mut values = BTreeMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::Input(format!("line {}: expected key=value", n + 1)))?;
        let key = key.trim();
        if !KEYS.contains(&key) {
            return Err(CliError::Input(format!(
                "line {}: unknown key `{key}`",
                n + 1
            )));
        }
        if values.insert(key, value.trim()).is_some() {
            return Err(CliError::Input(format!(
                "line {}: duplicate key `{key}`",
                n + 1
            )));
        }
    }
    let real = |key: &str| -> Result<f64> {
        let v = values
            .get(key)
            .ok_or_else(|| CliError::Input(format!("missing key `{key}`")))?;
        parse_real(v).map_err(|_| CliError::Input(format!("`{key}`: not a finite number: {v}")))
    };
    let periods = match values.get("periods") {
        None => None,
        Some(v) => Some(v.parse::<u64>().map_err(|_| {
            CliError::Input(format!("`periods`: expected a non-negative integer: {v}"))
        })?),
    };
    Ok(StackConfig {
        phi1: real("phi1")?,
        phi2: real("phi2")?,
        eta: real("eta")?,
        periods,
    })
}

pub fn parse_real(s: &str) -> std::result::Result<f64, String> {
    match s.trim().parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(format!("not a finite number: {s}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let c =
            parse_stack("# cycle\nphi1 = 0.4\nphi2=0.6 # half\n\neta=0.6\nperiods=250\n").unwrap();
        assert_eq!(
            c,
            StackConfig {
                phi1: 0.4,
                phi2: 0.6,
                eta: 0.6,
                periods: Some(250)
            }
        );
        assert_eq!(parse_stack("phi1=0\nphi2=0\neta=1").unwrap().periods, None);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_stack("phi1=0.4\nphi2=0.6").is_err());
        assert!(parse_stack("phi1=0.4\nphi2=0.6\neta=x").is_err());
        assert!(parse_stack("phi1=0.4\nphi1=0.5\nphi2=0.6\neta=0").is_err());
        assert!(parse_stack("phi1=0.4\nphi2=0.6\neta=0\nperiods=-3").is_err());
        assert!(parse_stack("phi1=0.4\nphi2=0.6\neta=0\nn=3").is_err());
        assert!(parse_stack("phi1 0.4").is_err());
        assert!(parse_stack("phi1=inf\nphi2=0\neta=0").is_err());
    }
}
