//! Flat key=value run configuration.
//!
//! Default path is `./congruent.conf`; the `CONGRUENT_CONFIG` environment
//! variable overrides it. A missing default file is fine; a missing
//! explicitly-configured file is an error. Recognized keys:
//!
//! ```text
//! format = json | csv
//! out = path/for/audit/reports.json
//! <claim-id>.<bound> = integer     # e.g. thm-4.1.max_ab = 50
//! ```

use std::collections::BTreeMap;

use crate::Format;

pub struct RunConfig {
    pub output_format: Format,
    pub output_path: Option<String>,
    /// claim id → bound overrides
    pub default_bounds: BTreeMap<String, BTreeMap<String, u128>>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            output_format: Format::Json,
            output_path: None,
            default_bounds: BTreeMap::new(),
        }
    }
}

impl RunConfig {
    pub fn load() -> Result<Self, String> {
        match std::env::var("CONGRUENT_CONFIG") {
            Ok(path) => {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| format!("cannot read config {path}: {e}"))?;
                Self::parse(&text)
            }
            Err(_) => match std::fs::read_to_string("congruent.conf") {
                Ok(text) => Self::parse(&text),
                Err(_) => Ok(Self::default()),
            },
        }
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut cfg = Self::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {}: expected key = value", lineno + 1))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "format" => {
                    cfg.output_format = match value {
                        "json" => Format::Json,
                        "csv" => Format::Csv,
                        other => {
                            return Err(format!(
                                "config line {}: format must be json or csv, got {other:?}",
                                lineno + 1
                            ))
                        }
                    }
                }
                "out" => cfg.output_path = Some(value.to_string()),
                _ => {
                    // claim-scoped bound: <claim-id>.<bound-name>
                    let (claim, bound) = key.rsplit_once('.').ok_or_else(|| {
                        format!("config line {}: unknown key {key:?}", lineno + 1)
                    })?;
                    let n: u128 = value.parse().map_err(|_| {
                        format!(
                            "config line {}: bound {key:?} must be a positive integer",
                            lineno + 1
                        )
                    })?;
                    if n == 0 {
                        return Err(format!(
                            "config line {}: bound {key:?} must be positive",
                            lineno + 1
                        ));
                    }
                    cfg.default_bounds
                        .entry(claim.to_string())
                        .or_default()
                        .insert(bound.to_string(), n);
                }
            }
        }
        Ok(cfg)
    }

    pub fn claim_bounds(&self, claim_id: &str) -> impl Iterator<Item = (String, u128)> + '_ {
        self.default_bounds
            .get(claim_id)
            .into_iter()
            .flat_map(|m| m.iter().map(|(k, v)| (k.clone(), *v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_key_kinds() {
        let cfg = RunConfig::parse(
            "# comment\nformat = csv\nout = report.json\nthm-4.1.max_ab = 50\nthm-4.1.max_xy = 10\n",
        )
        .unwrap();
        assert_eq!(cfg.output_format, Format::Csv);
        assert_eq!(cfg.output_path.as_deref(), Some("report.json"));
        let bounds: Vec<_> = cfg.claim_bounds("thm-4.1").collect();
        assert_eq!(
            bounds,
            vec![("max_ab".to_string(), 50), ("max_xy".to_string(), 10)]
        );
        assert_eq!(cfg.claim_bounds("thm-4.2").count(), 0);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(RunConfig::parse("format = yaml").is_err());
        assert!(RunConfig::parse("mystery").is_err());
        assert!(RunConfig::parse("thm-4.1.max_ab = zero").is_err());
        assert!(RunConfig::parse("thm-4.1.max_ab = 0").is_err());
    }
}
