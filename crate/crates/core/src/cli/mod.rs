//! Command implementations behind the `g2` binary. Each command returns its
//! stdout text so the binary stays a thin wrapper and tests can compare bytes.

pub mod checks;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use regex::Regex;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::g2model;
use crate::octonion::{Octonion, OctonionKind};
use crate::rootsys::{parse_type, roots_from_cartan, weyl_order};
use crate::threeform::{classify, orbit_witness, FormError, KForm};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Precision(String),
    #[error("{failed} of {total} checks failed")]
    CheckFailed { failed: usize, total: usize, stdout: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::CheckFailed { .. } => 1,
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Precision(_) => 3,
        }
    }
}

impl From<FormError> for CliError {
    fn from(e: FormError) -> Self {
        match e {
            FormError::PrecisionExhausted { .. } => CliError::Precision(e.to_string()),
            other => CliError::Parse(other.to_string()),
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn cmd_roots(type_name: &str) -> Result<String, CliError> {
    let c = parse_type(type_name).map_err(|e| CliError::Usage(e.to_string()))?;
    let sys = roots_from_cartan(&c).map_err(|e| CliError::Usage(e.to_string()))?;
    let order = weyl_order(&c).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut v = sys.to_json(type_name.trim());
    v["weyl_order"] = json!(order.to_string());
    v["positive_heights"] = json!(sys.heights());
    Ok(pretty(&v))
}

pub fn cmd_classify(text: &str, witness: bool, digits: u32) -> Result<String, CliError> {
    let omega = KForm::from_json_str(text)?;
    let c = classify(&omega);
    let mut v = json!({ "orbit": c.tag.name() });
    if let Some((p, q)) = c.signature {
        v["signature"] = json!([p, q]);
    }
    if witness {
        let w = orbit_witness(&omega, digits)?;
        let w_json = w.to_json();
        v["phi"] = w_json["phi"].clone();
        v["residual"] = w_json["residual"].clone();
        v["exact"] = json!(w.exact);
    }
    Ok(pretty(&v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Fano,
    SplitOctonion,
    G2StructureConstants,
}

impl std::str::FromStr for TableKind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "fano" => Ok(TableKind::Fano),
            "split-octonion" => Ok(TableKind::SplitOctonion),
            "g2-structure-constants" => Ok(TableKind::G2StructureConstants),
            _ => Err(CliError::Usage(format!(
                "unknown table {s:?}; expected fano, split-octonion or g2-structure-constants"
            ))),
        }
    }
}

fn product_rows(kind: OctonionKind, range: std::ops::Range<usize>) -> Vec<Value> {
    let label = |i: usize| if i == 0 { "1".to_string() } else { kind.labels()[i - 1].to_string() };
    range
        .clone()
        .flat_map(|i| range.clone().map(move |j| (i, j)))
        .map(|(i, j)| {
            let p = Octonion::basis(kind, i).mul(&Octonion::basis(kind, j));
            json!({ "lhs": format!("{}*{}", label(i), label(j)), "rhs": p.to_string() })
        })
        .collect()
}

pub fn cmd_table(kind: TableKind) -> Result<String, CliError> {
    let v = match kind {
        TableKind::Fano => json!({ "table": "fano", "products": product_rows(OctonionKind::Division, 1..8) }),
        TableKind::SplitOctonion => {
            json!({ "table": "split-octonion", "products": product_rows(OctonionKind::Split, 0..8) })
        }
        TableKind::G2StructureConstants => {
            let t = g2model::structure_table().map_err(|e| CliError::Usage(e.to_string()))?;
            g2model::structure_constants_json(&t)
        }
    };
    Ok(pretty(&v))
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub pass: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub seed: u64,
    pub pass: bool,
    pub checks: Vec<CheckResult>,
}

impl CheckReport {
    /// One line per check without timings, so equal seeds give equal bytes.
    pub fn summary(&self) -> String {
        let mut out: String = self
            .checks
            .iter()
            .map(|c| format!("{} {} {}\n", if c.pass { "PASS" } else { "FAIL" }, c.id, c.detail))
            .collect();
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        out.push_str(&format!("{} checks, {} failed\n", self.checks.len(), failed));
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Comma-separated globs where `*` matches any run of characters; `all`
/// matches everything.
pub fn filter_regex(filter: &str) -> Result<Regex, CliError> {
    let parts: Vec<String> = filter
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| if p == "all" { ".*".to_string() } else { regex::escape(p).replace(r"\*", ".*").replace(r"\?", ".") })
        .collect();
    if parts.is_empty() {
        return Err(CliError::Usage("empty filter".into()));
    }
    Regex::new(&format!("^(?:{})$", parts.join("|"))).map_err(|e| CliError::Usage(e.to_string()))
}

/// Stable across platforms and toolchains, unlike `DefaultHasher`.
fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf29ce484222325, |h, b| (h ^ b as u64).wrapping_mul(0x100000001b3))
}

pub fn check_rng(seed: u64, id: &str) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(fnv1a(id));
    rng
}

pub fn run_checks(filter: &str, seed: u64) -> Result<CheckReport, CliError> {
    let re = filter_regex(filter)?;
    let selected: Vec<_> = checks::registry().into_iter().filter(|c| re.is_match(c.id)).collect();
    if selected.is_empty() {
        return Err(CliError::Usage(format!("no checks match {filter:?}")));
    }
    let results: Vec<CheckResult> = selected
        .par_iter()
        .map(|c| {
            let start = Instant::now();
            let outcome = (c.run)(&mut check_rng(seed, c.id));
            let elapsed_ms = start.elapsed().as_millis();
            let (pass, detail) = match outcome {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckResult { id: c.id.to_string(), pass, detail, elapsed_ms }
        })
        .collect();
    Ok(CheckReport { seed, pass: results.iter().all(|r| r.pass), checks: results })
}

/// Runs the suite and returns the stdout summary, or `CheckFailed` carrying
/// it. The timed JSON report goes to `out` when given.
pub fn cmd_check(filter: &str, seed: u64, out: Option<&std::path::Path>) -> Result<String, CliError> {
    let report = run_checks(filter, seed)?;
    if let Some(path) = out {
        std::fs::write(path, report.to_json()).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    }
    let stdout = report.summary();
    if report.pass {
        Ok(stdout)
    } else {
        let failed = report.checks.iter().filter(|c| !c.pass).count();
        Err(CliError::CheckFailed { failed, total: report.checks.len(), stdout })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::threeform::{omega0, omega1};

    #[test]
    fn roots_g2_and_errors() {
        let v: Value = serde_json::from_str(&cmd_roots("G2").unwrap()).unwrap();
        assert_eq!(v["roots"].as_array().unwrap().len(), 12);
        assert_eq!(v["weyl_order"], "12");
        let a1: Value = serde_json::from_str(&cmd_roots("A1").unwrap()).unwrap();
        assert_eq!(a1["roots"].as_array().unwrap().len(), 2);
        assert_eq!(cmd_roots("Z9").unwrap_err().exit_code(), 2);
    }

    #[test]
    fn classify_files() {
        let run = |f: &KForm<_>| -> Value { serde_json::from_str(&cmd_classify(&f.to_json().to_string(), false, 60).unwrap()).unwrap() };
        let s = run(&omega0());
        assert_eq!(s["orbit"], "split");
        assert_eq!(s["signature"], json!([4, 3]));
        let c = run(&omega1());
        assert_eq!(c["orbit"], "compact");
        assert_eq!(c["signature"], json!([0, 7]));
        assert_eq!(run(&KForm::monomial(7, &[1, 2, 3]))["orbit"], "not-generic");
        assert_eq!(cmd_classify("{", false, 60).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn tables() {
        let fano = cmd_table(TableKind::Fano).unwrap();
        assert!(fano.contains("\"lhs\": \"e1*e4\",\n      \"rhs\": \"e7\""));
        let v: Value = serde_json::from_str(&cmd_table(TableKind::SplitOctonion).unwrap()).unwrap();
        assert_eq!(v["products"].as_array().unwrap().len(), 64);
        assert!("cube".parse::<TableKind>().is_err());
    }

    #[test]
    fn filters() {
        let re = filter_regex("threeform.*,octonion.moufang").unwrap();
        assert!(re.is_match("threeform.json") && re.is_match("octonion.moufang"));
        assert!(!re.is_match("octonion.laws"));
        assert!(filter_regex("all").unwrap().is_match("anything"));
        assert_eq!(run_checks("nothing.here", 0).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn check_output_is_byte_stable() {
        let a = cmd_check("octonion.moufang", 7, None).unwrap();
        let b = cmd_check("octonion.moufang", 7, None).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with("PASS octonion.moufang"));
    }

    #[test]
    fn registry_ids_unique() {
        let mut ids: Vec<_> = checks::registry().iter().map(|c| c.id).collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }
}
