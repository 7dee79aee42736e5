use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;

use serde::{Deserialize, Serialize};
use symplie_core::claims::ClaimRun;
use symplie_core::sp_rep::{weyl_dim, Decomposition};

use crate::ModuleName;

/// Pretty JSON; every struct lists its fields in sorted order, so a parsed
/// and re-serialized value is byte-identical.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

/// Writes to stdout; a closed pipe is not an error.
pub fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandJson {
    pub dimension: u64,
    pub multiplicity: u64,
    pub partition: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub decomposition: String,
    pub degree: usize,
    pub dimension: u64,
    pub g: usize,
    pub label: String,
    pub module: String,
    pub summands: Vec<SummandJson>,
}

impl DecompositionJson {
    pub fn new(g: usize, module: ModuleName, degree: usize, label: &str, d: &Decomposition) -> Self {
        let module = clap::ValueEnum::to_possible_value(&module)
            .map(|v| v.get_name().to_string())
            .unwrap_or_default();
        let summands = d
            .summands
            .iter()
            .map(|s| {
                let partition = s.highest_weight.partition();
                let dimension = weyl_dim(g, &partition).unwrap_or(0) as u64;
                SummandJson { partition, multiplicity: s.multiplicity, dimension }
            })
            .collect();
        DecompositionJson {
            g,
            module,
            degree,
            label: label.to_string(),
            decomposition: d.to_string(),
            summands,
            dimension: d.dimension() as u64,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} at g={}: {}\n", self.label, self.g, self.decomposition);
        for s in &self.summands {
            let p: Vec<String> = s.partition.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "  [{}]  multiplicity {}  dim {}", p.join(","), s.multiplicity, s.dimension);
        }
        let _ = writeln!(out, "  total dim {}", self.dimension);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub checks: Vec<CheckJson>,
    pub claim: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    pub g: usize,
    pub notes: Vec<String>,
    pub status: String,
    pub witness: BTreeMap<String, String>,
}

impl ReportJson {
    pub fn from_run(run: &ClaimRun, timing: bool) -> Self {
        let elapsed_ms = timing.then_some(run.elapsed.as_millis() as u64);
        match &run.result {
            Ok(r) => ReportJson {
                claim: r.claim.clone(),
                g: r.g,
                status: if r.passed() { "pass" } else { "fail" }.to_string(),
                checks: r
                    .checks
                    .iter()
                    .map(|c| CheckJson { name: c.name.clone(), passed: c.passed })
                    .collect(),
                witness: r.witness.clone(),
                notes: r.notes.clone(),
                elapsed_ms,
            },
            Err(e) => ReportJson {
                claim: run.claim.clone(),
                g: run.g,
                status: "fail".to_string(),
                checks: vec![CheckJson { name: format!("error: {e}"), passed: false }],
                witness: BTreeMap::new(),
                notes: Vec::new(),
                elapsed_ms,
            },
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} g={}", self.status.to_uppercase(), self.claim, self.g);
        if let Some(ms) = self.elapsed_ms {
            let _ = write!(out, " ({ms} ms)");
        }
        out.push('\n');
        for c in &self.checks {
            let _ = writeln!(out, "  [{}] {}", if c.passed { "ok" } else { "FAILED" }, c.name);
        }
        for (k, v) in &self.witness {
            let _ = writeln!(out, "  {k} = {v}");
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsRow {
    pub der: Option<u64>,
    pub labute: u64,
    pub lie: u64,
    pub m: usize,
    pub p: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsJson {
    pub g: usize,
    pub rows: Vec<DimsRow>,
}

impl DimsJson {
    pub fn to_text(&self) -> String {
        let mut out = format!("g={}\n{:>3} {:>10} {:>10} {:>10} {:>10}\n", self.g, "m", "dim L_m", "dim p(m)", "Labute", "dim Der_m");
        for r in &self.rows {
            let der = r.der.map_or("-".to_string(), |d| d.to_string());
            let _ = writeln!(out, "{:>3} {:>10} {:>10} {:>10} {:>10}", r.m, r.lie, r.p, r.labute, der);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_json_round_trip() {
        let r = ReportJson {
            checks: vec![CheckJson { name: "x".into(), passed: true }],
            claim: "no-map".into(),
            elapsed_ms: None,
            g: 3,
            notes: vec![],
            status: "pass".into(),
            witness: [("coefficient".to_string(), "4/3".to_string())].into(),
        };
        let s = to_json(&r);
        assert!(!s.contains("elapsed_ms"));
        let back: ReportJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(to_json(&v), s);
        assert!(r.to_text().starts_with("PASS no-map g=3\n  [ok] x\n  coefficient = 4/3"));
    }

    #[test]
    fn dims_marks_missing_derivations() {
        let d = DimsJson { g: 2, rows: vec![DimsRow { der: None, labute: 4, lie: 4, m: 1, p: 4 }] };
        assert!(d.to_text().lines().nth(2).unwrap().ends_with('-'));
    }
}
