use std::time::Instant;

use evoalg::{AlgebraError, Field, Polynomial};
use serde_json::{json, Map, Value};

/// Exit codes of the `evoalg` binary.
pub mod exit {
    pub const DONE: i32 = 0;
    pub const IO: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const BUDGET: i32 = 3;
    pub const PRECONDITION: i32 = 4;
}

/// Sections filled in by a command as it runs; whatever is present when a
/// command fails is still reported.
#[derive(Default)]
pub(crate) struct Sections {
    pub result: Map<String, Value>,
    pub certificates: Map<String, Value>,
    pub assumptions: Vec<String>,
    pub counters: Map<String, Value>,
    pub timing: Map<String, Value>,
    pub summary: Vec<String>,
}

impl Sections {
    pub fn result(&mut self, key: &str, value: impl Into<Value>) {
        self.result.insert(key.into(), value.into());
    }

    pub fn certificate(&mut self, key: &str, value: impl Into<Value>) {
        self.certificates.insert(key.into(), value.into());
    }

    pub fn counter(&mut self, key: &str, value: u64) {
        self.counters.insert(key.into(), value.into());
    }

    pub fn assume(&mut self, items: impl IntoIterator<Item = String>) {
        for a in items {
            if !self.assumptions.contains(&a) {
                self.assumptions.push(a);
            }
        }
    }

    pub fn say(&mut self, line: impl Into<String>) {
        self.summary.push(line.into());
    }

    /// Runs `f`, recording its wall time under `key` in milliseconds.
    pub fn time<T>(
        &mut self,
        key: &str,
        f: impl FnOnce() -> Result<T, AlgebraError>,
    ) -> Result<T, AlgebraError> {
        let start = Instant::now();
        let out = f();
        let ms = start.elapsed().as_secs_f64() * 1e3;
        self.timing
            .insert(key.into(), json!((ms * 1e3).round() / 1e3));
        out
    }
}

pub(crate) fn polys<F: Field>(ps: &[Polynomial<F>]) -> Value {
    Value::Array(ps.iter().map(|p| Value::String(p.to_string())).collect())
}

pub(crate) fn poly<F: Field>(p: &Polynomial<F>) -> Value {
    Value::String(p.to_string())
}

/// Outcome of one job: the machine report, a human summary and the exit code.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub json: Value,
    pub summary: Vec<String>,
    pub exit_code: i32,
}

impl RunReport {
    pub(crate) fn assemble(
        job: String,
        command: &str,
        sections: Sections,
        error: Option<AlgebraError>,
    ) -> Self {
        let (status, exit_code) = match &error {
            None => ("done", exit::DONE),
            Some(AlgebraError::BudgetExceeded { .. }) => ("budget-exceeded", exit::BUDGET),
            Some(AlgebraError::Parse { .. }) => ("parse-error", exit::PARSE),
            Some(_) => ("precondition-violated", exit::PRECONDITION),
        };
        let mut summary = sections.summary;
        if let Some(e) = &error {
            summary.push(format!("{status}: {e}"));
        }
        let json = json!({
            "job": job,
            "command": command,
            "status": status,
            "exit_code": exit_code,
            "error": error.as_ref().map(|e| e.to_string()),
            "result": sections.result,
            "certificates": sections.certificates,
            "assumptions": sections.assumptions,
            "counters": sections.counters,
            "timing_ms": sections.timing,
        });
        RunReport {
            json,
            summary,
            exit_code,
        }
    }

    pub fn status(&self) -> &str {
        self.json["status"].as_str().unwrap_or("")
    }

    pub fn result(&self) -> &Value {
        &self.json["result"]
    }

    pub fn certificates(&self) -> &Value {
        &self.json["certificates"]
    }

    /// The report with wall-clock fields removed; identical jobs give
    /// identical values.
    pub fn without_timing(&self) -> Value {
        let mut v = self.json.clone();
        if let Some(m) = v.as_object_mut() {
            m.remove("timing_ms");
        }
        v
    }

    pub fn to_pretty_json(&self) -> String {
        serde_json::to_string_pretty(&self.json).expect("report values are plain JSON")
    }
}
