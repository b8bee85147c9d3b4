use std::fs;
use std::path::Path;
use std::process::ExitCode;

use liecps::{Error, Report};
use serde_json::{json, Value};

/// One named check with an optional witness.
pub struct Line {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// What a verb produced: checks, free-form info lines and a document.
#[derive(Default)]
pub struct Outcome {
    pub checks: Vec<Line>,
    pub info: Vec<(String, String)>,
    pub doc: Option<Value>,
}

impl Outcome {
    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Line { name: name.into(), passed, detail: detail.into() });
    }

    /// One line per violation, or a single passing line.
    pub fn report(&mut self, name: &str, r: &Report) {
        if r.passed() {
            self.check(name, true, "");
        }
        for v in &r.violations {
            self.check(v.law, false, format!("at ({}): {}", v.at.join(", "), v.residual));
        }
    }

    pub fn info(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.info.push((key.into(), value.into()));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub struct Sink<'a> {
    pub command: &'a str,
    pub machine: bool,
    pub out: Option<&'a Path>,
}

impl Sink<'_> {
    pub fn emit(&self, result: Result<Outcome, Error>) -> ExitCode {
        match result {
            Ok(o) => self.success(o),
            Err(e) => self.failure(&e),
        }
    }

    fn success(&self, o: Outcome) -> ExitCode {
        let passed = o.passed();
        if let (Some(path), Some(doc)) = (self.out, &o.doc) {
            if let Err(e) = fs::write(path, serde_json::to_string_pretty(doc).expect("json") + "\n") {
                return self.failure(&Error::Parse(format!("{}: {e}", path.display())));
            }
        }
        if self.machine {
            let checks: Vec<Value> =
                o.checks.iter().map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail})).collect();
            let info: serde_json::Map<String, Value> = o.info.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
            let body = json!({
                "command": self.command,
                "passed": passed,
                "checks": checks,
                "info": info,
                "result": o.doc.clone().unwrap_or(Value::Null),
            });
            println!("{}", serde_json::to_string_pretty(&body).expect("json"));
        } else {
            print_human(self.command, &o);
        }
        if passed {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        }
    }

    fn failure(&self, e: &Error) -> ExitCode {
        let code = if e.is_malformed_input() { 2 } else { 1 };
        if self.machine {
            let body = json!({
                "command": self.command,
                "passed": false,
                "error": {"code": e.code(), "message": e.to_string()},
            });
            println!("{}", serde_json::to_string_pretty(&body).expect("json"));
        } else {
            eprintln!("{}: {} [{}]", self.command, e, e.code());
        }
        ExitCode::from(code)
    }
}

fn print_human(command: &str, o: &Outcome) {
    println!("{command}");
    let width = o.info.iter().map(|(k, _)| k.len()).chain(o.checks.iter().map(|c| c.name.len())).max().unwrap_or(0);
    for (k, v) in &o.info {
        let mut lines = v.lines();
        println!("  {k:width$}  {}", lines.next().unwrap_or(""));
        for rest in lines {
            println!("  {:width$}  {rest}", "");
        }
    }
    for c in &o.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        if c.detail.is_empty() {
            println!("  {:width$}  {status}", c.name);
        } else {
            println!("  {:width$}  {status}  {}", c.name, c.detail);
        }
    }
}
