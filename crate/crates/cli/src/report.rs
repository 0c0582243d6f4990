//! Machine-readable report rendering.
//!
//! A report is a table plus a list of named checks. CSV carries the table
//! only, with floats printed to 17 significant digits so identical runs are
//! byte-identical; JSON carries the table, the parameters, and the checks.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Flag(bool),
}

impl Cell {
    fn to_csv(&self) -> String {
        match self {
            Cell::Num(x) => format_float(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Flag(b) => b.to_string(),
        }
    }

    fn to_json(&self) -> serde_json::Value {
        match self {
            Cell::Num(x) => serde_json::json!(x),
            Cell::Int(i) => serde_json::json!(i),
            Cell::Text(s) => serde_json::json!(s),
            Cell::Flag(b) => serde_json::json!(b),
        }
    }
}

/// 17 significant digits — enough to round-trip any f64.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn new(name: &str, max_deviation: f64, tolerance: f64) -> Self {
        Check {
            name: name.to_string(),
            pass: max_deviation <= tolerance,
            max_deviation,
            tolerance,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub parameters: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub checks: Vec<Check>,
}

#[derive(Serialize)]
struct JsonParameter<'a> {
    name: &'a str,
    value: &'a str,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    command: &'a str,
    parameters: Vec<JsonParameter<'a>>,
    columns: &'a [String],
    rows: Vec<Vec<serde_json::Value>>,
    checks: &'a [Check],
    pass: bool,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::to_csv).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = JsonReport {
            command: &self.command,
            parameters: self
                .parameters
                .iter()
                .map(|(name, value)| JsonParameter { name, value })
                .collect(),
            columns: &self.columns,
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(Cell::to_json).collect())
                .collect(),
            checks: &self.checks,
            pass: self.pass(),
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("report serialization");
        text.push('\n');
        text
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format {other:?} (expected csv or json)")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting_is_fixed_width_precision() {
        assert_eq!(format_float(1.0), "1.0000000000000000e0");
        assert_eq!(format_float(0.0), "0.0000000000000000e0");
        assert_eq!(format_float(-0.25), "-2.5000000000000000e-1");
    }

    #[test]
    fn csv_layout() {
        let report = Report {
            command: "demo".into(),
            parameters: vec![],
            columns: vec!["a".into(), "b".into()],
            rows: vec![vec![Cell::Num(1.0), Cell::Text("x".into())]],
            checks: vec![],
        };
        assert_eq!(report.to_csv(), "a,b\n1.0000000000000000e0,x\n");
    }

    #[test]
    fn json_carries_checks_and_verdict() {
        let report = Report {
            command: "demo".into(),
            parameters: vec![("eta".into(), "0.5".into())],
            columns: vec!["v".into()],
            rows: vec![vec![Cell::Num(2.0)]],
            checks: vec![Check::new("sane", 1e-12, 1e-10)],
        };
        let doc: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(doc["command"], "demo");
        assert_eq!(doc["checks"][0]["pass"], true);
        assert_eq!(doc["pass"], true);
        assert_eq!(doc["parameters"][0]["name"], "eta");
    }

    #[test]
    fn failed_check_flips_verdict() {
        let report = Report {
            command: "demo".into(),
            parameters: vec![],
            columns: vec![],
            rows: vec![],
            checks: vec![Check::new("tight", 1e-3, 1e-10)],
        };
        assert!(!report.pass());
    }
}
