//! Command results and their two renderings.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Relations {
        algebra: String,
        provenance: String,
        variables: Vec<String>,
        relations: Vec<String>,
    },
    /// `dimension` is `None` when the algebra is infinite-dimensional.
    Dimension {
        algebra: String,
        dimension: Option<u64>,
    },
    Hilbert {
        algebra: String,
        degree: u64,
        dimension: u64,
    },
    Krull {
        algebra: String,
        dimension: i64,
    },
    Comparison {
        left: String,
        right: String,
        result: String,
    },
    Spread {
        module: String,
        spread: u64,
    },
    Generators {
        module: String,
        count: u64,
    },
    Integrality {
        query: String,
        verdict: String,
        witness_degree: Option<u32>,
        bound: u32,
    },
    Check {
        query: String,
        holds: bool,
    },
    Versal {
        module: String,
        rows: Vec<Vec<String>>,
    },
    Error {
        message: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub payload: Payload,
    /// Wall time, present only when timing was requested.
    pub ms: Option<u64>,
}

/// Everything one script run produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub engine: String,
    pub reports: Vec<Report>,
}

impl RunReport {
    pub fn new(reports: Vec<Report>) -> Self {
        RunReport {
            engine: engine_version(),
            reports,
        }
    }

    pub fn has_errors(&self) -> bool {
        self.reports.iter().any(|r| r.status == Status::Error)
    }
}

pub fn engine_version() -> String {
    format!("reeskernel {}", env!("CARGO_PKG_VERSION"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

pub fn emit(run: &RunReport, format: Format) -> String {
    match format {
        Format::Machine => {
            let mut s = serde_json::to_string_pretty(run).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => emit_text(run),
    }
}

/// Reads back the machine format.
pub fn parse_machine(text: &str) -> serde_json::Result<RunReport> {
    serde_json::from_str(text)
}

fn emit_text(run: &RunReport) -> String {
    let mut out = format!("# {}\n", run.engine);
    for r in &run.reports {
        out.push('\n');
        let _ = writeln!(out, "> {}", r.command);
        out.push_str(&text_payload(&r.payload));
        if let Some(ms) = r.ms {
            let _ = writeln!(out, "  ({ms} ms)");
        }
    }
    out
}

fn text_payload(p: &Payload) -> String {
    let mut out = String::new();
    match p {
        Payload::Relations {
            algebra,
            provenance,
            variables,
            relations,
        } => {
            let _ = writeln!(out, "{algebra} ({provenance}) over [{}]", variables.join(", "));
            if relations.is_empty() {
                out.push_str("  no relations\n");
            }
            for rel in relations {
                let _ = writeln!(out, "  {rel}");
            }
        }
        Payload::Dimension { algebra, dimension } => {
            let d = dimension.map_or_else(|| "infinite".to_string(), |d| d.to_string());
            let _ = writeln!(out, "kdim {algebra} = {d}");
        }
        Payload::Hilbert {
            algebra,
            degree,
            dimension,
        } => {
            let _ = writeln!(out, "hilb {algebra} {degree} = {dimension}");
        }
        Payload::Krull { algebra, dimension } => {
            let _ = writeln!(out, "krull {algebra} = {dimension}");
        }
        Payload::Comparison { left, right, result } => {
            let _ = writeln!(out, "compare {left} {right} = {result}");
        }
        Payload::Spread { module, spread } => {
            let _ = writeln!(out, "spread {module} = {spread}");
        }
        Payload::Generators { module, count } => {
            let _ = writeln!(out, "mingens {module} = {count}");
        }
        Payload::Integrality { query, verdict, .. } => {
            let _ = writeln!(out, "{query} = {verdict}");
        }
        Payload::Check { query, holds } => {
            let _ = writeln!(out, "{query} = {holds}");
        }
        Payload::Versal { module, rows } => {
            let _ = writeln!(out, "versal {module}:");
            for row in rows {
                let _ = writeln!(out, "  [{}]", row.join(", "));
            }
        }
        Payload::Error { message } => {
            let _ = writeln!(out, "error: {message}");
        }
    }
    out
}
