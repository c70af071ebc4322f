use std::fmt::Write as _;

pub const HEADER: &str = "T_dB,T_linear,value,kind,source";

/// Origin of a value in the `source` column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Analytic,
    Simulation,
    /// Standard error of the simulation row with the same `T` and kind.
    SimulationStdError,
}

impl Source {
    pub fn as_str(&self) -> &'static str {
        match self {
            Source::Analytic => "analytic",
            Source::Simulation => "simulation",
            Source::SimulationStdError => "simulation_std_error",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CsvRow {
    pub t_db: f64,
    pub t_linear: f64,
    /// `None` when the evaluation failed; see `error`.
    pub value: Option<f64>,
    pub kind: String,
    pub source: Source,
    pub error: Option<String>,
}

fn escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// CSV text. An `error` column is appended only when some row failed.
pub fn render(rows: &[CsvRow]) -> String {
    let with_errors = rows.iter().any(|r| r.error.is_some());
    let mut out = String::from(HEADER);
    if with_errors {
        out.push_str(",error");
    }
    out.push('\n');
    for r in rows {
        let value = r.value.map(|v| v.to_string()).unwrap_or_default();
        let _ = write!(
            out,
            "{},{},{},{},{}",
            r.t_db,
            r.t_linear,
            value,
            escape(&r.kind),
            r.source.as_str()
        );
        if with_errors {
            out.push(',');
            out.push_str(&escape(r.error.as_deref().unwrap_or("")));
        }
        out.push('\n');
    }
    out
}
