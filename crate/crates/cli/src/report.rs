use std::io::Write;

use serde::Serialize;

use crate::args::OutputFormat;

/// Columns shared by every report, in output order.
#[derive(Debug, Serialize)]
pub struct GraphSummary {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub degeneracy: usize,
    pub d_max: usize,
}

#[derive(Debug, Serialize)]
pub struct CountReport {
    #[serde(flatten)]
    pub graph: GraphSummary,
    pub command: &'static str,
    pub pattern: &'static str,
    pub k: usize,
    pub h: usize,
    pub mode: &'static str,
    pub samples: u64,
    pub nonzero_samples: u64,
    pub normalizer: f64,
    pub estimate: f64,
    pub low_confidence: bool,
    pub seed: u64,
    pub elapsed_seconds: f64,
}

/// Same columns as [`CountReport`] with `estimate` replaced by the four
/// exact counts; sampling fields are null.
#[derive(Debug, Serialize)]
pub struct ExactReport {
    #[serde(flatten)]
    pub graph: GraphSummary,
    pub command: &'static str,
    pub pattern: &'static str,
    pub k: usize,
    pub h: usize,
    pub mode: Option<&'static str>,
    pub samples: Option<u64>,
    pub nonzero_samples: Option<u64>,
    pub normalizer: Option<f64>,
    pub kclique: u64,
    pub k1: u64,
    pub k2_type1: Option<u64>,
    pub k2_type2: Option<u64>,
    pub low_confidence: Option<bool>,
    pub seed: Option<u64>,
    pub elapsed_seconds: f64,
}

#[derive(Debug, Serialize)]
pub struct StatsReport {
    #[serde(flatten)]
    pub graph: GraphSummary,
    pub command: &'static str,
    pub pattern: &'static str,
    pub k: usize,
    pub h: usize,
    pub phi: f64,
    pub kclique: Option<u64>,
    pub k1: Option<u64>,
    pub k2_type1: Option<u64>,
    pub k2_type2: Option<u64>,
    pub k1_ratio: Option<f64>,
    pub k2_type1_ratio: Option<f64>,
    pub k2_type2_ratio: Option<f64>,
    pub elapsed_seconds: f64,
}

pub fn emit<T: Serialize>(
    report: &T,
    format: OutputFormat,
    out: impl Write,
) -> std::io::Result<()> {
    match format {
        OutputFormat::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, report)?;
            writeln!(out)
        }
        OutputFormat::Csv => {
            // Flattened structs go through serde's map path, which the csv
            // writer cannot take, so build the header and row from JSON.
            let value = serde_json::to_value(report)?;
            let serde_json::Value::Object(fields) = value else {
                unreachable!("reports serialize as objects")
            };
            let mut w = csv::Writer::from_writer(out);
            w.write_record(fields.keys())?;
            w.write_record(fields.values().map(csv_cell))?;
            w.flush()
        }
    }
}

fn csv_cell(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::Null => String::new(),
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
