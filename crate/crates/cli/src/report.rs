//! The analysis report: a versioned, serde-round-trippable record of one
//! matrix classification, plus the matching error record for batch output.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use eigenstrata::combinatorics::StratumDims;
use eigenstrata::spectral::{SpectralAnalysis, SymmetricMatrix};

use crate::error::CliError;
use crate::ingest::ParsedMatrix;

/// Current report schema version.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputMeta {
    pub path: String,
    pub format: String,
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StratumReport {
    pub orth_isotropy_dim: usize,
    pub flag_dim: usize,
    pub relative_dim: usize,
    pub codim: usize,
    pub family_dim: usize,
}

impl From<StratumDims> for StratumReport {
    fn from(d: StratumDims) -> Self {
        StratumReport {
            orth_isotropy_dim: d.orth_isotropy_dim,
            flag_dim: d.flag_dim,
            relative_dim: d.relative_dim,
            codim: d.codim,
            family_dim: d.family_dim,
        }
    }
}

/// One classified matrix. Serializes to a stable JSON schema; parsing the
/// serialized form reproduces the report exactly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub kind: String,
    pub input: InputMeta,
    pub tol: f64,
    /// `sha256:` digest of the normalized matrix bytes (order as u64 LE,
    /// then row-major entries as f64 LE bits).
    pub digest: String,
    /// Raw eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    /// Eigenvalues after normalization onto `[0, 1]`.
    pub normalized_eigenvalues: Vec<f64>,
    /// Multiplicity partition, descending.
    pub partition: Vec<usize>,
    pub codim: usize,
    pub stratum: StratumReport,
    /// Gap coordinates of the normalized spectrum.
    pub simplex_point: Vec<f64>,
    /// Coxeter-complex cell of the spectrum: blocks of ascending eigenvalue
    /// positions (1-based), merged by cluster.
    pub cell: Vec<Vec<usize>>,
    /// `∏ n_i!·2^{n_i}` as a decimal string (it outgrows u64 quickly).
    pub normalizer_order: String,
    /// Orthogonal frame rows, included with `--frame`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frame: Option<Vec<Vec<f64>>>,
    /// Clustering decisions taken during the analysis.
    pub warnings: Vec<String>,
}

/// A per-input failure inside a batch, serialized alongside reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub schema: u32,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    pub error: ErrorBody,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub code: String,
    pub message: String,
}

impl ErrorRecord {
    pub fn new(input: Option<String>, err: &CliError) -> Self {
        ErrorRecord {
            schema: SCHEMA_VERSION,
            kind: "error".into(),
            input,
            error: ErrorBody {
                code: err.code().into(),
                message: err.to_string(),
            },
        }
    }
}

/// Digest of the normalized matrix: deterministic because the whole
/// pipeline is.
pub fn matrix_digest(q: &SymmetricMatrix) -> String {
    let n = q.order();
    let mut hasher = Sha256::new();
    hasher.update((n as u64).to_le_bytes());
    for i in 0..n {
        for j in 0..n {
            hasher.update(q.get(i, j).to_le_bytes());
        }
    }
    format!("sha256:{}", hex::encode(hasher.finalize()))
}

/// Assemble the report for one analyzed input.
pub fn build_report(
    path: &str,
    parsed: &ParsedMatrix,
    analysis: &SpectralAnalysis,
    tol: f64,
    include_frame: bool,
) -> AnalysisReport {
    let config = &analysis.configuration;
    let mut cell = Vec::with_capacity(config.cluster_sizes.len());
    let mut next = 1;
    for &size in &config.cluster_sizes {
        cell.push((next..next + size).collect());
        next += size;
    }

    let mut warnings = Vec::new();
    let eigs = analysis.decomposition.eigenvalues();
    let range = eigs[eigs.len() - 1] - eigs[0];
    let mut position = 0;
    for &size in &config.cluster_sizes {
        if size > 1 {
            let gap = eigs[position + size - 1] - eigs[position];
            warnings.push(format!(
                "eigenvalue positions {}..{} clustered (spread {:.3e} <= {:.3e} * range {:.3e})",
                position + 1,
                position + size,
                gap,
                tol,
                range
            ));
        }
        position += size;
    }

    AnalysisReport {
        schema: SCHEMA_VERSION,
        kind: "report".into(),
        input: InputMeta {
            path: path.to_string(),
            format: parsed.format.to_string(),
            order: parsed.matrix.order(),
            names: parsed.names.clone(),
        },
        tol,
        digest: matrix_digest(analysis.normalized.matrix()),
        eigenvalues: eigs.to_vec(),
        normalized_eigenvalues: analysis.normalized.eigenvalues().to_vec(),
        partition: config.partition.parts().to_vec(),
        codim: config.codim,
        stratum: config.stratum.into(),
        simplex_point: config.simplex_point.coords().to_vec(),
        cell,
        normalizer_order: config.normalizer_order.to_string(),
        frame: include_frame.then(|| analysis.normalized.frame().rows()),
        warnings,
    }
}

/// Human-readable rendering of a report.
pub fn render_text(report: &AnalysisReport) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "input: {} ({}, order {})",
        report.input.path, report.input.format, report.input.order
    );
    if let Some(names) = &report.input.names {
        let _ = writeln!(out, "names: {}", names.join(", "));
    }
    let _ = writeln!(out, "digest: {}", report.digest);
    let _ = writeln!(out, "eigenvalues: {}", join_numbers(&report.eigenvalues));
    let _ = writeln!(
        out,
        "normalized: {}",
        join_numbers(&report.normalized_eigenvalues)
    );
    let partition = report
        .partition
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join("+");
    let _ = writeln!(out, "partition: {partition}");
    let _ = writeln!(out, "codim: {}", report.codim);
    let _ = writeln!(
        out,
        "stratum dims: isotropy {}, flag {}, relative {}, family {}",
        report.stratum.orth_isotropy_dim,
        report.stratum.flag_dim,
        report.stratum.relative_dim,
        report.stratum.family_dim
    );
    let _ = writeln!(
        out,
        "simplex point: {}",
        join_numbers(&report.simplex_point)
    );
    let cell = report
        .cell
        .iter()
        .map(|block| {
            let inner = block
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",");
            format!("{{{inner}}}")
        })
        .collect::<Vec<_>>()
        .join("|");
    let _ = writeln!(out, "cell: ({cell})");
    let _ = writeln!(out, "normalizer order: {}", report.normalizer_order);
    if let Some(frame) = &report.frame {
        let _ = writeln!(out, "frame:");
        for row in frame {
            let _ = writeln!(out, "  {}", join_numbers(row));
        }
    }
    for warning in &report.warnings {
        let _ = writeln!(out, "warning: {warning}");
    }
    out
}

fn join_numbers(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| format!("{v:.12e}"))
        .collect::<Vec<_>>()
        .join(" ")
}
