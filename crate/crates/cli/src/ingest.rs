//! Matrix ingestion: CSV, JSON, and PHYLIP square distance matrices, with
//! format auto-detection by extension and content sniffing.

use std::fmt;
use std::path::Path;

use eigenstrata::spectral::SymmetricMatrix;
use serde::Deserialize;

use crate::error::CliError;

/// Requested or detected input format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FormatChoice {
    Auto,
    Csv,
    Json,
    Phylip,
}

/// Concrete format an input was parsed as.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixFormat {
    Csv,
    Json,
    Phylip,
}

impl fmt::Display for MatrixFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            MatrixFormat::Csv => "csv",
            MatrixFormat::Json => "json",
            MatrixFormat::Phylip => "phylip",
        };
        f.write_str(name)
    }
}

/// A parsed symmetric matrix plus whatever labelling the format carried.
#[derive(Debug, Clone)]
pub struct ParsedMatrix {
    pub matrix: SymmetricMatrix,
    pub names: Option<Vec<String>>,
    pub format: MatrixFormat,
}

/// Read and parse a matrix file.
pub fn parse_matrix(path: &Path, format: FormatChoice) -> Result<ParsedMatrix, CliError> {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: display.clone(),
        message: e.to_string(),
    })?;
    let format = match format {
        FormatChoice::Auto => detect_format(path, &text),
        FormatChoice::Csv => MatrixFormat::Csv,
        FormatChoice::Json => MatrixFormat::Json,
        FormatChoice::Phylip => MatrixFormat::Phylip,
    };
    match format {
        MatrixFormat::Csv => parse_csv_str(&text),
        MatrixFormat::Json => parse_json_str(&text),
        MatrixFormat::Phylip => parse_phylip_str(&text),
    }
    .map_err(|e| e.with_path(&display))
}

/// Extension first, then content: `[`/`{` opens JSON, a lone integer on the
/// first line opens PHYLIP, anything else is CSV.
pub fn detect_format(path: &Path, text: &str) -> MatrixFormat {
    match path
        .extension()
        .and_then(|e| e.to_str())
        .map(|e| e.to_ascii_lowercase())
    {
        Some(ext) if ext == "csv" => return MatrixFormat::Csv,
        Some(ext) if ext == "json" => return MatrixFormat::Json,
        Some(ext) if ext == "phy" || ext == "phylip" || ext == "dist" => {
            return MatrixFormat::Phylip
        }
        _ => {}
    }
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        return MatrixFormat::Json;
    }
    if let Some(first) = text.lines().find(|l| !l.trim().is_empty()) {
        if first.trim().parse::<usize>().is_ok() {
            return MatrixFormat::Phylip;
        }
    }
    MatrixFormat::Csv
}

fn build(
    matrix: Vec<Vec<f64>>,
    names: Option<Vec<String>>,
    format: MatrixFormat,
) -> Result<ParsedMatrix, CliError> {
    let n = matrix.len();
    if let Some(bad) = matrix.iter().find(|row| row.len() != n) {
        return Err(CliError::Core(eigenstrata::Error::NotSquare {
            rows: n,
            cols: bad.len(),
        }));
    }
    let matrix = SymmetricMatrix::from_rows(&matrix).map_err(CliError::Core)?;
    Ok(ParsedMatrix {
        matrix,
        names,
        format,
    })
}

/// CSV: numeric rows, no header.
pub fn parse_csv_str(text: &str) -> Result<ParsedMatrix, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::Parse {
            path: None,
            line: Some(line + 1),
            message: e.to_string(),
        })?;
        if record.iter().all(|f| f.is_empty()) {
            continue;
        }
        let mut row = Vec::with_capacity(record.len());
        for (col, field) in record.iter().enumerate() {
            let value: f64 = field.parse().map_err(|_| CliError::Parse {
                path: None,
                line: Some(line + 1),
                message: format!("column {}: '{}' is not a number", col + 1, field),
            })?;
            row.push(value);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::Parse {
            path: None,
            line: None,
            message: "empty input".into(),
        });
    }
    build(rows, None, MatrixFormat::Csv)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonMatrix {
    Bare(Vec<Vec<f64>>),
    Named {
        matrix: Vec<Vec<f64>>,
        #[serde(default)]
        names: Option<Vec<String>>,
    },
}

/// JSON: an array of arrays, or `{"matrix": [[…]], "names": […]}`.
pub fn parse_json_str(text: &str) -> Result<ParsedMatrix, CliError> {
    let parsed: JsonMatrix = serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: None,
        line: Some(e.line()),
        message: e.to_string(),
    })?;
    let (matrix, names) = match parsed {
        JsonMatrix::Bare(m) => (m, None),
        JsonMatrix::Named { matrix, names } => (matrix, names),
    };
    if let Some(names) = &names {
        if names.len() != matrix.len() {
            return Err(CliError::Parse {
                path: None,
                line: None,
                message: format!("{} names for {} rows", names.len(), matrix.len()),
            });
        }
    }
    if matrix.is_empty() {
        return Err(CliError::Parse {
            path: None,
            line: None,
            message: "empty matrix".into(),
        });
    }
    build(matrix, names, MatrixFormat::Json)
}

/// PHYLIP square distance matrix: a count line, then `name` plus exactly
/// `n` values per row. The lower-triangular variant is rejected because its
/// diagonal handling is ambiguous.
pub fn parse_phylip_str(text: &str) -> Result<ParsedMatrix, CliError> {
    let parse_err = |line: usize, message: String| CliError::Parse {
        path: None,
        line: Some(line),
        message,
    };
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty input".into()))?;
    let n: usize = header.trim().parse().map_err(|_| {
        parse_err(
            header_no + 1,
            format!("expected a taxon count, got '{}'", header.trim()),
        )
    })?;
    if n == 0 {
        return Err(parse_err(
            header_no + 1,
            "taxon count must be positive".into(),
        ));
    }

    let mut names = Vec::with_capacity(n);
    let mut rows = Vec::with_capacity(n);
    for row_idx in 0..n {
        let (line_no, line) = lines.next().ok_or_else(|| {
            parse_err(
                header_no + 1 + row_idx + 1,
                format!("expected {n} rows, found {row_idx}"),
            )
        })?;
        let mut fields = line.split_whitespace();
        let name = fields.next().expect("non-empty line has a first token");
        let values: Vec<&str> = fields.collect();
        if values.len() == row_idx && n >= 2 {
            return Err(parse_err(
                line_no + 1,
                "this looks like a lower-triangular PHYLIP matrix; only the square variant is supported".into(),
            ));
        }
        if values.len() != n {
            return Err(parse_err(
                line_no + 1,
                format!("row '{}' has {} values, expected {}", name, values.len(), n),
            ));
        }
        let mut row = Vec::with_capacity(n);
        for (col, field) in values.iter().enumerate() {
            let value: f64 = field.parse().map_err(|_| {
                parse_err(
                    line_no + 1,
                    format!("column {}: '{}' is not a number", col + 2, field),
                )
            })?;
            row.push(value);
        }
        names.push(name.to_string());
        rows.push(row);
    }
    if let Some((line_no, line)) = lines.next() {
        return Err(parse_err(
            line_no + 1,
            format!("unexpected trailing content: '{}'", line.trim()),
        ));
    }
    build(rows, Some(names), MatrixFormat::Phylip)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round() {
        let parsed = parse_csv_str("2,1\n1,2\n").unwrap();
        assert_eq!(parsed.matrix.rows(), vec![vec![2.0, 1.0], vec![1.0, 2.0]]);
        assert_eq!(parsed.names, None);
    }

    #[test]
    fn csv_rejects_asymmetry() {
        let err = parse_csv_str("1,2\n3,4\n").unwrap_err();
        assert_eq!(err.code(), "not_symmetric");
    }

    #[test]
    fn csv_reports_position() {
        let err = parse_csv_str("1,x\n2,1\n").unwrap_err();
        assert_eq!(err.code(), "parse_error");
        assert!(err.to_string().contains("column 2"));
    }

    #[test]
    fn json_bare_and_named() {
        let parsed = parse_json_str("[[2,1],[1,2]]").unwrap();
        assert_eq!(parsed.matrix.order(), 2);
        let parsed = parse_json_str(r#"{"matrix": [[0,1],[1,0]], "names": ["A","B"]}"#).unwrap();
        assert_eq!(parsed.names, Some(vec!["A".into(), "B".into()]));
        assert!(parse_json_str(r#"{"matrix": [[0,1],[1,0]], "names": ["A"]}"#).is_err());
    }

    #[test]
    fn phylip_square() {
        let parsed = parse_phylip_str("3\nA 0 1 2\nB 1 0 1\nC 2 1 0\n").unwrap();
        assert_eq!(parsed.names, Some(vec!["A".into(), "B".into(), "C".into()]));
        assert_eq!(parsed.matrix.get(0, 2), 2.0);
        assert_eq!(parsed.matrix.get(2, 1), 1.0);
    }

    #[test]
    fn phylip_rejects_lower_triangular() {
        let err = parse_phylip_str("3\nA\nB 1\nC 2 1\n").unwrap_err();
        assert!(err.to_string().contains("lower-triangular"));
    }

    #[test]
    fn phylip_rejects_bad_counts() {
        assert!(parse_phylip_str("x\nA 0\n").is_err());
        assert!(parse_phylip_str("2\nA 0 1\n").is_err());
        assert!(parse_phylip_str("1\nA 0\nB 0\n").is_err());
    }

    #[test]
    fn detection_rules() {
        let p = Path::new("input.bin");
        assert_eq!(detect_format(p, "[[1]]"), MatrixFormat::Json);
        assert_eq!(detect_format(p, " 3\nA 0 0 0\n"), MatrixFormat::Phylip);
        assert_eq!(detect_format(p, "1,2\n"), MatrixFormat::Csv);
        assert_eq!(
            detect_format(Path::new("m.csv"), "[[1]]"),
            MatrixFormat::Csv
        );
        assert_eq!(
            detect_format(Path::new("m.phy"), "1,2"),
            MatrixFormat::Phylip
        );
    }
}
