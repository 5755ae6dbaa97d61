use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use eigenstrata_cli::commands::{self, AnalyzeOptions, BatchRecord, EnumerateKind};
use eigenstrata_cli::error::CliError;
use eigenstrata_cli::ingest::FormatChoice;
use eigenstrata_cli::report::{self, ErrorRecord};

#[derive(Debug, Parser)]
#[command(name = "eigenstrata", version)]
#[command(
    about = "Classify symmetric matrices by eigenvalue multiplicity and locate their normalized spectra in the Coxeter complex and the associahedron"
)]
struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,

    /// Human-readable text output (default)
    #[arg(long, global = true, conflicts_with = "json")]
    text: bool,

    /// Write output to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify one matrix file (CSV, JSON, or PHYLIP distance matrix)
    Analyze {
        path: PathBuf,

        /// Input format; 'auto' detects from extension and content
        #[arg(long, value_enum, default_value = "auto")]
        format: FormatChoice,

        /// Relative clustering tolerance for eigenvalue multiplicities
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,

        /// Include the orthogonal frame in the report
        #[arg(long)]
        frame: bool,
    },

    /// Enumerate partitions, complex faces, or tiling counts
    Enumerate {
        /// What to enumerate
        #[arg(value_enum)]
        kind: EnumerateKind,

        /// Order parameter (matrix size / number of labels)
        n: usize,

        /// Face dimension (coxeter) or codimension (associahedron)
        dim: Option<usize>,
    },

    /// Classify many matrix files; directories expand to their files
    Batch {
        /// Files or directories
        inputs: Vec<PathBuf>,

        #[arg(long, value_enum, default_value = "auto")]
        format: FormatChoice,

        #[arg(long, default_value_t = 1e-8)]
        tol: f64,

        #[arg(long)]
        frame: bool,

        /// Process inputs on N threads (0 = one per core); output order is
        /// unchanged
        #[arg(long, value_name = "N")]
        parallel: Option<usize>,
    },

    /// Worked examples of transformation groupoids and fiber products
    GroupoidDemo,
}

fn main() -> ExitCode {
    // exit 2 is reserved for degenerate forms, so usage errors map to 1
    // (help and version keep exit 0)
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok((output, code)) => {
            print!("{output}");
            let _ = std::io::stdout().flush();
            ExitCode::from(code)
        }
        Err(err) => {
            if json {
                let record = ErrorRecord::new(None, &err);
                println!(
                    "{}",
                    serde_json::to_string(&record).expect("error records serialize")
                );
            } else {
                eprintln!("error: {err}");
            }
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<(String, u8), CliError> {
    let json = cli.json;
    let (body, code) = match cli.command {
        Command::Analyze {
            path,
            format,
            tol,
            frame,
        } => {
            let opts = AnalyzeOptions {
                format,
                tol,
                include_frame: frame,
            };
            let report = commands::analyze_file(&path, &opts)?;
            let body = if json {
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&report).expect("reports serialize")
                )
            } else {
                report::render_text(&report)
            };
            (body, 0)
        }
        Command::Enumerate { kind, n, dim } => {
            let report = commands::cmd_enumerate(kind, n, dim)?;
            let body = if json {
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&report).expect("reports serialize")
                )
            } else {
                commands::render_enumerate_text(&report)
            };
            (body, 0)
        }
        Command::Batch {
            inputs,
            format,
            tol,
            frame,
            parallel,
        } => {
            let opts = AnalyzeOptions {
                format,
                tol,
                include_frame: frame,
            };
            let records = commands::run_batch(&inputs, &opts, parallel)?;
            let mut body = String::new();
            let mut ok = 0usize;
            let mut failed = 0usize;
            for record in &records {
                match record {
                    BatchRecord::Report(r) => {
                        ok += 1;
                        if json {
                            body.push_str(&serde_json::to_string(r).expect("reports serialize"));
                            body.push('\n');
                        } else {
                            body.push_str(&report::render_text(r));
                            body.push('\n');
                        }
                    }
                    BatchRecord::Error(e) => {
                        failed += 1;
                        if json {
                            body.push_str(&serde_json::to_string(e).expect("records serialize"));
                            body.push('\n');
                        } else {
                            body.push_str(&format!(
                                "error [{}] {}: {}\n\n",
                                e.error.code,
                                e.input.as_deref().unwrap_or("<unknown>"),
                                e.error.message
                            ));
                        }
                    }
                }
            }
            eprintln!("batch: {ok} succeeded, {failed} failed");
            (body, commands::batch_exit_code(&records) as u8)
        }
        Command::GroupoidDemo => {
            let scenarios = commands::cmd_groupoid_demo()?;
            let body = if json {
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&scenarios).expect("scenarios serialize")
                )
            } else {
                commands::render_scenarios_text(&scenarios)
            };
            (body, 0)
        }
    };

    if let Some(out_path) = cli.out {
        std::fs::write(&out_path, &body).map_err(|e| CliError::Io {
            path: out_path.display().to_string(),
            message: e.to_string(),
        })?;
        Ok((String::new(), code))
    } else {
        Ok((body, code))
    }
}
