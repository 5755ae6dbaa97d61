//! Subcommand implementations, kept binary-free so integration tests can
//! drive them directly. Each returns structured data; rendering to text or
//! JSON happens at the edge.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use eigenstrata::combinatorics::{self, Partition};
use eigenstrata::groupoid::{
    fiber_product, transformation_groupoid, FiniteGroup, FiniteGroupoid, GroupAction,
    GroupoidFunctor,
};
use eigenstrata::polytopes;
use eigenstrata::spectral;

use crate::error::CliError;
use crate::ingest::{parse_matrix, FormatChoice};
use crate::report::{build_report, AnalysisReport, ErrorRecord, SCHEMA_VERSION};

#[derive(Debug, Clone, Copy)]
pub struct AnalyzeOptions {
    pub format: FormatChoice,
    pub tol: f64,
    pub include_frame: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            format: FormatChoice::Auto,
            tol: spectral::DEFAULT_REL_TOL,
            include_frame: false,
        }
    }
}

/// Parse and classify one matrix file.
pub fn analyze_file(path: &Path, opts: &AnalyzeOptions) -> Result<AnalysisReport, CliError> {
    if !opts.tol.is_finite() || opts.tol < 0.0 {
        return Err(CliError::Usage(format!(
            "--tol must be a finite nonnegative number, got {}",
            opts.tol
        )));
    }
    let parsed = parse_matrix(path, opts.format)?;
    let analysis = spectral::analyze(&parsed.matrix, opts.tol)?;
    Ok(build_report(
        &path.display().to_string(),
        &parsed,
        &analysis,
        opts.tol,
        opts.include_frame,
    ))
}

/// One entry of a batch run, in input order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BatchRecord {
    Report(Box<AnalysisReport>),
    Error(ErrorRecord),
}

/// Expand inputs (directories become their sorted regular files), then
/// classify each one. `parallel = None` runs serially; `Some(n)` uses a
/// rayon pool with `n` threads (`0` = one per core). Output order always
/// equals input order.
pub fn run_batch(
    inputs: &[PathBuf],
    opts: &AnalyzeOptions,
    parallel: Option<usize>,
) -> Result<Vec<BatchRecord>, CliError> {
    let files = expand_inputs(inputs)?;
    if files.is_empty() {
        return Err(CliError::NoInputs);
    }
    let process = |path: &PathBuf| -> BatchRecord {
        match analyze_file(path, opts) {
            Ok(report) => BatchRecord::Report(Box::new(report)),
            Err(err) => {
                BatchRecord::Error(ErrorRecord::new(Some(path.display().to_string()), &err))
            }
        }
    };
    let records = match parallel {
        None => eigenstrata::batch::map_ordered_seq(&files, process),
        Some(threads) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            pool.install(|| eigenstrata::batch::map_ordered(&files, process))
        }
    };
    Ok(records)
}

/// Exit code of a batch: hard failures dominate, then degenerate inputs.
pub fn batch_exit_code(records: &[BatchRecord]) -> i32 {
    let mut code = 0;
    for record in records {
        if let BatchRecord::Error(e) = record {
            if e.error.code == "degenerate_form" {
                code = code.max(2);
            } else {
                return 1;
            }
        }
    }
    code
}

fn expand_inputs(inputs: &[PathBuf]) -> Result<Vec<PathBuf>, CliError> {
    let mut files = Vec::new();
    for input in inputs {
        if input.is_dir() {
            let mut entries: Vec<PathBuf> = std::fs::read_dir(input)
                .map_err(|e| CliError::Io {
                    path: input.display().to_string(),
                    message: e.to_string(),
                })?
                .filter_map(|entry| entry.ok().map(|e| e.path()))
                .filter(|p| p.is_file())
                .collect();
            entries.sort();
            files.extend(entries);
        } else {
            files.push(input.clone());
        }
    }
    Ok(files)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum EnumerateKind {
    Partitions,
    Coxeter,
    Associahedron,
    Tiling,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionRow {
    pub partition: Vec<usize>,
    pub codim: usize,
    pub orth_isotropy_dim: usize,
    pub flag_dim: usize,
    pub relative_dim: usize,
    pub family_dim: usize,
    pub normalizer_order: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FaceListing {
    /// `"dim"` for the Coxeter complex, `"codim"` for the associahedron.
    pub graded_by: String,
    pub grade: usize,
    pub count: usize,
    pub faces: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EnumerateReport {
    Partitions {
        schema: u32,
        n: usize,
        count: usize,
        rows: Vec<PartitionRow>,
    },
    Coxeter {
        schema: u32,
        n: usize,
        fvector: Vec<u64>,
        alternating_sum: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        faces: Option<FaceListing>,
    },
    Associahedron {
        schema: u32,
        n: usize,
        fvector: Vec<u64>,
        alternating_sum: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        faces: Option<FaceListing>,
    },
    Tiling {
        schema: u32,
        n: usize,
        chambers: u64,
        #[serde(rename = "tiles_M")]
        tiles_moduli: u64,
        #[serde(rename = "tiles_OM")]
        tiles_oriented: u64,
    },
}

/// The `enumerate` subcommand. `grade` selects a face dimension (Coxeter)
/// or codimension (associahedron); it is rejected for the other kinds.
pub fn cmd_enumerate(
    kind: EnumerateKind,
    n: usize,
    grade: Option<usize>,
) -> Result<EnumerateReport, CliError> {
    match kind {
        EnumerateKind::Partitions => {
            reject_grade(grade, "partitions")?;
            let parts = combinatorics::partitions_of(n)?;
            let rows = parts.iter().map(partition_row).collect::<Vec<_>>();
            Ok(EnumerateReport::Partitions {
                schema: SCHEMA_VERSION,
                n,
                count: rows.len(),
                rows,
            })
        }
        EnumerateKind::Coxeter => {
            let fv = polytopes::coxeter_fvector(n)?;
            let faces = match grade {
                None => None,
                Some(dim) => {
                    let list = polytopes::coxeter_faces(n, dim)?;
                    Some(FaceListing {
                        graded_by: "dim".into(),
                        grade: dim,
                        count: list.len(),
                        faces: list.iter().map(|f| f.to_string()).collect(),
                    })
                }
            };
            Ok(EnumerateReport::Coxeter {
                schema: SCHEMA_VERSION,
                n,
                fvector: fv.counts().to_vec(),
                alternating_sum: fv.alternating_sum(),
                faces,
            })
        }
        EnumerateKind::Associahedron => {
            let fv = polytopes::associahedron_fvector(n)?;
            let faces = match grade {
                None => None,
                Some(codim) => {
                    let list = polytopes::associahedron_faces(n, codim)?;
                    Some(FaceListing {
                        graded_by: "codim".into(),
                        grade: codim,
                        count: list.len(),
                        faces: list.iter().map(|f| f.to_string()).collect(),
                    })
                }
            };
            Ok(EnumerateReport::Associahedron {
                schema: SCHEMA_VERSION,
                n,
                fvector: fv.counts().to_vec(),
                alternating_sum: fv.alternating_sum(),
                faces,
            })
        }
        EnumerateKind::Tiling => {
            reject_grade(grade, "tiling")?;
            let t = polytopes::tiling_stats(n)?;
            Ok(EnumerateReport::Tiling {
                schema: SCHEMA_VERSION,
                n,
                chambers: t.chambers,
                tiles_moduli: t.tiles_moduli,
                tiles_oriented: t.tiles_oriented,
            })
        }
    }
}

fn reject_grade(grade: Option<usize>, kind: &str) -> Result<(), CliError> {
    match grade {
        Some(_) => Err(CliError::Usage(format!(
            "'{kind}' does not take a dimension argument"
        ))),
        None => Ok(()),
    }
}

fn partition_row(p: &Partition) -> PartitionRow {
    let dims = combinatorics::stratum_dims(p);
    PartitionRow {
        partition: p.parts().to_vec(),
        codim: dims.codim,
        orth_isotropy_dim: dims.orth_isotropy_dim,
        flag_dim: dims.flag_dim,
        relative_dim: dims.relative_dim,
        family_dim: dims.family_dim,
        normalizer_order: combinatorics::normalizer_order(p).to_string(),
    }
}

/// One demonstration scenario of the groupoid layer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupoidScenario {
    pub schema: u32,
    pub kind: String,
    pub name: String,
    pub objects: usize,
    pub morphisms: usize,
    pub orbits: usize,
    /// Exact rational, e.g. `"1/2"`.
    pub cardinality: String,
    /// Isotropy group order at one representative per orbit.
    pub isotropy_orders: Vec<usize>,
    pub discrete: bool,
}

fn scenario(name: &str, g: &FiniteGroupoid) -> GroupoidScenario {
    let (orbits, cardinality) = g.orbits_and_cardinality();
    let isotropy_orders = orbits
        .iter()
        .map(|orbit| g.isotropy(orbit[0]).expect("representative exists").len())
        .collect();
    GroupoidScenario {
        schema: SCHEMA_VERSION,
        kind: "groupoid_demo".into(),
        name: name.to_string(),
        objects: g.object_count(),
        morphisms: g.morphism_count(),
        orbits: orbits.len(),
        cardinality: cardinality.to_string(),
        isotropy_orders,
        discrete: g.is_discrete(),
    }
}

/// The `groupoid-demo` subcommand: a fixed set of worked examples of
/// transformation groupoids and fiber products.
pub fn cmd_groupoid_demo() -> Result<Vec<GroupoidScenario>, CliError> {
    let mut out = Vec::new();

    let natural = transformation_groupoid(&GroupAction::symmetric_natural(3)?)?;
    out.push(scenario(
        "permutations of 3 labels acting on the labels",
        &natural,
    ));

    let z2_point = transformation_groupoid(&GroupAction::trivial(
        FiniteGroup::cyclic(2)?,
        vec!["pt".into()],
    )?)?;
    out.push(scenario(
        "order-2 group as a one-object groupoid",
        &z2_point,
    ));

    let two_points = transformation_groupoid(&GroupAction::trivial(
        FiniteGroup::trivial(),
        vec!["a".into(), "b".into()],
    )?)?;
    out.push(scenario(
        "trivial group on two points (discrete)",
        &two_points,
    ));

    let bz3 = transformation_groupoid(&GroupAction::trivial(
        FiniteGroup::cyclic(3)?,
        vec!["pt".into()],
    )?)?;
    let point = transformation_groupoid(&GroupAction::trivial(
        FiniteGroup::trivial(),
        vec!["pt".into()],
    )?)?;
    let f = GroupoidFunctor::constant(&point, &bz3, 0)?;
    let g = GroupoidFunctor::constant(&point, &bz3, 0)?;
    let loops = fiber_product(&f, &g)?;
    out.push(scenario(
        "fiber product: point over BZ3 against itself (loop count)",
        &loops.groupoid,
    ));

    let f = GroupoidFunctor::identity(&natural);
    let g = GroupoidFunctor::identity(&natural);
    let fp = fiber_product(&f, &g)?;
    out.push(scenario(
        "fiber product of identity functors (equivalent to the base)",
        &fp.groupoid,
    ));

    Ok(out)
}

// ---------------------------------------------------------------------------
// text rendering

pub fn render_enumerate_text(report: &EnumerateReport) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    match report {
        EnumerateReport::Partitions { n, count, rows, .. } => {
            let _ = writeln!(out, "partitions of {n}: {count}");
            let _ = writeln!(
                out,
                "{:<16} {:>6} {:>9} {:>6} {:>9} {:>7} {:>14}",
                "partition", "codim", "isotropy", "flag", "relative", "family", "normalizer"
            );
            for row in rows {
                let partition = row
                    .partition
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join("+");
                let _ = writeln!(
                    out,
                    "{:<16} {:>6} {:>9} {:>6} {:>9} {:>7} {:>14}",
                    partition,
                    row.codim,
                    row.orth_isotropy_dim,
                    row.flag_dim,
                    row.relative_dim,
                    row.family_dim,
                    row.normalizer_order
                );
            }
        }
        EnumerateReport::Coxeter {
            n,
            fvector,
            alternating_sum,
            faces,
            ..
        } => {
            let _ = writeln!(out, "coxeter complex on {n} labels");
            let _ = writeln!(out, "f-vector: {}", join_counts(fvector));
            let _ = writeln!(out, "alternating sum: {alternating_sum}");
            if let Some(listing) = faces {
                let _ = writeln!(
                    out,
                    "faces of {} {}: {}",
                    listing.graded_by, listing.grade, listing.count
                );
                for face in &listing.faces {
                    let _ = writeln!(out, "  {face}");
                }
            }
        }
        EnumerateReport::Associahedron {
            n,
            fvector,
            alternating_sum,
            faces,
            ..
        } => {
            let _ = writeln!(out, "associahedron on {n} letters");
            let _ = writeln!(out, "f-vector: {}", join_counts(fvector));
            let _ = writeln!(out, "alternating sum: {alternating_sum}");
            if let Some(listing) = faces {
                let _ = writeln!(
                    out,
                    "faces of {} {}: {}",
                    listing.graded_by, listing.grade, listing.count
                );
                for face in &listing.faces {
                    let _ = writeln!(out, "  {face}");
                }
            }
        }
        EnumerateReport::Tiling {
            n,
            chambers,
            tiles_moduli,
            tiles_oriented,
            ..
        } => {
            let _ = writeln!(out, "tiling data for {n} labels");
            let _ = writeln!(out, "chambers: {chambers}");
            let _ = writeln!(out, "moduli-space tiles: {tiles_moduli}");
            let _ = writeln!(out, "oriented double-cover tiles: {tiles_oriented}");
        }
    }
    out
}

pub fn render_scenarios_text(scenarios: &[GroupoidScenario]) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    for s in scenarios {
        let _ = writeln!(out, "scenario: {}", s.name);
        let _ = writeln!(
            out,
            "  objects {}, morphisms {}, orbits {}, cardinality {}, discrete {}",
            s.objects, s.morphisms, s.orbits, s.cardinality, s.discrete
        );
        let orders = s
            .isotropy_orders
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(out, "  isotropy orders by orbit: [{orders}]");
    }
    out
}

fn join_counts(counts: &[u64]) -> String {
    let inner = counts
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    format!("({inner})")
}
