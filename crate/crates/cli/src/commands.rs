use std::fs;

use rayon::prelude::*;
use serde::Serialize;
use structinfo::analysis::{self, distinctness_experiment};
use structinfo::format::fmt9;
use structinfo::io::parse_graph;
use structinfo::{audit_estimate, degree_partition, Error, Graph, IeVector, Reference};

use crate::render;
use crate::{Format, RunConfig};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INTERNAL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

/// What a command prints and how it exits.
pub struct Outcome {
    pub stdout: String,
    pub stderr: Vec<String>,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: Vec::new(),
            code: EXIT_OK,
        }
    }

    fn fail(failure: Failure) -> Self {
        Self {
            stdout: String::new(),
            stderr: vec![format!("error: {}: {}", failure.file, failure.error)],
            code: failure.code,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
struct Failure {
    file: String,
    error: String,
    #[serde(skip)]
    code: u8,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Graph(_) | Error::NoBaseNode | Error::TooLarge { .. } => EXIT_INPUT,
        _ => EXIT_INTERNAL,
    }
}

fn failure(file: &str, e: &Error) -> Failure {
    Failure {
        file: file.to_string(),
        error: e.to_string(),
        code: exit_code(e),
    }
}

fn load(path: &str) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        file: path.to_string(),
        error: e.to_string(),
        code: EXIT_INPUT,
    })?;
    parse_graph(&text).map_err(|e| failure(path, &e))
}

fn reference_for(g: &Graph, config: &RunConfig) -> Reference {
    config.reference.unwrap_or(if g.base_node().is_some() {
        Reference::BaseNode
    } else {
        Reference::Center
    })
}

fn reference_name(r: Reference) -> &'static str {
    match r {
        Reference::Center => "center",
        Reference::BaseNode => "bn",
    }
}

fn ie_cells(ie: &IeVector) -> Vec<String> {
    ie.components().iter().map(|&x| fmt9(x)).collect()
}

fn with_ie_headers<'a>(prefix: &[&'a str]) -> Vec<&'a str> {
    let mut h = prefix.to_vec();
    h.extend(IeVector::FIELD_NAMES);
    h
}

/// Worst exit code among failures, preferring internal errors.
fn batch_code(failures: &[Failure]) -> u8 {
    if failures.iter().any(|f| f.code == EXIT_INTERNAL) {
        EXIT_INTERNAL
    } else if failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_INPUT
    }
}

fn failure_lines(failures: &[Failure]) -> Vec<String> {
    let mut lines: Vec<String> = failures
        .iter()
        .map(|f| format!("error: {}: {}", f.file, f.error))
        .collect();
    if !failures.is_empty() {
        lines.push(format!("{} input(s) failed", failures.len()));
    }
    lines
}

#[derive(Debug, Serialize)]
struct EstimateRecord {
    file: String,
    vertex_count: usize,
    branch_count: usize,
    reference: &'static str,
    reference_vertex: String,
    ie: IeVector,
}

#[derive(Serialize)]
struct Batch<T> {
    results: Vec<T>,
    failures: Vec<Failure>,
}

pub fn estimate(paths: &[String], config: &RunConfig) -> Outcome {
    let outcomes: Vec<Result<EstimateRecord, Failure>> = paths
        .par_iter()
        .map(|path| {
            let g = load(path)?;
            let reference = reference_for(&g, config);
            let e = structinfo::estimate(&g, reference, &config.options).map_err(|e| failure(path, &e))?;
            Ok(EstimateRecord {
                file: path.clone(),
                vertex_count: g.vertex_count(),
                branch_count: g.branch_count(),
                reference: reference_name(reference),
                reference_vertex: g.label(e.reference_vertex),
                ie: e.ie,
            })
        })
        .collect();
    let (results, failures): (Vec<_>, Vec<_>) = outcomes.into_iter().partition(Result::is_ok);
    let results: Vec<EstimateRecord> = results.into_iter().map(Result::unwrap).collect();
    let failures: Vec<Failure> = failures.into_iter().map(|r| r.unwrap_err()).collect();

    let headers = with_ie_headers(&["file", "vertex_count", "branch_count", "reference", "reference_vertex"]);
    let rows: Vec<Vec<String>> = results
        .iter()
        .map(|r| {
            let mut row = vec![
                r.file.clone(),
                r.vertex_count.to_string(),
                r.branch_count.to_string(),
                r.reference.to_string(),
                r.reference_vertex.clone(),
            ];
            row.extend(ie_cells(&r.ie));
            row
        })
        .collect();
    let stdout = match config.format {
        Format::Json => render::json(&Batch {
            results,
            failures: failures.clone(),
        }),
        Format::Csv => render::csv(&headers, &rows),
        Format::Table => render::table(&headers, &rows),
    };
    Outcome {
        stdout,
        stderr: failure_lines(&failures),
        code: batch_code(&failures),
    }
}

pub fn rank(paths: &[String], config: &RunConfig) -> Outcome {
    let loaded: Vec<Result<Graph, Failure>> = paths.par_iter().map(|p| load(p)).collect();
    let mut graphs = Vec::new();
    let mut failures = Vec::new();
    for (path, r) in paths.iter().zip(loaded) {
        match r {
            Ok(g) => graphs.push((path.clone(), g)),
            Err(f) => failures.push(f),
        }
    }
    let entries = match analysis::rank_structures(&graphs, config.reference, &config.options) {
        Ok(e) => e,
        Err(e) => {
            // a single graph failing (e.g. no base node) fails the ranking input set
            failures.push(failure("<ranking>", &e));
            return Outcome {
                stdout: String::new(),
                stderr: failure_lines(&failures),
                code: batch_code(&failures),
            };
        }
    };
    let headers = with_ie_headers(&["rank", "file"]);
    let rows: Vec<Vec<String>> = entries
        .iter()
        .map(|e| {
            let mut row = vec![e.rank.to_string(), e.id.clone()];
            row.extend(ie_cells(&e.ie));
            row
        })
        .collect();
    let stdout = match config.format {
        Format::Json => render::json(&Batch {
            results: entries,
            failures: failures.clone(),
        }),
        Format::Csv => render::csv(&headers, &rows),
        Format::Table => render::table(&headers, &rows),
    };
    Outcome {
        stdout,
        stderr: failure_lines(&failures),
        code: batch_code(&failures),
    }
}

pub fn bn_sweep(path: &str, config: &RunConfig) -> Outcome {
    let g = match load(path) {
        Ok(g) => g,
        Err(f) => return Outcome::fail(f),
    };
    let sweep = match analysis::bn_sweep(&g, config.tolerance, &config.options) {
        Ok(s) => s,
        Err(e) => return Outcome::fail(failure(path, &e)),
    };
    let headers = with_ie_headers(&["vertex", "label", "distance_to_center"]);
    let rows: Vec<Vec<String>> = sweep
        .rows
        .iter()
        .map(|r| {
            let mut row = vec![r.vertex.to_string(), r.label.clone(), r.distance_to_center.to_string()];
            row.extend(ie_cells(&r.ie));
            row
        })
        .collect();
    let labels = |vs: &[usize]| vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ");
    let stdout = match config.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                file: &'a str,
                #[serde(flatten)]
                sweep: &'a analysis::BnSweep,
            }
            render::json(&Out {
                file: path,
                sweep: &sweep,
            })
        }
        Format::Csv => render::csv(&headers, &rows),
        Format::Table => {
            let mut s = render::table(&headers, &rows);
            s.push_str(&format!(
                "\ncenter: {}\nargmin amplitude: {}\nargmin h1: {}\nargmin h2: {}\ncenter attains minimum: {}\n",
                g.label(sweep.center.vertex),
                labels(&sweep.argmin_amplitude),
                labels(&sweep.argmin_h1),
                labels(&sweep.argmin_h2),
                sweep.center_attains_minimum
            ));
            s
        }
    };
    Outcome::ok(stdout)
}

pub fn enumerate_trees(n: usize, distinctness: bool, config: &RunConfig) -> Outcome {
    let label = format!("enumerate-trees {n}");
    if distinctness {
        let report = match distinctness_experiment(n, config.tolerance, &config.options) {
            Ok(r) => r,
            Err(e) => return Outcome::fail(failure(&label, &e)),
        };
        let stdout = match config.format {
            Format::Json => {
                #[derive(Serialize)]
                struct Out<'a> {
                    summary: String,
                    #[serde(flatten)]
                    report: &'a analysis::DistinctnessReport,
                }
                render::json(&Out {
                    summary: report.summary(),
                    report: &report,
                })
            }
            Format::Csv => {
                let headers = with_ie_headers(&["index", "partition"]);
                let rows: Vec<Vec<String>> = report
                    .trees
                    .iter()
                    .map(|t| {
                        let mut row = vec![t.index.to_string(), partition_string(&t.partition)];
                        row.extend(ie_cells(&t.ie));
                        row
                    })
                    .collect();
                render::csv(&headers, &rows)
            }
            Format::Table => {
                let headers = ["index", "partition", "h1", "h2", "amplitude", "phase"];
                let rows: Vec<Vec<String>> = report
                    .trees
                    .iter()
                    .map(|t| {
                        vec![
                            t.index.to_string(),
                            partition_string(&t.partition),
                            fmt9(t.ie.h1),
                            fmt9(t.ie.h2),
                            fmt9(t.ie.amplitude),
                            fmt9(t.ie.phase),
                        ]
                    })
                    .collect();
                let mut s = render::table(&headers, &rows);
                s.push_str(&format!("\n{}\n", report.summary()));
                for (a, b) in &report.collisions {
                    s.push_str(&format!("collision: {a} {b}\n"));
                }
                s
            }
        };
        return Outcome::ok(stdout);
    }

    let trees = match analysis::enumerate_trees(n) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(failure(&label, &e)),
    };
    #[derive(Serialize)]
    struct TreeOut {
        index: usize,
        partition: Vec<usize>,
        edges: Vec<(usize, usize)>,
    }
    let listed: Vec<TreeOut> = trees
        .iter()
        .enumerate()
        .map(|(index, t)| TreeOut {
            index,
            partition: degree_partition(t).parts,
            edges: t.edges().to_vec(),
        })
        .collect();
    let partition_count = listed
        .iter()
        .map(|t| &t.partition)
        .collect::<std::collections::BTreeSet<_>>()
        .len();
    let summary = format!("{} trees, {} partitions", listed.len(), partition_count);
    let rows: Vec<Vec<String>> = listed
        .iter()
        .map(|t| {
            vec![
                t.index.to_string(),
                partition_string(&t.partition),
                t.edges
                    .iter()
                    .map(|(u, v)| format!("{u}-{v}"))
                    .collect::<Vec<_>>()
                    .join(" "),
            ]
        })
        .collect();
    let headers = ["index", "partition", "edges"];
    let stdout = match config.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                summary: String,
                vertex_count: usize,
                tree_count: usize,
                partition_count: usize,
                trees: Vec<TreeOut>,
            }
            render::json(&Out {
                summary,
                vertex_count: n,
                tree_count: listed.len(),
                partition_count,
                trees: listed,
            })
        }
        Format::Csv => render::csv(&headers, &rows),
        Format::Table => {
            let mut s = render::table(&headers, &rows);
            s.push_str(&format!("\n{summary}\n"));
            s
        }
    };
    Outcome::ok(stdout)
}

fn partition_string(parts: &[usize]) -> String {
    parts.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

pub fn bounds(path: &str, config: &RunConfig) -> Outcome {
    let g = match load(path) {
        Ok(g) => g,
        Err(f) => return Outcome::fail(f),
    };
    let reference = reference_for(&g, config);
    let report = match structinfo::estimate(&g, reference, &config.options).and_then(|e| audit_estimate(&e)) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(failure(path, &e)),
    };
    let headers = ["component", "achieved", "bound", "gap"];
    let rows: Vec<Vec<String>> = report
        .components
        .iter()
        .map(|c| vec![c.component.to_string(), fmt9(c.achieved), fmt9(c.bound), fmt9(c.gap)])
        .collect();
    let stdout = match config.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                file: &'a str,
                reference: &'static str,
                #[serde(flatten)]
                report: &'a structinfo::ExtremalReport,
            }
            render::json(&Out {
                file: path,
                reference: reference_name(reference),
                report: &report,
            })
        }
        Format::Csv => render::csv(&headers, &rows),
        Format::Table => {
            let mut s = render::table(&headers, &rows);
            let sens: Vec<Vec<String>> = report
                .sensitivities
                .iter()
                .map(|x| vec![x.scenario.name().to_string(), x.component.to_string(), fmt9(x.lambda)])
                .collect();
            s.push('\n');
            s.push_str(&render::table(&["scenario", "component", "lambda"], &sens));
            for note in &report.notes {
                s.push_str(&format!("note: {note}\n"));
            }
            s
        }
    };
    Outcome::ok(stdout)
}
