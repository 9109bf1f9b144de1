//! Parameter sweep over (taxonomy, f_min, ol_min) and its per-parameter summary.

use std::fmt::Write;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use super::metrics::{default_beta, evaluate, EvalResult};
use crate::mapper::{Mapper, MapperConfig};
use crate::vocab::{MappingSet, Vocabulary};
use crate::wordnet::SynsetSet;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("the grid enables the salient taxonomy but no taxonomy was supplied")]
    MissingTaxonomy,
    #[error("worker count must be positive")]
    NoWorkers,
    #[error("empty grid")]
    EmptyGrid,
    #[error(transparent)]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),
}

/// Default f_min options: 0..=5, 10..=100 in steps of 10, then 150 and 200.
pub const DEFAULT_F_MIN: [u32; 18] = [
    0, 1, 2, 3, 4, 5, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100, 150, 200,
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepGrid {
    pub taxonomy: Vec<bool>,
    pub ol_min: Vec<usize>,
    pub f_min: Vec<u32>,
}

impl Default for SweepGrid {
    fn default() -> Self {
        SweepGrid {
            taxonomy: vec![false, true],
            ol_min: (0..=10).collect(),
            f_min: DEFAULT_F_MIN.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridPoint {
    pub taxonomy: bool,
    pub f_min: u32,
    pub ol_min: usize,
}

impl SweepGrid {
    pub fn cardinality(&self) -> usize {
        self.taxonomy.len() * self.ol_min.len() * self.f_min.len()
    }

    /// Grid points ordered by (taxonomy, f_min, ol_min), duplicates removed.
    pub fn points(&self) -> Vec<GridPoint> {
        let mut taxonomy = self.taxonomy.clone();
        let mut f_min = self.f_min.clone();
        let mut ol_min = self.ol_min.clone();
        taxonomy.sort();
        taxonomy.dedup();
        f_min.sort();
        f_min.dedup();
        ol_min.sort();
        ol_min.dedup();
        let mut out = Vec::with_capacity(taxonomy.len() * f_min.len() * ol_min.len());
        for &t in &taxonomy {
            for &f in &f_min {
                for &o in &ol_min {
                    out.push(GridPoint {
                        taxonomy: t,
                        f_min: f,
                        ol_min: o,
                    });
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub point: GridPoint,
    pub result: EvalResult<f64>,
    pub wall_time: Duration,
}

pub struct SweepOutput {
    pub rows: Vec<SweepRow>,
    pub warnings: Vec<String>,
}

/// Runs the mapper and evaluation at every grid point on `workers` threads.
///
/// Rows come back in grid order regardless of scheduling.
pub fn run_sweep(
    vocab: &Vocabulary,
    mapper: &Mapper<'_>,
    gold: &MappingSet,
    grid: &SweepGrid,
    taxonomy: Option<Arc<SynsetSet>>,
    workers: usize,
) -> Result<SweepOutput, SweepError> {
    if workers == 0 {
        return Err(SweepError::NoWorkers);
    }
    let points = grid.points();
    if points.is_empty() {
        return Err(SweepError::EmptyGrid);
    }
    if points.iter().any(|p| p.taxonomy) && taxonomy.is_none() {
        return Err(SweepError::MissingTaxonomy);
    }
    let mut warnings = Vec::new();
    if !gold.mappings().iter().any(|m| vocab.get(&m.term).is_some()) {
        warnings.push("gold standard shares no terms with the vocabulary".to_string());
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()?;
    let rows = pool.install(|| {
        points
            .par_iter()
            .map(|&point| {
                let started = Instant::now();
                let config = MapperConfig {
                    ol_min: point.ol_min,
                    f_min: point.f_min,
                    taxonomy: if point.taxonomy {
                        taxonomy.clone()
                    } else {
                        None
                    },
                    ..Default::default()
                };
                let mapping = mapper.map_vocabulary(vocab, &config);
                let result = evaluate(&mapping, gold, default_beta());
                SweepRow {
                    point,
                    result,
                    wall_time: started.elapsed(),
                }
            })
            .collect()
    });
    Ok(SweepOutput { rows, warnings })
}

fn on_off(flag: bool) -> &'static str {
    if flag {
        "on"
    } else {
        "off"
    }
}

pub const SWEEP_HEADER: &str =
    "taxonomy\tf_min\tol_min\tprecision\trecall\tf_measure\tn_mappings\twall_ms";

/// One line per row. Wall time is written only when `timing` is set (`-`
/// otherwise), so that the default output is reproducible byte for byte.
pub fn write_sweep_tsv(rows: &[SweepRow], timing: bool) -> String {
    let mut out = String::new();
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    for row in rows {
        let r = &row.result;
        let wall = if timing {
            format!("{:.3}", row.wall_time.as_secs_f64() * 1000.0)
        } else {
            "-".to_string()
        };
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{:.6}\t{:.6}\t{:.6}\t{}\t{}",
            on_off(row.point.taxonomy),
            row.point.f_min,
            row.point.ol_min,
            r.precision,
            r.recall,
            r.f_measure,
            r.n_mappings,
            wall
        );
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parameter {
    Taxonomy,
    FMin,
    OlMin,
}

impl Parameter {
    pub const ALL: [Parameter; 3] = [Parameter::Taxonomy, Parameter::FMin, Parameter::OlMin];

    pub fn name(self) -> &'static str {
        match self {
            Parameter::Taxonomy => "taxonomy",
            Parameter::FMin => "f_min",
            Parameter::OlMin => "ol_min",
        }
    }

    fn value_of(self, p: &GridPoint) -> String {
        match self {
            Parameter::Taxonomy => on_off(p.taxonomy).to_string(),
            Parameter::FMin => p.f_min.to_string(),
            Parameter::OlMin => p.ol_min.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub value: String,
    pub mean_precision: f64,
    pub mean_recall: f64,
    pub mean_f: f64,
    pub rows: usize,
    /// Whether this value has the highest mean in the P, R, F column.
    pub best: [bool; 3],
}

/// Mean P, R and F over all rows sharing each value of `parameter`, in first-seen order.
pub fn summarize(rows: &[SweepRow], parameter: Parameter) -> Vec<SummaryRow> {
    let mut groups: Vec<(String, [f64; 3], usize)> = Vec::new();
    for row in rows {
        let value = parameter.value_of(&row.point);
        let idx = match groups.iter().position(|g| g.0 == value) {
            Some(i) => i,
            None => {
                groups.push((value, [0.0; 3], 0));
                groups.len() - 1
            }
        };
        let g = &mut groups[idx];
        g.1[0] += row.result.precision;
        g.1[1] += row.result.recall;
        g.1[2] += row.result.f_measure;
        g.2 += 1;
    }
    let mut out: Vec<SummaryRow> = groups
        .into_iter()
        .map(|(value, sums, n)| SummaryRow {
            value,
            mean_precision: sums[0] / n as f64,
            mean_recall: sums[1] / n as f64,
            mean_f: sums[2] / n as f64,
            rows: n,
            best: [false; 3],
        })
        .collect();
    for col in 0..3 {
        let get = |r: &SummaryRow| [r.mean_precision, r.mean_recall, r.mean_f][col];
        let max = out.iter().map(get).fold(f64::NEG_INFINITY, f64::max);
        for r in out.iter_mut() {
            r.best[col] = get(r) == max;
        }
    }
    out
}

pub const SUMMARY_HEADER: &str = "parameter\tvalue\tmean_precision\tmean_recall\tmean_f_measure";

/// Per-parameter means, best value per column marked with `*`, followed by
/// an `upper_bound` line holding the per-column maxima over all rows.
pub fn write_summary_tsv(rows: &[SweepRow]) -> String {
    let mut out = String::new();
    out.push_str(SUMMARY_HEADER);
    out.push('\n');
    for parameter in Parameter::ALL {
        for s in summarize(rows, parameter) {
            let cell = |v: f64, best: bool| format!("{v:.4}{}", if best { "*" } else { "" });
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                parameter.name(),
                s.value,
                cell(s.mean_precision, s.best[0]),
                cell(s.mean_recall, s.best[1]),
                cell(s.mean_f, s.best[2]),
            );
        }
    }
    let max =
        |f: fn(&EvalResult<f64>) -> f64| rows.iter().map(|r| f(&r.result)).fold(0.0, f64::max);
    let _ = writeln!(
        out,
        "upper_bound\tmax\t{:.4}\t{:.4}\t{:.4}",
        max(|r| r.precision),
        max(|r| r.recall),
        max(|r| r.f_measure)
    );
    out
}
