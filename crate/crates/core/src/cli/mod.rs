//! The `wnlink` command-line front end.
//!
//! Exit codes: 0 on success, 1 when input data cannot be read or is invalid,
//! 2 on usage errors.

mod config;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

pub use self::config::{config_path, merge, parse_config};

use crate::eval::{
    default_beta, evaluate, run_sweep, trigram_baseline_mapping, write_summary_tsv,
    write_sweep_tsv, SweepGrid, TrigramStrategy,
};
use crate::mapper::{random_baseline_mapping, Mapper, MapperConfig};
use crate::vocab::{
    load_gold, parse_vocabulary_ntriples, serialize_mappings_ntriples, serialize_mappings_tsv,
    MappingSet, Vocabulary,
};
use crate::wordnet::{parse_roots, SynsetSet, WordNetStore, DEFAULT_ROOTS};

#[derive(Debug, Parser)]
#[command(
    name = "wnlink",
    version,
    about = "Map SKOS vocabularies onto WordNet noun synsets"
)]
#[command(args_override_self = true)]
struct Cli {
    /// File of `key = value` settings; command-line flags take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Map a vocabulary onto WordNet with one parameter setting.
    Map(MapArgs),
    /// Map and evaluate over a parameter grid.
    Sweep(SweepArgs),
    /// Score a mapping file against a gold standard.
    Eval(EvalArgs),
    /// Write the salient taxonomy spanned by a roots file.
    Taxonomy(TaxonomyArgs),
    /// Produce a baseline mapping.
    Baseline(BaselineArgs),
}

#[derive(Debug, Args)]
struct Inputs {
    /// SKOS vocabulary in N-Triples.
    #[arg(long)]
    vocab: PathBuf,
    /// WordNet: a JSON fixture or a WNDB `dict` directory.
    #[arg(long)]
    wordnet: PathBuf,
}

#[derive(Debug, Args)]
struct MapArgs {
    #[command(flatten)]
    inputs: Inputs,
    /// Restrict candidates to the taxonomy below these roots.
    #[arg(long)]
    taxonomy_roots: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    min_overlap: usize,
    #[arg(long, default_value_t = 0)]
    min_freq: u32,
    /// Also try altLabels when the preferred label has no candidates.
    #[arg(long)]
    alt_labels: bool,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OnOff {
    Off,
    On,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    inputs: Inputs,
    /// Gold-standard mapping in N-Triples.
    #[arg(long)]
    gold: PathBuf,
    /// Roots of the salient taxonomy; the built-in list is used if omitted.
    #[arg(long)]
    taxonomy_roots: Option<PathBuf>,
    #[arg(long, default_value_t = 10)]
    workers: usize,
    /// Comma-separated overlap thresholds (default 0..=10).
    #[arg(long, value_delimiter = ',')]
    ol_min: Vec<usize>,
    /// Comma-separated frequency thresholds.
    #[arg(long, value_delimiter = ',')]
    f_min: Vec<u32>,
    /// Comma-separated taxonomy switches (default off,on).
    #[arg(long, value_delimiter = ',', value_enum)]
    taxonomy: Vec<OnOff>,
    /// Record wall-clock time per grid point in sweep.tsv.
    #[arg(long)]
    timing: bool,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct EvalArgs {
    /// Mapping in N-Triples, e.g. a `mapping.nt` written by `map`.
    #[arg(long)]
    mapping: PathBuf,
    #[arg(long)]
    gold: PathBuf,
    #[arg(long, default_value_t = 0.5)]
    beta: f64,
}

#[derive(Debug, Args)]
struct TaxonomyArgs {
    #[arg(long)]
    wordnet: PathBuf,
    /// Roots file; the built-in list is used if omitted.
    #[arg(long)]
    roots: Option<PathBuf>,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BaselineKind {
    Random,
    TrigramLabels,
    TrigramDefinitions,
}

#[derive(Debug, Args)]
struct BaselineArgs {
    #[command(flatten)]
    inputs: Inputs,
    #[arg(long, value_enum)]
    kind: BaselineKind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.9)]
    threshold: f64,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

enum Failure {
    Usage(String),
    Data(String),
}

type Outcome = Result<(), Failure>;

fn data<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Data(e.to_string())
}

/// Runs `wnlink` with the given arguments (program name first) and returns
/// the process exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Like [`run`], writing to the given streams.
pub fn run_with<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut args: Vec<String> = args.into_iter().map(Into::into).collect();
    if args.is_empty() {
        args.push("wnlink".into());
    }
    if let Some(path) = config_path(&args) {
        let settings = match fs::read_to_string(&path) {
            Ok(text) => parse_config(&text),
            Err(e) => {
                let _ = writeln!(err, "error: {path}: {e}");
                return 1;
            }
        };
        match settings {
            Ok(settings) => args = merge(&args, &settings),
            Err(e) => {
                let _ = writeln!(err, "error: {path}: {e}");
                return 2;
            }
        }
    }

    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };

    let result = match cli.command {
        Command::Map(a) => cmd_map(a, out, err),
        Command::Sweep(a) => cmd_sweep(a, out, err),
        Command::Eval(a) => cmd_eval(a, out, err),
        Command::Taxonomy(a) => cmd_taxonomy(a, out),
        Command::Baseline(a) => cmd_baseline(a, out, err),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Data(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn require(paths: &[&Path]) -> Outcome {
    for p in paths {
        if !p.exists() {
            return Err(Failure::Data(format!(
                "{}: no such file or directory",
                p.display()
            )));
        }
    }
    Ok(())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

fn write(dir: &Path, name: &str, contents: &str) -> Outcome {
    fs::create_dir_all(dir).map_err(|e| Failure::Data(format!("{}: {e}", dir.display())))?;
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

fn load_vocab(path: &Path, err: &mut dyn Write) -> Result<(Vocabulary, Vec<String>), Failure> {
    let name = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("vocabulary");
    let (vocab, warnings) = parse_vocabulary_ntriples(&read(path)?, name)
        .map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
    for w in &warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    Ok((vocab, warnings))
}

fn load_store(path: &Path) -> Result<WordNetStore, Failure> {
    WordNetStore::open(path).map_err(data)
}

fn load_mapping(path: &Path, err: &mut dyn Write) -> Result<MappingSet, Failure> {
    let (set, warnings) =
        load_gold(&read(path)?).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
    for w in warnings {
        let _ = writeln!(err, "warning: {}: {w}", path.display());
    }
    Ok(set)
}

fn taxonomy(store: &WordNetStore, roots: Option<&Path>) -> Result<SynsetSet, Failure> {
    let text = match roots {
        Some(p) => read(p)?,
        None => DEFAULT_ROOTS.to_string(),
    };
    let roots = parse_roots(&text, store).map_err(data)?;
    store.taxonomy_closure(&roots).map_err(data)
}

fn write_mappings(dir: &Path, set: &MappingSet) -> Outcome {
    write(dir, "mapping.nt", &serialize_mappings_ntriples(set))?;
    write(dir, "mapping.tsv", &serialize_mappings_tsv(set))
}

fn cmd_map(a: MapArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let mut paths = vec![a.inputs.vocab.as_path(), a.inputs.wordnet.as_path()];
    paths.extend(a.taxonomy_roots.as_deref());
    require(&paths)?;

    let started = Instant::now();
    let (vocab, warnings) = load_vocab(&a.inputs.vocab, err)?;
    let store = load_store(&a.inputs.wordnet)?;
    let taxonomy = match &a.taxonomy_roots {
        Some(p) => Some(Arc::new(taxonomy(&store, Some(p))?)),
        None => None,
    };
    let config = MapperConfig {
        ol_min: a.min_overlap,
        f_min: a.min_freq,
        taxonomy,
        use_alt_labels: a.alt_labels,
        seed: 0,
    };
    let set = Mapper::new(&store).map_vocabulary(&vocab, &config);
    write_mappings(&a.out, &set)?;

    let mapped: std::collections::BTreeSet<_> = set.mappings().iter().map(|m| &m.term).collect();
    let unmapped: Vec<_> = vocab.terms().filter(|t| !mapped.contains(&t.id)).collect();
    let mut report = String::new();
    report.push_str(&format!("vocabulary\t{}\n", a.inputs.vocab.display()));
    report.push_str(&format!("wordnet\t{}\n", a.inputs.wordnet.display()));
    report.push_str(&format!("ol_min\t{}\n", config.ol_min));
    report.push_str(&format!("f_min\t{}\n", config.f_min));
    report.push_str(&format!(
        "taxonomy\t{}\n",
        if config.taxonomy.is_some() {
            "on"
        } else {
            "off"
        }
    ));
    report.push_str(&format!("alt_labels\t{}\n", config.use_alt_labels));
    report.push_str(&format!("terms\t{}\n", vocab.len()));
    report.push_str(&format!("mappings\t{}\n", set.len()));
    report.push_str(&format!("unmapped\t{}\n", unmapped.len()));
    report.push_str(&format!("wall_ms\t{}\n", started.elapsed().as_millis()));
    for w in &warnings {
        report.push_str(&format!("warning\t{w}\n"));
    }
    for t in &unmapped {
        report.push_str(&format!("unmapped_term\t{}\t{}\n", t.id, t.pref_label));
    }
    write(&a.out, "run-report.txt", &report)?;

    let _ = writeln!(
        out,
        "{} mappings for {} terms written to {}",
        set.len(),
        vocab.len(),
        a.out.display()
    );
    Ok(())
}

fn cmd_sweep(a: SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let mut paths = vec![
        a.inputs.vocab.as_path(),
        a.inputs.wordnet.as_path(),
        a.gold.as_path(),
    ];
    paths.extend(a.taxonomy_roots.as_deref());
    require(&paths)?;
    if a.workers == 0 {
        return Err(Failure::Usage("--workers must be at least 1".into()));
    }

    let mut grid = SweepGrid::default();
    if !a.ol_min.is_empty() {
        grid.ol_min = a.ol_min;
    }
    if !a.f_min.is_empty() {
        grid.f_min = a.f_min;
    }
    if !a.taxonomy.is_empty() {
        grid.taxonomy = a.taxonomy.iter().map(|t| *t == OnOff::On).collect();
    }

    let (vocab, _) = load_vocab(&a.inputs.vocab, err)?;
    let store = load_store(&a.inputs.wordnet)?;
    let gold = load_mapping(&a.gold, err)?;
    let closure = if grid.taxonomy.contains(&true) {
        Some(Arc::new(taxonomy(&store, a.taxonomy_roots.as_deref())?))
    } else {
        None
    };
    let mapper = Mapper::new(&store);
    let output = run_sweep(&vocab, &mapper, &gold, &grid, closure, a.workers).map_err(data)?;
    for w in &output.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    write(
        &a.out,
        "sweep.tsv",
        &write_sweep_tsv(&output.rows, a.timing),
    )?;
    write(&a.out, "summary.tsv", &write_summary_tsv(&output.rows))?;

    // earliest grid point wins ties
    let best =
        output
            .rows
            .iter()
            .fold(None, |acc: Option<&crate::eval::SweepRow>, row| match acc {
                Some(b) if b.result.f_measure >= row.result.f_measure => Some(b),
                _ => Some(row),
            });
    if let Some(best) = best {
        let _ = writeln!(
            out,
            "{} configurations; best F={:.4} at taxonomy={} f_min={} ol_min={}",
            output.rows.len(),
            best.result.f_measure,
            if best.point.taxonomy { "on" } else { "off" },
            best.point.f_min,
            best.point.ol_min
        );
    }
    Ok(())
}

fn cmd_eval(a: EvalArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    require(&[a.mapping.as_path(), a.gold.as_path()])?;
    if !(a.beta > 0.0 && a.beta.is_finite()) {
        return Err(Failure::Usage("--beta must be a positive number".into()));
    }
    let mapping = load_mapping(&a.mapping, err)?;
    let gold = load_mapping(&a.gold, err)?;
    let beta = if a.beta == 0.5 {
        default_beta()
    } else {
        a.beta
    };
    let r = evaluate::<f64>(&mapping, &gold, beta);
    let _ = writeln!(out, "mappings\t{}", r.n_mappings);
    let _ = writeln!(out, "gold\t{}", r.n_gold);
    let _ = writeln!(out, "correct\t{}", r.n_correct);
    let _ = writeln!(out, "precision\t{:.4}", r.precision);
    let _ = writeln!(out, "recall\t{:.4}", r.recall);
    let _ = writeln!(out, "f_measure\t{:.4}", r.f_measure);
    let _ = writeln!(
        out,
        "P={:.4} R={:.4} F={:.4}",
        r.precision, r.recall, r.f_measure
    );
    Ok(())
}

fn cmd_taxonomy(a: TaxonomyArgs, out: &mut dyn Write) -> Outcome {
    let mut paths = vec![a.wordnet.as_path()];
    paths.extend(a.roots.as_deref());
    require(&paths)?;
    let store = load_store(&a.wordnet)?;
    let set = taxonomy(&store, a.roots.as_deref())?;
    let mut labels: Vec<String> = set
        .iter()
        .map(|id| store.synset_label(id).unwrap_or_else(|| id.to_string()))
        .collect();
    labels.sort();
    let mut text = String::new();
    for l in &labels {
        text.push_str(l);
        text.push('\n');
    }
    text.push_str(&format!("# count: {}\n", labels.len()));
    write(&a.out, "taxonomy.txt", &text)?;
    let _ = writeln!(out, "{} synsets in taxonomy", labels.len());
    Ok(())
}

fn cmd_baseline(a: BaselineArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    require(&[a.inputs.vocab.as_path(), a.inputs.wordnet.as_path()])?;
    if !(0.0..=1.0).contains(&a.threshold) {
        return Err(Failure::Usage("--threshold must lie in [0, 1]".into()));
    }
    let (vocab, _) = load_vocab(&a.inputs.vocab, err)?;
    let store = load_store(&a.inputs.wordnet)?;
    let set = match a.kind {
        BaselineKind::Random => random_baseline_mapping(&vocab, &store, a.seed),
        BaselineKind::TrigramLabels => {
            trigram_baseline_mapping(&vocab, &store, a.threshold, TrigramStrategy::Labels)
        }
        BaselineKind::TrigramDefinitions => {
            trigram_baseline_mapping(&vocab, &store, a.threshold, TrigramStrategy::Definitions)
        }
    };
    write_mappings(&a.out, &set)?;
    let _ = writeln!(
        out,
        "{} baseline mappings written to {}",
        set.len(),
        a.out.display()
    );
    Ok(())
}
