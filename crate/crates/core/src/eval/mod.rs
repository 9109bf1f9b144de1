//! Evaluation against gold standards, parameter sweeps and string-similarity baselines.

mod metrics;
mod sweep;
mod trigram;

pub use self::metrics::{
    correct_count, default_beta, evaluate, f_measure, precision_recall, EvalResult,
};
pub use self::sweep::{
    run_sweep, summarize, write_summary_tsv, write_sweep_tsv, GridPoint, Parameter, SummaryRow,
    SweepError, SweepGrid, SweepOutput, SweepRow, DEFAULT_F_MIN, SUMMARY_HEADER, SWEEP_HEADER,
};
pub use self::trigram::{
    trigram_baseline_mapping, trigram_dice, trigram_similarity, TrigramStrategy,
};
