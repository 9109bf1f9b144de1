//! Unsupervised mapping of SKOS vocabulary terms onto WordNet noun synsets.
//!
//! The crate is organised as:
//!
//! * [`vocab`]: terms, mapping triples and their N-Triples/TSV forms;
//! * [`wordnet`]: the noun network, its loaders and taxonomy closures;
//! * [`text`]: tokenization, stopwords, lemmatization and lexical overlap;
//! * [`mapper`]: candidate generation, salience scoring and relation choice;
//! * [`eval`]: precision/recall/F, parameter sweeps and baselines;
//! * [`cli`]: the `wnlink` command-line front end.
//!
//! Scores are generic over [`Scalar`]; the aliases below fix the usual choices.

pub mod cli;
pub mod eval;
pub mod mapper;
pub mod scalar;
pub mod text;
pub mod vocab;
pub mod wordnet;

pub use scalar::{Exact, Scalar};

/// Salience in double precision, as used by the mapper.
pub type Salience = mapper::SalienceScore<f64>;
/// Salience as an exact rational.
pub type ExactSalience = mapper::SalienceScore<Exact>;
/// Evaluation scores in double precision.
pub type Eval = eval::EvalResult<f64>;
/// Evaluation scores as exact rationals.
pub type ExactEval = eval::EvalResult<Exact>;
