//! Vocabulary-to-WordNet mapping.
//!
//! For each term, word senses whose lemma occurs in the term's label become
//! candidates. Candidates are filtered by the salient taxonomy, by a minimum
//! tag frequency and by a minimum overlap between the term's definition and
//! the synset gloss. Survivors are scored by their frequency and overlap
//! ranks plus taxonomy membership, and the best one is emitted as a close or
//! related match. Words found in the term's definition are mapped the same
//! way and always emitted as related matches of the term.

mod baseline;
mod score;

use std::collections::HashMap;
use std::sync::Arc;

use crate::text::{
    compound_candidates, extract_definition_terms, label_lemmas, lexical_overlap,
    normalize_definition, tokenize, LemmaBag, StopwordSet,
};
use crate::vocab::{Mapping, MappingSet, Provenance, RunParameters, Term, Vocabulary};
use crate::wordnet::{SynsetId, SynsetSet, WordNetStore, WordSense};

pub use self::baseline::random_baseline_mapping;
pub use self::score::{
    assign_relation, rank_desc, salience, salience_all, salience_from_ranks, select_best,
    SalienceScore,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchKind {
    Complete,
    Partial,
}

/// A `(synset, word sense)` pair that survived all filters for one label form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub synset: SynsetId,
    pub word_sense: WordSense,
    pub match_kind: MatchKind,
    pub f: u32,
    pub ol: usize,
    pub theta: u8,
}

#[derive(Debug, Clone, Default)]
pub struct MapperConfig {
    pub ol_min: usize,
    pub f_min: u32,
    /// Salient taxonomy; `None` means every synset is salient.
    pub taxonomy: Option<Arc<SynsetSet>>,
    pub use_alt_labels: bool,
    /// Only used by the random baseline.
    pub seed: u64,
}

impl MapperConfig {
    pub fn params(&self) -> RunParameters {
        RunParameters {
            ol_min: self.ol_min,
            f_min: self.f_min,
            taxonomy: self.taxonomy.is_some(),
            use_alt_labels: self.use_alt_labels,
            seed: self.seed,
        }
    }
}

/// Complete if the lemma's tokens equal the label's, Partial if they occur as
/// a contiguous run inside it, `None` otherwise. Underscores separate tokens.
pub fn lexical_match(lemma: &str, label: &str) -> Option<MatchKind> {
    let lemma: Vec<&str> = lemma.split('_').filter(|t| !t.is_empty()).collect();
    let label = tokenize(&label.replace('_', " "));
    if lemma.is_empty() || lemma.len() > label.len() {
        return None;
    }
    if lemma.len() == label.len() {
        return (label.iter().zip(&lemma).all(|(a, b)| a == b)).then_some(MatchKind::Complete);
    }
    label
        .windows(lemma.len())
        .any(|w| w.iter().zip(&lemma).all(|(a, b)| a == b))
        .then_some(MatchKind::Partial)
}

/// Mapping machinery bound to one store, with glosses normalized once.
pub struct Mapper<'a> {
    store: &'a WordNetStore,
    stopwords: StopwordSet,
    glosses: HashMap<SynsetId, LemmaBag>,
}

impl<'a> Mapper<'a> {
    pub fn new(store: &'a WordNetStore) -> Self {
        Self::with_stopwords(store, StopwordSet::english())
    }

    pub fn with_stopwords(store: &'a WordNetStore, stopwords: StopwordSet) -> Self {
        let empty = LemmaBag::new();
        let glosses = store
            .synsets()
            .map(|s| {
                (
                    s.id,
                    normalize_definition(&s.gloss, &empty, store, &stopwords),
                )
            })
            .collect();
        Mapper {
            store,
            stopwords,
            glosses,
        }
    }

    pub fn store(&self) -> &'a WordNetStore {
        self.store
    }

    pub fn stopwords(&self) -> &StopwordSet {
        &self.stopwords
    }

    /// Normalized definition of `term`, excluding the lemmas of `label`.
    pub fn definition_bag(&self, term: &Term, label: &str) -> LemmaBag {
        match &term.definition {
            Some(def) => normalize_definition(
                def,
                &label_lemmas(label, self.store),
                self.store,
                &self.stopwords,
            ),
            None => LemmaBag::new(),
        }
    }

    /// Overlap between a normalized definition and a synset's gloss. The
    /// definition bag already excludes the defined term, so the intersection
    /// does too.
    pub fn overlap(&self, definition: &LemmaBag, synset: SynsetId) -> usize {
        self.glosses
            .get(&synset)
            .map_or(0, |gloss| lexical_overlap(definition, gloss))
    }

    /// Word senses lexically matching `form` (every contiguous token run of it).
    pub fn lexical_matches(&self, form: &str) -> Vec<(WordSense, MatchKind)> {
        let tokens = tokenize(&form.replace('_', " "));
        let mut out = Vec::new();
        for start in 0..tokens.len() {
            for end in start + 1..=tokens.len() {
                let lemma = tokens[start..end].join("_");
                let kind = if end - start == tokens.len() {
                    MatchKind::Complete
                } else {
                    MatchKind::Partial
                };
                out.extend(
                    self.store
                        .lookup_senses(&lemma)
                        .iter()
                        .map(|ws| (ws.clone(), kind)),
                );
            }
        }
        out.sort_by(|a, b| {
            (a.0.synset, &a.0.lemma, a.0.sense_number).cmp(&(
                b.0.synset,
                &b.0.lemma,
                b.0.sense_number,
            ))
        });
        // a repeated token run yields the same sense twice; it is one candidate
        out.dedup_by(|a, b| a.0 == b.0);
        out
    }

    /// Candidate set for one lexical form of a term, after the taxonomy,
    /// frequency and overlap filters.
    pub fn find_candidates(
        &self,
        definition: &LemmaBag,
        form: &str,
        config: &MapperConfig,
    ) -> Vec<Candidate> {
        self.lexical_matches(form)
            .into_iter()
            .filter_map(|(ws, match_kind)| {
                if let Some(tax) = &config.taxonomy {
                    if !tax.contains(ws.synset) {
                        return None;
                    }
                }
                if ws.tag_frequency < config.f_min {
                    return None;
                }
                let ol = self.overlap(definition, ws.synset);
                if ol < config.ol_min {
                    return None;
                }
                Some(Candidate {
                    synset: ws.synset,
                    f: ws.tag_frequency,
                    ol,
                    theta: 1,
                    match_kind,
                    word_sense: ws,
                })
            })
            .collect()
    }

    fn labels<'t>(term: &'t Term, config: &MapperConfig) -> Vec<&'t str> {
        let mut labels = vec![term.pref_label.as_str()];
        if config.use_alt_labels {
            labels.extend(term.alt_labels.iter().map(String::as_str));
        }
        labels
    }

    /// Best mapping for a term's label, or `None` if no lexical form yields candidates.
    pub fn find_semantic_mapping(&self, term: &Term, config: &MapperConfig) -> Option<Mapping> {
        for label in Self::labels(term, config) {
            let definition = self.definition_bag(term, label);
            for form in compound_candidates(label) {
                let candidates = self.find_candidates(&definition, &form, config);
                let scores = salience_all::<f64>(&candidates);
                let Some(best) = select_best(&candidates, &scores) else {
                    continue;
                };
                let winner = &candidates[best];
                return Some(Mapping {
                    term: term.id.clone(),
                    relation: assign_relation(winner, &candidates),
                    synset: self.store.synset_uri(winner.synset),
                    score: scores[best].value(),
                    provenance: Provenance::LabelDerived,
                    source_word: winner.word_sense.lemma.clone(),
                });
            }
        }
        None
    }

    /// Terms to map from a term's definition, excluding the term's own label.
    pub fn definition_terms(&self, term: &Term) -> Vec<String> {
        match &term.definition {
            Some(def) => extract_definition_terms(
                def,
                &label_lemmas(&term.pref_label, self.store),
                self.store,
                &self.stopwords,
            ),
            None => Vec::new(),
        }
    }

    /// A definition word treated as a term: its own label, the parent's
    /// definition as context, and the parent's identity.
    pub fn definition_word_term(term: &Term, word: &str) -> Term {
        Term::new(
            term.id.clone(),
            word.replace('_', " "),
            term.definition.clone(),
        )
    }

    pub fn map_vocabulary(&self, vocab: &Vocabulary, config: &MapperConfig) -> MappingSet {
        let mut out = MappingSet::new(config.params());
        let word_config = MapperConfig {
            use_alt_labels: false,
            ..config.clone()
        };
        for term in vocab.terms() {
            if let Some(m) = self.find_semantic_mapping(term, config) {
                out.insert(m);
            }
            for word in self.definition_terms(term) {
                let pseudo = Self::definition_word_term(term, &word);
                if let Some(mut m) = self.find_semantic_mapping(&pseudo, &word_config) {
                    m.relation = crate::vocab::MappingRelation::Related;
                    m.provenance = Provenance::DefinitionDerived;
                    out.insert(m);
                }
            }
        }
        out
    }
}

/// Maps every term of `vocab` onto the store.
pub fn map_vocabulary(
    vocab: &Vocabulary,
    store: &WordNetStore,
    config: &MapperConfig,
) -> MappingSet {
    Mapper::new(store).map_vocabulary(vocab, config)
}

/// Maps a single term's label.
pub fn find_semantic_mapping(
    term: &Term,
    store: &WordNetStore,
    config: &MapperConfig,
) -> Option<Mapping> {
    Mapper::new(store).find_semantic_mapping(term, config)
}
