//! Character-trigram string similarity and the string-matching baselines built on it.

use std::collections::HashMap;

use crate::scalar::Scalar;
use crate::vocab::{Mapping, MappingRelation, MappingSet, Provenance, RunParameters, Vocabulary};
use crate::wordnet::WordNetStore;

const START: char = '\u{2}';
const END: char = '\u{3}';

fn trigrams(s: &str) -> HashMap<[char; 3], usize> {
    let padded: Vec<char> = [START, START]
        .into_iter()
        .chain(s.chars())
        .chain([END, END])
        .collect();
    let mut counts = HashMap::new();
    for w in padded.windows(3) {
        *counts.entry([w[0], w[1], w[2]]).or_insert(0) += 1;
    }
    counts
}

/// Dice coefficient over boundary-padded character trigram multisets.
pub fn trigram_dice<T: Scalar>(a: &str, b: &str) -> T {
    if a == b {
        return T::one();
    }
    let (ta, tb) = (trigrams(a), trigrams(b));
    let shared: usize = ta
        .iter()
        .map(|(g, n)| tb.get(g).map_or(0, |m| (*n).min(*m)))
        .sum();
    let total: usize = ta.values().sum::<usize>() + tb.values().sum::<usize>();
    T::from_count(2 * shared) / T::from_count(total)
}

pub fn trigram_similarity(a: &str, b: &str) -> f64 {
    trigram_dice(a, b)
}

/// Upper bound of the Dice score given only the two string lengths.
fn length_bound(a: usize, b: usize) -> f64 {
    let (ta, tb) = (a + 2, b + 2);
    2.0 * ta.min(tb) as f64 / (ta + tb) as f64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigramStrategy {
    /// Term labels against word-sense lemmas.
    Labels,
    /// Term definitions against synset glosses.
    Definitions,
}

fn normalize(s: &str) -> String {
    s.trim().to_lowercase().replace('_', " ")
}

/// Every (term, synset) pair whose fields score at least `threshold` becomes a
/// related match. All matching senses are kept.
pub fn trigram_baseline_mapping(
    vocab: &Vocabulary,
    store: &WordNetStore,
    threshold: f64,
    strategy: TrigramStrategy,
) -> MappingSet {
    let mut out = MappingSet::new(RunParameters::default());
    for term in vocab.terms() {
        let mut hits: Vec<(f64, crate::wordnet::SynsetId, String)> = Vec::new();
        match strategy {
            TrigramStrategy::Labels => {
                let label = normalize(&term.pref_label);
                let n = label.chars().count();
                for synset in store.synsets() {
                    for ws in &synset.senses {
                        let lemma = normalize(&ws.lemma);
                        if length_bound(n, lemma.chars().count()) < threshold {
                            continue;
                        }
                        let sim = trigram_similarity(&label, &lemma);
                        if sim >= threshold {
                            hits.push((sim, synset.id, ws.lemma.clone()));
                        }
                    }
                }
            }
            TrigramStrategy::Definitions => {
                let Some(def) = &term.definition else {
                    continue;
                };
                let def = normalize(def);
                let n = def.chars().count();
                for synset in store.synsets() {
                    let gloss = normalize(&synset.gloss);
                    if length_bound(n, gloss.chars().count()) < threshold {
                        continue;
                    }
                    let sim = trigram_similarity(&def, &gloss);
                    if sim >= threshold {
                        hits.push((sim, synset.id, synset.senses[0].lemma.clone()));
                    }
                }
            }
        }
        // best-scoring sense first so that its score is the one kept per synset
        hits.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
        for (sim, synset, lemma) in hits {
            out.insert(Mapping {
                term: term.id.clone(),
                relation: MappingRelation::Related,
                synset: store.synset_uri(synset),
                score: sim.clamp(0.0, 1.0),
                provenance: Provenance::LabelDerived,
                source_word: lemma,
            });
        }
    }
    out
}
