use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use super::{Mapper, MapperConfig};
use crate::text::compound_candidates;
use crate::vocab::{Mapping, MappingRelation, MappingSet, Provenance, Term, TermId, Vocabulary};
use crate::wordnet::WordNetStore;

/// Generator seeded by the run seed, the term and the word being mapped.
fn rng_for(seed: u64, term: &TermId, word: &str) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(term.as_str().as_bytes());
    h.update([0]);
    h.update(word.as_bytes());
    ChaCha8Rng::from_seed(h.finalize().into())
}

fn pick(mapper: &Mapper<'_>, term: &Term, seed: u64, provenance: Provenance) -> Option<Mapping> {
    for form in compound_candidates(&term.pref_label) {
        let matches = mapper.lexical_matches(&form);
        if matches.is_empty() {
            continue;
        }
        let mut rng = rng_for(seed, &term.id, &term.pref_label);
        let (ws, _) = &matches[rng.gen_range(0..matches.len())];
        return Some(Mapping {
            term: term.id.clone(),
            relation: MappingRelation::Related,
            synset: mapper.store().synset_uri(ws.synset),
            score: 1.0 / matches.len() as f64,
            provenance,
            source_word: ws.lemma.clone(),
        });
    }
    None
}

/// Chance-level baseline: every term (and definition word) with at least one
/// lexically matching sense gets one of those senses drawn uniformly, as a
/// related match. No filters are applied.
pub fn random_baseline_mapping(vocab: &Vocabulary, store: &WordNetStore, seed: u64) -> MappingSet {
    let mapper = Mapper::new(store);
    let mut out = MappingSet::new(
        MapperConfig {
            seed,
            ..Default::default()
        }
        .params(),
    );
    for term in vocab.terms() {
        if let Some(m) = pick(&mapper, term, seed, Provenance::LabelDerived) {
            out.insert(m);
        }
        for word in mapper.definition_terms(term) {
            let pseudo = Mapper::definition_word_term(term, &word);
            if let Some(m) = pick(&mapper, &pseudo, seed, Provenance::DefinitionDerived) {
                out.insert(m);
            }
        }
    }
    out
}
