//! JSON fixture format for small hand-written WordNets (see `docs/fixture-schema.md`).

use std::collections::{BTreeMap, HashMap};

use serde::Deserialize;

use super::{RelationKind, Synset, SynsetId, WordNetError, WordNetStore, WordSense};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    synsets: Vec<FixtureSynset>,
    #[serde(default)]
    exceptions: BTreeMap<String, Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FixtureSynset {
    offset: u64,
    #[serde(default = "noun")]
    pos: String,
    lemmas: Vec<FixtureLemma>,
    gloss: String,
    #[serde(default)]
    relations: Vec<FixtureRelation>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FixtureLemma {
    lemma: String,
    sense: u32,
    #[serde(default)]
    frequency: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FixtureRelation {
    kind: String,
    target: u64,
}

fn noun() -> String {
    "n".into()
}

pub fn load_fixture(json: &str) -> Result<WordNetStore, WordNetError> {
    let doc: Document =
        serde_json::from_str(json).map_err(|e| WordNetError::Schema(e.to_string()))?;
    let mut synsets = Vec::with_capacity(doc.synsets.len());
    for s in doc.synsets {
        let id = SynsetId(s.offset);
        if s.pos != "n" {
            return Err(WordNetError::Schema(format!(
                "synset {id}: only noun synsets are supported, got pos {:?}",
                s.pos
            )));
        }
        let mut senses = Vec::with_capacity(s.lemmas.len());
        for l in s.lemmas {
            let lemma = l.lemma.trim().to_lowercase().replace(' ', "_");
            if lemma.is_empty() {
                return Err(WordNetError::Schema(format!("synset {id}: empty lemma")));
            }
            if l.sense == 0 {
                return Err(WordNetError::Schema(format!(
                    "synset {id}: sense numbers start at 1 ({lemma})"
                )));
            }
            senses.push(WordSense {
                lemma,
                synset: id,
                sense_number: l.sense,
                tag_frequency: l.frequency,
            });
        }
        let relations = s
            .relations
            .into_iter()
            .map(|r| {
                let kind = match r.kind.as_str() {
                    "hyponymOf" => RelationKind::HyponymOf,
                    "partMeronymOf" => RelationKind::PartMeronymOf,
                    other => RelationKind::Other(other.to_string()),
                };
                (kind, SynsetId(r.target))
            })
            .collect();
        synsets.push(Synset {
            id,
            senses,
            gloss: s.gloss,
            relations,
        });
    }
    let exceptions: HashMap<_, _> = doc.exceptions.into_iter().collect();
    WordNetStore::build(synsets, exceptions)
}
