//! In-memory WordNet noun network: synsets, word senses with tag counts,
//! semantic relations, a lemma index, and salient-taxonomy closures.

mod closure;
mod fixture;
mod wndb;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::path::Path;

use thiserror::Error;

use crate::vocab::SynsetIri;

pub use self::closure::SynsetSet;
pub use self::fixture::load_fixture;
pub use self::wndb::load_wndb;

/// The eight salient roots shipped in `data/roots.txt`.
pub const DEFAULT_ROOTS: &str =
    include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/roots.txt"));

/// Namespace of the W3C WordNet 2.0 synset instances.
pub const WN20_INSTANCES: &str = "http://www.w3.org/2006/03/wn/wn20/instances/synset-";

#[derive(Debug, Error)]
pub enum WordNetError {
    #[error("{file}:{line}: {message}")]
    Parse {
        file: String,
        line: usize,
        message: String,
    },
    #[error("fixture schema violation: {0}")]
    Schema(String),
    #[error("duplicate synset {0}")]
    DuplicateSynset(SynsetId),
    #[error("duplicate sense {lemma}#{sense}")]
    DuplicateSense { lemma: String, sense: u32 },
    #[error("synset {0} has no word senses")]
    EmptySynset(SynsetId),
    #[error("synset {from} points to unknown synset {to}")]
    DanglingRelation { from: SynsetId, to: SynsetId },
    #[error("unknown synset {0:?}")]
    UnknownSynset(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Noun synset identity: its byte offset in `data.noun`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SynsetId(pub u64);

impl fmt::Display for SynsetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n{:08}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RelationKind {
    HyponymOf,
    PartMeronymOf,
    Other(String),
}

impl RelationKind {
    /// Relations followed (in reverse) by the taxonomy closure.
    pub fn is_taxonomic(&self) -> bool {
        matches!(self, RelationKind::HyponymOf | RelationKind::PartMeronymOf)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSense {
    pub lemma: String,
    pub synset: SynsetId,
    pub sense_number: u32,
    pub tag_frequency: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Synset {
    pub id: SynsetId,
    pub senses: Vec<WordSense>,
    pub gloss: String,
    pub relations: Vec<(RelationKind, SynsetId)>,
}

#[derive(Debug, Default)]
pub struct WordNetStore {
    synsets: BTreeMap<SynsetId, Synset>,
    lemma_index: HashMap<String, Vec<WordSense>>,
    exceptions: HashMap<String, Vec<String>>,
    // whole/hypernym -> parts/hyponyms
    children: HashMap<SynsetId, Vec<SynsetId>>,
}

impl WordNetStore {
    /// Validates the synsets and builds the lemma index and reverse edges.
    pub fn build(
        synsets: Vec<Synset>,
        exceptions: HashMap<String, Vec<String>>,
    ) -> Result<Self, WordNetError> {
        let mut by_id = BTreeMap::new();
        for synset in synsets {
            if synset.senses.is_empty() {
                return Err(WordNetError::EmptySynset(synset.id));
            }
            let id = synset.id;
            if by_id.insert(id, synset).is_some() {
                return Err(WordNetError::DuplicateSynset(id));
            }
        }

        let mut lemma_index: HashMap<String, Vec<WordSense>> = HashMap::new();
        let mut children: HashMap<SynsetId, Vec<SynsetId>> = HashMap::new();
        for synset in by_id.values() {
            for sense in &synset.senses {
                lemma_index
                    .entry(sense.lemma.clone())
                    .or_default()
                    .push(sense.clone());
            }
            for (kind, target) in &synset.relations {
                if !by_id.contains_key(target) {
                    return Err(WordNetError::DanglingRelation {
                        from: synset.id,
                        to: *target,
                    });
                }
                if kind.is_taxonomic() {
                    children.entry(*target).or_default().push(synset.id);
                }
            }
        }
        for (lemma, senses) in lemma_index.iter_mut() {
            senses.sort_by_key(|s| s.sense_number);
            if let Some(w) = senses
                .windows(2)
                .find(|w| w[0].sense_number == w[1].sense_number)
            {
                return Err(WordNetError::DuplicateSense {
                    lemma: lemma.clone(),
                    sense: w[0].sense_number,
                });
            }
        }
        for kids in children.values_mut() {
            kids.sort();
            kids.dedup();
        }

        Ok(WordNetStore {
            synsets: by_id,
            lemma_index,
            exceptions,
            children,
        })
    }

    /// Loads a fixture (`*.json` file) or a WNDB `dict` directory.
    ///
    /// In a directory, `index.noun` and `data.noun` are required; `cntlist.rev`
    /// and `noun.exc` are optional.
    pub fn open(path: &Path) -> Result<Self, WordNetError> {
        let read = |p: &Path| {
            std::fs::read_to_string(p).map_err(|source| WordNetError::Io {
                path: p.display().to_string(),
                source,
            })
        };
        if path.is_dir() {
            let optional = |name: &str| {
                let p = path.join(name);
                if p.exists() {
                    read(&p)
                } else {
                    Ok(String::new())
                }
            };
            load_wndb(
                &read(&path.join("index.noun"))?,
                &read(&path.join("data.noun"))?,
                &optional("cntlist.rev")?,
                &optional("noun.exc")?,
            )
        } else {
            load_fixture(&read(path)?)
        }
    }

    pub fn len(&self) -> usize {
        self.synsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.synsets.is_empty()
    }

    pub fn synset(&self, id: SynsetId) -> Option<&Synset> {
        self.synsets.get(&id)
    }

    /// All synsets in offset order.
    pub fn synsets(&self) -> impl Iterator<Item = &Synset> {
        self.synsets.values()
    }

    pub fn contains(&self, id: SynsetId) -> bool {
        self.synsets.contains_key(&id)
    }

    /// Noun senses of a lemma ordered by sense number; empty if unknown.
    pub fn lookup_senses(&self, lemma: &str) -> &[WordSense] {
        self.lemma_index.get(lemma).map_or(&[], Vec::as_slice)
    }

    pub fn has_lemma(&self, lemma: &str) -> bool {
        self.lemma_index.contains_key(lemma)
    }

    pub fn lemma_count(&self) -> usize {
        self.lemma_index.len()
    }

    /// Base forms listed for an irregular noun form.
    pub fn exception(&self, form: &str) -> Option<&[String]> {
        self.exceptions.get(form).map(Vec::as_slice)
    }

    pub(crate) fn children(&self, id: SynsetId) -> &[SynsetId] {
        self.children.get(&id).map_or(&[], Vec::as_slice)
    }

    pub fn gloss(&self, id: SynsetId) -> Option<&str> {
        self.synsets.get(&id).map(|s| s.gloss.as_str())
    }

    /// `<first lemma>-noun-<sense number>`, the local name of a synset.
    pub fn synset_label(&self, id: SynsetId) -> Option<String> {
        let first = self.synsets.get(&id)?.senses.first()?;
        Some(format!("{}-noun-{}", first.lemma, first.sense_number))
    }

    /// WordNet 2.0 instance IRI for a synset, e.g. `...synset-bay-noun-1`.
    ///
    /// Panics if `id` is not in the store.
    pub fn synset_uri(&self, id: SynsetId) -> SynsetIri {
        let label = self
            .synset_label(id)
            .unwrap_or_else(|| panic!("synset {id} is not in the store"));
        SynsetIri(format!("{WN20_INSTANCES}{label}"))
    }

    /// Resolves `lemma-noun-N`, a bare offset, or `nOFFSET` to a synset in the store.
    pub fn resolve(&self, reference: &str) -> Option<SynsetId> {
        let reference = reference.trim();
        let reference = reference.strip_prefix(WN20_INSTANCES).unwrap_or(reference);
        if let Some((lemma, sense)) = reference.rsplit_once("-noun-") {
            let sense: u32 = sense.parse().ok()?;
            return self
                .lookup_senses(&lemma.to_lowercase())
                .iter()
                .find(|s| s.sense_number == sense)
                .map(|s| s.synset);
        }
        let digits = reference.strip_prefix('n').unwrap_or(reference);
        if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
            let id = SynsetId(digits.parse().ok()?);
            return self.contains(id).then_some(id);
        }
        None
    }

    /// Set of synsets reachable from the roots through reverse hyponym and
    /// part-meronym edges, roots included.
    pub fn taxonomy_closure(&self, roots: &[SynsetId]) -> Result<SynsetSet, WordNetError> {
        closure::descendants(self, roots)
    }
}

/// Reads a roots file: one synset reference per line, `#` comments allowed.
pub fn parse_roots(text: &str, store: &WordNetStore) -> Result<Vec<SynsetId>, WordNetError> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| {
            store
                .resolve(l)
                .ok_or_else(|| WordNetError::UnknownSynset(l.to_string()))
        })
        .collect()
}

/// Checks that the lemma index is exactly the inverse of the synsets' sense lists.
pub fn index_is_inverse(store: &WordNetStore) -> bool {
    let mut from_synsets: BTreeSet<(String, u32, SynsetId)> = BTreeSet::new();
    for s in store.synsets() {
        for ws in &s.senses {
            if ws.synset != s.id {
                return false;
            }
            from_synsets.insert((ws.lemma.clone(), ws.sense_number, ws.synset));
        }
    }
    let mut from_index = BTreeSet::new();
    let mut total = 0;
    for (lemma, senses) in &store.lemma_index {
        for ws in senses {
            if &ws.lemma != lemma {
                return false;
            }
            total += 1;
            from_index.insert((ws.lemma.clone(), ws.sense_number, ws.synset));
        }
    }
    total == from_index.len() && from_index == from_synsets
}
