//! Shared test support: fixture paths, seeded random worlds, and a
//! brute-force re-implementation of the mapper used as an oracle.
#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::path::PathBuf;

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wnlink::text::{
    extract_definition_terms, label_lemmas, normalize_definition, tokenize, LemmaBag, StopwordSet,
};
use wnlink::vocab::{load_gold, parse_vocabulary_ntriples, MappingSet, Term, TermId, Vocabulary};
use wnlink::wordnet::{RelationKind, Synset, SynsetId, WordNetStore, WordSense};

pub fn repo_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join(rel)
}

pub fn fixture_store() -> WordNetStore {
    WordNetStore::open(&repo_path("fixtures/mini_wordnet.json")).expect("fixture store")
}

pub fn fixture_vocab() -> Vocabulary {
    let text = std::fs::read_to_string(repo_path("fixtures/vocab_mini.nt")).unwrap();
    parse_vocabulary_ntriples(&text, "vocab_mini").unwrap().0
}

pub fn fixture_gold() -> MappingSet {
    let text = std::fs::read_to_string(repo_path("fixtures/gold_mini.nt")).unwrap();
    load_gold(&text).unwrap().0
}

pub fn default_roots() -> String {
    std::fs::read_to_string(repo_path("data/roots.txt")).unwrap()
}

// ---------------------------------------------------------------- closure oracle

/// Fixpoint iteration: keep adding any synset with a taxonomic edge into the set.
pub fn closure_oracle(store: &WordNetStore, roots: &[SynsetId]) -> BTreeSet<SynsetId> {
    let mut set: BTreeSet<SynsetId> = roots.iter().copied().collect();
    loop {
        let mut grown = false;
        for s in store.synsets() {
            if set.contains(&s.id) {
                continue;
            }
            let linked = s.relations.iter().any(|(kind, target)| {
                matches!(kind, RelationKind::HyponymOf | RelationKind::PartMeronymOf)
                    && set.contains(target)
            });
            if linked {
                set.insert(s.id);
                grown = true;
            }
        }
        if !grown {
            return set;
        }
    }
}

/// A store whose taxonomy is the given edge list, each edge oriented from the
/// larger node index to the smaller so the graph is acyclic. Kind 2 is a
/// non-taxonomic relation.
pub fn dag_store(n: usize, edges: &[(usize, usize, u8)]) -> WordNetStore {
    let mut relations: Vec<Vec<(RelationKind, SynsetId)>> = vec![Vec::new(); n];
    for &(a, b, kind) in edges {
        if a == b {
            continue;
        }
        let (child, parent) = if a > b { (a, b) } else { (b, a) };
        let kind = match kind {
            0 => RelationKind::HyponymOf,
            1 => RelationKind::PartMeronymOf,
            _ => RelationKind::Other("similarTo".into()),
        };
        relations[child].push((kind, SynsetId(parent as u64 + 1)));
    }
    let synsets = relations
        .into_iter()
        .enumerate()
        .map(|(i, relations)| {
            let id = SynsetId(i as u64 + 1);
            Synset {
                id,
                senses: vec![WordSense {
                    lemma: format!("node{i}"),
                    synset: id,
                    sense_number: 1,
                    tag_frequency: 0,
                }],
                gloss: String::new(),
                relations,
            }
        })
        .collect();
    WordNetStore::build(synsets, HashMap::new()).unwrap()
}

// ---------------------------------------------------------------- mapper oracle

#[derive(Debug, Clone, Default)]
pub struct OracleConfig {
    pub ol_min: usize,
    pub f_min: u32,
    pub taxonomy: Option<BTreeSet<SynsetId>>,
    pub alt_labels: bool,
}

#[derive(Debug, Clone)]
pub struct OracleCandidate {
    pub synset: SynsetId,
    pub lemma: String,
    pub complete: bool,
    pub f: u32,
    pub ol: usize,
}

/// One oracle mapping: (term IRI, relation name, synset IRI), exact salience,
/// and whether it came from the label.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleMapping {
    pub term: String,
    pub relation: &'static str,
    pub synset: String,
    pub sigma: Ratio<i64>,
    pub from_label: bool,
}

fn contains_run(haystack: &[String], needle: &[&str]) -> bool {
    if needle.is_empty() || needle.len() > haystack.len() {
        return false;
    }
    (0..=haystack.len() - needle.len()).any(|i| {
        needle
            .iter()
            .enumerate()
            .all(|(k, w)| haystack[i + k] == *w)
    })
}

fn synset_iri(store: &WordNetStore, id: SynsetId) -> String {
    let s = store.synset(id).unwrap();
    let first = &s.senses[0];
    format!(
        "http://www.w3.org/2006/03/wn/wn20/instances/synset-{}-noun-{}",
        first.lemma.to_lowercase(),
        first.sense_number
    )
}

pub struct Oracle<'a> {
    pub store: &'a WordNetStore,
    pub stopwords: StopwordSet,
}

impl<'a> Oracle<'a> {
    pub fn new(store: &'a WordNetStore) -> Self {
        Oracle {
            store,
            stopwords: StopwordSet::english(),
        }
    }

    fn gloss_bag(&self, id: SynsetId) -> BTreeSet<String> {
        let gloss = &self.store.synset(id).unwrap().gloss;
        normalize_definition(gloss, &LemmaBag::new(), self.store, &self.stopwords)
            .iter()
            .map(String::from)
            .collect()
    }

    fn def_bag(&self, definition: Option<&str>, label: &str) -> BTreeSet<String> {
        match definition {
            None => BTreeSet::new(),
            Some(d) => normalize_definition(
                d,
                &label_lemmas(label, self.store),
                self.store,
                &self.stopwords,
            )
            .iter()
            .map(String::from)
            .collect(),
        }
    }

    /// Exhaustive scan of every sense of every synset against one form.
    pub fn candidates(
        &self,
        def: &BTreeSet<String>,
        form: &str,
        cfg: &OracleConfig,
    ) -> Vec<OracleCandidate> {
        let tokens = tokenize(&form.replace('_', " "));
        let mut out = Vec::new();
        for synset in self.store.synsets() {
            for ws in &synset.senses {
                let parts: Vec<&str> = ws.lemma.split('_').collect();
                if !contains_run(&tokens, &parts) {
                    continue;
                }
                if let Some(tax) = &cfg.taxonomy {
                    if !tax.contains(&synset.id) {
                        continue;
                    }
                }
                if ws.tag_frequency < cfg.f_min {
                    continue;
                }
                let ol = def.intersection(&self.gloss_bag(synset.id)).count();
                if ol < cfg.ol_min {
                    continue;
                }
                out.push(OracleCandidate {
                    synset: synset.id,
                    lemma: ws.lemma.clone(),
                    complete: parts.len() == tokens.len(),
                    f: ws.tag_frequency,
                    ol,
                });
            }
        }
        out
    }

    /// Salience of each candidate straight from its definition, with
    /// quadratic competition ranks.
    pub fn sigmas(cands: &[OracleCandidate]) -> Vec<Ratio<i64>> {
        let n = cands.len() as i64;
        cands
            .iter()
            .map(|c| {
                let rank_f = 1 + cands.iter().filter(|o| o.f > c.f).count() as i64;
                let rank_ol = 1 + cands.iter().filter(|o| o.ol > c.ol).count() as i64;
                Ratio::new(2 * n - rank_f - rank_ol + 1, 2 * n - 1)
            })
            .collect()
    }

    fn best(cands: &[OracleCandidate], sigmas: &[Ratio<i64>]) -> usize {
        let mut order: Vec<usize> = (0..cands.len()).collect();
        order.sort_by(|&a, &b| {
            let (x, y) = (&cands[a], &cands[b]);
            sigmas[b]
                .cmp(&sigmas[a])
                .then(y.f.cmp(&x.f))
                .then(x.synset.cmp(&y.synset))
                .then(match (x.complete, y.complete) {
                    (true, false) => Ordering::Less,
                    (false, true) => Ordering::Greater,
                    _ => Ordering::Equal,
                })
                .then(x.lemma.cmp(&y.lemma))
        });
        order[0]
    }

    fn forms(label: &str) -> Vec<String> {
        let tokens = tokenize(&label.replace('_', " "));
        let mut forms = Vec::new();
        if tokens.len() > 1 {
            forms.push(tokens.join("_"));
        }
        forms.extend(tokens);
        forms
    }

    fn map_labels(
        &self,
        term_iri: &str,
        labels: &[String],
        definition: Option<&str>,
        cfg: &OracleConfig,
    ) -> Option<OracleMapping> {
        for label in labels {
            let def = self.def_bag(definition, label);
            for form in Self::forms(label) {
                let cands = self.candidates(&def, &form, cfg);
                if cands.is_empty() {
                    continue;
                }
                let sigmas = Self::sigmas(&cands);
                let b = Self::best(&cands, &sigmas);
                let max_f = cands.iter().map(|c| c.f).max().unwrap();
                let max_ol = cands.iter().map(|c| c.ol).max().unwrap();
                let w = &cands[b];
                let close = w.complete && w.f == max_f && w.ol == max_ol;
                return Some(OracleMapping {
                    term: term_iri.to_string(),
                    relation: if close { "close" } else { "related" },
                    synset: synset_iri(self.store, w.synset),
                    sigma: sigmas[b],
                    from_label: true,
                });
            }
        }
        None
    }

    /// Label mapping, then one related mapping per definition word, with
    /// repeated triples dropped after their first appearance.
    pub fn map_vocabulary(&self, vocab: &Vocabulary, cfg: &OracleConfig) -> Vec<OracleMapping> {
        let mut out: Vec<OracleMapping> = Vec::new();
        let mut push = |m: OracleMapping| {
            if !out
                .iter()
                .any(|o| o.term == m.term && o.relation == m.relation && o.synset == m.synset)
            {
                out.push(m);
            }
        };
        let word_cfg = OracleConfig {
            alt_labels: false,
            ..cfg.clone()
        };
        for term in vocab.terms() {
            let iri = term.id.as_str();
            let mut labels = vec![term.pref_label.clone()];
            if cfg.alt_labels {
                labels.extend(term.alt_labels.iter().cloned());
            }
            if let Some(m) = self.map_labels(iri, &labels, term.definition.as_deref(), cfg) {
                push(m);
            }
            let Some(def) = term.definition.as_deref() else {
                continue;
            };
            let words = extract_definition_terms(
                def,
                &label_lemmas(&term.pref_label, self.store),
                self.store,
                &self.stopwords,
            );
            for word in words {
                let label = vec![word.replace('_', " ")];
                if let Some(mut m) = self.map_labels(iri, &label, Some(def), &word_cfg) {
                    m.relation = "related";
                    m.from_label = false;
                    push(m);
                }
            }
        }
        out
    }
}

// ---------------------------------------------------------------- random worlds

pub const WORDS: [&str; 20] = [
    "bay", "sea", "land", "water", "pool", "swimming", "power", "station", "field", "river",
    "stream", "lake", "park", "hill", "rock", "sand", "tree", "road", "bridge", "harbour",
];
pub const COLLOCATIONS: [&str; 4] = [
    "swimming_pool",
    "power_station",
    "body_of_water",
    "sea_water",
];
const GLUE: [&str; 8] = ["a", "of", "the", "and", "with", "by", "body", "small"];

fn random_text(rng: &mut ChaCha8Rng, min: usize, max: usize) -> String {
    let n = rng.gen_range(min..=max);
    (0..n)
        .map(|_| {
            if rng.gen_bool(0.3) {
                GLUE.choose(rng).unwrap().to_string()
            } else {
                let w = WORDS.choose(rng).unwrap();
                if rng.gen_bool(0.2) {
                    format!("{w}s")
                } else {
                    w.to_string()
                }
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// A random store of `n` synsets with random senses, tag counts, glosses and
/// taxonomic edges pointing only to earlier synsets (so the graph is a DAG).
pub fn random_store(rng: &mut ChaCha8Rng, n: usize) -> WordNetStore {
    let mut next_sense: HashMap<String, u32> = HashMap::new();
    let mut synsets = Vec::with_capacity(n);
    let mut ids: Vec<SynsetId> = Vec::with_capacity(n);
    for i in 0..n {
        let id = SynsetId((i as u64 + 1) * 1000 + rng.gen_range(0..1000));
        let k = rng.gen_range(1..=3);
        let mut lemmas: Vec<String> = Vec::new();
        while lemmas.len() < k {
            let l = if rng.gen_bool(0.2) {
                COLLOCATIONS.choose(rng).unwrap().to_string()
            } else {
                WORDS.choose(rng).unwrap().to_string()
            };
            if !lemmas.contains(&l) {
                lemmas.push(l);
            }
        }
        let senses = lemmas
            .into_iter()
            .map(|lemma| {
                let counter = next_sense.entry(lemma.clone()).or_insert(0);
                *counter += 1;
                WordSense {
                    lemma,
                    synset: id,
                    sense_number: *counter,
                    tag_frequency: rng.gen_range(0..30),
                }
            })
            .collect();
        let mut relations = Vec::new();
        if i > 0 {
            for _ in 0..rng.gen_range(0..=2) {
                let target = ids[rng.gen_range(0..i)];
                let kind = match rng.gen_range(0..4) {
                    0 => RelationKind::PartMeronymOf,
                    1 => RelationKind::Other("similarTo".into()),
                    _ => RelationKind::HyponymOf,
                };
                relations.push((kind, target));
            }
        }
        synsets.push(Synset {
            id,
            senses,
            gloss: random_text(rng, 0, 10),
            relations,
        });
        ids.push(id);
    }
    WordNetStore::build(synsets, HashMap::new()).expect("random store is valid")
}

pub fn random_vocab(rng: &mut ChaCha8Rng, n: usize) -> Vocabulary {
    let mut vocab = Vocabulary::new("random");
    for i in 0..n {
        let words = rng.gen_range(1..=2);
        let label = (0..words)
            .map(|_| {
                if rng.gen_bool(0.1) {
                    "quay"
                } else {
                    WORDS.choose(rng).unwrap()
                }
            })
            .collect::<Vec<_>>()
            .join(" ");
        let definition = rng.gen_bool(0.85).then(|| random_text(rng, 2, 12));
        let id = TermId::new(format!("http://example.org/term/{i}")).unwrap();
        let mut term = Term::new(id, label, definition);
        if rng.gen_bool(0.3) {
            term.alt_labels.push(WORDS.choose(rng).unwrap().to_string());
        }
        vocab.insert(term);
    }
    vocab
}

pub fn random_roots(rng: &mut ChaCha8Rng, store: &WordNetStore) -> Vec<SynsetId> {
    let ids: Vec<SynsetId> = store.synsets().map(|s| s.id).collect();
    let k = rng.gen_range(1..=3.min(ids.len()));
    ids.choose_multiple(rng, k).copied().collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Compares a mapper run with the oracle, order, triples and scores included.
pub fn diff_against_oracle(actual: &MappingSet, expected: &[OracleMapping]) -> Result<(), String> {
    use num_traits::ToPrimitive;
    let got = actual.mappings();
    if got.len() != expected.len() {
        return Err(format!(
            "{} mappings vs {} from the oracle\n got: {:#?}\nwant: {:#?}",
            got.len(),
            expected.len(),
            got.iter()
                .map(|m| (m.term.as_str(), m.relation.name(), &m.synset.0))
                .collect::<Vec<_>>(),
            expected
                .iter()
                .map(|m| (&m.term, m.relation, &m.synset))
                .collect::<Vec<_>>()
        ));
    }
    for (g, e) in got.iter().zip(expected) {
        let same = g.term.as_str() == e.term
            && g.relation.name() == e.relation
            && g.synset.0 == e.synset
            && (g.score - e.sigma.to_f64().unwrap()).abs() < 1e-12
            && (g.provenance == wnlink::vocab::Provenance::LabelDerived) == e.from_label;
        if !same {
            return Err(format!("mismatch:\n got {g:?}\nwant {e:?}"));
        }
    }
    Ok(())
}
