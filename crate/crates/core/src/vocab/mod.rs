//! SKOS vocabularies, mapping triples and gold standards.

pub mod ntriples;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

use self::ntriples::{Node, SyntaxError};

pub const SKOS: &str = "http://www.w3.org/2004/02/skos/core#";

const PREF_LABEL: &str = "http://www.w3.org/2004/02/skos/core#prefLabel";
const ALT_LABEL: &str = "http://www.w3.org/2004/02/skos/core#altLabel";
const DEFINITION: &str = "http://www.w3.org/2004/02/skos/core#definition";
const BROADER: &str = "http://www.w3.org/2004/02/skos/core#broader";
const NARROWER: &str = "http://www.w3.org/2004/02/skos/core#narrower";
const RELATED: &str = "http://www.w3.org/2004/02/skos/core#related";
const EXACT_MATCH: &str = "http://www.w3.org/2004/02/skos/core#exactMatch";
const CLOSE_MATCH: &str = "http://www.w3.org/2004/02/skos/core#closeMatch";
const RELATED_MATCH: &str = "http://www.w3.org/2004/02/skos/core#relatedMatch";

#[derive(Debug, Error)]
pub enum VocabError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("line {line}: {message}")]
    Invalid { line: usize, message: String },
    #[error("not an absolute IRI: {0:?}")]
    BadIri(String),
}

/// Identity of a vocabulary term: an absolute IRI.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermId(String);

impl TermId {
    pub fn new(iri: impl Into<String>) -> Result<Self, VocabError> {
        let iri = iri.into();
        if is_absolute_iri(&iri) {
            Ok(TermId(iri))
        } else {
            Err(VocabError::BadIri(iri))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for TermId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn is_absolute_iri(s: &str) -> bool {
    let Some((scheme, rest)) = s.split_once(':') else {
        return false;
    };
    let mut chars = scheme.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'))
        && !rest.is_empty()
        && !s
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '<' | '>' | '"'))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub id: TermId,
    pub pref_label: String,
    pub alt_labels: Vec<String>,
    pub definition: Option<String>,
    pub broader: Vec<TermId>,
    pub narrower: Vec<TermId>,
    pub related: Vec<TermId>,
}

impl Term {
    /// A term with only a label and optional definition.
    pub fn new(id: TermId, pref_label: impl Into<String>, definition: Option<String>) -> Self {
        Term {
            id,
            pref_label: pref_label.into(),
            alt_labels: Vec::new(),
            definition,
            broader: Vec::new(),
            narrower: Vec::new(),
            related: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Vocabulary {
    pub name: String,
    terms: BTreeMap<TermId, Term>,
}

impl Vocabulary {
    pub fn new(name: impl Into<String>) -> Self {
        Vocabulary {
            name: name.into(),
            terms: BTreeMap::new(),
        }
    }

    /// Adds a term, replacing any previous term with the same id.
    pub fn insert(&mut self, term: Term) {
        self.terms.insert(term.id.clone(), term);
    }

    pub fn get(&self, id: &TermId) -> Option<&Term> {
        self.terms.get(id)
    }

    /// Terms in lexicographic id order.
    pub fn terms(&self) -> impl Iterator<Item = &Term> {
        self.terms.values()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Link targets (broader/narrower/related) that do not resolve within the vocabulary.
    pub fn external_links(&self) -> BTreeSet<&TermId> {
        self.terms
            .values()
            .flat_map(|t| t.broader.iter().chain(&t.narrower).chain(&t.related))
            .filter(|target| !self.terms.contains_key(*target))
            .collect()
    }
}

#[derive(Debug, Default)]
struct Draft {
    pref: BTreeMap<String, String>,
    alt: Vec<String>,
    definition: BTreeMap<String, String>,
    broader: Vec<TermId>,
    narrower: Vec<TermId>,
    related: Vec<TermId>,
}

/// Picks the English value, then the untagged one, then the first language in order.
fn preferred(values: &BTreeMap<String, String>) -> Option<&String> {
    values
        .get("en")
        .or_else(|| values.get(""))
        .or_else(|| values.values().next())
}

/// Reads a SKOS vocabulary from N-Triples. Returns the vocabulary and any warnings.
pub fn parse_vocabulary_ntriples(
    input: &str,
    name: &str,
) -> Result<(Vocabulary, Vec<String>), VocabError> {
    let mut drafts: BTreeMap<TermId, Draft> = BTreeMap::new();
    let mut warnings = Vec::new();

    for triple in ntriples::parse(input)? {
        let line = triple.line;
        let Node::Iri(subject) = &triple.subject else {
            continue;
        };
        let pred = triple.predicate.as_str();
        if ![
            PREF_LABEL, ALT_LABEL, DEFINITION, BROADER, NARROWER, RELATED,
        ]
        .contains(&pred)
        {
            continue;
        }
        let id = TermId::new(subject.as_str()).map_err(|_| VocabError::Invalid {
            line,
            message: format!("subject is not an absolute IRI: <{subject}>"),
        })?;
        let draft = drafts.entry(id).or_default();
        match (pred, &triple.object) {
            (PREF_LABEL | ALT_LABEL | DEFINITION, Node::Literal { value, lang, .. }) => {
                let lang = lang.clone().unwrap_or_default();
                let value = value.trim().to_string();
                match pred {
                    PREF_LABEL => {
                        if value.is_empty() {
                            warnings.push(format!("line {line}: empty prefLabel ignored"));
                        } else if let std::collections::btree_map::Entry::Vacant(slot) =
                            draft.pref.entry(lang.clone())
                        {
                            slot.insert(value);
                        } else {
                            warnings.push(format!(
                                "line {line}: second prefLabel for <{subject}> in language {lang:?} ignored"
                            ));
                        }
                    }
                    ALT_LABEL => {
                        if !value.is_empty() && !draft.alt.contains(&value) {
                            draft.alt.push(value);
                        }
                    }
                    _ => {
                        draft.definition.entry(lang).or_insert(value);
                    }
                }
            }
            (BROADER | NARROWER | RELATED, Node::Iri(target)) => {
                let target = TermId::new(target.as_str()).map_err(|_| VocabError::Invalid {
                    line,
                    message: format!("link target is not an absolute IRI: <{target}>"),
                })?;
                match pred {
                    BROADER => draft.broader.push(target),
                    NARROWER => draft.narrower.push(target),
                    _ => draft.related.push(target),
                }
            }
            _ => warnings.push(format!("line {line}: unexpected object kind for <{pred}>")),
        }
    }

    let mut vocab = Vocabulary::new(name);
    for (id, draft) in drafts {
        let Some(pref_label) = preferred(&draft.pref).cloned() else {
            if !draft.definition.is_empty() {
                warnings.push(format!("<{id}> has a definition but no prefLabel; skipped"));
            }
            continue;
        };
        let alt_labels = draft
            .alt
            .into_iter()
            .filter(|alt| *alt != pref_label)
            .collect();
        vocab.insert(Term {
            definition: preferred(&draft.definition).cloned(),
            id,
            pref_label,
            alt_labels,
            broader: draft.broader,
            narrower: draft.narrower,
            related: draft.related,
        });
    }
    Ok((vocab, warnings))
}

/// The three SKOS mapping relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MappingRelation {
    Exact,
    Close,
    Related,
}

impl MappingRelation {
    pub const ALL: [MappingRelation; 3] = [
        MappingRelation::Exact,
        MappingRelation::Close,
        MappingRelation::Related,
    ];

    pub fn predicate_iri(self) -> &'static str {
        match self {
            MappingRelation::Exact => EXACT_MATCH,
            MappingRelation::Close => CLOSE_MATCH,
            MappingRelation::Related => RELATED_MATCH,
        }
    }

    pub fn from_predicate_iri(iri: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.predicate_iri() == iri)
    }

    pub fn name(self) -> &'static str {
        match self {
            MappingRelation::Exact => "exact",
            MappingRelation::Close => "close",
            MappingRelation::Related => "related",
        }
    }
}

impl fmt::Display for MappingRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    LabelDerived,
    DefinitionDerived,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::LabelDerived => "label",
            Provenance::DefinitionDerived => "definition",
        }
    }
}

/// IRI of a WordNet synset as used in mapping triples.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SynsetIri(pub String);

impl fmt::Display for SynsetIri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One `<term, relation, synset>` mapping.
#[derive(Debug, Clone, PartialEq)]
pub struct Mapping {
    pub term: TermId,
    pub relation: MappingRelation,
    pub synset: SynsetIri,
    pub score: f64,
    pub provenance: Provenance,
    pub source_word: String,
}

pub type TripleKey = (TermId, MappingRelation, SynsetIri);

impl Mapping {
    pub fn key(&self) -> TripleKey {
        (self.term.clone(), self.relation, self.synset.clone())
    }

    fn sort_key(&self) -> (&str, &'static str, &str) {
        (
            self.term.as_str(),
            self.relation.predicate_iri(),
            self.synset.0.as_str(),
        )
    }
}

/// Parameters a mapping set was produced with.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunParameters {
    pub ol_min: usize,
    pub f_min: u32,
    pub taxonomy: bool,
    pub use_alt_labels: bool,
    pub seed: u64,
}

/// A set of mappings without duplicate triples. The first insertion of a triple wins.
#[derive(Debug, Clone, Default)]
pub struct MappingSet {
    mappings: Vec<Mapping>,
    seen: HashSet<TripleKey>,
    pub config: RunParameters,
}

impl MappingSet {
    pub fn new(config: RunParameters) -> Self {
        MappingSet {
            config,
            ..Default::default()
        }
    }

    /// Returns false if the triple was already present.
    pub fn insert(&mut self, mapping: Mapping) -> bool {
        debug_assert!((0.0..=1.0).contains(&mapping.score));
        debug_assert!(
            mapping.provenance == Provenance::LabelDerived
                || mapping.relation == MappingRelation::Related
        );
        if self.seen.insert(mapping.key()) {
            self.mappings.push(mapping);
            true
        } else {
            false
        }
    }

    pub fn mappings(&self) -> &[Mapping] {
        &self.mappings
    }

    pub fn len(&self) -> usize {
        self.mappings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mappings.is_empty()
    }

    pub fn contains(&self, key: &TripleKey) -> bool {
        self.seen.contains(key)
    }

    pub fn triples(&self) -> BTreeSet<TripleKey> {
        self.seen.iter().cloned().collect()
    }

    fn sorted(&self) -> Vec<&Mapping> {
        let mut rows: Vec<&Mapping> = self.mappings.iter().collect();
        rows.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        rows
    }
}

impl Extend<Mapping> for MappingSet {
    fn extend<I: IntoIterator<Item = Mapping>>(&mut self, iter: I) {
        for m in iter {
            self.insert(m);
        }
    }
}

pub fn serialize_mappings_ntriples(set: &MappingSet) -> String {
    let mut out = String::new();
    for m in set.sorted() {
        ntriples::write_triple(
            &mut out,
            &Node::Iri(m.term.0.clone()),
            m.relation.predicate_iri(),
            &Node::Iri(m.synset.0.clone()),
        );
    }
    out
}

pub fn serialize_mappings_tsv(set: &MappingSet) -> String {
    let mut out = String::from("term\trelation\tsynset\tscore\tprovenance\tsource_word\n");
    for m in set.sorted() {
        out.push_str(&format!(
            "{}\t{}\t{}\t{:.4}\t{}\t{}\n",
            m.term,
            m.relation,
            m.synset,
            m.score,
            m.provenance.name(),
            m.source_word
        ));
    }
    out
}

/// Reads a gold standard (or any mapping file) in the serializer's triple shape.
pub fn load_gold(input: &str) -> Result<(MappingSet, Vec<String>), VocabError> {
    let mut set = MappingSet::default();
    let mut warnings = Vec::new();
    for triple in ntriples::parse(input)? {
        let Some(relation) = MappingRelation::from_predicate_iri(&triple.predicate) else {
            warnings.push(format!(
                "line {}: predicate <{}> is not a mapping relation; ignored",
                triple.line, triple.predicate
            ));
            continue;
        };
        let (Some(subject), Some(object)) = (triple.subject.as_iri(), triple.object.as_iri())
        else {
            warnings.push(format!(
                "line {}: mapping subject and object must be IRIs; ignored",
                triple.line
            ));
            continue;
        };
        let term = TermId::new(subject).map_err(|_| VocabError::Invalid {
            line: triple.line,
            message: format!("subject is not an absolute IRI: <{subject}>"),
        })?;
        set.insert(Mapping {
            term,
            relation,
            synset: SynsetIri(object.to_string()),
            score: 1.0,
            provenance: Provenance::LabelDerived,
            source_word: String::new(),
        });
    }
    Ok((set, warnings))
}
