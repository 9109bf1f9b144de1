//! Tokenization, stopword removal, noun lemmatization and lexical overlap.

mod lemma;

use std::collections::{BTreeSet, HashSet};

use crate::wordnet::WordNetStore;

pub use self::lemma::{lemmatize_noun, SUFFIX_RULES};

/// The English stopword list shipped in `data/stopwords_en.txt`.
pub const STOPWORDS_EN: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../../data/stopwords_en.txt"
));

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StopwordSet(HashSet<String>);

impl StopwordSet {
    /// One lowercase word per line; blank lines ignored.
    pub fn parse(text: &str) -> Self {
        StopwordSet(
            text.lines()
                .map(|l| l.trim().to_lowercase())
                .filter(|l| !l.is_empty())
                .collect(),
        )
    }

    pub fn english() -> Self {
        Self::parse(STOPWORDS_EN)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.0.contains(word)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Default for StopwordSet {
    fn default() -> Self {
        Self::english()
    }
}

/// A set of distinct, non-stopword lemmas.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LemmaBag(BTreeSet<String>);

impl LemmaBag {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, lemma: &str) -> bool {
        self.0.contains(lemma)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn insert(&mut self, lemma: impl Into<String>) {
        let lemma = lemma.into();
        if !lemma.is_empty() {
            self.0.insert(lemma);
        }
    }

    /// Lemmas joined by spaces, in sorted order.
    pub fn to_text(&self) -> String {
        self.0.iter().cloned().collect::<Vec<_>>().join(" ")
    }
}

impl<S: Into<String>> FromIterator<S> for LemmaBag {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        let mut bag = LemmaBag::new();
        for s in iter {
            bag.insert(s);
        }
        bag
    }
}

/// Lowercase maximal runs of letters, digits and hyphens. Hyphens at either
/// end of a run are trimmed; runs of hyphens alone are dropped.
pub fn tokenize(text: &str) -> Vec<String> {
    text.split(|c: char| !(c.is_alphanumeric() || c == '-'))
        .map(|t| t.trim_matches('-'))
        .filter(|t| !t.is_empty())
        .map(str::to_lowercase)
        .collect()
}

/// Lemmas of a label, used to exclude the defined term from its own definition.
pub fn label_lemmas(label: &str, store: &WordNetStore) -> LemmaBag {
    let tokens = tokenize(&label.replace('_', " "));
    let mut bag: LemmaBag = tokens.iter().map(|t| lemmatize_noun(t, store)).collect();
    if tokens.len() > 1 {
        bag.insert(tokens.join("_"));
    }
    bag
}

/// tokenize, drop stopwords, lemmatize, deduplicate, drop `exclude`.
pub fn normalize_definition(
    text: &str,
    exclude: &LemmaBag,
    store: &WordNetStore,
    stopwords: &StopwordSet,
) -> LemmaBag {
    tokenize(text)
        .into_iter()
        .filter(|t| !stopwords.contains(t))
        .map(|t| lemmatize_noun(&t, store))
        .filter(|l| !stopwords.contains(l) && !exclude.contains(l))
        .collect()
}

/// Number of distinct lemmas shared by two bags.
pub fn lexical_overlap(a: &LemmaBag, b: &LemmaBag) -> usize {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    small.iter().filter(|l| large.contains(l)).count()
}

/// Lexical forms to try for a label: the full collocation first, then each token.
pub fn compound_candidates(label: &str) -> Vec<String> {
    let tokens = tokenize(&label.replace('_', " "));
    match tokens.len() {
        0 => Vec::new(),
        1 => tokens,
        _ => std::iter::once(tokens.join("_")).chain(tokens).collect(),
    }
}

/// Terms mentioned in a definition that have noun senses in the store.
///
/// Adjacent token pairs forming a known collocation are taken as one term
/// (and their parts are not). Stopwords and lemmas in `exclude` are skipped.
/// Order is first occurrence, without duplicates.
pub fn extract_definition_terms(
    definition: &str,
    exclude: &LemmaBag,
    store: &WordNetStore,
    stopwords: &StopwordSet,
) -> Vec<String> {
    let tokens: Vec<String> = tokenize(definition)
        .into_iter()
        .filter(|t| !stopwords.contains(t))
        .collect();
    let mut out: Vec<String> = Vec::new();
    let mut push = |term: String| {
        if !exclude.contains(&term) && !stopwords.contains(&term) && !out.contains(&term) {
            out.push(term);
        }
    };
    let mut i = 0;
    while i < tokens.len() {
        if let Some(next) = tokens.get(i + 1) {
            let collocation = format!("{}_{}", tokens[i], lemmatize_noun(next, store));
            if store.has_lemma(&collocation) {
                push(collocation);
                i += 2;
                continue;
            }
        }
        let lemma = lemmatize_noun(&tokens[i], store);
        if store.has_lemma(&lemma) {
            push(lemma);
        }
        i += 1;
    }
    out
}
