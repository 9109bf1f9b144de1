use crate::wordnet::WordNetStore;

/// Noun suffix detachment rules, tried in order.
pub const SUFFIX_RULES: [(&str, &str); 8] = [
    ("s", ""),
    ("ses", "s"),
    ("xes", "x"),
    ("zes", "z"),
    ("ches", "ch"),
    ("shes", "sh"),
    ("ies", "y"),
    ("men", "man"),
];

/// Reduces a lowercase token to a noun lemma known to the store.
///
/// Irregular forms come from the store's exception list. A token that is
/// already a lemma is kept. Otherwise the first suffix rule whose result is a
/// known lemma wins; if none applies the token is returned unchanged.
pub fn lemmatize_noun(token: &str, store: &WordNetStore) -> String {
    if let Some(bases) = store.exception(token) {
        if let Some(base) = bases.iter().find(|b| store.has_lemma(b)).or(bases.first()) {
            return base.clone();
        }
    }
    if store.has_lemma(token) {
        return token.to_string();
    }
    for (suffix, replacement) in SUFFIX_RULES {
        if let Some(stem) = token.strip_suffix(suffix) {
            if stem.is_empty() && replacement.is_empty() {
                continue;
            }
            let candidate = format!("{stem}{replacement}");
            if store.has_lemma(&candidate) {
                return candidate;
            }
        }
    }
    token.to_string()
}
