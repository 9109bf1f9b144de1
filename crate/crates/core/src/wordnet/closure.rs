use std::collections::{BTreeSet, VecDeque};

use super::{SynsetId, WordNetError, WordNetStore};

/// A subset of the store's synsets, such as a salient taxonomy.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SynsetSet(BTreeSet<SynsetId>);

impl SynsetSet {
    pub fn contains(&self, id: SynsetId) -> bool {
        self.0.contains(&id)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = SynsetId> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &SynsetSet) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl FromIterator<SynsetId> for SynsetSet {
    fn from_iter<I: IntoIterator<Item = SynsetId>>(iter: I) -> Self {
        SynsetSet(iter.into_iter().collect())
    }
}

pub(super) fn descendants(
    store: &WordNetStore,
    roots: &[SynsetId],
) -> Result<SynsetSet, WordNetError> {
    if let Some(bad) = roots.iter().find(|r| !store.contains(**r)) {
        return Err(WordNetError::UnknownSynset(bad.to_string()));
    }
    let mut seen: BTreeSet<SynsetId> = roots.iter().copied().collect();
    let mut queue: VecDeque<SynsetId> = seen.iter().copied().collect();
    while let Some(id) = queue.pop_front() {
        for &child in store.children(id) {
            if seen.insert(child) {
                queue.push_back(child);
            }
        }
    }
    Ok(SynsetSet(seen))
}
