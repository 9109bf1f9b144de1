//! Ranking, the normalised salience score, and best-candidate selection.

use std::cmp::{Ordering, Reverse};

use super::{Candidate, MatchKind};
use crate::scalar::Scalar;
use crate::vocab::MappingRelation;
use crate::wordnet::SynsetId;

/// Competition ranking in descending order: `1 + #{strictly greater values}`.
pub fn rank_desc<V: PartialOrd>(values: &[V]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].partial_cmp(&values[a]).unwrap_or(Ordering::Equal));
    let mut ranks = vec![0; values.len()];
    for (pos, &idx) in order.iter().enumerate() {
        ranks[idx] = if pos > 0 && values[order[pos - 1]] == values[idx] {
            ranks[order[pos - 1]]
        } else {
            pos + 1
        };
    }
    ranks
}

/// A salience value in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct SalienceScore<T>(T);

impl<T: Scalar> SalienceScore<T> {
    pub fn new(value: T) -> Option<Self> {
        (value >= T::zero() && value <= T::one()).then_some(SalienceScore(value))
    }

    pub fn value(self) -> T {
        self.0
    }
}

/// `(2n - rank_f - rank_ol + theta) / (2n - 1)` for a candidate set of size `n`.
///
/// Panics unless `1 <= rank_f, rank_ol <= n` and `theta <= 1`.
pub fn salience_from_ranks<T: Scalar>(
    n: usize,
    rank_f: usize,
    rank_ol: usize,
    theta: u8,
) -> SalienceScore<T> {
    assert!(n >= 1 && (1..=n).contains(&rank_f) && (1..=n).contains(&rank_ol) && theta <= 1);
    let num = T::from_count(2 * n + theta as usize) - T::from_count(rank_f + rank_ol);
    let den = T::from_count(2 * n - 1);
    SalienceScore::new(num / den).expect("salience lies in [0, 1]")
}

/// Salience of every candidate relative to the whole set.
pub fn salience_all<T: Scalar>(all: &[Candidate]) -> Vec<SalienceScore<T>> {
    let f: Vec<u32> = all.iter().map(|c| c.f).collect();
    let ol: Vec<usize> = all.iter().map(|c| c.ol).collect();
    let (rf, rol) = (rank_desc(&f), rank_desc(&ol));
    all.iter()
        .enumerate()
        .map(|(i, c)| salience_from_ranks(all.len(), rf[i], rol[i], c.theta))
        .collect()
}

/// Salience of `all[index]`.
pub fn salience<T: Scalar>(index: usize, all: &[Candidate]) -> SalienceScore<T> {
    salience_all(all)[index]
}

/// Index of the candidate with the highest salience.
///
/// Ties go to the higher tag frequency, then the lower synset offset, then a
/// complete match, then the lexicographically smaller lemma. `None` for an
/// empty set.
pub fn select_best<T: Scalar>(all: &[Candidate], scores: &[SalienceScore<T>]) -> Option<usize> {
    assert_eq!(all.len(), scores.len());
    (0..all.len()).reduce(|best, i| {
        let order = scores[i]
            .0
            .partial_cmp(&scores[best].0)
            .unwrap_or(Ordering::Equal)
            .then_with(|| tie_key(&all[i]).cmp(&tie_key(&all[best])));
        if order == Ordering::Greater {
            i
        } else {
            best
        }
    })
}

fn tie_key(c: &Candidate) -> (u32, Reverse<SynsetId>, bool, Reverse<&str>) {
    (
        c.f,
        Reverse(c.synset),
        c.match_kind == MatchKind::Complete,
        Reverse(c.word_sense.lemma.as_str()),
    )
}

/// Close when the best candidate is a complete match with maximal overlap and
/// maximal frequency over the candidate set; Related otherwise.
pub fn assign_relation(best: &Candidate, all: &[Candidate]) -> MappingRelation {
    let max_ol = all.iter().map(|c| c.ol).max().unwrap_or(0);
    let max_f = all.iter().map(|c| c.f).max().unwrap_or(0);
    if best.match_kind == MatchKind::Complete && best.ol == max_ol && best.f == max_f {
        MappingRelation::Close
    } else {
        MappingRelation::Related
    }
}
