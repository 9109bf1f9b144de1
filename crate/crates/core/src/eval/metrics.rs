use crate::scalar::Scalar;
use crate::vocab::MappingSet;

/// Precision, recall and F-measure of a mapping against a gold standard.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult<T> {
    pub precision: T,
    pub recall: T,
    pub f_measure: T,
    pub beta: T,
    pub n_mappings: usize,
    pub n_gold: usize,
    pub n_correct: usize,
}

fn ratio<T: Scalar>(num: usize, den: usize) -> T {
    if den == 0 {
        T::zero()
    } else {
        T::from_count(num) / T::from_count(den)
    }
}

/// Number of triples shared by the two sets (relation included).
pub fn correct_count(mapping: &MappingSet, gold: &MappingSet) -> usize {
    let (small, large) = if mapping.len() <= gold.len() {
        (mapping, gold)
    } else {
        (gold, mapping)
    };
    small
        .mappings()
        .iter()
        .filter(|m| large.contains(&m.key()))
        .count()
}

/// `(|M ∩ M_h| / |M|, |M ∩ M_h| / |M_h|)`, each 0 when its denominator is 0.
pub fn precision_recall<T: Scalar>(mapping: &MappingSet, gold: &MappingSet) -> (T, T) {
    let hits = correct_count(mapping, gold);
    (ratio(hits, mapping.len()), ratio(hits, gold.len()))
}

/// `(1 + β²)·P·R / (β²·P + R)`, 0 when the denominator is 0.
pub fn f_measure<T: Scalar>(precision: T, recall: T, beta: T) -> T {
    let b2 = beta * beta;
    let den = b2 * precision + recall;
    if den == T::zero() {
        T::zero()
    } else {
        (T::one() + b2) * precision * recall / den
    }
}

/// The default β = 0.5, which favours precision.
pub fn default_beta<T: Scalar>() -> T {
    T::one() / T::from_count(2)
}

pub fn evaluate<T: Scalar>(mapping: &MappingSet, gold: &MappingSet, beta: T) -> EvalResult<T> {
    let (precision, recall) = precision_recall(mapping, gold);
    EvalResult {
        precision,
        recall,
        f_measure: f_measure(precision, recall, beta),
        beta,
        n_mappings: mapping.len(),
        n_gold: gold.len(),
        n_correct: correct_count(mapping, gold),
    }
}
