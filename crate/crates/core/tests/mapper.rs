mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use common::*;
use wnlink::eval::{evaluate, SweepGrid};
use wnlink::mapper::{random_baseline_mapping, Mapper, MapperConfig};
use wnlink::text::{extract_definition_terms, LemmaBag, StopwordSet};
use wnlink::vocab::{serialize_mappings_ntriples, MappingRelation, Provenance, Vocabulary};
use wnlink::wordnet::{parse_roots, SynsetSet, WordNetStore};

const OSN: &str = "http://spatial.ucd.ie/lod/osn/term/";
const WN: &str = "http://www.w3.org/2006/03/wn/wn20/instances/synset-";

fn config(ol_min: usize, f_min: u32, taxonomy: Option<&Arc<SynsetSet>>) -> MapperConfig {
    MapperConfig {
        ol_min,
        f_min,
        taxonomy: taxonomy.cloned(),
        ..Default::default()
    }
}

fn fixture_taxonomy(store: &WordNetStore) -> Arc<SynsetSet> {
    let roots = parse_roots(&default_roots(), store).unwrap();
    Arc::new(store.taxonomy_closure(&roots).unwrap())
}

fn oracle_config(ol_min: usize, f_min: u32, tax: Option<&SynsetSet>, alt: bool) -> OracleConfig {
    OracleConfig {
        ol_min,
        f_min,
        taxonomy: tax.map(|t| t.iter().collect()),
        alt_labels: alt,
    }
}

#[test]
fn fixture_mapping_at_optimal_setting() {
    let store = fixture_store();
    let vocab = fixture_vocab();
    let tax = fixture_taxonomy(&store);
    let set = Mapper::new(&store).map_vocabulary(&vocab, &config(1, 1, Some(&tax)));
    let triples: BTreeSet<(String, &str, String)> = set
        .mappings()
        .iter()
        .map(|m| (m.term.to_string(), m.relation.name(), m.synset.0.clone()))
        .collect();
    let t = |term: &str, rel: &'static str, syn: &str| {
        let term = if term.starts_with("http") {
            term.to_string()
        } else {
            format!("{OSN}{term}")
        };
        (term, rel, format!("{WN}{syn}"))
    };
    let expected: BTreeSet<_> = [
        t("k:natural/v:bay", "close", "bay-noun-1"),
        t("k:natural/v:bay", "related", "sea-noun-1"),
        t("k:natural/v:bay", "related", "land-noun-2"),
        t("k:power/v:station", "close", "power_station-noun-1"),
        t("k:power/v:station", "related", "electricity-noun-1"),
        t("k:leisure/v:swimming_pool", "related", "pool-noun-1"),
        t("k:waterway/v:river", "close", "river-noun-1"),
        t("k:waterway/v:river", "related", "body_of_water-noun-1"),
        t(
            "http://www.geonames.org/ontology#L.FLD",
            "close",
            "field-noun-1",
        ),
    ]
    .into_iter()
    .collect();
    assert_eq!(triples, expected);

    let r = evaluate::<f64>(&set, &fixture_gold(), 0.5);
    assert_eq!((r.n_mappings, r.n_gold, r.n_correct), (9, 7, 7));

    let def_derived = set
        .mappings()
        .iter()
        .filter(|m| m.provenance == Provenance::DefinitionDerived);
    for m in def_derived {
        assert_eq!(m.relation, MappingRelation::Related);
    }
}

#[test]
fn fixture_matches_oracle_on_full_grid_with_and_without_alt_labels() {
    let store = fixture_store();
    let vocab = fixture_vocab();
    let tax = fixture_taxonomy(&store);
    let mapper = Mapper::new(&store);
    let oracle = Oracle::new(&store);
    for alt in [false, true] {
        for p in SweepGrid::default().points() {
            let t = p.taxonomy.then_some(&tax);
            let cfg = MapperConfig {
                use_alt_labels: alt,
                ..config(p.ol_min, p.f_min, t)
            };
            let got = mapper.map_vocabulary(&vocab, &cfg);
            let want = oracle.map_vocabulary(
                &vocab,
                &oracle_config(p.ol_min, p.f_min, t.map(|a| a.as_ref()), alt),
            );
            if let Err(e) = diff_against_oracle(&got, &want) {
                panic!("at {p:?} alt={alt}: {e}");
            }
        }
    }
}

#[test]
fn random_worlds_match_oracle() {
    for seed in 0..60 {
        let mut r = rng(seed);
        let n = 5 + (seed as usize % 30);
        let store = random_store(&mut r, n);
        let vocab = random_vocab(&mut r, 6);
        let roots = random_roots(&mut r, &store);
        let tax = Arc::new(store.taxonomy_closure(&roots).unwrap());
        let mapper = Mapper::new(&store);
        let oracle = Oracle::new(&store);
        for (ol_min, f_min, on, alt) in [
            (0, 0, false, false),
            (1, 0, false, true),
            (0, 5, true, false),
            (2, 10, true, true),
        ] {
            let t = on.then_some(&tax);
            let cfg = MapperConfig {
                use_alt_labels: alt,
                ..config(ol_min, f_min, t)
            };
            let got = mapper.map_vocabulary(&vocab, &cfg);
            let want = oracle.map_vocabulary(
                &vocab,
                &oracle_config(ol_min, f_min, t.map(|a| a.as_ref()), alt),
            );
            if let Err(e) = diff_against_oracle(&got, &want) {
                panic!("seed {seed} ol_min={ol_min} f_min={f_min} tax={on} alt={alt}: {e}");
            }
        }
    }
}

fn candidate_keys(
    mapper: &Mapper<'_>,
    vocab: &Vocabulary,
    cfg: &MapperConfig,
) -> BTreeSet<(String, String, u64, String)> {
    let mut out = BTreeSet::new();
    for term in vocab.terms() {
        let def = mapper.definition_bag(term, &term.pref_label);
        for form in wnlink::text::compound_candidates(&term.pref_label) {
            for c in mapper.find_candidates(&def, &form, cfg) {
                out.insert((
                    term.id.to_string(),
                    form.clone(),
                    c.synset.0,
                    c.word_sense.lemma,
                ));
            }
        }
    }
    out
}

fn mapped_terms(mapper: &Mapper<'_>, vocab: &Vocabulary, cfg: &MapperConfig) -> usize {
    let set = mapper.map_vocabulary(vocab, cfg);
    set.mappings()
        .iter()
        .map(|m| m.term.clone())
        .collect::<BTreeSet<_>>()
        .len()
}

#[test]
fn stricter_settings_never_add_candidates() {
    for seed in 0..100 {
        let mut r = rng(1000 + seed);
        let store = random_store(&mut r, 25);
        let vocab = random_vocab(&mut r, 5);
        let roots = random_roots(&mut r, &store);
        let tax = Arc::new(store.taxonomy_closure(&roots).unwrap());
        let mapper = Mapper::new(&store);
        use rand::Rng;
        let ol = r.gen_range(0..4);
        let f = r.gen_range(0..20);
        let on = r.gen_bool(0.5).then_some(&tax);
        let base = config(ol, f, on);
        let stricter = [
            config(ol + 1, f, on),
            config(ol, f + r.gen_range(1..10), on),
            config(ol, f, Some(&tax)),
        ];
        let base_c = candidate_keys(&mapper, &vocab, &base);
        let base_n = mapped_terms(&mapper, &vocab, &base);
        for s in &stricter {
            let c = candidate_keys(&mapper, &vocab, s);
            assert!(
                c.is_subset(&base_c),
                "seed {seed}: candidates grew under {:?}",
                s.params()
            );
            let n = mapped_terms(&mapper, &vocab, s);
            assert!(
                n <= base_n,
                "seed {seed}: mapped terms grew {base_n} -> {n}"
            );
        }
    }
}

#[test]
fn output_is_deterministic() {
    let store = fixture_store();
    let vocab = fixture_vocab();
    let cfg = config(0, 0, None);
    let a = serialize_mappings_ntriples(&Mapper::new(&store).map_vocabulary(&vocab, &cfg));
    let b = serialize_mappings_ntriples(&Mapper::new(&store).map_vocabulary(&vocab, &cfg));
    assert_eq!(a, b);
}

#[test]
fn definition_terms_examples() {
    let store = fixture_store();
    let stop = StopwordSet::english();
    let none = LemmaBag::new();
    assert!(extract_definition_terms("", &none, &store, &stop).is_empty());
    let terms = extract_definition_terms("station producing electricity", &none, &store, &stop);
    assert!(terms.contains(&"electricity".to_string()));

    let with_collocation = wnlink::wordnet::load_fixture(
        r#"{"synsets":[
            {"offset":1,"lemmas":[{"lemma":"swimming_pool","sense":1}],"gloss":""},
            {"offset":2,"lemmas":[{"lemma":"swimming","sense":1}],"gloss":""},
            {"offset":3,"lemmas":[{"lemma":"pool","sense":1}],"gloss":""},
            {"offset":4,"lemmas":[{"lemma":"park","sense":1}],"gloss":""}]}"#,
    )
    .unwrap();
    let terms = extract_definition_terms(
        "A park with outdoor swimming pools",
        &none,
        &with_collocation,
        &stop,
    );
    assert_eq!(terms, vec!["park".to_string(), "swimming_pool".to_string()]);
}

#[test]
fn random_baseline_behaviour() {
    let store = fixture_store();
    let vocab = fixture_vocab();
    let a = serialize_mappings_ntriples(&random_baseline_mapping(&vocab, &store, 42));
    let b = serialize_mappings_ntriples(&random_baseline_mapping(&vocab, &store, 42));
    assert_eq!(a, b);

    // "river" has exactly one noun sense in the fixture
    let river = format!("{OSN}k:waterway/v:river");
    for seed in 0..20 {
        let set = random_baseline_mapping(&vocab, &store, seed);
        let m: Vec<_> = set
            .mappings()
            .iter()
            .filter(|m| m.term.as_str() == river && m.provenance == Provenance::LabelDerived)
            .collect();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].synset.0, format!("{WN}river-noun-1"));
    }

    // "field" has two senses; each should be picked about half the time
    let field = "http://www.geonames.org/ontology#L.FLD";
    let first = (0..1000)
        .filter(|&seed| {
            random_baseline_mapping(&vocab, &store, seed)
                .mappings()
                .iter()
                .any(|m| {
                    m.term.as_str() == field
                        && m.provenance == Provenance::LabelDerived
                        && m.synset.0.ends_with("field-noun-1")
                })
        })
        .count();
    let share = first as f64 / 1000.0;
    assert!((share - 0.5).abs() <= 0.05, "field-noun-1 chosen {share}");
}

mod salience {
    use num_rational::Ratio;
    use proptest::prelude::*;
    use wnlink::mapper::{
        assign_relation, salience_all, salience_from_ranks, select_best, Candidate, MatchKind,
    };
    use wnlink::vocab::MappingRelation;
    use wnlink::wordnet::{SynsetId, WordSense};
    use wnlink::Exact;

    fn candidates() -> impl Strategy<Value = Vec<Candidate>> {
        prop::collection::vec((0u32..6, 0usize..6, 0u8..=1, any::<bool>()), 1..15).prop_map(|raw| {
            raw.into_iter()
                .enumerate()
                .map(|(i, (f, ol, theta, complete))| Candidate {
                    synset: SynsetId(i as u64 + 1),
                    word_sense: WordSense {
                        lemma: format!("w{i}"),
                        synset: SynsetId(i as u64 + 1),
                        sense_number: 1,
                        tag_frequency: f,
                    },
                    match_kind: if complete {
                        MatchKind::Complete
                    } else {
                        MatchKind::Partial
                    },
                    f,
                    ol,
                    theta,
                })
                .collect()
        })
    }

    #[test]
    fn worked_example_is_exact() {
        assert_eq!(
            salience_from_ranks::<Exact>(3, 1, 2, 1).value(),
            Ratio::new(4, 5)
        );
        assert_eq!(salience_from_ranks::<f64>(3, 1, 2, 1).value(), 0.8);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn salience_bounds_and_maximum(all in candidates()) {
            let n = all.len();
            let scores = salience_all::<Exact>(&all);
            for (i, c) in all.iter().enumerate() {
                let s = scores[i].value();
                prop_assert!(s >= Ratio::from_integer(0) && s <= Ratio::from_integer(1));
                let rank_f = 1 + all.iter().filter(|o| o.f > c.f).count();
                let rank_ol = 1 + all.iter().filter(|o| o.ol > c.ol).count();
                let want = Ratio::new(
                    (2 * n + c.theta as usize - rank_f - rank_ol) as i64,
                    (2 * n - 1) as i64,
                );
                prop_assert_eq!(s, want);
                let top = rank_f == 1 && rank_ol == 1 && c.theta == 1;
                prop_assert_eq!(s == Ratio::from_integer(1), top);
            }
            let best = select_best(&all, &scores).unwrap();
            prop_assert!(scores.iter().all(|s| *s <= scores[best]));
            prop_assert_ne!(assign_relation(&all[best], &all), MappingRelation::Exact);
        }
    }
}
