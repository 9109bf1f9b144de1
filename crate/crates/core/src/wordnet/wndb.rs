//! Reader for the Princeton WordNet database files (noun part only).

use std::collections::HashMap;

use super::{RelationKind, Synset, SynsetId, WordNetError, WordNetStore, WordSense};

fn parse_err(file: &str, line: usize, message: impl Into<String>) -> WordNetError {
    WordNetError::Parse {
        file: file.to_string(),
        line,
        message: message.into(),
    }
}

/// Data lines of a WNDB file: license header lines start with a space.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.starts_with(' ') && !l.trim().is_empty())
}

/// Builds a store from the text of `index.noun`, `data.noun`, `cntlist.rev` and `noun.exc`.
///
/// Sense numbers come from the order of offsets in `index.noun`; tag counts
/// come from `cntlist.rev` and default to 0. Pointers to other parts of
/// speech are dropped.
pub fn load_wndb(
    index_noun: &str,
    data_noun: &str,
    cntlist_rev: &str,
    noun_exc: &str,
) -> Result<WordNetStore, WordNetError> {
    let sense_numbers = parse_index(index_noun)?;
    let counts = parse_cntlist(cntlist_rev)?;

    let mut synsets = Vec::new();
    for (line, text) in content_lines(data_noun) {
        let err = |m: &str| parse_err("data.noun", line, m);
        let (fields, gloss) = match text.split_once('|') {
            Some((f, g)) => (f, g.trim()),
            None => (text, ""),
        };
        let mut tok = fields.split_whitespace();
        let mut next = |what: &str| tok.next().ok_or_else(|| err(&format!("missing {what}")));

        let offset: u64 = next("offset")?
            .parse()
            .map_err(|_| err("offset is not a number"))?;
        let id = SynsetId(offset);
        next("lex_filenum")?;
        let ss_type = next("ss_type")?;
        if ss_type != "n" {
            return Err(err(&format!(
                "expected noun synset, found ss_type {ss_type:?}"
            )));
        }
        let w_cnt = usize::from_str_radix(next("w_cnt")?, 16)
            .map_err(|_| err("w_cnt is not a hex number"))?;
        let mut senses = Vec::with_capacity(w_cnt);
        for _ in 0..w_cnt {
            let word = next("word")?.to_lowercase();
            next("lex_id")?;
            let Some(&sense_number) = sense_numbers.get(&(word.clone(), offset)) else {
                return Err(err(&format!(
                    "word {word:?} of synset {id} is missing from index.noun"
                )));
            };
            let tag_frequency = counts
                .get(&(word.clone(), sense_number))
                .copied()
                .unwrap_or(0);
            senses.push(WordSense {
                lemma: word,
                synset: id,
                sense_number,
                tag_frequency,
            });
        }
        let p_cnt: usize = next("p_cnt")?
            .parse()
            .map_err(|_| err("p_cnt is not a number"))?;
        let mut relations = Vec::with_capacity(p_cnt);
        for _ in 0..p_cnt {
            let symbol = next("pointer symbol")?;
            let target: u64 = next("pointer offset")?
                .parse()
                .map_err(|_| err("pointer offset is not a number"))?;
            let pos = next("pointer pos")?;
            next("pointer source/target")?;
            if pos != "n" {
                continue;
            }
            let kind = match symbol {
                "@" | "@i" => RelationKind::HyponymOf,
                "#p" => RelationKind::PartMeronymOf,
                other => RelationKind::Other(other.to_string()),
            };
            relations.push((kind, SynsetId(target)));
        }
        synsets.push(Synset {
            id,
            senses,
            gloss: gloss.to_string(),
            relations,
        });
    }

    WordNetStore::build(synsets, parse_exceptions(noun_exc)?)
}

/// (lemma, offset) -> sense number
fn parse_index(text: &str) -> Result<HashMap<(String, u64), u32>, WordNetError> {
    let mut out = HashMap::new();
    for (line, text) in content_lines(text) {
        let err = |m: &str| parse_err("index.noun", line, m);
        let tok: Vec<&str> = text.split_whitespace().collect();
        if tok.len() < 6 {
            return Err(err("too few fields"));
        }
        let lemma = tok[0].to_lowercase();
        if tok[1] != "n" {
            return Err(err(&format!("expected pos n, found {:?}", tok[1])));
        }
        let synset_cnt: usize = tok[2]
            .parse()
            .map_err(|_| err("synset_cnt is not a number"))?;
        let p_cnt: usize = tok[3].parse().map_err(|_| err("p_cnt is not a number"))?;
        // lemma pos synset_cnt p_cnt [ptr]{p_cnt} sense_cnt tagsense_cnt [offset]{synset_cnt}
        let offsets_at = 4 + p_cnt + 2;
        if tok.len() != offsets_at + synset_cnt {
            return Err(err(&format!(
                "expected {} fields for {synset_cnt} synsets, found {}",
                offsets_at + synset_cnt,
                tok.len()
            )));
        }
        for (i, off) in tok[offsets_at..].iter().enumerate() {
            let offset: u64 = off
                .parse()
                .map_err(|_| err("synset offset is not a number"))?;
            out.insert((lemma.clone(), offset), i as u32 + 1);
        }
    }
    Ok(out)
}

/// (lemma, sense number) -> tag count, nouns only.
fn parse_cntlist(text: &str) -> Result<HashMap<(String, u32), u32>, WordNetError> {
    let mut out = HashMap::new();
    for (line, text) in content_lines(text) {
        let err = |m: &str| parse_err("cntlist.rev", line, m);
        let tok: Vec<&str> = text.split_whitespace().collect();
        let [key, sense, count] = tok[..] else {
            return Err(err("expected `sense_key sense_number tag_cnt`"));
        };
        let (lemma, rest) = key
            .split_once('%')
            .ok_or_else(|| err("malformed sense key"))?;
        if !rest.starts_with("1:") {
            continue;
        }
        let sense: u32 = sense
            .parse()
            .map_err(|_| err("sense number is not a number"))?;
        let count: u32 = count
            .parse()
            .map_err(|_| err("tag count is not a number"))?;
        out.insert((lemma.to_lowercase(), sense), count);
    }
    Ok(out)
}

fn parse_exceptions(text: &str) -> Result<HashMap<String, Vec<String>>, WordNetError> {
    let mut out = HashMap::new();
    for (line, text) in content_lines(text) {
        let mut tok = text.split_whitespace();
        let form = tok.next().unwrap_or_default().to_lowercase();
        let bases: Vec<String> = tok.map(str::to_lowercase).collect();
        if bases.is_empty() {
            return Err(parse_err("noun.exc", line, "exception without a base form"));
        }
        out.insert(form, bases);
    }
    Ok(out)
}
