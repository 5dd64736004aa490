//! Bundled word lists and tables, plus loaders for user-supplied overrides.
//!
//! Lists are one entry per line; maps are `key<TAB>value`. Blank lines and
//! lines starting with `#` are skipped.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

pub const STOPWORDS: &str = include_str!("../data/stopwords.txt");
pub const EMOJI_MAP: &str = include_str!("../data/emoji_map.tsv");
pub const LEMMAS: &str = include_str!("../data/lemmas.tsv");
pub const BASE_LEXICON: &str = include_str!("../data/base_lexicon.tsv");
pub const KEYWORDS: &str = include_str!("../data/keywords.tsv");
pub const DEMOGRAPHICS: &str = include_str!("../data/demographics.tsv");

/// 200-tweet COVID-layout mini corpus used by the examples and tests.
pub const MINI_COVID_CSV: &str = include_str!("../data/mini_covid.csv");
pub const MINI_MPOX_CSV: &str = include_str!("../data/mini_mpox.csv");
/// Six linearly separable 2-feature points, two per class.
pub const SEPARABLE_FIXTURE: &str = include_str!("../data/separable.json");

fn entries(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
}

pub fn parse_list(text: &str) -> Vec<String> {
    entries(text).map(|(_, l)| l.trim().to_string()).collect()
}

pub fn parse_pairs(text: &str) -> Result<Vec<(String, String)>> {
    entries(text)
        .map(|(line, l)| {
            let (k, v) = l.split_once('\t').ok_or_else(|| Error::Malformed {
                line,
                message: "expected `key<TAB>value`".into(),
            })?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub fn load_list(path: &Path) -> Result<Vec<String>> {
    Ok(parse_list(&read_text(path)?))
}

pub fn load_pairs(path: &Path) -> Result<Vec<(String, String)>> {
    parse_pairs(&read_text(path)?)
}
