//! Tweet normalization: emoji expansion, case folding, URL / mention /
//! hashtag / digit-word / punctuation removal, tokenization, stopword
//! filtering, stemming and lemmatization.
//!
//! Normalization runs in a fixed order:
//! emoji expansion, lowercase, URLs, mentions, hashtags, digit words,
//! punctuation. Emoji expansion has to come first or the pictographs are
//! gone by the time punctuation stripping runs.

mod porter;

use std::collections::{HashMap, HashSet};
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::corpus::RawRecord;
use crate::error::{Error, Result};
use crate::resources;

pub use porter::stem_word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrepFlags {
    pub lowercase: bool,
    pub strip_urls: bool,
    pub strip_mentions: bool,
    pub strip_hashtags: bool,
    pub strip_numeral_words: bool,
    pub strip_punctuation: bool,
    pub expand_emojis: bool,
    pub drop_stopwords: bool,
    pub do_stem: bool,
    pub do_lemmatize: bool,
}

impl Default for PrepFlags {
    fn default() -> Self {
        PrepFlags {
            lowercase: true,
            strip_urls: true,
            strip_mentions: true,
            strip_hashtags: true,
            strip_numeral_words: true,
            strip_punctuation: true,
            expand_emojis: true,
            drop_stopwords: true,
            do_stem: true,
            do_lemmatize: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PrepConfig {
    pub flags: PrepFlags,
    pub stopwords: HashSet<String>,
    pub emoji_map: HashMap<String, String>,
    pub lemma_table: HashMap<String, String>,
    emoji_names: HashSet<String>,
    emoji_max_chars: usize,
}

impl PrepConfig {
    pub fn new(
        flags: PrepFlags,
        stopwords: impl IntoIterator<Item = String>,
        emoji_map: impl IntoIterator<Item = (String, String)>,
        lemma_table: impl IntoIterator<Item = (String, String)>,
    ) -> Result<Self> {
        let stopwords = stopwords.into_iter().map(|w| w.to_lowercase()).collect();
        let emoji_map: HashMap<String, String> = emoji_map.into_iter().collect();
        for (emoji, name) in &emoji_map {
            if name.is_empty() || name.chars().any(char::is_whitespace) || emoji.is_empty() {
                return Err(Error::Validation(format!(
                    "emoji map entry `{emoji}` -> `{name}`: names must be non-empty without whitespace"
                )));
            }
        }
        let emoji_names = emoji_map.values().map(|n| n.to_lowercase()).collect();
        let emoji_max_chars = emoji_map.keys().map(|k| k.chars().count()).max().unwrap_or(0);
        Ok(PrepConfig {
            flags,
            stopwords,
            emoji_map,
            lemma_table: lemma_table.into_iter().collect(),
            emoji_names,
            emoji_max_chars,
        })
    }

    /// Default flags with the bundled stopword list, emoji map and lemma table.
    pub fn bundled() -> Self {
        Self::with_overrides(PrepFlags::default(), None, None, None).expect("bundled tables are valid")
    }

    /// Bundled tables, replacing any of them with a file when a path is given.
    pub fn with_overrides(
        flags: PrepFlags,
        stopwords: Option<&Path>,
        emoji_map: Option<&Path>,
        lemmas: Option<&Path>,
    ) -> Result<Self> {
        let stop = match stopwords {
            Some(p) => resources::load_list(p)?,
            None => resources::parse_list(resources::STOPWORDS),
        };
        let emoji = match emoji_map {
            Some(p) => resources::load_pairs(p)?,
            None => resources::parse_pairs(resources::EMOJI_MAP)?,
        };
        let lemma = match lemmas {
            Some(p) => resources::load_pairs(p)?,
            None => resources::parse_pairs(resources::LEMMAS)?,
        };
        Self::new(flags, stop, emoji, lemma)
    }
}

impl Default for PrepConfig {
    fn default() -> Self {
        Self::bundled()
    }
}

/// Which token view downstream features are built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TokenView {
    Tokens,
    #[default]
    Stems,
    Lemmas,
}

impl FromStr for TokenView {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tokens" => Ok(TokenView::Tokens),
            "stems" => Ok(TokenView::Stems),
            "lemmas" => Ok(TokenView::Lemmas),
            other => Err(Error::Validation(format!("unknown token view `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleanDocument {
    pub id: String,
    pub tokens: Vec<String>,
    pub stems: Vec<String>,
    pub lemmas: Vec<String>,
}

impl CleanDocument {
    pub fn view(&self, view: TokenView) -> &[String] {
        match view {
            TokenView::Tokens => &self.tokens,
            TokenView::Stems => &self.stems,
            TokenView::Lemmas => &self.lemmas,
        }
    }
}

fn url_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"(?i)(?:https?://|www\.)\S*").unwrap())
}

fn mention_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"@\w+").unwrap())
}

fn hashtag_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"#\w+").unwrap())
}

/// Punctuation and symbols, plus the invisible joiners and variation
/// selectors that trail emoji sequences.
fn punct_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"[\p{P}\p{S}\p{Cf}\x{FE00}-\x{FE0F}]").unwrap())
}

fn expand_emojis(raw: &str, config: &PrepConfig) -> String {
    if config.emoji_map.is_empty() {
        return raw.to_string();
    }
    let chars: Vec<(usize, char)> = raw.char_indices().collect();
    let mut out = String::with_capacity(raw.len());
    let mut i = 0;
    'outer: while i < chars.len() {
        let max = config.emoji_max_chars.min(chars.len() - i);
        for len in (1..=max).rev() {
            let start = chars[i].0;
            let end = chars.get(i + len).map_or(raw.len(), |c| c.0);
            if let Some(name) = config.emoji_map.get(&raw[start..end]) {
                out.push(' ');
                out.push_str(name);
                out.push(' ');
                i += len;
                continue 'outer;
            }
        }
        out.push(chars[i].1);
        i += 1;
    }
    out
}

pub fn normalize_text(raw: &str, config: &PrepConfig) -> String {
    let f = &config.flags;
    let mut text = if f.expand_emojis {
        expand_emojis(raw, config)
    } else {
        raw.to_string()
    };
    if f.lowercase {
        text = text.to_lowercase();
    }
    if f.strip_urls {
        text = url_re().replace_all(&text, " ").into_owned();
    }
    if f.strip_mentions {
        text = mention_re().replace_all(&text, " ").into_owned();
    }
    if f.strip_hashtags {
        text = hashtag_re().replace_all(&text, " ").into_owned();
    }
    let words = text
        .split_whitespace()
        .filter(|w| !(f.strip_numeral_words && w.chars().any(char::is_numeric)));
    let mut out: Vec<String> = Vec::new();
    for word in words {
        let protected = f.expand_emojis && config.emoji_names.contains(&word.to_lowercase());
        if f.strip_punctuation && !protected {
            let cleaned = punct_re().replace_all(word, " ");
            out.extend(cleaned.split_whitespace().map(str::to_string));
        } else {
            out.push(word.to_string());
        }
    }
    out.join(" ")
}

pub fn tokenize(clean: &str) -> Vec<String> {
    clean.split_whitespace().map(str::to_string).collect()
}

pub fn filter_stopwords(tokens: &[String], stopwords: &HashSet<String>) -> Vec<String> {
    tokens
        .iter()
        .filter(|t| !stopwords.contains(t.as_str()))
        .cloned()
        .collect()
}

pub fn stem(tokens: &[String]) -> Vec<String> {
    tokens.iter().map(|t| stem_word(t)).collect()
}

pub fn lemmatize(tokens: &[String], table: &HashMap<String, String>) -> Vec<String> {
    tokens.iter().map(|t| table.get(t).unwrap_or(t).clone()).collect()
}

pub fn preprocess_text(id: &str, text: &str, config: &PrepConfig) -> CleanDocument {
    let mut tokens = tokenize(&normalize_text(text, config));
    if config.flags.drop_stopwords {
        tokens = filter_stopwords(&tokens, &config.stopwords);
    }
    let stems = if config.flags.do_stem {
        stem(&tokens)
    } else {
        Vec::new()
    };
    let lemmas = if config.flags.do_lemmatize {
        lemmatize(&tokens, &config.lemma_table)
    } else {
        Vec::new()
    };
    CleanDocument {
        id: id.to_string(),
        tokens,
        stems,
        lemmas,
    }
}

pub fn preprocess(record: &RawRecord, config: &PrepConfig) -> CleanDocument {
    preprocess_text(&record.id, &record.text, config)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    fn plain_config() -> PrepConfig {
        PrepConfig::new(PrepFlags::default(), Vec::new(), Vec::new(), Vec::new()).unwrap()
    }

    #[test]
    fn strips_urls_mentions_hashtags_numbers() {
        let cfg = plain_config();
        assert_eq!(normalize_text("Check https://t.co/x @WHO #mpox 123!!", &cfg), "check");
        assert_eq!(normalize_text("", &cfg), "");
        assert_eq!(normalize_text("see www.cdc.gov/mpox now", &cfg), "see now");
        assert_eq!(normalize_text("covid-19 cases", &cfg), "cases");
    }

    #[test]
    fn emoji_expansion_survives_punctuation() {
        let cfg = PrepConfig::new(
            PrepFlags::default(),
            Vec::new(),
            vec![("😊".to_string(), "smiling_face".to_string())],
            Vec::new(),
        )
        .unwrap();
        assert_eq!(normalize_text("Good 😊", &cfg), "good smiling_face");
        assert_eq!(normalize_text("Good😊😊!", &cfg), "good smiling_face smiling_face");
        // unmapped emoji is plain symbol noise
        assert_eq!(normalize_text("ok 🦠", &cfg), "ok");
        // underscores outside emoji names are punctuation
        assert_eq!(normalize_text("snake_case", &cfg), "snake case");
    }

    #[test]
    fn emoji_names_reject_whitespace() {
        let err = PrepConfig::new(
            PrepFlags::default(),
            Vec::new(),
            vec![("😊".to_string(), "smiling face".to_string())],
            Vec::new(),
        );
        assert!(err.is_err());
    }

    #[test]
    fn variation_selectors_are_stripped() {
        let cfg = PrepConfig::bundled();
        let out = normalize_text("love \u{2764}\u{FE0F} it", &cfg);
        assert!(!out.contains('\u{FE0F}'));
    }

    #[test]
    fn tokenize_examples() {
        assert_eq!(tokenize("good app"), s(&["good", "app"]));
        assert_eq!(tokenize("  a   b "), s(&["a", "b"]));
        assert!(tokenize("").is_empty());
    }

    #[test]
    fn stopword_examples() {
        let cfg = PrepConfig::bundled();
        assert_eq!(
            filter_stopwords(&s(&["the", "app", "is", "good"]), &cfg.stopwords),
            s(&["app", "good"])
        );
        assert!(filter_stopwords(&[], &cfg.stopwords).is_empty());
        let only_the: HashSet<String> = ["the".to_string()].into();
        assert_eq!(filter_stopwords(&s(&["covid"]), &only_the), s(&["covid"]));
    }

    #[test]
    fn lemmatize_examples() {
        let cfg = PrepConfig::bundled();
        assert_eq!(lemmatize(&s(&["cases"]), &cfg.lemma_table), s(&["case"]));
        assert_eq!(lemmatize(&s(&["vaccine"]), &cfg.lemma_table), s(&["vaccine"]));
        assert!(lemmatize(&[], &cfg.lemma_table).is_empty());
        assert_eq!(
            lemmatize(&s(&["children", "ran"]), &cfg.lemma_table),
            s(&["child", "run"])
        );
    }

    #[test]
    fn preprocess_chain() {
        let cfg = PrepConfig::bundled();
        let doc = preprocess_text("r1", "The vaccine is GOOD! https://x.co", &cfg);
        assert_eq!(doc.tokens, s(&["vaccine", "good"]));
        assert_eq!(doc.stems, s(&["vaccin", "good"]));
        assert_eq!(doc.lemmas, s(&["vaccine", "good"]));

        let empty = preprocess_text("r2", "@user #tag 42", &cfg);
        assert!(empty.tokens.is_empty() && empty.stems.is_empty() && empty.lemmas.is_empty());
    }

    #[test]
    fn disabled_steps_keep_content() {
        let flags = PrepFlags {
            strip_hashtags: false,
            strip_punctuation: false,
            drop_stopwords: false,
            do_stem: false,
            ..PrepFlags::default()
        };
        let cfg = PrepConfig::new(flags, vec!["the".to_string()], Vec::new(), Vec::new()).unwrap();
        let doc = preprocess_text("x", "The #Mpox outbreak", &cfg);
        assert_eq!(doc.tokens, s(&["the", "#mpox", "outbreak"]));
        assert!(doc.stems.is_empty());
    }
}
