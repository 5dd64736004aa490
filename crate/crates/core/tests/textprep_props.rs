use std::collections::HashSet;
use std::sync::OnceLock;

use episent::textprep::{normalize_text, preprocess_text, stem_word, PrepConfig};
use proptest::prelude::*;

const PORTER_VECTORS: &str = include_str!("data/porter_vectors.tsv");

#[test]
fn stems_match_reference_vectors() {
    let mut checked = 0;
    for line in PORTER_VECTORS.lines() {
        let (word, expected) = line.split_once('\t').unwrap();
        assert_eq!(stem_word(word), expected, "stem({word})");
        checked += 1;
    }
    assert!(checked > 1000);
}

#[test]
fn stem_examples() {
    for (w, s) in [
        ("pandemic", "pandem"),
        ("people", "peopl"),
        ("vaccine", "vaccin"),
        ("run", "run"),
    ] {
        assert_eq!(stem_word(w), s);
    }
}

#[test]
fn stopword_example() {
    let doc = preprocess_text("x", "the app is good", bundled());
    assert_eq!(doc.tokens, ["app", "good"]);
}

fn bundled() -> &'static PrepConfig {
    static CFG: OnceLock<PrepConfig> = OnceLock::new();
    CFG.get_or_init(PrepConfig::bundled)
}

fn fragment() -> impl Strategy<Value = String> {
    prop_oneof![
        "[a-zA-Z]{1,8}",
        "[ \t\n]{1,2}",
        "[0-9]{1,3}",
        "[!-/:-@\\[-`{-~]{1,3}",
        Just("https://t.co/".to_string()),
        Just("www.".to_string()),
        Just("@".to_string()),
        Just("#".to_string()),
        Just("😷".to_string()),
        Just("😊".to_string()),
        Just("❤\u{FE0F}".to_string()),
        Just("\u{200D}".to_string()),
        Just("crying_face".to_string()),
        Just("The".to_string()),
        Just("don't".to_string()),
        "\\PC{1,3}",
    ]
}

fn text() -> impl Strategy<Value = String> {
    prop::collection::vec(fragment(), 0..16).prop_map(|v| v.concat())
}

fn forbidden(token: &str, stopwords: &HashSet<String>, emoji_names: &HashSet<String>) -> Option<&'static str> {
    if token.contains("http") && token.contains("://") || token.starts_with("www.") {
        return Some("url");
    }
    if token.contains('@') {
        return Some("mention");
    }
    if token.contains('#') {
        return Some("hashtag");
    }
    if token.chars().any(char::is_numeric) {
        return Some("digit");
    }
    if stopwords.contains(token) {
        return Some("stopword");
    }
    if token.chars().any(char::is_whitespace) || token.is_empty() {
        return Some("blank");
    }
    if !emoji_names.contains(token) && token.chars().any(|c| c.is_ascii_punctuation()) {
        return Some("punctuation");
    }
    None
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn preprocessing_is_idempotent(s in text()) {
        let cfg = bundled();
        let once = preprocess_text("x", &s, cfg);
        let twice = preprocess_text("x", &once.tokens.join(" "), cfg);
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn no_forbidden_pattern_survives(s in text()) {
        let cfg = bundled();
        let names: HashSet<String> = cfg.emoji_map.values().cloned().collect();
        for t in preprocess_text("x", &s, cfg).tokens {
            prop_assert!(forbidden(&t, &cfg.stopwords, &names).is_none(), "{:?} in {:?}", t, s);
        }
    }

    #[test]
    fn surviving_words_keep_their_order(words in prop::collection::vec("[a-z]{1,7}", 0..12)) {
        let cfg = bundled();
        let tokens = preprocess_text("x", &words.join(" "), cfg).tokens;
        let mut rest = words.iter();
        for t in &tokens {
            prop_assert!(rest.any(|w| w == t), "{:?} out of order in {:?}", t, words);
        }
    }

    #[test]
    fn normalization_output_is_already_normal(s in text()) {
        let cfg = bundled();
        let once = normalize_text(&s, cfg);
        prop_assert_eq!(normalize_text(&once, cfg), once);
    }

    #[test]
    fn stemming_is_total_and_deterministic(w in "[a-z]{0,20}") {
        let a = stem_word(&w);
        prop_assert_eq!(&a, &stem_word(&w));
        prop_assert!(a.len() <= w.len().max(1) + 1);
        prop_assert!(a.bytes().all(|b| b.is_ascii_lowercase()));
    }
}
