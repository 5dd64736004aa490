//! Sentiment labeling.
//!
//! Two routes produce a polarity and a label:
//!
//! * lexicon route: mean base polarity of matched tokens, then a
//!   domain-biased keyword adjustment (COVID leans negative, mpox leans
//!   positive), then the domain's lexicon threshold scheme;
//! * probability route: an externally computed (neg, neu, pos) triple is
//!   mapped to an affine polarity and classified with the domain's
//!   transformer threshold scheme.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jsonl;
use crate::resources;
use crate::sentiment::{Domain, SentimentLabel};
use crate::textprep::CleanDocument;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProbTriple {
    pub p_neg: f64,
    pub p_neu: f64,
    pub p_pos: f64,
}

impl ProbTriple {
    pub fn is_valid(&self) -> bool {
        let unit = |v: f64| (0.0..=1.0).contains(&v);
        let sum = self.p_neg + self.p_neu + self.p_pos;
        unit(self.p_neg) && unit(self.p_neu) && unit(self.p_pos) && (0.99..=1.01).contains(&sum)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PolarityScore(pub f64);

impl PolarityScore {
    pub fn value(self) -> f64 {
        self.0
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct KeywordLexicon {
    pub base: BTreeMap<String, f64>,
    pub positive_keywords: BTreeSet<String>,
    pub negative_keywords: BTreeSet<String>,
}

impl KeywordLexicon {
    pub fn new(
        base: BTreeMap<String, f64>,
        positive_keywords: BTreeSet<String>,
        negative_keywords: BTreeSet<String>,
    ) -> Result<Self> {
        if let Some((term, v)) = base.iter().find(|(_, v)| !(-1.0..=1.0).contains(*v)) {
            return Err(Error::Validation(format!(
                "base polarity for `{term}` is {v}, outside [-1, 1]"
            )));
        }
        let all_keys = base.keys().chain(&positive_keywords).chain(&negative_keywords);
        if let Some(k) = all_keys.into_iter().find(|k| k.to_lowercase() != **k) {
            return Err(Error::Validation(format!("lexicon key `{k}` is not lowercase")));
        }
        if let Some(k) = positive_keywords.intersection(&negative_keywords).next() {
            return Err(Error::Validation(format!(
                "keyword `{k}` is both positive and negative"
            )));
        }
        Ok(KeywordLexicon {
            base,
            positive_keywords,
            negative_keywords,
        })
    }

    /// Parses a `term<TAB>value` base lexicon and a `term<TAB>positive|negative`
    /// keyword file.
    pub fn from_tables(base: &str, keywords: &str) -> Result<Self> {
        let mut base_map = BTreeMap::new();
        for (term, v) in resources::parse_pairs(base)? {
            let v: f64 = v
                .parse()
                .map_err(|_| Error::Validation(format!("base polarity for `{term}` is not a number: `{v}`")))?;
            base_map.insert(term, v);
        }
        let mut pos = BTreeSet::new();
        let mut neg = BTreeSet::new();
        for (term, kind) in resources::parse_pairs(keywords)? {
            match kind.parse::<SentimentLabel>()? {
                SentimentLabel::Positive => pos.insert(term),
                SentimentLabel::Negative => neg.insert(term),
                SentimentLabel::Neutral => {
                    return Err(Error::Validation(format!(
                        "keyword `{term}` must be positive or negative"
                    )))
                }
            };
        }
        Self::new(base_map, pos, neg)
    }

    pub fn bundled() -> Self {
        Self::from_tables(resources::BASE_LEXICON, resources::KEYWORDS).expect("bundled lexicon is valid")
    }

    pub fn with_overrides(base: Option<&Path>, keywords: Option<&Path>) -> Result<Self> {
        let base = match base {
            Some(p) => resources::read_text(p)?,
            None => resources::BASE_LEXICON.to_string(),
        };
        let keywords = match keywords {
            Some(p) => resources::read_text(p)?,
            None => resources::KEYWORDS.to_string(),
        };
        Self::from_tables(&base, &keywords)
    }
}

/// Threshold scheme. Positive iff polarity > positive threshold, Negative
/// iff polarity < negative threshold, Neutral otherwise (boundaries included).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassifyScheme {
    CovidRoberta,
    MpoxRoberta,
    CovidTextblob,
    MpoxTextblob,
}

impl ClassifyScheme {
    /// `(positive_threshold, negative_threshold)`.
    pub fn thresholds(self) -> (f64, f64) {
        match self {
            ClassifyScheme::CovidRoberta => (0.3, -0.2),
            ClassifyScheme::MpoxRoberta => (0.1, -0.2),
            ClassifyScheme::CovidTextblob => (0.15, -0.1),
            ClassifyScheme::MpoxTextblob => (0.05, -0.2),
        }
    }

    pub fn transformer(domain: Domain) -> Self {
        match domain {
            Domain::Covid => ClassifyScheme::CovidRoberta,
            Domain::Mpox => ClassifyScheme::MpoxRoberta,
        }
    }

    pub fn lexicon(domain: Domain) -> Self {
        match domain {
            Domain::Covid => ClassifyScheme::CovidTextblob,
            Domain::Mpox => ClassifyScheme::MpoxTextblob,
        }
    }
}

/// Occurrences (with multiplicity) of positive and negative keywords.
pub fn count_keywords(tokens: &[String], lexicon: &KeywordLexicon) -> (usize, usize) {
    tokens.iter().fold((0, 0), |(p, n), t| {
        if lexicon.positive_keywords.contains(t) {
            (p + 1, n)
        } else if lexicon.negative_keywords.contains(t) {
            (p, n + 1)
        } else {
            (p, n)
        }
    })
}

/// Mean base polarity over tokens found in the lexicon; 0 when none match.
pub fn base_polarity(tokens: &[String], lexicon: &KeywordLexicon) -> PolarityScore {
    let (sum, n) = tokens
        .iter()
        .filter_map(|t| lexicon.base.get(t))
        .fold((0.0, 0usize), |(s, n), v| (s + v, n + 1));
    PolarityScore(if n == 0 { 0.0 } else { sum / n as f64 })
}

/// The adjustment and transformer formulas are evaluated in tenths, so
/// one-decimal inputs give the correctly rounded decimal result.
fn tenths(x: f64) -> f64 {
    x / 10.0
}

/// COVID bias: negative keywords win. Each negative occurrence costs 0.6
/// with the result held at or below -0.3; otherwise each positive
/// occurrence adds 0.4 plus a 0.2 boost, floored at 0.2.
pub fn adjust_covid(polarity: PolarityScore, pos_count: usize, neg_count: usize) -> PolarityScore {
    let p = polarity.0;
    PolarityScore(if neg_count > 0 {
        tenths(10.0 * p - 6.0 * neg_count as f64).min(-0.3)
    } else if pos_count > 0 {
        tenths(10.0 * p + 4.0 * pos_count as f64 + 2.0).max(0.2)
    } else {
        p
    })
}

/// Mpox bias: positive keywords win. Each positive occurrence adds 0.6
/// (plus 0.3 when no negative keyword co-occurs), capped at 0.95;
/// otherwise each negative occurrence costs 0.2, floored at -0.5.
pub fn adjust_mpox(polarity: PolarityScore, pos_count: usize, neg_count: usize) -> PolarityScore {
    let p = polarity.0;
    PolarityScore(if pos_count > 0 {
        let boost = if neg_count == 0 { 3.0 } else { 0.0 };
        tenths(10.0 * p + 6.0 * pos_count as f64 + boost).min(0.95)
    } else if neg_count > 0 {
        tenths(10.0 * p - 2.0 * neg_count as f64).max(-0.5)
    } else {
        p
    })
}

pub fn adjust(domain: Domain, polarity: PolarityScore, pos_count: usize, neg_count: usize) -> PolarityScore {
    match domain {
        Domain::Covid => adjust_covid(polarity, pos_count, neg_count),
        Domain::Mpox => adjust_mpox(polarity, pos_count, neg_count),
    }
}

/// Affine map of `p_pos - p_neg`: `x3 - 0.5` for COVID, `x4 - 1.2` for mpox.
pub fn transformer_polarity(probs: &ProbTriple, domain: Domain) -> PolarityScore {
    PolarityScore(match domain {
        Domain::Covid => tenths(30.0 * probs.p_pos - 30.0 * probs.p_neg - 5.0),
        Domain::Mpox => tenths(40.0 * probs.p_pos - 40.0 * probs.p_neg - 12.0),
    })
}

pub fn classify(polarity: PolarityScore, scheme: ClassifyScheme) -> SentimentLabel {
    let (pos, neg) = scheme.thresholds();
    if polarity.0 > pos {
        SentimentLabel::Positive
    } else if polarity.0 < neg {
        SentimentLabel::Negative
    } else {
        SentimentLabel::Neutral
    }
}

pub fn label_tokens(tokens: &[String], lexicon: &KeywordLexicon, domain: Domain) -> (PolarityScore, SentimentLabel) {
    let base = base_polarity(tokens, lexicon);
    let (pos, neg) = count_keywords(tokens, lexicon);
    let polarity = adjust(domain, base, pos, neg);
    (polarity, classify(polarity, ClassifyScheme::lexicon(domain)))
}

/// Lexicon route over the document's surface tokens.
pub fn label_document(
    doc: &CleanDocument,
    lexicon: &KeywordLexicon,
    domain: Domain,
) -> (PolarityScore, SentimentLabel) {
    label_tokens(&doc.tokens, lexicon, domain)
}

/// One line of the label output file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledItem {
    pub id: String,
    pub polarity: f64,
    pub label: SentimentLabel,
}

/// One line of the probability input file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbRecord {
    pub id: String,
    #[serde(flatten)]
    pub probs: ProbTriple,
}

pub fn label_probs(records: &[ProbRecord], domain: Domain) -> Result<Vec<LabeledItem>> {
    let scheme = ClassifyScheme::transformer(domain);
    records
        .iter()
        .map(|r| {
            if !r.probs.is_valid() {
                return Err(Error::Validation(format!(
                    "record `{}`: invalid probability triple {:?}",
                    r.id, r.probs
                )));
            }
            let polarity = transformer_polarity(&r.probs, domain);
            Ok(LabeledItem {
                id: r.id.clone(),
                polarity: polarity.0,
                label: classify(polarity, scheme),
            })
        })
        .collect()
}

/// Reads JSON Lines `{id, p_neg, p_neu, p_pos}` and labels each line.
pub fn label_from_probs(path: &Path, domain: Domain) -> Result<Vec<LabeledItem>> {
    label_probs(&jsonl::read::<ProbRecord>(path)?, domain)
}

pub fn label_documents(docs: &[CleanDocument], lexicon: &KeywordLexicon, domain: Domain) -> Vec<LabeledItem> {
    docs.iter()
        .map(|d| {
            let (polarity, label) = label_document(d, lexicon, domain);
            LabeledItem {
                id: d.id.clone(),
                polarity: polarity.0,
                label,
            }
        })
        .collect()
}
