//! Corpus exploration and comparison.

mod stats;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::resources;
use crate::sentiment::SentimentLabel;

pub use stats::{chi_square, chi_square_sf, gamma_q, ln_gamma, pearson, ChiSquare};

/// Top `top_k` terms by total occurrences, ties lexicographic.
pub fn word_frequency<D: AsRef<[String]>>(docs: &[D], top_k: usize) -> Vec<(String, u64)> {
    let mut counts: BTreeMap<&str, u64> = BTreeMap::new();
    for doc in docs {
        for t in doc.as_ref() {
            *counts.entry(t.as_str()).or_default() += 1;
        }
    }
    let mut ranked: Vec<(&str, u64)> = counts.into_iter().collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    ranked
        .into_iter()
        .take(top_k)
        .map(|(t, c)| (t.to_string(), c))
        .collect()
}

/// `count / max_count` per term, optionally over only the documents whose
/// label equals `filter`.
pub fn wordcloud_weights<D: AsRef<[String]>>(
    docs: &[D],
    labels: Option<&[SentimentLabel]>,
    filter: Option<SentimentLabel>,
) -> Result<BTreeMap<String, f64>> {
    if let Some(labels) = labels {
        if labels.len() != docs.len() {
            return Err(Error::LengthMismatch {
                left: docs.len(),
                right: labels.len(),
            });
        }
    }
    let keep = |i: usize| match (filter, labels) {
        (None, _) => Ok(true),
        (Some(f), Some(l)) => Ok(l[i] == f),
        (Some(_), None) => Err(Error::Validation("label filter needs document labels".into())),
    };
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    for (i, doc) in docs.iter().enumerate() {
        if keep(i)? {
            for t in doc.as_ref() {
                *counts.entry(t.clone()).or_default() += 1;
            }
        }
    }
    let max = counts.values().copied().max().unwrap_or(0);
    Ok(counts.into_iter().map(|(t, c)| (t, c as f64 / max as f64)).collect())
}

/// `term,weight` CSV for external word-cloud renderers.
pub fn wordcloud_csv(weights: &BTreeMap<String, f64>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["term", "weight"])?;
    for (term, weight) in weights {
        w.write_record([term.as_str(), &weight.to_string()])?;
    }
    let bytes = w.into_inner().map_err(|e| Error::io("<csv>", e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 input"))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LabelShare {
    pub label: SentimentLabel,
    pub count: u64,
    pub percent: f64,
}

/// Label percentages in canonical (Positive, Negative, Neutral) order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistributionSummary {
    pub total_count: u64,
    pub shares: Vec<LabelShare>,
}

impl DistributionSummary {
    pub fn percent(&self, label: SentimentLabel) -> f64 {
        self.shares.iter().find(|s| s.label == label).map_or(0.0, |s| s.percent)
    }

    pub fn count(&self, label: SentimentLabel) -> u64 {
        self.shares.iter().find(|s| s.label == label).map_or(0, |s| s.count)
    }

    pub fn percent_vector(&self) -> Vec<f64> {
        self.shares.iter().map(|s| s.percent).collect()
    }
}

pub fn sentiment_distribution(labels: &[SentimentLabel]) -> Result<DistributionSummary> {
    if labels.is_empty() {
        return Err(Error::Validation(
            "sentiment distribution of an empty label list".into(),
        ));
    }
    let total = labels.len() as u64;
    let shares = SentimentLabel::ALL
        .into_iter()
        .map(|label| {
            let count = labels.iter().filter(|l| **l == label).count() as u64;
            LabelShare {
                label,
                count,
                percent: 100.0 * count as f64 / total as f64,
            }
        })
        .collect();
    Ok(DistributionSummary {
        total_count: total,
        shares,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CfrResult {
    pub deaths: u64,
    pub cases: u64,
    pub cfr_percent: f64,
    /// Set when the inputs are inconsistent (more deaths than cases).
    pub deaths_exceed_cases: bool,
}

/// Case fatality rate, `100 * deaths / cases`.
pub fn cfr(deaths: u64, cases: u64) -> Result<CfrResult> {
    if cases == 0 {
        return Err(Error::Domain("case fatality rate needs at least one case".into()));
    }
    Ok(CfrResult {
        deaths,
        cases,
        cfr_percent: 100.0 * deaths as f64 / cases as f64,
        deaths_exceed_cases: deaths > cases,
    })
}

pub type CategoryLexicons = BTreeMap<String, BTreeSet<String>>;

/// Parses `term<TAB>category` lines into category -> terms.
pub fn parse_category_lexicons(text: &str) -> Result<CategoryLexicons> {
    let mut out: CategoryLexicons = BTreeMap::new();
    for (term, category) in resources::parse_pairs(text)? {
        out.entry(category).or_default().insert(term.to_lowercase());
    }
    Ok(out)
}

pub fn bundled_demographics() -> CategoryLexicons {
    parse_category_lexicons(resources::DEMOGRAPHICS).expect("bundled demographics table is valid")
}

/// Keyword occurrences per category across all documents; every category
/// appears in the output, zero when unmatched.
pub fn demographic_mentions<D: AsRef<[String]>>(docs: &[D], lexicons: &CategoryLexicons) -> BTreeMap<String, u64> {
    lexicons
        .iter()
        .map(|(category, terms)| {
            let n = docs
                .iter()
                .flat_map(|d| d.as_ref())
                .filter(|t| terms.contains(t.as_str()))
                .count() as u64;
            (category.clone(), n)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub left_name: String,
    pub right_name: String,
    pub left: DistributionSummary,
    pub right: DistributionSummary,
    pub pearson_r: f64,
    pub chi2: ChiSquare,
}

/// Distributions of both corpora, Pearson correlation of their aligned
/// percentage vectors and a chi-square test over the 2x3 corpus-by-label
/// count table.
pub fn compare_corpora(
    left: &[SentimentLabel],
    right: &[SentimentLabel],
    names: (&str, &str),
) -> Result<ComparisonReport> {
    let l = sentiment_distribution(left)?;
    let r = sentiment_distribution(right)?;
    let pearson_r = pearson(&l.percent_vector(), &r.percent_vector())?;
    let table: Vec<Vec<u64>> = [&l, &r]
        .iter()
        .map(|d| d.shares.iter().map(|s| s.count).collect())
        .collect();
    let chi2 = stats::chi_square_allow_empty_columns(&table)?;
    Ok(ComparisonReport {
        left_name: names.0.to_string(),
        right_name: names.1.to_string(),
        left: l,
        right: r,
        pearson_r,
        chi2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use SentimentLabel::{Negative as N, Neutral as U, Positive as P};

    fn docs(v: &[&[&str]]) -> Vec<Vec<String>> {
        v.iter().map(|d| d.iter().map(|t| t.to_string()).collect()).collect()
    }

    #[test]
    fn frequency_examples() {
        assert_eq!(
            word_frequency(&docs(&[&["a", "a", "b"]]), 2),
            vec![("a".to_string(), 2), ("b".to_string(), 1)]
        );
        assert_eq!(
            word_frequency(&docs(&[&["b", "a"]]), 5),
            vec![("a".to_string(), 1), ("b".to_string(), 1)]
        );
        assert!(word_frequency::<Vec<String>>(&[], 3).is_empty());
    }

    #[test]
    fn wordcloud_examples() {
        let w = wordcloud_weights(&docs(&[&["x", "x", "y"]]), None, None).unwrap();
        assert_eq!(w, BTreeMap::from([("x".to_string(), 1.0), ("y".to_string(), 0.5)]));

        let d = docs(&[&["good", "good"], &["bad"], &["good", "fine"]]);
        let w = wordcloud_weights(&d, Some(&[P, N, P]), Some(P)).unwrap();
        assert_eq!(
            w,
            BTreeMap::from([("fine".to_string(), 1.0 / 3.0), ("good".to_string(), 1.0)])
        );

        assert!(wordcloud_weights(&d, Some(&[P, N, P]), Some(U)).unwrap().is_empty());
        assert!(wordcloud_weights(&d, None, Some(P)).is_err());
    }

    #[test]
    fn wordcloud_csv_format() {
        let w = BTreeMap::from([("a".to_string(), 1.0), ("b,c".to_string(), 0.5)]);
        assert_eq!(wordcloud_csv(&w).unwrap(), "term,weight\na,1\n\"b,c\",0.5\n");
    }

    #[test]
    fn distribution_examples() {
        let d = sentiment_distribution(&[P, P, N, U]).unwrap();
        assert_eq!((d.percent(P), d.percent(N), d.percent(U)), (50.0, 25.0, 25.0));
        let d = sentiment_distribution(&[N, N]).unwrap();
        assert_eq!(d.percent_vector(), vec![0.0, 100.0, 0.0]);
        assert!(sentiment_distribution(&[]).is_err());
    }

    #[test]
    fn cfr_examples() {
        assert_eq!(cfr(5, 100).unwrap().cfr_percent, 5.0);
        assert_eq!(cfr(0, 100).unwrap().cfr_percent, 0.0);
        assert!((cfr(1, 3).unwrap().cfr_percent - 33.3333).abs() < 1e-4);
        assert!(matches!(cfr(1, 0), Err(Error::Domain(_))));
        let over = cfr(5, 3).unwrap();
        assert!(over.deaths_exceed_cases);
        assert!(over.cfr_percent > 100.0);
    }

    #[test]
    fn mention_examples() {
        let lex: CategoryLexicons = BTreeMap::from([
            (
                "male".to_string(),
                ["men", "man"].iter().map(|s| s.to_string()).collect(),
            ),
            (
                "female".to_string(),
                ["women", "woman"].iter().map(|s| s.to_string()).collect(),
            ),
        ]);
        let m = demographic_mentions(&docs(&[&["men", "vaccine"]]), &lex);
        assert_eq!(m["male"], 1);
        assert_eq!(m["female"], 0);
        assert!(demographic_mentions::<Vec<String>>(&[], &lex).values().all(|&v| v == 0));
        assert_eq!(demographic_mentions(&docs(&[&["man", "man"]]), &lex)["male"], 2);
    }

    #[test]
    fn bundled_demographics_has_gender_categories() {
        let lex = bundled_demographics();
        assert!(lex["male"].contains("men"));
        assert!(lex["female"].contains("women"));
    }

    #[test]
    fn compare_identical_and_disjoint() {
        let labels = [P, P, N, U, U, U];
        let r = compare_corpora(&labels, &labels, ("a", "b")).unwrap();
        assert!((r.pearson_r - 1.0).abs() < 1e-12);
        assert!(r.chi2.statistic.abs() < 1e-12);

        let r = compare_corpora(&[P; 10], &[N; 10], ("left", "right")).unwrap();
        assert_eq!(r.chi2.df, 2);
        assert!((r.chi2.statistic - 20.0).abs() < 1e-12);
    }
}
