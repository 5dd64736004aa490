//! Capped vocabulary and sparse TF-IDF weighting.
//!
//! `tf(t, d) = f(t, d) / N_d` where `N_d` counts every token of `d`,
//! in-vocabulary or not; `idf(t) = ln(N / (1 + n_t))`. The IDF is not
//! floored, so a term present in every document gets a negative weight.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Vocabulary {
    terms: Vec<String>,
    index: HashMap<String, usize>,
    df: Vec<usize>,
    n_docs: usize,
    max_features: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermEntry {
    pub index: usize,
    pub df: usize,
}

/// On-disk form of a vocabulary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VocabularyFile {
    pub terms: BTreeMap<String, TermEntry>,
    pub n_docs: usize,
    pub max_features: usize,
}

pub fn idf_value(n_docs: usize, df: usize) -> f64 {
    (n_docs as f64 / (1.0 + df as f64)).ln()
}

impl Vocabulary {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_docs(&self) -> usize {
        self.n_docs
    }

    pub fn max_features(&self) -> usize {
        self.max_features
    }

    pub fn terms(&self) -> &[String] {
        &self.terms
    }

    pub fn index_of(&self, term: &str) -> Option<usize> {
        self.index.get(term).copied()
    }

    pub fn df(&self, term: &str) -> Option<usize> {
        self.index_of(term).map(|i| self.df[i])
    }

    pub fn idf_at(&self, index: usize) -> f64 {
        idf_value(self.n_docs, self.df[index])
    }

    pub fn idf(&self, term: &str) -> Result<f64> {
        self.index_of(term)
            .map(|i| self.idf_at(i))
            .ok_or_else(|| Error::UnknownTerm(term.to_string()))
    }

    pub fn to_file(&self) -> VocabularyFile {
        VocabularyFile {
            terms: self
                .terms
                .iter()
                .enumerate()
                .map(|(i, t)| {
                    (
                        t.clone(),
                        TermEntry {
                            index: i,
                            df: self.df[i],
                        },
                    )
                })
                .collect(),
            n_docs: self.n_docs,
            max_features: self.max_features,
        }
    }

    pub fn from_file(file: VocabularyFile) -> Result<Self> {
        let n = file.terms.len();
        if n > file.max_features {
            return Err(Error::Validation(format!(
                "vocabulary has {n} terms but max_features is {}",
                file.max_features
            )));
        }
        let mut terms = vec![None; n];
        let mut df = vec![0; n];
        for (term, entry) in file.terms {
            if entry.index >= n || terms[entry.index].is_some() {
                return Err(Error::Validation(format!(
                    "term `{term}` has a bad index {}",
                    entry.index
                )));
            }
            if entry.df == 0 || entry.df > file.n_docs {
                return Err(Error::Validation(format!(
                    "term `{term}` has df {} with {} documents",
                    entry.df, file.n_docs
                )));
            }
            df[entry.index] = entry.df;
            terms[entry.index] = Some(term);
        }
        let terms: Vec<String> = terms.into_iter().map(|t| t.expect("indices are a bijection")).collect();
        Ok(Self::assemble(terms, df, file.n_docs, file.max_features))
    }

    fn assemble(terms: Vec<String>, df: Vec<usize>, n_docs: usize, max_features: usize) -> Self {
        let index = terms.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        Vocabulary {
            terms,
            index,
            df,
            n_docs,
            max_features,
        }
    }

    /// Hex SHA-256 of the canonical JSON export.
    pub fn digest(&self) -> String {
        let json = serde_json::to_vec(&self.to_file()).expect("vocabulary serializes");
        Sha256::digest(&json).iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let json = serde_json::to_string_pretty(&self.to_file())?;
        std::fs::write(path, json + "\n").map_err(|e| Error::io(path, e))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_file(serde_json::from_str(&text)?)
    }
}

/// Keeps the `max_features` terms with the largest corpus TF-IDF mass
/// (sum over documents of tf * idf), ties broken lexicographically.
/// Indices of the kept terms follow lexicographic order.
pub fn build_vocabulary<D: AsRef<[String]>>(docs: &[D], max_features: usize) -> Result<Vocabulary> {
    if docs.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    if max_features == 0 {
        return Err(Error::Validation("max_features must be at least 1".into()));
    }
    let n_docs = docs.len();
    // term -> (df, sum of tf)
    let mut stats: BTreeMap<&str, (usize, f64)> = BTreeMap::new();
    for doc in docs {
        let doc = doc.as_ref();
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for t in doc {
            *counts.entry(t.as_str()).or_default() += 1;
        }
        let n_d = doc.len() as f64;
        for (t, c) in counts {
            let e = stats.entry(t).or_insert((0, 0.0));
            e.0 += 1;
            e.1 += c as f64 / n_d;
        }
    }
    let mut ranked: Vec<(&str, usize, f64)> = stats
        .into_iter()
        .map(|(t, (df, tf_sum))| (t, df, tf_sum * idf_value(n_docs, df)))
        .collect();
    ranked.sort_by(|a, b| b.2.total_cmp(&a.2).then_with(|| a.0.cmp(b.0)));
    ranked.truncate(max_features);
    ranked.sort_by(|a, b| a.0.cmp(b.0));

    let terms = ranked.iter().map(|(t, _, _)| t.to_string()).collect();
    let df = ranked.iter().map(|(_, df, _)| *df).collect();
    Ok(Vocabulary::assemble(terms, df, n_docs, max_features))
}

/// Sparse document-term matrix: per row, `(column, weight)` with strictly
/// increasing columns and no stored zeros.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocTermMatrix {
    pub n_cols: usize,
    pub rows: Vec<Vec<(usize, f64)>>,
}

impl DocTermMatrix {
    /// Builds from arbitrary rows, sorting columns, merging duplicates and
    /// dropping zeros.
    pub fn from_rows(n_cols: usize, rows: Vec<Vec<(usize, f64)>>) -> Result<Self> {
        let rows = rows
            .into_iter()
            .map(|row| {
                let mut merged: BTreeMap<usize, f64> = BTreeMap::new();
                for (c, w) in row {
                    if c >= n_cols {
                        return Err(Error::Validation(format!("column {c} out of range ({n_cols} columns)")));
                    }
                    if !w.is_finite() {
                        return Err(Error::Validation(format!("non-finite weight at column {c}")));
                    }
                    *merged.entry(c).or_default() += w;
                }
                Ok(merged.into_iter().filter(|(_, w)| *w != 0.0).collect())
            })
            .collect::<Result<_>>()?;
        Ok(DocTermMatrix { n_cols, rows })
    }

    pub fn from_dense(rows: &[Vec<f64>]) -> Result<Self> {
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::Validation("dense rows differ in length".into()));
        }
        let sparse = rows.iter().map(|r| r.iter().copied().enumerate().collect()).collect();
        Self::from_rows(n_cols, sparse)
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        let r = &self.rows[row];
        r.binary_search_by_key(&col, |(c, _)| *c).map(|i| r[i].1).unwrap_or(0.0)
    }

    pub fn select(&self, rows: &[usize]) -> DocTermMatrix {
        DocTermMatrix {
            n_cols: self.n_cols,
            rows: rows.iter().map(|&i| self.rows[i].clone()).collect(),
        }
    }
}

fn in_vocab_counts(doc: &[String], vocab: &Vocabulary) -> BTreeMap<usize, usize> {
    let mut counts = BTreeMap::new();
    for t in doc {
        if let Some(i) = vocab.index_of(t) {
            *counts.entry(i).or_default() += 1;
        }
    }
    counts
}

/// TF-IDF weights of `docs` under `vocab`; out-of-vocabulary tokens still
/// count toward each document's length.
pub fn transform<D: AsRef<[String]>>(docs: &[D], vocab: &Vocabulary) -> DocTermMatrix {
    let rows = docs
        .iter()
        .map(|doc| {
            let doc = doc.as_ref();
            let n_d = doc.len() as f64;
            in_vocab_counts(doc, vocab)
                .into_iter()
                .map(|(i, c)| (i, c as f64 / n_d * vocab.idf_at(i)))
                .filter(|(_, w)| *w != 0.0)
                .collect()
        })
        .collect();
    DocTermMatrix {
        n_cols: vocab.len(),
        rows,
    }
}

/// Raw in-vocabulary term counts.
pub fn count_matrix<D: AsRef<[String]>>(docs: &[D], vocab: &Vocabulary) -> DocTermMatrix {
    let rows = docs
        .iter()
        .map(|doc| {
            in_vocab_counts(doc.as_ref(), vocab)
                .into_iter()
                .map(|(i, c)| (i, c as f64))
                .collect()
        })
        .collect();
    DocTermMatrix {
        n_cols: vocab.len(),
        rows,
    }
}
