//! Multinomial Naive Bayes over (possibly fractional) feature masses with
//! additive smoothing. Negative weights, which the unfloored IDF can
//! produce, are treated as zero mass.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sentiment::SentimentLabel;
use crate::tfidf::DocTermMatrix;

use super::{argmax, class_index, classes_present};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NbModel {
    pub classes: Vec<SentimentLabel>,
    pub log_prior: Vec<f64>,
    /// `[class][term]`
    pub log_likelihood: Vec<Vec<f64>>,
    pub alpha: f64,
    pub vocab_size: usize,
}

pub fn train_nb(matrix: &DocTermMatrix, labels: &[SentimentLabel], alpha: f64) -> Result<NbModel> {
    train_nb_with_classes(matrix, labels, &classes_present(labels), alpha)
}

/// As [`train_nb`], with an explicit class list; every class must occur in
/// `labels`.
pub fn train_nb_with_classes(
    matrix: &DocTermMatrix,
    labels: &[SentimentLabel],
    classes: &[SentimentLabel],
    alpha: f64,
) -> Result<NbModel> {
    if matrix.n_rows() != labels.len() {
        return Err(Error::LengthMismatch {
            left: matrix.n_rows(),
            right: labels.len(),
        });
    }
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::Validation(format!("smoothing alpha must be > 0, got {alpha}")));
    }
    if labels.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    if matrix.n_cols == 0 {
        return Err(Error::Validation("vocabulary is empty".into()));
    }
    let v = matrix.n_cols;
    let k = classes.len();
    let mut doc_counts = vec![0usize; k];
    let mut mass = vec![vec![0.0f64; v]; k];
    let mut clamped = 0usize;
    for (row, label) in matrix.rows.iter().zip(labels) {
        let c = class_index(classes, *label)
            .ok_or_else(|| Error::Validation(format!("label {label} is not among the model classes")))?;
        doc_counts[c] += 1;
        for &(t, w) in row {
            if w < 0.0 {
                clamped += 1;
            } else {
                mass[c][t] += w;
            }
        }
    }
    if clamped > 0 {
        log::warn!("naive bayes: clamped {clamped} negative feature weights to zero");
    }
    if let Some(c) = doc_counts.iter().position(|&n| n == 0) {
        return Err(Error::AbsentClass(classes[c].to_string()));
    }
    let n = labels.len() as f64;
    let log_prior = doc_counts.iter().map(|&c| (c as f64 / n).ln()).collect();
    let log_likelihood = mass
        .iter()
        .map(|m| {
            let total: f64 = m.iter().sum();
            let denom = total + alpha * v as f64;
            m.iter().map(|x| ((x + alpha) / denom).ln()).collect()
        })
        .collect();
    Ok(NbModel {
        classes: classes.to_vec(),
        log_prior,
        log_likelihood,
        alpha,
        vocab_size: v,
    })
}

impl NbModel {
    /// Joint log-score per class: `log P(c) + sum_i w_i log P(t_i | c)`.
    pub fn log_scores(&self, row: &[(usize, f64)]) -> Vec<f64> {
        self.log_prior
            .iter()
            .zip(&self.log_likelihood)
            .map(|(prior, ll)| prior + row.iter().map(|&(t, w)| w.max(0.0) * ll[t]).sum::<f64>())
            .collect()
    }

    pub fn predict(&self, row: &[(usize, f64)]) -> (SentimentLabel, Vec<f64>) {
        let scores = self.log_scores(row);
        (self.classes[argmax(&scores)], scores)
    }
}
