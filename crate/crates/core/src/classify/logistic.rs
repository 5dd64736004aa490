//! Multinomial (softmax) logistic regression trained by full-batch gradient
//! descent on mean cross-entropy with an L2 penalty on the weights.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sentiment::SentimentLabel;
use crate::tfidf::DocTermMatrix;

use super::{argmax, class_index, classes_present};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LrConfig {
    pub learning_rate: f64,
    pub epochs: usize,
    pub l2_penalty: f64,
    /// Parameters start at zero, so the seed only matters to callers that
    /// shuffle; it is carried for reproducibility records.
    pub seed: u64,
}

impl Default for LrConfig {
    fn default() -> Self {
        LrConfig {
            learning_rate: 0.1,
            epochs: 1000,
            l2_penalty: 1e-4,
            seed: 42,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LrModel {
    pub classes: Vec<SentimentLabel>,
    /// `[class][term]`
    pub weights: Vec<Vec<f64>>,
    pub bias: Vec<f64>,
    pub train_config: LrConfig,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LrTraining {
    pub model: LrModel,
    /// Loss before each update, followed by the loss of the final model.
    pub loss_history: Vec<f64>,
}

/// Numerically stable softmax (shifts by the max logit).
pub fn softmax(logits: &[f64]) -> Vec<f64> {
    let max = logits.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let exps: Vec<f64> = logits.iter().map(|z| (z - max).exp()).collect();
    let sum: f64 = exps.iter().sum();
    exps.into_iter().map(|e| e / sum).collect()
}

fn log_sum_exp(logits: &[f64]) -> f64 {
    let max = logits.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    max + logits.iter().map(|z| (z - max).exp()).sum::<f64>().ln()
}

fn logits(weights: &[Vec<f64>], bias: &[f64], row: &[(usize, f64)]) -> Vec<f64> {
    weights
        .iter()
        .zip(bias)
        .map(|(w, b)| b + row.iter().map(|&(t, x)| w[t] * x).sum::<f64>())
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct LossGradient {
    pub loss: f64,
    pub grad_weights: Vec<Vec<f64>>,
    pub grad_bias: Vec<f64>,
}

/// Mean softmax cross-entropy plus `l2 / 2 * ||W||^2`, and its gradient.
/// `targets` are class indices into the parameter rows.
pub fn loss_and_gradient(
    weights: &[Vec<f64>],
    bias: &[f64],
    matrix: &DocTermMatrix,
    targets: &[usize],
    l2: f64,
) -> LossGradient {
    let k = bias.len();
    let n = targets.len() as f64;
    let mut grad_weights = vec![vec![0.0; matrix.n_cols]; k];
    let mut grad_bias = vec![0.0; k];
    let mut ce = 0.0;
    for (row, &y) in matrix.rows.iter().zip(targets) {
        let z = logits(weights, bias, row);
        ce += log_sum_exp(&z) - z[y];
        for (c, p) in softmax(&z).into_iter().enumerate() {
            let err = (p - if c == y { 1.0 } else { 0.0 }) / n;
            grad_bias[c] += err;
            for &(t, x) in row {
                grad_weights[c][t] += err * x;
            }
        }
    }
    let mut penalty = 0.0;
    for (gw, w) in grad_weights.iter_mut().zip(weights) {
        for (g, wi) in gw.iter_mut().zip(w) {
            *g += l2 * wi;
            penalty += wi * wi;
        }
    }
    LossGradient {
        loss: ce / n + 0.5 * l2 * penalty,
        grad_weights,
        grad_bias,
    }
}

pub fn train_lr(matrix: &DocTermMatrix, labels: &[SentimentLabel], config: &LrConfig) -> Result<LrTraining> {
    if matrix.n_rows() != labels.len() {
        return Err(Error::LengthMismatch {
            left: matrix.n_rows(),
            right: labels.len(),
        });
    }
    if config.epochs == 0 || config.learning_rate.is_nan() || config.learning_rate <= 0.0 || config.l2_penalty < 0.0 {
        return Err(Error::Validation(format!("bad training config {config:?}")));
    }
    let classes = classes_present(labels);
    if classes.len() < 2 {
        return Err(Error::SingleClass(classes.len()));
    }
    let targets: Vec<usize> = labels
        .iter()
        .map(|l| class_index(&classes, *l).expect("classes derived from labels"))
        .collect();

    let k = classes.len();
    let mut weights = vec![vec![0.0; matrix.n_cols]; k];
    let mut bias = vec![0.0; k];
    let mut loss_history = Vec::with_capacity(config.epochs + 1);
    for epoch in 1..=config.epochs {
        let lg = loss_and_gradient(&weights, &bias, matrix, &targets, config.l2_penalty);
        if !lg.loss.is_finite() {
            return Err(Error::Divergence { epoch, loss: lg.loss });
        }
        loss_history.push(lg.loss);
        for (w, g) in weights.iter_mut().zip(&lg.grad_weights) {
            for (wi, gi) in w.iter_mut().zip(g) {
                *wi -= config.learning_rate * gi;
            }
        }
        for (b, g) in bias.iter_mut().zip(&lg.grad_bias) {
            *b -= config.learning_rate * g;
        }
    }
    let last = loss_and_gradient(&weights, &bias, matrix, &targets, config.l2_penalty).loss;
    if !last.is_finite() {
        return Err(Error::Divergence {
            epoch: config.epochs,
            loss: last,
        });
    }
    loss_history.push(last);
    Ok(LrTraining {
        model: LrModel {
            classes,
            weights,
            bias,
            train_config: *config,
        },
        loss_history,
    })
}

impl LrModel {
    pub fn probabilities(&self, row: &[(usize, f64)]) -> Vec<f64> {
        softmax(&logits(&self.weights, &self.bias, row))
    }

    pub fn predict(&self, row: &[(usize, f64)]) -> (SentimentLabel, Vec<f64>) {
        let probs = self.probabilities(row);
        (self.classes[argmax(&probs)], probs)
    }
}
