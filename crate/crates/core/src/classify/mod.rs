//! Train/test splitting and the two classical classifiers.

mod logistic;
mod naive_bayes;
mod split;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::resources;
use crate::sentiment::SentimentLabel;
use crate::tfidf::DocTermMatrix;

pub use logistic::{loss_and_gradient, softmax, train_lr, LossGradient, LrConfig, LrModel, LrTraining};
pub use naive_bayes::{train_nb, train_nb_with_classes, NbModel};
pub use split::{split_indices, train_test_split, Split, SplitIndices, SplitSpec};

/// Distinct labels in canonical class order.
pub fn classes_present(labels: &[SentimentLabel]) -> Vec<SentimentLabel> {
    SentimentLabel::ALL.into_iter().filter(|c| labels.contains(c)).collect()
}

pub(crate) fn class_index(classes: &[SentimentLabel], label: SentimentLabel) -> Option<usize> {
    classes.iter().position(|c| *c == label)
}

/// Index of the first maximum, so ties resolve to the earlier class.
pub(crate) fn argmax(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate().skip(1) {
        if *v > values[best] {
            best = i;
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Classifier {
    Nb(NbModel),
    Lr(LrModel),
}

impl Classifier {
    pub fn classes(&self) -> &[SentimentLabel] {
        match self {
            Classifier::Nb(m) => &m.classes,
            Classifier::Lr(m) => &m.classes,
        }
    }

    pub fn predict(&self, row: &[(usize, f64)]) -> SentimentLabel {
        match self {
            Classifier::Nb(m) => m.predict(row).0,
            Classifier::Lr(m) => m.predict(row).0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensePoint {
    pub x: Vec<f64>,
    pub label: SentimentLabel,
}

/// Small labeled dataset with dense features, stored as JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DenseFixture {
    pub points: Vec<DensePoint>,
}

impl DenseFixture {
    pub fn parse(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }

    pub fn separable() -> Self {
        Self::parse(resources::SEPARABLE_FIXTURE).expect("bundled fixture is valid")
    }

    pub fn matrix(&self) -> Result<DocTermMatrix> {
        let rows: Vec<Vec<f64>> = self.points.iter().map(|p| p.x.clone()).collect();
        DocTermMatrix::from_dense(&rows)
    }

    pub fn labels(&self) -> Vec<SentimentLabel> {
        self.points.iter().map(|p| p.label).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use SentimentLabel::*;

    #[test]
    fn argmax_prefers_first() {
        assert_eq!(argmax(&[1.0, 3.0, 3.0]), 1);
        assert_eq!(argmax(&[2.0, 2.0]), 0);
    }

    #[test]
    fn classes_in_canonical_order() {
        assert_eq!(classes_present(&[Neutral, Negative, Neutral]), vec![Negative, Neutral]);
    }
}
