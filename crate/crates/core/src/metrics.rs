//! Confusion-matrix evaluation with per-class and macro-averaged
//! precision, recall and F1. Any 0/0 ratio is reported as 0.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sentiment::SentimentLabel;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassMetrics {
    pub label: SentimentLabel,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub support: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MacroMetrics {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub classes: Vec<SentimentLabel>,
    /// rows = gold, columns = predicted
    pub confusion: Vec<Vec<u64>>,
    pub accuracy: f64,
    pub per_class: Vec<ClassMetrics>,
    #[serde(rename = "macro")]
    pub macro_avg: MacroMetrics,
}

fn ratio(num: u64, den: u64) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

fn f1(p: f64, r: f64) -> f64 {
    if p + r == 0.0 {
        0.0
    } else {
        2.0 * p * r / (p + r)
    }
}

fn check_lengths(gold: &[SentimentLabel], pred: &[SentimentLabel]) -> Result<()> {
    if gold.len() != pred.len() {
        return Err(Error::LengthMismatch {
            left: gold.len(),
            right: pred.len(),
        });
    }
    if gold.is_empty() {
        return Err(Error::Validation("nothing to evaluate".into()));
    }
    Ok(())
}

pub fn confusion_matrix(
    gold: &[SentimentLabel],
    pred: &[SentimentLabel],
    classes: &[SentimentLabel],
) -> Result<Vec<Vec<u64>>> {
    check_lengths(gold, pred)?;
    let idx = |l: &SentimentLabel| {
        classes
            .iter()
            .position(|c| c == l)
            .ok_or_else(|| Error::Validation(format!("label {l} is not in the class list")))
    };
    let mut m = vec![vec![0u64; classes.len()]; classes.len()];
    for (g, p) in gold.iter().zip(pred) {
        m[idx(g)?][idx(p)?] += 1;
    }
    Ok(m)
}

/// Derives every metric from a confusion matrix.
pub fn report_from_confusion(classes: &[SentimentLabel], confusion: Vec<Vec<u64>>) -> EvalReport {
    let k = classes.len();
    let total: u64 = confusion.iter().flatten().sum();
    let trace: u64 = (0..k).map(|i| confusion[i][i]).sum();
    let mut per_class = Vec::with_capacity(k);
    let (mut sp, mut sr, mut sf, mut present) = (0.0, 0.0, 0.0, 0usize);
    for (i, &label) in classes.iter().enumerate() {
        let tp = confusion[i][i];
        let gold_i: u64 = confusion[i].iter().sum();
        let pred_i: u64 = (0..k).map(|r| confusion[r][i]).sum();
        let precision = ratio(tp, pred_i);
        let recall = ratio(tp, gold_i);
        let f = f1(precision, recall);
        if gold_i + pred_i > 0 {
            sp += precision;
            sr += recall;
            sf += f;
            present += 1;
        }
        per_class.push(ClassMetrics {
            label,
            precision,
            recall,
            f1: f,
            support: gold_i,
        });
    }
    let mean = |s: f64| if present == 0 { 0.0 } else { s / present as f64 };
    EvalReport {
        classes: classes.to_vec(),
        accuracy: ratio(trace, total),
        per_class,
        macro_avg: MacroMetrics {
            precision: mean(sp),
            recall: mean(sr),
            f1: mean(sf),
        },
        confusion,
    }
}

/// Macro averages run over the classes that occur in `gold` or `pred`.
pub fn evaluate(gold: &[SentimentLabel], pred: &[SentimentLabel], classes: &[SentimentLabel]) -> Result<EvalReport> {
    let confusion = confusion_matrix(gold, pred, classes)?;
    Ok(report_from_confusion(classes, confusion))
}

impl EvalReport {
    /// Recomputes every field from the confusion matrix and compares.
    pub fn is_self_consistent(&self, tol: f64) -> bool {
        let fresh = report_from_confusion(&self.classes, self.confusion.clone());
        let close = |a: f64, b: f64| (a - b).abs() <= tol;
        close(fresh.accuracy, self.accuracy)
            && close(fresh.macro_avg.precision, self.macro_avg.precision)
            && close(fresh.macro_avg.recall, self.macro_avg.recall)
            && close(fresh.macro_avg.f1, self.macro_avg.f1)
            && fresh.per_class.len() == self.per_class.len()
            && fresh.per_class.iter().zip(&self.per_class).all(|(a, b)| {
                a.label == b.label
                    && a.support == b.support
                    && close(a.precision, b.precision)
                    && close(a.recall, b.recall)
                    && close(a.f1, b.f1)
            })
    }
}
